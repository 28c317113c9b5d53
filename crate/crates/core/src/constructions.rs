//! Explicit embeddings into `Q_n` that attain the known optima.

use serde::{Deserialize, Serialize};

use crate::bounds::log2_exact;
use crate::cube::{full_mask, gray};
use crate::error::{check_range, Error, Result};
use crate::graph::{self, Graph};
use crate::metrics::Embedding;

/// Disjoint pairs of non-adjacent vertices, i.e. a matching in the complement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AntiMatching {
    pairs: Vec<(u32, u32)>,
}

impl AntiMatching {
    pub fn new(pairs: Vec<(u32, u32)>) -> Self {
        Self { pairs }
    }

    pub(crate) fn new_unchecked(pairs: Vec<(u32, u32)>) -> Self {
        Self { pairs }
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn is_perfect_for(&self, g: &Graph) -> bool {
        2 * self.pairs.len() == g.order()
    }

    /// Checks that the pairs are disjoint, in range, and non-edges of `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut seen = vec![false; g.order()];
        for &(x, y) in &self.pairs {
            for v in [x, y] {
                let slot = seen.get_mut(v as usize).ok_or_else(|| {
                    Error::InvalidAntiMatching(format!("vertex {v} is not in the graph"))
                })?;
                if *slot {
                    return Err(Error::InvalidAntiMatching(format!(
                        "vertex {v} appears in two pairs"
                    )));
                }
                *slot = true;
            }
            if g.has_edge(x as usize, y as usize) {
                return Err(Error::InvalidAntiMatching(format!(
                    "{{{x}, {y}}} is an edge of the graph"
                )));
            }
        }
        Ok(())
    }
}

/// Maps the `k`-th pair to the antipodal pair `{k, !k}` of `Q_n`, smaller
/// vertex to `k`. Every guest edge then joins two non-antipodal images, so the
/// dilation is at most `n − 1`.
pub fn antimatching_embedding(g: &Graph, am: &AntiMatching) -> Result<Embedding> {
    let n = log2_exact(g.order())
        .filter(|&n| n >= 1)
        .ok_or(Error::NotPowerOfTwo(g.order()))?;
    am.validate(g)?;
    if !am.is_perfect_for(g) {
        return Err(Error::InvalidAntiMatching(format!(
            "{} pairs do not cover {} vertices",
            am.len(),
            g.order()
        )));
    }
    let mask = full_mask(n);
    let mut map = vec![0u32; g.order()];
    for (k, &(x, y)) in am.pairs.iter().enumerate() {
        let k = k as u32;
        map[x.min(y) as usize] = k;
        map[x.max(y) as usize] = k ^ mask;
    }
    Embedding::new(g.clone(), n, map)
}

fn check_multipartite(n: u32, p: u32) -> Result<()> {
    check_range("hypercube dimension", n as u64, 2, 12)?;
    check_range("part exponent p", p as u64, 1, n as u64 - 1)
}

/// The label sets `V_1, …, V_{2^p}` of the wirelength-optimal labeling of
/// `K_{2^{n−p},…,2^{n−p}}`:
///
/// `V_i = { j·2^{p+1} + i − 1 : 0 ≤ j < 2^{n−p−1} } ∪ { j·2^{p+1} − i : 1 ≤ j ≤ 2^{n−p−1} }`.
///
/// Each set is returned sorted.
pub fn multipartite_labels(n: u32, p: u32) -> Result<Vec<Vec<u32>>> {
    check_multipartite(n, p)?;
    let step = 1u32 << (p + 1);
    let half = 1u32 << (n - p - 1);
    Ok((1..=1u32 << p)
        .map(|i| {
            let mut part: Vec<u32> = (0..half)
                .map(|j| j * step + i - 1)
                .chain((1..=half).map(|j| j * step - i))
                .collect();
            part.sort_unstable();
            part
        })
        .collect())
}

/// Embedding of `K_{2^{n−p},…,2^{n−p}}` (`2^p` parts, consecutive vertex
/// ranges) into `Q_n`: the `r`-th vertex of part `i` gets the `r`-th smallest
/// label of `V_i`, and label `x` is hypercube vertex `x`.
pub fn multipartite_embedding(n: u32, p: u32) -> Result<Embedding> {
    let labels = multipartite_labels(n, p)?;
    let guest = graph::complete_multipartite(&vec![1usize << (n - p); 1 << p])?;
    let map = labels.into_iter().flatten().collect();
    Embedding::new(guest, n, map)
}

/// Identity embedding of `FQ_n` into `Q_n`.
pub fn folded_identity_embedding(n: u32) -> Result<Embedding> {
    check_range("hypercube dimension", n as u64, 2, 12)?;
    let guest = graph::folded_hypercube(n)?;
    Embedding::new(guest, n, (0..1u32 << n).collect())
}

/// `FQ_n` into `Q_n` through the linear map `x ↦ x ^ (x >> 1)`.
///
/// Flipping coordinate `k` of `x` flips coordinates `k` and `k − 1` of the
/// image, and flipping all coordinates flips only the top one, so every edge
/// has dilation at most 2.
pub fn folded_gray_embedding(n: u32) -> Result<Embedding> {
    check_range("hypercube dimension", n as u64, 2, 12)?;
    let guest = graph::folded_hypercube(n)?;
    Embedding::new(guest, n, (0..1u32 << n).map(gray).collect())
}

/// `W_{2^n}` into `Q_n`: the hub goes to Gray code 0, cycle vertex `k`
/// (guest vertex `k + 1`) goes to Gray code `k + 1`.
pub fn wheel_gray_embedding(n: u32) -> Result<Embedding> {
    check_range("hypercube dimension", n as u64, 2, 12)?;
    let guest = graph::wheel(1 << n)?;
    Embedding::new(guest, n, (0..1u32 << n).map(gray).collect())
}

/// `K_{2^{n/2}} □ K_{2^{n/2}}` into `Q_n`: `(a, b)` goes to the bit string
/// of `a` followed by the bit string of `b`.
pub fn clique_product_embedding(n: u32) -> Result<Embedding> {
    check_range("hypercube dimension", n as u64, 2, 12)?;
    if n % 2 == 1 {
        return Err(Error::InvalidParameters(format!(
            "clique product embedding needs an even dimension, got {n}"
        )));
    }
    let h = n / 2;
    let k = graph::complete_graph(1 << h)?;
    let guest = graph::cartesian_product(&k, &k)?;
    let side = 1u32 << h;
    let map = (0..side)
        .flat_map(|a| (0..side).map(move |b| (a << h) | b))
        .collect();
    Embedding::new(guest, n, map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::binomial;
    use crate::graph::{complete_multipartite, cycle, empty_graph};
    use crate::metrics::{dilation, evaluate, wirelength};

    fn hamming_sum(set: &[u32]) -> u64 {
        let mut s = 0;
        for (i, &x) in set.iter().enumerate() {
            for &y in &set[i + 1..] {
                s += (x ^ y).count_ones() as u64;
            }
        }
        s
    }

    #[test]
    fn antimatching_on_c4() {
        let g = cycle(4).unwrap();
        let am = AntiMatching::new(vec![(0, 2), (1, 3)]);
        let e = antimatching_embedding(&g, &am).unwrap();
        assert_eq!(e.map(), &[0, 1, 3, 2]);
        assert_eq!(dilation(&e).1, 1);
    }

    #[test]
    fn antimatching_on_k4444_within_parts() {
        let g = complete_multipartite(&[4, 4, 4, 4]).unwrap();
        let pairs = (0..8).map(|k| (2 * k, 2 * k + 1)).collect();
        let e = antimatching_embedding(&g, &AntiMatching::new(pairs)).unwrap();
        assert_eq!(dilation(&e).1, 3);
    }

    #[test]
    fn antimatching_on_empty_graph() {
        let g = empty_graph(8).unwrap();
        let am = AntiMatching::new(vec![(5, 0), (1, 7), (2, 6), (3, 4)]);
        let e = antimatching_embedding(&g, &am).unwrap();
        assert_eq!(dilation(&e).1, 0);
        assert_eq!(e.map()[0], 0);
        assert_eq!(e.map()[5], 7);
    }

    #[test]
    fn antimatching_rejections() {
        let g = cycle(4).unwrap();
        let edge_pair = AntiMatching::new(vec![(0, 1), (2, 3)]);
        assert!(matches!(
            antimatching_embedding(&g, &edge_pair),
            Err(Error::InvalidAntiMatching(_))
        ));
        let partial = AntiMatching::new(vec![(0, 2)]);
        assert!(antimatching_embedding(&g, &partial).is_err());
        let overlapping = AntiMatching::new(vec![(0, 2), (2, 0)]);
        assert!(antimatching_embedding(&g, &overlapping).is_err());
        assert!(antimatching_embedding(&cycle(6).unwrap(), &AntiMatching::new(vec![])).is_err());
    }

    #[test]
    fn multipartite_label_sets() {
        assert_eq!(
            multipartite_labels(2, 1).unwrap(),
            vec![vec![0, 3], vec![1, 2]]
        );
        let l = multipartite_labels(4, 2).unwrap();
        assert_eq!(l[0], [0, 7, 8, 15]);
        assert_eq!(hamming_sum(&l[0]), 16);
        assert!(multipartite_labels(4, 4).is_err());
        assert!(multipartite_labels(4, 0).is_err());
    }

    #[test]
    fn multipartite_structure() {
        for n in 2..=8u32 {
            for p in 1..n {
                let labels = multipartite_labels(n, p).unwrap();
                let mut seen = vec![false; 1 << n];
                for part in &labels {
                    assert_eq!(part.len(), 1 << (n - p));
                    for &x in part {
                        assert!(!seen[x as usize]);
                        seen[x as usize] = true;
                    }
                }
                assert!(seen.iter().all(|&s| s));
                let e = multipartite_embedding(n, p).unwrap();
                let size = 1usize << (n - p);
                for (i, part) in labels.iter().enumerate() {
                    for (r, &x) in part.iter().enumerate() {
                        assert_eq!(e.map()[i * size + r], x);
                    }
                }
            }
        }
    }

    #[test]
    fn multipartite_wirelength_small() {
        assert_eq!(wirelength(&multipartite_embedding(2, 1).unwrap()), 4);
        assert_eq!(wirelength(&multipartite_embedding(4, 2).unwrap()), 192);
    }

    #[test]
    fn multipartite_parts_are_closed_under_antipodes() {
        for n in 2..=8u32 {
            let mask = (1u32 << n) - 1;
            for p in 1..n {
                for part in multipartite_labels(n, p).unwrap() {
                    assert!(part.iter().all(|&x| part.contains(&(x ^ mask))));
                }
                assert!(dilation(&multipartite_embedding(n, p).unwrap()).1 < n);
            }
        }
        assert_eq!((7u32 ^ 9).count_ones(), 3);
    }

    #[test]
    fn folded() {
        assert_eq!(wirelength(&folded_identity_embedding(2).unwrap()), 8);
        let e3 = folded_identity_embedding(3).unwrap();
        assert_eq!(wirelength(&e3), 24);
        assert_eq!(dilation(&e3).1, 3);
        for n in 2..=10 {
            assert_eq!(dilation(&folded_gray_embedding(n).unwrap()).1, 2);
        }
        assert!(folded_identity_embedding(1).is_err());
    }

    #[test]
    fn wheel() {
        assert_eq!(wirelength(&wheel_gray_embedding(2).unwrap()), 8);
        let e = wheel_gray_embedding(3).unwrap();
        assert_eq!(wirelength(&e), 20);
        assert_eq!(e.map()[1], 1);
        assert_eq!(e.map()[7], 4);
        let r = evaluate(&e);
        for &((u, v), d) in &r.per_edge_dilation {
            let spoke = u == 0;
            let closing = (u, v) == (1, 7);
            match (spoke, closing) {
                (true, _) => {}
                (false, true) => assert_eq!(d, 2),
                (false, false) => assert_eq!(d, 1),
            }
        }
    }

    #[test]
    fn wheel_spoke_profile() {
        for n in 2..=10u32 {
            let e = wheel_gray_embedding(n).unwrap();
            let mut by_length = vec![0u64; n as usize + 1];
            let mut long_cycle_edges = 0;
            for &(u, v) in e.guest().edges() {
                let d = e.edge_length(u, v);
                if u == 0 {
                    by_length[d as usize] += 1;
                } else if d == 2 {
                    long_cycle_edges += 1;
                } else {
                    assert_eq!(d, 1);
                }
            }
            assert_eq!(long_cycle_edges, 1);
            for k in 1..=n as u64 {
                assert_eq!(by_length[k as usize], binomial(n as u64, k));
            }
        }
    }

    #[test]
    fn clique_product() {
        assert_eq!(wirelength(&clique_product_embedding(2).unwrap()), 4);
        let e = clique_product_embedding(4).unwrap();
        assert_eq!(wirelength(&e), 64);
        assert_eq!(dilation(&e).1, 2);
        assert!(clique_product_embedding(3).is_err());
    }

    #[test]
    fn clique_product_half_spaces() {
        for n in [2u32, 4, 6] {
            let e = clique_product_embedding(n).unwrap();
            let h = 1usize << (n / 2);
            // K_{h/2} □ K_h
            let expected = (h / 2) * (h * (h - 1) / 2) + h * ((h / 2) * (h / 2 - 1) / 2);
            for i in 0..n {
                let zero: Vec<bool> = e.map().iter().map(|&x| x >> i & 1 == 0).collect();
                let one: Vec<bool> = zero.iter().map(|z| !z).collect();
                assert_eq!(e.guest().induced_edge_count(&zero), expected);
                assert_eq!(e.guest().induced_edge_count(&one), expected);
            }
        }
    }
}
