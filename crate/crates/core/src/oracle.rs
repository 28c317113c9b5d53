//! Exhaustive ground truth at small orders.
//!
//! Embedding searches enumerate injections vertex by vertex in ascending order
//! of guest vertex and host image, so the first optimum reached is the
//! lexicographically smallest one. Two exact reductions are applied by
//! default: vertex 0 is pinned to host vertex 0 (XOR translations), and
//! partial maps that are not lexicographically minimal under coordinate
//! permutations are cut. Both preserve the lexicographically smallest
//! optimum, so reduced and unreduced searches return the same certificate
//! apart from `search_space`.

use serde::Serialize;

use crate::error::{check_range, Error, Result};
use crate::family::{Family, FamilyDescriptor};
use crate::graph::Graph;
use crate::metrics::{self, Embedding};

/// Upper limit on the number of injections an embedding search may face
/// before pruning.
pub const MAX_CANDIDATES: u64 = 1_000_000_000;
/// Largest host dimension the embedding searches accept.
pub const MAX_SEARCH_DIM: u32 = 6;
/// Largest guest order for exhaustive bisection.
pub const MAX_BISECTION_ORDER: usize = 24;
/// Largest product order for exhaustive edge-isoperimetric search.
pub const MAX_LINDSEY_ORDER: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    Dilation,
    Wirelength,
    BisectionWidth,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    /// Image of each guest vertex.
    Map(Vec<u32>),
    /// The larger side (`⌈N/2⌉` vertices) of an optimal bisection.
    Partition(Vec<u32>),
}

/// An exhaustively certified optimum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleCertificate {
    pub quantity: Quantity,
    pub value: u64,
    pub witness: Witness,
    /// Search-tree nodes visited.
    pub search_space: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub reduce_symmetry: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            reduce_symmetry: true,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Objective {
    Dilation,
    Wirelength,
}

fn falling_factorial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i))
}

fn coordinate_permutations(n: u32) -> Vec<Vec<u32>> {
    fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, a, out);
            if k.is_multiple_of(2) {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
        }
    }
    let mut perms = Vec::new();
    heap(n as usize, &mut (0..n as usize).collect(), &mut perms);
    let size = 1u32 << n;
    perms
        .into_iter()
        .filter(|p| p.iter().enumerate().any(|(i, &j)| i != j))
        .map(|p| {
            (0..size)
                .map(|x| (0..n as usize).fold(0, |acc, k| acc | ((x >> k) & 1) << p[k]))
                .collect()
        })
        .collect()
}

struct Search {
    objective: Objective,
    size: u32,
    order: usize,
    /// neighbours of `v` smaller than `v`
    earlier: Vec<Vec<usize>>,
    /// edges whose larger endpoint is ≥ depth
    pending: Vec<u64>,
    perms: Vec<Vec<u32>>,
    pin_first: bool,
    map: Vec<u32>,
    used: u64,
    best: u64,
    best_map: Vec<u32>,
    nodes: u64,
}

impl Search {
    fn bound(&self, cost: u64, depth: usize) -> u64 {
        match self.objective {
            Objective::Dilation => cost.max(u64::from(self.pending[depth] > 0)),
            Objective::Wirelength => cost + self.pending[depth],
        }
    }

    fn dfs(&mut self, depth: usize, cost: u64, tied: &[usize]) {
        if depth == self.order {
            if cost < self.best {
                self.best = cost;
                self.best_map.clone_from(&self.map);
            }
            return;
        }
        let images = if depth == 0 && self.pin_first {
            0..1
        } else {
            0..self.size
        };
        let mut next_tied = Vec::with_capacity(tied.len());
        for x in images {
            if self.used >> x & 1 == 1 {
                continue;
            }
            self.nodes += 1;
            let mut c = cost;
            for &u in &self.earlier[depth] {
                let d = (self.map[u] ^ x).count_ones() as u64;
                match self.objective {
                    Objective::Dilation => c = c.max(d),
                    Objective::Wirelength => c += d,
                }
            }
            if self.bound(c, depth + 1) >= self.best {
                continue;
            }
            next_tied.clear();
            let mut canonical = true;
            for &s in tied {
                let y = self.perms[s][x as usize];
                if y < x {
                    canonical = false;
                    break;
                }
                if y == x {
                    next_tied.push(s);
                }
            }
            if !canonical {
                continue;
            }
            self.map[depth] = x;
            self.used |= 1 << x;
            let still = std::mem::take(&mut next_tied);
            self.dfs(depth + 1, c, &still);
            next_tied = still;
            self.used &= !(1 << x);
        }
    }
}

fn search_embedding(
    g: &Graph,
    n: u32,
    objective: Objective,
    opts: SearchOptions,
) -> Result<OracleCertificate> {
    check_range("oracle host dimension", n as u64, 0, MAX_SEARCH_DIM as u64)?;
    let size = 1u64 << n;
    let order = g.order();
    if order as u64 > size {
        return Err(Error::InvalidEmbedding(format!(
            "guest order {order} exceeds 2^{n} = {size}"
        )));
    }
    let candidates = if opts.reduce_symmetry && order > 0 {
        falling_factorial(size - 1, order as u64 - 1)
    } else {
        falling_factorial(size, order as u64)
    };
    if candidates > MAX_CANDIDATES {
        return Err(Error::GuardExceeded(format!(
            "{candidates} candidate injections of a {order}-vertex guest into Q_{n} (limit {MAX_CANDIDATES})"
        )));
    }

    let mut earlier = vec![Vec::new(); order];
    let mut pending = vec![0u64; order + 1];
    for &(u, v) in g.edges() {
        earlier[v as usize].push(u as usize);
        for p in pending.iter_mut().take(v as usize + 1) {
            *p += 1;
        }
    }
    let perms = if opts.reduce_symmetry {
        coordinate_permutations(n)
    } else {
        Vec::new()
    };
    let tied: Vec<usize> = (0..perms.len()).collect();
    let mut s = Search {
        objective,
        size: size as u32,
        order,
        earlier,
        pending,
        perms,
        pin_first: opts.reduce_symmetry,
        map: vec![0; order],
        used: 0,
        best: u64::MAX,
        best_map: Vec::new(),
        nodes: 0,
    };
    s.dfs(0, 0, &tied);
    debug_assert!(s.best != u64::MAX);
    Ok(OracleCertificate {
        quantity: match objective {
            Objective::Dilation => Quantity::Dilation,
            Objective::Wirelength => Quantity::Wirelength,
        },
        value: s.best,
        witness: Witness::Map(s.best_map),
        search_space: s.nodes,
    })
}

/// Minimum dilation over all embeddings of `g` into `Q_n`.
pub fn oracle_dilation(g: &Graph, n: u32) -> Result<OracleCertificate> {
    oracle_dilation_with(g, n, SearchOptions::default())
}

pub fn oracle_dilation_with(g: &Graph, n: u32, opts: SearchOptions) -> Result<OracleCertificate> {
    search_embedding(g, n, Objective::Dilation, opts)
}

/// Minimum wirelength over all embeddings of `g` into `Q_n`.
pub fn oracle_wirelength(g: &Graph, n: u32) -> Result<OracleCertificate> {
    oracle_wirelength_with(g, n, SearchOptions::default())
}

pub fn oracle_wirelength_with(g: &Graph, n: u32, opts: SearchOptions) -> Result<OracleCertificate> {
    search_embedding(g, n, Objective::Wirelength, opts)
}

/// Exact bisection width: minimum cut over partitions into sides of sizes
/// `⌈N/2⌉` and `⌊N/2⌋`.
pub fn oracle_bisection_width(g: &Graph) -> Result<OracleCertificate> {
    let order = g.order();
    if order > MAX_BISECTION_ORDER {
        return Err(Error::GuardExceeded(format!(
            "exhaustive bisection needs order ≤ {MAX_BISECTION_ORDER}, got {order}"
        )));
    }
    let adj: Vec<u32> = (0..order)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    let a = order.div_ceil(2);
    let mut best = u64::MAX;
    let mut best_side: Vec<u32> = Vec::new();
    let mut nodes = 0u64;

    // combinations of size `a` in lexicographic order; with even order the
    // side holding vertex 0 is enough
    let mut idx: Vec<usize> = (0..a).collect();
    loop {
        if order % 2 == 1 || idx.first().is_none_or(|&v| v == 0) {
            nodes += 1;
            let side = idx.iter().fold(0u32, |m, &v| m | 1 << v);
            let cut: u64 = idx
                .iter()
                .map(|&v| (adj[v] & !side).count_ones() as u64)
                .sum();
            if cut < best {
                best = cut;
                best_side = idx.iter().map(|&v| v as u32).collect();
            }
        }
        // advance
        let mut i = a;
        loop {
            if i == 0 {
                return Ok(OracleCertificate {
                    quantity: Quantity::BisectionWidth,
                    value: best,
                    witness: Witness::Partition(best_side),
                    search_space: nodes,
                });
            }
            i -= 1;
            if idx[i] < order - a + i {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..a {
            idx[j] = idx[j - 1] + 1;
        }
        if order.is_multiple_of(2) && idx.first().is_some_and(|&v| v != 0) {
            return Ok(OracleCertificate {
                quantity: Quantity::BisectionWidth,
                value: best,
                witness: Witness::Partition(best_side),
                search_space: nodes,
            });
        }
    }
}

/// For each `m` in `0..=Πp`, the maximum number of edges induced by an
/// `m`-subset of `K_{p_1} □ ⋯ □ K_{p_t}`.
pub fn oracle_lindsey_profile(p: &[usize]) -> Result<Vec<u64>> {
    if p.is_empty() || p.contains(&0) {
        return Err(Error::InvalidParameters(format!(
            "factor sizes must be positive, got {p:?}"
        )));
    }
    let total = p
        .iter()
        .try_fold(1usize, |acc, &x| acc.checked_mul(x))
        .filter(|&t| t <= MAX_LINDSEY_ORDER)
        .ok_or_else(|| {
            Error::GuardExceeded(format!(
                "exhaustive subset search needs Π p_i ≤ {MAX_LINDSEY_ORDER}, got {p:?}"
            ))
        })?;
    let g = FamilyDescriptor::new(Family::CliqueProduct, p.to_vec()).build()?;
    let adj: Vec<u32> = (0..total)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    let mut best = vec![0u64; total + 1];
    for set in 0u32..1 << total {
        let twice: u32 = (0..total)
            .filter(|&v| set >> v & 1 == 1)
            .map(|v| (adj[v] & set).count_ones())
            .sum();
        let m = set.count_ones() as usize;
        best[m] = best[m].max(twice as u64 / 2);
    }
    Ok(best)
}

pub fn oracle_lindsey_max(p: &[usize], m: usize) -> Result<u64> {
    let profile = oracle_lindsey_profile(p)?;
    check_range("subset size m", m as u64, 0, profile.len() as u64 - 1)?;
    Ok(profile[m])
}

/// Re-evaluates a certificate's witness and checks it reproduces the value.
pub fn witness_reproduces(g: &Graph, n: u32, cert: &OracleCertificate) -> bool {
    match (&cert.witness, cert.quantity) {
        (Witness::Map(map), q) => {
            let Ok(e) = Embedding::new(g.clone(), n, map.clone()) else {
                return false;
            };
            let v = match q {
                Quantity::Dilation => metrics::dilation(&e).1 as u64,
                Quantity::Wirelength => metrics::wirelength(&e),
                Quantity::BisectionWidth => return false,
            };
            v == cert.value
        }
        (Witness::Partition(side), Quantity::BisectionWidth) => {
            let mut in_a = vec![false; g.order()];
            for &v in side {
                in_a[v as usize] = true;
            }
            side.len() == g.order().div_ceil(2) && g.cut_size(&in_a) as u64 == cert.value
        }
        _ => false,
    }
}
