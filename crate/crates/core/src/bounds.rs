//! Lower bounds on dilation, wirelength and congestion of embeddings into
//! `Q_n`, closed-form bisection widths, and the perfect anti-matching test.

use num_rational::Ratio;
use serde::Serialize;

use crate::constructions::AntiMatching;
use crate::error::{check_range, Error, Result};
use crate::family::{Family, FamilyDescriptor};
use crate::graph::{Graph, MAX_ORDER};
use crate::matching;
use crate::oracle;

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// `Some(n)` when `order == 2^n`.
pub fn log2_exact(order: usize) -> Option<u32> {
    order.is_power_of_two().then(|| order.trailing_zeros())
}

/// A perfect matching of the complement of `g`, if one exists. Pairs are
/// `(u, v)` with `u < v`, sorted by `u`.
pub fn has_perfect_antimatching(g: &Graph) -> Option<AntiMatching> {
    let n = g.order();
    if n % 2 == 1 {
        return None;
    }
    let non_neighbors = |v: usize| {
        let mut adj = g.neighbors(v).iter().map(|&w| w as usize).peekable();
        (0..n).filter(move |&w| {
            while adj.next_if(|&a| a < w).is_some() {}
            w != v && adj.peek() != Some(&w)
        })
    };
    let pairs = matching::perfect_matching(n, non_neighbors)?;
    let pairs = pairs
        .into_iter()
        .map(|(u, v)| (u as u32, v as u32))
        .collect();
    Some(AntiMatching::new_unchecked(pairs))
}

/// Exact `dil(G, Q_n)` for order-`2^n` guests up to the n−1 / n split:
/// `n − 1` when a perfect anti-matching exists, otherwise `n`.
pub fn dilation_upper_from_antimatching(g: &Graph) -> Result<u32> {
    let n = log2_exact(g.order()).ok_or(Error::NotPowerOfTwo(g.order()))?;
    Ok(if has_perfect_antimatching(g).is_some() {
        n.saturating_sub(1)
    } else {
        n
    })
}

/// `max { k ≥ 1 : C(n,1) + … + C(n,k−1) < Δ }`, or 0 when no `k` qualifies.
pub fn dilation_lower_bound(n: u32, max_degree: u64) -> Result<u32> {
    check_range("hypercube dimension", n as u64, 1, 63)?;
    check_range("maximum degree", max_degree, 0, (1u64 << n) - 1)?;
    let mut k = 0;
    let mut ball = 0u64; // Σ_{i=1}^{k} C(n, i)
    while ball < max_degree {
        k += 1;
        ball += binomial(n as u64, k as u64);
    }
    Ok(k)
}

/// `BW(G) / BW(H)` as an exact fraction, plus its ceiling.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CongestionBound {
    pub exact: Ratio<u64>,
    pub ceil: u64,
}

pub fn ec_lower_bound(bw_guest: u64, bw_host: u64) -> Result<CongestionBound> {
    if bw_host == 0 {
        return Err(Error::InvalidParameters(
            "host bisection width must be positive".into(),
        ));
    }
    let exact = Ratio::new(bw_guest, bw_host);
    Ok(CongestionBound {
        exact,
        ceil: exact.ceil().to_integer(),
    })
}

/// `n · BW(G)`.
pub fn wl_lower_bound(n: u32, bw_guest: u64) -> u64 {
    n as u64 * bw_guest
}

/// Bisection width of `K_{2r,…,2r}` with `t` parts: `r² t (t − 1)`.
pub fn bw_balanced_multipartite(t: u64, r: u64) -> Result<u64> {
    if t < 2 || r < 1 {
        return Err(Error::InvalidParameters(format!(
            "balanced multipartite needs t ≥ 2 and r ≥ 1, got t = {t}, r = {r}"
        )));
    }
    Ok(r * r * t * (t - 1))
}

/// Bisection width of `K_{2p_1} □ K_{p_2} □ ⋯ □ K_{p_t}` for
/// `2p_1 ≤ p_2 ≤ ⋯ ≤ p_t`: `p_1² p_2 ⋯ p_t`. The list is `(p_1, …, p_t)`.
pub fn bw_clique_product(p: &[u64]) -> Result<u64> {
    let (&p1, rest) = p
        .split_first()
        .ok_or_else(|| Error::InvalidParameters("empty factor list".into()))?;
    if p1 == 0 {
        return Err(Error::InvalidParameters("p_1 must be positive".into()));
    }
    let mut prev = 2 * p1;
    for &q in rest {
        if q < prev {
            return Err(Error::InvalidParameters(format!(
                "factor list {p:?} violates 2p_1 ≤ p_2 ≤ … ≤ p_t"
            )));
        }
        prev = q;
    }
    Ok(p1 * p1 * rest.iter().product::<u64>())
}

pub fn bw_hypercube(n: u32) -> Result<u64> {
    check_range("hypercube dimension", n as u64, 1, 62)?;
    Ok(1 << (n - 1))
}

pub fn bw_folded_hypercube(n: u32) -> Result<u64> {
    check_range("folded hypercube dimension", n as u64, 2, 62)?;
    Ok(1 << n)
}

/// Lower bound on the wirelength of any embedding of `W_{2^n}` into `Q_n`:
/// the spokes always cost `Σ k·C(n,k)`, and the odd cycle of length `2^n − 1`
/// cannot be laid out in the bipartite host with all edges of length 1.
pub fn wheel_wirelength_lower_bound(n: u32) -> Result<u64> {
    check_range("hypercube dimension", n as u64, 2, 62)?;
    let spokes: u64 = (1..=n as u64).map(|k| k * binomial(n as u64, k)).sum();
    Ok(spokes + (1u64 << n))
}

/// Edges of `K_{p_1} □ ⋯ □ K_{p_t}` induced by the first `m` vertices in
/// lexicographic order (first coordinate most significant).
pub fn lindsey_lex_edge_count(p: &[usize], m: usize) -> Result<u64> {
    if p.is_empty() || p.contains(&0) {
        return Err(Error::InvalidParameters(format!(
            "factor sizes must be positive, got {p:?}"
        )));
    }
    if p.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidParameters(format!(
            "factor sizes must be non-decreasing, got {p:?}"
        )));
    }
    let total = p
        .iter()
        .try_fold(1usize, |acc, &x| {
            acc.checked_mul(x).filter(|&v| v <= MAX_ORDER)
        })
        .ok_or_else(|| Error::GuardExceeded(format!("product of {p:?} exceeds {MAX_ORDER}")))?;
    check_range("prefix length m", m as u64, 1, total as u64)?;

    // stride[j] = p_{j+1} ⋯ p_t
    let mut stride = vec![1usize; p.len()];
    for j in (0..p.len() - 1).rev() {
        stride[j] = stride[j + 1] * p[j + 1];
    }
    let mut twice = 0u64;
    for i in 0..m {
        for (&pj, &sj) in p.iter().zip(&stride) {
            let digit = (i / sj) % pj;
            let lowest = i - digit * sj;
            twice += (0..pj)
                .filter(|&c| c != digit && lowest + c * sj < m)
                .count() as u64;
        }
    }
    Ok(twice / 2)
}

/// Where the bisection width in a [`BoundReport`] came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "detail")]
pub enum BwProvenance {
    ClosedForm(String),
    Oracle,
    UserSupplied,
}

/// How [`bound_report`] obtains the guest bisection width.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BwSource {
    Auto,
    Given(u64),
}

impl std::str::FromStr for BwSource {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "auto" {
            return Ok(BwSource::Auto);
        }
        s.parse().map(BwSource::Given).map_err(|_| {
            Error::InvalidParameters(format!("--bw expects an integer or 'auto', got {s:?}"))
        })
    }
}

/// Closed-form bisection width for a recognized family.
pub fn closed_form_bw(g: &Graph) -> Option<(u64, String)> {
    let d = FamilyDescriptor::recognize(g)?;
    let p: Vec<u64> = d.params.iter().map(|&x| x as u64).collect();
    match d.family {
        Family::Hypercube => Some((bw_hypercube(p[0] as u32).ok()?, "BW(Q_n) = 2^(n-1)".into())),
        Family::Folded => Some((
            bw_folded_hypercube(p[0] as u32).ok()?,
            "BW(FQ_n) = 2^n".into(),
        )),
        Family::Multipartite => {
            let s = p[0];
            if s.is_multiple_of(2) && p.iter().all(|&x| x == s) {
                let bw = bw_balanced_multipartite(p.len() as u64, s / 2).ok()?;
                Some((bw, "BW(K_{2r,...,2r}) = r^2 t (t-1)".into()))
            } else {
                None
            }
        }
        Family::CliqueProduct => {
            let mut q = p;
            q.sort_unstable();
            if !q[0].is_multiple_of(2) {
                return None;
            }
            q[0] /= 2;
            let bw = bw_clique_product(&q).ok()?;
            Some((
                bw,
                "BW(K_{2p_1} □ K_{p_2} □ ...) = p_1^2 p_2 ... p_t".into(),
            ))
        }
        Family::Complete => Some((
            (p[0] / 2) * p[0].div_ceil(2),
            "BW(K_n) = floor(n/2) ceil(n/2)".into(),
        )),
        Family::Cycle => Some((2, "BW(C_n) = 2".into())),
        Family::Wheel | Family::Custom => None,
    }
}

/// All lower bounds for embedding `g` (of order `2^host_dim`) into `Q_host_dim`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub guest: String,
    pub host_dim: u32,
    pub max_degree: u64,
    pub dilation_lb: u32,
    /// `n − 1` or `n`, decided by the perfect anti-matching test.
    pub dilation_ub: u32,
    pub wirelength_lb: u64,
    pub congestion_lb_exact: Ratio<u64>,
    pub congestion_lb_int: u64,
    pub bw_used: u64,
    pub bw_provenance: BwProvenance,
}

pub fn bound_report(g: &Graph, host_dim: u32, bw: BwSource) -> Result<BoundReport> {
    if log2_exact(g.order()) != Some(host_dim) {
        return Err(Error::InvalidParameters(format!(
            "bounds need a guest of order 2^{host_dim}, got order {}",
            g.order()
        )));
    }
    let (bw_used, bw_provenance) = match bw {
        BwSource::Given(b) => (b, BwProvenance::UserSupplied),
        BwSource::Auto => match closed_form_bw(g) {
            Some((b, formula)) => (b, BwProvenance::ClosedForm(formula)),
            None => {
                let cert = oracle::oracle_bisection_width(g).map_err(|e| {
                    Error::GuardExceeded(format!(
                        "guest is not a recognized family and the bisection oracle refused it ({e}); pass --bw explicitly"
                    ))
                })?;
                (cert.value, BwProvenance::Oracle)
            }
        },
    };
    let max_degree = g.max_degree() as u64;
    let ec = ec_lower_bound(bw_used, bw_hypercube(host_dim)?)?;
    Ok(BoundReport {
        guest: g.name().to_string(),
        host_dim,
        max_degree,
        dilation_lb: dilation_lower_bound(host_dim, max_degree)?,
        dilation_ub: dilation_upper_from_antimatching(g)?,
        wirelength_lb: wl_lower_bound(host_dim, bw_used),
        congestion_lb_exact: ec.exact,
        congestion_lb_int: ec.ceil,
        bw_used,
        bw_provenance,
    })
}
