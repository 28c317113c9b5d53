//! Closed-form-versus-construction and oracle-versus-formula checks, grouped
//! by scope. Results are ordered by check id regardless of scope order.

use std::fmt::Write as _;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bounds::{self, has_perfect_antimatching};
use crate::constructions::{self, AntiMatching};
use crate::error::{check_range, Error, Result};
use crate::graph::{self, Graph};
use crate::metrics::{self, Embedding};
use crate::oracle;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scope {
    All,
    Multipartite,
    Folded,
    Wheel,
    CliqueProduct,
    Bisection,
    Theorem3,
    Bounds,
    Congestion,
    Lindsey,
    Dilation,
    Identity,
}

impl Scope {
    pub const ALL: [Scope; 11] = [
        Scope::Multipartite,
        Scope::Folded,
        Scope::Wheel,
        Scope::CliqueProduct,
        Scope::Bisection,
        Scope::Theorem3,
        Scope::Bounds,
        Scope::Congestion,
        Scope::Lindsey,
        Scope::Dilation,
        Scope::Identity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Scope::All => "all",
            Scope::Multipartite => "multipartite",
            Scope::Folded => "folded",
            Scope::Wheel => "wheel",
            Scope::CliqueProduct => "clique-product",
            Scope::Bisection => "bisection",
            Scope::Theorem3 => "theorem3",
            Scope::Bounds => "bounds",
            Scope::Congestion => "congestion",
            Scope::Lindsey => "lindsey",
            Scope::Dilation => "dilation",
            Scope::Identity => "identity",
        }
    }
}

impl FromStr for Scope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        std::iter::once(Scope::All)
            .chain(Scope::ALL)
            .find(|sc| sc.name() == s)
            .ok_or_else(|| Error::InvalidParameters(format!("unknown verification scope {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub scope: Scope,
    pub max_n: u32,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
    pub passed: usize,
    pub failed: usize,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "[{tag}] {}: {}", c.id, c.detail);
        }
        let _ = writeln!(out, "{} passed, {} failed", self.passed, self.failed);
        out
    }
}

struct Checks {
    out: Vec<CheckResult>,
}

impl Checks {
    fn push(&mut self, id: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.out.push(CheckResult {
            id: id.into(),
            passed,
            detail: detail.into(),
        });
    }

    fn push_result(&mut self, id: impl Into<String>, r: Result<(bool, String)>) {
        match r {
            Ok((passed, detail)) => self.push(id, passed, detail),
            Err(e) => self.push(id, false, format!("error: {e}")),
        }
    }
}

/// Order-`2^dim` graphs: the structured set followed by `count` seeded random
/// graphs. Graph `i` draws each pair independently with probability
/// `(i mod 9 + 1) / 10` from a ChaCha8 stream seeded with `seed`.
pub fn sampled_corpus(dim: u32, count: usize, seed: u64) -> Result<Vec<Graph>> {
    check_range("corpus dimension", dim as u64, 2, 3)?;
    let order = 1usize << dim;
    let half = order / 2;
    let mut corpus = vec![
        graph::complete_graph(order)?,
        graph::cycle(order)?,
        graph::hypercube(dim)?,
        graph::wheel(order)?,
        graph::complete_multipartite(&[half, half])?,
        graph::complete_multipartite(&vec![2; half])?,
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..count {
        let density = (i % 9 + 1) as f64 / 10.0;
        let mut edges = Vec::new();
        for u in 0..order as u32 {
            for v in u + 1..order as u32 {
                if rng.gen_bool(density) {
                    edges.push((u, v));
                }
            }
        }
        corpus.push(Graph::new(order, edges)?.with_name(format!("random-{i}")));
    }
    Ok(corpus)
}

fn multipartite(c: &mut Checks, max_n: u32) {
    for n in 2..=max_n {
        for p in 1..n {
            let id = format!("multipartite/wirelength/n={n},p={p}");
            c.push_result(
                id,
                constructions::multipartite_embedding(n, p).map(|e| {
                    let wl = metrics::wirelength(&e);
                    let want = n as u64 * (1u64 << (2 * n - p - 2)) * ((1u64 << p) - 1);
                    (wl == want, format!("measured {wl}, formula {want}"))
                }),
            );
            let id = format!("multipartite/part-sums/n={n},p={p}");
            c.push_result(
                id,
                constructions::multipartite_labels(n, p).map(|parts| {
                    let want = n as u64 * (1u64 << (2 * (n - 1 - p)));
                    let sums: Vec<u64> = parts
                        .iter()
                        .map(|part| {
                            let mut s = 0u64;
                            for (i, &x) in part.iter().enumerate() {
                                for &y in &part[i + 1..] {
                                    s += (x ^ y).count_ones() as u64;
                                }
                            }
                            s
                        })
                        .collect();
                    let ok = sums.iter().all(|&s| s == want);
                    (ok, format!("{} parts, each sum {want}: {ok}", sums.len()))
                }),
            );
        }
    }
}

fn folded(c: &mut Checks, max_n: u32) {
    for n in 2..=max_n {
        c.push_result(
            format!("folded/wirelength/n={n}"),
            constructions::folded_identity_embedding(n).map(|e| {
                let wl = metrics::wirelength(&e);
                let want = n as u64 * (1u64 << n);
                (wl == want, format!("measured {wl}, formula {want}"))
            }),
        );
    }
}

fn wheel(c: &mut Checks, max_n: u32) {
    for n in 2..=max_n {
        c.push_result(
            format!("wheel/wirelength/n={n}"),
            constructions::wheel_gray_embedding(n).map(|e| {
                let wl = metrics::wirelength(&e);
                let want = (n as u64 + 2) * (1u64 << (n - 1));
                let long_cycle_edges = e
                    .guest()
                    .edges()
                    .iter()
                    .filter(|&&(u, v)| u != 0 && e.edge_length(u, v) == 2)
                    .count();
                (
                    wl == want && long_cycle_edges == 1,
                    format!("measured {wl}, formula {want}, cycle edges of dilation 2: {long_cycle_edges}"),
                )
            }),
        );
    }
    for n in 2..=max_n.min(3) {
        c.push_result(
            format!("wheel/oracle/n={n}"),
            graph::wheel(1 << n)
                .and_then(|g| oracle::oracle_wirelength(&g, n))
                .map(|cert| {
                    let want = (n as u64 + 2) * (1u64 << (n - 1));
                    (
                        cert.value == want,
                        format!(
                            "oracle {} over {} nodes, formula {want}",
                            cert.value, cert.search_space
                        ),
                    )
                }),
        );
    }
}

fn clique_product(c: &mut Checks, max_n: u32) {
    for n in (2..=max_n).step_by(2) {
        c.push_result(
            format!("clique-product/wirelength/n={n}"),
            constructions::clique_product_embedding(n).map(|e| {
                let wl = metrics::wirelength(&e);
                let want = n as u64 * (1u64 << (3 * n / 2 - 2));
                (wl == want, format!("measured {wl}, formula {want}"))
            }),
        );
    }
    c.push_result(
        "clique-product/oracle/n=2",
        graph::cartesian_product(
            &graph::complete_graph(2).unwrap(),
            &graph::complete_graph(2).unwrap(),
        )
        .and_then(|g| oracle::oracle_wirelength(&g, 2))
        .map(|cert| (cert.value == 4, format!("oracle {}, formula 4", cert.value))),
    );
}

fn bisection(c: &mut Checks, max_n: u32) {
    let limit = 1usize << max_n;
    for (t, r) in [(2u64, 1u64), (2, 2), (3, 1), (4, 1), (4, 2)] {
        let order = (2 * t * r) as usize;
        if order > limit {
            continue;
        }
        c.push_result(
            format!("bisection/multipartite/t={t},r={r}"),
            (|| {
                let g = graph::complete_multipartite(&vec![2 * r as usize; t as usize])?;
                let got = oracle::oracle_bisection_width(&g)?.value;
                let want = bounds::bw_balanced_multipartite(t, r)?;
                Ok((got == want, format!("oracle {got}, closed form {want}")))
            })(),
        );
    }
    for p in [[1u64, 2], [2, 4]] {
        let sizes = [2 * p[0] as usize, p[1] as usize];
        if sizes[0] * sizes[1] > limit {
            continue;
        }
        c.push_result(
            format!("bisection/clique-product/p={},{}", p[0], p[1]),
            (|| {
                let g = graph::cartesian_product(
                    &graph::complete_graph(sizes[0])?,
                    &graph::complete_graph(sizes[1])?,
                )?;
                let got = oracle::oracle_bisection_width(&g)?.value;
                let want = bounds::bw_clique_product(&p)?;
                Ok((got == want, format!("oracle {got}, closed form {want}")))
            })(),
        );
    }
    for n in 1..=max_n.min(4) {
        c.push_result(
            format!("bisection/hypercube/n={n}"),
            (|| {
                let got = oracle::oracle_bisection_width(&graph::hypercube(n)?)?.value;
                let want = bounds::bw_hypercube(n)?;
                Ok((got == want, format!("oracle {got}, closed form {want}")))
            })(),
        );
    }
    for n in 2..=max_n.min(4) {
        c.push_result(
            format!("bisection/folded/n={n}"),
            (|| {
                let got = oracle::oracle_bisection_width(&graph::folded_hypercube(n)?)?.value;
                let want = bounds::bw_folded_hypercube(n)?;
                Ok((got == want, format!("oracle {got}, closed form {want}")))
            })(),
        );
    }
}

fn corpus_for(max_n: u32, seed: u64) -> Result<(u32, Vec<Graph>)> {
    let dim = max_n.min(3);
    Ok((dim, sampled_corpus(dim, 200, seed)?))
}

fn antimatching_equivalence(c: &mut Checks, max_n: u32, seed: u64) {
    c.push_result(
        "antimatching/equivalence",
        corpus_for(max_n, seed).and_then(|(dim, corpus)| {
            let mut disagree = Vec::new();
            let mut with_am = 0;
            for g in &corpus {
                let cert = oracle::oracle_dilation(g, dim)?;
                let am = has_perfect_antimatching(g);
                with_am += usize::from(am.is_some());
                if (cert.value < dim as u64) != am.is_some() {
                    disagree.push(g.name().to_string());
                }
            }
            Ok((
                disagree.is_empty(),
                format!(
                    "{} graphs of order {}, {with_am} with a perfect anti-matching, disagreements: {disagree:?}",
                    corpus.len(),
                    1 << dim
                ),
            ))
        }),
    );
}

fn bound_soundness(c: &mut Checks, max_n: u32, seed: u64) {
    c.push_result(
        "bounds/soundness",
        corpus_for(max_n, seed).and_then(|(dim, corpus)| {
            let mut bad = Vec::new();
            for g in &corpus {
                let dil = oracle::oracle_dilation(g, dim)?.value;
                let wl = oracle::oracle_wirelength(g, dim)?.value;
                let bw = oracle::oracle_bisection_width(g)?.value;
                let lb = bounds::dilation_lower_bound(dim, g.max_degree() as u64)? as u64;
                if lb > dil || bounds::wl_lower_bound(dim, bw) > wl {
                    bad.push(g.name().to_string());
                }
            }
            Ok((
                bad.is_empty(),
                format!("{} graphs, violations: {bad:?}", corpus.len()),
            ))
        }),
    );
}

fn congestion(c: &mut Checks, max_n: u32) {
    for n in 2..=max_n.min(6) {
        c.push_result(
            format!("congestion/folded/n={n}"),
            (|| {
                let e = constructions::folded_identity_embedding(n)?;
                let cong = metrics::edge_congestion(&e).1;
                let bound = bounds::ec_lower_bound(
                    bounds::bw_folded_hypercube(n)?,
                    bounds::bw_hypercube(n)?,
                )?;
                Ok((
                    cong >= bound.ceil && bound.ceil == 2,
                    format!("canonical-routing congestion {cong}, bound {}", bound.ceil),
                ))
            })(),
        );
    }
    if max_n >= 4 {
        c.push_result(
            "congestion/k4444",
            (|| {
                let g = graph::complete_multipartite(&[4, 4, 4, 4])?;
                let bound = bounds::ec_lower_bound(
                    bounds::bw_balanced_multipartite(4, 2)?,
                    bounds::bw_hypercube(4)?,
                )?;
                let am = has_perfect_antimatching(&g).ok_or_else(|| {
                    Error::InvalidParameters("K_{4,4,4,4} has no anti-matching".into())
                })?;
                let mut worst = u64::MAX;
                for e in [
                    constructions::multipartite_embedding(4, 2)?,
                    constructions::antimatching_embedding(&g, &am)?,
                ] {
                    worst = worst.min(metrics::edge_congestion(&e).1);
                }
                Ok((
                    worst >= bound.ceil,
                    format!(
                        "smallest canonical-routing congestion {worst}, bound {}",
                        bound.ceil
                    ),
                ))
            })(),
        );
    }
}

fn lindsey(c: &mut Checks) {
    for p in [&[2usize, 2][..], &[2, 4], &[3, 3], &[2, 2, 3]] {
        c.push_result(
            format!("lindsey/p={p:?}"),
            (|| {
                let profile = oracle::oracle_lindsey_profile(p)?;
                let mut sorted = p.to_vec();
                sorted.sort_unstable();
                let mut bad = Vec::new();
                for (m, &best) in profile.iter().enumerate().skip(1) {
                    if bounds::lindsey_lex_edge_count(&sorted, m)? != best {
                        bad.push(m);
                    }
                }
                Ok((
                    bad.is_empty(),
                    format!("m = 1..{}, mismatches at {bad:?}", profile.len() - 1),
                ))
            })(),
        );
    }
}

fn dilation_values(c: &mut Checks, max_n: u32) {
    if max_n < 4 {
        return;
    }
    c.push_result(
        "dilation/k4444-antimatching",
        (|| {
            let g = graph::complete_multipartite(&[4, 4, 4, 4])?;
            let pairs = (0..8).map(|k| (2 * k, 2 * k + 1)).collect();
            let d = metrics::dilation(&constructions::antimatching_embedding(
                &g,
                &AntiMatching::new(pairs),
            )?)
            .1;
            Ok((d == 3, format!("measured {d}")))
        })(),
    );
    c.push_result(
        "dilation/upper-from-antimatching",
        (|| {
            let k16 = bounds::dilation_upper_from_antimatching(&graph::complete_graph(16)?)?;
            let w16 = bounds::dilation_upper_from_antimatching(&graph::wheel(16)?)?;
            let k4444 =
                bounds::dilation_upper_from_antimatching(&graph::complete_multipartite(&[
                    4, 4, 4, 4,
                ])?)?;
            Ok((
                (k16, w16, k4444) == (4, 4, 3),
                format!("K_16 {k16}, W_16 {w16}, K_{{4,4,4,4}} {k4444}"),
            ))
        })(),
    );
}

/// Every embedding the constructions produce for dimensions up to `max_n`.
pub fn constructed_embeddings(max_n: u32) -> Result<Vec<Embedding>> {
    let mut out = Vec::new();
    for n in 2..=max_n.min(12) {
        for p in 1..n.min(9) {
            if n <= 9 {
                out.push(constructions::multipartite_embedding(n, p)?);
            }
        }
        out.push(constructions::folded_identity_embedding(n)?);
        out.push(constructions::folded_gray_embedding(n)?);
        out.push(constructions::wheel_gray_embedding(n)?);
        if n % 2 == 0 {
            out.push(constructions::clique_product_embedding(n)?);
        }
        if n <= 6 {
            for g in [
                graph::cycle(1 << n)?,
                graph::complete_multipartite(&vec![2; 1 << (n - 1)])?,
                graph::hypercube(n)?,
            ] {
                if let Some(am) = has_perfect_antimatching(&g) {
                    out.push(constructions::antimatching_embedding(&g, &am)?);
                }
            }
        }
    }
    Ok(out)
}

fn identity(c: &mut Checks, max_n: u32) {
    c.push_result(
        "identity/wirelength-sums",
        constructed_embeddings(max_n).map(|list| {
            let mut bad = Vec::new();
            for e in &list {
                let r = metrics::evaluate(e);
                if r.dilation_sum() != r.wirelength || r.congestion_sum() != r.wirelength {
                    bad.push(e.guest().name().to_string());
                }
            }
            (
                bad.is_empty(),
                format!("{} embeddings, violations: {bad:?}", list.len()),
            )
        }),
    );
}

/// Runs the checks of `scope` for dimensions up to `max_n` (2..=12).
pub fn run(scope: Scope, max_n: u32, seed: u64) -> Result<VerifyReport> {
    check_range("max_n", max_n as u64, 2, 12)?;
    let scopes: Vec<Scope> = if scope == Scope::All {
        Scope::ALL.to_vec()
    } else {
        vec![scope]
    };
    let mut c = Checks { out: Vec::new() };
    for s in scopes {
        match s {
            Scope::Multipartite => multipartite(&mut c, max_n),
            Scope::Folded => folded(&mut c, max_n),
            Scope::Wheel => wheel(&mut c, max_n),
            Scope::CliqueProduct => clique_product(&mut c, max_n),
            Scope::Bisection => bisection(&mut c, max_n),
            Scope::Theorem3 => antimatching_equivalence(&mut c, max_n, seed),
            Scope::Bounds => bound_soundness(&mut c, max_n, seed),
            Scope::Congestion => congestion(&mut c, max_n),
            Scope::Lindsey => lindsey(&mut c),
            Scope::Dilation => dilation_values(&mut c, max_n),
            Scope::Identity => identity(&mut c, max_n),
            Scope::All => unreachable!(),
        }
    }
    let mut checks = c.out;
    checks.sort_by(|a, b| a.id.cmp(&b.id));
    let passed = checks.iter().filter(|c| c.passed).count();
    let failed = checks.len() - passed;
    Ok(VerifyReport {
        scope,
        max_n,
        seed,
        checks,
        passed,
        failed,
    })
}
