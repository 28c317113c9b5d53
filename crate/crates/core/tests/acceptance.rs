//! Acceptance suite: one line per criterion, exit status 1 if any fails.
//!
//! Closed forms are written out here again rather than taken from the
//! library, so a wrong formula in `bounds` cannot agree with itself.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hyperembed::bounds::{self, has_perfect_antimatching};
use hyperembed::constructions::{self, AntiMatching};
use hyperembed::graph::{self, Graph};
use hyperembed::metrics::{self, Embedding};
use hyperembed::oracle;
use hyperembed::verify::sampled_corpus;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn hamming_wirelength(e: &Embedding) -> u64 {
    e.guest()
        .edges()
        .iter()
        .map(|&(u, v)| (e.map()[u as usize] ^ e.map()[v as usize]).count_ones() as u64)
        .sum()
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, want {want:?}"))
    }
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let spent = start.elapsed();
    if spent < limit {
        Ok(())
    } else {
        Err(format!("took {spent:?}, limit {limit:?}"))
    }
}

fn c1_multipartite_wirelength() -> Outcome {
    let start = Instant::now();
    let mut cases = 0;
    for n in 2..=8u32 {
        for p in 1..n {
            let e = constructions::multipartite_embedding(n, p).map_err(|e| e.to_string())?;
            let want = n as u64 * (1u64 << (2 * n - p - 2)) * ((1u64 << p) - 1);
            expect_eq(&format!("n={n} p={p}"), metrics::wirelength(&e), want)?;
            expect_eq(
                &format!("n={n} p={p} recount"),
                hamming_wirelength(&e),
                want,
            )?;
            cases += 1;
        }
    }
    within(Duration::from_secs(60), start)?;
    Ok(format!("{cases} (n, p) pairs, 2 <= n <= 8"))
}

fn c2_part_sums() -> Outcome {
    let mut parts_checked = 0;
    for n in 2..=8u32 {
        for p in 1..n {
            let parts = constructions::multipartite_labels(n, p).map_err(|e| e.to_string())?;
            expect_eq(&format!("n={n} p={p} part count"), parts.len(), 1 << p)?;
            let want = n as u64 * (1u64 << (2 * (n - 1 - p)));
            for (i, part) in parts.iter().enumerate() {
                let mut sum = 0u64;
                for a in part {
                    for b in part {
                        sum += (a ^ b).count_ones() as u64;
                    }
                }
                // ordered pairs count each distance twice
                expect_eq(&format!("n={n} p={p} part {i}"), sum / 2, want)?;
                parts_checked += 1;
            }
        }
    }
    Ok(format!("{parts_checked} parts"))
}

fn c3_folded() -> Outcome {
    let start = Instant::now();
    for n in 2..=12u32 {
        let e = constructions::folded_identity_embedding(n).map_err(|e| e.to_string())?;
        expect_eq(
            &format!("n={n}"),
            metrics::wirelength(&e),
            n as u64 * (1 << n),
        )?;
    }
    within(Duration::from_secs(10), start)?;
    Ok("FQ_n for 2 <= n <= 12".into())
}

fn c4_wheel() -> Outcome {
    for n in 2..=12u32 {
        let e = constructions::wheel_gray_embedding(n).map_err(|e| e.to_string())?;
        expect_eq(
            &format!("n={n}"),
            metrics::wirelength(&e),
            (n as u64 + 2) << (n - 1),
        )?;
        let stretched = e
            .guest()
            .edges()
            .iter()
            .filter(|&&(u, v)| u != 0 && v != 0)
            .filter(|&&(u, v)| (e.map()[u as usize] ^ e.map()[v as usize]).count_ones() == 2)
            .count();
        expect_eq(&format!("n={n} cycle edges of dilation 2"), stretched, 1)?;
    }
    let start = Instant::now();
    for (order, n, want) in [(8usize, 3u32, 20u64), (4, 2, 8)] {
        let g = graph::wheel(order).map_err(|e| e.to_string())?;
        let cert = oracle::oracle_wirelength(&g, n).map_err(|e| e.to_string())?;
        expect_eq(&format!("oracle W_{order}"), cert.value, want)?;
    }
    within(Duration::from_secs(60), start)?;
    Ok("2 <= n <= 12, oracle W_8 = 20, W_4 = 8".into())
}

fn c5_clique_product() -> Outcome {
    for n in [2u32, 4, 6, 8] {
        let e = constructions::clique_product_embedding(n).map_err(|e| e.to_string())?;
        expect_eq(
            &format!("n={n}"),
            metrics::wirelength(&e),
            n as u64 * (1 << (3 * n / 2 - 2)),
        )?;
    }
    let g = graph::cartesian_product(
        &graph::complete_graph(2).unwrap(),
        &graph::complete_graph(2).unwrap(),
    )
    .map_err(|e| e.to_string())?;
    let cert = oracle::oracle_wirelength(&g, 2).map_err(|e| e.to_string())?;
    expect_eq("oracle K_2 □ K_2", cert.value, 4)?;
    Ok("n in {2, 4, 6, 8}, oracle optimal at n = 2".into())
}

fn oracle_bw(g: &Graph) -> Result<u64, String> {
    oracle::oracle_bisection_width(g)
        .map(|c| c.value)
        .map_err(|e| e.to_string())
}

fn c6_bisection() -> Outcome {
    let start = Instant::now();
    for (t, r) in [(2u64, 1u64), (2, 2), (3, 1), (4, 1), (4, 2)] {
        let g = graph::complete_multipartite(&vec![2 * r as usize; t as usize])
            .map_err(|e| e.to_string())?;
        let want = r * r * t * (t - 1);
        expect_eq(
            &format!("K_{{2r x {t}}} r={r} closed form"),
            bounds::bw_balanced_multipartite(t, r).ok(),
            Some(want),
        )?;
        expect_eq(
            &format!("K_{{2r x {t}}} r={r} oracle"),
            oracle_bw(&g)?,
            want,
        )?;
    }
    for (p1, p2) in [(1u64, 2u64), (2, 4)] {
        let g = graph::cartesian_product(
            &graph::complete_graph(2 * p1 as usize).unwrap(),
            &graph::complete_graph(p2 as usize).unwrap(),
        )
        .map_err(|e| e.to_string())?;
        let want = p1 * p1 * p2;
        expect_eq(
            &format!("clique product ({p1},{p2}) closed form"),
            bounds::bw_clique_product(&[p1, p2]).ok(),
            Some(want),
        )?;
        expect_eq(
            &format!("clique product ({p1},{p2}) oracle"),
            oracle_bw(&g)?,
            want,
        )?;
    }
    for n in 1..=4u32 {
        expect_eq(
            &format!("Q_{n}"),
            oracle_bw(&graph::hypercube(n).unwrap())?,
            1 << (n - 1),
        )?;
        if n >= 2 {
            expect_eq(
                &format!("FQ_{n}"),
                oracle_bw(&graph::folded_hypercube(n).unwrap())?,
                1 << n,
            )?;
        }
    }
    within(Duration::from_secs(300), start)?;
    Ok("5 multipartite, 2 clique products, Q_n and FQ_n for n <= 4".into())
}

fn corpus() -> Result<Vec<Graph>, String> {
    let c = sampled_corpus(3, 200, 0).map_err(|e| e.to_string())?;
    expect_eq("corpus size", c.len(), 206)?;
    Ok(c)
}

fn c7_antimatching_equivalence() -> Outcome {
    let start = Instant::now();
    let mut with_am = 0;
    for g in corpus()? {
        let dil = oracle::oracle_dilation(&g, 3)
            .map_err(|e| e.to_string())?
            .value;
        let am = has_perfect_antimatching(&g);
        if let Some(am) = &am {
            with_am += 1;
            am.validate(&g).map_err(|e| format!("{}: {e}", g.name()))?;
        }
        expect_eq(
            &format!("{} (oracle dilation {dil})", g.name()),
            dil <= 2,
            am.is_some(),
        )?;
    }
    within(Duration::from_secs(600), start)?;
    Ok(format!(
        "206 graphs of order 8, {with_am} with a perfect anti-matching"
    ))
}

fn c8_bound_soundness() -> Outcome {
    for g in corpus()? {
        let dil = oracle::oracle_dilation(&g, 3)
            .map_err(|e| e.to_string())?
            .value;
        let wl = oracle::oracle_wirelength(&g, 3)
            .map_err(|e| e.to_string())?
            .value;
        let bw = oracle_bw(&g)?;
        let lb =
            bounds::dilation_lower_bound(3, g.max_degree() as u64).map_err(|e| e.to_string())?;
        if lb as u64 > dil {
            return Err(format!("{}: dilation bound {lb} > {dil}", g.name()));
        }
        if 3 * bw > wl {
            return Err(format!("{}: 3 BW = {} > {wl}", g.name(), 3 * bw));
        }
    }
    Ok("206 graphs, dilation and wirelength bounds hold".into())
}

fn c9_congestion() -> Outcome {
    for n in 2..=6u32 {
        let e = constructions::folded_identity_embedding(n).map_err(|e| e.to_string())?;
        let bound = (1u64 << n).div_ceil(1 << (n - 1));
        expect_eq(&format!("FQ_{n} bound"), bound, 2)?;
        let lib = bounds::ec_lower_bound(1 << n, 1 << (n - 1)).map_err(|e| e.to_string())?;
        expect_eq(&format!("FQ_{n} library bound"), lib.ceil, 2)?;
        let cong = metrics::edge_congestion(&e).1;
        if cong < bound {
            return Err(format!("FQ_{n}: congestion {cong} < {bound}"));
        }
    }
    let g = graph::complete_multipartite(&[4, 4, 4, 4]).unwrap();
    let bound = 48u64.div_ceil(8);
    let am = has_perfect_antimatching(&g).ok_or("K_{4,4,4,4} has no perfect anti-matching")?;
    for e in [
        constructions::multipartite_embedding(4, 2).map_err(|e| e.to_string())?,
        constructions::antimatching_embedding(&g, &am).map_err(|e| e.to_string())?,
    ] {
        let cong = metrics::edge_congestion(&e).1;
        if cong < bound {
            return Err(format!("K_{{4,4,4,4}}: congestion {cong} < {bound}"));
        }
    }
    Ok("FQ_n (n <= 6) bound 2, K_{4,4,4,4} bound 6".into())
}

fn c10_lindsey() -> Outcome {
    let start = Instant::now();
    let mut total = 0;
    for p in [&[2usize, 2][..], &[2, 4], &[3, 3], &[2, 2, 3]] {
        let order: usize = p.iter().product();
        for m in 1..=order {
            let best = oracle::oracle_lindsey_max(p, m).map_err(|e| e.to_string())?;
            let lex = bounds::lindsey_lex_edge_count(p, m).map_err(|e| e.to_string())?;
            expect_eq(&format!("p={p:?} m={m}"), lex, best)?;
            total += 1;
        }
    }
    within(Duration::from_secs(60), start)?;
    Ok(format!("{total} (p, m) pairs"))
}

fn c11_dilation_values() -> Outcome {
    let g = graph::complete_multipartite(&[4, 4, 4, 4]).unwrap();
    // one anti-matching edge inside each part
    let am = AntiMatching::new((0..8).map(|k| (2 * k, 2 * k + 1)).collect());
    let e = constructions::antimatching_embedding(&g, &am).map_err(|e| e.to_string())?;
    expect_eq("K_{4,4,4,4} measured", metrics::dilation(&e).1, 3)?;
    let ub = |g: Graph| bounds::dilation_upper_from_antimatching(&g).map_err(|e| e.to_string());
    expect_eq("K_16", ub(graph::complete_graph(16).unwrap())?, 4)?;
    expect_eq("W_16", ub(graph::wheel(16).unwrap())?, 4)?;
    expect_eq("K_{4,4,4,4}", ub(g)?, 3)?;
    Ok("K_{4,4,4,4} dilation 3; upper bounds 4, 4, 3".into())
}

fn c12_identity() -> Outcome {
    let mut all: Vec<Embedding> =
        hyperembed::verify::constructed_embeddings(8).map_err(|e| e.to_string())?;
    for g in corpus()?.iter().take(30) {
        if let Some(am) = has_perfect_antimatching(g) {
            all.push(constructions::antimatching_embedding(g, &am).map_err(|e| e.to_string())?);
        }
        let cert = oracle::oracle_wirelength(g, 3).map_err(|e| e.to_string())?;
        if let oracle::Witness::Map(map) = cert.witness {
            all.push(Embedding::new(g.clone(), 3, map).map_err(|e| e.to_string())?);
        }
    }
    for e in &all {
        let (per_edge, _) = metrics::dilation(e);
        let (loads, _) = metrics::edge_congestion(e);
        let wl = metrics::wirelength(e);
        let dil_sum: u64 = per_edge.iter().map(|&d| d as u64).sum();
        let cong_sum: u64 = loads.iter().map(|l| l.load).sum();
        expect_eq(
            &format!("{} into Q_{}", e.guest().name(), e.host_dim()),
            (dil_sum, cong_sum),
            (wl, wl),
        )?;
    }
    Ok(format!("{} embeddings", all.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("multipartite wirelength", c1_multipartite_wirelength),
        ("per-part distance sums", c2_part_sums),
        ("folded hypercube wirelength", c3_folded),
        ("wheel wirelength and optimality", c4_wheel),
        ("clique product wirelength", c5_clique_product),
        ("bisection widths vs oracle", c6_bisection),
        (
            "anti-matching dilation equivalence",
            c7_antimatching_equivalence,
        ),
        ("bound soundness sweep", c8_bound_soundness),
        ("congestion lower bound", c9_congestion),
        ("lexicographic order optimality", c10_lindsey),
        ("dilation values", c11_dilation_values),
        ("wirelength identities", c12_identity),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let spent = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("[PASS] criterion {}: {name}: {detail} ({spent:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] criterion {}: {name}: {why} ({spent:.2}s)", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
