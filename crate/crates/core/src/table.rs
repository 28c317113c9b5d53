//! The summary table of dilation and wirelength for the four guest families,
//! recomputed from the constructions and lower bounds.
//!
//! Every cell carries the claimed value, what was actually computed, and
//! whether the two agree. Nothing in a "computed" column is a literal: it comes
//! from evaluating an embedding or from a bound applied to a generated graph.

use std::fmt::Write as _;

use serde::Serialize;

use crate::bounds::{self, dilation_lower_bound, dilation_upper_from_antimatching};
use crate::constructions;
use crate::error::{check_range, Result};
use crate::graph;
use crate::metrics::{dilation, wirelength};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub claimed: String,
    pub computed: String,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Row {
    pub guest: String,
    pub dilation: Cell,
    pub wirelength: Cell,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table1 {
    pub n: u32,
    pub p: u32,
    pub rows: Vec<Row>,
    pub ok: bool,
}

fn range_text(lo: u32, hi: u32) -> String {
    if lo == hi {
        lo.to_string()
    } else {
        format!("{lo}..{hi}")
    }
}

fn wirelength_cell(claimed: u64, constructed: u64, lower: u64) -> Cell {
    Cell {
        claimed: claimed.to_string(),
        computed: format!("{constructed} (lower bound {lower})"),
        ok: constructed == lower && lower == claimed,
    }
}

fn multipartite_row(n: u32, p: u32) -> Result<Row> {
    let g = graph::complete_multipartite(&vec![1usize << (n - p); 1 << p])?;
    let lo = dilation_lower_bound(n, g.max_degree() as u64)?;
    let hi = dilation_upper_from_antimatching(&g)?;
    // n − log2(n + 1) < p  ⇔  2^(n−p) < n + 1
    let dilation = if (1u64 << (n - p)) < n as u64 + 1 {
        Cell {
            claimed: (n - 1).to_string(),
            computed: range_text(lo, hi),
            ok: lo == n - 1 && hi == n - 1,
        }
    } else {
        Cell {
            claimed: "-".into(),
            computed: range_text(lo, hi),
            ok: lo <= hi,
        }
    };
    let claimed = n as u64 * (1u64 << (2 * n - p - 2)) * ((1u64 << p) - 1);
    let bw = bounds::bw_balanced_multipartite(1 << p, 1 << (n - p - 1))?;
    let built = wirelength(&constructions::multipartite_embedding(n, p)?);
    Ok(Row {
        guest: g.name().to_string(),
        dilation,
        wirelength: wirelength_cell(claimed, built, bounds::wl_lower_bound(n, bw)),
    })
}

fn folded_row(n: u32) -> Result<Row> {
    let g = graph::folded_hypercube(n)?;
    let lo = dilation_lower_bound(n, g.max_degree() as u64)?;
    let hi = dilation(&constructions::folded_gray_embedding(n)?).1;
    let claimed = n as u64 * (1u64 << n);
    let built = wirelength(&constructions::folded_identity_embedding(n)?);
    let lower = bounds::wl_lower_bound(n, bounds::bw_folded_hypercube(n)?);
    Ok(Row {
        guest: g.name().to_string(),
        dilation: Cell {
            claimed: "2".into(),
            computed: range_text(lo, hi),
            ok: lo == 2 && hi == 2,
        },
        wirelength: wirelength_cell(claimed, built, lower),
    })
}

fn wheel_row(n: u32) -> Result<Row> {
    let g = graph::wheel(1 << n)?;
    let lo = dilation_lower_bound(n, g.max_degree() as u64)?;
    let hi = dilation_upper_from_antimatching(&g)?;
    let claimed = (n as u64 + 2) * (1u64 << (n - 1));
    let built = wirelength(&constructions::wheel_gray_embedding(n)?);
    Ok(Row {
        guest: g.name().to_string(),
        dilation: Cell {
            claimed: n.to_string(),
            computed: range_text(lo, hi),
            ok: lo == n && hi == n,
        },
        wirelength: wirelength_cell(claimed, built, bounds::wheel_wirelength_lower_bound(n)?),
    })
}

fn clique_product_row(n: u32) -> Result<Row> {
    let e = constructions::clique_product_embedding(n)?;
    let measured = dilation(&e).1;
    let h = n / 2;
    let claimed = n as u64 * (1u64 << (3 * n / 2 - 2));
    let bw = bounds::bw_clique_product(&[1 << (h - 1), 1 << h])?;
    Ok(Row {
        guest: e.guest().name().to_string(),
        dilation: Cell {
            claimed: format!("<= {h}"),
            computed: format!("<= {measured}"),
            ok: measured <= h,
        },
        wirelength: wirelength_cell(claimed, wirelength(&e), bounds::wl_lower_bound(n, bw)),
    })
}

/// Recomputes the four rows at dimension `n` (multipartite row at part
/// exponent `p`). The clique-product row is omitted for odd `n`.
pub fn table1(n: u32, p: u32) -> Result<Table1> {
    check_range("hypercube dimension", n as u64, 2, 12)?;
    check_range("part exponent p", p as u64, 1, n as u64 - 1)?;
    let mut rows = vec![multipartite_row(n, p)?, folded_row(n)?, wheel_row(n)?];
    if n.is_multiple_of(2) {
        rows.push(clique_product_row(n)?);
    }
    let ok = rows.iter().all(|r| r.dilation.ok && r.wirelength.ok);
    Ok(Table1 { n, p, rows, ok })
}

impl Table1 {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "embeddings into Q_{} (p = {})", self.n, self.p);
        let header = [
            "guest",
            "dilation",
            "computed",
            "",
            "wirelength",
            "computed",
            "",
        ];
        let mut lines: Vec<[String; 7]> = vec![header.map(String::from)];
        let mark = |ok: bool| if ok { "ok" } else { "MISMATCH" }.to_string();
        for r in &self.rows {
            lines.push([
                r.guest.clone(),
                r.dilation.claimed.clone(),
                r.dilation.computed.clone(),
                mark(r.dilation.ok),
                r.wirelength.claimed.clone(),
                r.wirelength.computed.clone(),
                mark(r.wirelength.ok),
            ]);
        }
        let widths: Vec<usize> = (0..7)
            .map(|c| {
                lines
                    .iter()
                    .map(|l| l[c].chars().count())
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        for l in &lines {
            let cells: Vec<String> = l
                .iter()
                .zip(&widths)
                .map(|(s, &w)| format!("{s}{}", " ".repeat(w - s.chars().count())))
                .collect();
            let _ = writeln!(out, "{}", cells.join("  ").trim_end());
        }
        out
    }
}
