//! Undirected simple graphs over dense vertex ids, plus the guest and host
//! families used throughout the crate.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{check_range, Error, Result};

/// Largest admissible graph order.
pub const MAX_ORDER: usize = 1 << 20;
/// Largest admissible number of edges for a generated graph.
pub const MAX_EDGES: usize = 1 << 26;

/// Undirected simple graph on vertices `0..order`.
///
/// Edges are stored once, smaller endpoint first, sorted ascending. Adjacency
/// lists are kept sorted as well so that `has_edge` is a binary search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct Graph {
    name: String,
    order: usize,
    edges: Vec<(u32, u32)>,
    adj: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    #[serde(default)]
    name: String,
    order: usize,
    edges: Vec<[u32; 2]>,
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(value: GraphJson) -> Result<Self> {
        let g = Graph::new(value.order, value.edges.into_iter().map(|[u, v]| (u, v)))?;
        Ok(g.with_name(value.name))
    }
}

impl From<Graph> for GraphJson {
    fn from(g: Graph) -> Self {
        GraphJson {
            name: g.name,
            order: g.order,
            edges: g.edges.into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl Graph {
    /// Builds a graph from an arbitrary edge list. Endpoints may come in either
    /// order; self-loops, duplicates and out-of-range endpoints are rejected.
    pub fn new(order: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        check_range("graph order", order as u64, 0, MAX_ORDER as u64)?;
        let mut list = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            if u as usize >= order || v as usize >= order {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{order}"
                )));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!(
                "duplicate edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        Ok(Self::from_canonical(order, list))
    }

    /// `edges` must already be sorted, deduplicated and oriented `u < v`.
    fn from_canonical(order: usize, edges: Vec<(u32, u32)>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        let mut adj = vec![Vec::new(); order];
        for &(u, v) in &edges {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph {
            name: String::new(),
            order,
            edges,
            adj,
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Edges in ascending lexicographic order, smaller endpoint first.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Δ(G); zero for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.adj[u].binary_search(&(v as u32)).is_ok()
    }

    /// Same vertex count and edge set, ignoring the name.
    pub fn same_structure(&self, other: &Graph) -> bool {
        self.order == other.order && self.edges == other.edges
    }

    /// |E_G(A, B)| for the bipartition given by `in_a`.
    pub fn cut_size(&self, in_a: &[bool]) -> usize {
        self.edges
            .iter()
            .filter(|&&(u, v)| in_a[u as usize] != in_a[v as usize])
            .count()
    }

    /// |E_G(A)|, the number of edges with both ends in `set`.
    pub fn induced_edge_count(&self, set: &[bool]) -> usize {
        self.edges
            .iter()
            .filter(|&&(u, v)| set[u as usize] && set[v as usize])
            .count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Graphviz rendering; vertices first, then edges, both ascending.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph {} {{", dot_quote(&self.name));
        for v in 0..self.order {
            let _ = writeln!(out, "  {v};");
        }
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

pub(crate) fn dot_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Hypercube `Q_n`: vertex `i` is adjacent to `i ^ (1 << k)` for every `k < n`.
pub fn hypercube(n: u32) -> Result<Graph> {
    check_range("hypercube dimension", n as u64, 1, 20)?;
    let order = 1usize << n;
    let mut edges = Vec::with_capacity(n as usize * order / 2);
    for v in 0..order as u32 {
        for k in 0..n {
            let w = v ^ (1 << k);
            if v < w {
                edges.push((v, w));
            }
        }
    }
    edges.sort_unstable();
    Ok(Graph::from_canonical(order, edges).with_name(format!("Q_{n}")))
}

/// Folded hypercube `FQ_n`: `Q_n` plus an edge from every vertex to its antipode.
pub fn folded_hypercube(n: u32) -> Result<Graph> {
    check_range("folded hypercube dimension", n as u64, 2, 20)?;
    let order = 1usize << n;
    let mask = (order - 1) as u32;
    let mut edges = Vec::with_capacity((n as usize + 1) * order / 2);
    for v in 0..order as u32 {
        for k in 0..n {
            let w = v ^ (1 << k);
            if v < w {
                edges.push((v, w));
            }
        }
        let anti = v ^ mask;
        if v < anti {
            edges.push((v, anti));
        }
    }
    edges.sort_unstable();
    Ok(Graph::from_canonical(order, edges).with_name(format!("FQ_{n}")))
}

/// Complete multipartite graph; part `i` occupies a consecutive vertex range
/// in the order given.
pub fn complete_multipartite(part_sizes: &[usize]) -> Result<Graph> {
    if part_sizes.len() < 2 {
        return Err(Error::InvalidParameters(format!(
            "a complete multipartite graph needs at least 2 parts, got {}",
            part_sizes.len()
        )));
    }
    if let Some(i) = part_sizes.iter().position(|&s| s == 0) {
        return Err(Error::InvalidParameters(format!("part {i} is empty")));
    }
    let order: usize = part_sizes.iter().sum();
    check_range("graph order", order as u64, 2, MAX_ORDER as u64)?;
    let squares: usize = part_sizes.iter().map(|&s| s * s).sum();
    let edge_count = (order * order - squares) / 2;
    check_range("edge count", edge_count as u64, 0, MAX_EDGES as u64)?;

    let mut part_of = Vec::with_capacity(order);
    for (i, &s) in part_sizes.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, s));
    }
    let mut edges = Vec::with_capacity(edge_count);
    for u in 0..order {
        for v in u + 1..order {
            if part_of[u] != part_of[v] {
                edges.push((u as u32, v as u32));
            }
        }
    }
    let label = part_sizes
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",");
    Ok(Graph::from_canonical(order, edges).with_name(format!("K_{{{label}}}")))
}

/// Wheel `W_n`: vertex 0 is the hub, vertices `1..n` form a cycle in index order.
pub fn wheel(n_vertices: usize) -> Result<Graph> {
    check_range("wheel order", n_vertices as u64, 4, MAX_ORDER as u64)?;
    let last = n_vertices as u32 - 1;
    let mut edges: Vec<(u32, u32)> = (1..=last).map(|v| (0, v)).collect();
    edges.extend((1..last).map(|v| (v, v + 1)));
    edges.push((1, last));
    edges.sort_unstable();
    Ok(Graph::from_canonical(n_vertices, edges).with_name(format!("W_{n_vertices}")))
}

pub fn complete_graph(n_vertices: usize) -> Result<Graph> {
    check_range(
        "complete graph order",
        n_vertices as u64,
        1,
        MAX_ORDER as u64,
    )?;
    check_range(
        "edge count",
        (n_vertices * (n_vertices - 1) / 2) as u64,
        0,
        MAX_EDGES as u64,
    )?;
    let n = n_vertices as u32;
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Ok(Graph::from_canonical(n_vertices, edges).with_name(format!("K_{n_vertices}")))
}

/// Cycle with edges `i -- (i + 1) mod n`.
pub fn cycle(n_vertices: usize) -> Result<Graph> {
    check_range("cycle order", n_vertices as u64, 3, MAX_ORDER as u64)?;
    let n = n_vertices as u32;
    let mut edges: Vec<(u32, u32)> = (0..n - 1).map(|v| (v, v + 1)).collect();
    edges.push((0, n - 1));
    edges.sort_unstable();
    Ok(Graph::from_canonical(n_vertices, edges).with_name(format!("C_{n_vertices}")))
}

/// Edgeless graph.
pub fn empty_graph(n_vertices: usize) -> Result<Graph> {
    check_range("graph order", n_vertices as u64, 0, MAX_ORDER as u64)?;
    Ok(Graph::from_canonical(n_vertices, Vec::new()).with_name(format!("E_{n_vertices}")))
}

/// Cartesian product `G □ H`; vertex `(a, b)` gets id `a * order(h) + b`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let order = g
        .order
        .checked_mul(h.order)
        .filter(|&o| o <= MAX_ORDER)
        .ok_or_else(|| Error::OutOfRange {
            what: "product order",
            value: (g.order as u64).saturating_mul(h.order as u64),
            min: 0,
            max: MAX_ORDER as u64,
        })?;
    let edge_count = g.order * h.edge_count() + h.order * g.edge_count();
    check_range("edge count", edge_count as u64, 0, MAX_EDGES as u64)?;

    let ho = h.order as u32;
    let mut edges = Vec::with_capacity(edge_count);
    for a in 0..g.order as u32 {
        for &(b1, b2) in &h.edges {
            edges.push((a * ho + b1, a * ho + b2));
        }
    }
    for &(a1, a2) in &g.edges {
        for b in 0..ho {
            edges.push((a1 * ho + b, a2 * ho + b));
        }
    }
    edges.sort_unstable();
    Ok(Graph::from_canonical(order, edges).with_name(format!("{} □ {}", g.name, h.name)))
}

/// Complement graph on the same vertex set.
pub fn complement(g: &Graph) -> Result<Graph> {
    let n = g.order;
    let total = n * n.saturating_sub(1) / 2;
    check_range(
        "edge count",
        (total - g.edge_count()) as u64,
        0,
        MAX_EDGES as u64,
    )?;
    let mut edges = Vec::with_capacity(total - g.edge_count());
    for u in 0..n {
        let mut nbrs = g.adj[u].iter().peekable();
        for v in u + 1..n {
            while nbrs.next_if(|&&w| (w as usize) < v).is_some() {}
            if nbrs.peek().is_some_and(|&&w| w as usize == v) {
                continue;
            }
            edges.push((u as u32, v as u32));
        }
    }
    Ok(Graph::from_canonical(n, edges).with_name(format!("complement({})", g.name)))
}
