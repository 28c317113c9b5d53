//! Embeddings into `Q_n` and their cost measures.
//!
//! An [`Embedding`] fixes the vertex map; the path of every guest edge is the
//! e-cube route between the two images (see [`crate::cube::ecube_route`]).
//! Since that route is a shortest path, dilation and wirelength do not depend
//! on it. Congestion does, and is always reported as canonical-routing
//! congestion: an upper bound on the congestion minimized over routings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cube::{for_each_route_edge, HypercubeVertex};
use crate::error::{check_range, Error, Result};
use crate::family::FamilyDescriptor;
use crate::graph::{dot_quote, Graph};

/// Largest host dimension accepted by [`Embedding`].
pub const MAX_HOST_DIM: u32 = 20;

/// Label attached to every congestion figure this crate reports.
pub const ROUTING_LABEL: &str = "canonical-routing congestion (e-cube, ascending dimension)";

/// Injective map of a guest graph into the vertices of `Q_host_dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    guest: Graph,
    host_dim: u32,
    map: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum GuestJson {
    Graph(Graph),
    Family(FamilyDescriptor),
}

#[derive(Deserialize)]
struct EmbeddingIn {
    guest: GuestJson,
    host_dim: u32,
    map: Vec<u32>,
}

#[derive(Serialize)]
struct EmbeddingOut<'a> {
    guest: &'a Graph,
    host_dim: u32,
    map: &'a [u32],
}

impl Embedding {
    pub fn new(guest: Graph, host_dim: u32, map: Vec<u32>) -> Result<Self> {
        check_range("host dimension", host_dim as u64, 0, MAX_HOST_DIM as u64)?;
        let size = 1usize << host_dim;
        if guest.order() > size {
            return Err(Error::InvalidEmbedding(format!(
                "guest order {} exceeds 2^{host_dim} = {size}",
                guest.order()
            )));
        }
        if map.len() != guest.order() {
            return Err(Error::InvalidEmbedding(format!(
                "map has {} entries for a guest of order {}",
                map.len(),
                guest.order()
            )));
        }
        let mut used = vec![false; size];
        for (v, &img) in map.iter().enumerate() {
            let slot = used.get_mut(img as usize).ok_or_else(|| {
                Error::InvalidEmbedding(format!("image {img} of vertex {v} is not in Q_{host_dim}"))
            })?;
            if *slot {
                return Err(Error::InvalidEmbedding(format!(
                    "image {img} is used twice (vertex {v})"
                )));
            }
            *slot = true;
        }
        Ok(Self {
            guest,
            host_dim,
            map,
        })
    }

    pub fn guest(&self) -> &Graph {
        &self.guest
    }

    pub fn host_dim(&self) -> u32 {
        self.host_dim
    }

    pub fn map(&self) -> &[u32] {
        &self.map
    }

    pub fn image(&self, v: usize) -> HypercubeVertex {
        HypercubeVertex::new(self.map[v], self.host_dim).expect("validated at construction")
    }

    /// Hamming distance between the images of `u` and `v`.
    pub fn edge_length(&self, u: u32, v: u32) -> u32 {
        (self.map[u as usize] ^ self.map[v as usize]).count_ones()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&EmbeddingOut {
            guest: &self.guest,
            host_dim: self.host_dim,
            map: &self.map,
        })
        .expect("embedding serialization is infallible")
    }

    /// Accepts either a full graph or a family descriptor as `guest`.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: EmbeddingIn = serde_json::from_str(text)?;
        let guest = match raw.guest {
            GuestJson::Graph(g) => g,
            GuestJson::Family(d) => d.build()?,
        };
        Self::new(guest, raw.host_dim, raw.map)
    }

    /// Guest graph with each vertex labeled by its image and each edge by its
    /// dilation.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let title = format!("{} -> Q_{}", self.guest.name(), self.host_dim);
        let _ = writeln!(out, "graph {} {{", dot_quote(&title));
        for v in 0..self.guest.order() {
            let _ = writeln!(out, "  {v} [label=\"{v}\\n{}\"];", self.image(v));
        }
        for &(u, v) in self.guest.edges() {
            let _ = writeln!(out, "  {u} -- {v} [label=\"{}\"];", self.edge_length(u, v));
        }
        out.push_str("}\n");
        out
    }
}

/// Dilation of every guest edge (in edge order) and their maximum; the maximum
/// is 0 for an edgeless guest.
pub fn dilation(e: &Embedding) -> (Vec<u32>, u32) {
    let per_edge: Vec<u32> = e
        .guest
        .edges()
        .iter()
        .map(|&(u, v)| e.edge_length(u, v))
        .collect();
    let max = per_edge.iter().copied().max().unwrap_or(0);
    (per_edge, max)
}

/// Sum of the dilations of all guest edges.
pub fn wirelength(e: &Embedding) -> u64 {
    e.guest
        .edges()
        .iter()
        .map(|&(u, v)| e.edge_length(u, v) as u64)
        .sum()
}

/// Load of one host edge under the canonical routing; `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HostEdgeLoad {
    pub a: u32,
    pub b: u32,
    pub load: u64,
}

/// Loads of every host edge used by some route (ascending by edge), and the
/// maximum load.
pub fn edge_congestion(e: &Embedding) -> (Vec<HostEdgeLoad>, u64) {
    let mut loads: BTreeMap<(u32, u32), u64> = BTreeMap::new();
    for &(u, v) in e.guest.edges() {
        for_each_route_edge(e.map[u as usize], e.map[v as usize], |x, y| {
            *loads.entry((x.min(y), x.max(y))).or_insert(0) += 1;
        });
    }
    let max = loads.values().copied().max().unwrap_or(0);
    let list = loads
        .into_iter()
        .map(|((a, b), load)| HostEdgeLoad { a, b, load })
        .collect();
    (list, max)
}

/// All three measures of one embedding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricsReport {
    pub host_dim: u32,
    /// Guest edges in canonical order, paired with their dilation.
    pub per_edge_dilation: Vec<((u32, u32), u32)>,
    pub dilation: u32,
    pub wirelength: u64,
    /// Nonzero host-edge loads only.
    pub per_host_edge_congestion: Vec<HostEdgeLoad>,
    pub congestion: u64,
}

impl MetricsReport {
    pub fn dilation_sum(&self) -> u64 {
        self.per_edge_dilation.iter().map(|&(_, d)| d as u64).sum()
    }

    pub fn congestion_sum(&self) -> u64 {
        self.per_host_edge_congestion.iter().map(|l| l.load).sum()
    }

    pub fn to_json_value(&self, full: bool) -> Value {
        let mut v = json!({
            "host_dim": self.host_dim,
            "dilation": self.dilation,
            "wirelength": self.wirelength,
            "congestion": self.congestion,
            "congestion_kind": ROUTING_LABEL,
        });
        if full {
            v["per_edge_dilation"] = self
                .per_edge_dilation
                .iter()
                .map(|&((a, b), d)| json!([a, b, d]))
                .collect();
            v["per_host_edge_congestion"] = self
                .per_host_edge_congestion
                .iter()
                .map(|l| json!([l.a, l.b, l.load]))
                .collect();
        }
        v
    }

    pub fn to_text(&self) -> String {
        format!(
            "dilation   {}\nwirelength {}\ncongestion {} ({})\n",
            self.dilation, self.wirelength, self.congestion, ROUTING_LABEL
        )
    }
}

pub fn evaluate(e: &Embedding) -> MetricsReport {
    let (per_edge, dil) = dilation(e);
    let (loads, cong) = edge_congestion(e);
    MetricsReport {
        host_dim: e.host_dim,
        per_edge_dilation: e.guest.edges().iter().copied().zip(per_edge).collect(),
        dilation: dil,
        wirelength: wirelength(e),
        per_host_edge_congestion: loads,
        congestion: cong,
    }
}
