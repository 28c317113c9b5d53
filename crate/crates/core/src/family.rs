//! Named graph families, as used by the CLI and by `--bw auto`.

use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{self, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Hypercube,
    Folded,
    Multipartite,
    Wheel,
    CliqueProduct,
    Complete,
    Cycle,
    Custom,
}

/// A family plus its integer parameters.
///
/// | family           | params                 |
/// |------------------|------------------------|
/// | `hypercube`      | `[n]`                  |
/// | `folded`         | `[n]`                  |
/// | `multipartite`   | part sizes (≥ 2)       |
/// | `wheel`          | `[order]`              |
/// | `clique_product` | clique sizes (≥ 1)     |
/// | `complete`       | `[order]`              |
/// | `cycle`          | `[order]`              |
/// | `custom`         | `[]`, graph read from `source` |
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyDescriptor {
    pub family: Family,
    #[serde(default)]
    pub params: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<PathBuf>,
}

impl FamilyDescriptor {
    pub fn new(family: Family, params: Vec<usize>) -> Self {
        Self {
            family,
            params,
            source: None,
        }
    }

    pub fn custom(source: impl Into<PathBuf>) -> Self {
        Self {
            family: Family::Custom,
            params: Vec::new(),
            source: Some(source.into()),
        }
    }

    fn single(&self) -> Result<usize> {
        match self.params.as_slice() {
            [x] => Ok(*x),
            other => Err(Error::InvalidParameters(format!(
                "family {:?} takes exactly one parameter, got {}",
                self.family,
                other.len()
            ))),
        }
    }

    fn dim(&self) -> Result<u32> {
        let n = self.single()?;
        u32::try_from(n).map_err(|_| Error::InvalidParameters(format!("dimension {n} too large")))
    }

    pub fn build(&self) -> Result<Graph> {
        match self.family {
            Family::Hypercube => graph::hypercube(self.dim()?),
            Family::Folded => graph::folded_hypercube(self.dim()?),
            Family::Multipartite => graph::complete_multipartite(&self.params),
            Family::Wheel => graph::wheel(self.single()?),
            Family::Complete => graph::complete_graph(self.single()?),
            Family::Cycle => graph::cycle(self.single()?),
            Family::CliqueProduct => {
                let (first, rest) = self.params.split_first().ok_or_else(|| {
                    Error::InvalidParameters("clique_product needs at least one factor".into())
                })?;
                let mut g = graph::complete_graph(*first)?;
                for &p in rest {
                    g = graph::cartesian_product(&g, &graph::complete_graph(p)?)?;
                }
                Ok(g)
            }
            Family::Custom => {
                if !self.params.is_empty() {
                    return Err(Error::InvalidParameters(
                        "custom takes no parameters".into(),
                    ));
                }
                let path = self.source.as_ref().ok_or_else(|| {
                    Error::InvalidParameters("custom family requires a source file".into())
                })?;
                Graph::from_json(&std::fs::read_to_string(path)?)
            }
        }
    }

    /// Recovers the family of a generated graph from its name, and confirms it
    /// by regenerating the graph and comparing edge sets.
    pub fn recognize(g: &Graph) -> Option<Self> {
        let d = parse_name(g.name())?;
        let built = d.build().ok()?;
        built.same_structure(g).then_some(d)
    }
}

fn parse_name(name: &str) -> Option<FamilyDescriptor> {
    let num = |s: &str| s.parse::<usize>().ok();
    if name.contains(" □ ") {
        let params = name
            .split(" □ ")
            .map(|f| f.strip_prefix("K_").and_then(num))
            .collect::<Option<Vec<_>>>()?;
        return Some(FamilyDescriptor::new(Family::CliqueProduct, params));
    }
    if let Some(n) = name.strip_prefix("FQ_") {
        return Some(FamilyDescriptor::new(Family::Folded, vec![num(n)?]));
    }
    if let Some(n) = name.strip_prefix("Q_") {
        return Some(FamilyDescriptor::new(Family::Hypercube, vec![num(n)?]));
    }
    if let Some(n) = name.strip_prefix("W_") {
        return Some(FamilyDescriptor::new(Family::Wheel, vec![num(n)?]));
    }
    if let Some(n) = name.strip_prefix("C_") {
        return Some(FamilyDescriptor::new(Family::Cycle, vec![num(n)?]));
    }
    if let Some(inner) = name.strip_prefix("K_{").and_then(|s| s.strip_suffix('}')) {
        let parts = inner.split(',').map(num).collect::<Option<Vec<_>>>()?;
        return Some(FamilyDescriptor::new(Family::Multipartite, parts));
    }
    if let Some(n) = name.strip_prefix("K_") {
        return Some(FamilyDescriptor::new(Family::Complete, vec![num(n)?]));
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recognizes_generated_families() {
        let cases = [
            FamilyDescriptor::new(Family::Hypercube, vec![3]),
            FamilyDescriptor::new(Family::Folded, vec![4]),
            FamilyDescriptor::new(Family::Multipartite, vec![4, 4, 4, 4]),
            FamilyDescriptor::new(Family::Wheel, vec![8]),
            FamilyDescriptor::new(Family::CliqueProduct, vec![2, 4, 5]),
            FamilyDescriptor::new(Family::Complete, vec![6]),
            FamilyDescriptor::new(Family::Cycle, vec![7]),
        ];
        for d in cases {
            let g = d.build().unwrap();
            assert_eq!(FamilyDescriptor::recognize(&g), Some(d));
        }
    }

    #[test]
    fn name_alone_is_not_trusted() {
        let fake = graph::cycle(8).unwrap().with_name("Q_3");
        assert_eq!(FamilyDescriptor::recognize(&fake), None);
        let anon = graph::hypercube(3).unwrap().with_name("");
        assert_eq!(FamilyDescriptor::recognize(&anon), None);
    }

    #[test]
    fn arity_is_checked() {
        assert!(FamilyDescriptor::new(Family::Wheel, vec![])
            .build()
            .is_err());
        assert!(FamilyDescriptor::new(Family::Hypercube, vec![2, 3])
            .build()
            .is_err());
        assert!(FamilyDescriptor::new(Family::Custom, vec![])
            .build()
            .is_err());
    }

    #[test]
    fn descriptor_json() {
        let d: FamilyDescriptor =
            serde_json::from_str(r#"{"family":"clique_product","params":[4,4]}"#).unwrap();
        assert_eq!(d.build().unwrap().edge_count(), 48);
    }
}
