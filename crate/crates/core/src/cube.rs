//! Vertex arithmetic in `Q_n`: Hamming distance, antipodes, reflected Gray
//! code and dimension-ordered routing.

use std::fmt;

use crate::error::{check_range, Error, Result};

/// Largest hypercube dimension representable by [`HypercubeVertex`].
pub const MAX_DIM: u32 = 31;

/// A vertex of `Q_dim`, stored as the integer whose binary expansion is the
/// coordinate string. Bit `k` is coordinate `k`, counted from the least
/// significant end.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HypercubeVertex {
    bits: u32,
    dim: u32,
}

impl HypercubeVertex {
    pub fn new(bits: u32, dim: u32) -> Result<Self> {
        check_range("hypercube dimension", dim as u64, 0, MAX_DIM as u64)?;
        check_range("hypercube vertex", bits as u64, 0, (1u64 << dim) - 1)?;
        Ok(Self { bits, dim })
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    pub fn dim(self) -> u32 {
        self.dim
    }

    /// All coordinates flipped.
    pub fn antipode(self) -> Self {
        Self {
            bits: self.bits ^ full_mask(self.dim),
            dim: self.dim,
        }
    }

    fn same_dim(self, other: Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }
}

impl fmt::Display for HypercubeVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dim == 0 {
            return f.write_str("ε");
        }
        write!(f, "{:0width$b}", self.bits, width = self.dim as usize)
    }
}

pub(crate) fn full_mask(dim: u32) -> u32 {
    ((1u64 << dim) - 1) as u32
}

/// Hamming distance, which is the graph distance in `Q_n`.
pub fn hamming_distance(x: HypercubeVertex, y: HypercubeVertex) -> Result<u32> {
    x.same_dim(y)?;
    Ok((x.bits ^ y.bits).count_ones())
}

/// Reflected binary code `i ^ (i >> 1)`.
pub fn gray_code(i: u32, n: u32) -> Result<HypercubeVertex> {
    check_range("hypercube dimension", n as u64, 1, MAX_DIM as u64)?;
    check_range("gray code index", i as u64, 0, (1u64 << n) - 1)?;
    Ok(HypercubeVertex {
        bits: gray(i),
        dim: n,
    })
}

#[inline]
pub(crate) fn gray(i: u32) -> u32 {
    i ^ (i >> 1)
}

/// e-cube route from `x` to `y`: differing coordinates are flipped in
/// ascending bit order. The returned path includes both endpoints.
pub fn ecube_route(x: HypercubeVertex, y: HypercubeVertex) -> Result<Vec<HypercubeVertex>> {
    x.same_dim(y)?;
    let mut path = Vec::with_capacity((x.bits ^ y.bits).count_ones() as usize + 1);
    path.push(x);
    for_each_route_edge(x.bits, y.bits, |_, next| {
        path.push(HypercubeVertex {
            bits: next,
            dim: x.dim,
        });
    });
    Ok(path)
}

/// Visits the hops `(from, to)` of the e-cube route between raw vertex ids.
#[inline]
pub(crate) fn for_each_route_edge(x: u32, y: u32, mut f: impl FnMut(u32, u32)) {
    let mut diff = x ^ y;
    let mut cur = x;
    while diff != 0 {
        let low = diff & diff.wrapping_neg();
        let next = cur ^ low;
        f(cur, next);
        cur = next;
        diff ^= low;
    }
}
