//! Linear Gale transforms.
//!
//! For a configuration `X = (x_1..x_n)` spanning `Q^d`, the transform is read
//! off the canonical kernel basis `k_1..k_m` (with `m = n - d`) of the `d x n`
//! configuration matrix: the `j`-th Gale vector is `(k_1[j], .., k_m[j])`.
//! Any other choice of kernel basis gives a linearly isomorphic family; this
//! one is fixed so that results are reproducible.

use num_traits::Zero;

use crate::arith::{Rational, RationalMatrix};
use crate::{Check, Error, Result};

/// Default bound on `n` for the exhaustive duality check (2^n subsets).
pub const DEFAULT_DUALITY_BOUND: usize = 12;

/// An ordered family of `n` vectors in `Q^dim`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VectorConfiguration {
    dim: usize,
    points: Vec<Vec<Rational>>,
}

impl VectorConfiguration {
    pub fn new(dim: usize, points: Vec<Vec<Rational>>) -> Result<Self> {
        if let Some((j, p)) = points.iter().enumerate().find(|(_, p)| p.len() != dim) {
            return Err(Error::Dimension(format!(
                "point {} has {} coordinates, expected {dim}",
                j + 1,
                p.len()
            )));
        }
        Ok(Self { dim, points })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<Rational>] {
        &self.points
    }

    /// The `dim x n` matrix whose columns are the points.
    pub fn matrix(&self) -> RationalMatrix {
        RationalMatrix::from_columns(self.dim, &self.points).expect("validated lengths")
    }

    pub fn rank(&self) -> usize {
        self.matrix().rank()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaleTransform {
    /// Dimension of the dual space, `n - source_rank`.
    pub dim: usize,
    pub vectors: Vec<Vec<Rational>>,
    pub source_rank: usize,
}

impl GaleTransform {
    pub fn as_configuration(&self) -> VectorConfiguration {
        VectorConfiguration {
            dim: self.dim,
            points: self.vectors.clone(),
        }
    }
}

/// Computes the canonical linear Gale transform of a spanning configuration.
pub fn gale_transform(x: &VectorConfiguration) -> Result<GaleTransform> {
    let matrix = x.matrix();
    let rank = matrix.rank();
    if rank < x.dim {
        return Err(Error::Rank {
            rank,
            expected: x.dim,
        });
    }
    let kernel = matrix.kernel_basis();
    let vectors = (0..x.len())
        .map(|j| kernel.iter().map(|k| k[j].clone()).collect())
        .collect();
    Ok(GaleTransform {
        dim: kernel.len(),
        vectors,
        source_rank: rank,
    })
}

/// Which half of the duality statement a subset violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualityPart {
    /// `X(I)` independent iff `X̄(V \ I)` spans.
    IndependenceSpanning,
    /// `X(I)` a basis iff `X̄(V \ I)` a basis.
    BasisBasis,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityViolation {
    /// The subset `I` (1-based indices).
    pub subset: Vec<usize>,
    pub part: DualityPart,
}

fn rank_of(dim: usize, vectors: &[Vec<Rational>], mask: u64) -> usize {
    let chosen: Vec<Vec<Rational>> = vectors
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, v)| v.clone())
        .collect();
    if chosen.is_empty() || dim == 0 {
        return 0;
    }
    RationalMatrix::from_columns(dim, &chosen)
        .expect("uniform lengths")
        .rank()
}

/// Bitmasks of every subset whose vectors are linearly independent.
pub fn independent_subsets(dim: usize, vectors: &[Vec<Rational>]) -> Vec<u64> {
    assert!(vectors.len() < 64, "subset masks hold at most 63 vectors");
    (0u64..(1u64 << vectors.len()))
        .filter(|&mask| rank_of(dim, vectors, mask) == mask.count_ones() as usize)
        .collect()
}

/// Exhaustively checks the duality between `x` and `g` over all subsets,
/// for `n <= DEFAULT_DUALITY_BOUND`.
pub fn verify_gale_duality(
    x: &VectorConfiguration,
    g: &GaleTransform,
) -> Result<Check<DualityViolation>> {
    verify_gale_duality_bounded(x, g, DEFAULT_DUALITY_BOUND)
}

pub fn verify_gale_duality_bounded(
    x: &VectorConfiguration,
    g: &GaleTransform,
    max_n: usize,
) -> Result<Check<DualityViolation>> {
    let n = x.len();
    if g.vectors.len() != n {
        return Err(Error::Input(format!(
            "{} Gale vectors for {n} points",
            g.vectors.len()
        )));
    }
    if let Some(v) = g.vectors.iter().find(|v| v.len() != g.dim) {
        return Err(Error::Input(format!(
            "Gale vector of length {} in dimension {}",
            v.len(),
            g.dim
        )));
    }
    if n > max_n || n >= 64 {
        return Err(Error::Budget(format!(
            "exhaustive duality check limited to n <= {max_n}, got {n}"
        )));
    }
    let full = (1u64 << n) - 1;
    for mask in 0..=full {
        let size = mask.count_ones() as usize;
        let co_size = n - size;
        let independent = rank_of(x.dim, &x.points, mask) == size;
        let spans = rank_of(g.dim, &g.vectors, full ^ mask) == g.dim;
        let violation = if independent != spans {
            Some(DualityPart::IndependenceSpanning)
        } else {
            let basis = independent && size == x.dim;
            let dual_basis = spans && co_size == g.dim;
            (basis != dual_basis).then_some(DualityPart::BasisBasis)
        };
        if let Some(part) = violation {
            let subset = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
            return Ok(Check::Fails(DualityViolation { subset, part }));
        }
    }
    Ok(Check::Holds)
}

/// True when every Gale vector is the zero vector of a 0-dimensional space.
pub fn is_trivial(g: &GaleTransform) -> bool {
    g.dim == 0 && g.vectors.iter().all(|v| v.iter().all(Zero::is_zero))
}
