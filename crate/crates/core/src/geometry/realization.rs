use num_traits::{One, Zero};

use crate::arith::{Rational, RationalMatrix};
use crate::complexes::{fmt_set, SimplicialComplex, VertexSet};
use crate::{Error, Result};

/// Points `x_1..x_n` in `Q^{d+1}` attached to the vertices of a pure
/// `d`-dimensional complex, plus a distinguished base point.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Realization {
    complex: SimplicialComplex,
    points: Vec<Vec<Rational>>,
    base_point: Vec<Rational>,
}

impl Realization {
    /// `base_point` defaults to the origin.
    pub fn new(
        complex: SimplicialComplex,
        points: Vec<Vec<Rational>>,
        base_point: Option<Vec<Rational>>,
    ) -> Result<Self> {
        if !complex.is_pure() {
            return Err(Error::Input("realized complex must be pure".into()));
        }
        let d = complex.dimension();
        if d < 0 {
            return Err(Error::Input("cannot realize the empty complex".into()));
        }
        let ambient = d as usize + 1;
        if points.len() != complex.n() {
            return Err(Error::Input(format!(
                "{} points for {} vertices",
                points.len(),
                complex.n()
            )));
        }
        if let Some((j, p)) = points.iter().enumerate().find(|(_, p)| p.len() != ambient) {
            return Err(Error::Dimension(format!(
                "point {} has {} coordinates, expected {ambient}",
                j + 1,
                p.len()
            )));
        }
        let base_point = base_point.unwrap_or_else(|| vec![Rational::zero(); ambient]);
        if base_point.len() != ambient {
            return Err(Error::Dimension(format!(
                "base point has {} coordinates, expected {ambient}",
                base_point.len()
            )));
        }
        Ok(Self {
            complex,
            points,
            base_point,
        })
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn points(&self) -> &[Vec<Rational>] {
        &self.points
    }

    /// Position of vertex `v` (1-based).
    pub fn point(&self, v: usize) -> &[Rational] {
        &self.points[v - 1]
    }

    pub fn base_point(&self) -> &[Rational] {
        &self.base_point
    }

    /// The dimension `d` of the complex.
    pub fn dim(&self) -> usize {
        self.complex.dimension() as usize
    }

    /// `d + 1`.
    pub fn ambient_dim(&self) -> usize {
        self.dim() + 1
    }

    /// Shifts every point and the base point by `v`.
    pub fn translate(&self, v: &[Rational]) -> Result<Self> {
        if v.len() != self.ambient_dim() {
            return Err(Error::Dimension(format!(
                "translation by a vector of length {}",
                v.len()
            )));
        }
        let shift = |p: &Vec<Rational>| p.iter().zip(v).map(|(a, b)| a + b).collect();
        Ok(Self {
            complex: self.complex.clone(),
            points: self.points.iter().map(shift).collect(),
            base_point: shift(&self.base_point),
        })
    }

    /// Translate so that the base point is the origin.
    pub fn centered(&self) -> Self {
        let neg: Vec<Rational> = self.base_point.iter().map(|c| -c).collect();
        self.translate(&neg).expect("matching dimension")
    }

    /// Multiplies every coordinate (points and base point) by `factor`.
    pub fn scaled(&self, factor: &Rational) -> Self {
        let scale = |p: &Vec<Rational>| p.iter().map(|c| c * factor).collect();
        Self {
            complex: self.complex.clone(),
            points: self.points.iter().map(scale).collect(),
            base_point: scale(&self.base_point),
        }
    }

    pub fn with_points(&self, points: Vec<Vec<Rational>>) -> Result<Self> {
        Self::new(self.complex.clone(), points, Some(self.base_point.clone()))
    }

    /// Positions of the vertices of `face`, in label order.
    pub fn points_of(&self, facet: &VertexSet) -> Vec<Vec<Rational>> {
        facet.iter().map(|&v| self.points[v - 1].clone()).collect()
    }

    /// Affine form `phi_J(x) = constant + coeffs . x` of a facet.
    pub fn facet_form(&self, facet: &VertexSet) -> Result<(Rational, Vec<Rational>)> {
        let origin = vec![Rational::zero(); self.ambient_dim()];
        let constant = phi(self, facet, &origin)?;
        let mut coeffs = Vec::with_capacity(self.ambient_dim());
        for i in 0..self.ambient_dim() {
            let mut e = origin.clone();
            e[i] = Rational::one();
            coeffs.push(phi(self, facet, &e)? - &constant);
        }
        Ok((constant, coeffs))
    }
}

/// `det(p̃_{j1}, .., p̃_{j(d+1)}, x̃)` with `ỹ = (y, 1)`.
pub fn phi(r: &Realization, facet: &VertexSet, x: &[Rational]) -> Result<Rational> {
    let k = r.ambient_dim();
    if facet.len() != k {
        return Err(Error::Input(format!(
            "facet {} has {} vertices, expected {k}",
            fmt_set(facet),
            facet.len()
        )));
    }
    if let Some(&v) = facet.iter().find(|&&v| v == 0 || v > r.points.len()) {
        return Err(Error::Input(format!("vertex {v} is not realized")));
    }
    if x.len() != k {
        return Err(Error::Dimension(format!(
            "point of length {} in dimension {k}",
            x.len()
        )));
    }
    let homogenize = |p: &[Rational]| {
        let mut v = p.to_vec();
        v.push(Rational::one());
        v
    };
    let mut columns: Vec<Vec<Rational>> =
        facet.iter().map(|&v| homogenize(r.point(v))).collect();
    columns.push(homogenize(x));
    RationalMatrix::from_columns(k + 1, &columns)?.det()
}
