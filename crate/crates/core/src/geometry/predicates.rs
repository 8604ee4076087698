use num_traits::Zero;

use super::Realization;
use crate::arith::{strict_feasible, Rational, RationalMatrix, StrictFeasibilityProblem};
use crate::complexes::{fmt_set, PseudomanifoldDefect, VertexSet};
use crate::{Check, Error, Result};

/// Two distinct faces whose open cones meet, with a common point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SepWitness {
    pub first: VertexSet,
    pub second: VertexSet,
    pub point: Vec<Rational>,
}

impl std::fmt::Display for SepWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "open cones of {} and {} meet",
            fmt_set(&self.first),
            fmt_set(&self.second)
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeakStarDefect {
    /// A facet whose points are not a basis.
    NotSimplicial(VertexSet),
    Overlap(SepWitness),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StarshapeDefect {
    Weak(WeakStarDefect),
    NotPseudomanifold(PseudomanifoldDefect),
}

/// Every facet's points form a basis of `Q^{d+1}`. The witness is the first
/// facet (lexicographically) that does not.
pub fn check_simpl(r: &Realization) -> Check<VertexSet> {
    let k = r.ambient_dim();
    r.complex()
        .facets()
        .iter()
        .find(|facet| {
            let m = RationalMatrix::from_columns(k, &r.points_of(facet))
                .expect("realization points have ambient length");
            m.det().expect("square").is_zero()
        })
        .cloned()
        .into()
}

/// Open cones of distinct nonempty faces are pairwise disjoint.
///
/// Requires (simpl), under which the relative interior of a face's cone is
/// exactly the set of strictly positive combinations of its points. A pair
/// of faces lying in a common facet is disjoint without solving anything:
/// that facet's points are independent, so equal combinations force equal
/// coefficients. Every other pair is decided by an exact strict-feasibility
/// solve.
pub fn check_sep(r: &Realization) -> Result<Check<SepWitness>> {
    if let Check::Fails(facet) = check_simpl(r) {
        return Err(Error::Precondition(format!(
            "cone separation needs independent facets; {} is degenerate",
            fmt_set(&facet)
        )));
    }
    let faces = r.complex().nonempty_faces();
    for (i, first) in faces.iter().enumerate() {
        for second in &faces[i + 1..] {
            let union: VertexSet = first.union(second).copied().collect();
            if r.complex().contains_face(&union) {
                continue;
            }
            if let Some(point) = open_cones_meet(r.ambient_dim(), &r.points_of(first), &r.points_of(second))? {
                return Ok(Check::Fails(SepWitness {
                    first: first.clone(),
                    second: second.clone(),
                    point,
                }));
            }
        }
    }
    Ok(Check::Holds)
}

/// Solves `sum t_p a_p = sum s_q b_q` with all `t, s > 0`; returns the common
/// point when feasible.
pub(crate) fn open_cones_meet(
    dim: usize,
    a: &[Vec<Rational>],
    b: &[Vec<Rational>],
) -> Result<Option<Vec<Rational>>> {
    let vars = a.len() + b.len();
    let mut columns: Vec<Vec<Rational>> = a.to_vec();
    columns.extend(b.iter().map(|v| v.iter().map(|c| -c).collect()));
    let equalities = RationalMatrix::from_columns(dim, &columns)?;
    let problem = StrictFeasibilityProblem::new(
        equalities,
        vec![Rational::zero(); dim],
        vec![None; vars],
        0..vars,
    )?;
    Ok(strict_feasible(&problem)?.map(|w| {
        (0..dim)
            .map(|i| {
                a.iter()
                    .zip(&w)
                    .fold(Rational::zero(), |acc, (p, t)| acc + &p[i] * t)
            })
            .collect()
    }))
}

/// (simpl) and (Sep): exactly weak starshapedness at the origin.
pub fn check_weakly_starshaped(r: &Realization) -> Result<Check<WeakStarDefect>> {
    if let Check::Fails(facet) = check_simpl(r) {
        return Ok(Check::Fails(WeakStarDefect::NotSimplicial(facet)));
    }
    Ok(check_sep(r)?.map_witness(WeakStarDefect::Overlap))
}

/// Weakly starshaped at the origin and the complex is a pseudomanifold:
/// every ray from the origin meets the realization exactly once.
pub fn is_starshaped_at_origin(r: &Realization) -> Result<Check<StarshapeDefect>> {
    if let Check::Fails(defect) = check_weakly_starshaped(r)? {
        return Ok(Check::Fails(StarshapeDefect::Weak(defect)));
    }
    Ok(r
        .complex()
        .is_pseudomanifold()?
        .map_witness(StarshapeDefect::NotPseudomanifold))
}
