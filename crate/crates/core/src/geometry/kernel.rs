use num_traits::{One, Signed, Zero};

use super::{is_starshaped_at_origin, phi, ray_cast, Realization, StarshapeDefect, WeakStarDefect};
use crate::arith::{format_rational, maximize, LinearProgram, LpOutcome, Rational, RationalMatrix};
use crate::complexes::{fmt_set, VertexSet};
use crate::{Check, Error, Result};

/// The open halfspace `sign * phi_J(x) > 0` of one facet, with
/// `phi_J(x) = constant + coeffs . x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetHalfspace {
    pub facet: VertexSet,
    pub constant: Rational,
    pub coeffs: Vec<Rational>,
    /// `+1` or `-1`.
    pub sign: i8,
}

impl FacetHalfspace {
    /// `sign * phi_J(q)`.
    pub fn slack(&self, q: &[Rational]) -> Rational {
        let value = self
            .coeffs
            .iter()
            .zip(q)
            .fold(self.constant.clone(), |acc, (a, x)| acc + a * x);
        if self.sign < 0 {
            -value
        } else {
            value
        }
    }
}

/// The kernel (center) of a starshaped realization as an intersection of
/// open halfspaces, with an interior witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelDescription {
    pub halfspaces: Vec<FacetHalfspace>,
    /// A point maximizing the smallest slack.
    pub witness: Option<Vec<Rational>>,
}

impl KernelDescription {
    pub fn contains(&self, q: &[Rational]) -> bool {
        self.halfspaces.iter().all(|h| h.slack(q).is_positive())
    }
}

/// Computes the kernel of `r`, orienting each facet by the side the seed is on.
pub fn kernel(r: &Realization, seed: &[Rational]) -> Result<KernelDescription> {
    let k = r.ambient_dim();
    if seed.len() != k {
        return Err(Error::Dimension(format!(
            "seed of length {} in dimension {k}",
            seed.len()
        )));
    }
    let mut halfspaces = Vec::with_capacity(r.complex().facets().len());
    for facet in r.complex().facets() {
        let at_seed = phi(r, facet, seed)?;
        if at_seed.is_zero() {
            return Err(Error::Orientation(format!(
                "seed lies on the hyperplane of facet {}",
                fmt_set(facet)
            )));
        }
        let (constant, coeffs) = r.facet_form(facet)?;
        halfspaces.push(FacetHalfspace {
            facet: facet.clone(),
            constant,
            coeffs,
            sign: if at_seed.is_positive() { 1 } else { -1 },
        });
    }

    let neg: Vec<Rational> = seed.iter().map(|c| -c).collect();
    let shifted = r.translate(&neg)?;
    if let Check::Fails(defect) = is_starshaped_at_origin(&shifted)? {
        return Err(Error::Precondition(diagnose(&shifted, &defect)?));
    }

    let witness = max_min_slack(&halfspaces, k)?;
    debug_assert!(witness.iter().all(|h| KernelDescription {
        halfspaces: halfspaces.clone(),
        witness: None
    }
    .contains(h)));
    Ok(KernelDescription {
        halfspaces,
        witness,
    })
}

fn diagnose(centered: &Realization, defect: &StarshapeDefect) -> Result<String> {
    Ok(match defect {
        StarshapeDefect::Weak(WeakStarDefect::Overlap(w)) => {
            let hits = ray_cast(centered, &w.point)?.count();
            let coords: Vec<String> = w.point.iter().map(format_rational).collect();
            format!(
                "seed is not a center: {w}; the ray from the seed along ({}) meets the realization {hits} times",
                coords.join(", ")
            )
        }
        StarshapeDefect::Weak(WeakStarDefect::NotSimplicial(f)) => {
            format!("seed is not a center: facet {} is coplanar with the seed", fmt_set(f))
        }
        StarshapeDefect::NotPseudomanifold(p) => {
            format!("complex is not a pseudomanifold: {p:?}")
        }
    })
}

/// Maximizes `e` subject to `slack_J(x) >= e` for all `J`. Variables are
/// `x` (free), `e` (free) and one nonnegative surplus per facet.
fn max_min_slack(halfspaces: &[FacetHalfspace], k: usize) -> Result<Option<Vec<Rational>>> {
    let solve = |cap: bool| -> Result<LpOutcome> {
        let m = halfspaces.len();
        let vars = k + 1 + m + usize::from(cap);
        let mut rows = Vec::with_capacity(m + 1);
        let mut rhs = Vec::with_capacity(m + 1);
        for (i, h) in halfspaces.iter().enumerate() {
            let s = if h.sign < 0 { -Rational::one() } else { Rational::one() };
            let mut row = vec![Rational::zero(); vars];
            for (j, a) in h.coeffs.iter().enumerate() {
                row[j] = &s * a;
            }
            row[k] = -Rational::one();
            row[k + 1 + i] = -Rational::one();
            rows.push(row);
            rhs.push(-(&s * &h.constant));
        }
        if cap {
            let mut row = vec![Rational::zero(); vars];
            row[k] = Rational::one();
            row[vars - 1] = Rational::one();
            rows.push(row);
            rhs.push(Rational::one());
        }
        let mut objective = vec![Rational::zero(); vars];
        objective[k] = Rational::one();
        let mut lower_bounds = vec![None; k + 1];
        lower_bounds.extend(std::iter::repeat_n(Some(Rational::zero()), vars - k - 1));
        maximize(&LinearProgram {
            objective,
            equalities: RationalMatrix::from_rows(vars, &rows)?,
            rhs,
            lower_bounds,
        })
    };
    let outcome = match solve(false)? {
        LpOutcome::Unbounded => solve(true)?,
        other => other,
    };
    Ok(match outcome {
        LpOutcome::Optimal { value, point } if value.is_positive() => Some(point[..k].to_vec()),
        _ => None,
    })
}
