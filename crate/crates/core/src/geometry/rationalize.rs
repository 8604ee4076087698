use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{is_starshaped_at_origin, kernel, phi, Realization};
use crate::arith::{denominator_lcm, format_rational, limit_denominator, Rational};
use crate::complexes::{fmt_set, SimplicialComplex};
use crate::{Check, Error, Result};

pub const DEFAULT_MAX_DENOMINATOR: u64 = 1_000_000;

/// `sign(phi_J(0))` for every facet, in facet order.
pub fn facet_sign_vector(r: &Realization) -> Result<Vec<i8>> {
    let origin = vec![Rational::zero(); r.ambient_dim()];
    r.complex()
        .facets()
        .iter()
        .map(|f| {
            let v = phi(r, f, &origin)?;
            Ok(if v.is_positive() {
                1
            } else if v.is_negative() {
                -1
            } else {
                0
            })
        })
        .collect()
}

fn denominator_bounds(max_denominator: u64) -> Vec<BigInt> {
    let mut bounds = Vec::new();
    let mut b: u64 = 1;
    while b < max_denominator {
        bounds.push(BigInt::from(b));
        b = b.saturating_mul(10);
    }
    bounds.push(BigInt::from(max_denominator.max(1)));
    bounds
}

/// Smallest oriented value `sign_J * phi_J(0)` over the facets.
fn margin(r: &Realization, signs: &[i8]) -> Result<Rational> {
    let origin = vec![Rational::zero(); r.ambient_dim()];
    let mut best: Option<Rational> = None;
    for (f, &s) in r.complex().facets().iter().zip(signs) {
        let v = phi(r, f, &origin)? * Rational::from_integer(BigInt::from(s));
        best = Some(match best {
            Some(b) if b <= v => b,
            _ => v,
        });
    }
    Ok(best.unwrap_or_else(Rational::zero))
}

/// Rounds approximate (exactly read decimal) points to an integer
/// realization starshaped at the origin with the same facet orientations.
///
/// Coordinates are replaced by their best approximations with denominator at
/// most 1, 10, 100, .. up to `max_denominator`. The first candidate that keeps
/// every facet sign and passes [`is_starshaped_at_origin`] is scaled by the
/// common denominator and returned.
pub fn rationalize(
    approx_points: &[Vec<Rational>],
    complex: &SimplicialComplex,
    max_denominator: u64,
) -> Result<Realization> {
    let input = Realization::new(complex.clone(), approx_points.to_vec(), None)?;
    let signs = facet_sign_vector(&input)?;
    if let Some(i) = signs.iter().position(|&s| s == 0) {
        return Err(Error::Degenerate(format!(
            "the hyperplane of facet {} passes through the origin",
            fmt_set(&complex.facets()[i])
        )));
    }
    let mut best: Option<Rational> = None;
    for bound in denominator_bounds(max_denominator) {
        let points: Vec<Vec<Rational>> = approx_points
            .iter()
            .map(|p| p.iter().map(|c| limit_denominator(c, &bound)).collect())
            .collect();
        let candidate = input.with_points(points)?;
        if facet_sign_vector(&candidate)? == signs
            && is_starshaped_at_origin(&candidate)?.holds()
        {
            let scale = denominator_lcm(candidate.points().iter().flatten());
            let out = candidate.scaled(&Rational::from_integer(scale));
            debug_assert_eq!(facet_sign_vector(&out)?, signs);
            return Ok(out);
        }
        let m = margin(&candidate, &signs)?;
        if best.as_ref().is_none_or(|b| *b < m) {
            best = Some(m);
        }
    }
    Err(Error::Budget(format!(
        "no verified rounding with denominator at most {max_denominator}; best margin {}",
        format_rational(&best.unwrap_or_else(Rational::zero))
    )))
}

/// An integer realization with the origin in its kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeRealization {
    pub realization: Realization,
    /// The factor applied after centering.
    pub scale: BigInt,
    /// A lattice point of the kernel: the rounded LP witness when it
    /// verifies, otherwise the origin.
    pub kernel_point: Vec<Rational>,
}

/// Moves the base point to the origin and clears denominators.
pub fn normalize_to_lattice(r: &Realization) -> Result<LatticeRealization> {
    let centered = r.centered();
    if let Check::Fails(defect) = is_starshaped_at_origin(&centered)? {
        return Err(Error::Precondition(format!(
            "realization is not starshaped at its base point: {defect:?}"
        )));
    }
    let scale = denominator_lcm(centered.points().iter().flatten());
    let realization = centered.scaled(&Rational::from_integer(scale.clone()));
    let k = realization.ambient_dim();
    let origin = vec![Rational::zero(); k];
    let kd = kernel(&realization, &origin)?;
    let kernel_point = kd
        .witness
        .as_ref()
        .map(|w| w.iter().map(round_half_up).collect::<Vec<_>>())
        .filter(|q| kd.contains(q))
        .unwrap_or(origin);
    Ok(LatticeRealization {
        realization,
        scale,
        kernel_point,
    })
}

fn round_half_up(x: &Rational) -> Rational {
    let shifted = x + Rational::new(BigInt::one(), BigInt::from(2));
    Rational::from_integer(shifted.numer().div_floor(shifted.denom()))
}
