//! Ray casting from the origin: an oracle independent of the cone-separation
//! decision procedure.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Realization;
use crate::arith::{strict_feasible, Rational, RationalMatrix, StrictFeasibilityProblem};
use crate::{Error, Result};

/// Intersection of the open ray `{t u : t > 0}` with the realization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayCast {
    /// Distinct ray parameters `t` of the intersection points, ascending.
    pub hits: Vec<Rational>,
    /// Set when some facet's affine hull contains a segment of the ray; such
    /// contacts are reported here rather than counted.
    pub degenerate_contact: bool,
}

impl RayCast {
    pub fn count(&self) -> usize {
        self.hits.len()
    }
}

pub fn ray_cast(r: &Realization, u: &[Rational]) -> Result<RayCast> {
    let k = r.ambient_dim();
    if u.len() != k {
        return Err(Error::Dimension(format!(
            "direction of length {} in dimension {k}",
            u.len()
        )));
    }
    if u.iter().all(Zero::is_zero) {
        return Err(Error::Input("ray direction must be nonzero".into()));
    }
    let mut hits: Vec<Rational> = Vec::new();
    let mut degenerate_contact = false;
    for facet in r.complex().facets() {
        // Unknowns (mu_p for p in facet, t): sum mu_p x_p - t u = 0, sum mu_p = 1.
        let mut columns: Vec<Vec<Rational>> = facet
            .iter()
            .map(|&v| {
                let mut c = r.point(v).to_vec();
                c.push(Rational::one());
                c
            })
            .collect();
        let mut last: Vec<Rational> = u.iter().map(|c| -c).collect();
        last.push(Rational::zero());
        columns.push(last);
        let mut rhs = vec![Rational::zero(); k];
        rhs.push(Rational::one());
        let a = RationalMatrix::from_columns(k + 1, &columns)?;

        if a.det()?.is_zero() {
            // t is the last unknown: free, but strictly positive.
            let mut bounds = vec![Some(Rational::zero()); k];
            bounds.push(None);
            let problem = StrictFeasibilityProblem::new(a, rhs, bounds, [k])?;
            if strict_feasible(&problem)?.is_some() {
                degenerate_contact = true;
            }
            continue;
        }
        let solution = solve_square(&a, &rhs)?;
        let (mu, t) = solution.split_at(k);
        if mu.iter().all(|m| !m.is_negative()) && t[0].is_positive() && !hits.contains(&t[0]) {
            hits.push(t[0].clone());
        }
    }
    hits.sort();
    Ok(RayCast {
        hits,
        degenerate_contact,
    })
}

fn solve_square(a: &RationalMatrix, b: &[Rational]) -> Result<Vec<Rational>> {
    let n = a.rows();
    let rows: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row = a.row(i).to_vec();
            row.push(b[i].clone());
            row
        })
        .collect();
    let rref = RationalMatrix::from_rows(n + 1, &rows)?.rref();
    debug_assert_eq!(rref.pivots, (0..n).collect::<Vec<_>>());
    Ok((0..n).map(|i| rref.matrix[(i, n)].clone()).collect())
}

/// Deterministic primitive integer directions in `Z^dim`, by increasing
/// max-norm shell and lexicographically within a shell. May return fewer
/// than `count` when the dimension is 1.
pub fn sample_directions(dim: usize, count: usize) -> Vec<Vec<Rational>> {
    let mut out = Vec::new();
    if dim == 0 {
        return out;
    }
    if dim == 1 {
        return [-1i64, 1]
            .iter()
            .take(count)
            .map(|&v| vec![Rational::from_integer(BigInt::from(v))])
            .collect();
    }
    let mut radius: i64 = 1;
    while out.len() < count {
        let side = 2 * radius + 1;
        let total = (side as u64).pow(dim as u32);
        for idx in 0..total {
            let mut rem = idx;
            let coords: Vec<i64> = (0..dim)
                .map(|_| {
                    let c = (rem % side as u64) as i64 - radius;
                    rem /= side as u64;
                    c
                })
                .collect();
            if coords.iter().map(|c| c.abs()).max() != Some(radius) {
                continue;
            }
            let g = coords.iter().fold(0i64, |acc, &c| acc.gcd(&c));
            if g != 1 {
                continue;
            }
            out.push(
                coords
                    .into_iter()
                    .map(|c| Rational::from_integer(BigInt::from(c)))
                    .collect(),
            );
            if out.len() == count {
                break;
            }
        }
        radius += 1;
    }
    out
}
