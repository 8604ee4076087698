use num_traits::{One, Signed, Zero};

use super::StudiableSystem;
use crate::arith::{
    maximize, strict_feasible, LinearProgram, LpOutcome, Rational, RationalMatrix,
    StrictFeasibilityProblem,
};
use crate::complexes::{fmt_set, VertexSet};
use crate::geometry::open_cones_meet;
use crate::{Check, Error, Result};

/// Two members whose open cones are disjoint, with a linear functional that
/// is nonnegative on `λ_p` (p ∈ first), nonpositive on `λ_q` (q ∈ second),
/// and not identically zero on them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImbWitness {
    pub first: VertexSet,
    pub second: VertexSet,
    pub separator: Vec<Rational>,
}

impl std::fmt::Display for ImbWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "open cones of {} and {} are disjoint",
            fmt_set(&self.first),
            fmt_set(&self.second)
        )
    }
}

fn check_dimensions(s: &StudiableSystem) -> Result<()> {
    let m = s.m();
    if let Some((j, v)) = s.lambda().iter().enumerate().find(|(_, v)| v.len() != m) {
        return Err(Error::Input(format!(
            "λ_{} has {} coordinates, expected M = {m}",
            j + 1,
            v.len()
        )));
    }
    Ok(())
}

/// For every member `P`, the vectors `λ_p` (p ∈ P) form a basis of `Q^M`.
/// The witness is the first member that fails.
pub fn check_gen(s: &StudiableSystem) -> Result<Check<VertexSet>> {
    check_dimensions(s)?;
    let m = s.m();
    if m == 0 {
        return Ok(Check::Holds);
    }
    for member in s.fundamental_set().members() {
        let det = RationalMatrix::from_columns(m, &s.member_vectors(member))?.det()?;
        if det.is_zero() {
            return Ok(Check::Fails(member.clone()));
        }
    }
    Ok(Check::Holds)
}

fn require_gen(s: &StudiableSystem) -> Result<()> {
    if let Check::Fails(member) = check_gen(s)? {
        return Err(Error::Precondition(format!(
            "imbrication needs (gen); the vectors of {} are not a basis",
            fmt_set(&member)
        )));
    }
    Ok(())
}

/// Unordered member pairs `P < Q`. The pair `P = Q` is satisfied under (gen).
fn pairs(s: &StudiableSystem) -> impl Iterator<Item = (&VertexSet, &VertexSet)> {
    let members = s.fundamental_set().members();
    members
        .iter()
        .enumerate()
        .flat_map(move |(i, p)| members[i + 1..].iter().map(move |q| (p, q)))
}

/// The relative interiors of `pos(λ_p, p ∈ P)` and `pos(λ_q, q ∈ Q)` meet for
/// every pair of members.
pub fn check_imb(s: &StudiableSystem) -> Result<Check<ImbWitness>> {
    require_gen(s)?;
    for (p, q) in pairs(s) {
        let a = s.member_vectors(p);
        let b = s.member_vectors(q);
        if open_cones_meet(s.m(), &a, &b)?.is_none() {
            let separator = separating_functional(s.m(), &a, &b)?.ok_or_else(|| {
                Error::TheoremViolation(format!(
                    "cones of {} and {} are disjoint but admit no separating functional",
                    fmt_set(p),
                    fmt_set(q)
                ))
            })?;
            return Ok(Check::Fails(ImbWitness {
                first: p.clone(),
                second: q.clone(),
                separator,
            }));
        }
    }
    Ok(Check::Holds)
}

/// The open simplices `Conv({0} ∪ {λ_p})` meet for every pair of members.
pub fn check_imb_tilde(s: &StudiableSystem) -> Result<Check<(VertexSet, VertexSet)>> {
    require_gen(s)?;
    for (p, q) in pairs(s) {
        let a = s.member_vectors(p);
        let b = s.member_vectors(q);
        let (np, nq) = (a.len(), b.len());
        let mut problem = StrictFeasibilityProblem::with_vars(np + nq);
        for i in 0..s.m() {
            let mut row: Vec<Rational> = a.iter().map(|v| v[i].clone()).collect();
            row.extend(b.iter().map(|v| -&v[i]));
            problem.add_equality(&row, Rational::zero())?;
        }
        for var in 0..np + nq {
            problem.require_positive(var);
        }
        let mut sum_t = vec![-Rational::one(); np];
        sum_t.resize(np + nq, Rational::zero());
        problem.add_strict_inequality(&sum_t, -Rational::one())?;
        let mut sum_s = vec![Rational::zero(); np];
        sum_s.resize(np + nq, -Rational::one());
        problem.add_strict_inequality(&sum_s, -Rational::one())?;
        if strict_feasible(&problem)?.is_none() {
            return Ok(Check::Fails((p.clone(), q.clone())));
        }
    }
    Ok(Check::Holds)
}

/// Finds `y` with `y.a_i >= 0`, `y.b_j <= 0` and not all zero, by maximizing
/// the total (capped at 1). This exists exactly when the open cones are
/// disjoint.
fn separating_functional(
    dim: usize,
    a: &[Vec<Rational>],
    b: &[Vec<Rational>],
) -> Result<Option<Vec<Rational>>> {
    let gens: Vec<Vec<Rational>> = a
        .iter()
        .cloned()
        .chain(b.iter().map(|v| v.iter().map(|c| -c).collect()))
        .collect();
    let k = gens.len();
    // Variables: y (dim, free), w (k, >= 0), u (>= 0).
    let vars = dim + k + 1;
    let mut rows = Vec::with_capacity(k + 1);
    let mut rhs = Vec::with_capacity(k + 1);
    for (i, g) in gens.iter().enumerate() {
        let mut row = vec![Rational::zero(); vars];
        for (j, c) in g.iter().enumerate() {
            row[j] = -c;
        }
        row[dim + i] = Rational::one();
        rows.push(row);
        rhs.push(Rational::zero());
    }
    let mut cap = vec![Rational::zero(); vars];
    for c in &mut cap[dim..] {
        *c = Rational::one();
    }
    rows.push(cap);
    rhs.push(Rational::one());
    let mut objective = vec![Rational::zero(); vars];
    for c in &mut objective[dim..dim + k] {
        *c = Rational::one();
    }
    let mut lower_bounds = vec![None; dim];
    lower_bounds.extend(std::iter::repeat_n(Some(Rational::zero()), k + 1));
    let outcome = maximize(&LinearProgram {
        objective,
        equalities: RationalMatrix::from_rows(vars, &rows)?,
        rhs,
        lower_bounds,
    })?;
    Ok(match outcome {
        LpOutcome::Optimal { value, point } if value.is_positive() => Some(point[..dim].to_vec()),
        _ => None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::complexes::{vset, FundamentalSet};
    use crate::fixtures;

    fn system(m: usize, members: &[&[usize]], lambda: &[&[i64]]) -> StudiableSystem {
        let fs = FundamentalSet::new(m, lambda.len(), members.iter().map(|p| p.iter().copied()))
            .unwrap();
        StudiableSystem::new(
            fs,
            lambda.iter().map(|v| v.iter().map(|&x| int(x)).collect()).collect(),
        )
        .unwrap()
    }

    fn dot(a: &[Rational], b: &[Rational]) -> Rational {
        a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
    }

    #[test]
    fn gen_examples() {
        assert!(check_gen(&fixtures::square_system()).unwrap().holds());
        let repeated = system(2, &[&[3, 4], &[1, 2]], &[&[1, 0], &[0, 1], &[1, 0], &[1, 0]]);
        assert_eq!(check_gen(&repeated).unwrap(), Check::Fails(vset(&[3, 4])));
        let zero = system(1, &[&[1]], &[&[0]]);
        assert!(!check_gen(&zero).unwrap().holds());
    }

    #[test]
    fn gen_rejects_wrong_dimension() {
        let bad = system(2, &[&[1, 2]], &[&[1, 0], &[0, 1, 0]]);
        assert!(matches!(check_gen(&bad), Err(Error::Input(_))));
    }

    #[test]
    fn imb_examples() {
        assert!(check_imb(&fixtures::square_system()).unwrap().holds());
        let w = check_imb(&fixtures::opposite_rays_system())
            .unwrap()
            .into_witness()
            .unwrap();
        assert_eq!((w.first, w.second), (vset(&[1]), vset(&[2])));
        let shared = system(2, &[&[1, 2], &[3, 4]], &[&[1, 0], &[0, 1], &[1, 1], &[-1, 1]]);
        assert!(check_imb(&shared).unwrap().holds());
    }

    #[test]
    fn separator_certifies_disjointness() {
        let s = system(2, &[&[1, 2], &[3, 4]], &[&[1, 0], &[1, 1], &[-1, 0], &[-1, -1]]);
        let w = check_imb(&s).unwrap().into_witness().unwrap();
        let pos: Vec<Rational> = w.first.iter().map(|&p| dot(&w.separator, &s.lambda()[p - 1])).collect();
        let neg: Vec<Rational> = w.second.iter().map(|&q| dot(&w.separator, &s.lambda()[q - 1])).collect();
        assert!(pos.iter().all(|v| !v.is_negative()));
        assert!(neg.iter().all(|v| !v.is_positive()));
        assert!(pos.iter().chain(&neg).any(|v| !v.is_zero()));
    }

    #[test]
    fn imb_tilde_examples() {
        assert!(check_imb_tilde(&fixtures::square_system()).unwrap().holds());
        assert!(!check_imb_tilde(&fixtures::opposite_rays_system()).unwrap().holds());
        let degenerate = system(1, &[&[1]], &[&[0]]);
        assert!(matches!(check_imb_tilde(&degenerate), Err(Error::Precondition(_))));
        assert!(matches!(check_imb(&degenerate), Err(Error::Precondition(_))));
    }
}
