//! Exact two-phase simplex with Bland's rule, and strict feasibility on top
//! of it.
//!
//! Strict inequalities are never approximated by an epsilon constant. A
//! homogeneous system whose strict variables may be rescaled is solved with
//! those variables bounded below by 1; any other system is decided by
//! maximizing a common slack `e` (capped at 1) and testing `e* > 0`.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use num_traits::{One, Signed, Zero};

use super::matrix::RationalMatrix;
use super::rational::Rational;
use crate::{Error, Result};

/// Environment variable capping the number of simplex pivots per solve.
pub const MAX_PIVOTS_ENV: &str = "STARFAN_MAX_PIVOTS";

/// Pivot cap read once from [`MAX_PIVOTS_ENV`]; `None` means unlimited.
pub fn max_pivots() -> Option<usize> {
    static CAP: OnceLock<Option<usize>> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var(MAX_PIVOTS_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
    })
}

/// `maximize objective . z` subject to `equalities * z = rhs` and
/// `z_i >= lower_bounds[i]` where a bound is present (free otherwise).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearProgram {
    pub objective: Vec<Rational>,
    pub equalities: RationalMatrix,
    pub rhs: Vec<Rational>,
    pub lower_bounds: Vec<Option<Rational>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { value: Rational, point: Vec<Rational> },
    Infeasible,
    Unbounded,
}

impl LinearProgram {
    fn validate(&self) -> Result<()> {
        let n = self.equalities.cols();
        if self.objective.len() != n || self.lower_bounds.len() != n {
            return Err(Error::Input(format!(
                "linear program with {n} columns but {} objective entries and {} bounds",
                self.objective.len(),
                self.lower_bounds.len()
            )));
        }
        if self.rhs.len() != self.equalities.rows() {
            return Err(Error::Input(format!(
                "{} right-hand sides for {} equalities",
                self.rhs.len(),
                self.equalities.rows()
            )));
        }
        Ok(())
    }
}

/// Solves a linear program exactly.
pub fn maximize(lp: &LinearProgram) -> Result<LpOutcome> {
    lp.validate()?;
    let a = &lp.equalities;
    let (m, n) = (a.rows(), a.cols());

    // Standard form: z_i = l_i + y_k (bounded) or z_i = y_k - y_{k+1} (free).
    let mut columns: Vec<(usize, bool)> = Vec::new(); // (original var, negated)
    for (i, bound) in lp.lower_bounds.iter().enumerate() {
        columns.push((i, false));
        if bound.is_none() {
            columns.push((i, true));
        }
    }
    let width = columns.len();
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for r in 0..m {
        let row = a.row(r);
        let mut rhs = lp.rhs[r].clone();
        for (i, bound) in lp.lower_bounds.iter().enumerate() {
            if let Some(l) = bound {
                if !row[i].is_zero() && !l.is_zero() {
                    rhs -= &row[i] * l;
                }
            }
        }
        let mut t: Vec<Rational> = columns
            .iter()
            .map(|&(i, neg)| if neg { -row[i].clone() } else { row[i].clone() })
            .collect();
        t.push(rhs);
        rows.push(t);
    }
    let cost: Vec<Rational> = columns
        .iter()
        .map(|&(i, neg)| {
            if neg {
                -lp.objective[i].clone()
            } else {
                lp.objective[i].clone()
            }
        })
        .collect();
    let offset = lp
        .lower_bounds
        .iter()
        .zip(&lp.objective)
        .filter_map(|(b, c)| b.as_ref().map(|l| l * c))
        .fold(Rational::zero(), |acc, v| acc + v);

    let mut tableau = Tableau::new(rows, width, max_pivots());
    match tableau.solve(&cost)? {
        Phase::Infeasible => Ok(LpOutcome::Infeasible),
        Phase::Unbounded => Ok(LpOutcome::Unbounded),
        Phase::Optimal(value) => {
            let y = tableau.primal(width);
            let mut point: Vec<Rational> = lp
                .lower_bounds
                .iter()
                .map(|b| b.clone().unwrap_or_else(Rational::zero))
                .collect();
            for (k, &(i, neg)) in columns.iter().enumerate() {
                if neg {
                    point[i] -= &y[k];
                } else {
                    point[i] += &y[k];
                }
            }
            debug_assert_eq!(point.len(), n);
            Ok(LpOutcome::Optimal {
                value: value + offset,
                point,
            })
        }
    }
}

enum Phase {
    Optimal(Rational),
    Infeasible,
    Unbounded,
}

/// Dense tableau for `A y = b, y >= 0`.
struct Tableau {
    rows: Vec<Vec<Rational>>, // each row: coefficients then rhs
    basis: Vec<usize>,
    width: usize, // number of structural + artificial columns
    pivots: usize,
    pivot_cap: Option<usize>,
}

impl Tableau {
    fn new(mut rows: Vec<Vec<Rational>>, structural: usize, pivot_cap: Option<usize>) -> Self {
        let m = rows.len();
        // Nonnegative right-hand sides, then one artificial per row.
        for row in rows.iter_mut() {
            if row[structural].is_negative() {
                for v in row.iter_mut() {
                    *v = -v.clone();
                }
            }
            let rhs = row.pop().expect("row has rhs");
            row.extend((0..m).map(|_| Rational::zero()));
            row.push(rhs);
        }
        for (r, row) in rows.iter_mut().enumerate() {
            row[structural + r] = Rational::one();
        }
        Self {
            rows,
            basis: (structural..structural + m).collect(),
            width: structural + m,
            pivots: 0,
            pivot_cap,
        }
    }

    fn rhs(&self, r: usize) -> &Rational {
        &self.rows[r][self.width]
    }

    fn solve(&mut self, cost: &[Rational]) -> Result<Phase> {
        let structural = cost.len();
        // Phase one: maximize -(sum of artificials).
        let mut phase_one = vec![Rational::zero(); self.width];
        for c in phase_one.iter_mut().skip(structural) {
            *c = -Rational::one();
        }
        match self.run(&phase_one, self.width)? {
            Phase::Optimal(v) if v.is_zero() => {}
            Phase::Optimal(_) => return Ok(Phase::Infeasible),
            Phase::Infeasible | Phase::Unbounded => unreachable!("phase one is bounded"),
        }
        // Drive remaining (zero-valued) artificials out of the basis.
        let mut r = 0;
        while r < self.rows.len() {
            if self.basis[r] >= structural {
                match (0..structural).find(|&j| !self.rows[r][j].is_zero()) {
                    Some(j) => self.pivot(r, j)?,
                    None => {
                        // Redundant equality.
                        self.rows.remove(r);
                        self.basis.remove(r);
                        continue;
                    }
                }
            }
            r += 1;
        }
        for row in self.rows.iter_mut() {
            let rhs = row.pop().expect("row has rhs");
            row.truncate(structural);
            row.push(rhs);
        }
        self.width = structural;
        self.run(cost, structural)
    }

    /// Primal simplex with Bland's rule over columns `< allowed`.
    fn run(&mut self, cost: &[Rational], allowed: usize) -> Result<Phase> {
        // reduced[j] = c_B B^-1 A_j - c_j; optimal when all >= 0.
        let mut reduced: Vec<Rational> = cost.iter().map(|c| -c.clone()).collect();
        reduced.push(Rational::zero());
        for (r, &b) in self.basis.iter().enumerate() {
            if cost[b].is_zero() {
                continue;
            }
            for (j, v) in self.rows[r].iter().enumerate() {
                if !v.is_zero() {
                    reduced[j] += &cost[b] * v;
                }
            }
        }
        loop {
            let Some(enter) = (0..allowed).find(|&j| reduced[j].is_negative()) else {
                return Ok(Phase::Optimal(reduced[self.width].clone()));
            };
            let mut leave: Option<(usize, Rational)> = None;
            for r in 0..self.rows.len() {
                let coef = &self.rows[r][enter];
                if !coef.is_positive() {
                    continue;
                }
                let ratio = self.rhs(r) / coef;
                let better = match &leave {
                    None => true,
                    Some((best_r, best)) => {
                        ratio < *best || (ratio == *best && self.basis[r] < self.basis[*best_r])
                    }
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
            let Some((r, _)) = leave else {
                return Ok(Phase::Unbounded);
            };
            self.pivot(r, enter)?;
            let f = reduced[enter].clone();
            for (j, v) in self.rows[r].iter().enumerate() {
                if !v.is_zero() {
                    reduced[j] -= &f * v;
                }
            }
        }
    }

    fn pivot(&mut self, r: usize, c: usize) -> Result<()> {
        self.pivots += 1;
        if let Some(cap) = self.pivot_cap {
            if self.pivots > cap {
                return Err(Error::PivotLimit(cap));
            }
        }
        let inv = self.rows[r][c].recip();
        for v in self.rows[r].iter_mut() {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
        }
        self.basis[r] = c;
        Ok(())
    }

    fn primal(&self, structural: usize) -> Vec<Rational> {
        let mut y = vec![Rational::zero(); structural];
        for (r, &b) in self.basis.iter().enumerate() {
            if b < structural {
                y[b] = self.rhs(r).clone();
            }
        }
        y
    }
}

/// A system of linear equalities over variables `z`, with optional lower
/// bounds and a set of variables required to be strictly positive.
///
/// General strict inequalities `c . z > b` are expressed with an auxiliary
/// strictly positive slack (see [`StrictFeasibilityProblem::add_strict_inequality`]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrictFeasibilityProblem {
    num_vars: usize,
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    lower_bounds: Vec<Option<Rational>>,
    strict_positive: BTreeSet<usize>,
}

impl StrictFeasibilityProblem {
    /// Validated constructor from the raw parts.
    pub fn new(
        equalities: RationalMatrix,
        rhs: Vec<Rational>,
        lower_bounds: Vec<Option<Rational>>,
        strict_positive: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        let n = equalities.cols();
        if rhs.len() != equalities.rows() {
            return Err(Error::Input(format!(
                "{} right-hand sides for {} equalities",
                rhs.len(),
                equalities.rows()
            )));
        }
        if lower_bounds.len() != n {
            return Err(Error::Input(format!(
                "{} lower bounds for {n} variables",
                lower_bounds.len()
            )));
        }
        let strict_positive: BTreeSet<usize> = strict_positive.into_iter().collect();
        if let Some(&bad) = strict_positive.iter().find(|&&i| i >= n) {
            return Err(Error::Input(format!("strict variable {bad} out of range")));
        }
        Ok(Self {
            num_vars: n,
            rows: (0..equalities.rows())
                .map(|r| equalities.row(r).to_vec())
                .collect(),
            rhs,
            lower_bounds,
            strict_positive,
        })
    }

    /// An unconstrained system over `num_vars` free variables.
    pub fn with_vars(num_vars: usize) -> Self {
        Self {
            num_vars,
            rows: Vec::new(),
            rhs: Vec::new(),
            lower_bounds: vec![None; num_vars],
            strict_positive: BTreeSet::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn add_var(&mut self) -> usize {
        self.num_vars += 1;
        self.lower_bounds.push(None);
        for row in self.rows.iter_mut() {
            row.push(Rational::zero());
        }
        self.num_vars - 1
    }

    /// Adds `coeffs . z = rhs`; `coeffs` may be shorter than the variable
    /// count (missing entries are zero).
    pub fn add_equality(&mut self, coeffs: &[Rational], rhs: Rational) -> Result<()> {
        if coeffs.len() > self.num_vars {
            return Err(Error::Input(format!(
                "{} coefficients for {} variables",
                coeffs.len(),
                self.num_vars
            )));
        }
        let mut row = coeffs.to_vec();
        row.resize(self.num_vars, Rational::zero());
        self.rows.push(row);
        self.rhs.push(rhs);
        Ok(())
    }

    pub fn set_lower_bound(&mut self, var: usize, bound: Rational) {
        self.lower_bounds[var] = Some(bound);
    }

    pub fn require_positive(&mut self, var: usize) {
        assert!(var < self.num_vars, "variable {var} out of range");
        self.strict_positive.insert(var);
    }

    /// Adds `coeffs . z > rhs` through a new slack `w > 0` with
    /// `coeffs . z - w = rhs`. Returns the slack's index.
    pub fn add_strict_inequality(&mut self, coeffs: &[Rational], rhs: Rational) -> Result<usize> {
        let mut row = coeffs.to_vec();
        let w = self.add_var();
        row.resize(self.num_vars, Rational::zero());
        row[w] = -Rational::one();
        self.add_equality(&row, rhs)?;
        self.require_positive(w);
        Ok(w)
    }

    /// Adds `coeffs . z >= rhs` through a new slack `w >= 0`.
    pub fn add_inequality(&mut self, coeffs: &[Rational], rhs: Rational) -> Result<usize> {
        let mut row = coeffs.to_vec();
        let w = self.add_var();
        row.resize(self.num_vars, Rational::zero());
        row[w] = -Rational::one();
        self.add_equality(&row, rhs)?;
        self.set_lower_bound(w, Rational::zero());
        Ok(w)
    }

    pub fn equalities(&self) -> RationalMatrix {
        RationalMatrix::from_rows(self.num_vars, &self.rows).expect("rows padded to width")
    }

    pub fn rhs(&self) -> &[Rational] {
        &self.rhs
    }

    pub fn lower_bounds(&self) -> &[Option<Rational>] {
        &self.lower_bounds
    }

    pub fn strict_positive(&self) -> &BTreeSet<usize> {
        &self.strict_positive
    }

    /// True when every constraint is invariant under positive rescaling.
    fn is_homogeneous(&self) -> bool {
        self.rhs.iter().all(Zero::is_zero)
            && self
                .lower_bounds
                .iter()
                .all(|b| b.as_ref().is_none_or(Zero::is_zero))
    }

    /// Checks a candidate point exactly against every constraint.
    pub fn is_witness(&self, z: &[Rational]) -> bool {
        if z.len() != self.num_vars {
            return false;
        }
        let eq_ok = self.rows.iter().zip(&self.rhs).all(|(row, b)| {
            row.iter()
                .zip(z)
                .fold(Rational::zero(), |acc, (a, v)| acc + a * v)
                == *b
        });
        let lb_ok = self
            .lower_bounds
            .iter()
            .zip(z)
            .all(|(b, v)| b.as_ref().is_none_or(|l| v >= l));
        let strict_ok = self.strict_positive.iter().all(|&i| z[i].is_positive());
        eq_ok && lb_ok && strict_ok
    }
}

/// Decides the strict system exactly. Returns a witness satisfying every
/// equality exactly and every strict condition strictly, or `None` when the
/// system is infeasible.
pub fn strict_feasible(problem: &StrictFeasibilityProblem) -> Result<Option<Vec<Rational>>> {
    let n = problem.num_vars;
    let equalities = problem.equalities();

    let witness = if problem.is_homogeneous() {
        let mut bounds = problem.lower_bounds.clone();
        for &i in &problem.strict_positive {
            bounds[i] = Some(Rational::one());
        }
        let lp = LinearProgram {
            objective: vec![Rational::zero(); n],
            equalities,
            rhs: problem.rhs.clone(),
            lower_bounds: bounds,
        };
        match maximize(&lp)? {
            LpOutcome::Optimal { point, .. } => Some(point),
            LpOutcome::Infeasible => None,
            LpOutcome::Unbounded => unreachable!("zero objective is bounded"),
        }
    } else {
        // Variables: z, then e, then one slack per strict variable, then the
        // slack for e <= 1.
        let k = problem.strict_positive.len();
        let total = n + 1 + k + 1;
        let e = n;
        let mut rows: Vec<Vec<Rational>> = problem
            .rows
            .iter()
            .map(|row| {
                let mut r = row.clone();
                r.resize(total, Rational::zero());
                r
            })
            .collect();
        let mut rhs = problem.rhs.clone();
        for (s, &i) in problem.strict_positive.iter().enumerate() {
            // z_i - e - w_s = 0
            let mut r = vec![Rational::zero(); total];
            r[i] = Rational::one();
            r[e] = -Rational::one();
            r[n + 1 + s] = -Rational::one();
            rows.push(r);
            rhs.push(Rational::zero());
        }
        let mut cap = vec![Rational::zero(); total];
        cap[e] = Rational::one();
        cap[total - 1] = Rational::one();
        rows.push(cap);
        rhs.push(Rational::one());

        let mut bounds = problem.lower_bounds.clone();
        bounds.push(None);
        bounds.extend((0..k + 1).map(|_| Some(Rational::zero())));
        let mut objective = vec![Rational::zero(); total];
        objective[e] = Rational::one();
        let lp = LinearProgram {
            objective,
            equalities: RationalMatrix::from_rows(total, &rows)?,
            rhs,
            lower_bounds: bounds,
        };
        match maximize(&lp)? {
            LpOutcome::Optimal { value, mut point } if value.is_positive() || k == 0 => {
                point.truncate(n);
                Some(point)
            }
            LpOutcome::Optimal { .. } | LpOutcome::Infeasible => None,
            LpOutcome::Unbounded => unreachable!("slack is capped at 1"),
        }
    };
    debug_assert!(witness.as_ref().is_none_or(|w| problem.is_witness(w)));
    Ok(witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, ratio};

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn open_interval_is_feasible() {
        // x > 0 and -x > -1
        let mut p = StrictFeasibilityProblem::with_vars(1);
        p.add_strict_inequality(&ints(&[1]), int(0)).unwrap();
        p.add_strict_inequality(&ints(&[-1]), int(-1)).unwrap();
        let w = strict_feasible(&p).unwrap().expect("feasible");
        assert!(w[0] > int(0) && w[0] < int(1));
        assert!(p.is_witness(&w));
    }

    #[test]
    fn contradictory_signs_are_infeasible() {
        let mut p = StrictFeasibilityProblem::with_vars(1);
        p.add_strict_inequality(&ints(&[1]), int(0)).unwrap();
        p.add_strict_inequality(&ints(&[-1]), int(0)).unwrap();
        assert_eq!(strict_feasible(&p).unwrap(), None);
    }

    #[test]
    fn homogeneous_cone_system() {
        // t*(1,0) + s*(0,1) = t'*(1,1), all > 0
        let a = RationalMatrix::from_rows(3, &[ints(&[1, 0, -1]), ints(&[0, 1, -1])]).unwrap();
        let p = StrictFeasibilityProblem::new(a, ints(&[0, 0]), vec![None; 3], 0..3).unwrap();
        let w = strict_feasible(&p).unwrap().expect("feasible");
        assert_eq!(w, ints(&[1, 1, 1]));
    }

    #[test]
    fn homogeneous_infeasible_cone_system() {
        // t*(1,0) = -s*(1,0), t, s > 0
        let a = RationalMatrix::from_rows(2, &[ints(&[1, 1]), ints(&[0, 0])]).unwrap();
        let p = StrictFeasibilityProblem::new(a, ints(&[0, 0]), vec![None; 2], 0..2).unwrap();
        assert_eq!(strict_feasible(&p).unwrap(), None);
    }

    #[test]
    fn malformed_problem_is_rejected() {
        let a = RationalMatrix::zeros(2, 3);
        assert!(StrictFeasibilityProblem::new(a.clone(), ints(&[0]), vec![None; 3], []).is_err());
        assert!(StrictFeasibilityProblem::new(a.clone(), ints(&[0, 0]), vec![None; 2], []).is_err());
        assert!(StrictFeasibilityProblem::new(a, ints(&[0, 0]), vec![None; 3], [5]).is_err());
    }

    #[test]
    fn lower_bounds_and_strictness_combine() {
        // x >= 2, y > 0, x + y = 2  -> infeasible
        let a = RationalMatrix::from_rows(2, &[ints(&[1, 1])]).unwrap();
        let p = StrictFeasibilityProblem::new(a.clone(), ints(&[2]), vec![Some(int(2)), None], [1])
            .unwrap();
        assert_eq!(strict_feasible(&p).unwrap(), None);
        // x >= 2, y > 0, x + y = 5/2 -> feasible
        let p = StrictFeasibilityProblem::new(a, vec![ratio(5, 2)], vec![Some(int(2)), None], [1])
            .unwrap();
        let w = strict_feasible(&p).unwrap().expect("feasible");
        assert!(p.is_witness(&w));
    }

    #[test]
    fn maximize_simple_program() {
        // max x + y s.t. x + 2y + s1 = 4, 3x + y + s2 = 6, all >= 0 -> (8/5, 6/5)
        let a = RationalMatrix::from_rows(4, &[ints(&[1, 2, 1, 0]), ints(&[3, 1, 0, 1])]).unwrap();
        let lp = LinearProgram {
            objective: ints(&[1, 1, 0, 0]),
            equalities: a,
            rhs: ints(&[4, 6]),
            lower_bounds: vec![Some(int(0)); 4],
        };
        match maximize(&lp).unwrap() {
            LpOutcome::Optimal { value, point } => {
                assert_eq!(value, ratio(14, 5));
                assert_eq!(&point[..2], &[ratio(8, 5), ratio(6, 5)]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn maximize_detects_unbounded_and_infeasible() {
        let a = RationalMatrix::from_rows(2, &[ints(&[1, -1])]).unwrap();
        let lp = LinearProgram {
            objective: ints(&[1, 0]),
            equalities: a.clone(),
            rhs: ints(&[0]),
            lower_bounds: vec![Some(int(0)); 2],
        };
        assert_eq!(maximize(&lp).unwrap(), LpOutcome::Unbounded);
        let lp = LinearProgram {
            objective: ints(&[1, 0]),
            equalities: a,
            rhs: ints(&[-1]),
            lower_bounds: vec![Some(int(0)), Some(int(5))],
        };
        // x - y = -1 with x >= 0, y >= 5 is feasible (x = 4, y = 5)
        assert!(matches!(maximize(&lp).unwrap(), LpOutcome::Unbounded));
        let lp = LinearProgram {
            objective: ints(&[0, 0]),
            equalities: RationalMatrix::from_rows(2, &[ints(&[1, 1])]).unwrap(),
            rhs: ints(&[-1]),
            lower_bounds: vec![Some(int(0)); 2],
        };
        assert_eq!(maximize(&lp).unwrap(), LpOutcome::Infeasible);
    }

    #[test]
    fn redundant_equalities_are_tolerated() {
        let a = RationalMatrix::from_rows(2, &[ints(&[1, 1]), ints(&[2, 2])]).unwrap();
        let p = StrictFeasibilityProblem::new(a, ints(&[0, 0]), vec![None; 2], [0]).unwrap();
        let w = strict_feasible(&p).unwrap().expect("x = -y with x > 0");
        assert!(p.is_witness(&w));
    }

    #[test]
    fn degenerate_cycling_example_terminates() {
        // Beale's classic cycling example (minimize form negated).
        let a = RationalMatrix::from_rows(
            7,
            &[
                vec![ratio(1, 4), int(-8), int(-1), int(9), int(1), int(0), int(0)],
                vec![ratio(1, 2), int(-12), ratio(-1, 2), int(3), int(0), int(1), int(0)],
                vec![int(0), int(0), int(1), int(0), int(0), int(0), int(1)],
            ],
        )
        .unwrap();
        let lp = LinearProgram {
            objective: vec![ratio(3, 4), int(-20), ratio(1, 2), int(-6), int(0), int(0), int(0)],
            equalities: a,
            rhs: ints(&[0, 0, 1]),
            lower_bounds: vec![Some(int(0)); 7],
        };
        match maximize(&lp).unwrap() {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, ratio(5, 4)),
            other => panic!("unexpected {other:?}"),
        }
    }
}
