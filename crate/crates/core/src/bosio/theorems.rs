use super::{check_gen, check_imb, ImbWitness, StudiableSystem};
use crate::complexes::{
    FundamentalSet, MinimalityDefect, PseudomanifoldDefect, SubstituteViolation, VertexSet,
};
use crate::gale::{gale_transform, VectorConfiguration};
use crate::geometry::{check_sep, check_simpl, Realization, SepWitness};
use crate::{Check, Error, Result};

/// The Bosio conditions of a studiable system and the properties they imply.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BosioReport {
    pub gen: Check<VertexSet>,
    pub se: Check<SubstituteViolation>,
    /// Absent when (gen) fails.
    pub imb: Option<Check<ImbWitness>>,
    pub seu: Check<SubstituteViolation>,
    /// Absent when `n <= M`.
    pub seu_minimal: Option<Check<MinimalityDefect>>,
    /// Implications that should have held but did not.
    pub theorem_violations: Vec<String>,
}

impl BosioReport {
    /// (gen), (SE) and (Imb) all hold.
    pub fn holds(&self) -> bool {
        self.gen.holds() && self.se.holds() && self.imb.as_ref().is_some_and(Check::holds)
    }
}

/// Evaluates (gen), (SE) and (Imb). When all three hold, (SEU) and
/// SEU-minimality must follow; a failure of either is recorded as a theorem
/// violation.
pub fn check_bosio(s: &StudiableSystem) -> Result<BosioReport> {
    let fs = s.fundamental_set();
    let gen = check_gen(s)?;
    let imb = if gen.holds() { Some(check_imb(s)?) } else { None };
    let se = fs.check_se();
    let seu = fs.check_seu();
    let mut theorem_violations = Vec::new();
    let seu_minimal = if fs.n() > fs.m() {
        match fs.is_seu_minimal() {
            Ok(c) => Some(c),
            Err(Error::TheoremViolation(msg)) => {
                theorem_violations.push(msg);
                None
            }
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    let mut report = BosioReport {
        gen,
        se,
        imb,
        seu,
        seu_minimal,
        theorem_violations,
    };
    if report.holds() {
        if let Check::Fails(v) = &report.seu {
            report
                .theorem_violations
                .push(format!("(gen), (SE), (Imb) hold but (SEU) fails: {v}"));
        }
        if let Some(Check::Fails(d)) = &report.seu_minimal {
            report.theorem_violations.push(format!(
                "(gen), (SE), (Imb) hold but the family is not SEU-minimal: {d:?}"
            ));
        }
    }
    Ok(report)
}

/// Realization-side verdicts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimalSide {
    pub simpl: Check<VertexSet>,
    /// Absent when (simpl) fails.
    pub sep: Option<Check<SepWitness>>,
    pub pseudomanifold: Check<PseudomanifoldDefect>,
}

impl PrimalSide {
    pub fn weakly_starshaped(&self) -> bool {
        self.simpl.holds() && self.sep.as_ref().is_some_and(Check::holds)
    }

    pub fn starshaped(&self) -> bool {
        self.weakly_starshaped() && self.pseudomanifold.holds()
    }
}

/// Gale-side verdicts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualSide {
    pub system: StudiableSystem,
    pub gen: Check<VertexSet>,
    /// Absent when (gen) fails.
    pub imb: Option<Check<ImbWitness>>,
    pub seu_minimal: Check<MinimalityDefect>,
}

impl DualSide {
    pub fn gen_and_imb(&self) -> bool {
        self.gen.holds() && self.imb.as_ref().is_some_and(Check::holds)
    }

    pub fn bosio(&self) -> bool {
        self.gen_and_imb() && self.seu_minimal.holds()
    }
}

/// Both sides of the correspondence between a realization and the studiable
/// system formed by its facet complements and its Gale transform.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub primal: PrimalSide,
    pub dual: DualSide,
}

impl TheoremReport {
    /// (simpl) ∧ (Sep) agrees with (gen) ∧ (Imb).
    pub fn weak_agrees(&self) -> bool {
        self.primal.weakly_starshaped() == self.dual.gen_and_imb()
    }

    /// Starshapedness at the origin agrees with the Bosio conditions plus
    /// SEU-minimality.
    pub fn main_agrees(&self) -> bool {
        self.primal.starshaped() == self.dual.bosio()
    }

    pub fn consistent(&self) -> bool {
        self.weak_agrees() && self.main_agrees()
    }
}

/// Evaluates both sides for `r` at the origin. Fails with a rank error if
/// the points do not span `Q^{d+1}`.
pub fn main_theorem_crosscheck(r: &Realization) -> Result<TheoremReport> {
    let complex = r.complex();
    let config = VectorConfiguration::new(r.ambient_dim(), r.points().to_vec())?;
    let gale = gale_transform(&config)?;
    let fs = FundamentalSet::from_complex(complex)?;
    debug_assert_eq!(fs.m(), gale.dim);
    let system = StudiableSystem::new(fs, gale.vectors)?;

    let simpl = check_simpl(r);
    let sep = if simpl.holds() { Some(check_sep(r)?) } else { None };
    let primal = PrimalSide {
        simpl,
        sep,
        pseudomanifold: complex.is_pseudomanifold()?,
    };

    let gen = check_gen(&system)?;
    let imb = if gen.holds() { Some(check_imb(&system)?) } else { None };
    let seu_minimal = system.fundamental_set().is_seu_minimal()?;
    let dual = DualSide {
        system,
        gen,
        imb,
        seu_minimal,
    };
    Ok(TheoremReport { primal, dual })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::fixtures;

    #[test]
    fn square_system_satisfies_everything() {
        let report = check_bosio(&fixtures::square_system()).unwrap();
        assert!(report.holds());
        assert!(report.seu.holds());
        assert_eq!(report.seu_minimal, Some(Check::Holds));
        assert!(report.theorem_violations.is_empty());
    }

    #[test]
    fn opposite_rays_fail_imbrication() {
        let report = check_bosio(&fixtures::opposite_rays_system()).unwrap();
        assert!(report.gen.holds());
        assert!(!report.imb.unwrap().holds());
    }

    #[test]
    fn two_triangles_cannot_imbricate() {
        let fs = fixtures::two_triangles();
        // Generic vectors in Q^4.
        let lambda = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 1, 1, 1], [1, 2, 3, 5]]
            .iter()
            .map(|v| v.iter().map(|&x| int(x)).collect())
            .collect();
        let s = StudiableSystem::new(fs, lambda).unwrap();
        let report = check_bosio(&s).unwrap();
        assert!(report.se.holds());
        assert!(!report.holds());
        assert!(report.theorem_violations.is_empty());
    }

    #[test]
    fn crosscheck_on_fixtures() {
        for (name, r) in fixtures::realizations() {
            let report = main_theorem_crosscheck(&r).unwrap();
            assert!(report.consistent(), "{name}: {report:?}");
        }
    }

    #[test]
    fn crosscheck_sides_for_named_cases() {
        let sq = main_theorem_crosscheck(&fixtures::square()).unwrap();
        assert!(sq.primal.starshaped() && sq.dual.bosio());

        let tri = main_theorem_crosscheck(&fixtures::triangle_around_outside()).unwrap();
        assert!(!tri.primal.starshaped() && !tri.dual.bosio());
        assert!(tri.primal.sep.unwrap().witness().is_some());
        assert!(tri.dual.imb.unwrap().witness().is_some());

        let path = main_theorem_crosscheck(&fixtures::path()).unwrap();
        assert!(path.primal.weakly_starshaped());
        assert!(!path.primal.pseudomanifold.holds());
        assert!(path.dual.gen_and_imb());
        assert!(!path.dual.seu_minimal.holds());
    }

    #[test]
    fn crosscheck_needs_spanning_points() {
        let c = crate::complexes::SimplicialComplex::closure([vec![1, 2], vec![2, 3]], 3).unwrap();
        let r = Realization::new(
            c,
            vec![vec![int(1), int(0)], vec![int(2), int(0)], vec![int(-1), int(0)]],
            None,
        )
        .unwrap();
        assert!(matches!(main_theorem_crosscheck(&r), Err(Error::Rank { .. })));
    }
}
