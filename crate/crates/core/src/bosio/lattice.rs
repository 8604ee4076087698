use num_bigint::BigInt;

use super::{check_bosio, StudiableSystem};
use crate::arith::{denominator_lcm, limit_denominator, Rational};
use crate::{Error, Result};

/// An integer family `Λ' = scale · Λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionK {
    pub scale: BigInt,
    pub lambda: Vec<Vec<BigInt>>,
}

/// Condition (K) for rational input: scaling by the common denominator is an
/// automorphism of `Q^M` taking every `λ_j` into `Z^M`. Irrational families,
/// where the condition has content, are not representable here.
pub fn check_condition_k(s: &StudiableSystem) -> ConditionK {
    let scale = denominator_lcm(s.lambda().iter().flatten());
    let factor = Rational::from_integer(scale.clone());
    let lambda = s
        .lambda()
        .iter()
        .map(|v| v.iter().map(|c| (c * &factor).to_integer()).collect())
        .collect();
    ConditionK { scale, lambda }
}

/// Rounds a system satisfying the Bosio conditions to a nearby one with
/// integer vectors. Candidates use denominators at most 1, 10, 100, .. up to
/// `max_denominator`; each one is re-checked in full before it is accepted.
pub fn perturb_to_condition_k(s: &StudiableSystem, max_denominator: u64) -> Result<StudiableSystem> {
    let report = check_bosio(s)?;
    if !report.holds() {
        return Err(Error::Precondition(
            "the system does not satisfy (gen), (SE) and (Imb)".into(),
        ));
    }
    let mut bound: u64 = 1;
    loop {
        let b = BigInt::from(bound.min(max_denominator.max(1)));
        let rounded: Vec<Vec<Rational>> = s
            .lambda()
            .iter()
            .map(|v| v.iter().map(|c| limit_denominator(c, &b)).collect())
            .collect();
        let candidate = s.with_lambda(rounded)?;
        let verdict = check_bosio(&candidate)?;
        if verdict.holds() && verdict.theorem_violations.is_empty() {
            let k = check_condition_k(&candidate);
            let lambda = k
                .lambda
                .into_iter()
                .map(|v| v.into_iter().map(Rational::from_integer).collect())
                .collect();
            return candidate.with_lambda(lambda);
        }
        if bound >= max_denominator {
            break;
        }
        bound = bound.saturating_mul(10);
    }
    Err(Error::Budget(format!(
        "no rounding with denominator at most {max_denominator} keeps the Bosio conditions"
    )))
}
