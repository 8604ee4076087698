//! Studiable systems `(ℰ, Λ)`: a fundamental set together with one vector
//! of `Q^M` per index. This is the dual side of a realization, reached
//! through the Gale transform.

mod imbrication;
mod lattice;
mod theorems;

pub use imbrication::{check_gen, check_imb, check_imb_tilde, ImbWitness};
pub use lattice::{check_condition_k, perturb_to_condition_k, ConditionK};
pub use theorems::{
    check_bosio, main_theorem_crosscheck, BosioReport, DualSide, PrimalSide, TheoremReport,
};

use crate::arith::Rational;
use crate::complexes::{FundamentalSet, VertexSet};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StudiableSystem {
    fundamental_set: FundamentalSet,
    lambda: Vec<Vec<Rational>>,
}

impl StudiableSystem {
    /// Requires one vector per index `1..=n`. Whether the pair is actually
    /// studiable is decided by [`check_gen`].
    pub fn new(fundamental_set: FundamentalSet, lambda: Vec<Vec<Rational>>) -> Result<Self> {
        if lambda.len() != fundamental_set.n() {
            return Err(Error::Input(format!(
                "{} vectors for n = {}",
                lambda.len(),
                fundamental_set.n()
            )));
        }
        Ok(Self {
            fundamental_set,
            lambda,
        })
    }

    pub fn fundamental_set(&self) -> &FundamentalSet {
        &self.fundamental_set
    }

    pub fn lambda(&self) -> &[Vec<Rational>] {
        &self.lambda
    }

    pub fn m(&self) -> usize {
        self.fundamental_set.m()
    }

    pub fn n(&self) -> usize {
        self.fundamental_set.n()
    }

    pub fn with_lambda(&self, lambda: Vec<Vec<Rational>>) -> Result<Self> {
        Self::new(self.fundamental_set.clone(), lambda)
    }

    pub(crate) fn member_vectors(&self, member: &VertexSet) -> Vec<Vec<Rational>> {
        member.iter().map(|&p| self.lambda[p - 1].clone()).collect()
    }
}
