//! Machine-checked telescoping: a series Σ_{k≥0} f(k) whose summand is
//! s(k) − s(k+1) for a rational s vanishing at infinity sums to s(0).

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ratfun::{kratfun_shift, KRatFun};
use crate::scalar::Field;

#[derive(Clone, Debug)]
pub struct TelescopeWitness<F: Field> {
    summand: KRatFun<F>,
    s: KRatFun<F>,
    initial_value: F,
}

impl<F: Field> TelescopeWitness<F> {
    pub fn summand(&self) -> &KRatFun<F> {
        &self.summand
    }

    pub fn antidifference(&self) -> &KRatFun<F> {
        &self.s
    }

    /// The series value s(0).
    pub fn value(&self) -> &F {
        &self.initial_value
    }

    /// The tail Σ_{k>K} f(k) = s(K + 1).
    pub fn remainder(&self, last: usize) -> Result<F> {
        self.s.eval(&F::from_i64(last as i64 + 1))
    }

    /// Σ_{k=0..=K} f(k), summed term by term.
    pub fn partial_sum(&self, last: usize) -> Result<F> {
        (0..=last).try_fold(F::zero(), |acc, k| {
            Ok(acc + self.summand.eval(&F::from_i64(k as i64))?)
        })
    }

    /// partial_sum(K) + s(K + 1) == s(0).
    pub fn check_partial(&self, last: usize) -> Result<bool> {
        Ok(self.partial_sum(last)? + self.remainder(last)? == self.initial_value)
    }
}

/// Verifies `summand = s − s(· + 1)` exactly and that s vanishes at infinity.
pub fn telescope_verify<F: Field>(
    summand: KRatFun<F>,
    s: KRatFun<F>,
) -> Result<TelescopeWitness<F>> {
    if !s.vanishes_at_infinity() {
        return Err(Error::NotVanishing);
    }
    let difference = s.clone() - kratfun_shift(&s);
    if !difference.equals(&summand) {
        return Err(Error::NotTelescoping);
    }
    let initial_value = s.eval(&F::zero())?;
    Ok(TelescopeWitness {
        summand,
        s,
        initial_value,
    })
}

/// Π (k + root) over the given constant offsets.
pub fn linear_product<F: Field>(offsets: impl IntoIterator<Item = F>) -> Poly<F> {
    offsets
        .into_iter()
        .fold(Poly::from_i64s(&[1]), |acc, c| acc * Poly::linear(c))
}
