//! Real-root counting on intervals with Sturm sequences.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::ratfun::AlphaPoly;
use crate::scalar::{format_rational, Rational};

/// Sturm sequence of the squarefree part of `p`: p₀ = p / gcd(p, p'),
/// p₁ = p₀', p_{k+1} = −rem(p_{k−1}, p_k).
pub fn sturm_sequence(p: &AlphaPoly) -> Vec<AlphaPoly> {
    let g = p.gcd(&p.derivative());
    let (p0, _) = p.div_rem(&g);
    let mut seq = vec![p0.clone(), p0.derivative()];
    while !seq[seq.len() - 1].is_zero() {
        let n = seq.len();
        let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
        seq.push(-r);
    }
    seq.pop();
    seq
}

/// Sign changes of the sequence evaluated at `x`, zeros skipped.
pub fn sign_changes(seq: &[AlphaPoly], x: &Rational) -> usize {
    let signs: Vec<bool> = seq
        .iter()
        .map(|p| p.eval(x))
        .filter(|v| !v.is_zero())
        .map(|v| v.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots of `p` in the half-open interval (lo, hi].
pub fn sturm_root_count(p: &AlphaPoly, lo: &Rational, hi: &Rational) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if lo >= hi {
        return Err(Error::EmptyInterval {
            lo: format_rational(lo),
            hi: format_rational(hi),
        });
    }
    let seq = sturm_sequence(p);
    // With a squarefree p₀, V(x) drops by exactly one as x passes a root from
    // the left and is unchanged at the root itself, so V(lo) − V(hi) counts (lo, hi].
    Ok(sign_changes(&seq, lo) - sign_changes(&seq, hi))
}

/// Number of distinct real roots of `p` in the open interval (lo, hi).
pub fn sturm_root_count_open(p: &AlphaPoly, lo: &Rational, hi: &Rational) -> Result<usize> {
    let closed = sturm_root_count(p, lo, hi)?;
    Ok(if p.eval(hi).is_zero() {
        closed - 1
    } else {
        closed
    })
}
