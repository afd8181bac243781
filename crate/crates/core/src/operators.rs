//! Entry generators for the generalized Hausdorff and Cesàro matrices and the
//! auxiliary operators (interrupters, the matrix `B`, closed forms).
//!
//! Every generator is an index -> value function, generic over the scalar
//! field so the same code runs with α fixed (`Rational`) or symbolic
//! (`AlphaRatFun`). Infinite operators are only ever materialized through
//! [`finite_section`].

use std::fmt;
use std::sync::Arc;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ratfun::AlphaRatFun;
use crate::scalar::{format_rational, int, parse_rational, Field, Rational};

/// A rational α with α > −1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alpha(Rational);

impl Alpha {
    pub fn new(value: Rational) -> Result<Self> {
        if value <= int(-1) {
            return Err(Error::AlphaOutOfRange(format_rational(&value)));
        }
        Ok(Alpha(value))
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::new(parse_rational(text)?)
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(&self.0))
    }
}

/// The indeterminate α as a rational function, for symbolic checks.
pub fn symbolic_alpha() -> AlphaRatFun {
    AlphaRatFun::var()
}

#[inline]
fn c<F: Field>(n: i64) -> F {
    F::from_i64(n)
}

#[inline]
fn idx<F: Field>(n: usize) -> F {
    F::from_i64(n as i64)
}

/// `n + α + offset`, the ubiquitous linear factor.
#[inline]
fn shifted<F: Field>(alpha: &F, n: usize, offset: i64) -> F {
    idx::<F>(n) + alpha.clone() + c(offset)
}

#[derive(Clone)]
pub enum MomentSequence<F> {
    /// μ_j = β! / Π_{t=1..β} (j + α + t).
    Cesaro {
        alpha: F,
        beta: u32,
    },
    Custom(Arc<dyn Fn(usize) -> F + Send + Sync>),
}

impl<F: Field> MomentSequence<F> {
    pub fn cesaro(alpha: F, beta: u32) -> Result<Self> {
        if beta < 1 {
            return Err(Error::InvalidBeta(beta));
        }
        Ok(MomentSequence::Cesaro { alpha, beta })
    }

    pub fn custom(f: impl Fn(usize) -> F + Send + Sync + 'static) -> Self {
        MomentSequence::Custom(Arc::new(f))
    }

    pub fn value(&self, j: usize) -> F {
        match self {
            MomentSequence::Cesaro { alpha, beta } => {
                cesaro_moment(alpha, *beta, j).expect("beta validated at construction")
            }
            MomentSequence::Custom(f) => f(j),
        }
    }
}

impl<F> fmt::Debug for MomentSequence<F>
where
    F: fmt::Debug,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MomentSequence::Cesaro { alpha, beta } => f
                .debug_struct("Cesaro")
                .field("alpha", alpha)
                .field("beta", beta)
                .finish(),
            MomentSequence::Custom(_) => f.write_str("Custom(..)"),
        }
    }
}

/// Δⁿ μ_k with Δμ_k = μ_k − μ_{k+1}, via Σ_t (−1)ᵗ C(n,t) μ_{k+t}.
pub fn forward_difference<F: Field>(mu: &MomentSequence<F>, n: usize, k: usize) -> F {
    let mut acc = F::zero();
    let mut binom = F::one();
    for t in 0..=n {
        let term = binom.clone() * mu.value(k + t);
        acc = if t % 2 == 0 { acc + term } else { acc - term };
        binom = binom * idx(n - t) / idx(t + 1);
    }
    acc
}

/// Δⁿ μ_k by direct recursion Δ^{n+1} μ_k = Δⁿ μ_k − Δⁿ μ_{k+1}.
pub fn forward_difference_recursive<F: Field>(mu: &MomentSequence<F>, n: usize, k: usize) -> F {
    if n == 0 {
        return mu.value(k);
    }
    forward_difference_recursive(mu, n - 1, k) - forward_difference_recursive(mu, n - 1, k + 1)
}

/// C(i + α, i − j) = Π_{t=1..i−j} (j + α + t) / t.
pub fn generalized_binomial<F: Field>(alpha: &F, i: usize, j: usize) -> Result<F> {
    if j > i {
        return Err(Error::Index(format!(
            "generalized binomial needs j <= i, got i={i}, j={j}"
        )));
    }
    let mut acc = F::one();
    for t in 1..=(i - j) {
        acc = acc * shifted(alpha, j, t as i64) / idx(t);
    }
    Ok(acc)
}

/// β · B(j + α + 1, β) = β! / Π_{t=1..β} (j + α + t).
pub fn cesaro_moment<F: Field>(alpha: &F, beta: u32, j: usize) -> Result<F> {
    if beta < 1 {
        return Err(Error::InvalidBeta(beta));
    }
    let mut acc = F::one();
    for t in 1..=beta as usize {
        acc = acc * idx(t) / shifted(alpha, j, t as i64);
    }
    Ok(acc)
}

/// Generalized Hausdorff entry C(i + α, i − j) Δ^{i−j} μ_j; zero above the diagonal.
pub fn hausdorff_entry<F: Field>(alpha: &F, mu: &MomentSequence<F>, i: usize, j: usize) -> F {
    if j > i {
        return F::zero();
    }
    generalized_binomial(alpha, i, j).expect("j <= i") * forward_difference(mu, i - j, j)
}

/// Entry of (C^(α), β) through the binomial-times-beta-integral route:
/// C(i+α, i−j) · β · (i−j+β−1)! / Π_{t=1..i−j+β} (j + α + t).
pub fn cesaro_entry_general<F: Field>(alpha: &F, beta: u32, i: usize, j: usize) -> Result<F> {
    if beta < 1 {
        return Err(Error::InvalidBeta(beta));
    }
    if j > i {
        return Ok(F::zero());
    }
    let d = i - j;
    let b = beta as usize;
    let mut integral = idx::<F>(b);
    for t in 1..d + b {
        integral = integral * idx(t);
    }
    for t in 1..=d + b {
        integral = integral / shifted(alpha, j, t as i64);
    }
    Ok(generalized_binomial(alpha, i, j)? * integral)
}

/// Entry of (C^(α), β), with closed displays for β = 1 and β = 2.
pub fn cesaro_entry<F: Field>(alpha: &F, beta: u32, i: usize, j: usize) -> Result<F> {
    match beta {
        0 => Err(Error::InvalidBeta(0)),
        _ if j > i => Ok(F::zero()),
        1 => Ok(c1_entry(alpha, i, j)),
        2 => Ok(c2_entry(alpha, i, j)),
        _ => cesaro_entry_general(alpha, beta, i, j),
    }
}

/// (C^(α), 1): 1 / (i + 1 + α) on and below the diagonal.
pub fn c1_entry<F: Field>(alpha: &F, i: usize, j: usize) -> F {
    if j > i {
        return F::zero();
    }
    shifted(alpha, i, 1).inv()
}

/// M = (C^(α), 2): 2(i + 1 − j) / ((i + 1 + α)(i + 2 + α)) on and below the diagonal.
pub fn c2_entry<F: Field>(alpha: &F, i: usize, j: usize) -> F {
    if j > i {
        return F::zero();
    }
    c::<F>(2) * idx(i + 1 - j) / (shifted(alpha, i, 1) * shifted(alpha, i, 2))
}

/// Diagonal of the order-one interrupter Q: 1 + α at n = 0, else 1.
pub fn c1_q_diag<F: Field>(alpha: &F, n: usize) -> F {
    if n == 0 {
        F::one() + alpha.clone()
    } else {
        F::one()
    }
}

/// Diagonal of the order-one interrupter P: (n + 1 + α) / (n + 2 + α).
pub fn c1_p_diag<F: Field>(alpha: &F, n: usize) -> F {
    shifted(alpha, n, 1) / shifted(alpha, n, 2)
}

pub fn c1_interrupters<F: Field>(
    alpha: &F,
) -> (impl Fn(usize) -> F + '_, impl Fn(usize) -> F + '_) {
    (move |n| c1_q_diag(alpha, n), move |n| c1_p_diag(alpha, n))
}

/// Diagonal of P for M: (n+1+α)(n+2+α) / ((n+3+α)(n+4+α)).
pub fn c2_p_diag<F: Field>(alpha: &F, n: usize) -> F {
    shifted(alpha, n, 1) * shifted(alpha, n, 2) / (shifted(alpha, n, 3) * shifted(alpha, n, 4))
}

/// Entry of the near-diagonal Q for M: a 2×2 corner, identity beyond it.
pub fn c2_q_entry<F: Field>(alpha: &F, i: usize, j: usize) -> F {
    let a = alpha.clone();
    let one_a = F::one() + a.clone();
    let two_a = c::<F>(2) + a.clone();
    match (i, j) {
        (0, 0) => (c::<F>(3) + c::<F>(2) * a) * one_a * two_a / c(6),
        (0, 1) | (1, 0) => -(a * one_a * two_a) / c(3),
        (1, 1) => (c::<F>(3) - a.clone() + c::<F>(2) * a.clone() * a) * two_a / c(6),
        _ if i == j => F::one(),
        _ => F::zero(),
    }
}

pub fn c2_q_matrix<F: Field>(alpha: &F, n: usize) -> Result<Matrix<F>> {
    if n < 2 {
        return Err(Error::Index(format!("Q section needs n >= 2, got {n}")));
    }
    Ok(Matrix::from_fn(n, n, |i, j| c2_q_entry(alpha, i, j)))
}

/// Entry of B, the operator with BM = M*.
pub fn b_entry<F: Field>(alpha: &F, i: usize, j: usize) -> F {
    let den = shifted(alpha, j, 3) * shifted(alpha, j, 4);
    if j + 2 > i {
        c::<F>(2) * (idx::<F>(j + 1) - idx(3 * i) - c::<F>(2) * alpha.clone()) / den
    } else if j + 2 == i {
        shifted(alpha, j, 1) * shifted(alpha, j, 2) / den
    } else {
        F::zero()
    }
}

/// Weight n of W₁: 4(n + 1 + α) / ((n + 3 + α)(n + 4 + α)).
pub fn w1_weight<F: Field>(alpha: &F, n: usize) -> F {
    c::<F>(4) * shifted(alpha, n, 1) / (shifted(alpha, n, 3) * shifted(alpha, n, 4))
}

/// Weight n of W₂: (n + 1 + α)(n + 2 + α) / ((n + 3 + α)(n + 4 + α)).
pub fn w2_weight<F: Field>(alpha: &F, n: usize) -> F {
    c2_p_diag(alpha, n)
}

/// (i, j) entry of T − W₁ + U W₂, where T is the upper-triangular part of B,
/// W₁ puts its weight n at (n + 1, n) and U W₂ puts W₂'s weight n at (n + 2, n).
pub fn b_shift_decomposition<F: Field>(alpha: &F, i: usize, j: usize) -> F {
    let upper = if j >= i {
        b_entry(alpha, i, j)
    } else {
        F::zero()
    };
    let w1 = if i == j + 1 {
        w1_weight(alpha, j)
    } else {
        F::zero()
    };
    let uw2 = if i == j + 2 {
        w2_weight(alpha, j)
    } else {
        F::zero()
    };
    upper - w1 + uw2
}

/// Closed form of (M*PM)_{ij}: 2(3j + 3 − i + 2α) / (3(j+1+α)(j+2+α)) for
/// j ≥ i, extended to i > j by symmetry.
pub fn mpm_closed_form<F: Field>(alpha: &F, i: usize, j: usize) -> F {
    let (lo, hi) = if j >= i { (i, j) } else { (j, i) };
    c::<F>(2) * (idx::<F>(3 * hi + 3) - idx(lo) + c::<F>(2) * alpha.clone())
        / (c::<F>(3) * shifted(alpha, hi, 1) * shifted(alpha, hi, 2))
}

/// Closed form of (B*B)_{ij}.
pub fn pb_closed_form<F: Field>(alpha: &F, i: usize, j: usize) -> F {
    let a = alpha.clone();
    let a2 = a.clone() * a.clone();
    let a3 = a2.clone() * a.clone();
    let a4 = a3.clone() * a.clone();
    if i == j {
        let x = idx::<F>(i);
        let x2 = x.clone() * x.clone();
        let x3 = x2.clone() * x.clone();
        let x4 = x3.clone() * x.clone();
        let num = x4
            + c::<F>(2) * (c::<F>(5) + c::<F>(2) * a.clone()) * x3
            + (c::<F>(35) + c::<F>(26) * a.clone() + c::<F>(6) * a2.clone()) * x2
            + (c::<F>(50)
                + c::<F>(50) * a.clone()
                + c::<F>(34) * a2.clone()
                + c::<F>(4) * a3.clone())
                * x
            + a4
            + c::<F>(6) * a3
            + c::<F>(45) * a2
            + c::<F>(28) * a
            + c(24);
        let d = shifted(alpha, i, 3) * shifted(alpha, i, 4);
        num / (d.clone() * d)
    } else {
        let num = c::<F>(-2)
            * a.clone()
            * (c::<F>(11) + (c::<F>(5) - a.clone()) * idx(i + j) + c::<F>(2) * idx(i * j)
                - c::<F>(5) * a
                + c::<F>(2) * a2);
        num / (shifted(alpha, i, 3)
            * shifted(alpha, i, 4)
            * shifted(alpha, j, 3)
            * shifted(alpha, j, 4))
    }
}

#[derive(Clone, Debug)]
pub enum OperatorKind {
    /// Hausdorff matrix built from the given moments via forward differences.
    Hausdorff(MomentSequence<Rational>),
    Cesaro {
        beta: u32,
    },
    C1,
    C2,
    BMatrix,
    C2P,
    C2Q,
    C1P,
    C1Q,
    PB,
}

impl OperatorKind {
    /// Names accepted on the command line.
    pub const NAMES: [&'static str; 10] = [
        "hausdorff",
        "cesaro",
        "c1",
        "c2",
        "b_matrix",
        "c2_P",
        "c2_Q",
        "c1_P",
        "c1_Q",
        "pB",
    ];

    /// The kind called `name`; `hausdorff` and `cesaro` use Cesàro moments of order β.
    pub fn from_name(name: &str, alpha: &Rational, beta: u32) -> Result<Self> {
        Ok(match name {
            "hausdorff" => OperatorKind::Hausdorff(MomentSequence::cesaro(alpha.clone(), beta)?),
            "cesaro" => {
                if beta == 0 {
                    return Err(Error::InvalidBeta(beta));
                }
                OperatorKind::Cesaro { beta }
            }
            "c1" => OperatorKind::C1,
            "c2" => OperatorKind::C2,
            "b_matrix" => OperatorKind::BMatrix,
            "c2_P" => OperatorKind::C2P,
            "c2_Q" => OperatorKind::C2Q,
            "c1_P" => OperatorKind::C1P,
            "c1_Q" => OperatorKind::C1Q,
            "pB" => OperatorKind::PB,
            other => return Err(Error::UnknownOperator(other.to_string())),
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            OperatorKind::Hausdorff(_) => "hausdorff",
            OperatorKind::Cesaro { .. } => "cesaro",
            OperatorKind::C1 => "c1",
            OperatorKind::C2 => "c2",
            OperatorKind::BMatrix => "b_matrix",
            OperatorKind::C2P => "c2_P",
            OperatorKind::C2Q => "c2_Q",
            OperatorKind::C1P => "c1_P",
            OperatorKind::C1Q => "c1_Q",
            OperatorKind::PB => "pB",
        }
    }

    /// True for the kinds whose generator vanishes above the diagonal.
    pub fn is_lower_triangular(&self) -> bool {
        matches!(
            self,
            OperatorKind::Hausdorff(_)
                | OperatorKind::Cesaro { .. }
                | OperatorKind::C1
                | OperatorKind::C2
                | OperatorKind::C2P
                | OperatorKind::C1P
                | OperatorKind::C1Q
        )
    }
}

#[derive(Clone, Debug)]
pub struct OperatorSpec {
    pub kind: OperatorKind,
    pub alpha: Alpha,
}

impl OperatorSpec {
    pub fn new(kind: OperatorKind, alpha: Alpha) -> Result<Self> {
        if let OperatorKind::Cesaro { beta } = kind {
            if beta < 1 {
                return Err(Error::InvalidBeta(beta));
            }
        }
        Ok(OperatorSpec { kind, alpha })
    }

    pub fn entry(&self, i: usize, j: usize) -> Result<Rational> {
        let a = self.alpha.value();
        let diag = |v: Rational| if i == j { v } else { Rational::zero() };
        Ok(match &self.kind {
            OperatorKind::Hausdorff(mu) => hausdorff_entry(a, mu, i, j),
            OperatorKind::Cesaro { beta } => cesaro_entry(a, *beta, i, j)?,
            OperatorKind::C1 => c1_entry(a, i, j),
            OperatorKind::C2 => c2_entry(a, i, j),
            OperatorKind::BMatrix => b_entry(a, i, j),
            OperatorKind::C2P => diag(c2_p_diag(a, i)),
            OperatorKind::C2Q => c2_q_entry(a, i, j),
            OperatorKind::C1P => diag(c1_p_diag(a, i)),
            OperatorKind::C1Q => diag(c1_q_diag(a, i)),
            OperatorKind::PB => pb_closed_form(a, i, j),
        })
    }
}

/// The `n × n` upper-left corner of the operator.
pub fn finite_section(spec: &OperatorSpec, n: usize) -> Result<Matrix<Rational>> {
    if n < 1 {
        return Err(Error::Index("finite section needs n >= 1".into()));
    }
    Matrix::try_from_fn(n, n, |i, j| spec.entry(i, j))
}

/// Sign summary used by the range check on B's upper part.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RangeViolation {
    pub i: usize,
    pub j: usize,
    pub value: String,
}

/// Checks −4/(j+4+α) ≤ b_ij ≤ 2/(j+4+α) for all i ≤ j < n.
pub fn check_b_upper_range(alpha: &Alpha, n: usize) -> Option<RangeViolation> {
    let a = alpha.value();
    for j in 0..n {
        let scale = shifted(a, j, 4);
        let lo = int(-4) / scale.clone();
        let hi = int(2) / scale;
        for i in 0..=j {
            let b = b_entry(a, i, j);
            if b < lo || b > hi {
                return Some(RangeViolation {
                    i,
                    j,
                    value: format_rational(&b),
                });
            }
        }
    }
    None
}

/// True when every diagonal entry of both order-one interrupters is positive on `0..n`.
pub fn c1_interrupters_positive(alpha: &Alpha, n: usize) -> bool {
    let (q, p) = c1_interrupters(alpha.value());
    (0..n).all(|k| q(k).is_positive() && p(k).is_positive())
}
