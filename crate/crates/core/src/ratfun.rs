//! Univariate rational functions over a field.
//!
//! `RatFun<Rational>` carries entry formulas as functions of α.
//! `RatFun<F>` with the variable read as the summation index k carries
//! telescoping antidifferences, with `F = Rational` at fixed α and
//! `F = RatFun<Rational>` when α stays symbolic.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{Field, Rational, Ring};

/// Quotient `num / den` kept in lowest terms with a monic denominator.
#[derive(Clone, Debug)]
pub struct RatFun<F> {
    num: Poly<F>,
    den: Poly<F>,
}

/// Rational function in α with rational coefficients.
pub type AlphaRatFun = RatFun<Rational>;
/// Polynomial in α with rational coefficients.
pub type AlphaPoly = Poly<Rational>;
/// Rational function in the summation index k with coefficients in `F`.
pub type KRatFun<F> = RatFun<F>;

impl<F: Field> RatFun<F> {
    /// Panics on a zero denominator.
    pub fn new(num: Poly<F>, den: Poly<F>) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Self::from_poly(Poly::zero());
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lead = den.leading().expect("nonzero").inv();
        RatFun {
            num: num.scale(&lead),
            den: den.scale(&lead),
        }
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        RatFun {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn var() -> Self {
        Self::from_poly(Poly::var())
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }

    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// True when the numerator degree is below the denominator degree.
    pub fn vanishes_at_infinity(&self) -> bool {
        match (self.num.degree(), self.den.degree()) {
            (None, _) => true,
            (Some(n), Some(d)) => n < d,
            _ => false,
        }
    }

    pub fn eval(&self, at: &F) -> Result<F> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return Err(Error::Pole(at.to_string()));
        }
        Ok(self.num.eval(at) / d)
    }

    /// `f(x + shift)`, re-canonicalized.
    pub fn translate(&self, shift: &F) -> Self {
        Self::new(self.num.translate(shift), self.den.translate(shift))
    }

    /// `f(k + 1)`.
    pub fn shift_one(&self) -> Self {
        self.translate(&F::one())
    }

    /// Cross-multiplied polynomial comparison; does not rely on canonical form.
    pub fn equals(&self, other: &Self) -> bool {
        self.num.clone() * other.den.clone() == other.num.clone() * self.den.clone()
    }

    pub fn display_in(&self, var: &str) -> String {
        if self.is_polynomial() {
            return self.num.display_in(var);
        }
        let wrap = |p: &Poly<F>| {
            let s = p.display_in(var);
            if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        format!("{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

/// `f == g` iff `f.num * g.den == g.num * f.den`.
pub fn ratfun_equal<F: Field>(f: &RatFun<F>, g: &RatFun<F>) -> bool {
    f.equals(g)
}

/// Substitutes k -> k + 1.
pub fn kratfun_shift<F: Field>(f: &KRatFun<F>) -> KRatFun<F> {
    f.shift_one()
}

impl<F: Field> PartialEq for RatFun<F> {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl<F: Field> fmt::Display for RatFun<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("α"))
    }
}

impl<F: Field> Zero for RatFun<F> {
    fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<F: Field> One for RatFun<F> {
    fn one() -> Self {
        Self::from_poly(Poly::one())
    }
}

impl<F: Field> Add for RatFun<F> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        if self.den == rhs.den {
            return Self::new(self.num + rhs.num, self.den);
        }
        Self::new(
            self.num * rhs.den.clone() + rhs.num * self.den.clone(),
            self.den * rhs.den,
        )
    }
}

impl<F: Field> Neg for RatFun<F> {
    type Output = Self;

    fn neg(self) -> Self {
        RatFun {
            num: -self.num,
            den: self.den,
        }
    }
}

impl<F: Field> Sub for RatFun<F> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<F: Field> Mul for RatFun<F> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        Self::new(self.num * rhs.num, self.den * rhs.den)
    }
}

impl<F: Field> Div for RatFun<F> {
    type Output = Self;

    fn div(self, rhs: Self) -> Self {
        assert!(!rhs.is_zero(), "rational function division by zero");
        Self::new(self.num * rhs.den, self.den * rhs.num)
    }
}

impl<F: Field> Ring for RatFun<F> {
    fn from_i64(n: i64) -> Self {
        Self::constant(F::from_i64(n))
    }

    fn exact_div(&self, divisor: &Self) -> Self {
        self.clone() / divisor.clone()
    }
}

impl<F: Field> Field for RatFun<F> {}
