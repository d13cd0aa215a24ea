//! Exact Laurent polynomials in `q^(1/2)` with big-integer coefficients.
//!
//! Exponents are half-integers stored doubled, so the monomial `c q^{e/2}`
//! is keyed by `e`. Used for identity-level checks that must hold exactly
//! (q-Pascal relations, the q-binomial identities behind the boundary
//! vanishing of the Plancherel sums).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Laurent polynomial `Σ c_e q^{e/2}`, keyed by the doubled exponent `e`.
/// No zero coefficient is ever stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial_i64(0, 1)
    }

    /// `c * q^{e2/2}`.
    pub fn monomial(e2: i64, c: BigInt) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(e2, c);
        }
        LaurentPoly { coeffs: m }
    }

    pub fn monomial_i64(e2: i64, c: i64) -> Self {
        Self::monomial(e2, BigInt::from(c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Doubled exponents with nonzero coefficient, ascending.
    pub fn support(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(k, v)| (*k, v))
    }

    pub fn coeff(&self, e2: i64) -> BigInt {
        self.coeffs.get(&e2).cloned().unwrap_or_else(BigInt::zero)
    }

    fn insert_add(&mut self, e2: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(e2).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&e2);
        }
    }

    /// Evaluate at a numeric `q > 0`.
    pub fn eval(&self, q: f64) -> f64 {
        let s = q.sqrt();
        self.coeffs
            .iter()
            .map(|(e2, c)| bigint_to_f64(c) * s.powi(*e2 as i32))
            .sum()
    }

    /// Largest doubled exponent, if nonzero.
    pub fn degree2(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Smallest doubled exponent, if nonzero.
    pub fn low_degree2(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Exact quotient `self / rhs`, or `None` if the division leaves a
    /// remainder. Monomials are units in the Laurent ring, so after
    /// stripping the lowest exponents this is ordinary top-down polynomial
    /// division, which terminates in `deg` steps; every leading-coefficient
    /// division must be exact over the integers.
    pub fn checked_div(&self, rhs: &LaurentPoly) -> Option<LaurentPoly> {
        if rhs.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let slow = self.low_degree2().unwrap();
        let rlow = rhs.low_degree2().unwrap();
        let (dlead, dcoef) = {
            let (e, c) = rhs.coeffs.iter().next_back().unwrap();
            (*e, c.clone())
        };
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        while let Some(rlead) = rem.degree2() {
            // quotient exponent must stay >= slow - rlow or the quotient
            // could not multiply back to a series bounded below by slow
            let shift = rlead - dlead;
            if shift < slow - rlow {
                return None;
            }
            let rcoef = rem.coeff(rlead);
            if (&rcoef % &dcoef) != num_bigint::BigInt::from(0) {
                return None;
            }
            let term = LaurentPoly::monomial(shift, &rcoef / &dcoef);
            rem = &rem - &(&term * rhs);
            quot += term;
        }
        Some(quot)
    }
}

fn bigint_to_f64(c: &BigInt) -> f64 {
    // BigInt -> f64 via string would lose nothing at our sizes, but use the
    // builtin conversion which is correctly rounded.
    use num_traits::ToPrimitive;
    c.to_f64().unwrap_or(if c.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    })
}

impl AddAssign<LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        for (e2, c) in rhs.coeffs {
            self.insert_add(e2, &c);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e2, c) in rhs.coeffs.iter() {
            out.insert_add(*e2, c);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e2, c) in rhs.coeffs.iter() {
            out.insert_add(*e2, &(-c));
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.coeffs.iter() {
            for (e2, c2) in rhs.coeffs.iter() {
                out.insert_add(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e2, c) in self.coeffs.iter().rev() {
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            match (*e2, a == BigInt::from(1)) {
                (0, _) => write!(f, "{}", a)?,
                (e, true) if e % 2 == 0 => write!(f, "q^{}", e / 2)?,
                (e, true) => write!(f, "q^({}/2)", e)?,
                (e, false) if e % 2 == 0 => write!(f, "{}q^{}", a, e / 2)?,
                (e, false) => write!(f, "{}q^({}/2)", a, e)?,
            }
        }
        Ok(())
    }
}
