//! Double-double arithmetic (~31 significant digits) for the alternating
//! Racah sums, which lose roughly a digit per unit of total spin.
//!
//! Only the real pipeline is needed: classical Clebsch-Gordan coefficients
//! and 6j symbols are real up to an explicit sign, so the extended mode
//! computes magnitudes in `Dd` and applies phases afterwards.

/// Unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let err = a.mul_add(b, -p);
    (p, err)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn add(self, rhs: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, rhs.hi);
        let e = e + self.lo + rhs.lo;
        let (hi, lo) = quick_two_sum(s, e);
        Dd { hi, lo }
    }

    pub fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    pub fn sub(self, rhs: Dd) -> Dd {
        self.add(rhs.neg())
    }

    pub fn mul(self, rhs: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, rhs.hi);
        let e = e + self.hi * rhs.lo + self.lo * rhs.hi;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    pub fn div(self, rhs: Dd) -> Dd {
        let q1 = self.hi / rhs.hi;
        let r = self.sub(rhs.mul(Dd::from_f64(q1)));
        let q2 = r.hi / rhs.hi;
        let r2 = r.sub(rhs.mul(Dd::from_f64(q2)));
        let q3 = r2.hi / rhs.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo }.add(Dd::from_f64(q3))
    }

    pub fn recip(self) -> Dd {
        Dd::ONE.div(self)
    }

    /// Newton step on `1/sqrt`, one double-double refinement.
    pub fn sqrt(self) -> Dd {
        if self.hi == 0.0 {
            return Dd::ZERO;
        }
        let a = self.hi.sqrt();
        let x = Dd::from_f64(a);
        // x + (self - x^2) / (2x)
        let d = self.sub(x.mul(x));
        x.add(d.div(Dd::from_f64(2.0 * a)))
    }

    pub fn powi(self, mut n: i64) -> Dd {
        let mut base = if n < 0 { self.recip() } else { self };
        if n < 0 {
            n = -n;
        }
        let mut acc = Dd::ONE;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            n >>= 1;
        }
        acc
    }

    pub fn abs(self) -> Dd {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            self.neg()
        } else {
            self
        }
    }
}

/// Precomputed `q`-data in double-double form: `q^(1/8)` covers every
/// exponent arising in the recoupling formulas (they are eighth-integers).
pub struct DdQ {
    pub q: Dd,
    pub q8: Dd,
    pub qdiff: Dd,
    qfact: Vec<Dd>,
}

impl DdQ {
    pub fn new(q: f64, max_fact: usize) -> DdQ {
        let qd = Dd::from_f64(q);
        let q8 = qd.sqrt().sqrt().sqrt();
        let qdiff = qd.sub(qd.recip());
        let mut me = DdQ { q: qd, q8, qdiff, qfact: vec![Dd::ONE] };
        for k in 1..=max_fact {
            let qn = me.qnum_int(k as i64);
            let last = *me.qfact.last().unwrap();
            me.qfact.push(last.mul(qn));
        }
        me
    }

    /// `q^{e8/8}` for a doubled-doubled-doubled exponent.
    pub fn qpow8(&self, e8: i64) -> Dd {
        self.q8.powi(e8)
    }

    /// `[n]` for integer `n`.
    pub fn qnum_int(&self, n: i64) -> Dd {
        self.qpow8(8 * n).sub(self.qpow8(-8 * n)).div(self.qdiff)
    }

    /// `[n]!`; panics beyond the precomputed range.
    pub fn qfact(&self, n: i64) -> Dd {
        self.qfact[n as usize]
    }

    /// `1/[n]!` with `0` for negative `n`.
    pub fn inv_qfact(&self, n: i64) -> Dd {
        if n < 0 {
            Dd::ZERO
        } else {
            self.qfact(n).recip()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_arithmetic_beats_f64() {
        let a = Dd::from_f64(1.0).div(Dd::from_f64(3.0));
        let three_a = a.add(a).add(a);
        assert!((three_a.to_f64() - 1.0).abs() < 1e-30);
        let r = three_a.sub(Dd::ONE);
        assert!(r.hi.abs() < 1e-30);
    }

    #[test]
    fn sqrt_and_powi() {
        let two = Dd::from_f64(2.0);
        let s = two.sqrt();
        let err = s.mul(s).sub(two);
        assert!(err.hi.abs() < 1e-30);
        let p = Dd::from_f64(0.3).powi(-7);
        assert!((p.to_f64() - 0.3f64.powi(-7)).abs() / p.to_f64() < 1e-14);
    }

    #[test]
    fn qnum_matches_f64() {
        let ddq = DdQ::new(0.3, 20);
        let hbar = -(0.3f64.ln());
        for n in 1..15 {
            let expect = 2.0 * (hbar * n as f64).sinh() / (1.0 / 0.3 - 0.3);
            let got = ddq.qnum_int(n).to_f64();
            assert!((got - expect).abs() < 1e-10 * expect.abs());
        }
    }
}
