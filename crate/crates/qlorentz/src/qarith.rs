//! q-arithmetic over half-integer and complex arguments.
//!
//! The deformation parameter lives in a [`QContext`] with `q` in `(0,1)` and
//! `hbar = -ln q > 0`, so that `q^x = exp(-hbar x)` is entire in `x` and no
//! branch choices enter the q-number `[x] = (q^x - q^{-x})/(q - q^{-1})`.
//!
//! Spins and magnetic numbers are half-integers stored doubled ([`Half`]).
//! Exact results (Laurent polynomials in `q^(1/2)`) are produced by the
//! `*_exact` variants; they are defined only where the result actually is a
//! Laurent polynomial (integer q-number arguments, no square roots).

use std::fmt;
use std::sync::RwLock;

use dashmap::DashMap;

use thiserror::Error;

use crate::laurent::LaurentPoly;
use crate::C64;

/// A half-integer stored as its doubled value, used for spins, magnetic
/// numbers and continuation offsets.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Half(pub i64);

impl Half {
    pub const ZERO: Half = Half(0);
    pub const HALF: Half = Half(1);
    pub const ONE: Half = Half(2);

    /// Construct from an integer value.
    pub fn int(n: i64) -> Self {
        Half(2 * n)
    }

    /// The doubled value `2x`.
    pub fn twice(self) -> i64 {
        self.0
    }

    pub fn f64(self) -> f64 {
        self.0 as f64 / 2.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    /// Integer value, if integral.
    pub fn as_int(self) -> Option<i64> {
        if self.is_integer() {
            Some(self.0 / 2)
        } else {
            None
        }
    }

    pub fn is_nonneg(self) -> bool {
        self.0 >= 0
    }

    /// `(-1)^{2x}`: -1 exactly on half-odd integers.
    pub fn parity_sign(self) -> f64 {
        if self.0.rem_euclid(2) == 1 {
            -1.0
        } else {
            1.0
        }
    }

    /// Inclusive range `lo, lo+1, ..., hi` in integer steps.
    pub fn range_step1(lo: Half, hi: Half) -> impl Iterator<Item = Half> {
        (0..=((hi.0 - lo.0) / 2).max(-1)).map(move |k| Half(lo.0 + 2 * k))
    }

    /// Magnetic numbers `-j, -j+1, ..., j` of a spin-`j` representation.
    pub fn magnetics(self) -> impl Iterator<Item = Half> {
        let j = self.0;
        (0..=j.max(-1)).map(move |k| Half(-j + 2 * k))
    }
}

impl std::ops::Add for Half {
    type Output = Half;
    fn add(self, rhs: Half) -> Half {
        Half(self.0 + rhs.0)
    }
}

impl std::ops::Sub for Half {
    type Output = Half;
    fn sub(self, rhs: Half) -> Half {
        Half(self.0 - rhs.0)
    }
}

impl std::ops::Neg for Half {
    type Output = Half;
    fn neg(self) -> Half {
        Half(-self.0)
    }
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

#[derive(Error, Debug, Clone, PartialEq)]
pub enum ArithError {
    #[error("q-factorial of negative argument {0}")]
    NegativeFactorial(i64),
    #[error("negative spin {0} where a representation label is required")]
    NegativeSpin(Half),
    #[error("exact Laurent mode does not support argument {0}: result is not a Laurent polynomial in q^(1/2)")]
    ExactUnsupported(Half),
    #[error("q ∈ (0,1) required, got {0}")]
    InvalidQ(f64),
}

/// Precision mode of a context.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Mode {
    #[default]
    Float64,
    /// Double-double (~31 significant digits) for the alternating Racah sums.
    Extended,
    /// Exact Laurent-polynomial arithmetic; only identity-level operations.
    ExactLaurent,
}

/// Deformation parameter, precision mode, tolerances and memo caches.
///
/// All operations taking `&QContext` are pure; the caches only memoize and
/// admit concurrent readers.
pub struct QContext {
    pub q: f64,
    /// `-ln q > 0`.
    pub hbar: f64,
    pub mode: Mode,
    pub rel_tol: f64,
    pub abs_tol: f64,
    qfact: RwLock<Vec<f64>>,
    pub(crate) cgc_cache: DashMap<(i64, i64, i64), std::sync::Arc<Vec<f64>>>,
    pub(crate) sixj_cache: DashMap<[i64; 6], C64>,
}

impl QContext {
    pub fn new(q: f64) -> Result<Self, ArithError> {
        if !(q > 0.0 && q < 1.0) {
            return Err(ArithError::InvalidQ(q));
        }
        Ok(QContext {
            q,
            hbar: -q.ln(),
            mode: Mode::Float64,
            rel_tol: 1e-9,
            abs_tol: 1e-12,
            qfact: RwLock::new(vec![1.0]),
            cgc_cache: DashMap::new(),
            sixj_cache: DashMap::new(),
        })
    }

    pub fn with_mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    /// `q^x` for complex `x`; entire, no branch cut.
    pub fn qpow(&self, x: C64) -> C64 {
        (-self.hbar * x).exp()
    }

    /// `q^x` for real `x`.
    pub fn qpow_re(&self, x: f64) -> f64 {
        (-self.hbar * x).exp()
    }

    /// `q^x` for half-integer `x`.
    pub fn qpow_half(&self, x: Half) -> f64 {
        self.qpow_re(x.f64())
    }

    /// `q - q^{-1}` (negative for `q` in `(0,1)`).
    pub fn qdiff(&self) -> f64 {
        self.q - 1.0 / self.q
    }

    /// q-number `[x]` for complex `x`.
    pub fn qnum(&self, x: C64) -> C64 {
        (self.qpow(x) - self.qpow(-x)) / self.qdiff()
    }

    /// q-number `[x]` for real `x`; positive iff `x > 0`.
    pub fn qnum_re(&self, x: f64) -> f64 {
        // 2 sinh(hbar x) / (q^{-1} - q), stable for small x
        2.0 * (self.hbar * x).sinh() / (1.0 / self.q - self.q)
    }

    pub fn qnum_half(&self, x: Half) -> f64 {
        self.qnum_re(x.f64())
    }

    /// q-factorial `[n]! = [1][2]...[n]`, memoized.
    pub fn qfact(&self, n: i64) -> Result<f64, ArithError> {
        if n < 0 {
            return Err(ArithError::NegativeFactorial(n));
        }
        let n = n as usize;
        {
            let tab = self.qfact.read().unwrap();
            if n < tab.len() {
                return Ok(tab[n]);
            }
        }
        let mut tab = self.qfact.write().unwrap();
        while tab.len() <= n {
            let k = tab.len() as f64;
            let last = *tab.last().unwrap();
            tab.push(last * self.qnum_re(k));
        }
        Ok(tab[n])
    }

    /// `1/[n]!` with the convention `1/[n]! = 0` for `n < 0`, as needed by
    /// the terminating recoupling sums.
    pub fn inv_qfact(&self, n: i64) -> f64 {
        if n < 0 {
            0.0
        } else {
            1.0 / self.qfact(n).unwrap()
        }
    }

    /// q-binomial; `0` outside `0 <= p <= n`.
    pub fn qbinom(&self, n: i64, p: i64) -> f64 {
        if n < 0 || p < 0 || p > n {
            return 0.0;
        }
        self.qfact(n).unwrap() * self.inv_qfact(p) * self.inv_qfact(n - p)
    }

    /// Shifted product `[P]_k = [P][P+1]...[P+k-1]`, empty product = 1.
    /// Negative lengths follow the usual extension `[P]_{-k} = 1/[P-k]_k`,
    /// so that `[P]_a [P+a]_b = [P]_{a+b}` holds for all signs.
    pub fn shifted_product(&self, p: C64, k: i64) -> C64 {
        let mut acc = C64::new(1.0, 0.0);
        if k >= 0 {
            for i in 0..k {
                acc *= self.qnum(p + i as f64);
            }
        } else {
            for i in 1..=(-k) {
                acc /= self.qnum(p - i as f64);
            }
        }
        acc
    }

    /// Quantum dimension `[d_K] = [2K+1]`.
    pub fn qdim(&self, k: Half) -> Result<f64, ArithError> {
        if !k.is_nonneg() {
            return Err(ArithError::NegativeSpin(k));
        }
        Ok(self.qnum_re(k.f64() * 2.0 + 1.0))
    }

    /// Ribbon element `v_K = q^{-2K(K+1)} e^{2iπK}`.
    pub fn ribbon(&self, k: Half) -> C64 {
        let t = k.0;
        let mag = self.qpow_re(-(t * (t + 2)) as f64 / 2.0);
        C64::new(k.parity_sign() * mag, 0.0)
    }

    /// `v_K^{1/2} = e^{iπK} q^{-K(K+1)}`.
    pub fn ribbon_sqrt(&self, k: Half) -> C64 {
        let t = k.0;
        let mag = self.qpow_re(-(t * (t + 2)) as f64 / 4.0);
        phase_i_pow(t) * mag
    }

    /// `v_K^{1/4} = e^{iπK/2} q^{-K(K+1)/2}`, the pinned fourth root.
    pub fn ribbon_quarter(&self, k: Half) -> C64 {
        let t = k.0;
        let mag = self.qpow_re(-(t * (t + 2)) as f64 / 8.0);
        C64::from_polar(1.0, std::f64::consts::FRAC_PI_4 * t as f64) * mag
    }

    /// Ribbon ratio `v_{ℵ+j}/v_ℵ = (-1)^{2j} q^{-2j(j+1)} q^{-2j(2ℵ+1)}`;
    /// well defined for complex `ℵ` and half-integer `j` since `q^x` is
    /// entire.
    pub fn ribbon_shift_ratio(&self, aleph: C64, j: Half) -> C64 {
        let jf = j.f64();
        let two_aleph_p1 = 2.0 * aleph + 1.0;
        j.parity_sign() * self.qpow_re(-2.0 * jf * (jf + 1.0)) * self.qpow(-2.0 * jf * two_aleph_p1)
    }

    /// Diagonal entry `q^{2m}` of `μ = q^{2J_z}`.
    pub fn mu_entry(&self, m: Half) -> f64 {
        self.qpow_re(2.0 * m.f64())
    }
}

/// `e^{iπK}` for half-integer `K` stored doubled: `i^t`.
pub fn phase_i_pow(t: i64) -> C64 {
    match t.rem_euclid(4) {
        0 => C64::new(1.0, 0.0),
        1 => C64::new(0.0, 1.0),
        2 => C64::new(-1.0, 0.0),
        _ => C64::new(0.0, -1.0),
    }
}

/// `(-1)^n` for integer `n`.
pub fn neg_one_pow(n: i64) -> f64 {
    if n.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

// ---------------------------------------------------------------------------
// Exact (Laurent-polynomial) variants
// ---------------------------------------------------------------------------

/// Exact `[x]` for integer `x`: `q^{x-1} + q^{x-3} + ... + q^{-(x-1)}`.
pub fn qnum_exact(x: Half) -> Result<LaurentPoly, ArithError> {
    let n = x.as_int().ok_or(ArithError::ExactUnsupported(x))?;
    let mut p = LaurentPoly::zero();
    let (sign, n_abs) = if n >= 0 { (1, n) } else { (-1, -n) };
    for k in 0..n_abs {
        // exponent (n-1-2k), doubled
        p += LaurentPoly::monomial_i64(2 * (n_abs - 1 - 2 * k), sign);
    }
    Ok(p)
}

/// Exact `[n]!`.
pub fn qfact_exact(n: i64) -> Result<LaurentPoly, ArithError> {
    if n < 0 {
        return Err(ArithError::NegativeFactorial(n));
    }
    let mut acc = LaurentPoly::one();
    for k in 1..=n {
        acc = &acc * &qnum_exact(Half::int(k))?;
    }
    Ok(acc)
}

/// Row `n` of the exact q-Pascal triangle: `[n choose 0] ... [n choose n]`.
pub fn qbinom_row(n: i64) -> Vec<LaurentPoly> {
    let mut row: Vec<LaurentPoly> = vec![LaurentPoly::one()];
    for k in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        for j in 0..=(k + 1) {
            // [n+1 choose p] = q^p [n choose p] + q^{p-n-1} [n choose p-1]
            let mut term = LaurentPoly::zero();
            if j <= k {
                term += &row[j as usize] * &LaurentPoly::monomial_i64(2 * j, 1);
            }
            if j >= 1 {
                term += &row[(j - 1) as usize] * &LaurentPoly::monomial_i64(2 * (j - k - 1), 1);
            }
            next.push(term);
        }
        row = next;
    }
    row
}

/// Exact q-binomial via the Pascal recursion, division-free; `0` outside
/// `0 <= p <= n`.
pub fn qbinom_exact(n: i64, p: i64) -> LaurentPoly {
    if n < 0 || p < 0 || p > n {
        return LaurentPoly::zero();
    }
    qbinom_row(n)[p as usize].clone()
}

/// Exact `[d_K] = [2K+1]`.
pub fn qdim_exact(k: Half) -> Result<LaurentPoly, ArithError> {
    if !k.is_nonneg() {
        return Err(ArithError::NegativeSpin(k));
    }
    qnum_exact(Half(2 * k.0 + 2))
}

/// Exact `q^{2m}` (a monomial; `2m` is always an integer exponent).
pub fn mu_entry_exact(m: Half) -> LaurentPoly {
    LaurentPoly::monomial_i64(2 * m.0, 1)
}
