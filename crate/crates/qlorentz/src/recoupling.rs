//! Recoupling data of the compact quantum group at real `q`: selection
//! rules, Clebsch-Gordan coefficients, R-matrices, the contragredient `W`
//! matrices and 6j symbols.
//!
//! Conventions (pinned once, verified by the identity suite):
//! - CGC are real, `⟨I I; J J|I+J I+J⟩ = 1`, and the highest coefficient of
//!   the Wigner convention is positive.
//! - `R^{(+)}` raises the first tensor factor (`J₊ ⊗ J₋` tail); `R^{(-)}`
//!   is the inverse of the flipped `R^{(+)}`.
//! - The 6j layout `{A B; D C | E F}` carries the triangles `(A,B,E)`,
//!   `(A,C,F)`, `(C,E,D)`, `(D,B,F)`; values are real.

use std::sync::Arc;

use crate::cmatrix::CMat;
use crate::extended::DdQ;
use crate::qarith::{neg_one_pow, phase_i_pow, Half, Mode, QContext};
use crate::C64;

/// Triangle rule: 1 iff `I+J-K`, `J+K-I`, `K+I-J` are nonnegative integers.
pub fn y3(i: Half, j: Half, k: Half) -> bool {
    let (a, b, c) = (i.0, j.0, k.0);
    let s = a + b + c;
    s % 2 == 0 && a + b >= c && b + c >= a && c + a >= b
}

/// 1 iff `I+J` and `I-J` are nonnegative integers.
pub fn ytilde(i: Half, j: Half) -> bool {
    (i.0 + j.0) % 2 == 0 && i.0 + j.0 >= 0 && i.0 - j.0 >= 0
}

/// Index of magnetic number `m` inside a spin-`j` block.
pub(crate) fn midx(j: Half, m: Half) -> usize {
    ((m.0 + j.0) / 2) as usize
}

pub(crate) fn dim(j: Half) -> usize {
    (j.0 + 1) as usize
}

// ---------------------------------------------------------------------------
// Clebsch-Gordan coefficients
// ---------------------------------------------------------------------------

fn cgc_tensor(ctx: &QContext, i: Half, j: Half, k: Half) -> Arc<Vec<f64>> {
    let key = (i.0, j.0, k.0);
    if let Some(t) = ctx.cgc_cache.get(&key) {
        return t.clone();
    }
    let t = Arc::new(cgc_compute(ctx, i, j, k));
    ctx.cgc_cache.insert(key, t.clone());
    t
}

fn cgc_compute(ctx: &QContext, i: Half, j: Half, k: Half) -> Vec<f64> {
    let (di, dj) = (dim(i), dim(j));
    let mut out = vec![0.0; di * dj];
    if !y3(i, j, k) {
        return out;
    }
    for m in i.magnetics() {
        for n in j.magnetics() {
            let p = m + n;
            if p.0.abs() > k.0 {
                continue;
            }
            out[midx(i, m) * dj + midx(j, n)] = cgc_term(ctx, i, j, k, m, n, p);
        }
    }
    out
}

fn cgc_term(ctx: &QContext, i: Half, j: Half, k: Half, m: Half, n: Half, p: Half) -> f64 {
    let int = |h: Half| h.as_int().expect("integer by selection rules");
    // q-exponent in eighths: m(p+1) + (J(J+1) - I(I+1) - K(K+1))/2
    let e8 = 2 * m.0 * (p.0 + 2) + j.0 * (j.0 + 2) - i.0 * (i.0 + 2) - k.0 * (k.0 + 2);
    let sign = neg_one_pow(int(i - m));
    let fact = |h: Half| ctx.qfact(int(h)).unwrap();
    let norm = ctx.qdim(k).unwrap() * fact(i + j - k) * fact(i - m) * fact(j - n) * fact(k - p)
        * fact(k + p)
        / (fact(k + j - i) * fact(i + k - j) * fact(i + j + k + Half::ONE) * fact(i + m)
            * fact(j + n));
    let mut sum = 0.0;
    let mut comp = 0.0; // Kahan compensation
    let vmax = int(k - p);
    for v in 0..=vmax.max(-1) {
        let term = neg_one_pow(v)
            * ctx.qpow_re(v as f64 * (k.f64() + p.f64() + 1.0))
            * ctx.qfact(int(i + m) + v).unwrap()
            * ctx.qfact(int(j + k - m) - v).unwrap()
            * ctx.inv_qfact(v)
            * ctx.inv_qfact(vmax - v)
            * ctx.inv_qfact(int(i - m) - v)
            * ctx.inv_qfact(int(j - k + m) + v);
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    sign * ctx.qpow_re(e8 as f64 / 8.0) * norm.sqrt() * sum
}

/// Clebsch-Gordan coefficient `⟨I m; J n | K p⟩`; zero unless `m+n = p` and
/// the triangle holds. Values are cached per `(I,J,K)`.
pub fn cgc(ctx: &QContext, i: Half, j: Half, k: Half, m: Half, n: Half, p: Half) -> f64 {
    if m + n != p || !y3(i, j, k) || m.0.abs() > i.0 || n.0.abs() > j.0 || p.0.abs() > k.0 {
        return 0.0;
    }
    cgc_tensor(ctx, i, j, k)[midx(i, m) * dim(j) + midx(j, n)]
}

// ---------------------------------------------------------------------------
// R matrices
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RSign {
    Plus,
    Minus,
}

/// Finite-dimensional R-matrix on `V^A ⊗ V^B`, stored as a dense matrix in
/// the lexicographic `(m_A, m_B)` basis (row = out, column = in).
pub struct RMatrix {
    pub a: Half,
    pub b: Half,
    pub sign: RSign,
    pub mat: CMat,
}

pub(crate) fn tidx(a: Half, b: Half, ma: Half, mb: Half) -> usize {
    midx(a, ma) * dim(b) + midx(b, mb)
}

/// Single element `⟨n1+n, n2-n| R^{(+)} |n1, n2⟩` of the positive R-matrix.
fn rplus_element(ctx: &QContext, a: Half, b: Half, n1: Half, n2: Half, n: i64) -> f64 {
    let int = |h: Half| h.as_int().unwrap();
    if n < 0 {
        return 0.0;
    }
    let nn = Half::int(n);
    if (n1 + nn).0 > a.0 || (n2 - nn).0 < -b.0 {
        return 0.0;
    }
    let fact = |k: i64| ctx.qfact(k).unwrap();
    let rad = fact(int(a - n1)) * fact(int(a + n1) + n) * fact(int(b + n2))
        * fact(int(b - n2) + n)
        / (fact(int(a - n1) - n) * fact(int(a + n1)) * fact(int(b + n2) - n) * fact(int(b - n2)));
    let expo = 2.0 * n1.f64() * n2.f64()
        - n as f64 * (n1.f64() - n2.f64() + (n as f64 + 1.0) / 2.0);
    ctx.qdiff().powi(n as i32) * ctx.inv_qfact(n) * ctx.qpow_re(expo) * rad.sqrt()
}

/// R-matrix on `V^A ⊗ V^B`. `Plus` is the universal R in these
/// representations; `Minus` is `(σ R σ)^{-1}`, computed by inversion (the
/// matrix is weight-block finite and unit-triangular up to diagonal).
pub fn rmat(ctx: &QContext, a: Half, b: Half, sign: RSign) -> RMatrix {
    let (da, db) = (dim(a), dim(b));
    let build_plus = |a: Half, b: Half| {
        CMat::from_fn(dim(a) * dim(b), dim(a) * dim(b), |row, col| {
            let (o1, o2) = (
                Half(-a.0 + 2 * (row / dim(b)) as i64),
                Half(-b.0 + 2 * (row % dim(b)) as i64),
            );
            let (i1, i2) = (
                Half(-a.0 + 2 * (col / dim(b)) as i64),
                Half(-b.0 + 2 * (col % dim(b)) as i64),
            );
            let n2 = (o1 - i1).0;
            if n2 % 2 != 0 || o2 - i2 != i1 - o1 {
                return C64::new(0.0, 0.0);
            }
            C64::new(rplus_element(ctx, a, b, i1, i2, n2 / 2), 0.0)
        })
    };
    let mat = match sign {
        RSign::Plus => build_plus(a, b),
        RSign::Minus => {
            // σ(R)^{AB}[(o1,o2),(i1,i2)] = R^{BA}[(o2,o1),(i2,i1)]
            let rba = build_plus(b, a);
            let flipped = CMat::from_fn(da * db, da * db, |row, col| {
                let (o1, o2) = (row / db, row % db);
                let (i1, i2) = (col / db, col % db);
                rba[(o2 * da + o1, i2 * da + i1)]
            });
            flipped.inverse().expect("R is invertible")
        }
    };
    RMatrix { a, b, sign, mat }
}

/// Contragredient matrix `ŵ^{mn} = v_I^{-1/2} δ_{m,-n} e^{-iπm} q^m`.
pub fn wmat(ctx: &QContext, i: Half) -> CMat {
    let v_inv_sqrt = 1.0 / ctx.ribbon_sqrt(i);
    CMat::from_fn(dim(i), dim(i), |r, c| {
        let m = Half(-i.0 + 2 * r as i64);
        let n = Half(-i.0 + 2 * c as i64);
        if m + n != Half::ZERO {
            return C64::new(0.0, 0.0);
        }
        v_inv_sqrt * phase_i_pow(-m.0) * ctx.qpow_half(m)
    })
}

// ---------------------------------------------------------------------------
// 6j symbols
// ---------------------------------------------------------------------------

/// `Δ(I,J,K) = sqrt([J+K-I]![J+I-K]![I+K-J]!/[I+J+K+1]!)`.
pub fn delta3(ctx: &QContext, i: Half, j: Half, k: Half) -> f64 {
    let int = |h: Half| h.as_int().unwrap();
    let f = |h: Half| ctx.qfact(int(h)).unwrap();
    (f(j + k - i) * f(j + i - k) * f(i + k - j) / f(i + j + k + Half::ONE)).sqrt()
}

/// 6j symbol `{A B; D C | E F}` with triangles `(A,B,E)`, `(A,C,F)`,
/// `(C,E,D)`, `(D,B,F)`. Real; computed by the alternating Racah sum, in
/// double-double arithmetic when the context mode is `Extended`.
pub fn sixj(ctx: &QContext, a: Half, b: Half, d: Half, c: Half, e: Half, f: Half) -> C64 {
    if !(y3(a, b, e) && y3(a, c, f) && y3(c, e, d) && y3(d, b, f)) {
        return C64::new(0.0, 0.0);
    }
    let key = [a.0, b.0, d.0, c.0, e.0, f.0];
    if let Some(v) = ctx.sixj_cache.get(&key) {
        return *v;
    }
    let int = |h: Half| h.as_int().unwrap();
    let lo = int(a + c + f)
        .max(int(a + b + e))
        .max(int(b + d + f))
        .max(int(d + c + e));
    let hi = int(a + b + c + d)
        .min(int(a + d + e + f))
        .min(int(b + c + e + f));
    let phase = neg_one_pow(int(c + d - a - b) + e.0);
    let val = if ctx.mode == Mode::Extended {
        sixj_sum_dd(ctx, a, b, d, c, e, f, lo, hi)
    } else {
        let pref = (ctx.qdim(e).unwrap() * ctx.qdim(f).unwrap()).sqrt()
            * delta3(ctx, a, b, e)
            * delta3(ctx, a, c, f)
            * delta3(ctx, c, e, d)
            * delta3(ctx, d, b, f);
        let mut sum = 0.0;
        let mut comp = 0.0;
        for u in lo..=hi {
            let term = neg_one_pow(u) * ctx.qfact(u + 1).unwrap()
                * ctx.inv_qfact(u - int(a + c + f))
                * ctx.inv_qfact(u - int(a + b + e))
                * ctx.inv_qfact(u - int(b + d + f))
                * ctx.inv_qfact(u - int(d + c + e))
                * ctx.inv_qfact(int(a + b + c + d) - u)
                * ctx.inv_qfact(int(a + d + e + f) - u)
                * ctx.inv_qfact(int(b + c + e + f) - u);
            let y = term - comp;
            let t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
        pref * sum
    };
    let out = C64::new(phase * val, 0.0);
    ctx.sixj_cache.insert(key, out);
    out
}

fn sixj_sum_dd(
    ctx: &QContext,
    a: Half,
    b: Half,
    d: Half,
    c: Half,
    e: Half,
    f: Half,
    lo: i64,
    hi: i64,
) -> f64 {
    use crate::extended::Dd;
    let int = |h: Half| h.as_int().unwrap();
    let max_f = (int(a + b + c + d) + e.0 + f.0 + 2) as usize;
    let ddq = DdQ::new(ctx.q, max_f);
    let delta_dd = |i: Half, j: Half, k: Half| {
        ddq.qfact(int(j + k - i))
            .mul(ddq.qfact(int(j + i - k)))
            .mul(ddq.qfact(int(i + k - j)))
            .div(ddq.qfact(int(i + j + k + Half::ONE)))
            .sqrt()
    };
    let qdim_dd = |k: Half| ddq.qnum_int(k.0 + 1);
    let pref = qdim_dd(e)
        .mul(qdim_dd(f))
        .sqrt()
        .mul(delta_dd(a, b, e))
        .mul(delta_dd(a, c, f))
        .mul(delta_dd(c, e, d))
        .mul(delta_dd(d, b, f));
    let mut sum = Dd::ZERO;
    for u in lo..=hi {
        let mut term = ddq
            .qfact(u + 1)
            .mul(ddq.inv_qfact(u - int(a + c + f)))
            .mul(ddq.inv_qfact(u - int(a + b + e)))
            .mul(ddq.inv_qfact(u - int(b + d + f)))
            .mul(ddq.inv_qfact(u - int(d + c + e)))
            .mul(ddq.inv_qfact(int(a + b + c + d) - u))
            .mul(ddq.inv_qfact(int(a + d + e + f) - u))
            .mul(ddq.inv_qfact(int(b + c + e + f) - u));
        if u % 2 != 0 {
            term = term.neg();
        }
        sum = sum.add(term);
    }
    pref.mul(sum).to_f64()
}

/// Overlap of the two recoupling routes of `A ⊗ B ⊗ C -> F`, contracted
/// from four Clebsch-Gordan tensors:
/// `Σ ⟨A a;B b|E e⟩⟨E e;C c|F f⟩ ⟨B b;C c|D d⟩⟨A a;D d|F f⟩` at any fixed
/// `f`. This is the convention-free object the 6j symbol encodes; see
/// [`sixj_from_cgc`].
pub fn recoupling_overlap(
    ctx: &QContext,
    a: Half,
    b: Half,
    c: Half,
    f: Half,
    e: Half,
    d: Half,
) -> f64 {
    if !(y3(a, b, e) && y3(e, c, f) && y3(b, c, d) && y3(a, d, f)) {
        return 0.0;
    }
    let ff = f; // fixed total magnetic number: use p = F (highest weight)
    let pf = ff;
    let mut sum = 0.0;
    for ma in a.magnetics() {
        for mb in b.magnetics() {
            let me = ma + mb;
            if me.0.abs() > e.0 {
                continue;
            }
            let mc = pf - me;
            if mc.0.abs() > c.0 {
                continue;
            }
            let md = mb + mc;
            if md.0.abs() > d.0 {
                continue;
            }
            sum += cgc(ctx, a, b, e, ma, mb, me)
                * cgc(ctx, e, c, f, me, mc, pf)
                * cgc(ctx, b, c, d, mb, mc, md)
                * cgc(ctx, a, d, f, ma, md, pf);
        }
    }
    sum
}

/// Change-of-basis coefficient from the right-bracket basis `D` to the
/// left-bracket basis `E` of `A ⊗ B ⊗ C -> F`, expressed through the 6j
/// symbol: exactly `{A B; C F | E D}`, no extra phase or dimension factor.
/// Matches [`recoupling_overlap`]; the identity suite verifies the two
/// routes against each other.
pub fn recoupling_kappa(ctx: &QContext, a: Half, b: Half, c: Half, f: Half, e: Half, d: Half) -> f64 {
    sixj(ctx, a, b, c, f, e, d).re
}
