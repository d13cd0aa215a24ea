//! One-parameter complex continuations of the 6j symbols.
//!
//! In the Racah sum of the classical 6j every occurrence of the continued
//! spins combines into factorial *ratios* of bounded length, which extend to
//! complex arguments as shifted products of q-numbers (no q-Gamma function
//! is needed). Substituting `T = U - 2ℵ` and rewriting each `Δ` and the
//! `[U+1]!` ratio this way yields a finite alternating sum that reduces to
//! the classical symbol whenever `ℵ` is a half-integer large enough for the
//! dropped constraint to be vacuous.
//!
//! Two families are provided:
//! - [`sixj_cont1`]: three continued entries, `{B C; ℵ+N ℵ | A; ℵ+M}`;
//! - [`sixj_cont2`]: four continued entries, `{A ℵ+N; B ℵ | ℵ+P; ℵ+M}`.
//!
//! The triangle constraint involving only continued entries is relaxed: it
//! survives as the integrality conditions `Ỹ` between each discrete spin
//! and its adjacent offsets, plus a nonempty summation interval.
//!
//! Branch convention: every square root is the principal one, taken factor
//! by factor. Radicands that land on the negative real axis (possible in
//! the real-parameter complementary range) are reported through the
//! `on_cut` flag of [`theta_cont`] / [`delta_cont`].

use crate::qarith::{neg_one_pow, Half, QContext};
use crate::recoupling::{delta3, y3, ytilde};
use crate::C64;

/// Square-root value together with a flag marking a radicand on the
/// negative real axis (where the principal branch is a pinned choice).
#[derive(Clone, Copy, Debug)]
pub struct BranchValue {
    pub value: C64,
    pub on_cut: bool,
}

fn csqrt(z: C64) -> BranchValue {
    let on_cut = z.re < 0.0 && z.im.abs() <= 1e-13 * z.re.abs();
    BranchValue { value: z.sqrt(), on_cut }
}

/// Continued triangle factor `Δ(J, ℵ, ℵ+m)` for a discrete spin `J`,
/// offset `m` and complex base `ℵ`:
/// `sqrt( [J+m]! [J-m]! / [2ℵ+m-J+1]_{2J+1} )`.
pub fn delta_cont(ctx: &QContext, j: Half, m: Half, aleph: C64) -> BranchValue {
    let int = |h: Half| h.as_int().unwrap();
    let num = ctx.qfact(int(j + m)).unwrap() * ctx.qfact(int(j - m)).unwrap();
    let den = ctx.shifted_product(2.0 * aleph + (m - j).f64() + 1.0, j.0 + 1);
    csqrt(num / den)
}

/// The Θ normalisation factor
/// `Θ_{J,ℵ+m}^{ℵ} = sqrt([2J]!/([J+m]![J-m]!)) sqrt([2ℵ+m-J+1]_{J+m} [2ℵ+2]_{J+m})`,
/// the combination in which the continuation prefactors organise
/// themselves. Related to [`delta_cont`] by
/// `Θ · Δ(J,ℵ,ℵ+m) = sqrt([2J]! [2ℵ+2]_{2m-1})`.
pub fn theta_cont(ctx: &QContext, j: Half, m: Half, aleph: C64) -> BranchValue {
    let int = |h: Half| h.as_int().unwrap();
    let norm =
        ctx.qfact(j.0).unwrap() / (ctx.qfact(int(j + m)).unwrap() * ctx.qfact(int(j - m)).unwrap());
    let k = int(j + m);
    let shifted = ctx.shifted_product(2.0 * aleph + (m - j).f64() + 1.0, k)
        * ctx.shifted_product(2.0 * aleph + 2.0, k);
    let s = csqrt(shifted);
    BranchValue { value: norm.sqrt() * s.value, on_cut: s.on_cut }
}

/// First-type continuation `{B C; ℵ+N ℵ | A; ℵ+M}`: discrete spins `B, C,
/// A`, complex base `ℵ`, half-integer offsets `N, M`. Zero when the relaxed
/// selection rule fails or the summation interval is empty. Reduces to the
/// classical 6j at half-integer `ℵ` large enough.
pub fn sixj_cont1(
    ctx: &QContext,
    b: Half,
    c: Half,
    a: Half,
    aleph: C64,
    n: Half,
    m: Half,
) -> C64 {
    let zero = C64::new(0.0, 0.0);
    if !(y3(b, c, a) && ytilde(b, m) && ytilde(a, n) && ytilde(c, m - n)) {
        return zero;
    }
    let int = |h: Half| h.as_int().unwrap();
    // bounds: max(B+M, A+N, C+M+N) <= T <= min(B+C+N, A+B+M+N, A+C+M)
    let cmn = (c.0 + m.0 + n.0) / 2;
    let lo = int(b + m).max(int(a + n)).max(cmn);
    let hi = ((b.0 + c.0 + n.0) / 2)
        .min((a.0 + b.0 + m.0 + n.0) / 2)
        .min((a.0 + c.0 + m.0) / 2);
    if lo > hi {
        return zero;
    }
    let phase = neg_one_pow(int(b + c - a - a - n));
    let pref = C64::new(ctx.qdim(a).unwrap().sqrt(), 0.0)
        * csqrt(ctx.qnum(2.0 * (aleph + m.f64()) + 1.0)).value
        * delta3(ctx, b, c, a)
        * delta_cont(ctx, b, m, aleph).value
        * delta_cont(ctx, a, n, aleph).value
        * delta_cont(ctx, c, m - n, aleph + n.f64()).value;
    let abc = int(a + b + c);
    let mut sum = zero;
    for t in lo..=hi {
        let bulk = ctx.shifted_product(2.0 * aleph + (t - abc + 1) as f64, abc + 1);
        let term = neg_one_pow(t)
            * bulk
            * ctx.inv_qfact(t - int(a + n))
            * ctx.inv_qfact(t - int(b + m))
            * ctx.inv_qfact(t - cmn)
            * ctx.inv_qfact((b.0 + c.0 + n.0) / 2 - t)
            * ctx.inv_qfact((a.0 + b.0 + m.0 + n.0) / 2 - t)
            * ctx.inv_qfact((a.0 + c.0 + m.0) / 2 - t);
        sum += term;
    }
    phase * pref * sum
}

/// Second-type continuation `{A ℵ+N; B ℵ | ℵ+P; ℵ+M}`: discrete spins
/// `A, B`, complex base `ℵ`, half-integer offsets `N, M, P`.
pub fn sixj_cont2(
    ctx: &QContext,
    a: Half,
    b: Half,
    aleph: C64,
    n: Half,
    m: Half,
    p: Half,
) -> C64 {
    let zero = C64::new(0.0, 0.0);
    if !(ytilde(a, m) && ytilde(a, n - p) && ytilde(b, p) && ytilde(b, m - n)) {
        return zero;
    }
    let int = |h: Half| h.as_int().unwrap();
    // bounds: max(A+M, A+N+P, B+P, B+M+N) <= T <= min(A+B+N, A+B+M+P)
    let anp = (a.0 + n.0 + p.0) / 2;
    let bmn = (b.0 + m.0 + n.0) / 2;
    let lo = int(a + m).max(anp).max(int(b + p)).max(bmn);
    let hi = ((a.0 + b.0 + n.0) / 2).min((a.0 + b.0 + m.0 + p.0) / 2);
    if lo > hi {
        return zero;
    }
    let phase = neg_one_pow((a.0 - b.0 + n.0 - 2 * p.0) / 2);
    let pref = csqrt(ctx.qnum(2.0 * (aleph + p.f64()) + 1.0)).value
        * csqrt(ctx.qnum(2.0 * (aleph + m.f64()) + 1.0)).value
        * delta_cont(ctx, a, n - p, aleph + p.f64()).value
        * delta_cont(ctx, a, m, aleph).value
        * delta_cont(ctx, b, p, aleph).value
        * delta_cont(ctx, b, m - n, aleph + n.f64()).value;
    let mnp = (m.0 + n.0 + p.0) / 2;
    let mut sum = zero;
    for t in lo..=hi {
        let len = 2 * t - mnp + 1;
        let bulk = ctx.shifted_product(2.0 * aleph + (mnp - t) as f64 + 1.0, len);
        let term = neg_one_pow(t)
            * bulk
            * ctx.inv_qfact(t - int(a + m))
            * ctx.inv_qfact(t - anp)
            * ctx.inv_qfact(t - bmn)
            * ctx.inv_qfact(t - int(b + p))
            * ctx.inv_qfact((a.0 + b.0 + n.0) / 2 - t)
            * ctx.inv_qfact((a.0 + b.0 + m.0 + p.0) / 2 - t);
        sum += term;
    }
    phase * pref * sum
}
