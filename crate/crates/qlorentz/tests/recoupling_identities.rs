//! Identity suite for the recoupling data: CGC unitarity, the 6j identities
//! (symmetries, Racah-Wigner, pentagon, unitarity), Yang-Baxter, fusion of
//! R-matrices, the twist relation and the contragredient W matrices.

use num_complex::Complex64 as C64;
use qlorentz::cmatrix::CMat;
use qlorentz::qarith::{neg_one_pow, Half, QContext};
use qlorentz::recoupling::*;

fn ctx() -> QContext {
    QContext::new(0.3).unwrap()
}

fn spins_upto(t: i64) -> Vec<Half> {
    (0..=t).map(Half).collect()
}

/// ψ matrix of `⟨A a; B b|C c⟩`: rows = c, cols = (a,b).
fn psi(ctx: &QContext, a: Half, b: Half, c: Half) -> CMat {
    let (da, db, dc) = ((a.0 + 1) as usize, (b.0 + 1) as usize, (c.0 + 1) as usize);
    CMat::from_fn(dc, da * db, |row, col| {
        let mc = Half(-c.0 + 2 * row as i64);
        let ma = Half(-a.0 + 2 * (col / db) as i64);
        let mb = Half(-b.0 + 2 * (col % db) as i64);
        C64::new(cgc(ctx, a, b, c, ma, mb, mc), 0.0)
    })
}

/// Tensor-factor swap `V_A ⊗ V_B -> V_B ⊗ V_A`.
fn swap(a: Half, b: Half) -> CMat {
    let (da, db) = ((a.0 + 1) as usize, (b.0 + 1) as usize);
    CMat::from_fn(da * db, da * db, |row, col| {
        let (ob, oa) = (row / da, row % da);
        let (ia, ib) = (col / db, col % db);
        C64::new(if oa == ia && ob == ib { 1.0 } else { 0.0 }, 0.0)
    })
}

#[test]
fn overlap_matches_sixj_everywhere() {
    // the pinned dictionary: overlap(A,B,C,F;E,D) = {A B; C F | E D}
    let c = ctx();
    let mut checked = 0;
    for a in spins_upto(5) {
        for b in spins_upto(5) {
            for cc in spins_upto(5) {
                for f in spins_upto(5) {
                    for e in spins_upto(6) {
                        for d in spins_upto(6) {
                            if !(y3(a, b, e) && y3(e, cc, f) && y3(b, cc, d) && y3(a, d, f)) {
                                continue;
                            }
                            let ov = recoupling_overlap(&c, a, b, cc, f, e, d);
                            let sj = recoupling_kappa(&c, a, b, cc, f, e, d);
                            assert!(
                                (ov - sj).abs() < 1e-11,
                                "A={a} B={b} C={cc} F={f} E={e} D={d}: {ov} vs {sj}"
                            );
                            checked += 1;
                        }
                    }
                }
            }
        }
    }
    assert!(checked > 500, "grid too sparse: {checked}");
}

#[test]
fn sixj_symmetries() {
    // {A B; D C|E F} = {B A; C D|E F} = {D C; A B|E F} = {A C; D B|F E}
    let c = ctx();
    for a in spins_upto(6) {
        for b in spins_upto(6) {
            for d in spins_upto(6) {
                for cc in spins_upto(6) {
                    for e in spins_upto(6) {
                        for f in spins_upto(6) {
                            let v = sixj(&c, a, b, d, cc, e, f);
                            let s1 = sixj(&c, b, a, cc, d, e, f);
                            let s2 = sixj(&c, d, cc, a, b, e, f);
                            let s3 = sixj(&c, a, cc, d, b, f, e);
                            for (i, s) in [s1, s2, s3].iter().enumerate() {
                                assert!(
                                    (v - s).norm() <= 1e-12 * v.norm().max(1.0),
                                    "symmetry {i} at {a} {b} {d} {cc} {e} {f}: {v} vs {s}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn racah_wigner_relation() {
    // {A C; B E|F D} = (-1)^{C-F+E-D} {A F; B D|C E} sqrt([dF][dD]/([dC][dE]))
    let c = ctx();
    let mut checked = 0;
    for a in spins_upto(6) {
        for cc in spins_upto(6) {
            for b in spins_upto(6) {
                for e in spins_upto(6) {
                    for f in spins_upto(6) {
                        for d in spins_upto(6) {
                            let lhs = sixj(&c, a, cc, b, e, f, d);
                            if lhs.norm() < 1e-15 {
                                continue;
                            }
                            let dims = (c.qdim(f).unwrap() * c.qdim(d).unwrap()
                                / (c.qdim(cc).unwrap() * c.qdim(e).unwrap()))
                            .sqrt();
                            let sign = neg_one_pow((cc.0 - f.0 + e.0 - d.0) / 2);
                            let rhs = sixj(&c, a, f, b, d, cc, e) * sign * dims;
                            assert!(
                                (lhs - rhs).norm() < 1e-9 * lhs.norm().max(1.0),
                                "at {a} {cc} {b} {e} {f} {d}: {lhs} vs {rhs}"
                            );
                            checked += 1;
                        }
                    }
                }
            }
        }
    }
    assert!(checked > 100);
}

#[test]
fn sixj_unitarity() {
    // Σ_D {A B; C F|E D}{A B; C F|E' D} = δ_{EE'} Y(A,B,E) Y(E,C,F)
    let c = ctx();
    for a in spins_upto(6) {
        for b in spins_upto(6) {
            for cc in spins_upto(6) {
                for f in spins_upto(6) {
                    for e in spins_upto(8) {
                        for ep in spins_upto(8) {
                            if !(y3(a, b, e) && y3(e, cc, f) && y3(a, b, ep) && y3(ep, cc, f)) {
                                continue;
                            }
                            let mut s = 0.0;
                            for d in spins_upto(12) {
                                s += recoupling_kappa(&c, a, b, cc, f, e, d)
                                    * recoupling_kappa(&c, a, b, cc, f, ep, d);
                            }
                            let expect = if e == ep { 1.0 } else { 0.0 };
                            assert!(
                                (s - expect).abs() < 1e-10,
                                "unitarity at {a} {b} {cc} {f}: E={e} E'={ep}: {s}"
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn pentagon_identity() {
    // Biedenharn-Elliott in change-of-basis form, spins <= 2:
    // κ^{(X,C,D)}_E(Y,W) κ^{(A,B,W)}_E(X,V)
    //   = Σ_Z κ^{(A,B,C)}_Y(X,Z) κ^{(A,Z,D)}_E(Y,V) κ^{(B,C,D)}_V(Z,W)
    let c = ctx();
    let sp = spins_upto(4);
    let inner = spins_upto(8);
    let mut checked = 0usize;
    for &a in &sp {
        for &b in &sp {
            for &cc in &sp {
                for &d in &sp {
                    for &e in &sp {
                        for &x in &inner {
                            if !y3(a, b, x) {
                                continue;
                            }
                            for &y in &inner {
                                if !(y3(x, cc, y) && y3(y, d, e)) {
                                    continue;
                                }
                                for &v in &inner {
                                    for &w in &inner {
                                        if !(y3(cc, d, w) && y3(b, w, v) && y3(a, v, e)) {
                                            continue;
                                        }
                                        let lhs = recoupling_kappa(&c, x, cc, d, e, y, w)
                                            * recoupling_kappa(&c, a, b, w, e, x, v);
                                        let mut rhs = 0.0;
                                        for &z in &inner {
                                            rhs += recoupling_kappa(&c, a, b, cc, y, x, z)
                                                * recoupling_kappa(&c, a, z, d, e, y, v)
                                                * recoupling_kappa(&c, b, cc, d, v, z, w);
                                        }
                                        assert!(
                                            (lhs - rhs).abs() < 1e-10,
                                            "pentagon at A={a} B={b} C={cc} D={d} E={e} X={x} Y={y} V={v} W={w}: {lhs} vs {rhs}"
                                        );
                                        checked += 1;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    assert!(checked > 1000, "pentagon grid too sparse: {checked}");
}

#[test]
fn yang_baxter() {
    // R12 R13 R23 = R23 R13 R12 on (1/2, 1/2, 1/2) and (1/2, 1, 1/2)
    let c = ctx();
    for (ta, tb, tc) in [(1i64, 1, 1), (1, 2, 1), (2, 1, 1)] {
        let (a, b, cc) = (Half(ta), Half(tb), Half(tc));
        let (da, db, dc) = ((ta + 1) as usize, (tb + 1) as usize, (tc + 1) as usize);
        let id = |n: usize| CMat::identity(n);
        let r12 = rmat(&c, a, b, RSign::Plus).mat.kron(&id(dc));
        let r23 = id(da).kron(&rmat(&c, b, cc, RSign::Plus).mat);
        // R13: act on factors 1 and 3
        let rac = rmat(&c, a, cc, RSign::Plus).mat;
        let r13 = CMat::from_fn(da * db * dc, da * db * dc, |row, col| {
            let (o1, rest) = (row / (db * dc), row % (db * dc));
            let (o2, o3) = (rest / dc, rest % dc);
            let (i1, rest) = (col / (db * dc), col % (db * dc));
            let (i2, i3) = (rest / dc, rest % dc);
            if o2 != i2 {
                C64::new(0.0, 0.0)
            } else {
                rac[(o1 * dc + o3, i1 * dc + i3)]
            }
        });
        let lhs = r12.mul(&r13).mul(&r23);
        let rhs = r23.mul(&r13).mul(&r12);
        let err = lhs.sub(&rhs).norm_max();
        assert!(err < 1e-12, "Yang-Baxter failed at ({ta},{tb},{tc}): {err}");
    }
}

#[test]
fn r_fusion() {
    // R^{(±)IK}_13 R^{(±)JK}_23 (φ_M^{IJ} ⊗ id) = (φ_M^{IJ} ⊗ id) R^{(±)MK},
    // spins <= 3/2
    let c = ctx();
    for ti in 0..=3i64 {
        for tj in 0..=3i64 {
            for tk in 0..=3i64 {
                let (i, j, k) = (Half(ti), Half(tj), Half(tk));
                let (di, dj, dk) = ((ti + 1) as usize, (tj + 1) as usize, (tk + 1) as usize);
                for m in Half::range_step1(Half((ti - tj).abs()), i + j) {
                    let dm = (m.0 + 1) as usize;
                    // φ_M^{IJ} ⊗ id_K : V_M ⊗ V_K -> V_I ⊗ V_J ⊗ V_K
                    let phi = psi(&c, i, j, m).transpose(); // (di*dj) x dm
                    let phi_k = phi.kron(&CMat::identity(dk));
                    for sign in [RSign::Plus, RSign::Minus] {
                        let rik = rmat(&c, i, k, sign).mat;
                        let r13 = CMat::from_fn(di * dj * dk, di * dj * dk, |row, col| {
                            let (o1, rest) = (row / (dj * dk), row % (dj * dk));
                            let (o2, o3) = (rest / dk, rest % dk);
                            let (i1, rest) = (col / (dj * dk), col % (dj * dk));
                            let (i2, i3) = (rest / dk, rest % dk);
                            if o2 != i2 {
                                C64::new(0.0, 0.0)
                            } else {
                                rik[(o1 * dk + o3, i1 * dk + i3)]
                            }
                        });
                        let r23 = CMat::identity(di).kron(&rmat(&c, j, k, sign).mat);
                        let lhs = r13.mul(&r23).mul(&phi_k);
                        let rhs = phi_k.mul(&rmat(&c, m, k, sign).mat);
                        let scale = rhs.norm_max().max(1.0);
                        let err = lhs.sub(&rhs).norm_max();
                        assert!(
                            err < 1e-11 * scale,
                            "fusion {sign:?} failed at I={i} J={j} K={k} M={m}: {err}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn twist_relation() {
    // ψ_{BA}^C ∘ P ∘ R^{AB} = (v_A v_B / v_C)^{1/2} e^{iπ(A+B-C)} ψ_{AB}^C
    // (phase pinned numerically; spins <= 2)
    let c = ctx();
    for ta in 0..=4i64 {
        for tb in 0..=4i64 {
            for tc in (ta - tb).abs()..=(ta + tb) {
                let (a, b, cc) = (Half(ta), Half(tb), Half(tc));
                if !y3(a, b, cc) {
                    continue;
                }
                let lhs = psi(&c, b, a, cc).mul(&swap(a, b)).mul(&rmat(&c, a, b, RSign::Plus).mat);
                let ratio = c.ribbon_sqrt(a) * c.ribbon_sqrt(b) / c.ribbon_sqrt(cc);
                let rhs = psi(&c, a, b, cc).scale(ratio);
                let err = lhs.sub(&rhs).norm_max();
                let scale = lhs.norm_max().max(rhs.norm_max()).max(1.0);
                assert!(err < 1e-10 * scale, "twist at A={a} B={b} C={cc}: {err}");
            }
        }
    }
}

#[test]
fn contragredient_w() {
    // conj(π(S^{-1}(x^*))) = Ŵ π(x) Ŵ^{-1} on the generators, spin <= 2
    let c = ctx();
    for ti in 0..=4i64 {
        let i = Half(ti);
        let di = (ti + 1) as usize;
        // the conjugate-representation equivalence uses the opposite cap
        // orientation, i.e. the transpose of ŵ
        let w = wmat(&c, i).transpose();
        let winv = w.inverse().unwrap();
        // π(q^{Jz}), π(J±)
        let qjz = CMat::from_fn(di, di, |r, cidx| {
            if r == cidx {
                C64::new(c.qpow_half(Half(-ti + 2 * r as i64)), 0.0)
            } else {
                C64::new(0.0, 0.0)
            }
        });
        let jplus = CMat::from_fn(di, di, |r, cidx| {
            let m = Half(-ti + 2 * cidx as i64);
            if r == cidx + 1 {
                C64::new(
                    c.q.powf(-0.5)
                        * (c.qnum_half(i + m + Half::ONE) * c.qnum_half(i - m)).sqrt(),
                    0.0,
                )
            } else {
                C64::new(0.0, 0.0)
            }
        });
        let jminus = CMat::from_fn(di, di, |r, cidx| {
            let m = Half(-ti + 2 * cidx as i64);
            if r + 1 == cidx {
                C64::new(
                    c.q.powf(0.5)
                        * (c.qnum_half(i - m + Half::ONE) * c.qnum_half(i + m)).sqrt(),
                    0.0,
                )
            } else {
                C64::new(0.0, 0.0)
            }
        });
        // x = q^{Jz}: S^{-1}(x^*) = q^{-Jz}
        let lhs_qjz = qjz.inverse().unwrap(); // conj is trivial (real)
        let rhs_qjz = w.mul(&qjz).mul(&winv);
        assert!(lhs_qjz.sub(&rhs_qjz).norm_max() < 1e-11, "W conj on q^Jz, I={i}");
        // x = J+: x^* = q^{-1} J-, S^{-1}(J-) = -q J-  =>  π(S^{-1}(x^*)) = -π(J-)
        let lhs_jp = jminus.scale(C64::new(-1.0, 0.0));
        let rhs_jp = w.mul(&jplus).mul(&winv);
        assert!(lhs_jp.sub(&rhs_jp).norm_max() < 1e-11, "W conj on J+, I={i}");
        // x = J-: x^* = q J+, S^{-1}(J+) = -q^{-1} J+  =>  -π(J+)
        let lhs_jm = jplus.scale(C64::new(-1.0, 0.0));
        let rhs_jm = w.mul(&jminus).mul(&winv);
        assert!(lhs_jm.sub(&rhs_jm).norm_max() < 1e-11, "W conj on J-, I={i}");
    }
}
