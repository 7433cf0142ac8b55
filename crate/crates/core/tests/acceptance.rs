//! One line per acceptance criterion. Every check is exact equality.

use std::collections::HashMap;
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use num_traits::{One, Zero};
use qfock::decomp::*;
use qfock::heckepoly::*;
use qfock::linalg::Matrix;
use qfock::qaffine::{act, verify_relations, Action};
use qfock::rmodule::*;
use qfock::tableaux::{enumerate_sst, skew_schur, BorderStrip};
use qfock::wedge::*;
use qfock::RingElem;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = std::result::Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn run(id: usize, name: &str, f: impl FnOnce() -> Check) -> bool {
    let t = Instant::now();
    let res = match catch_unwind(AssertUnwindSafe(f)) {
        Ok(r) => r,
        Err(e) => Err(e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default()),
    };
    let secs = t.elapsed().as_secs_f64();
    let line = match &res {
        Ok(()) => format!("criterion {id:>2} PASS  {name}  [{secs:.1}s]\n"),
        Err(d) => format!("criterion {id:>2} FAIL  {name}  [{secs:.1}s]: {d}\n"),
    };
    let _ = std::io::stderr().write_all(line.as_bytes());
    res.is_ok()
}

fn q(k: i64) -> RingElem {
    RingElem::q_pow(k)
}

fn int(k: i64) -> RingElem {
    RingElem::from(k)
}

fn non_increasing(n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    box_monomials(n, lo, hi).into_iter().filter(|l| l.windows(2).all(|w| w[0] >= w[1])).collect()
}

fn compositions(size: usize, max: usize) -> Vec<Vec<usize>> {
    if size == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for m in 1..=size.min(max) {
        for mut rest in compositions(size - m, max) {
            rest.insert(0, m);
            out.push(rest);
        }
    }
    out
}

fn criterion_1() -> Check {
    for n in 1..=4 {
        for action in [HeckeAction::Cherednik(PMode::Generic), HeckeAction::Cherednik(PMode::One), HeckeAction::Multiplication] {
            let r = verify_affine_hecke(n, -3, 3, action).map_err(|e| e.to_string())?;
            if let Some(bad) = r.iter().find(|c| !c.passed) {
                return Err(format!("N={n} {action:?}: {}", bad.family));
            }
        }
    }
    Ok(())
}

fn check_phi(label: &CompositionLabel) -> Check {
    let err = |e: qfock::Error| format!("{label:?}: {e}");
    let phi = macdonald_phi(label, PMode::Generic).map_err(err)?;
    ensure(phi.coeff(&label.composition()).is_one(), || format!("{label:?}: leading coefficient"))?;
    for (i, xi) in label.eigenvalues(PMode::Generic).iter().enumerate() {
        ensure(cherednik_y(i + 1, PMode::Generic, &phi).map_err(err)? == phi.scale(xi), || format!("{label:?}: Y_{} eigen", i + 1))?;
    }
    ensure(is_triangular(label, &phi), || format!("{label:?}: triangularity"))?;
    for i in 1..label.n() {
        let (a, b) = g_action_coefficients(label, i, PMode::Generic).map_err(err)?;
        let mut rhs = phi.scale(&a);
        if !b.is_zero() {
            rhs.add_scaled(&macdonald_phi(&label.swapped(i), PMode::Generic).map_err(err)?, &b);
        }
        ensure(apply_g(i, i + 1, &phi).map_err(err)? == rhs, || format!("{label:?}: g-action i={i}"))?;
    }
    let phi1 = macdonald_phi_p1(label).map_err(err)?;
    for (i, xi) in label.eigenvalues(PMode::One).iter().enumerate() {
        ensure(cherednik_y(i + 1, PMode::One, &phi1).map_err(err)? == phi1.scale(xi), || format!("{label:?}: p=1 eigen"))?;
    }
    Ok(())
}

fn elementary_shift_holds(lambda: &[i64], k: usize) -> std::result::Result<bool, qfock::Error> {
    let n = lambda.len();
    let min = CompositionLabel::min(lambda)?;
    let lhs = elementary_em(k, n, &macdonald_phi_p1(&min)?)?;
    let mut tilde = lambda.to_vec();
    for x in tilde.iter_mut().skip(n - k) {
        *x -= 1;
    }
    Ok(lhs == macdonald_phi_p1(&CompositionLabel::new(tilde, min.sigma.clone())?)?)
}

fn criterion_2() -> Check {
    for n in 1..=3 {
        for lambda in non_increasing(n, -2, 2) {
            for sigma in s_lambda_order(&lambda) {
                check_phi(&CompositionLabel::new(lambda.clone(), sigma).map_err(|e| e.to_string())?)?;
            }
            if lambda.windows(2).all(|w| w[0] - w[1] <= 1) {
                for k in 1..=n {
                    ensure(elementary_shift_holds(&lambda, k).map_err(|e| e.to_string())?, || format!("e_-k shift {lambda:?} k={k}"))?;
                }
            }
        }
    }
    Ok(())
}

// S-check on v_a (x) v_b from its case split.
fn s_check(a: usize, b: usize) -> Vec<((usize, usize), RingElem)> {
    if a == b {
        vec![((a, b), q(2))]
    } else if a < b {
        vec![((b, a), q(1))]
    } else {
        vec![((b, a), q(1)), ((a, b), &q(2) - &int(1))]
    }
}

// Kernel of S T_i + q^2 on the block of tensors agreeing with `w` off i, i+1.
fn local_kernel(n: usize, w: &[i64], i: usize) -> Vec<WedgeVector> {
    let parts: Vec<(i64, usize)> = w.iter().map(|&k| split_index(k, n)).collect();
    let (ma, ea) = parts[i];
    let (mb, eb) = parts[i + 1];
    let (d, lo) = (ma + mb, ma.min(mb));
    let mut basis = Vec::new();
    for m1 in lo..=d - lo {
        for (a, b) in [(ea, eb), (eb, ea)] {
            let mut mono: Vec<i64> = parts.iter().map(|p| p.0).collect();
            let mut cols: Vec<usize> = parts.iter().map(|p| p.1).collect();
            mono[i] = m1;
            mono[i + 1] = d - m1;
            cols[i] = a;
            cols[i + 1] = b;
            if !basis.contains(&(mono.clone(), cols.clone())) {
                basis.push((mono, cols));
            }
        }
    }
    let index: HashMap<_, _> = basis.iter().cloned().zip(0..).collect();
    let dim = basis.len();
    let mut columns = Vec::new();
    for (mono, cols) in &basis {
        let mut col = vec![RingElem::zero(); dim];
        for (m2, c) in hecke_t(i + 1, &monomial(mono)).unwrap().iter() {
            for ((a, b), s) in s_check(cols[i], cols[i + 1]) {
                let mut c2 = cols.clone();
                c2[i] = a;
                c2[i + 1] = b;
                let j = index[&(m2.clone(), c2)];
                col[j] = &col[j] + &(c * &s);
            }
        }
        let j = index[&(mono.clone(), cols.clone())];
        col[j] = &col[j] + &q(2);
        columns.push(col);
    }
    Matrix::from_columns(&columns, dim)
        .kernel()
        .into_iter()
        .map(|v| {
            let mut out = WedgeVector::new();
            for ((mono, cols), c) in basis.iter().zip(v) {
                out.add_term((0..w.len()).map(|j| join_index(mono[j], cols[j], n)).collect(), c);
            }
            out
        })
        .collect()
}

fn criterion_3() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for n in 2..=3 {
        for len in 2..=3 {
            for _ in 0..20 {
                let w: Vec<i64> = (0..len).map(|_| rng.gen_range(-5..=5)).collect();
                for i in 0..len - 1 {
                    let ker = local_kernel(n, &w, i);
                    let mut v = WedgeVector::new();
                    for kv in &ker {
                        v.add_scaled(kv, &int(rng.gen_range(-3..=3)));
                    }
                    for kv in ker.iter().chain([&v]) {
                        ensure(straighten(n, kv).map_err(|e| e.to_string())?.is_zero(), || format!("kernel n={n} w={w:?} i={i}"))?;
                    }
                }
            }
        }
        for _ in 0..40 {
            let len = rng.gen_range(2..=3);
            let w: Vec<i64> = (0..len).map(|_| rng.gen_range(-4..=4)).collect();
            let memo = with_straightener(n, |s| s.word(&w)).map_err(|e| e.to_string())?;
            let left = straighten_by(n, &w, &mut |_| 0).map_err(|e| e.to_string())?;
            let right = straighten_by(n, &w, &mut |bad| bad.len() - 1).map_err(|e| e.to_string())?;
            ensure(memo == left && memo == right, || format!("order dependence n={n} {w:?}"))?;
        }
        for len in 1..=3 {
            for w in box_monomials(len, -3, 3).into_iter().filter(|w| is_normal(w)) {
                let v = WedgeVector::basis(w.clone());
                ensure(straighten(n, &v).map_err(|e| e.to_string())? == v, || format!("normal {w:?} moved"))?;
            }
        }
    }
    Ok(())
}

fn basis_of(words: Vec<Vec<i64>>) -> Vec<WedgeVector> {
    words.into_iter().map(WedgeVector::basis).collect()
}

fn relations(ctx: &Action, basis: &[WedgeVector], central: RingElem) -> Check {
    let r = verify_relations(ctx, basis).map_err(|e| format!("{ctx:?}: {e}"))?;
    if let Some(bad) = r.first_failure() {
        return Err(format!("{ctx:?}: {}", bad.family));
    }
    ensure(r.central == Some(central.clone()), || format!("{ctx:?}: c' = {:?}, expected {central}", r.central))
}

fn criterion_4() -> Check {
    for n in 2..=3 {
        for len in 1..=3 {
            let words = basis_of(box_monomials(len, -2, 2).into_iter().filter(|w| is_normal(w)).collect());
            for p in [PMode::Generic, PMode::One] {
                relations(&Action::U0 { n, p }, &words, RingElem::one())?;
            }
            relations(&Action::U1 { n }, &words, RingElem::one())?;
        }
        for len in 1..=4 {
            let a: Vec<i64> = (0..len as i64).map(|i| 2 * i - 1).collect();
            relations(&Action::Eval { n, a }, &basis_of(all_words(n, len)), RingElem::one())?;
        }
        for k in 0..=2 {
            let b = basis_of(fock_component_basis(0, k, n));
            for p in [PMode::Generic, PMode::One] {
                relations(&Action::U0Fock { n, m: 0, p, extra: 0 }, &b, RingElem::one())?;
            }
            relations(&Action::U1Fock { n, m: 0 }, &b, q(1))?;
        }
    }
    Ok(())
}

// [B_a, B_-a] for a > 0, negated for a < 0.
fn commutator_constant(n: usize, a: i64) -> RingElem {
    if a < 0 {
        return -commutator_constant(n, -a);
    }
    let num = &int(1) - &q(2 * n as i64 * a);
    let den = &int(1) - &q(2 * a);
    &int(a) * &num.checked_div(&den).unwrap()
}

fn criterion_5() -> Check {
    let e = |x: qfock::Error| x.to_string();
    for n in 2..=3 {
        let u1 = Action::U1Fock { n, m: 0 };
        let u0 = Action::U0Fock { n, m: 0, p: PMode::One, extra: 0 };
        for k in 0..=2 {
            for lam in fock_component_basis(0, k, n) {
                let v = WedgeVector::basis(lam);
                for a in [-2i64, -1, 1, 2] {
                    for b in [-2i64, -1, 1, 2] {
                        let ab = heisenberg_b(a, 0, n, &heisenberg_b(b, 0, n, &v).map_err(e)?).map_err(e)?;
                        let ba = heisenberg_b(b, 0, n, &heisenberg_b(a, 0, n, &v).map_err(e)?).map_err(e)?;
                        let want = if a + b == 0 { v.scale(&commutator_constant(n, a)) } else { WedgeVector::new() };
                        ensure(ab.sub(&ba) == want, || format!("[B_{a},B_{b}] n={n} {v:?}"))?;
                    }
                }
                for (ctx, modes) in [(&u1, &[-2i64, -1, 1, 2][..]), (&u0, &[-2, -1])] {
                    for g in ctx.generators() {
                        for &a in modes {
                            let gb = act(ctx, g, &heisenberg_b(a, 0, n, &v).map_err(e)?).map_err(e)?;
                            let bg = heisenberg_b(a, 0, n, &act(ctx, g, &v).map_err(e)?).map_err(e)?;
                            ensure(gb == bg, || format!("[{g}, B_{a}] != 0 for {ctx:?} on {v:?}"))?;
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn hecke_matrix(n: usize) -> Matrix<RingElem> {
    let idx = |a: usize, b: usize| (a - 1) * n + (b - 1);
    let mut m = Matrix::zeros(n * n, n * n);
    for a in 1..=n {
        for b in 1..=n {
            for ((x, y), c) in s_check(a, b) {
                m.set(idx(x, y), idx(a, b), c);
            }
        }
    }
    m
}

fn criterion_6() -> Check {
    let e = |x: qfock::Error| x.to_string();
    let p = RingElem::p();
    for n in [2, 3] {
        let d = n * n;
        // Rcheck(x) = (x S^-1 - S)/(x - 1) with S = -q Scheck^-1, i.e. S^-1 = -q^-1 Scheck
        let sc = hecke_matrix(n);
        let sinv = sc.scale(&-q(-1));
        let s = Matrix::from_columns(
            &(0..d)
                .map(|j| {
                    let mut ej = vec![RingElem::zero(); d];
                    ej[j] = RingElem::one();
                    sinv.solve(&ej).unwrap()
                })
                .collect::<Vec<_>>(),
            d,
        );
        for x in [p.clone(), q(3)] {
            let want = sinv.scale(&x).sub(&s).scale(&(&x - &int(1)).inv().unwrap());
            ensure(rcheck_op(1, 2, x.clone(), n, 2).map_err(e)?.full_matrix().map_err(e)? == want, || format!("Rcheck n={n}"))?;
            let xi = x.inv().unwrap();
            let c = (&(&x - &q(2)) * &(&(&xi * &q(-2)) - &int(1))).checked_div(&(&(&x - &int(1)) * &(&xi - &int(1)))).unwrap();
            let id = Matrix::identity(d).scale(&c);
            let r = r_op(1, 2, x.clone(), n, 2).map_err(e)?.then_after(&r_op(2, 1, xi, n, 2).map_err(e)?);
            ensure(r.full_matrix().map_err(e)? == id, || format!("unitarity n={n}"))?;
        }
        for y in [q(3), q(-2), &p * &q(1)] {
            let xy = &p * &y;
            let r = |i, j, t: &RingElem| r_op(i, j, t.clone(), n, 3).unwrap();
            let lhs = r(1, 2, &p).then_after(&r(1, 3, &xy)).then_after(&r(2, 3, &y));
            let rhs = r(2, 3, &y).then_after(&r(1, 3, &xy)).then_after(&r(1, 2, &p));
            ensure(lhs.full_matrix().map_err(e)? == rhs.full_matrix().map_err(e)?, || format!("Yang-Baxter n={n} y={y}"))?;
        }
        for size in 1..=5 {
            for cols in compositions(size, size) {
                let theta = BorderStrip::new(cols).map_err(e)?;
                let im = image_basis(&strip_product(&theta, 0, Variant::R, n).map_err(e)?).map_err(e)?;
                let shape = theta.to_skew();
                ensure(im.dim() == enumerate_sst(&shape, n).len(), || format!("dim Im R n={n} {theta}"))?;
                ensure(im.character() == skew_schur(&shape, n), || format!("character n={n} {theta}"))?;
            }
        }
    }
    Ok(())
}

fn criterion_7() -> Check {
    let e = |x: qfock::Error| x.to_string();
    let mut count = 0;
    for n in [2usize, 3] {
        for s in 0..n {
            for k in 0.. {
                if s + n * k > 4 {
                    break;
                }
                for lambda in tilde_m_set(n, s, k) {
                    if lambda.is_empty() {
                        continue;
                    }
                    let theta = lambda_to_strip(&lambda, n).map_err(e)?;
                    let v = v_lambda_subspace(&lambda, n).map_err(e)?;
                    let ker = kernel_basis(&strip_product(&theta, 0, Variant::Rbar, n).map_err(e)?).map_err(e)?;
                    ensure(v == ker, || format!("n={n} lambda={lambda:?}"))?;
                    count += 1;
                }
            }
        }
    }
    ensure(count > 0, || "no lambda checked".into())
}

fn criterion_8() -> Check {
    for (n, k) in [(2, 0), (2, 1), (2, 2), (3, 0), (3, 1)] {
        let r = psi_k_check(n, 0, k).map_err(|e| e.to_string())?;
        ensure(r.status.is_match(), || format!("n={n} k={k}: {:?}", r.status))?;
    }
    Ok(())
}

fn criterion_9() -> Check {
    for (n, k, cutoff) in [(2, 0, 3), (2, 1, 3), (3, 0, 2)] {
        let r = character_identity_check(n, k, cutoff).map_err(|e| e.to_string())?;
        ensure(r.status.is_match(), || format!("n={n} k={k}: {:?}", r.status))?;
    }
    Ok(())
}

fn criterion_10() -> Check {
    let e = |x: qfock::Error| x.to_string();
    for size in 1..=4 {
        for theta in sl2_strips(size) {
            let factors = sl2_factorize(&theta).map_err(e)?;
            let dim: usize = factors.iter().map(|(n, _)| n + 1).product();
            let im = image_basis(&strip_product(&theta, 0, Variant::R, 2).map_err(e)?).map_err(e)?;
            ensure(dim == im.dim(), || format!("{theta}: dim {dim} vs {}", im.dim()))?;
            ensure(sl2_character_matches(&theta).map_err(e)?, || format!("{theta}: character"))?;
            if size <= 3 {
                let x = sl2_intertwiner(&theta).map_err(e)?.ok_or_else(|| format!("{theta}: no intertwiner"))?;
                let w = tensor_evaluation_module(&factors);
                let m = image_module(&theta, 2).map_err(e)?;
                ensure(x.rank() == dim, || format!("{theta}: singular"))?;
                for g in sl2_generators() {
                    ensure(x.mul(&w[&g]) == m.generators[&g].mul(&x), || format!("{theta}: {g}"))?;
                }
            }
        }
    }
    Ok(())
}

#[test]
fn acceptance() {
    let results = [
        run(1, "affine Hecke relations, N <= 4, window [-3,3]", criterion_1),
        run(2, "Macdonald eigen/triangular/g-action/p=1, N <= 3, entries in [-2,2]", criterion_2),
        run(3, "straightening kills kernel, order independent, fixes normal wedges", criterion_3),
        run(4, "quantum affine relations and c' for U0, U1, eval, U0 Fock, U1 Fock", criterion_4),
        run(5, "Heisenberg relations and commutation with U1, U0(p=1)", criterion_5),
        run(6, "Yang-Baxter, unitarity, dim and character of Im R_theta, |theta| <= 5", criterion_6),
        run(7, "V^lambda = Ker Rbar_theta for lambda in M~, s+nk <= 4", criterion_7),
        run(8, "psi_k MATCH for (2,0,0..2) and (3,0,0..1)", criterion_8),
        run(9, "character identity for (2,0,3), (2,1,3), (3,0,2)", criterion_9),
        run(10, "sl2 factorization: dim/character |theta| <= 4, intertwiner |theta| <= 3", criterion_10),
    ];
    let failed: Vec<usize> = results.iter().enumerate().filter(|(_, ok)| !**ok).map(|(i, _)| i + 1).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
