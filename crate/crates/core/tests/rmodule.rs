use std::collections::BTreeMap;

use num_traits::{One, Zero};
use qfock::linalg::{Matrix, Subspace};
use qfock::qaffine::{act, Action, Generator};
use qfock::rmodule::*;
use qfock::tableaux::{enumerate_sst, skew_schur, BorderStrip};
use qfock::wedge::WedgeVector;
use qfock::{Error, RingElem};

fn q(k: i64) -> RingElem {
    RingElem::q_pow(k)
}

fn int(k: i64) -> RingElem {
    RingElem::from(k)
}

/// Two-site Hecke matrix on `V (x) V` from its defining case split, in the
/// basis `(a, b)` ordered lexicographically.
fn hecke_matrix(n: usize) -> Matrix<RingElem> {
    let d = n * n;
    let idx = |a: usize, b: usize| (a - 1) * n + (b - 1);
    let mut m = Matrix::zeros(d, d);
    for a in 1..=n {
        for b in 1..=n {
            let col = idx(a, b);
            if a == b {
                m.set(col, col, q(2));
            } else if a < b {
                m.set(idx(b, a), col, q(1));
            } else {
                m.set(idx(b, a), col, q(1));
                m.set(col, col, &q(2) - &int(1));
            }
        }
    }
    m
}

fn inverse(m: &Matrix<RingElem>) -> Matrix<RingElem> {
    let d = m.nrows();
    let cols: Vec<Vec<RingElem>> = (0..d)
        .map(|j| {
            let mut e = vec![RingElem::zero(); d];
            e[j] = RingElem::one();
            m.solve(&e).expect("invertible")
        })
        .collect();
    Matrix::from_columns(&cols, d)
}

fn oracle_s(n: usize) -> Matrix<RingElem> {
    inverse(&hecke_matrix(n)).scale(&-q(1))
}

fn oracle_rcheck(n: usize, x: &RingElem) -> Matrix<RingElem> {
    let s = oracle_s(n);
    let num = inverse(&s).scale(x).sub(&s);
    num.scale(&(x - &int(1)).inv().unwrap())
}

fn identity_times(d: usize, c: &RingElem) -> Matrix<RingElem> {
    Matrix::identity(d).scale(c)
}

#[test]
fn two_site_matches_definition() {
    for n in [2, 3] {
        for x in [q(2), q(-4), RingElem::p()] {
            assert_eq!(rcheck_op(1, 2, x.clone(), n, 2).unwrap().full_matrix().unwrap(), oracle_rcheck(n, &x));
        }
    }
}

#[test]
fn s_spectrum() {
    for n in [2, 3] {
        let s = oracle_s(n);
        let d = n * n;
        let a = s.sub(&identity_times(d, &q(1)));
        let b = s.add(&identity_times(d, &q(-1)));
        assert!(a.mul(&b).is_zero());
    }
}

#[test]
fn image_equals_kernel_two_site() {
    for n in [2, 3] {
        let s = oracle_s(n);
        let sinv = inverse(&s);
        let im = sinv.scale(&q(2)).sub(&s).image();
        let ker = sinv.scale(&q(-2)).sub(&s).kernel_space();
        assert_eq!(im, ker);
        assert_eq!(im.dim(), n * (n + 1) / 2);
    }
}

#[test]
fn singular_points_rejected() {
    assert!(matches!(r_op(1, 2, int(1), 2, 2), Err(Error::SingularSpectralPoint)));
    assert!(matches!(rcheck_op(1, 2, int(1), 2, 2), Err(Error::SingularSpectralPoint)));
    assert!(matches!(product_for_labels(&[0, 2, 0], Variant::R, 2), Err(Error::SingularSpectralPoint)));
}

fn unitarity_scalar(x: &RingElem) -> RingElem {
    let xi = x.inv().unwrap();
    let num = &(x - &q(2)) * &(&(&xi * &q(-2)) - &int(1));
    let den = &(x - &int(1)) * &(&xi - &int(1));
    num.checked_div(&den).unwrap()
}

#[test]
fn unitarity() {
    for n in [2, 3] {
        let d = n * n;
        for x in [RingElem::p(), q(3), &RingElem::p() * &q(-2)] {
            let xi = x.inv().unwrap();
            let c = unitarity_scalar(&x);
            let ch = rcheck_op(1, 2, x.clone(), n, 2).unwrap().then_after(&rcheck_op(1, 2, xi.clone(), n, 2).unwrap());
            assert_eq!(ch.full_matrix().unwrap(), identity_times(d, &c));
            let r = r_op(1, 2, x.clone(), n, 2).unwrap().then_after(&r_op(2, 1, xi, n, 2).unwrap());
            assert_eq!(r.full_matrix().unwrap(), identity_times(d, &c));
        }
    }
}

#[test]
fn yang_baxter() {
    let p = RingElem::p();
    for n in [2, 3] {
        for y in [q(3), q(-2), &p * &q(1), int(2)] {
            let x = p.clone();
            let xy = &x * &y;
            let r = |i, j, s: &RingElem| r_op(i, j, s.clone(), n, 3).unwrap();
            let lhs = r(1, 2, &x).then_after(&r(1, 3, &xy)).then_after(&r(2, 3, &y));
            let rhs = r(2, 3, &y).then_after(&r(1, 3, &xy)).then_after(&r(1, 2, &x));
            assert_eq!(lhs.full_matrix().unwrap(), rhs.full_matrix().unwrap(), "n={n} y={y}");
        }
    }
}

#[test]
fn product_order_three_sites() {
    let a = [4, 0, 2];
    let n = 2;
    let r = |i, j, d: i64| r_op(i, j, q(d), n, 3).unwrap();
    let rc = |i, j, d: i64| rcheck_op(i, j, q(d), n, 3).unwrap();
    let d = |i: usize, j: usize| a[i - 1] - a[j - 1];
    let want_r = r(2, 3, d(2, 3)).then_after(&r(1, 3, d(1, 3))).then_after(&r(1, 2, d(1, 2)));
    let want_rbar = r(3, 2, d(2, 3)).then_after(&r(3, 1, d(1, 3))).then_after(&r(2, 1, d(1, 2)));
    let want_rcheck = rc(2, 3, d(2, 3)).then_after(&rc(1, 2, d(1, 3))).then_after(&rc(2, 3, d(1, 2)));
    for (v, want) in [(Variant::R, want_r), (Variant::Rbar, want_rbar), (Variant::Rcheck, want_rcheck)] {
        let got = product_for_labels(&a, v, n).unwrap();
        assert_eq!(got.full_matrix().unwrap(), want.full_matrix().unwrap(), "{v:?}");
    }
}

fn compositions(size: usize) -> Vec<Vec<usize>> {
    if size == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for m in 1..=size {
        for mut rest in compositions(size - m) {
            rest.insert(0, m);
            out.push(rest);
        }
    }
    out
}

#[test]
fn image_dimension_and_character() {
    for n in [2, 3] {
        for size in 1..=5 {
            for cols in compositions(size) {
                let theta = BorderStrip::new(cols).unwrap();
                let op = strip_product(&theta, 0, Variant::R, n).unwrap();
                let im = image_basis(&op).unwrap();
                let shape = theta.to_skew();
                assert_eq!(im.dim(), enumerate_sst(&shape, n).len(), "n={n} {theta}");
                assert_eq!(im.character(), skew_schur(&shape, n), "n={n} {theta}");
            }
        }
    }
}

#[test]
fn small_ranks() {
    let rank = |cols: Vec<usize>| image_basis(&strip_product(&BorderStrip::new(cols).unwrap(), 0, Variant::R, 2).unwrap()).unwrap().dim();
    assert_eq!(rank(vec![2]), 1);
    assert_eq!(rank(vec![1, 1]), 3);
    assert_eq!(strip_product(&BorderStrip::new(vec![1]).unwrap(), 0, Variant::R, 2).unwrap().factors.len(), 0);
}

#[test]
fn image_of_r_equals_image_of_rcheck() {
    for n in [2, 3] {
        for size in 1..=4 {
            for cols in compositions(size) {
                let theta = BorderStrip::new(cols).unwrap();
                let r = image_basis(&strip_product(&theta, 0, Variant::R, n).unwrap()).unwrap();
                let rc = image_basis(&strip_product(&theta, 0, Variant::Rcheck, n).unwrap()).unwrap();
                assert_eq!(r, rc, "n={n} {theta}");
            }
        }
    }
}

fn eval_gens(n: usize) -> Vec<Generator> {
    Action::Eval { n, a: vec![] }.generators()
}

#[test]
fn image_is_evaluation_submodule() {
    for n in [2, 3] {
        for size in 1..=4 {
            for cols in compositions(size) {
                let theta = BorderStrip::new(cols).unwrap();
                let a = theta.normalized_labels();
                let im = image_basis(&strip_product(&theta, 0, Variant::R, n).unwrap()).unwrap();
                let ctx = Action::Eval { n, a };
                for v in im.vectors() {
                    for g in eval_gens(n) {
                        assert!(im.contains(&act(&ctx, g, &v).unwrap()), "n={n} {theta} {g}");
                    }
                }
            }
        }
    }
}

#[test]
fn rcheck_product_intertwines() {
    for n in [2, 3] {
        for size in 1..=3 {
            for cols in compositions(size) {
                let theta = BorderStrip::new(cols).unwrap();
                let a = theta.normalized_labels();
                let rev: Vec<i64> = a.iter().rev().cloned().collect();
                let op = strip_product(&theta, 0, Variant::Rcheck, n).unwrap();
                let src = Action::Eval { n, a: rev };
                let dst = Action::Eval { n, a };
                for w in all_words(n, size) {
                    let v = WedgeVector::basis(w);
                    for g in eval_gens(n) {
                        let lhs = op.apply(&act(&src, g, &v).unwrap()).unwrap();
                        let rhs = act(&dst, g, &op.apply(&v).unwrap()).unwrap();
                        assert_eq!(lhs, rhs, "n={n} {theta} {g}");
                    }
                }
            }
        }
    }
}

/// Non-increasing sequences with steps 0 or 1, runs at most `n`, smallest
/// entry 0.
fn lambda_class(n: usize, len: usize) -> Vec<Vec<i64>> {
    compositions(len)
        .into_iter()
        .filter(|runs| runs.iter().all(|&r| r <= n))
        .map(|runs| {
            let top = runs.len() as i64 - 1;
            runs.iter().enumerate().flat_map(|(i, &r)| std::iter::repeat_n(top - i as i64, r)).collect()
        })
        .collect()
}

#[test]
fn v_lambda_is_kernel_of_rbar() {
    for n in [2, 3] {
        for len in 1..=4 {
            for lambda in lambda_class(n, len) {
                let theta = lambda_to_strip(&lambda, n).unwrap();
                let v = v_lambda_subspace(&lambda, n).unwrap();
                let ker = kernel_basis(&strip_product(&theta, 0, Variant::Rbar, n).unwrap()).unwrap();
                assert_eq!(v, ker, "n={n} lambda={lambda:?}");
                let quotient = n.pow(len as u32) - v.dim();
                assert_eq!(quotient, enumerate_sst(&theta.to_skew(), n).len());
            }
        }
    }
}

#[test]
fn v_lambda_examples() {
    let v = v_lambda_subspace(&[1, 0], 2).unwrap();
    assert_eq!(4 - v.dim(), 3);
    // one block: only the equal-run images
    let v = v_lambda_subspace(&[0, 0], 3).unwrap();
    let direct = image_basis(&r_op(1, 2, q(2), 3, 2).unwrap()).unwrap();
    assert_eq!(v, direct);
    assert!(matches!(v_lambda_subspace(&[2, 0], 2), Err(Error::InvalidLambdaClass(_))));
    assert!(matches!(v_lambda_subspace(&[0, 0, 0], 2), Err(Error::InvalidLambdaClass(_))));
}

#[test]
fn strip_dictionary_round_trip() {
    for n in [2, 3] {
        for len in 1..=5 {
            for lambda in lambda_class(n, len) {
                let theta = lambda_to_strip(&lambda, n).unwrap();
                assert_eq!(theta.size(), len);
                assert_eq!(strip_to_lambda(&theta, 0), lambda);
                let shifted: Vec<i64> = lambda.iter().map(|x| x + 3).collect();
                assert_eq!(lambda_to_strip(&shifted, n).unwrap(), theta);
            }
        }
    }
    assert_eq!(lambda_to_strip(&[1, 0], 2).unwrap().cols, vec![1, 1]);
    assert_eq!(lambda_to_strip(&[4, 4], 2).unwrap().cols, vec![2]);
}

#[test]
fn block_subspace_character_counts_weights() {
    let theta = BorderStrip::new(vec![1, 1]).unwrap();
    let im = image_basis(&strip_product(&theta, 0, Variant::R, 2).unwrap()).unwrap();
    let mut want = BTreeMap::new();
    for (w, c) in [(vec![2, 0], 1), (vec![1, 1], 1), (vec![0, 2], 1)] {
        want.insert(w, int(c));
    }
    assert_eq!(im.character().terms, want);
    assert_eq!(im.quotient_representatives().len(), 1);
    let sub = Subspace::<RingElem>::full(2);
    assert_eq!(sub.dim(), 2);
}
