use std::cmp::Ordering;

use num_traits::{One, Zero};
use qfock::heckepoly::*;
use qfock::RingElem;

fn non_increasing(n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    box_monomials(n, lo, hi).into_iter().filter(|l| l.windows(2).all(|w| w[0] >= w[1])).collect()
}

fn all_perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_perms(n - 1) {
        for pos in 0..=p.len() {
            let mut v = p.clone();
            v.insert(pos, n);
            out.push(v);
        }
    }
    out
}

// Membership in S^lambda straight from the definition.
fn in_s_lambda(lambda: &[i64], s: &[usize]) -> bool {
    let n = lambda.len();
    (0..n).all(|i| (0..n).all(|j| !(lambda[s[i] - 1] == lambda[s[j] - 1] && s[i] < s[j]) || i < j))
}

#[test]
fn s_lambda_matches_brute_force_filter() {
    for n in 1..=4 {
        for lambda in non_increasing(n, -1, 1) {
            let brute: Vec<Vec<usize>> = all_perms(n).into_iter().filter(|s| in_s_lambda(&lambda, s)).collect();
            let ord = s_lambda_order(&lambda);
            assert_eq!(ord.len(), brute.len(), "{lambda:?}");
            let min = &ord[0];
            assert!(brute.iter().all(|s| sord_cmp(&lambda, s, min) != Ordering::Less));
            let comp: Vec<i64> = min.iter().map(|&s| lambda[s - 1]).collect();
            assert!(comp.windows(2).all(|w| w[0] <= w[1]));
        }
    }
    assert_eq!(s_lambda_order(&[1, 0, 0]).len(), 3);
}

#[test]
fn g_quadratic_relation_on_monomials() {
    let q = RingElem::q();
    let c = &q - &RingElem::q_pow(-1);
    for m in box_monomials(3, -2, 2) {
        let f = monomial(&m);
        for (i, j) in [(1, 2), (2, 3), (1, 3), (3, 1)] {
            let g = apply_g(i, j, &f).unwrap();
            let gg = apply_g(i, j, &g).unwrap();
            let mut rhs = g.scale(&c);
            rhs.add_scaled(&f, &RingElem::one());
            assert_eq!(gg, rhs, "{m:?} {i} {j}");
        }
    }
}

#[test]
fn t_on_symmetric_is_minus_one() {
    // g f = q f on symmetric f, so -q g^-1 f = -f.
    let f = monomial(&[1, 1, 0]).add(&monomial(&[0, 2, 3])).add(&monomial(&[2, 0, 3]));
    assert_eq!(hecke_t(1, &f).unwrap(), f.scale(&-RingElem::one()));
    let v = monomial(&[1, 0]);
    let t = hecke_t(1, &v).unwrap();
    let tt = hecke_t(1, &t).unwrap();
    let q2 = RingElem::q_pow(2);
    let mut rel = tt;
    rel.add_scaled(&t, &(&RingElem::one() - &q2));
    rel.add_scaled(&v, &-q2);
    assert!(rel.is_zero());
}

#[test]
fn hecke_presentation_small() {
    for n in 2..=3 {
        for action in [
            HeckeAction::Multiplication,
            HeckeAction::Cherednik(PMode::One),
            HeckeAction::Cherednik(PMode::Generic),
        ] {
            let r = verify_affine_hecke(n, -2, 2, action).unwrap();
            assert!(r.iter().all(|c| c.passed), "{n} {action:?} {r:?}");
        }
    }
}

#[test]
fn cherednik_y_first_variable_n2() {
    // Y_1 z_1 = p q^-1 z_1 - p (q - q^-1) z_2 and Y_1 z_2 = q z_2, by hand.
    let q = RingElem::q();
    let p = RingElem::p();
    let qi = RingElem::q_pow(-1);
    let y1 = cherednik_y(1, PMode::Generic, &monomial(&[1, 0])).unwrap();
    let mut want = monomial(&[1, 0]).scale(&(&p * &qi));
    want.add_scaled(&monomial(&[0, 1]), &-(&p * &(&q - &qi)));
    assert_eq!(y1, want);
    assert_eq!(cherednik_y(1, PMode::Generic, &monomial(&[0, 1])).unwrap(), monomial(&[0, 1]).scale(&q));
}

fn check_phi(label: &CompositionLabel) {
    let n = label.n();
    let phi = macdonald_phi(label, PMode::Generic).unwrap();
    assert_eq!(phi.coeff(&label.composition()), RingElem::one());
    for (i, xi) in label.eigenvalues(PMode::Generic).iter().enumerate() {
        let y = cherednik_y(i + 1, PMode::Generic, &phi).unwrap();
        assert_eq!(y, phi.scale(xi), "eigen {label:?} Y_{}", i + 1);
    }
    assert!(is_triangular(label, &phi), "triangular {label:?}");
    let phi1 = macdonald_phi_p1(label).unwrap();
    for (i, xi) in label.eigenvalues(PMode::One).iter().enumerate() {
        assert_eq!(cherednik_y(i + 1, PMode::One, &phi1).unwrap(), phi1.scale(xi));
    }
    for i in 1..n {
        let (a, b) = g_action_coefficients(label, i, PMode::Generic).unwrap();
        let lhs = apply_g(i, i + 1, &phi).unwrap();
        let mut rhs = phi.scale(&a);
        if !b.is_zero() {
            let other = macdonald_phi(&label.swapped(i), PMode::Generic).unwrap();
            rhs.add_scaled(&other, &b);
        }
        assert_eq!(lhs, rhs, "g-action {label:?} i={i}");
    }
}

#[test]
fn macdonald_properties_small() {
    for n in 1..=3 {
        for lambda in non_increasing(n, -1, 1) {
            for sigma in s_lambda_order(&lambda) {
                check_phi(&CompositionLabel::new(lambda.clone(), sigma).unwrap());
            }
        }
    }
}

#[test]
fn constant_lambda_is_a_monomial() {
    for c in -2..=2 {
        let l = CompositionLabel::min(&[c, c, c]).unwrap();
        assert_eq!(macdonald_phi(&l, PMode::Generic).unwrap(), monomial(&[c, c, c]));
        assert_eq!(macdonald_phi_p1(&l).unwrap(), monomial(&[c, c, c]));
    }
}

fn elementary_shift_holds(lambda: &[i64], k: usize) -> bool {
    let n = lambda.len();
    let min = CompositionLabel::min(lambda).unwrap();
    let lhs = elementary_em(k, n, &macdonald_phi_p1(&min).unwrap()).unwrap();
    let mut tilde = lambda.to_vec();
    for x in tilde.iter_mut().skip(n - k) {
        *x -= 1;
    }
    let rhs = macdonald_phi_p1(&CompositionLabel::new(tilde, min.sigma.clone()).unwrap()).unwrap();
    lhs == rhs
}

#[test]
fn elementary_shift_instances() {
    assert!(elementary_shift_holds(&[0, 0], 2));
    assert!(elementary_shift_holds(&[1, 1, 0], 1));
    for n in 1..=3 {
        for lambda in non_increasing(n, -1, 1) {
            if lambda.windows(2).all(|w| w[0] - w[1] <= 1) {
                for k in 1..=n {
                    assert!(elementary_shift_holds(&lambda, k), "{lambda:?} k={k}");
                }
            }
        }
    }
}

#[test]
fn e_minus_k_commutes_with_y_at_p1() {
    let f = monomial(&[1, -1, 0]).add(&monomial(&[0, 2, -1]).scale(&RingElem::q()));
    for k in 1..=3 {
        for i in 1..=3 {
            let a = cherednik_y(i, PMode::One, &elementary_em(k, 3, &f).unwrap()).unwrap();
            let b = elementary_em(k, 3, &cherednik_y(i, PMode::One, &f).unwrap()).unwrap();
            assert_eq!(a, b);
        }
    }
    let mut e1 = monomial(&[-1, 0]);
    e1.add_term(vec![0, -1], RingElem::one());
    assert_eq!(elementary_em(1, 2, &monomial(&[0, 0])).unwrap(), e1);
    assert_eq!(elementary_em(2, 2, &monomial(&[0, 0])).unwrap(), monomial(&[-1, -1]));
}

#[test]
fn dominance_examples() {
    assert_eq!(dominance_cmp(&[0, 1, 2], &[0, 0, 3]).unwrap(), Dominance::Greater);
    assert_eq!(dominance_cmp(&[2, 0, 1], &[1, 2, 0]).unwrap(), Dominance::Incomparable);
    assert_eq!(dominance_cmp(&[1, 1], &[1, 1]).unwrap(), Dominance::Equal);
}

#[test]
fn closure_bound_is_enforced() {
    let l = CompositionLabel::min(&[2, 0, -2]).unwrap();
    assert!(matches!(macdonald_phi_bounded(&l, PMode::Generic, 2), Err(qfock::Error::ClosureDivergence(2))));
}

#[test]
#[ignore]
fn macdonald_timing() {
    let t = std::time::Instant::now();
    for n in 1..=3 {
        for lambda in non_increasing(n, -2, 2) {
            for sigma in s_lambda_order(&lambda) {
                check_phi(&CompositionLabel::new(lambda.clone(), sigma).unwrap());
            }
        }
    }
    eprintln!("macdonald {:?}", t.elapsed());
}
