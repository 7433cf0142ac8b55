use num_traits::One;
use qfock::heckepoly::PMode;
use qfock::linalg::Matrix;
use qfock::qaffine::*;
use qfock::wedge::*;
use qfock::RingElem;

fn fock_basis(n: usize, k: i64) -> Vec<WedgeVector> {
    fock_component_basis(0, k, n).into_iter().map(WedgeVector::basis).collect()
}

fn normal_words(len: usize, lo: i64, hi: i64) -> Vec<WedgeVector> {
    fn rec(i: usize, lo: i64, top: i64, w: &mut Vec<i64>, out: &mut Vec<WedgeVector>) {
        if i == w.len() {
            out.push(WedgeVector::basis(w.clone()));
            return;
        }
        for x in lo..=top {
            w[i] = x;
            rec(i + 1, lo, x - 1, w, out);
        }
    }
    let mut out = Vec::new();
    rec(0, lo, hi, &mut vec![0; len], &mut out);
    out
}

fn colour_words(n: usize, len: usize) -> Vec<WedgeVector> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w: Vec<i64>| {
                (1..=n as i64).map(move |c| {
                    let mut w = w.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(WedgeVector::basis).collect()
}

fn assert_pass(ctx: &Action, basis: &[WedgeVector], central: RingElem) {
    let r = verify_relations(ctx, basis).unwrap();
    assert!(r.passed(), "{ctx:?}: {:?}", r.first_failure());
    assert_eq!(r.central, Some(central), "{ctx:?}");
}

#[test]
fn finite_wedge_actions() {
    for n in 2..=3 {
        for len in 1..=3 {
            let basis = normal_words(len, -2, 2);
            for p in [PMode::Generic, PMode::One] {
                assert_pass(&Action::U0 { n, p }, &basis, RingElem::one());
            }
            assert_pass(&Action::U1 { n }, &basis, RingElem::one());
        }
    }
}

#[test]
fn evaluation_actions() {
    for n in 2..=3 {
        for len in 1..=3 {
            let a: Vec<i64> = (0..len as i64).map(|i| 2 * i - 1).collect();
            assert_pass(&Action::Eval { n, a }, &colour_words(n, len), RingElem::one());
        }
    }
    assert_pass(&Action::Eval { n: 2, a: vec![0, 2] }, &colour_words(2, 2), RingElem::one());
}

#[test]
fn fock_actions_levels() {
    for n in 2..=3 {
        for k in 0..=2 {
            let b = fock_basis(n, k);
            for p in [PMode::Generic, PMode::One] {
                assert_pass(&Action::U0Fock { n, m: 0, p, extra: 0 }, &b, RingElem::one());
            }
            assert_pass(&Action::U1Fock { n, m: 0 }, &b, RingElem::q());
        }
    }
    assert_pass(&Action::U1Fock { n: 2, m: 1 }, &fock_basis(2, 1), RingElem::q());
}

#[test]
fn level_zero_action_does_not_depend_on_l() {
    for n in 2..=3 {
        let ctx0 = Action::U0Fock { n, m: 0, p: PMode::Generic, extra: 0 };
        let ctx1 = Action::U0Fock { n, m: 0, p: PMode::Generic, extra: 1 };
        for v in fock_basis(n, 1) {
            for g in ctx0.generators() {
                assert_eq!(act(&ctx0, g, &v).unwrap(), act(&ctx1, g, &v).unwrap(), "n={n} {g} {v:?}");
            }
        }
    }
}

#[test]
fn vacuum_rules() {
    for n in 2..=3usize {
        for m in -1..=1i64 {
            for i in 0..n {
                let hit = m.rem_euclid(n as i64) as usize == i;
                assert!(fock_vacuum_action(n, m, Generator::e(i)).unwrap().is_zero());
                let f = fock_vacuum_action(n, m, Generator::f(i)).unwrap();
                // u_{M+1} ^ u_{M-1} ^ .. is the partition (1)
                let want = if hit { WedgeVector::basis(vec![1]) } else { WedgeVector::new() };
                assert_eq!(f, want, "n={n} M={m} i={i}");
                let k = fock_vacuum_action(n, m, Generator::k(i)).unwrap();
                let x = if hit { RingElem::q() } else { RingElem::one() };
                assert_eq!(k, WedgeVector::basis(vec![]).scale(&x));
            }
        }
    }
}

// F_M = V(Lambda_s) (x) C[H_-] and H commutes with U_1, so the vectors killed
// by every E_i in degree k are hw (x) C[H_-]_k: one per partition of k.
#[test]
fn singular_vectors_count_partitions() {
    let parts = [1, 1, 2, 3];
    for n in 2..=3 {
        let ctx = Action::U1Fock { n, m: 0 };
        for k in 0..=2 {
            let basis = fock_component_basis(0, k, n);
            // E_0 lowers the degree by one, the other E_i keep it
            let mut lower = fock_component_basis(0, k - 1, n);
            lower.extend(basis.iter().cloned());
            lower.sort();
            let mut rows = Vec::new();
            for i in 0..n {
                let imgs: Vec<Vec<RingElem>> = basis
                    .iter()
                    .map(|l| coordinates(&lower, &act(&ctx, Generator::e(i), &WedgeVector::basis(l.clone())).unwrap()).unwrap())
                    .collect();
                for r in 0..lower.len() {
                    rows.push(imgs.iter().map(|c| c[r].clone()).collect());
                }
            }
            let dim = basis.len() - Matrix::from_rows(rows, basis.len()).rank();
            assert_eq!(dim, parts[k as usize], "n={n} k={k}");
        }
    }
}

fn commutator(ctx: &Action, g: Generator, a: i64, v: &WedgeVector) -> WedgeVector {
    let gb = act(ctx, g, &heisenberg_b(a, 0, ctx.n(), v).unwrap()).unwrap();
    let bg = heisenberg_b(a, 0, ctx.n(), &act(ctx, g, v).unwrap()).unwrap();
    gb.sub(&bg)
}

#[test]
fn level_one_commutes_with_heisenberg() {
    for n in 2..=3 {
        let ctx = Action::U1Fock { n, m: 0 };
        for k in 0..=1 {
            for v in fock_basis(n, k) {
                for g in ctx.generators() {
                    for a in [-2, -1, 1, 2] {
                        assert!(commutator(&ctx, g, a, &v).is_zero(), "n={n} {g} a={a} {v:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn level_zero_at_p1_commutes_with_negative_modes() {
    for n in 2..=3 {
        let ctx = Action::U0Fock { n, m: 0, p: PMode::One, extra: 0 };
        for k in 0..=1 {
            for v in fock_basis(n, k) {
                for g in ctx.generators() {
                    for a in [1, 2] {
                        assert!(commutator(&ctx, g, -a, &v).is_zero(), "n={n} {g} a={a} {v:?}");
                    }
                }
            }
        }
    }
    // at generic p the commutation fails somewhere
    let ctx = Action::U0Fock { n: 2, m: 0, p: PMode::Generic, extra: 0 };
    let v = WedgeVector::basis(vec![]);
    assert!(ctx.generators().into_iter().any(|g| !commutator(&ctx, g, -1, &v).is_zero()));
}

#[test]
fn characters_of_small_modules() {
    let ctx = Action::Eval { n: 2, a: vec![0] };
    let ch = weight_character(&ctx, &[vec![1], vec![2]]).unwrap();
    assert_eq!(ch.len(), 2);
    assert!(ch.contains_key(&(vec![1, 0], 0)) && ch.contains_key(&(vec![0, 1], 0)));
    let vac = weight_character(&Action::U1Fock { n: 2, m: 0 }, &[vec![]]).unwrap();
    assert_eq!(vac.into_iter().collect::<Vec<_>>(), vec![((vec![0, 0], 0), 1)]);
}
