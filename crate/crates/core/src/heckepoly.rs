//! Affine Hecke algebra actions on Laurent polynomials, Cherednik operators
//! and non-symmetric Macdonald polynomials.
//!
//! Variable indices in the public API are 1-based, matching `z_1..z_N`.
//!
//! Macdonald labels: `lambda` is stored non-increasing and `sigma` is the
//! permutation with `lambda[sigma(i)] = mu_i` for the exponent vector `mu`,
//! equal exponents taking increasing `sigma` values from left to right. With
//! this convention `Y_i z^mu = xi_i z^mu + lower terms` with
//! `xi_i = p^{mu_i} q^{2 sigma(i) - N - 1}`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Mutex, OnceLock};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactring::RingElem;
use crate::linalg::SparseVec;

pub type Mono = Vec<i64>;

/// Laurent polynomial in `z_1..z_N` over `Q(q, p)`.
pub type PolyVector = SparseVec<Mono, RingElem>;

/// Whether `p` stays a free symbol or is set to one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PMode {
    Generic,
    One,
}

pub fn monomial(m: &[i64]) -> PolyVector {
    PolyVector::basis(m.to_vec())
}

fn check_index(i: usize, f: &PolyVector) -> Result<()> {
    if i == 0 || f.keys().any(|m| m.len() < i) {
        return Err(Error::InvalidArgument(format!("variable index {i} out of range")));
    }
    Ok(())
}

/// `K_{i,j}`: swaps `z_i` and `z_j`.
pub fn apply_k(i: usize, j: usize, f: &PolyVector) -> PolyVector {
    f.apply(|m| {
        let mut m = m.clone();
        m.swap(i - 1, j - 1);
        PolyVector::basis(m)
    })
}

/// Multiplies by `z_i^e`.
pub fn mul_z(i: usize, e: i64, f: &PolyVector) -> PolyVector {
    f.apply(|m| {
        let mut m = m.clone();
        m[i - 1] += e;
        PolyVector::basis(m)
    })
}

/// Multiplies by an arbitrary Laurent polynomial.
pub fn mul_poly(a: &PolyVector, f: &PolyVector) -> PolyVector {
    let mut out = PolyVector::new();
    for (ma, ca) in a.iter() {
        for (mf, cf) in f.iter() {
            let m: Mono = ma.iter().zip(mf).map(|(x, y)| x + y).collect();
            out.add_term(m, ca * cf);
        }
    }
    out
}

/// `p^{D_i}` (or its inverse when `sign < 0`): `z_i -> p^{sign} z_i`.
pub fn p_shift(i: usize, sign: i64, mode: PMode, f: &PolyVector) -> PolyVector {
    if mode == PMode::One {
        return f.clone();
    }
    let mut out = PolyVector::new();
    for (m, c) in f.iter() {
        out.add_term(m.clone(), c * &RingElem::p_pow(sign * m[i - 1]));
    }
    out
}

/// Exact quotient `f / (z_i - z_j)`.
///
/// Terms are grouped by the exponents of the other variables and by the
/// total degree `d` in `z_i, z_j`; within a group the division is a
/// recurrence on the `z_i` exponent.
pub fn div_by_difference(i: usize, j: usize, f: &PolyVector) -> Result<PolyVector> {
    let (i, j) = (i - 1, j - 1);
    let mut groups: BTreeMap<(Mono, i64), BTreeMap<i64, RingElem>> = BTreeMap::new();
    for (m, c) in f.iter() {
        let mut rest = m.clone();
        rest[i] = 0;
        rest[j] = 0;
        groups.entry((rest, m[i] + m[j])).or_default().insert(m[i], c.clone());
    }
    let mut out = PolyVector::new();
    for ((rest, d), coeffs) in groups {
        // (z_i - z_j) sum_a e_a z_i^a z_j^{d-1-a} has z_i^a z_j^{d-a}
        // coefficient e_{a-1} - e_a.
        let lo = *coeffs.keys().next().expect("nonempty group");
        let hi = *coeffs.keys().next_back().expect("nonempty group");
        let mut e = RingElem::zero();
        for a in (lo..=hi).rev() {
            if let Some(c) = coeffs.get(&a) {
                e = &e + c;
            }
            if a == lo {
                if !e.is_zero() {
                    return Err(Error::InternalNonDivisibility);
                }
                break;
            }
            if !e.is_zero() {
                let mut m = rest.clone();
                m[i] = a - 1;
                m[j] = d - a;
                out.add_term(m, e.clone());
            }
        }
    }
    Ok(out)
}

/// `g_{i,j} = (q^{-1} z_i - q z_j)/(z_i - z_j) (K_{i,j} - 1) + q`.
pub fn apply_g(i: usize, j: usize, f: &PolyVector) -> Result<PolyVector> {
    check_index(i.max(j), f)?;
    if i == j {
        return Err(Error::InvalidArgument("g_{i,j} needs i != j".into()));
    }
    let q = RingElem::q();
    let diff = apply_k(i, j, f).sub(f);
    let h = div_by_difference(i, j, &diff)?;
    let mut out = mul_z(i, 1, &h).scale(&RingElem::q_pow(-1));
    out.add_scaled(&mul_z(j, 1, &h), &-q.clone());
    out.add_scaled(f, &q);
    Ok(out)
}

/// `g^{-1} = g - (q - q^{-1})`.
pub fn apply_g_inv(i: usize, j: usize, f: &PolyVector) -> Result<PolyVector> {
    let mut out = apply_g(i, j, f)?;
    out.add_scaled(f, &-(RingElem::q() - RingElem::q_pow(-1)));
    Ok(out)
}

/// `T_i -> -q g_{i,i+1}^{-1}`.
pub fn hecke_t(i: usize, f: &PolyVector) -> Result<PolyVector> {
    Ok(apply_g_inv(i, i + 1, f)?.scale(&-RingElem::q()))
}

/// `T_i^{-1} -> -q^{-1} g_{i,i+1}`.
pub fn hecke_t_inv(i: usize, f: &PolyVector) -> Result<PolyVector> {
    Ok(apply_g(i, i + 1, f)?.scale(&-RingElem::q_pow(-1)))
}

#[derive(Clone, Copy, Debug)]
enum Factor {
    G(usize, usize),
    GInv(usize, usize),
    K(usize, usize),
    P(usize),
}

/// Factors of `Y_i^{(N)}` from left to right.
fn y_factors(i: usize, n: usize) -> Vec<Factor> {
    let mut fs = Vec::new();
    for j in i + 1..=n {
        fs.push(Factor::GInv(i, j));
        fs.push(Factor::K(i, j));
    }
    fs.push(Factor::P(i));
    for j in 1..i {
        fs.push(Factor::K(j, i));
        fs.push(Factor::G(j, i));
    }
    fs
}

fn apply_factor(fac: Factor, inverse: bool, mode: PMode, f: &PolyVector) -> Result<PolyVector> {
    match (fac, inverse) {
        (Factor::G(a, b), false) | (Factor::GInv(a, b), true) => apply_g(a, b, f),
        (Factor::GInv(a, b), false) | (Factor::G(a, b), true) => apply_g_inv(a, b, f),
        (Factor::K(a, b), _) => Ok(apply_k(a, b, f)),
        (Factor::P(a), inv) => Ok(p_shift(a, if inv { -1 } else { 1 }, mode, f)),
    }
}

fn nvars(f: &PolyVector) -> Option<usize> {
    f.keys().next().map(|m| m.len())
}

/// Cherednik operator `Y_i^{(N)}` (unnormalized).
pub fn cherednik_y(i: usize, mode: PMode, f: &PolyVector) -> Result<PolyVector> {
    let Some(n) = nvars(f) else { return Ok(f.clone()) };
    check_index(i, f)?;
    let mut v = f.clone();
    for fac in y_factors(i, n).into_iter().rev() {
        v = apply_factor(fac, false, mode, &v)?;
    }
    Ok(v)
}

/// `(Y_i^{(N)})^{-1}`.
pub fn cherednik_y_inv(i: usize, mode: PMode, f: &PolyVector) -> Result<PolyVector> {
    let Some(n) = nvars(f) else { return Ok(f.clone()) };
    check_index(i, f)?;
    let mut v = f.clone();
    for fac in y_factors(i, n) {
        v = apply_factor(fac, true, mode, &v)?;
    }
    Ok(v)
}

/// Multiplies by `e_{-k} = sum_{n_1 < .. < n_k} z_{n_1}^{-1} .. z_{n_k}^{-1}`.
pub fn elementary_em(k: usize, n: usize, f: &PolyVector) -> Result<PolyVector> {
    if k == 0 || k > n {
        return Err(Error::InvalidArgument(format!("e_-k needs 1 <= k <= N, got k={k}, N={n}")));
    }
    let mut e = PolyVector::new();
    for subset in k_subsets(n, k) {
        let mut m = vec![0; n];
        for s in subset {
            m[s] = -1;
        }
        e.add_term(m, RingElem::one());
    }
    Ok(mul_poly(&e, f))
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for s in start..n {
            cur.push(s);
            rec(s + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Result of a dominance comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dominance {
    Greater,
    Less,
    Equal,
    Incomparable,
}

/// Dominance order via partial sums from the left.
pub fn dominance_cmp(a: &[i64], b: &[i64]) -> Result<Dominance> {
    if a.len() != b.len() || a.iter().sum::<i64>() != b.iter().sum::<i64>() {
        return Err(Error::UnequalDegree);
    }
    let (mut sa, mut sb) = (0, 0);
    let (mut ge, mut le) = (true, true);
    for (x, y) in a.iter().zip(b) {
        sa += x;
        sb += y;
        ge &= sa >= sb;
        le &= sa <= sb;
    }
    Ok(match (ge, le) {
        (true, true) => Dominance::Equal,
        (true, false) => Dominance::Greater,
        (false, true) => Dominance::Less,
        (false, false) => Dominance::Incomparable,
    })
}

/// A pair `(lambda, sigma)`; see the module docs for the convention.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CompositionLabel {
    pub lambda: Vec<i64>,
    /// 1-based permutation.
    pub sigma: Vec<usize>,
}

impl CompositionLabel {
    pub fn new(lambda: Vec<i64>, sigma: Vec<usize>) -> Result<Self> {
        if !lambda.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument(format!("lambda must be non-increasing: {lambda:?}")));
        }
        let l = CompositionLabel { lambda, sigma };
        if !in_s_lambda(&l.lambda, &l.sigma) {
            return Err(Error::InvalidArgument(format!("sigma {:?} not in S^lambda", l.sigma)));
        }
        Ok(l)
    }

    /// The label of the monomial `z^mu`.
    pub fn from_composition(mu: &[i64]) -> Self {
        let mut idx: Vec<usize> = (0..mu.len()).collect();
        idx.sort_by(|&a, &b| mu[b].cmp(&mu[a]).then(a.cmp(&b)));
        let mut sigma = vec![0; mu.len()];
        for (rank, &pos) in idx.iter().enumerate() {
            sigma[pos] = rank + 1;
        }
        let lambda = idx.iter().map(|&p| mu[p]).collect();
        CompositionLabel { lambda, sigma }
    }

    /// Minimal element of `S^lambda`.
    pub fn min(lambda: &[i64]) -> Result<Self> {
        let mut mu = lambda.to_vec();
        mu.sort();
        let l = Self::from_composition(&mu);
        if l.lambda != lambda {
            return Err(Error::InvalidArgument(format!("lambda must be non-increasing: {lambda:?}")));
        }
        Ok(l)
    }

    /// Exponent vector `lambda^sigma`.
    pub fn composition(&self) -> Mono {
        self.sigma.iter().map(|&s| self.lambda[s - 1]).collect()
    }

    pub fn n(&self) -> usize {
        self.lambda.len()
    }

    /// `xi_i = p^{lambda_{sigma(i)}} q^{2 sigma(i) - N - 1}`.
    pub fn eigenvalues(&self, mode: PMode) -> Vec<RingElem> {
        let n = self.n() as i64;
        self.sigma
            .iter()
            .map(|&s| {
                let qp = RingElem::q_pow(2 * s as i64 - n - 1);
                match mode {
                    PMode::Generic => qp * RingElem::p_pow(self.lambda[s - 1]),
                    PMode::One => qp,
                }
            })
            .collect()
    }

    /// `sigma (i, i+1)`.
    pub fn swapped(&self, i: usize) -> CompositionLabel {
        let mut sigma = self.sigma.clone();
        sigma.swap(i - 1, i);
        CompositionLabel { lambda: self.lambda.clone(), sigma }
    }
}

fn in_s_lambda(lambda: &[i64], sigma: &[usize]) -> bool {
    let n = lambda.len();
    let mut seen = vec![false; n + 1];
    if sigma.len() != n || sigma.iter().any(|&s| s == 0 || s > n || std::mem::replace(&mut seen[s], true)) {
        return false;
    }
    (0..n).all(|i| {
        (0..n).all(|j| !(lambda[sigma[i] - 1] == lambda[sigma[j] - 1] && sigma[i] < sigma[j]) || i < j)
    })
}

/// Total order on `S^lambda`: `sigma > sigma'` iff the last nonzero entry of
/// `lambda^sigma - lambda^sigma'` is negative.
pub fn sord_cmp(lambda: &[i64], a: &[usize], b: &[usize]) -> Ordering {
    for i in (0..a.len()).rev() {
        let d = lambda[a[i] - 1] - lambda[b[i] - 1];
        if d != 0 {
            return if d < 0 { Ordering::Greater } else { Ordering::Less };
        }
    }
    Ordering::Equal
}

/// `S^lambda` sorted increasingly by [`sord_cmp`]; the first element is `min`.
pub fn s_lambda_order(lambda: &[i64]) -> Vec<Vec<usize>> {
    let mut comps: BTreeSet<Mono> = BTreeSet::new();
    permutations_of(lambda, &mut comps);
    let mut out: Vec<Vec<usize>> = comps.iter().map(|c| CompositionLabel::from_composition(c).sigma).collect();
    out.sort_by(|a, b| sord_cmp(lambda, a, b));
    out
}

fn permutations_of(v: &[i64], out: &mut BTreeSet<Mono>) {
    let mut cur = v.to_vec();
    cur.sort();
    loop {
        out.insert(cur.clone());
        // next lexicographic permutation
        let Some(i) = (0..cur.len().saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else { break };
        let j = (i + 1..cur.len()).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
}

/// Partial order on labels: dominance on `lambda` (same degree), then the
/// total order on `S^lambda`. `None` when incomparable.
pub fn label_cmp(a: &CompositionLabel, b: &CompositionLabel) -> Option<Ordering> {
    match dominance_cmp(&a.lambda, &b.lambda).ok()? {
        Dominance::Greater => Some(Ordering::Greater),
        Dominance::Less => Some(Ordering::Less),
        Dominance::Equal => Some(sord_cmp(&a.lambda, &a.sigma, &b.sigma)),
        Dominance::Incomparable => None,
    }
}

/// Default bound on the number of monomials in a Macdonald closure.
pub const DEFAULT_CLOSURE_BOUND: usize = 10_000;

type PhiKey = (Mono, PMode);

fn phi_cache() -> &'static Mutex<HashMap<PhiKey, PolyVector>> {
    static CACHE: OnceLock<Mutex<HashMap<PhiKey, PolyVector>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Non-symmetric Macdonald polynomial `Phi_sigma^lambda` over `Q(q, p)`
/// (`PMode::Generic`) or its specialization at `p = 1` (`PMode::One`).
pub fn macdonald_phi(label: &CompositionLabel, mode: PMode) -> Result<PolyVector> {
    macdonald_phi_bounded(label, mode, DEFAULT_CLOSURE_BOUND)
}

pub fn macdonald_phi_bounded(label: &CompositionLabel, mode: PMode, bound: usize) -> Result<PolyVector> {
    let key = (label.composition(), mode);
    if let Some(v) = phi_cache().lock().expect("cache lock").get(&key) {
        return Ok(v.clone());
    }
    let v = match mode {
        PMode::Generic => solve_phi(label, bound)?,
        PMode::One => macdonald_phi_bounded(label, PMode::Generic, bound)?
            .try_map_coeffs(|c| c.specialize_p1())?,
    };
    phi_cache().lock().expect("cache lock").insert(key, v.clone());
    Ok(v)
}

/// Macdonald polynomial at `p = 1`.
pub fn macdonald_phi_p1(label: &CompositionLabel) -> Result<PolyVector> {
    macdonald_phi(label, PMode::One)
}

fn solve_phi(label: &CompositionLabel, bound: usize) -> Result<PolyVector> {
    let n = label.n();
    let lead = label.composition();
    let xi = label.eigenvalues(PMode::Generic);

    // Monomial closure under all Y_i, with the images recorded.
    let mut images: BTreeMap<Mono, Vec<PolyVector>> = BTreeMap::new();
    let mut queue = vec![lead.clone()];
    let mut seen: BTreeSet<Mono> = queue.iter().cloned().collect();
    while let Some(m) = queue.pop() {
        let f = monomial(&m);
        let mut ims = Vec::with_capacity(n);
        for i in 1..=n {
            let y = cherednik_y(i, PMode::Generic, &f)?;
            for k in y.keys() {
                if seen.insert(k.clone()) {
                    if seen.len() > bound {
                        return Err(Error::ClosureDivergence(bound));
                    }
                    queue.push(k.clone());
                }
            }
            ims.push(y);
        }
        images.insert(m, ims);
    }

    // Edges src -> dst whenever some Y_i maps z^src onto z^dst (dst != src).
    let mut preds: BTreeMap<&Mono, BTreeSet<&Mono>> = images.keys().map(|m| (m, BTreeSet::new())).collect();
    for (src, ims) in &images {
        for y in ims {
            for dst in y.keys() {
                if dst != src {
                    preds.get_mut(dst).expect("closed").insert(src);
                }
            }
        }
    }
    let order = topo_order(&preds).ok_or_else(|| {
        Error::EigenSolve(format!("Y action on the closure of z^{lead:?} is not triangular"))
    })?;

    let mut coeff: BTreeMap<Mono, RingElem> = BTreeMap::new();
    for m in order {
        if *m == lead {
            coeff.insert(m.clone(), RingElem::one());
            continue;
        }
        // pick i with (Y_i)_{mm} != xi_i; then
        // c_m = sum_{src} (Y_i)_{m,src} c_src / (xi_i - (Y_i)_{mm})
        let mut solved = None;
        for i in 0..n {
            let diag = images[m][i].coeff(m);
            let denom = &xi[i] - &diag;
            if denom.is_zero() {
                continue;
            }
            let mut s = RingElem::zero();
            for src in &preds[m] {
                if let Some(c) = coeff.get(*src) {
                    let a = images[*src][i].coeff(m);
                    if !a.is_zero() {
                        s += &(&a * c);
                    }
                }
            }
            solved = Some(s.checked_div(&denom)?);
            break;
        }
        let c = solved.ok_or_else(|| Error::EigenSolve(format!("degenerate eigenvalues at z^{m:?}")))?;
        if !c.is_zero() {
            coeff.insert(m.clone(), c);
        }
    }
    let phi: PolyVector = coeff.into_iter().collect();

    for (i, x) in xi.iter().enumerate() {
        let r = cherednik_y(i + 1, PMode::Generic, &phi)?.sub(&phi.scale(x));
        if !r.is_zero() {
            return Err(Error::EigenSolve(format!("nonzero eigen-residual for Y_{} at z^{lead:?}", i + 1)));
        }
    }
    Ok(phi)
}

/// Topological order of a DAG given by predecessor sets; deterministic.
fn topo_order<'a>(preds: &BTreeMap<&'a Mono, BTreeSet<&'a Mono>>) -> Option<Vec<&'a Mono>> {
    let mut indeg: BTreeMap<&Mono, usize> = preds.iter().map(|(k, v)| (*k, v.len())).collect();
    let mut succ: BTreeMap<&Mono, Vec<&Mono>> = BTreeMap::new();
    for (dst, srcs) in preds {
        for s in srcs {
            succ.entry(*s).or_default().push(*dst);
        }
    }
    let mut ready: BTreeSet<&Mono> = indeg.iter().filter(|(_, d)| **d == 0).map(|(k, _)| *k).collect();
    let mut out = Vec::with_capacity(preds.len());
    while let Some(m) = ready.pop_first() {
        out.push(m);
        for d in succ.get(m).into_iter().flatten() {
            let e = indeg.get_mut(*d).expect("node");
            *e -= 1;
            if *e == 0 {
                ready.insert(*d);
            }
        }
    }
    (out.len() == preds.len()).then_some(out)
}

/// Checks that every non-leading monomial of `phi` is strictly below `label`.
pub fn is_triangular(label: &CompositionLabel, phi: &PolyVector) -> bool {
    let lead = label.composition();
    phi.keys().all(|m| {
        *m == lead || label_cmp(&CompositionLabel::from_composition(m), label) == Some(Ordering::Less)
    })
}

/// Coefficients `A_i(sigma)`, `B_i(sigma)` of
/// `g_{i,i+1} Phi_sigma = A Phi_sigma + B Phi_{sigma (i,i+1)}`.
pub fn g_action_coefficients(label: &CompositionLabel, i: usize, mode: PMode) -> Result<(RingElem, RingElem)> {
    let xi = label.eigenvalues(mode);
    let x = xi[i].checked_div(&xi[i - 1])?;
    let q = RingElem::q();
    let qi = RingElem::q_pow(-1);
    let one = RingElem::one();
    let xm1 = &x - &one;
    let a = (&(&q - &qi) * &x).checked_div(&xm1)?;
    let (li, lj) = (label.lambda[label.sigma[i - 1] - 1], label.lambda[label.sigma[i] - 1]);
    let b = match li.cmp(&lj) {
        Ordering::Greater => {
            let q2 = RingElem::q_pow(2);
            let br = (&(&x - &q2) * &(&(&q2 * &x) - &one)).checked_div(&(&xm1 * &xm1))?;
            &qi * &br
        }
        Ordering::Equal => RingElem::zero(),
        Ordering::Less => qi,
    };
    Ok((a, b))
}

/// All exponent vectors in `[lo, hi]^n`, lexicographic.
pub fn box_monomials(n: usize, lo: i64, hi: i64) -> Vec<Mono> {
    let mut out = Vec::new();
    let mut cur = vec![lo; n];
    loop {
        out.push(cur.clone());
        let mut k = n;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if cur[k] < hi {
                cur[k] += 1;
                for c in cur.iter_mut().skip(k + 1) {
                    *c = lo;
                }
                break;
            }
        }
    }
}

/// Which operators stand for `T_i` and `Y_i` in a polynomial representation
/// of the affine Hecke algebra. `T_i` is always `-q g_{i,i+1}^{-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HeckeAction {
    /// `Y_i -> q^{1-N} Y_i^{(N)}`.
    Cherednik(PMode),
    /// `Y_i -> z_i^{-1}`.
    Multiplication,
}

/// Outcome of one relation family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub family: String,
    pub passed: bool,
    pub instances: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Gen {
    T(usize),
    TInv(usize),
    Y(usize),
    YInv(usize),
}

struct HeckeOps {
    n: usize,
    action: HeckeAction,
    memo: HashMap<Gen, HashMap<Mono, PolyVector>>,
}

impl HeckeOps {
    fn on_monomial(&self, g: Gen, m: &Mono) -> Result<PolyVector> {
        let f = monomial(m);
        let norm = RingElem::q_pow(1 - self.n as i64);
        match (g, self.action) {
            (Gen::T(i), _) => hecke_t(i, &f),
            (Gen::TInv(i), _) => hecke_t_inv(i, &f),
            (Gen::Y(i), HeckeAction::Cherednik(mode)) => Ok(cherednik_y(i, mode, &f)?.scale(&norm)),
            (Gen::YInv(i), HeckeAction::Cherednik(mode)) => {
                Ok(cherednik_y_inv(i, mode, &f)?.scale(&norm.inv()?))
            }
            (Gen::Y(i), HeckeAction::Multiplication) => Ok(mul_z(i, -1, &f)),
            (Gen::YInv(i), HeckeAction::Multiplication) => Ok(mul_z(i, 1, &f)),
        }
    }

    fn apply(&mut self, g: Gen, v: &PolyVector) -> Result<PolyVector> {
        let mut out = PolyVector::new();
        for (m, c) in v.iter() {
            if !self.memo.get(&g).is_some_and(|t| t.contains_key(m)) {
                let im = self.on_monomial(g, m)?;
                self.memo.entry(g).or_default().insert(m.clone(), im);
            }
            out.add_scaled(&self.memo[&g][m], c);
        }
        Ok(out)
    }

    /// Applies a word, rightmost generator first.
    fn word(&mut self, w: &[Gen], v: &PolyVector) -> Result<PolyVector> {
        let mut v = v.clone();
        for &g in w.iter().rev() {
            v = self.apply(g, &v)?;
        }
        Ok(v)
    }
}

type Relation = (&'static str, Vec<(RingElem, Vec<Gen>)>);

fn hecke_relations(n: usize) -> Vec<Relation> {
    use Gen::*;
    let one = RingElem::one;
    let mut rels: Vec<Relation> = Vec::new();
    for i in 1..n {
        rels.push(("T T^-1 = 1", vec![(one(), vec![T(i), TInv(i)]), (-one(), vec![])]));
        rels.push(("T^-1 T = 1", vec![(one(), vec![TInv(i), T(i)]), (-one(), vec![])]));
        let q2 = RingElem::q_pow(2);
        rels.push((
            "(T+1)(T-q^2) = 0",
            vec![(one(), vec![T(i), T(i)]), (&one() - &q2, vec![T(i)]), (-q2, vec![])],
        ));
        if i + 1 < n {
            rels.push(("braid", vec![(one(), vec![T(i), T(i + 1), T(i)]), (-one(), vec![T(i + 1), T(i), T(i + 1)])]));
        }
        for j in i + 2..n {
            rels.push(("T_i T_j = T_j T_i", vec![(one(), vec![T(i), T(j)]), (-one(), vec![T(j), T(i)])]));
        }
        rels.push((
            "T^-1 Y_i T^-1 = q^-2 Y_i+1",
            vec![(one(), vec![TInv(i), Y(i), TInv(i)]), (-RingElem::q_pow(-2), vec![Y(i + 1)])],
        ));
        for j in 1..=n {
            if j != i && j != i + 1 {
                rels.push(("Y_j T_i = T_i Y_j", vec![(one(), vec![Y(j), T(i)]), (-one(), vec![T(i), Y(j)])]));
            }
        }
    }
    for i in 1..=n {
        rels.push(("Y Y^-1 = 1", vec![(one(), vec![Y(i), YInv(i)]), (-one(), vec![])]));
        rels.push(("Y^-1 Y = 1", vec![(one(), vec![YInv(i), Y(i)]), (-one(), vec![])]));
        for j in i + 1..=n {
            rels.push(("Y_i Y_j = Y_j Y_i", vec![(one(), vec![Y(i), Y(j)]), (-one(), vec![Y(j), Y(i)])]));
        }
    }
    rels
}

/// Checks the affine Hecke presentation for `action` on every monomial with
/// exponents in `[lo, hi]^n`. Every generator preserves this window.
pub fn verify_affine_hecke(n: usize, lo: i64, hi: i64, action: HeckeAction) -> Result<Vec<RelationCheck>> {
    if n == 0 || lo > hi {
        return Err(Error::InvalidArgument("empty degree window".into()));
    }
    let mut ops = HeckeOps { n, action, memo: HashMap::new() };
    let monos = box_monomials(n, lo, hi);
    let mut out: Vec<RelationCheck> = Vec::new();
    for (family, terms) in hecke_relations(n) {
        let mut passed = true;
        for m in &monos {
            let v = monomial(m);
            let mut acc = PolyVector::new();
            for (c, w) in &terms {
                acc.add_scaled(&ops.word(w, &v)?, c);
            }
            passed &= acc.is_zero();
        }
        match out.iter_mut().find(|r| r.family == family) {
            Some(r) => {
                r.passed &= passed;
                r.instances += 1;
            }
            None => out.push(RelationCheck { family: family.to_string(), passed, instances: 1 }),
        }
    }
    Ok(out)
}
