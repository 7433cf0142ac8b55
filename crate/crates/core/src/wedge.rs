//! The q-wedge product, straightening into normally ordered wedges, finite
//! wedge spaces, Fock space components and the Heisenberg action.
//!
//! Indices follow `u_k = z^m v_eps` with `k = eps - n m`, `eps` in `1..=n`.
//! A finite wedge or tensor is keyed by its index word `(k_1, .., k_N)`.
//! Vectors of `F_M` are keyed by partitions `lambda` (no trailing zeros):
//! the wedge with `k_i = M - i + 1 + lambda_i`.

use std::cell::RefCell;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactring::RingElem;
use crate::heckepoly::{hecke_t, monomial};
use crate::linalg::{Matrix, SparseVec, Subspace};

pub type Word = Vec<i64>;

/// Linear combination of index words (tensors or wedges) or of partitions.
pub type WedgeVector = SparseVec<Word, RingElem>;

/// `k -> (m, eps)`.
pub fn split_index(k: i64, n: usize) -> (i64, usize) {
    let n = n as i64;
    let eps = (k - 1).rem_euclid(n) + 1;
    ((eps - k) / n, eps as usize)
}

pub fn join_index(m: i64, eps: usize, n: usize) -> i64 {
    eps as i64 - n as i64 * m
}

/// `m`-component of `u_k`.
pub fn index_m(k: i64, n: usize) -> i64 {
    split_index(k, n).0
}

pub fn is_normal(w: &[i64]) -> bool {
    w.windows(2).all(|p| p[0] > p[1])
}

/// One straightening rule: `u_k (x) u_l = sum c u_a ^ u_b` with `a > b`.
pub type PairRule = Vec<((i64, i64), RingElem)>;

/// `q^2 S^-1 = S - q^2 + 1` on `v_a (x) v_b`.
fn q2_s_inv(a: usize, b: usize) -> Vec<((usize, usize), RingElem)> {
    let q = RingElem::q();
    let q2 = RingElem::q_pow(2);
    let one = RingElem::one();
    match a.cmp(&b) {
        std::cmp::Ordering::Equal => vec![((a, b), one)],
        std::cmp::Ordering::Less => vec![((b, a), q), ((a, b), &one - &q2)],
        std::cmp::Ordering::Greater => vec![((b, a), q)],
    }
}

/// Derives the rule for `u_k (x) u_l` (`k <= l`) on the two-site block with
/// `z`-exponents in `[lo - widen, m_k + m_l - lo + widen]`.
pub fn derive_rule(n: usize, k: i64, l: i64, widen: i64) -> Result<PairRule> {
    if n < 2 {
        return Err(Error::InvalidArgument("n must be at least 2".into()));
    }
    if k > l {
        return Err(Error::InvalidArgument(format!("rule needs k <= l, got ({k}, {l})")));
    }
    let (mk, ek) = split_index(k, n);
    let (ml, el) = split_index(l, n);
    let d = mk + ml;
    let lo = mk.min(ml) - widen;
    let mut colors = vec![(ek, el)];
    if ek != el {
        colors.push((el, ek));
    }
    let mut basis: Vec<(i64, i64, usize, usize)> = Vec::new();
    for m1 in lo..=d - lo {
        for &(a, b) in &colors {
            basis.push((m1, d - m1, a, b));
        }
    }
    let index: HashMap<(i64, i64, usize, usize), usize> = basis.iter().enumerate().map(|(i, b)| (*b, i)).collect();
    let dim = basis.len();
    let mut cols = Vec::with_capacity(dim);
    for &(m1, m2, a, b) in &basis {
        let mut col = vec![RingElem::zero(); dim];
        for (mono, c) in hecke_t(1, &monomial(&[m1, m2]))?.iter() {
            let i = index[&(mono[0], mono[1], a, b)];
            col[i] = &col[i] + c;
        }
        for ((a2, b2), c) in q2_s_inv(a, b) {
            let i = index[&(m1, m2, a2, b2)];
            col[i] = &col[i] + &c;
        }
        cols.push(col);
    }
    let a_mat = Matrix::from_columns(&cols, dim);
    let word = |i: usize| {
        let (m1, m2, a, b) = basis[i];
        (join_index(m1, a, n), join_index(m2, b, n))
    };
    let normal: Vec<usize> = (0..dim).filter(|&i| word(i).0 > word(i).1).collect();
    let kernel_dim = dim - a_mat.rank();
    if kernel_dim != dim - normal.len() {
        return Err(Error::RuleInconsistency(format!(
            "kernel dimension {kernel_dim} vs {} non-normal tensors for ({k}, {l})",
            dim - normal.len()
        )));
    }
    let target = basis
        .iter()
        .position(|&(m1, m2, a, b)| (m1, m2, a, b) == (mk, ml, ek, el))
        .expect("target in block");
    if k == l {
        return Ok(Vec::new());
    }
    let lhs = Matrix::from_columns(&normal.iter().map(|&i| a_mat.column(i)).collect::<Vec<_>>(), dim);
    if lhs.rank() != normal.len() {
        return Err(Error::RuleInconsistency(format!("normal wedges dependent for ({k}, {l})")));
    }
    let x = lhs
        .solve(&a_mat.column(target))
        .ok_or_else(|| Error::RuleInconsistency(format!("no expansion for ({k}, {l})")))?;
    let mut rule: PairRule = normal
        .iter()
        .zip(x)
        .filter(|(_, c)| !c.is_zero())
        .map(|(&i, c)| (word(i), c))
        .collect();
    rule.sort_by(|a, b| b.0.cmp(&a.0));
    Ok(rule)
}

type RuleKey = (usize, i64, i64);

fn rule_cache() -> &'static Mutex<HashMap<RuleKey, Arc<PairRule>>> {
    static CACHE: OnceLock<Mutex<HashMap<RuleKey, Arc<PairRule>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The rule for `u_k (x) u_l`, `k <= l`. Rules are computed for `k` in
/// `1..=n` and translated by multiples of `n` (a shift of both `z`-exponents,
/// which commutes with the kernel).
pub fn pair_rule(n: usize, k: i64, l: i64) -> Result<PairRule> {
    let (t, _) = split_index(k, n);
    let shift = -(n as i64) * t;
    let (k0, l0) = (k - shift, l - shift);
    let key = (n, k0, l0 - k0);
    let cached = rule_cache().lock().expect("rule cache").get(&key).cloned();
    let base = match cached {
        Some(r) => r,
        None => {
            let r = Arc::new(derive_rule(n, k0, l0, 0)?);
            rule_cache().lock().expect("rule cache").insert(key, r.clone());
            r
        }
    };
    Ok(base.iter().map(|((a, b), c)| ((a + shift, b + shift), c.clone())).collect())
}

/// The straightening table for `n` and all `0 <= l - k <= max_gap`, keyed by
/// `(k, l)` with `k` in `1..=n`.
pub fn derive_rules(n: usize, max_gap: i64) -> Result<Vec<((i64, i64), PairRule)>> {
    let mut out = Vec::new();
    for k in 1..=n as i64 {
        for gap in 0..=max_gap {
            out.push(((k, k + gap), pair_rule(n, k, k + gap)?));
        }
    }
    Ok(out)
}

/// Default bound on nested rewrites in a single straightening.
pub const REWRITE_DEPTH_BOUND: usize = 100_000;

/// Memoizing straightener for a fixed `n`.
pub struct Straightener {
    n: usize,
    memo: HashMap<Word, WedgeVector>,
}

impl Straightener {
    pub fn new(n: usize) -> Self {
        Straightener { n, memo: HashMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `Lambda(u_{w_1} (x) .. (x) u_{w_N})` in normally ordered wedges.
    pub fn word(&mut self, w: &[i64]) -> Result<WedgeVector> {
        self.word_depth(w, 0)
    }

    fn word_depth(&mut self, w: &[i64], depth: usize) -> Result<WedgeVector> {
        if depth > REWRITE_DEPTH_BOUND {
            return Err(Error::NonTermination(REWRITE_DEPTH_BOUND));
        }
        let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i] <= w[i + 1]) else {
            return Ok(WedgeVector::basis(w.to_vec()));
        };
        if let Some(v) = self.memo.get(w) {
            return Ok(v.clone());
        }
        let mut out = WedgeVector::new();
        if w[i] != w[i + 1] {
            for ((a, b), c) in pair_rule(self.n, w[i], w[i + 1])? {
                let mut w2 = w.to_vec();
                w2[i] = a;
                w2[i + 1] = b;
                let sub = self.word_depth(&w2, depth + 1)?;
                out.add_scaled(&sub, &c);
            }
        }
        self.memo.insert(w.to_vec(), out.clone());
        Ok(out)
    }

    pub fn vector(&mut self, t: &WedgeVector) -> Result<WedgeVector> {
        let mut out = WedgeVector::new();
        for (w, c) in t.iter() {
            out.add_scaled(&self.word(w)?, c);
        }
        Ok(out)
    }

    /// Normal form in `F_M` of `u_{h_1} ^ .. ^ u_{h_N} ^ |M - N>`, keyed by
    /// partitions.
    pub fn semi_infinite(&mut self, m: i64, head: &[i64]) -> Result<WedgeVector> {
        let mut w = head.to_vec();
        let mut t = m - head.len() as i64;
        while w.iter().any(|&x| x <= t) {
            w.push(t);
            t -= 1;
        }
        let mut out = WedgeVector::new();
        for (word, c) in self.word(&w)?.iter() {
            out.add_term(word_to_partition(m, word), c.clone());
        }
        Ok(out)
    }
}

thread_local! {
    static STRAIGHTENERS: RefCell<HashMap<usize, Straightener>> = RefCell::new(HashMap::new());
}

/// Runs `f` with this thread's memoizing straightener for `n`.
pub fn with_straightener<T>(n: usize, f: impl FnOnce(&mut Straightener) -> Result<T>) -> Result<T> {
    STRAIGHTENERS.with(|s| {
        let mut s = s.borrow_mut();
        f(s.entry(n).or_insert_with(|| Straightener::new(n)))
    })
}

/// `Lambda(t)`: straightens every tensor word of `t`.
pub fn straighten(n: usize, t: &WedgeVector) -> Result<WedgeVector> {
    with_straightener(n, |s| s.vector(t))
}

/// Straightening that rewrites the violation chosen by `pick` (given the
/// list of violating positions) and does not memoize. Used to test that the
/// result does not depend on the reduction order.
pub fn straighten_by(n: usize, w: &[i64], pick: &mut dyn FnMut(&[usize]) -> usize) -> Result<WedgeVector> {
    let mut out = WedgeVector::new();
    let mut pending: Vec<(Word, RingElem)> = vec![(w.to_vec(), RingElem::one())];
    let mut steps = 0usize;
    while let Some((w, c)) = pending.pop() {
        steps += 1;
        if steps > 100 * REWRITE_DEPTH_BOUND {
            return Err(Error::NonTermination(steps));
        }
        let bad: Vec<usize> = (0..w.len().saturating_sub(1)).filter(|&i| w[i] <= w[i + 1]).collect();
        if bad.is_empty() {
            out.add_term(w, c);
            continue;
        }
        let i = bad[pick(&bad) % bad.len()];
        if w[i] == w[i + 1] {
            continue;
        }
        for ((a, b), r) in pair_rule(n, w[i], w[i + 1])? {
            let mut w2 = w.clone();
            w2[i] = a;
            w2[i + 1] = b;
            pending.push((w2, &c * &r));
        }
    }
    Ok(out)
}

/// `k_i` of the vacuum `|M>`.
pub fn vacuum_index(m: i64, i: usize) -> i64 {
    m - i as i64 + 1
}

pub fn word_to_partition(m: i64, w: &[i64]) -> Word {
    let mut lam: Word = w.iter().enumerate().map(|(i, &k)| k - vacuum_index(m, i + 1)).collect();
    while lam.last() == Some(&0) {
        lam.pop();
    }
    lam
}

/// Head of length `len` of the wedge with partition `lambda`.
pub fn partition_to_word(m: i64, lambda: &[i64], len: usize) -> Result<Word> {
    if lambda.len() > len {
        return Err(Error::TailMismatch);
    }
    Ok((1..=len).map(|i| vacuum_index(m, i) + lambda.get(i - 1).copied().unwrap_or(0)).collect())
}

/// Degree `sum_i m^0_i - m_i` of the wedge with partition `lambda` in `F_M`.
pub fn partition_degree(m: i64, n: usize, lambda: &[i64]) -> i64 {
    lambda
        .iter()
        .enumerate()
        .map(|(i, &l)| {
            let k0 = vacuum_index(m, i + 1);
            index_m(k0, n) - index_m(k0 + l, n)
        })
        .sum()
}

/// Degree of a finite normally ordered wedge of length `N` in `V_M^N`.
pub fn word_degree(m: i64, n: usize, w: &[i64]) -> i64 {
    w.iter().enumerate().map(|(i, &k)| index_m(vacuum_index(m, i + 1), n) - index_m(k, n)).sum()
}

/// Partitions of degree `k` in `F_M` with at most `max_len` parts, in
/// lexicographic order.
fn partitions_of_degree(m: i64, n: usize, k: i64, max_len: usize) -> Vec<Word> {
    fn rec(m: i64, n: usize, k: i64, max_len: usize, cur: &mut Word, deg: i64, out: &mut Vec<Word>) {
        if deg == k {
            out.push(cur.clone());
        }
        if cur.len() == max_len {
            return;
        }
        let i = cur.len() + 1;
        let cap = cur.last().copied().unwrap_or(n as i64 * (k + 1));
        let k0 = vacuum_index(m, i);
        for part in 1..=cap {
            let d = deg + index_m(k0, n) - index_m(k0 + part, n);
            if d > k {
                break;
            }
            cur.push(part);
            rec(m, n, k, max_len, cur, d, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    // a row of length >= 1 adds at least one unit of degree in every
    // block of n consecutive rows, so longer partitions exceed degree k
    let len_cap = max_len.min(n * (k as usize + 1));
    rec(m, n, k, len_cap, &mut Vec::new(), 0, &mut out);
    out.sort();
    out
}

/// Basis of `F_M^k` as partitions.
pub fn fock_component_basis(m: i64, k: i64, n: usize) -> Vec<Word> {
    if k < 0 {
        return Vec::new();
    }
    partitions_of_degree(m, n, k, usize::MAX)
}

/// `s = M mod n`.
pub fn residue(m: i64, n: usize) -> usize {
    m.rem_euclid(n as i64) as usize
}

/// Basis of `V_M^{s+nl,k}` as index words of length `s + n l`.
pub fn wedge_space_basis(m: i64, l: usize, k: i64, n: usize) -> Vec<Word> {
    if k < 0 {
        return Vec::new();
    }
    let len = residue(m, n) + n * l;
    partitions_of_degree(m, n, k, len)
        .into_iter()
        .map(|lam| partition_to_word(m, &lam, len).expect("length bounded"))
        .collect()
}

/// `rho_bar`: appends the vacuum tail, turning words of length `s + n l`
/// into partitions.
pub fn rho_bar(m: i64, n: usize, l: usize, w: &WedgeVector) -> Result<WedgeVector> {
    let len = residue(m, n) + n * l;
    let mut out = WedgeVector::new();
    for (word, c) in w.iter() {
        if word.len() != len || !is_normal(word) || word.last().is_some_and(|&x| x < vacuum_index(m, len)) {
            return Err(Error::InvalidArgument(format!("{word:?} is not a basis wedge of V_M^{len}")));
        }
        out.add_term(word_to_partition(m, word), c.clone());
    }
    Ok(out)
}

/// Inverse of [`rho_bar`].
pub fn rho_bar_inv(m: i64, n: usize, l: usize, v: &WedgeVector) -> Result<WedgeVector> {
    let len = residue(m, n) + n * l;
    let mut out = WedgeVector::new();
    for (lam, c) in v.iter() {
        out.add_term(partition_to_word(m, lam, len)?, c.clone());
    }
    Ok(out)
}

/// `w ^ u_{M-s-nl} ^ .. ^ u_{M-s-nl'+1}`: from `V_M^{s+nl}` to `V_M^{s+nl'}`.
pub fn extend_wedge(m: i64, n: usize, l: usize, l2: usize, w: &WedgeVector) -> Result<WedgeVector> {
    if l2 < l {
        return Err(Error::InvalidArgument("extension needs l <= l'".into()));
    }
    let s = residue(m, n);
    let (len, len2) = (s + n * l, s + n * l2);
    let mut out = WedgeVector::new();
    for (word, c) in w.iter() {
        let mut w2 = word.clone();
        w2.extend((len + 1..=len2).map(|i| vacuum_index(m, i)));
        debug_assert_eq!(w2.len(), len2);
        out.add_term(w2, c.clone());
    }
    Ok(out)
}

/// Default number of `n`-steps tried before giving up on stabilization.
pub const STABILIZATION_STEPS: usize = 8;

/// Applies `f` to the head of length `N` of every basis vector (as a word),
/// closes with `|M - N>`, and increases `N` by `n` until two consecutive
/// results agree.
pub fn stabilized<F>(m: i64, n: usize, v: &WedgeVector, start: usize, mut f: F) -> Result<WedgeVector>
where
    F: FnMut(&mut Straightener, &Word) -> Result<WedgeVector>,
{
    let longest = v.keys().map(|l| l.len()).max().unwrap_or(0);
    let mut len = start.max(longest);
    let eval = |len: usize, f: &mut F| -> Result<WedgeVector> {
        with_straightener(n, |st| {
            let mut out = WedgeVector::new();
            for (lam, c) in v.iter() {
                let head = partition_to_word(m, lam, len)?;
                out.add_scaled(&f(st, &head)?, c);
            }
            Ok(out)
        })
    };
    let mut prev = eval(len, &mut f)?;
    for _ in 0..STABILIZATION_STEPS {
        len += n;
        let next = eval(len, &mut f)?;
        if next == prev {
            return Ok(next);
        }
        prev = next;
    }
    Err(Error::NoStabilization(len))
}

/// Heisenberg generator `B_a = sum_i z_i^a` on `F_M`.
pub fn heisenberg_b(a: i64, m: i64, n: usize, v: &WedgeVector) -> Result<WedgeVector> {
    if a == 0 {
        return Err(Error::InvalidArgument("B_0 is not a generator".into()));
    }
    let deg = v.keys().map(|l| partition_degree(m, n, l)).max().unwrap_or(0).max(0);
    let start = residue(m, n) + n * (deg as usize + a.unsigned_abs() as usize + 1);
    stabilized(m, n, v, start, |st, head| {
        let mut out = WedgeVector::new();
        for i in 0..head.len() {
            let mut h = head.clone();
            h[i] -= n as i64 * a;
            out.add_scaled(&st.semi_infinite(m, &h)?, &RingElem::one());
        }
        Ok(out)
    })
}

/// Coordinates of a vector of partitions in an ordered basis.
pub fn coordinates(basis: &[Word], v: &WedgeVector) -> Result<Vec<RingElem>> {
    let index: std::collections::BTreeMap<Word, usize> = basis.iter().cloned().zip(0..).collect();
    v.to_dense(&index, basis.len())
        .ok_or_else(|| Error::Invariant("vector leaves the given basis".into()))
}

/// `H'_- F_M` in degree `k`: the span of `B_{-a} F_M^{k-a}`, `1 <= a <= k`,
/// in coordinates of [`fock_component_basis`].
pub fn heisenberg_ideal_basis(m: i64, k: i64, n: usize) -> Result<Subspace<RingElem>> {
    let basis = fock_component_basis(m, k, n);
    let mut vecs = Vec::new();
    for a in 1..=k {
        for lam in fock_component_basis(m, k - a, n) {
            let img = heisenberg_b(-a, m, n, &WedgeVector::basis(lam))?;
            vecs.push(coordinates(&basis, &img)?);
        }
    }
    Ok(Subspace::span(basis.len(), vecs))
}
