//! The level-zero decomposition of `F_M / H'_- F_M` into border-strip
//! modules, degree by degree, and the `sl_2` factorization into evaluation
//! modules.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactring::RingElem;
use crate::heckepoly::{macdonald_phi_p1, CompositionLabel, PMode, PolyVector};
use crate::linalg::{Matrix, Subspace};
use crate::qaffine::{act, Action, GenKind, Generator};
use crate::rmodule::{image_basis, lambda_to_strip, strip_product, v_lambda_subspace, BlockSubspace, Variant};
use crate::tableaux::{border_strips, char_level1, enumerate_sst, BorderStrip, CharPoly};
use crate::wedge::{
    coordinates, fock_component_basis, heisenberg_ideal_basis, index_m, join_index, partition_to_word, residue,
    split_index, vacuum_index, with_straightener, Word, WedgeVector,
};

/// `m^0_i` of the vacuum `|M>`.
pub fn vacuum_m(m: i64, n: usize, i: usize) -> i64 {
    index_m(vacuum_index(m, i), n)
}

/// The set of non-increasing, `n`-strict `lambda` of length `N = s + n k`
/// with `lambda_1 <= m^0_N`, `|m^0 - lambda| = k` and steps 0 or 1, for the
/// vacuum `|M>`.
pub fn tilde_m_set_for(n: usize, m: i64, k: usize) -> Vec<Vec<i64>> {
    let len = residue(m, n) + n * k;
    if len == 0 {
        return vec![Vec::new()];
    }
    let m0: Vec<i64> = (1..=len).map(|i| vacuum_m(m, n, i)).collect();
    let target: i64 = m0.iter().sum::<i64>() - k as i64;
    let mut out = Vec::new();
    for runs in run_compositions(len, n) {
        // lambda = top on the first run, top - 1 on the next, ...
        let drop: i64 = runs.iter().enumerate().map(|(j, &r)| j as i64 * r as i64).sum();
        let num = target + drop;
        if num.rem_euclid(len as i64) != 0 {
            continue;
        }
        let top = num / len as i64;
        if top > m0[len - 1] {
            continue;
        }
        out.push(runs.iter().enumerate().flat_map(|(j, &r)| std::iter::repeat_n(top - j as i64, r)).collect());
    }
    out.sort_by(|a: &Vec<i64>, b| b.cmp(a));
    out
}

/// [`tilde_m_set_for`] with `M = s`.
pub fn tilde_m_set(n: usize, s: usize, k: usize) -> Vec<Vec<i64>> {
    tilde_m_set_for(n, s as i64, k)
}

fn run_compositions(total: usize, max_part: usize) -> Vec<Vec<usize>> {
    if total == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for r in 1..=max_part.min(total) {
        for mut rest in run_compositions(total - r, max_part) {
            rest.insert(0, r);
            out.push(rest);
        }
    }
    out
}

/// `F_M^k / (H'_- F_M cap F_M^k)`.
#[derive(Clone, Debug)]
pub struct FockQuotient {
    pub n: usize,
    pub m: i64,
    pub k: usize,
    /// Basis of `F_M^k` (partitions).
    pub basis: Vec<Word>,
    pub ideal: Subspace<RingElem>,
    /// Partitions whose classes form a basis of the quotient.
    pub representatives: Vec<Word>,
}

impl FockQuotient {
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    /// Coordinates of the class of `v` in the basis of [`Self::representatives`].
    pub fn project(&self, v: &WedgeVector) -> Result<Vec<RingElem>> {
        Ok(self.ideal.quotient_coords(&coordinates(&self.basis, v)?))
    }
}

pub fn quotient_basis(n: usize, m: i64, k: usize) -> Result<FockQuotient> {
    let basis = fock_component_basis(m, k as i64, n);
    let ideal = heisenberg_ideal_basis(m, k as i64, n)?;
    let representatives = ideal.complement_indices().into_iter().map(|i| basis[i].clone()).collect();
    Ok(FockQuotient { n, m, k, basis, ideal, representatives })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    Match,
    Mismatch(String),
}

impl Status {
    pub fn is_match(&self) -> bool {
        *self == Status::Match
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DecompEntry {
    pub strip: BorderStrip,
    /// Lowest-normalized grade of the strip in the level-one character.
    pub grade: i64,
    pub dim: usize,
    /// Weight character of `(x)^N V / V^lambda` (colour counts).
    pub character: CharPoly,
    pub lambda: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DecompReport {
    pub n: usize,
    pub m: i64,
    pub k: usize,
    pub entries: Vec<DecompEntry>,
    pub quotient_dim: usize,
    pub status: Status,
}

/// Eigenvalue labels of `Phi_min^lambda` at `p = 1`: `pi_a(E_0)` carries
/// `q^{a_j}` where `q^{-a_j}` is the eigenvalue of `q^{1-N} Y_j`.
pub fn min_labels(lambda: &[i64]) -> Result<Vec<i64>> {
    let label = CompositionLabel::min(lambda)?;
    let n = lambda.len() as i64;
    Ok(label.sigma.iter().map(|&s| 2 * n - 2 * s as i64).collect())
}

/// `psi_k` restricted to `Phi_min^lambda (x) (x)^N V`.
pub struct PsiMap {
    n: usize,
    m: i64,
    phi: PolyVector,
    memo: HashMap<Word, WedgeVector>,
}

impl PsiMap {
    pub fn new(n: usize, m: i64, lambda: &[i64]) -> Result<Self> {
        let phi = if lambda.is_empty() { crate::heckepoly::monomial(&[]) } else { macdonald_phi_p1(&CompositionLabel::min(lambda)?)? };
        Ok(PsiMap { n, m, phi, memo: HashMap::new() })
    }

    /// `Phi (x) v_w ^ |M - N>` in `F_M`.
    pub fn word(&mut self, w: &[i64]) -> Result<WedgeVector> {
        if let Some(v) = self.memo.get(w) {
            return Ok(v.clone());
        }
        let (n, m) = (self.n, self.m);
        let phi = &self.phi;
        let out = with_straightener(n, |st| {
            let mut out = WedgeVector::new();
            for (mono, c) in phi.iter() {
                let head: Word = mono.iter().zip(w).map(|(&e, &eps)| join_index(e, eps as usize, n)).collect();
                out.add_scaled(&st.semi_infinite(m, &head)?, c);
            }
            Ok(out)
        })?;
        self.memo.insert(w.to_vec(), out.clone());
        Ok(out)
    }

    pub fn apply(&mut self, t: &WedgeVector) -> Result<WedgeVector> {
        let mut out = WedgeVector::new();
        for (w, c) in t.iter() {
            out.add_scaled(&self.word(w)?, c);
        }
        Ok(out)
    }
}

/// Builds `psi_k` on `(+)_lambda Phi_min^lambda (x) ((x)^N V / V^lambda)`
/// and checks that it is well defined, surjective, injective by dimension
/// count and a `U_0` (`p = 1`) intertwiner.
pub fn psi_k_check(n: usize, m: i64, k: usize) -> Result<DecompReport> {
    let quotient = quotient_basis(n, m, k)?;
    let u0 = Action::U0Fock { n, m, p: PMode::One, extra: 0 };
    let mut failures: Vec<String> = Vec::new();
    let mut entries = Vec::new();
    let mut images: Vec<Vec<RingElem>> = Vec::new();
    for lambda in tilde_m_set_for(n, m, k) {
        let theta = lambda_to_strip(&lambda, n)?;
        let v_lambda = if lambda.is_empty() { BlockSubspace::zero(n, 0) } else { v_lambda_subspace(&lambda, n)? };
        let mut psi = PsiMap::new(n, m, &lambda)?;
        for v in v_lambda.vectors() {
            if quotient.project(&psi.apply(&v)?)?.iter().any(|x| !x.is_zero()) {
                failures.push(format!("V^lambda vector not killed for lambda={lambda:?}"));
                break;
            }
        }
        let reps = v_lambda.quotient_representatives();
        let eval = Action::Eval { n, a: min_labels(&lambda)? };
        for w in &reps {
            let v = WedgeVector::basis(w.clone());
            let image = psi.apply(&v)?;
            images.push(quotient.project(&image)?);
            if lambda.is_empty() {
                continue;
            }
            for g in eval.generators() {
                let lhs = quotient.project(&psi.apply(&act(&eval, g, &v)?)?)?;
                let rhs = quotient.project(&act(&u0, g, &image)?)?;
                if lhs != rhs {
                    failures.push(format!("{g} does not intertwine at lambda={lambda:?}, {w:?}"));
                }
            }
        }
        let strip = rotated(&theta).canonical(n);
        let grade = strip.grade(n);
        if grade != k as i64 {
            failures.push(format!("strip {strip} has grade {grade}, expected {k}"));
        }
        let mut character = full_character(n, lambda.len());
        for (c, s) in &v_lambda.character().terms {
            character.add_term(c.clone(), -s.clone());
        }
        entries.push(DecompEntry { strip, grade, dim: reps.len(), character, lambda });
    }
    let rank = Matrix::from_columns(&images, quotient.dim()).rank();
    let total: usize = entries.iter().map(|e| e.dim).sum();
    if rank != quotient.dim() {
        failures.push(format!("rank {rank} but quotient dimension {}", quotient.dim()));
    }
    if total != quotient.dim() {
        failures.push(format!("domain dimension {total} but quotient dimension {}", quotient.dim()));
    }
    let mut got: Vec<BorderStrip> = entries.iter().map(|e| e.strip.clone()).collect();
    got.sort();
    let mut want: Vec<BorderStrip> =
        border_strips(n, residue(m, n), k as i64).into_iter().filter(|s| s.grade(n) == k as i64).collect();
    want.sort();
    if got != want {
        failures.push(format!("strips {got:?} but level-one data gives {want:?}"));
    }
    let status = if failures.is_empty() { Status::Match } else { Status::Mismatch(failures.join("; ")) };
    Ok(DecompReport { n, m, k, entries, quotient_dim: quotient.dim(), status })
}

/// The strip turned by 180 degrees: same skew Schur function, and the one
/// whose grade is the degree of the wedges it labels.
pub fn rotated(theta: &BorderStrip) -> BorderStrip {
    BorderStrip { cols: theta.cols.iter().rev().cloned().collect() }
}

fn full_character(n: usize, sites: usize) -> CharPoly {
    let mut ch = CharPoly::new();
    for c in crate::rmodule::contents(n, sites) {
        let count = crate::rmodule::content_words(&c).len() as i64;
        ch.add_term(c.iter().map(|&x| x as i64).collect(), RingElem::from(count));
    }
    ch
}

/// `sl_n` weight of a Fock basis vector: colour counts of a head of length
/// `s + n L` covering the partition, shifted so the last entry is zero.
pub fn fock_weight(m: i64, n: usize, lambda: &[i64]) -> Result<Vec<i64>> {
    let s = residue(m, n);
    let mut len = s;
    while len < lambda.len() {
        len += n;
    }
    let head = partition_to_word(m, lambda, len)?;
    let mut c = vec![0i64; n];
    for &x in &head {
        c[split_index(x, n).1 - 1] += 1;
    }
    let last = c[n - 1];
    Ok(c.into_iter().map(|x| x - last).collect())
}

/// `sum_k q^k ch(F_M^k / H'_- F_M cap F_M^k)` for `k <= cutoff`.
pub fn quotient_character(n: usize, m: i64, cutoff: usize) -> Result<CharPoly> {
    let mut ch = CharPoly::new();
    for k in 0..=cutoff {
        let quotient = quotient_basis(n, m, k)?;
        for lam in &quotient.representatives {
            ch.add_term(fock_weight(m, n, lam)?, RingElem::q_pow(k as i64));
        }
    }
    Ok(ch)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharacterReport {
    pub n: usize,
    pub k_hw: usize,
    pub cutoff: usize,
    pub fock: CharPoly,
    pub strips: CharPoly,
    pub status: Status,
}

/// Compares the graded character of the Fock quotient (`M = k_hw`) with the
/// border-strip sum, grade by grade.
pub fn character_identity_check(n: usize, k_hw: usize, cutoff: usize) -> Result<CharacterReport> {
    if k_hw >= n {
        return Err(Error::InvalidArgument(format!("need 0 <= k_hw < n, got {k_hw}")));
    }
    let fock = quotient_character(n, k_hw as i64, cutoff)?;
    let strips = char_level1(n, k_hw, cutoff as i64);
    let mut status = Status::Match;
    for g in 0..=cutoff as i64 {
        let lhs = grade_part(&fock, g);
        let rhs = grade_part(&strips, g);
        if lhs != rhs {
            status = Status::Mismatch(format!("grade {g}: {lhs} vs {rhs}"));
            break;
        }
    }
    Ok(CharacterReport { n, k_hw, cutoff, fock, strips, status })
}

/// The coefficient of `q^g` in a character with Laurent polynomial
/// coefficients in `q`.
pub fn grade_part(ch: &CharPoly, g: i64) -> CharPoly {
    let mut out = CharPoly::new();
    for ((grade, w), c) in ch.graded() {
        if grade == g {
            out.add_term(w, RingElem::from(c));
        }
    }
    out
}

/// Factors `W_{n_i}(b_i)` of the `sl_2` strip module: `I = {i | m_i = 1,
/// m_{i-1} = 2}` with `m_0 = 2`, `n_i` the run of ones starting at `l_i`.
/// The run is a row whose smallest label is `a = 2 sum_{j < l_i} m_j`, and a
/// row of length `l` with labels `a, a+2, ..` is `W_l(a + l - 1)`, so
/// `b_i = 2 sum_{j < l_i} m_j + n_i - 1` (this is `2 l_i + n_i - 3` when the
/// columns before `l_i` are single boxes).
pub fn sl2_factorize(theta: &BorderStrip) -> Result<Vec<(usize, i64)>> {
    let m = &theta.cols;
    if m.iter().any(|&x| x != 1 && x != 2) {
        return Err(Error::NotSl2Strip(m.clone()));
    }
    let mut out = Vec::new();
    for i in 1..=m.len() {
        let prev = if i == 1 { 2 } else { m[i - 2] };
        if m[i - 1] == 1 && prev == 2 {
            let run = m[i - 1..].iter().take_while(|&&x| x == 1).count();
            let before: usize = m[..i - 1].iter().sum();
            out.push((run, 2 * before as i64 + run as i64 - 1));
        }
    }
    Ok(out)
}

fn q_int(k: i64) -> RingElem {
    RingElem::q_int(k)
}

/// Matrices of `E_i, F_i, K_i^{+-1}` (`i = 0, 1`) on `W_n(b)`: `K w_j =
/// q^{n-2j} w_j`, `F w_j = [j+1] w_{j+1}`, `E w_j = [n-j+1] w_{j-1}`,
/// `E_0 = q^b F_1`, `F_0 = q^{-b} E_1`, `K_0 = K_1^-1`.
pub fn evaluation_module(n: usize, b: i64) -> BTreeMap<Generator, Matrix<RingElem>> {
    let d = n + 1;
    let mut e = Matrix::zeros(d, d);
    let mut f = Matrix::zeros(d, d);
    let mut k = Matrix::zeros(d, d);
    let mut kinv = Matrix::zeros(d, d);
    for j in 0..d {
        k.set(j, j, RingElem::q_pow(n as i64 - 2 * j as i64));
        kinv.set(j, j, RingElem::q_pow(2 * j as i64 - n as i64));
        if j + 1 < d {
            f.set(j + 1, j, q_int(j as i64 + 1));
        }
        if j > 0 {
            e.set(j - 1, j, q_int((n - j) as i64 + 1));
        }
    }
    let mut out = BTreeMap::new();
    out.insert(Generator::e(0), f.scale(&RingElem::q_pow(b)));
    out.insert(Generator::f(0), e.scale(&RingElem::q_pow(-b)));
    out.insert(Generator::k(0), kinv.clone());
    out.insert(Generator::kinv(0), k.clone());
    out.insert(Generator::e(1), e);
    out.insert(Generator::f(1), f);
    out.insert(Generator::k(1), k);
    out.insert(Generator::kinv(1), kinv);
    out
}

fn kron(a: &Matrix<RingElem>, b: &Matrix<RingElem>) -> Matrix<RingElem> {
    let (ar, ac, br, bc) = (a.nrows(), a.ncols(), b.nrows(), b.ncols());
    let mut out = Matrix::zeros(ar * br, ac * bc);
    for i in 0..ar {
        for j in 0..ac {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            for k in 0..br {
                for l in 0..bc {
                    let y = b.get(k, l);
                    if !y.is_zero() {
                        out.set(i * br + k, j * bc + l, x * y);
                    }
                }
            }
        }
    }
    out
}

/// Generators on `W_{n_1}(b_1) (x) .. (x) W_{n_r}(b_r)` through the coproduct
/// `E -> E (x) K + 1 (x) E`, `F -> F (x) 1 + K^-1 (x) F`, `K -> K (x) K`.
pub fn tensor_evaluation_module(factors: &[(usize, i64)]) -> BTreeMap<Generator, Matrix<RingElem>> {
    let one = Matrix::identity(1);
    let mut acc: BTreeMap<Generator, Matrix<RingElem>> = sl2_generators()
        .into_iter()
        .map(|g| (g, if matches!(g.kind, GenKind::K | GenKind::Kinv) { one.clone() } else { Matrix::zeros(1, 1) }))
        .collect();
    let mut dim = 1;
    for &(n, b) in factors {
        let w = evaluation_module(n, b);
        let d = n + 1;
        let (ia, ib) = (Matrix::identity(dim), Matrix::identity(d));
        let mut next = BTreeMap::new();
        for i in 0..2 {
            let (e, f, k, kinv) = (Generator::e(i), Generator::f(i), Generator::k(i), Generator::kinv(i));
            next.insert(e, kron(&acc[&e], &w[&k]).add(&kron(&ia, &w[&e])));
            next.insert(f, kron(&acc[&f], &ib).add(&kron(&acc[&kinv], &w[&f])));
            next.insert(k, kron(&acc[&k], &w[&k]));
            next.insert(kinv, kron(&acc[&kinv], &w[&kinv]));
        }
        acc = next;
        dim *= d;
    }
    acc
}

pub fn sl2_generators() -> Vec<Generator> {
    Action::Eval { n: 2, a: Vec::new() }.generators()
}

/// `Im R_theta` with its evaluation action `pi_{a_1..a_N}` (normalized labels):
/// the spanning tensors and the matrices of the generators in that basis.
pub struct ImageModule {
    pub n: usize,
    pub vectors: Vec<WedgeVector>,
    pub generators: BTreeMap<Generator, Matrix<RingElem>>,
}

pub fn image_module(theta: &BorderStrip, n: usize) -> Result<ImageModule> {
    let a = theta.normalized_labels();
    let im = image_basis(&strip_product(theta, 0, Variant::R, n)?)?;
    let vectors = im.vectors();
    let words: Vec<Word> = crate::rmodule::all_words(n, theta.size());
    let index: BTreeMap<Word, usize> = words.iter().cloned().zip(0..).collect();
    let dense = |v: &WedgeVector| v.to_dense(&index, words.len()).expect("colour words");
    let basis = Matrix::from_columns(&vectors.iter().map(dense).collect::<Vec<_>>(), words.len());
    let ctx = Action::Eval { n, a };
    let mut generators = BTreeMap::new();
    for g in ctx.generators() {
        let mut cols = Vec::with_capacity(vectors.len());
        for v in &vectors {
            let img = dense(&act(&ctx, g, v)?);
            cols.push(basis.solve(&img).ok_or_else(|| Error::Invariant(format!("Im R_theta not stable under {g}")))?);
        }
        generators.insert(g, Matrix::from_columns(&cols, vectors.len()));
    }
    Ok(ImageModule { n, vectors, generators })
}

/// `K_1`-exponent multiset of `Im R_theta` and of the evaluation-module
/// product agree, and so do the dimensions.
pub fn sl2_character_matches(theta: &BorderStrip) -> Result<bool> {
    let factors = sl2_factorize(theta)?;
    let dim: usize = factors.iter().map(|(n, _)| n + 1).product();
    let sst = enumerate_sst(&theta.to_skew(), 2);
    if dim != sst.len() {
        return Ok(false);
    }
    let im = image_basis(&strip_product(theta, 0, Variant::R, 2)?)?;
    let mut lhs: BTreeMap<i64, usize> = BTreeMap::new();
    for (c, s) in &im.blocks {
        if s.dim() > 0 {
            *lhs.entry(c[0] as i64 - c[1] as i64).or_default() += s.dim();
        }
    }
    let mut rhs: BTreeMap<i64, usize> = BTreeMap::new();
    let k = &tensor_evaluation_module(&factors)[&Generator::k(1)];
    for j in 0..dim {
        let e = k.get(j, j).as_signed_q_power().ok_or_else(|| Error::Invariant("K not diagonal".into()))?.1;
        *rhs.entry(e).or_default() += 1;
    }
    Ok(lhs == rhs)
}

/// An invertible `X` with `X rho_W(g) = rho_Im(g) X` for all generators,
/// from `W_{n_1}(b_1) (x) ..` to `Im R_theta`, if one exists.
pub fn sl2_intertwiner(theta: &BorderStrip) -> Result<Option<Matrix<RingElem>>> {
    sl2_intertwiner_from(theta, &sl2_factorize(theta)?)
}

/// [`sl2_intertwiner`] from an arbitrary product of evaluation modules.
pub fn sl2_intertwiner_from(theta: &BorderStrip, factors: &[(usize, i64)]) -> Result<Option<Matrix<RingElem>>> {
    let w = tensor_evaluation_module(factors);
    let im = image_module(theta, 2)?;
    let d = im.vectors.len();
    if w[&Generator::k(1)].nrows() != d {
        return Ok(None);
    }
    // unknown X[r][c] at r * d + c
    let mut rows = Vec::new();
    for g in sl2_generators() {
        let (wg, ig) = (&w[&g], &im.generators[&g]);
        for r in 0..d {
            for c in 0..d {
                let mut row = vec![RingElem::zero(); d * d];
                for t in 0..d {
                    row[r * d + t] = &row[r * d + t] + wg.get(t, c);
                    row[t * d + c] = &row[t * d + c] - ig.get(r, t);
                }
                rows.push(row);
            }
        }
    }
    let sol = Matrix::from_rows(rows, d * d).kernel();
    let to_matrix = |v: &[RingElem]| Matrix::from_rows((0..d).map(|r| v[r * d..(r + 1) * d].to_vec()).collect(), d);
    let mut candidates: Vec<Vec<RingElem>> = sol.clone();
    if sol.len() > 1 {
        let mut sum = vec![RingElem::zero(); d * d];
        for (i, v) in sol.iter().enumerate() {
            let c = RingElem::from(i as i64 + 1);
            for (s, x) in sum.iter_mut().zip(v) {
                *s = &*s + &(&c * x);
            }
        }
        candidates.push(sum);
    }
    for v in candidates {
        let x = to_matrix(&v);
        if x.rank() == d {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

/// Strips `<m_1..m_r>` with every `m_i` in `{1, 2}` and `|theta| = size`.
pub fn sl2_strips(size: usize) -> Vec<BorderStrip> {
    run_compositions(size, 2).into_iter().map(|c| BorderStrip { cols: c }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorizations() {
        assert_eq!(sl2_factorize(&BorderStrip::new(vec![2]).unwrap()).unwrap(), vec![]);
        assert_eq!(sl2_factorize(&BorderStrip::new(vec![1, 1]).unwrap()).unwrap(), vec![(2, 1)]);
        assert_eq!(sl2_factorize(&BorderStrip::new(vec![1, 2, 1]).unwrap()).unwrap(), vec![(1, 0), (1, 6)]);
        assert_eq!(sl2_factorize(&BorderStrip::new(vec![2, 1]).unwrap()).unwrap(), vec![(1, 4)]);
        assert!(matches!(sl2_factorize(&BorderStrip::new(vec![3]).unwrap()), Err(Error::NotSl2Strip(_))));
    }

    #[test]
    fn small_sets() {
        assert_eq!(tilde_m_set(2, 0, 1), vec![vec![1, 0]]);
        assert_eq!(tilde_m_set(2, 0, 2), vec![vec![2, 1, 1, 0]]);
        assert_eq!(tilde_m_set(3, 0, 1), vec![vec![1, 1, 0]]);
    }
}
