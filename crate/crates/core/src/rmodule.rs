//! Trigonometric R-matrices on `(x)^N V`, the ordered products attached to
//! border strips, their images and kernels, and the subspaces `V^lambda`.
//!
//! Every operator here preserves the colour content of a tensor, so
//! subspaces are stored block by block over weight spaces.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactring::RingElem;
use crate::linalg::{Matrix, Subspace};
use crate::tableaux::{BorderStrip, CharPoly};
use crate::wedge::{Word, WedgeVector};

/// Vector of `(x)^N V`, keyed by colour words `(eps_1, .., eps_N)`.
pub type TensorVec = WedgeVector;

/// `S-check` on `v_a (x) v_b`.
pub fn s_check(a: i64, b: i64) -> Vec<((i64, i64), RingElem)> {
    let q = RingElem::q();
    if a == b {
        vec![((a, b), RingElem::q_pow(2))]
    } else if a < b {
        vec![((b, a), q)]
    } else {
        vec![((b, a), q), ((a, b), &RingElem::q_pow(2) - &RingElem::one())]
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum FactorKind {
    /// `R_{i,j}(x) = Rcheck_{i,j}(x) P_{i,j}`.
    R,
    /// `Rcheck_{i,j}(x) = (x S^-1 - S)/(x - 1)`, `S = -q S-check^-1`.
    Rcheck,
    /// `P_{i,j}`.
    Flip,
}

/// A two-site operator on the slots `i`, `j` (1-based; `i` is the first
/// tensor slot of the two-site matrix, so `i > j` is allowed).
#[derive(Clone, Debug, PartialEq)]
pub struct Factor {
    pub kind: FactorKind,
    pub i: usize,
    pub j: usize,
    pub x: RingElem,
}

/// `Rcheck(x) = -q^-1 S-check - (q - q^-1)/(x - 1)` on `v_a (x) v_b`, i.e.
/// `(x S^-1 - S)/(x - 1)` with `S = -q S-check^-1`.
fn rcheck_two_site(x: &RingElem, a: i64, b: i64) -> Result<Vec<((i64, i64), RingElem)>> {
    let xm1 = x - &RingElem::one();
    if xm1.is_zero() {
        return Err(Error::SingularSpectralPoint);
    }
    let qi = RingElem::q_pow(-1);
    let shift = (&RingElem::q() - &qi).checked_div(&xm1)?;
    let mut out: Vec<((i64, i64), RingElem)> = s_check(a, b).into_iter().map(|(k, c)| (k, -(&c * &qi))).collect();
    out.push(((a, b), -shift));
    Ok(out)
}

impl Factor {
    fn two_site(&self, a: i64, b: i64) -> Result<Vec<((i64, i64), RingElem)>> {
        match &self.kind {
            FactorKind::Flip => Ok(vec![((b, a), RingElem::one())]),
            FactorKind::Rcheck => rcheck_two_site(&self.x, a, b),
            // R = Rcheck P: flip first
            FactorKind::R => rcheck_two_site(&self.x, b, a),
        }
    }

    pub fn apply(&self, v: &TensorVec) -> Result<TensorVec> {
        let (i, j) = (self.i - 1, self.j - 1);
        let mut out = TensorVec::new();
        for (w, c) in v.iter() {
            for ((a, b), d) in self.two_site(w[i], w[j])? {
                let mut w2 = w.clone();
                w2[i] = a;
                w2[j] = b;
                out.add_term(w2, c * &d);
            }
        }
        Ok(out)
    }
}

/// Ordered product of two-site operators on `(x)^N V`, written left to
/// right (the last factor acts first).
#[derive(Clone, Debug, PartialEq)]
pub struct OpProduct {
    pub n: usize,
    pub sites: usize,
    pub factors: Vec<Factor>,
}

impl OpProduct {
    pub fn identity(n: usize, sites: usize) -> Self {
        OpProduct { n, sites, factors: Vec::new() }
    }

    pub fn single(n: usize, sites: usize, f: Factor) -> Result<Self> {
        if f.i == f.j || f.i == 0 || f.j == 0 || f.i > sites || f.j > sites {
            return Err(Error::InvalidArgument(format!("bad slots ({}, {}) for N={sites}", f.i, f.j)));
        }
        Ok(OpProduct { n, sites, factors: vec![f] })
    }

    /// `self * o`: `o` acts first.
    pub fn then_after(&self, o: &OpProduct) -> OpProduct {
        let mut factors = self.factors.clone();
        factors.extend(o.factors.iter().cloned());
        OpProduct { n: self.n, sites: self.sites, factors }
    }

    pub fn apply(&self, v: &TensorVec) -> Result<TensorVec> {
        let mut cur = v.clone();
        for f in self.factors.iter().rev() {
            cur = f.apply(&cur)?;
        }
        Ok(cur)
    }

    /// Matrix of the operator on the weight space with colour content
    /// `content`, in the basis [`content_words`].
    pub fn block_matrix(&self, content: &[usize]) -> Result<Matrix<RingElem>> {
        let words = content_words(content);
        let index: BTreeMap<Word, usize> = words.iter().cloned().zip(0..).collect();
        let mut cols = Vec::with_capacity(words.len());
        for w in &words {
            let img = self.apply(&TensorVec::basis(w.clone()))?;
            cols.push(img.to_dense(&index, words.len()).ok_or_else(|| Error::Invariant("operator changes weight".into()))?);
        }
        Ok(Matrix::from_columns(&cols, words.len()))
    }

    /// Matrix on all of `(x)^N V` in the basis [`all_words`].
    pub fn full_matrix(&self) -> Result<Matrix<RingElem>> {
        let words = all_words(self.n, self.sites);
        let index: BTreeMap<Word, usize> = words.iter().cloned().zip(0..).collect();
        let mut cols = Vec::with_capacity(words.len());
        for w in &words {
            let img = self.apply(&TensorVec::basis(w.clone()))?;
            cols.push(img.to_dense(&index, words.len()).expect("colour words"));
        }
        Ok(Matrix::from_columns(&cols, words.len()))
    }
}

/// `R_{i,j}(x)` on `(x)^N V`.
pub fn r_op(i: usize, j: usize, x: RingElem, n: usize, sites: usize) -> Result<OpProduct> {
    if (&x - &RingElem::one()).is_zero() {
        return Err(Error::SingularSpectralPoint);
    }
    OpProduct::single(n, sites, Factor { kind: FactorKind::R, i, j, x })
}

/// `Rcheck_{i,j}(x)` on `(x)^N V`.
pub fn rcheck_op(i: usize, j: usize, x: RingElem, n: usize, sites: usize) -> Result<OpProduct> {
    if (&x - &RingElem::one()).is_zero() {
        return Err(Error::SingularSpectralPoint);
    }
    OpProduct::single(n, sites, Factor { kind: FactorKind::Rcheck, i, j, x })
}

/// Colour contents `(c_1, .., c_n)` with `sum = N`.
pub fn contents(n: usize, sites: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n - 1 {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for c in (0..=left).rev() {
            cur.push(c);
            rec(n, left - c, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, sites, &mut Vec::new(), &mut out);
    out
}

/// Colour words with the given content, sorted.
pub fn content_words(content: &[usize]) -> Vec<Word> {
    fn rec(left: &mut Vec<usize>, cur: &mut Word, total: usize, out: &mut Vec<Word>) {
        if cur.len() == total {
            out.push(cur.clone());
            return;
        }
        for c in 0..left.len() {
            if left[c] > 0 {
                left[c] -= 1;
                cur.push(c as i64 + 1);
                rec(left, cur, total, out);
                cur.pop();
                left[c] += 1;
            }
        }
    }
    let mut out = Vec::new();
    let total = content.iter().sum();
    rec(&mut content.to_vec(), &mut Vec::new(), total, &mut out);
    out
}

pub fn all_words(n: usize, sites: usize) -> Vec<Word> {
    let mut out: Vec<Word> = vec![vec![]];
    for _ in 0..sites {
        out = out.into_iter().flat_map(|w| (1..=n as i64).map(move |c| [w.clone(), vec![c]].concat())).collect();
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    R,
    Rbar,
    Rcheck,
}

/// `R_theta`, `Rbar_theta` or `Rcheck_theta` with content labels of base
/// `a_base`. Factor `(i, j)` stands right of `(i', j')` when `i < i'`, or
/// `i = i'` and `j < j'`.
pub fn strip_product(theta: &BorderStrip, a_base: i64, variant: Variant, n: usize) -> Result<OpProduct> {
    let a = theta.content_labels(a_base);
    product_for_labels(&a, variant, n)
}

/// The product of [`strip_product`] for arbitrary labels `a_1..a_N`.
pub fn product_for_labels(a: &[i64], variant: Variant, n: usize) -> Result<OpProduct> {
    let sites = a.len();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 1..=sites {
        for j in i + 1..=sites {
            pairs.push((i, j));
        }
    }
    pairs.sort_by(|x, y| y.cmp(x));
    let mut factors = Vec::with_capacity(pairs.len());
    for (i, j) in pairs {
        let d = a[i - 1] - a[j - 1];
        if d == 0 {
            return Err(Error::SingularSpectralPoint);
        }
        let x = RingElem::q_pow(d);
        factors.push(match variant {
            Variant::R => Factor { kind: FactorKind::R, i, j, x },
            Variant::Rbar => Factor { kind: FactorKind::R, i: j, j: i, x },
            Variant::Rcheck => {
                let s = sites + i - j;
                Factor { kind: FactorKind::Rcheck, i: s, j: s + 1, x }
            }
        });
    }
    Ok(OpProduct { n, sites, factors })
}

/// A weight-graded subspace of `(x)^N V`: one subspace per colour content,
/// in the basis [`content_words`].
#[derive(Clone, Debug, PartialEq)]
pub struct BlockSubspace {
    pub n: usize,
    pub sites: usize,
    pub blocks: BTreeMap<Vec<usize>, Subspace<RingElem>>,
}

impl BlockSubspace {
    pub fn zero(n: usize, sites: usize) -> Self {
        let blocks = contents(n, sites).into_iter().map(|c| {
            let d = content_words(&c).len();
            (c, Subspace::zero(d))
        });
        BlockSubspace { n, sites, blocks: blocks.collect() }
    }

    pub fn dim(&self) -> usize {
        self.blocks.values().map(|s| s.dim()).sum()
    }

    pub fn sum(&self, o: &BlockSubspace) -> BlockSubspace {
        let blocks = self.blocks.iter().map(|(c, s)| (c.clone(), s.sum(&o.blocks[c]))).collect();
        BlockSubspace { n: self.n, sites: self.sites, blocks }
    }

    pub fn contains_space(&self, o: &BlockSubspace) -> bool {
        self.blocks.iter().all(|(c, s)| s.contains_space(&o.blocks[c]))
    }

    pub fn contains(&self, v: &TensorVec) -> bool {
        let mut parts: BTreeMap<Vec<usize>, TensorVec> = BTreeMap::new();
        for (w, c) in v.iter() {
            parts.entry(word_content(self.n, w)).or_default().add_term(w.clone(), c.clone());
        }
        parts.iter().all(|(c, part)| {
            let words = content_words(c);
            let index: BTreeMap<Word, usize> = words.iter().cloned().zip(0..).collect();
            let dense = part.to_dense(&index, words.len()).expect("content block");
            self.blocks[c].contains(&dense)
        })
    }

    /// Basis vectors as tensors.
    pub fn vectors(&self) -> Vec<TensorVec> {
        let mut out = Vec::new();
        for (c, s) in &self.blocks {
            let words = content_words(c);
            for b in s.basis() {
                out.push(words.iter().cloned().zip(b.iter().cloned()).filter(|(_, x)| !x.is_zero()).collect());
            }
        }
        out
    }

    /// `sum_w dim(block_w) z^w`.
    pub fn character(&self) -> CharPoly {
        let mut ch = CharPoly::new();
        for (c, s) in &self.blocks {
            if s.dim() > 0 {
                ch.add_term(c.iter().map(|&x| x as i64).collect(), RingElem::from(s.dim() as i64));
            }
        }
        ch
    }

    /// Colour words not among the pivots: a basis of the quotient
    /// `(x)^N V / self` as representatives.
    pub fn quotient_representatives(&self) -> Vec<Word> {
        let mut out = Vec::new();
        for (c, s) in &self.blocks {
            let words = content_words(c);
            out.extend(s.complement_indices().into_iter().map(|i| words[i].clone()));
        }
        out
    }
}

pub fn word_content(n: usize, w: &[i64]) -> Vec<usize> {
    let mut c = vec![0; n];
    for &x in w {
        c[(x - 1) as usize] += 1;
    }
    c
}

pub fn image_basis(op: &OpProduct) -> Result<BlockSubspace> {
    let mut out = BlockSubspace::zero(op.n, op.sites);
    for (c, s) in out.blocks.iter_mut() {
        *s = op.block_matrix(c)?.image();
    }
    Ok(out)
}

pub fn kernel_basis(op: &OpProduct) -> Result<BlockSubspace> {
    let mut out = BlockSubspace::zero(op.n, op.sites);
    for (c, s) in out.blocks.iter_mut() {
        *s = op.block_matrix(c)?.kernel_space();
    }
    Ok(out)
}

/// Equal-run lengths of a non-increasing `lambda` with steps 0 or 1, read
/// left to right.
pub fn lambda_runs(lambda: &[i64]) -> Result<Vec<usize>> {
    if lambda.is_empty() {
        return Ok(Vec::new());
    }
    if lambda.windows(2).any(|w| w[0] - w[1] != 0 && w[0] - w[1] != 1) {
        return Err(Error::InvalidLambdaClass(lambda.to_vec()));
    }
    let mut runs = vec![1];
    for w in lambda.windows(2) {
        if w[0] == w[1] {
            *runs.last_mut().expect("nonempty") += 1;
        } else {
            runs.push(1);
        }
    }
    Ok(runs)
}

/// `theta = <r_J, .., r_1>`: the run lengths of `lambda` from the largest
/// value down.
pub fn lambda_to_strip(lambda: &[i64], n: usize) -> Result<BorderStrip> {
    let runs = lambda_runs(lambda)?;
    if runs.iter().any(|&r| r > n) {
        return Err(Error::InvalidLambdaClass(lambda.to_vec()));
    }
    BorderStrip::new(runs)
}

/// A `lambda` with runs `theta` whose smallest entry is `bottom`.
pub fn strip_to_lambda(theta: &BorderStrip, bottom: i64) -> Vec<i64> {
    let r = theta.cols.len() as i64;
    let mut out = Vec::with_capacity(theta.size());
    for (i, &m) in theta.cols.iter().enumerate() {
        out.extend(std::iter::repeat_n(bottom + r - 1 - i as i64, m));
    }
    out
}

/// `V^lambda`: the images of `R_{i,i+1}(q^2)` inside equal runs of
/// `lambda^min` plus, for consecutive runs, the images of the cross-run
/// products `prod R_{l_j+a, l_j+r_j+r_{j+1}-b}(q^{-2(a+b)})`,
/// `1 <= a <= r_j`, `0 <= b < r_{j+1}`.
pub fn v_lambda_subspace(lambda: &[i64], n: usize) -> Result<BlockSubspace> {
    let sites = lambda.len();
    let mut runs = lambda_runs(lambda)?;
    if runs.iter().any(|&r| r > n) {
        return Err(Error::InvalidLambdaClass(lambda.to_vec()));
    }
    runs.reverse(); // runs of lambda^min: r_1, .., r_J
    let mut out = BlockSubspace::zero(n, sites);
    let mut l = 0;
    let q2 = RingElem::q_pow(2);
    for (j, &r) in runs.iter().enumerate() {
        for i in l + 1..l + r {
            out = out.sum(&image_basis(&r_op(i, i + 1, q2.clone(), n, sites)?)?);
        }
        if let Some(&r_next) = runs.get(j + 1) {
            let mut idx: Vec<(usize, usize)> = Vec::new();
            for a in 1..=r {
                for b in 0..r_next {
                    idx.push((a, b));
                }
            }
            idx.sort_by(|x, y| y.cmp(x));
            let mut factors = Vec::new();
            for (a, b) in idx {
                let x = RingElem::q_pow(-2 * (a + b) as i64);
                factors.push(Factor { kind: FactorKind::R, i: l + a, j: l + r + r_next - b, x });
            }
            let op = OpProduct { n, sites, factors };
            out = out.sum(&image_basis(&op)?);
        }
        l += r;
    }
    Ok(out)
}
