//! Sparse vectors, dense matrices and subspaces over an exact [`Field`].
//!
//! Subspaces are stored in reduced row echelon form, which is canonical:
//! two subspaces are equal exactly when their stored bases are equal.

use std::collections::BTreeMap;
use std::fmt;

use crate::field::Field;

/// Finite linear combination of basis keys.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparseVec<K: Ord, F> {
    terms: BTreeMap<K, F>,
}

impl<K: Ord, F> Default for SparseVec<K, F> {
    fn default() -> Self {
        SparseVec { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone, F: Field> SparseVec<K, F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn basis(k: K) -> Self {
        Self::term(k, F::one())
    }

    pub fn term(k: K, c: F) -> Self {
        let mut v = Self::new();
        v.add_term(k, c);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, k: &K) -> Option<&F> {
        self.terms.get(k)
    }

    pub fn coeff(&self, k: &K) -> F {
        self.terms.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &F)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn into_terms(self) -> BTreeMap<K, F> {
        self.terms
    }

    pub fn add_term(&mut self, k: K, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(e) => {
                let s = e.add_ref(&c);
                if s.is_zero() {
                    self.terms.remove(&k);
                } else {
                    *e = s;
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, other: &Self, c: &F) {
        if c.is_zero() {
            return;
        }
        let one = c.is_one();
        for (k, v) in other.terms.iter() {
            let t = if one { v.clone() } else { v.mul_ref(c) };
            match self.terms.get_mut(k) {
                Some(e) => {
                    let s = e.add_ref(&t);
                    if s.is_zero() {
                        self.terms.remove(k);
                    } else {
                        *e = s;
                    }
                }
                None => {
                    self.terms.insert(k.clone(), t);
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r.add_scaled(other, &F::one());
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r.add_scaled(other, &-F::one());
        r
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        SparseVec { terms: self.terms.iter().map(|(k, v)| (k.clone(), v.mul_ref(c))).collect() }
    }

    pub fn map_coeffs<G: Field>(&self, mut f: impl FnMut(&F) -> G) -> SparseVec<K, G> {
        let mut r = SparseVec::new();
        for (k, v) in self.terms.iter() {
            r.add_term(k.clone(), f(v));
        }
        r
    }

    pub fn try_map_coeffs<G: Field, E>(&self, mut f: impl FnMut(&F) -> Result<G, E>) -> Result<SparseVec<K, G>, E> {
        let mut r = SparseVec::new();
        for (k, v) in self.terms.iter() {
            r.add_term(k.clone(), f(v)?);
        }
        Ok(r)
    }

    /// Applies a linear map given on basis keys.
    pub fn apply<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> SparseVec<K2, F>) -> SparseVec<K2, F> {
        let mut r = SparseVec::new();
        for (k, v) in self.terms.iter() {
            r.add_scaled(&f(k), v);
        }
        r
    }

    pub fn try_apply<K2: Ord + Clone, E>(
        &self,
        mut f: impl FnMut(&K) -> Result<SparseVec<K2, F>, E>,
    ) -> Result<SparseVec<K2, F>, E> {
        let mut r = SparseVec::new();
        for (k, v) in self.terms.iter() {
            r.add_scaled(&f(k)?, v);
        }
        Ok(r)
    }

    /// Dense coordinates with respect to an ordered basis; `None` if a key is
    /// outside the basis.
    pub fn to_dense(&self, index: &BTreeMap<K, usize>, dim: usize) -> Option<Vec<F>> {
        let mut out = vec![F::zero(); dim];
        for (k, v) in self.terms.iter() {
            out[*index.get(k)?] = v.clone();
        }
        Some(out)
    }
}

impl<K: Ord + Clone, F: Field> FromIterator<(K, F)> for SparseVec<K, F> {
    fn from_iter<I: IntoIterator<Item = (K, F)>>(iter: I) -> Self {
        let mut v = Self::new();
        for (k, c) in iter {
            v.add_term(k, c);
        }
        v
    }
}

impl<K: Ord + fmt::Debug, F: fmt::Display> fmt::Debug for SparseVec<K, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(k, v)| format!("({v})*{k:?}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<Vec<F>>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![vec![F::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = F::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>, cols: usize) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == cols));
        Matrix { rows: rows.len(), cols, data: rows }
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(columns: &[Vec<F>], rows: usize) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            for (i, v) in c.iter().enumerate() {
                m.data[i][j] = v.clone();
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i][j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i]
    }

    pub fn rows(&self) -> &[Vec<F>] {
        &self.data
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        self.data.iter().map(|r| r[j].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j][i] = self.data[i][j].clone();
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.iter().all(|x| x.is_zero()))
    }

    pub fn mul(&self, o: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, o.rows, "matrix product shape");
        let mut r = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for (k, a) in self.data[i].iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o.data[k][j];
                    if !b.is_zero() {
                        r.data[i][j] = r.data[i][j].add_ref(&a.mul_ref(b));
                    }
                }
            }
        }
        r
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        self.data
            .iter()
            .map(|row| {
                row.iter().zip(v).fold(F::zero(), |acc, (a, b)| {
                    if a.is_zero() || b.is_zero() {
                        acc
                    } else {
                        acc.add_ref(&a.mul_ref(b))
                    }
                })
            })
            .collect()
    }

    pub fn add(&self, o: &Matrix<F>) -> Matrix<F> {
        let mut r = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                r.data[i][j] = r.data[i][j].add_ref(&o.data[i][j]);
            }
        }
        r
    }

    pub fn sub(&self, o: &Matrix<F>) -> Matrix<F> {
        let mut r = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                r.data[i][j] = r.data[i][j].sub_ref(&o.data[i][j]);
            }
        }
        r
    }

    pub fn scale(&self, c: &F) -> Matrix<F> {
        let mut r = self.clone();
        for row in r.data.iter_mut() {
            for x in row.iter_mut() {
                if !x.is_zero() {
                    *x = x.mul_ref(c);
                }
            }
        }
        r
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix<F>, Vec<usize>) {
        let mut a = self.data.clone();
        let pivots = rref_in_place(&mut a, self.cols);
        a.truncate(pivots.len());
        (Matrix { rows: a.len(), cols: self.cols, data: a }, pivots)
    }

    pub fn rank(&self) -> usize {
        let mut a = self.data.clone();
        echelon_in_place(&mut a, self.cols)
    }

    /// Basis of `{x : A x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![F::zero(); self.cols];
                x[f] = F::one();
                for (i, &pc) in pivots.iter().enumerate() {
                    let v = &r.data[i][f];
                    if !v.is_zero() {
                        x[pc] = -v.clone();
                    }
                }
                x
            })
            .collect()
    }

    /// Column space as a subspace of `F^rows`.
    pub fn image(&self) -> Subspace<F> {
        Subspace::span(self.rows, (0..self.cols).map(|j| self.column(j)))
    }

    pub fn kernel_space(&self) -> Subspace<F> {
        Subspace::span(self.cols, self.kernel())
    }

    /// Some solution of `A x = b`, if one exists.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        let mut aug: Vec<Vec<F>> = self
            .data
            .iter()
            .zip(b)
            .map(|(r, bi)| {
                let mut r = r.clone();
                r.push(bi.clone());
                r
            })
            .collect();
        let pivots = rref_in_place(&mut aug, self.cols + 1);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = aug[i][self.cols].clone();
        }
        Some(x)
    }
}

fn choose_pivot<F: Field>(a: &[Vec<F>], from: usize, col: usize) -> Option<usize> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(from) {
        let v = &row[col];
        if v.is_zero() {
            continue;
        }
        let s = v.size();
        if best.is_none_or(|(_, bs)| s < bs) {
            best = Some((i, s));
        }
    }
    best.map(|(i, _)| i)
}

/// Row echelon form (not reduced); returns the rank.
fn echelon_in_place<F: Field>(a: &mut [Vec<F>], cols: usize) -> usize {
    let mut r = 0;
    for c in 0..cols {
        if r == a.len() {
            break;
        }
        let Some(p) = choose_pivot(a, r, c) else { continue };
        a.swap(r, p);
        let inv = a[r][c].inverse().expect("nonzero pivot");
        let (top, rest) = a.split_at_mut(r + 1);
        let prow = &top[r];
        for row in rest.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].mul_ref(&inv);
            for j in c..cols {
                if !prow[j].is_zero() {
                    row[j] = row[j].sub_ref(&f.mul_ref(&prow[j]));
                }
            }
        }
        r += 1;
    }
    r
}

fn rref_in_place<F: Field>(a: &mut Vec<Vec<F>>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == a.len() {
            break;
        }
        let Some(p) = choose_pivot(a, r, c) else { continue };
        a.swap(r, p);
        let inv = a[r][c].inverse().expect("nonzero pivot");
        if !inv.is_one() {
            for j in c..cols {
                if !a[r][j].is_zero() {
                    a[r][j] = a[r][j].mul_ref(&inv);
                }
            }
        }
        let prow = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for j in c..cols {
                if !prow[j].is_zero() {
                    row[j] = row[j].sub_ref(&f.mul_ref(&prow[j]));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    pivots
}

/// Subspace of `F^ambient`, stored as its reduced row echelon basis.
#[derive(Clone, PartialEq, Debug)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, Matrix::<F>::identity(ambient).data)
    }

    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = Vec<F>>) -> Self {
        let mut rows: Vec<Vec<F>> = vectors.into_iter().filter(|v| v.iter().any(|x| !x.is_zero())).collect();
        debug_assert!(rows.iter().all(|r| r.len() == ambient));
        let pivots = rref_in_place(&mut rows, ambient);
        Subspace { ambient, basis: rows, pivots }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` reduced modulo the subspace; zero iff `v` lies in it.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut v = v.to_vec();
        for (row, &pc) in self.basis.iter().zip(&self.pivots) {
            if v[pc].is_zero() {
                continue;
            }
            let f = v[pc].clone();
            for (j, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    v[j] = v[j].sub_ref(&f.mul_ref(x));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    pub fn contains_space(&self, o: &Subspace<F>) -> bool {
        o.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, o: &Subspace<F>) -> Subspace<F> {
        Subspace::span(self.ambient, self.basis.iter().chain(o.basis.iter()).cloned())
    }

    /// Coordinates that index the quotient `F^ambient / self`: the non-pivot
    /// positions.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Coordinates of `v` in the quotient, w.r.t. the standard basis vectors at
    /// [`complement_indices`](Self::complement_indices).
    pub fn quotient_coords(&self, v: &[F]) -> Vec<F> {
        let r = self.reduce(v);
        self.complement_indices().into_iter().map(|i| r[i].clone()).collect()
    }
}
