//! Skew diagrams, border strips, semi-standard tableaux and characters.
//!
//! Boxes use 1-based coordinates `(x, y)`: `x` counts columns from the left,
//! `y` counts rows from the top.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactring::RingElem;

/// The skew diagram `lambda / mu`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SkewDiagram {
    pub lambda: Vec<usize>,
    pub mu: Vec<usize>,
}

impl SkewDiagram {
    pub fn new(lambda: Vec<usize>, mu: Vec<usize>) -> Result<Self> {
        let ok_partition = |v: &[usize]| v.windows(2).all(|w| w[0] >= w[1]);
        if !ok_partition(&lambda) || !ok_partition(&mu) || mu.len() > lambda.len() {
            return Err(Error::InvalidArgument(format!("not a skew shape: {lambda:?} / {mu:?}")));
        }
        if mu.iter().zip(&lambda).any(|(m, l)| m > l) {
            return Err(Error::InvalidArgument(format!("mu not inside lambda: {lambda:?} / {mu:?}")));
        }
        Ok(SkewDiagram { lambda, mu })
    }

    fn mu_at(&self, row: usize) -> usize {
        self.mu.get(row).copied().unwrap_or(0)
    }

    /// Boxes in reading order (rows top to bottom, left to right).
    pub fn boxes(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (r, &l) in self.lambda.iter().enumerate() {
            for x in self.mu_at(r) + 1..=l {
                out.push((x, r + 1));
            }
        }
        out
    }

    pub fn degree(&self) -> usize {
        self.boxes().len()
    }

    /// True if the diagram is connected and has no 2x2 block.
    pub fn is_border_strip(&self) -> bool {
        let boxes = self.boxes();
        if boxes.is_empty() {
            return true;
        }
        let set: std::collections::BTreeSet<_> = boxes.iter().copied().collect();
        let has_block = boxes.iter().any(|&(x, y)| {
            set.contains(&(x + 1, y)) && set.contains(&(x, y + 1)) && set.contains(&(x + 1, y + 1))
        });
        if has_block {
            return false;
        }
        let mut seen = std::collections::BTreeSet::new();
        let mut stack = vec![boxes[0]];
        while let Some((x, y)) = stack.pop() {
            if !seen.insert((x, y)) {
                continue;
            }
            let mut nbrs = vec![(x + 1, y), (x, y + 1)];
            if x > 1 {
                nbrs.push((x - 1, y));
            }
            if y > 1 {
                nbrs.push((x, y - 1));
            }
            stack.extend(nbrs.into_iter().filter(|b| set.contains(b)));
        }
        seen.len() == set.len()
    }
}

/// Border strip `<m_1, ..., m_r>`; `m_1` is the height of the rightmost column.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BorderStrip {
    pub cols: Vec<usize>,
}

impl BorderStrip {
    pub fn new(cols: Vec<usize>) -> Result<Self> {
        if cols.contains(&0) {
            return Err(Error::InvalidArgument(format!("column heights must be positive: {cols:?}")));
        }
        Ok(BorderStrip { cols })
    }

    pub fn empty() -> Self {
        BorderStrip { cols: Vec::new() }
    }

    pub fn size(&self) -> usize {
        self.cols.iter().sum()
    }

    pub fn num_cols(&self) -> usize {
        self.cols.len()
    }

    /// Boxes `(x, y)` in the numbering order: left to right, then top to bottom.
    pub fn numbered_boxes(&self) -> Vec<(usize, usize)> {
        let r = self.cols.len();
        let mut tops = Vec::with_capacity(r);
        let mut top = 1;
        for &m in &self.cols {
            tops.push(top);
            top += m - 1;
        }
        let mut out = Vec::with_capacity(self.size());
        for i in (0..r).rev() {
            let x = r - i;
            for y in tops[i]..tops[i] + self.cols[i] {
                out.push((x, y));
            }
        }
        out
    }

    pub fn to_skew(&self) -> SkewDiagram {
        let boxes = self.numbered_boxes();
        let rows = boxes.iter().map(|b| b.1).max().unwrap_or(0);
        let mut lambda = vec![0; rows];
        let mut mu = vec![usize::MAX; rows];
        for &(x, y) in &boxes {
            lambda[y - 1] = lambda[y - 1].max(x);
            mu[y - 1] = mu[y - 1].min(x - 1);
        }
        while mu.last() == Some(&0) {
            mu.pop();
        }
        SkewDiagram { lambda, mu }
    }

    /// `t(theta) = sum_{i<r} (r - i) m_i`.
    pub fn t_statistic(&self) -> usize {
        let r = self.cols.len();
        self.cols.iter().enumerate().take(r.saturating_sub(1)).map(|(i, &m)| (r - 1 - i) * m).sum()
    }

    /// Drops trailing columns of height `n` (the identification
    /// `<m..> ~ <m.., n, .., n>`).
    pub fn canonical(&self, n: usize) -> BorderStrip {
        let mut cols = self.cols.clone();
        while cols.last() == Some(&n) {
            cols.pop();
        }
        BorderStrip { cols }
    }

    /// Contents `-2x + 2y + base` of the numbered boxes.
    pub fn content_labels(&self, base: i64) -> Vec<i64> {
        self.numbered_boxes().into_iter().map(|(x, y)| -2 * x as i64 + 2 * y as i64 + base).collect()
    }

    /// Labels normalized so that the top box of the rightmost column gets
    /// `0`, i.e. `a_{l + sum_{i>j} m_i} = 2(l - 1 + sum_{i<j} m_i)`.
    pub fn normalized_labels(&self) -> Vec<i64> {
        let r = self.cols.len() as i64;
        self.content_labels(2 * r - 2)
    }

    /// q-grade of the strip in the level-one character of `V(Lambda_k)`,
    /// shifted so that the lowest grade is zero:
    /// `(|t|(n-|t|) - k(n-k)) / 2n + t(theta)` where `k = |theta| mod n`.
    pub fn grade(&self, n: usize) -> i64 {
        let n = n as i64;
        let s = self.size() as i64;
        let k = s.rem_euclid(n);
        let num = s * (n - s) - k * (n - k);
        debug_assert_eq!(num.rem_euclid(2 * n), 0);
        num / (2 * n) + self.t_statistic() as i64
    }
}

impl fmt::Display for BorderStrip {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.cols.iter().map(|m| m.to_string()).collect();
        write!(f, "<{}>", parts.join(","))
    }
}

impl std::str::FromStr for BorderStrip {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('<').trim_end_matches('>');
        if s.trim().is_empty() {
            return Ok(BorderStrip::empty());
        }
        let cols = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad strip {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        BorderStrip::new(cols)
    }
}

/// A filling of a skew diagram, listed in the diagram's reading order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SsTableau {
    pub entries: BTreeMap<(usize, usize), usize>,
}

impl SsTableau {
    /// `(n_1, ..., n_n)`, the multiplicity of each entry.
    pub fn content(&self, n: usize) -> Vec<i64> {
        let mut c = vec![0; n];
        for &v in self.entries.values() {
            c[v - 1] += 1;
        }
        c
    }
}

/// All semi-standard fillings with entries in `1..=n`, in lexicographic order
/// of the reading word.
pub fn enumerate_sst(shape: &SkewDiagram, n: usize) -> Vec<SsTableau> {
    let boxes = shape.boxes();
    let mut out = Vec::new();
    let mut cur: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    fill(&boxes, 0, n, &mut cur, &mut out);
    out
}

fn fill(
    boxes: &[(usize, usize)],
    idx: usize,
    n: usize,
    cur: &mut BTreeMap<(usize, usize), usize>,
    out: &mut Vec<SsTableau>,
) {
    if idx == boxes.len() {
        out.push(SsTableau { entries: cur.clone() });
        return;
    }
    let (x, y) = boxes[idx];
    let mut lo = 1;
    if x > 1 {
        if let Some(&l) = cur.get(&(x - 1, y)) {
            lo = lo.max(l);
        }
    }
    if y > 1 {
        if let Some(&u) = cur.get(&(x, y - 1)) {
            lo = lo.max(u + 1);
        }
    }
    for v in lo..=n {
        cur.insert((x, y), v);
        fill(boxes, idx + 1, n, cur, out);
    }
    cur.remove(&(x, y));
}

/// Polynomial in `z_1..z_n` with coefficients in `Q(q, p)`; exponent vectors
/// are weights in the `epsilon` basis.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CharPoly {
    pub terms: BTreeMap<Vec<i64>, RingElem>,
}

impl CharPoly {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, exp: Vec<i64>, c: RingElem) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&mut self, o: &CharPoly) {
        for (k, v) in &o.terms {
            self.add_term(k.clone(), v.clone());
        }
    }

    pub fn scale(&self, c: &RingElem) -> CharPoly {
        let mut out = CharPoly::new();
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v * c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Value at `z = (1, ..., 1)`.
    pub fn at_one(&self) -> RingElem {
        let mut s = RingElem::zero();
        for v in self.terms.values() {
            s += v;
        }
        s
    }

    /// Same character read as `sl_n` weights: each exponent vector is shifted
    /// by a multiple of `(1, ..., 1)` so that its last entry is zero.
    pub fn sl_normalized(&self) -> CharPoly {
        let mut out = CharPoly::new();
        for (k, v) in &self.terms {
            let last = *k.last().unwrap_or(&0);
            out.add_term(k.iter().map(|e| e - last).collect(), v.clone());
        }
        out
    }

    /// Multiplicities `(grade, weight) -> c` of a character with Laurent
    /// polynomial coefficients in `q`.
    pub fn graded(&self) -> BTreeMap<(i64, Vec<i64>), i64> {
        let mut out = BTreeMap::new();
        for (w, v) in &self.terms {
            for (g, c) in v.as_q_laurent().expect("graded coefficient") {
                let c: i64 = c.try_into().expect("small coefficient");
                *out.entry((g, w.clone())).or_insert(0) += c;
            }
        }
        out.retain(|_, v| *v != 0);
        out
    }

    /// Swaps the variables `z_i` and `z_j` (0-based).
    pub fn swap_vars(&self, i: usize, j: usize) -> CharPoly {
        let mut out = CharPoly::new();
        for (k, v) in &self.terms {
            let mut k = k.clone();
            k.swap(i, j);
            out.add_term(k, v.clone());
        }
        out
    }
}

// JSON object keys are strings: exponent vectors go out as "1,0,-1".
impl Serialize for CharPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(self.terms.len()))?;
        for (k, v) in &self.terms {
            let key: Vec<String> = k.iter().map(|e| e.to_string()).collect();
            map.serialize_entry(&key.join(","), v)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for CharPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = BTreeMap::<String, RingElem>::deserialize(d)?;
        let mut out = CharPoly::new();
        for (k, v) in raw {
            let exp = if k.is_empty() {
                Vec::new()
            } else {
                k.split(',').map(|e| e.trim().parse::<i64>()).collect::<std::result::Result<Vec<_>, _>>().map_err(serde::de::Error::custom)?
            };
            out.add_term(exp, v);
        }
        Ok(out)
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, v) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono: Vec<String> = k
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(i, &e)| if e == 1 { format!("z{}", i + 1) } else { format!("z{}^{}", i + 1, e) })
                .collect();
            let c = v.to_string();
            match (mono.is_empty(), c.as_str()) {
                (true, _) => write!(f, "{c}")?,
                (false, "1") => write!(f, "{}", mono.join("*"))?,
                (false, _) => write!(f, "({c})*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

/// Skew Schur function `sum_T z^{n(T)}`.
pub fn skew_schur(shape: &SkewDiagram, n: usize) -> CharPoly {
    let mut out = CharPoly::new();
    for t in enumerate_sst(shape, n) {
        out.add_term(t.content(n), RingElem::from_int(1));
    }
    out
}

/// Border strips `<m_1..m_r>` with `m_i <= n`, `m_r < n`,
/// `|theta| = k mod n` and normalized grade at most `max_grade`; the empty
/// strip stands for the class of `<n, ..., n>`. Sorted by grade, then size,
/// then columns.
pub fn border_strips(n: usize, k: usize, max_grade: i64) -> Vec<BorderStrip> {
    assert!(n >= 1 && k < n, "need 0 <= k < n");
    let mut out = Vec::new();
    if k == 0 && max_grade >= 0 {
        out.push(BorderStrip::empty());
    }
    // A strip of normalized grade g corresponds to a wedge head of length
    // k + n g, so sizes beyond that bound cannot occur.
    let max_size = k + n * (max_grade.max(0) as usize);
    let mut cols = Vec::new();
    strips_rec(n, k, max_size, max_grade, &mut cols, &mut out);
    out.sort_by(|a, b| (a.grade(n), a.size(), &a.cols).cmp(&(b.grade(n), b.size(), &b.cols)));
    out
}

fn strips_rec(n: usize, k: usize, max_size: usize, max_grade: i64, cols: &mut Vec<usize>, out: &mut Vec<BorderStrip>) {
    let size: usize = cols.iter().sum();
    if let Some(&last) = cols.last() {
        if last < n && size % n == k {
            let s = BorderStrip { cols: cols.clone() };
            if s.grade(n) <= max_grade {
                out.push(s);
            }
        }
    }
    for m in 1..=n {
        if size + m > max_size {
            break;
        }
        cols.push(m);
        strips_rec(n, k, max_size, max_grade, cols, out);
        cols.pop();
    }
}

/// Level-one character of `V(Lambda_k)` as a sum over border strips, with
/// `q^grade` coefficients and the global fractional prefactor dropped.
pub fn char_level1(n: usize, k: usize, cutoff: i64) -> CharPoly {
    let mut out = CharPoly::new();
    for s in border_strips(n, k, cutoff) {
        let ch = skew_schur(&s.to_skew(), n);
        out.add(&ch.sl_normalized().scale(&RingElem::q_pow(s.grade(n))));
    }
    out
}

/// Dimension of each grade of a q-graded character whose coefficients are
/// Laurent polynomials in `q` with integer coefficients.
pub fn graded_dims(ch: &CharPoly) -> BTreeMap<i64, i64> {
    let mut out = BTreeMap::new();
    for ((g, _), c) in ch.graded() {
        *out.entry(g).or_insert(0) += c;
    }
    out.retain(|_, v| *v != 0);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strip(v: &[usize]) -> BorderStrip {
        BorderStrip::new(v.to_vec()).unwrap()
    }

    #[test]
    fn strip_shapes() {
        let s = strip(&[2, 1, 3]).to_skew();
        assert_eq!(s.degree(), 6);
        assert!(s.is_border_strip());
        assert_eq!(s.lambda, vec![3, 3, 1, 1]);
        assert_eq!(s.mu, vec![2]);
        assert_eq!(strip(&[1]).to_skew(), SkewDiagram { lambda: vec![1], mu: vec![] });
        assert!(strip(&[2, 2]).to_skew().is_border_strip());
        assert!(!SkewDiagram::new(vec![2, 2], vec![]).unwrap().is_border_strip());
    }

    #[test]
    fn labels() {
        assert_eq!(strip(&[2, 1, 3]).content_labels(0), vec![2, 4, 6, 0, -4, -2]);
        assert_eq!(strip(&[1]).content_labels(5), vec![5]);
        assert_eq!(strip(&[1, 1]).normalized_labels(), vec![2, 0]);
        assert_eq!(strip(&[2, 1, 3]).normalized_labels(), vec![6, 8, 10, 4, 0, 2]);
    }

    #[test]
    fn sst_counts() {
        assert_eq!(enumerate_sst(&strip(&[2]).to_skew(), 2).len(), 1);
        assert_eq!(enumerate_sst(&strip(&[1, 1]).to_skew(), 2).len(), 3);
        assert_eq!(enumerate_sst(&strip(&[3]).to_skew(), 2).len(), 0);
    }

    #[test]
    fn t_and_grade() {
        assert_eq!(strip(&[2, 1, 3]).t_statistic(), 5);
        assert_eq!(strip(&[4]).t_statistic(), 0);
        assert_eq!(strip(&[1, 1]).t_statistic(), 1);
        assert_eq!(strip(&[1, 2, 1]).grade(2), 2);
        assert_eq!(strip(&[1, 1, 2, 2]).grade(2), strip(&[1, 1]).grade(2));
    }
}
