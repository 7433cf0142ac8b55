//! Integer polynomials in `q` (dense, univariate) and in `(q, p)` (dense in `p`
//! with univariate coefficients), with exact division and gcd.
//!
//! Both types keep no trailing zero coefficients, so structural equality is
//! mathematical equality.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};

use super::int::Int;

/// Dense polynomial in `q` with integer coefficients; `c[i]` multiplies `q^i`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    c: Vec<Int>,
}

impl UPoly {
    pub fn from_coeffs(mut c: Vec<Int>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UPoly { c }
    }

    pub fn zero() -> Self {
        UPoly { c: Vec::new() }
    }

    pub fn one() -> Self {
        UPoly { c: vec![Int::one()] }
    }

    pub fn constant(v: Int) -> Self {
        Self::from_coeffs(vec![v])
    }

    /// `coeff * q^deg`
    pub fn monomial(coeff: Int, deg: usize) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        let mut c = vec![Int::zero(); deg + 1];
        c[deg] = coeff;
        UPoly { c }
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lc(&self) -> Int {
        self.c.last().cloned().unwrap_or_default()
    }

    /// Exponent of the lowest nonzero term (`q`-adic valuation).
    pub fn low_degree(&self) -> usize {
        self.c.iter().position(|x| !x.is_zero()).unwrap_or(0)
    }

    pub fn is_monomial(&self) -> bool {
        !self.is_zero() && self.c.iter().filter(|x| !x.is_zero()).count() == 1
    }

    pub fn add(&self, o: &UPoly) -> UPoly {
        let (long, short) = if self.c.len() >= o.c.len() { (self, o) } else { (o, self) };
        let mut c = long.c.clone();
        for (a, b) in c.iter_mut().zip(short.c.iter()) {
            *a += b;
        }
        UPoly::from_coeffs(c)
    }

    pub fn sub(&self, o: &UPoly) -> UPoly {
        let n = self.c.len().max(o.c.len());
        let mut c = self.c.clone();
        c.resize(n, Int::zero());
        for (a, b) in c.iter_mut().zip(o.c.iter()) {
            *a -= b;
        }
        UPoly::from_coeffs(c)
    }

    pub fn neg(&self) -> UPoly {
        UPoly { c: self.c.iter().map(|x| -x).collect() }
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        if o.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return o.clone();
        }
        let mut c = vec![Int::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] += a * b;
                }
            }
        }
        UPoly::from_coeffs(c)
    }

    pub fn scale(&self, s: &Int) -> UPoly {
        if s.is_zero() {
            return UPoly::zero();
        }
        UPoly { c: self.c.iter().map(|x| x * s).collect() }
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: usize) -> UPoly {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut c = vec![Int::zero(); k];
        c.extend(self.c.iter().cloned());
        UPoly { c }
    }

    /// Divide by `q^k`; caller guarantees `k <= low_degree()`.
    pub fn unshift(&self, k: usize) -> UPoly {
        UPoly { c: self.c[k.min(self.c.len())..].to_vec() }
    }

    /// Exact division of every coefficient by an integer.
    pub fn div_int(&self, d: &Int) -> UPoly {
        UPoly { c: self.c.iter().map(|x| x / d).collect() }
    }

    /// Nonnegative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> Int {
        let mut g = Int::zero();
        for x in &self.c {
            g = g.gcd(x);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn primitive_part(&self) -> UPoly {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            self.clone()
        } else {
            self.div_int(&g)
        }
    }

    pub fn eval_int(&self, x: &Int) -> Int {
        let mut acc = Int::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    /// Exact quotient `self / d` over the integers, or `None` when `d` does not
    /// divide `self` in `Z[q]`.
    pub fn div_exact(&self, d: &UPoly) -> Option<UPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(UPoly::zero());
        }
        if d.is_one() {
            return Some(self.clone());
        }
        let dd = d.c.len() - 1;
        if self.c.len() - 1 < dd {
            return None;
        }
        if d.c.len() == 1 {
            let (qs, rs): (Vec<_>, Vec<_>) = self.c.iter().map(|x| x.div_rem(&d.c[0])).unzip();
            return if rs.iter().all(|r| r.is_zero()) { Some(UPoly { c: qs }) } else { None };
        }
        let mut r = self.c.clone();
        let lc = &d.c[dd];
        let mut qc = vec![Int::zero(); r.len() - dd];
        for i in (0..qc.len()).rev() {
            let top = &r[i + dd];
            if top.is_zero() {
                continue;
            }
            let (t, rem) = top.div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            for (j, dc) in d.c.iter().enumerate() {
                if !dc.is_zero() {
                    r[i + j] -= &t * dc;
                }
            }
            qc[i] = t;
        }
        if r.iter().all(|x| x.is_zero()) {
            Some(UPoly::from_coeffs(qc))
        } else {
            None
        }
    }

    /// Pseudo-remainder: `lc(d)^(deg a - deg d + 1) * a mod d`.
    fn pseudo_rem(&self, d: &UPoly) -> UPoly {
        let dd = d.c.len() - 1;
        let mut r = self.c.clone();
        let lc = d.lc();
        while r.len() > dd && !r.is_empty() {
            let top = r.last().cloned().unwrap();
            let shift = r.len() - 1 - dd;
            for x in r.iter_mut() {
                *x *= &lc;
            }
            for (j, dc) in d.c.iter().enumerate() {
                r[shift + j] -= &top * dc;
            }
            r.pop();
            while r.last().is_some_and(|x| x.is_zero()) {
                r.pop();
            }
        }
        UPoly::from_coeffs(r)
    }

    /// Greatest common divisor in `Z[q]`, normalized to a positive leading
    /// coefficient.
    pub fn gcd(&self, o: &UPoly) -> UPoly {
        if self.is_zero() {
            return o.normalize_sign();
        }
        if o.is_zero() {
            return self.normalize_sign();
        }
        let content = self.content().gcd(&o.content());
        let low = self.low_degree().min(o.low_degree());
        let mut a = self.unshift(self.low_degree()).primitive_part();
        let mut b = o.unshift(o.low_degree()).primitive_part();
        if a.c.len() < b.c.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.c.len() == 1 {
                a = UPoly::one();
                break;
            }
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        let g = a.primitive_part().normalize_sign();
        g.scale(&content).shift(low)
    }

    fn normalize_sign(&self) -> UPoly {
        if self.lc().is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", Poly::from_upoly(self.clone()))
    }
}

/// Polynomial in `(q, p)` with integer coefficients, stored as a dense
/// polynomial in `p` whose coefficients are [`UPoly`]s in `q`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    c: Vec<UPoly>,
}

impl Poly {
    pub fn from_coeffs(mut c: Vec<UPoly>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn from_upoly(u: UPoly) -> Self {
        Self::from_coeffs(vec![u])
    }

    pub fn zero() -> Self {
        Poly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { c: vec![UPoly::one()] }
    }

    pub fn from_int(v: impl Into<Int>) -> Self {
        Self::from_upoly(UPoly::constant(v.into()))
    }

    /// `coeff * q^a * p^b`
    pub fn monomial(coeff: impl Into<Int>, qdeg: usize, pdeg: usize) -> Self {
        let coeff = coeff.into();
        if coeff.is_zero() {
            return Self::zero();
        }
        let mut c = vec![UPoly::zero(); pdeg + 1];
        c[pdeg] = UPoly::monomial(coeff, qdeg);
        Poly { c }
    }

    pub fn p_coeffs(&self) -> &[UPoly] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    /// True when no power of `p` occurs.
    pub fn is_p_free(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn p_degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn q_degree(&self) -> Option<usize> {
        self.c.iter().filter_map(|u| u.degree()).max()
    }

    /// Leading coefficient in `p` (a polynomial in `q`).
    pub fn lc_p(&self) -> UPoly {
        self.c.last().cloned().unwrap_or_default()
    }

    /// Leading integer coefficient under the order `p` first, then `q`.
    pub fn lc_int(&self) -> Int {
        self.lc_p().lc()
    }

    pub fn as_upoly(&self) -> Option<&UPoly> {
        match self.c.len() {
            0 => None,
            1 => Some(&self.c[0]),
            _ => None,
        }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(match (self.c.get(i), o.c.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Poly::from_coeffs(c)
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(match (self.c.get(i), o.c.get(i)) {
                (Some(a), Some(b)) => a.sub(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.neg(),
                (None, None) => unreachable!(),
            });
        }
        Poly::from_coeffs(c)
    }

    pub fn neg(&self) -> Poly {
        Poly { c: self.c.iter().map(|u| u.neg()).collect() }
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        if self.c.len() == 1 && o.c.len() == 1 {
            return Poly::from_upoly(self.c[0].mul(&o.c[0]));
        }
        let mut c = vec![UPoly::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] = c[i + j].add(&a.mul(b));
                }
            }
        }
        Poly::from_coeffs(c)
    }

    /// `(a, b)` when `self = q^a p^b`.
    pub fn as_unit_monomial(&self) -> Option<(usize, usize)> {
        let b = self.c.len().checked_sub(1)?;
        if self.c[..b].iter().any(|u| !u.is_zero()) {
            return None;
        }
        let u = &self.c[b];
        let a = u.low_degree();
        (u.c.len() == a + 1 && u.c[a].is_one()).then_some((a, b))
    }

    /// Lowest powers of `q` and of `p` occurring in `self`.
    pub fn low_degrees(&self) -> (usize, usize) {
        let lp = self.c.iter().position(|u| !u.is_zero()).unwrap_or(0);
        let lq = self.c.iter().filter(|u| !u.is_zero()).map(|u| u.low_degree()).min().unwrap_or(0);
        (lq, lp)
    }

    /// Multiply by `q^a p^b`.
    pub fn shift(&self, a: usize, b: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![UPoly::zero(); b];
        c.extend(self.c.iter().map(|u| u.shift(a)));
        Poly { c }
    }

    /// `q^a1 p^b1 x + q^a2 p^b2 y`, built without intermediate copies.
    pub fn shifted_sum(x: &Poly, (a1, b1): (usize, usize), y: &Poly, (a2, b2): (usize, usize)) -> Poly {
        let n = (x.c.len() + b1).max(y.c.len() + b2);
        let mut c = Vec::with_capacity(n);
        for j in 0..n {
            let ux = j.checked_sub(b1).and_then(|k| x.c.get(k)).filter(|u| !u.is_zero());
            let uy = j.checked_sub(b2).and_then(|k| y.c.get(k)).filter(|u| !u.is_zero());
            c.push(match (ux, uy) {
                (None, None) => UPoly::zero(),
                (Some(u), None) => u.shift(a1),
                (None, Some(v)) => v.shift(a2),
                (Some(u), Some(v)) => {
                    let len = (u.c.len() + a1).max(v.c.len() + a2);
                    let mut w = vec![Int::zero(); len];
                    for (i, z) in u.c.iter().enumerate() {
                        w[i + a1] = z.clone();
                    }
                    for (i, z) in v.c.iter().enumerate() {
                        if !z.is_zero() {
                            w[i + a2] += z;
                        }
                    }
                    UPoly::from_coeffs(w)
                }
            });
        }
        Poly::from_coeffs(c)
    }

    /// Divide by `q^a p^b`; caller guarantees divisibility.
    pub fn unshift(&self, a: usize, b: usize) -> Poly {
        Poly { c: self.c[b.min(self.c.len())..].iter().map(|u| if u.is_zero() { u.clone() } else { u.unshift(a) }).collect() }
    }

    pub fn mul_upoly(&self, u: &UPoly) -> Poly {
        Poly::from_coeffs(self.c.iter().map(|x| x.mul(u)).collect())
    }

    pub fn scale(&self, s: &Int) -> Poly {
        Poly::from_coeffs(self.c.iter().map(|x| x.scale(s)).collect())
    }

    pub fn int_content(&self) -> Int {
        let mut g = Int::zero();
        for u in &self.c {
            g = g.gcd(&u.content());
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Gcd in `Z[q]` of the coefficients in `p`.
    pub fn q_content(&self) -> UPoly {
        let mut g = UPoly::zero();
        for u in &self.c {
            g = g.gcd(u);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Substitute `p = 1`.
    pub fn eval_p_one(&self) -> UPoly {
        self.c.iter().fold(UPoly::zero(), |acc, u| acc.add(u))
    }

    /// Substitute `p = q^k` (`k >= 0`).
    pub fn eval_p_qpow(&self, k: usize) -> UPoly {
        self.c
            .iter()
            .enumerate()
            .fold(UPoly::zero(), |acc, (i, u)| acc.add(&u.shift(i * k)))
    }

    fn div_upoly_exact(&self, u: &UPoly) -> Option<Poly> {
        let mut c = Vec::with_capacity(self.c.len());
        for x in &self.c {
            c.push(x.div_exact(u)?);
        }
        Some(Poly::from_coeffs(c))
    }

    /// Exact quotient in `Z[q, p]`, or `None` when not divisible.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if d.c.len() == 1 {
            return self.div_upoly_exact(&d.c[0]);
        }
        let dd = d.c.len() - 1;
        if self.c.len() - 1 < dd {
            return None;
        }
        let lc = d.lc_p();
        let mut r = self.c.clone();
        let mut qc = vec![UPoly::zero(); r.len() - dd];
        for i in (0..qc.len()).rev() {
            if r[i + dd].is_zero() {
                continue;
            }
            let t = r[i + dd].div_exact(&lc)?;
            for (j, dc) in d.c.iter().enumerate() {
                if !dc.is_zero() {
                    r[i + j] = r[i + j].sub(&t.mul(dc));
                }
            }
            qc[i] = t;
        }
        if r.iter().all(|x| x.is_zero()) {
            Some(Poly::from_coeffs(qc))
        } else {
            None
        }
    }

    fn pseudo_rem(&self, d: &Poly) -> Poly {
        let dd = d.c.len() - 1;
        let lc = d.lc_p();
        let mut r = self.c.clone();
        while r.len() > dd && !r.is_empty() {
            let top = r.last().cloned().unwrap();
            let shift = r.len() - 1 - dd;
            for x in r.iter_mut() {
                *x = x.mul(&lc);
            }
            for (j, dc) in d.c.iter().enumerate() {
                r[shift + j] = r[shift + j].sub(&top.mul(dc));
            }
            r.pop();
            while r.last().is_some_and(|x| x.is_zero()) {
                r.pop();
            }
        }
        Poly::from_coeffs(r)
    }

    fn q_primitive(&self) -> Poly {
        let g = self.q_content();
        if g.is_one() || g.is_zero() {
            self.clone()
        } else {
            self.div_upoly_exact(&g).expect("content divides")
        }
    }

    /// Greatest common divisor in `Z[q, p]` (recursive primitive PRS in `p`
    /// over `Z[q]`), with positive leading integer coefficient.
    pub fn gcd(&self, o: &Poly) -> Poly {
        if self.is_zero() {
            return o.normalize_sign();
        }
        if o.is_zero() {
            return self.normalize_sign();
        }
        if self.c.len() == 1 && o.c.len() == 1 {
            return Poly::from_upoly(self.c[0].gcd(&o.c[0]));
        }
        let ca = self.q_content();
        let cb = o.q_content();
        let content = ca.gcd(&cb);
        let mut a = self.div_upoly_exact(&ca).unwrap();
        let mut b = o.div_upoly_exact(&cb).unwrap();
        if a.c.len() < b.c.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.c.len() == 1 {
                a = Poly::one();
                break;
            }
            let r = a.pseudo_rem(&b).q_primitive();
            a = b;
            b = r;
        }
        a.q_primitive().normalize_sign().mul_upoly(&content)
    }

    fn normalize_sign(&self) -> Poly {
        if self.lc_int().is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Terms as `(q-exponent, p-exponent, coefficient)`, highest `q` first,
    /// then highest `p`.
    pub fn terms(&self) -> Vec<(usize, usize, Int)> {
        let mut t = Vec::new();
        for (j, u) in self.c.iter().enumerate() {
            for (i, x) in u.coeffs().iter().enumerate() {
                if !x.is_zero() {
                    t.push((i, j, x.clone()));
                }
            }
        }
        t.sort_by(|a, b| match b.0.cmp(&a.0) {
            Ordering::Equal => b.1.cmp(&a.1),
            o => o,
        });
        t
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (qe, pe, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            let mut factors = Vec::new();
            if !abs.is_one() || (*qe == 0 && *pe == 0) {
                factors.push(abs.to_string());
            }
            match qe {
                0 => {}
                1 => factors.push("q".to_string()),
                e => factors.push(format!("q^{e}")),
            }
            match pe {
                0 => {}
                1 => factors.push("p".to_string()),
                e => factors.push(format!("p^{e}")),
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn up(v: &[i64]) -> UPoly {
        UPoly::from_coeffs(v.iter().map(|&x| Int::from(x)).collect())
    }

    #[test]
    fn upoly_gcd_of_products() {
        // (q+1)(q-2) and (q+1)(q^2+3)
        let a = up(&[1, 1]).mul(&up(&[-2, 1]));
        let b = up(&[1, 1]).mul(&up(&[3, 0, 1]));
        assert_eq!(a.gcd(&b), up(&[1, 1]));
        assert_eq!(up(&[0, 0, 2]).gcd(&up(&[0, 4, 6])), up(&[0, 2]));
    }

    #[test]
    fn upoly_exact_division() {
        let a = up(&[-1, 0, 1]);
        assert_eq!(a.div_exact(&up(&[-1, 1])), Some(up(&[1, 1])));
        assert_eq!(a.div_exact(&up(&[2, 1])), None);
        assert_eq!(up(&[2, 4]).div_exact(&up(&[2])), Some(up(&[1, 2])));
    }

    #[test]
    fn bivariate_gcd() {
        // (p - q)(p + 1) and (p - q)(q p - 2)
        let pm = Poly::monomial(1, 0, 1).sub(&Poly::monomial(1, 1, 0));
        let a = pm.mul(&Poly::monomial(1, 0, 1).add(&Poly::one()));
        let b = pm.mul(&Poly::monomial(1, 1, 1).sub(&Poly::from_int(2)));
        assert_eq!(a.gcd(&b), pm);
        assert_eq!(a.div_exact(&pm).unwrap(), Poly::monomial(1, 0, 1).add(&Poly::one()));
    }

    #[test]
    fn display_orders_terms() {
        let x = Poly::monomial(1, 2, 0).add(&Poly::one());
        assert_eq!(x.to_string(), "q^2+1");
        let y = Poly::monomial(-3, 1, 2).add(&Poly::monomial(2, 1, 0));
        assert_eq!(y.to_string(), "-3*q*p^2+2*q");
    }
}
