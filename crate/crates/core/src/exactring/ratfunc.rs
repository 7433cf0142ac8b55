//! The coefficient field `Q(q, p)`.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::int::Int;
use super::poly::{Poly, UPoly};
use crate::error::{Error, Result};

/// Element of `Q(q, p)`: a reduced fraction of integer polynomials.
///
/// Canonical form: `gcd(num, den) = 1` in `Z[q, p]` (integer content
/// included) and the leading coefficient of `den` (highest power of `p`, then
/// of `q`) is positive. Negative powers of `q` or `p` live in `den`, so
/// `q^-1` is stored as `1/q`. Equal values have identical representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RingElem {
    num: Poly,
    den: Poly,
}

impl RingElem {
    fn from_parts_unchecked(num: Poly, den: Poly) -> Self {
        RingElem { num, den }
    }

    /// Builds `num / den` and reduces it.
    pub fn from_polys(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return RingElem { num, den };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        if den.lc_int().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        RingElem { num, den }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn from_int(v: impl Into<BigInt>) -> Self {
        Self::from_parts_unchecked(Poly::from_int(Int::from(v.into())), Poly::one())
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::reduce(Poly::from_int(r.numer().clone()), Poly::from_int(r.denom().clone()))
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn p() -> Self {
        Self::p_pow(1)
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        let m = Poly::monomial(1, k.unsigned_abs() as usize, 0);
        if k >= 0 {
            Self::from_parts_unchecked(m, Poly::one())
        } else {
            Self::from_parts_unchecked(Poly::one(), m)
        }
    }

    /// `p^k` for any integer `k`.
    pub fn p_pow(k: i64) -> Self {
        let m = Poly::monomial(1, 0, k.unsigned_abs() as usize);
        if k >= 0 {
            Self::from_parts_unchecked(m, Poly::one())
        } else {
            Self::from_parts_unchecked(Poly::one(), m)
        }
    }

    /// `[n]_q = (q^n - q^-n) / (q - q^-1)`.
    pub fn q_int(n: i64) -> Self {
        let num = Self::q_pow(n) - Self::q_pow(-n);
        let den = Self::q() - Self::q_pow(-1);
        num.checked_div(&den).expect("q - q^-1 is nonzero")
    }

    /// Gaussian binomial `[n choose r]_q` built from `[n]_q` brackets.
    pub fn q_binomial(n: i64, r: i64) -> Self {
        if r < 0 || r > n {
            return Self::zero();
        }
        let mut acc = Self::one();
        for i in 0..r {
            acc = acc * Self::q_int(n - i);
            acc = acc.checked_div(&Self::q_int(i + 1)).expect("nonzero bracket");
        }
        acc
    }

    pub fn is_p_free(&self) -> bool {
        self.num.is_p_free() && self.den.is_p_free()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one() && self.num.q_degree().unwrap_or(0) == 0 && self.num.is_p_free()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if den.lc_int().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Ok(Self::from_parts_unchecked(num, den))
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self> {
        Ok(self * &o.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Substitutes `p = 1`. Fails with [`Error::PoleAtPOne`] when the reduced
    /// denominator vanishes there.
    pub fn specialize_p1(&self) -> Result<Self> {
        if self.is_p_free() {
            return Ok(self.clone());
        }
        let den = self.den.eval_p_one();
        if den.is_zero() {
            return Err(Error::PoleAtPOne(self.to_string()));
        }
        Ok(Self::reduce(Poly::from_upoly(self.num.eval_p_one()), Poly::from_upoly(den)))
    }

    /// Substitutes `p = q^k` for `k >= 0`; `None` on a pole.
    pub fn substitute_p_qpow(&self, k: usize) -> Option<Self> {
        let den = self.den.eval_p_qpow(k);
        if den.is_zero() {
            return None;
        }
        Some(Self::reduce(Poly::from_upoly(self.num.eval_p_qpow(k)), Poly::from_upoly(den)))
    }

    /// If this is `c * q^k` with `c` an integer, returns `(c, k)`.
    pub fn as_signed_q_power(&self) -> Option<(BigInt, i64)> {
        let n = self.num.as_upoly()?;
        let d = self.den.as_upoly()?;
        if !n.is_monomial() || !d.is_monomial() || !d.lc().is_one() {
            return None;
        }
        Some((n.lc().to_bigint(), n.low_degree() as i64 - d.low_degree() as i64))
    }

    /// If this is a Laurent polynomial in `q` with integer coefficients,
    /// returns its terms `q^k -> c`.
    pub fn as_q_laurent(&self) -> Option<std::collections::BTreeMap<i64, BigInt>> {
        let n = self.num.as_upoly()?;
        let d = self.den.as_upoly()?;
        if !d.is_monomial() || !d.lc().is_one() {
            return None;
        }
        let shift = d.low_degree() as i64;
        Some(
            n.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as i64 - shift, c.to_bigint()))
                .collect(),
        )
    }

    /// Rough size of the representation; used for pivot selection.
    pub fn weight(&self) -> usize {
        let t = |p: &Poly| {
            p.p_coeffs()
                .iter()
                .map(|u| u.coeffs().iter().map(|c| c.bits() as usize + 1).sum::<usize>())
                .sum::<usize>()
        };
        t(&self.num) + t(&self.den)
    }

    /// Reduced `num / (q^a p^b)`.
    fn from_laurent(num: Poly, a: usize, b: usize) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (lq, lp) = num.low_degrees();
        let (sa, sb) = (lq.min(a), lp.min(b));
        let num = if sa == 0 && sb == 0 { num } else { num.unshift(sa, sb) };
        Self::from_parts_unchecked(num, Poly::monomial(1, a - sa, b - sb))
    }

    fn add_impl(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && o.den.is_one() {
            return Self::from_parts_unchecked(self.num.add(&o.num), Poly::one());
        }
        if let (Some((a1, b1)), Some((a2, b2))) = (self.den.as_unit_monomial(), o.den.as_unit_monomial()) {
            let (a, b) = (a1.max(a2), b1.max(b2));
            let num = Poly::shifted_sum(&self.num, (a - a1, b - b1), &o.num, (a - a2, b - b2));
            return Self::from_laurent(num, a, b);
        }
        if self.den == o.den {
            return Self::reduce(self.num.add(&o.num), self.den.clone());
        }
        if self.den.is_one() {
            return Self::from_parts_unchecked(self.num.mul(&o.den).add(&o.num), o.den.clone());
        }
        if o.den.is_one() {
            return Self::from_parts_unchecked(o.num.mul(&self.den).add(&self.num), self.den.clone());
        }
        let g = self.den.gcd(&o.den);
        if g.is_one() {
            let num = self.num.mul(&o.den).add(&o.num.mul(&self.den));
            let den = self.den.mul(&o.den);
            // coprime denominators: the sum is already reduced
            return Self::normalize_sign(num, den);
        }
        let sd = self.den.div_exact(&g).unwrap();
        let od = o.den.div_exact(&g).unwrap();
        let num = self.num.mul(&od).add(&o.num.mul(&sd));
        if num.is_zero() {
            return Self::zero();
        }
        let den = self.den.mul(&od);
        let g2 = num.gcd(&g);
        if g2.is_one() {
            Self::normalize_sign(num, den)
        } else {
            Self::normalize_sign(num.div_exact(&g2).unwrap(), den.div_exact(&g2).unwrap())
        }
    }

    fn normalize_sign(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.lc_int().is_negative() {
            Self::from_parts_unchecked(num.neg(), den.neg())
        } else {
            Self::from_parts_unchecked(num, den)
        }
    }

    fn mul_impl(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return Self::from_parts_unchecked(self.num.mul(&o.num), Poly::one());
        }
        if let (Some((a1, b1)), Some((a2, b2))) = (self.den.as_unit_monomial(), o.den.as_unit_monomial()) {
            return Self::from_laurent(self.num.mul(&o.num), a1 + a2, b1 + b2);
        }
        let g1 = if o.den.is_one() { Poly::one() } else { self.num.gcd(&o.den) };
        let g2 = if self.den.is_one() { Poly::one() } else { o.num.gcd(&self.den) };
        let dv = |a: &Poly, g: &Poly| if g.is_one() { a.clone() } else { a.div_exact(g).unwrap() };
        let num = dv(&self.num, &g1).mul(&dv(&o.num, &g2));
        let den = dv(&self.den, &g2).mul(&dv(&o.den, &g1));
        Self::normalize_sign(num, den)
    }
}

impl Zero for RingElem {
    fn zero() -> Self {
        Self::from_parts_unchecked(Poly::zero(), Poly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RingElem {
    fn one() -> Self {
        Self::from_parts_unchecked(Poly::one(), Poly::one())
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
}

impl From<i64> for RingElem {
    fn from(v: i64) -> Self {
        Self::from_int(v)
    }
}

impl From<UPoly> for RingElem {
    fn from(u: UPoly) -> Self {
        Self::from_parts_unchecked(Poly::from_upoly(u), Poly::one())
    }
}

impl<'a> Add<&'a RingElem> for &'a RingElem {
    type Output = RingElem;
    fn add(self, o: &RingElem) -> RingElem {
        self.add_impl(o)
    }
}

impl<'a> Sub<&'a RingElem> for &'a RingElem {
    type Output = RingElem;
    fn sub(self, o: &RingElem) -> RingElem {
        self.add_impl(&-o)
    }
}

impl<'a> Mul<&'a RingElem> for &'a RingElem {
    type Output = RingElem;
    fn mul(self, o: &RingElem) -> RingElem {
        self.mul_impl(o)
    }
}

impl Add for RingElem {
    type Output = RingElem;
    fn add(self, o: RingElem) -> RingElem {
        self.add_impl(&o)
    }
}

impl Sub for RingElem {
    type Output = RingElem;
    fn sub(self, o: RingElem) -> RingElem {
        self.add_impl(&-o)
    }
}

impl Mul for RingElem {
    type Output = RingElem;
    fn mul(self, o: RingElem) -> RingElem {
        self.mul_impl(&o)
    }
}

/// Panics on division by zero; use [`RingElem::checked_div`] otherwise.
impl Div for RingElem {
    type Output = RingElem;
    fn div(self, o: RingElem) -> RingElem {
        self.checked_div(&o).expect("division by zero in Q(q,p)")
    }
}

impl Neg for RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        Self::from_parts_unchecked(self.num.neg(), self.den)
    }
}

impl Neg for &RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        RingElem::from_parts_unchecked(self.num.neg(), self.den.clone())
    }
}

impl AddAssign<&RingElem> for RingElem {
    fn add_assign(&mut self, o: &RingElem) {
        *self = self.add_impl(o);
    }
}

impl SubAssign<&RingElem> for RingElem {
    fn sub_assign(&mut self, o: &RingElem) {
        *self = self.add_impl(&-o);
    }
}

impl MulAssign<&RingElem> for RingElem {
    fn mul_assign(&mut self, o: &RingElem) {
        *self = self.mul_impl(o);
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for RingElem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        super::parse::parse_ring_elem(s)
    }
}

impl serde::Serialize for RingElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for RingElem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> RingElem {
        RingElem::q()
    }

    #[test]
    fn inverse_of_q_minus_q_inverse() {
        let x = q() - RingElem::q_pow(-1);
        assert!((x.clone() * x.inv().unwrap()).is_one());
    }

    #[test]
    fn bracket_two_is_q_plus_q_inverse() {
        let two = RingElem::q_int(2);
        assert_eq!(two, q() + RingElem::q_pow(-1));
        assert_eq!(RingElem::q_binomial(2, 1), two);
        assert_eq!(RingElem::q_binomial(3, 1), RingElem::q_binomial(3, 2));
    }

    #[test]
    fn rendering_matches_normalized_fraction() {
        let x = q() + RingElem::q_pow(-1);
        assert_eq!(x.to_string(), "(q^2+1)/(q)");
        assert_eq!(RingElem::from_int(-3).to_string(), "-3");
        let back: RingElem = "(q^2+1)/(q)".parse().unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn p_one_specialization() {
        assert_eq!((RingElem::p() * q()).specialize_p1().unwrap(), q());
        let p = RingElem::p();
        let x = (&p * &p - RingElem::one()).checked_div(&(p.clone() - RingElem::one())).unwrap();
        assert_eq!(x.specialize_p1().unwrap(), RingElem::from_int(2));
        let pole = RingElem::one().checked_div(&(p - RingElem::one())).unwrap();
        assert!(matches!(pole.specialize_p1(), Err(Error::PoleAtPOne(_))));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(matches!(RingElem::one().checked_div(&RingElem::zero()), Err(Error::DivisionByZero)));
        assert!(RingElem::zero().inv().is_err());
    }

    #[test]
    fn denominator_sign_is_canonical() {
        let a = RingElem::from_polys(Poly::from_int(1), Poly::from_int(-2)).unwrap();
        let b = RingElem::from_polys(Poly::from_int(-1), Poly::from_int(2)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.den(), &Poly::from_int(2));
    }
}
