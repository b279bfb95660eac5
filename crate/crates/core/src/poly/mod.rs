//! Sparse polynomials with exact coefficients in `K[y]`, `K[x,y]` and
//! `K[x,y,z]`, ordered by DRL with `x > y > z`.

mod monomial;
mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub use monomial::{variable_names, Monomial};

use crate::error::{Error, Result};
use crate::field::{Field, FieldElem};

/// A polynomial in `N` variables. Terms are stored without zero
/// coefficients, keyed by monomial in DRL order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly<const N: usize> {
    field: Field,
    terms: BTreeMap<Monomial<N>, FieldElem>,
}

/// Polynomials in `y` alone; the entries of a parameter matrix.
pub type UniPoly = Poly<1>;
/// Polynomials in `x, y`.
pub type BiPoly = Poly<2>;
/// Polynomials in `x, y, z`.
pub type TriPoly = Poly<3>;

impl<const N: usize> Poly<N> {
    pub fn zero(field: Field) -> Self {
        Poly { field, terms: BTreeMap::new() }
    }

    pub fn constant(c: FieldElem) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn one(field: Field) -> Self {
        Self::constant(field.one())
    }

    pub fn term(m: Monomial<N>, c: FieldElem) -> Self {
        let mut p = Self::zero(c.field());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Monic monomial.
    pub fn monomial(field: Field, exps: [u32; N]) -> Self {
        Self::term(Monomial::new(exps), field.one())
    }

    /// Sums the given terms; repeated monomials are combined.
    pub fn from_terms(field: Field, terms: impl IntoIterator<Item = (Monomial<N>, FieldElem)>) -> Self {
        let mut p = Self::zero(field);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in DRL-descending order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial<N>, &FieldElem)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial<N>) -> FieldElem {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn leading_term(&self) -> Option<(&Monomial<N>, &FieldElem)> {
        self.terms.last_key_value()
    }

    pub fn leading_monomial(&self) -> Option<Monomial<N>> {
        self.terms.last_key_value().map(|(m, _)| *m)
    }

    pub fn leading_coeff(&self) -> Option<&FieldElem> {
        self.terms.last_key_value().map(|(_, c)| c)
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.leading_monomial().map(|m| m.degree())
    }

    /// Degree as a signed integer with `-1` standing in for `deg(0)`.
    pub fn degree_or_neg(&self) -> i64 {
        self.degree().map_or(-1, i64::from)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    pub(crate) fn add_term(&mut self, m: Monomial<N>, c: &FieldElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.field.to_string(), other.field.to_string()))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let mut out = Self::zero(self.field);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(*m1 * *m2, &(c1 * c2));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &FieldElem) -> Self {
        self.mul_term(&Monomial::one(), c)
    }

    /// `c * m * self`
    pub fn mul_term(&self, m: &Monomial<N>, c: &FieldElem) -> Self {
        if c.is_zero() {
            return Self::zero(self.field);
        }
        Poly {
            field: self.field,
            terms: self.terms.iter().map(|(k, v)| (*k * *m, v * c)).collect(),
        }
    }

    /// `self - c * m * other`, in place.
    pub fn sub_mul_term(&mut self, m: &Monomial<N>, c: &FieldElem, other: &Self) {
        for (k, v) in &other.terms {
            self.add_term(*k * *m, &-(v * c));
        }
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) if !lc.is_one() => self.scale(&lc.inv().expect("nonzero leading coefficient")),
            _ => self.clone(),
        }
    }

    /// Restriction to the terms satisfying `keep`.
    pub fn filter_terms(&self, mut keep: impl FnMut(&Monomial<N>) -> bool) -> Self {
        Poly {
            field: self.field,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn parse(field: Field, s: &str) -> Result<Self> {
        parse::parse_poly(field, s)
    }
}

impl UniPoly {
    /// Coefficient of `y^k`.
    pub fn coeff_of(&self, k: u32) -> FieldElem {
        self.coeff(&Monomial::new([k]))
    }

    /// Euclidean division by a polynomial with invertible leading
    /// coefficient; returns `(quotient, remainder)`.
    pub fn div_rem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        self.check_field(divisor)?;
        let (dm, dc) = divisor.leading_term().ok_or(Error::DivisionByZero)?;
        let dinv = dc.inv()?;
        let mut q = UniPoly::zero(self.field);
        let mut r = self.clone();
        while let Some((rm, rc)) = r.leading_term() {
            let Some(shift) = rm.checked_div(dm) else { break };
            let c = rc * &dinv;
            q.add_term(shift, &c);
            r.sub_mul_term(&shift, &c, divisor);
        }
        Ok((q, r))
    }

    /// The same polynomial viewed in `K[x,y]`.
    pub fn to_bivariate(&self) -> BiPoly {
        BiPoly {
            field: self.field,
            terms: self.terms.iter().map(|(m, c)| (Monomial::new([0, m.0[0]]), c.clone())).collect(),
        }
    }
}

impl BiPoly {
    /// The same polynomial viewed in `K[x,y,z]`.
    pub fn to_trivariate(&self) -> TriPoly {
        TriPoly {
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new([m.0[0], m.0[1], 0]), c.clone()))
                .collect(),
        }
    }

    /// `Some` iff no term involves `x`.
    pub fn to_univariate(&self) -> Option<UniPoly> {
        if self.terms.keys().any(|m| m.0[0] != 0) {
            return None;
        }
        Some(UniPoly {
            field: self.field,
            terms: self.terms.iter().map(|(m, c)| (Monomial::new([m.0[1]]), c.clone())).collect(),
        })
    }

    /// Pads every term with powers of `z` up to the total degree.
    pub fn homogenize(&self) -> Result<TriPoly> {
        let top = self.degree().ok_or(Error::ZeroPolynomial)?;
        Ok(TriPoly {
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new([m.0[0], m.0[1], top - m.degree()]), c.clone()))
                .collect(),
        })
    }
}

impl TriPoly {
    /// Substitutes `z = 1`.
    pub fn dehomogenize(&self) -> BiPoly {
        BiPoly::from_terms(
            self.field,
            self.terms.iter().map(|(m, c)| (Monomial::new([m.0[0], m.0[1]]), c.clone())),
        )
    }

    /// Largest `s` with `z^s` dividing `self` (0 for the zero polynomial).
    pub fn z_valuation(&self) -> u32 {
        self.terms.keys().map(|m| m.0[2]).min().unwrap_or(0)
    }
}

macro_rules! poly_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<const N: usize> $tr<&Poly<N>> for &Poly<N> {
            type Output = Poly<N>;
            fn $method(self, rhs: &Poly<N>) -> Poly<N> {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<const N: usize> $tr<Poly<N>> for Poly<N> {
            type Output = Poly<N>;
            fn $method(self, rhs: Poly<N>) -> Poly<N> {
                (&self).$method(&rhs)
            }
        }
    };
}

poly_binop!(Add, add, checked_add);
poly_binop!(Sub, sub, checked_sub);
poly_binop!(Mul, mul, checked_mul);

impl<const N: usize> Neg for &Poly<N> {
    type Output = Poly<N>;
    fn neg(self) -> Poly<N> {
        Poly {
            field: self.field,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl<const N: usize> Neg for Poly<N> {
    type Output = Poly<N>;
    fn neg(self) -> Poly<N> {
        -&self
    }
}

impl<const N: usize> fmt::Display for Poly<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            if negative {
                write!(f, "-")?;
            } else if idx > 0 {
                write!(f, "+")?;
            }
            let abs = if negative { -c } else { c.clone() };
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bi(s: &str) -> BiPoly {
        BiPoly::parse(Field::Rationals, s).unwrap()
    }

    fn tri(s: &str) -> TriPoly {
        TriPoly::parse(Field::Rationals, s).unwrap()
    }

    fn uni(s: &str) -> UniPoly {
        UniPoly::parse(Field::Rationals, s).unwrap()
    }

    #[test]
    fn expand_product() {
        assert_eq!(uni("y^2+1") * uni("y-1"), uni("y^3-y^2+y-1"));
        assert_eq!((uni("y^2+1") * uni("y-1")).to_string(), "y^3-y^2+y-1");
    }

    #[test]
    fn leading_terms() {
        let f0 = bi("x^3 - x^2*y - 2*x*y^2 + 2*y^3 - 2*x^2 + x*y + y^2 - x + 2*y - 2");
        assert_eq!(f0.leading_monomial(), Some(Monomial::new([3, 0])));
        let p = bi("x*y^3 + x^2*y^2");
        assert_eq!(p.leading_monomial(), Some(Monomial::new([2, 2])));
        assert_eq!(BiPoly::zero(Field::Rationals).degree(), None);
        assert_eq!(BiPoly::zero(Field::Rationals).degree_or_neg(), -1);
    }

    #[test]
    fn homogenization_examples() {
        assert_eq!(bi("x^2+y-3").homogenize().unwrap(), tri("x^2+y*z-3*z^2"));
        let f0 = bi("x^3 - x^2*y - 2*x*y^2 + 2*y^3 - 2*x^2 + x*y + y^2 - x + 2*y - 2");
        let h = f0.homogenize().unwrap();
        assert!(h.is_homogeneous());
        assert_eq!(h.coeff(&Monomial::new([0, 0, 3])), Field::Rationals.from_i64(-2));
        assert_eq!(bi("x^4").homogenize().unwrap(), tri("x^4"));
        assert_eq!(BiPoly::zero(Field::Rationals).homogenize(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn dehomogenization_examples() {
        assert_eq!(tri("x^2+y*z-3*z^2").dehomogenize(), bi("x^2+y-3"));
        assert_eq!(tri("z^3").dehomogenize(), bi("1"));
        let f = tri("z*x+z^2");
        assert_eq!(f.dehomogenize(), bi("x+1"));
        let s = f.z_valuation();
        assert_eq!(s, 1);
        let back = f.dehomogenize().homogenize().unwrap().mul_term(&Monomial::new([0, 0, s]), &Field::Rationals.one());
        assert_eq!(back, f);
    }

    #[test]
    fn univariate_division() {
        let (q, r) = uni("-y+1").div_rem(&uni("y+1")).unwrap();
        assert_eq!((q, r), (uni("-1"), uni("2")));
        let (q, r) = uni("y^2-1").div_rem(&uni("y^2+2*y-2")).unwrap();
        assert_eq!((q, r), (uni("1"), uni("-2*y+1")));
        assert_eq!(uni("y").div_rem(&UniPoly::zero(Field::Rationals)), Err(Error::DivisionByZero));
    }

    #[test]
    fn field_mismatch_is_reported() {
        let p = BiPoly::one(Field::prime(5).unwrap());
        assert!(matches!(bi("x").checked_add(&p), Err(Error::FieldMismatch(..))));
    }

    #[test]
    fn modular_printing_uses_residues() {
        let f = BiPoly::parse(Field::prime(7).unwrap(), "x-2*y").unwrap();
        assert_eq!(f.to_string(), "x+5*y");
    }

    pub(crate) fn arb_bipoly() -> impl Strategy<Value = BiPoly> {
        prop::collection::vec(((0u32..5, 0u32..5), -5i64..5), 1..8).prop_map(|terms| {
            BiPoly::from_terms(
                Field::Rationals,
                terms.into_iter().map(|((a, b), c)| (Monomial::new([a, b]), Field::Rationals.from_i64(c))),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn homogenize_round_trip(f in arb_bipoly()) {
            prop_assume!(!f.is_zero());
            let h = f.homogenize().unwrap();
            prop_assert!(h.is_homogeneous());
            prop_assert_eq!(h.degree(), f.degree());
            prop_assert_eq!(h.dehomogenize(), f.clone());
            let lm = h.leading_monomial().unwrap();
            prop_assert_eq!(lm.0[2], 0);
            prop_assert_eq!(Monomial::new([lm.0[0], lm.0[1]]), f.leading_monomial().unwrap());
        }

        #[test]
        fn text_round_trip(f in arb_bipoly()) {
            prop_assert_eq!(BiPoly::parse(Field::Rationals, &f.to_string()).unwrap(), f);
        }

        #[test]
        fn ring_axioms(f in arb_bipoly(), g in arb_bipoly(), h in arb_bipoly()) {
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
            prop_assert!((&f - &f).is_zero());
        }
    }
}
