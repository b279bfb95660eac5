//! Division with quotients, S-polynomials and Buchberger's algorithm under
//! DRL, for polynomials in two or three variables.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{Monomial, Poly, TriPoly};

/// `f = Σ quotients[i]·divisors[i] + remainder`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisionResult<const N: usize> {
    pub quotients: Vec<Poly<N>>,
    pub remainder: Poly<N>,
}

/// Multivariate division. At each step the leading term of the running
/// polynomial is cancelled by the first divisor whose leading monomial
/// divides it, or else moved to the remainder.
///
/// Zero divisors are never used and get a zero quotient.
pub fn divide<const N: usize>(f: &Poly<N>, divisors: &[Poly<N>]) -> DivisionResult<N> {
    let field = f.field();
    let leads: Vec<Option<(Monomial<N>, crate::field::FieldElem)>> = divisors
        .iter()
        .map(|g| g.leading_term().map(|(m, c)| (*m, c.inv().expect("nonzero leading coefficient"))))
        .collect();
    let mut quotients = vec![Poly::zero(field); divisors.len()];
    let mut remainder = Poly::zero(field);
    let mut p = f.clone();
    while let Some((lm, lc)) = p.leading_term().map(|(m, c)| (*m, c.clone())) {
        let hit = leads.iter().enumerate().find_map(|(k, lead)| {
            let (gm, ginv) = lead.as_ref()?;
            lm.checked_div(gm).map(|shift| (k, shift, &lc * ginv))
        });
        match hit {
            Some((k, shift, c)) => {
                quotients[k].add_term(shift, &c);
                p.sub_mul_term(&shift, &c, &divisors[k]);
            }
            None => {
                remainder.add_term(lm, &lc);
                p.add_term(lm, &-lc);
            }
        }
    }
    DivisionResult { quotients, remainder }
}

/// Remainder of `f` on division by `divisors`.
pub fn normal_form<const N: usize>(f: &Poly<N>, divisors: &[Poly<N>]) -> Poly<N> {
    let leads: Vec<(Monomial<N>, crate::field::FieldElem)> = divisors
        .iter()
        .filter_map(|g| g.leading_term().map(|(m, c)| (*m, c.inv().expect("nonzero leading coefficient"))))
        .collect();
    let nonzero: Vec<&Poly<N>> = divisors.iter().filter(|g| !g.is_zero()).collect();
    let mut remainder = Poly::zero(f.field());
    let mut p = f.clone();
    while let Some((lm, lc)) = p.leading_term().map(|(m, c)| (*m, c.clone())) {
        let hit = leads
            .iter()
            .enumerate()
            .find_map(|(k, (gm, ginv))| lm.checked_div(gm).map(|shift| (k, shift, &lc * ginv)));
        match hit {
            Some((k, shift, c)) => p.sub_mul_term(&shift, &c, nonzero[k]),
            None => {
                remainder.add_term(lm, &lc);
                p.add_term(lm, &-lc);
            }
        }
    }
    remainder
}

/// `lcm/lt(f)·f − lcm/lt(g)·g`, with leading coefficients normalized to 1.
pub fn s_polynomial<const N: usize>(f: &Poly<N>, g: &Poly<N>) -> Result<Poly<N>> {
    let (fm, fc) = f.leading_term().ok_or(Error::ZeroPolynomial)?;
    let (gm, gc) = g.leading_term().ok_or(Error::ZeroPolynomial)?;
    let l = fm.lcm(gm);
    let mut s = f.mul_term(&l.checked_div(fm).unwrap(), &fc.inv()?);
    s.sub_mul_term(&l.checked_div(gm).unwrap(), &gc.inv()?, g);
    Ok(s)
}

/// A reduced Gröbner basis: monic, interreduced, sorted by leading monomial
/// in decreasing DRL order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis<const N: usize> {
    field: Field,
    elements: Vec<Poly<N>>,
}

impl<const N: usize> GroebnerBasis<N> {
    pub fn elements(&self) -> &[Poly<N>] {
        &self.elements
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.elements.iter().any(|g| g.leading_monomial() == Some(Monomial::one()))
    }

    pub fn reduce(&self, f: &Poly<N>) -> Poly<N> {
        normal_form(f, &self.elements)
    }

    pub fn contains(&self, f: &Poly<N>) -> bool {
        self.reduce(f).is_zero()
    }

    /// Minimal generators of the initial ideal, in decreasing DRL order.
    pub fn initial_ideal(&self) -> Vec<Monomial<N>> {
        self.elements.iter().filter_map(Poly::leading_monomial).collect()
    }
}

/// Minimal generators of the monomial ideal spanned by `monos`, decreasing.
pub fn minimal_monomials<const N: usize>(monos: &[Monomial<N>]) -> Vec<Monomial<N>> {
    let set: BTreeSet<Monomial<N>> = monos.iter().copied().collect();
    let mut out: Vec<Monomial<N>> = set
        .iter()
        .filter(|m| !set.iter().any(|o| o != *m && o.divides(m)))
        .copied()
        .collect();
    out.reverse();
    out
}

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// first, ties broken by pair index), the coprime criterion and the chain
/// criterion. The result is the reduced basis.
pub fn buchberger<const N: usize>(gens: &[Poly<N>]) -> Result<GroebnerBasis<N>> {
    let field = gens.first().map(Poly::field).ok_or(Error::ZeroPolynomial)?;
    if let Some(g) = gens.iter().find(|g| g.field() != field) {
        return Err(Error::FieldMismatch(field.to_string(), g.field().to_string()));
    }
    let mut basis: Vec<Poly<N>> = gens.iter().filter(|g| !g.is_zero()).map(Poly::monic).collect();
    if basis.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    let lm = |p: &Poly<N>| p.leading_monomial().unwrap();

    // pending pairs keyed by (lcm degree, lcm, j, i) so the first key is
    // the next pair to treat
    let mut pending: BTreeSet<(u32, Monomial<N>, usize, usize)> = BTreeSet::new();
    let mut queued: BTreeSet<(usize, usize)> = BTreeSet::new();
    let push_pairs = |basis: &Vec<Poly<N>>,
                      pending: &mut BTreeSet<(u32, Monomial<N>, usize, usize)>,
                      queued: &mut BTreeSet<(usize, usize)>,
                      j: usize| {
        for i in 0..j {
            let l = lm(&basis[i]).lcm(&lm(&basis[j]));
            pending.insert((l.degree(), l, j, i));
            queued.insert((i, j));
        }
    };
    for j in 1..basis.len() {
        push_pairs(&basis, &mut pending, &mut queued, j);
    }

    while let Some(key) = pending.pop_first() {
        let (_, l, j, i) = key;
        queued.remove(&(i, j));
        let (mi, mj) = (lm(&basis[i]), lm(&basis[j]));
        if mi.is_coprime(&mj) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lm(&basis[k]).divides(&l)
                && !queued.contains(&(i.min(k), i.max(k)))
                && !queued.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j])?;
        let r = normal_form(&s, &basis);
        if !r.is_zero() {
            basis.push(r.monic());
            let n = basis.len() - 1;
            push_pairs(&basis, &mut pending, &mut queued, n);
        }
    }
    Ok(GroebnerBasis { field, elements: interreduce(basis) })
}

/// Turns a Gröbner basis into the reduced one.
fn interreduce<const N: usize>(basis: Vec<Poly<N>>) -> Vec<Poly<N>> {
    let mut minimal: Vec<Poly<N>> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let m = g.leading_monomial().unwrap();
        let redundant = basis.iter().enumerate().any(|(o, h)| {
            let hm = h.leading_monomial().unwrap();
            o != k && hm.divides(&m) && (hm != m || o < k)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced: Vec<Poly<N>> = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Poly<N>> = minimal
            .iter()
            .enumerate()
            .filter(|(o, _)| *o != k)
            .map(|(_, h)| h.clone())
            .collect();
        let g = &minimal[k];
        let (m, c) = g.leading_term().unwrap();
        let tail = g.filter_terms(|x| x != m);
        let mut r = normal_form(&tail, &others);
        r.add_term(*m, c);
        reduced.push(r.monic());
    }
    reduced.sort_by(|a, b| b.leading_monomial().cmp(&a.leading_monomial()));
    reduced
}

/// Whether every S-polynomial of `polys` reduces to zero against `polys`.
pub fn is_groebner<const N: usize>(polys: &[Poly<N>]) -> bool {
    let nonzero: Vec<&Poly<N>> = polys.iter().filter(|p| !p.is_zero()).collect();
    let owned: Vec<Poly<N>> = nonzero.iter().map(|p| (*p).clone()).collect();
    for j in 0..owned.len() {
        for i in 0..j {
            let s = s_polynomial(&owned[i], &owned[j]).expect("nonzero");
            if !normal_form(&s, &owned).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Number of minimal generators in each degree of the homogeneous ideal
/// spanned by `gens`. Generators are visited by increasing degree and kept
/// only when not already in the ideal of those kept before.
pub fn minimalize_homogeneous(gens: &[TriPoly]) -> Result<BTreeMap<u32, usize>> {
    if let Some(g) = gens.iter().find(|g| !g.is_homogeneous()) {
        return Err(Error::NotHomogeneous(g.to_string()));
    }
    let mut sorted: Vec<&TriPoly> = gens.iter().filter(|g| !g.is_zero()).collect();
    sorted.sort_by_key(|g| g.degree());
    let mut kept: Vec<TriPoly> = Vec::new();
    let mut gb: Option<GroebnerBasis<3>> = None;
    let mut counts = BTreeMap::new();
    for g in sorted {
        let redundant = gb.as_ref().is_some_and(|b| b.contains(g));
        if !redundant {
            kept.push(g.clone());
            gb = Some(buchberger(&kept)?);
            *counts.entry(g.degree().unwrap()).or_insert(0) += 1;
        }
    }
    Ok(counts)
}
