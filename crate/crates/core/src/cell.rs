//! The monomial ideal `I₀ = (x^t, x^{t-1}y^{m_1}, …, y^{m_t})` and the
//! integer data attached to it.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Monomial;

/// A monomial ideal of finite colength in `K[x,y]`, given by its m-vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct MonomialCell {
    m: Vec<u32>,
}

impl TryFrom<Vec<u32>> for MonomialCell {
    type Error = Error;
    fn try_from(m: Vec<u32>) -> Result<Self> {
        make_cell(&m)
    }
}

impl From<MonomialCell> for Vec<u32> {
    fn from(c: MonomialCell) -> Self {
        c.m
    }
}

/// Validates an m-vector: `m₀ = 0`, at least one more entry, non-decreasing
/// and `m₁ ≥ 1` (otherwise `I₀` is the unit ideal).
pub fn make_cell(m: &[u32]) -> Result<MonomialCell> {
    if m.len() < 2 {
        return Err(Error::BadMVector(format!("need at least m0 and m1, got {m:?}")));
    }
    if m[0] != 0 {
        return Err(Error::BadMVector(format!("m0 must be 0, got {}", m[0])));
    }
    if let Some(k) = (1..m.len()).find(|&k| m[k] < m[k - 1]) {
        return Err(Error::BadMVector(format!("m is decreasing at index {k}: {m:?}")));
    }
    if m[1] == 0 {
        return Err(Error::BadMVector("m1 = 0 makes x^(t-1) a generator; drop the leading zero".into()));
    }
    Ok(MonomialCell { m: m.to_vec() })
}

/// Parses `0,5,7,11`.
pub fn parse_m_vector(s: &str) -> Result<MonomialCell> {
    let m = s
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<u32>()
                .map_err(|_| Error::BadMVector(format!("invalid entry {p:?} in {s:?}")))
        })
        .collect::<Result<Vec<u32>>>()?;
    make_cell(&m)
}

impl MonomialCell {
    pub fn m(&self) -> &[u32] {
        &self.m
    }

    pub fn t(&self) -> usize {
        self.m.len() - 1
    }

    /// `d_i = m_i − m_{i−1}` for `i = 1..=t`; `d()[i-1]` is `d_i`.
    pub fn d(&self) -> Vec<u32> {
        self.m.windows(2).map(|w| w[1] - w[0]).collect()
    }

    /// `d_i`, 1-based.
    pub fn d_at(&self, i: usize) -> u32 {
        self.m[i] - self.m[i - 1]
    }

    pub fn is_lex_segment(&self) -> bool {
        self.m.windows(2).all(|w| w[1] > w[0])
    }

    pub fn require_lex_segment(&self) -> Result<()> {
        if self.is_lex_segment() {
            Ok(())
        } else {
            Err(Error::NotLexSegment(self.m.clone()))
        }
    }

    /// `dim_K(R/I₀) = Σ m_i`.
    pub fn colength(&self) -> u64 {
        self.m.iter().map(|&v| u64::from(v)).sum()
    }

    /// `x^{t−i} y^{m_i}` for `i = 0..=t`.
    pub fn generator(&self, i: usize) -> Monomial<2> {
        Monomial::new([(self.t() - i) as u32, self.m[i]])
    }

    pub fn generators(&self) -> Vec<Monomial<2>> {
        (0..=self.t()).map(|i| self.generator(i)).collect()
    }

    /// The generators that are minimal; `x^{t−i}y^{m_i}` is redundant
    /// exactly when `d_{i+1} = 0`.
    pub fn minimal_generators(&self) -> Vec<Monomial<2>> {
        (0..=self.t())
            .filter(|&i| i == self.t() || self.d_at(i + 1) > 0)
            .map(|i| self.generator(i))
            .collect()
    }

    /// `deg f_i = t − i + m_i`.
    pub fn generator_degree(&self, i: usize) -> u32 {
        (self.t() - i) as u32 + self.m[i]
    }

    /// Whether `x^a y^b ∈ I₀`.
    pub fn contains(&self, a: u32, b: u32) -> bool {
        let t = self.t() as u32;
        a >= t || b >= self.m[(t - a) as usize]
    }

    /// `h_k = #{standard monomials of degree k}`, up to the last nonzero
    /// value.
    pub fn hilbert_function(&self) -> Vec<u64> {
        let t = self.t();
        let top = (0..t).map(|a| a as u32 + self.m[t - a]).max().unwrap_or(0);
        let mut h = vec![0u64; top as usize];
        for a in 0..t {
            for b in 0..self.m[t - a] {
                h[a + b as usize] += 1;
            }
        }
        while h.last() == Some(&0) {
            h.pop();
        }
        h
    }

    /// `u_{i,j} = i − j + m_j − m_{i−1}`, 1-based with `i ∈ 1..=t+1`,
    /// `j ∈ 1..=t`.
    pub fn u(&self, i: usize, j: usize) -> i64 {
        i as i64 - j as i64 + i64::from(self.m[j]) - i64::from(self.m[i - 1])
    }

    /// Entry-wise degree bound; negative means the slot is forced to zero.
    pub fn b(&self, i: usize, j: usize) -> i64 {
        let u = self.u(i, j);
        if i <= j {
            (u - 1).min(i64::from(self.d_at(i)) - 1)
        } else {
            u.min(i64::from(self.d_at(j)) - 1)
        }
    }

    /// Looser bound satisfied by raw syzygy matrices before reduction.
    pub fn grade_bound(&self, i: usize, j: usize) -> i64 {
        let u = self.u(i, j);
        if i <= j {
            u - 1
        } else {
            u
        }
    }

    pub fn degree_matrix(&self) -> Vec<Vec<i64>> {
        self.table(|i, j| self.u(i, j))
    }

    pub fn bound_matrix(&self) -> Vec<Vec<i64>> {
        self.table(|i, j| self.b(i, j))
    }

    fn table(&self, f: impl Fn(usize, usize) -> i64) -> Vec<Vec<i64>> {
        let t = self.t();
        (1..=t + 1).map(|i| (1..=t).map(|j| f(i, j)).collect()).collect()
    }

    /// `N = Σ_{b_{i,j} ≥ 0} (b_{i,j} + 1)`.
    pub fn parameter_count(&self) -> u64 {
        self.bound_matrix()
            .iter()
            .flatten()
            .filter(|&&b| b >= 0)
            .map(|&b| (b + 1) as u64)
            .sum()
    }

    /// The dimension of the cell, counted on the bound matrix and checked
    /// against both closed forms.
    pub fn dimension(&self) -> Result<u64> {
        self.require_lex_segment()?;
        let n = self.parameter_count();
        let h = self.hilbert_function();
        let closed = dimension_formula(self.colength(), &h);
        let compact = dimension_compact(&h);
        if closed != n as i64 || compact != n as i64 {
            return Err(Error::InternalReductionFailure(format!(
                "parameter count {n} disagrees with closed forms {closed}, {compact}"
            )));
        }
        Ok(n)
    }

    /// `(max{n+t, n+2}, 2n)`.
    pub fn dimension_bounds(&self) -> Result<(u64, u64)> {
        self.require_lex_segment()?;
        let n = self.colength();
        if n < 2 {
            return Err(Error::ColengthTooSmall(n));
        }
        Ok(((n + self.t() as u64).max(n + 2), 2 * n))
    }

    /// `ℐ = {i : d_i ≥ 3}` and `𝒥 = {j : d_j ≥ 2}`.
    pub fn special_indices(&self) -> (BTreeSet<usize>, BTreeSet<usize>) {
        let t = self.t();
        let big_i = (1..=t).filter(|&i| self.d_at(i) >= 3).collect();
        let big_j = (1..=t).filter(|&j| self.d_at(j) >= 2).collect();
        (big_i, big_j)
    }

    /// Graded Betti numbers `β₀,ⱼ` of `I₀` itself.
    pub fn lex_betti(&self) -> Result<BTreeMap<u32, usize>> {
        self.require_lex_segment()?;
        let mut out = BTreeMap::new();
        for i in 0..=self.t() {
            *out.entry(self.generator_degree(i)).or_insert(0) += 1;
        }
        Ok(out)
    }

    /// Below-diagonal slots whose entry may have degree exactly one.
    pub fn below_diagonal_linear_slots(&self) -> usize {
        self.below_diagonal().filter(|&(i, j)| self.b(i, j) == 1).count()
    }

    /// Below-diagonal slots forced to zero.
    pub fn below_diagonal_zero_slots(&self) -> usize {
        self.below_diagonal().filter(|&(i, j)| self.b(i, j) < 0).count()
    }

    fn below_diagonal(&self) -> impl Iterator<Item = (usize, usize)> {
        let t = self.t();
        (1..=t).flat_map(move |j| (j + 1..=t + 1).map(move |i| (i, j)))
    }
}

fn h_at(h: &[u64], i: i64) -> i64 {
    if i < 0 {
        0
    } else {
        h.get(i as usize).map_or(0, |&v| v as i64)
    }
}

/// `n + 1 + Σ_{i≥1} h_i (h_{i−1} − h_{i−2})`.
pub fn dimension_formula(n: u64, h: &[u64]) -> i64 {
    n as i64 + 1 + (1..=h.len() as i64).map(|i| h_at(h, i) * (h_at(h, i - 1) - h_at(h, i - 2))).sum::<i64>()
}

/// `1 + Σ_{i≥0} h_i (h_{i−1} − h_{i−2} + 1)`.
pub fn dimension_compact(h: &[u64]) -> i64 {
    1 + (0..=h.len() as i64)
        .map(|i| h_at(h, i) * (h_at(h, i - 1) - h_at(h, i - 2) + 1))
        .sum::<i64>()
}

/// `Σ_{i>t} h_i (h_{i−2} − h_{i−1})`, the number of forced zeros below the
/// diagonal of a lex-segment cell.
pub fn zero_slot_formula(t: usize, h: &[u64]) -> i64 {
    (t as i64 + 1..=h.len() as i64)
        .map(|i| h_at(h, i) * (h_at(h, i - 2) - h_at(h, i - 1)))
        .sum()
}

/// Every lex-segment m-vector with colength at most `max_n`.
pub fn lex_segment_cells(max_n: u64) -> Vec<MonomialCell> {
    fn extend(m: &mut Vec<u32>, left: u64, out: &mut Vec<MonomialCell>) {
        if m.len() >= 2 {
            out.push(MonomialCell { m: m.clone() });
        }
        let last = *m.last().unwrap();
        let mut next = last + 1;
        while u64::from(next) <= left {
            m.push(next);
            extend(m, left - u64::from(next), out);
            m.pop();
            next += 1;
        }
    }
    let mut out = Vec::new();
    extend(&mut vec![0], max_n, &mut out);
    out
}

/// Every m-vector, lex-segment or not, with colength at most `max_n`.
pub fn all_cells(max_n: u64) -> Vec<MonomialCell> {
    fn extend(m: &mut Vec<u32>, left: u64, out: &mut Vec<MonomialCell>) {
        if m.len() >= 2 {
            out.push(MonomialCell { m: m.clone() });
        }
        let last = *m.last().unwrap();
        let mut next = last.max(1);
        while u64::from(next) <= left {
            m.push(next);
            extend(m, left - u64::from(next), out);
            m.pop();
            next += 1;
        }
    }
    let mut out = Vec::new();
    extend(&mut vec![0], max_n, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex1() -> MonomialCell {
        make_cell(&[0, 5, 7, 11]).unwrap()
    }

    fn ex2() -> MonomialCell {
        make_cell(&[0, 3, 4, 5, 10, 11, 12, 14, 15, 16, 19, 20, 21]).unwrap()
    }

    fn ex3() -> MonomialCell {
        make_cell(&[0, 2, 3, 5]).unwrap()
    }

    #[test]
    fn construction() {
        assert_eq!(ex1().t(), 3);
        assert_eq!(ex1().d(), vec![5, 2, 4]);
        assert!(ex1().is_lex_segment());
        assert_eq!(ex3().d(), vec![2, 1, 2]);
        let c = make_cell(&[0, 1]).unwrap();
        assert_eq!((c.t(), c.colength()), (1, 1));
        for bad in [&[][..], &[0], &[1, 2], &[0, 3, 2], &[0, 0, 1]] {
            assert!(matches!(make_cell(bad), Err(Error::BadMVector(_))), "{bad:?}");
        }
        assert_eq!(parse_m_vector("0, 5,7,11").unwrap(), ex1());
        assert!(parse_m_vector("0,a").is_err());
        assert!(!make_cell(&[0, 2, 2]).unwrap().is_lex_segment());
    }

    #[test]
    fn hilbert_functions() {
        assert_eq!(ex1().hilbert_function(), vec![1, 2, 3, 3, 3, 3, 3, 2, 1, 1, 1]);
        let mut h2: Vec<u64> = (1..=12).collect();
        h2.extend([12, 12, 9, 9, 9, 9, 6, 3, 3]);
        assert_eq!(ex2().hilbert_function(), h2);
        assert_eq!(make_cell(&[0, 1]).unwrap().hilbert_function(), vec![1]);
        for c in all_cells(14) {
            let h = c.hilbert_function();
            assert_eq!(h.iter().sum::<u64>(), c.colength());
            if !c.is_lex_segment() {
                continue;
            }
            for (i, &v) in h.iter().enumerate().take(c.t()) {
                assert_eq!(v, i as u64 + 1);
            }
        }
    }

    #[test]
    fn bound_matrices() {
        assert_eq!(ex1().bound_matrix(), vec![vec![4, 4, 4], vec![1, 1, 1], vec![0, 1, 3], vec![-3, -2, 1]]);
        assert_eq!(ex3().bound_matrix(), vec![vec![1, 1, 1], vec![1, 0, 0], vec![1, 0, 1], vec![0, 0, 1]]);
        let c = make_cell(&[0, 1]).unwrap();
        assert_eq!(c.degree_matrix(), vec![vec![1], vec![1]]);
        assert_eq!(c.bound_matrix(), vec![vec![0], vec![0]]);
    }

    #[test]
    fn dimensions() {
        assert_eq!(ex2().dimension().unwrap(), 195);
        assert_eq!(ex1().dimension().unwrap(), 30);
        assert_eq!(make_cell(&[0, 1]).unwrap().dimension().unwrap(), 2);
        assert_eq!(ex1().dimension_bounds().unwrap(), (26, 46));
        assert_eq!(ex2().colength(), 150);
        assert_eq!(ex2().dimension_bounds().unwrap(), (162, 300));
        let c = make_cell(&[0, 2]).unwrap();
        assert_eq!(c.dimension_bounds().unwrap(), (4, 4));
        assert_eq!(c.dimension().unwrap(), 4);
        assert_eq!(make_cell(&[0, 1]).unwrap().dimension_bounds(), Err(Error::ColengthTooSmall(1)));
        assert!(matches!(make_cell(&[0, 2, 2]).unwrap().dimension(), Err(Error::NotLexSegment(_))));
    }

    #[test]
    fn special_index_sets() {
        let (i, j) = ex1().special_indices();
        assert_eq!(i, BTreeSet::from([1, 3]));
        assert_eq!(j, BTreeSet::from([1, 2, 3]));
        let (i, j) = ex2().special_indices();
        assert_eq!(i, BTreeSet::from([1, 4, 10]));
        assert_eq!(j, BTreeSet::from([1, 4, 7, 10]));
        let (i, j) = make_cell(&[0, 1, 2, 3]).unwrap().special_indices();
        assert!(i.is_empty() && j.is_empty());
    }

    #[test]
    fn lex_betti_numbers() {
        assert_eq!(ex1().lex_betti().unwrap(), BTreeMap::from([(3, 1), (7, 1), (8, 1), (11, 1)]));
        assert_eq!(ex3().lex_betti().unwrap(), BTreeMap::from([(3, 1), (4, 2), (5, 1)]));
        assert_eq!(make_cell(&[0, 1]).unwrap().lex_betti().unwrap(), BTreeMap::from([(1, 2)]));
        for c in lex_segment_cells(16) {
            let h = c.hilbert_function();
            let beta = c.lex_betti().unwrap();
            let t = c.t();
            let get = |j: usize| *beta.get(&(j as u32)).unwrap_or(&0) as i64;
            assert_eq!(get(t), h_at(&h, t as i64 - 1) - h_at(&h, t as i64) + 1, "{:?}", c.m());
            for i in t..=h.len() + 1 {
                let tail: i64 = beta.iter().filter(|(&j, _)| j as usize > i).map(|(_, &v)| v as i64).sum();
                assert_eq!(tail, h_at(&h, i as i64));
                if i > t {
                    assert_eq!(get(i), h_at(&h, i as i64 - 1) - h_at(&h, i as i64));
                }
            }
        }
    }

    #[test]
    fn below_diagonal_bookkeeping() {
        let c = ex2();
        let h = c.hilbert_function();
        assert_eq!(c.below_diagonal_linear_slots(), 12);
        assert_eq!(c.below_diagonal_zero_slots(), 45);
        assert_eq!(zero_slot_formula(12, &h), 45);
        assert_eq!(ex1().below_diagonal_zero_slots(), 2);
        for c in lex_segment_cells(18) {
            let h = c.hilbert_function();
            assert_eq!(c.below_diagonal_linear_slots() as u64, h_at(&h, c.t() as i64) as u64);
            assert_eq!(c.below_diagonal_zero_slots() as i64, zero_slot_formula(c.t(), &h));
        }
    }

    #[test]
    fn exhaustive_dimension_checks() {
        let cells = lex_segment_cells(25);
        // strictly increasing m ↔ partitions of n into distinct parts
        let mut q = vec![0u64; 26];
        q[0] = 1;
        for part in 1..=25 {
            for n in (part..=25).rev() {
                q[n] += q[n - part];
            }
        }
        assert_eq!(cells.len() as u64, q[1..].iter().sum::<u64>());
        for c in cells {
            let n = c.dimension().unwrap();
            if c.colength() >= 2 {
                let (lo, hi) = c.dimension_bounds().unwrap();
                assert!(lo <= n && n <= hi, "{:?}", c.m());
            }
        }
    }

    #[test]
    fn json_form() {
        let s = serde_json::to_string(&ex3()).unwrap();
        assert_eq!(s, "[0,2,3,5]");
        assert_eq!(serde_json::from_str::<MonomialCell>(&s).unwrap(), ex3());
        assert!(serde_json::from_str::<MonomialCell>("[1,2]").is_err());
    }
}
