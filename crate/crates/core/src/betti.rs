//! Graded Betti numbers of the homogeneous ideals `ψ̄(A)` read off the
//! constant blocks of `A`, and codimensions of Betti strata.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::cell::MonomialCell;
use crate::error::{Error, Result};
use crate::field::{char_ok, FieldElem};
use crate::hilburch::ParamMatrix;

/// Degrees in the minimal resolution of `I₀S`: `p[k]` is the degree of the
/// generator carrying `f_k`, `q[c-1]` the degree of syzygy column `c`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResolutionDegrees {
    pub p: Vec<u32>,
    pub q: Vec<u32>,
}

pub fn resolution_degrees(cell: &MonomialCell) -> ResolutionDegrees {
    let t = cell.t();
    ResolutionDegrees {
        p: (0..=t).map(|k| cell.generator_degree(k)).collect(),
        q: (1..=t).map(|c| cell.generator_degree(c) + 1).collect(),
    }
}

/// `(w_j, v_j)` as 1-based row and column indices of `A`; row `i` carries
/// `f_{i−1}`.
pub fn index_sets(cell: &MonomialCell, j: u32) -> Result<(Vec<usize>, Vec<usize>)> {
    cell.require_lex_segment()?;
    let deg = resolution_degrees(cell);
    let w = deg.p.iter().enumerate().filter(|(_, &p)| p == j).map(|(k, _)| k + 1).collect();
    let v = deg.q.iter().enumerate().filter(|(_, &q)| q == j).map(|(c, _)| c + 1).collect();
    Ok((w, v))
}

/// Degrees that occur in `p` or `q`.
fn degrees(cell: &MonomialCell) -> BTreeSet<u32> {
    let deg = resolution_degrees(cell);
    deg.p.iter().chain(&deg.q).copied().collect()
}

/// `M_j`: constant terms of `a_{r,c}` for `r ∈ w_j`, `c ∈ v_j`.
pub fn block_matrix(a: &ParamMatrix, j: u32) -> Result<Vec<Vec<FieldElem>>> {
    let cell = a.cell();
    let (w, v) = index_sets(cell, j)?;
    let mut out = Vec::with_capacity(w.len());
    for &r in &w {
        let mut row = Vec::with_capacity(v.len());
        for &c in &v {
            let (u, b) = (cell.u(r, c), cell.b(r, c));
            if u != 0 || b != 0 {
                return Err(Error::BadMatrix(format!("slot ({r},{c}) of M_{j} has u = {u}, b = {b}; expected 0, 0")));
            }
            row.push(a.entry(r, c).coeff_of(0));
        }
        out.push(row);
    }
    Ok(out)
}

/// Rank by Gaussian elimination over the field of the entries.
pub fn rank(m: &[Vec<FieldElem>]) -> usize {
    let mut rows: Vec<Vec<FieldElem>> = m.to_vec();
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&k| !rows[k][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        for k in r + 1..rows.len() {
            if rows[k][c].is_zero() {
                continue;
            }
            let factor = &rows[k][c] * &inv;
            for l in c..cols {
                let delta = &factor * &rows[r][l];
                rows[k][l] -= &delta;
            }
        }
        r += 1;
    }
    r
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    pub beta0: BTreeMap<u32, usize>,
    pub beta1: BTreeMap<u32, usize>,
    pub lex_beta0: BTreeMap<u32, usize>,
    pub lex_beta1: BTreeMap<u32, usize>,
    /// `β₁,ⱼ(J)·β₀,ⱼ(J)` per degree.
    pub per_degree_codim: BTreeMap<u32, i64>,
}

fn nonzero(m: BTreeMap<u32, usize>) -> BTreeMap<u32, usize> {
    m.into_iter().filter(|(_, v)| *v > 0).collect()
}

/// `β₀,ⱼ = #w_j − rank M_j` and `β₁,ⱼ = #v_j − rank M_j`; degrees with value
/// zero are omitted.
pub fn betti_numbers(a: &ParamMatrix) -> Result<BettiTable> {
    let cell = a.cell();
    cell.require_lex_segment()?;
    let h = cell.hilbert_function();
    if !char_ok(a.field(), &h) {
        return Err(Error::CharTooSmall {
            prime: a.field().characteristic(),
            max_degree: h.len().saturating_sub(1),
        });
    }
    let mut beta0 = BTreeMap::new();
    let mut beta1 = BTreeMap::new();
    let mut lex0 = BTreeMap::new();
    let mut lex1 = BTreeMap::new();
    let mut codim = BTreeMap::new();
    for j in degrees(cell) {
        let (w, v) = index_sets(cell, j)?;
        let r = rank(&block_matrix(a, j)?);
        beta0.insert(j, w.len() - r);
        beta1.insert(j, v.len() - r);
        lex0.insert(j, w.len());
        lex1.insert(j, v.len());
        let prod = ((w.len() - r) * (v.len() - r)) as i64;
        if prod > 0 {
            codim.insert(j, prod);
        }
    }
    Ok(BettiTable {
        beta0: nonzero(beta0),
        beta1: nonzero(beta1),
        lex_beta0: nonzero(lex0),
        lex_beta1: nonzero(lex1),
        per_degree_codim: codim,
    })
}

/// Codimension of the locus where `β₀,ⱼ ≥ u`: the rank of `M_j` drops to
/// `#w_j − u`, which cuts out `(#v_j − #w_j + u)·u` conditions.
pub fn strata_codim(cell: &MonomialCell, j: u32, u: i64) -> Result<i64> {
    let (w, v) = index_sets(cell, j)?;
    let (b0, b1) = (w.len() as i64, v.len() as i64);
    let lower = (b0 - b1).max(0);
    if u < lower || u > b0 {
        return Err(Error::EmptyStratum { j, u, lower, upper: b0 });
    }
    Ok((b1 - b0 + u) * u)
}

/// Sum of [`strata_codim`] over the listed degrees.
pub fn strata_codim_total(cell: &MonomialCell, beta: &BTreeMap<u32, i64>) -> Result<i64> {
    beta.iter().map(|(&j, &u)| strata_codim(cell, j, u)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cell::{lex_segment_cells, make_cell};
    use crate::field::Field;
    use crate::groebner::minimalize_homogeneous;
    use crate::hilburch::{check_membership, sample};
    use crate::poly::UniPoly;
    use crate::projective::psi_bar;

    fn ex1() -> MonomialCell {
        make_cell(&[0, 5, 7, 11]).unwrap()
    }

    fn with_entry(a: &ParamMatrix, i: usize, j: usize, value: UniPoly) -> ParamMatrix {
        let mut rows = a.rows().to_vec();
        rows[i - 1][j - 1] = value;
        check_membership(a.cell(), a.field(), rows).unwrap()
    }

    #[test]
    fn degrees_and_index_sets() {
        let d = resolution_degrees(&ex1());
        assert_eq!(d.p, vec![3, 7, 8, 11]);
        assert_eq!(d.q, vec![8, 9, 12]);
        assert_eq!(index_sets(&ex1(), 8).unwrap(), (vec![3], vec![1]));
        assert_eq!(index_sets(&ex1(), 5).unwrap(), (vec![], vec![]));
        let c3 = make_cell(&[0, 2, 3, 5]).unwrap();
        let d = resolution_degrees(&c3);
        assert_eq!(d.p, vec![3, 4, 4, 5]);
        assert_eq!(d.q, vec![5, 5, 6]);
        assert_eq!(index_sets(&c3, 4).unwrap(), (vec![2, 3], vec![]));
        assert_eq!(index_sets(&c3, 5).unwrap(), (vec![4], vec![1, 2]));
        assert!(matches!(index_sets(&make_cell(&[0, 1, 1]).unwrap(), 2), Err(Error::NotLexSegment(_))));
    }

    #[test]
    fn syzygy_counts_follow_generator_counts() {
        for c in lex_segment_cells(16) {
            let lex = c.lex_betti().unwrap();
            let t = c.t() as u32;
            for j in 0..=40u32 {
                let (_, v) = index_sets(&c, j).unwrap();
                let prev = if j == 0 { 0 } else { *lex.get(&(j - 1)).unwrap_or(&0) };
                let expected = prev - usize::from(j == t + 1);
                assert_eq!(v.len(), expected, "{:?} j={j}", c.m());
            }
        }
    }

    #[test]
    fn ranks() {
        let q = Field::Rationals;
        let e = |v: i64| q.from_i64(v);
        assert_eq!(rank(&[vec![e(1), e(2)], vec![e(2), e(4)]]), 1);
        assert_eq!(rank(&[vec![e(0), e(1)], vec![e(1), e(0)]]), 2);
        assert_eq!(rank(&[vec![e(0)]]), 0);
        assert_eq!(rank(&[]), 0);
        let f5 = Field::prime(5).unwrap();
        assert_eq!(rank(&[vec![f5.from_i64(1), f5.from_i64(2)], vec![f5.from_i64(3), f5.from_i64(1)]]), 1);
    }

    #[test]
    fn example1_targeted() {
        let q = Field::Rationals;
        let zero = ParamMatrix::zero(&ex1(), q);
        let t0 = betti_numbers(&zero).unwrap();
        assert_eq!(t0.beta0, t0.lex_beta0);
        assert_eq!(t0.beta0, BTreeMap::from([(3, 1), (7, 1), (8, 1), (11, 1)]));
        assert_eq!(block_matrix(&zero, 8).unwrap(), vec![vec![q.zero()]]);

        let a = with_entry(&zero, 3, 1, UniPoly::one(q));
        let t1 = betti_numbers(&a).unwrap();
        assert_eq!(t1.beta0, BTreeMap::from([(3, 1), (7, 1), (11, 1)]));
        assert_eq!(minimalize_homogeneous(&psi_bar(&a).unwrap()).unwrap(), t1.beta0);

        let generic = sample(&ex1(), q, 5);
        let cleared = with_entry(&generic, 3, 1, UniPoly::zero(q));
        let t2 = betti_numbers(&cleared).unwrap();
        assert_eq!(t2.beta0.get(&8), Some(&1));
        assert_eq!(minimalize_homogeneous(&psi_bar(&cleared).unwrap()).unwrap(), t2.beta0);
    }

    #[test]
    fn strata() {
        assert_eq!(strata_codim(&ex1(), 8, 1).unwrap(), 1);
        assert_eq!(strata_codim(&ex1(), 8, 0).unwrap(), 0);
        assert!(matches!(strata_codim(&ex1(), 8, 2), Err(Error::EmptyStratum { .. })));
        assert!(matches!(strata_codim(&ex1(), 8, -1), Err(Error::EmptyStratum { .. })));
        let total = strata_codim_total(&ex1(), &BTreeMap::from([(8, 1), (3, 1)])).unwrap();
        assert_eq!(total, 1);
    }

    #[test]
    fn char_check() {
        let f7 = Field::prime(7).unwrap();
        let a = ParamMatrix::zero(&ex1(), f7);
        assert_eq!(betti_numbers(&a), Err(Error::CharTooSmall { prime: 7, max_degree: 10 }));
    }

    #[test]
    fn random_tables_match_oracle() {
        let f = Field::prime(10007).unwrap();
        for (k, c) in lex_segment_cells(10).iter().enumerate() {
            let a = sample(c, f, 500 + k as u64);
            let table = betti_numbers(&a).unwrap();
            for j in degrees(c) {
                let g = |m: &BTreeMap<u32, usize>| *m.get(&j).unwrap_or(&0) as i64;
                assert_eq!(g(&table.beta1) - g(&table.beta0), g(&table.lex_beta1) - g(&table.lex_beta0));
                assert!(g(&table.beta0) <= g(&table.lex_beta0));
                if g(&table.beta0) > 0 {
                    let u = g(&table.beta0);
                    assert_eq!(strata_codim(c, j, u).unwrap(), g(&table.beta1) * u);
                }
            }
            assert_eq!(minimalize_homogeneous(&psi_bar(&a).unwrap()).unwrap(), table.beta0, "{:?}", c.m());
        }
    }
}
