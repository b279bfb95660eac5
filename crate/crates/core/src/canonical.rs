//! From generators of an ideal with initial ideal `I₀` back to the matrix
//! `A` with `I = I_t(X + A)`.
//!
//! The pipeline is: normalize a Gröbner basis `f₀..f_t`, read a syzygy
//! matrix off the reductions of `y^{d_i} f_{i−1} − x f_i`, then shrink
//! entries by reduction moves until every degree bound holds.

use crate::cell::{make_cell, MonomialCell};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{buchberger, divide, minimal_monomials, normal_form, GroebnerBasis};
use crate::hilburch::{bound_violations, check_membership, psi, x_matrix, IdealBasis, ParamMatrix};
use crate::poly::{BiPoly, Monomial, UniPoly};

/// The cell whose monomial ideal is `in(⟨gens⟩)`.
pub fn infer_cell(gens: &[BiPoly]) -> Result<MonomialCell> {
    let gb = buchberger(gens)?;
    cell_of_initial_ideal(&gb.initial_ideal())
}

fn cell_of_initial_ideal(lead: &[Monomial<2>]) -> Result<MonomialCell> {
    let not_artinian = || Error::BadMVector(format!("initial ideal {} has infinite colength or is the unit ideal", show(lead)));
    let t = lead.iter().filter(|m| m.0[1] == 0).map(|m| m.0[0]).min().ok_or_else(not_artinian)?;
    let m = (0..=t)
        .map(|i| {
            let a = t - i;
            lead.iter().filter(|g| g.0[0] <= a).map(|g| g.0[1]).min().ok_or_else(not_artinian)
        })
        .collect::<Result<Vec<u32>>>()?;
    make_cell(&m).map_err(|_| not_artinian())
}

fn show(monos: &[Monomial<2>]) -> String {
    monos.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn wrong_initial_ideal(cell: &MonomialCell, found: &[Monomial<2>]) -> Error {
    Error::WrongInitialIdeal {
        expected: cell.minimal_generators().iter().map(ToString::to_string).collect(),
        found: found.iter().map(ToString::to_string).collect(),
    }
}

fn same_monomial_ideal(a: &[Monomial<2>], b: &[Monomial<2>]) -> bool {
    minimal_monomials(a) == minimal_monomials(b)
}

/// Normalizes generators to `f₀..f_t` with `in(f_i) = x^{t−i}y^{m_i}`, each
/// monic, and with no monomial divisible by `x^t` outside `f₀`.
///
/// The generators themselves are used when their leading terms already
/// generate `I₀`; otherwise the reduced Gröbner basis is.
pub fn prepare_basis(gens: &[BiPoly], cell: &MonomialCell) -> Result<IdealBasis> {
    let gb = buchberger(gens)?;
    prepare_with(gens, &gb, cell)
}

fn prepare_with(gens: &[BiPoly], gb: &GroebnerBasis<2>, cell: &MonomialCell) -> Result<IdealBasis> {
    let expected = cell.minimal_generators();
    let found = gb.initial_ideal();
    if !same_monomial_ideal(&found, &expected) {
        return Err(wrong_initial_ideal(cell, &found));
    }
    let own: Vec<BiPoly> = gens.iter().filter(|g| !g.is_zero()).map(BiPoly::monic).collect();
    let own_leads: Vec<Monomial<2>> = own.iter().filter_map(BiPoly::leading_monomial).collect();
    let working: Vec<BiPoly> = if same_monomial_ideal(&own_leads, &expected) { own } else { gb.elements().to_vec() };

    let field = gb.field();
    let one = field.one();
    let t = cell.t();
    let mut f = Vec::with_capacity(t + 1);
    for i in 0..=t {
        let target = cell.generator(i);
        let exact = working.iter().find(|g| g.leading_monomial() == Some(target));
        let g = match exact {
            Some(g) => g.clone(),
            None => {
                let g = working
                    .iter()
                    .find(|g| g.leading_monomial().is_some_and(|m| m.divides(&target)))
                    .ok_or_else(|| wrong_initial_ideal(cell, &found))?;
                let shift = target.checked_div(&g.leading_monomial().unwrap()).unwrap();
                g.mul_term(&shift, &one)
            }
        };
        f.push(g.monic());
    }
    let xt = Monomial::new([t as u32, 0]);
    for i in 1..=t {
        loop {
            let hit = f[i].terms().find(|(m, _)| xt.divides(m)).map(|(m, c)| (*m, c.clone()));
            let Some((m, c)) = hit else { break };
            let shift = m.checked_div(&xt).unwrap();
            let f0 = f[0].clone();
            f[i].sub_mul_term(&shift, &c, &f0);
        }
    }
    let basis = IdealBasis { cell: cell.clone(), f };
    basis.check_leading_terms()?;
    Ok(basis)
}

/// `X + A_raw` during canonicalization; `A_raw` may exceed the final
/// bounds but stays within the looser raw bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawSyzygyMatrix {
    cell: MonomialCell,
    field: Field,
    m: Vec<Vec<BiPoly>>,
    x: Vec<Vec<BiPoly>>,
}

impl RawSyzygyMatrix {
    pub fn cell(&self) -> &MonomialCell {
        &self.cell
    }

    /// The full matrix `X + A`, 0-based.
    pub fn matrix(&self) -> &[Vec<BiPoly>] {
        &self.m
    }

    /// `a_{i,j}`, 1-based.
    pub fn a(&self, i: usize, j: usize) -> Result<UniPoly> {
        let diff = &self.m[i - 1][j - 1] - &self.x[i - 1][j - 1];
        diff.to_univariate()
            .ok_or_else(|| Error::InternalReductionFailure(format!("entry ({i},{j}) of X+A is {} and carries a stray x", self.m[i - 1][j - 1])))
    }

    pub fn entries(&self) -> Result<Vec<Vec<UniPoly>>> {
        let t = self.cell.t();
        (1..=t + 1).map(|i| (1..=t).map(|j| self.a(i, j)).collect()).collect()
    }

    fn from_entries(cell: &MonomialCell, field: Field, a: &[Vec<UniPoly>]) -> Self {
        let x = x_matrix(cell, field);
        let m = x
            .iter()
            .zip(a)
            .map(|(xr, ar)| xr.iter().zip(ar).map(|(xe, ae)| xe + &ae.to_bivariate()).collect())
            .collect();
        RawSyzygyMatrix { cell: cell.clone(), field, m, x }
    }

    /// Checks the raw degree bounds and the shape of `X`.
    pub fn check_raw_bounds(&self) -> Result<()> {
        let entries = self.entries()?;
        let v = bound_violations(&entries, |i, j| self.cell.grade_bound(i, j));
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::InternalReductionFailure(format!(
                "raw degree bounds broken: {}",
                v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
            )))
        }
    }

    /// First slot breaking the final bounds, scanning blocks of growing size;
    /// within a block the last row goes right to left, then the last column
    /// top to bottom.
    pub fn first_violation(&self) -> Result<Option<(usize, usize)>> {
        let t = self.cell.t();
        for k in 1..=t {
            let row = k + 1;
            for j in (1..=k).rev() {
                let a = self.a(row, j)?;
                if !a.is_zero() && a.degree_or_neg() > self.cell.b(row, j) {
                    return Ok(Some((row, j)));
                }
            }
            for i in 1..=k {
                let a = self.a(i, k)?;
                if !a.is_zero() && a.degree_or_neg() > self.cell.b(i, k) {
                    return Ok(Some((i, k)));
                }
            }
        }
        Ok(None)
    }
}

/// Column `i` records `y^{d_i} f_{i−1} − x f_i − Σ_j q_j f_j = 0`, where the
/// `q_j` are the quotients of dividing the left side by `f₀..f_t`.
pub fn extract_syzygies(basis: &IdealBasis) -> Result<RawSyzygyMatrix> {
    let cell = &basis.cell;
    let t = cell.t();
    let field = basis.f[0].field();
    let mut a = vec![vec![UniPoly::zero(field); t]; t + 1];
    for (c, s) in basis.critical_pairs().iter().enumerate() {
        let div = divide(s, &basis.f);
        if !div.remainder.is_zero() {
            return Err(Error::InternalReductionFailure(format!(
                "S-polynomial {} leaves remainder {}",
                c + 1,
                div.remainder
            )));
        }
        for (j, q) in div.quotients.iter().enumerate() {
            let q = q.to_univariate().ok_or_else(|| {
                Error::InternalReductionFailure(format!("quotient {q} of column {} involves x", c + 1))
            })?;
            a[j][c] = -q;
        }
    }
    let raw = RawSyzygyMatrix::from_entries(cell, field, &a);
    raw.check_raw_bounds()?;
    Ok(raw)
}

fn add_scaled_row(m: &mut [Vec<BiPoly>], dst: usize, q: &BiPoly, src: usize) {
    let src_row = m[src].clone();
    for (d, s) in m[dst].iter_mut().zip(&src_row) {
        *d = &*d + &(q * s);
    }
}

fn add_scaled_col(m: &mut [Vec<BiPoly>], dst: usize, q: &BiPoly, src: usize) {
    for row in m.iter_mut() {
        let s = row[src].clone();
        row[dst] = &row[dst] + &(q * &s);
    }
}

/// The move `Red(i, j)` (1-based). Above the diagonal the entry is divided
/// by the pivot at `(i, i)`, below it by the pivot at `(j, j)`; a paired
/// row or column operation cancels the multiple of `x` this creates.
pub fn reduction_move(raw: &mut RawSyzygyMatrix, i: usize, j: usize) -> Result<()> {
    let t = raw.cell.t();
    if i == 0 || j == 0 || i > t + 1 || j > t || i == j {
        return Err(Error::MoveNotApplicable { i, j, reason: "is not an off-diagonal slot".into() });
    }
    let p = if i < j { i } else { j };
    let d = raw.cell.d_at(p);
    let entry = raw.a(i, j)?;
    if entry.degree_or_neg() < i64::from(d) {
        return Err(Error::MoveNotApplicable {
            i,
            j,
            reason: format!("entry {entry} already has degree below {d}"),
        });
    }
    let pivot_tail = raw.a(p, p)?;
    if pivot_tail.degree_or_neg() >= i64::from(d) {
        return Err(Error::MoveNotApplicable { i, j, reason: format!("pivot tail {pivot_tail} has degree ≥ {d}") });
    }
    let pivot = &UniPoly::monomial(raw.field, [d]) + &pivot_tail;
    let (q, _) = entry.div_rem(&pivot)?;
    let q = q.to_bivariate();
    let neg_q = -&q;
    let m = &mut raw.m;
    if i < j {
        add_scaled_col(m, j - 1, &neg_q, i - 1);
        add_scaled_row(m, i, &q, j);
    } else {
        add_scaled_row(m, i - 1, &neg_q, j - 1);
        if j >= 2 {
            add_scaled_col(m, j - 2, &q, i - 2);
        }
    }
    Ok(())
}

/// Outcome of canonicalization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Canonical {
    pub matrix: ParamMatrix,
    /// `f₀..f_t` after preparation, before any move.
    pub prepared: IdealBasis,
    /// Moves applied, in order.
    pub moves: Vec<(usize, usize)>,
}

/// Move budget `10·(t+1)·t·(max raw bound + 1)`.
pub fn move_cap(cell: &MonomialCell) -> usize {
    let t = cell.t();
    let top = (1..=t + 1)
        .flat_map(|i| (1..=t).map(move |j| (i, j)))
        .map(|(i, j)| cell.grade_bound(i, j))
        .max()
        .unwrap_or(0)
        .max(0) as usize;
    10 * (t + 1) * t * (top + 1)
}

/// The matrix `A` in the cell of `cell` whose maximal minors generate
/// `⟨gens⟩`.
pub fn canonicalize(gens: &[BiPoly], cell: &MonomialCell) -> Result<Canonical> {
    canonicalize_traced(gens, cell, |_, _| {})
}

/// As [`canonicalize`], calling `observe` on the raw matrix before the
/// first move and after every move.
pub fn canonicalize_traced(
    gens: &[BiPoly],
    cell: &MonomialCell,
    mut observe: impl FnMut(&RawSyzygyMatrix, Option<(usize, usize)>),
) -> Result<Canonical> {
    let gb = buchberger(gens)?;
    let prepared = prepare_with(gens, &gb, cell)?;
    let mut raw = extract_syzygies(&prepared)?;
    observe(&raw, None);
    let cap = move_cap(cell);
    let mut moves = Vec::new();
    while let Some((i, j)) = raw.first_violation()? {
        if moves.len() >= cap {
            return Err(Error::NonTerminationGuard { moves: moves.len(), cap });
        }
        reduction_move(&mut raw, i, j)?;
        raw.check_raw_bounds()?;
        moves.push((i, j));
        observe(&raw, Some((i, j)));
    }
    let entries = raw.entries()?;
    let matrix = check_membership(cell, gb.field(), entries)
        .map_err(|e| Error::InternalReductionFailure(format!("final matrix out of bounds: {e}")))?;
    let image = psi(&matrix).map_err(|e| Error::InternalReductionFailure(format!("final matrix: {e}")))?;
    let forward_ok = image.f.iter().all(|f| gb.contains(f));
    let backward_ok = gb.elements().iter().all(|g| normal_form(g, &image.f).is_zero());
    if !(forward_ok && backward_ok) {
        return Err(Error::InternalReductionFailure("maximal minors generate a different ideal".into()));
    }
    Ok(Canonical { matrix, prepared, moves })
}
