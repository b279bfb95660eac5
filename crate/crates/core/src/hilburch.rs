//! Parameter matrices `A`, the Hilbert-Burch matrix `X + A` and the map
//! `A ↦ I_t(X + A)` through signed maximal minors.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cell::MonomialCell;
use crate::error::{Error, Result, SlotViolation};
use crate::field::Field;
use crate::groebner::{normal_form, s_polynomial};
use crate::poly::{BiPoly, Monomial, Poly, UniPoly};

/// A `(t+1)×t` matrix of polynomials in `y` obeying the degree bounds of
/// its cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamMatrix {
    cell: MonomialCell,
    field: Field,
    entries: Vec<Vec<UniPoly>>,
}

/// Generators `f₀, …, f_t` with `in(f_i) = x^{t−i} y^{m_i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealBasis {
    pub cell: MonomialCell,
    pub f: Vec<BiPoly>,
}

fn check_shape<T>(cell: &MonomialCell, rows: &[Vec<T>]) -> Result<()> {
    let t = cell.t();
    if rows.len() != t + 1 || rows.iter().any(|r| r.len() != t) {
        let shape: Vec<usize> = rows.iter().map(Vec::len).collect();
        return Err(Error::BadMatrix(format!("expected {}x{t} entries, got row lengths {shape:?}", t + 1)));
    }
    Ok(())
}

/// Nonzero slots of `entries` whose degree exceeds `bound(i, j)` (1-based).
pub fn bound_violations(entries: &[Vec<UniPoly>], bound: impl Fn(usize, usize) -> i64) -> Vec<SlotViolation> {
    let mut out = Vec::new();
    for (r, row) in entries.iter().enumerate() {
        for (c, a) in row.iter().enumerate() {
            let (i, j) = (r + 1, c + 1);
            let deg = a.degree_or_neg();
            let b = bound(i, j);
            if !a.is_zero() && deg > b {
                out.push(SlotViolation { i, j, degree: deg, bound: b });
            }
        }
    }
    out
}

/// Validates `entries` against the bound matrix of `cell`.
pub fn check_membership(cell: &MonomialCell, field: Field, entries: Vec<Vec<UniPoly>>) -> Result<ParamMatrix> {
    check_shape(cell, &entries)?;
    if let Some(a) = entries.iter().flatten().find(|a| a.field() != field) {
        return Err(Error::FieldMismatch(field.to_string(), a.field().to_string()));
    }
    let violations = bound_violations(&entries, |i, j| cell.b(i, j));
    if !violations.is_empty() {
        return Err(Error::BoundViolation(violations));
    }
    Ok(ParamMatrix { cell: cell.clone(), field, entries })
}

impl ParamMatrix {
    pub fn zero(cell: &MonomialCell, field: Field) -> Self {
        let t = cell.t();
        ParamMatrix {
            cell: cell.clone(),
            field,
            entries: vec![vec![UniPoly::zero(field); t]; t + 1],
        }
    }

    /// Parses entries written in the text grammar, then validates.
    pub fn from_strings(cell: &MonomialCell, field: Field, rows: &[Vec<String>]) -> Result<Self> {
        check_shape(cell, rows)?;
        let entries = rows
            .iter()
            .map(|r| r.iter().map(|s| UniPoly::parse(field, s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        check_membership(cell, field, entries)
    }

    pub fn cell(&self) -> &MonomialCell {
        &self.cell
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn t(&self) -> usize {
        self.cell.t()
    }

    /// `a_{i,j}`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> &UniPoly {
        &self.entries[i - 1][j - 1]
    }

    pub fn rows(&self) -> &[Vec<UniPoly>] {
        &self.entries
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.entries.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect()
    }

    /// `X + A` over `K[x,y]`.
    pub fn hb_matrix(&self) -> Vec<Vec<BiPoly>> {
        let mut m = x_matrix(&self.cell, self.field);
        for (r, row) in self.entries.iter().enumerate() {
            for (c, a) in row.iter().enumerate() {
                m[r][c] = &m[r][c] + &a.to_bivariate();
            }
        }
        m
    }

    /// Free coefficients; there are as many as the dimension of the cell.
    pub fn coefficient_slots(&self) -> Vec<(usize, usize, u32)> {
        coefficient_slots(&self.cell)
    }

    pub fn to_json(&self) -> ParamMatrixJson {
        ParamMatrixJson {
            m: self.cell.m().to_vec(),
            index_base: 1,
            entries: self.to_strings(),
            field: Some(self.field),
        }
    }
}

/// `(i, j, k)`: every coefficient of `y^k` allowed in slot `(i, j)`, in
/// row-major order with increasing `k`.
pub fn coefficient_slots(cell: &MonomialCell) -> Vec<(usize, usize, u32)> {
    let t = cell.t();
    let mut out = Vec::new();
    for i in 1..=t + 1 {
        for j in 1..=t {
            let b = cell.b(i, j);
            for k in 0..=b {
                out.push((i, j, k as u32));
            }
        }
    }
    out
}

/// Serialized form: `{"m":[0,2,3,5],"index_base":1,"entries":[[…]],"field":…}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamMatrixJson {
    pub m: Vec<u32>,
    pub index_base: u32,
    pub entries: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<Field>,
}

impl ParamMatrixJson {
    /// `field` overrides the field stored in the document; ℚ when neither
    /// is given.
    pub fn into_matrix(self, field: Option<Field>) -> Result<ParamMatrix> {
        if self.index_base != 1 {
            return Err(Error::BadMatrix(format!("index_base must be 1, got {}", self.index_base)));
        }
        let cell = crate::cell::make_cell(&self.m)?;
        let field = field.or(self.field).unwrap_or(Field::Rationals);
        ParamMatrix::from_strings(&cell, field, &self.entries)
    }
}

/// The matrix `X`: `y^{d_i}` at `(i,i)`, `−x` at `(i+1,i)`.
pub fn x_matrix(cell: &MonomialCell, field: Field) -> Vec<Vec<BiPoly>> {
    let t = cell.t();
    let mut m = vec![vec![BiPoly::zero(field); t]; t + 1];
    for i in 1..=t {
        m[i - 1][i - 1] = BiPoly::monomial(field, [0, cell.d_at(i)]);
        m[i][i - 1] = BiPoly::term(Monomial::new([1, 0]), -field.one());
    }
    m
}

/// Cofactor expansion along columns left to right, memoized on the set of
/// rows still in play.
struct MinorTable<'a, const N: usize> {
    m: &'a [Vec<Poly<N>>],
    memo: HashMap<u64, Poly<N>>,
}

impl<'a, const N: usize> MinorTable<'a, N> {
    fn new(m: &'a [Vec<Poly<N>>]) -> Self {
        MinorTable { m, memo: HashMap::new() }
    }

    /// Determinant of the rows in `mask` against the last `popcount(mask)`
    /// columns.
    fn det(&mut self, mask: u64) -> Poly<N> {
        let k = mask.count_ones() as usize;
        let cols = self.m.first().map_or(0, Vec::len);
        let field = self.m[0][0].field();
        if k == 0 {
            return Poly::one(field);
        }
        if let Some(v) = self.memo.get(&mask) {
            return v.clone();
        }
        let c = cols - k;
        let mut acc = Poly::zero(field);
        let mut pos = 0;
        for r in 0..self.m.len() {
            if mask & (1 << r) == 0 {
                continue;
            }
            let entry = &self.m[r][c];
            if !entry.is_zero() {
                let sub = self.det(mask & !(1 << r));
                let term = entry * &sub;
                acc = if pos % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            pos += 1;
        }
        self.memo.insert(mask, acc.clone());
        acc
    }
}

/// Exact determinant of a square matrix.
pub fn determinant<const N: usize>(m: &[Vec<Poly<N>>]) -> Result<Poly<N>> {
    let n = m.len();
    if n == 0 || m.iter().any(|r| r.len() != n) || n > 63 {
        return Err(Error::BadMatrix("determinant needs a nonempty square matrix".into()));
    }
    Ok(MinorTable::new(m).det((1u64 << n) - 1))
}

/// All maximal minors of a `(t+1)×t` matrix; entry `k` deletes row `k+1`.
/// The sub-minor table is shared between them.
pub fn maximal_minors<const N: usize>(m: &[Vec<Poly<N>>]) -> Result<Vec<Poly<N>>> {
    let rows = m.len();
    if !(2..=63).contains(&rows) || m.iter().any(|r| r.len() != rows - 1) {
        return Err(Error::BadMatrix("maximal minors need a (t+1)xt matrix".into()));
    }
    let full = (1u64 << rows) - 1;
    let mut table = MinorTable::new(m);
    Ok((0..rows).map(|k| table.det(full & !(1 << k))).collect())
}

/// `f_i = (−1)^{t−i} det([X+A]_{i+1})`, `i = 0..t`, the sign making each
/// `f_i` monic.
pub fn signed_minors<const N: usize>(m: &[Vec<Poly<N>>]) -> Result<Vec<Poly<N>>> {
    let t = m.len() - 1;
    let minors = maximal_minors(m)?;
    Ok(minors.into_iter().enumerate().map(|(i, d)| if (t - i).is_multiple_of(2) { d } else { -d }).collect())
}

/// `ψ(A)`.
pub fn psi(a: &ParamMatrix) -> Result<IdealBasis> {
    let f = signed_minors(&a.hb_matrix())?;
    let basis = IdealBasis { cell: a.cell.clone(), f };
    basis.check_leading_terms()?;
    Ok(basis)
}

/// Whether every column of `m` is a syzygy of `f`: `Σ_j f_j m[j][c] = 0`.
pub fn is_syzygy_matrix<const N: usize>(f: &[Poly<N>], m: &[Vec<Poly<N>>]) -> bool {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols).all(|c| {
        let mut acc = Poly::zero(f[0].field());
        for (fj, row) in f.iter().zip(m) {
            acc = &acc + &(fj * &row[c]);
        }
        acc.is_zero()
    })
}

impl IdealBasis {
    /// Fails unless `in(f_i) = x^{t−i} y^{m_i}` with coefficient 1.
    pub fn check_leading_terms(&self) -> Result<()> {
        if self.f.len() != self.cell.t() + 1 {
            return Err(Error::BadMatrix(format!("expected {} generators, got {}", self.cell.t() + 1, self.f.len())));
        }
        for (i, f) in self.f.iter().enumerate() {
            let expected = self.cell.generator(i);
            let ok = matches!(f.leading_term(), Some((m, c)) if *m == expected && c.is_one());
            if !ok {
                let found = match f.leading_term() {
                    Some((m, c)) => BiPoly::term(*m, c.clone()).to_string(),
                    None => "0".into(),
                };
                return Err(Error::LeadingTermMismatch { index: i, expected: expected.to_string(), found });
            }
        }
        Ok(())
    }

    /// `y^{d_i} f_{i−1} − x f_i` for `i = 1..=t`.
    pub fn critical_pairs(&self) -> Vec<BiPoly> {
        let one = self.f[0].field().one();
        (1..=self.cell.t())
            .map(|i| {
                let mut s = self.f[i - 1].mul_term(&Monomial::new([0, self.cell.d_at(i)]), &one);
                s.sub_mul_term(&Monomial::new([1, 0]), &one, &self.f[i]);
                s
            })
            .collect()
    }
}

/// Certifies that `f₀..f_t` is a Gröbner basis by reducing the `t`
/// S-polynomials of consecutive generators.
pub fn verify_groebner_property(basis: &IdealBasis) -> Result<bool> {
    basis.check_leading_terms()?;
    for i in 1..=basis.cell.t() {
        let s = s_polynomial(&basis.f[i - 1], &basis.f[i])?;
        if !normal_form(&s, &basis.f).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Draws a random element of the cell: every admissible coefficient is
/// uniform in `𝔽_p`, or a uniform integer in `[−9, 9]` over ℚ.
pub fn sample(cell: &MonomialCell, field: Field, seed: u64) -> ParamMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let t = cell.t();
    let mut entries = vec![vec![UniPoly::zero(field); t]; t + 1];
    for (i, j, k) in coefficient_slots(cell) {
        let c = match field {
            Field::Rationals => field.from_i64(rng.gen_range(-9..=9)),
            Field::Prime(p) => field.from_u64(rng.gen_range(0..p)),
        };
        entries[i - 1][j - 1].add_term(Monomial::new([k]), &c);
    }
    ParamMatrix { cell: cell.clone(), field, entries }
}
