//! Lifting a cell to homogeneous ideals of `K[x,y,z]`.

use crate::error::{Error, Result};
use crate::groebner::{buchberger, is_groebner};
use crate::hilburch::{psi, signed_minors, ParamMatrix};
use crate::poly::{BiPoly, Monomial, TriPoly};

/// `A^hom`: entry `(i,j)` is `Σ_k c_k y^k z^{u_{i,j}−k}` for
/// `a_{i,j} = Σ_k c_k y^k`, so every entry of `X + A^hom` is homogeneous of
/// degree `u_{i,j}`.
pub fn homogenize_matrix(a: &ParamMatrix) -> Vec<Vec<TriPoly>> {
    let cell = a.cell();
    let t = cell.t();
    (1..=t + 1)
        .map(|i| {
            (1..=t)
                .map(|j| {
                    let u = cell.u(i, j) as u32;
                    TriPoly::from_terms(
                        a.field(),
                        a.entry(i, j).terms().map(|(m, c)| (Monomial::new([0, m.0[0], u - m.0[0]]), c.clone())),
                    )
                })
                .collect()
        })
        .collect()
}

/// `X + A^hom`.
pub fn hom_hb_matrix(a: &ParamMatrix) -> Vec<Vec<TriPoly>> {
    let mut m = homogenize_matrix(a);
    let field = a.field();
    for i in 1..=a.t() {
        m[i - 1][i - 1] = &m[i - 1][i - 1] + &TriPoly::monomial(field, [0, a.cell().d_at(i), 0]);
        m[i][i - 1] = &m[i][i - 1] - &TriPoly::monomial(field, [1, 0, 0]);
    }
    m
}

/// `ψ̄(A) = (f₀^hom, …, f_t^hom)`.
pub fn psi_bar(a: &ParamMatrix) -> Result<Vec<TriPoly>> {
    a.cell().require_lex_segment()?;
    psi(a)?.f.iter().map(BiPoly::homogenize).collect()
}

/// Signed maximal minors of `X + A^hom`, computed directly in three
/// variables.
pub fn psi_bar_direct(a: &ParamMatrix) -> Result<Vec<TriPoly>> {
    signed_minors(&hom_hb_matrix(a))
}

/// Whether no minimal generator of the initial ideal of the homogeneous
/// ideal spanned by `basis` involves `z`.
pub fn z_regular(basis: &[TriPoly]) -> Result<bool> {
    if let Some(g) = basis.iter().find(|g| !g.is_homogeneous()) {
        return Err(Error::NotHomogeneous(g.to_string()));
    }
    let gb = buchberger(basis)?;
    Ok(gb.initial_ideal().iter().all(|m| m.0[2] == 0))
}

/// Dehomogenizes every element of a homogeneous Gröbner basis; the result
/// is a Gröbner basis of the dehomogenized ideal.
pub fn ideal_dehomogenize(gb: &[TriPoly]) -> Result<Vec<BiPoly>> {
    if let Some(g) = gb.iter().find(|g| !g.is_homogeneous()) {
        return Err(Error::NotHomogeneous(g.to_string()));
    }
    if !is_groebner(gb) {
        return Err(Error::NotGroebner("input is not a Gröbner basis".into()));
    }
    Ok(gb.iter().map(TriPoly::dehomogenize).collect())
}

/// Homogenizes every element of a Gröbner basis; the result is a Gröbner
/// basis of the homogenized ideal.
pub fn ideal_homogenize(gb: &[BiPoly]) -> Result<Vec<TriPoly>> {
    if !is_groebner(gb) {
        return Err(Error::NotGroebner("input is not a Gröbner basis".into()));
    }
    gb.iter().filter(|g| !g.is_zero()).map(BiPoly::homogenize).collect()
}
