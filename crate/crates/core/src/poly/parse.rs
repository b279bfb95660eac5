use super::{variable_names, Monomial, Poly};
use crate::error::{Error, Result};
use crate::field::Field;

/// Parses `term (('+'|'-') term)*` where a term is an optional scalar
/// followed by `*`-separated powers of variables. Whitespace is ignored.
pub(super) fn parse_poly<const N: usize>(field: Field, input: &str) -> Result<Poly<N>> {
    let bad = |reason: String| Error::Parse { input: input.to_string(), reason };
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(bad("empty polynomial".into()));
    }
    let names = variable_names(N);

    // Split into signed terms. A sign directly after '/' or '^' is not a
    // term separator.
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut negative = false;
    let mut current = String::new();
    let mut prev: Option<char> = None;
    for c in s.chars() {
        if (c == '+' || c == '-') && !matches!(prev, Some('/') | Some('^')) {
            if prev.is_some() {
                if current.is_empty() {
                    return Err(bad("empty term".into()));
                }
                terms.push((negative, std::mem::take(&mut current)));
            }
            negative = c == '-';
        } else {
            current.push(c);
        }
        prev = Some(c);
    }
    if current.is_empty() {
        return Err(bad("trailing sign".into()));
    }
    terms.push((negative, current));

    let mut out = Poly::zero(field);
    for (neg, term) in terms {
        let mut coeff = field.one();
        let mut exps = [0u32; N];
        for (k, factor) in term.split('*').enumerate() {
            if factor.is_empty() {
                return Err(bad(format!("empty factor in {term:?}")));
            }
            let first = factor.chars().next().unwrap();
            if first.is_ascii_digit() {
                if k != 0 {
                    return Err(bad(format!("coefficient must lead the term {term:?}")));
                }
                coeff = field.parse_scalar(factor)?;
                continue;
            }
            let (var, exp) = match factor.split_once('^') {
                Some((v, e)) => {
                    let e: u32 = e.parse().map_err(|_| bad(format!("invalid exponent {e:?}")))?;
                    (v, e)
                }
                None => (factor, 1),
            };
            let idx = names
                .iter()
                .position(|n| *n == var)
                .ok_or_else(|| bad(format!("unknown variable {var:?}")))?;
            exps[idx] += exp;
        }
        if neg {
            coeff = -coeff;
        }
        out.add_term(Monomial::new(exps), &coeff);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use crate::error::Error;
    use crate::field::Field;
    use crate::poly::{BiPoly, Monomial, TriPoly, UniPoly};

    #[test]
    fn parses_signed_fractions() {
        let f = BiPoly::parse(Field::Rationals, " -x^2*y + 7/2*y - 3 ").unwrap();
        assert_eq!(f.coeff(&Monomial::new([2, 1])), Field::Rationals.from_i64(-1));
        assert_eq!(f.to_string(), "-x^2*y+7/2*y-3");
        let g = BiPoly::parse(Field::Rationals, "-1/2").unwrap();
        assert_eq!(g.to_string(), "-1/2");
    }

    #[test]
    fn combines_like_terms() {
        let f = BiPoly::parse(Field::Rationals, "x*y + y*x - 2*x*y").unwrap();
        assert!(f.is_zero());
        assert_eq!(f.to_string(), "0");
        assert_eq!(BiPoly::parse(Field::Rationals, "0").unwrap().to_string(), "0");
    }

    #[test]
    fn rejects_bad_input() {
        for s in ["", "x+", "x++y", "2*", "w", "x^a", "x*3", "z"] {
            let r = BiPoly::parse(Field::Rationals, s);
            assert!(matches!(r, Err(Error::Parse { .. })), "{s:?} gave {r:?}");
        }
        assert!(matches!(UniPoly::parse(Field::Rationals, "x"), Err(Error::Parse { .. })));
        assert!(TriPoly::parse(Field::Rationals, "x*z^2").is_ok());
    }

    #[test]
    fn modular_denominators() {
        let f7 = Field::prime(7).unwrap();
        let f = UniPoly::parse(f7, "1/2*y").unwrap();
        assert_eq!(f.to_string(), "4*y");
        assert_eq!(UniPoly::parse(f7, "1/7"), Err(Error::DivisionByZero));
    }
}
