use std::cmp::Ordering;
use std::fmt;

/// Exponent vector of a monomial in `N` variables, ordered by the degree
/// reverse lexicographic order with the first variable largest.
///
/// `N = 1` is the ring `K[y]`, `N = 2` is `K[x,y]` and `N = 3` is `K[x,y,z]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial<const N: usize>(pub [u32; N]);

impl<const N: usize> Monomial<N> {
    pub const fn new(exps: [u32; N]) -> Self {
        Monomial(exps)
    }

    pub const fn one() -> Self {
        Monomial([0; N])
    }

    pub fn exponents(&self) -> &[u32; N] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// `self | other`
    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other`, if `other` divides `self`.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        let mut out = [0; N];
        for k in 0..N {
            out[k] = self.0[k].checked_sub(other.0[k])?;
        }
        Some(Monomial(out))
    }

    pub fn lcm(&self, other: &Self) -> Self {
        let mut out = [0; N];
        for k in 0..N {
            out[k] = self.0[k].max(other.0[k]);
        }
        Monomial(out)
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }
}

impl<const N: usize> std::ops::Mul for Monomial<N> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = self.0;
        for k in 0..N {
            out[k] += rhs.0[k];
        }
        Monomial(out)
    }
}

impl<const N: usize> Ord for Monomial<N> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            // Same degree: the smaller exponent in the last differing
            // variable wins.
            for k in (0..N).rev() {
                match self.0[k].cmp(&other.0[k]) {
                    Ordering::Equal => continue,
                    ord => return ord.reverse(),
                }
            }
            Ordering::Equal
        })
    }
}

impl<const N: usize> PartialOrd for Monomial<N> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Variable names for the ring with `N` variables.
pub fn variable_names(n: usize) -> &'static [&'static str] {
    match n {
        1 => &["y"],
        2 => &["x", "y"],
        3 => &["x", "y", "z"],
        _ => panic!("only rings in 1, 2 or 3 variables are supported"),
    }
}

impl<const N: usize> fmt::Display for Monomial<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let names = variable_names(N);
        let mut first = true;
        for (k, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            match e {
                1 => write!(f, "{}", names[k])?,
                _ => write!(f, "{}^{}", names[k], e)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn two_variable_ties() {
        // x^2 y^2 > x y^3: equal degree, smaller y exponent is larger
        assert!(Monomial::new([2, 2]) > Monomial::new([1, 3]));
        assert!(Monomial::new([0, 5]) > Monomial::new([3, 0]));
        assert!(Monomial::new([3, 0]) > Monomial::new([2, 1]));
    }

    #[test]
    fn three_variable_order() {
        // x y z vs y^3: smaller z exponent first
        assert!(Monomial::new([0, 3, 0]) > Monomial::new([1, 1, 1]));
        assert!(Monomial::new([1, 1, 1]) > Monomial::new([0, 2, 1]));
        assert!(Monomial::new([2, 0, 1]) > Monomial::new([1, 1, 1]));
        assert_eq!(Monomial::new([2, 0, 3]).to_string(), "x^2*z^3");
        assert_eq!(Monomial::<3>::one().to_string(), "1");
    }

    fn arb3() -> impl Strategy<Value = Monomial<3>> {
        prop::array::uniform3(0u32..5).prop_map(Monomial::new)
    }

    proptest! {
        #[test]
        fn total_order_laws(a in arb3(), b in arb3(), c in arb3()) {
            prop_assert_eq!(a.cmp(&b), b.cmp(&a).reverse());
            prop_assert_eq!(a.cmp(&b) == Ordering::Equal, a == b);
            if a <= b && b <= c {
                prop_assert!(a <= c);
            }
            if a > b {
                prop_assert!(a * c > b * c);
            }
            prop_assert!(a * c >= a);
        }
    }
}
