//! Exact arithmetic in Z[v, v^{-1}].
//!
//! `v` stands for the square root of the grading parameter `t`, so integer
//! powers of `v` represent half-integer powers of `t` exactly. Coefficients
//! are arbitrary-precision integers. The module also provides the bar
//! involution (`v -> v^{-1}`) and the strictly-positive-part extraction used
//! by the canonical-basis solver.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// An integer Laurent polynomial in the single variable `v`.
///
/// Invariant: no stored coefficient is zero, so equality is exact
/// term-by-term equality.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// The variable `v`.
    pub fn v() -> Self {
        Self::monomial(1, 1)
    }

    /// `coeff * v^exp`.
    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let coeff = coeff.into();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    /// Constant polynomial.
    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, c)
    }

    /// Build from `(exponent, coefficient)` pairs; repeated exponents are summed.
    pub fn from_pairs<I, C>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (e, c) in pairs {
            out.add_term(e, c.into());
        }
        out
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Number of nonzero terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `v^exp` (zero if absent).
    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Coefficient of `v^0`.
    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    /// Iterate over `(exponent, coefficient)` in increasing exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// The bar involution: substitutes `v -> v^{-1}`, i.e. negates every exponent.
    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Sum of the terms with strictly positive exponent.
    pub fn pos_part(&self) -> Self {
        Self {
            terms: self
                .terms
                .range(1..)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Evaluate at `v = 1`: the sum of all coefficients.
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// True when every term has a strictly positive exponent, i.e. the
    /// polynomial lies in `v Z[v]`.
    pub fn in_v_times_poly(&self) -> bool {
        self.terms.keys().all(|e| *e > 0)
    }

    /// True when `bar(self) == -self`.
    pub fn is_bar_antisymmetric(&self) -> bool {
        self.bar() == -self
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    /// Serialization view: `(exponent, coefficient)` pairs sorted by exponent.
    pub fn to_pairs(&self) -> Vec<(i64, BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c.clone())).collect()
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    /// Renders terms in decreasing exponent order, e.g. `v^2 - v + 1`
    /// or `-v + v^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = abs.is_one();
            match (*e, unit) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "v")?,
                (1, false) => write!(f, "{abs}*v")?,
                (_, true) => write!(f, "v^{e}")?,
                (_, false) => write!(f, "{abs}*v^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lp(pairs: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn ring_ops() {
        // v * v^{-1} = 1
        assert_eq!(&LaurentPoly::v() * &LaurentPoly::monomial(-1, 1), LaurentPoly::one());
        // (v - 1) + 1 = v
        assert_eq!(&lp(&[(1, 1), (0, -1)]) + &LaurentPoly::one(), LaurentPoly::v());
        // (v - v^{-1})(v + v^{-1}) = v^2 - v^{-2}
        assert_eq!(
            &lp(&[(1, 1), (-1, -1)]) * &lp(&[(1, 1), (-1, 1)]),
            lp(&[(2, 1), (-2, -1)])
        );
    }

    #[test]
    fn bar_examples() {
        assert_eq!(LaurentPoly::v().bar(), LaurentPoly::monomial(-1, 1));
        assert_eq!(LaurentPoly::constant(3).bar(), LaurentPoly::constant(3));
        assert_eq!(lp(&[(1, 1), (-1, -1)]).bar(), lp(&[(-1, 1), (1, -1)]));
    }

    #[test]
    fn pos_part_examples() {
        assert_eq!(lp(&[(3, 1), (-3, -1)]).pos_part(), lp(&[(3, 1)]));
        assert_eq!(LaurentPoly::constant(5).pos_part(), LaurentPoly::zero());
        assert_eq!(lp(&[(1, -1), (-1, 1)]).pos_part(), lp(&[(1, -1)]));
    }

    #[test]
    fn eval_one_examples() {
        assert_eq!(lp(&[(2, 1), (1, -1)]).eval_one(), BigInt::from(0));
        assert_eq!(lp(&[(0, 1), (1, -1), (2, 1)]).eval_one(), BigInt::from(1));
        assert_eq!(LaurentPoly::zero().eval_one(), BigInt::from(0));
    }

    #[test]
    fn display() {
        assert_eq!(lp(&[(2, 1), (0, -1)]).to_string(), "v^2 - 1");
        assert_eq!(lp(&[(1, -1), (-1, 1)]).to_string(), "-v + v^-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(lp(&[(3, 2)]).to_string(), "2*v^3");
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec(((-6i64..=6), (-9i64..=9)), 0..6)
            .prop_map(|pairs| LaurentPoly::from_pairs(pairs))
    }

    proptest! {
        #[test]
        fn bar_is_involution(a in arb_poly()) {
            prop_assert_eq!(a.bar().bar(), a);
        }

        #[test]
        fn bar_is_ring_hom(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
            prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
        }

        #[test]
        fn antisymmetric_splits_through_pos_part(p in arb_poly()) {
            // a = p - bar(p) is the general bar-antisymmetric element
            let a = &p - &p.bar();
            prop_assert!(a.is_bar_antisymmetric());
            prop_assert_eq!(a.constant_term(), BigInt::from(0));
            let pos = a.pos_part();
            prop_assert_eq!(&pos - &pos.bar(), a);
        }
    }
}
