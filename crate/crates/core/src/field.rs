//! Scalar field abstraction and the q-deformed integer bracket.
//!
//! All linear algebra in this crate is generic over an exact field element
//! type. The bounds below are satisfied by `num::BigRational`, which is the
//! only scalar type the crate ships aliases for: canonical subspace bases and
//! zero-testing of residuals rely on arithmetic being exact, so approximate
//! types are out of scope even though they may satisfy the trait bounds.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num::traits::Num;

use crate::error::Error;

/// An exact field element: ring operations, exact division, equality.
pub trait Field: Num + Clone + Neg<Output = Self> + Debug + Display {}

impl<T> Field for T where T: Num + Clone + Neg<Output = Self> + Debug + Display {}

/// The deformation parameter q together with the constraint that makes every
/// power q^n (n >= 1) differ from 1.
///
/// Over the rationals, excluding q in {0, 1, -1} is equivalent to q not being
/// a root of unity.
#[derive(Clone, Debug, PartialEq)]
pub struct FieldConfig<T: Field> {
    q: T,
}

impl<T: Field> FieldConfig<T> {
    pub fn new(q: T) -> Result<Self, Error> {
        if q.is_zero() || q.is_one() || q == -T::one() {
            return Err(Error::InvalidParameter(
                "q must not be 0, 1 or -1".into(),
            ));
        }
        Ok(FieldConfig { q })
    }

    pub fn q(&self) -> &T {
        &self.q
    }

    /// q^e for any integer exponent, negative exponents via exact inversion.
    pub fn q_pow(&self, e: i64) -> T {
        let base = if e >= 0 {
            self.q.clone()
        } else {
            T::one() / self.q.clone()
        };
        let mut acc = T::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc * base.clone();
        }
        acc
    }

    /// q - q^{-1}, the denominator of the bracket and of every q-commutator.
    pub fn q_minus_q_inv(&self) -> T {
        self.q_pow(1) - self.q_pow(-1)
    }

    /// A config with q replaced by q^{-1}.
    pub fn inverted(&self) -> Self {
        FieldConfig {
            q: T::one() / self.q.clone(),
        }
    }
}

/// The q-integer (q^n - q^{-n}) / (q - q^{-1}).
pub fn q_bracket<T: Field>(n: u32, cfg: &FieldConfig<T>) -> T {
    (cfg.q_pow(n as i64) - cfg.q_pow(-(n as i64))) / cfg.q_minus_q_inv()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, Rat};
    use proptest::prelude::*;

    fn cfg(n: i64, d: i64) -> FieldConfig<Rat> {
        FieldConfig::new(rat(n, d)).unwrap()
    }

    #[test]
    fn rejects_degenerate_q() {
        assert!(FieldConfig::new(rat(0, 1)).is_err());
        assert!(FieldConfig::new(rat(1, 1)).is_err());
        assert!(FieldConfig::new(rat(-1, 1)).is_err());
        assert!(FieldConfig::new(rat(2, 1)).is_ok());
        assert!(FieldConfig::new(rat(1, 2)).is_ok());
        assert!(FieldConfig::new(rat(-2, 3)).is_ok());
    }

    #[test]
    fn bracket_base_cases() {
        let c = cfg(2, 1);
        assert_eq!(q_bracket(0, &c), rat(0, 1));
        assert_eq!(q_bracket(1, &c), rat(1, 1));
    }

    #[test]
    fn bracket_three_at_q_two() {
        // (q^3 - q^-3)/(q - q^-1) at q = 2 is (8 - 1/8)/(3/2) = 21/4.
        assert_eq!(q_bracket(3, &cfg(2, 1)), rat(21, 4));
    }

    #[test]
    fn bracket_two_at_q_two() {
        assert_eq!(q_bracket(2, &cfg(2, 1)), rat(5, 2));
    }

    #[test]
    fn q_pow_negative_exponents() {
        let c = cfg(2, 3);
        assert_eq!(c.q_pow(0), rat(1, 1));
        assert_eq!(c.q_pow(3), rat(8, 27));
        assert_eq!(c.q_pow(-2), rat(9, 4));
        assert_eq!(c.inverted().q_pow(2), c.q_pow(-2));
    }

    proptest! {
        // Exactness: a sum of rationals is independent of parenthesization.
        #[test]
        fn sum_parenthesization_is_exact(
            nums in proptest::collection::vec((-50i64..50, 1i64..20), 2..8)
        ) {
            let xs: Vec<Rat> = nums.iter().map(|&(n, d)| rat(n, d)).collect();
            let left = xs.iter().cloned().fold(rat(0, 1), |a, b| a + b);
            let right = xs.iter().rev().cloned().fold(rat(0, 1), |a, b| b + a);
            let mut pairwise = xs.clone();
            while pairwise.len() > 1 {
                let b = pairwise.pop().unwrap();
                let a = pairwise.pop().unwrap();
                pairwise.push(a + b);
            }
            prop_assert_eq!(&left, &right);
            prop_assert_eq!(&left, &pairwise[0]);
        }

        #[test]
        fn bracket_recurrence(n in 1u32..8) {
            // [n+1] = [2][n] - [n-1], the Chebyshev-style recurrence.
            let c = cfg(3, 1);
            let lhs = q_bracket(n + 1, &c);
            let rhs = q_bracket(2, &c) * q_bracket(n, &c) - q_bracket(n - 1, &c);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
