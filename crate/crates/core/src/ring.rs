//! Graded commutative ring abstraction.
//!
//! Characteristic-class formulas are evaluated in several even-graded
//! algebras (truncated series, the cohomology of X, the Kunneth algebra,
//! the universal mu/Om/wp ring). A ring handle carries whatever context
//! multiplication needs (variable table, intersection form) and exposes
//! the element operations.

use std::fmt::Debug;

use crate::rational::Rat;

pub trait GradedRing {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, c: &Rat, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// Every term of `a` has the given (cohomological) degree. The zero
    /// element is homogeneous of every degree.
    fn is_homogeneous(&self, a: &Self::Elem, degree: u32) -> bool;
    /// Drop all terms of degree greater than `max_degree`.
    fn truncate_above(&self, a: &Self::Elem, max_degree: u32) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.scale(&Rat::int(-1), b))
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.scale(&Rat::int(-1), a)
    }
}

/// exp(u) = sum u^m / m! for a nilpotent (or truncated) argument.
///
/// `max_pow` bounds the number of terms; callers know it from the degree
/// of `u` and the degree cap of the ambient ring. Stops early once a
/// power vanishes.
pub fn exp_nilpotent<R: GradedRing>(ring: &R, u: &R::Elem, max_pow: u32) -> R::Elem {
    let mut acc = ring.one();
    let mut term = ring.one();
    for m in 1..=max_pow {
        term = ring.mul(&term, u);
        term = ring.scale(&Rat::new(1, m as i64), &term);
        if ring.is_zero(&term) {
            break;
        }
        acc = ring.add(&acc, &term);
    }
    acc
}
