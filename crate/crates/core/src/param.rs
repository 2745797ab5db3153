//! Coefficient scalars: polynomials in the two formal parameters `na`
//! and `ka` with exact rational coefficients.
//!
//! Every coefficient in the crate is a `ParamScalar`. In numeric mode
//! these degenerate to constants, so one code path serves both symbolic
//! and numeric computations.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::rational::Rat;

/// Sparse polynomial in `na`, `ka`; key is `(na exponent, ka exponent)`.
/// No zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct ParamScalar {
    terms: BTreeMap<(u32, u32), Rat>,
}

impl ParamScalar {
    pub fn zero() -> Self {
        ParamScalar::default()
    }

    pub fn one() -> Self {
        ParamScalar::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((0, 0), c);
        }
        ParamScalar { terms }
    }

    pub fn int(n: i64) -> Self {
        ParamScalar::constant(Rat::int(n))
    }

    /// The formal parameter `na`.
    pub fn na() -> Self {
        ParamScalar::term(Rat::one(), 1, 0)
    }

    /// The formal parameter `ka`.
    pub fn ka() -> Self {
        ParamScalar::term(Rat::one(), 0, 1)
    }

    pub fn term(c: Rat, na_exp: u32, ka_exp: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((na_exp, ka_exp), c);
        }
        ParamScalar { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Some(&c) when the polynomial is the constant c (including zero).
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(u32, u32), &Rat)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return ParamScalar::zero();
        }
        ParamScalar {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    fn add_term(&mut self, key: (u32, u32), c: &Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = ParamScalar::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluate at numeric parameter values.
    pub fn eval(&self, na: &Rat, ka: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (&(i, j), c) in &self.terms {
            acc += &(c * &na.pow(i) * ka.pow(j));
        }
        acc
    }

    /// Substitute polynomials for the parameters. With the identity
    /// substitution (na -> na, ka -> ka) this is a no-op, so symbolic and
    /// numeric callers share one code path.
    pub fn compose(&self, na: &ParamScalar, ka: &ParamScalar) -> ParamScalar {
        let mut acc = ParamScalar::zero();
        for (&(i, j), c) in &self.terms {
            let m = na.pow(i) * ka.pow(j);
            acc = acc + m.scale(c);
        }
        acc
    }

    /// Total degree in (na, ka); None for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }
}

impl Add for ParamScalar {
    type Output = ParamScalar;
    fn add(self, rhs: ParamScalar) -> ParamScalar {
        &self + &rhs
    }
}

impl Add for &ParamScalar {
    type Output = ParamScalar;
    fn add(self, rhs: &ParamScalar) -> ParamScalar {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c);
        }
        out
    }
}

impl Sub for ParamScalar {
    type Output = ParamScalar;
    fn sub(self, rhs: ParamScalar) -> ParamScalar {
        &self - &rhs
    }
}

impl Sub for &ParamScalar {
    type Output = ParamScalar;
    fn sub(self, rhs: &ParamScalar) -> ParamScalar {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, &-c);
        }
        out
    }
}

impl Mul for ParamScalar {
    type Output = ParamScalar;
    fn mul(self, rhs: ParamScalar) -> ParamScalar {
        &self * &rhs
    }
}

impl Mul for &ParamScalar {
    type Output = ParamScalar;
    fn mul(self, rhs: &ParamScalar) -> ParamScalar {
        let mut out = ParamScalar::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term((i1 + i2, j1 + j2), &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        -&self
    }
}

impl Neg for &ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        ParamScalar {
            terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect(),
        }
    }
}

fn monomial_string(na_exp: u32, ka_exp: u32) -> String {
    let mut parts = Vec::new();
    for (name, e) in [("na", na_exp), ("ka", ka_exp)] {
        match e {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("*")
}

/// Append `piece` to `out` with a sign-aware separator.
pub(crate) fn join_signed(out: &mut String, piece: &str) {
    if out.is_empty() {
        out.push_str(piece);
    } else if let Some(rest) = piece.strip_prefix('-') {
        out.push_str(" - ");
        out.push_str(rest);
    } else {
        out.push_str(" + ");
        out.push_str(piece);
    }
}

impl fmt::Display for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        // Descending key order prints na-terms before ka-terms and higher
        // degrees first: "-1/2*na - 1/3*ka".
        for (&(i, j), c) in self.terms.iter().rev() {
            let mono = monomial_string(i, j);
            let piece = if mono.is_empty() {
                c.to_string()
            } else if c.is_one() {
                mono
            } else if (-c).is_one() {
                format!("-{mono}")
            } else {
                format!("{c}*{mono}")
            };
            join_signed(&mut out, &piece);
        }
        write!(f, "{out}")
    }
}

impl fmt::Debug for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Rat> for ParamScalar {
    fn from(c: Rat) -> Self {
        ParamScalar::constant(c)
    }
}

impl From<i64> for ParamScalar {
    fn from(n: i64) -> Self {
        ParamScalar::int(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn no_zero_terms_stored() {
        let p = ParamScalar::na() - ParamScalar::na();
        assert!(p.is_zero());
        assert_eq!(p.terms.len(), 0);
    }

    #[test]
    fn display_order_and_format() {
        let p = ParamScalar::na().scale(&Rat::new(-1, 2)) + ParamScalar::ka().scale(&Rat::new(-1, 3));
        assert_eq!(p.to_string(), "-1/2*na - 1/3*ka");
        let q = ParamScalar::na().pow(2) - ParamScalar::one();
        assert_eq!(q.to_string(), "na^2 - 1");
    }

    #[test]
    fn eval_matches_symbolic() {
        // (na + 2ka)^2 at na=3, ka=1/2 -> 16.
        let p = (ParamScalar::na() + ParamScalar::ka().scale(&Rat::int(2))).pow(2);
        assert_eq!(p.eval(&Rat::int(3), &Rat::new(1, 2)), Rat::int(16));
    }

    #[test]
    fn compose_identity_is_noop() {
        let p = ParamScalar::na() * ParamScalar::ka() + ParamScalar::int(7);
        assert_eq!(p.compose(&ParamScalar::na(), &ParamScalar::ka()), p);
    }

    #[test]
    fn compose_numeric_matches_eval() {
        let p = ParamScalar::na().pow(2) - ParamScalar::ka();
        let v = p.compose(&ParamScalar::int(-2), &ParamScalar::constant(Rat::new(1, 3)));
        assert_eq!(v.as_constant().unwrap(), Rat::new(11, 3));
    }

    #[test]
    fn as_constant_detects_symbols() {
        assert!(ParamScalar::int(5).is_constant());
        assert!(!ParamScalar::na().is_constant());
        assert_eq!(ParamScalar::zero().as_constant(), Some(Rat::zero()));
    }
}
