//! Polynomials in the three universal classes mu(t), Om, wp.
//!
//! The dual-class tables of the chern module are indexed by monomials
//! mu(t)^i Om^j wp^k; the grading used there is the t-degree
//! r = i + 2j + 2k (cohomological degree 2r). For a concrete manifold the
//! generators expand as mu(t) = sum lambda^i mu_i, Om = sum P^{ij} mu_i
//! mu_j, wp = wp.

use std::collections::BTreeMap;
use std::fmt;

use crate::kunneth::BaseClass;
use crate::manifold::FourManifold;
use crate::param::ParamScalar;
use crate::rational::Rat;
use crate::ring::GradedRing;

/// Key is the exponent triple (i, j, k) of mu(t)^i Om^j wp^k.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct MuPoly {
    terms: BTreeMap<(u32, u32, u32), ParamScalar>,
}

/// t-degree of the monomial mu^i Om^j wp^k.
pub fn triple_weight((i, j, k): (u32, u32, u32)) -> u32 {
    i + 2 * j + 2 * k
}

impl MuPoly {
    pub fn zero() -> Self {
        MuPoly::default()
    }

    pub fn one() -> Self {
        MuPoly::monomial(0, 0, 0, ParamScalar::one())
    }

    pub fn monomial(i: u32, j: u32, k: u32, c: ParamScalar) -> Self {
        let mut p = MuPoly::zero();
        p.insert((i, j, k), c);
        p
    }

    pub fn mu() -> Self {
        MuPoly::monomial(1, 0, 0, ParamScalar::one())
    }

    pub fn omega() -> Self {
        MuPoly::monomial(0, 1, 0, ParamScalar::one())
    }

    pub fn wp() -> Self {
        MuPoly::monomial(0, 0, 1, ParamScalar::one())
    }

    pub fn insert(&mut self, key: (u32, u32, u32), c: ParamScalar) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn coeff(&self, i: u32, j: u32, k: u32) -> ParamScalar {
        self.terms.get(&(i, j, k)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms sorted graded-lex by (weight, i, j).
    pub fn sorted_terms(&self) -> Vec<((u32, u32, u32), ParamScalar)> {
        let mut v: Vec<_> = self.terms.iter().map(|(k, c)| (*k, c.clone())).collect();
        v.sort_by_key(|&((i, j, _), _)| (triple_weight((i, j, self.k_of(i, j))), i, j));
        // k is determined by the key itself; re-sort with the true k
        v.sort_by_key(|&(key, _)| (triple_weight(key), key.0, key.1));
        v
    }

    fn k_of(&self, _i: u32, _j: u32) -> u32 {
        0
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(u32, u32, u32), &ParamScalar)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert(*k, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MuPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &ParamScalar) -> Self {
        let mut out = MuPoly::zero();
        if c.is_zero() {
            return out;
        }
        for (k, v) in &self.terms {
            out.insert(*k, c * v);
        }
        out
    }

    pub fn scale_rat(&self, c: &Rat) -> Self {
        self.scale(&ParamScalar::constant(c.clone()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = MuPoly::zero();
        for (&(i1, j1, k1), c1) in &self.terms {
            for (&(i2, j2, k2), c2) in &other.terms {
                out.insert((i1 + i2, j1 + j2, k1 + k2), c1 * c2);
            }
        }
        out
    }

    pub fn is_homogeneous(&self, weight: u32) -> bool {
        self.terms.keys().all(|&k| triple_weight(k) == weight)
    }

    pub fn truncate_above(&self, max_weight: u32) -> Self {
        MuPoly {
            terms: self
                .terms
                .iter()
                .filter(|(&k, _)| triple_weight(k) <= max_weight)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    /// The weight-r graded slice.
    pub fn slice(&self, weight: u32) -> Self {
        MuPoly {
            terms: self
                .terms
                .iter()
                .filter(|(&k, _)| triple_weight(k) == weight)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    /// Substitute numeric or symbolic values for na, ka in every
    /// coefficient.
    pub fn compose(&self, na: &ParamScalar, ka: &ParamScalar) -> Self {
        let mut out = MuPoly::zero();
        for (k, c) in &self.terms {
            out.insert(*k, c.compose(na, ka));
        }
        out
    }

    /// Expand into the concrete mu_i, wp basis over a manifold:
    /// mu(t) -> sum lambda^i mu_i, Om -> sum P^{ij} mu_i mu_j, wp -> wp.
    pub fn expand(&self, m: &FourManifold, lambda: &[i64]) -> BaseClass {
        let d = m.rank();
        assert_eq!(lambda.len(), d, "lambda arity mismatch");
        let mut mu_t = BaseClass::zero(d);
        for (i, &li) in lambda.iter().enumerate() {
            if li != 0 {
                mu_t = mu_t.add(&BaseClass::mu(d, i).scale_rat(&Rat::int(li)));
            }
        }
        let mut omega = BaseClass::zero(d);
        for i in 0..d {
            for j in 0..d {
                let pij = m.p(i, j);
                if !pij.is_zero() {
                    omega = omega.add(&BaseClass::mu(d, i).mul(&BaseClass::mu(d, j)).scale_rat(pij));
                }
            }
        }
        let wp = BaseClass::wp(d);

        let mut out = BaseClass::zero(d);
        // cache successive powers; exponents are small
        let mut acc;
        for (&(i, j, k), c) in &self.terms {
            acc = BaseClass::constant(d, c.clone());
            for _ in 0..i {
                acc = acc.mul(&mu_t);
            }
            for _ in 0..j {
                acc = acc.mul(&omega);
            }
            for _ in 0..k {
                acc = acc.mul(&wp);
            }
            out = out.add(&acc);
        }
        out
    }
}

impl fmt::Display for MuPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (key, c) in self.sorted_terms() {
            let (i, j, k) = key;
            let mut parts = Vec::new();
            for (name, e) in [("mu", i), ("Om", j), ("wp", k)] {
                match e {
                    0 => {}
                    1 => parts.push(name.to_string()),
                    _ => parts.push(format!("{name}^{e}")),
                }
            }
            let mono = parts.join("*");
            let piece = match (mono.is_empty(), c.as_constant()) {
                (true, _) => format!("{c}"),
                (false, Some(r)) if r.is_one() => mono,
                (false, Some(r)) if (-&r).is_one() => format!("-{mono}"),
                (false, Some(r)) => format!("{r}*{mono}"),
                (false, None) => format!("({c})*{mono}"),
            };
            crate::param::join_signed(&mut out, &piece);
        }
        write!(f, "{out}")
    }
}

impl fmt::Debug for MuPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Ring handle; grading is the t-degree i + 2j + 2k.
pub struct MuRing;

impl GradedRing for MuRing {
    type Elem = MuPoly;

    fn zero(&self) -> MuPoly {
        MuPoly::zero()
    }

    fn one(&self) -> MuPoly {
        MuPoly::one()
    }

    fn add(&self, a: &MuPoly, b: &MuPoly) -> MuPoly {
        a.add(b)
    }

    fn mul(&self, a: &MuPoly, b: &MuPoly) -> MuPoly {
        a.mul(b)
    }

    fn scale(&self, c: &Rat, a: &MuPoly) -> MuPoly {
        a.scale_rat(c)
    }

    fn is_zero(&self, a: &MuPoly) -> bool {
        a.is_zero()
    }

    fn is_homogeneous(&self, a: &MuPoly, degree: u32) -> bool {
        a.is_homogeneous(degree)
    }

    fn truncate_above(&self, a: &MuPoly, max_degree: u32) -> MuPoly {
        a.truncate_above(max_degree)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_counts_omega_and_wp_twice() {
        assert_eq!(triple_weight((1, 0, 0)), 1);
        assert_eq!(triple_weight((0, 1, 0)), 2);
        assert_eq!(triple_weight((0, 0, 1)), 2);
        assert_eq!(triple_weight((2, 1, 3)), 10);
    }

    #[test]
    fn mul_adds_exponents() {
        let p = MuPoly::mu().mul(&MuPoly::omega()).mul(&MuPoly::mu());
        assert_eq!(p.coeff(2, 1, 0), ParamScalar::one());
    }

    #[test]
    fn expand_on_hyperbolic_form() {
        let m = FourManifold::new(4, 0, vec![vec![0, 1], vec![1, 0]]).unwrap();
        // Om = 2 mu1 mu2 on the hyperbolic form
        let om = MuPoly::omega().expand(&m, &[0, 0]);
        assert_eq!(om.coeff(vec![1, 1], 0), ParamScalar::int(2));
        // mu(t) with lambda = (1, -2)
        let mu = MuPoly::mu().expand(&m, &[1, -2]);
        assert_eq!(mu.coeff(vec![1, 0], 0), ParamScalar::int(1));
        assert_eq!(mu.coeff(vec![0, 1], 0), ParamScalar::int(-2));
    }

    #[test]
    fn display_sorted_by_weight() {
        let p = MuPoly::monomial(0, 1, 0, ParamScalar::constant(Rat::new(1, 12)))
            .add(&MuPoly::monomial(2, 0, 0, ParamScalar::constant(Rat::new(1, 8))))
            .add(&MuPoly::monomial(0, 0, 1, ParamScalar::constant(Rat::new(1, 6))));
        assert_eq!(p.to_string(), "1/8*mu^2 + 1/12*Om + 1/6*wp");
    }
}
