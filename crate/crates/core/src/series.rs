//! Truncated multivariate formal power series with weighted variables.
//!
//! A series lives over a fixed variable table (names and positive integer
//! weights) and a hard truncation order N in total weighted degree, both
//! set at creation. Arithmetic between series with different tables or
//! orders is an error, never an implicit re-truncation. Monomials are
//! stored sparsely and iterate in graded-lexicographic order, so output
//! is deterministic.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::param::ParamScalar;
use crate::rational::Rat;
use crate::ring::GradedRing;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VarTable {
    names: Vec<String>,
    weights: Vec<u32>,
}

impl VarTable {
    pub fn new(vars: &[(&str, u32)]) -> Arc<VarTable> {
        assert!(vars.iter().all(|&(_, w)| w > 0), "weights must be positive");
        Arc::new(VarTable {
            names: vars.iter().map(|&(n, _)| n.to_string()).collect(),
            weights: vars.iter().map(|&(_, w)| w).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.weights[i]
    }

    fn degree_of(&self, exps: &[u32]) -> u32 {
        exps.iter().zip(&self.weights).map(|(e, w)| e * w).sum()
    }
}

/// Exponent multi-index; ordering is graded-lex (degree first), which the
/// derived Ord provides because `deg` is the leading field.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
struct Mono {
    deg: u32,
    exps: Vec<u32>,
}

#[derive(Clone, PartialEq, Eq)]
pub struct GradedSeries {
    vars: Arc<VarTable>,
    order: u32,
    terms: BTreeMap<Mono, ParamScalar>,
}

impl GradedSeries {
    pub fn zero(vars: &Arc<VarTable>, order: u32) -> Self {
        GradedSeries {
            vars: Arc::clone(vars),
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &Arc<VarTable>, order: u32, c: ParamScalar) -> Self {
        let mut s = GradedSeries::zero(vars, order);
        s.insert(vec![0; vars.len()], c);
        s
    }

    pub fn one(vars: &Arc<VarTable>, order: u32) -> Self {
        GradedSeries::constant(vars, order, ParamScalar::one())
    }

    /// The series consisting of the named variable. A variable whose
    /// weight exceeds the order truncates to zero.
    pub fn var(vars: &Arc<VarTable>, order: u32, name: &str) -> Result<Self> {
        let idx = vars
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let mut s = GradedSeries::zero(vars, order);
        let mut exps = vec![0; vars.len()];
        exps[idx] = 1;
        s.insert(exps, ParamScalar::one());
        Ok(s)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    /// Insert `coeff * x^exps`, adding to any existing term. Terms above
    /// the truncation order and zero coefficients are dropped.
    pub fn insert(&mut self, exps: Vec<u32>, coeff: ParamScalar) {
        use std::collections::btree_map::Entry;
        assert_eq!(exps.len(), self.vars.len(), "exponent arity mismatch");
        if coeff.is_zero() {
            return;
        }
        let deg = self.vars.degree_of(&exps);
        if deg > self.order {
            return;
        }
        match self.terms.entry(Mono { deg, exps }) {
            Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    pub fn coeff(&self, exps: &[u32]) -> ParamScalar {
        assert_eq!(exps.len(), self.vars.len(), "exponent arity mismatch");
        let mono = Mono {
            deg: self.vars.degree_of(exps),
            exps: exps.to_vec(),
        };
        self.terms.get(&mono).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> ParamScalar {
        self.coeff(&vec![0; self.vars.len()])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in graded-lex order.
    pub fn iter(&self) -> impl Iterator<Item = (&[u32], &ParamScalar)> {
        self.terms.iter().map(|(m, c)| (m.exps.as_slice(), c))
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.order != other.order || *self.vars != *other.vars {
            return Err(Error::IncompatibleSeries);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(m.exps.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        GradedSeries {
            vars: Arc::clone(&self.vars),
            order: self.order,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale_rat(&self, c: &Rat) -> Self {
        self.scale(&ParamScalar::constant(c.clone()))
    }

    pub fn scale(&self, c: &ParamScalar) -> Self {
        let mut out = GradedSeries::zero(&self.vars, self.order);
        if c.is_zero() {
            return out;
        }
        for (m, v) in &self.terms {
            out.insert(m.exps.clone(), c * v);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = GradedSeries::zero(&self.vars, self.order);
        for (ma, ca) in &self.terms {
            // terms iterate by ascending degree, so once the combined
            // degree overflows the order the rest of the inner loop will too
            for (mb, cb) in &other.terms {
                if ma.deg + mb.deg > self.order {
                    break;
                }
                let exps: Vec<u32> = ma.exps.iter().zip(&mb.exps).map(|(a, b)| a + b).collect();
                out.insert(exps, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = GradedSeries::one(&self.vars, self.order);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// exp(u) = sum_{k>=0} u^k / k!; u must have no constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.constant_term().is_zero() {
            return Err(Error::NonNilpotentArgument);
        }
        let mut acc = GradedSeries::one(&self.vars, self.order);
        let mut term = GradedSeries::one(&self.vars, self.order);
        // u^k has minimum degree >= k, so k ranges to the order at most
        for k in 1..=self.order {
            term = term.mul(self)?.scale_rat(&Rat::new(1, k as i64));
            if term.is_zero() {
                break;
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// log(1+u) = sum_{k>=1} (-1)^{k+1} u^k / k; u must have no constant
    /// term. Inverse of exp in the sense exp(log1p(u)) = 1+u exactly at
    /// the truncation order.
    pub fn log1p(&self) -> Result<Self> {
        if !self.constant_term().is_zero() {
            return Err(Error::NonNilpotentArgument);
        }
        let mut acc = GradedSeries::zero(&self.vars, self.order);
        let mut pw = GradedSeries::one(&self.vars, self.order);
        for k in 1..=self.order {
            pw = pw.mul(self)?;
            if pw.is_zero() {
                break;
            }
            let c = Rat::new(if k % 2 == 1 { 1 } else { -1 }, k as i64);
            acc = acc.add(&pw.scale_rat(&c))?;
        }
        Ok(acc)
    }

    /// Formal antiderivative in `var` with zero constant of integration.
    /// Monomials pushed above the truncation order are dropped.
    pub fn integrate(&self, var: &str) -> Result<Self> {
        let idx = self
            .vars
            .index_of(var)
            .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
        let mut out = GradedSeries::zero(&self.vars, self.order);
        for (m, c) in &self.terms {
            let mut exps = m.exps.clone();
            let k = exps[idx] as i64;
            exps[idx] += 1;
            out.insert(exps, c.scale(&Rat::new(1, k + 1)));
        }
        Ok(out)
    }

    /// Formal partial derivative in `var`.
    pub fn differentiate(&self, var: &str) -> Result<Self> {
        let idx = self
            .vars
            .index_of(var)
            .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
        let mut out = GradedSeries::zero(&self.vars, self.order);
        for (m, c) in &self.terms {
            if m.exps[idx] == 0 {
                continue;
            }
            let mut exps = m.exps.clone();
            let k = exps[idx] as i64;
            exps[idx] -= 1;
            out.insert(exps, c.scale(&Rat::int(k)));
        }
        Ok(out)
    }

    /// Re-express the series in a larger variable table, matching variables
    /// by name. Terms above the new order are dropped.
    pub fn promote(&self, vars: &Arc<VarTable>, order: u32) -> Result<Self> {
        let map: Vec<usize> = self
            .vars
            .names
            .iter()
            .map(|n| {
                vars.index_of(n)
                    .ok_or_else(|| Error::UnknownVariable(n.clone()))
            })
            .collect::<Result<_>>()?;
        for (i, &j) in map.iter().enumerate() {
            debug_assert_eq!(self.vars.weight(i), vars.weight(j), "weight mismatch");
        }
        let mut out = GradedSeries::zero(vars, order);
        for (m, c) in &self.terms {
            let mut exps = vec![0; vars.len()];
            for (i, &e) in m.exps.iter().enumerate() {
                exps[map[i]] = e;
            }
            out.insert(exps, c.clone());
        }
        Ok(out)
    }

    /// Apply a substitution to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&ParamScalar) -> ParamScalar) -> Self {
        let mut out = GradedSeries::zero(&self.vars, self.order);
        for (m, c) in &self.terms {
            out.insert(m.exps.clone(), f(c));
        }
        out
    }

    pub fn is_homogeneous(&self, degree: u32) -> bool {
        self.terms.keys().all(|m| m.deg == degree)
    }

    pub fn truncate_above(&self, max_degree: u32) -> Self {
        GradedSeries {
            vars: Arc::clone(&self.vars),
            order: self.order,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.deg <= max_degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for GradedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (m, c) in &self.terms {
            let mut mono = String::new();
            for (i, &e) in m.exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !mono.is_empty() {
                    mono.push('*');
                }
                mono.push_str(self.vars.name(i));
                if e > 1 {
                    mono.push_str(&format!("^{e}"));
                }
            }
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

impl fmt::Debug for GradedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (order {})", self.order)
    }
}

/// Ring handle for series over a fixed table and order.
#[derive(Clone)]
pub struct SeriesRing {
    pub vars: Arc<VarTable>,
    pub order: u32,
}

impl GradedRing for SeriesRing {
    type Elem = GradedSeries;

    fn zero(&self) -> GradedSeries {
        GradedSeries::zero(&self.vars, self.order)
    }

    fn one(&self) -> GradedSeries {
        GradedSeries::one(&self.vars, self.order)
    }

    fn add(&self, a: &GradedSeries, b: &GradedSeries) -> GradedSeries {
        a.add(b).expect("series ring operands share table and order")
    }

    fn mul(&self, a: &GradedSeries, b: &GradedSeries) -> GradedSeries {
        a.mul(b).expect("series ring operands share table and order")
    }

    fn scale(&self, c: &Rat, a: &GradedSeries) -> GradedSeries {
        a.scale_rat(c)
    }

    fn is_zero(&self, a: &GradedSeries) -> bool {
        a.is_zero()
    }

    fn is_homogeneous(&self, a: &GradedSeries, degree: u32) -> bool {
        a.is_homogeneous(degree)
    }

    fn truncate_above(&self, a: &GradedSeries, max_degree: u32) -> GradedSeries {
        a.truncate_above(max_degree)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum JKind {
    J1,
    J2,
    J3,
}

/// Standard single-variable table for the J series.
pub fn z_table() -> Arc<VarTable> {
    VarTable::new(&[("z", 1)])
}

/// The three coefficient series of the dual-class generating function,
/// truncated at `order` in z:
///
///   J1(z) = arctan(z)/z          = sum_{k>=0} (-1)^k/(2k+1) z^{2k}
///   J2(z) = (z - arctan(z))/z^3  = sum_{k>=1} (-1)^{k+1}/(2k+1) z^{2k-2}
///   J3(z) = -(na/2) ln(1+z^2) + ka (arctan(z)/z - 1)
///
/// J1 and J2 are built directly from their coefficient formulas (no series
/// division); J3 carries symbolic `na`, `ka` coefficients.
pub fn j_series(which: JKind, order: u32) -> GradedSeries {
    let vars = z_table();
    let mut s = GradedSeries::zero(&vars, order);
    match which {
        JKind::J1 => {
            let mut k = 0u32;
            while 2 * k <= order {
                let c = Rat::new(if k % 2 == 0 { 1 } else { -1 }, (2 * k + 1) as i64);
                s.insert(vec![2 * k], ParamScalar::constant(c));
                k += 1;
            }
        }
        JKind::J2 => {
            let mut k = 1u32;
            while 2 * k - 2 <= order {
                let c = Rat::new(if k % 2 == 1 { 1 } else { -1 }, (2 * k + 1) as i64);
                s.insert(vec![2 * k - 2], ParamScalar::constant(c));
                k += 1;
            }
        }
        JKind::J3 => {
            let mut k = 1u32;
            while 2 * k <= order {
                let sign = Rat::neg_one_pow(k);
                let c = ParamScalar::na().scale(&(&sign * &Rat::new(1, (2 * k) as i64)))
                    + ParamScalar::ka().scale(&(&sign * &Rat::new(1, (2 * k + 1) as i64)));
                s.insert(vec![2 * k], c);
                k += 1;
            }
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t_table() -> Arc<VarTable> {
        VarTable::new(&[("t", 1)])
    }

    fn ps(n: i64, d: i64) -> ParamScalar {
        ParamScalar::constant(Rat::new(n, d))
    }

    #[test]
    fn mul_difference_of_squares() {
        let vars = t_table();
        let one = GradedSeries::one(&vars, 4);
        let t = GradedSeries::var(&vars, 4, "t").unwrap();
        let a = one.add(&t).unwrap();
        let b = one.sub(&t).unwrap();
        let p = a.mul(&b).unwrap();
        let mut want = GradedSeries::one(&vars, 4);
        want.insert(vec![2], ps(-1, 1));
        assert_eq!(p, want);
    }

    #[test]
    fn mul_by_one_is_identity() {
        let vars = t_table();
        let mut a = GradedSeries::zero(&vars, 6);
        a.insert(vec![0], ps(3, 7));
        a.insert(vec![2], ps(-5, 2));
        a.insert(vec![5], ps(1, 3));
        let one = GradedSeries::one(&vars, 6);
        assert_eq!(a.mul(&one).unwrap(), a);
    }

    #[test]
    fn exp_times_exp_of_negative_is_one() {
        // Independent oracle: hand-convolve the factorial coefficient
        // tables of e^t and e^{-t} and compare to series_mul.
        let n = 8u32;
        let vars = t_table();
        let mut pos = GradedSeries::zero(&vars, n);
        let mut neg = GradedSeries::zero(&vars, n);
        for k in 0..=n {
            let f = crate::rational::factorial(k);
            pos.insert(vec![k], ParamScalar::constant(Rat::from_big(1.into(), f.clone())));
            let sgn: num_bigint::BigInt = if k % 2 == 0 { 1.into() } else { (-1).into() };
            neg.insert(vec![k], ParamScalar::constant(Rat::from_big(sgn, f)));
        }
        // oracle: direct convolution, no series machinery
        for r in 0..=n {
            let mut acc = Rat::zero();
            for a in 0..=r {
                let ca = pos.coeff(&[a]).as_constant().unwrap();
                let cb = neg.coeff(&[r - a]).as_constant().unwrap();
                acc += &(&ca * &cb);
            }
            let want = if r == 0 { Rat::one() } else { Rat::zero() };
            assert_eq!(acc, want, "oracle convolution at degree {r}");
        }
        let prod = pos.mul(&neg).unwrap();
        assert_eq!(prod, GradedSeries::one(&vars, n));
    }

    #[test]
    fn mismatched_orders_rejected() {
        let vars = t_table();
        let a = GradedSeries::one(&vars, 4);
        let b = GradedSeries::one(&vars, 5);
        assert_eq!(a.mul(&b), Err(Error::IncompatibleSeries));
        assert_eq!(a.add(&b), Err(Error::IncompatibleSeries));
    }

    #[test]
    fn mismatched_tables_rejected() {
        let a = GradedSeries::one(&t_table(), 4);
        let b = GradedSeries::one(&z_table(), 4);
        assert_eq!(a.mul(&b), Err(Error::IncompatibleSeries));
    }

    #[test]
    fn exp_of_zero_is_one() {
        let vars = t_table();
        let z = GradedSeries::zero(&vars, 5);
        assert_eq!(z.exp().unwrap(), GradedSeries::one(&vars, 5));
    }

    #[test]
    fn exp_of_t_is_factorial_series() {
        let vars = t_table();
        let t = GradedSeries::var(&vars, 5, "t").unwrap();
        let e = t.exp().unwrap();
        for k in 0..=5u32 {
            let want = Rat::from_big(1.into(), crate::rational::factorial(k));
            assert_eq!(e.coeff(&[k]).as_constant().unwrap(), want);
        }
    }

    #[test]
    fn exp_quadratic_cross_term() {
        // exp(t + t^2): coefficient of t^2 is 3/2, by hand convolution of
        // (1 + t + t^2/2)(1 + t^2).
        let vars = t_table();
        let t = GradedSeries::var(&vars, 4, "t").unwrap();
        let u = t.add(&t.pow(2).unwrap()).unwrap();
        let e = u.exp().unwrap();
        assert_eq!(e.coeff(&[2]).as_constant().unwrap(), Rat::new(3, 2));
    }

    #[test]
    fn exp_rejects_constant_term() {
        let vars = t_table();
        let one = GradedSeries::one(&vars, 4);
        assert_eq!(one.exp(), Err(Error::NonNilpotentArgument));
        assert_eq!(one.log1p(), Err(Error::NonNilpotentArgument));
    }

    #[test]
    fn log1p_of_z_squared() {
        let vars = z_table();
        let z2 = GradedSeries::var(&vars, 6, "z").unwrap().pow(2).unwrap();
        let l = z2.log1p().unwrap();
        let mut want = GradedSeries::zero(&vars, 6);
        want.insert(vec![2], ps(1, 1));
        want.insert(vec![4], ps(-1, 2));
        want.insert(vec![6], ps(1, 3));
        assert_eq!(l, want);
    }

    #[test]
    fn log1p_zero() {
        let vars = z_table();
        let z = GradedSeries::zero(&vars, 6);
        assert!(z.log1p().unwrap().is_zero());
    }

    #[test]
    fn exp_log_roundtrip() {
        let vars = t_table();
        let t = GradedSeries::var(&vars, 10, "t").unwrap();
        let e = t.log1p().unwrap().exp().unwrap();
        let want = GradedSeries::one(&vars, 10).add(&t).unwrap();
        assert_eq!(e, want);
    }

    #[test]
    fn integrate_constant_and_power_rule() {
        let vars = t_table();
        let one = GradedSeries::one(&vars, 4);
        let t = GradedSeries::var(&vars, 4, "t").unwrap();
        assert_eq!(one.integrate("t").unwrap(), t);

        let u = one.sub(&t.pow(2).unwrap()).unwrap();
        let mut want = GradedSeries::zero(&vars, 4);
        want.insert(vec![1], ps(1, 1));
        want.insert(vec![3], ps(-1, 3));
        assert_eq!(u.integrate("t").unwrap(), want);
    }

    #[test]
    fn integrate_unknown_variable() {
        let vars = t_table();
        let one = GradedSeries::one(&vars, 4);
        assert_eq!(
            one.integrate("q"),
            Err(Error::UnknownVariable("q".to_string()))
        );
    }

    #[test]
    fn j1_series_values() {
        let j1 = j_series(JKind::J1, 4);
        assert_eq!(j1.coeff(&[0]).as_constant().unwrap(), Rat::one());
        assert_eq!(j1.coeff(&[2]).as_constant().unwrap(), Rat::new(-1, 3));
        assert_eq!(j1.coeff(&[4]).as_constant().unwrap(), Rat::new(1, 5));
        assert!(j1.coeff(&[1]).is_zero() && j1.coeff(&[3]).is_zero());
    }

    #[test]
    fn j2_series_values() {
        let j2 = j_series(JKind::J2, 4);
        assert_eq!(j2.coeff(&[0]).as_constant().unwrap(), Rat::new(1, 3));
        assert_eq!(j2.coeff(&[2]).as_constant().unwrap(), Rat::new(-1, 5));
        assert_eq!(j2.coeff(&[4]).as_constant().unwrap(), Rat::new(1, 7));
    }

    #[test]
    fn j3_matches_log_arctan_construction() {
        // Oracle: J3 = -(na/2) log(1+z^2) + ka (J1 - 1), expanded with the
        // series operations rather than the coefficient formulas.
        let order = 12;
        let vars = z_table();
        let z2 = GradedSeries::var(&vars, order, "z").unwrap().pow(2).unwrap();
        let log_part = z2
            .log1p()
            .unwrap()
            .scale(&ParamScalar::na().scale(&Rat::new(-1, 2)));
        let j1m1 = j_series(JKind::J1, order)
            .sub(&GradedSeries::one(&vars, order))
            .unwrap();
        let ka_part = j1m1.scale(&ParamScalar::ka());
        let want = log_part.add(&ka_part).unwrap();
        assert_eq!(j_series(JKind::J3, order), want);
    }

    #[test]
    fn j3_z2_coefficient() {
        let j3 = j_series(JKind::J3, 4);
        let want = ParamScalar::na().scale(&Rat::new(-1, 2))
            + ParamScalar::ka().scale(&Rat::new(-1, 3));
        assert_eq!(j3.coeff(&[2]), want);
        assert!(j3.constant_term().is_zero());
    }

    #[test]
    fn arctan_derivative_identity() {
        // (1+z^2) * d/dz[z*J1(z)] = 1 as a truncated series.
        let order = 21;
        let vars = z_table();
        let z = GradedSeries::var(&vars, order, "z").unwrap();
        let zj1 = z.mul(&j_series(JKind::J1, order)).unwrap();
        let deriv = zj1.differentiate("z").unwrap();
        let one_plus_z2 = GradedSeries::one(&vars, order)
            .add(&z.pow(2).unwrap())
            .unwrap();
        let prod = one_plus_z2.mul(&deriv).unwrap();
        // truncation can leave a stray top-degree term from the z^2 factor;
        // check through order-2
        let good = prod.truncate_above(order - 2);
        assert_eq!(
            good,
            GradedSeries::one(&vars, order).truncate_above(order - 2)
        );
    }

    #[test]
    fn promote_into_larger_table() {
        let j1 = j_series(JKind::J1, 4);
        let big = VarTable::new(&[("x", 1), ("y", 1), ("z", 1)]);
        let p = j1.promote(&big, 4).unwrap();
        assert_eq!(p.coeff(&[0, 0, 2]).as_constant().unwrap(), Rat::new(-1, 3));
        assert!(p.coeff(&[1, 0, 0]).is_zero());
        let missing = VarTable::new(&[("x", 1)]);
        assert_eq!(
            j1.promote(&missing, 4),
            Err(Error::UnknownVariable("z".to_string()))
        );
    }
}
