//! The Kunneth algebra H*(B) (x) H*(X) and its universal classes.
//!
//! H*(B) is the polynomial algebra on the mu-classes mu_1..mu_d (degree 2)
//! and wp (degree 4); the X factor contributes the basis {1, beta*_1..
//! beta*_d, PD[x]}. All generators have even degree, so the algebra is
//! honestly commutative.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::manifold::FourManifold;
use crate::param::ParamScalar;
use crate::rational::Rat;
use crate::ring::GradedRing;

/// Monomial in mu_1..mu_d and wp. Derived Ord is graded-lex because `deg`
/// leads.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct BaseMono {
    deg: u32,
    mu: Vec<u32>,
    wp: u32,
}

impl BaseMono {
    fn new(mu: Vec<u32>, wp: u32) -> Self {
        let deg = 2 * mu.iter().sum::<u32>() + 4 * wp;
        BaseMono { deg, mu, wp }
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn mu_exps(&self) -> &[u32] {
        &self.mu
    }

    pub fn wp_exp(&self) -> u32 {
        self.wp
    }

    fn mul(&self, other: &Self) -> Self {
        BaseMono {
            deg: self.deg + other.deg,
            mu: self.mu.iter().zip(&other.mu).map(|(a, b)| a + b).collect(),
            wp: self.wp + other.wp,
        }
    }

    fn render(&self) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.mu.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("mu{}", i + 1)),
                _ => parts.push(format!("mu{}^{e}", i + 1)),
            }
        }
        match self.wp {
            0 => {}
            1 => parts.push("wp".to_string()),
            e => parts.push(format!("wp^{e}")),
        }
        parts.join("*")
    }
}

/// Sparse polynomial in mu_1..mu_d, wp with ParamScalar coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct BaseClass {
    nmu: usize,
    terms: BTreeMap<BaseMono, ParamScalar>,
}

impl BaseClass {
    pub fn zero(nmu: usize) -> Self {
        BaseClass {
            nmu,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nmu: usize, c: ParamScalar) -> Self {
        let mut b = BaseClass::zero(nmu);
        b.insert(BaseMono::new(vec![0; nmu], 0), c);
        b
    }

    pub fn one(nmu: usize) -> Self {
        BaseClass::constant(nmu, ParamScalar::one())
    }

    /// The generator mu_{i+1} (zero-based index).
    pub fn mu(nmu: usize, i: usize) -> Self {
        assert!(i < nmu);
        let mut exps = vec![0; nmu];
        exps[i] = 1;
        let mut b = BaseClass::zero(nmu);
        b.insert(BaseMono::new(exps, 0), ParamScalar::one());
        b
    }

    /// The point class wp.
    pub fn wp(nmu: usize) -> Self {
        let mut b = BaseClass::zero(nmu);
        b.insert(BaseMono::new(vec![0; nmu], 1), ParamScalar::one());
        b
    }

    pub fn nmu(&self) -> usize {
        self.nmu
    }

    pub fn insert(&mut self, mono: BaseMono, coeff: ParamScalar) {
        use std::collections::btree_map::Entry;
        assert_eq!(mono.mu.len(), self.nmu, "generator arity mismatch");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
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

    pub fn insert_term(&mut self, mu: Vec<u32>, wp: u32, coeff: ParamScalar) {
        self.insert(BaseMono::new(mu, wp), coeff);
    }

    pub fn coeff(&self, mu: Vec<u32>, wp: u32) -> ParamScalar {
        self.terms
            .get(&BaseMono::new(mu, wp))
            .cloned()
            .unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BaseMono, &ParamScalar)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nmu, other.nmu);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        BaseClass {
            nmu: self.nmu,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &ParamScalar) -> Self {
        let mut out = BaseClass::zero(self.nmu);
        if c.is_zero() {
            return out;
        }
        for (m, v) in &self.terms {
            out.insert(m.clone(), c * v);
        }
        out
    }

    pub fn scale_rat(&self, c: &Rat) -> Self {
        self.scale(&ParamScalar::constant(c.clone()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nmu, other.nmu);
        let mut out = BaseClass::zero(self.nmu);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.insert(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = BaseClass::one(self.nmu);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// The part of the class in the given cohomological degree.
    pub fn homogeneous_part(&self, degree: u32) -> Self {
        BaseClass {
            nmu: self.nmu,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.deg == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.deg).max()
    }

    pub fn is_homogeneous(&self, degree: u32) -> bool {
        self.terms.keys().all(|m| m.deg == degree)
    }

    pub fn truncate_above(&self, max_degree: u32) -> Self {
        BaseClass {
            nmu: self.nmu,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.deg <= max_degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for BaseClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (m, c) in &self.terms {
            let mono = m.render();
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

impl fmt::Debug for BaseClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Ring handle for BaseClass polynomials; multiplication is free
/// commutative, so only the generator count is context.
pub struct BaseRing {
    pub nmu: usize,
}

impl GradedRing for BaseRing {
    type Elem = BaseClass;

    fn zero(&self) -> BaseClass {
        BaseClass::zero(self.nmu)
    }

    fn one(&self) -> BaseClass {
        BaseClass::one(self.nmu)
    }

    fn add(&self, a: &BaseClass, b: &BaseClass) -> BaseClass {
        a.add(b)
    }

    fn mul(&self, a: &BaseClass, b: &BaseClass) -> BaseClass {
        a.mul(b)
    }

    fn scale(&self, c: &Rat, a: &BaseClass) -> BaseClass {
        a.scale_rat(c)
    }

    fn is_zero(&self, a: &BaseClass) -> bool {
        a.is_zero()
    }

    fn is_homogeneous(&self, a: &BaseClass, degree: u32) -> bool {
        a.is_homogeneous(degree)
    }

    fn truncate_above(&self, a: &BaseClass, max_degree: u32) -> BaseClass {
        a.truncate_above(max_degree)
    }
}

/// Basis of the X tensor factor.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum XBasis {
    One,
    Beta(usize),
    Point,
}

impl XBasis {
    pub fn degree(&self) -> u32 {
        match self {
            XBasis::One => 0,
            XBasis::Beta(_) => 2,
            XBasis::Point => 4,
        }
    }
}

/// Slant-product target: a homology class of X.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SlantTarget {
    /// A degree-2 basis class beta_k.
    Beta(usize),
    /// A point generator of H_0.
    Point,
    /// The fundamental class [X].
    Fundamental,
}

/// Element of H*(B) (x) H*(X): finitely many X-basis slots, each carrying
/// a BaseClass.
#[derive(Clone, PartialEq, Eq)]
pub struct KunnethClass {
    nmu: usize,
    comps: BTreeMap<XBasis, BaseClass>,
}

impl KunnethClass {
    pub fn zero(nmu: usize) -> Self {
        KunnethClass {
            nmu,
            comps: BTreeMap::new(),
        }
    }

    pub fn one(nmu: usize) -> Self {
        let mut k = KunnethClass::zero(nmu);
        k.insert(XBasis::One, BaseClass::one(nmu));
        k
    }

    /// b x (X-basis element).
    pub fn cross(b: BaseClass, x: XBasis) -> Self {
        let mut k = KunnethClass::zero(b.nmu());
        k.insert(x, b);
        k
    }

    pub fn nmu(&self) -> usize {
        self.nmu
    }

    pub fn insert(&mut self, x: XBasis, b: BaseClass) {
        use std::collections::btree_map::Entry;
        assert_eq!(b.nmu(), self.nmu);
        if let XBasis::Beta(i) = x {
            assert!(i < self.nmu, "beta index beyond b_2");
        }
        if b.is_zero() {
            return;
        }
        match self.comps.entry(x) {
            Entry::Occupied(mut e) => {
                let sum = e.get().add(&b);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
            Entry::Vacant(e) => {
                e.insert(b);
            }
        }
    }

    pub fn component(&self, x: XBasis) -> BaseClass {
        self.comps
            .get(&x)
            .cloned()
            .unwrap_or_else(|| BaseClass::zero(self.nmu))
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&XBasis, &BaseClass)> {
        self.comps.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nmu, other.nmu);
        let mut out = self.clone();
        for (x, b) in &other.comps {
            out.insert(*x, b.clone());
        }
        out
    }

    pub fn scale(&self, c: &ParamScalar) -> Self {
        let mut out = KunnethClass::zero(self.nmu);
        for (x, b) in &self.comps {
            out.insert(*x, b.scale(c));
        }
        out
    }

    pub fn scale_rat(&self, c: &Rat) -> Self {
        self.scale(&ParamScalar::constant(c.clone()))
    }

    pub fn neg(&self) -> Self {
        self.scale_rat(&Rat::int(-1))
    }

    /// Cup product. X-components of total X-degree above 4 vanish; since
    /// all degrees are even the product is commutative with no signs.
    pub fn cup(&self, other: &Self, m: &FourManifold) -> Self {
        assert_eq!(self.nmu, m.rank());
        assert_eq!(other.nmu, m.rank());
        let mut out = KunnethClass::zero(self.nmu);
        for (xa, ba) in &self.comps {
            for (xb, bb) in &other.comps {
                match (xa, xb) {
                    (XBasis::One, x) | (x, XBasis::One) => {
                        out.insert(*x, ba.mul(bb));
                    }
                    (XBasis::Beta(j), XBasis::Beta(l)) => {
                        let q = m.q(*j, *l);
                        if q != 0 {
                            out.insert(XBasis::Point, ba.mul(bb).scale_rat(&Rat::int(q)));
                        }
                    }
                    // X-degree 6 or 8: zero
                    _ => {}
                }
            }
        }
        out
    }

    /// Slant product against a homology class of X, contracting the X
    /// factor: /beta_k sends b x beta*_j to Q_{jk} b, /point sends b x 1
    /// to b, /[X] sends b x PD[x] to b; all other X-degrees die.
    pub fn slant(&self, target: SlantTarget, m: &FourManifold) -> Result<BaseClass> {
        match target {
            SlantTarget::Beta(k) => {
                if k >= m.rank() {
                    return Err(Error::UnknownBasis(format!(
                        "beta_{} on a manifold with b_2 = {}",
                        k + 1,
                        m.rank()
                    )));
                }
                let mut acc = BaseClass::zero(self.nmu);
                for (x, b) in &self.comps {
                    if let XBasis::Beta(j) = x {
                        let q = m.q(*j, k);
                        if q != 0 {
                            acc = acc.add(&b.scale_rat(&Rat::int(q)));
                        }
                    }
                }
                Ok(acc)
            }
            SlantTarget::Point => Ok(self.component(XBasis::One)),
            SlantTarget::Fundamental => Ok(self.component(XBasis::Point)),
        }
    }

    pub fn is_homogeneous(&self, degree: u32) -> bool {
        self.comps
            .iter()
            .all(|(x, b)| degree >= x.degree() && b.is_homogeneous(degree - x.degree()))
    }

    pub fn truncate_above(&self, max_degree: u32) -> Self {
        let mut out = KunnethClass::zero(self.nmu);
        for (x, b) in &self.comps {
            if x.degree() <= max_degree {
                out.insert(*x, b.truncate_above(max_degree - x.degree()));
            }
        }
        out
    }
}

impl fmt::Debug for KunnethClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.comps.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (x, b) in &self.comps {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match x {
                XBasis::One => write!(f, "({b}) x 1")?,
                XBasis::Beta(j) => write!(f, "({b}) x b{}*", j + 1)?,
                XBasis::Point => write!(f, "({b}) x PD[x]")?,
            }
        }
        Ok(())
    }
}

/// p_1 of the universal SO(3) bundle:
/// -4 wp x 1 - 4 sum_{ij} P^{ij} mu_i x beta*_j - 4 ka (1 x PD[x]).
/// `ka` may be symbolic.
pub fn universal_p1(m: &FourManifold, ka: &ParamScalar) -> KunnethClass {
    let d = m.rank();
    let mut out = KunnethClass::zero(d);
    out.insert(XBasis::One, BaseClass::wp(d).scale_rat(&Rat::int(-4)));
    for j in 0..d {
        let mut col = BaseClass::zero(d);
        for i in 0..d {
            let pij = m.p(i, j);
            if !pij.is_zero() {
                col = col.add(&BaseClass::mu(d, i).scale_rat(&(&Rat::int(-4) * pij)));
            }
        }
        out.insert(XBasis::Beta(j), col);
    }
    out.insert(
        XBasis::Point,
        BaseClass::constant(d, ka.scale(&Rat::int(-4))),
    );
    out
}

/// c_1 of the universal U(2) bundle: 1 x (sum w_i beta*_i).
pub fn universal_c1(m: &FourManifold, w: &[i64]) -> Result<KunnethClass> {
    let d = m.rank();
    if w.len() != d {
        return Err(Error::UnknownBasis(format!(
            "coordinate vector of length {} on a manifold with b_2 = {d}",
            w.len()
        )));
    }
    let mut out = KunnethClass::zero(d);
    for (i, &wi) in w.iter().enumerate() {
        if wi != 0 {
            out.insert(XBasis::Beta(i), BaseClass::constant(d, ParamScalar::int(wi)));
        }
    }
    Ok(out)
}

/// Ring handle for the Kunneth algebra over a fixed manifold.
pub struct KunnethRing<'a> {
    pub manifold: &'a FourManifold,
}

impl GradedRing for KunnethRing<'_> {
    type Elem = KunnethClass;

    fn zero(&self) -> KunnethClass {
        KunnethClass::zero(self.manifold.rank())
    }

    fn one(&self) -> KunnethClass {
        KunnethClass::one(self.manifold.rank())
    }

    fn add(&self, a: &KunnethClass, b: &KunnethClass) -> KunnethClass {
        a.add(b)
    }

    fn mul(&self, a: &KunnethClass, b: &KunnethClass) -> KunnethClass {
        a.cup(b, self.manifold)
    }

    fn scale(&self, c: &Rat, a: &KunnethClass) -> KunnethClass {
        a.scale_rat(c)
    }

    fn is_zero(&self, a: &KunnethClass) -> bool {
        a.is_zero()
    }

    fn is_homogeneous(&self, a: &KunnethClass, degree: u32) -> bool {
        a.is_homogeneous(degree)
    }

    fn truncate_above(&self, a: &KunnethClass, max_degree: u32) -> KunnethClass {
        a.truncate_above(max_degree)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s2xs2() -> FourManifold {
        FourManifold::new(4, 0, vec![vec![0, 1], vec![1, 0]]).unwrap()
    }

    /// -1/4 p_1 = wp x 1 + sum P^{ij} mu_i x beta*_j + ka (1 x PD[x]).
    fn quarter_p1(m: &FourManifold, ka: &ParamScalar) -> KunnethClass {
        universal_p1(m, ka).scale_rat(&Rat::new(-1, 4))
    }

    #[test]
    fn cup_beta_against_mu_beta() {
        // (1 x b1*) cup (mu1 x b2*) = Q_{12} mu1 x PD[x] = mu1 x PD[x]
        let m = s2xs2();
        let a = KunnethClass::cross(BaseClass::one(2), XBasis::Beta(0));
        let b = KunnethClass::cross(BaseClass::mu(2, 0), XBasis::Beta(1));
        let ab = a.cup(&b, &m);
        let want = KunnethClass::cross(BaseClass::mu(2, 0), XBasis::Point);
        assert_eq!(ab, want);
    }

    #[test]
    fn cup_of_p_sums_gives_omega_cross_point() {
        // (sum P^{ij} mu_i x b_j*)^2 = (sum P^{ij} mu_i mu_j) x PD[x]
        let m = s2xs2();
        let d = m.rank();
        let mut s = KunnethClass::zero(d);
        for j in 0..d {
            let mut col = BaseClass::zero(d);
            for i in 0..d {
                col = col.add(&BaseClass::mu(d, i).scale_rat(m.p(i, j)));
            }
            s.insert(XBasis::Beta(j), col);
        }
        let sq = s.cup(&s, &m);
        let mut omega = BaseClass::zero(d);
        for i in 0..d {
            for j in 0..d {
                omega = omega.add(&BaseClass::mu(d, i).mul(&BaseClass::mu(d, j)).scale_rat(m.p(i, j)));
            }
        }
        assert_eq!(sq, KunnethClass::cross(omega, XBasis::Point));
    }

    #[test]
    fn cup_kills_x_degree_six() {
        let m = s2xs2();
        let a = KunnethClass::cross(BaseClass::one(2), XBasis::Point);
        let b = KunnethClass::cross(BaseClass::wp(2), XBasis::Beta(0));
        assert!(a.cup(&b, &m).is_zero());
    }

    #[test]
    fn mu_slant_consistency() {
        // -1/4 p_1 / beta_k = mu_k for every k (sum P^{ij} Q_{jk} = delta).
        let m = s2xs2();
        let ka = ParamScalar::ka();
        let c = quarter_p1(&m, &ka);
        for k in 0..m.rank() {
            let s = c.slant(SlantTarget::Beta(k), &m).unwrap();
            assert_eq!(s, BaseClass::mu(2, k), "slant against beta_{k}");
        }
    }

    #[test]
    fn point_slant_gives_wp() {
        let m = s2xs2();
        let c = quarter_p1(&m, &ParamScalar::int(1));
        assert_eq!(c.slant(SlantTarget::Point, &m).unwrap(), BaseClass::wp(2));
    }

    #[test]
    fn fundamental_slant_picks_point_component() {
        let m = s2xs2();
        let c = quarter_p1(&m, &ParamScalar::int(3));
        assert_eq!(
            c.slant(SlantTarget::Fundamental, &m).unwrap(),
            BaseClass::constant(2, ParamScalar::int(3))
        );
        // wrong X-degree slants to zero
        let b = KunnethClass::cross(BaseClass::one(2), XBasis::Beta(0));
        assert!(b.slant(SlantTarget::Fundamental, &m).unwrap().is_zero());
    }

    #[test]
    fn slant_unknown_basis() {
        let m = s2xs2();
        let c = KunnethClass::one(2);
        assert!(matches!(
            c.slant(SlantTarget::Beta(2), &m),
            Err(Error::UnknownBasis(_))
        ));
    }

    #[test]
    fn universal_p1_coefficients() {
        let m = s2xs2();
        let p1 = universal_p1(&m, &ParamScalar::int(1));
        assert_eq!(
            p1.component(XBasis::Point),
            BaseClass::constant(2, ParamScalar::int(-4))
        );
        // coefficient of mu1 x b2* is -4 P^{12} = -4 on the hyperbolic form
        let col = p1.component(XBasis::Beta(1));
        assert_eq!(col.coeff(vec![1, 0], 0), ParamScalar::int(-4));
    }

    #[test]
    fn universal_p1_empty_manifold() {
        let m = FourManifold::new(2, 0, vec![]).unwrap();
        let p1 = universal_p1(&m, &ParamScalar::ka());
        assert_eq!(
            p1.component(XBasis::One),
            BaseClass::wp(0).scale_rat(&Rat::int(-4))
        );
        assert_eq!(
            p1.component(XBasis::Point),
            BaseClass::constant(0, ParamScalar::ka().scale(&Rat::int(-4)))
        );
    }

    #[test]
    fn universal_c1_basics() {
        let m = s2xs2();
        assert!(universal_c1(&m, &[0, 0]).unwrap().is_zero());
        let c = universal_c1(&m, &[1, 0]).unwrap();
        assert_eq!(c, KunnethClass::cross(BaseClass::one(2), XBasis::Beta(0)));
        assert!(matches!(
            universal_c1(&m, &[1]),
            Err(Error::UnknownBasis(_))
        ));
    }

    #[test]
    fn c1_squared_is_q_self_pairing() {
        let m = s2xs2();
        for w in [[1i64, 0], [1, 1], [2, -1], [-2, 3]] {
            let c = universal_c1(&m, &w).unwrap();
            let sq = c.cup(&c, &m);
            let want = KunnethClass::cross(
                BaseClass::constant(2, ParamScalar::int(m.q_pairing(&w, &w))),
                XBasis::Point,
            );
            assert_eq!(sq, want, "w = {w:?}");
        }
    }
}
