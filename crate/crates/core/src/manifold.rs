//! Rational cohomology model of a closed, oriented four-manifold with
//! b_1 = 0: nothing beyond (chi, sigma, intersection form Q) is needed
//! downstream. Since b_1 = 0 forces b_3 = 0, H^odd vanishes rationally
//! and no Koszul signs ever appear.

use std::fmt;

use crate::error::{Error, Result};
use crate::param::ParamScalar;
use crate::rational::Rat;
use crate::ring::GradedRing;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FourManifold {
    chi: i64,
    sigma: i64,
    q: Vec<Vec<i64>>,
    p: Vec<Vec<Rat>>,
}

impl FourManifold {
    /// Validate (chi, sigma, Q) and compute the exact inverse P of Q.
    pub fn new(chi: i64, sigma: i64, q: Vec<Vec<i64>>) -> Result<Self> {
        let d = q.len();
        if q.iter().any(|row| row.len() != d) {
            return Err(Error::BadForm("intersection matrix is not square".into()));
        }
        for i in 0..d {
            for j in 0..i {
                if q[i][j] != q[j][i] {
                    return Err(Error::BadForm(format!(
                        "intersection matrix not symmetric at ({i},{j})"
                    )));
                }
            }
        }
        if chi < 2 || (chi - 2) as usize != d {
            return Err(Error::InconsistentTopology(format!(
                "b_2 = {d} but chi - 2 = {}",
                chi - 2
            )));
        }
        let (p, det) = invert_exact(&q)?;
        if !(&det * &det).is_one() {
            return Err(Error::NotUnimodular(det));
        }
        let sig = signature(&q);
        if sig != sigma {
            return Err(Error::InconsistentTopology(format!(
                "signature(Q) = {sig} but sigma = {sigma}"
            )));
        }
        let m = FourManifold { chi, sigma, q, p };
        debug_assert!(m.check_inverse());
        Ok(m)
    }

    fn check_inverse(&self) -> bool {
        let d = self.rank();
        for i in 0..d {
            for j in 0..d {
                let mut acc = Rat::zero();
                for k in 0..d {
                    acc += &(&self.p[i][k] * &Rat::int(self.q[k][j]));
                }
                let want = if i == j { Rat::one() } else { Rat::zero() };
                if acc != want {
                    return false;
                }
            }
        }
        true
    }

    /// b_2(X), the rank of the intersection form.
    pub fn rank(&self) -> usize {
        self.q.len()
    }

    pub fn chi(&self) -> i64 {
        self.chi
    }

    pub fn sigma(&self) -> i64 {
        self.sigma
    }

    pub fn q(&self, i: usize, j: usize) -> i64 {
        self.q[i][j]
    }

    pub fn p(&self, i: usize, j: usize) -> &Rat {
        &self.p[i][j]
    }

    /// u^T Q v for integer coordinate vectors in the beta basis.
    pub fn q_pairing(&self, u: &[i64], v: &[i64]) -> i64 {
        let d = self.rank();
        assert!(u.len() == d && v.len() == d, "coordinate arity mismatch");
        let mut acc = 0i64;
        for i in 0..d {
            for j in 0..d {
                acc += u[i] * self.q[i][j] * v[j];
            }
        }
        acc
    }
}

/// Exact inverse and determinant by Gauss-Jordan elimination over Q.
fn invert_exact(q: &[Vec<i64>]) -> Result<(Vec<Vec<Rat>>, Rat)> {
    let d = q.len();
    let mut a: Vec<Vec<Rat>> = q
        .iter()
        .map(|row| row.iter().map(|&x| Rat::int(x)).collect())
        .collect();
    let mut inv: Vec<Vec<Rat>> = (0..d)
        .map(|i| (0..d).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect())
        .collect();
    let mut det = Rat::one();
    for col in 0..d {
        let pivot_row = (col..d)
            .find(|&r| !a[r][col].is_zero())
            .ok_or_else(|| Error::NotUnimodular(Rat::zero()))?;
        if pivot_row != col {
            a.swap(pivot_row, col);
            inv.swap(pivot_row, col);
            det = -det;
        }
        let pivot = a[col][col].clone();
        det = det * &pivot;
        let inv_pivot = pivot.recip();
        for j in 0..d {
            a[col][j] = &a[col][j] * &inv_pivot;
            inv[col][j] = &inv[col][j] * &inv_pivot;
        }
        for r in 0..d {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for j in 0..d {
                let t = &a[col][j] * &factor;
                a[r][j] -= &t;
                let t = &inv[col][j] * &factor;
                inv[r][j] -= &t;
            }
        }
    }
    Ok((inv, det))
}

/// Signature of a symmetric integer matrix by exact congruence
/// diagonalization (simultaneous row/column operations over Q).
fn signature(q: &[Vec<i64>]) -> i64 {
    let d = q.len();
    let mut a: Vec<Vec<Rat>> = q
        .iter()
        .map(|row| row.iter().map(|&x| Rat::int(x)).collect())
        .collect();
    let mut pos = 0i64;
    let mut neg = 0i64;
    for t in 0..d {
        if a[t][t].is_zero() {
            // bring a nonzero entry onto the diagonal
            if let Some(s) = (t + 1..d).find(|&s| !a[s][s].is_zero()) {
                swap_sym(&mut a, t, s);
            } else {
                let mut found = None;
                'outer: for s in t..d {
                    for u in s + 1..d {
                        if !a[s][u].is_zero() {
                            found = Some((s, u));
                            break 'outer;
                        }
                    }
                }
                let Some((s, u)) = found else { break };
                // row/col u added to row/col s gives 2*a[s][u] on the diagonal
                add_sym(&mut a, s, u);
                if s != t {
                    swap_sym(&mut a, t, s);
                }
            }
        }
        let pivot = a[t][t].clone();
        if pivot.is_negative() {
            neg += 1;
        } else {
            pos += 1;
        }
        for r in t + 1..d {
            if a[r][t].is_zero() {
                continue;
            }
            let factor = &a[r][t] / &pivot;
            for j in 0..d {
                let x = &a[t][j] * &factor;
                a[r][j] -= &x;
            }
            for j in 0..d {
                let x = &a[j][t] * &factor;
                a[j][r] -= &x;
            }
        }
    }
    pos - neg
}

fn swap_sym(a: &mut [Vec<Rat>], i: usize, j: usize) {
    a.swap(i, j);
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

fn add_sym(a: &mut Vec<Vec<Rat>>, i: usize, j: usize) {
    let d = a.len();
    for col in 0..d {
        let x = a[j][col].clone();
        a[i][col] += &x;
    }
    for row in 0..d {
        let x = a[row][j].clone();
        a[row][i] += &x;
    }
}

/// An element of H*(X; Q) for b_1 = 0: components in degrees 0, 2, 4.
/// The degree-2 part is written in the beta* basis, the degree-4 part is
/// a multiple of PD[x].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CohClassX {
    pub deg0: ParamScalar,
    pub deg2: Vec<ParamScalar>,
    pub deg4: ParamScalar,
}

impl CohClassX {
    pub fn zero(d: usize) -> Self {
        CohClassX {
            deg0: ParamScalar::zero(),
            deg2: vec![ParamScalar::zero(); d],
            deg4: ParamScalar::zero(),
        }
    }

    pub fn scalar(d: usize, c: ParamScalar) -> Self {
        let mut v = CohClassX::zero(d);
        v.deg0 = c;
        v
    }

    pub fn one(d: usize) -> Self {
        CohClassX::scalar(d, ParamScalar::one())
    }

    /// Degree-2 class with the given beta* coordinates.
    pub fn two_form(coords: Vec<ParamScalar>) -> Self {
        let d = coords.len();
        let mut v = CohClassX::zero(d);
        v.deg2 = coords;
        v
    }

    /// c * PD[x].
    pub fn point_class(d: usize, c: ParamScalar) -> Self {
        let mut v = CohClassX::zero(d);
        v.deg4 = c;
        v
    }

    pub fn is_zero(&self) -> bool {
        self.deg0.is_zero() && self.deg4.is_zero() && self.deg2.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.deg2.len(), other.deg2.len());
        CohClassX {
            deg0: &self.deg0 + &other.deg0,
            deg2: self
                .deg2
                .iter()
                .zip(&other.deg2)
                .map(|(a, b)| a + b)
                .collect(),
            deg4: &self.deg4 + &other.deg4,
        }
    }

    pub fn scale(&self, c: &ParamScalar) -> Self {
        CohClassX {
            deg0: &self.deg0 * c,
            deg2: self.deg2.iter().map(|a| a * c).collect(),
            deg4: &self.deg4 * c,
        }
    }

    /// Cup product; the degree-2 parts pair through Q into PD[x], and
    /// everything above degree 4 vanishes.
    pub fn cup(&self, other: &Self, m: &FourManifold) -> Self {
        let d = m.rank();
        assert!(self.deg2.len() == d && other.deg2.len() == d);
        let mut out = CohClassX::zero(d);
        out.deg0 = &self.deg0 * &other.deg0;
        for i in 0..d {
            out.deg2[i] = &(&self.deg0 * &other.deg2[i]) + &(&other.deg0 * &self.deg2[i]);
        }
        let mut pairing = ParamScalar::zero();
        for i in 0..d {
            for j in 0..d {
                let qij = m.q(i, j);
                if qij != 0 {
                    pairing = pairing + (&self.deg2[i] * &other.deg2[j]).scale(&Rat::int(qij));
                }
            }
        }
        out.deg4 = &(&(&self.deg0 * &other.deg4) + &(&other.deg0 * &self.deg4)) + &pairing;
        out
    }

    /// Pairing with the fundamental class: the PD[x] coefficient.
    pub fn eval_fundamental(&self) -> ParamScalar {
        self.deg4.clone()
    }
}

/// Ring handle for H*(X) over a fixed manifold.
pub struct XRing<'a> {
    pub manifold: &'a FourManifold,
}

impl GradedRing for XRing<'_> {
    type Elem = CohClassX;

    fn zero(&self) -> CohClassX {
        CohClassX::zero(self.manifold.rank())
    }

    fn one(&self) -> CohClassX {
        CohClassX::one(self.manifold.rank())
    }

    fn add(&self, a: &CohClassX, b: &CohClassX) -> CohClassX {
        a.add(b)
    }

    fn mul(&self, a: &CohClassX, b: &CohClassX) -> CohClassX {
        a.cup(b, self.manifold)
    }

    fn scale(&self, c: &Rat, a: &CohClassX) -> CohClassX {
        a.scale(&ParamScalar::constant(c.clone()))
    }

    fn is_zero(&self, a: &CohClassX) -> bool {
        a.is_zero()
    }

    fn is_homogeneous(&self, a: &CohClassX, degree: u32) -> bool {
        (degree == 0 || a.deg0.is_zero())
            && (degree == 2 || a.deg2.iter().all(|c| c.is_zero()))
            && (degree == 4 || a.deg4.is_zero())
    }

    fn truncate_above(&self, a: &CohClassX, max_degree: u32) -> CohClassX {
        let mut out = a.clone();
        if max_degree < 4 {
            out.deg4 = ParamScalar::zero();
        }
        if max_degree < 2 {
            for c in &mut out.deg2 {
                *c = ParamScalar::zero();
            }
        }
        out
    }
}

impl fmt::Display for CohClassX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        if !self.deg0.is_zero() {
            crate::param::join_signed(&mut out, &self.deg0.to_string());
        }
        for (i, c) in self.deg2.iter().enumerate() {
            if !c.is_zero() {
                crate::param::join_signed(&mut out, &format!("({c})*b{}*", i + 1));
            }
        }
        if !self.deg4.is_zero() {
            crate::param::join_signed(&mut out, &format!("({})*PD[x]", self.deg4));
        }
        if out.is_empty() {
            out.push('0');
        }
        write!(f, "{out}")
    }
}
