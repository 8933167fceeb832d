//! Integer Picard lattices of the minimal resolution `Y` of `S_m^n`.
//!
//! Two coordinate models are provided:
//!
//! * [`ModelKind::Hirzebruch`]: `Y` is the blow-up of the Hirzebruch surface
//!   `F_m` at `n` general points. Basis `(Q, F, E_1, ..., E_n)` with
//!   `Q^2 = -m`, `Q.F = 1`, `F^2 = 0`, `E_i^2 = -1`.
//! * [`ModelKind::Plane`]: only for `n = m + 4`, `Y` is the blow-up of `P^2`
//!   at `m + 4` points on a conic and one point off it. Basis
//!   `(e_0, e_1, ..., e_{m+5})` with form `diag(1, -1, ..., -1)` and
//!   `Q = 2e_0 - (e_1 + ... + e_{m+4})`.
//!
//! Every computation here is exact integer or rational arithmetic.
//!
//! The value `(-K_S)^2 = 8 - n + (m-2)^2/m` returned by [`k_squared_singular`]
//! is derived from the discrepancy of the `1/m(1,1)` point; it is not read
//! off a single source formula.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{int, rat, RationalNumber};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelKind {
    Hirzebruch,
    Plane,
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelKind::Hirzebruch => f.write_str("hirzebruch"),
            ModelKind::Plane => f.write_str("plane"),
        }
    }
}

impl std::str::FromStr for ModelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hirzebruch" => Ok(ModelKind::Hirzebruch),
            "plane" => Ok(ModelKind::Plane),
            other => Err(Error::Parameter(format!(
                "unknown model kind `{other}` (expected `hirzebruch` or `plane`)"
            ))),
        }
    }
}

/// Identifies the lattice a [`DivisorClass`] lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BasisTag {
    pub m: i64,
    pub n: i64,
    pub kind: ModelKind,
}

impl BasisTag {
    pub fn rank(&self) -> usize {
        (self.n + 2) as usize
    }
}

impl fmt::Display for BasisTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(m={}, n={})", self.kind, self.m, self.n)
    }
}

/// Integer coefficient vector over the basis named by its tag.
///
/// Ordering is lexicographic on the coefficient vector, which is the
/// canonical ordering for every emitted class list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DivisorClass {
    coeffs: Vec<i64>,
    basis: BasisTag,
}

impl DivisorClass {
    pub fn new(basis: BasisTag, coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.len() != basis.rank() {
            return Err(Error::Parameter(format!(
                "class has {} coefficients but {} has rank {}",
                coeffs.len(),
                basis,
                basis.rank()
            )));
        }
        Ok(DivisorClass { coeffs, basis })
    }

    pub fn zero(basis: BasisTag) -> Self {
        DivisorClass {
            coeffs: vec![0; basis.rank()],
            basis,
        }
    }

    pub fn basis(&self) -> BasisTag {
        self.basis
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn zip_with(&self, other: &DivisorClass, op: impl Fn(i64, i64) -> i64) -> DivisorClass {
        assert_eq!(
            self.basis, other.basis,
            "divisor arithmetic across different bases"
        );
        DivisorClass {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| op(a, b))
                .collect(),
            basis: self.basis,
        }
    }
}

impl Add for &DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: &DivisorClass) -> DivisorClass {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: &DivisorClass) -> DivisorClass {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        DivisorClass {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            basis: self.basis,
        }
    }
}

impl Mul<&DivisorClass> for i64 {
    type Output = DivisorClass;
    fn mul(self, rhs: &DivisorClass) -> DivisorClass {
        DivisorClass {
            coeffs: rhs.coeffs.iter().map(|c| self * c).collect(),
            basis: rhs.basis,
        }
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Picard lattice of the minimal resolution in one of the two coordinate models.
#[derive(Clone, Debug)]
pub struct SurfaceModel {
    tag: BasisTag,
    gram: Vec<Vec<i64>>,
    basis_names: Vec<String>,
    distinguished: Vec<(String, DivisorClass)>,
    anticanonical: DivisorClass,
}

impl SurfaceModel {
    /// Builds the lattice for `(m, n, kind)`.
    ///
    /// Requires `m >= 2` and `1 <= n <= m + 5`; the plane model exists only for `n = m + 4`.
    pub fn build(m: i64, n: i64, kind: ModelKind) -> Result<Self> {
        if m < 2 {
            return Err(Error::Parameter(format!("m = {m} violates m >= 2")));
        }
        if n < 1 {
            return Err(Error::Parameter(format!("n = {n} violates n >= 1")));
        }
        if n > m + 5 {
            return Err(Error::Parameter(format!(
                "n = {n} violates n <= m + 5 = {}",
                m + 5
            )));
        }
        if kind == ModelKind::Plane && n != m + 4 {
            return Err(Error::Parameter(format!(
                "plane model requires n = m + 4 = {}, got n = {n}",
                m + 4
            )));
        }
        let tag = BasisTag { m, n, kind };
        let rank = tag.rank();
        let nn = n as usize;
        let mut gram = vec![vec![0i64; rank]; rank];
        let basis_names: Vec<String>;
        let unit = |i: usize| {
            let mut c = vec![0; rank];
            c[i] = 1;
            DivisorClass { coeffs: c, basis: tag }
        };
        let mut distinguished = Vec::new();
        let anticanonical;

        match kind {
            ModelKind::Hirzebruch => {
                gram[0][0] = -m;
                gram[0][1] = 1;
                gram[1][0] = 1;
                for i in 2..rank {
                    gram[i][i] = -1;
                }
                basis_names = std::iter::once("Q".to_string())
                    .chain(std::iter::once("F".to_string()))
                    .chain((1..=nn).map(|i| format!("E{i}")))
                    .collect();
                let q = unit(0);
                let f = unit(1);
                distinguished.push(("Q".to_string(), q));
                distinguished.push(("F".to_string(), f.clone()));
                for i in 1..=nn {
                    distinguished.push((format!("E{i}"), unit(i + 1)));
                }
                for i in 1..=nn {
                    distinguished.push((format!("E{i}'"), &f - &unit(i + 1)));
                }
                let mut k = vec![-1; rank];
                k[0] = 2;
                k[1] = m + 2;
                anticanonical = DivisorClass { coeffs: k, basis: tag };
            }
            ModelKind::Plane => {
                gram[0][0] = 1;
                for i in 1..rank {
                    gram[i][i] = -1;
                }
                basis_names = (0..rank).map(|i| format!("e{i}")).collect();
                for i in 0..rank {
                    distinguished.push((format!("e{i}"), unit(i)));
                }
                let mut q = vec![-1; rank];
                q[0] = 2;
                q[rank - 1] = 0;
                distinguished.push(("Q".to_string(), DivisorClass { coeffs: q, basis: tag }));
                for i in 1..=nn {
                    distinguished.push((format!("E{i}"), unit(i)));
                }
                for i in 1..=nn {
                    let prime = &(&unit(0) - &unit(i)) - &unit(rank - 1);
                    distinguished.push((format!("E{i}'"), prime));
                }
                let mut k = vec![-1; rank];
                k[0] = 3;
                anticanonical = DivisorClass { coeffs: k, basis: tag };
            }
        }

        let model = SurfaceModel {
            tag,
            gram,
            basis_names,
            distinguished,
            anticanonical,
        };
        model.check_invariants()?;
        Ok(model)
    }

    fn check_invariants(&self) -> Result<()> {
        let det = determinant(&self.gram);
        if det.abs() != 1 {
            return Err(Error::Internal(format!(
                "{} is not unimodular (det = {det})",
                self.tag
            )));
        }
        let sig = signature(&self.gram);
        if sig != (1, self.rank() - 1) {
            return Err(Error::Internal(format!(
                "{} has signature {sig:?}",
                self.tag
            )));
        }
        let k2 = self.intersect(&self.anticanonical, &self.anticanonical)?;
        if k2 != 8 - self.tag.n {
            return Err(Error::Internal(format!(
                "{}: (-K)^2 = {k2}, expected {}",
                self.tag,
                8 - self.tag.n
            )));
        }
        Ok(())
    }

    pub fn tag(&self) -> BasisTag {
        self.tag
    }

    pub fn m(&self) -> i64 {
        self.tag.m
    }

    pub fn n(&self) -> i64 {
        self.tag.n
    }

    pub fn kind(&self) -> ModelKind {
        self.tag.kind
    }

    pub fn rank(&self) -> usize {
        self.tag.rank()
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    /// Names of the basis vectors, in coefficient order.
    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    /// `u` with `m = 2u - 1` or `m = 2u`.
    pub fn u(&self) -> i64 {
        (self.tag.m + 1) / 2
    }

    pub fn class(&self, coeffs: Vec<i64>) -> Result<DivisorClass> {
        DivisorClass::new(self.tag, coeffs)
    }

    pub fn unit(&self, i: usize) -> DivisorClass {
        let mut c = vec![0; self.rank()];
        c[i] = 1;
        DivisorClass {
            coeffs: c,
            basis: self.tag,
        }
    }

    pub fn distinguished(&self) -> &[(String, DivisorClass)] {
        &self.distinguished
    }

    /// Looks up a distinguished class by name (`"Q"`, `"F"`, `"E3"`, `"E3'"`, `"e0"`, ...).
    pub fn named(&self, name: &str) -> Option<&DivisorClass> {
        self.distinguished
            .iter()
            .find(|(k, _)| k == name)
            .map(|(_, c)| c)
    }

    pub fn anticanonical(&self) -> &DivisorClass {
        &self.anticanonical
    }

    /// The `(-m)`-curve `Q`.
    pub fn q(&self) -> DivisorClass {
        self.named("Q").expect("Q is always distinguished").clone()
    }

    /// Fiber class of the Hirzebruch ruling; `None` in the plane model.
    pub fn fiber(&self) -> Option<DivisorClass> {
        self.named("F").cloned()
    }

    /// `E_i`, 1-based.
    pub fn exceptional(&self, i: usize) -> DivisorClass {
        self.named(&format!("E{i}"))
            .unwrap_or_else(|| panic!("E{i} out of range for {}", self.tag))
            .clone()
    }

    /// `E_i'`: `F - E_i` (Hirzebruch) or `e_0 - e_i - e_{m+5}` (plane), 1-based.
    pub fn exceptional_prime(&self, i: usize) -> DivisorClass {
        self.named(&format!("E{i}'"))
            .unwrap_or_else(|| panic!("E{i}' out of range for {}", self.tag))
            .clone()
    }

    /// `Delta = Q + (m+1)F - (E_1 + ... + E_n)` in the Hirzebruch model.
    pub fn delta(&self) -> Option<DivisorClass> {
        if self.kind() != ModelKind::Hirzebruch {
            return None;
        }
        let mut c = vec![-1; self.rank()];
        c[0] = 1;
        c[1] = self.m() + 1;
        Some(DivisorClass {
            coeffs: c,
            basis: self.tag,
        })
    }

    fn check_basis(&self, d: &DivisorClass) -> Result<()> {
        if d.basis != self.tag {
            return Err(Error::Basis {
                expected: self.tag,
                found: d.basis,
            });
        }
        Ok(())
    }

    /// Intersection number `D1^T G D2`.
    pub fn intersect(&self, d1: &DivisorClass, d2: &DivisorClass) -> Result<i64> {
        self.check_basis(d1)?;
        self.check_basis(d2)?;
        Ok(self.pair(&d1.coeffs, &d2.coeffs))
    }

    /// Pairing on raw coefficient slices of this model's rank.
    pub(crate) fn pair(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut total = 0;
        for (i, row) in self.gram.iter().enumerate() {
            if a[i] == 0 {
                continue;
            }
            let mut s = 0;
            for (j, g) in row.iter().enumerate() {
                s += g * b[j];
            }
            total += a[i] * s;
        }
        total
    }

    pub fn self_intersection(&self, d: &DivisorClass) -> Result<i64> {
        self.intersect(d, d)
    }

    pub fn determinant(&self) -> i64 {
        determinant(&self.gram)
    }

    /// Serializable description of this model together with a list of classes.
    pub fn document(&self, classes: &[DivisorClass]) -> ModelDocument {
        ModelDocument {
            m: self.m(),
            n: self.n(),
            kind: self.kind(),
            classes: classes.iter().map(|c| c.coeffs.clone()).collect(),
        }
    }
}

/// `-K_Y` as a divisor class in the model's basis.
pub fn anticanonical_class(model: &SurfaceModel) -> DivisorClass {
    model.anticanonical.clone()
}

/// `(-K_S)^2 = 8 - n + (m-2)^2/m` for the singular surface `S_m^n`.
///
/// Derived from `(-K_Y)^2 = 8 - n` and the discrepancy `(2-m)/m` of the
/// contracted `(-m)`-curve; only the value `4/m` at `n = m + 4` is checked
/// against independent published data.
pub fn k_squared_singular(m: i64, n: i64) -> Result<RationalNumber> {
    if m < 2 {
        return Err(Error::Parameter(format!("m = {m} violates m >= 2")));
    }
    if n < 1 || n > m + 5 {
        return Err(Error::Parameter(format!(
            "n = {n} outside 1 <= n <= m + 5 = {}",
            m + 5
        )));
    }
    Ok(int(8 - n) + rat((m - 2) * (m - 2), m))
}

/// Inertia indices `(positive, negative)` of the model's form.
pub fn lattice_signature(model: &SurfaceModel) -> (usize, usize) {
    signature(&model.gram)
}

/// Fraction-free (Bareiss) determinant of an integer matrix.
pub fn determinant(a: &[Vec<i64>]) -> i64 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut m: Vec<Vec<i128>> = a
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    (sign * m[n - 1][n - 1]) as i64
}

/// Signature of a symmetric integer form by exact congruence diagonalization.
pub fn signature(a: &[Vec<i64>]) -> (usize, usize) {
    let n = a.len();
    let mut m: Vec<Vec<RationalNumber>> = a
        .iter()
        .map(|r| r.iter().map(|&x| int(x)).collect())
        .collect();
    let (mut pos, mut neg) = (0, 0);
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        // find a non-zero diagonal pivot
        let pivot = active.iter().copied().find(|&i| !m[i][i].is_zero());
        let p = match pivot {
            Some(p) => p,
            None => {
                // all diagonals vanish: look for an off-diagonal entry
                let pair = active.iter().flat_map(|&i| {
                    active.iter().map(move |&j| (i, j))
                })
                .find(|&(i, j)| i != j && !m[i][j].is_zero());
                match pair {
                    Some((i, j)) => {
                        // row/column operation: v_i <- v_i + v_j makes the diagonal 2 m_ij
                        for k in 0..n {
                            let v = m[j][k].clone();
                            m[i][k] += v;
                        }
                        for k in 0..n {
                            let v = m[k][j].clone();
                            m[k][i] += v;
                        }
                        i
                    }
                    // remaining block is zero
                    None => break,
                }
            }
        };
        let d = m[p][p].clone();
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        active.retain(|&i| i != p);
        for &i in &active {
            let factor = &m[i][p] / &d;
            if factor.is_zero() {
                continue;
            }
            for k in 0..n {
                let v = &factor * &m[p][k];
                m[i][k] -= v;
            }
            for k in 0..n {
                let v = &factor * &m[k][p];
                m[k][i] -= v;
            }
        }
    }
    (pos, neg)
}

/// JSON document `{"m", "n", "kind", "classes"}` describing a model and a list of classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelDocument {
    pub m: i64,
    pub n: i64,
    pub kind: ModelKind,
    #[serde(default)]
    pub classes: Vec<Vec<i64>>,
}

impl ModelDocument {
    /// Rebuilds the model and validates every class against its rank.
    pub fn load(&self) -> Result<(SurfaceModel, Vec<DivisorClass>)> {
        let model = SurfaceModel::build(self.m, self.n, self.kind)?;
        let classes = self
            .classes
            .iter()
            .map(|c| model.class(c.clone()))
            .collect::<Result<Vec<_>>>()?;
        Ok((model, classes))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hirzebruch_m2_n6() {
        let y = SurfaceModel::build(2, 6, ModelKind::Hirzebruch).unwrap();
        assert_eq!(y.rank(), 8);
        let q = y.q();
        assert_eq!(y.intersect(&q, &q).unwrap(), -2);
        assert_eq!(
            anticanonical_class(&y).coeffs(),
            &[2, 4, -1, -1, -1, -1, -1, -1]
        );
    }

    #[test]
    fn plane_m2() {
        let y = SurfaceModel::build(2, 6, ModelKind::Plane).unwrap();
        assert_eq!(y.rank(), 8);
        for i in 0..8 {
            for j in 0..8 {
                let want = if i != j { 0 } else if i == 0 { 1 } else { -1 };
                assert_eq!(y.gram()[i][j], want);
            }
        }
        assert_eq!(y.q().coeffs(), &[2, -1, -1, -1, -1, -1, -1, 0]);
        assert_eq!(
            anticanonical_class(&y).coeffs(),
            &[3, -1, -1, -1, -1, -1, -1, -1]
        );
        assert_eq!(y.intersect(&y.q(), y.anticanonical()).unwrap(), 0);
        assert_eq!(y.exceptional(3), y.unit(3));
        assert_eq!(
            y.exceptional_prime(3).coeffs(),
            &[1, 0, 0, -1, 0, 0, 0, -1]
        );
    }

    #[test]
    fn parameter_errors() {
        assert!(matches!(
            SurfaceModel::build(2, 7, ModelKind::Plane),
            Err(Error::Parameter(_))
        ));
        assert!(SurfaceModel::build(1, 3, ModelKind::Hirzebruch).is_err());
        assert!(SurfaceModel::build(3, 0, ModelKind::Hirzebruch).is_err());
        assert!(SurfaceModel::build(3, 9, ModelKind::Hirzebruch).is_err());
        assert!(SurfaceModel::build(3, 8, ModelKind::Hirzebruch).is_ok());
    }

    #[test]
    fn intersect_examples() {
        let y = SurfaceModel::build(5, 3, ModelKind::Hirzebruch).unwrap();
        assert_eq!(y.intersect(&y.q(), &y.q()).unwrap(), -5);
        let f = y.fiber().unwrap();
        assert_eq!(y.intersect(&f, &f).unwrap(), 0);
        let y = SurfaceModel::build(3, 7, ModelKind::Hirzebruch).unwrap();
        let k = anticanonical_class(&y);
        assert_eq!(y.intersect(&k, &k).unwrap(), 1);
    }

    #[test]
    fn basis_mismatch() {
        let a = SurfaceModel::build(2, 6, ModelKind::Plane).unwrap();
        let b = SurfaceModel::build(2, 6, ModelKind::Hirzebruch).unwrap();
        assert!(matches!(
            a.intersect(&a.q(), &b.q()),
            Err(Error::Basis { .. })
        ));
    }

    #[test]
    fn k_squared_values() {
        assert_eq!(k_squared_singular(2, 6).unwrap(), int(2));
        assert_eq!(k_squared_singular(3, 7).unwrap(), rat(4, 3));
        assert_eq!(k_squared_singular(3, 8).unwrap(), rat(1, 3));
        for m in 2..=12 {
            assert_eq!(k_squared_singular(m, m + 4).unwrap(), rat(4, m));
        }
        assert!(k_squared_singular(3, 9).is_err());
        assert!(k_squared_singular(1, 1).is_err());
    }

    #[test]
    fn signatures() {
        let sig = |m, n, k| lattice_signature(&SurfaceModel::build(m, n, k).unwrap());
        assert_eq!(sig(2, 6, ModelKind::Plane), (1, 7));
        assert_eq!(sig(3, 8, ModelKind::Hirzebruch), (1, 9));
        assert_eq!(sig(5, 1, ModelKind::Hirzebruch), (1, 2));
    }

    #[test]
    fn signature_handles_zero_diagonal() {
        // hyperbolic plane
        assert_eq!(signature(&[vec![0, 1], vec![1, 0]]), (1, 1));
        assert_eq!(signature(&[vec![0, 0], vec![0, 0]]), (0, 0));
        assert_eq!(determinant(&[vec![0, 1], vec![1, 0]]), -1);
        assert_eq!(determinant(&[vec![2, 1], vec![1, 2]]), 3);
    }

    #[test]
    fn plane_prime_pairings() {
        for m in 2..=8 {
            let y = SurfaceModel::build(m, m + 4, ModelKind::Plane).unwrap();
            let q = y.q();
            let n = (m + 4) as usize;
            for i in 1..=n {
                assert_eq!(y.intersect(&q, &y.exceptional(i)).unwrap(), 1);
                assert_eq!(y.intersect(&q, &y.exceptional_prime(i)).unwrap(), 1);
                for j in 1..=n {
                    let d = if i == j { 1 } else { 0 };
                    assert_eq!(
                        y.intersect(&y.exceptional(i), &y.exceptional_prime(j)).unwrap(),
                        d
                    );
                    assert_eq!(
                        y.intersect(&y.exceptional_prime(i), &y.exceptional_prime(j)).unwrap(),
                        -d
                    );
                    assert_eq!(
                        y.intersect(&y.exceptional(i), &y.exceptional(j)).unwrap(),
                        -d
                    );
                }
            }
        }
    }

    #[test]
    fn document_round_trip() {
        let y = SurfaceModel::build(3, 7, ModelKind::Plane).unwrap();
        let doc = y.document(&[y.q(), y.anticanonical().clone()]);
        let text = serde_json::to_string(&doc).unwrap();
        assert!(text.contains("\"kind\":\"plane\""));
        let back: ModelDocument = serde_json::from_str(&text).unwrap();
        let (model, classes) = back.load().unwrap();
        assert_eq!(model.tag(), y.tag());
        assert_eq!(classes[0], y.q());
        assert!(serde_json::from_str::<ModelDocument>(r#"{"m":2,"n":6,"kind":"plane","extra":1}"#).is_err());
        let bad: ModelDocument =
            serde_json::from_str(r#"{"m":2,"n":6,"kind":"plane","classes":[[1,2]]}"#).unwrap();
        assert!(bad.load().is_err());
    }
}
