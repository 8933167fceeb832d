//! (-1)-curve classes on the minimal resolution.
//!
//! Two independent routes are provided:
//!
//! * closed-form families ([`closed_form_minus_one_classes`]), and
//! * a bounded integer search ([`brute_force_minus_one_classes`]) over all
//!   classes `D` with `D^2 = -1`, `D.(-K) = 1` that pair non-negatively with
//!   every known effective class other than themselves. Each search result is
//!   certified by re-running on a box enlarged by one in every coordinate.
//!
//! Search coordinates:
//!
//! * Hirzebruch model: `(a, d, c_1, ..., c_n)` where `a = D.F`, `d = D.Q` and
//!   `D = aQ + (d + ma)F - sum c_i E_i`.
//! * Plane model: `(deg, mu_1, ..., mu_{m+5})` where `D = deg e_0 - sum mu_j e_j`.
//!
//! For `n = m + 5` the search result is a census of *arithmetic* classes: the
//! closed-form side only pins down the incidence with `Q` and `E_0`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{DivisorClass, ModelKind, SurfaceModel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyLabel {
    /// `E_i`, or `e_i` in the plane model.
    Exceptional,
    /// `F - E_i`, or `e_0 - e_i - e_{m+5}` in the plane model.
    FiberResidual,
    /// `Q + mF - (m+1 of the E_i)`.
    QSection,
    /// `Q + (m+1)F - (E_1 + ... + E_{m+3})`.
    DeltaClass,
    /// `d e_0 - (2d of the e_i) - (d-1) e_{m+5}`, disjoint from `Q`.
    PlaneDegreeD,
    /// `Q + (m+2)F - (E_1 + ... + E_{m+5})`.
    E0,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveFamily {
    pub label: FamilyLabel,
    /// Degree `d` for [`FamilyLabel::PlaneDegreeD`].
    pub degree: Option<i64>,
    pub members: Vec<DivisorClass>,
}

/// Integer intervals for each search coordinate (see module docs).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBox {
    bounds: Vec<(i64, i64)>,
    empty: bool,
}

impl SearchBox {
    pub fn new(bounds: Vec<(i64, i64)>) -> Result<Self> {
        if let Some((i, &(lo, hi))) = bounds.iter().enumerate().find(|(_, &(lo, hi))| lo > hi) {
            return Err(Error::Parameter(format!(
                "search interval {i} is empty: [{lo}, {hi}]"
            )));
        }
        Ok(SearchBox {
            bounds,
            empty: false,
        })
    }

    /// The box containing no points.
    pub fn empty(dim: usize) -> Self {
        SearchBox {
            bounds: vec![(0, -1); dim],
            empty: true,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.empty
    }

    pub fn bounds(&self) -> &[(i64, i64)] {
        &self.bounds
    }

    pub fn enlarged(&self, by: i64) -> SearchBox {
        SearchBox {
            bounds: self.bounds.iter().map(|&(lo, hi)| (lo - by, hi + by)).collect(),
            empty: self.empty,
        }
    }

    /// Symmetric box: leading coordinates in `[0, bound]`, the rest in `[-bound, bound]`.
    pub fn with_bound(model: &SurfaceModel, bound: i64) -> Result<Self> {
        if bound < 1 {
            return Err(Error::Parameter(format!("bound = {bound} must be >= 1")));
        }
        let rank = model.rank();
        let mut bounds = vec![(-bound, bound); rank];
        for i in leading_coords(model) {
            if i == 0 || model.kind() == ModelKind::Hirzebruch {
                bounds[i] = (0, bound);
            }
        }
        SearchBox::new(bounds)
    }

    /// Default box for a model.
    ///
    /// Hirzebruch: `a in [0,2]`, `d in [0,3]`, `c_i in [-2,3]`, widened to the
    /// Cauchy-Schwarz envelope `(sum c)^2 <= n sum c^2` whenever that envelope
    /// is bounded. Plane: `deg in [0, m/2 + 3]`, `mu_j in [-2, 2]` for
    /// `j <= m+4`, and `mu_{m+5} in [-2, m/2 + 3]` so that `mu_{m+5} = deg - 1`
    /// fits for every admissible degree.
    pub fn default_for(model: &SurfaceModel) -> SearchBox {
        let m = model.m();
        let n = model.n();
        match model.kind() {
            ModelKind::Hirzebruch => {
                let (mut a_hi, mut d_hi, mut c_hi) = (2, 3, 3);
                if let Some((a, d, c)) = cauchy_schwarz_envelope(m, n) {
                    a_hi = a_hi.max(a);
                    d_hi = d_hi.max(d);
                    c_hi = c_hi.max(c);
                }
                let mut bounds = vec![(0, a_hi), (0, d_hi)];
                bounds.extend(std::iter::repeat_n((-2, c_hi), n as usize));
                SearchBox {
                    bounds,
                    empty: false,
                }
            }
            ModelKind::Plane => {
                let deg_hi = m / 2 + 3;
                let mut bounds = vec![(0, deg_hi)];
                bounds.extend(std::iter::repeat_n((-2, 2), (m + 4) as usize));
                bounds.push((-2, deg_hi));
                SearchBox {
                    bounds,
                    empty: false,
                }
            }
        }
    }
}

/// Largest `(a, d, isqrt(sum c^2))` over leading values admitted by Cauchy-Schwarz,
/// or `None` if the admissible region is unbounded.
fn cauchy_schwarz_envelope(m: i64, n: i64) -> Option<(i64, i64, i64)> {
    const LIMIT: i64 = 64;
    let mut env: Option<(i64, i64, i64)> = None;
    for a in 0..=LIMIT {
        for d in 0..=LIMIT {
            let s = (m + 2) * a + 2 * d - 1;
            let t = m * a * a + 2 * a * d + 1;
            if t < 0 || s * s > n * t {
                continue;
            }
            if a == LIMIT || d == LIMIT {
                return None;
            }
            let c = isqrt(t);
            env = Some(match env {
                None => (a, d, c),
                Some((a0, d0, c0)) => (a0.max(a), d0.max(d), c0.max(c)),
            });
        }
    }
    env
}

fn isqrt(t: i64) -> i64 {
    let mut r = (t as f64).sqrt() as i64;
    while r * r > t {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= t {
        r += 1;
    }
    r
}

/// Indices of the two search coordinates that are looped over directly.
fn leading_coords(model: &SurfaceModel) -> [usize; 2] {
    match model.kind() {
        ModelKind::Hirzebruch => [0, 1],
        ModelKind::Plane => [0, model.rank() - 1],
    }
}

/// Converts search coordinates to a class coefficient vector.
pub fn coords_to_class(model: &SurfaceModel, x: &[i64]) -> Result<DivisorClass> {
    let m = model.m();
    let coeffs = match model.kind() {
        ModelKind::Hirzebruch => {
            let mut c = Vec::with_capacity(x.len());
            c.push(x[0]);
            c.push(x[1] + m * x[0]);
            c.extend(x[2..].iter().map(|v| -v));
            c
        }
        ModelKind::Plane => {
            let mut c = Vec::with_capacity(x.len());
            c.push(x[0]);
            c.extend(x[1..].iter().map(|v| -v));
            c
        }
    };
    model.class(coeffs)
}

/// Inverse of [`coords_to_class`].
pub fn class_to_coords(model: &SurfaceModel, d: &DivisorClass) -> Vec<i64> {
    let c = d.coeffs();
    match model.kind() {
        ModelKind::Hirzebruch => {
            let mut x = vec![c[0], c[1] - model.m() * c[0]];
            x.extend(c[2..].iter().map(|v| -v));
            x
        }
        ModelKind::Plane => {
            let mut x = vec![c[0]];
            x.extend(c[1..].iter().map(|v| -v));
            x
        }
    }
}

/// `D^2 = -1` and `D.(-K) = 1`.
pub fn is_minus_one_class(model: &SurfaceModel, d: &DivisorClass) -> Result<bool> {
    Ok(model.intersect(d, d)? == -1 && model.intersect(d, model.anticanonical())? == 1)
}

/// Effective classes every (-1)-curve other than themselves must pair non-negatively with.
pub fn known_effective(model: &SurfaceModel) -> Vec<DivisorClass> {
    let m = model.m();
    let n = model.n();
    let mut out = vec![model.q()];
    match model.kind() {
        ModelKind::Hirzebruch => {
            out.push(model.fiber().expect("hirzebruch model has a fiber"));
            out.extend((1..=n as usize).map(|i| model.exceptional(i)));
            if n <= m + 3 {
                out.push(model.delta().expect("hirzebruch model has Delta"));
            }
            if n == m + 5 {
                out.push(e0_class(model));
            }
        }
        ModelKind::Plane => {
            out.extend((0..model.rank()).map(|i| model.unit(i)));
        }
    }
    out
}

fn passes_effectivity(model: &SurfaceModel, d: &DivisorClass, effective: &[DivisorClass]) -> bool {
    effective
        .iter()
        .all(|e| e == d || model.pair(d.coeffs(), e.coeffs()) >= 0)
}

/// All arithmetic (-1)-classes inside `search`, sorted, without the stability certificate.
pub fn enumerate_in_box(model: &SurfaceModel, search: &SearchBox) -> Result<Vec<DivisorClass>> {
    if search.bounds.len() != model.rank() {
        return Err(Error::Parameter(format!(
            "search box has {} coordinates, model {} needs {}",
            search.bounds.len(),
            model.tag(),
            model.rank()
        )));
    }
    if search.is_empty() {
        return Ok(Vec::new());
    }
    let [i0, i1] = leading_coords(model);
    let tail_idx: Vec<usize> = (0..model.rank()).filter(|i| *i != i0 && *i != i1).collect();
    check_tail_structure(model, &tail_idx)?;

    let tail_bounds: Vec<(i64, i64)> = tail_idx.iter().map(|&i| search.bounds[i]).collect();
    let suffix = Suffix::new(&tail_bounds);
    let effective = known_effective(model);
    let neg_k = model.anticanonical().coeffs().to_vec();

    let mut out = Vec::new();
    let mut x = vec![0i64; model.rank()];
    for v0 in search.bounds[i0].0..=search.bounds[i0].1 {
        for v1 in search.bounds[i1].0..=search.bounds[i1].1 {
            x.iter_mut().for_each(|v| *v = 0);
            x[i0] = v0;
            x[i1] = v1;
            let lead = coords_to_class(model, &x)?;
            let sq_target = model.pair(lead.coeffs(), lead.coeffs()) + 1;
            let sum_target = model.pair(lead.coeffs(), &neg_k) - 1;
            let mut tail = Vec::with_capacity(tail_idx.len());
            let mut found = Vec::new();
            tail_dfs(&tail_bounds, &suffix, sum_target, sq_target, &mut tail, &mut found);
            for t in found {
                for (k, &i) in tail_idx.iter().enumerate() {
                    x[i] = t[k];
                }
                let d = coords_to_class(model, &x)?;
                if !is_minus_one_class(model, &d)? {
                    return Err(Error::Internal(format!(
                        "tail search produced non-(-1) class {d}"
                    )));
                }
                if passes_effectivity(model, &d, &effective) {
                    out.push(d);
                }
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// The tail coordinates must contribute `-x_i^2` to `D^2` and `-x_i` to `D.(-K)`,
/// independently of the leading coordinates.
fn check_tail_structure(model: &SurfaceModel, tail_idx: &[usize]) -> Result<()> {
    let rank = model.rank();
    let vec_for = |i: usize| -> Result<DivisorClass> {
        let mut x = vec![0; rank];
        x[i] = 1;
        let with = coords_to_class(model, &x)?;
        let zero = coords_to_class(model, &vec![0; rank])?;
        Ok(&with - &zero)
    };
    let k = model.anticanonical();
    let lead: Vec<DivisorClass> = leading_coords(model)
        .iter()
        .map(|&i| vec_for(i))
        .collect::<Result<_>>()?;
    let tails: Vec<DivisorClass> = tail_idx.iter().map(|&i| vec_for(i)).collect::<Result<_>>()?;
    for (a, ta) in tails.iter().enumerate() {
        let ok = model.intersect(ta, k)? == -1
            && lead.iter().all(|l| model.pair(ta.coeffs(), l.coeffs()) == 0)
            && tails
                .iter()
                .enumerate()
                .all(|(b, tb)| model.pair(ta.coeffs(), tb.coeffs()) == if a == b { -1 } else { 0 });
        if !ok {
            return Err(Error::Internal(format!(
                "tail coordinate {a} of {} is not an orthonormal (-1) direction",
                model.tag()
            )));
        }
    }
    Ok(())
}

struct Suffix {
    min_sum: Vec<i64>,
    max_sum: Vec<i64>,
    max_sq: Vec<i64>,
}

impl Suffix {
    fn new(bounds: &[(i64, i64)]) -> Self {
        let k = bounds.len();
        let mut s = Suffix {
            min_sum: vec![0; k + 1],
            max_sum: vec![0; k + 1],
            max_sq: vec![0; k + 1],
        };
        for i in (0..k).rev() {
            let (lo, hi) = bounds[i];
            s.min_sum[i] = s.min_sum[i + 1] + lo;
            s.max_sum[i] = s.max_sum[i + 1] + hi;
            s.max_sq[i] = s.max_sq[i + 1] + (lo * lo).max(hi * hi);
        }
        s
    }
}

/// Enumerates tail vectors with prescribed sum and sum of squares.
fn tail_dfs(
    bounds: &[(i64, i64)],
    suffix: &Suffix,
    sum_left: i64,
    sq_left: i64,
    cur: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) {
    let idx = cur.len();
    let r = (bounds.len() - idx) as i64;
    if r == 0 {
        if sum_left == 0 && sq_left == 0 {
            out.push(cur.clone());
        }
        return;
    }
    if sq_left < 0
        || sum_left * sum_left > r * sq_left
        || sum_left < suffix.min_sum[idx]
        || sum_left > suffix.max_sum[idx]
        || sq_left > suffix.max_sq[idx]
    {
        return;
    }
    let (lo, hi) = bounds[idx];
    for v in lo..=hi {
        if v * v > sq_left {
            continue;
        }
        cur.push(v);
        tail_dfs(bounds, suffix, sum_left - v, sq_left - v * v, cur, out);
        cur.pop();
    }
}

/// Certified bounded search: the result must be unchanged on the box enlarged by one.
pub fn brute_force_minus_one_classes(
    model: &SurfaceModel,
    search: &SearchBox,
) -> Result<Vec<DivisorClass>> {
    let inner = enumerate_in_box(model, search)?;
    if search.is_empty() {
        return Ok(inner);
    }
    let outer = enumerate_in_box(model, &search.enlarged(1))?;
    if outer != inner {
        let witness = outer
            .iter()
            .find(|d| inner.binary_search(d).is_err())
            .map(|d| d.coeffs().to_vec())
            .unwrap_or_default();
        return Err(Error::BoxTooSmall { witness });
    }
    Ok(inner)
}

fn e0_class(model: &SurfaceModel) -> DivisorClass {
    let mut c = vec![-1; model.rank()];
    c[0] = 1;
    c[1] = model.m() + 2;
    model.class(c).expect("rank matches")
}

/// The (-1)-curve `E_0 = Q + (m+2)F - (E_1 + ... + E_{m+5})` with `E_0.Q = 2`.
pub fn distinguished_e0(model: &SurfaceModel) -> Result<DivisorClass> {
    if model.kind() != ModelKind::Hirzebruch || model.n() != model.m() + 5 {
        return Err(Error::Unsupported(format!(
            "E_0 is defined for the Hirzebruch model with n = m + 5, not {}",
            model.tag()
        )));
    }
    let e0 = e0_class(model);
    let q = model.q();
    let residual = &(model.anticanonical() - &q) - &e0;
    if model.intersect(&e0, &e0)? != -1
        || model.intersect(&e0, &q)? != 2
        || model.intersect(&e0, model.anticanonical())? != 1
        || !residual.is_zero()
    {
        return Err(Error::Internal(format!("E_0 postconditions fail on {}", model.tag())));
    }
    Ok(e0)
}

/// Oracle classes meeting `Q` (`D.Q >= 1`).
pub fn curves_meeting_q(model: &SurfaceModel, search: &SearchBox) -> Result<Vec<DivisorClass>> {
    let q = model.q();
    let all = brute_force_minus_one_classes(model, search)?;
    Ok(all
        .into_iter()
        .filter(|d| model.pair(d.coeffs(), q.coeffs()) >= 1)
        .collect())
}

pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn family(label: FamilyLabel, degree: Option<i64>, mut members: Vec<DivisorClass>) -> CurveFamily {
    members.sort();
    CurveFamily {
        label,
        degree,
        members,
    }
}

/// Complete list of (-1)-classes from the closed-form families.
///
/// Supported: Hirzebruch model with `n <= m + 3`, and the plane model.
pub fn closed_form_minus_one_classes(model: &SurfaceModel) -> Result<Vec<CurveFamily>> {
    let m = model.m();
    let n = model.n();
    let nn = n as usize;
    let mut out = Vec::new();
    match model.kind() {
        ModelKind::Hirzebruch => {
            if n > m + 3 {
                return Err(Error::Unsupported(format!(
                    "no closed form for the Hirzebruch model with n = {n} > m + 3; use the search oracle"
                )));
            }
            let f = model.fiber().expect("hirzebruch model has a fiber");
            let q = model.q();
            out.push(family(
                FamilyLabel::Exceptional,
                None,
                (1..=nn).map(|i| model.exceptional(i)).collect(),
            ));
            out.push(family(
                FamilyLabel::FiberResidual,
                None,
                (1..=nn).map(|i| &f - &model.exceptional(i)).collect(),
            ));
            if n > m {
                let base = &q + &(m * &f);
                let members = combinations(nn, (m + 1) as usize)
                    .into_iter()
                    .map(|set| {
                        set.iter()
                            .fold(base.clone(), |acc, &i| &acc - &model.exceptional(i + 1))
                    })
                    .collect();
                out.push(family(FamilyLabel::QSection, None, members));
            }
            if n == m + 3 {
                out.push(family(
                    FamilyLabel::DeltaClass,
                    None,
                    vec![model.delta().expect("hirzebruch model has Delta")],
                ));
            }
        }
        ModelKind::Plane => {
            out.push(family(
                FamilyLabel::Exceptional,
                None,
                (1..=nn).map(|i| model.exceptional(i)).collect(),
            ));
            out.push(family(
                FamilyLabel::FiberResidual,
                None,
                (1..=nn).map(|i| model.exceptional_prime(i)).collect(),
            ));
            let last = model.rank() - 1;
            for d in 0..=(m / 2 + 2) {
                let mut members = Vec::new();
                for set in combinations(nn, (2 * d) as usize) {
                    let mut c = vec![0; model.rank()];
                    c[0] = d;
                    for i in set {
                        c[i + 1] = -1;
                    }
                    c[last] = -(d - 1);
                    members.push(model.class(c)?);
                }
                out.push(family(FamilyLabel::PlaneDegreeD, Some(d), members));
            }
        }
    }
    Ok(out)
}

/// Flattens families into one canonically sorted class list.
pub fn flatten(families: &[CurveFamily]) -> Vec<DivisorClass> {
    let mut all: Vec<DivisorClass> = families.iter().flat_map(|f| f.members.clone()).collect();
    all.sort();
    all
}

/// For a plane-model class disjoint from `Q`, returns `(d, indices)` when it has the
/// normal form `d e_0 - e_{i_1} - ... - e_{i_{2d}} - (d-1) e_{m+5}` (indices 1-based).
pub fn plane_normal_form(model: &SurfaceModel, d: &DivisorClass) -> Option<(i64, Vec<usize>)> {
    if model.kind() != ModelKind::Plane {
        return None;
    }
    let c = d.coeffs();
    let deg = c[0];
    let last = c.len() - 1;
    if -c[last] != deg - 1 {
        return None;
    }
    let mut idx = Vec::new();
    for (j, &v) in c[1..last].iter().enumerate() {
        match v {
            0 => {}
            -1 => idx.push(j + 1),
            _ => return None,
        }
    }
    (idx.len() as i64 == 2 * deg).then_some((deg, idx))
}

/// Binomial coefficient.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// `sum_{d=0}^{floor(m/2)+2} C(m+4, 2d)`: number of plane-model (-1)-classes disjoint from `Q`.
pub fn plane_q_avoiding_count(m: i64) -> u64 {
    (0..=(m / 2 + 2) as u64)
        .map(|d| binomial((m + 4) as u64, 2 * d))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hirz(m: i64, n: i64) -> SurfaceModel {
        SurfaceModel::build(m, n, ModelKind::Hirzebruch).unwrap()
    }

    fn plane(m: i64) -> SurfaceModel {
        SurfaceModel::build(m, m + 4, ModelKind::Plane).unwrap()
    }

    #[test]
    fn combinations_small() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
        assert!(combinations(2, 3).is_empty());
        assert_eq!(combinations(5, 3).len(), 10);
    }

    #[test]
    fn closed_form_m2_n1() {
        let y = hirz(2, 1);
        let all = flatten(&closed_form_minus_one_classes(&y).unwrap());
        assert_eq!(all.len(), 2);
        assert!(all.contains(&y.exceptional(1)));
        assert!(all.contains(&(&y.fiber().unwrap() - &y.exceptional(1))));
    }

    #[test]
    fn closed_form_m2_n5_has_delta() {
        let y = hirz(2, 5);
        let fams = closed_form_minus_one_classes(&y).unwrap();
        assert_eq!(flatten(&fams).len(), 21);
        let delta = y.delta().unwrap();
        assert_eq!(delta.coeffs(), &[1, 3, -1, -1, -1, -1, -1]);
        assert!(flatten(&fams).contains(&delta));
    }

    #[test]
    fn closed_form_plane_counts() {
        let y = plane(2);
        let fams = closed_form_minus_one_classes(&y).unwrap();
        let q = y.q();
        let all = flatten(&fams);
        let meeting = all.iter().filter(|d| y.intersect(d, &q).unwrap() > 0).count();
        assert_eq!(meeting, 12);
        assert_eq!(all.len() - meeting, 32);
        assert_eq!(plane_q_avoiding_count(2), 32);
    }

    #[test]
    fn closed_form_unsupported_for_m_plus_5() {
        assert!(matches!(
            closed_form_minus_one_classes(&hirz(2, 7)),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn oracle_m3_n4_default_box() {
        let y = hirz(3, 4);
        let mut b = vec![(0, 2), (0, 2)];
        b.extend(std::iter::repeat_n((-2, 2), 4));
        let found = brute_force_minus_one_classes(&y, &SearchBox::new(b).unwrap()).unwrap();
        assert_eq!(found.len(), 9);
        assert_eq!(found, flatten(&closed_form_minus_one_classes(&y).unwrap()));
    }

    #[test]
    fn oracle_plane_m2_normal_form() {
        let y = plane(2);
        let mut b = vec![(0, 3)];
        b.extend(std::iter::repeat_n((-1, 2), 7));
        let found = enumerate_in_box(&y, &SearchBox::new(b).unwrap()).unwrap();
        let q = y.q();
        let avoiding: Vec<_> = found
            .iter()
            .filter(|d| y.intersect(d, &q).unwrap() == 0)
            .collect();
        assert_eq!(avoiding.len(), 32);
        for d in avoiding {
            let x = class_to_coords(&y, d);
            assert_eq!(x[7], x[0] - 1, "mu_(m+5) = d - 1 for {d}");
            assert!(x[1..7].iter().all(|&mu| mu == 0 || mu == 1));
            assert!(plane_normal_form(&y, d).is_some());
        }
    }

    #[test]
    fn empty_box() {
        let y = hirz(2, 3);
        let found = brute_force_minus_one_classes(&y, &SearchBox::empty(5)).unwrap();
        assert!(found.is_empty());
        assert!(SearchBox::new(vec![(1, 0)]).is_err());
    }

    #[test]
    fn box_too_small_reports_witness() {
        let y = hirz(2, 5);
        let mut b = vec![(0, 0), (0, 1)];
        b.extend(std::iter::repeat_n((-1, 1), 5));
        match brute_force_minus_one_classes(&y, &SearchBox::new(b).unwrap()) {
            Err(Error::BoxTooSmall { witness }) => {
                // Q-section classes have a = 1
                assert_eq!(witness[0], 1);
            }
            other => panic!("expected BoxTooSmall, got {other:?}"),
        }
    }

    #[test]
    fn wrong_box_dimension() {
        let y = hirz(2, 3);
        assert!(matches!(
            enumerate_in_box(&y, &SearchBox::new(vec![(0, 1); 3]).unwrap()),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn e0_examples() {
        let y = hirz(2, 7);
        let e0 = distinguished_e0(&y).unwrap();
        assert_eq!(e0.coeffs(), &[1, 4, -1, -1, -1, -1, -1, -1, -1]);
        assert_eq!(y.intersect(&e0, &y.q()).unwrap(), 2);
        let y = hirz(3, 8);
        let e0 = distinguished_e0(&y).unwrap();
        assert!((&(y.anticanonical() - &y.q()) - &e0).is_zero());
        let y = hirz(5, 10);
        let e0 = distinguished_e0(&y).unwrap();
        assert_eq!(y.intersect(&e0, &e0).unwrap(), -1);
        assert!(distinguished_e0(&hirz(2, 6)).is_err());
        assert!(distinguished_e0(&plane(2)).is_err());
    }

    #[test]
    fn meeting_q_plane() {
        for m in [2, 3] {
            let y = plane(m);
            let found = curves_meeting_q(&y, &SearchBox::default_for(&y)).unwrap();
            assert_eq!(found.len() as i64, 2 * m + 8);
        }
    }

    #[test]
    fn meeting_q_m2_n7() {
        let y = hirz(2, 7);
        let found = curves_meeting_q(&y, &SearchBox::default_for(&y)).unwrap();
        let e0 = distinguished_e0(&y).unwrap();
        assert!(found.contains(&e0));
        let f = y.fiber().unwrap();
        for i in 1..=7 {
            assert!(found.contains(&(&f - &y.exceptional(i))));
        }
        let q = y.q();
        for d in found.iter().filter(|d| **d != e0) {
            let pair = (y.intersect(d, &e0).unwrap(), y.intersect(d, &q).unwrap());
            assert_eq!(pair, (0, 1));
        }
    }

    #[test]
    fn coords_round_trip() {
        let y = hirz(3, 4);
        let x = vec![1, 2, 0, 1, -1, 3];
        let d = coords_to_class(&y, &x).unwrap();
        assert_eq!(d.coeffs(), &[1, 5, 0, -1, 1, -3]);
        assert_eq!(class_to_coords(&y, &d), x);
        let y = plane(2);
        let x = vec![2, 1, 1, 0, 1, 1, 0, 1];
        assert_eq!(class_to_coords(&y, &coords_to_class(&y, &x).unwrap()), x);
    }

    #[test]
    fn envelope_bounded_exactly_in_del_pezzo_range() {
        assert!(cauchy_schwarz_envelope(2, 7).is_some());
        assert!(cauchy_schwarz_envelope(3, 8).is_some());
        assert!(cauchy_schwarz_envelope(4, 9).is_none());
        assert!(cauchy_schwarz_envelope(6, 10).is_some());
    }
}
