//! Galois actions on finite systems of `(-1)`-curves and the invariant `ell_S`.
//!
//! An action is given by permutation generators on the indices of a
//! [`CurveSystem`]. The group is never materialized; only its orbits are.
//! `ell_S` is the largest union of orbits whose members all meet `Q`
//! (`C.Q >= 1`) and are pairwise disjoint.

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::curves::{curves_meeting_q, SearchBox};
use crate::error::{Error, Result};
use crate::lattice::{DivisorClass, ModelKind, SurfaceModel};

/// Largest system accepted by [`brute_force_ell`].
pub const BRUTE_FORCE_LIMIT: usize = 24;

#[derive(Clone, Debug)]
pub struct CurveSystem {
    model: SurfaceModel,
    curves: Vec<DivisorClass>,
    pair_gram: Vec<Vec<i64>>,
    q_incidence: Vec<i64>,
}

impl CurveSystem {
    /// Checks that every curve is a `(-1)`-class with `C.Q >= 0` and tabulates intersections.
    pub fn new(model: SurfaceModel, curves: Vec<DivisorClass>) -> Result<Self> {
        let q = model.q();
        let k = model.anticanonical().clone();
        let mut q_incidence = Vec::with_capacity(curves.len());
        for (i, c) in curves.iter().enumerate() {
            let sq = model.self_intersection(c)?;
            let deg = model.intersect(c, &k)?;
            if sq != -1 || deg != 1 {
                return Err(Error::Parameter(format!(
                    "curve {} = {c} has C^2 = {sq}, C.(-K) = {deg}; expected -1 and 1",
                    i + 1
                )));
            }
            let cq = model.intersect(c, &q)?;
            if cq < 0 {
                return Err(Error::Parameter(format!(
                    "curve {} = {c} has C.Q = {cq} < 0",
                    i + 1
                )));
            }
            q_incidence.push(cq);
        }
        for i in 0..curves.len() {
            for j in 0..i {
                if curves[i] == curves[j] {
                    return Err(Error::Parameter(format!(
                        "curves {} and {} coincide",
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        let pair_gram = curves
            .iter()
            .map(|a| curves.iter().map(|b| model.pair(a.coeffs(), b.coeffs())).collect())
            .collect();
        Ok(CurveSystem {
            model,
            curves,
            pair_gram,
            q_incidence,
        })
    }

    /// The `(-1)`-curves meeting `Q`.
    ///
    /// Plane model: `E_1, ..., E_{m+4}, E_1', ..., E_{m+4}'` in that order.
    /// Hirzebruch model: the certified default-box search, in lexicographic order.
    pub fn auto(model: SurfaceModel) -> Result<Self> {
        let curves = match model.kind() {
            ModelKind::Plane => {
                let k = (model.m() + 4) as usize;
                (1..=k)
                    .map(|i| model.exceptional(i))
                    .chain((1..=k).map(|i| model.exceptional_prime(i)))
                    .collect()
            }
            ModelKind::Hirzebruch => curves_meeting_q(&model, &SearchBox::default_for(&model))?,
        };
        CurveSystem::new(model, curves)
    }

    pub fn model(&self) -> &SurfaceModel {
        &self.model
    }

    pub fn curves(&self) -> &[DivisorClass] {
        &self.curves
    }

    pub fn len(&self) -> usize {
        self.curves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }

    pub fn pair_gram(&self) -> &[Vec<i64>] {
        &self.pair_gram
    }

    pub fn q_incidence(&self) -> &[i64] {
        &self.q_incidence
    }

    /// Index of `class` in the system, if present.
    pub fn index_of(&self, class: &DivisorClass) -> Option<usize> {
        self.curves.iter().position(|c| c == class)
    }
}

/// Permutation generators on `0..degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisAction {
    degree: usize,
    generators: Vec<Vec<usize>>,
}

impl GaloisAction {
    pub fn new(degree: usize, generators: Vec<Vec<usize>>) -> Result<Self> {
        for (g, perm) in generators.iter().enumerate() {
            if perm.len() != degree {
                return Err(Error::Parameter(format!(
                    "generator {} has length {}, expected {degree}",
                    g + 1,
                    perm.len()
                )));
            }
            let mut seen = vec![false; degree];
            for &x in perm {
                if x >= degree || seen[x] {
                    return Err(Error::Parameter(format!(
                        "generator {} is not a permutation of {degree} points",
                        g + 1
                    )));
                }
                seen[x] = true;
            }
        }
        Ok(GaloisAction { degree, generators })
    }

    pub fn trivial(degree: usize) -> Self {
        GaloisAction {
            degree,
            generators: Vec::new(),
        }
    }

    /// Builds an action from 1-based image lists, the external format.
    pub fn from_one_based(degree: usize, generators: &[Vec<i64>]) -> Result<Self> {
        let gens = generators
            .iter()
            .enumerate()
            .map(|(g, perm)| {
                perm.iter()
                    .map(|&x| {
                        if x < 1 || x as usize > degree {
                            Err(Error::Parameter(format!(
                                "generator {} has image {x} outside 1..={degree}",
                                g + 1
                            )))
                        } else {
                            Ok(x as usize - 1)
                        }
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        GaloisAction::new(degree, gens)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Vec<usize>] {
        &self.generators
    }

    pub fn with_generator(&self, perm: Vec<usize>) -> Result<Self> {
        let mut gens = self.generators.clone();
        gens.push(perm);
        GaloisAction::new(self.degree, gens)
    }

    /// Orbits, each sorted, ordered by smallest element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut orbit_of = vec![usize::MAX; self.degree];
        let mut orbits = Vec::new();
        for start in 0..self.degree {
            if orbit_of[start] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            let mut members = vec![start];
            orbit_of[start] = id;
            let mut head = 0;
            while head < members.len() {
                let x = members[head];
                head += 1;
                for g in &self.generators {
                    let y = g[x];
                    if orbit_of[y] == usize::MAX {
                        orbit_of[y] = id;
                        members.push(y);
                    }
                }
            }
            members.sort_unstable();
            orbits.push(members);
        }
        orbits
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// `pair_gram[g(i)][g(j)] != pair_gram[i][j]`, indices 0-based.
    Gram {
        generator: usize,
        i: usize,
        j: usize,
        expected: i64,
        found: i64,
    },
    Incidence {
        generator: usize,
        i: usize,
        expected: i64,
        found: i64,
    },
    Degree {
        expected: usize,
        found: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Gram {
                generator,
                i,
                j,
                expected,
                found,
            } => write!(
                f,
                "generator {} maps pair ({}, {}) with intersection {expected} to a pair with intersection {found}",
                generator + 1,
                i + 1,
                j + 1
            ),
            Violation::Incidence {
                generator,
                i,
                expected,
                found,
            } => write!(
                f,
                "generator {} maps curve {} with C.Q = {expected} to a curve with C.Q = {found}",
                generator + 1,
                i + 1
            ),
            Violation::Degree { expected, found } => {
                write!(f, "action has degree {found} but the system has {expected} curves")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("valid");
        }
        write!(f, "{} violation(s): ", self.violations.len())?;
        for (k, v) in self.violations.iter().enumerate() {
            if k > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Lists every generator/pair that fails to preserve intersections or `Q`-incidence.
pub fn validate_action(system: &CurveSystem, action: &GaloisAction) -> ValidationReport {
    let mut violations = Vec::new();
    if action.degree() != system.len() {
        violations.push(Violation::Degree {
            expected: system.len(),
            found: action.degree(),
        });
        return ValidationReport { violations };
    }
    let gram = system.pair_gram();
    let inc = system.q_incidence();
    for (gi, g) in action.generators().iter().enumerate() {
        for i in 0..system.len() {
            if inc[g[i]] != inc[i] {
                violations.push(Violation::Incidence {
                    generator: gi,
                    i,
                    expected: inc[i],
                    found: inc[g[i]],
                });
            }
            for j in i..system.len() {
                if gram[g[i]][g[j]] != gram[i][j] {
                    violations.push(Violation::Gram {
                        generator: gi,
                        i,
                        j,
                        expected: gram[i][j],
                        found: gram[g[i]][g[j]],
                    });
                }
            }
        }
    }
    ValidationReport { violations }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EllResult {
    pub ell: usize,
    /// Sorted 0-based curve indices.
    pub witness: Vec<usize>,
    pub witness_orbits: Vec<Vec<usize>>,
}

struct Prepared {
    orbits: Vec<Vec<usize>>,
    /// Orbits that may appear in a witness.
    nodes: Vec<usize>,
}

fn prepare(system: &CurveSystem, action: &GaloisAction) -> Result<Prepared> {
    let report = validate_action(system, action);
    if !report.is_valid() {
        return Err(Error::InvalidAction(report));
    }
    let orbits = action.orbits();
    let gram = system.pair_gram();
    let inc = system.q_incidence();
    let nodes = (0..orbits.len())
        .filter(|&o| {
            let orb = &orbits[o];
            orb.iter().all(|&i| inc[i] >= 1)
                && orb
                    .iter()
                    .enumerate()
                    .all(|(a, &i)| orb[a + 1..].iter().all(|&j| gram[i][j] == 0))
        })
        .collect();
    Ok(Prepared { orbits, nodes })
}

fn orbits_compatible(gram: &[Vec<i64>], a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|&i| b.iter().all(|&j| gram[i][j] == 0))
}

fn finish(orbits: &[Vec<usize>], chosen: &[usize]) -> EllResult {
    let mut witness_orbits: Vec<Vec<usize>> = chosen.iter().map(|&o| orbits[o].clone()).collect();
    witness_orbits.sort();
    let mut witness: Vec<usize> = witness_orbits.iter().flatten().copied().collect();
    witness.sort_unstable();
    EllResult {
        ell: witness.len(),
        witness,
        witness_orbits,
    }
}

fn witness_of(orbits: &[Vec<usize>], chosen: &[usize]) -> Vec<usize> {
    let mut w: Vec<usize> = chosen.iter().flat_map(|&o| orbits[o].iter().copied()).collect();
    w.sort_unstable();
    w
}

/// Exact `ell_S` by branch and bound over the orbit compatibility graph.
///
/// Among maximum witnesses the lexicographically least sorted index list is returned.
pub fn compute_ell(system: &CurveSystem, action: &GaloisAction) -> Result<EllResult> {
    let prep = prepare(system, action)?;
    let gram = system.pair_gram();
    let mut nodes = prep.nodes.clone();
    nodes.sort_by(|&a, &b| {
        prep.orbits[b]
            .len()
            .cmp(&prep.orbits[a].len())
            .then(prep.orbits[a][0].cmp(&prep.orbits[b][0]))
    });
    let k = nodes.len();
    let compat: Vec<Vec<bool>> = nodes
        .iter()
        .map(|&a| {
            nodes
                .iter()
                .map(|&b| a != b && orbits_compatible(gram, &prep.orbits[a], &prep.orbits[b]))
                .collect()
        })
        .collect();
    let weight: Vec<usize> = nodes.iter().map(|&o| prep.orbits[o].len()).collect();

    struct Search<'a> {
        compat: &'a [Vec<bool>],
        weight: &'a [usize],
        nodes: &'a [usize],
        orbits: &'a [Vec<usize>],
        best: usize,
        best_set: Vec<usize>,
        best_witness: Vec<usize>,
    }

    impl Search<'_> {
        fn offer(&mut self, current: &[usize], total: usize) {
            let chosen: Vec<usize> = current.iter().map(|&p| self.nodes[p]).collect();
            let w = witness_of(self.orbits, &chosen);
            if total > self.best || (total == self.best && w < self.best_witness) {
                self.best = total;
                self.best_set = chosen;
                self.best_witness = w;
            }
        }

        fn go(&mut self, candidates: Vec<usize>, current: &mut Vec<usize>, total: usize) {
            let bound = total + candidates.iter().map(|&c| self.weight[c]).sum::<usize>();
            if bound < self.best {
                return;
            }
            self.offer(current, total);
            for (pos, &c) in candidates.iter().enumerate() {
                let rest: Vec<usize> = candidates[pos + 1..]
                    .iter()
                    .copied()
                    .filter(|&d| self.compat[c][d])
                    .collect();
                current.push(c);
                self.go(rest, current, total + self.weight[c]);
                current.pop();
                let remaining: usize = candidates[pos + 1..].iter().map(|&d| self.weight[d]).sum();
                if total + remaining < self.best {
                    break;
                }
            }
        }
    }

    let mut search = Search {
        compat: &compat,
        weight: &weight,
        nodes: &nodes,
        orbits: &prep.orbits,
        best: 0,
        best_set: Vec::new(),
        best_witness: Vec::new(),
    };
    search.go((0..k).collect(), &mut Vec::new(), 0);
    Ok(finish(&prep.orbits, &search.best_set))
}

/// Exhaustive `ell_S` over all unions of orbits; at most [`BRUTE_FORCE_LIMIT`] curves.
pub fn brute_force_ell(system: &CurveSystem, action: &GaloisAction) -> Result<EllResult> {
    if system.len() > BRUTE_FORCE_LIMIT {
        return Err(Error::SizeGuard {
            size: system.len(),
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let report = validate_action(system, action);
    if !report.is_valid() {
        return Err(Error::InvalidAction(report));
    }
    let orbits = action.orbits();
    let gram = system.pair_gram();
    let n = system.len();
    let q_mask: u32 = (0..n)
        .filter(|&i| system.q_incidence()[i] >= 1)
        .fold(0, |acc, i| acc | 1 << i);
    let conflict: Vec<u32> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| j != i && gram[i][j] != 0)
                .fold(0, |acc, j| acc | 1 << j)
        })
        .collect();
    let orbit_mask: Vec<u32> = orbits
        .iter()
        .map(|o| o.iter().fold(0, |acc, &i| acc | 1 << i))
        .collect();

    let mut best: Option<(usize, Vec<usize>, Vec<usize>)> = None;
    for subset in 0u64..(1u64 << orbits.len()) {
        let chosen: Vec<usize> = (0..orbits.len()).filter(|&o| subset >> o & 1 == 1).collect();
        let mask = chosen.iter().fold(0u32, |acc, &o| acc | orbit_mask[o]);
        if mask & !q_mask != 0 {
            continue;
        }
        if (0..n).any(|i| mask >> i & 1 == 1 && conflict[i] & mask != 0) {
            continue;
        }
        let size = mask.count_ones() as usize;
        let w = witness_of(&orbits, &chosen);
        let better = match &best {
            None => true,
            Some((s, bw, _)) => size > *s || (size == *s && w < *bw),
        };
        if better {
            best = Some((size, w, chosen));
        }
    }
    let (_, _, chosen) = best.expect("the empty union is always admissible");
    Ok(finish(&orbits, &chosen))
}

/// For odd `m`, `Q` always carries a rational point.
pub fn q_point_forced(m: i64) -> bool {
    m % 2 != 0
}

/// Random element of the group of permutations of `2k` points preserving the
/// pairing `i <-> i + k`. On the plane system of [`CurveSystem::auto`] with
/// `k = m + 4` every such permutation is a valid action.
pub fn random_pairing_permutation<R: Rng + ?Sized>(k: usize, rng: &mut R) -> Vec<usize> {
    let mut sigma: Vec<usize> = (0..k).collect();
    sigma.shuffle(rng);
    let mut perm = vec![0; 2 * k];
    for i in 0..k {
        let flip = rng.gen_bool(0.5);
        let (a, b) = if flip {
            (sigma[i] + k, sigma[i])
        } else {
            (sigma[i], sigma[i] + k)
        };
        perm[i] = a;
        perm[i + k] = b;
    }
    perm
}

/// The permutation `i -> i + 1` on each half of the plane system, cycling both blocks.
pub fn paired_cycle(k: usize) -> Vec<usize> {
    (0..2 * k)
        .map(|i| if i < k { (i + 1) % k } else { k + (i - k + 1) % k })
        .collect()
}

/// The permutation exchanging `E_i` and `E_i'` for every `i` on the plane system.
pub fn pairing_swap(k: usize) -> Vec<usize> {
    (0..2 * k).map(|i| if i < k { i + k } else { i - k }).collect()
}
