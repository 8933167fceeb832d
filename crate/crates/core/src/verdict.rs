//! Rationality and cylindricity verdicts for forms of `S_m^n`.
//!
//! Inputs are `(m, n)`, the invariant `ell_S` when `n >= m + 4`, and what is
//! known about a rational point on `Q`. Every undetermined case is reported as
//! [`TriState::Open`].

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::galois::q_point_forced;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TriState {
    Yes,
    No,
    Open,
}

impl fmt::Display for TriState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TriState::Yes => "yes",
            TriState::No => "no",
            TriState::Open => "open",
        })
    }
}

impl std::str::FromStr for TriState {
    type Err = Error;

    /// Accepts `yes`, `no`, and `unknown` (or `open`).
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "yes" => Ok(TriState::Yes),
            "no" => Ok(TriState::No),
            "unknown" | "open" => Ok(TriState::Open),
            other => Err(Error::Parameter(format!(
                "unknown Q-point status `{other}` (expected yes, no or unknown)"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub rational: TriState,
    pub cylindrical: TriState,
    pub citations: Vec<String>,
    pub notes: Vec<String>,
}

pub fn is_del_pezzo(m: i64, n: i64) -> bool {
    (m >= 4 && n <= m + 4) || ((m == 2 || m == 3) && n <= m + 5)
}

/// Values `ell_S` can take on a form of `S_m^n`; defined only for `n` in `{m+4, m+5}`.
pub fn feasible_ell(m: i64, n: i64) -> Result<BTreeSet<i64>> {
    if m < 2 {
        return Err(Error::Parameter(format!("m = {m} violates m >= 2")));
    }
    if n == m + 4 {
        Ok((0..=m + 2).chain([m + 4]).collect())
    } else if n == m + 5 {
        Ok((1..=m + 3).chain([m + 5, m + 6]).collect())
    } else {
        Err(Error::Parameter(format!(
            "ell_S is undefined for (m, n) = ({m}, {n}); it is defined only for n = m + 4 or n = m + 5"
        )))
    }
}

fn both(state: TriState, tag: &str) -> (TriState, TriState, Vec<&str>) {
    (state, state, vec![tag])
}

fn if_q(q: TriState) -> TriState {
    if q == TriState::Yes {
        TriState::Yes
    } else {
        TriState::Open
    }
}

pub fn classify(m: i64, n: i64, ell: Option<i64>, q_point: TriState) -> Result<Verdict> {
    if m < 2 {
        return Err(Error::Parameter(format!("m = {m} violates m >= 2")));
    }
    if n < 1 || n > m + 5 {
        return Err(Error::Parameter(format!(
            "n = {n} is outside 1..={}",
            m + 5
        )));
    }
    let mut notes = Vec::new();
    let mut citations: Vec<String> = Vec::new();
    let q = if q_point_forced(m) {
        if q_point == TriState::No {
            notes.push(format!(
                "Q-point status `no` overridden: Q always has a rational point for odd m = {m}"
            ));
        }
        if q_point != TriState::Yes {
            citations.push("lem:Fm".to_string());
        }
        TriState::Yes
    } else {
        q_point
    };
    if !is_del_pezzo(m, n) {
        notes.push(format!(
            "S_{m}^{n} is not a del Pezzo surface; the verdict applies the theorem as stated"
        ));
    }

    let (rational, cylindrical, tags) = if n <= m + 3 {
        if let Some(l) = ell {
            return Err(Error::Parameter(format!(
                "ell = {l} supplied for n = {n} <= m + 3, where ell_S is undefined"
            )));
        }
        if n <= m + 1 {
            (q, TriState::Yes, vec!["thm:intermediate(1)"])
        } else if n == m + 2 {
            if q == TriState::Yes {
                both(TriState::Yes, "thm:intermediate(2)")
            } else {
                (TriState::Open, TriState::Open, vec![])
            }
        } else {
            (TriState::Yes, if_q(q), vec!["thm:intermediate(3)"])
        }
    } else {
        let feasible = feasible_ell(m, n)?;
        let l = ell.ok_or_else(|| {
            Error::Parameter(format!("ell is required for n = {n} = m + {}", n - m))
        })?;
        if !feasible.contains(&l) {
            return Err(Error::Infeasible {
                m,
                n,
                ell: l,
                feasible: feasible.into_iter().collect(),
            });
        }
        if n == m + 4 {
            if l <= m {
                both(TriState::No, "thm:m+4(1)")
            } else if l == m + 1 {
                both(TriState::Yes, "thm:m+4(3)")
            } else if l == m + 2 {
                if q == TriState::Yes {
                    both(TriState::Yes, "thm:m+4(4)")
                } else {
                    (TriState::Open, TriState::Open, vec![])
                }
            } else if m % 2 == 1 {
                both(TriState::Yes, "thm:m+4(5)")
            } else {
                (TriState::Open, TriState::Open, vec![])
            }
        } else if l <= m + 1 {
            both(TriState::No, "thm:m+5(1)")
        } else if l == m + 2 || l == m + 6 {
            both(TriState::Yes, "thm:m+5(3)")
        } else if l == m + 3 {
            if q == TriState::Yes {
                both(TriState::Yes, "thm:m+5(4)")
            } else {
                (TriState::Open, TriState::Open, vec![])
            }
        } else {
            (TriState::Yes, if_q(q), vec!["thm:m+5(5)"])
        }
    };
    let mut all: Vec<String> = tags.into_iter().map(String::from).collect();
    if rational == TriState::Open && cylindrical == TriState::Open {
        citations.clear();
    }
    all.extend(citations);
    Ok(Verdict {
        rational,
        cylindrical,
        citations: all,
        notes,
    })
}
