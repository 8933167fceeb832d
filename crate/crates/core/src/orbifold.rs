//! Orbifold Riemann-Roch on `S_m^n`, whose only singularity is of type `1/m(1,1)`.
//!
//! `h^0(S, -jK_S) = 1 + j(j+1)/2 (-K_S)^2 + c(j)`, where the correction `c(j)`
//! depends only on `t = -2j mod m`. The closed form is valid on the del Pezzo
//! range; outside `n = m + 4` the values are not exercised by any source
//! computation, but the formula only depends on `(-K_S)^2` and the singular point.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::k_squared_singular;
use crate::rational::{int, rat, to_i64, RationalNumber};
use crate::verdict::is_del_pezzo;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorrectionTerm {
    pub m: i64,
    pub j: i64,
    pub t: i64,
    #[serde(serialize_with = "crate::rational::serialize")]
    pub value: RationalNumber,
}

pub fn correction_term(m: i64, j: i64) -> Result<CorrectionTerm> {
    if m < 2 {
        return Err(Error::Parameter(format!("m = {m} violates m >= 2")));
    }
    if j < 1 {
        return Err(Error::Parameter(format!("j = {j} violates j >= 1")));
    }
    let t = (-2 * j).rem_euclid(m);
    let value = if t == 0 {
        RationalNumber::zero()
    } else {
        (rat(-(m - 1), 2) + rat((m - t + 1) * (t - 1), 2)) / int(m)
    };
    Ok(CorrectionTerm { m, j, t, value })
}

/// `h^0(S_m^n, -jK)`; errors outside the del Pezzo range.
///
/// Valid for every del Pezzo `(m, n)`, though the embedding data only
/// cross-checks `n = m + 4`.
pub fn h0_anti_plurigenus(m: i64, n: i64, j: i64) -> Result<i64> {
    if m < 2 || n < 1 || !is_del_pezzo(m, n) {
        return Err(Error::Parameter(format!(
            "(m, n) = ({m}, {n}) is outside the del Pezzo range"
        )));
    }
    let c = correction_term(m, j)?;
    let chi = int(1) + rat(j * (j + 1), 2) * k_squared_singular(m, n)? + c.value;
    match to_i64(&chi) {
        Some(v) if v >= 0 => Ok(v),
        _ => Err(Error::Internal(format!(
            "h0(-{j}K) on S_{m}^{n} evaluated to {chi}, not a non-negative integer"
        ))),
    }
}

/// One row of the `rr` table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RrRow {
    pub j: i64,
    pub t: i64,
    #[serde(serialize_with = "crate::rational::serialize")]
    pub correction: RationalNumber,
    pub h0: i64,
}

pub fn rr_table(m: i64, n: i64, max_j: i64) -> Result<Vec<RrRow>> {
    if max_j < 1 {
        return Err(Error::Parameter(format!("max-j = {max_j} violates max-j >= 1")));
    }
    (1..=max_j)
        .map(|j| {
            let c = correction_term(m, j)?;
            Ok(RrRow {
                j,
                t: c.t,
                correction: c.value,
                h0: h0_anti_plurigenus(m, n, j)?,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmbeddingDescriptor {
    pub ambient_weights: Vec<i64>,
    pub hypersurface_degrees: Vec<i64>,
}

impl EmbeddingDescriptor {
    /// Coefficients `1..=max_deg` of the Hilbert series
    /// `prod (1 - t^d) / prod (1 - t^w)` of the embedded surface.
    pub fn hilbert_function(&self, max_deg: usize) -> Vec<i64> {
        let len = max_deg + 1;
        let mut series = vec![0i64; len];
        series[0] = 1;
        for &w in &self.ambient_weights {
            let w = w as usize;
            for k in w..len {
                series[k] += series[k - w];
            }
        }
        for &d in &self.hypersurface_degrees {
            let d = d as usize;
            for k in (d..len).rev() {
                series[k] -= series[k - d];
            }
        }
        series.into_iter().skip(1).collect()
    }
}

impl std::fmt::Display for EmbeddingDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let join = |v: &[i64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(
            f,
            "P({}), degrees ({})",
            join(&self.ambient_weights),
            join(&self.hypersurface_degrees)
        )
    }
}

/// Anticanonical model of `S_m^{m+4}` in weighted projective space.
pub fn embedding_descriptor(m: i64) -> Result<EmbeddingDescriptor> {
    if m < 2 {
        return Err(Error::Parameter(format!("m = {m} violates m >= 2")));
    }
    Ok(if m % 2 == 1 {
        let u = (m + 1) / 2;
        EmbeddingDescriptor {
            ambient_weights: vec![1, 1, u, u, 2 * u - 1],
            hypersurface_degrees: vec![2 * u, 2 * u],
        }
    } else {
        let u = m / 2;
        EmbeddingDescriptor {
            ambient_weights: vec![1, 1, u, u + 1],
            hypersurface_degrees: vec![2 * u + 2],
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn correction_examples() {
        assert_eq!(correction_term(5, 1).unwrap().value, rat(1, 5));
        assert_eq!(correction_term(3, 1).unwrap().value, rat(-1, 3));
        assert_eq!(correction_term(4, 2).unwrap().value, int(0));
        assert_eq!(correction_term(2, 7).unwrap().t, 0);
        assert!(correction_term(1, 1).is_err());
        assert!(correction_term(3, 0).is_err());
    }

    #[test]
    fn h0_examples() {
        assert_eq!(h0_anti_plurigenus(3, 7, 2).unwrap(), 5);
        assert_eq!(h0_anti_plurigenus(4, 8, 3).unwrap(), 7);
        assert_eq!(h0_anti_plurigenus(2, 6, 1).unwrap(), 3);
        // t = 0 at (m, j) = (4, 6); agrees with the Hilbert function of P(1,1,2,3) in degree 6
        assert_eq!(h0_anti_plurigenus(4, 8, 6).unwrap(), 22);
        assert_eq!(h0_anti_plurigenus(2, 6, 2).unwrap(), 7);
        assert!(h0_anti_plurigenus(4, 9, 1).is_err());
        assert!(h0_anti_plurigenus(2, 7, 1).is_ok());
    }

    #[test]
    fn embedding_examples() {
        let e = embedding_descriptor(3).unwrap();
        assert_eq!(e.ambient_weights, vec![1, 1, 2, 2, 3]);
        assert_eq!(e.hypersurface_degrees, vec![4, 4]);
        assert_eq!(embedding_descriptor(4).unwrap().to_string(), "P(1,1,2,3), degrees (6)");
        assert_eq!(embedding_descriptor(2).unwrap().to_string(), "P(1,1,1,2), degrees (4)");
        assert!(embedding_descriptor(1).is_err());
    }

    #[test]
    fn hilbert_series_matches_h0() {
        for m in 2..=9 {
            let e = embedding_descriptor(m).unwrap();
            let hf = e.hilbert_function(3 * m as usize);
            for (i, &v) in hf.iter().enumerate() {
                assert_eq!(v, h0_anti_plurigenus(m, m + 4, i as i64 + 1).unwrap(), "m={m} j={}", i + 1);
            }
        }
    }
}
