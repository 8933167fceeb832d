//! Dense polynomials over `Q`: univariate and binary forms.
//!
//! Root finding is restricted to rational roots; factorization over `Q` is
//! the bounded method of [`factor`], which splits off linear and quadratic
//! factors only.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{int, RationalNumber};

/// Ascending coefficients; no trailing zeros, so the zero polynomial is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnivariatePoly {
    coeffs: Vec<RationalNumber>,
}

impl UnivariatePoly {
    pub fn new(mut coeffs: Vec<RationalNumber>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UnivariatePoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        UnivariatePoly::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        UnivariatePoly { coeffs: Vec::new() }
    }

    pub fn constant(c: RationalNumber) -> Self {
        UnivariatePoly::new(vec![c])
    }

    /// `t - r`
    pub fn linear_root(r: &RationalNumber) -> Self {
        UnivariatePoly::new(vec![-r.clone(), int(1)])
    }

    pub fn coeffs(&self) -> &[RationalNumber] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> RationalNumber {
        self.coeffs.last().cloned().unwrap_or_else(RationalNumber::zero)
    }

    pub fn eval(&self, x: &RationalNumber) -> RationalNumber {
        self.coeffs
            .iter()
            .rev()
            .fold(RationalNumber::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        UnivariatePoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * int(k as i64))
                .collect(),
        )
    }

    pub fn mul(&self, other: &UnivariatePoly) -> Self {
        if self.is_zero() || other.is_zero() {
            return UnivariatePoly::zero();
        }
        let mut out = vec![RationalNumber::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UnivariatePoly::new(out)
    }

    pub fn scale(&self, c: &RationalNumber) -> Self {
        UnivariatePoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &UnivariatePoly) -> (UnivariatePoly, UnivariatePoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![RationalNumber::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let c = rem.last().unwrap() / &lead;
            for (i, b) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &c * b;
            }
            quot[k] = c;
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        (UnivariatePoly::new(quot), UnivariatePoly::new(rem))
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&(int(1) / self.leading()))
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &UnivariatePoly) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Integer coefficients with content 1 and positive leading coefficient.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * RationalNumber::from_integer(den.clone())).to_integer())
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if ints.last().unwrap().is_negative() { -1 } else { 1 };
        ints.into_iter().map(|c| c / &content * sign).collect()
    }

    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }

    /// Formats with the given variable name, highest degree first.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{abs}*{mono}"));
            }
        }
        out
    }
}

impl fmt::Display for UnivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("t"))
    }
}

impl Serialize for UnivariatePoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

/// Homogeneous form in `x, y`; `coeffs[i]` multiplies `x^(degree - i) y^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm {
    degree: usize,
    coeffs: Vec<RationalNumber>,
}

impl BinaryForm {
    pub fn new(degree: usize, coeffs: Vec<RationalNumber>) -> Result<Self> {
        if coeffs.len() != degree + 1 {
            return Err(Error::Parameter(format!(
                "a binary form of degree {degree} needs {} coefficients, got {}",
                degree + 1,
                coeffs.len()
            )));
        }
        Ok(BinaryForm { degree, coeffs })
    }

    /// Degree is inferred from the number of coefficients.
    pub fn from_coeffs(coeffs: Vec<RationalNumber>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Parameter("empty coefficient list".to_string()));
        }
        BinaryForm::new(coeffs.len() - 1, coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Result<Self> {
        BinaryForm::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[RationalNumber] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// `f(1, t)`
    pub fn dehomogenize(&self) -> UnivariatePoly {
        UnivariatePoly::new(self.coeffs.clone())
    }

    /// `f(0, 1)`
    pub fn at_infinity(&self) -> &RationalNumber {
        &self.coeffs[self.degree]
    }

    /// Multiplicity of the root `[0 : 1]`, i.e. the power of `x` dividing `f`.
    pub fn infinity_multiplicity(&self) -> usize {
        match self.dehomogenize().degree() {
            Some(d) => self.degree - d,
            None => self.degree,
        }
    }

    /// Squarefree as a form: distinct roots on `P^1`, counting `[0 : 1]`.
    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.infinity_multiplicity() <= 1 && self.dehomogenize().is_squarefree()
    }

    pub fn is_coprime_to(&self, other: &BinaryForm) -> bool {
        let g = self.dehomogenize().gcd(&other.dehomogenize());
        g.degree() == Some(0) && (self.infinity_multiplicity() == 0 || other.infinity_multiplicity() == 0)
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let mut mono = Vec::new();
            for (var, e) in [("x", self.degree - i), ("y", i)] {
                match e {
                    0 => {}
                    1 => mono.push(var.to_string()),
                    _ => mono.push(format!("{var}^{e}")),
                }
            }
            let abs = c.abs();
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&mono.join("*"))?;
            } else {
                write!(f, "{abs}*{}", mono.join("*"))?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Serialize for BinaryForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

/// Parses `"1, 0, -1/2"` or `"1 0 -1/2"` into rationals.
pub fn parse_coeff_list(s: &str) -> Result<Vec<RationalNumber>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<RationalNumber>()
                .map_err(|_| Error::Parameter(format!("`{t}` is not a rational number")))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalRoot {
    #[serde(serialize_with = "crate::rational::serialize")]
    pub value: RationalNumber,
    pub multiplicity: usize,
}

const DIVISOR_LIMIT: u128 = 1 << 80;

fn positive_divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let v = n
        .abs()
        .to_u128()
        .filter(|&v| v < DIVISOR_LIMIT)
        .ok_or_else(|| Error::Unsupported(format!("coefficient {n} too large for divisor enumeration")))?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d: u128 = 1;
    while d * d <= v {
        if v % d == 0 {
            small.push(d);
            if d * d != v {
                large.push(v / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small.into_iter().map(BigInt::from).collect())
}

/// Distinct rational roots in increasing order, with multiplicities.
pub fn rational_roots(p: &UnivariatePoly) -> Result<Vec<RationalRoot>> {
    if p.is_zero() {
        return Err(Error::Parameter("the zero polynomial has every root".to_string()));
    }
    let mut roots = Vec::new();
    let zero_mult = p.coeffs.iter().take_while(|c| c.is_zero()).count();
    if zero_mult > 0 {
        roots.push(RationalRoot {
            value: RationalNumber::zero(),
            multiplicity: zero_mult,
        });
    }
    let reduced = UnivariatePoly::new(p.coeffs[zero_mult..].to_vec());
    if reduced.degree() == Some(0) {
        return Ok(roots);
    }
    let ints = reduced.primitive_integer();
    let nums = positive_divisors(&ints[0])?;
    let dens = positive_divisors(ints.last().unwrap())?;
    let mut candidates: Vec<RationalNumber> = Vec::new();
    for a in &nums {
        for b in &dens {
            let q = RationalNumber::new(a.clone(), b.clone());
            candidates.push(q.clone());
            candidates.push(-q);
        }
    }
    candidates.sort();
    candidates.dedup();
    for r in candidates {
        let mut mult = 0;
        let mut cur = reduced.clone();
        loop {
            let (q, rem) = cur.div_rem(&UnivariatePoly::linear_root(&r));
            if !rem.is_zero() {
                break;
            }
            mult += 1;
            cur = q;
        }
        if mult > 0 {
            debug_assert!(reduced.eval(&r).is_zero());
            roots.push(RationalRoot {
                value: r,
                multiplicity: mult,
            });
        }
    }
    roots.sort_by(|a, b| a.value.cmp(&b.value));
    Ok(roots)
}

/// Result of the bounded factorization over `Q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factorization {
    #[serde(serialize_with = "crate::rational::serialize")]
    pub unit: RationalNumber,
    /// Irreducible factors with primitive integer coefficients, in ascending degree;
    /// linear factors are ordered by increasing root.
    pub factors: Vec<UnivariatePoly>,
    /// Leftover of degree >= 6 with no linear or quadratic factor; its irreducibility is not decided.
    pub unresolved: Option<UnivariatePoly>,
}

impl Factorization {
    pub fn degrees(&self) -> Vec<usize> {
        self.factors.iter().filter_map(|f| f.degree()).collect()
    }
}

fn primitive_poly(p: &UnivariatePoly) -> UnivariatePoly {
    UnivariatePoly::new(
        p.primitive_integer()
            .into_iter()
            .map(RationalNumber::from_integer)
            .collect(),
    )
}

/// Bound on `|b|` in the quadratic-factor search beyond which the method gives up.
const QUADRATIC_SEARCH_LIMIT: i64 = 1_000_000;

fn find_quadratic_factor(p: &UnivariatePoly) -> Result<Option<UnivariatePoly>> {
    let ints = p.primitive_integer();
    let lead = ints.last().unwrap();
    let cst = &ints[0];
    // Cauchy bound on the roots of p
    let lead_abs = RationalNumber::from_integer(lead.abs());
    let root_bound = ints[..ints.len() - 1]
        .iter()
        .map(|c| RationalNumber::from_integer(c.abs()) / &lead_abs)
        .max()
        .unwrap_or_else(RationalNumber::zero)
        + int(1);
    let root_bound = root_bound.ceil().to_integer();
    for q in positive_divisors(lead)? {
        let b_max = (BigInt::from(2) * &q * &root_bound)
            .to_i64()
            .filter(|&b| b <= QUADRATIC_SEARCH_LIMIT)
            .ok_or_else(|| Error::Unsupported("quadratic factor search range too large".to_string()))?;
        for c_abs in positive_divisors(cst)? {
            for c in [c_abs.clone(), -c_abs] {
                for b in -b_max..=b_max {
                    let cand = UnivariatePoly::new(vec![
                        RationalNumber::from_integer(c.clone()),
                        int(b),
                        RationalNumber::from_integer(q.clone()),
                    ]);
                    if p.div_rem(&cand).1.is_zero() {
                        return Ok(Some(cand));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Splits `p` into irreducible factors over `Q` using rational roots and a
/// bounded search for integer quadratic factors.
pub fn factor(p: &UnivariatePoly) -> Result<Factorization> {
    let roots = rational_roots(p)?;
    let mut factors = Vec::new();
    let mut rest = p.clone();
    for r in &roots {
        let lin = primitive_poly(&UnivariatePoly::linear_root(&r.value));
        for _ in 0..r.multiplicity {
            rest = rest.div_rem(&lin).0;
            factors.push(lin.clone());
        }
    }
    let mut unresolved = None;
    loop {
        match rest.degree() {
            Some(0) => break,
            Some(2) | Some(3) => {
                let f = primitive_poly(&rest);
                rest = rest.div_rem(&f).0;
                factors.push(f);
            }
            Some(_) => match find_quadratic_factor(&rest)? {
                Some(qf) => {
                    rest = rest.div_rem(&qf).0;
                    factors.push(qf);
                }
                None if rest.degree() <= Some(5) => {
                    let f = primitive_poly(&rest);
                    rest = rest.div_rem(&f).0;
                    factors.push(f);
                }
                None => {
                    let f = primitive_poly(&rest);
                    rest = rest.div_rem(&f).0;
                    unresolved = Some(f);
                }
            },
            None => unreachable!("factoring a nonzero polynomial"),
        }
    }
    factors.sort_by_key(|f| f.degree());
    Ok(Factorization {
        unit: rest.leading(),
        factors,
        unresolved,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn values(p: &UnivariatePoly) -> Vec<RationalNumber> {
        rational_roots(p).unwrap().into_iter().map(|r| r.value).collect()
    }

    #[test]
    fn arithmetic() {
        let p = UnivariatePoly::from_ints(&[-1, 0, 1]);
        let q = UnivariatePoly::from_ints(&[1, 1]);
        let (d, r) = p.div_rem(&q);
        assert_eq!(d, UnivariatePoly::from_ints(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(p.gcd(&UnivariatePoly::from_ints(&[1, 2, 1])), q);
        assert_eq!(p.derivative(), UnivariatePoly::from_ints(&[0, 2]));
        assert_eq!(UnivariatePoly::from_ints(&[0, 0, 0]).degree(), None);
    }

    #[test]
    fn display() {
        let p = UnivariatePoly::new(vec![int(1), int(0), rat(-1, 4), int(-3)]);
        assert_eq!(p.display_in("a"), "-3*a^3 - 1/4*a^2 + 1");
        let f = BinaryForm::from_ints(&[1, 0, 0, 0, 1]).unwrap();
        assert_eq!(f.to_string(), "x^4 + y^4");
        let f = BinaryForm::from_ints(&[0, 2, -1]).unwrap();
        assert_eq!(f.to_string(), "2*x*y - y^2");
    }

    #[test]
    fn root_examples() {
        let p = UnivariatePoly::new(vec![int(1), int(0), rat(-1, 4)]).mul(&UnivariatePoly::from_ints(&[1, 0, 0, 0, 0, 0, 1]));
        assert_eq!(values(&p), vec![int(-2), int(2)]);
        assert!(values(&UnivariatePoly::from_ints(&[1, 0, 1])).is_empty());
        assert_eq!(values(&UnivariatePoly::from_ints(&[0, -1, 0, 1])), vec![int(-1), int(0), int(1)]);
        let sq = UnivariatePoly::from_ints(&[4, -12, 9]);
        let r = rational_roots(&sq).unwrap();
        assert_eq!(r, vec![RationalRoot { value: rat(2, 3), multiplicity: 2 }]);
        assert!(rational_roots(&UnivariatePoly::zero()).is_err());
    }

    #[test]
    fn factor_examples() {
        let p = UnivariatePoly::from_ints(&[1, 0, 0, 0, 1]);
        let f = factor(&p).unwrap();
        assert_eq!(f.degrees(), vec![4]);
        assert!(f.unresolved.is_none());

        let p = UnivariatePoly::from_ints(&[4, 0, -5, 0, 1]);
        assert_eq!(factor(&p).unwrap().degrees(), vec![1, 1, 1, 1]);

        let p = UnivariatePoly::from_ints(&[2, 0, 3, 0, 1]);
        let f = factor(&p).unwrap();
        assert_eq!(f.degrees(), vec![2, 2]);

        let p = UnivariatePoly::from_ints(&[1, 0, 0, 0, 0, 0, 1]);
        assert_eq!(factor(&p).unwrap().degrees(), vec![2, 4]);

        let p = UnivariatePoly::from_ints(&[2, 0, 0, 0, 0, 0, 1]);
        let f = factor(&p).unwrap();
        assert!(f.factors.is_empty());
        assert_eq!(f.unresolved.unwrap().degree(), Some(6));
    }

    #[test]
    fn forms() {
        let b = BinaryForm::from_ints(&[1, 0, 0]).unwrap();
        assert!(!b.is_squarefree());
        let a = BinaryForm::from_ints(&[0, 1, 0]).unwrap();
        assert!(a.is_squarefree());
        assert_eq!(a.infinity_multiplicity(), 1);
        let c = BinaryForm::from_ints(&[1, 0]).unwrap();
        assert_eq!(c.infinity_multiplicity(), 1);
        let d = BinaryForm::from_ints(&[1, 1, 0]).unwrap();
        assert!(!d.is_coprime_to(&c));
        assert_eq!(parse_coeff_list("1, 0 -1/2").unwrap(), vec![int(1), int(0), rat(-1, 2)]);
        assert!(parse_coeff_list("1, x").is_err());
    }
}
