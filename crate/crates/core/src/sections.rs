//! Hyperplane sections of two explicit families of forms.
//!
//! * The complete intersection `xw = f(x, y) + zt`, `yw = g(x, y) + z^2 + t^2 + h(x, y)`
//!   in `P(1,1,m,m,2m-1)` with `f = g = 0`: the section `y = ax` splits exactly
//!   at the roots of `p(a) = (1 - a^2/4) h(1, a)`.
//! * The double covers `w^2 = A(x, y) + B(x, y) z^2` in `P(1,1,1,2)` with
//!   `deg A = 4`, `deg B = 2`: the section `y = tx` reads
//!   `w^2 = A(1,t) x^4 + B(1,t) x^2 z^2` and splits into two lines exactly
//!   when `A(1,t) = 0` or `B(1,t) = 0`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{factor, BinaryForm, UnivariatePoly};
use crate::rational::{is_rational_square, rat, RationalNumber};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CiSurface {
    pub f: BinaryForm,
    pub g: BinaryForm,
    pub h: BinaryForm,
}

impl CiSurface {
    pub fn split_polynomial(&self) -> Result<UnivariatePoly> {
        if !self.f.is_zero() || !self.g.is_zero() {
            return Err(Error::Unsupported(
                "splitting polynomial is implemented only for f = g = 0".to_string(),
            ));
        }
        ci_split_polynomial(&self.h)
    }
}

/// `p(a) = (1 - a^2/4) h(1, a)`, exactly (not rescaled).
pub fn ci_split_polynomial(h: &BinaryForm) -> Result<UnivariatePoly> {
    if h.is_zero() {
        return Err(Error::Parameter("h is the zero form".to_string()));
    }
    if h.degree() < 4 || h.degree() % 2 == 1 {
        return Err(Error::Parameter(format!(
            "h must have even degree 2m >= 4, got degree {}",
            h.degree()
        )));
    }
    let conic = UnivariatePoly::new(vec![rat(1, 1), rat(0, 1), rat(-1, 4)]);
    Ok(conic.mul(&h.dehomogenize()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RootDescriptor {
    Rational {
        #[serde(serialize_with = "crate::rational::serialize")]
        value: RationalNumber,
    },
    /// The `index`-th (0-based) root of an irreducible, or unfactored, polynomial.
    Algebraic {
        polynomial: String,
        degree: usize,
        index: usize,
    },
    /// The section `x = 0`.
    Infinity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitValue {
    pub root: RootDescriptor,
    /// Which of `A`, `B` vanishes at the root.
    pub vanishing: char,
    /// `c` as a rational, or as a polynomial in `t` reduced modulo the root's minimal polynomial.
    pub c: String,
    /// Lines `w = +-sqrt(c) xz` or `w = +-sqrt(c) x^2` (with `y` for `x` at infinity).
    pub shape: String,
    /// `None` unless the root is rational.
    pub rational_line_pair: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LineCensus {
    pub total_lines: usize,
    pub split_values: Vec<SplitValue>,
    pub includes_infinity_section: bool,
}

impl LineCensus {
    pub fn rational_split_values(&self) -> usize {
        self.split_values
            .iter()
            .filter(|s| matches!(s.root, RootDescriptor::Rational { .. }))
            .count()
    }

    pub fn rational_lines(&self) -> usize {
        2 * self
            .split_values
            .iter()
            .filter(|s| s.rational_line_pair == Some(true))
            .count()
    }
}

fn split_values_for(
    vanishing_form: &UnivariatePoly,
    other: &UnivariatePoly,
    which: char,
    shape: &str,
) -> Result<Vec<SplitValue>> {
    let mut out = Vec::new();
    let fac = factor(vanishing_form)?;
    let pieces = fac.factors.iter().chain(fac.unresolved.iter());
    for f in pieces {
        let d = f.degree().unwrap_or(0);
        if d == 1 {
            let value = -&f.coeffs()[0] / &f.coeffs()[1];
            let c = other.eval(&value);
            out.push(SplitValue {
                rational_line_pair: Some(is_rational_square(&c)),
                root: RootDescriptor::Rational { value },
                vanishing: which,
                c: c.to_string(),
                shape: shape.to_string(),
            });
        } else {
            let residual = other.div_rem(f).1;
            for index in 0..d {
                out.push(SplitValue {
                    root: RootDescriptor::Algebraic {
                        polynomial: f.display_in("t"),
                        degree: d,
                        index,
                    },
                    vanishing: which,
                    c: residual.display_in("t"),
                    shape: shape.to_string(),
                    rational_line_pair: None,
                });
            }
        }
    }
    Ok(out)
}

/// Lines on `w^2 = A(x, y) + B(x, y) z^2`, from the split sections `y = tx` and `x = 0`.
pub fn line_census(a: &BinaryForm, b: &BinaryForm) -> Result<LineCensus> {
    if a.degree() != 4 || b.degree() != 2 {
        return Err(Error::Parameter(format!(
            "expected deg A = 4 and deg B = 2, got {} and {}",
            a.degree(),
            b.degree()
        )));
    }
    if !a.is_squarefree() {
        return Err(Error::Precondition(format!("A = {a} is not squarefree")));
    }
    if !b.is_squarefree() {
        return Err(Error::Precondition(format!("B = {b} is not squarefree")));
    }
    if !a.is_coprime_to(b) {
        return Err(Error::Precondition(format!("A = {a} and B = {b} share a root")));
    }
    let a1 = a.dehomogenize();
    let b1 = b.dehomogenize();
    let mut split_values = split_values_for(&a1, &b1, 'A', "w = +-sqrt(c)*x*z")?;
    split_values.extend(split_values_for(&b1, &a1, 'B', "w = +-sqrt(c)*x^2")?);
    let mut includes_infinity_section = false;
    for (form, other, which, shape) in [
        (a, b, 'A', "w = +-sqrt(c)*y*z"),
        (b, a, 'B', "w = +-sqrt(c)*y^2"),
    ] {
        if form.infinity_multiplicity() > 0 {
            let c = other.at_infinity().clone();
            includes_infinity_section = true;
            split_values.push(SplitValue {
                root: RootDescriptor::Infinity,
                vanishing: which,
                rational_line_pair: Some(is_rational_square(&c)),
                c: c.to_string(),
                shape: shape.to_string(),
            });
        }
    }
    Ok(LineCensus {
        total_lines: 2 * split_values.len(),
        split_values,
        includes_infinity_section,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational_roots;
    use crate::rational::int;

    fn form(c: &[i64]) -> BinaryForm {
        BinaryForm::from_ints(c).unwrap()
    }

    fn xn_plus_yn(deg: usize) -> BinaryForm {
        let mut c = vec![0; deg + 1];
        c[0] = 1;
        c[deg] = 1;
        form(&c)
    }

    #[test]
    fn ci_examples() {
        let p = ci_split_polynomial(&xn_plus_yn(6)).unwrap();
        let expected = UnivariatePoly::new(vec![int(1), int(0), rat(-1, 4)])
            .mul(&UnivariatePoly::from_ints(&[1, 0, 0, 0, 0, 0, 1]));
        assert_eq!(p, expected);
        assert_eq!(p.degree(), Some(8));
        assert!(ci_split_polynomial(&form(&[0, 0, 0, 0, 0])).is_err());
        assert!(ci_split_polynomial(&form(&[1, 0, 1])).is_err());

        let h = form(&[1, 0, -4, 0, 0, 0, 0]);
        let roots: Vec<_> = rational_roots(&ci_split_polynomial(&h).unwrap())
            .unwrap()
            .into_iter()
            .map(|r| r.value)
            .collect();
        assert_eq!(roots, vec![int(-2), rat(-1, 2), rat(1, 2), int(2)]);
    }

    #[test]
    fn ci_surface_restriction() {
        let s = CiSurface {
            f: form(&[0, 0, 0, 0]),
            g: form(&[1, 0, 0, 0]),
            h: xn_plus_yn(6),
        };
        assert!(matches!(s.split_polynomial(), Err(Error::Unsupported(_))));
    }

    #[test]
    fn twelve_lines() {
        let c = line_census(&xn_plus_yn(4), &xn_plus_yn(2)).unwrap();
        assert_eq!(c.total_lines, 12);
        assert_eq!(c.rational_split_values(), 0);
        assert!(!c.includes_infinity_section);
        assert_eq!(c.split_values.iter().filter(|s| s.vanishing == 'A').count(), 4);
    }

    #[test]
    fn rational_split_values() {
        // (x^2 - y^2)(x^2 - 4y^2) = x^4 - 5x^2y^2 + 4y^4, so A(1, t) = (1 - t^2)(1 - 4t^2)
        let c = line_census(&form(&[1, 0, -5, 0, 4]), &xn_plus_yn(2)).unwrap();
        assert_eq!(c.total_lines, 12);
        assert_eq!(c.rational_split_values(), 4);
        assert_eq!(c.rational_lines(), 0);
        let cs: Vec<_> = c
            .split_values
            .iter()
            .filter(|s| s.rational_line_pair.is_some())
            .map(|s| s.c.clone())
            .collect();
        assert_eq!(cs, vec!["2", "5/4", "5/4", "2"]);
        let roots: Vec<_> = c
            .split_values
            .iter()
            .filter_map(|s| match &s.root {
                RootDescriptor::Rational { value } => Some(value.clone()),
                _ => None,
            })
            .collect();
        assert_eq!(roots, vec![int(-1), rat(-1, 2), rat(1, 2), int(1)]);
        let b_side: Vec<_> = c.split_values.iter().filter(|s| s.vanishing == 'B').collect();
        assert_eq!(b_side.len(), 2);
        assert_eq!(b_side[0].c, "10");
    }

    #[test]
    fn infinity_section() {
        // A = x^4 - x y^3 vanishes at [0:1] once
        let c = line_census(&form(&[1, 0, 0, -1, 0]), &xn_plus_yn(2)).unwrap();
        assert!(c.includes_infinity_section);
        assert_eq!(c.total_lines, 12);
        let inf = c.split_values.last().unwrap();
        assert_eq!(inf.root, RootDescriptor::Infinity);
        assert_eq!(inf.rational_line_pair, Some(true));
    }

    #[test]
    fn preconditions() {
        assert!(matches!(
            line_census(&xn_plus_yn(4), &form(&[1, 0, 0])),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            line_census(&form(&[1, 0, -1, 0, 0]), &form(&[0, 1, 0])),
            Err(Error::Precondition(_))
        ));
        assert!(line_census(&xn_plus_yn(2), &xn_plus_yn(2)).is_err());
    }
}
