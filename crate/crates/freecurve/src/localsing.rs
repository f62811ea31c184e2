//! Local invariants at singular points: Milnor number, Tjurina number,
//! multiplicity, quasi-homogeneity and singularity-type labels.
//!
//! Dimensions of the local algebras are computed on truncations: the
//! dimension of K[x,y]/(I + m^N) is monotone in N and two consecutive equal
//! values certify stabilization (Nakayama), so the stabilized value is the
//! honest local dimension for isolated singularities.

use crate::exactla::Matrix;
use crate::numfield::{Field, FieldElement};
use crate::polyring::{BivariatePoly, Chart, HomogPoly, Mat3};
use serde::Serialize;
use std::collections::HashMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LocalError {
    #[error("the origin is not a singular point of the local equation")]
    NotSingularAtOrigin,
    #[error("local algebra dimension did not stabilize (non-isolated singularity?)")]
    NonIsolated,
    #[error("the point does not lie on the curve")]
    PointNotOnCurve,
    #[error("the point is a smooth point of the curve")]
    PointNotSingular,
    #[error("point coordinates require an unsupported field extension")]
    FieldTooSmall,
}

/// Invariants of one singular point. `branches` counts incident smooth
/// components when the point comes from an arrangement; 0 means unknown
/// (raw-curve mode).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalInvariants {
    pub mu: usize,
    pub tau: usize,
    pub multiplicity: usize,
    pub branches: usize,
    pub quasi_homogeneous: bool,
}

/// Normal-form labels; everything outside the supported table is `Other`
/// with its raw invariants.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum SingTypeLabel {
    A(usize),
    D4,
    X9,
    Ordinary(usize),
    Other {
        mu: usize,
        tau: usize,
        multiplicity: usize,
        branches: usize,
    },
}

impl fmt::Display for SingTypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SingTypeLabel::A(k) => write!(f, "A{}", k),
            SingTypeLabel::D4 => write!(f, "D4"),
            SingTypeLabel::X9 => write!(f, "X9"),
            SingTypeLabel::Ordinary(m) => write!(f, "ordinary({})", m),
            SingTypeLabel::Other {
                mu,
                tau,
                multiplicity,
                branches,
            } => write!(
                f,
                "other(mu={},tau={},mult={},branches={})",
                mu, tau, multiplicity, branches
            ),
        }
    }
}

/// Table lookup from invariants to a label. Branch counts refer to smooth
/// branches (arrangement components), where the identifications are exact.
pub fn classify_local(inv: &LocalInvariants) -> SingTypeLabel {
    let b = inv.branches;
    let qh = inv.quasi_homogeneous;
    if inv.mu == 1 {
        return SingTypeLabel::A(1);
    }
    if b == 2 && qh && inv.multiplicity == 2 {
        if inv.mu == 3 {
            return SingTypeLabel::A(3);
        }
        if inv.mu == 5 {
            return SingTypeLabel::A(5);
        }
    }
    if b == 3 && inv.mu == 4 && qh {
        return SingTypeLabel::D4;
    }
    if b == 4 && inv.mu == 9 && inv.tau == 9 {
        return SingTypeLabel::X9;
    }
    if b >= 5 && inv.multiplicity == b && inv.mu == (b - 1) * (b - 1) && qh {
        return SingTypeLabel::Ordinary(b);
    }
    SingTypeLabel::Other {
        mu: inv.mu,
        tau: inv.tau,
        multiplicity: inv.multiplicity,
        branches: b,
    }
}

/// Monomials (a, b) with a + b < n, ordered by total degree then descending
/// first exponent.
fn biv_monomials_below(n: usize) -> Vec<(u16, u16)> {
    let mut out = Vec::with_capacity(n * (n + 1) / 2);
    for d in 0..n {
        for a in (0..=d).rev() {
            out.push((a as u16, (d - a) as u16));
        }
    }
    out
}

/// dim K[x,y]/(<gens> + m^n): quotient of the degree-< n monomial space by
/// the truncations of all monomial multiples of the generators.
fn truncated_quotient_dim(field: &Field, gens: &[&BivariatePoly], n: usize) -> usize {
    let basis = biv_monomials_below(n);
    let index: HashMap<(u16, u16), usize> =
        basis.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let mut rows: Vec<Vec<FieldElement>> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let ord = g.min_degree().unwrap_or(0);
        if ord >= n {
            continue;
        }
        for &(ma, mb) in biv_monomials_below(n - ord).iter() {
            let mut row = vec![FieldElement::zero(field); basis.len()];
            let mut nonzero = false;
            for (&(a, b), c) in g.terms() {
                let key = (a + ma, b + mb);
                if (key.0 + key.1) as usize >= n {
                    continue;
                }
                row[index[&key]] = c.clone();
                nonzero = true;
            }
            if nonzero {
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return basis.len();
    }
    let m = Matrix::from_rows(field, rows);
    basis.len() - m.rank()
}

/// Stabilized dimension of K[x,y]/<gens> at the origin. The generators must
/// define a finite-codimension ideal; `cap` bounds the truncation order.
fn stabilized_dim(
    field: &Field,
    gens: &[&BivariatePoly],
    cap: usize,
) -> Result<usize, LocalError> {
    let mut prev: Option<usize> = None;
    let mut n = 2usize;
    while n <= cap {
        let d = truncated_quotient_dim(field, gens, n);
        if prev == Some(d) {
            return Ok(d);
        }
        prev = Some(d);
        n += 1;
    }
    Err(LocalError::NonIsolated)
}

fn check_singular_origin(g: &BivariatePoly) -> Result<(), LocalError> {
    if !g.constant_term().is_zero() {
        return Err(LocalError::NotSingularAtOrigin);
    }
    let gx = g.derivative(0);
    let gy = g.derivative(1);
    if !gx.constant_term().is_zero() || !gy.constant_term().is_zero() {
        return Err(LocalError::NotSingularAtOrigin);
    }
    Ok(())
}

/// Local Milnor number at the origin: dim K[x,y]/(g_x, g_y).
pub fn local_milnor(g: &BivariatePoly) -> Result<usize, LocalError> {
    check_singular_origin(g)?;
    let gx = g.derivative(0);
    let gy = g.derivative(1);
    let cap = 4 * g.total_degree() + 8;
    stabilized_dim(g.field(), &[&gx, &gy], cap)
}

/// Local Tjurina number at the origin: dim K[x,y]/(g, g_x, g_y).
pub fn local_tjurina(g: &BivariatePoly) -> Result<usize, LocalError> {
    check_singular_origin(g)?;
    let gx = g.derivative(0);
    let gy = g.derivative(1);
    let cap = 4 * g.total_degree() + 8;
    stabilized_dim(g.field(), &[g, &gx, &gy], cap)
}

/// Local intersection multiplicity of two curve germs at the origin:
/// dim K[x,y]/(g1, g2). Diverges (error) when the germs share a component.
pub fn intersection_multiplicity(
    g1: &BivariatePoly,
    g2: &BivariatePoly,
) -> Result<usize, LocalError> {
    if !g1.constant_term().is_zero() || !g2.constant_term().is_zero() {
        return Err(LocalError::NotSingularAtOrigin);
    }
    let cap = 4 * (g1.total_degree() + g2.total_degree()) + 8;
    stabilized_dim(g1.field(), &[g1, g2], cap)
}

/// Move a projective point to (0:0:1) and return the local chart equation.
pub fn local_equation_at(f: &HomogPoly, p: &[FieldElement; 3]) -> BivariatePoly {
    let field = f.field().clone();
    let i0 = (0..3)
        .find(|&i| !p[i].is_zero())
        .expect("projective point must be nonzero");
    // Third column is p; the other two are standard basis vectors that keep
    // the matrix invertible (determinant +/- p[i0]).
    let others: Vec<usize> = (0..3).filter(|&i| i != i0).collect();
    let z = || FieldElement::zero(&field);
    let mut entries = [
        [z(), z(), p[0].clone()],
        [z(), z(), p[1].clone()],
        [z(), z(), p[2].clone()],
    ];
    entries[others[0]][0] = FieldElement::one(&field);
    entries[others[1]][1] = FieldElement::one(&field);
    let m = Mat3::from_rows(entries);
    debug_assert!(!m.det().is_zero());
    f.substitute_linear(&m)
        .expect("point-moving substitution is invertible")
        .dehomogenize(Chart::Z)
}

/// Full local analysis of `f` at a singular point `p` on the curve.
/// `branches` is filled by arrangement callers; 0 when unknown.
pub fn local_invariants_at(
    f: &HomogPoly,
    p: &[FieldElement; 3],
    branches: usize,
) -> Result<LocalInvariants, LocalError> {
    let g = local_equation_at(f, p);
    if !g.constant_term().is_zero() {
        return Err(LocalError::PointNotOnCurve);
    }
    let multiplicity = match g.min_degree() {
        None => return Err(LocalError::PointNotOnCurve),
        Some(m) if m < 2 => return Err(LocalError::PointNotSingular),
        Some(m) => m,
    };
    let mu = local_milnor(&g)?;
    let tau = local_tjurina(&g)?;
    Ok(LocalInvariants {
        mu,
        tau,
        multiplicity,
        branches,
        quasi_homogeneous: mu == tau,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::NumberField;
    use crate::polyring::parse_poly;

    fn qq() -> Field {
        NumberField::rationals()
    }

    /// Build a local bivariate equation from a possibly inhomogeneous
    /// expression in x and y: each homogeneous chunk parses on its own and
    /// lands in the z = 1 chart.
    fn local(s: &str) -> BivariatePoly {
        let f = qq();
        let mut acc = BivariatePoly::zero(&f);
        let normalized = s.replace('-', "+-");
        for chunk in normalized.split('+') {
            let t = chunk.trim();
            if t.is_empty() {
                continue;
            }
            let neg = t.starts_with('-');
            let body = if neg { &t[1..] } else { t };
            let hp = parse_poly(body, &f).unwrap();
            let b = hp.dehomogenize(Chart::Z);
            let term = if neg {
                BivariatePoly::from_terms(&f, b.terms().map(|(k, c)| (*k, c.neg())))
            } else {
                b
            };
            acc = BivariatePoly::from_terms(
                &f,
                acc.terms()
                    .map(|(k, c)| (*k, c.clone()))
                    .chain(term.terms().map(|(k, c)| (*k, c.clone()))),
            );
        }
        acc
    }

    #[test]
    fn milnor_normal_forms() {
        assert_eq!(local_milnor(&local("x^2 + y^2")).unwrap(), 1);
        assert_eq!(local_milnor(&local("x^2 + y^4")).unwrap(), 3);
        assert_eq!(local_milnor(&local("x^4 + y^4")).unwrap(), 9);
        assert_eq!(local_milnor(&local("x^2 + y^3")).unwrap(), 2);
    }

    #[test]
    fn tjurina_equals_milnor_for_quasi_homogeneous() {
        for s in ["x^2 + y^2", "x^2 + y^4", "x^4 + y^4", "x^2 + y^3"] {
            let g = local(s);
            assert_eq!(local_milnor(&g).unwrap(), local_tjurina(&g).unwrap(), "{}", s);
        }
    }

    #[test]
    fn non_quasi_homogeneous_example() {
        // x^4 + y^5 + x^2 y^3: mu = 12, tau = 11.
        let g = local("x^4 + y^5 + x^2*y^3");
        assert_eq!(local_milnor(&g).unwrap(), 12);
        assert_eq!(local_tjurina(&g).unwrap(), 11);
    }

    #[test]
    fn smooth_origin_rejected() {
        assert_eq!(
            local_milnor(&local("x + y^2")).unwrap_err(),
            LocalError::NotSingularAtOrigin
        );
    }

    #[test]
    fn non_isolated_detected() {
        assert_eq!(local_milnor(&local("x^2")).unwrap_err(), LocalError::NonIsolated);
    }

    #[test]
    fn invariants_at_projective_point() {
        let f = qq();
        let xyz = parse_poly("x*y*z", &f).unwrap();
        let p = [
            FieldElement::zero(&f),
            FieldElement::zero(&f),
            FieldElement::one(&f),
        ];
        let inv = local_invariants_at(&xyz, &p, 2).unwrap();
        assert_eq!(
            inv,
            LocalInvariants {
                mu: 1,
                tau: 1,
                multiplicity: 2,
                branches: 2,
                quasi_homogeneous: true
            }
        );
        assert_eq!(classify_local(&inv), SingTypeLabel::A(1));

        let q = [
            FieldElement::one(&f),
            FieldElement::zero(&f),
            FieldElement::zero(&f),
        ];
        let inv2 = local_invariants_at(&xyz, &q, 2).unwrap();
        assert_eq!(inv2.mu, 1);

        let conic = parse_poly("x^2 + y^2 - 2*z^2", &f).unwrap();
        let on = [
            FieldElement::one(&f),
            FieldElement::one(&f),
            FieldElement::one(&f),
        ];
        assert_eq!(
            local_invariants_at(&conic, &on, 1).unwrap_err(),
            LocalError::PointNotSingular
        );
        let off = [
            FieldElement::one(&f),
            FieldElement::zero(&f),
            FieldElement::zero(&f),
        ];
        assert_eq!(
            local_invariants_at(&conic, &off, 1).unwrap_err(),
            LocalError::PointNotOnCurve
        );
    }

    #[test]
    fn intersection_multiplicities() {
        assert_eq!(intersection_multiplicity(&local("x"), &local("y")).unwrap(), 1);
        // y = 0 against y - x^2 = 0: contact order 2.
        assert_eq!(
            intersection_multiplicity(&local("y"), &local("y - x^2")).unwrap(),
            2
        );
    }

    #[test]
    fn label_table() {
        let mk = |mu, tau, multiplicity, branches| LocalInvariants {
            mu,
            tau,
            multiplicity,
            branches,
            quasi_homogeneous: mu == tau,
        };
        assert_eq!(classify_local(&mk(1, 1, 2, 2)), SingTypeLabel::A(1));
        assert_eq!(classify_local(&mk(3, 3, 2, 2)), SingTypeLabel::A(3));
        assert_eq!(classify_local(&mk(5, 5, 2, 2)), SingTypeLabel::A(5));
        assert_eq!(classify_local(&mk(4, 4, 3, 3)), SingTypeLabel::D4);
        assert_eq!(classify_local(&mk(9, 9, 4, 4)), SingTypeLabel::X9);
        assert_eq!(classify_local(&mk(16, 16, 5, 5)), SingTypeLabel::Ordinary(5));
        assert_eq!(
            classify_local(&mk(16, 15, 5, 5)),
            SingTypeLabel::Other {
                mu: 16,
                tau: 15,
                multiplicity: 5,
                branches: 5
            }
        );
        assert_eq!(
            classify_local(&mk(15, 15, 4, 3)),
            SingTypeLabel::Other {
                mu: 15,
                tau: 15,
                multiplicity: 4,
                branches: 3
            }
        );
    }

    #[test]
    fn mu_of_ordinary_m_fold_normal_forms() {
        // Products of pairwise independent linear forms: mu = (m-1)^2.
        let forms = ["x*y", "x*y*(x+y)", "x*y*(x+y)*(x-y)", "x*y*(x+y)*(x-y)*(x+2*y)"];
        for (i, s) in forms.iter().enumerate() {
            let m = i + 2;
            // Homogeneous in x and y, so the trivariate parser applies.
            let g = parse_poly(s, &qq()).unwrap().dehomogenize(Chart::Z);
            assert_eq!(local_milnor(&g).unwrap(), (m - 1) * (m - 1), "m = {}", m);
        }
    }
}
