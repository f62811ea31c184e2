//! Sparse trivariate homogeneous polynomials over a number field, graded
//! pieces, derivatives, linear substitutions, dehomogenization and the text
//! parser. Monomials are ordered lexicographically with x > y > z.

mod parse;

pub use parse::{parse_poly, parse_rational_univariate, parse_scalar};

use crate::numfield::{same_field, Field, FieldElement, Rational};
use crate::unipoly::UniPoly;
use num_bigint::BigInt;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomials have different degrees ({0} vs {1})")]
    DegreeMismatch(usize, usize),
    #[error("polynomials belong to different number fields")]
    MixedFields,
    #[error("substitution matrix is singular")]
    SingularMatrix,
    #[error("polynomial is not homogeneous (degrees {0:?})")]
    NotHomogeneous(Vec<usize>),
    #[error("unknown symbol `{0}` at position {1}")]
    UnknownSymbol(String, usize),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
}

/// A monomial x^a y^b z^c. Orders ascending in (a, b, c); reverse iteration
/// yields the conventional x > y > z lexicographic display order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub exps: [u16; 3],
}

impl Monomial {
    pub fn new(a: u16, b: u16, c: u16) -> Self {
        Monomial { exps: [a, b, c] }
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps[0] + other.exps[0],
            self.exps[1] + other.exps[1],
            self.exps[2] + other.exps[2],
        )
    }
}

/// All monomials of total degree `r` in lexicographic x > y > z order
/// (x^r first, z^r last). Length is C(r+2, 2).
pub fn graded_monomials(r: usize) -> Vec<Monomial> {
    let mut out = Vec::with_capacity((r + 1) * (r + 2) / 2);
    for a in (0..=r).rev() {
        for b in (0..=r - a).rev() {
            out.push(Monomial::new(a as u16, b as u16, (r - a - b) as u16));
        }
    }
    out
}

/// Index of a degree-`r` monomial within [`graded_monomials`]`(r)`.
pub fn monomial_index(r: usize, m: &Monomial) -> usize {
    let a = m.exps[0] as usize;
    let b = m.exps[1] as usize;
    debug_assert_eq!(m.degree(), r);
    (r - a) * (r - a + 1) / 2 + (r - a - b)
}

/// dim S_r = C(r+2, 2), with negative degrees giving 0.
pub fn dim_graded(r: isize) -> usize {
    if r < 0 {
        0
    } else {
        ((r + 1) * (r + 2) / 2) as usize
    }
}

/// Sparse homogeneous polynomial. The zero polynomial keeps its degree tag.
#[derive(Clone, PartialEq)]
pub struct HomogPoly {
    field: Field,
    degree: usize,
    terms: BTreeMap<Monomial, FieldElement>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chart {
    X,
    Y,
    Z,
}

impl HomogPoly {
    pub fn zero(field: &Field, degree: usize) -> Self {
        HomogPoly {
            field: field.clone(),
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(
        field: &Field,
        degree: usize,
        terms: impl IntoIterator<Item = (Monomial, FieldElement)>,
    ) -> Self {
        let mut map = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.degree(), degree, "term degree mismatch");
            assert!(same_field(c.field(), field));
            if c.is_zero() {
                continue;
            }
            match map.entry(m) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let s = e.get().checked_add(&c).unwrap();
                    if s.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = s;
                    }
                }
            }
        }
        HomogPoly {
            field: field.clone(),
            degree,
            terms: map,
        }
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_int_terms(field: &Field, degree: usize, terms: &[(i64, [u16; 3])]) -> Self {
        Self::from_terms(
            field,
            degree,
            terms.iter().map(|&(c, e)| {
                (
                    Monomial { exps: e },
                    FieldElement::from_int(field, c),
                )
            }),
        )
    }

    pub fn variable(field: &Field, var: usize) -> Self {
        let mut exps = [0u16; 3];
        exps[var] = 1;
        Self::from_terms(
            field,
            1,
            [(Monomial { exps }, FieldElement::one(field))],
        )
    }

    pub fn constant(field: &Field, c: FieldElement) -> Self {
        Self::from_terms(field, 0, [(Monomial::new(0, 0, 0), c)])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &FieldElement)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> FieldElement {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| FieldElement::zero(&self.field))
    }

    fn check_field(&self, other: &HomogPoly) -> Result<(), PolyError> {
        if same_field(&self.field, &other.field) {
            Ok(())
        } else {
            Err(PolyError::MixedFields)
        }
    }

    pub fn add(&self, other: &HomogPoly) -> Result<HomogPoly, PolyError> {
        self.check_field(other)?;
        // The zero polynomial belongs to every graded piece.
        if self.is_zero() && self.degree != other.degree {
            return Ok(other.clone());
        }
        if other.is_zero() && self.degree != other.degree {
            return Ok(self.clone());
        }
        if self.degree != other.degree {
            return Err(PolyError::DegreeMismatch(self.degree, other.degree));
        }
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            match terms.entry(*m) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c.clone());
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let s = e.get().checked_add(c).unwrap();
                    if s.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = s;
                    }
                }
            }
        }
        Ok(HomogPoly {
            field: self.field.clone(),
            degree: self.degree,
            terms,
        })
    }

    pub fn sub(&self, other: &HomogPoly) -> Result<HomogPoly, PolyError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> HomogPoly {
        HomogPoly {
            field: self.field.clone(),
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, c.neg()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &HomogPoly) -> Result<HomogPoly, PolyError> {
        self.check_field(other)?;
        let degree = self.degree + other.degree;
        let mut terms: BTreeMap<Monomial, FieldElement> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                let prod = c1.checked_mul(c2).unwrap();
                match terms.entry(m) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(prod);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let s = e.get().checked_add(&prod).unwrap();
                        if s.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = s;
                        }
                    }
                }
            }
        }
        Ok(HomogPoly {
            field: self.field.clone(),
            degree,
            terms,
        })
    }

    pub fn scale(&self, c: &FieldElement) -> HomogPoly {
        if c.is_zero() {
            return HomogPoly::zero(&self.field, self.degree);
        }
        HomogPoly {
            field: self.field.clone(),
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (*m, v.checked_mul(c).unwrap()))
                .collect(),
        }
    }

    pub fn scale_rational(&self, q: &Rational) -> HomogPoly {
        self.scale(&FieldElement::from_rational(&self.field, q.clone()))
    }

    pub fn pow(&self, e: usize) -> HomogPoly {
        let mut acc = HomogPoly::constant(&self.field, FieldElement::one(&self.field));
        for _ in 0..e {
            acc = acc.mul(self).unwrap();
        }
        acc
    }

    /// Partial derivative; degree drops by exactly one (a degree-0 input is
    /// rejected by the caller contract deg >= 1).
    pub fn partial_derivative(&self, var: usize) -> HomogPoly {
        assert!(self.degree >= 1, "derivative requires degree >= 1");
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exps[var];
            if e == 0 {
                continue;
            }
            let mut exps = m.exps;
            exps[var] = e - 1;
            let coeff = c.scale(&Rational::from_integer(BigInt::from(e as i64)));
            terms.insert(Monomial { exps }, coeff);
        }
        HomogPoly {
            field: self.field.clone(),
            degree: self.degree - 1,
            terms,
        }
    }

    /// Substitute x_i -> sum_j M[i][j] * x_j; requires M invertible.
    pub fn substitute_linear(&self, m: &Mat3) -> Result<HomogPoly, PolyError> {
        if m.det().is_zero() {
            return Err(PolyError::SingularMatrix);
        }
        let forms: Vec<HomogPoly> = (0..3)
            .map(|i| {
                let mut p = HomogPoly::zero(&self.field, 1);
                for j in 0..3 {
                    let v = HomogPoly::variable(&self.field, j).scale(&m.entries[i][j]);
                    p = p.add(&v).unwrap();
                }
                p
            })
            .collect();
        // Cache powers of each substituted variable.
        let mut max_exp = [0usize; 3];
        for (mon, _) in &self.terms {
            for v in 0..3 {
                max_exp[v] = max_exp[v].max(mon.exps[v] as usize);
            }
        }
        let powers: Vec<Vec<HomogPoly>> = (0..3)
            .map(|v| {
                let mut pows =
                    vec![HomogPoly::constant(&self.field, FieldElement::one(&self.field))];
                for e in 1..=max_exp[v] {
                    pows.push(pows[e - 1].mul(&forms[v]).unwrap());
                }
                pows
            })
            .collect();
        let mut acc = HomogPoly::zero(&self.field, self.degree);
        for (mon, c) in &self.terms {
            let mut t = powers[0][mon.exps[0] as usize].clone();
            t = t.mul(&powers[1][mon.exps[1] as usize]).unwrap();
            t = t.mul(&powers[2][mon.exps[2] as usize]).unwrap();
            acc = acc.add(&t.scale(c)).unwrap();
        }
        Ok(acc)
    }

    /// Set the chart variable to 1.
    pub fn dehomogenize(&self, chart: Chart) -> BivariatePoly {
        let (i, j) = match chart {
            Chart::X => (1, 2),
            Chart::Y => (0, 2),
            Chart::Z => (0, 1),
        };
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            terms.insert((m.exps[i], m.exps[j]), c.clone());
        }
        BivariatePoly {
            field: self.field.clone(),
            terms,
        }
    }

    pub fn evaluate(&self, point: &[FieldElement; 3]) -> FieldElement {
        let mut acc = FieldElement::zero(&self.field);
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for v in 0..3 {
                if m.exps[v] > 0 {
                    t = t
                        .checked_mul(&point[v].pow(m.exps[v] as u32))
                        .unwrap();
                }
            }
            acc = acc.checked_add(&t).unwrap();
        }
        acc
    }

    /// Re-coefficient into `target`; only Q -> Q(a) and identity embeddings
    /// are available.
    pub fn embed_into(&self, target: &Field) -> Result<HomogPoly, crate::numfield::FieldError> {
        if same_field(&self.field, target) {
            return Ok(self.clone());
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            terms.insert(*m, c.embed_into(target)?);
        }
        Ok(HomogPoly {
            field: target.clone(),
            degree: self.degree,
            terms,
        })
    }

    /// Coefficient vector with respect to [`graded_monomials`]`(degree)`.
    pub fn coeff_vector(&self) -> Vec<FieldElement> {
        let mut out = vec![FieldElement::zero(&self.field); dim_graded(self.degree as isize)];
        for (m, c) in &self.terms {
            out[monomial_index(self.degree, m)] = c.clone();
        }
        out
    }

    /// True when the two polynomials cut out the same curve, i.e. differ by a
    /// nonzero scalar.
    pub fn proportional_to(&self, other: &HomogPoly) -> bool {
        if !same_field(&self.field, &other.field) || self.degree != other.degree {
            return false;
        }
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        let (m, c) = self.terms.iter().next().unwrap();
        let other_c = other.terms.get(m);
        let Some(oc) = other_c else { return false };
        let ratio = oc.checked_div(c).unwrap();
        other == &self.scale(&ratio)
    }

    /// Euler field check helper: x*p_x + y*p_y + z*p_z.
    pub fn euler_combination(&self) -> HomogPoly {
        let mut acc = HomogPoly::zero(&self.field, self.degree);
        for v in 0..3 {
            let t = HomogPoly::variable(&self.field, v)
                .mul(&self.partial_derivative(v))
                .unwrap();
            acc = acc.add(&t).unwrap();
        }
        acc
    }

    /// Squarefreeness over the (perfect, characteristic-zero) base field.
    ///
    /// Strips the common monomial factor, dehomogenizes in the z = 1 chart and
    /// runs an exact bivariate squarefreeness test (univariate content plus a
    /// resultant-vanishing test by specialization).
    pub fn is_reduced(&self) -> bool {
        assert!(!self.is_zero(), "is_reduced requires a nonzero polynomial");
        let mut min_exp = [u16::MAX; 3];
        for (m, _) in &self.terms {
            for v in 0..3 {
                min_exp[v] = min_exp[v].min(m.exps[v]);
            }
        }
        if min_exp.iter().any(|&e| e > 1) {
            return false;
        }
        let stripped = HomogPoly {
            field: self.field.clone(),
            degree: self.degree - min_exp.iter().map(|&e| e as usize).sum::<usize>(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    (
                        Monomial::new(
                            m.exps[0] - min_exp[0],
                            m.exps[1] - min_exp[1],
                            m.exps[2] - min_exp[2],
                        ),
                        c.clone(),
                    )
                })
                .collect(),
        };
        if stripped.degree == 0 {
            return true;
        }
        bivariate_squarefree(&stripped.dehomogenize(Chart::Z))
    }
}

impl fmt::Debug for HomogPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

fn format_monomial(m: &Monomial) -> String {
    let names = ["x", "y", "z"];
    let mut parts = Vec::new();
    for v in 0..3 {
        match m.exps[v] {
            0 => {}
            1 => parts.push(names[v].to_string()),
            e => parts.push(format!("{}^{}", names[v], e)),
        }
    }
    parts.join("*")
}

impl fmt::Display for HomogPoly {
    /// Canonical form: terms in x > y > z lexicographic order, explicit `*`
    /// and `^`, parenthesized multi-term coefficients. Parsing this output
    /// reproduces the polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let mono = format_monomial(m);
            // Decide a printable (sign, magnitude) split for the coefficient.
            let (neg, body) = coefficient_display(c, &mono);
            if first {
                if neg {
                    write!(f, "-{}", body)?;
                } else {
                    write!(f, "{}", body)?;
                }
                first = false;
            } else if neg {
                write!(f, " - {}", body)?;
            } else {
                write!(f, " + {}", body)?;
            }
        }
        Ok(())
    }
}

/// Render one term. Rational coefficients pull their sign out; proper field
/// elements print parenthesized and never carry an outer sign.
fn coefficient_display(c: &FieldElement, mono: &str) -> (bool, String) {
    use num_traits::{One, Signed};
    if let Some(q) = c.as_rational() {
        let neg = q.is_negative();
        let mag = q.abs();
        let body = if mono.is_empty() {
            format!("{}", mag)
        } else if mag.is_one() {
            mono.to_string()
        } else {
            format!("{}*{}", mag, mono)
        };
        (neg, body)
    } else {
        let body = if mono.is_empty() {
            format!("({})", c)
        } else {
            format!("({})*{}", c, mono)
        };
        (false, body)
    }
}

/// Dense-enough bivariate polynomial for local charts; keys are (exponent of
/// first, exponent of second) chart variable.
#[derive(Clone, PartialEq)]
pub struct BivariatePoly {
    pub(crate) field: Field,
    pub(crate) terms: BTreeMap<(u16, u16), FieldElement>,
}

impl BivariatePoly {
    pub fn zero(field: &Field) -> Self {
        BivariatePoly {
            field: field.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(
        field: &Field,
        terms: impl IntoIterator<Item = ((u16, u16), FieldElement)>,
    ) -> Self {
        let mut map: BTreeMap<(u16, u16), FieldElement> = BTreeMap::new();
        for (k, c) in terms {
            if c.is_zero() {
                continue;
            }
            match map.entry(k) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let s = e.get().checked_add(&c).unwrap();
                    if s.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = s;
                    }
                }
            }
        }
        BivariatePoly { field: field.clone(), terms: map }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u16, u16), &FieldElement)> {
        self.terms.iter()
    }

    pub fn constant_term(&self) -> FieldElement {
        self.terms
            .get(&(0, 0))
            .cloned()
            .unwrap_or_else(|| FieldElement::zero(&self.field))
    }

    /// Total degree; 0 for the zero polynomial.
    pub fn total_degree(&self) -> usize {
        self.terms
            .keys()
            .map(|&(a, b)| (a + b) as usize)
            .max()
            .unwrap_or(0)
    }

    /// Minimal total degree of a nonzero term (the local multiplicity at the
    /// origin). None when zero.
    pub fn min_degree(&self) -> Option<usize> {
        self.terms
            .keys()
            .map(|&(a, b)| (a + b) as usize)
            .min()
    }

    pub fn mul(&self, other: &BivariatePoly) -> BivariatePoly {
        let mut out: BTreeMap<(u16, u16), FieldElement> = BTreeMap::new();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &other.terms {
                let k = (a1 + a2, b1 + b2);
                let prod = c1.checked_mul(c2).unwrap();
                match out.entry(k) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(prod);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let s = e.get().checked_add(&prod).unwrap();
                        if s.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = s;
                        }
                    }
                }
            }
        }
        BivariatePoly {
            field: self.field.clone(),
            terms: out,
        }
    }

    pub fn derivative(&self, var: usize) -> BivariatePoly {
        let mut out = BTreeMap::new();
        for (&(a, b), c) in &self.terms {
            let e = if var == 0 { a } else { b };
            if e == 0 {
                continue;
            }
            let k = if var == 0 { (a - 1, b) } else { (a, b - 1) };
            out.insert(k, c.scale(&Rational::from_integer(BigInt::from(e as i64))));
        }
        BivariatePoly {
            field: self.field.clone(),
            terms: out,
        }
    }

    /// Drop all terms of total degree >= n.
    pub fn truncate(&self, n: usize) -> BivariatePoly {
        BivariatePoly {
            field: self.field.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(&(a, b), _)| ((a + b) as usize) < n)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    pub fn eval(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        let mut acc = FieldElement::zero(&self.field);
        for (&(a, b), c) in &self.terms {
            let t = c
                .checked_mul(&x.pow(a as u32))
                .unwrap()
                .checked_mul(&y.pow(b as u32))
                .unwrap();
            acc = acc.checked_add(&t).unwrap();
        }
        acc
    }

    /// View as a polynomial in the first variable with univariate-in-second
    /// coefficients; index i holds the coefficient of x^i.
    pub fn coeffs_in_x(&self) -> Vec<UniPoly> {
        let dx = self.terms.keys().map(|&(a, _)| a).max().unwrap_or(0) as usize;
        let dy = self.terms.keys().map(|&(_, b)| b).max().unwrap_or(0) as usize;
        let mut cols = vec![vec![FieldElement::zero(&self.field); dy + 1]; dx + 1];
        for (&(a, b), c) in &self.terms {
            cols[a as usize][b as usize] = c.clone();
        }
        cols.into_iter()
            .map(|v| UniPoly::new(&self.field, v))
            .collect()
    }

    /// Specialize the second variable, producing a univariate polynomial in
    /// the first.
    pub fn specialize_second(&self, y0: &FieldElement) -> UniPoly {
        let dx = self.terms.keys().map(|&(a, _)| a).max().unwrap_or(0) as usize;
        let mut out = vec![FieldElement::zero(&self.field); dx + 1];
        for (&(a, b), c) in &self.terms {
            let t = c.checked_mul(&y0.pow(b as u32)).unwrap();
            out[a as usize] = &out[a as usize] + &t;
        }
        UniPoly::new(&self.field, out)
    }
}

impl fmt::Debug for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(&(a, b), c)| format!("({})*u^{}*v^{}", c, a, b))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// 3x3 matrix of field elements for linear substitutions.
#[derive(Clone, Debug)]
pub struct Mat3 {
    pub entries: [[FieldElement; 3]; 3],
}

impl Mat3 {
    pub fn identity(field: &Field) -> Self {
        let z = || FieldElement::zero(field);
        let o = || FieldElement::one(field);
        Mat3 {
            entries: [
                [o(), z(), z()],
                [z(), o(), z()],
                [z(), z(), o()],
            ],
        }
    }

    pub fn from_rows(rows: [[FieldElement; 3]; 3]) -> Self {
        Mat3 { entries: rows }
    }

    pub fn det(&self) -> FieldElement {
        let e = &self.entries;
        let m = |i: usize, j: usize| &e[i][j];
        let t1 = &(m(0, 0) * &(&(m(1, 1) * m(2, 2)) - &(m(1, 2) * m(2, 1))));
        let t2 = &(m(0, 1) * &(&(m(1, 0) * m(2, 2)) - &(m(1, 2) * m(2, 0))));
        let t3 = &(m(0, 2) * &(&(m(1, 0) * m(2, 1)) - &(m(1, 1) * m(2, 0))));
        &(t1 - t2) + t3
    }

    pub fn mul(&self, other: &Mat3) -> Mat3 {
        let field = self.entries[0][0].field().clone();
        let mut out = Mat3::identity(&field);
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = FieldElement::zero(&field);
                for k in 0..3 {
                    acc = &acc + &(&self.entries[i][k] * &other.entries[k][j]);
                }
                out.entries[i][j] = acc;
            }
        }
        out
    }

    pub fn inverse(&self) -> Option<Mat3> {
        let det = self.det();
        if det.is_zero() {
            return None;
        }
        let inv_det = det.inverse().unwrap();
        let e = &self.entries;
        let cof = |i: usize, j: usize| {
            let (r1, r2) = match i {
                0 => (1, 2),
                1 => (0, 2),
                _ => (0, 1),
            };
            let (c1, c2) = match j {
                0 => (1, 2),
                1 => (0, 2),
                _ => (0, 1),
            };
            let minor = &(&e[r1][c1] * &e[r2][c2]) - &(&e[r1][c2] * &e[r2][c1]);
            if (i + j) % 2 == 0 {
                minor
            } else {
                minor.neg()
            }
        };
        let mut out = self.clone();
        for i in 0..3 {
            for j in 0..3 {
                // Adjugate is the transpose of cofactors.
                out.entries[i][j] = cof(j, i).checked_mul(&inv_det).unwrap();
            }
        }
        Some(out)
    }
}

/// Exact bivariate squarefreeness over a characteristic-zero field.
fn bivariate_squarefree(h: &BivariatePoly) -> bool {
    if h.is_zero() {
        return false;
    }
    let cols = h.coeffs_in_x();
    if cols.len() == 1 {
        // Univariate in the second variable.
        let p = &cols[0];
        return p.gcd(&p.derivative()).deg() <= 0;
    }
    // Content in the second variable.
    let mut content = UniPoly::zero(h.field());
    for c in &cols {
        if c.is_zero() {
            continue;
        }
        content = if content.is_zero() {
            c.monic()
        } else {
            content.gcd(c)
        };
    }
    if content.gcd(&content.derivative()).deg() > 0 {
        return false;
    }
    let prim: Vec<UniPoly> = cols.iter().map(|c| c.div_exact(&content)).collect();
    // Repeated factors involving x are detected by Res_x(prim, d prim/dx)
    // being identically zero; test by specialization of the second variable.
    let m = prim.len() - 1; // deg_x
    if m == 0 {
        return true;
    }
    let lead = &prim[m];
    let e = prim.iter().map(|c| c.deg().max(0) as usize).max().unwrap_or(0);
    let bound = e * (2 * m - 1) + 1;
    let mut zeros = 0usize;
    let mut y0 = 0i64;
    loop {
        let v = FieldElement::from_int(h.field(), y0);
        y0 += 1;
        if lead.eval(&v).is_zero() {
            continue;
        }
        let a = specialize_cols(&prim, &v, h.field());
        let b = a.derivative();
        if a.gcd(&b).deg() <= 0 {
            return true;
        }
        zeros += 1;
        if zeros >= bound {
            return false;
        }
    }
}

fn specialize_cols(cols: &[UniPoly], y0: &FieldElement, field: &Field) -> UniPoly {
    UniPoly::new(field, cols.iter().map(|c| c.eval(y0)).collect())
}

#[cfg(test)]
mod tests;
