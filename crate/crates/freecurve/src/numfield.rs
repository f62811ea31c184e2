//! Exact arithmetic over the rationals and simple extensions Q(a) = Q[t]/(m(t))
//! of degree at most 4.
//!
//! A [`NumberField`] is described by a generator name and a monic minimal
//! polynomial. Degree 1 encodes plain Q. For degree 2 irreducibility is
//! verified exactly (discriminant square test); for degrees 3 and 4 it is
//! caller-asserted — a bad assertion surfaces as [`FieldError::ReducibleMinpoly`]
//! the first time an inversion meets a zero divisor.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

/// Exact rational scalar. Always reduced, denominator positive.
pub type Rational = BigRational;

/// Shared handle to a number field. Fields are immutable after construction.
pub type Field = Arc<NumberField>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("elements belong to different number fields")]
    MixedFields,
    #[error("division by zero")]
    DivisionByZero,
    #[error("minimal polynomial is reducible: nontrivial factor {0}")]
    ReducibleMinpoly(String),
    #[error("extension degree {0} not supported (degree must be 1..=4)")]
    DegreeUnsupported(usize),
    #[error("minimal polynomial has rational root {0}")]
    ProvablyReducible(Rational),
    #[error("minimal polynomial must be monic")]
    NotMonic,
    #[error("square-root decision is not implemented for degree {0} extensions")]
    SqrtUnsupported(usize),
}

/// A number field Q(a) described by the monic minimal polynomial of `a`.
pub struct NumberField {
    name: String,
    /// Ascending coefficients, length `degree + 1`, last entry 1.
    minpoly: Vec<Rational>,
    /// Power-basis expansions of a^degree .. a^(2*degree-2), used to reduce
    /// products back into the power basis.
    reductions: Vec<Vec<Rational>>,
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.minpoly == other.minpoly
    }
}
impl Eq for NumberField {}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 1 {
            write!(f, "Q")
        } else {
            write!(f, "Q({}: {})", self.name, self.minpoly_string())
        }
    }
}

fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

impl NumberField {
    /// The rationals, encoded as the degree-1 field with minimal polynomial `t`.
    pub fn rationals() -> Field {
        Arc::new(NumberField {
            name: String::new(),
            minpoly: vec![rat(0), rat(1)],
            reductions: vec![],
        })
    }

    /// Adjoin a root of a monic polynomial of degree 1..=4.
    ///
    /// Degree 2 is rejected exactly when reducible. Degrees 3 and 4 get a
    /// best-effort rational-root scan; splittings without a rational root are
    /// the caller's responsibility and are caught at inversion time.
    pub fn adjoin_root(name: &str, minpoly: &[Rational]) -> Result<Field, FieldError> {
        let mut mp: Vec<Rational> = minpoly.to_vec();
        while mp.len() > 1 && mp.last().map(|c| c.is_zero()) == Some(true) {
            mp.pop();
        }
        if mp.is_empty() || mp.len() == 1 {
            return Err(FieldError::DegreeUnsupported(0));
        }
        let degree = mp.len() - 1;
        if degree > 4 {
            return Err(FieldError::DegreeUnsupported(degree));
        }
        if !mp.last().unwrap().is_one() {
            return Err(FieldError::NotMonic);
        }
        if degree >= 2 {
            if let Some(root) = rational_root(&mp) {
                return Err(FieldError::ProvablyReducible(root));
            }
        }
        // a^degree = -(c_0 + c_1 a + ... + c_{degree-1} a^{degree-1});
        // higher powers follow by multiplying through by a.
        let mut reductions: Vec<Vec<Rational>> = Vec::new();
        let mut cur: Vec<Rational> = mp[..degree].iter().map(|c| -c).collect();
        reductions.push(cur.clone());
        for _ in 1..degree.saturating_sub(1) {
            let mut next = vec![Rational::zero(); degree];
            let shift_out = cur[degree - 1].clone();
            for i in (1..degree).rev() {
                next[i] = cur[i - 1].clone();
            }
            for (i, r) in reductions[0].iter().enumerate() {
                next[i] += &shift_out * r;
            }
            reductions.push(next.clone());
            cur = next;
        }
        Ok(Arc::new(NumberField {
            name: name.to_string(),
            minpoly: mp,
            reductions,
        }))
    }

    pub fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }

    pub fn generator_name(&self) -> &str {
        &self.name
    }

    pub fn minpoly(&self) -> &[Rational] {
        &self.minpoly
    }

    pub fn is_rationals(&self) -> bool {
        self.degree() == 1
    }

    pub fn minpoly_string(&self) -> String {
        let n = if self.name.is_empty() { "t" } else { &self.name };
        let mut parts: Vec<String> = Vec::new();
        for (i, c) in self.minpoly.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let var = match i {
                0 => String::new(),
                1 => n.to_string(),
                _ => format!("{}^{}", n, i),
            };
            let lead = if c.is_one() && i > 0 {
                var.clone()
            } else if (-c).is_one() && i > 0 {
                format!("-{}", var)
            } else if i == 0 {
                format!("{}", c)
            } else {
                format!("{}*{}", c, var)
            };
            if parts.is_empty() {
                parts.push(lead);
            } else if lead.starts_with('-') {
                parts.push(format!("- {}", &lead[1..]));
            } else {
                parts.push(format!("+ {}", lead));
            }
        }
        parts.join(" ")
    }

    /// Human-readable description, e.g. `Q` or `Q(e), e^2 - e + 1 = 0`.
    pub fn describe(&self) -> String {
        if self.is_rationals() {
            "Q".to_string()
        } else {
            format!("Q({}), {} = 0", self.name, self.minpoly_string())
        }
    }
}

pub fn same_field(a: &Field, b: &Field) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Element of a number field in the power basis 1, a, ..., a^(k-1).
#[derive(Clone)]
pub struct FieldElement {
    field: Field,
    coeffs: Vec<Rational>,
}

impl FieldElement {
    pub fn zero(field: &Field) -> Self {
        FieldElement {
            field: field.clone(),
            coeffs: vec![Rational::zero(); field.degree()],
        }
    }

    pub fn one(field: &Field) -> Self {
        Self::from_rational(field, Rational::one())
    }

    pub fn from_rational(field: &Field, q: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); field.degree()];
        coeffs[0] = q;
        FieldElement {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn from_int(field: &Field, n: i64) -> Self {
        Self::from_rational(field, rat(n))
    }

    /// The generator a itself (the rational root for degree-1 fields).
    pub fn generator(field: &Field) -> Self {
        if field.degree() == 1 {
            // minpoly is t - c; the generator equals c.
            return Self::from_rational(field, -field.minpoly[0].clone());
        }
        let mut coeffs = vec![Rational::zero(); field.degree()];
        coeffs[1] = Rational::one();
        FieldElement {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn from_coeffs(field: &Field, coeffs: Vec<Rational>) -> Self {
        assert_eq!(coeffs.len(), field.degree(), "coefficient vector length");
        FieldElement {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        if self.is_rational() {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn check_same(&self, other: &FieldElement) -> Result<(), FieldError> {
        if same_field(&self.field, &other.field) {
            Ok(())
        } else {
            Err(FieldError::MixedFields)
        }
    }

    pub fn checked_add(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check_same(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(FieldElement {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn checked_sub(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check_same(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(FieldElement {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn neg(&self) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn checked_mul(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check_same(other)?;
        let k = self.field.degree();
        if k == 1 {
            return Ok(FieldElement {
                field: self.field.clone(),
                coeffs: vec![&self.coeffs[0] * &other.coeffs[0]],
            });
        }
        let mut conv = vec![Rational::zero(); 2 * k - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                conv[i + j] += a * b;
            }
        }
        let mut coeffs: Vec<Rational> = conv[..k].to_vec();
        for (i, red) in self.field.reductions.iter().enumerate() {
            let hi = &conv[k + i];
            if hi.is_zero() {
                continue;
            }
            for (j, r) in red.iter().enumerate() {
                if !r.is_zero() {
                    coeffs[j] += hi * r;
                }
            }
        }
        Ok(FieldElement {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn scale(&self, q: &Rational) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Multiplicative inverse via extended Euclid against the minimal
    /// polynomial. A nontrivial gcd exposes a reducible minimal polynomial.
    pub fn inverse(&self) -> Result<FieldElement, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let k = self.field.degree();
        if k == 1 {
            return Ok(FieldElement {
                field: self.field.clone(),
                coeffs: vec![self.coeffs[0].recip()],
            });
        }
        // Extended Euclid in Q[t] for gcd(a, m) = u*a + v*m.
        let mut r0: Vec<Rational> = self.field.minpoly.clone();
        let mut r1: Vec<Rational> = trim(self.coeffs.clone());
        let mut u0: Vec<Rational> = vec![];
        let mut u1: Vec<Rational> = vec![Rational::one()];
        while poly_deg(&r1) > 0 {
            let (q, rem) = poly_divrem(&r0, &r1);
            let u2 = poly_sub(&u0, &poly_mul(&q, &u1));
            r0 = r1;
            r1 = rem;
            u0 = u1;
            u1 = u2;
        }
        if r1.is_empty() {
            // gcd = r0, a proper divisor of the minimal polynomial.
            return Err(FieldError::ReducibleMinpoly(poly_string(&r0)));
        }
        let c = r1[0].recip();
        let mut coeffs = vec![Rational::zero(); k];
        for (i, v) in u1.iter().enumerate() {
            coeffs[i] = v * &c;
        }
        Ok(FieldElement {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn checked_div(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check_same(other)?;
        let inv = other.inverse()?;
        self.checked_mul(&inv)
    }

    pub fn pow(&self, mut e: u32) -> FieldElement {
        let mut base = self.clone();
        let mut acc = FieldElement::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base).expect("same field");
            }
            base = base.checked_mul(&base).expect("same field");
            e >>= 1;
        }
        acc
    }

    /// Embed into `target`: identity on the same field, constants from Q into
    /// any field. Anything else is a mixed-field error.
    pub fn embed_into(&self, target: &Field) -> Result<FieldElement, FieldError> {
        if same_field(&self.field, target) {
            return Ok(self.clone());
        }
        if self.field.is_rationals() {
            // Degree-1 generators are rationals; resolve the value first.
            return Ok(FieldElement::from_rational(target, self.coeffs[0].clone()));
        }
        Err(FieldError::MixedFields)
    }

    /// Decide squareness and produce a square root when one exists in the
    /// field. Complete for degree 1 and 2; unsupported beyond.
    pub fn sqrt_in_field(&self) -> Result<Option<FieldElement>, FieldError> {
        let k = self.field.degree();
        if self.is_zero() {
            return Ok(Some(self.clone()));
        }
        match k {
            1 => Ok(rational_sqrt(&self.coeffs[0])
                .map(|r| FieldElement::from_rational(&self.field, r))),
            2 => {
                // minpoly t^2 + p t + q; want (u + v a)^2 = c0 + c1 a.
                let p = self.field.minpoly[1].clone();
                let q = self.field.minpoly[0].clone();
                let c0 = &self.coeffs[0];
                let c1 = &self.coeffs[1];
                if c1.is_zero() {
                    if let Some(u) = rational_sqrt(c0) {
                        return Ok(Some(FieldElement::from_rational(&self.field, u)));
                    }
                }
                // v != 0: 2uv - p v^2 = c1 and u^2 - q v^2 = c0 give, with
                // V = v^2: (p^2 - 4q) V^2 + (2 p c1 - 4 c0)... derived below.
                // From u = (c1 + p v^2) / (2 v):
                //   (c1 + p V)^2 - 4 q V^2 = 4 c0 V
                let a2 = &p * &p - rat(4) * &q;
                let a1 = rat(2) * &p * c1 - rat(4) * c0;
                let a0 = c1 * c1;
                for v2 in rational_quadratic_roots(&a2, &a1, &a0) {
                    if v2.is_zero() {
                        continue;
                    }
                    if let Some(v) = rational_sqrt(&v2) {
                        for vv in [v.clone(), -v] {
                            if vv.is_zero() {
                                continue;
                            }
                            let u = (c1 + &p * &v2) / (rat(2) * &vv);
                            let cand = FieldElement::from_coeffs(
                                &self.field,
                                vec![u, vv],
                            );
                            if cand.checked_mul(&cand).unwrap().eq_elem(self) {
                                return Ok(Some(cand));
                            }
                        }
                    }
                }
                Ok(None)
            }
            _ => Err(FieldError::SqrtUnsupported(k)),
        }
    }

    pub fn eq_elem(&self, other: &FieldElement) -> bool {
        same_field(&self.field, &other.field) && self.coeffs == other.coeffs
    }

    /// Deterministic (coefficient-wise) sort key; not a numeric order.
    pub fn sort_key(&self) -> Vec<Rational> {
        self.coeffs.clone()
    }

    /// Total bit length of the coefficient representation, used for pivot
    /// selection in elimination.
    pub fn bit_size(&self) -> u64 {
        self.coeffs
            .iter()
            .map(|c| c.numer().bits() + c.denom().bits())
            .sum()
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.eq_elem(other)
    }
}
impl Eq for FieldElement {}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let name = self.field.generator_name();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let var = match i {
                0 => String::new(),
                1 => name.to_string(),
                _ => format!("{}^{}", name, i),
            };
            let core = if i == 0 {
                format!("{}", c.abs())
            } else if c.abs().is_one() {
                var
            } else {
                format!("{}*{}", c.abs(), var)
            };
            if first {
                if c.is_negative() {
                    write!(f, "-{}", core)?;
                } else {
                    write!(f, "{}", core)?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - {}", core)?;
            } else {
                write!(f, " + {}", core)?;
            }
        }
        Ok(())
    }
}

// Arithmetic operators for internal use; they require matching fields.
macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).expect("mixed number fields")
            }
        }
    };
}
binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::neg(self)
    }
}

/// Single-entry dispatch over the field operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
}

pub fn field_arith(
    a: &FieldElement,
    b: &FieldElement,
    op: FieldOp,
) -> Result<FieldElement, FieldError> {
    match op {
        FieldOp::Add => a.checked_add(b),
        FieldOp::Sub => a.checked_sub(b),
        FieldOp::Mul => a.checked_mul(b),
        FieldOp::Div => a.checked_div(b),
        FieldOp::Neg => Ok(a.neg()),
    }
}

// ---- rational polynomial helpers (dense, ascending, trimmed) ----

fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().map(|c| c.is_zero()) == Some(true) {
        v.pop();
    }
    v
}

fn poly_deg(v: &[Rational]) -> isize {
    v.len() as isize - 1
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out = vec![Rational::zero(); n];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(out)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    if rem.len() <= db {
        return (vec![], trim(rem));
    }
    let mut quo = vec![Rational::zero(); rem.len() - db];
    let lead = b[db].clone();
    while rem.len() > db && !rem.is_empty() {
        let dr = rem.len() - 1;
        if dr < db {
            break;
        }
        let c = &rem[dr] / &lead;
        quo[dr - db] = c.clone();
        for (i, bc) in b.iter().enumerate() {
            let idx = dr - db + i;
            let t = &c * bc;
            rem[idx] -= t;
        }
        rem = trim(rem);
    }
    (trim(quo), rem)
}

fn poly_string(v: &[Rational]) -> String {
    let mut s = String::new();
    for (i, c) in v.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if !s.is_empty() {
            s.push_str(" + ");
        }
        s.push_str(&format!("{}*t^{}", c, i));
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// Exact square root of a non-negative rational, if it is a perfect square.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    if q.is_zero() {
        return Some(Rational::zero());
    }
    let n = q.numer();
    let d = q.denom();
    let sn = n.sqrt();
    let sd = d.sqrt();
    if &(&sn * &sn) == n && &(&sd * &sd) == d {
        Some(Rational::new(sn, sd))
    } else {
        None
    }
}

/// Rational roots of a2 x^2 + a1 x + a0 (a2 may be zero).
pub fn rational_quadratic_roots(a2: &Rational, a1: &Rational, a0: &Rational) -> Vec<Rational> {
    if a2.is_zero() {
        if a1.is_zero() {
            return vec![];
        }
        return vec![-(a0 / a1)];
    }
    let disc = a1 * a1 - rat(4) * a2 * a0;
    match rational_sqrt(&disc) {
        None => vec![],
        Some(s) => {
            let two_a = rat(2) * a2;
            let r1 = (-a1 + &s) / &two_a;
            let r2 = (-a1 - &s) / &two_a;
            if r1 == r2 {
                vec![r1]
            } else {
                vec![r1, r2]
            }
        }
    }
}

/// Find one rational root of a monic rational polynomial, if any.
///
/// Degree 2 uses the discriminant (exact). Higher degrees enumerate divisor
/// candidates after clearing denominators; complete at desk-scale
/// coefficients, which is all adjoin_root needs.
fn rational_root(mp: &[Rational]) -> Option<Rational> {
    let deg = mp.len() - 1;
    if mp[0].is_zero() {
        return Some(Rational::zero());
    }
    if deg == 2 {
        let roots = rational_quadratic_roots(&mp[2], &mp[1], &mp[0]);
        return roots.into_iter().next();
    }
    // Clear denominators: integer polynomial b_deg x^deg + ... + b_0.
    let mut l = BigInt::one();
    for c in mp {
        l = l.lcm(c.denom());
    }
    let ints: Vec<BigInt> = mp.iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect();
    let p_divs = small_divisors(&ints[0]);
    let q_divs = small_divisors(&ints[deg]);
    for p in &p_divs {
        for q in &q_divs {
            for sign in [1i64, -1] {
                let cand = Rational::new(p * BigInt::from(sign), q.clone());
                let mut acc = Rational::zero();
                for c in mp.iter().rev() {
                    acc = acc * &cand + c;
                }
                if acc.is_zero() {
                    return Some(cand);
                }
            }
        }
    }
    None
}

/// Positive divisors by trial division; capped, which is fine for the small
/// constants seen in minimal polynomials.
fn small_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut divs = vec![BigInt::one()];
    let mut i = BigInt::from(2u32);
    let cap = BigInt::from(1_000_000u64);
    while &i * &i <= n && i <= cap {
        if (&n % &i).is_zero() {
            divs.push(i.clone());
            divs.push(&n / &i);
        }
        i += 1;
    }
    if !n.is_one() {
        divs.push(n);
    }
    divs.sort();
    divs.dedup();
    divs
}
