//! Internal dense univariate polynomials over a number field.
//!
//! Used by the squarefreeness test, quadratic point splitting and the small
//! resultant/root machinery in the arrangements module. Coefficients ascend.

use crate::numfield::{Field, FieldElement, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq)]
pub struct UniPoly {
    pub field: Field,
    pub coeffs: Vec<FieldElement>, // trimmed: last entry nonzero unless empty
}

impl UniPoly {
    pub fn new(field: &Field, coeffs: Vec<FieldElement>) -> Self {
        let mut p = UniPoly {
            field: field.clone(),
            coeffs,
        };
        p.trim();
        p
    }

    pub fn zero(field: &Field) -> Self {
        UniPoly {
            field: field.clone(),
            coeffs: vec![],
        }
    }

    pub fn constant(field: &Field, c: FieldElement) -> Self {
        Self::new(field, vec![c])
    }

    fn trim(&mut self) {
        while self.coeffs.last().map(|c| c.is_zero()) == Some(true) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; -1 for the zero polynomial.
    pub fn deg(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn leading(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![FieldElement::zero(&self.field); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] = &out[i] + c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] = &out[i] + c;
        }
        UniPoly::new(&self.field, out)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![FieldElement::zero(&self.field); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] = &out[i] + c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] = &out[i] - c;
        }
        UniPoly::new(&self.field, out)
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero(&self.field);
        }
        let mut out =
            vec![FieldElement::zero(&self.field); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        UniPoly::new(&self.field, out)
    }

    pub fn scale(&self, c: &FieldElement) -> UniPoly {
        UniPoly::new(
            &self.field,
            self.coeffs.iter().map(|a| a * c).collect(),
        )
    }

    /// Division with remainder by a nonzero divisor.
    pub fn divrem(&self, div: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!div.is_zero(), "division by zero polynomial");
        let db = div.deg();
        let mut rem = self.clone();
        if rem.deg() < db {
            return (UniPoly::zero(&self.field), rem);
        }
        let mut quo = vec![FieldElement::zero(&self.field); (rem.deg() - db + 1) as usize];
        let lead_inv = div.leading().unwrap().inverse().expect("nonzero leading");
        while !rem.is_zero() && rem.deg() >= db {
            let dr = rem.deg() as usize;
            let c = rem.coeffs[dr].checked_mul(&lead_inv).unwrap();
            let shift = dr - db as usize;
            quo[shift] = c.clone();
            for (i, bc) in div.coeffs.iter().enumerate() {
                let t = &c * bc;
                rem.coeffs[shift + i] = &rem.coeffs[shift + i] - &t;
            }
            rem.trim();
        }
        (UniPoly::new(&self.field, quo), rem)
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn div_exact(&self, div: &UniPoly) -> UniPoly {
        let (q, r) = self.divrem(div);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            None => self.clone(),
            Some(l) => {
                let inv = l.inverse().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero(&self.field);
        }
        let out = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, c)| c.scale(&Rational::from_integer(BigInt::from(i as i64 + 1))))
            .collect();
        UniPoly::new(&self.field, out)
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        let mut acc = FieldElement::zero(&self.field);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &Rational) -> FieldElement {
        self.eval(&FieldElement::from_rational(&self.field, x.clone()))
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// All coefficients lie in Q.
    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_rational())
    }

    /// Squarefree (Yun) decomposition: list of (factor, multiplicity) with
    /// pairwise-coprime squarefree factors whose weighted product is
    /// `self / leading`.
    pub fn squarefree_decomposition(&self) -> Vec<(UniPoly, usize)> {
        let f = self.monic();
        if f.deg() <= 0 {
            return vec![];
        }
        let df = f.derivative();
        let a0 = f.gcd(&df);
        if a0.deg() == 0 {
            return vec![(f, 1)];
        }
        let mut out = Vec::new();
        let mut b = f.div_exact(&a0);
        let mut c = df.div_exact(&a0);
        let mut i = 1usize;
        loop {
            let d = c.sub(&b.derivative());
            if d.is_zero() {
                if b.deg() > 0 {
                    out.push((b.monic(), i));
                }
                break;
            }
            let a = b.gcd(&d);
            if a.deg() > 0 {
                out.push((a.monic(), i));
            }
            b = b.div_exact(&a);
            c = d.div_exact(&a);
            i += 1;
            if b.deg() == 0 {
                break;
            }
        }
        out
    }
}

/// Roots of a polynomial of degree <= 2 that lie in the coefficient field.
///
/// `Ok(None)` means "provably no root in this field"; an error means the
/// decision procedure does not cover this field degree.
pub fn quadratic_roots_in_field(
    p: &UniPoly,
) -> Result<Option<Vec<FieldElement>>, crate::numfield::FieldError> {
    match p.deg() {
        d if d < 1 => Ok(Some(vec![])),
        1 => {
            let r = p.coeffs[0].neg().checked_div(&p.coeffs[1]).unwrap();
            Ok(Some(vec![r]))
        }
        2 => {
            let a = &p.coeffs[2];
            let b = &p.coeffs[1];
            let c = &p.coeffs[0];
            let disc = &(b * b) - &(&(a * c)).scale(&Rational::from_integer(BigInt::from(4)));
            match disc.sqrt_in_field()? {
                None => Ok(None),
                Some(s) => {
                    let two_a_inv = a
                        .scale(&Rational::from_integer(BigInt::from(2)))
                        .inverse()
                        .unwrap();
                    let r1 = (&(-b) + &s).checked_mul(&two_a_inv).unwrap();
                    let r2 = (&(-b) - &s).checked_mul(&two_a_inv).unwrap();
                    if r1 == r2 {
                        Ok(Some(vec![r1]))
                    } else {
                        Ok(Some(vec![r1, r2]))
                    }
                }
            }
        }
        d => panic!("quadratic_roots_in_field called with degree {}", d),
    }
}

/// Rational roots (with multiplicity 1 semantics: caller deals with repeats)
/// of a polynomial with rational coefficients, any degree.
pub fn rational_roots(p: &UniPoly) -> Vec<Rational> {
    assert!(p.is_rational());
    if p.is_zero() {
        return vec![];
    }
    let rats: Vec<Rational> = p
        .coeffs
        .iter()
        .map(|c| c.as_rational().unwrap().clone())
        .collect();
    // Strip powers of x.
    let low = rats.iter().position(|c| !c.is_zero()).unwrap();
    let mut roots = Vec::new();
    if low > 0 {
        roots.push(Rational::zero());
    }
    let body = &rats[low..];
    if body.len() <= 1 {
        return roots;
    }
    // Clear denominators; candidates num/den with num | a0, den | an.
    let mut l = BigInt::one();
    for c in body {
        l = num_integer::Integer::lcm(&l, c.denom());
    }
    let ints: Vec<BigInt> = body
        .iter()
        .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
        .collect();
    let nums = divisors(&ints[0]);
    let dens = divisors(ints.last().unwrap());
    for n in &nums {
        for d in &dens {
            for sign in [1i64, -1] {
                let cand = Rational::new(n * BigInt::from(sign), d.clone());
                let mut acc = Rational::zero();
                for c in body.iter().rev() {
                    acc = acc * &cand + c;
                }
                if acc.is_zero() && !roots.contains(&cand) {
                    roots.push(cand);
                }
            }
        }
    }
    roots
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut divs = vec![BigInt::one()];
    let mut i = BigInt::from(2u32);
    let cap = BigInt::from(2_000_000u64);
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

/// Try to split a monic rational quartic into two monic rational quadratics
/// via the resolvent cubic. Returns the pair when a rational splitting exists.
pub fn rational_quartic_split(p: &UniPoly) -> Option<(UniPoly, UniPoly)> {
    assert!(p.is_rational() && p.deg() == 4);
    let f = p.monic();
    let c: Vec<Rational> = f
        .coeffs
        .iter()
        .map(|x| x.as_rational().unwrap().clone())
        .collect();
    let (s, r, q, pp) = (&c[0], &c[1], &c[2], &c[3]);
    // Resolvent cubic for (x^2+ax+b)(x^2+cx+d) with y = b + d:
    //   y^3 - q y^2 + (pr - 4s) y - (p^2 s - 4 q s + r^2) = 0
    let four = Rational::from_integer(BigInt::from(4));
    let resolvent = UniPoly::new(
        &p.field,
        vec![
            FieldElement::from_rational(&p.field, -(pp * pp * s - &four * q * s + r * r)),
            FieldElement::from_rational(&p.field, pp * r - &four * s),
            FieldElement::from_rational(&p.field, -q),
            FieldElement::one(&p.field),
        ],
    );
    for y0 in rational_roots(&resolvent) {
        // a + c = p, a c = q - y0.
        let prod = q - &y0;
        let disc = pp * pp - &four * &prod;
        let sd = crate::numfield::rational_sqrt(&disc)?;
        let two = Rational::from_integer(BigInt::from(2));
        let a = (pp + &sd) / &two;
        let cc = (pp - &sd) / &two;
        let (b, d) = if a != cc {
            // b(c - a) = r - a*y0
            let b = (r - &a * &y0) / (&cc - &a);
            let d = &y0 - &b;
            (b, d)
        } else {
            // a = c: b, d are roots of t^2 - y0 t + s.
            let roots = crate::numfield::rational_quadratic_roots(
                &Rational::one(),
                &-y0.clone(),
                s,
            );
            if roots.is_empty() {
                continue;
            }
            let b = roots[0].clone();
            let d = if roots.len() > 1 {
                roots[1].clone()
            } else {
                roots[0].clone()
            };
            (b, d)
        };
        let mk = |lin: &Rational, con: &Rational| {
            UniPoly::new(
                &p.field,
                vec![
                    FieldElement::from_rational(&p.field, con.clone()),
                    FieldElement::from_rational(&p.field, lin.clone()),
                    FieldElement::one(&p.field),
                ],
            )
        };
        let f1 = mk(&a, &b);
        let f2 = mk(&cc, &d);
        if f1.mul(&f2) == f {
            return Some((f1, f2));
        }
    }
    None
}
