//! Recursive-descent parser for the polynomial input grammar:
//!
//! ```text
//! expr     := ['-'] term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ('^' uint)?
//! base     := 'x' | 'y' | 'z' | fieldgen | rational | '(' expr ')'
//! rational := uint ('/' uint)?
//! ```
//!
//! Whitespace is insignificant. Multiplication and powers are always
//! explicit. Homogeneity is validated after parsing; mixed-degree input is a
//! [`PolyError::NotHomogeneous`].

use super::{HomogPoly, Monomial, PolyError};
use crate::numfield::{Field, FieldElement, Rational};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;

/// Intermediate, possibly inhomogeneous polynomial built during parsing.
#[derive(Clone)]
struct RawPoly {
    terms: BTreeMap<Monomial, FieldElement>,
}

impl RawPoly {
    fn zero() -> Self {
        RawPoly {
            terms: BTreeMap::new(),
        }
    }

    fn constant(c: FieldElement) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::new(0, 0, 0), c);
        }
        RawPoly { terms }
    }

    fn variable(field: &Field, var: usize) -> Self {
        let mut exps = [0u16; 3];
        exps[var] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(Monomial { exps }, FieldElement::one(field));
        RawPoly { terms }
    }

    fn add_term(&mut self, m: Monomial, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    fn add(&self, other: &RawPoly) -> RawPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    fn neg(&self) -> RawPoly {
        RawPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect(),
        }
    }

    fn mul(&self, other: &RawPoly) -> RawPoly {
        let mut out = RawPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.checked_mul(c2).unwrap());
            }
        }
        out
    }

    fn pow(&self, field: &Field, e: u32) -> RawPoly {
        let mut acc = RawPoly::constant(FieldElement::one(field));
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    field: Field,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: &str) -> Result<T, PolyError> {
        Err(PolyError::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn parse_uint(&mut self) -> Result<BigInt, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected a number");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn parse_expr(&mut self) -> Result<RawPoly, PolyError> {
        let mut acc = if self.eat(b'-') {
            self.parse_term()?.neg()
        } else {
            self.parse_term()?
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.parse_term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.add(&self.parse_term()?.neg());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_term(&mut self) -> Result<RawPoly, PolyError> {
        let mut acc = self.parse_factor()?;
        while self.eat(b'*') {
            acc = acc.mul(&self.parse_factor()?);
        }
        Ok(acc)
    }

    fn parse_factor(&mut self) -> Result<RawPoly, PolyError> {
        let base = self.parse_base()?;
        if self.eat(b'^') {
            let e = self.parse_uint()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| PolyError::Syntax {
                    pos: self.pos,
                    msg: "exponent too large".to_string(),
                })?;
            if e > t_max_exp() {
                return self.err("exponent too large");
            }
            return Ok(base.pow(&self.field, e));
        }
        Ok(base)
    }

    fn parse_base(&mut self) -> Result<RawPoly, PolyError> {
        match self.peek() {
            None => self.err("unexpected end of input"),
            Some(b'(') => {
                self.pos += 1;
                let inner = self.parse_expr()?;
                if !self.eat(b')') {
                    return self.err("expected `)`");
                }
                Ok(inner)
            }
            Some(b'-') => {
                // Signed integer literal (the grammar's signed int).
                self.pos += 1;
                match self.peek() {
                    Some(c) if c.is_ascii_digit() => {
                        let r = self.parse_rational()?;
                        Ok(RawPoly::constant(FieldElement::from_rational(
                            &self.field,
                            -r,
                        )))
                    }
                    _ => self.err("expected digits after `-`"),
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let r = self.parse_rational()?;
                Ok(RawPoly::constant(FieldElement::from_rational(
                    &self.field,
                    r,
                )))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match name {
                    "x" => Ok(RawPoly::variable(&self.field, 0)),
                    "y" => Ok(RawPoly::variable(&self.field, 1)),
                    "z" => Ok(RawPoly::variable(&self.field, 2)),
                    _ if !self.field.is_rationals() && name == self.field.generator_name() => Ok(
                        RawPoly::constant(FieldElement::generator(&self.field)),
                    ),
                    _ => Err(PolyError::UnknownSymbol(name.to_string(), start)),
                }
            }
            Some(c) => self.err(&format!("unexpected character `{}`", c as char)),
        }
    }

    fn parse_rational(&mut self) -> Result<Rational, PolyError> {
        let n = self.parse_uint()?;
        if self.eat(b'/') {
            let d = self.parse_uint()?;
            if d == BigInt::from(0) {
                return self.err("zero denominator");
            }
            Ok(Rational::new(n, d))
        } else {
            Ok(Rational::from_integer(n))
        }
    }
}

fn t_max_exp() -> u32 {
    512
}

/// Parse a polynomial over the given field; the result must be homogeneous.
pub fn parse_poly(text: &str, field: &Field) -> Result<HomogPoly, PolyError> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
        field: field.clone(),
    };
    let raw = parser.parse_expr()?;
    parser.skip_ws();
    if parser.pos != parser.src.len() {
        return parser.err("trailing input");
    }
    let mut degrees: Vec<usize> = raw.terms.keys().map(|m| m.degree()).collect();
    degrees.sort_unstable();
    degrees.dedup();
    match degrees.len() {
        0 => Ok(HomogPoly::zero(field, 0)),
        1 => Ok(HomogPoly::from_terms(
            field,
            degrees[0],
            raw.terms.into_iter(),
        )),
        _ => Err(PolyError::NotHomogeneous(degrees)),
    }
}

/// Parse a scalar (degree-0) field-element expression such as `(5*a+15)/4`.
///
/// Division by a nonzero scalar is allowed here, unlike in the polynomial
/// grammar, because catalog parameters are printed that way.
pub fn parse_scalar(text: &str, field: &Field) -> Result<FieldElement, PolyError> {
    // Accept `expr` or `expr / uint`-style inputs by parsing `(a)/(b)` splits.
    let t = text.trim();
    if let Some(ix) = split_top_level_div(t) {
        let num = parse_scalar(&t[..ix], field)?;
        let den = parse_scalar(&t[ix + 1..], field)?;
        return num
            .checked_div(&den)
            .map_err(|_| PolyError::Syntax {
                pos: ix,
                msg: "division by zero".to_string(),
            });
    }
    let p = parse_poly(t, field)?;
    if p.is_zero() {
        return Ok(FieldElement::zero(field));
    }
    if p.degree() != 0 {
        return Err(PolyError::Syntax {
            pos: 0,
            msg: "expected a scalar, found variables".to_string(),
        });
    }
    Ok(p.coeff(&Monomial::new(0, 0, 0)))
}

/// Parse a univariate polynomial in `x` with rational coefficients, without
/// any homogeneity requirement; returns ascending coefficients. Used for
/// minimal-polynomial declarations.
pub fn parse_rational_univariate(text: &str) -> Result<Vec<Rational>, PolyError> {
    let field = crate::numfield::NumberField::rationals();
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
        field,
    };
    let raw = parser.parse_expr()?;
    parser.skip_ws();
    if parser.pos != parser.src.len() {
        return parser.err("trailing input");
    }
    let deg = raw
        .terms
        .keys()
        .map(|m| m.exps[0] as usize)
        .max()
        .unwrap_or(0);
    let mut coeffs = vec![Rational::zero(); deg + 1];
    for (m, c) in raw.terms {
        if m.exps[1] != 0 || m.exps[2] != 0 {
            return Err(PolyError::Syntax {
                pos: 0,
                msg: "minimal polynomial must be univariate".to_string(),
            });
        }
        coeffs[m.exps[0] as usize] = c
            .as_rational()
            .expect("rational base field")
            .clone();
    }
    Ok(coeffs)
}

/// Find a `/` at paren depth 0 that is not part of a rational literal.
fn split_top_level_div(t: &str) -> Option<usize> {
    let bytes = t.as_bytes();
    let mut depth = 0usize;
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => depth = depth.saturating_sub(1),
            b'/' if depth == 0 => {
                // `3/4` literals are handled by the grammar; only treat `/`
                // following `)` as a scalar division split.
                let prev = bytes[..i]
                    .iter()
                    .rev()
                    .find(|c| !c.is_ascii_whitespace());
                if prev == Some(&b')') {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}
