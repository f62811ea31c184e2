//! The line-oriented arrangement/curve input format.
//!
//! ```text
//! # comment
//! field e : e^2 - e + 1          (optional; default is Q)
//! component line : x - e*z
//! component conic : y^2 + x*z
//! component curve : x^3 + y^3 + z^3
//! curve : x^3 + y^3 + z^3        (raw-curve mode, no weak-combinatorics)
//! ```

use freecurve::arrangements::{Arrangement, Component};
use freecurve::catalog::build_field;
use freecurve::numfield::{Field, NumberField};
use freecurve::polyring::{parse_poly, HomogPoly, PolyError};

#[derive(Debug)]
pub enum InputSpec {
    Arrangement(Arrangement),
    RawCurve(HomogPoly),
}

#[derive(Debug)]
pub struct InputError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

fn err(line: usize, column: usize, message: impl Into<String>) -> InputError {
    InputError {
        line,
        column,
        message: message.into(),
    }
}

fn poly_err(line: usize, offset: usize, e: PolyError) -> InputError {
    match e {
        PolyError::Syntax { pos, msg } => err(line, offset + pos + 1, msg),
        PolyError::UnknownSymbol(name, pos) => {
            err(line, offset + pos + 1, format!("unknown symbol `{}`", name))
        }
        other => err(line, offset + 1, other.to_string()),
    }
}

/// Field-tower and validity problems are reported separately from parse
/// errors so the CLI can map them to distinct exit codes.
pub enum ParsedFile {
    Ok(InputSpec),
    ParseError(InputError),
    InvalidArrangement(freecurve::arrangements::ArrangeError),
}

pub fn parse_input(text: &str) -> ParsedFile {
    let mut field: Option<Field> = None;
    let mut components: Vec<Component> = Vec::new();
    let mut raw_curve: Option<HomogPoly> = None;
    for (idx, raw_line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = match raw_line.find('#') {
            Some(p) => &raw_line[..p],
            None => raw_line,
        };
        if line.trim().is_empty() {
            continue;
        }
        let Some((head, rest)) = line.split_once(':') else {
            return ParsedFile::ParseError(err(
                lineno,
                1,
                "expected `<directive> : <data>`",
            ));
        };
        let head_words: Vec<&str> = head.split_whitespace().collect();
        let body_offset = head.len() + 1;
        match head_words.as_slice() {
            ["field", name] => {
                if field.is_some() || !components.is_empty() || raw_curve.is_some() {
                    return ParsedFile::ParseError(err(
                        lineno,
                        1,
                        "field declaration must come first and appear once",
                    ));
                }
                match build_field(name, rest.trim()) {
                    Ok(f) => field = Some(f),
                    Err(e) => {
                        return ParsedFile::ParseError(err(lineno, body_offset + 1, e.to_string()))
                    }
                }
            }
            ["component", kind] => {
                if raw_curve.is_some() {
                    return ParsedFile::ParseError(err(
                        lineno,
                        1,
                        "cannot mix `curve :` with components",
                    ));
                }
                let f = field.get_or_insert_with(NumberField::rationals);
                let poly = match parse_poly(rest.trim(), f) {
                    Ok(p) => p,
                    Err(e) => {
                        let offset = body_offset + (rest.len() - rest.trim_start().len());
                        return ParsedFile::ParseError(poly_err(lineno, offset, e));
                    }
                };
                let comp = match *kind {
                    "line" => Component::line(poly),
                    "conic" => Component::conic(poly),
                    "curve" => Component::other(poly),
                    other => {
                        return ParsedFile::ParseError(err(
                            lineno,
                            1,
                            format!("unknown component kind `{}`", other),
                        ))
                    }
                };
                components.push(comp);
            }
            ["curve"] => {
                if !components.is_empty() || raw_curve.is_some() {
                    return ParsedFile::ParseError(err(
                        lineno,
                        1,
                        "`curve :` must be the only content line",
                    ));
                }
                let f = field.get_or_insert_with(NumberField::rationals);
                match parse_poly(rest.trim(), f) {
                    Ok(p) => raw_curve = Some(p),
                    Err(e) => {
                        let offset = body_offset + (rest.len() - rest.trim_start().len());
                        return ParsedFile::ParseError(poly_err(lineno, offset, e));
                    }
                }
            }
            _ => {
                return ParsedFile::ParseError(err(
                    lineno,
                    1,
                    format!("unknown directive `{}`", head.trim()),
                ));
            }
        }
    }
    if let Some(p) = raw_curve {
        return ParsedFile::Ok(InputSpec::RawCurve(p));
    }
    if components.is_empty() {
        return ParsedFile::ParseError(err(1, 1, "empty input"));
    }
    match Arrangement::new(components) {
        Ok(a) => ParsedFile::Ok(InputSpec::Arrangement(a)),
        Err(e) => ParsedFile::InvalidArrangement(e),
    }
}

/// Serialize an arrangement back into the input format; the output parses to
/// an equivalent arrangement.
pub fn render_arrangement(a: &Arrangement) -> String {
    let mut out = String::new();
    let field = a.field();
    if !field.is_rationals() {
        out.push_str(&format!(
            "field {} : {}\n",
            field.generator_name(),
            field.minpoly_string()
        ));
    }
    for c in a.components() {
        let kind = match c.kind {
            freecurve::arrangements::ComponentKind::Line => "line",
            freecurve::arrangements::ComponentKind::Conic => "conic",
            freecurve::arrangements::ComponentKind::OtherSmooth => "curve",
        };
        out.push_str(&format!("component {} : {}\n", kind, c.poly));
    }
    out
}
