//! Structure files: `dK = expr` lines, an optional `name = ...`, optional `expect key = value`.

use crate::exterior::{fmt_rational, Form, Rational};
use crate::lie::{validate_jacobi, Coframe5, JacobiFailure};
use num_bigint::BigInt;
use num_traits::Zero;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("Jacobi identity fails: {0}")]
    Jacobi(JacobiFailure),
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExpectedValue {
    Flag(bool),
    Number(Rational),
}

impl fmt::Display for ExpectedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExpectedValue::Flag(b) => write!(f, "{b}"),
            ExpectedValue::Number(r) => write!(f, "{}", fmt_rational(r)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureFile {
    pub coframe: Coframe5,
    pub expected: Vec<(String, ExpectedValue)>,
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
    line: usize,
    offset: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn column(&self) -> usize {
        self.offset + self.pos + 1
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        syntax(self.line, self.column(), message)
    }

    fn digits(&mut self) -> &str {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos]).unwrap_or("")
    }
}

/// Parses `p` or `p/q`, both nonnegative.
fn parse_rational(c: &mut Cursor) -> Result<Rational, ParseError> {
    let col = c.column();
    let num = c.digits().to_string();
    if num.is_empty() {
        return Err(c.err("expected a number"));
    }
    let n: BigInt = num.parse().map_err(|_| syntax(c.line, col, "bad number"))?;
    if c.peek() == Some(b'/') {
        c.pos += 1;
        let den = c.digits().to_string();
        if den.is_empty() {
            return Err(c.err("expected a denominator"));
        }
        let d: BigInt = den.parse().map_err(|_| syntax(c.line, col, "bad number"))?;
        if d.is_zero() {
            return Err(syntax(c.line, col, "zero denominator"));
        }
        return Ok(Rational::new(n, d));
    }
    Ok(Rational::from_integer(n))
}

fn parse_pair(c: &mut Cursor) -> Result<[usize; 2], ParseError> {
    let col = c.column();
    let ds = c.digits().to_string();
    match ds.len() {
        0 => Err(c.err("expected an index pair such as 12")),
        1 => Err(syntax(c.line, col, format!("index pair '{ds}' has no second index"))),
        2 => {
            let b = ds.as_bytes();
            let (i, j) = ((b[0] - b'0') as usize, (b[1] - b'0') as usize);
            if !(1..=5).contains(&i) || !(1..=5).contains(&j) {
                return Err(syntax(c.line, col, format!("index out of range in '{ds}' (indices are 1..5)")));
            }
            if i >= j {
                return Err(syntax(c.line, col, format!("index pair '{ds}' must be increasing")));
            }
            Ok([i, j])
        }
        _ => Err(syntax(c.line, col, format!("'{ds}' is not an index pair"))),
    }
}

/// Parses a sum of terms `[±] [p/q *] ij`, or `0`.
pub fn parse_two_form(text: &str, line: usize, offset: usize) -> Result<Form, ParseError> {
    let mut c = Cursor {
        s: text.as_bytes(),
        pos: 0,
        line,
        offset,
    };
    let mut form = Form::zero(2);
    c.skip_ws();
    if text.trim() == "0" {
        return Ok(form);
    }
    let mut first = true;
    loop {
        c.skip_ws();
        let mut sign = Rational::from_integer(1.into());
        match c.peek() {
            Some(b'-') => {
                sign = -sign;
                c.pos += 1;
            }
            Some(b'+') if !first => c.pos += 1,
            None if first => return Err(c.err("empty expression")),
            _ if !first => return Err(c.err("expected '+' or '-'")),
            _ => {}
        }
        c.skip_ws();
        // a leading number is a coefficient only when followed by '*'
        let save = c.pos;
        let r = parse_rational(&mut c)?;
        let is_fraction = c.s[save..c.pos].contains(&b'/');
        c.skip_ws();
        let coefficient = if c.peek() == Some(b'*') {
            c.pos += 1;
            c.skip_ws();
            r
        } else if is_fraction {
            return Err(c.err("expected '*' after coefficient"));
        } else {
            c.pos = save;
            Rational::from_integer(1.into())
        };
        let [i, j] = parse_pair(&mut c)?;
        form.add_scaled(&Form::monomial(&[i, j]), &(sign * coefficient));
        first = false;
        c.skip_ws();
        if c.peek().is_none() {
            return Ok(form);
        }
    }
}

fn parse_expect_value(value: &str, line: usize, column: usize) -> Result<ExpectedValue, ParseError> {
    match value {
        "true" => return Ok(ExpectedValue::Flag(true)),
        "false" => return Ok(ExpectedValue::Flag(false)),
        _ => {}
    }
    let (neg, body) = match value.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, value),
    };
    let mut c = Cursor {
        s: body.as_bytes(),
        pos: 0,
        line,
        offset: column - 1 + usize::from(neg),
    };
    let r = parse_rational(&mut c)?;
    if c.pos != body.len() {
        return Err(c.err("trailing characters after value"));
    }
    Ok(ExpectedValue::Number(if neg { -r } else { r }))
}

/// Parses a structure file; `default_name` is used when the file has no `name` line.
pub fn parse_structure_file(text: &str, default_name: &str) -> Result<StructureFile, ParseError> {
    let mut name = default_name.to_string();
    let mut d: [Option<Form>; 5] = Default::default();
    let mut expected = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let Some(eq) = content.find('=') else {
            return Err(syntax(line, content.len() + 1, "expected '='"));
        };
        let lhs = content[..eq].trim();
        let rhs = &content[eq + 1..];
        let rhs_col = eq + 2;
        let lead = content.len() - content.trim_start().len();
        if lhs == "name" {
            name = rhs.trim().to_string();
            continue;
        }
        if let Some(key) = lhs.strip_prefix("expect ") {
            let v = rhs.trim();
            let col = rhs_col + (rhs.len() - rhs.trim_start().len());
            expected.push((key.trim().to_string(), parse_expect_value(v, line, col)?));
            continue;
        }
        let k = lhs
            .strip_prefix('d')
            .and_then(|k| k.parse::<usize>().ok())
            .ok_or_else(|| syntax(line, lead + 1, format!("expected 'dK', 'name' or 'expect', found '{lhs}'")))?;
        if !(1..=5).contains(&k) {
            return Err(syntax(line, lead + 2, format!("differential index {k} out of range (1..5)")));
        }
        if d[k - 1].is_some() {
            return Err(syntax(line, lead + 1, format!("d{k} given twice")));
        }
        d[k - 1] = Some(parse_two_form(rhs, line, eq + 1)?);
    }
    let images = d.map(|f| f.unwrap_or_else(|| Form::zero(2)));
    let coframe = Coframe5::new(name, images).expect("parser produces 2-forms");
    validate_jacobi(&coframe).map_err(ParseError::Jacobi)?;
    Ok(StructureFile { coframe, expected })
}

pub fn parse_coframe(text: &str, default_name: &str) -> Result<Coframe5, ParseError> {
    parse_structure_file(text, default_name).map(|s| s.coframe)
}

/// Canonical text: the `name` line and one line per nonzero differential.
pub fn print_structure(cf: &Coframe5) -> String {
    let mut out = format!("name = {}\n", cf.name);
    for k in 1..=5 {
        if !cf.dw(k).is_zero() {
            out.push_str(&format!("d{k} = {}\n", cf.dw(k)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::{rat, ratio};

    #[test]
    fn heisenberg_file() {
        let cf = parse_coframe("d5 = -2*12 - 2*34\n", "heisenberg").unwrap();
        assert_eq!(cf.dw(5), &(Form::monomial(&[1, 2]) + Form::monomial(&[3, 4])).scale(&rat(-2)));
        assert!(cf.dw(1).is_zero());
        assert_eq!(cf.name, "heisenberg");
    }

    #[test]
    fn rational_coefficient() {
        let cf = parse_coframe("d1 = 1/2*23", "x").unwrap();
        assert_eq!(cf.dw(1), &Form::monomial(&[2, 3]).scale(&ratio(1, 2)));
    }

    #[test]
    fn malformed_pairs() {
        let e = parse_coframe("d1 = 16", "x").unwrap_err();
        assert!(matches!(&e, ParseError::Syntax { line: 1, column: 6, message } if message.contains("out of range")), "{e}");
        let e = parse_coframe("d1 = 1", "x").unwrap_err();
        assert!(e.to_string().contains("no second index"), "{e}");
        let e = parse_coframe("d1 = 32", "x").unwrap_err();
        assert!(e.to_string().contains("increasing"));
        let e = parse_coframe("\nd7 = 12", "x").unwrap_err();
        assert!(matches!(e, ParseError::Syntax { line: 2, .. }));
        assert!(parse_coframe("d1 = 12 +", "x").is_err());
        assert!(parse_coframe("d1 = 12 34", "x").is_err());
        assert!(parse_coframe("d1 = 1/0*23", "x").is_err());
        assert!(parse_coframe("d1 = 23\nd1 = 23", "x").is_err());
        assert!(parse_coframe("d1 23", "x").is_err());
    }

    #[test]
    fn jacobi_failure_reported() {
        let e = parse_coframe("d1 = 23\nd2 = 14", "x").unwrap_err();
        match e {
            ParseError::Jacobi(j) => assert_eq!(j.residual, -Form::monomial(&[1, 3, 4])),
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn expect_lines_and_comments() {
        let s = parse_structure_file(
            "# a comment\nname = h\nd5 = -2*12 - 2*34  # contact\nexpect contact_hypo = true\nexpect s = -4\nexpect mu = 7/2\n",
            "ignored",
        )
        .unwrap();
        assert_eq!(s.coframe.name, "h");
        assert_eq!(
            s.expected,
            vec![
                ("contact_hypo".to_string(), ExpectedValue::Flag(true)),
                ("s".to_string(), ExpectedValue::Number(rat(-4))),
                ("mu".to_string(), ExpectedValue::Number(ratio(7, 2))),
            ]
        );
    }

    #[test]
    fn print_parse_round_trip() {
        let text = "name = n\nd4 = 12\nd5 = 1/2*13 - 3*24\n";
        let cf = parse_coframe(text, "n").unwrap();
        assert_eq!(print_structure(&cf), text);
        assert_eq!(parse_coframe(&print_structure(&cf), "other").unwrap(), cf);
    }
}
