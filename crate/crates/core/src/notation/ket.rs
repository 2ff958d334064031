//! Parser and canonical formatter for ket expressions.

use num_complex::Complex64;

use crate::error::{ParseError, Result};
use crate::state::{canonicalize, BasisLabel, Ket};

/// One parsed term: evaluated coefficient, mode tuple, source position.
#[derive(Debug, Clone, PartialEq)]
pub struct KetTerm {
    pub coeff: Complex64,
    pub modes: Vec<String>,
    pub line: usize,
    pub col: usize,
}

/// Parse tree of a ket expression: terms plus an optional global divisor
/// (already evaluated, e.g. `sqrt(3)` → √3).
#[derive(Debug, Clone, PartialEq)]
pub struct KetExpr {
    pub terms: Vec<KetTerm>,
    pub divisor: Option<f64>,
}

impl KetExpr {
    /// Evaluate into a sparse ket. The slot count is the arity of the first
    /// term; arity disagreement is a positioned error.
    pub fn to_ket(&self) -> Result<Ket> {
        let slots = self.terms[0].modes.len();
        for term in &self.terms {
            if term.modes.len() != slots {
                return Err(ParseError::new(
                    term.line,
                    term.col,
                    format!(
                        "ket has {} modes but earlier terms have {slots}",
                        term.modes.len()
                    ),
                )
                .into());
            }
        }
        let div = self.divisor.unwrap_or(1.0);
        let terms = self
            .terms
            .iter()
            .map(|t| (BasisLabel::new(t.modes.clone()), t.coeff / div));
        Ket::new(slots, terms, false)
    }
}

/// Parse a ket expression and evaluate it. The result is normalized iff the
/// expression is; no rescaling happens here.
pub fn parse_ket(text: &str) -> Result<Ket> {
    parse_ket_expr(text)?.to_ket()
}

/// Parse a ket expression into its tree without evaluating to a ket.
pub fn parse_ket_expr(text: &str) -> std::result::Result<KetExpr, ParseError> {
    let mut cur = Cursor::new(text);
    cur.skip_ws();
    if cur.peek() == Some('(') {
        // Could be a parenthesized sum or a complex-literal coefficient on
        // the first term; try the sum reading first and fall back.
        let save = cur.idx;
        match cur.paren_expr() {
            Ok(expr) => return Ok(expr),
            Err(first) => {
                cur.idx = save;
                return cur.bare_expr().map_err(|second| {
                    if (second.line, second.col) >= (first.line, first.col) {
                        second
                    } else {
                        first
                    }
                });
            }
        }
    }
    cur.bare_expr()
}

fn is_label_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || matches!(c, '_' | '+' | '\'' | '-')
}

struct Cursor {
    chars: Vec<char>,
    // (line, col) per char, plus one entry for end-of-input
    positions: Vec<(usize, usize)>,
    idx: usize,
}

impl Cursor {
    fn new(text: &str) -> Cursor {
        let chars: Vec<char> = text.chars().collect();
        let mut positions = Vec::with_capacity(chars.len() + 1);
        let (mut line, mut col) = (1usize, 1usize);
        for &c in &chars {
            positions.push((line, col));
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        }
        positions.push((line, col));
        Cursor {
            chars,
            positions,
            idx: 0,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.idx).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.idx += 1;
        }
        c
    }

    fn here(&self) -> (usize, usize) {
        self.positions[self.idx]
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        let (line, col) = self.here();
        ParseError::new(line, col, message)
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        match self.peek() {
            Some('√') => self.err("unicode √ is not accepted; write sqrt(...)"),
            Some('ι') => self.err("unicode ι is not accepted; write i"),
            Some(c) => self.err(format!("expected {wanted}, found '{c}'")),
            None => self.err(format!("expected {wanted}, found end of input")),
        }
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.idx += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.idx += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> std::result::Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("'{c}'")))
        }
    }

    fn number(&mut self, signed: bool) -> std::result::Result<f64, ParseError> {
        let start = self.idx;
        if signed && matches!(self.peek(), Some('+') | Some('-')) {
            self.bump();
        }
        if !matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            return Err(self.unexpected("a number"));
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        if self.peek() == Some('.') {
            self.bump();
            if !matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                return Err(self.unexpected("digits after the decimal point"));
            }
            while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                self.bump();
            }
        }
        let text: String = self.chars[start..self.idx].iter().collect();
        text.parse().map_err(|_| {
            ParseError::new(
                self.positions[start].0,
                self.positions[start].1,
                format!("invalid number \"{text}\""),
            )
        })
    }

    fn paren_expr(&mut self) -> std::result::Result<KetExpr, ParseError> {
        self.expect('(')?;
        let terms = self.sum()?;
        self.skip_ws();
        self.expect(')')?;
        self.finish(terms)
    }

    fn bare_expr(&mut self) -> std::result::Result<KetExpr, ParseError> {
        let terms = self.sum()?;
        self.finish(terms)
    }

    fn finish(&mut self, terms: Vec<KetTerm>) -> std::result::Result<KetExpr, ParseError> {
        self.skip_ws();
        let divisor = if self.eat('/') {
            Some(self.scale()?)
        } else {
            None
        };
        self.skip_ws();
        if self.peek().is_some() {
            return Err(self.unexpected("end of input"));
        }
        Ok(KetExpr { terms, divisor })
    }

    fn sum(&mut self) -> std::result::Result<Vec<KetTerm>, ParseError> {
        self.skip_ws();
        let mut sign = Complex64::ONE;
        if self.eat('-') {
            sign = -sign;
        } else {
            self.eat('+');
        }
        let mut term = self.term()?;
        term.coeff *= sign;
        let mut terms = vec![term];
        loop {
            self.skip_ws();
            let negate = match self.peek() {
                Some('+') => false,
                Some('-') => true,
                _ => break,
            };
            self.bump();
            let mut term = self.term()?;
            if negate {
                term.coeff = -term.coeff;
            }
            terms.push(term);
        }
        Ok(terms)
    }

    fn term(&mut self) -> std::result::Result<KetTerm, ParseError> {
        self.skip_ws();
        let coeff = match self.peek() {
            Some('|') => Complex64::ONE,
            Some('i') => {
                self.bump();
                Complex64::I
            }
            Some('(') => self.complex_literal()?,
            Some(c) if c.is_ascii_digit() => self.numeric_coeff()?,
            _ => return Err(self.unexpected("a coefficient or '|'")),
        };
        self.skip_ws();
        let (line, col) = self.here();
        let modes = self.ket_body()?;
        Ok(KetTerm {
            coeff,
            modes,
            line,
            col,
        })
    }

    fn numeric_coeff(&mut self) -> std::result::Result<Complex64, ParseError> {
        let value = self.number(false)?;
        let save = self.idx;
        self.skip_ws();
        let starred = self.eat('*');
        if starred {
            self.skip_ws();
        }
        if self.eat('i') {
            Ok(Complex64::new(0.0, value))
        } else if starred {
            Err(self.unexpected("'i' after '*'"))
        } else {
            self.idx = save;
            Ok(Complex64::new(value, 0.0))
        }
    }

    fn complex_literal(&mut self) -> std::result::Result<Complex64, ParseError> {
        self.expect('(')?;
        self.skip_ws();
        let re = self.number(true)?;
        self.skip_ws();
        let im = if self.eat(',') {
            self.skip_ws();
            let im = self.number(true)?;
            self.skip_ws();
            im
        } else {
            0.0
        };
        self.expect(')')?;
        Ok(Complex64::new(re, im))
    }

    fn ket_body(&mut self) -> std::result::Result<Vec<String>, ParseError> {
        self.expect('|')?;
        let mut modes = Vec::new();
        loop {
            self.skip_ws();
            let start = self.idx;
            while matches!(self.peek(), Some(c) if is_label_char(c)) {
                self.bump();
            }
            if self.idx == start {
                return Err(self.unexpected("a mode label"));
            }
            modes.push(self.chars[start..self.idx].iter().collect());
            self.skip_ws();
            match self.peek() {
                Some(',') => {
                    self.bump();
                }
                Some('>') => {
                    self.bump();
                    return Ok(modes);
                }
                _ => return Err(self.unexpected("',' or '>' (unclosed ket)")),
            }
        }
    }

    fn scale(&mut self) -> std::result::Result<f64, ParseError> {
        self.skip_ws();
        let (line, col) = self.here();
        let value = match self.peek() {
            Some(c) if c.is_ascii_digit() => self.number(false)?,
            Some('s') => {
                for c in "sqrt".chars() {
                    self.expect(c)?;
                }
                self.skip_ws();
                self.expect('(')?;
                self.skip_ws();
                let arg = self.number(false)?;
                self.skip_ws();
                self.expect(')')?;
                arg.sqrt()
            }
            _ => return Err(self.unexpected("a number or sqrt(...)")),
        };
        if value <= 0.0 {
            return Err(ParseError::new(line, col, "scale must be positive"));
        }
        Ok(value)
    }
}

/// Component magnitudes below this render as zero.
const DISPLAY_EPS: f64 = 1e-9;

/// Five-significant-digit decimal rendering.
fn sig5(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    // take the decade from the rounded value so 0.99999 renders as "1.0000",
    // not "1.00000"
    let scientific = format!("{:.4e}", v);
    let (_, exp) = scientific.split_once('e').expect("scientific format has e");
    let exponent: i32 = exp.parse().expect("exponent parses");
    let decimals = (4 - exponent).clamp(0, 17) as usize;
    format!("{v:.decimals$}")
}

/// Body text of one coefficient and whether it carries a leading minus.
fn render_coeff(c: Complex64) -> (bool, String) {
    if c.im.abs() < DISPLAY_EPS {
        (c.re < 0.0, sig5(c.re.abs()))
    } else if c.re.abs() < DISPLAY_EPS {
        (c.im < 0.0, format!("{}i", sig5(c.im.abs())))
    } else {
        (false, format!("({},{})", sig5(c.re), sig5(c.im)))
    }
}

/// Canonical rendering: label-sorted, global phase fixed so the first
/// amplitude is real positive, coefficients at five significant digits.
/// The zero ket renders as "0".
pub fn format_ket(k: &Ket) -> String {
    if k.is_empty() {
        return "0".to_string();
    }
    let canonical = canonicalize(k);
    let mut out = String::new();
    let wrap = canonical.len() > 1;
    if wrap {
        out.push('(');
    }
    for (i, (label, amp)) in canonical.terms().enumerate() {
        let (negative, body) = render_coeff(*amp);
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&body);
        out.push('|');
        out.push_str(&label.to_string());
        out.push('>');
    }
    if wrap {
        out.push(')');
    }
    out
}
