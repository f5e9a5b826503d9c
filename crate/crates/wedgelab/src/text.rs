//! Text syntax for fields and polynomials.
//!
//! Field specs: `"p"` or `"p^k"` for finite fields, `"Q"` for the rationals.
//!
//! Polynomials are sums of terms `c*x^e`, `x^e`, `c`, highest degree first
//! on output. Extension-field coefficients are polynomials in `t`, written
//! in parentheses when they have more than one term, e.g. `(t+1)*x^2+t`.
//! Rational coefficients may be fractions like `3/2`. An alternate input
//! form is a comma-separated ascending coefficient list.

use std::fmt;

use num::bigint::BigInt;
use num::{One, Signed};

use crate::error::{Error, Result};
use crate::field::{Fe, FieldCtx, FieldKind};
#[cfg(test)]
use crate::field::ExtCoeffs;
use crate::poly::Poly;

/// Parse `"p"`, `"p^k"`, or `"Q"`.
pub fn parse_field(spec: &str) -> Result<FieldCtx> {
    let s = spec.trim();
    if s == "Q" {
        return Ok(FieldCtx::rationals());
    }
    let (p, k) = match s.split_once('^') {
        Some((p, k)) => (p, k),
        None => (s, "1"),
    };
    let p: u64 = p
        .trim()
        .parse()
        .map_err(|_| Error::input(format!("bad field spec {spec:?}")))?;
    let k: u32 = k
        .trim()
        .parse()
        .map_err(|_| Error::input(format!("bad field spec {spec:?}")))?;
    FieldCtx::finite(p, k)
}

pub fn format_field(ctx: &FieldCtx) -> String {
    match ctx.kind() {
        FieldKind::Rational => "Q".to_string(),
        FieldKind::Prime => format!("{}", ctx.characteristic()),
        FieldKind::Extension => format!("{}^{}", ctx.characteristic(), ctx.extension_degree()),
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor { bytes: s.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.peek() == Some(b' ') {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn uint(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.peek().map(|c| c.is_ascii_digit()).unwrap_or(false) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::input("expected a number"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::input("number out of range"))
    }

    fn bigint(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().map(|c| c.is_ascii_digit()).unwrap_or(false) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::input("expected a number"));
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .expect("digits"))
    }

    fn done(&self) -> bool {
        self.pos >= self.bytes.len()
    }
}

/// Parse polynomial text over the given field. Accepts the term syntax and
/// the comma-separated ascending coefficient list.
pub fn parse_poly(ctx: &FieldCtx, s: &str) -> Result<Poly> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::input("empty polynomial"));
    }
    if s.contains(',') {
        let coeffs = s
            .split(',')
            .map(|part| parse_fe(ctx, part))
            .collect::<Result<Vec<Fe>>>()?;
        return Ok(Poly::from_coeffs(ctx, coeffs));
    }
    let mut cur = Cursor::new(s);
    let poly = parse_sum(ctx, &mut cur, true)?;
    cur.skip_ws();
    if !cur.done() {
        return Err(Error::input(format!("trailing input in polynomial {s:?}")));
    }
    Ok(poly)
}

/// Parse a single field element (integer, fraction over Q, or t-expression
/// in an extension field).
pub fn parse_fe(ctx: &FieldCtx, s: &str) -> Result<Fe> {
    let mut cur = Cursor::new(s.trim());
    let poly = parse_sum(ctx, &mut cur, false)?;
    cur.skip_ws();
    if !cur.done() {
        return Err(Error::input(format!("trailing input in element {s:?}")));
    }
    match poly.degree() {
        None => Ok(ctx.zero()),
        Some(0) => Ok(poly.coeff(0)),
        _ => Err(Error::input(format!("{s:?} is not a field element"))),
    }
}

/// Sum of terms; with `allow_x` false only t/number factors are accepted,
/// so the result must be constant.
fn parse_sum(ctx: &FieldCtx, cur: &mut Cursor, allow_x: bool) -> Result<Poly> {
    let mut acc = Poly::zero(ctx);
    let mut first = true;
    loop {
        cur.skip_ws();
        let negative = if first {
            cur.eat(b'-')
        } else if cur.eat(b'+') {
            false
        } else if cur.eat(b'-') {
            true
        } else {
            break;
        };
        first = false;
        let term = parse_term(ctx, cur, allow_x)?;
        acc = if negative { acc.sub(&term) } else { acc.add(&term) };
        cur.skip_ws();
        if cur.done() || cur.peek() == Some(b')') {
            break;
        }
    }
    Ok(acc)
}

fn parse_term(ctx: &FieldCtx, cur: &mut Cursor, allow_x: bool) -> Result<Poly> {
    let mut coeff = ctx.one();
    let mut xexp: Option<u64> = None;
    loop {
        cur.skip_ws();
        match cur.peek() {
            Some(b'x') if allow_x => {
                cur.bump();
                let e = if cur.eat(b'^') { cur.uint()? } else { 1 };
                if xexp.is_some() {
                    return Err(Error::input("repeated x factor in one term"));
                }
                xexp = Some(e);
            }
            Some(b't') => {
                cur.bump();
                let e = if cur.eat(b'^') { cur.uint()? } else { 1 };
                let t = ctx.generator().map_err(|_| {
                    Error::input("the symbol t only exists in extension fields")
                })?;
                coeff = ctx.mul(&coeff, &ctx.pow(&t, e));
            }
            Some(b'(') => {
                cur.bump();
                let inner = parse_sum(ctx, cur, false)?;
                if !cur.eat(b')') {
                    return Err(Error::input("unbalanced parenthesis"));
                }
                let c = match inner.degree() {
                    None => ctx.zero(),
                    Some(0) => inner.coeff(0),
                    _ => return Err(Error::input("coefficient is not constant")),
                };
                coeff = ctx.mul(&coeff, &c);
            }
            Some(c) if c.is_ascii_digit() => {
                let num = cur.bigint()?;
                let value = if cur.eat(b'/') {
                    let den = cur.bigint()?;
                    ctx.from_rational(num, den)?
                } else {
                    bigint_to_fe(ctx, &num)
                };
                coeff = ctx.mul(&coeff, &value);
            }
            _ => return Err(Error::input("expected a term")),
        }
        cur.skip_ws();
        if !cur.eat(b'*') {
            break;
        }
    }
    let e = xexp.unwrap_or(0) as usize;
    let mut coeffs = vec![ctx.zero(); e + 1];
    coeffs[e] = coeff;
    Ok(Poly::from_coeffs(ctx, coeffs))
}

fn bigint_to_fe(ctx: &FieldCtx, n: &BigInt) -> Fe {
    match ctx.kind() {
        FieldKind::Rational => ctx
            .from_rational(n.clone(), BigInt::one())
            .expect("unit denominator"),
        _ => {
            let p = BigInt::from(ctx.characteristic());
            let m = ((n % &p) + &p) % &p;
            let (_, digits) = m.to_u64_digits();
            ctx.from_u64(digits.first().copied().unwrap_or(0))
        }
    }
}

/// Parse a `;`-separated list of polynomials.
pub fn parse_poly_list(ctx: &FieldCtx, s: &str) -> Result<Vec<Poly>> {
    s.split(';')
        .filter(|part| !part.trim().is_empty())
        .map(|part| parse_poly(ctx, part))
        .collect()
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fe::Prime(a) => write!(f, "{a}"),
            Fe::Ext(v) => write!(f, "{}", format_tpoly(v)),
            Fe::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

fn format_tpoly(v: &[u64]) -> String {
    let terms: Vec<String> = v
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(e, &c)| match (e, c) {
            (0, c) => format!("{c}"),
            (1, 1) => "t".to_string(),
            (1, c) => format!("{c}*t"),
            (e, 1) => format!("t^{e}"),
            (e, c) => format!("{c}*t^{e}"),
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(out, "0");
        }
        let ctx = self.ctx();
        let mut parts: Vec<(bool, String)> = Vec::new(); // (negative, body)
        for e in (0..self.coeffs().len()).rev() {
            let c = self.coeff(e);
            if ctx.is_zero(&c) {
                continue;
            }
            let (neg, mag) = match &c {
                Fe::Rat(r) if r.is_negative() => {
                    let abs = Fe::Rat(Box::new(-&**r));
                    (true, abs.to_string())
                }
                // coefficients outside the prime subfield go in parentheses
                Fe::Ext(v) if v.iter().skip(1).any(|&d| d != 0) => (false, format!("({c})")),
                other => (false, other.to_string()),
            };
            let xpart = match e {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{e}"),
            };
            let body = if xpart.is_empty() {
                mag
            } else if mag == "1" {
                xpart
            } else {
                format!("{mag}*{xpart}")
            };
            parts.push((neg, body));
        }
        for (i, (neg, body)) in parts.iter().enumerate() {
            if i == 0 {
                if *neg {
                    write!(out, "-")?;
                }
            } else {
                write!(out, "{}", if *neg { "-" } else { "+" })?;
            }
            write!(out, "{body}")?;
        }
        Ok(())
    }
}

impl fmt::Display for crate::poly::IrrPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly())
    }
}
