//! Polynomial text input.
//!
//! Two grammars are accepted, distinguished by the first non-space byte:
//!
//! - a bracketed ascending coefficient list `[c0,c1,...,cn]`;
//! - a sparse expression in `x`, e.g. `x^6-7x^4+14x^2-7`, with terms
//!   `k`, `k*x^e`, `kx^e`, `x^e`, `x`; repeated exponents are summed.
//!
//! Both are LL(1); errors carry the byte offset where scanning stopped.

use std::error::Error;
use std::fmt;

use monogen::zpoly::IntPoly;
use monogen::BigInt;

/// A parsed polynomial together with the text it came from.
#[derive(Debug, Clone)]
pub struct PolyExpr {
    pub source: String,
    pub poly: IntPoly,
}

/// Where the scan stopped and which token class was required there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub expected: &'static str,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at byte {}: expected {}",
            self.position, self.expected
        )
    }
}

impl Error for ParseError {}

/// Guards against accidental huge allocations from typos like `x^2222222`.
const MAX_EXPONENT: usize = 10_000;

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str) -> Self {
        Scanner {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_x(&mut self) -> bool {
        self.eat(b'x') || self.eat(b'X')
    }

    fn err(&self, expected: &'static str) -> ParseError {
        ParseError {
            position: self.pos,
            expected,
        }
    }

    fn digits(&mut self) -> Option<&'a [u8]> {
        let start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_digit())
        {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.bytes[start..self.pos])
    }
}

/// Parse either grammar; see the module doc.
pub fn parse_poly(text: &str) -> Result<PolyExpr, ParseError> {
    let mut s = Scanner::new(text);
    s.skip_ws();
    let poly = if s.peek() == Some(b'[') {
        parse_bracket(&mut s)?
    } else {
        parse_expr(&mut s)?
    };
    s.skip_ws();
    if s.pos != s.bytes.len() {
        return Err(s.err("end of input"));
    }
    Ok(PolyExpr {
        source: text.to_string(),
        poly,
    })
}

fn parse_int(s: &mut Scanner) -> Result<BigInt, ParseError> {
    s.skip_ws();
    let neg = if s.eat(b'-') {
        true
    } else {
        s.eat(b'+');
        false
    };
    s.skip_ws();
    let Some(d) = s.digits() else {
        return Err(s.err("digit"));
    };
    let v = BigInt::parse_bytes(d, 10).expect("ascii digits");
    Ok(if neg { -v } else { v })
}

fn parse_bracket(s: &mut Scanner) -> Result<IntPoly, ParseError> {
    s.eat(b'[');
    let mut coeffs = vec![parse_int(s)?];
    loop {
        s.skip_ws();
        if s.eat(b',') {
            coeffs.push(parse_int(s)?);
        } else if s.eat(b']') {
            return Ok(IntPoly::new(coeffs));
        } else {
            return Err(s.err("',' or ']'"));
        }
    }
}

fn parse_expr(s: &mut Scanner) -> Result<IntPoly, ParseError> {
    let mut acc: Vec<BigInt> = vec![];
    s.skip_ws();
    let mut negate = if s.eat(b'-') {
        true
    } else {
        s.eat(b'+');
        false
    };
    loop {
        let (coeff, exp) = parse_term(s)?;
        while acc.len() <= exp {
            acc.push(BigInt::from(0));
        }
        if negate {
            acc[exp] -= coeff;
        } else {
            acc[exp] += coeff;
        }
        s.skip_ws();
        if s.eat(b'+') {
            negate = false;
        } else if s.eat(b'-') {
            negate = true;
        } else {
            return Ok(IntPoly::new(acc));
        }
    }
}

fn parse_term(s: &mut Scanner) -> Result<(BigInt, usize), ParseError> {
    s.skip_ws();
    if s.eat_x() {
        return Ok((BigInt::from(1), parse_exponent(s)?));
    }
    match s.peek() {
        Some(b) if b.is_ascii_digit() => {
            let d = s.digits().expect("peeked digit");
            let k = BigInt::parse_bytes(d, 10).expect("ascii digits");
            s.skip_ws();
            if s.eat(b'*') {
                s.skip_ws();
                if !s.eat_x() {
                    return Err(s.err("'x'"));
                }
                Ok((k, parse_exponent(s)?))
            } else if s.eat_x() {
                Ok((k, parse_exponent(s)?))
            } else {
                Ok((k, 0))
            }
        }
        _ => Err(s.err("term")),
    }
}

fn parse_exponent(s: &mut Scanner) -> Result<usize, ParseError> {
    s.skip_ws();
    if !s.eat(b'^') {
        return Ok(1);
    }
    s.skip_ws();
    let at = s.pos;
    let Some(d) = s.digits() else {
        return Err(s.err("digit"));
    };
    match std::str::from_utf8(d).expect("ascii").parse::<usize>() {
        Ok(e) if e <= MAX_EXPONENT => Ok(e),
        _ => Err(ParseError {
            position: at,
            expected: "exponent at most 10000",
        }),
    }
}

/// Sparse rendering, highest degree first; `parse_poly` inverts it exactly.
pub fn render_poly(p: &IntPoly) -> String {
    use num_traits::One;

    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (e, k) in p.coeffs().iter().enumerate().rev() {
        if k.sign() == monogen::Sign::NoSign {
            continue;
        }
        let neg = k.sign() == monogen::Sign::Minus;
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        let mag = k.magnitude();
        if e == 0 || !mag.is_one() {
            out.push_str(&mag.to_string());
        }
        if e >= 1 {
            out.push('x');
            if e >= 2 {
                out.push_str(&format!("^{e}"));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(text: &str) -> Vec<i64> {
        parse_poly(text)
            .unwrap()
            .poly
            .coeffs()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn both_grammars_agree_on_the_examples() {
        assert_eq!(coeffs("x^6+5x^4+6x^2+1"), [1, 0, 6, 0, 5, 0, 1]);
        assert_eq!(coeffs("[1,0,6,0,5,0,1]"), [1, 0, 6, 0, 5, 0, 1]);
        assert_eq!(coeffs("x^2+x^2"), [0, 0, 2]);
        assert_eq!(coeffs("x^6-7x^4+14x^2-7"), [-7, 0, 14, 0, -7, 0, 1]);
    }

    #[test]
    fn term_forms_and_whitespace() {
        assert_eq!(coeffs("3*x^2 - 2*x + 5"), [5, -2, 3]);
        assert_eq!(coeffs(" - x^3 + 2 "), [2, 0, 0, -1]);
        assert_eq!(coeffs("+7"), [7]);
        assert_eq!(coeffs("x"), [0, 1]);
        assert_eq!(coeffs("2x"), [0, 2]);
        assert_eq!(coeffs("x^0"), [1]);
        assert_eq!(coeffs("[ -1 , +2 , 0 , 1 ]"), [-1, 2, 0, 1]);
        assert_eq!(coeffs("x^3 - x^3"), [] as [i64; 0]);
    }

    #[test]
    fn errors_carry_byte_offsets() {
        let err = |t: &str| parse_poly(t).unwrap_err();
        assert_eq!(err("").expected, "term");
        assert_eq!(err("x^^2"), ParseError { position: 2, expected: "digit" });
        assert_eq!(err("[1,2"), ParseError { position: 4, expected: "',' or ']'" });
        assert_eq!(err("[]"), ParseError { position: 1, expected: "digit" });
        assert_eq!(err("2*"), ParseError { position: 2, expected: "'x'" });
        assert_eq!(err("x^2!"), ParseError { position: 3, expected: "end of input" });
        assert_eq!(err("x5"), ParseError { position: 1, expected: "end of input" });
        assert_eq!(err("x^99999"), ParseError { position: 2, expected: "exponent at most 10000" });
    }

    #[test]
    fn rendering_round_trips() {
        for text in [
            "x^6-7x^4+14x^2-7",
            "x^2+x-1",
            "x^22-11x^12+3",
            "-x^3+2x-5",
            "x",
            "-1",
            "0",
            "17",
        ] {
            let p = parse_poly(text).unwrap().poly;
            let rendered = render_poly(&p);
            assert_eq!(parse_poly(&rendered).unwrap().poly, p, "{text} -> {rendered}");
        }
        let p = parse_poly("[-7,0,14,0,-7,0,1]").unwrap().poly;
        assert_eq!(render_poly(&p), "x^6-7x^4+14x^2-7");
        assert_eq!(render_poly(&IntPoly::zero()), "0");
    }
}
