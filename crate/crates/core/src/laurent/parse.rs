//! Text form of Laurent polynomials.
//!
//! ```text
//! poly  := sign? term (('+'|'-') term)* | '0'
//! term  := coeff | coeff? 't' ('^' int)?
//! coeff := digits
//! int   := '-'? digits
//! ```
//!
//! Whitespace is ignored. The printer emits terms in descending degree, drops
//! unit coefficients and `^1`, and writes negative exponents as `t^-k`.

use num_bigint::BigInt;

use super::{LaurentPoly, Prime};
use crate::error::{Error, Result};

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor {
            chars: src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(),
            pos: 0,
            src,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.src.len(), |&(i, _)| i)
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Syntax {
            pos: self.offset(),
            msg: msg.into(),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().map(|&(_, c)| c).collect())
    }
}

/// Parse polynomial text, reducing coefficients when `modulus` is given.
pub fn parse_poly(text: &str, modulus: Option<Prime>) -> Result<LaurentPoly> {
    let mut cur = Cursor::new(text);
    if cur.peek().is_none() {
        return Err(cur.err("empty input"));
    }
    let mut terms: Vec<(i64, BigInt)> = Vec::new();
    let mut negative = if cur.eat('-') {
        true
    } else {
        cur.eat('+');
        false
    };
    loop {
        let coeff = cur.digits();
        let degree = if cur.eat('t') {
            if cur.eat('^') {
                let neg = cur.eat('-');
                let d = cur.digits().ok_or_else(|| cur.err("expected exponent"))?;
                let d: i64 = d.parse().map_err(|_| cur.err("exponent out of range"))?;
                if neg {
                    -d
                } else {
                    d
                }
            } else {
                1
            }
        } else if coeff.is_some() {
            0
        } else {
            return Err(cur.err(match cur.peek() {
                Some(c) => format!("unexpected {c:?}"),
                None => "expected a term".to_string(),
            }));
        };
        let mut c: BigInt = match coeff {
            Some(s) => s.parse().expect("digits"),
            None => BigInt::from(1),
        };
        if negative {
            c = -c;
        }
        terms.push((degree, c));
        match cur.peek() {
            None => break,
            Some('+') => negative = false,
            Some('-') => negative = true,
            Some(c) => return Err(cur.err(format!("unexpected {c:?}"))),
        }
        cur.pos += 1;
    }
    Ok(LaurentPoly::from_terms(terms, modulus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn trefoil_text() {
        let v = parse_poly("-t^4+t^3+t", None).unwrap();
        assert_eq!(v.min_degree(), Some(1));
        let want: Vec<BigInt> = [1, 0, 1, -1].iter().map(|&c| BigInt::from(c)).collect();
        assert_eq!(v.coeffs(), want.as_slice());
    }

    #[test]
    fn zero_text() {
        let z = parse_poly("0", None).unwrap();
        assert!(z.is_zero());
        assert!(z.coeffs().is_empty());
    }

    #[test]
    fn negative_exponent_and_spaces() {
        let v = parse_poly("t^-3 + 2", None).unwrap();
        assert_eq!(v.min_degree(), Some(-3));
        let want: Vec<BigInt> = [1, 0, 0, 2].iter().map(|&c| BigInt::from(c)).collect();
        assert_eq!(v.coeffs(), want.as_slice());
    }

    #[test]
    fn printer_round_trip() {
        for s in ["-t^4+t^3+t", "t^2-t+1-t^-1+t^-2", "12t^-7", "-1", "0", "t", "-t"] {
            assert_eq!(parse_poly(s, None).unwrap().to_string(), s);
        }
    }

    #[test]
    fn modular_parse() {
        let p = Prime::new(3).unwrap();
        assert_eq!(parse_poly("-t^2+4t-3", Some(p)).unwrap().to_string(), "2t^2+t");
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse_poly("t^2 + x", None),
            Err(Error::Syntax {
                pos: 6,
                msg: "unexpected 'x'".into()
            })
        );
        assert!(matches!(parse_poly("t^", None), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse_poly("1.5t", None), Err(Error::Syntax { pos: 1, .. })));
        assert!(matches!(parse_poly("", None), Err(Error::Syntax { .. })));
        assert!(matches!(parse_poly("t+", None), Err(Error::Syntax { .. })));
    }
}
