//! Text forms of ideals.
//!
//! An ideal is a comma-separated list of generators. A generator is a sum of
//! terms joined by `+`/`-`; a term is an optional rational coefficient `p/q`
//! followed by `*` and `x^a*y^b` factors (`^1` may be omitted). Examples:
//! `x^2,x*y,y^3`, `x*y, x^2 + y^3`, `2/3*x^2 - y^4`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::local::{LocalPolynomial, PolynomialIdeal};
use crate::staircase::{Exponent, MonomialIdeal};

const MAX_EXPONENT: u64 = 1 << 62;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedIdeal {
    Monomial(MonomialIdeal),
    Polynomial(PolynomialIdeal),
}

impl ParsedIdeal {
    pub fn into_polynomial(self) -> PolynomialIdeal {
        match self {
            ParsedIdeal::Monomial(m) => PolynomialIdeal::from(&m),
            ParsedIdeal::Polynomial(p) => p,
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser { src: text.as_bytes(), pos: 0 }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { position: self.pos, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
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

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected a number");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse as an integer"))
    }

    fn exponent(&mut self) -> Result<u64> {
        let at = self.pos;
        let n = self.integer()?;
        match u64::try_from(&n) {
            Ok(v) if v < MAX_EXPONENT => Ok(v),
            _ => Err(Error::Syntax { position: at, message: "exponent too large".into() }),
        }
    }

    fn coefficient(&mut self) -> Result<BigRational> {
        let numer = self.integer()?;
        if self.eat(b'/') {
            let at = self.pos;
            let denom = self.integer()?;
            if denom.is_zero() {
                return Err(Error::Syntax { position: at, message: "zero denominator".into() });
            }
            return Ok(BigRational::new(numer, denom));
        }
        Ok(BigRational::from_integer(numer))
    }

    fn factor(&mut self) -> Result<Exponent> {
        let var = match self.peek() {
            Some(c @ (b'x' | b'y')) => c,
            _ => return self.error("expected `x` or `y`"),
        };
        self.pos += 1;
        let e = if self.eat(b'^') { self.exponent()? } else { 1 };
        Ok(if var == b'x' { Exponent::new(e, 0) } else { Exponent::new(0, e) })
    }

    fn term(&mut self) -> Result<(Exponent, BigRational)> {
        let mut coeff = BigRational::one();
        let mut mono = Exponent::ONE;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            coeff = self.coefficient()?;
            if !self.eat(b'*') {
                return Ok((mono, coeff));
            }
        }
        mono = mono * self.factor()?;
        while self.eat(b'*') {
            mono = mono * self.factor()?;
        }
        if mono.i >= MAX_EXPONENT || mono.j >= MAX_EXPONENT {
            return self.error("exponent too large");
        }
        Ok((mono, coeff))
    }

    fn generator(&mut self) -> Result<LocalPolynomial> {
        let start = self.pos;
        let mut terms = Vec::new();
        let mut negative = self.eat(b'-');
        if !negative {
            self.eat(b'+');
        }
        loop {
            let (e, c) = self.term()?;
            terms.push((e, if negative { -c } else { c }));
            if self.eat(b'+') {
                negative = false;
            } else if self.eat(b'-') {
                negative = true;
            } else {
                break;
            }
        }
        let p = LocalPolynomial::from_terms(terms);
        if p.is_zero() {
            return Err(Error::Syntax { position: start, message: "zero generator".into() });
        }
        Ok(p)
    }

    fn generators(&mut self) -> Result<Vec<LocalPolynomial>> {
        let mut gens = vec![self.generator()?];
        while self.eat(b',') {
            gens.push(self.generator()?);
        }
        if self.peek().is_some() {
            return self.error("unexpected character");
        }
        Ok(gens)
    }
}

pub fn parse_polynomial(text: &str) -> Result<LocalPolynomial> {
    let mut p = Parser::new(text);
    let g = p.generator()?;
    if p.peek().is_some() {
        return p.error("unexpected character");
    }
    Ok(g)
}

/// Parses an ideal; an input whose generators are all single terms yields a
/// [`MonomialIdeal`].
pub fn parse_ideal(text: &str) -> Result<ParsedIdeal> {
    let gens = Parser::new(text).generators()?;
    let monomials: Option<Vec<Exponent>> = gens.iter().map(LocalPolynomial::as_monomial).collect();
    match monomials {
        Some(m) => Ok(ParsedIdeal::Monomial(MonomialIdeal::new(m)?)),
        None => Ok(ParsedIdeal::Polynomial(PolynomialIdeal::new(gens)?)),
    }
}

pub fn parse_monomial_ideal(text: &str) -> Result<MonomialIdeal> {
    match parse_ideal(text)? {
        ParsedIdeal::Monomial(m) => Ok(m),
        ParsedIdeal::Polynomial(_) => Err(Error::InvalidParameter(format!("`{text}` is not a monomial ideal"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_inputs() {
        let parsed = parse_ideal("x^2,x*y,y^3").unwrap();
        assert_eq!(parsed, ParsedIdeal::Monomial(MonomialIdeal::from_pairs(&[(2, 0), (1, 1), (0, 3)])));
        assert_eq!(parse_monomial_ideal(" y^3 , x^1*y^1, x^2 ").unwrap().to_string(), "x^2,x*y,y^3");
        assert!(parse_monomial_ideal("1").unwrap().is_unit());
        assert_eq!(parse_monomial_ideal("x*x*y").unwrap().to_string(), "x^2*y");
    }

    #[test]
    fn polynomial_inputs() {
        match parse_ideal("x*y,x^2+y^3").unwrap() {
            ParsedIdeal::Polynomial(p) => assert_eq!(p.generators().len(), 2),
            other => panic!("expected a polynomial ideal, got {other:?}"),
        }
        let p = parse_polynomial("2/3*x^2 - y^4").unwrap();
        assert_eq!(p.to_string(), "2/3*x^2 - y^4");
        assert_eq!(parse_polynomial("-x + 3").unwrap().to_string(), "3 - x");
    }

    #[test]
    fn syntax_errors() {
        assert!(matches!(parse_ideal("x^2,,"), Err(Error::Syntax { position: 4, .. })));
        assert!(matches!(parse_ideal("x^"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_ideal("z"), Err(Error::Syntax { position: 0, .. })));
        assert!(matches!(parse_ideal("x y"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_ideal("1/0*x"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_ideal("x - x"), Err(Error::Syntax { message, .. }) if message == "zero generator"));
        assert!(matches!(parse_ideal(""), Err(Error::Syntax { .. })));
    }
}
