//! Parser for the one-line multiset text form:
//! `p=<int> m=<int> : ( <elem> ('*' <int>)? )*` where an element is a
//! parenthesized tuple of decimal residues, e.g. `p=5 m=2 : (1,0)*4 (0,1)*2`.
//! Residues are reduced mod p; `*1` may be omitted.

use crate::error::{Error, Result};
use crate::group::GroupParams;
use crate::multiset::Multiset;

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor {
            bytes: s.as_bytes(),
            pos: 0,
        }
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::SyntaxError {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> Result<()> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected '{}'", b as char)))
        }
    }

    fn eat_tag(&mut self, tag: &str) -> Result<()> {
        if self.bytes[self.pos..].starts_with(tag.as_bytes()) {
            self.pos += tag.len();
            Ok(())
        } else {
            Err(self.err(format!("expected '{tag}'")))
        }
    }

    fn parse_int(&mut self) -> Result<i64> {
        let start = self.pos;
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let digits_start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits_start {
            self.pos = start;
            return Err(self.err("expected an integer"));
        }
        let s = std::str::from_utf8(&self.bytes[digits_start..self.pos]).unwrap();
        let v: i64 = s.parse().map_err(|_| {
            self.pos = start;
            self.err("integer out of range")
        })?;
        Ok(if neg { -v } else { v })
    }
}

/// Parses the canonical multiset text form.
pub fn parse_multiset(text: &str) -> Result<Multiset> {
    let mut c = Cursor::new(text);
    c.skip_ws();
    c.eat_tag("p=")?;
    let p = c.parse_int()?;
    if p < 2 {
        return Err(c.err("p must be at least 2"));
    }
    c.skip_ws();
    c.eat_tag("m=")?;
    let m = c.parse_int()?;
    if m < 1 {
        return Err(Error::RankZero);
    }
    c.skip_ws();
    c.eat(b':')?;

    let g = GroupParams::new(p as u64, m as u32)?;
    let mut out = Multiset::empty(g.clone());
    loop {
        c.skip_ws();
        match c.peek() {
            None => break,
            Some(b'(') => {
                c.eat(b'(')?;
                let mut coords = Vec::new();
                loop {
                    c.skip_ws();
                    coords.push(c.parse_int()?);
                    c.skip_ws();
                    match c.peek() {
                        Some(b',') => {
                            c.pos += 1;
                        }
                        Some(b')') => {
                            c.pos += 1;
                            break;
                        }
                        _ => return Err(c.err("expected ',' or ')'")),
                    }
                }
                let elem = g.element(&coords)?;
                let mult = if c.peek() == Some(b'*') {
                    c.pos += 1;
                    let k = c.parse_int()?;
                    if k < 1 {
                        return Err(c.err("multiplicity must be at least 1"));
                    }
                    k as u32
                } else {
                    1
                };
                out.insert(elem.index(), mult);
            }
            Some(other) => {
                return Err(c.err(format!("unexpected character '{}'", other as char)))
            }
        }
    }
    Ok(out)
}

/// Parses a bare element like `(1,0)` against a given group.
pub fn parse_element(g: &GroupParams, text: &str) -> Result<u32> {
    let mut c = Cursor::new(text);
    c.skip_ws();
    c.eat(b'(')?;
    let mut coords = Vec::new();
    loop {
        c.skip_ws();
        coords.push(c.parse_int()?);
        c.skip_ws();
        match c.peek() {
            Some(b',') => {
                c.pos += 1;
            }
            Some(b')') => {
                c.pos += 1;
                break;
            }
            _ => return Err(c.err("expected ',' or ')'")),
        }
    }
    c.skip_ws();
    if c.peek().is_some() {
        return Err(c.err("trailing input after element"));
    }
    Ok(g.element(&coords)?.index())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;

    #[test]
    fn parses_known_construction() {
        let a = parse_multiset("p=5 m=2 : (1,0)*4 (0,1)*2").unwrap();
        assert_eq!(a, constructions::extremal_2d(5, 1).unwrap());
    }

    #[test]
    fn reduces_residues() {
        let a = parse_multiset("p=5 m=2 : (6,0)").unwrap();
        assert_eq!(a.to_literal(), "p=5 m=2 : (1,0)");
        let b = parse_multiset("p=5 m=2 : (-1,0)").unwrap();
        assert_eq!(b.to_literal(), "p=5 m=2 : (4,0)");
    }

    #[test]
    fn arity_guard() {
        assert!(matches!(
            parse_multiset("p=5 m=2 : (1,0,0)"),
            Err(Error::DimensionMismatch { got: 3, expected: 2 })
        ));
    }

    #[test]
    fn composite_p_rejected() {
        assert!(matches!(
            parse_multiset("p=4 m=2 : (1,0)"),
            Err(Error::NonPrime(4))
        ));
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        let err = parse_multiset("p=5 m=2 : (1,0)*0").unwrap_err();
        match err {
            Error::SyntaxError { offset, .. } => assert_eq!(offset, 17),
            other => panic!("unexpected error {other:?}"),
        }
        let err = parse_multiset("p=5 q=2 : (1,0)").unwrap_err();
        assert!(matches!(err, Error::SyntaxError { offset: 4, .. }));
    }

    #[test]
    fn empty_multiset_round_trips() {
        let a = parse_multiset("p=7 m=2 :").unwrap();
        assert_eq!(a.total(), 0);
        assert_eq!(parse_multiset(&a.to_literal()).unwrap(), a);
    }

    #[test]
    fn duplicate_elements_accumulate() {
        let a = parse_multiset("p=5 m=2 : (1,0) (1,0)*2").unwrap();
        assert_eq!(a.multiplicity(1), 3);
    }
}
