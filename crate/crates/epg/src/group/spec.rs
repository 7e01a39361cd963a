//! Textual group descriptions: products of cyclic, generalized-quaternion
//! and dihedral atoms, e.g. `Z3xZ9xQ16`.
//!
//! Grammar: `spec := atom ("x" atom)*`, `atom := "Z" int | "Q" int | "D" int`,
//! `int := [1-9][0-9]*`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::num::is_power_of;

/// One direct factor of a group description.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Atom {
    /// Z_n, n >= 1.
    Cyclic(u64),
    /// Q_{2^k}, order a power of two and >= 8.
    GeneralizedQuaternion(u64),
    /// Dihedral group of the given (even, >= 6) order.
    Dihedral(u64),
}

impl Atom {
    pub fn order(&self) -> u64 {
        match *self {
            Atom::Cyclic(n) => n,
            Atom::GeneralizedQuaternion(n) => n,
            Atom::Dihedral(n) => n,
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Atom::Cyclic(n) => write!(f, "Z{n}"),
            Atom::GeneralizedQuaternion(n) => write!(f, "Q{n}"),
            Atom::Dihedral(n) => write!(f, "D{n}"),
        }
    }
}

/// A parsed group description: an ordered product of atoms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    pub factors: Vec<Atom>,
}

impl GroupSpec {
    /// Product of the factor orders, saturating far above any build cap.
    pub fn order(&self) -> u128 {
        self.factors
            .iter()
            .fold(1u128, |acc, a| acc.saturating_mul(a.order() as u128))
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// Parse a spec string against the grammar. Positions in errors are 0-based
/// byte offsets into the input.
pub fn parse_group_spec(text: &str) -> Result<GroupSpec> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let mut factors = Vec::new();
    loop {
        let kind = match bytes.get(pos) {
            Some(b'Z') => b'Z',
            Some(b'Q') => b'Q',
            Some(b'D') => b'D',
            Some(_) => {
                return Err(Error::SpecSyntax {
                    pos,
                    msg: "expected atom letter Z, Q or D".into(),
                })
            }
            None => {
                return Err(Error::SpecSyntax {
                    pos,
                    msg: "expected an atom, found end of input".into(),
                })
            }
        };
        pos += 1;
        let start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        if start == pos {
            return Err(Error::SpecSyntax {
                pos,
                msg: "expected an integer".into(),
            });
        }
        if bytes[start] == b'0' {
            return Err(Error::SpecSyntax {
                pos: start,
                msg: "integer may not start with 0".into(),
            });
        }
        let n: u64 = text[start..pos].parse().map_err(|_| Error::SpecSyntax {
            pos: start,
            msg: "integer too large".into(),
        })?;
        factors.push(match kind {
            b'Z' => Atom::Cyclic(n),
            b'Q' => {
                if !is_power_of(n, 2) || n < 8 {
                    return Err(Error::InvalidQuaternionOrder(n));
                }
                Atom::GeneralizedQuaternion(n)
            }
            _ => {
                if n % 2 != 0 || n < 6 {
                    return Err(Error::InvalidDihedralOrder(n));
                }
                Atom::Dihedral(n)
            }
        });
        match bytes.get(pos) {
            None => return Ok(GroupSpec { factors }),
            Some(b'x') => pos += 1,
            Some(_) => {
                return Err(Error::SpecSyntax {
                    pos,
                    msg: "expected 'x' between atoms".into(),
                })
            }
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<GroupSpec> {
        parse_group_spec(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_factor() {
        let spec = parse_group_spec("Z6").unwrap();
        assert_eq!(spec.factors, vec![Atom::Cyclic(6)]);
    }

    #[test]
    fn product_preserves_order() {
        let spec = parse_group_spec("Z3xZ9xQ16").unwrap();
        assert_eq!(
            spec.factors,
            vec![
                Atom::Cyclic(3),
                Atom::Cyclic(9),
                Atom::GeneralizedQuaternion(16)
            ]
        );
        assert_eq!(spec.to_string(), "Z3xZ9xQ16");
    }

    #[test]
    fn quaternion_order_must_be_a_two_power() {
        assert!(matches!(
            parse_group_spec("Q12"),
            Err(Error::InvalidQuaternionOrder(12))
        ));
        assert!(matches!(
            parse_group_spec("Q4"),
            Err(Error::InvalidQuaternionOrder(4))
        ));
        assert!(parse_group_spec("Q8").is_ok());
        assert!(parse_group_spec("Q32").is_ok());
    }

    #[test]
    fn dihedral_order_must_be_even_and_at_least_six() {
        assert!(matches!(
            parse_group_spec("D7"),
            Err(Error::InvalidDihedralOrder(7))
        ));
        assert!(matches!(
            parse_group_spec("D4"),
            Err(Error::InvalidDihedralOrder(4))
        ));
        assert!(parse_group_spec("D6").is_ok());
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse_group_spec("Z3xx") {
            Err(Error::SpecSyntax { pos, .. }) => assert_eq!(pos, 3),
            other => panic!("expected syntax error, got {other:?}"),
        }
        match parse_group_spec("Z03") {
            Err(Error::SpecSyntax { pos, .. }) => assert_eq!(pos, 1),
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(parse_group_spec("").is_err());
        assert!(parse_group_spec("Z3yZ4").is_err());
        assert!(parse_group_spec("A5").is_err());
    }

    #[test]
    fn z1_is_allowed() {
        let spec = parse_group_spec("Z1").unwrap();
        assert_eq!(spec.order(), 1);
    }
}
