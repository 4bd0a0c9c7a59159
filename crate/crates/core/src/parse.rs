//! Text form of group specs.
//!
//! ```text
//! spec := term ("x" term)*
//! term := "Z" n | "D" n | "Q8" | "M8" | "M" p "^3" | "A" n | "S" n
//!       | "SD(" q "," p "," alpha "," t ")" | "SDP2Q(" p "," q ")"
//!       | "G5(" p "," q "," t ")" | "G6(" p "," q ")" | "Heis(" p ")"
//! ```
//!
//! `D n` takes the order of the dihedral group, so `D8` has 8 elements.

use thiserror::Error;

use crate::group::{GroupError, GroupSpec};

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("invalid group: {0}")]
    Semantic(#[from] GroupError),
}

/// Parses and validates a spec.
pub fn parse_spec(text: &str) -> Result<GroupSpec, SpecError> {
    let spec = parse_unchecked(text)?;
    spec.validate()?;
    Ok(spec)
}

/// Parses without checking parameter constraints.
pub fn parse_unchecked(text: &str) -> Result<GroupSpec, SpecError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    p.skip_ws();
    let mut terms = vec![p.term()?];
    loop {
        p.skip_ws();
        if p.eat("x") {
            p.skip_ws();
            terms.push(p.term()?);
        } else {
            break;
        }
    }
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(if terms.len() == 1 {
        terms.pop().unwrap()
    } else {
        GroupSpec::DirectProduct(terms)
    })
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> SpecError {
        SpecError::Parse {
            position: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek_is(&self, s: &str) -> bool {
        self.src[self.pos..].starts_with(s.as_bytes())
    }

    fn eat(&mut self, s: &str) -> bool {
        if self.peek_is(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<(), SpecError> {
        self.skip_ws();
        if self.eat(s) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{s}`")))
        }
    }

    fn int(&mut self) -> Result<u64, SpecError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        digits.parse().map_err(|_| SpecError::Parse {
            position: start,
            message: format!("integer `{digits}` out of range"),
        })
    }

    fn small(&mut self) -> Result<u32, SpecError> {
        let start = self.pos;
        let v = self.int()?;
        u32::try_from(v).map_err(|_| SpecError::Parse {
            position: start,
            message: format!("parameter {v} out of range"),
        })
    }

    fn args<const N: usize>(&mut self) -> Result<[u64; N], SpecError> {
        let mut out = [0; N];
        for (i, slot) in out.iter_mut().enumerate() {
            if i > 0 {
                self.expect(",")?;
            }
            *slot = self.int()?;
        }
        self.expect(")")?;
        Ok(out)
    }

    fn narrow(&self, v: u64) -> Result<u32, SpecError> {
        u32::try_from(v).map_err(|_| self.error(format!("parameter {v} out of range")))
    }

    fn term(&mut self) -> Result<GroupSpec, SpecError> {
        if self.eat("SDP2Q(") {
            let [p, q] = self.args()?;
            return Ok(GroupSpec::SemidirectP2Q { p, q });
        }
        if self.eat("SD(") {
            let [q, p, alpha, t] = self.args()?;
            let (alpha, t) = (self.narrow(alpha)?, self.narrow(t)?);
            return Ok(GroupSpec::SemidirectQP { q, p, alpha, t });
        }
        if self.eat("G5(") {
            let [p, q, t] = self.args()?;
            let t = self.narrow(t)?;
            return Ok(GroupSpec::G5 { p, q, t });
        }
        if self.eat("G6(") {
            let [p, q] = self.args()?;
            return Ok(GroupSpec::G6 { p, q });
        }
        if self.eat("Heis(") {
            let [p] = self.args()?;
            return Ok(GroupSpec::Heisenberg(p));
        }
        if self.eat("Q8") {
            return Ok(GroupSpec::Quaternion8);
        }
        if self.eat("M") {
            let n = self.int()?;
            if self.eat("^3") {
                return Ok(GroupSpec::ModularP3(n));
            }
            if n == 8 {
                return Ok(GroupSpec::Modular8);
            }
            return Err(self.error("expected `^3` after `M<p>` (or use M8)"));
        }
        if self.eat("Z") {
            return Ok(GroupSpec::Cyclic(self.int()?));
        }
        if self.eat("D") {
            return Ok(GroupSpec::Dihedral(self.int()?));
        }
        if self.eat("A") {
            return Ok(GroupSpec::Alternating(self.small()?));
        }
        if self.eat("S") {
            return Ok(GroupSpec::Symmetric(self.small()?));
        }
        Err(self.error("expected a group term"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_and_families() {
        assert_eq!(
            parse_spec("Z4xZ2").unwrap(),
            GroupSpec::DirectProduct(vec![GroupSpec::Cyclic(4), GroupSpec::Cyclic(2)])
        );
        assert_eq!(
            parse_spec("SD(7,3,1,1)").unwrap(),
            GroupSpec::SemidirectQP { q: 7, p: 3, alpha: 1, t: 1 }
        );
        assert_eq!(parse_spec("M8").unwrap(), GroupSpec::Modular8);
        assert_eq!(parse_spec("M3^3").unwrap(), GroupSpec::ModularP3(3));
        assert_eq!(parse_spec("SDP2Q(3,2)").unwrap(), GroupSpec::SemidirectP2Q { p: 3, q: 2 });
        assert_eq!(parse_spec(" S3 x Z2 ").unwrap().to_string(), "S3xZ2");
    }

    #[test]
    fn semantic_errors_name_the_condition() {
        let err = parse_spec("SD(7,3,1,2)").unwrap_err();
        assert!(matches!(err, SpecError::Semantic(_)));
        let err = parse_spec("SD(7,3,2,2)").unwrap_err();
        assert!(err.to_string().contains("p^t | q-1"), "{err}");
    }

    #[test]
    fn parse_errors_carry_positions() {
        match parse_spec("Z4xQ9") {
            Err(SpecError::Parse { position, .. }) => assert_eq!(position, 3),
            other => panic!("{other:?}"),
        }
        match parse_spec("SD(7,3") {
            Err(SpecError::Parse { position, .. }) => assert_eq!(position, 6),
            other => panic!("{other:?}"),
        }
        assert!(parse_spec("").is_err());
        assert!(parse_spec("Z4x").is_err());
    }
}
