//! Parser for the family-spec mini-language.

use std::str::FromStr;

use super::{ActionSpec, FamilySpec};
use crate::error::ParseError;

impl FromStr for FamilySpec {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parser = Parser {
            src: s.as_bytes(),
            pos: 0,
        };
        let spec = parser.spec()?;
        parser.skip_ws();
        if parser.pos != parser.src.len() {
            return Err(parser.error("trailing input"));
        }
        Ok(spec)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> ParseError {
        ParseError::new(1, self.pos + 1, msg)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(token.as_bytes()) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), ParseError> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{token}`")))
        }
    }

    fn number(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| ParseError::new(1, start + 1, "number too large"))
    }

    /// `n` or `b^e`.
    fn power(&mut self) -> Result<(u64, Option<u32>), ParseError> {
        let base = self.number()?;
        if self.eat("^") {
            let exp = self.number()?;
            let exp = u32::try_from(exp).map_err(|_| self.error("exponent too large"))?;
            Ok((base, Some(exp)))
        } else {
            Ok((base, None))
        }
    }

    fn order_value(&mut self) -> Result<u64, ParseError> {
        let start = self.pos;
        match self.power()? {
            (n, None) => Ok(n),
            (b, Some(e)) => b
                .checked_pow(e)
                .ok_or_else(|| ParseError::new(1, start + 1, "order too large")),
        }
    }

    fn spec(&mut self) -> Result<FamilySpec, ParseError> {
        self.skip_ws();
        // Longer keywords first so `SD:` is not read as `S4` or `sd(`.
        if self.eat("SL23") {
            return Ok(FamilySpec::SL23);
        }
        if self.eat("SD:") {
            return Ok(FamilySpec::SemiDihedral(self.order_value()?));
        }
        if self.eat("S4") {
            return Ok(FamilySpec::S4);
        }
        if self.eat("A4") {
            return Ok(FamilySpec::A4);
        }
        if self.eat("A5") {
            return Ok(FamilySpec::A5);
        }
        if self.eat("C:") {
            return Ok(FamilySpec::Cyclic(self.order_value()?));
        }
        if self.eat("D:") {
            return Ok(FamilySpec::Dihedral(self.order_value()?));
        }
        if self.eat("Q:") {
            return Ok(FamilySpec::GeneralizedQuaternion(self.order_value()?));
        }
        if self.eat("EA:") {
            let (p, r) = self.power()?;
            return Ok(FamilySpec::ElementaryAbelian {
                p,
                rank: r.unwrap_or(1),
            });
        }
        if self.eat("prod(") {
            let a = self.spec()?;
            self.expect(",")?;
            let b = self.spec()?;
            self.expect(")")?;
            return Ok(FamilySpec::prod(a, b));
        }
        if self.eat("sd(") {
            let base = self.spec()?;
            self.expect(",")?;
            let m = self.number()?;
            self.expect(",")?;
            let action = if self.eat("inv") {
                ActionSpec::Inversion
            } else {
                self.expect("[")?;
                let mut v = Vec::new();
                if !self.eat("]") {
                    loop {
                        v.push(self.number()? as usize);
                        if self.eat("]") {
                            break;
                        }
                        self.expect(",")?;
                    }
                }
                ActionSpec::Images(v)
            };
            self.expect(")")?;
            return Ok(FamilySpec::semidirect(base, m, action));
        }
        if self.eat("ff(") {
            let p = self.number()?;
            self.expect(",")?;
            let t = self.number()?;
            let type_index = u8::try_from(t).map_err(|_| self.error("type index too large"))?;
            let param = if self.eat(",") {
                Some(self.number()?)
            } else {
                None
            };
            self.expect(")")?;
            return Ok(FamilySpec::ForbiddenFixture {
                p,
                type_index,
                param,
            });
        }
        Err(self.error("unknown family"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_displays() {
        for text in [
            "C:12",
            "D:18",
            "SD:16",
            "Q:8",
            "EA:3^2",
            "A4",
            "S4",
            "A5",
            "SL23",
            "prod(D:6,C:5)",
            "sd(EA:3^2,2,inv)",
            "sd(C:7,3,[2])",
            "ff(2,6,5)",
            "ff(3,1)",
            "prod(prod(C:2,C:2),sd(C:5,4,inv))",
        ] {
            let spec: FamilySpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
        }
    }

    #[test]
    fn power_forms() {
        assert_eq!(
            "SD:2^5".parse::<FamilySpec>().unwrap(),
            FamilySpec::SemiDihedral(32)
        );
        assert_eq!(
            "Q:2^3".parse::<FamilySpec>().unwrap(),
            FamilySpec::GeneralizedQuaternion(8)
        );
        assert_eq!(
            " prod( C:2 , C:3 ) ".parse::<FamilySpec>().unwrap(),
            FamilySpec::prod(FamilySpec::Cyclic(2), FamilySpec::Cyclic(3))
        );
    }

    #[test]
    fn errors_carry_columns() {
        let err = "prod(C:2;C:3)".parse::<FamilySpec>().unwrap_err();
        assert_eq!(err.column, 9);
        let err = "X:3".parse::<FamilySpec>().unwrap_err();
        assert_eq!(err.column, 1);
        let err = "C:3)".parse::<FamilySpec>().unwrap_err();
        assert_eq!(err.column, 4);
    }
}
