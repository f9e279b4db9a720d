//! Text form of automorphisms.
//!
//! ```text
//! id(4)
//! sigma1(4)
//! sigma0(4, <dim-3 map>, <dim-3 map>)
//! phi_2[<inner map>]
//! compose(sigma1(4), sigma0(4, id(3), id(3)))
//! table:00 01 11 10
//! ```
//!
//! Table entries are the images of `0, 1, 2, ...` as MSB-first binary
//! strings. Parsing goes through the checked constructors, so only legal
//! `sigma0` pairings are accepted.

use std::fmt;
use std::str::FromStr;

use super::{Automorphism, Form, PhiIndex};
use crate::error::{Error, Result};
use crate::topology::fmt_bits;

impl fmt::Display for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.form() {
            Form::Identity => write!(f, "id({})", self.dim()),
            Form::FlipTop => write!(f, "sigma1({})", self.dim()),
            Form::HalfSplit { low, high } => write!(f, "sigma0({}, {low}, {high})", self.dim()),
            Form::PhiLift { index, inner } => write!(f, "phi_{}[{inner}]", index.index()),
            Form::Compose(parts) => {
                f.write_str("compose(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{p}")?;
                }
                f.write_str(")")
            }
            Form::Table(table) => {
                f.write_str("table:")?;
                for (i, &y) in table.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    f.write_str(&fmt_bits(y, self.dim()))?;
                }
                Ok(())
            }
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {} in '{}'", self.pos, self.src))
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{token}'")))
        }
    }

    fn number(&mut self) -> Result<u32> {
        self.skip_ws();
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.error("expected a number"));
        }
        let value = self.rest()[..digits]
            .parse()
            .map_err(|_| self.error("number out of range"))?;
        self.pos += digits;
        Ok(value)
    }

    fn expr(&mut self) -> Result<Automorphism> {
        if self.eat("id(") {
            let n = self.number()?;
            self.expect(")")?;
            Automorphism::identity(n)
        } else if self.eat("sigma1(") {
            let n = self.number()?;
            self.expect(")")?;
            Automorphism::sigma1(n)
        } else if self.eat("sigma0(") {
            let n = self.number()?;
            self.expect(",")?;
            let half0 = self.expr()?;
            self.expect(",")?;
            let half1 = self.expr()?;
            self.expect(")")?;
            Automorphism::sigma0(n, half0, half1)
        } else if self.eat("phi_") {
            let i = self.number()?;
            let index = PhiIndex::from_index(u8::try_from(i).unwrap_or(u8::MAX))?;
            self.expect("[")?;
            let inner = self.expr()?;
            self.expect("]")?;
            let n = inner.dim() + 3;
            Automorphism::lift_phi(index, inner, n)
        } else if self.eat("compose(") {
            let mut acc = self.expr()?;
            let mut count = 1;
            while self.eat(",") {
                acc = acc.compose(&self.expr()?)?;
                count += 1;
            }
            self.expect(")")?;
            if count < 2 {
                return Err(self.error("compose needs at least two arguments"));
            }
            Ok(acc)
        } else if self.eat("table:") {
            self.table()
        } else {
            Err(self.error("expected an automorphism"))
        }
    }

    fn table(&mut self) -> Result<Automorphism> {
        let mut labels: Vec<&str> = Vec::new();
        loop {
            let rest = self.rest();
            let spaces = rest.bytes().take_while(|&b| b == b' ').count();
            let word = rest[spaces..]
                .bytes()
                .take_while(|&b| b == b'0' || b == b'1')
                .count();
            if word == 0 {
                break;
            }
            labels.push(&rest[spaces..spaces + word]);
            self.pos += spaces + word;
        }
        if labels.is_empty() {
            return Automorphism::from_table(0, vec![0]);
        }
        let dim = labels[0].len();
        if labels.iter().any(|l| l.len() != dim) || dim > 30 {
            return Err(self.error("table labels must share one width of at most 30 bits"));
        }
        let table = labels
            .iter()
            .map(|l| u64::from_str_radix(l, 2).expect("binary digits"))
            .collect();
        Automorphism::from_table(dim as u32, table)
    }
}

impl FromStr for Automorphism {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser { src: s, pos: 0 };
        let a = p.expr()?;
        p.skip_ws();
        if p.pos != s.len() {
            return Err(p.error("trailing input"));
        }
        Ok(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automorphism::{base_automorphism_table, transport};
    use crate::topology::VertexLabel;

    fn round_trip(a: &Automorphism) {
        let text = a.to_string();
        let back: Automorphism = text.parse().unwrap_or_else(|e| panic!("{text}: {e}"));
        assert_eq!(&back, a, "{text}");
        assert_eq!(back.to_string(), text);
    }

    #[test]
    fn renders_primitives() {
        assert_eq!(Automorphism::sigma1(1).unwrap().to_string(), "sigma1(1)");
        assert_eq!(Automorphism::identity(4).unwrap().to_string(), "id(4)");
        let id0 = Automorphism::identity(0).unwrap();
        let p3 = Automorphism::lift_phi(PhiIndex::Three, id0.clone(), 3).unwrap();
        let p2 = Automorphism::lift_phi(PhiIndex::Two, id0, 3).unwrap();
        let s0 = Automorphism::sigma0(3, p3, p2).unwrap();
        assert_eq!(s0.to_string(), "sigma0(3, phi_3[id(0)], phi_2[id(0)])");
        let t = Automorphism::from_table(2, vec![0, 2, 1, 3]).unwrap();
        assert_eq!(t.to_string(), "table:00 10 01 11");
        assert_eq!(
            Automorphism::from_table(0, vec![0]).unwrap().to_string(),
            "table:"
        );
    }

    #[test]
    fn round_trips() {
        for n in 0..=3 {
            for a in base_automorphism_table(n).unwrap() {
                round_trip(a);
            }
        }
        let x: VertexLabel = "0000000".parse().unwrap();
        for y in ["1101011", "0110110", "1111111"] {
            round_trip(&transport(x, y.parse().unwrap()).unwrap());
        }
        let x: VertexLabel = "000000".parse().unwrap();
        round_trip(&transport(x, "110101".parse().unwrap()).unwrap());
        round_trip(
            &Automorphism::sigma1(5)
                .unwrap()
                .compose(&Automorphism::identity(5).unwrap())
                .unwrap(),
        );
    }

    #[test]
    fn tolerates_whitespace() {
        let a: Automorphism = " compose( sigma1(2) ,sigma0(2,table:1 0, table:1 0) ) "
            .parse()
            .unwrap();
        assert_eq!(a.to_table().unwrap(), vec![3, 2, 1, 0]);
    }

    #[test]
    fn rejects_malformed() {
        for bad in [
            "",
            "sigma2(3)",
            "sigma1(3",
            "sigma1(3) x",
            "compose(sigma1(2))",
            "compose(sigma1(2), sigma1(3))",
            "phi_4[id(0)]",
            "phi_1[id(1)]",
            "table:00 01 10",
            "table:00 01 1 11",
            "table:00 00 01 10",
            "sigma0(3, phi_2[id(0)], phi_2[id(0)])",
            "sigma0(2, id(1), sigma1(1))",
        ] {
            assert!(bad.parse::<Automorphism>().is_err(), "accepted '{bad}'");
        }
    }
}
