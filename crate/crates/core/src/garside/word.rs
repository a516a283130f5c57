//! Words over the standard generators and their text format.
//!
//! Text format: whitespace-separated letters `s<k>` (type A) or `t<k>`
//! (type D), each optionally followed by `^<int>`, e.g. `t1 t2^-1 t3^2`.
//! Exponents expand to repeated letters. Emission writes one letter per
//! token, `t3` or `t3^-1`, separated by single spaces.

use std::fmt;

use crate::coxeter::{CoxElement, CoxType, Generator};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: Generator,
    pub sign: Sign,
}

impl Letter {
    pub fn pos(generator: Generator) -> Self {
        Letter {
            generator,
            sign: Sign::Pos,
        }
    }

    pub fn neg(generator: Generator) -> Self {
        Letter {
            generator,
            sign: Sign::Neg,
        }
    }

    pub fn inverse(self) -> Self {
        Letter {
            generator: self.generator,
            sign: self.sign.flip(),
        }
    }
}

/// A word in the generators and their inverses.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArtinWord {
    typ: CoxType,
    letters: Vec<Letter>,
}

impl ArtinWord {
    pub fn empty(typ: CoxType) -> Self {
        ArtinWord {
            typ,
            letters: Vec::new(),
        }
    }

    pub fn new(typ: CoxType, letters: Vec<Letter>) -> Result<Self> {
        if let Some(bad) = letters.iter().find(|l| l.generator.index() > typ.rank()) {
            return Err(Error::GeneratorOutOfRange {
                typ,
                index: bad.generator.index(),
            });
        }
        Ok(ArtinWord { typ, letters })
    }

    /// Single generator `g_index`.
    pub fn generator(typ: CoxType, index: usize) -> Result<Self> {
        Ok(ArtinWord {
            typ,
            letters: vec![Letter::pos(typ.generator(index)?)],
        })
    }

    /// Positive word from 1-based generator indices.
    pub fn positive(typ: CoxType, indices: &[usize]) -> Result<Self> {
        let letters = indices
            .iter()
            .map(|&i| typ.generator(i).map(Letter::pos))
            .collect::<Result<_>>()?;
        Ok(ArtinWord { typ, letters })
    }

    /// Signed 1-based indices: `-3` is the inverse of the third generator.
    pub fn from_signed(typ: CoxType, indices: &[i64]) -> Result<Self> {
        let letters = indices
            .iter()
            .map(|&i| {
                let g = typ.generator(i.unsigned_abs() as usize)?;
                Ok(if i < 0 {
                    Letter::neg(g)
                } else {
                    Letter::pos(g)
                })
            })
            .collect::<Result<_>>()?;
        Ok(ArtinWord { typ, letters })
    }

    pub(crate) fn from_generators(typ: CoxType, gens: &[Generator]) -> Self {
        ArtinWord {
            typ,
            letters: gens.iter().copied().map(Letter::pos).collect(),
        }
    }

    pub fn typ(&self) -> CoxType {
        self.typ
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| l.sign == Sign::Pos)
    }

    pub fn push(&mut self, letter: Letter) {
        assert!(letter.generator.index() <= self.typ.rank());
        self.letters.push(letter);
    }

    pub fn check_type(&self, typ: CoxType) -> Result<()> {
        if self.typ != typ {
            return Err(Error::TypeMismatch {
                expected: typ,
                found: self.typ,
            });
        }
        Ok(())
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &ArtinWord) -> Result<ArtinWord> {
        other.check_type(self.typ)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(ArtinWord {
            typ: self.typ,
            letters,
        })
    }

    /// Concatenates a sequence of words of the same type.
    pub fn product<'a, I>(typ: CoxType, words: I) -> Result<ArtinWord>
    where
        I: IntoIterator<Item = &'a ArtinWord>,
    {
        let mut out = ArtinWord::empty(typ);
        for w in words {
            w.check_type(typ)?;
            out.letters.extend_from_slice(&w.letters);
        }
        Ok(out)
    }

    /// Formal inverse: reversed, each letter inverted.
    pub fn inverse(&self) -> ArtinWord {
        ArtinWord {
            typ: self.typ,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// `self^m` as a word; negative `m` repeats the inverse.
    pub fn pow(&self, m: i64) -> ArtinWord {
        let base = if m < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * m.unsigned_abs() as usize);
        for _ in 0..m.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        ArtinWord {
            typ: self.typ,
            letters,
        }
    }

    /// Exponent sum: the homomorphism sending every generator to 1.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign.value()).sum()
    }

    /// Parses the text format for the given group.
    pub fn parse(typ: CoxType, text: &str) -> Result<ArtinWord> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            let (generator, exponent) = parse_token(typ, token)?;
            let letter = if exponent < 0 {
                Letter::neg(generator)
            } else {
                Letter::pos(generator)
            };
            letters.extend(std::iter::repeat_n(
                letter,
                exponent.unsigned_abs() as usize,
            ));
        }
        Ok(ArtinWord { typ, letters })
    }
}

fn parse_token(typ: CoxType, token: &str) -> Result<(Generator, i64)> {
    let bad = |reason: String| Error::Parse {
        token: token.to_string(),
        reason,
    };
    let prefix = typ.family().generator_prefix();
    let body = token
        .strip_prefix(prefix)
        .ok_or_else(|| bad(format!("letters of {typ} start with '{prefix}'")))?;
    let (index, exponent) = match body.split_once('^') {
        Some((i, e)) => (i, Some(e)),
        None => (body, None),
    };
    if index.is_empty() || !index.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad("expected a generator index".to_string()));
    }
    let index: usize = index
        .parse()
        .map_err(|_| bad("generator index too large".to_string()))?;
    let generator = typ
        .generator(index)
        .map_err(|_| bad(format!("generator index must lie in 1..={}", typ.rank())))?;
    let exponent = match exponent {
        None => 1,
        Some(e) => {
            let digits = e.strip_prefix('-').unwrap_or(e);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad("exponent must be an integer".to_string()));
            }
            e.parse::<i64>()
                .map_err(|_| bad("exponent out of range".to_string()))?
        }
    };
    Ok((generator, exponent))
}

impl fmt::Display for ArtinWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = self.typ.family().generator_prefix();
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{prefix}{}", l.generator.index())?;
            if l.sign == Sign::Neg {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

/// `Π(a, b, m)`: the alternating positive word `aba…` of length `m`.
pub fn relation_word(typ: CoxType, a: Generator, b: Generator, m: usize) -> Result<ArtinWord> {
    if m < 2 {
        return Err(Error::RelationTooShort(m));
    }
    let gens: Vec<_> = (0..m).map(|k| if k % 2 == 0 { a } else { b }).collect();
    ArtinWord::new(typ, gens.into_iter().map(Letter::pos).collect())
}

/// The Tits section: `τ(w)` as the positive word of its canonical reduced expression.
pub fn tau(w: &CoxElement) -> ArtinWord {
    ArtinWord::from_generators(w.typ(), &w.reduced_word())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d4() -> CoxType {
        CoxType::d(4).unwrap()
    }

    #[test]
    fn parse_and_emit() {
        let w = ArtinWord::parse(d4(), "t1 t2^-1 t3^2").unwrap();
        assert_eq!(w.to_string(), "t1 t2^-1 t3 t3");
        assert_eq!(w.len(), 4);
        assert_eq!(w.exponent_sum(), 2);
        let z = ArtinWord::parse(d4(), "  t4^0 ").unwrap();
        assert!(z.is_empty());
        assert_eq!(z.to_string(), "");
        let neg = ArtinWord::parse(d4(), "t2^-3").unwrap();
        assert_eq!(neg.exponent_sum(), -3);
    }

    #[test]
    fn parse_errors_name_the_token() {
        for (text, token) in [
            ("t1 s2", "s2"),
            ("t1 t5", "t5"),
            ("t0", "t0"),
            ("t1^x", "t1^x"),
            ("t1^", "t1^"),
            ("t", "t"),
            ("t1 t2^--1", "t2^--1"),
        ] {
            match ArtinWord::parse(d4(), text) {
                Err(Error::Parse { token: t, .. }) => assert_eq!(t, token),
                other => panic!("{text}: {other:?}"),
            }
        }
    }

    #[test]
    fn relation_words() {
        let t = CoxType::a(3).unwrap();
        let (a, b) = (t.generator(1).unwrap(), t.generator(2).unwrap());
        let p = CoxType::a(3).unwrap();
        assert_eq!(relation_word(p, a, b, 2).unwrap().to_string(), "s1 s2");
        assert_eq!(relation_word(p, a, b, 3).unwrap().to_string(), "s1 s2 s1");
        assert_eq!(relation_word(p, a, a, 2).unwrap().to_string(), "s1 s1");
        assert_eq!(relation_word(p, a, b, 1), Err(Error::RelationTooShort(1)));
    }

    #[test]
    fn inverse_and_pow() {
        let w = ArtinWord::parse(d4(), "t1 t2^-1").unwrap();
        assert_eq!(w.inverse().to_string(), "t2 t1^-1");
        assert_eq!(w.pow(2).to_string(), "t1 t2^-1 t1 t2^-1");
        assert_eq!(w.pow(-1), w.inverse());
        assert!(w.pow(0).is_empty());
        let other = ArtinWord::empty(CoxType::d(5).unwrap());
        assert!(w.concat(&other).is_err());
    }

    #[test]
    fn tau_lengths() {
        let t = CoxType::a(2).unwrap();
        let ws = crate::coxeter::longest_element(t);
        let word = tau(&ws);
        assert_eq!(word.len(), 3);
        assert!(word.is_positive());
        assert!(tau(&CoxElement::identity(t)).is_empty());
        let ws = crate::coxeter::longest_element(d4());
        assert_eq!(tau(&ws).len(), 12);
    }
}
