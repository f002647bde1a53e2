//! Letters and product-vertex names.
//!
//! A letter is an opaque token. Atomic tokens may not contain whitespace,
//! `^`, `(` or `)`. A product vertex `u^v` is itself a letter whose name is
//! `base^fiber`, with compound operands wrapped in parentheses so that nested
//! products such as `(a^b)^c` parse back unambiguously.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Vertex identifier; compared and hashed by its token.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(Arc<str>);

impl Letter {
    pub fn new(name: impl AsRef<str>) -> Result<Self> {
        let name = name.as_ref();
        if is_atom(name) || split_pair(name).is_some() {
            Ok(Letter(Arc::from(name)))
        } else {
            Err(Error::InvalidLetter(name.to_string()))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn is_pair(&self) -> bool {
        !is_atom(&self.0)
    }

    /// The product vertex `base^fiber`.
    pub fn pair(base: &Letter, fiber: &Letter) -> Letter {
        PairVertex::new(base.clone(), fiber.clone()).to_letter()
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &*self.0)
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Letter::new(s)
    }
}

impl Serialize for Letter {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for Letter {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Letter::new(s).map_err(serde::de::Error::custom)
    }
}

/// Ordered pair `base^fiber`: a vertex of `G □ H` or `G ∘ H` with `base` in
/// `G` and `fiber` in `H`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairVertex {
    pub base: Letter,
    pub fiber: Letter,
}

impl PairVertex {
    pub fn new(base: Letter, fiber: Letter) -> Self {
        PairVertex { base, fiber }
    }

    pub fn to_letter(&self) -> Letter {
        Letter(Arc::from(self.to_string()))
    }

    /// Splits a product-vertex letter back into its coordinates.
    pub fn from_letter(letter: &Letter) -> Result<Self> {
        let (base, fiber) =
            split_pair(letter.as_str()).ok_or_else(|| Error::InvalidLetter(letter.to_string()))?;
        Ok(PairVertex {
            base: Letter(Arc::from(unwrap_operand(base))),
            fiber: Letter(Arc::from(unwrap_operand(fiber))),
        })
    }

    /// `fiber^base`.
    pub fn transposed(&self) -> Self {
        PairVertex::new(self.fiber.clone(), self.base.clone())
    }
}

impl fmt::Display for PairVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_operand(f, &self.base)?;
        f.write_str("^")?;
        write_operand(f, &self.fiber)
    }
}

impl FromStr for PairVertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PairVertex::from_letter(&Letter::new(s)?)
    }
}

fn write_operand(f: &mut fmt::Formatter<'_>, letter: &Letter) -> fmt::Result {
    if letter.is_pair() {
        write!(f, "({letter})")
    } else {
        f.write_str(letter.as_str())
    }
}

fn is_atom(s: &str) -> bool {
    !s.is_empty()
        && !s
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, '^' | '(' | ')'))
}

// Splits `X^Y` at its single top-level caret, validating both operands.
fn split_pair(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0usize;
    let mut caret = None;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.checked_sub(1)?,
            '^' if depth == 0 => {
                if caret.is_some() {
                    return None;
                }
                caret = Some(i);
            }
            _ => {}
        }
    }
    if depth != 0 {
        return None;
    }
    let at = caret?;
    let (base, fiber) = (&s[..at], &s[at + 1..]);
    (is_operand(base) && is_operand(fiber)).then_some((base, fiber))
}

fn is_operand(s: &str) -> bool {
    if is_atom(s) {
        return true;
    }
    match s.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
        Some(inner) => split_pair(inner).is_some(),
        None => false,
    }
}

fn unwrap_operand(s: &str) -> &str {
    s.strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> Letter {
        Letter::new(s).unwrap()
    }

    #[test]
    fn atoms_and_pairs() {
        assert!(!l("abc").is_pair());
        assert!(l("a^b").is_pair());
        assert!(l("(a^b)^c").is_pair());
        assert!(l("(a^b)^(c^d)").is_pair());
    }

    #[test]
    fn rejects_malformed_names() {
        for bad in [
            "",
            "a b",
            "^",
            "a^",
            "^b",
            "a^b^c",
            "(a)^b",
            "(a^b",
            "a)^b",
            "((a^b))^c",
        ] {
            assert!(Letter::new(bad).is_err(), "{bad:?} accepted");
        }
    }

    #[test]
    fn nested_pairs_are_parenthesized() {
        let inner = Letter::pair(&l("a"), &l("b"));
        let outer = Letter::pair(&inner, &l("c"));
        assert_eq!(outer.as_str(), "(a^b)^c");
        let back = PairVertex::from_letter(&outer).unwrap();
        assert_eq!(back.base, inner);
        assert_eq!(back.fiber, l("c"));
        assert_eq!(back.transposed().to_string(), "c^(a^b)");
    }

    #[test]
    fn atom_is_not_a_pair_vertex() {
        assert!(PairVertex::from_letter(&l("a")).is_err());
    }
}
