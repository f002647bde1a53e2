//! Words over a vertex alphabet and the letter-level operations on them.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::letter::Letter;

/// A finite sequence of letters.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Parses whitespace-separated tokens. A single token made of plain
    /// characters (no `^` or parentheses) is read one character per letter,
    /// so `35423214` and `3 5 4 2 3 2 1 4` are the same word. Use
    /// [`Word::parse_tokens`] to read a one-letter word with a long name.
    pub fn parse(text: &str) -> Result<Self> {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        match tokens.as_slice() {
            [single] if single.chars().count() > 1 && !single.contains(['^', '(', ')']) => single
                .chars()
                .map(|c| Letter::new(c.encode_utf8(&mut [0; 4])))
                .collect(),
            _ => Self::parse_tokens(text),
        }
    }

    /// Parses whitespace-separated tokens without the compact form.
    pub fn parse_tokens(text: &str) -> Result<Self> {
        text.split_whitespace().map(Letter::new).collect()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Letter> {
        self.0.iter()
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    pub fn extend_from(&mut self, other: &Word) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.clone();
        out.extend_from(other);
        out
    }

    pub fn contains(&self, letter: &Letter) -> bool {
        self.0.contains(letter)
    }

    /// Whether `x` and `y` alternate, i.e. the restriction to `{x, y}` is
    /// `xyxy…` or `yxyx…`. Scans once without materializing the restriction.
    pub fn alternates(&self, x: &Letter, y: &Letter) -> Result<bool> {
        if x == y {
            return Err(Error::SameLetter(x.clone()));
        }
        let mut last: Option<&Letter> = None;
        let mut alternating = true;
        let (mut seen_x, mut seen_y) = (false, false);
        for letter in self.iter().filter(|l| *l == x || *l == y) {
            seen_x |= letter == x;
            seen_y |= letter == y;
            if last == Some(letter) {
                alternating = false;
            }
            last = Some(letter);
        }
        if !seen_x {
            return Err(Error::LetterAbsent(x.clone()));
        }
        if !seen_y {
            return Err(Error::LetterAbsent(y.clone()));
        }
        Ok(alternating)
    }

    /// Subsequence of letters in `keep`, order preserved.
    pub fn restrict<'a>(&self, keep: impl IntoIterator<Item = &'a Letter>) -> Word {
        let keep: HashSet<&Letter> = keep.into_iter().collect();
        self.iter().filter(|l| keep.contains(l)).cloned().collect()
    }

    /// π(w): distinct letters in order of first occurrence.
    pub fn initial_permutation(&self) -> Result<Word> {
        if self.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(self.distinct_letters())
    }

    /// σ(w): distinct letters in order of last occurrence.
    pub fn final_permutation(&self) -> Result<Word> {
        if self.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(self.reverse().distinct_letters().reverse())
    }

    pub fn reverse(&self) -> Word {
        self.iter().rev().cloned().collect()
    }

    /// `O_w(x)`.
    pub fn occurrences(&self, x: &Letter) -> usize {
        self.iter().filter(|l| *l == x).count()
    }

    /// `O(w, i)`: the letters occurring exactly `i` times.
    pub fn occurrence_class(&self, i: usize) -> Result<BTreeSet<Letter>> {
        if i == 0 {
            return Err(Error::ZeroOccurrenceClass);
        }
        Ok(self
            .multiplicities()
            .into_iter()
            .filter(|(_, k)| *k == i)
            .map(|(l, _)| l)
            .collect())
    }

    /// `(O_min(w), O_max(w))`.
    pub fn occurrence_extremes(&self) -> Result<(usize, usize)> {
        if self.is_empty() {
            return Err(Error::EmptyWord);
        }
        let counts = self.multiplicities();
        let min = counts.iter().map(|(_, k)| *k).min().unwrap_or(0);
        let max = counts.iter().map(|(_, k)| *k).max().unwrap_or(0);
        Ok((min, max))
    }

    /// `Some(k)` when every letter occurs exactly `k` times.
    pub fn uniformity(&self) -> Result<Option<usize>> {
        let (min, max) = self.occurrence_extremes()?;
        Ok((min == max).then_some(min))
    }

    pub fn is_permutation(&self) -> bool {
        let mut seen = HashSet::with_capacity(self.len());
        self.iter().all(|l| seen.insert(l))
    }

    /// Letter multiplicities in order of first occurrence.
    pub fn multiplicities(&self) -> Vec<(Letter, usize)> {
        let mut order: Vec<(Letter, usize)> = Vec::new();
        let mut slot: HashMap<&Letter, usize> = HashMap::new();
        for letter in self.iter() {
            match slot.get(letter) {
                Some(&i) => order[i].1 += 1,
                None => {
                    slot.insert(letter, order.len());
                    order.push((letter.clone(), 1));
                }
            }
        }
        order
    }

    fn distinct_letters(&self) -> Word {
        let mut seen = HashSet::new();
        self.iter().filter(|l| seen.insert(*l)).cloned().collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, letter) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::parse(s)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl IntoIterator for Word {
    type Item = Letter;
    type IntoIter = std::vec::IntoIter<Letter>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a> IntoIterator for &'a Word {
    type Item = &'a Letter;
    type IntoIter = std::slice::Iter<'a, Letter>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl Index<usize> for Word {
    type Output = Letter;

    fn index(&self, i: usize) -> &Letter {
        &self.0[i]
    }
}

/// Pairwise alternation over a word of letter indices `0..n`.
///
/// Entry `a * n + b` is true iff `a` and `b` alternate. Pairs where a letter
/// is absent count as alternating; callers check coverage separately.
pub(crate) fn alternation_matrix(word: &[usize], n: usize) -> Vec<bool> {
    // last[a * n + b] = 1 + the letter of {a, b} seen most recently, 0 if none
    let mut last = vec![0u32; n * n];
    let mut alternating = vec![true; n * n];
    for &a in word {
        for b in 0..n {
            if b == a {
                continue;
            }
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            let cell = lo * n + hi;
            if last[cell] == a as u32 + 1 {
                alternating[cell] = false;
            }
            last[cell] = a as u32 + 1;
        }
    }
    for lo in 0..n {
        for hi in lo + 1..n {
            alternating[hi * n + lo] = alternating[lo * n + hi];
        }
        alternating[lo * n + lo] = false;
    }
    alternating
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn l(s: &str) -> Letter {
        Letter::new(s).unwrap()
    }

    fn set(letters: &[&str]) -> BTreeSet<Letter> {
        letters.iter().map(|s| l(s)).collect()
    }

    #[test]
    fn parse_forms_agree() {
        assert_eq!(w("35423214"), w("3 5 4 2 3 2 1 4"));
        assert_eq!(w("35423214").len(), 8);
        assert_eq!(w("a^1 b^2").len(), 2);
        assert_eq!(Word::parse_tokens("abc").unwrap().len(), 1);
        assert!(w("").is_empty());
        assert_eq!(w("x").len(), 1);
        assert_eq!(w("3 5 4").to_string(), "3 5 4");
    }

    #[test]
    fn alternation_examples() {
        assert!(w("xy").alternates(&l("x"), &l("y")).unwrap());
        assert!(w("35423214").alternates(&l("3"), &l("5")).unwrap());
        assert!(!w("322414").alternates(&l("2"), &l("4")).unwrap());
    }

    #[test]
    fn alternation_errors() {
        assert_eq!(
            w("ab").alternates(&l("a"), &l("a")),
            Err(Error::SameLetter(l("a")))
        );
        assert_eq!(
            w("ab").alternates(&l("a"), &l("z")),
            Err(Error::LetterAbsent(l("z")))
        );
    }

    #[test]
    fn restriction() {
        assert_eq!(w("35423214").restrict(&set(&["1", "2"])), w("221"));
        assert_eq!(w("abc").restrict(&set(&["a", "b", "c"])), w("abc"));
        assert!(w("abc").restrict(&set(&[])).is_empty());
    }

    #[test]
    fn permutations() {
        assert_eq!(w("35423214").initial_permutation().unwrap(), w("35421"));
        assert_eq!(w("abc").initial_permutation().unwrap(), w("abc"));
        assert_eq!(w("aaa").initial_permutation().unwrap(), w("a"));
        assert_eq!(w("35423214").final_permutation().unwrap(), w("53214"));
        assert_eq!(w("abc").final_permutation().unwrap(), w("abc"));
        assert_eq!(w("aba").final_permutation().unwrap(), w("ba"));
        assert_eq!(Word::empty().initial_permutation(), Err(Error::EmptyWord));
        assert_eq!(Word::empty().final_permutation(), Err(Error::EmptyWord));
    }

    #[test]
    fn reversal() {
        assert_eq!(w("35423214").reverse(), w("41232453"));
        assert_eq!(Word::empty().reverse(), Word::empty());
        assert_eq!(w("ab").reverse(), w("ba"));
    }

    #[test]
    fn occurrence_counts() {
        let word = w("322414");
        assert_eq!(word.occurrences(&l("3")), 1);
        assert_eq!(word.occurrences(&l("2")), 2);
        assert_eq!(word.occurrences(&l("z")), 0);
        assert_eq!(word.occurrence_class(2).unwrap(), set(&["2", "4"]));
        assert_eq!(word.occurrence_class(1).unwrap(), set(&["1", "3"]));
        assert!(w("aa").occurrence_class(3).unwrap().is_empty());
        assert_eq!(word.occurrence_class(0), Err(Error::ZeroOccurrenceClass));
    }

    #[test]
    fn extremes_and_uniformity() {
        assert_eq!(w("322414").occurrence_extremes().unwrap(), (1, 2));
        assert_eq!(w("abc").occurrence_extremes().unwrap(), (1, 1));
        assert_eq!(w("aab").occurrence_extremes().unwrap(), (1, 2));
        assert_eq!(Word::empty().occurrence_extremes(), Err(Error::EmptyWord));
        assert_eq!(w("abab").uniformity().unwrap(), Some(2));
        assert_eq!(w("abc").uniformity().unwrap(), Some(1));
        assert_eq!(w("aab").uniformity().unwrap(), None);
        assert_eq!(Word::empty().uniformity(), Err(Error::EmptyWord));
    }

    #[test]
    fn matrix_matches_pairwise_scan() {
        let word = w("35423214");
        let alphabet = word.initial_permutation().unwrap();
        let index: Vec<usize> = word
            .iter()
            .map(|x| alphabet.iter().position(|y| y == x).unwrap())
            .collect();
        let n = alphabet.len();
        let matrix = alternation_matrix(&index, n);
        for a in 0..n {
            for b in 0..n {
                if a != b {
                    let direct = word.alternates(&alphabet[a], &alphabet[b]).unwrap();
                    assert_eq!(matrix[a * n + b], direct, "{} {}", alphabet[a], alphabet[b]);
                }
            }
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn word_over(alphabet: usize, max_len: usize) -> impl Strategy<Value = Word> {
            proptest::collection::vec(0..alphabet, 1..=max_len).prop_map(|ix| {
                ix.into_iter()
                    .map(|i| Letter::new(format!("v{i}")).unwrap())
                    .collect()
            })
        }

        proptest! {
            #[test]
            fn alternation_is_reversal_invariant(word in word_over(4, 12)) {
                let letters = word.initial_permutation().unwrap();
                for x in letters.iter() {
                    for y in letters.iter().filter(|y| *y != x) {
                        prop_assert_eq!(
                            word.alternates(x, y).unwrap(),
                            word.reverse().alternates(x, y).unwrap()
                        );
                    }
                }
            }

            #[test]
            fn restriction_length_is_sum_of_counts(word in word_over(4, 12)) {
                let letters = word.initial_permutation().unwrap();
                let x = &letters[0];
                let y = letters.iter().last().unwrap();
                let pair = [x.clone(), y.clone()];
                let expected = if x == y {
                    word.occurrences(x)
                } else {
                    word.occurrences(x) + word.occurrences(y)
                };
                prop_assert_eq!(word.restrict(&pair).len(), expected);
            }

            #[test]
            fn initial_of_reverse_is_reverse_of_final(word in word_over(5, 12)) {
                prop_assert_eq!(
                    word.reverse().initial_permutation().unwrap(),
                    word.final_permutation().unwrap().reverse()
                );
            }

            #[test]
            fn single_occurrences_alternate(perm in Just((0..5).collect::<Vec<usize>>()).prop_shuffle()) {
                let word: Word = perm.iter().map(|i| Letter::new(format!("v{i}")).unwrap()).collect();
                for x in word.iter() {
                    for y in word.iter().filter(|y| *y != x) {
                        prop_assert!(word.alternates(x, y).unwrap());
                    }
                }
            }
        }
    }
}
