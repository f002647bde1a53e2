//! Representants of rooted products via occurrence-based substitution.
//!
//! A word is first labelled so that the `i`-th occurrence of `x` becomes
//! `(x, i)`; a rule then replaces each labelled letter by a word. The rooted
//! constructions replace `(x, i)` by `x` tagged with a fiber template that
//! depends only on `i` and on how often `x` occurs in total.
//!
//! The templates place the root fiber first in each copy's final-occurrence
//! order, and the trailing `J^{w_H}(σ(w_G))` block continues that order with
//! `π(w_H)`. The general `G ∘ H` word therefore represents the product only
//! when the root is the first letter of `w_H`; with any other `w_H` the
//! report comes back with `verified_represents == false`.
//! [`crate::oracle::min_length_word_starting_with`] finds a suitable `w_H`.

use std::collections::HashMap;

use crate::cartesian::{morphism_j, rotation};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::letter::Letter;
use crate::products::rooted_product;
use crate::report::{BoundReport, Construction, Factors};
use crate::word::Word;

/// The `index`-th occurrence (1-based) of `letter` in a word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabelledLetter {
    pub letter: Letter,
    pub index: usize,
}

pub fn label_occurrences(w: &Word) -> Vec<LabelledLetter> {
    let mut seen: HashMap<&Letter, usize> = HashMap::new();
    w.iter()
        .map(|x| {
            let count = seen.entry(x).or_insert(0);
            *count += 1;
            LabelledLetter {
                letter: x.clone(),
                index: *count,
            }
        })
        .collect()
}

/// Replacement for one labelled letter, given the letter's total number of
/// occurrences in the word. `None` means the rule does not cover it.
pub trait OccurrenceRule {
    fn replace(&self, occurrence: &LabelledLetter, total: usize) -> Option<Word>;
}

impl<F> OccurrenceRule for F
where
    F: Fn(&LabelledLetter, usize) -> Option<Word>,
{
    fn replace(&self, occurrence: &LabelledLetter, total: usize) -> Option<Word> {
        self(occurrence, total)
    }
}

/// Applies `rule` to the labelled version of `w`, concatenating the results.
pub fn occurrence_substitute(w: &Word, rule: &impl OccurrenceRule) -> Result<Word> {
    let totals: HashMap<Letter, usize> = w.multiplicities().into_iter().collect();
    let mut out = Word::empty();
    for occurrence in label_occurrences(w) {
        let total = totals[&occurrence.letter];
        let image = rule
            .replace(&occurrence, total)
            .ok_or_else(|| Error::MissingRule {
                letter: occurrence.letter.clone(),
                index: occurrence.index,
            })?;
        out.extend_from(&image);
    }
    Ok(out)
}

/// Fiber sequences for the rooted constructions. Letter `x` maps to
/// `x^f` for each fiber `f` of the selected template:
///
/// | total | index | template |
/// |-------|-------|----------|
/// | 1     | 1     | `single` |
/// | ≥ 2   | 1     | `first`  |
/// | ≥ 2   | 2     | `second` |
/// | ≥ 2   | ≥ 3   | `later`  |
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberTemplate {
    pub single: Word,
    pub first: Word,
    pub second: Word,
    pub later: Word,
}

impl FiberTemplate {
    /// Same fibers for every occurrence.
    pub fn constant(fibers: Word) -> Self {
        FiberTemplate {
            single: fibers.clone(),
            first: fibers.clone(),
            second: fibers.clone(),
            later: fibers,
        }
    }

    /// Templates for a rooted `H` with `π(w_H) = v₁…v_r…v_n`, root `v_r`:
    /// the rotation of `π(w_H)` starting just after the root, written twice
    /// with its final letter dropped, serves the single and second
    /// occurrences; the first occurrence is the root alone; later
    /// occurrences get the rotation starting at the root.
    pub fn rooted(fiber_perm: &Word, root: &Letter) -> Result<Self> {
        let r = fiber_perm
            .iter()
            .position(|v| v == root)
            .ok_or_else(|| Error::UnknownVertex(root.clone()))?
            + 1;
        let n = fiber_perm.len();
        let after = rotation(fiber_perm, r % n + 1)?;
        let mut twice = after.concat(&after).into_letters();
        twice.pop();
        let twice = Word::new(twice);
        Ok(FiberTemplate {
            single: twice.clone(),
            first: Word::new(vec![root.clone()]),
            second: twice,
            later: rotation(fiber_perm, r)?,
        })
    }

    fn select(&self, index: usize, total: usize) -> &Word {
        match (total, index) {
            (1, _) => &self.single,
            (_, 1) => &self.first,
            (_, 2) => &self.second,
            _ => &self.later,
        }
    }
}

impl OccurrenceRule for FiberTemplate {
    fn replace(&self, occurrence: &LabelledLetter, total: usize) -> Option<Word> {
        if occurrence.index == 0 || occurrence.index > total {
            return None;
        }
        let x = &occurrence.letter;
        Some(
            self.select(occurrence.index, total)
                .iter()
                .map(|f| Letter::pair(x, f))
                .collect(),
        )
    }
}

fn require_representant(g: &Graph, w: &Word, name: &str) -> Result<()> {
    if g.is_represented_by(w) {
        Ok(())
    } else {
        Err(Error::NotRepresenting(name.to_string()))
    }
}

fn root_letter() -> Letter {
    Letter::new("r").expect("atom")
}

/// `G ∘ K₂` with `V(K₂) = {r, 1}` rooted at `r`. Length
/// `2|w_G| + |O(w_G, 1)|`, measured against `2|w_G| + κ_G`.
pub fn construct_rooted_k2(g: &Graph, w_g: &Word) -> Result<BoundReport> {
    let report = rooted_complete(g, w_g, 2)?;
    Ok(BoundReport {
        construction: Construction::RootedK2,
        ..report
    })
}

/// `G ∘ Kₙ` for `n ≥ 2` with `V(Kₙ) = {r, 1, …, n−1}` rooted at `r`. Length
/// `n|w_G| + (n−1)|O(w_G, 1)|`, measured against `n|w_G| + (n−1)κ_G`.
pub fn construct_rooted_kn(g: &Graph, w_g: &Word, n: usize) -> Result<BoundReport> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "G ∘ Kn needs n >= 2, got {n}"
        )));
    }
    rooted_complete(g, w_g, n)
}

fn rooted_complete(g: &Graph, w_g: &Word, n: usize) -> Result<BoundReport> {
    require_representant(g, w_g, "G")?;
    let root = root_letter();
    let w_kn: Word = std::iter::once(root.clone())
        .chain((1..n).map(|i| Letter::new(i.to_string()).expect("atom")))
        .collect();
    let kn = Graph::from_word(&w_kn)?;
    let template = FiberTemplate::rooted(&w_kn, &root)?;
    let word = occurrence_substitute(w_g, &template)?;

    let verified = rooted_product(g, &kn, &root)?.is_represented_by(&word);
    Ok(BoundReport::new(
        Construction::RootedKn,
        word,
        n * w_g.len() + (n - 1) * g.clique_number()?,
        verified,
        Factors {
            g_vertices: g.order(),
            h_vertices: n,
            wg_length: w_g.len(),
            wh_length: n,
        },
    )
    .with_root(root))
}

/// `G ∘ H` rooted at `root`: `h(w_G) J^{w_H}(σ(w_G))` where `h` applies
/// [`FiberTemplate::rooted`] built from `π(w_H)`. Length
/// `|H||w_G| + |G||w_H| + (|H|−1)|O(w_G, 1)|`, measured against
/// `|H||w_G| + |G||w_H| + (|H|−1)κ_G`.
pub fn construct_rooted_h(
    g: &Graph,
    w_g: &Word,
    h: &Graph,
    w_h: &Word,
    root: &Letter,
) -> Result<BoundReport> {
    if !h.contains(root) {
        return Err(Error::UnknownVertex(root.clone()));
    }
    require_representant(g, w_g, "G")?;
    require_representant(h, w_h, "H")?;
    let template = FiberTemplate::rooted(&w_h.initial_permutation()?, root)?;
    let mut word = occurrence_substitute(w_g, &template)?;
    word.extend_from(&morphism_j(&w_g.final_permutation()?, w_h)?);

    let verified = rooted_product(g, h, root)?.is_represented_by(&word);
    let (m, n) = (g.order(), h.order());
    Ok(BoundReport::new(
        Construction::RootedH,
        word,
        n * w_g.len() + m * w_h.len() + (n - 1) * g.clique_number()?,
        verified,
        Factors {
            g_vertices: m,
            h_vertices: n,
            wg_length: w_g.len(),
            wh_length: w_h.len(),
        },
    )
    .with_root(root.clone()))
}
