//! Exhaustive search for minimum-length representants and representation
//! numbers of small graphs.
//!
//! Words are enumerated lexicographically over the graph's vertex
//! declaration order, so the first hit at the least length is the answer.
//! The only pruning is that the remaining positions must still be able to
//! introduce every letter not yet used. Budgets count complete candidate
//! words; running out is reported as [`Error::BudgetExhausted`], never as a
//! wrong answer.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::letter::Letter;
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_length: usize,
    pub max_uniform_k: usize,
    pub max_states: u64,
}

impl SearchBudget {
    pub const DEFAULT_MAX_STATES: u64 = 100_000_000;

    /// `max_length = 2|V|`, `max_uniform_k = 3`, `max_states = 10⁸`.
    pub fn for_graph(g: &Graph) -> Self {
        SearchBudget {
            max_length: 2 * g.order(),
            max_uniform_k: 3,
            max_states: Self::DEFAULT_MAX_STATES,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.max_length == 0 || self.max_uniform_k == 0 || self.max_states == 0 {
            return Err(Error::InvalidParameter(
                "search budget fields must be positive".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchOptions {
    /// Worker threads; `None` uses the global pool, `Some(1)` runs inline.
    pub threads: Option<usize>,
    /// Only start words with the least vertex of each automorphism orbit.
    /// Lengths stay exact but the witness is only first up to relabelling.
    pub symmetry_reduction: bool,
}

/// Least-length representant of `g` within `budget`, with its length.
/// `Ok(None)` means no word of length `≤ max_length` represents `g`.
pub fn min_length_word(g: &Graph, budget: &SearchBudget) -> Result<Option<(Word, usize)>> {
    min_length_word_with(g, budget, &SearchOptions::default())
}

pub fn min_length_word_with(
    g: &Graph,
    budget: &SearchBudget,
    options: &SearchOptions,
) -> Result<Option<(Word, usize)>> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let starts: Vec<usize> = if options.symmetry_reduction {
        orbit_representatives(g)
    } else {
        (0..g.order()).collect()
    };
    deepen(g, budget, options, &starts)
}

/// Least-length representant of `g` whose first letter is `first`.
pub fn min_length_word_starting_with(
    g: &Graph,
    first: &Letter,
    budget: &SearchBudget,
) -> Result<Option<(Word, usize)>> {
    let start = g
        .index_of(first)
        .ok_or_else(|| Error::UnknownVertex(first.clone()))?;
    deepen(g, budget, &SearchOptions::default(), &[start])
}

fn deepen(
    g: &Graph,
    budget: &SearchBudget,
    options: &SearchOptions,
    starts: &[usize],
) -> Result<Option<(Word, usize)>> {
    budget.validate()?;
    let checker = Checker::new(g);
    let mut used = 0u64;
    for len in g.order()..=budget.max_length {
        let remaining = budget.max_states - used;
        match search_length(&checker, len, starts, remaining, options.threads)? {
            Outcome::Found(_, word) => {
                let word: Word = word.iter().map(|&i| g.vertices()[i].clone()).collect();
                return Ok(Some((word, len)));
            }
            Outcome::Exhausted(states) => used += states,
            Outcome::OverBudget => {
                return Err(Error::BudgetExhausted {
                    states: budget.max_states,
                })
            }
        }
    }
    Ok(None)
}

enum Outcome {
    /// Hit after visiting this many leaves, counting the hit.
    Found(u64, Vec<usize>),
    /// Subtree fully enumerated with this many leaves and no hit.
    Exhausted(u64),
    OverBudget,
}

/// Searches one length, split by first letter. Each worker is capped at the
/// whole remaining budget; folding the results in first-letter order then
/// reproduces exactly what a sequential scan would have returned.
fn search_length(
    checker: &Checker,
    len: usize,
    starts: &[usize],
    cap: u64,
    threads: Option<usize>,
) -> Result<Outcome> {
    let run = |&first: &usize| enumerate_from(checker, len, first, cap);
    let parts: Vec<Outcome> = match threads {
        Some(1) => starts.iter().map(run).collect(),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| Error::InvalidParameter(e.to_string()))?
            .install(|| starts.par_iter().map(run).collect()),
        None => starts.par_iter().map(run).collect(),
    };
    let mut used = 0u64;
    for part in parts {
        match part {
            Outcome::Found(states, word) => {
                return Ok(if used + states <= cap {
                    Outcome::Found(used + states, word)
                } else {
                    Outcome::OverBudget
                });
            }
            Outcome::Exhausted(states) => {
                used += states;
                if used > cap {
                    return Ok(Outcome::OverBudget);
                }
            }
            Outcome::OverBudget => return Ok(Outcome::OverBudget),
        }
    }
    Ok(Outcome::Exhausted(used))
}

/// Depth-first lexicographic scan of words of length `len` starting with
/// `first`, stopping after `cap` leaves.
fn enumerate_from(checker: &Checker, len: usize, first: usize, cap: u64) -> Outcome {
    let n = checker.n;
    let mut word = vec![0usize; len];
    let mut counts = vec![0usize; n];
    let mut distinct = 0usize;
    let mut leaves = 0u64;
    let mut scratch = checker.scratch();

    word[0] = first;
    counts[first] = 1;
    distinct += 1;
    if len - 1 < n - distinct {
        return Outcome::Exhausted(0);
    }
    // next[p] is the next letter to try at position p
    let mut next = vec![0usize; len];
    let mut p = 1;
    if len == 1 {
        leaves += 1;
        return if checker.represents(&word, &mut scratch) {
            Outcome::Found(leaves, word)
        } else {
            Outcome::Exhausted(leaves)
        };
    }
    loop {
        if next[p] == n {
            // backtrack
            next[p] = 0;
            p -= 1;
            if p == 0 {
                return Outcome::Exhausted(leaves);
            }
            let a = word[p];
            counts[a] -= 1;
            if counts[a] == 0 {
                distinct -= 1;
            }
            continue;
        }
        let a = next[p];
        next[p] += 1;
        let fresh = counts[a] == 0;
        let missing = n - distinct - usize::from(fresh);
        if len - p - 1 < missing {
            continue;
        }
        word[p] = a;
        if p + 1 == len {
            leaves += 1;
            if leaves > cap {
                return Outcome::OverBudget;
            }
            if checker.represents(&word, &mut scratch) {
                return Outcome::Found(leaves, word);
            }
            continue;
        }
        counts[a] += 1;
        if fresh {
            distinct += 1;
        }
        p += 1;
    }
}

/// Representation test specialised to index words that use every letter.
struct Checker {
    n: usize,
    edge: Vec<bool>,
}

impl Checker {
    fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut edge = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                edge[i * n + j] = g.adjacent(i, j);
            }
        }
        Checker { n, edge }
    }

    fn scratch(&self) -> (Vec<u32>, Vec<bool>) {
        (vec![0; self.n * self.n], vec![true; self.n * self.n])
    }

    fn represents(&self, word: &[usize], scratch: &mut (Vec<u32>, Vec<bool>)) -> bool {
        let n = self.n;
        let (last, alternating) = scratch;
        last.fill(0);
        alternating.fill(true);
        for &a in word {
            let tag = a as u32 + 1;
            for b in 0..n {
                if b == a {
                    continue;
                }
                let cell = a.min(b) * n + a.max(b);
                if last[cell] == tag {
                    if self.edge[cell] {
                        return false;
                    }
                    alternating[cell] = false;
                }
                last[cell] = tag;
            }
        }
        (0..n).all(|i| (i + 1..n).all(|j| alternating[i * n + j] == self.edge[i * n + j]))
    }
}

/// Least vertex index of each automorphism orbit, ascending.
fn orbit_representatives(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut orbit_of: Vec<usize> = (0..n).collect();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    automorphisms(g, 0, &mut perm, &mut used, &mut |p| {
        for (v, &image) in p.iter().enumerate() {
            let root = orbit_of[v].min(orbit_of[image]);
            let other = orbit_of[v].max(orbit_of[image]);
            for o in orbit_of.iter_mut() {
                if *o == other {
                    *o = root;
                }
            }
        }
    });
    let mut reps: Vec<usize> = orbit_of.clone();
    reps.sort_unstable();
    reps.dedup();
    reps
}

fn automorphisms(
    g: &Graph,
    v: usize,
    perm: &mut Vec<usize>,
    used: &mut Vec<bool>,
    visit: &mut impl FnMut(&[usize]),
) {
    let n = g.order();
    if v == n {
        visit(perm);
        return;
    }
    for image in 0..n {
        if used[image] || g.degree_at(v) != g.degree_at(image) {
            continue;
        }
        if (0..v).all(|u| g.adjacent(u, v) == g.adjacent(perm[u], image)) {
            perm[v] = image;
            used[image] = true;
            automorphisms(g, v + 1, perm, used, visit);
            used[image] = false;
        }
    }
}

/// Least `k ≤ max_uniform_k` such that a `k`-uniform word represents `g`,
/// with the lexicographically first such word.
pub fn representation_number(g: &Graph, budget: &SearchBudget) -> Result<Option<(usize, Word)>> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    budget.validate()?;
    let checker = Checker::new(g);
    let mut scratch = checker.scratch();
    let n = g.order();
    let mut leaves = 0u64;
    for k in 1..=budget.max_uniform_k {
        let len = k * n;
        let mut word = vec![0usize; len];
        let mut counts = vec![0usize; n];
        let mut next = vec![0usize; len];
        let mut p = 0usize;
        loop {
            if next[p] == n {
                next[p] = 0;
                if p == 0 {
                    break;
                }
                p -= 1;
                counts[word[p]] -= 1;
                continue;
            }
            let a = next[p];
            next[p] += 1;
            if counts[a] == k {
                continue;
            }
            word[p] = a;
            if p + 1 == len {
                leaves += 1;
                if leaves > budget.max_states {
                    return Err(Error::BudgetExhausted {
                        states: budget.max_states,
                    });
                }
                if checker.represents(&word, &mut scratch) {
                    let word = word.iter().map(|&i| g.vertices()[i].clone()).collect();
                    return Ok(Some((k, word)));
                }
                continue;
            }
            counts[a] += 1;
            p += 1;
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimalWordAudit {
    pub l: usize,
    pub word: Word,
    pub singletons: usize,
    pub clique_number: usize,
    pub o_min: usize,
    pub o_max: usize,
    pub diameter: usize,
    /// `|O(w, 1)| ≤ κ_G`
    pub lemma_kap_holds: bool,
    /// `O_max(w) − O_min(w) ≤ diam(G)`
    pub theorem_di_holds: bool,
}

/// Checks the singleton and occurrence-spread inequalities on `w`, which
/// should be a minimum-length representant of the connected graph `g`.
pub fn minimal_word_audit(g: &Graph, w: &Word) -> Result<MinimalWordAudit> {
    if !g.is_represented_by(w) {
        return Err(Error::NotRepresenting(w.to_string()));
    }
    let singletons = w.multiplicities().iter().filter(|&&(_, k)| k == 1).count();
    let clique_number = g.clique_number()?;
    let (o_min, o_max) = w.occurrence_extremes()?;
    let diameter = g.diameter()?;
    Ok(MinimalWordAudit {
        l: w.len(),
        word: w.clone(),
        singletons,
        clique_number,
        o_min,
        o_max,
        diameter,
        lemma_kap_holds: singletons <= clique_number,
        theorem_di_holds: o_max - o_min <= diameter,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn budget(g: &Graph) -> SearchBudget {
        SearchBudget::for_graph(g)
    }

    #[test]
    fn known_minimum_lengths() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(min_length_word(&c4, &budget(&c4)).unwrap().unwrap().1, 6);
        for n in 1..=5 {
            let kn = Graph::complete(n).unwrap();
            let (word, len) = min_length_word(&kn, &budget(&kn)).unwrap().unwrap();
            assert_eq!(len, n);
            assert!(word.is_permutation());
        }
        let p3 = Graph::path(3).unwrap();
        let (word, len) = min_length_word(&p3, &budget(&p3)).unwrap().unwrap();
        assert_eq!((word, len), (w("1213"), 4));
    }

    #[test]
    fn no_representant_within_short_limit() {
        let c4 = Graph::cycle(4).unwrap();
        let tight = SearchBudget {
            max_length: 5,
            ..budget(&c4)
        };
        assert_eq!(min_length_word(&c4, &tight).unwrap(), None);
    }

    #[test]
    fn budget_exhaustion_is_distinct() {
        let c4 = Graph::cycle(4).unwrap();
        let small = SearchBudget {
            max_states: 10,
            ..budget(&c4)
        };
        assert!(matches!(
            min_length_word(&c4, &small),
            Err(Error::BudgetExhausted { .. })
        ));
        assert!(matches!(
            representation_number(&c4, &small),
            Err(Error::BudgetExhausted { .. })
        ));
        let zero = SearchBudget {
            max_states: 0,
            ..budget(&c4)
        };
        assert!(matches!(
            min_length_word(&c4, &zero),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn thread_count_does_not_change_results() {
        let g =
            Graph::parse("edge a b\nedge b c\nedge c d\nedge d a\nedge a c\nedge d e\n").unwrap();
        let b = budget(&g);
        let reference = min_length_word_with(
            &g,
            &b,
            &SearchOptions {
                threads: Some(1),
                ..Default::default()
            },
        )
        .unwrap();
        for threads in [Some(2), Some(4), None] {
            let options = SearchOptions {
                threads,
                ..Default::default()
            };
            assert_eq!(min_length_word_with(&g, &b, &options).unwrap(), reference);
        }
        // a budget boundary lands on the same side for every worker count
        let found_at = {
            let mut states = 1;
            loop {
                let capped = SearchBudget {
                    max_states: states,
                    ..b
                };
                let options = SearchOptions {
                    threads: Some(1),
                    ..Default::default()
                };
                if min_length_word_with(&g, &capped, &options).is_ok() {
                    break states;
                }
                states *= 2;
            }
        };
        for states in [found_at / 2, found_at] {
            let capped = SearchBudget {
                max_states: states,
                ..b
            };
            let seq = min_length_word_with(
                &g,
                &capped,
                &SearchOptions {
                    threads: Some(1),
                    ..Default::default()
                },
            );
            let par = min_length_word_with(
                &g,
                &capped,
                &SearchOptions {
                    threads: Some(3),
                    ..Default::default()
                },
            );
            assert_eq!(seq, par);
        }
    }

    #[test]
    fn symmetry_reduction_keeps_lengths() {
        for g in [
            Graph::cycle(5).unwrap(),
            Graph::path(4).unwrap(),
            Graph::complete(3).unwrap(),
        ] {
            let b = budget(&g);
            let plain = min_length_word(&g, &b).unwrap().unwrap();
            let reduced = min_length_word_with(
                &g,
                &b,
                &SearchOptions {
                    symmetry_reduction: true,
                    ..Default::default()
                },
            )
            .unwrap()
            .unwrap();
            assert_eq!(plain.1, reduced.1);
            assert!(g.is_represented_by(&reduced.0));
        }
        assert_eq!(orbit_representatives(&Graph::path(4).unwrap()), [0, 1]);
        assert_eq!(orbit_representatives(&Graph::cycle(5).unwrap()), [0]);
    }

    #[test]
    fn fixed_first_letter() {
        let p3 = Graph::path(3).unwrap();
        let middle = Letter::new("2").unwrap();
        let (word, len) = min_length_word_starting_with(&p3, &middle, &budget(&p3))
            .unwrap()
            .unwrap();
        assert_eq!((word, len), (w("21323"), 5));
        assert!(
            min_length_word_starting_with(&p3, &Letter::new("9").unwrap(), &budget(&p3)).is_err()
        );
    }

    #[test]
    fn representation_numbers() {
        for n in 1..=4 {
            let kn = Graph::complete(n).unwrap();
            assert_eq!(
                representation_number(&kn, &budget(&kn)).unwrap().unwrap().0,
                1
            );
        }
        for g in [Graph::cycle(4).unwrap(), Graph::path(3).unwrap()] {
            let (k, word) = representation_number(&g, &budget(&g)).unwrap().unwrap();
            assert_eq!(k, 2);
            assert_eq!(word.uniformity().unwrap(), Some(2));
            assert!(g.is_represented_by(&word));
        }
    }

    #[test]
    fn audits() {
        let c4 = Graph::cycle(4).unwrap();
        let (word, _) = min_length_word(&c4, &budget(&c4)).unwrap().unwrap();
        let audit = minimal_word_audit(&c4, &word).unwrap();
        assert!(audit.singletons <= 2 && audit.o_max - audit.o_min <= 2);
        assert!(audit.lemma_kap_holds && audit.theorem_di_holds);

        let k4 = Graph::complete(4).unwrap();
        let audit = minimal_word_audit(&k4, &w("1234")).unwrap();
        assert_eq!((audit.singletons, audit.clique_number), (4, 4));
        assert_eq!(audit.o_max - audit.o_min, 0);

        let p3 = Graph::parse("edge a b\nedge b c\n").unwrap();
        let audit = minimal_word_audit(&p3, &w("abac")).unwrap();
        assert_eq!((audit.singletons, audit.clique_number), (2, 2));
        assert_eq!((audit.o_min, audit.o_max, audit.diameter), (1, 2, 2));
        let json = serde_json::to_string(&audit).unwrap();
        assert!(json.starts_with(r#"{"l":4,"word":["a","b","a","c"],"singletons":2"#));

        assert!(matches!(
            minimal_word_audit(&p3, &w("abc")),
            Err(Error::NotRepresenting(_))
        ));
    }
}
