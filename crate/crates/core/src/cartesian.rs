//! Representants of Cartesian products built from the morphisms `g` and `J`.
//!
//! For words `w_G = u₁…u_k` and `w_H = v₁…v_m`:
//!
//! * `g^{w_H}(w_G) = (u₁^{v₁}…u₁^{v_m}) … (u_k^{v₁}…u_k^{v_m})`
//! * `J^{w_H}(w_G) = (u₁^{v₁}…u_k^{v₁}) … (u₁^{v_m}…u_k^{v_m})`
//!
//! Every construction uses `π(w_G)` as the vertex order `u₁…u_|G|`, so no
//! renaming of the caller's vertices takes place.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::letter::{Letter, PairVertex};
use crate::products::cartesian_product;
use crate::report::{BoundReport, Construction, Factors};
use crate::word::Word;

/// `g^{w_H}(w_G)`: each letter `u` of `w_G` becomes `u^{v₁}…u^{v_m}`.
pub fn morphism_g(w_g: &Word, w_h: &Word) -> Result<Word> {
    if w_g.is_empty() || w_h.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(w_g
        .iter()
        .flat_map(|u| w_h.iter().map(move |v| Letter::pair(u, v)))
        .collect())
}

/// `J^{w_H}(w_G)`: for each letter `v` of `w_H`, all of `w_G` tagged with `v`.
pub fn morphism_j(w_g: &Word, w_h: &Word) -> Result<Word> {
    if w_g.is_empty() || w_h.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(w_h
        .iter()
        .flat_map(|v| w_g.iter().map(move |u| Letter::pair(u, v)))
        .collect())
}

/// Cyclic rotation of a permutation starting at 1-based position `i`:
/// `w_i … w_n w_1 … w_{i-1}`.
pub fn rotation(w: &Word, i: usize) -> Result<Word> {
    if let Some(dup) = first_repeat(w) {
        return Err(Error::NotAPermutation(dup));
    }
    if i == 0 || i > w.len() {
        return Err(Error::IndexOutOfRange {
            index: i,
            len: w.len(),
        });
    }
    let letters = w.letters();
    Ok(letters[i - 1..]
        .iter()
        .chain(&letters[..i - 1])
        .cloned()
        .collect())
}

fn first_repeat(w: &Word) -> Option<Letter> {
    let mut seen = HashSet::new();
    w.iter().find(|l| !seen.insert(*l)).cloned()
}

/// Drops the leading `x` of `w = x U x Z` when `U` covers every other vertex
/// of `g`; returns `w` unchanged otherwise. The result still represents `g`.
pub fn trim_front(w: &Word, g: &Graph) -> Result<Word> {
    if !g.is_represented_by(w) {
        return Err(Error::NotRepresenting("the graph being trimmed".into()));
    }
    Ok(trim_front_once(w, g))
}

/// Mirror of [`trim_front`]: drops the trailing `x` of `w = U x Z x` when `Z`
/// covers every other vertex.
pub fn trim_back(w: &Word, g: &Graph) -> Result<Word> {
    Ok(trim_front(&w.reverse(), g)?.reverse())
}

/// Applies [`trim_front`] until it no longer shortens the word.
pub fn trim_front_fixpoint(w: &Word, g: &Graph) -> Result<Word> {
    let mut current = trim_front(w, g)?;
    loop {
        let next = trim_front_once(&current, g);
        if next.len() == current.len() {
            return Ok(current);
        }
        current = next;
    }
}

/// Applies [`trim_back`] until it no longer shortens the word.
pub fn trim_back_fixpoint(w: &Word, g: &Graph) -> Result<Word> {
    Ok(trim_front_fixpoint(&w.reverse(), g)?.reverse())
}

fn trim_front_once(w: &Word, g: &Graph) -> Word {
    let letters = w.letters();
    let Some(x) = letters.first() else {
        return w.clone();
    };
    let Some(second) = letters[1..].iter().position(|y| y == x) else {
        return w.clone();
    };
    let segment: HashSet<&Letter> = letters[1..1 + second].iter().collect();
    let covers = g.vertices().iter().all(|v| v == x || segment.contains(v));
    if covers {
        Word::new(letters[1..].to_vec())
    } else {
        w.clone()
    }
}

fn fibers(names: impl IntoIterator<Item = impl AsRef<str>>) -> Word {
    names
        .into_iter()
        .map(|n| Letter::new(n).expect("fiber labels are atoms"))
        .collect()
}

fn require_representant(g: &Graph, w: &Word, name: &str) -> Result<()> {
    if g.is_represented_by(w) {
        Ok(())
    } else {
        Err(Error::NotRepresenting(name.to_string()))
    }
}

/// `G □ K₂` from a representant `w_G` of `G`, `V(K₂) = {1, 2}`:
/// `g^{21}(π(w_G)) J^{2}(π(w_G)) g^{12}(w_G)` with two front trims, of length
/// `2|w_G| + 3|G| − 2`.
pub fn construct_g_k2(g: &Graph, w_g: &Word) -> Result<BoundReport> {
    require_representant(g, w_g, "G")?;
    let k2 = Graph::complete(2)?;
    let w_k2 = fibers(["1", "2"]);
    let perm = w_g.initial_permutation()?;
    let mut word = morphism_g(&perm, &w_k2.reverse())?;
    word.extend_from(&morphism_j(&perm, &fibers(["2"]))?);
    word.extend_from(&morphism_g(w_g, &w_k2)?);

    let product = cartesian_product(g, &k2)?;
    for _ in 0..2 {
        word = trim_front_once(&word, &product);
    }
    let verified = product.is_represented_by(&word);
    let m = g.order();
    Ok(BoundReport::new(
        Construction::GK2,
        word,
        2 * w_g.len() + 3 * m - 2,
        verified,
        Factors {
            g_vertices: m,
            h_vertices: 2,
            wg_length: w_g.len(),
            wh_length: 2,
        },
    ))
}

/// `Kₙ □ K₂` with `V(Kₙ) = {1..n}` and `V(K₂) = {a, b}`:
/// `(2ᵇ2ᵃ…nᵇnᵃ)(1ᵇ…nᵇ)(1ᵃ1ᵇ…(n−1)ᵃ(n−1)ᵇ)`, of length `5n − 4`.
pub fn construct_kn_k2(n: usize) -> Result<BoundReport> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "Kn □ K2 needs n >= 2, got {n}"
        )));
    }
    let kn = Graph::complete(n)?;
    let k2 = Graph::parse("edge a b\n")?;
    let vertex = |i: usize| Letter::new(i.to_string()).expect("numeric names are atoms");
    let (a, b) = (Letter::new("a")?, Letter::new("b")?);

    let mut word = Word::empty();
    for i in 2..=n {
        word.push(Letter::pair(&vertex(i), &b));
        word.push(Letter::pair(&vertex(i), &a));
    }
    for i in 1..=n {
        word.push(Letter::pair(&vertex(i), &b));
    }
    for i in 1..n {
        word.push(Letter::pair(&vertex(i), &a));
        word.push(Letter::pair(&vertex(i), &b));
    }

    let verified = cartesian_product(&kn, &k2)?.is_represented_by(&word);
    Ok(BoundReport::new(
        Construction::KnK2,
        word,
        5 * n - 4,
        verified,
        Factors {
            g_vertices: n,
            h_vertices: 2,
            wg_length: n,
            wh_length: 2,
        },
    )
    // a permutation is a minimum-length representant of Kₙ
    .certified(true))
}

/// `G □ Kₙ` for `n ≥ 3`, `V(Kₙ) = {1..n}`, `w_{Kₙ} = 12…n`:
/// `h²(π) J²(π) h³(π) J³(π) … hⁿ(π) Jⁿ(π) h¹(w_G)` where `π = π(w_G)` and
/// `hⁱ = g^{rotation(w_{Kₙ}, i)}`; length `n|w_G| + (n² − 1)|G|`.
pub fn construct_g_kn(g: &Graph, w_g: &Word, n: usize) -> Result<BoundReport> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "G □ Kn needs n >= 3, got {n}"
        )));
    }
    require_representant(g, w_g, "G")?;
    let w_kn = fibers((1..=n).map(|i| i.to_string()));
    let word = rotation_blocks(w_g, &w_kn)?;

    let verified = cartesian_product(g, &Graph::complete(n)?)?.is_represented_by(&word);
    let m = g.order();
    Ok(BoundReport::new(
        Construction::GKn,
        word,
        n * w_g.len() + (n * n - 1) * m,
        verified,
        Factors {
            g_vertices: m,
            h_vertices: n,
            wg_length: w_g.len(),
            wh_length: n,
        },
    ))
}

// h²(π) J^{p₂}(π) … hⁿ(π) J^{pₙ}(π) h¹(w_G) for a fiber permutation p.
fn rotation_blocks(w_g: &Word, fiber_perm: &Word) -> Result<Word> {
    let perm = w_g.initial_permutation()?;
    let mut word = Word::empty();
    for i in 2..=fiber_perm.len() {
        word.extend_from(&morphism_g(&perm, &rotation(fiber_perm, i)?)?);
        word.extend_from(&morphism_j(
            &perm,
            &Word::new(vec![fiber_perm[i - 1].clone()]),
        )?);
    }
    word.extend_from(&morphism_g(w_g, fiber_perm)?);
    Ok(word)
}

/// `G □ H` for arbitrary representants:
/// `h²(π) J^{v₂}(π) … hⁿ(π) J^{vₙ}(π) h¹(w_G) J^{w_H}(σ(w_G))` with
/// `v₁…vₙ = π(w_H)` and `hⁱ = g^{rotation(π(w_H), i)}`. The larger factor
/// plays the role of `G`; when `|G| < |H|` the factors are swapped and the
/// result's coordinates transposed back. Length
/// `n|w_G| + m|w_H| + (n² − 1)m` with `m = |G| ≥ n = |H|`.
pub fn construct_g_h(g: &Graph, w_g: &Word, h: &Graph, w_h: &Word) -> Result<BoundReport> {
    require_representant(g, w_g, "G")?;
    require_representant(h, w_h, "H")?;
    let swap = g.order() < h.order();
    let (big_word, small_word) = if swap { (w_h, w_g) } else { (w_g, w_h) };

    let mut word = rotation_blocks(big_word, &small_word.initial_permutation()?)?;
    word.extend_from(&morphism_j(&big_word.final_permutation()?, small_word)?);
    if swap {
        word = word
            .iter()
            .map(|l| PairVertex::from_letter(l).map(|p| p.transposed().to_letter()))
            .collect::<Result<Word>>()?;
    }

    let verified = cartesian_product(g, h)?.is_represented_by(&word);
    let (m, n) = (g.order().max(h.order()), g.order().min(h.order()));
    Ok(BoundReport::new(
        Construction::GH,
        word,
        n * big_word.len() + m * small_word.len() + (n * n - 1) * m,
        verified,
        Factors {
            g_vertices: g.order(),
            h_vertices: h.order(),
            wg_length: w_g.len(),
            wh_length: w_h.len(),
        },
    ))
}

/// Whether no letter of the report's word occurs more than `k1 + k2 + n`
/// times, for `k1`/`k2`-uniform factor words and `n = min(|G|, |H|)`.
pub fn occurrence_bound_check(report: &BoundReport, k1: usize, k2: usize, n: usize) -> bool {
    let limit = k1 + k2 + n;
    report
        .word
        .multiplicities()
        .iter()
        .all(|(_, k)| *k <= limit)
}
