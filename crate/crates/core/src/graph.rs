//! Simple undirected graphs over named vertices.
//!
//! Text format, one directive per line:
//!
//! ```text
//! # comment
//! vertex a
//! edge a b
//! ```
//!
//! `edge` declares its endpoints implicitly. Serialization lists every vertex
//! in declaration order followed by the edges sorted by endpoint names.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::letter::Letter;
use crate::word::{alternation_matrix, Word};

/// Finite simple undirected graph. Equality compares vertex and edge sets
/// by name; declaration order only affects output.
#[derive(Debug, Clone, Default)]
pub struct Graph {
    vertices: Vec<Letter>,
    index: HashMap<Letter, usize>,
    adjacency: Vec<BTreeSet<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardKind {
    Complete,
    Path,
    Cycle,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Declares `v` if new; returns its index either way.
    pub fn add_vertex(&mut self, v: Letter) -> usize {
        if let Some(&i) = self.index.get(&v) {
            return i;
        }
        let i = self.vertices.len();
        self.index.insert(v.clone(), i);
        self.vertices.push(v);
        self.adjacency.push(BTreeSet::new());
        i
    }

    pub fn add_edge(&mut self, a: Letter, b: Letter) -> Result<()> {
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        let i = self.add_vertex(a);
        let j = self.add_vertex(b);
        self.adjacency[i].insert(j);
        self.adjacency[j].insert(i);
        Ok(())
    }

    pub fn from_edges<I, A, B>(vertices: impl IntoIterator<Item = Letter>, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (A, B)>,
        A: Into<Letter>,
        B: Into<Letter>,
    {
        let mut g = Graph::new();
        for v in vertices {
            g.add_vertex(v);
        }
        for (a, b) in edges {
            g.add_edge(a.into(), b.into())?;
        }
        Ok(g)
    }

    /// Kₙ, Pₙ or Cₙ on vertices `1..=n`.
    pub fn standard(kind: StandardKind, n: usize) -> Result<Self> {
        let min = if kind == StandardKind::Cycle { 3 } else { 1 };
        if n < min {
            return Err(Error::InvalidParameter(format!(
                "{kind:?} graph needs n >= {min}, got {n}"
            )));
        }
        let v = |i: usize| Letter::new(i.to_string()).expect("numeric names are atoms");
        let mut g = Graph::new();
        for i in 1..=n {
            g.add_vertex(v(i));
        }
        let mut edge = |i, j| g.add_edge(v(i), v(j)).expect("distinct endpoints");
        match kind {
            StandardKind::Complete => {
                for i in 1..=n {
                    for j in i + 1..=n {
                        edge(i, j);
                    }
                }
            }
            StandardKind::Path | StandardKind::Cycle => {
                for i in 1..n {
                    edge(i, i + 1);
                }
                if kind == StandardKind::Cycle {
                    edge(n, 1);
                }
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        Self::standard(StandardKind::Complete, n)
    }

    pub fn path(n: usize) -> Result<Self> {
        Self::standard(StandardKind::Path, n)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        Self::standard(StandardKind::Cycle, n)
    }

    /// The graph a word represents: its distinct letters (in order of first
    /// occurrence) with an edge for every alternating pair.
    pub fn from_word(word: &Word) -> Result<Self> {
        let alphabet = word.initial_permutation()?;
        let mut g = Graph::new();
        for v in alphabet.iter() {
            g.add_vertex(v.clone());
        }
        let n = g.order();
        let indices: Vec<usize> = word.iter().map(|v| g.index[v]).collect();
        let alternating = alternation_matrix(&indices, n);
        for i in 0..n {
            for j in i + 1..n {
                if alternating[i * n + j] {
                    g.adjacency[i].insert(j);
                    g.adjacency[j].insert(i);
                }
            }
        }
        Ok(g)
    }

    /// Whether `word` represents this graph: same alphabet, and letters
    /// alternate exactly on edges. Mismatched alphabets give `false`.
    pub fn is_represented_by(&self, word: &Word) -> bool {
        let n = self.order();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut indices = Vec::with_capacity(word.len());
        for letter in word.iter() {
            match self.index.get(letter) {
                Some(&i) => {
                    seen[i] = true;
                    indices.push(i);
                }
                None => return false,
            }
        }
        seen.iter().all(|&s| s) && self.matches_alternation(&indices)
    }

    /// Representation check over a word already mapped to vertex indices.
    pub(crate) fn matches_alternation(&self, indices: &[usize]) -> bool {
        let n = self.order();
        let alternating = alternation_matrix(indices, n);
        (0..n).all(|i| (i + 1..n).all(|j| alternating[i * n + j] == self.adjacency[i].contains(&j)))
    }

    pub fn vertices(&self) -> &[Letter] {
        &self.vertices
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn size(&self) -> usize {
        self.adjacency.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: &Letter) -> bool {
        self.index.contains_key(v)
    }

    pub fn index_of(&self, v: &Letter) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn has_edge(&self, a: &Letter, b: &Letter) -> bool {
        match (self.index.get(a), self.index.get(b)) {
            (Some(&i), Some(&j)) => self.adjacency[i].contains(&j),
            _ => false,
        }
    }

    pub(crate) fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency[i].contains(&j)
    }

    pub(crate) fn degree_at(&self, i: usize) -> usize {
        self.adjacency[i].len()
    }

    pub fn degree(&self, v: &Letter) -> Option<usize> {
        self.index.get(v).map(|&i| self.adjacency[i].len())
    }

    pub fn neighbors(&self, v: &Letter) -> Option<impl Iterator<Item = &Letter> + '_> {
        let i = *self.index.get(v)?;
        Some(self.adjacency[i].iter().map(move |&j| &self.vertices[j]))
    }

    /// Edges as name pairs `(a, b)` with `a < b`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(Letter, Letter)> {
        let mut edges: Vec<(Letter, Letter)> = self
            .adjacency
            .iter()
            .enumerate()
            .flat_map(|(i, nbrs)| {
                nbrs.iter().filter(move |&&j| j > i).map(move |&j| {
                    let (a, b) = (&self.vertices[i], &self.vertices[j]);
                    if a < b {
                        (a.clone(), b.clone())
                    } else {
                        (b.clone(), a.clone())
                    }
                })
            })
            .collect();
        edges.sort();
        edges
    }

    /// Size of a maximum clique (κ_G), by branch and bound.
    pub fn clique_number(&self) -> Result<usize> {
        if self.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let mut best = 0;
        let candidates: Vec<usize> = (0..self.order()).collect();
        self.extend_clique(0, &candidates, &mut best);
        Ok(best)
    }

    fn extend_clique(&self, size: usize, candidates: &[usize], best: &mut usize) {
        if candidates.is_empty() {
            *best = (*best).max(size);
            return;
        }
        for (k, &v) in candidates.iter().enumerate() {
            if size + candidates.len() - k <= *best {
                return;
            }
            let next: Vec<usize> = candidates[k + 1..]
                .iter()
                .copied()
                .filter(|&u| self.adjacency[v].contains(&u))
                .collect();
            self.extend_clique(size + 1, &next, best);
        }
    }

    /// Largest shortest-path distance, one BFS per vertex.
    pub fn diameter(&self) -> Result<usize> {
        if self.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let mut diameter = 0;
        for source in 0..self.order() {
            let dist = self.bfs(source);
            for d in dist {
                diameter = diameter.max(d.ok_or(Error::Disconnected)?);
            }
        }
        Ok(diameter)
    }

    pub fn is_connected(&self) -> bool {
        !self.is_empty() && self.bfs(0).iter().all(Option::is_some)
    }

    fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0);
            for &v in &self.adjacency[u] {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Same graph with every vertex renamed through `f`, declaration order kept.
    pub fn relabel(&self, mut f: impl FnMut(&Letter) -> Letter) -> Result<Self> {
        let names: Vec<Letter> = self.vertices.iter().map(&mut f).collect();
        let mut g = Graph::new();
        for v in &names {
            g.add_vertex(v.clone());
        }
        if g.order() != names.len() {
            return Err(Error::InvalidParameter(
                "relabelling is not injective".into(),
            ));
        }
        for (i, nbrs) in self.adjacency.iter().enumerate() {
            for &j in nbrs.iter().filter(|&&j| j > i) {
                g.add_edge(names[i].clone(), names[j].clone())?;
            }
        }
        Ok(g)
    }

    /// Subgraph induced on the given vertices, in the given order.
    pub fn induced<'a>(&self, keep: impl IntoIterator<Item = &'a Letter>) -> Result<Self> {
        let mut g = Graph::new();
        let mut kept = Vec::new();
        for v in keep {
            let i = self
                .index_of(v)
                .ok_or_else(|| Error::UnknownVertex(v.clone()))?;
            g.add_vertex(v.clone());
            kept.push(i);
        }
        for &i in &kept {
            for &j in &kept {
                if i < j && self.adjacency[i].contains(&j) {
                    g.add_edge(self.vertices[i].clone(), self.vertices[j].clone())?;
                }
            }
        }
        Ok(g)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut g = Graph::new();
        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            let content = raw.split('#').next().unwrap_or("");
            let mut tokens = tokens_with_columns(content);
            let Some((col, directive)) = tokens.next() else {
                continue;
            };
            let mut operand = |what: &str| {
                let (c, tok) = tokens
                    .next()
                    .ok_or_else(|| Error::parse(line, raw.len() + 1, format!("missing {what}")))?;
                Letter::new(tok)
                    .map_err(|_| Error::parse(line, c, format!("invalid vertex name {tok:?}")))
            };
            match directive {
                "vertex" => {
                    let v = operand("vertex name")?;
                    g.add_vertex(v);
                }
                "edge" => {
                    let a = operand("first endpoint")?;
                    let b = operand("second endpoint")?;
                    if a == b {
                        return Err(Error::parse(line, col, format!("self-loop on {a}")));
                    }
                    g.add_edge(a, b)?;
                }
                other => {
                    return Err(Error::parse(
                        line,
                        col,
                        format!("unknown directive {other:?}"),
                    ));
                }
            }
            if let Some((c, extra)) = tokens.next() {
                return Err(Error::parse(line, c, format!("unexpected token {extra:?}")));
            }
        }
        Ok(g)
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

// 1-based column of each whitespace-separated token.
fn tokens_with_columns(s: &str) -> impl Iterator<Item = (usize, &str)> {
    s.split_whitespace().map(move |tok| {
        let offset = tok.as_ptr() as usize - s.as_ptr() as usize;
        (s[..offset].chars().count() + 1, tok)
    })
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.order() == other.order()
            && self.vertices.iter().all(|v| other.contains(v))
            && self.edges() == other.edges()
    }
}

impl Eq for Graph {}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.vertices {
            writeln!(f, "vertex {v}")?;
        }
        for (a, b) in self.edges() {
            writeln!(f, "edge {a} {b}")?;
        }
        Ok(())
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Graph::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> Letter {
        Letter::new(s).unwrap()
    }

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn path_abc() -> Graph {
        Graph::from_edges(
            [l("a"), l("b"), l("c")],
            [(l("a"), l("b")), (l("b"), l("c"))],
        )
        .unwrap()
    }

    #[test]
    fn graph_from_word_examples() {
        assert_eq!(Graph::from_word(&w("abac")).unwrap(), path_abc());
        let k3 = Graph::from_word(&w("abc")).unwrap();
        assert_eq!(k3.size(), 3);
        let pair = Graph::from_word(&w("aabb")).unwrap();
        assert_eq!((pair.order(), pair.size()), (2, 0));
        assert_eq!(Graph::from_word(&Word::empty()), Err(Error::EmptyWord));
    }

    #[test]
    fn representation_examples() {
        let k3 = Graph::from_edges(
            [l("a"), l("b"), l("c")],
            [(l("a"), l("b")), (l("b"), l("c")), (l("a"), l("c"))],
        )
        .unwrap();
        assert!(path_abc().is_represented_by(&w("abac")));
        assert!(k3.is_represented_by(&w("abc")));
        assert!(!k3.is_represented_by(&w("aabc")));
        // alphabet mismatches are a plain "no"
        assert!(!k3.is_represented_by(&w("ab")));
        assert!(!k3.is_represented_by(&w("abcd")));
        assert!(!k3.is_represented_by(&Word::empty()));
    }

    #[test]
    fn clique_numbers() {
        for n in 1..=5 {
            assert_eq!(Graph::complete(n).unwrap().clique_number().unwrap(), n);
        }
        assert_eq!(Graph::cycle(4).unwrap().clique_number().unwrap(), 2);
        assert_eq!(Graph::path(3).unwrap().clique_number().unwrap(), 2);
        assert_eq!(Graph::new().clique_number(), Err(Error::EmptyGraph));
    }

    #[test]
    fn diameters() {
        for n in 2..=5 {
            assert_eq!(Graph::complete(n).unwrap().diameter().unwrap(), 1);
        }
        assert_eq!(Graph::complete(1).unwrap().diameter().unwrap(), 0);
        assert_eq!(Graph::cycle(4).unwrap().diameter().unwrap(), 2);
        assert_eq!(Graph::path(3).unwrap().diameter().unwrap(), 2);
        let split = Graph::from_word(&w("aabb")).unwrap();
        assert_eq!(split.diameter(), Err(Error::Disconnected));
    }

    #[test]
    fn standard_graphs() {
        assert_eq!(Graph::complete(3).unwrap().size(), 3);
        assert_eq!(Graph::path(2).unwrap(), Graph::complete(2).unwrap());
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!((c4.order(), c4.size()), (4, 4));
        assert!(c4.has_edge(&l("4"), &l("1")));
        assert!(Graph::cycle(2).is_err());
        assert!(Graph::path(0).is_err());
        assert!(Graph::complete(0).is_err());
    }

    #[test]
    fn equality_ignores_declaration_order() {
        let a = Graph::from_edges([l("x"), l("y")], [(l("x"), l("y"))]).unwrap();
        let b = Graph::from_edges([l("y"), l("x")], [(l("y"), l("x"))]).unwrap();
        assert_eq!(a, b);
        let c = Graph::from_edges([l("x"), l("y")], Vec::<(Letter, Letter)>::new()).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn text_round_trip() {
        let text = "# a path\nvertex c\nedge b a   # trailing comment\n\nedge b c\nvertex lonely\n";
        let g = Graph::parse(text).unwrap();
        assert_eq!(g.vertices(), &[l("c"), l("b"), l("a"), l("lonely")]);
        let out = g.to_text();
        assert_eq!(
            out,
            "vertex c\nvertex b\nvertex a\nvertex lonely\nedge a b\nedge b c\n"
        );
        assert_eq!(Graph::parse(&out).unwrap(), g);
    }

    #[test]
    fn parse_diagnostics() {
        let err = Graph::parse("vertex a\n  frob a b\n").unwrap_err();
        assert!(
            matches!(
                err,
                Error::Parse {
                    line: 2,
                    column: 3,
                    ..
                }
            ),
            "{err}"
        );
        let err = Graph::parse("edge a\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }), "{err}");
        let err = Graph::parse("edge a a\n").unwrap_err();
        assert!(
            matches!(
                err,
                Error::Parse {
                    line: 1,
                    column: 1,
                    ..
                }
            ),
            "{err}"
        );
        let err = Graph::parse("vertex a b\n").unwrap_err();
        assert!(
            matches!(
                err,
                Error::Parse {
                    line: 1,
                    column: 10,
                    ..
                }
            ),
            "{err}"
        );
        let err = Graph::parse("edge a b^\n").unwrap_err();
        assert!(
            matches!(
                err,
                Error::Parse {
                    line: 1,
                    column: 8,
                    ..
                }
            ),
            "{err}"
        );
    }

    #[test]
    fn pair_vertex_names_parse() {
        let g = Graph::parse("edge (a^b)^c a^b\n").unwrap();
        assert!(g.contains(&l("(a^b)^c")));
    }

    #[test]
    fn relabel_and_induce() {
        let g = path_abc();
        let h = g.relabel(|v| l(&format!("{v}{v}"))).unwrap();
        assert!(h.has_edge(&l("aa"), &l("bb")));
        assert!(g.relabel(|_| l("z")).is_err());
        let sub = g.induced(&[l("a"), l("c")]).unwrap();
        assert_eq!(sub.size(), 0);
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
            fn word_represents_its_graph(word in word_over(5, 14)) {
                let g = Graph::from_word(&word).unwrap();
                prop_assert!(g.is_represented_by(&word));
            }

            #[test]
            fn reverse_preserves_representation(word in word_over(5, 14)) {
                let g = Graph::from_word(&word).unwrap();
                prop_assert!(g.is_represented_by(&word.reverse()));
            }

            #[test]
            fn initial_permutation_prefix_preserves_representation(word in word_over(5, 14)) {
                let g = Graph::from_word(&word).unwrap();
                let prefixed = word.initial_permutation().unwrap().concat(&word);
                prop_assert!(g.is_represented_by(&prefixed));
            }

            #[test]
            fn neighbours_lie_between_consecutive_occurrences(word in word_over(5, 14)) {
                let g = Graph::from_word(&word).unwrap();
                let letters = word.letters();
                for (i, x) in letters.iter().enumerate() {
                    let Some(j) = letters[i + 1..].iter().position(|y| y == x) else { continue };
                    let between = Word::new(letters[i + 1..i + 1 + j].to_vec());
                    let singles = between.occurrence_class(1).unwrap();
                    for y in g.neighbors(x).unwrap() {
                        prop_assert!(singles.contains(y), "{y} adjacent to {x} in {word}");
                    }
                }
            }
        }
    }
}
