//! Construction reports and their JSON form.

use std::fmt;

use serde::Serialize;

use crate::letter::Letter;
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Construction {
    GK2,
    KnK2,
    GKn,
    GH,
    RootedK2,
    RootedKn,
    RootedH,
}

impl Construction {
    pub fn tag(self) -> &'static str {
        match self {
            Construction::GK2 => "g-k2",
            Construction::KnK2 => "kn-k2",
            Construction::GKn => "g-kn",
            Construction::GH => "g-h",
            Construction::RootedK2 => "rooted-k2",
            Construction::RootedKn => "rooted-kn",
            Construction::RootedH => "rooted-h",
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Factors {
    pub g_vertices: usize,
    pub h_vertices: usize,
    pub wg_length: usize,
    pub wh_length: usize,
}

/// Outcome of one construction: the word, its length, and the upper bound
/// it is measured against. Bounds substitute the supplied factor words'
/// lengths for the minimum lengths; `certified_minimal` marks reports whose
/// factor words came from the exhaustive search, where the two coincide.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub construction: Construction,
    pub word: Word,
    pub achieved_length: usize,
    pub bound_value: usize,
    pub bound_holds: bool,
    pub verified_represents: bool,
    pub factors: Factors,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub root: Option<Letter>,
    pub certified_minimal: bool,
}

impl BoundReport {
    pub(crate) fn new(
        construction: Construction,
        word: Word,
        bound_value: usize,
        verified_represents: bool,
        factors: Factors,
    ) -> Self {
        let achieved_length = word.len();
        BoundReport {
            construction,
            word,
            achieved_length,
            bound_value,
            bound_holds: achieved_length <= bound_value,
            verified_represents,
            factors,
            root: None,
            certified_minimal: false,
        }
    }

    pub(crate) fn with_root(mut self, root: Letter) -> Self {
        self.root = Some(root);
        self
    }

    /// Marks the factor words as minimum-length representants.
    pub fn certified(mut self, minimal: bool) -> Self {
        self.certified_minimal = minimal;
        self
    }

    /// Both the representation check and the length bound passed.
    pub fn is_success(&self) -> bool {
        self.verified_represents && self.bound_holds
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "construction: {}", self.construction)?;
        if let Some(root) = &self.root {
            writeln!(f, "root: {root}")?;
        }
        writeln!(f, "word: {}", self.word)?;
        writeln!(f, "achieved_length: {}", self.achieved_length)?;
        writeln!(f, "bound_value: {}", self.bound_value)?;
        writeln!(f, "bound_holds: {}", self.bound_holds)?;
        writeln!(f, "verified_represents: {}", self.verified_represents)?;
        writeln!(
            f,
            "factors: |G|={} |H|={} |w_G|={} |w_H|={}",
            self.factors.g_vertices,
            self.factors.h_vertices,
            self.factors.wg_length,
            self.factors.wh_length
        )?;
        write!(f, "certified_minimal: {}", self.certified_minimal)
    }
}
