use thiserror::Error;

use crate::letter::Letter;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid letter {0:?}")]
    InvalidLetter(String),

    #[error("operation requires a nonempty word")]
    EmptyWord,

    #[error("alternation needs two distinct letters, got {0} twice")]
    SameLetter(Letter),

    #[error("letter {0} does not occur in the word")]
    LetterAbsent(Letter),

    #[error("occurrence classes are indexed from 1")]
    ZeroOccurrenceClass,

    #[error("word is not a permutation (letter {0} repeats)")]
    NotAPermutation(Letter),

    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("operation requires a nonempty graph")]
    EmptyGraph,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("self-loop on vertex {0}")]
    SelfLoop(Letter),

    #[error("vertex {0} is not in the graph")]
    UnknownVertex(Letter),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("word does not represent {0}")]
    NotRepresenting(String),

    #[error("no replacement rule for occurrence {index} of {letter}")]
    MissingRule { letter: Letter, index: usize },

    #[error("search budget exhausted after {states} states")]
    BudgetExhausted { states: u64 },
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
