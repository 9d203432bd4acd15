//! Counting strategies, readability formulas, and style statistics.
//!
//! The counting layer is strategy-parameterized because different tokenizer
//! choices (whitespace vs. tokenizer words, regex vs. tokenizer sentences,
//! vowel-group vs. dictionary syllables) produce measurably different
//! readability scores. [`CountingConfig::canonical`] is the configuration the
//! rest of the pipeline uses; the other variants exist for the comparison
//! harness in [`harness`].

pub mod counts;
pub mod dale_chall;
pub mod fixtures;
pub mod harness;
pub mod obfuscation;
pub mod passive;
pub mod readability;
pub mod reading_time;
pub mod spearman;
pub mod stem;
pub mod stopwords;
pub mod syllables;
pub mod tokenize;
pub mod wordclass;
pub mod wordlist;

pub use counts::{count, CharacterStrategy, CountingConfig, TextCounts};
pub use dale_chall::count_difficult_words;
pub use obfuscation::{obfuscation, ObfuscationStats};
pub use passive::{passive_fraction, PassiveStats};
pub use readability::{readability, ReadabilityScores};
pub use reading_time::{annual_reading_hours, time_to_read};
pub use spearman::spearman_rank_corr;
pub use stem::porter_stem;
pub use syllables::{HyphenationDict, SyllableStrategy};
pub use tokenize::{SentenceStrategy, WordStrategy};
pub use wordlist::WordList;

/// Errors produced by the metrics layer.
#[derive(Debug, thiserror::Error)]
pub enum MetricsError {
    /// Readability formulas are undefined for zero words or sentences.
    #[error("readability is undefined for words={words}, sentences={sentences}")]
    UndefinedInput { words: usize, sentences: usize },
    /// Paired-sample operations need inputs of equal length.
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    /// A required word-list file was missing or unreadable.
    #[error("word list {path:?}: {source}")]
    WordList {
        path: std::path::PathBuf,
        source: std::io::Error,
    },
    /// Empty input where at least one element is required.
    #[error("{0}")]
    EmptyInput(&'static str),
}
