//! Word and sentence splitting strategies.
//!
//! Two word strategies and two sentence strategies are supported. The
//! tokenizer variants are the canonical ones; the alternatives model the
//! behavior of readability libraries that split on whitespace only or drop
//! short sentences.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum WordStrategy {
    /// Raw `split_whitespace` tokens, punctuation attached.
    WhitespaceSplit,
    /// Whitespace tokens with surrounding punctuation stripped; tokens that
    /// contain no alphanumeric characters are dropped.
    #[default]
    Tokenizer,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum SentenceStrategy {
    /// Same boundaries as [`SentenceStrategy::Tokenizer`] but sentences of
    /// fewer than three words are discarded, so headings and short sentences
    /// are under-counted.
    Regex,
    /// Split at `.`, `!`, `?` followed by whitespace; a newline-delimited
    /// line without terminal punctuation also counts as a sentence, so
    /// headings are kept.
    #[default]
    Tokenizer,
}

/// Split into word tokens according to `strategy`.
pub fn words(text: &str, strategy: WordStrategy) -> Vec<&str> {
    match strategy {
        WordStrategy::WhitespaceSplit => text.split_whitespace().collect(),
        WordStrategy::Tokenizer => text
            .split_whitespace()
            .map(trim_outer_punct)
            .filter(|t| t.chars().any(char::is_alphanumeric))
            .collect(),
    }
}

/// Strip leading/trailing non-alphanumeric characters, keeping internal
/// apostrophes, hyphens, and dots ("don't", "opt-out", "e.g").
fn trim_outer_punct(token: &str) -> &str {
    token.trim_matches(|c: char| !c.is_alphanumeric())
}

/// Split into sentences according to `strategy`.
pub fn sentences(text: &str, strategy: SentenceStrategy) -> Vec<&str> {
    let chunks = sentence_chunks(text);
    match strategy {
        SentenceStrategy::Tokenizer => chunks,
        SentenceStrategy::Regex => chunks
            .into_iter()
            .filter(|s| s.split_whitespace().count() >= 3)
            .collect(),
    }
}

/// Base sentence segmentation: boundaries at newlines and at runs of
/// `.`, `!`, `?` followed by whitespace (or end of input). A chunk counts as
/// a sentence only if it contains at least one alphanumeric character.
fn sentence_chunks(text: &str) -> Vec<&str> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut start = 0usize;
    let mut i = 0usize;
    while i < bytes.len() {
        let b = bytes[i];
        if b == b'\n' {
            push_sentence(text, start, i, &mut out);
            start = i + 1;
            i += 1;
        } else if b == b'.' || b == b'!' || b == b'?' {
            let mut j = i + 1;
            while j < bytes.len() && matches!(bytes[j], b'.' | b'!' | b'?') {
                j += 1;
            }
            if j >= bytes.len() || (bytes[j] as char).is_whitespace() {
                push_sentence(text, start, j, &mut out);
                start = j;
            }
            i = j;
        } else {
            i += 1;
        }
    }
    push_sentence(text, start, bytes.len(), &mut out);
    out
}

fn push_sentence<'a>(text: &'a str, start: usize, end: usize, out: &mut Vec<&'a str>) {
    if start >= end {
        return;
    }
    let chunk = text[start..end].trim();
    if chunk.chars().any(char::is_alphanumeric) {
        out.push(chunk);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokenizer_words_strip_punctuation() {
        let toks = words("We collect data, (cookies) and IDs.", WordStrategy::Tokenizer);
        assert_eq!(toks, vec!["We", "collect", "data", "cookies", "and", "IDs"]);
    }

    #[test]
    fn tokenizer_words_drop_punct_only_tokens() {
        let toks = words("data — and :: more", WordStrategy::Tokenizer);
        assert_eq!(toks, vec!["data", "and", "more"]);
    }

    #[test]
    fn whitespace_words_keep_everything() {
        let toks = words("data — and", WordStrategy::WhitespaceSplit);
        assert_eq!(toks.len(), 3);
    }

    #[test]
    fn internal_apostrophe_kept() {
        let toks = words("you don't agree.", WordStrategy::Tokenizer);
        assert_eq!(toks, vec!["you", "don't", "agree"]);
    }

    #[test]
    fn sentences_split_on_terminator_plus_space() {
        let s = sentences("The cat sat. The dog ran.", SentenceStrategy::Tokenizer);
        assert_eq!(s, vec!["The cat sat.", "The dog ran."]);
    }

    #[test]
    fn heading_line_counts_as_sentence() {
        let s = sentences(
            "Privacy Policy\nWe collect data. We share data.",
            SentenceStrategy::Tokenizer,
        );
        assert_eq!(s.len(), 3);
        assert_eq!(s[0], "Privacy Policy");
    }

    #[test]
    fn regex_variant_drops_short_sentences() {
        let s = sentences(
            "Privacy Policy\nWe collect your data. Contact us.",
            SentenceStrategy::Regex,
        );
        assert_eq!(s, vec!["We collect your data."]);
    }

    #[test]
    fn decimal_point_does_not_split() {
        let s = sentences("Version 2.1 applies. See above.", SentenceStrategy::Tokenizer);
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn trailing_text_without_terminator_counts() {
        let s = sentences("We collect data. We share it", SentenceStrategy::Tokenizer);
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn punctuation_only_chunks_are_ignored() {
        assert!(sentences("...", SentenceStrategy::Tokenizer).is_empty());
        assert!(sentences("", SentenceStrategy::Tokenizer).is_empty());
    }
}
