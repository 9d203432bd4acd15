//! Obfuscating-word statistics.
//!
//! Both the text and the obfuscating-word list run through the same
//! preprocessor (strip punctuation and numbers, collapse whitespace,
//! lowercase, drop stop words, Porter-stem) before matching.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::stem::porter_stem;
use crate::stopwords;
use crate::tokenize::{self, SentenceStrategy};
use crate::wordlist::WordList;
use crate::MetricsError;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ObfuscationStats {
    pub obfuscating_word_count: usize,
    /// Fraction of sentences containing at least one obfuscating word.
    pub sentences_with_obfuscating_fraction: f64,
}

pub fn obfuscation(text: &str, obfuscating: &WordList) -> Result<ObfuscationStats, MetricsError> {
    if obfuscating.is_empty() {
        return Err(MetricsError::EmptyInput("obfuscating word list"));
    }
    let stop = stopwords::stop_words();
    let stemmed_list: HashSet<String> = obfuscating
        .iter()
        .flat_map(|entry| preprocess(entry, &stop))
        .collect();

    let sentences = tokenize::sentences(text, SentenceStrategy::Tokenizer);
    let mut count = 0usize;
    let mut sentences_with_hit = 0usize;
    for sentence in &sentences {
        let hits = preprocess(sentence, &stop)
            .filter(|stem| stemmed_list.contains(stem))
            .count();
        count += hits;
        if hits > 0 {
            sentences_with_hit += 1;
        }
    }
    let fraction = if sentences.is_empty() {
        0.0
    } else {
        sentences_with_hit as f64 / sentences.len() as f64
    };
    Ok(ObfuscationStats {
        obfuscating_word_count: count,
        sentences_with_obfuscating_fraction: fraction,
    })
}

/// Strip punctuation and digits, lowercase, drop stop words, stem.
fn preprocess<'a>(text: &'a str, stop: &'a WordList) -> impl Iterator<Item = String> + 'a {
    text.split(|c: char| !c.is_ascii_alphabetic() && c != '\'')
        .map(|token| token.trim_matches('\'').to_lowercase())
        .filter(|token| !token.is_empty() && !stop.contains(token))
        .map(|token| porter_stem(&token.replace('\'', "")))
}
