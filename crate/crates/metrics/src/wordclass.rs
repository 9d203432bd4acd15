//! Word classification shared by the Gunning-Fog and Dale-Chall counts:
//! proper-name detection and the complex-word rule.
//!
//! A proper name is approximated as a capitalized token that does not open a
//! sentence; full named-entity recognition is out of scope.

use crate::syllables::{self, HyphenationDict, SyllableStrategy};
use crate::tokenize::{self, SentenceStrategy, WordStrategy};

/// Word tokens of `text` with a sentence-start flag per token.
pub(crate) fn tokens_with_sentence_starts(text: &str) -> Vec<(&str, bool)> {
    let mut out = Vec::new();
    for sentence in tokenize::sentences(text, SentenceStrategy::Tokenizer) {
        for (i, token) in tokenize::words(sentence, WordStrategy::Tokenizer)
            .into_iter()
            .enumerate()
        {
            out.push((token, i == 0));
        }
    }
    out
}

pub(crate) fn is_capitalized(token: &str) -> bool {
    token.chars().next().is_some_and(|c| c.is_uppercase())
}

/// Gunning-Fog complex words: three or more syllables after stripping a
/// final `-es`, `-ed`, or `-ing`, with proper names exempt. The familiar-
/// jargon and compound-word exemptions are not modeled.
pub fn count_complex_words(
    text: &str,
    strategy: SyllableStrategy,
    dict: Option<&HyphenationDict>,
) -> usize {
    tokens_with_sentence_starts(text)
        .into_iter()
        .filter(|(token, sentence_start)| {
            if is_capitalized(token) && !sentence_start {
                return false;
            }
            let stripped = strip_common_suffix(token);
            syllables::count_word(stripped, strategy, dict) >= 3
        })
        .count()
}

/// Strip one of `-es`, `-ed`, `-ing` if a vowel remains afterwards.
fn strip_common_suffix(token: &str) -> &str {
    let lower_has_vowel =
        |s: &str| s.chars().any(|c| matches!(c.to_ascii_lowercase(), 'a' | 'e' | 'i' | 'o' | 'u' | 'y'));
    for suffix in ["ing", "ed", "es"] {
        if let Some(stem) = token
            .strip_suffix(suffix)
            .or_else(|| token.strip_suffix(&suffix.to_uppercase()))
        {
            if lower_has_vowel(stem) {
                return stem;
            }
        }
    }
    token
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complex(text: &str) -> usize {
        count_complex_words(text, SyllableStrategy::VowelGroups, None)
    }

    #[test]
    fn suffix_stripping_removes_complexity() {
        // collecting -> collect (2 syllables) -> not complex
        assert_eq!(complex("we are collecting data"), 0);
        // immediately stays complex
        assert_eq!(complex("we delete it immediately"), 1);
    }

    #[test]
    fn proper_names_exempt_mid_sentence() {
        assert_eq!(complex("we work with Acknowledgia daily"), 0);
        // sentence-start capitalization is not a proper-name signal
        assert_eq!(complex("Informational text follows here"), 1);
    }

    #[test]
    fn short_stem_keeps_suffix() {
        // "bed" would strip to "b" (no vowel): keep as-is, 1 syllable
        assert_eq!(complex("the bed is small"), 0);
    }
}
