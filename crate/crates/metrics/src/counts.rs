//! Strategy-parameterized text counting.

use serde::{Deserialize, Serialize};

use crate::syllables::{self, HyphenationDict, SyllableStrategy};
use crate::tokenize::{self, SentenceStrategy, WordStrategy};
use crate::wordlist::WordList;
use crate::{dale_chall, wordclass};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum CharacterStrategy {
    /// Sum of alphabetic characters per word token (no punctuation, digits,
    /// or whitespace).
    #[default]
    PerWordNoPunctNoDigits,
    /// All alphanumeric characters of the raw text (no punctuation, no
    /// whitespace; digits kept).
    FullTextNoPunctNoSpace,
}

/// Which strategy backs each count. [`CountingConfig::canonical`] is the
/// pipeline default; the other combinations exist for the comparison
/// harness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct CountingConfig {
    pub word_strategy: WordStrategy,
    pub sentence_strategy: SentenceStrategy,
    pub syllable_strategy: SyllableStrategy,
    pub character_strategy: CharacterStrategy,
}

impl CountingConfig {
    /// Tokenizer words, tokenizer sentences, vowel-group syllables,
    /// per-word characters.
    pub fn canonical() -> Self {
        Self::default()
    }

    /// All 16 strategy combinations, canonical first.
    pub fn all() -> Vec<Self> {
        let mut out = Vec::with_capacity(16);
        for word in [WordStrategy::Tokenizer, WordStrategy::WhitespaceSplit] {
            for sentence in [SentenceStrategy::Tokenizer, SentenceStrategy::Regex] {
                for syllable in [SyllableStrategy::VowelGroups, SyllableStrategy::HyphenationDict] {
                    for character in [
                        CharacterStrategy::PerWordNoPunctNoDigits,
                        CharacterStrategy::FullTextNoPunctNoSpace,
                    ] {
                        out.push(Self {
                            word_strategy: word,
                            sentence_strategy: sentence,
                            syllable_strategy: syllable,
                            character_strategy: character,
                        });
                    }
                }
            }
        }
        out
    }

    /// Short tag used in harness reports, e.g. `w:tok/s:tok/y:vg/c:word`.
    pub fn tag(&self) -> String {
        let w = match self.word_strategy {
            WordStrategy::Tokenizer => "tok",
            WordStrategy::WhitespaceSplit => "ws",
        };
        let s = match self.sentence_strategy {
            SentenceStrategy::Tokenizer => "tok",
            SentenceStrategy::Regex => "re",
        };
        let y = match self.syllable_strategy {
            SyllableStrategy::VowelGroups => "vg",
            SyllableStrategy::HyphenationDict => "dict",
        };
        let c = match self.character_strategy {
            CharacterStrategy::PerWordNoPunctNoDigits => "word",
            CharacterStrategy::FullTextNoPunctNoSpace => "text",
        };
        format!("w:{w}/s:{s}/y:{y}/c:{c}")
    }
}

/// All counting inputs for the readability formulas.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TextCounts {
    pub words: usize,
    pub sentences: usize,
    pub syllables: usize,
    pub characters: usize,
    /// Words with three or more syllables.
    pub polysyllables: usize,
    /// Words off the familiar list after the exemption rules; `None` when no
    /// familiar list was supplied.
    pub difficult_words: Option<usize>,
    /// Words with three or more syllables after suffix stripping, proper
    /// names exempt.
    pub complex_words: usize,
}

/// Extra inputs for counts that need external word lists.
#[derive(Debug, Clone, Copy, Default)]
pub struct CountContext<'a> {
    /// Familiar-word list; enables the difficult-word count.
    pub familiar: Option<&'a WordList>,
    /// Syllable dictionary for [`SyllableStrategy::HyphenationDict`].
    pub hyphenation: Option<&'a HyphenationDict>,
}

/// Count `text` under `config`.
pub fn count(text: &str, config: CountingConfig) -> TextCounts {
    count_with(text, config, CountContext::default())
}

pub fn count_with(text: &str, config: CountingConfig, ctx: CountContext<'_>) -> TextCounts {
    let words = tokenize::words(text, config.word_strategy);
    let sentences = tokenize::sentences(text, config.sentence_strategy);

    let mut syllables_total = 0usize;
    let mut polysyllables = 0usize;
    let mut characters = 0usize;
    for token in &words {
        let syl = syllables::count_word(token, config.syllable_strategy, ctx.hyphenation);
        syllables_total += syl;
        if syl >= 3 {
            polysyllables += 1;
        }
        if config.character_strategy == CharacterStrategy::PerWordNoPunctNoDigits {
            characters += token.chars().filter(|c| c.is_alphabetic()).count();
        }
    }
    if config.character_strategy == CharacterStrategy::FullTextNoPunctNoSpace {
        characters = text.chars().filter(|c| c.is_alphanumeric()).count();
    }

    let complex_words =
        wordclass::count_complex_words(text, config.syllable_strategy, ctx.hyphenation);
    let difficult_words = ctx
        .familiar
        .map(|list| dale_chall::count_difficult_words(text, list));

    TextCounts {
        words: words.len(),
        sentences: sentences.len(),
        syllables: syllables_total,
        characters,
        polysyllables,
        difficult_words,
        complex_words,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_sentence_fixture() {
        // "The cat sat. The dog ran." by hand: 6 words, 2 sentences,
        // 6 syllables (all monosyllables).
        let c = count("The cat sat. The dog ran.", CountingConfig::canonical());
        assert_eq!(c.words, 6);
        assert_eq!(c.sentences, 2);
        assert_eq!(c.syllables, 6);
        assert_eq!(c.polysyllables, 0);
    }

    #[test]
    fn single_word() {
        let c = count("privacy", CountingConfig::canonical());
        assert_eq!(c.words, 1);
        assert_eq!(c.sentences, 1);
        assert_eq!(c.syllables, 3);
        assert_eq!(c.characters, 7);
        assert_eq!(c.polysyllables, 1);
    }

    #[test]
    fn character_strategies_differ_on_digits() {
        let text = "We keep 120 records.";
        let per_word = count(
            text,
            CountingConfig {
                character_strategy: CharacterStrategy::PerWordNoPunctNoDigits,
                ..CountingConfig::canonical()
            },
        );
        let full_text = count(
            text,
            CountingConfig {
                character_strategy: CharacterStrategy::FullTextNoPunctNoSpace,
                ..CountingConfig::canonical()
            },
        );
        // W-e-k-e-e-p-r-e-c-o-r-d-s = 13 letters; full text adds "120".
        assert_eq!(per_word.characters, 13);
        assert_eq!(full_text.characters, 16);
    }

    #[test]
    fn determinism() {
        let text = "We collect information about your visits. Third parties receive data.";
        for config in CountingConfig::all() {
            if config.syllable_strategy == SyllableStrategy::HyphenationDict {
                continue; // needs a dictionary; falls back identically anyway
            }
            assert_eq!(count(text, config), count(text, config));
        }
    }
}
