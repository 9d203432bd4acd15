//! Syllable counting strategies.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum SyllableStrategy {
    /// Count maximal runs of `aeiouy`, discounting a trailing silent `e`.
    #[default]
    VowelGroups,
    /// Look the word up in an external hyphenation dictionary, falling back
    /// to vowel groups for unknown words.
    HyphenationDict,
}

/// External syllable dictionary: token (lowercase) to syllable count.
///
/// The file format is one entry per line, either `pri-va-cy` (count =
/// number of hyphen-separated parts) or `privacy 3`.
#[derive(Debug, Clone, Default)]
pub struct HyphenationDict {
    entries: HashMap<String, usize>,
}

impl HyphenationDict {
    pub fn parse(contents: &str) -> Self {
        let mut entries = HashMap::new();
        for line in contents.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split_whitespace();
            let Some(head) = parts.next() else { continue };
            if let Some(count) = parts.next().and_then(|c| c.parse::<usize>().ok()) {
                entries.insert(head.to_lowercase(), count.max(1));
            } else {
                let count = head.split('-').filter(|p| !p.is_empty()).count().max(1);
                entries.insert(head.replace('-', "").to_lowercase(), count);
            }
        }
        Self { entries }
    }

    pub fn lookup(&self, word: &str) -> Option<usize> {
        self.entries.get(&word.to_lowercase()).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Count syllables in a single word token.
///
/// Non-alphabetic characters are ignored; a token without letters (for
/// example a number) counts as one syllable.
pub fn count_word(word: &str, strategy: SyllableStrategy, dict: Option<&HyphenationDict>) -> usize {
    let letters: String = word
        .chars()
        .filter(|c| c.is_ascii_alphabetic())
        .collect::<String>()
        .to_lowercase();
    if letters.is_empty() {
        return 1;
    }
    if strategy == SyllableStrategy::HyphenationDict {
        if let Some(n) = dict.and_then(|d| d.lookup(&letters)) {
            return n;
        }
    }
    vowel_groups(&letters)
}

/// Maximal runs of `aeiouy` count one syllable each. A trailing silent `e`
/// is discounted unless the word ends in `le` or the `e` merges into the
/// final vowel group ("free", "cookie"). Every word has at least one
/// syllable.
fn vowel_groups(letters: &str) -> usize {
    let chars: Vec<char> = letters.chars().collect();
    let is_vowel = |c: char| matches!(c, 'a' | 'e' | 'i' | 'o' | 'u' | 'y');
    let mut groups = 0usize;
    let mut in_group = false;
    for &c in &chars {
        if is_vowel(c) {
            if !in_group {
                groups += 1;
                in_group = true;
            }
        } else {
            in_group = false;
        }
    }
    let n = chars.len();
    let silent_e = n >= 2
        && chars[n - 1] == 'e'
        && !is_vowel(chars[n - 2])
        && chars[n - 2] != 'l'
        && groups > 1;
    if silent_e {
        groups -= 1;
    }
    groups.max(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vg(word: &str) -> usize {
        count_word(word, SyllableStrategy::VowelGroups, None)
    }

    #[test]
    fn basic_words() {
        assert_eq!(vg("privacy"), 3);
        assert_eq!(vg("policy"), 3);
        assert_eq!(vg("data"), 2);
        assert_eq!(vg("cat"), 1);
        assert_eq!(vg("information"), 4);
    }

    #[test]
    fn silent_e() {
        assert_eq!(vg("house"), 1);
        assert_eq!(vg("service"), 2);
        assert_eq!(vg("website"), 2);
        assert_eq!(vg("share"), 1);
    }

    #[test]
    fn le_ending_keeps_final_group() {
        assert_eq!(vg("table"), 2);
        assert_eq!(vg("responsible"), 4);
    }

    #[test]
    fn trailing_e_in_final_vowel_group_is_not_discounted() {
        assert_eq!(vg("cookie"), 2);
        assert_eq!(vg("free"), 1);
        assert_eq!(vg("agree"), 2);
    }

    #[test]
    fn minimum_one_syllable() {
        assert_eq!(vg("the"), 1);
        assert_eq!(vg("b"), 1);
        assert_eq!(vg("250"), 1);
    }

    #[test]
    fn dictionary_overrides_heuristic() {
        let dict = HyphenationDict::parse("co-o-pe-ra-te\nbusiness 2\n# comment\n");
        assert_eq!(dict.lookup("cooperate"), Some(5));
        assert_eq!(
            count_word("business", SyllableStrategy::HyphenationDict, Some(&dict)),
            2
        );
        // unknown word falls back to vowel groups
        assert_eq!(
            count_word("privacy", SyllableStrategy::HyphenationDict, Some(&dict)),
            3
        );
    }
}
