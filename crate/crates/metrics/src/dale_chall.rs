//! Difficult-word counting for the Dale-Chall score.
//!
//! A word is difficult when it is not on the familiar list, with these
//! exemptions: regular plurals and possessives of listed words, regular
//! `-d`/`-ed`/`-es`/`-ing` endings of listed words, numbers of up to four
//! digits, and proper names/places, which are counted at most once per
//! 100-word window.

use std::collections::HashMap;

use crate::wordclass::{is_capitalized, tokens_with_sentence_starts};
use crate::wordlist::WordList;

pub fn count_difficult_words(text: &str, familiar: &WordList) -> usize {
    let mut difficult = 0usize;
    let mut last_proper_hit: HashMap<String, usize> = HashMap::new();

    for (index, (token, sentence_start)) in tokens_with_sentence_starts(text).into_iter().enumerate()
    {
        let normalized = normalize(token);
        if normalized.is_empty() {
            continue;
        }
        if is_short_number(&normalized) {
            continue;
        }
        if is_familiar(&normalized, familiar) {
            continue;
        }
        if is_capitalized(token) && !sentence_start {
            // Proper name off the list: difficult once per 100-word window.
            match last_proper_hit.get(&normalized) {
                Some(&at) if index - at < 100 => {}
                _ => {
                    difficult += 1;
                    last_proper_hit.insert(normalized, index);
                }
            }
            continue;
        }
        difficult += 1;
    }
    difficult
}

/// Lowercase and strip a possessive marker.
fn normalize(token: &str) -> String {
    let lower = token.to_lowercase();
    for marker in ["'s", "\u{2019}s"] {
        if let Some(stem) = lower.strip_suffix(marker) {
            return stem.to_string();
        }
    }
    lower
        .strip_suffix('\'')
        .or_else(|| lower.strip_suffix('\u{2019}'))
        .unwrap_or(&lower)
        .to_string()
}

fn is_short_number(token: &str) -> bool {
    let digits = token.chars().filter(char::is_ascii_digit).count();
    digits > 0 && digits <= 4 && token.chars().all(|c| c.is_ascii_digit() || c == ',' || c == '.')
}

/// Listed directly, or a regular ending of a listed word.
fn is_familiar(word: &str, familiar: &WordList) -> bool {
    if familiar.contains(word) {
        return true;
    }
    for suffix in ["s", "es", "d", "ed", "ing"] {
        if let Some(stem) = word.strip_suffix(suffix) {
            if stem.len() >= 2 && familiar.contains(stem) {
                return true;
            }
            // restore a dropped silent e: filing -> file, shared -> share
            if matches!(suffix, "ing" | "d" | "ed") {
                let restored = format!("{stem}e");
                if stem.len() >= 2 && familiar.contains(&restored) {
                    return true;
                }
            }
            // undouble the final consonant: hopping -> hop
            if matches!(suffix, "ing" | "ed") {
                let chars: Vec<char> = stem.chars().collect();
                if chars.len() >= 3 && chars[chars.len() - 1] == chars[chars.len() - 2] {
                    let undoubled: String = chars[..chars.len() - 1].iter().collect();
                    if familiar.contains(&undoubled) {
                        return true;
                    }
                }
            }
        }
    }
    // plural in -ies of a listed -y word: parties -> party
    if let Some(stem) = word.strip_suffix("ies") {
        if familiar.contains(&format!("{stem}y")) {
            return true;
        }
    }
    false
}
