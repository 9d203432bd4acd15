//! Passive-voice detection.
//!
//! A sentence is passive when a form of "to be" is followed, within three
//! tokens and skipping adverbs, by a past participle: a regular `-ed` form
//! or a member of the shipped irregular-participle list.

use serde::{Deserialize, Serialize};

use crate::tokenize::{self, SentenceStrategy, WordStrategy};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PassiveStats {
    pub passive_sentence_fraction: f64,
}

const BE_FORMS: &[&str] = &["am", "is", "are", "was", "were", "be", "been", "being"];

/// Irregular past participles that do not end in -ed.
pub const IRREGULAR_PARTICIPLES: &[&str] = &[
    "begun", "bitten", "blown", "bought", "broken", "brought", "built", "caught", "chosen",
    "come", "cut", "dealt", "done", "drawn", "driven", "drunk", "eaten", "fallen", "fed", "felt",
    "fought", "flown", "forbidden", "forgiven", "forgotten", "found", "frozen", "given", "gone",
    "grown", "heard", "held", "hidden", "hit", "hurt", "kept", "known", "laid", "led", "left",
    "lent", "let", "lost", "made", "meant", "met", "paid", "proven", "put", "read", "ridden",
    "risen", "run", "said", "seen", "sent", "set", "shaken", "shown", "shut", "sold", "spent",
    "spoken", "spread", "stolen", "stood", "struck", "sung", "sworn", "taken", "taught", "thought",
    "thrown", "told", "understood", "withdrawn", "won", "worn", "written",
];

pub fn passive_fraction(text: &str) -> PassiveStats {
    let sentences = tokenize::sentences(text, SentenceStrategy::Tokenizer);
    if sentences.is_empty() {
        return PassiveStats {
            passive_sentence_fraction: 0.0,
        };
    }
    let passive = sentences.iter().filter(|s| is_passive(s)).count();
    PassiveStats {
        passive_sentence_fraction: passive as f64 / sentences.len() as f64,
    }
}

fn is_passive(sentence: &str) -> bool {
    let tokens: Vec<String> = tokenize::words(sentence, WordStrategy::Tokenizer)
        .iter()
        .map(|t| t.to_lowercase())
        .collect();
    for (i, token) in tokens.iter().enumerate() {
        if !BE_FORMS.contains(&token.as_str()) {
            continue;
        }
        let mut inspected = 0;
        for follower in tokens.iter().skip(i + 1) {
            if is_adverb(follower) || BE_FORMS.contains(&follower.as_str()) {
                continue; // auxiliaries chain: "is being processed"
            }
            inspected += 1;
            if inspected > 3 {
                break;
            }
            if is_past_participle(follower) {
                return true;
            }
        }
    }
    false
}

fn is_adverb(token: &str) -> bool {
    (token.ends_with("ly") && token.len() > 4) || matches!(token, "not", "never", "also", "always")
}

fn is_past_participle(token: &str) -> bool {
    (token.ends_with("ed") && token.len() > 3) || IRREGULAR_PARTICIPLES.contains(&token)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_passive() {
        let stats = passive_fraction("The data was collected by us.");
        assert_eq!(stats.passive_sentence_fraction, 1.0);
    }

    #[test]
    fn active_voice() {
        let stats = passive_fraction("We collect data.");
        assert_eq!(stats.passive_sentence_fraction, 0.0);
    }

    #[test]
    fn progressive_passive_with_auxiliary_chain() {
        let stats = passive_fraction("Your data is being processed.");
        assert_eq!(stats.passive_sentence_fraction, 1.0);
    }

    #[test]
    fn adverbs_are_skipped() {
        let stats = passive_fraction("Your information is routinely shared with partners.");
        assert_eq!(stats.passive_sentence_fraction, 1.0);
    }

    #[test]
    fn irregular_participle() {
        let stats = passive_fraction("Reasonable measures are taken to secure data.");
        assert_eq!(stats.passive_sentence_fraction, 1.0);
    }

    #[test]
    fn participle_outside_window_is_not_passive() {
        let stats =
            passive_fraction("There is a new privacy policy section that we updated recently.");
        assert_eq!(stats.passive_sentence_fraction, 0.0);
    }

    #[test]
    fn fraction_over_mixed_sentences() {
        let stats = passive_fraction("The data was collected. We delete logs. Data is shared.");
        assert!((stats.passive_sentence_fraction - 2.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn empty_text() {
        assert_eq!(passive_fraction("").passive_sentence_fraction, 0.0);
    }
}
