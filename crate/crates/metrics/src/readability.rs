//! The seven readability formulas.

use serde::{Deserialize, Serialize};

use crate::counts::TextCounts;
use crate::MetricsError;

/// Scores for one text. `smog` is `None` below 30 sentences, where the
/// formula is statistically invalid; `dc` is `None` unless a familiar list
/// was supplied to the counting stage.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReadabilityScores {
    /// Flesch Reading Ease; higher is easier.
    pub fre: f64,
    /// Flesch-Kincaid grade level.
    pub fkg: f64,
    /// Automated Readability Index grade level.
    pub ari: f64,
    /// Coleman-Liau grade level.
    pub cl: f64,
    /// SMOG grade level, absent when sentences < 30.
    pub smog: Option<f64>,
    /// Dale-Chall score, absent without a difficult-word count.
    pub dc: Option<f64>,
    /// Gunning-Fog grade level.
    pub gf: f64,
}

pub fn readability(counts: &TextCounts) -> Result<ReadabilityScores, MetricsError> {
    if counts.words == 0 || counts.sentences == 0 {
        return Err(MetricsError::UndefinedInput {
            words: counts.words,
            sentences: counts.sentences,
        });
    }
    let words = counts.words as f64;
    let sentences = counts.sentences as f64;
    let syllables = counts.syllables as f64;
    let characters = counts.characters as f64;

    let wps = words / sentences;
    let spw = syllables / words;
    let cpw = characters / words;

    let fre = 206.835 - 1.015 * wps - 84.6 * spw;
    let fkg = 0.39 * wps + 11.8 * spw - 15.59;
    let ari = 4.71 * cpw + 0.5 * wps - 21.43;
    let cl = 5.88 * cpw - 29.6 * (sentences / words) - 15.8;
    let smog = (counts.sentences >= 30).then(|| smog_score(counts.polysyllables, counts.sentences));
    let dc = counts.difficult_words.map(|difficult| {
        0.1579 * (difficult as f64 / words * 100.0) + 0.0496 * wps
    });
    let gf = 0.4 * (wps + 100.0 * (counts.complex_words as f64 / words));

    Ok(ReadabilityScores {
        fre,
        fkg,
        ari,
        cl,
        smog,
        dc,
        gf,
    })
}

/// SMOG regardless of the 30-sentence validity floor, for callers that want
/// the flagged value anyway.
pub fn smog_score(polysyllables: usize, sentences: usize) -> f64 {
    1.0430 * (polysyllables as f64 * 30.0 / sentences as f64).sqrt() + 3.1291
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(
        words: usize,
        sentences: usize,
        syllables: usize,
        characters: usize,
        polysyllables: usize,
    ) -> TextCounts {
        TextCounts {
            words,
            sentences,
            syllables,
            characters,
            polysyllables,
            difficult_words: None,
            complex_words: 0,
        }
    }

    #[test]
    fn formula_arithmetic() {
        let scores = readability(&counts(100, 5, 150, 450, 30)).unwrap();
        assert!((scores.fre - 59.635).abs() < 1e-9);
        assert!((scores.fkg - 9.91).abs() < 1e-9);
        assert!((scores.ari - 9.765).abs() < 1e-9);
        assert!((scores.cl - 9.18).abs() < 1e-9);
        assert!(scores.smog.is_none(), "5 sentences is below the SMOG floor");
    }

    #[test]
    fn smog_at_thirty_sentences() {
        let scores = readability(&counts(600, 30, 900, 2700, 30)).unwrap();
        let smog = scores.smog.unwrap();
        assert!((smog - (1.0430 * 30.0_f64.sqrt() + 3.1291)).abs() < 1e-9);
        assert!((smog - 8.841_923_277_591_963).abs() < 1e-9);
    }

    #[test]
    fn dc_and_gf() {
        let mut c = counts(100, 5, 150, 450, 30);
        c.difficult_words = Some(15);
        c.complex_words = 10;
        let scores = readability(&c).unwrap();
        assert!((scores.dc.unwrap() - 3.3605).abs() < 1e-9);
        assert!((scores.gf - 12.0).abs() < 1e-9);
    }

    #[test]
    fn degenerate_single_word() {
        let scores = readability(&counts(1, 1, 1, 1, 0)).unwrap();
        assert!((scores.fre - 121.22).abs() < 1e-9);
    }

    #[test]
    fn zero_words_is_an_error() {
        assert!(readability(&counts(0, 1, 0, 0, 0)).is_err());
        assert!(readability(&counts(1, 0, 1, 1, 0)).is_err());
    }

    #[test]
    fn fre_monotone_in_both_ratios() {
        // linear form: strictly decreasing in syllables/words at fixed
        // words/sentences and vice versa
        let base = readability(&counts(100, 5, 150, 450, 0)).unwrap().fre;
        let more_syllables = readability(&counts(100, 5, 180, 450, 0)).unwrap().fre;
        let longer_sentences = readability(&counts(100, 4, 150, 450, 0)).unwrap().fre;
        assert!(more_syllables < base);
        assert!(longer_sentences < base);
    }
}
