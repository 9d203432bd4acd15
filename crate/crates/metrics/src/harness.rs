//! Counting-strategy comparison harness.
//!
//! Measures how far each counting configuration deviates from the manual
//! ground-truth counts, and how consistently two configurations rank texts
//! by Flesch Reading Ease.

use crate::counts::{count, CountingConfig};
use crate::fixtures::HandCountedPassage;
use crate::readability::readability;
use crate::spearman::spearman_rank_corr;
use crate::MetricsError;

/// Relative deviations (computed − manual) / manual, one entry per passage.
#[derive(Debug, Clone)]
pub struct DeviationReport {
    pub config: CountingConfig,
    pub words: Vec<f64>,
    pub sentences: Vec<f64>,
    pub syllables: Vec<f64>,
    pub characters: Vec<f64>,
}

impl DeviationReport {
    pub fn mean_sentence_deviation(&self) -> f64 {
        mean(&self.sentences)
    }

    pub fn max_abs(&self, field: fn(&Self) -> &[f64]) -> f64 {
        field(self)
            .iter()
            .fold(0.0_f64, |acc, d| acc.max(d.abs()))
    }
}

fn mean(xs: &[f64]) -> f64 {
    if xs.is_empty() {
        0.0
    } else {
        xs.iter().sum::<f64>() / xs.len() as f64
    }
}

fn relative(computed: usize, manual: usize) -> f64 {
    (computed as f64 - manual as f64) / manual as f64
}

/// Deviation of `config` from the manual counts over `passages`.
pub fn evaluate(passages: &[HandCountedPassage], config: CountingConfig) -> DeviationReport {
    let mut report = DeviationReport {
        config,
        words: Vec::with_capacity(passages.len()),
        sentences: Vec::with_capacity(passages.len()),
        syllables: Vec::with_capacity(passages.len()),
        characters: Vec::with_capacity(passages.len()),
    };
    for passage in passages {
        let counts = count(passage.text, config);
        report.words.push(relative(counts.words, passage.words));
        report
            .sentences
            .push(relative(counts.sentences, passage.sentences));
        report
            .syllables
            .push(relative(counts.syllables, passage.syllables));
        report
            .characters
            .push(relative(counts.characters, passage.characters));
    }
    report
}

/// Flesch Reading Ease of each text under `config`.
pub fn fre_scores(texts: &[String], config: CountingConfig) -> Result<Vec<f64>, MetricsError> {
    texts
        .iter()
        .map(|text| readability(&count(text, config)).map(|s| s.fre))
        .collect()
}

/// Spearman rank correlation between the FRE rankings two configurations
/// produce over the same corpus.
pub fn fre_rank_consistency(
    texts: &[String],
    a: CountingConfig,
    b: CountingConfig,
) -> Result<f64, MetricsError> {
    let fa = fre_scores(texts, a)?;
    let fb = fre_scores(texts, b)?;
    spearman_rank_corr(&fa, &fb)
}
