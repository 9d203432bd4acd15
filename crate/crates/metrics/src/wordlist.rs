//! Loader for the external word-list format: UTF-8, one token per line,
//! `#` starts a comment line.

use std::collections::HashSet;
use std::path::Path;

use crate::MetricsError;

#[derive(Debug, Clone, Default)]
pub struct WordList {
    entries: HashSet<String>,
    order: Vec<String>,
}

impl WordList {
    pub fn parse(contents: &str) -> Self {
        let mut entries = HashSet::new();
        let mut order = Vec::new();
        for line in contents.lines() {
            let token = line.trim();
            if token.is_empty() || token.starts_with('#') {
                continue;
            }
            let token = token.to_lowercase();
            if entries.insert(token.clone()) {
                order.push(token);
            }
        }
        Self { entries, order }
    }

    pub fn load(path: &Path) -> Result<Self, MetricsError> {
        let contents = std::fs::read_to_string(path).map_err(|source| MetricsError::WordList {
            path: path.to_path_buf(),
            source,
        })?;
        Ok(Self::parse(&contents))
    }

    pub fn from_words<I: IntoIterator<Item = S>, S: Into<String>>(words: I) -> Self {
        let mut entries = HashSet::new();
        let mut order = Vec::new();
        for word in words {
            let word = word.into().to_lowercase();
            if entries.insert(word.clone()) {
                order.push(word);
            }
        }
        Self { entries, order }
    }

    /// Case-insensitive membership.
    pub fn contains(&self, word: &str) -> bool {
        if self.entries.contains(word) {
            return true;
        }
        self.entries.contains(&word.to_lowercase())
    }

    /// Entries in file order.
    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.order.iter().map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}
