//! Reading-time estimates at 250 words per minute.

/// Average adult reading speed, words per minute.
pub const WORDS_PER_MINUTE: f64 = 250.0;

/// Unique websites an average user visits per year.
pub const SITES_VISITED_PER_YEAR: f64 = 1462.0;

/// Minutes needed to read `words` words.
pub fn time_to_read(words: usize) -> f64 {
    words as f64 / WORDS_PER_MINUTE
}

/// Hours per year spent reading one average-length policy per visited site.
pub fn annual_reading_hours(mean_policy_words: f64) -> f64 {
    SITES_VISITED_PER_YEAR * (mean_policy_words / WORDS_PER_MINUTE) / 60.0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_minute_per_250_words() {
        assert_eq!(time_to_read(250), 1.0);
        assert_eq!(time_to_read(0), 0.0);
        assert!((time_to_read(4191) - 16.764).abs() < 1e-9);
    }

    #[test]
    fn annual_hours() {
        assert_eq!(annual_reading_hours(0.0), 0.0);
        // 1462 minutes
        assert!((annual_reading_hours(250.0) - 1462.0 / 60.0).abs() < 1e-9);
        // 2008-era mean of ~3200 words lands near the reported 190 hours
        let hours = annual_reading_hours(3200.0);
        assert!((150.0..250.0).contains(&hours), "{hours}");
    }
}
