//! Spearman rank correlation with average ranks for ties.

use crate::MetricsError;

pub fn spearman_rank_corr(a: &[f64], b: &[f64]) -> Result<f64, MetricsError> {
    if a.len() != b.len() {
        return Err(MetricsError::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    if a.len() < 2 {
        return Err(MetricsError::EmptyInput("need at least two observations"));
    }
    let ra = average_ranks(a);
    let rb = average_ranks(b);
    pearson_of_ranks(&ra, &rb)
}

/// 1-based ranks; tied values share the mean of their rank positions.
fn average_ranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&i, &j| values[i].partial_cmp(&values[j]).expect("finite scores"));
    let mut ranks = vec![0.0; values.len()];
    let mut i = 0;
    while i < order.len() {
        let mut j = i;
        while j + 1 < order.len() && values[order[j + 1]] == values[order[i]] {
            j += 1;
        }
        let mean_rank = (i + j) as f64 / 2.0 + 1.0;
        for &idx in &order[i..=j] {
            ranks[idx] = mean_rank;
        }
        i = j + 1;
    }
    ranks
}

fn pearson_of_ranks(x: &[f64], y: &[f64]) -> Result<f64, MetricsError> {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let mut cov = 0.0;
    let mut vx = 0.0;
    let mut vy = 0.0;
    for (xi, yi) in x.iter().zip(y) {
        cov += (xi - mx) * (yi - my);
        vx += (xi - mx).powi(2);
        vy += (yi - my).powi(2);
    }
    if vx == 0.0 || vy == 0.0 {
        return Err(MetricsError::EmptyInput("constant ranking has no correlation"));
    }
    Ok(cov / (vx * vy).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identical_lists() {
        let a = [3.0, 1.0, 2.0, 5.0];
        assert!((spearman_rank_corr(&a, &a).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn reversed_ranking() {
        let a = [1.0, 2.0, 3.0, 4.0];
        let b = [4.0, 3.0, 2.0, 1.0];
        assert!((spearman_rank_corr(&a, &b).unwrap() + 1.0).abs() < 1e-12);
    }

    #[test]
    fn one_transposition() {
        // hand ranks: [1,2,3,4] vs [1,3,2,4] -> rho = 0.8
        let a = [1.0, 2.0, 3.0, 4.0];
        let b = [1.0, 3.0, 2.0, 4.0];
        assert!((spearman_rank_corr(&a, &b).unwrap() - 0.8).abs() < 1e-12);
    }

    #[test]
    fn ties_get_average_ranks() {
        let ranks = average_ranks(&[10.0, 20.0, 20.0, 30.0]);
        assert_eq!(ranks, vec![1.0, 2.5, 2.5, 4.0]);
    }

    #[test]
    fn length_mismatch_is_an_error() {
        assert!(spearman_rank_corr(&[1.0, 2.0], &[1.0]).is_err());
    }
}
