//! Medians and the two-sided Wilcoxon signed-rank test for paired data.

use serde::{Deserialize, Serialize};
use statrs::function::erf::erfc;
use thiserror::Error;

/// Largest number of non-zero differences handled by the exact null
/// distribution; larger samples use the normal approximation.
pub const EXACT_MAX_N: usize = 25;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StatsError {
    #[error("no values")]
    Empty,
    #[error("value at index {0} is not finite")]
    NonFinite(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WilcoxonMethod {
    Exact,
    NormalApprox,
}

impl WilcoxonMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            WilcoxonMethod::Exact => "exact",
            WilcoxonMethod::NormalApprox => "normal_approx",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WilcoxonResult {
    /// `min(W+, W-)`.
    pub w_statistic: f64,
    pub w_plus: f64,
    pub w_minus: f64,
    /// Number of non-zero differences.
    pub n_effective: usize,
    /// Two-sided p-value; `None` when every difference is zero.
    pub p_value: Option<f64>,
    pub method: WilcoxonMethod,
}

impl WilcoxonResult {
    pub fn is_degenerate(&self) -> bool {
        self.p_value.is_none()
    }
}

/// Middle order statistic, or the mean of the two middle values.
pub fn median(values: &[f64]) -> Result<f64, StatsError> {
    if values.is_empty() {
        return Err(StatsError::Empty);
    }
    if let Some(i) = values.iter().position(|v| !v.is_finite()) {
        return Err(StatsError::NonFinite(i));
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mid = sorted.len() / 2;
    Ok(if sorted.len() % 2 == 1 {
        sorted[mid]
    } else {
        0.5 * (sorted[mid - 1] + sorted[mid])
    })
}

/// Ranks `1..=n` of `values`, ties sharing their average rank.
pub fn average_ranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = vec![0.0; values.len()];
    let mut i = 0;
    while i < order.len() {
        let mut j = i + 1;
        while j < order.len() && values[order[j]] == values[order[i]] {
            j += 1;
        }
        // positions i..j share ranks i+1..=j
        let avg = (i + 1 + j) as f64 / 2.0;
        for &k in &order[i..j] {
            ranks[k] = avg;
        }
        i = j;
    }
    ranks
}

/// Two-sided Wilcoxon signed-rank test on paired differences.
///
/// Zero differences are dropped. With at most [`EXACT_MAX_N`] remaining
/// differences the p-value comes from the exact null distribution of `W+`
/// over all `2^n` sign assignments of the (tie-averaged) ranks; otherwise
/// from a normal approximation with tie-corrected variance and continuity
/// correction.
pub fn wilcoxon_signed_rank(diffs: &[f64]) -> Result<WilcoxonResult, StatsError> {
    if diffs.is_empty() {
        return Err(StatsError::Empty);
    }
    if let Some(i) = diffs.iter().position(|v| !v.is_finite()) {
        return Err(StatsError::NonFinite(i));
    }
    let nonzero: Vec<f64> = diffs.iter().copied().filter(|&d| d != 0.0).collect();
    let n = nonzero.len();
    if n == 0 {
        return Ok(WilcoxonResult {
            w_statistic: 0.0,
            w_plus: 0.0,
            w_minus: 0.0,
            n_effective: 0,
            p_value: None,
            method: WilcoxonMethod::Exact,
        });
    }

    let abs: Vec<f64> = nonzero.iter().map(|d| d.abs()).collect();
    let ranks = average_ranks(&abs);
    let w_plus: f64 = nonzero
        .iter()
        .zip(&ranks)
        .filter(|(d, _)| **d > 0.0)
        .map(|(_, r)| r)
        .sum();
    let total = (n * (n + 1)) as f64 / 2.0;
    let w_minus = total - w_plus;
    let w = w_plus.min(w_minus);

    let (p, method) = if n <= EXACT_MAX_N {
        (exact_p(&ranks, w), WilcoxonMethod::Exact)
    } else {
        (normal_p(&abs, &ranks, w_plus), WilcoxonMethod::NormalApprox)
    };
    Ok(WilcoxonResult {
        w_statistic: w,
        w_plus,
        w_minus,
        n_effective: n,
        p_value: Some(p.clamp(0.0, 1.0)),
        method,
    })
}

/// `min(1, 2 P(W+ <= w))` under the null. Average ranks are multiples of
/// one half, so the distribution is counted over doubled ranks, which are
/// integers.
fn exact_p(ranks: &[f64], w: f64) -> f64 {
    let doubled: Vec<usize> = ranks.iter().map(|r| (2.0 * r).round() as usize).collect();
    let max_sum: usize = doubled.iter().sum();
    let mut counts = vec![0u64; max_sum + 1];
    counts[0] = 1;
    let mut reach = 0;
    for &r in &doubled {
        for s in (0..=reach).rev() {
            if counts[s] > 0 {
                counts[s + r] += counts[s];
            }
        }
        reach += r;
    }
    let limit = (2.0 * w).round() as usize;
    let tail: u64 = counts[..=limit.min(max_sum)].iter().sum();
    let all = 2f64.powi(ranks.len() as i32);
    (2.0 * tail as f64 / all).min(1.0)
}

fn normal_p(abs: &[f64], ranks: &[f64], w_plus: f64) -> f64 {
    let n = ranks.len() as f64;
    let mean = n * (n + 1.0) / 4.0;
    let mut var = n * (n + 1.0) * (2.0 * n + 1.0) / 24.0;
    // tie correction: sum of t^3 - t over groups of equal |diff|
    let mut sorted = abs.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i + 1;
        while j < sorted.len() && sorted[j] == sorted[i] {
            j += 1;
        }
        let t = (j - i) as f64;
        var -= (t * t * t - t) / 48.0;
        i = j;
    }
    if var <= 0.0 {
        return 1.0;
    }
    let z = ((w_plus - mean).abs() - 0.5).max(0.0) / var.sqrt();
    erfc(z / std::f64::consts::SQRT_2)
}
