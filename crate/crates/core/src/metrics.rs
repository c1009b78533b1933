//! Evaluation metrics: ROUGE-L over token ids and one-vs-rest action
//! precision/recall over recorded decision logs.

use crate::controller::Action;
use crate::corpus::TokenId;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RougeScore {
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
}

/// Length of the longest common subsequence, two-row DP.
pub fn lcs_len(a: &[TokenId], b: &[TokenId]) -> usize {
    if a.is_empty() || b.is_empty() {
        return 0;
    }
    let m = b.len();
    let mut prev = vec![0usize; m + 1];
    let mut curr = vec![0usize; m + 1];
    for &x in a {
        for (j, &y) in b.iter().enumerate() {
            curr[j + 1] = if x == y {
                prev[j] + 1
            } else {
                prev[j + 1].max(curr[j])
            };
        }
        std::mem::swap(&mut prev, &mut curr);
    }
    prev[m]
}

/// ROUGE-L on token ids. Precision is LCS/|candidate| (0 for an empty
/// candidate), recall is LCS/|reference|, F1 their harmonic mean.
pub fn rouge_l(candidate: &[TokenId], reference: &[TokenId]) -> Result<RougeScore> {
    if reference.is_empty() {
        return Err(Error::InvalidReference);
    }
    if candidate.is_empty() {
        return Ok(RougeScore {
            precision: 0.0,
            recall: 0.0,
            f1: 0.0,
        });
    }
    let lcs = lcs_len(candidate, reference) as f64;
    let precision = lcs / candidate.len() as f64;
    let recall = lcs / reference.len() as f64;
    let f1 = if precision + recall > 0.0 {
        2.0 * precision * recall / (precision + recall)
    } else {
        0.0
    };
    Ok(RougeScore {
        precision,
        recall,
        f1,
    })
}

/// One-vs-rest precision/recall for a single action over a decision log.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PRScore {
    pub action: Action,
    pub precision: f64,
    pub recall: f64,
    pub true_positive: usize,
    pub false_positive: usize,
    pub false_negative: usize,
    /// Set when no gold positives exist, making recall vacuous.
    pub degenerate: bool,
}

/// Count one-vs-rest TP/FP/FN for `target` over `(predicted, gold)` pairs.
/// Precision is defined as 1 when nothing was predicted positive; recall is 0
/// (and flagged degenerate) when no gold positives exist.
pub fn action_pr(log: &[(Action, Action)], target: Action) -> Result<PRScore> {
    if log.is_empty() {
        return Err(Error::EmptyLog);
    }
    let mut tp = 0usize;
    let mut fp = 0usize;
    let mut fneg = 0usize;
    for &(pred, gold) in log {
        match (pred == target, gold == target) {
            (true, true) => tp += 1,
            (true, false) => fp += 1,
            (false, true) => fneg += 1,
            (false, false) => {}
        }
    }
    let precision = if tp + fp == 0 {
        1.0
    } else {
        tp as f64 / (tp + fp) as f64
    };
    let degenerate = tp + fneg == 0;
    let recall = if degenerate {
        0.0
    } else {
        tp as f64 / (tp + fneg) as f64
    };
    Ok(PRScore {
        action: target,
        precision,
        recall,
        true_positive: tp,
        false_positive: fp,
        false_negative: fneg,
        degenerate,
    })
}
