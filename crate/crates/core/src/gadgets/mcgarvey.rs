//! Profile synthesis hitting prescribed pairwise margins: appends paired
//! votes that shift exactly one margin by two while cancelling everywhere
//! else.

use crate::error::{Error, Result};
use crate::model::{CompleteProfile, LinearOrder};
use crate::rules::{pairwise_matrices, Score};

/// A profile `T'` such that the margins of `base ∘ T'` equal `targets`
/// exactly. Requires `targets` skew-symmetric with every entry differing
/// from the base margin by an even amount. The output size is at most
/// `(1/2) Σ (|targets - margins| + 1)` over ordered pairs.
pub fn mcgarvey(base: &CompleteProfile, targets: &[Vec<Score>]) -> Result<CompleteProfile> {
    let m = base.candidate_count();
    if targets.len() != m || targets.iter().any(|row| row.len() != m) {
        return Err(Error::LengthMismatch { left: targets.len(), right: m });
    }
    for a in 0..m {
        if targets[a][a] != 0 {
            return Err(Error::SkewSymmetry { a, b: a });
        }
        for b in a + 1..m {
            if targets[a][b] != -targets[b][a] {
                return Err(Error::SkewSymmetry { a, b });
            }
        }
    }
    let (_, margins) = pairwise_matrices(base);
    for a in 0..m {
        for b in a + 1..m {
            if (targets[a][b] - margins[a][b]) % 2 != 0 {
                return Err(Error::Parity { a, b });
            }
        }
    }

    let mut votes = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            let delta = targets[a][b] - margins[a][b];
            if delta == 0 {
                continue;
            }
            let (hi, lo) = if delta > 0 { (a, b) } else { (b, a) };
            let rest: Vec<usize> = (0..m).filter(|&c| c != a && c != b).collect();
            for _ in 0..delta.abs() / 2 {
                let mut first = vec![hi, lo];
                first.extend_from_slice(&rest);
                let mut second: Vec<usize> = rest.iter().rev().copied().collect();
                second.push(hi);
                second.push(lo);
                votes.push(LinearOrder::new(first)?);
                votes.push(LinearOrder::new(second)?);
            }
        }
    }
    CompleteProfile::new(m, votes)
}
