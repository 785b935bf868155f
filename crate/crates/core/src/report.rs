//! Shared machine-readable report shapes.
//!
//! Infinitude claims are never certified; reports carry two desk-scale
//! signals instead: strict growth of a count along a frontier ladder, or
//! exact stabilization between the last two rungs.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "growth-observed")]
    GrowthObserved,
    #[serde(rename = "stabilized")]
    Stabilized,
    #[serde(rename = "inconclusive")]
    Inconclusive,
}

/// Classifies a count sequence along a ladder.
pub fn ladder_verdict(counts: &[u64]) -> Verdict {
    if counts.len() >= 2 && counts.windows(2).all(|w| w[0] < w[1]) {
        Verdict::GrowthObserved
    } else if counts.len() >= 2 && counts[counts.len() - 2] == counts[counts.len() - 1] {
        Verdict::Stabilized
    } else {
        Verdict::Inconclusive
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CandidateCounts {
    pub z: String,
    pub counts: Vec<u64>,
    pub stabilized: bool,
}

/// Per-candidate counts along a frontier ladder.
#[derive(Clone, Debug, Serialize)]
pub struct LadderReport {
    pub property: String,
    pub poset: String,
    pub frontier_ladder: Vec<u32>,
    pub per_candidate: Vec<CandidateCounts>,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct KeyValue {
    pub element: String,
    pub value: String,
}

/// One named assertion inside a certification run.
#[derive(Clone, Debug, Serialize)]
pub struct CertCheck {
    pub name: String,
    pub counts: Vec<u64>,
    pub pass: bool,
    pub detail: String,
}

/// Outcome of a certification suite; `pass` is the conjunction of all checks.
#[derive(Clone, Debug, Serialize)]
pub struct CertificationReport {
    pub theorem: String,
    pub poset: String,
    pub n: u32,
    pub frontier_ladder: Vec<u32>,
    pub seed: u64,
    pub checks: Vec<CertCheck>,
    pub pass: bool,
}

pub(crate) fn validate_ladder(ladder: &[u32]) -> crate::error::Result<()> {
    if ladder.is_empty() || ladder.windows(2).any(|w| w[0] >= w[1]) {
        return Err(crate::error::Error::BadLadder(ladder.to_vec()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdicts() {
        assert_eq!(ladder_verdict(&[2, 3, 5]), Verdict::GrowthObserved);
        assert_eq!(ladder_verdict(&[2, 2, 2]), Verdict::Stabilized);
        assert_eq!(ladder_verdict(&[2, 3, 3]), Verdict::Stabilized);
        assert_eq!(ladder_verdict(&[3, 2, 4]), Verdict::Inconclusive);
        assert_eq!(ladder_verdict(&[5]), Verdict::Inconclusive);
    }

    #[test]
    fn verdict_serializes_to_spec_vocabulary() {
        assert_eq!(
            serde_json::to_string(&Verdict::GrowthObserved).unwrap(),
            "\"growth-observed\""
        );
        assert_eq!(
            serde_json::to_string(&Verdict::Stabilized).unwrap(),
            "\"stabilized\""
        );
    }
}
