//! Finite subsets of the positive integers under inclusion.

use crate::error::{Error, Result};
use crate::key::ElementKey;
use crate::poset::{PosetOracle, MAX_ENUMERATION};

pub struct SubsetsOracle;

fn is_strictly_sorted(v: &[u64]) -> bool {
    v.windows(2).all(|w| w[0] < w[1])
}

impl PosetOracle for SubsetsOracle {
    fn name(&self) -> String {
        "subsets".to_string()
    }

    fn contains(&self, key: &ElementKey) -> bool {
        matches!(key, ElementKey::Set(v) if is_strictly_sorted(v) && v.first().is_none_or(|&x| x >= 1))
    }

    fn leq_raw(&self, x: &ElementKey, y: &ElementKey) -> bool {
        match (x, y) {
            (ElementKey::Set(a), ElementKey::Set(b)) => {
                // both strictly sorted
                let mut it = b.iter();
                a.iter().all(|e| it.any(|f| f == e))
            }
            _ => false,
        }
    }

    fn bottom(&self) -> Option<ElementKey> {
        Some(ElementKey::Set(Vec::new()))
    }

    fn down_set_raw(&self, x: &ElementKey) -> Result<Vec<ElementKey>> {
        let ElementKey::Set(v) = x else { unreachable!() };
        if v.len() > 20 {
            return Err(Error::DownSetTooLarge {
                poset: self.name(),
                key: x.to_string(),
            });
        }
        let mut out = Vec::with_capacity(1 << v.len());
        for mask in 0u32..(1 << v.len()) {
            let subset: Vec<u64> = v
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            out.push(ElementKey::Set(subset));
        }
        Ok(out)
    }

    fn frontier_raw(&self, n: u32) -> Result<Vec<ElementKey>> {
        if n > 20 || (1usize << n) > MAX_ENUMERATION {
            return Err(Error::FrontierTooLarge {
                poset: self.name(),
                bound: n,
                limit: MAX_ENUMERATION,
            });
        }
        let mut out = Vec::with_capacity(1 << n);
        for mask in 0u64..(1 << n) {
            let subset: Vec<u64> = (0..n as u64).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
            out.push(ElementKey::Set(subset));
        }
        Ok(out)
    }
}
