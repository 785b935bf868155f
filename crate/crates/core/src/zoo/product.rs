//! Componentwise products of posets.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::key::ElementKey;
use crate::poset::{PosetOracle, MAX_ENUMERATION};

pub struct ProductOracle {
    pub left: Arc<dyn PosetOracle>,
    pub right: Arc<dyn PosetOracle>,
}

impl PosetOracle for ProductOracle {
    fn name(&self) -> String {
        format!("prod({},{})", self.left.name(), self.right.name())
    }

    fn contains(&self, key: &ElementKey) -> bool {
        matches!(key, ElementKey::Prod(a, b) if self.left.contains(a) && self.right.contains(b))
    }

    fn leq_raw(&self, x: &ElementKey, y: &ElementKey) -> bool {
        match (x, y) {
            (ElementKey::Prod(a1, b1), ElementKey::Prod(a2, b2)) => {
                self.left.leq_raw(a1, a2) && self.right.leq_raw(b1, b2)
            }
            _ => false,
        }
    }

    fn bottom(&self) -> Option<ElementKey> {
        Some(ElementKey::prod(self.left.bottom()?, self.right.bottom()?))
    }

    fn down_set_raw(&self, x: &ElementKey) -> Result<Vec<ElementKey>> {
        let ElementKey::Prod(a, b) = x else { unreachable!() };
        let left = self.left.down_set_raw(a)?;
        let right = self.right.down_set_raw(b)?;
        if left.len().saturating_mul(right.len()) > MAX_ENUMERATION {
            return Err(Error::DownSetTooLarge {
                poset: self.name(),
                key: x.to_string(),
            });
        }
        let mut out = Vec::with_capacity(left.len() * right.len());
        for l in &left {
            for r in &right {
                out.push(ElementKey::prod(l.clone(), r.clone()));
            }
        }
        Ok(out)
    }

    fn frontier_raw(&self, n: u32) -> Result<Vec<ElementKey>> {
        let left = self.left.frontier_raw(n)?;
        let right = self.right.frontier_raw(n)?;
        if left.len().saturating_mul(right.len()) > MAX_ENUMERATION {
            return Err(Error::FrontierTooLarge {
                poset: self.name(),
                bound: n,
                limit: MAX_ENUMERATION,
            });
        }
        let mut out = Vec::with_capacity(left.len() * right.len());
        for l in &left {
            for r in &right {
                out.push(ElementKey::prod(l.clone(), r.clone()));
            }
        }
        Ok(out)
    }
}
