//! Integer-indexed families: divisibility, the antichain, the linear order.

use crate::error::{Error, Result};
use crate::key::ElementKey;
use crate::poset::{PosetOracle, MAX_ENUMERATION};

use super::divisors;

pub struct DivisibilityOracle;

impl PosetOracle for DivisibilityOracle {
    fn name(&self) -> String {
        "divisibility".to_string()
    }

    fn contains(&self, key: &ElementKey) -> bool {
        matches!(key, ElementKey::Div(n) if *n >= 1)
    }

    fn leq_raw(&self, x: &ElementKey, y: &ElementKey) -> bool {
        match (x, y) {
            (ElementKey::Div(a), ElementKey::Div(b)) => b % a == 0,
            _ => false,
        }
    }

    fn bottom(&self) -> Option<ElementKey> {
        Some(ElementKey::Div(1))
    }

    fn down_set_raw(&self, x: &ElementKey) -> Result<Vec<ElementKey>> {
        match x {
            ElementKey::Div(n) => Ok(divisors(*n).into_iter().map(ElementKey::Div).collect()),
            _ => unreachable!(),
        }
    }

    fn frontier_raw(&self, n: u32) -> Result<Vec<ElementKey>> {
        int_frontier(n, &self.name(), ElementKey::Div)
    }
}

pub struct AntichainOracle;

impl PosetOracle for AntichainOracle {
    fn name(&self) -> String {
        "antichain".to_string()
    }

    fn contains(&self, key: &ElementKey) -> bool {
        matches!(key, ElementKey::Anti(n) if *n >= 1)
    }

    fn leq_raw(&self, x: &ElementKey, y: &ElementKey) -> bool {
        x == y
    }

    // An infinite antichain has no minimum element.
    fn bottom(&self) -> Option<ElementKey> {
        None
    }

    fn down_set_raw(&self, x: &ElementKey) -> Result<Vec<ElementKey>> {
        Ok(vec![x.clone()])
    }

    fn frontier_raw(&self, n: u32) -> Result<Vec<ElementKey>> {
        int_frontier(n, &self.name(), ElementKey::Anti)
    }
}

pub struct LinearOrderOracle;

impl PosetOracle for LinearOrderOracle {
    fn name(&self) -> String {
        "linear-order".to_string()
    }

    fn contains(&self, key: &ElementKey) -> bool {
        matches!(key, ElementKey::Lin(n) if *n >= 1)
    }

    fn leq_raw(&self, x: &ElementKey, y: &ElementKey) -> bool {
        match (x, y) {
            (ElementKey::Lin(a), ElementKey::Lin(b)) => a <= b,
            _ => false,
        }
    }

    fn bottom(&self) -> Option<ElementKey> {
        Some(ElementKey::Lin(1))
    }

    fn down_set_raw(&self, x: &ElementKey) -> Result<Vec<ElementKey>> {
        match x {
            ElementKey::Lin(n) => Ok((1..=*n).map(ElementKey::Lin).collect()),
            _ => unreachable!(),
        }
    }

    fn frontier_raw(&self, n: u32) -> Result<Vec<ElementKey>> {
        int_frontier(n, &self.name(), ElementKey::Lin)
    }
}

fn int_frontier(
    n: u32,
    poset: &str,
    wrap: fn(u64) -> ElementKey,
) -> Result<Vec<ElementKey>> {
    if n as usize > MAX_ENUMERATION {
        return Err(Error::FrontierTooLarge {
            poset: poset.to_string(),
            bound: n,
            limit: MAX_ENUMERATION,
        });
    }
    Ok((1..=n as u64).map(wrap).collect())
}
