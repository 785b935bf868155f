//! The two hand-built counterexample posets.
//!
//! `counterexample-p` stacks an antichain-by-divisibility grid above two
//! incomparable elements z1, z2, adds a minimum u, and attaches a copy of
//! the divisors >= 2 directly above u (so those divisors together with u are
//! order-isomorphic to the divisibility poset). Every element has infinitely
//! many Möbius-nonvanishing successors, yet the up-sets of z1 and z2 differ
//! only in {z1, z2}.
//!
//! `counterexample-q` takes three tagged copies of the same grid and three
//! elements a, b, c, where each copy dominates exactly the two letters not
//! matching its tag, again with a minimum u and an attached divisor copy.
//! No element other than a letter itself dominates exactly one of {a, b, c}.

use crate::error::Result;
use crate::key::{ElementKey, Letter, PElem, QElem};
use crate::poset::{PosetOracle, MAX_ENUMERATION};

use super::divisors;

pub struct CounterexamplePOracle;

impl PosetOracle for CounterexamplePOracle {
    fn name(&self) -> String {
        "counterexample-p".to_string()
    }

    fn contains(&self, key: &ElementKey) -> bool {
        match key {
            ElementKey::CexP(PElem::U | PElem::Z1 | PElem::Z2) => true,
            ElementKey::CexP(PElem::Pair(a, d)) => *a >= 1 && *d >= 1,
            ElementKey::CexP(PElem::D0(d)) => *d >= 2,
            _ => false,
        }
    }

    fn leq_raw(&self, x: &ElementKey, y: &ElementKey) -> bool {
        let (ElementKey::CexP(x), ElementKey::CexP(y)) = (x, y) else {
            return false;
        };
        match (x, y) {
            (PElem::U, _) => true,
            (PElem::Z1, PElem::Z1) | (PElem::Z2, PElem::Z2) => true,
            (PElem::Z1 | PElem::Z2, PElem::Pair(..)) => true,
            (PElem::Pair(a, d), PElem::Pair(b, e)) => a == b && e % d == 0,
            (PElem::D0(d), PElem::D0(e)) => e % d == 0,
            _ => false,
        }
    }

    fn bottom(&self) -> Option<ElementKey> {
        Some(ElementKey::CexP(PElem::U))
    }

    fn down_set_raw(&self, x: &ElementKey) -> Result<Vec<ElementKey>> {
        let ElementKey::CexP(p) = x else { unreachable!() };
        let mut out = vec![ElementKey::CexP(PElem::U)];
        match p {
            PElem::U => {}
            PElem::Z1 => out.push(ElementKey::CexP(PElem::Z1)),
            PElem::Z2 => out.push(ElementKey::CexP(PElem::Z2)),
            PElem::Pair(a, d) => {
                out.push(ElementKey::CexP(PElem::Z1));
                out.push(ElementKey::CexP(PElem::Z2));
                for e in divisors(*d) {
                    out.push(ElementKey::CexP(PElem::Pair(*a, e)));
                }
            }
            PElem::D0(d) => {
                for e in divisors(*d) {
                    if e >= 2 {
                        out.push(ElementKey::CexP(PElem::D0(e)));
                    }
                }
            }
        }
        Ok(out)
    }

    fn frontier_raw(&self, n: u32) -> Result<Vec<ElementKey>> {
        let n = n as u64;
        check_frontier_size(&self.name(), n, 3 + n * n + n.saturating_sub(1))?;
        let mut out = vec![
            ElementKey::CexP(PElem::U),
            ElementKey::CexP(PElem::Z1),
            ElementKey::CexP(PElem::Z2),
        ];
        for a in 1..=n {
            for d in 1..=n {
                out.push(ElementKey::CexP(PElem::Pair(a, d)));
            }
        }
        for d in 2..=n {
            out.push(ElementKey::CexP(PElem::D0(d)));
        }
        Ok(out)
    }
}

pub struct CounterexampleQOracle;

impl PosetOracle for CounterexampleQOracle {
    fn name(&self) -> String {
        "counterexample-q".to_string()
    }

    fn contains(&self, key: &ElementKey) -> bool {
        match key {
            ElementKey::CexQ(QElem::U | QElem::S(_)) => true,
            ElementKey::CexQ(QElem::Copy(_, a, d)) => *a >= 1 && *d >= 1,
            ElementKey::CexQ(QElem::D0(d)) => *d >= 2,
            _ => false,
        }
    }

    fn leq_raw(&self, x: &ElementKey, y: &ElementKey) -> bool {
        let (ElementKey::CexQ(x), ElementKey::CexQ(y)) = (x, y) else {
            return false;
        };
        match (x, y) {
            (QElem::U, _) => true,
            (QElem::S(s), QElem::S(t)) => s == t,
            // a copy dominates every letter except its own tag
            (QElem::S(s), QElem::Copy(tag, ..)) => s != tag,
            (QElem::Copy(tag, a, d), QElem::Copy(tag2, b, e)) => {
                tag == tag2 && a == b && e % d == 0
            }
            (QElem::D0(d), QElem::D0(e)) => e % d == 0,
            _ => false,
        }
    }

    fn bottom(&self) -> Option<ElementKey> {
        Some(ElementKey::CexQ(QElem::U))
    }

    fn down_set_raw(&self, x: &ElementKey) -> Result<Vec<ElementKey>> {
        let ElementKey::CexQ(q) = x else { unreachable!() };
        let mut out = vec![ElementKey::CexQ(QElem::U)];
        match q {
            QElem::U => {}
            QElem::S(s) => out.push(ElementKey::CexQ(QElem::S(*s))),
            QElem::Copy(tag, a, d) => {
                for s in Letter::ALL {
                    if s != *tag {
                        out.push(ElementKey::CexQ(QElem::S(s)));
                    }
                }
                for e in divisors(*d) {
                    out.push(ElementKey::CexQ(QElem::Copy(*tag, *a, e)));
                }
            }
            QElem::D0(d) => {
                for e in divisors(*d) {
                    if e >= 2 {
                        out.push(ElementKey::CexQ(QElem::D0(e)));
                    }
                }
            }
        }
        Ok(out)
    }

    fn frontier_raw(&self, n: u32) -> Result<Vec<ElementKey>> {
        let n = n as u64;
        check_frontier_size(&self.name(), n, 4 + 3 * n * n + n.saturating_sub(1))?;
        let mut out = vec![
            ElementKey::CexQ(QElem::U),
            ElementKey::CexQ(QElem::S(Letter::A)),
            ElementKey::CexQ(QElem::S(Letter::B)),
            ElementKey::CexQ(QElem::S(Letter::C)),
        ];
        for tag in Letter::ALL {
            for a in 1..=n {
                for d in 1..=n {
                    out.push(ElementKey::CexQ(QElem::Copy(tag, a, d)));
                }
            }
        }
        for d in 2..=n {
            out.push(ElementKey::CexQ(QElem::D0(d)));
        }
        Ok(out)
    }
}

fn check_frontier_size(poset: &str, n: u64, size: u64) -> Result<()> {
    if size as usize > MAX_ENUMERATION {
        return Err(crate::error::Error::FrontierTooLarge {
            poset: poset.to_string(),
            bound: n as u32,
            limit: MAX_ENUMERATION,
        });
    }
    Ok(())
}

/// Applies a permutation of the letters {a, b, c} to a key of the
/// three-copy counterexample, relabeling both the letters and the copy tags.
/// Keys of other posets are returned unchanged.
pub fn permute_letters(key: &ElementKey, perm: [Letter; 3]) -> ElementKey {
    let map = |l: Letter| perm[l as usize];
    match key {
        ElementKey::CexQ(QElem::S(s)) => ElementKey::CexQ(QElem::S(map(*s))),
        ElementKey::CexQ(QElem::Copy(tag, a, d)) => {
            ElementKey::CexQ(QElem::Copy(map(*tag), *a, *d))
        }
        other => other.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(e: PElem) -> ElementKey {
        ElementKey::CexP(e)
    }

    fn q(e: QElem) -> ElementKey {
        ElementKey::CexQ(e)
    }

    #[test]
    fn p_order_table() {
        let o = CounterexamplePOracle;
        assert!(o.leq_raw(&p(PElem::U), &p(PElem::Z1)));
        assert!(!o.leq_raw(&p(PElem::Z1), &p(PElem::Z2)));
        assert!(!o.leq_raw(&p(PElem::Z2), &p(PElem::Z1)));
        for l in [1, 2, 7] {
            assert!(o.leq_raw(&p(PElem::Z1), &p(PElem::Pair(l, 1))));
            assert!(o.leq_raw(&p(PElem::Z2), &p(PElem::Pair(l, 1))));
        }
        assert!(o.leq_raw(&p(PElem::U), &p(PElem::D0(6))));
        assert!(!o.leq_raw(&p(PElem::Z1), &p(PElem::D0(6))));
        assert!(!o.leq_raw(&p(PElem::D0(2)), &p(PElem::Pair(1, 2))));
        assert!(o.leq_raw(&p(PElem::Pair(3, 2)), &p(PElem::Pair(3, 6))));
        assert!(!o.leq_raw(&p(PElem::Pair(3, 2)), &p(PElem::Pair(4, 6))));
        assert!(o.leq_raw(&p(PElem::D0(2)), &p(PElem::D0(6))));
        assert!(!o.leq_raw(&p(PElem::D0(4)), &p(PElem::D0(6))));
    }

    #[test]
    fn p_interval_below_grid_minimal_is_tiny() {
        // between z1 and (l, 1) nothing else fits
        let o = CounterexamplePOracle;
        let ds = o.down_set_raw(&p(PElem::Pair(5, 1))).unwrap();
        assert_eq!(ds.len(), 4); // u, z1, z2, itself
    }

    #[test]
    fn q_order_table() {
        let o = CounterexampleQOracle;
        let a = q(QElem::S(Letter::A));
        let b = q(QElem::S(Letter::B));
        assert!(o.leq_raw(&q(QElem::U), &q(QElem::S(Letter::C))));
        assert!(o.leq_raw(&a, &q(QElem::Copy(Letter::B, 2, 3))));
        assert!(o.leq_raw(&a, &q(QElem::Copy(Letter::C, 2, 3))));
        assert!(!o.leq_raw(&a, &q(QElem::Copy(Letter::A, 2, 3))));
        assert!(!o.leq_raw(&a, &b));
        assert!(!o.leq_raw(&a, &q(QElem::D0(4))));
        assert!(o.leq_raw(
            &q(QElem::Copy(Letter::B, 2, 3)),
            &q(QElem::Copy(Letter::B, 2, 6))
        ));
        assert!(!o.leq_raw(
            &q(QElem::Copy(Letter::B, 2, 3)),
            &q(QElem::Copy(Letter::C, 2, 6))
        ));
    }

    #[test]
    fn frontier_sizes() {
        assert_eq!(
            CounterexamplePOracle.frontier_raw(30).unwrap().len(),
            3 + 900 + 29
        );
        assert_eq!(
            CounterexampleQOracle.frontier_raw(30).unwrap().len(),
            4 + 3 * 900 + 29
        );
    }

    #[test]
    fn relabeling_swaps_tags_and_letters() {
        let perm = [Letter::B, Letter::C, Letter::A];
        assert_eq!(
            permute_letters(&q(QElem::S(Letter::A)), perm),
            q(QElem::S(Letter::B))
        );
        assert_eq!(
            permute_letters(&q(QElem::Copy(Letter::C, 1, 4)), perm),
            q(QElem::Copy(Letter::A, 1, 4))
        );
        assert_eq!(permute_letters(&q(QElem::D0(4)), perm), q(QElem::D0(4)));
    }
}
