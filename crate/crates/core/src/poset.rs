//! Locally finite posets with exact Möbius machinery.
//!
//! A poset is exposed through a [`PosetView`]: an order oracle together with
//! a principal down-set enumerator and a frontier enumerator. Frontiers are
//! finite, nested, down-closed truncations used for desk-scale verification;
//! down-sets are always complete (local finiteness plus the minimum element
//! make every principal down-set finite).

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::key::ElementKey;
use crate::rational::{rat_big, Rational};

/// Hard ceiling on enumerated frontiers and down-sets.
pub const MAX_ENUMERATION: usize = 2_000_000;

/// Family-specific order logic behind a [`PosetView`].
pub trait PosetOracle: Send + Sync {
    /// Stable name used in reports and diagnostics.
    fn name(&self) -> String;

    /// Whether the key denotes an element of this poset.
    fn contains(&self, key: &ElementKey) -> bool;

    /// Order test; both keys are known to belong to the poset.
    fn leq_raw(&self, x: &ElementKey, y: &ElementKey) -> bool;

    /// The minimum element, when the poset has one.
    fn bottom(&self) -> Option<ElementKey>;

    /// All elements `z <= x`; x is known to belong to the poset.
    fn down_set_raw(&self, x: &ElementKey) -> Result<Vec<ElementKey>>;

    /// Finite, down-closed, nested truncation at rank bound `n`.
    fn frontier_raw(&self, n: u32) -> Result<Vec<ElementKey>>;
}

/// An explorable locally finite poset plus a synchronized Möbius memo cache.
///
/// A built view is immutable and safe for concurrent readers; cache
/// population is internally synchronized and never affects returned values.
#[derive(Clone)]
pub struct PosetView {
    oracle: Arc<dyn PosetOracle>,
    cache: Arc<Mutex<MobiusCache>>,
}

struct MobiusCache {
    values: HashMap<(ElementKey, ElementKey), BigInt>,
    limit: Option<usize>,
}

impl PosetView {
    pub fn from_oracle(oracle: Arc<dyn PosetOracle>) -> Self {
        PosetView {
            oracle,
            cache: Arc::new(Mutex::new(MobiusCache {
                values: HashMap::new(),
                limit: None,
            })),
        }
    }

    pub fn name(&self) -> String {
        self.oracle.name()
    }

    pub fn contains(&self, key: &ElementKey) -> bool {
        self.oracle.contains(key)
    }

    /// Bounds the number of memoized Möbius values; `None` removes the bound.
    pub fn set_cache_limit(&self, limit: Option<usize>) {
        self.cache.lock().unwrap().limit = limit;
    }

    fn check(&self, key: &ElementKey) -> Result<()> {
        if self.oracle.contains(key) {
            Ok(())
        } else {
            Err(Error::FamilyMismatch {
                poset: self.name(),
                key: key.to_string(),
            })
        }
    }

    pub fn leq(&self, x: &ElementKey, y: &ElementKey) -> Result<bool> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.oracle.leq_raw(x, y))
    }

    pub fn bottom(&self) -> Option<ElementKey> {
        self.oracle.bottom()
    }

    /// All `z <= x`, sorted by the deterministic key order.
    pub fn down_set(&self, x: &ElementKey) -> Result<Vec<ElementKey>> {
        self.check(x)?;
        let mut elems = self.oracle.down_set_raw(x)?;
        elems.sort_unstable();
        Ok(elems)
    }

    /// Frontier at rank bound `n`, sorted by the deterministic key order.
    pub fn frontier(&self, n: u32) -> Result<Vec<ElementKey>> {
        let mut elems = self.oracle.frontier_raw(n)?;
        elems.sort_unstable();
        Ok(elems)
    }

    /// The closed interval `[x, y]` as a sorted element list; empty when
    /// `x <= y` fails, the singleton `{x}` when `x = y`.
    pub fn interval_elements(&self, x: &ElementKey, y: &ElementKey) -> Result<Vec<ElementKey>> {
        self.check(x)?;
        self.check(y)?;
        if !self.oracle.leq_raw(x, y) {
            return Ok(Vec::new());
        }
        let mut elems: Vec<ElementKey> = self
            .oracle
            .down_set_raw(y)?
            .into_iter()
            .filter(|z| self.oracle.leq_raw(x, z))
            .collect();
        elems.sort_unstable();
        Ok(elems)
    }

    /// The Möbius value μ(x, y): 1 when x = y, 0 when x ≰ y, and otherwise
    /// determined by the recursion μ(x, y) = −Σ_{x <= z < y} μ(x, z).
    /// Values are memoized per ordered pair.
    pub fn mobius(&self, x: &ElementKey, y: &ElementKey) -> Result<BigInt> {
        self.check(x)?;
        self.check(y)?;
        if x == y {
            return Ok(BigInt::from(1));
        }
        if !self.oracle.leq_raw(x, y) {
            return Ok(BigInt::zero());
        }
        if let Some(v) = self.cache_get(x, y) {
            return Ok(v);
        }
        let interval = self.interval_elements(x, y)?;
        // Process in a linear extension: within [x, y], z < w implies z has
        // strictly fewer predecessors inside the interval than w.
        let mut rank: Vec<(usize, usize)> = Vec::with_capacity(interval.len());
        for (i, z) in interval.iter().enumerate() {
            let preds = interval
                .iter()
                .filter(|w| *w != z && self.oracle.leq_raw(w, z))
                .count();
            rank.push((preds, i));
        }
        rank.sort_unstable();
        let mut values: Vec<BigInt> = vec![BigInt::zero(); interval.len()];
        for &(_, i) in &rank {
            let z = &interval[i];
            let v = if z == x {
                BigInt::from(1)
            } else {
                let mut acc = BigInt::zero();
                for (j, w) in interval.iter().enumerate() {
                    if j != i && self.oracle.leq_raw(w, z) {
                        acc += &values[j];
                    }
                }
                -acc
            };
            self.cache_put(x, z, &v);
            values[i] = v;
        }
        let yi = interval.iter().position(|z| z == y).expect("y in [x, y]");
        Ok(values[yi].clone())
    }

    fn cache_get(&self, x: &ElementKey, y: &ElementKey) -> Option<BigInt> {
        self.cache
            .lock()
            .unwrap()
            .values
            .get(&(x.clone(), y.clone()))
            .cloned()
    }

    fn cache_put(&self, x: &ElementKey, y: &ElementKey, v: &BigInt) {
        let mut cache = self.cache.lock().unwrap();
        if let Some(limit) = cache.limit {
            if cache.values.len() >= limit {
                return;
            }
        }
        cache.values.insert((x.clone(), y.clone()), v.clone());
    }

    /// Zeta transform g(x) = Σ_{z <= x} f(z).
    pub fn zeta_transform(&self, f: &SupportedFunction, x: &ElementKey) -> Result<Rational> {
        self.check(x)?;
        let mut acc = Rational::zero();
        for (s, v) in f.iter() {
            self.check(s)?;
            if self.oracle.leq_raw(s, x) {
                acc += v;
            }
        }
        Ok(acc)
    }

    /// Möbius inversion f(x) = Σ_{z <= x} μ(z, x) · g(z); round-trips with
    /// [`PosetView::zeta_transform`] on any down-closed finite set.
    pub fn mobius_invert(&self, g: &SupportedFunction, x: &ElementKey) -> Result<Rational> {
        self.check(x)?;
        for s in g.support() {
            self.check(s)?;
        }
        let mut acc = Rational::zero();
        for z in self.oracle.down_set_raw(x)? {
            if let Some(v) = g.value(&z) {
                acc += rat_big(self.mobius(&z, x)?) * v;
            }
        }
        Ok(acc)
    }

    /// Convolution (f ∗ g)(x, y) = Σ_{x <= z <= y} f(x, z) · g(z, y);
    /// zero when x ≰ y.
    pub fn convolve_at(
        &self,
        f: &PairFn<'_>,
        g: &PairFn<'_>,
        x: &ElementKey,
        y: &ElementKey,
    ) -> Result<Rational> {
        self.check(x)?;
        self.check(y)?;
        if !self.oracle.leq_raw(x, y) {
            return Ok(Rational::zero());
        }
        let mut acc = Rational::zero();
        for z in self.interval_elements(x, y)? {
            acc += f.eval(self, x, &z)? * g.eval(self, &z, y)?;
        }
        Ok(acc)
    }

    /// Elements of `frontier(n)` where the lazily evaluated `h` is nonzero,
    /// sorted by key order.
    pub fn support_on_frontier<F>(&self, mut h: F, n: u32) -> Result<Vec<ElementKey>>
    where
        F: FnMut(&ElementKey) -> Result<Rational>,
    {
        let mut out = Vec::new();
        for x in self.frontier(n)? {
            if !h(&x)?.is_zero() {
                out.push(x);
            }
        }
        Ok(out)
    }
}

/// Finitely supported function on a poset, identified with the algebra
/// functions supported on intervals from the minimum. Stored values are
/// nonzero; absent keys denote zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SupportedFunction {
    values: std::collections::BTreeMap<ElementKey, Rational>,
}

impl SupportedFunction {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (ElementKey, Rational)>,
    {
        let mut f = SupportedFunction::new();
        for (k, v) in pairs {
            f.add_assign_or_insert(k, v);
        }
        f
    }

    fn add_assign_or_insert(&mut self, key: ElementKey, v: Rational) {
        use std::collections::btree_map::Entry;
        match self.values.entry(key) {
            Entry::Vacant(e) => {
                if !v.is_zero() {
                    e.insert(v);
                }
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += v;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Sets f(key) = v, removing the entry when v = 0.
    pub fn set(&mut self, key: ElementKey, v: Rational) {
        if v.is_zero() {
            self.values.remove(&key);
        } else {
            self.values.insert(key, v);
        }
    }

    /// The value at `key` (zero for absent keys).
    pub fn get(&self, key: &ElementKey) -> Rational {
        self.values.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn value(&self, key: &ElementKey) -> Option<&Rational> {
        self.values.get(key)
    }

    pub fn support(&self) -> impl Iterator<Item = &ElementKey> {
        self.values.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ElementKey, &Rational)> {
        self.values.iter()
    }

    pub fn support_size(&self) -> usize {
        self.values.len()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }
}

/// Interval function fed to [`PosetView::convolve_at`].
pub enum PairFn<'a> {
    /// Constant one on comparable pairs.
    Zeta,
    /// Identity of the convolution algebra.
    Delta,
    /// The Möbius function of the poset.
    Mobius,
    /// A function on the poset lifted to pairs: f(x, y) = f(y) when x is the
    /// minimum, zero otherwise. Requires the poset to have a minimum.
    Lifted(&'a SupportedFunction),
    /// Arbitrary rule; only queried on comparable pairs.
    Rule(&'a dyn Fn(&ElementKey, &ElementKey) -> Rational),
}

impl PairFn<'_> {
    pub fn eval(&self, p: &PosetView, x: &ElementKey, y: &ElementKey) -> Result<Rational> {
        if !p.leq(x, y)? {
            return Ok(Rational::zero());
        }
        match self {
            PairFn::Zeta => Ok(crate::rational::rat(1)),
            PairFn::Delta => Ok(if x == y {
                crate::rational::rat(1)
            } else {
                Rational::zero()
            }),
            PairFn::Mobius => Ok(rat_big(p.mobius(x, y)?)),
            PairFn::Lifted(f) => {
                let bottom = p.bottom().ok_or_else(|| Error::NoBottom(p.name()))?;
                Ok(if *x == bottom { f.get(y) } else { Rational::zero() })
            }
            PairFn::Rule(rule) => Ok(rule(x, y)),
        }
    }
}
