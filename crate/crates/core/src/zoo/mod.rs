//! Construction of every built-in poset family, plus ingestion of
//! user-supplied finite posets.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::prime_power;
use crate::key::{parse_p_elem, parse_q_elem, split_pair, ElementKey, SubspaceKey};
use crate::poset::{PosetOracle, PosetView};

pub mod basic;
pub mod counterexamples;
pub mod finite;
pub mod product;
pub mod subsets;
pub mod subspaces;

pub use counterexamples::permute_letters;
pub use finite::FinitePosetFile;

/// All divisors of n in increasing order.
pub(crate) fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Description of a poset family to build.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Divisibility,
    Antichain,
    LinearOrder,
    FiniteSubsets,
    Subspaces { q: u64 },
    Product(Box<FamilySpec>, Box<FamilySpec>),
    CounterexampleP,
    CounterexampleQ,
    FromFile(PathBuf),
}

impl FamilySpec {
    /// Parses a family name such as `div`, `subspaces(3)`,
    /// `prod(antichain,div)`, `counterexample-p` or `file:path`.
    ///
    /// `default_q` supplies the field size for a bare `subspaces`.
    pub fn parse(input: &str, default_q: Option<u64>) -> Result<FamilySpec> {
        let s = input.trim();
        let err = |reason: &str| Error::FamilyParse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        match s {
            "div" | "divisibility" => return Ok(FamilySpec::Divisibility),
            "antichain" => return Ok(FamilySpec::Antichain),
            "lin" | "linear" | "linear-order" => return Ok(FamilySpec::LinearOrder),
            "subsets" => return Ok(FamilySpec::FiniteSubsets),
            "subspaces" => {
                let q = default_q.ok_or_else(|| err("`subspaces` needs a field size; pass --q or write subspaces(<q>)"))?;
                return Ok(FamilySpec::Subspaces { q });
            }
            "counterexample-p" | "cex-p" => return Ok(FamilySpec::CounterexampleP),
            "counterexample-q" | "cex-q" => return Ok(FamilySpec::CounterexampleQ),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix("subspaces(").and_then(|r| r.strip_suffix(')')) {
            let q: u64 = rest.trim().parse().map_err(|_| err("bad field size"))?;
            return Ok(FamilySpec::Subspaces { q });
        }
        for prefix in ["prod(", "product("] {
            if let Some(inner) = s.strip_prefix(prefix).and_then(|r| r.strip_suffix(')')) {
                let (a, b) = split_pair(inner, input).map_err(|_| err("expected two components"))?;
                return Ok(FamilySpec::Product(
                    Box::new(FamilySpec::parse(a, default_q)?),
                    Box::new(FamilySpec::parse(b, default_q)?),
                ));
            }
        }
        if let Some(path) = s.strip_prefix("file:") {
            return Ok(FamilySpec::FromFile(PathBuf::from(path)));
        }
        Err(err("unknown family; run `zoo list` for the available names"))
    }

    pub fn name(&self) -> String {
        match self {
            FamilySpec::Divisibility => "divisibility".to_string(),
            FamilySpec::Antichain => "antichain".to_string(),
            FamilySpec::LinearOrder => "linear-order".to_string(),
            FamilySpec::FiniteSubsets => "subsets".to_string(),
            FamilySpec::Subspaces { q } => format!("subspaces(q={q})"),
            FamilySpec::Product(a, b) => format!("prod({},{})", a.name(), b.name()),
            FamilySpec::CounterexampleP => "counterexample-p".to_string(),
            FamilySpec::CounterexampleQ => "counterexample-q".to_string(),
            FamilySpec::FromFile(p) => format!("file:{}", p.display()),
        }
    }

    /// Parses an element in family shorthand (`12`, `{1,3}`, `z1`,
    /// `prod:(7,1)`, a file label, ...) falling back to the canonical key
    /// grammar. Membership is checked by the poset operations, not here.
    pub fn parse_element(&self, input: &str) -> Result<ElementKey> {
        let s = input.trim();
        if let Ok(key) = ElementKey::parse(s) {
            return Ok(key);
        }
        let err = |reason: String| Error::KeyParse {
            input: input.to_string(),
            reason,
        };
        match self {
            FamilySpec::Divisibility | FamilySpec::Antichain | FamilySpec::LinearOrder => {
                let n: u64 = s
                    .parse()
                    .map_err(|_| err("expected a positive integer".to_string()))?;
                if n == 0 {
                    return Err(err("elements start at 1".to_string()));
                }
                Ok(match self {
                    FamilySpec::Divisibility => ElementKey::Div(n),
                    FamilySpec::Antichain => ElementKey::Anti(n),
                    _ => ElementKey::Lin(n),
                })
            }
            FamilySpec::FiniteSubsets => {
                ElementKey::parse(&format!("set:{s}")).map_err(|_| {
                    err("expected a subset like {1,3} or {}".to_string())
                })
            }
            FamilySpec::Subspaces { q } => {
                if s == "0" {
                    return Ok(ElementKey::Sub(SubspaceKey {
                        q: *q,
                        rows: Vec::new(),
                    }));
                }
                ElementKey::parse(&format!("sub:q={q};{s}"))
                    .map_err(|_| err("expected rref=[[..],..], 0, or a canonical sub: key".to_string()))
            }
            FamilySpec::Product(fa, fb) => {
                let inner = s
                    .strip_prefix('(')
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(|| err("expected a pair (x,y)".to_string()))?;
                let (a, b) = split_pair(inner, input)?;
                Ok(ElementKey::prod(fa.parse_element(a)?, fb.parse_element(b)?))
            }
            FamilySpec::CounterexampleP => Ok(ElementKey::CexP(parse_p_elem(s, input)?)),
            FamilySpec::CounterexampleQ => Ok(ElementKey::CexQ(parse_q_elem(s, input)?)),
            FamilySpec::FromFile(_) => {
                if crate::key::is_label(s) {
                    Ok(ElementKey::Named(s.to_string()))
                } else {
                    Err(err("expected an element label".to_string()))
                }
            }
        }
    }
}

fn oracle(spec: &FamilySpec) -> Result<Arc<dyn PosetOracle>> {
    Ok(match spec {
        FamilySpec::Divisibility => Arc::new(basic::DivisibilityOracle),
        FamilySpec::Antichain => Arc::new(basic::AntichainOracle),
        FamilySpec::LinearOrder => Arc::new(basic::LinearOrderOracle),
        FamilySpec::FiniteSubsets => Arc::new(subsets::SubsetsOracle),
        FamilySpec::Subspaces { q } => {
            if prime_power(*q).is_none() {
                return Err(Error::NotPrimePower(*q));
            }
            Arc::new(subspaces::SubspacesOracle::new(*q)?)
        }
        FamilySpec::Product(a, b) => Arc::new(product::ProductOracle {
            left: oracle(a)?,
            right: oracle(b)?,
        }),
        FamilySpec::CounterexampleP => Arc::new(counterexamples::CounterexamplePOracle),
        FamilySpec::CounterexampleQ => Arc::new(counterexamples::CounterexampleQOracle),
        FamilySpec::FromFile(path) => Arc::new(finite::FiniteOracle {
            file: Arc::new(FinitePosetFile::load(path)?),
        }),
    })
}

/// Builds the poset described by `spec`.
pub fn build(spec: &FamilySpec) -> Result<PosetView> {
    Ok(PosetView::from_oracle(oracle(spec)?))
}

/// The two-level counterexample poset (property G without H_2).
pub fn build_counterexample_p() -> PosetView {
    PosetView::from_oracle(Arc::new(counterexamples::CounterexamplePOracle))
}

/// The three-copy counterexample poset (uncertainty without H_3).
pub fn build_counterexample_q() -> PosetView {
    PosetView::from_oracle(Arc::new(counterexamples::CounterexampleQOracle))
}

/// Wraps an already-parsed finite poset file.
pub fn build_finite(file: FinitePosetFile) -> PosetView {
    PosetView::from_oracle(Arc::new(finite::FiniteOracle {
        file: Arc::new(file),
    }))
}

/// Loads a finite poset from `path`.
pub fn load_finite(path: &Path) -> Result<PosetView> {
    build(&FamilySpec::FromFile(path.to_path_buf()))
}

/// The family's frontier at rank bound `n`, sorted by key order.
pub fn frontier_policy(spec: &FamilySpec, n: u32) -> Result<Vec<ElementKey>> {
    build(spec)?.frontier(n)
}

/// Names and one-line descriptions of the built-in families.
pub fn list_families() -> Vec<(&'static str, &'static str)> {
    vec![
        ("div", "positive integers ordered by divisibility"),
        ("antichain", "positive integers, pairwise incomparable"),
        ("linear", "positive integers under the usual order"),
        ("subsets", "finite subsets of the positive integers under inclusion"),
        (
            "subspaces",
            "finite-dimensional subspaces of F_q^inf under inclusion (pass --q, or subspaces(<q>))",
        ),
        (
            "prod(<a>,<b>)",
            "componentwise product of two families, e.g. prod(antichain,div)",
        ),
        (
            "counterexample-p",
            "grid over two incomparable elements: Möbius values never die out, yet two up-sets differ only in the pair itself",
        ),
        (
            "counterexample-q",
            "three tagged grids over letters a, b, c: inversion uncertainty holds, yet no element dominates exactly one letter",
        ),
        ("file:<path>", "finite poset loaded from a `poset v1` file"),
    ]
}
