//! User-supplied finite posets loaded from a line-oriented text format.
//!
//! ```text
//! poset v1
//! elem bot
//! elem x
//! elem y
//! rel bot x
//! rel x y
//! bottom bot
//! ```
//!
//! `rel a b` states `a <= b`; pairs may be cover relations or arbitrary
//! relations, the loader computes the transitive closure. Labels match
//! `[A-Za-z0-9_{}(),]+`. Duplicate labels, undeclared labels, relation sets
//! whose closure violates antisymmetry, and a `bottom` that is not below
//! every element are all rejected with a diagnostic naming the offender.

use std::collections::HashMap;
use std::path::Path;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::key::{is_label, ElementKey};
use crate::poset::PosetOracle;

#[derive(Clone, Debug)]
pub struct FinitePosetFile {
    origin: String,
    labels: Vec<String>,
    index: HashMap<String, usize>,
    /// Row-major n×n closure matrix: `leq[i * n + j]` iff label i <= label j.
    leq: Vec<bool>,
    bottom: usize,
}

impl FinitePosetFile {
    pub fn load(path: &Path) -> Result<Self> {
        let origin = path.display().to_string();
        let text = std::fs::read_to_string(path).map_err(|e| Error::PosetFile {
            path: origin.clone(),
            reason: e.to_string(),
        })?;
        Self::parse(&text, &origin)
    }

    pub fn parse(text: &str, origin: &str) -> Result<Self> {
        let fail = |line: usize, reason: String| Error::PosetFile {
            path: origin.to_string(),
            reason: format!("line {line}: {reason}"),
        };

        let mut labels: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut relations: Vec<(usize, usize)> = Vec::new();
        let mut bottom: Option<usize> = None;
        let mut saw_header = false;

        for (lineno, raw) in text.lines().enumerate() {
            let lineno = lineno + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if !saw_header {
                if line != "poset v1" {
                    return Err(fail(lineno, "expected header `poset v1`".to_string()));
                }
                saw_header = true;
                continue;
            }
            let mut parts = line.split_whitespace();
            let keyword = parts.next().unwrap();
            let args: Vec<&str> = parts.collect();
            match keyword {
                "elem" => {
                    let [label] = args[..] else {
                        return Err(fail(lineno, "expected `elem <label>`".to_string()));
                    };
                    if !is_label(label) {
                        return Err(fail(lineno, format!("invalid label `{label}`")));
                    }
                    if index.contains_key(label) {
                        return Err(fail(lineno, format!("duplicate element `{label}`")));
                    }
                    index.insert(label.to_string(), labels.len());
                    labels.push(label.to_string());
                }
                "rel" => {
                    let [a, b] = args[..] else {
                        return Err(fail(lineno, "expected `rel <label> <label>`".to_string()));
                    };
                    let ia = *index
                        .get(a)
                        .ok_or_else(|| fail(lineno, format!("undeclared element `{a}`")))?;
                    let ib = *index
                        .get(b)
                        .ok_or_else(|| fail(lineno, format!("undeclared element `{b}`")))?;
                    relations.push((ia, ib));
                }
                "bottom" => {
                    let [label] = args[..] else {
                        return Err(fail(lineno, "expected `bottom <label>`".to_string()));
                    };
                    if bottom.is_some() {
                        return Err(fail(lineno, "duplicate `bottom` line".to_string()));
                    }
                    bottom = Some(*index.get(label).ok_or_else(|| {
                        fail(lineno, format!("undeclared element `{label}`"))
                    })?);
                }
                other => {
                    return Err(fail(lineno, format!("unknown directive `{other}`")));
                }
            }
        }

        let bail = |reason: String| Error::PosetFile {
            path: origin.to_string(),
            reason,
        };
        if !saw_header {
            return Err(bail("missing header `poset v1`".to_string()));
        }
        if labels.is_empty() {
            return Err(bail("no elements declared".to_string()));
        }
        let bottom = bottom.ok_or_else(|| bail("missing `bottom` line".to_string()))?;

        let n = labels.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for (a, b) in relations {
            leq[a * n + b] = true;
        }
        // transitive closure
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if leq[i * n + j] && leq[j * n + i] {
                    return Err(bail(format!(
                        "relations are not a partial order: `{}` and `{}` are each below the other",
                        labels[i], labels[j]
                    )));
                }
            }
        }
        for j in 0..n {
            if !leq[bottom * n + j] {
                return Err(bail(format!(
                    "`{}` is declared bottom but is not below `{}`",
                    labels[bottom], labels[j]
                )));
            }
        }

        Ok(FinitePosetFile {
            origin: origin.to_string(),
            labels,
            index,
            leq,
            bottom,
        })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }
}

pub struct FiniteOracle {
    pub file: Arc<FinitePosetFile>,
}

impl FiniteOracle {
    fn idx(&self, key: &ElementKey) -> Option<usize> {
        match key {
            ElementKey::Named(label) => self.file.index.get(label).copied(),
            _ => None,
        }
    }
}

impl PosetOracle for FiniteOracle {
    fn name(&self) -> String {
        format!("file:{}", self.file.origin)
    }

    fn contains(&self, key: &ElementKey) -> bool {
        self.idx(key).is_some()
    }

    fn leq_raw(&self, x: &ElementKey, y: &ElementKey) -> bool {
        let (Some(i), Some(j)) = (self.idx(x), self.idx(y)) else {
            return false;
        };
        let n = self.file.labels.len();
        self.file.leq[i * n + j]
    }

    fn bottom(&self) -> Option<ElementKey> {
        Some(ElementKey::Named(self.file.labels[self.file.bottom].clone()))
    }

    fn down_set_raw(&self, x: &ElementKey) -> Result<Vec<ElementKey>> {
        let i = self.idx(x).expect("validated");
        let n = self.file.labels.len();
        Ok((0..n)
            .filter(|&j| self.file.leq[j * n + i])
            .map(|j| ElementKey::Named(self.file.labels[j].clone()))
            .collect())
    }

    // A finite poset is its own frontier at every bound.
    fn frontier_raw(&self, _n: u32) -> Result<Vec<ElementKey>> {
        Ok(self
            .file
            .labels
            .iter()
            .map(|l| ElementKey::Named(l.clone()))
            .collect())
    }
}
