//! Canonical element keys.
//!
//! Every poset element is encoded by an [`ElementKey`]: a canonical value
//! that is equal exactly when two keys denote the same element, hashable,
//! and totally ordered (the order is an arbitrary deterministic tiebreak for
//! output, unrelated to the poset order). Keys serialize to a stable textual
//! grammar (`div:12`, `set:{1,3}`, `sub:q=2;rref=[[1,0],[0,1]]`, `P:z1`,
//! `prod:(anti:3,div:2)`, ...) that round-trips through [`ElementKey::parse`].

use std::fmt;

use crate::error::{Error, Result};

/// Copy of `A × D` used inside the three-copy counterexample poset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    B,
    C,
}

impl Letter {
    pub const ALL: [Letter; 3] = [Letter::A, Letter::B, Letter::C];

    pub fn as_str(self) -> &'static str {
        match self {
            Letter::A => "a",
            Letter::B => "b",
            Letter::C => "c",
        }
    }
}

/// Element of the two-level counterexample poset (`counterexample-p`).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PElem {
    /// The minimum.
    U,
    Z1,
    Z2,
    /// Element `(a, d)` of the antichain-by-divisibility grid above z1, z2.
    Pair(u64, u64),
    /// Divisor `d >= 2` attached directly above the minimum.
    D0(u64),
}

/// Element of the three-copy counterexample poset (`counterexample-q`).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum QElem {
    U,
    S(Letter),
    /// Element `(a, d)` of the grid copy carrying the given tag.
    Copy(Letter, u64, u64),
    D0(u64),
}

/// Reduced-row-echelon basis of a subspace of F_q^∞.
///
/// Rows are a basis in reduced row echelon form; trailing all-zero columns
/// are trimmed, so the key of a subspace does not depend on the ambient
/// dimension it was enumerated in. The zero subspace has no rows.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubspaceKey {
    pub q: u64,
    pub rows: Vec<Vec<u64>>,
}

impl SubspaceKey {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ElementKey {
    /// Positive integer under divisibility.
    Div(u64),
    /// Positive integer in the antichain.
    Anti(u64),
    /// Positive integer under the usual linear order.
    Lin(u64),
    /// Finite subset of positive integers, strictly sorted.
    Set(Vec<u64>),
    /// Finite-dimensional subspace of F_q^∞.
    Sub(SubspaceKey),
    /// Pair in a product poset.
    Prod(Box<ElementKey>, Box<ElementKey>),
    CexP(PElem),
    CexQ(QElem),
    /// Labelled element of a poset loaded from a file.
    Named(String),
}

impl ElementKey {
    pub fn set(mut elems: Vec<u64>) -> ElementKey {
        elems.sort_unstable();
        elems.dedup();
        ElementKey::Set(elems)
    }

    pub fn prod(left: ElementKey, right: ElementKey) -> ElementKey {
        ElementKey::Prod(Box::new(left), Box::new(right))
    }

    /// Parses the canonical textual form produced by `Display`.
    pub fn parse(input: &str) -> Result<ElementKey> {
        let s = input.trim();
        let err = |reason: &str| Error::KeyParse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        if let Some(rest) = s.strip_prefix("div:") {
            return Ok(ElementKey::Div(parse_pos(rest, input)?));
        }
        if let Some(rest) = s.strip_prefix("anti:") {
            return Ok(ElementKey::Anti(parse_pos(rest, input)?));
        }
        if let Some(rest) = s.strip_prefix("lin:") {
            return Ok(ElementKey::Lin(parse_pos(rest, input)?));
        }
        if let Some(rest) = s.strip_prefix("set:") {
            let inner = rest
                .strip_prefix('{')
                .and_then(|r| r.strip_suffix('}'))
                .ok_or_else(|| err("expected set:{..}"))?;
            let mut elems = Vec::new();
            if !inner.trim().is_empty() {
                for part in inner.split(',') {
                    elems.push(parse_pos(part, input)?);
                }
            }
            let sorted = {
                let mut v = elems.clone();
                v.sort_unstable();
                v.dedup();
                v
            };
            if sorted != elems {
                return Err(err("set elements must be strictly increasing"));
            }
            return Ok(ElementKey::Set(elems));
        }
        if let Some(rest) = s.strip_prefix("sub:") {
            return parse_subspace(rest, input);
        }
        if let Some(rest) = s.strip_prefix("prod:") {
            let inner = rest
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(|| err("expected prod:(..,..)"))?;
            let (a, b) = split_pair(inner, input)?;
            return Ok(ElementKey::prod(ElementKey::parse(a)?, ElementKey::parse(b)?));
        }
        if let Some(rest) = s.strip_prefix("P:") {
            return Ok(ElementKey::CexP(parse_p_elem(rest, input)?));
        }
        if let Some(rest) = s.strip_prefix("Q:") {
            return Ok(ElementKey::CexQ(parse_q_elem(rest, input)?));
        }
        if let Some(rest) = s.strip_prefix("elem:") {
            if !is_label(rest) {
                return Err(err("invalid label"));
            }
            return Ok(ElementKey::Named(rest.to_string()));
        }
        Err(err("unknown key prefix"))
    }
}

pub(crate) fn parse_p_elem(s: &str, input: &str) -> Result<PElem> {
    match s {
        "u" => Ok(PElem::U),
        "z1" => Ok(PElem::Z1),
        "z2" => Ok(PElem::Z2),
        _ => {
            if let Some(rest) = s.strip_prefix("d0:") {
                let d = parse_pos(rest, input)?;
                if d < 2 {
                    return Err(Error::KeyParse {
                        input: input.to_string(),
                        reason: "d0 elements start at 2".to_string(),
                    });
                }
                return Ok(PElem::D0(d));
            }
            if let Some(inner) = s
                .strip_prefix("prod:(")
                .and_then(|r| r.strip_suffix(')'))
            {
                let (a, d) = split_pair(inner, input)?;
                return Ok(PElem::Pair(parse_pos(a, input)?, parse_pos(d, input)?));
            }
            Err(Error::KeyParse {
                input: input.to_string(),
                reason: "expected u, z1, z2, prod:(a,d) or d0:n".to_string(),
            })
        }
    }
}

pub(crate) fn parse_q_elem(s: &str, input: &str) -> Result<QElem> {
    match s {
        "u" => Ok(QElem::U),
        "a" => Ok(QElem::S(Letter::A)),
        "b" => Ok(QElem::S(Letter::B)),
        "c" => Ok(QElem::S(Letter::C)),
        _ => {
            if let Some(rest) = s.strip_prefix("d0:") {
                let d = parse_pos(rest, input)?;
                if d < 2 {
                    return Err(Error::KeyParse {
                        input: input.to_string(),
                        reason: "d0 elements start at 2".to_string(),
                    });
                }
                return Ok(QElem::D0(d));
            }
            for (prefix, letter) in [
                ("qa:(", Letter::A),
                ("qb:(", Letter::B),
                ("qc:(", Letter::C),
            ] {
                if let Some(inner) = s.strip_prefix(prefix).and_then(|r| r.strip_suffix(')')) {
                    let (a, d) = split_pair(inner, input)?;
                    return Ok(QElem::Copy(letter, parse_pos(a, input)?, parse_pos(d, input)?));
                }
            }
            Err(Error::KeyParse {
                input: input.to_string(),
                reason: "expected u, a, b, c, qa:(a,d), qb:(a,d), qc:(a,d) or d0:n".to_string(),
            })
        }
    }
}

fn parse_subspace(rest: &str, input: &str) -> Result<ElementKey> {
    let err = |reason: &str| Error::KeyParse {
        input: input.to_string(),
        reason: reason.to_string(),
    };
    let rest = rest.strip_prefix("q=").ok_or_else(|| err("expected sub:q=..;rref=[..]"))?;
    let (q_str, rref_part) = rest
        .split_once(';')
        .ok_or_else(|| err("expected sub:q=..;rref=[..]"))?;
    let q: u64 = q_str.trim().parse().map_err(|_| err("bad q"))?;
    let inner = rref_part
        .strip_prefix("rref=[")
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| err("expected rref=[..]"))?;
    let mut rows = Vec::new();
    if !inner.trim().is_empty() {
        for row_str in split_top(inner) {
            let row_inner = row_str
                .trim()
                .strip_prefix('[')
                .and_then(|r| r.strip_suffix(']'))
                .ok_or_else(|| err("expected [..] row"))?;
            let mut row = Vec::new();
            for entry in row_inner.split(',') {
                let v: u64 = entry.trim().parse().map_err(|_| err("bad matrix entry"))?;
                if v >= q {
                    return Err(err("matrix entry out of field range"));
                }
                row.push(v);
            }
            rows.push(row);
        }
    }
    Ok(ElementKey::Sub(SubspaceKey { q, rows }))
}

fn parse_pos(s: &str, input: &str) -> Result<u64> {
    let n: u64 = s.trim().parse().map_err(|_| Error::KeyParse {
        input: input.to_string(),
        reason: format!("`{}` is not a positive integer", s.trim()),
    })?;
    if n == 0 {
        return Err(Error::KeyParse {
            input: input.to_string(),
            reason: "integers here start at 1".to_string(),
        });
    }
    Ok(n)
}

/// Splits `s` on the single top-level comma, respecting `()`, `{}` and `[]`.
pub(crate) fn split_pair<'a>(s: &'a str, input: &str) -> Result<(&'a str, &'a str)> {
    let parts = split_top(s);
    if parts.len() != 2 {
        return Err(Error::KeyParse {
            input: input.to_string(),
            reason: "expected exactly two comma-separated components".to_string(),
        });
    }
    Ok((parts[0], parts[1]))
}

/// Splits on top-level commas, respecting bracket nesting.
pub(crate) fn split_top(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '{' | '[' => depth += 1,
            ')' | '}' | ']' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                parts.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(s[start..].trim());
    parts
}

pub(crate) fn is_label(s: &str) -> bool {
    !s.is_empty()
        && s.chars()
            .all(|c| c.is_ascii_alphanumeric() || "_{}(),".contains(c))
}

impl fmt::Display for ElementKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementKey::Div(n) => write!(f, "div:{n}"),
            ElementKey::Anti(n) => write!(f, "anti:{n}"),
            ElementKey::Lin(n) => write!(f, "lin:{n}"),
            ElementKey::Set(elems) => {
                let body: Vec<String> = elems.iter().map(u64::to_string).collect();
                write!(f, "set:{{{}}}", body.join(","))
            }
            ElementKey::Sub(sub) => {
                let rows: Vec<String> = sub
                    .rows
                    .iter()
                    .map(|row| {
                        let body: Vec<String> = row.iter().map(u64::to_string).collect();
                        format!("[{}]", body.join(","))
                    })
                    .collect();
                write!(f, "sub:q={};rref=[{}]", sub.q, rows.join(","))
            }
            ElementKey::Prod(a, b) => write!(f, "prod:({a},{b})"),
            ElementKey::CexP(p) => match p {
                PElem::U => write!(f, "P:u"),
                PElem::Z1 => write!(f, "P:z1"),
                PElem::Z2 => write!(f, "P:z2"),
                PElem::Pair(a, d) => write!(f, "P:prod:({a},{d})"),
                PElem::D0(d) => write!(f, "P:d0:{d}"),
            },
            ElementKey::CexQ(q) => match q {
                QElem::U => write!(f, "Q:u"),
                QElem::S(l) => write!(f, "Q:{}", l.as_str()),
                QElem::Copy(l, a, d) => write!(f, "Q:q{}:({a},{d})", l.as_str()),
                QElem::D0(d) => write!(f, "Q:d0:{d}"),
            },
            ElementKey::Named(label) => write!(f, "elem:{label}"),
        }
    }
}
