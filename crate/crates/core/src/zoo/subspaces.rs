//! Finite-dimensional subspaces of F_q^∞ under inclusion.
//!
//! A subspace is keyed by the reduced row echelon form of a basis, with
//! trailing all-zero columns trimmed. RREF bases are unique per subspace, so
//! keys are canonical, and trimming makes the key independent of the ambient
//! dimension: embedding F_q^n into F_q^{n+1} on the first n coordinates
//! preserves keys, which is what makes frontiers nest.

use crate::error::{Error, Result};
use crate::gf::GaloisField;
use crate::key::{ElementKey, SubspaceKey};
use crate::poset::{PosetOracle, MAX_ENUMERATION};

pub struct SubspacesOracle {
    gf: GaloisField,
}

impl SubspacesOracle {
    pub fn new(q: u64) -> Result<Self> {
        Ok(SubspacesOracle {
            gf: GaloisField::new(q)?,
        })
    }

    pub fn q(&self) -> u64 {
        self.gf.q()
    }
}

/// Row-reduces `rows` in place to reduced row echelon form, dropping zero
/// rows. All rows must share a width.
pub fn rref(mut rows: Vec<Vec<u64>>, gf: &GaloisField) -> Vec<Vec<u64>> {
    let width = rows.first().map_or(0, Vec::len);
    let mut pivot_row = 0;
    for col in 0..width {
        let Some(src) = (pivot_row..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(pivot_row, src);
        let inv = gf.inv(rows[pivot_row][col]);
        for entry in rows[pivot_row].iter_mut() {
            *entry = gf.mul(*entry, inv);
        }
        let pivot = rows[pivot_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != pivot_row && row[col] != 0 {
                let factor = row[col];
                for (entry, &p) in row.iter_mut().zip(&pivot) {
                    *entry = gf.sub(*entry, gf.mul(factor, p));
                }
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    rows.truncate(pivot_row);
    rows
}

/// Drops trailing all-zero columns, producing the canonical key width.
pub fn trim(mut rows: Vec<Vec<u64>>) -> Vec<Vec<u64>> {
    let width = rows
        .iter()
        .flat_map(|row| row.iter().rposition(|&e| e != 0).map(|i| i + 1))
        .max()
        .unwrap_or(0);
    for row in rows.iter_mut() {
        row.truncate(width);
    }
    rows
}

fn pad(rows: &[Vec<u64>], width: usize) -> Vec<Vec<u64>> {
    rows.iter()
        .map(|row| {
            let mut r = row.clone();
            r.resize(width, 0);
            r
        })
        .collect()
}

/// Canonical key for the span of arbitrary generating rows.
pub fn canonical_subspace(rows: Vec<Vec<u64>>, gf: &GaloisField) -> SubspaceKey {
    SubspaceKey {
        q: gf.q(),
        rows: trim(rref(rows, gf)),
    }
}

/// Whether `sub`'s row space is contained in `sup`'s. Both are RREF bases.
fn contains_rows(sup: &[Vec<u64>], sub: &[Vec<u64>], gf: &GaloisField) -> bool {
    let width = sup
        .first()
        .map_or(0, Vec::len)
        .max(sub.first().map_or(0, Vec::len));
    let sup = pad(sup, width);
    let pivots: Vec<usize> = sup
        .iter()
        .map(|row| row.iter().position(|&e| e != 0).expect("nonzero RREF row"))
        .collect();
    for row in pad(sub, width) {
        let mut v = row;
        for (basis_row, &p) in sup.iter().zip(&pivots) {
            if v[p] != 0 {
                let factor = v[p];
                for c in 0..width {
                    let s = gf.mul(factor, basis_row[c]);
                    v[c] = gf.sub(v[c], s);
                }
            }
        }
        if v.iter().any(|&e| e != 0) {
            return false;
        }
    }
    true
}

fn is_canonical_rref(key: &SubspaceKey) -> bool {
    let rows = &key.rows;
    if rows.is_empty() {
        return true;
    }
    let width = rows[0].len();
    if width == 0 || rows.iter().any(|r| r.len() != width) {
        return false;
    }
    if rows.iter().any(|r| r.iter().any(|&e| e >= key.q)) {
        return false;
    }
    // trailing column must be live, pivots strictly increasing, entries
    // above and below pivots zero, pivot entries one
    if rows.iter().all(|r| r[width - 1] == 0) {
        return false;
    }
    let mut last_pivot = None;
    for (i, row) in rows.iter().enumerate() {
        let Some(p) = row.iter().position(|&e| e != 0) else {
            return false;
        };
        if row[p] != 1 {
            return false;
        }
        if let Some(lp) = last_pivot {
            if p <= lp {
                return false;
            }
        }
        last_pivot = Some(p);
        for (j, other) in rows.iter().enumerate() {
            if j != i && other[p] != 0 {
                return false;
            }
        }
    }
    true
}

/// Enumerates every RREF matrix with `cols` columns over the field, i.e.
/// every subspace of F_q^cols, invoking `emit` once per matrix.
pub fn for_each_rref<F>(gf: &GaloisField, cols: usize, limit: usize, mut emit: F) -> Result<()>
where
    F: FnMut(Vec<Vec<u64>>) -> Result<()>,
{
    let q = gf.q();
    let mut produced = 0usize;
    let bail = |produced: &mut usize| -> Result<()> {
        *produced += 1;
        if *produced > limit {
            return Err(Error::Invalid(format!(
                "subspace enumeration exceeded {limit} elements"
            )));
        }
        Ok(())
    };
    for rank in 0..=cols {
        let mut pivots: Vec<usize> = (0..rank).collect();
        loop {
            // free cells: non-pivot columns to the right of each row's pivot
            let mut free: Vec<(usize, usize)> = Vec::new();
            for (i, &p) in pivots.iter().enumerate() {
                for j in p + 1..cols {
                    if !pivots.contains(&j) {
                        free.push((i, j));
                    }
                }
            }
            let mut assignment = vec![0u64; free.len()];
            loop {
                let mut rows = vec![vec![0u64; cols]; rank];
                for (i, &p) in pivots.iter().enumerate() {
                    rows[i][p] = 1;
                }
                for (slot, &(i, j)) in free.iter().enumerate() {
                    rows[i][j] = assignment[slot];
                }
                bail(&mut produced)?;
                emit(rows)?;
                // odometer over F_q^free
                let mut k = 0;
                loop {
                    if k == assignment.len() {
                        break;
                    }
                    assignment[k] += 1;
                    if assignment[k] < q {
                        break;
                    }
                    assignment[k] = 0;
                    k += 1;
                }
                if assignment.iter().all(|&a| a == 0) {
                    break;
                }
            }
            // next pivot combination
            if rank == 0 {
                break;
            }
            let mut i = rank;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                if pivots[i] < cols - (rank - i) {
                    pivots[i] += 1;
                    for j in i + 1..rank {
                        pivots[j] = pivots[j - 1] + 1;
                    }
                    break;
                }
                if i == 0 {
                    pivots.clear();
                    break;
                }
            }
            if pivots.is_empty() {
                break;
            }
        }
    }
    Ok(())
}

impl PosetOracle for SubspacesOracle {
    fn name(&self) -> String {
        format!("subspaces(q={})", self.gf.q())
    }

    fn contains(&self, key: &ElementKey) -> bool {
        matches!(key, ElementKey::Sub(sk) if sk.q == self.gf.q() && is_canonical_rref(sk))
    }

    fn leq_raw(&self, x: &ElementKey, y: &ElementKey) -> bool {
        match (x, y) {
            (ElementKey::Sub(a), ElementKey::Sub(b)) => contains_rows(&b.rows, &a.rows, &self.gf),
            _ => false,
        }
    }

    fn bottom(&self) -> Option<ElementKey> {
        Some(ElementKey::Sub(SubspaceKey {
            q: self.gf.q(),
            rows: Vec::new(),
        }))
    }

    fn down_set_raw(&self, x: &ElementKey) -> Result<Vec<ElementKey>> {
        let ElementKey::Sub(sk) = x else { unreachable!() };
        let dim = sk.dim();
        if dim > 10 {
            return Err(Error::DownSetTooLarge {
                poset: self.name(),
                key: x.to_string(),
            });
        }
        // Subspaces of span(B) correspond to subspaces of F_q^dim through
        // the basis: coordinate rows map to combinations of basis rows.
        let width = sk.width();
        let mut out = Vec::new();
        for_each_rref(&self.gf, dim, MAX_ENUMERATION, |coord_rows| {
            let ambient_rows: Vec<Vec<u64>> = coord_rows
                .iter()
                .map(|crow| {
                    let mut v = vec![0u64; width];
                    for (c, &coef) in crow.iter().enumerate() {
                        if coef != 0 {
                            for (j, &b) in sk.rows[c].iter().enumerate() {
                                v[j] = self.gf.add(v[j], self.gf.mul(coef, b));
                            }
                        }
                    }
                    v
                })
                .collect();
            out.push(ElementKey::Sub(canonical_subspace(ambient_rows, &self.gf)));
            Ok(())
        })?;
        Ok(out)
    }

    fn frontier_raw(&self, n: u32) -> Result<Vec<ElementKey>> {
        let mut out = Vec::new();
        for_each_rref(&self.gf, n as usize, MAX_ENUMERATION, |rows| {
            out.push(ElementKey::Sub(SubspaceKey {
                q: self.gf.q(),
                rows: trim(rows),
            }));
            Ok(())
        })
        .map_err(|_| Error::FrontierTooLarge {
            poset: self.name(),
            bound: n,
            limit: MAX_ENUMERATION,
        })?;
        Ok(out)
    }
}
