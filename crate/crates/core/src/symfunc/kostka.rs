use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::{Basis, BasisExpr, Partition, SymError};

/// Counts semistandard tableaux of every reachable shape with content
/// `weight`, filling the entries `1, 2, ...` one horizontal strip at a time.
/// Row `j` of every shape is capped at `cap(j)`; a cap of zero forbids the row.
/// Intermediate shapes are merged, so each `(shape, entries used)` state is
/// expanded once.
fn kostka_column(weight: &Partition, cap: impl Fn(usize) -> u32) -> HashMap<Vec<u32>, BigUint> {
    let mut states: HashMap<Vec<u32>, BigUint> = HashMap::new();
    states.insert(Vec::new(), BigUint::one());
    for &size in weight.parts() {
        let mut next: HashMap<Vec<u32>, BigUint> = HashMap::new();
        for (shape, count) in &states {
            let mut grown = shape.clone();
            grown.push(0);
            add_strips(shape, &mut grown, 0, size, &cap, &mut |s| {
                let mut key = s.to_vec();
                while key.last() == Some(&0) {
                    key.pop();
                }
                *next.entry(key).or_default() += count;
            });
        }
        states = next;
    }
    states
}

/// Enumerates `new` with `old_j <= new_j <= min(cap(j), old_{j-1})` and
/// `sum(new) - sum(old) = left`, starting at row `row`.
fn add_strips(
    old: &[u32],
    new: &mut Vec<u32>,
    row: usize,
    left: u32,
    cap: &impl Fn(usize) -> u32,
    emit: &mut impl FnMut(&[u32]),
) {
    if left == 0 {
        emit(new);
        return;
    }
    if row >= new.len() {
        return;
    }
    let base = old.get(row).copied().unwrap_or(0);
    let mut upper = cap(row);
    if row > 0 {
        upper = upper.min(old[row - 1]);
    }
    if upper < base {
        return;
    }
    let most = (upper - base).min(left);
    for add in (0..=most).rev() {
        new[row] = base + add;
        add_strips(old, new, row + 1, left - add, cap, emit);
    }
    new[row] = base;
}

/// Number of semistandard Young tableaux of shape `shape` and content `weight`.
pub fn kostka(shape: &Partition, weight: &Partition) -> Result<BigUint, SymError> {
    if shape.weight() != weight.weight() {
        return Err(SymError::WeightMismatch {
            left: shape.clone(),
            right: weight.clone(),
        });
    }
    let column = kostka_column(weight, |j| shape.part(j));
    Ok(column.get(shape.parts()).cloned().unwrap_or_default())
}

/// `e_mu = sum_lambda K(lambda, mu) s_{lambda'}`.
pub fn e_to_schur(expr: &BasisExpr) -> Result<BasisExpr, SymError> {
    e_to_schur_truncated(expr, None)
}

/// As [`e_to_schur`], keeping only Schur terms with at most `max_len` parts.
/// Shapes whose conjugate is too long are never generated.
pub fn e_to_schur_truncated(
    expr: &BasisExpr,
    max_len: Option<usize>,
) -> Result<BasisExpr, SymError> {
    expr.expect_basis(Basis::Elementary)?;
    let mut out = BasisExpr::zero(Basis::Schur);
    for (nu, c) in expr.terms() {
        let bound = max_len.map_or(u32::MAX, |m| m as u32);
        for (shape, k) in kostka_column(nu, |_| bound) {
            let conj = Partition::from_parts(shape).conjugate();
            out.add_term(conj, c * BigInt::from(k));
        }
    }
    Ok(out)
}

/// Adds one horizontal strip of `size` boxes to every shape in `states`.
fn strip_step(
    states: &HashMap<Vec<u32>, BigInt>,
    size: u32,
    bound: u32,
) -> HashMap<Vec<u32>, BigInt> {
    let mut next: HashMap<Vec<u32>, BigInt> = HashMap::new();
    for (shape, count) in states {
        let mut grown = shape.clone();
        grown.push(0);
        add_strips(shape, &mut grown, 0, size, &|_| bound, &mut |s| {
            let mut key = s.to_vec();
            while key.last() == Some(&0) {
                key.pop();
            }
            *next.entry(key).or_default() += count;
        });
    }
    next.retain(|_, c| !c.is_zero());
    next
}

/// `e_to_schur_truncated(e_power(expr, k), max_len)` without expanding the
/// power: multiplying by `e_j` adds a vertical strip of `j` boxes, so the
/// conjugate shapes are grown by horizontal strips one factor at a time and
/// equal intermediate shapes are merged.
pub fn e_power_to_schur(
    expr: &BasisExpr,
    k: u32,
    max_len: Option<usize>,
) -> Result<BasisExpr, SymError> {
    expr.expect_basis(Basis::Elementary)?;
    let bound = max_len.map_or(u32::MAX, |m| m as u32);
    let mut states: HashMap<Vec<u32>, BigInt> = HashMap::new();
    states.insert(Vec::new(), BigInt::one());
    for _ in 0..k {
        let mut next: HashMap<Vec<u32>, BigInt> = HashMap::new();
        for (mu, c) in expr.terms() {
            let mut cur = states.clone();
            for &part in mu.parts() {
                cur = strip_step(&cur, part, bound);
            }
            for (shape, x) in cur {
                *next.entry(shape).or_default() += x * c;
            }
        }
        next.retain(|_, c| !c.is_zero());
        states = next;
    }
    let mut out = BasisExpr::zero(Basis::Schur);
    for (shape, c) in states {
        out.add_term(Partition::from_parts(shape).conjugate(), c);
    }
    Ok(out)
}
