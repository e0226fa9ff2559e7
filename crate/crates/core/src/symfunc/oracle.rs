//! Slow reference computations by explicit tableau and matrix enumeration.
//! They share no code with the fast paths in the rest of the module.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{partitions, Basis, BasisExpr, Partition, SymError};

/// A polynomial in `n` variables keyed by exponent vectors.
pub type Poly = BTreeMap<Vec<u32>, BigInt>;

/// Fills the cells of `shape` row by row with values `1..=max`, keeping rows
/// weakly and columns strictly increasing, and reports each finished content.
fn fill_tableaux(
    shape: &Partition,
    max: usize,
    allowed: &mut dyn FnMut(usize) -> bool,
    undo: &mut dyn FnMut(usize),
    done: &mut dyn FnMut(),
) {
    let cells: Vec<(usize, usize)> = shape
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = shape
        .parts()
        .iter()
        .map(|&len| vec![0; len as usize])
        .collect();

    #[allow(clippy::too_many_arguments)]
    fn go(
        idx: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        max: usize,
        allowed: &mut dyn FnMut(usize) -> bool,
        undo: &mut dyn FnMut(usize),
        done: &mut dyn FnMut(),
    ) {
        if idx == cells.len() {
            done();
            return;
        }
        let (r, c) = cells[idx];
        let mut lo = 1;
        if c > 0 {
            lo = lo.max(grid[r][c - 1]);
        }
        if r > 0 {
            lo = lo.max(grid[r - 1][c] + 1);
        }
        for v in lo..=max {
            if !allowed(v) {
                continue;
            }
            grid[r][c] = v;
            go(idx + 1, cells, grid, max, allowed, undo, done);
            undo(v);
        }
        grid[r][c] = 0;
    }

    go(0, &cells, &mut grid, max, allowed, undo, done);
}

/// Number of semistandard tableaux of `shape` whose entry `i + 1` occurs
/// `content[i]` times.
pub fn ssyt_count_brute(shape: &Partition, content: &[u32]) -> u64 {
    if shape.weight() != content.iter().map(|&x| x as u64).sum::<u64>() {
        return 0;
    }
    let remaining = std::cell::RefCell::new(content.to_vec());
    let mut count = 0u64;
    fill_tableaux(
        shape,
        content.len(),
        &mut |v| {
            let mut rem = remaining.borrow_mut();
            if rem[v - 1] == 0 {
                return false;
            }
            rem[v - 1] -= 1;
            true
        },
        &mut |v| remaining.borrow_mut()[v - 1] += 1,
        &mut || count += 1,
    );
    count
}

/// Monomial expansion of `s_lambda` in `num_vars` variables.
pub fn schur_to_monomial(lambda: &Partition, num_vars: usize) -> BasisExpr {
    let mut out = BasisExpr::zero(Basis::Monomial);
    if lambda.len() > num_vars {
        return out;
    }
    let n = lambda.weight() as u32;
    for mu in partitions(n, n, num_vars) {
        out.add_term(
            mu.clone(),
            BigInt::from(ssyt_count_brute(lambda, mu.parts())),
        );
    }
    out
}

/// Number of 0-1 matrices with the given row and column sums.
fn zero_one_matrices(rows: &[u32], cols: &mut Vec<u32>) -> u64 {
    let Some((&first, rest)) = rows.split_first() else {
        return u64::from(cols.iter().all(|&c| c == 0));
    };
    fn choose(start: usize, need: u32, rest: &[u32], cols: &mut Vec<u32>) -> u64 {
        if need == 0 {
            return zero_one_matrices(rest, cols);
        }
        let mut total = 0;
        for j in start..cols.len() {
            if cols[j] > 0 {
                cols[j] -= 1;
                total += choose(j + 1, need - 1, rest, cols);
                cols[j] += 1;
            }
        }
        total
    }
    choose(0, first, rest, cols)
}

/// Monomial expansion of `e_mu` in `num_vars` variables: the coefficient of
/// `m_nu` counts 0-1 matrices with row sums `mu` and column sums `nu`.
pub fn elementary_to_monomial(mu: &Partition, num_vars: usize) -> BasisExpr {
    let mut out = BasisExpr::zero(Basis::Monomial);
    let n = mu.weight() as u32;
    for nu in partitions(n, n, num_vars) {
        let mut cols = nu.parts().to_vec();
        out.add_term(nu, BigInt::from(zero_one_matrices(mu.parts(), &mut cols)));
    }
    out
}

/// Monomial expansion of an expression in any basis, in `num_vars` variables.
pub fn expr_to_monomial(expr: &BasisExpr, num_vars: usize) -> BasisExpr {
    let mut out = BasisExpr::zero(Basis::Monomial);
    for (lambda, c) in expr.terms() {
        let piece = match expr.basis() {
            Basis::Monomial if lambda.len() <= num_vars => {
                BasisExpr::term(Basis::Monomial, lambda.clone(), 1)
            }
            Basis::Monomial => continue,
            Basis::Elementary => elementary_to_monomial(lambda, num_vars),
            Basis::Schur => schur_to_monomial(lambda, num_vars),
        };
        out = out.add(&piece.scale(c)).expect("monomial basis");
    }
    out
}

/// `s_lambda(x_1, ..., x_n)` as an explicit polynomial, one monomial per tableau.
pub fn schur_polynomial(lambda: &Partition, num_vars: usize) -> Poly {
    let mut poly = Poly::new();
    if lambda.len() > num_vars {
        return poly;
    }
    let content = std::cell::RefCell::new(vec![0u32; num_vars]);
    fill_tableaux(
        lambda,
        num_vars,
        &mut |v| {
            content.borrow_mut()[v - 1] += 1;
            true
        },
        &mut |v| content.borrow_mut()[v - 1] -= 1,
        &mut || *poly.entry(content.borrow().clone()).or_default() += 1,
    );
    poly
}

pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_default() += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `s_lambda * s_mu` in `num_vars` variables, expanded by peeling off the
/// lexicographically largest monomial, which is always a partition.
pub fn schur_product_oracle(
    lambda: &Partition,
    mu: &Partition,
    num_vars: usize,
) -> Result<BasisExpr, SymError> {
    let mut rest = poly_mul(
        &schur_polynomial(lambda, num_vars),
        &schur_polynomial(mu, num_vars),
    );
    let mut out = BasisExpr::zero(Basis::Schur);
    while let Some((top, c)) = rest.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
        if !top.windows(2).all(|w| w[0] >= w[1]) || c.is_negative() {
            return Err(SymError::PeelingFailed);
        }
        let nu = Partition::from_parts(top);
        for (e, x) in schur_polynomial(&nu, num_vars) {
            let slot = rest.entry(e).or_default();
            *slot -= &c * x;
        }
        rest.retain(|_, x| !x.is_zero());
        out.add_term(nu, c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn brute_counts() {
        assert_eq!(ssyt_count_brute(&p(&[2, 1]), &[1, 1, 1]), 2);
        assert_eq!(
            ssyt_count_brute(&p(&[2, 2, 2, 2, 2, 2]), &[2, 2, 2, 2, 1, 1, 1, 1]),
            2
        );
        assert_eq!(ssyt_count_brute(&p(&[2, 1]), &[1, 2]), 1);
    }

    #[test]
    fn schur_monomials() {
        let m = |terms: &[(&[u32], i64)]| {
            BasisExpr::from_terms(Basis::Monomial, terms.iter().map(|(v, c)| (p(v), *c)))
        };
        assert_eq!(schur_to_monomial(&p(&[1]), 2), m(&[(&[1], 1)]));
        assert!(schur_to_monomial(&p(&[1, 1, 1]), 2).is_zero());
        assert_eq!(schur_to_monomial(&p(&[2, 1]), 2), m(&[(&[2, 1], 1)]));
        let poly = schur_polynomial(&p(&[2, 1]), 2);
        assert_eq!(poly.len(), 2);
        assert_eq!(poly[&vec![2, 1]], BigInt::from(1));
        assert_eq!(poly[&vec![1, 2]], BigInt::from(1));
        assert_eq!(
            elementary_to_monomial(&p(&[1, 1]), 2),
            m(&[(&[2], 1), (&[1, 1], 2)])
        );
    }

    #[test]
    fn products() {
        let s = |terms: &[(&[u32], i64)]| {
            BasisExpr::from_terms(Basis::Schur, terms.iter().map(|(v, c)| (p(v), *c)))
        };
        assert_eq!(
            schur_product_oracle(&p(&[1]), &p(&[1]), 2).unwrap(),
            s(&[(&[2], 1), (&[1, 1], 1)])
        );
        assert_eq!(
            schur_product_oracle(&p(&[1, 1]), &p(&[1]), 2).unwrap(),
            s(&[(&[2, 1], 1)])
        );
        assert_eq!(
            schur_product_oracle(&p(&[2, 1]), &p(&[]), 3).unwrap(),
            s(&[(&[2, 1], 1)])
        );
        assert_eq!(
            schur_product_oracle(&p(&[2, 1]), &p(&[2, 1]), 4).unwrap(),
            s(&[
                (&[4, 2], 1),
                (&[4, 1, 1], 1),
                (&[3, 3], 1),
                (&[3, 2, 1], 2),
                (&[3, 1, 1, 1], 1),
                (&[2, 2, 2], 1),
                (&[2, 2, 1, 1], 1),
            ])
        );
    }
}
