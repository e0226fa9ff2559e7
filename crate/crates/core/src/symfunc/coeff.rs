use num_bigint::BigInt;
use num_traits::{One, Pow};

use super::{partitions, Basis, BasisExpr, Partition, SymError};

/// `C(a, b)`, zero when `b < 0`, `a < 0` or `b > a`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::default();
    }
    num_integer::binomial(BigInt::from(a), BigInt::from(b))
}

/// `f = sum_mu b_mu e_mu` over partitions `mu` of `p` with at most `l` parts,
/// `b_mu = prod_j C(l - mu'_1 + mu'_j, mu'_j - mu'_{j+1})`.
pub fn lemma_michael_f(l: u32, p: u32) -> BasisExpr {
    let mut out = BasisExpr::zero(Basis::Elementary);
    for mu in partitions(p, p, l as usize) {
        let conj = mu.conjugate();
        let first = conj.part(0) as i64;
        let mut b = BigInt::one();
        for j in 0..conj.len() {
            let cj = conj.part(j) as i64;
            b *= binomial(l as i64 - first + cj, cj - conj.part(j + 1) as i64);
        }
        out.add_term(mu, b);
    }
    out
}

/// `sum_lambda (prod_i C(l, lambda_i)) m_lambda` over partitions of `p` with
/// parts at most `l`.
pub fn f_in_monomial_basis(l: u32, p: u32) -> BasisExpr {
    let mut out = BasisExpr::zero(Basis::Monomial);
    for lambda in partitions(p, l, p as usize) {
        let c = lambda
            .parts()
            .iter()
            .fold(BigInt::one(), |acc, &x| acc * binomial(l as i64, x as i64));
        out.add_term(lambda, c);
    }
    out
}

/// `expr^k` in the elementary basis, expanded with multinomial coefficients.
pub fn e_power(expr: &BasisExpr, k: u32) -> Result<BasisExpr, SymError> {
    expr.expect_basis(Basis::Elementary)?;
    let terms: Vec<(&Partition, &BigInt)> = expr.terms().collect();
    let mut factorial = vec![BigInt::one()];
    for i in 1..=k {
        let next = &factorial[i as usize - 1] * BigInt::from(i);
        factorial.push(next);
    }
    let mut out = BasisExpr::zero(Basis::Elementary);
    let mut exps = vec![0u32; terms.len()];
    compositions(&terms, &factorial, k, 0, &mut exps, &mut out);
    Ok(out)
}

fn compositions(
    terms: &[(&Partition, &BigInt)],
    factorial: &[BigInt],
    left: u32,
    idx: usize,
    exps: &mut Vec<u32>,
    out: &mut BasisExpr,
) {
    if idx + 1 >= terms.len() {
        if let Some(last) = exps.last_mut() {
            *last = left;
        } else if left > 0 {
            return;
        }
        let mut coeff = factorial[factorial.len() - 1].clone();
        let mut parts = Vec::new();
        for (&(lambda, c), &e) in terms.iter().zip(exps.iter()) {
            coeff = coeff / &factorial[e as usize] * Pow::pow(c, e);
            for _ in 0..e {
                parts.extend_from_slice(lambda.parts());
            }
        }
        out.add_term(Partition::from_parts(parts), coeff);
        return;
    }
    for e in (0..=left).rev() {
        exps[idx] = e;
        compositions(terms, factorial, left - e, idx + 1, exps, out);
    }
}
