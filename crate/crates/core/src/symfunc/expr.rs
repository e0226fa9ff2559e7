use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{Partition, SymError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Basis {
    Monomial,
    Elementary,
    Schur,
}

impl Basis {
    fn symbol(self) -> char {
        match self {
            Basis::Monomial => 'm',
            Basis::Elementary => 'e',
            Basis::Schur => 's',
        }
    }
}

/// An integer combination of basis functions indexed by partitions.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisExpr {
    basis: Basis,
    terms: BTreeMap<Partition, BigInt>,
}

impl BasisExpr {
    pub fn zero(basis: Basis) -> Self {
        BasisExpr {
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// The constant 1, indexed by the empty partition.
    pub fn one(basis: Basis) -> Self {
        BasisExpr::term(basis, Partition::empty(), BigInt::one())
    }

    pub fn term(basis: Basis, lambda: Partition, coeff: impl Into<BigInt>) -> Self {
        let mut e = BasisExpr::zero(basis);
        e.add_term(lambda, coeff.into());
        e
    }

    pub fn from_terms<I, C>(basis: Basis, terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, C)>,
        C: Into<BigInt>,
    {
        let mut e = BasisExpr::zero(basis);
        for (lambda, c) in terms {
            e.add_term(lambda, c.into());
        }
        e
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, k: &BigInt) -> BasisExpr {
        let mut out = BasisExpr::zero(self.basis);
        for (lambda, c) in &self.terms {
            out.add_term(lambda.clone(), c * k);
        }
        out
    }

    pub fn add(&self, other: &BasisExpr) -> Result<BasisExpr, SymError> {
        self.expect_basis(other.basis)?;
        let mut out = self.clone();
        for (lambda, c) in &other.terms {
            out.add_term(lambda.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &BasisExpr) -> Result<BasisExpr, SymError> {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    /// Keeps the terms whose partition satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&Partition) -> bool) -> BasisExpr {
        BasisExpr {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(lambda, _)| keep(lambda))
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    /// Product in the elementary basis, `e_a e_b = e_{a u b}`.
    pub fn elementary_mul(&self, other: &BasisExpr) -> Result<BasisExpr, SymError> {
        self.expect_basis(Basis::Elementary)?;
        other.expect_basis(Basis::Elementary)?;
        let mut out = BasisExpr::zero(Basis::Elementary);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.union(b), x * y);
            }
        }
        Ok(out)
    }

    pub(crate) fn expect_basis(&self, basis: Basis) -> Result<(), SymError> {
        if self.basis != basis {
            return Err(SymError::WrongBasis {
                expected: basis,
                got: self.basis,
            });
        }
        Ok(())
    }
}

impl fmt::Display for BasisExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (lambda, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*{}{lambda}", self.basis.symbol())?;
        }
        Ok(())
    }
}

/// Serialized as a list of `{"partition": [..], "coeff": n}` objects.
impl Serialize for BasisExpr {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        crate::json::terms(self.terms.iter()).serialize(s)
    }
}
