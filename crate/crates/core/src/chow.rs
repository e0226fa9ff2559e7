//! The Chow ring of the Grassmannian `Gr_d(k^n)` in the basis of Schubert
//! classes `Delta_lambda`, `lambda` inside the `d x (n - d)` box.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::json;
use crate::symfunc::{schur_product_oracle, Basis, BasisExpr, Partition, SymError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChowError {
    #[error("a Grassmannian of {0}-dimensional subspaces needs d >= 1")]
    EmptyBox(usize),
    #[error("classes live on different Grassmannians: {0} and {1}")]
    BoxMismatch(GrassBox, GrassBox),
    #[error("rectangle width {j} exceeds the box width {codim}")]
    RectangleTooWide { j: u32, codim: u32 },
    #[error("cannot add {r} boxes in distinct rows of a box with {d} rows")]
    PieriTooLong { r: usize, d: usize },
    #[error(transparent)]
    Sym(#[from] SymError),
}

/// `Gr_d(k^(d + codim))`; classes are indexed by partitions with at most `d`
/// parts, each at most `codim`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GrassBox {
    pub d: usize,
    pub codim: u32,
}

impl GrassBox {
    pub fn new(d: usize, codim: u32) -> Result<Self, ChowError> {
        if d == 0 {
            return Err(ChowError::EmptyBox(d));
        }
        Ok(GrassBox { d, codim })
    }

    pub fn contains(&self, lambda: &Partition) -> bool {
        lambda.fits(self.d, self.codim)
    }

    /// `codim^d`, the class of a point.
    pub fn full(&self) -> Partition {
        Partition::rectangle(self.codim, self.d)
    }

    /// The complement of `lambda` in the box, rotated.
    pub fn complement(&self, lambda: &Partition) -> Partition {
        Partition::from_parts(
            (0..self.d)
                .map(|i| self.codim - lambda.part(self.d - 1 - i))
                .collect(),
        )
    }
}

impl fmt::Display for GrassBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.d, self.codim)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchubertClass {
    grass: GrassBox,
    terms: BTreeMap<Partition, BigInt>,
}

impl SchubertClass {
    pub fn zero(grass: GrassBox) -> Self {
        SchubertClass {
            grass,
            terms: BTreeMap::new(),
        }
    }

    /// `Delta_empty`, the unit.
    pub fn identity(grass: GrassBox) -> Self {
        SchubertClass::delta(grass, &Partition::empty())
    }

    /// `Delta_lambda`, zero when `lambda` leaves the box.
    pub fn delta(grass: GrassBox, lambda: &Partition) -> Self {
        let mut x = SchubertClass::zero(grass);
        x.add_term(lambda.clone(), BigInt::one());
        x
    }

    /// Reads `s_lambda` as `Delta_lambda`, dropping terms outside the box.
    pub fn from_schur_expr(grass: GrassBox, expr: &BasisExpr) -> Result<Self, ChowError> {
        if expr.basis() != Basis::Schur {
            return Err(SymError::WrongBasis {
                expected: Basis::Schur,
                got: expr.basis(),
            }
            .into());
        }
        let mut x = SchubertClass::zero(grass);
        for (lambda, c) in expr.terms() {
            x.add_term(lambda.clone(), c.clone());
        }
        Ok(x)
    }

    pub fn grass(&self) -> GrassBox {
        self.grass
    }

    /// Adds `coeff * Delta_lambda`; terms outside the box vanish.
    pub fn add_term(&mut self, lambda: Partition, coeff: BigInt) {
        if coeff.is_zero() || !self.grass.contains(&lambda) {
            return;
        }
        let slot = self.terms.entry(lambda.clone()).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &SchubertClass) -> Result<SchubertClass, ChowError> {
        self.same_box(other)?;
        let mut out = self.clone();
        for (lambda, c) in &other.terms {
            out.add_term(lambda.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, k: &BigInt) -> SchubertClass {
        let mut out = SchubertClass::zero(self.grass);
        for (lambda, c) in &self.terms {
            out.add_term(lambda.clone(), c * k);
        }
        out
    }

    /// Multiplication by `Delta_{j^d}`: `Delta_lambda -> Delta_{lambda + j^d}`.
    pub fn rectangle_mul(&self, j: u32) -> Result<SchubertClass, ChowError> {
        if j > self.grass.codim {
            return Err(ChowError::RectangleTooWide {
                j,
                codim: self.grass.codim,
            });
        }
        let mut out = SchubertClass::zero(self.grass);
        for (lambda, c) in &self.terms {
            let shifted =
                Partition::from_parts((0..self.grass.d).map(|i| lambda.part(i) + j).collect());
            out.add_term(shifted, c.clone());
        }
        Ok(out)
    }

    /// Multiplication by `c_r(U^dual) = Delta_{1^r}`: add `r` boxes, at most
    /// one per row.
    pub fn pieri_mul(&self, r: usize) -> Result<SchubertClass, ChowError> {
        let d = self.grass.d;
        if r > d {
            return Err(ChowError::PieriTooLong { r, d });
        }
        let mut out = SchubertClass::zero(self.grass);
        for (lambda, c) in &self.terms {
            let mut rows: Vec<u32> = (0..d).map(|i| lambda.part(i)).collect();
            vertical_strips(&mut rows, 0, r, &mut |grown| {
                out.add_term(Partition::from_parts(grown.to_vec()), c.clone());
            });
        }
        Ok(out)
    }

    /// Coefficient of the point class.
    pub fn degree(&self) -> BigInt {
        self.coeff(&self.grass.full())
    }

    /// General product through Schur polynomials in `d` variables.
    pub fn product_oracle(&self, other: &SchubertClass) -> Result<SchubertClass, ChowError> {
        self.same_box(other)?;
        let mut out = SchubertClass::zero(self.grass);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let prod = schur_product_oracle(a, b, self.grass.d)?;
                for (nu, z) in prod.terms() {
                    out.add_term(nu.clone(), x * y * z);
                }
            }
        }
        Ok(out)
    }

    /// Greatest common divisor of the coefficients, zero for the zero class.
    pub fn gcd(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    fn same_box(&self, other: &SchubertClass) -> Result<(), ChowError> {
        if self.grass != other.grass {
            return Err(ChowError::BoxMismatch(self.grass, other.grass));
        }
        Ok(())
    }

    pub(crate) fn json_terms(&self) -> Vec<json::Term<'_>> {
        json::terms(self.terms.iter())
    }
}

/// Adds one box to each of `left` rows from `row` on, keeping rows weakly
/// decreasing.
fn vertical_strips(rows: &mut Vec<u32>, row: usize, left: usize, emit: &mut impl FnMut(&[u32])) {
    if left == 0 {
        emit(rows);
        return;
    }
    if rows.len() - row < left {
        return;
    }
    if row == 0 || rows[row] < rows[row - 1] {
        rows[row] += 1;
        vertical_strips(rows, row + 1, left - 1, emit);
        rows[row] -= 1;
    }
    vertical_strips(rows, row + 1, left, emit);
}

impl Serialize for SchubertClass {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SchubertClass", 2)?;
        st.serialize_field("box", &self.grass)?;
        st.serialize_field("terms", &self.json_terms())?;
        st.end()
    }
}

impl fmt::Display for SchubertClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (lambda, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*D{lambda}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn class(grass: GrassBox, terms: &[(&[u32], i64)]) -> SchubertClass {
        let mut x = SchubertClass::zero(grass);
        for (v, c) in terms {
            x.add_term(p(v), BigInt::from(*c));
        }
        x
    }

    #[test]
    fn deltas() {
        let b = GrassBox::new(4, 16).unwrap();
        assert!(SchubertClass::delta(b, &p(&[17, 14, 14, 14])).is_zero());
        let b28 = GrassBox::new(2, 8).unwrap();
        assert_eq!(
            SchubertClass::delta(b28, &p(&[6, 6])).coeff(&p(&[6, 6])),
            BigInt::one()
        );
        assert_eq!(
            SchubertClass::identity(b28).coeff(&Partition::empty()),
            BigInt::one()
        );
        assert!(GrassBox::new(0, 3).is_err());
    }

    #[test]
    fn rectangles() {
        let b = GrassBox::new(4, 16).unwrap();
        let x = SchubertClass::delta(b, &p(&[1, 1, 1]))
            .rectangle_mul(14)
            .unwrap();
        assert_eq!(x, class(b, &[(&[15, 15, 15, 14], 1)]));
        assert!(SchubertClass::delta(b, &p(&[3]))
            .rectangle_mul(14)
            .unwrap()
            .is_zero());
        let y = class(b, &[(&[2, 1], 3), (&[5], 2)]);
        assert_eq!(y.rectangle_mul(0).unwrap(), y);
        assert!(y.rectangle_mul(17).is_err());
    }

    #[test]
    fn pieri() {
        let b22 = GrassBox::new(2, 2).unwrap();
        assert_eq!(
            SchubertClass::delta(b22, &p(&[1])).pieri_mul(1).unwrap(),
            class(b22, &[(&[2], 1), (&[1, 1], 1)])
        );
        assert!(SchubertClass::delta(b22, &p(&[2, 2]))
            .pieri_mul(1)
            .unwrap()
            .is_zero());
        let b33 = GrassBox::new(3, 3).unwrap();
        assert_eq!(
            SchubertClass::delta(b33, &p(&[1])).pieri_mul(2).unwrap(),
            class(b33, &[(&[2, 1], 1), (&[1, 1, 1], 1)])
        );
        assert!(SchubertClass::delta(b22, &p(&[1])).pieri_mul(3).is_err());
    }

    #[test]
    fn schur_loading() {
        let b = GrassBox::new(4, 16).unwrap();
        let expr = BasisExpr::from_terms(
            Basis::Schur,
            [(p(&[1, 1, 1]), 8), (p(&[2, 1]), 16), (p(&[3]), 8)],
        );
        let x = SchubertClass::from_schur_expr(b, &expr).unwrap();
        assert_eq!(x, class(b, &[(&[1, 1, 1], 8), (&[2, 1], 16), (&[3], 8)]));
        assert!(
            SchubertClass::from_schur_expr(b, &BasisExpr::zero(Basis::Schur))
                .unwrap()
                .is_zero()
        );
        assert!(SchubertClass::from_schur_expr(b, &BasisExpr::zero(Basis::Elementary)).is_err());
        let b28 = GrassBox::new(2, 8).unwrap();
        let wide = BasisExpr::from_terms(Basis::Schur, [(p(&[6, 6]), 16), (p(&[4, 4, 4]), 16)]);
        assert_eq!(SchubertClass::from_schur_expr(b28, &wide).unwrap().len(), 1);
    }

    #[test]
    fn degrees() {
        let b28 = GrassBox::new(2, 8).unwrap();
        assert_eq!(class(b28, &[(&[8, 8], 32)]).degree(), BigInt::from(32));
        assert_eq!(SchubertClass::identity(b28).degree(), BigInt::zero());
        let point = GrassBox::new(3, 0).unwrap();
        assert_eq!(SchubertClass::identity(point).degree(), BigInt::one());
        let p1 = GrassBox::new(1, 1).unwrap();
        assert_eq!(SchubertClass::delta(p1, &p(&[1])).degree(), BigInt::one());
    }

    #[test]
    fn oracle_products() {
        let b = GrassBox::new(2, 2).unwrap();
        let x = class(b, &[(&[1], 2), (&[2], 1)]);
        assert_eq!(x.product_oracle(&SchubertClass::identity(b)).unwrap(), x);
        let other = GrassBox::new(2, 3).unwrap();
        assert!(x.product_oracle(&SchubertClass::identity(other)).is_err());
        assert_eq!(x.gcd(), BigInt::one());
        assert_eq!(class(b, &[(&[1], 4), (&[2], 6)]).gcd(), BigInt::from(2));
        assert_eq!(b.complement(&p(&[1])), p(&[2, 1]));
    }

    #[test]
    fn serializes_terms() {
        let b = GrassBox::new(4, 12).unwrap();
        let x = class(b, &[(&[12, 11, 11, 11], 2)]);
        let v = serde_json::to_string(&x).unwrap();
        assert_eq!(
            v,
            r#"{"box":{"d":4,"codim":12},"terms":[{"partition":[12,11,11,11],"coeff":2}]}"#
        );
    }
}
