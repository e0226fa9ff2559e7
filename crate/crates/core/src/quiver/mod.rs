//! Quivers, dimension vectors, the Euler form and root classification.
//!
//! Vertices of a [`QuiverThree`] are indexed `0, 1, 2` for `q1, q2, q3`; those
//! of a [`GenKronecker`] are `0` (source `q0`) and `1` (sink `q1`).

mod fp;
mod rep;

use std::fmt;
use std::ops::{Add, Sub};

use serde::Serialize;
use thiserror::Error;

pub use fp::is_probable_prime;
pub use rep::{
    generic_ext, generic_hom, hom_dim, sample_representation, FpMatrix, FpRepresentation,
    DEFAULT_PRIME, DEFAULT_TRIALS,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("quiver is not connected")]
    Disconnected,
    #[error("Kronecker quiver needs at least one arrow")]
    NoArrows,
    #[error("dimension vector {got} has length {}, expected {expected}", got.len())]
    Shape { expected: usize, got: DimVec },
    #[error("zero dimension vector")]
    ZeroVector,
    #[error("dimension vector {0} has a negative entry")]
    Negative(DimVec),
    #[error("vertex {vertex} out of range for a quiver with {count} vertices")]
    Vertex { vertex: usize, count: usize },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("representations live over different fields or quivers")]
    Incompatible,
    #[error("trials must be at least 1")]
    NoTrials,
    #[error("sampled ext({a},{b}) = {value} < 0; raise trials")]
    SamplingFailure { a: DimVec, b: DimVec, value: i64 },
}

/// An acyclic quiver given by its arrow multiplicities.
pub trait Quiver {
    fn vertex_count(&self) -> usize;

    /// `(source, target, count)` for each pair of vertices joined by arrows.
    fn arrow_blocks(&self) -> Vec<(usize, usize, u64)>;

    /// Every arrow listed individually as `(source, target)`.
    fn arrows(&self) -> Vec<(usize, usize)> {
        self.arrow_blocks()
            .into_iter()
            .flat_map(|(s, t, c)| std::iter::repeat_n((s, t), c as usize))
            .collect()
    }
}

/// `Q(m12, m13, m23)`: `m12` arrows `q2 -> q1`, `m13` arrows `q3 -> q1`, `m23` arrows `q3 -> q2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct QuiverThree {
    pub m12: u64,
    pub m13: u64,
    pub m23: u64,
}

impl QuiverThree {
    pub fn new(m12: u64, m13: u64, m23: u64) -> Result<Self, QuiverError> {
        let isolated = (m12 == 0 && m13 == 0) || (m12 == 0 && m23 == 0) || (m13 == 0 && m23 == 0);
        if isolated {
            return Err(QuiverError::Disconnected);
        }
        Ok(QuiverThree { m12, m13, m23 })
    }
}

impl Quiver for QuiverThree {
    fn vertex_count(&self) -> usize {
        3
    }

    fn arrow_blocks(&self) -> Vec<(usize, usize, u64)> {
        vec![(1, 0, self.m12), (2, 0, self.m13), (2, 1, self.m23)]
    }
}

impl fmt::Display for QuiverThree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q({},{},{})", self.m12, self.m13, self.m23)
    }
}

/// `K(n)`: `n` arrows from the source `q0` to the sink `q1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GenKronecker {
    pub n: u64,
}

impl GenKronecker {
    pub fn new(n: u64) -> Result<Self, QuiverError> {
        if n == 0 {
            return Err(QuiverError::NoArrows);
        }
        Ok(GenKronecker { n })
    }
}

impl Quiver for GenKronecker {
    fn vertex_count(&self) -> usize {
        2
    }

    fn arrow_blocks(&self) -> Vec<(usize, usize, u64)> {
        vec![(0, 1, self.n)]
    }
}

/// A dimension vector. Entries may turn negative under reflections.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct DimVec(pub Vec<i64>);

impl DimVec {
    pub fn new(entries: Vec<i64>) -> Self {
        DimVec(entries)
    }

    pub fn zero(len: usize) -> Self {
        DimVec(vec![0; len])
    }

    pub fn simple(len: usize, vertex: usize) -> Self {
        let mut v = vec![0; len];
        v[vertex] = 1;
        DimVec(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn scale(&self, k: i64) -> DimVec {
        DimVec(self.0.iter().map(|x| x * k).collect())
    }

    /// Index of the simple root this vector equals, if any.
    pub fn simple_index(&self) -> Option<usize> {
        let mut found = None;
        for (i, &x) in self.0.iter().enumerate() {
            match x {
                0 => {}
                1 if found.is_none() => found = Some(i),
                _ => return None,
            }
        }
        found
    }
}

impl Add for &DimVec {
    type Output = DimVec;

    fn add(self, rhs: &DimVec) -> DimVec {
        assert_eq!(self.len(), rhs.len(), "dimension vector lengths differ");
        DimVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &DimVec {
    type Output = DimVec;

    fn sub(self, rhs: &DimVec) -> DimVec {
        assert_eq!(self.len(), rhs.len(), "dimension vector lengths differ");
        DimVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for DimVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<i64>> for DimVec {
    fn from(v: Vec<i64>) -> Self {
        DimVec(v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RootClass {
    NotARoot,
    RealRoot,
    ImaginaryRoot,
}

fn check_shape<Q: Quiver + ?Sized>(quiver: &Q, a: &DimVec) -> Result<(), QuiverError> {
    if a.len() != quiver.vertex_count() {
        return Err(QuiverError::Shape {
            expected: quiver.vertex_count(),
            got: a.clone(),
        });
    }
    Ok(())
}

/// `<a,b> = sum a_i b_i - sum over arrows a_source b_target`.
pub fn euler_form<Q: Quiver + ?Sized>(
    quiver: &Q,
    a: &DimVec,
    b: &DimVec,
) -> Result<i64, QuiverError> {
    check_shape(quiver, a)?;
    check_shape(quiver, b)?;
    let diag: i64 = a.0.iter().zip(&b.0).map(|(x, y)| x * y).sum();
    let off: i64 = quiver
        .arrow_blocks()
        .iter()
        .map(|&(s, t, c)| c as i64 * a.0[s] * b.0[t])
        .sum();
    Ok(diag - off)
}

pub fn symmetrized_form<Q: Quiver + ?Sized>(
    quiver: &Q,
    a: &DimVec,
    b: &DimVec,
) -> Result<i64, QuiverError> {
    Ok(euler_form(quiver, a, b)? + euler_form(quiver, b, a)?)
}

/// `s_v(a) = a - (a, e_v) e_v`.
pub fn reflect_simple<Q: Quiver + ?Sized>(
    quiver: &Q,
    vertex: usize,
    a: &DimVec,
) -> Result<DimVec, QuiverError> {
    check_shape(quiver, a)?;
    let count = quiver.vertex_count();
    if vertex >= count {
        return Err(QuiverError::Vertex { vertex, count });
    }
    let e = DimVec::simple(count, vertex);
    let c = symmetrized_form(quiver, a, &e)?;
    let mut out = a.clone();
    out.0[vertex] -= c;
    Ok(out)
}

fn support_connected<Q: Quiver + ?Sized>(quiver: &Q, a: &DimVec) -> bool {
    let support: Vec<usize> = (0..a.len()).filter(|&i| a.0[i] != 0).collect();
    let Some(&start) = support.first() else {
        return false;
    };
    let edges: Vec<(usize, usize)> = quiver
        .arrow_blocks()
        .into_iter()
        .filter(|&(s, t, c)| c > 0 && a.0[s] != 0 && a.0[t] != 0)
        .map(|(s, t, _)| (s, t))
        .collect();
    let mut seen = vec![start];
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &(s, t) in &edges {
            let w = if s == v {
                t
            } else if t == v {
                s
            } else {
                continue;
            };
            if !seen.contains(&w) {
                seen.push(w);
                stack.push(w);
            }
        }
    }
    seen.len() == support.len()
}

/// Decides whether `a` is a real root, an imaginary root or no root by
/// reflection descent towards the fundamental domain.
pub fn classify_root<Q: Quiver + ?Sized>(quiver: &Q, a: &DimVec) -> Result<RootClass, QuiverError> {
    check_shape(quiver, a)?;
    if a.is_zero() {
        return Err(QuiverError::ZeroVector);
    }
    if !a.is_nonnegative() {
        return Err(QuiverError::Negative(a.clone()));
    }
    let count = quiver.vertex_count();
    let mut cur = a.clone();
    loop {
        if !cur.is_nonnegative() || cur.is_zero() {
            return Ok(RootClass::NotARoot);
        }
        if cur.simple_index().is_some() {
            return Ok(RootClass::RealRoot);
        }
        let mut next = None;
        for v in 0..count {
            if symmetrized_form(quiver, &cur, &DimVec::simple(count, v))? > 0 {
                next = Some(v);
                break;
            }
        }
        match next {
            Some(v) => cur = reflect_simple(quiver, v, &cur)?,
            None if support_connected(quiver, &cur) => return Ok(RootClass::ImaginaryRoot),
            None => return Ok(RootClass::NotARoot),
        }
    }
}
