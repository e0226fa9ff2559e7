//! Decompositions of roots of the Kronecker quiver `K(n)` and the parameter
//! count obtained by gluing two roots `beta + gamma = alpha` of a three-vertex
//! quiver along their Kronecker parts.
//!
//! Kronecker dimension vectors are `(source, sink)`. Inside a decomposition
//! `alpha1^d1 + alpha2^d2 + alpha3^d3` the Kronecker part is `(d3, d2)`.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

use crate::pipeline::{
    special_case, validate_decomposition, ExcDecomposition, PipelineError, Sampling, SpecialCase,
};
use crate::quiver::{
    classify_root, euler_form, generic_hom, DimVec, GenKronecker, QuiverError, RootClass,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GluingError {
    #[error("K({0}) is out of range; need at least 3 arrows")]
    TooFewArrows(u64),
    #[error("{0} is a simple root")]
    Simple(DimVec),
    #[error("{0} is not a root of K({1})")]
    NotARoot(DimVec, u64),
    #[error("no decomposition found for {0}")]
    NotFound(DimVec),
    #[error("split part {part} = {vector} is not a root")]
    PartNotRoot { part: &'static str, vector: DimVec },
    #[error("split part {0} is zero")]
    ZeroPart(&'static str),
    #[error("split part {0} exceeds the decomposition")]
    Overdrawn(&'static str),
    #[error("split part {part} is not valid: {error}")]
    PartInvalid {
        part: &'static str,
        error: PipelineError,
    },
    #[error("split part {part} has alpha1-multiplicity {c} but is {kind}, not of type one")]
    NotTypeOne {
        part: &'static str,
        c: u32,
        kind: &'static str,
    },
    #[error("Kronecker parts {0} and {1} are not Hom-orthogonal")]
    NotOrthogonal(DimVec, DimVec),
    #[error("negative kernel dimension {0}")]
    NegativeKernel(i64),
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
}

/// A pair `((d_s, e_s), (d, e))` of dimension vectors of `K(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct KroneckerPair {
    pub n: u64,
    pub first: DimVec,
    pub second: DimVec,
}

impl KroneckerPair {
    pub fn new(n: u64, first: (i64, i64), second: (i64, i64)) -> Self {
        KroneckerPair {
            n,
            first: DimVec::new(vec![first.0, first.1]),
            second: DimVec::new(vec![second.0, second.1]),
        }
    }

    /// `((1, j), (1, j - 1))`.
    pub fn base(n: u64, j: i64) -> Self {
        KroneckerPair::new(n, (1, j), (1, j - 1))
    }

    fn entries(&self) -> (i64, i64, i64, i64) {
        let (f, s) = (self.first.entries(), self.second.entries());
        (f[0], f[1], s[0], s[1])
    }

    /// `first + k * second`.
    pub fn combine(&self, k: i64) -> DimVec {
        &self.first + &self.second.scale(k)
    }

    /// `(first + k second, first + (k + 1) second)`.
    pub fn child(&self, k: i64) -> KroneckerPair {
        KroneckerPair {
            n: self.n,
            first: self.combine(k),
            second: self.combine(k + 1),
        }
    }
}

impl fmt::Display for KroneckerPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.first, self.second)
    }
}

/// `target = scale * (pair.first + k * pair.second)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KroneckerDecomposition {
    pub target: DimVec,
    pub pair: KroneckerPair,
    pub k: i64,
    pub scale: i64,
}

impl KroneckerDecomposition {
    /// The pair scaled back up to the target.
    pub fn scaled_pair(&self) -> KroneckerPair {
        KroneckerPair {
            n: self.pair.n,
            first: self.pair.first.scale(self.scale),
            second: self.pair.second.scale(self.scale),
        }
    }
}

impl fmt::Display for KroneckerDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.scale != 1 {
            write!(f, "{}*[", self.scale)?;
        }
        write!(f, "{} + {}*{}", self.pair.first, self.k, self.pair.second)?;
        if self.scale != 1 {
            write!(f, "]")?;
        }
        Ok(())
    }
}

/// The three numerical conditions on a pair `((d_s, e_s), (d, e))`:
/// `e_s d - e d_s = 1`, `1 <= d_s <= d`, and `1 <= e_s <= e` if `d_s != 1`,
/// `e_s = e + 1` if `d_s = 1`.
pub fn check_conditions(pair: &KroneckerPair) -> bool {
    if pair.first.len() != 2
        || pair.second.len() != 2
        || pair.first.is_zero()
        || pair.second.is_zero()
    {
        return false;
    }
    let (ds, es, d, e) = pair.entries();
    if es * d - e * ds != 1 || ds < 1 || ds > d {
        return false;
    }
    if ds == 1 {
        es == e + 1
    } else {
        1 <= es && es <= e
    }
}

fn le(a: &DimVec, b: &DimVec) -> bool {
    a.entries().iter().zip(b.entries()).all(|(x, y)| x <= y)
}

/// Breadth-first search through the pairs generated from `((1, j), (1, j - 1))`,
/// `2 <= j <= n`, by [`KroneckerPair::child`]. Children with `k = 0` of a pair
/// with `d_s = 1` break the third condition, so hits are filtered.
fn search_tree(n: u64, target: &DimVec) -> Option<(KroneckerPair, i64)> {
    let mut queue: VecDeque<KroneckerPair> =
        (2..=n as i64).map(|j| KroneckerPair::base(n, j)).collect();
    let mut seen: HashSet<KroneckerPair> = queue.iter().cloned().collect();
    while let Some(pair) = queue.pop_front() {
        for k in 1.. {
            let v = pair.combine(k);
            if v == *target && check_conditions(&pair) {
                return Some((pair, k));
            }
            if !le(&v, target) {
                break;
            }
        }
        // targets of a pair are at least its second entry, which only grows
        // along the tree
        for k in 0.. {
            let child = pair.child(k);
            if !le(&child.second, target) {
                break;
            }
            if seen.insert(child.clone()) {
                queue.push_back(child);
            }
        }
    }
    None
}

/// Any pair of roots meeting the conditions with `first + k second = target`,
/// `k >= 1`.
fn search_direct(q: &GenKronecker, target: &DimVec) -> Option<(KroneckerPair, i64)> {
    let (x, y) = (target.entries()[0], target.entries()[1]);
    let is_root = |v: &DimVec| {
        !v.is_zero() && v.is_nonnegative() && classify_root(q, v) != Ok(RootClass::NotARoot)
    };
    for d in 1..=x {
        for e in 0..=y {
            for k in 1.. {
                let (ds, es) = (x - k * d, y - k * e);
                if ds < 1 || es < 0 {
                    break;
                }
                let pair = KroneckerPair::new(q.n, (ds, es), (d, e));
                if check_conditions(&pair) && is_root(&pair.first) && is_root(&pair.second) {
                    return Some((pair, k));
                }
            }
        }
    }
    None
}

/// Writes a non-simple root of `K(n)` as `scale * ((d_s, e_s) + k (d, e))`
/// with `k >= 1` and `((d_s, e_s), (d, e))` meeting [`check_conditions`].
///
/// The pairs generated recursively from `((1, j), (1, j - 1))` are searched
/// first. Targets outside that tree (for instance those with more weight at the
/// source than at the sink) fall back to a direct search over all pairs of roots.
/// Many roots have no such decomposition at all, among them every `(1, e)`,
/// `(3, 2)` and `(3, 5)` for `n = 3`; those give [`GluingError::NotFound`].
pub fn kronecker_decompose(n: u64, target: &DimVec) -> Result<KroneckerDecomposition, GluingError> {
    if n < 3 {
        return Err(GluingError::TooFewArrows(n));
    }
    let q = GenKronecker::new(n)?;
    let class = classify_root(&q, target)?;
    if target.simple_index().is_some() {
        return Err(GluingError::Simple(target.clone()));
    }
    if class == RootClass::NotARoot {
        return Err(GluingError::NotARoot(target.clone(), n));
    }
    let scale = target.entries()[0].gcd(&target.entries()[1]);
    let primitive = DimVec::new(target.entries().iter().map(|x| x / scale).collect());
    let (pair, k) = search_tree(n, &primitive)
        .or_else(|| search_direct(&q, &primitive))
        .ok_or_else(|| GluingError::NotFound(target.clone()))?;
    Ok(KroneckerDecomposition {
        target: target.clone(),
        pair,
        k,
        scale,
    })
}

/// Sampled test that `hom(a, b) = hom(b, a) = 0` for general representations
/// of `K(n)`. A `true` answer is certain; `false` may be a sampling artifact
/// when `trials` is small.
pub fn check_hom_orthogonal(
    n: u64,
    a: &DimVec,
    b: &DimVec,
    sampling: Sampling,
) -> Result<bool, GluingError> {
    let q = GenKronecker::new(n)?;
    let Sampling {
        trials,
        prime,
        seed,
    } = sampling;
    Ok(generic_hom(&q, a, b, trials, prime, seed)? == 0
        && generic_hom(&q, b, a, trials, prime, seed)? == 0)
}

/// A proposed split `alpha = beta + gamma` of the root of `dec`, given by the
/// multiplicities of `alpha1, alpha2, alpha3` in `beta`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Split {
    pub dec: ExcDecomposition,
    pub beta: [u32; 3],
}

impl Split {
    pub fn gamma(&self) -> Option<[u32; 3]> {
        let d = [self.dec.d1, self.dec.d2, self.dec.d3];
        Some([
            d[0].checked_sub(self.beta[0])?,
            d[1].checked_sub(self.beta[1])?,
            d[2].checked_sub(self.beta[2])?,
        ])
    }

    fn part(&self, c: [u32; 3]) -> ExcDecomposition {
        self.dec.with_multiplicities(c[0], c[1], c[2])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GluingReport {
    pub alpha: DimVec,
    pub beta: DimVec,
    pub gamma: DimVec,
    pub beta_mult: [u32; 3],
    pub gamma_mult: [u32; 3],
    /// Kronecker parts `(d3, d2)` of `beta_hat` and `gamma_hat` in `K(n)`.
    pub beta_kronecker: DimVec,
    pub gamma_kronecker: DimVec,
    pub n: i64,
    /// `<beta_hat, alpha1>` and `<gamma_hat, alpha1>`.
    pub n_beta: i64,
    pub n_gamma: i64,
    pub ker_beta_gamma: i64,
    pub ker_gamma_beta: i64,
    pub parameter_total: i64,
    pub kac_parameter_count: i64,
    pub trials: u32,
}

fn part_kind(d: &ExcDecomposition, sampling: Sampling) -> Result<SpecialCase, PipelineError> {
    validate_decomposition(d, sampling).map(|p| special_case(&p))
}

/// Checks the split and computes the kernel dimensions of the two
/// restriction maps on extension spaces and the resulting parameter count.
///
/// Requirements: both parts are nonzero roots; a part with positive
/// `alpha1`-multiplicity is a validated decomposition of type one; the two
/// Kronecker parts are Hom-orthogonal in `K(n)`.
pub fn gluing_report(split: &Split, sampling: Sampling) -> Result<GluingReport, GluingError> {
    let dec = &split.dec;
    let q = &dec.quiver;
    let e = |a: &DimVec, b: &DimVec| euler_form(q, a, b);
    let gamma_mult = split.gamma().ok_or(GluingError::Overdrawn("beta"))?;
    let beta_dec = split.part(split.beta);
    let gamma_dec = split.part(gamma_mult);
    let (beta, gamma) = (beta_dec.alpha(), gamma_dec.alpha());

    for (part, v) in [("beta", &beta), ("gamma", &gamma)] {
        if v.is_zero() {
            return Err(GluingError::ZeroPart(part));
        }
        if classify_root(q, v)? == RootClass::NotARoot {
            return Err(GluingError::PartNotRoot {
                part,
                vector: v.clone(),
            });
        }
    }
    for (part, d) in [("beta", &beta_dec), ("gamma", &gamma_dec)] {
        if d.d1 == 0 {
            continue;
        }
        match part_kind(d, sampling) {
            Ok(SpecialCase::TypeOne) => {}
            Ok(other) => {
                return Err(GluingError::NotTypeOne {
                    part,
                    c: d.d1,
                    kind: other.name(),
                })
            }
            Err(error) => return Err(GluingError::PartInvalid { part, error }),
        }
    }

    let n = -e(&dec.alpha3, &dec.alpha2)?;
    if n < 1 {
        return Err(GluingError::Internal(format!("<alpha3,alpha2> = {}", -n)));
    }
    let kron = |d: &ExcDecomposition| DimVec::new(vec![d.d3 as i64, d.d2 as i64]);
    let (bk, gk) = (kron(&beta_dec), kron(&gamma_dec));
    if bk.is_zero() || gk.is_zero() || !check_hom_orthogonal(n as u64, &bk, &gk, sampling)? {
        return Err(GluingError::NotOrthogonal(bk, gk));
    }

    let (c_s, c) = (beta_dec.d1 as i64, gamma_dec.d1 as i64);
    let n_beta = e(&beta_dec.alpha_hat(), &dec.alpha1)?;
    let n_gamma = e(&gamma_dec.alpha_hat(), &dec.alpha1)?;
    let bg = e(&beta, &gamma)?;
    let gb = e(&gamma, &beta)?;
    let ker_beta_gamma = -bg + c * n_beta - c_s * n_gamma;
    let ker_gamma_beta = -gb + c_s * n_gamma - c * n_beta;
    for k in [ker_beta_gamma, ker_gamma_beta] {
        if k < 0 {
            return Err(GluingError::NegativeKernel(k));
        }
    }
    if ker_beta_gamma + ker_gamma_beta != -bg - gb {
        return Err(GluingError::Internal(
            "kernel dimensions do not add up".into(),
        ));
    }
    let parameter_total = (1 - e(&beta, &beta)?) + (1 - e(&gamma, &gamma)?) + (-1 - bg - gb);
    let alpha = dec.alpha();
    let kac_parameter_count = 1 - e(&alpha, &alpha)?;
    if parameter_total != kac_parameter_count {
        return Err(GluingError::Internal(format!(
            "parameter total {parameter_total} differs from 1 - <alpha,alpha> = {kac_parameter_count}"
        )));
    }
    Ok(GluingReport {
        alpha,
        beta,
        gamma,
        beta_mult: split.beta,
        gamma_mult,
        beta_kronecker: bk,
        gamma_kronecker: gk,
        n,
        n_beta,
        n_gamma,
        ker_beta_gamma,
        ker_gamma_beta,
        parameter_total,
        kac_parameter_count,
        trials: sampling.trials,
    })
}

/// Candidate splits from the Kronecker decomposition of `(d3, d2)`: with
/// `(d3, d2) = (d_s, e_s) + k (d, e)` the Kronecker parts are
/// `(d_s, e_s) + (k - 1)(d, e)` and `(d, e)`; for a non-primitive target
/// `s v` they are `j v` and `(s - j) v`. Every distribution of `alpha1` is
/// tried and the splits passing [`gluing_report`] are returned. Finding none
/// proves nothing.
pub fn enumerate_splits(
    dec: &ExcDecomposition,
    sampling: Sampling,
) -> Result<Vec<GluingReport>, GluingError> {
    let n = -euler_form(&dec.quiver, &dec.alpha3, &dec.alpha2)?;
    if n < 3 {
        return Err(GluingError::TooFewArrows(n.max(0) as u64));
    }
    let target = DimVec::new(vec![dec.d3 as i64, dec.d2 as i64]);
    let kd = kronecker_decompose(n as u64, &target)?;
    let mut parts: Vec<DimVec> = Vec::new();
    if kd.scale == 1 {
        parts.push(kd.pair.combine(kd.k - 1));
    } else {
        let unit = kd.pair.combine(kd.k);
        parts.extend((1..kd.scale).map(|j| unit.scale(j)));
    }
    let mut out = Vec::new();
    for beta_hat in parts {
        let (b3, b2) = (beta_hat.entries()[0] as u32, beta_hat.entries()[1] as u32);
        for c_s in 0..=dec.d1 {
            let split = Split {
                dec: dec.clone(),
                beta: [c_s, b2, b3],
            };
            if let Ok(report) = gluing_report(&split, sampling) {
                out.push(report);
            }
        }
    }
    Ok(out)
}
