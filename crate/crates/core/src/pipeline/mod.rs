//! Analysis of a non-Schurian root `alpha = alpha1^d1 + alpha2^d2 + alpha3^d3`
//! given by its canonical exceptional decomposition.

mod report;
pub mod search;

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;
use thiserror::Error;

use crate::chow::{ChowError, GrassBox, SchubertClass};
use crate::quiver::{
    classify_root, euler_form, generic_ext, generic_hom, DimVec, GenKronecker, QuiverError,
    QuiverThree, RootClass, DEFAULT_PRIME, DEFAULT_TRIALS,
};
use crate::symfunc::{
    e_power, e_power_to_schur, e_to_schur_truncated, lemma_michael_f, BasisExpr, Partition,
    SymError,
};

pub use report::{analyze, analyze_with_expectations, AnalysisReport, Witness};

/// How generic hom/ext values are sampled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Sampling {
    pub trials: u32,
    pub prime: u64,
    pub seed: u64,
}

impl Default for Sampling {
    fn default() -> Self {
        Sampling {
            trials: DEFAULT_TRIALS,
            prime: DEFAULT_PRIME,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExcDecomposition {
    pub quiver: QuiverThree,
    pub alpha1: DimVec,
    pub alpha2: DimVec,
    pub alpha3: DimVec,
    pub d1: u32,
    pub d2: u32,
    pub d3: u32,
}

impl ExcDecomposition {
    pub fn alphas(&self) -> [&DimVec; 3] {
        [&self.alpha1, &self.alpha2, &self.alpha3]
    }

    /// `d2 alpha2 + d3 alpha3`.
    pub fn alpha_hat(&self) -> DimVec {
        &self.alpha2.scale(self.d2 as i64) + &self.alpha3.scale(self.d3 as i64)
    }

    pub fn alpha(&self) -> DimVec {
        &self.alpha1.scale(self.d1 as i64) + &self.alpha_hat()
    }

    /// The same exceptional roots with other multiplicities.
    pub fn with_multiplicities(&self, d1: u32, d2: u32, d3: u32) -> ExcDecomposition {
        ExcDecomposition {
            d1,
            d2,
            d3,
            ..self.clone()
        }
    }
}

/// One failed requirement on an [`ExcDecomposition`]. The `Display` strings are
/// stable and used as machine-readable error codes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValidationIssue {
    Shape {
        which: &'static str,
        error: QuiverError,
    },
    NotExceptional {
        index: usize,
        self_pairing: i64,
    },
    NotSchur {
        index: usize,
        hom: u64,
    },
    Nonvanishing {
        what: String,
        value: u64,
    },
    Sampling(QuiverError),
    LNotPositive(i64),
    NNotPositive(i64),
    MNegative(i64),
    ZeroMultiplicity,
    KroneckerNotImaginary {
        d3: u32,
        d2: u32,
        n: i64,
    },
    RNotPositive(i64),
    TMismatch {
        from_s: i64,
        from_lr: i64,
    },
    HatPairingNegative(i64),
    AlphaNotRoot(DimVec),
}

impl fmt::Display for ValidationIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ValidationIssue::*;
        match self {
            Shape { which, error } => write!(f, "{which}: {error}"),
            NotExceptional {
                index,
                self_pairing,
            } => {
                write!(f, "<alpha{index},alpha{index}> = {self_pairing} != 1")
            }
            NotSchur { index, hom } => write!(f, "hom(alpha{index},alpha{index}) = {hom} != 1"),
            Nonvanishing { what, .. } => write!(f, "{what} != 0"),
            Sampling(e) => write!(f, "sampling failed: {e}"),
            LNotPositive(l) => write!(f, "l = <alpha2,alpha1> = {l} is not positive"),
            NNotPositive(n) => write!(f, "n = -<alpha3,alpha2> = {n} is not positive"),
            MNegative(m) => write!(f, "m = -<alpha3,alpha1> = {m} is negative"),
            ZeroMultiplicity => write!(f, "d2 and d3 must be at least 1"),
            KroneckerNotImaginary { d3, d2, n } => {
                write!(f, "({d3},{d2}) is not an imaginary root of K({n})")
            }
            RNotPositive(r) => write!(f, "r = n*d3 - d2 = {r} is less than 1"),
            TMismatch { from_s, from_lr } => {
                write!(
                    f,
                    "t = s - d1 - <alpha_hat,alpha1> = {from_s} differs from l*r - d1 = {from_lr}"
                )
            }
            HatPairingNegative(v) => write!(f, "<alpha_hat,alpha1> = {v} is negative"),
            AlphaNotRoot(a) => write!(f, "alpha = {a} is not a root"),
        }
    }
}

impl Serialize for ValidationIssue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PipelineError {
    #[error("invalid decomposition: {}", .0.iter().map(|i| i.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<ValidationIssue>),
    #[error("{0} applies only to roots of type one")]
    NotTypeOne(&'static str),
    #[error("negative exponent: p = {p}, k = {k}")]
    NegativeExponent { p: i64, k: i64 },
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error(transparent)]
    Sym(#[from] SymError),
    #[error(transparent)]
    Chow(#[from] ChowError),
}

/// The integers attached to a validated decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Parameters {
    pub l: i64,
    pub m: i64,
    pub n: i64,
    pub r: i64,
    pub s: i64,
    pub t: i64,
    pub w: i64,
    pub d1: i64,
    pub d2: i64,
    pub d3: i64,
    pub alpha: DimVec,
    pub alpha_hat: DimVec,
    pub delta: DimVec,
    pub euler_alpha_alpha: i64,
    pub euler_alpha_hat_alpha1: i64,
}

/// Names accepted by [`Parameters::get`].
pub const PARAMETER_NAMES: [&str; 9] = ["l", "m", "n", "r", "s", "t", "w", "p", "k"];

impl Parameters {
    /// Derives every parameter from the pairings `l`, `m`, `n` and the
    /// multiplicities alone. Vectors are written in the basis
    /// `(alpha1, alpha2, alpha3)` and `<alpha,alpha>` is taken from the
    /// decomposition formula.
    pub fn from_pairings(l: i64, m: i64, n: i64, d1: i64, d2: i64, d3: i64) -> Parameters {
        let euler_alpha_alpha =
            d1 * d1 + d2 * d2 + d3 * d3 + l * d1 * d2 - m * d1 * d3 - n * d2 * d3;
        let r = n * d3 - d2;
        Parameters {
            l,
            m,
            n,
            r,
            s: (n * l - m) * d3,
            t: l * r - d1,
            w: n * d3,
            d1,
            d2,
            d3,
            alpha: DimVec::new(vec![d1, d2, d3]),
            alpha_hat: DimVec::new(vec![0, d2, d3]),
            delta: DimVec::new(vec![0, n, 1]),
            euler_alpha_alpha,
            euler_alpha_hat_alpha1: l * d2 - m * d3,
        }
    }

    /// `p = l r - t`, the degree of `f`.
    pub fn p(&self) -> i64 {
        self.l * self.r - self.t
    }

    /// `k = s - t`, the power `f` is raised to.
    pub fn k(&self) -> i64 {
        self.s - self.t
    }

    pub fn ls(&self) -> i64 {
        self.l * self.s
    }

    pub fn get(&self, name: &str) -> Option<i64> {
        Some(match name {
            "l" => self.l,
            "m" => self.m,
            "n" => self.n,
            "r" => self.r,
            "s" => self.s,
            "t" => self.t,
            "w" => self.w,
            "p" => self.p(),
            "k" => self.k(),
            _ => return None,
        })
    }

    /// The Grassmannian `Gr_r(V)` with `dim V = l s`.
    pub fn grassmannian(&self) -> Result<GrassBox, PipelineError> {
        if self.r < 1 || self.ls() < self.r {
            return Err(PipelineError::NotTypeOne("the Grassmannian Gr_r(V)"));
        }
        Ok(GrassBox::new(self.r as usize, (self.ls() - self.r) as u32)?)
    }
}

fn vanishing_checks(dec: &ExcDecomposition, sampling: Sampling, issues: &mut Vec<ValidationIssue>) {
    let q = &dec.quiver;
    let names = ["alpha1", "alpha2", "alpha3"];
    let Sampling {
        trials,
        prime,
        seed,
    } = sampling;
    let hom = |a: &DimVec, b: &DimVec| generic_hom(q, a, b, trials, prime, seed);
    let ext = |a: &DimVec, b: &DimVec| generic_ext(q, a, b, trials, prime, seed);
    let alphas = dec.alphas();
    let check = |kind: &str, i: usize, j: usize, issues: &mut Vec<ValidationIssue>| {
        let value = if kind == "hom" {
            hom(alphas[i], alphas[j])
        } else {
            ext(alphas[i], alphas[j])
        };
        match value {
            Ok(0) => {}
            Ok(value) => issues.push(ValidationIssue::Nonvanishing {
                what: format!("{kind}({},{})", names[i], names[j]),
                value,
            }),
            Err(e) => issues.push(ValidationIssue::Sampling(e)),
        }
    };
    check("ext", 1, 2, issues);
    check("hom", 2, 1, issues);
    check("hom", 2, 0, issues);
    check("ext", 1, 0, issues);
    check("hom", 1, 2, issues);
    check("hom", 0, 1, issues);
    check("ext", 0, 1, issues);
    check("hom", 0, 2, issues);
    check("ext", 0, 2, issues);
}

/// Checks every requirement on `dec` and derives its [`Parameters`].
pub fn validate_decomposition(
    dec: &ExcDecomposition,
    sampling: Sampling,
) -> Result<Parameters, PipelineError> {
    let q = &dec.quiver;
    let mut issues = Vec::new();
    for (name, a) in ["alpha1", "alpha2", "alpha3"].iter().zip(dec.alphas()) {
        if let Err(error) = classify_root(q, a) {
            issues.push(ValidationIssue::Shape { which: name, error });
        }
    }
    if !issues.is_empty() {
        return Err(PipelineError::Invalid(issues));
    }
    let e = |a: &DimVec, b: &DimVec| euler_form(q, a, b).expect("shapes checked");
    for (i, a) in dec.alphas().into_iter().enumerate() {
        let self_pairing = e(a, a);
        if self_pairing != 1 {
            issues.push(ValidationIssue::NotExceptional {
                index: i + 1,
                self_pairing,
            });
            continue;
        }
        match generic_hom(q, a, a, sampling.trials, sampling.prime, sampling.seed) {
            Ok(1) => {}
            Ok(hom) => issues.push(ValidationIssue::NotSchur { index: i + 1, hom }),
            Err(err) => issues.push(ValidationIssue::Sampling(err)),
        }
    }
    vanishing_checks(dec, sampling, &mut issues);

    let l = e(&dec.alpha2, &dec.alpha1);
    let n = -e(&dec.alpha3, &dec.alpha2);
    let m = -e(&dec.alpha3, &dec.alpha1);
    if l <= 0 {
        issues.push(ValidationIssue::LNotPositive(l));
    }
    if m < 0 {
        issues.push(ValidationIssue::MNegative(m));
    }
    if dec.d2 == 0 || dec.d3 == 0 {
        issues.push(ValidationIssue::ZeroMultiplicity);
    } else if n <= 0 {
        issues.push(ValidationIssue::NNotPositive(n));
    } else {
        let k = GenKronecker::new(n as u64).expect("n positive");
        let v = DimVec::new(vec![dec.d3 as i64, dec.d2 as i64]);
        if classify_root(&k, &v) != Ok(RootClass::ImaginaryRoot) {
            issues.push(ValidationIssue::KroneckerNotImaginary {
                d3: dec.d3,
                d2: dec.d2,
                n,
            });
        }
    }

    let (d1, d2, d3) = (dec.d1 as i64, dec.d2 as i64, dec.d3 as i64);
    let alpha_hat = dec.alpha_hat();
    let alpha = dec.alpha();
    let r = n * d3 - d2;
    let s = (n * l - m) * d3;
    let hat_pairing = e(&alpha_hat, &dec.alpha1);
    let t = s - d1 - hat_pairing;
    if dec.d2 > 0 && dec.d3 > 0 && r < 1 {
        issues.push(ValidationIssue::RNotPositive(r));
    }
    if t != l * r - d1 {
        issues.push(ValidationIssue::TMismatch {
            from_s: t,
            from_lr: l * r - d1,
        });
    }
    if hat_pairing < 0 {
        issues.push(ValidationIssue::HatPairingNegative(hat_pairing));
    }
    if !alpha.is_zero() && classify_root(q, &alpha) == Ok(RootClass::NotARoot) {
        issues.push(ValidationIssue::AlphaNotRoot(alpha.clone()));
    }
    if !issues.is_empty() {
        return Err(PipelineError::Invalid(issues));
    }
    Ok(Parameters {
        l,
        m,
        n,
        r,
        s,
        t,
        w: n * d3,
        d1,
        d2,
        d3,
        delta: &dec.alpha3 + &dec.alpha2.scale(n),
        euler_alpha_alpha: e(&alpha, &alpha),
        euler_alpha_hat_alpha1: hat_pairing,
        alpha,
        alpha_hat,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialCase {
    TypeOne,
    /// Carries the lower bound `r (d2 - l (d1 + <alpha_hat,alpha1>))`.
    Fall0 {
        dimension_bound: i64,
    },
    Fall1,
    Fall2,
    Fall3,
}

impl SpecialCase {
    pub fn name(&self) -> &'static str {
        match self {
            SpecialCase::TypeOne => "TypeOne",
            SpecialCase::Fall0 { .. } => "Fall0",
            SpecialCase::Fall1 => "Fall1",
            SpecialCase::Fall2 => "Fall2",
            SpecialCase::Fall3 => "Fall3",
        }
    }
}

impl Serialize for SpecialCase {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(None)?;
        map.serialize_entry("kind", self.name())?;
        if let SpecialCase::Fall0 { dimension_bound } = self {
            map.serialize_entry("dimension_bound", dimension_bound)?;
        }
        map.end()
    }
}

pub fn special_case(params: &Parameters) -> SpecialCase {
    let Parameters {
        l,
        n,
        r,
        t,
        d1,
        d2,
        d3,
        ..
    } = *params;
    let nd3 = n * d3;
    let ls = params.ls();
    let lt = l * t;
    if r <= lt && r <= nd3 && nd3 <= ls {
        return SpecialCase::TypeOne;
    }
    let excess = l * (d1 + params.euler_alpha_hat_alpha1);
    if r <= nd3 - excess {
        return SpecialCase::Fall0 {
            dimension_bound: r * (d2 - excess),
        };
    }
    match (nd3 > ls, r <= lt) {
        (true, true) => SpecialCase::Fall2,
        (true, false) => SpecialCase::Fall1,
        _ => SpecialCase::Fall3,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Dimensions {
    pub dim_x1: i64,
    pub dim_x2: i64,
    pub dim_gr: i64,
    pub expected_intersection_dim: i64,
    pub kac_parameter_count: i64,
}

pub fn expected_dimensions(params: &Parameters) -> Result<Dimensions, PipelineError> {
    let Parameters {
        l, r, s, t, w, d3, ..
    } = *params;
    let dims = Dimensions {
        dim_x1: t * (s - t) + r * (l * t - r),
        dim_x2: r * (w - r),
        dim_gr: r * (params.ls() - r),
        expected_intersection_dim: d3 * d3 - params.euler_alpha_alpha,
        kac_parameter_count: 1 - params.euler_alpha_alpha,
    };
    if dims.dim_x1 + dims.dim_x2 - dims.dim_gr != dims.expected_intersection_dim {
        return Err(PipelineError::Internal(format!(
            "dim X1 + dim X2 - dim Gr = {} but d3^2 - <alpha,alpha> = {}",
            dims.dim_x1 + dims.dim_x2 - dims.dim_gr,
            dims.expected_intersection_dim
        )));
    }
    Ok(dims)
}

/// `pi_{1,*} Z(Psi)` as a Schur expansion in `r` variables.
pub fn pushforward_class(params: &Parameters) -> Result<BasisExpr, PipelineError> {
    let (p, k) = check_exponents(params)?;
    let f = lemma_michael_f(params.l as u32, p).filter(|mu| mu.first() <= params.r as u32);
    Ok(e_power_to_schur(&f, k, Some(params.r as usize))?)
}

fn check_exponents(params: &Parameters) -> Result<(u32, u32), PipelineError> {
    let (p, k) = (params.p(), params.k());
    if p < 0 || k < 0 || params.l < 1 || params.r < 1 {
        return Err(PipelineError::NegativeExponent { p, k });
    }
    Ok((p as u32, k as u32))
}

/// [`pushforward_class`] by expanding the power in the elementary basis
/// first. With `early_truncation` off, `e_mu` terms with `mu_1 > r` are kept
/// until the final Schur truncation.
pub fn pushforward_class_with(
    params: &Parameters,
    early_truncation: bool,
) -> Result<BasisExpr, PipelineError> {
    let (p, k) = check_exponents(params)?;
    let r = params.r as u32;
    let mut f = lemma_michael_f(params.l as u32, p);
    if early_truncation {
        f = f.filter(|mu| mu.first() <= r);
    }
    let power = e_power(&f, k)?;
    Ok(e_to_schur_truncated(&power, Some(params.r as usize))?)
}

/// `N [X1][X2]` in the Chow ring of `Gr_r(V)` together with the gcd of its
/// coefficients, an upper bound for `N`.
pub fn intersection_class(params: &Parameters) -> Result<(SchubertClass, BigInt), PipelineError> {
    let push = pushforward_class(params)?;
    intersection_from(params, &push)
}

pub(crate) fn intersection_from(
    params: &Parameters,
    push: &BasisExpr,
) -> Result<(SchubertClass, BigInt), PipelineError> {
    if special_case(params) != SpecialCase::TypeOne {
        return Err(PipelineError::NotTypeOne("the intersection class"));
    }
    let grass = params.grassmannian()?;
    let class = SchubertClass::from_schur_expr(grass, push)?
        .rectangle_mul((params.ls() - params.w) as u32)?;
    let gcd = class.gcd();
    Ok((class, gcd))
}

/// The partitions `mu`, `lambda` exhibiting a nonzero term of the
/// intersection class.
pub fn witness_certificate(params: &Parameters) -> Result<Witness, PipelineError> {
    let push = pushforward_class(params)?;
    witness_from(params, &push)
}

pub(crate) fn witness_from(
    params: &Parameters,
    push: &BasisExpr,
) -> Result<Witness, PipelineError> {
    check_exponents(params)?;
    let (p, k) = (params.p(), params.k());
    let (l, r) = (params.l, params.r);
    let (q, j) = (p / l, p % l);
    let mut mu_parts = vec![(q + 1) as u32; j as usize];
    mu_parts.extend(std::iter::repeat_n(q as u32, (l - j) as usize));
    let mu = Partition::from_parts(mu_parts);

    let total = p * k;
    let (rows, rest) = (total / r, total % r);
    let mut conj_parts = vec![r as u32; rows as usize];
    conj_parts.push(rest as u32);
    let lambda_conj = Partition::from_parts(conj_parts);
    let lambda = lambda_conj.conjugate();

    let scaled_mu = mu.scale_union(k as usize);
    let dominates = lambda_conj.dominates(&scaled_mu)?;
    let fits = lambda.fits(r as usize, (params.w - r).max(0) as u32);
    let d_lambda = push.coeff(&lambda);
    Ok(Witness {
        certified: dominates && fits && d_lambda.is_positive(),
        mu,
        lambda,
        lambda_conj,
        d_lambda,
    })
}
