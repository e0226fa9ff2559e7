use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use super::{
    expected_dimensions, intersection_from, pushforward_class, special_case,
    validate_decomposition, witness_from, Dimensions, ExcDecomposition, Parameters, PipelineError,
    Sampling, SpecialCase,
};
use crate::chow::{GrassBox, SchubertClass};
use crate::json;
use crate::symfunc::{BasisExpr, Partition};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub mu: Partition,
    pub lambda: Partition,
    pub lambda_conj: Partition,
    #[serde(serialize_with = "json::bigint")]
    pub d_lambda: BigInt,
    pub certified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisReport {
    pub decomposition: ExcDecomposition,
    pub sampling: Sampling,
    pub expectations: Vec<(String, i64)>,
    pub parameters: Parameters,
    pub special_case: SpecialCase,
    pub dimensions: Dimensions,
    /// `Gr_r(V)` and the width `ls - w` of the rectangle `[X2]`, for type one.
    pub grassmannian: Option<(GrassBox, u32)>,
    pub pushforward_class: Option<BasisExpr>,
    pub intersection_class: Option<SchubertClass>,
    pub gcd: Option<BigInt>,
    pub witness: Option<Witness>,
    pub warnings: Vec<String>,
}

pub fn analyze(
    dec: &ExcDecomposition,
    sampling: Sampling,
) -> Result<AnalysisReport, PipelineError> {
    analyze_with_expectations(dec, sampling, &[])
}

/// As [`analyze`]; each `(name, value)` in `expectations` is compared with
/// the derived parameter and a mismatch becomes a warning.
pub fn analyze_with_expectations(
    dec: &ExcDecomposition,
    sampling: Sampling,
    expectations: &[(String, i64)],
) -> Result<AnalysisReport, PipelineError> {
    let parameters = validate_decomposition(dec, sampling)?;
    let case = special_case(&parameters);
    let dimensions = expected_dimensions(&parameters)?;
    let mut warnings = Vec::new();
    for (name, value) in expectations {
        match parameters.get(name) {
            Some(derived) if derived != *value => {
                let rule = match name.as_str() {
                    "w" => " = n*d3",
                    "t" => " = l*r - d1",
                    "r" => " = n*d3 - d2",
                    "s" => " = (n*l - m)*d3",
                    _ => "",
                };
                warnings.push(format!(
                    "expected {name} = {value}, derived {name}{rule} = {derived}"
                ));
            }
            Some(_) => {}
            None => warnings.push(format!("unknown parameter {name} in expectations")),
        }
    }

    let mut report = AnalysisReport {
        decomposition: dec.clone(),
        sampling,
        expectations: expectations.to_vec(),
        parameters,
        special_case: case,
        dimensions,
        grassmannian: None,
        pushforward_class: None,
        intersection_class: None,
        gcd: None,
        witness: None,
        warnings,
    };
    if case != SpecialCase::TypeOne {
        report.warnings.push(format!(
            "special case {}: no intersection class or witness computed",
            case.name()
        ));
        return Ok(report);
    }
    let params = &report.parameters;
    let push = pushforward_class(params)?;
    let (class, gcd) = intersection_from(params, &push)?;
    let witness = witness_from(params, &push)?;
    if class.is_zero() {
        report
            .warnings
            .push("intersection class vanishes".to_string());
    }
    if !witness.certified {
        report.warnings.push("witness not certified".to_string());
    }
    report.grassmannian = Some((class.grass(), (params.ls() - params.w) as u32));
    report.pushforward_class = Some(push);
    report.intersection_class = Some(class);
    report.gcd = Some(gcd);
    report.witness = Some(witness);
    Ok(report)
}

impl AnalysisReport {
    /// Coefficient of the point class of `Gr_r(V)` in the intersection class.
    pub fn degree(&self) -> Option<BigInt> {
        self.intersection_class.as_ref().map(|c| c.degree())
    }

    pub fn to_json(&self) -> Value {
        let dec = &self.decomposition;
        let p = &self.parameters;
        let expect: serde_json::Map<String, Value> = self
            .expectations
            .iter()
            .map(|(k, v)| (k.clone(), json!(v)))
            .collect();
        let (grass, rect) = match self.grassmannian {
            Some((g, j)) => (json!({"d": g.d, "codim": g.codim}), json!(j)),
            None => (Value::Null, Value::Null),
        };
        json!({
            "schema_version": SCHEMA_VERSION,
            "input": {
                "quiver": [dec.quiver.m12, dec.quiver.m13, dec.quiver.m23],
                "alpha1": dec.alpha1, "alpha2": dec.alpha2, "alpha3": dec.alpha3,
                "d1": dec.d1, "d2": dec.d2, "d3": dec.d3,
                "trials": self.sampling.trials, "prime": self.sampling.prime, "seed": self.sampling.seed,
                "expect": expect,
            },
            "parameters": {
                "l": p.l, "m": p.m, "n": p.n, "r": p.r, "s": p.s, "t": p.t, "w": p.w,
                "p": p.p(), "k": p.k(),
                "alpha": p.alpha, "alpha_hat": p.alpha_hat, "delta": p.delta,
                "euler_alpha_alpha": p.euler_alpha_alpha,
                "euler_alpha_hat_alpha1": p.euler_alpha_hat_alpha1,
            },
            "special_case": self.special_case,
            "dimensions": {
                "dim_x1": self.dimensions.dim_x1,
                "dim_x2": self.dimensions.dim_x2,
                "dim_gr": self.dimensions.dim_gr,
                "expected_intersection_dim": self.dimensions.expected_intersection_dim,
                "kac_parameter_count": self.dimensions.kac_parameter_count,
                "grassmannian": grass,
                "rectangle_width": rect,
                "intersection_degree": self.degree().map(|d| big(&d)).unwrap_or(Value::Null),
            },
            "pushforward_class": self.pushforward_class.as_ref().map(value).unwrap_or(Value::Null),
            "intersection_class": self
                .intersection_class
                .as_ref()
                .map(|c| value(&c.json_terms()))
                .unwrap_or(Value::Null),
            "gcd": self.gcd.as_ref().map(big).unwrap_or(Value::Null),
            "witness": self.witness.as_ref().map(value).unwrap_or(Value::Null),
            "warnings": self.warnings,
        })
    }
}

impl Serialize for AnalysisReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

fn value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report values serialize")
}

fn big(x: &BigInt) -> Value {
    json::bigint(x, serde_json::value::Serializer).expect("integers serialize")
}
