//! `nonschur`: analyze non-Schurian roots of three-vertex quivers.
//!
//! Dimension vectors are comma separated and ordered `q1,q2,q3`. The quiver
//! `--quiver a,b,c` has `a` arrows `q2 -> q1`, `b` arrows `q3 -> q1` and `c`
//! arrows `q3 -> q2`.

mod args;
mod text;

use std::process::ExitCode;

use clap::Parser;
use serde_json::{json, Value};

use nonschur::chow::{GrassBox, SchubertClass};
use nonschur::gluing::{
    check_conditions, enumerate_splits, gluing_report, kronecker_decompose, Split,
};
use nonschur::pipeline::search::decompositions_of;
use nonschur::pipeline::{analyze_with_expectations, PipelineError, Sampling};
use nonschur::quiver::{DimVec, QuiverThree};
use nonschur::symfunc::{kostka, Partition};

use args::{ChowArgs, ChowOp, Cli, Command, DecArgs, Format, SamplingArgs};

const EXIT_INVALID: u8 = 2;
const EXIT_USAGE: u8 = 64;

/// A failure with its exit code and the lines of its error list.
struct Failure {
    code: u8,
    errors: Vec<String>,
}

impl Failure {
    fn invalid(errors: Vec<String>) -> Self {
        Failure {
            code: EXIT_INVALID,
            errors,
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            errors: vec![message.into()],
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let format = cli.command.format();
    match run(cli.command) {
        Ok(out) => {
            print!("{}", render(&out, format));
            ExitCode::SUCCESS
        }
        Err(fail) => {
            match format {
                Format::Json => {
                    let v = json!({"schema_version": 1, "errors": fail.errors});
                    println!("{}", serde_json::to_string_pretty(&v).expect("json"));
                }
                Format::Text => {
                    for e in &fail.errors {
                        println!("error: {e}");
                    }
                }
            }
            if fail.code == EXIT_USAGE {
                eprintln!("run with --help for usage");
            }
            ExitCode::from(fail.code)
        }
    }
}

/// What a command prints: a JSON document, plus a plain rendering for
/// commands whose text output is a single value.
struct Output {
    json: Value,
    plain: Option<String>,
}

fn render(out: &Output, format: Format) -> String {
    match format {
        Format::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&out.json).expect("json")
        ),
        Format::Text => match &out.plain {
            Some(s) => format!("{s}\n"),
            None => text::render(&out.json),
        },
    }
}

fn run(command: Command) -> Result<Output, Failure> {
    match command {
        Command::Analyze { dec, expect, .. } => {
            let (d, sampling) = decomposition(&dec)?;
            let report =
                analyze_with_expectations(&d, sampling, &expect).map_err(pipeline_failure)?;
            Ok(Output {
                json: report.to_json(),
                plain: None,
            })
        }
        Command::Kostka { shape, weight, .. } => {
            let shape =
                Partition::new(shape).map_err(|e| Failure::usage(format!("--shape: {e}")))?;
            let weight = Partition::from_parts(weight);
            let k = kostka(&shape, &weight).map_err(|e| Failure::invalid(vec![e.to_string()]))?;
            Ok(Output {
                json: json!({"shape": shape, "weight": weight, "kostka": number(&k.to_string())}),
                plain: Some(k.to_string()),
            })
        }
        Command::Chow(args) => chow(args),
        Command::Decompose { n, root, .. } => {
            let target = DimVec::new(root);
            let d = kronecker_decompose(n, &target)
                .map_err(|e| Failure::invalid(vec![e.to_string()]))?;
            let json = json!({
                "n": n,
                "target": d.target,
                "first": d.pair.first,
                "second": d.pair.second,
                "k": d.k,
                "scale": d.scale,
                "conditions": check_conditions(&d.pair),
            });
            Ok(Output {
                plain: Some(format!("{} = {}", d.target, d)),
                json,
            })
        }
        Command::Glue { dec, beta, .. } => {
            let (d, sampling) = decomposition(&dec)?;
            let reports = match beta {
                Some(b) => {
                    let b: [u32; 3] = to_u32s(&b, "--beta")?
                        .try_into()
                        .map_err(|_| Failure::usage("--beta needs three multiplicities"))?;
                    vec![gluing_report(&Split { dec: d, beta: b }, sampling)
                        .map_err(|e| Failure::invalid(vec![e.to_string()]))?]
                }
                None => enumerate_splits(&d, sampling)
                    .map_err(|e| Failure::invalid(vec![e.to_string()]))?,
            };
            Ok(Output {
                json: json!({"schema_version": 1, "splits": reports}),
                plain: None,
            })
        }
        Command::Search {
            quiver,
            alpha,
            bound,
            sampling,
            ..
        } => {
            let q = quiver_of(&quiver)?;
            let found = decompositions_of(&q, &DimVec::new(alpha), bound, sampling_of(&sampling));
            let list: Vec<Value> = found
                .iter()
                .map(|d| {
                    json!({
                        "alpha1": d.alpha1, "alpha2": d.alpha2, "alpha3": d.alpha3,
                        "d1": d.d1, "d2": d.d2, "d3": d.d3,
                    })
                })
                .collect();
            Ok(Output {
                json: json!({"schema_version": 1, "decompositions": list}),
                plain: None,
            })
        }
    }
}

fn chow(args: ChowArgs) -> Result<Output, Failure> {
    let [d, codim] = args.grass[..] else {
        return Err(Failure::usage("--box needs d,codim"));
    };
    let grass = GrassBox::new(d as usize, codim).map_err(|e| Failure::usage(e.to_string()))?;
    let mut class = SchubertClass::zero(grass);
    for t in &args.term {
        let (lambda, c) = args::parse_term(t).map_err(Failure::usage)?;
        class.add_term(lambda, c);
    }
    let fail = |e: nonschur::chow::ChowError| Failure::invalid(vec![e.to_string()]);
    let result = match args.op {
        ChowOp::Show => class,
        ChowOp::Degree => {
            let d = class.degree();
            return Ok(Output {
                json: json!({"box": grass, "degree": number(&d.to_string())}),
                plain: Some(d.to_string()),
            });
        }
        ChowOp::Rectangle => class
            .rectangle_mul(
                args.j
                    .ok_or_else(|| Failure::usage("rectangle needs --j"))?,
            )
            .map_err(fail)?,
        ChowOp::Pieri => class
            .pieri_mul(args.j.ok_or_else(|| Failure::usage("pieri needs --j"))? as usize)
            .map_err(fail)?,
        ChowOp::Identity => class
            .product_oracle(&SchubertClass::identity(grass))
            .map_err(fail)?,
        ChowOp::Product => {
            let other = Partition::new(args.with.unwrap_or_default())
                .map_err(|e| Failure::usage(e.to_string()))?;
            class
                .product_oracle(&SchubertClass::delta(grass, &other))
                .map_err(fail)?
        }
    };
    Ok(Output {
        json: serde_json::to_value(&result).expect("class serializes"),
        plain: Some(result.to_string()),
    })
}

fn number(s: &str) -> Value {
    Value::Number(s.parse().expect("integer literal"))
}

fn to_u32s(v: &[i64], flag: &str) -> Result<Vec<u32>, Failure> {
    v.iter()
        .map(|&x| u32::try_from(x).map_err(|_| Failure::usage(format!("{flag}: {x} out of range"))))
        .collect()
}

fn quiver_of(q: &[u64]) -> Result<QuiverThree, Failure> {
    let [a, b, c] = q else {
        return Err(Failure::usage("--quiver needs three arrow counts"));
    };
    QuiverThree::new(*a, *b, *c).map_err(|e| Failure::usage(format!("--quiver: {e}")))
}

fn sampling_of(s: &SamplingArgs) -> Sampling {
    Sampling {
        trials: s.trials,
        prime: s.prime,
        seed: s.seed,
    }
}

fn decomposition(
    dec: &DecArgs,
) -> Result<(nonschur::pipeline::ExcDecomposition, Sampling), Failure> {
    let d = nonschur::pipeline::ExcDecomposition {
        quiver: quiver_of(&dec.quiver)?,
        alpha1: DimVec::new(dec.a1.clone()),
        alpha2: DimVec::new(dec.a2.clone()),
        alpha3: DimVec::new(dec.a3.clone()),
        d1: dec.d1,
        d2: dec.d2,
        d3: dec.d3,
    };
    Ok((d, sampling_of(&dec.sampling)))
}

fn pipeline_failure(e: PipelineError) -> Failure {
    match e {
        PipelineError::Invalid(issues) => {
            Failure::invalid(issues.iter().map(|i| i.to_string()).collect())
        }
        other => Failure::invalid(vec![other.to_string()]),
    }
}
