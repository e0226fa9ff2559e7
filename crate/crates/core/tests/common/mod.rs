#![allow(dead_code)]

use std::sync::OnceLock;

use nonschur::pipeline::search::exceptional_triples;
use nonschur::pipeline::{
    special_case, validate_decomposition, ExcDecomposition, Sampling, SpecialCase,
};
use nonschur::quiver::{DimVec, QuiverThree};

pub fn dv(v: &[i64]) -> DimVec {
    DimVec::new(v.to_vec())
}

#[allow(clippy::too_many_arguments)]
pub fn dec(
    q: (u64, u64, u64),
    a1: &[i64],
    d1: u32,
    a2: &[i64],
    d2: u32,
    a3: &[i64],
    d3: u32,
) -> ExcDecomposition {
    ExcDecomposition {
        quiver: QuiverThree::new(q.0, q.1, q.2).unwrap(),
        alpha1: dv(a1),
        alpha2: dv(a2),
        alpha3: dv(a3),
        d1,
        d2,
        d3,
    }
}

/// (2,5,2) over Q(2,1,1).
pub fn root_252() -> ExcDecomposition {
    dec((2, 1, 1), &[0, 1, 0], 1, &[1, 2, 0], 2, &[0, 0, 1], 2)
}

/// (1,3,1) over Q(2,1,2).
pub fn root_131() -> ExcDecomposition {
    dec((2, 1, 2), &[0, 1, 0], 1, &[1, 2, 0], 1, &[0, 0, 1], 1)
}

/// The real root (1,14,8) over Q(2,1,2).
pub fn root_1_14_8() -> ExcDecomposition {
    dec((2, 1, 2), &[0, 2, 1], 3, &[0, 1, 0], 6, &[1, 2, 5], 1)
}

/// (19,31,2) over Q(2,1,2).
pub fn root_19_31_2() -> ExcDecomposition {
    dec((2, 1, 2), &[1, 2, 0], 5, &[2, 3, 0], 7, &[0, 0, 1], 2)
}

pub const QUIVERS: [(u64, u64, u64); 11] = [
    (1, 1, 1),
    (2, 1, 1),
    (1, 2, 1),
    (1, 1, 2),
    (2, 1, 2),
    (2, 2, 1),
    (1, 2, 2),
    (2, 2, 2),
    (3, 1, 1),
    (1, 1, 3),
    (1, 3, 1),
];

/// Validated type-one decompositions: the three fixed roots above plus every triple of
/// exceptional roots with entries at most 3 on [`QUIVERS`], with
/// multiplicities `d1 <= 2`, `d2, d3 <= 3`.
pub fn type_one_corpus() -> &'static [ExcDecomposition] {
    static CORPUS: OnceLock<Vec<ExcDecomposition>> = OnceLock::new();
    CORPUS.get_or_init(build_corpus)
}

fn build_corpus() -> Vec<ExcDecomposition> {
    let s = Sampling::default();
    let mut out = vec![root_252(), root_131(), root_1_14_8()];
    for (a, b, c) in QUIVERS {
        let q = QuiverThree::new(a, b, c).unwrap();
        for base in exceptional_triples(&q, 3, s) {
            for d1 in 0..=2 {
                for d2 in 1..=3 {
                    for d3 in 1..=3 {
                        let d = base.with_multiplicities(d1, d2, d3);
                        let Ok(params) = validate_decomposition(&d, s) else {
                            continue;
                        };
                        if special_case(&params) == SpecialCase::TypeOne && !out.contains(&d) {
                            out.push(d);
                        }
                    }
                }
            }
        }
    }
    out
}
