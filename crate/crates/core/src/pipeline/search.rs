//! Best-effort search for exceptional decompositions with small entries.
//!
//! Candidates are real roots with every coordinate at most `bound`. Triples
//! are filtered by Euler form values first; only the survivors are sampled.
//! Nothing found within the bound proves nothing.

use crate::quiver::{classify_root, euler_form, DimVec, QuiverThree, RootClass};

use super::{validate_decomposition, ExcDecomposition, Sampling};

/// Real roots of `quiver` with all coordinates in `0..=bound`, in
/// lexicographic order.
pub fn real_roots(quiver: &QuiverThree, bound: i64) -> Vec<DimVec> {
    let mut out = Vec::new();
    for a in 0..=bound {
        for b in 0..=bound {
            for c in 0..=bound {
                let v = DimVec::new(vec![a, b, c]);
                if v.is_zero() {
                    continue;
                }
                if euler_form(quiver, &v, &v) == Ok(1)
                    && classify_root(quiver, &v) == Ok(RootClass::RealRoot)
                {
                    out.push(v);
                }
            }
        }
    }
    out
}

/// Triples passing every Euler form condition a valid decomposition needs:
/// `<a1,a2> = <a1,a3> = <a2,a3> = 0`, `<a2,a1> > 0`, `<a3,a2> < 0`,
/// `<a3,a1> <= 0`.
pub fn candidate_triples(quiver: &QuiverThree, bound: i64) -> Vec<[DimVec; 3]> {
    let roots = real_roots(quiver, bound);
    let e = |a: &DimVec, b: &DimVec| euler_form(quiver, a, b).expect("length 3");
    let mut out = Vec::new();
    for a1 in &roots {
        for a2 in &roots {
            if e(a1, a2) != 0 || e(a2, a1) <= 0 {
                continue;
            }
            for a3 in &roots {
                if e(a1, a3) == 0 && e(a2, a3) == 0 && e(a3, a2) < 0 && e(a3, a1) <= 0 {
                    out.push([a1.clone(), a2.clone(), a3.clone()]);
                }
            }
        }
    }
    out
}

/// Triples from [`candidate_triples`] that validate for some multiplicities
/// `d1 <= 2`, `1 <= d2 <= 6`, `1 <= d3 <= 3`, each returned with the first
/// such multiplicities.
pub fn exceptional_triples(
    quiver: &QuiverThree,
    bound: i64,
    sampling: Sampling,
) -> Vec<ExcDecomposition> {
    let mut out = Vec::new();
    for [a1, a2, a3] in candidate_triples(quiver, bound) {
        let base = ExcDecomposition {
            quiver: *quiver,
            alpha1: a1,
            alpha2: a2,
            alpha3: a3,
            d1: 0,
            d2: 1,
            d3: 1,
        };
        let valid = (0..=2u32)
            .flat_map(|d1| (1..=6u32).flat_map(move |d2| (1..=3u32).map(move |d3| (d1, d2, d3))))
            .map(|(d1, d2, d3)| base.with_multiplicities(d1, d2, d3))
            .find(|d| validate_decomposition(d, sampling).is_ok());
        if let Some(d) = valid {
            out.push(d);
        }
    }
    out
}

/// Every validated decomposition `alpha = d1 a1 + d2 a2 + d3 a3` with the `a_i`
/// drawn from [`candidate_triples`].
pub fn decompositions_of(
    quiver: &QuiverThree,
    alpha: &DimVec,
    bound: i64,
    sampling: Sampling,
) -> Vec<ExcDecomposition> {
    let mut out = Vec::new();
    if alpha.len() != 3 || !alpha.is_nonnegative() {
        return out;
    }
    let fits = |v: &DimVec| v.is_nonnegative();
    let max = alpha.entries().iter().copied().max().unwrap_or(0);
    for [a1, a2, a3] in candidate_triples(quiver, bound) {
        for d1 in 0..=max {
            let rest1 = alpha - &a1.scale(d1);
            if !fits(&rest1) {
                break;
            }
            for d2 in 1..=max {
                let rest2 = &rest1 - &a2.scale(d2);
                if !fits(&rest2) {
                    break;
                }
                let Some(d3) = multiple_of(&rest2, &a3) else {
                    continue;
                };
                if d3 < 1 {
                    continue;
                }
                let dec = ExcDecomposition {
                    quiver: *quiver,
                    alpha1: a1.clone(),
                    alpha2: a2.clone(),
                    alpha3: a3.clone(),
                    d1: d1 as u32,
                    d2: d2 as u32,
                    d3: d3 as u32,
                };
                if validate_decomposition(&dec, sampling).is_ok() {
                    out.push(dec);
                }
            }
        }
    }
    out
}

/// `Some(c)` when `v = c * a`.
fn multiple_of(v: &DimVec, a: &DimVec) -> Option<i64> {
    let i = a.entries().iter().position(|&x| x != 0)?;
    let c = v.entries()[i] / a.entries()[i];
    (a.scale(c) == *v).then_some(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dv(v: &[i64]) -> DimVec {
        DimVec::new(v.to_vec())
    }

    #[test]
    fn finds_known_decompositions() {
        let q = QuiverThree::new(2, 1, 2).unwrap();
        let found = decompositions_of(&q, &dv(&[1, 3, 1]), 2, Sampling::default());
        assert!(found.iter().any(|d| (
            d.alpha1.clone(),
            d.alpha2.clone(),
            d.alpha3.clone(),
            d.d1,
            d.d2,
            d.d3
        ) == (
            dv(&[0, 1, 0]),
            dv(&[1, 2, 0]),
            dv(&[0, 0, 1]),
            1,
            1,
            1
        )));
        let q = QuiverThree::new(2, 1, 1).unwrap();
        let found = decompositions_of(&q, &dv(&[2, 5, 2]), 2, Sampling::default());
        assert!(found.iter().any(|d| (d.d1, d.d2, d.d3) == (1, 2, 2)));
    }

    #[test]
    fn real_roots_are_exceptional() {
        let q = QuiverThree::new(1, 1, 1).unwrap();
        let roots = real_roots(&q, 2);
        assert!(roots.contains(&dv(&[1, 1, 0])));
        assert!(roots.contains(&dv(&[0, 0, 1])));
        assert!(!roots.contains(&dv(&[1, 1, 1])));
    }

    #[test]
    fn triples_validate() {
        let q = QuiverThree::new(2, 1, 2).unwrap();
        let triples = exceptional_triples(&q, 3, Sampling::default());
        assert!(triples.iter().any(|d| d.alpha2 == dv(&[2, 3, 0])));
        for d in &triples {
            assert!(validate_decomposition(d, Sampling::default()).is_ok());
        }
    }
}
