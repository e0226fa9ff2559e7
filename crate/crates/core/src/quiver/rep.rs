//! Random representations over a prime field and sampled generic hom/ext.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::fp::{is_probable_prime, rank_mod};
use super::{check_shape, euler_form, DimVec, Quiver, QuiverError};

pub const DEFAULT_PRIME: u64 = 2_147_483_647;
pub const DEFAULT_TRIALS: u32 = 8;

/// Dense row-major matrix over `F_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u64>,
}

impl FpMatrix {
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }
}

/// A representation with one matrix per arrow; the matrix of an arrow
/// `s -> t` has shape `dims[t] x dims[s]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpRepresentation {
    pub prime: u64,
    pub dims: DimVec,
    pub arrows: Vec<(usize, usize)>,
    pub maps: Vec<FpMatrix>,
}

fn check_dims<Q: Quiver + ?Sized>(quiver: &Q, a: &DimVec) -> Result<(), QuiverError> {
    check_shape(quiver, a)?;
    if !a.is_nonnegative() {
        return Err(QuiverError::Negative(a.clone()));
    }
    Ok(())
}

fn check_prime(prime: u64) -> Result<(), QuiverError> {
    if !is_probable_prime(prime) {
        return Err(QuiverError::NotPrime(prime));
    }
    Ok(())
}

fn sample_with<Q: Quiver + ?Sized>(
    quiver: &Q,
    a: &DimVec,
    prime: u64,
    rng: &mut ChaCha8Rng,
) -> FpRepresentation {
    let arrows = quiver.arrows();
    let maps = arrows
        .iter()
        .map(|&(s, t)| {
            let rows = a.0[t] as usize;
            let cols = a.0[s] as usize;
            let data = (0..rows * cols).map(|_| rng.gen_range(0..prime)).collect();
            FpMatrix { rows, cols, data }
        })
        .collect();
    FpRepresentation {
        prime,
        dims: a.clone(),
        arrows,
        maps,
    }
}

/// A uniformly random point of the representation space of `a`.
pub fn sample_representation<Q: Quiver + ?Sized>(
    quiver: &Q,
    a: &DimVec,
    prime: u64,
    seed: u64,
) -> Result<FpRepresentation, QuiverError> {
    check_dims(quiver, a)?;
    check_prime(prime)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(sample_with(quiver, a, prime, &mut rng))
}

/// Dimension of the space of morphisms `M -> N`.
///
/// The unknowns are matrices `f_i` of shape `dim N_i x dim M_i`; every arrow
/// `s -> t` contributes the equations `f_t M_a - N_a f_s = 0`.
pub fn hom_dim(m: &FpRepresentation, n: &FpRepresentation) -> Result<u64, QuiverError> {
    if m.prime != n.prime || m.arrows != n.arrows || m.dims.len() != n.dims.len() {
        return Err(QuiverError::Incompatible);
    }
    let p = m.prime;
    let a: Vec<usize> = m.dims.0.iter().map(|&x| x as usize).collect();
    let b: Vec<usize> = n.dims.0.iter().map(|&x| x as usize).collect();
    let mut offset = vec![0; a.len()];
    let mut unknowns = 0;
    for i in 0..a.len() {
        offset[i] = unknowns;
        unknowns += a[i] * b[i];
    }
    if unknowns == 0 {
        return Ok(0);
    }
    let rows: usize = m.arrows.iter().map(|&(s, t)| b[t] * a[s]).sum();
    let mut sys = vec![0u64; rows * unknowns];
    let mut row = 0;
    for (idx, &(s, t)) in m.arrows.iter().enumerate() {
        let ma = &m.maps[idx];
        let na = &n.maps[idx];
        for r in 0..b[t] {
            for c in 0..a[s] {
                let base = row * unknowns;
                for k in 0..a[t] {
                    let var = offset[t] + r * a[t] + k;
                    sys[base + var] = (sys[base + var] + ma.get(k, c)) % p;
                }
                for k in 0..b[s] {
                    let var = offset[s] + k * a[s] + c;
                    let v = na.get(r, k);
                    sys[base + var] = (sys[base + var] + p - v) % p;
                }
                row += 1;
            }
        }
    }
    let rank = rank_mod(&mut sys, rows, unknowns, p);
    Ok((unknowns - rank) as u64)
}

/// Minimum of `hom_dim` over `trials` independently sampled pairs. Trial `i`
/// draws from the ChaCha stream `i` of `seed`, so adding trials never changes
/// the earlier ones.
pub fn generic_hom<Q: Quiver + ?Sized>(
    quiver: &Q,
    a: &DimVec,
    b: &DimVec,
    trials: u32,
    prime: u64,
    seed: u64,
) -> Result<u64, QuiverError> {
    check_dims(quiver, a)?;
    check_dims(quiver, b)?;
    check_prime(prime)?;
    if trials == 0 {
        return Err(QuiverError::NoTrials);
    }
    let mut best = u64::MAX;
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial as u64);
        let m = sample_with(quiver, a, prime, &mut rng);
        let n = sample_with(quiver, b, prime, &mut rng);
        best = best.min(hom_dim(&m, &n)?);
        if best == 0 {
            break;
        }
    }
    Ok(best)
}

/// `ext(a,b) = hom(a,b) - <a,b>`.
pub fn generic_ext<Q: Quiver + ?Sized>(
    quiver: &Q,
    a: &DimVec,
    b: &DimVec,
    trials: u32,
    prime: u64,
    seed: u64,
) -> Result<u64, QuiverError> {
    let hom = generic_hom(quiver, a, b, trials, prime, seed)? as i64;
    let value = hom - euler_form(quiver, a, b)?;
    if value < 0 {
        return Err(QuiverError::SamplingFailure {
            a: a.clone(),
            b: b.clone(),
            value,
        });
    }
    Ok(value as u64)
}
