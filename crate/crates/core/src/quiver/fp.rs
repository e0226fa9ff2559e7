//! Arithmetic modulo a word-sized prime.

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_probable_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &b in &BASES {
        let mut x = pow_mod(b, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Rank of a dense `rows x cols` matrix over `F_p`, destroying it.
pub(crate) fn rank_mod(data: &mut [u64], rows: usize, cols: usize, p: u64) -> usize {
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| data[r * cols + col] != 0) else {
            continue;
        };
        if pivot != rank {
            for c in col..cols {
                data.swap(pivot * cols + c, rank * cols + c);
            }
        }
        let inv = inv_mod(data[rank * cols + col], p);
        for c in col..cols {
            data[rank * cols + c] = mul_mod(data[rank * cols + c], inv, p);
        }
        for r in rank + 1..rows {
            let factor = data[r * cols + col];
            if factor == 0 {
                continue;
            }
            for c in col..cols {
                let sub = mul_mod(factor, data[rank * cols + c], p);
                let v = data[r * cols + c];
                data[r * cols + c] = if v >= sub { v - sub } else { v + p - sub };
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        assert!(is_probable_prime(2_147_483_647));
        assert!(is_probable_prime(101));
        assert!(!is_probable_prime(1));
        assert!(!is_probable_prime(2_147_483_649));
        assert!(!is_probable_prime(561));
        let small: Vec<u64> = (0..30).filter(|&n| is_probable_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn rank_small() {
        let p = 7;
        let mut m = vec![1, 2, 3, 2, 4, 6, 0, 1, 1];
        assert_eq!(rank_mod(&mut m, 3, 3, p), 2);
        let mut id = vec![1, 0, 0, 1];
        assert_eq!(rank_mod(&mut id, 2, 2, p), 2);
        let mut z: Vec<u64> = vec![];
        assert_eq!(rank_mod(&mut z, 0, 5, p), 0);
    }
}
