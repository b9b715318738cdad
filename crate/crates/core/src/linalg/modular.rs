//! Exact characteristic polynomials by reduction modulo word-size primes.
//!
//! Each prime gets a Hessenberg reduction and the usual Hessenberg recurrence,
//! `O(n^3)` word operations; the integer coefficients are then rebuilt by the
//! Chinese remainder theorem. With `rho` the largest absolute row sum, every
//! eigenvalue satisfies `|lambda| <= rho`, so `|e_k| <= C(n, k) rho^k` and all
//! coefficients are bounded by `(1 + rho)^n`. Enough primes are used for their
//! product to exceed twice that bound, which makes the result exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::IntMatrix;

/// Primes just below `2^31`, so products of residues fit in a `u64`.
fn primes_below_2_31(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut candidate: u64 = (1 << 31) - 1;
    while out.len() < count {
        if is_prime(candidate) {
            out.push(candidate);
        }
        candidate -= 2;
    }
    out
}

fn is_prime(n: u64) -> bool {
    if n < 2 || n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Characteristic polynomial of the `n x n` matrix `a` (row-major residues mod `p`),
/// lowest degree first.
fn char_poly_mod(mut a: Vec<u64>, n: usize, p: u64) -> Vec<u64> {
    // Reduce to upper Hessenberg form by elimination below the subdiagonal.
    for j in 0..n.saturating_sub(2) {
        let Some(piv) = (j + 1..n).find(|&i| a[i * n + j] != 0) else {
            continue;
        };
        if piv != j + 1 {
            for c in 0..n {
                a.swap(piv * n + c, (j + 1) * n + c);
            }
            for r in 0..n {
                a.swap(r * n + piv, r * n + j + 1);
            }
        }
        let inv = inv_mod(a[(j + 1) * n + j], p);
        for i in j + 2..n {
            let u = a[i * n + j] * inv % p;
            if u == 0 {
                continue;
            }
            // row_i -= u row_{j+1}, then col_{j+1} += u col_i
            for c in j..n {
                let s = u * a[(j + 1) * n + c] % p;
                a[i * n + c] = (a[i * n + c] + p - s) % p;
            }
            for r in 0..n {
                let s = u * a[r * n + i] % p;
                a[r * n + j + 1] = (a[r * n + j + 1] + s) % p;
            }
        }
    }
    // polys[k] is the characteristic polynomial of the leading k x k block.
    let mut polys: Vec<Vec<u64>> = Vec::with_capacity(n + 1);
    polys.push(vec![1]);
    for m in 1..=n {
        let h = |i: usize, j: usize| a[(i - 1) * n + (j - 1)];
        let prev = &polys[m - 1];
        let mut next = vec![0u64; m + 1];
        let diag = h(m, m);
        for (d, &c) in prev.iter().enumerate() {
            next[d + 1] = (next[d + 1] + c) % p;
            next[d] = (next[d] + p - diag * c % p) % p;
        }
        let mut t = 1u64;
        for i in (1..m).rev() {
            t = t * h(i + 1, i) % p;
            if t == 0 {
                break;
            }
            let coef = h(i, m) * t % p;
            if coef == 0 {
                continue;
            }
            for (d, &c) in polys[i - 1].iter().enumerate() {
                next[d] = (next[d] + p - coef * c % p) % p;
            }
        }
        polys.push(next);
    }
    polys.pop().expect("at least the empty product")
}

/// Exact `det(xI - M)`, lowest degree first.
pub(crate) fn char_poly_multimodular(m: &IntMatrix) -> Vec<BigInt> {
    let n = m.rows();
    if n == 0 {
        return vec![BigInt::from(1)];
    }
    let rho = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j).abs()).sum::<BigInt>())
        .max()
        .unwrap_or_default();
    let rho_bits = (rho + 1u32).bits() as f64;
    // log2 of twice the coefficient bound, with room for rounding.
    let needed = n as f64 * rho_bits + 2.0;
    let count = (needed / 30.0).ceil() as usize + 1;
    let primes = primes_below_2_31(count);

    let residues_for = |p: u64| -> Vec<u64> {
        let big_p = BigInt::from(p);
        let a = (0..n * n)
            .map(|k| {
                let v = m.get(k / n, k % n);
                match v.to_i64() {
                    Some(x) => x.rem_euclid(p as i64) as u64,
                    None => v.mod_floor(&big_p).to_u64().expect("reduced below p"),
                }
            })
            .collect();
        char_poly_mod(a, n, p)
    };
    let threads = std::thread::available_parallelism()
        .map(|t| t.get())
        .unwrap_or(1)
        .min(primes.len());
    let residues: Vec<Vec<u64>> = if threads <= 1 || n < 48 {
        primes.iter().map(|&p| residues_for(p)).collect()
    } else {
        let chunk = primes.len().div_ceil(threads);
        std::thread::scope(|s| {
            let handles: Vec<_> = primes
                .chunks(chunk)
                .map(|ps| s.spawn(|| ps.iter().map(|&p| residues_for(p)).collect::<Vec<_>>()))
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("worker thread"))
                .collect()
        })
    };

    let mut coeffs = vec![BigInt::zero(); n + 1];
    let mut modulus = BigInt::from(1);
    for (&p, res) in primes.iter().zip(&residues) {
        let big_p = BigInt::from(p);
        let m_inv = inv_mod(modulus.mod_floor(&big_p).to_u64().expect("reduced"), p);
        for (x, &r) in coeffs.iter_mut().zip(res) {
            let xm = x.mod_floor(&big_p).to_u64().expect("reduced");
            let t = (r + p - xm) % p * m_inv % p;
            if t != 0 {
                *x += &modulus * t;
            }
        }
        modulus *= p;
    }
    let half = &modulus >> 1;
    for x in &mut coeffs {
        if *x > half {
            *x -= &modulus;
        }
    }
    coeffs
}
