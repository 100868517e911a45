//! Deterministic primality and seeded prime selection.

use rand::Rng;

use crate::error::{Error, Result};

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Miller-Rabin with the witness set {2, 3, 5, 7, 11, 13, 17}, which is
/// deterministic for every n < 3.4e14 and in particular for all u32 values.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 7] = [2, 3, 5, 7, 11, 13, 17];
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Draws a prime uniformly from the primes in `[2^(bits-2), 2^bits)`.
/// With the default of 31 bits this is the range `[2^29, 2^31)`.
pub fn random_prime<R: Rng + ?Sized>(rng: &mut R, bits: u32) -> Result<u64> {
    if !(4..=32).contains(&bits) {
        return Err(Error::InvalidInput(format!(
            "prime size must be between 4 and 32 bits, got {bits}"
        )));
    }
    let lo = 1u64 << (bits - 2);
    let hi = 1u64 << bits;
    // rejection sampling keeps the draw uniform over primes in range
    loop {
        let c = rng.gen_range(lo..hi);
        if is_prime(c) {
            return Ok(c);
        }
    }
}
