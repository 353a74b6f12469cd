//! Integer helpers: Fibonacci numbers, Euler's totient, modular inverses.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// `F_n` with `F_{-1} = F_0 = 1` and `F_{n+1} = F_n + F_{n-1}`, so that
/// `F_1 = 2, F_2 = 3, F_3 = 5, …` and `F_n` is the length of the `n`-th
/// finite Fibonacci word.
pub fn fibonacci(n: i64) -> Result<BigUint> {
    if n < -1 {
        return Err(Error::FibonacciIndex(n));
    }
    let (mut prev, mut cur) = (BigUint::one(), BigUint::one());
    for _ in 0..n.max(0) {
        let next = &prev + &cur;
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// `F_n` for indices known to be valid.
pub(crate) fn fib(n: usize) -> BigUint {
    fibonacci(n as i64).expect("non-negative index")
}

/// Euler's totient by trial division.
pub fn totient(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// The inverse of `a` modulo `m` by the extended Euclidean algorithm, if it
/// exists. Every residue is its own inverse modulo 1.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    (r0 == 1).then(|| t0.rem_euclid(m as i128) as u64)
}
