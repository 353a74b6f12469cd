//! Central, standard and Christoffel words.
//!
//! * central words (`PER`) are the images `ψ(v)`; a central word that is not
//!   a power of a letter has two coprime periods `p`, `q` with
//!   `|w| = p + q - 2`;
//! * standard words are the letters together with `PER·{ab, ba}`, equivalently
//!   the terms of `s_n = s_{n-1}^{c_n} s_{n-2}`;
//! * Christoffel words are the letters together with `a·PER·b`.

use num_bigint::BigUint;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::numbers::{mod_inverse, totient};
use crate::palindromization::{directive_word_of, p_x};
use crate::word::{check_len, w, Letter, Word, DEFAULT_MAX_WORD_LEN};

/// Whether `w` is a central word, i.e. `w = ψ(v)` for some `v`.
pub fn is_central(w: &Word) -> bool {
    directive_word_of(w).is_ok()
}

/// A central word with its two coprime periods (`p <= q`,
/// `|word| = p + q - 2`, `p` the minimal period) and its directive word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralCertificate {
    pub word: Word,
    pub p: usize,
    pub q: usize,
    pub directive: Word,
}

fn to_usize(n: BigUint) -> usize {
    usize::try_from(n).expect("period of a materialized word fits in usize")
}

pub fn central_certificate(w: &Word) -> Result<CentralCertificate> {
    let directive = directive_word_of(w)?;
    let pa = to_usize(p_x(&directive, Letter::A));
    let pb = to_usize(p_x(&directive, Letter::B));
    let (p, q) = (pa.min(pb), pa.max(pb));
    let cert = CentralCertificate {
        word: w.clone(),
        p,
        q,
        directive,
    };
    let holds = p.gcd(&q) == 1
        && p + q == w.len() + 2
        && w.has_period(p)?
        && w.has_period(q)?
        && p == w.minimal_period();
    if !holds {
        return Err(Error::Invariant(format!(
            "bad certificate for {w}: p={p}, q={q}"
        )));
    }
    Ok(cert)
}

/// Structure of a central word: a power of a single letter, or
/// `w = w₁·ab·w₂ = w₂·ba·w₁` with `w₁`, `w₂` central.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CentralDecomposition {
    Unary,
    Split { w1: Word, w2: Word },
}

pub fn central_decompose(w: &Word) -> Result<CentralDecomposition> {
    let cert = central_certificate(w)?;
    if w.count_letter(Letter::A) == 0 || w.count_letter(Letter::B) == 0 {
        return Ok(CentralDecomposition::Unary);
    }
    // |w₁| + 2 and |w₂| + 2 are the two coprime periods
    for k in [cert.p - 2, cert.q - 2] {
        if w[k] == Letter::A && w[k + 1] == Letter::B {
            let w1 = w.prefix(k);
            let w2 = w.suffix(w.len() - k - 2);
            if &w2.concat(&crate::word::w("ba")).concat(&w1) == w {
                return Ok(CentralDecomposition::Split { w1, w2 });
            }
        }
    }
    Err(Error::Invariant(format!(
        "no w₁abw₂ = w₂baw₁ split for {w}"
    )))
}

/// The terms `s_{-1} = b`, `s_0 = a`, `s_n = s_{n-1}^{c_n} s_{n-2}` built
/// from `(c_1, …, c_k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardSequence {
    coefficients: Vec<usize>,
    terms: Vec<Word>,
}

impl StandardSequence {
    pub fn coefficients(&self) -> &[usize] {
        &self.coefficients
    }

    /// `s_{-1}, s_0, …, s_k`.
    pub fn terms(&self) -> &[Word] {
        &self.terms
    }

    /// `s_n` for `-1 <= n <= k`.
    pub fn term(&self, n: isize) -> &Word {
        &self.terms[(n + 1) as usize]
    }
}

pub fn standard_from_coefficients(coeffs: &[usize]) -> Result<StandardSequence> {
    standard_from_coefficients_bounded(coeffs, DEFAULT_MAX_WORD_LEN)
}

pub fn standard_from_coefficients_bounded(
    coeffs: &[usize],
    limit: usize,
) -> Result<StandardSequence> {
    if let Some(i) = coeffs.iter().skip(1).position(|&c| c == 0) {
        return Err(Error::InvalidCoefficients(format!(
            "c_{} = 0; only c_1 may vanish",
            i + 2
        )));
    }
    let mut terms = vec![w("b"), w("a")];
    for &c in coeffs {
        let (older, last) = (&terms[terms.len() - 2], &terms[terms.len() - 1]);
        let len = last
            .len()
            .checked_mul(c)
            .and_then(|l| l.checked_add(older.len()))
            .unwrap_or(usize::MAX);
        check_len(len, limit)?;
        let mut next = Word::empty();
        for _ in 0..c {
            next.extend(last.iter());
        }
        next.extend(older.iter());
        terms.push(next);
    }
    Ok(StandardSequence {
        coefficients: coeffs.to_vec(),
        terms,
    })
}

/// A letter, or `u·xy` with `u` central and `{x, y} = {a, b}`.
pub fn is_standard(w: &Word) -> bool {
    match w.len() {
        0 => false,
        1 => true,
        n => w[n - 2] != w[n - 1] && is_central(&w.prefix(n - 2)),
    }
}

/// The unique `(v, x, y)` with `w = μ_v(xy) = ψ(v)xy`.
pub fn standard_decompose(w: &Word) -> Result<(Word, Letter, Letter)> {
    let n = w.len();
    if n < 2 || w[n - 2] == w[n - 1] {
        return Err(Error::NotStandard);
    }
    let v = directive_word_of(&w.prefix(n - 2)).map_err(|_| Error::NotStandard)?;
    Ok((v, w[n - 2], w[n - 1]))
}

/// The Christoffel word with `p` letters `b` and `q` letters `a`, of slope
/// `p/q`: with `n = p + q`, letter `i` is `a` when `ip mod n > (i-1)p mod n`
/// and `b` otherwise.
pub fn christoffel(p: u64, q: u64) -> Result<Word> {
    if p.gcd(&q) != 1 {
        return Err(Error::NotCoprime { p, q });
    }
    let n = p + q;
    if n == 1 {
        return Ok(if p == 0 { w("a") } else { w("b") });
    }
    check_len(
        usize::try_from(n).unwrap_or(usize::MAX),
        DEFAULT_MAX_WORD_LEN,
    )?;
    let (p128, n128) = (p as u128, n as u128);
    Ok((1..=n128)
        .map(|i| {
            if i * p128 % n128 > (i - 1) * p128 % n128 {
                Letter::A
            } else {
                Letter::B
            }
        })
        .collect())
}

/// A letter, or `a·u·b` with `u` central.
pub fn is_christoffel(w: &Word) -> bool {
    match w.len() {
        0 => false,
        1 => true,
        n => w[0] == Letter::A && w[n - 1] == Letter::B && is_central(&w.factor(1, n - 1)),
    }
}

/// The standard factorization of a proper Christoffel word into two
/// Christoffel words, `w₁ <_lex w₂`, with `|w₁|·|w|_b ≡ |w₂|·|w|_a ≡ 1`
/// modulo `|w|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChristoffelFactorization {
    pub whole: Word,
    pub w1: Word,
    pub w2: Word,
    /// Inverse of `|w|_b` modulo `|w|`.
    pub p_inv: usize,
    /// Inverse of `|w|_a` modulo `|w|`.
    pub q_inv: usize,
}

/// `w₂` is found as the longest proper Lyndon suffix; the factor lengths
/// are then cross-checked against modular inverses from extended Euclid.
pub fn christoffel_factorize(w: &Word) -> Result<ChristoffelFactorization> {
    if w.len() == 1 {
        return Err(Error::LetterFactorization);
    }
    if !is_christoffel(w) {
        return Err(Error::NotChristoffel);
    }
    let n = w.len();
    let split = (1..n)
        .find(|&i| w.suffix(n - i).is_lyndon())
        .expect("the last letter is a Lyndon suffix");
    let (w1, w2) = (w.prefix(split), w.suffix(n - split));
    if !is_christoffel(&w1) || !is_christoffel(&w2) || w1 >= w2 {
        return Err(Error::Invariant(format!("bad Lyndon factorization of {w}")));
    }
    let inverse = |x: Letter| {
        mod_inverse(w.count_letter(x) as u64, n as u64)
            .map(|i| i as usize)
            .ok_or_else(|| Error::Invariant(format!("|{w}|_{x} is not invertible mod {n}")))
    };
    let (p_inv, q_inv) = (inverse(Letter::B)?, inverse(Letter::A)?);
    if (p_inv, q_inv) != (w1.len(), w2.len()) {
        return Err(Error::Invariant(format!(
            "factor lengths ({}, {}) differ from inverses ({p_inv}, {q_inv})",
            w1.len(),
            w2.len()
        )));
    }
    Ok(ChristoffelFactorization {
        whole: w.clone(),
        w1,
        w2,
        p_inv,
        q_inv,
    })
}

/// `φ(n + 2)`, the number of central words of length `n`.
pub fn count_central(n: u64) -> BigUint {
    BigUint::from(totient(n + 2))
}
