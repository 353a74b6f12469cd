//! Exhaustive verification of the extremal properties of the Fibonacci
//! palindromic prefixes.
//!
//! For each order `n` the verifiers enumerate every directive word of length
//! `n` (or every admissible exponent list summing to `n`), compute the
//! maximum of a statistic together with the full set of maximizers, and
//! compare both with the closed forms:
//!
//! | statistic                        | maximum       | maximizers                            |
//! |----------------------------------|---------------|---------------------------------------|
//! | `\|ψ(v)\|`                        | `F_{n+1} - 2` | `v⁽ⁿ⁾`, `E(v⁽ⁿ⁾)`                      |
//! | `π(ψ(v))`                        | `F_{n-1}`     | `v⁽ⁿ⁾`, `E(v⁽ⁿ⁾)`, `c(v⁽ⁿ⁾)`, `E(c(v⁽ⁿ⁾))` |
//! | `\|ψ(v)\|_b`, `v ∈ a{a,b}^{n-1}`  | `F_{n-1} - 1` | `v⁽ⁿ⁾`, `E(d(v⁽ⁿ⁾))`                   |
//!
//! Statistics are evaluated either on the materialized words or through
//! continuants of the exponent list; the two paths are independent and must
//! agree. Enumeration is split by directive prefix across rayon workers and
//! the partial results merge associatively, so reports do not depend on
//! scheduling. Maximizer sets are ordered lexicographically.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::arithmetic::{
    bcount_from_directive, continuant, minimal_period_from_directive, psi_length_from_directive,
};
use crate::error::{Error, Result};
use crate::numbers::{fib, totient};
use crate::palindromization::{
    fibonacci_directive_prefix, op_c, op_d, palindromic_closure_bounded, psi_bounded,
    DirectiveSpec, PsiStream,
};
use crate::word::{Letter, Word, DEFAULT_MAX_WORD_LEN};

/// How the statistics of `ψ(v)` are evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Build `ψ(v)` and measure it.
    Materialized,
    /// Evaluate continuants of the exponent list of `v`.
    Arithmetic,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Materialized => "materialized",
            Mode::Arithmetic => "arithmetic",
        })
    }
}

/// Statistic of a central word that the verifiers maximize.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Statistic {
    Length,
    Period,
    BCount,
}

/// A maximizer: a directive word or an exponent list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Witness {
    Directive(Word),
    Exponents(Vec<usize>),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Directive(v) if v.is_empty() => f.write_str("ε"),
            Witness::Directive(v) => write!(f, "{v}"),
            Witness::Exponents(list) => {
                let items: Vec<String> = list.iter().map(ToString::to_string).collect();
                write!(f, "[{}]", items.join(","))
            }
        }
    }
}

/// Outcome of one extremal check at one order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalReport {
    pub order: usize,
    pub maximum: BigUint,
    pub argmax: BTreeSet<Witness>,
    pub expected_max: BigUint,
    pub expected_argmax: BTreeSet<Witness>,
    pub passed: bool,
}

impl ExtremalReport {
    fn new(
        order: usize,
        found: Extremum,
        expected_max: BigUint,
        expected_argmax: BTreeSet<Witness>,
    ) -> Self {
        let maximum = found.max.unwrap_or_default();
        let passed = maximum == expected_max && found.argmax == expected_argmax;
        ExtremalReport {
            order,
            maximum,
            argmax: found.argmax,
            expected_max,
            expected_argmax,
            passed,
        }
    }
}

/// Running maximum and the set of its maximizers.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Extremum {
    pub max: Option<BigUint>,
    pub argmax: BTreeSet<Witness>,
}

impl Extremum {
    pub fn offer(&mut self, value: BigUint, witness: impl FnOnce() -> Witness) {
        match &self.max {
            Some(m) if value < *m => {}
            Some(m) if value == *m => {
                self.argmax.insert(witness());
            }
            _ => {
                self.max = Some(value);
                self.argmax = BTreeSet::from([witness()]);
            }
        }
    }

    /// Associative, commutative combination of two partial results.
    pub fn merge(mut self, other: Extremum) -> Extremum {
        match (&self.max, &other.max) {
            (_, None) => self,
            (None, _) => other,
            (Some(a), Some(b)) if a > b => self,
            (Some(a), Some(b)) if a < b => other,
            _ => {
                self.argmax.extend(other.argmax);
                self
            }
        }
    }
}

/// Enumeration state along a directive word, one letter at a time.
trait Walker: Clone + Send + Sync {
    fn root() -> Self;
    fn child(&self, x: Letter) -> Self;
    fn stat(&self, s: Statistic) -> BigUint;
}

/// Carries `ψ(v)` itself; a child costs one palindromic closure.
#[derive(Clone)]
struct MaterializedWalker {
    image: Word,
}

impl Walker for MaterializedWalker {
    fn root() -> Self {
        MaterializedWalker {
            image: Word::empty(),
        }
    }

    fn child(&self, x: Letter) -> Self {
        let mut w = self.image.clone();
        w.push(x);
        MaterializedWalker {
            image: palindromic_closure_bounded(&w, DEFAULT_MAX_WORD_LEN)
                .expect("enumeration bounds keep images small"),
        }
    }

    fn stat(&self, s: Statistic) -> BigUint {
        BigUint::from(match s {
            Statistic::Length => self.image.len(),
            Statistic::Period => self.image.minimal_period(),
            Statistic::BCount => self.image.count_letter(Letter::B),
        })
    }
}

/// Pairs `(K[list without last term], K[list])` for the two lists
/// `[α₀+1, α₁, …, αₘ]` and `[α₀, α₁, …, αₘ]` of the current word. Appending
/// the letter of the last block bumps `αₘ`; the other letter opens a block
/// `αₘ₊₁ = 1`. Either way one addition updates each continuant.
#[derive(Clone)]
struct ArithmeticWalker {
    shifted: (BigUint, BigUint),
    plain: (BigUint, BigUint),
    last: Letter,
}

impl ArithmeticWalker {
    fn bump((prev, cur): &(BigUint, BigUint)) -> (BigUint, BigUint) {
        (prev.clone(), cur + prev)
    }

    fn open((prev, cur): &(BigUint, BigUint)) -> (BigUint, BigUint) {
        (cur.clone(), cur + prev)
    }
}

impl Walker for ArithmeticWalker {
    fn root() -> Self {
        // ε is treated as the b-block α₀ = 0
        ArithmeticWalker {
            shifted: (BigUint::one(), BigUint::one()),
            plain: (BigUint::one(), BigUint::zero()),
            last: Letter::B,
        }
    }

    fn child(&self, x: Letter) -> Self {
        let step = if x == self.last {
            Self::bump
        } else {
            Self::open
        };
        ArithmeticWalker {
            shifted: step(&self.shifted),
            plain: step(&self.plain),
            last: x,
        }
    }

    fn stat(&self, s: Statistic) -> BigUint {
        match s {
            // K[α₀+1, …, αₘ+1] - 2
            Statistic::Length => &self.shifted.0 + &self.shifted.1 - 2u32,
            // K[α₀+1, …, αₘ₋₁]
            Statistic::Period => self.shifted.0.clone(),
            // K[α₀, …, αₘ+1] - 1
            Statistic::BCount => &self.plain.0 + &self.plain.1 - 1u32,
        }
    }
}

fn dfs<W: Walker>(
    walker: &W,
    path: &mut Vec<Letter>,
    remaining: usize,
    stat: Statistic,
    acc: &mut Extremum,
) {
    if remaining == 0 {
        acc.offer(walker.stat(stat), || {
            Witness::Directive(Word::from_letters(path.clone()))
        });
        return;
    }
    for x in Letter::ALL {
        path.push(x);
        dfs(&walker.child(x), path, remaining - 1, stat, acc);
        path.pop();
    }
}

/// Depth of the prefixes handed to separate workers.
const SPLIT_DEPTH: usize = 6;

fn enumerate<W: Walker>(n: usize, first: Option<Letter>, stat: Statistic) -> Extremum {
    let mut prefixes: Vec<Vec<Letter>> = vec![Vec::new()];
    for depth in 0..n.min(SPLIT_DEPTH) {
        prefixes = prefixes
            .into_iter()
            .flat_map(|p| {
                Letter::ALL.into_iter().filter_map(move |x| {
                    if depth == 0 && first.is_some_and(|f| f != x) {
                        return None;
                    }
                    let mut q = p.clone();
                    q.push(x);
                    Some(q)
                })
            })
            .collect();
    }
    prefixes
        .into_par_iter()
        .map(|mut prefix| {
            let walker = prefix.iter().fold(W::root(), |w, &x| w.child(x));
            let mut acc = Extremum::default();
            let depth = prefix.len();
            dfs(&walker, &mut prefix, n - depth, stat, &mut acc);
            acc
        })
        .reduce(Extremum::default, Extremum::merge)
}

fn enumerate_mode(n: usize, first: Option<Letter>, stat: Statistic, mode: Mode) -> Extremum {
    match mode {
        Mode::Materialized => enumerate::<MaterializedWalker>(n, first, stat),
        Mode::Arithmetic => enumerate::<ArithmeticWalker>(n, first, stat),
    }
}

fn directive_set(words: impl IntoIterator<Item = Word>) -> BTreeSet<Witness> {
    words.into_iter().map(Witness::Directive).collect()
}

/// Enumeration bounds, overridable from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Largest order enumerated with materialized words.
    pub materialized: usize,
    /// Largest order enumerated through continuants (words or exponent lists).
    pub arithmetic: usize,
    /// Largest length for the central-word count.
    pub central_count: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            materialized: 14,
            arithmetic: 22,
            central_count: 16,
        }
    }
}

/// The verifiers, parameterized by their enumeration bounds.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Oracle {
    pub bounds: Bounds,
}

fn check_bound(order: usize, bound: usize) -> Result<()> {
    if order > bound {
        Err(Error::BoundExceeded { order, bound })
    } else {
        Ok(())
    }
}

fn check_min(order: usize, min: usize) -> Result<()> {
    if order < min {
        Err(Error::OrderTooSmall { order, min })
    } else {
        Ok(())
    }
}

/// One order of the Fibonacci lemma `x F_{n-x} + F_{n-x+1} <= F_{n+1}`,
/// with equality exactly at `x = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibLemmaRow {
    pub n: usize,
    /// Number of `x` values for which the statement holds (out of `n`).
    pub holds: usize,
    pub passed: bool,
}

/// One palindromic prefix `w` of the Fibonacci word and its harmonic
/// residue `π(w)² mod (|w| + 2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HarmonicRow {
    pub order: usize,
    pub length: usize,
    pub period: BigUint,
    pub modulus: BigUint,
    pub residue: BigUint,
    pub passed: bool,
}

/// Central words of length `n` against `φ(n + 2)`, plus the number of
/// distinct images of order `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralCountRow {
    pub n: usize,
    pub by_length: u64,
    pub expected: u64,
    pub by_order: u64,
    pub passed: bool,
}

/// Statistics of the order-`n` palindromic prefixes of `f`, `E(f)` and
/// `g = ψ(ab²(ab)^ω)` against the per-order maxima.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StreamRow {
    pub order: usize,
    pub mode: Mode,
    pub f_length: usize,
    pub ef_length: usize,
    pub max_length: BigUint,
    pub f_period: usize,
    pub ef_period: usize,
    pub max_period: Option<BigUint>,
    pub g_bcount: usize,
    pub f_bcount: usize,
    pub max_bcount: Option<BigUint>,
    pub passed: bool,
}

impl Oracle {
    pub fn new(bounds: Bounds) -> Oracle {
        Oracle { bounds }
    }

    fn check_mode_bound(&self, n: usize, mode: Mode) -> Result<()> {
        match mode {
            Mode::Materialized => check_bound(n, self.bounds.materialized),
            Mode::Arithmetic => check_bound(n, self.bounds.arithmetic),
        }
    }

    /// `max |ψ(v)| = F_{n+1} - 2` over `v ∈ {a,b}ⁿ`, attained exactly at
    /// `v⁽ⁿ⁾` and `E(v⁽ⁿ⁾)`.
    pub fn verify_max_length(&self, n: usize, mode: Mode) -> Result<ExtremalReport> {
        self.check_mode_bound(n, mode)?;
        let found = enumerate_mode(n, None, Statistic::Length, mode);
        let v = fibonacci_directive_prefix(n);
        let expected = directive_set([v.exchange(), v]);
        Ok(ExtremalReport::new(n, found, fib(n + 1) - 2u32, expected))
    }

    /// `max π(ψ(v)) = F_{n-1}`, attained exactly at `v⁽ⁿ⁾`, `E(v⁽ⁿ⁾)`,
    /// `c(v⁽ⁿ⁾)` and `E(c(v⁽ⁿ⁾))` (which coincide pairwise at `n = 2`).
    pub fn verify_max_period(&self, n: usize, mode: Mode) -> Result<ExtremalReport> {
        check_min(n, 1)?;
        self.check_mode_bound(n, mode)?;
        let found = enumerate_mode(n, None, Statistic::Period, mode);
        let v = fibonacci_directive_prefix(n);
        let c = op_c(&v);
        let expected = directive_set([v.exchange(), c.exchange(), v, c]);
        Ok(ExtremalReport::new(n, found, fib(n - 1), expected))
    }

    /// `max |ψ(v)|_b = F_{n-1} - 1` over `v ∈ a{a,b}^{n-1}`, attained exactly
    /// at `v⁽ⁿ⁾` and `E(d(v⁽ⁿ⁾))` (the latter only when it starts with `a`).
    pub fn verify_max_bcount(&self, n: usize, mode: Mode) -> Result<ExtremalReport> {
        check_min(n, 1)?;
        self.check_mode_bound(n, mode)?;
        let found = enumerate_mode(n, Some(Letter::A), Statistic::BCount, mode);
        let v = fibonacci_directive_prefix(n);
        let expected = directive_set(
            [op_d(&v).exchange(), v]
                .into_iter()
                .filter(|u| u.first() == Some(Letter::A)),
        );
        Ok(ExtremalReport::new(n, found, fib(n - 1) - 1u32, expected))
    }

    /// `K[α₀+1, α₁, …, αₘ₋₁, αₘ+1] <= F_{n+1}` over admissible lists summing
    /// to `n`, with equality exactly for `(0, 1ⁿ)` and `(1ⁿ)`.
    pub fn verify_continuant_max(&self, n: usize) -> Result<ExtremalReport> {
        check_bound(n, self.bounds.arithmetic)?;
        let found = enumerate_exponent_lists(n, |list| {
            let mut terms = list.to_vec();
            terms[0] += 1;
            *terms.last_mut().unwrap() += 1;
            continuant(terms)
        });
        let mut expected = BTreeSet::new();
        expected.insert(Witness::Exponents(
            std::iter::once(0).chain(vec![1; n]).collect(),
        ));
        if n >= 1 {
            expected.insert(Witness::Exponents(vec![1; n]));
        }
        Ok(ExtremalReport::new(n, found, fib(n + 1), expected))
    }

    /// `K[α₀+1, α₁, …, αₘ₋₁] <= F_{n-1}` over admissible lists summing to `n`,
    /// with equality exactly for the four list families of
    /// [`period_maximizing_lists`].
    pub fn verify_period_continuant_max(&self, n: usize) -> Result<ExtremalReport> {
        check_min(n, 2)?;
        check_bound(n, self.bounds.arithmetic)?;
        let found = enumerate_exponent_lists(n, |list| {
            let mut terms = list.to_vec();
            terms[0] += 1;
            terms.pop();
            continuant(terms)
        });
        let expected = period_maximizing_lists(n)
            .into_iter()
            .map(Witness::Exponents)
            .collect();
        Ok(ExtremalReport::new(n, found, fib(n - 1), expected))
    }

    pub fn fib_lemma_rows(&self, n_max: usize) -> Vec<FibLemmaRow> {
        (1..=n_max)
            .map(|n| {
                let bound = fib(n + 1);
                let holds = (1..=n)
                    .filter(|&x| {
                        let lhs = BigUint::from(x) * fib(n - x) + fib(n - x + 1);
                        lhs <= bound && (lhs == bound) == (x == 1)
                    })
                    .count();
                FibLemmaRow {
                    n,
                    holds,
                    passed: holds == n,
                }
            })
            .collect()
    }

    /// `x F_{n-x} + F_{n-x+1} <= F_{n+1}` for `1 <= x <= n <= n_max`, with
    /// equality iff `x = 1`.
    pub fn verify_fib_lemma(&self, n_max: usize) -> bool {
        self.fib_lemma_rows(n_max).iter().all(|r| r.passed)
    }

    pub fn harmonic_rows(&self, order_max: usize) -> Result<Vec<HarmonicRow>> {
        let mut stream = PsiStream::new(DirectiveSpec::fibonacci());
        let mut rows = Vec::with_capacity(order_max);
        for order in 1..=order_max {
            stream = stream.advance(1)?;
            let w = stream.current();
            let period = BigUint::from(w.minimal_period());
            let arithmetic = minimal_period_from_directive(&fibonacci_directive_prefix(order));
            let modulus = BigUint::from(w.len() + 2);
            let residue = (&period * &period) % &modulus;
            let passed = period == arithmetic && (residue.is_one() || residue == &modulus - 1u32);
            rows.push(HarmonicRow {
                order,
                length: w.len(),
                period,
                modulus,
                residue,
                passed,
            });
        }
        Ok(rows)
    }

    /// `π(w)² ≡ ±1 (mod |w| + 2)` for the palindromic prefixes `w` of the
    /// Fibonacci word of order `1..=order_max`.
    pub fn verify_harmonic_fibonacci(&self, order_max: usize) -> Result<bool> {
        Ok(self.harmonic_rows(order_max)?.iter().all(|r| r.passed))
    }

    pub fn central_count_rows(&self, n_max: usize) -> Result<Vec<CentralCountRow>> {
        check_bound(n_max, self.bounds.central_count)?;
        // |ψ(v)| >= |v|, so directive words up to length n_max reach every
        // central word of length <= n_max.
        let mut by_length: Vec<HashSet<Word>> = vec![HashSet::new(); n_max + 1];
        let mut by_order: Vec<HashSet<Word>> = vec![HashSet::new(); n_max + 1];
        fn walk(
            image: &Word,
            order: usize,
            n_max: usize,
            by_length: &mut [HashSet<Word>],
            by_order: &mut [HashSet<Word>],
        ) {
            if image.len() <= n_max {
                by_length[image.len()].insert(image.clone());
            }
            by_order[order].insert(image.clone());
            if order == n_max {
                return;
            }
            for x in Letter::ALL {
                let mut w = image.clone();
                w.push(x);
                let child = palindromic_closure_bounded(&w, DEFAULT_MAX_WORD_LEN)
                    .expect("bounded by central_count");
                walk(&child, order + 1, n_max, by_length, by_order);
            }
        }
        walk(&Word::empty(), 0, n_max, &mut by_length, &mut by_order);
        Ok((0..=n_max)
            .map(|n| {
                let expected = totient(n as u64 + 2);
                let count = by_length[n].len() as u64;
                let order_count = by_order[n].len() as u64;
                CentralCountRow {
                    n,
                    by_length: count,
                    expected,
                    by_order: order_count,
                    passed: count == expected && order_count == 1u64 << n,
                }
            })
            .collect())
    }

    /// The number of distinct central words of length `n` is `φ(n + 2)`
    /// for every `n <= n_max`.
    pub fn verify_central_count(&self, n_max: usize) -> Result<bool> {
        Ok(self.central_count_rows(n_max)?.iter().all(|r| r.passed))
    }

    pub fn stream_rows(&self, order_max: usize) -> Result<Vec<StreamRow>> {
        check_bound(order_max, self.bounds.arithmetic)?;
        let g_spec: DirectiveSpec = "abb|ab".parse().expect("literal spec");
        let mut f = PsiStream::new(DirectiveSpec::fibonacci());
        let mut ef = PsiStream::new(DirectiveSpec::fibonacci().exchange());
        let mut g = PsiStream::new(g_spec.clone());
        let mut rows = Vec::new();
        for order in 0..=order_max {
            if order > 0 {
                f = f.advance(1)?;
                ef = ef.advance(1)?;
                g = g.advance(1)?;
            }
            let mode = if order <= self.bounds.materialized {
                Mode::Materialized
            } else {
                Mode::Arithmetic
            };
            let v = fibonacci_directive_prefix(order);
            let length = self.verify_max_length(order, mode)?;
            let (fw, efw, gw) = (f.current(), ef.current(), g.current());
            let mut passed = length.passed
                && BigUint::from(fw.len()) == length.maximum
                && BigUint::from(efw.len()) == length.maximum
                && length.argmax.contains(&Witness::Directive(v.clone()))
                && length.argmax.contains(&Witness::Directive(v.exchange()));
            let (mut max_period, mut max_bcount) = (None, None);
            if order >= 1 {
                let period = self.verify_max_period(order, mode)?;
                let bcount = self.verify_max_bcount(order, mode)?;
                passed &= period.passed
                    && BigUint::from(fw.minimal_period()) == period.maximum
                    && BigUint::from(efw.minimal_period()) == period.maximum
                    && bcount.passed
                    && BigUint::from(gw.count_letter(Letter::B)) == bcount.maximum
                    && BigUint::from(fw.count_letter(Letter::B)) == bcount.maximum
                    && bcount
                        .argmax
                        .contains(&Witness::Directive(g_spec.prefix(order)))
                    && bcount.argmax.contains(&Witness::Directive(v));
                max_period = Some(period.maximum);
                max_bcount = Some(bcount.maximum);
            }
            rows.push(StreamRow {
                order,
                mode,
                f_length: fw.len(),
                ef_length: efw.len(),
                max_length: length.maximum,
                f_period: fw.minimal_period(),
                ef_period: efw.minimal_period(),
                max_period,
                g_bcount: gw.count_letter(Letter::B),
                f_bcount: fw.count_letter(Letter::B),
                max_bcount,
                passed,
            });
        }
        Ok(rows)
    }

    /// Along `f`, `E(f)` and `g`, every palindromic prefix of order
    /// `<= order_max` attains the per-order maximum of its statistic and its
    /// directive prefix is among the maximizers.
    pub fn verify_characteristic_extremal_streams(&self, order_max: usize) -> Result<bool> {
        Ok(self.stream_rows(order_max)?.iter().all(|r| r.passed))
    }
}

/// Every list `(α₀, …, αₘ)` with `α₀ >= 0`, `αᵢ >= 1` and sum `n`, in
/// lexicographic order of the list, evaluated by `value`.
fn enumerate_exponent_lists<F>(n: usize, value: F) -> Extremum
where
    F: Fn(&[usize]) -> BigUint + Sync,
{
    fn complete<F: Fn(&[usize]) -> BigUint>(
        list: &mut Vec<usize>,
        left: usize,
        value: &F,
        acc: &mut Extremum,
    ) {
        if left == 0 {
            acc.offer(value(list), || Witness::Exponents(list.clone()));
            return;
        }
        for part in 1..=left {
            list.push(part);
            complete(list, left - part, value, acc);
            list.pop();
        }
    }
    let mut heads: Vec<Vec<usize>> = Vec::new();
    for a0 in 0..=n {
        if a0 == n {
            heads.push(vec![a0]);
        } else {
            heads.extend((1..=n - a0).map(|a1| vec![a0, a1]));
        }
    }
    heads
        .into_par_iter()
        .map(|mut head| {
            let left = n - head.iter().sum::<usize>();
            let mut acc = Extremum::default();
            complete(&mut head, left, &value, &mut acc);
            acc
        })
        .reduce(Extremum::default, Extremum::merge)
}

/// The exponent lists summing to `n` at which `K[α₀+1, α₁, …, αₘ₋₁]`
/// reaches `F_{n-1}`:
///
/// 1. `α₀ = 0`, `m = n`, `α₁ = ⋯ = αₙ = 1`;
/// 2. `α₀ = 0`, `m = n-1`, `αᵢ = 1` for `1 <= i <= n-3`, `α_{n-2} = 2`, `α_{n-1} = 1`;
/// 3. `α₀ = 1`, `m = n-1`, `α₁ = ⋯ = α_{n-1} = 1`;
/// 4. `α₀ = 1`, `m = n-2`, `αᵢ = 1` for `1 <= i <= n-4`, `α_{n-3} = 2`, `α_{n-2} = 1`.
///
/// The explicit assignments to `α_{n-2}` (family 2) and `α_{n-3}` (family 4)
/// override the prescribed `α₀` when the indices coincide; a family is kept
/// only if the resulting list is admissible and sums to `n`. At `n = 3` this
/// yields `(2, 1)` from family 4; at `n = 2` family 2 yields `(2, 1)`, which
/// sums to 3 and is dropped.
pub fn period_maximizing_lists(n: usize) -> BTreeSet<Vec<usize>> {
    let build = |alpha0: usize, m: usize, twos_at: Option<usize>| -> Option<Vec<usize>> {
        let mut list = vec![1; m + 1];
        list[0] = alpha0;
        if let Some(k) = twos_at {
            if k + 1 > m {
                return None;
            }
            list[k] = 2;
            list[k + 1] = 1;
        }
        let admissible = list[1..].iter().all(|&a| a >= 1);
        (admissible && list.iter().sum::<usize>() == n).then_some(list)
    };
    let mut out = BTreeSet::new();
    out.extend(build(0, n, None));
    if n >= 2 {
        out.extend(build(0, n - 1, Some(n - 2)));
    }
    if n >= 1 {
        out.extend(build(1, n - 1, None));
    }
    if n >= 3 {
        out.extend(build(1, n - 2, Some(n - 3)));
    }
    out
}

/// Materialized and arithmetic statistics of `ψ(v)`:
/// `(|ψ(v)|, π(ψ(v)), |ψ(v)|_b)`.
pub fn dual_path_stats(v: &Word, limit: usize) -> Result<[(BigUint, BigUint); 3]> {
    let image = psi_bounded(v, limit)?;
    Ok([
        (BigUint::from(image.len()), psi_length_from_directive(v)),
        (
            BigUint::from(image.minimal_period()),
            minimal_period_from_directive(v),
        ),
        (
            BigUint::from(image.count_letter(Letter::B)),
            bcount_from_directive(v),
        ),
    ])
}

/// Whether both evaluation paths agree on all three statistics of `ψ(v)`.
pub fn dual_path_agrees(v: &Word, limit: usize) -> Result<bool> {
    Ok(dual_path_stats(v, limit)?.iter().all(|(m, a)| m == a))
}

/// [`Oracle::verify_max_length`] with default bounds.
pub fn verify_max_length(n: usize, mode: Mode) -> Result<ExtremalReport> {
    Oracle::default().verify_max_length(n, mode)
}

/// [`Oracle::verify_max_period`] with default bounds.
pub fn verify_max_period(n: usize, mode: Mode) -> Result<ExtremalReport> {
    Oracle::default().verify_max_period(n, mode)
}

/// [`Oracle::verify_max_bcount`] with default bounds.
pub fn verify_max_bcount(n: usize, mode: Mode) -> Result<ExtremalReport> {
    Oracle::default().verify_max_bcount(n, mode)
}

pub fn verify_continuant_max(n: usize) -> Result<ExtremalReport> {
    Oracle::default().verify_continuant_max(n)
}

pub fn verify_period_continuant_max(n: usize) -> Result<ExtremalReport> {
    Oracle::default().verify_period_continuant_max(n)
}

pub fn verify_fib_lemma(n_max: usize) -> bool {
    Oracle::default().verify_fib_lemma(n_max)
}

pub fn verify_harmonic_fibonacci(order_max: usize) -> Result<bool> {
    Oracle::default().verify_harmonic_fibonacci(order_max)
}

pub fn verify_central_count(n_max: usize) -> Result<bool> {
    Oracle::default().verify_central_count(n_max)
}

pub fn verify_characteristic_extremal_streams(order_max: usize) -> Result<bool> {
    Oracle::default().verify_characteristic_extremal_streams(order_max)
}
