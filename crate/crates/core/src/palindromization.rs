//! Right palindromic closure and the palindromization map `ψ`.
//!
//! `ψ(ε) = ε` and `ψ(vx) = (ψ(v)x)⁺`, where `w⁺` is the shortest palindrome
//! having `w` as a prefix. The images of `ψ` are exactly the central words;
//! feeding `ψ` an infinite directive word containing both letters infinitely
//! often yields a characteristic Sturmian word as the limit of its
//! palindromic prefixes.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::arithmetic;
use crate::error::{Error, Result};
use crate::word::{border_table, check_len, Letter, Word, DEFAULT_MAX_WORD_LEN};

/// Length of the longest palindromic suffix of `letters`.
fn longest_palindromic_suffix(letters: &[Letter]) -> usize {
    // A suffix of w that is also a prefix of its reversal is a palindrome, so
    // the answer is the longest border of  w~ # w.
    let joined: Vec<Option<Letter>> = letters
        .iter()
        .rev()
        .copied()
        .map(Some)
        .chain(std::iter::once(None))
        .chain(letters.iter().copied().map(Some))
        .collect();
    border_table(&joined)[joined.len()]
}

/// `w⁺`, the shortest palindrome with prefix `w`.
pub fn palindromic_closure(w: &Word) -> Result<Word> {
    palindromic_closure_bounded(w, DEFAULT_MAX_WORD_LEN)
}

pub fn palindromic_closure_bounded(w: &Word, limit: usize) -> Result<Word> {
    let q = longest_palindromic_suffix(w.letters());
    let head = w.len() - q;
    check_len(w.len() + head, limit)?;
    let mut out = w.clone();
    out.extend(w.letters()[..head].iter().rev().copied());
    Ok(out)
}

/// The central word `ψ(v)` directed by `v`.
pub fn psi(v: &Word) -> Result<Word> {
    psi_bounded(v, DEFAULT_MAX_WORD_LEN)
}

/// `ψ(v)`, failing as soon as the image would exceed `limit` letters.
///
/// Each step appends to the previous image: if `x` does not occur in `v`
/// then `ψ(vx) = ψ(v)xψ(v)`, otherwise `ψ(vx) = ψ(v)ψ(v₁)⁻¹ψ(v)` where
/// `v₁` is the prefix of `v` before the last occurrence of `x`.
pub fn psi_bounded(v: &Word, limit: usize) -> Result<Word> {
    let mut out: Vec<Letter> = Vec::new();
    // |ψ(v₁)| for the prefix v₁ preceding the last occurrence of each letter
    let mut before_last: [Option<usize>; 2] = [None, None];
    for x in v.iter() {
        let len = out.len();
        let start = match before_last[x.index()] {
            Some(l) => l,
            None => {
                check_len(2 * len + 1, limit)?;
                out.push(x);
                0
            }
        };
        check_len(out.len() + len - start, limit)?;
        out.extend_from_within(start..len);
        before_last[x.index()] = Some(len);
    }
    Ok(Word::from_letters(out))
}

/// An eventually periodic infinite directive word `preperiod · period^ω`.
///
/// Serialized as `"preperiod|period"`, e.g. `"|ab"` for `(ab)^ω`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DirectiveSpec {
    preperiod: Word,
    period: Word,
}

impl DirectiveSpec {
    pub fn new(preperiod: Word, period: Word) -> Result<DirectiveSpec> {
        if period.is_empty() {
            return Err(Error::MalformedSpec(format!("{preperiod}|")));
        }
        Ok(DirectiveSpec { preperiod, period })
    }

    /// `(ab)^ω`, directing the Fibonacci word.
    pub fn fibonacci() -> DirectiveSpec {
        DirectiveSpec::new(Word::empty(), crate::word::w("ab")).unwrap()
    }

    pub fn preperiod(&self) -> &Word {
        &self.preperiod
    }

    pub fn period(&self) -> &Word {
        &self.period
    }

    /// The `i`-th letter (0-based) of the infinite word.
    pub fn letter_at(&self, i: usize) -> Letter {
        match i.checked_sub(self.preperiod.len()) {
            None => self.preperiod[i],
            Some(j) => self.period[j % self.period.len()],
        }
    }

    /// The directive prefix of length `n`.
    pub fn prefix(&self, n: usize) -> Word {
        (0..n).map(|i| self.letter_at(i)).collect()
    }

    /// Both letters occur infinitely often, i.e. `ψ` of this word is a
    /// characteristic Sturmian word.
    pub fn is_characteristic(&self) -> bool {
        Letter::ALL.iter().all(|&x| self.period.count_letter(x) > 0)
    }

    pub fn exchange(&self) -> DirectiveSpec {
        DirectiveSpec {
            preperiod: self.preperiod.exchange(),
            period: self.period.exchange(),
        }
    }
}

impl FromStr for DirectiveSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<DirectiveSpec> {
        let malformed = || Error::MalformedSpec(s.to_string());
        let (pre, per) = s.split_once('|').ok_or_else(malformed)?;
        let pre: Word = pre.parse().map_err(|_| malformed())?;
        let per: Word = per.parse().map_err(|_| malformed())?;
        DirectiveSpec::new(pre, per).map_err(|_| malformed())
    }
}

impl fmt::Display for DirectiveSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.preperiod, self.period)
    }
}

/// Incremental generation of `ψ(x)` for an infinite directive word `x`.
///
/// The state is the checkpoint `(emitted, current)` with
/// `current = ψ(x[..emitted])`; advancing returns a new value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiStream {
    spec: DirectiveSpec,
    emitted: usize,
    current: Word,
}

impl PsiStream {
    pub fn new(spec: DirectiveSpec) -> PsiStream {
        PsiStream {
            spec,
            emitted: 0,
            current: Word::empty(),
        }
    }

    /// Restores a checkpoint, checking that `current` is what the spec
    /// generates after `emitted` directive letters.
    pub fn resume(spec: DirectiveSpec, emitted: usize, current: Word) -> Result<PsiStream> {
        if psi_bounded(&spec.prefix(emitted), current.len())? != current {
            return Err(Error::Invariant(format!(
                "checkpoint does not match {emitted} letters of {spec}"
            )));
        }
        Ok(PsiStream {
            spec,
            emitted,
            current,
        })
    }

    pub fn spec(&self) -> &DirectiveSpec {
        &self.spec
    }

    /// Number of directive letters consumed so far.
    pub fn emitted(&self) -> usize {
        self.emitted
    }

    /// The palindromic prefix of order `emitted`.
    pub fn current(&self) -> &Word {
        &self.current
    }

    pub fn advance(&self, steps: usize) -> Result<PsiStream> {
        self.advance_bounded(steps, DEFAULT_MAX_WORD_LEN)
    }

    /// Consumes `steps` further directive letters, one closure per letter.
    pub fn advance_bounded(&self, steps: usize, limit: usize) -> Result<PsiStream> {
        let mut next = self.clone();
        for _ in 0..steps {
            next.step(limit)?;
        }
        Ok(next)
    }

    /// Advances until at least `len` letters of `ψ(x)` are known.
    pub fn advance_to_len(&self, len: usize, limit: usize) -> Result<PsiStream> {
        let mut next = self.clone();
        while next.current.len() < len {
            next.step(limit)?;
        }
        Ok(next)
    }

    fn step(&mut self, limit: usize) -> Result<()> {
        let mut w = std::mem::take(&mut self.current);
        w.push(self.spec.letter_at(self.emitted));
        self.current = palindromic_closure_bounded(&w, limit)?;
        self.emitted += 1;
        Ok(())
    }
}

/// The directive word of a central word: the letters that immediately
/// follow its proper palindromic prefixes.
///
/// Fails with [`Error::NotCentral`] unless `ψ` of the extracted word gives
/// back `w`.
pub fn directive_word_of(w: &Word) -> Result<Word> {
    if !w.is_palindrome() {
        return Err(Error::NotCentral);
    }
    // Borders of  w # w~  are exactly the palindromic prefixes of w.
    let letters = w.letters();
    let joined: Vec<Option<Letter>> = letters
        .iter()
        .copied()
        .map(Some)
        .chain(std::iter::once(None))
        .chain(letters.iter().rev().copied().map(Some))
        .collect();
    let table = border_table(&joined);
    let mut lengths = vec![0];
    let mut k = table[joined.len()];
    while k > 0 {
        if k < w.len() {
            lengths.push(k);
        }
        k = table[k];
    }
    lengths.sort_unstable();
    lengths.dedup();
    if w.is_empty() {
        return Ok(Word::empty());
    }
    let v: Word = lengths.into_iter().map(|k| w[k]).collect();
    match psi_bounded(&v, w.len()) {
        Ok(image) if &image == w => Ok(v),
        _ => Err(Error::NotCentral),
    }
}

fn mu_letter(x: Letter, target: &[Letter]) -> Vec<Letter> {
    let mut out = Vec::with_capacity(2 * target.len());
    for &y in target {
        if y != x {
            out.push(x);
        }
        out.push(y);
    }
    out
}

/// `μ_v(target)` where `μ_x(x) = x`, `μ_x(y) = xy` and
/// `μ_{x₁⋯xₙ} = μ_{x₁} ∘ ⋯ ∘ μ_{xₙ}`.
pub fn mu(v: &Word, target: &Word) -> Result<Word> {
    mu_bounded(v, target, DEFAULT_MAX_WORD_LEN)
}

pub fn mu_bounded(v: &Word, target: &Word, limit: usize) -> Result<Word> {
    let mut out = target.letters().to_vec();
    for x in v.iter().rev() {
        let grown = out.len() + out.iter().filter(|&&y| y != x).count();
        check_len(grown, limit)?;
        out = mu_letter(x, &out);
    }
    Ok(Word::from_letters(out))
}

/// Directive words longer than this skip materialization in [`p_x`].
pub const P_X_MATERIALIZE_MAX_DIRECTIVE: usize = 64;

/// `p_x(v) = |μ_v(x)|`, the minimal period of `ψ(vx)`.
///
/// Computed with continuants. For `|v| <= 64`, when the image fits under the
/// default materialization limit, `μ_v(x)` is also built and the two values
/// must agree.
pub fn p_x(v: &Word, x: Letter) -> BigUint {
    let mut vx = v.clone();
    vx.push(x);
    let value = arithmetic::minimal_period_from_directive(&vx);
    if v.len() <= P_X_MATERIALIZE_MAX_DIRECTIVE && value <= BigUint::from(DEFAULT_MAX_WORD_LEN) {
        let image = mu(v, &Word::from_letters(vec![x])).expect("length checked above");
        assert_eq!(
            BigUint::from(image.len()),
            value,
            "p_x paths disagree on {v}"
        );
    }
    value
}

/// Evaluates both sides of `ψ(vu) = μ_v(ψ(u))ψ(v)` independently.
pub fn justin_check(v: &Word, u: &Word) -> Result<bool> {
    let lhs = psi(&v.concat(u))?;
    let rhs = mu(v, &psi(u)?)?.concat(&psi(v)?);
    Ok(lhs == rhs)
}

/// The exchange automorphism `E`.
pub fn exchange_e(w: &Word) -> Word {
    w.exchange()
}

/// Swaps the last two letters: `c(uxy) = uyx`; words shorter than two
/// letters are fixed.
pub fn op_c(v: &Word) -> Word {
    let mut letters = v.letters().to_vec();
    let n = letters.len();
    if n >= 2 {
        letters.swap(n - 2, n - 1);
    }
    Word::from_letters(letters)
}

/// Swaps the first two letters: `d(xyu) = yxu`.
pub fn op_d(v: &Word) -> Word {
    let mut letters = v.letters().to_vec();
    if letters.len() >= 2 {
        letters.swap(0, 1);
    }
    Word::from_letters(letters)
}

/// `v⁽ⁿ⁾`, the prefix of length `n` of `(ab)^ω`.
pub fn fibonacci_directive_prefix(n: usize) -> Word {
    (0..n)
        .map(|i| if i % 2 == 0 { Letter::A } else { Letter::B })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::w;

    fn naive_closure(u: &Word) -> Word {
        let q = (0..=u.len())
            .rev()
            .find(|&k| u.suffix(k).is_palindrome())
            .unwrap();
        u.concat(&u.prefix(u.len() - q).reverse())
    }

    fn iterated_closure(v: &Word) -> Word {
        let mut out = Word::empty();
        for x in v.iter() {
            out.push(x);
            out = naive_closure(&out);
        }
        out
    }

    fn all_words(n: usize) -> Vec<Word> {
        (0..1u32 << n)
            .map(|bits| {
                (0..n)
                    .map(|i| {
                        if bits >> (n - 1 - i) & 1 == 0 {
                            Letter::A
                        } else {
                            Letter::B
                        }
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn closure_examples() {
        assert_eq!(palindromic_closure(&w("ab")).unwrap(), w("aba"));
        assert_eq!(palindromic_closure(&w("ababaa")).unwrap(), w("ababaababa"));
        assert_eq!(palindromic_closure(&w("abba")).unwrap(), w("abba"));
        assert_eq!(palindromic_closure(&Word::empty()).unwrap(), Word::empty());
    }

    #[test]
    fn closure_matches_naive_scan() {
        for n in 0..=11 {
            for u in all_words(n) {
                let c = palindromic_closure(&u).unwrap();
                assert_eq!(c, naive_closure(&u), "{u}");
                assert!(c.is_palindrome() && u.is_prefix_of(&c) && c.len() <= 2 * u.len());
            }
        }
    }

    #[test]
    fn closure_respects_limit() {
        let err = palindromic_closure_bounded(&w("aab"), 4).unwrap_err();
        assert_eq!(err, Error::TooLong { len: 5, limit: 4 });
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(&w("abba")).unwrap(), w("ababaababa"));
        assert_eq!(psi(&w("aabba")).unwrap(), w("aabaabaaabaabaa"));
        assert_eq!(psi(&w("aaaaa")).unwrap(), w("aaaaa"));
        assert_eq!(psi(&Word::empty()).unwrap(), Word::empty());
    }

    #[test]
    fn psi_matches_iterated_closure() {
        for n in 0..=12 {
            for v in all_words(n) {
                assert_eq!(psi(&v).unwrap(), iterated_closure(&v), "{v}");
            }
        }
    }

    #[test]
    fn psi_respects_limit() {
        let v = fibonacci_directive_prefix(30);
        assert!(matches!(
            psi_bounded(&v, 1000),
            Err(Error::TooLong { limit: 1000, .. })
        ));
        assert_eq!(psi_bounded(&w("abba"), 10).unwrap().len(), 10);
        assert!(psi_bounded(&w("abba"), 9).is_err());
    }

    #[test]
    fn stream_reaches_fibonacci_prefix() {
        let s = PsiStream::new("|ab".parse().unwrap())
            .advance_to_len(25, DEFAULT_MAX_WORD_LEN)
            .unwrap();
        assert_eq!(s.current().prefix(25), w("abaababaabaababaababaabaa"));
    }

    #[test]
    fn stream_of_unary_directive() {
        let s = PsiStream::new("|a".parse().unwrap()).advance(7).unwrap();
        assert_eq!(s.current(), &Word::power(Letter::A, 7));
        assert!(!s.spec().is_characteristic());
    }

    #[test]
    fn stream_prefixes_are_nested_palindromes() {
        let spec: DirectiveSpec = "abb|ab".parse().unwrap();
        let mut s = PsiStream::new(spec.clone());
        for n in 1..=14 {
            let next = s.advance(1).unwrap();
            assert!(next.current().is_palindrome());
            assert!(s.current().len() < next.current().len());
            assert!(s.current().is_prefix_of(next.current()));
            assert_eq!(next.current(), &psi(&spec.prefix(n)).unwrap());
            s = next;
        }
        let resumed = PsiStream::resume(spec.clone(), s.emitted(), s.current().clone()).unwrap();
        assert_eq!(resumed.advance(2).unwrap(), s.advance(2).unwrap());
        assert!(PsiStream::resume(spec, 3, w("aba")).is_err());
    }

    #[test]
    fn directive_spec_parsing() {
        let spec: DirectiveSpec = "abb|ab".parse().unwrap();
        assert_eq!(spec.to_string(), "abb|ab");
        assert_eq!(spec.prefix(7), w("abbabab"));
        assert!(spec.is_characteristic());
        assert!("ab".parse::<DirectiveSpec>().is_err());
        assert!("ab|".parse::<DirectiveSpec>().is_err());
        assert!("a|bc".parse::<DirectiveSpec>().is_err());
        assert_eq!(
            "|ab".parse::<DirectiveSpec>().unwrap(),
            DirectiveSpec::fibonacci()
        );
    }

    #[test]
    fn directive_words() {
        assert_eq!(directive_word_of(&w("ababaababa")).unwrap(), w("abba"));
        assert_eq!(directive_word_of(&Word::empty()).unwrap(), Word::empty());
        assert_eq!(directive_word_of(&w("abab")), Err(Error::NotCentral));
        // a palindrome that is not central
        assert_eq!(directive_word_of(&w("abbba")), Err(Error::NotCentral));
    }

    #[test]
    fn directive_word_round_trip_and_rejection() {
        use std::collections::HashSet;
        let mut images = HashSet::new();
        for n in 0..=8 {
            for v in all_words(n) {
                let image = psi(&v).unwrap();
                assert_eq!(directive_word_of(&image).unwrap(), v);
                images.insert(image);
            }
        }
        // every word up to length 8 that is not a ψ image is rejected
        for n in 0..=8 {
            for u in all_words(n) {
                assert_eq!(directive_word_of(&u).is_ok(), images.contains(&u), "{u}");
            }
        }
    }

    #[test]
    fn mu_examples() {
        assert_eq!(mu(&w("a"), &w("ba")).unwrap(), w("aba"));
        let v = w("aabba");
        assert_eq!(mu(&v, &w("ab")).unwrap(), w("aabaabaaabaabaaab"));
        assert_eq!(mu(&v, &w("ba")).unwrap(), w("aabaabaaabaabaaba"));
        assert_eq!(mu(&v, &w("a")).unwrap().len(), 7);
        assert_eq!(mu(&w("abba"), &w("a")).unwrap().len(), 5);
        assert_eq!(mu(&Word::empty(), &w("abb")).unwrap(), w("abb"));
    }

    #[test]
    fn p_x_examples() {
        let v = w("aabba");
        assert_eq!(p_x(&v, Letter::A), BigUint::from(7u32));
        assert_eq!(p_x(&v, Letter::B), BigUint::from(10u32));
        assert_eq!(p_x(&Word::empty(), Letter::A), BigUint::from(1u32));
        // beyond the materialization zone only the continuant path runs
        let long = fibonacci_directive_prefix(80);
        assert_eq!(
            p_x(&long, Letter::A),
            crate::numbers::fibonacci(80).unwrap()
        );
    }

    #[test]
    fn justin_examples() {
        assert!(justin_check(&w("a"), &w("abba")).unwrap());
        let rhs = mu(&w("a"), &psi(&w("abba")).unwrap())
            .unwrap()
            .concat(&w("a"));
        assert_eq!(rhs, w("aabaabaaabaabaa"));
        assert!(justin_check(&Word::empty(), &w("abba")).unwrap());
    }

    #[test]
    fn exchange_examples() {
        assert_eq!(exchange_e(&w("ab")), w("ba"));
        let lhs = exchange_e(&psi(&w("abba")).unwrap());
        assert_eq!(lhs, psi(&w("baab")).unwrap());
        assert_eq!(lhs, w("bababbabab"));
        for n in 0..=14 {
            for u in all_words(n) {
                assert_eq!(exchange_e(&exchange_e(&u)), u);
            }
        }
    }

    #[test]
    fn c_and_d() {
        assert_eq!(op_c(&w("abbaba")), w("abbaab"));
        assert_eq!(op_c(&w("a")), w("a"));
        assert_eq!(op_c(&w("abab")), w("abba"));
        assert_eq!(op_c(&Word::empty()), Word::empty());
        assert_eq!(op_d(&w("abab")), w("baab"));
        assert_eq!(op_d(&w("ababa")), w("baaba"));
        assert_eq!(exchange_e(&op_d(&w("ababa"))), w("abbab"));
        assert_eq!(op_d(&w("b")), w("b"));
    }

    #[test]
    fn fibonacci_directive_prefixes() {
        assert_eq!(fibonacci_directive_prefix(0), Word::empty());
        assert_eq!(fibonacci_directive_prefix(5), w("ababa"));
        assert_eq!(fibonacci_directive_prefix(4), w("abab"));
    }
}
