//! Integral representations, continued fractions and continuants.
//!
//! A directive word `v = b^{α₀} a^{α₁} b^{α₂} ⋯` is encoded by its exponent
//! list `(α₀, α₁, …, αₙ)`. The length, minimal period, slope and letter
//! counts of `ψ(v)` and of the Christoffel word `aψ(v)b` are then continuants
//! of that list, so they can be evaluated exactly at orders where the words
//! themselves are far too long to build.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::word::{Letter, Word};

/// The exponent list `(α₀, α₁, …, αₙ)` of `b^{α₀} a^{α₁} b^{α₂} ⋯`.
///
/// Canonical form: the empty list for `ε`; otherwise `αᵢ > 0` for `i ≥ 1`
/// and a leading `0` only when the word starts with `a`. Even indices count
/// `b`s, odd indices count `a`s.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntegralRepresentation {
    alphas: Vec<usize>,
}

impl IntegralRepresentation {
    pub fn new(alphas: Vec<usize>) -> Result<IntegralRepresentation> {
        if alphas.len() == 1 && alphas[0] == 0 {
            return Err(Error::NonCanonical(
                "[0] denotes the empty word, whose representation is []".into(),
            ));
        }
        if let Some(i) = alphas.iter().skip(1).position(|&a| a == 0) {
            return Err(Error::NonCanonical(format!(
                "zero exponent at index {}",
                i + 1
            )));
        }
        Ok(IntegralRepresentation { alphas })
    }

    pub fn alphas(&self) -> &[usize] {
        &self.alphas
    }

    /// Length of the encoded word.
    pub fn total(&self) -> usize {
        self.alphas.iter().sum()
    }

    /// The list fed to the continuant formulas: `(0)` stands in for `ε`.
    fn for_formulas(&self) -> Vec<usize> {
        if self.alphas.is_empty() {
            vec![0]
        } else {
            self.alphas.clone()
        }
    }
}

impl fmt::Display for IntegralRepresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, self.alphas.iter())
    }
}

impl FromStr for IntegralRepresentation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let values = parse_list(s)?
            .into_iter()
            .map(|t| {
                t.to_string()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(e.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        IntegralRepresentation::new(values)
    }
}

fn write_list<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    items: impl Iterator<Item = T>,
) -> fmt::Result {
    f.write_str("[")?;
    for (i, x) in items.enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str("]")
}

/// Parses `[1,2,3]`; `[a;b,c]` and bare `1,2,3` are accepted too.
pub fn parse_list(s: &str) -> Result<Vec<BigUint>> {
    let inner = s.trim();
    let inner = inner
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .unwrap_or(inner)
        .trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split([',', ';'])
        .map(|t| {
            t.trim()
                .parse::<BigUint>()
                .map_err(|_| Error::Parse(format!("{:?} is not a natural number", t.trim())))
        })
        .collect()
}

/// The integral representation of `v`.
pub fn to_integral(v: &Word) -> IntegralRepresentation {
    let mut alphas = Vec::new();
    if !v.is_empty() {
        let mut current = Letter::B;
        let mut run = 0;
        for x in v.iter() {
            if x == current {
                run += 1;
            } else {
                alphas.push(run);
                current = x;
                run = 1;
            }
        }
        alphas.push(run);
    }
    IntegralRepresentation { alphas }
}

/// The word encoded by a canonical representation.
pub fn from_integral(r: &IntegralRepresentation) -> Word {
    r.alphas
        .iter()
        .enumerate()
        .flat_map(|(i, &n)| {
            let x = if i % 2 == 0 { Letter::B } else { Letter::A };
            std::iter::repeat(x).take(n)
        })
        .collect()
}

/// `K[a₀, …, aₙ]` with `K[] = 1`, `K[a₀] = a₀` and
/// `K[a₀, …, aₙ] = aₙ·K[a₀, …, aₙ₋₁] + K[a₀, …, aₙ₋₂]`.
pub fn continuant<I>(terms: I) -> BigUint
where
    I: IntoIterator,
    I::Item: Into<BigUint>,
{
    // (K of the list without its last term, K of the list)
    let mut prev = BigUint::zero();
    let mut cur = BigUint::one();
    for a in terms {
        let next = a.into() * &cur + &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// A finite simple continued fraction `[a₀; a₁, …, aₙ]`, `a₀ ≥ 0` and
/// `aᵢ ≥ 1` for `i ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ContinuedFraction {
    terms: Vec<BigUint>,
}

impl ContinuedFraction {
    pub fn new(terms: Vec<BigUint>) -> Result<ContinuedFraction> {
        if terms.is_empty() {
            return Err(Error::Parse(
                "a continued fraction needs at least a₀".into(),
            ));
        }
        if terms.iter().skip(1).any(Zero::is_zero) {
            return Err(Error::Parse(
                "partial quotients after a₀ must be positive".into(),
            ));
        }
        Ok(ContinuedFraction { terms })
    }

    pub fn from_u64(terms: &[u64]) -> Result<ContinuedFraction> {
        ContinuedFraction::new(terms.iter().map(|&t| t.into()).collect())
    }

    pub fn terms(&self) -> &[BigUint] {
        &self.terms
    }

    /// `[a₀; a₁, …, a_k]`.
    pub fn truncate(&self, k: usize) -> ContinuedFraction {
        ContinuedFraction {
            terms: self.terms[..=k].to_vec(),
        }
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}", self.terms[0])?;
        for (i, t) in self.terms.iter().enumerate().skip(1) {
            write!(f, "{}{t}", if i == 1 { ";" } else { "," })?;
        }
        f.write_str("]")
    }
}

impl FromStr for ContinuedFraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ContinuedFraction::new(parse_list(s)?)
    }
}

/// `[a₀; a₁, …, aₙ] = K[a₀, …, aₙ] / K[a₁, …, aₙ]`.
pub fn cf_eval(cf: &ContinuedFraction) -> Rational {
    let num = continuant(cf.terms.iter().cloned());
    let den = continuant(cf.terms[1..].iter().cloned());
    Rational::new(num, den)
}

/// One row `(A_k, B_k, P_k = A_k + B_k)` of the convergent recurrences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvergentRow {
    pub a: BigUint,
    pub b: BigUint,
    pub p: BigUint,
}

/// Rows for `k = -1, 0, …, n`; `rows()[k + 1]` is the `k`-th convergent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvergentTable {
    rows: Vec<ConvergentRow>,
}

impl ConvergentTable {
    pub fn rows(&self) -> &[ConvergentRow] {
        &self.rows
    }

    /// The row of the `k`-th convergent.
    pub fn row(&self, k: usize) -> &ConvergentRow {
        &self.rows[k + 1]
    }

    pub fn last(&self) -> &ConvergentRow {
        self.rows.last().expect("at least two rows")
    }

    /// `A_k / B_k`.
    pub fn convergent(&self, k: usize) -> Rational {
        let row = self.row(k);
        Rational::new(row.a.clone(), row.b.clone())
    }
}

/// `A₋₁ = 1, A₀ = a₀, B₋₁ = 0, B₀ = 1`, then
/// `A_{k+1} = a_{k+1}A_k + A_{k-1}` and likewise for `B` and `P`.
pub fn convergents(cf: &ContinuedFraction) -> ConvergentTable {
    let mut rows = vec![
        ConvergentRow {
            a: BigUint::one(),
            b: BigUint::zero(),
            p: BigUint::one(),
        },
        ConvergentRow {
            a: cf.terms[0].clone(),
            b: BigUint::one(),
            p: &cf.terms[0] + 1u32,
        },
    ];
    for t in &cf.terms[1..] {
        let (before, last) = (&rows[rows.len() - 2], &rows[rows.len() - 1]);
        let next = ConvergentRow {
            a: t * &last.a + &before.a,
            b: t * &last.b + &before.b,
            p: t * &last.p + &before.p,
        };
        rows.push(next);
    }
    ConvergentTable { rows }
}

/// `[α₀; α₁, …, αₙ₋₁, αₙ + 1]` for the representation of `v`.
fn slope_fraction(v: &Word) -> ContinuedFraction {
    let mut alphas = to_integral(v).for_formulas();
    *alphas.last_mut().unwrap() += 1;
    ContinuedFraction::new(alphas.into_iter().map(BigUint::from).collect())
        .expect("exponents after α₀ are positive")
}

/// The slope `|w|_b / |w|_a` of the Christoffel word `w = aψ(v)b`.
pub fn slope_from_directive(v: &Word) -> Rational {
    cf_eval(&slope_fraction(v))
}

/// `|aψ(v)b| = K[α₀ + 1, α₁, …, αₙ₋₁, αₙ + 1]`.
pub fn christoffel_length_from_directive(v: &Word) -> BigUint {
    let mut alphas = to_integral(v).for_formulas();
    alphas[0] += 1;
    *alphas.last_mut().unwrap() += 1;
    continuant(alphas)
}

/// `π(ψ(v)) = K[α₀ + 1, α₁, …, αₙ₋₁]`.
pub fn minimal_period_from_directive(v: &Word) -> BigUint {
    let mut alphas = to_integral(v).for_formulas();
    alphas[0] += 1;
    alphas.pop();
    continuant(alphas)
}

/// `|ψ(v)|_b`, one less than the numerator of the slope of `aψ(v)b`.
pub fn bcount_from_directive(v: &Word) -> BigUint {
    convergents(&slope_fraction(v)).last().a.clone() - 1u32
}

/// `|ψ(v)| = |aψ(v)b| - 2`.
pub fn psi_length_from_directive(v: &Word) -> BigUint {
    christoffel_length_from_directive(v) - 2u32
}

/// Whether `gcd(A_k, B_k) = 1` on every row with `k >= 0`.
pub fn rows_irreducible(table: &ConvergentTable) -> bool {
    table.rows[1..].iter().all(|r| r.a.gcd(&r.b).is_one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::palindromization::psi;
    use crate::word::w;

    fn k(terms: &[u64]) -> u64 {
        continuant(terms.iter().copied()).try_into().unwrap()
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
    fn integral_examples() {
        assert_eq!(to_integral(&w("bbabaa")).alphas(), [2, 1, 1, 2]);
        assert_eq!(to_integral(&w("aaababb")).alphas(), [0, 3, 1, 1, 2]);
        assert_eq!(to_integral(&Word::empty()).alphas(), [] as [usize; 0]);
        assert_eq!(to_integral(&w("aabba")).to_string(), "[0,2,2,1]");

        let r = IntegralRepresentation::new(vec![2, 1, 1, 2]).unwrap();
        assert_eq!(from_integral(&r), w("bbabaa"));
        let r = IntegralRepresentation::new(vec![0, 1]).unwrap();
        assert_eq!(from_integral(&r), w("a"));
    }

    #[test]
    fn non_canonical_lists_are_rejected() {
        assert!(IntegralRepresentation::new(vec![0]).is_err());
        assert!(IntegralRepresentation::new(vec![1, 0, 2]).is_err());
        assert!(IntegralRepresentation::new(vec![1, 2, 0]).is_err());
        assert!("[0,2,2,1]".parse::<IntegralRepresentation>().is_ok());
        assert!("[0,x]".parse::<IntegralRepresentation>().is_err());
    }

    #[test]
    fn integral_round_trip_up_to_12() {
        for n in 0..=12 {
            for v in all_words(n) {
                let r = to_integral(&v);
                assert_eq!(r.total(), v.len());
                assert_eq!(IntegralRepresentation::new(r.alphas().to_vec()).unwrap(), r);
                assert_eq!(from_integral(&r), v);
            }
        }
    }

    #[test]
    fn continuant_examples() {
        assert_eq!(k(&[]), 1);
        assert_eq!(k(&[7]), 7);
        assert_eq!(k(&[1, 2, 2, 2]), 17);
        assert_eq!(k(&[1, 2, 2]), 7);
    }

    #[test]
    fn continuant_five_variable_polynomial() {
        let poly = |a: [u64; 5]| {
            let [a0, a1, a2, a3, a4] = a;
            a0 * a1 * a2 * a3 * a4
                + a2 * a3 * a4
                + a0 * a3 * a4
                + a0 * a1 * a4
                + a0 * a1 * a2
                + a0
                + a2
                + a4
        };
        for a0 in 0..4 {
            for a1 in 0..4 {
                for a2 in 0..4 {
                    for a3 in [0, 1, 5] {
                        for a4 in [0, 2, 7] {
                            let a = [a0, a1, a2, a3, a4];
                            assert_eq!(k(&a), poly(a), "{a:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn continued_fraction_values() {
        let cf = |t: &[u64]| cf_eval(&ContinuedFraction::from_u64(t).unwrap());
        assert_eq!(cf(&[0, 2, 2, 2]), Rational::from_u64(5, 12));
        assert_eq!(cf(&[1, 2, 2]), Rational::from_u64(7, 5));
        assert_eq!(cf(&[4]), Rational::from_u64(4, 1));
        assert_eq!(cf(&[3, 1]), Rational::from_u64(4, 1));
        assert!(ContinuedFraction::from_u64(&[1, 0]).is_err());
        assert!(ContinuedFraction::from_u64(&[]).is_err());
        assert_eq!(
            "[0;2,2,2]"
                .parse::<ContinuedFraction>()
                .unwrap()
                .to_string(),
            "[0;2,2,2]"
        );
    }

    #[test]
    fn convergent_tables() {
        let table = convergents(&ContinuedFraction::from_u64(&[0, 2, 2, 2]).unwrap());
        let last = table.last();
        assert_eq!(
            (last.a.clone(), last.b.clone(), last.p.clone()),
            (5u32.into(), 12u32.into(), 17u32.into())
        );
        assert!(rows_irreducible(&table));

        let table = convergents(&ContinuedFraction::from_u64(&[6]).unwrap());
        assert_eq!(table.row(0).a, 6u32.into());
        assert_eq!(table.row(0).b, 1u32.into());
        assert_eq!(table.row(0).p, 7u32.into());
        assert_eq!(table.rows().len(), 2);
    }

    #[test]
    fn slopes_from_directives() {
        assert_eq!(slope_from_directive(&w("aabba")), Rational::from_u64(5, 12));
        assert_eq!(slope_from_directive(&w("baab")), Rational::from_u64(7, 5));
        assert_eq!(slope_from_directive(&w("bbb")), Rational::from_u64(4, 1));
        assert_eq!(slope_from_directive(&Word::empty()), Rational::one());
    }

    #[test]
    fn lengths_periods_and_counts_from_directives() {
        assert_eq!(christoffel_length_from_directive(&w("aabba")), 17u32.into());
        assert_eq!(
            christoffel_length_from_directive(&Word::empty()),
            2u32.into()
        );
        assert_eq!(minimal_period_from_directive(&w("aabba")), 7u32.into());
        assert_eq!(minimal_period_from_directive(&Word::empty()), 1u32.into());
        assert_eq!(bcount_from_directive(&w("aabba")), 4u32.into());
        assert_eq!(bcount_from_directive(&w("ababa")), 7u32.into());
        assert_eq!(bcount_from_directive(&w("bbbbb")), 5u32.into());
        assert_eq!(bcount_from_directive(&Word::empty()), 0u32.into());
    }

    #[test]
    fn cross_path_identities_up_to_12() {
        for n in 0..=12 {
            for v in all_words(n) {
                let u = psi(&v).unwrap();
                let christoffel = w("a").concat(&u).concat(&w("b"));
                assert_eq!(slope_from_directive(&v), christoffel.slope_eta(), "{v}");
                assert_eq!(
                    christoffel_length_from_directive(&v),
                    BigUint::from(u.len() + 2)
                );
                assert_eq!(
                    minimal_period_from_directive(&v),
                    BigUint::from(u.minimal_period())
                );
                assert_eq!(
                    bcount_from_directive(&v),
                    BigUint::from(u.count_letter(Letter::B))
                );
            }
        }
    }

    #[test]
    fn fibonacci_identity_for_all_ones() {
        for n in 0..=41u64 {
            let ones = vec![1u64; n as usize];
            assert_eq!(
                continuant(ones),
                crate::numbers::fibonacci(n as i64 - 1).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn standard_terms_are_prefixes_of_the_fibonacci_images() {
        // α₀ = 0: the remaining exponents are the directive numerical
        // sequence; for (ab)^ω they are all 1.
        let coeffs = vec![1; 10];
        let seq = crate::families::standard_from_coefficients(&coeffs).unwrap();
        let image = psi(&crate::palindromization::fibonacci_directive_prefix(14)).unwrap();
        assert_eq!(
            to_integral(&crate::palindromization::fibonacci_directive_prefix(10)).alphas()[1..],
            coeffs[..]
        );
        for s in seq.terms().iter().skip(1) {
            assert!(s.is_prefix_of(&image));
        }
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn reversal_invariance(terms in prop::collection::vec(0u64..1000, 0..40)) {
                let rev: Vec<u64> = terms.iter().rev().copied().collect();
                prop_assert_eq!(continuant(terms), continuant(rev));
            }

            #[test]
            fn trailing_one_is_absorbed(terms in prop::collection::vec(1u64..50, 1..30)) {
                let mut with_one = terms.clone();
                with_one.push(1);
                let mut bumped = terms.clone();
                *bumped.last_mut().unwrap() += 1;
                prop_assert_eq!(continuant(with_one), continuant(bumped));
            }

            #[test]
            fn convergents_match_truncations(
                a0 in 0u64..20,
                rest in prop::collection::vec(1u64..20, 0..25),
            ) {
                let mut terms = vec![a0];
                terms.extend(rest);
                let cf = ContinuedFraction::from_u64(&terms).unwrap();
                let table = convergents(&cf);
                prop_assert!(rows_irreducible(&table));
                for k in 0..terms.len() {
                    prop_assert_eq!(table.convergent(k), cf_eval(&cf.truncate(k)));
                    let row = table.row(k);
                    prop_assert_eq!(&row.p, &(&row.a + &row.b));
                }
                let mut bumped: Vec<u64> = terms.clone();
                bumped[0] += 1;
                prop_assert_eq!(&table.last().p, &continuant(bumped));
            }
        }
    }

    #[test]
    fn reversal_invariance_exhaustive_small_sums() {
        // all lists of positive terms with sum <= 18, plus zero-padded ends
        fn compositions(n: u64, acc: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
            if n == 0 {
                out.push(acc.clone());
                return;
            }
            for first in 1..=n {
                acc.push(first);
                compositions(n - first, acc, out);
                acc.pop();
            }
        }
        for n in 0..=18 {
            let mut lists = Vec::new();
            compositions(n, &mut Vec::new(), &mut lists);
            for mut list in lists {
                let rev: Vec<u64> = list.iter().rev().copied().collect();
                assert_eq!(continuant(list.clone()), continuant(rev));
                list.insert(0, 0);
                let rev: Vec<u64> = list.iter().rev().copied().collect();
                assert_eq!(continuant(list), continuant(rev));
            }
        }
    }
}
