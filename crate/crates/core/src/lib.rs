//! Sturmian words through the palindromization map.
//!
//! The crate builds central words `ψ(v)` by iterated palindromic closure,
//! recognizes and factorizes central, standard and Christoffel words, and
//! evaluates lengths, periods, slopes and letter counts of central words
//! through continuants of the exponent list of the directive word. The
//! [`extremal`] module checks, by exhaustive enumeration, that the
//! palindromic prefixes of the Fibonacci word are extremal among all central
//! words of the same order.
//!
//! ```
//! use sturmian::{psi, w};
//!
//! let u = psi(&w("abba")).unwrap();
//! assert_eq!(u, w("ababaababa"));
//! assert_eq!(u.minimal_period(), 5);
//! ```

pub mod arithmetic;
pub mod error;
pub mod extremal;
pub mod families;
pub mod numbers;
pub mod palindromization;
pub mod rational;
pub mod word;

pub use num_bigint::BigUint as BigNat;

pub use arithmetic::{
    bcount_from_directive, cf_eval, christoffel_length_from_directive, continuant, convergents,
    from_integral, minimal_period_from_directive, slope_from_directive, to_integral,
    ContinuedFraction, ConvergentTable, IntegralRepresentation,
};
pub use error::{Error, Result};
pub use extremal::{
    verify_central_count, verify_characteristic_extremal_streams, verify_continuant_max,
    verify_fib_lemma, verify_harmonic_fibonacci, verify_max_bcount, verify_max_length,
    verify_max_period, verify_period_continuant_max, Bounds, ExtremalReport, Mode, Oracle, Witness,
};
pub use families::{
    central_certificate, central_decompose, christoffel, christoffel_factorize, count_central,
    is_central, is_christoffel, is_standard, standard_decompose, standard_from_coefficients,
    CentralCertificate, CentralDecomposition, ChristoffelFactorization, StandardSequence,
};
pub use numbers::fibonacci;
pub use palindromization::{
    directive_word_of, exchange_e, fibonacci_directive_prefix, justin_check, mu, op_c, op_d, p_x,
    palindromic_closure, psi, DirectiveSpec, PsiStream,
};
pub use rational::Rational;
pub use word::{w, Letter, Word, DEFAULT_MAX_WORD_LEN};
