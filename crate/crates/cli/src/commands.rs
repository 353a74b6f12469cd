//! One function per subcommand, each producing output records from library
//! calls.

use clap::ValueEnum;
use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use sturmian::arithmetic::{parse_list, psi_length_from_directive, ContinuedFraction};
use sturmian::extremal::{dual_path_agrees, ExtremalReport, Witness};
use sturmian::palindromization::psi_bounded;
use sturmian::{
    bcount_from_directive, cf_eval, christoffel, christoffel_factorize,
    christoffel_length_from_directive, continuant, convergents, minimal_period_from_directive,
    slope_from_directive, to_integral, DirectiveSpec, Error, Letter, Mode, Oracle, PsiStream,
    Result, Word,
};

use crate::output::{render_word, OutputRecord};

/// Settings shared by every subcommand.
#[derive(Debug, Clone, Copy)]
pub struct Context {
    pub max_word_len: usize,
    pub full: bool,
}

impl Context {
    fn word(&self, w: &Word) -> String {
        render_word(w, self.full)
    }
}

fn parse_word(s: &str) -> Result<Word> {
    s.parse()
}

pub fn psi(ctx: &Context, directive: &str) -> Result<OutputRecord> {
    let v = parse_word(directive)?;
    let image = psi_bounded(&v, ctx.max_word_len)?;
    Ok(OutputRecord::ok("psi")
        .input("directive", ctx.word(&v))
        .field("word", ctx.word(&image))
        .field("length", image.len())
        .field("minimal_period", image.minimal_period())
        .field("b_count", image.count_letter(Letter::B))
        .field("integral_representation", to_integral(&v)))
}

pub fn stream(ctx: &Context, spec: &str, prefix_len: usize) -> Result<OutputRecord> {
    let spec: DirectiveSpec = spec.parse()?;
    let stream = PsiStream::new(spec.clone()).advance_to_len(prefix_len, ctx.max_word_len)?;
    let prefix = stream.current().prefix(prefix_len);
    let note = match Letter::ALL
        .iter()
        .find(|&&x| spec.period().count_letter(x) == 0)
    {
        Some(x) => format!(
            "the period lacks the letter {x}, so this is not a characteristic Sturmian word \
             (both letters must occur infinitely often in the directive word)"
        ),
        None => String::new(),
    };
    Ok(OutputRecord::ok("stream")
        .input("spec", &spec)
        .input("prefix_len", prefix_len)
        .field("prefix", ctx.word(&prefix))
        .field("length", prefix.len())
        .field("directive_letters", stream.emitted())
        .field("characteristic", spec.is_characteristic())
        .field("note", note))
}

pub fn christoffel_cmd(ctx: &Context, p: u64, q: u64, factorize: bool) -> Result<OutputRecord> {
    let cw = christoffel(p, q)?;
    let mut record = OutputRecord::ok("christoffel")
        .input("p", p)
        .input("q", q)
        .input("factorize", factorize)
        .field("word", ctx.word(&cw))
        .field("length", cw.len())
        .field("slope", cw.slope_eta());
    if factorize {
        let f = christoffel_factorize(&cw)?;
        record = record
            .field("w1", ctx.word(&f.w1))
            .field("w2", ctx.word(&f.w2))
            .field("w1_length", f.w1.len())
            .field("w2_length", f.w2.len())
            .field("p_inverse", f.p_inv)
            .field("q_inverse", f.q_inv);
    }
    Ok(record)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ArithOp {
    /// Exponent list of a directive word
    Intrep,
    /// Continuant of an integer list
    Continuant,
    /// Value and convergents of a continued fraction
    Cf,
    /// Slope of the Christoffel word a·ψ(v)·b
    Slope,
    /// Length of ψ(v) and of a·ψ(v)·b
    Length,
    /// Minimal period of ψ(v)
    Period,
    /// Number of b's in ψ(v)
    Bcount,
}

impl ArithOp {
    pub fn name(self) -> String {
        self.to_possible_value()
            .expect("no skipped variants")
            .get_name()
            .to_owned()
    }
}

pub fn arith(op: ArithOp, payload: &str) -> Result<OutputRecord> {
    let record = OutputRecord::ok("arith")
        .input("op", op.name())
        .input("payload", payload);
    Ok(match op {
        ArithOp::Intrep => record.field("value", to_integral(&parse_word(payload)?)),
        ArithOp::Continuant => record.field("value", continuant(parse_list(payload)?)),
        ArithOp::Cf => {
            let cf: ContinuedFraction = payload.parse()?;
            let table = convergents(&cf);
            let steps: Vec<String> = (0..cf.terms().len())
                .map(|k| table.convergent(k).to_string())
                .collect();
            record
                .field("value", cf_eval(&cf))
                .field("canonical", &cf)
                .field("convergents", steps.join(" "))
        }
        ArithOp::Slope => record.field("value", slope_from_directive(&parse_word(payload)?)),
        ArithOp::Length => {
            let v = parse_word(payload)?;
            record
                .field("value", psi_length_from_directive(&v))
                .field("christoffel_length", christoffel_length_from_directive(&v))
        }
        ArithOp::Period => record.field(
            "value",
            minimal_period_from_directive(&parse_word(payload)?),
        ),
        ArithOp::Bcount => record.field("value", bcount_from_directive(&parse_word(payload)?)),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    /// Maximum length of ψ(v) over v of length n
    MaxLength,
    /// Maximum minimal period of ψ(v) over v of length n
    MaxPeriod,
    /// Maximum number of b's in ψ(v) over v = a·u of length n
    MaxBcount,
    /// Maximum of K[α₀+1, α₁, …, αₘ+1] over exponent lists summing to n
    ContinuantMax,
    /// Maximum of K[α₀+1, α₁, …, αₘ₋₁] over exponent lists summing to n
    PeriodContinuantMax,
    /// x·F(n-x) + F(n-x+1) <= F(n+1), equality iff x = 1
    FibLemma,
    /// π(w)² ≡ ±1 mod |w|+2 along the Fibonacci word
    Harmonic,
    /// Central words of length n number φ(n+2)
    CentralCount,
    /// Palindromic prefixes of f, E(f) and g attain the per-order maxima
    Streams,
    /// Materialized and arithmetic statistics agree on sampled directive words
    DualPath,
}

impl Theorem {
    pub fn name(self) -> String {
        self.to_possible_value()
            .expect("no skipped variants")
            .get_name()
            .to_owned()
    }

    fn first_order(self) -> usize {
        match self {
            Theorem::MaxLength
            | Theorem::ContinuantMax
            | Theorem::CentralCount
            | Theorem::Streams => 0,
            Theorem::PeriodContinuantMax => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Materialized,
    Arithmetic,
    /// Both paths where the materialized bound allows, asserting agreement
    Both,
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyArgs {
    pub theorem: Theorem,
    pub n_max: usize,
    pub mode: ModeArg,
    pub seed: u64,
    pub samples: usize,
}

fn joined(set: &std::collections::BTreeSet<Witness>) -> String {
    set.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn report_record(base: OutputRecord, r: &ExtremalReport) -> OutputRecord {
    base.field("maximum", &r.maximum)
        .field("expected", &r.expected_max)
        .field("argmax", joined(&r.argmax))
        .field("expected_argmax", joined(&r.expected_argmax))
}

/// Runs one word-enumeration theorem at one order in the requested mode.
fn word_extremal(
    oracle: &Oracle,
    verify: impl Fn(&Oracle, usize, Mode) -> Result<ExtremalReport>,
    n: usize,
    mode: ModeArg,
) -> Result<(&'static str, ExtremalReport, bool)> {
    Ok(match mode {
        ModeArg::Materialized => ("materialized", verify(oracle, n, Mode::Materialized)?, true),
        ModeArg::Arithmetic => ("arithmetic", verify(oracle, n, Mode::Arithmetic)?, true),
        ModeArg::Both if n <= oracle.bounds.materialized => {
            let m = verify(oracle, n, Mode::Materialized)?;
            let a = verify(oracle, n, Mode::Arithmetic)?;
            let agree = m == a;
            ("both", a, agree)
        }
        ModeArg::Both => ("arithmetic", verify(oracle, n, Mode::Arithmetic)?, true),
    })
}

/// One record per order, all computed before anything is returned so that a
/// bound error yields no partial output.
pub fn verify(ctx: &Context, oracle: &Oracle, args: VerifyArgs) -> Result<Vec<OutputRecord>> {
    let start = args.theorem.first_order();
    if args.n_max < start {
        return Err(Error::OrderTooSmall {
            order: args.n_max,
            min: start,
        });
    }
    let base = |order: usize, mode: &str| {
        OutputRecord::ok("verify")
            .input("theorem", args.theorem.name())
            .input("order", order)
            .input("mode", mode)
    };
    let orders = start..=args.n_max;
    let mut records = Vec::new();
    match args.theorem {
        Theorem::MaxLength | Theorem::MaxPeriod | Theorem::MaxBcount => {
            let f = match args.theorem {
                Theorem::MaxLength => Oracle::verify_max_length,
                Theorem::MaxPeriod => Oracle::verify_max_period,
                _ => Oracle::verify_max_bcount,
            };
            for n in orders {
                let (mode, r, agree) = word_extremal(oracle, f, n, args.mode)?;
                records.push(
                    report_record(base(n, mode), &r)
                        .field("paths_agree", agree)
                        .field("passed", r.passed && agree),
                );
            }
        }
        Theorem::ContinuantMax | Theorem::PeriodContinuantMax => {
            for n in orders {
                let r = if args.theorem == Theorem::ContinuantMax {
                    oracle.verify_continuant_max(n)?
                } else {
                    oracle.verify_period_continuant_max(n)?
                };
                records.push(report_record(base(n, "arithmetic"), &r).field("passed", r.passed));
            }
        }
        Theorem::FibLemma => {
            for row in oracle.fib_lemma_rows(args.n_max) {
                records.push(
                    base(row.n, "arithmetic")
                        .field("holds", row.holds)
                        .field("checked", row.n)
                        .field("passed", row.passed),
                );
            }
        }
        Theorem::Harmonic => {
            for row in oracle.harmonic_rows(args.n_max)? {
                records.push(
                    base(row.order, "both")
                        .field("length", row.length)
                        .field("period", &row.period)
                        .field("modulus", &row.modulus)
                        .field("residue", &row.residue)
                        .field("passed", row.passed),
                );
            }
        }
        Theorem::CentralCount => {
            for row in oracle.central_count_rows(args.n_max)? {
                records.push(
                    base(row.n, "materialized")
                        .field("count", row.by_length)
                        .field("expected", row.expected)
                        .field("by_order", row.by_order)
                        .field("passed", row.passed),
                );
            }
        }
        Theorem::Streams => {
            let opt =
                |v: &Option<BigUint>| v.as_ref().map_or_else(String::new, ToString::to_string);
            for row in oracle.stream_rows(args.n_max)? {
                records.push(
                    base(row.order, &row.mode.to_string())
                        .field("f_length", row.f_length)
                        .field("ef_length", row.ef_length)
                        .field("max_length", &row.max_length)
                        .field("f_period", row.f_period)
                        .field("ef_period", row.ef_period)
                        .field("max_period", opt(&row.max_period))
                        .field("f_bcount", row.f_bcount)
                        .field("g_bcount", row.g_bcount)
                        .field("max_bcount", opt(&row.max_bcount))
                        .field("passed", row.passed),
                );
            }
        }
        Theorem::DualPath => {
            let mut rng = StdRng::seed_from_u64(args.seed);
            for n in orders {
                let exhaustive = n < usize::BITS as usize && (1usize << n) <= args.samples;
                let words: Vec<Word> = if exhaustive {
                    (0..1usize << n)
                        .map(|bits| {
                            (0..n)
                                .map(|i| Letter::ALL[(bits >> (n - 1 - i)) & 1])
                                .collect()
                        })
                        .collect()
                } else {
                    (0..args.samples)
                        .map(|_| (0..n).map(|_| Letter::ALL[rng.gen_range(0..2)]).collect())
                        .collect()
                };
                let mut mismatches = 0usize;
                for v in &words {
                    if !dual_path_agrees(v, ctx.max_word_len)? {
                        mismatches += 1;
                    }
                }
                records.push(
                    base(n, "both")
                        .input("seed", args.seed)
                        .field("checked", words.len())
                        .field("exhaustive", exhaustive)
                        .field("mismatches", mismatches)
                        .field("passed", mismatches == 0),
                );
            }
        }
    }
    Ok(records)
}
