use std::collections::HashMap;

use num_bigint::BigUint;
use num_integer::Integer;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use sturmian::extremal::{dual_path_agrees, dual_path_stats};
use sturmian::palindromization::p_x;
use sturmian::{
    fibonacci, fibonacci_directive_prefix, minimal_period_from_directive, mu, op_c, op_d,
    palindromic_closure, psi, Letter, Word, DEFAULT_MAX_WORD_LEN,
};

fn words_of_len(n: usize) -> impl Iterator<Item = Word> {
    (0..1u32 << n).map(move |bits| {
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
}

fn words_up_to(n: usize) -> impl Iterator<Item = Word> {
    (0..=n).flat_map(words_of_len)
}

fn letter_word(x: Letter) -> Word {
    Word::from_letters(vec![x])
}

#[test]
fn period_structure_up_to_12() {
    for v in words_up_to(12) {
        let image = psi(&v).unwrap();
        let pa = p_x(&v, Letter::A);
        let pb = p_x(&v, Letter::B);
        for (x, p) in [(Letter::A, &pa), (Letter::B, &pb)] {
            let mut extended = image.clone();
            extended.push(x);
            assert_eq!(BigUint::from(extended.minimal_period()), *p, "{v} {x}");
        }
        assert!(pa.gcd(&pb) == BigUint::from(1u32), "{v}");
        assert_eq!(
            BigUint::from(image.minimal_period()),
            (&pa).min(&pb).clone(),
            "{v}"
        );
        assert_eq!(BigUint::from(image.len() + 2), &pa + &pb, "{v}");
    }
}

#[test]
fn fibonacci_prefix_recursion() {
    // ψ(v⁽ⁿ⁺¹⁾) = ψ(v⁽ⁿ⁻¹⁾) z̄z ψ(v⁽ⁿ⁾), z the last letter of v⁽ⁿ⁺¹⁾
    for n in 1..=18 {
        let next = fibonacci_directive_prefix(n + 1);
        let z = next.last().unwrap();
        let middle = Word::from_letters(vec![z.exchange(), z]);
        let rhs = psi(&fibonacci_directive_prefix(n - 1))
            .unwrap()
            .concat(&middle)
            .concat(&psi(&fibonacci_directive_prefix(n)).unwrap());
        assert_eq!(psi(&next).unwrap(), rhs, "order {n}");
    }
}

#[test]
fn fibonacci_prefix_lengths_up_to_25() {
    for n in 0..=25usize {
        let v = fibonacci_directive_prefix(n);
        let expected = fibonacci(n as i64 + 1).unwrap() - 2u32;
        assert_eq!(
            dual_path_stats(&v, DEFAULT_MAX_WORD_LEN).unwrap()[0].1,
            expected
        );
        if n <= 20 {
            assert_eq!(BigUint::from(psi(&v).unwrap().len()), expected);
        }
    }
}

#[test]
fn c_and_d_are_involutions_commuting_with_exchange() {
    for v in (2..=10).flat_map(words_of_len) {
        assert_eq!(op_c(&op_c(&v)), v);
        assert_eq!(op_d(&op_d(&v)), v);
        assert_eq!(op_d(&v), op_c(&v.reverse()).reverse());
        assert_eq!(op_c(&v.exchange()), op_c(&v).exchange());
        assert_eq!(op_d(&v.exchange()), op_d(&v).exchange());
    }
}

#[test]
fn justin_corollaries_up_to_10() {
    for u in words_up_to(9) {
        let psi_u = psi(&u).unwrap();
        for x in Letter::ALL {
            let xu = letter_word(x).concat(&u);
            assert_eq!(
                psi(&xu).unwrap(),
                mu(&letter_word(x), &psi_u).unwrap().concat(&letter_word(x))
            );
            let mut ux = u.clone();
            ux.push(x);
            assert_eq!(
                psi(&ux).unwrap(),
                mu(&u, &letter_word(x)).unwrap().concat(&psi_u)
            );
        }
    }
}

#[test]
fn palindromic_closure_of_prefixes_stays_inside() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..200 {
        let len = rng.gen_range(1..=12);
        let v: Word = (0..len)
            .map(|_| if rng.gen() { Letter::A } else { Letter::B })
            .collect();
        let image = psi(&v).unwrap();
        for k in 0..=image.len() {
            let closed = palindromic_closure(&image.prefix(k)).unwrap();
            assert!(closed.is_prefix_of(&image), "{v} prefix {k}");
        }
    }
}

#[test]
fn dual_paths_agree_on_random_long_directives() {
    let mut rng = StdRng::seed_from_u64(20_240_601);
    let mut by_len: HashMap<usize, usize> = HashMap::new();
    for _ in 0..100_000 {
        let len = rng.gen_range(13..=20);
        let v: Word = (0..len)
            .map(|_| if rng.gen() { Letter::A } else { Letter::B })
            .collect();
        assert!(dual_path_agrees(&v, DEFAULT_MAX_WORD_LEN).unwrap(), "{v}");
        *by_len.entry(len).or_default() += 1;
    }
    assert_eq!(by_len.len(), 8);
}

#[test]
fn periods_past_the_materialization_zone() {
    // long directive words use continuants only
    let v = fibonacci_directive_prefix(100);
    assert_eq!(
        p_x(&v, Letter::A),
        minimal_period_from_directive(&{
            let mut va = v.clone();
            va.push(Letter::A);
            va
        })
    );
    assert_eq!(p_x(&v, Letter::A), fibonacci(100).unwrap());
}

fn arb_word(max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(prop::bool::ANY, 0..=max).prop_map(|bits| {
        bits.into_iter()
            .map(|b| if b { Letter::B } else { Letter::A })
            .collect()
    })
}

proptest! {
    #[test]
    fn factors_inherit_periods(u in arb_word(40), p in 1usize..12, i in 0usize..40, j in 0usize..40) {
        let (start, end) = (i.min(j).min(u.len()), i.max(j).min(u.len()));
        let factor = u.factor(start, end);
        if u.has_period(p).unwrap() {
            prop_assert!(factor.has_period(p).unwrap());
        }
        prop_assert!(factor.minimal_period() <= u.minimal_period().max(1));
    }

    #[test]
    fn central_images_have_both_periods(v in arb_word(16)) {
        let image = psi(&v).unwrap();
        let pa = p_x(&v, Letter::A);
        let pb = p_x(&v, Letter::B);
        for p in [pa, pb] {
            let p: usize = p.try_into().unwrap();
            prop_assert!(image.has_period(p).unwrap());
        }
    }
}
