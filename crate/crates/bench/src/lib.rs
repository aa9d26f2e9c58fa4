//! Input builders shared by the benchmarks.

use omega_lyndon::oracle::InstanceGenerator;
use omega_lyndon::{EventuallyPeriodicWord, FiniteWord, PositionalScheme};

/// `count` seeded finite words of exactly `len` letters over `k` letters.
pub fn finite_words(k: usize, len: usize, count: usize, seed: u64) -> Vec<FiniteWord> {
    let generator = InstanceGenerator { alphabet_size: k, min_len: len, max_len: len, ..InstanceGenerator::new(seed) };
    let mut stream = generator.stream().expect("valid generator");
    (0..count).map(|_| stream.finite_word()).collect()
}

/// `count` seeded eventually periodic words with preperiod and period up to the given sizes.
pub fn ev_words(k: usize, max_pre: usize, max_period: usize, count: usize, seed: u64) -> Vec<EventuallyPeriodicWord> {
    let generator = InstanceGenerator {
        alphabet_size: k,
        max_preperiod: max_pre,
        max_period,
        ..InstanceGenerator::new(seed)
    };
    let mut stream = generator.stream().expect("valid generator");
    (0..count).map(|_| stream.ev_word()).collect()
}

/// Constant natural, alternating and one seeded random scheme.
pub fn schemes(k: usize, seed: u64) -> Vec<(&'static str, PositionalScheme)> {
    let generator = InstanceGenerator { alphabet_size: k, ..InstanceGenerator::new(seed) };
    vec![
        ("constant", PositionalScheme::constant(omega_lyndon::AlphabetOrder::natural(k).unwrap())),
        ("alternating", PositionalScheme::alternating(k).unwrap()),
        ("random", generator.stream().unwrap().random_scheme()),
    ]
}
