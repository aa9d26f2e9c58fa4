//! Brute-force references and seeded instance generators.
//!
//! Nothing here shares code with the factorization algorithms; the only
//! common dependency is the comparator itself, which is cross-checked by
//! [`naive_compare`].

use std::cmp::Ordering;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::orders::{AlphabetOrder, OmegaOrder, PositionalScheme};
use crate::words::{normalize, Alphabet, EventuallyPeriodicWord, FiniteWord, Letter};

/// Longest word [`enumerate_factorizations`] accepts.
pub const ENUMERATION_LIMIT: usize = 16;

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Compares by expanding both words to `max(preperiods) + lcm(periods)`
/// letters and applying the scheme at the first mismatch.
pub fn naive_compare(x: &EventuallyPeriodicWord, y: &EventuallyPeriodicWord, scheme: &PositionalScheme) -> Ordering {
    let (qx, qy) = (x.period().len(), y.period().len());
    let len = x.preperiod().len().max(y.preperiod().len()) + qx / gcd(qx, qy) * qy;
    let (ex, ey) = (x.prefix(len), y.prefix(len));
    match ex.iter().zip(ey.iter()).position(|(a, b)| a != b) {
        None => Ordering::Equal,
        Some(i) => scheme.order_at(i + 1).expect("positions are 1-based").compare(ex[i], ey[i]),
    }
}

/// Direct reading of the definition: `w^ω ≺ v^ω` for each proper suffix `v`.
fn defining_predicate<O: OmegaOrder + ?Sized>(order: &O, w: &[Letter]) -> bool {
    (1..w.len()).all(|j| order.omega_compare(w, &w[j..]) == Ordering::Less)
}

/// Every factorization of `w` into ω-Lyndon words with non-increasing
/// ω-powers, found by trying all `2^(|w|-1)` ways to cut `w`.
pub fn enumerate_factorizations<O: OmegaOrder + ?Sized>(w: &[Letter], order: &O) -> Result<Vec<Vec<FiniteWord>>> {
    let n = w.len();
    if n == 0 {
        return Err(Error::invalid("cannot factorize the empty word"));
    }
    if n > ENUMERATION_LIMIT {
        return Err(Error::TooLarge { len: n, limit: ENUMERATION_LIMIT });
    }
    if w.iter().any(|&l| usize::from(l) >= order.alphabet_size()) {
        return Err(Error::invalid("letter outside the order's alphabet"));
    }
    // lyndon[i][j]: w[i..j] satisfies the definition.
    let mut lyndon = vec![vec![false; n + 1]; n + 1];
    for i in 0..n {
        for j in i + 1..=n {
            lyndon[i][j] = defining_predicate(order, &w[i..j]);
        }
    }
    let mut out = Vec::new();
    for mask in 0u32..1 << (n - 1) {
        let mut cuts = vec![0];
        cuts.extend((1..n).filter(|i| mask & (1 << (i - 1)) != 0));
        cuts.push(n);
        if !cuts.windows(2).all(|c| lyndon[c[0]][c[1]]) {
            continue;
        }
        let parts: Vec<&[Letter]> = cuts.windows(2).map(|c| &w[c[0]..c[1]]).collect();
        if parts.windows(2).all(|p| order.omega_compare(p[0], p[1]) != Ordering::Less) {
            out.push(parts.into_iter().map(FiniteWord::from).collect());
        }
    }
    Ok(out)
}

/// Classical Lyndon factorization under a fixed letter order, by Duval's
/// three-index scan.
pub fn duval_factorize(w: &[Letter], base: &AlphabetOrder) -> Result<Vec<FiniteWord>> {
    if w.is_empty() {
        return Err(Error::invalid("cannot factorize the empty word"));
    }
    if w.iter().any(|&l| usize::from(l) >= base.size()) {
        return Err(Error::invalid("letter outside the order's alphabet"));
    }
    let rank: Vec<usize> = w.iter().map(|&l| base.rank(l)).collect();
    let n = w.len();
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        let (mut j, mut k) = (i + 1, i);
        while j < n && rank[k] <= rank[j] {
            if rank[k] < rank[j] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        while i <= k {
            out.push(FiniteWord::from(&w[i..i + j - k]));
            i += j - k;
        }
    }
    Ok(out)
}

/// Bounds for seeded random instances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceGenerator {
    pub seed: u64,
    pub alphabet_size: usize,
    pub min_len: usize,
    pub max_len: usize,
    pub max_preperiod: usize,
    pub max_period: usize,
    pub max_scheme_preperiod: usize,
    pub max_scheme_cycle: usize,
}

impl InstanceGenerator {
    /// Binary alphabet, words up to length 6, small periods and schemes.
    pub fn new(seed: u64) -> Self {
        InstanceGenerator {
            seed,
            alphabet_size: 2,
            min_len: 1,
            max_len: 6,
            max_preperiod: 4,
            max_period: 4,
            max_scheme_preperiod: 2,
            max_scheme_cycle: 3,
        }
    }

    fn validate(&self) -> Result<()> {
        let fail = |m: &str| Err(Error::invalid(m.to_string()));
        if self.alphabet_size == 0 || self.alphabet_size > 26 {
            return fail("alphabet size must be in 1..=26");
        }
        if self.min_len == 0 || self.min_len > self.max_len {
            return fail("word lengths need 1 <= min_len <= max_len");
        }
        if self.max_period == 0 {
            return fail("max_period must be at least 1");
        }
        if self.max_scheme_cycle == 0 {
            return fail("max_scheme_cycle must be at least 1");
        }
        Ok(())
    }

    pub fn stream(&self) -> Result<InstanceStream> {
        self.validate()?;
        Ok(InstanceStream { config: self.clone(), rng: ChaCha8Rng::seed_from_u64(self.seed), emitted: 0 })
    }
}

/// One generated instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Finite(FiniteWord),
    Infinite(EventuallyPeriodicWord),
    Scheme(PositionalScheme),
}

impl Instance {
    /// `word abba`, `infinite ab(ba)` or `scheme ab|ba,ab`.
    pub fn to_line(&self, alphabet: &Alphabet) -> String {
        match self {
            Instance::Finite(w) => format!("word {}", alphabet.format_word(w)),
            Instance::Infinite(x) => format!("infinite {}", alphabet.format_infinite(x)),
            Instance::Scheme(s) => format!("scheme {}", s.format(alphabet)),
        }
    }
}

/// Deterministic stream of instances; same seed, same stream.
///
/// Instances cycle through finite word, eventually periodic word and scheme.
/// The first scheme is the constant natural order, the second the alternating
/// one, later schemes are random.
pub struct InstanceStream {
    config: InstanceGenerator,
    rng: ChaCha8Rng,
    emitted: usize,
}

impl InstanceStream {
    fn letters(&mut self, len: usize) -> Vec<Letter> {
        let k = self.config.alphabet_size;
        (0..len).map(|_| self.rng.gen_range(0..k) as Letter).collect()
    }

    pub fn finite_word(&mut self) -> FiniteWord {
        let len = self.rng.gen_range(self.config.min_len..=self.config.max_len);
        FiniteWord::new(self.letters(len))
    }

    /// A canonical eventually periodic word.
    pub fn ev_word(&mut self) -> EventuallyPeriodicWord {
        let pre_len = self.rng.gen_range(0..=self.config.max_preperiod);
        let per_len = self.rng.gen_range(1..=self.config.max_period);
        let pre = self.letters(pre_len);
        let per = self.letters(per_len);
        normalize(&pre, &per).expect("period is nonempty")
    }

    fn alphabet_order(&mut self) -> AlphabetOrder {
        let mut ranking: Vec<Letter> = (0..self.config.alphabet_size).map(|l| l as Letter).collect();
        ranking.shuffle(&mut self.rng);
        AlphabetOrder::new(ranking).expect("a shuffle is a permutation")
    }

    pub fn random_scheme(&mut self) -> PositionalScheme {
        let pre_len = self.rng.gen_range(0..=self.config.max_scheme_preperiod);
        let cycle_len = self.rng.gen_range(1..=self.config.max_scheme_cycle);
        let pre = (0..pre_len).map(|_| self.alphabet_order()).collect();
        let cycle = (0..cycle_len).map(|_| self.alphabet_order()).collect();
        PositionalScheme::new(pre, cycle).expect("orders share the alphabet")
    }

    fn scheme(&mut self, index: usize) -> PositionalScheme {
        let k = self.config.alphabet_size;
        let natural = AlphabetOrder::natural(k).expect("valid size");
        match index {
            _ if k == 1 => PositionalScheme::constant(natural),
            0 => PositionalScheme::constant(natural),
            1 => PositionalScheme::alternating(k).expect("valid size"),
            _ => self.random_scheme(),
        }
    }
}

impl Iterator for InstanceStream {
    type Item = Instance;

    fn next(&mut self) -> Option<Instance> {
        let i = self.emitted;
        self.emitted += 1;
        Some(match i % 3 {
            0 => Instance::Finite(self.finite_word()),
            1 => Instance::Infinite(self.ev_word()),
            _ => Instance::Scheme(self.scheme(i / 3)),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alpha() -> Alphabet {
        Alphabet::latin(2).unwrap()
    }

    fn w(s: &str) -> FiniteWord {
        alpha().parse_word(s).unwrap()
    }

    fn shown(f: &[Vec<FiniteWord>]) -> Vec<Vec<String>> {
        f.iter().map(|fs| fs.iter().map(|l| alpha().format_word(l)).collect()).collect()
    }

    #[test]
    fn enumeration_examples() {
        let alt = PositionalScheme::alternating(2).unwrap();
        assert_eq!(shown(&enumerate_factorizations(&w("abbab"), &alt).unwrap()), [["abb", "ab"]]);
        assert_eq!(shown(&enumerate_factorizations(&w("ab"), &alt).unwrap()), [["ab"]]);
        assert_eq!(shown(&enumerate_factorizations(&w("aa"), &alt).unwrap()), [["a", "a"]]);
        assert_eq!(
            enumerate_factorizations(&[0; 17], &alt),
            Err(Error::TooLarge { len: 17, limit: ENUMERATION_LIMIT })
        );
    }

    #[test]
    fn duval_examples() {
        let abn = Alphabet::new(['a', 'b', 'n']).unwrap();
        let f = duval_factorize(&abn.parse_word("banana").unwrap(), &AlphabetOrder::natural(3).unwrap()).unwrap();
        let f: Vec<String> = f.iter().map(|l| abn.format_word(l)).collect();
        assert_eq!(f, ["b", "an", "an", "a"]);

        let nat = AlphabetOrder::natural(2).unwrap();
        assert_eq!(duval_factorize(&w("aaa"), &nat).unwrap(), [w("a"), w("a"), w("a")]);
        assert_eq!(duval_factorize(&w("ab"), &nat).unwrap(), [w("ab")]);
        assert_eq!(duval_factorize(&w("ab"), &AlphabetOrder::reversed(2).unwrap()).unwrap(), [w("a"), w("b")]);
        assert!(duval_factorize(&[], &nat).is_err());
    }

    #[test]
    fn naive_comparator_examples() {
        let alt = PositionalScheme::alternating(2).unwrap();
        let x = |s: &str| alpha().parse_infinite(s).unwrap();
        assert_eq!(naive_compare(&x("ab(ba)"), &x("a(ba)"), &alt), Ordering::Greater);
        assert_eq!(naive_compare(&x("(abba)"), &x("(b)"), &alt), Ordering::Less);
        assert_eq!(naive_compare(&x("(ab)"), &x("(ab)"), &alt), Ordering::Equal);
    }

    #[test]
    fn streams_are_reproducible() {
        let a: Vec<Instance> = InstanceGenerator::new(5).stream().unwrap().take(30).collect();
        let b: Vec<Instance> = InstanceGenerator::new(5).stream().unwrap().take(30).collect();
        assert_eq!(a, b);
        assert!(matches!(a[2], Instance::Scheme(ref s) if s.is_constant()));
        assert_eq!(a[5], Instance::Scheme(PositionalScheme::alternating(2).unwrap()));
    }

    #[test]
    fn unary_and_short_period_streams() {
        let g = InstanceGenerator { alphabet_size: 1, ..InstanceGenerator::new(3) };
        for inst in g.stream().unwrap().take(60) {
            match inst {
                Instance::Finite(w) => assert!(w.iter().all(|&l| l == 0)),
                Instance::Infinite(x) => assert_eq!(x.period().as_slice(), [0]),
                Instance::Scheme(s) => assert!(s.is_constant() && s.alphabet_size() == 1),
            }
        }
        let g = InstanceGenerator { max_period: 1, ..InstanceGenerator::new(3) };
        for inst in g.stream().unwrap().take(60) {
            if let Instance::Infinite(x) = inst {
                assert_eq!(x.period().len(), 1);
            }
        }
    }

    #[test]
    fn invalid_bounds() {
        assert!(InstanceGenerator { min_len: 0, ..InstanceGenerator::new(0) }.stream().is_err());
        assert!(InstanceGenerator { max_period: 0, ..InstanceGenerator::new(0) }.stream().is_err());
        assert!(InstanceGenerator { alphabet_size: 0, ..InstanceGenerator::new(0) }.stream().is_err());
    }
}
