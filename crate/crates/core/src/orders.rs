//! Total orders on infinite words that are "lexicographic like": for
//! equal-length `u`, `v`, `u^ω ≺ v^ω` forces `u·x ≺ v·y` for every pair of
//! tails `x`, `y`.
//!
//! [`PositionalScheme`] is the concrete family shipped here: each position
//! carries its own total order on the alphabet and a mismatch is resolved by
//! the order at the mismatch position. Other comparators plug in through
//! [`OmegaOrder`] and can be checked empirically with [`validate_star`].

use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::words::{
    first_mismatch, normalize, periodic_first_mismatch, Alphabet, EventuallyPeriodicWord, FiniteWord,
    Letter,
};

/// A total order on infinite words, evaluated on eventually periodic words.
///
/// Implementations must be a total order in which `Equal` means the two
/// canonical values are identical, and must satisfy the lexicographic-like
/// condition above. Nothing in this crate assumes an order is positional.
/// Implementations are expected to be safe for concurrent read-only use.
pub trait OmegaOrder {
    /// Number of letters the order is defined over. Words passed to
    /// [`OmegaOrder::compare`] must only use letters below this bound.
    fn alphabet_size(&self) -> usize;

    fn compare(&self, x: &EventuallyPeriodicWord, y: &EventuallyPeriodicWord) -> Ordering;

    /// Compares `u^ω` with `v^ω` for nonempty `u`, `v`.
    fn omega_compare(&self, u: &[Letter], v: &[Letter]) -> Ordering {
        let x = EventuallyPeriodicWord::omega_power(u).expect("nonempty word");
        let y = EventuallyPeriodicWord::omega_power(v).expect("nonempty word");
        self.compare(&x, &y)
    }

    /// Compares `u^ω` with the infinite word `y`.
    fn omega_compare_with(&self, u: &[Letter], y: &EventuallyPeriodicWord) -> Ordering {
        let x = EventuallyPeriodicWord::omega_power(u).expect("nonempty word");
        self.compare(&x, y)
    }
}

/// A total order on the alphabet, listed from smallest to largest letter.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlphabetOrder {
    ranking: Vec<Letter>,
    rank: Vec<u8>,
}

impl AlphabetOrder {
    pub fn new(ranking: Vec<Letter>) -> Result<Self> {
        let k = ranking.len();
        if k == 0 || k > usize::from(Letter::MAX) + 1 {
            return Err(Error::invalid(format!("an alphabet order needs 1..=256 letters, got {k}")));
        }
        let mut rank = vec![u8::MAX; k];
        let mut seen = vec![false; k];
        for (r, &l) in ranking.iter().enumerate() {
            let li = usize::from(l);
            if li >= k || seen[li] {
                return Err(Error::invalid(format!("{ranking:?} is not a permutation of 0..{k}")));
            }
            seen[li] = true;
            rank[li] = r as u8;
        }
        Ok(AlphabetOrder { ranking, rank })
    }

    /// The natural order `0 < 1 < ... < k-1`.
    pub fn natural(k: usize) -> Result<Self> {
        AlphabetOrder::new((0..k).map(|l| l as Letter).collect())
    }

    /// The order `k-1 < ... < 1 < 0`.
    pub fn reversed(k: usize) -> Result<Self> {
        AlphabetOrder::new((0..k).rev().map(|l| l as Letter).collect())
    }

    pub fn size(&self) -> usize {
        self.ranking.len()
    }

    pub fn ranking(&self) -> &[Letter] {
        &self.ranking
    }

    pub fn rank(&self, letter: Letter) -> usize {
        usize::from(self.rank[usize::from(letter)])
    }

    pub fn compare(&self, a: Letter, b: Letter) -> Ordering {
        self.rank[usize::from(a)].cmp(&self.rank[usize::from(b)])
    }

    fn parse(alphabet: &Alphabet, s: &str, offset: usize) -> Result<Self> {
        let letters = alphabet.parse_word(s).map_err(|e| match e {
            Error::Parse { position, message } => Error::Parse { position: position + offset, message },
            other => other,
        })?;
        let complete = letters.len() == alphabet.size();
        AlphabetOrder::new(letters.into_vec()).ok().filter(|_| complete).ok_or_else(|| Error::Parse {
            position: offset,
            message: format!("{s:?} must list every symbol of {alphabet} exactly once"),
        })
    }
}

/// Outcome of comparing two infinite words with a positional scheme.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub ordering: Ordering,
    /// 1-based position of the first differing letter, `None` when equal.
    pub first_mismatch: Option<usize>,
}

/// An eventually periodic sequence of alphabet orders, one per position.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PositionalScheme {
    preperiod: Vec<AlphabetOrder>,
    cycle: Vec<AlphabetOrder>,
}

impl PositionalScheme {
    pub fn new(preperiod: Vec<AlphabetOrder>, cycle: Vec<AlphabetOrder>) -> Result<Self> {
        let Some(first) = cycle.first() else {
            return Err(Error::invalid("a scheme needs at least one order in its cycle"));
        };
        let k = first.size();
        if preperiod.iter().chain(&cycle).any(|o| o.size() != k) {
            return Err(Error::invalid("all orders of a scheme must share one alphabet"));
        }
        Ok(PositionalScheme { preperiod, cycle })
    }

    /// The same order at every position: ordinary lexicographic order.
    pub fn constant(order: AlphabetOrder) -> Self {
        PositionalScheme { preperiod: Vec::new(), cycle: vec![order] }
    }

    /// Natural order at odd positions, reversed order at even positions.
    pub fn alternating(k: usize) -> Result<Self> {
        PositionalScheme::new(Vec::new(), vec![AlphabetOrder::natural(k)?, AlphabetOrder::reversed(k)?])
    }

    pub fn preperiod_orders(&self) -> &[AlphabetOrder] {
        &self.preperiod
    }

    pub fn cycle_orders(&self) -> &[AlphabetOrder] {
        &self.cycle
    }

    pub fn is_constant(&self) -> bool {
        self.preperiod.iter().chain(&self.cycle).all(|o| *o == self.cycle[0])
    }

    /// Order used at 1-based position `i`.
    pub fn order_at(&self, i: usize) -> Result<&AlphabetOrder> {
        if i == 0 {
            return Err(Error::invalid("positions are 1-based"));
        }
        Ok(self.order_at0(i - 1))
    }

    fn order_at0(&self, i: usize) -> &AlphabetOrder {
        match self.preperiod.get(i) {
            Some(o) => o,
            None => &self.cycle[(i - self.preperiod.len()) % self.cycle.len()],
        }
    }

    fn check(&self, x: &EventuallyPeriodicWord) -> Result<()> {
        if usize::from(x.max_letter()) >= self.alphabet_size() {
            return Err(Error::invalid(format!(
                "word uses letter {} outside the scheme's alphabet of size {}",
                x.max_letter(),
                self.alphabet_size()
            )));
        }
        Ok(())
    }

    fn resolve(&self, pos0: Option<usize>, letters: impl Fn(usize) -> (Letter, Letter)) -> Comparison {
        match pos0 {
            None => Comparison { ordering: Ordering::Equal, first_mismatch: None },
            Some(i) => {
                let (a, b) = letters(i);
                Comparison { ordering: self.order_at0(i).compare(a, b), first_mismatch: Some(i + 1) }
            }
        }
    }

    pub fn compare_ev_periodic(
        &self,
        x: &EventuallyPeriodicWord,
        y: &EventuallyPeriodicWord,
    ) -> Result<Comparison> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.resolve(first_mismatch(x, y), |i| (x.letter(i), y.letter(i))))
    }

    /// Compares `u^ω` with `v^ω`.
    pub fn omega_compare_finite(&self, u: &[Letter], v: &[Letter]) -> Result<Comparison> {
        if u.is_empty() || v.is_empty() {
            return Err(Error::invalid("omega powers need nonempty words"));
        }
        let x = normalize(&[], u)?;
        let y = normalize(&[], v)?;
        self.compare_ev_periodic(&x, &y)
    }

    /// Parses `ab`, `ab,ba` or `ab|ba,ab`: optional preperiod orders before
    /// `|`, then the cycle. Each permutation lists the alphabet from smallest
    /// to largest.
    pub fn parse(alphabet: &Alphabet, s: &str) -> Result<Self> {
        let (pre, cycle, cycle_offset) = match s.find('|') {
            Some(bar) => (&s[..bar], &s[bar + 1..], s[..=bar].chars().count()),
            None => ("", s, 0),
        };
        if cycle.contains('|') {
            return Err(Error::Parse {
                position: cycle_offset + cycle.chars().position(|c| c == '|').unwrap_or(0),
                message: "at most one '|' is allowed".into(),
            });
        }
        let parse_list = |part: &str, offset: usize| -> Result<Vec<AlphabetOrder>> {
            if part.is_empty() {
                return Ok(Vec::new());
            }
            let mut out = Vec::new();
            let mut pos = offset;
            for item in part.split(',') {
                if item.is_empty() {
                    return Err(Error::Parse { position: pos, message: "empty alphabet order".into() });
                }
                out.push(AlphabetOrder::parse(alphabet, item, pos)?);
                pos += item.chars().count() + 1;
            }
            Ok(out)
        };
        let preperiod = parse_list(pre, 0)?;
        let cycle = parse_list(cycle, cycle_offset)?;
        if cycle.is_empty() {
            return Err(Error::Parse {
                position: s.chars().count(),
                message: "a scheme needs at least one order in its cycle".into(),
            });
        }
        PositionalScheme::new(preperiod, cycle)
    }

    pub fn format(&self, alphabet: &Alphabet) -> String {
        let list = |orders: &[AlphabetOrder]| {
            orders.iter().map(|o| alphabet.format_word(o.ranking())).collect::<Vec<_>>().join(",")
        };
        if self.preperiod.is_empty() {
            list(&self.cycle)
        } else {
            format!("{}|{}", list(&self.preperiod), list(&self.cycle))
        }
    }
}

impl OmegaOrder for PositionalScheme {
    fn alphabet_size(&self) -> usize {
        self.cycle[0].size()
    }

    fn compare(&self, x: &EventuallyPeriodicWord, y: &EventuallyPeriodicWord) -> Ordering {
        self.resolve(first_mismatch(x, y), |i| (x.letter(i), y.letter(i))).ordering
    }

    fn omega_compare(&self, u: &[Letter], v: &[Letter]) -> Ordering {
        let (nu, nv) = (u.len(), v.len());
        self.resolve(periodic_first_mismatch(u, v), |i| (u[i % nu], v[i % nv])).ordering
    }
}

/// Knobs for [`validate_star`].
#[derive(Clone, Debug)]
pub struct StarConfig {
    /// Largest length of the finite words `u`, `v` enumerated exhaustively.
    pub n_max: usize,
    /// Random tail pairs per `(u, v)` pair, on top of the deterministic ones.
    pub tail_samples: usize,
    /// Random triples used for the total-order axioms.
    pub triple_samples: usize,
    pub seed: u64,
}

impl Default for StarConfig {
    fn default() -> Self {
        StarConfig { n_max: 3, tail_samples: 16, triple_samples: 2000, seed: 0 }
    }
}

/// First failure found by [`validate_star`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StarViolation {
    /// `u^ω ≺ v^ω` but `u·x ⪰ v·y`.
    Lexicographic {
        u: FiniteWord,
        v: FiniteWord,
        x: EventuallyPeriodicWord,
        y: EventuallyPeriodicWord,
    },
    /// `compare(x, y)` is not the reverse of `compare(y, x)`.
    Antisymmetry { x: EventuallyPeriodicWord, y: EventuallyPeriodicWord },
    /// `Equal` disagrees with identity of the canonical forms.
    Equality { x: EventuallyPeriodicWord, y: EventuallyPeriodicWord },
    /// `x ⪯ y ⪯ z` but `z ≺ x`.
    Transitivity { x: EventuallyPeriodicWord, y: EventuallyPeriodicWord, z: EventuallyPeriodicWord },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarReport {
    pub ordered_pairs: usize,
    pub tail_checks: usize,
    pub triples: usize,
    pub violation: Option<StarViolation>,
}

impl StarReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

pub(crate) fn random_ev_word<R: Rng>(
    rng: &mut R,
    k: usize,
    max_pre: usize,
    max_period: usize,
) -> EventuallyPeriodicWord {
    let pre_len = rng.gen_range(0..=max_pre);
    let per_len = rng.gen_range(1..=max_period.max(1));
    let pre: Vec<Letter> = (0..pre_len).map(|_| rng.gen_range(0..k) as Letter).collect();
    let per: Vec<Letter> = (0..per_len).map(|_| rng.gen_range(0..k) as Letter).collect();
    normalize(&pre, &per).expect("period is nonempty")
}

/// All words of length `n` over `0..k`, in lexicographic index order.
pub(crate) fn all_words(k: usize, n: usize) -> impl Iterator<Item = FiniteWord> {
    let total = k.checked_pow(n as u32).expect("word enumeration overflow");
    (0..total).map(move |mut idx| {
        let mut v = vec![0; n];
        for slot in v.iter_mut().rev() {
            *slot = (idx % k) as Letter;
            idx /= k;
        }
        FiniteWord::new(v)
    })
}

/// Empirically checks the lexicographic-like condition and the total-order
/// axioms for `order`.
///
/// Every pair `u ≠ v` of equal length up to `n_max` is enumerated. When
/// `u^ω ≺ v^ω`, `u·x ≺ v·y` is checked for the crossed tails `x = v^ω`,
/// `y = u^ω`, for `x = u^ω`, `y = v^ω`, and for `tail_samples` random pairs.
/// Returns at the first violation.
pub fn validate_star<O: OmegaOrder + ?Sized>(order: &O, config: &StarConfig) -> Result<StarReport> {
    if config.n_max == 0 {
        return Err(Error::invalid("n_max must be at least 1"));
    }
    let k = order.alphabet_size();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut report = StarReport { ordered_pairs: 0, tail_checks: 0, triples: 0, violation: None };

    for n in 1..=config.n_max {
        let words: Vec<FiniteWord> = all_words(k, n).collect();
        for u in &words {
            for v in &words {
                if u == v || order.omega_compare(u, v) != Ordering::Less {
                    continue;
                }
                report.ordered_pairs += 1;
                let uw = EventuallyPeriodicWord::omega_power(u)?;
                let vw = EventuallyPeriodicWord::omega_power(v)?;
                let mut tails = vec![(vw.clone(), uw.clone()), (uw, vw)];
                tails.extend((0..config.tail_samples).map(|_| {
                    (random_ev_word(&mut rng, k, 4, 4), random_ev_word(&mut rng, k, 4, 4))
                }));
                for (x, y) in tails {
                    report.tail_checks += 1;
                    let ux = x.prepend(u);
                    let vy = y.prepend(v);
                    if order.compare(&ux, &vy) != Ordering::Less {
                        report.violation =
                            Some(StarViolation::Lexicographic { u: u.clone(), v: v.clone(), x, y });
                        return Ok(report);
                    }
                }
            }
        }
    }

    for _ in 0..config.triple_samples {
        let x = random_ev_word(&mut rng, k, 3, 3);
        let y = random_ev_word(&mut rng, k, 3, 3);
        let z = random_ev_word(&mut rng, k, 3, 3);
        report.triples += 1;
        if let Some(v) = check_axioms(order, &x, &y, &z) {
            report.violation = Some(v);
            return Ok(report);
        }
    }
    Ok(report)
}

/// Total-order axioms on one sampled triple.
pub(crate) fn check_axioms<O: OmegaOrder + ?Sized>(
    order: &O,
    x: &EventuallyPeriodicWord,
    y: &EventuallyPeriodicWord,
    z: &EventuallyPeriodicWord,
) -> Option<StarViolation> {
    let pairs = [(x, y), (y, z), (x, z)];
    for (a, b) in pairs {
        let ab = order.compare(a, b);
        if ab != order.compare(b, a).reverse() {
            return Some(StarViolation::Antisymmetry { x: a.clone(), y: b.clone() });
        }
        if (ab == Ordering::Equal) != (a == b) {
            return Some(StarViolation::Equality { x: a.clone(), y: b.clone() });
        }
    }
    let t = [x, y, z];
    for (i, j, l) in [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)] {
        let (a, b, c) = (t[i], t[j], t[l]);
        if order.compare(a, b).is_le() && order.compare(b, c).is_le() && order.compare(a, c).is_gt() {
            return Some(StarViolation::Transitivity { x: a.clone(), y: b.clone(), z: c.clone() });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alpha() -> Alphabet {
        Alphabet::latin(2).unwrap()
    }

    fn scheme(s: &str) -> PositionalScheme {
        PositionalScheme::parse(&alpha(), s).unwrap()
    }

    fn x(s: &str) -> EventuallyPeriodicWord {
        alpha().parse_infinite(s).unwrap()
    }

    fn w(s: &str) -> FiniteWord {
        alpha().parse_word(s).unwrap()
    }

    #[test]
    fn order_lookup() {
        let s = scheme("ab|ba,ab");
        let a_lt_b = AlphabetOrder::natural(2).unwrap();
        let b_lt_a = AlphabetOrder::reversed(2).unwrap();
        assert_eq!(s.order_at(1).unwrap(), &a_lt_b);
        assert_eq!(s.order_at(2).unwrap(), &b_lt_a);
        assert_eq!(s.order_at(3).unwrap(), &a_lt_b);
        assert_eq!(s.order_at(4).unwrap(), &b_lt_a);
        assert!(s.order_at(0).is_err());
    }

    #[test]
    fn alternating_comparisons() {
        let alt = scheme("ab,ba");
        assert_eq!(alt, PositionalScheme::alternating(2).unwrap());
        assert_eq!(alt.compare_ev_periodic(&x("(abba)"), &x("(b)")).unwrap().ordering, Ordering::Less);
        assert_eq!(
            alt.compare_ev_periodic(&x("ab(ba)"), &x("ab(ba)")).unwrap(),
            Comparison { ordering: Ordering::Equal, first_mismatch: None }
        );
        assert_eq!(
            alt.compare_ev_periodic(&x("ab(ba)"), &x("a(ba)")).unwrap(),
            Comparison { ordering: Ordering::Greater, first_mismatch: Some(3) }
        );
    }

    #[test]
    fn finite_omega_comparisons() {
        let alt = scheme("ab,ba");
        assert_eq!(alt.omega_compare_finite(&w("abba"), &w("b")).unwrap().ordering, Ordering::Less);
        assert_eq!(alt.omega_compare_finite(&w("ab"), &w("abab")).unwrap().ordering, Ordering::Equal);
        assert_eq!(
            alt.omega_compare_finite(&w("ab"), &w("aa")).unwrap(),
            Comparison { ordering: Ordering::Less, first_mismatch: Some(2) }
        );
        assert!(alt.omega_compare_finite(&[], &w("a")).is_err());
        assert_eq!(alt.omega_compare(&w("ab"), &w("aa")), Ordering::Less);
    }

    #[test]
    fn alphabet_mismatch_is_rejected() {
        let alt = scheme("ab,ba");
        let ternary = Alphabet::latin(3).unwrap().parse_infinite("(c)").unwrap();
        assert!(matches!(alt.compare_ev_periodic(&ternary, &x("(a)")), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn scheme_literals() {
        let a = alpha();
        for lit in ["ab", "ab,ba", "ab|ba,ab", "ba|ab"] {
            assert_eq!(PositionalScheme::parse(&a, lit).unwrap().format(&a), lit);
        }
        assert!(matches!(PositionalScheme::parse(&a, "ab|"), Err(Error::Parse { position: 3, .. })));
        assert!(matches!(PositionalScheme::parse(&a, "ab,aa"), Err(Error::Parse { position: 3, .. })));
        assert!(matches!(PositionalScheme::parse(&a, "ab,,ba"), Err(Error::Parse { position: 3, .. })));
        assert!(matches!(PositionalScheme::parse(&a, "a|b|ab"), Err(Error::Parse { .. })));
        assert!(matches!(PositionalScheme::parse(&a, "ac"), Err(Error::Parse { position: 1, .. })));
        assert!(matches!(PositionalScheme::parse(&a, "ab,a"), Err(Error::Parse { position: 3, .. })));
        assert!(scheme("ab").is_constant());
        assert!(!scheme("ab,ba").is_constant());
    }

    #[test]
    fn shipped_schemes_satisfy_star() {
        for lit in ["ab", "ba", "ab,ba", "ab|ba,ab"] {
            let cfg = StarConfig { n_max: 3, tail_samples: 8, triple_samples: 500, seed: 7 };
            let report = validate_star(&scheme(lit), &cfg).unwrap();
            assert!(report.passed(), "{lit}: {:?}", report.violation);
            assert!(report.ordered_pairs > 0);
        }
    }

    /// Compares position 2 before position 1, then the rest in order, all
    /// with the natural letter order. A total order, but not lexicographic like.
    struct SecondFirst;

    impl OmegaOrder for SecondFirst {
        fn alphabet_size(&self) -> usize {
            2
        }

        fn compare(&self, x: &EventuallyPeriodicWord, y: &EventuallyPeriodicWord) -> Ordering {
            if x == y {
                return Ordering::Equal;
            }
            let key = |w: &EventuallyPeriodicWord, i: usize| match i {
                0 => w.letter(1),
                1 => w.letter(0),
                _ => w.letter(i),
            };
            (0..)
                .map(|i| key(x, i).cmp(&key(y, i)))
                .find(|o| o.is_ne())
                .expect("distinct words differ somewhere")
        }
    }

    #[test]
    fn validator_catches_non_lexicographic_comparator() {
        let report = validate_star(&SecondFirst, &StarConfig::default()).unwrap();
        match report.violation {
            Some(StarViolation::Lexicographic { u, v, x, y }) => {
                assert_eq!(u, w("a"));
                assert_eq!(v, w("b"));
                assert_eq!(x.letter(0), 1);
                assert_eq!(y.letter(0), 0);
            }
            other => panic!("expected a lexicographic violation, got {other:?}"),
        }
    }

    #[test]
    fn validator_catches_broken_axioms() {
        struct AlwaysLess;
        impl OmegaOrder for AlwaysLess {
            fn alphabet_size(&self) -> usize {
                2
            }
            fn compare(&self, _: &EventuallyPeriodicWord, _: &EventuallyPeriodicWord) -> Ordering {
                Ordering::Less
            }
        }
        let cfg = StarConfig { n_max: 1, tail_samples: 0, triple_samples: 10, seed: 1 };
        let report = validate_star(&AlwaysLess, &cfg).unwrap();
        assert!(matches!(report.violation, Some(StarViolation::Antisymmetry { .. })));
        assert!(validate_star(&AlwaysLess, &StarConfig { n_max: 0, ..cfg }).is_err());
    }

    #[test]
    fn word_enumeration() {
        let all: Vec<FiniteWord> = all_words(2, 2).collect();
        assert_eq!(all, [w("aa"), w("ab"), w("ba"), w("bb")]);
        assert_eq!(all_words(3, 3).count(), 27);
    }
}
