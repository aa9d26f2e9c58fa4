//! Finite words, eventually periodic infinite words and the classical word
//! combinatorics they need (borders, primitive roots, rotations, suffixes).
//!
//! Letters are alphabet indices. Characters only appear when parsing or
//! printing literals through an [`Alphabet`].

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

/// Index of a symbol in its [`Alphabet`].
pub type Letter = u8;

const RESERVED: [char; 4] = ['(', ')', ',', '|'];

/// An ordered, non-empty set of distinct printable symbols.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<char>,
}

impl Alphabet {
    pub fn new(symbols: impl IntoIterator<Item = char>) -> Result<Self> {
        let symbols: Vec<char> = symbols.into_iter().collect();
        if symbols.is_empty() {
            return Err(Error::invalid("alphabet must contain at least one symbol"));
        }
        if symbols.len() > usize::from(Letter::MAX) + 1 {
            return Err(Error::invalid(format!(
                "alphabet has {} symbols, at most 256 are supported",
                symbols.len()
            )));
        }
        for (i, &c) in symbols.iter().enumerate() {
            if c.is_whitespace() || c.is_control() || RESERVED.contains(&c) {
                return Err(Error::invalid(format!("symbol {c:?} cannot be used in an alphabet")));
            }
            if symbols[..i].contains(&c) {
                return Err(Error::invalid(format!("symbol {c:?} appears twice")));
            }
        }
        Ok(Alphabet { symbols })
    }

    /// The first `k` lowercase latin letters: `a`, `b`, ...
    pub fn latin(k: usize) -> Result<Self> {
        if k == 0 || k > 26 {
            return Err(Error::invalid(format!("latin alphabet size must be in 1..=26, got {k}")));
        }
        Alphabet::new((b'a'..b'a' + k as u8).map(char::from))
    }

    /// Union of all symbols used by the given literals, sorted by code point.
    /// Grammar punctuation is ignored.
    pub fn infer<'a>(literals: impl IntoIterator<Item = &'a str>) -> Result<Self> {
        let set: BTreeSet<char> = literals
            .into_iter()
            .flat_map(str::chars)
            .filter(|c| !RESERVED.contains(c) && !c.is_whitespace())
            .collect();
        Alphabet::new(set)
    }

    pub fn size(&self) -> usize {
        self.symbols.len()
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn index_of(&self, c: char) -> Option<Letter> {
        self.symbols.iter().position(|&s| s == c).map(|i| i as Letter)
    }

    pub fn symbol(&self, letter: Letter) -> char {
        self.symbols[usize::from(letter)]
    }

    /// Checks that every letter of `word` is an index of this alphabet.
    pub fn check(&self, word: &[Letter]) -> Result<()> {
        match word.iter().find(|&&l| usize::from(l) >= self.size()) {
            Some(l) => Err(Error::invalid(format!(
                "letter index {l} is outside an alphabet of size {}",
                self.size()
            ))),
            None => Ok(()),
        }
    }

    fn parse_letters(&self, s: &str, offset: usize) -> Result<FiniteWord> {
        s.chars()
            .enumerate()
            .map(|(i, c)| {
                self.index_of(c).ok_or_else(|| Error::Parse {
                    position: offset + i,
                    message: format!("symbol {c:?} is not in the alphabet {}", self),
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(FiniteWord)
    }

    /// Parses a finite word literal such as `abba`.
    pub fn parse_word(&self, s: &str) -> Result<FiniteWord> {
        self.parse_letters(s, 0)
    }

    /// Parses `p(q)` into the canonical form of p·q^ω.
    pub fn parse_infinite(&self, s: &str) -> Result<EventuallyPeriodicWord> {
        let chars: Vec<char> = s.chars().collect();
        let open = chars.iter().position(|&c| c == '(').ok_or(Error::Parse {
            position: chars.len(),
            message: "expected '(' starting the period".into(),
        })?;
        if chars.last() != Some(&')') {
            return Err(Error::Parse {
                position: chars.len(),
                message: "expected ')' closing the period".into(),
            });
        }
        let close = chars.len() - 1;
        if close == open + 1 {
            return Err(Error::Parse { position: close, message: "period must be nonempty".into() });
        }
        let pre: String = chars[..open].iter().collect();
        let period: String = chars[open + 1..close].iter().collect();
        let preperiod = self.parse_letters(&pre, 0)?;
        let period = self.parse_letters(&period, open + 1)?;
        normalize(&preperiod, &period)
    }

    /// Parses either literal form; anything containing `(` is infinite.
    pub fn parse_literal(&self, s: &str) -> Result<WordLiteral> {
        if s.contains('(') {
            self.parse_infinite(s).map(WordLiteral::Infinite)
        } else {
            self.parse_word(s).map(WordLiteral::Finite)
        }
    }

    pub fn format_word(&self, word: &[Letter]) -> String {
        word.iter().map(|&l| self.symbol(l)).collect()
    }

    pub fn format_infinite(&self, x: &EventuallyPeriodicWord) -> String {
        format!("{}({})", self.format_word(x.preperiod()), self.format_word(x.period()))
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.symbols.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

/// Result of parsing a word literal of either kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordLiteral {
    Finite(FiniteWord),
    Infinite(EventuallyPeriodicWord),
}

/// A finite sequence of letters, possibly empty.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteWord(Vec<Letter>);

impl FiniteWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        FiniteWord(letters)
    }

    pub fn empty() -> Self {
        FiniteWord(Vec::new())
    }

    pub fn as_slice(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Letter> {
        self.0
    }

    /// `u·v`.
    pub fn concat(&self, other: &[Letter]) -> FiniteWord {
        let mut v = self.0.clone();
        v.extend_from_slice(other);
        FiniteWord(v)
    }

    /// Concatenation of a sequence of words.
    pub fn join<'a>(parts: impl IntoIterator<Item = &'a FiniteWord>) -> FiniteWord {
        FiniteWord(parts.into_iter().flat_map(|w| w.0.iter().copied()).collect())
    }

    /// Cyclic shift to the left by `t` letters: `w[t..] · w[..t]`.
    pub fn rotation(&self, t: usize) -> FiniteWord {
        rotate(&self.0, t)
    }
}

impl Deref for FiniteWord {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl From<Vec<Letter>> for FiniteWord {
    fn from(v: Vec<Letter>) -> Self {
        FiniteWord(v)
    }
}

impl From<&[Letter]> for FiniteWord {
    fn from(v: &[Letter]) -> Self {
        FiniteWord(v.to_vec())
    }
}

impl<const N: usize> From<[Letter; N]> for FiniteWord {
    fn from(v: [Letter; N]) -> Self {
        FiniteWord(v.to_vec())
    }
}

fn rotate(w: &[Letter], t: usize) -> FiniteWord {
    if w.is_empty() {
        return FiniteWord::empty();
    }
    let t = t % w.len();
    let mut v = Vec::with_capacity(w.len());
    v.extend_from_slice(&w[t..]);
    v.extend_from_slice(&w[..t]);
    FiniteWord(v)
}

/// The infinite word `preperiod · period^ω`, always held in canonical form:
/// the period is primitive and the preperiod cannot be shortened. Two values
/// denote the same infinite word iff they are field-wise equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EventuallyPeriodicWord {
    preperiod: FiniteWord,
    period: FiniteWord,
}

impl EventuallyPeriodicWord {
    /// `u^ω` for a nonempty finite `u`.
    pub fn omega_power(u: &[Letter]) -> Result<Self> {
        normalize(&[], u)
    }

    pub fn preperiod(&self) -> &FiniteWord {
        &self.preperiod
    }

    pub fn period(&self) -> &FiniteWord {
        &self.period
    }

    pub fn is_purely_periodic(&self) -> bool {
        self.preperiod.is_empty()
    }

    /// Letter at 0-based position `i`.
    pub fn letter(&self, i: usize) -> Letter {
        let p = self.preperiod.len();
        if i < p {
            self.preperiod[i]
        } else {
            self.period[(i - p) % self.period.len()]
        }
    }

    /// The first `n` letters.
    pub fn prefix(&self, n: usize) -> FiniteWord {
        FiniteWord((0..n).map(|i| self.letter(i)).collect())
    }

    /// The suffix obtained by dropping the first `j` letters.
    pub fn suffix(&self, j: usize) -> EventuallyPeriodicWord {
        let p = self.preperiod.len();
        if j < p {
            // Still canonical: the preperiod's last letter is unchanged.
            EventuallyPeriodicWord {
                preperiod: FiniteWord(self.preperiod[j..].to_vec()),
                period: self.period.clone(),
            }
        } else {
            EventuallyPeriodicWord {
                preperiod: FiniteWord::empty(),
                period: self.period.rotation(j - p),
            }
        }
    }

    /// `u · self`.
    pub fn prepend(&self, u: &[Letter]) -> EventuallyPeriodicWord {
        let mut pre = u.to_vec();
        pre.extend_from_slice(&self.preperiod);
        normalize(&pre, &self.period).expect("period is nonempty")
    }

    pub fn max_letter(&self) -> Letter {
        self.preperiod.iter().chain(self.period.iter()).copied().max().unwrap_or(0)
    }

    /// See [`distinct_suffixes`].
    pub fn distinct_suffixes(&self) -> Vec<Suffix> {
        distinct_suffixes(self)
    }
}

/// Builds the canonical representative of `preperiod · period^ω`.
pub fn normalize(preperiod: &[Letter], period: &[Letter]) -> Result<EventuallyPeriodicWord> {
    if period.is_empty() {
        return Err(Error::invalid("period must be nonempty"));
    }
    let (root, _) = primitive_root(period)?;
    let mut period = root.into_vec();
    let mut pre = preperiod.to_vec();
    while let (Some(&a), Some(&b)) = (pre.last(), period.last()) {
        if a != b {
            break;
        }
        pre.pop();
        period.rotate_right(1);
    }
    Ok(EventuallyPeriodicWord { preperiod: FiniteWord(pre), period: FiniteWord(period) })
}

/// Knuth–Morris–Pratt failure function: `fail[i]` is the length of the
/// longest proper border of `w[..=i]`.
pub(crate) fn failure_function(w: &[Letter]) -> Vec<usize> {
    let mut fail = vec![0; w.len()];
    let mut k = 0;
    for i in 1..w.len() {
        while k > 0 && w[i] != w[k] {
            k = fail[k - 1];
        }
        if w[i] == w[k] {
            k += 1;
        }
        fail[i] = k;
    }
    fail
}

/// Returns `(root, exponent)` with `w = root^exponent` and `root` primitive.
pub fn primitive_root(w: &[Letter]) -> Result<(FiniteWord, usize)> {
    if w.is_empty() {
        return Err(Error::invalid("the empty word has no primitive root"));
    }
    let n = w.len();
    let period = n - failure_function(w)[n - 1];
    if n.is_multiple_of(period) {
        Ok((FiniteWord(w[..period].to_vec()), n / period))
    } else {
        Ok((FiniteWord(w.to_vec()), 1))
    }
}

pub fn is_primitive(w: &[Letter]) -> bool {
    matches!(primitive_root(w), Ok((_, 1)))
}

/// Longest proper word that is both a prefix and a suffix of `w`.
pub fn longest_border(w: &[Letter]) -> Result<FiniteWord> {
    if w.is_empty() {
        return Err(Error::invalid("the empty word has no borders"));
    }
    let b = failure_function(w)[w.len() - 1];
    Ok(FiniteWord(w[..b].to_vec()))
}

/// A proper suffix of an eventually periodic word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Suffix {
    /// Number of letters dropped from the front, at least 1.
    pub offset: usize,
    pub word: EventuallyPeriodicWord,
    /// Set when the suffix coincides with the whole word (purely periodic case).
    pub equals_whole: bool,
}

/// All distinct proper suffixes of `x`, one per class, at their smallest offset.
///
/// Offsets `1..|p|` give the preperiod suffixes; the following `|q|` offsets
/// give the rotations of the period. For purely periodic `x` the last entry is
/// `x` itself, flagged with `equals_whole`.
pub fn distinct_suffixes(x: &EventuallyPeriodicWord) -> Vec<Suffix> {
    let p = x.preperiod.len();
    let q = x.period.len();
    let last = if p == 0 { q } else { p + q - 1 };
    (1..=last)
        .map(|j| {
            let word = x.suffix(j);
            let equals_whole = word == *x;
            Suffix { offset: j, word, equals_whole }
        })
        .collect()
}

/// Distinct length-`n` factors of `x`, paired with their first occurrence,
/// in order of first occurrence.
pub fn factor_occurrences(x: &EventuallyPeriodicWord, n: usize) -> Vec<(usize, FiniteWord)> {
    let p = x.preperiod.len();
    let q = x.period.len();
    let window = x.prefix(p + q * (n.div_ceil(q) + 2));
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for start in 0..p + q {
        let f = FiniteWord(window[start..start + n].to_vec());
        if seen.insert(f.clone()) {
            out.push((start, f));
        }
    }
    out
}

/// Exactly the length-`n` factors of `x`.
pub fn factors_of_length(x: &EventuallyPeriodicWord, n: usize) -> Result<BTreeSet<FiniteWord>> {
    if n == 0 {
        return Err(Error::invalid("factor length must be positive"));
    }
    Ok(factor_occurrences(x, n).into_iter().map(|(_, f)| f).collect())
}

/// 0-based position of the first letter where `x` and `y` differ, or `None`
/// when they are the same infinite word.
pub fn first_mismatch(x: &EventuallyPeriodicWord, y: &EventuallyPeriodicWord) -> Option<usize> {
    // Past the longer preperiod both words are purely periodic; agreeing on
    // |q1| + |q2| letters there forces equality (Fine and Wilf).
    let bound = x.preperiod.len().max(y.preperiod.len()) + x.period.len() + y.period.len();
    let pos = (0..bound).find(|&i| x.letter(i) != y.letter(i));
    if pos.is_none() {
        assert_eq!(x, y, "words agreeing past the periodicity bound must be identical");
    }
    pos
}

/// 0-based position of the first mismatch between `u^ω` and `v^ω`.
pub fn periodic_first_mismatch(u: &[Letter], v: &[Letter]) -> Option<usize> {
    debug_assert!(!u.is_empty() && !v.is_empty());
    let (nu, nv) = (u.len(), v.len());
    (0..nu + nv).find(|&i| u[i % nu] != v[i % nv])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::latin(2).unwrap()
    }

    fn w(s: &str) -> FiniteWord {
        Alphabet::latin(3).unwrap().parse_word(s).unwrap()
    }

    fn x(s: &str) -> EventuallyPeriodicWord {
        ab().parse_infinite(s).unwrap()
    }

    fn show(x: &EventuallyPeriodicWord) -> String {
        ab().format_infinite(x)
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(show(&normalize(&w("abb"), &w("ab")).unwrap()), "ab(ba)");
        assert_eq!(show(&normalize(&[], &w("abab")).unwrap()), "(ab)");
        assert_eq!(show(&normalize(&w("a"), &w("a")).unwrap()), "(a)");
        assert_eq!(normalize(&w("a"), &[]), Err(Error::invalid("period must be nonempty")));
    }

    #[test]
    fn normalize_preserves_letters() {
        // abb·(ab)^ω expanded by hand.
        let expanded = w("abbabababababababababa");
        let n = normalize(&w("abb"), &w("ab")).unwrap();
        assert_eq!(n.prefix(expanded.len()), expanded);
    }

    #[test]
    fn primitive_roots() {
        assert_eq!(primitive_root(&w("abab")).unwrap(), (w("ab"), 2));
        assert_eq!(primitive_root(&w("abba")).unwrap(), (w("abba"), 1));
        assert_eq!(primitive_root(&w("aaa")).unwrap(), (w("a"), 3));
        assert!(primitive_root(&[]).is_err());
    }

    #[test]
    fn borders() {
        assert_eq!(longest_border(&w("abba")).unwrap(), w("a"));
        assert_eq!(longest_border(&w("abab")).unwrap(), w("ab"));
        assert_eq!(longest_border(&w("ab")).unwrap(), w(""));
        assert_eq!(longest_border(&w("aaaa")).unwrap(), w("aaa"));
        assert!(longest_border(&[]).is_err());
    }

    #[test]
    fn suffix_classes() {
        let s: Vec<String> = x("ab(ba)").distinct_suffixes().iter().map(|s| show(&s.word)).collect();
        assert_eq!(s, ["b(ba)", "(ba)", "(ab)"]);

        let s = x("(a)").distinct_suffixes();
        assert_eq!(s.len(), 1);
        assert!(s[0].equals_whole);
        assert_eq!(s[0].word, x("(a)"));

        let s = x("a(b)").distinct_suffixes();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].word, x("(b)"));
        assert!(!s[0].equals_whole);
    }

    #[test]
    fn factors() {
        let set = |s: &[&str]| s.iter().map(|t| w(t)).collect::<BTreeSet<_>>();
        assert_eq!(factors_of_length(&x("(ab)"), 2).unwrap(), set(&["ab", "ba"]));
        assert_eq!(factors_of_length(&x("ab(ba)"), 2).unwrap(), set(&["ab", "bb", "ba"]));
        assert_eq!(factors_of_length(&x("(a)"), 3).unwrap(), set(&["aaa"]));
        assert!(factors_of_length(&x("(a)"), 0).is_err());
    }

    #[test]
    fn literal_errors_carry_positions() {
        let a = ab();
        assert_eq!(
            a.parse_word("abc"),
            Err(Error::Parse { position: 2, message: "symbol 'c' is not in the alphabet {a,b}".into() })
        );
        assert!(matches!(a.parse_infinite("ab()"), Err(Error::Parse { position: 3, .. })));
        assert!(matches!(a.parse_infinite("ab(a"), Err(Error::Parse { position: 4, .. })));
        assert!(matches!(a.parse_infinite("a(c)"), Err(Error::Parse { position: 2, .. })));
    }

    #[test]
    fn alphabet_rules() {
        assert!(Alphabet::new([]).is_err());
        assert!(Alphabet::new(['a', 'a']).is_err());
        assert!(Alphabet::new(['a', '(']).is_err());
        let a = Alphabet::infer(["ab(ba)", "cb,bc"]).unwrap();
        assert_eq!(a.symbols(), ['a', 'b', 'c']);
    }

    #[test]
    fn mismatch_positions() {
        assert_eq!(first_mismatch(&x("ab(ba)"), &x("a(ba)")), Some(2));
        assert_eq!(first_mismatch(&x("ab(ba)"), &x("ab(ba)")), None);
        assert_eq!(periodic_first_mismatch(&w("ab"), &w("abab")), None);
        assert_eq!(periodic_first_mismatch(&w("ab"), &w("aa")), Some(1));
    }
}
