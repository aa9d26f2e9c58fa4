//! ω-Lyndon predicates for finite and eventually periodic words, prefix
//! diagnostics, extension of finite ω-Lyndon words to infinite ones, and
//! minimal factors.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::orders::OmegaOrder;
use crate::words::{
    factor_occurrences, first_mismatch, longest_border, normalize, primitive_root, EventuallyPeriodicWord,
    FiniteWord, Letter,
};

/// Why a word fails to be ω-Lyndon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// A proper suffix `v` (dropping `offset` letters) with `w^ω ⪰ v^ω`.
    FiniteSuffix { offset: usize, suffix: FiniteWord },
    /// A split `w = u·v` with `u^ω ⪰ v^ω`.
    Split { prefix: FiniteWord, suffix: FiniteWord },
    /// A proper suffix `y` of the infinite word `x` with `y ⪯ x`.
    InfiniteSuffix { offset: usize, suffix: EventuallyPeriodicWord },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LyndonVerdict {
    pub is_lyndon: bool,
    /// Present exactly when `is_lyndon` is false.
    pub witness: Option<Witness>,
}

impl LyndonVerdict {
    fn pass() -> Self {
        LyndonVerdict { is_lyndon: true, witness: None }
    }

    fn fail(witness: Witness) -> Self {
        LyndonVerdict { is_lyndon: false, witness: Some(witness) }
    }
}

pub(crate) fn check_letters<O: OmegaOrder + ?Sized>(order: &O, w: &[Letter]) -> Result<()> {
    match w.iter().find(|&&l| usize::from(l) >= order.alphabet_size()) {
        Some(l) => Err(Error::invalid(format!(
            "letter {l} is outside the order's alphabet of size {}",
            order.alphabet_size()
        ))),
        None => Ok(()),
    }
}

fn check_infinite<O: OmegaOrder + ?Sized>(order: &O, x: &EventuallyPeriodicWord) -> Result<()> {
    check_letters(order, x.preperiod())?;
    check_letters(order, x.period())
}

/// First offset `j ≥ 1` with `w^ω ⪰ (w[j..])^ω`, if any.
pub(crate) fn first_violating_suffix<O: OmegaOrder + ?Sized>(order: &O, w: &[Letter]) -> Option<usize> {
    (1..w.len()).find(|&j| order.omega_compare(w, &w[j..]) != Ordering::Less)
}

pub(crate) fn is_lyndon_slice<O: OmegaOrder + ?Sized>(order: &O, w: &[Letter]) -> bool {
    !w.is_empty() && first_violating_suffix(order, w).is_none()
}

/// `w` is ω-Lyndon when `w^ω ≺ v^ω` for every proper nonempty suffix `v`.
/// The witness is the longest violating suffix.
pub fn is_omega_lyndon_finite<O: OmegaOrder + ?Sized>(w: &[Letter], order: &O) -> Result<LyndonVerdict> {
    if w.is_empty() {
        return Err(Error::invalid("the empty word is not a candidate"));
    }
    check_letters(order, w)?;
    Ok(match first_violating_suffix(order, w) {
        None => LyndonVerdict::pass(),
        Some(j) => LyndonVerdict::fail(Witness::FiniteSuffix { offset: j, suffix: w[j..].into() }),
    })
}

/// Split characterization: every `w = u·v` with `u`, `v` nonempty has `u^ω ≺ v^ω`.
pub fn is_omega_lyndon_finite_splits<O: OmegaOrder + ?Sized>(
    w: &[Letter],
    order: &O,
) -> Result<LyndonVerdict> {
    if w.is_empty() {
        return Err(Error::invalid("the empty word is not a candidate"));
    }
    check_letters(order, w)?;
    let bad = (1..w.len()).find(|&j| order.omega_compare(&w[..j], &w[j..]) != Ordering::Less);
    Ok(match bad {
        None => LyndonVerdict::pass(),
        Some(j) => LyndonVerdict::fail(Witness::Split { prefix: w[..j].into(), suffix: w[j..].into() }),
    })
}

/// First suffix class of `x` that is `⪯ x`, if any.
fn first_non_greater_suffix<O: OmegaOrder + ?Sized>(
    order: &O,
    x: &EventuallyPeriodicWord,
) -> Option<(usize, EventuallyPeriodicWord)> {
    x.distinct_suffixes()
        .into_iter()
        .find(|s| s.equals_whole || order.compare(x, &s.word) != Ordering::Less)
        .map(|s| (s.offset, s.word))
}

/// `x` is ω-Lyndon when it is strictly smaller than each proper suffix.
/// Purely periodic words never are; their witness is the suffix equal to `x`.
pub fn is_omega_lyndon_infinite<O: OmegaOrder + ?Sized>(
    x: &EventuallyPeriodicWord,
    order: &O,
) -> Result<LyndonVerdict> {
    check_infinite(order, x)?;
    Ok(match first_non_greater_suffix(order, x) {
        None => LyndonVerdict::pass(),
        Some((offset, suffix)) => LyndonVerdict::fail(Witness::InfiniteSuffix { offset, suffix }),
    })
}

pub(crate) fn is_lyndon_infinite_unchecked<O: OmegaOrder + ?Sized>(
    x: &EventuallyPeriodicWord,
    order: &O,
) -> bool {
    first_non_greater_suffix(order, x).is_none()
}

/// Lengths `ℓ ≤ cap` whose length-`ℓ` prefix of `x` is finite ω-Lyndon.
pub fn omega_lyndon_prefixes<O: OmegaOrder + ?Sized>(
    x: &EventuallyPeriodicWord,
    cap: usize,
    order: &O,
) -> Result<Vec<usize>> {
    if cap == 0 {
        return Err(Error::invalid("prefix length cap must be positive"));
    }
    check_infinite(order, x)?;
    let prefix = x.prefix(cap);
    Ok((1..=cap).filter(|&l| is_lyndon_slice(order, &prefix[..l])).collect())
}

/// Verdict of [`classify_l1`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrefixClass {
    /// `x` itself is ω-Lyndon.
    IsLyndon,
    /// `x = l^ω` with `l` finite ω-Lyndon.
    PeriodicPowerOfLyndon(FiniteWord),
    /// Only finitely many prefixes of `x` are ω-Lyndon: none longer than `bound`.
    FinitelyManyLyndonPrefixes {
        bound: usize,
        /// Offset of the suffix `y ≺ x` the bound was derived from.
        witness_offset: usize,
        /// Length of the prefix of `y` that certifies the bound.
        witness_length: usize,
        /// Lengths in `(bound, verified_up_to]` were checked to be non-ω-Lyndon.
        verified_up_to: usize,
    },
}

/// Places `x` in one of the three branches of the prefix characterization of
/// infinite ω-Lyndon words.
///
/// In the last branch the bound comes from a proper suffix `y ≺ x` at offset
/// `j`: if `ℓ` is the first position where `x` and `y` differ, the length-`ℓ`
/// prefix `v` of `y` satisfies `v^ω ≺ u^ω` for the length-`ℓ` prefix `u` of
/// `x`, so no prefix of `x` containing that occurrence of `v` is ω-Lyndon.
/// Hence every ω-Lyndon prefix is shorter than `j + ℓ`. The smallest such
/// bound over all suffix classes is reported, then lengths in
/// `(bound, min(cap, bound + 2|q| + 8)]` are checked directly.
pub fn classify_l1<O: OmegaOrder + ?Sized>(
    x: &EventuallyPeriodicWord,
    order: &O,
    cap: usize,
) -> Result<PrefixClass> {
    check_infinite(order, x)?;
    if is_lyndon_infinite_unchecked(x, order) {
        return Ok(PrefixClass::IsLyndon);
    }
    if x.is_purely_periodic() && is_lyndon_slice(order, x.period()) {
        return Ok(PrefixClass::PeriodicPowerOfLyndon(x.period().clone()));
    }
    let (bound, witness_offset, witness_length) = x
        .distinct_suffixes()
        .into_iter()
        .filter(|s| !s.equals_whole && order.compare(&s.word, x) == Ordering::Less)
        .map(|s| {
            let len = first_mismatch(x, &s.word).expect("distinct words differ") + 1;
            (s.offset + len - 1, s.offset, len)
        })
        .min()
        .ok_or_else(|| Error::Inconsistent("non-ω-Lyndon word without a smaller suffix".into()))?;
    if cap < bound {
        return Err(Error::CapTooSmall { cap, bound });
    }
    let verified_up_to = cap.min(bound + 2 * x.period().len() + 8);
    let prefix = x.prefix(verified_up_to);
    if let Some(l) = (bound + 1..=verified_up_to).find(|&l| is_lyndon_slice(order, &prefix[..l])) {
        return Err(Error::Inconsistent(format!(
            "prefix of length {l} is ω-Lyndon beyond the certified bound {bound}"
        )));
    }
    Ok(PrefixClass::FinitelyManyLyndonPrefixes { bound, witness_offset, witness_length, verified_up_to })
}

/// Extends a finite ω-Lyndon word `w` (`|w| ≥ 2`) to an infinite ω-Lyndon
/// word with `w` as a prefix: `w·a^ω` for the last letter `a` when `w` is
/// unbordered, `w·u^ω` for the longest border `u` otherwise. The result is
/// verified before it is returned.
pub fn extend_to_infinite<O: OmegaOrder + ?Sized>(w: &[Letter], order: &O) -> Result<EventuallyPeriodicWord> {
    if w.len() < 2 {
        return Err(Error::invalid("extension needs a word of length at least 2"));
    }
    if !is_omega_lyndon_finite(w, order)?.is_lyndon {
        return Err(Error::NotLyndon(format!("{w:?}")));
    }
    let border = longest_border(w)?;
    let tail: &[Letter] = if border.is_empty() { &w[w.len() - 1..] } else { &border };
    let ext = normalize(w, tail)?;
    if ext.prefix(w.len()).as_slice() != w {
        return Err(Error::ConstructionFailed(format!("{w:?} is not a prefix of the extension")));
    }
    if !is_lyndon_infinite_unchecked(&ext, order) {
        return Err(Error::ConstructionFailed(format!(
            "extension of {w:?} by {tail:?}^ω is not ω-Lyndon"
        )));
    }
    Ok(ext)
}

/// An ω-minimal length-`n` factor of `x` and its first occurrence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalFactor {
    pub factor: FiniteWord,
    /// 0-based offset of the first occurrence.
    pub first_occurrence: usize,
}

/// Picks `u^ω ⪯ v^ω` minimal among `(offset, factor)` candidates listed in
/// order of first occurrence; ties keep the earliest.
pub(crate) fn pick_minimal<O: OmegaOrder + ?Sized>(
    order: &O,
    candidates: impl IntoIterator<Item = (usize, FiniteWord)>,
) -> Option<MinimalFactor> {
    candidates.into_iter().fold(None, |best: Option<MinimalFactor>, (offset, f)| match best {
        Some(b) if order.omega_compare(&f, &b.factor) != Ordering::Less => Some(b),
        _ => Some(MinimalFactor { factor: f, first_occurrence: offset }),
    })
}

/// A length-`n` factor `u` of `x` with `u^ω ⪯ v^ω` for every length-`n`
/// factor `v`. Ties between ω-equal factors go to the first occurrence.
pub fn minimal_factor<O: OmegaOrder + ?Sized>(
    x: &EventuallyPeriodicWord,
    n: usize,
    order: &O,
) -> Result<MinimalFactor> {
    if n == 0 {
        return Err(Error::invalid("factor length must be positive"));
    }
    check_infinite(order, x)?;
    pick_minimal(order, factor_occurrences(x, n)).ok_or_else(|| Error::Inconsistent("no factors".into()))
}

/// `true` when `w` is ω-Lyndon; convenience for callers without a verdict.
pub fn is_omega_lyndon<O: OmegaOrder + ?Sized>(w: &[Letter], order: &O) -> bool {
    is_lyndon_slice(order, w)
}

/// The primitive root of `x`'s period, when `x` is purely periodic.
pub fn periodic_root(x: &EventuallyPeriodicWord) -> Option<FiniteWord> {
    x.is_purely_periodic().then(|| primitive_root(x.period()).expect("nonempty period").0)
}
