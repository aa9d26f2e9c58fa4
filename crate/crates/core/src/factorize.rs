//! Non-increasing ω-Lyndon factorizations of finite words and of eventually
//! periodic infinite words, with certificates and minimal-factor boundary
//! detection on finite prefixes.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::lyndon::{check_letters, is_lyndon_infinite_unchecked, is_lyndon_slice, pick_minimal, MinimalFactor};
use crate::orders::OmegaOrder;
use crate::words::{normalize, EventuallyPeriodicWord, FiniteWord, Letter};

/// Default number of whole periods searched per period rotation.
pub const DEFAULT_CAP: usize = 64;

/// The unique ω-Lyndon factorization of an infinite word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OmegaLyndonFactorization {
    /// `x = l₁⋯l_{k-1}·tail` with an infinite ω-Lyndon tail.
    Finite { head: Vec<FiniteWord>, tail: EventuallyPeriodicWord },
    /// `x = l₁⋯l_k·ρ·ρ·ρ⋯`. The head never ends with `ρ` itself.
    Infinite { head: Vec<FiniteWord>, repeating: FiniteWord },
}

impl OmegaLyndonFactorization {
    pub fn head(&self) -> &[FiniteWord] {
        match self {
            OmegaLyndonFactorization::Finite { head, .. } | OmegaLyndonFactorization::Infinite { head, .. } => {
                head
            }
        }
    }

    pub fn is_finite_shape(&self) -> bool {
        matches!(self, OmegaLyndonFactorization::Finite { .. })
    }

    /// The infinite word this factorization spells out.
    pub fn reconstruct(&self) -> Result<EventuallyPeriodicWord> {
        let head = FiniteWord::join(self.head());
        match self {
            OmegaLyndonFactorization::Finite { tail, .. } => Ok(tail.prepend(&head)),
            OmegaLyndonFactorization::Infinite { repeating, .. } => normalize(&head, repeating),
        }
    }
}

fn factorize_unchecked<O: OmegaOrder + ?Sized>(w: &[Letter], order: &O) -> Vec<FiniteWord> {
    let mut factors = Vec::new();
    let mut end = w.len();
    while end > 0 {
        let rest = &w[..end];
        // A single letter is always ω-Lyndon, so the search terminates.
        let start = (0..end).find(|&i| is_lyndon_slice(order, &rest[i..])).expect("letters are ω-Lyndon");
        factors.push(FiniteWord::from(&rest[start..]));
        end = start;
    }
    factors.reverse();
    factors
}

/// The unique factorization `w = l₁⋯l_k` into ω-Lyndon words with
/// `l₁^ω ⪰ ⋯ ⪰ l_k^ω`.
///
/// The last factor of any such factorization is the longest ω-Lyndon suffix:
/// every longer suffix `v·l_k` has `(v·l_k)^ω ⪰ l_k^ω`. Peeling that suffix
/// repeatedly yields the factors from right to left.
pub fn factorize_finite<O: OmegaOrder + ?Sized>(w: &[Letter], order: &O) -> Result<Vec<FiniteWord>> {
    if w.is_empty() {
        return Err(Error::invalid("cannot factorize the empty word"));
    }
    check_letters(order, w)?;
    Ok(factorize_unchecked(w, order))
}

/// Cumulative lengths `|l₁|, |l₁l₂|, …` of a factor list, starting with 0.
pub fn cumulative_boundaries(factors: &[FiniteWord]) -> Vec<usize> {
    std::iter::once(0)
        .chain(factors.iter().scan(0, |acc, f| {
            *acc += f.len();
            Some(*acc)
        }))
        .collect()
}

/// Factorization of `x` (canonical) into one of the two shapes.
///
/// Finite shape: the tail is a suffix of `x` starting inside the preperiod
/// (deeper suffixes are periodic and never ω-Lyndon), preceded by the finite
/// factorization of what comes before it. Infinite shape: the repeating factor
/// is the ω-Lyndon rotation `ρ` of the period; for cut points `J` aligned with
/// `ρ^ω` the finite factorization of `x[..J]` is tried, up to `cap` whole
/// periods past the first aligned cut. All candidates are collected and must
/// agree.
pub fn factorize_ev_periodic<O: OmegaOrder + ?Sized>(
    x: &EventuallyPeriodicWord,
    order: &O,
    cap: usize,
) -> Result<OmegaLyndonFactorization> {
    if cap == 0 {
        return Err(Error::invalid("cap must be at least 1"));
    }
    check_letters(order, x.preperiod())?;
    check_letters(order, x.period())?;

    let p = x.preperiod().len();
    let q = x.period().len();
    let mut candidates = BTreeSet::new();

    for j in 0..p {
        let tail = x.suffix(j);
        if !is_lyndon_infinite_unchecked(&tail, order) {
            continue;
        }
        let head = if j == 0 { Vec::new() } else { factorize_unchecked(&x.prefix(j), order) };
        let fits = head.last().is_none_or(|l| order.omega_compare_with(l, &tail) == Ordering::Greater);
        if fits {
            candidates.insert(OmegaLyndonFactorization::Finite { head, tail });
        }
    }

    let mut rotations_tried = Vec::new();
    for t in 0..q {
        let rho = x.period().rotation(t);
        if !is_lyndon_slice(order, &rho) {
            continue;
        }
        rotations_tried.push(t);
        for m in 0..=cap {
            let cut = p + t + m * q;
            let mut head = if cut == 0 { Vec::new() } else { factorize_unchecked(&x.prefix(cut), order) };
            let fits = head.last().is_none_or(|l| order.omega_compare(l, &rho) != Ordering::Less);
            if fits {
                while head.last() == Some(&rho) {
                    head.pop();
                }
                candidates.insert(OmegaLyndonFactorization::Infinite { head, repeating: rho });
                break;
            }
        }
    }

    let mut candidates = candidates.into_iter();
    match (candidates.next(), candidates.next()) {
        (Some(f), None) => Ok(f),
        (None, _) => Err(Error::CapExceeded {
            cap,
            searched: format!(
                "tails at offsets 0..{p}, ω-Lyndon rotations {rotations_tried:?} with up to {cap} extra periods"
            ),
        }),
        (Some(a), Some(b)) => {
            Err(Error::Inconsistent(format!("two distinct factorizations found: {a:?} and {b:?}")))
        }
    }
}

/// One verified property of a factorization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateCheck {
    pub name: &'static str,
    pub passed: bool,
    /// Witness for a failure, empty on success.
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FactorizationCertificate {
    pub checks: Vec<CertificateCheck>,
}

impl FactorizationCertificate {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CertificateCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn push(&mut self, name: &'static str, failure: Option<String>) {
        self.checks.push(CertificateCheck {
            name,
            passed: failure.is_none(),
            detail: failure.unwrap_or_default(),
        });
    }
}

/// Checks every structural property of `f` as a factorization of `x`.
pub fn validate_factorization<O: OmegaOrder + ?Sized>(
    x: &EventuallyPeriodicWord,
    f: &OmegaLyndonFactorization,
    order: &O,
) -> FactorizationCertificate {
    use OmegaLyndonFactorization::*;

    let mut cert = FactorizationCertificate::default();
    let k = order.alphabet_size();
    let in_alphabet = |w: &[Letter]| w.iter().all(|&l| usize::from(l) < k);
    let letters_ok = in_alphabet(x.preperiod())
        && in_alphabet(x.period())
        && f.head().iter().all(|h| in_alphabet(h))
        && match f {
            Finite { tail, .. } => in_alphabet(tail.preperiod()) && in_alphabet(tail.period()),
            Infinite { repeating, .. } => in_alphabet(repeating),
        };
    cert.push("letters within alphabet", (!letters_ok).then(|| "letter outside the order's alphabet".into()));
    if !letters_ok {
        return cert;
    }

    let head = f.head();
    let bad = head.iter().position(|h| !is_lyndon_slice(order, h));
    cert.push("head factors are ω-Lyndon", bad.map(|i| format!("factor {i} ({:?}) is not ω-Lyndon", head[i])));

    let bad = head.windows(2).position(|p| order.omega_compare(&p[0], &p[1]) == Ordering::Less);
    cert.push(
        "head is non-increasing",
        bad.map(|i| format!("factor {i} is ω-smaller than factor {}", i + 1)),
    );

    match f {
        Finite { tail, .. } => {
            cert.push(
                "tail is infinite ω-Lyndon",
                (!is_lyndon_infinite_unchecked(tail, order)).then(|| format!("{tail:?} has a suffix ⪯ itself")),
            );
            let last_ok = head.last().is_none_or(|l| order.omega_compare_with(l, tail) == Ordering::Greater);
            cert.push(
                "last head factor is strictly above tail",
                (!last_ok).then(|| "last head factor's ω-power is ⪯ the tail".into()),
            );
        }
        Infinite { repeating, .. } => {
            cert.push(
                "repeating factor is ω-Lyndon",
                (!is_lyndon_slice(order, repeating)).then(|| format!("{repeating:?} is not ω-Lyndon")),
            );
            let last_ok = head.last().is_none_or(|l| order.omega_compare(l, repeating) != Ordering::Less);
            cert.push(
                "last head factor is not below repeating factor",
                (!last_ok).then(|| "last head factor's ω-power is ≺ the repeating factor's".into()),
            );
            let canonical = head.last() != Some(repeating);
            cert.push(
                "trailing repeats absorbed",
                (!canonical).then(|| "head ends with a copy of the repeating factor".into()),
            );
        }
    }

    let rebuilt = f.reconstruct();
    let detail = match &rebuilt {
        Err(e) => Some(e.to_string()),
        Ok(r) if order.compare(r, x) != Ordering::Equal => Some(format!("factors spell {r:?}")),
        Ok(_) => None,
    };
    cert.push("reconstructs the word", detail);
    cert
}

/// Boundary reported by [`detect_boundaries`] for one factor length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Boundary {
    pub n: usize,
    /// The ω-minimal length-`n` factor of the prefix.
    pub factor: FiniteWord,
    /// Length of the prefix preceding its first occurrence.
    pub boundary: usize,
}

/// For each `n ≤ n_max`, the ω-minimal length-`n` factor of `prefix` and the
/// length of the word preceding its first occurrence.
///
/// For an aperiodic infinite word with an infinite factorization whose factor
/// lengths are unbounded, the first occurrence of a minimal factor always
/// starts at a factor boundary. Computed from a finite prefix, the minimal
/// factor is provisional: a later, smaller factor may exist.
pub fn detect_boundaries<O: OmegaOrder + ?Sized>(
    prefix: &[Letter],
    order: &O,
    n_max: usize,
) -> Result<Vec<Boundary>> {
    if prefix.is_empty() {
        return Err(Error::invalid("prefix must be nonempty"));
    }
    if n_max == 0 || n_max > prefix.len() / 2 {
        return Err(Error::invalid(format!(
            "n_max must be in 1..={} for a prefix of length {}",
            prefix.len() / 2,
            prefix.len()
        )));
    }
    check_letters(order, prefix)?;
    Ok((1..=n_max)
        .map(|n| {
            let mut seen = BTreeSet::new();
            let occurrences = prefix
                .windows(n)
                .enumerate()
                .filter(|(_, f)| seen.insert(*f))
                .map(|(i, f)| (i, FiniteWord::from(f)));
            let MinimalFactor { factor, first_occurrence } =
                pick_minimal(order, occurrences).expect("prefix has factors of every length up to n_max");
            Boundary { n, factor, boundary: first_occurrence }
        })
        .collect())
}
