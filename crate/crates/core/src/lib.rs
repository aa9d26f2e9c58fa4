//! Generalized lexicographic orders on infinite words and the unique
//! non-increasing ω-Lyndon factorization of finite words and eventually
//! periodic infinite words.
//!
//! ```
//! use omega_lyndon::{factorize_finite, Alphabet, PositionalScheme};
//!
//! let alphabet = Alphabet::latin(2).unwrap();
//! let alternating = PositionalScheme::parse(&alphabet, "ab,ba").unwrap();
//! let word = alphabet.parse_word("ababab").unwrap();
//! let factors = factorize_finite(&word, &alternating).unwrap();
//! assert_eq!(factors.len(), 3);
//! ```

pub mod error;
pub mod factorize;
pub mod lyndon;
pub mod oracle;
pub mod orders;
pub mod words;

pub use error::{Error, Result};
pub use factorize::{
    cumulative_boundaries, detect_boundaries, factorize_ev_periodic, factorize_finite, validate_factorization,
    Boundary, CertificateCheck, FactorizationCertificate, OmegaLyndonFactorization, DEFAULT_CAP,
};
pub use lyndon::{
    classify_l1, extend_to_infinite, is_omega_lyndon, is_omega_lyndon_finite, is_omega_lyndon_finite_splits,
    is_omega_lyndon_infinite, minimal_factor, omega_lyndon_prefixes, LyndonVerdict, MinimalFactor, PrefixClass,
    Witness,
};
pub use orders::{
    validate_star, AlphabetOrder, Comparison, OmegaOrder, PositionalScheme, StarConfig, StarReport,
    StarViolation,
};
pub use words::{
    distinct_suffixes, factors_of_length, longest_border, normalize, primitive_root, Alphabet,
    EventuallyPeriodicWord, FiniteWord, Letter, Suffix, WordLiteral,
};
