use std::cmp::Ordering;

use omega_lyndon::oracle::{self, InstanceGenerator, ENUMERATION_LIMIT};
use omega_lyndon::{
    classify_l1, detect_boundaries, extend_to_infinite, factorize_ev_periodic, factorize_finite, is_omega_lyndon_finite,
    is_omega_lyndon_infinite, minimal_factor, omega_lyndon_prefixes, validate_factorization, validate_star, Alphabet,
    AlphabetOrder, Comparison, Error, EventuallyPeriodicWord, FactorizationCertificate, FiniteWord, Letter,
    OmegaLyndonFactorization, PositionalScheme, PrefixClass, StarConfig, StarViolation, Witness, WordLiteral,
};
use serde_json::{json, Map, Value};

use crate::output::{Failure, Outcome, Report, Status};
use crate::{Cli, Command};

type Outcomes = Result<Outcome, Failure>;

/// Words per length checked by `oracle-check` before it switches from
/// exhaustive enumeration to sampling.
const EXHAUSTIVE_LIMIT: usize = 4096;

struct Context {
    alphabet: Alphabet,
    order: PositionalScheme,
}

impl Context {
    fn word(&self, w: &[Letter]) -> String {
        self.alphabet.format_word(w)
    }

    fn words(&self, ws: &[FiniteWord]) -> Vec<String> {
        ws.iter().map(|w| self.word(w)).collect()
    }

    fn infinite(&self, x: &EventuallyPeriodicWord) -> String {
        self.alphabet.format_infinite(x)
    }

    fn parse_finite(&self, label: &str, s: &str) -> Result<FiniteWord, Failure> {
        self.alphabet.parse_word(s).map_err(|e| literal_failure(label, s, e))
    }

    fn parse_infinite(&self, label: &str, s: &str) -> Result<EventuallyPeriodicWord, Failure> {
        self.alphabet.parse_infinite(s).map_err(|e| literal_failure(label, s, e))
    }
}

pub fn run(cli: &Cli) -> Report {
    let literals = literals(&cli.command);
    let mut inputs = Map::new();
    for (label, literal) in &literals {
        inputs.insert((*label).into(), json!(literal));
    }
    for (label, value) in params(&cli.command) {
        inputs.insert(label.into(), value);
    }
    let outcome = match resolve(cli, &literals) {
        Ok(ctx) => {
            inputs.insert("alphabet".into(), json!(ctx.alphabet.symbols().iter().collect::<String>()));
            inputs.insert("order".into(), json!(ctx.order.format(&ctx.alphabet)));
            execute(&cli.command, cli, &ctx)
        }
        Err(f) => Err(f),
    };
    Report { command: cli.command.name(), inputs, outcome }
}

fn literals(command: &Command) -> Vec<(&'static str, &str)> {
    match command {
        Command::Compare { x, y } => vec![("x", x), ("y", y)],
        Command::OmegaCompare { u, v } => vec![("u", u), ("v", v)],
        Command::IsLyndon { word }
        | Command::Factorize { word }
        | Command::FactorizeInf { word, .. }
        | Command::Classify { word, .. }
        | Command::Extend { word }
        | Command::MinimalFactor { word, .. } => vec![("word", word)],
        Command::Boundaries { prefix, .. } => vec![("prefix", prefix)],
        Command::ValidateOrder { .. } | Command::OracleCheck { .. } => vec![],
    }
}

fn params(command: &Command) -> Vec<(&'static str, Value)> {
    match *command {
        Command::FactorizeInf { cap, .. } | Command::Classify { cap, .. } => vec![("cap", json!(cap))],
        Command::MinimalFactor { n, .. } => vec![("n", json!(n))],
        Command::Boundaries { n_max, .. } => vec![("n_max", json!(n_max))],
        Command::ValidateOrder { n_max, samples, seed } => {
            vec![("n_max", json!(n_max)), ("samples", json!(samples)), ("seed", json!(seed))]
        }
        Command::OracleCheck { max_len, seed } => vec![("max_len", json!(max_len)), ("seed", json!(seed))],
        _ => vec![],
    }
}

fn resolve(cli: &Cli, literals: &[(&str, &str)]) -> Result<Context, Failure> {
    let alphabet = match &cli.alphabet {
        Some(symbols) => Alphabet::new(symbols.chars()).map_err(|e| failure(e, None))?,
        None => {
            let mut sources: Vec<&str> = literals.iter().map(|(_, l)| *l).collect();
            sources.extend(cli.order.as_deref());
            if sources.is_empty() {
                Alphabet::latin(2).map_err(|e| failure(e, None))?
            } else {
                Alphabet::infer(sources).map_err(|e| failure(e, None))?
            }
        }
    };
    let order = match &cli.order {
        Some(s) => PositionalScheme::parse(&alphabet, s).map_err(|e| literal_failure("order", s, e))?,
        None => PositionalScheme::constant(AlphabetOrder::natural(alphabet.size()).map_err(|e| failure(e, None))?),
    };
    Ok(Context { alphabet, order })
}

fn failure(e: Error, location: Option<(String, usize)>) -> Failure {
    let (status, kind) = match &e {
        Error::Parse { .. } => (Status::InputError, "parse"),
        Error::InvalidInput(_) => (Status::InputError, "invalid-input"),
        Error::NotLyndon(_) => (Status::InputError, "not-lyndon"),
        Error::TooLarge { .. } => (Status::InputError, "too-large"),
        Error::CapTooSmall { .. } => (Status::CapExceeded, "cap-too-small"),
        Error::CapExceeded { .. } => (Status::CapExceeded, "cap-exceeded"),
        Error::ConstructionFailed(_) => (Status::Negative, "construction-failed"),
        Error::Inconsistent(_) => (Status::Negative, "inconsistent"),
    };
    Failure { status, kind, message: e.to_string(), location }
}

fn literal_failure(label: &str, literal: &str, e: Error) -> Failure {
    let location = match e {
        Error::Parse { position, .. } => Some((literal.to_string(), position)),
        _ => None,
    };
    let mut f = failure(e, location);
    f.message = format!("{label} `{literal}`: {}", f.message);
    f
}

fn execute(command: &Command, cli: &Cli, ctx: &Context) -> Outcomes {
    match command {
        Command::Compare { x, y } => {
            let (x, y) = (ctx.parse_infinite("x", x)?, ctx.parse_infinite("y", y)?);
            let c = ctx.order.compare_ev_periodic(&x, &y).map_err(|e| failure(e, None))?;
            Ok(comparison(c, ctx.infinite(&x), ctx.infinite(&y)))
        }
        Command::OmegaCompare { u, v } => {
            let (u, v) = (ctx.parse_finite("u", u)?, ctx.parse_finite("v", v)?);
            let c = ctx.order.omega_compare_finite(&u, &v).map_err(|e| failure(e, None))?;
            Ok(comparison(c, format!("({})", ctx.word(&u)), format!("({})", ctx.word(&v))))
        }
        Command::IsLyndon { word } => is_lyndon(ctx, word),
        Command::Factorize { word } => {
            let w = ctx.parse_finite("word", word)?;
            let factors = ctx.words(&factorize_finite(&w, &ctx.order).map_err(|e| failure(e, None))?);
            Ok(Outcome::new(json!({ "factors": factors })).row("", factors.join("·")))
        }
        Command::FactorizeInf { word, cap } => factorize_inf(ctx, word, *cap),
        Command::Classify { word, cap } => classify(ctx, word, *cap),
        Command::Extend { word } => {
            let w = ctx.parse_finite("word", word)?;
            let x = extend_to_infinite(&w, &ctx.order).map_err(|e| match e {
                Error::NotLyndon(_) => failure(
                    Error::NotLyndon(format!("{} under {}", ctx.word(&w), ctx.order.format(&ctx.alphabet))),
                    None,
                ),
                other => failure(other, None),
            })?;
            let ext = ctx.infinite(&x);
            Ok(Outcome::new(json!({ "extension": ext })).row("", ext))
        }
        Command::MinimalFactor { word, n } => {
            let x = ctx.parse_infinite("word", word)?;
            let m = minimal_factor(&x, *n, &ctx.order).map_err(|e| failure(e, None))?;
            let factor = ctx.word(&m.factor);
            Ok(Outcome::new(json!({ "factor": factor, "first_occurrence": m.first_occurrence }))
                .row("factor", factor)
                .row("first occurrence", m.first_occurrence.to_string()))
        }
        Command::Boundaries { prefix, n_max } => boundaries(ctx, prefix, *n_max),
        Command::ValidateOrder { n_max, samples, seed } => validate_order(ctx, *n_max, *samples, *seed),
        Command::OracleCheck { max_len, seed } => oracle_check(ctx, cli.order.is_some(), *max_len, *seed),
    }
}

fn ordering_name(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "Less",
        Ordering::Equal => "Equal",
        Ordering::Greater => "Greater",
    }
}

fn comparison(c: Comparison, x: String, y: String) -> Outcome {
    let symbol = match c.ordering {
        Ordering::Less => "<",
        Ordering::Equal => "=",
        Ordering::Greater => ">",
    };
    Outcome::new(json!({
        "x": x,
        "y": y,
        "ordering": ordering_name(c.ordering),
        "first_mismatch": c.first_mismatch,
    }))
    .row("relation", format!("{x} {symbol} {y}"))
    .row("ordering", ordering_name(c.ordering))
    .row("first mismatch", c.first_mismatch.map_or("none".into(), |p| p.to_string()))
}

fn witness(ctx: &Context, w: &Witness) -> (Value, String) {
    match w {
        Witness::FiniteSuffix { offset, suffix } => {
            let s = ctx.word(suffix);
            (json!({ "kind": "suffix", "offset": offset, "suffix": s }), format!("suffix {s} at offset {offset}"))
        }
        Witness::Split { prefix, suffix } => {
            let (p, s) = (ctx.word(prefix), ctx.word(suffix));
            (json!({ "kind": "split", "prefix": p, "suffix": s }), format!("split {p}|{s}"))
        }
        Witness::InfiniteSuffix { offset, suffix } => {
            let s = ctx.infinite(suffix);
            (json!({ "kind": "suffix", "offset": offset, "suffix": s }), format!("suffix {s} at offset {offset}"))
        }
    }
}

fn is_lyndon(ctx: &Context, literal: &str) -> Outcomes {
    let parsed = ctx.alphabet.parse_literal(literal).map_err(|e| literal_failure("word", literal, e))?;
    let (word, verdict) = match &parsed {
        WordLiteral::Finite(w) => (ctx.word(w), is_omega_lyndon_finite(w, &ctx.order)),
        WordLiteral::Infinite(x) => (ctx.infinite(x), is_omega_lyndon_infinite(x, &ctx.order)),
    };
    let verdict = verdict.map_err(|e| failure(e, None))?;
    let (witness_json, witness_text) = match &verdict.witness {
        Some(w) => witness(ctx, w),
        None => (Value::Null, "none".into()),
    };
    Ok(Outcome::new(json!({ "word": word, "is_lyndon": verdict.is_lyndon, "witness": witness_json }))
        .row("word", word)
        .row("omega-lyndon", verdict.is_lyndon.to_string())
        .row("witness", witness_text)
        .negative_unless(verdict.is_lyndon))
}

fn certificate_json(cert: &FactorizationCertificate) -> Value {
    let checks: Vec<Value> = cert
        .checks
        .iter()
        .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
        .collect();
    json!({ "all_passed": cert.all_passed(), "checks": checks })
}

fn factorize_inf(ctx: &Context, literal: &str, cap: usize) -> Outcomes {
    let x = ctx.parse_infinite("word", literal)?;
    let f = factorize_ev_periodic(&x, &ctx.order, cap).map_err(|e| failure(e, None))?;
    let cert = validate_factorization(&x, &f, &ctx.order);
    let head = ctx.words(f.head());
    let head_text = if head.is_empty() { "ε".to_string() } else { head.join("·") };
    let mut outcome = match &f {
        OmegaLyndonFactorization::Finite { tail, .. } => {
            let tail = ctx.infinite(tail);
            Outcome::new(json!({ "word": ctx.infinite(&x), "shape": "FiniteShape", "head": head, "tail": tail }))
                .row("word", ctx.infinite(&x))
                .row("shape", "FiniteShape")
                .row("head", head_text)
                .row("tail", tail)
        }
        OmegaLyndonFactorization::Infinite { repeating, .. } => {
            let repeating = ctx.word(repeating);
            Outcome::new(json!({ "word": ctx.infinite(&x), "shape": "InfiniteShape", "head": head, "repeating": repeating }))
                .row("word", ctx.infinite(&x))
                .row("shape", "InfiniteShape")
                .row("head", head_text)
                .row("repeating", repeating)
        }
    };
    let passed = cert.checks.iter().filter(|c| c.passed).count();
    outcome = outcome.row("certificate", format!("{passed}/{} checks passed", cert.checks.len()));
    for c in cert.failures() {
        outcome = outcome.row("failed", format!("{}: {}", c.name, c.detail));
    }
    outcome.certificate = Some(certificate_json(&cert));
    Ok(outcome.negative_unless(cert.all_passed()))
}

fn classify(ctx: &Context, literal: &str, cap: usize) -> Outcomes {
    let x = ctx.parse_infinite("word", literal)?;
    let class = classify_l1(&x, &ctx.order, cap).map_err(|e| failure(e, None))?;
    let prefixes = omega_lyndon_prefixes(&x, cap, &ctx.order).map_err(|e| failure(e, None))?;
    let lengths = prefixes.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
    let (mut result, rows) = match class {
        PrefixClass::IsLyndon => (json!({ "class": "IsLyndon" }), vec![("class", "IsLyndon".to_string())]),
        PrefixClass::PeriodicPowerOfLyndon(root) => {
            let root = ctx.word(&root);
            (
                json!({ "class": "PeriodicPowerOfLyndon", "root": root }),
                vec![("class", "PeriodicPowerOfLyndon".to_string()), ("root", root)],
            )
        }
        PrefixClass::FinitelyManyLyndonPrefixes { bound, witness_offset, witness_length, verified_up_to } => (
            json!({
                "class": "FinitelyManyLyndonPrefixes",
                "bound": bound,
                "witness_offset": witness_offset,
                "witness_length": witness_length,
                "verified_up_to": verified_up_to,
            }),
            vec![
                ("class", "FinitelyManyLyndonPrefixes".to_string()),
                ("bound", bound.to_string()),
                ("witness", format!("suffix at offset {witness_offset}, length {witness_length}")),
                ("verified up to", verified_up_to.to_string()),
            ],
        ),
    };
    result["lyndon_prefix_lengths"] = json!(prefixes);
    let mut outcome = Outcome::new(result).row("word", ctx.infinite(&x));
    for (k, v) in rows {
        outcome = outcome.row(k, v);
    }
    Ok(outcome.row("lyndon prefixes", if lengths.is_empty() { "none".into() } else { lengths }))
}

fn boundaries(ctx: &Context, literal: &str, n_max: usize) -> Outcomes {
    let prefix = ctx.parse_finite("prefix", literal)?;
    let found = detect_boundaries(&prefix, &ctx.order, n_max).map_err(|e| failure(e, None))?;
    let width = found.iter().map(|b| b.factor.len()).max().unwrap_or(0).max("factor".len());
    let mut outcome = Outcome::new(json!({
        "boundaries": found
            .iter()
            .map(|b| json!({ "n": b.n, "factor": ctx.word(&b.factor), "boundary": b.boundary }))
            .collect::<Vec<_>>(),
    }))
    .row("n", format!("{:<width$}  boundary", "factor"));
    for b in &found {
        outcome = outcome.row(&b.n.to_string(), format!("{:<width$}  {}", ctx.word(&b.factor), b.boundary));
    }
    Ok(outcome)
}

fn violation(ctx: &Context, v: &StarViolation) -> (Value, String) {
    let f = |x: &EventuallyPeriodicWord| ctx.infinite(x);
    match v {
        StarViolation::Lexicographic { u, v, x, y } => (
            json!({ "kind": "lexicographic", "u": ctx.word(u), "v": ctx.word(v), "x": f(x), "y": f(y) }),
            format!("({})^ω < ({})^ω but {}·{} ⪰ {}·{}", ctx.word(u), ctx.word(v), ctx.word(u), f(x), ctx.word(v), f(y)),
        ),
        StarViolation::Antisymmetry { x, y } => (
            json!({ "kind": "antisymmetry", "x": f(x), "y": f(y) }),
            format!("compare({0}, {1}) is not the reverse of compare({1}, {0})", f(x), f(y)),
        ),
        StarViolation::Equality { x, y } => (
            json!({ "kind": "equality", "x": f(x), "y": f(y) }),
            format!("{} and {} compare Equal but differ", f(x), f(y)),
        ),
        StarViolation::Transitivity { x, y, z } => (
            json!({ "kind": "transitivity", "x": f(x), "y": f(y), "z": f(z) }),
            format!("{} ⪯ {} ⪯ {} but {} < {}", f(x), f(y), f(z), f(z), f(x)),
        ),
    }
}

fn validate_order(ctx: &Context, n_max: usize, samples: usize, seed: u64) -> Outcomes {
    let config = StarConfig { n_max, tail_samples: samples, seed, ..StarConfig::default() };
    let report = validate_star(&ctx.order, &config).map_err(|e| failure(e, None))?;
    let (v_json, v_text) = match &report.violation {
        Some(v) => violation(ctx, v),
        None => (Value::Null, "none".into()),
    };
    Ok(Outcome::new(json!({
        "passed": report.passed(),
        "ordered_pairs": report.ordered_pairs,
        "tail_checks": report.tail_checks,
        "triples": report.triples,
        "violation": v_json,
    }))
    .row("passed", report.passed().to_string())
    .row("ordered pairs", report.ordered_pairs.to_string())
    .row("tail checks", report.tail_checks.to_string())
    .row("triples", report.triples.to_string())
    .row("violation", v_text)
    .negative_unless(report.passed()))
}

/// All words of length `n` over `k` letters, or a seeded sample when there
/// are too many.
fn words_of_length(k: usize, n: usize, seed: u64) -> Result<Vec<FiniteWord>, Failure> {
    let total = k.checked_pow(n as u32).filter(|&t| t <= EXHAUSTIVE_LIMIT);
    if let Some(total) = total {
        return Ok((0..total)
            .map(|mut idx| {
                let mut w = vec![0; n];
                for slot in w.iter_mut().rev() {
                    *slot = (idx % k) as Letter;
                    idx /= k;
                }
                FiniteWord::new(w)
            })
            .collect());
    }
    let generator = InstanceGenerator { alphabet_size: k, min_len: n, max_len: n, ..InstanceGenerator::new(seed ^ n as u64) };
    let mut stream = generator.stream().map_err(|e| failure(e, None))?;
    Ok((0..EXHAUSTIVE_LIMIT).map(|_| stream.finite_word()).collect())
}

fn oracle_check(ctx: &Context, explicit_order: bool, max_len: usize, seed: u64) -> Outcomes {
    if max_len == 0 || max_len > ENUMERATION_LIMIT {
        return Err(failure(Error::InvalidInput(format!("max-len must be in 1..={ENUMERATION_LIMIT}")), None));
    }
    let k = ctx.alphabet.size();
    let schemes = if explicit_order {
        vec![ctx.order.clone()]
    } else {
        let mut s = vec![ctx.order.clone()];
        if k >= 2 {
            s.push(PositionalScheme::alternating(k).map_err(|e| failure(e, None))?);
            let generator = InstanceGenerator { alphabet_size: k, ..InstanceGenerator::new(seed) };
            s.push(generator.stream().map_err(|e| failure(e, None))?.random_scheme());
        }
        s
    };
    let (mut words, mut enumeration_checks, mut duval_checks) = (0, 0, 0);
    let mut counterexample = None;
    'outer: for n in 1..=max_len {
        let batch = words_of_length(k, n, seed)?;
        words += batch.len();
        for scheme in &schemes {
            let base = if scheme.is_constant() { Some(scheme.order_at(1).map_err(|e| failure(e, None))?) } else { None };
            for w in &batch {
                let ours = factorize_finite(w, scheme).map_err(|e| failure(e, None))?;
                let all = oracle::enumerate_factorizations(w, scheme).map_err(|e| failure(e, None))?;
                enumeration_checks += 1;
                if all.len() != 1 || all[0] != ours {
                    counterexample = Some((scheme, w.clone(), ours, all, "enumeration"));
                    break 'outer;
                }
                if let Some(base) = base {
                    let duval = oracle::duval_factorize(w, base).map_err(|e| failure(e, None))?;
                    duval_checks += 1;
                    if duval != ours {
                        counterexample = Some((scheme, w.clone(), ours, vec![duval], "duval"));
                        break 'outer;
                    }
                }
            }
        }
    }
    let scheme_names: Vec<String> = schemes.iter().map(|s| s.format(&ctx.alphabet)).collect();
    let (ce_json, ce_text) = match &counterexample {
        None => (Value::Null, "none".to_string()),
        Some((scheme, w, ours, oracle, which)) => {
            let oracle: Vec<Vec<String>> = oracle.iter().map(|f| ctx.words(f)).collect();
            let text = format!(
                "{which} disagrees on {} under {}: ours {}, oracle {:?}",
                ctx.word(w),
                scheme.format(&ctx.alphabet),
                ctx.words(ours).join("·"),
                oracle
            );
            (
                json!({
                    "oracle": which,
                    "scheme": scheme.format(&ctx.alphabet),
                    "word": ctx.word(w),
                    "ours": ctx.words(ours),
                    "oracle_factorizations": oracle,
                }),
                text,
            )
        }
    };
    let passed = counterexample.is_none();
    Ok(Outcome::new(json!({
        "passed": passed,
        "schemes": scheme_names,
        "words": words,
        "enumeration_checks": enumeration_checks,
        "duval_checks": duval_checks,
        "counterexample": ce_json,
    }))
    .row("passed", passed.to_string())
    .row("schemes", scheme_names.join(" "))
    .row("words", words.to_string())
    .row("enumeration checks", enumeration_checks.to_string())
    .row("duval checks", duval_checks.to_string())
    .row("counterexample", ce_text)
    .negative_unless(passed))
}
