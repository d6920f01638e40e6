//! Command-line surface: rank polynomials, chain decompositions, conjecture
//! sweeps, exports, and a built-in verification battery.
//!
//! Machine output (JSON or DOT) goes to stdout; human summaries and
//! diagnostics go to stderr.  Exit codes: 0 all pass, 1 a failure was
//! witnessed, 2 usage or parse error, 3 enumeration limit exceeded.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use fence_lattice::chains::{
    cd_d_divided, cd_three_segment, cd_two_segment, lex_cd, validate_cd, ChainDecomposition,
    SubsetOrder,
};
use fence_lattice::composition::Composition;
use fence_lattice::conjecture::{
    check_lex, composition_family, construct_by_lifting, construct_centered, sweep,
    CenteredStrategy, CheckKind, LexScope, SweepSpec, Verdict,
};
use fence_lattice::error::Error;
use fence_lattice::export::{cd_json, lattice_dot, poset_dot, rank_csv, rank_json};
use fence_lattice::lattice::{build_lattice, matching_long_segment, rank_plateau, MatchDirection};
use fence_lattice::polynomial::{rank_poly_explicit, rank_poly_recursive, RankPolynomial};
use fence_lattice::poset::{build_d_divided, build_fence, path_ideal_count, LabeledPoset};
use fence_lattice::DEFAULT_ENUMERATION_LIMIT;

#[derive(Parser)]
#[command(
    name = "fences",
    about = "Fence posets, ideal lattices, rank polynomials, chain decompositions",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the rank polynomial of a fence's ideal lattice.
    RankPoly {
        /// Composition, e.g. "2,3,1"
        alpha: String,
        #[arg(long, value_enum, default_value_t = Method::All)]
        method: Method,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Construct and validate a chain decomposition.
    Cd {
        #[command(subcommand)]
        target: CdTarget,
    },
    /// Run conjecture checks over a composition family.
    Sweep {
        #[arg(long, default_value_t = 3)]
        max_segments: usize,
        #[arg(long, default_value_t = 4)]
        max_part: u32,
        #[arg(long)]
        max_sum: Option<u32>,
        /// Checks to run (repeatable): unimodal, shape, centered, lex
        #[arg(long = "check", value_parser = parse_check, required = true)]
        checks: Vec<CheckKind>,
        #[arg(long, value_enum, default_value_t = StrategyArg::Construct)]
        centered_strategy: StrategyArg,
        #[arg(long, value_enum, default_value_t = ScopeArg::Natural)]
        lex_scope: ScopeArg,
        #[arg(long, value_enum, default_value_t = OrderArg::Sorted)]
        order: OrderArg,
        /// Resume after this composition in enumeration order.
        #[arg(long)]
        cursor: Option<String>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Export Hasse diagrams or rank data.
    Export {
        #[command(subcommand)]
        target: ExportTarget,
    },
    /// Run the built-in verification battery.
    Verify {
        /// Wider families (slower).
        #[arg(long)]
        deep: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Brute,
    Recursive,
    Explicit,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Construct,
    Search,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScopeArg {
    Natural,
    Extensions,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    /// Lexicographic on sorted element lists.
    Sorted,
    /// Membership words with 1 before 0.
    Word,
}

impl OrderArg {
    fn subset_order(self) -> SubsetOrder {
        match self {
            OrderArg::Sorted => SubsetOrder::SortedList,
            OrderArg::Word => SubsetOrder::MembershipWord,
        }
    }
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Construction {
    Auto,
    Two,
    Three,
    Ddivided,
    Lex,
    Lift,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Dot,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum What {
    Poset,
    Lattice,
}

#[derive(Args, Clone, Copy)]
struct LimitArgs {
    /// Enumeration limit on the element count; overriding prints an exact
    /// ideal count before enumerating.
    #[arg(long)]
    limit: Option<usize>,
}

impl LimitArgs {
    fn value(&self) -> usize {
        self.limit.unwrap_or(DEFAULT_ENUMERATION_LIMIT)
    }
}

#[derive(Subcommand)]
enum CdTarget {
    /// A fence given by its composition.
    Fence {
        alpha: String,
        #[arg(long, value_enum, default_value_t = Construction::Auto)]
        construction: Construction,
        #[arg(long, value_enum, default_value_t = OrderArg::Sorted)]
        order: OrderArg,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// A d-divided poset given by n and d.
    Ddivided {
        n: usize,
        d: usize,
        #[arg(long, value_enum, default_value_t = Construction::Ddivided)]
        construction: Construction,
        #[arg(long, value_enum, default_value_t = OrderArg::Sorted)]
        order: OrderArg,
        #[command(flatten)]
        limits: LimitArgs,
    },
}

#[derive(Subcommand)]
enum ExportTarget {
    /// A fence given by its composition.
    Fence {
        alpha: String,
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long, value_enum, default_value_t = What::Poset)]
        what: What,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// A d-divided poset given by n and d.
    Ddivided {
        n: usize,
        d: usize,
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long, value_enum, default_value_t = What::Poset)]
        what: What,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        #[command(flatten)]
        limits: LimitArgs,
    },
}

fn parse_check(s: &str) -> Result<CheckKind, String> {
    s.parse()
        .map_err(|_| format!("unknown check {s:?}; expected unimodal, shape, centered, or lex"))
}

const EXIT_OK: u8 = 0;
const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_LIMIT: u8 = 3;

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::EnumerationLimit { .. }
        | Error::SearchTooLarge { .. }
        | Error::ScopeTooLarge { .. } => EXIT_LIMIT,
        _ => EXIT_USAGE,
    }
}

fn fail(err: &Error) -> u8 {
    eprintln!("error: {err}");
    exit_code_for(err)
}

fn parse_alpha(text: &str) -> Result<Composition, u8> {
    text.parse::<Composition>().map_err(|e| fail(&e))
}

/// Announces the exact ideal count before enumerating with a raised limit.
fn announce_estimate(p: &LabeledPoset, limits: &LimitArgs) {
    if limits.limit.is_some() {
        if let Some(count) = path_ideal_count(p) {
            eprintln!("estimated ideal count: {count}");
        }
    }
}

fn cmd_rank_poly(alpha_text: &str, method: Method, limits: LimitArgs) -> u8 {
    let alpha = match parse_alpha(alpha_text) {
        Ok(a) => a,
        Err(code) => return code,
    };
    // the recursion is linear in the sum but recurses that deep
    if alpha.total() > 10_000 {
        return fail(&Error::EnumerationLimit {
            n: alpha.element_count(),
            limit: 10_000,
        });
    }
    let limit = limits.value();
    let odd = alpha.segment_count() % 2 == 1;
    let fits = alpha.element_count() <= limit;

    let mut methods: Vec<&str> = Vec::new();
    let mut polys: Vec<RankPolynomial> = Vec::new();
    let wanted = |m: Method| method == m || method == Method::All;

    if wanted(Method::Brute) {
        if fits {
            let fence = build_fence(&alpha);
            announce_estimate(&fence, &limits);
            match build_lattice(&fence, limit) {
                Ok(lattice) => {
                    let counts = lattice.rank_sequence();
                    polys.push(RankPolynomial::from_u64_coeffs(&counts));
                    methods.push("brute");
                }
                Err(e) => return fail(&e),
            }
        } else if method == Method::Brute {
            return fail(&Error::EnumerationLimit {
                n: alpha.element_count(),
                limit,
            });
        }
    }
    if wanted(Method::Recursive) {
        polys.push(rank_poly_recursive(&alpha));
        methods.push("recursive");
    }
    if wanted(Method::Explicit) {
        if odd {
            match rank_poly_explicit(&alpha) {
                Ok(p) => {
                    polys.push(p);
                    methods.push("explicit");
                }
                Err(e) => return fail(&e),
            }
        } else if method == Method::Explicit {
            return fail(&Error::EvenSegmentCount {
                s: alpha.segment_count(),
            });
        }
    }

    let agree = polys.windows(2).all(|w| w[0] == w[1]);
    let poly = &polys[0];
    println!(
        "{}",
        json!({
            "alpha": alpha.parts(),
            "coeffs": serde_json::from_str::<serde_json::Value>(&poly.to_string()).unwrap(),
            "shape": poly.shape(),
            "methods": methods,
            "agree": agree,
        })
    );
    if agree {
        eprintln!(
            "r(q; {alpha}) = {poly} by {} method(s), agree: true",
            methods.len()
        );
        EXIT_OK
    } else {
        for (name, p) in methods.iter().zip(&polys) {
            eprintln!("method {name}: {p}");
        }
        eprintln!("MISMATCH between methods");
        EXIT_FAIL
    }
}

fn emit_cd(poset: &LabeledPoset, cd: &ChainDecomposition, limit: usize) -> u8 {
    let lattice = match build_lattice(poset, limit) {
        Ok(l) => l,
        Err(e) => return fail(&e),
    };
    let report = validate_cd(&lattice, cd);
    println!("{}", cd_json(poset, cd));
    eprintln!(
        "classification: {}; chains: {}; partition: {}; saturated: {}; nested: {}",
        report.classification,
        cd.chains.len(),
        report.partition,
        report.saturated,
        report.nested
    );
    if report.is_valid_cd() {
        EXIT_OK
    } else {
        for v in &report.violations {
            eprintln!("violation: {v}");
        }
        EXIT_FAIL
    }
}

fn cmd_cd_fence(
    alpha_text: &str,
    construction: Construction,
    order: OrderArg,
    limits: LimitArgs,
) -> u8 {
    let alpha = match parse_alpha(alpha_text) {
        Ok(a) => a,
        Err(code) => return code,
    };
    let limit = limits.value();
    let parts = alpha.parts();
    let fence = build_fence(&alpha);
    announce_estimate(&fence, &limits);
    let built: Result<ChainDecomposition, Error> = match construction {
        Construction::Two if parts.len() == 2 => cd_two_segment(parts[0], parts[1], limit),
        Construction::Three if parts.len() == 3 => {
            cd_three_segment(parts[0], parts[1], parts[2], limit)
        }
        Construction::Lex => lex_cd(&fence, order.subset_order(), limit),
        Construction::Lift => match construct_by_lifting(&alpha, limit) {
            Ok(Some((cd, route))) => {
                eprintln!("route: {route}");
                Ok(cd)
            }
            Ok(None) => Err(Error::ConstructionFailed {
                reason: format!("no dominant segment to lift along in {alpha}"),
            }),
            Err(e) => Err(e),
        },
        Construction::Auto => match construct_centered(&alpha, limit) {
            Ok(Some((cd, route))) => {
                eprintln!("route: {route}");
                Ok(cd)
            }
            Ok(None) => Err(Error::ConstructionFailed {
                reason: format!("no applicable construction for {alpha}"),
            }),
            Err(e) => Err(e),
        },
        _ => Err(Error::ConstructionFailed {
            reason: "construction does not apply to this target".into(),
        }),
    };
    match built {
        Ok(cd) => emit_cd(&fence, &cd, limit),
        Err(e) => fail(&e),
    }
}

fn cmd_cd_ddivided(
    n: usize,
    d: usize,
    construction: Construction,
    order: OrderArg,
    limits: LimitArgs,
) -> u8 {
    let limit = limits.value();
    let poset = match build_d_divided(n, d) {
        Ok(p) => p,
        Err(e) => return fail(&e),
    };
    announce_estimate(&poset, &limits);
    let built = match construction {
        Construction::Ddivided | Construction::Auto => cd_d_divided(n, d, limit),
        Construction::Lex => lex_cd(&poset, order.subset_order(), limit),
        _ => Err(Error::ConstructionFailed {
            reason: "construction does not apply to this target".into(),
        }),
    };
    match built {
        Ok(cd) => emit_cd(&poset, &cd, limit),
        Err(e) => fail(&e),
    }
}

fn write_output(text: &str, out: Option<std::path::PathBuf>) -> u8 {
    match out {
        None => {
            print!("{text}");
            EXIT_OK
        }
        Some(path) => match std::fs::write(&path, text) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                eprintln!("error: cannot write {}: {e}", path.display());
                EXIT_USAGE
            }
        },
    }
}

fn export_poset(
    poset: &LabeledPoset,
    alpha: Option<&Composition>,
    format: Format,
    what: What,
    out: Option<std::path::PathBuf>,
    limits: LimitArgs,
) -> u8 {
    let limit = limits.value();
    let text = match (format, what) {
        (Format::Dot, What::Poset) => poset_dot(poset),
        (Format::Dot, What::Lattice) => {
            announce_estimate(poset, &limits);
            match build_lattice(poset, limit) {
                Ok(l) => lattice_dot(&l),
                Err(e) => return fail(&e),
            }
        }
        (Format::Json, _) | (Format::Csv, _) => {
            announce_estimate(poset, &limits);
            let ranks = match build_lattice(poset, limit) {
                Ok(l) => l.rank_sequence(),
                Err(e) => return fail(&e),
            };
            if format == Format::Json {
                let alpha = match alpha {
                    Some(a) => a.clone(),
                    // a d-divided target has no composition; use the walk
                    None => match poset.path_composition() {
                        Some((c, _)) => c,
                        None => Composition::new(vec![poset.n() as u32]).unwrap(),
                    },
                };
                let mut s = rank_json(&alpha, &ranks);
                s.push('\n');
                s
            } else {
                rank_csv(&ranks)
            }
        }
    };
    write_output(&text, out)
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    max_segments: usize,
    max_part: u32,
    max_sum: Option<u32>,
    checks: Vec<CheckKind>,
    centered_strategy: StrategyArg,
    lex_scope: ScopeArg,
    order: OrderArg,
    cursor: Option<String>,
    jobs: usize,
    limits: LimitArgs,
) -> u8 {
    let cursor = match cursor {
        None => None,
        Some(text) => match parse_alpha(&text) {
            Ok(a) => Some(a),
            Err(code) => return code,
        },
    };
    let spec = SweepSpec {
        max_segments,
        max_part,
        max_sum,
        checks,
        centered_strategy: match centered_strategy {
            StrategyArg::Construct => CenteredStrategy::Construct,
            StrategyArg::Search => CenteredStrategy::Search,
        },
        lex_scope: match lex_scope {
            ScopeArg::Natural => LexScope::Natural,
            ScopeArg::Extensions => LexScope::LinearExtensions,
            ScopeArg::All => LexScope::All,
        },
        subset_order: order.subset_order(),
        cursor,
        jobs,
        limit: limits.value(),
    };
    let outcome = sweep(&spec);
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    for report in &outcome.reports {
        writeln!(lock, "{}", serde_json::to_string(report).unwrap()).unwrap();
    }
    writeln!(lock, "{}", json!({ "summary": outcome.summary })).unwrap();
    eprintln!(
        "{} instances: {} pass, {} fail, {} inconclusive",
        outcome.summary.instances,
        outcome.summary.pass,
        outcome.summary.fail,
        outcome.summary.inconclusive
    );
    if outcome.any_fail() {
        EXIT_FAIL
    } else {
        EXIT_OK
    }
}

struct Battery {
    failures: usize,
    results: Vec<serde_json::Value>,
}

impl Battery {
    fn new() -> Battery {
        Battery {
            failures: 0,
            results: Vec::new(),
        }
    }

    fn record(&mut self, name: &str, outcome: Result<String, String>) {
        match outcome {
            Ok(detail) => {
                eprintln!("ok: {name} - {detail}");
                self.results
                    .push(json!({ "suite": name, "pass": true, "detail": detail }));
            }
            Err(detail) => {
                eprintln!("FAIL: {name} - {detail}");
                self.failures += 1;
                self.results
                    .push(json!({ "suite": name, "pass": false, "detail": detail }));
            }
        }
    }
}

fn verify_oracles(max_sum: u32) -> Result<String, String> {
    let mut checked = 0usize;
    for alpha in composition_family(5, max_sum, Some(max_sum)) {
        let fence = build_fence(&alpha);
        let brute = build_lattice(&fence, 24)
            .map_err(|e| e.to_string())?
            .rank_sequence();
        let brute = RankPolynomial::from_u64_coeffs(&brute);
        let recursive = rank_poly_recursive(&alpha);
        if brute != recursive {
            return Err(format!("{alpha}: brute {brute} != recursive {recursive}"));
        }
        if alpha.segment_count() % 2 == 1 {
            let explicit = rank_poly_explicit(&alpha).map_err(|e| e.to_string())?;
            if explicit != recursive {
                return Err(format!(
                    "{alpha}: explicit {explicit} != recursive {recursive}"
                ));
            }
        }
        checked += 1;
    }
    Ok(format!("{checked} compositions, three-way agreement"))
}

fn verify_cores() -> Result<String, String> {
    use fence_lattice::chains::{core_d_divided, core_three_segment, gk_core};
    use fence_lattice::poset::{label_three_segment, Ideal, Word};
    let w: Word = "110001011000111".parse().unwrap();
    let pairs = gk_core(&w);
    if pairs != vec![(4, 9), (5, 6), (7, 8), (10, 15), (11, 14), (12, 13)] {
        return Err(format!("maximal matching of {w} gave {pairs:?}"));
    }
    let fence = label_three_segment(2, 3, 1).unwrap();
    let ideal = Ideal::from_elements(&[
        fence.element_with_label(1),
        fence.element_with_label(4),
        fence.element_with_label(5),
    ]);
    let core = core_three_segment(2, 3, 1, ideal).map_err(|e| e.to_string())?;
    if core.pairs != vec![(2, 5), (3, 4)] || core.frozen_positions() != vec![1, 7] {
        return Err(format!("three-segment core mismatch: {core:?}"));
    }
    let core = core_d_divided(10, 4, Ideal::from_elements(&[1, 2, 5, 6, 9, 10]))
        .map_err(|e| e.to_string())?;
    if core.self_paired != Some(5)
        || core.pairs != vec![(4, 6), (7, 10), (8, 9)]
        || core.free_positions(10) != vec![1, 2, 3]
    {
        return Err(format!("d-divided core mismatch: {core:?}"));
    }
    Ok("matched-pair and core examples reproduced".into())
}

fn verify_shapes(max_part: u32) -> Result<String, String> {
    let spec = SweepSpec {
        max_segments: 4,
        max_part,
        checks: vec![CheckKind::Unimodal, CheckKind::Shape],
        ..SweepSpec::default()
    };
    let outcome = sweep(&spec);
    if outcome.any_fail() {
        let first = outcome
            .reports
            .iter()
            .find(|r| r.verdict == Verdict::Fail)
            .unwrap();
        return Err(serde_json::to_string(first).unwrap());
    }
    Ok(format!(
        "{} instances pass unimodality and shape",
        outcome.summary.instances
    ))
}

fn verify_constructions(two_max: u32, three_max: u32, dd_max: usize) -> Result<String, String> {
    let mut count = 0usize;
    for a in 1..=two_max {
        for b in 1..=two_max {
            cd_two_segment(a, b, 24).map_err(|e| format!("two ({a},{b}): {e}"))?;
            count += 1;
        }
    }
    for a in 1..=three_max {
        for b in 1..=three_max {
            for c in 1..=three_max {
                cd_three_segment(a, b, c, 24).map_err(|e| format!("three ({a},{b},{c}): {e}"))?;
                count += 1;
            }
        }
    }
    for n in 1..=dd_max {
        for d in 1..=5 {
            cd_d_divided(n, d, 24).map_err(|e| format!("d-divided ({n},{d}): {e}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} decompositions validated"))
}

fn verify_plateaus(max_sum: u32) -> Result<String, String> {
    let mut count = 0usize;
    for alpha in composition_family(5, max_sum, Some(max_sum)) {
        let parts = alpha.parts();
        let total = alpha.total();
        for t in 1..=parts.len() {
            if parts[t - 1] > total - parts[t - 1] {
                rank_plateau(&alpha, t, 24).map_err(|e| format!("{alpha} t={t}: {e}"))?;
                matching_long_segment(&alpha, t, MatchDirection::Up, 24)
                    .map_err(|e| format!("{alpha} t={t} up: {e}"))?;
                matching_long_segment(&alpha, t, MatchDirection::Down, 24)
                    .map_err(|e| format!("{alpha} t={t} down: {e}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} dominant-segment instances"))
}

fn verify_lifting() -> Result<String, String> {
    use fence_lattice::chains::lift_ncd;
    let seeds: Vec<(Composition, usize, ChainDecomposition)> = vec![
        ("1,2".parse().unwrap(), 2, cd_two_segment(1, 2, 24).unwrap()),
        ("2,1".parse().unwrap(), 1, cd_two_segment(2, 1, 24).unwrap()),
        (
            "3,1,1".parse().unwrap(),
            1,
            cd_three_segment(3, 1, 1, 24).unwrap(),
        ),
        (
            "1,3,1".parse().unwrap(),
            2,
            cd_three_segment(1, 3, 1, 24).unwrap(),
        ),
        (
            "1,1,3".parse().unwrap(),
            3,
            cd_three_segment(1, 1, 3, 24).unwrap(),
        ),
    ];
    for (alpha, t, seed) in seeds {
        let mut cur = alpha.clone();
        let mut cd = seed;
        for _ in 0..3 {
            cd = lift_ncd(&cur, t, &cd, 24).map_err(|e| format!("{cur} t={t}: {e}"))?;
            cur = cur.with_part(t, cur.parts()[t - 1] + 1).unwrap();
        }
    }
    Ok("5 seeds lifted three times, classification preserved".into())
}

fn verify_lex(max_n: usize) -> Result<String, String> {
    let mut count = 0usize;
    let budget = (max_n - 1) as u32;
    for alpha in composition_family(max_n - 1, budget, Some(budget)) {
        if alpha.element_count() > max_n {
            continue;
        }
        let report = check_lex(&alpha, LexScope::All, SubsetOrder::SortedList, 24)
            .map_err(|e| format!("{alpha}: {e}"))?;
        if report.verdict != Verdict::Pass {
            return Err(format!(
                "{alpha}: no labeling yields a nested decomposition"
            ));
        }
        count += 1;
    }
    Ok(format!(
        "{count} fences have a nested lexicographic decomposition"
    ))
}

fn cmd_verify(deep: bool) -> u8 {
    let mut battery = Battery::new();
    battery.record(
        "oracle agreement",
        verify_oracles(if deep { 12 } else { 10 }),
    );
    battery.record("core examples", verify_cores());
    battery.record("shape sweep", verify_shapes(if deep { 6 } else { 4 }));
    battery.record(
        "chain decompositions",
        if deep {
            verify_constructions(8, 5, 14)
        } else {
            verify_constructions(4, 3, 8)
        },
    );
    battery.record("rank plateaus", verify_plateaus(if deep { 14 } else { 10 }));
    battery.record("lifting", verify_lifting());
    battery.record("lexicographic", verify_lex(if deep { 7 } else { 5 }));
    println!(
        "{}",
        json!({ "suites": battery.results, "failures": battery.failures })
    );
    if battery.failures == 0 {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::RankPoly {
            alpha,
            method,
            limits,
        } => cmd_rank_poly(&alpha, method, limits),
        Command::Cd { target } => match target {
            CdTarget::Fence {
                alpha,
                construction,
                order,
                limits,
            } => cmd_cd_fence(&alpha, construction, order, limits),
            CdTarget::Ddivided {
                n,
                d,
                construction,
                order,
                limits,
            } => cmd_cd_ddivided(n, d, construction, order, limits),
        },
        Command::Sweep {
            max_segments,
            max_part,
            max_sum,
            checks,
            centered_strategy,
            lex_scope,
            order,
            cursor,
            jobs,
            limits,
        } => cmd_sweep(
            max_segments,
            max_part,
            max_sum,
            checks,
            centered_strategy,
            lex_scope,
            order,
            cursor,
            jobs,
            limits,
        ),
        Command::Export { target } => match target {
            ExportTarget::Fence {
                alpha,
                format,
                what,
                out,
                limits,
            } => match parse_alpha(&alpha) {
                Ok(a) => export_poset(&build_fence(&a), Some(&a), format, what, out, limits),
                Err(code) => code,
            },
            ExportTarget::Ddivided {
                n,
                d,
                format,
                what,
                out,
                limits,
            } => match build_d_divided(n, d) {
                Ok(p) => export_poset(&p, None, format, what, out, limits),
                Err(e) => fail(&e),
            },
        },
        Command::Verify { deep } => cmd_verify(deep),
    };
    ExitCode::from(code)
}
