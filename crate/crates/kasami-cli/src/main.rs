//! Command-line front end: weight tables, verification suites, distance
//! bounds, independence depth, and Griesmer shortening for the binary Kasami
//! codes implemented in the `kasami` crate.
//!
//! Exit codes: 0 success, 2 verification mismatch, 64 usage error, 65
//! resource cap. Stdout is byte-deterministic for fixed inputs regardless of
//! worker count; timing goes to stderr.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use kasami::{
    bsymbol_weight, distance_range, predicted_degenerate_sizes, saturated_distribution,
    symbol_pair_distribution, Error, FieldElement, FieldTower, KasamiCode, WeightEnumerator,
};

const DEFAULT_SEED: u64 = 0x6b61_7361_6d69; // "kasami"
const DEFAULT_SAMPLE: u64 = 10_000;

#[derive(Parser)]
#[command(
    name = "kasami",
    version,
    about = "Binary Kasami codes: b-symbol weight tables, closed-form checks, and distance bounds"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Override the reduction modulus (hex, e.g. 0x5b); must be a primitive
    /// polynomial of degree 2m.
    #[arg(long, global = true, value_parser = parse_hex)]
    modulus: Option<u64>,

    /// Worker threads for the scans; defaults to all available cores.
    #[arg(long, global = true)]
    workers: Option<usize>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the b-symbol weight enumerator by exhaustive scan, cross-checked
    /// against the closed forms.
    Table {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        b: usize,
    },
    /// Run the verification suites pitting every closed form against its
    /// brute-force oracle.
    Verify {
        #[arg(long)]
        m: usize,
        /// Largest window length to verify (default 3m).
        #[arg(long)]
        b_max: Option<usize>,
        /// Sampled comparisons per suite when exhaustive sweeps are too large.
        #[arg(long, default_value_t = DEFAULT_SAMPLE)]
        sample: u64,
        /// Seed for the sampled comparisons.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Perturb the named suite's closed form by +1 (negative-path
        /// testing).
        #[arg(long, hide = true)]
        inject_fault: Option<String>,
    },
    /// Print the distance floor, the refined floor when defined, the
    /// observed distance when scannable, and the upper bound.
    Bounds {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        b: usize,
    },
    /// Print the independence depth and its witness set.
    Mb {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        b: usize,
    },
    /// Shorten on the support complement of a minimum b-symbol weight
    /// codeword and report the Griesmer verdict.
    Shorten {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        b: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

fn parse_hex(s: &str) -> Result<u64, String> {
    let digits = s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")).unwrap_or(s);
    u64::from_str_radix(digits, 16).map_err(|e| format!("invalid hex value {s:?}: {e}"))
}

#[derive(Serialize)]
struct EnumRow {
    weight: u32,
    count: u64,
}

#[derive(Serialize)]
struct Check {
    name: String,
    pass: bool,
    detail: String,
}

impl Check {
    fn pass(name: &str, detail: String) -> Check {
        Check {
            name: name.to_string(),
            pass: true,
            detail,
        }
    }

    fn fail(name: &str, detail: String) -> Check {
        Check {
            name: name.to_string(),
            pass: false,
            detail,
        }
    }
}

#[derive(Serialize)]
struct BoundsReport {
    floor: u64,
    refined_floor: Option<u64>,
    observed: Option<u64>,
    upper: u64,
}

#[derive(Serialize)]
struct DepthReport {
    depth: Option<usize>,
    witness: Vec<String>,
}

#[derive(Serialize)]
struct ShortenReport {
    alpha: String,
    beta: String,
    length: usize,
    dimension: usize,
    min_distance: u32,
    griesmer_sum: u64,
    is_griesmer: bool,
    shift_rank: usize,
}

#[derive(Serialize)]
struct RunReport {
    command: String,
    m: usize,
    b: usize,
    modulus_hex: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    enumerator: Option<Vec<EnumRow>>,
    checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bounds: Option<BoundsReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    mb: Option<DepthReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    shorten: Option<ShortenReport>,
    pass: bool,
}

impl RunReport {
    fn new(command: &str, m: usize, b: usize, modulus: u64) -> RunReport {
        RunReport {
            command: command.to_string(),
            m,
            b,
            modulus_hex: format!("0x{modulus:x}"),
            enumerator: None,
            checks: Vec::new(),
            bounds: None,
            mb: None,
            shorten: None,
            pass: true,
        }
    }

    fn push(&mut self, check: Check) {
        self.pass &= check.pass;
        self.checks.push(check);
    }

    fn set_enumerator(&mut self, e: &WeightEnumerator) {
        self.enumerator = Some(
            e.counts()
                .iter()
                .map(|(&weight, &count)| EnumRow { weight, count })
                .collect(),
        );
    }

    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                serde_json::to_string_pretty(self).expect("report serializes") + "\n"
            }
            Format::Csv => self.render_csv(),
            Format::Text => self.render_text(),
        }
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        if let Some(rows) = &self.enumerator {
            out.push_str("weight,count\n");
            for r in rows {
                out.push_str(&format!("{},{}\n", r.weight, r.count));
            }
        } else {
            out.push_str("check,pass,detail\n");
            for c in &self.checks {
                out.push_str(&format!("{},{},\"{}\"\n", c.name, c.pass, c.detail));
            }
        }
        out
    }

    fn render_text(&self) -> String {
        let mut lines = Vec::new();
        if let Some(rows) = &self.enumerator {
            let e = WeightEnumerator::from_counts(
                rows.iter().map(|r| (r.weight, r.count)).collect(),
            );
            lines.push(e.to_text());
        }
        if let Some(b) = &self.bounds {
            lines.push(format!("distance floor: {}", b.floor));
            lines.push(match b.refined_floor {
                Some(v) => format!("refined floor: {v}"),
                None => "refined floor: undefined".to_string(),
            });
            lines.push(match b.observed {
                Some(v) => format!("observed distance: {v}"),
                None => "observed distance: not computed (scan gated)".to_string(),
            });
            lines.push(format!("upper bound: {}", b.upper));
        }
        if let Some(d) = &self.mb {
            lines.push(match d.depth {
                Some(v) => format!("independence depth: {v}"),
                None => "independence depth: undefined".to_string(),
            });
            if !d.witness.is_empty() {
                lines.push(format!("witness: {}", d.witness.join(" ")));
            }
        }
        if let Some(s) = &self.shorten {
            lines.push(format!("word: alpha={} beta={}", s.alpha, s.beta));
            lines.push(format!(
                "shortened parameters: [{}, {}, {}]",
                s.length, s.dimension, s.min_distance
            ));
            lines.push(format!(
                "griesmer sum: {} (meets length: {})",
                s.griesmer_sum, s.is_griesmer
            ));
            lines.push(format!("shift rank: {}", s.shift_rank));
        }
        for c in &self.checks {
            lines.push(if c.pass {
                format!("check {}: pass ({})", c.name, c.detail)
            } else {
                format!("check {}: FAIL ({})", c.name, c.detail)
            });
        }
        if self.command == "verify" {
            lines.push(if self.pass {
                "all checks passed".to_string()
            } else {
                let failures = self.checks.iter().filter(|c| !c.pass).count();
                format!("FAILURES: {failures}")
            });
        }
        lines.join("\n") + "\n"
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };

    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.workers.unwrap_or(0))
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: cannot build worker pool: {e}");
            return ExitCode::from(64);
        }
    };

    let started = Instant::now();
    let outcome = pool.install(|| dispatch(&cli));
    eprintln!("# elapsed: {} ms", started.elapsed().as_millis());

    match outcome {
        Ok(report) => {
            print!("{}", report.render(cli.format));
            ExitCode::from(if report.pass { 0 } else { 2 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::ScanTooLarge { .. } => 65,
        Error::InvalidM { .. }
        | Error::BadModulus { .. }
        | Error::BOutOfRange { .. }
        | Error::BetaNotInSubfield { .. }
        | Error::NotInSubfield { .. }
        | Error::ZeroAlphaBeta
        | Error::DepthUndefined { .. }
        | Error::NotABasis => 64,
        // Anything else means the math itself failed to line up.
        _ => 2,
    }
}

fn make_code(m: usize, modulus: Option<u64>) -> Result<(KasamiCode, u64), Error> {
    let tower = match modulus {
        Some(p) => FieldTower::with_modulus(m, p)?,
        None => FieldTower::new(m)?,
    };
    let modulus = tower.modulus();
    Ok((KasamiCode::new(tower), modulus))
}

fn dispatch(cli: &Cli) -> Result<RunReport, Error> {
    match cli.cmd {
        Cmd::Table { m, b } => cmd_table(m, b, cli.modulus),
        Cmd::Verify {
            m,
            b_max,
            sample,
            seed,
            ref inject_fault,
        } => cmd_verify(m, b_max, sample, seed, inject_fault.as_deref(), cli.modulus),
        Cmd::Bounds { m, b } => cmd_bounds(m, b, cli.modulus),
        Cmd::Mb { m, b } => cmd_mb(m, b, cli.modulus),
        Cmd::Shorten { m, b } => cmd_shorten(m, b, cli.modulus),
    }
}

fn cmd_table(m: usize, b: usize, modulus: Option<u64>) -> Result<RunReport, Error> {
    let (code, modulus) = make_code(m, modulus)?;
    let mut report = RunReport::new("table", m, b, modulus);
    let scanned = code.weight_enumerator(b)?;
    report.set_enumerator(&scanned);

    let total = scanned.total();
    if total == code.size() {
        report.push(Check::pass("enumerator-total", format!("{total} words")));
    } else {
        report.push(Check::fail(
            "enumerator-total",
            format!("expected={} got={total}", code.size()),
        ));
    }

    let closed = code.closed_form_enumerator(b)?;
    report.push(compare_enumerators(
        "closed-distribution",
        &closed,
        &scanned,
    ));

    if b == 2 {
        report.push(compare_enumerators(
            "pair-distribution",
            &symbol_pair_distribution(m)?,
            &scanned,
        ));
    }
    if b >= 3 * m {
        report.push(compare_enumerators(
            "saturation",
            &saturated_distribution(m)?,
            &scanned,
        ));
    }
    Ok(report)
}

fn compare_enumerators(name: &str, expected: &WeightEnumerator, got: &WeightEnumerator) -> Check {
    if expected == got {
        Check::pass(name, format!("{} weight classes", got.counts().len()))
    } else {
        Check::fail(
            name,
            format!("expected={} got={}", expected.to_text(), got.to_text()),
        )
    }
}

fn cmd_bounds(m: usize, b: usize, modulus: Option<u64>) -> Result<RunReport, Error> {
    let (code, modulus) = make_code(m, modulus)?;
    let mut report = RunReport::new("bounds", m, b, modulus);
    let (floor, upper) = distance_range(b, m)?;
    let refined_floor = code.refined_distance_floor(b).ok();
    let observed = if m <= kasami::SCAN_CAP_M {
        Some(u64::from(code.min_bsymbol_distance(b)?))
    } else {
        None
    };
    report.bounds = Some(BoundsReport {
        floor,
        refined_floor,
        observed,
        upper,
    });

    let best_floor = floor.max(refined_floor.unwrap_or(0));
    if let Some(d) = observed {
        if (best_floor..=upper).contains(&d) {
            report.push(Check::pass(
                "bound-ordering",
                format!("{best_floor} <= {d} <= {upper}"),
            ));
        } else {
            report.push(Check::fail(
                "bound-ordering",
                format!("observed={d} outside [{best_floor}, {upper}]"),
            ));
        }
    } else {
        report.push(Check::pass(
            "bound-ordering",
            format!("floors only: {best_floor} <= {upper}"),
        ));
    }
    Ok(report)
}

fn cmd_mb(m: usize, b: usize, modulus: Option<u64>) -> Result<RunReport, Error> {
    let (code, modulus) = make_code(m, modulus)?;
    let mut report = RunReport::new("mb", m, b, modulus);
    let result = code.independence_depth(b)?;
    report.mb = Some(match result {
        Some(d) => DepthReport {
            depth: Some(d.depth),
            witness: d.witness.iter().map(|w| format!("{w}")).collect(),
        },
        None => DepthReport {
            depth: None,
            witness: Vec::new(),
        },
    });
    Ok(report)
}

fn cmd_shorten(m: usize, b: usize, modulus: Option<u64>) -> Result<RunReport, Error> {
    let (code, modulus) = make_code(m, modulus)?;
    let mut report = RunReport::new("shorten", m, b, modulus);
    let word = code.min_weight_codeword(b)?;
    let params = code.shorten_on_support_complement(&word, b, true)?;
    report.shorten = Some(ShortenReport {
        alpha: format!("{}", word.alpha),
        beta: format!("{}", word.beta),
        length: params.length,
        dimension: params.dimension,
        min_distance: params.min_distance,
        griesmer_sum: params.griesmer_sum,
        is_griesmer: params.is_griesmer,
        shift_rank: params.shift_rank,
    });
    Ok(report)
}

struct SampleSource {
    rng: ChaCha8Rng,
}

impl SampleSource {
    fn new(seed: u64) -> SampleSource {
        SampleSource {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    fn pair(&mut self, code: &KasamiCode) -> (FieldElement, FieldElement) {
        let n = code.length() as u32;
        let q = code.tower().q() as usize;
        let alpha = FieldElement(self.rng.random_range(0..=n));
        let beta = code.tower().subfield_elements()[self.rng.random_range(0..q)];
        (alpha, beta)
    }

    fn window(&mut self, b_max: usize) -> usize {
        self.rng.random_range(1..=b_max)
    }
}

fn cmd_verify(
    m: usize,
    b_max: Option<usize>,
    sample: u64,
    seed: u64,
    inject_fault: Option<&str>,
    modulus: Option<u64>,
) -> Result<RunReport, Error> {
    let (code, modulus) = make_code(m, modulus)?;
    let n = code.length();
    let b_max = b_max.unwrap_or(3 * m);
    if !(1..=n).contains(&b_max) {
        return Err(Error::BOutOfRange {
            b: b_max,
            min: 1,
            max: n,
        });
    }
    let sample = sample.max(1);
    let fault = |suite: &str| u32::from(inject_fault == Some(suite));

    let mut report = RunReport::new("verify", m, b_max, modulus);

    report.push(check_exp_sums(&code, m, sample, seed));
    report.push(check_span_identity(&code, m, b_max, seed));
    report.push(check_closed_vs_brute(
        &code,
        m,
        b_max,
        sample,
        seed,
        fault("closed-vs-brute"),
    ));
    report.push(check_degenerate_sizes(&code, m));
    if m <= 4 {
        report.push(check_hierarchy_chain(&code, m, b_max)?);
        report.push(check_enumerators(&code, m, b_max)?);
    }
    if m == 5 && b_max >= 2 {
        report.push(compare_enumerators(
            "pair-distribution",
            &symbol_pair_distribution(m)?,
            &code.weight_enumerator(2)?,
        ));
    }
    Ok(report)
}

fn check_exp_sums(code: &KasamiCode, m: usize, sample: u64, seed: u64) -> Check {
    let name = "exp-sum-direct-vs-closed";
    let t = code.tower();
    let mut comparisons = 0u64;
    if m <= 4 {
        for a in 0..=t.n() as u32 {
            let alpha = FieldElement(a);
            for &beta in t.subfield_elements() {
                comparisons += 1;
                let direct = code.exp_sum_direct(alpha, beta).expect("beta in subfield");
                let closed = code.exp_sum_closed(alpha, beta).expect("beta in subfield");
                if direct != closed {
                    return Check::fail(
                        name,
                        format!("alpha={alpha} beta={beta} expected={direct} got={closed}"),
                    );
                }
            }
        }
        Check::pass(name, format!("{comparisons} pairs, exhaustive"))
    } else {
        let mut src = SampleSource::new(seed);
        for _ in 0..sample {
            let (alpha, beta) = src.pair(code);
            comparisons += 1;
            let direct = code.exp_sum_direct(alpha, beta).expect("beta in subfield");
            let closed = code.exp_sum_closed(alpha, beta).expect("beta in subfield");
            if direct != closed {
                return Check::fail(
                    name,
                    format!("alpha={alpha} beta={beta} expected={direct} got={closed}"),
                );
            }
        }
        Check::pass(name, format!("{comparisons} pairs, sampled"))
    }
}

fn check_span_identity(code: &KasamiCode, m: usize, b_max: usize, seed: u64) -> Check {
    let name = "span-vs-brute";
    let t = code.tower();
    let b_cap = b_max.min(14);
    let mut comparisons = 0u64;
    let mut run = |alpha: FieldElement, beta: FieldElement| -> Option<String> {
        let word = code.codeword(alpha, beta).expect("beta in subfield");
        for b in 1..=b_cap {
            let brute = bsymbol_weight(word.bits(), b).expect("b in range");
            let span = match kasami::bsymbol_weight_span(word.bits(), b) {
                Ok(w) => w,
                Err(e) => return Some(format!("alpha={alpha} beta={beta} b={b} error={e}")),
            };
            comparisons += 1;
            if span != brute {
                return Some(format!(
                    "alpha={alpha} beta={beta} b={b} expected={brute} got={span}"
                ));
            }
        }
        None
    };
    if m <= 3 {
        for a in 0..=t.n() as u32 {
            for &beta in t.subfield_elements() {
                if let Some(detail) = run(FieldElement(a), beta) {
                    return Check::fail(name, detail);
                }
            }
        }
        Check::pass(name, format!("{comparisons} comparisons, exhaustive words"))
    } else {
        let mut src = SampleSource::new(seed ^ 1);
        for _ in 0..64 {
            let (alpha, beta) = src.pair(code);
            if let Some(detail) = run(alpha, beta) {
                return Check::fail(name, detail);
            }
        }
        Check::pass(name, format!("{comparisons} comparisons, sampled words"))
    }
}

fn check_closed_vs_brute(
    code: &KasamiCode,
    m: usize,
    b_max: usize,
    sample: u64,
    seed: u64,
    fault: u32,
) -> Check {
    let name = "closed-vs-brute";
    let t = code.tower();
    let mut comparisons = 0u64;
    if m <= 4 {
        for a in 0..=t.n() as u32 {
            let alpha = FieldElement(a);
            for &beta in t.subfield_elements() {
                let word = code.codeword(alpha, beta).expect("beta in subfield");
                for b in 1..=b_max {
                    comparisons += 1;
                    let closed =
                        code.bsymbol_weight_closed(alpha, beta, b).expect("in range") + fault;
                    let brute = bsymbol_weight(word.bits(), b).expect("in range");
                    if closed != brute {
                        return Check::fail(
                            name,
                            format!(
                                "alpha={alpha} beta={beta} b={b} expected={brute} got={closed}"
                            ),
                        );
                    }
                }
            }
        }
        Check::pass(name, format!("{comparisons} comparisons, exhaustive"))
    } else {
        let mut src = SampleSource::new(seed ^ 2);
        for _ in 0..sample {
            let (alpha, beta) = src.pair(code);
            let b = src.window(b_max);
            let word = code.codeword(alpha, beta).expect("beta in subfield");
            comparisons += 1;
            let closed = code.bsymbol_weight_closed(alpha, beta, b).expect("in range") + fault;
            let brute = bsymbol_weight(word.bits(), b).expect("in range");
            if closed != brute {
                return Check::fail(
                    name,
                    format!("alpha={alpha} beta={beta} b={b} expected={brute} got={closed}"),
                );
            }
        }
        Check::pass(name, format!("{comparisons} comparisons, sampled"))
    }
}

fn check_degenerate_sizes(code: &KasamiCode, m: usize) -> Check {
    let name = "degenerate-set-sizes";
    let j_cap = (3 * m - 1).min(24);
    for j in 1..=j_cap {
        let sets = code.degenerate_sets(j).expect("j in range");
        let (pe, pt) = predicted_degenerate_sizes(m, j);
        if sets.vanish_at_eta.len() as u64 != pe || sets.vanish_at_theta.len() as u64 != pt {
            return Check::fail(
                name,
                format!(
                    "j={j} expected=({pe},{pt}) got=({},{})",
                    sets.vanish_at_eta.len(),
                    sets.vanish_at_theta.len()
                ),
            );
        }
        if sets
            .vanish_at_eta
            .iter()
            .any(|u| sets.vanish_at_theta.contains(u))
        {
            return Check::fail(name, format!("j={j} sets intersect"));
        }
    }
    Check::pass(name, format!("j <= {j_cap}, exact sizes, disjoint"))
}

fn check_hierarchy_chain(code: &KasamiCode, m: usize, b_max: usize) -> Result<Check, Error> {
    let name = "hierarchy-chain";
    let mut chain = Vec::with_capacity(b_max);
    for b in 1..=b_max {
        let observed = u64::from(code.min_bsymbol_distance(b)?);
        let (lo, hi) = distance_range(b, m)?;
        if !(lo..=hi).contains(&observed) {
            return Ok(Check::fail(
                name,
                format!("b={b} expected=[{lo},{hi}] got={observed}"),
            ));
        }
        if chain.last().is_some_and(|&prev| observed < prev) {
            return Ok(Check::fail(
                name,
                format!("b={b} chain decreased to {observed}"),
            ));
        }
        if b >= 3 * m && observed != code.length() as u64 {
            return Ok(Check::fail(
                name,
                format!("b={b} expected={} got={observed}", code.length()),
            ));
        }
        chain.push(observed);
    }
    let rendered: Vec<String> = chain.iter().map(u64::to_string).collect();
    Ok(Check::pass(
        name,
        format!("observed d_b = [{}]", rendered.join(", ")),
    ))
}

fn check_enumerators(code: &KasamiCode, m: usize, b_max: usize) -> Result<Check, Error> {
    let name = "enumerator-closed-vs-scan";
    for b in 1..=b_max {
        let scanned = code.weight_enumerator(b)?;
        let closed = code.closed_form_enumerator(b)?;
        if closed != scanned {
            return Ok(Check::fail(
                name,
                format!("b={b} expected={} got={}", scanned.to_text(), closed.to_text()),
            ));
        }
        if b == 2 {
            let pair = symbol_pair_distribution(m)?;
            if pair != scanned {
                return Ok(Check::fail(
                    name,
                    format!(
                        "b=2 expected={} got={}",
                        scanned.to_text(),
                        pair.to_text()
                    ),
                ));
            }
        }
        if b > 3 * m {
            let sat = saturated_distribution(m)?;
            if sat != scanned {
                return Ok(Check::fail(
                    name,
                    format!("b={b} expected={} got={}", scanned.to_text(), sat.to_text()),
                ));
            }
        }
    }
    Ok(Check::pass(name, format!("b <= {b_max} distributions agree")))
}
