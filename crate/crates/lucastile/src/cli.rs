//! Command-line front end.
//!
//! Subcommands: `code gen`, `tiling verify`, `partition stats`,
//! `identities check`, `selector verify`, `report all`. Every run produces
//! a [`RunReport`] rendered as JSON, CSV or an aligned table. Exit codes:
//! 0 when every verdict passed, 1 when any verdict failed, 2 on usage
//! errors (bad arguments, violated preconditions, exceeded budgets).
//! Reports go to stdout (or `-o FILE`); diagnostics go to stderr.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use crate::circulant::{
    filter_even_threes, filter_odd_zeros, lagarias_shor_code, non_adjacent_row_sums,
    subset_row_sums, CirculantMatrix, CodeLabel, CodeSet,
};
use crate::error::{Error, Result};
use crate::identities::{
    identity_lhs, identity_rhs, verify_by_even_family, verify_by_odd_partition,
    verify_closed_form, EvalPath, Identity, IdentityReport,
};
use crate::lucas::{
    closed_forms_match_enumeration, lucas_number, lucas_vertices, substitution_matches_vertices,
    weight_count,
};
use crate::partition::{base_cube_partition, BoxFamily, FactorSelect};
use crate::report::{
    serialize, CensusRow, NamedCheck, OutputFormat, ReportData, RunReport, StepTiming, Verdict,
};
use crate::selector::{
    selector_boxes, verify_discrete_partition, verify_selector, verify_selector_exhaustive,
};
use crate::tiling::{twin_pair_check, voxel_cover_check, DEFAULT_VOXEL_BUDGET};

/// Environment variable overriding the default voxel budget.
pub const VOXEL_BUDGET_ENV: &str = "LUCASTILE_VOXEL_BUDGET";

/// Largest dimension accepted by the enumerating subcommands.
const MAX_CLI_DIM: usize = 25;

/// Cylinder checks scan 2^n voxels per axis; past this they are skipped
/// (with a stderr note) in `report all`.
const MAX_CYLINDER_DIM: usize = 15;

/// Quadratic selector oracle bound.
const MAX_QUADRATIC_SELECTOR_DIM: usize = 11;

#[derive(Parser)]
#[command(
    name = "lucastile",
    version,
    about = "Cube tiling codes over Z_4 and exact Lucas-cube identity verification"
)]
struct Cli {
    #[command(subcommand)]
    command: TopCommand,
}

#[derive(Subcommand)]
enum TopCommand {
    /// Construct code sets from the circulant A(n)
    Code {
        #[command(subcommand)]
        cmd: CodeCommand,
    },
    /// Certify that the Lagarias-Shor code tiles the torus
    Tiling {
        #[command(subcommand)]
        cmd: TilingCommand,
    },
    /// Statistics of the box partition of the base cube
    Partition {
        #[command(subcommand)]
        cmd: PartitionCommand,
    },
    /// Verify the three binomial identities exactly
    Identities {
        #[command(subcommand)]
        cmd: IdentitiesCommand,
    },
    /// Discrete partition of {0,1}^n and the Lucas-vertex selector
    Selector {
        #[command(subcommand)]
        cmd: SelectorCommand,
    },
    /// Combined verification runs
    Report {
        #[command(subcommand)]
        cmd: ReportCommand,
    },
}

#[derive(Subcommand)]
enum CodeCommand {
    /// Generate one code set and report basic size checks
    Gen(GenArgs),
}

#[derive(Subcommand)]
enum TilingCommand {
    /// Run the twin-pair and/or voxel-cover criteria
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum PartitionCommand {
    /// Census, volumes and cylinder structure of F(n)
    Stats(StatsArgs),
}

#[derive(Subcommand)]
enum IdentitiesCommand {
    /// Evaluate lhs and rhs exactly over a range of indices
    Check(CheckArgs),
}

#[derive(Subcommand)]
enum SelectorCommand {
    /// Verify the discrete partition and the selector property
    Verify(SelectorArgs),
}

#[derive(Subcommand)]
enum ReportCommand {
    /// Run every verification for one odd dimension
    All(AllArgs),
}

#[derive(Args)]
struct OutputOpts {
    /// Output format
    #[arg(long, value_enum, ignore_case = true, default_value_t = FormatChoice::Table)]
    format: FormatChoice,
    /// Write the report to a file instead of stdout
    #[arg(short, long, value_name = "FILE")]
    output: Option<PathBuf>,
    /// Include per-step wall-clock timings (breaks byte-for-byte
    /// reproducibility of the output)
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct GenArgs {
    /// Dimension n
    #[arg(short, long)]
    n: usize,
    /// Which code set to generate
    #[arg(long, value_enum, ignore_case = true, default_value_t = SetChoice::V)]
    set: SetChoice,
    #[command(flatten)]
    out: OutputOpts,
}

#[derive(Args)]
struct VerifyArgs {
    /// Dimension n (odd, >= 3)
    #[arg(short, long)]
    n: usize,
    /// Which criteria to run
    #[arg(long, value_enum, ignore_case = true, default_value_t = OracleChoice::Twin)]
    oracle: OracleChoice,
    /// Voxel budget for the exhaustive oracle (default 4^9, or the
    /// LUCASTILE_VOXEL_BUDGET environment variable)
    #[arg(long, value_name = "N")]
    voxel_budget: Option<u64>,
    /// Drop the word at this index first, to exercise the failure path
    #[arg(long, value_name = "INDEX")]
    drop_word: Option<usize>,
    #[command(flatten)]
    out: OutputOpts,
}

#[derive(Args)]
struct StatsArgs {
    /// Dimension n (odd, >= 3)
    #[arg(short, long)]
    n: usize,
    #[command(flatten)]
    out: OutputOpts,
}

#[derive(Args)]
struct CheckArgs {
    /// Verify a single index
    #[arg(short, long, conflicts_with = "n_max")]
    n: Option<u64>,
    /// Verify every index from 1 to this bound
    #[arg(long)]
    n_max: Option<u64>,
    /// Restrict to one identity (1, 2 or 3); default is all three
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    id: Option<u8>,
    /// Evaluation path
    #[arg(long, value_enum, ignore_case = true, default_value_t = ViaChoice::Closed)]
    via: ViaChoice,
    #[command(flatten)]
    out: OutputOpts,
}

#[derive(Args)]
struct SelectorArgs {
    /// Dimension n (odd, >= 3)
    #[arg(short, long)]
    n: usize,
    #[command(flatten)]
    out: OutputOpts,
}

#[derive(Args)]
struct AllArgs {
    /// Dimension n (odd, >= 3)
    #[arg(short, long)]
    n: usize,
    /// Voxel budget for the exhaustive oracle
    #[arg(long, value_name = "N")]
    voxel_budget: Option<u64>,
    #[command(flatten)]
    out: OutputOpts,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SetChoice {
    /// V(A): all subset row sums of A
    Va,
    /// V(A^T): all subset row sums of the transpose
    Vat,
    /// Ve(A): words of V(A) with an even number of 3s
    Ve,
    /// Vo(A^T): words of V(A^T) with an odd number of 0s
    Vo,
    /// The Lagarias-Shor code
    V,
    /// U(n): sums of non-adjacent rows
    U,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OracleChoice {
    Twin,
    Voxel,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ViaChoice {
    Closed,
    Tiling,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatChoice {
    Json,
    Csv,
    Table,
}

impl FormatChoice {
    fn as_format(self) -> OutputFormat {
        match self {
            FormatChoice::Json => OutputFormat::Json,
            FormatChoice::Csv => OutputFormat::Csv,
            FormatChoice::Table => OutputFormat::Table,
        }
    }
}

/// Wall-clock step collector; only attached to the report when requested.
struct Timer {
    enabled: bool,
    last: Instant,
    steps: Vec<StepTiming>,
}

impl Timer {
    fn new(enabled: bool) -> Self {
        Self {
            enabled,
            last: Instant::now(),
            steps: Vec::new(),
        }
    }

    fn step(&mut self, name: &str) {
        if self.enabled {
            let now = Instant::now();
            self.steps.push(StepTiming {
                step: name.to_string(),
                millis: now.duration_since(self.last).as_millis() as u64,
            });
            self.last = now;
        }
    }

    fn attach(self, report: &mut RunReport) {
        if self.enabled {
            report.timings = Some(self.steps);
        }
    }
}

/// Entry point used by the `lucastile` binary.
pub fn run() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // Also handles --help/--version, with their conventional exit codes.
        Err(err) => err.exit(),
    };
    let (outcome, out) = dispatch(cli.command);
    match outcome {
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
        Ok(report) => {
            let text = match serialize(&report, out.format.as_format()) {
                Ok(text) => text,
                Err(err) => {
                    eprintln!("error: {err}");
                    return ExitCode::from(2);
                }
            };
            if let Some(path) = &out.output {
                if let Err(err) = std::fs::write(path, &text) {
                    eprintln!("error: cannot write {}: {err}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                print!("{text}");
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn dispatch(command: TopCommand) -> (Result<RunReport>, OutputOpts) {
    match command {
        TopCommand::Code {
            cmd: CodeCommand::Gen(args),
        } => (cmd_code_gen(&args), args.out),
        TopCommand::Tiling {
            cmd: TilingCommand::Verify(args),
        } => (cmd_tiling_verify(&args), args.out),
        TopCommand::Partition {
            cmd: PartitionCommand::Stats(args),
        } => (cmd_partition_stats(&args), args.out),
        TopCommand::Identities {
            cmd: IdentitiesCommand::Check(args),
        } => (cmd_identities_check(&args), args.out),
        TopCommand::Selector {
            cmd: SelectorCommand::Verify(args),
        } => (cmd_selector_verify(&args), args.out),
        TopCommand::Report {
            cmd: ReportCommand::All(args),
        } => (cmd_report_all(&args), args.out),
    }
}

fn resolve_budget(flag: Option<u64>) -> Result<u64> {
    if let Some(budget) = flag {
        return Ok(budget);
    }
    match std::env::var(VOXEL_BUDGET_ENV) {
        Ok(text) => text.parse().map_err(|_| {
            Error::UnsupportedFormat(format!("{VOXEL_BUDGET_ENV}={text} is not an integer"))
        }),
        Err(_) => Ok(DEFAULT_VOXEL_BUDGET),
    }
}

fn check_cli_dim(n: usize) -> Result<()> {
    if n > MAX_CLI_DIM {
        return Err(Error::EnumerationTooLarge { n, max: MAX_CLI_DIM });
    }
    Ok(())
}

fn cmd_code_gen(args: &GenArgs) -> Result<RunReport> {
    let n = args.n;
    check_cli_dim(n)?;
    let mut timer = Timer::new(args.out.timings);
    let set_name = match args.set {
        SetChoice::Va => "V(A)",
        SetChoice::Vat => "V(A^T)",
        SetChoice::Ve => "Ve(A)",
        SetChoice::Vo => "Vo(A^T)",
        SetChoice::V => "V",
        SetChoice::U => "U",
    };
    let code = match args.set {
        SetChoice::Va => subset_row_sums(&CirculantMatrix::standard(n)?)?,
        SetChoice::Vat => subset_row_sums(&CirculantMatrix::standard(n)?.transpose())?,
        SetChoice::Ve => filter_even_threes(&subset_row_sums(&CirculantMatrix::standard(n)?)?),
        SetChoice::Vo => {
            filter_odd_zeros(&subset_row_sums(&CirculantMatrix::standard(n)?.transpose())?)
        }
        SetChoice::V => lagarias_shor_code(n)?,
        SetChoice::U => non_adjacent_row_sums(n)?,
    };
    timer.step("generate");

    let mut report = RunReport::new(
        "code gen",
        BTreeMap::from([
            ("n".to_string(), n.to_string()),
            ("set".to_string(), set_name.to_string()),
        ]),
    );
    match args.set {
        SetChoice::Va | SetChoice::Vat | SetChoice::V => {
            let expected = 1u128 << n;
            report.push_check(NamedCheck::with_detail(
                format!("|{set_name}| = 2^{n}"),
                code.len() as u128 == expected,
                format!("{} words", code.len()),
            ));
        }
        SetChoice::U => {
            let expected = lucas_number(n as u64) - 1;
            report.push_check(NamedCheck::with_detail(
                format!("|U({n})| = L_{n} - 1"),
                code.len() as u64 == expected,
                format!("{} words", code.len()),
            ));
        }
        SetChoice::Ve | SetChoice::Vo => {
            report.push_check(NamedCheck::with_detail(
                format!("{set_name} generated"),
                true,
                format!("{} words", code.len()),
            ));
        }
    }
    report.data = Some(ReportData::Words {
        words: code.iter().map(|w| w.to_string()).collect(),
    });
    timer.attach(&mut report);
    Ok(report)
}

fn cmd_tiling_verify(args: &VerifyArgs) -> Result<RunReport> {
    let n = args.n;
    check_cli_dim(n)?;
    let budget = resolve_budget(args.voxel_budget)?;
    let mut timer = Timer::new(args.out.timings);
    let mut code = lagarias_shor_code(n)?;
    if let Some(index) = args.drop_word {
        if index >= code.len() {
            return Err(Error::CoordinateOutOfRange {
                coordinate: index,
                dim: code.len(),
            });
        }
        let mut words = code.words().to_vec();
        words.remove(index);
        code = CodeSet::new(n, CodeLabel::Custom, words)?;
    }
    timer.step("build code");

    let mut parameters = BTreeMap::from([
        ("n".to_string(), n.to_string()),
        (
            "oracle".to_string(),
            format!("{:?}", args.oracle).to_lowercase(),
        ),
    ]);
    if let Some(index) = args.drop_word {
        parameters.insert("drop_word".to_string(), index.to_string());
    }
    if matches!(args.oracle, OracleChoice::Voxel | OracleChoice::Both) {
        parameters.insert("voxel_budget".to_string(), budget.to_string());
    }
    let mut report = RunReport::new("tiling verify", parameters);

    if matches!(args.oracle, OracleChoice::Twin | OracleChoice::Both) {
        report.push(Verdict::Tiling(twin_pair_check(&code)));
        timer.step("twin pair");
    }
    if matches!(args.oracle, OracleChoice::Voxel | OracleChoice::Both) {
        report.push(Verdict::Tiling(voxel_cover_check(&code, budget)?));
        timer.step("voxel cover");
    }
    timer.attach(&mut report);
    Ok(report)
}

/// The census rows of a family, compared against the closed form
/// (M_0 = 2 for the two unit cubes, C(n-k,k)·n/(n-k) for k >= 1).
fn census_rows(f: &BoxFamily) -> Vec<CensusRow> {
    let n = f.dim();
    let census = f.weight_census();
    (0..=(n / 2) as u32)
        .map(|k| {
            let m_k = census.get(&k).copied().unwrap_or(0);
            let closed = if k == 0 {
                BigUint::from(2u8)
            } else {
                weight_count(n as u64, k as u64)
            };
            CensusRow {
                n: n as u64,
                k,
                m_k: m_k.to_string(),
                closed_form: closed.to_string(),
                matches: BigUint::from(m_k) == closed,
            }
        })
        .collect()
}

fn push_partition_checks(report: &mut RunReport, f: &BoxFamily) -> Result<()> {
    let n = f.dim();
    report.push_check(NamedCheck::with_detail(
        "F covers the base cube exactly once",
        f.covers_base_exactly_once(),
        format!("{} boxes, total volume {}", f.len(), f.volume_sum()),
    ));

    let rows = census_rows(f);
    let census_ok =
        rows.iter().all(|r| r.matches) && f.weight_census().keys().all(|&k| k <= (n / 2) as u32);
    report.push_check(NamedCheck::new(
        "census M_k matches C(n-k,k)*n/(n-k)",
        census_ok,
    ));

    let expect_full = ((1u128 << n) - 2) / 3;
    let expect_lo_hi = 2 * ((1u128 << n) + 1) / 3;
    let mut full_ok = true;
    let mut lo_hi_ok = true;
    let mut reflect_ok = true;
    let mut shift_ok = true;
    for i in 1..=n {
        let full = f.subfamily(i, FactorSelect::Full)?.volume_sum();
        let lo = f.subfamily(i, FactorSelect::Lo)?.volume_sum();
        let hi = f.subfamily(i, FactorSelect::Hi)?.volume_sum();
        full_ok &= full == expect_full;
        lo_hi_ok &= lo + hi == expect_lo_hi;
        reflect_ok &= lo == hi;
        let next = if i == n { 1 } else { i + 1 };
        let hi_next = f.subfamily(next, FactorSelect::Hi)?.volume_sum();
        shift_ok &= hi_next == full + 1;
    }
    report.push_check(NamedCheck::with_detail(
        "m(F^i_1) = (2^n - 2)/3 for every i",
        full_ok,
        expect_full.to_string(),
    ));
    report.push_check(NamedCheck::with_detail(
        "m(F^i_02) = 2(2^n + 1)/3 for every i",
        lo_hi_ok,
        expect_lo_hi.to_string(),
    ));
    report.push_check(NamedCheck::new(
        "m(F^i_0) = m(F^i_2) for every i",
        reflect_ok,
    ));
    report.push_check(NamedCheck::new(
        "m(F^{i+1}_2) = m(F^i_1) + 1 for every i",
        shift_ok,
    ));
    Ok(())
}

fn push_cylinder_checks(report: &mut RunReport, f: &BoxFamily) -> Result<()> {
    let n = f.dim();
    let mut lo_hi_ok = true;
    let mut full_ok = true;
    for i in 1..=n {
        lo_hi_ok &= f.subfamily(i, FactorSelect::LoOrHi)?.is_axis_cylinder(i)?;
        full_ok &= f.subfamily(i, FactorSelect::Full)?.is_axis_cylinder(i)?;
    }
    report.push_check(NamedCheck::new(
        "union of F^i_02 is an i-cylinder for every i",
        lo_hi_ok,
    ));
    report.push_check(NamedCheck::new(
        "union of F^i_1 is an i-cylinder for every i",
        full_ok,
    ));
    Ok(())
}

fn cmd_partition_stats(args: &StatsArgs) -> Result<RunReport> {
    let n = args.n;
    check_cli_dim(n)?;
    let mut timer = Timer::new(args.out.timings);
    let f = base_cube_partition(n)?;
    timer.step("build F");

    let mut report = RunReport::new(
        "partition stats",
        BTreeMap::from([("n".to_string(), n.to_string())]),
    );
    push_partition_checks(&mut report, &f)?;
    timer.step("volumes and census");
    push_cylinder_checks(&mut report, &f)?;
    timer.step("cylinders");

    report.data = Some(ReportData::Census {
        census: census_rows(&f),
    });
    timer.attach(&mut report);
    Ok(report)
}

fn identities_for(choice: Option<u8>) -> Result<Vec<Identity>> {
    match choice {
        None => Ok(Identity::ALL.to_vec()),
        Some(id) => Ok(vec![Identity::from_id(id)?]),
    }
}

fn tiling_identity_report(id: Identity, n: u64) -> Result<Option<IdentityReport>> {
    if n >= 3 && !n.is_multiple_of(2) {
        Ok(Some(verify_by_odd_partition(id, n as usize)?))
    } else if n >= 2 && n.is_multiple_of(2) {
        Ok(Some(verify_by_even_family(id, n as usize)?))
    } else {
        Ok(None) // n = 1 has no tiling path
    }
}

fn cmd_identities_check(args: &CheckArgs) -> Result<RunReport> {
    let ids = identities_for(args.id)?;
    let mut timer = Timer::new(args.out.timings);
    let (lo, hi) = match (args.n, args.n_max) {
        (Some(n), None) => (n, n),
        (None, Some(n_max)) => (1, n_max),
        (None, None) => {
            return Err(Error::UnsupportedFormat(
                "identities check needs -n or --n-max".into(),
            ))
        }
        (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
    };
    if matches!(args.via, ViaChoice::Tiling) && hi as usize > MAX_CLI_DIM {
        return Err(Error::EnumerationTooLarge {
            n: hi as usize,
            max: MAX_CLI_DIM,
        });
    }

    let mut parameters = BTreeMap::from([(
        "via".to_string(),
        format!("{:?}", args.via).to_lowercase(),
    )]);
    match (args.n, args.n_max) {
        (Some(n), _) => {
            parameters.insert("n".to_string(), n.to_string());
        }
        (_, Some(n_max)) => {
            parameters.insert("n_max".to_string(), n_max.to_string());
        }
        _ => unreachable!(),
    }
    parameters.insert(
        "id".to_string(),
        args.id.map_or("all".to_string(), |id| id.to_string()),
    );
    let mut report = RunReport::new("identities check", parameters);

    for &id in &ids {
        match args.via {
            ViaChoice::Closed => {
                if lo == hi {
                    let lhs = identity_lhs(id, lo);
                    let rhs = identity_rhs(id, lo);
                    let ok = lhs == rhs;
                    report.push(Verdict::Identity(IdentityReport {
                        id,
                        n: lo,
                        lhs,
                        rhs,
                        path: EvalPath::ClosedForm,
                        aux_odd_n: None,
                        ok,
                    }));
                } else {
                    for r in verify_closed_form(id, hi) {
                        report.push(Verdict::Identity(r));
                    }
                }
            }
            ViaChoice::Tiling => {
                for n in lo..=hi {
                    if let Some(r) = tiling_identity_report(id, n)? {
                        report.push(Verdict::Identity(r));
                    } else {
                        eprintln!("note: n = {n} has no tiling evaluation path, skipped");
                    }
                }
            }
        }
        timer.step(&format!("identity {}", id.id()));
    }
    timer.attach(&mut report);
    Ok(report)
}

fn push_selector_checks(report: &mut RunReport, n: usize) -> Result<()> {
    report.push_check(NamedCheck::new(
        "star code partitions {0,1}^n",
        verify_discrete_partition(n)?,
    ));
    report.push_check(NamedCheck::new(
        "Lucas vertices form a selector (indexed)",
        verify_selector(n)?,
    ));
    if n <= MAX_QUADRATIC_SELECTOR_DIM {
        report.push_check(NamedCheck::new(
            "Lucas vertices form a selector (quadratic oracle)",
            verify_selector_exhaustive(n)?,
        ));
    }
    let boxes = selector_boxes(n)?;
    let non_all_ones = boxes.iter().filter(|b| !b.is_all_ones()).count();
    let vertices = lucas_vertices(n).len();
    let expected = lucas_number(n as u64) as usize;
    report.push_check(NamedCheck::with_detail(
        "box count (sans all-ones) = vertex count = L_n",
        non_all_ones == vertices && vertices == expected,
        format!("{non_all_ones} boxes, {vertices} vertices, L_{n} = {expected}"),
    ));
    Ok(())
}

fn cmd_selector_verify(args: &SelectorArgs) -> Result<RunReport> {
    let n = args.n;
    check_cli_dim(n)?;
    let mut timer = Timer::new(args.out.timings);
    let mut report = RunReport::new(
        "selector verify",
        BTreeMap::from([("n".to_string(), n.to_string())]),
    );
    push_selector_checks(&mut report, n)?;
    timer.step("selector checks");
    timer.attach(&mut report);
    Ok(report)
}

fn cmd_report_all(args: &AllArgs) -> Result<RunReport> {
    let n = args.n;
    check_cli_dim(n)?;
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::OddDimensionRequired {
            op: "report all",
            min: 3,
            n,
        });
    }
    let budget = resolve_budget(args.voxel_budget)?;
    let mut timer = Timer::new(args.out.timings);
    let mut report = RunReport::new(
        "report all",
        BTreeMap::from([
            ("n".to_string(), n.to_string()),
            ("voxel_budget".to_string(), budget.to_string()),
        ]),
    );

    // Codes.
    let code = lagarias_shor_code(n)?;
    report.push_check(NamedCheck::with_detail(
        "|V| = 2^n",
        code.len() as u128 == 1u128 << n,
        format!("{} words", code.len()),
    ));
    let u = non_adjacent_row_sums(n)?;
    report.push_check(NamedCheck::with_detail(
        "|U| = L_n - 1",
        u.len() as u64 == lucas_number(n as u64) - 1,
        format!("{} words", u.len()),
    ));
    timer.step("codes");

    // Tiling certification.
    report.push(Verdict::Tiling(twin_pair_check(&code)));
    let needed = 1u128 << (2 * n);
    if needed <= budget as u128 {
        report.push(Verdict::Tiling(voxel_cover_check(&code, budget)?));
    } else {
        eprintln!(
            "note: voxel cover check skipped, n = {n} needs {needed} voxels over budget {budget}"
        );
    }
    timer.step("tiling");

    // Partition structure.
    let f = base_cube_partition(n)?;
    push_partition_checks(&mut report, &f)?;
    if n <= MAX_CYLINDER_DIM {
        push_cylinder_checks(&mut report, &f)?;
    } else {
        eprintln!("note: cylinder checks skipped for n > {MAX_CYLINDER_DIM}");
    }
    timer.step("partition");

    // Identities through every applicable path.
    for id in Identity::ALL {
        let lhs = identity_lhs(id, n as u64);
        let rhs = identity_rhs(id, n as u64);
        let ok = lhs == rhs;
        report.push(Verdict::Identity(IdentityReport {
            id,
            n: n as u64,
            lhs,
            rhs,
            path: EvalPath::ClosedForm,
            aux_odd_n: None,
            ok,
        }));
    }
    for id in Identity::ALL {
        report.push(Verdict::Identity(verify_by_odd_partition(id, n)?));
    }
    for id in Identity::ALL {
        report.push(Verdict::Identity(verify_by_even_family(id, n - 1)?));
    }
    timer.step("identities");

    // Selector.
    push_selector_checks(&mut report, n)?;
    timer.step("selector");

    // Lucas bridge.
    report.push_check(NamedCheck::new(
        "closed-form counts match vertex enumeration",
        closed_forms_match_enumeration(n),
    ));
    report.push_check(NamedCheck::new(
        "2 -> 0 substitution on U + {0} gives the Lucas vertices",
        substitution_matches_vertices(n)?,
    ));
    timer.step("lucas");

    timer.attach(&mut report);
    Ok(report)
}
