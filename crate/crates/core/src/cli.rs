//! The `fcensus` command-line front end.
//!
//! Every command produces a [`CommandOutcome`] whose exit code is derived
//! from the `status` field of its JSON report, so `--json` output alone
//! determines how the process exits.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Read;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::catalog::{enumerate_ring, CatalogSpec, Family, DEFAULT_BRAID_ORDER};
use crate::cyclo::Cyclo;
use crate::data;
use crate::error::{Error, Result};
use crate::gauge::{apply_gauge, apply_permutation, random_gauge, GaugeTransform};
use crate::invariant::{evaluate_item_with, match_census, CensusTable};
use crate::ring::{FusionRing, Permutation};
use crate::skeleton::{
    check_pentagon, check_vacuum, classify_given_pentagon, hexagon_report, pivotal_report,
    quantum_dims, s_matrix, SkeletalData, VerificationReport,
};

/// Default root-of-unity order of random gauges.
pub const DEFAULT_GAUGE_ORDER: u32 = 24;

const SHOWN_COUNTEREXAMPLES: usize = 10;

#[derive(Parser, Debug)]
#[command(
    name = "fcensus",
    version,
    about = "Verify skeletal data of fusion categories and identify them in census tables"
)]
pub struct Cli {
    /// Print a machine-readable JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Decimal digits for numeric renderings.
    #[arg(long, global = true, default_value_t = 3)]
    pub digits: u32,
    /// Apply a random gauge with this seed to the input before working on it
    /// (for `gauge`: the seed of the emitted transform).
    #[arg(long, global = true)]
    pub gauge_seed: Option<u64>,
    /// Root-of-unity order for random gauges (default 24) or for the
    /// braiding search of `catalog` (default 240).
    #[arg(long, global = true)]
    pub max_order: Option<u32>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check vacuum normalization, pentagon, hexagon and pivotal equations.
    Verify {
        /// Skeletal-data file, or `-` for stdin.
        data: String,
        /// Comma-separated subset of checks; all applicable ones by default.
        #[arg(long, value_delimiter = ',')]
        checks: Vec<CheckKind>,
    },
    /// Name the category by looking up its invariants in a census table.
    Identify {
        data: String,
        /// Census file or bundled ring name; defaults to the bundled table
        /// for the data's ring.
        #[arg(long)]
        census: Option<String>,
    },
    /// Property flags, quantum dimensions and the S-matrix.
    Report { data: String },
    /// Automorphisms of a fusion ring (file or bundled name).
    Autos { ring: String },
    /// Apply a random (`--gauge-seed`) or explicit (`--transform`) gauge.
    Gauge {
        data: String,
        /// Gauge-transform file.
        #[arg(long, conflicts_with = "gauge_seed")]
        transform: Option<String>,
        /// Output path; stdout when omitted.
        #[arg(short, long)]
        output: Option<String>,
        /// Also write the random transform to this path.
        #[arg(long)]
        save_transform: Option<String>,
    },
    /// Relabel by a ring automorphism given in cycle notation, e.g. `(2 3)`.
    Perm {
        data: String,
        sigma: String,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Evaluate the columns of an invariant-spec (or census) file.
    Invariants { data: String, spec: String },
    /// Build known categories.
    Catalog {
        #[command(subcommand)]
        action: CatalogCommand,
    },
}

#[derive(Subcommand, Debug)]
pub enum CatalogCommand {
    /// Emit a skeletal-data file.
    Build(BuildArgs),
    /// Every catalog datum on a bundled ring, with its census name.
    List { ring: String },
}

#[derive(Args, Debug)]
pub struct BuildArgs {
    pub family: FamilyKind,
    /// Group order for `pointed` and `ty`.
    #[arg(long)]
    pub n: Option<u32>,
    /// Cocycle class for `pointed`.
    #[arg(long, default_value_t = 0)]
    pub q: u32,
    /// F-class for `fib` and `ising`.
    #[arg(long, default_value_t = 1)]
    pub class: u32,
    /// Bicharacter index for `ty`.
    #[arg(long, default_value_t = 1)]
    pub bichar: u32,
    /// Sign of the `ty` normalization.
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    pub sign: i32,
    /// 1-based index into the solved braidings.
    #[arg(long)]
    pub braiding: Option<usize>,
    /// 1-based index into the solved pivotal structures.
    #[arg(long)]
    pub pivotal: Option<usize>,
    #[arg(short, long)]
    pub output: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    Pointed,
    Fib,
    Ising,
    Ty,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CheckKind {
    Vacuum,
    Pentagon,
    Hexagon,
    Pivotal,
}

impl CheckKind {
    fn name(self) -> &'static str {
        match self {
            CheckKind::Vacuum => "vacuum",
            CheckKind::Pentagon => "pentagon",
            CheckKind::Hexagon => "hexagon",
            CheckKind::Pivotal => "pivotal",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Failed,
    ParseError,
    NotFound,
    Ambiguous,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Failed => 1,
            Status::ParseError => 2,
            Status::NotFound => 3,
            Status::Ambiguous => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Failed => "failed",
            Status::ParseError => "parse-error",
            Status::NotFound => "not-found",
            Status::Ambiguous => "ambiguous",
        }
    }

    pub fn from_name(s: &str) -> Option<Status> {
        [Status::Ok, Status::Failed, Status::ParseError, Status::NotFound, Status::Ambiguous]
            .into_iter()
            .find(|x| x.name() == s)
    }

    fn of_error(e: &Error) -> Status {
        match e {
            Error::Parse { .. }
            | Error::InvalidData(_)
            | Error::InvalidRing(_)
            | Error::InvalidArgument(_)
            | Error::Io(_) => Status::ParseError,
            Error::RingMismatch(_) => Status::NotFound,
            _ => Status::Failed,
        }
    }
}

/// Result of one command: a text report, a JSON report carrying `status`,
/// and optionally a data document to emit.
#[derive(Debug, Clone)]
pub struct CommandOutcome {
    pub text: String,
    pub json: Value,
    pub emitted: Option<Emitted>,
}

#[derive(Debug, Clone)]
pub struct Emitted {
    pub path: Option<String>,
    pub body: String,
}

impl CommandOutcome {
    fn new(status: Status, text: String, mut json: Value) -> Self {
        json["status"] = Value::String(status.name().into());
        CommandOutcome {
            text,
            json,
            emitted: None,
        }
    }

    fn from_error(command: &str, e: &Error) -> Self {
        let status = Status::of_error(e);
        CommandOutcome::new(
            status,
            format!("error: {e}\n"),
            json!({ "command": command, "error": e.to_string() }),
        )
    }

    pub fn status(&self) -> Status {
        self.json["status"]
            .as_str()
            .and_then(Status::from_name)
            .unwrap_or(Status::Failed)
    }

    pub fn code(&self) -> i32 {
        self.status().code()
    }
}

/// What the process should print and return.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rendered {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses arguments, runs the command and renders its outcome. Output files
/// named by `-o` are written here; `-` as an input path reads `stdin`.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Rendered
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Rendered {
                    code: Status::ParseError.code(),
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Rendered {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let mut outcome = execute(&cli, stdin);
    let code = outcome.code();
    let report = if cli.json {
        serde_json::to_string_pretty(&outcome.json).expect("report serializes") + "\n"
    } else {
        outcome.text.clone()
    };
    let is_error = outcome.json.get("error").is_some();
    let (stdout, stderr) = match outcome.emitted.take() {
        _ if is_error && !cli.json => (String::new(), report),
        None => (report, String::new()),
        Some(Emitted { path: None, body }) => (body, report),
        Some(Emitted { path: Some(p), body }) => match std::fs::write(&p, body) {
            Ok(()) => (report, String::new()),
            Err(e) => {
                let failed = CommandOutcome::from_error("write", &Error::Io(format!("{p}: {e}")));
                return Rendered {
                    code: failed.code(),
                    stdout: String::new(),
                    stderr: failed.text,
                };
            }
        },
    };
    Rendered {
        code,
        stdout,
        stderr,
    }
}

/// Runs a parsed command.
pub fn execute(cli: &Cli, stdin: &mut dyn Read) -> CommandOutcome {
    let name = command_name(&cli.command);
    let result = match &cli.command {
        Command::Verify { data, checks } => load_data(cli, data, stdin).map(|d| verify(cli, &d, checks)),
        Command::Identify { data, census } => {
            load_data(cli, data, stdin).and_then(|d| identify(&d, census.as_deref()))
        }
        Command::Report { data } => load_data(cli, data, stdin).and_then(|d| report(cli, &d)),
        Command::Autos { ring } => load_ring(ring, stdin).map(|r| autos(&r)),
        Command::Gauge {
            data,
            transform,
            output,
            save_transform,
        } => load_data_raw(data, stdin).and_then(|d| {
            gauge(cli, &d, transform.as_deref(), output.clone(), save_transform.as_deref())
        }),
        Command::Perm { data, sigma, output } => {
            load_data(cli, data, stdin).and_then(|d| perm(&d, sigma, output.clone()))
        }
        Command::Invariants { data, spec } => load_data(cli, data, stdin).and_then(|d| {
            let table = CensusTable::from_json(&read_input(spec, &mut std::io::empty())?)?;
            invariants(cli, &d, &table)
        }),
        Command::Catalog { action } => match action {
            CatalogCommand::Build(args) => catalog_build(cli, args),
            CatalogCommand::List { ring } => catalog_list(cli, ring),
        },
    };
    result.unwrap_or_else(|e| CommandOutcome::from_error(name, &e))
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Verify { .. } => "verify",
        Command::Identify { .. } => "identify",
        Command::Report { .. } => "report",
        Command::Autos { .. } => "autos",
        Command::Gauge { .. } => "gauge",
        Command::Perm { .. } => "perm",
        Command::Invariants { .. } => "invariants",
        Command::Catalog { .. } => "catalog",
    }
}

fn read_input(path: &str, stdin: &mut dyn Read) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))
    }
}

fn load_data_raw(path: &str, stdin: &mut dyn Read) -> Result<SkeletalData> {
    SkeletalData::from_json(&read_input(path, stdin)?)
}

/// Reads data and applies the `--gauge-seed` pre-transform if requested.
fn load_data(cli: &Cli, path: &str, stdin: &mut dyn Read) -> Result<SkeletalData> {
    let d = load_data_raw(path, stdin)?;
    match cli.gauge_seed {
        None => Ok(d),
        Some(seed) => {
            let g = random_gauge(d.ring(), seed, gauge_order(cli)?);
            apply_gauge(&d, &g)
        }
    }
}

fn load_ring(spec: &str, stdin: &mut dyn Read) -> Result<FusionRing> {
    if spec == "-" || Path::new(spec).is_file() {
        return FusionRing::from_json(&read_input(spec, stdin)?);
    }
    data::ring(spec).ok_or_else(|| {
        Error::InvalidArgument(format!(
            "`{spec}` is neither a ring file nor a bundled ring ({})",
            data::ring_names().join(", ")
        ))
    })
}

fn gauge_order(cli: &Cli) -> Result<u32> {
    match cli.max_order {
        Some(0) => Err(Error::InvalidArgument("--max-order must be positive".into())),
        Some(m) => Ok(m),
        None => Ok(DEFAULT_GAUGE_ORDER),
    }
}

fn num(c: &Cyclo, digits: u32) -> String {
    c.format_numeric(digits)
}

fn report_json(r: &VerificationReport) -> Value {
    serde_json::to_value(r).expect("report serializes")
}

fn describe_report(out: &mut String, r: &VerificationReport) {
    if r.pass {
        let _ = writeln!(out, "{:<9} pass", r.check);
        return;
    }
    let _ = writeln!(out, "{:<9} FAIL ({} failing equations)", r.check, r.failures);
    for c in r.counterexamples.iter().take(SHOWN_COUNTEREXAMPLES) {
        let _ = writeln!(out, "  {} {:?}: {} != {}", c.equation, c.indices, c.lhs, c.rhs);
    }
    if r.failures > SHOWN_COUNTEREXAMPLES {
        let _ = writeln!(out, "  ... {} more", r.failures - SHOWN_COUNTEREXAMPLES);
    }
}

fn verify(_cli: &Cli, d: &SkeletalData, requested: &[CheckKind]) -> CommandOutcome {
    let explicit = !requested.is_empty();
    let mut wanted: Vec<CheckKind> = if explicit {
        requested.to_vec()
    } else {
        let mut all = vec![CheckKind::Vacuum, CheckKind::Pentagon];
        if d.has_braiding() {
            all.push(CheckKind::Hexagon);
        }
        if d.pivotal().is_some() {
            all.push(CheckKind::Pivotal);
        }
        all
    };
    wanted.sort();
    wanted.dedup();

    let mut text = String::new();
    let mut reports = Vec::new();
    let mut skipped = Vec::new();
    let mut ok = true;
    let mut pentagon: Option<bool> = None;
    for k in wanted {
        let r = match k {
            CheckKind::Vacuum => Ok(check_vacuum(d)),
            CheckKind::Pentagon => Ok(check_pentagon(d)),
            CheckKind::Hexagon | CheckKind::Pivotal => {
                let pent = *pentagon.get_or_insert_with(|| check_pentagon(d).pass);
                if !pent {
                    Err("the pentagon equations fail".to_string())
                } else if k == CheckKind::Hexagon {
                    hexagon_report(d).map_err(|e| e.to_string())
                } else {
                    pivotal_report(d).map_err(|e| e.to_string())
                }
            }
        };
        match r {
            Ok(r) => {
                if k == CheckKind::Pentagon {
                    pentagon = Some(r.pass);
                }
                ok &= r.pass;
                describe_report(&mut text, &r);
                reports.push(report_json(&r));
            }
            Err(reason) => {
                ok = false;
                let _ = writeln!(text, "{:<9} not checked: {reason}", k.name());
                skipped.push(json!({ "check": k.name(), "reason": reason }));
            }
        }
    }
    let status = if ok { Status::Ok } else { Status::Failed };
    CommandOutcome::new(
        status,
        text,
        json!({ "command": "verify", "checks": reports, "skipped": skipped }),
    )
}

fn find_census(d: &SkeletalData, census: Option<&str>) -> Result<Option<CensusTable>> {
    match census {
        Some(spec) if Path::new(spec).is_file() => Ok(Some(CensusTable::from_path(Path::new(spec))?)),
        Some(spec) => match data::census(spec) {
            Some(t) => Ok(Some(t?)),
            None => Err(Error::InvalidArgument(format!(
                "`{spec}` is neither a census file nor a bundled census ({})",
                data::census_names().join(", ")
            ))),
        },
        None => {
            for name in data::census_names() {
                if data::ring(name).as_ref() == Some(d.ring()) {
                    return data::census(name).expect("listed").map(Some);
                }
            }
            Ok(None)
        }
    }
}

fn identify(d: &SkeletalData, census: Option<&str>) -> Result<CommandOutcome> {
    let Some(table) = find_census(d, census)? else {
        return Ok(CommandOutcome::new(
            Status::NotFound,
            "no bundled census table covers this fusion ring\n".into(),
            json!({ "command": "identify", "matches": [], "reason": "no census for this ring" }),
        ));
    };
    if d.ring() != table.ring() {
        return Ok(CommandOutcome::new(
            Status::NotFound,
            "the census table is for a different fusion ring\n".into(),
            json!({ "command": "identify", "matches": [], "reason": "ring mismatch" }),
        ));
    }
    let vac = check_vacuum(d);
    if !vac.pass {
        let mut text = String::from(
            "identification needs vacuum F- and R-symbols equal to 1, which this data violates\n",
        );
        describe_report(&mut text, &vac);
        return Ok(CommandOutcome::new(
            Status::Failed,
            text,
            json!({ "command": "identify", "matches": [], "vacuum": report_json(&vac) }),
        ));
    }
    let values = table.evaluate(d)?;
    let matches = match_census(d, &table)?;
    let status = match matches.len() {
        0 => Status::NotFound,
        1 => Status::Ok,
        _ => Status::Ambiguous,
    };
    let text = match status {
        Status::Ok => format!("{}\n", matches[0]),
        Status::NotFound => {
            let mut t = format!("no row of {} matches\n", table.code());
            for (c, v) in table.columns().iter().zip(&values) {
                let _ = writeln!(t, "  {} = {v}", c.name);
            }
            t
        }
        _ => format!("ambiguous: {}\n", matches.join(", ")),
    };
    let columns: Vec<Value> = table
        .columns()
        .iter()
        .zip(&values)
        .map(|(c, v)| json!({ "name": c.name, "value": v.to_json() }))
        .collect();
    Ok(CommandOutcome::new(
        status,
        text,
        json!({ "command": "identify", "census": table.code(), "matches": matches, "columns": columns }),
    ))
}

fn report(cli: &Cli, d: &SkeletalData) -> Result<CommandOutcome> {
    let digits = cli.digits;
    let pentagon = check_pentagon(d).pass;
    let flags = classify_given_pentagon(d, pentagon);
    let mut text = String::new();
    let _ = writeln!(text, "rank      {}", d.ring().rank());
    let _ = writeln!(text, "pentagon  {}", if pentagon { "pass" } else { "FAIL" });
    for (name, on) in [
        ("pivotal", flags.pivotal),
        ("braided", flags.braided),
        ("spherical", flags.spherical),
        ("ribbon", flags.ribbon),
        ("modular", flags.modular),
    ] {
        let _ = writeln!(text, "{name:<9} {}", if on { "yes" } else { "no" });
    }
    let unitary = serde_json::to_value(flags.unitary).expect("serializes");
    let _ = writeln!(text, "unitary   {}", unitary.as_str().unwrap_or("?"));

    let dims_json = if flags.pivotal {
        let dims = quantum_dims(d)?;
        let _ = writeln!(text, "quantum dimensions");
        for (a, x) in dims.iter().enumerate() {
            let _ = writeln!(text, "  d_{} = {x}  ({})", a + 1, num(x, digits));
        }
        Value::Array(
            dims.iter()
                .enumerate()
                .map(|(a, x)| json!({ "a": a + 1, "exact": x.to_string(), "numeric": num(x, digits) }))
                .collect(),
        )
    } else {
        let _ = writeln!(text, "quantum dimensions: not applicable (no valid pivotal structure)");
        Value::Null
    };

    let s_json = if flags.ribbon {
        let s = s_matrix(d)?;
        let _ = writeln!(text, "S-matrix");
        for row in &s {
            let cells: Vec<String> = row.iter().map(|x| num(x, digits)).collect();
            let _ = writeln!(text, "  [{}]", cells.join(", "));
        }
        let det = crate::cyclo::det(&s)?;
        let _ = writeln!(text, "  det = {det}");
        json!({
            "exact": s.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "numeric": s.iter().map(|r| r.iter().map(|x| num(x, digits)).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "det": det.to_string(),
        })
    } else {
        let _ = writeln!(text, "S-matrix: not applicable (needs braided spherical data)");
        Value::Null
    };
    let status = if pentagon { Status::Ok } else { Status::Failed };
    Ok(CommandOutcome::new(
        status,
        text,
        json!({
            "command": "report",
            "rank": d.ring().rank(),
            "pentagon": pentagon,
            "flags": flags,
            "quantum_dims": dims_json,
            "s_matrix": s_json,
        }),
    ))
}

fn autos(ring: &FusionRing) -> CommandOutcome {
    let group = ring.automorphisms();
    let perms: Vec<String> = group.iter().map(|p| p.to_string()).collect();
    let mut text = format!("{} automorphism(s)\n", perms.len());
    for p in &perms {
        let _ = writeln!(text, "  {p}");
    }
    CommandOutcome::new(
        Status::Ok,
        text,
        json!({ "command": "autos", "count": perms.len(), "automorphisms": perms }),
    )
}

fn gauge(
    cli: &Cli,
    d: &SkeletalData,
    transform: Option<&str>,
    output: Option<String>,
    save_transform: Option<&str>,
) -> Result<CommandOutcome> {
    let g = match (transform, cli.gauge_seed) {
        (Some(path), _) => GaugeTransform::from_json(&read_input(path, &mut std::io::empty())?)?,
        (None, Some(seed)) => random_gauge(d.ring(), seed, gauge_order(cli)?),
        (None, None) => {
            return Err(Error::InvalidArgument(
                "give --gauge-seed or --transform".into(),
            ))
        }
    };
    if let Some(path) = save_transform {
        std::fs::write(path, g.to_json() + "\n")?;
    }
    let out = apply_gauge(d, &g)?;
    let mut o = CommandOutcome::new(
        Status::Ok,
        format!("applied a gauge transform with {} nontrivial value(s)\n", g.values().len()),
        json!({ "command": "gauge", "nontrivial_values": g.values().len() }),
    );
    o.emitted = Some(Emitted {
        path: output,
        body: out.to_json() + "\n",
    });
    Ok(o)
}

fn perm(d: &SkeletalData, sigma: &str, output: Option<String>) -> Result<CommandOutcome> {
    let p = Permutation::parse_cycles(sigma, d.ring().rank())?;
    let out = apply_permutation(d, &p)?;
    let mut o = CommandOutcome::new(
        Status::Ok,
        format!("relabeled by {p}\n"),
        json!({ "command": "perm", "permutation": p.to_string() }),
    );
    o.emitted = Some(Emitted {
        path: output,
        body: out.to_json() + "\n",
    });
    Ok(o)
}

fn invariants(cli: &Cli, d: &SkeletalData, table: &CensusTable) -> Result<CommandOutcome> {
    if d.ring() != table.ring() {
        return Err(Error::RingMismatch(
            "data and invariant spec use different fusion rings".into(),
        ));
    }
    let group = d.ring().automorphisms();
    let mut text = String::new();
    let mut cols = Vec::new();
    for c in table.columns() {
        let v = evaluate_item_with(&c.item, d, &group)?;
        let n = v.format_numeric(cli.digits);
        let _ = writeln!(text, "{} = {v}  ({n})", c.name);
        cols.push(json!({ "name": c.name, "value": v.to_json(), "numeric": n }));
    }
    Ok(CommandOutcome::new(
        Status::Ok,
        text,
        json!({ "command": "invariants", "columns": cols }),
    ))
}

fn catalog_family(args: &BuildArgs) -> Result<Family> {
    let need_n = || {
        args.n
            .ok_or_else(|| Error::InvalidArgument("this family needs --n".into()))
    };
    Ok(match args.family {
        FamilyKind::Pointed => Family::Pointed {
            n: need_n()?,
            q: args.q,
        },
        FamilyKind::Fib => Family::Fib { class: args.class },
        FamilyKind::Ising => Family::Ising { class: args.class },
        FamilyKind::Ty => Family::Ty {
            n: need_n()?,
            bichar: args.bichar,
            sign: args.sign,
        },
    })
}

fn catalog_build(cli: &Cli, args: &BuildArgs) -> Result<CommandOutcome> {
    let spec = CatalogSpec {
        family: catalog_family(args)?,
        braiding: args.braiding,
        pivotal: args.pivotal,
    };
    let d = spec.build(cli.max_order.unwrap_or(DEFAULT_BRAID_ORDER))?;
    let mut o = CommandOutcome::new(
        Status::Ok,
        format!("built {}\n", spec.family),
        json!({ "command": "catalog build", "spec": spec }),
    );
    o.emitted = Some(Emitted {
        path: args.output.clone(),
        body: d.to_json() + "\n",
    });
    Ok(o)
}

fn catalog_list(cli: &Cli, ring: &str) -> Result<CommandOutcome> {
    let order = cli.max_order.unwrap_or(DEFAULT_BRAID_ORDER);
    let table = data::census(ring).transpose()?;
    let mut text = String::new();
    let mut entries = Vec::new();
    for (spec, d) in enumerate_ring(ring, order)? {
        let names = match &table {
            Some(t) => match_census(&d, t)?,
            None => Vec::new(),
        };
        let label = |x: Option<usize>| x.map_or("-".to_string(), |k| k.to_string());
        let _ = writeln!(
            text,
            "{}  braiding {}  pivotal {}  {}",
            spec.family,
            label(spec.braiding),
            label(spec.pivotal),
            names.join(", ")
        );
        entries.push(json!({ "spec": spec, "census": names }));
    }
    Ok(CommandOutcome::new(
        Status::Ok,
        text,
        json!({ "command": "catalog list", "entries": entries }),
    ))
}
