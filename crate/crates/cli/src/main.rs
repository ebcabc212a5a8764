mod config;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use divtop::harness::{self, Outcome, RunReport, StabilityKind};
use divtop::symbolic::{
    compactness_verdict_symbolic, noetherian_report_symbolic, rational_hausdorff_report, window_snapshot,
    CHAIN_LENGTH_LIMIT,
};
use divtop::{
    annihilator, build_topology, check_connectivity, check_separation_bounded, is_pseudo_simple, is_uniserial,
    module_annihilator, satisfies_star, sharp_elements, standard_verdicts, to_dot, to_json, Axiom, FiniteModule,
    ModuleSpec, Property, PropertyVerdict, SymbolicFamily, TopologySnapshot, TrivialExtension, CLASS_BOUND,
};

use config::{Format, RunConfig};

const EXIT_FAILURES: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_FLAGGED: u8 = 3;

#[derive(Parser)]
#[command(name = "divtop", version, about = "Divisor topology of modules: inspect, export, check, verify")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print nongenerators, associate classes and annihilators.
    Inspect {
        #[arg(value_parser = parse_spec)]
        spec: ModuleSpec,
    },
    /// Print the divisor topology as DOT or JSON.
    Topology {
        #[arg(value_parser = parse_spec)]
        spec: ModuleSpec,
        #[arg(long, value_enum, default_value = "dot")]
        format: FormatArg,
        /// Class bound for the T3/T4/T5 subset searches in JSON verdicts.
        #[arg(long, default_value_t = CLASS_BOUND)]
        class_bound: usize,
    },
    /// Decide one topological property and print the verdict with a witness.
    Check {
        #[arg(value_parser = parse_spec)]
        spec: ModuleSpec,
        #[arg(long, value_parser = parse_property)]
        property: Property,
        #[arg(long, default_value_t = CLASS_BOUND)]
        class_bound: usize,
    },
    /// Run theorem sweeps and write a report.
    Verify {
        /// JSON run configuration.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Comma-separated theorem ids (default: all registered).
        #[arg(long, value_delimiter = ',')]
        theorems: Vec<String>,
        #[arg(long)]
        max_n: Option<u64>,
        #[arg(long)]
        max_order: Option<u64>,
        #[arg(long)]
        trivial_bound: Option<u64>,
        #[arg(long)]
        pair_bound: Option<u64>,
        #[arg(long)]
        class_bound: Option<usize>,
        /// Stability sweeps to run in addition to the theorems.
        #[arg(long, value_enum, value_delimiter = ',')]
        stability: Vec<StabilityArg>,
        /// Write the JSON report here (default: `<output_dir>/report.json` when configured).
        #[arg(long)]
        out: Option<PathBuf>,
        /// List registered theorem ids and exit.
        #[arg(long)]
        list: bool,
    },
    /// Write topology exports for a module into a directory.
    Export {
        #[arg(value_parser = parse_spec)]
        spec: ModuleSpec,
        #[arg(long)]
        out_dir: PathBuf,
        #[arg(long, value_enum, value_delimiter = ',', default_values_t = [FormatArg::Dot, FormatArg::Json])]
        formats: Vec<FormatArg>,
        #[arg(long, default_value_t = CLASS_BOUND)]
        class_bound: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Dot,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StabilityArg {
    Submodule,
    Quotient,
    DirectSumNoncyclic,
    DirectSumCyclic,
}

impl From<StabilityArg> for StabilityKind {
    fn from(s: StabilityArg) -> Self {
        match s {
            StabilityArg::Submodule => StabilityKind::Submodule,
            StabilityArg::Quotient => StabilityKind::Quotient,
            StabilityArg::DirectSumNoncyclic => StabilityKind::DirectSumNoncyclic,
            StabilityArg::DirectSumCyclic => StabilityKind::DirectSumCyclic,
        }
    }
}

fn parse_spec(s: &str) -> Result<ModuleSpec, String> {
    s.parse().map_err(|e: divtop::Error| e.to_string())
}

fn parse_property(s: &str) -> Result<Property, String> {
    Property::parse(s).ok_or_else(|| {
        let names: Vec<&str> = Property::ALL.iter().map(|p| p.name()).collect();
        format!("unknown property `{s}` (expected one of {})", names.join(", "))
    })
}

/// A command failure and the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn runtime(message: impl ToString) -> Self {
        Self {
            code: EXIT_FAILURES,
            message: message.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Inspect { spec } => inspect(&spec).map(|s| print_ok(&s)),
        Command::Topology {
            spec,
            format,
            class_bound,
        } => snapshot(&spec).map(|snap| print_ok(&render(&snap, format, class_bound))),
        Command::Check {
            spec,
            property,
            class_bound,
        } => check(&spec, property, class_bound).map(|v| print_ok(&v)),
        Command::Verify {
            config,
            theorems,
            max_n,
            max_order,
            trivial_bound,
            pair_bound,
            class_bound,
            stability,
            out,
            list,
        } => {
            if list {
                for t in harness::registry() {
                    println!("{:<22} {}", t.id, t.statement);
                }
                return ExitCode::SUCCESS;
            }
            let overrides = Overrides {
                theorems,
                max_n,
                max_order,
                trivial_bound,
                pair_bound,
                class_bound,
            };
            verify(config.as_deref(), overrides, &stability, out)
        }
        Command::Export {
            spec,
            out_dir,
            formats,
            class_bound,
        } => export(&spec, &out_dir, &formats, class_bound).map(|_| 0),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn print_ok(s: &str) -> u8 {
    print!("{s}");
    if !s.ends_with('\n') {
        println!();
    }
    0
}

fn inspect(spec: &ModuleSpec) -> Result<String, Failure> {
    let mut out = String::new();
    match spec {
        ModuleSpec::Trivial { n, m } => {
            let ring = TrivialExtension::new(*n, *m).map_err(Failure::runtime)?;
            let _ = writeln!(out, "ring: {ring} ({spec})");
            let _ = writeln!(out, "order: {}", ring.order());
            let _ = writeln!(out, "pseudo simple ring: {}", ring.is_pseudo_simple_ring());
            let _ = writeln!(out, "local criterion: {}", ring.local_criterion());
            if let Some((a, x)) = ring.pseudo_simple_witness() {
                let _ = writeln!(out, "non-maximal annihilator at: ({a},{x})");
            }
        }
        ModuleSpec::Symbolic(f) => {
            let snap = window_snapshot(f).map_err(Failure::runtime)?;
            let _ = writeln!(out, "module: {} ({spec})", f.name());
            let _ = writeln!(out, "window classes: {}", snap.len());
            let shown: Vec<String> = snap.labels(0..snap.len().min(12));
            let more = if snap.len() > 12 { ", ..." } else { "" };
            let _ = writeln!(out, "classes: {}{more}", shown.join(", "));
            let _ = writeln!(out, "basic opens exact: {}", snap.opens_exact);
            let _ = writeln!(out, "closures truncated: {}", snap.closures_truncated);
            let c = compactness_verdict_symbolic(f).map_err(Failure::runtime)?;
            let _ = writeln!(out, "compact: {}", c.verdict.holds);
            let _ = writeln!(out, "simple submodules: {}", c.simple_submodule_count);
        }
        _ => {
            let m = finite(spec)?;
            let snap = build_topology(&m);
            let sharp = sharp_elements(&m);
            let _ = writeln!(out, "module: {m} ({spec})");
            let _ = writeln!(out, "ring: {}", m.ring());
            let _ = writeln!(out, "order: {}", m.order());
            let _ = writeln!(out, "ann(M): {}", module_annihilator(&m));
            let _ = writeln!(out, "pseudo simple: {}", is_pseudo_simple(&m));
            let _ = writeln!(out, "(*)-condition: {}", satisfies_star(&m));
            let _ = writeln!(out, "uniserial: {}", is_uniserial(&m));
            let list: Vec<String> = sharp.iter().map(|e| e.to_string()).collect();
            let _ = writeln!(out, "M# ({}): {}", sharp.len(), list.join(" "));
            let _ = writeln!(out, "classes ({}):", snap.len());
            for c in &snap.classes {
                let members = &snap.members[c.index];
                let ms: Vec<String> = members.iter().map(|e| e.to_string()).collect();
                let _ = writeln!(
                    out,
                    "  {:<10} ann {:<6} members {}",
                    c.to_string(),
                    annihilator(&m, &members[0]).to_string(),
                    ms.join(" ")
                );
            }
        }
    }
    Ok(out)
}

fn finite(spec: &ModuleSpec) -> Result<FiniteModule, Failure> {
    match spec.finite_module() {
        Ok(Some(m)) => Ok(m),
        Ok(None) => Err(Failure::usage(format!("`{spec}` is not a finite module"))),
        Err(e) => Err(Failure::runtime(e)),
    }
}

fn snapshot(spec: &ModuleSpec) -> Result<TopologySnapshot, Failure> {
    match spec {
        ModuleSpec::Trivial { .. } => Err(Failure::usage(format!(
            "`{spec}` names a ring; the divisor topology needs a module spec"
        ))),
        ModuleSpec::Symbolic(f) => window_snapshot(f).map_err(Failure::runtime),
        _ => Ok(build_topology(&finite(spec)?)),
    }
}

fn render(snap: &TopologySnapshot, format: FormatArg, class_bound: usize) -> String {
    match format {
        FormatArg::Dot => to_dot(snap),
        FormatArg::Json => to_json(snap, &standard_verdicts(snap, class_bound)),
    }
}

fn describe(v: &PropertyVerdict, snap: Option<&TopologySnapshot>) -> String {
    let mut s = format!("{}: {}", v.property, v.holds);
    if let Some(w) = snap.and_then(|snap| v.describe_witness(snap)) {
        let _ = write!(s, "; witness {w}");
    }
    if let Some(n) = &v.note {
        let _ = write!(s, "; note: {n}");
    }
    s
}

fn check(spec: &ModuleSpec, property: Property, class_bound: usize) -> Result<String, Failure> {
    if let ModuleSpec::Symbolic(f) = spec {
        if let Some(v) = symbolic_verdict(f, property)? {
            return Ok(describe(&v, None));
        }
    }
    let snap = snapshot(spec)?;
    let verdict = if let Some(axiom) = Axiom::from_property(property) {
        check_separation_bounded(&snap, axiom, class_bound).map_err(Failure::runtime)?
    } else {
        standard_verdicts(&snap, class_bound)
            .into_iter()
            .find(|v| v.property == property)
            .expect("every property has a standard verdict")
    };
    let mut v = verdict;
    if let ModuleSpec::Symbolic(f) = spec {
        v = v.with_note(format!("computed on the finite window of {}", f.name()));
    }
    Ok(describe(&v, Some(&snap)))
}

/// Properties of the whole infinite space that have closed-form answers.
fn symbolic_verdict(f: &SymbolicFamily, property: Property) -> Result<Option<PropertyVerdict>, Failure> {
    Ok(match property {
        Property::Compact => Some(compactness_verdict_symbolic(f).map_err(Failure::runtime)?.verdict),
        Property::Noetherian => Some(noetherian_report_symbolic(f, CHAIN_LENGTH_LIMIT).map_err(Failure::runtime)?),
        Property::T2 => match f {
            SymbolicFamily::Rationals { bound } => {
                let r = rational_hausdorff_report(*bound).map_err(Failure::runtime)?;
                let mut v = if r.holds {
                    PropertyVerdict::holds(Property::T2)
                } else {
                    PropertyVerdict::fails(Property::T2, None)
                };
                if let Some((a, b, z)) = r.witness {
                    v = v.with_note(format!(
                        "{a},{b} share {z} (window enlarged to bound {})",
                        r.enlarged_bound
                    ));
                }
                Some(v)
            }
            _ => None,
        },
        Property::Connected | Property::PathConnected | Property::Ultraconnected => {
            let snap = window_snapshot(f).map_err(Failure::runtime)?;
            let c = check_connectivity(&snap);
            let v = match property {
                Property::Connected => c.connected,
                Property::PathConnected => c.path_connected,
                _ => c.ultraconnected,
            };
            Some(v.with_note(format!("computed on the finite window of {}", f.name())))
        }
        _ => None,
    })
}

struct Overrides {
    theorems: Vec<String>,
    max_n: Option<u64>,
    max_order: Option<u64>,
    trivial_bound: Option<u64>,
    pair_bound: Option<u64>,
    class_bound: Option<usize>,
}

/// Precedence: built-in defaults, then the config file, then
/// `DIVTOP_MAX_ORDER`, then command-line flags.
fn resolve_config(path: Option<&Path>, o: Overrides) -> Result<RunConfig, Failure> {
    let mut c = match path {
        Some(p) => RunConfig::load(p).map_err(Failure::usage)?,
        None => RunConfig::default(),
    };
    c.apply_env().map_err(Failure::usage)?;
    if !o.theorems.is_empty() {
        c.theorems = o.theorems;
    }
    c.max_n = o.max_n.unwrap_or(c.max_n);
    c.max_order = o.max_order.unwrap_or(c.max_order);
    c.trivial_bound = o.trivial_bound.unwrap_or(c.trivial_bound);
    c.pair_bound = o.pair_bound.unwrap_or(c.pair_bound);
    c.class_bound = o.class_bound.unwrap_or(c.class_bound);
    c.validate().map_err(Failure::usage)?;
    let known = harness::theorem_ids();
    if let Some(bad) = c.theorems.iter().find(|t| !known.contains(&t.as_str())) {
        return Err(Failure::usage(divtop::Error::UnknownTheorem(bad.clone()).to_string()));
    }
    Ok(c)
}

fn verify(
    config: Option<&Path>,
    overrides: Overrides,
    stability: &[StabilityArg],
    out: Option<PathBuf>,
) -> Result<u8, Failure> {
    let c = resolve_config(config, overrides)?;
    let ids: Vec<String> = if c.theorems.is_empty() && stability.is_empty() {
        harness::theorem_ids().into_iter().map(String::from).collect()
    } else {
        c.theorems.clone()
    };
    let bounds = c.bounds();
    let options = c.options();
    let mut reports = Vec::new();
    for id in &ids {
        let family = harness::default_family(id, &bounds).map_err(Failure::runtime)?;
        let r = harness::verify_with(id, &family, &options).map_err(Failure::runtime)?;
        print_summary(&r);
        reports.push(r);
    }
    for &s in stability {
        let family = harness::FamilySpec::AbelianUpTo {
            max_order: c.max_order.min(c.submodule_bound),
        };
        let family = match s {
            StabilityArg::DirectSumCyclic | StabilityArg::DirectSumNoncyclic => {
                harness::FamilySpec::PairsUpTo { max_order: c.pair_bound }
            }
            _ => family,
        };
        let r = harness::verify_stability(s.into(), &family).map_err(Failure::runtime)?;
        print_summary(&r);
        reports.push(r);
    }
    let run = RunReport::new(reports);
    let target = out.or_else(|| c.output_dir.as_ref().map(|d| d.join("report.json")));
    if let Some(path) = target {
        if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            std::fs::create_dir_all(dir).map_err(Failure::runtime)?;
        }
        let json = serde_json::to_string_pretty(&run).expect("report serializes");
        std::fs::write(&path, json).map_err(Failure::runtime)?;
        println!("report written to {}", path.display());
    }
    if c.formats.contains(&Format::Dot) {
        if let Some(dir) = &c.output_dir {
            write_failure_graphs(&run, dir)?;
        }
    }
    Ok(match run.status() {
        Outcome::Fail => EXIT_FAILURES,
        Outcome::Flagged => EXIT_FLAGGED,
        _ => 0,
    })
}

fn print_summary(r: &harness::SweepReport) {
    let status = match r.status() {
        Outcome::Fail => "FAIL",
        Outcome::Flagged => "FLAGGED",
        _ => "PASS",
    };
    println!(
        "{:<24} {:<7} instances={} passed={} failed={} flagged={} out_of_hypothesis={} ({} ms) [{}]",
        r.theorem.id,
        status,
        r.instances,
        r.passed,
        r.failed,
        r.flagged_count,
        r.out_of_hypothesis_count,
        r.wall_time_ms,
        r.family
    );
    for f in r.failures.iter().take(10) {
        println!(
            "    fail {}: {}",
            f.instance,
            f.witness.as_deref().unwrap_or("(no witness)")
        );
    }
    for f in &r.flagged {
        println!("    flagged {}: {}", f.instance, f.note.as_deref().unwrap_or(""));
    }
}

/// DOT graphs of the finite modules behind failures, for inspection.
fn write_failure_graphs(run: &RunReport, dir: &Path) -> Result<(), Failure> {
    for r in &run.reports {
        for f in &r.failures {
            if let Ok(spec) = f.instance.parse::<ModuleSpec>() {
                if let Ok(snap) = snapshot(&spec) {
                    std::fs::create_dir_all(dir).map_err(Failure::runtime)?;
                    let path = dir.join(format!("{}-{}.dot", r.theorem.id, file_slug(&spec)));
                    std::fs::write(path, to_dot(&snap)).map_err(Failure::runtime)?;
                }
            }
        }
    }
    Ok(())
}

fn file_slug(spec: &ModuleSpec) -> String {
    spec.to_string()
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect()
}

fn export(spec: &ModuleSpec, dir: &Path, formats: &[FormatArg], class_bound: usize) -> Result<(), Failure> {
    let snap = snapshot(spec)?;
    std::fs::create_dir_all(dir).map_err(Failure::runtime)?;
    let slug = file_slug(spec);
    for &f in formats {
        let ext = match f {
            FormatArg::Dot => "dot",
            FormatArg::Json => "json",
        };
        let path = dir.join(format!("{slug}.{ext}"));
        std::fs::write(&path, render(&snap, f, class_bound)).map_err(Failure::runtime)?;
        println!("{}", path.display());
    }
    Ok(())
}
