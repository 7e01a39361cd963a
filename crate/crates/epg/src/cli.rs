//! Command-line front end behind the `epg` binary.
//!
//! Exit codes: 0 success, 1 computation error, 2 usage error, 3 when
//! `verify` or `sweep` finds a closed-form mismatch (skipped rows and
//! flagged anomalies do not fail).

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Error;
use crate::graph::{
    enhanced_power_graph_with, export, proper_enhanced_power_graph_from, EpgOptions, Graph,
};
use crate::group::{
    load_cayley_table, nilpotent_profile, parse_group_spec, Atom, Group, GroupSpec,
};
use crate::metrics::{
    dominating_vertices, greedy_domination_upper, metric_report, vertex_connectivity_bounded,
    MetricReport,
};
use crate::num::partitions;
use crate::oracle::{connectivity_bounds, verify, VerificationReport, VerifyCaps};
use crate::spectrum::spectrum_report;

const GRAMMAR_HELP: &str = "group spec grammar:
  spec := atom (\"x\" atom)*
  atom := \"Z\" int | \"Q\" int | \"D\" int
  int  := [1-9][0-9]*
Z = cyclic, Q = generalized quaternion (order a power of two, >= 8),
D = dihedral (order even, >= 6). Example: Z3xZ9xQ16.

family descriptor grammar:
  \"abelian-p:<p>:<maxorder>\"        all abelian p-groups up to the order
  \"pool:<atom,atom,...>:<maxorder>\"  all products of pool atoms up to the order
  \"random-abelian:<count>:<maxorder>\" seeded random abelian specs (--seed)";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Edges,
    Text,
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Group description, e.g. Z3xZ9xQ16
    #[arg(long)]
    group: Option<String>,
    /// Path to a multiplication-table JSON file
    #[arg(long)]
    table: Option<PathBuf>,
    /// Write output here instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
    /// Output format (graph commands accept dot/edges; others emit json)
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Cap on the group order
    #[arg(long, default_value_t = crate::group::DEFAULT_MAX_ORDER)]
    max_order: u64,
    /// Run the O(n^3) associativity check when loading a table
    #[arg(long)]
    check_assoc: bool,
    /// Seed for randomized families
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Vertex cap for the exact domination search
    #[arg(long, default_value_t = 400)]
    max_gamma_n: usize,
    /// Vertex cap for flow-based vertex connectivity
    #[arg(long, default_value_t = 300)]
    max_flow_n: usize,
    /// Vertex cap for the spectrum computations
    #[arg(long, default_value_t = 1500)]
    eigen_n: usize,
}

impl CommonArgs {
    fn verify_caps(&self) -> VerifyCaps {
        VerifyCaps {
            max_gamma_n: self.max_gamma_n,
            max_flow_n: self.max_flow_n,
            max_eta_n: self.eigen_n.min(200),
            ..VerifyCaps::default()
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "epg",
    version,
    about = "enhanced power graphs of finite groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Group order, nilpotent structure and Sylow classification
    Info(CommonArgs),
    /// Emit the enhanced power graph (json, dot or edge list)
    Graph(CommonArgs),
    /// Dominating vertices of the enhanced power graph vs the closed form
    Dom(CommonArgs),
    /// Emit the proper enhanced power graph (dominating vertices removed)
    Proper(CommonArgs),
    /// Invariant report for the enhanced and proper graphs
    Metrics(CommonArgs),
    /// Exact domination number of the proper graph
    Gamma(CommonArgs),
    /// Flow-based vertex connectivity of the enhanced power graph
    Kappa(CommonArgs),
    /// Connectivity upper bounds from the factorization (no graph built)
    Bounds(CommonArgs),
    /// Laplacian spectrum summary of the enhanced power graph
    Spectrum(CommonArgs),
    /// Cross-check every applicable closed form against brute force
    Verify(CommonArgs),
    /// Run verify over a family of groups (--family)
    Sweep(SweepArgs),
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Family descriptor, e.g. abelian-p:2:32 or pool:Z2,Z3,Q8:200
    #[arg(long)]
    family: String,
}

/// Entry point used by the binary: parses `argv` (without the program
/// name), writes the artifact to stdout or --out, and returns the exit
/// status.
pub fn run<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let mut stdout = std::io::stdout();
    let mut stderr = std::io::stderr();
    run_with_writers(args, &mut stdout, &mut stderr)
}

/// Like [`run`] but with injectable output streams (used by tests).
pub fn run_with_writers<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let mut argv: Vec<std::ffi::OsString> = vec!["epg".into()];
    argv.extend(args.into_iter().map(|a| a.into()));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap distinguishes --help/--version from real usage errors.
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = write!(err, "{e}");
            if code == 2 {
                let _ = writeln!(err, "\n{GRAMMAR_HELP}");
            }
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}\n\n{GRAMMAR_HELP}");
            2
        }
        Err(CliError::Computation(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

enum CliError {
    Usage(String),
    Computation(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::SpecSyntax { .. }
            | Error::InvalidQuaternionOrder(_)
            | Error::InvalidDihedralOrder(_)
            | Error::Usage(_) => CliError::Usage(e.to_string()),
            other => CliError::Computation(other),
        }
    }
}

/// The group source plus the parsed spec when one was given.
struct Source {
    group: Group,
    spec: Option<GroupSpec>,
}

fn load_source(common: &CommonArgs) -> Result<Source, CliError> {
    match (&common.group, &common.table) {
        (Some(_), Some(_)) => Err(CliError::Usage(
            "pass exactly one of --group and --table".into(),
        )),
        (None, None) => Err(CliError::Usage(
            "a group is required: pass --group <spec> or --table <path>".into(),
        )),
        (Some(text), None) => {
            let spec = parse_group_spec(text)?;
            let group = Group::from_spec_capped(&spec, common.max_order)?;
            Ok(Source {
                group,
                spec: Some(spec),
            })
        }
        (None, Some(path)) => {
            let group = load_cayley_table(path, common.check_assoc)?;
            if group.order() as u64 > common.max_order {
                return Err(CliError::Computation(Error::OrderCapExceeded {
                    order: group.order() as u128,
                    cap: common.max_order,
                }));
            }
            Ok(Source { group, spec: None })
        }
    }
}

fn emit(common: &CommonArgs, out: &mut dyn Write, content: &str) -> Result<(), CliError> {
    match &common.out {
        Some(path) => std::fs::write(path, content).map_err(|e| CliError::Computation(e.into())),
        None => {
            let _ = writeln!(out, "{}", content.trim_end());
            Ok(())
        }
    }
}

fn build_epg(group: &Group) -> Graph {
    enhanced_power_graph_with(
        group,
        EpgOptions {
            dedup_maximal_cyclic: true,
        },
    )
}

fn graph_artifact(common: &CommonArgs, graph: &Graph) -> String {
    match common.format {
        Format::Dot => export::to_dot(graph),
        Format::Edges => export::to_edge_list(graph),
        Format::Json | Format::Text => export::to_json(graph),
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Info(common) => {
            let source = load_source(&common)?;
            let profile = nilpotent_profile(&source.group);
            #[derive(Serialize)]
            struct Info<'a> {
                group: &'a str,
                order: usize,
                exponent: u64,
                profile: &'a crate::group::NilpotentProfile,
            }
            let exponent = (0..source.group.order())
                .map(|x| source.group.order_of(x))
                .fold(1, crate::num::lcm);
            let doc = Info {
                group: source.group.name(),
                order: source.group.order(),
                exponent,
                profile: &profile,
            };
            emit(&common, out, &to_pretty(&doc))?;
            Ok(0)
        }
        Command::Graph(common) => {
            let source = load_source(&common)?;
            let epg = build_epg(&source.group);
            emit(&common, out, &graph_artifact(&common, &epg))?;
            Ok(0)
        }
        Command::Dom(common) => {
            let source = load_source(&common)?;
            let profile = nilpotent_profile(&source.group);
            let epg = build_epg(&source.group);
            let dom = dominating_vertices(&epg);
            let predicted = crate::oracle::predict_dom_set(&profile).map(|(s, _)| s);
            let members_match = profile.is_nilpotent
                && dom.iter().all(|&v| {
                    crate::oracle::predicted_dom_member(source.group.order_of(v), &profile)
                })
                && predicted == Some(dom.len() as u64);
            #[derive(Serialize)]
            struct DomReport<'a> {
                group: &'a str,
                order: usize,
                case: Option<u8>,
                dominating: &'a [usize],
                labels: Vec<&'a str>,
                predicted_size: Option<u64>,
                matches_prediction: Option<bool>,
            }
            let doc = DomReport {
                group: source.group.name(),
                order: source.group.order(),
                case: profile.case.number(),
                dominating: &dom,
                labels: dom.iter().map(|&v| source.group.element_name(v)).collect(),
                predicted_size: predicted,
                matches_prediction: profile.is_nilpotent.then_some(members_match),
            };
            emit(&common, out, &to_pretty(&doc))?;
            Ok(0)
        }
        Command::Proper(common) => {
            let source = load_source(&common)?;
            let proper = proper_enhanced_power_graph_from(build_epg(&source.group));
            if common.format == Format::Json || common.format == Format::Text {
                #[derive(Serialize)]
                struct ProperReport<'a> {
                    group: &'a str,
                    order: usize,
                    removed_dominating: &'a [usize],
                    n: usize,
                    labels: &'a [String],
                    edges: Vec<(usize, usize)>,
                }
                let doc = ProperReport {
                    group: source.group.name(),
                    order: source.group.order(),
                    removed_dominating: &proper.dominating,
                    n: proper.graph.n(),
                    labels: proper.graph.labels(),
                    edges: proper.graph.edges(),
                };
                emit(&common, out, &to_pretty(&doc))?;
            } else {
                emit(&common, out, &graph_artifact(&common, &proper.graph))?;
            }
            Ok(0)
        }
        Command::Metrics(common) => {
            let source = load_source(&common)?;
            let epg = build_epg(&source.group);
            let proper = proper_enhanced_power_graph_from(epg.clone());
            #[derive(Serialize)]
            struct Metrics<'a> {
                group: &'a str,
                order: usize,
                enhanced: MetricReport,
                proper: MetricReport,
            }
            let doc = Metrics {
                group: source.group.name(),
                order: source.group.order(),
                enhanced: metric_report(&epg, common.max_gamma_n, common.max_flow_n),
                proper: metric_report(&proper.graph, common.max_gamma_n, common.max_flow_n),
            };
            emit(&common, out, &to_pretty(&doc))?;
            Ok(0)
        }
        Command::Gamma(common) => {
            let source = load_source(&common)?;
            let profile = nilpotent_profile(&source.group);
            let proper = proper_enhanced_power_graph_from(build_epg(&source.group));
            let exact = crate::metrics::domination_number_exact_bounded(
                &proper.graph,
                common.max_gamma_n,
                50_000_000,
            );
            #[derive(Serialize)]
            struct GammaReport<'a> {
                group: &'a str,
                order: usize,
                proper_vertices: usize,
                gamma: Option<usize>,
                greedy_upper: usize,
                predicted: Option<u64>,
                error: Option<String>,
            }
            let doc = GammaReport {
                group: source.group.name(),
                order: source.group.order(),
                proper_vertices: proper.graph.n(),
                gamma: exact.as_ref().ok().copied(),
                greedy_upper: greedy_domination_upper(&proper.graph),
                predicted: crate::oracle::predict_domination_number(&profile),
                error: exact.err().map(|e| e.to_string()),
            };
            emit(&common, out, &to_pretty(&doc))?;
            Ok(0)
        }
        Command::Kappa(common) => {
            let source = load_source(&common)?;
            let profile = nilpotent_profile(&source.group);
            let epg = build_epg(&source.group);
            let kappa = vertex_connectivity_bounded(&epg, common.max_flow_n);
            #[derive(Serialize)]
            struct KappaReport<'a> {
                group: &'a str,
                order: usize,
                kappa: Option<usize>,
                predicted: crate::oracle::KappaPrediction,
                error: Option<String>,
            }
            let doc = KappaReport {
                group: source.group.name(),
                order: source.group.order(),
                kappa: kappa.as_ref().ok().copied(),
                predicted: crate::oracle::predict_kappa(&profile, source.spec.as_ref()),
                error: kappa.err().map(|e| e.to_string()),
            };
            emit(&common, out, &to_pretty(&doc))?;
            Ok(0)
        }
        Command::Bounds(common) => {
            if common.table.is_some() {
                return Err(CliError::Usage(
                    "bounds are read off the factorization; pass --group, not --table".into(),
                ));
            }
            let text = common
                .group
                .as_ref()
                .ok_or_else(|| CliError::Usage("bounds requires --group <spec>".into()))?;
            let spec = parse_group_spec(text)?;
            let bounds = connectivity_bounds(&spec);
            #[derive(Serialize)]
            struct Bounds<'a> {
                group: &'a str,
                alpha: Option<u64>,
                beta: Option<u64>,
                applicable: bool,
            }
            let doc = Bounds {
                group: text,
                alpha: bounds.map(|(a, _)| a),
                beta: bounds.map(|(_, b)| b),
                applicable: bounds.is_some(),
            };
            emit(&common, out, &to_pretty(&doc))?;
            Ok(0)
        }
        Command::Spectrum(common) => {
            let source = load_source(&common)?;
            let epg = build_epg(&source.group);
            let report = spectrum_report(&epg, common.eigen_n)?;
            #[derive(Serialize)]
            struct Spec<'a> {
                group: &'a str,
                #[serde(flatten)]
                report: crate::spectrum::SpectrumReport,
            }
            let doc = Spec {
                group: source.group.name(),
                report,
            };
            emit(&common, out, &to_pretty(&doc))?;
            Ok(0)
        }
        Command::Verify(common) => {
            let source = load_source(&common)?;
            let report = verify(&source.group, source.spec.as_ref(), &common.verify_caps());
            let failed = !report.all_match;
            let rendered = match common.format {
                Format::Text => report.to_text(),
                _ => to_pretty(&report),
            };
            emit(&common, out, &rendered)?;
            Ok(if failed { 3 } else { 0 })
        }
        Command::Sweep(args) => {
            let specs = family_specs(&args.family, &args.common)?;
            let caps = args.common.verify_caps();
            let mut reports: Vec<VerificationReport> = Vec::new();
            let mut errors: Vec<String> = Vec::new();
            for spec in &specs {
                match Group::from_spec_capped(spec, args.common.max_order) {
                    Ok(group) => reports.push(verify(&group, Some(spec), &caps)),
                    Err(e) => errors.push(format!("{spec}: {e}")),
                }
            }
            let mismatched = reports.iter().filter(|r| !r.all_match).count();
            let anomalies: usize = reports.iter().map(|r| r.anomalies).sum();
            #[derive(Serialize)]
            struct Sweep<'a> {
                family: &'a str,
                seed: u64,
                groups: usize,
                mismatched_groups: usize,
                anomalies: usize,
                errors: &'a [String],
                reports: &'a [VerificationReport],
            }
            let doc = Sweep {
                family: &args.family,
                seed: args.common.seed,
                groups: reports.len(),
                mismatched_groups: mismatched,
                anomalies,
                errors: &errors,
                reports: &reports,
            };
            let rendered = match args.common.format {
                Format::Text => {
                    let mut text = String::new();
                    for r in &reports {
                        text.push_str(&r.to_text());
                    }
                    text.push_str(&format!(
                        "swept {} groups: {mismatched} mismatches, {anomalies} anomalies\n",
                        reports.len()
                    ));
                    text
                }
                _ => to_pretty(&doc),
            };
            emit(&args.common, out, &rendered)?;
            Ok(if mismatched > 0 { 3 } else { 0 })
        }
    }
}

fn to_pretty<T: Serialize>(doc: &T) -> String {
    serde_json::to_string_pretty(doc).expect("report serialization cannot fail")
}

/// Expand a family descriptor into group specs, deterministically ordered
/// by (order, name).
fn family_specs(descriptor: &str, common: &CommonArgs) -> Result<Vec<GroupSpec>, CliError> {
    let parts: Vec<&str> = descriptor.split(':').collect();
    let usage = || CliError::Usage(format!("bad family descriptor: {descriptor}"));
    let mut specs = match parts.as_slice() {
        ["abelian-p", p, maxorder] => {
            let p: u64 = p.parse().map_err(|_| usage())?;
            let maxorder: u64 = maxorder.parse().map_err(|_| usage())?;
            if !crate::num::is_prime(p) {
                return Err(CliError::Usage(format!("{p} is not prime")));
            }
            abelian_p_groups(p, maxorder)
        }
        ["pool", atoms, maxorder] => {
            let maxorder: u64 = maxorder.parse().map_err(|_| usage())?;
            let mut pool = Vec::new();
            for atom_text in atoms.split(',') {
                let spec = parse_group_spec(atom_text)?;
                pool.extend(spec.factors);
            }
            pool.sort_by_key(|a| (a.order(), format!("{a}")));
            pool.dedup();
            pool_products(&pool, maxorder)
        }
        ["random-abelian", count, maxorder] => {
            let count: usize = count.parse().map_err(|_| usage())?;
            let maxorder: u64 = maxorder.parse().map_err(|_| usage())?;
            random_abelian_specs(count, maxorder, common.seed)
        }
        _ => return Err(usage()),
    };
    specs.sort_by_key(|s| (s.order(), s.to_string()));
    specs.dedup();
    Ok(specs)
}

/// All abelian p-groups of order <= maxorder, one spec per partition of
/// each exponent.
pub fn abelian_p_groups(p: u64, maxorder: u64) -> Vec<GroupSpec> {
    let mut out = Vec::new();
    let mut power = p;
    let mut k = 1u32;
    while power <= maxorder {
        for partition in partitions(k) {
            out.push(GroupSpec {
                factors: partition.iter().map(|&e| Atom::Cyclic(p.pow(e))).collect(),
            });
        }
        match power.checked_mul(p) {
            Some(next) => {
                power = next;
                k += 1;
            }
            None => break,
        }
    }
    out
}

/// All non-empty multisets of pool atoms with product order <= maxorder.
fn pool_products(pool: &[Atom], maxorder: u64) -> Vec<GroupSpec> {
    let mut out = Vec::new();
    let mut current: Vec<Atom> = Vec::new();
    fn rec(
        pool: &[Atom],
        start: usize,
        order: u64,
        maxorder: u64,
        current: &mut Vec<Atom>,
        out: &mut Vec<GroupSpec>,
    ) {
        if !current.is_empty() {
            out.push(GroupSpec {
                factors: current.clone(),
            });
        }
        for i in start..pool.len() {
            let next_order = match order.checked_mul(pool[i].order()) {
                Some(o) if o <= maxorder => o,
                _ => continue,
            };
            current.push(pool[i]);
            rec(pool, i, next_order, maxorder, current, out);
            current.pop();
        }
    }
    rec(pool, 0, 1, maxorder, &mut current, &mut out);
    out
}

/// Seeded random abelian specs: 1-3 primes, 1-3 factors each, retried
/// until the order fits.
fn random_abelian_specs(count: usize, maxorder: u64, seed: u64) -> Vec<GroupSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let primes = [2u64, 3, 5, 7];
    let mut out = Vec::new();
    let mut guard = 0;
    while out.len() < count && guard < count * 1000 {
        guard += 1;
        let n_primes = rng.gen_range(1..=3.min(primes.len()));
        let mut chosen: Vec<u64> = Vec::new();
        while chosen.len() < n_primes {
            let p = primes[rng.gen_range(0..primes.len())];
            if !chosen.contains(&p) {
                chosen.push(p);
            }
        }
        chosen.sort_unstable();
        let mut factors = Vec::new();
        for &p in &chosen {
            let k = rng.gen_range(1..=3);
            for _ in 0..k {
                factors.push(Atom::Cyclic(p.pow(rng.gen_range(1..=3))));
            }
        }
        let spec = GroupSpec { factors };
        if spec.order() <= maxorder as u128 {
            out.push(spec);
        }
    }
    out
}

/// Random abelian spec generator shared with the test suites.
pub fn random_abelian_corpus(count: usize, maxorder: u64, seed: u64) -> Vec<GroupSpec> {
    random_abelian_specs(count, maxorder, seed)
}
