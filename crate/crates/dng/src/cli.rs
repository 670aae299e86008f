//! The `dng` command line.
//!
//! Exit codes: 0 success, 2 input error, 3 cap or capability error,
//! 4 audit finished with refuted records (unless `--refuted-ok`).

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use dng_core::audit::{summarize, AuditConfig, Verdict};
use dng_core::bounds::{
    gluck_expectation, maximal_subgroup_bound, min_good_partition, motion_bound, motion_bound_from, motion_data, orbit_rep_bound,
    preservers_of, tymoczko_bound,
};
use dng_core::catalog::{build_catalog, find_entry, CatalogEntry};
use dng_core::graph::{automorphism_group, DEFAULT_VERTEX_CAP};
use dng_core::group::{DEFAULT_CLOSURE_CAP, DEFAULT_SUBGROUP_CAP};
use dng_core::labeling::is_distinguishing;
use dng_core::solver::{distinguishing_number, paper_lower_algorithm, paper_upper_algorithm, relative_distinguishing_number};
use dng_core::{Labeling, PermGroup, SearchOptions, SolveResult};

use crate::error::{DngError, Result};
use crate::formats::{load_generators, parse_family, parse_graph_file, read_text};
use crate::report::{to_json, BoundsReport, GroupInfo, MotionReport, MovedSet, PartitionReport, SolveReport};
use crate::runner::{run_audit_parallel, thread_count, SystemClock};

#[derive(Parser, Debug)]
#[command(name = "dng", version, about = "Distinguishing numbers of finite permutation groups")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct GroupArgs {
    /// Generators as inline cycle notation, e.g. "(1 2 3),(1 2)", or a group file
    #[arg(long)]
    gens: Option<String>,
    /// Number of points; required for inline generators
    #[arg(long)]
    degree: Option<usize>,
    /// Built-in catalog entry, e.g. S3-natural
    #[arg(long)]
    catalog: Option<String>,
    #[arg(long, default_value_t = DEFAULT_CLOSURE_CAP)]
    closure_cap: usize,
}

#[derive(Args, Debug, Clone)]
struct SubArgs {
    /// Subgroup label of the catalog entry, or one of: trivial, whole, derived
    #[arg(long)]
    sub: Option<String>,
    /// Subgroup generators, inline or a group file
    #[arg(long, conflicts_with = "sub")]
    sub_gens: Option<String>,
}

#[derive(Args, Debug, Clone, Copy)]
struct SearchArgs {
    /// Brute-force reference: no label-symmetry reduction, full level scans
    #[arg(long)]
    oracle: bool,
    #[arg(long)]
    no_symmetry_reduction: bool,
}

impl SearchArgs {
    fn options(self) -> SearchOptions {
        let mut opts = if self.oracle { SearchOptions::oracle() } else { SearchOptions::default() };
        if self.no_symmetry_reduction {
            opts.reduce_label_symmetry = false;
        }
        opts
    }
}

#[derive(Args, Debug, Clone)]
struct OutputArgs {
    /// Write the JSON report here
    #[arg(long)]
    out: Option<PathBuf>,
    /// Print JSON instead of the summary
    #[arg(long)]
    json: bool,
    /// Fill elapsed_ms in JSON output
    #[arg(long)]
    timings: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Algo {
    Exact,
    PaperUpper,
    PaperLower,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Tymoczko,
    Motion,
    Maximal,
    Stabilizer,
    Gluck,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Distinguishing number of a group action
    Dist {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        search: SearchArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Distinguishing number relative to a subgroup
    DistRel {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        sub: SubArgs,
        #[arg(long, value_enum, default_value = "exact")]
        algo: Algo,
        #[command(flatten)]
        search: SearchArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Upper bounds on the distinguishing number
    Bounds {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        sub: SubArgs,
        #[arg(long, value_enum)]
        method: Method,
        #[arg(long, default_value_t = DEFAULT_SUBGROUP_CAP)]
        subgroup_cap: usize,
        #[command(flatten)]
        search: SearchArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Moved-point sets of every element and the motion of the action
    Motion {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Minimum good partition of the preservers of a labeling
    GoodPartition {
        #[command(flatten)]
        group: GroupArgs,
        /// Comma-separated labels; defaults to the constant labeling
        #[arg(long)]
        labeling: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Graph commands
    Graph {
        #[command(subcommand)]
        command: GraphCommand,
    },
    /// Group commands
    Group {
        #[command(subcommand)]
        command: GroupCommand,
    },
    /// Audit the published claims on the catalog
    Audit {
        /// Comma-separated entry names; all non-slow entries by default
        #[arg(long)]
        entries: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Include the slow entries
        #[arg(long)]
        slow: bool,
        /// Exit 0 even when records are refuted
        #[arg(long)]
        refuted_ok: bool,
        /// Fill elapsed_ms per record
        #[arg(long)]
        timings: bool,
        /// Print the JSON report instead of the summary
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_SUBGROUP_CAP)]
        subgroup_cap: usize,
    },
    /// List catalog entries
    Catalog {
        #[arg(long)]
        slow: bool,
    },
}

#[derive(Subcommand, Debug)]
enum GraphCommand {
    /// Distinguishing number of a graph
    Dist {
        /// Graph file: "vertices: n" then one 1-based edge "u v" per line
        #[arg(long)]
        edges: Option<PathBuf>,
        /// cycle:N, path:N, complete:N or empty:N
        #[arg(long, conflicts_with = "edges")]
        family: Option<String>,
        #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
        vertex_cap: usize,
        #[command(flatten)]
        search: SearchArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Subcommand, Debug)]
enum GroupCommand {
    /// Order, orbits and subgroup data
    Info {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, default_value_t = DEFAULT_SUBGROUP_CAP)]
        subgroup_cap: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
}

/// Parses `args` (including the program name), runs the command, and
/// returns the exit code. Summaries go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

struct Loaded {
    group: PermGroup,
    entry: Option<CatalogEntry>,
}

fn load_group(args: &GroupArgs) -> Result<Loaded> {
    match (&args.gens, &args.catalog) {
        (Some(_), Some(_)) => Err(DngError::Input(String::from("give either --gens or --catalog, not both"))),
        (None, None) => Err(DngError::Input(String::from("a group is required: --gens or --catalog"))),
        (None, Some(name)) => {
            let catalog = build_catalog(true);
            let entry = find_entry(&catalog, name).ok_or_else(|| DngError::Input(format!("unknown catalog entry {name:?}")))?.clone();
            if args.degree.is_some_and(|d| d != entry.degree) {
                return Err(DngError::Input(format!("{name} acts on {} points", entry.degree)));
            }
            let group = PermGroup::close(&entry.generators, args.closure_cap)?;
            Ok(Loaded { group, entry: Some(entry) })
        }
        (Some(gens), None) => {
            let file = load_generators(gens, args.degree)?;
            Ok(Loaded { group: PermGroup::close(&file.generators, args.closure_cap)?, entry: None })
        }
    }
}

/// `None` when no subgroup option was given.
fn load_subgroup(args: &SubArgs, loaded: &Loaded) -> Result<Option<PermGroup>> {
    let g = &loaded.group;
    if let Some(gens) = &args.sub_gens {
        let file = load_generators(gens, Some(g.degree()))?;
        let h = PermGroup::close(&file.generators, g.order())?;
        if !h.is_subgroup_of(g)? {
            return Err(DngError::Core(dng_core::Error::NotSubgroup));
        }
        return Ok(Some(h));
    }
    let Some(label) = &args.sub else { return Ok(None) };
    let h = match label.as_str() {
        "trivial" | "1" => PermGroup::trivial(g.degree())?,
        "whole" | "G" => g.clone(),
        "derived" | "G'" => g.derived_subgroup(),
        _ => {
            let entry = loaded
                .entry
                .as_ref()
                .ok_or_else(|| DngError::Input(format!("--sub {label}: named subgroups need --catalog; use --sub-gens")))?;
            let spec = entry.subgroup(label).ok_or_else(|| {
                let known: Vec<&str> = entry.subgroups.iter().map(|s| s.label.as_str()).collect();
                DngError::Input(format!("{} has no subgroup {label:?} (known: {})", entry.name, known.join(", ")))
            })?;
            entry.build_subgroup(spec, g)?
        }
    };
    Ok(Some(h))
}

fn emit<T: serde::Serialize>(out: &mut dyn Write, output: &OutputArgs, value: &T, summary: &str) -> Result<()> {
    let json = to_json(value)?;
    if let Some(path) = &output.out {
        write_file(path, &json)?;
    }
    let text = if output.json { json.as_str() } else { summary };
    out.write_all(text.as_bytes()).map_err(|source| DngError::Io { path: PathBuf::from("<stdout>"), source })
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|source| DngError::Io { path: path.to_path_buf(), source })
}

fn solve_report(r: &SolveResult, ms: f64, timings: bool) -> SolveReport {
    SolveReport {
        value: r.value,
        witness: r.witness.labels().to_vec(),
        examined: r.examined,
        elapsed_ms: timings.then_some(ms.round() as u64),
        algo: None,
        exact: None,
    }
}

fn solve_summary(r: &SolveResult, ms: f64) -> String {
    format!("value: {}\nwitness: {}\nexamined: {}\nelapsed: {ms:.1} ms\n", r.value, r.witness.to_text(), r.examined)
}

fn millis(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1000.0
}

fn points(v: &[usize]) -> Vec<usize> {
    v.iter().map(|p| p + 1).collect()
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Dist { group, search, output } => {
            let loaded = load_group(&group)?;
            let start = Instant::now();
            let r = distinguishing_number(&loaded.group, search.options());
            let ms = millis(start);
            emit(out, &output, &solve_report(&r, ms, output.timings), &solve_summary(&r, ms))?;
        }
        Command::DistRel { group, sub, algo, search, output } => {
            let loaded = load_group(&group)?;
            let h = load_subgroup(&sub, &loaded)?.ok_or_else(|| DngError::Input(String::from("dist-rel needs --sub or --sub-gens")))?;
            let (g, opts) = (&loaded.group, search.options());
            let start = Instant::now();
            let r = match algo {
                Algo::Exact => relative_distinguishing_number(g, &h, opts)?,
                Algo::PaperUpper => paper_upper_algorithm(g, &h, opts)?,
                Algo::PaperLower => paper_lower_algorithm(g, &h, opts)?,
            };
            let ms = millis(start);
            let mut report = solve_report(&r, ms, output.timings);
            let mut summary = solve_summary(&r, ms);
            report.algo = Some(algo.to_possible_value().expect("no skipped variants").get_name().to_string());
            if algo != Algo::Exact {
                let exact = relative_distinguishing_number(g, &h, opts)?.value;
                report.exact = Some(exact);
                summary.push_str(&format!("exact: {exact}\n"));
            }
            emit(out, &output, &report, &summary)?;
        }
        Command::Bounds { group, sub, method, subgroup_cap, search, output } => {
            let loaded = load_group(&group)?;
            let h = load_subgroup(&sub, &loaded)?;
            let report = bounds(&loaded.group, h.as_ref(), method, subgroup_cap, search.options())?;
            let summary = format!(
                "method: {}\nbound: {}\nexact: {}\nlabeling: {}\nverified: {}\n{}",
                report.method,
                report.bound.map_or_else(|| String::from("n/a"), |b| b.to_string()),
                report.exact,
                report.labeling.as_ref().map_or_else(|| String::from("-"), |l| join(l)),
                report.verified,
                report.details.iter().map(|(k, v)| format!("{k}: {v}\n")).collect::<String>()
                    + &report.notes.iter().map(|n| format!("note: {n}\n")).collect::<String>(),
            );
            emit(out, &output, &report, &summary)?;
        }
        Command::Motion { group, output } => {
            let loaded = load_group(&group)?;
            let g = &loaded.group;
            let data = motion_data(g)?;
            let elements = g
                .elements()
                .iter()
                .zip(&data.moved)
                .filter(|(e, _)| !e.is_identity())
                .map(|(e, m)| MovedSet { element: e.to_cycle_string(), moved: points(m) })
                .collect();
            let report = MotionReport { group_motion: data.group_motion, elements };
            let mut summary = format!("motion: {}\n", report.group_motion);
            for m in &report.elements {
                summary.push_str(&format!("{}: {}\n", m.element, join(&m.moved)));
            }
            emit(out, &output, &report, &summary)?;
        }
        Command::GoodPartition { group, labeling, output } => {
            let loaded = load_group(&group)?;
            let g = &loaded.group;
            let c = match labeling {
                Some(text) => Labeling::parse(&text)?,
                None => Labeling::constant(g.degree())?,
            };
            if c.degree() != g.degree() {
                return Err(DngError::Core(dng_core::Error::DegreeMismatch { left: c.degree(), right: g.degree() }));
            }
            let sigmas = preservers_of(g, &c)?;
            let partition = min_good_partition(&sigmas)?;
            let report = PartitionReport {
                labeling: c.labels().to_vec(),
                preservers: sigmas.iter().map(|s| s.to_cycle_string()).collect(),
                blocks: partition.blocks.iter().map(|b| points(b)).collect(),
                witnesses: points(&partition.witnesses),
                t: partition.len(),
            };
            let mut summary = format!("preservers: {}\nt: {}\n", report.preservers.len(), report.t);
            for (b, w) in report.blocks.iter().zip(&report.witnesses) {
                summary.push_str(&format!("block {{{}}} witness {w}\n", join(b)));
            }
            emit(out, &output, &report, &summary)?;
        }
        Command::Graph { command: GraphCommand::Dist { edges, family, vertex_cap, search, output } } => {
            let graph = match (edges, family) {
                (Some(path), None) => parse_graph_file(&read_text(&path)?)?,
                (None, Some(spec)) => parse_family(&spec)?,
                _ => return Err(DngError::Input(String::from("give --edges FILE or --family NAME:N"))),
            };
            let start = Instant::now();
            let aut = automorphism_group(&graph, vertex_cap, DEFAULT_CLOSURE_CAP)?;
            let r = distinguishing_number(&aut, search.options());
            let ms = millis(start);
            let summary = format!("automorphisms: {}\n{}", aut.order(), solve_summary(&r, ms));
            emit(out, &output, &solve_report(&r, ms, output.timings), &summary)?;
        }
        Command::Group { command: GroupCommand::Info { group, subgroup_cap, output } } => {
            let loaded = load_group(&group)?;
            let g = &loaded.group;
            let maximal = match g.maximal_subgroups(subgroup_cap) {
                Ok(list) => Some(list.iter().map(PermGroup::order).collect()),
                Err(e) if e.is_capability() => None,
                Err(e) => return Err(e.into()),
            };
            let info = GroupInfo {
                degree: g.degree(),
                order: g.order(),
                generators: g.generators().iter().map(|p| p.to_cycle_string()).collect(),
                orbits: g.orbits().iter().map(|o| points(o)).collect(),
                abelian: g.is_abelian(),
                derived_order: g.derived_subgroup().order(),
                motion: motion_data(g).ok().map(|m| m.group_motion),
                maximal_subgroup_orders: maximal,
            };
            let summary = format!(
                "degree: {}\norder: {}\ngenerators: {}\norbits: {}\nabelian: {}\nderived order: {}\nmotion: {}\nmaximal subgroup orders: {}\n",
                info.degree,
                info.order,
                info.generators.join(", "),
                info.orbits.iter().map(|o| format!("{{{}}}", join(o))).collect::<Vec<_>>().join(" "),
                info.abelian,
                info.derived_order,
                info.motion.map_or_else(|| String::from("-"), |m| m.to_string()),
                info.maximal_subgroup_orders.as_ref().map_or_else(|| String::from("over the enumeration cap"), |v| join(v)),
            );
            emit(out, &output, &info, &summary)?;
        }
        Command::Audit { entries, out: path, slow, refuted_ok, timings, json, subgroup_cap } => {
            return audit(out, entries, path, slow, refuted_ok, timings, json, subgroup_cap);
        }
        Command::Catalog { slow } => {
            for e in build_catalog(slow) {
                let labels: Vec<&str> = e.subgroups.iter().map(|s| s.label.as_str()).collect();
                let _ = writeln!(
                    out,
                    "{}\t{}\tdegree {}\torder {}\tsubgroups {}",
                    e.name,
                    e.abstract_group,
                    e.degree,
                    e.declared_order,
                    labels.join(",")
                );
            }
        }
    }
    Ok(0)
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn bounds(g: &PermGroup, h: Option<&PermGroup>, method: Method, cap: usize, opts: SearchOptions) -> Result<BoundsReport> {
    let exact = distinguishing_number(g, opts).value;
    let trivial = PermGroup::trivial(g.degree())?;
    let mut details = BTreeMap::new();
    let mut notes = Vec::new();
    let (name, bound, labeling) = match method {
        Method::Tymoczko => ("tymoczko", Some(tymoczko_bound(g.order())), None),
        Method::Gluck => {
            let expected = gluck_expectation(g);
            if expected.is_none() {
                notes.push(String::from("only nontrivial groups of odd order have an expected value"));
            }
            ("gluck", expected, None)
        }
        Method::Motion => {
            let b = match h {
                Some(h) if !h.is_trivial() => motion_bound(g, h, opts)?,
                _ => motion_bound_from(g, 1, Labeling::constant(g.degree())?)?,
            };
            details.insert(String::from("subgroup_value"), u64::from(b.subgroup_value));
            details.insert(String::from("preservers"), b.preservers.len() as u64);
            details.insert(String::from("t"), u64::from(b.t()));
            ("motion", Some(b.bound), Some(b.labeling))
        }
        Method::Maximal => {
            let b = maximal_subgroup_bound(g, None, cap, opts)?;
            details.insert(String::from("c"), u64::from(b.c));
            if b.degenerate {
                notes.push(String::from("no maximal nonidentity proper subgroup; c taken as 1"));
            }
            ("maximal", Some(b.bound), Some(b.labeling))
        }
        Method::Stabilizer => {
            let b = orbit_rep_bound(g, opts)?;
            details.insert(String::from("c"), u64::from(b.c));
            details.insert(String::from("stabilizer_order"), b.stabilizer_order as u64);
            ("stabilizer", Some(b.bound), Some(b.labeling))
        }
    };
    let verified = match (&labeling, bound) {
        (Some(l), _) => is_distinguishing(g, l, &trivial)?,
        (None, Some(b)) => b >= exact,
        (None, None) => false,
    };
    Ok(BoundsReport { method: name.to_string(), bound, exact, labeling: labeling.map(|l| l.labels().to_vec()), verified, details, notes })
}

#[allow(clippy::too_many_arguments)]
fn audit(
    out: &mut dyn Write,
    entries: Option<String>,
    path: Option<PathBuf>,
    slow: bool,
    refuted_ok: bool,
    timings: bool,
    json: bool,
    subgroup_cap: usize,
) -> Result<i32> {
    let catalog = build_catalog(true);
    let selected: Vec<CatalogEntry> = match &entries {
        Some(list) => list
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|name| find_entry(&catalog, name).cloned().ok_or_else(|| DngError::Input(format!("unknown catalog entry {name:?}"))))
            .collect::<Result<_>>()?,
        None => catalog.into_iter().filter(|e| slow || !e.slow).collect(),
    };
    let clock = SystemClock::new();
    let config = AuditConfig { subgroup_cap, clock: if timings { Some(&clock) } else { None }, ..AuditConfig::default() };
    let records = run_audit_parallel(&selected, &config, thread_count());
    let report = to_json(&records)?;
    if let Some(path) = &path {
        write_file(path, &report)?;
    }
    let summary = summarize(&records);
    let io = |source| DngError::Io { path: PathBuf::from("<stdout>"), source };
    if json {
        out.write_all(report.as_bytes()).map_err(io)?;
    } else {
        writeln!(
            out,
            "records: {} confirmed: {} refuted: {} not-applicable: {}",
            records.len(),
            summary.confirmed,
            summary.refuted,
            summary.not_applicable
        )
        .map_err(io)?;
        for r in records.iter().filter(|r| r.verdict == Verdict::Refuted) {
            let shown: Vec<String> = r.computed.iter().map(|(k, v)| format!("{k}={v}")).collect();
            writeln!(out, "refuted {} {} [{}] {}", r.entry, r.claim_id, r.instance, shown.join(" ")).map_err(io)?;
        }
    }
    Ok(if summary.refuted > 0 && !refuted_ok { 4 } else { 0 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let (mut o, mut e) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("dng").chain(args.iter().copied()), &mut o, &mut e);
        (code, String::from_utf8(o).unwrap(), String::from_utf8(e).unwrap())
    }

    #[test]
    fn dist_inline() {
        let (code, out, _) = run_str(&["dist", "--gens", "(1 2 3),(1 2)", "--degree", "3"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("value: 3\nwitness: 1,2,3\n"), "{out}");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_str(&["dist", "--gens", "(1 2 3)"]).0, 2);
        assert_eq!(run_str(&["dist", "--gens", "(1 2)(2 3)", "--degree", "3"]).0, 2);
        assert_eq!(run_str(&["dist", "--gens", "(1 2 3 4 5 6 7)", "--degree", "7", "--closure-cap", "5"]).0, 3);
        assert_eq!(run_str(&["frobnicate"]).0, 2);
        assert_eq!(run_str(&["dist", "--catalog", "S3-natural", "--gens", "(1 2)", "--degree", "3"]).0, 2);
        assert_eq!(run_str(&["--help"]).0, 0);
    }

    #[test]
    fn catalog_subgroups() {
        let (code, out, err) = run_str(&["dist-rel", "--catalog", "S3-natural", "--sub", "A3", "--algo", "paper-upper", "--json"]);
        assert_eq!(code, 0, "{err}");
        let r: SolveReport = serde_json::from_str(&out).unwrap();
        assert_eq!((r.value, r.exact), (3, Some(3)));
        assert_eq!(r.elapsed_ms, None);
        assert_eq!(run_str(&["dist-rel", "--catalog", "S3-natural", "--sub", "Q8"]).0, 2);
    }
}
