//! Batch command-line frontend. Every run with identical inputs and flags
//! produces byte-identical output; worker counts come from `EULER_THREADS`.

pub mod report;
pub mod verify;

use std::io::{Read, Write};
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use euler_cycles::atlas::{degree2_threshold, named_graph, Atlas};
use euler_cycles::canon::canonical_code;
use euler_cycles::cycles::{epsilon_tag, spectrum, DEFAULT_CYCLE_CAP};
use euler_cycles::decompose::{
    cycle_decompose_from, graceful_candidate, size_congruence, xi, RosaGolombVerdict,
};
use euler_cycles::graceful::{search_graceful, verify_labeling, SearchOutcome, DEFAULT_BUDGET};
use euler_cycles::graph::{parse_graph_auto, Graph};
use euler_cycles::mod4::{
    cc_table, divide_possibilities, explore, feasible_configs, Family, Mod4, Shape, Verdict,
};
use report::{render, Section};

#[derive(Parser)]
#[command(
    name = "euler-cycles",
    about = "Classify Euler graphs by cycle lengths mod 4, audit the published tables, \
             enumerate small orders, and search graceful labelings",
    version
)]
struct Cli {
    /// Write output to FILE instead of stdout
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArg {
    /// Input graph: a file in graph6 or edge-list form, or `-` for stdin
    #[arg(long = "in", value_name = "FILE")]
    input: String,
}

#[derive(Subcommand)]
enum Command {
    /// Print the cycle-type class of a graph
    Classify {
        #[command(flatten)]
        input: InputArg,
        /// Cycle enumeration cap
        #[arg(long, default_value_t = DEFAULT_CYCLE_CAP)]
        cap: usize,
    },
    /// Print the full cycle spectrum of a graph
    Spectrum {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, default_value_t = DEFAULT_CYCLE_CAP)]
        cap: usize,
    },
    /// Edge-disjoint cycle decomposition with per-type counts
    Decompose {
        #[command(flatten)]
        input: InputArg,
        /// Start node of the Euler circuit
        #[arg(long, default_value_t = 0)]
        start: usize,
    },
    /// Graceful labelings
    Graceful {
        #[command(subcommand)]
        cmd: GracefulCmd,
    },
    /// Exhaustive small-order atlases and audits
    Atlas {
        #[command(subcommand)]
        cmd: AtlasCmd,
    },
    /// The combined-cycle calculus: tables, divisions, case trees, witnesses
    Cases {
        #[command(subcommand)]
        cmd: CasesCmd,
    },
    /// Umbrella verification suites
    Verify {
        #[command(subcommand)]
        cmd: VerifyCmd,
    },
    /// Print a named construction in graph6 form
    Named {
        /// k5 | pythagoras | eps013-min | block-cycles-1-2-3
        name: String,
    },
}

#[derive(Subcommand)]
enum GracefulCmd {
    /// Exhaustive backtracking search for a graceful labeling
    Search {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Verify a labeling given as node:label lines
    Verify {
        #[command(flatten)]
        input: InputArg,
        /// File of `node:label` lines, one per node
        #[arg(long, value_name = "FILE")]
        labels: String,
    },
}

#[derive(Subcommand)]
enum AtlasCmd {
    /// Stream every Euler graph of orders 3..=N as graph6 lines
    Enumerate {
        #[arg(long = "max-order", value_name = "N")]
        max_order: usize,
    },
    /// Count Euler graphs per order and cycle-type class
    Census {
        #[arg(long = "max-order", value_name = "N")]
        max_order: usize,
    },
    /// Smallest order with a member of the family
    MinOrder {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long = "max-order", value_name = "N")]
        max_order: usize,
    },
    /// Degree-two and regularity audits of a family
    Audit {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long = "max-order", value_name = "N")]
        max_order: usize,
    },
    /// Seeded graceful sampling of tree-planted family members
    Sample {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long = "max-order", value_name = "N", default_value_t = 8)]
        max_order: usize,
    },
}

#[derive(Subcommand)]
enum CasesCmd {
    /// Pair table of a family, or a shape feasibility table with --shape
    Table {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long, value_parser = parse_shape)]
        shape: Option<Shape>,
    },
    /// All ways a path can divide a cycle of the given type in the family
    Divide {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long = "cycle-type", value_name = "T")]
        cycle_type: u8,
    },
    /// Expand the stop/continue case tree of every feasible configuration
    Explore {
        #[arg(long, value_parser = parse_shape)]
        shape: Shape,
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long, default_value_t = 1)]
        depth: usize,
    },
    /// Search the atlas for graphs realizing each feasible configuration
    Witness {
        #[arg(long, value_parser = parse_shape)]
        shape: Shape,
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long = "max-order", value_name = "N", default_value_t = 10)]
        max_order: usize,
    },
    /// Full symbolic audit: pair tables, escape claims, chord conventions,
    /// table divergences, and explorer branch counts
    Audit,
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Re-derive the published tables and observations; one PASS/FAIL line each
    Paper {
        #[arg(long = "max-order", value_name = "N", default_value_t = 10)]
        max_order: usize,
    },
}

fn parse_family(s: &str) -> Result<Family, String> {
    Family::from_str(s).map_err(|e| e.to_string())
}

fn parse_shape(s: &str) -> Result<Shape, String> {
    Shape::from_str(s).map_err(|e| e.to_string())
}

pub struct CliError {
    pub msg: String,
}

impl<E: std::fmt::Display> From<E> for CliError {
    fn from(e: E) -> CliError {
        CliError { msg: e.to_string() }
    }
}

/// Entry point shared by the binary and the tests. Returns the exit code:
/// 0 success, 1 domain error, 2 usage error.
pub fn run(args: &[&str], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let text = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(text.as_bytes());
            } else {
                let _ = err.write_all(text.as_bytes());
            }
            return code;
        }
    };
    match dispatch(&cli.command) {
        Ok(result) => {
            let wrote = match &cli.out {
                Some(path) => std::fs::write(path, &result.text).map_err(|e| e.to_string()),
                None => out.write_all(result.text.as_bytes()).map_err(|e| e.to_string()),
            };
            match wrote {
                Ok(()) => {
                    if result.code != 0 {
                        let _ = writeln!(err, "error: {}", result.reason);
                    }
                    result.code
                }
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    1
                }
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.msg);
            1
        }
    }
}

/// A command's rendered output plus its exit code (nonzero when the command
/// completed but its verdict is a failure, like a failed verification run).
struct CmdOutput {
    text: String,
    code: i32,
    reason: String,
}

impl CmdOutput {
    fn ok(text: String) -> CmdOutput {
        CmdOutput { text, code: 0, reason: String::new() }
    }
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| CliError { msg: e.to_string() })?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError { msg: format!("{path}: {e}") })
    }
}

fn read_graph(input: &InputArg) -> Result<Graph, CliError> {
    Ok(parse_graph_auto(&read_input(&input.input)?)?)
}

fn dispatch(cmd: &Command) -> Result<CmdOutput, CliError> {
    let text = match cmd {
        Command::Classify { input, cap } => classify(&read_graph(input)?, *cap)?,
        Command::Spectrum { input, cap } => spectrum_cmd(&read_graph(input)?, *cap)?,
        Command::Decompose { input, start } => decompose_cmd(&read_graph(input)?, *start)?,
        Command::Graceful { cmd } => match cmd {
            GracefulCmd::Search { input, budget } => {
                graceful_search_cmd(&read_graph(input)?, *budget)?
            }
            GracefulCmd::Verify { input, labels } => {
                graceful_verify_cmd(&read_graph(input)?, &read_input(labels)?)?
            }
        },
        Command::Atlas { cmd } => atlas_cmd(cmd)?,
        Command::Cases { cmd } => cases_cmd(cmd)?,
        Command::Verify { cmd } => match cmd {
            VerifyCmd::Paper { max_order } => return verify_paper_cmd(*max_order),
        },
        Command::Named { name } => format!("{}\n", named_graph(name)?.to_graph6()),
    };
    Ok(CmdOutput::ok(text))
}

fn classify(g: &Graph, cap: usize) -> Result<String, CliError> {
    let s = spectrum(g, cap);
    let tag = epsilon_tag(&s)?;
    let lengths: Vec<String> = s.lengths.iter().map(|n| n.to_string()).collect();
    Ok(format!("{tag}\tlengths={}\n", lengths.join(",")))
}

fn spectrum_cmd(g: &Graph, cap: usize) -> Result<String, CliError> {
    let s = spectrum(g, cap);
    let mut sec = Section::new("spectrum", &["p", "q", "lengths", "types", "truncated"]);
    sec.push_row(vec![
        g.node_count().to_string(),
        g.edge_count().to_string(),
        s.lengths.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(","),
        s.types_present().iter().map(|t| t.to_string()).collect::<Vec<_>>().join(","),
        s.truncated.to_string(),
    ]);
    Ok(render(&[sec]))
}

fn decompose_cmd(g: &Graph, start: usize) -> Result<String, CliError> {
    let d = cycle_decompose_from(g, start)?;
    let x = xi(&d);
    let cong = size_congruence(g)?;
    let verdict = graceful_candidate(g)?;
    let mut cycles = Section::new("decomposition", &["index", "length", "type", "nodes"]);
    for (i, c) in d.cycles.iter().enumerate() {
        cycles.push_row(vec![
            i.to_string(),
            c.len().to_string(),
            c.type_mod4().to_string(),
            c.nodes().iter().map(|v| v.to_string()).collect::<Vec<_>>().join("-"),
        ]);
    }
    let mut xis = Section::new("xi", &["xi0", "xi1", "xi2", "xi3", "cycles"]);
    xis.push_row(vec![
        x.xi[0].to_string(),
        x.xi[1].to_string(),
        x.xi[2].to_string(),
        x.xi[3].to_string(),
        x.count().to_string(),
    ]);
    let mut cong_sec = Section::new("congruence", &["q_mod4", "xi_sum_mod4", "agrees"]);
    cong_sec.push_row(vec![
        cong.q_mod4.to_string(),
        cong.xi_sum_mod4.to_string(),
        cong.agrees.to_string(),
    ]);
    let mut rg = Section::new("rosa-golomb", &["q", "verdict"]);
    rg.push_row(vec![
        g.edge_count().to_string(),
        match verdict {
            RosaGolombVerdict::Candidate => "candidate".to_string(),
            RosaGolombVerdict::NongracefulByRg => "nongraceful-by-rg".to_string(),
        },
    ]);
    Ok(render(&[cycles, xis, cong_sec, rg]))
}

fn graceful_search_cmd(g: &Graph, budget: u64) -> Result<String, CliError> {
    let r = search_graceful(g, budget);
    let mut sec = Section::new("graceful-search", &["outcome", "expanded"]);
    let outcome = match &r.outcome {
        SearchOutcome::Found(_) => "found",
        SearchOutcome::ExhaustedNone => "exhausted-none",
        SearchOutcome::BudgetExceeded => "budget-exceeded",
    };
    sec.push_row(vec![outcome.to_string(), r.nodes_expanded.to_string()]);
    let mut doc = vec![sec];
    if let SearchOutcome::Found(lab) = &r.outcome {
        let mut labels = Section::new("labeling", &["node:label"]);
        for (v, l) in lab.labels.iter().enumerate() {
            labels.push_row(vec![format!("{v}:{l}")]);
        }
        doc.push(labels);
    }
    if r.outcome == SearchOutcome::BudgetExceeded {
        return Err(CliError {
            msg: format!("budget exceeded after {} expansions", r.nodes_expanded),
        });
    }
    Ok(render(&doc))
}

fn graceful_verify_cmd(g: &Graph, labels_text: &str) -> Result<String, CliError> {
    let p = g.node_count();
    let mut labels = vec![u16::MAX; p];
    for line in labels_text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') || line == "node:label" {
            continue;
        }
        let (node, label) = line
            .split_once(':')
            .ok_or_else(|| CliError { msg: format!("bad labeling line {line:?}") })?;
        let v: usize = node
            .trim()
            .parse()
            .map_err(|_| CliError { msg: format!("bad node in {line:?}") })?;
        let l: u16 = label
            .trim()
            .parse()
            .map_err(|_| CliError { msg: format!("bad label in {line:?}") })?;
        if v >= p || labels[v] != u16::MAX {
            return Err(CliError { msg: format!("node {v} out of range or repeated") });
        }
        labels[v] = l;
    }
    if labels.contains(&u16::MAX) {
        return Err(CliError { msg: "labeling does not assign every node".into() });
    }
    let valid = verify_labeling(g, &labels)?;
    let mut sec = Section::new("graceful-verify", &["p", "q", "valid"]);
    sec.push_row(vec![p.to_string(), g.edge_count().to_string(), valid.to_string()]);
    Ok(render(&[sec]))
}

fn atlas_cmd(cmd: &AtlasCmd) -> Result<String, CliError> {
    let mut atlas = Atlas::new();
    match cmd {
        AtlasCmd::Enumerate { max_order } => {
            let mut out = String::new();
            for p in 3..=*max_order {
                for g in atlas.enumerate_euler(p)? {
                    out.push_str(&g.to_graph6());
                    out.push('\n');
                }
            }
            Ok(out)
        }
        AtlasCmd::Census { max_order } => {
            let rows = atlas.census(*max_order)?;
            let mut totals = Section::new("census-totals", &["p", "total"]);
            let mut sec = Section::new("census", &["p", "tag", "count"]);
            for row in &rows {
                totals.push_row(vec![row.p.to_string(), row.total.to_string()]);
                for (tag, count) in &row.counts {
                    sec.push_row(vec![row.p.to_string(), tag.to_string(), count.to_string()]);
                }
            }
            Ok(render(&[totals, sec]))
        }
        AtlasCmd::MinOrder { family, max_order } => {
            let mo = atlas.min_order(*family, *max_order)?;
            let mut sec = Section::new("min-order", &["family", "max_order", "min_order"]);
            sec.push_row(vec![
                family.to_string(),
                max_order.to_string(),
                mo.map_or("none".to_string(), |p| p.to_string()),
            ]);
            Ok(render(&[sec]))
        }
        AtlasCmd::Audit { family, max_order } => {
            let d2 = atlas.degree2_audit(*family, *max_order)?;
            let reg = atlas.regular_audit(*family, *max_order)?;
            let mut d2s = Section::new(
                "degree-two",
                &["family", "threshold", "max_order", "status", "counterexamples"],
            );
            d2s.push_row(vec![
                family.to_string(),
                degree2_threshold(*family).to_string(),
                max_order.to_string(),
                if d2.refuted { "refuted".into() } else { "consistent".into() },
                d2.counterexamples.join(","),
            ]);
            let mut regs = Section::new("regular", &["family", "max_order", "graph6", "p", "q"]);
            for g in &reg {
                regs.push_row(vec![
                    family.to_string(),
                    max_order.to_string(),
                    canonical_code(g).as_str().to_string(),
                    g.node_count().to_string(),
                    g.edge_count().to_string(),
                ]);
            }
            Ok(render(&[d2s, regs]))
        }
        AtlasCmd::Sample { family, trials, seed, max_order } => {
            let r = atlas.eulerforest_graceful_sample(*family, *trials, *seed, *max_order)?;
            let mut summary = Section::new(
                "sample-summary",
                &["family", "trials", "seed", "pool", "found", "none", "budget"],
            );
            summary.push_row(vec![
                r.family.to_string(),
                r.trials.to_string(),
                r.seed.to_string(),
                r.pool_size.to_string(),
                r.found.to_string(),
                r.none.to_string(),
                r.budget.to_string(),
            ]);
            let mut rows = Section::new(
                "sample-trials",
                &["trial", "base", "planted", "attach", "extra", "outcome", "expanded"],
            );
            for (i, row) in r.rows.iter().enumerate() {
                rows.push_row(vec![
                    i.to_string(),
                    row.base.clone(),
                    row.planted.clone(),
                    row.attach_node.to_string(),
                    row.extra_nodes.to_string(),
                    row.outcome.to_string(),
                    row.expanded.to_string(),
                ]);
            }
            Ok(render(&[summary, rows]))
        }
    }
}

fn shape_table_columns(shape: Shape) -> (Vec<&'static str>, Vec<&'static str>) {
    match shape {
        Shape::A => (vec!["i", "j", "k", "l"], vec!["cc_ij", "cc_ik", "cc_jk"]),
        Shape::B => (vec!["i", "j", "k", "l", "m"], vec!["cc_ij", "cc_ik", "cc_jk"]),
        Shape::C | Shape::E => (vec!["i", "j", "k", "l", "m"], vec!["cc_ij", "cc_jk", "cc_ijk"]),
        Shape::F => {
            (vec!["i", "j", "k", "l", "m", "n"], vec!["cc_ij", "cc_jk", "cc_ik", "cc_ijk"])
        }
    }
}

fn cases_cmd(cmd: &CasesCmd) -> Result<String, CliError> {
    match cmd {
        CasesCmd::Table { family, shape: None } => {
            let mut sec = Section::new(
                &format!("cc-table-{family}"),
                &["cycle1", "cycle2", "cc_even", "cc_odd", "even_escapes", "odd_escapes"],
            );
            for row in cc_table(*family) {
                sec.push_row(vec![
                    row.pair.0.to_string(),
                    row.pair.1.to_string(),
                    row.even.to_string(),
                    row.odd.to_string(),
                    row.even_escapes.to_string(),
                    row.odd_escapes.to_string(),
                ]);
            }
            if *family == Family::F023 {
                sec.note(
                    "the duplicate table beside the second-level no-solution figure prints 4 \
                     for pair (2,3) even; impossible mod 4, the value 1 above is canonical",
                );
            }
            Ok(render(&[sec]))
        }
        CasesCmd::Table { family, shape: Some(shape) } => {
            let (head, derived_cols) = shape_table_columns(*shape);
            let cols: Vec<&str> = head.iter().chain(derived_cols.iter()).copied().collect();
            let mut sec = Section::new(&format!("cases-table-{shape}-{family}"), &cols);
            let rows = feasible_configs(*shape, *family);
            for r in &rows {
                let mut row: Vec<String> = r.config.types.iter().map(|t| t.to_string()).collect();
                row.extend(r.config.parities.iter().map(|p| p.bit().to_string()));
                row.extend(r.derived.iter().map(|d| d.to_string()));
                sec.push_row(row);
            }
            if rows.is_empty() {
                sec.note("no feasible configuration");
            }
            Ok(render(&[sec]))
        }
        CasesCmd::Divide { family, cycle_type } => {
            let moves = divide_possibilities(Mod4::new(*cycle_type), *family)?;
            let mut sec =
                Section::new(&format!("divide-{family}-t{cycle_type}"), &["t1", "t2", "parity"]);
            for (t1, t2, p) in moves {
                sec.push_row(vec![t1.to_string(), t2.to_string(), p.to_string()]);
            }
            Ok(render(&[sec]))
        }
        CasesCmd::Explore { shape, family, depth } => {
            let rows = feasible_configs(*shape, *family);
            let mut sections = Vec::new();
            if rows.is_empty() {
                let mut sec = Section::new(&format!("explore-{shape}-{family}"), &["node"]);
                sec.note("no feasible configuration");
                sections.push(sec);
            }
            for (i, row) in rows.iter().enumerate() {
                let tree = explore(&row.config, *depth)?;
                let mut sec = Section::new(
                    &format!("explore-{shape}-{family}-row{i}"),
                    &[
                        "node", "parent", "depth", "divided", "divided_type", "t1", "t2",
                        "parity", "verdict", "reason",
                    ],
                );
                let types: Vec<String> = row.config.types.iter().map(|t| t.to_string()).collect();
                let pars: Vec<String> = row.config.parities.iter().map(|p| p.to_string()).collect();
                sec.note(&format!("configuration {};{}", types.join(","), pars.join(",")));
                for n in &tree.nodes {
                    let (verdict, reason) = match &n.verdict {
                        Verdict::Continue => ("continue".to_string(), String::new()),
                        Verdict::Stop(es) => {
                            let e = &es[0];
                            (
                                "stop".to_string(),
                                format!("cc({},{};{})={} escapes", e.a_type, e.b_type, e.parity, e.cc),
                            )
                        }
                    };
                    sec.push_row(vec![
                        n.id.to_string(),
                        n.parent.map_or("-".into(), |p| p.to_string()),
                        n.depth.to_string(),
                        n.divided.map_or("-".into(), |(id, _)| id.to_string()),
                        n.divided.map_or("-".into(), |(_, t)| t.to_string()),
                        n.move_types.map_or("-".into(), |(a, _)| a.to_string()),
                        n.move_types.map_or("-".into(), |(_, b)| b.to_string()),
                        n.move_parity.map_or("-".into(), |p| p.to_string()),
                        verdict,
                        reason,
                    ]);
                }
                sections.push(sec);
            }
            Ok(render(&sections))
        }
        CasesCmd::Audit => {
            let r = euler_cycles::audit::audit_claims();
            let mut sections = Vec::new();
            let mut tables = Section::new(
                "pair-tables",
                &["family", "cycle1", "cycle2", "cc_even", "cc_odd", "matches_published"],
            );
            for t in &r.cc_tables {
                for row in &t.rows {
                    tables.push_row(vec![
                        t.family.to_string(),
                        row.pair.0.to_string(),
                        row.pair.1.to_string(),
                        row.even.to_string(),
                        row.odd.to_string(),
                        t.matches_published.to_string(),
                    ]);
                }
            }
            sections.push(tables);
            let mut misprint = Section::new(
                "duplicate-table-misprint",
                &["family", "pair", "parity", "computed", "published_primary", "published_duplicate"],
            );
            misprint.push_row(vec![
                r.duplicate_table.family.to_string(),
                format!("{},{}", r.duplicate_table.pair.0, r.duplicate_table.pair.1),
                r.duplicate_table.parity.to_string(),
                r.duplicate_table.computed.to_string(),
                r.duplicate_table.published_primary.to_string(),
                r.duplicate_table.published_duplicate.to_string(),
            ]);
            misprint.note(&r.duplicate_table.verdict);
            sections.push(misprint);
            let mut claims = Section::new("claims", &["id", "pass", "detail"]);
            for c in &r.claims {
                claims.push_row(vec![c.id.to_string(), c.pass.to_string(), c.detail.clone()]);
            }
            sections.push(claims);
            let mut chords = Section::new(
                "chord-conventions",
                &["claim", "orders", "holds_arc", "holds_cycle", "verdict"],
            );
            for c in &r.chord_conventions {
                chords.push_row(vec![
                    c.observation.to_string(),
                    c.orders.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(","),
                    c.holds_arc.to_string(),
                    c.holds_cycle.to_string(),
                    c.verdict.clone(),
                ]);
            }
            sections.push(chords);
            let mut div = Section::new(
                "table-divergences",
                &["shape", "family", "kind", "types", "parities"],
            );
            for t in &r.config_tables {
                for (kind, rows) in [("missing", &t.missing), ("extra", &t.extra)] {
                    for (types, pars) in rows {
                        div.push_row(vec![
                            t.shape.to_string(),
                            t.family.to_string(),
                            kind.to_string(),
                            types.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","),
                            pars.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","),
                        ]);
                    }
                }
            }
            sections.push(div);
            let mut counts =
                Section::new("explore-counts", &["analysis", "published", "computed"]);
            for e in &r.explore_counts {
                counts.push_row(vec![
                    e.label.to_string(),
                    e.published.to_string(),
                    e.computed.to_string(),
                ]);
            }
            for n in &r.notes {
                counts.note(n);
            }
            sections.push(counts);
            Ok(render(&sections))
        }
        CasesCmd::Witness { shape, family, max_order } => {
            let mut atlas = Atlas::new();
            let rows = feasible_configs(*shape, *family);
            let mut sec = Section::new(
                &format!("witness-{shape}-{family}"),
                &["row", "types", "parities", "witness", "p", "q", "intersections"],
            );
            if rows.is_empty() {
                sec.note("no feasible configuration");
            }
            for (i, row) in rows.iter().enumerate() {
                let types: Vec<String> = row.config.types.iter().map(|t| t.to_string()).collect();
                let pars: Vec<String> = row.config.parities.iter().map(|p| p.to_string()).collect();
                match atlas.witness_search(&row.config, *max_order)? {
                    Some(w) => sec.push_row(vec![
                        i.to_string(),
                        types.join(","),
                        pars.join(","),
                        w.graph.to_graph6(),
                        w.graph.node_count().to_string(),
                        w.graph.edge_count().to_string(),
                        w.intersection_lengths
                            .iter()
                            .map(|l| l.to_string())
                            .collect::<Vec<_>>()
                            .join(","),
                    ]),
                    None => sec.push_row(vec![
                        i.to_string(),
                        types.join(","),
                        pars.join(","),
                        "none".to_string(),
                        "-".to_string(),
                        "-".to_string(),
                        "-".to_string(),
                    ]),
                }
            }
            Ok(render(&[sec]))
        }
    }
}

fn verify_paper_cmd(max_order: usize) -> Result<CmdOutput, CliError> {
    let results = verify::run_all(max_order, euler_cycles::worker_threads());
    let mut out = String::new();
    for r in &results {
        out.push_str(&r.line());
        out.push('\n');
        if !r.pass {
            for line in r.detail.lines() {
                out.push_str(&format!("\t{line}\n"));
            }
        }
    }
    let passed = results.iter().filter(|r| r.pass).count();
    out.push_str(&format!("verify-paper\t{passed}/{} checks passed\n", results.len()));
    if passed == results.len() {
        Ok(CmdOutput::ok(out))
    } else {
        Ok(CmdOutput {
            text: out,
            code: 1,
            reason: format!("{} of {} checks failed", results.len() - passed, results.len()),
        })
    }
}
