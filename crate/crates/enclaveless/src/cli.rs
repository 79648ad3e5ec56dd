//! Command implementations for the `enclaveless` binary.
//!
//! Exit codes: 0 success, 1 usage error, 2 check violation or value
//! mismatch, 3 cap exceeded. Non-interactive output is deterministic for
//! identical inputs and flags.

use std::fmt;
use std::fs;
use std::io::{self, BufRead, Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use enclaveless::families::{self, FamilyError};
use enclaveless::game::{
    solve_position, solve_with, GameKind, Position, Side, SolveOptions, SolverCaps,
};
use enclaveless::graph::Graph;
use enclaveless::invariants::{compute_invariants_with, InvariantCaps};
use enclaveless::io::{edgelist, emit_records, emit_table, graph6, report::SweepRecord};
use enclaveless::verifier::{self, SweepItem, SweepOptions, SweepSummary};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;
pub const EXIT_CAP: i32 = 3;

/// Largest cap override; the dense solver memo table doubles per vertex.
const MAX_CAP_OVERRIDE: usize = 26;

pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> CliError {
        if e.kind() == io::ErrorKind::BrokenPipe {
            // downstream closed the pipe; leave quietly
            CliError {
                code: EXIT_OK,
                message: String::new(),
            }
        } else {
            CliError {
                code: EXIT_USAGE,
                message: format!("writing output: {e}"),
            }
        }
    }
}

impl CliError {
    fn usage(message: impl Into<String>) -> CliError {
        CliError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn cap(message: impl fmt::Display) -> CliError {
        CliError {
            code: EXIT_CAP,
            message: message.to_string(),
        }
    }

    fn violation(message: impl Into<String>) -> CliError {
        CliError {
            code: EXIT_VIOLATION,
            message: message.into(),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "enclaveless",
    about = "Exact solvers, brute-force invariants, and bound sweeps for the \
             competition-enclaveless and domination games",
    version,
    disable_help_subcommand = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    /// graph6 tokens, one per line
    G6,
    /// edge-list text: "n <count>" then "u v" lines
    Edges,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// aligned human-readable table
    Table,
    /// machine-readable JSON lines
    Records,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Enclaveless,
    Domination,
}

impl From<KindArg> for GameKind {
    fn from(k: KindArg) -> GameKind {
        match k {
            KindArg::Enclaveless => GameKind::Enclaveless,
            KindArg::Domination => GameKind::Domination,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum PlayerArg {
    /// Maximizer (enclaveless game)
    Max,
    /// Minimizer (enclaveless game)
    Min,
    /// Dominator (domination game, minimizes)
    Dominator,
    /// Staller (domination game, maximizes)
    Staller,
}

impl PlayerArg {
    fn side(self) -> Side {
        match self {
            PlayerArg::Max | PlayerArg::Staller => Side::Maximizing,
            PlayerArg::Min | PlayerArg::Dominator => Side::Minimizing,
        }
    }

    fn matches_kind(self, kind: GameKind) -> bool {
        match self {
            PlayerArg::Max | PlayerArg::Min => kind == GameKind::Enclaveless,
            PlayerArg::Dominator | PlayerArg::Staller => kind == GameKind::Domination,
        }
    }
}

#[derive(Args)]
pub struct InputArgs {
    /// Input path, or '-' for standard input.
    #[arg(long, env = "ENCLAVELESS_INPUT")]
    pub input: String,
    /// Input format.
    #[arg(long, value_enum, default_value = "g6", env = "ENCLAVELESS_FORMAT")]
    pub format: InputFormat,
}

#[derive(Args)]
pub struct CapArgs {
    /// Override the brute-force and solver caps (vertices).
    #[arg(long = "cap-n", env = "ENCLAVELESS_CAP_N")]
    pub cap_n: Option<usize>,
}

impl CapArgs {
    fn solver_caps(&self) -> Result<SolverCaps, CliError> {
        let mut caps = SolverCaps::default();
        if let Some(k) = self.validated()? {
            caps.enclaveless = k;
            caps.domination = k;
        }
        Ok(caps)
    }

    fn invariant_caps(&self) -> Result<InvariantCaps, CliError> {
        let mut caps = InvariantCaps::default();
        if let Some(k) = self.validated()? {
            caps.subset_search = k;
            caps.irredundance = k;
        }
        Ok(caps)
    }

    fn validated(&self) -> Result<Option<usize>, CliError> {
        match self.cap_n {
            Some(k) if k == 0 || k > MAX_CAP_OVERRIDE => Err(CliError::usage(format!(
                "--cap-n must be between 1 and {MAX_CAP_OVERRIDE}"
            ))),
            other => Ok(other),
        }
    }
}

#[derive(Subcommand)]
pub enum Command {
    /// Compute the exact invariant bundle for each input graph.
    Invariants {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        caps: CapArgs,
        #[arg(long, value_enum, default_value = "table", env = "ENCLAVELESS_OUT")]
        out: OutputFormat,
    },
    /// Solve a game exactly and print the optimal transcript.
    Game {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        caps: CapArgs,
        #[arg(long, value_enum, env = "ENCLAVELESS_KIND")]
        kind: KindArg,
        /// Who moves first.
        #[arg(long, value_enum, env = "ENCLAVELESS_STARTER")]
        starter: PlayerArg,
        /// Solve with alpha-beta pruning instead of plain minimax.
        #[arg(long)]
        alpha_beta: bool,
        #[arg(long, value_enum, default_value = "table", env = "ENCLAVELESS_OUT")]
        out: OutputFormat,
    },
    /// Generate a named family member and print its graph6 token.
    Family {
        #[command(subcommand)]
        family: FamilyCommand,
    },
    /// Run the check catalog over a corpus.
    Sweep {
        /// Built-in exhaustive labeled corpus up to this order (<= 7).
        #[arg(long, conflicts_with_all = ["input", "random"])]
        exhaustive: Option<usize>,
        /// Restrict the exhaustive corpus to connected graphs.
        #[arg(long, requires = "exhaustive")]
        connected: bool,
        /// graph6 stream path, or '-' for standard input.
        #[arg(long, env = "ENCLAVELESS_INPUT")]
        input: Option<String>,
        /// Seeded random corpus COUNT:NMIN-NMAX.
        #[arg(long, conflicts_with = "input")]
        random: Option<String>,
        /// Seed for the random corpus.
        #[arg(long, default_value = "0", env = "ENCLAVELESS_SEED")]
        seed: u64,
        /// Comma-separated check names (default: full catalog).
        #[arg(long, value_delimiter = ',', env = "ENCLAVELESS_CHECKS")]
        checks: Vec<String>,
        /// Also solve the domination game per graph.
        #[arg(long)]
        include_domination: bool,
        #[command(flatten)]
        caps: CapArgs,
        #[arg(long, value_enum, default_value = "table", env = "ENCLAVELESS_OUT")]
        out: OutputFormat,
    },
    /// Recompute the table of known game values and verify it.
    Reproduce {
        /// Include the 20-vertex path-corona rows.
        #[arg(long)]
        heavy: bool,
    },
    /// Play a game against the exact engine, line by line.
    Play {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        caps: CapArgs,
        #[arg(long, value_enum, env = "ENCLAVELESS_KIND")]
        kind: KindArg,
        /// The side you play.
        #[arg(long, value_enum)]
        human: PlayerArg,
        /// Who moves first.
        #[arg(long, value_enum, env = "ENCLAVELESS_STARTER")]
        starter: PlayerArg,
    },
}

#[derive(Subcommand)]
pub enum FamilyCommand {
    /// Path on n vertices.
    Path { n: usize },
    /// Cycle on n vertices.
    Cycle { n: usize },
    /// Star with n leaves.
    Star { n: usize },
    /// Complete graph on n vertices.
    Complete { n: usize },
    /// Two adjacent centers with k leaves each.
    DoubleStar { k: usize },
    /// Corona of the n-path, with path/pendant labels.
    CoronaPath { n: usize },
    /// Ring of m near-complete blocks of degree r, with connector labels.
    ConnectorRing { m: usize, r: usize },
    /// Glued line graphs of tree coronas, from a spec file.
    FamilyF {
        /// Spec path, or '-' for standard input.
        #[arg(long)]
        spec: String,
    },
    /// Tree decoded from a pruefer sequence.
    TreePrufer {
        /// Sequence entries; the tree has length + 2 vertices.
        seq: Vec<usize>,
    },
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::usage(format!("reading standard input: {e}")))?;
        Ok(buf)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::usage(format!("reading {path}: {e}")))
    }
}

fn parse_graphs(text: &str, format: InputFormat) -> Result<Vec<Graph>, CliError> {
    match format {
        InputFormat::G6 => graph6::parse_graph6_stream(text)
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| CliError::usage(e.to_string())),
        InputFormat::Edges => Ok(vec![
            edgelist::parse_edge_list(text).map_err(|e| CliError::usage(e.to_string()))?
        ]),
    }
}

fn first_graph(text: &str, format: InputFormat) -> Result<Graph, CliError> {
    parse_graphs(text, format)?
        .into_iter()
        .next()
        .ok_or_else(|| CliError::usage("input contains no graph"))
}

pub fn run(cli: Cli, out: &mut impl Write) -> Result<i32, CliError> {
    match cli.command {
        Command::Invariants {
            input,
            caps,
            out: format,
        } => cmd_invariants(input, caps, format, out),
        Command::Game {
            input,
            caps,
            kind,
            starter,
            alpha_beta,
            out: format,
        } => cmd_game(input, caps, kind, starter, alpha_beta, format, out),
        Command::Family { family } => cmd_family(family, out),
        Command::Sweep {
            exhaustive,
            connected,
            input,
            random,
            seed,
            checks,
            include_domination,
            caps,
            out: format,
        } => cmd_sweep(
            exhaustive,
            connected,
            input,
            random,
            seed,
            checks,
            include_domination,
            caps,
            format,
            out,
        ),
        Command::Reproduce { heavy } => cmd_reproduce(heavy, out),
        Command::Play {
            input,
            caps,
            kind,
            human,
            starter,
        } => {
            let stdin = io::stdin();
            let mut lines = stdin.lock().lines();
            cmd_play(input, caps, kind, human, starter, &mut lines, out)
        }
    }
}

fn cmd_invariants(
    input: InputArgs,
    caps: CapArgs,
    format: OutputFormat,
    out: &mut impl Write,
) -> Result<i32, CliError> {
    let graphs = parse_graphs(&read_input(&input.input)?, input.format)?;
    let inv_caps = caps.invariant_caps()?;
    let mut rows = Vec::new();
    for g in &graphs {
        let report = compute_invariants_with(g, inv_caps).map_err(CliError::cap)?;
        rows.push((graph6::write_graph6(g), report));
    }
    match format {
        OutputFormat::Records => {
            for (token, report) in &rows {
                let mut value = serde_json::to_value(report).expect("report serializes");
                value["graph6"] = json!(token);
                writeln!(out, "{value}")?;
            }
        }
        OutputFormat::Table => {
            writeln!(
                out,
                "{:<12} {:>3} {:>5} {:>5} {:>4} {:>4} {:>5} {:>4} {:>8}",
                "graph6", "n", "gamma", "Gamma", "psi", "Psi", "alpha", "IR", "wellDom"
            )?;
            for (token, r) in &rows {
                writeln!(
                    out,
                    "{:<12} {:>3} {:>5} {:>5} {:>4} {:>4} {:>5} {:>4} {:>8}",
                    token,
                    r.n,
                    r.gamma,
                    r.upper_gamma,
                    r.psi,
                    r.upper_psi,
                    r.alpha,
                    r.ir.map_or_else(|| "-".into(), |v| v.to_string()),
                    if r.well_dominated { "yes" } else { "no" }
                )?;
                if r.n == 1 {
                    writeln!(
                        out,
                        "# note: single-vertex graph; its only maximal enclaveless set is empty"
                    )?;
                }
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_game(
    input: InputArgs,
    caps: CapArgs,
    kind: KindArg,
    starter: PlayerArg,
    alpha_beta: bool,
    format: OutputFormat,
    out: &mut impl Write,
) -> Result<i32, CliError> {
    let kind: GameKind = kind.into();
    if !starter.matches_kind(kind) {
        return Err(CliError::usage(
            "starter does not belong to this game kind (use max/min for enclaveless, \
             dominator/staller for domination)",
        ));
    }
    let g = first_graph(&read_input(&input.input)?, input.format)?;
    let opts = SolveOptions {
        caps: caps.solver_caps()?,
        alpha_beta,
        ..SolveOptions::default()
    };
    let outcome = solve_with(&g, kind, starter.side(), &opts).map_err(CliError::cap)?;

    // replay the variation to guarantee the transcript matches the value
    let mut pos = Position::opening(&g, kind, starter.side());
    let mut transcript = Vec::new();
    for &v in &outcome.principal_variation {
        transcript.push((pos.mover(), v));
        pos = pos
            .apply(v)
            .expect("principal variation must replay cleanly");
    }
    assert!(pos.is_terminal() && pos.move_count() == outcome.total_moves);

    match format {
        OutputFormat::Records => {
            let value = json!({
                "graph6": graph6::write_graph6(&g),
                "kind": match kind { GameKind::Enclaveless => "enclaveless", GameKind::Domination => "domination" },
                "starter": starter.side().name(kind),
                "total_moves": outcome.total_moves,
                "optimal_first_moves": outcome.optimal_first_moves.iter().collect::<Vec<_>>(),
                "principal_variation": outcome.principal_variation,
            });
            writeln!(out, "{value}")?;
        }
        OutputFormat::Table => {
            writeln!(
                out,
                "graph: {} (n={}), game: {}, starter: {}",
                graph6::write_graph6(&g),
                g.order(),
                match kind {
                    GameKind::Enclaveless => "enclaveless",
                    GameKind::Domination => "domination",
                },
                starter.side().name(kind)
            )?;
            writeln!(out, "value: {}", outcome.total_moves)?;
            writeln!(out, "optimal first moves: {}", outcome.optimal_first_moves)?;
            for (i, (side, v)) in transcript.iter().enumerate() {
                writeln!(out, "{:>3}. {} plays {}", i + 1, side.name(kind), v)?;
            }
            writeln!(out, "final set: {}", pos.played())?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_family(family: FamilyCommand, out: &mut impl Write) -> Result<i32, CliError> {
    let fam = |r: Result<Graph, FamilyError>| r.map_err(|e| CliError::usage(e.to_string()));
    let g = match family {
        FamilyCommand::Path { n } => fam(families::path(n))?,
        FamilyCommand::Cycle { n } => fam(families::cycle(n))?,
        FamilyCommand::Star { n } => fam(families::star(n))?,
        FamilyCommand::Complete { n } => fam(families::complete(n))?,
        FamilyCommand::DoubleStar { k } => fam(families::double_star(k))?,
        FamilyCommand::CoronaPath { n } => fam(families::corona_path(n))?,
        FamilyCommand::ConnectorRing { m, r } => fam(families::connector_ring(m, r))?,
        FamilyCommand::FamilyF { spec } => {
            let text = read_input(&spec)?;
            let parsed =
                families::parse_family_spec(&text).map_err(|e| CliError::usage(e.to_string()))?;
            let member =
                families::build_family_f(&parsed).map_err(|e| CliError::usage(e.to_string()))?;
            member.graph
        }
        FamilyCommand::TreePrufer { seq } => fam(families::tree_from_prufer(&seq))?,
    };
    writeln!(out, "{}", graph6::write_graph6(&g))?;
    Ok(EXIT_OK)
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    exhaustive: Option<usize>,
    connected: bool,
    input: Option<String>,
    random: Option<String>,
    seed: u64,
    checks: Vec<String>,
    include_domination: bool,
    caps: CapArgs,
    format: OutputFormat,
    out: &mut impl Write,
) -> Result<i32, CliError> {
    let corpus: Vec<Graph> = match (&exhaustive, &input, &random) {
        (Some(n), None, None) => verifier::exhaustive_graphs(*n, connected)
            .map_err(CliError::cap)?
            .collect(),
        (None, Some(path), None) => parse_graphs(&read_input(path)?, InputFormat::G6)?,
        (None, None, Some(spec)) => {
            let parsed: Option<(usize, usize, usize)> =
                spec.split_once(':').and_then(|(count, range)| {
                    let (lo, hi) = range.split_once('-')?;
                    Some((count.parse().ok()?, lo.parse().ok()?, hi.parse().ok()?))
                });
            let (count, lo, hi) = parsed.ok_or_else(|| {
                CliError::usage("--random expects COUNT:NMIN-NMAX, e.g. 500:2-10")
            })?;
            if lo == 0 || lo > hi || hi > enclaveless::MAX_ORDER {
                return Err(CliError::usage(
                    "--random range must satisfy 1 <= NMIN <= NMAX <= 64",
                ));
            }
            verifier::random_graphs(count, lo, hi, seed).collect()
        }
        (None, None, None) => {
            return Err(CliError::usage(
                "choose a corpus: --exhaustive N, --input PATH, or --random SPEC",
            ))
        }
        _ => return Err(CliError::usage("choose exactly one corpus source")),
    };

    let catalog = if checks.is_empty() {
        verifier::default_catalog()
    } else {
        verifier::catalog_subset(&checks).map_err(CliError::usage)?
    };
    let opts = SweepOptions {
        invariant_caps: caps.invariant_caps()?,
        solver_caps: caps.solver_caps()?,
        include_domination,
        ..SweepOptions::default()
    };

    let mut summary = SweepSummary::default();
    let mut records: Vec<SweepRecord> = Vec::new();
    for item in verifier::run_checks(corpus, &catalog, &opts) {
        summary.add(&item);
        match item {
            SweepItem::Record(record) => records.push(record),
            SweepItem::Skipped { graph6, reason } => {
                writeln!(out, "# skipped {graph6}: {reason}")?;
            }
        }
    }
    match format {
        OutputFormat::Table => write!(out, "{}", emit_table(&records))?,
        OutputFormat::Records => write!(out, "{}", emit_records(&records))?,
    }
    writeln!(out, "# {}", summary.render())?;
    if summary.all_passed() {
        Ok(EXIT_OK)
    } else {
        Ok(EXIT_VIOLATION)
    }
}

fn cmd_reproduce(heavy: bool, out: &mut impl Write) -> Result<i32, CliError> {
    let rows = verifier::reproduce(heavy);
    write!(out, "{}", verifier::render_table(&rows))?;
    let failures: Vec<_> = rows.iter().filter(|r| !r.pass).collect();
    if failures.is_empty() {
        writeln!(out, "# all {} values reproduced", rows.len())?;
        Ok(EXIT_OK)
    } else {
        Err(CliError::violation(format!(
            "{} of {} values failed to reproduce: {}",
            failures.len(),
            rows.len(),
            failures
                .iter()
                .map(|r| r.name.as_str())
                .collect::<Vec<_>>()
                .join(", ")
        )))
    }
}

fn cmd_play(
    input: InputArgs,
    caps: CapArgs,
    kind: KindArg,
    human: PlayerArg,
    starter: PlayerArg,
    lines: &mut impl Iterator<Item = io::Result<String>>,
    out: &mut impl Write,
) -> Result<i32, CliError> {
    let kind: GameKind = kind.into();
    for (name, arg) in [("starter", starter), ("human", human)] {
        if !arg.matches_kind(kind) {
            return Err(CliError::usage(format!(
                "--{name} does not belong to this game kind"
            )));
        }
    }
    let g = first_graph(&read_input(&input.input)?, input.format)?;
    let solver = SolveOptions {
        caps: caps.solver_caps()?,
        ..SolveOptions::default()
    };
    let cap = match kind {
        GameKind::Enclaveless => solver.caps.enclaveless,
        GameKind::Domination => solver.caps.domination,
    };
    if g.order() > cap {
        return Err(CliError::cap(format!(
            "graph order {} exceeds the solver cap {cap}",
            g.order()
        )));
    }
    let human_side = human.side();
    let mut pos = Position::opening(&g, kind, starter.side());
    writeln!(
        out,
        "playing the {} game on {} (n={}); you are {}, {} starts",
        match kind {
            GameKind::Enclaveless => "enclaveless",
            GameKind::Domination => "domination",
        },
        graph6::write_graph6(&g),
        g.order(),
        human_side.name(kind),
        starter.side().name(kind)
    )?;

    while !pos.is_terminal() {
        let legal = pos.legal_moves();
        writeln!(
            out,
            "played {} ({} vertices); {} to move; legal: {}",
            pos.played(),
            pos.move_count(),
            pos.mover().name(kind),
            legal
        )?;
        if pos.mover() == human_side {
            let v = loop {
                write!(out, "your move> ")?;
                out.flush()?;
                let Some(line) = lines.next() else {
                    writeln!(out, "input closed; leaving the game")?;
                    return Ok(EXIT_OK);
                };
                let line = line.map_err(|e| CliError::usage(e.to_string()))?;
                let token = line.trim();
                if token.is_empty() {
                    continue;
                }
                if token == "q" || token == "quit" {
                    writeln!(out, "leaving the game")?;
                    return Ok(EXIT_OK);
                }
                match token.parse::<usize>() {
                    Ok(v) if legal.contains(v) => break v,
                    Ok(v) => writeln!(out, "illegal move {v}; legal: {legal}")?,
                    Err(_) => writeln!(out, "enter a vertex id or q")?,
                }
            };
            pos = pos.apply(v).expect("validated");
        } else {
            let outcome = solve_position(&pos, &solver).map_err(CliError::cap)?;
            let v = outcome
                .principal_variation
                .first()
                .copied()
                .expect("non-terminal position has an optimal move");
            writeln!(out, "{} plays {}", pos.mover().name(kind), v)?;
            pos = pos.apply(v).expect("engine move is legal");
        }
    }

    writeln!(
        out,
        "game over: {} vertices played: {}",
        pos.move_count(),
        pos.played()
    )?;
    if kind == GameKind::Enclaveless {
        assert!(
            enclaveless::invariants::is_maximal_enclaveless(&g, pos.played()),
            "finished set must be maximal enclaveless"
        );
        match compute_invariants_with(&g, caps.invariant_caps()?) {
            Ok(report) => writeln!(
                out,
                "bounds: psi = {} <= {} <= Psi = {}",
                report.psi,
                pos.move_count(),
                report.upper_psi
            )?,
            Err(e) => writeln!(out, "# bounds skipped: {e}")?,
        }
    } else {
        assert!(
            enclaveless::invariants::is_dominating(&g, pos.played()),
            "finished set must dominate"
        );
        writeln!(out, "the played set dominates the graph")?;
    }
    Ok(EXIT_OK)
}
