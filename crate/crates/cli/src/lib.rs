#![forbid(unsafe_code)]

//! Command-line surface for the `ywall-core` library: crystal graph export,
//! Young-wall enumeration and manipulation, and the verification suites.
//!
//! Every command is deterministic given its flags.  Exit codes: `0` pass,
//! `1` verification failure, `2` usage error, `3` resource cap exceeded.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use ywall_core::{
    adjoint_graph, column_big_h, minimal_vector, render_wall, standard_contexts, suite_bijection,
    suite_intertwine, suite_isomorphism, suite_multiplicities, suite_perfect, verify_energy_axioms,
    verify_h_constancy, wall_component_mode, wall_e_oracle, wall_f_oracle, CheckReport, Column,
    CrystalGraph, GraphError, Wall, WallClass, WallContext, WallMode, DEFAULT_NODE_CAP,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

/// Toolkit for `A2(2)` adjoint crystals and the Young-wall model.
#[derive(Parser, Debug)]
#[command(name = "ywall", version, about)]
pub struct Cli {
    /// Worker count.  Accepted for compatibility; output is identical for
    /// every value.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,

    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Emit the level-l adjoint crystal graph.
    Crystal {
        /// Level of the crystal (at least 1).
        #[arg(long)]
        level: i64,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
    /// Enumerate Young walls over a dominant weight, or over the limit
    /// context (`--lambda inf`).
    Walls {
        /// Highest weight as "l,a" (level and ground index), or "inf".
        #[arg(long)]
        lambda: LambdaArg,
        /// Truncation depth: crystal-operator steps with `--reduced-only`,
        /// block-count budget otherwise.
        #[arg(long, default_value_t = 3)]
        depth: usize,
        /// Walk the crystal of reduced walls R(lambda) instead of
        /// enumerating all walls Y(lambda).
        #[arg(long)]
        reduced_only: bool,
        #[arg(long, value_enum, default_value_t = WallsFormat::Table)]
        format: WallsFormat,
        /// Abort with exit code 3 when the enumeration exceeds this size.
        #[arg(long, default_value_t = DEFAULT_NODE_CAP)]
        node_cap: usize,
    },
    /// Apply a sequence of operators to a wall loaded from a JSON file.
    Act {
        /// Path to a wall JSON file.
        #[arg(long)]
        file: PathBuf,
        /// Whitespace-separated operators, e.g. "F0 F1 E0".
        #[arg(long)]
        ops: String,
        #[arg(long, value_enum, default_value_t = ActFormat::Ascii)]
        format: ActFormat,
    },
    /// Run a verification suite; exit code 0 iff every check passes.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteName,
        /// Restrict to one context ("l,a" or "inf") where applicable.
        #[arg(long)]
        lambda: Option<LambdaArg>,
        /// Maximal level for level-indexed suites.
        #[arg(long)]
        level: Option<i64>,
        /// Truncation depth for depth-indexed suites.
        #[arg(long)]
        depth: Option<usize>,
        /// Emit the report as JSON instead of text.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum WallsFormat {
    Dot,
    Json,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ActFormat {
    Ascii,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteName {
    EnergyAxioms,
    HConstancy,
    Perfect,
    Bijection,
    Intertwine,
    IsoLambda,
    IsoInfinity,
    Multiplicities,
}

/// A `--lambda` value: "l,a" for the dominant weight `(l-2a)Λ0 + aΛ1`, or
/// "inf" for the limit context.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LambdaArg(pub WallContext);

impl FromStr for LambdaArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") || s.eq_ignore_ascii_case("infinity") {
            return Ok(LambdaArg(WallContext::Infinite));
        }
        let (l, a) = s
            .split_once(',')
            .ok_or_else(|| format!("expected \"l,a\" or \"inf\", got {s:?}"))?;
        let l: i64 = l
            .trim()
            .parse()
            .map_err(|e| format!("bad level {l:?}: {e}"))?;
        let a: i64 = a
            .trim()
            .parse()
            .map_err(|e| format!("bad ground index {a:?}: {e}"))?;
        WallContext::finite(l, a)
            .map(LambdaArg)
            .map_err(|e| e.to_string())
    }
}

/// Run a parsed command, collecting all output; returns the exit code and
/// what should be printed to stdout.
pub fn execute(cli: &Cli) -> (i32, String) {
    match &cli.cmd {
        Cmd::Crystal { level, format } => cmd_crystal(*level, *format),
        Cmd::Walls {
            lambda,
            depth,
            reduced_only,
            format,
            node_cap,
        } => cmd_walls(lambda.0, *depth, *reduced_only, *format, *node_cap),
        Cmd::Act { file, ops, format } => cmd_act(file, ops, *format),
        Cmd::Verify {
            suite,
            lambda,
            level,
            depth,
            json,
        } => cmd_verify(*suite, lambda.map(|l| l.0), *level, *depth, *json),
    }
}

// ---------------------------------------------------------------------------
// crystal
// ---------------------------------------------------------------------------

fn cmd_crystal(level: i64, format: GraphFormat) -> (i32, String) {
    if level < 1 {
        return (
            EXIT_USAGE,
            format!("error: --level must be at least 1, got {level}\n"),
        );
    }
    match adjoint_graph(level) {
        Ok(g) => (EXIT_PASS, render_graph(&g, format)),
        Err(e) => (EXIT_CAP, format!("error: {e}\n")),
    }
}

fn render_graph(g: &CrystalGraph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Dot => g.to_dot(),
        GraphFormat::Json => format!("{:#}\n", g.to_json()),
    }
}

// ---------------------------------------------------------------------------
// walls
// ---------------------------------------------------------------------------

fn cmd_walls(
    ctx: WallContext,
    depth: usize,
    reduced_only: bool,
    format: WallsFormat,
    node_cap: usize,
) -> (i32, String) {
    if reduced_only {
        let g = match wall_component_mode(ctx, depth, WallMode::Oracle, node_cap) {
            Ok(g) => g,
            Err(e @ GraphError::NodeCapExceeded { .. }) => {
                return (EXIT_CAP, format!("error: {e}\n"));
            }
        };
        let out = match format {
            WallsFormat::Dot => g.to_dot(),
            WallsFormat::Json => format!("{:#}\n", g.to_json()),
            WallsFormat::Table => weight_table(g.weight_multiplicities()),
        };
        return (EXIT_PASS, out);
    }
    if format == WallsFormat::Dot {
        let msg = "error: --format dot needs --reduced-only (the full wall \
                   enumeration carries no edges)\n";
        return (EXIT_USAGE, msg.to_string());
    }
    let walls = match enumerate_walls(ctx, depth, node_cap) {
        Ok(walls) => walls,
        Err(e) => return (EXIT_CAP, format!("error: {e}\n")),
    };
    let out = match format {
        WallsFormat::Json => {
            format!(
                "{:#}\n",
                serde_json::to_value(&walls).expect("walls serialize")
            )
        }
        WallsFormat::Table => {
            let mut counts: BTreeMap<_, usize> = BTreeMap::new();
            for w in &walls {
                *counts.entry(w.wt()).or_default() += 1;
            }
            let mut out = weight_table(counts);
            let _ = writeln!(out, "total: {} walls", walls.len());
            out
        }
        WallsFormat::Dot => unreachable!("rejected above"),
    };
    (EXIT_PASS, out)
}

fn weight_table(counts: BTreeMap<ywall_core::Weight, usize>) -> String {
    let mut out = String::new();
    for (wt, n) in counts {
        let _ = writeln!(out, "{wt}  x{n}");
    }
    out
}

/// All walls (reduced or not) whose columns fit in a block-count budget of
/// `depth`, including the ground wall.  Each stored column costs
/// `max(s + |t|/2, 1)` units, so the enumeration is finite; the output is
/// sorted by encoding.
pub fn enumerate_walls(
    ctx: WallContext,
    depth: usize,
    cap: usize,
) -> Result<Vec<Wall>, GraphError> {
    let budget = depth as i64;
    let ground = ctx.ground_column();
    let bar_span = match ctx {
        WallContext::Finite { level, .. } => 2 * level + 2 * budget,
        WallContext::Infinite => 2 * budget,
    };
    let lo = if ctx.is_infinite() { -bar_span } else { 0 };
    let mut candidates: Vec<(Column, i64)> = Vec::new();
    for s in 0..=budget {
        for sbar in lo..=bar_span {
            for tbar in lo..=bar_span {
                let Ok(col) = Column::new(ctx, s, sbar, tbar) else {
                    continue;
                };
                if col == ground || candidates.iter().any(|(c, _)| *c == col) {
                    continue;
                }
                let units = (s + col.t().abs() / 2).max(1);
                if units <= budget {
                    candidates.push((col, units));
                }
            }
        }
    }
    candidates.sort_by_key(|(c, _)| (c.s, c.sbar, c.tbar));

    let mut out = vec![Wall::ground(ctx)];
    // Depth-first extension to the left: `stack` holds (columns so far,
    // remaining budget); columns[0] is the rightmost.
    let mut stack: Vec<(Vec<Column>, i64)> = vec![(Vec::new(), budget)];
    while let Some((cols, left)) = stack.pop() {
        for (col, units) in &candidates {
            if *units > left {
                continue;
            }
            // The wall condition between the new (deeper) column and its
            // right neighbour; the ground tail is checked by `validate`.
            if let Some(prev) = cols.last() {
                if column_big_h(col, prev) < 0 {
                    continue;
                }
            }
            let mut next = cols.clone();
            next.push(*col);
            let Ok(w) = Wall::new(ctx, next.clone()) else {
                continue;
            };
            if matches!(w.validate(), WallClass::NotAWall { .. }) {
                continue;
            }
            if !out.contains(&w) {
                out.push(w);
                if out.len() > cap {
                    return Err(GraphError::NodeCapExceeded { cap });
                }
            }
            stack.push((next, left - units));
        }
    }
    out.sort_by_key(|w| w.encode());
    Ok(out)
}

// ---------------------------------------------------------------------------
// act
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Op {
    F(usize),
    E(usize),
}

impl Op {
    fn parse(tok: &str) -> Result<Op, String> {
        match tok.to_ascii_uppercase().as_str() {
            "F0" => Ok(Op::F(0)),
            "F1" => Ok(Op::F(1)),
            "E0" => Ok(Op::E(0)),
            "E1" => Ok(Op::E(1)),
            other => Err(format!(
                "unknown operator {other:?} (expected F0, F1, E0 or E1)"
            )),
        }
    }
}

impl std::fmt::Display for Op {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Op::F(i) => write!(f, "F{i}"),
            Op::E(i) => write!(f, "E{i}"),
        }
    }
}

#[derive(Serialize)]
struct ActReport {
    applied: Vec<String>,
    /// The operator that returned null, if the sequence stopped early.
    null_at: Option<String>,
    result: Option<Wall>,
}

fn cmd_act(file: &PathBuf, ops: &str, format: ActFormat) -> (i32, String) {
    let raw = match std::fs::read_to_string(file) {
        Ok(raw) => raw,
        Err(e) => {
            return (
                EXIT_USAGE,
                format!("error: cannot read {}: {e}\n", file.display()),
            )
        }
    };
    let wall: Wall = match serde_json::from_str(&raw) {
        Ok(w) => w,
        Err(e) => {
            return (
                EXIT_USAGE,
                format!("error: {} is not a wall: {e}\n", file.display()),
            )
        }
    };
    if matches!(wall.validate(), WallClass::NotAWall { .. }) {
        return (
            EXIT_USAGE,
            format!("error: {} violates the wall condition\n", file.display()),
        );
    }
    let parsed: Result<Vec<Op>, String> = ops.split_whitespace().map(Op::parse).collect();
    let parsed = match parsed {
        Ok(p) => p,
        Err(e) => return (EXIT_USAGE, format!("error: {e}\n")),
    };

    let mut current = wall;
    let mut report = ActReport {
        applied: Vec::new(),
        null_at: None,
        result: None,
    };
    for op in &parsed {
        let step = match op {
            Op::F(i) => wall_f_oracle(&current, *i),
            Op::E(i) => wall_e_oracle(&current, *i),
        };
        match step {
            Ok(Some(next)) => {
                report.applied.push(op.to_string());
                current = next;
            }
            Ok(None) => {
                report.null_at = Some(op.to_string());
                break;
            }
            Err(e) => return (EXIT_FAIL, format!("error: {op} failed: {e}\n")),
        }
    }
    if report.null_at.is_none() {
        report.result = Some(current.clone());
    }

    let out = match format {
        ActFormat::Json => {
            format!(
                "{:#}\n",
                serde_json::to_value(&report).expect("report serialize")
            )
        }
        ActFormat::Ascii => match &report.null_at {
            Some(op) => format!(
                "null: {op} is not defined after [{}]\n",
                report.applied.join(" ")
            ),
            None => format!(
                "applied [{}]:\n{}",
                report.applied.join(" "),
                render_wall(&current)
            ),
        },
    };
    (EXIT_PASS, out)
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct VerifyReport {
    suite: String,
    passed: bool,
    reports: Vec<CheckReport>,
}

fn cmd_verify(
    suite: SuiteName,
    lambda: Option<WallContext>,
    level: Option<i64>,
    depth: Option<usize>,
    json: bool,
) -> (i32, String) {
    let contexts = |default_level: i64, with_infinity: bool| -> Vec<WallContext> {
        match lambda {
            Some(ctx) => vec![ctx],
            None => {
                let mut ctxs = standard_contexts(level.unwrap_or(default_level));
                if with_infinity {
                    ctxs.push(WallContext::Infinite);
                }
                ctxs
            }
        }
    };

    let reports: Vec<CheckReport> = match suite {
        SuiteName::EnergyAxioms => (1..=level.unwrap_or(5)).map(verify_energy_axioms).collect(),
        SuiteName::HConstancy => (1..=level.unwrap_or(3))
            .map(|l| verify_h_constancy(l, 8, depth.unwrap_or(10)))
            .collect(),
        SuiteName::Perfect => (1..=level.unwrap_or(4))
            .map(|l| {
                let mut r = suite_perfect(l);
                for a in 0..=(l / 2) {
                    let b = minimal_vector(l, a).expect("dominant by construction");
                    r.notes.push(format!("minimal vector for a = {a}: {b}"));
                }
                r
            })
            .collect(),
        SuiteName::Bijection => contexts(5, true)
            .into_iter()
            .map(|ctx| suite_bijection(ctx, 10, 10))
            .collect(),
        SuiteName::Intertwine => contexts(3, false)
            .into_iter()
            .map(|ctx| suite_intertwine(ctx, depth.unwrap_or(6)))
            .collect(),
        SuiteName::IsoLambda => contexts(3, false)
            .into_iter()
            .map(|ctx| suite_isomorphism(ctx, depth.unwrap_or(6)))
            .collect(),
        SuiteName::IsoInfinity => {
            vec![suite_isomorphism(WallContext::Infinite, depth.unwrap_or(7))]
        }
        SuiteName::Multiplicities => {
            let mut ctxs = contexts(3, false);
            if lambda.is_none() {
                ctxs.push(WallContext::Infinite);
            }
            ctxs.into_iter()
                .map(|ctx| suite_multiplicities(ctx, depth.unwrap_or(6)))
                .collect()
        }
    };

    let passed = reports.iter().all(CheckReport::passed);
    let suite_name = format!("{suite:?}");
    let out = if json {
        let report = VerifyReport {
            suite: suite_name,
            passed,
            reports,
        };
        format!(
            "{:#}\n",
            serde_json::to_value(&report).expect("report serialize")
        )
    } else {
        let mut out = String::new();
        for r in &reports {
            let verdict = if r.passed() { "pass" } else { "FAIL" };
            let _ = writeln!(out, "{verdict}  {} ({} checks)", r.name, r.checked);
            for v in &r.violations {
                let _ = writeln!(out, "      violation: {v}");
            }
            for n in &r.notes {
                let _ = writeln!(out, "      note: {n}");
            }
        }
        let _ = writeln!(
            out,
            "{}: {}",
            suite_name,
            if passed { "PASS" } else { "FAIL" }
        );
        out
    };
    (if passed { EXIT_PASS } else { EXIT_FAIL }, out)
}
