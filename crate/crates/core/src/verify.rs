//! End-to-end verification suites.
//!
//! Each suite replays one of the structural claims about the model on a
//! truncated, exhaustively enumerated domain and reports violations
//! verbatim.  The suites deliberately pit independent implementations
//! against each other (signature oracle vs tensor machinery, wall model vs
//! path model, closed-form column energy vs crystal-side energy).

use crate::adjoint::{verify_perfect, Adjoint, XY};
use crate::column::{column_big_h, column_big_h_via_psi, phi_inv, WallContext};
use crate::crystal::{
    component, graph_equal, signature_e_position, signature_f_position, signature_stats,
    tensor_e_position, tensor_f_position, tensor_stats, Affinized, Crystal, CrystalGraph,
    Direction, Graded, GraphError, DEFAULT_NODE_CAP,
};
use crate::energy::{h_affine, CheckReport};
use crate::path::{path_component_capped, Path, PathCrystal};
use crate::wall::{
    signature_oracle, wall_e_oracle, wall_e_tensor, wall_eps, wall_eps_tensor, wall_f_oracle,
    wall_f_tensor, wall_phi, wall_phi_tensor, wall_wt_tensor, Wall, WallCrystal, WallMode,
};
use itertools::Itertools;

/// Round-trip `psi`/`phi_inv` over the full valid column domain.
pub fn suite_bijection(ctx: WallContext, s_max: i64, bar_range: i64) -> CheckReport {
    let mut report = CheckReport::new(&format!("bijection over {ctx}"));
    let (sbar_range, tbar_range): (Vec<i64>, Vec<i64>) = match ctx {
        WallContext::Finite { level, .. } => ((0..=2 * level).collect(), (0..=2 * level).collect()),
        WallContext::Infinite => (
            (-bar_range..=bar_range).collect(),
            (-bar_range..=bar_range).collect(),
        ),
    };
    // Column -> element -> column.
    for s in 0..=s_max {
        for &sbar in &sbar_range {
            for &tbar in &tbar_range {
                let Ok(col) = crate::column::Column::new(ctx, s, sbar, tbar) else {
                    continue;
                };
                if (col.sbar, col.tbar) != (sbar, tbar) {
                    continue; // normalisation changed the representative: skip the duplicate
                }
                report.checked += 1;
                match col.psi().map(|g| phi_inv(ctx, &g)) {
                    Ok(Ok(back)) if back == col => {}
                    other => report
                        .violations
                        .push(format!("round trip failed at {col}: {other:?}")),
                }
            }
        }
    }
    // Element -> column -> element, over a matching window.
    let adj = ctx.adjoint();
    let coords: Vec<i64> = match ctx {
        WallContext::Finite { level, .. } => (0..=level).collect(),
        WallContext::Infinite => (-bar_range..=bar_range).collect(),
    };
    for m in 0..=s_max {
        for &x in &coords {
            for &y in &coords {
                let b = XY::new(x, y);
                if !adj.contains(&b) {
                    continue;
                }
                let g = Graded::new(b, -m);
                // Skip elements outside the parity class of genuine columns.
                let Ok(col) = phi_inv(ctx, &g) else { continue };
                if col.validate().is_err() {
                    continue;
                }
                report.checked += 1;
                match col.psi() {
                    Ok(back) if back == g => {}
                    other => report
                        .violations
                        .push(format!("round trip failed at {}({}): {other:?}", g.b, g.m)),
                }
            }
        }
    }
    report
}

/// Closed-form column energy vs crystal-side affine energy, over all valid
/// column pairs in a window.
pub fn suite_column_energy(ctx: WallContext, s_max: i64, bar_range: i64) -> CheckReport {
    let mut report = CheckReport::new(&format!("column energy agreement over {ctx}"));
    let cols = enumerate_columns(ctx, s_max, bar_range);
    for c in &cols {
        for cp in &cols {
            report.checked += 1;
            let closed = column_big_h(c, cp);
            let via_psi = column_big_h_via_psi(c, cp).expect("enumerated columns are valid");
            if closed != via_psi {
                report.violations.push(format!(
                    "H({c} (x) {cp}) = {closed} closed-form but {via_psi} through psi"
                ));
            }
        }
    }
    report
}

fn enumerate_columns(ctx: WallContext, s_max: i64, bar_range: i64) -> Vec<crate::column::Column> {
    let bars: Vec<i64> = match ctx {
        WallContext::Finite { level, .. } => (0..=2 * level).collect(),
        WallContext::Infinite => (-bar_range..=bar_range).collect(),
    };
    let mut out = Vec::new();
    for s in 0..=s_max {
        for &sbar in &bars {
            for &tbar in &bars {
                if let Ok(col) = crate::column::Column::new(ctx, s, sbar, tbar) {
                    if (col.sbar, col.tbar) == (sbar, tbar) {
                        out.push(col);
                    }
                }
            }
        }
    }
    out
}

/// Enumerate the reduced-wall component to a depth (oracle operators).
pub fn wall_component(ctx: WallContext, depth: usize) -> Result<CrystalGraph, GraphError> {
    wall_component_mode(ctx, depth, WallMode::Oracle, DEFAULT_NODE_CAP)
}

pub fn wall_component_mode(
    ctx: WallContext,
    depth: usize,
    mode: WallMode,
    cap: usize,
) -> Result<CrystalGraph, GraphError> {
    let c = WallCrystal { ctx, mode };
    component(&c, &Wall::ground(ctx), Some(depth), Direction::Down, cap)
}

/// All walls within the depth truncation, as elements.
pub fn enumerate_reduced_walls(ctx: WallContext, depth: usize) -> Vec<Wall> {
    let c = WallCrystal {
        ctx,
        mode: WallMode::Oracle,
    };
    let mut seen = vec![Wall::ground(ctx)];
    let mut frontier = seen.clone();
    for _ in 0..depth {
        let mut next = Vec::new();
        for w in &frontier {
            for i in [0usize, 1] {
                if let Some(down) = c.f(i, w) {
                    if !seen.contains(&down) {
                        seen.push(down.clone());
                        next.push(down);
                    }
                }
            }
        }
        frontier = next;
    }
    seen
}

/// The block-level signature oracle against the graded string statistics
/// (the per-column intertwining law): for every enumerated wall, colour and
/// column, the oracle counts must match the energy-constrained maxima
/// computed on the crystal side, and the whole-wall statistics and
/// operators must agree between the oracle and tensor routes.
pub fn suite_intertwine(ctx: WallContext, depth: usize) -> CheckReport {
    let mut report = CheckReport::new(&format!(
        "wall/tensor intertwining over {ctx}, depth {depth}"
    ));
    let aff = Affinized {
        base: ctx.adjoint(),
    };
    for w in enumerate_reduced_walls(ctx, depth) {
        for i in [0usize, 1] {
            let sig = signature_oracle(&w, i);
            // Per-column counts vs the energy-constrained maxima.  Skipped
            // in the limit model, where the rightmost plus count has no
            // neighbour to bound it and is truncated by the oracle.
            if !ctx.is_infinite() {
                for &(k, minus, plus) in &sig.per_column {
                    let (lemma_minus, lemma_plus) = lemma_counts(&aff, &w, k, i);
                    if (minus, plus) != (lemma_minus, lemma_plus) {
                        report.violations.push(format!(
                            "column {k} of {w}, colour {i}: oracle ({minus},{plus}) vs energy-constrained ({lemma_minus},{lemma_plus})"
                        ));
                    }
                }
            }
            // Whole-wall statistics and operators, oracle vs tensor route.
            report.checked += 1;
            let (eo, po) = (wall_eps(&w, i), wall_phi(&w, i));
            let et = wall_eps_tensor(&w, i).expect("valid wall");
            let pt = wall_phi_tensor(&w, i).expect("valid wall");
            if (eo, po) != (et, pt) {
                report.violations.push(format!(
                    "stats of {w}, colour {i}: oracle ({eo},{po}) vs tensor ({et},{pt})"
                ));
            }
            let fo = wall_f_oracle(&w, i).expect("reduced walls stay walls");
            let ft = wall_f_tensor(&w, i).expect("reduced walls stay walls");
            if fo != ft {
                report
                    .violations
                    .push(format!("f_{i}({w}): oracle {fo:?} vs tensor {ft:?}"));
            }
            let eo2 = wall_e_oracle(&w, i).expect("reduced walls stay walls");
            let et2 = wall_e_tensor(&w, i).expect("reduced walls stay walls");
            if eo2 != et2 {
                report
                    .violations
                    .push(format!("e_{i}({w}): oracle {eo2:?} vs tensor {et2:?}"));
            }
        }
    }
    report
}

/// Energy-constrained per-column counts computed on the crystal side:
/// the admissible count of `Y_k` is the largest `n ≤ phi_i(u_k)` keeping
/// `H(f_i^n u_k ⊗ u_{k−1}) ≥ 0` (unconstrained for `k = 0`), the removable
/// count the largest `n ≤ eps_i(u_k)` keeping `H(u_{k+1} ⊗ e_i^n u_k) ≥ 0`,
/// where `u_j = psi(Y_j)`.  Additions and removals must also stay inside
/// the non-positively graded region.
fn lemma_counts(aff: &Affinized<Adjoint>, w: &Wall, k: usize, i: usize) -> (usize, usize) {
    let u = |j: usize| w.column(j).psi().expect("walls hold valid columns");
    let here = u(k);
    let left = u(k + 1);

    let mut minus = 0;
    let mut cur = here;
    while let Some(up) = aff.e(i, &cur) {
        if up.m > 0 || h_affine(&left, &up) < 0 {
            break;
        }
        minus += 1;
        cur = up;
    }

    let mut plus = 0;
    let mut cur = here;
    while let Some(down) = aff.f(i, &cur) {
        if k > 0 && h_affine(&down, &u(k - 1)) < 0 {
            break;
        }
        plus += 1;
        cur = down;
    }
    (minus, plus)
}

/// Closure of the reduced walls under the operators: no operator output may
/// break the wall condition or leave the reduced class.
pub fn suite_reduced_closure(ctx: WallContext, depth: usize) -> CheckReport {
    let mut report = CheckReport::new(&format!("reduced closure over {ctx}, depth {depth}"));
    for w in enumerate_reduced_walls(ctx, depth) {
        for i in [0usize, 1] {
            for (op, res) in [("f", wall_f_oracle(&w, i)), ("e", wall_e_oracle(&w, i))] {
                report.checked += 1;
                match res {
                    Err(err) => report
                        .violations
                        .push(format!("{op}_{i}({w}) broke the wall condition: {err}")),
                    Ok(Some(next)) if !next.is_reduced() => report
                        .violations
                        .push(format!("{op}_{i}({w}) left the reduced class: {next}")),
                    _ => {}
                }
            }
        }
    }
    report
}

/// Weights: closed-form wall weight vs the tensor-side weight, and the
/// balance `⟨h_i, wt⟩ = phi_i − eps_i`.
pub fn suite_wall_weights(ctx: WallContext, depth: usize) -> CheckReport {
    let mut report = CheckReport::new(&format!("wall weights over {ctx}, depth {depth}"));
    for w in enumerate_reduced_walls(ctx, depth) {
        report.checked += 1;
        let closed = w.wt();
        let tensor = wall_wt_tensor(&w, ctx).expect("valid wall");
        if closed != tensor {
            report.violations.push(format!(
                "wt({w}) = {closed} closed-form but {tensor} through psi"
            ));
        }
        for i in [0usize, 1] {
            let balance = wall_phi(&w, i) - wall_eps(&w, i);
            if balance != closed.pair(i) {
                report.violations.push(format!(
                    "<h_{i}, wt({w})> = {} but phi - eps = {balance}",
                    closed.pair(i)
                ));
            }
        }
    }
    report
}

/// Wall realization vs path realization: rooted graph comparison plus
/// weight multiplicity tables.
pub fn suite_isomorphism(ctx: WallContext, depth: usize) -> CheckReport {
    let mut report = CheckReport::new(&format!("wall/path isomorphism over {ctx}, depth {depth}"));
    let walls = match wall_component(ctx, depth) {
        Ok(g) => g,
        Err(e) => {
            report.violations.push(format!("wall component: {e}"));
            return report;
        }
    };
    let paths = match path_component_capped(ctx, depth, DEFAULT_NODE_CAP) {
        Ok(g) => g,
        Err(e) => {
            report.violations.push(format!("path component: {e}"));
            return report;
        }
    };
    report.checked = walls.node_count();
    if let Err(msg) = graph_equal(&walls, &paths) {
        report.violations.push(msg);
    }
    if walls.weight_multiplicities() != paths.weight_multiplicities() {
        report
            .violations
            .push("weight multiplicity tables differ".into());
    }
    report.notes.push(format!(
        "wall side: {} nodes / {} edges; path side: {} nodes / {} edges",
        walls.node_count(),
        walls.edge_count(),
        paths.node_count(),
        paths.edge_count()
    ));
    report
}

/// Multiplicity tables of both realizations, as a report.
pub fn suite_multiplicities(ctx: WallContext, depth: usize) -> CheckReport {
    let mut report = CheckReport::new(&format!("multiplicities over {ctx}, depth {depth}"));
    let walls = wall_component(ctx, depth).map(|g| g.weight_multiplicities());
    let paths =
        path_component_capped(ctx, depth, DEFAULT_NODE_CAP).map(|g| g.weight_multiplicities());
    match (walls, paths) {
        (Ok(wt), Ok(pt)) => {
            report.checked = wt.len();
            if wt != pt {
                report.violations.push("tables differ".into());
            }
            for (w, n) in wt {
                report.notes.push(format!("{w}: {n}"));
            }
        }
        other => report
            .violations
            .push(format!("enumeration failed: {other:?}")),
    }
    report
}

/// The two n-fold tensor implementations (folded two-factor rule vs
/// signature cancellation) agree on statistics and action positions for
/// every string over the level-`l` crystal up to the given length.
pub fn suite_tensor_double(level: i64, max_len: usize) -> CheckReport {
    let c = Adjoint::finite(level);
    let mut report = CheckReport::new(&format!(
        "tensor double implementation, level {level}, strings up to length {max_len}"
    ));
    let elems = c.elements();
    for len in 1..=max_len {
        for s in (0..len)
            .map(|_| elems.iter().copied())
            .multi_cartesian_product()
        {
            for i in [0usize, 1] {
                report.checked += 1;
                if tensor_stats(&c, i, &s) != signature_stats(&c, i, &s) {
                    report
                        .violations
                        .push(format!("stats differ on {s:?}, colour {i}"));
                }
                if tensor_f_position(&c, i, &s) != signature_f_position(&c, i, &s) {
                    report
                        .violations
                        .push(format!("f position differs on {s:?}, colour {i}"));
                }
                if tensor_e_position(&c, i, &s) != signature_e_position(&c, i, &s) {
                    report
                        .violations
                        .push(format!("e position differs on {s:?}, colour {i}"));
                }
            }
        }
    }
    report
}

/// Flatten a [`verify_perfect`] report into a [`CheckReport`].
pub fn suite_perfect(level: i64) -> CheckReport {
    let p = verify_perfect(level);
    let mut report = CheckReport::new(&format!("perfectness, level {level}"));
    report.checked = p.conditions.len();
    for c in &p.conditions {
        let line = format!("{}: {:?} ({})", c.name, c.status, c.detail);
        match c.status {
            crate::adjoint::Status::Failed => report.violations.push(line),
            _ => report.notes.push(line),
        }
    }
    report
}

/// Dominant contexts of level at most `max_level`, plus the worked example
/// context of level four.
pub fn standard_contexts(max_level: i64) -> Vec<WallContext> {
    let mut out = Vec::new();
    for l in 1..=max_level {
        for a in 0..=(l / 2) {
            out.push(WallContext::finite(l, a).expect("dominant by construction"));
        }
    }
    out.push(WallContext::finite(4, 1).expect("level-4 example context"));
    out
}

/// Margin-stability of path operators: growing the materialised tail does
/// not change any operator output on the enumerated component.
pub fn suite_margin_stability(ctx: WallContext, depth: usize) -> CheckReport {
    use crate::crystal::{tail_e, tail_f, TailString};
    let mut report = CheckReport::new(&format!("tail margin stability over {ctx}, depth {depth}"));
    let c = PathCrystal { ctx };
    let aff = Affinized {
        base: ctx.adjoint(),
    };
    let mut seen = vec![Path::ground(ctx)];
    let mut frontier = seen.clone();
    for _ in 0..=depth {
        let mut next_frontier = Vec::new();
        for p in &frontier {
            let ts = TailString::new(ctx.ground_elem(), p.entries.clone());
            for i in [0usize, 1] {
                report.checked += 1;
                let total = ctx.is_infinite();
                if tail_f(&aff, i, &ts, 2, total) != tail_f(&aff, i, &ts, 4, total)
                    || tail_e(&aff, i, &ts, 2) != tail_e(&aff, i, &ts, 4)
                {
                    report
                        .violations
                        .push(format!("margin changed an operator at {}", p.encode()));
                }
                if let Some(down) = c.f(i, p) {
                    if !seen.contains(&down) {
                        seen.push(down.clone());
                        next_frontier.push(down);
                    }
                }
            }
        }
        frontier = next_frontier;
    }
    report
}
