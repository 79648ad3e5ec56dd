//! Regression table of known exact game values, recomputed by the solver.

use crate::families;
use crate::game::{solve, GameKind, Side};
use crate::graph::Graph;

/// One recomputed value with its expectation.
#[derive(Clone, Debug)]
pub struct RegressionRow {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

impl RegressionRow {
    fn exact(name: impl Into<String>, expected: usize, computed: usize) -> RegressionRow {
        RegressionRow {
            name: name.into(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            pass: expected == computed,
        }
    }

    fn at_least(name: impl Into<String>, bound: usize, computed: usize) -> RegressionRow {
        RegressionRow {
            name: name.into(),
            expected: format!(">= {bound}"),
            computed: computed.to_string(),
            pass: computed >= bound,
        }
    }
}

fn value(g: &Graph, kind: GameKind, starter: Side) -> usize {
    solve(g, kind, starter).expect("within caps").total_moves
}

/// Maximizer-start enclaveless value of the n-path.
pub fn path_enclaveless_max(n: usize) -> usize {
    (3 * n + 1) / 5
}

/// Minimizer-start enclaveless value of the n-path.
pub fn path_enclaveless_min(n: usize) -> usize {
    3 * n / 5
}

/// Dominator-start domination game value of the n-path.
pub fn path_domination_dominator(n: usize) -> usize {
    if n % 4 == 3 {
        n.div_ceil(2) - 1
    } else {
        n.div_ceil(2)
    }
}

/// Staller-start domination game value of the n-path.
pub fn path_domination_staller(n: usize) -> usize {
    n.div_ceil(2)
}

/// Recomputes every tabulated value. The heavy path-corona rows solve a
/// 20-vertex domination game and are gated behind `include_heavy`.
pub fn reproduce(include_heavy: bool) -> Vec<RegressionRow> {
    let mut rows = Vec::new();

    for n in 2..=13 {
        let p = families::path(n).unwrap();
        rows.push(RegressionRow::exact(
            format!("enclaveless-path-{n}-max-start"),
            path_enclaveless_max(n),
            value(&p, GameKind::Enclaveless, Side::Maximizing),
        ));
        rows.push(RegressionRow::exact(
            format!("enclaveless-path-{n}-min-start"),
            path_enclaveless_min(n),
            value(&p, GameKind::Enclaveless, Side::Minimizing),
        ));
    }

    for n in 2..=13 {
        let p = families::path(n).unwrap();
        rows.push(RegressionRow::exact(
            format!("domination-path-{n}-dominator-start"),
            path_domination_dominator(n),
            value(&p, GameKind::Domination, Side::Minimizing),
        ));
        rows.push(RegressionRow::exact(
            format!("domination-path-{n}-staller-start"),
            path_domination_staller(n),
            value(&p, GameKind::Domination, Side::Maximizing),
        ));
    }

    for k in 1..=5 {
        let s = families::star(k).unwrap();
        rows.push(RegressionRow::exact(
            format!("enclaveless-star-{k}-max-start"),
            k,
            value(&s, GameKind::Enclaveless, Side::Maximizing),
        ));
        rows.push(RegressionRow::exact(
            format!("enclaveless-star-{k}-min-start"),
            1,
            value(&s, GameKind::Enclaveless, Side::Minimizing),
        ));
    }

    for k in [3, 4] {
        let ds = families::double_star(k).unwrap();
        rows.push(RegressionRow::exact(
            format!("enclaveless-double-star-{k}-max-start"),
            k + 1,
            value(&ds, GameKind::Enclaveless, Side::Maximizing),
        ));
        rows.push(RegressionRow::exact(
            format!("enclaveless-double-star-{k}-min-start"),
            k + 1,
            value(&ds, GameKind::Enclaveless, Side::Minimizing),
        ));
        rows.push(RegressionRow::exact(
            format!("domination-double-star-{k}-dominator-start"),
            3,
            value(&ds, GameKind::Domination, Side::Minimizing),
        ));
        rows.push(RegressionRow::exact(
            format!("domination-double-star-{k}-staller-start"),
            4,
            value(&ds, GameKind::Domination, Side::Maximizing),
        ));
    }

    // well-dominated fixed points: value = n - gamma for both starters
    let c7 = families::cycle(7).unwrap();
    let p10 = families::path(10).unwrap();
    for (name, g, expected) in [("cycle-7", &c7, 4), ("path-10", &p10, 6)] {
        rows.push(RegressionRow::exact(
            format!("enclaveless-{name}-max-start"),
            expected,
            value(g, GameKind::Enclaveless, Side::Maximizing),
        ));
        rows.push(RegressionRow::exact(
            format!("enclaveless-{name}-min-start"),
            expected,
            value(g, GameKind::Enclaveless, Side::Minimizing),
        ));
    }

    // connector rings hitting the Dn/(D+1) ceiling
    let f24 = families::connector_ring(2, 4).unwrap();
    rows.push(RegressionRow::exact(
        "enclaveless-ring-m2-r4-min-start",
        8,
        value(&f24, GameKind::Enclaveless, Side::Minimizing),
    ));
    rows.push(RegressionRow::exact(
        "enclaveless-ring-m2-r4-max-start",
        8,
        value(&f24, GameKind::Enclaveless, Side::Maximizing),
    ));
    let f23 = families::connector_ring(2, 3).unwrap();
    rows.push(RegressionRow::exact(
        "enclaveless-ring-m2-r3-max-start",
        6,
        value(&f23, GameKind::Enclaveless, Side::Maximizing),
    ));

    if include_heavy {
        let cor = families::corona_path(10).unwrap();
        rows.push(RegressionRow::exact(
            "enclaveless-path-corona-10-max-start",
            10,
            value(&cor, GameKind::Enclaveless, Side::Maximizing),
        ));
        let gg = value(&cor, GameKind::Domination, Side::Minimizing);
        rows.push(RegressionRow::at_least(
            "domination-path-corona-10-dominator-start",
            11,
            gg,
        ));
    }

    rows
}

/// Renders the regression table.
pub fn render_table(rows: &[RegressionRow]) -> String {
    let name_width = rows.iter().map(|r| r.name.len()).max().unwrap_or(4).max(4);
    let expected_width = rows
        .iter()
        .map(|r| r.expected.len())
        .max()
        .unwrap_or(8)
        .max(8);
    let mut out = format!(
        "{:<name_width$}  {:<expected_width$}  {:<8}  result\n",
        "name", "expected", "computed"
    );
    for r in rows {
        out.push_str(&format!(
            "{:<name_width$}  {:<expected_width$}  {:<8}  {}\n",
            r.name,
            r.expected,
            r.computed,
            if r.pass { "ok" } else { "MISMATCH" }
        ));
    }
    out
}
