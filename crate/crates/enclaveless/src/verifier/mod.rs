//! Sweep orchestration: runs the check catalog over graph corpora with a
//! worker pool and aggregates violations.

pub mod checks;
pub mod corpus;
pub mod reproduce;

pub use checks::{catalog_subset, default_catalog, Check, CheckContext};
pub use corpus::{exhaustive_graphs, random_graphs, CorpusError, EXHAUSTIVE_CAP};
pub use reproduce::{render_table, reproduce, RegressionRow};

use rayon::prelude::*;

use crate::game::{solve_with, GameKind, Side, SolveOptions, SolverCaps};
use crate::graph::Graph;
use crate::invariants::{compute_invariants_with, InvariantCaps};
use crate::io::graph6::write_graph6;
use crate::io::report::SweepRecord;

#[derive(Copy, Clone, Debug)]
pub struct SweepOptions {
    pub invariant_caps: InvariantCaps,
    pub solver_caps: SolverCaps,
    /// Also solve the domination game and fill `gg`/`ggp`.
    pub include_domination: bool,
    /// Graphs processed per parallel batch.
    pub batch_size: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            invariant_caps: InvariantCaps::default(),
            solver_caps: SolverCaps::default(),
            include_domination: false,
            batch_size: 4096,
        }
    }
}

/// Sweep output for one corpus member.
#[derive(Clone, Debug)]
pub enum SweepItem {
    Record(SweepRecord),
    /// The member exceeded a cap and was skipped.
    Skipped {
        graph6: String,
        reason: String,
    },
}

/// Evaluates one graph: invariants, enclaveless game values for both
/// starters, optional domination game values, then every applicable check.
pub fn evaluate_graph(g: &Graph, catalog: &[Check], opts: &SweepOptions) -> SweepItem {
    let graph6 = write_graph6(g);
    let report = match compute_invariants_with(g, opts.invariant_caps) {
        Ok(r) => r,
        Err(e) => {
            return SweepItem::Skipped {
                graph6,
                reason: e.to_string(),
            }
        }
    };
    let solve_opts = SolveOptions {
        caps: opts.solver_caps,
        ..SolveOptions::default()
    };
    let enclaveless =
        |starter| solve_with(g, GameKind::Enclaveless, starter, &solve_opts).map(|o| o.total_moves);
    let (psg_plus, psg_minus) = match (enclaveless(Side::Maximizing), enclaveless(Side::Minimizing))
    {
        (Ok(p), Ok(m)) => (p, m),
        (Err(e), _) | (_, Err(e)) => {
            return SweepItem::Skipped {
                graph6,
                reason: e.to_string(),
            }
        }
    };
    let (gg, ggp) = if opts.include_domination {
        let dom = |starter| {
            solve_with(g, GameKind::Domination, starter, &solve_opts).map(|o| o.total_moves)
        };
        match (dom(Side::Minimizing), dom(Side::Maximizing)) {
            (Ok(d), Ok(s)) => (Some(d), Some(s)),
            (Err(e), _) | (_, Err(e)) => {
                return SweepItem::Skipped {
                    graph6,
                    reason: e.to_string(),
                }
            }
        }
    } else {
        (None, None)
    };

    let ctx = CheckContext::build(g, &report, psg_plus, psg_minus);
    let results = catalog.iter().filter_map(|c| c.run(&ctx)).collect();
    SweepItem::Record(SweepRecord::new(
        graph6, &report, psg_plus, psg_minus, gg, ggp, results,
    ))
}

/// Runs the catalog over a corpus with a rayon worker pool. Results stream
/// in corpus order regardless of the degree of parallelism.
pub fn run_checks<'a, I>(
    corpus: I,
    catalog: &'a [Check],
    opts: &'a SweepOptions,
) -> impl Iterator<Item = SweepItem> + 'a
where
    I: IntoIterator<Item = Graph>,
    I::IntoIter: Send + 'a,
{
    let mut source = corpus.into_iter();
    let mut buffer: std::vec::IntoIter<SweepItem> = Vec::new().into_iter();
    std::iter::from_fn(move || loop {
        if let Some(item) = buffer.next() {
            return Some(item);
        }
        let batch: Vec<Graph> = source.by_ref().take(opts.batch_size).collect();
        if batch.is_empty() {
            return None;
        }
        let processed: Vec<SweepItem> = batch
            .par_iter()
            .map(|g| evaluate_graph(g, catalog, opts))
            .collect();
        buffer = processed.into_iter();
    })
}

/// Violation and throughput totals for a sweep.
#[derive(Clone, Debug, Default)]
pub struct SweepSummary {
    pub graphs: usize,
    pub skipped: usize,
    pub checks_run: usize,
    pub violations: usize,
    /// Full records of every violating graph, as replayable witnesses.
    pub violation_records: Vec<SweepRecord>,
}

impl SweepSummary {
    pub fn add(&mut self, item: &SweepItem) {
        match item {
            SweepItem::Record(record) => {
                self.graphs += 1;
                self.checks_run += record.checks.len();
                let failed = record.violations().count();
                if failed > 0 {
                    self.violations += failed;
                    self.violation_records.push(record.clone());
                }
            }
            SweepItem::Skipped { .. } => {
                self.graphs += 1;
                self.skipped += 1;
            }
        }
    }

    pub fn all_passed(&self) -> bool {
        self.violations == 0
    }

    pub fn render(&self) -> String {
        format!(
            "graphs checked: {}  skipped: {}  checks run: {}  violations: {}",
            self.graphs - self.skipped,
            self.skipped,
            self.checks_run,
            self.violations
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_small_corpus_has_no_violations() {
        // includes disconnected members, so the isolate-free and min-degree
        // filtered checks see graphs outside the connected corpus too
        let catalog = default_catalog();
        let opts = SweepOptions::default();
        let corpus: Vec<Graph> = exhaustive_graphs(5, false).unwrap().collect();
        let mut summary = SweepSummary::default();
        for item in run_checks(corpus, &catalog, &opts) {
            summary.add(&item);
        }
        assert_eq!(summary.graphs, 1 + 2 + 8 + 64 + 1024);
        assert_eq!(summary.skipped, 0);
        assert!(summary.all_passed(), "{:?}", summary.violation_records);
        assert!(summary.checks_run > summary.graphs); // identity checks apply everywhere
    }

    #[test]
    fn sweep_order_is_independent_of_batching() {
        let catalog = default_catalog();
        let collect = |batch_size: usize| -> Vec<SweepRecord> {
            let opts = SweepOptions {
                batch_size,
                ..SweepOptions::default()
            };
            let corpus: Vec<Graph> = exhaustive_graphs(3, false).unwrap().collect();
            run_checks(corpus, &catalog, &opts)
                .map(|item| match item {
                    SweepItem::Record(r) => r,
                    SweepItem::Skipped { graph6, .. } => panic!("unexpected skip of {graph6}"),
                })
                .collect()
        };
        let serial = collect(1);
        let batched = collect(4096);
        assert_eq!(serial, batched);
        assert_eq!(serial, collect(3));
    }

    #[test]
    fn records_replay_through_the_solvers() {
        use crate::game::{solve, GameKind, Side};
        let catalog = default_catalog();
        let opts = SweepOptions {
            include_domination: true,
            ..SweepOptions::default()
        };
        let corpus: Vec<Graph> = exhaustive_graphs(3, false).unwrap().collect();
        for item in run_checks(corpus, &catalog, &opts) {
            let SweepItem::Record(record) = item else {
                panic!("no graph here may be skipped");
            };
            let g = crate::io::graph6::parse_graph6(&record.graph6).unwrap();
            let report = crate::invariants::compute_invariants(&g).unwrap();
            assert_eq!(report.gamma, record.gamma);
            assert_eq!(report.upper_gamma, record.upper_gamma);
            assert_eq!(report.psi, record.psi);
            assert_eq!(report.upper_psi, record.upper_psi);
            assert_eq!(report.alpha, record.alpha);
            assert_eq!(report.ir, record.ir);
            let replay = |kind, starter| solve(&g, kind, starter).unwrap().total_moves;
            assert_eq!(
                replay(GameKind::Enclaveless, Side::Maximizing),
                record.psg_plus
            );
            assert_eq!(
                replay(GameKind::Enclaveless, Side::Minimizing),
                record.psg_minus
            );
            assert_eq!(
                replay(GameKind::Domination, Side::Minimizing),
                record.gg.unwrap()
            );
            assert_eq!(
                replay(GameKind::Domination, Side::Maximizing),
                record.ggp.unwrap()
            );
        }
    }

    #[test]
    fn domination_values_optional() {
        let catalog = default_catalog();
        let opts = SweepOptions {
            include_domination: true,
            ..SweepOptions::default()
        };
        let corpus = vec![crate::families::path(4).unwrap()];
        let items: Vec<_> = run_checks(corpus, &catalog, &opts).collect();
        match &items[0] {
            SweepItem::Record(r) => {
                assert_eq!(r.gg, Some(2));
                assert_eq!(r.ggp, Some(2));
            }
            SweepItem::Skipped { .. } => panic!("p4 must not be skipped"),
        }
    }

    #[test]
    fn violations_surface_with_witnesses() {
        // a synthetic always-failing check exercises the violation pipeline,
        // which no true bound in the catalog can reach
        let catalog = vec![Check {
            name: "always-fails",
            statement: "synthetic",
            applies: |_| true,
            verify: |c| Err(format!("n={}", c.report.n)),
        }];
        let opts = SweepOptions::default();
        let corpus = vec![crate::families::path(3).unwrap()];
        let mut summary = SweepSummary::default();
        let items: Vec<_> = run_checks(corpus, &catalog, &opts).collect();
        for item in &items {
            summary.add(item);
        }
        assert_eq!(summary.violations, 1);
        assert!(!summary.all_passed());
        let record = &summary.violation_records[0];
        assert_eq!(record.violations().count(), 1);
        assert_eq!(record.violations().next().unwrap().detail, "n=3");
        // the human table marks the failure by name
        let SweepItem::Record(r) = &items[0] else {
            panic!("expected a record");
        };
        let table = crate::io::report::emit_table(std::slice::from_ref(r));
        assert!(table.contains("FAIL:always-fails"), "{table}");
    }

    #[test]
    fn oversized_members_are_skipped_with_reason() {
        let catalog = default_catalog();
        let opts = SweepOptions::default();
        let corpus = vec![crate::families::path(25).unwrap()];
        let items: Vec<_> = run_checks(corpus, &catalog, &opts).collect();
        match &items[0] {
            SweepItem::Skipped { reason, .. } => assert!(reason.contains("cap")),
            SweepItem::Record(_) => panic!("p25 must be skipped"),
        }
    }
}
