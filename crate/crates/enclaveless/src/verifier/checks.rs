//! The per-graph check catalog.
//!
//! Each check pairs a bound or identity with the exact hypothesis filter it
//! carries; a check is never evaluated outside its filter. All comparisons
//! are integer-exact (bounds of the form `x >= n/2` are tested as
//! `2x >= n`).

use crate::graph::{DegreeProfile, Graph};
use crate::invariants::{self, InvariantReport};
use crate::io::report::CheckResult;

/// Precomputed facts one check evaluation needs.
pub struct CheckContext<'g> {
    pub graph: &'g Graph,
    pub report: &'g InvariantReport,
    pub psg_plus: usize,
    pub psg_minus: usize,
    pub profile: DegreeProfile,
    pub connected: bool,
    pub isolate_free: bool,
    pub claw_free: bool,
}

impl CheckContext<'_> {
    pub fn build<'g>(
        graph: &'g Graph,
        report: &'g InvariantReport,
        psg_plus: usize,
        psg_minus: usize,
    ) -> CheckContext<'g> {
        CheckContext {
            graph,
            report,
            psg_plus,
            psg_minus,
            profile: graph.degree_profile(),
            connected: graph.is_connected(),
            isolate_free: graph.is_isolate_free(),
            claw_free: graph.is_claw_free(),
        }
    }

    /// Any labeling of the 3-vertex path.
    fn is_path3(&self) -> bool {
        self.graph.order() == 3 && self.graph.edge_count() == 2 && self.connected
    }
}

/// A named predicate over one swept graph, with its applicability filter.
pub struct Check {
    pub name: &'static str,
    /// The statement being verified, for reports and docs.
    pub statement: &'static str,
    pub applies: fn(&CheckContext) -> bool,
    pub verify: fn(&CheckContext) -> Result<(), String>,
}

impl Check {
    /// Runs the check if its filter matches; `None` when filtered out.
    pub fn run(&self, ctx: &CheckContext) -> Option<CheckResult> {
        if !(self.applies)(ctx) {
            return None;
        }
        let outcome = (self.verify)(ctx);
        Some(CheckResult {
            name: self.name.to_string(),
            pass: outcome.is_ok(),
            detail: outcome.err().unwrap_or_default(),
        })
    }
}

fn always(_: &CheckContext) -> bool {
    true
}

/// The full catalog, in a fixed order.
pub fn default_catalog() -> Vec<Check> {
    vec![
        Check {
            name: "gamma-psi-identity",
            statement: "gamma + Psi = n = Gamma + psi",
            applies: always,
            verify: |c| {
                let r = c.report;
                if r.gamma + r.upper_psi == r.n && r.upper_gamma + r.psi == r.n {
                    Ok(())
                } else {
                    Err(format!(
                        "gamma={} Psi={} Gamma={} psi={} n={}",
                        r.gamma, r.upper_psi, r.upper_gamma, r.psi, r.n
                    ))
                }
            },
        },
        Check {
            name: "game-value-sandwich",
            statement: "psi <= game value <= Psi for both starters",
            applies: always,
            verify: |c| {
                let r = c.report;
                let ok = r.psi <= c.psg_minus
                    && c.psg_minus <= r.upper_psi
                    && r.psi <= c.psg_plus
                    && c.psg_plus <= r.upper_psi;
                if ok {
                    Ok(())
                } else {
                    Err(format!(
                        "psi={} Psi={} psg+={} psg-={}",
                        r.psi, r.upper_psi, c.psg_plus, c.psg_minus
                    ))
                }
            },
        },
        Check {
            name: "domination-chain",
            statement: "alpha <= Gamma <= IR",
            applies: |c| c.report.ir.is_some(),
            verify: |c| {
                let r = c.report;
                let ir = r.ir.expect("filtered");
                if r.alpha <= r.upper_gamma && r.upper_gamma <= ir {
                    Ok(())
                } else {
                    Err(format!("alpha={} Gamma={} IR={ir}", r.alpha, r.upper_gamma))
                }
            },
        },
        Check {
            name: "well-dominated-value",
            statement: "well-dominated implies both game values equal n - gamma",
            applies: |c| c.report.well_dominated,
            verify: |c| {
                let expected = c.report.n - c.report.gamma;
                if c.psg_plus == expected && c.psg_minus == expected {
                    Ok(())
                } else {
                    Err(format!(
                        "n-gamma={expected} psg+={} psg-={}",
                        c.psg_plus, c.psg_minus
                    ))
                }
            },
        },
        Check {
            name: "degree-bounds-enclaveless",
            statement: "isolate-free: n/(D+1) <= psi and Psi <= Dn/(D+1)",
            applies: |c| c.isolate_free,
            verify: |c| {
                let (n, d) = (c.report.n, c.profile.max);
                let ok = c.report.psi * (d + 1) >= n && c.report.upper_psi * (d + 1) <= d * n;
                if ok {
                    Ok(())
                } else {
                    Err(format!(
                        "n={n} D={d} psi={} Psi={}",
                        c.report.psi, c.report.upper_psi
                    ))
                }
            },
        },
        Check {
            name: "degree-bounds-game",
            statement: "isolate-free: n/(D+1) <= game values <= Dn/(D+1)",
            applies: |c| c.isolate_free,
            verify: |c| {
                let (n, d) = (c.report.n, c.profile.max);
                let within = |v: usize| v * (d + 1) >= n && v * (d + 1) <= d * n;
                if within(c.psg_plus) && within(c.psg_minus) {
                    Ok(())
                } else {
                    Err(format!(
                        "n={n} D={d} psg+={} psg-={}",
                        c.psg_plus, c.psg_minus
                    ))
                }
            },
        },
        Check {
            name: "regular-half",
            statement: "k-regular (k >= 1): both game values >= n/2",
            applies: |c| c.profile.regular().is_some_and(|k| k >= 1),
            verify: half_bound_both,
        },
        Check {
            name: "star-free-half-k2",
            statement: "min degree >= 2, no induced 3-star: both game values >= n/2",
            applies: |c| c.profile.min >= 2 && !c.graph.has_induced_star(3),
            verify: half_bound_both,
        },
        Check {
            name: "star-free-half-k3",
            statement: "min degree >= 3, no induced 4-star: both game values >= n/2",
            applies: |c| c.profile.min >= 3 && !c.graph.has_induced_star(4),
            verify: half_bound_both,
        },
        Check {
            name: "clawfree-alpha-bound",
            statement: "connected claw-free: alpha <= (n+1)/2 if d=1, else alpha <= 2n/(d+2)",
            applies: |c| c.connected && c.claw_free && c.profile.min >= 1,
            verify: |c| {
                let (n, d, a) = (c.report.n, c.profile.min, c.report.alpha);
                let ok = if d == 1 {
                    2 * a <= n + 1
                } else {
                    a * (d + 2) <= 2 * n
                };
                if ok {
                    Ok(())
                } else {
                    Err(format!("n={n} delta={d} alpha={a}"))
                }
            },
        },
        Check {
            name: "clawfree-ir-bound",
            statement: "connected claw-free: IR <= (n+1)/2, equality forces alpha = Gamma = IR",
            applies: |c| c.connected && c.claw_free && c.report.ir.is_some(),
            verify: |c| {
                let r = c.report;
                let ir = r.ir.expect("filtered");
                if 2 * ir > r.n + 1 {
                    return Err(format!("n={} IR={ir}", r.n));
                }
                if 2 * ir == r.n + 1 && !(r.alpha == r.upper_gamma && r.upper_gamma == ir) {
                    return Err(format!(
                        "extremal IR={ir} but alpha={} Gamma={}",
                        r.alpha, r.upper_gamma
                    ));
                }
                Ok(())
            },
        },
        Check {
            name: "clawfree-ir-mindeg2",
            statement: "connected claw-free, min degree >= 2: IR <= n/2",
            applies: |c| c.connected && c.claw_free && c.profile.min >= 2 && c.report.ir.is_some(),
            verify: |c| {
                let ir = c.report.ir.expect("filtered");
                if 2 * ir <= c.report.n {
                    Ok(())
                } else {
                    Err(format!("n={} IR={ir}", c.report.n))
                }
            },
        },
        Check {
            name: "clawfree-game-mindeg2",
            statement: "connected claw-free, min degree >= 2: both game values >= n/2",
            applies: |c| c.connected && c.claw_free && c.profile.min >= 2,
            verify: half_bound_both,
        },
        Check {
            name: "clawfree-game",
            statement: "connected claw-free, n >= 2: maximizer-start value >= n/2; \
                        minimizer-start too unless the graph is the 3-path",
            applies: |c| c.connected && c.claw_free && c.report.n >= 2,
            verify: |c| {
                let n = c.report.n;
                if 2 * c.psg_plus < n {
                    return Err(format!("n={n} psg+={}", c.psg_plus));
                }
                if !c.is_path3() && 2 * c.psg_minus < n {
                    return Err(format!("n={n} psg-={}", c.psg_minus));
                }
                Ok(())
            },
        },
        Check {
            name: "half-enclaveless-conjecture",
            statement: "isolate-free: maximizer-start value >= n/2",
            applies: |c| c.isolate_free,
            verify: |c| {
                if 2 * c.psg_plus >= c.report.n {
                    Ok(())
                } else {
                    Err(format!("n={} psg+={}", c.report.n, c.psg_plus))
                }
            },
        },
        Check {
            name: "mindeg2-minimizer-conjecture",
            statement: "min degree >= 2: minimizer-start value >= n/2",
            applies: |c| c.profile.min >= 2,
            verify: |c| {
                if 2 * c.psg_minus >= c.report.n {
                    Ok(())
                } else {
                    Err(format!("n={} psg-={}", c.report.n, c.psg_minus))
                }
            },
        },
        Check {
            name: "tight-gamma-packing",
            statement: "isolate-free with gamma = n/(D+1): some minimum dominating set \
                        of maximum-degree vertices is a 2-packing",
            applies: |c| c.isolate_free && c.report.gamma * (c.profile.max + 1) == c.report.n,
            verify: |c| {
                let g = c.graph;
                let d = c.profile.max;
                let witness = invariants::minimal_dominating_sets(g)
                    .map_err(|e| e.to_string())?
                    .filter(|s| s.len() == c.report.gamma)
                    .any(|s| {
                        s.iter().all(|v| g.degree(v) == d) && invariants::is_two_packing(g, s)
                    });
                if witness {
                    Ok(())
                } else {
                    Err(format!(
                        "gamma={} D={d}: no tight 2-packing witness",
                        c.report.gamma
                    ))
                }
            },
        },
    ]
}

fn half_bound_both(c: &CheckContext) -> Result<(), String> {
    let n = c.report.n;
    if 2 * c.psg_plus >= n && 2 * c.psg_minus >= n {
        Ok(())
    } else {
        Err(format!("n={n} psg+={} psg-={}", c.psg_plus, c.psg_minus))
    }
}

/// Catalog entries matching the given names, preserving catalog order.
pub fn catalog_subset(names: &[String]) -> Result<Vec<Check>, String> {
    let catalog = default_catalog();
    let known: Vec<&str> = catalog.iter().map(|c| c.name).collect();
    for name in names {
        if !known.contains(&name.as_str()) {
            return Err(format!(
                "unknown check {name:?}; known checks: {}",
                known.join(", ")
            ));
        }
    }
    Ok(default_catalog()
        .into_iter()
        .filter(|c| names.iter().any(|n| n == c.name))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{solve, GameKind, Side};
    use crate::invariants::compute_invariants;

    fn context_values(g: &Graph) -> (InvariantReport, usize, usize) {
        let report = compute_invariants(g).unwrap();
        let plus = solve(g, GameKind::Enclaveless, Side::Maximizing)
            .unwrap()
            .total_moves;
        let minus = solve(g, GameKind::Enclaveless, Side::Minimizing)
            .unwrap()
            .total_moves;
        (report, plus, minus)
    }

    #[test]
    fn all_checks_pass_on_c7() {
        let g = crate::families::cycle(7).unwrap();
        let (report, plus, minus) = context_values(&g);
        let ctx = CheckContext::build(&g, &report, plus, minus);
        for check in default_catalog() {
            if let Some(result) = check.run(&ctx) {
                assert!(result.pass, "{}: {}", result.name, result.detail);
            }
        }
    }

    #[test]
    fn path3_is_exempt_from_the_minimizer_half_bound() {
        let g = crate::families::path(3).unwrap();
        let (report, plus, minus) = context_values(&g);
        assert_eq!(minus, 1); // below n/2, allowed only for the 3-path
        let ctx = CheckContext::build(&g, &report, plus, minus);
        let check = default_catalog()
            .into_iter()
            .find(|c| c.name == "clawfree-game")
            .unwrap();
        let result = check.run(&ctx).expect("applies to the 3-path");
        assert!(result.pass, "{}", result.detail);
    }

    #[test]
    fn filters_respect_hypotheses() {
        // K1 has an isolated vertex: no isolate-free check may run
        let k1 = Graph::new(1, &[]).unwrap();
        let (report, plus, minus) = context_values(&k1);
        let ctx = CheckContext::build(&k1, &report, plus, minus);
        for check in default_catalog() {
            if let Some(result) = check.run(&ctx) {
                assert!(
                    result.pass,
                    "{} ran and failed on K1: {}",
                    result.name, result.detail
                );
            }
        }
        // the star is not regular: the regular check must be filtered out
        let star = crate::families::star(3).unwrap();
        let (report, plus, minus) = context_values(&star);
        let ctx = CheckContext::build(&star, &report, plus, minus);
        let regular = default_catalog()
            .into_iter()
            .find(|c| c.name == "regular-half")
            .unwrap();
        assert!(regular.run(&ctx).is_none());
    }

    #[test]
    fn catalog_subset_selection() {
        let subset =
            catalog_subset(&["regular-half".to_string(), "domination-chain".to_string()]).unwrap();
        assert_eq!(subset.len(), 2);
        assert_eq!(subset[0].name, "domination-chain"); // catalog order
        assert!(catalog_subset(&["nope".to_string()]).is_err());
    }
}
