//! Cross-validation sweeps: every closed form, the classifier, and the
//! kernel-support link checked against the exact solvers over exhaustive or
//! seeded-random instance spaces.
//!
//! Each suite returns a [`SuiteReport`] with the number of instances
//! checked and the first counterexample in enumeration order, if any.
//! Enumeration-heavy suites fan out with rayon; set `RAYON_NUM_THREADS` to
//! control the thread count.

use rayon::prelude::*;

use crate::bitset::VertexSet;
use crate::classify::{self, ClassKind};
use crate::closed;
use crate::digraph::{self, Digraph, OrientationSpec};
use crate::forcing;
use crate::io;
use crate::minrank;
use crate::solve;

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: String,
    pub checked: usize,
    pub mismatches: usize,
    pub first_counterexample: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.mismatches == 0
    }

    fn merge(mut self, other: SuiteReport) -> SuiteReport {
        self.checked += other.checked;
        self.mismatches += other.mismatches;
        if self.first_counterexample.is_none() {
            self.first_counterexample = other.first_counterexample;
        }
        self
    }
}

impl std::fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}: {} instances, {} mismatches",
            self.name, self.checked, self.mismatches
        )?;
        if let Some(cx) = &self.first_counterexample {
            write!(f, "\nfirst counterexample:\n{cx}")?;
        }
        Ok(())
    }
}

// Fold per-instance outcomes (None = pass, Some(description) = fail) into a
// report, keeping the counterexample that comes first in enumeration order.
fn gather<I>(name: &str, outcomes: I) -> SuiteReport
where
    I: IndexedParallelIterator<Item = Option<String>>,
{
    let checked = outcomes.len();
    let (mismatches, first) = outcomes
        .enumerate()
        .map(|(i, o)| match o {
            None => (0usize, None),
            Some(msg) => (1usize, Some((i, msg))),
        })
        .reduce(
            || (0, None),
            |(c1, f1), (c2, f2)| {
                let first = match (f1, f2) {
                    (Some(a), Some(b)) => Some(if a.0 <= b.0 { a } else { b }),
                    (a, b) => a.or(b),
                };
                (c1 + c2, first)
            },
        );
    SuiteReport {
        name: name.to_string(),
        checked,
        mismatches,
        first_counterexample: first.map(|(_, msg)| msg),
    }
}

/// All loopless labeled digraphs on `n` vertices: one per assignment of the
/// `n(n-1)` ordered off-diagonal pairs, pairs taken in `(u, v)` row order.
pub fn digraph_from_code(n: usize, code: usize) -> Digraph {
    let mut arcs = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in 0..n {
            if u != v {
                if code >> bit & 1 == 1 {
                    arcs.push((u, v));
                }
                bit += 1;
            }
        }
    }
    Digraph::from_arcs(n, arcs).expect("codes only address valid arcs")
}

pub fn code_count(n: usize) -> usize {
    1usize << (n * n - n)
}

fn describe(d: &Digraph, what: &str) -> String {
    format!("{what}\n{}", io::write_digraph(d))
}

/// Critical/stalled duality and the min-critical route to F, exhaustively
/// over every loopless digraph with at most `max_n` vertices. Checks, per
/// digraph: W critical iff V minus W stalled; F from the direct descending
/// search equals n minus the smallest critical set; and every set of size
/// F+1 is a zero forcing set.
pub fn duality(max_n: usize) -> SuiteReport {
    let mut report = SuiteReport {
        name: "duality".into(),
        checked: 0,
        mismatches: 0,
        first_counterexample: None,
    };
    for n in 1..=max_n {
        let part = gather(
            "duality",
            (0..code_count(n)).into_par_iter().map(move |code| {
                let d = digraph_from_code(n, code);
                check_duality(&d)
            }),
        );
        report = report.merge(part);
    }
    report
}

fn check_duality(d: &Digraph) -> Option<String> {
    let n = d.n();
    for mask in 0..1u64 << n {
        let w = VertexSet::from_mask(n, mask);
        let s = w.complement();
        let crit = forcing::is_critical(d, &w);
        let stall = !w.is_empty() && forcing::is_stalled(d, &s);
        if crit != stall {
            return Some(describe(d, &format!("criticality of W={w} disagrees with stalledness of its complement")));
        }
    }
    let f_direct = solve::max_fzfs_direct(d).map(|(v, _)| v);
    let via_critical = solve::min_critical_set(d, false).map(|w| n - w.len());
    if f_direct != via_critical {
        return Some(describe(
            d,
            &format!("direct F {f_direct:?} != critical-set route {via_critical:?}"),
        ));
    }
    if let Some(f) = f_direct {
        if f < n {
            for s in solve::combinations(n, f + 1) {
                if !forcing::is_zfs(d, &s) {
                    return Some(describe(d, &format!("set {s} of size F+1 fails to force")));
                }
            }
        }
    } else {
        // Loopless digraphs always have F defined.
        return Some(describe(d, "F undefined on a loopless digraph"));
    }
    None
}

/// The structural F in {n-1, n-2, n-3} conditions against solver values,
/// exhaustively for every loopless digraph with at most `max_n` vertices.
pub fn extremal(max_n: usize) -> SuiteReport {
    let mut report = SuiteReport {
        name: "extremal".into(),
        checked: 0,
        mismatches: 0,
        first_counterexample: None,
    };
    for n in 1..=max_n {
        let part = gather(
            "extremal",
            (0..code_count(n)).into_par_iter().map(move |code| {
                let d = digraph_from_code(n, code);
                let f = solve::failed_zero_forcing_number(&d)
                    .expect("loopless F is defined")
                    .0;
                let p = solve::extremal_predicates(&d).expect("loopless input");
                let want = [
                    (p.f_is_n_minus_1, n >= 1 && f == n - 1),
                    (p.f_is_n_minus_2, n >= 2 && f == n - 2),
                    (p.f_is_n_minus_3, n >= 3 && f == n - 3),
                ];
                for (i, (pred, actual)) in want.iter().enumerate() {
                    if pred != actual {
                        return Some(describe(
                            &d,
                            &format!("extremal predicate n-{} disagrees with F={f}", i + 1),
                        ));
                    }
                }
                None
            }),
        );
        report = report.merge(part);
    }
    report
}

/// Weak-path closed form against the exact solver, all orientations up to
/// `max_n` vertices.
pub fn weak_paths(max_n: usize) -> SuiteReport {
    let mut report = SuiteReport {
        name: "weak-paths".into(),
        checked: 0,
        mismatches: 0,
        first_counterexample: None,
    };
    for n in 2..=max_n {
        let specs: Vec<OrientationSpec> = OrientationSpec::enumerate(n - 1).collect();
        let part = gather(
            "weak-paths",
            specs.into_par_iter().map(|spec| {
                let d = digraph::weak_path(&spec);
                let formula = closed::f_weak_path(&d).expect("generated weak path");
                let exact = solve::failed_zero_forcing_number(&d).unwrap().0;
                (formula != exact).then(|| {
                    describe(&d, &format!("weak path formula {formula} != exact {exact}"))
                })
            }),
        );
        report = report.merge(part);
    }
    report
}

/// Weak-cycle dispatch against the exact solver, all orientations up to
/// `max_n` vertices (the fully bidirected case is solver-backed by design
/// and so trivially agrees; it is still enumerated).
pub fn weak_cycles(max_n: usize) -> SuiteReport {
    let mut report = SuiteReport {
        name: "weak-cycles".into(),
        checked: 0,
        mismatches: 0,
        first_counterexample: None,
    };
    for n in 3..=max_n {
        let specs: Vec<OrientationSpec> = OrientationSpec::enumerate(n).collect();
        let part = gather(
            "weak-cycles",
            specs.into_par_iter().map(|spec| {
                let d = digraph::weak_cycle(&spec).expect("n >= 3");
                let formula = closed::f_weak_cycle(&d).expect("generated weak cycle");
                let exact = solve::failed_zero_forcing_number(&d).unwrap().0;
                (formula != exact).then(|| {
                    describe(&d, &format!("weak cycle dispatch {formula} != exact {exact}"))
                })
            }),
        );
        report = report.merge(part);
    }
    report
}

/// The constructive weak cycle hits every target F exactly.
pub fn constructive_cycles(max_n: usize) -> SuiteReport {
    let cases: Vec<(usize, usize)> = (3..=max_n).flat_map(|n| (0..n).map(move |k| (n, k))).collect();
    gather(
        "constructive-cycles",
        cases.into_par_iter().map(|(n, k)| {
            let d = closed::construct_weak_cycle(n, k).expect("valid parameters");
            let exact = solve::failed_zero_forcing_number(&d).unwrap().0;
            (exact != k).then(|| describe(&d, &format!("construction for (n={n}, k={k}) has F={exact}")))
        }),
    )
}

/// The three-case line-digraph formula against the exact solver over every
/// weakly connected loopless digraph with at most `max_n` vertices.
pub fn line_digraphs(max_n: usize) -> SuiteReport {
    let mut report = SuiteReport {
        name: "line-digraphs".into(),
        checked: 0,
        mismatches: 0,
        first_counterexample: None,
    };
    for n in 2..=max_n {
        let part = gather(
            "line-digraphs",
            (0..code_count(n)).into_par_iter().map(move |code| {
                let d = digraph_from_code(n, code);
                if !d.is_weakly_connected() || d.arc_count() == 0 {
                    return None;
                }
                let formula = closed::f_line_digraph(&d).expect("connected loopless base");
                let (ld, _) = digraph::line_digraph(&d);
                let exact = solve::failed_zero_forcing_number(&ld).unwrap().0;
                (formula != exact).then(|| {
                    describe(&d, &format!("line digraph formula {formula} != exact {exact} (base shown)"))
                })
            }),
        );
        report = report.merge(part);
    }
    report
}

/// Star closed form against the exact solver over all orientations with at
/// most `max_t` leaves.
pub fn stars(max_t: usize) -> SuiteReport {
    let mut report = SuiteReport {
        name: "stars".into(),
        checked: 0,
        mismatches: 0,
        first_counterexample: None,
    };
    for t in 1..=max_t {
        let specs: Vec<OrientationSpec> = OrientationSpec::enumerate(t).collect();
        let part = gather(
            "stars",
            specs.into_par_iter().map(move |spec| {
                let d = digraph::star(t, &spec).expect("matching spec length");
                let formula = closed::f_star(&d).expect("generated star");
                let exact = solve::failed_zero_forcing_number(&d).unwrap().0;
                (formula != exact)
                    .then(|| describe(&d, &format!("star formula {formula} != exact {exact}")))
            }),
        );
        report = report.merge(part);
    }
    report
}

/// All closed-form sweeps plus the extremal predicates, merged.
pub fn formulas() -> SuiteReport {
    let mut report = weak_paths(7)
        .merge(weak_cycles(6))
        .merge(constructive_cycles(10))
        .merge(line_digraphs(4))
        .merge(stars(5))
        .merge(extremal(5));
    report.name = "formulas".into();
    report
}

/// Classifier census on all loopless labeled digraphs of order `n`: the
/// class is non-None exactly when exact F < exact Z.
pub fn census(n: usize) -> SuiteReport {
    gather(
        &format!("census{n}"),
        (0..code_count(n)).into_par_iter().map(move |code| {
            let d = digraph_from_code(n, code);
            let kind = classify::classify_f_less_than_z(&d).expect("loopless input");
            let z = solve::zero_forcing_number(&d).0;
            let f = solve::failed_zero_forcing_number(&d).unwrap().0;
            let claimed = kind != ClassKind::None;
            if claimed != (f < z) {
                return Some(describe(&d, &format!("classifier {kind:?} but F={f}, Z={z}")));
            }
            // Every digraph with F < Z has each vertex a sink or of
            // out-degree at least Z.
            if f < z {
                for v in 0..d.n() {
                    if d.out_degree(v) != 0 && d.out_degree(v) < z {
                        return Some(describe(
                            &d,
                            &format!("F<Z but vertex {v} has out-degree {} < Z={z}", d.out_degree(v)),
                        ));
                    }
                }
            }
            None
        }),
    )
}

/// Oriented classifier census on all 3^10 oriented graphs of order 5.
pub fn oriented5() -> SuiteReport {
    let pairs: Vec<(usize, usize)> = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
    let total = 3usize.pow(pairs.len() as u32);
    gather(
        "oriented5",
        (0..total).into_par_iter().map(move |mut code| {
            let mut arcs = Vec::new();
            for &(i, j) in &pairs {
                match code % 3 {
                    0 => {}
                    1 => arcs.push((i, j)),
                    _ => arcs.push((j, i)),
                }
                code /= 3;
            }
            let d = Digraph::from_arcs(5, arcs).expect("oriented arcs valid");
            let kind = classify::classify_oriented(&d).expect("input is oriented");
            let z = solve::zero_forcing_number(&d).0;
            let f = solve::failed_zero_forcing_number(&d).unwrap().0;
            let claimed = kind != ClassKind::None;
            (claimed != (f < z)).then(|| {
                describe(&d, &format!("oriented classifier {kind:?} but F={f}, Z={z}"))
            })
        }),
    )
}

/// Kernel-support link on seeded random digraphs: the solver's minimum ZFS
/// makes every sampled pattern matrix injective on the complementary
/// columns.
pub fn kernel(digraphs: usize, seeds: u64) -> SuiteReport {
    use rand::Rng;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
    let mut instances = Vec::with_capacity(digraphs);
    for _ in 0..digraphs {
        let n = rng.gen_range(2..=6);
        let mut arcs = Vec::new();
        for u in 0..n {
            for v in 0..n {
                if u != v && rng.gen_bool(0.5) {
                    arcs.push((u, v));
                }
            }
        }
        instances.push(Digraph::from_arcs(n, arcs).expect("loopless arcs"));
    }
    gather(
        "kernel",
        instances.into_par_iter().map(move |d| {
            let (_, zfs) = solve::zero_forcing_number(&d);
            for seed in 0..seeds {
                let m = minrank::sample_pattern_matrix(&d, seed).expect("loopless input");
                let ok = minrank::verify_kernel_support(&d, &zfs, &m).expect("matching pattern");
                if !ok {
                    return Some(describe(
                        &d,
                        &format!("kernel support fails for ZFS {zfs} at seed {seed}"),
                    ));
                }
            }
            None
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn code_enumeration_is_complete_and_distinct() {
        assert_eq!(code_count(3), 64);
        let all: std::collections::HashSet<Vec<(usize, usize)>> = (0..64)
            .map(|c| digraph_from_code(3, c).arcs())
            .collect();
        assert_eq!(all.len(), 64);
    }

    #[test]
    fn small_suites_pass() {
        assert!(duality(3).passed());
        assert!(extremal(3).passed());
        assert!(weak_paths(4).passed());
        assert!(weak_cycles(4).passed());
        assert!(constructive_cycles(5).passed());
        assert!(line_digraphs(3).passed());
        assert!(stars(3).passed());
        assert!(census(3).passed());
        assert!(kernel(5, 3).passed());
    }

    #[test]
    fn reports_carry_counterexamples() {
        // Deliberately broken check to exercise the gathering machinery.
        let r = gather(
            "demo",
            (0..10usize).into_par_iter().map(|i| (i % 2 == 1).then(|| format!("odd {i}"))),
        );
        assert_eq!(r.checked, 10);
        assert_eq!(r.mismatches, 5);
        assert_eq!(r.first_counterexample.as_deref(), Some("odd 1"));
    }
}
