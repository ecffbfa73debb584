//! Randomized property tests for the closure engine, the solvers, and the
//! digraph operators.

use proptest::prelude::*;

use zforce::bitset::VertexSet;
use zforce::classify;
use zforce::digraph::{self, Digraph};
use zforce::forcing;
use zforce::solve;

// Random loopless digraph on 1..=max_n vertices from an arc-presence mask.
fn loopless_digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::bits::u64::masked((1u64 << (n * n - n)) - 1).prop_map(move |code| {
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
            Digraph::from_arcs(n, arcs).unwrap()
        })
    })
}

// Random digraph that may carry loops (diagonal bits included).
fn loopy_digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::bits::u64::masked(if n * n >= 64 { u64::MAX } else { (1u64 << (n * n)) - 1 })
            .prop_map(move |code| {
                let mut arcs = Vec::new();
                for u in 0..n {
                    for v in 0..n {
                        if code >> (u * n + v) & 1 == 1 {
                            arcs.push((u, v));
                        }
                    }
                }
                Digraph::from_arcs_with_loops(n, arcs).unwrap()
            })
    })
}

fn subset_of(n: usize) -> impl Strategy<Value = VertexSet> {
    proptest::bits::u64::masked(if n >= 64 { u64::MAX } else { (1u64 << n) - 1 })
        .prop_map(move |mask| VertexSet::from_mask(n, mask))
}

fn digraph_and_set(max_n: usize, loops: bool) -> impl Strategy<Value = (Digraph, VertexSet)> {
    let d = if loops {
        loopy_digraph(max_n).boxed()
    } else {
        loopless_digraph(max_n).boxed()
    };
    d.prop_flat_map(|d| {
        let n = d.n();
        (Just(d), subset_of(n))
    })
}

proptest! {
    #[test]
    fn closure_is_extensive_and_idempotent((d, s) in digraph_and_set(8, true)) {
        let once = forcing::closure_set(&d, &s);
        prop_assert!(s.is_subset(&once));
        prop_assert_eq!(forcing::closure_set(&d, &once), once.clone());
    }

    #[test]
    fn closure_is_monotone((d, s) in digraph_and_set(8, true), extra in subset_of(8)) {
        let mut t = s.clone();
        for v in extra.iter().filter(|&v| v < d.n()) {
            t.insert(v);
        }
        let cs = forcing::closure_set(&d, &s);
        let ct = forcing::closure_set(&d, &t);
        prop_assert!(cs.is_subset(&ct));
    }

    #[test]
    fn synchronous_and_sequential_closures_agree((d, s) in digraph_and_set(8, true)) {
        prop_assert_eq!(forcing::closure_set(&d, &s), forcing::closure_sequential(&d, &s));
    }

    #[test]
    fn trace_replay_is_faithful((d, s) in digraph_and_set(8, true)) {
        let t = forcing::closure(&d, &s);
        prop_assert_eq!(forcing::replay(&d, &s, &t), Some(t.final_set.clone()));
    }

    #[test]
    fn complement_is_an_involution(d in loopless_digraph(8)) {
        let back = digraph::complement(&digraph::complement(&d).unwrap()).unwrap();
        prop_assert_eq!(back, d);
    }

    #[test]
    fn loop_mode_duality((d, w) in digraph_and_set(6, true)) {
        // The strong duality is a statement about the loop rule, which the
        // engine only applies when a loop is present.
        prop_assume!(d.has_loops());
        let crit = forcing::is_strongly_critical(&d, &w);
        let stall = !w.is_empty() && forcing::is_stalled(&d, &w.complement());
        prop_assert_eq!(crit, stall);
    }

    #[test]
    fn f_and_z_witnesses_are_valid(d in loopless_digraph(6)) {
        let (z, zw) = solve::zero_forcing_number(&d);
        prop_assert!(forcing::is_zfs(&d, &zw));
        prop_assert_eq!(zw.len(), z);

        let (f, fw) = solve::failed_zero_forcing_number(&d).unwrap();
        prop_assert_eq!(fw.len(), f);
        prop_assert!(forcing::is_fzfs(&d, &fw));
        prop_assert!(forcing::is_stalled(&d, &fw));
        // F < Z happens exactly when F = Z - 1.
        prop_assert!(f + 1 >= z);
        prop_assert_eq!(f < z, f + 1 == z);
    }

    #[test]
    fn supersets_of_maximum_fzfs_force((d, extra) in digraph_and_set(6, false)) {
        let (f, fw) = solve::failed_zero_forcing_number(&d).unwrap();
        let mut s = fw.clone();
        for v in extra.iter() {
            s.insert(v);
        }
        if s.len() > f {
            prop_assert!(forcing::is_zfs(&d, &s));
        }
    }

    #[test]
    fn f_defined_under_sufficient_conditions(d in loopy_digraph(6)) {
        // If some vertex has in-degree 0, or every vertex has out-degree at
        // least 2, then F is defined even under the loop rule.
        let n = d.n();
        let cond = (0..n).any(|v| d.in_degree(v) == 0)
            || (n > 0 && (0..n).all(|v| d.out_degree(v) >= 2));
        if cond {
            prop_assert!(solve::failed_zero_forcing_number(&d).is_some());
        }
    }

    #[test]
    fn critical_threshold_is_sharp(d in loopless_digraph(5)) {
        if let Some(k) = classify::critical_threshold(&d).unwrap() {
            let n = d.n();
            for mask in 0..1u64 << n {
                let w = VertexSet::from_mask(n, mask);
                prop_assert_eq!(forcing::is_critical(&d, &w), w.len() >= k);
            }
        }
    }

    #[test]
    fn orientation_specs_build_the_right_underlying_graphs(spec_code in 0usize..3usize.pow(6)) {
        let spec = digraph::OrientationSpec::enumerate(6).nth(spec_code).unwrap();
        let p = digraph::weak_path(&spec);
        prop_assert_eq!(p.path_order().unwrap().len(), 7);
        let c = digraph::weak_cycle(&spec).unwrap();
        prop_assert_eq!(c.cycle_order().unwrap().len(), 6);
    }
}
