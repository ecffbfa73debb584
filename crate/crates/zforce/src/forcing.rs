//! Color change rules, closure computation with a forcing chronology, and
//! the stalled/critical predicates.
//!
//! Two rules exist. On a loopless digraph a *filled* vertex with exactly one
//! empty out-neighbor forces it. On a digraph with at least one loop, *any*
//! vertex with exactly one empty out-neighbor forces it, filled or not. Rule
//! selection is automatic from loop presence and never caller-chosen.

use serde::Serialize;

use crate::bitset::{DiffSize, VertexSet};
use crate::digraph::Digraph;

/// One recorded color change.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Force {
    pub round: usize,
    pub forcer: usize,
    pub forced: usize,
}

/// Chronology of a closure run: every color change in synchronous round
/// order, plus the final filled set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForcingTrace {
    pub rounds: Vec<Force>,
    pub final_set: VertexSet,
}

impl ForcingTrace {
    pub fn fills_all(&self, d: &Digraph) -> bool {
        self.final_set.len() == d.n()
    }
}

fn assert_in_range(d: &Digraph, s: &VertexSet) {
    assert_eq!(
        s.capacity(),
        d.n(),
        "vertex set capacity {} does not match digraph order {}",
        s.capacity(),
        d.n()
    );
}

/// Run the applicable color change rule to its fixed point, recording every
/// force. Rounds are synchronous: all forces valid against the previous
/// round's set are recorded, then committed together. When several vertices
/// force the same target in one round, the smallest forcer is recorded.
pub fn closure(d: &Digraph, s: &VertexSet) -> ForcingTrace {
    assert_in_range(d, s);
    let loop_rule = d.has_loops();
    let mut filled = s.clone();
    let mut rounds = Vec::new();
    let mut round = 0;
    loop {
        round += 1;
        let mut next = filled.clone();
        let mut changed = false;
        for v in 0..d.n() {
            if !loop_rule && !filled.contains(v) {
                continue;
            }
            if let DiffSize::One(w) = d.out_neighbors(v).diff_size(&filled) {
                if !next.contains(w) {
                    rounds.push(Force {
                        round,
                        forcer: v,
                        forced: w,
                    });
                    next.insert(w);
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
        filled = next;
    }
    ForcingTrace {
        rounds,
        final_set: filled,
    }
}

pub fn is_zfs(d: &Digraph, s: &VertexSet) -> bool {
    closure_fills_all(d, s)
}

pub fn is_fzfs(d: &Digraph, s: &VertexSet) -> bool {
    !closure_fills_all(d, s)
}

// Closure without the trace; the workhorse of the subset searches.
fn closure_fills_all(d: &Digraph, s: &VertexSet) -> bool {
    assert_in_range(d, s);
    closure_set(d, s).is_full()
}

/// Final filled set only, skipping trace bookkeeping.
pub fn closure_set(d: &Digraph, s: &VertexSet) -> VertexSet {
    assert_in_range(d, s);
    let loop_rule = d.has_loops();
    let mut filled = s.clone();
    loop {
        let mut next = filled.clone();
        for v in 0..d.n() {
            if !loop_rule && !filled.contains(v) {
                continue;
            }
            if let DiffSize::One(w) = d.out_neighbors(v).diff_size(&filled) {
                next.insert(w);
            }
        }
        if next == filled {
            return filled;
        }
        filled = next;
    }
}

/// True iff one round of the applicable rule produces no force.
pub fn is_stalled(d: &Digraph, s: &VertexSet) -> bool {
    assert_in_range(d, s);
    let loop_rule = d.has_loops();
    (0..d.n()).all(|v| {
        if !loop_rule && !s.contains(v) {
            return true;
        }
        !matches!(d.out_neighbors(v).diff_size(s), DiffSize::One(_))
    })
}

/// Weakly critical: `w` nonempty and every vertex outside `w` has a number
/// of out-neighbors in `w` different from 1.
pub fn is_critical(d: &Digraph, w: &VertexSet) -> bool {
    assert_in_range(d, w);
    !w.is_empty()
        && (0..d.n())
            .filter(|&v| !w.contains(v))
            .all(|v| d.out_neighbors(v).intersection_len(w) != 1)
}

/// Strongly critical: the condition of [`is_critical`] extended to every
/// vertex, including those inside `w`.
pub fn is_strongly_critical(d: &Digraph, w: &VertexSet) -> bool {
    assert_in_range(d, w);
    !w.is_empty() && (0..d.n()).all(|v| d.out_neighbors(v).intersection_len(w) != 1)
}

/// Sequential variant of the closure: applies one force at a time instead of
/// committing rounds synchronously. The fixed point must agree with
/// [`closure`]; kept public so tests can assert that.
pub fn closure_sequential(d: &Digraph, s: &VertexSet) -> VertexSet {
    assert_in_range(d, s);
    let loop_rule = d.has_loops();
    let mut filled = s.clone();
    'outer: loop {
        for v in 0..d.n() {
            if !loop_rule && !filled.contains(v) {
                continue;
            }
            if let DiffSize::One(w) = d.out_neighbors(v).diff_size(&filled) {
                filled.insert(w);
                continue 'outer;
            }
        }
        return filled;
    }
}

/// Replay a trace round by round, validating every force against the set it
/// was recorded from. Returns the rebuilt final set, or `None` when any
/// force is invalid.
pub fn replay(d: &Digraph, start: &VertexSet, trace: &ForcingTrace) -> Option<VertexSet> {
    let loop_rule = d.has_loops();
    let mut filled = start.clone();
    let mut prev = start.clone();
    let mut current_round = 0;
    for f in &trace.rounds {
        if f.round != current_round {
            prev = filled.clone();
            current_round = f.round;
        }
        if !loop_rule && !prev.contains(f.forcer) {
            return None;
        }
        match d.out_neighbors(f.forcer).diff_size(&prev) {
            DiffSize::One(w) if w == f.forced => filled.insert(f.forced),
            _ => return None,
        }
    }
    Some(filled)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{self, Digraph};

    #[test]
    fn single_vertex_of_cycle_forces_everything() {
        // Every vertex of a directed cycle is a ZFS.
        let d = digraph::directed_cycle(3).unwrap();
        let t = closure(&d, &VertexSet::singleton(3, 0));
        assert!(t.final_set.is_full());
        assert_eq!(t.rounds.len(), 2);
        assert!(is_zfs(&digraph::directed_cycle(5).unwrap(), &VertexSet::singleton(5, 2)));
    }

    #[test]
    fn full_set_is_a_fixed_point() {
        let d = digraph::complete(4);
        let t = closure(&d, &VertexSet::full(4));
        assert_eq!(t.final_set, VertexSet::full(4));
        assert!(t.rounds.is_empty());
        assert!(is_stalled(&d, &VertexSet::full(4)));
    }

    #[test]
    fn no_arcs_means_no_forces() {
        let d = digraph::empty(3);
        assert!(!is_zfs(&d, &VertexSet::from_vertices(3, [0, 1])));
        assert!(is_zfs(&d, &VertexSet::full(3)));
    }

    #[test]
    fn loop_rule_forces_from_the_empty_set() {
        // A single vertex with a loop has Z = 0: the vertex is its own
        // unique empty out-neighbor.
        let d = Digraph::from_arcs_with_loops(1, [(0, 0)]).unwrap();
        let t = closure(&d, &VertexSet::empty(1));
        assert!(t.final_set.is_full());
        assert_eq!(t.rounds, vec![Force { round: 1, forcer: 0, forced: 0 }]);
    }

    #[test]
    fn loopless_empty_set_never_forces() {
        let d = digraph::directed_cycle(4).unwrap();
        assert_eq!(closure(&d, &VertexSet::empty(4)).final_set, VertexSet::empty(4));
    }

    #[test]
    fn stalled_center_of_bidirected_p3() {
        // The center has two empty out-neighbors, so nothing moves.
        let d = digraph::bidirected_path(3);
        assert!(is_stalled(&d, &VertexSet::singleton(3, 1)));
        let p = digraph::directed_path(3).unwrap();
        assert!(!is_stalled(&p, &VertexSet::singleton(3, 0)));
    }

    #[test]
    fn directed_cycles_have_no_small_critical_sets() {
        for n in 2..=8 {
            let d = digraph::directed_cycle(n).unwrap();
            for mask in 1u64..(1 << n) - 1 {
                let w = VertexSet::from_mask(n, mask);
                assert!(!is_critical(&d, &w), "C_{n} W={w}");
            }
            assert!(is_critical(&d, &VertexSet::full(n)));
        }
    }

    #[test]
    fn star_leaves_are_critical() {
        // Bidirected K_{1,2}: both leaves share the center as their only
        // in-neighbor.
        let d = digraph::star(2, &"22".parse().unwrap()).unwrap();
        assert!(is_critical(&d, &VertexSet::from_vertices(3, [1, 2])));
    }

    #[test]
    fn strongly_critical_implies_critical() {
        for n in 2..=5usize {
            for code in 0u64..(1 << (n * n - n)).min(1 << 12) {
                let d = random_like_digraph(n, code);
                for mask in 1u64..1 << n {
                    let w = VertexSet::from_mask(n, mask);
                    if is_strongly_critical(&d, &w) {
                        assert!(is_critical(&d, &w));
                    }
                }
            }
        }
    }

    #[test]
    fn trace_replay_reproduces_final_set() {
        let d = digraph::de_bruijn(2, 2).unwrap();
        let s = VertexSet::from_vertices(4, [0, 1]);
        let t = closure(&d, &s);
        assert_eq!(replay(&d, &s, &t), Some(t.final_set.clone()));
    }

    // Deterministic small digraph from an arc-presence code.
    fn random_like_digraph(n: usize, code: u64) -> Digraph {
        let mut arcs = Vec::new();
        let mut k = 0;
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    if code >> (k % 64) & 1 == 1 {
                        arcs.push((u, v));
                    }
                    k += 1;
                }
            }
        }
        Digraph::from_arcs(n, arcs).unwrap()
    }
}
