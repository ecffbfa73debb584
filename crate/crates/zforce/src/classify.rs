//! Structural recognition of every digraph class with F < Z, and the
//! critical-set threshold that goes with each class.
//!
//! All membership checks are direct structural tests on degrees and on the
//! complement; no isomorphism testing. The complete-minus-cycles families
//! are recognized by checking that the complement (after peeling off the
//! distinguished vertex or pendant arc) is a disjoint union of directed
//! cycles of length at least 3: every vertex with complement in- and
//! out-degree exactly 1 and no 2-cycles.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::digraph::{self, Digraph};
use crate::error::{Error, Result};

/// The class a digraph with F < Z belongs to, with witness data.
///
/// Families overlap at small orders (K_3 is both a complete outjoin with
/// zero empty part and a complete-minus-cycles instance), so recognition
/// applies a fixed priority: DirectedCycle, then EmptyGraph, then
/// CompleteOutjoinEmpty, then the complete-minus-cycles variants, then
/// SinkOutjoinComplement, then RegularTournament5.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ClassKind {
    /// A directed cycle, including the single vertex.
    DirectedCycle,
    /// A tournament on 5 vertices with every out-degree 2.
    RegularTournament5,
    /// K_n minus a spanning collection of vertex-disjoint directed cycles,
    /// each of length at least 3.
    CompleteMinusSpanningCycles { removed_cycles: Vec<Vec<usize>> },
    /// K_n minus vertex-disjoint directed cycles spanning all but one
    /// vertex, which stays joined in both directions to everything.
    CompleteMinusCyclesPlusVertex {
        hub: usize,
        removed_cycles: Vec<Vec<usize>>,
    },
    /// K_n minus one extra arc `tail -> head` on top of cycles spanning
    /// everything except `tail`.
    CompleteMinusCyclesPlusPendant {
        tail: usize,
        head: usize,
        removed_cycles: Vec<Vec<usize>>,
    },
    /// A complete core minus a spanning cycle collection, with every core
    /// vertex pointing at one universal sink.
    SinkOutjoinComplement {
        sink: usize,
        removed_cycles: Vec<Vec<usize>>,
    },
    /// K_j outjoined to an empty digraph on l vertices, j >= 2.
    CompleteOutjoinEmpty { j: usize, l: usize },
    /// No arcs at all.
    EmptyGraph,
    None,
}

// Decompose the sub-digraph of `d` induced by `keep` into vertex-disjoint
// directed cycles, every vertex having in- and out-degree exactly 1 within
// `keep` and every cycle of length at least 3. Cycles come out sorted by
// smallest member, each starting at its smallest member.
fn cycle_cover(d: &Digraph, keep: &VertexSet) -> Option<Vec<Vec<usize>>> {
    for v in keep.iter() {
        if d.out_neighbors(v).intersection_len(keep) != 1
            || d.in_neighbors(v).intersection_len(keep) != 1
        {
            return None;
        }
    }
    let mut seen = VertexSet::empty(d.n());
    let mut cycles = Vec::new();
    for start in keep.iter() {
        if seen.contains(start) {
            continue;
        }
        let mut cycle = vec![start];
        seen.insert(start);
        let mut cur = start;
        loop {
            let next = d
                .out_neighbors(cur)
                .intersection(keep)
                .iter()
                .next()
                .expect("out-degree 1 within keep");
            if next == start {
                break;
            }
            if seen.contains(next) {
                return None;
            }
            seen.insert(next);
            cycle.push(next);
            cur = next;
        }
        if cycle.len() < 3 {
            return None;
        }
        cycles.push(cycle);
    }
    Some(cycles)
}

/// Recognize the class of `d` within the F < Z characterization, or `None`
/// when F >= Z (or F is undefined on loopless input, which cannot happen).
pub fn classify_f_less_than_z(d: &Digraph) -> Result<ClassKind> {
    if d.allows_loops() {
        return Err(Error::LoopsNotSupported);
    }
    let n = d.n();
    if d.is_directed_cycle() {
        return Ok(ClassKind::DirectedCycle);
    }
    if n >= 1 && d.arc_count() == 0 {
        return Ok(ClassKind::EmptyGraph);
    }
    if (0..n).all(|v| d.out_degree(v) == 0 || d.out_degree(v) == n - 1) {
        let j = (0..n).filter(|&v| d.out_degree(v) == n - 1).count();
        if j >= 2 {
            return Ok(ClassKind::CompleteOutjoinEmpty { j, l: n - j });
        }
    }
    let c = digraph::complement(d)?;
    let all = VertexSet::full(n);
    if let Some(removed_cycles) = cycle_cover(&c, &all) {
        return Ok(ClassKind::CompleteMinusSpanningCycles { removed_cycles });
    }
    // One vertex may sit outside the removed cycles: isolated in the
    // complement (kept fully joined), carrying one pendant complement arc
    // (one arc of K_n removed besides the cycles), or a universal sink
    // (the outjoin target, missing all its out-arcs).
    for v in 0..n {
        let mut rest = all.clone();
        rest.remove(v);
        if c.ug_degree(v) == 0 {
            if let Some(removed_cycles) = cycle_cover(&c, &rest) {
                return Ok(ClassKind::CompleteMinusCyclesPlusVertex {
                    hub: v,
                    removed_cycles,
                });
            }
        }
        if c.in_degree(v) == 0 && c.out_degree(v) == 1 {
            let head = c.out_neighbors(v).iter().next().unwrap();
            if let Some(removed_cycles) = cycle_cover(&c, &rest) {
                return Ok(ClassKind::CompleteMinusCyclesPlusPendant {
                    tail: v,
                    head,
                    removed_cycles,
                });
            }
        }
        if d.out_degree(v) == 0 && d.in_degree(v) == n - 1 {
            if let Some(removed_cycles) = cycle_cover(&c, &rest) {
                return Ok(ClassKind::SinkOutjoinComplement {
                    sink: v,
                    removed_cycles,
                });
            }
        }
    }
    if n == 5 && d.is_tournament() && (0..5).all(|v| d.out_degree(v) == 2) {
        return Ok(ClassKind::RegularTournament5);
    }
    Ok(ClassKind::None)
}

/// The uniform critical-set threshold: the `k` such that W is critical
/// exactly when |W| >= k, for the digraphs where such a k exists.
pub fn critical_threshold(d: &Digraph) -> Result<Option<usize>> {
    Ok(match classify_f_less_than_z(d)? {
        ClassKind::EmptyGraph => Some(1),
        ClassKind::CompleteOutjoinEmpty { .. } => Some(2),
        ClassKind::CompleteMinusSpanningCycles { .. }
        | ClassKind::CompleteMinusCyclesPlusVertex { .. }
        | ClassKind::CompleteMinusCyclesPlusPendant { .. }
        | ClassKind::SinkOutjoinComplement { .. } => Some(3),
        ClassKind::RegularTournament5 => Some(4),
        ClassKind::DirectedCycle => Some(d.n()),
        ClassKind::None => None,
    })
}

/// The oriented restriction of the characterization. Only four families
/// survive the no-2-cycle constraint: the empty digraph, directed cycles,
/// the directed 3-cycle outjoined to one extra vertex (which comes back as
/// `SinkOutjoinComplement`), and the regular 5-tournaments.
pub fn classify_oriented(d: &Digraph) -> Result<ClassKind> {
    if !d.is_oriented() {
        return Err(Error::NotOriented);
    }
    let kind = classify_f_less_than_z(d)?;
    debug_assert!(matches!(
        kind,
        ClassKind::None
            | ClassKind::EmptyGraph
            | ClassKind::DirectedCycle
            | ClassKind::SinkOutjoinComplement { .. }
            | ClassKind::RegularTournament5
    ));
    Ok(kind)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{complete, directed_cycle, empty, outjoin, tournament_from_bits, Digraph};

    #[test]
    fn directed_cycles_and_empty_graphs() {
        assert_eq!(
            classify_f_less_than_z(&directed_cycle(6).unwrap()).unwrap(),
            ClassKind::DirectedCycle
        );
        assert_eq!(
            classify_f_less_than_z(&empty(4)).unwrap(),
            ClassKind::EmptyGraph
        );
        // The single vertex is a directed cycle before it is an empty graph.
        assert_eq!(
            classify_f_less_than_z(&empty(1)).unwrap(),
            ClassKind::DirectedCycle
        );
    }

    #[test]
    fn complete_outjoin_empty() {
        let d = outjoin(&complete(5), &empty(2));
        assert_eq!(
            classify_f_less_than_z(&d).unwrap(),
            ClassKind::CompleteOutjoinEmpty { j: 5, l: 2 }
        );
        // K_3 itself: the outjoin class with an empty tail part.
        assert_eq!(
            classify_f_less_than_z(&complete(3)).unwrap(),
            ClassKind::CompleteOutjoinEmpty { j: 3, l: 0 }
        );
    }

    #[test]
    fn complete_minus_cycle_families() {
        // K_6 minus two disjoint triangles.
        let mut arcs = Vec::new();
        let removed = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)];
        for u in 0..6 {
            for v in 0..6 {
                if u != v && !removed.contains(&(u, v)) {
                    arcs.push((u, v));
                }
            }
        }
        let d = Digraph::from_arcs(6, arcs).unwrap();
        assert_eq!(
            classify_f_less_than_z(&d).unwrap(),
            ClassKind::CompleteMinusSpanningCycles {
                removed_cycles: vec![vec![0, 1, 2], vec![3, 4, 5]]
            }
        );
        assert_eq!(critical_threshold(&d).unwrap(), Some(3));

        // Same core with a fully joined extra vertex 6.
        let mut arcs = d.arcs();
        for v in 0..6 {
            arcs.push((6, v));
            arcs.push((v, 6));
        }
        let hubbed = Digraph::from_arcs(7, arcs.clone()).unwrap();
        assert_eq!(
            classify_f_less_than_z(&hubbed).unwrap(),
            ClassKind::CompleteMinusCyclesPlusVertex {
                hub: 6,
                removed_cycles: vec![vec![0, 1, 2], vec![3, 4, 5]]
            }
        );

        // Drop the arc 6 -> 0 as well: the pendant variant.
        let pendant_arcs: Vec<_> = arcs.iter().copied().filter(|&a| a != (6, 0)).collect();
        let pendant = Digraph::from_arcs(7, pendant_arcs).unwrap();
        assert_eq!(
            classify_f_less_than_z(&pendant).unwrap(),
            ClassKind::CompleteMinusCyclesPlusPendant {
                tail: 6,
                head: 0,
                removed_cycles: vec![vec![0, 1, 2], vec![3, 4, 5]]
            }
        );

        // Keep only the arcs into 6: the universal-sink variant.
        let sink_arcs: Vec<_> = arcs.iter().copied().filter(|&(u, _)| u != 6).collect();
        let sunk = Digraph::from_arcs(7, sink_arcs).unwrap();
        assert_eq!(
            classify_f_less_than_z(&sunk).unwrap(),
            ClassKind::SinkOutjoinComplement {
                sink: 6,
                removed_cycles: vec![vec![0, 1, 2], vec![3, 4, 5]]
            }
        );
    }

    #[test]
    fn regular_5_tournament() {
        // i -> i+1 and i -> i+2 mod 5: every out-degree is 2.
        let arcs = (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, (i + 2) % 5)]);
        let d = Digraph::from_arcs(5, arcs).unwrap();
        assert_eq!(
            classify_f_less_than_z(&d).unwrap(),
            ClassKind::RegularTournament5
        );
        assert_eq!(critical_threshold(&d).unwrap(), Some(4));
        // A transitive tournament is not regular.
        let t = tournament_from_bits(5, (1 << 10) - 1).unwrap();
        assert_eq!(classify_f_less_than_z(&t).unwrap(), ClassKind::None);
    }

    #[test]
    fn short_cycles_in_the_cover_are_rejected()  {
        // K_4 minus two complement 2-cycles leaves complement in/out degrees
        // all 1 but cycle length 2.
        let mut arcs = Vec::new();
        let removed = [(0, 1), (1, 0), (2, 3), (3, 2)];
        for u in 0..4 {
            for v in 0..4 {
                if u != v && !removed.contains(&(u, v)) {
                    arcs.push((u, v));
                }
            }
        }
        let d = Digraph::from_arcs(4, arcs).unwrap();
        assert_eq!(classify_f_less_than_z(&d).unwrap(), ClassKind::None);
    }

    #[test]
    fn oriented_restriction() {
        assert_eq!(
            classify_oriented(&empty(3)).unwrap(),
            ClassKind::EmptyGraph
        );
        let triangle_plus = outjoin(&directed_cycle(3).unwrap(), &empty(1));
        assert_eq!(
            classify_oriented(&triangle_plus).unwrap(),
            ClassKind::SinkOutjoinComplement {
                sink: 3,
                removed_cycles: vec![vec![0, 2, 1]]
            }
        );
        assert!(classify_oriented(&complete(3)).is_err());
    }

    #[test]
    fn thresholds_for_trivial_families() {
        assert_eq!(critical_threshold(&empty(4)).unwrap(), Some(1));
        assert_eq!(
            critical_threshold(&outjoin(&complete(3), &empty(2))).unwrap(),
            Some(2)
        );
        assert_eq!(
            critical_threshold(&directed_cycle(8).unwrap()).unwrap(),
            Some(8)
        );
        assert_eq!(critical_threshold(&crate::digraph::bidirected_path(4)).unwrap(), None);
    }
}
