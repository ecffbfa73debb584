//! Exact computation of Z(D) and F(D), minimum (strongly) critical sets,
//! extremal-value predicates, and enumeration of minimal ZFS and maximal
//! FZFS.
//!
//! F(D) is computed through the minimum critical set rather than by direct
//! maximum-FZFS search: the critical side has cardinality `n - F(D)`, which
//! is usually the small side. [`max_fzfs_direct`] keeps the direct search
//! available as an independent cross-check of that reduction.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::forcing::{is_critical, is_fzfs, is_strongly_critical, is_zfs};

/// Default order bound for the exponential enumerations.
pub const DEFAULT_ENUMERATION_BOUND: usize = 20;

/// Iterate the `k`-subsets of `[0, n)` in lexicographic order of their
/// sorted member sequences.
pub fn combinations(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    let mut state: Option<Vec<usize>> = if k <= n { Some((0..k).collect()) } else { None };
    std::iter::from_fn(move || {
        let cur = state.as_ref()?;
        let result = VertexSet::from_vertices(n, cur.iter().copied());
        // Advance to the next combination.
        let mut next = cur.clone();
        let mut i = k;
        loop {
            if i == 0 {
                state = None;
                break;
            }
            i -= 1;
            if next[i] < n - (k - i) {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                state = Some(next);
                break;
            }
        }
        Some(result)
    })
}

/// Z(D) with the lexicographically smallest minimum ZFS as witness.
pub fn zero_forcing_number(d: &Digraph) -> (usize, VertexSet) {
    let n = d.n();
    for k in 0..=n {
        for s in combinations(n, k) {
            if is_zfs(d, &s) {
                return (k, s);
            }
        }
    }
    unreachable!("the full vertex set is always a ZFS")
}

/// Minimum-cardinality (strongly) critical set, lexicographically smallest
/// among the minimum ones, or `None` when no (strongly) critical set
/// exists.
pub fn min_critical_set(d: &Digraph, strong: bool) -> Option<VertexSet> {
    let n = d.n();
    // Out-neighborhoods of v are fully decided once the search boundary has
    // passed their largest member.
    let max_out: Vec<Option<usize>> = (0..n).map(|v| d.out_neighbors(v).iter().max()).collect();
    for k in 1..=n {
        let mut w = VertexSet::empty(n);
        if let Some(found) = extend_critical(d, strong, &max_out, k, 0, &mut w) {
            return Some(found);
        }
    }
    None
}

fn extend_critical(
    d: &Digraph,
    strong: bool,
    max_out: &[Option<usize>],
    remaining: usize,
    start: usize,
    w: &mut VertexSet,
) -> Option<VertexSet> {
    if remaining == 0 {
        let ok = if strong {
            is_strongly_critical(d, w)
        } else {
            is_critical(d, w)
        };
        return ok.then(|| w.clone());
    }
    // Abandon the partial set once some vertex with all out-neighbors
    // decided already violates the criticality condition; no extension from
    // `start` onward can repair it.
    for (v, mo) in max_out.iter().enumerate() {
        if !strong && (v >= start || w.contains(v)) {
            continue;
        }
        let decided = mo.is_none_or(|m| m < start);
        if decided && d.out_neighbors(v).intersection_len(w) == 1 {
            return None;
        }
    }
    for v in start..=d.n() - remaining {
        w.insert(v);
        if let Some(found) = extend_critical(d, strong, max_out, remaining - 1, v + 1, w) {
            return Some(found);
        }
        w.remove(v);
    }
    None
}

/// F(D) with a maximum FZFS witness, computed as `n` minus the minimum
/// (strongly, under the loop rule) critical set. `None` exactly when F is
/// undefined, i.e. Z(D) = 0.
pub fn failed_zero_forcing_number(d: &Digraph) -> Option<(usize, VertexSet)> {
    let strong = d.has_loops();
    let w = min_critical_set(d, strong)?;
    Some((d.n() - w.len(), w.complement()))
}

/// Direct descending-cardinality search for a maximum FZFS. Independent of
/// the critical-set route; used to cross-validate it.
pub fn max_fzfs_direct(d: &Digraph) -> Option<(usize, VertexSet)> {
    let n = d.n();
    for k in (0..n.max(1)).rev() {
        for s in combinations(n, k) {
            if is_fzfs(d, &s) {
                return Some((k, s));
            }
        }
    }
    None
}

fn check_bound(n: usize, bound: usize) -> Result<()> {
    if n > bound || n > 63 {
        return Err(Error::BoundExceeded(n, bound.min(63)));
    }
    Ok(())
}

/// All minimal ZFS (every one-vertex deletion yields a FZFS), sorted by
/// size then lexicographically.
pub fn enumerate_minimal_zfs(d: &Digraph, bound: usize) -> Result<Vec<VertexSet>> {
    let n = d.n();
    check_bound(n, bound)?;
    let mut out = Vec::new();
    for mask in 0..1u64 << n {
        let s = VertexSet::from_mask(n, mask);
        if is_zfs(d, &s)
            && s.iter().all(|v| {
                let mut t = s.clone();
                t.remove(v);
                is_fzfs(d, &t)
            })
        {
            out.push(s);
        }
    }
    sort_by_size_then_lex(&mut out);
    Ok(out)
}

/// All maximal FZFS (every one-vertex addition yields a ZFS), sorted by
/// size then lexicographically.
pub fn enumerate_maximal_fzfs(d: &Digraph, bound: usize) -> Result<Vec<VertexSet>> {
    let n = d.n();
    check_bound(n, bound)?;
    let mut out = Vec::new();
    for mask in 0..1u64 << n {
        let s = VertexSet::from_mask(n, mask);
        if is_fzfs(d, &s)
            && s.complement().iter().all(|v| {
                let mut t = s.clone();
                t.insert(v);
                is_zfs(d, &t)
            })
        {
            out.push(s);
        }
    }
    sort_by_size_then_lex(&mut out);
    Ok(out)
}

fn sort_by_size_then_lex(sets: &mut [VertexSet]) {
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
}

/// Structural predicates for F(D) = n-1, n-2, n-3, computed without any
/// search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExtremalPredicates {
    pub f_is_n_minus_1: bool,
    pub f_is_n_minus_2: bool,
    pub f_is_n_minus_3: bool,
}

/// F(D) = n-1 iff D has a source; F(D) = n-2 iff some pair has matching
/// in-neighborhoods (off each other) and no vertex has in-degree 0;
/// F(D) = n-3 iff neither holds and some vertex triple satisfies the
/// three-way in-neighborhood containment conditions.
pub fn extremal_predicates(d: &Digraph) -> Result<ExtremalPredicates> {
    if d.has_loops() {
        return Err(Error::LoopsNotSupported);
    }
    let n = d.n();
    let has_source = d.has_source();

    let pair_matches = |u: usize, v: usize| {
        let mut nu = d.in_neighbors(u).clone();
        nu.remove(v);
        let mut nv = d.in_neighbors(v).clone();
        nv.remove(u);
        nu == nv
    };
    let some_pair = (0..n).any(|u| (u + 1..n).any(|v| pair_matches(u, v)));

    let triple_matches = |u: usize, v: usize, w: usize| {
        let cover = |a: usize, b: usize, c: usize| {
            let mut na = d.in_neighbors(a).clone();
            na.remove(b);
            na.remove(c);
            na.is_subset(&d.in_neighbors(b).union(d.in_neighbors(c)))
        };
        cover(u, v, w) && cover(v, u, w) && cover(w, u, v)
    };
    let some_triple = (0..n)
        .any(|u| (u + 1..n).any(|v| (v + 1..n).any(|w| triple_matches(u, v, w))));

    Ok(ExtremalPredicates {
        f_is_n_minus_1: has_source,
        f_is_n_minus_2: !has_source && some_pair,
        f_is_n_minus_3: !has_source && !some_pair && some_triple,
    })
}
