//! Immutable simple-digraph representation, digraph operators, and family
//! generators.
//!
//! A [`Digraph`] stores per-vertex out- and in-neighborhoods as bitsets and
//! never changes after construction, so it can be shared freely across
//! threads during exhaustive searches. Loop-permitting digraphs are built
//! with [`Digraph::from_arcs_with_loops`]; everything else rejects loops at
//! construction.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// A finite simple digraph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    out_adj: Vec<VertexSet>,
    in_adj: Vec<VertexSet>,
    allow_loops: bool,
}

impl Digraph {
    /// Build a loopless digraph from an arc list. Duplicate arcs collapse.
    pub fn from_arcs<I: IntoIterator<Item = (usize, usize)>>(n: usize, arcs: I) -> Result<Self> {
        Self::build(n, arcs, false)
    }

    /// Build a digraph that may carry loops `(v, v)`.
    pub fn from_arcs_with_loops<I: IntoIterator<Item = (usize, usize)>>(
        n: usize,
        arcs: I,
    ) -> Result<Self> {
        Self::build(n, arcs, true)
    }

    fn build<I: IntoIterator<Item = (usize, usize)>>(
        n: usize,
        arcs: I,
        allow_loops: bool,
    ) -> Result<Self> {
        let mut out_adj = vec![VertexSet::empty(n); n];
        let mut in_adj = vec![VertexSet::empty(n); n];
        for (u, v) in arcs {
            if u >= n {
                return Err(Error::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v, n));
            }
            if u == v && !allow_loops {
                return Err(Error::UnexpectedLoop(u));
            }
            out_adj[u].insert(v);
            in_adj[v].insert(u);
        }
        Ok(Digraph {
            n,
            out_adj,
            in_adj,
            allow_loops,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Whether this digraph was constructed in loop-permitting mode.
    pub fn allows_loops(&self) -> bool {
        self.allow_loops
    }

    /// Whether at least one loop is actually present. This is what selects
    /// the color change rule.
    pub fn has_loops(&self) -> bool {
        (0..self.n).any(|v| self.out_adj[v].contains(v))
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out_adj[u].contains(v)
    }

    pub fn out_neighbors(&self, v: usize) -> &VertexSet {
        &self.out_adj[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &VertexSet {
        &self.in_adj[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_adj[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_adj[v].len()
    }

    pub fn arc_count(&self) -> usize {
        self.out_adj.iter().map(|s| s.len()).sum()
    }

    /// Arcs in `(tail, head)` order: sorted by tail, then head.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut arcs = Vec::with_capacity(self.arc_count());
        for u in 0..self.n {
            for v in self.out_adj[u].iter() {
                arcs.push((u, v));
            }
        }
        arcs
    }

    pub fn has_source(&self) -> bool {
        (0..self.n).any(|v| self.in_degree(v) == 0)
    }

    pub fn sinks(&self) -> VertexSet {
        VertexSet::from_vertices(self.n, (0..self.n).filter(|&v| self.out_degree(v) == 0))
    }

    /// No 2-cycles and no loops.
    pub fn is_oriented(&self) -> bool {
        (0..self.n).all(|u| {
            !self.out_adj[u].contains(u)
                && self.out_adj[u].iter().all(|v| !self.out_adj[v].contains(u))
        })
    }

    /// Exactly one of `uv`, `vu` for every pair.
    pub fn is_tournament(&self) -> bool {
        self.is_oriented() && self.arc_count() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Neighbors in the underlying undirected graph.
    pub fn ug_neighbors(&self, v: usize) -> VertexSet {
        let mut s = self.out_adj[v].union(&self.in_adj[v]);
        s.remove(v);
        s
    }

    pub fn ug_degree(&self, v: usize) -> usize {
        self.ug_neighbors(v).len()
    }

    pub fn is_weakly_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.weak_component_of(0).len() == self.n
    }

    fn weak_component_of(&self, start: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(self.n, start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for w in self.ug_neighbors(v).iter() {
                if !seen.contains(w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Weakly connected components, each sorted, ordered by smallest member.
    pub fn weak_components(&self) -> Vec<VertexSet> {
        let mut assigned = VertexSet::empty(self.n);
        let mut comps = Vec::new();
        for v in 0..self.n {
            if !assigned.contains(v) {
                let comp = self.weak_component_of(v);
                assigned.union_with(&comp);
                comps.push(comp);
            }
        }
        comps
    }

    /// The sub-digraph induced by `keep`, vertices re-indexed in ascending
    /// order. Returns the induced digraph together with the old-index list.
    pub fn induced(&self, keep: &VertexSet) -> (Digraph, Vec<usize>) {
        let old: Vec<usize> = keep.iter().collect();
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in old.iter().enumerate() {
            pos[v] = i;
        }
        let mut arcs = Vec::new();
        for &u in &old {
            for v in self.out_adj[u].intersection(keep).iter() {
                arcs.push((pos[u], pos[v]));
            }
        }
        let d = if self.allow_loops {
            Digraph::from_arcs_with_loops(old.len(), arcs)
        } else {
            Digraph::from_arcs(old.len(), arcs)
        }
        .expect("induced subgraph of a valid digraph is valid");
        (d, old)
    }

    /// True when the digraph has no directed cycle. Loops count as cycles.
    pub fn is_dag(&self) -> bool {
        let mut indeg: Vec<usize> = (0..self.n).map(|v| self.in_degree(v)).collect();
        let mut queue: Vec<usize> = (0..self.n).filter(|&v| indeg[v] == 0).collect();
        let mut removed = 0;
        while let Some(v) = queue.pop() {
            removed += 1;
            for w in self.out_adj[v].iter() {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push(w);
                }
            }
        }
        removed == self.n
    }

    /// True for a weakly connected digraph whose every vertex has in- and
    /// out-degree exactly 1, plus the single-vertex digraph with no arcs.
    pub fn is_directed_cycle(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        if self.n == 1 {
            return self.arc_count() == 0;
        }
        self.is_weakly_connected()
            && (0..self.n).all(|v| self.out_degree(v) == 1 && self.in_degree(v) == 1)
    }

    /// Vertex order along the underlying path, starting from the
    /// smaller-indexed endpoint. Errors when `UG(D)` is not a path.
    pub fn path_order(&self) -> Result<Vec<usize>> {
        if self.n == 0 || self.has_loops() {
            return Err(Error::NotAPath);
        }
        if self.n == 1 {
            return Ok(vec![0]);
        }
        let mut endpoints = Vec::new();
        for v in 0..self.n {
            match self.ug_degree(v) {
                1 => endpoints.push(v),
                2 => {}
                _ => return Err(Error::NotAPath),
            }
        }
        if endpoints.len() != 2 || !self.is_weakly_connected() {
            return Err(Error::NotAPath);
        }
        Ok(self.walk_from(endpoints[0]))
    }

    /// Vertex order around the underlying cycle, starting at vertex 0 and
    /// proceeding toward its smaller underlying neighbor. Errors when
    /// `UG(D)` is not a cycle on at least 3 vertices.
    pub fn cycle_order(&self) -> Result<Vec<usize>> {
        if self.n < 3 || self.has_loops() {
            return Err(Error::NotACycle);
        }
        if (0..self.n).any(|v| self.ug_degree(v) != 2) || !self.is_weakly_connected() {
            return Err(Error::NotACycle);
        }
        let mut order = vec![0];
        let mut prev = 0;
        let mut cur = self.ug_neighbors(0).iter().next().unwrap();
        while cur != 0 {
            order.push(cur);
            let next = self
                .ug_neighbors(cur)
                .iter()
                .find(|&w| w != prev)
                .expect("degree-2 vertex has a second neighbor");
            prev = cur;
            cur = next;
        }
        debug_assert_eq!(order.len(), self.n);
        Ok(order)
    }

    fn walk_from(&self, start: usize) -> Vec<usize> {
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            match self.ug_neighbors(cur).iter().find(|&w| w != prev) {
                Some(next) => {
                    order.push(next);
                    prev = cur;
                    cur = next;
                }
                None => return order,
            }
        }
    }
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Digraph(n={}, arcs={:?})", self.n, self.arcs())
    }
}

// ---------------------------------------------------------------------------
// Operators
// ---------------------------------------------------------------------------

/// `(u,v)` is an arc of the complement iff `u != v` and `(u,v)` is not an
/// arc of `d`. Rejects loop-mode input.
pub fn complement(d: &Digraph) -> Result<Digraph> {
    if d.allows_loops() {
        return Err(Error::LoopsNotSupported);
    }
    let n = d.n();
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && !d.has_arc(u, v) {
                arcs.push((u, v));
            }
        }
    }
    Digraph::from_arcs(n, arcs)
}

/// Disjoint union plus all arcs from every `d`-vertex to every `h`-vertex.
/// The vertices of `d` come first.
pub fn outjoin(d: &Digraph, h: &Digraph) -> Digraph {
    let n = d.n() + h.n();
    let mut arcs = d.arcs();
    arcs.extend(h.arcs().into_iter().map(|(u, v)| (u + d.n(), v + d.n())));
    for u in 0..d.n() {
        for v in 0..h.n() {
            arcs.push((u, d.n() + v));
        }
    }
    if d.allows_loops() || h.allows_loops() {
        Digraph::from_arcs_with_loops(n, arcs)
    } else {
        Digraph::from_arcs(n, arcs)
    }
    .expect("outjoin of valid digraphs is valid")
}

/// Line digraph: one vertex per arc of `d`, arc `a -> b` whenever the head
/// of `a` is the tail of `b`. Also returns the arc-to-vertex labelling in
/// line-vertex order (sorted by tail, then head).
pub fn line_digraph(d: &Digraph) -> (Digraph, Vec<(usize, usize)>) {
    let base_arcs = d.arcs();
    let m = base_arcs.len();
    let mut index = std::collections::HashMap::with_capacity(m);
    for (i, &a) in base_arcs.iter().enumerate() {
        index.insert(a, i);
    }
    let mut arcs = Vec::new();
    for (i, &(_, head)) in base_arcs.iter().enumerate() {
        for w in d.out_neighbors(head).iter() {
            arcs.push((i, index[&(head, w)]));
        }
    }
    let has_loops = base_arcs.iter().any(|&(u, v)| u == v);
    let ld = if has_loops {
        Digraph::from_arcs_with_loops(m, arcs)
    } else {
        Digraph::from_arcs(m, arcs)
    }
    .expect("line digraph arcs are in range");
    (ld, base_arcs)
}

/// Disjoint union, re-indexing each digraph's vertices after the previous.
pub fn disjoint_union(parts: &[Digraph]) -> Digraph {
    let n: usize = parts.iter().map(|d| d.n()).sum();
    let any_loops = parts.iter().any(|d| d.allows_loops());
    let mut arcs = Vec::new();
    let mut offset = 0;
    for d in parts {
        arcs.extend(d.arcs().into_iter().map(|(u, v)| (u + offset, v + offset)));
        offset += d.n();
    }
    if any_loops {
        Digraph::from_arcs_with_loops(n, arcs)
    } else {
        Digraph::from_arcs(n, arcs)
    }
    .expect("union of valid digraphs is valid")
}

// ---------------------------------------------------------------------------
// Orientation specs for weak paths, weak cycles, and stars
// ---------------------------------------------------------------------------

/// Direction of one edge of the underlying path, cycle, or star, in vertex
/// order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeDir {
    Forward,
    Backward,
    Both,
}

/// One [`EdgeDir`] per underlying edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientationSpec(pub Vec<EdgeDir>);

impl OrientationSpec {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn all(dir: EdgeDir, len: usize) -> Self {
        OrientationSpec(vec![dir; len])
    }

    /// All `3^len` specs of a given length, in lexicographic
    /// forward < backward < both order.
    pub fn enumerate(len: usize) -> impl Iterator<Item = OrientationSpec> {
        let total = 3usize.pow(len as u32);
        (0..total).map(move |mut code| {
            let mut dirs = Vec::with_capacity(len);
            for _ in 0..len {
                dirs.push(match code % 3 {
                    0 => EdgeDir::Forward,
                    1 => EdgeDir::Backward,
                    _ => EdgeDir::Both,
                });
                code /= 3;
            }
            OrientationSpec(dirs)
        })
    }
}

impl std::str::FromStr for OrientationSpec {
    type Err = Error;

    /// One character per edge: `f` forward, `b` backward, `2` both.
    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                'f' => Ok(EdgeDir::Forward),
                'b' => Ok(EdgeDir::Backward),
                '2' => Ok(EdgeDir::Both),
                _ => Err(Error::InvalidParams(format!(
                    "bad orientation character {c:?}; expected f, b, or 2"
                ))),
            })
            .collect::<Result<Vec<_>>>()
            .map(OrientationSpec)
    }
}

fn spec_arcs(spec: &OrientationSpec, edge_ends: impl Fn(usize) -> (usize, usize)) -> Vec<(usize, usize)> {
    let mut arcs = Vec::new();
    for (i, dir) in spec.0.iter().enumerate() {
        let (a, b) = edge_ends(i);
        match dir {
            EdgeDir::Forward => arcs.push((a, b)),
            EdgeDir::Backward => arcs.push((b, a)),
            EdgeDir::Both => {
                arcs.push((a, b));
                arcs.push((b, a));
            }
        }
    }
    arcs
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

pub fn directed_cycle(n: usize) -> Result<Digraph> {
    if n < 2 {
        return Err(Error::InvalidParams("directed cycle needs n >= 2".into()));
    }
    Digraph::from_arcs(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn directed_path(n: usize) -> Result<Digraph> {
    if n == 0 {
        return Err(Error::InvalidParams("path needs n >= 1".into()));
    }
    Digraph::from_arcs(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1)))
}

/// Complete digraph: both arcs between every pair.
pub fn complete(n: usize) -> Digraph {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v {
                arcs.push((u, v));
            }
        }
    }
    Digraph::from_arcs(n, arcs).expect("complete digraph is valid")
}

pub fn empty(n: usize) -> Digraph {
    Digraph::from_arcs(n, []).expect("empty digraph is valid")
}

/// Weak path on `spec.len() + 1` vertices; edge `i` joins `v_i` and `v_{i+1}`.
pub fn weak_path(spec: &OrientationSpec) -> Digraph {
    let n = spec.len() + 1;
    Digraph::from_arcs(n, spec_arcs(spec, |i| (i, i + 1))).expect("weak path arcs in range")
}

/// Weak cycle on `spec.len()` vertices, `n >= 3`; edge `i` joins `v_i` and
/// `v_{(i+1) mod n}`.
pub fn weak_cycle(spec: &OrientationSpec) -> Result<Digraph> {
    let n = spec.len();
    if n < 3 {
        return Err(Error::InvalidParams("weak cycle needs n >= 3".into()));
    }
    Digraph::from_arcs(n, spec_arcs(spec, |i| (i, (i + 1) % n)))
}

/// Star with center 0 and leaves `1..=t`; `Forward` points center to leaf.
pub fn star(t: usize, spec: &OrientationSpec) -> Result<Digraph> {
    if spec.len() != t {
        return Err(Error::InvalidParams(format!(
            "star with {t} leaves needs {t} edge orientations, got {}",
            spec.len()
        )));
    }
    Digraph::from_arcs(t + 1, spec_arcs(spec, |i| (0, i + 1)))
}

/// Fully bidirected path, `UG = P_n`.
pub fn bidirected_path(n: usize) -> Digraph {
    weak_path(&OrientationSpec::all(EdgeDir::Both, n.saturating_sub(1)))
}

/// Fully bidirected cycle, `UG = C_n`, `n >= 3`.
pub fn bidirected_cycle(n: usize) -> Result<Digraph> {
    weak_cycle(&OrientationSpec::all(EdgeDir::Both, n))
}

/// de Bruijn digraph `B(d, m)`: vertices are the `d^m` strings over `Z_d` in
/// lexicographic order; string `x_0..x_{m-1}` has an arc to `x_1..x_{m-1} y`
/// for every digit `y`. Constant strings carry loops, so the digraph is
/// built in loop mode.
pub fn de_bruijn(d: usize, m: usize) -> Result<Digraph> {
    if d < 2 || m < 1 {
        return Err(Error::InvalidParams("de Bruijn needs d >= 2, m >= 1".into()));
    }
    let n = d.checked_pow(m as u32).ok_or_else(|| {
        Error::InvalidParams("de Bruijn order overflows".into())
    })?;
    let mut arcs = Vec::with_capacity(n * d);
    for s in 0..n {
        let tail = (s % (n / d)) * d;
        for y in 0..d {
            arcs.push((s, tail + y));
        }
    }
    Digraph::from_arcs_with_loops(n, arcs)
}

/// Digit string of a de Bruijn vertex index, most significant digit first.
pub fn de_bruijn_label(d: usize, m: usize, mut index: usize) -> Vec<u8> {
    let mut digits = vec![0u8; m];
    for i in (0..m).rev() {
        digits[i] = (index % d) as u8;
        index /= d;
    }
    digits
}

/// Kautz digraph `K(d, m)`: vertices are strings over `Z_{d+1}` of length
/// `m` with no equal consecutive digits, in lexicographic order. Loopless by
/// construction.
pub fn kautz(d: usize, m: usize) -> Result<Digraph> {
    if d < 2 || m < 1 {
        return Err(Error::InvalidParams("Kautz needs d >= 2, m >= 1".into()));
    }
    let labels = kautz_labels(d, m);
    let index: std::collections::HashMap<&[u8], usize> = labels
        .iter()
        .enumerate()
        .map(|(i, s)| (s.as_slice(), i))
        .collect();
    let mut arcs = Vec::new();
    for (i, s) in labels.iter().enumerate() {
        let mut t = s[1..].to_vec();
        t.push(0);
        for y in 0..=(d as u8) {
            if y != s[m - 1] {
                *t.last_mut().unwrap() = y;
                if m > 1 && t[m - 1] == t[m - 2] {
                    continue;
                }
                arcs.push((i, index[t.as_slice()]));
            }
        }
    }
    Digraph::from_arcs(labels.len(), arcs)
}

/// Kautz vertex labels in lexicographic order.
pub fn kautz_labels(d: usize, m: usize) -> Vec<Vec<u8>> {
    let mut labels = Vec::new();
    let mut cur = Vec::with_capacity(m);
    fn rec(d: usize, m: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for y in 0..=(d as u8) {
            if cur.last() != Some(&y) {
                cur.push(y);
                rec(d, m, cur, out);
                cur.pop();
            }
        }
    }
    rec(d, m, &mut cur, &mut labels);
    labels
}

/// Tournament on `n` vertices decoded from `bits`: for the pair `(i, j)`
/// with `i < j`, taken in lexicographic order, bit 1 orients `i -> j` and
/// bit 0 orients `j -> i`.
pub fn tournament_from_bits(n: usize, bits: u64) -> Result<Digraph> {
    let pairs = n * n.saturating_sub(1) / 2;
    if pairs > 64 {
        return Err(Error::InvalidParams("tournament too large for a 64-bit code".into()));
    }
    let mut arcs = Vec::with_capacity(pairs);
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if bits >> k & 1 == 1 {
                arcs.push((i, j));
            } else {
                arcs.push((j, i));
            }
            k += 1;
        }
    }
    Digraph::from_arcs(n, arcs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_sums_match_arc_count() {
        let d = de_bruijn(2, 3).unwrap();
        let out: usize = (0..d.n()).map(|v| d.out_degree(v)).sum();
        let inn: usize = (0..d.n()).map(|v| d.in_degree(v)).sum();
        assert_eq!(out, d.arc_count());
        assert_eq!(inn, d.arc_count());
    }

    #[test]
    fn complement_of_empty_is_complete() {
        let c = complement(&empty(3)).unwrap();
        assert_eq!(c, complete(3));
        assert_eq!(c.arc_count(), 6);
    }

    #[test]
    fn complement_of_directed_triangle() {
        // Arc-by-arc from the definition: the reversed triangle.
        let c3 = directed_cycle(3).unwrap();
        let cc = complement(&c3).unwrap();
        assert_eq!(cc.arcs(), vec![(0, 2), (1, 0), (2, 1)]);
    }

    #[test]
    fn complement_rejects_loop_mode() {
        let d = Digraph::from_arcs_with_loops(2, [(0, 0)]).unwrap();
        assert!(matches!(complement(&d), Err(Error::LoopsNotSupported)));
    }

    #[test]
    fn outjoin_arc_count() {
        let d = directed_cycle(4).unwrap();
        let h = complete(3);
        let j = outjoin(&d, &h);
        assert_eq!(j.arc_count(), d.arc_count() + h.arc_count() + 12);
        assert_eq!(j.n(), 7);
    }

    #[test]
    fn outjoin_of_single_vertices_is_one_arc() {
        let j = outjoin(&empty(1), &empty(1));
        assert_eq!(j.arcs(), vec![(0, 1)]);
    }

    #[test]
    fn line_digraph_of_cycle_is_cycle() {
        for n in 2..7 {
            let (ld, labels) = line_digraph(&directed_cycle(n).unwrap());
            assert!(ld.is_directed_cycle());
            assert_eq!(labels.len(), n);
        }
    }

    #[test]
    fn line_digraph_arc_count_identity() {
        let d = de_bruijn(2, 2).unwrap();
        let (ld, _) = line_digraph(&d);
        let expected: usize = (0..d.n()).map(|v| d.in_degree(v) * d.out_degree(v)).sum();
        assert_eq!(ld.arc_count(), expected);
    }

    #[test]
    fn de_bruijn_2_3_shape() {
        // B(2,3) has loops exactly at 000 and 111.
        let d = de_bruijn(2, 3).unwrap();
        assert_eq!(d.n(), 8);
        assert_eq!(d.arc_count(), 16);
        assert!(d.has_arc(0, 0) && d.has_arc(7, 7));
        assert_eq!((0..8).filter(|&v| d.has_arc(v, v)).count(), 2);
        assert_eq!(de_bruijn_label(2, 3, 5), vec![1, 0, 1]);
    }

    #[test]
    fn kautz_2_3_shape() {
        let d = kautz(2, 3).unwrap();
        assert_eq!(d.n(), 12);
        assert_eq!(d.arc_count(), 24);
        assert!(!d.has_loops());
    }

    #[test]
    fn de_bruijn_is_iterated_line_digraph() {
        // L(B(d,m)) = B(d,m+1) under the canonical string relabelling: the
        // arc (x0..x_{m-1} -> x1..x_m) is the string x0..x_m, and sorting
        // arcs by (tail, head) sorts those strings lexicographically.
        for (d, m) in [(2, 1), (2, 2), (3, 1)] {
            let base = de_bruijn(d, m).unwrap();
            let (ld, labels) = line_digraph(&base);
            let next = de_bruijn(d, m + 1).unwrap();
            assert_eq!(ld.n(), next.n());
            // Identity relabelling: check adjacency matches exactly.
            for u in 0..ld.n() {
                assert_eq!(ld.out_neighbors(u), next.out_neighbors(u), "d={d} m={m} u={u}");
            }
            // Labels really are the (m+1)-strings in lexicographic order.
            for (i, &(tail, head)) in labels.iter().enumerate() {
                let mut s = de_bruijn_label(d, m, tail);
                s.push(*de_bruijn_label(d, m, head).last().unwrap());
                assert_eq!(s, de_bruijn_label(d, m + 1, i));
            }
        }
    }

    #[test]
    fn kautz_is_iterated_line_digraph() {
        for (d, m) in [(2, 1), (2, 2), (3, 1)] {
            let base = kautz(d, m).unwrap();
            let (ld, _) = line_digraph(&base);
            let next = kautz(d, m + 1).unwrap();
            assert_eq!(ld.n(), next.n());
            for u in 0..ld.n() {
                assert_eq!(ld.out_neighbors(u), next.out_neighbors(u), "d={d} m={m} u={u}");
            }
        }
    }

    #[test]
    fn weak_path_and_cycle_shapes() {
        let spec: OrientationSpec = "2f2f2fffff".parse().unwrap();
        let d = weak_cycle(&spec).unwrap();
        assert_eq!(d.n(), 10);
        assert_eq!(d.arc_count(), 13);
        assert!(d.cycle_order().is_ok());

        let p = weak_path(&"fb2".parse().unwrap());
        assert_eq!(p.n(), 4);
        assert_eq!(p.path_order().unwrap(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn weak_cycle_rejects_short_specs() {
        assert!(weak_cycle(&"2f".parse().unwrap()).is_err());
    }

    #[test]
    fn tournament_decoding() {
        let t = tournament_from_bits(3, 0b111).unwrap();
        assert_eq!(t.arcs(), vec![(0, 1), (0, 2), (1, 2)]);
        assert!(t.is_tournament());
    }

    #[test]
    fn induced_subgraph_reindexes() {
        let d = directed_cycle(5).unwrap();
        let keep = VertexSet::from_vertices(5, [1, 2, 4]);
        let (sub, old) = d.induced(&keep);
        assert_eq!(old, vec![1, 2, 4]);
        assert_eq!(sub.arcs(), vec![(0, 1)]);
    }
}
