//! Simple-cycle enumeration, cycle spectra mod 4, and the chord / intersection
//! structure of pairs of cycles.

use std::collections::BTreeSet;

use crate::graph::Graph;
use thiserror::Error;

/// Default enumeration cap.
pub const DEFAULT_CYCLE_CAP: usize = 1_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycleError {
    #[error("not a valid cycle: {0}")]
    InvalidCycle(String),
    #[error("chord endpoints coincide")]
    ChordEndpointsCoincide,
    #[error("chord endpoints adjacent along the cycle")]
    ChordEndpointsAdjacent,
    #[error("chord endpoint not on the cycle")]
    ChordEndpointNotOnCycle,
    #[error("spectrum truncated at enumeration cap; classification unreliable")]
    TruncatedSpectrum,
    #[error("cycles share no edge, only isolated nodes or nothing")]
    NoEdgeIntersection,
    #[error("cycles intersect in more than one path")]
    MultipleIntersections,
    #[error("cycles are identical")]
    IdenticalCycles,
    #[error("cycles share an isolated node besides shared edge paths")]
    StrayNodeIntersection,
}

/// A simple cycle, stored in canonical orientation: the smallest node first,
/// then the direction whose second node is smaller than the last.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    nodes: Vec<u8>,
}

impl std::fmt::Debug for Cycle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Cycle{:?}", self.nodes)
    }
}

impl Cycle {
    /// Validates the node sequence as a cycle of `g` and canonicalizes it.
    pub fn new(g: &Graph, nodes: &[usize]) -> Result<Cycle, CycleError> {
        if nodes.len() < 3 {
            return Err(CycleError::InvalidCycle("length < 3".into()));
        }
        let p = g.node_count();
        let mut seen = 0u32;
        for &v in nodes {
            if v >= p {
                return Err(CycleError::InvalidCycle(format!("node {v} out of range")));
            }
            if seen & (1 << v) != 0 {
                return Err(CycleError::InvalidCycle(format!("repeated node {v}")));
            }
            seen |= 1 << v;
        }
        for i in 0..nodes.len() {
            let (u, v) = (nodes[i], nodes[(i + 1) % nodes.len()]);
            if !g.has_edge(u, v) {
                return Err(CycleError::InvalidCycle(format!("{u}-{v} not an edge")));
            }
        }
        Ok(Self::from_closed_walk(nodes))
    }

    /// Canonicalizes a node sequence already known to trace a simple cycle.
    fn from_closed_walk(nodes: &[usize]) -> Cycle {
        let n = nodes.len();
        let min_pos = (0..n).min_by_key(|&i| nodes[i]).unwrap();
        let fwd: Vec<u8> = (0..n).map(|i| nodes[(min_pos + i) % n] as u8).collect();
        let bwd: Vec<u8> = (0..n).map(|i| nodes[(min_pos + n - i) % n] as u8).collect();
        Cycle { nodes: if fwd <= bwd { fwd } else { bwd } }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty() // never true: construction requires length >= 3
    }

    /// Residue of the length mod 4.
    pub fn type_mod4(&self) -> u8 {
        (self.nodes.len() % 4) as u8
    }

    pub fn nodes(&self) -> &[u8] {
        &self.nodes
    }

    pub fn contains_node(&self, v: usize) -> bool {
        self.nodes.contains(&(v as u8))
    }

    /// Edges as `(u, v)` pairs with `u < v`, sorted.
    pub fn edge_set(&self) -> Vec<(u8, u8)> {
        let n = self.nodes.len();
        let mut es: Vec<(u8, u8)> = (0..n)
            .map(|i| {
                let (a, b) = (self.nodes[i], self.nodes[(i + 1) % n]);
                (a.min(b), a.max(b))
            })
            .collect();
        es.sort_unstable();
        es
    }

    /// Position of `v` in the canonical orientation, if present.
    fn position(&self, v: usize) -> Option<usize> {
        self.nodes.iter().position(|&x| x as usize == v)
    }
}

/// Outcome of a cycle scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scan {
    Complete,
    Truncated,
    Aborted,
}

/// Enumerates every simple cycle of `g` exactly once, in DFS order, calling
/// `visit` with the canonical node sequence. Stops early when `cap` cycles
/// have been visited (`Scan::Truncated`) or when `visit` returns `false`
/// (`Scan::Aborted`).
///
/// Each cycle is rooted at its smallest node; paths explore only larger
/// nodes, and the orientation with the smaller second node is kept.
pub fn visit_cycles<F: FnMut(&[u8]) -> bool>(g: &Graph, cap: usize, mut visit: F) -> Scan {
    let p = g.node_count();
    let mut path: Vec<u8> = Vec::with_capacity(p);
    let mut count = 0usize;

    struct Dfs<'a> {
        g: &'a Graph,
        above: u32,
        root: usize,
    }

    fn rec<F: FnMut(&[u8]) -> bool>(
        d: &Dfs,
        path: &mut Vec<u8>,
        visited: u32,
        count: &mut usize,
        cap: usize,
        visit: &mut F,
    ) -> Option<Scan> {
        let last = *path.last().unwrap() as usize;
        if path.len() >= 3 && d.g.has_edge(last, d.root) && path[1] < path[path.len() - 1] {
            if !visit(path) {
                return Some(Scan::Aborted);
            }
            *count += 1;
            if *count >= cap {
                return Some(Scan::Truncated);
            }
        }
        let mut cand = d.g.neighbors(last) & d.above & !visited;
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            path.push(w as u8);
            let r = rec(d, path, visited | (1 << w), count, cap, visit);
            path.pop();
            if r.is_some() {
                return r;
            }
        }
        None
    }

    for root in 0..p {
        let above = if root + 1 >= 32 { 0 } else { u32::MAX << (root + 1) };
        let dfs = Dfs { g, above, root };
        path.clear();
        path.push(root as u8);
        if let Some(outcome) = rec(&dfs, &mut path, 1 << root, &mut count, cap, &mut visit) {
            return outcome;
        }
    }
    Scan::Complete
}

/// All simple cycles of `g`, canonicalized and sorted by (length, nodes).
/// The flag is true when the enumeration cap was hit.
pub fn all_cycles(g: &Graph, cap: usize) -> (Vec<Cycle>, bool) {
    let mut out = Vec::new();
    let scan = visit_cycles(g, cap, |nodes| {
        out.push(Cycle { nodes: nodes.to_vec() });
        true
    });
    out.sort_unstable_by(|a, b| (a.len(), &a.nodes).cmp(&(b.len(), &b.nodes)));
    (out, scan == Scan::Truncated)
}

/// The set of simple-cycle lengths present in a graph, with the residues
/// mod 4 they induce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleSpectrum {
    pub lengths: BTreeSet<usize>,
    pub truncated: bool,
}

impl CycleSpectrum {
    /// Sorted residues mod 4 occurring among the lengths.
    pub fn types_present(&self) -> Vec<u8> {
        let mut present = [false; 4];
        for &n in &self.lengths {
            present[n % 4] = true;
        }
        (0..4u8).filter(|&t| present[t as usize]).collect()
    }
}

/// Computes the cycle spectrum by full enumeration (up to `cap` cycles).
pub fn spectrum(g: &Graph, cap: usize) -> CycleSpectrum {
    let mut lengths = BTreeSet::new();
    let scan = visit_cycles(g, cap, |nodes| {
        lengths.insert(nodes.len());
        true
    });
    CycleSpectrum { lengths, truncated: scan == Scan::Truncated }
}

/// Result of a type-restricted scan, used to filter family members fast.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpectrumWithin {
    /// Some cycle's type fell outside the allowed set.
    Escaped,
    /// Cap reached before finishing; membership unknown.
    Truncated,
    /// Complete spectrum, all types inside the allowed set.
    Done(CycleSpectrum),
}

/// Enumerates cycles but aborts as soon as one has a type outside `allowed`.
pub fn spectrum_within(g: &Graph, allowed: [bool; 4], cap: usize) -> SpectrumWithin {
    let mut lengths = BTreeSet::new();
    let scan = visit_cycles(g, cap, |nodes| {
        if !allowed[nodes.len() % 4] {
            return false;
        }
        lengths.insert(nodes.len());
        true
    });
    match scan {
        Scan::Aborted => SpectrumWithin::Escaped,
        Scan::Truncated => SpectrumWithin::Truncated,
        Scan::Complete => SpectrumWithin::Done(CycleSpectrum { lengths, truncated: false }),
    }
}

/// Which cycle types a graph realizes: none, one, two, three, or all four.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EpsilonTag {
    Acyclic,
    Single(u8),
    Pair(u8, u8),
    Triple(u8, u8, u8),
    Quad,
}

impl std::fmt::Display for EpsilonTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EpsilonTag::Acyclic => write!(f, "acyclic"),
            EpsilonTag::Single(a) => write!(f, "single({a})"),
            EpsilonTag::Pair(a, b) => write!(f, "pair({a},{b})"),
            EpsilonTag::Triple(a, b, c) => write!(f, "triple({a},{b},{c})"),
            EpsilonTag::Quad => write!(f, "quad"),
        }
    }
}

/// Classifies a spectrum by how many distinct types occur.
pub fn epsilon_tag(s: &CycleSpectrum) -> Result<EpsilonTag, CycleError> {
    if s.truncated {
        return Err(CycleError::TruncatedSpectrum);
    }
    let t = s.types_present();
    Ok(match t.as_slice() {
        [] => EpsilonTag::Acyclic,
        [a] => EpsilonTag::Single(*a),
        [a, b] => EpsilonTag::Pair(*a, *b),
        [a, b, c] => EpsilonTag::Triple(*a, *b, *c),
        _ => EpsilonTag::Quad,
    })
}

/// Both accountings of how a chord divides a cycle: arc lengths along the
/// cycle, and the lengths of the two cycles that include the chord.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChordSplit {
    /// The two arc lengths, ascending; they sum to the cycle length.
    pub arc_lengths: (usize, usize),
    /// The two chord-including cycle lengths, ascending; arc + 1 each.
    pub cycle_lengths: (usize, usize),
    /// Residues mod 4 of the arc lengths.
    pub arc_types: (u8, u8),
    /// Residues mod 4 of the chord-including cycle lengths.
    pub cycle_types: (u8, u8),
    /// True iff one of the chord-including cycles has odd length.
    pub odd_chord: bool,
}

/// Splits cycle `c` by a chord between nodes `u` and `v` on it. The chord may
/// be an actual edge of the host graph or hypothetical; only positions along
/// the cycle matter.
pub fn chord_split(c: &Cycle, u: usize, v: usize) -> Result<ChordSplit, CycleError> {
    if u == v {
        return Err(CycleError::ChordEndpointsCoincide);
    }
    let pu = c.position(u).ok_or(CycleError::ChordEndpointNotOnCycle)?;
    let pv = c.position(v).ok_or(CycleError::ChordEndpointNotOnCycle)?;
    let n = c.len();
    let d = (pv + n - pu) % n;
    let (a, b) = (d.min(n - d), d.max(n - d));
    if a < 2 {
        return Err(CycleError::ChordEndpointsAdjacent);
    }
    let (ca, cb) = (a + 1, b + 1);
    Ok(ChordSplit {
        arc_lengths: (a, b),
        cycle_lengths: (ca, cb),
        arc_types: ((a % 4) as u8, (b % 4) as u8),
        cycle_types: ((ca % 4) as u8, (cb % 4) as u8),
        odd_chord: ca % 2 == 1 || cb % 2 == 1,
    })
}

/// The maximal common paths of two cycles. A shared node with no shared
/// incident edge counts as a path of length 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SharedPaths {
    /// True when the cycles are identical; `paths` then holds the whole cycle.
    pub full_overlap: bool,
    /// Node sequences of the maximal shared paths, each from its smaller
    /// endpoint, sorted.
    pub paths: Vec<Vec<u8>>,
}

impl SharedPaths {
    /// Lengths in edges of the shared paths.
    pub fn edge_lengths(&self) -> Vec<usize> {
        self.paths.iter().map(|p| p.len() - 1).collect()
    }

    /// Number of shared paths that contain at least one edge.
    pub fn edge_path_count(&self) -> usize {
        self.paths.iter().filter(|p| p.len() > 1).count()
    }
}

pub fn shared_paths(c1: &Cycle, c2: &Cycle) -> SharedPaths {
    if c1 == c2 {
        return SharedPaths { full_overlap: true, paths: vec![c1.nodes.clone()] };
    }
    let e1 = c1.edge_set();
    let e2 = c2.edge_set();
    let shared: Vec<(u8, u8)> = e1.iter().copied().filter(|e| e2.binary_search(e).is_ok()).collect();
    let shared_nodes: Vec<u8> =
        c1.nodes.iter().copied().filter(|&v| c2.nodes.contains(&v)).collect();

    // adjacency within the shared edge set
    let mut nbr: std::collections::BTreeMap<u8, Vec<u8>> = std::collections::BTreeMap::new();
    for &(a, b) in &shared {
        nbr.entry(a).or_default().push(b);
        nbr.entry(b).or_default().push(a);
    }
    let mut paths: Vec<Vec<u8>> = Vec::new();
    let mut used: BTreeSet<u8> = BTreeSet::new();
    // walk each path component from an endpoint (degree 1 in the shared set)
    let endpoints: Vec<u8> = nbr
        .iter()
        .filter(|(_, ns)| ns.len() == 1)
        .map(|(&v, _)| v)
        .collect();
    for &start in &endpoints {
        if used.contains(&start) {
            continue;
        }
        let mut path = vec![start];
        used.insert(start);
        let mut cur = start;
        loop {
            let next = nbr[&cur].iter().copied().find(|n| !used.contains(n));
            match next {
                Some(n) => {
                    used.insert(n);
                    path.push(n);
                    cur = n;
                }
                None => break,
            }
        }
        if path[0] > *path.last().unwrap() {
            path.reverse();
        }
        paths.push(path);
    }
    // isolated shared nodes are length-0 paths
    for &v in &shared_nodes {
        if !nbr.contains_key(&v) {
            paths.push(vec![v]);
        }
    }
    paths.sort();
    SharedPaths { full_overlap: false, paths }
}

/// Removes the shared paths of two cycles and returns the disjoint cycles
/// left over. Requires every shared path to carry at least one edge.
pub fn split_on_intersections(c1: &Cycle, c2: &Cycle) -> Result<Vec<Cycle>, CycleError> {
    let sp = shared_paths(c1, c2);
    if sp.full_overlap {
        return Err(CycleError::IdenticalCycles);
    }
    if sp.edge_path_count() == 0 {
        return Err(CycleError::NoEdgeIntersection);
    }
    if sp.paths.iter().any(|p| p.len() == 1) {
        return Err(CycleError::StrayNodeIntersection);
    }
    let e1 = c1.edge_set();
    let e2 = c2.edge_set();
    let mut shared: BTreeSet<(u8, u8)> = BTreeSet::new();
    for e in &e1 {
        if e2.binary_search(e).is_ok() {
            shared.insert(*e);
        }
    }
    let mut remaining: BTreeSet<(u8, u8)> = BTreeSet::new();
    for e in e1.iter().chain(e2.iter()) {
        if !shared.contains(e) {
            remaining.insert(*e);
        }
    }
    // every node here has degree exactly 2: walk out the disjoint cycles
    let mut nbr: std::collections::BTreeMap<u8, Vec<u8>> = std::collections::BTreeMap::new();
    for &(a, b) in &remaining {
        nbr.entry(a).or_default().push(b);
        nbr.entry(b).or_default().push(a);
    }
    for ns in nbr.values() {
        debug_assert_eq!(ns.len(), 2);
    }
    let mut cycles = Vec::new();
    let mut used: BTreeSet<u8> = BTreeSet::new();
    let starts: Vec<u8> = nbr.keys().copied().collect();
    for start in starts {
        if used.contains(&start) {
            continue;
        }
        let mut walk = vec![start];
        used.insert(start);
        let mut cur = start;
        loop {
            let next = nbr[&cur].iter().copied().find(|n| !used.contains(n));
            match next {
                Some(n) => {
                    used.insert(n);
                    walk.push(n);
                    cur = n;
                }
                None => break,
            }
        }
        let walk_usize: Vec<usize> = walk.iter().map(|&v| v as usize).collect();
        cycles.push(Cycle::from_closed_walk(&walk_usize));
    }
    cycles.sort_unstable_by(|a, b| (a.len(), &a.nodes).cmp(&(b.len(), &b.nodes)));
    Ok(cycles)
}

/// The single cycle obtained from two cycles sharing exactly one path of
/// length ≥ 1 by removing that path. Its length is n1 + n2 − 2l.
pub fn combined_cycle(c1: &Cycle, c2: &Cycle) -> Result<Cycle, CycleError> {
    let sp = shared_paths(c1, c2);
    if sp.full_overlap {
        return Err(CycleError::IdenticalCycles);
    }
    if sp.paths.len() != 1 {
        return Err(CycleError::MultipleIntersections);
    }
    if sp.paths[0].len() < 2 {
        return Err(CycleError::NoEdgeIntersection);
    }
    let mut cycles = split_on_intersections(c1, c2)?;
    debug_assert_eq!(cycles.len(), 1);
    Ok(cycles.remove(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle_graph_cycle(n: usize) -> (Graph, Cycle) {
        let g = Graph::cycle(n);
        let nodes: Vec<usize> = (0..n).collect();
        let c = Cycle::new(&g, &nodes).unwrap();
        (g, c)
    }

    /// Brute-force simple-cycle count: over node subsets, count Hamiltonian
    /// cycles of the induced subgraph by fixing the smallest node and
    /// permuting the rest, halving for reflection.
    fn brute_force_cycle_count(g: &Graph) -> usize {
        let p = g.node_count();
        let mut count = 0;
        for mask in 0u32..(1 << p) {
            if mask.count_ones() < 3 {
                continue;
            }
            let nodes: Vec<usize> = (0..p).filter(|&v| mask & (1 << v) != 0).collect();
            let rest: Vec<usize> = nodes[1..].to_vec();
            let mut perm = rest.clone();
            let mut found = 0usize;
            permute(&mut perm, 0, &mut |order: &[usize]| {
                let mut ok = g.has_edge(nodes[0], order[0])
                    && g.has_edge(*order.last().unwrap(), nodes[0]);
                if ok {
                    for w in order.windows(2) {
                        if !g.has_edge(w[0], w[1]) {
                            ok = false;
                            break;
                        }
                    }
                }
                if ok {
                    found += 1;
                }
            });
            count += found / 2;
        }
        count
    }

    fn permute(items: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == items.len() {
            f(items);
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            permute(items, k + 1, f);
            items.swap(k, i);
        }
    }

    #[test]
    fn single_cycle_graph() {
        let g = Graph::cycle(7);
        let (cs, truncated) = all_cycles(&g, DEFAULT_CYCLE_CAP);
        assert!(!truncated);
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].len(), 7);
        assert_eq!(cs[0].type_mod4(), 3);
    }

    #[test]
    fn k4_and_k5_counts() {
        let (cs, _) = all_cycles(&Graph::complete(4), DEFAULT_CYCLE_CAP);
        assert_eq!(cs.len(), 7);
        let (cs, _) = all_cycles(&Graph::complete(5), DEFAULT_CYCLE_CAP);
        assert_eq!(cs.len(), 37);
        let by_len = |n: usize| cs.iter().filter(|c| c.len() == n).count();
        assert_eq!((by_len(3), by_len(4), by_len(5)), (10, 15, 12));
    }

    #[test]
    fn counts_match_brute_force_up_to_5() {
        for p in 1..=5usize {
            let pairs: Vec<(usize, usize)> =
                (0..p).flat_map(|u| ((u + 1)..p).map(move |v| (u, v))).collect();
            for mask in 0..(1u32 << pairs.len()) {
                let edges: Vec<(usize, usize)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::new(p, &edges).unwrap();
                let (cs, _) = all_cycles(&g, DEFAULT_CYCLE_CAP);
                assert_eq!(cs.len(), brute_force_cycle_count(&g), "graph {}", g.to_graph6());
            }
        }
    }

    #[test]
    fn truncation_flag() {
        let (cs, truncated) = all_cycles(&Graph::complete(5), 10);
        assert!(truncated);
        assert_eq!(cs.len(), 10);
    }

    #[test]
    fn k5_spectrum_and_tag() {
        let s = spectrum(&Graph::complete(5), DEFAULT_CYCLE_CAP);
        assert_eq!(s.lengths, BTreeSet::from([3, 4, 5]));
        assert_eq!(s.types_present(), vec![0, 1, 3]);
        assert_eq!(epsilon_tag(&s).unwrap(), EpsilonTag::Triple(0, 1, 3));
    }

    #[test]
    fn c5_and_c6_tags() {
        let s = spectrum(&Graph::cycle(5), DEFAULT_CYCLE_CAP);
        assert_eq!(s.lengths, BTreeSet::from([5]));
        assert_eq!(epsilon_tag(&s).unwrap(), EpsilonTag::Single(1));
        let s = spectrum(&Graph::cycle(6), DEFAULT_CYCLE_CAP);
        assert_eq!(epsilon_tag(&s).unwrap(), EpsilonTag::Single(2));
    }

    #[test]
    fn truncated_tag_is_error() {
        let s = spectrum(&Graph::complete(5), 5);
        assert_eq!(epsilon_tag(&s).unwrap_err(), CycleError::TruncatedSpectrum);
    }

    #[test]
    fn chord_split_examples() {
        let (_, c5) = cycle_graph_cycle(5);
        let s = chord_split(&c5, 0, 2).unwrap();
        assert_eq!(s.arc_lengths, (2, 3));
        assert_eq!(s.cycle_lengths, (3, 4));
        assert_eq!(s.cycle_types, (3, 0));
        assert!(s.odd_chord);

        let (_, c6) = cycle_graph_cycle(6);
        let s = chord_split(&c6, 0, 3).unwrap();
        assert_eq!(s.arc_lengths, (3, 3));
        assert_eq!(s.cycle_lengths, (4, 4));
        assert!(!s.odd_chord);

        let s = chord_split(&c6, 0, 2).unwrap();
        assert_eq!(s.arc_lengths, (2, 4));
        assert_eq!(s.cycle_lengths, (3, 5));
        assert!(s.odd_chord);

        assert_eq!(chord_split(&c6, 0, 1).unwrap_err(), CycleError::ChordEndpointsAdjacent);
        assert_eq!(chord_split(&c6, 2, 2).unwrap_err(), CycleError::ChordEndpointsCoincide);
    }

    #[test]
    fn shared_paths_cases() {
        // two triangles sharing one edge
        let g = Graph::new(4, &[(0, 1), (1, 2), (0, 2), (1, 3), (2, 3)]).unwrap();
        let t1 = Cycle::new(&g, &[0, 1, 2]).unwrap();
        let t2 = Cycle::new(&g, &[1, 2, 3]).unwrap();
        let sp = shared_paths(&t1, &t2);
        assert!(!sp.full_overlap);
        assert_eq!(sp.paths, vec![vec![1, 2]]);

        let sp = shared_paths(&t1, &t1);
        assert!(sp.full_overlap);
        assert_eq!(sp.paths.len(), 1);

        // two 6-cycles sharing two disjoint edges, on 8 nodes
        let g = Graph::new(
            8,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 6), (6, 3), (4, 7), (7, 0)],
        )
        .unwrap();
        let a = Cycle::new(&g, &[0, 1, 2, 3, 4, 5]).unwrap();
        let b = Cycle::new(&g, &[0, 1, 6, 3, 4, 7]).unwrap();
        let sp = shared_paths(&a, &b);
        assert_eq!(sp.paths, vec![vec![0, 1], vec![3, 4]]);
        assert_eq!(sp.edge_path_count(), 2);

        // the resulting split: alternating arcs give two 4-cycles here
        let parts = split_on_intersections(&a, &b).unwrap();
        let lens: Vec<usize> = parts.iter().map(|c| c.len()).collect();
        assert_eq!(lens.iter().sum::<usize>(), 6 + 6 - 2 * 2);
        assert_eq!(lens, vec![4, 4]);
    }

    #[test]
    fn combined_cycle_triangle_pair() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (0, 2), (1, 3), (2, 3)]).unwrap();
        let t1 = Cycle::new(&g, &[0, 1, 2]).unwrap();
        let t2 = Cycle::new(&g, &[1, 2, 3]).unwrap();
        let c = combined_cycle(&t1, &t2).unwrap();
        assert_eq!(c.len(), 4);
        assert_eq!(c.type_mod4(), 0);
    }

    #[test]
    fn combined_cycle_c4_c5_sharing_len2_path() {
        // C4 = 0-1-2-3, C5 = 0-1-2-4-5 share path 0-1-2
        let g = Graph::new(
            6,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (4, 5), (5, 0)],
        )
        .unwrap();
        let c4 = Cycle::new(&g, &[0, 1, 2, 3]).unwrap();
        let c5 = Cycle::new(&g, &[0, 1, 2, 4, 5]).unwrap();
        let c = combined_cycle(&c4, &c5).unwrap();
        assert_eq!(c.len(), 4 + 5 - 4);
    }

    #[test]
    fn combined_cycle_errors() {
        let g = Graph::new(
            8,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 6), (6, 3), (4, 7), (7, 0)],
        )
        .unwrap();
        let a = Cycle::new(&g, &[0, 1, 2, 3, 4, 5]).unwrap();
        let b = Cycle::new(&g, &[0, 1, 6, 3, 4, 7]).unwrap();
        assert_eq!(combined_cycle(&a, &b).unwrap_err(), CycleError::MultipleIntersections);
        assert_eq!(combined_cycle(&a, &a).unwrap_err(), CycleError::IdenticalCycles);
        // node-only intersection
        let g2 = Graph::new(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let x = Cycle::new(&g2, &[0, 1, 2]).unwrap();
        let y = Cycle::new(&g2, &[2, 3, 4]).unwrap();
        assert_eq!(combined_cycle(&x, &y).unwrap_err(), CycleError::NoEdgeIntersection);
    }

    #[test]
    fn cycle_canonical_form() {
        let g = Graph::cycle(5);
        let a = Cycle::new(&g, &[2, 3, 4, 0, 1]).unwrap();
        let b = Cycle::new(&g, &[0, 4, 3, 2, 1]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.nodes(), &[0, 1, 2, 3, 4]);
    }
}
