//! Simple undirected graphs on up to 32 nodes, stored as one adjacency bitset
//! row per node so neighborhood operations are single word ops.

use thiserror::Error;

/// Hard cap on the node count; adjacency rows fit in a `u32`.
pub const MAX_NODES: usize = 32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("node {node} out of range for order {p} (max {MAX_NODES})")]
    OutOfRange { node: usize, p: usize },
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("loop edge at node {0}")]
    LoopEdge(usize),
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),
}

/// Immutable simple graph. Nodes are `0..p`; `adj[v]` is the neighbor bitset
/// of `v`. The adjacency relation is kept symmetric and irreflexive.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    p: u8,
    adj: [u32; MAX_NODES],
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(p={}, q={}, {})", self.p, self.edge_count(), self.to_graph6())
    }
}

impl Graph {
    /// Builds a graph from an explicit edge list.
    pub fn new(p: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if p == 0 || p > MAX_NODES {
            return Err(GraphError::OutOfRange { node: 0, p });
        }
        let mut g = Graph { p: p as u8, adj: [0; MAX_NODES] };
        for &(u, v) in edges {
            if u >= p {
                return Err(GraphError::OutOfRange { node: u, p });
            }
            if v >= p {
                return Err(GraphError::OutOfRange { node: v, p });
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            if g.has_edge(u, v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// Empty graph on `p` nodes. Panics if `p` is out of range.
    pub fn empty(p: usize) -> Graph {
        assert!((1..=MAX_NODES).contains(&p));
        Graph { p: p as u8, adj: [0; MAX_NODES] }
    }

    /// The cycle graph C_n.
    pub fn cycle(n: usize) -> Graph {
        assert!((3..=MAX_NODES).contains(&n));
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    /// The complete graph K_n.
    pub fn complete(n: usize) -> Graph {
        assert!((1..=MAX_NODES).contains(&n));
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges).unwrap()
    }

    pub fn node_count(&self) -> usize {
        self.p as usize
    }

    pub fn edge_count(&self) -> usize {
        let mut s = 0u32;
        for v in 0..self.node_count() {
            s += self.adj[v].count_ones();
        }
        (s / 2) as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & (1 << v) != 0
    }

    /// Neighbor bitset of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u32 {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Edges as `(u, v)` pairs with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.node_count() {
            // neighbors above u
            let mut m = if u + 1 >= MAX_NODES { 0 } else { self.adj[u] >> (u + 1) << (u + 1) };
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                out.push((u, v));
                m &= m - 1;
            }
        }
        out
    }

    /// Graph with node `v` added as neighbor of every bit in `mask`.
    /// Caller keeps `mask` within `0..p`.
    pub(crate) fn with_extra_node(&self, mask: u32) -> Graph {
        let p = self.node_count();
        debug_assert!(p < MAX_NODES);
        debug_assert_eq!(mask >> p, 0);
        let mut g = *self;
        g.p += 1;
        g.adj[p] = mask;
        let mut m = mask;
        while m != 0 {
            let u = m.trailing_zeros() as usize;
            g.adj[u] |= 1 << p;
            m &= m - 1;
        }
        g
    }

    /// Applies a relabeling: node `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let p = self.node_count();
        debug_assert_eq!(perm.len(), p);
        let mut g = Graph { p: self.p, adj: [0; MAX_NODES] };
        for u in 0..p {
            let mut m = self.adj[u];
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                if u < v {
                    g.adj[perm[u]] |= 1 << perm[v];
                    g.adj[perm[v]] |= 1 << perm[u];
                }
            }
        }
        g
    }

    /// Bitset of nodes reachable from `start`.
    pub fn reachable_from(&self, start: usize) -> u32 {
        let mut seen = 1u32 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u32;
            let mut m = frontier;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        let p = self.node_count();
        let all = if p == 32 { u32::MAX } else { (1u32 << p) - 1 };
        self.reachable_from(0) == all
    }

    /// Connected with every degree even and at least 2. Isolated nodes and
    /// pendant nodes disqualify, so the graph carries a closed Euler circuit.
    pub fn is_euler(&self) -> bool {
        let p = self.node_count();
        if p < 3 {
            return false;
        }
        for v in 0..p {
            let d = self.degree(v);
            if d == 0 || !d.is_multiple_of(2) {
                return false;
            }
        }
        self.is_connected()
    }

    /// Bitset of odd-degree nodes.
    pub fn odd_degree_mask(&self) -> u32 {
        let mut m = 0u32;
        for v in 0..self.node_count() {
            if self.degree(v) % 2 == 1 {
                m |= 1 << v;
            }
        }
        m
    }

    pub fn min_degree(&self) -> usize {
        (0..self.node_count()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// True when all degrees are equal.
    pub fn is_regular(&self) -> bool {
        let d = self.degree(0);
        (1..self.node_count()).all(|v| self.degree(v) == d)
    }

    // ---- graph6 ----

    /// Emits the graph6 form: `chr(n+63)` then the upper-triangle bits
    /// x(0,1), x(0,2), x(1,2), x(0,3), ... packed into big-endian 6-bit
    /// groups, each offset by 63, zero padded.
    pub fn to_graph6(&self) -> String {
        let n = self.node_count();
        let mut bytes = vec![63 + n as u8];
        let mut acc = 0u8;
        let mut nbits = 0;
        for j in 1..n {
            for i in 0..j {
                acc = (acc << 1) | u8::from(self.has_edge(i, j));
                nbits += 1;
                if nbits == 6 {
                    bytes.push(63 + acc);
                    acc = 0;
                    nbits = 0;
                }
            }
        }
        if nbits > 0 {
            bytes.push(63 + (acc << (6 - nbits)));
        }
        String::from_utf8(bytes).unwrap()
    }

    /// Parses a graph6 string (orders 1..=32, single-byte header).
    pub fn from_graph6(s: &str) -> Result<Graph, GraphError> {
        let bytes = s.trim_end_matches(['\n', '\r']).as_bytes();
        if bytes.is_empty() {
            return Err(GraphError::MalformedGraph6("empty input".into()));
        }
        for &b in bytes {
            if !(63..=126).contains(&b) {
                return Err(GraphError::MalformedGraph6(format!("byte {b} outside 63..=126")));
            }
        }
        let n = (bytes[0] - 63) as usize;
        if n == 0 || n > MAX_NODES {
            return Err(GraphError::MalformedGraph6(format!("order {n} unsupported (1..=32)")));
        }
        let nbits = n * (n - 1) / 2;
        let expect = 1 + nbits.div_ceil(6);
        if bytes.len() != expect {
            return Err(GraphError::MalformedGraph6(format!(
                "length {} but order {n} needs {expect}",
                bytes.len()
            )));
        }
        let mut g = Graph { p: n as u8, adj: [0; MAX_NODES] };
        let mut idx = 0usize;
        for j in 1..n {
            for i in 0..j {
                let byte = bytes[1 + idx / 6] - 63;
                let bit = (byte >> (5 - idx % 6)) & 1;
                if bit == 1 {
                    g.adj[i] |= 1 << j;
                    g.adj[j] |= 1 << i;
                }
                idx += 1;
            }
        }
        // reject nonzero padding so emit(parse(s)) == s
        if !nbits.is_multiple_of(6) {
            let last = bytes[bytes.len() - 1] - 63;
            let pad = 6 - nbits % 6;
            if last & ((1 << pad) - 1) != 0 {
                return Err(GraphError::MalformedGraph6("nonzero padding bits".into()));
            }
        }
        Ok(g)
    }

    // ---- edge-list text format ----

    /// Emits the plain text form: first line `p q`, then one `u v` line per
    /// edge with `u < v`, sorted, newline terminated.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.node_count(), self.edge_count());
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    pub fn from_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| GraphError::MalformedEdgeList("missing header line".into()))?;
        let mut it = header.split_whitespace();
        let p: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| GraphError::MalformedEdgeList("bad node count".into()))?;
        let q: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| GraphError::MalformedEdgeList("bad edge count".into()))?;
        if it.next().is_some() {
            return Err(GraphError::MalformedEdgeList("trailing tokens in header".into()));
        }
        let mut edges = Vec::with_capacity(q);
        for line in lines {
            let mut it = line.split_whitespace();
            let u: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| GraphError::MalformedEdgeList(format!("bad edge line {line:?}")))?;
            let v: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| GraphError::MalformedEdgeList(format!("bad edge line {line:?}")))?;
            if it.next().is_some() {
                return Err(GraphError::MalformedEdgeList(format!("trailing tokens in {line:?}")));
            }
            if u >= v {
                return Err(GraphError::MalformedEdgeList(format!("edge {u} {v} not in u < v form")));
            }
            edges.push((u, v));
        }
        if edges.len() != q {
            return Err(GraphError::MalformedEdgeList(format!(
                "header claims {q} edges, found {}",
                edges.len()
            )));
        }
        Graph::new(p, &edges)
    }
}

/// Sniffs the input format by its first byte: decimal digit means edge list,
/// anything in the graph6 alphabet means graph6.
pub fn parse_graph_auto(text: &str) -> Result<Graph, GraphError> {
    match text.trim_start().bytes().next() {
        Some(b'0'..=b'9') => Graph::from_edge_list(text),
        _ => Graph::from_graph6(text),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_triangle() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert!(g.is_euler());
    }

    #[test]
    fn build_rejections() {
        assert_eq!(
            Graph::new(3, &[(0, 1), (0, 1)]).unwrap_err(),
            GraphError::DuplicateEdge(0, 1)
        );
        assert_eq!(Graph::new(3, &[(1, 1)]).unwrap_err(), GraphError::LoopEdge(1));
        assert!(matches!(
            Graph::new(3, &[(0, 3)]).unwrap_err(),
            GraphError::OutOfRange { node: 3, p: 3 }
        ));
        assert!(matches!(Graph::new(33, &[]).unwrap_err(), GraphError::OutOfRange { .. }));
    }

    #[test]
    fn k5_has_ten_edges() {
        let g = Graph::complete(5);
        assert_eq!(g.edge_count(), 10);
        assert!(g.is_euler());
    }

    #[test]
    fn euler_predicate() {
        assert!(Graph::cycle(6).is_euler());
        // C6 plus one chord: two odd-degree nodes
        let mut edges: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.push((0, 2));
        assert!(!Graph::new(6, &edges).unwrap().is_euler());
        // disconnected even graph
        let two_triangles =
            Graph::new(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!two_triangles.is_euler());
        // isolated node
        let iso = Graph::new(4, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(!iso.is_euler());
    }

    #[test]
    fn graph6_known_values() {
        let tri = Graph::from_graph6("Bw").unwrap();
        assert_eq!(tri.node_count(), 3);
        assert_eq!(tri.edge_count(), 3);
        assert_eq!(Graph::complete(4).to_graph6(), "C~");
        assert_eq!(Graph::from_graph6("Bw").unwrap().to_graph6(), "Bw");
    }

    #[test]
    fn graph6_rejects_malformed() {
        assert!(Graph::from_graph6("").is_err());
        assert!(Graph::from_graph6("B").is_err()); // truncated
        assert!(Graph::from_graph6("B\x1f").is_err()); // char < 63
        // nonzero padding: triangle has 3 bits used, pad must be 000
        assert!(Graph::from_graph6("B{").is_err());
    }

    #[test]
    fn graph6_round_trip_exhaustive_small() {
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
                let s = g.to_graph6();
                let h = Graph::from_graph6(&s).unwrap();
                assert_eq!(g, h);
                assert_eq!(h.to_graph6(), s);
            }
        }
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        let text = g.to_edge_list();
        assert_eq!(text, "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
        assert_eq!(Graph::from_edge_list(&text).unwrap(), g);
        assert!(Graph::from_edge_list("3 1\n1 0\n").is_err()); // u >= v
        assert!(Graph::from_edge_list("3 2\n0 1\n").is_err()); // count mismatch
    }

    #[test]
    fn auto_sniff() {
        let g = Graph::cycle(5);
        assert_eq!(parse_graph_auto(&g.to_graph6()).unwrap(), g);
        assert_eq!(parse_graph_auto(&g.to_edge_list()).unwrap(), g);
    }
}
