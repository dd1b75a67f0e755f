//! Canonical codes for isomorphism classes.
//!
//! Canonicalization runs iterated neighborhood refinement, then backtracks over
//! orderings obtained by individualizing nodes from the first non-singleton
//! cell. Ties are broken by taking the lexicographically least packed adjacency
//! bit string, so the code of the canonical labeling is exactly its graph6
//! form. Automorphisms discovered when two leaves produce equal codes prune
//! sibling branches through a node orbit union-find.

use crate::graph::Graph;

/// Byte sequence identifying an isomorphism class: the graph6 string of the
/// canonical labeling. Two graphs have equal codes iff they are isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(pub Vec<u8>);

impl std::fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CanonicalCode({})", self.as_str())
    }
}

impl CanonicalCode {
    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).unwrap()
    }
}

/// The canonical code of `g`.
pub fn canonical_code(g: &Graph) -> CanonicalCode {
    CanonicalCode(canonical_form(g).to_graph6().into_bytes())
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_form(g: &Graph) -> Graph {
    let p = g.node_count();
    if p == 1 {
        return *g;
    }
    let mut search = Search {
        g,
        p,
        best: None,
        orbit: (0..p).collect(),
    };
    let initial = refine(g, vec![(0..p).collect()]);
    search.descend(initial);
    search.best.unwrap().graph
}

struct Best {
    code: Vec<u8>,
    graph: Graph,
    /// Labeling that produced `code`: node v got label perm[v].
    perm: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    p: usize,
    best: Option<Best>,
    /// Union-find over nodes, merged when an automorphism is discovered.
    orbit: Vec<usize>,
}

impl Search<'_> {
    fn find(&mut self, mut v: usize) -> usize {
        while self.orbit[v] != v {
            self.orbit[v] = self.orbit[self.orbit[v]];
            v = self.orbit[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.orbit[ra.max(rb)] = ra.min(rb);
        }
    }

    fn descend(&mut self, partition: Vec<Vec<usize>>) {
        if let Some(cell_idx) = partition.iter().position(|c| c.len() > 1) {
            let candidates = partition[cell_idx].clone();
            let mut tried_roots: Vec<usize> = Vec::new();
            for &v in &candidates {
                let root = self.find(v);
                if tried_roots.contains(&root) {
                    continue; // same orbit as an explored sibling
                }
                tried_roots.push(root);
                let mut next: Vec<Vec<usize>> = Vec::with_capacity(partition.len() + 1);
                for (i, cell) in partition.iter().enumerate() {
                    if i == cell_idx {
                        next.push(vec![v]);
                        next.push(cell.iter().copied().filter(|&u| u != v).collect());
                    } else {
                        next.push(cell.clone());
                    }
                }
                self.descend(refine(self.g, next));
            }
        } else {
            // discrete partition: cell at position k holds the node labeled k
            let mut perm = vec![0usize; self.p];
            for (new, cell) in partition.iter().enumerate() {
                perm[cell[0]] = new;
            }
            let relabeled = self.g.relabel(&perm);
            let code = relabeled.to_graph6().into_bytes();
            match &self.best {
                None => self.best = Some(Best { code, graph: relabeled, perm }),
                Some(best) => {
                    if code < best.code {
                        self.best = Some(Best { code, graph: relabeled, perm });
                    } else if code == best.code {
                        // best.perm⁻¹ ∘ perm is an automorphism of g
                        let inv = invert(&best.perm);
                        for v in 0..self.p {
                            self.union(v, inv[perm[v]]);
                        }
                    }
                }
            }
        }
    }
}

fn invert(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0usize; perm.len()];
    for (v, &w) in perm.iter().enumerate() {
        inv[w] = v;
    }
    inv
}

/// Equitable refinement: repeatedly split every cell by the vector of
/// neighbor counts into each current cell, ordering sub-cells by that key.
/// The result is isomorphism-invariant.
fn refine(g: &Graph, mut partition: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let masks: Vec<u32> = partition
            .iter()
            .map(|cell| cell.iter().fold(0u32, |m, &v| m | (1 << v)))
            .collect();
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(partition.len());
        let mut split = false;
        for cell in &partition {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let key: Vec<u32> =
                        masks.iter().map(|&m| (g.neighbors(v) & m).count_ones()).collect();
                    (key, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    if i - start != cell.len() {
                        split = true;
                    }
                    start = i;
                }
            }
        }
        partition = next;
        if !split {
            return partition;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabeled_triangles_equal() {
        let a = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let b = a.relabel(&[2, 0, 1]);
        assert_eq!(canonical_code(&a), canonical_code(&b));
    }

    #[test]
    fn c4_vs_path4_differ() {
        let c4 = Graph::cycle(4);
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_ne!(canonical_code(&c4), canonical_code(&p4));
    }

    #[test]
    fn k5_relabelings_equal() {
        let k5 = Graph::complete(5);
        let a = k5.relabel(&[3, 1, 4, 0, 2]);
        let b = k5.relabel(&[2, 4, 0, 3, 1]);
        assert_eq!(canonical_code(&a), canonical_code(&b));
        assert_eq!(canonical_code(&a), canonical_code(&k5));
    }

    #[test]
    fn canonical_form_is_idempotent() {
        let g = Graph::new(6, &[(0, 3), (3, 1), (1, 4), (4, 0), (2, 5), (2, 4)]).unwrap();
        let c = canonical_form(&g);
        assert_eq!(canonical_form(&c), c);
        assert_eq!(canonical_code(&g).as_str(), c.to_graph6());
    }

    /// Exhaustive oracle at small orders: canonical codes agree with the
    /// relabeling orbits of all labeled graphs.
    #[test]
    fn codes_agree_with_relabeling_orbits_up_to_5() {
        for p in 2..=5usize {
            orbits_oracle(p);
        }
    }

    fn pair_index(p: usize) -> Vec<(usize, usize)> {
        (0..p).flat_map(|u| ((u + 1)..p).map(move |v| (u, v))).collect()
    }

    fn graph_of_mask(p: usize, pairs: &[(usize, usize)], mask: u32) -> Graph {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &e)| e)
            .collect();
        Graph::new(p, &edges).unwrap()
    }

    fn mask_of_graph(g: &Graph, pairs: &[(usize, usize)]) -> u32 {
        pairs
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| g.has_edge(u, v))
            .fold(0, |m, (i, _)| m | (1 << i))
    }

    pub(crate) fn orbits_oracle(p: usize) {
        let pairs = pair_index(p);
        let n_masks = 1u32 << pairs.len();
        // union-find over labeled graphs under adjacent transpositions
        let mut parent: Vec<u32> = (0..n_masks).collect();
        fn find(parent: &mut [u32], mut x: u32) -> u32 {
            while parent[x as usize] != x {
                parent[x as usize] = parent[parent[x as usize] as usize];
                x = parent[x as usize];
            }
            x
        }
        for mask in 0..n_masks {
            let g = graph_of_mask(p, &pairs, mask);
            for t in 0..(p - 1) {
                let mut perm: Vec<usize> = (0..p).collect();
                perm.swap(t, t + 1);
                let h = g.relabel(&perm);
                let hm = mask_of_graph(&h, &pairs);
                let (a, b) = (find(&mut parent, mask), find(&mut parent, hm));
                if a != b {
                    parent[a.max(b) as usize] = a.min(b);
                }
            }
        }
        // same orbit <=> same canonical code
        let mut orbit_code: std::collections::HashMap<u32, CanonicalCode> =
            std::collections::HashMap::new();
        let mut codes_seen: std::collections::HashMap<CanonicalCode, u32> =
            std::collections::HashMap::new();
        for mask in 0..n_masks {
            let g = graph_of_mask(p, &pairs, mask);
            let code = canonical_code(&g);
            let root = find(&mut parent, mask);
            if let Some(c) = orbit_code.get(&root) {
                assert_eq!(*c, code, "orbit split by codes at p={p}");
            } else {
                orbit_code.insert(root, code.clone());
            }
            if let Some(&r) = codes_seen.get(&code) {
                assert_eq!(r, root, "distinct orbits share a code at p={p}");
            } else {
                codes_seen.insert(code, root);
            }
        }
    }
}
