//! The combined-cycle parity calculus on cycle types mod 4.
//!
//! Two cycles of types `t1`, `t2` that intersect in exactly one path of
//! length `l > 0` combine, after removing the path, into one cycle of length
//! `n1 + n2 − 2l`, so the combined type is `(t1 + t2 − 2l) mod 4` and only
//! the parity of `l` matters. This module mechanizes that rule: the pair
//! tables per three-type family, the inverse "division" rule, the feasibility
//! tables for the five three-cycle intersection shapes, and a bounded-depth
//! symbolic explorer for the stop/continue case analysis. The published rows
//! of all those tables are frozen here as data for auditing.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Mod4Error {
    #[error("cycle type not in the family")]
    TypeNotInFamily,
    #[error("exploration depth {0} exceeds the supported maximum 3")]
    DepthTooLarge(usize),
    #[error("configuration is not feasible for its family")]
    InfeasibleConfig,
    #[error("bad configuration: {0}")]
    BadConfig(String),
}

/// A cycle type: the residue of a cycle length mod 4.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mod4(u8);

impl Mod4 {
    pub const fn new(v: u8) -> Mod4 {
        Mod4(v % 4)
    }

    pub const fn value(self) -> u8 {
        self.0
    }
}

impl std::fmt::Debug for Mod4 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "T{}", self.0)
    }
}

impl std::fmt::Display for Mod4 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Parity of an intersection-path length; `e` even, `d` odd.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub const fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub const fn from_bit(b: u8) -> Parity {
        if b.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub const fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }
}

impl std::fmt::Display for Parity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", if *self == Parity::Even { "e" } else { "d" })
    }
}

/// Type of the combined cycle of two cycles meeting in one path whose length
/// has parity `p`: `(t1 + t2 − 2p) mod 4`.
pub fn cc_type(t1: Mod4, t2: Mod4, p: Parity) -> Mod4 {
    Mod4::new((t1.0 + t2.0 + 4 - 2 * p.bit()) % 4)
}

/// One of the four three-type families of Euler graphs.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Family {
    F012,
    F013,
    F023,
    F123,
}

pub const ALL_FAMILIES: [Family; 4] = [Family::F012, Family::F013, Family::F023, Family::F123];

impl Family {
    pub fn types(self) -> [Mod4; 3] {
        let v = match self {
            Family::F012 => [0, 1, 2],
            Family::F013 => [0, 1, 3],
            Family::F023 => [0, 2, 3],
            Family::F123 => [1, 2, 3],
        };
        [Mod4(v[0]), Mod4(v[1]), Mod4(v[2])]
    }

    pub fn contains(self, t: Mod4) -> bool {
        self.types().contains(&t)
    }

    /// The residue absent from this family.
    pub fn missing_type(self) -> Mod4 {
        Mod4((0..4).find(|&v| !self.contains(Mod4(v))).unwrap())
    }

    pub fn from_types(mut ts: [u8; 3]) -> Option<Family> {
        ts.sort_unstable();
        match ts {
            [0, 1, 2] => Some(Family::F012),
            [0, 1, 3] => Some(Family::F013),
            [0, 2, 3] => Some(Family::F023),
            [1, 2, 3] => Some(Family::F123),
            _ => None,
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let t = self.types();
        write!(f, "{}{}{}", t[0], t[1], t[2])
    }
}

impl std::str::FromStr for Family {
    type Err = Mod4Error;

    fn from_str(s: &str) -> Result<Family, Mod4Error> {
        match s {
            "012" => Ok(Family::F012),
            "013" => Ok(Family::F013),
            "023" => Ok(Family::F023),
            "123" => Ok(Family::F123),
            _ => Err(Mod4Error::BadConfig(format!("unknown family {s:?} (012|013|023|123)"))),
        }
    }
}

/// One row of a pair table: both parity outcomes for an unordered type pair,
/// each flagged when it escapes the family (produces the fourth type).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CcEntry {
    pub pair: (Mod4, Mod4),
    pub even: Mod4,
    pub odd: Mod4,
    pub even_escapes: bool,
    pub odd_escapes: bool,
}

/// The six-row combined-cycle table of a family, pairs in ascending order.
pub fn cc_table(f: Family) -> Vec<CcEntry> {
    let ts = f.types();
    let mut rows = Vec::with_capacity(6);
    for i in 0..3 {
        for j in i..3 {
            let (a, b) = (ts[i], ts[j]);
            let even = cc_type(a, b, Parity::Even);
            let odd = cc_type(a, b, Parity::Odd);
            rows.push(CcEntry {
                pair: (a, b),
                even,
                odd,
                even_escapes: !f.contains(even),
                odd_escapes: !f.contains(odd),
            });
        }
    }
    rows
}

/// All ways a path of some parity can divide a cycle of type `t` into two
/// cycles with types in the family: ordered pairs `(t1, t2)` with
/// `t1 + t2 − 2p ≡ t (mod 4)`. The parity is forced by the pair.
pub fn divide_possibilities(
    t: Mod4,
    f: Family,
) -> Result<Vec<(Mod4, Mod4, Parity)>, Mod4Error> {
    if !f.contains(t) {
        return Err(Mod4Error::TypeNotInFamily);
    }
    let ts = f.types();
    let mut out = Vec::new();
    for &t1 in &ts {
        for &t2 in &ts {
            if (t1.0 + t2.0) % 2 == t.0 % 2 {
                let p = Parity::from_bit((t1.0 + t2.0 + 4 - t.0) / 2 % 2);
                debug_assert_eq!(cc_type(t1, t2, p), t);
                out.push((t1, t2, p));
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// The five analyzed intersection shapes of three cycles. Shapes C and E
/// share one formula set (they differ only in drawing-level geometry), and
/// the drawn shape D coincides with C.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Shape {
    A,
    B,
    C,
    E,
    F,
}

pub const ALL_SHAPES: [Shape; 5] = [Shape::A, Shape::B, Shape::C, Shape::E, Shape::F];

impl Shape {
    /// Number of intersection-parity variables.
    pub fn parity_count(self) -> usize {
        match self {
            Shape::A => 1,
            Shape::B | Shape::C | Shape::E => 2,
            Shape::F => 3,
        }
    }

    /// The combined types determined by the shape's intersection pattern.
    pub fn derived(self, t: [Mod4; 3], par: &[Parity]) -> Vec<Mod4> {
        let [i, j, k] = t;
        let m4 = |sum: u8, twice: u8| Mod4::new((sum + 16 - 2 * twice) % 4);
        match self {
            Shape::A => {
                let l = par[0];
                vec![cc_type(i, j, l), cc_type(i, k, l), cc_type(j, k, l)]
            }
            Shape::B => {
                let (l, m) = (par[0], par[1]);
                vec![cc_type(i, j, l), cc_type(i, k, m), cc_type(j, k, m)]
            }
            Shape::C | Shape::E => {
                let (l, m) = (par[0], par[1]);
                vec![
                    cc_type(i, j, l),
                    cc_type(j, k, m),
                    m4(i.0 + j.0 + k.0, l.bit() + m.bit()),
                ]
            }
            Shape::F => {
                let (l, m, n) = (par[0], par[1], par[2]);
                vec![
                    cc_type(i, j, l),
                    cc_type(j, k, m),
                    cc_type(i, k, n),
                    m4(i.0 + j.0 + k.0, l.bit() + m.bit() + n.bit()),
                ]
            }
        }
    }

    /// Canonical representative of a row under the shape's symmetry:
    /// A is fully symmetric in the types, B swaps the two cycles sharing the
    /// long path, C/E reverse the chain, F is symmetric under cyclic rotation.
    fn canonical_row(self, t: [Mod4; 3], par: &[Parity]) -> ([Mod4; 3], Vec<Parity>) {
        match self {
            Shape::A => {
                let mut s = t;
                s.sort_unstable();
                (s, par.to_vec())
            }
            Shape::B => {
                if t[0] <= t[1] {
                    (t, par.to_vec())
                } else {
                    ([t[1], t[0], t[2]], par.to_vec())
                }
            }
            Shape::C | Shape::E => {
                let rev = ([t[2], t[1], t[0]], vec![par[1], par[0]]);
                let fwd = (t, par.to_vec());
                if (rev.0, &rev.1) < (fwd.0, &fwd.1) {
                    rev
                } else {
                    fwd
                }
            }
            Shape::F => {
                let mut best = (t, par.to_vec());
                for r in 1..3 {
                    let rt = [t[r % 3], t[(r + 1) % 3], t[(r + 2) % 3]];
                    let rp = vec![par[r % 3], par[(r + 1) % 3], par[(r + 2) % 3]];
                    if (rt, &rp) < (best.0, &best.1) {
                        best = (rt, rp);
                    }
                }
                best
            }
        }
    }
}

impl std::str::FromStr for Shape {
    type Err = Mod4Error;

    fn from_str(s: &str) -> Result<Shape, Mod4Error> {
        match s.to_ascii_lowercase().as_str() {
            "a" => Ok(Shape::A),
            "b" => Ok(Shape::B),
            "c" | "d" => Ok(Shape::C),
            "e" => Ok(Shape::E),
            "f" => Ok(Shape::F),
            _ => Err(Mod4Error::BadConfig(format!("unknown shape {s:?} (a|b|c|e|f)"))),
        }
    }
}

impl std::fmt::Display for Shape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Shape::A => "a",
            Shape::B => "b",
            Shape::C => "c",
            Shape::E => "e",
            Shape::F => "f",
        };
        write!(f, "{s}")
    }
}

/// A symbolic three-cycle configuration: the shape, the ordered types
/// (each family type used once), and the intersection-path parities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseConfig {
    pub shape: Shape,
    pub types: [Mod4; 3],
    pub parities: Vec<Parity>,
}

impl CaseConfig {
    pub fn new(shape: Shape, types: [Mod4; 3], parities: Vec<Parity>) -> Result<CaseConfig, Mod4Error> {
        if parities.len() != shape.parity_count() {
            return Err(Mod4Error::BadConfig(format!(
                "shape {shape} takes {} parities, got {}",
                shape.parity_count(),
                parities.len()
            )));
        }
        if Family::from_types([types[0].0, types[1].0, types[2].0]).is_none() {
            return Err(Mod4Error::BadConfig("types must be three distinct residues".into()));
        }
        Ok(CaseConfig { shape, types, parities })
    }

    pub fn family(&self) -> Family {
        Family::from_types([self.types[0].0, self.types[1].0, self.types[2].0]).unwrap()
    }

    pub fn derived(&self) -> Vec<Mod4> {
        self.shape.derived(self.types, &self.parities)
    }

    pub fn is_feasible(&self) -> bool {
        let f = self.family();
        self.derived().iter().all(|&t| f.contains(t))
    }
}

/// A feasible-configuration table row: the configuration plus its derived
/// combined types in the shape's column order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigRow {
    pub config: CaseConfig,
    pub derived: Vec<Mod4>,
}

/// Enumerates the feasible configurations of a shape over a family: type
/// permutations and parity assignments whose derived combined types all stay
/// in the family, deduplicated by the shape's symmetry, sorted.
pub fn feasible_configs(shape: Shape, f: Family) -> Vec<ConfigRow> {
    let ts = f.types();
    let perms: [[usize; 3]; 6] =
        [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let np = shape.parity_count();
    let mut seen: BTreeSet<([u8; 3], Vec<u8>)> = BTreeSet::new();
    let mut rows = Vec::new();
    for perm in perms {
        let t = [ts[perm[0]], ts[perm[1]], ts[perm[2]]];
        for bits in 0..(1u8 << np) {
            let par: Vec<Parity> = (0..np).map(|i| Parity::from_bit((bits >> i) & 1)).collect();
            let derived = shape.derived(t, &par);
            if !derived.iter().all(|&d| f.contains(d)) {
                continue;
            }
            let (ct, cp) = shape.canonical_row(t, &par);
            let key = ([ct[0].0, ct[1].0, ct[2].0], cp.iter().map(|p| p.bit()).collect());
            if seen.insert(key) {
                let derived = shape.derived(ct, &cp);
                rows.push(ConfigRow {
                    config: CaseConfig { shape, types: ct, parities: cp },
                    derived,
                });
            }
        }
    }
    rows.sort_by_key(|r| {
        (
            [r.config.types[0].0, r.config.types[1].0, r.config.types[2].0],
            r.config.parities.iter().map(|p| p.bit()).collect::<Vec<_>>(),
        )
    });
    rows
}

// ---------------------------------------------------------------------------
// Case-tree exploration
// ---------------------------------------------------------------------------

/// Why an exploration branch stops: a combined type computed from determined
/// parities fell outside the family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Escape {
    pub a: usize,
    pub b: usize,
    pub a_type: Mod4,
    pub b_type: Mod4,
    pub parity: Parity,
    pub cc: Mod4,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Continue,
    Stop(Vec<Escape>),
}

impl Verdict {
    pub fn is_stop(&self) -> bool {
        matches!(self, Verdict::Stop(_))
    }
}

/// One node of the expansion tree. The root carries no move; every other
/// node records which cycle was divided and into what.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeNode {
    pub id: usize,
    pub parent: Option<usize>,
    pub depth: usize,
    /// (cycle id, its type) of the divided cycle.
    pub divided: Option<(usize, Mod4)>,
    /// (t1, t2): types of the piece holding the near end of the old common
    /// path and of the piece holding the rest.
    pub move_types: Option<(Mod4, Mod4)>,
    /// Parity of the dividing path, forced by the pair via the division rule.
    pub move_parity: Option<Parity>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone)]
pub struct CaseTree {
    pub config: CaseConfig,
    pub family: Family,
    pub depth: usize,
    pub nodes: Vec<TreeNode>,
}

impl CaseTree {
    /// Nodes at a given depth, in creation order.
    pub fn level(&self, d: usize) -> Vec<&TreeNode> {
        self.nodes.iter().filter(|n| n.depth == d).collect()
    }

    /// Level-1 branches that divide the configuration cycle of type `t`.
    pub fn branches_dividing(&self, t: Mod4) -> Vec<&TreeNode> {
        self.nodes
            .iter()
            .filter(|n| n.depth == 1 && n.divided.map(|(_, ty)| ty) == Some(t))
            .collect()
    }
}

/// Known single-path intersections among alive symbolic cycles. The tag
/// identifies the underlying path, so cycles sharing one common path carry
/// the same tag and a division can update all of them coherently.
#[derive(Clone)]
struct SymState {
    /// type and liveness per cycle id.
    cycles: Vec<(Mod4, bool)>,
    /// (a, b) with a < b -> (parity, path tag).
    facts: BTreeMap<(usize, usize), (Parity, u32)>,
    next_tag: u32,
}

impl SymState {
    fn root(config: &CaseConfig) -> SymState {
        let t = config.types;
        let cycles = vec![(t[0], true), (t[1], true), (t[2], true)];
        let mut facts = BTreeMap::new();
        match config.shape {
            Shape::A => {
                let l = config.parities[0];
                facts.insert((0, 1), (l, 0));
                facts.insert((0, 2), (l, 0));
                facts.insert((1, 2), (l, 0));
            }
            Shape::B => {
                let (l, m) = (config.parities[0], config.parities[1]);
                facts.insert((0, 1), (l, 0));
                facts.insert((0, 2), (m, 1));
                facts.insert((1, 2), (m, 1));
            }
            Shape::C | Shape::E => {
                let (l, m) = (config.parities[0], config.parities[1]);
                facts.insert((0, 1), (l, 0));
                facts.insert((1, 2), (m, 1));
            }
            Shape::F => {
                let (l, m, n) = (config.parities[0], config.parities[1], config.parities[2]);
                facts.insert((0, 1), (l, 0));
                facts.insert((1, 2), (m, 1));
                facts.insert((0, 2), (n, 2));
            }
        }
        SymState { cycles, facts, next_tag: 3 }
    }

    fn alive(&self) -> Vec<usize> {
        (0..self.cycles.len()).filter(|&i| self.cycles[i].1).collect()
    }

    /// Applies a division of cycle `x` into `(t1, t2)` by a path of parity
    /// `p`. The modeled route follows the documented analyses: the dividing
    /// path leaves the common path one edge from its end, so the first piece
    /// meets every cycle on that path in a single (odd) edge and the second
    /// piece keeps the rest (parity flipped). Intersections along other
    /// paths become unknown.
    fn divide(&mut self, x: usize, t1: Mod4, t2: Mod4, p: Parity) {
        let a = self.cycles.len();
        let b = a + 1;
        self.cycles.push((t1, true));
        self.cycles.push((t2, true));
        self.cycles[x].1 = false;

        let partners: Vec<(usize, Parity, u32)> = self
            .facts
            .iter()
            .filter_map(|(&(u, v), &(par, tag))| {
                if u == x && self.cycles[v].1 {
                    Some((v, par, tag))
                } else if v == x && self.cycles[u].1 {
                    Some((u, par, tag))
                } else {
                    None
                }
            })
            .collect();

        let div_tag = self.next_tag;
        let uv_tag = self.next_tag + 1;
        let rem_tag = self.next_tag + 2;
        self.next_tag += 3;
        self.facts.insert((a, b), (p, div_tag));

        if let Some(&(_, _, tag0)) = partners.first() {
            for &(y, par, tag) in &partners {
                if tag == tag0 {
                    self.facts.insert(key(a, y), (Parity::Odd, uv_tag));
                    self.facts.insert(key(b, y), (par.flip(), rem_tag));
                }
            }
        }
        // drop facts of the retired cycle
        self.facts.retain(|&(u, v), _| u != x && v != x);
    }

    /// Combined types over all determined intersections; escapes collected.
    fn escapes(&self, f: Family) -> Vec<Escape> {
        let mut out = Vec::new();
        for (&(u, v), &(par, _)) in &self.facts {
            if !self.cycles[u].1 || !self.cycles[v].1 {
                continue;
            }
            let (tu, tv) = (self.cycles[u].0, self.cycles[v].0);
            let cc = cc_type(tu, tv, par);
            if !f.contains(cc) {
                out.push(Escape { a: u, b: v, a_type: tu, b_type: tv, parity: par, cc });
            }
        }
        out
    }
}

fn key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Breadth-first expansion of a feasible configuration to `max_depth`
/// levels. Each level divides every alive cycle of every continuing node in
/// all ways listed by [`divide_possibilities`]; a branch stops when a
/// combined type determined by the recorded parities leaves the family.
pub fn explore(config: &CaseConfig, max_depth: usize) -> Result<CaseTree, Mod4Error> {
    if max_depth > 3 {
        return Err(Mod4Error::DepthTooLarge(max_depth));
    }
    if !config.is_feasible() {
        return Err(Mod4Error::InfeasibleConfig);
    }
    let f = config.family();
    let root_state = SymState::root(config);
    let mut nodes = vec![TreeNode {
        id: 0,
        parent: None,
        depth: 0,
        divided: None,
        move_types: None,
        move_parity: None,
        verdict: Verdict::Continue,
    }];
    let mut frontier: Vec<(usize, SymState)> = vec![(0, root_state)];
    for depth in 1..=max_depth {
        let mut next = Vec::new();
        for (pid, state) in frontier {
            for x in state.alive() {
                let t = state.cycles[x].0;
                for (t1, t2, p) in divide_possibilities(t, f)? {
                    let mut child = state.clone();
                    child.divide(x, t1, t2, p);
                    let escapes = child.escapes(f);
                    let verdict = if escapes.is_empty() {
                        Verdict::Continue
                    } else {
                        Verdict::Stop(escapes)
                    };
                    let id = nodes.len();
                    let cont = verdict == Verdict::Continue;
                    nodes.push(TreeNode {
                        id,
                        parent: Some(pid),
                        depth,
                        divided: Some((x, t)),
                        move_types: Some((t1, t2)),
                        move_parity: Some(p),
                        verdict,
                    });
                    if cont && depth < max_depth {
                        next.push((id, child));
                    }
                }
            }
        }
        frontier = next;
    }
    Ok(CaseTree { config: config.clone(), family: f, depth: max_depth, nodes })
}

// ---------------------------------------------------------------------------
// Published table data and the claims audit
// ---------------------------------------------------------------------------

/// Frozen published rows for the audit: pair tables and shape tables as
/// printed, including the duplicated pair table's misprint handled separately.
pub mod published {
    use super::{Family, Shape};

    /// Pair-table rows `(t1, t2, even, odd)`.
    pub fn cc_rows(f: Family) -> &'static [(u8, u8, u8, u8)] {
        match f {
            Family::F012 => &[
                (0, 0, 0, 2),
                (0, 1, 1, 3),
                (0, 2, 2, 0),
                (1, 1, 2, 0),
                (1, 2, 3, 1),
                (2, 2, 0, 2),
            ],
            Family::F013 => &[
                (0, 0, 0, 2),
                (0, 1, 1, 3),
                (0, 3, 3, 1),
                (1, 1, 2, 0),
                (1, 3, 0, 2),
                (3, 3, 2, 0),
            ],
            Family::F023 => &[
                (0, 0, 0, 2),
                (0, 2, 2, 0),
                (0, 3, 3, 1),
                (2, 2, 0, 2),
                (2, 3, 1, 3),
                (3, 3, 2, 0),
            ],
            Family::F123 => &[
                (1, 1, 2, 0),
                (1, 2, 3, 1),
                (1, 3, 0, 2),
                (2, 2, 0, 2),
                (2, 3, 1, 3),
                (3, 3, 2, 0),
            ],
        }
    }

    /// The misprinted even-intersection value for pair (2,3) of family 023
    /// in the duplicated pair table printed with the second-level no-solution
    /// cases; the primary table has the correct value 1.
    pub const DUPLICATE_PAIR_TABLE_MISPRINT: u8 = 4;

    /// Shape-table rows as printed: types, parities, derived columns.
    pub struct ShapeRow {
        pub types: [u8; 3],
        pub parities: &'static [u8],
        pub derived: &'static [u8],
    }

    pub fn shape_rows(shape: Shape, f: Family) -> &'static [ShapeRow] {
        macro_rules! rows {
            ($([$a:expr, $b:expr, $c:expr; $par:expr; $der:expr]),* $(,)?) => {
                &[$(ShapeRow { types: [$a, $b, $c], parities: &$par, derived: &$der }),*]
            };
        }
        match (shape, f) {
            (Shape::A, Family::F012) => rows![],
            (Shape::A, Family::F013) => rows![[0, 1, 3; [0]; [1, 3, 0]]],
            (Shape::A, Family::F023) => rows![],
            (Shape::A, Family::F123) => rows![[1, 2, 3; [1]; [1, 2, 3]]],
            (Shape::B, Family::F012) => rows![
                [0, 1, 2; [0, 1]; [1, 0, 1]],
                [1, 2, 0; [1, 0]; [1, 1, 2]],
            ],
            (Shape::B, Family::F013) => rows![
                [0, 1, 3; [0, 0]; [1, 3, 0]],
                [0, 1, 3; [1, 0]; [3, 3, 0]],
                [0, 3, 1; [0, 0]; [3, 1, 0]],
                [0, 3, 1; [1, 0]; [1, 1, 0]],
                [1, 3, 0; [0, 0]; [0, 1, 3]],
                [1, 3, 0; [0, 1]; [0, 3, 1]],
            ],
            (Shape::B, Family::F023) => rows![
                [0, 3, 2; [0, 1]; [3, 0, 3]],
                [2, 3, 0; [1, 0]; [3, 2, 3]],
            ],
            (Shape::B, Family::F123) => rows![
                [1, 2, 3; [0, 1]; [3, 2, 3]],
                [1, 2, 3; [1, 1]; [1, 2, 3]],
                [1, 3, 2; [1, 0]; [2, 3, 1]],
                [1, 3, 2; [1, 1]; [2, 1, 3]],
                [2, 3, 1; [0, 1]; [1, 1, 2]],
                [2, 3, 1; [1, 1]; [3, 1, 2]],
            ],
            (Shape::C | Shape::E, Family::F012) => rows![
                [0, 1, 2; [0, 1]; [1, 1, 1]],
                [0, 2, 1; [0, 1]; [2, 1, 1]],
                [1, 0, 2; [0, 1]; [1, 0, 1]],
            ],
            (Shape::C | Shape::E, Family::F013) => rows![
                [0, 1, 3; [0, 0]; [1, 0, 0]],
                [0, 3, 1; [0, 0]; [3, 0, 0]],
                [1, 0, 3; [0, 0]; [1, 3, 0]],
                [1, 0, 3; [1, 1]; [3, 1, 0]],
            ],
            (Shape::C | Shape::E, Family::F023) => rows![
                [0, 2, 3; [0, 1]; [2, 3, 3]],
                [0, 3, 2; [0, 1]; [3, 3, 3]],
                [2, 0, 3; [1, 0]; [0, 3, 3]],
            ],
            (Shape::C | Shape::E, Family::F123) => rows![
                [1, 2, 3; [0, 0]; [3, 1, 2]],
                [1, 2, 3; [1, 1]; [1, 3, 2]],
                [1, 3, 2; [1, 1]; [2, 3, 2]],
                [2, 1, 3; [1, 1]; [1, 2, 2]],
            ],
            (Shape::F, Family::F012) => rows![
                [0, 1, 2; [0, 1, 0]; [1, 1, 2, 1]],
                [0, 2, 1; [0, 1, 0]; [2, 1, 1, 1]],
            ],
            (Shape::F, Family::F013) => rows![
                [0, 1, 3; [0, 0, 0]; [1, 0, 3, 0]],
                [0, 1, 3; [1, 0, 1]; [3, 0, 1, 0]],
                [0, 3, 1; [1, 0, 1]; [1, 0, 3, 0]],
            ],
            (Shape::F, Family::F023) => rows![
                [0, 2, 3; [0, 1, 0]; [2, 3, 3, 3]],
                [0, 3, 2; [0, 1, 0]; [3, 3, 2, 3]],
            ],
            (Shape::F, Family::F123) => rows![
                [1, 2, 3; [0, 1, 1]; [3, 3, 2, 2]],
                [1, 2, 3; [1, 0, 1]; [1, 1, 2, 2]],
                [1, 3, 2; [1, 0, 1]; [2, 1, 1, 2]],
            ],
        }
    }

    /// First-level case counts read off the two fully drawn shape-A
    /// analyses (17 = 5 + 4 + 4 + 4; one cycle is divided along two routes).
    pub fn figure_level1_counts() -> &'static [(&'static str, Family, usize)] {
        &[("shape-a-013-even-level1", Family::F013, 17), ("shape-a-123-odd-level1", Family::F123, 17)]
    }
}
