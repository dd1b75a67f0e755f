//! The umbrella verification suite: one check per published claim the
//! toolkit mechanizes, each with frozen expected values and a time budget.
//! Checks that fail carry the full machine-checked evidence in their detail
//! text; a genuine refutation is reported, never suppressed.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use euler_cycles::atlas::{degree2_threshold, named_graph, realize_config, Atlas};
use euler_cycles::audit::audit_claims;
use euler_cycles::canon::{canonical_code, CanonicalCode};
use euler_cycles::cycles::{all_cycles, DEFAULT_CYCLE_CAP};
use euler_cycles::decompose::{cycle_decompose_from, xi};
use euler_cycles::graceful::{rosa_golomb, search_graceful, SearchOutcome, DEFAULT_BUDGET};
use euler_cycles::graph::Graph;
use euler_cycles::mod4::{
    cc_table, explore, feasible_configs, published, Family, Mod4, Parity, Shape, Verdict,
    ALL_FAMILIES,
};

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: &'static str,
    pub label: &'static str,
    pub pass: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "{}\t{}\t{}\t{:.3}s",
            self.id,
            if self.pass { "PASS" } else { "FAIL" },
            self.label,
            self.elapsed.as_secs_f64()
        )
    }
}

struct Check {
    pass: bool,
    detail: String,
}

impl Check {
    fn new() -> Check {
        Check { pass: true, detail: String::new() }
    }

    fn require(&mut self, ok: bool, msg: &str) {
        if !ok {
            self.pass = false;
            let _ = writeln!(self.detail, "FAILED: {msg}");
        }
    }

    fn info(&mut self, msg: &str) {
        let _ = writeln!(self.detail, "{msg}");
    }
}

fn finish(
    id: &'static str,
    label: &'static str,
    started: Instant,
    budget: Option<Duration>,
    mut check: Check,
) -> CriterionResult {
    let elapsed = started.elapsed();
    if let Some(b) = budget {
        check.require(elapsed <= b, &format!("elapsed {elapsed:?} over budget {b:?}"));
    }
    CriterionResult { id, label, pass: check.pass, detail: check.detail, elapsed }
}

/// Runs every check. `max_order` caps the enumeration-bound checks; the full
/// suite needs 10.
pub fn run_all(max_order: usize, threads: usize) -> Vec<CriterionResult> {
    let mut atlas = Atlas::with_threads(threads);
    vec![
        c1_cc_tables(),
        c2_shape_a(),
        c3_shape_b_and_divergences(),
        c4_min_orders(&mut atlas, max_order.min(9)),
        c5_regular_audit(&mut atlas, max_order),
        c6_degree_two(&mut atlas, max_order.min(9)),
        c7_size_congruence(&mut atlas, max_order.min(8)),
        c8_graceful_anchors(&mut atlas),
        c9_stop_sets(),
        c10_witnesses(&mut atlas, max_order),
        c11_oracles(&mut atlas),
    ]
}

fn c1_cc_tables() -> CriterionResult {
    let t = Instant::now();
    let mut c = Check::new();
    for f in ALL_FAMILIES {
        let rows = cc_table(f);
        let pub_rows = published::cc_rows(f);
        c.require(rows.len() == 6, &format!("family {f}: expected 6 rows"));
        for (row, &(a, b, e, d)) in rows.iter().zip(pub_rows) {
            c.require(
                row.pair == (Mod4::new(a), Mod4::new(b))
                    && row.even == Mod4::new(e)
                    && row.odd == Mod4::new(d),
                &format!("family {f} pair ({a},{b}): computed {}/{}", row.even, row.odd),
            );
        }
    }
    let audit = audit_claims();
    c.require(
        audit.duplicate_table.published_duplicate == 4 && audit.duplicate_table.computed == Mod4::new(1),
        "duplicate-table misprint not flagged",
    );
    c.info(&format!("duplicate table: {}", audit.duplicate_table.verdict));
    finish("C1", "combined-cycle pair tables match, duplicate-table misprint flagged", t, Some(Duration::from_secs(1)), c)
}

fn row_key(rows: &[euler_cycles::mod4::ConfigRow]) -> Vec<([u8; 3], Vec<u8>)> {
    rows.iter()
        .map(|r| {
            (
                [
                    r.config.types[0].value(),
                    r.config.types[1].value(),
                    r.config.types[2].value(),
                ],
                r.config.parities.iter().map(|p| p.bit()).collect(),
            )
        })
        .collect()
}

fn c2_shape_a() -> CriterionResult {
    let t = Instant::now();
    let mut c = Check::new();
    let r013 = feasible_configs(Shape::A, Family::F013);
    c.require(
        row_key(&r013) == vec![([0, 1, 3], vec![0])],
        &format!("shape-a 013: {:?}", row_key(&r013)),
    );
    if r013.len() == 1 {
        let derived: Vec<u8> = r013[0].derived.iter().map(|m| m.value()).collect();
        c.require(derived == vec![1, 3, 0], &format!("shape-a 013 derived {derived:?}"));
    }
    let r123 = feasible_configs(Shape::A, Family::F123);
    c.require(
        row_key(&r123) == vec![([1, 2, 3], vec![1])],
        &format!("shape-a 123: {:?}", row_key(&r123)),
    );
    if r123.len() == 1 {
        let derived: Vec<u8> = r123[0].derived.iter().map(|m| m.value()).collect();
        c.require(derived == vec![1, 2, 3], &format!("shape-a 123 derived {derived:?}"));
    }
    c.require(feasible_configs(Shape::A, Family::F012).is_empty(), "shape-a 012 should be empty");
    c.require(feasible_configs(Shape::A, Family::F023).is_empty(), "shape-a 023 should be empty");
    finish("C2", "shape-a feasibility: one row each for 013/123, none for 012/023", t, Some(Duration::from_secs(1)), c)
}

fn c3_shape_b_and_divergences() -> CriterionResult {
    let t = Instant::now();
    let mut c = Check::new();
    let rows = feasible_configs(Shape::B, Family::F012);
    c.require(
        row_key(&rows) == vec![([0, 1, 2], vec![0, 1]), ([1, 2, 0], vec![1, 0])],
        &format!("shape-b 012 rows: {:?}", row_key(&rows)),
    );
    // regenerated tables for every shape and family, with divergences listed
    let audit = audit_claims();
    let mut extras = Vec::new();
    for tbl in &audit.config_tables {
        c.require(
            tbl.missing.is_empty(),
            &format!("shape {} family {}: published rows missing {:?}", tbl.shape, tbl.family, tbl.missing),
        );
        for e in &tbl.extra {
            extras.push(format!("shape {} family {}: extra row {:?}", tbl.shape, tbl.family, e));
        }
    }
    for e in &extras {
        c.info(&format!("divergence (report-only): {e}"));
    }
    let expected_extras = 2; // the two reflection representatives the source dropped
    c.require(
        extras.len() == expected_extras,
        &format!("expected exactly {expected_extras} divergences, found {}", extras.len()),
    );
    finish("C3", "shape-b 012 matches; all shape tables regenerated, divergences listed", t, Some(Duration::from_secs(1)), c)
}

fn c4_min_orders(atlas: &mut Atlas, p_max: usize) -> CriterionResult {
    let t = Instant::now();
    let mut c = Check::new();
    // stated minimum orders; the 013 entry follows the published p >= 6
    // claim, which the exhaustive run refutes (K5 at order 5 realizes
    // exactly the types {0,1,3})
    let stated = [(Family::F012, 8), (Family::F013, 6), (Family::F023, 8), (Family::F123, 9)];
    for (f, want) in stated {
        let got = atlas.min_order(f, p_max).unwrap();
        c.require(
            got == Some(want),
            &format!("min_order({f}) to {p_max}: computed {got:?}, stated {want}"),
        );
        if f == Family::F013 && got == Some(5) {
            c.info(
                "computed minimum order 5 for family 013: K5 is Euler with cycle lengths \
                 {3,4,5}, hence types {0,1,3}; the published p >= 6 claim conflicts with the \
                 same source acknowledging K5 as a (regular) member of the family",
            );
        }
    }
    finish("C4", "minimum family orders from exhaustive enumeration", t, Some(Duration::from_secs(600)), c)
}

fn c5_regular_audit(atlas: &mut Atlas, max_order: usize) -> CriterionResult {
    let t = Instant::now();
    let mut c = Check::new();
    let bound_013 = max_order.min(10);
    let reg = atlas.regular_audit(Family::F013, bound_013).unwrap();
    let codes: Vec<String> = reg.iter().map(|g| canonical_code(g).as_str().to_string()).collect();
    let k5 = canonical_code(&Graph::complete(5)).as_str().to_string();
    c.require(
        codes == vec![k5],
        &format!("regular members of 013 to {bound_013}: {codes:?} (expected exactly K5)"),
    );
    for f in [Family::F012, Family::F023, Family::F123] {
        let bound = max_order.min(9);
        let reg = atlas.regular_audit(f, bound).unwrap();
        c.require(
            reg.is_empty(),
            &format!("regular members of {f} to {bound}: {} found", reg.len()),
        );
    }
    finish("C5", "regular audit: K5 alone in 013 to order 10, none elsewhere to 9", t, Some(Duration::from_secs(1800)), c)
}

fn c6_degree_two(atlas: &mut Atlas, p_max: usize) -> CriterionResult {
    let t = Instant::now();
    let mut c = Check::new();
    for f in ALL_FAMILIES {
        let finding = atlas.degree2_audit(f, p_max).unwrap();
        c.require(
            !finding.refuted,
            &format!(
                "family {f} (order > {}): counterexample certificates {:?} — members with \
                 every degree >= 4",
                degree2_threshold(f),
                finding.counterexamples
            ),
        );
        if finding.refuted && f == Family::F013 {
            c.info(
                "the order-9 certificate is two K5 blocks sharing one node: every cycle lies \
                 in one block, so the cycle types stay {0,1,3}; all degrees are 4 or 8, \
                 refuting the published degree-two claim for this family",
            );
        }
    }
    finish("C6", "degree-two audit of the four families", t, None, c)
}

fn c7_size_congruence(atlas: &mut Atlas, p_max: usize) -> CriterionResult {
    let t = Instant::now();
    let mut c = Check::new();
    let mut checked = 0usize;
    for p in 3..=p_max {
        for g in atlas.enumerate_euler(p).unwrap().to_vec() {
            let q_mod = (g.edge_count() % 4) as u8;
            for start in 0..3.min(g.node_count()) {
                let d = cycle_decompose_from(&g, start).unwrap();
                // edge-disjoint cover
                let mut seen = BTreeSet::new();
                for cyc in &d.cycles {
                    for e in cyc.edge_set() {
                        c.require(seen.insert(e), &format!("{}: edge reused", g.to_graph6()));
                    }
                }
                c.require(
                    seen.len() == g.edge_count(),
                    &format!("{}: cover incomplete", g.to_graph6()),
                );
                c.require(
                    xi(&d).weighted_sum_mod4() == q_mod,
                    &format!(
                        "{}: xi sum {} != q mod 4 = {q_mod}",
                        g.to_graph6(),
                        xi(&d).weighted_sum_mod4()
                    ),
                );
                checked += 1;
            }
        }
    }
    c.info(&format!("{checked} decompositions checked, zero exceptions"));
    finish("C7", "size congruence q = xi1 + 2 xi2 + 3 xi3 (mod 4) across decompositions", t, Some(Duration::from_secs(300)), c)
}

fn c8_graceful_anchors(atlas: &mut Atlas) -> CriterionResult {
    let t = Instant::now();
    let mut c = Check::new();
    // the (6,8) construction is graceful
    let m = named_graph("eps013-min").unwrap();
    let r = search_graceful(&m, DEFAULT_BUDGET);
    c.require(
        matches!(r.outcome, SearchOutcome::Found(_)),
        "(6,8) construction: no graceful labeling found",
    );
    // cycles are graceful exactly when n = 0 or 3 (mod 4)
    for n in 3..=12usize {
        let g = Graph::cycle(n);
        let found = matches!(search_graceful(&g, DEFAULT_BUDGET).outcome, SearchOutcome::Found(_));
        let want = n % 4 == 0 || n % 4 == 3;
        c.require(found == want, &format!("C{n}: found={found}, arithmetic test={want}"));
        c.require(
            rosa_golomb(n) == want,
            &format!("C{n}: rosa_golomb({n}) disagrees with residue rule"),
        );
    }
    // the minimal 012 member has q = 2 (mod 4) and is provably nongraceful
    let members = atlas.family_members(Family::F012, 8).unwrap();
    c.require(members.len() == 1, &format!("012 members at order 8: {}", members.len()));
    if let Some(g) = members.first() {
        c.require(
            g.edge_count() % 4 == 2,
            &format!("minimal 012 member q = {} (expected 2 mod 4)", g.edge_count()),
        );
        c.require(!rosa_golomb(g.edge_count()), "rosa_golomb should reject the minimal 012 member");
        let r = search_graceful(g, DEFAULT_BUDGET);
        c.require(
            r.outcome == SearchOutcome::ExhaustedNone,
            &format!("exhaustive search outcome {:?} (expected proof of nonexistence)", r.outcome),
        );
        c.info(&format!(
            "minimal 012 member {} (q={}): exhaustive search proves nongracefulness, agreeing \
             with the arithmetic test",
            g.to_graph6(),
            g.edge_count()
        ));
    }
    finish("C8", "graceful anchors: (6,8) graceful, cycle baseline, minimal 012 nongraceful", t, Some(Duration::from_secs(300)), c)
}

fn c9_stop_sets() -> CriterionResult {
    let t = Instant::now();
    let mut c = Check::new();
    let expect = |c: &mut Check,
                  family: Family,
                  common: Parity,
                  divided: u8,
                  want_moves: &[(u8, u8, u8)],
                  label: &str| {
        let row = &feasible_configs(Shape::A, family)[0];
        assert_eq!(row.config.parities, vec![common]);
        let tree = explore(&row.config, 1).unwrap();
        let branches = tree.branches_dividing(Mod4::new(divided));
        c.require(
            branches.len() == 5,
            &format!("{label}: {} branches (expected 5)", branches.len()),
        );
        let moves: BTreeSet<(u8, u8, u8)> = branches
            .iter()
            .map(|n| {
                let (a, b) = n.move_types.unwrap();
                (a.value(), b.value(), n.move_parity.unwrap().bit())
            })
            .collect();
        let want: BTreeSet<(u8, u8, u8)> = want_moves.iter().copied().collect();
        c.require(moves == want, &format!("{label}: branch set {moves:?} != {want:?}"));
        let continuing: Vec<String> = branches
            .iter()
            .filter(|n| !n.verdict.is_stop())
            .map(|n| format!("{:?}", n.move_types.unwrap()))
            .collect();
        c.require(
            continuing.is_empty(),
            &format!("{label}: branches not stopping: {continuing:?}"),
        );
        // every stop reason replays: the escaping combined type recomputes
        for n in &branches {
            if let Verdict::Stop(escapes) = &n.verdict {
                for e in escapes {
                    c.require(
                        euler_cycles::mod4::cc_type(e.a_type, e.b_type, e.parity) == e.cc
                            && !family.contains(e.cc),
                        &format!("{label}: unreplayable stop reason {e:?}"),
                    );
                }
            }
        }
    };
    expect(
        &mut c,
        Family::F123,
        Parity::Odd,
        2,
        &[(1, 1, 0), (3, 3, 0), (1, 3, 1), (3, 1, 1), (2, 2, 1)],
        "dividing the type-2 cycle in shape-a 123 (odd common path)",
    );
    // parities here are the ones forced by the division identity
    // t1 + t2 - 2p = 0 (mod 4); the published listing labels these five
    // cases with the opposite letters, which contradicts that identity
    expect(
        &mut c,
        Family::F013,
        Parity::Even,
        0,
        &[(0, 0, 0), (1, 3, 0), (3, 1, 0), (1, 1, 1), (3, 3, 1)],
        "dividing the type-0 cycle in shape-a 013 (even common path)",
    );
    if !c.pass {
        c.info(
            "the (2,2) division in family 123 and the (0,0) division in family 013 continue \
             soundly: for (2,2), the cited pair (2,3) keeps its combined type in-family under \
             both parities (even -> 1, odd -> 3), so no fourth type is derivable; for (0,0), \
             the analysis text itself lists no contradiction and marks its first case as \
             continuing; the four documented stops replay exactly in both expansions",
        );
    }
    finish("C9", "symbolic stop sets of the two documented shape-a expansions", t, Some(Duration::from_secs(1)), c)
}

fn c10_witnesses(atlas: &mut Atlas, max_order: usize) -> CriterionResult {
    let t = Instant::now();
    let mut c = Check::new();
    let bound = max_order.min(10);
    let mut rows = Vec::new();
    for (shape, family) in [(Shape::B, Family::F012), (Shape::A, Family::F013), (Shape::A, Family::F123)] {
        for row in feasible_configs(shape, family) {
            rows.push(row);
        }
    }
    for row in &rows {
        let types: Vec<u8> = row.config.types.iter().map(|m| m.value()).collect();
        let pars: Vec<u8> = row.config.parities.iter().map(|p| p.bit()).collect();
        match atlas.witness_search(&row.config, bound).unwrap() {
            Some(w) => {
                let ok = realize_config(&w.graph, &row.config).is_some();
                c.require(
                    ok,
                    &format!("shape {} row {types:?}/{pars:?}: witness fails re-verification", row.config.shape),
                );
                c.info(&format!(
                    "shape {} row {types:?};{pars:?}: witness p={} q={} {} intersections {:?}",
                    row.config.shape,
                    w.graph.node_count(),
                    w.graph.edge_count(),
                    w.graph.to_graph6(),
                    w.intersection_lengths
                ));
            }
            None => {
                c.require(
                    false,
                    &format!(
                        "shape {} row {types:?};{pars:?}: no realizing Euler graph up to order \
                         {bound} (exhaustive over all family members)",
                        row.config.shape
                    ),
                );
            }
        }
    }
    finish("C10", "concrete witnesses for the feasible rows of the three anchor tables", t, Some(Duration::from_secs(600)), c)
}

fn c11_oracles(atlas: &mut Atlas) -> CriterionResult {
    let t = Instant::now();
    let mut c = Check::new();
    // (a) canonical codes vs permutation-orbit oracle, exhaustive to order 5
    // and on all order-6 graphs
    for p in 2..=6usize {
        let (orbits, code_classes) = orbit_vs_code_counts(p, &mut c);
        c.require(
            orbits == code_classes,
            &format!("order {p}: {orbits} permutation orbits vs {code_classes} code classes"),
        );
    }
    // (b) Euler enumeration vs brute-force edge-subset oracle
    for p in 3..=6usize {
        let oracle = brute_force_euler_codes(p);
        let ours: BTreeSet<CanonicalCode> = atlas
            .enumerate_euler(p)
            .unwrap()
            .iter()
            .map(canonical_code)
            .collect();
        c.require(
            oracle == ours,
            &format!("order {p}: euler sets differ ({} oracle vs {} enumerated)", oracle.len(), ours.len()),
        );
    }
    // (c) cycle counts vs brute force on every unlabeled graph to order 6
    for p in 1..=6usize {
        for g in atlas.all_graphs(p).to_vec() {
            let (cs, truncated) = all_cycles(&g, DEFAULT_CYCLE_CAP);
            c.require(!truncated, "unexpected truncation");
            let want = brute_force_cycle_count(&g);
            c.require(
                cs.len() == want,
                &format!("{}: {} cycles vs brute force {want}", g.to_graph6(), cs.len()),
            );
        }
    }
    finish("C11", "oracle equivalence: canonical codes, Euler enumeration, cycle counts", t, Some(Duration::from_secs(120)), c)
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

fn uf_find(parent: &mut [u32], mut x: u32) -> u32 {
    while parent[x as usize] != x {
        parent[x as usize] = parent[parent[x as usize] as usize];
        x = parent[x as usize];
    }
    x
}

/// Unions labeled graphs under adjacent transpositions (which generate the
/// whole symmetric group) and checks code classes coincide with orbits.
fn orbit_vs_code_counts(p: usize, c: &mut Check) -> (usize, usize) {
    let pairs = pair_index(p);
    let n_masks = 1u32 << pairs.len();
    let mut parent: Vec<u32> = (0..n_masks).collect();
    for mask in 0..n_masks {
        let g = graph_of_mask(p, &pairs, mask);
        for t in 0..(p - 1) {
            let mut perm: Vec<usize> = (0..p).collect();
            perm.swap(t, t + 1);
            let hm = mask_of_graph(&g.relabel(&perm), &pairs);
            let (a, b) = (uf_find(&mut parent, mask), uf_find(&mut parent, hm));
            if a != b {
                parent[a.max(b) as usize] = a.min(b);
            }
        }
    }
    let mut orbit_code: std::collections::HashMap<u32, CanonicalCode> =
        std::collections::HashMap::new();
    let mut codes: std::collections::HashMap<CanonicalCode, u32> = std::collections::HashMap::new();
    for mask in 0..n_masks {
        let code = canonical_code(&graph_of_mask(p, &pairs, mask));
        let root = uf_find(&mut parent, mask);
        if let Some(existing) = orbit_code.get(&root) {
            c.require(*existing == code, &format!("order {p}: orbit split by codes"));
        } else {
            orbit_code.insert(root, code.clone());
        }
        if let Some(&r) = codes.get(&code) {
            c.require(r == root, &format!("order {p}: distinct orbits share a code"));
        } else {
            codes.insert(code, root);
        }
    }
    (orbit_code.len(), codes.len())
}

fn brute_force_euler_codes(p: usize) -> BTreeSet<CanonicalCode> {
    let pairs = pair_index(p);
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << pairs.len()) {
        let g = graph_of_mask(p, &pairs, mask);
        if g.is_euler() {
            out.insert(canonical_code(&g));
        }
    }
    out
}

fn brute_force_cycle_count(g: &Graph) -> usize {
    let p = g.node_count();
    let mut count = 0;
    for mask in 0u32..(1 << p) {
        if mask.count_ones() < 3 {
            continue;
        }
        let nodes: Vec<usize> = (0..p).filter(|&v| mask & (1 << v) != 0).collect();
        let mut rest = nodes[1..].to_vec();
        let mut found = 0usize;
        permute(&mut rest, 0, &mut |order: &[usize]| {
            let mut ok =
                g.has_edge(nodes[0], order[0]) && g.has_edge(*order.last().unwrap(), nodes[0]);
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
