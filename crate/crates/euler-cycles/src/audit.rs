//! Symbolic audit of the published combined-cycle claims: pair tables, the
//! escape claims, the two-route chord-division claims (the source mixes the
//! arc-length and chord-including-cycle accountings), the shape feasibility
//! tables with divergences listed, and the explorer's own branch counts next
//! to the published first-level counts.

use std::collections::BTreeSet;

use crate::cycles::{chord_split, Cycle};
use crate::graph::Graph;
use crate::mod4::{
    cc_table, cc_type, explore, feasible_configs, published, CcEntry, Family, Mod4, Parity, Shape,
    ALL_FAMILIES,
};

#[derive(Debug, Clone)]
pub struct CcTableAudit {
    pub family: Family,
    pub rows: Vec<CcEntry>,
    pub matches_published: bool,
}

#[derive(Debug, Clone)]
pub struct ErratumFinding {
    pub family: Family,
    pub pair: (Mod4, Mod4),
    pub parity: Parity,
    pub computed: Mod4,
    pub published_primary: u8,
    pub published_duplicate: u8,
    pub verdict: String,
}

#[derive(Debug, Clone)]
pub struct ClaimCheck {
    pub id: &'static str,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct ConventionCheck {
    pub observation: &'static str,
    pub orders: Vec<usize>,
    pub holds_arc: bool,
    pub holds_cycle: bool,
    pub verdict: String,
}

/// Row key of a shape table: types and parity bits.
pub type RowKey = ([u8; 3], Vec<u8>);

#[derive(Debug, Clone)]
pub struct ConfigTableAudit {
    pub shape: Shape,
    pub family: Family,
    pub artifact_rows: Vec<RowKey>,
    pub published_rows: Vec<RowKey>,
    /// Published rows the regeneration does not produce.
    pub missing: Vec<RowKey>,
    /// Regenerated rows absent from the published table.
    pub extra: Vec<RowKey>,
}

#[derive(Debug, Clone)]
pub struct ExploreCount {
    pub label: &'static str,
    pub published: usize,
    pub computed: usize,
}

#[derive(Debug, Clone)]
pub struct AuditReport {
    pub cc_tables: Vec<CcTableAudit>,
    pub duplicate_table: ErratumFinding,
    pub claims: Vec<ClaimCheck>,
    pub chord_conventions: Vec<ConventionCheck>,
    pub config_tables: Vec<ConfigTableAudit>,
    pub explore_counts: Vec<ExploreCount>,
    pub notes: Vec<String>,
}

impl AuditReport {
    pub fn all_pass(&self) -> bool {
        self.cc_tables.iter().all(|t| t.matches_published)
            && self.claims.iter().all(|t| t.pass)
    }
}

/// Escape cells of a family's pair table as (t1, t2, parity, value).
fn escape_cells(f: Family) -> BTreeSet<(u8, u8, u8, u8)> {
    let mut out = BTreeSet::new();
    for row in cc_table(f) {
        if row.even_escapes {
            out.insert((row.pair.0.value(), row.pair.1.value(), 0, row.even.value()));
        }
        if row.odd_escapes {
            out.insert((row.pair.0.value(), row.pair.1.value(), 1, row.odd.value()));
        }
    }
    out
}

fn escape_claim(id: &'static str, f: Family, expected: &[(u8, u8, u8)], value: u8) -> ClaimCheck {
    let got = escape_cells(f);
    let want: BTreeSet<(u8, u8, u8, u8)> =
        expected.iter().map(|&(a, b, p)| (a, b, p, value)).collect();
    let pass = got == want;
    ClaimCheck {
        id,
        pass,
        detail: format!("family {f}: escapes {got:?}, expected all -> {value}"),
    }
}

fn chord_checks() -> Vec<ConventionCheck> {
    // first claim: a chord of an n ≡ 2 (mod 4) cycle splits it into two even
    // parts of different class (one ≡ 0, one ≡ 2), whenever both parts are even
    let orders1 = vec![6, 10, 14];
    let mut arc1 = true;
    let mut cyc1 = true;
    for &n in &orders1 {
        let g = Graph::cycle(n);
        let c = Cycle::new(&g, &(0..n).collect::<Vec<_>>()).unwrap();
        for d in 2..=n / 2 {
            let s = chord_split(&c, 0, d).unwrap();
            if s.arc_lengths.0.is_multiple_of(2) && s.arc_lengths.1.is_multiple_of(2) {
                let set = BTreeSet::from([s.arc_types.0, s.arc_types.1]);
                arc1 &= set == BTreeSet::from([0, 2]);
            }
            if s.cycle_lengths.0.is_multiple_of(2) && s.cycle_lengths.1.is_multiple_of(2) {
                let set = BTreeSet::from([s.cycle_types.0, s.cycle_types.1]);
                cyc1 &= set == BTreeSet::from([0, 2]);
            }
        }
    }
    // second claim: a chord of an odd cycle yields one odd and one even part;
    // for n ≡ 1 the class pair is {1,2} or {3,0}, for n ≡ 3 it is {3,2} or {1,0}
    let orders2 = vec![5, 7, 9, 11, 13];
    let mut arc2 = true;
    let mut cyc2 = true;
    for &n in &orders2 {
        let g = Graph::cycle(n);
        let c = Cycle::new(&g, &(0..n).collect::<Vec<_>>()).unwrap();
        let expected: [BTreeSet<u8>; 2] = if n % 4 == 1 {
            [BTreeSet::from([1, 2]), BTreeSet::from([3, 0])]
        } else {
            [BTreeSet::from([3, 2]), BTreeSet::from([1, 0])]
        };
        for d in 2..=n / 2 {
            let s = chord_split(&c, 0, d).unwrap();
            let arcs = BTreeSet::from([s.arc_types.0, s.arc_types.1]);
            let cycs = BTreeSet::from([s.cycle_types.0, s.cycle_types.1]);
            arc2 &= expected.contains(&arcs);
            cyc2 &= expected.contains(&cycs);
        }
    }
    let verdict = |arc: bool, cyc: bool| -> String {
        match (arc, cyc) {
            (true, false) => "holds under the arc-length convention only".into(),
            (false, true) => "holds under the chord-including-cycle convention only".into(),
            (true, true) => "holds under both conventions".into(),
            (false, false) => "fails under both conventions".into(),
        }
    };
    vec![
        ConventionCheck {
            observation: "even-cycle chord split (n = 2 mod 4)",
            orders: orders1,
            holds_arc: arc1,
            holds_cycle: cyc1,
            verdict: verdict(arc1, cyc1),
        },
        ConventionCheck {
            observation: "odd-cycle chord split (n odd)",
            orders: orders2,
            holds_arc: arc2,
            holds_cycle: cyc2,
            verdict: verdict(arc2, cyc2),
        },
    ]
}

fn row_key(types: [Mod4; 3], parities: &[Parity]) -> RowKey {
    (
        [types[0].value(), types[1].value(), types[2].value()],
        parities.iter().map(|p| p.bit()).collect(),
    )
}

fn config_table_audits() -> Vec<ConfigTableAudit> {
    let mut out = Vec::new();
    for shape in [Shape::A, Shape::B, Shape::C, Shape::E, Shape::F] {
        for f in ALL_FAMILIES {
            let artifact: Vec<RowKey> = feasible_configs(shape, f)
                .iter()
                .map(|r| row_key(r.config.types, &r.config.parities))
                .collect();
            let published: Vec<RowKey> = published::shape_rows(shape, f)
                .iter()
                .map(|r| (r.types, r.parities.to_vec()))
                .collect();
            let aset: BTreeSet<&RowKey> = artifact.iter().collect();
            let pset: BTreeSet<&RowKey> = published.iter().collect();
            let missing = published.iter().filter(|k| !aset.contains(k)).cloned().collect();
            let extra = artifact.iter().filter(|k| !pset.contains(k)).cloned().collect();
            out.push(ConfigTableAudit {
                shape,
                family: f,
                artifact_rows: artifact,
                published_rows: published,
                missing,
                extra,
            });
        }
    }
    out
}

fn explore_counts() -> Vec<ExploreCount> {
    let mut out = Vec::new();
    for &(label, family, published) in published::figure_level1_counts() {
        let row = &feasible_configs(Shape::A, family)[0];
        let tree = explore(&row.config, 1).unwrap();
        out.push(ExploreCount { label, published, computed: tree.level(1).len() });
    }
    out
}

/// Runs the whole symbolic audit.
pub fn audit_claims() -> AuditReport {
    let cc_tables: Vec<CcTableAudit> = ALL_FAMILIES
        .iter()
        .map(|&f| {
            let rows = cc_table(f);
            let matches_published = rows.iter().zip(published::cc_rows(f)).all(|(r, &(a, b, e, d))| {
                r.pair == (Mod4::new(a), Mod4::new(b))
                    && r.even == Mod4::new(e)
                    && r.odd == Mod4::new(d)
            });
            CcTableAudit { family: f, rows, matches_published }
        })
        .collect();

    let computed_23_even = cc_type(Mod4::new(2), Mod4::new(3), Parity::Even);
    let duplicate_table = ErratumFinding {
        family: Family::F023,
        pair: (Mod4::new(2), Mod4::new(3)),
        parity: Parity::Even,
        computed: computed_23_even,
        published_primary: 1,
        published_duplicate: published::DUPLICATE_PAIR_TABLE_MISPRINT,
        verdict: format!(
            "duplicate table prints {} for pair (2,3) even, impossible mod 4; primary table's {} is canonical and matches the computed value {}",
            published::DUPLICATE_PAIR_TABLE_MISPRINT,
            1,
            computed_23_even
        ),
    };

    let claims = vec![
        escape_claim("pair-escapes-012-to-3", Family::F012, &[(0, 1, 1), (1, 2, 0)], 3),
        escape_claim(
            "pair-escapes-013-to-2",
            Family::F013,
            &[(0, 0, 1), (1, 1, 0), (1, 3, 1), (3, 3, 0)],
            2,
        ),
        escape_claim("pair-escapes-023-to-1", Family::F023, &[(0, 3, 1), (2, 3, 0)], 1),
        chain_claim_023(),
        escape_claim(
            "pair-escapes-123-to-0",
            Family::F123,
            &[(1, 1, 1), (1, 3, 0), (2, 2, 0), (3, 3, 1)],
            0,
        ),
    ];

    let notes = vec![
        "the division listing for the type-0 cycle in the shape-a 013 analysis labels its five \
         cases with parities that contradict the division identity t1 + t2 - 2p = t (mod 4); \
         the explorer records the identity-consistent parities, under which four of the five \
         branches stop by an escaping combined type and the (0,0) division continues, matching \
         the analysis text's continuing first case"
            .into(),
        "the shape-a 123 analysis marks the (2,2) division of the type-2 cycle impossible via \
         the pair (2,3), but that pair's combined type stays in-family under both parities \
         (even -> 1, odd -> 3), so no fourth type is derivable and the explorer continues it; \
         stop verdicts are kept sound rather than replaying that claim"
            .into(),
        "published first-level counts divide one cycle along two drawn routes; the explorer \
         divides each alive cycle once, so its counts are lower"
            .into(),
    ];

    AuditReport {
        cc_tables,
        duplicate_table,
        claims,
        chord_conventions: chord_checks(),
        config_tables: config_table_audits(),
        explore_counts: explore_counts(),
        notes,
    }
}

/// The chained combined cycle of the 023 shape-c/e rows: for ordered triples
/// (0,2,3), (0,3,2), (2,0,3), the three-cycle combined type i+j+k−2(l+m) is
/// ≡ 1 exactly when l + m is even.
fn chain_claim_023() -> ClaimCheck {
    let triples = [[0u8, 2, 3], [0, 3, 2], [2, 0, 3]];
    let mut pass = true;
    for t in triples {
        for lb in 0..2u8 {
            for mb in 0..2u8 {
                let sum = (t[0] + t[1] + t[2] + 16 - 2 * (lb + mb)) % 4;
                let even_lm = (lb + mb) % 2 == 0;
                pass &= (sum == 1) == even_lm;
            }
        }
    }
    ClaimCheck {
        id: "chain-cc-023-is-1-iff-lm-even",
        pass,
        detail: "triples (0,2,3),(0,3,2),(2,0,3): i+j+k-2(l+m) = 1 (mod 4) iff l+m even".into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn audit_passes_and_flags_known_divergences() {
        let r = audit_claims();
        assert!(r.all_pass());
        assert_eq!(r.duplicate_table.computed, Mod4::new(1));
        for c in &r.chord_conventions {
            match c.observation {
                "even-cycle chord split (n = 2 mod 4)" => {
                    assert!(c.holds_arc && !c.holds_cycle);
                }
                "odd-cycle chord split (n odd)" => {
                    assert!(!c.holds_arc && c.holds_cycle);
                }
                _ => unreachable!(),
            }
        }
        // regenerated shape tables never miss a published row; the only
        // extras are the two reflection representatives the source dropped
        let mut extras: Vec<(Shape, Family, RowKey)> = Vec::new();
        for t in &r.config_tables {
            assert!(t.missing.is_empty(), "{:?} {:?} missing {:?}", t.shape, t.family, t.missing);
            for e in &t.extra {
                extras.push((t.shape, t.family, e.clone()));
            }
        }
        let want: Vec<(Shape, Family, RowKey)> = vec![
            (Shape::F, Family::F013, ([0, 3, 1], vec![0, 0, 0])),
            (Shape::F, Family::F123, ([1, 3, 2], vec![1, 1, 0])),
        ];
        assert_eq!(extras, want);
    }
}
