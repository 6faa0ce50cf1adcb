use nree8_core::catalog::{self, CatalogId};
use nree8_core::lattice::FINGERPRINT_NORM_BOUND;
use nree8_core::leech::{self, WordStep};
use nree8_core::nree8::fixtures::{self, Fixture};
use nree8_core::nree8::search::{self, SearchConfig, SearchError};
use nree8_core::nree8::verify::{self, verify_pair};
use nree8_core::nree8::{self, builders, row, PairRecord, Source, Witness};
use nree8_core::shortvec;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn fp_of(id: &str) -> nree8_core::Fingerprint {
    catalog::lattice(&id.parse::<CatalogId>().unwrap())
        .unwrap()
        .fingerprint(FINGERPRINT_NORM_BOUND)
        .unwrap()
}

#[test]
fn explicit_builders_pass_their_rows() {
    for (name, build) in [
        ("DIH6(16)", builders::build_dih6_16 as fn() -> _),
        ("DIH6(14)", builders::build_dih6_14),
        ("DIH4(16)", builders::build_dih4_16),
        ("DIH4(15)", builders::build_dih4_15_glue),
    ] {
        let p = build().unwrap();
        let r = verify_pair(&p, &row(name).unwrap());
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn dih6_14_smith_check_is_flagged_against_the_table() {
    let p = builders::build_dih6_14().unwrap();
    let r = verify_pair(&p, &row("DIH6(14)").unwrap());
    assert!(r.passed());
    assert_eq!(p.invariants.smith.to_string(), "1^9 3^3 6^2");
    assert!(r.check("Smith sequence").unwrap().pass);
    let table = r.check("Smith sequence (table)").unwrap();
    assert!(!table.pass && table.flagged, "{table:?}");
}

#[test]
fn wrong_row_is_reported() {
    let p = builders::build_dih4_16().unwrap();
    let r = verify_pair(&p, &row("DIH6(16)").unwrap());
    assert!(!r.passed());
    let smith = r.check("Smith sequence").unwrap();
    assert!(!smith.pass);
    assert!(r.check("dihedral order").is_some_and(|c| !c.pass));
}

#[test]
fn dih6_16_pieces() {
    let p = builders::build_dih6_16().unwrap();
    assert_eq!(p.intersection().unwrap().rank(), 0);
    assert_eq!(p.l.fingerprint(FINGERPRINT_NORM_BOUND).unwrap(), fp_of("A2xE8"));
    assert_eq!(p.n.fingerprint(FINGERPRINT_NORM_BOUND).unwrap(), fp_of("EE8"));
    assert!(p.invariants.in_leech);
}

#[test]
fn dih4_15_is_not_a_leech_pair_but_is_rootless() {
    let p = builders::build_dih4_15_glue().unwrap();
    assert_eq!(p.l.rank(), 15);
    assert!(p.witness.is_none());
    assert!(!p.invariants.in_leech);
    assert!(shortvec::is_rootless(&p.l).unwrap());
    assert_eq!(p.invariants.smith.to_string(), "1^2 2^12 4^1");
}

#[test]
fn xi_word_on_o2_gives_dih6_14() {
    let p = PairRecord::from_witness(
        "DIH6(14)",
        Witness {
            frame_octad: leech::octad_o2(),
            word: vec![WordStep::Xi],
        },
    )
    .unwrap();
    let r = verify_pair(&p, &row("DIH6(14)").unwrap());
    assert!(r.passed(), "{r}");
    assert!(p.l.same_lattice(&builders::build_dih6_14().unwrap().l));
}

#[test]
fn permutation_to_a_disjoint_octad_gives_dih4_16() {
    let o1 = leech::octad_o1();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let perm = loop {
        let p = leech::random_automorphism(&mut rng);
        if leech::permute_mask(o1, &p) & o1 == 0 {
            break p;
        }
    };
    let p = PairRecord::from_witness(
        "DIH4(16)",
        Witness {
            frame_octad: o1,
            word: vec![WordStep::Perm(perm.to_vec())],
        },
    )
    .unwrap();
    let r = verify_pair(&p, &row("DIH4(16)").unwrap());
    assert!(r.passed(), "{r}");
}

#[test]
fn search_rejects_rows_outside_leech() {
    let err = search::search_in_leech(&row("DIH4(15)").unwrap(), &SearchConfig::new(1, 10));
    assert!(matches!(err, Err(SearchError::NotInLeech(_))));
}

#[test]
fn search_is_deterministic_and_verification_gated() {
    let target = row("DIH4(12)").unwrap();
    let cfg = SearchConfig::new(5, 400);
    let a = search::search_in_leech(&target, &cfg).unwrap().expect("DIH4(12) is common");
    let b = search::search_in_leech(&target, &cfg).unwrap().unwrap();
    assert_eq!(a.candidate, b.candidate);
    assert_eq!(a.record.witness, b.record.witness);
    assert_eq!(a.log, b.log);
    assert_eq!(a.record.n.canonical().basis(), b.record.n.canonical().basis());
    assert!(a.report.passed());
    assert!(verify_pair(&a.record, &target).passed());
}

#[test]
fn exhausted_budget_is_not_an_error() {
    let target = row("DIH8(16,0)").unwrap();
    let mut cfg = SearchConfig::new(1, 3);
    cfg.frames = vec![leech::octad_o1()];
    assert!(search::search_in_leech(&target, &cfg).unwrap().is_none());
}

#[test]
fn committed_fixtures_replay_exactly() {
    let dir = fixtures::fixtures_dir();
    for r in nree8::table().iter().filter(|r| nree8::builder_for(&r.name).is_none()) {
        let (fx, path) = fixtures::load(&dir, &r.name).unwrap().unwrap_or_else(|| panic!("{} missing", r.name));
        assert_eq!(fx.name, r.name);
        assert_eq!(fx.expected, *r);
        let rec = fx.replay(&path).unwrap();
        let report = verify_pair(&rec, r);
        assert!(report.passed(), "{report}");
    }
}

#[test]
fn tampered_fixture_is_rejected() {
    let dir = fixtures::fixtures_dir();
    let (mut fx, path): (Fixture, _) = fixtures::load(&dir, "DIH4(12)").unwrap().unwrap();
    fx.n_basis[0][0] += 8;
    assert!(matches!(fx.replay(&path), Err(fixtures::FixtureError::Replay { .. })));
}

#[test]
fn fixture_round_trip_through_save() {
    let dir = std::env::temp_dir().join(format!("nree8-fixtures-{}", std::process::id()));
    let (fx, _) = fixtures::load(&fixtures::fixtures_dir(), "DIH12(16)").unwrap().unwrap();
    let path = fixtures::save(&dir, &fx).unwrap();
    let (back, _) = fixtures::load(&dir, "DIH12(16)").unwrap().unwrap();
    assert_eq!(back, fx);
    assert_eq!(path.file_name().unwrap(), "dih12_16.json");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn missing_fixture_reports_no_witness() {
    let dir = std::env::temp_dir().join("nree8-empty-fixtures");
    let e = nree8::run_row(&row("DIH10(16)").unwrap(), &dir);
    assert_eq!(e.source, Source::Missing);
    assert!(e.record.is_none());
    assert!(!e.report.passed());
    assert_eq!(e.report.checks[0].computed, "no witness");
}

#[test]
fn dih8_16_0_is_bw16() {
    let e = nree8::run_row(&row("DIH8(16,0)").unwrap(), &fixtures::fixtures_dir());
    let rec = e.record.unwrap();
    assert_eq!(rec.l.fingerprint(FINGERPRINT_NORM_BOUND).unwrap(), fp_of("BW16"));
    assert_eq!(verify::identify(&rec.invariants.ann_m), "0");
}

#[test]
fn sub_pairs_for_dih8_and_dih12() {
    let dir = fixtures::fixtures_dir();
    for (name, want) in [("DIH8(15)", "DIH4"), ("DIH8(16,DD4)", "DIH4"), ("DIH12(16)", "DIH6(14)")] {
        let e = nree8::run_row(&row(name).unwrap(), &dir);
        let c = e.report.check("(M, Mh) pair").unwrap();
        assert!(c.pass && c.computed.contains(want), "{name}: {c:?}");
    }
    let e = nree8::run_row(&row("DIH8(15)").unwrap(), &dir);
    assert!(e.report.check("M g^2 = M").unwrap().pass);
}

#[test]
fn every_record_has_fix_equal_to_intersection() {
    for e in nree8::full_table(&fixtures::fixtures_dir()) {
        let c = e.report.check("Fix(g) = M cap N").unwrap();
        assert!(c.pass, "{}: {c:?}", e.row.name);
        let d = e.record.unwrap().invariants.dihedral_order.unwrap();
        assert!(d <= 12);
    }
}

#[test]
fn dih4_decomposition_indices() {
    // M cap N + ann_M(N) + ann_N(M) always contains 2L; its index varies
    let dir = fixtures::fixtures_dir();
    for (name, index) in [("DIH4(12)", 16), ("DIH4(14)", 16), ("DIH4(15)", 4), ("DIH4(16)", 1)] {
        let rec = nree8::run_row(&row(name).unwrap(), &dir).record.unwrap();
        let s = verify::dih4_sum(&rec).unwrap();
        assert!(s.contains_double_of(&rec.l), "{name}");
        assert_eq!(s.index_in(&rec.l).unwrap(), index.into(), "{name}");
    }
}
