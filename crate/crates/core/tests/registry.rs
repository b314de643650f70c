use std::collections::HashSet;

use bateman::docs::cell;
use bateman::{
    list_identities, registry, render_catalog, run_suite, transforms, verify_identity, Error, QuadConfig, Status, Tier,
};

#[test]
fn ids_are_unique() {
    let mut seen = HashSet::new();
    for i in registry() {
        assert!(seen.insert(i.id.as_str()), "duplicate id {}", i.id);
        assert!(!i.samples.is_empty(), "{} has no samples", i.id);
        assert!(
            i.samples.iter().all(|s| s.len() == i.params.len()),
            "{} grid width",
            i.id
        );
        if i.tier == Tier::Assert {
            assert!(i.tol.is_finite() && i.tol > 0.0, "{} tolerance", i.id);
        }
    }
    let tids: HashSet<_> = transforms().iter().map(|t| t.id).collect();
    assert_eq!(tids.len(), transforms().len());
}

#[test]
fn filters_select_by_tier_and_label() {
    let all = registry().len();
    let a = list_identities(Some("ASSERT")).len();
    let d = list_identities(Some("DIAGNOSE")).len();
    assert_eq!(a + d, all);
    assert_eq!(list_identities(None).len(), all);
    assert_eq!(list_identities(Some("eq35")).len(), 3);
    assert_eq!(list_identities(Some("eq20")).len(), 4);
    assert_eq!(list_identities(Some("A.")).len(), 20);
    assert!(transforms().iter().filter(|t| t.tier == Tier::Assert).count() >= 18);
}

#[test]
fn single_entries_verify() {
    let c = QuadConfig::default();
    let r = verify_identity("eq29_symmetry", &c).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert!(r.max_residual.unwrap() < 1e-8);
    let r = verify_identity("B11_k_minus", &c).unwrap();
    assert_eq!(r.status, Status::Diagnosed);
    assert!(r.max_residual.is_some());
    assert!(matches!(verify_identity("no_such", &c), Err(Error::UnknownId(_))));
}

#[test]
fn generated_docs_cover_the_registry() {
    let c = QuadConfig::default();
    let report = run_suite(None, &c, 2);
    assert_eq!(report.totals.failed, 0, "{}", report.summary());
    let docs = render_catalog(registry(), &report, transforms());
    assert_eq!(docs, render_catalog(registry(), &report, transforms()));
    let page = |name: &str| &docs.iter().find(|d| d.name == name).unwrap().content;

    let catalog = page("catalog.md");
    let rows = catalog.lines().filter(|l| l.starts_with("| `")).count();
    assert_eq!(rows, registry().len());
    for i in registry() {
        let row = catalog
            .lines()
            .find(|l| l.starts_with(&format!("| `{}` |", i.id)))
            .unwrap_or_else(|| panic!("no row for {}", i.id));
        assert!(row.contains(&cell(&i.citation)), "{}", i.id);
        if i.tier == Tier::Assert {
            assert!(row.contains("**PASS**"), "{}", i.id);
        }
    }

    let disc = page("discrepancies.md");
    for i in registry().iter().filter(|i| i.tier == Tier::Diagnose) {
        assert!(disc.contains(&format!("## `{}`", i.id)), "{}", i.id);
        assert!(disc.contains(&format!("- citation: {}\n", i.citation)), "{}", i.id);
    }
    assert!(!disc.contains("## `eq29_symmetry`"));

    let tt = page("transforms.md");
    for t in transforms() {
        assert!(tt.contains(&format!("| `{}` |", t.id)));
    }
    assert!(page("schema.md").contains("nu,x,value,err_est,method"));
}
