use zdg_core::harness::{catalog_default, run_all, CatalogBounds, HarnessOptions};
use zdg_core::{dsl, Element, ExtNat};

#[test]
fn default_catalog_has_no_failures() {
    let report = run_all(&catalog_default(CatalogBounds::default()), &HarnessOptions::default());
    let failures = &report.summary.failures;
    assert!(failures.is_empty(), "{failures:?}");
    for r in &report.rings {
        let Some(row) = &r.row else { continue };
        if let ExtNat::Finite(t) = row.gamma_t {
            assert!(row.gamma <= t, "{}", row.spec);
        }
        assert_eq!(row.universal.is_some(), row.gamma == 1, "{}", row.spec);
    }
}

#[test]
fn local_rings_never_split_off_z2() {
    for spec in catalog_default(CatalogBounds::default()).specs {
        let r = dsl::ring(&spec).unwrap();
        // Local iff the non-units are closed under addition.
        let non_units: Vec<Element> = r.elements().filter(|&a| !r.is_unit(a)).collect();
        let local = non_units
            .iter()
            .all(|&a| non_units.iter().all(|&b| !r.is_unit(r.add(a, b))));
        if local {
            assert_eq!(r.z2_times_domain(), None, "{spec}");
        }
    }
}
