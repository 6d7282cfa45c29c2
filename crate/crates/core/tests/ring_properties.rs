//! Ring axioms, DSL round trips and graph construction checked by brute force.

use proptest::prelude::*;
use zdg_core::dsl::{self, RingSpec};
use zdg_core::{
    build_zdg, domination_number, invariant_row, total_domination_number, Element, ExtNat,
    FiniteRing,
};

/// A quotient spec and an upper bound on its order.
fn quotient_text() -> impl Strategy<Value = (String, u32)> {
    (2u32..=9, 1u32..=3, 0u32..9, 0u32..9, 0u32..4, 0u32..3).prop_map(|(n, d, a, b, c, j)| {
        let mut rel = format!("x^{d}");
        if d > 1 && a > 0 {
            rel.push_str(&format!(" + {a}x"));
        }
        if b > 0 {
            rel.push_str(&format!(" - {b}"));
        }
        let mut text = format!("Z{n}[x]/({rel}");
        if c > 1 && j > 0 && j < d {
            text.push_str(&format!(", {c}x^{j}"));
        }
        text.push(')');
        (text, n.pow(d))
    })
}

fn factor_text() -> impl Strategy<Value = (String, u32)> {
    prop_oneof![
        3 => (2u32..=30).prop_map(|n| (format!("z{n}"), n)),
        1 => quotient_text(),
    ]
}

/// Spec strings in loose spelling, with products of up to three factors,
/// paired with an upper bound on the order.
fn spec_text() -> impl Strategy<Value = (String, u32)> {
    proptest::collection::vec(factor_text(), 1..=3).prop_map(|fs| {
        let bound = fs.iter().map(|f| f.1).product();
        let text: Vec<String> = fs.into_iter().map(|f| f.0).collect();
        (text.join("  X "), bound)
    })
}

/// Compilable rings of order at most 150.
fn small_ring() -> impl Strategy<Value = FiniteRing> {
    spec_text()
        .prop_filter("small", |(_, bound)| *bound <= 150)
        .prop_filter_map("compiles", |(t, _)| dsl::ring(&t).ok())
}

fn elems(r: &FiniteRing) -> Vec<Element> {
    r.elements().collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn format_parse_round_trip((text, _) in spec_text()) {
        if let Ok(spec) = dsl::parse(&text) {
            let canonical = dsl::format(&spec);
            let reparsed: RingSpec = dsl::parse(&canonical).unwrap();
            prop_assert_eq!(&reparsed, &spec);
            prop_assert_eq!(dsl::format(&reparsed), canonical);
        }
    }

    #[test]
    fn compiled_rings_satisfy_the_axioms(r in small_ring()) {
        let es = elems(&r);
        let step = (es.len() / 12).max(1);
        for &a in &es {
            prop_assert_eq!(r.mul(r.one(), a), a);
            prop_assert_eq!(r.mul(r.zero(), a), r.zero());
            for &b in &es {
                prop_assert_eq!(r.mul(a, b), r.mul(b, a));
            }
            for &b in es.iter().step_by(step) {
                for &c in es.iter().step_by(step) {
                    prop_assert_eq!(r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c)));
                    prop_assert_eq!(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn annihilators_are_subgroups(r in small_ring()) {
        for a in r.elements() {
            let ann = r.annihilator(a);
            prop_assert!(ann.contains(r.zero()));
            for x in ann.iter() {
                prop_assert!(ann.contains(r.neg(x)));
                for y in ann.iter() {
                    prop_assert!(ann.contains(r.add(x, y)));
                }
            }
        }
    }

    #[test]
    fn zero_divisors_units_and_annihilators(r in small_ring()) {
        let zd = r.zero_divisors();
        for a in r.elements().skip(1) {
            prop_assert_eq!(zd.contains(a), r.annihilator(a).len() > 1);
            let unit = r.elements().any(|x| r.mul(a, x) == r.one());
            prop_assert!(unit != zd.contains(a), "{} is a unit and a zero-divisor, or neither", r.element_label(a));
        }
    }

    #[test]
    fn graph_matches_brute_force(r in small_ring()) {
        let Ok(g) = build_zdg(&r) else {
            prop_assert!(r.is_domain());
            return Ok(());
        };
        let es = elems(&r);
        let mut ordered_pairs = 0;
        for &a in &es[1..] {
            for &b in &es[1..] {
                if a != b && r.mul(a, b) == r.zero() {
                    ordered_pairs += 1;
                }
            }
        }
        prop_assert_eq!(g.edge_count() * 2, ordered_pairs);
        for v in 0..g.vertex_count() {
            let e = g.element(v);
            prop_assert_eq!(g.has_loop(v), r.mul(e, e) == r.zero());
        }
        let gamma = domination_number(&g);
        let gamma_t = total_domination_number(&g);
        prop_assert_eq!(g.universal_vertex().is_some(), gamma.value == 1);
        prop_assert!(gamma.value <= gamma_t.value);
        prop_assert!(g.is_connected());
        prop_assert!(g.diameter() <= ExtNat::Finite(3));
    }

    #[test]
    fn chinese_remainder_pairs_share_rows(a in 2u32..=12, b in 2u32..=12) {
        prop_assume!(gcd(a, b) == 1);
        let cyclic = invariant_row(&format!("Z{}", a * b)).unwrap();
        let split = invariant_row(&format!("Z{a} x Z{b}")).unwrap();
        let key = |r: &zdg_core::InvariantRow| {
            (r.order, r.z_star, r.gamma, r.gamma_t, r.girth, r.diameter, r.z2xd.is_some(), r.ann_witness.is_some())
        };
        prop_assert_eq!(key(&cyclic), key(&split));
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 { a } else { gcd(b, a % b) }
}

#[test]
fn z6_and_z2_times_z3_agree() {
    let a = invariant_row("Z6").unwrap();
    let b = invariant_row("Z2 x Z3").unwrap();
    assert_eq!(
        (a.order, a.z_star, a.gamma, a.gamma_t, a.girth, a.diameter),
        (b.order, b.z_star, b.gamma, b.gamma_t, b.girth, b.diameter)
    );
}

#[test]
fn acyclic_local_rings_compile() {
    for (spec, order) in [
        ("Z4", 4),
        ("Z8", 8),
        ("Z9", 9),
        ("Z2[x]/(x^2)", 4),
        ("Z3[x]/(x^2)", 9),
        ("Z2[x]/(x^3)", 8),
        ("Z4[x]/(x^2-2, 2x)", 8),
    ] {
        let r = dsl::ring(spec).unwrap();
        assert_eq!(r.order(), order, "{spec}");
        let g = build_zdg(&r).unwrap();
        assert_eq!(g.girth(), ExtNat::Infinite, "{spec}");
    }
}
