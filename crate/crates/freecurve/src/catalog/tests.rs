use super::*;
use crate::arrangements::PointMode;
use crate::localsing::SingTypeLabel;
use crate::syzygy::CurveJacobian;

#[test]
fn full_monomial_counts_and_fields() {
    let a2 = full_monomial(2).unwrap();
    assert_eq!(a2.components().len(), 9);
    assert!(a2.field().is_rationals());
    let a6 = full_monomial(6).unwrap();
    assert_eq!(a6.components().len(), 21);
    assert_eq!(a6.field().degree(), 2);
    let a5 = full_monomial(5).unwrap();
    assert_eq!(a5.components().len(), 18);
    assert_eq!(a5.field().degree(), 4);
    assert!(matches!(
        full_monomial(7),
        Err(CatalogError::DegreeUnsupported(7))
    ));
}

#[test]
fn full_monomial_products_are_reduced() {
    for n in 2..=4 {
        let a = full_monomial(n).unwrap();
        assert!(a.product().is_reduced(), "n = {}", n);
    }
}

#[test]
fn triangular_pair_shapes() {
    let (l1, l2) = triangular_pair();
    assert_eq!(l1.components().len(), 15);
    assert_eq!(l2.components().len(), 15);
    assert_eq!(l1.field().degree(), 2);
    assert_eq!(l2.field().degree(), 4);
    assert!(l1.product().is_reduced());
    assert!(l2.product().is_reduced());
}

#[test]
fn cyclic_model_counts() {
    assert_eq!(cyclic_model(10).triples.len(), 12);
    assert_eq!(cyclic_model(12).triples.len(), 19);
    assert_eq!(cyclic_model(3).triples.len(), 1);
    assert_eq!(cyclic_model(3).triples[0], [0, 1, 2]);
    for n in 3..=30 {
        let m = cyclic_model(n);
        assert_eq!(
            m.triples.len(),
            m.expected_triple_count(),
            "triple count formula at n = {}",
            n
        );
        for t in &m.triples {
            assert!(t[0] < t[1] && t[1] < t[2]);
            assert_eq!((t[0] + t[1] + t[2]) % n, 0);
        }
    }
}

#[test]
fn orchard10_validation() {
    let q = NumberField::rationals();
    let at = |s: i64, t: i64| {
        orchard10(
            &FieldElement::from_int(&q, s),
            &FieldElement::from_int(&q, t),
        )
    };
    // (5, 3) is the integral point.
    let arr = at(5, 3).unwrap();
    assert_eq!(arr.components().len(), 10);
    // (1, 1) satisfies the hyperbola equation but is excluded.
    assert!(matches!(at(1, 1), Err(CatalogError::DegeneratePoint(_))));
    // t = 1 with s = 1 is the excluded point; a non-hyperbola point fails
    // the constraint.
    assert!(matches!(at(2, 2), Err(CatalogError::ConstraintViolated(_))));
    // (1/2, 0) is on the hyperbola and excluded.
    let half = FieldElement::from_rational(&q, Rational::new(1.into(), 2.into()));
    let zero = FieldElement::zero(&q);
    assert!(matches!(
        orchard10(&half, &zero),
        Err(CatalogError::DegeneratePoint(_))
    ));
}

#[test]
fn orchard12_validation() {
    let q = NumberField::rationals();
    let at = |s: i64, t: i64| {
        orchard12(
            &FieldElement::from_int(&q, s),
            &FieldElement::from_int(&q, t),
        )
    };
    let arr = at(-3, 3).unwrap();
    assert_eq!(arr.components().len(), 12);
    assert!(matches!(at(1, 1), Err(CatalogError::ConstraintViolated(_))));
    assert!(matches!(at(0, 2), Err(CatalogError::ConstraintViolated(_))));
    assert!(matches!(at(0, 0), Err(CatalogError::ConstraintViolated(_))));
}

#[test]
fn orchard10_triple_structure_matches_cyclic_model() {
    let arr = orchard10_2a().unwrap();
    let locus = arr.singular_points(PointMode::Exact).unwrap();
    let triples = locus
        .records
        .iter()
        .filter(|r| r.local.multiplicity == 3)
        .count();
    let doubles = locus
        .records
        .iter()
        .filter(|r| r.local.multiplicity == 2)
        .count();
    assert_eq!(triples, 12);
    assert_eq!(doubles, 9);
    // Incidence isomorphism with the abstract model, up to relabeling.
    let model = cyclic_model(10);
    let geometric = arr.levi_graph(PointMode::Exact).unwrap();
    assert!(crate::arrangements::lattice_isomorphic(
        &geometric,
        &model.levi_graph()
    ));
}

#[test]
fn orchard12_triple_structure_matches_cyclic_model() {
    let arr = orchard12_2a().unwrap();
    let locus = arr.singular_points(PointMode::Exact).unwrap();
    let triples = locus
        .records
        .iter()
        .filter(|r| r.local.multiplicity == 3)
        .count();
    assert_eq!(triples, 19);
    let model = cyclic_model(12);
    assert_eq!(model.double_count(), 66 - 57);
    let geometric = arr.levi_graph(PointMode::Exact).unwrap();
    assert!(crate::arrangements::lattice_isomorphic(
        &geometric,
        &model.levi_graph()
    ));
}

#[test]
fn misc_entries() {
    let t = misc("triangle").unwrap();
    assert_eq!(t.components().len(), 3);
    let dh = misc("dual_hesse").unwrap();
    assert_eq!(dh.components().len(), 9);
    let locus = dh.singular_points(PointMode::Exact).unwrap();
    assert_eq!(locus.records.len(), 12);
    assert!(locus.records.iter().all(|r| r.label == SingTypeLabel::D4));
    assert!(matches!(
        misc("nope"),
        Err(CatalogError::UnknownName(_))
    ));
}

#[test]
fn golden_data_for_light_entries() {
    for entry in entries() {
        if entry.heavy || !entry.parameters.is_empty() {
            continue;
        }
        let arr = build(entry.name, &BTreeMap::new()).unwrap();
        let exp = &entry.expected;
        if exp.class.is_none() {
            continue;
        }
        let jac = CurveJacobian::new(&arr.product()).unwrap();
        let analysis = jac.classify().unwrap();
        assert_eq!(Some(analysis.class), exp.class, "{}", entry.name);
        if let Some(e) = &exp.exponents {
            assert_eq!(analysis.exponents(), &e[..], "{}", entry.name);
        }
        if let Some(r) = &exp.relation_degrees {
            assert_eq!(&analysis.resolution.relation_degrees, r, "{}", entry.name);
        }
        if let Some(tau) = exp.tau {
            assert_eq!(analysis.tau, tau, "{}", entry.name);
        }
        if let Some(subtype) = exp.subtype {
            assert_eq!(analysis.subtype, subtype, "{}", entry.name);
        }
    }
}

#[test]
fn catalog_has_enough_entries() {
    assert!(entries().len() >= 12);
}

#[test]
fn build_field_declarations() {
    let f = build_field("a", "a^2 - 5").unwrap();
    assert_eq!(f.degree(), 2);
    assert_eq!(f.generator_name(), "a");
    let g = FieldElement::generator(&f);
    assert_eq!(
        g.checked_mul(&g).unwrap(),
        FieldElement::from_int(&f, 5)
    );
    assert!(build_field("a", "a^2 - 4").is_err());
}

#[test]
fn build_orchard_via_params() {
    let mut params = BTreeMap::new();
    params.insert("s".to_string(), "5".to_string());
    params.insert("t".to_string(), "3".to_string());
    let arr = build("orchard10", &params).unwrap();
    assert_eq!(arr.components().len(), 10);

    let mut params = BTreeMap::new();
    params.insert("field".to_string(), "a: a^2 - 5".to_string());
    params.insert("s".to_string(), "(5*a + 15)/4".to_string());
    params.insert("t".to_string(), "a + 3".to_string());
    let arr = build("orchard10", &params).unwrap();
    assert_eq!(arr.components().len(), 10);
    assert_eq!(arr.field().degree(), 2);
}
