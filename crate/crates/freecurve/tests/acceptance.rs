//! Acceptance suite: one test per acceptance criterion, each printing a
//! PASS line with its elapsed time. All assertions are exact (integer or
//! field-element equality).
//!
//! Criterion 4 (the 15-line pair over quadratic and quartic cyclotomic
//! fields) is the extended tier: run it with
//! `cargo test --test acceptance -- --include-ignored`.

use freecurve::arrangements::{
    lattice_isomorphic, weak_ziegler_pair, ziegler_pair, Arrangement, PointMode, ZieglerVariant,
};
use freecurve::catalog;
use freecurve::localsing::{local_invariants_at, SingTypeLabel};
use freecurve::numfield::{FieldElement, NumberField};
use freecurve::polyring::parse_poly;
use freecurve::syzygy::{CurveClass, CurveJacobian, Subtype, SyzygyVector};
use std::time::Instant;

fn pass(criterion: &str, summary: &str, start: Instant) {
    println!(
        "[acceptance] {}: PASS — {} ({:.2?})",
        criterion,
        summary,
        start.elapsed()
    );
}

fn jac_of(a: &Arrangement) -> &freecurve::syzygy::CurveJacobian {
    a.jacobian().expect("catalog arrangements are reduced")
}

#[test]
fn criterion_01_triangle() {
    let start = Instant::now();
    let q = NumberField::rationals();
    let f = parse_poly("x*y*z", &q).unwrap();
    let jac = CurveJacobian::new(&f).unwrap();
    let analysis = jac.classify().unwrap();
    assert_eq!(analysis.class, CurveClass::Free);
    assert_eq!(analysis.exponents(), &[1, 1]);
    assert_eq!(analysis.tau, 3);
    assert_eq!(jac.total_tjurina().unwrap(), 3);
    // Saito check on the two natural syzygies gives determinant 3 x y z.
    let r1 = SyzygyVector::new(
        &jac,
        [
            parse_poly("x", &q).unwrap(),
            parse_poly("-y", &q).unwrap(),
            parse_poly("0", &q).unwrap(),
        ],
    )
    .unwrap();
    let r2 = SyzygyVector::new(
        &jac,
        [
            parse_poly("x", &q).unwrap(),
            parse_poly("0", &q).unwrap(),
            parse_poly("-z", &q).unwrap(),
        ],
    )
    .unwrap();
    let det = jac.saito_determinant(&r1, &r2);
    assert_eq!(det, f.scale(&FieldElement::from_int(&q, 3)));
    let (ok, c) = jac.saito_check(&r1, &r2).unwrap();
    assert!(ok);
    assert_eq!(c.unwrap(), FieldElement::from_int(&q, 3));
    pass(
        "criterion 01",
        "triangle free (1,1), Saito determinant 3xyz, tau 3",
        start,
    );
}

#[test]
fn criterion_02_mdr_examples() {
    let start = Instant::now();
    let q = NumberField::rationals();
    let xy = parse_poly("x*y", &q).unwrap();
    assert_eq!(freecurve::syzygy::mdr(&xy).unwrap(), 0);
    let g = parse_poly("x^2 - y*z", &q)
        .unwrap()
        .mul(&parse_poly("x^2 + z^2 - y*z", &q).unwrap())
        .unwrap();
    let jac = CurveJacobian::new(&g).unwrap();
    assert_eq!(jac.mdr(), 1);
    let analysis = jac.classify().unwrap();
    assert_eq!(analysis.class, CurveClass::Free);
    assert_eq!(analysis.exponents(), &[1, 2]);
    assert_eq!(analysis.type_k, 0);
    assert!(analysis.resolution.relation_degrees.is_empty());
    pass(
        "criterion 02",
        "mdr(xy) = 0, mdr(G) = 1 with G free of exponents (1,2)",
        start,
    );
}

#[test]
fn criterion_03_naive_terao_pair() {
    let start = Instant::now();
    let cl1 = catalog::conic_line_example("naive_terao_1").unwrap();
    let cl2 = catalog::conic_line_example("naive_terao_2").unwrap();
    let a1 = jac_of(&cl1).classify().unwrap();
    assert_eq!(a1.class, CurveClass::Free);
    assert_eq!(a1.exponents(), &[2, 3]);
    let a2 = jac_of(&cl2).classify().unwrap();
    assert_eq!(a2.class, CurveClass::NearlyFree);
    assert_eq!(a2.exponents(), &[3, 3, 3]);
    // Local data at (0:0:1).
    let q = NumberField::rationals();
    let origin = [
        FieldElement::zero(&q),
        FieldElement::zero(&q),
        FieldElement::one(&q),
    ];
    let inv1 = local_invariants_at(&cl1.product(), &origin, 4).unwrap();
    assert_eq!((inv1.mu, inv1.tau), (15, 15));
    assert!(inv1.quasi_homogeneous);
    assert_eq!(inv1.multiplicity, 4);
    let inv2 = local_invariants_at(&cl2.product(), &origin, 4).unwrap();
    assert!(inv2.mu != inv2.tau, "mu = {}, tau = {}", inv2.mu, inv2.tau);
    pass(
        "criterion 03",
        "CL1 free (2,3) with mu = tau = 15 at the origin; CL2 nearly-free (3,3,3) with mu != tau",
        start,
    );
}

/// Extended tier: the quartic cyclotomic field makes this the slowest
/// criterion; the stated budget is 30 minutes, typical runtime is minutes.
#[test]
#[ignore = "extended tier: run with --include-ignored"]
fn criterion_04_triangular_pair() {
    let start = Instant::now();
    let (l1, l2) = catalog::triangular_pair();
    assert_eq!(l1.field().degree(), 2);
    assert_eq!(l2.field().degree(), 4);
    let a1 = jac_of(&l1).classify().unwrap();
    assert_eq!(a1.class, CurveClass::Free);
    assert_eq!(a1.exponents(), &[7, 7]);
    let a2 = jac_of(&l2).classify().unwrap();
    assert_eq!(a2.class, CurveClass::NearlyFree);
    assert_eq!(a2.exponents(), &[6, 9, 9]);
    let w1 = l1.weak_combinatorics(PointMode::Exact).unwrap();
    let w2 = l2.weak_combinatorics(PointMode::Exact).unwrap();
    assert_eq!(w1, w2, "identical weak-combinatorics");
    assert_eq!(
        w1.ordinary_profile().unwrap(),
        (15, vec![24, 12, 0, 0, 3]),
        "(15; 24, 12, 0, 0, 3)"
    );
    let verdict = weak_ziegler_pair(&l1, &l2, ZieglerVariant::Mdr).unwrap();
    assert!(verdict.is_pair(), "{}", verdict);
    assert_eq!(a1.mdr, 7);
    assert_eq!(a2.mdr, 6);
    // Same total Tjurina number on both sides, equal to the
    // weak-combinatorics sum 24*1 + 12*4 + 3*25.
    assert_eq!(a1.tau, 147);
    assert_eq!(a2.tau, 147);
    for l in [&l1, &l2] {
        let locus = l.singular_points(PointMode::Exact).unwrap();
        assert_eq!(locus.tjurina_sum(), 147);
        assert!(locus.all_quasi_homogeneous());
    }
    pass(
        "criterion 04",
        "15-line pair: free (7,7) vs nearly-free (6,9,9), same (15;24,12,0,0,3), tau 147, weak Ziegler via mdr 7 vs 6",
        start,
    );
}

#[test]
fn criterion_05_schenck_tohaneanu() {
    let start = Instant::now();
    let cl1 = catalog::conic_line_example("schenck_tohaneanu_1").unwrap();
    let cl2 = catalog::conic_line_example("schenck_tohaneanu_2").unwrap();
    assert_eq!(cl1.field().degree(), 2, "Q(i)");
    let a1 = jac_of(&cl1).classify().unwrap();
    assert_eq!(a1.class, CurveClass::Free);
    assert_eq!(a1.exponents(), &[6, 6]);
    let a2 = jac_of(&cl2).classify().unwrap();
    assert_eq!(a2.class, CurveClass::MSyzygy(4));
    assert_eq!(a2.exponents(), &[7, 7, 7, 7]);
    // The base quintuple points of the five-conic unions carry mu = 16,
    // tau = 15 and are not quasi-homogeneous. (In the full arrangements the
    // added lines raise these points to multiplicity 7.)
    let conics1 = Arrangement::new(cl1.components()[..5].to_vec()).unwrap();
    let f1 = conics1.product();
    let fi = cl1.field().clone();
    let zero = FieldElement::zero(&fi);
    let one = FieldElement::one(&fi);
    let origin = [zero.clone(), zero.clone(), one.clone()];
    let inv = local_invariants_at(&f1, &origin, 5).unwrap();
    assert_eq!((inv.mu, inv.tau), (16, 15));
    assert!(!inv.quasi_homogeneous);
    assert_eq!(inv.multiplicity, 5);
    // Same invariants at all three quintuple points of the second family.
    let conics2 = Arrangement::new(cl2.components()[..5].to_vec()).unwrap();
    let f2 = conics2.product();
    let q = cl2.field().clone();
    let pts = [
        [FieldElement::zero(&q), FieldElement::zero(&q), FieldElement::one(&q)],
        [FieldElement::one(&q), FieldElement::zero(&q), FieldElement::one(&q)],
        [FieldElement::zero(&q), FieldElement::one(&q), FieldElement::one(&q)],
    ];
    for p in &pts {
        let inv = local_invariants_at(&f2, p, 5).unwrap();
        assert_eq!((inv.mu, inv.tau), (16, 15));
        assert!(!inv.quasi_homogeneous);
    }
    pass(
        "criterion 05",
        "CL1 free (6,6) over Q(i), CL2 4-syzygy (7,7,7,7); quintuple points mu 16 / tau 15, not quasi-homogeneous",
        start,
    );
}

#[test]
fn criterion_06_wzz_pair() {
    let start = Instant::now();
    let w1 = catalog::conic_line_example("wzz_1").unwrap();
    let w2 = catalog::conic_line_example("wzz_2").unwrap();
    // Weak-combinatorics: one conic, six lines; 12 nodes, 3 ordinary
    // triples, 1 ordinary quadruple.
    for w in [&w1, &w2] {
        let wc = w.weak_combinatorics(PointMode::Exact).unwrap();
        assert_eq!(wc.degree_counts, vec![6, 1]);
        assert_eq!(wc.sing_counts[&SingTypeLabel::A(1)], 12);
        assert_eq!(wc.sing_counts[&SingTypeLabel::D4], 3);
        assert_eq!(wc.sing_counts[&SingTypeLabel::X9], 1);
        assert_eq!(wc.sing_counts.len(), 3);
    }
    let wc1 = w1.weak_combinatorics(PointMode::Exact).unwrap();
    let wc2 = w2.weak_combinatorics(PointMode::Exact).unwrap();
    assert_eq!(wc1, wc2);
    // Resolutions exactly as displayed, in the AR grading.
    let j1 = jac_of(&w1);
    let a1 = j1.classify().unwrap();
    assert_eq!(a1.exponents(), &[4, 5, 5, 6]);
    assert_eq!(a1.resolution.relation_degrees, vec![6, 7]);
    assert_eq!(
        a1.resolution.display(),
        "0 -> S(-7)+S(-6) -> S(-6)+S(-5)^2+S(-4) -> AR(f)"
    );
    assert_eq!(a1.subtype, Subtype::TwoB);
    let j2 = jac_of(&w2);
    let a2 = j2.classify().unwrap();
    assert_eq!(a2.exponents(), &[4, 5, 5]);
    assert_eq!(a2.resolution.relation_degrees, vec![7]);
    assert_eq!(
        a2.resolution.display(),
        "0 -> S(-7) -> S(-5)^2+S(-4) -> AR(f)"
    );
    assert_eq!(a2.subtype, Subtype::TwoA);
    // Weak Ziegler pair in the AR-module variant.
    let verdict = weak_ziegler_pair(&w1, &w2, ZieglerVariant::ArModule).unwrap();
    assert!(verdict.is_pair(), "{}", verdict);
    // The first curve is 4-syzygy, so no pair of its generators passes the
    // Saito test; check the two lowest (degrees 4 and 5).
    let gens = &j1.resolution().unwrap().generators;
    assert_eq!((gens[0].degree, gens[1].degree), (4, 5));
    let (ok, c) = j1.saito_check(&gens[0], &gens[1]).unwrap();
    assert!(!ok && c.is_none(), "a 4-syzygy curve has no Saito witness");
    // tau = 33 on both, from the classification, the direct stabilized
    // cokernel dimension, and the local sum over singular points
    // (12*1 + 3*4 + 1*9).
    for (w, jac, analysis) in [(&w1, &j1, &a1), (&w2, &j2, &a2)] {
        assert_eq!(analysis.tau, 33);
        assert_eq!(jac.total_tjurina().unwrap(), 33);
        let locus = w.singular_points(PointMode::Exact).unwrap();
        assert_eq!(locus.milnor_sum(), 33);
        assert_eq!(locus.tjurina_sum(), 33);
        assert!(locus.all_quasi_homogeneous());
    }
    pass(
        "criterion 06",
        "resolutions as displayed, subtypes 2B/2A, weak Ziegler pair, tau 33 on both",
        start,
    );
}

#[test]
fn criterion_07_orchard10() {
    let start = Instant::now();
    let a = catalog::orchard10_2a().unwrap();
    let b = catalog::orchard10_2b().unwrap();
    let aa = jac_of(&a).classify().unwrap();
    assert_eq!(aa.class, CurveClass::MSyzygy(3));
    assert_eq!(aa.exponents(), &[5, 6, 6]);
    assert_eq!(aa.resolution.relation_degrees, vec![8]);
    assert_eq!(
        aa.resolution.display(),
        "0 -> S(-8) -> S(-6)^2+S(-5) -> AR(f)"
    );
    assert_eq!(aa.subtype, Subtype::TwoA);
    let ab = jac_of(&b).classify().unwrap();
    assert_eq!(ab.class, CurveClass::MSyzygy(4));
    assert_eq!(ab.exponents(), &[5, 6, 6, 7]);
    assert_eq!(ab.resolution.relation_degrees, vec![7, 8]);
    assert_eq!(
        ab.resolution.display(),
        "0 -> S(-8)+S(-7) -> S(-7)+S(-6)^2+S(-5) -> AR(f)"
    );
    assert_eq!(ab.subtype, Subtype::TwoB);
    // Lattice-isomorphic, and a Ziegler pair in the AR-module variant.
    let ga = a.levi_graph(PointMode::Exact).unwrap();
    let gb = b.levi_graph(PointMode::Exact).unwrap();
    assert!(lattice_isomorphic(&ga, &gb));
    let verdict = ziegler_pair(&a, &b, ZieglerVariant::ArModule).unwrap();
    assert!(verdict.is_pair(), "{}", verdict);
    // Triple count 12, double count 9 on both realizations.
    for arr in [&a, &b] {
        let locus = arr.singular_points(PointMode::Exact).unwrap();
        let counts = locus.multiplicity_counts();
        assert_eq!(counts.get(&3), Some(&12));
        assert_eq!(counts.get(&2), Some(&9));
    }
    pass(
        "criterion 07",
        "orchard n=10: 2A vs 2B resolutions, lattice-isomorphic Ziegler pair, 12 triples + 9 doubles",
        start,
    );
}

#[test]
fn criterion_08_orchard12() {
    let start = Instant::now();
    let a = catalog::orchard12_2a().unwrap();
    let b = catalog::orchard12_2b().unwrap();
    assert_eq!(b.field().degree(), 2, "Q(sqrt 3)");
    let aa = jac_of(&a).classify().unwrap();
    assert_eq!(aa.exponents(), &[6, 7, 8]);
    assert_eq!(aa.resolution.relation_degrees, vec![10]);
    assert_eq!(
        aa.resolution.display(),
        "0 -> S(-10) -> S(-8)+S(-7)+S(-6) -> AR(f)"
    );
    assert_eq!(aa.subtype, Subtype::TwoA);
    let ab = jac_of(&b).classify().unwrap();
    assert_eq!(ab.exponents(), &[6, 7, 8, 9]);
    assert_eq!(ab.resolution.relation_degrees, vec![9, 10]);
    assert_eq!(
        ab.resolution.display(),
        "0 -> S(-10)+S(-9) -> S(-9)+S(-8)+S(-7)+S(-6) -> AR(f)"
    );
    assert_eq!(ab.subtype, Subtype::TwoB);
    let verdict = ziegler_pair(&a, &b, ZieglerVariant::ArModule).unwrap();
    assert!(verdict.is_pair(), "{}", verdict);
    for arr in [&a, &b] {
        let locus = arr.singular_points(PointMode::Exact).unwrap();
        assert_eq!(locus.multiplicity_counts().get(&3), Some(&19));
    }
    pass(
        "criterion 08",
        "orchard n=12: 2A vs 2B resolutions, Ziegler pair, 19 triple points",
        start,
    );
}

#[test]
fn criterion_09_dual_hesse() {
    let start = Instant::now();
    let dh = catalog::misc("dual_hesse").unwrap();
    let analysis = jac_of(&dh).classify().unwrap();
    assert_eq!(analysis.class, CurveClass::Free);
    assert_eq!(analysis.exponents(), &[4, 4]);
    assert_eq!(analysis.tau, 48);
    let locus = dh.singular_points(PointMode::Exact).unwrap();
    let counts = locus.multiplicity_counts();
    assert_eq!(counts.get(&3), Some(&12), "12 triple points");
    assert_eq!(counts.get(&2), None, "no nodes");
    pass(
        "criterion 09",
        "dual Hesse free (4,4), tau 48, 12 triple points, 0 nodes",
        start,
    );
}

// ---- criterion 10: property suites ----

mod criterion_10 {
    use super::*;
    use freecurve::exactla::Matrix;
    use freecurve::numfield::{Field, Rational};
    use freecurve::polyring::{graded_monomials, HomogPoly, Mat3};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_fields() -> Vec<Field> {
        vec![
            NumberField::rationals(),
            NumberField::adjoin_root(
                "a",
                &[
                    Rational::from_integer((-5).into()),
                    Rational::from_integer(0.into()),
                    Rational::from_integer(1.into()),
                ],
            )
            .unwrap(),
            NumberField::adjoin_root(
                "e",
                &[
                    Rational::from_integer(1.into()),
                    Rational::from_integer((-1).into()),
                    Rational::from_integer(1.into()),
                ],
            )
            .unwrap(),
        ]
    }

    fn random_poly(rng: &mut ChaCha8Rng, field: &Field, degree: usize) -> HomogPoly {
        loop {
            let monos = graded_monomials(degree);
            let mut terms = Vec::new();
            for m in &monos {
                if !rng.gen_bool(0.5) {
                    continue;
                }
                let coeffs = (0..field.degree())
                    .map(|_| Rational::from_integer(rng.gen_range(-9i64..=9).into()))
                    .collect();
                terms.push((*m, FieldElement::from_coeffs(field, coeffs)));
            }
            let p = HomogPoly::from_terms(field, degree, terms);
            if !p.is_zero() {
                return p;
            }
        }
    }

    #[test]
    fn criterion_10a_euler_relation() {
        let start = Instant::now();
        let mut rng = ChaCha8Rng::seed_from_u64(101);
        let fields = random_fields();
        let mut cases = 0;
        while cases < 120 {
            let field = &fields[rng.gen_range(0..fields.len())];
            let d = rng.gen_range(1..=6);
            let p = random_poly(&mut rng, field, d);
            let lhs = p.euler_combination();
            let rhs = p.scale_rational(&Rational::from_integer((d as i64).into()));
            assert_eq!(lhs, rhs, "Euler relation for {:?}", p);
            cases += 1;
        }
        pass("criterion 10a", "Euler relation on 120 random polynomials", start);
    }

    #[test]
    fn criterion_10b_koszul_membership() {
        let start = Instant::now();
        let mut rng = ChaCha8Rng::seed_from_u64(102);
        let fields = random_fields();
        let mut cases = 0;
        while cases < 100 {
            let field = &fields[rng.gen_range(0..fields.len())];
            let d = rng.gen_range(2..=5);
            let p = random_poly(&mut rng, field, d);
            if p.is_zero() || !p.is_reduced() {
                continue;
            }
            let jac = CurveJacobian::new(&p).unwrap();
            let [fx, fy, fz] = jac.partials().clone();
            let zero = HomogPoly::zero(field, d - 1);
            for (a, b, c) in [
                (fy.clone(), fx.neg(), zero.clone()),
                (fz.clone(), zero.clone(), fx.neg()),
                (zero.clone(), fz.clone(), fy.neg()),
            ] {
                let v = SyzygyVector {
                    degree: d - 1,
                    components: [a, b, c],
                };
                assert!(jac.is_syzygy(&v), "Koszul relation for {:?}", p);
            }
            cases += 1;
        }
        pass("criterion 10b", "Koszul membership on 100 random reduced curves", start);
    }

    #[test]
    fn criterion_10c_rank_nullity() {
        let start = Instant::now();
        let mut rng = ChaCha8Rng::seed_from_u64(103);
        let fields = random_fields();
        for case in 0..100 {
            let field = &fields[case % fields.len()];
            let rows = rng.gen_range(1..=9);
            let cols = rng.gen_range(1..=9);
            let m = Matrix::from_rows(
                field,
                (0..rows)
                    .map(|_| {
                        (0..cols)
                            .map(|_| {
                                if rng.gen_bool(0.25) {
                                    FieldElement::zero(field)
                                } else {
                                    let coeffs = (0..field.degree())
                                        .map(|_| {
                                            Rational::new(
                                                rng.gen_range(-9i64..=9).into(),
                                                rng.gen_range(1i64..=4).into(),
                                            )
                                        })
                                        .collect();
                                    FieldElement::from_coeffs(field, coeffs)
                                }
                            })
                            .collect()
                    })
                    .collect(),
            );
            let rank = m.rank();
            let kernel = m.kernel_basis();
            assert_eq!(rank + kernel.len(), cols, "rank-nullity");
            assert_eq!(m.transpose().rank(), rank, "rank of transpose");
            for v in &kernel {
                assert!(m.mul_vector(v).iter().all(|e| e.is_zero()));
            }
        }
        pass("criterion 10c", "rank/nullity and kernel verification on 100 random matrices", start);
    }

    #[test]
    fn criterion_10d_resolution_certificate() {
        let start = Instant::now();
        // Light catalog entries: the dimension count from the resolution must
        // reproduce dim AR(f)_r at three probe degrees above every shift.
        let entries = [
            "triangle",
            "two_conics_one_point",
            "naive_terao_1",
            "naive_terao_2",
            "tangent_conic_line",
            "conic_two_tangent_lines",
            "conic_inscribed_triangle",
            "conic_circumscribed_triangle",
            "conic_inscribed_circumscribed",
            "two_tangent_conics",
            "dual_hesse",
            "wzz_1",
            "wzz_2",
        ];
        for name in entries {
            let arr = catalog::build(name, &std::collections::BTreeMap::new()).unwrap();
            let jac = jac_of(&arr);
            let res = jac.resolution().unwrap();
            let max_shift = res
                .resolution
                .generator_degrees
                .iter()
                .chain(res.resolution.relation_degrees.iter())
                .max()
                .copied()
                .unwrap();
            for r in max_shift + 1..=max_shift + 3 {
                assert_eq!(
                    res.resolution.ar_dimension_at(r as isize),
                    jac.ar_dimension(r) as isize,
                    "certificate for {} at degree {}",
                    name,
                    r
                );
            }
        }
        pass(
            "criterion 10d",
            "resolution dimension certificate at 3 probe degrees for 13 catalog curves",
            start,
        );
    }

    #[test]
    fn criterion_10e_projective_invariance() {
        let start = Instant::now();
        let q = NumberField::rationals();
        let mut rng = ChaCha8Rng::seed_from_u64(105);
        let rand_mat = |rng: &mut ChaCha8Rng| loop {
            let m = Mat3::from_rows(std::array::from_fn(|_| {
                std::array::from_fn(|_| FieldElement::from_int(&q, rng.gen_range(-3..=3)))
            }));
            if !m.det().is_zero() {
                return m;
            }
        };
        let curves = [
            parse_poly("x*y*z", &q).unwrap(),
            parse_poly("x^2 - y*z", &q)
                .unwrap()
                .mul(&parse_poly("x^2 + z^2 - y*z", &q).unwrap())
                .unwrap(),
            parse_poly("y", &q)
                .unwrap()
                .mul(&parse_poly("x^2 + y^2 - z^2", &q).unwrap())
                .unwrap(),
        ];
        let mut cases = 0;
        'outer: for round in 0.. {
            for f in &curves {
                if cases >= 102 {
                    break 'outer;
                }
                let jac = CurveJacobian::new(f).unwrap();
                let base = jac.classify().unwrap();
                let m = rand_mat(&mut rng);
                let g = f.substitute_linear(&m).unwrap();
                let jg = CurveJacobian::new(&g).unwrap();
                let moved = jg.classify().unwrap();
                assert_eq!(base.mdr, moved.mdr, "mdr invariance (round {})", round);
                assert_eq!(base.tau, moved.tau, "tau invariance");
                assert_eq!(base.resolution, moved.resolution, "degree data invariance");
                cases += 1;
            }
        }
        pass(
            "criterion 10e",
            "projective invariance of (mdr, tau, resolution degrees) on 102 random changes",
            start,
        );
    }

    #[test]
    fn criterion_10f_tau_equals_milnor_sum() {
        let start = Instant::now();
        // Every all-quasi-homogeneous light catalog entry: tau from the
        // classification equals the Milnor sum over singular points.
        let entries = [
            "triangle",
            "two_conics_one_point",
            "two_tangent_conics",
            "naive_terao_1",
            "tangent_conic_line",
            "conic_two_tangent_lines",
            "conic_inscribed_triangle",
            "conic_circumscribed_triangle",
            "conic_inscribed_circumscribed",
            "dual_hesse",
            "wzz_1",
            "wzz_2",
            "orchard10_2a",
        ];
        for name in entries {
            let arr = catalog::build(name, &std::collections::BTreeMap::new()).unwrap();
            let locus = arr.singular_points(PointMode::Exact).unwrap();
            assert!(
                locus.all_quasi_homogeneous(),
                "{} should be all quasi-homogeneous",
                name
            );
            let analysis = jac_of(&arr).classify().unwrap();
            assert_eq!(analysis.tau, locus.milnor_sum(), "tau = sum mu for {}", name);
            assert_eq!(analysis.tau, locus.tjurina_sum(), "tau = sum tau_p for {}", name);
        }
        pass(
            "criterion 10f",
            "tau equals the local Milnor/Tjurina sums on 13 quasi-homogeneous entries",
            start,
        );
    }

    #[test]
    fn criterion_10g_cyclic_model_counts() {
        let start = Instant::now();
        for n in 3..=30 {
            let model = catalog::cyclic_model(n);
            // Brute-force enumeration against the closed formula.
            let mut brute = 0usize;
            for a in 0..n {
                for b in a + 1..n {
                    for c in b + 1..n {
                        if (a + b + c) % n == 0 {
                            brute += 1;
                        }
                    }
                }
            }
            assert_eq!(model.triples.len(), brute);
            assert_eq!(brute, n * (n - 3) / 6 + 1, "formula at n = {}", n);
        }
        pass(
            "criterion 10g",
            "cyclic model triple counts match floor(n(n-3)/6) + 1 for n = 3..30",
            start,
        );
    }
}
