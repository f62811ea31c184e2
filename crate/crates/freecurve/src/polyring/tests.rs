use super::*;
use crate::numfield::NumberField;

fn qq() -> Field {
    NumberField::rationals()
}

fn p(s: &str) -> HomogPoly {
    parse_poly(s, &qq()).unwrap()
}

#[test]
fn graded_basis_shape() {
    for r in 0..8 {
        let basis = graded_monomials(r);
        assert_eq!(basis.len(), (r + 1) * (r + 2) / 2);
        assert_eq!(basis.len(), dim_graded(r as isize));
        for (i, m) in basis.iter().enumerate() {
            assert_eq!(m.degree(), r);
            assert_eq!(monomial_index(r, m), i);
        }
    }
    // Lexicographic x > y > z: degree 2 starts at x^2 and ends at z^2.
    let b2 = graded_monomials(2);
    assert_eq!(b2[0], Monomial::new(2, 0, 0));
    assert_eq!(b2[1], Monomial::new(1, 1, 0));
    assert_eq!(b2[5], Monomial::new(0, 0, 2));
}

#[test]
fn product_difference_of_squares() {
    let lhs = p("x+y").mul(&p("x-y")).unwrap();
    assert_eq!(lhs, p("x^2-y^2"));
}

#[test]
fn cancellation_keeps_degree_tag() {
    let q = p("x*y*z").add(&p("x*y*z").neg()).unwrap();
    assert!(q.is_zero());
    assert_eq!(q.degree(), 3);
}

#[test]
fn simple_products() {
    assert_eq!(p("x").mul(&p("y^2+x*z")).unwrap(), p("x*y^2+x^2*z"));
}

#[test]
fn degree_mismatch_on_add() {
    match p("x").add(&p("x^2")) {
        Err(PolyError::DegreeMismatch(1, 2)) => {}
        other => panic!("expected DegreeMismatch, got {:?}", other),
    }
}

#[test]
fn partial_derivatives() {
    assert_eq!(p("x*y*z").partial_derivative(0), p("y*z"));
    assert!(p("x^2+z^2").partial_derivative(1).is_zero());
    assert_eq!(p("y^2+x*z").partial_derivative(2), p("x"));
}

#[test]
fn euler_relation_small() {
    for s in ["x*y*z", "x^3 - 3*x*y*z + z^3", "x^2+y^2+z^2"] {
        let f = p(s);
        let lhs = f.euler_combination();
        let rhs = f.scale_rational(&Rational::from_integer((f.degree() as i64).into()));
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn substitution_examples() {
    let f = qq();
    let id = Mat3::identity(&f);
    assert_eq!(p("x*y*z").substitute_linear(&id).unwrap(), p("x*y*z"));

    // Swap x and y.
    let z = || FieldElement::zero(&f);
    let o = || FieldElement::one(&f);
    let swap = Mat3::from_rows([
        [z(), o(), z()],
        [o(), z(), z()],
        [z(), z(), o()],
    ]);
    assert_eq!(p("x^2").substitute_linear(&swap).unwrap(), p("y^2"));

    // x -> x - y turns (x+y)^2 into x^2.
    let m = Mat3::from_rows([
        [o(), FieldElement::from_int(&f, -1), z()],
        [z(), o(), z()],
        [z(), z(), o()],
    ]);
    let sq = p("x^2+2*x*y+y^2");
    assert_eq!(sq.substitute_linear(&m).unwrap(), p("x^2"));

    // Singular matrix is rejected.
    let sing = Mat3::from_rows([
        [o(), o(), z()],
        [o(), o(), z()],
        [z(), z(), o()],
    ]);
    assert!(matches!(
        p("x^2").substitute_linear(&sing),
        Err(PolyError::SingularMatrix)
    ));
}

#[test]
fn substitution_composition_and_inverse() {
    use rand::{Rng, SeedableRng};
    let f = qq();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    let rand_mat = |rng: &mut rand_chacha::ChaCha8Rng| loop {
        let m = Mat3::from_rows(std::array::from_fn(|_| {
            std::array::from_fn(|_| FieldElement::from_int(&f, rng.gen_range(-3..=3)))
        }));
        if !m.det().is_zero() {
            return m;
        }
    };
    let poly = p("x^3 - 2*x*y*z + 5*z^3 + y^2*x");
    for _ in 0..10 {
        let m = rand_mat(&mut rng);
        let n = rand_mat(&mut rng);
        let a = poly
            .substitute_linear(&m)
            .unwrap()
            .substitute_linear(&n)
            .unwrap();
        let b = poly.substitute_linear(&m.mul(&n)).unwrap();
        assert_eq!(a, b, "composition law");
        let inv = m.inverse().unwrap();
        let back = poly
            .substitute_linear(&m)
            .unwrap()
            .substitute_linear(&inv)
            .unwrap();
        assert_eq!(back, poly, "inverse substitution");
    }
}

#[test]
fn dehomogenize_examples() {
    let xy = p("x*y*z").dehomogenize(Chart::Z);
    assert_eq!(xy.terms().count(), 1);
    assert_eq!(xy.min_degree(), Some(2));

    let q = p("x^2+y*z").dehomogenize(Chart::Z);
    // x^2 + y
    assert_eq!(q.terms().count(), 2);
    assert!(q
        .terms()
        .any(|(&(a, b), c)| (a, b) == (0, 1) && c.is_one()));

    let one = p("z^3").dehomogenize(Chart::Z);
    assert!(one.constant_term().is_one());
    assert_eq!(one.total_degree(), 0);
}

#[test]
fn print_parse_round_trip() {
    let polys = [
        "x*y*z",
        "-24*x^2 - 23*y^2 + 76*y*z + 195*z^2",
        "x^4 - 1/2*x^2*y*z + 7*z^4",
        "0",
    ];
    for s in polys {
        let q1 = p(s);
        let q2 = parse_poly(&format!("{}", q1), &qq()).unwrap();
        if q1.is_zero() {
            assert!(q2.is_zero());
        } else {
            assert_eq!(q1, q2);
        }
    }
    // Round trip with a field generator in coefficients.
    let f = NumberField::adjoin_root(
        "e",
        &[
            Rational::from_integer(1.into()),
            Rational::from_integer((-1).into()),
            Rational::from_integer(1.into()),
        ],
    )
    .unwrap();
    let q1 = parse_poly("x - (1 - 2*e)*y + e*z", &f).unwrap();
    let q2 = parse_poly(&format!("{}", q1), &f).unwrap();
    assert_eq!(q1, q2);
}

#[test]
fn reducedness_examples() {
    assert!(p("x*y*z").is_reduced());
    assert!(!p("x^2*y").is_reduced());
    let g = p("x^2-y*z").mul(&p("x^2+z^2-y*z")).unwrap();
    assert!(g.is_reduced());
    // Repeated non-monomial factor.
    let sq = p("x+y+z").mul(&p("x+y+z")).unwrap().mul(&p("x-y")).unwrap();
    assert!(!sq.is_reduced());
    // Repeated factor hiding in the y-content after the z-chart.
    let h = p("y+z").pow(2).mul(&p("x")).unwrap();
    assert!(!h.is_reduced());
    // Squarefree with a conic and tangent line.
    let t = p("y").mul(&p("y*z-x^2")).unwrap();
    assert!(t.is_reduced());
}

#[test]
fn evaluate_points() {
    let f = qq();
    let conic = p("x^2 - y*z");
    let pt = [
        FieldElement::from_int(&f, 2),
        FieldElement::from_int(&f, 4),
        FieldElement::from_int(&f, 1),
    ];
    assert!(conic.evaluate(&pt).is_zero());
    let pt2 = [
        FieldElement::from_int(&f, 1),
        FieldElement::from_int(&f, 1),
        FieldElement::from_int(&f, 2),
    ];
    assert!(!conic.evaluate(&pt2).is_zero());
}

#[test]
fn proportionality() {
    assert!(p("x+y").proportional_to(&p("2*x+2*y")));
    assert!(!p("x+y").proportional_to(&p("x-y")));
    assert!(!p("x").proportional_to(&p("y")));
}
