//! Property-based invariants: field axioms, parser round trips, the Euler
//! relation, substitution inverses and elimination symmetries.

use freecurve::exactla::Matrix;
use freecurve::numfield::{Field, FieldElement, NumberField, Rational};
use freecurve::polyring::{graded_monomials, parse_poly, HomogPoly, Mat3};
use proptest::prelude::*;

fn fields() -> Vec<Field> {
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
        NumberField::adjoin_root(
            "z",
            &[
                Rational::from_integer(1.into()),
                Rational::from_integer(1.into()),
                Rational::from_integer(1.into()),
                Rational::from_integer(1.into()),
                Rational::from_integer(1.into()),
            ],
        )
        .unwrap(),
    ]
}

prop_compose! {
    fn arb_element(field_idx: usize)
        (coords in proptest::collection::vec((-20i64..=20, 1i64..=6), 4))
        -> FieldElement
    {
        let field = &fields()[field_idx];
        let coeffs = (0..field.degree())
            .map(|i| Rational::new(coords[i].0.into(), coords[i].1.into()))
            .collect();
        FieldElement::from_coeffs(field, coeffs)
    }
}

fn arb_poly(field_idx: usize, degree: usize) -> impl Strategy<Value = HomogPoly> {
    let monos = graded_monomials(degree);
    let len = monos.len();
    proptest::collection::vec((any::<bool>(), -9i64..=9, -9i64..=9), len).prop_map(
        move |coeffs| {
            let field = &fields()[field_idx];
            let k = field.degree();
            let terms: Vec<_> = monos
                .iter()
                .zip(&coeffs)
                .filter(|(_, (keep, _, _))| *keep)
                .map(|(m, (_, c0, c1))| {
                    let mut v = vec![Rational::from_integer(0.into()); k];
                    v[0] = Rational::from_integer((*c0).into());
                    if k > 1 {
                        v[1] = Rational::from_integer((*c1).into());
                    }
                    (*m, FieldElement::from_coeffs(field, v))
                })
                .collect();
            HomogPoly::from_terms(field, degree, terms)
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn field_ops_associative_distributive(
        fi in 0usize..4,
        a in (0usize..4).prop_flat_map(arb_element),
        b in (0usize..4).prop_flat_map(arb_element),
        c in (0usize..4).prop_flat_map(arb_element),
    ) {
        // Regenerate in a common field.
        let field = &fields()[fi];
        let re = |e: &FieldElement| {
            let mut v = e.coeffs().to_vec();
            v.truncate(field.degree());
            while v.len() < field.degree() {
                v.push(Rational::from_integer(0.into()));
            }
            FieldElement::from_coeffs(field, v)
        };
        let (a, b, c) = (re(&a), re(&b), re(&c));
        let ab_c = a.checked_mul(&b).unwrap().checked_mul(&c).unwrap();
        let a_bc = a.checked_mul(&b.checked_mul(&c).unwrap()).unwrap();
        prop_assert!(ab_c.eq_elem(&a_bc));
        let lhs = a.checked_mul(&b.checked_add(&c).unwrap()).unwrap();
        let rhs = a.checked_mul(&b).unwrap().checked_add(&a.checked_mul(&c).unwrap()).unwrap();
        prop_assert!(lhs.eq_elem(&rhs));
        if !a.is_zero() {
            prop_assert!(a.checked_mul(&a.inverse().unwrap()).unwrap().is_one());
        }
    }

    #[test]
    fn euler_relation(fi in 0usize..4, d in 1usize..6,
                      p in (0usize..4, 1usize..6).prop_flat_map(|(f, d)| arb_poly(f, d))) {
        let _ = (fi, d);
        prop_assume!(!p.is_zero());
        let d = p.degree();
        let lhs = p.euler_combination();
        let rhs = p.scale_rational(&Rational::from_integer((d as i64).into()));
        prop_assert!(lhs == rhs);
    }

    #[test]
    fn parse_print_round_trip(p in (0usize..3, 1usize..5).prop_flat_map(|(f, d)| arb_poly(f, d))) {
        prop_assume!(!p.is_zero());
        let text = format!("{}", p);
        let back = parse_poly(&text, p.field()).unwrap();
        prop_assert!(back == p);
    }

    #[test]
    fn substitution_inverse(
        p in (0usize..2, 1usize..4).prop_flat_map(|(f, d)| arb_poly(f, d)),
        entries in proptest::collection::vec(-3i64..=3, 9),
    ) {
        prop_assume!(!p.is_zero());
        let field = p.field().clone();
        let m = Mat3::from_rows(std::array::from_fn(|i| {
            std::array::from_fn(|j| FieldElement::from_int(&field, entries[3 * i + j]))
        }));
        prop_assume!(!m.det().is_zero());
        let inv = m.inverse().unwrap();
        let moved = p.substitute_linear(&m).unwrap();
        let back = moved.substitute_linear(&inv).unwrap();
        prop_assert!(back == p);
    }

    #[test]
    fn rank_transpose_symmetry(
        fi in 0usize..3,
        rows in 1usize..7,
        cols in 1usize..7,
        data in proptest::collection::vec((-9i64..=9, any::<bool>()), 49),
    ) {
        let field = &fields()[fi];
        let m = Matrix::from_rows(
            field,
            (0..rows)
                .map(|i| {
                    (0..cols)
                        .map(|j| {
                            let (v, nonzero) = data[i * 7 + j];
                            if nonzero {
                                FieldElement::from_int(field, v)
                            } else {
                                FieldElement::zero(field)
                            }
                        })
                        .collect()
                })
                .collect(),
        );
        let r = m.rank();
        prop_assert_eq!(r, m.transpose().rank());
        prop_assert_eq!(r + m.kernel_basis().len(), cols);
        // The rref route must agree with the fraction-free route.
        prop_assert_eq!(r, m.rref().rank());
    }

    #[test]
    fn canonical_equality(
        a in (0usize..3).prop_flat_map(arb_element),
    ) {
        // eq holds exactly when reduced coefficient vectors match: adding and
        // removing the minimal polynomial relation leaves the element fixed.
        let field = a.field().clone();
        if field.degree() >= 2 {
            let gen = FieldElement::generator(&field);
            // a + m(gen) = a since m(gen) = 0.
            let mut acc = a.clone();
            let mut power = FieldElement::one(&field);
            for c in field.minpoly() {
                acc = acc.checked_add(&power.scale(c)).unwrap();
                power = power.checked_mul(&gen).unwrap();
            }
            prop_assert!(acc.eq_elem(&a));
        }
    }
}
