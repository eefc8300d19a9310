mod common;

use common::oracle_transform;
use proptest::prelude::*;
use unital2d::algebra::{left_mult_operator, right_mult_operator};
use unital2d::units::{classify_left_by_conditions, classify_right_by_conditions};
use unital2d::{find_units, multiply, transform, Field, Mat2, Msc, Scalar, Side, Vec2};

fn scalar(field: Field) -> BoxedStrategy<Scalar> {
    match field {
        Field::Rational => (-9i64..=9, 1i64..=5)
            .prop_map(|(n, d)| Field::Rational.ratio(n, d).unwrap())
            .boxed(),
        Field::Prime(p) => (0..i64::from(p)).prop_map(move |r| field.int(r)).boxed(),
    }
}

fn small(field: Field) -> BoxedStrategy<Scalar> {
    (-1i64..=1).prop_map(move |r| field.int(r)).boxed()
}

fn msc_from(s: BoxedStrategy<Scalar>) -> impl Strategy<Value = Msc> {
    proptest::collection::vec(s, 8).prop_map(|v| Msc::new(v.try_into().unwrap()).unwrap())
}

fn msc(field: Field) -> impl Strategy<Value = Msc> {
    msc_from(scalar(field))
}

fn vec2(field: Field) -> impl Strategy<Value = Vec2> {
    (scalar(field), scalar(field)).prop_map(|(a, b)| Vec2::new(a, b).unwrap())
}

fn invertible(field: Field) -> impl Strategy<Value = Mat2> {
    proptest::collection::vec(scalar(field), 4)
        .prop_map(|v| Mat2::new(v.try_into().unwrap()).unwrap())
        .prop_filter("invertible", Mat2::is_invertible)
}

fn fields() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::Rational),
        Just(Field::Prime(2)),
        Just(Field::Prime(5)),
        Just(Field::Prime(7)),
    ]
}

fn with_field<T: std::fmt::Debug, S: Strategy<Value = T>>(
    make: impl Fn(Field) -> S + Clone + 'static,
) -> impl Strategy<Value = (Field, T)> {
    fields().prop_flat_map(move |f| (Just(f), make(f)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn transform_matches_dense_oracle((_, (a, g)) in with_field(|f| (msc(f), invertible(f)))) {
        prop_assert_eq!(transform(&a, &g).unwrap(), oracle_transform(&a, &g));
    }

    #[test]
    fn product_is_bilinear((f, (a, u, v, w, k)) in with_field(|f| (msc(f), vec2(f), vec2(f), vec2(f), scalar(f)))) {
        let m = |x: &Vec2, y: &Vec2| multiply(&a, x, y).unwrap();
        prop_assert_eq!(m(&u.add(&v), &w), m(&u, &w).add(&m(&v, &w)));
        prop_assert_eq!(m(&w, &u.add(&v)), m(&w, &u).add(&m(&w, &v)));
        prop_assert_eq!(m(&u.scale(&k), &v), m(&u, &v).scale(&k));
        prop_assert_eq!(m(&u, &v.scale(&k)), m(&u, &v).scale(&k));
        prop_assert_eq!(m(&Vec2::zero(f), &v), Vec2::zero(f));
    }

    #[test]
    fn action_law((_, (a, g, h)) in with_field(|f| (msc(f), invertible(f), invertible(f)))) {
        let gh = g.mul(&h).unwrap();
        prop_assert_eq!(
            transform(&a, &gh).unwrap(),
            transform(&transform(&a, &h).unwrap(), &g).unwrap()
        );
        let back = transform(&transform(&a, &g).unwrap(), &g.inverse().unwrap()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn identity_acts_trivially((f, a) in with_field(msc)) {
        prop_assert_eq!(transform(&a, &Mat2::identity(f)).unwrap(), a);
    }

    #[test]
    fn product_equivariance((_, (a, g, u, v)) in with_field(|f| (msc(f), invertible(f), vec2(f), vec2(f)))) {
        let b = transform(&a, &g).unwrap();
        let lhs = multiply(&b, &g.apply(&u).unwrap(), &g.apply(&v).unwrap()).unwrap();
        let rhs = g.apply(&multiply(&a, &u, &v).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn unit_sets_move_with_g((_, (a, g)) in with_field(|f| (msc_from(small(f)), invertible(f)))) {
        let b = transform(&a, &g).unwrap();
        for side in [Side::Left, Side::Right, Side::TwoSided] {
            prop_assert_eq!(find_units(&b, side), find_units(&a, side).map(&g));
        }
    }

    #[test]
    fn operators_match_product((_, (a, u, v)) in with_field(|f| (msc(f), vec2(f), vec2(f)))) {
        let l = left_mult_operator(&a, &u).unwrap();
        let r = right_mult_operator(&a, &u).unwrap();
        prop_assert_eq!(l.apply(&v).unwrap(), multiply(&a, &u, &v).unwrap());
        prop_assert_eq!(r.apply(&v).unwrap(), multiply(&a, &v, &u).unwrap());
    }

    #[test]
    fn text_round_trip((f, a) in with_field(msc)) {
        prop_assert_eq!(Msc::parse(f, &a.to_string()).unwrap(), a);
    }

    #[test]
    fn conditions_agree_with_solver_over_q(a in msc_from(small(Field::Rational))) {
        prop_assert_eq!(classify_left_by_conditions(&a), find_units(&a, Side::Left).kind());
        prop_assert_eq!(classify_right_by_conditions(&a), find_units(&a, Side::Right).kind());
    }

    #[test]
    fn solver_points_are_units((_, a) in with_field(|f| msc_from(small(f)))) {
        let ar = common::Ar::of(a.field());
        let dense = ar.msc(&a);
        for (side, left) in [(Side::Left, true), (Side::Right, false)] {
            let set = find_units(&a, side);
            for t in [-1, 0, 1] {
                let point = match &set {
                    unital2d::UnitSet::Point(p) => Some(p.clone()),
                    line => line.at(&a.field().int(t)),
                };
                if let Some(l) = point {
                    prop_assert!(ar.is_unit(&dense, &ar.vec(&l), left));
                }
            }
        }
    }
}
