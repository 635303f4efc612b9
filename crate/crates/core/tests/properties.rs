//! Randomized invariants for the polynomial layer and the DSL.

use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;

use geoprove_core::dsl::{format_construction, parse_construction};
use geoprove_core::poly::{squarefree_part, Monomial, MonomialOrder, Variable};
use geoprove_core::{rint, QPoly, Rat};

fn arb_monomial() -> impl Strategy<Value = Monomial> {
    proptest::collection::vec((1u32..5, 0u32..4), 0..4).prop_map(|pairs| {
        let mut merged: BTreeMap<u32, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *merged.entry(v).or_insert(0) += e;
        }
        Monomial::from_pairs(
            merged
                .into_iter()
                .filter(|&(_, e)| e > 0)
                .map(|(v, e)| (Variable::new(v), e)),
        )
    })
}

fn arb_poly() -> impl Strategy<Value = QPoly> {
    proptest::collection::vec((arb_monomial(), -9i64..10), 0..5).prop_map(|terms| {
        let mut p = QPoly::zero();
        for (m, c) in terms {
            p.add_term(m, rint(c));
        }
        p
    })
}

fn arb_nonzero_poly() -> impl Strategy<Value = QPoly> {
    arb_poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn arb_order() -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![
        Just(MonomialOrder::Lex),
        Just(MonomialOrder::DegRevLex),
        proptest::collection::btree_set(1u32..5, 1..4).prop_map(|s| MonomialOrder::Block {
            eliminated: s.into_iter().map(Variable::new).collect::<BTreeSet<_>>(),
        }),
    ]
}

fn arb_assignment() -> impl Strategy<Value = BTreeMap<Variable, Rat>> {
    proptest::collection::vec(-5i64..6, 4).prop_map(|vals| {
        vals.into_iter()
            .enumerate()
            .map(|(i, x)| (Variable::new(i as u32 + 1), rint(x)))
            .collect()
    })
}

proptest! {
    #[test]
    fn addition_commutes_and_associates(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    }

    #[test]
    fn multiplication_distributes(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn additive_inverse(a in arb_poly()) {
        prop_assert_eq!(&a + &(-&a), QPoly::zero());
    }

    #[test]
    fn leading_monomial_is_multiplicative(
        p in arb_nonzero_poly(),
        q in arb_nonzero_poly(),
        order in arb_order(),
    ) {
        let lp = p.leading_monomial(&order).unwrap();
        let lq = q.leading_monomial(&order).unwrap();
        let lpq = (&p * &q).leading_monomial(&order).unwrap();
        prop_assert_eq!(lpq, lp.mul(&lq));
    }

    #[test]
    fn divide_exact_inverts_multiplication(p in arb_poly(), q in arb_nonzero_poly()) {
        let prod = &p * &q;
        prop_assert_eq!(prod.divide_exact(&q).unwrap(), Some(p));
    }

    #[test]
    fn squarefree_part_divides(p in arb_nonzero_poly()) {
        let sf = squarefree_part(&p).unwrap();
        prop_assert!(p.divide_exact(&sf).unwrap().is_some());
    }

    #[test]
    fn evaluate_is_a_homomorphism(p in arb_poly(), q in arb_poly(), a in arb_assignment()) {
        let pq = (&p * &q).evaluate(&a).unwrap();
        prop_assert_eq!(pq, p.evaluate(&a).unwrap() * q.evaluate(&a).unwrap());
        let ps = (&p + &q).evaluate(&a).unwrap();
        prop_assert_eq!(ps, p.evaluate(&a).unwrap() + q.evaluate(&a).unwrap());
    }

    #[test]
    fn order_axioms(
        m1 in arb_monomial(),
        m2 in arb_monomial(),
        n in arb_monomial(),
        order in arb_order(),
    ) {
        use std::cmp::Ordering;
        // antisymmetry and totality
        prop_assert_eq!(order.compare(&m1, &m2), order.compare(&m2, &m1).reverse());
        // equality agrees with structural equality
        prop_assert_eq!(order.compare(&m1, &m2) == Ordering::Equal, m1 == m2);
        // multiplicative
        prop_assert_eq!(
            order.compare(&m1.mul(&n), &m2.mul(&n)),
            order.compare(&m1, &m2)
        );
        // 1 is minimal
        prop_assert_ne!(order.compare(&Monomial::one(), &m1), Ordering::Greater);
    }

    #[test]
    fn sort_key_agrees_with_compare(
        m1 in arb_monomial(),
        m2 in arb_monomial(),
        order in arb_order(),
    ) {
        let k1 = order.sort_key(&m1, 8);
        let k2 = order.sort_key(&m2, 8);
        prop_assert_eq!(k1.cmp(&k2), order.compare(&m1, &m2));
    }

    #[test]
    fn block_order_eliminates(m1 in arb_monomial(), m2 in arb_monomial()) {
        use std::cmp::Ordering;
        let eliminated: BTreeSet<Variable> = [Variable::new(1)].into_iter().collect();
        let order = MonomialOrder::Block { eliminated };
        if m1.contains(Variable::new(1)) && !m2.contains(Variable::new(1)) {
            prop_assert_eq!(order.compare(&m1, &m2), Ordering::Greater);
        }
    }
}

fn sample_sources() -> Vec<String> {
    vec![
        "A = Point()\nB = Point()\nO = Midpoint(A, B)\nk = Circle(O, A)\nC = Point(k)\nca = Segment(C, A)\ncb = Segment(C, B)\nProve(ArePerpendicular(ca, cb))\n".into(),
        "A = Point()\nB = Point()\nc = Circle(A, B)\nC = Point()\na = Line(B, C)\nD = Point(a)\nC' = ReflectCircle(C, c)\nD' = ReflectCircle(D, c)\nd = Circle3(A, B, C')\nProveDetails(Incident(D', d))\n".into(),
        "A = Point()\nB = Point()\nC = Point()\nX = Rotate(A, 45, B)\nY = Rotate(X, -45, B)\nProve(AreEqual(A, Y))\n".into(),
        "A = Point()\nB = Point()\nProve(Equation(Length(A, B) - Length(B, A), 0))\n".into(),
    ]
}

#[test]
fn dsl_round_trip_is_identity() {
    for src in sample_sources() {
        let once = parse_construction(&src).unwrap();
        let printed = format_construction(&once.construction, &once.statement, once.mode);
        let twice = parse_construction(&printed).unwrap();
        assert_eq!(
            printed,
            format_construction(&twice.construction, &twice.statement, twice.mode),
            "source:\n{src}"
        );
    }
}
