//! Pinned reduced bases plus randomized ideal-membership checks.

use std::collections::BTreeSet;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use geoprove_core::groebner::{
    buchberger, elimination_ideal, normal_form, Budget, IdealGenerators,
};
use geoprove_core::poly::{Monomial, MonomialOrder, Variable};
use geoprove_core::{rint, QPoly};

fn v(i: u32) -> QPoly {
    QPoly::var(Variable::new(i))
}

#[test]
fn lex_basis_of_twisted_pair() {
    // lex ranks lower indices higher, so x = v1 > y = v2
    let x = v(1);
    let y = v(2);
    let gens = IdealGenerators {
        generators: vec![&(&x * &x) - &y, &(&x * &y) - &QPoly::one()],
        order: MonomialOrder::Lex,
    };
    let gb = buchberger(&gens, &Budget::default()).unwrap();
    let want = vec![&(&(&y * &y) * &y) - &QPoly::one(), &x - &(&y * &y)];
    assert_eq!(gb.basis, want);
}

#[test]
fn elimination_of_x_from_parabola_and_axis()
{
    let x = v(2);
    let y = v(1);
    let eliminate: BTreeSet<Variable> = [Variable::new(2)].into_iter().collect();
    let input = IdealGenerators {
        generators: vec![&(&x * &x) - &y, x.clone()],
        order: MonomialOrder::Lex,
    };
    let elim = elimination_ideal(&input, &eliminate, &Budget::default()).unwrap();
    assert_eq!(elim, vec![y]);
}

#[test]
fn inconsistent_system_collapses_to_one() {
    let x = v(1);
    let gens = IdealGenerators {
        generators: vec![x.clone(), &QPoly::one() - &x],
        order: MonomialOrder::DegRevLex,
    };
    let gb = buchberger(&gens, &Budget::default()).unwrap();
    assert_eq!(gb.basis, vec![QPoly::one()]);
    assert!(gb.contains_one());
}

fn random_poly(rng: &mut ChaCha8Rng, nvars: u32, max_deg: u32, max_terms: usize) -> QPoly {
    let nterms = rng.gen_range(1..=max_terms);
    let mut p = QPoly::zero();
    for _ in 0..nterms {
        let mut budget = max_deg;
        let mut pairs: Vec<(Variable, u32)> = Vec::new();
        for i in 1..=nvars {
            let e = rng.gen_range(0..=budget);
            budget -= e;
            if e > 0 {
                pairs.push((Variable::new(i), e));
            }
        }
        let c = rng.gen_range(-5i64..=5);
        if c != 0 {
            p.add_term(Monomial::from_pairs(pairs), rint(c));
        }
    }
    p
}

/// A random combination of the generators must reduce to zero modulo the
/// basis, and reduction must be idempotent on arbitrary probes.
#[test]
fn random_ideal_membership() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1dea);
    let orders = [MonomialOrder::Lex, MonomialOrder::DegRevLex];
    for round in 0..100 {
        let nvars = rng.gen_range(1..=3);
        let ngens = rng.gen_range(1..=3);
        let mut generators = Vec::new();
        for _ in 0..ngens {
            let g = random_poly(&mut rng, nvars, 3, 4);
            if !g.is_zero() {
                generators.push(g);
            }
        }
        if generators.is_empty() {
            continue;
        }
        let order = orders[round % 2].clone();
        let input = IdealGenerators {
            generators: generators.clone(),
            order: order.clone(),
        };
        let gb = match buchberger(&input, &Budget::default()) {
            Ok(gb) => gb,
            Err(e) => panic!("round {round}: {e}"),
        };

        // known member: sum of multiplier * generator
        let mut member = QPoly::zero();
        for g in &generators {
            let h = random_poly(&mut rng, nvars, 2, 3);
            member = &member + &(&h * g);
        }
        let r = normal_form(&member, &gb.basis, &order);
        assert!(r.is_zero(), "round {round}: member did not reduce to zero");

        // probe: p - NF(p) is always a member, and NF is idempotent
        let probe = random_poly(&mut rng, nvars, 3, 4);
        let nf = normal_form(&probe, &gb.basis, &order);
        assert_eq!(normal_form(&nf, &gb.basis, &order), nf, "round {round}");
        let diff = &probe - &nf;
        assert!(
            normal_form(&diff, &gb.basis, &order).is_zero(),
            "round {round}: p - NF(p) not in the ideal"
        );
    }
}
