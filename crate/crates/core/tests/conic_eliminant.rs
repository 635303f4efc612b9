//! The focal-length elimination behind conic incidence.
//!
//! Eliminating the four length auxiliaries from
//!   { l1 + l2 - l3 - l4,  l_i^2 - d_i }
//! must produce a single generator in the squared distances whose lift
//! (d_i -> l_i^2) is exactly the product of the eight sign combinations
//! l1 +/- l2 +/- l3 +/- l4.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use geoprove_core::groebner::{elimination_basis, Budget};
use geoprove_core::poly::Variable;
use geoprove_core::translate::{conic_incidence_poly, conic_sum_factors};
use geoprove_core::QPoly;

#[test]
fn length_elimination_recovers_the_eight_factor_product() {
    let started = Instant::now();

    let l: Vec<Variable> = (1..=4).map(Variable::new).collect();
    let d: Vec<Variable> = (5..=8).map(Variable::new).collect();
    let lv: Vec<QPoly> = l.iter().map(|&v| QPoly::var(v)).collect();

    let mut gens = vec![&(&(&lv[0] + &lv[1]) - &lv[2]) - &lv[3]];
    for i in 0..4 {
        gens.push(&(&lv[i] * &lv[i]) - &QPoly::var(d[i]));
    }

    let eliminate: BTreeSet<Variable> = l.iter().cloned().collect();
    let (_gb, elim) = elimination_basis(gens, &eliminate, &Budget::unlimited()).unwrap();
    assert_eq!(elim.len(), 1, "expected a principal elimination ideal");
    let g = &elim[0];

    // lift back to the length ring
    let squares: BTreeMap<Variable, QPoly> = d
        .iter()
        .zip(lv.iter())
        .map(|(&dv, lp)| (dv, lp * lp))
        .collect();
    let lifted = g.substitute(&squares);

    let factors = conic_sum_factors([l[0], l[1], l[2], l[3]]);
    assert_eq!(factors.len(), 8);
    let mut product = QPoly::one();
    for f in &factors {
        let q = lifted.divide_exact(f).unwrap();
        assert!(q.is_some(), "lifted eliminant not divisible by {f}");
        product = &product * f;
    }
    let whole = lifted.divide_exact(&product).unwrap();
    assert!(
        whole.is_some_and(|q| q.is_constant()),
        "lifted eliminant is not a scalar multiple of the factor product"
    );

    // and it agrees with the closed form used on the statement side
    let d2s = [
        QPoly::var(d[0]),
        QPoly::var(d[1]),
        QPoly::var(d[2]),
        QPoly::var(d[3]),
    ];
    let closed = conic_incidence_poly(&d2s);
    let ratio = g.divide_exact(&closed).unwrap();
    assert!(ratio.is_some_and(|q| q.is_constant()));

    assert!(
        started.elapsed() < Duration::from_secs(1),
        "elimination took {:?}",
        started.elapsed()
    );
}
