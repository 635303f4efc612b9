use std::cmp::Ordering;
use std::collections::BTreeSet;

use super::{Monomial, Variable};

/// A multiplicative total order on monomials with 1 minimal.
///
/// `Block` is an elimination order: any monomial containing an eliminated
/// variable exceeds every monomial free of them; within each block the
/// comparison is degree-reverse-lexicographic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MonomialOrder {
    /// Lexicographic, v1 > v2 > ...
    Lex,
    /// Degree-reverse-lexicographic, v1 > v2 > ...
    DegRevLex,
    /// Eliminated block first (degrevlex within), then degrevlex on the rest.
    Block { eliminated: BTreeSet<Variable> },
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => lex_cmp(a, b),
            MonomialOrder::DegRevLex => degrevlex_cmp(a, b),
            MonomialOrder::Block { eliminated } => {
                filtered_degrevlex(a, b, &|v| eliminated.contains(&v))
                    .then_with(|| filtered_degrevlex(a, b, &|v| !eliminated.contains(&v)))
            }
        }
    }
}

impl MonomialOrder {
    /// Flat integer key whose lexicographic comparison agrees with this
    /// order, for callers that sort or queue many monomials. `max_var` must
    /// bound every variable index that will ever be compared.
    pub fn sort_key(&self, m: &Monomial, max_var: u32) -> Vec<i64> {
        let dense = |keep: &dyn Fn(Variable) -> bool| {
            let mut v = vec![0i64; max_var as usize + 1];
            let mut deg = 0i64;
            for &(var, e) in m.exps() {
                if keep(var) {
                    // negated, scanned from the highest variable down:
                    // revlex prefers the smaller exponent at the first
                    // difference
                    v[(max_var - var.index()) as usize + 1] = -(e as i64);
                    deg += e as i64;
                }
            }
            v[0] = deg;
            v
        };
        match self {
            MonomialOrder::Lex => {
                let mut v = vec![0i64; max_var as usize];
                for &(var, e) in m.exps() {
                    v[var.index() as usize - 1] = e as i64;
                }
                v
            }
            MonomialOrder::DegRevLex => dense(&|_| true),
            MonomialOrder::Block { eliminated } => {
                let mut v = dense(&|var| eliminated.contains(&var));
                v.extend(dense(&|var| !eliminated.contains(&var)));
                v
            }
        }
    }
}

/// v1 > v2 > ...: the first variable (ascending index) with differing
/// exponent decides; larger exponent wins.
fn lex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    let (ea, eb) = (a.exps(), b.exps());
    let (mut i, mut j) = (0, 0);
    while i < ea.len() || j < eb.len() {
        match (ea.get(i), eb.get(j)) {
            (Some(&(va, xa)), Some(&(vb, xb))) => match va.cmp(&vb) {
                Ordering::Less => return Ordering::Greater, // a has the higher var
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => {
                    match xa.cmp(&xb) {
                        Ordering::Equal => {}
                        o => return o,
                    }
                    i += 1;
                    j += 1;
                }
            },
            (Some(_), None) => return Ordering::Greater,
            (None, Some(_)) => return Ordering::Less,
            (None, None) => unreachable!(),
        }
    }
    Ordering::Equal
}

/// Total degree first; ties broken reverse-lexicographically: scanning from
/// the highest variable index down, the monomial with the smaller exponent
/// at the first difference is the larger one.
fn degrevlex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    match a.total_degree().cmp(&b.total_degree()) {
        Ordering::Equal => {}
        o => return o,
    }
    let (ea, eb) = (a.exps(), b.exps());
    let (mut i, mut j) = (ea.len(), eb.len());
    while i > 0 || j > 0 {
        match (i.checked_sub(1).map(|k| ea[k]), j.checked_sub(1).map(|k| eb[k])) {
            (Some((va, xa)), Some((vb, xb))) => match va.cmp(&vb) {
                // a has an exponent at a higher variable than b does here:
                // a is smaller in revlex.
                Ordering::Greater => return Ordering::Less,
                Ordering::Less => return Ordering::Greater,
                Ordering::Equal => {
                    match xa.cmp(&xb) {
                        Ordering::Equal => {}
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                    }
                    i -= 1;
                    j -= 1;
                }
            },
            (Some(_), None) => return Ordering::Less,
            (None, Some(_)) => return Ordering::Greater,
            (None, None) => unreachable!(),
        }
    }
    Ordering::Equal
}

/// Degrevlex on the restriction to the variables selected by `keep`,
/// without building restricted monomials.
fn filtered_degrevlex(a: &Monomial, b: &Monomial, keep: &dyn Fn(Variable) -> bool) -> Ordering {
    let deg = |m: &Monomial| {
        m.exps()
            .iter()
            .filter(|&&(v, _)| keep(v))
            .map(|&(_, e)| e)
            .sum::<u32>()
    };
    match deg(a).cmp(&deg(b)) {
        Ordering::Equal => {}
        o => return o,
    }
    let mut ia = a.exps().iter().rev().filter(|&&(v, _)| keep(v)).peekable();
    let mut ib = b.exps().iter().rev().filter(|&&(v, _)| keep(v)).peekable();
    loop {
        match (ia.peek(), ib.peek()) {
            (Some(&&(va, xa)), Some(&&(vb, xb))) => match va.cmp(&vb) {
                Ordering::Greater => return Ordering::Less,
                Ordering::Less => return Ordering::Greater,
                Ordering::Equal => match xa.cmp(&xb) {
                    Ordering::Equal => {
                        ia.next();
                        ib.next();
                    }
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                },
            },
            (Some(_), None) => return Ordering::Less,
            (None, Some(_)) => return Ordering::Greater,
            (None, None) => return Ordering::Equal,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: u32) -> Variable {
        Variable::new(i)
    }

    fn m(pairs: &[(u32, u32)]) -> Monomial {
        Monomial::from_pairs(pairs.iter().map(|&(i, e)| (v(i), e)))
    }

    #[test]
    fn lex_ignores_degree() {
        // x vs y^2 with x = v1 > y = v2
        assert_eq!(
            MonomialOrder::Lex.compare(&m(&[(1, 1)]), &m(&[(2, 2)])),
            Ordering::Greater
        );
    }

    #[test]
    fn degrevlex_tie_break() {
        // x^2 y vs x y^2: equal total degree, smaller exponent in the last
        // variable wins
        assert_eq!(
            MonomialOrder::DegRevLex.compare(&m(&[(1, 2), (2, 1)]), &m(&[(1, 1), (2, 2)])),
            Ordering::Greater
        );
    }

    #[test]
    fn block_elimination_axiom() {
        // t vs x^100 where t is eliminated
        let order = MonomialOrder::Block {
            eliminated: [v(3)].into_iter().collect(),
        };
        assert_eq!(order.compare(&m(&[(3, 1)]), &m(&[(1, 100)])), Ordering::Greater);
    }

    #[test]
    fn one_is_minimal() {
        for order in [
            MonomialOrder::Lex,
            MonomialOrder::DegRevLex,
            MonomialOrder::Block {
                eliminated: [v(1)].into_iter().collect(),
            },
        ] {
            assert_eq!(order.compare(&Monomial::one(), &m(&[(2, 1)])), Ordering::Less);
            assert_eq!(order.compare(&Monomial::one(), &Monomial::one()), Ordering::Equal);
        }
    }

    #[test]
    fn multiplicative() {
        let order = MonomialOrder::DegRevLex;
        let a = m(&[(1, 2)]);
        let b = m(&[(2, 1), (3, 1)]);
        let n = m(&[(1, 1), (3, 2)]);
        let c = order.compare(&a, &b);
        assert_eq!(order.compare(&a.mul(&n), &b.mul(&n)), c);
    }
}
