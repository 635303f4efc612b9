//! Multivariate gcd via primitive subresultant-style remainder sequences,
//! recursing on the variable of highest index, and the squarefree part built
//! on it. Adequate for the low-variable-count gcds arising in eliminant
//! normalization.

use super::{Coeff, Monomial, MonomialOrder, PolyError, Polynomial, Variable};

/// gcd of `p` and `q` up to a scalar; the result is content-normalized with
/// a positive leading coefficient under degrevlex.
pub fn poly_gcd<C: Coeff>(p: &Polynomial<C>, q: &Polynomial<C>) -> Polynomial<C> {
    let order = MonomialOrder::DegRevLex;
    if p.is_zero() {
        return q.normalize(&order);
    }
    if q.is_zero() {
        return p.normalize(&order);
    }
    let mut vars = p.vars();
    vars.extend(q.vars());
    let Some(&top) = vars.iter().next_back() else {
        // both nonzero constants
        return Polynomial::one();
    };
    if p.degree_in(top) == 0 && q.degree_in(top) == 0 {
        // top variable occurs in neither after all; fall through by
        // removing it from consideration is unnecessary since vars() only
        // reports occurring variables
        unreachable!("top variable must occur in one of the inputs");
    }

    let pu = to_univar(p, top);
    let qu = to_univar(q, top);
    let cont_p = coeff_content(&pu);
    let cont_q = coeff_content(&qu);
    let cont = poly_gcd(&cont_p, &cont_q);
    let pp = divide_coeffs(&pu, &cont_p);
    let qp = divide_coeffs(&qu, &cont_q);

    let (mut a, mut b) = if pp.len() >= qp.len() { (pp, qp) } else { (qp, pp) };
    loop {
        if is_zero_univar(&b) {
            break;
        }
        let r = pseudo_rem(&a, &b);
        a = b;
        if is_zero_univar(&r) {
            break;
        }
        let rc = coeff_content(&r);
        b = divide_coeffs(&r, &rc);
    }
    let g = from_univar(&a, top);
    (&g * &cont).normalize(&order)
}

/// Product of the distinct irreducible factors of the primitive part of `p`:
/// p divided by the gcd of p with all of its partial derivatives.
pub fn squarefree_part<C: Coeff>(p: &Polynomial<C>) -> Result<Polynomial<C>, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let order = MonomialOrder::DegRevLex;
    let mut g = p.clone();
    for v in p.vars() {
        let d = p.derivative(v);
        if !d.is_zero() {
            g = poly_gcd(&g, &d);
        }
    }
    let sf = p
        .divide_exact(&g)?
        .expect("gcd of p and its derivatives divides p");
    Ok(sf.normalize(&order))
}

/// `p` as a dense coefficient vector in `x` (index = degree); coefficients
/// are polynomials free of `x`.
fn to_univar<C: Coeff>(p: &Polynomial<C>, x: Variable) -> Vec<Polynomial<C>> {
    let d = p.degree_in(x) as usize;
    let mut coeffs = vec![Polynomial::zero(); d + 1];
    for (m, c) in p.terms() {
        let e = m.degree_in(x) as usize;
        let rest = Monomial::from_pairs(
            m.exps().iter().filter(|&&(v, _)| v != x).cloned(),
        );
        coeffs[e].add_term(rest, c.clone());
    }
    coeffs
}

fn from_univar<C: Coeff>(coeffs: &[Polynomial<C>], x: Variable) -> Polynomial<C> {
    let mut out = Polynomial::zero();
    for (e, c) in coeffs.iter().enumerate() {
        let xe = Polynomial::term(C::one(), Monomial::var(x).pow(e as u32));
        out = &out + &(c * &xe);
    }
    out
}

fn is_zero_univar<C: Coeff>(coeffs: &[Polynomial<C>]) -> bool {
    coeffs.iter().all(|c| c.is_zero())
}

fn trim<C: Coeff>(mut coeffs: Vec<Polynomial<C>>) -> Vec<Polynomial<C>> {
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    coeffs
}

/// gcd of the coefficient polynomials (the content over the base ring).
fn coeff_content<C: Coeff>(coeffs: &[Polynomial<C>]) -> Polynomial<C> {
    let mut g = Polynomial::zero();
    for c in coeffs {
        if !c.is_zero() {
            g = poly_gcd(&g, c);
            if g.is_constant() {
                break;
            }
        }
    }
    if g.is_zero() {
        Polynomial::one()
    } else {
        g
    }
}

fn divide_coeffs<C: Coeff>(coeffs: &[Polynomial<C>], d: &Polynomial<C>) -> Vec<Polynomial<C>> {
    coeffs
        .iter()
        .map(|c| {
            if c.is_zero() {
                Polynomial::zero()
            } else {
                c.divide_exact(d)
                    .expect("nonzero divisor")
                    .expect("content divides coefficients")
            }
        })
        .collect()
}

/// Pseudo-remainder of `a` by `b` in the top variable.
fn pseudo_rem<C: Coeff>(a: &[Polynomial<C>], b: &[Polynomial<C>]) -> Vec<Polynomial<C>> {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let lb = b[db].clone();
    while !r.is_empty() && r.len() - 1 >= db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        // r := lb*r - lr * x^(dr-db) * b
        let mut next = vec![Polynomial::zero(); dr + 1];
        for (i, c) in r.iter().enumerate() {
            next[i] = c * &lb;
        }
        for (i, c) in b.iter().enumerate() {
            let idx = i + dr - db;
            next[idx] = &next[idx] - &(c * &lr);
        }
        r = trim(next);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{QPoly, Variable};

    fn v(i: u32) -> Variable {
        Variable::new(i)
    }

    fn x() -> QPoly {
        QPoly::var(v(1))
    }

    fn y() -> QPoly {
        QPoly::var(v(2))
    }

    #[test]
    fn gcd_of_products() {
        let f = &(&x() - &y()) * &(&x() + &y());
        let g = &(&x() - &y()) * &x();
        let d = poly_gcd(&f, &g);
        assert_eq!(d, (&x() - &y()).normalize(&MonomialOrder::DegRevLex));
    }

    #[test]
    fn squarefree_removes_repeats() {
        // x^2 y -> x y
        let p = &(&x() * &x()) * &y();
        assert_eq!(squarefree_part(&p).unwrap(), &x() * &y());
    }

    #[test]
    fn squarefree_multiplicity_collapse() {
        // (x - y)^3 (x + y) -> x^2 - y^2
        let d = &x() - &y();
        let s = &x() + &y();
        let p = &(&(&d * &d) * &d) * &s;
        let sf = squarefree_part(&p).unwrap();
        let expect = (&d * &s).normalize(&MonomialOrder::DegRevLex);
        assert_eq!(sf, expect);
    }

    #[test]
    fn squarefree_idempotent() {
        let p = &(&x() * &y()) + &QPoly::one();
        assert_eq!(squarefree_part(&p).unwrap(), p);
    }

    #[test]
    fn zero_polynomial_errors() {
        assert!(squarefree_part(&QPoly::zero()).is_err());
    }
}
