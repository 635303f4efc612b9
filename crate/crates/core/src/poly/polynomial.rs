use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use super::{Coeff, Monomial, MonomialOrder, Variable};

#[derive(Error, Debug, Clone, PartialEq)]
pub enum PolyError {
    #[error("no leading term: zero polynomial")]
    NoLeadingTerm,
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("missing variable {0} in assignment")]
    MissingVariable(Variable),
}

/// Sparse multivariate polynomial in canonical form: no zero coefficients
/// are stored, so equal polynomials have identical term maps. The zero
/// polynomial is the empty map.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Polynomial<C> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coeff> Polynomial<C> {
    pub fn zero() -> Self {
        Polynomial { terms: BTreeMap::new() }
    }

    pub fn constant(c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Polynomial { terms }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn var(v: Variable) -> Self {
        Self::term(C::one(), Monomial::var(v))
    }

    pub fn term(c: C, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant check.
    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&C> {
        self.terms.get(m)
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn vars(&self) -> BTreeSet<Variable> {
        self.terms.keys().flat_map(|m| m.vars()).collect()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: Variable) -> u32 {
        self.terms.keys().map(|m| m.degree_in(v)).max().unwrap_or(0)
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Result<(Monomial, C), PolyError> {
        let mut best: Option<&Monomial> = None;
        for m in self.terms.keys() {
            best = Some(match best {
                None => m,
                Some(b) => {
                    if order.compare(m, b) == std::cmp::Ordering::Greater {
                        m
                    } else {
                        b
                    }
                }
            });
        }
        let m = best.ok_or(PolyError::NoLeadingTerm)?;
        Ok((m.clone(), self.terms[m].clone()))
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Result<Monomial, PolyError> {
        Ok(self.leading_term(order)?.0)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn div_scalar(&self, c: &C) -> Self {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.clone() / c.clone()))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Integer-content-1, positive-leading-coefficient representative of the
    /// scalar multiples of `self` (canonical generator form).
    pub fn normalize(&self, order: &MonomialOrder) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let (_, lead) = self.leading_term(order).unwrap();
        let d = C::canonical_divisor(&lead, self.terms.values());
        if d.is_one() {
            return self.clone();
        }
        self.div_scalar(&d)
    }

    /// Exact division: `Some(r)` with `self = q * r` when `q` divides
    /// exactly, `None` otherwise.
    pub fn divide_exact(&self, q: &Self) -> Result<Option<Self>, PolyError> {
        if q.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let order = MonomialOrder::DegRevLex;
        let (qlm, qlc) = q.leading_term(&order).unwrap();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while !rem.is_zero() {
            let (rlm, rlc) = rem.leading_term(&order).unwrap();
            let Some(m) = qlm.div_into(&rlm) else {
                return Ok(None);
            };
            let c = rlc / qlc.clone();
            let t = Self::term(c, m);
            rem = &rem - &(&t * q);
            quot = &quot + &t;
        }
        Ok(Some(quot))
    }

    /// Exact substitution value. Errors name the first missing variable.
    pub fn evaluate(&self, assignment: &BTreeMap<Variable, C>) -> Result<C, PolyError> {
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.exps() {
                let val = assignment
                    .get(v)
                    .ok_or(PolyError::MissingVariable(*v))?;
                for _ in 0..*e {
                    t = t * val.clone();
                }
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// Substitute polynomials for variables; variables absent from the map
    /// are left alone.
    pub fn substitute(&self, map: &BTreeMap<Variable, Polynomial<C>>) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut t = Self::constant(c.clone());
            for (v, e) in m.exps() {
                match map.get(v) {
                    Some(p) => t = &t * &p.pow(*e),
                    None => t = &t * &Self::term(C::one(), Monomial::var(*v).pow(*e)),
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Substitute constants for variables (partial evaluation).
    pub fn substitute_consts(&self, map: &BTreeMap<Variable, C>) -> Self {
        let poly_map: BTreeMap<Variable, Polynomial<C>> = map
            .iter()
            .map(|(v, c)| (*v, Self::constant(c.clone())))
            .collect();
        self.substitute(&poly_map)
    }

    pub fn derivative(&self, v: Variable) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.degree_in(v);
            if e == 0 {
                continue;
            }
            let pairs: Vec<(Variable, u32)> = m
                .exps()
                .iter()
                .map(|&(w, k)| if w == v { (w, k - 1) } else { (w, k) })
                .collect();
            let factor = C::from_u32(e).expect("small integer");
            out.add_term(Monomial::from_pairs(pairs), c.clone() * factor);
        }
        out
    }

    /// Sum of the absolute values of the term contributions under `f64`
    /// evaluation; used to scale numeric residuals.
    pub fn eval_f64_with_scale(&self, assignment: &BTreeMap<Variable, f64>) -> Option<(f64, f64)> {
        let mut acc = 0.0;
        let mut scale = 0.0;
        for (m, c) in &self.terms {
            let mut t = c.to_f64_lossy();
            for (v, e) in m.exps() {
                let val = assignment.get(v)?;
                t *= val.powi(*e as i32);
            }
            acc += t;
            scale += t.abs();
        }
        Some((acc, scale))
    }

    /// Terms sorted descending under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(Monomial, C)> {
        let mut v: Vec<(Monomial, C)> =
            self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        v.sort_by(|a, b| order.compare(&b.0, &a.0));
        v
    }

    /// Rendering in the log style: explicit `*` products, `^` powers, terms
    /// descending under `order`, e.g. `-1*v7*v6+v8*v5+...`.
    pub fn render(&self, order: &MonomialOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.sorted_terms(order).iter().enumerate() {
            if i > 0 {
                out.push('+');
            }
            if m.is_one() {
                out.push_str(&format!("{c}"));
            } else if c.is_one() {
                out.push_str(&format!("{m}"));
            } else if (c.clone() + C::one()).is_zero() {
                out.push_str(&format!("-1*{m}"));
            } else {
                out.push_str(&format!("{c}*{m}"));
            }
        }
        out
    }
}

impl<C: Coeff> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&MonomialOrder::DegRevLex))
    }
}

impl<C: Coeff> Add for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: Self) -> Polynomial<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<C: Coeff> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: Self) -> Polynomial<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<C: Coeff> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl<C: Coeff> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: Self) -> Polynomial<C> {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, rint, QPoly, Rat};

    fn v(i: u32) -> QPoly {
        QPoly::var(Variable::new(i))
    }

    #[test]
    fn add_cancels() {
        let x = v(1);
        let y = v(2);
        let sum = &(&x + &y) + &(&x - &y);
        assert_eq!(sum, x.scale(&rint(2)));
    }

    #[test]
    fn difference_of_squares() {
        let x = v(1);
        let y = v(2);
        let prod = &(&x - &y) * &(&x + &y);
        assert_eq!(prod, &(&x * &x) - &(&y * &y));
    }

    #[test]
    fn mul_by_zero_absorbs() {
        let p = &(&v(1) * &v(2)) + &QPoly::constant(rat(3, 7));
        assert_eq!(&p * &QPoly::zero(), QPoly::zero());
    }

    #[test]
    fn leading_term_lex() {
        // x^2 + y^3 under lex x>y
        let p = &v(1).pow(2) + &v(2).pow(3);
        let (m, c) = p.leading_term(&MonomialOrder::Lex).unwrap();
        assert_eq!(m, Monomial::var(Variable::new(1)).pow(2));
        assert_eq!(c, rint(1));
    }

    #[test]
    fn leading_term_degrevlex_tie() {
        // x^2 y + x y^2: equal degree, x^2 y wins
        let p = &(&v(1).pow(2) * &v(2)) + &(&v(1) * &v(2).pow(2));
        let (m, _) = p.leading_term(&MonomialOrder::DegRevLex).unwrap();
        assert_eq!(
            m,
            Monomial::from_pairs([(Variable::new(1), 2), (Variable::new(2), 1)])
        );
    }

    #[test]
    fn leading_term_single_and_zero() {
        let p = v(2).scale(&rint(5));
        let (m, c) = p.leading_term(&MonomialOrder::Lex).unwrap();
        assert_eq!((m, c), (Monomial::var(Variable::new(2)), rint(5)));
        assert_eq!(
            QPoly::zero().leading_term(&MonomialOrder::Lex),
            Err(PolyError::NoLeadingTerm)
        );
    }

    #[test]
    fn divide_exact_factorization() {
        let x = v(1);
        let y = v(2);
        let p = &(&x * &x) - &(&y * &y);
        let q = &x - &y;
        assert_eq!(p.divide_exact(&q).unwrap(), Some(&x + &y));
    }

    #[test]
    fn divide_exact_non_divisible() {
        let p = &(&v(1) * &v(1)) + &QPoly::one();
        let q = &v(1) - &QPoly::one();
        assert_eq!(p.divide_exact(&q).unwrap(), None);
    }

    #[test]
    fn divide_exact_by_zero_errors() {
        assert_eq!(
            v(1).divide_exact(&QPoly::zero()),
            Err(PolyError::DivisionByZero)
        );
    }

    #[test]
    fn divide_exact_condition_factor() {
        // (v4^2 + v3^2)^2 * (-v5*v4 + v6*v3) divided by v4^2 + v3^2
        let d2 = &(&v(4) * &v(4)) + &(&v(3) * &v(3));
        let coll = &(&v(6) * &v(3)) - &(&v(5) * &v(4));
        let p = &d2.pow(2) * &coll;
        assert_eq!(p.divide_exact(&d2).unwrap(), Some(&d2 * &coll));
    }

    #[test]
    fn evaluate_simple() {
        let p = &(&v(1) * &v(1)) + &v(2);
        let a = BTreeMap::from([
            (Variable::new(1), rint(2)),
            (Variable::new(2), rint(3)),
        ]);
        assert_eq!(p.evaluate(&a).unwrap(), rint(7));
    }

    #[test]
    fn evaluate_collinear_points_vanish() {
        // collinearity of (x1,y1),(x2,y2),(x3,y3) at (1,1),(2,2),(3,3)
        let det = &(&(&v(3) - &v(1)) * &(&v(6) - &v(2)))
            - &(&(&v(4) - &v(2)) * &(&v(5) - &v(1)));
        let a: BTreeMap<Variable, Rat> = [1i64, 1, 2, 2, 3, 3]
            .into_iter()
            .enumerate()
            .map(|(i, x)| (Variable::new(i as u32 + 1), rint(x)))
            .collect();
        assert_eq!(det.evaluate(&a).unwrap(), rint(0));
    }

    #[test]
    fn evaluate_zero_and_missing() {
        assert_eq!(QPoly::zero().evaluate(&BTreeMap::new()).unwrap(), rint(0));
        assert_eq!(
            v(2).evaluate(&BTreeMap::new()),
            Err(PolyError::MissingVariable(Variable::new(2)))
        );
    }

    #[test]
    fn normalize_clears_content_and_sign() {
        let order = MonomialOrder::DegRevLex;
        let p = &v(1).scale(&rat(-4, 6)) + &QPoly::constant(rat(-2, 3));
        let n = p.normalize(&order);
        let (_, lc) = n.leading_term(&order).unwrap();
        assert_eq!(lc, rint(1));
        assert_eq!(n, &v(1) + &QPoly::one());
    }
}
