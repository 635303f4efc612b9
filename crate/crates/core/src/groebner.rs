//! Buchberger's algorithm, normal-form reduction, reduced bases, ideal
//! membership, and elimination ideals.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use thiserror::Error;

use crate::poly::{Coeff, Monomial, MonomialOrder, Polynomial, Variable};

#[derive(Error, Debug, Clone, PartialEq)]
pub enum GroebnerError {
    #[error("budget exceeded after {pairs} pair reductions")]
    BudgetExceeded { pairs: u64 },
    #[error("zero polynomial input")]
    ZeroInput,
}

/// Resource limits for a basis computation. Exceeding either limit aborts
/// with [`GroebnerError::BudgetExceeded`]; the prover surfaces that as
/// UNKNOWN, never as a wrong verdict.
#[derive(Clone, Debug)]
pub struct Budget {
    pub max_pair_reductions: u64,
    pub deadline: Option<Instant>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_pair_reductions: 500_000,
            deadline: None,
        }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget {
            max_pair_reductions: u64::MAX,
            deadline: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct IdealGenerators<C> {
    pub generators: Vec<Polynomial<C>>,
    pub order: MonomialOrder,
}

#[derive(Clone, Debug)]
pub struct GroebnerBasis<C> {
    pub basis: Vec<Polynomial<C>>,
    pub order: MonomialOrder,
    pub reduced: bool,
}

impl<C: Coeff> GroebnerBasis<C> {
    /// True iff some basis element is a nonzero constant, i.e. 1 lies in the
    /// ideal.
    pub fn contains_one(&self) -> bool {
        self.basis.iter().any(|p| p.is_constant())
    }
}

/// S-polynomial: leading terms cancel by construction.
pub fn s_polynomial<C: Coeff>(
    f: &Polynomial<C>,
    g: &Polynomial<C>,
    order: &MonomialOrder,
) -> Result<Polynomial<C>, GroebnerError> {
    if f.is_zero() || g.is_zero() {
        return Err(GroebnerError::ZeroInput);
    }
    let (fm, fc) = f.leading_term(order).unwrap();
    let (gm, gc) = g.leading_term(order).unwrap();
    let l = fm.lcm(&gm);
    let a = f
        .mul_monomial(&fm.div_into(&l).unwrap())
        .div_scalar(&fc);
    let b = g
        .mul_monomial(&gm.div_into(&l).unwrap())
        .div_scalar(&gc);
    Ok(&a - &b)
}

/// Comparison context for the reduction kernel. Every monomial carries a
/// cached flat key (see [`MonomialOrder::sort_key`]); keys are componentwise
/// additive under monomial multiplication, so merges compare and combine
/// plain integer slices instead of re-running the order.
struct KeyCtx<'a> {
    order: &'a MonomialOrder,
    max_var: u32,
}

impl KeyCtx<'_> {
    fn key(&self, m: &Monomial) -> Vec<i64> {
        self.order.sort_key(m, self.max_var)
    }
}

fn add_keys(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

#[derive(Clone, Debug)]
struct Term<C> {
    m: Monomial,
    k: Vec<i64>,
    c: C,
}

/// Terms in strictly descending order under a fixed monomial order; the fast
/// internal representation for reduction.
#[derive(Clone, Debug)]
struct Sorted<C> {
    terms: Vec<Term<C>>,
}

impl<C: Coeff> Sorted<C> {
    fn from_poly(p: &Polynomial<C>, ctx: &KeyCtx) -> Self {
        Sorted {
            terms: p
                .sorted_terms(ctx.order)
                .into_iter()
                .map(|(m, c)| {
                    let k = ctx.key(&m);
                    Term { m, k, c }
                })
                .collect(),
        }
    }

    fn to_poly(&self) -> Polynomial<C> {
        Polynomial::from_terms(self.terms.iter().map(|t| (t.m.clone(), t.c.clone())))
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lead(&self) -> &Term<C> {
        &self.terms[0]
    }
}

/// `a - k * m * b` for sorted term lists, by merge; `mk` is the key of `m`.
fn sub_scaled<C: Coeff>(
    a: &[Term<C>],
    k: &C,
    m: &Monomial,
    mk: &[i64],
    b: &[Term<C>],
) -> Vec<Term<C>> {
    let mut out: Vec<Term<C>> = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0usize, 0usize);
    let mut bk = if b.is_empty() {
        Vec::new()
    } else {
        add_keys(&b[0].k, mk)
    };
    while i < a.len() && j < b.len() {
        // descending: the larger key goes first
        match a[i].k.as_slice().cmp(&bk) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let c = -(k.clone() * b[j].c.clone());
                let m2 = b[j].m.mul(m);
                j += 1;
                let k2 = if j < b.len() {
                    std::mem::replace(&mut bk, add_keys(&b[j].k, mk))
                } else {
                    std::mem::take(&mut bk)
                };
                out.push(Term { m: m2, k: k2, c });
            }
            Ordering::Equal => {
                let c = a[i].c.clone() - k.clone() * b[j].c.clone();
                i += 1;
                j += 1;
                let k2 = if j < b.len() {
                    std::mem::replace(&mut bk, add_keys(&b[j].k, mk))
                } else {
                    std::mem::take(&mut bk)
                };
                if !c.is_zero() {
                    out.push(Term {
                        m: a[i - 1].m.clone(),
                        k: k2,
                        c,
                    });
                }
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    while j < b.len() {
        out.push(Term {
            m: b[j].m.mul(m),
            k: add_keys(&b[j].k, mk),
            c: -(k.clone() * b[j].c.clone()),
        });
        j += 1;
    }
    out
}

/// Multivariate division remainder: no monomial of the result is divisible
/// by any basis leading monomial, and `p - result` lies in the ideal
/// generated by the basis.
pub fn normal_form<C: Coeff>(
    p: &Polynomial<C>,
    basis: &[Polynomial<C>],
    order: &MonomialOrder,
) -> Polynomial<C> {
    let max_var = basis
        .iter()
        .flat_map(|g| g.vars())
        .chain(p.vars())
        .map(|v| v.index())
        .max()
        .unwrap_or(1);
    let ctx = KeyCtx { order, max_var };
    let sorted: Vec<Sorted<C>> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| Sorted::from_poly(g, &ctx))
        .collect();
    let refs: Vec<&Sorted<C>> = sorted.iter().collect();
    normal_form_sorted(&Sorted::from_poly(p, &ctx), &refs, &ctx).to_poly()
}

fn normal_form_sorted<C: Coeff>(
    p: &Sorted<C>,
    basis: &[&Sorted<C>],
    ctx: &KeyCtx,
) -> Sorted<C> {
    normal_form_capped(p, basis, ctx, None).expect("unbounded reduction")
}

/// As [`normal_form_sorted`], but bails out with `None` once the deadline
/// passes; a single reduction can otherwise run far beyond any budget.
fn normal_form_capped<C: Coeff>(
    p: &Sorted<C>,
    basis: &[&Sorted<C>],
    ctx: &KeyCtx,
    deadline: Option<Instant>,
) -> Option<Sorted<C>> {
    let mut rem = p.terms.clone();
    let mut start = 0usize;
    let mut out: Vec<Term<C>> = Vec::new();
    let mut steps = 0u32;
    while start < rem.len() {
        steps += 1;
        if steps & 0x3f == 0 {
            if let Some(d) = deadline {
                if Instant::now() > d {
                    return None;
                }
            }
        }
        let head = rem[start].clone();
        // among all matching reducers prefer the shortest tail: less fill-in
        let mut best: Option<(&Sorted<C>, Monomial)> = None;
        for &g in basis {
            let gl = g.lead();
            if let Some(f) = gl.m.div_into(&head.m) {
                if best.as_ref().map_or(true, |(b, _)| g.terms.len() < b.terms.len()) {
                    best = Some((g, f));
                }
            }
        }
        match best {
            Some((g, f)) => {
                let k = head.c / g.lead().c.clone();
                let fk = ctx.key(&f);
                // the head cancels by construction; drop it on both sides
                rem = sub_scaled(&rem[start + 1..], &k, &f, &fk, &g.terms[1..]);
                start = 0;
            }
            None => {
                out.push(head);
                start += 1;
            }
        }
    }
    Some(Sorted { terms: out })
}

/// S-polynomial directly on sorted term lists; both cancelling heads are
/// skipped up front and the result stays sorted (the order is multiplicative).
fn s_poly_sorted<C: Coeff>(f: &Sorted<C>, g: &Sorted<C>, ctx: &KeyCtx) -> Sorted<C> {
    let fl = f.lead();
    let gl = g.lead();
    let l = fl.m.lcm(&gl.m);
    let fa = fl.m.div_into(&l).unwrap();
    let ga = gl.m.div_into(&l).unwrap();
    let fak = ctx.key(&fa);
    let gak = ctx.key(&ga);
    let a: Vec<Term<C>> = f.terms[1..]
        .iter()
        .map(|t| Term {
            m: t.m.mul(&fa),
            k: add_keys(&t.k, &fak),
            c: t.c.clone() / fl.c.clone(),
        })
        .collect();
    let k = C::one() / gl.c.clone();
    Sorted {
        terms: sub_scaled(&a, &k, &ga, &gak, &g.terms[1..]),
    }
}

/// Gebauer-Moeller pair update: install `g` as a new basis element,
/// generating only the pairs with `g` that survive the divisibility and
/// coprimality criteria, and discarding old pairs whose lcm the new lead
/// renders superfluous. Elements whose lead the new lead divides stop
/// serving as reducers and pair partners.
fn gm_update<C: Coeff>(
    basis: &mut Vec<Sorted<C>>,
    redundant: &mut Vec<bool>,
    pending: &mut BTreeMap<(Vec<i64>, (usize, usize)), Monomial>,
    ctx: &KeyCtx,
    g: Sorted<C>,
) {
    let t = basis.len();
    let lt = g.lead().m.clone();
    let cand: Vec<(usize, Monomial, bool)> = (0..t)
        .filter(|&i| !redundant[i])
        .map(|i| {
            let li = &basis[i].lead().m;
            let lcm = li.lcm(&lt);
            let coprime = lcm == li.mul(&lt);
            (i, lcm, coprime)
        })
        .collect();
    // keep a candidate only if no other candidate's lcm divides it (keeping
    // the earlier of an equal-lcm tie), then drop coprime survivors;
    // candidates dropped here are still allowed to eliminate others
    let mut keep = vec![true; cand.len()];
    for a in 0..cand.len() {
        for b in 0..cand.len() {
            if a == b || !cand[b].1.divides(&cand[a].1) {
                continue;
            }
            if cand[b].1 != cand[a].1 || b < a {
                keep[a] = false;
                break;
            }
        }
    }
    // old pairs whose lcm is a proper multiple of the new lead in both
    // coordinates are covered by the new pairs
    let stale: Vec<(Vec<i64>, (usize, usize))> = pending
        .iter()
        .filter(|((_, (i, j)), lcm)| {
            lt.divides(lcm)
                && basis[*i].lead().m.lcm(&lt) != **lcm
                && basis[*j].lead().m.lcm(&lt) != **lcm
        })
        .map(|(k, _)| k.clone())
        .collect();
    for k in stale {
        pending.remove(&k);
    }
    for (a, (i, lcm, coprime)) in cand.into_iter().enumerate() {
        if keep[a] && !coprime {
            pending.insert((ctx.key(&lcm), (i, t)), lcm);
        }
    }
    for i in 0..t {
        if !redundant[i] && lt.divides(&basis[i].lead().m) {
            redundant[i] = true;
        }
    }
    basis.push(g);
    redundant.push(false);
}

/// Reduced Groebner basis of the generated ideal under `input.order`.
///
/// Normal selection strategy: smallest lcm first, ties by input index. Pair
/// processing skips pairs by the coprime-leading-monomial criterion and the
/// chain criterion. Output is deterministic for a fixed input.
pub fn buchberger<C: Coeff>(
    input: &IdealGenerators<C>,
    budget: &Budget,
) -> Result<GroebnerBasis<C>, GroebnerError> {
    let order = &input.order;
    let max_var = input
        .generators
        .iter()
        .flat_map(|g| g.vars())
        .map(|v| v.index())
        .max()
        .unwrap_or(1);
    let ctx = KeyCtx { order, max_var };

    let mut basis: Vec<Sorted<C>> = Vec::new();
    for g in &input.generators {
        if !g.is_zero() {
            basis.push(Sorted::from_poly(&g.normalize(order), &ctx));
        }
    }

    // queue keyed by an order-equivalent integer key, so selection is a
    // cheap first-entry pop; pairs are pruned on insertion by the
    // Gebauer-Moeller criteria
    let mut pending: BTreeMap<(Vec<i64>, (usize, usize)), Monomial> = BTreeMap::new();
    let mut redundant: Vec<bool> = Vec::new();
    let gens = std::mem::take(&mut basis);
    for g in gens {
        gm_update(&mut basis, &mut redundant, &mut pending, &ctx, g);
    }

    let mut reductions: u64 = 0;
    while !pending.is_empty() {
        if let Some(deadline) = budget.deadline {
            if Instant::now() > deadline {
                return Err(GroebnerError::BudgetExceeded { pairs: reductions });
            }
        }
        // normal strategy: minimal lcm under the order, ties by index
        let key = pending.keys().next().cloned().unwrap();
        pending.remove(&key).unwrap();
        let (i, j) = key.1;

        reductions += 1;
        if reductions > budget.max_pair_reductions {
            return Err(GroebnerError::BudgetExceeded { pairs: reductions });
        }

        let s = s_poly_sorted(&basis[i], &basis[j], &ctx);
        let reducers: Vec<&Sorted<C>> = basis
            .iter()
            .enumerate()
            .filter(|&(k, _)| !redundant[k])
            .map(|(_, g)| g)
            .collect();
        let Some(mut r) = normal_form_capped(&s, &reducers, &ctx, budget.deadline) else {
            return Err(GroebnerError::BudgetExceeded { pairs: reductions });
        };
        if r.is_zero() {
            continue;
        }
        let lc = r.lead().c.clone();
        let d = C::canonical_divisor(&lc, r.terms.iter().map(|t| &t.c));
        if !d.is_one() {
            for t in r.terms.iter_mut() {
                t.c = t.c.clone() / d.clone();
            }
        }
        gm_update(&mut basis, &mut redundant, &mut pending, &ctx, r);
    }

    // minimize: drop any element whose lead is divisible by another's lead
    // (ties kept once), then tail-reduce each survivor against the rest
    let mut minimal: Vec<Sorted<C>> = Vec::new();
    'minimize: for (i, g) in basis.iter().enumerate() {
        for (j, h) in basis.iter().enumerate() {
            if i == j || !h.lead().m.divides(&g.lead().m) {
                continue;
            }
            if h.lead().m != g.lead().m || j < i {
                continue 'minimize;
            }
        }
        minimal.push(g.clone());
    }
    let mut reduced: Vec<Sorted<C>> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<&Sorted<C>> = minimal
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(k, g)| if k < i { &reduced[k] } else { g })
            .collect();
        let Some(r) = normal_form_capped(&minimal[i], &others, &ctx, budget.deadline) else {
            return Err(GroebnerError::BudgetExceeded { pairs: reductions });
        };
        reduced.push(r);
    }
    let mut polys: Vec<Polynomial<C>> = reduced
        .iter()
        .filter(|s| !s.is_zero())
        .map(|s| s.to_poly().normalize(order))
        .collect();
    polys.sort_by(|a, b| {
        order.compare(
            &a.leading_monomial(order).unwrap(),
            &b.leading_monomial(order).unwrap(),
        )
    });
    polys.dedup();

    Ok(GroebnerBasis {
        basis: polys,
        order: input.order.clone(),
        reduced: true,
    })
}

/// Generators of the contraction of the ideal to the variables outside
/// `eliminate`: the elements of a block-order Groebner basis free of the
/// eliminated variables. An empty result means the elimination ideal is {0}.
pub fn elimination_ideal<C: Coeff>(
    input: &IdealGenerators<C>,
    eliminate: &BTreeSet<Variable>,
    budget: &Budget,
) -> Result<Vec<Polynomial<C>>, GroebnerError> {
    let block = IdealGenerators {
        generators: input.generators.clone(),
        order: MonomialOrder::Block {
            eliminated: eliminate.clone(),
        },
    };
    let gb = buchberger(&block, budget)?;
    Ok(gb
        .basis
        .into_iter()
        .filter(|p| p.vars().is_disjoint(eliminate))
        .collect())
}

/// Block-order basis plus the eliminated slice, when the caller needs both
/// (the prover checks `contains_one` on the full basis first).
pub fn elimination_basis<C: Coeff>(
    generators: Vec<Polynomial<C>>,
    eliminate: &BTreeSet<Variable>,
    budget: &Budget,
) -> Result<(GroebnerBasis<C>, Vec<Polynomial<C>>), GroebnerError> {
    let input = IdealGenerators {
        generators,
        order: MonomialOrder::Block {
            eliminated: eliminate.clone(),
        },
    };
    let gb = buchberger(&input, budget)?;
    let elim = gb
        .basis
        .iter()
        .filter(|p| p.vars().is_disjoint(eliminate))
        .cloned()
        .collect();
    Ok((gb, elim))
}
