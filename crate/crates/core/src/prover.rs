//! The decision pipeline: coordinate fixing, thesis denial, elimination,
//! verdict, and extraction of non-degeneracy conditions.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::time::{Duration, Instant};

use num_traits::Zero;
use thiserror::Error;

use crate::geomodel::{Construction, ProofMode, Statement};
use crate::groebner::{elimination_basis, Budget, GroebnerError};
use crate::poly::{squarefree_part, MonomialOrder, VarRole, Variable};
use crate::translate::{TranslateError, Translated, Translator};
use crate::{QPoly, Rat};

#[derive(Error, Debug, Clone, PartialEq)]
pub enum ProverError {
    #[error(transparent)]
    Translate(#[from] TranslateError),
}

#[derive(Clone, Debug)]
pub struct ProverConfig {
    pub max_pair_reductions: u64,
    pub timeout: Option<Duration>,
    /// Also place the second free point on the x-axis.
    pub fix_second_point: bool,
    pub mode: ProofMode,
}

impl Default for ProverConfig {
    fn default() -> Self {
        ProverConfig {
            max_pair_reductions: 500_000,
            timeout: Some(Duration::from_secs(60)),
            fix_second_point: false,
            mode: ProofMode::Prove,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    True,
    False,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::True => write!(f, "true"),
            Verdict::False => write!(f, "false"),
            Verdict::Unknown => write!(f, "unknown"),
        }
    }
}

/// A recognized non-degeneracy condition; the statement holds whenever none
/// of these degeneracies occurs.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Ndg {
    AreEqual(String, String),
    AreCollinear(String, String, String),
    ArePerpendicular(String, String, String, String),
    /// Unrecognized residual, rendered as a polynomial in free coordinates.
    Raw(String),
}

impl fmt::Display for Ndg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ndg::AreEqual(a, b) => write!(f, "AreEqual[{a},{b}]"),
            Ndg::AreCollinear(a, b, c) => write!(f, "AreCollinear[{a},{b},{c}]"),
            Ndg::ArePerpendicular(a, b, c, d) => {
                write!(f, "ArePerpendicular[{a}{b},{c}{d}]")
            }
            Ndg::Raw(p) => write!(f, "{p}"),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct ProverStats {
    /// Distinct variables in the denied system, per conjunct.
    pub variables: Vec<usize>,
    /// Eliminated (dependent and auxiliary) variable counts, per conjunct.
    pub dependent: Vec<usize>,
    pub basis_sizes: Vec<usize>,
    pub hypothesis_count: usize,
}

#[derive(Clone, Debug)]
pub struct ProverResult {
    pub verdict: Verdict,
    pub ndg: Vec<Ndg>,
    pub elapsed_ms: u128,
    pub stats: ProverStats,
    pub log: Vec<String>,
}

/// Substitution fixing the first free point to the origin (and optionally
/// the second free point to the x-axis). A construction without free points
/// gets an empty substitution.
pub fn fix_coordinates(cons: &Construction, fix_second_point: bool) -> BTreeMap<Variable, Rat> {
    let mut subs = BTreeMap::new();
    let free = cons.free_points();
    if let Some((_, id)) = free.first() {
        let (x, y) = cons.point_coords(*id).unwrap();
        subs.insert(x, Rat::zero());
        subs.insert(y, Rat::zero());
    }
    if fix_second_point {
        if let Some((_, id)) = free.get(1) {
            let (_, y) = cons.point_coords(*id).unwrap();
            subs.insert(y, Rat::zero());
        }
    }
    subs
}

/// Rabinowitsch denial of a thesis: `t_R·t − 1`, unsatisfiable exactly where
/// the thesis holds.
pub fn deny_thesis(t: &QPoly, denial_var: Variable) -> QPoly {
    &(&QPoly::var(denial_var) * t) - &QPoly::one()
}

fn format_substitution(subs: &BTreeMap<Variable, Rat>) -> String {
    let body: Vec<String> = subs.iter().map(|(v, c)| format!("{v}={c}")).collect();
    format!("substitutions: {{{}}}", body.join(", "))
}

/// Decide the statement over the construction.
pub fn prove(
    cons: &Construction,
    statement: &Statement,
    config: &ProverConfig,
) -> Result<ProverResult, ProverError> {
    let start = Instant::now();
    let mut translator = Translator::new(cons);
    translator.run()?;
    let theses = translator.translate_statement(statement)?;
    let translated: Translated = translator.finish();
    let mut next_index = translated.next_index;

    let mut log = translated.log.clone();
    let subs = fix_coordinates(cons, config.fix_second_point);
    log.push(format_substitution(&subs));

    let hypotheses: Vec<QPoly> = translated
        .hypotheses
        .iter()
        .map(|h| h.substitute_consts(&subs))
        .filter(|h| !h.is_zero())
        .collect();
    let theses: Vec<QPoly> = theses.iter().map(|t| t.substitute_consts(&subs)).collect();

    let free_vars: BTreeSet<Variable> = cons
        .pool
        .vars_with_role(VarRole::Free)
        .into_iter()
        .filter(|v| !subs.contains_key(v))
        .collect();

    let deadline = config.timeout.map(|d| start + d);
    let budget = Budget {
        max_pair_reductions: config.max_pair_reductions,
        deadline,
    };

    let mut stats = ProverStats {
        hypothesis_count: hypotheses.len(),
        ..ProverStats::default()
    };
    let mut ndg: BTreeSet<Ndg> = BTreeSet::new();
    let mut any_unknown = false;

    for thesis in &theses {
        if thesis.is_zero() {
            log.push("Thesis is identically true after substitution.".to_string());
            continue;
        }
        let denial_var = Variable::new(next_index);
        next_index += 1;
        let denial = deny_thesis(thesis, denial_var);
        log.push(format!(
            "Thesis reductio ad absurdum (denied statement): {denial}"
        ));

        let mut generators = hypotheses.clone();
        generators.push(denial);

        let mut all_vars: BTreeSet<Variable> = BTreeSet::new();
        for g in &generators {
            all_vars.extend(g.vars());
        }
        let eliminate: BTreeSet<Variable> = all_vars
            .iter()
            .filter(|v| !free_vars.contains(v))
            .cloned()
            .collect();
        // the denial variable is eliminated too but is not a dependent
        // coordinate of the construction
        let dependent = eliminate.len().saturating_sub(1);
        stats.variables.push(all_vars.len());
        stats.dependent.push(dependent);
        log.push(format!(
            "Eliminating system in {} variables ({} dependent)",
            all_vars.len(),
            dependent
        ));

        match elimination_basis(generators, &eliminate, &budget) {
            Err(GroebnerError::BudgetExceeded { pairs }) => {
                log.push(format!("Budget exceeded after {pairs} pair reductions."));
                any_unknown = true;
            }
            Err(GroebnerError::ZeroInput) => unreachable!("generators are nonzero"),
            Ok((gb, elim)) => {
                stats.basis_sizes.push(gb.basis.len());
                if gb.contains_one() {
                    // contradiction without any degeneracy assumption
                    continue;
                }
                if elim.is_empty() {
                    log.push("Statement is GENERALLY FALSE".to_string());
                    log.push(format!("Benchmarking: {} ms", start.elapsed().as_millis()));
                    return Ok(ProverResult {
                        verdict: Verdict::False,
                        ndg: Vec::new(),
                        elapsed_ms: start.elapsed().as_millis(),
                        stats,
                        log,
                    });
                }
                for c in extract_ndg(&elim, cons, &subs) {
                    ndg.insert(c);
                }
            }
        }
    }

    let verdict = if any_unknown {
        Verdict::Unknown
    } else {
        Verdict::True
    };
    match verdict {
        Verdict::True => log.push("Statement is GENERALLY TRUE".to_string()),
        _ => log.push("Statement is UNKNOWN (budget exceeded)".to_string()),
    }
    log.push(format!("Benchmarking: {} ms", start.elapsed().as_millis()));

    Ok(ProverResult {
        verdict,
        ndg: if verdict == Verdict::True {
            ndg.into_iter().collect()
        } else {
            Vec::new()
        },
        elapsed_ms: start.elapsed().as_millis(),
        stats,
        log,
    })
}

/// Candidate degeneracy polynomials generated from the free points, with
/// the coordinate substitution applied.
fn ndg_candidates(
    cons: &Construction,
    subs: &BTreeMap<Variable, Rat>,
) -> Vec<(Ndg, QPoly)> {
    let pts = cons.free_points();
    let coord = |id| {
        let (x, y) = cons.point_coords(id).unwrap();
        (
            QPoly::var(x).substitute_consts(subs),
            QPoly::var(y).substitute_consts(subs),
        )
    };
    let mut out: Vec<(Ndg, QPoly)> = Vec::new();
    let mut push = |d: Ndg, p: QPoly| {
        if !p.is_zero() && !p.is_constant() {
            out.push((d, p));
        }
    };
    let n = pts.len();
    for i in 0..n {
        for j in (i + 1)..n {
            let (ax, ay) = coord(pts[i].1);
            let (bx, by) = coord(pts[j].1);
            let dx = &bx - &ax;
            let dy = &by - &ay;
            push(
                Ndg::AreEqual(pts[i].0.clone(), pts[j].0.clone()),
                &(&dx * &dx) + &(&dy * &dy),
            );
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let (ax, ay) = coord(pts[i].1);
                let (bx, by) = coord(pts[j].1);
                let (cx, cy) = coord(pts[k].1);
                let det = &(&(&bx - &ax) * &(&cy - &ay)) - &(&(&by - &ay) * &(&cx - &ax));
                push(
                    Ndg::AreCollinear(pts[i].0.clone(), pts[j].0.clone(), pts[k].0.clone()),
                    det,
                );
            }
        }
    }
    // perpendicularity of segments spanned by free points
    let mut segs: Vec<(usize, usize)> = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            segs.push((i, j));
        }
    }
    for (si, &(a, b)) in segs.iter().enumerate() {
        for &(c, d) in &segs[(si + 1)..] {
            let (ax, ay) = coord(pts[a].1);
            let (bx, by) = coord(pts[b].1);
            let (cx, cy) = coord(pts[c].1);
            let (dx, dy) = coord(pts[d].1);
            let dotp = &(&(&bx - &ax) * &(&dx - &cx)) + &(&(&by - &ay) * &(&dy - &cy));
            push(
                Ndg::ArePerpendicular(
                    pts[a].0.clone(),
                    pts[b].0.clone(),
                    pts[c].0.clone(),
                    pts[d].0.clone(),
                ),
                dotp,
            );
        }
    }
    out
}

/// Recognize a squarefree, content-normalized polynomial as a single
/// candidate condition (equality up to sign).
pub fn recognize_condition(p: &QPoly, candidates: &[(Ndg, QPoly)]) -> Option<Ndg> {
    let order = MonomialOrder::DegRevLex;
    let pn = p.normalize(&order);
    for (d, c) in candidates {
        let cn = c.normalize(&order);
        if pn == cn || pn == (-&cn).normalize(&order) || -&pn == cn {
            return Some(d.clone());
        }
    }
    None
}

/// Decompose each elimination-ideal generator into candidate degeneracy
/// factors and pick the best decomposition: fully recognized first, then the
/// fewest conditions, then the smallest condition set in its natural order,
/// then lowest degree, ties by generator index.
pub fn extract_ndg(
    eliminated: &[QPoly],
    cons: &Construction,
    subs: &BTreeMap<Variable, Rat>,
) -> Vec<Ndg> {
    let candidates = ndg_candidates(cons, subs);
    let mut best: Option<(bool, usize, BTreeSet<Ndg>, u32, usize)> = None;
    for (idx, g) in eliminated.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let sf = match squarefree_part(g) {
            Ok(s) => s,
            Err(_) => continue,
        };
        let mut rem = sf.clone();
        let mut conds: BTreeSet<Ndg> = BTreeSet::new();
        let mut progress = true;
        while progress && !rem.is_constant() {
            progress = false;
            for (d, c) in &candidates {
                if let Ok(Some(q)) = rem.divide_exact(c) {
                    rem = q;
                    conds.insert(d.clone());
                    progress = true;
                }
            }
        }
        let fully = rem.is_constant();
        if !fully {
            let order = MonomialOrder::DegRevLex;
            conds.insert(Ndg::Raw(rem.normalize(&order).to_string()));
        }
        let key = (!fully, conds.len(), conds, sf.total_degree(), idx);
        let better = match &best {
            None => true,
            Some(b) => key < *b,
        };
        if better {
            best = Some(key);
        }
    }
    best.map(|(_, _, c, _, _)| c.into_iter().collect())
        .unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geomodel::ToolApp;
    use crate::rint;

    fn three_free_points() -> Construction {
        let mut c = Construction::default();
        c.append("A".into(), ToolApp::FreePoint).unwrap();
        c.append("B".into(), ToolApp::FreePoint).unwrap();
        c.append("C".into(), ToolApp::FreePoint).unwrap();
        c
    }

    #[test]
    fn deny_thesis_shape() {
        let x = QPoly::var(Variable::new(1));
        let t = Variable::new(2);
        let denied = deny_thesis(&x, t);
        let expect = &(&QPoly::var(t) * &x) - &QPoly::one();
        assert_eq!(denied, expect);
    }

    #[test]
    fn fix_first_point_only() {
        let c = three_free_points();
        let subs = fix_coordinates(&c, false);
        assert_eq!(subs.len(), 2);
        assert_eq!(subs[&Variable::new(1)], Rat::zero());
        assert_eq!(subs[&Variable::new(2)], Rat::zero());
    }

    #[test]
    fn fix_second_point_drops_one_more() {
        let c = three_free_points();
        let subs = fix_coordinates(&c, true);
        assert_eq!(subs.len(), 3);
        assert!(subs.contains_key(&Variable::new(4)));
    }

    #[test]
    fn fix_without_free_points_is_empty() {
        let c = Construction::default();
        assert!(fix_coordinates(&c, true).is_empty());
    }

    #[test]
    fn extract_ndg_inversion_set() {
        // (v4^2 + v3^2)^2 * (-v5*v4 + v6*v3) with A fixed at the origin,
        // B = (v3, v4), C = (v5, v6)
        let c = three_free_points();
        let subs = fix_coordinates(&c, false);
        let v = |i| QPoly::var(Variable::new(i));
        let eq = &(&v(4) * &v(4)) + &(&v(3) * &v(3));
        let col = &(&v(6) * &v(3)) - &(&v(5) * &v(4));
        let g = &(&eq * &eq) * &col;
        let conds = extract_ndg(&[g], &c, &subs);
        assert_eq!(
            conds,
            vec![
                Ndg::AreEqual("A".into(), "B".into()),
                Ndg::AreCollinear("A".into(), "B".into(), "C".into()),
            ]
        );
    }

    #[test]
    fn extract_ndg_direct_candidate() {
        let c = three_free_points();
        let subs = fix_coordinates(&c, false);
        let v = |i| QPoly::var(Variable::new(i));
        let d2 = &(&v(3) * &v(3)) + &(&v(4) * &v(4));
        let conds = extract_ndg(&[d2], &c, &subs);
        assert_eq!(conds, vec![Ndg::AreEqual("A".into(), "B".into())]);
    }

    #[test]
    fn extract_ndg_unrecognized_raw() {
        let c = three_free_points();
        let subs = fix_coordinates(&c, false);
        let v = |i| QPoly::var(Variable::new(i));
        let g = &(&v(3) * &v(6)) + &QPoly::constant(rint(7));
        let conds = extract_ndg(&[g], &c, &subs);
        assert_eq!(conds.len(), 1);
        assert!(matches!(conds[0], Ndg::Raw(_)));
    }

    #[test]
    fn recognize_up_to_sign() {
        let c = three_free_points();
        let subs = fix_coordinates(&c, false);
        let candidates = ndg_candidates(&c, &subs);
        let v = |i| QPoly::var(Variable::new(i));
        let col = &(&v(5) * &v(4)) - &(&v(6) * &v(3));
        assert_eq!(
            recognize_condition(&(-&col), &candidates),
            Some(Ndg::AreCollinear("A".into(), "B".into(), "C".into()))
        );
        let eqd = &(&v(3) * &v(3)) + &(&v(4) * &v(4));
        assert_eq!(
            recognize_condition(&eqd, &candidates),
            Some(Ndg::AreEqual("A".into(), "B".into()))
        );
        let no = &v(3) + &v(4);
        assert_eq!(recognize_condition(&no, &candidates), None);
    }

    #[test]
    fn free_points_are_not_equal() {
        let c = three_free_points();
        let a = c.lookup("A").unwrap();
        let b = c.lookup("B").unwrap();
        let r = prove(
            &c,
            &Statement::AreEqual(a, b),
            &ProverConfig::default(),
        )
        .unwrap();
        assert_eq!(r.verdict, Verdict::False);
        assert!(r.ndg.is_empty());
    }

    #[test]
    fn identical_segments_are_congruent() {
        let mut c = three_free_points();
        let a = c.lookup("A").unwrap();
        let b = c.lookup("B").unwrap();
        let s1 = c.append("s1".into(), ToolApp::Segment(a, b)).unwrap();
        let s2 = c.append("s2".into(), ToolApp::Segment(a, b)).unwrap();
        let r = prove(
            &c,
            &Statement::AreCongruent(s1, s2),
            &ProverConfig::default(),
        )
        .unwrap();
        assert_eq!(r.verdict, Verdict::True);
        assert!(r.ndg.is_empty());
    }

    #[test]
    fn midpoint_equidistant() {
        let mut c = three_free_points();
        let a = c.lookup("A").unwrap();
        let b = c.lookup("B").unwrap();
        let m = c.append("M".into(), ToolApp::Midpoint(a, Some(b))).unwrap();
        let sa = c.append("sa".into(), ToolApp::Segment(m, a)).unwrap();
        let sb = c.append("sb".into(), ToolApp::Segment(m, b)).unwrap();
        let r = prove(
            &c,
            &Statement::AreCongruent(sa, sb),
            &ProverConfig::default(),
        )
        .unwrap();
        assert_eq!(r.verdict, Verdict::True);
    }
}
