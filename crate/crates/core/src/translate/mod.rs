//! The geometry→algebra catalog: hypothesis polynomials for each
//! construction tool, thesis polynomials for each statement kind, and a
//! numeric realizer used as a consistency oracle.

mod realize;

pub use realize::{numeric_realize, RealizeError};

use std::collections::BTreeMap;

use num_traits::One;
use thiserror::Error;

use crate::geomodel::{
    Angle, Construction, Formula, GeoObject, ObjId, Statement, ToolApp,
};
use crate::poly::{Variable};
use crate::{rat, rint, QPoly, Rat};

#[derive(Error, Debug, Clone, PartialEq)]
pub enum TranslateError {
    #[error("not implemented: {0}")]
    Unsupported(String),
    #[error("statement kind mismatch: {0}")]
    StatementMismatch(String),
}

/// How the numeric realizer computes the value of a translation auxiliary.
#[derive(Clone, Debug)]
pub enum AuxSpec {
    Circumcenter {
        x: Variable,
        y: Variable,
        a: PtRef,
        b: PtRef,
        c: PtRef,
    },
    /// Positive euclidean distance between two points.
    Distance { var: Variable, from: PtRef, to: PtRef },
    /// Square root of a small integer (rotation radical).
    Radical { var: Variable, radicand: u32 },
    /// Center and squared radius of the image of a circle under inversion.
    InvertedCircle {
        cx: Variable,
        cy: Variable,
        r2: Variable,
        mirror_center: PtRef,
        mirror_through: PtRef,
        src_center: PtRef,
        src_through: PtRef,
    },
    TouchCircle {
        x: Variable,
        y: Variable,
        from: PtRef,
        center: PtRef,
        through: PtRef,
    },
    TouchParabola {
        tx: Variable,
        ty: Variable,
        foot_x: Variable,
        foot_y: Variable,
        from: PtRef,
        focus: PtRef,
        dir_a: PtRef,
        dir_b: PtRef,
    },
    TouchConic {
        tx: Variable,
        ty: Variable,
        from: PtRef,
        f1: PtRef,
        f2: PtRef,
        through: PtRef,
    },
}

/// A point-valued entity: either a constructed point object or a pair of
/// auxiliary coordinate variables.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PtRef {
    Obj(ObjId),
    Aux(Variable, Variable),
}

/// Result of translating a construction (and optionally a statement).
#[derive(Clone, Debug)]
pub struct Translated {
    pub hypotheses: Vec<QPoly>,
    /// (originating step index, spec); specs must be realized in order,
    /// interleaved with the steps. Statement-stage auxiliaries carry the
    /// step index `usize::MAX`.
    pub aux_specs: Vec<(usize, AuxSpec)>,
    /// First variable index not in use after translation.
    pub next_index: u32,
    pub log: Vec<String>,
    /// Auxiliary coordinate variables of derived circle centers, keyed by
    /// the Circle3 object.
    pub circle3_center: BTreeMap<ObjId, (Variable, Variable)>,
    /// Center and squared radius auxiliaries of inverted circles.
    pub inv_circle: BTreeMap<ObjId, ((Variable, Variable), Variable)>,
    /// Touch point auxiliaries, keyed by the tangent line object.
    pub touch: BTreeMap<ObjId, (Variable, Variable)>,
}

type Pair = (QPoly, QPoly);

fn psub(a: &Pair, b: &Pair) -> Pair {
    (&a.0 - &b.0, &a.1 - &b.1)
}

fn padd(a: &Pair, b: &Pair) -> Pair {
    (&a.0 + &b.0, &a.1 + &b.1)
}

fn pscale(a: &Pair, c: &Rat) -> Pair {
    (a.0.scale(c), a.1.scale(c))
}

fn cross(u: &Pair, v: &Pair) -> QPoly {
    &(&u.0 * &v.1) - &(&u.1 * &v.0)
}

fn dot(u: &Pair, v: &Pair) -> QPoly {
    &(&u.0 * &v.0) + &(&u.1 * &v.1)
}

fn dist2_pair(a: &Pair, b: &Pair) -> QPoly {
    let d = psub(a, b);
    dot(&d, &d)
}

/// 4-point concyclicity determinant with rows (x² + y², x, y, 1), expanded
/// along the constant column.
fn concyclic_det(pts: [&Pair; 4]) -> QPoly {
    let row = |p: &Pair| (&(&p.0 * &p.0) + &(&p.1 * &p.1), p.0.clone(), p.1.clone());
    let rows: Vec<(QPoly, QPoly, QPoly)> = pts.iter().map(|p| row(p)).collect();
    let det3 = |a: &(QPoly, QPoly, QPoly), b: &(QPoly, QPoly, QPoly), c: &(QPoly, QPoly, QPoly)| {
        let m0 = &(&b.1 * &c.2) - &(&b.2 * &c.1);
        let m1 = &(&b.0 * &c.2) - &(&b.2 * &c.0);
        let m2 = &(&b.0 * &c.1) - &(&b.1 * &c.0);
        &(&(&a.0 * &m0) - &(&a.1 * &m1)) + &(&a.2 * &m2)
    };
    let mut acc = QPoly::zero();
    for i in 0..4 {
        let o: Vec<usize> = (0..4).filter(|&k| k != i).collect();
        let m = det3(&rows[o[0]], &rows[o[1]], &rows[o[2]]);
        acc = if i % 2 == 0 { &acc + &m } else { &acc - &m };
    }
    acc
}

/// Geometry→algebra translation state: variable allocator for auxiliaries,
/// emitted hypotheses, and the auxiliary registry.
pub struct Translator<'c> {
    cons: &'c Construction,
    next_index: u32,
    hypotheses: Vec<QPoly>,
    aux_specs: Vec<(usize, AuxSpec)>,
    conic_len: BTreeMap<ObjId, (Variable, Variable)>,
    circle3_center: BTreeMap<ObjId, (Variable, Variable)>,
    inv_circle: BTreeMap<ObjId, ((Variable, Variable), Variable)>,
    touch: BTreeMap<ObjId, (Variable, Variable)>,
    radical: BTreeMap<u32, Variable>,
    cur_step: usize,
    log: Vec<String>,
}

impl<'c> Translator<'c> {
    pub fn new(cons: &'c Construction) -> Self {
        Translator {
            cons,
            next_index: cons.pool.len() as u32 + 1,
            hypotheses: Vec::new(),
            aux_specs: Vec::new(),
            conic_len: BTreeMap::new(),
            circle3_center: BTreeMap::new(),
            inv_circle: BTreeMap::new(),
            touch: BTreeMap::new(),
            radical: BTreeMap::new(),
            cur_step: 0,
            log: Vec::new(),
        }
    }

    fn fresh(&mut self) -> Variable {
        let v = Variable::new(self.next_index);
        self.next_index += 1;
        v
    }

    fn emit(&mut self, p: QPoly) {
        if !p.is_zero() {
            self.hypotheses.push(p);
        }
    }

    fn spec(&mut self, s: AuxSpec) {
        self.aux_specs.push((self.cur_step, s));
    }

    fn pt(&self, r: PtRef) -> Pair {
        match r {
            PtRef::Obj(id) => {
                let (x, y) = self
                    .cons
                    .point_coords(id)
                    .expect("PtRef::Obj must reference a point");
                (QPoly::var(x), QPoly::var(y))
            }
            PtRef::Aux(x, y) => (QPoly::var(x), QPoly::var(y)),
        }
    }

    fn pt_obj(&self, id: ObjId) -> Pair {
        self.pt(PtRef::Obj(id))
    }

    fn dist2(&self, a: PtRef, b: PtRef) -> QPoly {
        dist2_pair(&self.pt(a), &self.pt(b))
    }

    /// A point on a linear object together with its direction, both as
    /// polynomial pairs.
    fn point_and_dir(&mut self, id: ObjId) -> Result<(Pair, Pair), TranslateError> {
        match self.cons.obj(id).clone() {
            GeoObject::LinePts { a, b, .. } => {
                let pa = self.pt_obj(a);
                let pb = self.pt_obj(b);
                let d = psub(&pb, &pa);
                Ok((pa, d))
            }
            GeoObject::PerpBisector { a, b } => {
                let pa = self.pt_obj(a);
                let pb = self.pt_obj(b);
                let mid = pscale(&padd(&pa, &pb), &rat(1, 2));
                let d = psub(&pb, &pa);
                Ok((mid, (-&d.1, d.0)))
            }
            GeoObject::PerpLine { through, base } => {
                let (_, d) = self.point_and_dir(base)?;
                Ok((self.pt_obj(through), (-&d.1, d.0)))
            }
            GeoObject::ParLine { through, base } => {
                let (_, d) = self.point_and_dir(base)?;
                Ok((self.pt_obj(through), d))
            }
            GeoObject::TangentLine { from, target } => {
                let t = self.ensure_touch(id, from, target)?;
                let pf = self.pt_obj(from);
                let pt = self.pt(t);
                let d = psub(&pt, &pf);
                Ok((pf, d))
            }
            other => Err(TranslateError::Unsupported(format!(
                "direction of a {}",
                other.kind_name()
            ))),
        }
    }

    /// Coefficients (a, b, c) with a·x + b·y + c = 0 for a linear object.
    fn line_coeffs(&mut self, id: ObjId) -> Result<(QPoly, QPoly, QPoly), TranslateError> {
        if let GeoObject::LinePts { a, b, .. } = self.cons.obj(id) {
            let (u, v) = (self.pt_obj(*a), self.pt_obj(*b));
            // rows (y2 - y1, x1 - x2, x2*y1 - x1*y2)
            return Ok((
                &v.1 - &u.1,
                &u.0 - &v.0,
                &(&v.0 * &u.1) - &(&u.0 * &v.1),
            ));
        }
        let (q, d) = self.point_and_dir(id)?;
        // the line through q with direction d: d x (P - q) = 0
        Ok((
            -&d.1,
            d.0.clone(),
            &(&d.1 * &q.0) - &(&d.0 * &q.1),
        ))
    }

    fn center_and_circumpoint(&mut self, id: ObjId) -> Result<(PtRef, PtRef), TranslateError> {
        match self.cons.obj(id).clone() {
            GeoObject::Circle { center, through } => Ok((PtRef::Obj(center), PtRef::Obj(through))),
            GeoObject::Circle3 { a, .. } => {
                let c = self.ensure_circle3_center(id)?;
                Ok((PtRef::Aux(c.0, c.1), PtRef::Obj(a)))
            }
            other => Err(TranslateError::Unsupported(format!(
                "center of a {}",
                other.kind_name()
            ))),
        }
    }

    fn ensure_circle3_center(&mut self, id: ObjId) -> Result<(Variable, Variable), TranslateError> {
        if let Some(c) = self.circle3_center.get(&id) {
            return Ok(*c);
        }
        let GeoObject::Circle3 { a, b, c } = self.cons.obj(id).clone() else {
            unreachable!()
        };
        let ox = self.fresh();
        let oy = self.fresh();
        let o = PtRef::Aux(ox, oy);
        let e1 = &self.dist2(o, PtRef::Obj(a)) - &self.dist2(o, PtRef::Obj(b));
        let e2 = &self.dist2(o, PtRef::Obj(a)) - &self.dist2(o, PtRef::Obj(c));
        self.emit(e1);
        self.emit(e2);
        self.spec(AuxSpec::Circumcenter {
            x: ox,
            y: oy,
            a: PtRef::Obj(a),
            b: PtRef::Obj(b),
            c: PtRef::Obj(c),
        });
        self.circle3_center.insert(id, (ox, oy));
        Ok((ox, oy))
    }

    /// Image of a circle under inversion: auxiliary center C' and squared
    /// radius ρ'², constrained by
    ///   (C' - A)·(d² - ρ²) = r²·(C - A)   componentwise and
    ///   ρ'²·(d² - ρ²)² = r⁴·ρ²
    /// with r² = D2(B,A), ρ² = D2(P,C), d² = D2(C,A).
    fn ensure_inverted_circle(
        &mut self,
        id: ObjId,
    ) -> Result<((Variable, Variable), Variable), TranslateError> {
        if let Some(v) = self.inv_circle.get(&id) {
            return Ok(*v);
        }
        let GeoObject::InvertedCircle { source, mirror } = self.cons.obj(id).clone() else {
            unreachable!()
        };
        let (src_c, src_t) = self.center_and_circumpoint(source)?;
        let (mir_c, mir_t) = self.center_and_circumpoint(mirror)?;
        let cx = self.fresh();
        let cy = self.fresh();
        let r2v = self.fresh();

        let a = self.pt(mir_c);
        let c = self.pt(src_c);
        let cp = (QPoly::var(cx), QPoly::var(cy));
        let r2 = self.dist2(mir_t, mir_c);
        let rho2 = self.dist2(src_t, src_c);
        let d2 = self.dist2(src_c, mir_c);
        let denom = &d2 - &rho2;

        let lhs = psub(&cp, &a);
        let rhs = psub(&c, &a);
        self.emit(&(&lhs.0 * &denom) - &(&r2 * &rhs.0));
        self.emit(&(&lhs.1 * &denom) - &(&r2 * &rhs.1));
        let r4 = &r2 * &r2;
        self.emit(&(&QPoly::var(r2v) * &(&denom * &denom)) - &(&r4 * &rho2));

        self.spec(AuxSpec::InvertedCircle {
            cx,
            cy,
            r2: r2v,
            mirror_center: mir_c,
            mirror_through: mir_t,
            src_center: src_c,
            src_through: src_t,
        });
        self.inv_circle.insert(id, ((cx, cy), r2v));
        Ok(((cx, cy), r2v))
    }

    /// Shared length auxiliaries ℓ1, ℓ2 of a conic (focal distances of the
    /// circumpoint), with hypotheses ℓ² = D2.
    fn ensure_conic_lengths(&mut self, id: ObjId) -> Result<(Variable, Variable), TranslateError> {
        if let Some(l) = self.conic_len.get(&id) {
            return Ok(*l);
        }
        let GeoObject::Conic { f1, f2, through } = self.cons.obj(id).clone() else {
            unreachable!()
        };
        let l1 = self.fresh();
        let l2 = self.fresh();
        let d1 = self.dist2(PtRef::Obj(f1), PtRef::Obj(through));
        let d2 = self.dist2(PtRef::Obj(through), PtRef::Obj(f2));
        self.emit(&(&QPoly::var(l1) * &QPoly::var(l1)) - &d1);
        self.emit(&(&QPoly::var(l2) * &QPoly::var(l2)) - &d2);
        self.spec(AuxSpec::Distance {
            var: l1,
            from: PtRef::Obj(f1),
            to: PtRef::Obj(through),
        });
        self.spec(AuxSpec::Distance {
            var: l2,
            from: PtRef::Obj(through),
            to: PtRef::Obj(f2),
        });
        self.conic_len.insert(id, (l1, l2));
        Ok((l1, l2))
    }

    fn radical(&mut self, radicand: u32) -> Variable {
        if let Some(q) = self.radical.get(&radicand) {
            return *q;
        }
        let q = self.fresh();
        let qp = QPoly::var(q);
        self.emit(&(&qp * &qp) - &QPoly::constant(rint(radicand as i64)));
        self.spec(AuxSpec::Radical { var: q, radicand });
        self.radical.insert(radicand, q);
        q
    }

    /// Touch point of a tangent line, allocating it (and its hypotheses) on
    /// first use.
    fn ensure_touch(&mut self, line_id: ObjId, from: ObjId, target: ObjId) -> Result<PtRef, TranslateError> {
        if let Some(&(x, y)) = self.touch.get(&line_id) {
            return Ok(PtRef::Aux(x, y));
        }
        let tx = self.fresh();
        let ty = self.fresh();
        let t = PtRef::Aux(tx, ty);
        let p = PtRef::Obj(from);
        match self.cons.obj(target).clone() {
            GeoObject::Circle { .. } | GeoObject::Circle3 { .. } => {
                let (o, b) = self.center_and_circumpoint(target)?;
                // T on the circle, and OT ⟂ TP
                let on = &self.dist2(t, o) - &self.dist2(b, o);
                self.emit(on);
                let to = psub(&self.pt(t), &self.pt(o));
                let tp = psub(&self.pt(t), &self.pt(p));
                self.emit(dot(&to, &tp));
                self.spec(AuxSpec::TouchCircle {
                    x: tx,
                    y: ty,
                    from: p,
                    center: o,
                    through: b,
                });
            }
            GeoObject::Parabola { focus, directrix } => {
                let (da, db) = match self.cons.obj(directrix) {
                    GeoObject::LinePts { a, b, .. } => (*a, *b),
                    _ => {
                        return Err(TranslateError::Unsupported(
                            "tangent to a parabola with a derived directrix".into(),
                        ))
                    }
                };
                let fx = self.fresh();
                let fy = self.fresh();
                let foot = PtRef::Aux(fx, fy);
                // T on the parabola
                let on = self.parabola_membership(focus, da, db, t)?;
                self.emit(on);
                // foot of T on the directrix
                let a = self.pt_obj(da);
                let b = self.pt_obj(db);
                let d = psub(&b, &a);
                let footp = self.pt(foot);
                self.emit(cross(&d, &psub(&footp, &a)));
                let tp = self.pt(t);
                self.emit(dot(&psub(&tp, &footp), &d));
                // P is on the tangent at T: equidistant from focus and foot
                let e = &self.dist2(p, PtRef::Obj(focus)) - &self.dist2(p, foot);
                self.emit(e);
                self.spec(AuxSpec::TouchParabola {
                    tx,
                    ty,
                    foot_x: fx,
                    foot_y: fy,
                    from: p,
                    focus: PtRef::Obj(focus),
                    dir_a: PtRef::Obj(da),
                    dir_b: PtRef::Obj(db),
                });
            }
            GeoObject::Conic { f1, f2, .. } => {
                // T on the conic, and PT bisects the focal angle at T
                let on = self.conic_membership_hyp(target, t)?;
                for e in on {
                    self.emit(e);
                }
                let tp = self.pt(t);
                let u = psub(&self.pt(p), &tp);
                let v1 = psub(&self.pt(PtRef::Obj(f1)), &tp);
                let v2 = psub(&self.pt(PtRef::Obj(f2)), &tp);
                let c1 = cross(&u, &v1);
                let c2 = cross(&u, &v2);
                let e = &(&(&c1 * &c1) * &self.dist2(PtRef::Obj(f2), t))
                    - &(&(&c2 * &c2) * &self.dist2(PtRef::Obj(f1), t));
                self.emit(e);
                self.spec(AuxSpec::TouchConic {
                    tx,
                    ty,
                    from: p,
                    f1: PtRef::Obj(f1),
                    f2: PtRef::Obj(f2),
                    through: self.conic_through(target),
                });
            }
            other => {
                return Err(TranslateError::Unsupported(format!(
                    "tangent to a {}",
                    other.kind_name()
                )))
            }
        }
        self.touch.insert(line_id, (tx, ty));
        Ok(PtRef::Aux(tx, ty))
    }

    fn conic_through(&self, id: ObjId) -> PtRef {
        match self.cons.obj(id) {
            GeoObject::Conic { through, .. } => PtRef::Obj(*through),
            _ => unreachable!(),
        }
    }

    fn parabola_membership(
        &mut self,
        focus: ObjId,
        da: ObjId,
        db: ObjId,
        p: PtRef,
    ) -> Result<QPoly, TranslateError> {
        // D2(P,F)·D2(A,B) − ((B−A)×(P−A))²: squared point-line distance
        // cross-multiplied
        let a = self.pt_obj(da);
        let b = self.pt_obj(db);
        let pp = self.pt(p);
        let c = cross(&psub(&b, &a), &psub(&pp, &a));
        Ok(&(&self.dist2(p, PtRef::Obj(focus)) * &self.dist2(PtRef::Obj(da), PtRef::Obj(db)))
            - &(&c * &c))
    }

    /// Hypothesis-side conic membership: allocates length auxiliaries ℓ3, ℓ4
    /// for the member point and emits the linear focal relation.
    fn conic_membership_hyp(&mut self, id: ObjId, p: PtRef) -> Result<Vec<QPoly>, TranslateError> {
        let (l1, l2) = self.ensure_conic_lengths(id)?;
        let GeoObject::Conic { f1, f2, .. } = self.cons.obj(id).clone() else {
            unreachable!()
        };
        let l3 = self.fresh();
        let l4 = self.fresh();
        let d3 = self.dist2(PtRef::Obj(f1), p);
        let d4 = self.dist2(p, PtRef::Obj(f2));
        let mut out = Vec::new();
        out.push(&(&QPoly::var(l3) * &QPoly::var(l3)) - &d3);
        out.push(&(&QPoly::var(l4) * &QPoly::var(l4)) - &d4);
        out.push(
            &(&(&QPoly::var(l1) + &QPoly::var(l2)) - &QPoly::var(l3)) - &QPoly::var(l4),
        );
        self.spec(AuxSpec::Distance {
            var: l3,
            from: PtRef::Obj(f1),
            to: p,
        });
        self.spec(AuxSpec::Distance {
            var: l4,
            from: p,
            to: PtRef::Obj(f2),
        });
        Ok(out)
    }

    /// Membership equations of point `p` on object `obj` (hypothesis side:
    /// may allocate auxiliaries).
    fn membership(&mut self, obj: ObjId, p: PtRef) -> Result<Vec<QPoly>, TranslateError> {
        match self.cons.obj(obj).clone() {
            GeoObject::LinePts { a, b, .. } => {
                let pa = self.pt_obj(a);
                let pb = self.pt_obj(b);
                let pp = self.pt(p);
                Ok(vec![cross(&psub(&pb, &pa), &psub(&pp, &pa))])
            }
            GeoObject::PerpBisector { a, b } => {
                Ok(vec![&self.dist2(p, PtRef::Obj(a)) - &self.dist2(p, PtRef::Obj(b))])
            }
            GeoObject::PerpLine { through, base } => {
                let (_, d) = self.point_and_dir(base)?;
                let q = self.pt_obj(through);
                let pp = self.pt(p);
                Ok(vec![dot(&d, &psub(&pp, &q))])
            }
            GeoObject::ParLine { through, base } => {
                let (_, d) = self.point_and_dir(base)?;
                let q = self.pt_obj(through);
                let pp = self.pt(p);
                Ok(vec![cross(&d, &psub(&pp, &q))])
            }
            GeoObject::AngularBisector { a, vertex, c } => {
                // both internal and external bisector: squared-sine form
                let b = self.pt_obj(vertex);
                let pp = self.pt(p);
                let u = psub(&pp, &b);
                let va = psub(&self.pt_obj(a), &b);
                let vc = psub(&self.pt_obj(c), &b);
                let ca = cross(&u, &va);
                let cc = cross(&u, &vc);
                let e = &(&(&ca * &ca) * &self.dist2(PtRef::Obj(c), PtRef::Obj(vertex)))
                    - &(&(&cc * &cc) * &self.dist2(PtRef::Obj(a), PtRef::Obj(vertex)));
                Ok(vec![e])
            }
            GeoObject::TangentLine { from, .. } => {
                let t = self.ensure_touch(obj, from, self.tangent_target(obj))?;
                let pf = self.pt_obj(from);
                let pt = self.pt(t);
                let pp = self.pt(p);
                Ok(vec![cross(&psub(&pt, &pf), &psub(&pp, &pf))])
            }
            GeoObject::Circle { center, through } => Ok(vec![
                &self.dist2(p, PtRef::Obj(center)) - &self.dist2(PtRef::Obj(through), PtRef::Obj(center)),
            ]),
            GeoObject::Circle3 { a, b, c } => {
                // auxiliary-free membership: concyclicity with the three
                // defining points
                let pa = self.pt_obj(a);
                let pb = self.pt_obj(b);
                let pc = self.pt_obj(c);
                let pp = self.pt(p);
                Ok(vec![concyclic_det([&pa, &pb, &pc, &pp])])
            }
            GeoObject::InvertedCircle { .. } => {
                let ((cx, cy), r2) = self.ensure_inverted_circle(obj)?;
                Ok(vec![&self.dist2(p, PtRef::Aux(cx, cy)) - &QPoly::var(r2)])
            }
            GeoObject::Parabola { focus, directrix } => {
                let (da, db) = match self.cons.obj(directrix) {
                    GeoObject::LinePts { a, b, .. } => (*a, *b),
                    _ => {
                        return Err(TranslateError::Unsupported(
                            "parabola with a derived directrix".into(),
                        ))
                    }
                };
                Ok(vec![self.parabola_membership(focus, da, db, p)?])
            }
            GeoObject::Conic { .. } => self.conic_membership_hyp(obj, p),
            other => Err(TranslateError::Unsupported(format!(
                "point on a {}",
                other.kind_name()
            ))),
        }
    }

    fn tangent_target(&self, id: ObjId) -> ObjId {
        match self.cons.obj(id) {
            GeoObject::TangentLine { target, .. } => *target,
            _ => unreachable!(),
        }
    }

    /// Thesis-side membership: auxiliary-free. Conic membership uses the
    /// degree-8 eliminant in squared focal distances.
    fn membership_thesis(&mut self, obj: ObjId, p: PtRef) -> Result<Vec<QPoly>, TranslateError> {
        match self.cons.obj(obj).clone() {
            GeoObject::Conic { f1, f2, through } => {
                let d2s = [
                    self.dist2(PtRef::Obj(f1), PtRef::Obj(through)),
                    self.dist2(PtRef::Obj(through), PtRef::Obj(f2)),
                    self.dist2(PtRef::Obj(f1), p),
                    self.dist2(p, PtRef::Obj(f2)),
                ];
                Ok(vec![conic_incidence_poly(&d2s)])
            }
            _ => self.membership(obj, p),
        }
    }

    fn reflect_point_eqs(&mut self, src: PtRef, img: PtRef, mirror: ObjId) -> Result<(), TranslateError> {
        let x = self.pt(src);
        let xp = self.pt(img);
        let m = self.pt_obj(mirror);
        // X' = 2M − X
        self.emit(&(&xp.0 + &x.0) - &m.0.scale(&rint(2)));
        self.emit(&(&xp.1 + &x.1) - &m.1.scale(&rint(2)));
        Ok(())
    }

    fn reflect_line_eqs(&mut self, src: PtRef, img: PtRef, mirror: ObjId) -> Result<(), TranslateError> {
        let (q, d) = self.point_and_dir(mirror)?;
        let x = self.pt(src);
        let xp = self.pt(img);
        // midpoint of X, X' lies on the mirror (scaled by 2), and X'−X ⟂ d
        let twice_mid_minus = psub(&padd(&x, &xp), &pscale(&q, &rint(2)));
        self.emit(cross(&d, &twice_mid_minus));
        self.emit(dot(&psub(&xp, &x), &d));
        Ok(())
    }

    fn reflect_circle_eqs(&mut self, src: PtRef, img: PtRef, mirror: ObjId) -> Result<(), TranslateError> {
        let (center, through) = self.center_and_circumpoint(mirror)?;
        let a = self.pt(center);
        let x = self.pt(src);
        let xp = self.pt(img);
        let d2 = self.dist2(src, center);
        let r2 = self.dist2(through, center);
        // (x'−a)·D2(X,A) = (x−a)·r², componentwise
        self.emit(&(&(&xp.0 - &a.0) * &d2) - &(&(&x.0 - &a.0) * &r2));
        self.emit(&(&(&xp.1 - &a.1) * &d2) - &(&(&x.1 - &a.1) * &r2));
        Ok(())
    }

    fn translate_step(&mut self, idx: usize) -> Result<(), TranslateError> {
        self.cur_step = idx;
        let step = self.cons.steps[idx].clone();
        let out = step.output;
        match &step.tool {
            ToolApp::FreePoint => {
                let (x, y) = self.cons.point_coords(out).unwrap();
                self.log.push(format!("// Free point {}({x},{y})", step.name));
            }
            ToolApp::PointOn(c) => {
                self.log_constrained(&step.name, out);
                let p = PtRef::Obj(out);
                for e in self.membership(*c, p)? {
                    self.emit(e);
                }
            }
            ToolApp::Line(..)
            | ToolApp::Segment(..)
            | ToolApp::Ray(..)
            | ToolApp::Vector(..)
            | ToolApp::Circle(..)
            | ToolApp::PerpBisector(..)
            | ToolApp::PerpLine(..)
            | ToolApp::ParLine(..)
            | ToolApp::AngularBisector(..)
            | ToolApp::Parabola(..)
            | ToolApp::Ellipse(..)
            | ToolApp::Hyperbola(..)
            | ToolApp::Circle3(..)
            | ToolApp::Polygon(..) => {}
            ToolApp::Midpoint(a, b) => {
                self.log_constrained(&step.name, out);
                let (pa, pb) = match b {
                    Some(b) => (self.pt_obj(*a), self.pt_obj(*b)),
                    None => {
                        let (u, v) = self.cons.line_two_points(*a).expect("segment");
                        (self.pt_obj(u), self.pt_obj(v))
                    }
                };
                let m = self.pt_obj(out);
                self.emit(&(&m.0.scale(&rint(2)) - &pa.0) - &pb.0);
                self.emit(&(&m.1.scale(&rint(2)) - &pa.1) - &pb.1);
            }
            ToolApp::Intersect(o1, o2) => {
                self.log_constrained(&step.name, out);
                let p = PtRef::Obj(out);
                for e in self.membership(*o1, p)? {
                    self.emit(e);
                }
                for e in self.membership(*o2, p)? {
                    self.emit(e);
                }
            }
            ToolApp::Tangent(from, _) => {
                self.ensure_touch(out, *from, self.tangent_target(out))?;
            }
            ToolApp::ReflectPoint(x, m) => {
                if self.cons.obj(*x).is_point() {
                    self.log_constrained(&step.name, out);
                    self.reflect_point_eqs(PtRef::Obj(*x), PtRef::Obj(out), *m)?;
                } else {
                    for (src, img) in &step.reflected_pairs {
                        self.reflect_point_eqs(PtRef::Obj(*src), PtRef::Obj(*img), *m)?;
                    }
                }
            }
            ToolApp::ReflectLine(x, l) => {
                if self.cons.obj(*x).is_point() {
                    self.log_constrained(&step.name, out);
                    self.reflect_line_eqs(PtRef::Obj(*x), PtRef::Obj(out), *l)?;
                } else {
                    for (src, img) in &step.reflected_pairs {
                        self.reflect_line_eqs(PtRef::Obj(*src), PtRef::Obj(*img), *l)?;
                    }
                }
            }
            ToolApp::ReflectCircle(x, c) => {
                if self.cons.obj(*x).is_point() {
                    self.log_constrained(&step.name, out);
                    self.reflect_circle_eqs(PtRef::Obj(*x), PtRef::Obj(out), *c)?;
                } else {
                    self.ensure_inverted_circle(out)?;
                }
            }
            ToolApp::Rotate(x, angle, o) => {
                self.log_constrained(&step.name, out);
                self.rotate_eqs(*x, *angle, *o, out)?;
            }
            ToolApp::Translate(x, v) => {
                self.log_constrained(&step.name, out);
                let (a, b) = self.cons.line_two_points(*v).expect("vector");
                let xs = self.pt_obj(*x);
                let xp = self.pt_obj(out);
                let d = psub(&self.pt_obj(b), &self.pt_obj(a));
                self.emit(&(&xp.0 - &xs.0) - &d.0);
                self.emit(&(&xp.1 - &xs.1) - &d.1);
            }
        }
        Ok(())
    }

    fn rotate_eqs(&mut self, x: ObjId, angle: Angle, o: ObjId, out: ObjId) -> Result<(), TranslateError> {
        let xs = self.pt_obj(x);
        let op = self.pt_obj(o);
        let xp = self.pt_obj(out);
        let rel = psub(&xs, &op);
        let img = psub(&xp, &op);
        let deg = angle.degrees();
        let sgn = if deg >= 0 { Rat::one() } else { -Rat::one() };
        // (cos, sin) as polynomials; radicals enter via q with q² = 2 or 3
        let (c, s): (QPoly, QPoly) = match deg.abs() {
            0 => (QPoly::one(), QPoly::zero()),
            180 => (QPoly::constant(-Rat::one()), QPoly::zero()),
            90 => (QPoly::zero(), QPoly::constant(sgn)),
            45 => {
                let q = QPoly::var(self.radical(2));
                (q.scale(&rat(1, 2)), q.scale(&(sgn * rat(1, 2))))
            }
            30 => {
                let q = QPoly::var(self.radical(3));
                (q.scale(&rat(1, 2)), QPoly::constant(sgn * rat(1, 2)))
            }
            60 => {
                let q = QPoly::var(self.radical(3));
                (QPoly::constant(rat(1, 2)), q.scale(&(sgn * rat(1, 2))))
            }
            _ => unreachable!("validated by Angle::new"),
        };
        // X' − O = R(θ)(X − O)
        self.emit(&img.0 - &(&(&c * &rel.0) - &(&s * &rel.1)));
        self.emit(&img.1 - &(&(&s * &rel.0) + &(&c * &rel.1)));
        Ok(())
    }

    fn log_constrained(&mut self, name: &str, out: ObjId) {
        if let Some((x, y)) = self.cons.point_coords(out) {
            self.log.push(format!("// Constrained point {name}({x},{y})"));
        }
    }

    /// Translate every construction step, in order.
    pub fn run(&mut self) -> Result<(), TranslateError> {
        for i in 0..self.cons.steps.len() {
            self.translate_step(i)?;
        }
        Ok(())
    }

    fn formula_poly(&mut self, f: &Formula) -> Result<QPoly, TranslateError> {
        Ok(match f {
            Formula::Const(c) => QPoly::constant(c.clone()),
            Formula::Dist2(a, b) => self.dist2(PtRef::Obj(*a), PtRef::Obj(*b)),
            Formula::Length(a, b) => {
                let l = self.fresh();
                let d = self.dist2(PtRef::Obj(*a), PtRef::Obj(*b));
                self.emit(&(&QPoly::var(l) * &QPoly::var(l)) - &d);
                self.aux_specs.push((
                    usize::MAX,
                    AuxSpec::Distance {
                        var: l,
                        from: PtRef::Obj(*a),
                        to: PtRef::Obj(*b),
                    },
                ));
                QPoly::var(l)
            }
            Formula::SignedArea2(vs) => {
                // shoelace sum: twice the signed area
                let mut acc = QPoly::zero();
                let n = vs.len();
                for i in 0..n {
                    let p = self.pt_obj(vs[i]);
                    let q = self.pt_obj(vs[(i + 1) % n]);
                    acc = &acc + &(&(&p.0 * &q.1) - &(&q.0 * &p.1));
                }
                acc
            }
            Formula::Add(a, b) => &self.formula_poly(a)? + &self.formula_poly(b)?,
            Formula::Sub(a, b) => &self.formula_poly(a)? - &self.formula_poly(b)?,
            Formula::Mul(a, b) => &self.formula_poly(a)? * &self.formula_poly(b)?,
            Formula::Neg(a) => -&self.formula_poly(a)?,
        })
    }

    /// Thesis polynomials for a statement; conjuncts are proven separately.
    pub fn translate_statement(&mut self, s: &Statement) -> Result<Vec<QPoly>, TranslateError> {
        self.cur_step = usize::MAX;
        match s {
            Statement::AreCollinear(a, b, c) => {
                let (pa, pb, pc) = (self.pt_obj(*a), self.pt_obj(*b), self.pt_obj(*c));
                Ok(vec![cross(&psub(&pb, &pa), &psub(&pc, &pa))])
            }
            Statement::AreConcurrent(l1, l2, l3) => {
                let r1 = self.line_coeffs(*l1)?;
                let r2 = self.line_coeffs(*l2)?;
                let r3 = self.line_coeffs(*l3)?;
                let det = |a: &(QPoly, QPoly, QPoly),
                           b: &(QPoly, QPoly, QPoly),
                           c: &(QPoly, QPoly, QPoly)| {
                    let m0 = &(&b.1 * &c.2) - &(&b.2 * &c.1);
                    let m1 = &(&b.0 * &c.2) - &(&b.2 * &c.0);
                    let m2 = &(&b.0 * &c.1) - &(&b.1 * &c.0);
                    &(&(&a.0 * &m0) - &(&a.1 * &m1)) + &(&a.2 * &m2)
                };
                Ok(vec![det(&r1, &r2, &r3)])
            }
            Statement::AreConcyclic(a, b, c, d) => {
                let pts = [*a, *b, *c, *d].map(|id| self.pt_obj(id));
                Ok(vec![concyclic_det([&pts[0], &pts[1], &pts[2], &pts[3]])])
            }
            Statement::AreCongruent(s1, s2) => {
                let (a, b) = self.cons.line_two_points(*s1).ok_or_else(|| {
                    TranslateError::StatementMismatch("AreCongruent expects two segments".into())
                })?;
                let (c, d) = self.cons.line_two_points(*s2).ok_or_else(|| {
                    TranslateError::StatementMismatch("AreCongruent expects two segments".into())
                })?;
                Ok(vec![
                    &self.dist2(PtRef::Obj(a), PtRef::Obj(b)) - &self.dist2(PtRef::Obj(c), PtRef::Obj(d)),
                ])
            }
            Statement::AreEqual(p, q) => {
                let pp = self.pt_obj(*p);
                let qq = self.pt_obj(*q);
                Ok(vec![&pp.0 - &qq.0, &pp.1 - &qq.1])
            }
            Statement::AreParallel(l1, l2) => {
                let (_, d1) = self.point_and_dir(*l1)?;
                let (_, d2) = self.point_and_dir(*l2)?;
                Ok(vec![cross(&d1, &d2)])
            }
            Statement::ArePerpendicular(l1, l2) => {
                let (_, d1) = self.point_and_dir(*l1)?;
                let (_, d2) = self.point_and_dir(*l2)?;
                Ok(vec![dot(&d1, &d2)])
            }
            Statement::Incident(p, obj) => {
                if self.cons.point_coords(*p).is_none() {
                    return Err(TranslateError::StatementMismatch(
                        "Incident expects a point and an object".into(),
                    ));
                }
                self.membership_thesis(*obj, PtRef::Obj(*p))
            }
            Statement::EqualAngles(ids) => {
                let [a, b, c, d, e, f] = ids.map(|id| self.pt_obj(id));
                let u = psub(&a, &b);
                let v = psub(&c, &b);
                let up = psub(&d, &e);
                let vp = psub(&f, &e);
                // tan(α) = tan(β): cross·dot' − cross'·dot
                Ok(vec![
                    &(&cross(&u, &v) * &dot(&up, &vp)) - &(&cross(&up, &vp) * &dot(&u, &v)),
                ])
            }
            Statement::Equation(lhs, rhs) => {
                let l = self.formula_poly(lhs)?;
                let r = self.formula_poly(rhs)?;
                Ok(vec![&l - &r])
            }
        }
    }

    pub fn finish(self) -> Translated {
        let mut log = self.log;
        log.push("Hypotheses:".to_string());
        for (i, h) in self.hypotheses.iter().enumerate() {
            log.push(format!("{}. {}", i + 1, h));
        }
        log.push("Hypotheses have been processed.".to_string());
        Translated {
            hypotheses: self.hypotheses,
            aux_specs: self.aux_specs,
            next_index: self.next_index,
            log,
            circle3_center: self.circle3_center,
            inv_circle: self.inv_circle,
            touch: self.touch,
        }
    }
}

/// The eight linear factors (ac ± cb ± ap ± pb) over the given length
/// variables, in a fixed order.
pub fn conic_sum_factors(vars: [Variable; 4]) -> Vec<QPoly> {
    let [ac, cb, ap, pb] = vars.map(QPoly::var);
    let mut out = Vec::new();
    for s1 in [1i64, -1] {
        for s2 in [1i64, -1] {
            for s3 in [1i64, -1] {
                let f = &(&(&ac + &cb.scale(&rint(s1))) + &ap.scale(&rint(s2)))
                    + &pb.scale(&rint(s3));
                out.push(f);
            }
        }
    }
    out
}

/// The degree-8 eliminant of the focal-length system expressed in the four
/// squared distances (each length occurs only in even powers in the product
/// of the eight factors), composed with the supplied D2 polynomials:
/// [D2(F1,C), D2(C,F2), D2(F1,P), D2(P,F2)].
pub fn conic_incidence_poly(d2s: &[QPoly; 4]) -> QPoly {
    use crate::poly::Monomial;
    // scratch variables; they never leak into the result
    let vars = [
        Variable::new(1),
        Variable::new(2),
        Variable::new(3),
        Variable::new(4),
    ];
    let mut prod = QPoly::one();
    for f in conic_sum_factors(vars) {
        prod = &prod * &f;
    }
    // every exponent is even: rewrite in the squares
    let mut halved = QPoly::zero();
    for (m, c) in prod.terms() {
        let pairs: Vec<(Variable, u32)> = m
            .exps()
            .iter()
            .map(|&(v, e)| {
                debug_assert!(e % 2 == 0, "eliminant must be even in each length");
                (v, e / 2)
            })
            .collect();
        halved.add_term(Monomial::from_pairs(pairs), c.clone());
    }
    let map: BTreeMap<Variable, QPoly> = vars
        .iter()
        .zip(d2s.iter())
        .map(|(v, p)| (*v, p.clone()))
        .collect();
    halved.substitute(&map)
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;
    use crate::dsl::parse_construction;
    use crate::geomodel::Statement;
    use crate::{rat, rint, Rat};

    fn hyps(src: &str) -> (Vec<QPoly>, crate::geomodel::Construction, Statement) {
        let parsed = parse_construction(src).unwrap();
        let mut tr = Translator::new(&parsed.construction);
        tr.run().unwrap();
        let t = tr.finish();
        (t.hypotheses, parsed.construction, parsed.statement)
    }

    fn assignment(vals: &[(u32, Rat)]) -> BTreeMap<Variable, Rat> {
        vals.iter()
            .map(|(i, r)| (Variable::new(*i), r.clone()))
            .collect()
    }

    #[test]
    fn point_on_line_reference_polynomial() {
        let (hs, _, _) = hyps(
            "A = Point()\nB = Point()\nC = Point()\na = Line(B, C)\nD = Point(a)\nProve(AreEqual(A, D))\n",
        );
        assert_eq!(hs.len(), 1);
        // -v7*v6 + v8*v5 + v7*v4 - v5*v4 - v8*v3 + v6*v3, up to sign
        let v = |i: u32| QPoly::var(Variable::new(i));
        let want = &(&(&(&(&(&v(7).scale(&rint(-1)) * &v(6)) + &(&v(8) * &v(5)))
            + &(&v(7) * &v(4)))
            - &(&v(5) * &v(4)))
            - &(&v(8) * &v(3)))
            + &(&v(6) * &v(3));
        assert!(hs[0] == want || hs[0] == -&want);
    }

    #[test]
    fn point_inversion_numeric_example() {
        // D=(2,0) inverted in the unit circle about the origin lands at (1/2,0)
        let (hs, _, _) = hyps(
            "A = Point()\nB = Point()\nc = Circle(A, B)\nD = Point()\nD' = ReflectCircle(D, c)\nProve(AreEqual(D, D'))\n",
        );
        let a = assignment(&[
            (1, rint(0)),
            (2, rint(0)),
            (3, rint(1)),
            (4, rint(0)),
            (5, rint(2)),
            (6, rint(0)),
            (7, rat(1, 2)),
            (8, rint(0)),
        ]);
        for h in &hs {
            assert_eq!(h.evaluate(&a).unwrap(), rint(0), "hypothesis {h}");
        }
    }

    #[test]
    fn rotate_quarter_turn() {
        let (hs, _, _) = hyps(
            "X = Point()\nO = Point()\nY = Rotate(X, 90, O)\nProve(AreEqual(X, Y))\n",
        );
        // X=(1,0), O=(0,0) -> Y=(0,1)
        let a = assignment(&[
            (1, rint(1)),
            (2, rint(0)),
            (3, rint(0)),
            (4, rint(0)),
            (5, rint(0)),
            (6, rint(1)),
        ]);
        assert!(!hs.is_empty());
        for h in &hs {
            assert_eq!(h.evaluate(&a).unwrap(), rint(0), "hypothesis {h}");
        }
    }

    #[test]
    fn parabola_membership_example() {
        // focus (0,1), directrix y = -1, point (2,1) lies on x^2 = 4y
        let (hs, _, _) = hyps(
            "F = Point()\nA = Point()\nB = Point()\nd = Line(A, B)\np = Parabola(F, d)\nP = Point(p)\nProve(AreEqual(F, P))\n",
        );
        let a = assignment(&[
            (1, rint(0)),
            (2, rint(1)),
            (3, rint(0)),
            (4, rint(-1)),
            (5, rint(1)),
            (6, rint(-1)),
            (7, rint(2)),
            (8, rint(1)),
        ]);
        for h in &hs {
            assert_eq!(h.evaluate(&a).unwrap(), rint(0), "hypothesis {h}");
        }
    }

    fn thesis_at(src: &str, vals: &[(u32, Rat)]) -> Vec<Rat> {
        let parsed = parse_construction(src).unwrap();
        let mut tr = Translator::new(&parsed.construction);
        tr.run().unwrap();
        let theses = tr.translate_statement(&parsed.statement).unwrap();
        let a = assignment(vals);
        theses.iter().map(|t| t.evaluate(&a).unwrap()).collect()
    }

    #[test]
    fn perpendicular_statement_evaluates_zero() {
        let vals = [
            (1, rint(0)),
            (2, rint(0)),
            (3, rint(1)),
            (4, rint(0)),
            (5, rint(0)),
            (6, rint(1)),
        ];
        let out = thesis_at(
            "O = Point()\nX = Point()\nY = Point()\na = Line(O, X)\nb = Line(O, Y)\nProve(ArePerpendicular(a, b))\n",
            &vals,
        );
        assert!(out.iter().all(|r| *r == rint(0)));
    }

    #[test]
    fn concyclic_determinant_zero() {
        let vals = [
            (1, rint(0)),
            (2, rint(0)),
            (3, rint(2)),
            (4, rint(0)),
            (5, rint(0)),
            (6, rint(2)),
            (7, rint(2)),
            (8, rint(2)),
        ];
        let out = thesis_at(
            "A = Point()\nB = Point()\nC = Point()\nD = Point()\nProve(AreConcyclic(A, B, C, D))\n",
            &vals,
        );
        assert!(out.iter().all(|r| *r == rint(0)));
    }

    #[test]
    fn equal_angles_both_45_degrees() {
        // u=(1,0), v=(1,1) at B=(0,0); u'=(2,0), v'=(2,2) at E=(5,5)
        let vals = [
            (1, rint(1)),
            (2, rint(0)),
            (3, rint(0)),
            (4, rint(0)),
            (5, rint(1)),
            (6, rint(1)),
            (7, rint(7)),
            (8, rint(5)),
            (9, rint(5)),
            (10, rint(5)),
            (11, rint(7)),
            (12, rint(7)),
        ];
        let out = thesis_at(
            "A = Point()\nB = Point()\nC = Point()\nD = Point()\nE = Point()\nF = Point()\nProve(EqualAngles(A, B, C, D, E, F))\n",
            &vals,
        );
        assert!(out.iter().all(|r| *r == rint(0)));
    }

    fn statement_polys(src: &str, s: &Statement) -> Vec<QPoly> {
        let parsed = parse_construction(src).unwrap();
        let mut tr = Translator::new(&parsed.construction);
        tr.run().unwrap();
        tr.translate_statement(s).unwrap()
    }

    const THREE_POINTS: &str = "A = Point()\nB = Point()\nC = Point()\nProve(AreCollinear(A, B, C))\n";

    #[test]
    fn collinear_invariant_under_permutation() {
        let parsed = parse_construction(THREE_POINTS).unwrap();
        let ids: Vec<_> = (0..3)
            .map(|i| parsed.construction.steps[i].output)
            .collect();
        let base = statement_polys(THREE_POINTS, &Statement::AreCollinear(ids[0], ids[1], ids[2]));
        for perm in [
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ] {
            let p = statement_polys(
                THREE_POINTS,
                &Statement::AreCollinear(ids[perm[0]], ids[perm[1]], ids[perm[2]]),
            );
            assert!(p[0] == base[0] || p[0] == -&base[0], "perm {perm:?}");
        }
    }

    #[test]
    fn congruent_invariant_under_swap() {
        let src = "A = Point()\nB = Point()\nC = Point()\nD = Point()\ns = Segment(A, B)\nt = Segment(C, D)\nProve(AreCongruent(s, t))\n";
        let parsed = parse_construction(src).unwrap();
        let s = parsed.construction.steps[4].output;
        let t = parsed.construction.steps[5].output;
        let a = statement_polys(src, &Statement::AreCongruent(s, t));
        let b = statement_polys(src, &Statement::AreCongruent(t, s));
        assert!(a[0] == b[0] || a[0] == -&b[0]);
    }

    #[test]
    fn parallel_and_perpendicular_invariant_under_swap() {
        let src = "A = Point()\nB = Point()\nC = Point()\nD = Point()\na = Line(A, B)\nb = Line(C, D)\nProve(AreParallel(a, b))\n";
        let parsed = parse_construction(src).unwrap();
        let l1 = parsed.construction.steps[4].output;
        let l2 = parsed.construction.steps[5].output;
        for mk in [
            Statement::AreParallel as fn(_, _) -> _,
            Statement::ArePerpendicular as fn(_, _) -> _,
        ] {
            let a = statement_polys(src, &mk(l1, l2));
            let b = statement_polys(src, &mk(l2, l1));
            assert!(a[0] == b[0] || a[0] == -&b[0]);
        }
    }
}
