//! Numeric realization of constructions over f64, used as an independent
//! consistency oracle for the algebraic translation.

use std::collections::BTreeMap;
use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::geomodel::{Construction, GeoObject, ObjId, ToolApp};
use crate::poly::Variable;

use super::{AuxSpec, PtRef, Translated};

#[derive(Error, Debug, Clone, PartialEq)]
pub enum RealizeError {
    #[error("no non-degenerate realization found after {0} attempts")]
    TooManyRetries(u32),
    #[error("numeric realization not implemented: {0}")]
    Unsupported(String),
    #[error("missing coordinate during realization")]
    MissingCoordinate,
}

const MAX_ATTEMPTS: u32 = 100;
const RESIDUAL_TOL: f64 = 1e-9;
const EPS: f64 = 1e-9;

type P2 = (f64, f64);

fn sub(a: P2, b: P2) -> P2 {
    (a.0 - b.0, a.1 - b.1)
}

fn add(a: P2, b: P2) -> P2 {
    (a.0 + b.0, a.1 + b.1)
}

fn scale(a: P2, k: f64) -> P2 {
    (a.0 * k, a.1 * k)
}

fn dot(a: P2, b: P2) -> f64 {
    a.0 * b.0 + a.1 * b.1
}

fn norm(a: P2) -> f64 {
    dot(a, a).sqrt()
}

fn perp(a: P2) -> P2 {
    (-a.1, a.0)
}

fn unit(a: P2) -> Option<P2> {
    let n = norm(a);
    if n < 1e-12 {
        None
    } else {
        Some(scale(a, 1.0 / n))
    }
}

/// Numeric view of a non-point object.
#[derive(Clone, Copy, Debug)]
enum Shape {
    Line { p: P2, d: P2 },
    Circle { c: P2, r: f64 },
    Parabola { focus: P2, a: P2, b: P2 },
    ConicSum { f1: P2, f2: P2, sum: f64 },
}

/// Internal signal: `Degenerate` restarts the attempt with fresh
/// randomness, `Fatal` aborts.
enum Fail {
    Degenerate,
    Fatal(RealizeError),
}

impl From<RealizeError> for Fail {
    fn from(e: RealizeError) -> Self {
        Fail::Fatal(e)
    }
}

type RResult<T> = Result<T, Fail>;

struct Realizer<'a> {
    cons: &'a Construction,
    tr: &'a Translated,
    coords: BTreeMap<Variable, f64>,
    rng: ChaCha8Rng,
}

impl<'a> Realizer<'a> {
    fn pt(&self, r: PtRef) -> RResult<P2> {
        let (x, y) = match r {
            PtRef::Obj(id) => self
                .cons
                .point_coords(id)
                .ok_or(RealizeError::MissingCoordinate)?,
            PtRef::Aux(x, y) => (x, y),
        };
        Ok((self.var(x)?, self.var(y)?))
    }

    fn var(&self, v: Variable) -> RResult<f64> {
        Ok(*self
            .coords
            .get(&v)
            .ok_or(RealizeError::MissingCoordinate)?)
    }

    fn set_pt(&mut self, id: ObjId, p: P2) {
        let (x, y) = self.cons.point_coords(id).expect("point output");
        self.coords.insert(x, p.0);
        self.coords.insert(y, p.1);
    }

    fn shape(&mut self, id: ObjId) -> RResult<Shape> {
        match self.cons.obj(id).clone() {
            GeoObject::LinePts { a, b, .. } => {
                let pa = self.pt(PtRef::Obj(a))?;
                let pb = self.pt(PtRef::Obj(b))?;
                let d = sub(pb, pa);
                if norm(d) < EPS {
                    return Err(Fail::Degenerate);
                }
                Ok(Shape::Line { p: pa, d })
            }
            GeoObject::PerpBisector { a, b } => {
                let pa = self.pt(PtRef::Obj(a))?;
                let pb = self.pt(PtRef::Obj(b))?;
                if norm(sub(pb, pa)) < EPS {
                    return Err(Fail::Degenerate);
                }
                Ok(Shape::Line {
                    p: scale(add(pa, pb), 0.5),
                    d: perp(sub(pb, pa)),
                })
            }
            GeoObject::PerpLine { through, base } => {
                let Shape::Line { d, .. } = self.shape(base)? else {
                    return Err(RealizeError::Unsupported(
                        "perpendicular to a non-line".into(),
                    )
                    .into());
                };
                Ok(Shape::Line {
                    p: self.pt(PtRef::Obj(through))?,
                    d: perp(d),
                })
            }
            GeoObject::ParLine { through, base } => {
                let Shape::Line { d, .. } = self.shape(base)? else {
                    return Err(RealizeError::Unsupported("parallel to a non-line".into()).into());
                };
                Ok(Shape::Line {
                    p: self.pt(PtRef::Obj(through))?,
                    d,
                })
            }
            GeoObject::AngularBisector { a, vertex, c } => {
                let pv = self.pt(PtRef::Obj(vertex))?;
                let ua = unit(sub(self.pt(PtRef::Obj(a))?, pv)).ok_or(Fail::Degenerate)?;
                let uc = unit(sub(self.pt(PtRef::Obj(c))?, pv)).ok_or(Fail::Degenerate)?;
                let d = add(ua, uc);
                // a straight angle has a perpendicular internal bisector
                let d = if norm(d) < 1e-9 { perp(ua) } else { d };
                Ok(Shape::Line { p: pv, d })
            }
            GeoObject::TangentLine { from, .. } => {
                let &(tx, ty) = self
                    .tr
                    .touch
                    .get(&id)
                    .ok_or(RealizeError::MissingCoordinate)?;
                let touch = self.pt(PtRef::Aux(tx, ty))?;
                let pf = self.pt(PtRef::Obj(from))?;
                let d = sub(touch, pf);
                if norm(d) < EPS {
                    return Err(Fail::Degenerate);
                }
                Ok(Shape::Line { p: pf, d })
            }
            GeoObject::Circle { center, through } => {
                let c = self.pt(PtRef::Obj(center))?;
                let t = self.pt(PtRef::Obj(through))?;
                let r = norm(sub(t, c));
                if r < EPS {
                    return Err(Fail::Degenerate);
                }
                Ok(Shape::Circle { c, r })
            }
            GeoObject::Circle3 { a, b, c } => {
                let pa = self.pt(PtRef::Obj(a))?;
                let pb = self.pt(PtRef::Obj(b))?;
                let pc = self.pt(PtRef::Obj(c))?;
                let o = circumcenter(pa, pb, pc).ok_or(Fail::Degenerate)?;
                Ok(Shape::Circle {
                    c: o,
                    r: norm(sub(pa, o)),
                })
            }
            GeoObject::InvertedCircle { .. } => {
                let &((cx, cy), r2) = self
                    .tr
                    .inv_circle
                    .get(&id)
                    .ok_or(RealizeError::MissingCoordinate)?;
                let c = self.pt(PtRef::Aux(cx, cy))?;
                let r2 = self.var(r2)?;
                if r2 <= 0.0 {
                    return Err(Fail::Degenerate);
                }
                Ok(Shape::Circle { c, r: r2.sqrt() })
            }
            GeoObject::Parabola { focus, directrix } => {
                let f = self.pt(PtRef::Obj(focus))?;
                let Shape::Line { p, d } = self.shape(directrix)? else {
                    return Err(RealizeError::Unsupported(
                        "parabola with a non-line directrix".into(),
                    )
                    .into());
                };
                Ok(Shape::Parabola {
                    focus: f,
                    a: p,
                    b: add(p, d),
                })
            }
            GeoObject::Conic { f1, f2, through } => {
                let p1 = self.pt(PtRef::Obj(f1))?;
                let p2 = self.pt(PtRef::Obj(f2))?;
                let t = self.pt(PtRef::Obj(through))?;
                Ok(Shape::ConicSum {
                    f1: p1,
                    f2: p2,
                    sum: norm(sub(t, p1)) + norm(sub(t, p2)),
                })
            }
            other => Err(RealizeError::Unsupported(format!(
                "shape of a {}",
                other.kind_name()
            ))
            .into()),
        }
    }

    fn random_point(&mut self) -> P2 {
        (self.rng.gen_range(-4.0..4.0), self.rng.gen_range(-4.0..4.0))
    }

    /// A random point on a shape.
    fn point_on(&mut self, shape: Shape) -> RResult<P2> {
        match shape {
            Shape::Line { p, d } => {
                let t = self.rng.gen_range(-3.0..3.0);
                Ok(add(p, scale(d, t)))
            }
            Shape::Circle { c, r } => {
                let th = self.rng.gen_range(0.0..TAU);
                Ok(add(c, (r * th.cos(), r * th.sin())))
            }
            Shape::Parabola { focus, a, b } => {
                let u = unit(sub(b, a)).ok_or(Fail::Degenerate)?;
                let t = self.rng.gen_range(-3.0..3.0);
                let q = add(a, scale(u, t));
                parabola_point(focus, q, perp(u)).ok_or(Fail::Degenerate)
            }
            Shape::ConicSum { f1, f2, sum } => {
                // ellipse branch of the merged conic
                let m = scale(add(f1, f2), 0.5);
                let c_len = norm(sub(f2, f1)) / 2.0;
                let a_len = sum / 2.0;
                let b2 = a_len * a_len - c_len * c_len;
                if b2 < 1e-12 {
                    return Err(Fail::Degenerate);
                }
                let e1 = unit(sub(f2, f1)).ok_or(Fail::Degenerate)?;
                let e2 = perp(e1);
                let th = self.rng.gen_range(0.0..TAU);
                Ok(add(
                    m,
                    add(
                        scale(e1, a_len * th.cos()),
                        scale(e2, b2.sqrt() * th.sin()),
                    ),
                ))
            }
        }
    }

    fn intersect(&mut self, s1: Shape, s2: Shape) -> RResult<P2> {
        match (s1, s2) {
            (Shape::Line { p: p1, d: d1 }, Shape::Line { p: p2, d: d2 }) => {
                line_line(p1, d1, p2, d2).ok_or(Fail::Degenerate)
            }
            (Shape::Line { p, d }, Shape::Circle { c, r })
            | (Shape::Circle { c, r }, Shape::Line { p, d }) => {
                // |p + t d − c|² = r²
                let w = sub(p, c);
                let roots = quadratic(dot(d, d), 2.0 * dot(w, d), dot(w, w) - r * r)
                    .ok_or(Fail::Degenerate)?;
                let t = self.pick(roots);
                Ok(add(p, scale(d, t)))
            }
            (Shape::Circle { c: c1, r: r1 }, Shape::Circle { c: c2, r: r2 }) => {
                let d = norm(sub(c2, c1));
                if d < EPS || d > r1 + r2 - 1e-12 || d < (r1 - r2).abs() + 1e-12 {
                    return Err(Fail::Degenerate);
                }
                let a = (r1 * r1 - r2 * r2 + d * d) / (2.0 * d);
                let h2 = r1 * r1 - a * a;
                if h2 < 0.0 {
                    return Err(Fail::Degenerate);
                }
                let u = unit(sub(c2, c1)).ok_or(Fail::Degenerate)?;
                let base = add(c1, scale(u, a));
                let off = scale(perp(u), h2.sqrt());
                Ok(if self.rng.gen_bool(0.5) {
                    add(base, off)
                } else {
                    sub(base, off)
                })
            }
            (Shape::Line { p, d }, Shape::Parabola { focus, a, b })
            | (Shape::Parabola { focus, a, b }, Shape::Line { p, d }) => {
                // |P(t) − F|² = (n·(P(t) − a))² with n the unit directrix normal
                let u = unit(sub(b, a)).ok_or(Fail::Degenerate)?;
                let n = perp(u);
                let w = sub(p, focus);
                let alpha = dot(n, sub(p, a));
                let beta = dot(n, d);
                let roots = quadratic(
                    dot(d, d) - beta * beta,
                    2.0 * (dot(w, d) - alpha * beta),
                    dot(w, w) - alpha * alpha,
                )
                .ok_or(Fail::Degenerate)?;
                let t = self.pick(roots);
                Ok(add(p, scale(d, t)))
            }
            (Shape::Line { p, d }, Shape::ConicSum { f1, f2, sum })
            | (Shape::ConicSum { f1, f2, sum }, Shape::Line { p, d }) => {
                // scan for sign changes of |P−F1| + |P−F2| − sum along the line
                let du = unit(d).ok_or(Fail::Degenerate)?;
                let g = |t: f64| {
                    let q = add(p, scale(du, t));
                    norm(sub(q, f1)) + norm(sub(q, f2)) - sum
                };
                let mut roots = Vec::new();
                let (lo, hi, steps) = (-30.0f64, 30.0f64, 1200usize);
                let dt = (hi - lo) / steps as f64;
                let mut prev = g(lo);
                for i in 1..=steps {
                    let t = lo + dt * i as f64;
                    let cur = g(t);
                    if prev == 0.0 || prev * cur < 0.0 {
                        let (mut a0, mut b0) = (t - dt, t);
                        for _ in 0..80 {
                            let m = 0.5 * (a0 + b0);
                            if g(a0) * g(m) <= 0.0 {
                                b0 = m;
                            } else {
                                a0 = m;
                            }
                        }
                        roots.push(0.5 * (a0 + b0));
                    }
                    prev = cur;
                }
                if roots.is_empty() {
                    return Err(Fail::Degenerate);
                }
                let t = roots[self.rng.gen_range(0..roots.len())];
                Ok(add(p, scale(du, t)))
            }
            _ => Err(RealizeError::Unsupported(
                "intersection of two non-linear curves".into(),
            )
            .into()),
        }
    }

    fn pick(&mut self, roots: (f64, f64)) -> f64 {
        if self.rng.gen_bool(0.5) {
            roots.0
        } else {
            roots.1
        }
    }

    fn realize_step(&mut self, idx: usize) -> RResult<()> {
        let step = self.cons.steps[idx].clone();
        let out = step.output;
        match &step.tool {
            ToolApp::FreePoint => {
                let p = self.random_point();
                self.set_pt(out, p);
            }
            ToolApp::PointOn(c) => {
                let s = self.shape(*c)?;
                let p = self.point_on(s)?;
                self.set_pt(out, p);
            }
            ToolApp::Midpoint(a, b) => {
                let (pa, pb) = match b {
                    Some(b) => (self.pt(PtRef::Obj(*a))?, self.pt(PtRef::Obj(*b))?),
                    None => {
                        let (u, v) = self.cons.line_two_points(*a).expect("segment");
                        (self.pt(PtRef::Obj(u))?, self.pt(PtRef::Obj(v))?)
                    }
                };
                self.set_pt(out, scale(add(pa, pb), 0.5));
            }
            ToolApp::Intersect(o1, o2) => {
                let s1 = self.shape(*o1)?;
                let s2 = self.shape(*o2)?;
                let p = self.intersect(s1, s2)?;
                self.set_pt(out, p);
            }
            ToolApp::ReflectPoint(x, m) => {
                let pm = self.pt(PtRef::Obj(*m))?;
                if self.cons.obj(*x).is_point() {
                    let px = self.pt(PtRef::Obj(*x))?;
                    self.set_pt(out, sub(scale(pm, 2.0), px));
                } else {
                    for (src, img) in &step.reflected_pairs {
                        let ps = self.pt(PtRef::Obj(*src))?;
                        self.set_pt(*img, sub(scale(pm, 2.0), ps));
                    }
                }
            }
            ToolApp::ReflectLine(x, l) => {
                let Shape::Line { p, d } = self.shape(*l)? else {
                    return Err(RealizeError::Unsupported(
                        "reflection in a non-line".into(),
                    )
                    .into());
                };
                let mirror = |q: P2| {
                    let v = sub(q, p);
                    let proj = scale(d, dot(v, d) / dot(d, d));
                    sub(scale(add(p, proj), 2.0), q)
                };
                if self.cons.obj(*x).is_point() {
                    let px = self.pt(PtRef::Obj(*x))?;
                    self.set_pt(out, mirror(px));
                } else {
                    for (src, img) in &step.reflected_pairs {
                        let ps = self.pt(PtRef::Obj(*src))?;
                        self.set_pt(*img, mirror(ps));
                    }
                }
            }
            ToolApp::ReflectCircle(x, c) => {
                if self.cons.obj(*x).is_point() {
                    let Shape::Circle { c: a, r } = self.shape(*c)? else {
                        return Err(Fail::Degenerate);
                    };
                    let px = self.pt(PtRef::Obj(*x))?;
                    let v = sub(px, a);
                    let d2 = dot(v, v);
                    if d2 < EPS {
                        return Err(Fail::Degenerate);
                    }
                    self.set_pt(out, add(a, scale(v, r * r / d2)));
                }
                // circle images are realized via their auxiliary spec
            }
            ToolApp::Rotate(x, angle, o) => {
                let px = self.pt(PtRef::Obj(*x))?;
                let po = self.pt(PtRef::Obj(*o))?;
                let th = (angle.degrees() as f64).to_radians();
                let v = sub(px, po);
                let rv = (
                    th.cos() * v.0 - th.sin() * v.1,
                    th.sin() * v.0 + th.cos() * v.1,
                );
                self.set_pt(out, add(po, rv));
            }
            ToolApp::Translate(x, vec) => {
                let (a, b) = self.cons.line_two_points(*vec).expect("vector");
                let d = sub(self.pt(PtRef::Obj(b))?, self.pt(PtRef::Obj(a))?);
                let px = self.pt(PtRef::Obj(*x))?;
                self.set_pt(out, add(px, d));
            }
            // pure shape definitions; auxiliaries (circumcenters, touch
            // points) are realized through the spec list
            ToolApp::Line(..)
            | ToolApp::Segment(..)
            | ToolApp::Ray(..)
            | ToolApp::Vector(..)
            | ToolApp::Circle(..)
            | ToolApp::Circle3(..)
            | ToolApp::PerpBisector(..)
            | ToolApp::PerpLine(..)
            | ToolApp::ParLine(..)
            | ToolApp::AngularBisector(..)
            | ToolApp::Tangent(..)
            | ToolApp::Parabola(..)
            | ToolApp::Ellipse(..)
            | ToolApp::Hyperbola(..)
            | ToolApp::Polygon(..) => {}
        }
        Ok(())
    }

    fn realize_spec(&mut self, spec: &AuxSpec) -> RResult<()> {
        match spec {
            AuxSpec::Circumcenter { x, y, a, b, c } => {
                let pa = self.pt(*a)?;
                let pb = self.pt(*b)?;
                let pc = self.pt(*c)?;
                let o = circumcenter(pa, pb, pc).ok_or(Fail::Degenerate)?;
                self.coords.insert(*x, o.0);
                self.coords.insert(*y, o.1);
            }
            AuxSpec::Distance { var, from, to } => {
                let d = norm(sub(self.pt(*to)?, self.pt(*from)?));
                self.coords.insert(*var, d);
            }
            AuxSpec::Radical { var, radicand } => {
                self.coords.insert(*var, (*radicand as f64).sqrt());
            }
            AuxSpec::InvertedCircle {
                cx,
                cy,
                r2,
                mirror_center,
                mirror_through,
                src_center,
                src_through,
            } => {
                let a = self.pt(*mirror_center)?;
                let r_sq = dot(
                    sub(self.pt(*mirror_through)?, a),
                    sub(self.pt(*mirror_through)?, a),
                );
                let c = self.pt(*src_center)?;
                let rho_sq = dot(
                    sub(self.pt(*src_through)?, c),
                    sub(self.pt(*src_through)?, c),
                );
                let d_sq = dot(sub(c, a), sub(c, a));
                let denom = d_sq - rho_sq;
                if denom.abs() < EPS {
                    return Err(Fail::Degenerate);
                }
                let ctr = add(a, scale(sub(c, a), r_sq / denom));
                self.coords.insert(*cx, ctr.0);
                self.coords.insert(*cy, ctr.1);
                self.coords
                    .insert(*r2, r_sq * r_sq * rho_sq / (denom * denom));
            }
            AuxSpec::TouchCircle {
                x,
                y,
                from,
                center,
                through,
            } => {
                let p = self.pt(*from)?;
                let o = self.pt(*center)?;
                let r = norm(sub(self.pt(*through)?, o));
                let po = sub(p, o);
                let d2 = dot(po, po);
                if d2 <= r * r + 1e-12 {
                    return Err(Fail::Degenerate);
                }
                let h = r * (d2 - r * r).sqrt() / d2;
                let base = add(o, scale(po, r * r / d2));
                let off = scale(perp(po), h);
                let t = if self.rng.gen_bool(0.5) {
                    add(base, off)
                } else {
                    sub(base, off)
                };
                self.coords.insert(*x, t.0);
                self.coords.insert(*y, t.1);
            }
            AuxSpec::TouchParabola {
                tx,
                ty,
                foot_x,
                foot_y,
                from,
                focus,
                dir_a,
                dir_b,
            } => {
                let p = self.pt(*from)?;
                let f = self.pt(*focus)?;
                let a = self.pt(*dir_a)?;
                let b = self.pt(*dir_b)?;
                let u = unit(sub(b, a)).ok_or(Fail::Degenerate)?;
                // foot Q on the directrix with |PQ| = |PF| (reflected focus)
                let pf = norm(sub(f, p));
                let w = sub(a, p);
                let roots = quadratic(1.0, 2.0 * dot(w, u), dot(w, w) - pf * pf)
                    .ok_or(Fail::Degenerate)?;
                let t = self.pick(roots);
                let q = add(a, scale(u, t));
                let tp = parabola_point(f, q, perp(u)).ok_or(Fail::Degenerate)?;
                self.coords.insert(*foot_x, q.0);
                self.coords.insert(*foot_y, q.1);
                self.coords.insert(*tx, tp.0);
                self.coords.insert(*ty, tp.1);
            }
            AuxSpec::TouchConic {
                tx,
                ty,
                from,
                f1,
                f2,
                through,
            } => {
                let p = self.pt(*from)?;
                let pf1 = self.pt(*f1)?;
                let pf2 = self.pt(*f2)?;
                let t0 = self.pt(*through)?;
                let sum = norm(sub(t0, pf1)) + norm(sub(t0, pf2));
                // reflected focus: X on circle(F2, sum) with |PX| = |PF1|
                let x = self.intersect(
                    Shape::Circle { c: pf2, r: sum },
                    Shape::Circle {
                        c: p,
                        r: norm(sub(pf1, p)),
                    },
                )?;
                // touch point: F2X meets the perpendicular bisector of F1X
                let t = line_line(
                    pf2,
                    sub(x, pf2),
                    scale(add(pf1, x), 0.5),
                    perp(sub(x, pf1)),
                )
                .ok_or(Fail::Degenerate)?;
                self.coords.insert(*tx, t.0);
                self.coords.insert(*ty, t.1);
            }
        }
        Ok(())
    }

    fn run(&mut self) -> RResult<()> {
        let mut per_step: BTreeMap<usize, Vec<AuxSpec>> = BTreeMap::new();
        for (step, spec) in self.tr.aux_specs.clone() {
            per_step.entry(step).or_default().push(spec);
        }
        for idx in 0..self.cons.steps.len() {
            self.realize_step(idx)?;
            if let Some(specs) = per_step.get(&idx) {
                for spec in specs.clone() {
                    self.realize_spec(&spec)?;
                }
            }
        }
        if let Some(specs) = per_step.get(&usize::MAX) {
            for spec in specs.clone() {
                self.realize_spec(&spec)?;
            }
        }
        Ok(())
    }
}

fn line_line(p1: P2, d1: P2, p2: P2, d2: P2) -> Option<P2> {
    let den = cross_f(d1, d2);
    if den.abs() < 1e-10 {
        return None;
    }
    let t = cross_f(sub(p2, p1), d2) / den;
    Some(add(p1, scale(d1, t)))
}

fn cross_f(a: P2, b: P2) -> f64 {
    a.0 * b.1 - a.1 * b.0
}

fn quadratic(a: f64, b: f64, c: f64) -> Option<(f64, f64)> {
    if a.abs() < 1e-12 {
        if b.abs() < 1e-12 {
            return None;
        }
        let t = -c / b;
        return Some((t, t));
    }
    let disc = b * b - 4.0 * a * c;
    if disc < 0.0 {
        return None;
    }
    let s = disc.sqrt();
    Some(((-b + s) / (2.0 * a), (-b - s) / (2.0 * a)))
}

fn circumcenter(a: P2, b: P2, c: P2) -> Option<P2> {
    // intersection of two perpendicular bisectors
    line_line(
        scale(add(a, b), 0.5),
        perp(sub(b, a)),
        scale(add(a, c), 0.5),
        perp(sub(c, a)),
    )
}

/// The parabola point whose directrix foot is `q`: q + s·n with
/// |T − F| = |T − q|.
fn parabola_point(focus: P2, q: P2, n: P2) -> Option<P2> {
    let w = sub(q, focus);
    let den = 2.0 * dot(n, w);
    if den.abs() < 1e-10 {
        return None;
    }
    let s = -dot(w, w) / den;
    Some(add(q, scale(n, s)))
}

/// Random coordinates satisfying every hypothesis to within a scaled
/// residual of 1e-9. Retries with fresh randomness on degenerate draws, up
/// to 100 attempts.
pub fn numeric_realize(
    cons: &Construction,
    tr: &Translated,
    seed: u64,
) -> Result<BTreeMap<Variable, f64>, RealizeError> {
    for attempt in 0..MAX_ATTEMPTS {
        let rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(0x9e3779b97f4a7c15u64.wrapping_mul(attempt as u64)));
        let mut r = Realizer {
            cons,
            tr,
            coords: BTreeMap::new(),
            rng,
        };
        match r.run() {
            Err(Fail::Degenerate) => continue,
            Err(Fail::Fatal(e)) => return Err(e),
            Ok(()) => {}
        }
        let ok = tr.hypotheses.iter().all(|h| {
            h.eval_f64_with_scale(&r.coords)
                .map(|(v, s)| v.abs() <= RESIDUAL_TOL * s.max(1.0))
                .unwrap_or(false)
        });
        if ok {
            return Ok(r.coords);
        }
    }
    Err(RealizeError::TooManyRetries(MAX_ATTEMPTS))
}
