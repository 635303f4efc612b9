//! The construction data model: geometric objects, tool-application steps,
//! statements, and variable bookkeeping (free vs. dependent coordinates).

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::poly::{VarPool, VarRole, Variable};
use crate::Rat;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct ObjId(pub usize);

#[derive(Error, Debug, Clone, PartialEq)]
pub enum GeoModelError {
    #[error("dangling reference to object #{0}")]
    DanglingReference(usize),
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("`{tool}` expects {expected}, got object `{got}`")]
    KindMismatch {
        tool: String,
        expected: String,
        got: String,
    },
    #[error("unsupported rotation angle {0}; supported: 0, ±30, ±45, ±60, ±90, ±180")]
    UnsupportedAngle(i32),
    #[error("`{0}` is not implemented for this argument combination")]
    Unsupported(String),
    #[error("statement arity mismatch for {0}")]
    StatementArity(String),
}

/// Distinction among the two-point linear objects. Segments, rays and
/// vectors carry the full line semantics algebraically; betweenness is not
/// represented.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LineishKind {
    Line,
    Segment,
    Ray,
    Vector,
}

/// A constructed geometric object. Points carry their coordinate variables;
/// derived objects reference earlier objects only (acyclic by construction).
#[derive(Clone, Debug, PartialEq)]
pub enum GeoObject {
    Point { x: Variable, y: Variable },
    LinePts { kind: LineishKind, a: ObjId, b: ObjId },
    PerpBisector { a: ObjId, b: ObjId },
    PerpLine { through: ObjId, base: ObjId },
    ParLine { through: ObjId, base: ObjId },
    AngularBisector { a: ObjId, vertex: ObjId, c: ObjId },
    /// Tangent line from a point to a curve; the touch point is an
    /// auxiliary allocated during translation, keyed by the object id.
    TangentLine { from: ObjId, target: ObjId },
    Circle { center: ObjId, through: ObjId },
    Circle3 { a: ObjId, b: ObjId, c: ObjId },
    /// Image of circle `source` under inversion in circle `mirror`; its
    /// center and squared radius are translation auxiliaries.
    InvertedCircle { source: ObjId, mirror: ObjId },
    Parabola { focus: ObjId, directrix: ObjId },
    /// Merged ellipse/hyperbola with two foci and a circumpoint; the two
    /// kinds cannot be distinguished in this model.
    Conic { f1: ObjId, f2: ObjId, through: ObjId },
    Polygon { vertices: Vec<ObjId> },
}

impl GeoObject {
    pub fn is_point(&self) -> bool {
        matches!(self, GeoObject::Point { .. })
    }

    /// Objects with a linear direction (usable for parallel, perpendicular
    /// and concurrency statements).
    pub fn is_lineish(&self) -> bool {
        matches!(
            self,
            GeoObject::LinePts { .. }
                | GeoObject::PerpBisector { .. }
                | GeoObject::PerpLine { .. }
                | GeoObject::ParLine { .. }
                | GeoObject::TangentLine { .. }
        )
    }

    /// Objects a point can lie on.
    pub fn is_curve(&self) -> bool {
        self.is_lineish()
            || matches!(
                self,
                GeoObject::AngularBisector { .. }
                    | GeoObject::Circle { .. }
                    | GeoObject::Circle3 { .. }
                    | GeoObject::InvertedCircle { .. }
                    | GeoObject::Parabola { .. }
                    | GeoObject::Conic { .. }
            )
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            GeoObject::Point { .. } => "point",
            GeoObject::LinePts { kind, .. } => match kind {
                LineishKind::Line => "line",
                LineishKind::Segment => "segment",
                LineishKind::Ray => "ray",
                LineishKind::Vector => "vector",
            },
            GeoObject::PerpBisector { .. } => "perpendicular bisector",
            GeoObject::PerpLine { .. } => "perpendicular line",
            GeoObject::ParLine { .. } => "parallel line",
            GeoObject::AngularBisector { .. } => "angular bisector",
            GeoObject::TangentLine { .. } => "tangent",
            GeoObject::Circle { .. } => "circle",
            GeoObject::Circle3 { .. } => "circle",
            GeoObject::InvertedCircle { .. } => "circle",
            GeoObject::Parabola { .. } => "parabola",
            GeoObject::Conic { .. } => "ellipse/hyperbola",
            GeoObject::Polygon { .. } => "polygon",
        }
    }
}

/// Rotation angles with rational or quadratic-radical trigonometric values.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Angle(i32);

impl Angle {
    pub const SUPPORTED: [i32; 11] = [0, 30, -30, 45, -45, 60, -60, 90, -90, 180, -180];

    pub fn new(deg: i32) -> Result<Self, GeoModelError> {
        if Self::SUPPORTED.contains(&deg) {
            Ok(Angle(deg))
        } else {
            Err(GeoModelError::UnsupportedAngle(deg))
        }
    }

    pub fn degrees(&self) -> i32 {
        self.0
    }
}

/// One tool application, as entered by the user.
#[derive(Clone, Debug, PartialEq)]
pub enum ToolApp {
    FreePoint,
    PointOn(ObjId),
    Line(ObjId, ObjId),
    Segment(ObjId, ObjId),
    Ray(ObjId, ObjId),
    Vector(ObjId, ObjId),
    Circle(ObjId, ObjId),
    Circle3(ObjId, ObjId, ObjId),
    Midpoint(ObjId, Option<ObjId>),
    PerpBisector(ObjId, Option<ObjId>),
    PerpLine(ObjId, ObjId),
    ParLine(ObjId, ObjId),
    AngularBisector(ObjId, ObjId, ObjId),
    Intersect(ObjId, ObjId),
    Tangent(ObjId, ObjId),
    ReflectPoint(ObjId, ObjId),
    ReflectLine(ObjId, ObjId),
    ReflectCircle(ObjId, ObjId),
    Rotate(ObjId, Angle, ObjId),
    Translate(ObjId, ObjId),
    Parabola(ObjId, ObjId),
    Ellipse(ObjId, ObjId, ObjId),
    Hyperbola(ObjId, ObjId, ObjId),
    Polygon(Vec<ObjId>),
}

impl ToolApp {
    pub fn tool_name(&self) -> &'static str {
        match self {
            ToolApp::FreePoint => "Point",
            ToolApp::PointOn(_) => "PointOn",
            ToolApp::Line(..) => "Line",
            ToolApp::Segment(..) => "Segment",
            ToolApp::Ray(..) => "Ray",
            ToolApp::Vector(..) => "Vector",
            ToolApp::Circle(..) => "Circle",
            ToolApp::Circle3(..) => "Circle3",
            ToolApp::Midpoint(..) => "Midpoint",
            ToolApp::PerpBisector(..) => "PerpBisector",
            ToolApp::PerpLine(..) => "PerpLine",
            ToolApp::ParLine(..) => "ParLine",
            ToolApp::AngularBisector(..) => "AngularBisector",
            ToolApp::Intersect(..) => "Intersect",
            ToolApp::Tangent(..) => "Tangent",
            ToolApp::ReflectPoint(..) => "ReflectPoint",
            ToolApp::ReflectLine(..) => "ReflectLine",
            ToolApp::ReflectCircle(..) => "ReflectCircle",
            ToolApp::Rotate(..) => "Rotate",
            ToolApp::Translate(..) => "Translate",
            ToolApp::Parabola(..) => "Parabola",
            ToolApp::Ellipse(..) => "Ellipse",
            ToolApp::Hyperbola(..) => "Hyperbola",
            ToolApp::Polygon(..) => "Polygon",
        }
    }
}

/// A recorded construction step: the tool application, the object it
/// produced, and any hidden reflected defining points it created.
#[derive(Clone, Debug)]
pub struct ConstructionStep {
    pub name: String,
    pub tool: ToolApp,
    pub output: ObjId,
    /// (source point, reflected image point) pairs created when reflecting a
    /// non-point object; the images are hidden constrained points.
    pub reflected_pairs: Vec<(ObjId, ObjId)>,
}

#[derive(Clone, Debug)]
pub struct ObjEntry {
    pub name: Option<String>,
    pub obj: GeoObject,
    pub def_step: usize,
}

/// Ordered sequence of tool applications with a symbol table. Variable
/// indices are allocated monotonically in step order.
#[derive(Clone, Debug, Default)]
pub struct Construction {
    pub steps: Vec<ConstructionStep>,
    pub objects: Vec<ObjEntry>,
    pub symbols: BTreeMap<String, ObjId>,
    pub pool: VarPool,
}

impl Construction {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn obj(&self, id: ObjId) -> &GeoObject {
        &self.objects[id.0].obj
    }

    pub fn name_of(&self, id: ObjId) -> String {
        self.objects[id.0]
            .name
            .clone()
            .unwrap_or_else(|| format!("#{}", id.0))
    }

    pub fn lookup(&self, name: &str) -> Option<ObjId> {
        self.symbols.get(name).copied()
    }

    pub fn point_coords(&self, id: ObjId) -> Option<(Variable, Variable)> {
        match self.obj(id) {
            GeoObject::Point { x, y } => Some((*x, *y)),
            _ => None,
        }
    }

    fn check_ref(&self, tool: &str, id: ObjId) -> Result<(), GeoModelError> {
        if id.0 >= self.objects.len() {
            return Err(GeoModelError::DanglingReference(id.0));
        }
        let _ = tool;
        Ok(())
    }

    fn expect_point(&self, tool: &str, id: ObjId) -> Result<(), GeoModelError> {
        self.check_ref(tool, id)?;
        if !self.obj(id).is_point() {
            return Err(GeoModelError::KindMismatch {
                tool: tool.to_string(),
                expected: "a point".to_string(),
                got: self.obj(id).kind_name().to_string(),
            });
        }
        Ok(())
    }

    fn expect_lineish(&self, tool: &str, id: ObjId) -> Result<(), GeoModelError> {
        self.check_ref(tool, id)?;
        if !self.obj(id).is_lineish() {
            return Err(GeoModelError::KindMismatch {
                tool: tool.to_string(),
                expected: "a line".to_string(),
                got: self.obj(id).kind_name().to_string(),
            });
        }
        Ok(())
    }

    fn expect_curve(&self, tool: &str, id: ObjId) -> Result<(), GeoModelError> {
        self.check_ref(tool, id)?;
        if !self.obj(id).is_curve() {
            return Err(GeoModelError::KindMismatch {
                tool: tool.to_string(),
                expected: "a curve".to_string(),
                got: self.obj(id).kind_name().to_string(),
            });
        }
        Ok(())
    }

    fn expect_circle(&self, tool: &str, id: ObjId) -> Result<(), GeoModelError> {
        self.check_ref(tool, id)?;
        match self.obj(id) {
            GeoObject::Circle { .. } | GeoObject::Circle3 { .. } => Ok(()),
            other => Err(GeoModelError::KindMismatch {
                tool: tool.to_string(),
                expected: "a circle".to_string(),
                got: other.kind_name().to_string(),
            }),
        }
    }

    fn push_named(&mut self, name: &str, obj: GeoObject, step: usize) -> Result<ObjId, GeoModelError> {
        if self.symbols.contains_key(name) {
            return Err(GeoModelError::DuplicateName(name.to_string()));
        }
        let id = ObjId(self.objects.len());
        self.objects.push(ObjEntry {
            name: Some(name.to_string()),
            obj,
            def_step: step,
        });
        self.symbols.insert(name.to_string(), id);
        Ok(id)
    }

    fn push_hidden(&mut self, obj: GeoObject, step: usize) -> ObjId {
        let id = ObjId(self.objects.len());
        self.objects.push(ObjEntry {
            name: None,
            obj,
            def_step: step,
        });
        id
    }

    fn new_point(&mut self, role: VarRole) -> GeoObject {
        let (x, y) = self.pool.fresh_pair(role);
        GeoObject::Point { x, y }
    }

    /// Reflect every defining point of `src`, producing hidden dependent
    /// image points, and rebuild an object of the same kind over them.
    fn reflect_object(
        &mut self,
        tool: &str,
        src: ObjId,
        step: usize,
        pairs: &mut Vec<(ObjId, ObjId)>,
        allow_conic: bool,
    ) -> Result<GeoObject, GeoModelError> {
        let image_of = |c: &mut Self, p: ObjId, pairs: &mut Vec<(ObjId, ObjId)>| -> ObjId {
            let pt = c.new_point(VarRole::Dependent);
            let id = c.push_hidden(pt, step);
            pairs.push((p, id));
            id
        };
        match self.obj(src).clone() {
            GeoObject::Point { .. } => unreachable!("point reflection handled by caller"),
            GeoObject::LinePts { kind, a, b } => {
                let (ra, rb) = (image_of(self, a, pairs), image_of(self, b, pairs));
                Ok(GeoObject::LinePts { kind, a: ra, b: rb })
            }
            GeoObject::Circle { center, through } => {
                let (rc, rt) = (image_of(self, center, pairs), image_of(self, through, pairs));
                Ok(GeoObject::Circle { center: rc, through: rt })
            }
            GeoObject::Circle3 { a, b, c } => {
                let (ra, rb, rc) = (
                    image_of(self, a, pairs),
                    image_of(self, b, pairs),
                    image_of(self, c, pairs),
                );
                Ok(GeoObject::Circle3 { a: ra, b: rb, c: rc })
            }
            GeoObject::Parabola { focus, directrix } => {
                let rf = image_of(self, focus, pairs);
                let (da, db) = match self.obj(directrix) {
                    GeoObject::LinePts { a, b, .. } => (*a, *b),
                    _ => {
                        return Err(GeoModelError::Unsupported(format!(
                            "{tool} of a parabola with a derived directrix"
                        )))
                    }
                };
                let (rda, rdb) = (image_of(self, da, pairs), image_of(self, db, pairs));
                let dline = self.push_hidden(
                    GeoObject::LinePts {
                        kind: LineishKind::Line,
                        a: rda,
                        b: rdb,
                    },
                    step,
                );
                Ok(GeoObject::Parabola {
                    focus: rf,
                    directrix: dline,
                })
            }
            GeoObject::Conic { f1, f2, through } if allow_conic => {
                let (r1, r2, rt) = (
                    image_of(self, f1, pairs),
                    image_of(self, f2, pairs),
                    image_of(self, through, pairs),
                );
                Ok(GeoObject::Conic { f1: r1, f2: r2, through: rt })
            }
            other => Err(GeoModelError::Unsupported(format!(
                "{tool} of a {}",
                other.kind_name()
            ))),
        }
    }

    /// Append one tool application under `name`. Validates references,
    /// arities and argument kinds; allocates coordinate variables
    /// monotonically.
    pub fn append(&mut self, name: &str, tool: ToolApp) -> Result<ObjId, GeoModelError> {
        let step = self.steps.len();
        let tname = tool.tool_name();
        let mut reflected_pairs = Vec::new();
        let obj = match &tool {
            ToolApp::FreePoint => self.new_point(VarRole::Free),
            ToolApp::PointOn(c) => {
                self.expect_curve(tname, *c)?;
                self.new_point(VarRole::Dependent)
            }
            ToolApp::Line(a, b) | ToolApp::Segment(a, b) | ToolApp::Ray(a, b) | ToolApp::Vector(a, b) => {
                self.expect_point(tname, *a)?;
                self.expect_point(tname, *b)?;
                let kind = match tool {
                    ToolApp::Line(..) => LineishKind::Line,
                    ToolApp::Segment(..) => LineishKind::Segment,
                    ToolApp::Ray(..) => LineishKind::Ray,
                    _ => LineishKind::Vector,
                };
                GeoObject::LinePts { kind, a: *a, b: *b }
            }
            ToolApp::Circle(o, t) => {
                self.expect_point(tname, *o)?;
                self.expect_point(tname, *t)?;
                GeoObject::Circle { center: *o, through: *t }
            }
            ToolApp::Circle3(a, b, c) => {
                for id in [a, b, c] {
                    self.expect_point(tname, *id)?;
                }
                GeoObject::Circle3 { a: *a, b: *b, c: *c }
            }
            ToolApp::Midpoint(a, b) => {
                match b {
                    Some(b) => {
                        self.expect_point(tname, *a)?;
                        self.expect_point(tname, *b)?;
                    }
                    None => match self.obj(*a) {
                        GeoObject::LinePts { kind: LineishKind::Segment, .. } => {}
                        other => {
                            return Err(GeoModelError::KindMismatch {
                                tool: tname.to_string(),
                                expected: "two points or a segment".to_string(),
                                got: other.kind_name().to_string(),
                            })
                        }
                    },
                }
                self.new_point(VarRole::Dependent)
            }
            ToolApp::PerpBisector(a, b) => {
                let (a, b) = match b {
                    Some(b) => {
                        self.expect_point(tname, *a)?;
                        self.expect_point(tname, *b)?;
                        (*a, *b)
                    }
                    None => match self.obj(*a) {
                        GeoObject::LinePts { a, b, .. } => (*a, *b),
                        other => {
                            return Err(GeoModelError::KindMismatch {
                                tool: tname.to_string(),
                                expected: "two points or a segment".to_string(),
                                got: other.kind_name().to_string(),
                            })
                        }
                    },
                };
                GeoObject::PerpBisector { a, b }
            }
            ToolApp::PerpLine(p, l) => {
                self.expect_point(tname, *p)?;
                self.expect_lineish(tname, *l)?;
                GeoObject::PerpLine { through: *p, base: *l }
            }
            ToolApp::ParLine(p, l) => {
                self.expect_point(tname, *p)?;
                self.expect_lineish(tname, *l)?;
                GeoObject::ParLine { through: *p, base: *l }
            }
            ToolApp::AngularBisector(a, b, c) => {
                for id in [a, b, c] {
                    self.expect_point(tname, *id)?;
                }
                GeoObject::AngularBisector { a: *a, vertex: *b, c: *c }
            }
            ToolApp::Intersect(o1, o2) => {
                self.expect_curve(tname, *o1)?;
                self.expect_curve(tname, *o2)?;
                self.new_point(VarRole::Dependent)
            }
            ToolApp::Tangent(p, c) => {
                self.expect_point(tname, *p)?;
                self.check_ref(tname, *c)?;
                match self.obj(*c) {
                    GeoObject::Circle { .. }
                    | GeoObject::Circle3 { .. }
                    | GeoObject::Parabola { .. }
                    | GeoObject::Conic { .. } => {}
                    other => {
                        return Err(GeoModelError::KindMismatch {
                            tool: tname.to_string(),
                            expected: "a circle, parabola or ellipse/hyperbola".to_string(),
                            got: other.kind_name().to_string(),
                        })
                    }
                }
                GeoObject::TangentLine { from: *p, target: *c }
            }
            ToolApp::ReflectPoint(x, m) => {
                self.expect_point(tname, *m)?;
                self.check_ref(tname, *x)?;
                if self.obj(*x).is_point() {
                    self.new_point(VarRole::Dependent)
                } else {
                    self.reflect_object(tname, *x, step, &mut reflected_pairs, true)?
                }
            }
            ToolApp::ReflectLine(x, l) => {
                self.expect_lineish(tname, *l)?;
                self.check_ref(tname, *x)?;
                if self.obj(*x).is_point() {
                    self.new_point(VarRole::Dependent)
                } else {
                    // inversion handles points, lines, circles, and parabolas
                    self.reflect_object(tname, *x, step, &mut reflected_pairs, false)?
                }
            }
            ToolApp::ReflectCircle(x, c) => {
                self.expect_circle(tname, *c)?;
                self.check_ref(tname, *x)?;
                match self.obj(*x) {
                    GeoObject::Point { .. } => self.new_point(VarRole::Dependent),
                    GeoObject::Circle { .. } | GeoObject::Circle3 { .. } => {
                        GeoObject::InvertedCircle { source: *x, mirror: *c }
                    }
                    other => {
                        return Err(GeoModelError::Unsupported(format!(
                            "{tname} of a {}",
                            other.kind_name()
                        )))
                    }
                }
            }
            ToolApp::Rotate(x, _angle, o) => {
                self.expect_point(tname, *x)?;
                self.expect_point(tname, *o)?;
                self.new_point(VarRole::Dependent)
            }
            ToolApp::Translate(x, v) => {
                self.expect_point(tname, *x)?;
                self.check_ref(tname, *v)?;
                match self.obj(*v) {
                    GeoObject::LinePts { kind: LineishKind::Vector, .. } => {}
                    other => {
                        return Err(GeoModelError::KindMismatch {
                            tool: tname.to_string(),
                            expected: "a vector".to_string(),
                            got: other.kind_name().to_string(),
                        })
                    }
                }
                self.new_point(VarRole::Dependent)
            }
            ToolApp::Parabola(f, d) => {
                self.expect_point(tname, *f)?;
                self.expect_lineish(tname, *d)?;
                GeoObject::Parabola { focus: *f, directrix: *d }
            }
            ToolApp::Ellipse(f1, f2, t) | ToolApp::Hyperbola(f1, f2, t) => {
                for id in [f1, f2, t] {
                    self.expect_point(tname, *id)?;
                }
                GeoObject::Conic { f1: *f1, f2: *f2, through: *t }
            }
            ToolApp::Polygon(vs) => {
                for id in vs {
                    self.expect_point(tname, *id)?;
                }
                GeoObject::Polygon { vertices: vs.clone() }
            }
        };
        let id = self.push_named(name, obj, step)?;
        self.steps.push(ConstructionStep {
            name: name.to_string(),
            tool,
            output: id,
            reflected_pairs,
        });
        Ok(id)
    }

    /// Partition of the allocated coordinate variables by role.
    pub fn classify_variables(&self) -> (BTreeSet<Variable>, BTreeSet<Variable>) {
        let free = self.pool.vars_with_role(VarRole::Free).into_iter().collect();
        let dependent = self
            .pool
            .vars_with_role(VarRole::Dependent)
            .into_iter()
            .collect();
        (free, dependent)
    }

    /// Named points whose coordinates are free variables, in construction
    /// order.
    pub fn free_points(&self) -> Vec<(String, ObjId)> {
        self.objects
            .iter()
            .enumerate()
            .filter_map(|(i, e)| match (&e.name, &e.obj) {
                (Some(n), GeoObject::Point { x, .. })
                    if self.pool.role(*x) == VarRole::Free =>
                {
                    Some((n.clone(), ObjId(i)))
                }
                _ => None,
            })
            .collect()
    }

    /// Defining points of a two-point linear object, if it is one.
    pub fn line_two_points(&self, id: ObjId) -> Option<(ObjId, ObjId)> {
        match self.obj(id) {
            GeoObject::LinePts { a, b, .. } => Some((*a, *b)),
            GeoObject::TangentLine { .. } => None,
            _ => None,
        }
    }
}

/// Formula tree for equation statements, over squared distances, lengths,
/// doubled signed areas and rational constants.
#[derive(Clone, Debug, PartialEq)]
pub enum Formula {
    Const(Rat),
    Dist2(ObjId, ObjId),
    Length(ObjId, ObjId),
    SignedArea2(Vec<ObjId>),
    Add(Box<Formula>, Box<Formula>),
    Sub(Box<Formula>, Box<Formula>),
    Mul(Box<Formula>, Box<Formula>),
    Neg(Box<Formula>),
}

/// One of the nine relation kinds the prover decides.
#[derive(Clone, Debug, PartialEq)]
pub enum Statement {
    AreCollinear(ObjId, ObjId, ObjId),
    AreConcurrent(ObjId, ObjId, ObjId),
    AreConcyclic(ObjId, ObjId, ObjId, ObjId),
    AreCongruent(ObjId, ObjId),
    AreEqual(ObjId, ObjId),
    AreParallel(ObjId, ObjId),
    ArePerpendicular(ObjId, ObjId),
    Incident(ObjId, ObjId),
    EqualAngles([ObjId; 6]),
    Equation(Formula, Formula),
}

impl Statement {
    pub fn kind_name(&self) -> &'static str {
        match self {
            Statement::AreCollinear(..) => "AreCollinear",
            Statement::AreConcurrent(..) => "AreConcurrent",
            Statement::AreConcyclic(..) => "AreConcyclic",
            Statement::AreCongruent(..) => "AreCongruent",
            Statement::AreEqual(..) => "AreEqual",
            Statement::AreParallel(..) => "AreParallel",
            Statement::ArePerpendicular(..) => "ArePerpendicular",
            Statement::Incident(..) => "Incident",
            Statement::EqualAngles(..) => "EqualAngles",
            Statement::Equation(..) => "Equation",
        }
    }
}

/// Evaluation mode requested by the source file.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ProofMode {
    Prove,
    ProveDetails,
}

pub type Substitution = BTreeMap<Variable, Rat>;
