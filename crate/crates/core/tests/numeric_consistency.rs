//! Floating-point cross-checks of the algebraic translation.
//!
//! Every construction tool must admit random realizations whose hypothesis
//! residuals vanish to 1e-9 (scaled), and for true statements the thesis
//! must vanish to 1e-6 on non-degenerate samples.

use std::collections::BTreeMap;

use geoprove_core::dsl::parse_construction;
use geoprove_core::geomodel::Construction;
use geoprove_core::poly::Variable;
use geoprove_core::prover::Ndg;
use geoprove_core::translate::{numeric_realize, Translator};
use geoprove_core::QPoly;

const HYP_TOL: f64 = 1e-9;
const THESIS_TOL: f64 = 1e-6;

/// Constructions that jointly exercise every tool in the catalog.
fn tool_sweep() -> Vec<(&'static str, &'static str)> {
    vec![
        (
            "linear objects",
            "A = Point()\nB = Point()\nl = Line(A, B)\nC = Point(l)\ns = Segment(A, B)\nD = Point(s)\nr = Ray(A, B)\nE = Point(r)\nProve(AreCollinear(C, D, E))\n",
        ),
        (
            "circles and midpoints",
            "A = Point()\nB = Point()\nC = Point()\nc = Circle(A, B)\nP = Point(c)\nk = Circle3(A, B, C)\nQ = Point(k)\nM = Midpoint(A, B)\ns = Segment(A, C)\nN = Midpoint(s)\nProve(AreConcyclic(P, Q, M, N))\n",
        ),
        (
            "derived lines",
            "A = Point()\nB = Point()\nC = Point()\nl = Line(A, B)\np = PerpLine(C, l)\nD = Point(p)\nq = ParLine(C, l)\nE = Point(q)\nb = PerpBisector(A, B)\nF = Point(b)\nw = AngularBisector(A, B, C)\nG = Point(w)\nProve(AreCollinear(D, E, F))\n",
        ),
        (
            "intersections",
            "A = Point()\nB = Point()\nC = Point()\nD = Point()\nl = Line(A, B)\nm = Line(C, D)\nX = Intersect(l, m)\nc = Circle(A, B)\nY = Intersect(l, c)\nProve(AreCollinear(X, Y, A))\n",
        ),
        (
            "transformations",
            "A = Point()\nB = Point()\nC = Point()\nP = ReflectPoint(C, B)\nl = Line(A, B)\nQ = ReflectLine(C, l)\nc = Circle(A, B)\nR = ReflectCircle(C, c)\nv = Vector(A, B)\nS = Translate(C, v)\nT = Rotate(C, 90, A)\nU = Rotate(C, 60, A)\nV = Rotate(C, 45, A)\nProve(AreCollinear(P, Q, R))\n",
        ),
        (
            "conics",
            "A = Point()\nB = Point()\nC = Point()\nl = Line(A, B)\npar = Parabola(C, l)\nP = Point(par)\ne = Ellipse(A, B, C)\nQ = Point(e)\nh = Hyperbola(A, B, C)\nR = Point(h)\nProve(AreCollinear(P, Q, R))\n",
        ),
        (
            "tangent and polygon",
            "A = Point()\nB = Point()\nC = Point()\nD = Point()\nc = Circle(A, B)\nt = Tangent(C, c)\nP = Point(t)\npoly = Polygon(A, B, C, D)\nProve(AreCollinear(A, B, P))\n",
        ),
    ]
}

#[test]
fn every_tool_realizes_with_tiny_residuals() {
    for (label, src) in tool_sweep() {
        let parsed = parse_construction(src).unwrap();
        let mut tr = Translator::new(&parsed.construction);
        tr.run().unwrap();
        let t = tr.finish();
        for seed in 0..100u64 {
            let coords = numeric_realize(&parsed.construction, &t, seed)
                .unwrap_or_else(|e| panic!("{label}, seed {seed}: {e}"));
            for h in &t.hypotheses {
                let (v, s) = h.eval_f64_with_scale(&coords).unwrap();
                assert!(
                    v.abs() <= HYP_TOL * s.max(1.0),
                    "{label}, seed {seed}: residual {v} (scale {s}) for {h}"
                );
            }
        }
    }
}

/// True statements whose published non-degeneracy conditions are all
/// recognized forms.
fn true_theorems() -> Vec<(&'static str, &'static str)> {
    vec![
        (
            "thales",
            "A = Point()\nB = Point()\nO = Midpoint(A, B)\nk = Circle(O, A)\nC = Point(k)\nca = Segment(C, A)\ncb = Segment(C, B)\nProve(ArePerpendicular(ca, cb))\n",
        ),
        (
            "varignon",
            "A = Point()\nB = Point()\nC = Point()\nD = Point()\nP = Midpoint(A, B)\nQ = Midpoint(B, C)\nR = Midpoint(C, D)\nS = Midpoint(D, A)\npq = Segment(P, Q)\nsr = Segment(S, R)\nProve(AreParallel(pq, sr))\n",
        ),
        (
            "inversion",
            "A = Point()\nB = Point()\nc = Circle(A, B)\nC = Point()\na = Line(B, C)\nD = Point(a)\nC' = ReflectCircle(C, c)\nD' = ReflectCircle(D, c)\nd = Circle3(A, B, C')\nProveDetails(Incident(D', d))\n",
        ),
    ]
}

fn coords_of(cons: &Construction, name: &str) -> (Variable, Variable) {
    let id = cons.lookup(name).unwrap_or_else(|| panic!("no point {name}"));
    cons.point_coords(id).unwrap()
}

/// The degeneracy polynomial behind a recognized condition.
fn ndg_poly(cons: &Construction, ndg: &Ndg) -> QPoly {
    let v = QPoly::var;
    let pt = |n: &str| {
        let (x, y) = coords_of(cons, n);
        (v(x), v(y))
    };
    match ndg {
        Ndg::AreEqual(a, b) => {
            let (ax, ay) = pt(a);
            let (bx, by) = pt(b);
            let dx = &ax - &bx;
            let dy = &ay - &by;
            &(&dx * &dx) + &(&dy * &dy)
        }
        Ndg::AreCollinear(a, b, c) => {
            let (ax, ay) = pt(a);
            let (bx, by) = pt(b);
            let (cx, cy) = pt(c);
            &(&(&bx - &ax) * &(&cy - &ay)) - &(&(&by - &ay) * &(&cx - &ax))
        }
        Ndg::ArePerpendicular(a, b, c, d) => {
            let (ax, ay) = pt(a);
            let (bx, by) = pt(b);
            let (cx, cy) = pt(c);
            let (dx, dy) = pt(d);
            &(&(&bx - &ax) * &(&dx - &cx)) + &(&(&by - &ay) * &(&dy - &cy))
        }
        Ndg::Raw(p) => panic!("unrecognized condition in sampled theorem: {p}"),
    }
}

#[test]
fn true_theorems_vanish_on_nondegenerate_samples() {
    for (label, src) in true_theorems() {
        let parsed = parse_construction(src).unwrap();
        let cons = &parsed.construction;
        let mut tr = Translator::new(cons);
        tr.run().unwrap();
        let theses = tr.translate_statement(&parsed.statement).unwrap();
        let t = tr.finish();

        let result = geoprove_core::prover::prove(
            cons,
            &parsed.statement,
            &geoprove_core::prover::ProverConfig::default(),
        )
        .unwrap();
        assert_eq!(result.verdict, geoprove_core::prover::Verdict::True, "{label}");
        let ndg_polys: Vec<QPoly> =
            result.ndg.iter().map(|n| ndg_poly(cons, n)).collect();

        let mut accepted = 0u32;
        let mut seed = 0u64;
        while accepted < 50 {
            assert!(seed < 300, "{label}: too many degenerate samples");
            let coords: BTreeMap<Variable, f64> =
                match numeric_realize(cons, &t, seed) {
                    Ok(c) => c,
                    Err(_) => {
                        seed += 1;
                        continue;
                    }
                };
            seed += 1;
            // the sample must stay clear of every degeneracy
            let respected = ndg_polys.iter().all(|p| {
                let (v, s) = p.eval_f64_with_scale(&coords).unwrap();
                v.abs() > THESIS_TOL * s.max(1.0)
            });
            if !respected {
                continue;
            }
            accepted += 1;
            for th in &theses {
                let (v, s) = th.eval_f64_with_scale(&coords).unwrap();
                assert!(
                    v.abs() <= THESIS_TOL * s.max(1.0),
                    "{label}, seed {}: thesis residual {v} (scale {s})",
                    seed - 1
                );
            }
        }
    }
}
