//! End-to-end pipeline checks on small constructions.

use std::time::Duration;

use geoprove_core::dsl::parse_construction;
use geoprove_core::prover::{prove, Ndg, ProverConfig, Verdict};

fn run(src: &str) -> geoprove_core::prover::ProverResult {
    let parsed = parse_construction(src).unwrap();
    prove(
        &parsed.construction,
        &parsed.statement,
        &ProverConfig::default(),
    )
    .unwrap()
}

const INVERSION: &str = "\
A = Point()
B = Point()
c = Circle(A, B)
C = Point()
a = Line(B, C)
D = Point(a)
C' = ReflectCircle(C, c)
D' = ReflectCircle(D, c)
d = Circle3(A, B, C')
ProveDetails(Incident(D', d))
";

#[test]
fn inversion_preserves_incidence() {
    let r = run(INVERSION);
    assert_eq!(r.verdict, Verdict::True, "log:\n{}", r.log.join("\n"));
    assert_eq!(
        r.ndg,
        vec![
            Ndg::AreEqual("A".into(), "B".into()),
            Ndg::AreCollinear("A".into(), "B".into(), "C".into()),
        ],
        "log:\n{}",
        r.log.join("\n")
    );
}

#[test]
fn thales_angle_is_right() {
    let src = "\
A = Point()
B = Point()
O = Midpoint(A, B)
k = Circle(O, A)
C = Point(k)
ca = Segment(C, A)
cb = Segment(C, B)
Prove(ArePerpendicular(ca, cb))
";
    let r = run(src);
    assert_eq!(r.verdict, Verdict::True, "log:\n{}", r.log.join("\n"));
}

#[test]
fn collinear_free_points_false() {
    let src = "\
A = Point()
B = Point()
C = Point()
Prove(AreCollinear(A, B, C))
";
    let r = run(src);
    assert_eq!(r.verdict, Verdict::False);
}

#[test]
fn tiny_budget_gives_unknown_not_wrong() {
    let cfg = ProverConfig {
        max_pair_reductions: 3,
        timeout: Some(Duration::from_secs(60)),
        ..ProverConfig::default()
    };
    let parsed = parse_construction(INVERSION).unwrap();
    let r = prove(&parsed.construction, &parsed.statement, &cfg).unwrap();
    assert_eq!(r.verdict, Verdict::Unknown);
    assert!(r.ndg.is_empty());
}
