use std::f64::consts::{LN_2, PI};

use hlz_core::identitylab::{descriptor, sweep, EvalOptions, ReportWriter, SweepGrid};
use hlz_core::lerch::{hurwitz_zeta, phi, EvalConfig};
use hlz_core::numkernel::{constant, ConstantTag};
use hlz_core::{Complex64, Error};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * b.norm().max(1.0)
}

#[test]
fn classical_values_on_the_unit_circle() {
    let cfg = EvalConfig::default();
    // alternating series: eta(1) = ln 2, eta(2) = pi^2 / 12
    let eta1 = phi(c(-1.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), &cfg).unwrap().value;
    assert!(close(eta1, c(LN_2, 0.0), 1e-12), "{eta1}");
    let eta2 = phi(c(-1.0, 0.0), c(2.0, 0.0), c(1.0, 0.0), &cfg).unwrap().value;
    assert!(close(eta2, c(PI * PI / 12.0, 0.0), 1e-12), "{eta2}");
    // Dirichlet beta(2) = Catalan: sum (-1)^n / (2n+1)^2 = Phi(-1, 2, 1/2) / 4
    let beta2 = phi(c(-1.0, 0.0), c(2.0, 0.0), c(0.5, 0.0), &cfg).unwrap().value / 4.0;
    assert!(close(beta2, c(constant(ConstantTag::Catalan), 0.0), 1e-12), "{beta2}");
    // Phi(i, 1, 1) = -log(1 - i) / i
    let quarter = phi(c(0.0, 1.0), c(1.0, 0.0), c(1.0, 0.0), &cfg).unwrap().value;
    let expected = -(c(1.0, -1.0)).ln() / c(0.0, 1.0);
    assert!(close(quarter, expected, 1e-12), "{quarter} vs {expected}");
}

#[test]
fn hurwitz_zeta_classical_values() {
    let z2 = hurwitz_zeta(c(2.0, 0.0), c(1.0, 0.0)).unwrap();
    assert!(close(z2, c(PI * PI / 6.0, 0.0), 1e-13));
    let z3 = hurwitz_zeta(c(3.0, 0.0), c(1.0, 0.0)).unwrap();
    assert!(close(z3, c(constant(ConstantTag::Apery), 0.0), 1e-13));
    // zeta(2, 1/2) = (2^2 - 1) zeta(2)
    let half = hurwitz_zeta(c(2.0, 0.0), c(0.5, 0.0)).unwrap();
    assert!(close(half, c(PI * PI / 2.0, 0.0), 1e-13));
}

#[test]
fn domain_errors_are_typed() {
    let cfg = EvalConfig::default();
    let s = c(2.0, 0.0);
    assert!(matches!(phi(c(1.1, 0.0), s, c(1.0, 0.0), &cfg), Err(Error::Domain(_))));
    assert!(matches!(phi(c(1.0, 1e-8), s, c(1.0, 0.0), &cfg), Err(Error::Domain(_))));
    assert!(matches!(phi(c(0.5, 0.0), s, c(-2.0, 0.0), &cfg), Err(Error::LatticePole { n: 2 })));
    assert!(matches!(phi(c(f64::NAN, 0.0), s, c(1.0, 0.0), &cfg), Err(Error::Domain(_))));
    assert!(matches!(EvalConfig::default().with_rel_tol(0.0), Err(Error::InvalidConfig(_))));
    assert!(matches!(descriptor("ex9_9"), Err(Error::UnknownIdentity(_))));
}

#[test]
fn streamed_report_is_json_lines_in_grid_order() {
    let desc = descriptor("ex2_2").unwrap();
    let grid = SweepGrid::parse("n=0..2;samples=2;seed=11").unwrap();
    let mut writer = ReportWriter::new(Vec::new());
    let mut seen = Vec::new();
    let summary = sweep(desc, &grid, 1e-10, &EvalOptions::default(), |i, r| {
        seen.push(i);
        writer.record(r)
    })
    .unwrap();
    writer.summary(&summary).unwrap();
    let text = String::from_utf8(writer.into_inner()).unwrap();
    let lines: Vec<serde_json::Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(seen, (0..6).collect::<Vec<_>>());
    assert_eq!(lines.len(), 7);
    assert_eq!(lines[6]["type"], "summary");
    assert_eq!(lines[6]["records"], 6);
    assert!(lines[..6].iter().all(|l| l["type"] == "record" && l["id"] == "ex2_2"));
}
