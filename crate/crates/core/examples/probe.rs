use vortex_core::charts::{build_chart, ReducedPoint, Scenario};
use vortex_core::portrait::{compute_portrait, find_critical_points, sample_field, PortraitOptions};

fn report(name: &str, scenario: Scenario, res: usize) {
    let chart = build_chart(scenario).unwrap();
    let options = PortraitOptions { resolution: (res, res), ..Default::default() };
    let t0 = std::time::Instant::now();
    let field = sample_field(&chart, &options).unwrap();
    let (pts, discarded) = find_critical_points(&chart, &field).unwrap();
    println!(
        "== {name}: {} critical points ({} discarded seeds), {:?} elapsed, feasible {:.3}",
        pts.len(),
        discarded,
        t0.elapsed(),
        field.feasible_fraction()
    );
    for p in &pts {
        println!(
            "   {:?} at (u={:.6}, v={:.6})  H={:.6}  det={:.3e}  |g|={:.2e}",
            p.kind, p.location.u, p.location.v, p.energy, p.hessian_det, p.gradient_norm
        );
    }
}

fn main() {
    report(
        "S1 N=3 lam=2 mu=1",
        Scenario::SphereTwoRings { n: 3, ring_vorticity: 2.0, polar_vorticities: vec![], mu: 1.0 },
        220,
    );
    report(
        "S3 N=3 lam=1 mu=4",
        Scenario::SphereTwoRingsPoles { n: 3, pole_vorticity: 1.0, mu: 4.0 },
        220,
    );
    report(
        "S3 N=3 lam=1 mu=2.5",
        Scenario::SphereTwoRingsPoles { n: 3, pole_vorticity: 1.0, mu: 2.5 },
        220,
    );
    report(
        "S4 N=3 lam=1 mu=6",
        Scenario::SphereFourRingsPoles { n: 3, pole_vorticity: 1.0, mu: 6.0 },
        220,
    );
    report(
        "S4 N=3 lam=1 mu=2.5",
        Scenario::SphereFourRingsPoles { n: 3, pole_vorticity: 1.0, mu: 2.5 },
        220,
    );
    report(
        "S7 N=3 lam=+1 mu=1 lc=0",
        Scenario::PlaneTwoRingsCenter { n: 3, ring_vorticity: 1.0, center_vorticity: 0.0, mu: 1.0 },
        220,
    );
    report(
        "S7 N=3 lam=+1 mu=1 lc=1",
        Scenario::PlaneTwoRingsCenter { n: 3, ring_vorticity: 1.0, center_vorticity: 1.0, mu: 1.0 },
        220,
    );
    report(
        "S7 N=3 lam=-5 mu=1",
        Scenario::PlaneTwoRingsCenter { n: 3, ring_vorticity: -5.0, center_vorticity: 0.0, mu: 1.0 },
        220,
    );
    report("S2 mu=0.8", Scenario::SpherePairs { mu: 0.8 }, 220);

    // Full portrait with separatrices for the two-ring chart.
    let chart = build_chart(Scenario::SphereTwoRings {
        n: 3,
        ring_vorticity: 2.0,
        polar_vorticities: vec![],
        mu: 1.0,
    })
    .unwrap();
    let t0 = std::time::Instant::now();
    let portrait =
        compute_portrait(&chart, &PortraitOptions { resolution: (400, 400), ..Default::default() })
            .unwrap();
    let s = portrait.summary();
    println!("S1 full portrait in {:?}: {s:#?}", t0.elapsed());
    let p = ReducedPoint::new(1.0, 1.0);
    let _ = p;
}
