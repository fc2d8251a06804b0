use vortex_core::charts::{build_chart, ReducedPoint, Scenario};
use vortex_core::dynamics;
use vortex_core::portrait::{find_critical_points, sample_field, PortraitOptions};

fn main() {
    let chart = build_chart(Scenario::SphereTwoRings {
        n: 3,
        ring_vorticity: 2.0,
        polar_vorticities: vec![],
        mu: 1.0,
    })
    .unwrap();
    let options = PortraitOptions { resolution: (300, 300), ..Default::default() };
    let field = sample_field(&chart, &options).unwrap();
    let (pts, _) = find_critical_points(&chart, &field).unwrap();
    println!("{} critical points", pts.len());
    for cp in &pts {
        let cfg = chart.lift(cp.location).unwrap();
        let vel = dynamics::vector_field(chart.system(), &cfg).unwrap();
        let pts3 = cfg.sphere_points().unwrap();
        // Fit a rigid rotation about z: v_i = w * (z x x_i).
        let mut num = 0.0;
        let mut den = 0.0;
        for (x, v) in pts3.iter().zip(&vel) {
            let t = nalgebra::Vector3::z().cross(x);
            num += v.dot(&t);
            den += t.dot(&t);
        }
        let w = num / den;
        let mut res: f64 = 0.0;
        for (x, v) in pts3.iter().zip(&vel) {
            let t = nalgebra::Vector3::z().cross(x);
            res = res.max((v - w * t).norm());
        }
        println!(
            "{:?} (u={:.4}, v={:.4}) H={:.4}: omega={:.4}, RE residual={:.2e}",
            cp.kind, cp.location.u, cp.location.v, cp.energy, w, res
        );
    }

    // 1-D slices through the staggered and aligned lines.
    for (name, v) in [("staggered", std::f64::consts::PI / 3.0), ("aligned", 0.0f64)] {
        println!("-- H along u at {name} v={v:.4}");
        let mut prev = f64::NAN;
        for k in 0..60 {
            let u = 0.05 + (std::f64::consts::PI - 0.1) * k as f64 / 59.0;
            let h = chart
                .reduced_hamiltonian(ReducedPoint::new(u, v + 1e-9))
                .map(|x| format!("{x:8.3}"))
                .unwrap_or_else(|_| "   masked".into());
            print!("{h} ");
            if k % 6 == 5 {
                println!();
            }
            let _ = prev;
            prev = 0.0;
        }
        println!();
    }
}
