use vortex_core::charts::{build_chart, ReducedPoint, Scenario};

fn main() {
    // Slice H(u, pi) within the middle band for several mu; look at the
    // structure around the symmetric latitude u* = arccos(mu/4).
    for mu in [0.4, 0.8, 1.5, 2.5, 3.5] {
        let chart = build_chart(Scenario::SpherePairs { mu }).unwrap();
        let band_lo = (mu / 2.0_f64).acos(); // 2-4 collision wall
        let band_hi = std::f64::consts::FRAC_PI_2.max(band_lo); // 1-3 wall
        let (lo, hi) = (band_lo.min(band_hi), band_lo.max(band_hi));
        let sym = (mu / 4.0_f64).acos();
        print!("mu={mu:>4}: band=({lo:.3},{hi:.3}) sym={sym:.3} | H(u,pi): ");
        let mut vals = Vec::new();
        for k in 1..40 {
            let u = lo + (hi - lo) * k as f64 / 40.0;
            match chart.reduced_hamiltonian(ReducedPoint::new(u, std::f64::consts::PI)) {
                Ok(h) => vals.push((u, h)),
                Err(_) => vals.push((u, f64::NAN)),
            }
        }
        // Count interior extrema.
        let mut extrema = 0;
        for w in vals.windows(3) {
            let (a, b, c) = (w[0].1, w[1].1, w[2].1);
            if a.is_finite() && b.is_finite() && c.is_finite() {
                if (b > a && b > c) || (b < a && b < c) {
                    extrema += 1;
                    print!("[{} {:.3}@u={:.3}] ", if b > a { "max" } else { "min" }, b, w[1].0);
                }
            }
        }
        println!("({extrema} extrema)");
        // Hessian at the symmetric point.
        if let (Ok(g), Ok(h)) = (
            chart.reduced_gradient(ReducedPoint::new(sym, std::f64::consts::PI)),
            chart.reduced_hessian(ReducedPoint::new(sym, std::f64::consts::PI)),
        ) {
            let det = h[0][0] * h[1][1] - h[0][1] * h[1][0];
            println!(
                "        grad=({:.1e},{:.1e}) Huu={:.3} Hvv={:.3} det={:.3}",
                g[0], g[1], h[0][0], h[1][1], det
            );
        }
    }
}
