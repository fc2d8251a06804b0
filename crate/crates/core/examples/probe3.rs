use vortex_core::charts::{build_chart, Scenario};
use vortex_core::portrait::{find_critical_points, sample_field, CriticalKind, PortraitOptions};

fn main() {
    for (lam, mu) in [(1.0, 4.5), (1.0, 5.0), (1.0, 5.3), (1.0, 5.6), (2.0, 6.5), (2.0, 6.8)] {
        let Ok(chart) = build_chart(Scenario::SphereTwoRings {
            n: 3,
            ring_vorticity: lam,
            polar_vorticities: vec![],
            mu,
        }) else {
            println!("lam={lam} mu={mu}: chart failed");
            continue;
        };
        let options = PortraitOptions { resolution: (240, 240), ..Default::default() };
        let field = sample_field(&chart, &options).unwrap();
        let (pts, _) = find_critical_points(&chart, &field).unwrap();
        let mut c = 0;
        let mut s = 0;
        let mut senergy = Vec::new();
        let mut cenergy = Vec::new();
        for p in &pts {
            match p.kind {
                CriticalKind::Center => {
                    c += 1;
                    cenergy.push(format!("{:.3}@{:.3}", p.energy, p.location.u));
                }
                CriticalKind::Saddle => {
                    s += 1;
                    senergy.push(format!("{:.3}@{:.3}", p.energy, p.location.u));
                }
                _ => {}
            }
        }
        println!("lam={lam} mu={mu}: {c}C {s}S | C {cenergy:?} | S {senergy:?}");
    }
}
