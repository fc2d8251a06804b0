//! Configuration documents: a single TOML file names the scenario (or a raw
//! system), the portrait/integration/scan/verification parameters and the
//! output prefix.

use anyhow::{bail, Context};
use serde::Deserialize;
use vortex_core::charts::{PolyhedralGroup, Scenario};
use vortex_core::portrait::PortraitOptions;
use vortex_core::trajectory::IntegratorOptions;
use vortex_core::{Configuration, PlanePoint, Surface, VortexSystem};

#[derive(Debug, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub scenario: Option<ScenarioConfig>,
    pub system: Option<SystemConfig>,
    #[serde(default)]
    pub portrait: PortraitConfig,
    #[serde(default)]
    pub integrate: IntegrateConfig,
    #[serde(default)]
    pub verify: VerifyConfig,
    pub scan: Option<ScanConfig>,
    #[serde(default)]
    pub output: OutputConfig,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub kind: String,
    pub n: Option<u32>,
    pub mu: Option<f64>,
    pub ring_vorticity: Option<f64>,
    #[serde(default)]
    pub polar_vorticities: Vec<f64>,
    pub pole_vorticity: Option<f64>,
    pub center_vorticity: Option<f64>,
    pub group: Option<String>,
    pub with_poles: Option<bool>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemConfig {
    pub surface: String,
    pub vorticities: Vec<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
#[serde(default)]
pub struct PortraitConfig {
    pub resolution: [usize; 2],
    pub levels: Vec<f64>,
    pub level_count: usize,
    pub margin: f64,
    pub u_window: Option<[f64; 2]>,
    pub v_window: Option<[f64; 2]>,
    pub mask_distance: Option<f64>,
}

impl Default for PortraitConfig {
    fn default() -> Self {
        let d = PortraitOptions::default();
        Self {
            resolution: [d.resolution.0, d.resolution.1],
            levels: Vec::new(),
            level_count: d.level_count,
            margin: d.margin,
            u_window: None,
            v_window: None,
            mask_distance: None,
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
#[serde(default)]
pub struct IntegrateConfig {
    pub t_end: f64,
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub collision_abort: f64,
    /// Reduced chart coordinates of the starting point (lifted).
    pub initial_point: Option<[f64; 2]>,
    /// Explicit configuration: (colatitude, longitude) rows on the sphere,
    /// (radius, angle) rows in the plane.
    pub initial_configuration: Option<Vec<[f64; 2]>>,
    /// Sample decimation in the trajectory file (1 = every accepted step).
    pub sample_stride: usize,
}

impl Default for IntegrateConfig {
    fn default() -> Self {
        let d = IntegratorOptions::default();
        Self {
            t_end: 10.0,
            rel_tol: d.rel_tol,
            abs_tol: d.abs_tol,
            collision_abort: d.collision_abort,
            initial_point: None,
            initial_configuration: None,
            sample_stride: 1,
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
#[serde(default)]
pub struct VerifyConfig {
    /// One of "equilibria", "conservation", "fixed-spaces", "recurrence",
    /// "all".
    pub suite: String,
    pub t_end: f64,
    /// Drift bound for the conservation and fixed-space checks.
    pub tolerance: f64,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { suite: "all".into(), t_end: 100.0, tolerance: 1e-8, seed: 2026 }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScanConfig {
    pub mu_from: f64,
    pub mu_to: f64,
    pub steps: usize,
    #[serde(default = "default_scan_resolution")]
    pub resolution: [usize; 2],
}

fn default_scan_resolution() -> [usize; 2] {
    [240, 240]
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
#[serde(default)]
pub struct OutputConfig {
    pub prefix: String,
}

impl Default for OutputConfig {
    fn default() -> Self {
        Self { prefix: "vortex".into() }
    }
}

pub fn load(path: &std::path::Path) -> anyhow::Result<Document> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read config {}", path.display()))?;
    let doc: Document = toml::from_str(&text).context("invalid config document")?;
    Ok(doc)
}

impl Document {
    pub fn scenario(&self) -> anyhow::Result<Scenario> {
        let Some(sc) = &self.scenario else {
            bail!("config has no [scenario] section");
        };
        sc.build()
    }

    pub fn system(&self) -> anyhow::Result<VortexSystem> {
        if let Some(sys) = &self.system {
            let surface = match sys.surface.as_str() {
                "sphere" => Surface::Sphere,
                "plane" => Surface::Plane,
                other => bail!("unknown surface '{other}'"),
            };
            return Ok(VortexSystem::new(surface, sys.vorticities.clone())?);
        }
        bail!("config has no [system] section")
    }

    pub fn portrait_options(&self) -> PortraitOptions {
        PortraitOptions {
            resolution: (self.portrait.resolution[0], self.portrait.resolution[1]),
            levels: self.portrait.levels.clone(),
            level_count: self.portrait.level_count,
            margin: self.portrait.margin,
            u_window: self.portrait.u_window.map(|w| (w[0], w[1])),
            v_window: self.portrait.v_window.map(|w| (w[0], w[1])),
            mask_distance: self.portrait.mask_distance,
        }
    }

    pub fn integrator_options(&self) -> anyhow::Result<IntegratorOptions> {
        let c = &self.integrate;
        if c.rel_tol <= 0.0 || c.abs_tol <= 0.0 || c.collision_abort <= 0.0 {
            bail!("integrator tolerances must be positive");
        }
        Ok(IntegratorOptions {
            rel_tol: c.rel_tol,
            abs_tol: c.abs_tol,
            collision_abort: c.collision_abort,
            ..Default::default()
        })
    }

    /// Explicit starting configuration for a given surface.
    pub fn initial_configuration(&self, surface: Surface) -> anyhow::Result<Option<Configuration>> {
        let Some(rows) = &self.integrate.initial_configuration else {
            return Ok(None);
        };
        Ok(Some(match surface {
            Surface::Sphere => {
                Configuration::sphere_from_angles(
                    &rows.iter().map(|r| (r[0], r[1])).collect::<Vec<_>>(),
                )
            }
            Surface::Plane => Configuration::plane(
                rows.iter().map(|r| PlanePoint::new(r[0], r[1])).collect(),
            ),
        }))
    }
}

impl ScenarioConfig {
    pub fn build(&self) -> anyhow::Result<Scenario> {
        let need_n = || self.n.context("scenario needs 'n'");
        let need_mu = || self.mu.context("scenario needs 'mu'");
        let scenario = match self.kind.as_str() {
            "sphere-two-rings" => Scenario::SphereTwoRings {
                n: need_n()?,
                ring_vorticity: self.ring_vorticity.context("needs 'ring_vorticity'")?,
                polar_vorticities: self.polar_vorticities.clone(),
                mu: need_mu()?,
            },
            "sphere-opposite-pairs" => Scenario::SpherePairs { mu: need_mu()? },
            "sphere-two-rings-poles" => Scenario::SphereTwoRingsPoles {
                n: need_n()?,
                pole_vorticity: self.pole_vorticity.unwrap_or(0.0),
                mu: need_mu()?,
            },
            "sphere-four-rings-poles" => Scenario::SphereFourRingsPoles {
                n: need_n()?,
                pole_vorticity: self.pole_vorticity.unwrap_or(0.0),
                mu: need_mu()?,
            },
            "sphere-three-pairs" => Scenario::SphereThreePairs { mu: need_mu()? },
            "sphere-four-pairs-zero" => Scenario::SphereFourPairsZero,
            "plane-two-rings-center" => Scenario::PlaneTwoRingsCenter {
                n: need_n()?,
                ring_vorticity: self.ring_vorticity.context("needs 'ring_vorticity'")?,
                center_vorticity: self.center_vorticity.unwrap_or(0.0),
                mu: need_mu()?,
            },
            "dancing-ring" => Scenario::DancingRing { n: need_n()? },
            "staggered-double-rings" => Scenario::StaggeredDoubleRings { n: need_n()? },
            "aligned-double-rings" => Scenario::AlignedDoubleRings { n: need_n()? },
            "dihedral-rings" => Scenario::DihedralRings {
                n: need_n()?,
                with_poles: self.with_poles.unwrap_or(false),
            },
            "polyhedral-orbit" => {
                let name = self.group.as_deref().context("needs 'group'")?;
                let group = match name.replace('_', "").as_str() {
                    "T" => PolyhedralGroup::T,
                    "Th" => PolyhedralGroup::Th,
                    "Td" => PolyhedralGroup::Td,
                    "O" => PolyhedralGroup::O,
                    "Oh" => PolyhedralGroup::Oh,
                    "I" => PolyhedralGroup::I,
                    "Ih" => PolyhedralGroup::Ih,
                    other => bail!("unknown polyhedral group '{other}'"),
                };
                Scenario::PolyhedralOrbit { group }
            }
            other => bail!("unknown scenario kind '{other}'"),
        };
        scenario.validate()?;
        Ok(scenario)
    }
}

/// 17 significant digits: lossless round trip for f64.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}
