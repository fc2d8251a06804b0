//! Command-line tool for point-vortex reduced dynamics: phase portraits,
//! trajectory integration, the symmetry catalog, verification suites and
//! momentum scans.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid configuration,
//! 3 numerical abort (collision or step underflow).

mod catalog_text;
mod config;
mod portrait_doc;
mod trajectory_out;
mod verify;

use clap::{Parser, Subcommand};
use config::fmt_f64;
use std::path::PathBuf;
use std::process::ExitCode;
use vortex_core::charts::{build_chart, Scenario};
use vortex_core::portrait::{compute_portrait, scan_bifurcation};
use vortex_core::Error as CoreError;

#[derive(Parser)]
#[command(name = "vortex", version, about = "Point-vortex reduced phase portraits and verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Directory for generated files.
    #[arg(long, global = true, default_value = ".")]
    out_dir: PathBuf,
    /// Seed override for randomized verification suites.
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a reduced phase portrait (CSV + summary + SVG).
    Portrait { config: PathBuf },
    /// Integrate the full equations of motion (CSV + drift summary).
    Integrate { config: PathBuf },
    /// Print the symmetry catalog ("all") or one group ("C_i", "D_3", ...).
    Catalog { name: String },
    /// Run a verification suite; nonzero exit on failure.
    Verify { config: PathBuf },
    /// Scan the reduced momentum and count critical points.
    Scan { config: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(classify_error(&e))
        }
    }
}

/// 2 for configuration problems, 3 for numerical aborts.
fn classify_error(e: &anyhow::Error) -> u8 {
    if let Some(core) = e.downcast_ref::<CoreError>() {
        match core {
            CoreError::Collision { .. }
            | CoreError::IntegrationAbort { .. }
            | CoreError::Numerical(_) => 3,
            _ => 2,
        }
    } else {
        2
    }
}

fn run(cli: &Cli) -> anyhow::Result<ExitCode> {
    match &cli.command {
        Command::Portrait { config } => cmd_portrait(cli, config),
        Command::Integrate { config } => trajectory_out::cmd_integrate(&cli.out_dir, config),
        Command::Catalog { name } => cmd_catalog(name),
        Command::Verify { config } => cmd_verify(cli, config),
        Command::Scan { config } => cmd_scan(cli, config),
    }
}

fn cmd_portrait(cli: &Cli, path: &PathBuf) -> anyhow::Result<ExitCode> {
    let doc = config::load(path)?;
    let scenario = doc.scenario()?;
    let chart = build_chart(scenario)?;
    let options = doc.portrait_options();
    let portrait = compute_portrait(&chart, &options)?;
    let document = portrait_doc::PortraitDocument::from_portrait(&chart, &portrait);

    std::fs::create_dir_all(&cli.out_dir)?;
    let prefix = &doc.output.prefix;
    let files = document.write_files(&cli.out_dir, prefix)?;

    // Re-render the SVG with the full field geometry (mask, separatrices).
    let axes = chart.axes();
    let masked = portrait.field.masked_cell_centers();
    let cell = (portrait.field.grid.du, portrait.field.grid.dv);
    let separatrices: Vec<(Vec<(f64, f64)>, vortex_core::portrait::BranchEnd)> = portrait
        .separatrices
        .iter()
        .map(|b| (b.points.iter().map(|p| (p.u, p.v)).collect(), b.end))
        .collect();
    let svg = document.svg_with_geometry(
        options.u_window.unwrap_or(axes.u_range),
        options.v_window.unwrap_or(axes.v_range),
        &masked,
        cell,
        &separatrices,
    );
    std::fs::write(cli.out_dir.join(format!("{prefix}.svg")), svg)?;

    let summary = portrait.summary();
    println!(
        "portrait {}: {} centers, {} saddles, {} degenerate, {} contours, {} saddle cycles",
        chart.scenario().kind_name(),
        summary.centers,
        summary.saddles,
        summary.degenerate,
        summary.contour_count,
        summary.saddle_cycles.len()
    );
    for f in files {
        println!("wrote {f}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_catalog(name: &str) -> anyhow::Result<ExitCode> {
    let text = if name == "all" {
        catalog_text::render_all()
    } else {
        catalog_text::render_group(name)?
    };
    print!("{text}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(cli: &Cli, path: &PathBuf) -> anyhow::Result<ExitCode> {
    let doc = config::load(path)?;
    let results = verify::run_suite(&doc.verify, cli.seed);
    let mut all_pass = true;
    for r in &results {
        println!("check {}: {} ({})", r.name, if r.passed { "PASS" } else { "FAIL" }, r.detail);
        all_pass &= r.passed;
    }
    println!(
        "{} of {} checks passed",
        results.iter().filter(|r| r.passed).count(),
        results.len()
    );
    Ok(if all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_scan(cli: &Cli, path: &PathBuf) -> anyhow::Result<ExitCode> {
    let doc = config::load(path)?;
    let scan_cfg =
        doc.scan.as_ref().ok_or_else(|| anyhow::anyhow!("config has no [scan] section"))?;
    if scan_cfg.steps < 2 {
        anyhow::bail!("scan needs at least 2 steps");
    }
    let base = doc.scenario()?;
    let family = |mu: f64| -> Scenario {
        let mut s = base.clone();
        set_mu(&mut s, mu);
        s
    };
    let mus: Vec<f64> = (0..scan_cfg.steps)
        .map(|k| {
            scan_cfg.mu_from
                + (scan_cfg.mu_to - scan_cfg.mu_from) * k as f64 / (scan_cfg.steps - 1) as f64
        })
        .collect();
    let scan = scan_bifurcation(family, &mus, (scan_cfg.resolution[0], scan_cfg.resolution[1]))?;

    let mut csv = String::from("mu,centers,saddles,degenerate\n");
    for s in &scan.samples {
        csv.push_str(&format!("{},{},{},{}\n", fmt_f64(s.mu), s.centers, s.saddles, s.degenerate));
    }
    let mut txt = String::new();
    for s in &scan.samples {
        txt.push_str(&format!("mu = {:.6}: {} centers, {} saddles\n", s.mu, s.centers, s.saddles));
    }
    if scan.changes.is_empty() {
        txt.push_str("no count changes in the scanned range\n");
    }
    for (lo, hi) in &scan.changes {
        txt.push_str(&format!("count change bracketed in ({lo:.6}, {hi:.6})\n"));
    }

    std::fs::create_dir_all(&cli.out_dir)?;
    let prefix = &doc.output.prefix;
    std::fs::write(cli.out_dir.join(format!("{prefix}_scan.csv")), csv)?;
    std::fs::write(cli.out_dir.join(format!("{prefix}_scan.txt")), &txt)?;
    print!("{txt}");
    Ok(ExitCode::SUCCESS)
}

fn set_mu(s: &mut Scenario, value: f64) {
    match s {
        Scenario::SphereTwoRings { mu, .. }
        | Scenario::SpherePairs { mu }
        | Scenario::SphereTwoRingsPoles { mu, .. }
        | Scenario::SphereFourRingsPoles { mu, .. }
        | Scenario::SphereThreePairs { mu }
        | Scenario::PlaneTwoRingsCenter { mu, .. } => *mu = value,
        _ => {}
    }
}
