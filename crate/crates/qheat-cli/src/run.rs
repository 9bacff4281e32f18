//! Point and sweep evaluation: grid construction, per-point steady-state
//! physics, per-row integrity assertions, and the optional null-space
//! cross-check.

use rayon::prelude::*;
use serde::Serialize;

use qheat_core::model::HBAR;
use qheat_core::{
    build_generator, g_star_dephasing, heat_cold, heat_components_hot, steady_analytic_dephasing,
    steady_numeric, DriveSpec, HeatReport, RotFrameState,
};

use crate::config::{GRule, GridScale, RunConfig, SweepSpec, SweepVariable};
use crate::errors::{CliError, CliResult};

/// One evaluated operating point. Serialized field names match the CSV
/// column header exactly.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SweepRow {
    pub delta_per_s: f64,
    pub g_per_s: f64,
    pub gamma_phi_per_s: f64,
    pub x_inf: f64,
    pub y_inf: f64,
    pub z_inf: f64,
    #[serde(rename = "J_cl_W")]
    pub j_cl_w: f64,
    #[serde(rename = "J_q_W")]
    pub j_q_w: f64,
    #[serde(rename = "J_h_W")]
    pub j_h_w: f64,
    #[serde(rename = "J_c_W")]
    pub j_c_w: f64,
    #[serde(rename = "P_W")]
    pub p_w: f64,
    #[serde(rename = "E_q_J")]
    pub e_q_j: f64,
    #[serde(rename = "sigma_two_bath_W_per_K")]
    pub sigma_two_bath_w_per_k: f64,
    #[serde(rename = "first_law_residual_W")]
    pub first_law_residual_w: f64,
}

/// CSV column order; matches the serialized field names.
pub const COLUMNS: [&str; 14] = [
    "delta_per_s",
    "g_per_s",
    "gamma_phi_per_s",
    "x_inf",
    "y_inf",
    "z_inf",
    "J_cl_W",
    "J_q_W",
    "J_h_W",
    "J_c_W",
    "P_W",
    "E_q_J",
    "sigma_two_bath_W_per_K",
    "first_law_residual_W",
];

impl SweepRow {
    pub fn values(&self) -> [f64; 14] {
        [
            self.delta_per_s,
            self.g_per_s,
            self.gamma_phi_per_s,
            self.x_inf,
            self.y_inf,
            self.z_inf,
            self.j_cl_w,
            self.j_q_w,
            self.j_h_w,
            self.j_c_w,
            self.p_w,
            self.e_q_j,
            self.sigma_two_bath_w_per_k,
            self.first_law_residual_w,
        ]
    }
}

fn resolve_g(cfg: &RunConfig, delta: f64, gamma_phi: f64) -> CliResult<f64> {
    Ok(match cfg.g_rule {
        GRule::Fixed(g) => g,
        GRule::GstarOfDelta => g_star_dephasing(&cfg.hot, &cfg.cold, delta, gamma_phi)?,
        GRule::GstarAtZero => g_star_dephasing(&cfg.hot, &cfg.cold, 0.0, gamma_phi)?,
    })
}

fn row_from_state(
    cfg: &RunConfig,
    state: &RotFrameState,
    drive: &DriveSpec,
    gamma_phi: f64,
) -> CliResult<SweepRow> {
    let report = HeatReport::at_state(
        state, &cfg.hot, &cfg.cold, drive, gamma_phi, cfg.t_h, cfg.t_c,
    )?;
    let scale = report
        .power
        .abs()
        .max(report.j_h.abs())
        .max(report.j_c.abs())
        .max(HBAR * drive.omega0 * cfg.gamma_tot());
    if report.first_law_residual.abs() > 1e-9 * scale {
        return Err(CliError::Integrity(format!(
            "energy balance violated at delta = {:e}, g = {:e}, gamma_phi = {:e}: \
             residual {:e} W against scale {:e} W",
            drive.delta, drive.g, gamma_phi, report.first_law_residual, scale
        )));
    }
    Ok(SweepRow {
        delta_per_s: drive.delta,
        g_per_s: drive.g,
        gamma_phi_per_s: gamma_phi,
        x_inf: state.x_tilde,
        y_inf: state.y_tilde,
        z_inf: state.z(),
        j_cl_w: report.j_cl,
        j_q_w: report.j_q,
        j_h_w: report.j_h,
        j_c_w: report.j_c,
        p_w: report.power,
        e_q_j: report.e_q,
        sigma_two_bath_w_per_k: report.sigma_dot_two_bath,
        first_law_residual_w: report.first_law_residual,
    })
}

/// Evaluate one operating point at an explicit drive strength.
pub(crate) fn evaluate_at(
    cfg: &RunConfig,
    delta: f64,
    gamma_phi: f64,
    g: f64,
) -> CliResult<SweepRow> {
    let drive = DriveSpec::new(cfg.omega0, g, delta)?;
    let steady = steady_analytic_dephasing(&cfg.hot, &cfg.cold, &drive, gamma_phi)?;
    row_from_state(cfg, &steady.as_state(), &drive, gamma_phi)
}

/// Evaluate one grid point from the analytic steady state, resolving g
/// from the configured rule.
fn evaluate(cfg: &RunConfig, delta: f64, gamma_phi: f64) -> CliResult<SweepRow> {
    let g = resolve_g(cfg, delta, gamma_phi)?;
    evaluate_at(cfg, delta, gamma_phi, g)
}

/// Re-evaluate one grid point through the null-space steady state and
/// return the worst per-column relative deviation from the analytic row.
///
/// State columns are compared on the unit scale; energy columns against
/// the larger magnitude with an ħω₀γ_tot floor.
fn numeric_deviation(cfg: &RunConfig, analytic: &SweepRow) -> CliResult<f64> {
    let drive = DriveSpec::new(cfg.omega0, analytic.g_per_s, analytic.delta_per_s)?;
    let gen = build_generator(cfg.hot, cfg.cold, drive, analytic.gamma_phi_per_s)?;
    let numeric = steady_numeric(&gen)?;
    let (j_cl, j_q) = heat_components_hot(&numeric, &cfg.hot, &drive);
    let j_c = heat_cold(&numeric, &cfg.cold, &drive);

    let energy_floor = HBAR * cfg.omega0 * cfg.gamma_tot();
    let rel = |a: f64, b: f64, floor: f64| (a - b).abs() / a.abs().max(b.abs()).max(floor);
    let deviations = [
        rel(numeric.x_tilde, analytic.x_inf, 1.0),
        rel(numeric.y_tilde, analytic.y_inf, 1.0),
        rel(numeric.z(), analytic.z_inf, 1.0),
        rel(j_cl, analytic.j_cl_w, energy_floor),
        rel(j_q, analytic.j_q_w, energy_floor),
        rel(j_cl + j_q, analytic.j_h_w, energy_floor),
        rel(j_c, analytic.j_c_w, energy_floor),
    ];
    Ok(deviations.into_iter().fold(0.0, f64::max))
}

/// Tolerance on the `--numeric` cross-check.
pub const NUMERIC_CHECK_TOL: f64 = 1e-8;

/// Evaluate the configured single point. With `numeric`, the null-space
/// recomputation must agree within [`NUMERIC_CHECK_TOL`]; the observed
/// deviation is returned.
pub fn run_point(cfg: &RunConfig, numeric: bool) -> CliResult<(SweepRow, Option<f64>)> {
    if cfg.sweep.is_some() {
        return Err(CliError::Validation(
            "point runs take a config without a [sweep] section; use the sweep subcommand".into(),
        ));
    }
    let delta = cfg.require_delta()?;
    let row = evaluate(cfg, delta, cfg.gamma_phi)?;
    let deviation = if numeric {
        let d = numeric_deviation(cfg, &row)?;
        if d > NUMERIC_CHECK_TOL {
            return Err(CliError::Integrity(format!(
                "null-space cross-check deviates by {d:e} (tolerance {NUMERIC_CHECK_TOL:e})"
            )));
        }
        Some(d)
    } else {
        None
    };
    Ok((row, deviation))
}

/// The closed sweep grid (both endpoints included, exactly).
pub fn grid(sweep: &SweepSpec) -> Vec<f64> {
    let n = sweep.count;
    (0..n)
        .map(|i| {
            if i == 0 {
                return sweep.start;
            }
            if i == n - 1 {
                return sweep.stop;
            }
            let f = i as f64 / (n - 1) as f64;
            match sweep.scale {
                GridScale::Linear => sweep.start * (1.0 - f) + sweep.stop * f,
                GridScale::Log => (sweep.start.ln() * (1.0 - f) + sweep.stop.ln() * f).exp(),
            }
        })
        .collect()
}

/// Evaluate the configured sweep. Rows are independent and evaluated in
/// parallel; output order follows the grid regardless of scheduling. With
/// `numeric`, every row is cross-checked and the worst deviation returned.
pub fn run_sweep(cfg: &RunConfig, numeric: bool) -> CliResult<(Vec<SweepRow>, Option<f64>)> {
    let sweep = cfg.sweep.as_ref().ok_or_else(|| {
        CliError::Validation("sweep runs need a [sweep] section in the config".into())
    })?;
    let values = grid(sweep);
    let rows: Vec<SweepRow> = values
        .par_iter()
        .map(|&v| -> CliResult<SweepRow> {
            let (delta, gamma_phi) = match sweep.variable {
                SweepVariable::Delta => (v, cfg.gamma_phi),
                SweepVariable::G => (cfg.require_delta()?, cfg.gamma_phi),
                SweepVariable::GammaPhi => (cfg.require_delta()?, v),
            };
            match sweep.variable {
                SweepVariable::G => evaluate_at(cfg, delta, gamma_phi, v),
                _ => evaluate(cfg, delta, gamma_phi),
            }
        })
        .collect::<CliResult<Vec<_>>>()?;

    let deviation = if numeric {
        let worst = rows
            .par_iter()
            .map(|row| numeric_deviation(cfg, row))
            .collect::<CliResult<Vec<_>>>()?
            .into_iter()
            .fold(0.0, f64::max);
        if worst > NUMERIC_CHECK_TOL {
            return Err(CliError::Integrity(format!(
                "null-space cross-check deviates by {worst:e} (tolerance {NUMERIC_CHECK_TOL:e})"
            )));
        }
        Some(worst)
    } else {
        None
    };
    Ok((rows, deviation))
}
