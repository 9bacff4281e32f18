//! Circuit design reports: derived model parameters plus the evaluated
//! cancellation-line operating point.

use serde::Serialize;

use crate::config::RunConfig;
use crate::errors::{CliError, CliResult};
use crate::run::{evaluate_at, SweepRow, COLUMNS};

/// Model parameters and cancellation-point summary derived from a circuit.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct DesignSummary {
    #[serde(rename = "E_C_J")]
    pub e_c_j: f64,
    #[serde(rename = "C_sigma_F")]
    pub c_sigma_f: f64,
    pub omega0_per_s: f64,
    pub gamma_h_per_s: f64,
    pub gamma_c_per_s: f64,
    pub n_bar_h: f64,
    pub n_bar_c: f64,
    pub g_star_per_s: f64,
    pub y_tilde_inf: f64,
    #[serde(rename = "P_inf_W")]
    pub p_inf_w: f64,
    #[serde(rename = "residual_J_cl_W")]
    pub residual_j_cl_w: f64,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct DesignOutput {
    pub summary: DesignSummary,
    pub operating_point: SweepRow,
}

pub const SUMMARY_COLUMNS: [&str; 11] = [
    "E_C_J",
    "C_sigma_F",
    "omega0_per_s",
    "gamma_h_per_s",
    "gamma_c_per_s",
    "n_bar_h",
    "n_bar_c",
    "g_star_per_s",
    "y_tilde_inf",
    "P_inf_W",
    "residual_J_cl_W",
];

impl DesignSummary {
    pub fn values(&self) -> [f64; 11] {
        [
            self.e_c_j,
            self.c_sigma_f,
            self.omega0_per_s,
            self.gamma_h_per_s,
            self.gamma_c_per_s,
            self.n_bar_h,
            self.n_bar_c,
            self.g_star_per_s,
            self.y_tilde_inf,
            self.p_inf_w,
            self.residual_j_cl_w,
        ]
    }
}

/// Run the circuit-to-design chain at the configured detuning.
pub fn run_design(cfg: &RunConfig) -> CliResult<DesignOutput> {
    let spec = cfg.circuit.as_ref().ok_or_else(|| {
        CliError::Validation("design runs need a [circuit] section in the config".into())
    })?;
    let delta = cfg.require_delta()?;
    let report = qheat_core::design_report(spec, delta)?;
    let row = evaluate_at(cfg, delta, 0.0, report.switch_point.g_star)?;
    Ok(DesignOutput {
        summary: DesignSummary {
            e_c_j: report.model.e_c,
            c_sigma_f: report.model.c_sigma,
            omega0_per_s: report.model.omega0,
            gamma_h_per_s: report.model.gamma_h,
            gamma_c_per_s: report.model.gamma_c,
            n_bar_h: report.model.n_bar_h,
            n_bar_c: report.model.n_bar_c,
            g_star_per_s: report.switch_point.g_star,
            y_tilde_inf: report.switch_point.y_tilde_inf,
            p_inf_w: report.switch_point.p_inf,
            residual_j_cl_w: report.switch_point.residual_j_cl,
        },
        operating_point: row,
    })
}

/// Single-row CSV of the design report: summary columns followed by the
/// operating-point columns.
pub fn write_design_csv<W: std::io::Write>(
    w: &mut W,
    out: &DesignOutput,
    precision: usize,
) -> std::io::Result<()> {
    let header: Vec<&str> = SUMMARY_COLUMNS
        .iter()
        .chain(COLUMNS.iter())
        .copied()
        .collect();
    writeln!(w, "{}", header.join(","))?;
    let fields: Vec<String> = out
        .summary
        .values()
        .iter()
        .chain(out.operating_point.values().iter())
        .map(|&v| format!("{:.*e}", precision.saturating_sub(1), v))
        .collect();
    writeln!(w, "{}", fields.join(","))
}

pub fn write_design_json<W: std::io::Write>(w: &mut W, out: &DesignOutput) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut *w, out)?;
    writeln!(w)
}
