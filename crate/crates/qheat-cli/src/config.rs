//! Run configuration: TOML schema, validation, and resolution into model
//! parameters.
//!
//! Every frequency-like key carries its unit in the name: `*_per_s` values
//! are ingested as-is (angular frequencies and rates in 1/s),
//! `*_hz_linear` values are multiplied by 2π on ingest, `*_k` are kelvin,
//! `*_f` farad, `*_ohm` ohm.

use serde::Deserialize;

use qheat_core::{
    gamma_tot, occupation_temperature, thermal_occupation, BathLabel, BathSpec, CircuitSpec,
    DriveSpec,
};

use crate::errors::{CliError, CliResult};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    model: Option<RawModel>,
    drive: Option<RawDrive>,
    circuit: Option<RawCircuit>,
    sweep: Option<RawSweep>,
    output: Option<RawOutput>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawModel {
    gamma_h_per_s: Option<f64>,
    gamma_c_per_s: Option<f64>,
    n_bar_h: Option<f64>,
    t_h_k: Option<f64>,
    n_bar_c: Option<f64>,
    t_c_k: Option<f64>,
    omega0_per_s: Option<f64>,
    omega0_hz_linear: Option<f64>,
    gamma_phi_per_s: Option<f64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDrive {
    g_per_s: Option<f64>,
    g_rule: Option<String>,
    delta_per_s: Option<f64>,
    delta_hz_linear: Option<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCircuit {
    c_j_f: f64,
    c_h_f: f64,
    c_c_f: f64,
    c_g_f: f64,
    r_h_ohm: f64,
    r_c_ohm: f64,
    ej_hz_linear: f64,
    t_h_k: f64,
    t_c_k: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSweep {
    variable: String,
    start_per_s: f64,
    stop_per_s: f64,
    count: usize,
    scale: Option<String>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOutput {
    format: Option<String>,
    path: Option<String>,
    precision: Option<usize>,
}

/// How the drive coupling is chosen.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GRule {
    /// Explicit coupling strength, 1/s.
    Fixed(f64),
    /// g*(δ) at the evaluated detuning (and dephasing).
    GstarOfDelta,
    /// g*(0) at the evaluated dephasing.
    GstarAtZero,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepVariable {
    Delta,
    G,
    GammaPhi,
}

impl std::fmt::Display for SweepVariable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SweepVariable::Delta => write!(f, "delta"),
            SweepVariable::G => write!(f, "g"),
            SweepVariable::GammaPhi => write!(f, "gamma_phi"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridScale {
    Linear,
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    pub variable: SweepVariable,
    pub start: f64,
    pub stop: f64,
    pub count: usize,
    pub scale: GridScale,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OutputSpec {
    pub format: OutputFormat,
    pub path: Option<String>,
    /// Significant digits for CSV values (JSON always emits the shortest
    /// exact representation).
    pub precision: usize,
}

impl Default for OutputSpec {
    fn default() -> Self {
        Self {
            format: OutputFormat::Csv,
            path: None,
            precision: 17,
        }
    }
}

/// Fully resolved run configuration: every derived quantity computed,
/// every warning collected.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub hot: BathSpec,
    pub cold: BathSpec,
    pub omega0: f64,
    pub gamma_phi: f64,
    /// Reservoir temperatures: as given, or effective (inverse thermal
    /// occupation) when only n̄ was supplied.
    pub t_h: f64,
    pub t_c: f64,
    pub g_rule: GRule,
    pub delta: Option<f64>,
    pub circuit: Option<CircuitSpec>,
    pub sweep: Option<SweepSpec>,
    pub output: OutputSpec,
    pub warnings: Vec<String>,
}

impl RunConfig {
    pub fn gamma_tot(&self) -> f64 {
        gamma_tot(&self.hot, &self.cold)
    }

    /// The point detuning; errors when it is needed but absent.
    pub fn require_delta(&self) -> CliResult<f64> {
        self.delta.ok_or_else(|| {
            CliError::Validation(
                "the drive section must set delta_per_s or delta_hz_linear for this run".into(),
            )
        })
    }
}

fn exactly_one<T: Copy>(
    a: Option<T>,
    b: Option<T>,
    names: (&str, &str),
    section: &str,
) -> CliResult<(T, bool)> {
    match (a, b) {
        (Some(v), None) => Ok((v, true)),
        (None, Some(v)) => Ok((v, false)),
        (Some(_), Some(_)) => Err(CliError::Validation(format!(
            "[{section}] sets both {} and {}; give exactly one",
            names.0, names.1
        ))),
        (None, None) => Err(CliError::Validation(format!(
            "[{section}] must set exactly one of {} or {}",
            names.0, names.1
        ))),
    }
}

const TAU: f64 = std::f64::consts::TAU;

/// Parse and fully resolve a configuration from TOML text.
pub fn validate_config(text: &str) -> CliResult<RunConfig> {
    let raw: RawConfig = toml::from_str(text)
        .map_err(|e| CliError::Validation(format!("config parse failed: {e}")))?;
    resolve(raw)
}

fn resolve(raw: RawConfig) -> CliResult<RunConfig> {
    let mut warnings = Vec::new();

    let circuit = match &raw.circuit {
        Some(c) => Some(
            CircuitSpec {
                c_j: c.c_j_f,
                c_h: c.c_h_f,
                c_c: c.c_c_f,
                c_g: c.c_g_f,
                r_h: c.r_h_ohm,
                r_c: c.r_c_ohm,
                e_j: qheat_core::model::H * c.ej_hz_linear,
                t_h: c.t_h_k,
                t_c: c.t_c_k,
            }
            .validated()?,
        ),
        None => None,
    };

    let model = raw.model.unwrap_or_default();
    let gamma_phi = model.gamma_phi_per_s.unwrap_or(0.0);
    if gamma_phi < 0.0 || !gamma_phi.is_finite() {
        return Err(CliError::Validation(format!(
            "[model] gamma_phi_per_s must be non-negative and finite, got {gamma_phi:e}"
        )));
    }

    let (hot, cold, omega0, t_h, t_c) = if let Some(spec) = &circuit {
        for redundant in [
            ("gamma_h_per_s", model.gamma_h_per_s.is_some()),
            ("gamma_c_per_s", model.gamma_c_per_s.is_some()),
            ("n_bar_h", model.n_bar_h.is_some()),
            ("n_bar_c", model.n_bar_c.is_some()),
            ("t_h_k", model.t_h_k.is_some()),
            ("t_c_k", model.t_c_k.is_some()),
            ("omega0_per_s", model.omega0_per_s.is_some()),
            ("omega0_hz_linear", model.omega0_hz_linear.is_some()),
        ] {
            if redundant.1 {
                warnings.push(format!(
                    "[circuit] overrides [model] {}; the model value is ignored",
                    redundant.0
                ));
            }
        }
        warnings.extend(spec.warnings());
        let derived = qheat_core::derive_model(spec)?;
        warnings.extend(derived.warnings());
        (
            derived.hot_bath()?,
            derived.cold_bath()?,
            derived.omega0,
            spec.t_h,
            spec.t_c,
        )
    } else {
        let gamma_h = model.gamma_h_per_s.ok_or_else(|| {
            CliError::Validation(
                "[model] gamma_h_per_s is required without a [circuit] section".into(),
            )
        })?;
        let gamma_c = model.gamma_c_per_s.ok_or_else(|| {
            CliError::Validation(
                "[model] gamma_c_per_s is required without a [circuit] section".into(),
            )
        })?;
        let (omega0_raw, angular) = exactly_one(
            model.omega0_per_s,
            model.omega0_hz_linear,
            ("omega0_per_s", "omega0_hz_linear"),
            "model",
        )?;
        let omega0 = if angular {
            omega0_raw
        } else {
            TAU * omega0_raw
        };
        if omega0 <= 0.0 || !omega0.is_finite() {
            return Err(CliError::Validation(format!(
                "[model] qubit frequency must be positive, got {omega0:e} 1/s"
            )));
        }

        let resolve_bath = |n_bar: Option<f64>,
                            t_k: Option<f64>,
                            names: (&str, &str),
                            label: BathLabel|
         -> CliResult<(BathSpec, f64)> {
            let gamma = match label {
                BathLabel::Hot => gamma_h,
                BathLabel::Cold => gamma_c,
            };
            let (value, is_occupation) = exactly_one(n_bar, t_k, names, "model")?;
            if is_occupation {
                if value <= 0.0 || value.is_nan() {
                    return Err(CliError::Validation(format!(
                        "[model] {} must be positive (the entropy columns need a finite \
                         effective temperature); give a temperature instead for very cold baths",
                        names.0
                    )));
                }
                let bath = BathSpec::new(gamma, value, label)?;
                let t_eff = occupation_temperature(omega0, value)?;
                Ok((bath, t_eff))
            } else {
                let n = thermal_occupation(omega0, value)?;
                Ok((BathSpec::new(gamma, n, label)?, value))
            }
        };

        let (hot, t_h) = resolve_bath(
            model.n_bar_h,
            model.t_h_k,
            ("n_bar_h", "t_h_k"),
            BathLabel::Hot,
        )?;
        let (cold, t_c) = resolve_bath(
            model.n_bar_c,
            model.t_c_k,
            ("n_bar_c", "t_c_k"),
            BathLabel::Cold,
        )?;
        (hot, cold, omega0, t_h, t_c)
    };

    let drive = raw.drive.unwrap_or_default();
    let g_rule = match (drive.g_per_s, drive.g_rule.as_deref()) {
        (Some(g), None) => {
            if g < 0.0 || !g.is_finite() {
                return Err(CliError::Validation(format!(
                    "[drive] g_per_s must be non-negative and finite, got {g:e}"
                )));
            }
            GRule::Fixed(g)
        }
        (None, Some("gstar_of_delta")) => GRule::GstarOfDelta,
        (None, Some("gstar_at_zero")) => GRule::GstarAtZero,
        (None, Some(other)) => {
            return Err(CliError::Validation(format!(
                "[drive] g_rule must be \"gstar_of_delta\" or \"gstar_at_zero\", got \"{other}\""
            )))
        }
        (Some(_), Some(_)) => {
            return Err(CliError::Validation(
                "[drive] sets both g_per_s and g_rule; give exactly one".into(),
            ))
        }
        (None, None) => {
            return Err(CliError::Validation(
                "[drive] must set exactly one of g_per_s or g_rule".into(),
            ))
        }
    };
    if !matches!(g_rule, GRule::Fixed(_)) && hot.n_bar < cold.n_bar {
        return Err(CliError::Domain(format!(
            "a gstar drive rule needs n̄_h ≥ n̄_c, got n̄_h = {} < n̄_c = {}",
            hot.n_bar, cold.n_bar
        )));
    }

    let delta = match (drive.delta_per_s, drive.delta_hz_linear) {
        (Some(d), None) => Some(d),
        (None, Some(d)) => Some(TAU * d),
        (None, None) => None,
        (Some(_), Some(_)) => {
            return Err(CliError::Validation(
                "[drive] sets both delta_per_s and delta_hz_linear; give exactly one".into(),
            ))
        }
    };
    if let Some(d) = delta {
        if !d.is_finite() {
            return Err(CliError::Validation(format!(
                "[drive] detuning must be finite, got {d}"
            )));
        }
    }

    let sweep = match &raw.sweep {
        None => None,
        Some(s) => {
            let variable = match s.variable.as_str() {
                "delta" => SweepVariable::Delta,
                "g" => SweepVariable::G,
                "gamma_phi" => SweepVariable::GammaPhi,
                other => {
                    return Err(CliError::Validation(format!(
                        "[sweep] variable must be delta, g, or gamma_phi, got \"{other}\""
                    )))
                }
            };
            if s.count < 2 {
                return Err(CliError::Validation(format!(
                    "[sweep] count must be at least 2, got {}",
                    s.count
                )));
            }
            if s.start_per_s >= s.stop_per_s || s.start_per_s.is_nan() || s.stop_per_s.is_nan() {
                return Err(CliError::Validation(format!(
                    "[sweep] start_per_s = {:e} must be below stop_per_s = {:e}",
                    s.start_per_s, s.stop_per_s
                )));
            }
            let scale = match s.scale.as_deref() {
                None | Some("linear") => GridScale::Linear,
                Some("log") => GridScale::Log,
                Some(other) => {
                    return Err(CliError::Validation(format!(
                        "[sweep] scale must be linear or log, got \"{other}\""
                    )))
                }
            };
            if scale == GridScale::Log && s.start_per_s <= 0.0 {
                return Err(CliError::Validation(
                    "[sweep] a log grid needs a positive start_per_s".into(),
                ));
            }
            if matches!(variable, SweepVariable::G | SweepVariable::GammaPhi) && s.start_per_s < 0.0
            {
                return Err(CliError::Validation(format!(
                    "[sweep] {variable} cannot be negative, start_per_s = {:e}",
                    s.start_per_s
                )));
            }
            Some(SweepSpec {
                variable,
                start: s.start_per_s,
                stop: s.stop_per_s,
                count: s.count,
                scale,
            })
        }
    };

    // sweeping g ignores an explicitly configured drive coupling
    if let Some(sw) = &sweep {
        if sw.variable == SweepVariable::G && matches!(g_rule, GRule::Fixed(_)) {
            warnings.push("[sweep] over g replaces the fixed [drive] g_per_s value".into());
        }
        if sw.variable != SweepVariable::Delta && delta.is_none() {
            return Err(CliError::Validation(format!(
                "[sweep] over {} needs the drive detuning set",
                sw.variable
            )));
        }
    }

    let out_raw = raw.output.unwrap_or_default();
    let format = match out_raw.format.as_deref() {
        None | Some("csv") => OutputFormat::Csv,
        Some("json") => OutputFormat::Json,
        Some(other) => {
            return Err(CliError::Validation(format!(
                "[output] format must be csv or json, got \"{other}\""
            )))
        }
    };
    let precision = out_raw.precision.unwrap_or(17);
    if !(1..=17).contains(&precision) {
        return Err(CliError::Validation(format!(
            "[output] precision must be between 1 and 17 significant digits, got {precision}"
        )));
    }

    let config = RunConfig {
        hot,
        cold,
        omega0,
        gamma_phi,
        t_h,
        t_c,
        g_rule,
        delta,
        circuit,
        sweep,
        output: OutputSpec {
            format,
            path: out_raw.path,
            precision,
        },
        warnings,
    };

    // weak-drive validity warnings at the configured point
    if let (GRule::Fixed(g), Some(d)) = (config.g_rule, config.delta) {
        let drive = DriveSpec::new(config.omega0, g, d)?;
        let mut cfg = config;
        cfg.warnings.extend(drive.warnings());
        return Ok(cfg);
    }
    Ok(config)
}
