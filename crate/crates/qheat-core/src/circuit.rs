//! Map a superconducting charge-qubit device (island capacitances, bath
//! resistors, Josephson energy, bath temperatures) onto the two-bath model
//! parameters, and chain the mapping into a full design report.

use crate::error::{Error, Result};
use crate::model::{thermal_occupation, BathLabel, BathSpec, DriveSpec, E_CHARGE, HBAR, R_Q};
use crate::steady::steady_analytic;
use crate::switch::{switch_point_report, SwitchPoint};
use crate::thermo::HeatReport;

/// Physical description of the charge-qubit device. All values SI.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircuitSpec {
    /// Total Josephson junction capacitance (both junctions), F.
    pub c_j: f64,
    /// Hot-bath coupling capacitor, F.
    pub c_h: f64,
    /// Cold-bath coupling capacitor, F.
    pub c_c: f64,
    /// Gate capacitor, F.
    pub c_g: f64,
    /// Hot-bath resistor, Ω.
    pub r_h: f64,
    /// Cold-bath resistor, Ω.
    pub r_c: f64,
    /// Josephson energy (flux-tuned value), J.
    pub e_j: f64,
    /// Hot-bath temperature, K.
    pub t_h: f64,
    /// Cold-bath temperature, K.
    pub t_c: f64,
}

impl CircuitSpec {
    /// Validate the invariants; returns the spec unchanged on success.
    pub fn validated(self) -> Result<Self> {
        let positive = [
            ("c_j", self.c_j),
            ("c_h", self.c_h),
            ("c_c", self.c_c),
            ("c_g", self.c_g),
            ("r_h", self.r_h),
            ("r_c", self.r_c),
            ("e_j", self.e_j),
        ];
        for (name, v) in positive {
            if v <= 0.0 || !v.is_finite() {
                return Err(Error::Domain(format!(
                    "circuit parameter {name} must be positive and finite, got {v:e}"
                )));
            }
        }
        if self.t_c <= 0.0 || !self.t_c.is_finite() || !self.t_h.is_finite() {
            return Err(Error::Domain(format!(
                "bath temperatures must be positive and finite, got T_h = {} K, T_c = {} K",
                self.t_h, self.t_c
            )));
        }
        if self.t_h < self.t_c {
            return Err(Error::Domain(format!(
                "hot bath must not be colder than the cold bath (T_h = {} K < T_c = {} K)",
                self.t_h, self.t_c
            )));
        }
        Ok(self)
    }

    /// Total island capacitance C_Σ = C_c + C_h + C_g + C_J.
    pub fn c_sigma(&self) -> f64 {
        self.c_c + self.c_h + self.c_g + self.c_j
    }

    /// Warnings about weak-coupling assumptions.
    pub fn warnings(&self) -> Vec<String> {
        let mut w = Vec::new();
        if self.c_g > self.c_j / 5.0 {
            w.push(format!(
                "gate capacitance C_g = {:e} F is not small against the junction \
                 capacitance C_J = {:e} F; the gate should load the island weakly",
                self.c_g, self.c_j
            ));
        }
        w
    }
}

/// Model parameters derived from a [`CircuitSpec`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedModel {
    /// Charging energy E_C = e²/2C_Σ, J.
    pub e_c: f64,
    /// Total island capacitance, F.
    pub c_sigma: f64,
    /// Qubit angular frequency ω₀ = E_J/ħ at the charge sweet spot, rad/s.
    pub omega0: f64,
    /// Hot-bath coupling rate, 1/s.
    pub gamma_h: f64,
    /// Cold-bath coupling rate, 1/s.
    pub gamma_c: f64,
    /// Hot-bath thermal occupation at ω₀.
    pub n_bar_h: f64,
    /// Cold-bath thermal occupation at ω₀.
    pub n_bar_c: f64,
}

impl DerivedModel {
    pub fn hot_bath(&self) -> Result<BathSpec> {
        BathSpec::new(self.gamma_h, self.n_bar_h, BathLabel::Hot)
    }

    pub fn cold_bath(&self) -> Result<BathSpec> {
        BathSpec::new(self.gamma_c, self.n_bar_c, BathLabel::Cold)
    }

    /// Warning when the device leaves the charge-qubit regime E_C > E_J.
    pub fn warnings(&self) -> Vec<String> {
        let e_j = HBAR * self.omega0;
        if self.e_c <= e_j {
            vec![format!(
                "charging energy E_C = {:e} J does not exceed the Josephson energy \
                 E_J = {:e} J; the two-level charge-qubit truncation needs E_C > E_J",
                self.e_c, e_j
            )]
        } else {
            Vec::new()
        }
    }
}

/// Derive the model parameters from the device.
///
/// Transition rates follow `γ = 2π C² E_J R / (2ħ C_Σ² R_Q)` for each
/// bath's coupling capacitor and resistor; occupations are thermal at the
/// qubit frequency.
pub fn derive_model(spec: &CircuitSpec) -> Result<DerivedModel> {
    let spec = spec.validated()?;
    let c_sigma = spec.c_sigma();
    let e_c = E_CHARGE * E_CHARGE / (2.0 * c_sigma);
    let omega0 = spec.e_j / HBAR;
    let rate = |c: f64, r: f64| {
        std::f64::consts::TAU * c * c * spec.e_j * r / (2.0 * HBAR * c_sigma * c_sigma * R_Q)
    };
    Ok(DerivedModel {
        e_c,
        c_sigma,
        omega0,
        gamma_h: rate(spec.c_h, spec.r_h),
        gamma_c: rate(spec.c_c, spec.r_c),
        n_bar_h: thermal_occupation(omega0, spec.t_h)?,
        n_bar_c: thermal_occupation(omega0, spec.t_c)?,
    })
}

/// Dimensionless gate charge offset δn_g = C_g V_g / 2e induced by a gate
/// voltage V_g.
pub fn gate_offset(spec: &CircuitSpec, v_g: f64) -> f64 {
    spec.c_g * v_g / (2.0 * E_CHARGE)
}

/// Everything needed to judge a device design at one detuning.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DesignReport {
    pub model: DerivedModel,
    pub switch_point: SwitchPoint,
    pub heat: HeatReport,
}

/// Chain the circuit mapping into the cancellation-line design: derive the
/// model, solve g*(δ), and evaluate the steady-state heat flows there.
pub fn design_report(spec: &CircuitSpec, delta: f64) -> Result<DesignReport> {
    let model = derive_model(spec)?;
    if model.n_bar_h <= model.n_bar_c {
        return Err(Error::Domain(format!(
            "design needs a strict thermal bias after derivation \
             (n̄_h = {} ≤ n̄_c = {})",
            model.n_bar_h, model.n_bar_c
        )));
    }
    let hot = model.hot_bath()?;
    let cold = model.cold_bath()?;
    let point = switch_point_report(&hot, &cold, model.omega0, delta, 0.0)?;
    let drive = DriveSpec::new(model.omega0, point.g_star, delta)?;
    let steady = steady_analytic(&hot, &cold, &drive)?;
    let heat = HeatReport::at_state(
        &steady.as_state(),
        &hot,
        &cold,
        &drive,
        0.0,
        spec.t_h,
        spec.t_c,
    )?;
    Ok(DesignReport {
        model,
        switch_point: point,
        heat,
    })
}

/// The worked design point used across the test suite: 0.6 fF junction pair,
/// 0.3 fF bath couplers, 0.03 fF gate, 1.5 kΩ resistors, E_J/h = 10 GHz,
/// 350 mK / 200 mK baths.
pub fn reference_design() -> CircuitSpec {
    CircuitSpec {
        c_j: 0.6e-15,
        c_h: 0.3e-15,
        c_c: 0.3e-15,
        c_g: 0.03e-15,
        r_h: 1.5e3,
        r_c: 1.5e3,
        e_j: crate::model::H * 10e9,
        t_h: 0.350,
        t_c: 0.200,
    }
}
