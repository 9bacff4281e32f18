//! Physical constants, reservoir and drive specifications, and the two
//! qubit-state representations (lab frame and rotating frame) used by the
//! rest of the crate.
//!
//! Unit convention: every rate and every frequency-like quantity is stored
//! in 1/s, with frequencies as *angular* frequencies (rad/s). Interfaces
//! that ingest linear Hz multiply by 2π at the boundary, never internally.
//!
//! Coherences are stored as the real and negated imaginary parts of the
//! excited–ground density-matrix element, `x = Re⟨e|ρ|g⟩`,
//! `y = −Im⟨e|ρ|g⟩`; populations as `p_e`, `p_g` with `z = p_e − p_g`.

use crate::error::{Error, Result};

/// Planck constant, J·s (exact SI value).
pub const H: f64 = 6.626_070_15e-34;
/// Reduced Planck constant, J·s.
pub const HBAR: f64 = H / std::f64::consts::TAU;
/// Boltzmann constant, J/K (exact SI value).
pub const K_B: f64 = 1.380_649e-23;
/// Elementary charge, C (exact SI value).
pub const E_CHARGE: f64 = 1.602_176_634e-19;
/// Superconducting resistance quantum h/4e², Ω (≈ 6453.2 Ω).
pub const R_Q: f64 = H / (4.0 * E_CHARGE * E_CHARGE);

/// Tolerance on the state-vector norm bound; violations beyond this raise
/// [`Error::Integrity`].
pub const POSITIVITY_EPS: f64 = 1e-9;

/// Absolute tolerance on population normalization `p_e + p_g = 1`.
pub const TRACE_TOL: f64 = 1e-12;

/// Bundle of the physical constants used throughout the crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysConstants {
    /// Reduced Planck constant, J·s.
    pub hbar: f64,
    /// Planck constant, J·s; equals `2π·hbar` exactly as stored.
    pub h: f64,
    /// Boltzmann constant, J/K.
    pub k_b: f64,
    /// Elementary charge, C.
    pub e_charge: f64,
    /// Superconducting resistance quantum h/4e², Ω.
    pub r_q: f64,
}

impl PhysConstants {
    /// The SI values used by every routine in this crate.
    pub const fn si() -> Self {
        Self {
            hbar: HBAR,
            h: H,
            k_b: K_B,
            e_charge: E_CHARGE,
            r_q: R_Q,
        }
    }
}

impl Default for PhysConstants {
    fn default() -> Self {
        Self::si()
    }
}

/// Which reservoir a [`BathSpec`] describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BathLabel {
    Hot,
    Cold,
}

impl std::fmt::Display for BathLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BathLabel::Hot => write!(f, "hot"),
            BathLabel::Cold => write!(f, "cold"),
        }
    }
}

/// One thermal reservoir: Lindblad coupling rate and thermal occupation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BathSpec {
    /// Coupling rate γ, 1/s. Strictly positive.
    pub gamma: f64,
    /// Thermal occupation n̄ at the qubit frequency. Non-negative.
    pub n_bar: f64,
    pub label: BathLabel,
}

impl BathSpec {
    pub fn new(gamma: f64, n_bar: f64, label: BathLabel) -> Result<Self> {
        if gamma <= 0.0 || !gamma.is_finite() {
            return Err(Error::Domain(format!(
                "{label} bath coupling rate must be positive and finite, got {gamma:e}"
            )));
        }
        if n_bar < 0.0 || !n_bar.is_finite() {
            return Err(Error::Domain(format!(
                "{label} bath occupation must be non-negative and finite, got {n_bar:e}"
            )));
        }
        Ok(Self {
            gamma,
            n_bar,
            label,
        })
    }

    /// Build from a temperature instead of an occupation.
    pub fn from_temperature(
        gamma: f64,
        omega0: f64,
        temperature: f64,
        label: BathLabel,
    ) -> Result<Self> {
        let n_bar = thermal_occupation(omega0, temperature)?;
        Self::new(gamma, n_bar, label)
    }

    /// Decoherence-weighted rate γ(2n̄ + 1) of this bath.
    pub fn weighted_rate(&self) -> f64 {
        self.gamma * (2.0 * self.n_bar + 1.0)
    }

    /// Population imbalance z at thermal equilibrium with this bath,
    /// `−1/(2n̄ + 1)`.
    pub fn equilibrium_z(&self) -> f64 {
        -1.0 / (2.0 * self.n_bar + 1.0)
    }
}

/// Total decoherence-weighted rate γ_tot = γ_h(2n̄_h+1) + γ_c(2n̄_c+1).
pub fn gamma_tot(hot: &BathSpec, cold: &BathSpec) -> f64 {
    hot.weighted_rate() + cold.weighted_rate()
}

/// Monochromatic drive parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DriveSpec {
    /// Qubit angular frequency ω₀, rad/s. Strictly positive.
    pub omega0: f64,
    /// Drive–qubit coupling strength g, rad/s. Non-negative.
    pub g: f64,
    /// Signed detuning δ = ω₀ − ω_d, rad/s.
    pub delta: f64,
}

impl DriveSpec {
    pub fn new(omega0: f64, g: f64, delta: f64) -> Result<Self> {
        if omega0 <= 0.0 || !omega0.is_finite() {
            return Err(Error::Domain(format!(
                "qubit frequency must be positive and finite, got {omega0:e}"
            )));
        }
        if g < 0.0 || !g.is_finite() {
            return Err(Error::Domain(format!(
                "drive coupling must be non-negative and finite, got {g:e}"
            )));
        }
        if !delta.is_finite() {
            return Err(Error::Domain(format!(
                "detuning must be finite, got {delta:e}"
            )));
        }
        Ok(Self { omega0, g, delta })
    }

    /// Drive angular frequency ω_d = ω₀ − δ.
    pub fn omega_d(&self) -> f64 {
        self.omega0 - self.delta
    }

    /// Warnings when the weak-drive regime g, |δ| ≪ ω₀ is left.
    /// The model stays evaluable; results outside this regime are suspect.
    pub fn warnings(&self) -> Vec<String> {
        let mut w = Vec::new();
        let bound = self.omega0 / 10.0;
        if self.g >= bound {
            w.push(format!(
                "drive coupling g = {:e} 1/s is not small against the qubit frequency \
                 (weak-drive validity requires g < omega0/10 = {:e} 1/s)",
                self.g, bound
            ));
        }
        if self.delta.abs() >= bound {
            w.push(format!(
                "detuning |delta| = {:e} 1/s is not small against the qubit frequency \
                 (weak-drive validity requires |delta| < omega0/10 = {:e} 1/s)",
                self.delta.abs(),
                bound
            ));
        }
        w
    }
}

/// Lab-frame qubit state components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl BlochVector {
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        let v = Self { x, y, z };
        v.check()?;
        Ok(v)
    }

    pub fn norm(&self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    fn check(&self) -> Result<()> {
        for (name, c) in [("x", self.x), ("y", self.y), ("z", self.z)] {
            if !c.is_finite() {
                return Err(Error::Integrity(format!(
                    "non-finite Bloch component {name} = {c}"
                )));
            }
        }
        let n2 = self.x * self.x + self.y * self.y + self.z * self.z;
        if n2 > 1.0 + POSITIVITY_EPS {
            return Err(Error::Integrity(format!(
                "Bloch norm² = {n2} exceeds 1 + {POSITIVITY_EPS:e}"
            )));
        }
        Ok(())
    }
}

/// Rotating-frame state vector Y = (P_e, x̃, ỹ, P_g).
///
/// `x_tilde` and `y_tilde` are the in-phase and out-of-phase coherence
/// components in the frame co-rotating with the drive,
/// `x̃ = Re⟨e|ρ̃|g⟩`, `ỹ = −Im⟨e|ρ̃|g⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotFrameState {
    pub p_e: f64,
    pub x_tilde: f64,
    pub y_tilde: f64,
    pub p_g: f64,
}

impl RotFrameState {
    pub fn new(p_e: f64, x_tilde: f64, y_tilde: f64, p_g: f64) -> Result<Self> {
        let s = Self {
            p_e,
            x_tilde,
            y_tilde,
            p_g,
        };
        s.check()?;
        Ok(s)
    }

    /// The ground state (P_g = 1).
    pub fn ground() -> Self {
        Self {
            p_e: 0.0,
            x_tilde: 0.0,
            y_tilde: 0.0,
            p_g: 1.0,
        }
    }

    /// The excited state (P_e = 1).
    pub fn excited() -> Self {
        Self {
            p_e: 1.0,
            x_tilde: 0.0,
            y_tilde: 0.0,
            p_g: 0.0,
        }
    }

    /// A coherence-free state with the given population imbalance.
    pub fn from_z(z: f64) -> Result<Self> {
        Self::new((1.0 + z) / 2.0, 0.0, 0.0, (1.0 - z) / 2.0)
    }

    /// Population imbalance z = P_e − P_g.
    pub fn z(&self) -> f64 {
        self.p_e - self.p_g
    }

    /// Norm of the (x̃, ỹ, z) state vector.
    pub fn bloch_norm(&self) -> f64 {
        let z = self.z();
        (self.x_tilde * self.x_tilde + self.y_tilde * self.y_tilde + z * z).sqrt()
    }

    pub(crate) fn check(&self) -> Result<()> {
        for (name, c) in [
            ("p_e", self.p_e),
            ("x_tilde", self.x_tilde),
            ("y_tilde", self.y_tilde),
            ("p_g", self.p_g),
        ] {
            if !c.is_finite() {
                return Err(Error::Integrity(format!(
                    "non-finite state component {name} = {c}"
                )));
            }
        }
        let trace = self.p_e + self.p_g;
        if (trace - 1.0).abs() > TRACE_TOL {
            return Err(Error::Integrity(format!(
                "populations sum to {trace}, off unity by more than {TRACE_TOL:e}"
            )));
        }
        let slack = POSITIVITY_EPS;
        if self.p_e < -slack
            || self.p_e > 1.0 + slack
            || self.p_g < -slack
            || self.p_g > 1.0 + slack
        {
            return Err(Error::Integrity(format!(
                "population outside [0, 1]: p_e = {}, p_g = {}",
                self.p_e, self.p_g
            )));
        }
        let z = self.z();
        let n2 = self.x_tilde * self.x_tilde + self.y_tilde * self.y_tilde + z * z;
        if n2 > 1.0 + POSITIVITY_EPS {
            return Err(Error::Integrity(format!(
                "state-vector norm² = {n2} exceeds 1 + {POSITIVITY_EPS:e}"
            )));
        }
        Ok(())
    }
}

/// Thermal occupation n̄ = 1/(exp(ħω₀/k_B T) − 1) of a bosonic reservoir
/// mode at angular frequency ω₀ and temperature T.
pub fn thermal_occupation(omega0: f64, temperature: f64) -> Result<f64> {
    if omega0 <= 0.0 || !omega0.is_finite() {
        return Err(Error::Domain(format!(
            "thermal occupation needs a positive frequency, got {omega0:e}"
        )));
    }
    if temperature <= 0.0 || !temperature.is_finite() {
        return Err(Error::Domain(format!(
            "thermal occupation needs a positive temperature, got {temperature:e} K"
        )));
    }
    let x = HBAR * omega0 / (K_B * temperature);
    // expm1 keeps the high-temperature limit accurate; at low temperature
    // exp(x) overflows to +inf and the occupation underflows cleanly to 0.
    Ok(1.0 / x.exp_m1())
}

/// Inverse of [`thermal_occupation`]: the temperature at which a mode of
/// angular frequency ω₀ has occupation n̄ > 0.
pub fn occupation_temperature(omega0: f64, n_bar: f64) -> Result<f64> {
    if omega0 <= 0.0 || !omega0.is_finite() {
        return Err(Error::Domain(format!(
            "occupation temperature needs a positive frequency, got {omega0:e}"
        )));
    }
    if n_bar <= 0.0 || !n_bar.is_finite() {
        return Err(Error::Domain(format!(
            "occupation temperature needs a positive occupation, got {n_bar:e}"
        )));
    }
    Ok(HBAR * omega0 / (K_B * (1.0 / n_bar).ln_1p()))
}

/// Transform a lab-frame state into the frame rotating at ω_d.
///
/// The coherence pair rotates by −ω_d·t about z: with c = x + iy the
/// rotating components are c̃ = e^(−iω_d t)·c, so at ω_d·t = π/2 the lab
/// x-axis maps onto the −y axis of the rotating frame. The z component is
/// untouched.
pub fn to_rotating(state: BlochVector, omega_d: f64, t: f64) -> RotFrameState {
    let theta = omega_d * t;
    let (sin, cos) = theta.sin_cos();
    RotFrameState {
        p_e: (1.0 + state.z) / 2.0,
        x_tilde: state.x * cos + state.y * sin,
        y_tilde: -state.x * sin + state.y * cos,
        p_g: (1.0 - state.z) / 2.0,
    }
}

/// Inverse of [`to_rotating`]: map a rotating-frame state at time t back
/// into the lab frame.
pub fn from_rotating(state: RotFrameState, omega_d: f64, t: f64) -> BlochVector {
    let theta = omega_d * t;
    let (sin, cos) = theta.sin_cos();
    BlochVector {
        x: state.x_tilde * cos - state.y_tilde * sin,
        y: state.x_tilde * sin + state.y_tilde * cos,
        z: state.p_e - state.p_g,
    }
}
