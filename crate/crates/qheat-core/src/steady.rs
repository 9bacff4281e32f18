//! Closed-form rotating-frame steady states of the driven, two-bath qubit,
//! with and without pure dephasing, plus the undriven reference quantities.

use crate::error::{Error, Result};
use crate::model::{gamma_tot, BathSpec, DriveSpec, RotFrameState, HBAR};

/// Rotating-frame steady-state components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SteadyState {
    pub x_tilde_inf: f64,
    pub y_tilde_inf: f64,
    pub z_tilde_inf: f64,
}

impl SteadyState {
    /// View as a normalized state vector Y = (P_e, x̃, ỹ, P_g).
    pub fn as_state(&self) -> RotFrameState {
        RotFrameState {
            p_e: (1.0 + self.z_tilde_inf) / 2.0,
            x_tilde: self.x_tilde_inf,
            y_tilde: self.y_tilde_inf,
            p_g: (1.0 - self.z_tilde_inf) / 2.0,
        }
    }
}

fn check_rates(hot: &BathSpec, cold: &BathSpec) -> Result<f64> {
    let gt = gamma_tot(hot, cold);
    if gt <= 0.0 || gt.is_nan() {
        return Err(Error::Domain(format!(
            "total decoherence rate must be positive, got {gt:e}"
        )));
    }
    Ok(gt)
}

/// Steady state without dephasing.
///
/// With γ_tot = γ_h(2n̄_h+1) + γ_c(2n̄_c+1) and denominator
/// D = 2g² + γ_tot² + 4δ²:
///
/// ```text
/// x̃∞ = −(2δg(γ_h+γ_c)/γ_tot) / D
/// ỹ∞ =  g(γ_h+γ_c) / D
/// z̃∞ = −(γ_h+γ_c)(γ_tot² + 4δ²) / (γ_tot·D)
/// ```
///
/// D ≥ γ_tot² > 0 for any g and δ, so no denominator can vanish while
/// γ_tot > 0; the γ_tot·D denominator of z̃∞ is bounded below by γ_tot³.
pub fn steady_analytic(hot: &BathSpec, cold: &BathSpec, drive: &DriveSpec) -> Result<SteadyState> {
    let gt = check_rates(hot, cold)?;
    let gsum = hot.gamma + cold.gamma;
    let g = drive.g;
    let delta = drive.delta;
    let denom = 2.0 * g * g + gt * gt + 4.0 * delta * delta;
    Ok(SteadyState {
        x_tilde_inf: -(2.0 * delta * g * gsum / gt) / denom,
        y_tilde_inf: g * gsum / denom,
        z_tilde_inf: -(gsum * (gt * gt + 4.0 * delta * delta)) / (gt * denom),
    })
}

/// Steady state with an additional pure-dephasing channel at rate γ_φ.
///
/// Every occurrence of γ_tot in the x̃/ỹ/z̃ structure is broadened to
/// Γ = γ_tot + 2γ_φ except the overall 1/γ_tot population weight; the
/// denominator becomes D_φ = 2g²Γ + γ_tot(Γ² + 4δ²). Reduces to
/// [`steady_analytic`] at γ_φ = 0.
pub fn steady_analytic_dephasing(
    hot: &BathSpec,
    cold: &BathSpec,
    drive: &DriveSpec,
    gamma_phi: f64,
) -> Result<SteadyState> {
    let gt = check_rates(hot, cold)?;
    if gamma_phi < 0.0 || !gamma_phi.is_finite() {
        return Err(Error::Domain(format!(
            "dephasing rate must be non-negative and finite, got {gamma_phi:e}"
        )));
    }
    let gsum = hot.gamma + cold.gamma;
    let g = drive.g;
    let delta = drive.delta;
    let big = gt + 2.0 * gamma_phi;
    let denom = 2.0 * g * g * big + gt * (big * big + 4.0 * delta * delta);
    Ok(SteadyState {
        x_tilde_inf: -2.0 * delta * g * gsum / denom,
        y_tilde_inf: g * gsum * big / denom,
        z_tilde_inf: -(gsum * (big * big + 4.0 * delta * delta)) / denom,
    })
}

/// Undriven (g = 0) reference: steady population imbalance z₀ and the
/// steady heat current J∞_h,0 received by the qubit from the hot bath.
pub fn undriven_reference(hot: &BathSpec, cold: &BathSpec, omega0: f64) -> Result<(f64, f64)> {
    let gt = check_rates(hot, cold)?;
    if omega0 <= 0.0 || !omega0.is_finite() {
        return Err(Error::Domain(format!(
            "qubit frequency must be positive, got {omega0:e}"
        )));
    }
    let z0 = -(hot.gamma + cold.gamma) / gt;
    let j_h0 = -(hot.weighted_rate() * HBAR * omega0 / 2.0) * (z0 - hot.equilibrium_z());
    Ok((z0, j_h0))
}
