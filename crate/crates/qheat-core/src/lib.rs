//! Steady-state thermodynamics of a coherently driven two-level system
//! coupled to a hot and a cold thermal reservoir.
//!
//! The crate builds the rotating-frame generator of the driven qubit,
//! solves its steady state in closed form and numerically from the null
//! space, splits the hot-bath heat current into a population (classical)
//! component and a coherence component, solves for the drive strength that
//! cancels the classical component, and maps a superconducting charge-qubit
//! circuit onto the model parameters.
//!
//! All rates and frequencies are angular, in 1/s. Every function is pure;
//! values are immutable once constructed and safe to use from any number of
//! threads.

pub mod circuit;
pub mod error;
pub mod liouvillian;
pub mod model;
pub mod steady;
pub mod switch;
pub mod thermo;

pub use circuit::{
    derive_model, design_report, gate_offset, CircuitSpec, DerivedModel, DesignReport,
};
pub use error::{Error, Result};
pub use liouvillian::{
    build_generator, evolve_trajectory, propagate, steady_numeric, Generator, Trajectory,
};
pub use model::{
    from_rotating, gamma_tot, occupation_temperature, thermal_occupation, to_rotating, BathLabel,
    BathSpec, BlochVector, DriveSpec, PhysConstants, RotFrameState,
};
pub use steady::{steady_analytic, steady_analytic_dephasing, undriven_reference, SteadyState};
pub use switch::{
    g_star, g_star_dephasing, g_star_numeric, quantum_heat_on_line, quantum_heat_on_line_dephasing,
    special_point_report, switch_point_report, SwitchPoint,
};
pub use thermo::{
    coherent_energy, dephasing_heat, drive_power, entropy_production, heat_cold,
    heat_components_hot, HeatReport,
};
