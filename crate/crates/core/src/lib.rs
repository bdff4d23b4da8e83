//! Deterministic terahertz (0.1-0.5 THz) link-budget and channel-model
//! toolkit.
//!
//! The crate computes free-space path loss, Friis received power, LOS/NLOS
//! channel transfer magnitudes with molecular absorption and rough-surface
//! reflection, and Shannon capacity, organized as:
//!
//! - [`units`]: log/linear conversions and physical constants;
//! - [`atmosphere`]: table-driven molecular absorption and
//!   transmission-window discovery;
//! - [`link_budget`]: path loss, received power, thermal noise, SNR;
//! - [`channel`]: 2D image-method ray tracing with Fresnel reflection and
//!   Kirchhoff/Rayleigh rough-surface attenuation;
//! - [`capacity`]: Shannon capacity and distance/frequency sweep grids;
//! - [`io`]: scenario/table files and deterministic number formatting.
//!
//! All types are immutable after construction and every computation is a
//! pure function, so scenarios and tables can be shared freely across
//! threads.

pub mod atmosphere;
pub mod capacity;
pub mod channel;
pub mod error;
pub mod io;
pub mod link_budget;
pub mod units;

pub use atmosphere::{
    amplitude_transmittance, AtmosphereState, AttenuationTable, TransmissionWindow,
};
pub use capacity::{
    capacity_from_link, capacity_sweep, path_loss_grid, shannon_capacity, CapacityQuery, SnrMode,
    SweepGrid,
};
pub use channel::{
    fresnel_reflection, h_spread, los_response, nlos_response, reflection_coefficient,
    rough_scatter_factor, specular_point, total_response, trace_specular_paths, ChannelResponse,
    CombinationMode, Material, PathKind, Point2, RayPath, Reflector, Scenario,
};
pub use error::{Error, Result};
pub use io::{load_attenuation_table, load_scenario, save_scenario, scenario_from_json, write_scenario};
pub use link_budget::{
    friis_received_power, fspl_db, noise_power_dbm, snr_from_link, LinkBudget, LinkResult,
};
pub use units::{
    db_to_linear, dbm_to_watts, linear_to_db, watts_to_dbm, wavelength, BOLTZMANN, SPEED_OF_LIGHT,
};
