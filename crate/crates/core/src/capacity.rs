//! Shannon capacity and the sweep engines that produce path-loss and
//! capacity grids as plot-ready tabular data.
//!
//! The channel is treated as flat across the analysis bandwidth: one SNR
//! applies to the whole window. Sweeps iterate distances (outer) then
//! frequencies (inner) and always emit rows in that order.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::link_budget::{friis_received_power, fspl_db, LinkBudget, LinkResult};

/// How the SNR entering the capacity formula is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum SnrMode {
    /// Use a fixed SNR in dB (20 dB reproduces the reference analysis).
    Fixed(f64),
    /// Derive the SNR per operating point from the Friis link budget and
    /// the kTB noise model.
    Derived,
}

/// Parameter set for one capacity evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CapacityQuery {
    pub bandwidth_hz: f64,
    pub snr: SnrMode,
    pub center_frequency_hz: f64,
}

impl CapacityQuery {
    /// Capacity in bit/s. Derived mode evaluates `budget` at this query's
    /// center frequency.
    pub fn evaluate(&self, budget: Option<&LinkBudget>) -> Result<f64> {
        match self.snr {
            SnrMode::Fixed(snr_db) => shannon_capacity(self.bandwidth_hz, snr_db),
            SnrMode::Derived => {
                let budget = budget.ok_or_else(|| {
                    Error::invalid("derived SNR requires a link budget".to_string())
                })?;
                let at_center = LinkBudget {
                    frequency_hz: self.center_frequency_hz,
                    ..*budget
                };
                let (_, capacity) = capacity_from_link(&at_center, self.bandwidth_hz)?;
                Ok(capacity)
            }
        }
    }
}

/// Distance/frequency axes for grid sweeps; both strictly increasing,
/// non-empty and positive.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepGrid {
    distances_m: Vec<f64>,
    frequencies_hz: Vec<f64>,
}

impl SweepGrid {
    pub fn new(distances_m: Vec<f64>, frequencies_hz: Vec<f64>) -> Result<Self> {
        validate_axis("distances", &distances_m)?;
        validate_axis("frequencies", &frequencies_hz)?;
        Ok(SweepGrid {
            distances_m,
            frequencies_hz,
        })
    }

    pub fn distances_m(&self) -> &[f64] {
        &self.distances_m
    }

    pub fn frequencies_hz(&self) -> &[f64] {
        &self.frequencies_hz
    }
}

fn validate_axis(name: &str, axis: &[f64]) -> Result<()> {
    if axis.is_empty() {
        return Err(Error::invalid(format!("{name} axis must be non-empty")));
    }
    for (i, &v) in axis.iter().enumerate() {
        if !v.is_finite() || v <= 0.0 {
            return Err(Error::invalid(format!(
                "{name} axis entry {i} must be finite and positive, got {v}"
            )));
        }
        if i > 0 && v <= axis[i - 1] {
            return Err(Error::invalid(format!(
                "{name} axis must be strictly increasing, entry {i} is {v} after {}",
                axis[i - 1]
            )));
        }
    }
    Ok(())
}

/// Shannon capacity `B * log2(1 + 10^(snr/10))` in bits per second.
///
/// `snr_db` may be negative infinity (zero linear SNR, zero capacity);
/// NaN and positive infinity are rejected.
pub fn shannon_capacity(bandwidth_hz: f64, snr_db: f64) -> Result<f64> {
    if !bandwidth_hz.is_finite() || bandwidth_hz <= 0.0 {
        return Err(Error::invalid(format!(
            "bandwidth must be finite and positive, got {bandwidth_hz} Hz"
        )));
    }
    if snr_db.is_nan() || snr_db == f64::INFINITY {
        return Err(Error::invalid(format!("SNR must not be NaN or +inf, got {snr_db} dB")));
    }
    let snr_linear = 10f64.powf(snr_db / 10.0);
    Ok(bandwidth_hz * (1.0 + snr_linear).log2())
}

/// Full chain from a link budget to capacity: Friis received power, kTB
/// noise over `bandwidth_hz`, SNR, then Shannon capacity.
pub fn capacity_from_link(budget: &LinkBudget, bandwidth_hz: f64) -> Result<(LinkResult, f64)> {
    let result = friis_received_power(budget, bandwidth_hz)?;
    let capacity = shannon_capacity(bandwidth_hz, result.snr_db)?;
    Ok((result, capacity))
}

/// Free-space path loss over the grid as `(distance_m, frequency_hz,
/// path_loss_db)` rows, distances outer, frequencies inner.
pub fn path_loss_grid(grid: &SweepGrid) -> Result<Vec<(f64, f64, f64)>> {
    let mut rows = Vec::with_capacity(grid.distances_m.len() * grid.frequencies_hz.len());
    for &d in &grid.distances_m {
        for &f in &grid.frequencies_hz {
            rows.push((d, f, fspl_db(d, f)?));
        }
    }
    Ok(rows)
}

/// Capacity over the grid as `(distance_m, frequency_hz, capacity_bps)`
/// rows in the same deterministic order as [`path_loss_grid`].
///
/// In fixed mode the SNR (and hence the capacity) is independent of the
/// grid point. In derived mode each cell re-evaluates the budget template
/// at the cell's distance and frequency.
pub fn capacity_sweep(
    budget_template: &LinkBudget,
    grid: &SweepGrid,
    bandwidth_hz: f64,
    snr_mode: SnrMode,
) -> Result<Vec<(f64, f64, f64)>> {
    let mut rows = Vec::with_capacity(grid.distances_m.len() * grid.frequencies_hz.len());
    match snr_mode {
        SnrMode::Fixed(snr_db) => {
            let capacity = shannon_capacity(bandwidth_hz, snr_db)?;
            for &d in &grid.distances_m {
                for &f in &grid.frequencies_hz {
                    rows.push((d, f, capacity));
                }
            }
        }
        SnrMode::Derived => {
            for &d in &grid.distances_m {
                for &f in &grid.frequencies_hz {
                    let cell = LinkBudget {
                        distance_m: d,
                        frequency_hz: f,
                        ..*budget_template
                    };
                    let (_, capacity) = capacity_from_link(&cell, bandwidth_hz)?;
                    rows.push((d, f, capacity));
                }
            }
        }
    }
    Ok(rows)
}
