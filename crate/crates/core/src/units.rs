//! Centralized log/linear conversions and physical constants.
//!
//! Every other module works in linear SI units (Hz, m, W); dB, dBm and dBi
//! appear only at API boundaries and are converted here. Keeping one
//! arithmetic convention avoids silent double conversions between modules.

use crate::error::{Error, Result};

/// Speed of light in vacuum, m/s (exact by SI definition).
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// Boltzmann constant, J/K (exact by SI definition).
pub const BOLTZMANN: f64 = 1.380_649e-23;

/// Converts a dB ratio to a linear power ratio: `10^(db/10)`.
pub fn db_to_linear(db: f64) -> Result<f64> {
    if !db.is_finite() {
        return Err(Error::invalid(format!("dB value must be finite, got {db}")));
    }
    Ok(10f64.powf(db / 10.0))
}

/// Converts a linear power ratio to dB: `10*log10(ratio)`.
pub fn linear_to_db(ratio: f64) -> Result<f64> {
    if !ratio.is_finite() || ratio <= 0.0 {
        return Err(Error::invalid(format!(
            "linear ratio must be finite and positive, got {ratio}"
        )));
    }
    Ok(10.0 * ratio.log10())
}

/// Converts dBm to watts: `1e-3 * 10^(dbm/10)`.
pub fn dbm_to_watts(dbm: f64) -> Result<f64> {
    if !dbm.is_finite() {
        return Err(Error::invalid(format!(
            "dBm value must be finite, got {dbm}"
        )));
    }
    Ok(1e-3 * 10f64.powf(dbm / 10.0))
}

/// Converts watts to dBm: `10*log10(watts/1e-3)`.
pub fn watts_to_dbm(watts: f64) -> Result<f64> {
    if !watts.is_finite() || watts <= 0.0 {
        return Err(Error::invalid(format!(
            "power must be finite and positive, got {watts} W"
        )));
    }
    Ok(10.0 * (watts / 1e-3).log10())
}

/// Free-space wavelength in meters for a carrier frequency in Hz.
pub fn wavelength(frequency_hz: f64) -> Result<f64> {
    if !frequency_hz.is_finite() || frequency_hz <= 0.0 {
        return Err(Error::invalid(format!(
            "frequency must be finite and positive, got {frequency_hz} Hz"
        )));
    }
    Ok(SPEED_OF_LIGHT / frequency_hz)
}
