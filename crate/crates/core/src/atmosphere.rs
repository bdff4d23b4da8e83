//! Table-driven molecular absorption and transmission-window discovery.
//!
//! Absorption is ingested as a frequency vs. specific-attenuation table
//! (dB/km) and queried by piecewise-linear interpolation. The table is only
//! valid at its reference atmosphere; no temperature or pressure rescaling
//! is applied, and querying with a state that differs by more than 1%
//! (relative) from the reference yields a warning for results metadata.
//! Extrapolation outside the table span is a hard error: absorption spectra
//! are spiky and extrapolating fabricates physics.

use std::io::BufRead;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Relative difference above which a queried atmosphere no longer matches
/// the table's reference state.
const STATE_MISMATCH_REL: f64 = 0.01;

/// Exact header line required by the attenuation CSV format.
pub const ATTENUATION_CSV_HEADER: &str = "frequency_ghz,attenuation_db_per_km";

/// Bulk atmospheric conditions a table or scenario is defined at.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AtmosphereState {
    pub temperature_k: f64,
    pub pressure_pa: f64,
}

impl AtmosphereState {
    /// 20 degrees C at one standard atmosphere.
    pub const STANDARD: AtmosphereState = AtmosphereState {
        temperature_k: 293.15,
        pressure_pa: 101_325.0,
    };

    pub fn new(temperature_k: f64, pressure_pa: f64) -> Result<Self> {
        if !temperature_k.is_finite() || temperature_k <= 0.0 {
            return Err(Error::invalid(format!(
                "temperature must be finite and positive, got {temperature_k} K"
            )));
        }
        if !pressure_pa.is_finite() || pressure_pa <= 0.0 {
            return Err(Error::invalid(format!(
                "pressure must be finite and positive, got {pressure_pa} Pa"
            )));
        }
        Ok(AtmosphereState {
            temperature_k,
            pressure_pa,
        })
    }

    /// True when both temperature and pressure are within 1% (relative)
    /// of `other`.
    pub fn matches(&self, other: &AtmosphereState) -> bool {
        let rel = |a: f64, b: f64| ((a - b) / b).abs();
        rel(self.temperature_k, other.temperature_k) <= STATE_MISMATCH_REL
            && rel(self.pressure_pa, other.pressure_pa) <= STATE_MISMATCH_REL
    }
}

impl Default for AtmosphereState {
    fn default() -> Self {
        AtmosphereState::STANDARD
    }
}

/// A contiguous frequency interval where the interpolated specific
/// attenuation stays at or below the search threshold.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TransmissionWindow {
    pub low_hz: f64,
    pub high_hz: f64,
    /// Frequency achieving the window minimum (lowest frequency on ties).
    pub center_hz: f64,
    pub min_attenuation_db_per_km: f64,
}

impl TransmissionWindow {
    pub fn contains(&self, frequency_hz: f64) -> bool {
        self.low_hz <= frequency_hz && frequency_hz <= self.high_hz
    }
}

/// Frequency-indexed specific-attenuation samples with linear interpolation.
///
/// Samples are `(frequency_hz, specific_attenuation_db_per_km)` pairs with
/// strictly increasing frequencies and non-negative attenuations; at least
/// two samples are required. The table is immutable after construction and
/// all queries are read-only.
#[derive(Debug, Clone, PartialEq)]
pub struct AttenuationTable {
    samples: Vec<(f64, f64)>,
    reference_state: AtmosphereState,
    source_label: String,
}

impl AttenuationTable {
    /// Builds a table from `(frequency_hz, attenuation_db_per_km)` samples.
    pub fn new(
        samples: Vec<(f64, f64)>,
        reference_state: AtmosphereState,
        source_label: impl Into<String>,
    ) -> Result<Self> {
        if samples.len() < 2 {
            return Err(Error::Validation(format!(
                "attenuation table needs at least 2 samples, got {}",
                samples.len()
            )));
        }
        for (i, &(f, a)) in samples.iter().enumerate() {
            if !f.is_finite() || f <= 0.0 {
                return Err(Error::Validation(format!(
                    "sample {i}: frequency must be finite and positive, got {f} Hz"
                )));
            }
            if !a.is_finite() || a < 0.0 {
                return Err(Error::Validation(format!(
                    "sample {i}: attenuation must be finite and non-negative, got {a} dB/km"
                )));
            }
            if i > 0 && f <= samples[i - 1].0 {
                return Err(Error::Validation(format!(
                    "sample {i}: frequency {f} Hz does not increase over previous {} Hz",
                    samples[i - 1].0
                )));
            }
        }
        Ok(AttenuationTable {
            samples,
            reference_state,
            source_label: source_label.into(),
        })
    }

    /// Parses the attenuation CSV format.
    ///
    /// The stream must be UTF-8 with the first line exactly
    /// `frequency_ghz,attenuation_db_per_km`; every following line is either
    /// a `#`-prefixed comment or two decimal fields joined by one comma.
    /// Line endings may be LF or CRLF, blank interior lines are rejected,
    /// and frequencies are given in GHz (converted to Hz on load). The
    /// loaded table carries [`AtmosphereState::STANDARD`] as its reference
    /// state; use [`AttenuationTable::with_reference_state`] when the data
    /// was computed for different conditions.
    pub fn from_csv(reader: impl BufRead, source_label: impl Into<String>) -> Result<Self> {
        let mut samples: Vec<(f64, f64)> = Vec::new();
        let mut lines = reader.lines();

        let header = match lines.next() {
            Some(line) => line?,
            None => return Err(Error::parse(1, "empty file, expected header")),
        };
        if trim_crlf(&header) != ATTENUATION_CSV_HEADER {
            return Err(Error::parse(
                1,
                format!("expected header '{ATTENUATION_CSV_HEADER}', got '{header}'"),
            ));
        }

        for (idx, line) in lines.enumerate() {
            let line_no = idx + 2; // header was line 1
            let raw = line?;
            let line = trim_crlf(&raw);
            if line.starts_with('#') {
                continue;
            }
            if line.is_empty() {
                return Err(Error::parse(line_no, "blank line"));
            }
            let mut fields = line.split(',');
            let (freq_field, atten_field) = match (fields.next(), fields.next(), fields.next()) {
                (Some(f), Some(a), None) => (f, a),
                _ => {
                    return Err(Error::parse(
                        line_no,
                        format!("expected two comma-separated fields, got '{line}'"),
                    ))
                }
            };
            let freq_ghz: f64 = freq_field.parse().map_err(|_| {
                Error::parse(line_no, format!("invalid frequency '{freq_field}'"))
            })?;
            let atten: f64 = atten_field.parse().map_err(|_| {
                Error::parse(line_no, format!("invalid attenuation '{atten_field}'"))
            })?;
            if !freq_ghz.is_finite() || freq_ghz <= 0.0 {
                return Err(Error::parse(
                    line_no,
                    format!("frequency must be finite and positive, got {freq_ghz} GHz"),
                ));
            }
            if !atten.is_finite() || atten < 0.0 {
                return Err(Error::parse(
                    line_no,
                    format!("attenuation must be finite and non-negative, got {atten} dB/km"),
                ));
            }
            let freq_hz = freq_ghz * 1e9;
            if let Some(&(prev, _)) = samples.last() {
                if freq_hz <= prev {
                    return Err(Error::parse(
                        line_no,
                        format!("non-increasing frequency at line {line_no}"),
                    ));
                }
            }
            samples.push((freq_hz, atten));
        }

        if samples.len() < 2 {
            return Err(Error::parse(
                1,
                format!("attenuation table needs at least 2 rows, got {}", samples.len()),
            ));
        }
        AttenuationTable::new(samples, AtmosphereState::STANDARD, source_label)
    }

    pub fn with_reference_state(mut self, state: AtmosphereState) -> Self {
        self.reference_state = state;
        self
    }

    pub fn samples(&self) -> &[(f64, f64)] {
        &self.samples
    }

    pub fn reference_state(&self) -> &AtmosphereState {
        &self.reference_state
    }

    pub fn source_label(&self) -> &str {
        &self.source_label
    }

    /// Inclusive frequency span covered by the table, in Hz.
    pub fn span_hz(&self) -> (f64, f64) {
        (self.samples[0].0, self.samples[self.samples.len() - 1].0)
    }

    /// Specific attenuation in dB/km at `frequency_hz`, linearly
    /// interpolated between the bracketing samples. No extrapolation:
    /// frequencies outside the table span are an error.
    pub fn specific_attenuation(&self, frequency_hz: f64) -> Result<f64> {
        let (lo, hi) = self.span_hz();
        if !frequency_hz.is_finite() || frequency_hz < lo || frequency_hz > hi {
            return Err(Error::OutOfRange(format!(
                "frequency {frequency_hz} Hz outside table span [{lo}, {hi}] Hz"
            )));
        }
        // partition_point returns the first sample with f > frequency_hz.
        let idx = self.samples.partition_point(|&(f, _)| f <= frequency_hz);
        if idx == 0 {
            return Ok(self.samples[0].1);
        }
        if idx == self.samples.len() {
            return Ok(self.samples[idx - 1].1);
        }
        let (f0, a0) = self.samples[idx - 1];
        let (f1, a1) = self.samples[idx];
        Ok(interpolate(f0, a0, f1, a1, frequency_hz))
    }

    /// Molecular absorption coefficient in 1/m (power attenuation), so that
    /// `exp(-alpha*r)` equals `10^(-A*r/10000)` for specific attenuation
    /// `A` in dB/km and `r` in meters.
    ///
    /// The table applies at its reference state only; `state` is validated
    /// but not used to rescale values (see [`AttenuationTable::state_warning`]).
    pub fn absorption_coefficient(
        &self,
        frequency_hz: f64,
        state: &AtmosphereState,
    ) -> Result<f64> {
        AtmosphereState::new(state.temperature_k, state.pressure_pa)?;
        let db_per_km = self.specific_attenuation(frequency_hz)?;
        Ok(db_per_km * std::f64::consts::LN_10 / 10_000.0)
    }

    /// Warning text when `state` differs from the reference state by more
    /// than 1% relative in temperature or pressure, for results metadata.
    pub fn state_warning(&self, state: &AtmosphereState) -> Option<String> {
        if state.matches(&self.reference_state) {
            None
        } else {
            Some(format!(
                "attenuation table '{}' is referenced at {} K / {} Pa but was queried at {} K / {} Pa; values are not rescaled",
                self.source_label,
                self.reference_state.temperature_k,
                self.reference_state.pressure_pa,
                state.temperature_k,
                state.pressure_pa
            ))
        }
    }

    /// Finds the maximal contiguous intervals where the interpolated
    /// specific attenuation is at or below `threshold_db_per_km`.
    ///
    /// Windows are returned sorted by ascending low edge and report their
    /// interpolated minimum and the frequency achieving it (lowest
    /// frequency on ties). Since the interpolant is piecewise linear,
    /// minima occur at sample points or window edges. Intervals that
    /// degenerate to a single frequency (the interpolant touching the
    /// threshold at one point) are dropped.
    pub fn find_windows(&self, threshold_db_per_km: f64) -> Result<Vec<TransmissionWindow>> {
        if !threshold_db_per_km.is_finite() || threshold_db_per_km <= 0.0 {
            return Err(Error::invalid(format!(
                "threshold must be finite and positive, got {threshold_db_per_km} dB/km"
            )));
        }
        let thr = threshold_db_per_km;
        let mut windows = Vec::new();
        let mut open: Option<f64> = None;

        if self.samples[0].1 <= thr {
            open = Some(self.samples[0].0);
        }
        for pair in self.samples.windows(2) {
            let (f0, a0) = pair[0];
            let (f1, a1) = pair[1];
            let in0 = a0 <= thr;
            let in1 = a1 <= thr;
            if in0 && !in1 {
                let cross = crossing(f0, a0, f1, a1, thr);
                self.close_window(&mut windows, open.take().expect("window open"), cross);
            } else if !in0 && in1 {
                open = Some(crossing(f0, a0, f1, a1, thr));
            }
            // A linear segment with both ends on one side of the threshold
            // never crosses it, so no event in the remaining cases.
        }
        if let Some(low) = open.take() {
            let high = self.samples[self.samples.len() - 1].0;
            self.close_window(&mut windows, low, high);
        }
        Ok(windows)
    }

    fn close_window(&self, windows: &mut Vec<TransmissionWindow>, low: f64, high: f64) {
        if low >= high {
            return; // zero-width touch, not a usable window
        }
        // Candidate minima: both edges plus every sample inside the window.
        let mut min_f = low;
        let mut min_a = self
            .specific_attenuation(low)
            .expect("window edge lies within the table span");
        let mut consider = |f: f64, a: f64| {
            if a < min_a || (a == min_a && f < min_f) {
                min_f = f;
                min_a = a;
            }
        };
        for &(f, a) in &self.samples {
            if f >= low && f <= high {
                consider(f, a);
            }
        }
        let high_a = self
            .specific_attenuation(high)
            .expect("window edge lies within the table span");
        consider(high, high_a);
        windows.push(TransmissionWindow {
            low_hz: low,
            high_hz: high,
            center_hz: min_f,
            min_attenuation_db_per_km: min_a,
        });
    }
}

/// Amplitude transmittance `exp(-alpha*r/2)` of a path of length `r`
/// through a medium with power absorption coefficient `alpha` (1/m).
/// Squaring it gives the power transmittance `exp(-alpha*r)`.
pub fn amplitude_transmittance(alpha_per_m: f64, distance_m: f64) -> Result<f64> {
    if !alpha_per_m.is_finite() || alpha_per_m < 0.0 {
        return Err(Error::invalid(format!(
            "absorption coefficient must be finite and non-negative, got {alpha_per_m} 1/m"
        )));
    }
    if !distance_m.is_finite() || distance_m < 0.0 {
        return Err(Error::invalid(format!(
            "distance must be finite and non-negative, got {distance_m} m"
        )));
    }
    Ok((-alpha_per_m * distance_m / 2.0).exp())
}

fn interpolate(f0: f64, a0: f64, f1: f64, a1: f64, f: f64) -> f64 {
    a0 + (f - f0) * (a1 - a0) / (f1 - f0)
}

/// Frequency where the segment (f0,a0)-(f1,a1) crosses the threshold;
/// clamped into the segment against rounding drift.
fn crossing(f0: f64, a0: f64, f1: f64, a1: f64, thr: f64) -> f64 {
    (f0 + (thr - a0) * (f1 - f0) / (a1 - a0)).clamp(f0, f1)
}

fn trim_crlf(line: &str) -> &str {
    line.strip_suffix('\r').unwrap_or(line)
}
