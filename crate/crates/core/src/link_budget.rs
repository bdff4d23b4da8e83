//! Free-space path loss, Friis received power, thermal noise and link SNR.
//!
//! Antenna gains are frequency-independent dBi scalars; there is no
//! pattern, misalignment or fading model. Received power is computed in
//! linear watts and converted to dBm so the log-domain identity
//! `P_rx = P_tx + G_tx + G_rx - FSPL` holds to rounding.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::units::{db_to_linear, dbm_to_watts, watts_to_dbm, BOLTZMANN, SPEED_OF_LIGHT};

/// Transmit-side and geometry parameters of a point-to-point link.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LinkBudget {
    pub tx_power_dbm: f64,
    pub tx_gain_dbi: f64,
    pub rx_gain_dbi: f64,
    pub distance_m: f64,
    pub frequency_hz: f64,
    /// Receiver noise figure in dB, >= 0.
    pub noise_figure_db: f64,
    /// Receiver noise temperature in K.
    pub noise_temperature_k: f64,
}

impl LinkBudget {
    /// Budget with the default noise model (NF 0 dB at 290 K).
    pub fn new(
        tx_power_dbm: f64,
        tx_gain_dbi: f64,
        rx_gain_dbi: f64,
        distance_m: f64,
        frequency_hz: f64,
    ) -> Result<Self> {
        LinkBudget {
            tx_power_dbm,
            tx_gain_dbi,
            rx_gain_dbi,
            distance_m,
            frequency_hz,
            noise_figure_db: 0.0,
            noise_temperature_k: 290.0,
        }
        .validated()
    }

    pub fn validated(self) -> Result<Self> {
        for (name, v) in [
            ("tx_power_dbm", self.tx_power_dbm),
            ("tx_gain_dbi", self.tx_gain_dbi),
            ("rx_gain_dbi", self.rx_gain_dbi),
        ] {
            if !v.is_finite() {
                return Err(Error::invalid(format!("{name} must be finite, got {v}")));
            }
        }
        if !self.distance_m.is_finite() || self.distance_m <= 0.0 {
            return Err(Error::invalid(format!(
                "distance must be finite and positive, got {} m",
                self.distance_m
            )));
        }
        if !self.frequency_hz.is_finite() || self.frequency_hz <= 0.0 {
            return Err(Error::invalid(format!(
                "frequency must be finite and positive, got {} Hz",
                self.frequency_hz
            )));
        }
        if !self.noise_figure_db.is_finite() || self.noise_figure_db < 0.0 {
            return Err(Error::invalid(format!(
                "noise figure must be finite and non-negative, got {} dB",
                self.noise_figure_db
            )));
        }
        if !self.noise_temperature_k.is_finite() || self.noise_temperature_k <= 0.0 {
            return Err(Error::invalid(format!(
                "noise temperature must be finite and positive, got {} K",
                self.noise_temperature_k
            )));
        }
        Ok(self)
    }
}

/// Computed link-budget chain for one operating point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LinkResult {
    pub path_loss_db: f64,
    pub received_power_dbm: f64,
    pub noise_power_dbm: f64,
    pub snr_db: f64,
}

/// Free-space path loss in dB between isotropic antennas:
/// `20*log10(d) + 20*log10(f) + 20*log10(4*pi/c)`.
pub fn fspl_db(distance_m: f64, frequency_hz: f64) -> Result<f64> {
    if !distance_m.is_finite() || distance_m <= 0.0 {
        return Err(Error::invalid(format!(
            "distance must be finite and positive, got {distance_m} m"
        )));
    }
    if !frequency_hz.is_finite() || frequency_hz <= 0.0 {
        return Err(Error::invalid(format!(
            "frequency must be finite and positive, got {frequency_hz} Hz"
        )));
    }
    Ok(20.0 * distance_m.log10()
        + 20.0 * frequency_hz.log10()
        + 20.0 * (4.0 * std::f64::consts::PI / SPEED_OF_LIGHT).log10())
}

/// Thermal noise power `10*log10(k*T*B/1mW) + NF` in dBm.
pub fn noise_power_dbm(
    bandwidth_hz: f64,
    noise_temperature_k: f64,
    noise_figure_db: f64,
) -> Result<f64> {
    if !bandwidth_hz.is_finite() || bandwidth_hz <= 0.0 {
        return Err(Error::invalid(format!(
            "bandwidth must be finite and positive, got {bandwidth_hz} Hz"
        )));
    }
    if !noise_temperature_k.is_finite() || noise_temperature_k <= 0.0 {
        return Err(Error::invalid(format!(
            "noise temperature must be finite and positive, got {noise_temperature_k} K"
        )));
    }
    if !noise_figure_db.is_finite() || noise_figure_db < 0.0 {
        return Err(Error::invalid(format!(
            "noise figure must be finite and non-negative, got {noise_figure_db} dB"
        )));
    }
    let ktb_w = BOLTZMANN * noise_temperature_k * bandwidth_hz;
    Ok(10.0 * (ktb_w / 1e-3).log10() + noise_figure_db)
}

/// Link SNR in dB: received power minus noise power, both in dBm.
pub fn snr_from_link(received_power_dbm: f64, noise_power_dbm: f64) -> Result<f64> {
    if !received_power_dbm.is_finite() || !noise_power_dbm.is_finite() {
        return Err(Error::invalid(
            "received power and noise power must be finite".to_string(),
        ));
    }
    Ok(received_power_dbm - noise_power_dbm)
}

/// Friis received power `P_tx*G_tx*G_rx*(c/(4*pi*d*f))^2`, evaluated in
/// linear watts and reported in dBm, together with path loss, thermal
/// noise over `bandwidth_hz` and the resulting SNR.
///
/// The budget type carries no bandwidth of its own, so the noise
/// bandwidth is passed explicitly.
pub fn friis_received_power(budget: &LinkBudget, bandwidth_hz: f64) -> Result<LinkResult> {
    let budget = budget.validated()?;
    let path_loss_db = fspl_db(budget.distance_m, budget.frequency_hz)?;

    let spread = SPEED_OF_LIGHT
        / (4.0 * std::f64::consts::PI * budget.distance_m * budget.frequency_hz);
    let rx_watts = dbm_to_watts(budget.tx_power_dbm)?
        * db_to_linear(budget.tx_gain_dbi)?
        * db_to_linear(budget.rx_gain_dbi)?
        * spread
        * spread;
    let received_power_dbm = watts_to_dbm(rx_watts)?;

    let noise_dbm = noise_power_dbm(
        bandwidth_hz,
        budget.noise_temperature_k,
        budget.noise_figure_db,
    )?;
    let snr_db = snr_from_link(received_power_dbm, noise_dbm)?;

    Ok(LinkResult {
        path_loss_db,
        received_power_dbm,
        noise_power_dbm: noise_dbm,
        snr_db,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    /// Transmit parameters of the 300 GHz / 1 m operating point.
    pub(crate) fn reference_budget() -> LinkBudget {
        LinkBudget::new(0.0, 20.0, 20.0, 1.0, 300e9).unwrap()
    }

    #[test]
    fn fspl_reference_point() {
        // independent evaluation: 20log10(3e11) + 20log10(4pi/c)
        assert_abs_diff_eq!(fspl_db(1.0, 300e9).unwrap(), 81.99020831627662, epsilon = 1e-9);
    }

    #[test]
    fn fspl_zero_db_frequency() {
        // all three terms cancel at d = 1 m, f = c/(4*pi)
        let f = SPEED_OF_LIGHT / (4.0 * std::f64::consts::PI);
        assert_abs_diff_eq!(fspl_db(1.0, f).unwrap(), 0.0, epsilon = 1e-9);
    }

    #[test]
    fn fspl_distance_decade_adds_20db() {
        assert_abs_diff_eq!(
            fspl_db(10.0, 300e9).unwrap(),
            101.99020831627662,
            epsilon = 1e-9
        );
        let d1 = fspl_db(1.0, 300e9).unwrap();
        let d10 = fspl_db(10.0, 300e9).unwrap();
        assert_abs_diff_eq!(d10 - d1, 20.0, epsilon = 1e-9);
    }

    #[test]
    fn fspl_rejects_nonpositive() {
        assert!(fspl_db(0.0, 300e9).is_err());
        assert!(fspl_db(1.0, -1.0).is_err());
    }

    #[test]
    fn friis_reference_budget() {
        let result = friis_received_power(&reference_budget(), 40e9).unwrap();
        assert_abs_diff_eq!(result.received_power_dbm, -41.99020831627662, epsilon = 1e-9);
        assert_abs_diff_eq!(result.path_loss_db, 81.99020831627662, epsilon = 1e-9);
        // log-domain identity of the Friis equation
        let b = reference_budget();
        assert_abs_diff_eq!(
            result.received_power_dbm,
            b.tx_power_dbm + b.tx_gain_dbi + b.rx_gain_dbi - result.path_loss_db,
            epsilon = 1e-9
        );
    }

    #[test]
    fn friis_unity_path_term() {
        // with 0 dBi gains and d = c/(4*pi*f) the spreading term is 1
        let f = 300e9;
        let d = SPEED_OF_LIGHT / (4.0 * std::f64::consts::PI * f);
        let budget = LinkBudget::new(0.0, 0.0, 0.0, d, f).unwrap();
        let result = friis_received_power(&budget, 40e9).unwrap();
        assert_abs_diff_eq!(result.received_power_dbm, budget.tx_power_dbm, epsilon = 1e-9);
    }

    #[test]
    fn friis_distance_doubling() {
        let near = friis_received_power(&reference_budget(), 40e9).unwrap();
        let mut far_budget = reference_budget();
        far_budget.distance_m = 2.0;
        let far = friis_received_power(&far_budget, 40e9).unwrap();
        assert_abs_diff_eq!(
            near.received_power_dbm - far.received_power_dbm,
            6.020599913279624,
            epsilon = 1e-9
        );
    }

    #[test]
    fn noise_reference_points() {
        // k*290*4e10 = 1.60155284e-10 W
        assert_abs_diff_eq!(
            noise_power_dbm(40e9, 290.0, 0.0).unwrap(),
            -67.95458728094847,
            epsilon = 1e-9
        );
        // the per-Hz thermal floor
        assert_abs_diff_eq!(
            noise_power_dbm(1.0, 290.0, 0.0).unwrap(),
            -173.9751871942281,
            epsilon = 1e-9
        );
        // noise figure is additive
        let base = noise_power_dbm(40e9, 290.0, 0.0).unwrap();
        let with_nf = noise_power_dbm(40e9, 290.0, 10.0).unwrap();
        assert_abs_diff_eq!(with_nf - base, 10.0, epsilon = 1e-12);
    }

    #[test]
    fn snr_reference_chain() {
        let result = friis_received_power(&reference_budget(), 40e9).unwrap();
        assert_abs_diff_eq!(result.snr_db, 25.96437896467186, epsilon = 1e-9);
        assert_eq!(snr_from_link(-5.0, -5.0).unwrap(), 0.0);
        // back-solved noise level that reproduces a 20 dB operating SNR
        assert_abs_diff_eq!(snr_from_link(-41.99, -61.99).unwrap(), 20.0, epsilon = 1e-12);
    }

    #[test]
    fn budget_validation() {
        assert!(LinkBudget::new(0.0, 20.0, 20.0, 0.0, 300e9).is_err());
        assert!(LinkBudget::new(0.0, 20.0, 20.0, 1.0, 0.0).is_err());
        assert!(LinkBudget::new(f64::NAN, 20.0, 20.0, 1.0, 300e9).is_err());
        let mut b = reference_budget();
        b.noise_figure_db = -1.0;
        assert!(b.validated().is_err());
        let mut b = reference_budget();
        b.noise_temperature_k = 0.0;
        assert!(b.validated().is_err());
    }
}
