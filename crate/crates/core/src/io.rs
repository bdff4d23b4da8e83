//! Scenario/table file ingestion and deterministic output formatting.
//!
//! The scenario file is a JSON document with top-level keys `tx: [x, y]`,
//! `rx: [x, y]`, `reflectors: [{a, b, refractive_index, roughness_sigma_m,
//! label}]`, `temperature_k` and `pressure_pa`; all lengths are meters.
//! `reflectors` defaults to empty and the atmosphere keys default to
//! 293.15 K / 101325 Pa. Refractive indices in files must be finite (the
//! programmatic perfect-mirror idealization has no JSON representation).

use std::fs::File;
use std::io::BufReader;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::atmosphere::{AtmosphereState, AttenuationTable};
use crate::channel::{Material, Point2, Reflector, Scenario};
use crate::error::{Error, Result};

#[derive(Debug, Serialize, Deserialize)]
struct ScenarioFile {
    tx: [f64; 2],
    rx: [f64; 2],
    #[serde(default)]
    reflectors: Vec<ReflectorFile>,
    #[serde(default = "default_temperature")]
    temperature_k: f64,
    #[serde(default = "default_pressure")]
    pressure_pa: f64,
}

#[derive(Debug, Serialize, Deserialize)]
struct ReflectorFile {
    a: [f64; 2],
    b: [f64; 2],
    refractive_index: f64,
    roughness_sigma_m: f64,
    #[serde(default)]
    label: String,
}

fn default_temperature() -> f64 {
    AtmosphereState::STANDARD.temperature_k
}

fn default_pressure() -> f64 {
    AtmosphereState::STANDARD.pressure_pa
}

/// Parses a scenario from JSON text.
pub fn scenario_from_json(text: &str) -> Result<Scenario> {
    let file: ScenarioFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    let atmosphere = AtmosphereState::new(file.temperature_k, file.pressure_pa)
        .map_err(|e| Error::Validation(e.to_string()))?;
    let mut reflectors = Vec::with_capacity(file.reflectors.len());
    for (i, r) in file.reflectors.iter().enumerate() {
        if !r.refractive_index.is_finite() {
            return Err(Error::Validation(format!(
                "reflector {i}: refractive_index must be finite in scenario files"
            )));
        }
        let material = Material::new(r.refractive_index, r.roughness_sigma_m, r.label.clone())
            .map_err(|e| Error::Validation(format!("reflector {i}: {e}")))?;
        let reflector = Reflector::new(
            Point2::new(r.a[0], r.a[1]),
            Point2::new(r.b[0], r.b[1]),
            material,
        )
        .map_err(|e| Error::Validation(format!("reflector {i}: {e}")))?;
        reflectors.push(reflector);
    }
    Scenario::new(
        Point2::new(file.tx[0], file.tx[1]),
        Point2::new(file.rx[0], file.rx[1]),
        reflectors,
        atmosphere,
    )
}

/// Loads and validates a scenario JSON file.
pub fn load_scenario(path: impl AsRef<Path>) -> Result<Scenario> {
    let text = std::fs::read_to_string(path)?;
    scenario_from_json(&text)
}

/// Serializes a scenario to the JSON scenario format (pretty-printed,
/// trailing newline).
pub fn write_scenario(scenario: &Scenario) -> String {
    let file = ScenarioFile {
        tx: [scenario.tx.x, scenario.tx.y],
        rx: [scenario.rx.x, scenario.rx.y],
        reflectors: scenario
            .reflectors
            .iter()
            .map(|r| ReflectorFile {
                a: [r.endpoint_a.x, r.endpoint_a.y],
                b: [r.endpoint_b.x, r.endpoint_b.y],
                refractive_index: r.material.refractive_index,
                roughness_sigma_m: r.material.roughness_sigma_m,
                label: r.material.label.clone(),
            })
            .collect(),
        temperature_k: scenario.atmosphere.temperature_k,
        pressure_pa: scenario.atmosphere.pressure_pa,
    };
    let mut text = serde_json::to_string_pretty(&file).expect("scenario serialization");
    text.push('\n');
    text
}

/// Saves a scenario to a JSON file.
pub fn save_scenario(scenario: &Scenario, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, write_scenario(scenario))?;
    Ok(())
}

/// Loads an attenuation CSV file; the file path becomes the table's
/// source label.
pub fn load_attenuation_table(path: impl AsRef<Path>) -> Result<AttenuationTable> {
    let path = path.as_ref();
    let file = File::open(path)?;
    AttenuationTable::from_csv(BufReader::new(file), path.display().to_string())
}

/// Formats a number with 9 significant digits, using scientific notation
/// when the magnitude falls outside `[1e-3, 1e6)`. Zero formats as `0`.
/// This is the serialization used for every numeric field in emitted
/// result files, keeping outputs byte-reproducible.
pub fn format_sig9(value: f64) -> String {
    if value == 0.0 {
        return "0".to_string();
    }
    if !value.is_finite() {
        return value.to_string();
    }
    let magnitude = value.abs();
    if (1e-3..1e6).contains(&magnitude) {
        let exponent = magnitude.log10().floor() as i32;
        let decimals = (8 - exponent).max(0) as usize;
        format!("{value:.decimals$}")
    } else {
        format!("{value:.8e}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channel::PathKind;

    const WALL_SCENARIO: &str = r#"{
        "tx": [0.0, 0.0],
        "rx": [2.0, 0.0],
        "reflectors": [
            {"a": [-5.0, 1.0], "b": [5.0, 1.0],
             "refractive_index": 2.0, "roughness_sigma_m": 5e-5, "label": "wall"}
        ],
        "temperature_k": 293.15,
        "pressure_pa": 101325.0
    }"#;

    #[test]
    fn minimal_scenario_is_los_only() {
        let scenario = scenario_from_json(r#"{"tx": [0, 0], "rx": [1, 0]}"#).unwrap();
        assert!(scenario.reflectors.is_empty());
        assert_eq!(scenario.atmosphere, AtmosphereState::STANDARD);
        let paths = crate::channel::trace_specular_paths(&scenario);
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0].kind, PathKind::Los);
    }

    #[test]
    fn wall_scenario_produces_two_paths() {
        let scenario = scenario_from_json(WALL_SCENARIO).unwrap();
        assert_eq!(crate::channel::trace_specular_paths(&scenario).len(), 2);
    }

    #[test]
    fn coincident_terminals_rejected() {
        let err = scenario_from_json(r#"{"tx": [1, 2], "rx": [1, 2]}"#).unwrap_err();
        assert!(err.to_string().contains("tx and rx coincide"));
    }

    #[test]
    fn malformed_json_reports_line() {
        let err = scenario_from_json("{\n  \"tx\": [0, 0],\n  nope\n}").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn scenario_round_trip() {
        let scenario = scenario_from_json(WALL_SCENARIO).unwrap();
        let text = write_scenario(&scenario);
        let reloaded = scenario_from_json(&text).unwrap();
        assert_eq!(scenario, reloaded);
    }

    #[test]
    fn format_sig9_plain_range() {
        assert_eq!(format_sig9(81.99020831627662), "81.9902083");
        assert_eq!(format_sig9(-41.99020831627662), "-41.9902083");
        assert_eq!(format_sig9(1.0), "1.00000000");
        assert_eq!(format_sig9(0.0015), "0.00150000000");
        assert_eq!(format_sig9(999999.0), "999999.000");
        assert_eq!(format_sig9(0.0), "0");
    }

    #[test]
    fn format_sig9_scientific_range() {
        assert_eq!(format_sig9(2.6632845931007178e11), "2.66328459e11");
        assert_eq!(format_sig9(7.952241932061571e-5), "7.95224193e-5");
        assert_eq!(format_sig9(-6.324118513762194e-8), "-6.32411851e-8");
        assert_eq!(format_sig9(1e6), "1.00000000e6");
    }
}
