//! Deterministic LOS and first-order specular NLOS channel model.
//!
//! Geometry is 2D: a transmitter, a receiver and a set of line-segment
//! reflectors. For each reflector the image method yields at most one
//! single-bounce specular path (the transmitter is mirrored across the
//! reflector's line and the image-receiver segment is intersected with the
//! reflector segment). Per-path transfer magnitudes combine spherical
//! spreading, molecular absorption and, for reflected paths, a Fresnel
//! coefficient attenuated by the Kirchhoff/Rayleigh roughness factor.
//!
//! Conventions, documented as configuration points of the model:
//! - TE polarization for the Fresnel coefficient; materials are lossless
//!   dielectrics with a real refractive index.
//! - Reflectors never occlude the LOS or other paths.
//! - Incidence angles are measured from the surface normal.

use serde::{Deserialize, Serialize};

use crate::atmosphere::{amplitude_transmittance, AtmosphereState, AttenuationTable};
use crate::error::{Error, Result};
use crate::units::SPEED_OF_LIGHT;

/// A point (or displacement) in the 2D scene plane, meters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    pub fn dot(self, other: Point2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn distance(self, other: Point2) -> f64 {
        (self - other).norm()
    }

    fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl std::ops::Add for Point2 {
    type Output = Point2;

    fn add(self, other: Point2) -> Point2 {
        Point2::new(self.x + other.x, self.y + other.y)
    }
}

impl std::ops::Sub for Point2 {
    type Output = Point2;

    fn sub(self, other: Point2) -> Point2 {
        Point2::new(self.x - other.x, self.y - other.y)
    }
}

impl std::ops::Mul<f64> for Point2 {
    type Output = Point2;

    fn mul(self, k: f64) -> Point2 {
        Point2::new(self.x * k, self.y * k)
    }
}

/// Surface properties of a reflector.
///
/// `refractive_index` may be `f64::INFINITY`, which the Fresnel coefficient
/// treats exactly as the perfect-mirror limit (|reflection| = 1). That is
/// the idealization used when isolating spreading and absorption effects.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Material {
    pub refractive_index: f64,
    /// RMS surface height deviation, meters.
    pub roughness_sigma_m: f64,
    pub label: String,
}

impl Material {
    pub fn new(refractive_index: f64, roughness_sigma_m: f64, label: impl Into<String>) -> Result<Self> {
        if refractive_index.is_nan() || refractive_index <= 1.0 {
            return Err(Error::invalid(format!(
                "refractive index must exceed 1, got {refractive_index}"
            )));
        }
        if !roughness_sigma_m.is_finite() || roughness_sigma_m < 0.0 {
            return Err(Error::invalid(format!(
                "roughness sigma must be finite and non-negative, got {roughness_sigma_m} m"
            )));
        }
        Ok(Material {
            refractive_index,
            roughness_sigma_m,
            label: label.into(),
        })
    }

    /// Idealized smooth perfect mirror (infinite index contrast).
    pub fn perfect_mirror() -> Self {
        Material {
            refractive_index: f64::INFINITY,
            roughness_sigma_m: 0.0,
            label: "perfect mirror".to_string(),
        }
    }
}

/// A finite line-segment reflector in the scene.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Reflector {
    pub endpoint_a: Point2,
    pub endpoint_b: Point2,
    pub material: Material,
}

impl Reflector {
    pub fn new(endpoint_a: Point2, endpoint_b: Point2, material: Material) -> Result<Self> {
        if !endpoint_a.is_finite() || !endpoint_b.is_finite() {
            return Err(Error::invalid("reflector endpoints must be finite".to_string()));
        }
        if endpoint_a == endpoint_b {
            return Err(Error::invalid(format!(
                "reflector endpoints coincide at ({}, {})",
                endpoint_a.x, endpoint_a.y
            )));
        }
        Ok(Reflector {
            endpoint_a,
            endpoint_b,
            material,
        })
    }
}

/// Transmitter/receiver placement, reflectors and atmosphere of one scene.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scenario {
    pub tx: Point2,
    pub rx: Point2,
    pub reflectors: Vec<Reflector>,
    pub atmosphere: AtmosphereState,
}

impl Scenario {
    pub fn new(
        tx: Point2,
        rx: Point2,
        reflectors: Vec<Reflector>,
        atmosphere: AtmosphereState,
    ) -> Result<Self> {
        if !tx.is_finite() || !rx.is_finite() {
            return Err(Error::Validation("tx and rx must be finite points".to_string()));
        }
        if tx == rx {
            return Err(Error::Validation("tx and rx coincide".to_string()));
        }
        Ok(Scenario {
            tx,
            rx,
            reflectors,
            atmosphere,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PathKind {
    Los,
    Nlos,
}

/// One resolved propagation path.
///
/// For LOS paths `leg1_m` is the full tx-rx distance and `leg2_m` is zero;
/// for NLOS paths the legs are tx-to-reflection-point and
/// reflection-point-to-rx, with the incidence angle measured from the
/// surface normal.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RayPath {
    pub kind: PathKind,
    pub leg1_m: f64,
    pub leg2_m: f64,
    pub incidence_angle_rad: Option<f64>,
    pub reflector_index: Option<usize>,
}

impl RayPath {
    pub fn total_length_m(&self) -> f64 {
        self.leg1_m + self.leg2_m
    }
}

/// How per-path magnitudes are combined into one channel magnitude.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CombinationMode {
    /// `sqrt(sum |H_i|^2)` - the default; phases are ignored.
    PowerSum,
    /// `|sum H_i * exp(-j*2*pi*f*L_i/c)|` with `L_i` the total path length.
    Coherent,
}

/// Per-path and combined transfer magnitudes at one frequency.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChannelResponse {
    pub frequency_hz: f64,
    pub per_path: Vec<(RayPath, f64)>,
    pub combined_magnitude: f64,
    pub combination_mode: CombinationMode,
    /// Results metadata, e.g. an atmosphere/reference-state mismatch.
    pub warnings: Vec<String>,
}

/// Spherical spreading amplitude `c/(4*pi*f*r)`.
pub fn h_spread(frequency_hz: f64, path_length_m: f64) -> Result<f64> {
    if !frequency_hz.is_finite() || frequency_hz <= 0.0 {
        return Err(Error::invalid(format!(
            "frequency must be finite and positive, got {frequency_hz} Hz"
        )));
    }
    if !path_length_m.is_finite() || path_length_m <= 0.0 {
        return Err(Error::invalid(format!(
            "path length must be finite and positive, got {path_length_m} m"
        )));
    }
    Ok(SPEED_OF_LIGHT / (4.0 * std::f64::consts::PI * frequency_hz * path_length_m))
}

/// Signed TE-polarization Fresnel amplitude coefficient at a dielectric
/// interface: `(cos(t) - sqrt(n^2 - sin^2(t))) / (cos(t) + sqrt(n^2 - sin^2(t)))`.
///
/// An infinite refractive index returns the perfect-mirror limit -1.
pub fn fresnel_reflection(material: &Material, incidence_angle_rad: f64) -> Result<f64> {
    check_incidence(incidence_angle_rad)?;
    if material.refractive_index.is_nan() || material.refractive_index <= 1.0 {
        return Err(Error::invalid(format!(
            "refractive index must exceed 1, got {}",
            material.refractive_index
        )));
    }
    if material.refractive_index.is_infinite() {
        return Ok(-1.0);
    }
    let n = material.refractive_index;
    let cos_t = incidence_angle_rad.cos();
    let sin_t = incidence_angle_rad.sin();
    let root = (n * n - sin_t * sin_t).sqrt();
    Ok((cos_t - root) / (cos_t + root))
}

/// Rayleigh roughness attenuation of the coherent specular component,
/// `exp(-g/2)` with `g = (4*pi*sigma*f*cos(t)/c)^2`, for Gaussian surface
/// height with RMS deviation sigma.
pub fn rough_scatter_factor(
    material: &Material,
    frequency_hz: f64,
    incidence_angle_rad: f64,
) -> Result<f64> {
    if !frequency_hz.is_finite() || frequency_hz <= 0.0 {
        return Err(Error::invalid(format!(
            "frequency must be finite and positive, got {frequency_hz} Hz"
        )));
    }
    check_incidence(incidence_angle_rad)?;
    if !material.roughness_sigma_m.is_finite() || material.roughness_sigma_m < 0.0 {
        return Err(Error::invalid(format!(
            "roughness sigma must be finite and non-negative, got {} m",
            material.roughness_sigma_m
        )));
    }
    let g = 4.0 * std::f64::consts::PI * material.roughness_sigma_m * frequency_hz
        * incidence_angle_rad.cos()
        / SPEED_OF_LIGHT;
    Ok((-g * g / 2.0).exp())
}

/// Amplitude reflection coefficient of a rough dielectric surface in the
/// specular direction: `|Fresnel| * roughness factor`, in [0, 1].
pub fn reflection_coefficient(
    material: &Material,
    frequency_hz: f64,
    incidence_angle_rad: f64,
) -> Result<f64> {
    let fresnel = fresnel_reflection(material, incidence_angle_rad)?;
    let rough = rough_scatter_factor(material, frequency_hz, incidence_angle_rad)?;
    Ok(fresnel.abs() * rough)
}

/// LOS transfer magnitude: spreading times amplitude transmittance over the
/// direct tx-rx distance.
pub fn los_response(
    scenario: &Scenario,
    table: &AttenuationTable,
    frequency_hz: f64,
) -> Result<(RayPath, f64)> {
    let r = scenario.tx.distance(scenario.rx);
    let alpha = table.absorption_coefficient(frequency_hz, &scenario.atmosphere)?;
    let magnitude = h_spread(frequency_hz, r)? * amplitude_transmittance(alpha, r)?;
    let path = RayPath {
        kind: PathKind::Los,
        leg1_m: r,
        leg2_m: 0.0,
        incidence_angle_rad: None,
        reflector_index: None,
    };
    Ok((path, magnitude))
}

/// NLOS transfer magnitude for a path produced by [`trace_specular_paths`]:
/// reflection coefficient times spreading and transmittance over the
/// unfolded length `leg1 + leg2`.
pub fn nlos_response(
    scenario: &Scenario,
    table: &AttenuationTable,
    path: &RayPath,
    frequency_hz: f64,
) -> Result<f64> {
    if path.kind != PathKind::Nlos {
        return Err(Error::invalid("nlos_response requires an NLOS path".to_string()));
    }
    let index = path
        .reflector_index
        .ok_or_else(|| Error::invalid("NLOS path carries no reflector index".to_string()))?;
    let reflector = scenario
        .reflectors
        .get(index)
        .ok_or_else(|| Error::invalid(format!("reflector index {index} out of bounds")))?;
    let angle = path
        .incidence_angle_rad
        .ok_or_else(|| Error::invalid("NLOS path carries no incidence angle".to_string()))?;

    let total = path.total_length_m();
    let alpha = table.absorption_coefficient(frequency_hz, &scenario.atmosphere)?;
    Ok(reflection_coefficient(&reflector.material, frequency_hz, angle)?
        * h_spread(frequency_hz, total)?
        * amplitude_transmittance(alpha, total)?)
}

/// Resolves all propagation paths of a scenario: the LOS path first, then
/// at most one first-order specular path per reflector in index order.
///
/// The specular point is found by the image method: the transmitter is
/// mirrored across the reflector's supporting line and the image-receiver
/// segment is intersected with the reflector segment. A path exists only if
/// the intersection lies strictly inside the segment; a terminal lying
/// exactly on the reflector's line yields no path for that reflector.
pub fn trace_specular_paths(scenario: &Scenario) -> Vec<RayPath> {
    let mut paths = vec![RayPath {
        kind: PathKind::Los,
        leg1_m: scenario.tx.distance(scenario.rx),
        leg2_m: 0.0,
        incidence_angle_rad: None,
        reflector_index: None,
    }];
    for (index, reflector) in scenario.reflectors.iter().enumerate() {
        if let Some(path) = specular_path(scenario.tx, scenario.rx, reflector, index) {
            paths.push(path);
        }
    }
    paths
}

/// Image-method specular reflection point of `reflector` for the given
/// terminals, or `None` when no single-bounce path exists: a terminal on
/// the reflector's line, terminals on opposite sides, or the mirror
/// intersection falling outside the open segment.
pub fn specular_point(tx: Point2, rx: Point2, reflector: &Reflector) -> Option<Point2> {
    let a = reflector.endpoint_a;
    let along = reflector.endpoint_b - a;
    let length = along.norm();
    let tangent = along * (1.0 / length);
    let normal = Point2::new(-tangent.y, tangent.x);

    // Signed distances of the terminals from the reflector's line.
    let d_tx = (tx - a).dot(normal);
    let d_rx = (rx - a).dot(normal);
    if d_tx == 0.0 || d_rx == 0.0 || (d_tx > 0.0) != (d_rx > 0.0) {
        return None;
    }

    // Mirror tx across the line; the image-rx segment crosses the line at
    // the specular point.
    let image = tx - normal * (2.0 * d_tx);
    let t = d_tx / (d_tx + d_rx);
    let point = image + (rx - image) * t;

    // Strictly inside the segment, endpoints excluded.
    let s = (point - a).dot(tangent);
    if s <= 0.0 || s >= length {
        return None;
    }
    Some(point)
}

fn specular_path(tx: Point2, rx: Point2, reflector: &Reflector, index: usize) -> Option<RayPath> {
    let point = specular_point(tx, rx, reflector)?;
    let a = reflector.endpoint_a;
    let along = reflector.endpoint_b - a;
    let tangent = along * (1.0 / along.norm());
    let normal = Point2::new(-tangent.y, tangent.x);

    let leg1 = tx.distance(point);
    let leg2 = rx.distance(point);
    let cos_theta = ((tx - a).dot(normal).abs() / leg1).clamp(0.0, 1.0);
    Some(RayPath {
        kind: PathKind::Nlos,
        leg1_m: leg1,
        leg2_m: leg2,
        incidence_angle_rad: Some(cos_theta.acos()),
        reflector_index: Some(index),
    })
}

/// Evaluates every path of the scenario at one frequency and combines the
/// magnitudes per `mode` (see [`CombinationMode`]).
pub fn total_response(
    scenario: &Scenario,
    table: &AttenuationTable,
    frequency_hz: f64,
    mode: CombinationMode,
) -> Result<ChannelResponse> {
    let mut per_path = Vec::new();
    for path in trace_specular_paths(scenario) {
        let magnitude = match path.kind {
            PathKind::Los => los_response(scenario, table, frequency_hz)?.1,
            PathKind::Nlos => nlos_response(scenario, table, &path, frequency_hz)?,
        };
        per_path.push((path, magnitude));
    }

    let combined_magnitude = match mode {
        CombinationMode::PowerSum => per_path
            .iter()
            .map(|(_, m)| m * m)
            .sum::<f64>()
            .sqrt(),
        CombinationMode::Coherent => {
            let mut re = 0.0;
            let mut im = 0.0;
            for (path, magnitude) in &per_path {
                let phase = -2.0 * std::f64::consts::PI * frequency_hz * path.total_length_m()
                    / SPEED_OF_LIGHT;
                re += magnitude * phase.cos();
                im += magnitude * phase.sin();
            }
            (re * re + im * im).sqrt()
        }
    };

    let warnings = table
        .state_warning(&scenario.atmosphere)
        .into_iter()
        .collect();
    Ok(ChannelResponse {
        frequency_hz,
        per_path,
        combined_magnitude,
        combination_mode: mode,
        warnings,
    })
}

fn check_incidence(angle_rad: f64) -> Result<()> {
    if !angle_rad.is_finite() || !(0.0..std::f64::consts::FRAC_PI_2).contains(&angle_rad) {
        return Err(Error::invalid(format!(
            "incidence angle must lie in [0, pi/2), got {angle_rad} rad"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atmosphere::AtmosphereState;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    pub(crate) fn zero_attenuation_table() -> AttenuationTable {
        AttenuationTable::new(
            vec![(1e9, 0.0), (1000e9, 0.0)],
            AtmosphereState::STANDARD,
            "zero",
        )
        .unwrap()
    }

    fn wall_material() -> Material {
        Material::new(2.0, 50e-6, "wall").unwrap()
    }

    /// tx (0,0), rx (2,0), reflector y = 1 spanning x in [-5, 5].
    pub(crate) fn wall_scenario() -> Scenario {
        Scenario::new(
            Point2::new(0.0, 0.0),
            Point2::new(2.0, 0.0),
            vec![Reflector::new(
                Point2::new(-5.0, 1.0),
                Point2::new(5.0, 1.0),
                wall_material(),
            )
            .unwrap()],
            AtmosphereState::STANDARD,
        )
        .unwrap()
    }

    #[test]
    fn h_spread_reference_point() {
        // c / (4*pi*3e11)
        assert_relative_eq!(
            h_spread(300e9, 1.0).unwrap(),
            7.952241932061571e-5,
            max_relative = 1e-12
        );
        // 1/r law
        let one = h_spread(300e9, 1.0).unwrap();
        let two = h_spread(300e9, 2.0).unwrap();
        assert_relative_eq!(one / two, 2.0, max_relative = 1e-12);
    }

    #[test]
    fn h_spread_matches_fspl() {
        let h = h_spread(300e9, 1.0).unwrap();
        let fspl = crate::link_budget::fspl_db(1.0, 300e9).unwrap();
        assert_abs_diff_eq!(-20.0 * h.log10(), fspl, epsilon = 1e-9);
    }

    #[test]
    fn trace_wall_example() {
        let paths = trace_specular_paths(&wall_scenario());
        assert_eq!(paths.len(), 2);
        assert_eq!(paths[0].kind, PathKind::Los);
        assert_abs_diff_eq!(paths[0].leg1_m, 2.0, epsilon = 1e-12);

        let nlos = &paths[1];
        assert_eq!(nlos.kind, PathKind::Nlos);
        assert_eq!(nlos.reflector_index, Some(0));
        let sqrt2 = std::f64::consts::SQRT_2;
        assert_abs_diff_eq!(nlos.leg1_m, sqrt2, epsilon = 1e-12);
        assert_abs_diff_eq!(nlos.leg2_m, sqrt2, epsilon = 1e-12);
        assert_abs_diff_eq!(
            nlos.incidence_angle_rad.unwrap(),
            std::f64::consts::FRAC_PI_4,
            epsilon = 1e-12
        );
    }

    #[test]
    fn trace_specular_point_outside_segment() {
        let mut scenario = wall_scenario();
        // move the wall so the would-be specular point (1, 1) falls outside
        scenario.reflectors[0].endpoint_a = Point2::new(3.0, 1.0);
        scenario.reflectors[0].endpoint_b = Point2::new(5.0, 1.0);
        assert_eq!(trace_specular_paths(&scenario).len(), 1);
    }

    #[test]
    fn trace_terminal_on_reflector_line() {
        let mut scenario = wall_scenario();
        scenario.tx = Point2::new(0.0, 1.0); // on the wall's line
        scenario.rx = Point2::new(2.0, 0.0);
        assert_eq!(trace_specular_paths(&scenario).len(), 1);
    }

    #[test]
    fn trace_terminals_on_opposite_sides() {
        let mut scenario = wall_scenario();
        scenario.rx = Point2::new(2.0, 3.0); // above the wall, tx below
        assert_eq!(trace_specular_paths(&scenario).len(), 1);
    }

    #[test]
    fn trace_no_reflectors_is_los_only() {
        let scenario = Scenario::new(
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            vec![],
            AtmosphereState::STANDARD,
        )
        .unwrap();
        let paths = trace_specular_paths(&scenario);
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0].kind, PathKind::Los);
    }

    #[test]
    fn fresnel_reference_points() {
        let material = wall_material();
        // normal incidence closed form (1-n)/(1+n)
        assert_relative_eq!(
            fresnel_reflection(&material, 0.0).unwrap(),
            -1.0 / 3.0,
            max_relative = 1e-12
        );
        // 45 degrees, n = 2
        assert_relative_eq!(
            fresnel_reflection(&material, std::f64::consts::FRAC_PI_4).unwrap(),
            -0.45141622964513645,
            max_relative = 1e-12
        );
        // grazing limit
        let grazing = fresnel_reflection(&material, std::f64::consts::FRAC_PI_2 - 1e-9).unwrap();
        assert_abs_diff_eq!(grazing.abs(), 1.0, epsilon = 1e-6);
        // vanishing contrast
        let faint = Material::new(1.0 + 1e-12, 0.0, "air").unwrap();
        assert_abs_diff_eq!(fresnel_reflection(&faint, 0.3).unwrap(), 0.0, epsilon = 1e-9);
        // perfect-mirror limit handled exactly
        assert_eq!(
            fresnel_reflection(&Material::perfect_mirror(), 0.7).unwrap(),
            -1.0
        );
    }

    #[test]
    fn rough_factor_reference_points() {
        let smooth = Material::new(2.0, 0.0, "smooth").unwrap();
        assert_eq!(rough_scatter_factor(&smooth, 300e9, 0.5).unwrap(), 1.0);
        // sigma 50 um, 300 GHz, 45 degrees: g = 0.197665, exp(-g/2)
        assert_relative_eq!(
            rough_scatter_factor(&wall_material(), 300e9, std::f64::consts::FRAC_PI_4).unwrap(),
            0.9058942124915365,
            max_relative = 1e-12
        );
        // decreasing in frequency for sigma > 0
        let lo = rough_scatter_factor(&wall_material(), 100e9, 0.4).unwrap();
        let hi = rough_scatter_factor(&wall_material(), 500e9, 0.4).unwrap();
        assert!(hi < lo);
    }

    #[test]
    fn reflection_coefficient_reference_points() {
        let smooth = Material::new(2.0, 0.0, "smooth").unwrap();
        assert_relative_eq!(
            reflection_coefficient(&smooth, 300e9, 0.0).unwrap(),
            1.0 / 3.0,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            reflection_coefficient(&wall_material(), 300e9, std::f64::consts::FRAC_PI_4).unwrap(),
            0.40893534986027946,
            max_relative = 1e-12
        );
    }

    #[test]
    fn los_response_zero_attenuation() {
        let scenario = Scenario::new(
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            vec![],
            AtmosphereState::STANDARD,
        )
        .unwrap();
        let (path, magnitude) = los_response(&scenario, &zero_attenuation_table(), 300e9).unwrap();
        assert_eq!(path.kind, PathKind::Los);
        assert_relative_eq!(magnitude, 7.952241932061571e-5, max_relative = 1e-12);
    }

    #[test]
    fn los_response_with_absorption() {
        // 10 dB/km at every frequency, 1 km path
        let table = AttenuationTable::new(
            vec![(1e9, 10.0), (1000e9, 10.0)],
            AtmosphereState::STANDARD,
            "flat10",
        )
        .unwrap();
        let scenario = Scenario::new(
            Point2::new(0.0, 0.0),
            Point2::new(1000.0, 0.0),
            vec![],
            AtmosphereState::STANDARD,
        )
        .unwrap();
        let (_, magnitude) = los_response(&scenario, &table, 300e9).unwrap();
        let expected = h_spread(300e9, 1000.0).unwrap() * 0.31622776601683794;
        assert_relative_eq!(magnitude, expected, max_relative = 1e-12);
    }

    #[test]
    fn nlos_response_wall_example() {
        let scenario = wall_scenario();
        let table = zero_attenuation_table();
        let paths = trace_specular_paths(&scenario);
        let magnitude = nlos_response(&scenario, &table, &paths[1], 300e9).unwrap();
        // reflection 0.408935 times c/(4*pi*3e11*2*sqrt(2))
        assert_relative_eq!(magnitude, 1.1497389514509758e-5, max_relative = 1e-12);
    }

    #[test]
    fn nlos_mirror_reduces_to_unfolded_los() {
        let mut scenario = wall_scenario();
        scenario.reflectors[0].material = Material::perfect_mirror();
        let table = zero_attenuation_table();
        let paths = trace_specular_paths(&scenario);
        let magnitude = nlos_response(&scenario, &table, &paths[1], 300e9).unwrap();
        let unfolded = h_spread(300e9, paths[1].total_length_m()).unwrap();
        assert_relative_eq!(magnitude, unfolded, max_relative = 1e-12);
    }

    #[test]
    fn total_response_power_sum() {
        let scenario = wall_scenario();
        let table = zero_attenuation_table();
        let response =
            total_response(&scenario, &table, 300e9, CombinationMode::PowerSum).unwrap();
        assert_eq!(response.per_path.len(), 2);
        // LOS over 2 m plus the reflected path, combined independently
        assert_relative_eq!(response.per_path[0].1, 3.9761209660307854e-5, max_relative = 1e-12);
        assert_relative_eq!(response.per_path[1].1, 1.1497389514509758e-5, max_relative = 1e-12);
        assert_relative_eq!(
            response.combined_magnitude,
            4.139014084657501e-5,
            max_relative = 1e-12
        );
        // power-sum identity
        let sum_sq: f64 = response.per_path.iter().map(|(_, m)| m * m).sum();
        assert_relative_eq!(
            response.combined_magnitude * response.combined_magnitude,
            sum_sq,
            max_relative = 1e-12
        );
        assert!(response.warnings.is_empty());
    }

    #[test]
    fn power_sum_of_reference_magnitudes() {
        // sqrt(a^2 + b^2) over the 1 m LOS and wall-reflection magnitudes
        let a: f64 = 7.952241932061571e-5;
        let b: f64 = 1.1497389514509758e-5;
        assert_relative_eq!(
            (a * a + b * b).sqrt(),
            8.034926969333444e-5,
            max_relative = 1e-12
        );
    }

    #[test]
    fn total_response_los_only_equal_in_both_modes() {
        let scenario = Scenario::new(
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            vec![],
            AtmosphereState::STANDARD,
        )
        .unwrap();
        let table = zero_attenuation_table();
        let power = total_response(&scenario, &table, 300e9, CombinationMode::PowerSum).unwrap();
        let coherent = total_response(&scenario, &table, 300e9, CombinationMode::Coherent).unwrap();
        assert_relative_eq!(
            power.combined_magnitude,
            coherent.combined_magnitude,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            power.combined_magnitude,
            7.952241932061571e-5,
            max_relative = 1e-12
        );
    }

    #[test]
    fn total_response_coherent_within_triangle_bounds() {
        let scenario = wall_scenario();
        let table = zero_attenuation_table();
        for f in [100e9, 220e9, 300e9, 415e9] {
            let response =
                total_response(&scenario, &table, f, CombinationMode::Coherent).unwrap();
            let magnitudes: Vec<f64> = response.per_path.iter().map(|(_, m)| *m).collect();
            let upper: f64 = magnitudes.iter().sum();
            let lower = (magnitudes[0] - magnitudes[1..].iter().sum::<f64>()).abs();
            assert!(response.combined_magnitude <= upper * (1.0 + 1e-12));
            assert!(response.combined_magnitude >= lower * (1.0 - 1e-12) - 1e-300);
        }
    }

    #[test]
    fn total_response_reports_state_mismatch() {
        let mut scenario = wall_scenario();
        scenario.atmosphere = AtmosphereState::new(350.0, 101_325.0).unwrap();
        let response = total_response(
            &scenario,
            &zero_attenuation_table(),
            300e9,
            CombinationMode::PowerSum,
        )
        .unwrap();
        assert_eq!(response.warnings.len(), 1);
        assert!(response.warnings[0].contains("not rescaled"));
    }

    #[test]
    fn scenario_rejects_coincident_terminals() {
        let err = Scenario::new(
            Point2::new(1.0, 1.0),
            Point2::new(1.0, 1.0),
            vec![],
            AtmosphereState::STANDARD,
        )
        .unwrap_err();
        assert!(err.to_string().contains("tx and rx coincide"));
    }

    #[test]
    fn material_validation() {
        assert!(Material::new(1.0, 0.0, "x").is_err());
        assert!(Material::new(0.5, 0.0, "x").is_err());
        assert!(Material::new(2.0, -1e-6, "x").is_err());
        assert!(Material::new(f64::INFINITY, 0.0, "x").is_ok());
    }
}
