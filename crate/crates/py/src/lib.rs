//! Python bindings for the thzlink toolkit.
//!
//! Exposes the main types (attenuation tables, link budgets, scenarios,
//! ray paths) and operations (path loss, Friis received power, window
//! discovery, specular tracing, channel responses, Shannon capacity) as a
//! `thzlink_py` extension module. Library errors surface as `ValueError`
//! (bad arguments or malformed input) or `OSError` (filesystem).

use pyo3::exceptions::{PyIOError, PyValueError};
use pyo3::prelude::*;

use thzlink_core as core;
use thzlink_core::Error;

fn to_py_err(err: Error) -> PyErr {
    match err {
        Error::Io(e) => PyIOError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

trait ResultExt<T> {
    fn py(self) -> PyResult<T>;
}

impl<T> ResultExt<T> for core::Result<T> {
    fn py(self) -> PyResult<T> {
        self.map_err(to_py_err)
    }
}

// ---------------------------------------------------------------------------
// module-level functions
// ---------------------------------------------------------------------------

/// Linear power ratio of a dB value: 10^(db/10).
#[pyfunction]
fn db_to_linear(db: f64) -> PyResult<f64> {
    core::db_to_linear(db).py()
}

/// dB value of a linear power ratio: 10*log10(ratio).
#[pyfunction]
fn linear_to_db(ratio: f64) -> PyResult<f64> {
    core::linear_to_db(ratio).py()
}

/// Watts for a dBm power level.
#[pyfunction]
fn dbm_to_watts(dbm: f64) -> PyResult<f64> {
    core::dbm_to_watts(dbm).py()
}

/// dBm level of a power in watts.
#[pyfunction]
fn watts_to_dbm(watts: f64) -> PyResult<f64> {
    core::watts_to_dbm(watts).py()
}

/// Free-space wavelength in meters.
#[pyfunction]
fn wavelength(frequency_hz: f64) -> PyResult<f64> {
    core::wavelength(frequency_hz).py()
}

/// Free-space path loss in dB.
#[pyfunction]
fn fspl_db(distance_m: f64, frequency_hz: f64) -> PyResult<f64> {
    core::fspl_db(distance_m, frequency_hz).py()
}

/// Thermal noise power in dBm over a bandwidth.
#[pyfunction]
#[pyo3(signature = (bandwidth_hz, noise_temperature_k=290.0, noise_figure_db=0.0))]
fn noise_power_dbm(
    bandwidth_hz: f64,
    noise_temperature_k: f64,
    noise_figure_db: f64,
) -> PyResult<f64> {
    core::noise_power_dbm(bandwidth_hz, noise_temperature_k, noise_figure_db).py()
}

/// Link SNR in dB from received and noise powers in dBm.
#[pyfunction]
fn snr_from_link(received_power_dbm: f64, noise_power_dbm: f64) -> PyResult<f64> {
    core::snr_from_link(received_power_dbm, noise_power_dbm).py()
}

/// Spherical spreading amplitude c/(4*pi*f*r).
#[pyfunction]
fn h_spread(frequency_hz: f64, path_length_m: f64) -> PyResult<f64> {
    core::h_spread(frequency_hz, path_length_m).py()
}

/// Shannon capacity B*log2(1 + 10^(snr/10)) in bit/s.
#[pyfunction]
fn shannon_capacity(bandwidth_hz: f64, snr_db: f64) -> PyResult<f64> {
    core::shannon_capacity(bandwidth_hz, snr_db).py()
}

/// Amplitude transmittance exp(-alpha*r/2).
#[pyfunction]
fn amplitude_transmittance(alpha_per_m: f64, distance_m: f64) -> PyResult<f64> {
    core::amplitude_transmittance(alpha_per_m, distance_m).py()
}

/// Signed TE Fresnel amplitude coefficient of a material at an incidence
/// angle (radians from the surface normal).
#[pyfunction]
fn fresnel_reflection(material: &Material, incidence_angle_rad: f64) -> PyResult<f64> {
    core::fresnel_reflection(&material.inner, incidence_angle_rad).py()
}

/// Rayleigh roughness factor exp(-g/2) of the coherent specular component.
#[pyfunction]
fn rough_scatter_factor(
    material: &Material,
    frequency_hz: f64,
    incidence_angle_rad: f64,
) -> PyResult<f64> {
    core::rough_scatter_factor(&material.inner, frequency_hz, incidence_angle_rad).py()
}

/// |Fresnel| times the roughness factor, in [0, 1].
#[pyfunction]
fn reflection_coefficient(
    material: &Material,
    frequency_hz: f64,
    incidence_angle_rad: f64,
) -> PyResult<f64> {
    core::reflection_coefficient(&material.inner, frequency_hz, incidence_angle_rad).py()
}

/// (distance_m, frequency_hz, path_loss_db) rows over the grid,
/// distances outer, frequencies inner.
#[pyfunction]
fn path_loss_grid(grid: &SweepGrid) -> PyResult<Vec<(f64, f64, f64)>> {
    core::path_loss_grid(&grid.inner).py()
}

/// (distance_m, frequency_hz, capacity_bps) rows over the grid. Passing
/// an explicit `snr_db` fixes the SNR; `None` derives it per cell from
/// the budget.
#[pyfunction]
#[pyo3(signature = (budget, grid, bandwidth_hz, snr_db=None))]
fn capacity_sweep(
    budget: &LinkBudget,
    grid: &SweepGrid,
    bandwidth_hz: f64,
    snr_db: Option<f64>,
) -> PyResult<Vec<(f64, f64, f64)>> {
    let mode = match snr_db {
        Some(db) => core::SnrMode::Fixed(db),
        None => core::SnrMode::Derived,
    };
    core::capacity_sweep(&budget.inner, &grid.inner, bandwidth_hz, mode).py()
}

// ---------------------------------------------------------------------------
// classes
// ---------------------------------------------------------------------------

/// Bulk atmospheric conditions (temperature in K, pressure in Pa).
#[pyclass(frozen, from_py_object)]
#[derive(Clone)]
struct AtmosphereState {
    inner: core::AtmosphereState,
}

#[pymethods]
impl AtmosphereState {
    #[new]
    #[pyo3(signature = (temperature_k=293.15, pressure_pa=101325.0))]
    fn new(temperature_k: f64, pressure_pa: f64) -> PyResult<Self> {
        Ok(AtmosphereState {
            inner: core::AtmosphereState::new(temperature_k, pressure_pa).py()?,
        })
    }

    #[getter]
    fn temperature_k(&self) -> f64 {
        self.inner.temperature_k
    }

    #[getter]
    fn pressure_pa(&self) -> f64 {
        self.inner.pressure_pa
    }

    fn __repr__(&self) -> String {
        format!(
            "AtmosphereState(temperature_k={}, pressure_pa={})",
            self.inner.temperature_k, self.inner.pressure_pa
        )
    }
}

/// A low-attenuation frequency interval found by `AttenuationTable.find_windows`.
#[pyclass(frozen, from_py_object)]
#[derive(Clone)]
struct TransmissionWindow {
    inner: core::TransmissionWindow,
}

#[pymethods]
impl TransmissionWindow {
    #[getter]
    fn low_hz(&self) -> f64 {
        self.inner.low_hz
    }

    #[getter]
    fn high_hz(&self) -> f64 {
        self.inner.high_hz
    }

    #[getter]
    fn center_hz(&self) -> f64 {
        self.inner.center_hz
    }

    #[getter]
    fn min_attenuation_db_per_km(&self) -> f64 {
        self.inner.min_attenuation_db_per_km
    }

    fn contains(&self, frequency_hz: f64) -> bool {
        self.inner.contains(frequency_hz)
    }

    fn __repr__(&self) -> String {
        format!(
            "TransmissionWindow(low_hz={:.6e}, high_hz={:.6e}, center_hz={:.6e}, min_attenuation_db_per_km={})",
            self.inner.low_hz,
            self.inner.high_hz,
            self.inner.center_hz,
            self.inner.min_attenuation_db_per_km
        )
    }
}

/// Frequency vs. specific-attenuation table with linear interpolation.
#[pyclass(frozen)]
struct AttenuationTable {
    inner: core::AttenuationTable,
}

#[pymethods]
impl AttenuationTable {
    /// Loads the attenuation CSV format (header
    /// `frequency_ghz,attenuation_db_per_km`).
    #[staticmethod]
    fn load(path: &str) -> PyResult<Self> {
        Ok(AttenuationTable {
            inner: core::load_attenuation_table(path).py()?,
        })
    }

    /// Builds a table from (frequency_hz, attenuation_db_per_km) pairs.
    #[staticmethod]
    #[pyo3(signature = (samples, reference_state=None, source_label="python"))]
    fn from_samples(
        samples: Vec<(f64, f64)>,
        reference_state: Option<AtmosphereState>,
        source_label: &str,
    ) -> PyResult<Self> {
        let state = reference_state
            .map(|s| s.inner)
            .unwrap_or(core::AtmosphereState::STANDARD);
        Ok(AttenuationTable {
            inner: core::AttenuationTable::new(samples, state, source_label).py()?,
        })
    }

    /// Interpolated specific attenuation in dB/km.
    fn specific_attenuation(&self, frequency_hz: f64) -> PyResult<f64> {
        self.inner.specific_attenuation(frequency_hz).py()
    }

    /// Power absorption coefficient in 1/m; the optional state is
    /// validated but never rescales table values.
    #[pyo3(signature = (frequency_hz, state=None))]
    fn absorption_coefficient(
        &self,
        frequency_hz: f64,
        state: Option<AtmosphereState>,
    ) -> PyResult<f64> {
        let state = state
            .map(|s| s.inner)
            .unwrap_or(*self.inner.reference_state());
        self.inner.absorption_coefficient(frequency_hz, &state).py()
    }

    /// Maximal intervals with attenuation at or below the threshold.
    fn find_windows(&self, threshold_db_per_km: f64) -> PyResult<Vec<TransmissionWindow>> {
        Ok(self
            .inner
            .find_windows(threshold_db_per_km)
            .py()?
            .into_iter()
            .map(|w| TransmissionWindow { inner: w })
            .collect())
    }

    /// Warning text when a state differs from the reference by more than
    /// 1% relative, else None.
    fn state_warning(&self, state: &AtmosphereState) -> Option<String> {
        self.inner.state_warning(&state.inner)
    }

    /// (low_hz, high_hz) span covered by the table.
    fn span_hz(&self) -> (f64, f64) {
        self.inner.span_hz()
    }

    #[getter]
    fn source_label(&self) -> String {
        self.inner.source_label().to_string()
    }

    #[getter]
    fn reference_state(&self) -> AtmosphereState {
        AtmosphereState {
            inner: *self.inner.reference_state(),
        }
    }

    fn __len__(&self) -> usize {
        self.inner.samples().len()
    }

    fn __repr__(&self) -> String {
        let (lo, hi) = self.inner.span_hz();
        format!(
            "AttenuationTable({} samples, {:.1}-{:.1} GHz, '{}')",
            self.inner.samples().len(),
            lo / 1e9,
            hi / 1e9,
            self.inner.source_label()
        )
    }
}

/// Reflector surface properties. `refractive_index=float('inf')` is the
/// idealized perfect mirror.
#[pyclass(frozen, from_py_object)]
#[derive(Clone)]
struct Material {
    inner: core::Material,
}

#[pymethods]
impl Material {
    #[new]
    #[pyo3(signature = (refractive_index, roughness_sigma_m=0.0, label=""))]
    fn new(refractive_index: f64, roughness_sigma_m: f64, label: &str) -> PyResult<Self> {
        Ok(Material {
            inner: core::Material::new(refractive_index, roughness_sigma_m, label).py()?,
        })
    }

    #[staticmethod]
    fn perfect_mirror() -> Self {
        Material {
            inner: core::Material::perfect_mirror(),
        }
    }

    #[getter]
    fn refractive_index(&self) -> f64 {
        self.inner.refractive_index
    }

    #[getter]
    fn roughness_sigma_m(&self) -> f64 {
        self.inner.roughness_sigma_m
    }

    #[getter]
    fn label(&self) -> String {
        self.inner.label.clone()
    }

    fn __repr__(&self) -> String {
        format!(
            "Material(refractive_index={}, roughness_sigma_m={}, label='{}')",
            self.inner.refractive_index, self.inner.roughness_sigma_m, self.inner.label
        )
    }
}

/// A line-segment reflector between two (x, y) endpoints in meters.
#[pyclass(frozen, from_py_object)]
#[derive(Clone)]
struct Reflector {
    inner: core::Reflector,
}

#[pymethods]
impl Reflector {
    #[new]
    fn new(a: (f64, f64), b: (f64, f64), material: Material) -> PyResult<Self> {
        Ok(Reflector {
            inner: core::Reflector::new(
                core::Point2::new(a.0, a.1),
                core::Point2::new(b.0, b.1),
                material.inner,
            )
            .py()?,
        })
    }

    #[getter]
    fn endpoint_a(&self) -> (f64, f64) {
        (self.inner.endpoint_a.x, self.inner.endpoint_a.y)
    }

    #[getter]
    fn endpoint_b(&self) -> (f64, f64) {
        (self.inner.endpoint_b.x, self.inner.endpoint_b.y)
    }

    #[getter]
    fn material(&self) -> Material {
        Material {
            inner: self.inner.material.clone(),
        }
    }
}

/// One resolved propagation path (kind "los" or "nlos").
#[pyclass(frozen, from_py_object)]
#[derive(Clone)]
struct RayPath {
    inner: core::RayPath,
}

#[pymethods]
impl RayPath {
    #[getter]
    fn kind(&self) -> &'static str {
        match self.inner.kind {
            core::PathKind::Los => "los",
            core::PathKind::Nlos => "nlos",
        }
    }

    #[getter]
    fn leg1_m(&self) -> f64 {
        self.inner.leg1_m
    }

    #[getter]
    fn leg2_m(&self) -> f64 {
        self.inner.leg2_m
    }

    #[getter]
    fn total_length_m(&self) -> f64 {
        self.inner.total_length_m()
    }

    #[getter]
    fn incidence_angle_rad(&self) -> Option<f64> {
        self.inner.incidence_angle_rad
    }

    #[getter]
    fn reflector_index(&self) -> Option<usize> {
        self.inner.reflector_index
    }

    fn __repr__(&self) -> String {
        format!(
            "RayPath(kind='{}', leg1_m={}, leg2_m={}, incidence_angle_rad={:?}, reflector_index={:?})",
            self.kind(),
            self.inner.leg1_m,
            self.inner.leg2_m,
            self.inner.incidence_angle_rad,
            self.inner.reflector_index
        )
    }
}

/// Per-path and combined transfer magnitudes at one frequency.
#[pyclass(frozen)]
struct ChannelResponse {
    inner: core::ChannelResponse,
}

#[pymethods]
impl ChannelResponse {
    #[getter]
    fn frequency_hz(&self) -> f64 {
        self.inner.frequency_hz
    }

    #[getter]
    fn combined_magnitude(&self) -> f64 {
        self.inner.combined_magnitude
    }

    #[getter]
    fn combination_mode(&self) -> &'static str {
        match self.inner.combination_mode {
            core::CombinationMode::PowerSum => "power-sum",
            core::CombinationMode::Coherent => "coherent",
        }
    }

    /// List of (RayPath, magnitude) pairs, LOS first.
    #[getter]
    fn per_path(&self) -> Vec<(RayPath, f64)> {
        self.inner
            .per_path
            .iter()
            .map(|(p, m)| (RayPath { inner: *p }, *m))
            .collect()
    }

    #[getter]
    fn warnings(&self) -> Vec<String> {
        self.inner.warnings.clone()
    }

    fn __repr__(&self) -> String {
        format!(
            "ChannelResponse(frequency_hz={:.6e}, paths={}, combined_magnitude={:.6e}, mode='{}')",
            self.inner.frequency_hz,
            self.inner.per_path.len(),
            self.inner.combined_magnitude,
            self.combination_mode()
        )
    }
}

/// 2D placement of terminals and reflectors plus the atmosphere.
#[pyclass(frozen)]
struct Scenario {
    inner: core::Scenario,
}

#[pymethods]
impl Scenario {
    #[new]
    #[pyo3(signature = (tx, rx, reflectors=Vec::new(), atmosphere=None))]
    fn new(
        tx: (f64, f64),
        rx: (f64, f64),
        reflectors: Vec<Reflector>,
        atmosphere: Option<AtmosphereState>,
    ) -> PyResult<Self> {
        Ok(Scenario {
            inner: core::Scenario::new(
                core::Point2::new(tx.0, tx.1),
                core::Point2::new(rx.0, rx.1),
                reflectors.into_iter().map(|r| r.inner).collect(),
                atmosphere
                    .map(|a| a.inner)
                    .unwrap_or(core::AtmosphereState::STANDARD),
            )
            .py()?,
        })
    }

    /// Loads a scenario JSON file.
    #[staticmethod]
    fn load(path: &str) -> PyResult<Self> {
        Ok(Scenario {
            inner: core::load_scenario(path).py()?,
        })
    }

    /// Parses a scenario from JSON text.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Scenario {
            inner: core::scenario_from_json(text).py()?,
        })
    }

    /// Serializes to the scenario JSON format.
    fn to_json(&self) -> String {
        core::write_scenario(&self.inner)
    }

    #[getter]
    fn tx(&self) -> (f64, f64) {
        (self.inner.tx.x, self.inner.tx.y)
    }

    #[getter]
    fn rx(&self) -> (f64, f64) {
        (self.inner.rx.x, self.inner.rx.y)
    }

    #[getter]
    fn reflectors(&self) -> Vec<Reflector> {
        self.inner
            .reflectors
            .iter()
            .map(|r| Reflector { inner: r.clone() })
            .collect()
    }

    #[getter]
    fn atmosphere(&self) -> AtmosphereState {
        AtmosphereState {
            inner: self.inner.atmosphere,
        }
    }

    /// LOS path plus at most one specular path per reflector, LOS first.
    fn trace_specular_paths(&self) -> Vec<RayPath> {
        core::trace_specular_paths(&self.inner)
            .into_iter()
            .map(|p| RayPath { inner: p })
            .collect()
    }

    /// (RayPath, magnitude) of the LOS path at a frequency.
    fn los_response(
        &self,
        table: &AttenuationTable,
        frequency_hz: f64,
    ) -> PyResult<(RayPath, f64)> {
        let (path, magnitude) =
            core::los_response(&self.inner, &table.inner, frequency_hz).py()?;
        Ok((RayPath { inner: path }, magnitude))
    }

    /// Magnitude of one traced NLOS path at a frequency.
    fn nlos_response(
        &self,
        table: &AttenuationTable,
        path: &RayPath,
        frequency_hz: f64,
    ) -> PyResult<f64> {
        core::nlos_response(&self.inner, &table.inner, &path.inner, frequency_hz).py()
    }

    /// Full channel response; mode is "power-sum" (default) or "coherent".
    #[pyo3(signature = (table, frequency_hz, mode="power-sum"))]
    fn total_response(
        &self,
        table: &AttenuationTable,
        frequency_hz: f64,
        mode: &str,
    ) -> PyResult<ChannelResponse> {
        let mode = match mode {
            "power-sum" => core::CombinationMode::PowerSum,
            "coherent" => core::CombinationMode::Coherent,
            other => {
                return Err(PyValueError::new_err(format!(
                    "mode must be 'power-sum' or 'coherent', got '{other}'"
                )))
            }
        };
        Ok(ChannelResponse {
            inner: core::total_response(&self.inner, &table.inner, frequency_hz, mode).py()?,
        })
    }

    fn __repr__(&self) -> String {
        format!(
            "Scenario(tx=({}, {}), rx=({}, {}), reflectors={})",
            self.inner.tx.x,
            self.inner.tx.y,
            self.inner.rx.x,
            self.inner.rx.y,
            self.inner.reflectors.len()
        )
    }
}

/// Transmit parameters and geometry of a point-to-point link.
#[pyclass(frozen)]
struct LinkBudget {
    inner: core::LinkBudget,
}

#[pymethods]
impl LinkBudget {
    #[new]
    #[pyo3(signature = (tx_power_dbm, tx_gain_dbi, rx_gain_dbi, distance_m, frequency_hz,
                        noise_figure_db=0.0, noise_temperature_k=290.0))]
    #[allow(clippy::too_many_arguments)]
    fn new(
        tx_power_dbm: f64,
        tx_gain_dbi: f64,
        rx_gain_dbi: f64,
        distance_m: f64,
        frequency_hz: f64,
        noise_figure_db: f64,
        noise_temperature_k: f64,
    ) -> PyResult<Self> {
        Ok(LinkBudget {
            inner: core::LinkBudget {
                tx_power_dbm,
                tx_gain_dbi,
                rx_gain_dbi,
                distance_m,
                frequency_hz,
                noise_figure_db,
                noise_temperature_k,
            }
            .validated()
            .py()?,
        })
    }

    /// Friis received power, path loss, noise over the bandwidth and SNR.
    fn friis(&self, bandwidth_hz: f64) -> PyResult<LinkResult> {
        Ok(LinkResult {
            inner: core::friis_received_power(&self.inner, bandwidth_hz).py()?,
        })
    }

    /// (LinkResult, capacity_bps) for this budget over a bandwidth.
    fn capacity(&self, bandwidth_hz: f64) -> PyResult<(LinkResult, f64)> {
        let (result, capacity) = core::capacity_from_link(&self.inner, bandwidth_hz).py()?;
        Ok((LinkResult { inner: result }, capacity))
    }

    #[getter]
    fn tx_power_dbm(&self) -> f64 {
        self.inner.tx_power_dbm
    }

    #[getter]
    fn tx_gain_dbi(&self) -> f64 {
        self.inner.tx_gain_dbi
    }

    #[getter]
    fn rx_gain_dbi(&self) -> f64 {
        self.inner.rx_gain_dbi
    }

    #[getter]
    fn distance_m(&self) -> f64 {
        self.inner.distance_m
    }

    #[getter]
    fn frequency_hz(&self) -> f64 {
        self.inner.frequency_hz
    }

    fn __repr__(&self) -> String {
        format!(
            "LinkBudget(tx_power_dbm={}, tx_gain_dbi={}, rx_gain_dbi={}, distance_m={}, frequency_hz={:.6e})",
            self.inner.tx_power_dbm,
            self.inner.tx_gain_dbi,
            self.inner.rx_gain_dbi,
            self.inner.distance_m,
            self.inner.frequency_hz
        )
    }
}

/// Computed link-budget chain for one operating point.
#[pyclass(frozen)]
struct LinkResult {
    inner: core::LinkResult,
}

#[pymethods]
impl LinkResult {
    #[getter]
    fn path_loss_db(&self) -> f64 {
        self.inner.path_loss_db
    }

    #[getter]
    fn received_power_dbm(&self) -> f64 {
        self.inner.received_power_dbm
    }

    #[getter]
    fn noise_power_dbm(&self) -> f64 {
        self.inner.noise_power_dbm
    }

    #[getter]
    fn snr_db(&self) -> f64 {
        self.inner.snr_db
    }

    fn __repr__(&self) -> String {
        format!(
            "LinkResult(path_loss_db={:.4}, received_power_dbm={:.4}, noise_power_dbm={:.4}, snr_db={:.4})",
            self.inner.path_loss_db,
            self.inner.received_power_dbm,
            self.inner.noise_power_dbm,
            self.inner.snr_db
        )
    }
}

/// Strictly increasing distance/frequency axes for sweeps.
#[pyclass(frozen)]
struct SweepGrid {
    inner: core::SweepGrid,
}

#[pymethods]
impl SweepGrid {
    #[new]
    fn new(distances_m: Vec<f64>, frequencies_hz: Vec<f64>) -> PyResult<Self> {
        Ok(SweepGrid {
            inner: core::SweepGrid::new(distances_m, frequencies_hz).py()?,
        })
    }

    #[getter]
    fn distances_m(&self) -> Vec<f64> {
        self.inner.distances_m().to_vec()
    }

    #[getter]
    fn frequencies_hz(&self) -> Vec<f64> {
        self.inner.frequencies_hz().to_vec()
    }
}

#[pymodule]
fn thzlink_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add("SPEED_OF_LIGHT", core::SPEED_OF_LIGHT)?;
    m.add("BOLTZMANN", core::BOLTZMANN)?;

    m.add_function(wrap_pyfunction!(db_to_linear, m)?)?;
    m.add_function(wrap_pyfunction!(linear_to_db, m)?)?;
    m.add_function(wrap_pyfunction!(dbm_to_watts, m)?)?;
    m.add_function(wrap_pyfunction!(watts_to_dbm, m)?)?;
    m.add_function(wrap_pyfunction!(wavelength, m)?)?;
    m.add_function(wrap_pyfunction!(fspl_db, m)?)?;
    m.add_function(wrap_pyfunction!(noise_power_dbm, m)?)?;
    m.add_function(wrap_pyfunction!(snr_from_link, m)?)?;
    m.add_function(wrap_pyfunction!(h_spread, m)?)?;
    m.add_function(wrap_pyfunction!(shannon_capacity, m)?)?;
    m.add_function(wrap_pyfunction!(amplitude_transmittance, m)?)?;
    m.add_function(wrap_pyfunction!(fresnel_reflection, m)?)?;
    m.add_function(wrap_pyfunction!(rough_scatter_factor, m)?)?;
    m.add_function(wrap_pyfunction!(reflection_coefficient, m)?)?;
    m.add_function(wrap_pyfunction!(path_loss_grid, m)?)?;
    m.add_function(wrap_pyfunction!(capacity_sweep, m)?)?;

    m.add_class::<AtmosphereState>()?;
    m.add_class::<AttenuationTable>()?;
    m.add_class::<TransmissionWindow>()?;
    m.add_class::<Material>()?;
    m.add_class::<Reflector>()?;
    m.add_class::<RayPath>()?;
    m.add_class::<ChannelResponse>()?;
    m.add_class::<Scenario>()?;
    m.add_class::<LinkBudget>()?;
    m.add_class::<LinkResult>()?;
    m.add_class::<SweepGrid>()?;
    Ok(())
}
