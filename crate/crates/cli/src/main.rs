//! Command-line front end for the thzlink toolkit.
//!
//! One subcommand per computation: `pathloss`, `friis`, `los`, `nlos`,
//! `capacity`, `sweep` and `windows`. Identical invocations over identical
//! input files produce byte-identical outputs. Frequencies are taken in Hz
//! (scientific notation accepted, e.g. `300e9`); no unit suffixes.
//!
//! Exit codes: 0 success, 1 input/parse error, 2 domain/precondition
//! error, 3 I/O error. Failures print a single `error: <category>: ...`
//! line on stderr and write nothing to the success output stream.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use output::{emit, render_scalar, Cell, Format, Table};
use thzlink_core::{
    capacity_from_link, capacity_sweep, friis_received_power, fspl_db, load_attenuation_table,
    load_scenario, los_response, nlos_response, path_loss_grid, shannon_capacity,
    trace_specular_paths, AttenuationTable, Error, LinkBudget, LinkResult, PathKind, RayPath,
    Result, Scenario, SnrMode, SweepGrid,
};

#[derive(Parser)]
#[command(
    name = "thzlink",
    version,
    about = "Terahertz link-budget and channel-model calculations",
    max_term_width = 100
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputArgs {
    /// Write the result to this file instead of standard output
    #[arg(long)]
    output: Option<PathBuf>,
    /// Output format; scalar commands print a bare number when omitted,
    /// tabular commands default to csv
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args)]
struct BudgetArgs {
    /// Transmit power in dBm
    #[arg(long)]
    tx_power_dbm: f64,
    /// Transmit antenna gain in dBi
    #[arg(long)]
    tx_gain_dbi: f64,
    /// Receive antenna gain in dBi
    #[arg(long)]
    rx_gain_dbi: f64,
    /// Receiver noise figure in dB
    #[arg(long, default_value_t = 0.0)]
    noise_figure_db: f64,
    /// Receiver noise temperature in K
    #[arg(long, default_value_t = 290.0)]
    noise_temperature_k: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SweepQuantity {
    /// Free-space path loss in dB per grid cell
    Pathloss,
    /// Shannon capacity in bit/s per grid cell
    Capacity,
}

#[derive(Subcommand)]
enum Command {
    /// Free-space path loss for one distance/frequency point
    Pathloss {
        /// Link distance in meters
        #[arg(long)]
        distance: f64,
        /// Carrier frequency in Hz
        #[arg(long)]
        frequency: f64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Received power, noise and SNR from the Friis link budget
    Friis {
        #[command(flatten)]
        budget: BudgetArgs,
        /// Link distance in meters
        #[arg(long)]
        distance: f64,
        /// Carrier frequency in Hz
        #[arg(long)]
        frequency: f64,
        /// Noise bandwidth in Hz
        #[arg(long, default_value_t = 40e9)]
        bandwidth: f64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Line-of-sight transfer magnitude of a scenario
    Los {
        /// Scenario JSON file
        #[arg(long)]
        scenario: PathBuf,
        /// Attenuation CSV table
        #[arg(long)]
        table: PathBuf,
        /// Carrier frequency in Hz
        #[arg(long)]
        frequency: f64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Reflected-path transfer magnitudes of a scenario
    Nlos {
        /// Scenario JSON file
        #[arg(long)]
        scenario: PathBuf,
        /// Attenuation CSV table
        #[arg(long)]
        table: PathBuf,
        /// Carrier frequency in Hz
        #[arg(long)]
        frequency: f64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Shannon capacity from a fixed SNR or a full link budget
    Capacity {
        /// Analysis bandwidth in Hz
        #[arg(long)]
        bandwidth: f64,
        /// Fixed SNR in dB; omit to derive the SNR from the budget flags
        #[arg(long)]
        snr_db: Option<f64>,
        #[command(flatten)]
        budget: CapacityBudgetArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Path-loss or capacity grid over distance/frequency axes
    Sweep {
        /// What to compute per grid cell
        #[arg(long, value_enum)]
        quantity: SweepQuantity,
        /// Comma-separated distances in meters, strictly increasing
        #[arg(long, value_delimiter = ',', required = true)]
        distances: Vec<f64>,
        /// Comma-separated frequencies in Hz, strictly increasing
        #[arg(long, value_delimiter = ',', required = true)]
        frequencies: Vec<f64>,
        /// Analysis bandwidth in Hz (capacity only)
        #[arg(long, default_value_t = 40e9)]
        bandwidth: f64,
        /// Fixed SNR in dB for capacity sweeps
        #[arg(long, default_value_t = 20.0, conflicts_with = "derived")]
        snr_db: f64,
        /// Derive the SNR per cell from the budget flags instead
        #[arg(long)]
        derived: bool,
        #[command(flatten)]
        budget: CapacityBudgetArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Transmission windows of an attenuation table below a threshold
    Windows {
        /// Attenuation CSV table
        #[arg(long)]
        table: PathBuf,
        /// Specific-attenuation threshold in dB/km
        #[arg(long)]
        threshold: f64,
        #[command(flatten)]
        out: OutputArgs,
    },
}

/// Budget flags that are optional at parse time and validated together.
#[derive(Args)]
struct CapacityBudgetArgs {
    /// Transmit power in dBm
    #[arg(long)]
    tx_power_dbm: Option<f64>,
    /// Transmit antenna gain in dBi
    #[arg(long)]
    tx_gain_dbi: Option<f64>,
    /// Receive antenna gain in dBi
    #[arg(long)]
    rx_gain_dbi: Option<f64>,
    /// Link distance in meters
    #[arg(long)]
    distance: Option<f64>,
    /// Carrier frequency in Hz
    #[arg(long)]
    frequency: Option<f64>,
    /// Receiver noise figure in dB
    #[arg(long, default_value_t = 0.0)]
    noise_figure_db: f64,
    /// Receiver noise temperature in K
    #[arg(long, default_value_t = 290.0)]
    noise_temperature_k: f64,
}

impl CapacityBudgetArgs {
    /// Full budget including geometry; for single-point commands.
    fn to_budget(&self) -> Result<LinkBudget> {
        match (
            self.tx_power_dbm,
            self.tx_gain_dbi,
            self.rx_gain_dbi,
            self.distance,
            self.frequency,
        ) {
            (Some(p), Some(gt), Some(gr), Some(d), Some(f)) => LinkBudget {
                tx_power_dbm: p,
                tx_gain_dbi: gt,
                rx_gain_dbi: gr,
                distance_m: d,
                frequency_hz: f,
                noise_figure_db: self.noise_figure_db,
                noise_temperature_k: self.noise_temperature_k,
            }
            .validated(),
            _ => Err(Error::invalid(
                "derived SNR needs --tx-power-dbm, --tx-gain-dbi, --rx-gain-dbi, \
                 --distance and --frequency",
            )),
        }
    }

    /// Budget template for sweeps; distance and frequency come from the
    /// grid, so placeholders stand in here.
    fn to_template(&self) -> Result<LinkBudget> {
        match (self.tx_power_dbm, self.tx_gain_dbi, self.rx_gain_dbi) {
            (Some(p), Some(gt), Some(gr)) => LinkBudget {
                tx_power_dbm: p,
                tx_gain_dbi: gt,
                rx_gain_dbi: gr,
                distance_m: 1.0,
                frequency_hz: 1.0,
                noise_figure_db: self.noise_figure_db,
                noise_temperature_k: self.noise_temperature_k,
            }
            .validated(),
            _ => Err(Error::invalid(
                "--derived needs --tx-power-dbm, --tx-gain-dbi and --rx-gain-dbi",
            )),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            let (code, category) = match err {
                Error::Parse { .. } | Error::Validation(_) => (1, "input"),
                Error::InvalidArgument(_) | Error::OutOfRange(_) => (2, "domain"),
                Error::Io(_) => (3, "io"),
            };
            eprintln!("error: {category}: {err}");
            ExitCode::from(code)
        }
    }
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Pathloss {
            distance,
            frequency,
            out,
        } => {
            let loss = fspl_db(distance, frequency)?;
            emit(out.output.as_ref(), &render_scalar("path_loss_db", loss, out.format))
        }
        Command::Friis {
            budget,
            distance,
            frequency,
            bandwidth,
            out,
        } => {
            let budget = LinkBudget {
                tx_power_dbm: budget.tx_power_dbm,
                tx_gain_dbi: budget.tx_gain_dbi,
                rx_gain_dbi: budget.rx_gain_dbi,
                distance_m: distance,
                frequency_hz: frequency,
                noise_figure_db: budget.noise_figure_db,
                noise_temperature_k: budget.noise_temperature_k,
            }
            .validated()?;
            let result = friis_received_power(&budget, bandwidth)?;
            let table = link_result_table(&result, None);
            emit(out.output.as_ref(), &table.render(out.format))
        }
        Command::Los {
            scenario,
            table,
            frequency,
            out,
        } => {
            let (scenario, table) = load_scene(&scenario, &table)?;
            warn_on_state_mismatch(&table, &scenario);
            let (path, magnitude) = los_response(&scenario, &table, frequency)?;
            let mut result = path_table();
            result.push(path_row(&path, magnitude));
            emit(out.output.as_ref(), &result.render(out.format))
        }
        Command::Nlos {
            scenario,
            table,
            frequency,
            out,
        } => {
            let (scenario, table) = load_scene(&scenario, &table)?;
            warn_on_state_mismatch(&table, &scenario);
            let mut result = path_table();
            for path in trace_specular_paths(&scenario) {
                if path.kind == PathKind::Nlos {
                    let magnitude = nlos_response(&scenario, &table, &path, frequency)?;
                    result.push(path_row(&path, magnitude));
                }
            }
            emit(out.output.as_ref(), &result.render(out.format))
        }
        Command::Capacity {
            bandwidth,
            snr_db,
            budget,
            out,
        } => match snr_db {
            Some(snr_db) => {
                let capacity = shannon_capacity(bandwidth, snr_db)?;
                emit(
                    out.output.as_ref(),
                    &render_scalar("capacity_bps", capacity, out.format),
                )
            }
            None => {
                let (result, capacity) = capacity_from_link(&budget.to_budget()?, bandwidth)?;
                let table = link_result_table(&result, Some(capacity));
                emit(out.output.as_ref(), &table.render(out.format))
            }
        },
        Command::Sweep {
            quantity,
            distances,
            frequencies,
            bandwidth,
            snr_db,
            derived,
            budget,
            out,
        } => {
            let grid = SweepGrid::new(distances, frequencies)?;
            let (value_column, rows) = match quantity {
                SweepQuantity::Pathloss => ("path_loss_db", path_loss_grid(&grid)?),
                SweepQuantity::Capacity => {
                    let (template, mode) = if derived {
                        (budget.to_template()?, SnrMode::Derived)
                    } else {
                        // fixed mode never reads the template geometry
                        (LinkBudget::new(0.0, 0.0, 0.0, 1.0, 1.0)?, SnrMode::Fixed(snr_db))
                    };
                    ("capacity_bps", capacity_sweep(&template, &grid, bandwidth, mode)?)
                }
            };
            let mut table = Table::new(vec!["distance_m", "frequency_hz", value_column]);
            for (d, f, v) in rows {
                table.push(vec![Cell::Number(d), Cell::Number(f), Cell::Number(v)]);
            }
            emit(out.output.as_ref(), &table.render(out.format))
        }
        Command::Windows {
            table,
            threshold,
            out,
        } => {
            let table = load_attenuation_table(table)?;
            let windows = table.find_windows(threshold)?;
            let mut result = Table::new(vec![
                "low_hz",
                "high_hz",
                "center_hz",
                "min_attenuation_db_per_km",
            ]);
            for w in windows {
                result.push(vec![
                    Cell::Number(w.low_hz),
                    Cell::Number(w.high_hz),
                    Cell::Number(w.center_hz),
                    Cell::Number(w.min_attenuation_db_per_km),
                ]);
            }
            emit(out.output.as_ref(), &result.render(out.format))
        }
    }
}

fn load_scene(scenario: &PathBuf, table: &PathBuf) -> Result<(Scenario, AttenuationTable)> {
    Ok((load_scenario(scenario)?, load_attenuation_table(table)?))
}

fn warn_on_state_mismatch(table: &AttenuationTable, scenario: &Scenario) {
    if let Some(warning) = table.state_warning(&scenario.atmosphere) {
        eprintln!("warning: {warning}");
    }
}

fn link_result_table(result: &LinkResult, capacity_bps: Option<f64>) -> Table {
    let mut columns = vec![
        "path_loss_db",
        "received_power_dbm",
        "noise_power_dbm",
        "snr_db",
    ];
    let mut row = vec![
        Cell::Number(result.path_loss_db),
        Cell::Number(result.received_power_dbm),
        Cell::Number(result.noise_power_dbm),
        Cell::Number(result.snr_db),
    ];
    if let Some(capacity) = capacity_bps {
        columns.push("capacity_bps");
        row.push(Cell::Number(capacity));
    }
    let mut table = Table::new(columns);
    table.push(row);
    table
}

fn path_table() -> Table {
    Table::new(vec![
        "kind",
        "reflector_index",
        "leg1_m",
        "leg2_m",
        "total_m",
        "incidence_angle_rad",
        "magnitude",
    ])
}

fn path_row(path: &RayPath, magnitude: f64) -> Vec<Cell> {
    vec![
        Cell::Text(
            match path.kind {
                PathKind::Los => "los",
                PathKind::Nlos => "nlos",
            }
            .to_string(),
        ),
        path.reflector_index
            .map_or(Cell::Empty, |i| Cell::Number(i as f64)),
        Cell::Number(path.leg1_m),
        Cell::Number(path.leg2_m),
        Cell::Number(path.total_length_m()),
        path.incidence_angle_rad.map_or(Cell::Empty, Cell::Number),
        Cell::Number(magnitude),
    ]
}
