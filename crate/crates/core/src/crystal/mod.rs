//! Finite one-dimensional crystals: N-period transmission and band
//! classification for dielectric multilayers and delta-potential lattices.

pub mod delta;
pub mod optical;
pub mod su11;

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mat2::{Mat2, Tolerances};
use crate::power::{chebyshev_power, closed_power_with, naive_power};
use crate::wigner::{classify_with, ClassTag, WignerClass};

pub use delta::{cell_matrix_delta, discriminant};
pub use optical::{cell_matrix_optical, interface, propagation, Layer};
pub use su11::{sp2_to_su11, su11_to_sp2, Su11Matrix};

pub const MAX_PERIODS: u64 = 1_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WavelengthScan {
    pub lambda_min_nm: f64,
    pub lambda_max_nm: f64,
    pub points: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StackConfig {
    pub ambient_n: f64,
    pub exit_n: f64,
    pub cell: Vec<Layer>,
    pub periods: u64,
    pub scan: WavelengthScan,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KScan {
    pub k_min: f64,
    pub k_max: f64,
    pub points: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeltaLattice {
    /// Delta strength; positive for barriers, negative for wells.
    pub g: f64,
    /// Lattice period.
    pub a: f64,
    pub k_scan: KScan,
    #[serde(default = "one")]
    pub periods: u64,
}

fn one() -> u64 {
    1
}

/// Either crystal family, as read from a config document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CrystalConfig {
    Optical(StackConfig),
    Delta(DeltaLattice),
}

fn check_grid(min: f64, max: f64, points: usize, prefix: &str, lo: &str, hi: &str) -> Result<()> {
    if !(min.is_finite() && min > 0.0) {
        return Err(Error::config(
            format!("{prefix}.{lo}"),
            format!("must be positive, got {min}"),
        ));
    }
    if !(max.is_finite() && max >= min) {
        return Err(Error::config(
            format!("{prefix}.{hi}"),
            format!("must be finite and not below {lo} = {min}, got {max}"),
        ));
    }
    if points == 0 {
        return Err(Error::config(
            format!("{prefix}.points"),
            "must be at least 1",
        ));
    }
    Ok(())
}

fn check_periods(periods: u64) -> Result<()> {
    if periods > MAX_PERIODS {
        return Err(Error::config(
            "periods",
            format!("must not exceed {MAX_PERIODS}, got {periods}"),
        ));
    }
    Ok(())
}

fn linspace(min: f64, max: f64, points: usize) -> impl Iterator<Item = f64> + Clone {
    let step = if points > 1 {
        (max - min) / (points - 1) as f64
    } else {
        0.0
    };
    (0..points).map(move |i| {
        if i + 1 == points && points > 1 {
            max
        } else {
            min + step * i as f64
        }
    })
}

impl StackConfig {
    pub fn validate(&self) -> Result<()> {
        optical::check_index(self.ambient_n, "ambient_n")?;
        optical::check_index(self.exit_n, "exit_n")?;
        if self.cell.is_empty() {
            return Err(Error::config("cell", "must contain at least one layer"));
        }
        for (i, layer) in self.cell.iter().enumerate() {
            layer.validate(&format!("cell[{i}]"))?;
        }
        check_periods(self.periods)?;
        let s = &self.scan;
        check_grid(
            s.lambda_min_nm,
            s.lambda_max_nm,
            s.points,
            "scan",
            "lambda_min_nm",
            "lambda_max_nm",
        )
    }

    /// Energy conservation `T + R = 1` only holds when both half-spaces match.
    pub fn is_symmetric(&self) -> bool {
        self.ambient_n == self.exit_n
    }

    pub fn grid(&self) -> Vec<f64> {
        linspace(
            self.scan.lambda_min_nm,
            self.scan.lambda_max_nm,
            self.scan.points,
        )
        .collect()
    }

    /// One period in the real Sp(2) form.
    pub fn cell_matrix(&self, lambda_nm: f64) -> Result<Mat2> {
        Ok(cell_matrix_optical(&self.cell, lambda_nm)?.to_sp2())
    }
}

impl DeltaLattice {
    pub fn validate(&self) -> Result<()> {
        if !self.g.is_finite() {
            return Err(Error::config("g", "must be finite"));
        }
        if !(self.a.is_finite() && self.a > 0.0) {
            return Err(Error::config(
                "a",
                format!("must be positive, got {}", self.a),
            ));
        }
        check_periods(self.periods)?;
        let s = &self.k_scan;
        check_grid(s.k_min, s.k_max, s.points, "k_scan", "k_min", "k_max")
    }

    pub fn grid(&self) -> Vec<f64> {
        linspace(self.k_scan.k_min, self.k_scan.k_max, self.k_scan.points).collect()
    }

    pub fn cell_matrix(&self, k: f64) -> Result<Mat2> {
        cell_matrix_delta(self.g, self.a, k)
    }
}

impl CrystalConfig {
    pub fn validate(&self) -> Result<()> {
        match self {
            CrystalConfig::Optical(s) => s.validate(),
            CrystalConfig::Delta(d) => d.validate(),
        }
    }

    pub fn periods(&self) -> u64 {
        match self {
            CrystalConfig::Optical(s) => s.periods,
            CrystalConfig::Delta(d) => d.periods,
        }
    }

    pub fn with_periods(&self, periods: u64) -> Self {
        let mut out = self.clone();
        match &mut out {
            CrystalConfig::Optical(s) => s.periods = periods,
            CrystalConfig::Delta(d) => d.periods = periods,
        }
        out
    }

    pub fn grid(&self) -> Vec<f64> {
        match self {
            CrystalConfig::Optical(s) => s.grid(),
            CrystalConfig::Delta(d) => d.grid(),
        }
    }

    pub fn cell_matrix(&self, x: f64) -> Result<Mat2> {
        match self {
            CrystalConfig::Optical(s) => s.cell_matrix(x),
            CrystalConfig::Delta(d) => d.cell_matrix(x),
        }
    }

    /// Entry and exit interfaces around the N-period block, in Sp(2) form.
    fn boundaries(&self) -> (Mat2, Mat2) {
        match self {
            CrystalConfig::Optical(s) => {
                let first = s.cell[0].n;
                (
                    interface(s.ambient_n, first).to_sp2(),
                    interface(first, s.exit_n).to_sp2(),
                )
            }
            CrystalConfig::Delta(_) => (Mat2::IDENTITY, Mat2::IDENTITY),
        }
    }
}

/// How the cell matrix is raised to the N-th power.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PowerMethod {
    Closed,
    Naive,
    Chebyshev,
}

/// Response of the N-period crystal at one scan point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StackResponse {
    pub transmittance: f64,
    pub reflectance: f64,
    /// Half-trace of one period.
    pub half_trace: f64,
    pub class: ClassTag,
    /// Bloch phase `Ka ∈ [0, π]` with `cos(Ka)` the half-trace; elliptic cells only.
    pub bloch_phase: Option<f64>,
    /// The N-period matrix left the double range; `T` is reported as 0.
    pub overflow: bool,
}

pub fn stack_response(
    config: &CrystalConfig,
    x: f64,
    periods: u64,
    tol: &Tolerances,
) -> Result<StackResponse> {
    stack_response_by(config, x, periods, PowerMethod::Closed, tol)
}

pub fn stack_response_by(
    config: &CrystalConfig,
    x: f64,
    periods: u64,
    method: PowerMethod,
    tol: &Tolerances,
) -> Result<StackResponse> {
    let cell = config.cell_matrix(x)?;
    let class = classify_with(&cell, tol)?;
    let bloch_phase = match class {
        WignerClass::Elliptic { phi } => {
            let half = 0.5 * phi.0;
            Some(if half > PI { 2.0 * PI - half } else { half })
        }
        _ => None,
    };
    let base = StackResponse {
        transmittance: 0.0,
        reflectance: 1.0,
        half_trace: cell.half_trace(),
        class: class.tag(),
        bloch_phase,
        overflow: true,
    };

    let powered = match method {
        PowerMethod::Closed => closed_power_with(&cell, periods, tol),
        PowerMethod::Naive => naive_power(&cell, periods),
        PowerMethod::Chebyshev => chebyshev_power(&cell, periods),
    };
    let block = match powered {
        Ok(m) => m,
        Err(Error::Overflow(_)) => return Ok(base),
        Err(e) => return Err(e),
    };
    let (entry, exit) = config.boundaries();
    let total = entry * block * exit;
    if !total.is_finite() {
        return Ok(base);
    }
    let wave = su11::sp2_to_su11_unchecked(&total);
    let t = wave.transmittance();
    let r = wave.reflectance();
    if !(t.is_finite() && r.is_finite()) {
        return Ok(base);
    }
    Ok(StackResponse {
        transmittance: t,
        reflectance: r,
        overflow: false,
        ..base
    })
}

/// One scan point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectrumRow {
    /// Wavelength in nm (optical) or wavenumber k (delta lattice).
    pub x: f64,
    pub half_trace: f64,
    pub class: ClassTag,
    pub bloch_phase: Option<f64>,
    #[serde(rename = "T")]
    pub t: f64,
    #[serde(rename = "R")]
    pub r: f64,
}

/// Rows for every grid point at the configured period count, in grid order.
/// Points are evaluated in parallel on the current rayon pool.
pub fn band_scan(config: &CrystalConfig, tol: &Tolerances) -> Result<Vec<SpectrumRow>> {
    config.validate()?;
    let periods = config.periods();
    config
        .grid()
        .into_par_iter()
        .map(|x| {
            let resp = stack_response(config, x, periods, tol)?;
            Ok(SpectrumRow {
                x,
                half_trace: resp.half_trace,
                class: resp.class,
                bloch_phase: resp.bloch_phase,
                t: resp.transmittance,
                r: resp.reflectance,
            })
        })
        .collect()
}

/// A maximal run of consecutive rows sharing one class.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClassRun {
    pub class: ClassTag,
    pub x_start: f64,
    pub x_end: f64,
    pub points: usize,
}

pub fn class_runs(rows: &[SpectrumRow]) -> Vec<ClassRun> {
    let mut runs: Vec<ClassRun> = Vec::new();
    for row in rows {
        match runs.last_mut() {
            Some(run) if run.class == row.class => {
                run.x_end = row.x;
                run.points += 1;
            }
            _ => runs.push(ClassRun {
                class: row.class,
                x_start: row.x,
                x_end: row.x,
                points: 1,
            }),
        }
    }
    runs
}

/// Runs of hyperbolic rows.
pub fn gaps(rows: &[SpectrumRow]) -> Vec<ClassRun> {
    class_runs(rows)
        .into_iter()
        .filter(|r| r.class == ClassTag::Hyperbolic)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn quarter_wave(periods: u64, points: usize) -> CrystalConfig {
        CrystalConfig::Optical(StackConfig {
            ambient_n: 1.0,
            exit_n: 1.0,
            cell: vec![
                Layer::quarter_wave(1.38, 550.0).unwrap(),
                Layer::quarter_wave(2.35, 550.0).unwrap(),
            ],
            periods,
            scan: WavelengthScan {
                lambda_min_nm: 400.0,
                lambda_max_nm: 800.0,
                points,
            },
        })
    }

    fn homogeneous() -> CrystalConfig {
        CrystalConfig::Optical(StackConfig {
            ambient_n: 1.0,
            exit_n: 1.0,
            cell: vec![Layer::new(1.0, 250.0).unwrap()],
            periods: 7,
            scan: WavelengthScan {
                lambda_min_nm: 400.0,
                lambda_max_nm: 800.0,
                points: 41,
            },
        })
    }

    #[test]
    fn zero_periods_transmit_fully() {
        let c = quarter_wave(0, 3);
        let r = stack_response(&c, 550.0, 0, &Tolerances::default()).unwrap();
        assert!((r.transmittance - 1.0).abs() < 1e-15);
        assert!(r.reflectance.abs() < 1e-15);
    }

    #[test]
    fn quarter_wave_against_naive() {
        let c = quarter_wave(10, 3);
        let tol = Tolerances::default();
        let closed = stack_response_by(&c, 550.0, 10, PowerMethod::Closed, &tol).unwrap();
        let naive = stack_response_by(&c, 550.0, 10, PowerMethod::Naive, &tol).unwrap();
        assert_eq!(closed.class, ClassTag::Hyperbolic);
        assert!((closed.transmittance - naive.transmittance).abs() <= 1e-9 * naive.transmittance);
    }

    #[test]
    fn homogeneous_has_no_gaps() {
        let rows = band_scan(&homogeneous(), &Tolerances::default()).unwrap();
        assert!(gaps(&rows).is_empty());
        for row in &rows {
            assert!((row.t - 1.0).abs() < 1e-12, "{row:?}");
        }
    }

    #[test]
    fn quarter_wave_gap_contains_design_wavelength() {
        let rows = band_scan(&quarter_wave(10, 201), &Tolerances::default()).unwrap();
        let g = gaps(&rows);
        assert!(
            g.iter().any(|r| r.x_start <= 550.0 && 550.0 <= r.x_end),
            "{g:?}"
        );
    }

    #[test]
    fn huge_period_count_flags_overflow() {
        let c = quarter_wave(MAX_PERIODS, 3);
        let r = stack_response(&c, 550.0, MAX_PERIODS, &Tolerances::default()).unwrap();
        assert!(r.overflow);
        assert_eq!(r.transmittance, 0.0);
        assert_eq!(r.reflectance, 1.0);
    }

    #[test]
    fn config_validation_names_fields() {
        let mut c = match quarter_wave(1, 3) {
            CrystalConfig::Optical(s) => s,
            _ => unreachable!(),
        };
        c.cell[1].n = -1.0;
        match c.validate() {
            Err(Error::InvalidConfig { path, .. }) => assert_eq!(path, "cell[1].n"),
            other => panic!("{other:?}"),
        }
        c.cell[1].n = 2.0;
        c.scan.points = 0;
        assert!(
            matches!(c.validate(), Err(Error::InvalidConfig { path, .. }) if path == "scan.points")
        );
        c.scan.points = 3;
        c.periods = MAX_PERIODS + 1;
        assert!(c.validate().is_err());

        let d = DeltaLattice {
            g: 1.0,
            a: 1.0,
            k_scan: KScan {
                k_min: 0.0,
                k_max: 1.0,
                points: 3,
            },
            periods: 1,
        };
        assert!(
            matches!(d.validate(), Err(Error::InvalidConfig { path, .. }) if path == "k_scan.k_min")
        );
    }

    #[test]
    fn grid_endpoints() {
        let g: Vec<f64> = linspace(0.1, 10.0, 2000).collect();
        assert_eq!(g.len(), 2000);
        assert_eq!(g[0], 0.1);
        assert_eq!(g[1999], 10.0);
        assert_eq!(linspace(3.0, 3.0, 1).collect::<Vec<_>>(), vec![3.0]);
    }

    #[test]
    fn runs_group_consecutive_classes() {
        let row = |x, class| SpectrumRow {
            x,
            half_trace: 0.0,
            class,
            bloch_phase: None,
            t: 1.0,
            r: 0.0,
        };
        let rows = [
            row(1.0, ClassTag::Elliptic),
            row(2.0, ClassTag::Elliptic),
            row(3.0, ClassTag::Hyperbolic),
            row(4.0, ClassTag::Elliptic),
        ];
        let runs = class_runs(&rows);
        assert_eq!(runs.len(), 3);
        assert_eq!(
            (runs[0].x_start, runs[0].x_end, runs[0].points),
            (1.0, 2.0, 2)
        );
        assert_eq!(gaps(&rows).len(), 1);
    }
}
