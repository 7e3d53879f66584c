//! Parameter sweeps over (r, P, T) and their CSV form.

use std::io::Write;

use fge_core::entanglement::{eos_evaluate, EntanglementReport};
use fge_core::exchange::zeta_zero_temperature;
use fge_core::fermi::{pressure_from_entanglement_distance, GasRegime, MuMode};

pub const CSV_HEADER: [&str; 9] = [
    "r_m",
    "P_Pa",
    "T_K",
    "x",
    "f",
    "C",
    "EF_bits",
    "entangled",
    "re_m",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepVariable {
    Pressure,
    Distance,
    Temperature,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spacing {
    Linear,
    Log,
}

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum SpecError {
    #[error("sweep range needs min < max, got min = {min:e}, max = {max:e}")]
    EmptyRange { min: f64, max: f64 },
    #[error("sweep needs at least 2 points, got {0}")]
    TooFewPoints(usize),
    #[error("log spacing needs min > 0, got {0:e}")]
    NonPositiveLogMin(f64),
    #[error("{0} sweep needs a fixed value for --{1}")]
    MissingFixed(&'static str, &'static str),
}

/// One sweep: the swept variable, its grid, and the fixed values of the others.
///
/// The fixed value of the swept variable itself is ignored.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub variable: SweepVariable,
    pub min: f64,
    pub max: f64,
    pub count: usize,
    pub spacing: Spacing,
    pub r: Option<f64>,
    pub pressure: Option<f64>,
    pub temperature: Option<f64>,
    pub regime: GasRegime,
    pub mu_mode: MuMode,
    pub tol: f64,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<(), SpecError> {
        let ordered = self.min.is_finite() && self.max.is_finite() && self.min < self.max;
        if !ordered {
            return Err(SpecError::EmptyRange {
                min: self.min,
                max: self.max,
            });
        }
        if self.count < 2 {
            return Err(SpecError::TooFewPoints(self.count));
        }
        if self.spacing == Spacing::Log && self.min <= 0.0 {
            return Err(SpecError::NonPositiveLogMin(self.min));
        }
        let (name, needs_r, needs_p) = match self.variable {
            SweepVariable::Pressure => ("pressure", true, false),
            SweepVariable::Distance => ("distance", false, true),
            SweepVariable::Temperature => ("temperature", true, true),
        };
        if needs_r && self.r.is_none() {
            return Err(SpecError::MissingFixed(name, "r"));
        }
        if needs_p && self.pressure.is_none() {
            return Err(SpecError::MissingFixed(name, "P"));
        }
        Ok(())
    }

    /// Grid points with both endpoints exact.
    pub fn grid(&self) -> Vec<f64> {
        let n = self.count;
        let last = (n - 1) as f64;
        let mut g: Vec<f64> = match self.spacing {
            Spacing::Linear => (0..n)
                .map(|i| self.min + (self.max - self.min) * (i as f64 / last))
                .collect(),
            Spacing::Log => {
                let (a, b) = (self.min.ln(), self.max.ln());
                (0..n)
                    .map(|i| (a + (b - a) * (i as f64 / last)).exp())
                    .collect()
            }
        };
        g[0] = self.min;
        g[n - 1] = self.max;
        g
    }

    fn point(&self, v: f64) -> (f64, f64, f64) {
        let r = self.r.unwrap_or(f64::NAN);
        let p = self.pressure.unwrap_or(f64::NAN);
        let t = self.temperature.unwrap_or(0.0);
        match self.variable {
            SweepVariable::Pressure => (r, v, t),
            SweepVariable::Distance => (v, p, t),
            SweepVariable::Temperature => (r, p, v),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub r: f64,
    pub pressure: f64,
    pub temperature: f64,
    pub x: f64,
    pub f: f64,
    pub concurrence: f64,
    pub entropy_of_formation: f64,
    pub entangled: bool,
    pub r_e: f64,
}

impl From<&EntanglementReport> for SweepRow {
    fn from(e: &EntanglementReport) -> Self {
        Self {
            r: e.r,
            pressure: e.pressure,
            temperature: e.temperature,
            x: e.x,
            f: e.f,
            concurrence: e.concurrence,
            entropy_of_formation: e.entropy_of_formation,
            entangled: e.entangled,
            r_e: e.r_e,
        }
    }
}

pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<SweepRow>, crate::Error> {
    spec.validate()?;
    spec.grid()
        .into_iter()
        .map(|v| {
            let (r, p, t) = spec.point(v);
            let rep = eos_evaluate(r, p, t, spec.regime, spec.mu_mode, spec.tol)?;
            Ok(SweepRow::from(&rep))
        })
        .collect()
}

/// r = 1e-10 m at T = 0, from the gas whose r_e is 1e-8 m to ten times the
/// pressure where r_e reaches r, 200 log-spaced points.
pub fn figure1_spec(tol: f64) -> SweepSpec {
    let regime = GasRegime::NonRelativistic;
    let zeta = zeta_zero_temperature();
    let start = pressure_from_entanglement_distance(1e-8, regime, zeta).expect("positive r_e");
    let vanish = pressure_from_entanglement_distance(1e-10, regime, zeta).expect("positive r_e");
    SweepSpec {
        variable: SweepVariable::Pressure,
        min: start,
        max: 10.0 * vanish,
        count: 200,
        spacing: Spacing::Log,
        r: Some(1e-10),
        pressure: None,
        temperature: Some(0.0),
        regime,
        mu_mode: MuMode::ExactNormalization,
        tol,
    }
}

/// Shortest representation that parses back to the same double.
pub fn format_float(v: f64) -> String {
    format!("{v:e}")
}

pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<(), crate::Error> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    w.write_record(CSV_HEADER)?;
    for row in rows {
        let fields = [
            format_float(row.r),
            format_float(row.pressure),
            format_float(row.temperature),
            format_float(row.x),
            format_float(row.f),
            format_float(row.concurrence),
            format_float(row.entropy_of_formation),
            u8::from(row.entangled).to_string(),
            format_float(row.r_e),
        ];
        w.write_record(&fields)?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(min: f64, max: f64, count: usize, spacing: Spacing) -> SweepSpec {
        SweepSpec {
            variable: SweepVariable::Pressure,
            min,
            max,
            count,
            spacing,
            r: Some(1e-10),
            pressure: None,
            temperature: None,
            regime: GasRegime::NonRelativistic,
            mu_mode: MuMode::ExactNormalization,
            tol: 1e-10,
        }
    }

    #[test]
    fn validation() {
        assert!(spec(1.0, 2.0, 2, Spacing::Linear).validate().is_ok());
        assert_eq!(
            spec(2.0, 2.0, 5, Spacing::Linear).validate(),
            Err(SpecError::EmptyRange { min: 2.0, max: 2.0 })
        );
        assert_eq!(
            spec(1.0, 2.0, 1, Spacing::Linear).validate(),
            Err(SpecError::TooFewPoints(1))
        );
        assert_eq!(
            spec(-1.0, 2.0, 3, Spacing::Log).validate(),
            Err(SpecError::NonPositiveLogMin(-1.0))
        );
        assert!(spec(-1.0, 2.0, 3, Spacing::Linear).validate().is_ok());
        assert!(spec(f64::NAN, 2.0, 3, Spacing::Linear).validate().is_err());
        let mut s = spec(1.0, 2.0, 3, Spacing::Linear);
        s.r = None;
        assert_eq!(s.validate(), Err(SpecError::MissingFixed("pressure", "r")));
    }

    #[test]
    fn grids_hit_endpoints() {
        let g = spec(1e8, 1e12, 200, Spacing::Log).grid();
        assert_eq!(g.len(), 200);
        assert_eq!((g[0], g[199]), (1e8, 1e12));
        assert!(g.windows(2).all(|w| w[0] < w[1]));
        assert!((g[50] / g[49] - g[150] / g[149]).abs() < 1e-12);

        let l = spec(0.0, 1.0, 11, Spacing::Linear).grid();
        assert_eq!(l[10], 1.0);
        assert!((l[3] - 0.3).abs() < 1e-16);
    }

    #[test]
    fn float_format_round_trips() {
        for v in [1e-10, 0.1 + 0.2, 1.602_176_634e-19, 0.0, 1.0, 123_456.789] {
            let s = format_float(v);
            assert_eq!(s.parse::<f64>().unwrap(), v, "{s}");
        }
        assert_eq!(format_float(1e-10), "1e-10");
    }

    #[test]
    fn csv_layout() {
        let mut s = spec(1e8, 1e12, 2, Spacing::Log);
        s.temperature = Some(0.0);
        let rows = run_sweep(&s).unwrap();
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<_> = text.split_terminator('\n').collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[0], "r_m,P_Pa,T_K,x,f,C,EF_bits,entangled,re_m");
        assert!(!text.contains('\r'));
        assert!(lines[1].starts_with("1e-10,1e8,0e0,"));
        assert!(lines[2].ends_with(&format_float(rows[1].r_e)));
    }
}
