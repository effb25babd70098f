//! Sampled t ↦ (A, V) trajectories and their CSV form.

use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};

/// Header of the trajectory CSV.
pub const FLOW_CSV_HEADER: [&str; 4] = ["t", "area", "volume", "provenance"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Analytic,
    Discrete,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Analytic => "analytic",
            Provenance::Discrete => "discrete",
        }
    }
}

/// Formats a float with 17 significant digits ('.' decimal point, exponent
/// notation), enough to round-trip any f64.
pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FlowSeries {
    pub t_values: Vec<f64>,
    pub areas: Vec<f64>,
    pub volumes: Vec<f64>,
    pub provenance: Provenance,
}

impl FlowSeries {
    pub fn new(t_values: Vec<f64>, areas: Vec<f64>, volumes: Vec<f64>, provenance: Provenance) -> Result<Self> {
        if t_values.len() != areas.len() || t_values.len() != volumes.len() {
            return Err(GeomError::input("flow series columns must have equal length"));
        }
        if t_values.iter().any(|&t| !(t >= 0.0)) {
            return Err(GeomError::input("flow times must be >= 0"));
        }
        if t_values.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(GeomError::input("flow times must be strictly increasing"));
        }
        if areas.iter().any(|&a| !(a > 0.0)) {
            return Err(GeomError::input("flow areas must be positive"));
        }
        Ok(FlowSeries { t_values, areas, volumes, provenance })
    }

    pub fn len(&self) -> usize {
        self.t_values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.t_values.is_empty()
    }

    /// Writes `t,area,volume,provenance` rows.
    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        let io = |e: csv::Error| GeomError::Input(format!("CSV write failed: {e}"));
        w.write_record(FLOW_CSV_HEADER).map_err(io)?;
        for i in 0..self.len() {
            w.write_record([
                format_float(self.t_values[i]),
                format_float(self.areas[i]),
                format_float(self.volumes[i]),
                self.provenance.as_str().to_string(),
            ])
            .map_err(io)?;
        }
        w.flush().map_err(|e| GeomError::Input(format!("CSV write failed: {e}")))
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory cannot fail");
        String::from_utf8(buf).expect("CSV output is UTF-8")
    }

    pub fn read_csv<R: Read>(reader: R) -> Result<Self> {
        #[derive(Deserialize)]
        struct Row {
            t: f64,
            area: f64,
            volume: f64,
            provenance: Provenance,
        }
        let mut r = csv::Reader::from_reader(reader);
        let headers = r.headers().map_err(|e| GeomError::Input(format!("bad CSV header: {e}")))?;
        if headers.iter().ne(FLOW_CSV_HEADER) {
            return Err(GeomError::Input(format!("expected header {}", FLOW_CSV_HEADER.join(","))));
        }
        let mut provenance = None;
        let (mut ts, mut areas, mut volumes) = (Vec::new(), Vec::new(), Vec::new());
        for row in r.deserialize::<Row>() {
            let row = row.map_err(|e| GeomError::Input(format!("bad CSV row: {e}")))?;
            if *provenance.get_or_insert(row.provenance) != row.provenance {
                return Err(GeomError::input("mixed provenance in one flow series"));
            }
            ts.push(row.t);
            areas.push(row.area);
            volumes.push(row.volume);
        }
        FlowSeries::new(ts, areas, volumes, provenance.unwrap_or(Provenance::Analytic))
    }
}
