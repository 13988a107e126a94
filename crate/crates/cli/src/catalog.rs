//! Exoplanet catalog ingestion.
//!
//! Catalogs are UTF-8 CSV files with a header row. A [`ColumnMapping`]
//! names the header of each field; the default matches the PHL Habitable
//! Exoplanets Catalog. Rows that cannot be parsed are skipped and reported,
//! never fatal.

use std::fs;
use std::path::{Path, PathBuf};

use evohab_core::cdhs::PlanetParams;
use serde::{Deserialize, Serialize};

/// Earth's mean surface temperature used to normalize Kelvin readings.
pub const EARTH_MEAN_SURFACE_TEMP_K: f64 = 288.0;

#[derive(Debug, thiserror::Error)]
pub enum CatalogError {
    #[error("catalog file not found: {}", .0.display())]
    FileNotFound(PathBuf),
    #[error("catalog header is missing mapped column(s): {}", .missing.join(", "))]
    MalformedHeader { missing: Vec<String> },
    #[error("invalid column mapping: {0}")]
    InvalidMapping(String),
    #[error("record is missing {0}")]
    MissingField(&'static str),
    #[error("{field} must be strictly positive, got {value}")]
    NonPositiveValue { field: &'static str, value: f64 },
    #[error("failed to read catalog: {0}")]
    Csv(#[from] csv::Error),
    #[error("failed to read mapping file: {0}")]
    Io(#[from] std::io::Error),
}

/// One catalog row. Numeric fields are absent when the cell was empty.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlanetRecord {
    pub name: String,
    pub radius_eu: Option<f64>,
    pub density_eu: Option<f64>,
    pub escape_velocity_eu: Option<f64>,
    pub surface_temp_kelvin: Option<f64>,
    pub surface_temp_eu: Option<f64>,
}

/// Header name for each record field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColumnMapping {
    pub name: String,
    pub radius: String,
    pub density: String,
    pub escape_velocity: String,
    pub surface_temp_kelvin: Option<String>,
    pub surface_temp_eu: Option<String>,
}

impl Default for ColumnMapping {
    fn default() -> Self {
        Self {
            name: "P_NAME".into(),
            radius: "P_RADIUS".into(),
            density: "P_DENSITY".into(),
            escape_velocity: "P_ESCAPE".into(),
            surface_temp_kelvin: Some("P_TEMP_SURF".into()),
            surface_temp_eu: None,
        }
    }
}

impl ColumnMapping {
    /// Sets one field from a `key=value` assignment. An empty value clears
    /// an optional temperature column.
    pub fn apply(&mut self, assignment: &str) -> Result<(), CatalogError> {
        let (key, value) = assignment.split_once('=').ok_or_else(|| {
            CatalogError::InvalidMapping(format!("expected key=value, got `{assignment}`"))
        })?;
        let (key, value) = (key.trim(), value.trim().to_string());
        let optional = if value.is_empty() {
            None
        } else {
            Some(value.clone())
        };
        let required = |v: String| {
            if v.is_empty() {
                Err(CatalogError::InvalidMapping(format!(
                    "`{key}` needs a column name"
                )))
            } else {
                Ok(v)
            }
        };
        match key {
            "name" => self.name = required(value)?,
            "radius" => self.radius = required(value)?,
            "density" => self.density = required(value)?,
            "escape_velocity" => self.escape_velocity = required(value)?,
            "surface_temp_kelvin" => self.surface_temp_kelvin = optional,
            "surface_temp_eu" => self.surface_temp_eu = optional,
            other => {
                return Err(CatalogError::InvalidMapping(format!(
                    "unknown key `{other}` (expected name, radius, density, escape_velocity, surface_temp_kelvin, surface_temp_eu)"
                )))
            }
        }
        Ok(())
    }

    /// Reads `key=value` lines; blank lines and `#` comments are ignored.
    pub fn apply_file(&mut self, path: &Path) -> Result<(), CatalogError> {
        let text = fs::read_to_string(path)?;
        for line in text.lines().map(str::trim) {
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            self.apply(line)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkippedRow {
    /// 1-based data row number (the header is row 0).
    pub row: usize,
    pub reason: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CatalogReport {
    pub loaded: usize,
    pub skipped: Vec<SkippedRow>,
}

impl CatalogReport {
    pub fn total_rows(&self) -> usize {
        self.loaded + self.skipped.len()
    }
}

struct Columns {
    name: usize,
    radius: usize,
    density: usize,
    escape_velocity: usize,
    temp_kelvin: Option<usize>,
    temp_eu: Option<usize>,
}

fn resolve_columns(
    headers: &csv::StringRecord,
    mapping: &ColumnMapping,
) -> Result<Columns, CatalogError> {
    let find = |h: &str| headers.iter().position(|c| c.trim() == h);
    let mut missing = Vec::new();
    let mut need = |h: &str| {
        find(h).unwrap_or_else(|| {
            missing.push(h.to_string());
            usize::MAX
        })
    };
    let name = need(&mapping.name);
    let radius = need(&mapping.radius);
    let density = need(&mapping.density);
    let escape_velocity = need(&mapping.escape_velocity);
    let temp_kelvin = mapping.surface_temp_kelvin.as_deref().and_then(find);
    let temp_eu = mapping.surface_temp_eu.as_deref().and_then(find);
    if temp_kelvin.is_none() && temp_eu.is_none() {
        let names: Vec<&str> = [
            mapping.surface_temp_kelvin.as_deref(),
            mapping.surface_temp_eu.as_deref(),
        ]
        .into_iter()
        .flatten()
        .collect();
        missing.push(if names.is_empty() {
            "<surface temperature>".to_string()
        } else {
            names.join(" or ")
        });
    }
    if !missing.is_empty() {
        return Err(CatalogError::MalformedHeader { missing });
    }
    Ok(Columns {
        name,
        radius,
        density,
        escape_velocity,
        temp_kelvin,
        temp_eu,
    })
}

fn parse_cell(
    record: &csv::StringRecord,
    index: Option<usize>,
    label: &str,
) -> Result<Option<f64>, String> {
    let Some(cell) = index.and_then(|i| record.get(i)).map(str::trim) else {
        return Ok(None);
    };
    if cell.is_empty() {
        return Ok(None);
    }
    match cell.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(Some(v)),
        _ => Err(format!("unparseable {label}")),
    }
}

fn parse_row(record: &csv::StringRecord, cols: &Columns) -> Result<PlanetRecord, String> {
    let name = record.get(cols.name).map(str::trim).unwrap_or("");
    if name.is_empty() {
        return Err("missing name".into());
    }
    Ok(PlanetRecord {
        name: name.to_string(),
        radius_eu: parse_cell(record, Some(cols.radius), "radius")?,
        density_eu: parse_cell(record, Some(cols.density), "density")?,
        escape_velocity_eu: parse_cell(record, Some(cols.escape_velocity), "escape velocity")?,
        surface_temp_kelvin: parse_cell(record, cols.temp_kelvin, "surface temperature")?,
        surface_temp_eu: parse_cell(record, cols.temp_eu, "surface temperature (EU)")?,
    })
}

pub fn load_catalog(
    path: &Path,
    mapping: &ColumnMapping,
) -> Result<(Vec<PlanetRecord>, CatalogReport), CatalogError> {
    if !path.is_file() {
        return Err(CatalogError::FileNotFound(path.to_path_buf()));
    }
    let mut reader = csv::ReaderBuilder::new().flexible(true).from_path(path)?;
    let headers = reader.headers()?.clone();
    let cols = resolve_columns(&headers, mapping)?;

    let mut records = Vec::new();
    let mut report = CatalogReport::default();
    for (i, row) in reader.records().enumerate() {
        let parsed = row
            .map_err(|e| format!("malformed row: {e}"))
            .and_then(|r| parse_row(&r, &cols));
        match parsed {
            Ok(record) => {
                records.push(record);
                report.loaded += 1;
            }
            Err(reason) => report.skipped.push(SkippedRow { row: i + 1, reason }),
        }
    }
    Ok((records, report))
}

/// Converts a record to model inputs, normalizing Kelvin temperatures by
/// `earth_temp_k` when no Earth-Unit temperature is present.
pub fn to_planet_params(
    record: &PlanetRecord,
    earth_temp_k: f64,
) -> Result<PlanetParams, CatalogError> {
    let radius = record
        .radius_eu
        .ok_or(CatalogError::MissingField("radius"))?;
    let density = record
        .density_eu
        .ok_or(CatalogError::MissingField("density"))?;
    let escape_velocity = record
        .escape_velocity_eu
        .ok_or(CatalogError::MissingField("escape_velocity"))?;
    let surface_temp = match (record.surface_temp_eu, record.surface_temp_kelvin) {
        (Some(eu), _) => eu,
        (None, Some(kelvin)) => kelvin / earth_temp_k,
        (None, None) => return Err(CatalogError::MissingField("surface_temp")),
    };
    for (field, value) in [
        ("radius", radius),
        ("density", density),
        ("escape_velocity", escape_velocity),
        ("surface_temp", surface_temp),
    ] {
        if !(value.is_finite() && value > 0.0) {
            return Err(CatalogError::NonPositiveValue { field, value });
        }
    }
    Ok(PlanetParams {
        radius,
        density,
        escape_velocity,
        surface_temp,
    })
}

fn normalize_name(name: &str) -> String {
    name.split_whitespace()
        .collect::<Vec<_>>()
        .join(" ")
        .to_lowercase()
}

#[derive(Debug, Clone, PartialEq)]
pub struct Selection {
    /// Matches in query order.
    pub found: Vec<PlanetRecord>,
    pub not_found: Vec<String>,
}

/// Case-insensitive, whitespace-normalized lookup by name.
pub fn select_planets(records: &[PlanetRecord], names: &[String]) -> Selection {
    let mut found = Vec::new();
    let mut not_found = Vec::new();
    for query in names {
        let key = normalize_name(query);
        match records.iter().find(|r| normalize_name(&r.name) == key) {
            Some(r) => found.push(r.clone()),
            None => not_found.push(query.clone()),
        }
    }
    Selection { found, not_found }
}
