//! Reading surface specs and parsing grid arguments.

use std::fs;
use std::path::Path;

use anyhow::Result;
use minkflow_core::flow::{uniform_grid, validity_window};
use minkflow_core::{GeomError, RadialGraphSpec, SpaceKind};
use serde_json::Value;

use crate::usage;

pub const DEFAULT_SUBDIVISION: u32 = 5;
pub const SUBDIVISION_RANGE: std::ops::RangeInclusive<u32> = 2..=8;

pub fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

/// Loads a surface spec. The file may carry its own `subdivision`; an
/// explicit command-line value wins over it.
pub fn load_surface(path: &Path, cli_subdivision: Option<u32>) -> Result<(RadialGraphSpec, u32)> {
    let text = read_text(path)?;
    let mut value: Value =
        serde_json::from_str(&text).map_err(|e| usage(format!("{}: malformed JSON: {e}", path.display())))?;
    let file_subdivision = match value.as_object_mut().and_then(|o| o.remove("subdivision")) {
        None => None,
        Some(v) => Some(
            v.as_u64()
                .and_then(|n| u32::try_from(n).ok())
                .ok_or_else(|| usage(format!("{}: subdivision must be a small integer", path.display())))?,
        ),
    };
    let spec: RadialGraphSpec = serde_json::from_value(value)
        .map_err(|e| usage(format!("{}: not a surface spec: {e}", path.display())))?;
    spec.validate().map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let subdivision = cli_subdivision.or(file_subdivision).unwrap_or(DEFAULT_SUBDIVISION);
    if !SUBDIVISION_RANGE.contains(&subdivision) {
        return Err(usage(format!(
            "subdivision must lie in {}..={}, got {subdivision}",
            SUBDIVISION_RANGE.start(),
            SUBDIVISION_RANGE.end()
        )));
    }
    Ok((spec, subdivision))
}

/// Problems with the caller's numbers become usage errors; anything else
/// is an internal failure.
pub fn classify(e: GeomError) -> anyhow::Error {
    match e {
        GeomError::Input(_) | GeomError::Domain(_) | GeomError::Spec(_) => usage(e.to_string()),
        other => other.into(),
    }
}

/// Parses `start:stop:count` into a uniform grid inside the flow window.
pub fn parse_grid(text: &str, space: SpaceKind) -> Result<Vec<f64>> {
    let parts: Vec<&str> = text.split(':').collect();
    let bad = || usage(format!("grid must look like start:stop:count, got '{text}'"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let start: f64 = parts[0].trim().parse().map_err(|_| bad())?;
    let stop: f64 = parts[1].trim().parse().map_err(|_| bad())?;
    let count: usize = parts[2].trim().parse().map_err(|_| bad())?;
    let grid = uniform_grid(start, stop, count).map_err(|e| usage(e.to_string()))?;
    let window = validity_window(space);
    if let Some(t) = grid.iter().find(|&&t| !window.contains(t)) {
        return Err(usage(format!("grid time {t} lies outside the {space} flow window {window}")));
    }
    Ok(grid)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_parsing() {
        let g = parse_grid("0:2:9", SpaceKind::Euclidean).unwrap();
        assert_eq!(g.len(), 9);
        assert_eq!(g[8], 2.0);
        assert!(parse_grid("0:2", SpaceKind::Euclidean).is_err());
        assert!(parse_grid("0:2:x", SpaceKind::Euclidean).is_err());
        assert!(parse_grid("0:2:9", SpaceKind::Spherical).is_err());
        assert!(parse_grid("0:1.5:4", SpaceKind::Spherical).is_ok());
    }
}
