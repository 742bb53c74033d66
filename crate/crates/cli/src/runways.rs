//! Runway database: whitespace-separated table of thresholds.
//!
//! Columns: id, latitude (deg), longitude (deg), true course (deg),
//! elevation (ft). `#` starts a comment line.

use std::path::Path;

use glidepath_core::geodesy::GeoPosition;
use glidepath_core::planner::RunwaySpec;

use crate::CliError;

pub fn load_runways(path: &Path) -> Result<Vec<RunwaySpec>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    let mut out: Vec<RunwaySpec> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 5 {
            return Err(CliError::Value {
                path: path.display().to_string(),
                row: lineno + 1,
                column: "*".to_string(),
                message: format!("expected 5 fields, got {}", fields.len()),
            });
        }
        let num = |i: usize, name: &str| -> Result<f64, CliError> {
            fields[i].parse::<f64>().map_err(|_| CliError::Value {
                path: path.display().to_string(),
                row: lineno + 1,
                column: name.to_string(),
                message: format!("not a number: {:?}", fields[i]),
            })
        };
        let lat = num(1, "lat_deg")?;
        let lon = num(2, "lon_deg")?;
        let heading = num(3, "true_heading_deg")?;
        let elevation = num(4, "elevation_ft")?;
        let id = fields[0].to_string();
        if out.iter().any(|r| r.id == id) {
            return Err(CliError::Value {
                path: path.display().to_string(),
                row: lineno + 1,
                column: "id".to_string(),
                message: format!("duplicate runway id {id:?}"),
            });
        }
        out.push(RunwaySpec::new(id, GeoPosition::new(lat, lon, elevation), heading, elevation));
    }
    if out.is_empty() {
        return Err(CliError::Schema(format!("no runways in {}", path.display())));
    }
    out.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn write_db(text: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::Builder::new().suffix(".tsv").tempfile().unwrap();
        f.write_all(text.as_bytes()).unwrap();
        f
    }

    #[test]
    fn loads_sorted_runways_skipping_comments() {
        let f = write_db(
            "# id lat lon hdg elev\nLGA22\t40.786317\t-73.873069\t211.4\t13\nLGA4 40.7699 -73.8863 31.4 11\n",
        );
        let rws = load_runways(f.path()).unwrap();
        assert_eq!(rws.len(), 2);
        assert_eq!(rws[0].id, "LGA22");
        assert_eq!(rws[1].id, "LGA4");
        assert_eq!(rws[0].elevation_ft, 13.0);
        assert_eq!(rws[0].threshold.alt_ft, 13.0);
        assert_eq!(rws[1].true_heading_deg, 31.4);
    }

    #[test]
    fn field_count_and_numbers_are_checked() {
        let short = write_db("LGA4 40.7699 -73.8863 31.4\n");
        assert!(matches!(load_runways(short.path()), Err(CliError::Value { row: 1, .. })));
        let bad = write_db("LGA4 forty -73.8863 31.4 11\n");
        let err = load_runways(bad.path()).unwrap_err();
        assert!(matches!(err, CliError::Value { ref column, .. } if column == "lat_deg"));
    }

    #[test]
    fn empty_db_is_a_schema_error() {
        let f = write_db("# only comments\n");
        assert!(matches!(load_runways(f.path()), Err(CliError::Schema(_))));
    }

    #[test]
    fn duplicate_ids_are_rejected() {
        let f = write_db("LGA4 40.7699 -73.8863 31.4 11\nLGA4 40.77 -73.88 31.4 11\n");
        assert!(matches!(load_runways(f.path()), Err(CliError::Value { row: 2, .. })));
    }
}
