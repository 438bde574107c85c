use std::path::Path;

use super::VerificationReport;
use crate::error::{Error, Result};

pub fn reports_to_json(reports: &[VerificationReport]) -> Result<String> {
    serde_json::to_string_pretty(reports).map_err(|e| Error::Config(e.to_string()))
}

pub fn reports_from_json(text: &str) -> Result<Vec<VerificationReport>> {
    serde_json::from_str(text).map_err(|e| Error::Config(format!("malformed report: {e}")))
}

/// One row per report; the case parameters are embedded as JSON.
pub fn reports_to_csv(reports: &[VerificationReport]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| Error::Config(e.to_string());
    w.write_record([
        "theorem",
        "case",
        "target",
        "verdict",
        "suspended_by",
        "predicted",
        "computed",
        "torsion_found",
        "faces",
        "millis",
    ])
    .map_err(csv_err)?;
    for r in reports {
        let case = serde_json::to_string(&r.case).map_err(|e| Error::Config(e.to_string()))?;
        let faces: Vec<String> = r.faces.values().map(ToString::to_string).collect();
        let verdict = serde_json::to_value(r.verdict).map_err(|e| Error::Config(e.to_string()))?;
        w.write_record([
            r.case.theorem_id().to_string(),
            case,
            r.target.clone(),
            verdict.as_str().unwrap_or_default().to_string(),
            r.suspended_by.to_string(),
            r.predicted.to_string(),
            r.computed.to_string(),
            r.torsion_found.to_string(),
            faces.join(" "),
            r.millis.to_string(),
        ])
        .map_err(csv_err)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Config(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Config(e.to_string()))
}

/// Write `report.json` and `report.csv` into `dir`.
pub fn write_artifacts(reports: &[VerificationReport], dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    std::fs::write(dir.join("report.json"), reports_to_json(reports)?)?;
    std::fs::write(dir.join("report.csv"), reports_to_csv(reports)?)?;
    Ok(())
}
