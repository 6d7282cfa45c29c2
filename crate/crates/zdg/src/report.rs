//! CSV and JSON renderings of verification reports.

use serde::Serialize;
use zdg_core::harness::{CheckResult, InvariantRow, RingReport, Summary, VerificationReport};

pub const CSV_COLUMNS: [&str; 10] = [
    "spec",
    "order",
    "z_star",
    "gamma",
    "gamma_t",
    "girth",
    "diameter",
    "z2xD",
    "ann_witness",
    "checks_failed",
];

/// One CSV line. Skip rows leave every computed column empty.
#[derive(Debug, Serialize)]
pub struct CsvRecord {
    pub spec: String,
    pub order: String,
    pub z_star: String,
    pub gamma: String,
    pub gamma_t: String,
    pub girth: String,
    pub diameter: String,
    #[serde(rename = "z2xD")]
    pub z2xd: String,
    pub ann_witness: String,
    pub checks_failed: String,
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

impl CsvRecord {
    pub fn from_row(row: &InvariantRow, failed: &[&CheckResult]) -> CsvRecord {
        CsvRecord {
            spec: row.spec.clone(),
            order: row.order.to_string(),
            z_star: row.z_star.to_string(),
            gamma: row.gamma.to_string(),
            gamma_t: row.gamma_t.to_string(),
            girth: row.girth.to_string(),
            diameter: row.diameter.to_string(),
            z2xd: row.z2xd.is_some().to_string(),
            ann_witness: row.ann_witness.clone().unwrap_or_default(),
            checks_failed: failed
                .iter()
                .map(|c| c.name.as_str())
                .collect::<Vec<_>>()
                .join(";"),
        }
    }

    pub fn from_report(r: &RingReport) -> CsvRecord {
        let failed: Vec<&CheckResult> = r.failed_checks().collect();
        match &r.row {
            Some(row) => CsvRecord::from_row(row, &failed),
            None => CsvRecord {
                spec: r.spec.clone(),
                order: opt(r.order),
                z_star: opt(r.order.map(|_| 0)),
                gamma: String::new(),
                gamma_t: String::new(),
                girth: String::new(),
                diameter: String::new(),
                z2xd: String::new(),
                ann_witness: String::new(),
                checks_failed: String::new(),
            },
        }
    }
}

pub fn write_csv<W: std::io::Write>(report: &VerificationReport, out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    if report.rings.is_empty() {
        w.write_record(CSV_COLUMNS)?;
    }
    for r in &report.rings {
        w.serialize(CsvRecord::from_report(r))?;
    }
    w.flush()?;
    Ok(())
}

pub fn to_csv(report: &VerificationReport) -> String {
    let mut buf = Vec::new();
    write_csv(report, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("csv is utf-8")
}

#[derive(Serialize)]
struct JsonRing<'a> {
    #[serde(flatten)]
    csv: CsvRecord,
    skip_reason: Option<&'a str>,
    row: Option<&'a InvariantRow>,
    checks: &'a [CheckResult],
}

#[derive(Serialize)]
struct JsonReport<'a> {
    rings: Vec<JsonRing<'a>>,
    summary: &'a Summary,
}

pub fn to_json(report: &VerificationReport) -> String {
    let doc = JsonReport {
        rings: report
            .rings
            .iter()
            .map(|r| JsonRing {
                csv: CsvRecord::from_report(r),
                skip_reason: r.skip_reason.as_deref(),
                row: r.row.as_ref(),
                checks: &r.checks,
            })
            .collect(),
        summary: &report.summary,
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
    s.push('\n');
    s
}
