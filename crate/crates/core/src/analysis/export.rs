//! CSV and JSON forms of a [`GrundyTable`].
//!
//! Both layouts put one row per `a` (ascending) and one column per `b`, with
//! blank cells (CSV) or `null` (JSON) where `a > b`.

use std::io::{Read, Write};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::oracle::{GrundyTable, NimValue};

use super::AnalysisError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableFormat {
    Csv,
    Json,
}

impl FromStr for TableFormat {
    type Err = AnalysisError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(TableFormat::Csv),
            "json" => Ok(TableFormat::Json),
            other => Err(AnalysisError::InvalidArgument(format!(
                "unknown table format {other:?}"
            ))),
        }
    }
}

/// JSON document shape: `{"max_b": M, "rows": [[...], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDocument {
    pub max_b: u64,
    pub rows: Vec<Vec<Option<NimValue>>>,
}

impl TableDocument {
    pub fn from_table(table: &GrundyTable) -> Self {
        Self::leading(table, table.max_b()).expect("full table is its own prefix")
    }

    /// The leading `(max_b + 1) x (max_b + 1)` corner of `table`.
    pub fn leading(table: &GrundyTable, max_b: u64) -> Option<Self> {
        if max_b > table.max_b() {
            return None;
        }
        let rows = (0..=max_b)
            .map(|a| (0..=max_b).map(|b| table.get(a, b)).collect())
            .collect();
        Some(TableDocument { max_b, rows })
    }

    pub fn into_table(self) -> Result<GrundyTable, AnalysisError> {
        let m = self.max_b;
        let width = m as usize + 1;
        if self.rows.len() != width || self.rows.iter().any(|r| r.len() != width) {
            return Err(malformed(format!("expected a {width}x{width} grid")));
        }
        let mut values = Vec::with_capacity(GrundyTable::entries_for(m) as usize);
        for b in 0..width {
            for a in 0..width {
                match (self.rows[a][b], a <= b) {
                    (Some(v), true) => values.push(v),
                    (None, false) => {}
                    (None, true) => {
                        return Err(malformed(format!("missing value at a={a}, b={b}")))
                    }
                    (Some(_), false) => {
                        return Err(malformed(format!("unexpected value at a={a} > b={b}")))
                    }
                }
            }
        }
        Ok(GrundyTable::from_triangle(m, values)?)
    }
}

fn malformed(msg: String) -> AnalysisError {
    AnalysisError::Parse(msg)
}

pub fn export_table<W: Write>(
    table: &GrundyTable,
    format: TableFormat,
    out: W,
) -> Result<(), AnalysisError> {
    match format {
        TableFormat::Csv => write_csv(table, out),
        TableFormat::Json => serde_json::to_writer(out, &TableDocument::from_table(table))
            .map_err(|e| AnalysisError::Io(e.to_string())),
    }
}

fn write_csv<W: Write>(table: &GrundyTable, out: W) -> Result<(), AnalysisError> {
    let m = table.max_b();
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["a\\b".to_string()];
    header.extend((0..=m).map(|b| b.to_string()));
    w.write_record(&header)?;
    for a in 0..=m {
        let mut record = vec![a.to_string()];
        record.extend((0..=m).map(|b| table.get(a, b).map(|v| v.to_string()).unwrap_or_default()));
        w.write_record(&record)?;
    }
    w.flush().map_err(|e| AnalysisError::Io(e.to_string()))
}

pub fn parse_table<R: Read>(format: TableFormat, input: R) -> Result<GrundyTable, AnalysisError> {
    match format {
        TableFormat::Json => {
            let doc: TableDocument =
                serde_json::from_reader(input).map_err(|e| malformed(e.to_string()))?;
            doc.into_table()
        }
        TableFormat::Csv => read_csv(input),
    }
}

fn read_csv<R: Read>(input: R) -> Result<GrundyTable, AnalysisError> {
    let mut r = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_reader(input);
    let header = r.headers()?.clone();
    if header.get(0) != Some("a\\b") {
        return Err(malformed("header must start with a\\b".into()));
    }
    for (i, col) in header.iter().skip(1).enumerate() {
        if col != i.to_string() {
            return Err(malformed(format!(
                "column {} should be labelled {i}",
                i + 1
            )));
        }
    }
    let width = header.len() - 1;
    if width == 0 {
        return Err(malformed("table has no columns".into()));
    }
    let mut rows = Vec::with_capacity(width);
    for (a, record) in r.records().enumerate() {
        let record = record?;
        if record.get(0) != Some(a.to_string().as_str()) {
            return Err(malformed(format!("row {a} is mislabelled")));
        }
        let cells = record
            .iter()
            .skip(1)
            .map(|cell| match cell {
                "" => Ok(None),
                s => s
                    .parse::<NimValue>()
                    .map(Some)
                    .map_err(|e| malformed(format!("row {a}: {e}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(cells);
    }
    TableDocument {
        max_b: width as u64 - 1,
        rows,
    }
    .into_table()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn csv_string(t: &GrundyTable) -> String {
        let mut buf = Vec::new();
        export_table(t, TableFormat::Csv, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn small_csv_layout() {
        let t = GrundyTable::build(2).unwrap();
        assert_eq!(csv_string(&t), "a\\b,0,1,2\n0,0,0,1\n1,,0,1\n2,,,1\n");
        assert_eq!(csv_string(&GrundyTable::build(0).unwrap()), "a\\b,0\n0,0\n");
    }

    #[test]
    fn small_json_layout() {
        let mut buf = Vec::new();
        export_table(&GrundyTable::build(1).unwrap(), TableFormat::Json, &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            r#"{"max_b":1,"rows":[[0,0],[null,0]]}"#
        );
    }

    #[test]
    fn round_trip_both_formats() {
        let t = GrundyTable::build(40).unwrap();
        for format in [TableFormat::Csv, TableFormat::Json] {
            let mut buf = Vec::new();
            export_table(&t, format, &mut buf).unwrap();
            assert_eq!(
                parse_table(format, buf.as_slice()).unwrap(),
                t,
                "{format:?}"
            );
        }
    }

    #[test]
    fn rejects_values_below_the_diagonal() {
        let doc = r#"{"max_b":1,"rows":[[0,0],[3,0]]}"#;
        assert!(matches!(
            parse_table(TableFormat::Json, doc.as_bytes()),
            Err(AnalysisError::Parse(_))
        ));
        let csv = "a\\b,0,1\n0,0,\n1,,0\n";
        assert!(parse_table(TableFormat::Csv, csv.as_bytes()).is_err());
    }
}
