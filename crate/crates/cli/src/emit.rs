//! JSON is the canonical output; csv and table are projections of it.

use crate::commands::{Output, Table};
use crate::Format;

pub fn render(out: &Output, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&out.report).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Csv => match &out.table {
            Some(t) => csv_of(&t.headers, &t.rows),
            None => csv_of(&result_headers(), &result_rows(out)),
        },
        Format::Table => {
            let mut s = String::new();
            s.push_str(&format!("{}  {}\n", out.report.command, if out.report.pass { "PASS" } else { "FAIL" }));
            for (k, v) in &out.report.params {
                s.push_str(&format!("  {k} = {}\n", v.as_str().map(String::from).unwrap_or_else(|| v.to_string())));
            }
            s.push('\n');
            if let Some(t) = &out.table {
                s.push_str(&aligned(t));
                s.push('\n');
            }
            s.push_str(&aligned(&Table {
                headers: result_headers(),
                rows: result_rows(out),
            }));
            s
        }
    }
}

fn result_headers() -> Vec<String> {
    ["name", "pass", "witness"].map(String::from).to_vec()
}

fn result_rows(out: &Output) -> Vec<Vec<String>> {
    out.report
        .results
        .iter()
        .map(|r| vec![r.name.clone(), r.pass.to_string(), r.witness.clone().unwrap_or_default()])
        .collect()
}

fn csv_of(headers: &[String], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(headers).expect("in-memory write");
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf8 input")
}

fn aligned(t: &Table) -> String {
    let mut widths: Vec<usize> = t.headers.iter().map(String::len).collect();
    for row in &t.rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: &[String]| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        format!("{}\n", padded.join("  ").trim_end())
    };
    let mut s = line(&t.headers);
    for row in &t.rows {
        s.push_str(&line(row));
    }
    s
}
