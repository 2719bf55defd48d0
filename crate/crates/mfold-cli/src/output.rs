//! Output formatting: aligned text tables, JSON with decimal-string counts,
//! and CSV with the fixed header `d,m,theta,r,count`.

use clap::ValueEnum;
use serde::Serialize;

use mfold::verify::Report;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// One computed count, in the fixed field order shared by every format.
#[derive(Debug, Clone, Serialize)]
pub struct Record {
    pub d: i64,
    pub m: i64,
    pub theta: i64,
    pub r: i64,
    pub count: String,
}

const HEADER: [&str; 5] = ["d", "m", "theta", "r", "count"];

/// Print records; `as_list` controls whether JSON output is an array (table
/// command) or a single object (count and oracle commands).
pub fn print_records(records: &[Record], format: Format, as_list: bool) {
    match format {
        Format::Table => print_text(records),
        Format::Csv => print_csv(records),
        Format::Json => {
            if as_list {
                println!("{}", serde_json::to_string(records).unwrap());
            } else {
                println!("{}", serde_json::to_string(&records[0]).unwrap());
            }
        }
    }
}

fn print_text(records: &[Record]) {
    let mut widths: Vec<usize> = HEADER.iter().map(|h| h.len()).collect();
    let cells: Vec<[String; 5]> = records
        .iter()
        .map(|rec| {
            [
                rec.d.to_string(),
                rec.m.to_string(),
                rec.theta.to_string(),
                rec.r.to_string(),
                rec.count.clone(),
            ]
        })
        .collect();
    for row in &cells {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let emit = |row: &[String]| {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:>w$}", w = w))
            .collect();
        println!("{}", line.join("  "));
    };
    emit(&HEADER.map(String::from));
    for row in &cells {
        emit(row);
    }
}

fn print_csv(records: &[Record]) {
    println!("{}", HEADER.join(","));
    for rec in records {
        println!("{},{},{},{},{}", rec.d, rec.m, rec.theta, rec.r, rec.count);
    }
}

/// Extra section of the verification output covering the persistent cache.
#[derive(Debug, Clone, Serialize)]
pub struct CacheCheck {
    pub entries: usize,
    pub mismatches: Vec<CacheMismatch>,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CacheMismatch {
    pub d: i64,
    pub m: i64,
    pub theta: i64,
    pub r: i64,
    pub stored: String,
    pub recomputed: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyOutput {
    #[serde(flatten)]
    pub report: Report,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cache: Option<CacheCheck>,
}

pub fn print_verify(out: &VerifyOutput, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(out).unwrap()),
        Format::Csv => print_verify_csv(out),
        Format::Table => print_verify_text(out),
    }
}

fn print_verify_text(out: &VerifyOutput) {
    let mut cells = 0;
    let mut failures = 0;
    for table in &out.report.tables {
        cells += table.rows.len();
        let ok = table.rows.iter().filter(|r| r.passed).count();
        println!(
            "table {:<13} {}/{} cells ok",
            table.name,
            ok,
            table.rows.len()
        );
        for row in table.rows.iter().filter(|r| !r.passed) {
            failures += 1;
            println!(
                "  FAIL cell ({}, {}, {}, {}): expected {}, computed {}",
                row.d, row.m, row.theta, row.r, row.expected, row.computed
            );
        }
    }
    for check in &out.report.identities.checks {
        if check.passed {
            println!("identity ok    {}", check.label);
        } else {
            failures += 1;
            println!(
                "identity FAIL  {}: {} != {}",
                check.label, check.lhs, check.rhs
            );
        }
    }
    if let Some(cache) = &out.cache {
        println!("cache {} entries checked", cache.entries);
        for miss in &cache.mismatches {
            failures += 1;
            println!(
                "  FAIL cache entry ({}, {}, {}, {}): stored {}, recomputed {}",
                miss.d, miss.m, miss.theta, miss.r, miss.stored, miss.recomputed
            );
        }
    }
    let identities = out.report.identities.checks.len();
    if failures == 0 {
        println!("verify: PASS ({cells} table cells, {identities} identities)");
    } else {
        println!("verify: FAIL ({failures} mismatches)");
    }
}

fn print_verify_csv(out: &VerifyOutput) {
    println!("kind,name,d,m,theta,r,expected,computed,passed");
    for table in &out.report.tables {
        for row in &table.rows {
            println!(
                "table,{},{},{},{},{},{},{},{}",
                table.name, row.d, row.m, row.theta, row.r, row.expected, row.computed, row.passed
            );
        }
    }
    for check in &out.report.identities.checks {
        println!(
            "identity,\"{}\",,,,,{},{},{}",
            check.label, check.rhs, check.lhs, check.passed
        );
    }
    if let Some(cache) = &out.cache {
        for miss in &cache.mismatches {
            println!(
                "cache,memo,{},{},{},{},{},{},false",
                miss.d, miss.m, miss.theta, miss.r, miss.stored, miss.recomputed
            );
        }
    }
}
