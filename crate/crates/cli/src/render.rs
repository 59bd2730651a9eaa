use std::fmt::Write as _;

use caput_core::{CharacterMatrix, CycleType, Partition};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

/// Table as JSON. Keys are declared in lexicographic order so that a
/// generic parse and re-serialize reproduces the same bytes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub classes: Vec<Vec<usize>>,
    pub n: usize,
    pub rows: Vec<RowJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowJson {
    pub lambda: Vec<usize>,
    pub values: Vec<String>,
}

impl From<&CharacterMatrix> for TableJson {
    fn from(m: &CharacterMatrix) -> Self {
        Self {
            classes: m.col_labels.iter().map(|c| c.to_partition().parts().to_vec()).collect(),
            n: m.n,
            rows: m
                .row_labels
                .iter()
                .zip(&m.values)
                .map(|(lambda, values)| RowJson {
                    lambda: lambda.parts().to_vec(),
                    values: values.iter().map(BigUint::to_string).collect(),
                })
                .collect(),
        }
    }
}

pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

pub fn partitions_text(ps: &[Partition]) -> String {
    ps.iter().map(|p| format!("{p}\n")).collect()
}

pub fn partitions_csv(ps: &[Partition]) -> String {
    ps.iter().map(|p| format!("{}\n", join(p.parts(), ","))).collect()
}

pub fn partitions_json(ps: &[Partition]) -> String {
    let parts: Vec<&[usize]> = ps.iter().map(Partition::parts).collect();
    serde_json::to_string(&parts).expect("plain integers serialize")
}

pub fn table_text(m: &CharacterMatrix) -> String {
    let mut out = String::new();
    let header: Vec<String> = m.col_labels.iter().map(CycleType::class_label).collect();
    let _ = writeln!(out, "\t{}", header.join("\t"));
    for (lambda, row) in m.row_labels.iter().zip(&m.values) {
        let _ = writeln!(out, "{lambda}\t{}", join(row, "\t"));
    }
    out
}

pub fn table_csv(m: &CharacterMatrix) -> String {
    let mut out = String::new();
    let header: Vec<String> = m.col_labels.iter().map(|c| csv_field(&c.class_label())).collect();
    let _ = writeln!(out, "lambda,{}", header.join(","));
    for (lambda, row) in m.row_labels.iter().zip(&m.values) {
        let _ = writeln!(out, "{},{}", csv_field(&lambda.to_string()), join(row, ","));
    }
    out
}

pub fn table_json(m: &CharacterMatrix) -> String {
    serde_json::to_string(&TableJson::from(m)).expect("strings and integers serialize")
}
