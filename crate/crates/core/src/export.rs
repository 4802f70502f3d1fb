//! Deterministic JSON, CSV and DOT renderings.

use std::fmt::Write;

use serde::Serialize;
use serde_json::{json, Value};

use crate::antichain::AntichainPoset;
use crate::catalan::QPolynomial;
use crate::heaviside::FiltrationReport;
use crate::root_system::RootSystem;

pub fn roots_json(rs: &RootSystem) -> Value {
    json!({
        "type": rs.dynkin().to_string(),
        "cartan": rs.cartan(),
        "coxeter_number": rs.coxeter_number(),
        "exponents": rs.exponents(),
        "highest_root": rs.highest_root_index(),
        "roots": rs.positive_roots(),
        "covers": rs.covering_relations(),
    })
}

/// Hasse diagram of `(Φ+, ≤)`, covering relations only.
pub fn roots_dot(rs: &RootSystem) -> String {
    let mut out = String::new();
    writeln!(out, "digraph \"{}\" {{", rs.dynkin()).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=plaintext];").unwrap();
    for (i, r) in rs.positive_roots().iter().enumerate() {
        writeln!(out, "  r{i} [label=\"{}\"];", r.label()).unwrap();
    }
    for (a, b) in rs.covering_relations() {
        writeln!(out, "  r{a} -> r{b};").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn antichains_json(ap: &AntichainPoset) -> Value {
    let covers = ap.covering_relations();
    let mut adjacency = vec![Vec::new(); ap.len()];
    for (i, j) in covers {
        adjacency[i].push(j);
    }
    json!({
        "type": ap.root_system().dynkin().to_string(),
        "count": ap.len(),
        "antichains": ap.antichains(),
        "ideal_sizes": ap.ideal_sizes(),
        "covers": adjacency,
    })
}

/// Hasse diagram of the antichains ordered by inclusion of their ideals.
/// Nodes are labelled by the antichain, smallest ideal at the bottom.
pub fn antichains_dot(ap: &AntichainPoset) -> String {
    let rs = ap.root_system();
    let mut out = String::new();
    writeln!(out, "digraph \"antichains_{}\" {{", rs.dynkin()).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=box];").unwrap();
    for (i, p) in ap.antichains().iter().enumerate() {
        writeln!(out, "  p{i} [label=\"{}\"];", p.label(rs)).unwrap();
    }
    for (i, j) in ap.covering_relations() {
        writeln!(out, "  p{i} -> p{j};").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn matrix_csv<T: ToString>(m: &[Vec<T>]) -> String {
    let mut out = String::new();
    for row in m {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

pub fn matrix_text<T: ToString>(m: &[Vec<T>]) -> String {
    let cells: Vec<Vec<String>> = m
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    let mut out = String::new();
    for row in cells {
        let padded: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        out.push_str(&padded.join(" "));
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalanRow {
    #[serde(rename = "type")]
    pub dynkin: String,
    pub rank: usize,
    pub coxeter_number: usize,
    pub exponents: Vec<usize>,
    pub catalan: u128,
}

pub fn catalan_row(rs: &RootSystem) -> crate::Result<CatalanRow> {
    Ok(CatalanRow {
        dynkin: rs.dynkin().to_string(),
        rank: rs.rank(),
        coxeter_number: rs.coxeter_number(),
        exponents: rs.exponents().to_vec(),
        catalan: crate::catalan::catalan_number(rs)?,
    })
}

pub fn catalan_csv(rows: &[CatalanRow]) -> String {
    let mut out = String::from("type,rank,coxeter_number,exponents,catalan\n");
    for r in rows {
        let exps: Vec<String> = r.exponents.iter().map(ToString::to_string).collect();
        writeln!(
            out,
            "{},{},{},{},{}",
            r.dynkin,
            r.rank,
            r.coxeter_number,
            exps.join(" "),
            r.catalan
        )
        .unwrap();
    }
    out
}

pub fn qpoly_csv(q: &QPolynomial) -> String {
    let mut out = String::from("degree,coefficient\n");
    for (k, c) in q.coeffs().iter().enumerate() {
        writeln!(out, "{k},{c}").unwrap();
    }
    out
}

pub fn filtration_csv(report: &FiltrationReport) -> String {
    let mut out = String::from("k,rank\n");
    for (k, r) in report.ranks.iter().enumerate() {
        writeln!(out, "{k},{r}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;

    #[test]
    fn a2_roots_dot() {
        let rs = RootSystem::from_name("A2").unwrap();
        let dot = roots_dot(&rs);
        assert!(dot.contains("r0 -> r2;"));
        assert!(dot.contains("r1 -> r2;"));
        assert!(!dot.contains("r0 -> r1;"));
    }

    #[test]
    fn a3_antichain_dot_has_fourteen_nodes() {
        let rs = Arc::new(RootSystem::from_name("A3").unwrap());
        let ap = AntichainPoset::enumerate(rs);
        let dot = antichains_dot(&ap);
        assert_eq!(dot.matches("[label=").count(), 14);
        assert_eq!(dot.matches(" -> ").count(), ap.covering_relations().len());
    }

    #[test]
    fn csv_layout() {
        assert_eq!(matrix_csv(&[vec![1, -1], vec![0, 1]]), "1,-1\n0,1\n");
        let q = QPolynomial::from_coeffs(vec![1, 1]);
        assert_eq!(qpoly_csv(&q), "degree,coefficient\n0,1\n1,1\n");
    }
}
