//! Report rows and their text/JSON renderings.
//!
//! JSON output is schema-stable and deterministic: rows are pre-sorted, all
//! maps are struct-backed, and identical invocations produce byte-identical
//! documents.

use serde::Serialize;

use bernid::{IdentityReport, Params};

/// One check result, covering both the identity suite and the
/// number-theoretic sweeps.
#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub id: String,
    pub params: RowParams,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
    pub witness: String,
}

#[derive(Debug, Clone, Copy, Default, Serialize)]
pub struct RowParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
}

impl From<Params> for RowParams {
    fn from(p: Params) -> Self {
        RowParams {
            n: p.n,
            r: p.r,
            d: p.d,
            p: p.p,
            k: None,
        }
    }
}

impl From<IdentityReport> for Row {
    fn from(report: IdentityReport) -> Self {
        Row {
            id: report.id.as_str().to_owned(),
            params: report.params.into(),
            lhs: report.lhs,
            rhs: report.rhs,
            equal: report.equal,
            witness: report.witness,
        }
    }
}

impl std::fmt::Display for RowParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let fields = [
            ("n", self.n.map(u64::from)),
            ("r", self.r.map(u64::from)),
            ("d", self.d.map(u64::from)),
            ("p", self.p),
            ("k", self.k.map(u64::from)),
        ];
        let mut first = true;
        for (name, value) in fields {
            if let Some(v) = value {
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{name}={v}")?;
                first = false;
            }
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct Summary {
    total: usize,
    failed: usize,
    all_equal: bool,
}

#[derive(Serialize)]
struct Document<'a> {
    reports: &'a [Row],
    summary: Summary,
}

/// Renders a report set to stdout. Text mode prints one verdict line per
/// row, spelling out both sides and the witness on mismatches; JSON mode
/// emits a single document with the rows plus a summary object.
pub fn print_rows(rows: &[Row], json: bool) {
    let failed = rows.iter().filter(|r| !r.equal).count();
    if json {
        let doc = Document {
            reports: rows,
            summary: Summary {
                total: rows.len(),
                failed,
                all_equal: failed == 0,
            },
        };
        println!(
            "{}",
            serde_json::to_string_pretty(&doc).expect("rows always serialize")
        );
        return;
    }
    for row in rows {
        if row.equal {
            println!("{} {}: ok", row.id, row.params);
        } else {
            println!("{} {}: MISMATCH", row.id, row.params);
            println!("  lhs: {}", row.lhs);
            println!("  rhs: {}", row.rhs);
            println!("  witness: {}", row.witness);
        }
    }
    println!(
        "summary: {} checks, {} passed, {failed} failed",
        rows.len(),
        rows.len() - failed,
    );
}

/// Renders a single computed value.
pub fn print_value(kind: &str, parameter: u32, value: &str, json: bool) {
    if json {
        #[derive(Serialize)]
        struct ValueDoc<'a> {
            kind: &'a str,
            parameter: u32,
            value: &'a str,
        }
        println!(
            "{}",
            serde_json::to_string_pretty(&ValueDoc {
                kind,
                parameter,
                value
            })
            .expect("value docs always serialize")
        );
    } else {
        println!("{value}");
    }
}

/// Renders the EGF coefficient table.
pub fn print_egf(order: u32, coefficients: &[String], json: bool) {
    if json {
        #[derive(Serialize)]
        struct EgfDoc<'a> {
            kind: &'a str,
            order: u32,
            coefficients: &'a [String],
        }
        println!(
            "{}",
            serde_json::to_string_pretty(&EgfDoc {
                kind: "egf",
                order,
                coefficients
            })
            .expect("egf docs always serialize")
        );
    } else {
        for (k, c) in coefficients.iter().enumerate() {
            println!("t^{k}: {c}");
        }
    }
}
