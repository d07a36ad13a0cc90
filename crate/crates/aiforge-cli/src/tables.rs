//! Golden fixtures for the two published function families, embedded
//! verbatim, plus the verification routines behind `verify-table`.
//!
//! Table 1: the sixteen functions on 12 variables (k = 6, d = 6) with
//! maximum algebraic immunity, given as SVV and SANF strings. Table 2: the
//! eight fixed prefix/suffix patterns of the k = 13, d = 5 family on 26
//! variables, with '?' marking the 17 unconstrained middle positions.

use aiforge::ai::{certify_ai_lower_bound, compute_ai_exact, CertificateReport};
use aiforge::boolfun::SymmetricFunction;
use aiforge::construction::{construct_function, enumerate_params, ConstructionParams};

pub const TABLE1_K: usize = 6;
pub const TABLE1_D: usize = 6;
pub const TABLE1_AI: usize = 6;
pub const TABLE2_K: usize = 13;
pub const TABLE2_D: usize = 5;

const TABLE1_TEXT: &str = include_str!("../resources/table1.txt");
const TABLE2_TEXT: &str = include_str!("../resources/table2.txt");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table1Row {
    pub label: String,
    pub svv: String,
    pub sanf: String,
}

pub fn table1_rows() -> Vec<Table1Row> {
    TABLE1_TEXT
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let mut it = l.split_whitespace();
            Table1Row {
                label: it.next().expect("label").to_string(),
                svv: it.next().expect("svv").to_string(),
                sanf: it.next().expect("sanf").to_string(),
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table2Pattern {
    pub label: String,
    pub pattern: String,
}

pub fn table2_patterns() -> Vec<Table2Pattern> {
    TABLE2_TEXT
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let mut it = l.split_whitespace();
            Table2Pattern {
                label: it.next().expect("label").to_string(),
                pattern: it.next().expect("pattern").to_string(),
            }
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct VerifyOutcome {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl VerifyOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Enumerates the (6, 6) family and matches it against the embedded rows:
/// SVV set equality, byte-for-byte SANF agreement per function, and exact
/// immunity 6 for every member.
pub fn verify_table1() -> VerifyOutcome {
    let rows = table1_rows();
    let mut failures = Vec::new();
    let generated: Vec<(String, String)> = enumerate_params(TABLE1_K, TABLE1_D)
        .expect("(6, 6) is a valid pair")
        .map(|p| {
            let f = construct_function(&p);
            (f.svv_string(), f.to_sanf().lambda_string())
        })
        .collect();

    if generated.len() != rows.len() {
        failures.push(format!(
            "family size {} does not match the {} fixture rows",
            generated.len(),
            rows.len()
        ));
    }
    for row in &rows {
        match generated.iter().find(|(svv, _)| *svv == row.svv) {
            None => failures.push(format!(
                "fixture row {} {}: SVV not generated",
                row.label, row.svv
            )),
            Some((_, sanf)) if *sanf != row.sanf => failures.push(format!(
                "fixture row {} {}: SANF mismatch, computed {} expected {}",
                row.label, row.svv, sanf, row.sanf
            )),
            Some(_) => {}
        }
    }
    for (svv, _) in &generated {
        if !rows.iter().any(|r| r.svv == *svv) {
            failures.push(format!("generated SVV {svv} missing from the fixture"));
        }
    }
    for (svv, _) in &generated {
        let f = SymmetricFunction::from_svv_str(svv).expect("generated SVV parses");
        let report = compute_ai_exact(&f.truth_table().expect("n = 12 expands"));
        if report.ai != TABLE1_AI {
            failures.push(format!(
                "svv {svv}: exact AI {} instead of {TABLE1_AI}",
                report.ai
            ));
        }
    }
    VerifyOutcome {
        checked: rows.len(),
        failures,
    }
}

/// Checks the eight fixed prefix/suffix patterns of the (13, 5) family:
/// every non-'?' position must match the constructed value vector and the
/// middle must leave exactly n - 2d + 1 = 17 positions unconstrained.
pub fn verify_table2() -> VerifyOutcome {
    let patterns = table2_patterns();
    let mut failures = Vec::new();
    for pat in &patterns {
        let m_index = u64::from_str_radix(&pat.label, 2).expect("binary label");
        let params = ConstructionParams::from_indices(TABLE2_K, TABLE2_D, m_index, 0)
            .expect("(13, 5) is a valid pair");
        let svv = construct_function(&params).svv_string();
        if pat.pattern.len() != svv.len() {
            failures.push(format!(
                "pattern {}: length {} does not match n+1 = {}",
                pat.label,
                pat.pattern.len(),
                svv.len()
            ));
            continue;
        }
        let wildcards = pat.pattern.chars().filter(|&c| c == '?').count();
        if wildcards != 2 * TABLE2_K - 2 * TABLE2_D + 1 {
            failures.push(format!(
                "pattern {}: {} unconstrained positions instead of {}",
                pat.label,
                wildcards,
                2 * TABLE2_K - 2 * TABLE2_D + 1
            ));
        }
        for (i, (pc, sc)) in pat.pattern.chars().zip(svv.chars()).enumerate() {
            if pc != '?' && pc != sc {
                failures.push(format!(
                    "pattern {}: position {i} is {sc}, pattern wants {pc}",
                    pat.label
                ));
            }
        }
    }
    VerifyOutcome {
        checked: patterns.len(),
        failures,
    }
}

/// The slow certificate: the (13, 5) member with m = 000 and all free bits
/// zero, certified at d = 5 on 26 variables.
pub fn deep_certificate() -> (SymmetricFunction, CertificateReport) {
    let params = ConstructionParams::from_indices(TABLE2_K, TABLE2_D, 0, 0)
        .expect("(13, 5) is a valid pair");
    let f = construct_function(&params);
    let report = certify_ai_lower_bound(&f, TABLE2_D);
    (f, report)
}
