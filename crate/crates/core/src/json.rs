//! JSON forms of expansions, reports and character tables. Coefficients are
//! decimal strings; terms are listed in descending lexicographic order.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::charcalc::CharacterTable;
use crate::error::{Error, Result};
use crate::expansion::{Basis, PowerSumBasis, SchurBasis};
use crate::globalcheck::{CharacterizationReport, GlobalVerdict};
use crate::partition::Partition;
use crate::{PowerSum, Schur};

#[derive(Serialize, Deserialize)]
struct SchurTerm {
    partition: Vec<usize>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct SchurDoc {
    basis: String,
    degree: usize,
    terms: Vec<SchurTerm>,
}

#[derive(Serialize, Deserialize)]
struct PowerSumTerm {
    partition: Vec<usize>,
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
struct PowerSumDoc {
    basis: String,
    degree: usize,
    terms: Vec<PowerSumTerm>,
}

#[derive(Serialize, Deserialize)]
struct ClassEntry {
    partition: Vec<usize>,
    global: bool,
    missing: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct ReportDoc {
    n: usize,
    computed: Vec<Vec<usize>>,
    predicted: Vec<Vec<usize>>,
    discrepancies: Vec<Vec<usize>>,
    per_class: Vec<ClassEntry>,
}

#[derive(Serialize, Deserialize)]
struct VerdictDoc {
    partition: Vec<usize>,
    twisted: bool,
    global: bool,
    missing: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct TableDoc {
    n: usize,
    partitions: Vec<Vec<usize>>,
    values: Vec<Vec<String>>,
}

fn json_err(e: serde_json::Error) -> Error {
    Error::Json(e.to_string())
}

fn render<T: Serialize>(doc: &T) -> String {
    serde_json::to_string_pretty(doc).expect("serializable document")
}

fn parse_partition(parts: Vec<usize>, degree: usize) -> Result<Partition> {
    let p = Partition::new(parts)?;
    if p.size() != degree {
        return Err(Error::Json(format!("partition {p} is not of degree {degree}")));
    }
    Ok(p)
}

fn check_basis<B: Basis>(tag: &str) -> Result<()> {
    if tag != B::NAME {
        return Err(Error::Json(format!("expected basis {:?}, found {tag:?}", B::NAME)));
    }
    Ok(())
}

fn parse_int(text: &str) -> Result<BigInt> {
    BigInt::from_str(text).map_err(|_| Error::Json(format!("bad integer {text:?}")))
}

pub fn schur_to_json(a: &Schur) -> String {
    render(&SchurDoc {
        basis: SchurBasis::NAME.into(),
        degree: a.degree(),
        terms: a
            .terms()
            .iter()
            .map(|(p, c)| SchurTerm { partition: p.parts().to_vec(), coeff: c.to_string() })
            .collect(),
    })
}

pub fn schur_from_json(text: &str) -> Result<Schur> {
    let doc: SchurDoc = serde_json::from_str(text).map_err(json_err)?;
    check_basis::<SchurBasis>(&doc.basis)?;
    let mut out = Schur::zero(doc.degree);
    for term in doc.terms {
        out.add_term(parse_partition(term.partition, doc.degree)?, parse_int(&term.coeff)?);
    }
    Ok(out)
}

pub fn power_sum_to_json(f: &PowerSum) -> String {
    render(&PowerSumDoc {
        basis: PowerSumBasis::NAME.into(),
        degree: f.degree(),
        terms: f
            .terms()
            .iter()
            .map(|(p, c)| PowerSumTerm {
                partition: p.parts().to_vec(),
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })
            .collect(),
    })
}

pub fn power_sum_from_json(text: &str) -> Result<PowerSum> {
    let doc: PowerSumDoc = serde_json::from_str(text).map_err(json_err)?;
    check_basis::<PowerSumBasis>(&doc.basis)?;
    let mut out = PowerSum::zero(doc.degree);
    for term in doc.terms {
        let den = parse_int(&term.den)?;
        if den == BigInt::from(0) {
            return Err(Error::Json("zero denominator".into()));
        }
        let c = BigRational::new(parse_int(&term.num)?, den);
        out.add_term(parse_partition(term.partition, doc.degree)?, c);
    }
    Ok(out)
}

fn parts_list<'a>(ps: impl IntoIterator<Item = &'a Partition>) -> Vec<Vec<usize>> {
    ps.into_iter().map(|p| p.parts().to_vec()).collect()
}

pub fn report_to_json(report: &CharacterizationReport) -> String {
    render(&report_doc(report))
}

/// Several reports as one JSON array.
pub fn reports_to_json(reports: &[CharacterizationReport]) -> String {
    render(&reports.iter().map(report_doc).collect::<Vec<_>>())
}

fn report_doc(report: &CharacterizationReport) -> ReportDoc {
    ReportDoc {
        n: report.n,
        computed: parts_list(&report.computed_global),
        predicted: parts_list(&report.predicted_global),
        discrepancies: parts_list(&report.discrepancies),
        per_class: report
            .per_class
            .iter()
            .map(|v| ClassEntry {
                partition: v.class_partition.parts().to_vec(),
                global: v.is_global,
                missing: parts_list(&v.missing),
            })
            .collect(),
    }
}

pub fn verdict_to_json(v: &GlobalVerdict) -> String {
    render(&VerdictDoc {
        partition: v.class_partition.parts().to_vec(),
        twisted: v.twisted,
        global: v.is_global,
        missing: parts_list(&v.missing),
    })
}

pub fn character_table_to_json(table: &CharacterTable) -> String {
    let partitions = table.partitions();
    render(&TableDoc {
        n: table.n(),
        partitions: parts_list(partitions),
        values: partitions
            .iter()
            .map(|shape| {
                partitions
                    .iter()
                    .map(|mu| table.get(shape, mu).expect("table entry").to_string())
                    .collect()
            })
            .collect(),
    })
}
