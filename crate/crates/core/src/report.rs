//! Structured records shared by the library checks, the command line tool
//! and the browser demo.
//!
//! Field names are stable: downstream tooling may rely on them.

use serde::{Deserialize, Serialize};

use crate::collection::{build_collection, ExceptionalObject};
use crate::ext::{ext_computation, ExtDims};
use crate::hj::HjExpansion;
use crate::ktheory::k_matrix;
use crate::oracle::oracle_ext_dims;
use crate::reps::{digits_of, specials_of};
use crate::verify::verify_instance;

/// Outcome of a single named invariant check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckItem {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// A list of named pass/fail entries. Failing entries carry enough detail
/// to locate the offending index or pair.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub checks: Vec<CheckItem>,
}

impl ValidationReport {
    pub fn record(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.checks.push(CheckItem {
            name: name.into(),
            pass,
            detail: detail.into(),
        });
    }

    /// True when every recorded check passed.
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// Absorb `other`, prefixing its check names with `prefix.`.
    pub fn merge_prefixed(&mut self, prefix: &str, other: ValidationReport) {
        for item in other.checks {
            self.checks.push(CheckItem {
                name: format!("{prefix}.{}", item.name),
                pass: item.pass,
                detail: item.detail,
            });
        }
    }
}

/// One line of the digit table: the expansion of `d` over the i-sequence
/// and its dual value `f`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DigitRow {
    pub d: i64,
    pub digits: Vec<i64>,
    pub f: i64,
}

/// One collection member in serializable form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObjectRow {
    pub d: i64,
    pub level: usize,
    pub length: i64,
    pub twist: i64,
    pub chars: Vec<i64>,
}

impl ObjectRow {
    fn from_object(obj: &ExceptionalObject) -> Self {
        ObjectRow {
            d: obj.d().value(),
            level: obj.level(),
            length: obj.length(),
            twist: obj.twist().value(),
            chars: obj.chars().iter().map(|c| c.value()).collect(),
        }
    }
}

/// Ext dimensions for one ordered pair of collection members.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtRow {
    pub d: i64,
    pub d_prime: i64,
    pub hom: usize,
    pub ext1: usize,
    pub ext2: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub oracle_agrees: Option<bool>,
}

/// The full structured report for one singularity type.
///
/// The continued fraction block (`n`, `q`, `b`, `i`, `j`, `q_prime`) is
/// always present; the remaining fields are filled per command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceReport {
    pub n: i64,
    pub q: i64,
    pub b: Vec<i64>,
    pub i: Vec<i64>,
    pub j: Vec<i64>,
    pub q_prime: i64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub specials: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub non_specials: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub digits: Option<Vec<DigitRow>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub collection: Option<Vec<ObjectRow>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k_matrix: Option<Vec<Vec<i64>>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ext_table: Option<Vec<ExtRow>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub checks: Option<Vec<CheckItem>>,
}

/// Per-instance line of a sweep run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub n: i64,
    pub q: i64,
    pub pass: bool,
    pub failed: Vec<String>,
}

fn base_report(e: &HjExpansion) -> InstanceReport {
    InstanceReport {
        n: e.n(),
        q: e.q(),
        b: e.b_seq().to_vec(),
        i: e.i_seq().to_vec(),
        j: e.j_seq().to_vec(),
        q_prime: e.q_prime(),
        specials: None,
        non_specials: None,
        digits: None,
        collection: None,
        k_matrix: None,
        ext_table: None,
        checks: None,
    }
}

fn special_values(e: &HjExpansion) -> (Vec<i64>, Vec<i64>) {
    let specials: Vec<i64> = specials_of(e).iter().map(|c| c.value()).collect();
    let non_specials: Vec<i64> = (0..e.n()).filter(|v| !specials.contains(v)).collect();
    (specials, non_specials)
}

/// Continued fraction data only.
pub fn expansion_report(e: &HjExpansion) -> InstanceReport {
    base_report(e)
}

/// The special / non-special partition of the characters.
pub fn specials_report(e: &HjExpansion) -> InstanceReport {
    let mut rep = base_report(e);
    let (s, ns) = special_values(e);
    rep.specials = Some(s);
    rep.non_specials = Some(ns);
    rep
}

/// Digit expansion and dual value for every residue in [0, n-1].
pub fn digits_report(e: &HjExpansion) -> InstanceReport {
    let mut rep = base_report(e);
    let rows = (0..e.n())
        .map(|d| {
            let dv = digits_of(e, e.char(d));
            DigitRow {
                d,
                digits: dv.digits.clone(),
                f: dv.f,
            }
        })
        .collect();
    rep.digits = Some(rows);
    rep
}

/// The exceptional collection together with its matrix of K-classes.
pub fn collection_report(e: &HjExpansion) -> InstanceReport {
    let mut rep = specials_report(e);
    let objects = build_collection(e);
    rep.collection = Some(objects.iter().map(ObjectRow::from_object).collect());
    rep.k_matrix = Some(k_matrix(e).entries().to_vec());
    rep
}

/// Ext dimensions over all ordered pairs of collection members, in row-major
/// order of (d, d'). With `oracle` set, every entry is recomputed from the
/// projective resolution by exact elimination and the agreement recorded.
pub fn ext_table_report(e: &HjExpansion, oracle: bool) -> InstanceReport {
    let mut rep = base_report(e);
    rep.ext_table = Some(ext_table_rows(e, oracle));
    rep
}

pub(crate) fn ext_table_rows(e: &HjExpansion, oracle: bool) -> Vec<ExtRow> {
    let objects = build_collection(e);
    let mut rows = Vec::with_capacity(objects.len() * objects.len());
    for src in &objects {
        for dst in &objects {
            let comp =
                ext_computation(e, src.d(), dst.d()).expect("collection members are non-special");
            let dims = comp.dims();
            let oracle_agrees = oracle.then(|| {
                let check: ExtDims = oracle_ext_dims(e, src.d(), dst.d())
                    .expect("collection members are non-special");
                check == dims
            });
            rows.push(ExtRow {
                d: src.d().value(),
                d_prime: dst.d().value(),
                hom: dims.hom,
                ext1: dims.ext1,
                ext2: dims.ext2,
                oracle_agrees,
            });
        }
    }
    rows
}

/// Everything at once, plus the full invariant check list.
pub fn verify_report(e: &HjExpansion, oracle: bool) -> InstanceReport {
    let mut rep = collection_report(e);
    rep.digits = digits_report(e).digits;
    rep.ext_table = Some(ext_table_rows(e, oracle));
    rep.checks = Some(verify_instance(e, oracle).checks);
    rep
}
