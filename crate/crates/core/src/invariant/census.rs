use std::collections::BTreeSet;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::numeric::{parse_numeric, NumericValue};
use super::{evaluate_item_with, InvariantItem, InvariantValue};
use crate::cyclo::parse_cyclo;
use crate::error::{Error, Result};
use crate::gauge::is_de_jure_invariant;
use crate::ring::FusionRing;
use crate::skeleton::{check_vacuum, RingRef, SkeletalData};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CensusColumn {
    pub name: String,
    pub item: InvariantItem,
    /// Set for columns that are only invariant on the data they are used
    /// with, because some numerator symbol vanishes there.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub de_facto: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CensusRow {
    pub name: String,
    pub n_f: u32,
    pub n_r: u32,
    pub n_p: u32,
    pub values: Vec<InvariantValue>,
    pub numeric: Option<Vec<NumericValue>>,
}

/// A census table: named columns of invariants and the expected values of
/// every category built on one fusion ring.
#[derive(Debug, Clone, PartialEq)]
pub struct CensusTable {
    ring: FusionRing,
    code: String,
    columns: Vec<CensusColumn>,
    rows: Vec<CensusRow>,
}

#[derive(Serialize, Deserialize)]
struct RowFile {
    name: String,
    #[serde(rename = "nF")]
    n_f: u32,
    #[serde(rename = "nR")]
    n_r: u32,
    #[serde(rename = "nP")]
    n_p: u32,
    values: Vec<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    numeric: Option<Vec<Value>>,
}

#[derive(Serialize, Deserialize)]
struct CensusFile {
    ring: RingRef,
    #[serde(default)]
    code: String,
    columns: Vec<CensusColumn>,
    #[serde(default)]
    rows: Vec<RowFile>,
}

enum Cell<L> {
    Leaf(L),
    Tuple(Vec<Cell<L>>),
    Set(Vec<Cell<L>>),
    Dash,
}

fn cell_error(col: &CensusColumn, v: &Value, why: &str) -> Error {
    Error::InvalidData(format!("column `{}`: cell {v} {why}", col.name))
}

fn parse_leaf<L>(
    v: &Value,
    col: &CensusColumn,
    r_bearing: bool,
    leaf: &dyn Fn(&str) -> Result<L>,
) -> Result<Cell<L>> {
    match v.as_str() {
        Some("-") if r_bearing => Ok(Cell::Dash),
        Some("-") => Err(cell_error(col, v, "is `-` but the column has no R-symbols")),
        Some(s) => Ok(Cell::Leaf(leaf(s)?)),
        None => Err(cell_error(col, v, "should be a string")),
    }
}

fn parse_tuple<L>(
    v: &Value,
    col: &CensusColumn,
    ms: &[crate::gauge::FormalMonomial],
    leaf: &dyn Fn(&str) -> Result<L>,
) -> Result<Cell<L>> {
    let xs = v
        .as_array()
        .filter(|xs| xs.len() == ms.len())
        .ok_or_else(|| cell_error(col, v, &format!("should be a {}-tuple", ms.len())))?;
    Ok(Cell::Tuple(
        xs.iter()
            .zip(ms)
            .map(|(x, m)| parse_leaf(x, col, m.mentions_r(), leaf))
            .collect::<Result<_>>()?,
    ))
}

fn parse_cell<L>(v: &Value, col: &CensusColumn, leaf: &dyn Fn(&str) -> Result<L>) -> Result<Cell<L>> {
    let r_bearing = col.item.mentions_r();
    if v.as_str() == Some("-") {
        return parse_leaf(v, col, r_bearing, leaf);
    }
    match &col.item {
        InvariantItem::Mono(m) => parse_leaf(v, col, m.mentions_r(), leaf),
        InvariantItem::Tuple(ms) => parse_tuple(v, col, ms, leaf),
        InvariantItem::Orbit(inner) => {
            let xs = v
                .as_array()
                .ok_or_else(|| cell_error(col, v, "should be a set"))?;
            let members = xs
                .iter()
                .map(|x| match inner.as_ref() {
                    InvariantItem::Tuple(ms) => parse_tuple(x, col, ms, leaf),
                    InvariantItem::Mono(m) => parse_leaf(x, col, m.mentions_r(), leaf),
                    InvariantItem::Orbit(_) => unreachable!("orbits do not nest"),
                })
                .collect::<Result<_>>()?;
            Ok(Cell::Set(members))
        }
    }
}

/// A monomial, or the orbit of one, that mentions an R-symbol.
fn is_scalar_r_column(item: &InvariantItem) -> bool {
    match item {
        InvariantItem::Mono(m) => m.mentions_r(),
        InvariantItem::Orbit(inner) => matches!(inner.as_ref(), InvariantItem::Mono(m) if m.mentions_r()),
        InvariantItem::Tuple(_) => false,
    }
}

fn exact(cell: Cell<crate::cyclo::Cyclo>) -> InvariantValue {
    match cell {
        Cell::Leaf(c) => InvariantValue::Scalar(c),
        Cell::Tuple(xs) => InvariantValue::TupleVal(xs.into_iter().map(exact).collect()),
        Cell::Set(xs) => InvariantValue::SetVal(xs.into_iter().map(exact).collect::<BTreeSet<_>>()),
        Cell::Dash => InvariantValue::NonBraided,
    }
}

fn numeric(cell: Cell<(f64, f64)>) -> NumericValue {
    match cell {
        Cell::Leaf((re, im)) => NumericValue::Scalar(re, im),
        Cell::Tuple(xs) => NumericValue::Tuple(xs.into_iter().map(numeric).collect()),
        Cell::Set(xs) => NumericValue::Set(xs.into_iter().map(numeric).collect()),
        Cell::Dash => NumericValue::NonBraided,
    }
}

impl CensusTable {
    pub fn from_json(text: &str) -> Result<Self> {
        let file: CensusFile = serde_json::from_str(text)?;
        let ring = file.ring.resolve()?;
        let code = if file.code.is_empty() {
            match &file.ring {
                RingRef::Name(n) => crate::data::ring_code(n).unwrap_or(n).to_string(),
                RingRef::Body(_) => String::new(),
            }
        } else {
            file.code
        };
        for col in &file.columns {
            for m in col.item.monomials() {
                m.check_admissible(&ring)?;
                if !col.de_facto && !is_de_jure_invariant(m) {
                    return Err(Error::InvalidData(format!(
                        "column `{}`: {m} is not gauge invariant",
                        col.name
                    )));
                }
            }
        }
        let mut seen = BTreeSet::new();
        let mut rows = Vec::new();
        for r in file.rows {
            if !seen.insert(r.name.clone()) {
                return Err(Error::InvalidData(format!("row `{}` given twice", r.name)));
            }
            if r.values.len() != file.columns.len() {
                return Err(Error::InvalidData(format!(
                    "row `{}` has {} values for {} columns",
                    r.name,
                    r.values.len(),
                    file.columns.len()
                )));
            }
            let values: Vec<InvariantValue> = r
                .values
                .iter()
                .zip(&file.columns)
                .map(|(v, c)| parse_cell(v, c, &parse_cyclo).map(exact))
                .collect::<Result<_>>()?;
            for (v, c) in values.iter().zip(&file.columns) {
                let dash = *v == InvariantValue::NonBraided;
                if is_scalar_r_column(&c.item) && (dash != (r.n_r == 0)) {
                    return Err(Error::InvalidData(format!(
                        "row `{}`: column `{}` must be `-` exactly when nR = 0",
                        r.name, c.name
                    )));
                }
            }
            let numeric = match &r.numeric {
                None => None,
                Some(ns) if ns.len() != file.columns.len() => {
                    return Err(Error::InvalidData(format!(
                        "row `{}` has {} numeric values for {} columns",
                        r.name,
                        ns.len(),
                        file.columns.len()
                    )))
                }
                Some(ns) => Some(
                    ns.iter()
                        .zip(&file.columns)
                        .map(|(v, c)| parse_cell(v, c, &parse_numeric).map(numeric))
                        .collect::<Result<_>>()?,
                ),
            };
            rows.push(CensusRow {
                name: r.name,
                n_f: r.n_f,
                n_r: r.n_r,
                n_p: r.n_p,
                values,
                numeric,
            });
        }
        Ok(CensusTable {
            ring,
            code,
            columns: file.columns,
            rows,
        })
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn ring(&self) -> &FusionRing {
        &self.ring
    }

    /// Census code of the ring, such as `FR_1^{2,1,0}`.
    pub fn code(&self) -> &str {
        &self.code
    }

    pub fn columns(&self) -> &[CensusColumn] {
        &self.columns
    }

    pub fn rows(&self) -> &[CensusRow] {
        &self.rows
    }

    pub fn row(&self, name: &str) -> Option<&CensusRow> {
        self.rows.iter().find(|r| r.name == name)
    }

    /// Values of every column on `data`, in column order.
    pub fn evaluate(&self, data: &SkeletalData) -> Result<Vec<InvariantValue>> {
        if data.ring() != &self.ring {
            return Err(Error::RingMismatch(
                "data and census table use different fusion rings".into(),
            ));
        }
        let group = self.ring.automorphisms();
        self.columns
            .iter()
            .map(|c| evaluate_item_with(&c.item, data, &group))
            .collect()
    }

    /// Names of the rows whose values equal `values`.
    pub fn lookup(&self, values: &[InvariantValue]) -> Vec<String> {
        self.rows
            .iter()
            .filter(|r| r.values == values)
            .map(|r| r.name.clone())
            .collect()
    }
}

/// Every census row matching `data`. The data must be vacuum-normalized,
/// since the tabulated values assume vacuum F- and R-symbols equal to 1.
pub fn match_census(data: &SkeletalData, table: &CensusTable) -> Result<Vec<String>> {
    if data.ring() != table.ring() {
        return Err(Error::RingMismatch(
            "data and census table use different fusion rings".into(),
        ));
    }
    let vac = check_vacuum(data);
    if !vac.pass {
        return Err(Error::Vacuum(format!(
            "census lookup needs vacuum F- and R-symbols equal to 1; {} violation(s)",
            vac.failures
        )));
    }
    Ok(table.lookup(&table.evaluate(data)?))
}
