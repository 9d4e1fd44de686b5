//! Rank-parametric row templates for the two classification tables, their
//! finite instantiations and the shipped control triples.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableId {
    /// Restriction triples `(g, h, g')` with `g` simple.
    Restriction,
    /// Tensor product triples `(g, h1, h2)`.
    Tensor,
}

impl FromStr for TableId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "1" | "restriction" => Ok(TableId::Restriction),
            "2" | "tensor" => Ok(TableId::Tensor),
            _ => Err(Error::Parse(format!("table {s}: expected 1 or 2"))),
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableId::Restriction => write!(f, "1"),
            TableId::Tensor => write!(f, "2"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RowKind {
    /// An instance of a table row.
    Table,
    /// A triple absent from the table, expected unbounded.
    Negative,
    /// A triple omitted from the table because an equivalent one is listed.
    Equivalent,
}

/// One instantiated triple, given by names accepted by `Catalog::lookup`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub table: TableId,
    /// Row identifier such as `L4` (left column, fourth row) or `N-sl-so`.
    pub row: String,
    pub kind: RowKind,
    pub g: String,
    pub first: String,
    pub second: String,
}

impl TableRow {
    fn new(table: TableId, row: &str, kind: RowKind, g: String, first: String, second: String) -> Self {
        TableRow {
            table,
            row: row.to_string(),
            kind,
            g,
            first,
            second,
        }
    }

    pub fn label(&self) -> String {
        format!("({}, {}, {})", self.g, self.first, self.second)
    }

    pub fn expected_bounded(&self) -> bool {
        self.kind != RowKind::Negative
    }
}

/// Instantiation bounds for rank-parametric rows: `n` bounds the matrix
/// size of `sl_n`, `so_n` and the rank of `sp_n`; `m` bounds the rows
/// written in terms of `m` (`sl_2m`, `so_2m`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Window {
    pub n_max: usize,
    pub m_max: usize,
}

impl Default for Window {
    fn default() -> Self {
        Window { n_max: 8, m_max: 4 }
    }
}

impl Window {
    /// A window large enough to contain every instance whose ambient
    /// algebra has the given rank.
    pub fn covering_rank(rank: usize) -> Self {
        Window {
            n_max: 2 * rank + 2,
            m_max: rank + 1,
        }
    }
}

/// Sizes `n` for which `so_n` is simple: 3 and 5 onwards.
fn so_sizes(n_max: usize) -> impl Iterator<Item = usize> {
    (3..=n_max).filter(|&n| n != 4)
}

/// Splittings `n = p + q` with `1 <= p <= q`.
fn splits(n: usize, p_min: usize) -> impl Iterator<Item = (usize, usize)> {
    (p_min..=n / 2).map(move |p| (p, n - p))
}

fn sl_block(p: usize, q: usize) -> String {
    format!("sl{p}+sl{q}+c")
}

fn so_block(p: usize, q: usize) -> String {
    if p == 1 {
        format!("so{q}")
    } else {
        format!("so{p}+so{q}")
    }
}

fn sp_block(p: usize, q: usize) -> String {
    format!("sp{p}+sp{q}")
}

/// Instances of the restriction table.
pub fn restriction_rows(w: Window) -> Vec<TableRow> {
    let t = |row: &str, g: String, h: String, gp: String| TableRow::new(TableId::Restriction, row, RowKind::Table, g, h, gp);
    let mut out = Vec::new();
    for n in 2..=w.n_max {
        for (p, q) in splits(n, 1) {
            out.push(t("L1", format!("sl{n}"), format!("gl{}", n - 1), sl_block(p, q)));
        }
    }
    for m in 2..=w.m_max {
        out.push(t("L2", format!("sl{}", 2 * m), format!("gl{}", 2 * m - 1), format!("sp{m}")));
    }
    out.push(t("L3", "sl6".into(), "sp3".into(), sl_block(2, 4)));
    for n in so_sizes(w.n_max) {
        for (p, q) in splits(n, 1) {
            out.push(t("L4", format!("so{n}"), format!("so{}", n - 1), so_block(p, q)));
        }
    }
    for m in 3..=w.m_max {
        out.push(t("L5", format!("so{}", 2 * m), format!("so{}", 2 * m - 1), format!("gl{m}")));
        out.push(t("L6", format!("so{}", 2 * m), so_block(2, 2 * m - 2), format!("gl{m}")));
    }
    for n in 2..=w.n_max {
        for (p, q) in splits(n, 1) {
            out.push(t("L7", format!("sp{n}"), sp_block(n - 1, 1), sp_block(p, q)));
        }
    }
    for n in 3..=w.n_max {
        out.push(t("L8", format!("sp{n}"), sp_block(n - 2, 2), sp_block(n - 1, 1)));
    }
    out.push(t("L9", "e6".into(), "f4".into(), "so10+c".into()));
    out.push(t("L10", "f4".into(), "so9".into(), "so9".into()));
    for n in 2..=w.n_max {
        out.push(t("R1", format!("sl{n}"), format!("so{n}"), format!("gl{}", n - 1)));
    }
    for m in 2..=w.m_max {
        out.push(t("R2", format!("sl{}", 2 * m), format!("sp{m}"), format!("gl{}", 2 * m - 1)));
    }
    for n in 2..=w.n_max {
        for (p, q) in splits(n, 1) {
            out.push(t("R3", format!("sl{n}"), sl_block(p, q), format!("gl{}", n - 1)));
        }
    }
    for n in so_sizes(w.n_max) {
        for (p, q) in splits(n, 1) {
            out.push(t("R4", format!("so{n}"), so_block(p, q), format!("so{}", n - 1)));
        }
    }
    for m in 3..=w.m_max {
        out.push(t("R5", format!("so{}", 2 * m), format!("gl{m}"), format!("so{}", 2 * m - 1)));
    }
    out
}

/// Restriction triples outside the table (expected unbounded) and triples
/// left out of it only because an equivalent triple is listed.
///
/// `(sp_n, sp_{n-1}+sp_1, gl_n)` starts at `n = 3`: for `n = 2` it is
/// `(so5, so4, so2+so3)`, a table instance.
pub fn restriction_controls(w: Window) -> Vec<TableRow> {
    let neg = |row: &str, g: String, h: String, gp: String| TableRow::new(TableId::Restriction, row, RowKind::Negative, g, h, gp);
    let eqv = |row: &str, g: &str, h: &str, gp: &str| {
        TableRow::new(TableId::Restriction, row, RowKind::Equivalent, g.into(), h.into(), gp.into())
    };
    let mut out = Vec::new();
    for n in 3..=w.n_max {
        out.push(neg("N-rank-one-sl", format!("sl{n}"), format!("gl{}", n - 1), format!("so{n}")));
    }
    for n in 3..=w.n_max {
        out.push(neg("N-rank-one-sp", format!("sp{n}"), sp_block(n - 1, 1), format!("gl{n}")));
    }
    out.push(neg("N-rank-one-f4", "f4".into(), "so9".into(), "sp3+sl2".into()));
    for n in 4..=w.n_max {
        for (p, q) in splits(n, 2) {
            out.push(neg("N-sl-so", format!("sl{n}"), format!("so{n}"), sl_block(p, q)));
        }
    }
    out.push(neg("N-sl6-sp3", "sl6".into(), "sp3".into(), sl_block(3, 3)));
    for n in 4..=w.n_max {
        for (p, q) in splits(n, 2) {
            out.push(neg("N-sl-gl2", format!("sl{n}"), sl_block(2, n - 2), sl_block(p, q)));
        }
    }
    out.push(eqv("E-so8-gl4", "so8", "gl4", "so2+so6"));
    out.push(eqv("E-sl4-sp2", "sl4", "sp2", "sl2+sl2+c"));
    out.push(eqv("E-so8-spin7", "so8", "so2+so6", "so7:spin7+"));
    out
}

/// Instances of the tensor table.
pub fn tensor_rows(w: Window) -> Vec<TableRow> {
    let t = |row: &str, g: String, a: String, b: String| TableRow::new(TableId::Tensor, row, RowKind::Table, g, a, b);
    let mut out = Vec::new();
    for n in so_sizes(w.n_max) {
        out.push(t("T1", format!("so{n}"), format!("so{}", n - 1), format!("so{}", n - 1)));
    }
    out.push(t("T2", "so8".into(), "so7".into(), "so7:spin7+".into()));
    out.push(t("T3", "so8".into(), "so7".into(), "gl4".into()));
    out.push(t("T4", "sl4".into(), "gl3".into(), "sp2".into()));
    out
}

/// Tensor triples outside the table.
pub fn tensor_controls() -> Vec<TableRow> {
    let neg = |g: &str, a: &str, b: &str| TableRow::new(TableId::Tensor, "N-tensor", RowKind::Negative, g.into(), a.into(), b.into());
    vec![
        neg("sl5", "gl4", "gl4"),
        neg("so7", "so6", "so2+so5"),
        neg("so8", "so7", "so2+so6"),
    ]
}

/// The symmetric pairs `(g, k)` for which the full flag variety of `g` is
/// `K`-spherical, as `(g, k)` names: `(sl_n, gl_{n-1})`, `(so_n, so_{n-1})`
/// and `(so8, spin7)`.
pub fn kramer_pairs(n_max: usize) -> Vec<(String, String)> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        out.push((format!("sl{n}"), format!("gl{}", n - 1)));
    }
    for n in so_sizes(n_max) {
        out.push((format!("so{n}"), format!("so{}", n - 1)));
    }
    out.push(("so8".into(), "so7:spin7+".into()));
    out
}
