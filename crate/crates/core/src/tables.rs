//! Export schemas and emitters for coefficient tables and labeled
//! matrices: JSON, CSV and LaTeX, all with a fixed deterministic ordering
//! (ascending total order on every partition index).
//!
//! Partitions are serialized as strings ("3,1,1", "-" for the empty one);
//! polynomial values as coefficient lists, lowest degree first. Count
//! tables carry plain integers, and the rescaled-cumulant table carries
//! the integer polynomial together with its rational scale "p/q".

use std::io::Write as _;

use num::{BigInt, BigRational};
use serde::{Deserialize, Serialize};

use crate::connection::{self, c_table};
use crate::error::{Error, Result};
use crate::fh::LabeledMatrix;
use crate::matchings;
use crate::partition::{all_partitions, Partition};
use crate::poly::IntPoly;
use crate::reconstruct::MarginalTable;

/// Largest degree a polynomial-table request expands without an explicit
/// override.
pub const DEFAULT_TABLE_GUARD: usize = 8;

fn check_guard(n: usize, guard: Option<usize>) -> Result<()> {
    let limit = guard.unwrap_or(DEFAULT_TABLE_GUARD);
    if n > limit {
        return Err(Error::GuardExceeded {
            what: "table emission",
            requested: n,
            limit,
        });
    }
    Ok(())
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CoeffEntry {
    pub lambda: String,
    pub mu: String,
    pub nu: String,
    pub poly_b: Vec<i128>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CoeffTableFile {
    pub n: usize,
    pub entries: Vec<CoeffEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MarginalEntry {
    pub lambda: String,
    pub mu: String,
    pub l: usize,
    pub poly_b: Vec<i128>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MarginalTableFile {
    pub n: usize,
    pub entries: Vec<MarginalEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScaledEntry {
    pub lambda: String,
    pub mu: String,
    pub nu: String,
    pub zh_poly_b: Vec<i128>,
    pub scale: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScaledTableFile {
    pub n: usize,
    pub entries: Vec<ScaledEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CountEntry {
    pub lambda: String,
    pub mu: String,
    pub nu: String,
    pub count: i128,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CountTableFile {
    pub n: usize,
    pub entries: Vec<CountEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixFile {
    pub kind: String,
    pub r: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i: Option<usize>,
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub entries: Vec<Vec<i128>>,
}

fn poly_to_i128(p: &IntPoly) -> Result<Vec<i128>> {
    p.to_i128_coeffs()
}

/// Full connection-coefficient table of degree n, every index triple in
/// ascending total order.
pub fn coeff_table_file(n: usize, guard: Option<usize>) -> Result<CoeffTableFile> {
    check_guard(n, guard)?;
    let table = c_table(n)?;
    let parts = table.partitions();
    let mut entries = Vec::new();
    for (li, lambda) in parts.iter().enumerate() {
        for (mi, mu) in parts.iter().enumerate() {
            for (ni, nu) in parts.iter().enumerate() {
                entries.push(CoeffEntry {
                    lambda: lambda.to_string(),
                    mu: mu.to_string(),
                    nu: nu.to_string(),
                    poly_b: poly_to_i128(table.get(li, mi, ni))?,
                });
            }
        }
    }
    Ok(CoeffTableFile { n, entries })
}

/// Full cumulant table of degree n.
pub fn cumulant_table_file(n: usize, guard: Option<usize>) -> Result<CoeffTableFile> {
    check_guard(n, guard)?;
    let parts = all_partitions(n);
    let mut entries = Vec::new();
    for lambda in &parts {
        for mu in &parts {
            for nu in &parts {
                let d = connection::cumulant(lambda, mu, nu)?;
                entries.push(CoeffEntry {
                    lambda: lambda.to_string(),
                    mu: mu.to_string(),
                    nu: nu.to_string(),
                    poly_b: poly_to_i128(&d)?,
                });
            }
        }
    }
    Ok(CoeffTableFile { n, entries })
}

/// Full marginal table of degree n: all (lambda, mu) pairs and all
/// lengths 1..=n.
pub fn marginal_table_file(n: usize, guard: Option<usize>) -> Result<MarginalTableFile> {
    check_guard(n, guard)?;
    let table = c_table(n)?;
    let parts = table.partitions();
    let mut entries = Vec::new();
    for lambda in parts {
        for mu in parts {
            for l in 1..=n {
                entries.push(MarginalEntry {
                    lambda: lambda.to_string(),
                    mu: mu.to_string(),
                    l,
                    poly_b: poly_to_i128(&table.marginal(lambda, mu, l))?,
                });
            }
        }
    }
    Ok(MarginalTableFile { n, entries })
}

/// Rescaled cumulant table of degree n: the integer polynomial left after
/// dividing out the forced power of b + 1, with the rational prefactor
/// recorded separately in lowest terms.
pub fn scaled_cumulant_table_file(n: usize, guard: Option<usize>) -> Result<ScaledTableFile> {
    check_guard(n, guard)?;
    let parts = all_partitions(n);
    let mut entries = Vec::new();
    for lambda in &parts {
        for mu in &parts {
            for nu in &parts {
                let h = connection::h_coefficient(lambda, mu, nu)?;
                let scale = BigRational::new(h.scale_num.clone(), h.scale_den.clone());
                entries.push(ScaledEntry {
                    lambda: lambda.to_string(),
                    mu: mu.to_string(),
                    nu: nu.to_string(),
                    zh_poly_b: poly_to_i128(&h.zh)?,
                    scale: format!("{}/{}", scale.numer(), scale.denom()),
                });
            }
        }
    }
    Ok(ScaledTableFile { n, entries })
}

fn bigint_to_i128(v: &BigInt) -> Result<i128> {
    i128::try_from(v).map_err(|_| Error::Overflow(format!("count {v}")))
}

/// Matching-count table of degree n: all matchings, or the bipartite ones
/// only.
pub fn count_table_file(
    n: usize,
    bipartite_only: bool,
    guard: Option<usize>,
) -> Result<CountTableFile> {
    let counts = matchings::matching_counts(n, bipartite_only, guard)?;
    let parts = counts.partitions().to_vec();
    let mut entries = Vec::new();
    for (li, lambda) in parts.iter().enumerate() {
        for (mi, mu) in parts.iter().enumerate() {
            for (ni, nu) in parts.iter().enumerate() {
                entries.push(CountEntry {
                    lambda: lambda.to_string(),
                    mu: mu.to_string(),
                    nu: nu.to_string(),
                    count: bigint_to_i128(counts.get(li, mi, ni))?,
                });
            }
        }
    }
    Ok(CountTableFile { n, entries })
}

/// Serializes a labeled matrix under its displayed name.
pub fn matrix_file(kind: &str, r: usize, i: Option<usize>, m: &LabeledMatrix) -> Result<MatrixFile> {
    let entries = m
        .entries
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| i128::try_from(v).map_err(|_| Error::Overflow(format!("entry {v}"))))
                .collect::<Result<Vec<i128>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MatrixFile {
        kind: kind.to_string(),
        r,
        i,
        rows: m.row_labels.iter().map(Partition::to_string).collect(),
        cols: m.col_labels.iter().map(Partition::to_string).collect(),
        entries,
    })
}

/// Reads a marginal table back from its JSON form; entries absent from the
/// file are zero.
pub fn marginal_table_from_json(text: &str) -> Result<MarginalTable> {
    let file: MarginalTableFile = serde_json::from_str(text)?;
    let mut out = MarginalTable::new(file.n);
    for e in &file.entries {
        let lambda: Partition = e.lambda.parse()?;
        let mu: Partition = e.mu.parse()?;
        if lambda.size() != file.n || mu.size() != file.n {
            return Err(Error::SizeMismatch(lambda.size().max(mu.size()), file.n));
        }
        let coeffs: Vec<BigInt> = e.poly_b.iter().map(|&c| BigInt::from(c)).collect();
        out.insert(lambda, mu, e.l, IntPoly::new(coeffs));
    }
    Ok(out)
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    Ok(text)
}

fn csv_field(raw: &str) -> String {
    if raw.contains(',') || raw.contains('"') || raw.contains('\n') {
        format!("\"{}\"", raw.replace('"', "\"\""))
    } else {
        raw.to_string()
    }
}

fn csv_rows(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut out = String::new();
    out.push_str(&header.join(","));
    out.push('\n');
    for row in rows {
        let quoted: Vec<String> = row.iter().map(|f| csv_field(f)).collect();
        out.push_str(&quoted.join(","));
        out.push('\n');
    }
    out
}

fn join_i128(values: &[i128]) -> String {
    values
        .iter()
        .map(i128::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

pub fn coeff_table_csv(file: &CoeffTableFile) -> String {
    csv_rows(
        &["lambda", "mu", "nu", "poly_b"],
        file.entries
            .iter()
            .map(|e| {
                vec![
                    e.lambda.clone(),
                    e.mu.clone(),
                    e.nu.clone(),
                    join_i128(&e.poly_b),
                ]
            })
            .collect(),
    )
}

pub fn marginal_table_csv(file: &MarginalTableFile) -> String {
    csv_rows(
        &["lambda", "mu", "l", "poly_b"],
        file.entries
            .iter()
            .map(|e| {
                vec![
                    e.lambda.clone(),
                    e.mu.clone(),
                    e.l.to_string(),
                    join_i128(&e.poly_b),
                ]
            })
            .collect(),
    )
}

pub fn scaled_table_csv(file: &ScaledTableFile) -> String {
    csv_rows(
        &["lambda", "mu", "nu", "zh_poly_b", "scale"],
        file.entries
            .iter()
            .map(|e| {
                vec![
                    e.lambda.clone(),
                    e.mu.clone(),
                    e.nu.clone(),
                    join_i128(&e.zh_poly_b),
                    e.scale.clone(),
                ]
            })
            .collect(),
    )
}

pub fn count_table_csv(file: &CountTableFile) -> String {
    csv_rows(
        &["lambda", "mu", "nu", "count"],
        file.entries
            .iter()
            .map(|e| {
                vec![
                    e.lambda.clone(),
                    e.mu.clone(),
                    e.nu.clone(),
                    e.count.to_string(),
                ]
            })
            .collect(),
    )
}

fn latex_partition(label: &str) -> String {
    if label == "-" {
        "$\\emptyset$".to_string()
    } else {
        format!("$[{label}]$")
    }
}

fn poly_human(coeffs: &[i128]) -> String {
    IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect()).to_string()
}

fn latex_table(headers: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "\\begin{{tabular}}{{{}}}\n",
        "l".repeat(headers.len())
    ));
    out.push_str(&headers.join(" & "));
    out.push_str(" \\\\\n\\hline\n");
    for row in rows {
        out.push_str(&row.join(" & "));
        out.push_str(" \\\\\n");
    }
    out.push_str("\\end{tabular}\n");
    out
}

pub fn coeff_table_latex(file: &CoeffTableFile) -> String {
    latex_table(
        &["$\\lambda$", "$\\mu$", "$\\nu$", "value"],
        file.entries
            .iter()
            .map(|e| {
                vec![
                    latex_partition(&e.lambda),
                    latex_partition(&e.mu),
                    latex_partition(&e.nu),
                    format!("${}$", poly_human(&e.poly_b)),
                ]
            })
            .collect(),
    )
}

pub fn marginal_table_latex(file: &MarginalTableFile) -> String {
    latex_table(
        &["$\\lambda$", "$\\mu$", "$l$", "value"],
        file.entries
            .iter()
            .map(|e| {
                vec![
                    latex_partition(&e.lambda),
                    latex_partition(&e.mu),
                    format!("${}$", e.l),
                    format!("${}$", poly_human(&e.poly_b)),
                ]
            })
            .collect(),
    )
}

pub fn scaled_table_latex(file: &ScaledTableFile) -> String {
    latex_table(
        &["$\\lambda$", "$\\mu$", "$\\nu$", "value", "scale"],
        file.entries
            .iter()
            .map(|e| {
                vec![
                    latex_partition(&e.lambda),
                    latex_partition(&e.mu),
                    latex_partition(&e.nu),
                    format!("${}$", poly_human(&e.zh_poly_b)),
                    format!("${}$", e.scale),
                ]
            })
            .collect(),
    )
}

pub fn count_table_latex(file: &CountTableFile) -> String {
    latex_table(
        &["$\\lambda$", "$\\mu$", "$\\nu$", "count"],
        file.entries
            .iter()
            .map(|e| {
                vec![
                    latex_partition(&e.lambda),
                    latex_partition(&e.mu),
                    latex_partition(&e.nu),
                    format!("${}$", e.count),
                ]
            })
            .collect(),
    )
}

fn bracket(p: &Partition) -> String {
    format!("[{p}]")
}

/// Plain-text rendering of a labeled matrix: corner header, column labels
/// across, row labels down, entries right-aligned.
pub fn matrix_text(corner: &str, m: &LabeledMatrix) -> String {
    let row_labels: Vec<String> = m.row_labels.iter().map(bracket).collect();
    let col_labels: Vec<String> = m.col_labels.iter().map(bracket).collect();
    let cells: Vec<Vec<String>> = m
        .entries
        .iter()
        .map(|row| row.iter().map(BigInt::to_string).collect())
        .collect();
    let label_width = row_labels
        .iter()
        .map(String::len)
        .chain(std::iter::once(corner.len()))
        .max()
        .unwrap_or(0);
    let col_widths: Vec<usize> = col_labels
        .iter()
        .enumerate()
        .map(|(j, label)| {
            cells
                .iter()
                .map(|row| row[j].len())
                .chain(std::iter::once(label.len()))
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    out.push_str(&format!("{corner:<label_width$}"));
    for (j, label) in col_labels.iter().enumerate() {
        out.push_str(&format!("  {label:>width$}", width = col_widths[j]));
    }
    out.push('\n');
    for (i, label) in row_labels.iter().enumerate() {
        out.push_str(&format!("{label:<label_width$}"));
        for (j, cell) in cells[i].iter().enumerate() {
            out.push_str(&format!("  {cell:>width$}", width = col_widths[j]));
        }
        out.push('\n');
    }
    out
}

/// LaTeX rendering of a labeled matrix in the displayed orientation, with
/// the corner header in math mode.
pub fn matrix_latex(corner_row: &str, corner_col: &str, m: &LabeledMatrix) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "\\begin{{tabular}}{{l|{}}}\n",
        "r".repeat(m.col_labels.len())
    ));
    out.push_str(&format!("${corner_row} \\backslash {corner_col}$"));
    for label in &m.col_labels {
        out.push_str(&format!(" & {}", latex_partition(&label.to_string())));
    }
    out.push_str(" \\\\\n\\hline\n");
    for (i, label) in m.row_labels.iter().enumerate() {
        out.push_str(&latex_partition(&label.to_string()));
        for v in &m.entries[i] {
            out.push_str(&format!(" & ${v}$"));
        }
        out.push_str(" \\\\\n");
    }
    out.push_str("\\end{tabular}\n");
    out
}

/// Writes text to a file or standard output.
pub fn emit(text: &str, out: Option<&std::path::Path>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}
