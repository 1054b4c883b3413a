//! Space documents: reading, canonical export and digests.

use std::fmt::Write as _;
use std::path::Path;

use anyhow::{anyhow, bail, Context as _, Result};
use lcd_rough::{Subset, ToleranceSpace};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    PairsJson,
    MatrixText,
    InfoTableCsv,
}

impl Format {
    /// `.json`, `.csv`, anything else is read as a matrix.
    pub fn infer(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some("json") => Format::PairsJson,
            Some("csv") => Format::InfoTableCsv,
            _ => Format::MatrixText,
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PairsDoc {
    n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
    pairs: Vec<(usize, usize)>,
}

pub fn read_space(path: &Path, format: Option<Format>, theta: Option<f64>) -> Result<ToleranceSpace> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let format = format.unwrap_or_else(|| Format::infer(path));
    parse_space(&text, format, theta).with_context(|| format!("parsing {}", path.display()))
}

pub fn parse_space(text: &str, format: Format, theta: Option<f64>) -> Result<ToleranceSpace> {
    if theta.is_some() && format != Format::InfoTableCsv {
        bail!("--theta only applies to info-table-csv input");
    }
    match format {
        Format::PairsJson => parse_pairs_json(text),
        Format::MatrixText => parse_matrix(text),
        Format::InfoTableCsv => {
            let theta = theta.ok_or_else(|| anyhow!("info-table-csv input needs --theta"))?;
            parse_info_table(text, theta)
        }
    }
}

fn parse_pairs_json(text: &str) -> Result<ToleranceSpace> {
    let doc: PairsDoc = serde_json::from_str(text)?;
    let space = ToleranceSpace::build(doc.n, &doc.pairs, true)?;
    Ok(match doc.labels {
        Some(l) => space.with_labels(l)?,
        None => space,
    })
}

fn parse_matrix(text: &str) -> Result<ToleranceSpace> {
    let rows: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
    let mut matrix = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let cells: Vec<bool> = row
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(anyhow!("row {i}: unexpected character {other:?}")),
            })
            .collect::<Result<_>>()?;
        if cells.len() != rows.len() {
            bail!("row {i} has {} entries, expected {}", cells.len(), rows.len());
        }
        if !cells[i] {
            bail!("row {i}: diagonal entry must be 1");
        }
        matrix.push(cells);
    }
    Ok(ToleranceSpace::from_matrix(&matrix)?)
}

/// First column labels the object; the remaining columns are attributes.
/// Objects are related when the share of equal attribute values is at least
/// `theta`.
fn parse_info_table(text: &str, theta: f64) -> Result<ToleranceSpace> {
    if !(0.0..=1.0).contains(&theta) {
        bail!("--theta must lie in [0, 1], got {theta}");
    }
    let mut reader = csv::ReaderBuilder::new().has_headers(true).from_reader(text.as_bytes());
    let width = reader.headers()?.len();
    if width < 2 {
        bail!("info table needs an object column and at least one attribute");
    }
    let mut labels = Vec::new();
    let mut rows: Vec<Vec<String>> = Vec::new();
    for record in reader.records() {
        let record = record?;
        labels.push(record[0].to_string());
        rows.push(record.iter().skip(1).map(str::to_string).collect());
    }
    let attrs = (width - 1) as f64;
    let mut pairs = Vec::new();
    for i in 0..rows.len() {
        for j in (i + 1)..rows.len() {
            let equal = rows[i].iter().zip(&rows[j]).filter(|(a, b)| a == b).count();
            if equal as f64 / attrs >= theta {
                pairs.push((i, j));
            }
        }
    }
    Ok(ToleranceSpace::build(rows.len(), &pairs, true)?.with_labels(labels)?)
}

/// Canonical pairs-json: sorted `i < j` pairs, labels when present, no
/// whitespace.
pub fn canonical_json(space: &ToleranceSpace) -> String {
    let doc = PairsDoc {
        n: space.size(),
        labels: space.labels().map(<[String]>::to_vec),
        pairs: space.edges(),
    };
    serde_json::to_string(&doc).expect("plain data serializes")
}

pub fn digest(space: &ToleranceSpace) -> String {
    hex::encode(Sha256::digest(canonical_json(space).as_bytes()))
}

pub fn export(space: &ToleranceSpace, format: Format) -> Result<String> {
    match format {
        Format::PairsJson => Ok(canonical_json(space) + "\n"),
        Format::MatrixText => {
            if space.labels().is_some() {
                bail!("matrix-text cannot carry labels; export as pairs-json");
            }
            let mut out = String::new();
            for i in 0..space.size() {
                for j in 0..space.size() {
                    out.push(if space.related(i, j) { '1' } else { '0' });
                }
                out.push('\n');
            }
            Ok(out)
        }
        Format::InfoTableCsv => bail!("info tables are input-only"),
    }
}

/// Parses `0,2`, `{0,2}`, `{}` or label lists like `a,c`.
pub fn parse_subset(space: &ToleranceSpace, text: &str) -> Result<Subset> {
    let inner = text.trim().trim_start_matches('{').trim_end_matches('}').trim();
    let mut s = Subset::EMPTY;
    if inner.is_empty() {
        return Ok(s);
    }
    for tok in inner.split(',').map(str::trim) {
        let i = match tok.parse::<usize>() {
            Ok(i) => i,
            Err(_) => space
                .label_index(tok)
                .ok_or_else(|| anyhow!("unknown point {tok:?}"))?,
        };
        if i >= space.size() {
            bail!("point {i} outside a universe of {} points", space.size());
        }
        s = s.with(i);
    }
    Ok(s)
}

/// The relation graph in DOT, blocks listed as comments.
pub fn dot(space: &ToleranceSpace, blocks: &[Subset]) -> String {
    let name = |i: usize| match space.labels() {
        Some(l) => format!("{:?}", l[i]),
        None => format!("\"{i}\""),
    };
    let mut out = String::from("graph tolerance {\n");
    for (k, b) in blocks.iter().enumerate() {
        let _ = writeln!(out, "  // block {k}: {b}");
    }
    for i in 0..space.size() {
        let _ = writeln!(out, "  {};", name(i));
    }
    for (i, j) in space.edges() {
        let _ = writeln!(out, "  {} -- {};", name(i), name(j));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairs_json_round_trip() {
        let s = parse_space(r#"{"n":3,"pairs":[[1,2],[0,1]]}"#, Format::PairsJson, None).unwrap();
        assert_eq!(canonical_json(&s), r#"{"n":3,"pairs":[[0,1],[1,2]]}"#);
        let t = parse_space(&export(&s, Format::MatrixText).unwrap(), Format::MatrixText, None).unwrap();
        assert_eq!(digest(&s), digest(&t));
    }

    #[test]
    fn matrix_rejects_asymmetry_and_bad_diagonal() {
        assert!(parse_space("11\n01\n", Format::MatrixText, None).is_err());
        assert!(parse_space("10\n00\n", Format::MatrixText, None).is_err());
        assert!(parse_space("1x\n11\n", Format::MatrixText, None).is_err());
    }

    #[test]
    fn info_table_matching_coefficient() {
        let csv = "object,colour,size\na,red,big\nb,red,big\nc,red,small\n";
        let full = parse_space(csv, Format::InfoTableCsv, Some(1.0)).unwrap();
        assert_eq!(full.edges(), [(0, 1)]);
        let half = parse_space(csv, Format::InfoTableCsv, Some(0.5)).unwrap();
        assert_eq!(half.edges(), [(0, 1), (0, 2), (1, 2)]);
        assert_eq!(half.labels().unwrap(), ["a", "b", "c"]);
        assert!(parse_space(csv, Format::InfoTableCsv, None).is_err());
        assert!(parse_space(csv, Format::InfoTableCsv, Some(1.5)).is_err());
    }

    #[test]
    fn subsets_by_index_or_label() {
        let s = parse_space(r#"{"n":3,"labels":["a","b","c"],"pairs":[]}"#, Format::PairsJson, None).unwrap();
        assert_eq!(parse_subset(&s, "{0,2}").unwrap(), Subset::from_indices([0, 2]));
        assert_eq!(parse_subset(&s, "a,c").unwrap(), Subset::from_indices([0, 2]));
        assert_eq!(parse_subset(&s, "{}").unwrap(), Subset::EMPTY);
        assert!(parse_subset(&s, "3").is_err());
        assert!(parse_subset(&s, "z").is_err());
    }
}
