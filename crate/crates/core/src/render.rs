//! Markdown, aligned-text and JSON renderings of the tables.

use serde::{Deserialize, Serialize};

use crate::abelian::{f4_labels, torsion_label, APoint, Atlas};
use crate::ecurve::CurvePoint;
use crate::gf2k::Degree;
use crate::gkm::derive_incidence;
use crate::names::CurveName;
use crate::nslattice::{gram_and_discriminant, intersection_table, GramData};
use crate::quatorder::GeneratorSolution;
use crate::report::SCHEMA_VERSION;
use crate::Result;

fn markdown(header: &[String], rows: &[(String, Vec<String>)]) -> String {
    let mut out = format!("| |{}\n", header.iter().map(|h| format!(" {h} |")).collect::<String>());
    out.push_str(&format!("|---|{}\n", "---|".repeat(header.len())));
    for (label, cells) in rows {
        out.push_str(&format!("| {label} |"));
        for c in cells {
            out.push_str(&format!(" {c} |"));
        }
        out.push('\n');
    }
    out
}

fn join(names: &[CurveName]) -> String {
    names.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn base_labels() -> Vec<String> {
    CurveName::base_curves().iter().map(ToString::to_string).collect()
}

/// The 8×8 pairing table of the base curves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionDocument {
    pub schema_version: u32,
    pub order: Vec<String>,
    pub entries: Vec<Vec<i64>>,
}

impl IntersectionDocument {
    pub fn new(sol: &GeneratorSolution) -> Self {
        IntersectionDocument {
            schema_version: SCHEMA_VERSION,
            order: base_labels(),
            entries: intersection_table(sol).iter().map(|r| r.to_vec()).collect(),
        }
    }

    pub fn to_markdown(&self) -> String {
        let rows: Vec<_> = self
            .order
            .iter()
            .zip(&self.entries)
            .map(|(l, r)| (l.clone(), r.iter().map(ToString::to_string).collect()))
            .collect();
        markdown(&self.order, &rows)
    }

    /// Right-aligned columns.
    pub fn to_text(&self) -> String {
        let mut out = format!("{:>5}", "");
        for l in &self.order {
            out.push_str(&format!("{l:>5}"));
        }
        out.push('\n');
        for (l, row) in self.order.iter().zip(&self.entries) {
            out.push_str(&format!("{l:>5}"));
            for v in row {
                out.push_str(&format!("{v:>5}"));
            }
            out.push('\n');
        }
        out
    }
}

/// Curves through one point of `A`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionCell {
    pub row: String,
    pub column: String,
    pub point: String,
    pub curves: Vec<CurveName>,
}

/// An incidence table over torsion points: column is the first factor,
/// row the second.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionDocument {
    pub schema_version: u32,
    pub field: String,
    pub labels: Vec<String>,
    pub cells: Vec<TorsionCell>,
}

impl TorsionDocument {
    fn build(atlas: &Atlas, field: Degree, labels: &[CurvePoint]) -> Self {
        let names: Vec<String> = labels.iter().map(|&p| torsion_label(p)).collect();
        let mut cells = Vec::new();
        for (r, &row) in labels.iter().enumerate() {
            for (c, &col) in labels.iter().enumerate() {
                let p = APoint::new(col, row);
                if field == Degree::F4 && p.is_f2() {
                    continue;
                }
                cells.push(TorsionCell {
                    row: names[r].clone(),
                    column: names[c].clone(),
                    point: p.to_string(),
                    curves: atlas.curves_through(p),
                });
            }
        }
        TorsionDocument {
            schema_version: SCHEMA_VERSION,
            field: field.to_string(),
            labels: names,
            cells,
        }
    }

    /// The `A(F_2)` table.
    pub fn f2(atlas: &Atlas) -> Self {
        let labels: Vec<CurvePoint> = (0..3).map(|i| CurvePoint::torsion_f2(i, Degree::F4)).collect();
        Self::build(atlas, Degree::F2, &labels)
    }

    /// The `A(F_4) ∖ A(F_2)` table.
    pub fn f4(atlas: &Atlas) -> Self {
        Self::build(atlas, Degree::F4, &f4_labels())
    }

    pub fn to_markdown(&self) -> String {
        let rows: Vec<_> = self
            .labels
            .iter()
            .map(|r| {
                let cells = self
                    .labels
                    .iter()
                    .map(|c| {
                        self.cells
                            .iter()
                            .find(|x| &x.row == r && &x.column == c)
                            .map_or_else(String::new, |x| join(&x.curves))
                    })
                    .collect();
                (r.clone(), cells)
            })
            .collect();
        markdown(&self.labels, &rows)
    }
}

/// The 8×8 table with the Gram data of the 42 curves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeDocument {
    pub schema_version: u32,
    pub order: Vec<String>,
    pub entries: Vec<Vec<i64>>,
    pub rank: usize,
    pub elementary_divisors: Vec<i64>,
    pub discriminant: i64,
    /// Index of the span of the curves in a lattice of discriminant `-4`.
    pub index: Option<i64>,
}

impl LatticeDocument {
    pub fn new(sol: &GeneratorSolution, atlas: &Atlas) -> Result<Self> {
        let table = IntersectionDocument::new(sol);
        let gram = gram_and_discriminant(&derive_incidence(atlas)?.incidence);
        let index = gram.index_in(-4);
        let GramData {
            rank,
            elementary_divisors,
            discriminant,
            ..
        } = gram;
        Ok(LatticeDocument {
            schema_version: SCHEMA_VERSION,
            order: table.order,
            entries: table.entries,
            rank,
            elementary_divisors,
            discriminant,
            index,
        })
    }

    pub fn to_text(&self) -> String {
        let table = IntersectionDocument {
            schema_version: SCHEMA_VERSION,
            order: self.order.clone(),
            entries: self.entries.clone(),
        };
        let divisors: Vec<String> = self.elementary_divisors.iter().map(ToString::to_string).collect();
        format!(
            "{}\nrank                 {}\nelementary divisors  {}\ndiscriminant         {}\nindex                {}\n",
            table.to_text(),
            self.rank,
            divisors.join(" "),
            self.discriminant,
            self.index.map_or("none".to_string(), |i| i.to_string()),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quatorder::designated;
    use crate::reference::INTERSECTION_TABLE;

    #[test]
    fn intersection_markdown_layout() {
        let doc = IntersectionDocument::new(&designated());
        let md = doc.to_markdown();
        assert_eq!(md.lines().count(), 10);
        assert!(md.starts_with("| | E0 | F0 | V0 | pi0 | E0' | F0' | V0' | pi0' |\n"));
        assert!(md.contains("\n| E0 | 0 | 2 | 2 | 2 | 1 | 1 | 1 | 3 |\n"));
        assert_eq!(doc.entries[0], INTERSECTION_TABLE[0].to_vec());
    }

    #[test]
    fn torsion_documents() {
        let atlas = Atlas::new();
        let f2 = TorsionDocument::f2(&atlas);
        assert_eq!(f2.labels, ["P0", "P1", "P2"]);
        assert_eq!(f2.cells.len(), 9);
        assert_eq!(f2.cells[0].point, "OxO");
        let f4 = TorsionDocument::f4(&atlas);
        assert_eq!(f4.cells.len(), 72);
        assert_eq!(f4.cells[0].point, "(1,w)x(1,w)");
        let md = f4.to_markdown();
        assert_eq!(md.lines().count(), 11);
        let json = serde_json::to_string(&f4).unwrap();
        assert_eq!(serde_json::from_str::<TorsionDocument>(&json).unwrap(), f4);
    }

    #[test]
    fn lattice_document_keys() {
        let doc = LatticeDocument::new(&designated(), &Atlas::new()).unwrap();
        let v = serde_json::to_value(&doc).unwrap();
        for key in ["order", "entries", "rank", "elementary_divisors", "discriminant"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(doc.rank, 22);
        assert_eq!(doc.discriminant, -4);
        assert_eq!(doc.index, Some(1));
        assert!(doc.to_text().contains("discriminant         -4"));
    }
}
