//! The 42 smooth rational curves on the generalized Kummer surface
//! `GKm(A)`, the minimal resolution of `A/⟨σ × σ²⟩`.
//!
//! Nodes are the images of the 24 elliptic curves plus the 18 exceptional
//! curves `ℓ_qr`, `ℓ′_qr` over the nine `A₂` points `P_qr`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::abelian::{orbit_decomposition, APoint, Atlas};
use crate::error::{Error, Result};
use crate::names::{CurveKind, CurveName, Family};
use crate::nslattice::{curve_class, GramData};
use crate::quatorder::GeneratorSolution;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConfigCurve {
    Image(CurveName),
    Exceptional { family: Family, q: u8, r: u8 },
}

impl ConfigCurve {
    pub fn family(&self) -> Family {
        match self {
            ConfigCurve::Image(n) => n.family,
            ConfigCurve::Exceptional { family, .. } => *family,
        }
    }

    pub fn is_exceptional(&self) -> bool {
        matches!(self, ConfigCurve::Exceptional { .. })
    }

    pub fn ell(family: Family, q: u8, r: u8) -> Self {
        ConfigCurve::Exceptional { family, q, r }
    }
}

impl fmt::Display for ConfigCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfigCurve::Image(n) => write!(f, "{n}"),
            ConfigCurve::Exceptional { family, q, r } => {
                write!(f, "l{q}{r}{}", family.suffix())
            }
        }
    }
}

impl FromStr for ConfigCurve {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let Some(rest) = s.strip_prefix('l') else {
            return s.parse().map(ConfigCurve::Image);
        };
        let (digits, family) = match rest.strip_suffix('\'') {
            Some(d) => (d, Family::Second),
            None => (rest, Family::First),
        };
        let b = digits.as_bytes();
        if b.len() != 2 || !b.iter().all(|c| (b'0'..=b'2').contains(c)) {
            return Err(Error::UnknownCurve(s.to_string()));
        }
        Ok(ConfigCurve::ell(family, b[0] - b'0', b[1] - b'0'))
    }
}

/// `E₀..π₂, ℓ₀₀..ℓ₂₂`, then the primed curves in the same order.
pub fn node_order() -> Vec<ConfigCurve> {
    let mut out = Vec::with_capacity(42);
    for family in [Family::First, Family::Second] {
        for kind in CurveKind::ALL {
            for i in 0..3 {
                out.push(ConfigCurve::Image(CurveName::new(kind, family, i)));
            }
        }
        for q in 0..3 {
            for r in 0..3 {
                out.push(ConfigCurve::ell(family, q, r));
            }
        }
    }
    out
}

/// A symmetric incidence matrix on the 42 curves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigGraph {
    pub nodes: Vec<ConfigCurve>,
    pub incidence: Vec<Vec<i64>>,
}

impl ConfigGraph {
    pub fn empty() -> Self {
        let nodes = node_order();
        let n = nodes.len();
        ConfigGraph {
            nodes,
            incidence: vec![vec![0; n]; n],
        }
    }

    pub fn index(&self, c: ConfigCurve) -> usize {
        self.nodes
            .iter()
            .position(|&n| n == c)
            .unwrap_or_else(|| panic!("{c} is not a node"))
    }

    pub fn get(&self, a: ConfigCurve, b: ConfigCurve) -> i64 {
        self.incidence[self.index(a)][self.index(b)]
    }

    pub fn set(&mut self, a: ConfigCurve, b: ConfigCurve, v: i64) {
        let (i, j) = (self.index(a), self.index(b));
        self.incidence[i][j] = v;
        self.incidence[j][i] = v;
    }

    pub fn neighbors(&self, c: ConfigCurve) -> Vec<ConfigCurve> {
        let i = self.index(c);
        self.nodes
            .iter()
            .zip(&self.incidence[i])
            .filter(|(_, &v)| v != 0)
            .map(|(n, _)| *n)
            .collect()
    }

    /// Unordered pairs whose entries differ, with this graph's value first.
    pub fn differences(&self, other: &ConfigGraph) -> Vec<(ConfigCurve, ConfigCurve, i64, i64)> {
        let n = self.nodes.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i..n {
                let (a, b) = (self.incidence[i][j], other.incidence[i][j]);
                if a != b {
                    out.push((self.nodes[i], self.nodes[j], a, b));
                }
            }
        }
        out
    }

    pub fn to_export(&self) -> GraphExport {
        let nodes = self
            .nodes
            .iter()
            .map(|c| NodeRecord {
                name: c.to_string(),
                kind: if c.is_exceptional() { "exceptional" } else { "image" }.into(),
                family: c.family(),
            })
            .collect();
        let mut edges = Vec::new();
        for i in 0..self.nodes.len() {
            for j in i + 1..self.nodes.len() {
                let v = self.incidence[i][j];
                if v != 0 {
                    edges.push((self.nodes[i].to_string(), self.nodes[j].to_string(), v));
                }
            }
        }
        GraphExport {
            schema_version: 1,
            nodes,
            edges,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_export()).expect("graph serializes")
    }

    pub fn to_dot(&self) -> String {
        render_dot("gkm", &self.to_export())
    }

    /// Full matrix with a header row and column of node names.
    pub fn to_csv(&self) -> String {
        let names: Vec<String> = self.nodes.iter().map(|c| c.to_string()).collect();
        let mut s = format!(",{}\n", names.join(","));
        for (name, row) in names.iter().zip(&self.incidence) {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            s.push_str(&format!("{name},{}\n", cells.join(",")));
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeRecord {
    pub name: String,
    pub kind: String,
    pub family: Family,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphExport {
    pub schema_version: u32,
    pub nodes: Vec<NodeRecord>,
    pub edges: Vec<(String, String, i64)>,
}

impl GraphExport {
    pub fn into_graph(self) -> Result<ConfigGraph> {
        let mut g = ConfigGraph::empty();
        for (a, b, v) in self.edges {
            g.set(a.parse()?, b.parse()?, v);
        }
        Ok(g)
    }
}

/// Graphviz description; first-family nodes are boxes.
pub fn render_dot(name: &str, export: &GraphExport) -> String {
    let mut s = format!("graph {name} {{\n");
    for n in &export.nodes {
        let shape = match n.family {
            Family::First => "box",
            Family::Second => "ellipse",
        };
        s.push_str(&format!("  \"{}\" [shape={shape}];\n", n.name));
    }
    for (a, b, v) in &export.edges {
        if *v == 1 {
            s.push_str(&format!("  \"{a}\" -- \"{b}\";\n"));
        } else {
            s.push_str(&format!("  \"{a}\" -- \"{b}\" [label={v}];\n"));
        }
    }
    s.push_str("}\n");
    s
}

/// Incidence read off the torsion data:
/// image curves of opposite families meet once per 3-orbit of common
/// points outside `A(F_2)`; `ℓ_qr` meets the second-family curves through
/// `P_qr` and `ℓ′_qr` the first-family ones; `ℓ_qr · ℓ′_qr = 1`.
pub fn derive_incidence(atlas: &Atlas) -> Result<ConfigGraph> {
    let mut g = ConfigGraph::empty();
    let curves: Vec<CurveName> = atlas.curves().iter().map(|c| c.name).collect();
    for &a in curves.iter().filter(|c| c.family == Family::First) {
        for &b in curves.iter().filter(|c| c.family == Family::Second) {
            let common: BTreeSet<APoint> = atlas.common_points(a, b);
            let split = orbit_decomposition(&common)?;
            if split.fixed.iter().any(|p| !p.is_f2()) {
                return Err(Error::Model(format!("{a} and {b} share a fixed point off A(F_2)")));
            }
            g.set(ConfigCurve::Image(a), ConfigCurve::Image(b), split.orbits.len() as i64);
        }
    }
    for q in 0..3u8 {
        for r in 0..3u8 {
            let p = APoint::p(q as usize, r as usize);
            for c in atlas.curves_through(p) {
                let ell = ConfigCurve::ell(c.family.other(), q, r);
                g.set(ell, ConfigCurve::Image(c), 1);
            }
            g.set(
                ConfigCurve::ell(Family::First, q, r),
                ConfigCurve::ell(Family::Second, q, r),
                1,
            );
        }
    }
    Ok(g)
}

/// Incidence filled in from the printed closed-form rules.
pub fn closed_form_incidence() -> ConfigGraph {
    use CurveKind::{Pi, E, F, V};
    use Family::{First, Second};
    let d = |a: u8, b: u8| i64::from(a == b);
    let img = |k, fam, i| ConfigCurve::Image(CurveName::new(k, fam, i));
    let ell = |q, r| ConfigCurve::ell(First, q, r);
    let ellp = |q, r| ConfigCurve::ell(Second, q, r);
    let listed = |q: u8, r: u8, pairs: &[(u8, u8)]| i64::from(pairs.contains(&(q, r)));
    let mut g = ConfigGraph::empty();
    for i in 0..3 {
        for j in 0..3 {
            g.set(img(F, First, i), img(F, Second, j), 1 - d(i, j));
            g.set(img(V, First, i), img(V, Second, j), 1 - d(i, j));
            g.set(img(Pi, First, i), img(E, Second, j), 1 - d(i, j));
            g.set(img(E, First, i), img(Pi, Second, j), 1 - d(i, j));
        }
    }
    for q in 0..3 {
        for r in 0..3 {
            for s in 0..3 {
                for t in 0..3 {
                    g.set(ell(q, r), ellp(s, t), d(q, s) * d(r, t));
                }
            }
            for i in 0..3 {
                g.set(ell(q, r), img(E, Second, i), d(r, i));
                g.set(ell(q, r), img(Pi, Second, i), d(q, i));
                g.set(ellp(q, r), img(E, First, i), d(q, i));
                g.set(ellp(q, r), img(Pi, First, i), d(r, i));
            }
            g.set(ell(q, r), img(F, Second, 0), d(q, r));
            g.set(ellp(q, r), img(F, First, 0), d(q, r));
            let a = [(0, 1), (1, 2), (2, 0)];
            let b = [(0, 2), (1, 0), (2, 1)];
            g.set(ell(q, r), img(F, Second, 1), listed(q, r, &a));
            g.set(ellp(q, r), img(F, First, 1), listed(q, r, &b));
            g.set(ell(q, r), img(F, Second, 2), listed(q, r, &b));
            g.set(ellp(q, r), img(F, First, 2), listed(q, r, &a));
            let v0 = [(0, 0), (1, 2), (2, 1)];
            let v1 = [(0, 1), (1, 0), (2, 2)];
            g.set(ell(q, r), img(V, Second, 0), listed(q, r, &v0));
            g.set(ellp(q, r), img(V, First, 0), listed(q, r, &v0));
            g.set(ell(q, r), img(V, Second, 1), listed(q, r, &v1));
            g.set(ellp(q, r), img(V, First, 1), listed(q, r, &v1));
            g.set(ell(q, r), img(V, Second, 2), d(q + r, 2));
            g.set(ellp(q, r), img(V, First, 2), d(q + r, 2));
        }
    }
    g
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigReport {
    pub first_family: usize,
    pub second_family: usize,
    pub within_family_zero: bool,
    pub entries_zero_or_one: bool,
    pub row_sums: BTreeSet<i64>,
    pub total_incidences: i64,
}

impl ConfigReport {
    pub fn passes(&self) -> bool {
        self.first_family == 21
            && self.second_family == 21
            && self.within_family_zero
            && self.entries_zero_or_one
            && self.row_sums == BTreeSet::from([5])
            && self.total_incidences == 105
    }
}

/// Checks the `(21)₅` shape: two families of 21 disjoint curves, each
/// meeting exactly five of the other family once.
pub fn verify_config(g: &ConfigGraph) -> ConfigReport {
    let n = g.nodes.len();
    let fam = |i: usize| g.nodes[i].family();
    let mut within_family_zero = true;
    let mut entries_zero_or_one = true;
    let mut total = 0;
    for i in 0..n {
        for j in 0..n {
            let v = g.incidence[i][j];
            entries_zero_or_one &= v == 0 || v == 1;
            if fam(i) == fam(j) {
                within_family_zero &= v == 0;
            } else if i < j {
                total += v;
            }
        }
    }
    ConfigReport {
        first_family: (0..n).filter(|&i| fam(i) == Family::First).count(),
        second_family: (0..n).filter(|&i| fam(i) == Family::Second).count(),
        within_family_zero,
        entries_zero_or_one,
        row_sums: g.incidence.iter().map(|r| r.iter().sum()).collect(),
        total_incidences: total,
    }
}

/// The four `I₆` fibers in the printed cyclic order.
pub fn printed_hexagons() -> [[ConfigCurve; 6]; 4] {
    let p = |s: &str| s.parse::<ConfigCurve>().expect("valid curve name");
    [
        ["F0", "F1'", "F2", "F0'", "F1", "F2'"],
        ["V0", "V1'", "V2", "V0'", "V1", "V2'"],
        ["pi0", "E1'", "pi2", "E0'", "pi1", "E2'"],
        ["E0", "pi1'", "E2", "pi0'", "E1", "pi2'"],
    ]
    .map(|h| h.map(p))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hexagon {
    /// Nodes in cyclic order, starting at the smallest.
    pub cycle: Vec<String>,
    pub square: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FibrationReport {
    pub hexagons: Vec<Hexagon>,
    pub all_components_hexagons: bool,
    pub matches_printed_sets: bool,
    /// Printed cyclic orders that are not cycles of the graph.
    pub printed_orders_not_cycles: Vec<usize>,
    pub fiber_classes_agree: bool,
    pub sections: usize,
    pub every_section_meets_each_fiber_once: bool,
    pub euler_number: usize,
}

impl FibrationReport {
    pub fn passes(&self) -> bool {
        self.hexagons.len() == 4
            && self.all_components_hexagons
            && self.matches_printed_sets
            && self.hexagons.iter().all(|h| h.square == 0)
            && self.fiber_classes_agree
            && self.sections == 18
            && self.every_section_meets_each_fiber_once
            && self.euler_number == 24
    }
}

fn gram_entry(g: &ConfigGraph, i: usize, j: usize) -> i64 {
    if i == j {
        -2
    } else {
        g.incidence[i][j]
    }
}

/// `H · C` for every node `C`, with `H` the sum of the given nodes.
pub fn class_products(g: &ConfigGraph, members: &[usize]) -> Vec<i64> {
    (0..g.nodes.len())
        .map(|c| members.iter().map(|&m| gram_entry(g, m, c)).sum())
        .collect()
}

/// Components of the graph on the 24 image curves, each walked as a cycle
/// when it is one.
fn image_components(g: &ConfigGraph) -> Vec<Vec<usize>> {
    let images: Vec<usize> = (0..g.nodes.len())
        .filter(|&i| !g.nodes[i].is_exceptional())
        .collect();
    let adj = |i: usize| -> Vec<usize> {
        images
            .iter()
            .copied()
            .filter(|&j| g.incidence[i][j] != 0)
            .collect()
    };
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &start in &images {
        if seen.contains(&start) {
            continue;
        }
        let mut comp = vec![start];
        seen.insert(start);
        let mut k = 0;
        while k < comp.len() {
            for j in adj(comp[k]) {
                if seen.insert(j) {
                    comp.push(j);
                }
            }
            k += 1;
        }
        // walk as a cycle when 2-regular
        if comp.iter().all(|&i| adj(i).len() == 2) {
            let mut walk = vec![start];
            let mut prev = usize::MAX;
            let mut cur = start;
            loop {
                let next = adj(cur).into_iter().find(|&j| j != prev).unwrap();
                if next == start {
                    break;
                }
                if walk.len() > comp.len() {
                    break;
                }
                walk.push(next);
                prev = cur;
                cur = next;
            }
            if walk.len() == comp.len() {
                comp = walk;
            }
        }
        out.push(comp);
    }
    out
}

fn is_cycle(g: &ConfigGraph, order: &[ConfigCurve]) -> bool {
    (0..order.len()).all(|k| g.get(order[k], order[(k + 1) % order.len()]) != 0)
}

/// Finds the image-curve hexagons and checks that they are fibers of one
/// elliptic fibration with the 18 exceptional curves as sections.
pub fn fibration_analysis(g: &ConfigGraph) -> FibrationReport {
    let comps = image_components(g);
    let all_components_hexagons = comps.iter().all(|c| {
        c.len() == 6 && c.iter().all(|&i| c.iter().filter(|&&j| g.incidence[i][j] != 0).count() == 2)
    });
    let found_sets: BTreeSet<BTreeSet<ConfigCurve>> = comps
        .iter()
        .map(|c| c.iter().map(|&i| g.nodes[i]).collect())
        .collect();
    let printed = printed_hexagons();
    let printed_sets: BTreeSet<BTreeSet<ConfigCurve>> = printed
        .iter()
        .map(|h| h.iter().copied().collect())
        .collect();
    let printed_orders_not_cycles = (0..4).filter(|&k| !is_cycle(g, &printed[k])).collect();
    let products: Vec<Vec<i64>> = comps.iter().map(|c| class_products(g, c)).collect();
    let fiber_classes_agree = products.windows(2).all(|w| w[0] == w[1]);
    let sections: Vec<usize> = (0..g.nodes.len())
        .filter(|&i| g.nodes[i].is_exceptional())
        .collect();
    let every_section_meets_each_fiber_once = products
        .iter()
        .all(|p| sections.iter().all(|&s| p[s] == 1));
    let hexagons = comps
        .iter()
        .zip(&products)
        .map(|(c, p)| Hexagon {
            cycle: c.iter().map(|&i| g.nodes[i].to_string()).collect(),
            square: c.iter().map(|&i| p[i]).sum(),
        })
        .collect();
    FibrationReport {
        hexagons,
        all_components_hexagons,
        matches_printed_sets: found_sets == printed_sets,
        printed_orders_not_cycles,
        fiber_classes_agree,
        sections: sections.len(),
        every_section_meets_each_fiber_once,
        euler_number: comps.iter().map(Vec::len).sum(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiodaTateReport {
    pub picard_number: i64,
    pub gram_rank: usize,
    pub discriminant: i64,
    pub gram_discriminant: i64,
    pub mordell_weil_order: usize,
    pub artin_invariant: Option<u32>,
    /// Recorded, not verified.
    pub mordell_weil_structure: String,
}

impl ShiodaTateReport {
    pub fn passes(&self) -> bool {
        self.picard_number == 22
            && self.gram_rank == 22
            && self.discriminant == -4
            && self.gram_discriminant == self.discriminant
            && self.artin_invariant == Some(1)
    }
}

/// `ρ = 2 + Σ(m_v − 1)` and `disc = (−1)^{ρ−1} Π m_v / |MW|²` for the
/// fibration, set against the Gram data of the 42 curves.
pub fn shioda_tate_report(fib: &FibrationReport, gram: &GramData) -> ShiodaTateReport {
    let fibers: Vec<i64> = fib.hexagons.iter().map(|h| h.cycle.len() as i64).collect();
    let picard_number = 2 + fibers.iter().map(|m| m - 1).sum::<i64>();
    let mw = fib.sections as i64;
    let num: i64 = fibers.iter().product();
    let sign = if picard_number % 2 == 0 { -1 } else { 1 };
    let discriminant = if mw != 0 && num % (mw * mw) == 0 {
        sign * num / (mw * mw)
    } else {
        0
    };
    // |disc| = p^{2σ} with p = 2
    let abs = discriminant.unsigned_abs();
    let artin_invariant = (abs.is_power_of_two() && abs.trailing_zeros() % 2 == 0 && abs > 1)
        .then(|| abs.trailing_zeros() / 2);
    ShiodaTateReport {
        picard_number,
        gram_rank: gram.rank,
        discriminant,
        gram_discriminant: gram.discriminant,
        mordell_weil_order: fib.sections,
        artin_invariant,
        mordell_weil_structure: "Z/6 x Z/3".into(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractionReport {
    pub family: Family,
    pub contracted: usize,
    pub pairwise_disjoint: bool,
    pub a1_points: usize,
}

impl ContractionReport {
    pub fn passes(&self) -> bool {
        self.contracted == 21 && self.pairwise_disjoint && self.a1_points == 21
    }
}

/// Contracting a family of disjoint `(−2)`-curves yields one `A₁` point
/// per curve.
pub fn contract_family(g: &ConfigGraph, family: Family) -> ContractionReport {
    let members: Vec<usize> = (0..g.nodes.len())
        .filter(|&i| g.nodes[i].family() == family)
        .collect();
    let pairwise_disjoint = members
        .iter()
        .all(|&i| members.iter().all(|&j| g.incidence[i][j] == 0));
    ContractionReport {
        family,
        contracted: members.len(),
        pairwise_disjoint,
        a1_points: if pairwise_disjoint { members.len() } else { 0 },
    }
}

/// A pair of image curves whose point count on `A` disagrees with its
/// class pairing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairMismatch {
    pub a: CurveName,
    pub b: CurveName,
    pub points: i64,
    pub pairing: i64,
}

/// Compares `|C₁ ∩ C₂|` (times 2 within a family) with the pairing of the
/// classes, over all 276 unordered pairs.
pub fn pair_accounting(atlas: &Atlas, sol: &GeneratorSolution) -> Vec<PairMismatch> {
    let names = CurveName::all();
    let mut out = Vec::new();
    for (k, &a) in names.iter().enumerate() {
        for &b in &names[k + 1..] {
            let common = atlas.common_points(a, b).len() as i64;
            let points = if a.family == b.family { 2 * common } else { common };
            let pairing = curve_class(a, sol).intersection(&curve_class(b, sol));
            if points != pairing {
                out.push(PairMismatch { a, b, points, pairing });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nslattice::gram_and_discriminant;
    use crate::quatorder::{designated, solve_generators};
    use crate::reference::F_BLOCK_ERRATA;

    fn c(s: &str) -> ConfigCurve {
        s.parse().unwrap()
    }

    fn derived() -> ConfigGraph {
        derive_incidence(&Atlas::new()).unwrap()
    }

    #[test]
    fn node_names() {
        let nodes = node_order();
        assert_eq!(nodes.len(), 42);
        for n in &nodes {
            assert_eq!(n.to_string().parse::<ConfigCurve>().unwrap(), *n);
        }
        assert_eq!(nodes[12].to_string(), "l00");
        assert_eq!(nodes[41].to_string(), "l22'");
        assert!("l3".parse::<ConfigCurve>().is_err());
        assert!("l03".parse::<ConfigCurve>().is_err());
    }

    #[test]
    fn derived_examples() {
        let g = derived();
        assert_eq!(g.get(c("F2"), c("F0'")), 1);
        assert_eq!(g.get(c("F0"), c("F0'")), 0);
        for q in 0..3 {
            for r in 0..3 {
                for s in 0..3 {
                    for t in 0..3 {
                        let v = g.get(ConfigCurve::ell(Family::First, q, r), ConfigCurve::ell(Family::Second, s, t));
                        assert_eq!(v, i64::from(q == s && r == t));
                    }
                }
            }
        }
    }

    #[test]
    fn closed_form_examples() {
        let g = closed_form_incidence();
        assert_eq!(g.get(c("E1"), c("pi1'")), 0);
        assert_eq!(g.get(c("l01"), c("F1'")), 1);
        assert_eq!(g.get(c("l00"), c("V0'")), 1);
    }

    #[test]
    fn both_graphs_are_21_5_configurations() {
        for g in [derived(), closed_form_incidence()] {
            let r = verify_config(&g);
            assert!(r.passes(), "{r:?}");
        }
    }

    #[test]
    fn closed_form_differs_only_in_f_block() {
        let diffs = derived().differences(&closed_form_incidence());
        let expected: Vec<_> = F_BLOCK_ERRATA
            .iter()
            .map(|&(i, j)| {
                let a = ConfigCurve::Image(CurveName::new(CurveKind::F, Family::First, i));
                let b = ConfigCurve::Image(CurveName::new(CurveKind::F, Family::Second, j));
                (a, b)
            })
            .collect();
        let got: Vec<_> = diffs.iter().map(|d| (d.0, d.1)).collect();
        assert_eq!(got, expected);
        // derived rule: F_i · F′_j = 1 − [i + j ≡ 0 mod 3]
        let g = derived();
        for i in 0..3u8 {
            for j in 0..3u8 {
                let a = ConfigCurve::Image(CurveName::new(CurveKind::F, Family::First, i));
                let b = ConfigCurve::Image(CurveName::new(CurveKind::F, Family::Second, j));
                assert_eq!(g.get(a, b), i64::from((i + j) % 3 != 0));
            }
        }
    }

    #[test]
    fn fibration() {
        let g = derived();
        let f = fibration_analysis(&g);
        assert!(f.passes(), "{f:?}");
        assert_eq!(f.printed_orders_not_cycles, vec![0]);
        let g2 = closed_form_incidence();
        let f2 = fibration_analysis(&g2);
        assert!(f2.passes());
        assert!(f2.printed_orders_not_cycles.is_empty());
    }

    #[test]
    fn lattice_and_shioda_tate() {
        let g = derived();
        let gram = gram_and_discriminant(&g.incidence);
        assert_eq!(gram.rank, 22);
        assert_eq!(gram.discriminant, -4);
        assert_eq!(gram.elementary_divisors.len(), 22);
        assert_eq!(gram.elementary_divisors.iter().product::<i64>(), 4);
        assert_eq!(gram.index_in(-4), Some(1));
        let st = shioda_tate_report(&fibration_analysis(&g), &gram);
        assert!(st.passes(), "{st:?}");
    }

    #[test]
    fn contraction() {
        let g = derived();
        for fam in [Family::First, Family::Second] {
            assert!(contract_family(&g, fam).passes());
        }
    }

    #[test]
    fn pair_counts_match_pairings() {
        let atlas = Atlas::new();
        for sol in solve_generators().unwrap().iter().step_by(5) {
            assert_eq!(pair_accounting(&atlas, sol), vec![]);
        }
        // cross-family: pairing = 3·orbits + F_2 points
        let g = derived();
        let sol = designated();
        for a in CurveName::all().into_iter().filter(|n| n.family == Family::First) {
            for b in CurveName::all().into_iter().filter(|n| n.family == Family::Second) {
                let f2 = atlas.common_points(a, b).iter().filter(|p| p.is_f2()).count() as i64;
                let orbits = g.get(ConfigCurve::Image(a), ConfigCurve::Image(b));
                assert_eq!(curve_class(a, &sol).intersection(&curve_class(b, &sol)), 3 * orbits + f2);
            }
        }
    }

    #[test]
    fn exports_round_trip() {
        let g = derived();
        let json = g.to_json();
        let back: GraphExport = serde_json::from_str(&json).unwrap();
        assert_eq!(back.edges.len(), 105);
        assert_eq!(back.into_graph().unwrap(), g);
        let dot = g.to_dot();
        assert!(dot.starts_with("graph gkm {"));
        assert_eq!(dot.matches(" -- ").count(), 105);
        let csv = g.to_csv();
        assert_eq!(csv.lines().count(), 43);
    }
}
