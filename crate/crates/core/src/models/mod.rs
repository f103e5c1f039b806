//! Two further realizations of the `(21)₅` configuration: points and lines
//! of `P²(F_4)`, and the 42 lines on the surface
//! `Σ xᵢyᵢ² = Σ xᵢ²yᵢ = 0` in `P² × P²`.

mod iso;

pub use iso::{graph_iso, Isomorphism};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::gf2k::{self, Degree, Gf};
use crate::gkm::{render_dot, ConfigGraph, GraphExport, NodeRecord};
use crate::names::Family;

/// A point of `P²(F_4)` with first nonzero coordinate 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint([Gf; 3]);

impl ProjPoint {
    /// Scales to the canonical representative; `None` for the zero vector.
    pub fn new(coords: [Gf; 3]) -> Option<Self> {
        let lead = coords.iter().find(|c| !c.is_zero())?;
        let inv = lead.inv().ok()?;
        Some(ProjPoint(coords.map(|c| c * inv)))
    }

    pub fn coords(&self) -> [Gf; 3] {
        self.0
    }

    /// All 21 points, ordered by canonical coordinates.
    pub fn all() -> Vec<ProjPoint> {
        let f = gf2k::enumerate(Degree::F4);
        let mut out = Vec::with_capacity(21);
        for &a in &f {
            for &b in &f {
                for &c in &f {
                    let p = [a, b, c];
                    if ProjPoint::new(p).map(|q| q.0) == Some(p) {
                        out.push(ProjPoint(p));
                    }
                }
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.0;
        write!(f, "({a}:{b}:{c})")
    }
}

fn dot(a: [Gf; 3], b: [Gf; 3]) -> Gf {
    a.iter()
        .zip(&b)
        .fold(Gf::zero(Degree::F4), |acc, (x, y)| acc + *x * *y)
}

fn squared(a: [Gf; 3]) -> [Gf; 3] {
    a.map(Gf::square)
}

/// A bipartite graph with parts of equal role: `incidence[i][j]` links
/// `left[i]` and `right[j]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartiteGraph {
    pub left: Vec<String>,
    pub right: Vec<String>,
    pub incidence: Vec<Vec<u8>>,
}

impl BipartiteGraph {
    /// The cross-family block of a configuration graph; the first family
    /// is the left part.
    pub fn from_config(g: &ConfigGraph) -> Self {
        let part = |fam: Family| -> Vec<usize> {
            (0..g.nodes.len()).filter(|&i| g.nodes[i].family() == fam).collect()
        };
        let (l, r) = (part(Family::First), part(Family::Second));
        BipartiteGraph {
            left: l.iter().map(|&i| g.nodes[i].to_string()).collect(),
            right: r.iter().map(|&j| g.nodes[j].to_string()).collect(),
            incidence: l
                .iter()
                .map(|&i| r.iter().map(|&j| u8::from(g.incidence[i][j] != 0)).collect())
                .collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        BipartiteGraph {
            left: self.right.clone(),
            right: self.left.clone(),
            incidence: (0..self.right.len())
                .map(|j| (0..self.left.len()).map(|i| self.incidence[i][j]).collect())
                .collect(),
        }
    }

    pub fn left_degrees(&self) -> Vec<usize> {
        self.incidence
            .iter()
            .map(|r| r.iter().filter(|&&v| v != 0).count())
            .collect()
    }

    pub fn right_degrees(&self) -> Vec<usize> {
        self.transpose().left_degrees()
    }

    pub fn edge_count(&self) -> usize {
        self.left_degrees().iter().sum()
    }

    /// Both parts of size `n` and every node of degree `k`.
    pub fn is_regular(&self, n: usize, k: usize) -> bool {
        self.left.len() == n
            && self.right.len() == n
            && self.left_degrees().iter().all(|&d| d == k)
            && self.right_degrees().iter().all(|&d| d == k)
    }

    /// Any two nodes of the left part share exactly `k` neighbors.
    pub fn left_pairs_share(&self, k: usize) -> bool {
        let n = self.left.len();
        (0..n).all(|a| {
            (a + 1..n).all(|b| {
                (0..self.right.len())
                    .filter(|&j| self.incidence[a][j] != 0 && self.incidence[b][j] != 0)
                    .count()
                    == k
            })
        })
    }

    pub fn to_export(&self) -> GraphExport {
        let node = |name: &String, family| NodeRecord {
            name: name.clone(),
            kind: "vertex".into(),
            family,
        };
        let mut nodes: Vec<NodeRecord> = self.left.iter().map(|n| node(n, Family::First)).collect();
        nodes.extend(self.right.iter().map(|n| node(n, Family::Second)));
        let mut edges = Vec::new();
        for (i, row) in self.incidence.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v != 0 {
                    edges.push((self.left[i].clone(), self.right[j].clone(), i64::from(v)));
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

    pub fn to_dot(&self, name: &str) -> String {
        render_dot(name, &self.to_export())
    }

    /// Biadjacency matrix with node names on both axes.
    pub fn to_csv(&self) -> String {
        let mut s = format!(",{}\n", self.right.join(","));
        for (name, row) in self.left.iter().zip(&self.incidence) {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            s.push_str(&format!("{name},{}\n", cells.join(",")));
        }
        s
    }
}

/// Points of `P²(F_4)` against its lines, `p ∈ L[b]` iff `Σ pᵢbᵢ = 0`.
pub fn pg24() -> BipartiteGraph {
    let pts = ProjPoint::all();
    BipartiteGraph {
        left: pts.iter().map(|p| format!("p{p}")).collect(),
        right: pts.iter().map(|p| format!("L{p}")).collect(),
        incidence: pts
            .iter()
            .map(|p| {
                pts.iter()
                    .map(|l| u8::from(dot(p.0, l.0).is_zero()))
                    .collect()
            })
            .collect(),
    }
}

/// The surface equations `(Σ xᵢyᵢ², Σ xᵢ²yᵢ)` at `(x, y)`.
pub fn surface_equations(x: ProjPoint, y: ProjPoint) -> (Gf, Gf) {
    (dot(x.0, squared(y.0)), dot(squared(x.0), y.0))
}

/// `A(a) = {x = a, Σ aᵢ²yᵢ = 0}` against `B(b) = {y = b, Σ xᵢbᵢ² = 0}`;
/// they meet iff `(a, b)` lies on both.
pub fn p2p2_lines() -> BipartiteGraph {
    let pts = ProjPoint::all();
    let meets = |a: ProjPoint, b: ProjPoint| {
        let on_a = dot(squared(a.0), b.0).is_zero();
        let on_b = dot(a.0, squared(b.0)).is_zero();
        on_a && on_b
    };
    BipartiteGraph {
        left: pts.iter().map(|p| format!("A{p}")).collect(),
        right: pts.iter().map(|p| format!("B{p}")).collect(),
        incidence: pts
            .iter()
            .map(|&a| pts.iter().map(|&b| u8::from(meets(a, b))).collect())
            .collect(),
    }
}

/// Pairs `(a, b)` where `Σ aᵢ²bᵢ = 0` and `Σ aᵢbᵢ² = 0` disagree.
pub fn frobenius_twin_disagreements() -> usize {
    let pts = ProjPoint::all();
    pts.iter()
        .flat_map(|&a| pts.iter().map(move |&b| (a, b)))
        .filter(|(a, b)| {
            dot(squared(a.0), b.0).is_zero() != dot(a.0, squared(b.0)).is_zero()
        })
        .count()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwapReport {
    /// `A(a) ↦ B(a)`, `B(b) ↦ A(b)` as index pairs within the two parts.
    pub mapping: Vec<(String, String)>,
    pub preserves_incidence: bool,
    pub is_involution: bool,
    pub exchanges_families: bool,
    pub fixed_lines: usize,
}

impl SwapReport {
    pub fn passes(&self) -> bool {
        self.preserves_incidence && self.is_involution && self.exchanges_families && self.fixed_lines == 0
    }
}

/// The involution `(x, y) ↦ (y, x)` acting on the 42 lines.
pub fn involution_swap(g: &BipartiteGraph) -> SwapReport {
    let n = g.left.len();
    // nodes 0..n are A-lines, n..2n are B-lines
    let swap = |v: usize| if v < n { v + n } else { v - n };
    let adjacent = |u: usize, v: usize| match (u < n, v < n) {
        (true, false) => g.incidence[u][v - n] != 0,
        (false, true) => g.incidence[v][u - n] != 0,
        _ => false,
    };
    let all = 0..2 * n;
    let preserves_incidence = all
        .clone()
        .all(|u| (0..2 * n).all(|v| adjacent(u, v) == adjacent(swap(u), swap(v))));
    SwapReport {
        mapping: (0..n).map(|i| (g.left[i].clone(), g.right[i].clone())).collect(),
        preserves_incidence,
        is_involution: all.clone().all(|v| swap(swap(v)) == v),
        exchanges_families: all.clone().all(|v| (v < n) != (swap(v) < n)),
        fixed_lines: all.filter(|&v| swap(v) == v).count(),
    }
}

/// Diagonal points `(a, a)` of the surface.
pub fn fixed_points() -> Vec<ProjPoint> {
    ProjPoint::all()
        .into_iter()
        .filter(|&a| {
            let (e1, e2) = surface_equations(a, a);
            e1.is_zero() && e2.is_zero()
        })
        .collect()
}

/// Number of points of `P²(F_4)` on the fixed curve `Σ aᵢ³ = 0` of the swap.
pub fn fixed_curve_count() -> usize {
    let pts = fixed_points();
    debug_assert!(pts.iter().all(|p| fermat(*p).is_zero()));
    pts.len()
}

/// `x₀³ + x₁³ + x₂³`.
pub fn fermat(p: ProjPoint) -> Gf {
    p.0.iter()
        .fold(Gf::zero(Degree::F4), |acc, c| acc + c.pow(3))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(a: u8, b: u8, c: u8) -> ProjPoint {
        let g = |v| Gf::new(v, Degree::F4).unwrap();
        ProjPoint::new([g(a), g(b), g(c)]).unwrap()
    }

    #[test]
    fn projective_plane() {
        assert_eq!(ProjPoint::all().len(), 21);
        let g = pg24();
        assert!(g.is_regular(21, 5));
        assert!(g.left_pairs_share(1));
        assert!(g.transpose().left_pairs_share(1));
        assert_eq!(g.edge_count(), 105);
    }

    #[test]
    fn canonical_points() {
        assert_eq!(pp(2, 2, 0), pp(1, 1, 0));
        assert!(ProjPoint::new([Gf::zero(Degree::F4); 3]).is_none());
        assert_eq!(pp(0, 3, 1).coords()[1], Gf::one(Degree::F4));
        assert_eq!(pp(1, 0, 2).to_string(), "(1:0:w)");
    }

    #[test]
    fn p2p2_model() {
        let g = p2p2_lines();
        assert!(g.is_regular(21, 5));
        assert_eq!(g.edge_count(), 105);
        let pts = ProjPoint::all();
        let a = pts.iter().position(|&p| p == pp(1, 0, 0)).unwrap();
        let hits: Vec<_> = (0..21).filter(|&j| g.incidence[a][j] == 1).collect();
        assert_eq!(hits.len(), 5);
        assert!(hits.iter().all(|&j| pts[j].coords()[0].is_zero()));
        for (i, &x) in pts.iter().enumerate() {
            for (j, &y) in pts.iter().enumerate() {
                if g.incidence[i][j] == 1 {
                    let (e1, e2) = surface_equations(x, y);
                    assert!(e1.is_zero() && e2.is_zero());
                }
            }
        }
        assert_eq!(frobenius_twin_disagreements(), 0);
    }

    #[test]
    fn swap_and_fixed_curve() {
        let r = involution_swap(&p2p2_lines());
        assert!(r.passes(), "{r:?}");
        let pts = fixed_points();
        assert_eq!(fixed_curve_count(), 9);
        assert!(pts.iter().all(|&p| fermat(p).is_zero()));
        for p in &pts {
            let [a, b, c] = p.coords();
            for perm in [[b, a, c], [a, c, b], [c, b, a]] {
                assert!(pts.contains(&ProjPoint::new(perm).unwrap()));
            }
        }
    }

    #[test]
    fn exports() {
        let g = pg24();
        let e = g.to_export();
        assert_eq!((e.nodes.len(), e.edges.len()), (42, 105));
        assert_eq!(g.to_csv().lines().count(), 22);
        assert!(g.to_dot("pg24").starts_with("graph pg24 {"));
    }
}
