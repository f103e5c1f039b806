//! The abelian surface `A = E × E`, its 3-torsion, and the 24 elliptic
//! curves given as images of homomorphisms `E → A` followed by a
//! translation by a point of `A(F_2)`.
//!
//! All points of `A(F_4)` are stored with F_4 coordinates.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::ecurve::{self, apply_expr, BasicMap, CurvePoint, EndoExpr};
use crate::error::{Error, Result};
use crate::gf2k::Degree;
use crate::names::{CurveKind, CurveName, Family};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct APoint {
    pub first: CurvePoint,
    pub second: CurvePoint,
}

impl APoint {
    pub fn new(first: CurvePoint, second: CurvePoint) -> Self {
        APoint { first, second }
    }

    /// `P_i × P_j`.
    pub fn p(i: usize, j: usize) -> Self {
        APoint::new(
            CurvePoint::torsion_f2(i, Degree::F4),
            CurvePoint::torsion_f2(j, Degree::F4),
        )
    }

    pub fn origin() -> Self {
        APoint::p(0, 0)
    }

    pub fn add(self, other: APoint) -> APoint {
        APoint::new(self.first + other.first, self.second + other.second)
    }

    pub fn scalar_mul(self, n: i64) -> APoint {
        APoint::new(self.first.scalar_mul(n), self.second.scalar_mul(n))
    }

    /// `σ × σ²`.
    pub fn rotate(self) -> APoint {
        APoint::new(
            BasicMap::Sigma.apply(self.first),
            BasicMap::SigmaSq.apply(self.second),
        )
    }

    /// Whether the point lies in `A(F_2) = {P_i × P_j}`.
    pub fn is_f2(&self) -> bool {
        self.f2_indices().is_some()
    }

    /// `(i, j)` with `self = P_i × P_j`.
    pub fn f2_indices(&self) -> Option<(usize, usize)> {
        let idx = |p: CurvePoint| (0..3).find(|&i| CurvePoint::torsion_f2(i, Degree::F4) == p);
        Some((idx(self.first)?, idx(self.second)?))
    }

    /// Moves both coordinates into F_4, if they lie there.
    pub fn to_f4(self) -> Option<APoint> {
        let f = |p: CurvePoint| match p.degree() {
            Some(Degree::F2) => p.embed(Degree::F4).ok(),
            _ => p.to_f4(),
        };
        Some(APoint::new(f(self.first)?, f(self.second)?))
    }
}

impl fmt::Display for APoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.first, self.second)
    }
}

/// Name of a point of `E(F_4)` as used in the tables: `P0`, `P1`, `P2` for
/// the F_2 points and `(x,y)` otherwise.
pub fn torsion_label(p: CurvePoint) -> String {
    match (0..3).find(|&i| CurvePoint::torsion_f2(i, Degree::F4) == p) {
        Some(i) => format!("P{i}"),
        None => p.to_string(),
    }
}

/// The nine points of `A(F_2)` (ordered `P_ij` by `(i, j)`) or the 81 points
/// of `A(F_4)` (product order of [`ecurve::enumerate`]).
pub fn torsion_points(level: Degree) -> Result<Vec<APoint>> {
    let factor: Vec<CurvePoint> = match level {
        Degree::F2 => (0..3).map(|i| CurvePoint::torsion_f2(i, Degree::F4)).collect(),
        Degree::F4 => ecurve::enumerate(Degree::F4),
        d => return Err(Error::Model(format!("A({d}) is not part of the construction"))),
    };
    let mut out = Vec::with_capacity(factor.len().pow(2));
    for &a in &factor {
        for &b in &factor {
            out.push(APoint::new(a, b));
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveOnA {
    pub name: CurveName,
    pub hom: (EndoExpr, EndoExpr),
    pub translate: APoint,
}

impl CurveOnA {
    pub fn family(&self) -> Family {
        self.name.family
    }

    pub fn image(&self, p: CurvePoint) -> APoint {
        APoint::new(
            apply_expr(&self.hom.0, p) + self.translate.first,
            apply_expr(&self.hom.1, p) + self.translate.second,
        )
    }

    /// `{hom(P) + translate : P ∈ E(F_4)}`.
    pub fn points_f4(&self) -> BTreeSet<APoint> {
        ecurve::enumerate(Degree::F4)
            .into_iter()
            .map(|p| {
                self.image(p)
                    .to_f4()
                    .expect("homomorphisms over F_4 preserve E(F_4)")
            })
            .collect()
    }
}

/// The homomorphism `E → A` defining a base curve.
pub fn base_hom(kind: CurveKind, family: Family) -> (EndoExpr, EndoExpr) {
    use EndoExpr::{Frob as F, Id, Sigma, Ver as V, Zero};
    let s2 = EndoExpr::sigma_sq;
    let pi = EndoExpr::pi;
    match (family, kind) {
        (Family::First, CurveKind::E) => (Zero, Id),
        (Family::First, CurveKind::F) => (F, Sigma),
        (Family::First, CurveKind::V) => (V, s2()),
        (Family::First, CurveKind::Pi) => (V, pi()),
        (Family::Second, CurveKind::E) => (Id, Zero),
        (Family::Second, CurveKind::F) => (s2(), F),
        (Family::Second, CurveKind::V) => (Sigma, V),
        (Family::Second, CurveKind::Pi) => (pi(), F),
    }
}

/// `(a₁, a₂)` with the base curve equal to `{(x, y) : a₁x + a₂y = 0}`.
pub fn delta_form(kind: CurveKind, family: Family) -> (EndoExpr, EndoExpr) {
    use EndoExpr::{Frob as F, Id, Sigma, Ver as V, Zero};
    let s2 = EndoExpr::sigma_sq;
    let pi = EndoExpr::pi;
    match (family, kind) {
        (Family::First, CurveKind::E) => (Id, Zero),
        (Family::First, CurveKind::F) => (s2(), V),
        (Family::First, CurveKind::V) => (Sigma, F),
        (Family::First, CurveKind::Pi) => (-pi(), F),
        (Family::Second, CurveKind::E) => (Zero, Id),
        (Family::Second, CurveKind::F) => (V, Sigma),
        (Family::Second, CurveKind::V) => (F, s2()),
        (Family::Second, CurveKind::Pi) => (V, -pi()),
    }
}

/// Translation applied to the base curve: `T_i0` for `E_i, F_i, V_i, π′_i`
/// and `T_0i` for `π_i, E′_i, F′_i, V′_i`.
pub fn translate_of(name: CurveName) -> APoint {
    let i = name.index as usize;
    let along_first = matches!(
        (name.family, name.kind),
        (Family::First, CurveKind::E | CurveKind::F | CurveKind::V)
            | (Family::Second, CurveKind::Pi)
    );
    if along_first {
        APoint::p(i, 0)
    } else {
        APoint::p(0, i)
    }
}

pub fn curve(name: CurveName) -> CurveOnA {
    CurveOnA {
        name,
        hom: base_hom(name.kind, name.family),
        translate: translate_of(name),
    }
}

/// The 24 curves in [`CurveName::all`] order.
pub fn build_curves() -> Vec<CurveOnA> {
    CurveName::all().into_iter().map(curve).collect()
}

pub fn curve_points_f4(c: &CurveOnA) -> BTreeSet<APoint> {
    c.points_f4()
}

/// The 24 curves with their F_4-point sets materialized.
#[derive(Clone, Debug)]
pub struct Atlas {
    curves: Vec<CurveOnA>,
    points: BTreeMap<CurveName, BTreeSet<APoint>>,
}

impl Default for Atlas {
    fn default() -> Self {
        Self::new()
    }
}

impl Atlas {
    pub fn new() -> Self {
        let curves = build_curves();
        let points = curves.iter().map(|c| (c.name, c.points_f4())).collect();
        Atlas { curves, points }
    }

    pub fn curves(&self) -> &[CurveOnA] {
        &self.curves
    }

    pub fn points(&self, name: CurveName) -> &BTreeSet<APoint> {
        &self.points[&name]
    }

    pub fn common_points(&self, a: CurveName, b: CurveName) -> BTreeSet<APoint> {
        self.points(a).intersection(self.points(b)).copied().collect()
    }

    /// Curves through `p`, sorted by family, kind and index.
    pub fn curves_through(&self, p: APoint) -> Vec<CurveName> {
        self.points
            .iter()
            .filter(|(_, s)| s.contains(&p))
            .map(|(n, _)| *n)
            .collect()
    }

    /// `table[j][i]` lists the curves through `P_i × P_j`.
    pub fn incidence_table_f2(&self) -> [[Vec<CurveName>; 3]; 3] {
        std::array::from_fn(|j| std::array::from_fn(|i| self.curves_through(APoint::p(i, j))))
    }

    /// Curves through `column × row` for the row and column labels of
    /// [`f4_labels`]; `None` where both labels are F_2 points.
    pub fn incidence_table_f4(&self) -> Vec<Vec<Option<Vec<CurveName>>>> {
        let labels = f4_labels();
        labels
            .iter()
            .map(|&row| {
                labels
                    .iter()
                    .map(|&col| {
                        let p = APoint::new(col, row);
                        (!p.is_f2()).then(|| self.curves_through(p))
                    })
                    .collect()
            })
            .collect()
    }
}

/// `(1,ω), (1,ω²), (ω,ω), (ω,ω²), (ω²,ω), (ω²,ω²), P₀, P₁, P₂`.
pub fn f4_labels() -> [CurvePoint; 9] {
    use crate::gf2k::Gf;
    let one = Gf::one(Degree::F4);
    let (w, w2) = (Gf::w(), Gf::w2());
    let pt = |x, y| CurvePoint::affine(x, y).expect("listed points lie on E");
    [
        pt(one, w),
        pt(one, w2),
        pt(w, w),
        pt(w, w2),
        pt(w2, w),
        pt(w2, w2),
        CurvePoint::Infinity,
        CurvePoint::p1(Degree::F4),
        CurvePoint::p2(Degree::F4),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitDecomposition {
    pub fixed: Vec<APoint>,
    pub orbits: Vec<[APoint; 3]>,
}

/// Splits a `σ × σ²`-stable set into fixed points and 3-orbits.
pub fn orbit_decomposition(points: &BTreeSet<APoint>) -> Result<OrbitDecomposition> {
    let mut seen = BTreeSet::new();
    let mut out = OrbitDecomposition {
        fixed: Vec::new(),
        orbits: Vec::new(),
    };
    for &p in points {
        if seen.contains(&p) {
            continue;
        }
        let q = p.rotate();
        if q == p {
            out.fixed.push(p);
            seen.insert(p);
            continue;
        }
        let orbit = [p, q, q.rotate()];
        if orbit[2].rotate() != p {
            return Err(Error::Model(format!("σ × σ² does not have order 3 at {p}")));
        }
        if !orbit.iter().all(|x| points.contains(x)) {
            return Err(Error::Model(format!("orbit of {p} is cut by the point set")));
        }
        seen.extend(orbit);
        out.orbits.push(orbit);
    }
    Ok(out)
}

/// Points `P ≠ O` of `E(F_64)` killed by the homomorphism.
pub fn kernel_f64(hom: &(EndoExpr, EndoExpr)) -> Vec<CurvePoint> {
    ecurve::enumerate(Degree::F64)
        .into_iter()
        .filter(|&p| {
            !p.is_infinity()
                && apply_expr(&hom.0, p).is_infinity()
                && apply_expr(&hom.1, p).is_infinity()
        })
        .collect()
}

/// Points of `E(F_64) ∖ E(F_4)` whose image lands in `A(F_4)`.
pub fn stray_f4_images(c: &CurveOnA) -> Vec<CurvePoint> {
    ecurve::enumerate(Degree::F64)
        .into_iter()
        .filter(|p| p.to_f4().is_none())
        .filter(|&p| {
            let q = c.image(p);
            q.first.to_f4().is_some() && q.second.to_f4().is_some()
        })
        .collect()
}

/// Points `P ∈ E(F_64)` whose base-curve image violates `a₁x + a₂y = 0`.
pub fn delta_form_violations(kind: CurveKind, family: Family) -> Vec<CurvePoint> {
    let hom = base_hom(kind, family);
    let (a1, a2) = delta_form(kind, family);
    ecurve::enumerate(Degree::F64)
        .into_iter()
        .filter(|&p| {
            let (x, y) = (apply_expr(&hom.0, p), apply_expr(&hom.1, p));
            !(apply_expr(&a1, x) + apply_expr(&a2, y)).is_infinity()
        })
        .collect()
}
