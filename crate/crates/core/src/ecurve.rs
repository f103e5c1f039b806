//! The supersingular curve `E: y^2 + y = x^3` over binary fields.
//!
//! Points are affine pairs or the point at infinity `O = (0:1:0)`, which is
//! the group identity. Named points: `P₀ = O`, `P₁ = (0, 0)`, `P₂ = (0, 1)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{parse_err, Error, Result};
use crate::gf2k::{self, Degree, Gf};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CurvePoint {
    Infinity,
    Affine { x: Gf, y: Gf },
}

use CurvePoint::{Affine, Infinity};

impl CurvePoint {
    pub fn affine(x: Gf, y: Gf) -> Result<Self> {
        if x.degree() != y.degree() {
            return Err(Error::DegreeMismatch(x.degree(), y.degree()));
        }
        let p = Affine { x, y };
        if p.on_curve() {
            Ok(p)
        } else {
            Err(Error::Model(format!("{p} is not on y^2 + y = x^3")))
        }
    }

    /// `P₁ = (0, 0)`, a point of order 3.
    pub fn p1(degree: Degree) -> Self {
        Affine {
            x: Gf::zero(degree),
            y: Gf::zero(degree),
        }
    }

    /// `P₂ = (0, 1) = -P₁`.
    pub fn p2(degree: Degree) -> Self {
        Affine {
            x: Gf::zero(degree),
            y: Gf::one(degree),
        }
    }

    /// `P_i` for `i ∈ {0, 1, 2}`.
    pub fn torsion_f2(i: usize, degree: Degree) -> Self {
        match i {
            0 => Infinity,
            1 => Self::p1(degree),
            2 => Self::p2(degree),
            _ => panic!("P_{i} is not defined"),
        }
    }

    pub fn on_curve(&self) -> bool {
        match *self {
            Infinity => true,
            Affine { x, y } => {
                x.degree() == y.degree() && y.square() + y == x.square() * x
            }
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Infinity)
    }

    pub fn degree(&self) -> Option<Degree> {
        match self {
            Infinity => None,
            Affine { x, .. } => Some(x.degree()),
        }
    }

    pub fn coords(&self) -> Option<(Gf, Gf)> {
        match *self {
            Infinity => None,
            Affine { x, y } => Some((x, y)),
        }
    }

    /// Image under the canonical field embedding.
    pub fn embed(self, target: Degree) -> Result<Self> {
        match self {
            Infinity => Ok(Infinity),
            Affine { x, y } => Ok(Affine {
                x: x.embed(target)?,
                y: y.embed(target)?,
            }),
        }
    }

    /// Preimage in `E(F_4)` when both coordinates lie in F_4.
    pub fn to_f4(self) -> Option<Self> {
        match self {
            Infinity => Some(Infinity),
            Affine { x, y } => Some(Affine {
                x: x.to_f4()?,
                y: y.to_f4()?,
            }),
        }
    }

    pub fn neg(self) -> Self {
        match self {
            Infinity => Infinity,
            Affine { x, y } => Affine {
                x,
                y: y + Gf::one(y.degree()),
            },
        }
    }

    /// `[2]P = (x^4, y^4 + 1)`.
    pub fn double(self) -> Self {
        match self {
            Infinity => Infinity,
            Affine { x, y } => Affine {
                x: x.pow(4),
                y: y.pow(4) + Gf::one(y.degree()),
            },
        }
    }

    /// Chord addition; equal points go through [`CurvePoint::double`].
    ///
    /// Panics if the two points have no common field.
    pub fn add(self, other: Self) -> Self {
        let (p, q) = match (self, other) {
            (Infinity, q) => return q,
            (p, Infinity) => return p,
            (p, q) => lift_pair(p, q),
        };
        if p == q {
            return p.double();
        }
        let (x1, y1) = p.coords().unwrap();
        let (x2, y2) = q.coords().unwrap();
        if x1 == x2 {
            // y2 = y1 + 1: inverse pair
            return Infinity;
        }
        let d = (x1 - x2).inv().unwrap();
        let slope = (y1 - y2) * d;
        let x = x1 + x2 + slope.square();
        let y = slope.square() * slope + (x1 * y1 + x2 * y2) * d + Gf::one(x1.degree());
        Affine { x, y }
    }

    pub fn sub(self, other: Self) -> Self {
        self.add(other.neg())
    }

    /// `n·P` by double-and-add.
    pub fn scalar_mul(self, n: i64) -> Self {
        let base = if n < 0 { self.neg() } else { self };
        let mut k = n.unsigned_abs();
        let mut acc = Infinity;
        let mut run = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.add(run);
            }
            run = run.double();
            k >>= 1;
        }
        acc
    }

    /// Order of the point, searched up to `limit`.
    pub fn order(self, limit: u64) -> Option<u64> {
        let mut acc = self;
        for n in 1..=limit {
            if acc.is_infinity() {
                return Some(n);
            }
            acc = acc.add(self);
        }
        None
    }

    /// Parses `O` or `(x,y)` with coordinates in the [`Gf`] grammar.
    pub fn parse(input: &str, degree: Degree) -> Result<Self> {
        let s = input.trim();
        if s == "O" {
            return Ok(Infinity);
        }
        let inner = s
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| parse_err(input, "expected O or (x,y)"))?;
        let (xs, ys) = inner
            .split_once(',')
            .ok_or_else(|| parse_err(input, "missing comma"))?;
        let p = Affine {
            x: Gf::parse(xs, degree)?,
            y: Gf::parse(ys, degree)?,
        };
        if !p.on_curve() {
            return Err(parse_err(input, "point is not on the curve"));
        }
        Ok(p)
    }
}

fn lift_pair(p: CurvePoint, q: CurvePoint) -> (CurvePoint, CurvePoint) {
    let (dp, dq) = (p.degree().unwrap(), q.degree().unwrap());
    if dp == dq {
        return (p, q);
    }
    let d = dp
        .join(dq)
        .unwrap_or_else(|| panic!("points over {dp} and {dq} have no common field"));
    (p.embed(d).unwrap(), q.embed(d).unwrap())
}

impl Add for CurvePoint {
    type Output = CurvePoint;
    fn add(self, rhs: CurvePoint) -> CurvePoint {
        CurvePoint::add(self, rhs)
    }
}

impl Sub for CurvePoint {
    type Output = CurvePoint;
    fn sub(self, rhs: CurvePoint) -> CurvePoint {
        CurvePoint::sub(self, rhs)
    }
}

impl Neg for CurvePoint {
    type Output = CurvePoint;
    fn neg(self) -> CurvePoint {
        CurvePoint::neg(self)
    }
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Infinity => f.write_str("O"),
            Affine { x, y } => write!(f, "({x},{y})"),
        }
    }
}

/// All points of `E(F_{2^k})`, infinity first, then affine points in
/// coordinate order.
pub fn enumerate(degree: Degree) -> Vec<CurvePoint> {
    let field = gf2k::enumerate(degree);
    let mut out = vec![Infinity];
    for &x in &field {
        for &y in &field {
            let p = Affine { x, y };
            if p.on_curve() {
                out.push(p);
            }
        }
    }
    out
}

pub fn enumerate_points(k: u32) -> Result<Vec<CurvePoint>> {
    Ok(enumerate(Degree::from_k(k)?))
}

/// The coordinate maps σ, σ², θ, F, V and the translation τ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasicMap {
    /// `(x, y) ↦ (ωx, y)`
    Sigma,
    SigmaSq,
    /// `(x, y) ↦ (x + 1, y + x + ω)`
    Theta,
    /// Frobenius `(x, y) ↦ (x², y²)`
    Frob,
    /// Verschiebung `V = -F`
    Ver,
    /// Translation by `P₁`
    Tau,
}

impl BasicMap {
    pub const ALL: [BasicMap; 6] = [
        BasicMap::Sigma,
        BasicMap::SigmaSq,
        BasicMap::Theta,
        BasicMap::Frob,
        BasicMap::Ver,
        BasicMap::Tau,
    ];

    /// Maps that need `ω` lift points over F_2 into F_4 first.
    pub fn apply(self, p: CurvePoint) -> CurvePoint {
        let Affine { x, y } = p else {
            return match self {
                BasicMap::Tau => CurvePoint::p1(Degree::F2),
                _ => Infinity,
            };
        };
        match self {
            BasicMap::Frob => Affine {
                x: x.square(),
                y: y.square(),
            },
            BasicMap::Ver => Affine {
                x: x.square(),
                y: y.square() + Gf::one(y.degree()),
            },
            BasicMap::Tau => tau(p),
            BasicMap::Sigma | BasicMap::SigmaSq | BasicMap::Theta => {
                let d = x.degree().join(Degree::F4).expect("no field contains ω");
                let (x, y) = (x.embed(d).unwrap(), y.embed(d).unwrap());
                let w = Gf::omega(d).unwrap();
                match self {
                    BasicMap::Sigma => Affine { x: w * x, y },
                    BasicMap::SigmaSq => Affine { x: w.square() * x, y },
                    _ => Affine {
                        x: x + Gf::one(d),
                        y: y + x + w,
                    },
                }
            }
        }
    }
}

/// `τ(P) = P + P₁`, via the rational map `(y/x², y/x³)` where it is defined.
fn tau(p: CurvePoint) -> CurvePoint {
    match tau_rational(p) {
        Some(q) => q,
        None => {
            let d = p.degree().unwrap_or(Degree::F2);
            p.add(CurvePoint::p1(d))
        }
    }
}

/// The printed rational formula for τ; `None` at its poles (`x = 0` and `O`).
pub fn tau_rational(p: CurvePoint) -> Option<CurvePoint> {
    let (x, y) = p.coords()?;
    let xi = x.inv().ok()?;
    Some(Affine {
        x: y * xi.square(),
        y: y * xi.square() * xi,
    })
}

pub fn apply_basic(map: BasicMap, p: CurvePoint) -> CurvePoint {
    map.apply(p)
}

/// Endomorphism expressions over the generators σ, θ, F, V.
///
/// Products denote composition: `a * b` is `a ∘ b`, applied right to left.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum EndoExpr {
    Zero,
    Id,
    Sigma,
    Theta,
    Frob,
    Ver,
    Scale(i64, Box<EndoExpr>),
    Neg(Box<EndoExpr>),
    Sum(Box<EndoExpr>, Box<EndoExpr>),
    Compose(Box<EndoExpr>, Box<EndoExpr>),
}

impl EndoExpr {
    pub fn int(n: i64) -> Self {
        match n {
            0 => EndoExpr::Zero,
            1 => EndoExpr::Id,
            n => EndoExpr::Scale(n, Box::new(EndoExpr::Id)),
        }
    }

    pub fn sigma_sq() -> Self {
        EndoExpr::Sigma * EndoExpr::Sigma
    }

    /// `π = θ∘(id − F)`, the projection `E → E/⟨τ⟩ ≅ E`.
    ///
    /// On points this equals `-(2σ + 1) = 2σ² + 1`.
    pub fn pi() -> Self {
        EndoExpr::Theta * (EndoExpr::Id - EndoExpr::Frob)
    }

    pub fn scale(self, n: i64) -> Self {
        EndoExpr::Scale(n, Box::new(self))
    }

    pub fn pow(self, n: u32) -> Self {
        (1..n).fold(self.clone(), |acc, _| acc * self.clone())
    }

    /// Number of generator occurrences on the longest composition chain.
    pub fn depth(&self) -> usize {
        match self {
            EndoExpr::Zero | EndoExpr::Id => 0,
            EndoExpr::Sigma | EndoExpr::Theta | EndoExpr::Frob | EndoExpr::Ver => 1,
            EndoExpr::Scale(_, e) | EndoExpr::Neg(e) => e.depth(),
            EndoExpr::Sum(a, b) => a.depth().max(b.depth()),
            EndoExpr::Compose(a, b) => a.depth() + b.depth(),
        }
    }

    fn is_atomic(&self) -> bool {
        !matches!(self, EndoExpr::Sum(..) | EndoExpr::Neg(..))
    }
}

impl Add for EndoExpr {
    type Output = EndoExpr;
    fn add(self, rhs: EndoExpr) -> EndoExpr {
        EndoExpr::Sum(Box::new(self), Box::new(rhs))
    }
}

impl Sub for EndoExpr {
    type Output = EndoExpr;
    fn sub(self, rhs: EndoExpr) -> EndoExpr {
        self + (-rhs)
    }
}

impl Neg for EndoExpr {
    type Output = EndoExpr;
    fn neg(self) -> EndoExpr {
        EndoExpr::Neg(Box::new(self))
    }
}

impl Mul for EndoExpr {
    type Output = EndoExpr;
    fn mul(self, rhs: EndoExpr) -> EndoExpr {
        EndoExpr::Compose(Box::new(self), Box::new(rhs))
    }
}

impl fmt::Display for EndoExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn wrapped(e: &EndoExpr, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            if e.is_atomic() {
                write!(f, "{e}")
            } else {
                write!(f, "({e})")
            }
        }
        match self {
            EndoExpr::Zero => f.write_str("0"),
            EndoExpr::Id => f.write_str("id"),
            EndoExpr::Sigma => f.write_str("sigma"),
            EndoExpr::Theta => f.write_str("theta"),
            EndoExpr::Frob => f.write_str("F"),
            EndoExpr::Ver => f.write_str("V"),
            EndoExpr::Scale(n, e) if **e == EndoExpr::Id => write!(f, "{n}"),
            EndoExpr::Scale(n, e) => {
                write!(f, "{n}")?;
                wrapped(e, f)
            }
            EndoExpr::Neg(e) => {
                f.write_str("-")?;
                wrapped(e, f)
            }
            EndoExpr::Sum(a, b) => match &**b {
                EndoExpr::Neg(inner) => {
                    write!(f, "{a} - ")?;
                    wrapped(inner, f)
                }
                _ => write!(f, "{a} + {b}"),
            },
            EndoExpr::Compose(a, b) => {
                wrapped(a, f)?;
                f.write_str("*")?;
                wrapped(b, f)
            }
        }
    }
}

/// Evaluates an endomorphism expression at a point.
pub fn apply_expr(e: &EndoExpr, p: CurvePoint) -> CurvePoint {
    match e {
        EndoExpr::Zero => Infinity,
        EndoExpr::Id => p,
        EndoExpr::Sigma => BasicMap::Sigma.apply(p),
        EndoExpr::Theta => BasicMap::Theta.apply(p),
        EndoExpr::Frob => BasicMap::Frob.apply(p),
        EndoExpr::Ver => BasicMap::Ver.apply(p),
        EndoExpr::Scale(n, inner) => apply_expr(inner, p).scalar_mul(*n),
        EndoExpr::Neg(inner) => apply_expr(inner, p).neg(),
        EndoExpr::Sum(a, b) => apply_expr(a, p).add(apply_expr(b, p)),
        EndoExpr::Compose(a, b) => apply_expr(a, apply_expr(b, p)),
    }
}

/// The quotient `E → E/⟨τ⟩`:
/// `w = (x³ + 1)/x²`, `z = y + 1 + 1/x³ + ω`.
pub fn quotient_map(p: CurvePoint) -> Result<(Gf, Gf)> {
    let (x, y) = p.coords().ok_or_else(|| Error::Pole(p.to_string()))?;
    let xi = x.inv().map_err(|_| Error::Pole(p.to_string()))?;
    let d = x.degree().join(Degree::F4).expect("no field contains ω");
    let (x, y, xi) = (x.embed(d)?, y.embed(d)?, xi.embed(d)?);
    let one = Gf::one(d);
    let w = (x.square() * x + one) * xi.square();
    let z = y + one + xi.square() * xi + Gf::omega(d)?;
    Ok((w, z))
}

/// [`quotient_map`] read as a map `E → E`, sending its poles `O, P₁, P₂`
/// (the kernel of the projection) to `O`.
pub fn projection(p: CurvePoint) -> CurvePoint {
    match quotient_map(p) {
        Ok((w, z)) => Affine { x: w, y: z },
        Err(_) => Infinity,
    }
}

/// A displayed identity between two endomorphism expressions.
#[derive(Clone, Debug)]
pub struct Relation {
    pub name: &'static str,
    pub lhs: EndoExpr,
    pub rhs: EndoExpr,
}

/// Identities of `End(E)` that the construction relies on.
///
/// The last entry is the printed `θ∘(id − F) = 2σ + 1`, which does not hold;
/// [`corrected_pi_relation`] gives the identity that does.
pub fn displayed_relations() -> Vec<Relation> {
    use EndoExpr::{Frob as F, Id, Sigma, Theta, Ver as V};
    let s2 = EndoExpr::sigma_sq;
    let pi = EndoExpr::pi;
    vec![
        Relation { name: "FV = 2", lhs: F * V, rhs: EndoExpr::int(2) },
        Relation { name: "F^2 = -2", lhs: F * F, rhs: EndoExpr::int(-2) },
        Relation { name: "F*sigma = sigma^2*F", lhs: F * Sigma, rhs: s2() * F },
        Relation { name: "sigma^3 = id", lhs: Sigma.pow(3), rhs: Id },
        Relation { name: "theta^2 = -id", lhs: Theta * Theta, rhs: -Id },
        Relation {
            name: "F = sigma*theta - theta*sigma",
            lhs: F,
            rhs: Sigma * Theta - Theta * Sigma,
        },
        Relation {
            name: "F = theta*sigma^2 - sigma^2*theta",
            lhs: F,
            rhs: Theta * s2() - s2() * Theta,
        },
        Relation {
            name: "id = theta*sigma - sigma^2*theta",
            lhs: Id,
            rhs: Theta * Sigma - s2() * Theta,
        },
        Relation { name: "F*pi = -pi*F", lhs: F * pi(), rhs: -(pi() * F) },
        Relation {
            name: "theta*(id - F) = 2sigma + 1",
            lhs: pi(),
            rhs: Sigma.scale(2) + Id,
        },
    ]
}

pub fn corrected_pi_relation() -> Relation {
    Relation {
        name: "theta*(id - F) = -(2sigma + 1)",
        lhs: EndoExpr::pi(),
        rhs: -(EndoExpr::Sigma.scale(2) + EndoExpr::Id),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: String,
    pub points: usize,
    pub failures: usize,
}

impl RelationCheck {
    pub fn holds(&self) -> bool {
        self.failures == 0
    }
}

pub fn check_relation(rel: &Relation, points: &[CurvePoint]) -> RelationCheck {
    let failures = points
        .iter()
        .filter(|&&p| apply_expr(&rel.lhs, p) != apply_expr(&rel.rhs, p))
        .count();
    RelationCheck {
        name: rel.name.to_string(),
        points: points.len(),
        failures,
    }
}

/// Every displayed identity evaluated on all 81 points of `E(F_64)`, plus
/// `π = θ∘(id − F)` with π the projection, plus the corrected form of the
/// printed `2σ + 1` identity (last).
pub fn verify_relations() -> Vec<RelationCheck> {
    let points = enumerate(Degree::F64);
    let mut out: Vec<RelationCheck> = displayed_relations()
        .iter()
        .map(|r| check_relation(r, &points))
        .collect();
    let pi = EndoExpr::pi();
    let failures = points
        .iter()
        .filter(|&&p| projection(p) != apply_expr(&pi, p))
        .count();
    out.insert(
        9,
        RelationCheck {
            name: "projection (w,z) = theta*(id - F)".to_string(),
            points: points.len(),
            failures,
        },
    );
    out.push(check_relation(&corrected_pi_relation(), &points));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w() -> Gf {
        Gf::w()
    }
    fn one() -> Gf {
        Gf::one(Degree::F4)
    }
    fn zero() -> Gf {
        Gf::zero(Degree::F4)
    }
    fn pt(x: Gf, y: Gf) -> CurvePoint {
        Affine { x, y }
    }

    #[test]
    fn on_curve_examples() {
        assert!(pt(zero(), zero()).on_curve());
        assert!(pt(one(), w()).on_curve());
        assert!(!pt(one(), one()).on_curve());
        assert!(Infinity.on_curve());
        assert!(CurvePoint::affine(one(), one()).is_err());
    }

    #[test]
    fn add_examples() {
        let p1 = CurvePoint::p1(Degree::F4);
        let p2 = CurvePoint::p2(Degree::F4);
        assert_eq!(p1 + p2, Infinity);
        assert_eq!(pt(one(), w()) + pt(one(), Gf::w2()), Infinity);
        // closure inside E(F_4), every element 3-torsion
        let e4 = enumerate(Degree::F4);
        let r = p1 + pt(one(), w());
        assert!(e4.contains(&r));
        assert!(e4.contains(&(r + p2)));
        assert_eq!(r.scalar_mul(3), Infinity);
        assert_eq!(pt(one(), w()) + Infinity, pt(one(), w()));
    }

    #[test]
    fn double_examples() {
        assert_eq!(CurvePoint::p1(Degree::F4).double(), CurvePoint::p2(Degree::F4));
        let p = pt(one(), w());
        assert_eq!(p.double(), pt(one(), Gf::w2()));
        assert_eq!(p.double(), p.neg());
        assert_eq!(Infinity.double(), Infinity);
    }

    #[test]
    fn neg_examples() {
        assert_eq!(CurvePoint::p1(Degree::F4).neg(), CurvePoint::p2(Degree::F4));
        assert_eq!(Infinity.neg(), Infinity);
        for p in enumerate(Degree::F16) {
            assert_eq!(p.neg().neg(), p);
            assert_eq!(p + p.neg(), Infinity);
        }
        // neg is the unique inverse under add
        for p in enumerate(Degree::F64) {
            let inverses: Vec<_> = enumerate(Degree::F64)
                .into_iter()
                .filter(|&q| p + q == Infinity)
                .collect();
            assert_eq!(inverses, vec![p.neg()]);
        }
    }

    #[test]
    fn scalar_mul_examples() {
        for p in enumerate(Degree::F4) {
            assert_eq!(p.scalar_mul(3), Infinity);
            assert_eq!(p.scalar_mul(1), p);
            assert_eq!(p.scalar_mul(0), Infinity);
            assert_eq!(p.scalar_mul(-1), p.neg());
        }
        for p in enumerate(Degree::F64) {
            let chord = (p.add(p.neg().neg()), p.double());
            assert_eq!(chord.0, chord.1);
            assert_eq!(p.scalar_mul(2), p.double());
            assert_eq!(p.scalar_mul(81), Infinity);
            assert_eq!(p.scalar_mul(7), (1..7).fold(p, |acc, _| acc + p));
        }
    }

    #[test]
    fn enumeration_counts() {
        let e2 = enumerate_points(1).unwrap();
        assert_eq!(
            e2,
            vec![Infinity, CurvePoint::p1(Degree::F2), CurvePoint::p2(Degree::F2)]
        );
        let e4 = enumerate(Degree::F4);
        assert_eq!(e4.len(), 9);
        let listed = [
            (zero(), zero()),
            (zero(), one()),
            (one(), w()),
            (one(), Gf::w2()),
            (w(), w()),
            (Gf::w2(), w()),
            (w(), Gf::w2()),
            (Gf::w2(), Gf::w2()),
        ];
        for (x, y) in listed {
            assert!(e4.contains(&pt(x, y)));
        }
        assert_eq!(enumerate(Degree::F16).len(), 9);
        assert_eq!(enumerate(Degree::F64).len(), 81);
        assert!(enumerate_points(5).is_err());
    }

    #[test]
    fn e16_equals_e4() {
        let e4: Vec<_> = enumerate(Degree::F4)
            .into_iter()
            .map(|p| p.embed(Degree::F16).unwrap())
            .collect();
        assert_eq!(e4, enumerate(Degree::F16));
    }

    #[test]
    fn three_torsion_is_e4() {
        let torsion: std::collections::BTreeSet<_> = enumerate(Degree::F64)
            .into_iter()
            .filter(|p| p.scalar_mul(3).is_infinity())
            .collect();
        let e4: std::collections::BTreeSet<_> = enumerate(Degree::F4)
            .into_iter()
            .map(|p| p.embed(Degree::F64).unwrap())
            .collect();
        assert_eq!(torsion, e4);
    }

    #[test]
    fn basic_map_examples() {
        assert_eq!(BasicMap::Sigma.apply(pt(one(), w())), pt(w(), w()));
        assert_eq!(BasicMap::Theta.apply(pt(zero(), zero())), pt(one(), w()));
        assert_eq!(BasicMap::Tau.apply(pt(one(), w())), pt(w(), w()));
        assert_eq!(BasicMap::Tau.apply(Infinity), CurvePoint::p1(Degree::F2));
        assert_eq!(
            BasicMap::Ver.apply(pt(one(), w())),
            BasicMap::Frob.apply(pt(one(), w())).neg()
        );
    }

    #[test]
    fn basic_maps_preserve_curve() {
        let pts = enumerate(Degree::F64);
        for m in BasicMap::ALL {
            let images: std::collections::BTreeSet<_> = pts.iter().map(|&p| m.apply(p)).collect();
            assert!(images.iter().all(|q| q.on_curve()));
            assert_eq!(images.len(), 81, "{m:?}");
        }
    }

    #[test]
    fn tau_is_translation_by_p1() {
        for p in enumerate(Degree::F64) {
            let t = p + CurvePoint::p1(Degree::F64);
            assert_eq!(BasicMap::Tau.apply(p).embed(Degree::F64).unwrap(), t);
            if let Some(r) = tau_rational(p) {
                assert_eq!(r, t);
            }
        }
    }

    #[test]
    fn apply_expr_examples() {
        use EndoExpr::*;
        for p in enumerate(Degree::F64) {
            assert_eq!(apply_expr(&(Frob * Ver), p), p.double());
            assert_eq!(apply_expr(&(Theta * Sigma - EndoExpr::sigma_sq() * Theta), p), p);
            assert_eq!(apply_expr(&(Theta * Theta), p), p.neg());
            assert_eq!(apply_expr(&(Frob * Frob), p), p.double().neg());
        }
    }

    #[test]
    fn pi_is_minus_two_sigma_plus_one() {
        let pi = EndoExpr::pi();
        let printed = EndoExpr::Sigma.scale(2) + EndoExpr::Id;
        let pts = enumerate(Degree::F64);
        assert!(pts
            .iter()
            .all(|&p| apply_expr(&pi, p) == apply_expr(&printed, p).neg()));
        assert!(pts.iter().any(|&p| apply_expr(&pi, p) != apply_expr(&printed, p)));
    }

    #[test]
    fn relation_report() {
        let report = verify_relations();
        assert_eq!(report.len(), 12);
        for r in &report {
            assert_eq!(r.points, 81);
            if r.name == "theta*(id - F) = 2sigma + 1" {
                assert!(!r.holds());
            } else {
                assert!(r.holds(), "{}", r.name);
            }
        }
    }

    #[test]
    fn quotient_map_examples() {
        assert_eq!(quotient_map(pt(one(), w())).unwrap(), (zero(), zero()));
        assert!(matches!(quotient_map(Infinity), Err(Error::Pole(_))));
        assert!(matches!(quotient_map(CurvePoint::p1(Degree::F4)), Err(Error::Pole(_))));
        let mut valid = 0;
        for p in enumerate(Degree::F64) {
            let Ok((w, z)) = quotient_map(p) else { continue };
            valid += 1;
            assert_eq!(z.square() + z, w.square() * w);
            assert_eq!(quotient_map(BasicMap::Tau.apply(p)).unwrap(), (w, z));
        }
        assert_eq!(valid, 78);
    }

    #[test]
    fn point_text_round_trip() {
        for p in enumerate(Degree::F64) {
            assert_eq!(CurvePoint::parse(&p.to_string(), Degree::F64).unwrap(), p);
        }
        assert_eq!(pt(one(), w()).to_string(), "(1,w)");
        assert!(CurvePoint::parse("(1,1)", Degree::F4).is_err());
        assert!(CurvePoint::parse("1,1", Degree::F4).is_err());
    }

    #[test]
    fn expr_display() {
        assert_eq!(EndoExpr::pi().to_string(), "theta*(id - F)");
        assert_eq!((EndoExpr::Sigma.scale(2) + EndoExpr::Id).to_string(), "2sigma + id");
        assert_eq!(EndoExpr::int(-2).to_string(), "-2");
    }
}
