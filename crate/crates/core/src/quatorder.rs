//! `End(E)` as the Hurwitz order of the quaternion algebra `(-1, -1)_Q`.
//!
//! An element `a + bi + cj + dk` is stored by its doubled coefficients, so
//! Hurwitz membership is "all four halves even or all four odd".

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::ecurve::{self, apply_expr, CurvePoint, EndoExpr};
use crate::gf2k::Degree;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Quat {
    halves: [i64; 4],
}

impl Quat {
    pub const ZERO: Quat = Quat { halves: [0; 4] };
    pub const ONE: Quat = Quat { halves: [2, 0, 0, 0] };
    pub const I: Quat = Quat { halves: [0, 2, 0, 0] };
    pub const J: Quat = Quat { halves: [0, 0, 2, 0] };
    pub const K: Quat = Quat { halves: [0, 0, 0, 2] };

    /// `(h0 + h1 i + h2 j + h3 k) / 2`.
    pub fn from_halves(halves: [i64; 4]) -> Result<Quat> {
        let parity = halves[0].rem_euclid(2);
        if halves.iter().all(|h| h.rem_euclid(2) == parity) {
            Ok(Quat { halves })
        } else {
            Err(Error::NotHurwitz(format!("halves {halves:?}")))
        }
    }

    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Quat {
        Quat {
            halves: [2 * a, 2 * b, 2 * c, 2 * d],
        }
    }

    pub fn scalar(n: i64) -> Quat {
        Quat::new(n, 0, 0, 0)
    }

    pub fn halves(&self) -> [i64; 4] {
        self.halves
    }

    pub fn conj(self) -> Quat {
        let [a, b, c, d] = self.halves;
        Quat {
            halves: [a, -b, -c, -d],
        }
    }

    /// Reduced trace `q + q̄ = 2a`.
    pub fn trd(self) -> i64 {
        self.halves[0]
    }

    /// Reduced norm `q q̄ = a² + b² + c² + d²`.
    pub fn nrd(self) -> i64 {
        let s: i64 = self.halves.iter().map(|h| h * h).sum();
        debug_assert_eq!(s % 4, 0);
        s / 4
    }

    pub fn is_scalar(&self) -> bool {
        self.halves[1..] == [0, 0, 0]
    }

    /// The rational integer `q` equals, if it is one.
    pub fn as_integer(&self) -> Option<i64> {
        (self.is_scalar() && self.halves[0] % 2 == 0).then(|| self.halves[0] / 2)
    }

    pub fn is_unit(&self) -> bool {
        self.nrd() == 1
    }

    pub fn scale(self, n: i64) -> Quat {
        Quat {
            halves: self.halves.map(|h| h * n),
        }
    }

    pub fn pow(self, n: u32) -> Quat {
        (0..n).fold(Quat::ONE, |acc, _| acc * self)
    }
}

impl Add for Quat {
    type Output = Quat;
    fn add(self, rhs: Quat) -> Quat {
        let mut halves = self.halves;
        for (h, r) in halves.iter_mut().zip(rhs.halves) {
            *h += r;
        }
        Quat { halves }
    }
}

impl Sub for Quat {
    type Output = Quat;
    fn sub(self, rhs: Quat) -> Quat {
        self + (-rhs)
    }
}

impl Neg for Quat {
    type Output = Quat;
    fn neg(self) -> Quat {
        self.scale(-1)
    }
}

impl Mul for Quat {
    type Output = Quat;
    fn mul(self, rhs: Quat) -> Quat {
        let [a1, b1, c1, d1] = self.halves;
        let [a2, b2, c2, d2] = rhs.halves;
        let quarter = [
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        ];
        // the Hurwitz order is closed under products
        debug_assert!(quarter.iter().all(|x| x % 2 == 0));
        Quat {
            halves: quarter.map(|x| x / 2),
        }
    }
}

fn coefficient(h: i64) -> String {
    if h % 2 == 0 {
        (h / 2).to_string()
    } else {
        format!("{h}/2")
    }
}

impl fmt::Display for Quat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", coefficient(self.halves[0]))?;
        for (h, unit) in self.halves[1..].iter().zip(["i", "j", "k"]) {
            let sign = if *h < 0 { '-' } else { '+' };
            write!(f, "{sign}{}{unit}", coefficient(h.abs()))?;
        }
        Ok(())
    }
}

/// The 24 Hurwitz units.
pub fn units() -> Vec<Quat> {
    elements_of_norm(1)
}

/// Hurwitz elements of reduced norm `n`, in ascending order of halves.
pub fn elements_of_norm(n: i64) -> Vec<Quat> {
    let r = (2.0 * (n as f64).sqrt()).ceil() as i64;
    let mut out = Vec::new();
    for a in -r..=r {
        for b in -r..=r {
            for c in -r..=r {
                for d in -r..=r {
                    if let Ok(q) = Quat::from_halves([a, b, c, d]) {
                        if q.nrd() == n && a * a + b * b + c * c + d * d == 4 * n {
                            out.push(q);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Quaternions realizing σ, θ and F.
///
/// Ordered lexicographically by the halves of `sigma`, then `theta`, then
/// `frob`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorSolution {
    pub sigma: Quat,
    pub theta: Quat,
    pub frob: Quat,
}

impl GeneratorSolution {
    pub fn ver(&self) -> Quat {
        -self.frob
    }

    pub fn sigma_sq(&self) -> Quat {
        self.sigma * self.sigma
    }

    /// `π = θ(1 − F)`.
    pub fn pi(&self) -> Quat {
        self.theta * (Quat::ONE - self.frob)
    }

    /// `2σ + 1`, which equals `-π`.
    pub fn two_sigma_plus_one(&self) -> Quat {
        self.sigma.scale(2) + Quat::ONE
    }

    /// Names and values of the defining relations, each expected to hold.
    pub fn relations(&self) -> Vec<(&'static str, bool)> {
        let (s, t, f) = (self.sigma, self.theta, self.frob);
        let s2 = self.sigma_sq();
        let pi = self.pi();
        vec![
            ("sigma^2 + sigma + 1 = 0", s2 + s + Quat::ONE == Quat::ZERO),
            ("conj(sigma) = sigma^2", s.conj() == s2),
            ("theta^2 = -1", t * t == -Quat::ONE),
            ("F^2 = -2", f * f == Quat::scalar(-2)),
            ("F sigma = sigma^2 F", f * s == s2 * f),
            ("F = sigma theta - theta sigma", f == s * t - t * s),
            ("F = theta sigma^2 - sigma^2 theta", f == t * s2 - s2 * t),
            ("1 = theta sigma - sigma^2 theta", Quat::ONE == t * s - s2 * t),
            ("conj(pi) = -pi", pi.conj() == -pi),
            ("F pi = -pi F", f * pi == -(pi * f)),
        ]
    }

    pub fn is_valid(&self) -> bool {
        self.relations().iter().all(|(_, ok)| *ok)
    }

    pub fn endo_to_quat(&self, e: &EndoExpr) -> Quat {
        match e {
            EndoExpr::Zero => Quat::ZERO,
            EndoExpr::Id => Quat::ONE,
            EndoExpr::Sigma => self.sigma,
            EndoExpr::Theta => self.theta,
            EndoExpr::Frob => self.frob,
            EndoExpr::Ver => self.ver(),
            EndoExpr::Scale(n, inner) => self.endo_to_quat(inner).scale(*n),
            EndoExpr::Neg(inner) => -self.endo_to_quat(inner),
            EndoExpr::Sum(a, b) => self.endo_to_quat(a) + self.endo_to_quat(b),
            EndoExpr::Compose(a, b) => self.endo_to_quat(a) * self.endo_to_quat(b),
        }
    }
}

impl fmt::Display for GeneratorSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "sigma = {}, theta = {}, F = {}",
            self.sigma, self.theta, self.frob
        )
    }
}

/// Every triple `(σ, θ, F)` with σ, θ units and `Nrd F = 2` satisfying
/// the defining relations, sorted. The first is the designated solution.
pub fn solve_generators() -> Result<Vec<GeneratorSolution>> {
    let units = units();
    let norm2 = elements_of_norm(2);
    let mut out = Vec::new();
    for &sigma in &units {
        for &theta in &units {
            for &frob in &norm2 {
                let sol = GeneratorSolution { sigma, theta, frob };
                if sol.is_valid() {
                    out.push(sol);
                }
            }
        }
    }
    out.sort();
    if out.is_empty() {
        return Err(Error::Model("no quaternions satisfy the generator relations".into()));
    }
    Ok(out)
}

/// The lexicographically least solution.
pub fn designated() -> GeneratorSolution {
    solve_generators().expect("generator search is non-empty")[0]
}

pub fn endo_to_quat(e: &EndoExpr) -> Quat {
    designated().endo_to_quat(e)
}

/// Words in σ, θ, F, V of length at most `max_len` (including `id`),
/// followed by the sums and differences of pairs of words of length ≤ 1.
pub fn expression_corpus(max_len: usize) -> Vec<EndoExpr> {
    let gens = [EndoExpr::Sigma, EndoExpr::Theta, EndoExpr::Frob, EndoExpr::Ver];
    let mut layer = vec![EndoExpr::Id];
    let mut words = layer.clone();
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| gens.iter().map(move |g| g.clone() * w.clone()))
            .collect();
        words.extend(layer.iter().cloned());
    }
    let short: Vec<EndoExpr> = words.iter().filter(|w| w.depth() <= 1).cloned().collect();
    for a in &short {
        for b in &short {
            words.push(a.clone() + b.clone());
            words.push(a.clone() - b.clone());
        }
    }
    words
}

/// Pairs `(e₁, e₂)` of the corpus where equality as quaternions and
/// equality as maps on `E(F_64)` disagree.
pub fn faithfulness_failures(sol: &GeneratorSolution, corpus: &[EndoExpr]) -> Vec<(String, String)> {
    let pts = ecurve::enumerate(Degree::F64);
    let images: Vec<Vec<CurvePoint>> = corpus
        .iter()
        .map(|e| {
            pts.iter()
                .map(|&p| apply_expr(e, p).embed(Degree::F64).expect("F_4 embeds in F_64"))
                .collect()
        })
        .collect();
    let quats: Vec<Quat> = corpus.iter().map(|e| sol.endo_to_quat(e)).collect();
    let mut out = Vec::new();
    for i in 0..corpus.len() {
        for j in i + 1..corpus.len() {
            if (quats[i] == quats[j]) != (images[i] == images[j]) {
                out.push((corpus[i].to_string(), corpus[j].to_string()));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hamilton_relations() {
        assert_eq!(Quat::I * Quat::J, Quat::K);
        assert_eq!(Quat::J * Quat::I, -Quat::K);
        assert_eq!(Quat::I * Quat::I, -Quat::ONE);
        assert_eq!(Quat::K * Quat::K, -Quat::ONE);
    }

    #[test]
    fn trace_and_norm() {
        let q = Quat::from_halves([-1, 1, 1, 1]).unwrap();
        assert_eq!(q.trd(), -1);
        assert_eq!(q.nrd(), 1);
        assert_eq!((Quat::I + Quat::J).nrd(), 2);
        assert_eq!(q * q.conj(), Quat::scalar(q.nrd()));
        assert_eq!(q + q.conj(), Quat::from_halves([-2, 0, 0, 0]).unwrap());
        assert!(Quat::from_halves([1, 0, 1, 1]).is_err());
    }

    #[test]
    fn render() {
        let q = Quat::from_halves([-1, 1, -1, 3]).unwrap();
        assert_eq!(q.to_string(), "-1/2+1/2i-1/2j+3/2k");
        assert_eq!(Quat::new(1, 0, -2, 0).to_string(), "1+0i-2j+0k");
    }

    #[test]
    fn unit_and_norm_two_counts() {
        assert_eq!(units().len(), 24);
        assert_eq!(elements_of_norm(2).len(), 24);
        assert!(units().iter().all(|u| u.is_unit()));
    }

    #[test]
    fn multiplication_is_associative_on_units() {
        let u = units();
        for &a in &u {
            for &b in &u {
                for &c in u.iter().step_by(5) {
                    assert_eq!((a * b) * c, a * (b * c));
                }
            }
        }
    }

    #[test]
    fn generator_search() {
        let sols = solve_generators().unwrap();
        assert_eq!(sols.len(), 24);
        for s in &sols {
            assert!(s.is_valid());
            assert_eq!(s.sigma.pow(3), Quat::ONE);
            assert_ne!(s.sigma, Quat::ONE);
            assert_eq!(s.pi().nrd(), 3);
            assert_eq!(s.two_sigma_plus_one().nrd(), 3);
            assert_eq!(s.frob.nrd(), 2);
            assert_eq!(s.sigma.nrd(), 1);
            assert_eq!(s.pi(), -s.two_sigma_plus_one());
        }
        assert_eq!(designated(), sols[0]);
    }

    #[test]
    fn endo_to_quat_examples() {
        use EndoExpr::*;
        let s = designated();
        assert_eq!(s.endo_to_quat(&(Ver * Frob)), Quat::scalar(2));
        assert_eq!(s.endo_to_quat(&(Frob * Ver)), Quat::scalar(2));
        assert_eq!(s.endo_to_quat(&Id), Quat::ONE);
        assert_eq!(s.endo_to_quat(&EndoExpr::pi()), s.pi());
        // the printed 2σ + 1 is off by a sign
        assert_eq!(
            s.endo_to_quat(&EndoExpr::pi()),
            -s.endo_to_quat(&(Sigma.scale(2) + Id))
        );
    }

    #[test]
    fn model_is_faithful_on_short_words() {
        let corpus = expression_corpus(3);
        assert_eq!(corpus.len(), 85 + 2 * 25);
        for sol in solve_generators().unwrap().iter().step_by(7) {
            assert_eq!(faithfulness_failures(sol, &corpus), vec![]);
        }
    }
}
