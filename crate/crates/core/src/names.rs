//! Names of the 24 elliptic curves on `E × E`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// The two families of the configuration. Unprimed curves belong to
/// `First`, primed curves to `Second`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    First,
    Second,
}

impl Family {
    pub fn other(self) -> Family {
        match self {
            Family::First => Family::Second,
            Family::Second => Family::First,
        }
    }

    pub(crate) fn suffix(self) -> &'static str {
        match self {
            Family::First => "",
            Family::Second => "'",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CurveKind {
    E,
    F,
    V,
    Pi,
}

impl CurveKind {
    pub const ALL: [CurveKind; 4] = [CurveKind::E, CurveKind::F, CurveKind::V, CurveKind::Pi];

    fn symbol(self) -> &'static str {
        match self {
            CurveKind::E => "E",
            CurveKind::F => "F",
            CurveKind::V => "V",
            CurveKind::Pi => "pi",
        }
    }
}

/// `E_i`, `F_i`, `V_i`, `π_i` and their primed versions, `i ∈ {0, 1, 2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CurveName {
    pub family: Family,
    pub kind: CurveKind,
    pub index: u8,
}

impl CurveName {
    pub const fn new(kind: CurveKind, family: Family, index: u8) -> Self {
        CurveName {
            family,
            kind,
            index,
        }
    }

    /// All 24 names, first family then second, each ordered `E, F, V, π`
    /// and by index.
    pub fn all() -> Vec<CurveName> {
        let mut out = Vec::with_capacity(24);
        for family in [Family::First, Family::Second] {
            for kind in CurveKind::ALL {
                for index in 0..3 {
                    out.push(CurveName::new(kind, family, index));
                }
            }
        }
        out
    }

    /// The untranslated curve this one is a translate of.
    pub fn base(self) -> CurveName {
        CurveName { index: 0, ..self }
    }

    /// Position among the eight base curves `E₀, F₀, V₀, π₀, E₀′, F₀′, V₀′, π₀′`.
    pub fn base_position(self) -> usize {
        let k = CurveKind::ALL.iter().position(|k| *k == self.kind).unwrap();
        match self.family {
            Family::First => k,
            Family::Second => 4 + k,
        }
    }

    pub fn base_curves() -> [CurveName; 8] {
        let mut out = [CurveName::new(CurveKind::E, Family::First, 0); 8];
        for (i, family) in [Family::First, Family::Second].into_iter().enumerate() {
            for (j, kind) in CurveKind::ALL.into_iter().enumerate() {
                out[4 * i + j] = CurveName::new(kind, family, 0);
            }
        }
        out
    }
}

impl fmt::Display for CurveName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.kind.symbol(), self.index, self.family.suffix())
    }
}

impl FromStr for CurveName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::UnknownCurve(s.to_string());
        let (body, family) = match s.strip_suffix('\'') {
            Some(b) => (b, Family::Second),
            None => (s, Family::First),
        };
        let (kind, digits) = if let Some(rest) = body.strip_prefix("pi") {
            (CurveKind::Pi, rest)
        } else {
            let mut chars = body.chars();
            let kind = match chars.next().ok_or_else(bad)? {
                'E' => CurveKind::E,
                'F' => CurveKind::F,
                'V' => CurveKind::V,
                _ => return Err(bad()),
            };
            (kind, chars.as_str())
        };
        let index: u8 = digits.parse().map_err(|_| bad())?;
        if index > 2 {
            return Err(bad());
        }
        Ok(CurveName::new(kind, family, index))
    }
}

impl Serialize for CurveName {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CurveName {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        let all = CurveName::all();
        assert_eq!(all.len(), 24);
        for n in all {
            assert_eq!(n.to_string().parse::<CurveName>().unwrap(), n);
        }
        assert_eq!("pi2'".parse::<CurveName>().unwrap().to_string(), "pi2'");
        assert!("G0".parse::<CurveName>().is_err());
        assert!("E3".parse::<CurveName>().is_err());
        assert!("pi".parse::<CurveName>().is_err());
    }

    #[test]
    fn base_positions() {
        let bases = CurveName::base_curves();
        for (i, b) in bases.iter().enumerate() {
            assert_eq!(b.base_position(), i);
        }
        assert_eq!(bases[3].to_string(), "pi0");
        assert_eq!(bases[4].to_string(), "E0'");
    }
}
