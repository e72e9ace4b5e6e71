//! Exact structural data for the simple Lie types.
//!
//! Weights and roots live in the fundamental-weight basis. The `i`-th simple
//! root is row `i` of the Cartan matrix. Nodes follow Bourbaki numbering.

mod data;
mod linalg;
mod weyl;

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use data::{build_lie_data, LieData};
pub use weyl::{for_each_orbit_point, weyl_group, weyl_group_order, WeylElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A simple Lie type `X_r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LieType {
    pub family: Family,
    pub rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let bad = |reason| {
            Err(Error::InvalidRank {
                family: family.letter(),
                rank,
                reason,
            })
        };
        match family {
            Family::A if rank < 1 => bad("A needs rank >= 1"),
            Family::B if rank < 2 => bad("B needs rank >= 2"),
            Family::C if rank < 2 => bad("C needs rank >= 2"),
            Family::D if rank < 3 => bad("D needs rank >= 3"),
            Family::E if !(6..=8).contains(&rank) => bad("E exists only in ranks 6, 7, 8"),
            Family::F if rank != 4 => bad("F exists only in rank 4"),
            Family::G if rank != 2 => bad("G exists only in rank 2"),
            _ => Ok(LieType { family, rank }),
        }
    }

    /// `SU(n)`, i.e. `A_{n-1}`.
    pub fn su(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::GroupSpec(format!("SU({n})")));
        }
        LieType::new(Family::A, n - 1)
    }

    /// `Spin(n)`: `B_{(n-1)/2}` for odd `n`, `D_{n/2}` for even `n`.
    pub fn spin(n: usize) -> Result<Self> {
        if n % 2 == 1 {
            LieType::new(Family::B, (n.saturating_sub(1)) / 2)
        } else {
            LieType::new(Family::D, n / 2)
        }
    }

    /// `Sp(2r)`, i.e. `C_r`.
    pub fn sp(n: usize) -> Result<Self> {
        if n % 2 == 1 {
            return Err(Error::GroupSpec(format!("Sp({n})")));
        }
        LieType::new(Family::C, n / 2)
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    /// Coxeter number `γ`, from the standard formulas.
    pub fn coxeter_number(&self) -> u64 {
        let r = self.rank as u64;
        match self.family {
            Family::A => r + 1,
            Family::B | Family::C => 2 * r,
            Family::D => 2 * r - 2,
            Family::E => [12, 18, 30][self.rank - 6],
            Family::F => 12,
            Family::G => 6,
        }
    }

    /// Dual Coxeter number `g`.
    pub fn dual_coxeter_number(&self) -> u64 {
        let r = self.rank as u64;
        match self.family {
            Family::A => r + 1,
            Family::B => 2 * r - 1,
            Family::C => r + 1,
            Family::D => 2 * r - 2,
            Family::E => [12, 18, 30][self.rank - 6],
            Family::F => 9,
            Family::G => 4,
        }
    }

    /// `dim G = r (γ + 1)`.
    pub fn dimension(&self) -> u64 {
        self.rank as u64 * (self.coxeter_number() + 1)
    }

    /// Central charge `dim(G) k / (k + g)` at level `k`.
    pub fn central_charge(&self, level: u32) -> Rational64 {
        Rational64::new(
            (self.dimension() * level as u64) as i64,
            (level as u64 + self.dual_coxeter_number()) as i64,
        )
    }

    /// Conventional group name: `SU(3)`, `Spin(10)`, `Sp(6)`, `E8`.
    pub fn group_name(&self) -> String {
        let r = self.rank;
        match self.family {
            Family::A => format!("SU({})", r + 1),
            Family::B => format!("Spin({})", 2 * r + 1),
            Family::C => format!("Sp({})", 2 * r),
            Family::D => format!("Spin({})", 2 * r),
            _ => self.to_string(),
        }
    }

    /// Lowercase identifier used in catalog ids: `su3`, `e8`, `b4`.
    pub fn slug(&self) -> String {
        match self.family {
            Family::A => format!("su{}", self.rank + 1),
            f => format!("{}{}", f.letter().to_ascii_lowercase(), self.rank),
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for LieType {
    type Err = Error;

    /// Accepts `A3`, `a_3`, `E8`, `SU(4)`, `Spin(10)`, `SO(10)`, `Sp(6)`, `su4`.
    fn from_str(s: &str) -> Result<Self> {
        let spec = s.trim();
        let err = || Error::GroupSpec(s.to_string());
        let lower = spec.to_ascii_lowercase();
        let named = |prefix: &str| -> Option<usize> {
            let rest = lower.strip_prefix(prefix)?;
            let rest = rest
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .unwrap_or(rest);
            rest.trim().parse().ok()
        };
        if let Some(n) = named("spin").or_else(|| named("so")) {
            return LieType::spin(n);
        }
        if let Some(n) = named("sp") {
            return LieType::sp(n);
        }
        if let Some(n) = named("su") {
            return LieType::su(n);
        }
        let mut chars = spec.chars();
        let family = chars.next().and_then(Family::from_letter).ok_or_else(err)?;
        let rest = chars.as_str().trim_start_matches('_');
        let rank = rest.parse().map_err(|_| err())?;
        LieType::new(family, rank)
    }
}

/// A weight in the fundamental-weight basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DominantWeight {
    pub coords: Vec<Rational64>,
}

impl DominantWeight {
    pub fn new(coords: Vec<Rational64>) -> Self {
        DominantWeight { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        DominantWeight {
            coords: coords.iter().map(|&c| Rational64::from_integer(c)).collect(),
        }
    }

    pub fn zero(rank: usize) -> Self {
        Self::from_ints(&vec![0; rank])
    }

    /// The Weyl vector: all coordinates 1.
    pub fn rho(rank: usize) -> Self {
        Self::from_ints(&vec![1; rank])
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// Integer coordinates, if every coordinate is integral.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.coords
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// Nonnegative integer coordinates.
    pub fn is_dominant_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer() && !c.is_negative())
    }

    pub fn add(&self, other: &DominantWeight) -> DominantWeight {
        DominantWeight::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self) -> DominantWeight {
        DominantWeight::new(self.coords.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for DominantWeight {
    type Err = Error;

    /// Parses `1,0,2`, `(1,0,2)`, `[1 0 2]` or `1/3,2`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        let coords = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<Rational64>()
                    .map_err(|_| Error::InvalidArgument(format!("bad weight coordinate {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if coords.is_empty() {
            return Err(Error::InvalidArgument(format!("empty weight {s:?}")));
        }
        Ok(DominantWeight { coords })
    }
}

fn check_rank(data: &LieData, w: &DominantWeight) -> Result<()> {
    if w.rank() != data.rank() {
        return Err(Error::DimensionMismatch {
            expected: data.rank(),
            got: w.rank(),
        });
    }
    Ok(())
}

/// `λᵀ · F · μ` with `F` the fundamental quadratic form.
pub fn inner_product(data: &LieData, lambda: &DominantWeight, mu: &DominantWeight) -> Result<Rational64> {
    check_rank(data, lambda)?;
    check_rank(data, mu)?;
    let mut acc = Rational64::zero();
    for (i, li) in lambda.coords.iter().enumerate() {
        if li.is_zero() {
            continue;
        }
        for (j, mj) in mu.coords.iter().enumerate() {
            acc += li * data.quad_form[i][j] * mj;
        }
    }
    Ok(acc)
}

/// `⟨λ, θ⟩` with `θ` the highest root.
pub fn level_of(data: &LieData, lambda: &DominantWeight) -> Result<Rational64> {
    inner_product(data, lambda, &data.highest_root)
}

/// Scalar products of `λ` with every positive root, in root order.
pub fn ribbon_table(data: &LieData, lambda: &DominantWeight) -> Result<Vec<(DominantWeight, Rational64)>> {
    check_rank(data, lambda)?;
    data.positive_roots
        .iter()
        .map(|root| Ok((root.clone(), inner_product(data, lambda, root)?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_group_specs() {
        let cases = [
            ("A3", "A3"),
            ("su(4)", "A3"),
            ("SU(2)", "A1"),
            ("Spin(10)", "D5"),
            ("Spin(5)", "B2"),
            ("so(248)", "D124"),
            ("Sp(6)", "C3"),
            ("e_8", "E8"),
            ("g2", "G2"),
        ];
        for (spec, want) in cases {
            assert_eq!(spec.parse::<LieType>().unwrap().to_string(), want, "{spec}");
        }
        for bad in ["E5", "F3", "B1", "D2", "X4", "SU(1)", "Sp(5)", ""] {
            assert!(bad.parse::<LieType>().is_err(), "{bad}");
        }
    }

    #[test]
    fn parses_weights() {
        let w: DominantWeight = "(1, 0,2)".parse().unwrap();
        assert_eq!(w, DominantWeight::from_ints(&[1, 0, 2]));
        let f: DominantWeight = "1/3,2".parse().unwrap();
        assert_eq!(f.coords[0], Rational64::new(1, 3));
        assert!(!f.is_dominant_integral());
        assert!("x,1".parse::<DominantWeight>().is_err());
    }

    #[test]
    fn formula_invariants_match_root_data() {
        for s in ["A1", "A7", "B2", "B5", "C3", "C5", "D4", "D7", "E6", "E7", "E8", "F4", "G2"] {
            let t: LieType = s.parse().unwrap();
            let d = build_lie_data(t).unwrap();
            assert_eq!(t.coxeter_number(), d.coxeter as u64, "{s}");
            assert_eq!(t.dual_coxeter_number(), d.dual_coxeter as u64, "{s}");
            assert_eq!(t.dimension(), (d.rank() + 2 * d.num_positive_roots()) as u64, "{s}");
        }
    }

    #[test]
    fn slugs() {
        assert_eq!(LieType::su(9).unwrap().slug(), "su9");
        assert_eq!("E8".parse::<LieType>().unwrap().slug(), "e8");
    }
}
