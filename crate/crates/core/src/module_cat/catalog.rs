//! Conformal embeddings `G_k ⊂ J_1`.

use std::collections::BTreeSet;
use std::path::Path;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie_core::{Family, LieType};

pub const DEFAULT_G_MAX: u32 = 12;

const BUNDLED: &str = include_str!("../../data/embeddings.json");

/// Extra simple factor of a semisimple inner group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InnerFactor {
    pub family: char,
    pub rank: usize,
    pub level: u32,
}

/// One catalog line, as stored on disk.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingRecord {
    pub inner_family: char,
    pub inner_rank: usize,
    pub level: u32,
    pub outer_family: char,
    pub outer_rank: usize,
    pub tag: String,
    pub source: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub extra_factors: Vec<InnerFactor>,
}

fn lie_type(family: char, rank: usize) -> Result<LieType> {
    let f = Family::from_letter(family).ok_or_else(|| Error::GroupSpec(format!("{family}{rank}")))?;
    LieType::new(f, rank)
}

impl EmbeddingRecord {
    pub fn new(inner: LieType, level: u32, outer: LieType, tag: &str, source: &str) -> Self {
        EmbeddingRecord {
            inner_family: inner.family.letter(),
            inner_rank: inner.rank,
            level,
            outer_family: outer.family.letter(),
            outer_rank: outer.rank,
            tag: tag.to_string(),
            source: source.to_string(),
            extra_factors: Vec::new(),
        }
    }

    pub fn inner(&self) -> Result<LieType> {
        lie_type(self.inner_family, self.inner_rank)
    }

    pub fn outer(&self) -> Result<LieType> {
        lie_type(self.outer_family, self.outer_rank)
    }

    pub fn is_simple(&self) -> bool {
        self.extra_factors.is_empty()
    }

    /// `{slug}-k{level}-{tag}`, e.g. `e8-k30-adjoint`.
    pub fn id(&self) -> String {
        let slug = self
            .inner()
            .map(|t| t.slug())
            .unwrap_or_else(|_| format!("{}{}", self.inner_family, self.inner_rank).to_lowercase());
        format!("{slug}-k{}-{}", self.level, self.tag)
    }

    /// Central charges `(c_G, c_J)`, with `G` possibly semisimple.
    pub fn central_charges(&self) -> Result<(Rational64, Rational64)> {
        let mut inner = self.inner()?.central_charge(self.level);
        for f in &self.extra_factors {
            inner += lie_type(f.family, f.rank)?.central_charge(f.level);
        }
        Ok((inner, self.outer()?.central_charge(1)))
    }

    /// Reject the record unless `c_G = c_J` exactly.
    pub fn validate(&self) -> Result<()> {
        let (lhs, rhs) = self.central_charges().map_err(|e| Error::Catalog {
            record: self.to_json(),
            reason: e.to_string(),
        })?;
        if lhs != rhs {
            return Err(Error::CentralCharge {
                id: self.to_json(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
        Ok(())
    }

    fn to_json(&self) -> String {
        serde_json::to_string(self).unwrap_or_else(|_| self.id())
    }
}

fn su(n: u32) -> LieType {
    LieType::su(n as usize).expect("n >= 2")
}

fn spin(n: u64) -> LieType {
    LieType::spin(n as usize).expect("n >= 5")
}

/// The built-in catalog: the three regular SU(g) series for `g ≤ g_max`, the
/// sporadic SU(g) table, and `G_{g} ⊂ Spin(dim G)` for simple `G` of rank at
/// most 8. Duplicate ids are dropped, first occurrence wins.
pub fn generate_catalog(g_max: u32) -> Vec<EmbeddingRecord> {
    let mut out = Vec::new();
    for g in 4..=g_max {
        out.push(EmbeddingRecord::new(su(g), g - 2, su(g * (g - 1) / 2), "antisymmetric", "regular-series"));
    }
    for g in 3..=g_max {
        out.push(EmbeddingRecord::new(su(g), g, spin((g * g - 1) as u64), "adjoint", "regular-series"));
    }
    for g in 2..=g_max {
        out.push(EmbeddingRecord::new(su(g), g + 2, su(g * (g + 1) / 2), "symmetric", "regular-series"));
    }
    let t = |f, r| LieType::new(f, r).expect("valid");
    for (n, k, outer) in [
        (2, 10, t(Family::B, 2)),
        (2, 28, t(Family::G, 2)),
        (3, 9, t(Family::E, 6)),
        (3, 21, t(Family::E, 7)),
        (4, 8, t(Family::D, 10)),
        (6, 6, t(Family::C, 10)),
        (8, 1, t(Family::E, 7)),
        (8, 10, t(Family::D, 35)),
        (9, 1, t(Family::E, 8)),
    ] {
        out.push(EmbeddingRecord::new(su(n), k, outer, "sporadic", "sporadic-table"));
    }
    let mut simple: Vec<LieType> = Vec::new();
    simple.extend((2..=8).map(|r| t(Family::A, r)));
    simple.extend((2..=8).map(|r| t(Family::B, r)));
    simple.extend((2..=8).map(|r| t(Family::C, r)));
    simple.extend((4..=8).map(|r| t(Family::D, r)));
    simple.extend((6..=8).map(|r| t(Family::E, r)));
    simple.push(t(Family::F, 4));
    simple.push(t(Family::G, 2));
    for g in simple {
        let k = g.dual_coxeter_number() as u32;
        out.push(EmbeddingRecord::new(g, k, spin(g.dimension()), "adjoint", "adjoint-rule"));
    }
    let mut seen = BTreeSet::new();
    out.retain(|r| seen.insert(r.id()));
    out
}

/// Parse and validate a JSON catalog. The first bad record aborts loading.
pub fn parse_catalog(json: &str) -> Result<Vec<EmbeddingRecord>> {
    let records: Vec<EmbeddingRecord> = serde_json::from_str(json)?;
    let mut seen = BTreeSet::new();
    for r in &records {
        r.validate()?;
        if !seen.insert(r.id()) {
            return Err(Error::Catalog {
                record: r.to_json(),
                reason: format!("duplicate id {}", r.id()),
            });
        }
    }
    Ok(records)
}

pub fn load_catalog(path: &Path) -> Result<Vec<EmbeddingRecord>> {
    parse_catalog(&std::fs::read_to_string(path)?)
}

/// The catalog shipped with the crate.
pub fn embedding_catalog() -> Vec<EmbeddingRecord> {
    parse_catalog(BUNDLED).expect("bundled catalog is valid")
}

pub fn find_embedding<'a>(catalog: &'a [EmbeddingRecord], id: &str) -> Result<&'a EmbeddingRecord> {
    catalog
        .iter()
        .find(|r| r.id() == id)
        .ok_or_else(|| Error::UnknownCatalogId(id.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_matches_generator() {
        assert_eq!(embedding_catalog(), generate_catalog(DEFAULT_G_MAX));
    }

    /// Rewrites the bundled file from the generator.
    #[test]
    #[ignore]
    fn regenerate_bundled() {
        let json = serde_json::to_string_pretty(&generate_catalog(DEFAULT_G_MAX)).unwrap();
        std::fs::write(concat!(env!("CARGO_MANIFEST_DIR"), "/data/embeddings.json"), json + "\n").unwrap();
    }

    #[test]
    fn every_generated_record_is_conformal() {
        for r in generate_catalog(20) {
            r.validate().unwrap();
        }
    }

    #[test]
    fn pinned_central_charges() {
        let cat = generate_catalog(DEFAULT_G_MAX);
        let c = |id: &str| find_embedding(&cat, id).unwrap().central_charges().unwrap();
        assert_eq!(c("su2-k10-sporadic"), (Rational64::new(5, 2), Rational64::new(5, 2)));
        assert_eq!(c("su9-k1-sporadic").0, Rational64::from_integer(8));
        let e8 = find_embedding(&cat, "e8-k30-adjoint").unwrap();
        assert_eq!(e8.outer().unwrap(), LieType::new(Family::D, 124).unwrap());
        assert_eq!(e8.outer().unwrap().dimension(), 30628);
        assert_eq!(c("e8-k30-adjoint").1, Rational64::from_integer(124));
    }

    #[test]
    fn named_su2_cases_present() {
        let cat = generate_catalog(DEFAULT_G_MAX);
        for id in ["su2-k10-sporadic", "su2-k28-sporadic", "su2-k4-symmetric"] {
            find_embedding(&cat, id).unwrap();
        }
        assert!(find_embedding(&cat, "su2-k2-adjoint").is_err());
    }

    #[test]
    fn bad_record_is_echoed() {
        let json = r#"[{"inner_family":"A","inner_rank":1,"level":3,"outer_family":"B","outer_rank":2,"tag":"sporadic","source":"x"}]"#;
        match parse_catalog(json) {
            Err(Error::CentralCharge { id, .. }) => assert!(id.contains("\"level\":3")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn semisimple_inner_round_trips() {
        let mut r = EmbeddingRecord::new(su(2), 1, su(3), "test", "x");
        r.extra_factors.push(InnerFactor { family: 'A', rank: 1, level: 1 });
        let back: EmbeddingRecord = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        assert_eq!(back, r);
        assert!(!back.is_simple());
    }
}
