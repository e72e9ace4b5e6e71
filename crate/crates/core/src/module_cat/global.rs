//! Global dimensions of module categories and conformal subgroups.

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use serde::Serialize;

use super::ade::{annular_matrices, module_quantum_dims, AdeGraph};
use super::catalog::{embedding_catalog, find_embedding, EmbeddingRecord};
use super::partition::PartitionFunction;
use crate::error::{Error, Result};
use crate::fusion::{global_dimension_closed, global_dimension_sum, integrable_weights, LevelKCategory};
use crate::lie_core::{build_lie_data, Family, LieType};
use crate::numeric::{Precision, Real};

/// `Q`, the quantum dimensions of `A_1(J)`. Tabled except for `C_r`, which
/// is computed.
pub fn level1_q_vector(j: LieType, prec: Precision) -> Result<Vec<Real>> {
    let one = || Real::one(prec);
    let sqrt5 = Real::from_i64(5, prec).sqrt();
    let phi = (Real::one(prec) + &sqrt5) / Real::from_i64(2, prec);
    Ok(match j.family {
        Family::A => vec![one(); j.rank + 1],
        Family::B => vec![one(), Real::from_i64(2, prec).sqrt(), one()],
        Family::D => vec![one(); 4],
        Family::E => vec![one(); [3, 2, 1][j.rank - 6]],
        Family::F | Family::G => vec![one(), phi],
        Family::C => integrable_weights(&build_lie_data(j)?, 1, prec)?.qdims(),
    })
}

/// `|A_1(J)| = Σ Q²`.
pub fn level1_global_dim(j: LieType, prec: Precision) -> Result<Real> {
    Ok(level1_q_vector(j, prec)?.iter().map(|q| q * q).sum())
}

/// `|A_1(J)|` summed from the level-1 integrable weights of `J`.
pub fn level1_global_dim_computed(j: LieType, prec: Precision) -> Result<Real> {
    Ok(global_dimension_sum(&integrable_weights(&build_lie_data(j)?, 1, prec)?))
}

/// `|E| = √(|A_k(G)| · |A_1(J)|)` for a conformal embedding `G_k ⊂ J`.
pub fn conformal_subgroup_dim(rec: &EmbeddingRecord, prec: Precision) -> Result<Real> {
    rec.validate()?;
    if !rec.is_simple() {
        return Err(Error::SemiSimple(rec.id()));
    }
    let a = global_dimension_closed(&build_lie_data(rec.inner()?)?, rec.level, prec)?;
    let j = level1_global_dim(rec.outer()?, prec)?;
    Ok((a * j).sqrt())
}

/// `|E_{g-2}(SU(g))| / |E_g(SU(g-2))|` and its exact value `g/(g-2)`.
pub fn series_ratio_check(g: u32, prec: Precision) -> Result<(Real, Rational64)> {
    if g < 4 {
        return Err(Error::InvalidArgument(format!("series ratio needs g >= 4, got {g}")));
    }
    let su = |n: u32| LieType::su(n as usize);
    let anti = EmbeddingRecord::new(su(g)?, g - 2, su(g * (g - 1) / 2)?, "antisymmetric", "regular-series");
    let sym = EmbeddingRecord::new(su(g - 2)?, g, su((g - 2) * (g - 1) / 2)?, "symmetric", "regular-series");
    let ratio = conformal_subgroup_dim(&anti, prec)? / conformal_subgroup_dim(&sym, prec)?;
    Ok((ratio, Rational64::new(g as i64, g as i64 - 2)))
}

/// Ways of computing `|E|` for an SU(2) module category.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    /// `Σ qdim(a)²` over the graph vertices.
    PfSum,
    /// `|A_k| / |F|`, `|F| = Σ_{n↑0̲} qdim(n)`.
    Induction,
    /// `√(|A_k| |J|)` with `|J|` read from the blocks of `Z`.
    ModularBlocks,
    /// `√(|A_k| |A_1(J)|)` from a conformal embedding.
    Embedding,
}

impl Route {
    pub const ALL: [Route; 4] = [Route::PfSum, Route::Induction, Route::ModularBlocks, Route::Embedding];

    pub fn name(self) -> &'static str {
        match self {
            Route::PfSum => "pf_sum",
            Route::Induction => "induction",
            Route::ModularBlocks => "modular_blocks",
            Route::Embedding => "embedding",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Route::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown route {s:?}")))
    }
}

/// Extra data some routes need.
#[derive(Clone, Debug, Default)]
pub struct RouteInputs {
    pub partition: Option<PartitionFunction>,
    pub embedding: Option<EmbeddingRecord>,
}

impl RouteInputs {
    /// Known modular invariant and embedding for the graph, where there is one.
    pub fn standard(graph: &AdeGraph) -> Result<Self> {
        let t = graph.lie_type;
        let nu = graph.level;
        let partition = match (t.family, t.rank) {
            (Family::A, _) => Some(PartitionFunction::identity(nu)),
            (Family::D, _) if nu.is_multiple_of(4) => Some(PartitionFunction::d_even(nu)?),
            (Family::E, 6) => Some(PartitionFunction::e6()),
            (Family::E, 8) => Some(PartitionFunction::e8()),
            _ => None,
        };
        let id = match (t.family, t.rank) {
            (Family::D, 4) => Some("su2-k4-symmetric"),
            (Family::E, 6) => Some("su2-k10-sporadic"),
            (Family::E, 8) => Some("su2-k28-sporadic"),
            _ => None,
        };
        let embedding = match id {
            Some(id) => Some(find_embedding(&embedding_catalog(), id)?.clone()),
            None => None,
        };
        Ok(RouteInputs { partition, embedding })
    }
}

/// The ambient `A_ν(SU(2))`.
pub fn ambient_category(graph: &AdeGraph, prec: Precision) -> Result<LevelKCategory> {
    integrable_weights(&build_lie_data(LieType::su(2)?)?, graph.level, prec)
}

/// `Σ_n (F_n)_{0̲ a} qdim(n)`, the quantum dimension of the induction of `a`.
pub fn induction_qdim(graph: &AdeGraph, ambient: &LevelKCategory, a: usize) -> Result<Real> {
    if a >= graph.len() {
        return Err(Error::InvalidArgument(format!("vertex {a} out of range")));
    }
    let f = annular_matrices(graph, graph.level as usize);
    let q = ambient.qdims();
    let prec = ambient.precision();
    Ok(f.iter()
        .zip(&q)
        .filter(|(fm, _)| fm[graph.distinguished_vertex][a] != 0)
        .map(|(fm, qn)| qn * Real::from_i64(fm[graph.distinguished_vertex][a], prec))
        .sum())
}

/// Both sides of `Σ_{n↑a} qdim(n) = qdim(a) |F|`.
pub fn peter_weyl_check(graph: &AdeGraph, a: usize, prec: Precision) -> Result<(Real, Real)> {
    let ambient = ambient_category(graph, prec)?;
    let lhs = induction_qdim(graph, &ambient, a)?;
    let f = induction_qdim(graph, &ambient, graph.distinguished_vertex)?;
    let (v, _) = module_quantum_dims(graph, prec);
    Ok((lhs, &v[a] * &f))
}

/// `|E|` along the requested route.
pub fn module_global_dim(graph: &AdeGraph, route: Route, inputs: &RouteInputs, prec: Precision) -> Result<Real> {
    match route {
        Route::PfSum => {
            let (v, _) = module_quantum_dims(graph, prec);
            Ok(v.iter().map(|x| x * x).sum())
        }
        Route::Induction => {
            let ambient = ambient_category(graph, prec)?;
            let f = induction_qdim(graph, &ambient, graph.distinguished_vertex)?;
            Ok(global_dimension_sum(&ambient) / f)
        }
        Route::ModularBlocks => {
            let z = inputs.partition.as_ref().ok_or(Error::MissingRouteData {
                route: "modular_blocks",
                missing: "a partition function",
            })?;
            let ambient = ambient_category(graph, prec)?;
            let b = z.block_qdims(&ambient)?;
            let j: Real = b.iter().map(|x| (x / &b[0]).powi(2)).sum();
            Ok((global_dimension_sum(&ambient) * j).sqrt())
        }
        Route::Embedding => {
            let rec = inputs.embedding.as_ref().ok_or(Error::MissingRouteData {
                route: "embedding",
                missing: "a conformal embedding record",
            })?;
            if rec.inner()? != LieType::su(2)? || rec.level != graph.level {
                return Err(Error::InvalidArgument(format!(
                    "embedding {} is not over SU(2) at level {}",
                    rec.id(),
                    graph.level
                )));
            }
            conformal_subgroup_dim(rec, prec)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rel_close;

    fn p() -> Precision {
        Precision::default()
    }

    fn tol() -> Real {
        Real::ten_pow_neg(30, p())
    }

    fn graph(s: &str) -> AdeGraph {
        AdeGraph::new(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn d4_routes() {
        let g = graph("D4");
        let inputs = RouteInputs::standard(&g).unwrap();
        for r in Route::ALL {
            let v = module_global_dim(&g, r, &inputs, p()).unwrap();
            assert!(rel_close(&v, &Real::from_i64(6, p()), &tol()), "{r}: {v}");
        }
    }

    #[test]
    fn trivial_module_is_ambient() {
        let g = graph("A7");
        let inputs = RouteInputs::standard(&g).unwrap();
        let a = global_dimension_sum(&ambient_category(&g, p()).unwrap());
        for r in [Route::PfSum, Route::Induction, Route::ModularBlocks] {
            assert!(rel_close(&module_global_dim(&g, r, &inputs, p()).unwrap(), &a, &tol()), "{r}");
        }
        assert!(matches!(
            module_global_dim(&g, Route::Embedding, &inputs, p()),
            Err(Error::MissingRouteData { route: "embedding", .. })
        ));
    }

    #[test]
    fn e7_has_no_block_route() {
        let g = graph("E7");
        let inputs = RouteInputs::standard(&g).unwrap();
        assert!(module_global_dim(&g, Route::ModularBlocks, &inputs, p()).is_err());
        let a = module_global_dim(&g, Route::PfSum, &inputs, p()).unwrap();
        let b = module_global_dim(&g, Route::Induction, &inputs, p()).unwrap();
        assert!(rel_close(&a, &b, &tol()));
    }

    #[test]
    fn level1_c_small() {
        let c4 = level1_global_dim(LieType::new(Family::C, 4).unwrap(), p()).unwrap();
        assert!(rel_close(&c4, &Real::from_i64(12, p()), &tol()));
        let c2 = level1_global_dim(LieType::new(Family::C, 2).unwrap(), p()).unwrap();
        assert!(rel_close(&c2, &Real::from_i64(4, p()), &tol()));
    }

    #[test]
    fn semisimple_rejected() {
        let mut r = EmbeddingRecord::new(LieType::su(2).unwrap(), 1, LieType::su(3).unwrap(), "t", "x");
        r.extra_factors.push(super::super::catalog::InnerFactor { family: 'A', rank: 1, level: 1 });
        assert!(matches!(conformal_subgroup_dim(&r, p()), Err(Error::SemiSimple(_))));
    }

    #[test]
    fn route_names_round_trip() {
        for r in Route::ALL {
            assert_eq!(r.name().parse::<Route>().unwrap(), r);
        }
    }
}
