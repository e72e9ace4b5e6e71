//! Block-diagonal (type I) SU(2) modular invariants.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fusion::{global_dimension_sum, LevelKCategory, ModularData};
use crate::numeric::{Complex, ComplexMatrix, Precision, Real};

/// A modular invariant `Z = Σ_B |Σ_{n∈B} χ_n|²` over the integrable weights
/// of `A_k(SU(2))`, labelled `0..=k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionFunction {
    pub z: Vec<Vec<i64>>,
    /// 0-based weight labels of each block.
    pub blocks: Vec<Vec<usize>>,
}

impl PartitionFunction {
    /// Blocks given with 0-based labels.
    pub fn from_blocks(size: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut z = vec![vec![0i64; size]; size];
        for b in &blocks {
            for &i in b {
                if i >= size {
                    return Err(Error::InvalidArgument(format!("label {i} outside 0..{size}")));
                }
                for &j in b {
                    z[i][j] += 1;
                }
            }
        }
        let pf = PartitionFunction { z, blocks };
        if pf.z.first().and_then(|r| r.first()) != Some(&1) {
            return Err(Error::Consistency("Z_00 must be 1".into()));
        }
        Ok(pf)
    }

    /// Blocks given with 1-based labels (`χ_1` is the trivial weight).
    pub fn from_shifted_blocks(size: usize, blocks: &[&[usize]]) -> Result<Self> {
        let shifted = blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|&n| n.checked_sub(1).ok_or_else(|| Error::InvalidArgument("label 0 in 1-based block".into())))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_blocks(size, shifted)
    }

    /// The diagonal invariant at level `k`.
    pub fn identity(k: u32) -> Self {
        let n = k as usize + 1;
        Self::from_blocks(n, (0..n).map(|i| vec![i]).collect()).expect("diagonal")
    }

    /// `D_{k/2+2}` invariant, `k ≡ 0 mod 4`: blocks `{j, k-j}` for even
    /// `j < k/2`, and `{k/2}` twice.
    pub fn d_even(k: u32) -> Result<Self> {
        if k < 4 || !k.is_multiple_of(4) {
            return Err(Error::InvalidArgument(format!("D-even invariant needs k = 0 mod 4, got {k}")));
        }
        let k = k as usize;
        let mut blocks: Vec<Vec<usize>> = (0..k / 2).step_by(2).map(|j| vec![j, k - j]).collect();
        blocks.push(vec![k / 2]);
        blocks.push(vec![k / 2]);
        Self::from_blocks(k + 1, blocks)
    }

    /// `E6` invariant at `k = 10`.
    pub fn e6() -> Self {
        Self::from_shifted_blocks(11, &[&[1, 7], &[4, 8], &[5, 11]]).expect("valid blocks")
    }

    /// `E8` invariant at `k = 28`.
    pub fn e8() -> Self {
        Self::from_shifted_blocks(29, &[&[1, 11, 19, 29], &[7, 13, 17, 23]]).expect("valid blocks")
    }

    pub fn len(&self) -> usize {
        self.z.len()
    }

    pub fn is_empty(&self) -> bool {
        self.z.is_empty()
    }

    /// SU(2) level `k = len - 1`.
    pub fn level(&self) -> u32 {
        (self.len() - 1) as u32
    }

    /// Generalized exponents: diagonal labels with their multiplicity.
    pub fn exponents(&self) -> Vec<(usize, i64)> {
        (0..self.len()).filter(|&i| self.z[i][i] > 0).map(|i| (i, self.z[i][i])).collect()
    }

    fn require_size(&self, n: usize) -> Result<()> {
        if n != self.len() {
            return Err(Error::DimensionMismatch { expected: self.len(), got: n });
        }
        Ok(())
    }

    /// Largest entry of `|ZS - SZ|` and `|ZT - TZ|`.
    pub fn commutation_residue(&self, md: &ModularData) -> Result<Real> {
        self.require_size(md.len())?;
        let prec = md.precision();
        let z = ComplexMatrix::from_fn(self.len(), |i, j| Complex::from_real(Real::from_i64(self.z[i][j], prec)));
        let zt = z.mul_diag(&md.t);
        let tz = ComplexMatrix::from_fn(self.len(), |i, j| z.get(i, j) * &md.t[i]);
        let s_res = z.mul(&md.s).max_abs_diff(&md.s.mul(&z));
        Ok(s_res.max(&zt.max_abs_diff(&tz)))
    }

    /// `qdim` of each block, `Σ_{n∈B} qdim(n)`.
    pub fn block_qdims(&self, cat: &LevelKCategory) -> Result<Vec<Real>> {
        self.require_size(cat.len())?;
        let q = cat.qdims();
        Ok(self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&n| q[n].clone()).sum())
            .collect())
    }
}

/// Both sides of `Σ_{m,n} qdim(m) Z_{mn} qdim(n) = |A_k|`.
pub fn sandwich_identity(cat: &LevelKCategory, z: &PartitionFunction) -> Result<(Real, Real)> {
    z.require_size(cat.len())?;
    let q = cat.qdims();
    let prec = cat.precision();
    let mut lhs = Real::zero(prec);
    for (i, row) in z.z.iter().enumerate() {
        for (j, &c) in row.iter().enumerate() {
            if c != 0 {
                lhs = lhs + &q[i] * &q[j] * Real::from_i64(c, prec);
            }
        }
    }
    Ok((lhs, global_dimension_sum(cat)))
}

/// Both sides of `Σ_{m,n=1}^{κ-1} Z_{mn} sin(mπ/κ) sin(nπ/κ) = κ/2`.
pub fn ade_trig_identity(z: &PartitionFunction, kappa: u32, prec: Precision) -> Result<(Real, Real)> {
    if kappa < 2 {
        return Err(Error::InvalidArgument(format!("altitude {kappa} < 2")));
    }
    z.require_size(kappa as usize - 1)?;
    let angle = Real::pi(prec) / Real::from_i64(kappa as i64, prec);
    let sines: Vec<Real> = (1..kappa).map(|m| (&angle * Real::from_i64(m as i64, prec)).sin()).collect();
    let mut lhs = Real::zero(prec);
    for (i, row) in z.z.iter().enumerate() {
        for (j, &c) in row.iter().enumerate() {
            if c != 0 {
                lhs = lhs + &sines[i] * &sines[j] * Real::from_i64(c, prec);
            }
        }
    }
    Ok((lhs, Real::from_i64(kappa as i64, prec) / Real::from_i64(2, prec)))
}
