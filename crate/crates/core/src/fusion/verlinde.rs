//! Fusion matrices from the Verlinde formula.
//!
//! The sums run in `f64` over a rounded copy of `S`. Integrality to
//! `1e-9` is required and anything worse is an error.

use super::ModularData;
use crate::error::{Error, Result};
use crate::tolerance::VERLINDE_RESIDUE;

/// Square nonnegative-integer matrix `(N_m)_{np}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionMatrix {
    n: usize,
    data: Vec<i64>,
}

impl FusionMatrix {
    pub fn zeros(n: usize) -> Self {
        FusionMatrix { n, data: vec![0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.n + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.n).map(<[i64]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &FusionMatrix) -> FusionMatrix {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        out
    }

    pub fn add(&self, other: &FusionMatrix) -> FusionMatrix {
        FusionMatrix {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }
}

struct SmallS {
    n: usize,
    re: Vec<f64>,
    im: Vec<f64>,
}

impl SmallS {
    fn new(md: &ModularData) -> Self {
        let n = md.len();
        let mut re = Vec::with_capacity(n * n);
        let mut im = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let e = md.s.get(i, j);
                re.push(e.re.to_f64());
                im.push(e.im.to_f64());
            }
        }
        SmallS { n, re, im }
    }

    fn fusion(&self, m: usize) -> Result<(FusionMatrix, f64)> {
        let n = self.n;
        // A_{nq} = S_{nq} S_{mq} / S_{0q}
        let mut a_re = vec![0.0; n * n];
        let mut a_im = vec![0.0; n * n];
        for q in 0..n {
            let s0 = self.re[q];
            let (rr, ri) = (self.re[m * n + q] / s0, self.im[m * n + q] / s0);
            for row in 0..n {
                let (x, y) = (self.re[row * n + q], self.im[row * n + q]);
                a_re[row * n + q] = x * rr - y * ri;
                a_im[row * n + q] = x * ri + y * rr;
            }
        }
        let mut out = FusionMatrix::zeros(n);
        let mut worst: f64 = 0.0;
        for row in 0..n {
            for p in 0..n {
                // Σ_q A_{row,q} conj(S_{pq})
                let mut re = 0.0;
                let mut im = 0.0;
                for q in 0..n {
                    let (x, y) = (a_re[row * n + q], a_im[row * n + q]);
                    let (u, v) = (self.re[p * n + q], -self.im[p * n + q]);
                    re += x * u - y * v;
                    im += x * v + y * u;
                }
                let rounded = re.round();
                let residue = (re - rounded).abs().max(im.abs());
                if residue >= VERLINDE_RESIDUE || rounded < 0.0 {
                    return Err(Error::NotIntegral {
                        m,
                        n: row,
                        p,
                        residue: if rounded < 0.0 { re } else { residue },
                    });
                }
                worst = worst.max(residue);
                out.set(row, p, rounded as i64);
            }
        }
        Ok((out, worst))
    }
}

/// `(N_m)_{np} = Σ_q S_{mq} S_{nq} conj(S_{pq}) / S_{0q}`.
pub fn verlinde_fusion(md: &ModularData, m: usize) -> Result<FusionMatrix> {
    if m >= md.len() {
        return Err(Error::InvalidArgument(format!("object index {m} out of range 0..{}", md.len())));
    }
    SmallS::new(md).fusion(m).map(|(f, _)| f)
}

/// All fusion matrices and the largest rounding residue seen.
pub fn verlinde_all(md: &ModularData) -> Result<(Vec<FusionMatrix>, f64)> {
    let small = SmallS::new(md);
    let mut worst: f64 = 0.0;
    let mut out = Vec::with_capacity(md.len());
    for m in 0..md.len() {
        let (f, r) = small.fusion(m)?;
        worst = worst.max(r);
        out.push(f);
    }
    Ok((out, worst))
}

/// `N_0 = I`, pairwise commutation, and `N_{C(m)} = N_mᵀ`.
pub fn check_fusion_ring(mats: &[FusionMatrix], charge: &[usize]) -> Result<()> {
    let n = mats.len();
    if mats[0] != FusionMatrix::identity(n) {
        return Err(Error::Consistency("N_0 is not the identity".into()));
    }
    for (m, nm) in mats.iter().enumerate() {
        if mats[charge[m]] != nm.transpose() {
            return Err(Error::Consistency(format!("N_C({m}) differs from N_{m} transposed")));
        }
    }
    for a in 1..n {
        for b in (a + 1)..n {
            if mats[a].mul(&mats[b]) != mats[b].mul(&mats[a]) {
                return Err(Error::Consistency(format!("N_{a} and N_{b} do not commute")));
            }
        }
    }
    Ok(())
}
