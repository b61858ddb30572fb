use std::fmt;

use serde::{Deserialize, Serialize};

use super::poly::Poly;
use super::valuation::{v_norm, QPow, Valuation};
use super::FuncFieldError;

/// A rational function `num/den` over `F_p`, kept reduced with monic
/// denominator, so equality and hashing are structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<RatFunc, FuncFieldError> {
        if den.is_zero() {
            return Err(FuncFieldError::DivisionByZero);
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() || num.is_zero() {
            if num.is_zero() {
                (num, Poly::one(den.p()))
            } else {
                (num, den)
            }
        } else {
            (num.divmod(&g)?.0, den.divmod(&g)?.0)
        };
        // Monic denominator; fold the leading unit into the numerator.
        let lc = den.leading_coeff();
        if lc == 1 {
            Ok(RatFunc { num, den })
        } else {
            let inv = super::poly::mod_inverse(lc, den.p());
            Ok(RatFunc { num: num.scale(inv), den: den.scale(inv) })
        }
    }

    pub fn from_poly(num: Poly) -> RatFunc {
        let p = num.p();
        RatFunc { num, den: Poly::one(p) }
    }

    pub fn constant(p: u64, c: u64) -> RatFunc {
        RatFunc::from_poly(Poly::constant(p, c))
    }

    pub fn zero(p: u64) -> RatFunc {
        RatFunc::from_poly(Poly::zero(p))
    }

    pub fn one(p: u64) -> RatFunc {
        RatFunc::from_poly(Poly::one(p))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn p(&self) -> u64 {
        self.num.p()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        RatFunc::new(num, self.den.mul(&other.den)).expect("nonzero denominators")
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        let num = self.num.mul(&other.den).sub(&other.num.mul(&self.den));
        RatFunc::new(num, self.den.mul(&other.den)).expect("nonzero denominators")
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        RatFunc::new(self.num.mul(&other.num), self.den.mul(&other.den))
            .expect("nonzero denominators")
    }

    pub fn inv(&self) -> Result<RatFunc, FuncFieldError> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn norm(&self, v: &Valuation) -> Result<QPow, FuncFieldError> {
        v_norm(v, &self.num, &self.den)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(out, "{}", self.num)
        } else {
            write!(out, "({})/({})", self.num, self.den)
        }
    }
}

/// A square matrix of rational functions, the working representation of
/// elements of `GL_n(F_p[t, 1/r0])`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RatMat {
    n: usize,
    entries: Vec<RatFunc>,
}

impl RatMat {
    pub fn new(n: usize, entries: Vec<RatFunc>) -> RatMat {
        assert_eq!(entries.len(), n * n);
        RatMat { n, entries }
    }

    /// 2x2 matrix from integer-coded polynomial entries.
    pub fn from_polys(entries: &[Poly]) -> RatMat {
        let n = (entries.len() as f64).sqrt() as usize;
        assert_eq!(n * n, entries.len());
        RatMat { n, entries: entries.iter().cloned().map(RatFunc::from_poly).collect() }
    }

    pub fn identity(p: u64, n: usize) -> RatMat {
        let mut entries = vec![RatFunc::zero(p); n * n];
        for i in 0..n {
            entries[i * n + i] = RatFunc::one(p);
        }
        RatMat { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> u64 {
        self.entries[0].p()
    }

    pub fn entry(&self, i: usize, j: usize) -> &RatFunc {
        &self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[RatFunc] {
        &self.entries
    }

    pub fn mul(&self, other: &RatMat) -> RatMat {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let p = self.p();
        let mut out = vec![RatFunc::zero(p); n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = RatFunc::zero(p);
                for k in 0..n {
                    acc = acc.add(&self.entry(i, k).mul(other.entry(k, j)));
                }
                out[i * n + j] = acc;
            }
        }
        RatMat { n, entries: out }
    }

    pub fn det(&self) -> RatFunc {
        match self.n {
            1 => self.entries[0].clone(),
            2 => self
                .entry(0, 0)
                .mul(self.entry(1, 1))
                .sub(&self.entry(0, 1).mul(self.entry(1, 0))),
            _ => {
                // Laplace expansion; matrices stay tiny here.
                let p = self.p();
                let mut acc = RatFunc::zero(p);
                for j in 0..self.n {
                    let m = self.minor(0, j);
                    let term = self.entry(0, j).mul(&m.det());
                    acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
                }
                acc
            }
        }
    }

    fn minor(&self, row: usize, col: usize) -> RatMat {
        let n = self.n;
        let mut entries = Vec::with_capacity((n - 1) * (n - 1));
        for i in 0..n {
            if i == row {
                continue;
            }
            for j in 0..n {
                if j == col {
                    continue;
                }
                entries.push(self.entry(i, j).clone());
            }
        }
        RatMat { n: n - 1, entries }
    }

    /// Inverse of a 2x2 matrix with unit determinant support.
    pub fn inv(&self) -> Result<RatMat, FuncFieldError> {
        let det = self.det();
        let det_inv = det.inv()?;
        match self.n {
            2 => {
                let entries = vec![
                    self.entry(1, 1).mul(&det_inv),
                    self.entry(0, 1).neg().mul(&det_inv),
                    self.entry(1, 0).neg().mul(&det_inv),
                    self.entry(0, 0).mul(&det_inv),
                ];
                Ok(RatMat { n: 2, entries })
            }
            _ => {
                let n = self.n;
                let mut entries = vec![RatFunc::zero(self.p()); n * n];
                for i in 0..n {
                    for j in 0..n {
                        let c = self.minor(j, i).det().mul(&det_inv);
                        entries[i * n + j] = if (i + j) % 2 == 0 { c } else { c.neg() };
                    }
                }
                Ok(RatMat { n, entries })
            }
        }
    }
}

/// `max_{i,j} max_{v in S} |h_ij|_v`, the matrix height over the places `S`.
///
/// Errors if some denominator has an irreducible factor at a finite place
/// outside `S` (heights are only meaningful when `S` supports all poles).
pub fn matrix_height(h: &RatMat, s: &[Valuation]) -> Result<QPow, FuncFieldError> {
    let q = h.p();
    let mut best = QPow::zero(q);
    for e in h.entries() {
        check_denominator_support(e.den(), s)?;
        for v in s {
            best = best.max(e.norm(v)?);
        }
    }
    Ok(best)
}

fn check_denominator_support(den: &Poly, s: &[Valuation]) -> Result<(), FuncFieldError> {
    let mut rest = den.monic();
    loop {
        if rest.is_constant() {
            return Ok(());
        }
        let mut progressed = false;
        for v in s {
            if let Valuation::Finite(l) = v {
                loop {
                    let (quot, rem) = rest.divmod(l).expect("irreducible divisor");
                    if rem.is_zero() {
                        rest = quot;
                        progressed = true;
                    } else {
                        break;
                    }
                }
            }
        }
        if !progressed {
            return Err(FuncFieldError::DenominatorOutsideSupport(den.to_string()));
        }
    }
}
