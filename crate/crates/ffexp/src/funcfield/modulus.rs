use serde::{Deserialize, Serialize};

use super::poly::{pow_u128, Poly};
use super::FuncFieldError;

/// A monic square-free modulus `f` with its cached irreducible factorization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Modulus {
    f: Poly,
    factors: Vec<Poly>,
}

impl Modulus {
    pub fn f(&self) -> &Poly {
        &self.f
    }

    pub fn p(&self) -> u64 {
        self.f.p()
    }

    pub fn deg(&self) -> usize {
        self.f.deg()
    }

    /// Irreducible factors, sorted by (degree, encoding).
    pub fn factors(&self) -> &[Poly] {
        &self.factors
    }

    pub fn factor_degrees(&self) -> Vec<usize> {
        self.factors.iter().map(|l| l.deg()).collect()
    }

    /// Residue-field sizes `N(l_i) = p^(deg l_i)`.
    pub fn residue_sizes(&self) -> Vec<u64> {
        self.factors
            .iter()
            .map(|l| self.p().pow(l.deg() as u32))
            .collect()
    }

    /// `N(f) = p^(deg f)`.
    pub fn n(&self) -> u128 {
        pow_u128(self.p(), self.deg() as u32)
    }

    /// Builds a modulus from a single irreducible polynomial.
    pub fn from_irreducible(l: &Poly) -> Result<Modulus, FuncFieldError> {
        if !l.is_irreducible()? {
            return Err(FuncFieldError::NotSquareFree(l.to_string()));
        }
        let m = l.monic();
        Ok(Modulus { f: m.clone(), factors: vec![m] })
    }

    /// Builds a modulus from pairwise distinct irreducible factors.
    pub fn from_factors(factors: Vec<Poly>) -> Result<Modulus, FuncFieldError> {
        let mut fs: Vec<Poly> = factors.iter().map(|l| l.monic()).collect();
        fs.sort_by_key(|l| (l.deg(), l.encode()));
        for w in fs.windows(2) {
            if w[0] == w[1] {
                return Err(FuncFieldError::NotSquareFree(w[0].to_string()));
            }
        }
        let p = fs[0].p();
        let mut f = Poly::one(p);
        for l in &fs {
            if !l.is_irreducible()? {
                return Err(FuncFieldError::NotSquareFree(l.to_string()));
            }
            f = f.mul(l);
        }
        Ok(Modulus { f, factors: fs })
    }
}

/// Factors a monic square-free polynomial into distinct irreducibles.
///
/// Square-freeness is detected up front via `gcd(f, f') = 1`; deterministic
/// trial division by monic irreducibles of increasing degree does the rest.
pub fn factor_squarefree(f: &Poly) -> Result<Modulus, FuncFieldError> {
    if f.is_zero() {
        return Err(FuncFieldError::ZeroModulus);
    }
    let g = f.gcd(&f.derivative());
    if !g.is_one() {
        return Err(FuncFieldError::NotSquareFree(g.to_string()));
    }
    let factors = factor(f)?.into_iter().map(|(l, _)| l).collect();
    Ok(Modulus { f: f.monic(), factors })
}

/// Full factorization `(l_i, multiplicity)` by deterministic trial division.
pub fn factor(f: &Poly) -> Result<Vec<(Poly, usize)>, FuncFieldError> {
    if f.is_zero() {
        return Err(FuncFieldError::ZeroModulus);
    }
    let p = f.p();
    let mut rest = f.monic();
    let mut out: Vec<(Poly, usize)> = Vec::new();
    let mut d = 1usize;
    while rest.deg() >= 2 * d {
        if pow_u128(p, d as u32) > 1_000_000 {
            return Err(FuncFieldError::FactorBudget(d));
        }
        for l in monic_irreducibles(p, d) {
            let mut mult = 0;
            loop {
                let (q, r) = rest.divmod(&l)?;
                if !r.is_zero() {
                    break;
                }
                rest = q;
                mult += 1;
            }
            if mult > 0 {
                out.push((l, mult));
            }
            if rest.deg() < 2 * d {
                break;
            }
        }
        d += 1;
    }
    if !rest.is_constant() {
        out.push((rest, 1));
    }
    out.sort_by_key(|(l, _)| (l.deg(), l.encode()));
    Ok(out)
}

/// All monic irreducibles of degree `d` over `F_p`, in encoding order.
pub fn monic_irreducibles(p: u64, d: usize) -> Vec<Poly> {
    let mut out = Vec::new();
    for code in 0..p.pow(d as u32) {
        let mut coeffs: Vec<u64> = Poly::decode(p, code).coeffs().to_vec();
        coeffs.resize(d, 0);
        coeffs.push(1);
        let f = Poly::from_coeffs(p, &coeffs);
        if f.is_irreducible().expect("degree >= 1") {
            out.push(f);
        }
    }
    out
}

/// Number of monic irreducibles of degree `d` over `F_p`:
/// `(1/d) * sum_{e | d} mu(d/e) p^e`.
pub fn count_irreducibles(p: u64, d: usize) -> u128 {
    assert!(d >= 1);
    let mut total: i128 = 0;
    for e in 1..=d {
        if d % e == 0 {
            total += moebius((d / e) as u64) as i128 * pow_u128(p, e as u32) as i128;
        }
    }
    (total / d as i128) as u128
}

fn moebius(n: u64) -> i64 {
    let mut m = n;
    let mut k = 0;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            m /= d;
            if m % d == 0 {
                return 0;
            }
            k += 1;
        }
        d += 1;
    }
    if m > 1 {
        k += 1;
    }
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_small_cases() {
        assert_eq!(count_irreducibles(2, 3), 2);
        assert_eq!(count_irreducibles(7, 1), 7);
        assert_eq!(count_irreducibles(7, 2), 21);
        assert_eq!(count_irreducibles(11, 1), 11);
    }

    #[test]
    fn counts_match_enumeration() {
        for p in [2u64, 7] {
            for d in 1..=4usize {
                assert_eq!(monic_irreducibles(p, d).len() as u128, count_irreducibles(p, d));
            }
        }
    }

    #[test]
    fn factor_squarefree_product() {
        // (t^2+1)(t-1) over F_7
        let a = Poly::from_coeffs(7, &[1, 0, 1]);
        let b = Poly::from_coeffs(7, &[6, 1]);
        let m = factor_squarefree(&a.mul(&b)).unwrap();
        assert_eq!(m.factors(), &[b.clone(), a.clone()]);
        // Product of factors reconstructs f.
        let prod = m.factors().iter().fold(Poly::one(7), |acc, l| acc.mul(l));
        assert_eq!(&prod, m.f());
    }

    #[test]
    fn single_irreducible_factor() {
        let l = Poly::from_coeffs(7, &[1, 0, 1]);
        let m = factor_squarefree(&l).unwrap();
        assert_eq!(m.factors(), &[l]);
    }

    #[test]
    fn repeated_factor_rejected() {
        // t^2 is not square-free
        let f = Poly::from_coeffs(7, &[0, 0, 1]);
        assert!(matches!(factor_squarefree(&f), Err(FuncFieldError::NotSquareFree(_))));
    }

    #[test]
    fn full_factor_handles_multiplicity() {
        // t^2 (t+1)^3 over F_7
        let t = Poly::t(7);
        let t1 = Poly::from_coeffs(7, &[1, 1]);
        let f = t.mul(&t).mul(&t1).mul(&t1).mul(&t1);
        let fs = factor(&f).unwrap();
        assert_eq!(fs, vec![(t, 2), (t1, 3)]);
    }
}
