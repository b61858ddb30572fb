use std::fmt;

use serde::{Deserialize, Serialize};

use super::FuncFieldError;

/// Base-field parameters: the prime `p` and the field size `q0` (a power of
/// `p`, equal to `p` unless stated otherwise).
///
/// The arithmetic layer is hypothesis-free; experiment drivers call
/// [`FieldParams::hypothesis_flags`] to surface the `p > 5`, `q0 > 7`
/// assumptions without rejecting small cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldParams {
    pub p: u64,
    pub q0: u64,
}

impl FieldParams {
    pub fn new(p: u64) -> Self {
        assert!(is_prime(p), "{p} is not prime");
        FieldParams { p, q0: p }
    }

    /// Flags (without rejecting) violations of the running hypotheses.
    pub fn hypothesis_flags(&self) -> Vec<String> {
        let mut flags = Vec::new();
        if self.p <= 5 {
            flags.push(format!("p = {} violates the hypothesis p > 5", self.p));
        }
        if self.q0 <= 7 {
            flags.push(format!("q0 = {} violates the hypothesis q0 > 7", self.q0));
        }
        flags
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense polynomial over `F_p`, coefficients lowest degree first.
///
/// Invariants: all coefficients lie in `[0, p)` and the top coefficient is
/// nonzero. The zero polynomial has an empty coefficient vector and its
/// degree is the distinct sentinel `None` (never `-1`), so arithmetic on the
/// degree of zero cannot happen silently.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Poly {
    p: u64,
    coeffs: Vec<u64>,
}

impl Poly {
    pub fn from_coeffs(p: u64, coeffs: &[u64]) -> Self {
        let mut c: Vec<u64> = coeffs.iter().map(|&x| x % p).collect();
        while c.last() == Some(&0) {
            c.pop();
        }
        Poly { p, coeffs: c }
    }

    pub fn zero(p: u64) -> Self {
        Poly { p, coeffs: Vec::new() }
    }

    pub fn one(p: u64) -> Self {
        Poly::constant(p, 1)
    }

    pub fn constant(p: u64, c: u64) -> Self {
        Poly::from_coeffs(p, &[c])
    }

    /// The monomial `t`.
    pub fn t(p: u64) -> Self {
        Poly::from_coeffs(p, &[0, 1])
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, with `None` as the sentinel for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree of a polynomial known to be nonzero.
    pub fn deg(&self) -> usize {
        self.degree().expect("degree of the zero polynomial")
    }

    pub fn leading_coeff(&self) -> u64 {
        *self.coeffs.last().expect("leading coefficient of zero")
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    fn check_field(&self, other: &Poly) -> Result<(), FuncFieldError> {
        if self.p != other.p {
            return Err(FuncFieldError::FieldMismatch(self.p, other.p));
        }
        Ok(())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.check_field(other).expect("field mismatch");
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut c = vec![0u64; n];
        for (i, slot) in c.iter_mut().enumerate() {
            *slot = (self.coeff(i) + other.coeff(i)) % self.p;
        }
        Poly::from_coeffs(self.p, &c)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.check_field(other).expect("field mismatch");
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut c = vec![0u64; n];
        for (i, slot) in c.iter_mut().enumerate() {
            *slot = (self.p + self.coeff(i) - other.coeff(i)) % self.p;
        }
        Poly::from_coeffs(self.p, &c)
    }

    pub fn neg(&self) -> Poly {
        Poly::zero(self.p).sub(self)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.check_field(other).expect("field mismatch");
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.p);
        }
        let mut c = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] = (c[i + j] + a * b) % self.p;
            }
        }
        Poly::from_coeffs(self.p, &c)
    }

    pub fn scale(&self, k: u64) -> Poly {
        let c: Vec<u64> = self.coeffs.iter().map(|&a| a * (k % self.p) % self.p).collect();
        Poly::from_coeffs(self.p, &c)
    }

    /// Euclidean division: returns `(q, r)` with `self = q*b + r` and
    /// `deg r < deg b`.
    pub fn divmod(&self, b: &Poly) -> Result<(Poly, Poly), FuncFieldError> {
        self.check_field(b)?;
        if b.is_zero() {
            return Err(FuncFieldError::DivisionByZero);
        }
        let p = self.p;
        let db = b.deg();
        if self.coeffs.len() <= db {
            return Ok((Poly::zero(p), self.clone()));
        }
        let inv_lead = mod_inverse(b.leading_coeff(), p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; self.coeffs.len() - db];
        for k in (0..quot.len()).rev() {
            let c = rem[k + db] * inv_lead % p;
            if c == 0 {
                continue;
            }
            quot[k] = c;
            for (j, &bc) in b.coeffs.iter().enumerate() {
                rem[k + j] = (rem[k + j] + p - c * bc % p) % p;
            }
        }
        rem.truncate(db);
        Ok((Poly::from_coeffs(p, &quot), Poly::from_coeffs(p, &rem)))
    }

    pub fn rem(&self, b: &Poly) -> Result<Poly, FuncFieldError> {
        Ok(self.divmod(b)?.1)
    }

    pub fn divides(&self, other: &Poly) -> bool {
        match other.divmod(self) {
            Ok((_, r)) => r.is_zero(),
            Err(_) => false,
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns `(g, s, t)` monic with `g = s*self + t*other`.
    pub fn extended_gcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(p), Poly::zero(p));
        let (mut t0, mut t1) = (Poly::zero(p), Poly::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1).expect("nonzero divisor");
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let lc_inv = mod_inverse(r0.leading_coeff(), p);
        (r0.scale(lc_inv), s0.scale(lc_inv), t0.scale(lc_inv))
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        self.scale(mod_inverse(self.leading_coeff(), self.p))
    }

    /// `self^e mod m` by square and multiply.
    pub fn powmod(&self, mut e: u128, m: &Poly) -> Result<Poly, FuncFieldError> {
        if m.is_zero() {
            return Err(FuncFieldError::DivisionByZero);
        }
        let mut base = self.rem(m)?;
        let mut acc = Poly::one(self.p).rem(m)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m)?;
            }
            base = base.mul(&base).rem(m)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero(self.p);
        }
        let c: Vec<u64> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| (i as u64 % self.p) * a % self.p)
            .collect();
        Poly::from_coeffs(self.p, &c)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let x = x % self.p;
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = (acc * x + c) % self.p;
        }
        acc
    }

    /// Deterministic Rabin irreducibility test: `t^(p^d) = t mod f` together
    /// with coprimality at every maximal proper divisor degree `d/r`.
    pub fn is_irreducible(&self) -> Result<bool, FuncFieldError> {
        if self.is_constant() {
            return Err(FuncFieldError::ConstantInput);
        }
        let d = self.deg();
        if d == 1 {
            return Ok(true);
        }
        let p = self.p;
        let t = Poly::t(p);
        let frob = t.powmod(pow_u128(p, d as u32), self)?;
        if frob != t.rem(self)? {
            return Ok(false);
        }
        for r in prime_factors(d as u64) {
            let e = d / r as usize;
            let tr = t.powmod(pow_u128(p, e as u32), self)?;
            let g = tr.sub(&t.rem(self)?).gcd(self);
            if !g.is_constant() || g.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Encodes coefficients into the integer `sum c_i p^i` (for table-driven
    /// quotient rings and exhaustive enumerations).
    pub fn encode(&self) -> u64 {
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = acc * self.p + c;
        }
        acc
    }

    pub fn decode(p: u64, mut code: u64) -> Poly {
        let mut c = Vec::new();
        while code > 0 {
            c.push(code % p);
            code /= p;
        }
        Poly::from_coeffs(p, &c)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(out, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(out, "+")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(out, "{c}")?,
                (1, 1) => write!(out, "t")?,
                (1, _) => write!(out, "{c}*t")?,
                (_, 1) => write!(out, "t^{i}")?,
                _ => write!(out, "{c}*t^{i}")?,
            }
        }
        Ok(())
    }
}

pub(crate) fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat; p prime and a nonzero mod p.
    let a = a % p;
    assert!(a != 0, "inverse of zero mod {p}");
    mod_pow(a, p - 2, p)
}

pub(crate) fn mod_pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    acc
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn pow_u128(b: u64, e: u32) -> u128 {
    (b as u128).pow(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schoolbook_product() {
        // (t+1)(t+2) = t^2 + 3t + 2 over F_7
        let a = Poly::from_coeffs(7, &[1, 1]);
        let b = Poly::from_coeffs(7, &[2, 1]);
        assert_eq!(a.mul(&b), Poly::from_coeffs(7, &[2, 3, 1]));
    }

    #[test]
    fn gcd_common_factor() {
        // gcd(t^2 - 1, t - 1) = t - 1 over F_7, monic-normalized
        let a = Poly::from_coeffs(7, &[6, 0, 1]);
        let b = Poly::from_coeffs(7, &[6, 1]);
        assert_eq!(a.gcd(&b), b.monic());
    }

    #[test]
    fn self_reduction_is_zero() {
        let f = Poly::from_coeffs(7, &[1, 0, 1]);
        assert!(f.rem(&f).unwrap().is_zero());
    }

    #[test]
    fn divmod_invariant() {
        let a = Poly::from_coeffs(7, &[3, 1, 4, 1, 5]);
        let b = Poly::from_coeffs(7, &[2, 6, 1]);
        let (q, r) = a.divmod(&b).unwrap();
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().map_or(true, |d| d < b.deg()));
    }

    #[test]
    fn division_by_zero_rejected() {
        let a = Poly::from_coeffs(7, &[1, 1]);
        assert_eq!(a.divmod(&Poly::zero(7)), Err(FuncFieldError::DivisionByZero));
    }

    #[test]
    fn irreducibility_degree_two() {
        // t^2 + 1 over F_7: -1 is a non-residue mod 7, so no roots
        let f = Poly::from_coeffs(7, &[1, 0, 1]);
        assert!(f.is_irreducible().unwrap());
        // t^2 - 1 = (t-1)(t+1)
        let g = Poly::from_coeffs(7, &[6, 0, 1]);
        assert!(!g.is_irreducible().unwrap());
    }

    #[test]
    fn irreducibility_matches_root_search_for_low_degree() {
        // Oracle: a monic polynomial of degree 2 or 3 is reducible iff it has
        // a root, i.e. a monic linear trial divisor.
        let p = 7u64;
        for d in 2..=3u32 {
            for code in 0..p.pow(d) {
                let mut coeffs: Vec<u64> = Poly::decode(p, code).coeffs().to_vec();
                coeffs.resize(d as usize, 0);
                coeffs.push(1);
                let f = Poly::from_coeffs(p, &coeffs);
                let has_root = (0..p).any(|x| f.eval(x) == 0);
                assert_eq!(f.is_irreducible().unwrap(), !has_root, "f = {f}");
            }
        }
    }

    #[test]
    fn zero_poly_degree_sentinel() {
        assert_eq!(Poly::zero(7).degree(), None);
        assert_eq!(Poly::one(7).degree(), Some(0));
    }

    #[test]
    fn encode_decode_roundtrip() {
        for code in 0..2401 {
            assert_eq!(Poly::decode(7, code).encode(), code);
        }
    }
}
