use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::poly::Poly;
use super::FuncFieldError;

/// A place of `F_p(t)`: either the finite place of an irreducible `l`, or the
/// place at infinity associated to `1/t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Valuation {
    Finite(Poly),
    Infinity,
}

impl Valuation {
    pub fn finite(l: Poly) -> Result<Self, FuncFieldError> {
        if !l.is_irreducible()? {
            return Err(FuncFieldError::NotSquareFree(l.to_string()));
        }
        Ok(Valuation::Finite(l.monic()))
    }

    /// `deg v = [K(v) : F_q]`: the degree of `l` at a finite place, 1 at
    /// infinity.
    pub fn deg(&self) -> usize {
        match self {
            Valuation::Finite(l) => l.deg(),
            Valuation::Infinity => 1,
        }
    }
}

/// Value of a valuation: an integer or `+infinity` (exactly when `r = 0`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Val {
    Finite(i64),
    PlusInfinity,
}

/// `v(num/den)`.
///
/// At a finite place this is the exact power of `l` dividing `num` minus the
/// power dividing `den`; at infinity it is `deg den - deg num`.
pub fn valuation_of(v: &Valuation, num: &Poly, den: &Poly) -> Result<Val, FuncFieldError> {
    if den.is_zero() {
        return Err(FuncFieldError::DivisionByZero);
    }
    if num.is_zero() {
        return Ok(Val::PlusInfinity);
    }
    match v {
        Valuation::Infinity => Ok(Val::Finite(den.deg() as i64 - num.deg() as i64)),
        Valuation::Finite(l) => {
            Ok(Val::Finite(exact_power(num, l) as i64 - exact_power(den, l) as i64))
        }
    }
}

fn exact_power(g: &Poly, l: &Poly) -> u32 {
    let mut g = g.clone();
    let mut m = 0;
    loop {
        let (q, r) = g.divmod(l).expect("irreducible divisor");
        if !r.is_zero() {
            return m;
        }
        g = q;
        m += 1;
    }
}

/// A `v`-adic norm stored in log space as an exact power of `q`:
/// `value = q^exp`, with `exp = None` for the norm of zero.
///
/// All norms of nonzero rational functions are integer powers of `q`
/// (`|r|_{v_l} = N(l)^{-v(r)} = q^{-v(r) deg l}`), so comparisons are exact
/// integer comparisons and only `value()`/`ln()` ever touch floats.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QPow {
    pub q: u64,
    pub exp: Option<i64>,
}

impl QPow {
    pub fn zero(q: u64) -> Self {
        QPow { q, exp: None }
    }

    pub fn one(q: u64) -> Self {
        QPow { q, exp: Some(0) }
    }

    pub fn value(&self) -> f64 {
        match self.exp {
            None => 0.0,
            Some(e) => (self.q as f64).powi(e as i32),
        }
    }

    /// Natural log of the norm; `-inf` for the zero norm.
    pub fn ln(&self) -> f64 {
        match self.exp {
            None => f64::NEG_INFINITY,
            Some(e) => e as f64 * (self.q as f64).ln(),
        }
    }

    pub fn max(self, other: QPow) -> QPow {
        if self >= other {
            self
        } else {
            other
        }
    }

    pub fn mul(self, other: QPow) -> QPow {
        debug_assert_eq!(self.q, other.q);
        match (self.exp, other.exp) {
            (Some(a), Some(b)) => QPow { q: self.q, exp: Some(a + b) },
            _ => QPow::zero(self.q),
        }
    }
}

impl PartialOrd for QPow {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QPow {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.q, other.q);
        match (self.exp, other.exp) {
            (None, None) => Ordering::Equal,
            (None, Some(_)) => Ordering::Less,
            (Some(_), None) => Ordering::Greater,
            (Some(a), Some(b)) => a.cmp(&b),
        }
    }
}

/// `|num/den|_v = N(l)^{-v(r)}` at finite places, `q^{-v(r)}` at infinity.
pub fn v_norm(v: &Valuation, num: &Poly, den: &Poly) -> Result<QPow, FuncFieldError> {
    let q = num.p();
    match valuation_of(v, num, den)? {
        Val::PlusInfinity => Ok(QPow::zero(q)),
        Val::Finite(val) => Ok(QPow { q, exp: Some(-val * v.deg() as i64) }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v_t() -> Valuation {
        Valuation::finite(Poly::t(7)).unwrap()
    }

    #[test]
    fn monomial_valuation() {
        // v_t(t^3 / (t-1)) = 3
        let num = Poly::from_coeffs(7, &[0, 0, 0, 1]);
        let den = Poly::from_coeffs(7, &[6, 1]);
        assert_eq!(valuation_of(&v_t(), &num, &den).unwrap(), Val::Finite(3));
    }

    #[test]
    fn infinity_is_degree_difference() {
        // v_inf((t^2+1)/t^5) = 5 - 2 = 3
        let num = Poly::from_coeffs(7, &[1, 0, 1]);
        let den = Poly::from_coeffs(7, &[0, 0, 0, 0, 0, 1]);
        assert_eq!(valuation_of(&Valuation::Infinity, &num, &den).unwrap(), Val::Finite(3));
    }

    #[test]
    fn zero_has_infinite_valuation() {
        let zero = Poly::zero(7);
        let one = Poly::one(7);
        assert_eq!(valuation_of(&v_t(), &zero, &one).unwrap(), Val::PlusInfinity);
    }

    #[test]
    fn norm_values() {
        let one = Poly::one(7);
        let t3 = Poly::from_coeffs(7, &[0, 0, 0, 1]);
        // |t^3|_{v_t} = 7^{-3}
        assert_eq!(v_norm(&v_t(), &t3, &one).unwrap(), QPow { q: 7, exp: Some(-3) });
        // |1|_v = 1 for any v
        assert_eq!(v_norm(&v_t(), &one, &one).unwrap(), QPow::one(7));
        assert_eq!(v_norm(&Valuation::Infinity, &one, &one).unwrap(), QPow::one(7));
        // |1/t|_{v_t} = 7
        let t = Poly::t(7);
        assert_eq!(v_norm(&v_t(), &one, &t).unwrap(), QPow { q: 7, exp: Some(1) });
    }

    #[test]
    fn product_formula() {
        // For nonzero f: sum over all places of v(f) deg v = 0, equivalently
        // log_q N(f) = deg f = sum over finite places.
        for code in 1..7u64.pow(4) {
            let f = Poly::decode(7, code);
            if f.is_constant() {
                continue;
            }
            let one = Poly::one(7);
            let mut total = 0i64;
            for d in 1..=f.deg() {
                for l in super::super::monic_irreducibles(7, d) {
                    if let Val::Finite(v) = valuation_of(&Valuation::Finite(l.clone()), &f, &one).unwrap() {
                        total += v * l.deg() as i64;
                    }
                }
            }
            assert_eq!(total, f.deg() as i64, "f = {f}");
            if let Val::Finite(vinf) = valuation_of(&Valuation::Infinity, &f, &one).unwrap() {
                assert_eq!(total + vinf, 0);
            }
        }
    }
}
