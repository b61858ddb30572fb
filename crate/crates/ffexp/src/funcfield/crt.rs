use super::modulus::Modulus;
use super::poly::Poly;
use super::FuncFieldError;

/// Splits a residue mod `f` into residues mod each irreducible factor.
///
/// This is the ring isomorphism `F_p[t]/<f> ~ (+)_i F_p[t]/<l_i>` given by
/// the Chinese Remainder Theorem; `crt_combine` inverts it.
pub fn crt_split(x: &Poly, m: &Modulus) -> Result<Vec<Poly>, FuncFieldError> {
    if x.degree().map_or(false, |d| d >= m.deg()) {
        return Err(FuncFieldError::ResidueTooLarge(x.deg(), m.deg()));
    }
    m.factors().iter().map(|l| x.rem(l)).collect()
}

/// Reassembles a residue mod `f` from residues mod the factors.
pub fn crt_combine(parts: &[Poly], m: &Modulus) -> Result<Poly, FuncFieldError> {
    assert_eq!(parts.len(), m.factors().len(), "one residue per factor");
    let p = m.p();
    let mut acc = Poly::zero(p);
    for (part, l) in parts.iter().zip(m.factors()) {
        if part.degree().map_or(false, |d| d >= l.deg()) {
            return Err(FuncFieldError::ResidueTooLarge(part.deg(), l.deg()));
        }
        // e = (f/l) * ((f/l)^{-1} mod l) is 1 mod l and 0 mod other factors.
        let cofactor = m.f().divmod(l)?.0;
        let (g, s, _) = cofactor.extended_gcd(l);
        debug_assert!(g.is_one(), "factors are pairwise coprime");
        let e = cofactor.mul(&s).rem(m.f())?;
        acc = acc.add(&part.mul(&e).rem(m.f())?);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::funcfield::factor_squarefree;

    fn two_linear_factors() -> Modulus {
        // (t-1)(t-2) over F_7
        let f = Poly::from_coeffs(7, &[2, 4, 1]);
        factor_squarefree(&f).unwrap()
    }

    #[test]
    fn split_is_evaluation_at_roots() {
        let m = two_linear_factors();
        let t = Poly::t(7);
        let parts = crt_split(&t, &m).unwrap();
        // Splitting mod a linear factor t - r evaluates at the root r.
        for (part, l) in parts.iter().zip(m.factors()) {
            let root = (7 - l.coeff(0)) % 7;
            assert_eq!(part, &Poly::constant(7, root));
        }
        let roots: Vec<u64> = parts.iter().map(|p| p.coeff(0)).collect();
        assert_eq!({ let mut r = roots.clone(); r.sort_unstable(); r }, vec![1, 2]);
    }

    #[test]
    fn unit_maps_to_units() {
        let m = two_linear_factors();
        let one = Poly::one(7);
        assert_eq!(crt_split(&one, &m).unwrap(), vec![one.clone(), one]);
    }

    #[test]
    fn exhaustive_roundtrip_and_homomorphism() {
        let m = two_linear_factors();
        let all: Vec<Poly> = (0..49).map(|c| Poly::decode(7, c)).collect();
        for x in &all {
            let back = crt_combine(&crt_split(x, &m).unwrap(), &m).unwrap();
            assert_eq!(&back, x);
        }
        for x in &all {
            for y in &all {
                let xy = x.mul(y).rem(m.f()).unwrap();
                let lhs = crt_split(&xy, &m).unwrap();
                // Componentwise product mod each factor.
                let rhs: Vec<Poly> = m
                    .factors()
                    .iter()
                    .zip(crt_split(x, &m).unwrap().iter().zip(crt_split(y, &m).unwrap()))
                    .map(|(l, (a, b))| a.mul(&b).rem(l).unwrap())
                    .collect();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn oversized_residue_rejected() {
        let m = two_linear_factors();
        let big = Poly::from_coeffs(7, &[0, 0, 1]);
        assert!(matches!(crt_split(&big, &m), Err(FuncFieldError::ResidueTooLarge(2, 2))));
    }
}
