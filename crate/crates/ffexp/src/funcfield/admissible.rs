use serde::{Deserialize, Serialize};

use super::modulus::{monic_irreducibles, Modulus};
use super::poly::{prime_factors, Poly};

/// Parameters of the admissible family `S_{r0,c0}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AdmissibleSpec {
    pub r0: Poly,
    pub c0: u64,
    pub max_total_degree: usize,
}

impl AdmissibleSpec {
    pub fn new(r0: Poly, c0: u64, max_total_degree: usize) -> Self {
        assert!(!r0.is_zero(), "r0 must be nonzero");
        AdmissibleSpec { r0, c0, max_total_degree }
    }
}

/// Reason a modulus fails admissibility; conditions are checked in the order
/// (1) coprime to r0, (2) factor degrees > 1, (3) degrees pairwise distinct,
/// (4) no prime divisor of a factor degree below c0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum AdmissibleViolation {
    DividesR0 { factor: String },
    DegreeOne { factor: String },
    RepeatedDegree { degree: usize },
    SmallPrimeInDegree { degree: usize, prime: u64 },
}

/// Checks whether `f` lies in `S_{r0,c0}` (ignoring the degree cap, which
/// only bounds enumeration).
pub fn is_admissible(m: &Modulus, spec: &AdmissibleSpec) -> Result<(), AdmissibleViolation> {
    for l in m.factors() {
        if l.divides(&spec.r0) {
            return Err(AdmissibleViolation::DividesR0 { factor: l.to_string() });
        }
    }
    for l in m.factors() {
        if l.deg() <= 1 {
            return Err(AdmissibleViolation::DegreeOne { factor: l.to_string() });
        }
    }
    let mut degs = m.factor_degrees();
    degs.sort_unstable();
    for w in degs.windows(2) {
        if w[0] == w[1] {
            return Err(AdmissibleViolation::RepeatedDegree { degree: w[0] });
        }
    }
    for l in m.factors() {
        for r in prime_factors(l.deg() as u64) {
            if r < spec.c0 {
                return Err(AdmissibleViolation::SmallPrimeInDegree { degree: l.deg(), prime: r });
            }
        }
    }
    Ok(())
}

/// Enumerates every `f` in `S_{r0,c0}` with `deg f <= max_total_degree`, in
/// (degree, coefficient-lexicographic) order. Deterministic.
pub fn enumerate_admissible(spec: &AdmissibleSpec) -> Vec<Modulus> {
    let p = spec.r0.p();
    let max = spec.max_total_degree;

    // Degrees usable by any factor: > 1, all prime divisors >= c0.
    let mut degree_pool: Vec<usize> = Vec::new();
    for d in 2..=max {
        if prime_factors(d as u64).iter().all(|&r| r >= spec.c0) {
            degree_pool.push(d);
        }
    }
    let per_degree: Vec<(usize, Vec<Poly>)> = degree_pool
        .iter()
        .map(|&d| {
            let ls: Vec<Poly> = monic_irreducibles(p, d)
                .into_iter()
                .filter(|l| !l.divides(&spec.r0))
                .collect();
            (d, ls)
        })
        .collect();

    // Subsets of pairwise distinct degrees with total degree within the cap.
    let mut out: Vec<Modulus> = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    collect_degree_subsets(&per_degree, 0, 0, max, &mut chosen, &mut |subset| {
        let mut picks: Vec<usize> = vec![0; subset.len()];
        loop {
            let factors: Vec<Poly> = subset
                .iter()
                .zip(&picks)
                .map(|(&di, &k)| per_degree[di].1[k].clone())
                .collect();
            out.push(Modulus::from_factors(factors).expect("distinct irreducibles"));
            // Odometer over the factor choices.
            let mut i = subset.len();
            loop {
                if i == 0 {
                    return;
                }
                i -= 1;
                picks[i] += 1;
                if picks[i] < per_degree[subset[i]].1.len() {
                    break;
                }
                picks[i] = 0;
            }
        }
    });

    out.sort_by_key(|m| (m.deg(), m.f().coeffs().to_vec()));
    out
}

fn collect_degree_subsets(
    per_degree: &[(usize, Vec<Poly>)],
    start: usize,
    total: usize,
    max: usize,
    chosen: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    if !chosen.is_empty() {
        emit(chosen);
    }
    for i in start..per_degree.len() {
        let (d, ls) = &per_degree[i];
        if total + d > max || ls.is_empty() {
            continue;
        }
        chosen.push(i);
        collect_degree_subsets(per_degree, i + 1, total + d, max, chosen, emit);
        chosen.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::funcfield::count_irreducibles;

    fn spec(c0: u64, max: usize) -> AdmissibleSpec {
        AdmissibleSpec::new(Poly::t(7), c0, max)
    }

    #[test]
    fn degree_five_irreducibles_are_admissible() {
        // p=7, r0=t, c0=5, max_deg=5: exactly the monic irreducible quintics
        // (none is divisible by t, since t itself has degree 1).
        let ms = enumerate_admissible(&spec(5, 5));
        assert_eq!(ms.len() as u128, count_irreducibles(7, 5));
        assert!(ms.iter().all(|m| m.factors().len() == 1 && m.deg() == 5));
    }

    #[test]
    fn max_degree_one_is_empty() {
        assert!(enumerate_admissible(&spec(5, 1)).is_empty());
    }

    #[test]
    fn low_c0_allows_degrees_two_and_three() {
        // c0=2, max 3: single factors of degree 2 or 3 only (2+3 > 3 rules
        // out two-factor products).
        let ms = enumerate_admissible(&spec(2, 3));
        let twos = ms.iter().filter(|m| m.deg() == 2).count() as u128;
        let threes = ms.iter().filter(|m| m.deg() == 3).count() as u128;
        assert_eq!(twos, count_irreducibles(7, 2));
        assert_eq!(threes, count_irreducibles(7, 3));
        assert_eq!(ms.len() as u128, twos + threes);
    }

    #[test]
    fn violations_report_first_failed_condition() {
        let sp = spec(5, 12);
        // Two factors of equal degree 5.
        let ls = monic_irreducibles(7, 5);
        let m = Modulus::from_factors(vec![ls[0].clone(), ls[1].clone()]).unwrap();
        assert_eq!(
            is_admissible(&m, &sp),
            Err(AdmissibleViolation::RepeatedDegree { degree: 5 })
        );
        // Degree 6 has prime factors 2 and 3 below c0 = 5.
        let l6 = &monic_irreducibles(7, 6)[0];
        let m6 = Modulus::from_irreducible(l6).unwrap();
        assert_eq!(
            is_admissible(&m6, &sp),
            Err(AdmissibleViolation::SmallPrimeInDegree { degree: 6, prime: 2 })
        );
        // A single degree-5 irreducible passes.
        let m5 = Modulus::from_irreducible(&ls[0]).unwrap();
        assert_eq!(is_admissible(&m5, &sp), Ok(()));
    }

    #[test]
    fn enumeration_matches_exhaustive_filter() {
        // c0=2, max 5 admits two-factor products (2+3); cross-check against
        // filtering every monic f of degree 1..=5.
        let sp = AdmissibleSpec::new(Poly::t(7), 2, 5);
        let mut listed: Vec<u64> = enumerate_admissible(&sp).iter().map(|m| m.f().encode()).collect();
        listed.sort_unstable();

        let mut filtered: Vec<u64> = Vec::new();
        for d in 1..=5u32 {
            for code in 0..7u64.pow(d) {
                let mut coeffs: Vec<u64> = Poly::decode(7, code).coeffs().to_vec();
                coeffs.resize(d as usize, 0);
                coeffs.push(1);
                let f = Poly::from_coeffs(7, &coeffs);
                if let Ok(m) = crate::funcfield::factor_squarefree(&f) {
                    if is_admissible(&m, &sp).is_ok() {
                        filtered.push(f.encode());
                    }
                }
            }
        }
        filtered.sort_unstable();
        assert_eq!(listed, filtered);
        assert!(!listed.is_empty());
    }
}
