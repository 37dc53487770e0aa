//! Necessary-condition predicates, breadth-first closure of the seed
//! covers under the transformation rules, threshold formulas, and the
//! inertia-group realizability sweep.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, BTreeMap};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive};
use thiserror::Error;

use super::{
    isub, pullback, raw_cover, seed_ujgcd2, seed_ujm, sigma_plus, Certificate, CoverDatum,
    CoverError, SeedId,
};
use crate::algebra::is_odd_prime;

/// Target family of a realizability question about upper jumps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JumpFamily {
    /// Covers with group A_p.
    Ap,
    /// Covers with group A_(p+s), s >= 1.
    Aps { s: u64 },
}

impl JumpFamily {
    pub fn degree(&self, p: u64) -> u64 {
        match *self {
            JumpFamily::Ap => p,
            JumpFamily::Aps { s } => p + s,
        }
    }

    /// Admissible denominators divide this bound: (p−1)/2 when the
    /// centralizer of a p-cycle is trivial (A_p and A_(p+1)), p−1 otherwise.
    fn denominator_bound(&self, p: u64) -> u64 {
        match *self {
            JumpFamily::Ap | JumpFamily::Aps { s: 1 } => (p - 1) / 2,
            JumpFamily::Aps { .. } => p - 1,
        }
    }

    pub fn label(&self, p: u64) -> String {
        format!("A_{}", self.degree(p))
    }
}

/// A candidate upper jump σ = h'/m'' in lowest terms for a given family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct JumpQuery {
    pub p: u64,
    pub family: JumpFamily,
    pub sigma: Ratio<i64>,
}

impl JumpQuery {
    pub fn new(p: u64, family: JumpFamily, sigma: Ratio<i64>) -> Result<Self, CoverError> {
        if !is_odd_prime(p) || p < 5 {
            return Err(CoverError::BadParameters(format!("p = {p} must be an odd prime >= 5")));
        }
        if sigma <= Ratio::from_integer(0) {
            return Err(CoverError::BadParameters("sigma must be positive".into()));
        }
        if let JumpFamily::Aps { s } = family {
            if s == 0 || s >= p {
                return Err(CoverError::BadParameters(format!("s = {s} outside 1 <= s < p")));
            }
        }
        Ok(JumpQuery { p, family, sigma })
    }
}

/// The first necessary condition violated by a candidate upper jump.
#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum NecessaryViolation {
    #[error("sigma <= 1")]
    NotGreaterThanOne,
    #[error("p divides the numerator h'")]
    NumeratorDivisibleByP,
    #[error("denominator m'' does not divide {0}")]
    InadmissibleDenominator(u64),
}

/// Checks the necessary conditions on an upper jump: σ > 1, p ∤ h', and
/// m'' dividing p−1 (or (p−1)/2 when the group is A_p or A_(p+1)).
pub fn necessary_conditions(query: &JumpQuery) -> Result<(), NecessaryViolation> {
    if query.sigma <= Ratio::one() {
        return Err(NecessaryViolation::NotGreaterThanOne);
    }
    let numer = *query.sigma.numer() as u64;
    if numer % query.p == 0 {
        return Err(NecessaryViolation::NumeratorDivisibleByP);
    }
    let bound = query.family.denominator_bound(query.p);
    let denom = *query.sigma.denom() as u64;
    if bound % denom != 0 {
        return Err(NecessaryViolation::InadmissibleDenominator(bound));
    }
    Ok(())
}

/// One realized (σ, inertia) pair with its canonical certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizedJump {
    datum: CoverDatum,
}

impl RealizedJump {
    pub fn sigma(&self) -> Ratio<i64> {
        self.datum.sigma()
    }

    pub fn inertia_order(&self) -> u64 {
        self.datum.inertia_order()
    }

    pub fn lower_jump(&self) -> u64 {
        self.datum.lower_jump()
    }

    pub fn complement_order(&self) -> u64 {
        self.datum.complement_order()
    }

    pub fn certificate(&self) -> &Certificate {
        self.datum.certificate()
    }

    pub fn datum(&self) -> &CoverDatum {
        &self.datum
    }
}

fn seeds_for(p: u64, family: JumpFamily) -> Result<Vec<CoverDatum>, CoverError> {
    match family {
        JumpFamily::Ap => {
            let mut seeds = Vec::new();
            for t in 2..=(p.saturating_sub(3)) {
                seeds.push(seed_ujm(p, t)?);
            }
            if seeds.is_empty() {
                return Err(CoverError::BadParameters(format!(
                    "no valid tower parameter t for p = {p}"
                )));
            }
            Ok(seeds)
        }
        JumpFamily::Aps { s: 1 } => Ok(vec![raw_cover(SeedId::Ap1 { p })?]),
        JumpFamily::Aps { s } => Ok(vec![seed_ujgcd2(p, s)?]),
    }
}

type StateKey = (u64, u64, (i64, i64));
type CertKey = (usize, (u8, u64, u64), Vec<(u8, u64)>);

fn state_key(datum: &CoverDatum) -> StateKey {
    let sigma = datum.sigma();
    (
        datum.tame_index_at_zero().unwrap_or(1),
        datum.inertia_order(),
        (*sigma.numer(), *sigma.denom()),
    )
}

/// Breadth-first closure of the seed covers under pullback, isub, and
/// sigma_plus, truncated at upper jump <= `bound`. States are deduplicated
/// by (inertia order, σ); each keeps a minimal certificate (fewest steps,
/// then smallest parameters). The result lists covers branched only at ∞,
/// sorted by (σ, inertia order).
pub fn enumerate_realizable(
    p: u64,
    family: JumpFamily,
    bound: Ratio<i64>,
) -> Result<Vec<RealizedJump>, CoverError> {
    if bound < Ratio::one() {
        return Err(CoverError::BadParameters("bound must be >= 1".into()));
    }
    let mut heap: BinaryHeap<Reverse<(CertKey, StateKey)>> = BinaryHeap::new();
    let mut pending: BTreeMap<CertKey, CoverDatum> = BTreeMap::new();
    let mut settled: BTreeMap<StateKey, CoverDatum> = BTreeMap::new();

    let mut push = |heap: &mut BinaryHeap<_>, pending: &mut BTreeMap<CertKey, CoverDatum>, datum: CoverDatum| {
        let key = datum.certificate().sort_key();
        heap.push(Reverse((key.clone(), state_key(&datum))));
        pending.insert(key, datum);
    };

    for seed in seeds_for(p, family)? {
        if seed.sigma() <= bound {
            push(&mut heap, &mut pending, seed);
        }
    }

    while let Some(Reverse((cert_key, skey))) = heap.pop() {
        let datum = pending.remove(&cert_key).expect("pending entry for popped key");
        if settled.contains_key(&skey) {
            continue;
        }
        settled.insert(skey, datum.clone());

        let sigma = datum.sigma();
        let ratio_cap = (bound / sigma).floor().to_integer();
        debug_assert!(ratio_cap >= 1);

        // Pullback along any prime-to-p degree; on covers still carrying a
        // tame point this is the only applicable rule.
        for r2 in 2..=(ratio_cap.max(1) as u64) {
            if r2 % p == 0 {
                continue;
            }
            if let Ok(next) = pullback(&datum, r2) {
                if !settled.contains_key(&state_key(&next)) {
                    push(&mut heap, &mut pending, next);
                }
            }
        }

        if datum.branched_only_at_infinity() {
            let m = datum.complement_order();
            for d in 2..=m.min(ratio_cap.max(1) as u64) {
                if let Ok(next) = isub(&datum, d) {
                    if !settled.contains_key(&state_key(&next)) {
                        push(&mut heap, &mut pending, next);
                    }
                }
            }
            let add_cap = (bound - sigma).floor().to_integer();
            for i in 1..=(add_cap.max(0) as u64) {
                if let Ok(next) = sigma_plus(&datum, i) {
                    if !settled.contains_key(&state_key(&next)) {
                        push(&mut heap, &mut pending, next);
                    }
                }
            }
        }
    }

    let mut out: Vec<RealizedJump> = settled
        .into_values()
        .filter(|d| d.branched_only_at_infinity())
        .map(|datum| RealizedJump { datum })
        .collect();
    out.sort_by_key(|r| (r.sigma(), r.inertia_order()));
    Ok(out)
}

/// Threshold above which every prime-to-p integer occurs as the lower jump
/// of an A_p-cover with inertia ℤ/p: (p+1)/gcd(p+1, 4).
pub fn threshold_h0(p: u64) -> Result<u64, CoverError> {
    if !is_odd_prime(p) || p < 5 {
        return Err(CoverError::BadParameters(format!("p = {p} must be an odd prime >= 5")));
    }
    Ok((p + 1) / (p + 1).gcd(&4))
}

/// As `threshold_h0` for A_(p+s), s >= 2: s(p+s)/gcd(p−1, s(s+1)).
pub fn threshold_hs(p: u64, s: u64) -> Result<u64, CoverError> {
    if !is_odd_prime(p) || p < 5 {
        return Err(CoverError::BadParameters(format!("p = {p} must be an odd prime >= 5")));
    }
    if !(2 <= s && s < p) {
        return Err(CoverError::BadParameters(format!("s = {s} outside 2 <= s < p")));
    }
    if p == 7 && s == 2 {
        return Err(CoverError::ExcludedCase);
    }
    Ok(s * (p + s) / (p - 1).gcd(&(s * (s + 1))))
}

/// As `threshold_h0` for A_(p+1): 2(p+2)/gcd(p−1, 3). Requires p != 7.
pub fn threshold_h1(p: u64) -> Result<u64, CoverError> {
    if !is_odd_prime(p) || p < 5 {
        return Err(CoverError::BadParameters(format!("p = {p} must be an odd prime >= 5")));
    }
    if p == 7 {
        return Err(CoverError::ExcludedPrime);
    }
    Ok(2 * (p + 2) / (p - 1).gcd(&3))
}

/// Families for which the full inertia sweep is verified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IcFamily {
    /// A_p, all divisors m of (p−1)/2.
    Ap,
    /// A_(p+2) for p ≡ 2 mod 3, all divisors m of p−1.
    Ap2,
}

fn sorted_divisors(n: u64) -> Vec<u64> {
    let mut divs: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
    divs.sort_unstable();
    divs
}

/// Produces, for every admissible complement order m of the family, a
/// certificate realizing inertia order p·m: the maximal seed followed by
/// one pullback. Every certificate is replayed before being returned.
pub fn verify_inertia_conjecture(
    p: u64,
    family: IcFamily,
) -> Result<Vec<(u64, Certificate)>, CoverError> {
    if !is_odd_prime(p) || p < 5 {
        return Err(CoverError::BadParameters(format!("p = {p} must be an odd prime >= 5")));
    }
    let (seed, max_m) = match family {
        IcFamily::Ap => (seed_ujm(p, 2)?, (p - 1) / 2),
        IcFamily::Ap2 => {
            if p % 3 != 2 {
                return Err(CoverError::BadParameters(format!(
                    "p = {p} is not 2 mod 3; the s = 2 seed does not reach m = p - 1"
                )));
            }
            (seed_ujgcd2(p, 2)?, p - 1)
        }
    };
    if seed.complement_order() != max_m {
        return Err(CoverError::ReplayMismatch(format!(
            "seed complement order {} differs from the maximal m {max_m}",
            seed.complement_order()
        )));
    }
    let mut out = Vec::new();
    for m in sorted_divisors(max_m) {
        let r2 = max_m / m;
        let cover = pullback(&seed, r2)?;
        if cover.inertia_order() != p * m {
            return Err(CoverError::ReplayMismatch(format!(
                "pullback({r2}) gave inertia {} instead of {}",
                cover.inertia_order(),
                p * m
            )));
        }
        super::verify_replay(&cover)?;
        out.push((m, cover.certificate().clone()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Ratio<i64> {
        Ratio::new(n, d)
    }

    fn sigmas(jumps: &[RealizedJump]) -> Vec<Ratio<i64>> {
        let mut v: Vec<_> = jumps.iter().map(|j| j.sigma()).collect();
        v.dedup();
        v
    }

    #[test]
    fn necessary_condition_examples() {
        // (p=5, A_5, sigma=2) satisfies all conditions.
        let q = JumpQuery::new(5, JumpFamily::Ap, rat(2, 1)).unwrap();
        assert_eq!(necessary_conditions(&q), Ok(()));

        // (p=11, A_11, sigma=7/5): 5 | (11-1)/2.
        let q = JumpQuery::new(11, JumpFamily::Ap, rat(7, 5)).unwrap();
        assert_eq!(necessary_conditions(&q), Ok(()));

        // sigma = 1 fails the first condition.
        let q = JumpQuery::new(11, JumpFamily::Ap, rat(1, 1)).unwrap();
        assert_eq!(necessary_conditions(&q), Err(NecessaryViolation::NotGreaterThanOne));

        // (p=7, A_9, sigma=7/3): numerator divisible by p.
        let q = JumpQuery::new(7, JumpFamily::Aps { s: 2 }, rat(7, 3)).unwrap();
        assert_eq!(
            necessary_conditions(&q),
            Err(NecessaryViolation::NumeratorDivisibleByP)
        );

        // Denominator 4 does not divide 13 - 1 = 12.
        let q = JumpQuery::new(13, JumpFamily::Aps { s: 2 }, rat(5, 4)).unwrap();
        assert_eq!(
            necessary_conditions(&q),
            Err(NecessaryViolation::InadmissibleDenominator(12))
        );
    }

    #[test]
    fn enumerate_p7_contains_small_integers() {
        let jumps = enumerate_realizable(7, JumpFamily::Ap, rat(4, 1)).unwrap();
        let sigmas = sigmas(&jumps);
        for v in [rat(2, 1), rat(3, 1), rat(4, 1)] {
            assert!(sigmas.contains(&v), "missing sigma = {v}");
        }
    }

    #[test]
    fn enumerate_p11_contains_12_over_5() {
        let jumps = enumerate_realizable(11, JumpFamily::Ap, rat(3, 1)).unwrap();
        assert!(sigmas(&jumps).contains(&rat(12, 5)));
    }

    #[test]
    fn enumerate_p13_contains_half_integers() {
        let jumps = enumerate_realizable(13, JumpFamily::Ap, rat(4, 1)).unwrap();
        let s = sigmas(&jumps);
        for v in [rat(5, 2), rat(7, 2), rat(9, 2), rat(10, 3)] {
            assert!(s.contains(&v), "missing sigma = {v}");
        }
    }

    #[test]
    fn enumerate_p5_integer_jumps() {
        // All prime-to-5 integers from h0 = 3 up to the bound occur.
        let jumps = enumerate_realizable(5, JumpFamily::Ap, rat(3, 1)).unwrap();
        let s = sigmas(&jumps);
        assert!(s.contains(&rat(3, 1)));
        // 2 is not derivable: it stays out of the realized set.
        assert!(!s.contains(&rat(2, 1)));
    }

    #[test]
    fn enumerate_aps_contains_seed() {
        let jumps = enumerate_realizable(11, JumpFamily::Aps { s: 2 }, rat(3, 1)).unwrap();
        assert!(sigmas(&jumps).contains(&rat(13, 10)));
    }

    #[test]
    fn enumerate_monotone_and_deterministic() {
        let small = enumerate_realizable(7, JumpFamily::Ap, rat(3, 1)).unwrap();
        let large = enumerate_realizable(7, JumpFamily::Ap, rat(5, 1)).unwrap();
        for jump in &small {
            let twin = large
                .iter()
                .find(|j| j.sigma() == jump.sigma() && j.inertia_order() == jump.inertia_order())
                .expect("closure is monotone in the bound");
            assert_eq!(twin.certificate(), jump.certificate());
        }
        let again = enumerate_realizable(7, JumpFamily::Ap, rat(3, 1)).unwrap();
        assert_eq!(small, again);
    }

    #[test]
    fn every_enumerated_jump_passes_necessary_conditions() {
        for (p, family) in [
            (5, JumpFamily::Ap),
            (7, JumpFamily::Ap),
            (11, JumpFamily::Aps { s: 2 }),
            (5, JumpFamily::Aps { s: 1 }),
        ] {
            let jumps = enumerate_realizable(p, family, rat(6, 1)).unwrap();
            assert!(!jumps.is_empty());
            for j in jumps {
                let q = JumpQuery::new(p, family, j.sigma()).unwrap();
                assert_eq!(necessary_conditions(&q), Ok(()), "{} at {}", p, j.sigma());
            }
        }
    }

    #[test]
    fn thresholds() {
        assert_eq!(threshold_h0(5).unwrap(), 3);
        assert_eq!(threshold_h0(7).unwrap(), 2);
        assert_eq!(threshold_h0(11).unwrap(), 3);
        assert_eq!(threshold_h0(13).unwrap(), 7);
        assert_eq!(threshold_hs(11, 2).unwrap(), 13);
        assert_eq!(threshold_h1(5).unwrap(), 14);
        assert_eq!(threshold_h1(11).unwrap(), 26);
        assert_eq!(threshold_hs(7, 2), Err(CoverError::ExcludedCase));
        assert_eq!(threshold_h1(7), Err(CoverError::ExcludedPrime));
    }

    #[test]
    fn inertia_conjecture_examples() {
        let certs = verify_inertia_conjecture(5, IcFamily::Ap).unwrap();
        assert_eq!(certs.iter().map(|(m, _)| *m).collect::<Vec<_>>(), vec![1, 2]);

        let certs = verify_inertia_conjecture(5, IcFamily::Ap2).unwrap();
        assert_eq!(certs.iter().map(|(m, _)| *m).collect::<Vec<_>>(), vec![1, 2, 4]);

        let certs = verify_inertia_conjecture(11, IcFamily::Ap2).unwrap();
        assert_eq!(
            certs.iter().map(|(m, _)| *m).collect::<Vec<_>>(),
            vec![1, 2, 5, 10]
        );

        assert!(matches!(
            verify_inertia_conjecture(7, IcFamily::Ap2),
            Err(CoverError::BadParameters(_))
        ));
    }
}
