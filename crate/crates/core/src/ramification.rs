//! Higher-ramification bookkeeping for inertia groups whose order is
//! strictly divisible by p: two-step filtrations, lower/upper jump
//! conversion, different exponents, and Riemann–Hurwitz genera.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::is_odd_prime;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RamificationError {
    #[error("invalid filtration: {0}")]
    InvalidFiltration(String),
    #[error("ramification index {e} does not divide the group order {order}")]
    IndexDoesNotDivide { e: u64, order: BigUint },
    #[error("Riemann-Hurwitz sum {0} is odd; no curve has this genus")]
    NonIntegralGenus(BigInt),
    #[error("computed genus {0} is negative; the data describe no curve")]
    NegativeGenus(BigInt),
}

/// The filtration G₀ ⊇ G₁ = ⋯ = G_h ⊋ G_{h+1} = 1 with |G₀| = pm and
/// |G₁| = p. Only this strictly-divisible shape is representable; general
/// filtrations are rejected at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct RamificationFiltration {
    p: u64,
    m: u64,
    h: u64,
}

impl RamificationFiltration {
    pub fn new(p: u64, m: u64, h: u64) -> Result<Self, RamificationError> {
        if !is_odd_prime(p) {
            return Err(RamificationError::InvalidFiltration(format!(
                "p = {p} is not an odd prime"
            )));
        }
        if m == 0 || m % p == 0 {
            return Err(RamificationError::InvalidFiltration(format!(
                "m = {m} must be positive and prime to p = {p}"
            )));
        }
        if h == 0 {
            return Err(RamificationError::InvalidFiltration("h must be >= 1".into()));
        }
        Ok(RamificationFiltration { p, m, h })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn complement_order(&self) -> u64 {
        self.m
    }

    pub fn lower_jump(&self) -> u64 {
        self.h
    }

    pub fn inertia_order(&self) -> u64 {
        self.p * self.m
    }

    /// |G₀|, |G₁|, …, |G_{h+1}|.
    pub fn group_orders(&self) -> Vec<u64> {
        let mut orders = Vec::with_capacity(self.h as usize + 2);
        orders.push(self.p * self.m);
        orders.extend(std::iter::repeat(self.p).take(self.h as usize));
        orders.push(1);
        orders
    }

    /// d = Σ_{i≥0} (|Gᵢ| − 1) = (pm − 1) + h(p − 1).
    pub fn different_exponent(&self) -> u64 {
        (self.p * self.m - 1) + self.h * (self.p - 1)
    }

    pub fn upper_jump(&self) -> UpperJump {
        UpperJump::from_jump(self.h, self.m)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "p": self.p,
            "m": self.m,
            "h": self.h,
            "inertia_order": self.inertia_order(),
            "upper_jump": self.upper_jump().to_string(),
            "different_exponent": self.different_exponent(),
        })
    }
}

/// The upper jump σ = h/m in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct UpperJump {
    numerator: u64,
    denominator: u64,
}

impl UpperJump {
    pub fn from_jump(h: u64, m: u64) -> Self {
        let g = h.gcd(&m);
        UpperJump { numerator: h / g, denominator: m / g }
    }

    pub fn numerator(&self) -> u64 {
        self.numerator
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    pub fn value(&self) -> Ratio<i64> {
        Ratio::new(self.numerator as i64, self.denominator as i64)
    }
}

impl std::fmt::Display for UpperJump {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.denominator == 1 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, self.denominator)
        }
    }
}

/// Ramification data at one branch point of a Galois cover: the
/// ramification index, and the filtration when the point is wild.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BranchPointData {
    e: u64,
    filtration: Option<RamificationFiltration>,
}

impl BranchPointData {
    /// A tame point with index `e`. Callers that know p must ensure p ∤ e.
    pub fn tame(e: u64) -> Result<Self, RamificationError> {
        if e == 0 {
            return Err(RamificationError::InvalidFiltration(
                "ramification index must be positive".into(),
            ));
        }
        Ok(BranchPointData { e, filtration: None })
    }

    pub fn wild(filtration: RamificationFiltration) -> Self {
        BranchPointData { e: filtration.inertia_order(), filtration: Some(filtration) }
    }

    pub fn ramification_index(&self) -> u64 {
        self.e
    }

    pub fn filtration(&self) -> Option<&RamificationFiltration> {
        self.filtration.as_ref()
    }

    pub fn is_wild(&self) -> bool {
        self.filtration.is_some()
    }

    /// Tame points contribute e − 1; wild points use Hilbert's formula.
    pub fn different_exponent(&self) -> u64 {
        match &self.filtration {
            Some(f) => f.different_exponent(),
            None => self.e - 1,
        }
    }

    /// Number of points above the branch point in a Galois cover.
    pub fn points_above(&self, group_order: &BigUint) -> Result<BigUint, RamificationError> {
        let e = BigUint::from(self.e);
        let (q, r) = group_order.div_rem(&e);
        if !r.is_zero() {
            return Err(RamificationError::IndexDoesNotDivide {
                e: self.e,
                order: group_order.clone(),
            });
        }
        Ok(q)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "e": self.e,
            "filtration": self.filtration.as_ref().map(|f| f.to_json()),
            "different_exponent": self.different_exponent(),
        })
    }
}

/// Exact genus of the covering curve from Riemann–Hurwitz:
/// 2g' − 2 = |G|(2g − 2) + Σ_P (|G|/e_P)·d_P for a Galois cover.
///
/// Fails when an index does not divide the group order, when the sum is
/// odd, or when the resulting genus is negative.
pub fn riemann_hurwitz_genus(
    group_order: &BigUint,
    base_genus: u64,
    branch_data: &[BranchPointData],
) -> Result<BigInt, RamificationError> {
    let order = BigInt::from(group_order.clone());
    let mut rhs = &order * BigInt::from(2 * base_genus as i64 - 2);
    for b in branch_data {
        let pts = BigInt::from(b.points_above(group_order)?);
        rhs += pts * BigInt::from(b.different_exponent());
    }
    // rhs = 2g' - 2
    if (&rhs % 2u32) != BigInt::zero() {
        return Err(RamificationError::NonIntegralGenus(rhs));
    }
    let genus = (rhs + 2) / 2;
    if genus.is_negative() {
        return Err(RamificationError::NegativeGenus(genus));
    }
    Ok(genus)
}

/// n!/2 as a big integer, the order of Aₙ (n ≥ 2).
pub fn alternating_group_order(n: u64) -> BigUint {
    factorial(n) / BigUint::from(2u32)
}

/// n! as a big integer, the order of Sₙ.
pub fn factorial(n: u64) -> BigUint {
    let mut acc = BigUint::one();
    for k in 2..=n {
        acc *= BigUint::from(k);
    }
    acc
}

/// Convenience for tests and formulas that stay in machine range.
pub fn genus_to_u64(genus: &BigInt) -> Option<u64> {
    genus.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filtration_validation() {
        assert!(RamificationFiltration::new(5, 2, 3).is_ok());
        assert!(RamificationFiltration::new(5, 10, 3).is_err()); // p | m
        assert!(RamificationFiltration::new(5, 2, 0).is_err());
        assert!(RamificationFiltration::new(4, 1, 1).is_err());
    }

    #[test]
    fn upper_jump_examples() {
        // (p=11, m=10, h=13) -> 13/10
        let f = RamificationFiltration::new(11, 10, 13).unwrap();
        let s = f.upper_jump();
        assert_eq!((s.numerator(), s.denominator()), (13, 10));
        // (p=7, m=1, h=2) -> 2
        let f = RamificationFiltration::new(7, 1, 2).unwrap();
        assert_eq!(f.upper_jump().to_string(), "2");
        // (m=1, h=1) -> 1
        let f = RamificationFiltration::new(5, 1, 1).unwrap();
        assert_eq!(f.upper_jump().value(), Ratio::from_integer(1));
    }

    #[test]
    fn upper_jump_round_trip() {
        for p in [5u64, 7, 11, 13] {
            for m in 1..p {
                for h in 1..=200 {
                    let f = RamificationFiltration::new(p, m, h).unwrap();
                    let s = f.upper_jump();
                    // h = sigma * m exactly.
                    assert_eq!(s.numerator() * m, h * s.denominator());
                }
            }
        }
    }

    // Oracle: evaluate Hilbert's sum term by term over the explicit orders.
    fn hilbert_sum(f: &RamificationFiltration) -> u64 {
        f.group_orders().iter().map(|&o| o - 1).sum()
    }

    #[test]
    fn different_exponent_examples() {
        let f = RamificationFiltration::new(7, 5, 3).unwrap();
        assert_eq!(hilbert_sum(&f), 52); // 34 + 18
        assert_eq!(f.different_exponent(), 52);

        let f = RamificationFiltration::new(5, 1, 1).unwrap();
        assert_eq!(hilbert_sum(&f), 8); // (5-1) + (5-1)
        assert_eq!(f.different_exponent(), 8);

        // Tame point: classical e - 1.
        let tame = BranchPointData::tame(5).unwrap();
        assert_eq!(tame.different_exponent(), 4);
    }

    #[test]
    fn different_exponent_matches_hilbert_sum_everywhere() {
        for p in [5u64, 7, 11, 13] {
            for m in 1..p {
                for h in 1..40 {
                    let f = RamificationFiltration::new(p, m, h).unwrap();
                    assert_eq!(f.different_exponent(), hilbert_sum(&f));
                }
            }
        }
    }

    #[test]
    fn different_exponent_monotone() {
        let base = RamificationFiltration::new(7, 3, 5).unwrap().different_exponent();
        assert!(RamificationFiltration::new(7, 3, 6).unwrap().different_exponent() > base);
        assert!(RamificationFiltration::new(7, 4, 5).unwrap().different_exponent() > base);
    }

    #[test]
    fn genus_a7_wild_seven() {
        // |A_7| = 2520, one branch point with (p=7, m=1, h=2) -> genus 721.
        let order = alternating_group_order(7);
        assert_eq!(order, BigUint::from(2520u32));
        let wild = BranchPointData::wild(RamificationFiltration::new(7, 1, 2).unwrap());
        let g = riemann_hurwitz_genus(&order, 0, &[wild]).unwrap();
        assert_eq!(g, BigInt::from(721));
    }

    #[test]
    fn genus_a7_wild_five() {
        // |A_7| = 2520, one branch point with (p=5, m=4, h=7) -> genus 442.
        let order = alternating_group_order(7);
        let wild = BranchPointData::wild(RamificationFiltration::new(5, 4, 7).unwrap());
        let g = riemann_hurwitz_genus(&order, 0, &[wild]).unwrap();
        assert_eq!(g, BigInt::from(442));
    }

    #[test]
    fn unramified_cover_rejected_unless_trivial() {
        // Degree n > 1 with no branch data gives 2g' - 2 = -2n < -2.
        let g = riemann_hurwitz_genus(&BigUint::from(1u32), 0, &[]).unwrap();
        assert_eq!(g, BigInt::zero());
        assert!(matches!(
            riemann_hurwitz_genus(&BigUint::from(3u32), 0, &[]),
            Err(RamificationError::NegativeGenus(_))
        ));
    }

    #[test]
    fn index_must_divide_group_order() {
        let wild = BranchPointData::wild(RamificationFiltration::new(5, 4, 7).unwrap());
        assert!(matches!(
            riemann_hurwitz_genus(&BigUint::from(30u32), 0, &[wild]),
            Err(RamificationError::IndexDoesNotDivide { e: 20, .. })
        ));
    }
}
