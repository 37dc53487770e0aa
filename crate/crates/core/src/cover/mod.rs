//! The state machine of covers of the projective line branched within
//! {0, ∞}: seed covers from the Abhyankar tower equations, the
//! transformation rules that act on them, and replayable certificates.
//!
//! The rules are implemented as axioms with preconditions: each one maps
//! the ramification data of an existing cover to the data of another cover
//! known to exist, and records itself in the certificate so that any claim
//! can be replayed from its seed.

mod enumerate;

pub use enumerate::{
    enumerate_realizable, necessary_conditions, threshold_h0, threshold_h1, threshold_hs,
    verify_inertia_conjecture, IcFamily, JumpFamily, JumpQuery, NecessaryViolation, RealizedJump,
};

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::Ratio;
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::is_odd_prime;
use crate::newton::{ap_complement_order, aps_complement_order};
use crate::perm::{InertiaGroupShape, PermError};
use crate::ramification::{
    alternating_group_order, factorial, riemann_hurwitz_genus, BranchPointData,
    RamificationError, RamificationFiltration, UpperJump,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoverError {
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("(p, s) = (7, 2) is excluded: the degree-9 tower does not have group A_9")]
    ExcludedCase,
    #[error("the A_(p+1) route requires p != 7")]
    ExcludedPrime,
    #[error("cover must be branched only at infinity for this rule")]
    NotBranchedOnlyAtInfinity,
    #[error("pullback degree r2 = {0} must be prime to p")]
    PullbackDivisibleByP(u64),
    #[error("h + i*m = {0} is divisible by p; this jump increment is excluded")]
    ForbiddenResidue(u64),
    #[error("group {0} is not simple; no disjointness witness for the pullback")]
    NonSimpleGroup(String),
    #[error("inadmissible wild ramification data: {0}")]
    Inadmissible(String),
    #[error("certificate replay mismatch: {0}")]
    ReplayMismatch(String),
    #[error(transparent)]
    Ramification(#[from] RamificationError),
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// The Galois group of a cover, recorded by family and degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum GroupFamily {
    Alternating(u64),
    Symmetric(u64),
}

impl GroupFamily {
    pub fn degree(&self) -> u64 {
        match *self {
            GroupFamily::Alternating(n) | GroupFamily::Symmetric(n) => n,
        }
    }

    pub fn order(&self) -> BigUint {
        match *self {
            GroupFamily::Alternating(n) => alternating_group_order(n),
            GroupFamily::Symmetric(n) => factorial(n),
        }
    }

    pub fn label(&self) -> String {
        match *self {
            GroupFamily::Alternating(n) => format!("A_{n}"),
            GroupFamily::Symmetric(n) => format!("S_{n}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum PointLabel {
    Zero,
    Infinity,
}

/// Seed identifier: which tower equation the cover descends from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SeedId {
    /// Degree-p tower at parameter t; the raw cover is branched at 0 and ∞.
    UjM { p: u64, t: u64 },
    /// Degree-(p+s) tower at parameter s; branched only at ∞.
    UjGcd2 { p: u64, s: u64 },
    /// The A_(p+1) subcover of the s = 2 tower; branched at two points.
    Ap1 { p: u64 },
}

impl SeedId {
    fn sort_key(&self) -> (u8, u64, u64) {
        match *self {
            SeedId::UjM { p, t } => (0, p, t),
            SeedId::UjGcd2 { p, s } => (1, p, s),
            SeedId::Ap1 { p } => (2, p, 0),
        }
    }

    pub fn to_json(&self) -> Value {
        match *self {
            SeedId::UjM { p, t } => json!({"kind": "ujM", "p": p, "t": t}),
            SeedId::UjGcd2 { p, s } => json!({"kind": "ujgcd2", "p": p, "s": s}),
            SeedId::Ap1 { p } => json!({"kind": "ap1", "p": p}),
        }
    }
}

impl fmt::Display for SeedId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SeedId::UjM { p, t } => write!(f, "ujM({p},{t})"),
            SeedId::UjGcd2 { p, s } => write!(f, "ujgcd2({p},{s})"),
            SeedId::Ap1 { p } => write!(f, "ap1({p})"),
        }
    }
}

/// One transformation applied to a cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Step {
    /// Pullback along a tame cyclic cover of degree r2 branched at {0, ∞}.
    Pullback { r2: u64 },
    /// Pass to the cover with inertia subgroup of index gcd(m, d).
    Isub { d: u64 },
    /// Increase the upper jump by i, keeping the inertia group.
    SigmaPlus { i: u64 },
    /// Replace an S_n-cover by its index-2 alternating subcover.
    QuotientToAn,
}

impl Step {
    fn sort_key(&self) -> (u8, u64) {
        match *self {
            Step::QuotientToAn => (0, 0),
            Step::Pullback { r2 } => (1, r2),
            Step::Isub { d } => (2, d),
            Step::SigmaPlus { i } => (3, i),
        }
    }

    pub fn to_json(&self) -> Value {
        match *self {
            Step::Pullback { r2 } => json!({"rule": "pullback", "r2": r2}),
            Step::Isub { d } => json!({"rule": "isub", "d": d}),
            Step::SigmaPlus { i } => json!({"rule": "sigma_plus", "i": i}),
            Step::QuotientToAn => json!({"rule": "quotient_to_An"}),
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Step::Pullback { r2 } => write!(f, "pullback({r2})"),
            Step::Isub { d } => write!(f, "isub({d})"),
            Step::SigmaPlus { i } => write!(f, "sigma_plus({i})"),
            Step::QuotientToAn => write!(f, "quotient"),
        }
    }
}

/// A seed cover plus the ordered transformations that produce a cover;
/// replaying the steps from the seed reproduces the claimed data exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    seed: SeedId,
    steps: Vec<Step>,
}

impl Certificate {
    pub fn seed(&self) -> SeedId {
        self.seed
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Compact deterministic identifier, e.g. `ujM(7,3)>sigma_plus(1)`.
    pub fn id(&self) -> String {
        let mut s = self.seed.to_string();
        for step in &self.steps {
            s.push('>');
            s.push_str(&step.to_string());
        }
        s
    }

    /// Total order used to pick canonical certificates: fewer steps first,
    /// then smaller seed, then smaller step parameters.
    pub fn sort_key(&self) -> (usize, (u8, u64, u64), Vec<(u8, u64)>) {
        (
            self.steps.len(),
            self.seed.sort_key(),
            self.steps.iter().map(|s| s.sort_key()).collect(),
        )
    }
}

/// A cover of the projective line branched within {0, ∞}, with its group
/// family, per-point ramification data, and provenance certificate. The
/// genus is always recomputed from the branch data, never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverDatum {
    p: u64,
    group: GroupFamily,
    branch_points: BTreeMap<PointLabel, BranchPointData>,
    certificate: Certificate,
}

impl CoverDatum {
    fn validated(
        p: u64,
        group: GroupFamily,
        tame_zero: Option<u64>,
        wild: RamificationFiltration,
        certificate: Certificate,
    ) -> Result<Self, CoverError> {
        if wild.p() != p {
            return Err(CoverError::BadParameters("wild residue characteristic mismatch".into()));
        }
        let mut branch_points = BTreeMap::new();
        if let Some(e) = tame_zero {
            if e % p == 0 {
                return Err(CoverError::BadParameters(format!(
                    "tame index {e} divisible by p = {p}"
                )));
            }
            if e > 1 {
                branch_points.insert(PointLabel::Zero, BranchPointData::tame(e)?);
            }
        }
        branch_points.insert(PointLabel::Infinity, BranchPointData::wild(wild));
        let datum = CoverDatum { p, group, branch_points, certificate };
        datum.check_admissibility()?;
        datum.genus()?; // Riemann-Hurwitz integrality is part of validity.
        Ok(datum)
    }

    /// Wild data must be compatible with the normalizer of a p-cycle in
    /// the group family: for A_p, A_(p+1), and S_p the complement is cyclic
    /// with trivial prime-to-p center, which forces gcd(h, m) = 1 and
    /// bounds m; for A_(p+s) with s >= 2 the conjugation exponent must
    /// exist, i.e. m/gcd(h, m) must divide p - 1.
    pub fn check_admissibility(&self) -> Result<(), CoverError> {
        let p = self.p;
        let m = self.complement_order();
        let h = self.lower_jump();
        let n = self.group.degree();
        if n < p {
            return Err(CoverError::BadParameters(format!(
                "group degree {n} below p = {p}"
            )));
        }
        let (m_prime, max_m): (u64, u64) = match self.group {
            GroupFamily::Symmetric(n) if n == p => (1, p - 1),
            GroupFamily::Alternating(n) if n <= p + 1 => (1, (p - 1) / 2),
            GroupFamily::Alternating(_) => (h.gcd(&m), u64::MAX),
            GroupFamily::Symmetric(n) => {
                return Err(CoverError::BadParameters(format!(
                    "no usable normalizer bound for S_{n} with s > 0"
                )))
            }
        };
        if max_m != u64::MAX && max_m % m != 0 {
            return Err(CoverError::Inadmissible(format!(
                "m = {m} does not divide the normalizer bound {max_m} in {}",
                self.group.label()
            )));
        }
        let shape = InertiaGroupShape::new(p, m, m_prime)
            .map_err(|e| CoverError::Inadmissible(e.to_string()))?;
        if !shape.admissible_jump_residues().contains(&(h % m)) {
            return Err(CoverError::Inadmissible(format!(
                "lower jump {h} mod {m} incompatible with a center of order {m_prime}"
            )));
        }
        Ok(())
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn group(&self) -> GroupFamily {
        self.group
    }

    pub fn branch_points(&self) -> &BTreeMap<PointLabel, BranchPointData> {
        &self.branch_points
    }

    pub fn certificate(&self) -> &Certificate {
        &self.certificate
    }

    fn wild(&self) -> &RamificationFiltration {
        self.branch_points
            .get(&PointLabel::Infinity)
            .and_then(|b| b.filtration())
            .expect("every cover datum is wild at infinity")
    }

    pub fn tame_index_at_zero(&self) -> Option<u64> {
        self.branch_points.get(&PointLabel::Zero).map(|b| b.ramification_index())
    }

    pub fn branched_only_at_infinity(&self) -> bool {
        !self.branch_points.contains_key(&PointLabel::Zero)
    }

    pub fn complement_order(&self) -> u64 {
        self.wild().complement_order()
    }

    pub fn lower_jump(&self) -> u64 {
        self.wild().lower_jump()
    }

    pub fn inertia_order(&self) -> u64 {
        self.wild().inertia_order()
    }

    pub fn upper_jump(&self) -> UpperJump {
        self.wild().upper_jump()
    }

    pub fn sigma(&self) -> Ratio<i64> {
        Ratio::new(self.lower_jump() as i64, self.complement_order() as i64)
    }

    /// Exact genus of the covering curve, recomputed from the branch data.
    pub fn genus(&self) -> Result<BigInt, CoverError> {
        let data: Vec<BranchPointData> = self.branch_points.values().copied().collect();
        Ok(riemann_hurwitz_genus(&self.group.order(), 0, &data)?)
    }

    pub fn to_json(&self) -> Value {
        let branch: Value = self
            .branch_points
            .iter()
            .map(|(label, data)| {
                let key = match label {
                    PointLabel::Zero => "0",
                    PointLabel::Infinity => "infinity",
                };
                (key.to_string(), data.to_json())
            })
            .collect::<serde_json::Map<String, Value>>()
            .into();
        json!({
            "group": self.group.label(),
            "branch_points": branch,
            "inertia_order": self.inertia_order(),
            "h": self.lower_jump(),
            "m": self.complement_order(),
            "sigma": self.upper_jump().to_string(),
            "genus": self.genus().map(|g| g.to_string()).unwrap_or_default(),
            "certificate_id": self.certificate.id(),
        })
    }
}

/// Certificate JSON: seed, steps, and the resulting invariants.
pub fn certificate_json(datum: &CoverDatum) -> Value {
    let cert = datum.certificate();
    json!({
        "seed": cert.seed().to_json(),
        "steps": cert.steps().iter().map(|s| s.to_json()).collect::<Vec<_>>(),
        "result": {
            "group": datum.group().label(),
            "inertia_order": datum.inertia_order(),
            "h": datum.lower_jump(),
            "m": datum.complement_order(),
            "sigma": datum.upper_jump().to_string(),
            "genus": datum.genus().map(|g| g.to_string()).unwrap_or_default(),
        },
    })
}

fn require_prime_ge5(p: u64) -> Result<(), CoverError> {
    if !is_odd_prime(p) || p < 5 {
        return Err(CoverError::BadParameters(format!("p = {p} must be an odd prime >= 5")));
    }
    Ok(())
}

/// The raw cover attached to a seed identifier, before any steps.
pub fn raw_cover(seed: SeedId) -> Result<CoverDatum, CoverError> {
    match seed {
        SeedId::UjM { p, t } => {
            require_prime_ge5(p)?;
            if !(1 < t && t + 2 < p) {
                return Err(CoverError::BadParameters(format!(
                    "t = {t} outside 1 < t < p - 2 for p = {p}"
                )));
            }
            let d1 = (p - 1).gcd(&(t - 1));
            let m = (p - 1) / d1;
            let h = (p - t) / d1;
            let group = if t % 2 == 1 {
                GroupFamily::Alternating(p)
            } else {
                GroupFamily::Symmetric(p)
            };
            let wild = RamificationFiltration::new(p, m, h)?;
            CoverDatum::validated(p, group, Some(t), wild, Certificate { seed, steps: vec![] })
        }
        SeedId::UjGcd2 { p, s } => {
            require_prime_ge5(p)?;
            if !(2 <= s && s < p) {
                return Err(CoverError::BadParameters(format!(
                    "s = {s} outside 2 <= s < p for p = {p}"
                )));
            }
            if p == 7 && s == 2 {
                return Err(CoverError::ExcludedCase);
            }
            let m = aps_complement_order(p, s);
            let h = m * (p + s) / (p - 1);
            let wild = RamificationFiltration::new(p, m, h)?;
            CoverDatum::validated(
                p,
                GroupFamily::Alternating(p + s),
                None,
                wild,
                Certificate { seed, steps: vec![] },
            )
        }
        SeedId::Ap1 { p } => {
            require_prime_ge5(p)?;
            if p == 7 {
                return Err(CoverError::ExcludedPrime);
            }
            let g3 = (p - 1).gcd(&3);
            let m2 = (p - 1) / g3;
            let h = (p + 2) / g3;
            let wild = RamificationFiltration::new(p, m2 / 2, h)?;
            CoverDatum::validated(
                p,
                GroupFamily::Alternating(p + 1),
                Some(m2),
                wild,
                Certificate { seed, steps: vec![] },
            )
        }
    }
}

fn with_step(mut cert: Certificate, step: Step) -> Certificate {
    cert.steps.push(step);
    cert
}

/// Pullback along a tame cyclic cover of degree r2 branched at {0, ∞}:
/// the tame index at 0 drops to r1/gcd(r1, r2), the complement order to
/// m/gcd(m, r2), the lower jump becomes h·r2/gcd(m, r2), and the upper
/// jump is multiplied by r2. Requires p ∤ r2 and a simple (alternating)
/// group so that linear disjointness from the cyclic cover is automatic.
pub fn pullback(cover: &CoverDatum, r2: u64) -> Result<CoverDatum, CoverError> {
    if r2 == 0 || r2 % cover.p == 0 {
        return Err(CoverError::PullbackDivisibleByP(r2));
    }
    if r2 == 1 {
        return Ok(cover.clone());
    }
    match cover.group {
        GroupFamily::Alternating(n) if n >= 5 => {}
        other => return Err(CoverError::NonSimpleGroup(other.label())),
    }
    let r1 = cover.tame_index_at_zero().unwrap_or(1);
    let new_r1 = r1 / r1.gcd(&r2);
    let m = cover.complement_order();
    let h = cover.lower_jump();
    let g = m.gcd(&r2);
    let wild = RamificationFiltration::new(cover.p, m / g, h * r2 / g)?;
    CoverDatum::validated(
        cover.p,
        cover.group,
        Some(new_r1),
        wild,
        with_step(cover.certificate.clone(), Step::Pullback { r2 }),
    )
}

/// Passes to the cover whose inertia is the subgroup of order p·m/gcd(m, d)
/// with lower jump d·h/gcd(m, d); the upper jump is multiplied by d.
/// Requires a cover branched only at ∞ and 1 ≤ d ≤ m.
pub fn isub(cover: &CoverDatum, d: u64) -> Result<CoverDatum, CoverError> {
    if !cover.branched_only_at_infinity() {
        return Err(CoverError::NotBranchedOnlyAtInfinity);
    }
    let m = cover.complement_order();
    if d == 0 || d > m {
        return Err(CoverError::BadParameters(format!("d = {d} outside 1..={m}")));
    }
    if d == 1 {
        return Ok(cover.clone());
    }
    let h = cover.lower_jump();
    let g = m.gcd(&d);
    let wild = RamificationFiltration::new(cover.p, m / g, d * h / g)?;
    CoverDatum::validated(
        cover.p,
        cover.group,
        None,
        wild,
        with_step(cover.certificate.clone(), Step::Isub { d }),
    )
}

/// Raises the upper jump by the integer i, keeping the inertia group:
/// h ↦ h + i·m. The new jump must stay prime to p.
pub fn sigma_plus(cover: &CoverDatum, i: u64) -> Result<CoverDatum, CoverError> {
    if !cover.branched_only_at_infinity() {
        return Err(CoverError::NotBranchedOnlyAtInfinity);
    }
    if i == 0 {
        return Err(CoverError::BadParameters("increment i must be >= 1".into()));
    }
    let m = cover.complement_order();
    let h = cover.lower_jump() + i * m;
    if h % cover.p == 0 {
        return Err(CoverError::ForbiddenResidue(h));
    }
    let wild = RamificationFiltration::new(cover.p, m, h)?;
    CoverDatum::validated(
        cover.p,
        cover.group,
        None,
        wild,
        with_step(cover.certificate.clone(), Step::SigmaPlus { i }),
    )
}

/// Replaces an S_n-cover by its A_n-subcover of index 2: the tame index
/// and the complement order are halved, the lower jump is unchanged, and
/// the upper jump doubles.
pub fn quotient_to_an(cover: &CoverDatum) -> Result<CoverDatum, CoverError> {
    let n = match cover.group {
        GroupFamily::Symmetric(n) => n,
        other => {
            return Err(CoverError::BadParameters(format!(
                "quotient_to_An needs a symmetric group, got {}",
                other.label()
            )))
        }
    };
    let m = cover.complement_order();
    if m % 2 != 0 {
        return Err(CoverError::BadParameters(format!(
            "complement order {m} must be even to halve"
        )));
    }
    let r1 = cover.tame_index_at_zero().unwrap_or(1);
    if r1 % 2 != 0 && r1 != 1 {
        return Err(CoverError::BadParameters(format!(
            "tame index {r1} must be even to halve"
        )));
    }
    let new_r1 = if r1 == 1 { 1 } else { r1 / 2 };
    let wild = RamificationFiltration::new(cover.p, m / 2, cover.lower_jump())?;
    CoverDatum::validated(
        cover.p,
        GroupFamily::Alternating(n),
        Some(new_r1),
        wild,
        with_step(cover.certificate.clone(), Step::QuotientToAn),
    )
}

/// The A_p-cover branched only at ∞ with inertia order p·m_t,
/// m_t = (p−1)/gcd(p−1, t(t−1)), and upper jump t(p−t)/(p−1): the raw
/// degree-p tower cover, passed to the alternating subcover when t is
/// even, then pulled back to remove the tame branch point.
pub fn seed_ujm(p: u64, t: u64) -> Result<CoverDatum, CoverError> {
    let raw = raw_cover(SeedId::UjM { p, t })?;
    let cover = if t % 2 == 1 {
        pullback(&raw, t)?
    } else {
        let quotient = quotient_to_an(&raw)?;
        pullback(&quotient, t / 2)?
    };
    let m_t = (p - 1) / (p - 1).gcd(&(t * (t - 1)));
    let expect_sigma = Ratio::new((t * (p - t)) as i64, (p - 1) as i64);
    if !cover.branched_only_at_infinity()
        || cover.complement_order() != m_t
        || cover.sigma() != expect_sigma
    {
        return Err(CoverError::ReplayMismatch(format!(
            "seed ujM({p},{t}) produced m = {}, sigma = {}; expected m = {m_t}, sigma = {expect_sigma}",
            cover.complement_order(),
            cover.sigma()
        )));
    }
    Ok(cover)
}

/// The A_(p+s)-cover branched only at ∞ with inertia order p·m_s,
/// m_s = (p−1)s/gcd(p−1, s(s+1)), and upper jump (p+s)/(p−1).
pub fn seed_ujgcd2(p: u64, s: u64) -> Result<CoverDatum, CoverError> {
    let cover = raw_cover(SeedId::UjGcd2 { p, s })?;
    let expect_sigma = Ratio::new((p + s) as i64, (p - 1) as i64);
    if cover.sigma() != expect_sigma {
        return Err(CoverError::ReplayMismatch(format!(
            "seed ujgcd2({p},{s}) produced sigma = {}, expected {expect_sigma}",
            cover.sigma()
        )));
    }
    Ok(cover)
}

/// The A_(p+1)-cover branched at two points carried by the s = 2 tower:
/// tame index m₂ = (p−1)/gcd(p−1, 3) at 0 and wild data (p·m₂/2, h) at ∞
/// with h = (p+2)/gcd(p−1, 3).
pub fn seed_ap1(p: u64) -> Result<CoverDatum, CoverError> {
    raw_cover(SeedId::Ap1 { p })
}

/// Replays a certificate from its seed.
pub fn replay(certificate: &Certificate) -> Result<CoverDatum, CoverError> {
    let mut cover = raw_cover(certificate.seed)?;
    for step in &certificate.steps {
        cover = match *step {
            Step::Pullback { r2 } => pullback(&cover, r2)?,
            Step::Isub { d } => isub(&cover, d)?,
            Step::SigmaPlus { i } => sigma_plus(&cover, i)?,
            Step::QuotientToAn => quotient_to_an(&cover)?,
        };
    }
    Ok(cover)
}

/// Replays the datum's certificate and checks that it reproduces the datum
/// exactly (group, branch data, inertia order, jumps, genus).
pub fn verify_replay(datum: &CoverDatum) -> Result<(), CoverError> {
    let replayed = replay(datum.certificate())?;
    if &replayed != datum {
        return Err(CoverError::ReplayMismatch(format!(
            "certificate {} replays to different data",
            datum.certificate().id()
        )));
    }
    Ok(())
}

/// Closed-form genus 1 + |A_p|·(t(p−t) − p − 1/m_t)/2p of the seed_ujm
/// cover, as an exact integer.
pub fn ujm_genus_closed_form(p: u64, t: u64) -> Result<BigInt, CoverError> {
    require_prime_ge5(p)?;
    if !(1 < t && t + 2 < p) {
        return Err(CoverError::BadParameters(format!("t = {t} out of range")));
    }
    let m_t = (p - 1) / (p - 1).gcd(&(t * (t - 1)));
    let order = BigInt::from(alternating_group_order(p));
    // (t(p-t) - p - 1/m_t) / 2p, all over the common denominator 2*p*m_t.
    let numer = BigInt::from((t * (p - t)) as i64 - p as i64) * BigInt::from(m_t) - 1;
    let denom = BigInt::from(2 * p * m_t);
    exact_genus(order, numer, denom)
}

/// Closed-form genus 1 + |A_(p+s)|·(s − 1/m_s)/2p of the seed_ujgcd2
/// cover, as an exact integer.
pub fn ujgcd2_genus_closed_form(p: u64, s: u64) -> Result<BigInt, CoverError> {
    require_prime_ge5(p)?;
    if !(2 <= s && s < p) {
        return Err(CoverError::BadParameters(format!("s = {s} out of range")));
    }
    let m_s = aps_complement_order(p, s);
    let order = BigInt::from(alternating_group_order(p + s));
    let numer = BigInt::from(s) * BigInt::from(m_s) - 1;
    let denom = BigInt::from(2 * p * m_s);
    exact_genus(order, numer, denom)
}

fn exact_genus(order: BigInt, numer: BigInt, denom: BigInt) -> Result<BigInt, CoverError> {
    let prod = order * numer;
    let (q, r) = prod.div_rem(&denom);
    if !r.is_zero() {
        return Err(CoverError::ReplayMismatch(
            "closed-form genus is not an integer".into(),
        ));
    }
    Ok(q + 1)
}

use num_traits::Zero;
