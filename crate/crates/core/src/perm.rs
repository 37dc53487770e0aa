//! Permutation arithmetic and brute-force verification of the normalizer,
//! centralizer, and jump-residue facts that bound inertia groups in
//! symmetric and alternating groups.
//!
//! Brute force enumerates Sₙ in full and is capped at n = 9; beyond that
//! only the closed formulas are exposed, labeled as such by callers.

use std::collections::BTreeSet;
use std::collections::HashSet;
use std::fmt;

use num_bigint::BigUint;
use thiserror::Error;

use crate::algebra::is_odd_prime;
use crate::ramification::factorial;

/// Full enumeration of Sₙ is allowed up to this degree (9! = 362880).
pub const MAX_BRUTE_FORCE_DEGREE: usize = 9;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("images are not a bijection on 1..={0}")]
    NotABijection(usize),
    #[error("degree {0} exceeds the brute-force cap {MAX_BRUTE_FORCE_DEGREE}")]
    TooLargeForEnumeration(usize),
    #[error("permutation is not a single cycle of odd prime length")]
    NotAPrimeCycle,
    #[error("element does not normalize the cycle group")]
    NotNormalizing,
    #[error("invalid cycle notation: {0}")]
    Parse(String),
    #[error("invalid inertia shape: {0}")]
    InvalidShape(String),
}

/// A permutation of {1, …, n}, stored as 0-indexed images.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// Builds from 1-indexed images: `images[i]` is the image of i + 1.
    pub fn from_one_indexed(images: &[usize]) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &im in images {
            if im == 0 || im > n || seen[im - 1] {
                return Err(PermError::NotABijection(n));
            }
            seen[im - 1] = true;
        }
        Ok(Permutation { images: images.iter().map(|&i| i - 1).collect() })
    }

    /// Builds from disjoint cycles over {1, …, n}; omitted points are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a == 0 || a > n || b == 0 || b > n {
                    return Err(PermError::Parse(format!("entry outside 1..={n}")));
                }
                if touched[a - 1] {
                    return Err(PermError::Parse(format!("point {a} repeated")));
                }
                touched[a - 1] = true;
                images[a - 1] = b - 1;
            }
        }
        let perm = Permutation { images };
        if !perm.is_bijection() {
            return Err(PermError::NotABijection(n));
        }
        Ok(perm)
    }

    /// Parses cycle notation such as `"(1 2 3 4 5)(6 7)"`.
    pub fn parse_cycles(n: usize, text: &str) -> Result<Self, PermError> {
        let trimmed = text.trim();
        if trimmed.is_empty() || trimmed == "()" {
            return Ok(Self::identity(n));
        }
        let mut cycles = Vec::new();
        let mut rest = trimmed;
        while !rest.is_empty() {
            let Some(open) = rest.find('(') else {
                return Err(PermError::Parse("expected '('".into()));
            };
            if !rest[..open].trim().is_empty() {
                return Err(PermError::Parse("unexpected text between cycles".into()));
            }
            let Some(close) = rest.find(')') else {
                return Err(PermError::Parse("missing ')'".into()));
            };
            let body = &rest[open + 1..close];
            let cycle: Result<Vec<usize>, _> = body
                .split(|c: char| c == ' ' || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| PermError::Parse(format!("bad entry {t:?}"))))
                .collect();
            let cycle = cycle?;
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = rest[close + 1..].trim_start();
        }
        Self::from_cycles(n, &cycles)
    }

    fn is_bijection(&self) -> bool {
        let n = self.images.len();
        let mut seen = vec![false; n];
        for &im in &self.images {
            if im >= n || seen[im] {
                return false;
            }
            seen[im] = true;
        }
        true
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-indexed point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    /// self ∘ other: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree());
        let images = other.images.iter().map(|&i| self.images[i]).collect();
        Permutation { images }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &im) in self.images.iter().enumerate() {
            images[im] = i;
        }
        Permutation { images }
    }

    pub fn conjugate_by(&self, g: &Self) -> Self {
        g.compose(self).compose(&g.inverse())
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::identity(self.degree());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.compose(&base);
            }
        }
        acc
    }

    /// Disjoint cycles of length >= 2, each starting at its least point,
    /// ordered by least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cycle.push(cur + 1);
                cur = self.images[cur];
            }
            out.push(cycle);
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .map(|c| c.len() as u64)
            .fold(1, num_integer::lcm)
    }

    /// True for even permutations.
    pub fn is_even(&self) -> bool {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        transpositions % 2 == 0
    }

    /// Extends to degree `n` by fixed points.
    pub fn embed(&self, n: usize) -> Self {
        assert!(n >= self.degree());
        let mut images = self.images.clone();
        images.extend(self.degree()..n);
        Permutation { images }
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        self.compose(other) == other.compose(self)
    }

    /// The odd prime length when this is a single cycle plus fixed points.
    pub fn prime_cycle_length(&self) -> Result<u64, PermError> {
        let cycles = self.cycles();
        if cycles.len() != 1 {
            return Err(PermError::NotAPrimeCycle);
        }
        let len = cycles[0].len() as u64;
        if !is_odd_prime(len) {
            return Err(PermError::NotAPrimeCycle);
        }
        Ok(len)
    }

    /// The standard p-cycle (1 2 … p) inside S_n.
    pub fn standard_cycle(p: u64, n: usize) -> Self {
        let cycle: Vec<usize> = (1..=p as usize).collect();
        Self::from_cycles(n, &[cycle]).expect("standard cycle is valid").embed(n)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, pt) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{pt}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn for_each_permutation(n: usize, mut f: impl FnMut(&Permutation)) {
    // Heap's algorithm over the image vector.
    let mut images: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    f(&Permutation { images: images.clone() });
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                images.swap(0, i);
            } else {
                images.swap(c[i], i);
            }
            f(&Permutation { images: images.clone() });
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

fn cycle_group(tau: &Permutation) -> (u64, HashSet<Permutation>) {
    let p = tau.order();
    let mut group = HashSet::new();
    let mut cur = Permutation::identity(tau.degree());
    for _ in 0..p {
        cur = cur.compose(tau);
        group.insert(cur.clone());
    }
    (p, group)
}

/// |N(⟨τ⟩)| in Sₙ (or its even part) by full enumeration. `tau` must be a
/// p-cycle for an odd prime p; enumeration requires n ≤ 9.
pub fn normalizer_order_bruteforce(
    n: usize,
    tau: &Permutation,
    even_only: bool,
) -> Result<u64, PermError> {
    if n > MAX_BRUTE_FORCE_DEGREE {
        return Err(PermError::TooLargeForEnumeration(n));
    }
    if tau.degree() != n {
        return Err(PermError::NotABijection(n));
    }
    tau.prime_cycle_length()?;
    let (_, powers) = cycle_group(tau);
    let mut count = 0u64;
    for_each_permutation(n, |sigma| {
        if even_only && !sigma.is_even() {
            return;
        }
        if powers.contains(&tau.conjugate_by(sigma)) {
            count += 1;
        }
    });
    Ok(count)
}

/// |C(⟨τ⟩)| in Sₙ (or its even part) by full enumeration.
pub fn centralizer_order_bruteforce(
    n: usize,
    tau: &Permutation,
    even_only: bool,
) -> Result<u64, PermError> {
    if n > MAX_BRUTE_FORCE_DEGREE {
        return Err(PermError::TooLargeForEnumeration(n));
    }
    if tau.degree() != n {
        return Err(PermError::NotABijection(n));
    }
    let mut count = 0u64;
    for_each_permutation(n, |sigma| {
        if even_only && !sigma.is_even() {
            return;
        }
        if sigma.commutes_with(tau) {
            count += 1;
        }
    });
    Ok(count)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ambient {
    Symmetric,
    Alternating,
}

/// Closed-form normalizer order of ⟨τ⟩ for a p-cycle τ in S_{p+s} or
/// A_{p+s}: s!·p·(p−1), halved in the alternating group.
pub fn normalizer_order_formula(p: u64, s: u64, ambient: Ambient) -> Result<u64, PermError> {
    if !is_odd_prime(p) || p < 5 {
        return Err(PermError::InvalidShape(format!("p = {p} must be an odd prime >= 5")));
    }
    if s >= p {
        return Err(PermError::InvalidShape(format!("s = {s} must satisfy 0 <= s < p")));
    }
    let mut fact = 1u64;
    for k in 2..=s {
        fact *= k;
    }
    let full = fact * p * (p - 1);
    Ok(match ambient {
        Ambient::Symmetric => full,
        Ambient::Alternating => full / 2,
    })
}

/// Closed-form centralizer order of ⟨τ⟩: p·s!, halved in the alternating
/// group when s ≥ 2 (for s ≤ 1 the centralizer is already even).
pub fn centralizer_order_formula(p: u64, s: u64, ambient: Ambient) -> Result<u64, PermError> {
    if !is_odd_prime(p) || p < 5 {
        return Err(PermError::InvalidShape(format!("p = {p} must be an odd prime >= 5")));
    }
    if s >= p {
        return Err(PermError::InvalidShape(format!("s = {s} must satisfy 0 <= s < p")));
    }
    let mut fact = 1u64;
    for k in 2..=s {
        fact *= k;
    }
    Ok(match ambient {
        Ambient::Symmetric => p * fact,
        Ambient::Alternating if s >= 2 => p * fact / 2,
        Ambient::Alternating => p,
    })
}

/// Number of Sylow p-subgroups of S_{p+s}: (p+s)!/(s!·p·(p−1)).
pub fn sylow_count_formula(p: u64, s: u64) -> Result<BigUint, PermError> {
    let normalizer = normalizer_order_formula(p, s, Ambient::Symmetric)?;
    Ok(factorial(p + s) / BigUint::from(normalizer))
}

/// The unique a ∈ (ℤ/p)ˣ with βτβ⁻¹ = τ^a, or an error when β does not
/// normalize ⟨τ⟩.
pub fn conj_exponent(beta: &Permutation, tau: &Permutation) -> Result<u64, PermError> {
    let p = tau.prime_cycle_length()?;
    let conj = tau.conjugate_by(beta);
    let mut power = Permutation::identity(tau.degree());
    for a in 1..=p {
        power = power.compose(tau);
        if power == conj {
            return Ok(a % p);
        }
    }
    Err(PermError::NotNormalizing)
}

/// Smallest primitive root mod p.
pub fn primitive_root(p: u64) -> u64 {
    (2..p)
        .find(|&g| multiplicative_order(g, p) == p - 1)
        .expect("every odd prime has a primitive root")
}

/// The permutation i ↦ g·i mod p on {1, …, p} (fixing everything else in
/// S_n), where g is the smallest primitive root mod p. It conjugates the
/// standard p-cycle to its g-th power and is always odd.
pub fn theta(p: u64, n: usize) -> Result<Permutation, PermError> {
    if !is_odd_prime(p) || (p as usize) > n {
        return Err(PermError::InvalidShape(format!("need an odd prime p <= n, got p = {p}")));
    }
    let g = primitive_root(p);
    let mut images = vec![0usize; n];
    for i in 1..=n {
        images[i - 1] = if i <= p as usize {
            let v = (g as usize * i) % p as usize;
            if v == 0 {
                p as usize
            } else {
                v
            }
        } else {
            i
        };
    }
    Permutation::from_one_indexed(&images)
}

/// Shape of an inertia group ℤ/p ⋊ ℤ/m: the complement order m, the order
/// m' of the prime-to-p center, and the conjugation exponent a with
/// βτβ⁻¹ = τ^a, whose multiplicative order is m/m'.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InertiaGroupShape {
    p: u64,
    m: u64,
    m_prime: u64,
    conj_exponent: u64,
}

fn multiplicative_order(a: u64, p: u64) -> u64 {
    let mut x = a % p;
    let mut ord = 1;
    while x != 1 {
        x = x * a % p;
        ord += 1;
    }
    ord
}

impl InertiaGroupShape {
    /// Builds the shape from (p, m, m'), choosing the smallest conjugation
    /// exponent of the required order. Fails when no element of (ℤ/p)ˣ has
    /// order m/m', i.e. when m/m' does not divide p − 1.
    pub fn new(p: u64, m: u64, m_prime: u64) -> Result<Self, PermError> {
        if !is_odd_prime(p) {
            return Err(PermError::InvalidShape(format!("p = {p} is not an odd prime")));
        }
        if m == 0 || m % p == 0 {
            return Err(PermError::InvalidShape(format!("m = {m} must be prime to p")));
        }
        if m_prime == 0 || m % m_prime != 0 {
            return Err(PermError::InvalidShape(format!("m' = {m_prime} must divide m = {m}")));
        }
        let target = m / m_prime;
        if (p - 1) % target != 0 {
            return Err(PermError::InvalidShape(format!(
                "no conjugation exponent of order {target} exists mod {p}"
            )));
        }
        let conj = (1..p)
            .find(|&a| multiplicative_order(a, p) == target)
            .expect("cyclic group has elements of every dividing order");
        Ok(InertiaGroupShape { p, m, m_prime, conj_exponent: conj })
    }

    /// Reads the shape off explicit generators: τ a p-cycle and β a
    /// normalizing element; m = |β|, a the conjugation exponent, and
    /// m' = m / ord(a), the order of ⟨β⟩ ∩ C(⟨τ⟩).
    pub fn from_generators(tau: &Permutation, beta: &Permutation) -> Result<Self, PermError> {
        let p = tau.prime_cycle_length()?;
        let a = conj_exponent(beta, tau)?;
        let m = beta.order();
        if m % p == 0 {
            return Err(PermError::InvalidShape("complement order divisible by p".into()));
        }
        let ord = multiplicative_order(a, p);
        Ok(InertiaGroupShape { p, m, m_prime: m / ord, conj_exponent: a })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn complement_order(&self) -> u64 {
        self.m
    }

    pub fn center_order(&self) -> u64 {
        self.m_prime
    }

    pub fn conj_exponent_value(&self) -> u64 {
        self.conj_exponent
    }

    /// The lower-jump residues mod m compatible with the centralizer
    /// order: { h mod m : gcd(h, m) = m' }.
    pub fn admissible_jump_residues(&self) -> BTreeSet<u64> {
        if self.m == 1 {
            return std::iter::once(0).collect();
        }
        (0..self.m)
            .filter(|&h| num_integer::gcd(h, self.m) == self.m_prime)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_notation_round_trip() {
        let p = Permutation::parse_cycles(7, "(1 2 3 4 5)(6 7)").unwrap();
        assert_eq!(p.to_string(), "(1 2 3 4 5)(6 7)");
        assert_eq!(p.apply(5), 1);
        assert_eq!(p.apply(6), 7);
        assert_eq!(p.order(), 10);
        assert!(!p.is_even()); // 4 + 1 transpositions

        let id = Permutation::parse_cycles(4, "()").unwrap();
        assert_eq!(id, Permutation::identity(4));

        assert!(Permutation::parse_cycles(5, "(1 2")
            .is_err());
        assert!(Permutation::parse_cycles(5, "(1 2)(2 3)").is_err());
    }

    #[test]
    fn normalizer_bruteforce_a5() {
        let tau = Permutation::standard_cycle(5, 5);
        assert_eq!(normalizer_order_bruteforce(5, &tau, true).unwrap(), 10);
        assert_eq!(normalizer_order_bruteforce(5, &tau, false).unwrap(), 20);
    }

    #[test]
    fn normalizer_bruteforce_s7_five_cycle() {
        let tau = Permutation::standard_cycle(5, 7);
        assert_eq!(normalizer_order_bruteforce(7, &tau, false).unwrap(), 40);
        assert_eq!(normalizer_order_bruteforce(7, &tau, true).unwrap(), 20);
    }

    #[test]
    fn normalizer_bruteforce_a7_seven_cycle() {
        let tau = Permutation::standard_cycle(7, 7);
        assert_eq!(normalizer_order_bruteforce(7, &tau, true).unwrap(), 21);
    }

    #[test]
    fn normalizer_formula_cases() {
        assert_eq!(normalizer_order_formula(5, 2, Ambient::Symmetric).unwrap(), 40);
        assert_eq!(normalizer_order_formula(5, 0, Ambient::Alternating).unwrap(), 10);
        assert_eq!(normalizer_order_formula(7, 3, Ambient::Symmetric).unwrap(), 252);
    }

    #[test]
    fn formula_matches_bruteforce_small() {
        for n in 5..=8usize {
            for p in [5u64, 7] {
                if (p as usize) > n {
                    continue;
                }
                let s = n as u64 - p;
                let tau = Permutation::standard_cycle(p, n);
                let brute_s = normalizer_order_bruteforce(n, &tau, false).unwrap();
                let brute_a = normalizer_order_bruteforce(n, &tau, true).unwrap();
                assert_eq!(brute_s, normalizer_order_formula(p, s, Ambient::Symmetric).unwrap());
                assert_eq!(brute_a, normalizer_order_formula(p, s, Ambient::Alternating).unwrap());
                let cent_s = centralizer_order_bruteforce(n, &tau, false).unwrap();
                let cent_a = centralizer_order_bruteforce(n, &tau, true).unwrap();
                assert_eq!(cent_s, centralizer_order_formula(p, s, Ambient::Symmetric).unwrap());
                assert_eq!(cent_a, centralizer_order_formula(p, s, Ambient::Alternating).unwrap());
            }
        }
    }

    #[test]
    fn brute_force_cap() {
        let tau = Permutation::standard_cycle(5, 10);
        assert_eq!(
            normalizer_order_bruteforce(10, &tau, false),
            Err(PermError::TooLargeForEnumeration(10))
        );
    }

    #[test]
    fn sylow_count_small() {
        // 126 Sylow 5-subgroups in S_7.
        assert_eq!(sylow_count_formula(5, 2).unwrap(), BigUint::from(126u32));
    }

    #[test]
    fn conj_exponent_cases() {
        let tau = Permutation::standard_cycle(5, 7);
        // Self-conjugation.
        assert_eq!(conj_exponent(&tau, &tau).unwrap(), 1);
        // A disjoint cycle commutes.
        let omega = Permutation::from_cycles(7, &[vec![6, 7]]).unwrap();
        assert_eq!(conj_exponent(&omega, &tau).unwrap(), 1);
        // A non-normalizing element.
        let bad = Permutation::from_cycles(7, &[vec![1, 2]]).unwrap();
        assert_eq!(conj_exponent(&bad, &tau), Err(PermError::NotNormalizing));
    }

    #[test]
    fn theta_conjugates_to_primitive_power() {
        for p in [5u64, 7] {
            let n = p as usize;
            let tau = Permutation::standard_cycle(p, n);
            let th = theta(p, n).unwrap();
            let g = primitive_root(p);
            let a = conj_exponent(&th, &tau).unwrap();
            assert_eq!(a, g);
            assert_eq!(multiplicative_order(a, p), p - 1);
            // The normalizer order in A_p forces theta odd.
            assert!(!th.is_even(), "theta must be odd for p = {p}");
            // theta^2 lands in A_p with conjugation exponent of order (p-1)/2.
            let sq = th.compose(&th);
            assert!(sq.is_even());
            let a2 = conj_exponent(&sq, &tau).unwrap();
            assert_eq!(multiplicative_order(a2, p), (p - 1) / 2);
        }
    }

    #[test]
    fn conj_exponent_is_a_homomorphism() {
        let p = 7u64;
        let n = 9usize;
        let tau = Permutation::standard_cycle(p, n);
        let th = theta(p, n).unwrap();
        let omega = Permutation::from_cycles(n, &[vec![8, 9]]).unwrap();
        let gens = [tau.clone(), th.clone(), omega.clone(), th.compose(&omega)];
        for b1 in &gens {
            for b2 in &gens {
                let lhs = conj_exponent(&b1.compose(b2), &tau).unwrap();
                let rhs = conj_exponent(b1, &tau).unwrap() * conj_exponent(b2, &tau).unwrap() % p;
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn admissible_residues_examples() {
        let shape = InertiaGroupShape::new(7, 6, 1).unwrap();
        assert_eq!(shape.admissible_jump_residues(), [1, 5].into_iter().collect());

        let shape = InertiaGroupShape::new(11, 10, 2).unwrap();
        assert_eq!(shape.admissible_jump_residues(), [2, 4, 6, 8].into_iter().collect());

        let shape = InertiaGroupShape::new(5, 1, 1).unwrap();
        assert_eq!(shape.admissible_jump_residues(), [0].into_iter().collect());
    }

    #[test]
    fn shape_rejects_impossible_orders() {
        // m/m' = 4 does not divide 7 - 1.
        assert!(InertiaGroupShape::new(7, 4, 1).is_err());
        assert!(InertiaGroupShape::new(5, 10, 1).is_err()); // p | m
    }

    #[test]
    fn shape_from_generators_matches_center() {
        // Small explicit subgroups <tau, beta> of A_{p+s}.
        let p = 5u64;
        let n = 8usize;
        let tau = Permutation::standard_cycle(p, n);
        let th = theta(p, n).unwrap();
        let omega3 = Permutation::from_cycles(n, &[vec![6, 7, 8]]).unwrap();
        // beta = theta^2 * omega3 is even; m = lcm(2, 3) = 6.
        let beta = th.compose(&th).compose(&omega3);
        assert!(beta.is_even());
        let shape = InertiaGroupShape::from_generators(&tau, &beta).unwrap();
        assert_eq!(shape.complement_order(), 6);
        // m' = |<beta> ∩ C(<tau>)| counted directly.
        let mut center = 0u64;
        let mut cur = Permutation::identity(n);
        for _ in 0..shape.complement_order() {
            cur = cur.compose(&beta);
            if cur.commutes_with(&tau) {
                center += 1;
            }
        }
        assert_eq!(shape.center_order(), center);
        assert_eq!(
            multiplicative_order(shape.conj_exponent_value(), p),
            shape.complement_order() / shape.center_order()
        );
    }
}
