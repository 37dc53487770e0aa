//! The full small-prime verification sweep over p ∈ {5, 7, 11, 13}.
//!
//! Each criterion is a self-contained check with its expected values and
//! runtime budget pinned here; the acceptance test target and the CLI
//! `selftest` command both run these.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cover::{
    enumerate_realizable, isub, necessary_conditions, pullback, replay, seed_ap1, seed_ujgcd2,
    seed_ujm, sigma_plus, threshold_h0, threshold_h1, threshold_hs, verify_inertia_conjecture,
    verify_replay, CoverDatum, IcFamily, JumpFamily, JumpQuery,
};
use crate::newton::{
    ap_complement_order, aps_complement_order, lower_convex_hull, lower_jumps,
    ramification_polygon_ap, ramification_polygon_aps, LatticePoint,
};
use crate::perm::{normalizer_order_bruteforce, normalizer_order_formula, Ambient, Permutation};
use crate::ramification::{riemann_hurwitz_genus, BranchPointData, RamificationFiltration};

pub const PRIMES: [u64; 4] = [5, 7, 11, 13];

#[derive(Debug, Clone)]
pub struct CriterionOutcome {
    pub index: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CriterionOutcome {
    pub fn line(&self) -> String {
        format!(
            "criterion {} ({}): {} — {}",
            self.index,
            self.name,
            if self.passed { "PASS" } else { "FAIL" },
            self.detail
        )
    }
}

pub fn run_all() -> Vec<CriterionOutcome> {
    let checks: [(&'static str, fn() -> Result<String, String>); 7] = [
        ("newton polygons by direct expansion", criterion_1),
        ("genus cross-check", criterion_2),
        ("group-theory brute force", criterion_3),
        ("realizable-jump containment", criterion_4),
        ("inertia-group certificates", criterion_5),
        ("threshold formulas", criterion_6),
        ("property suites", criterion_7),
    ];
    checks
        .iter()
        .enumerate()
        .map(|(i, (name, f))| match f() {
            Ok(detail) => CriterionOutcome { index: i + 1, name, passed: true, detail },
            Err(detail) => CriterionOutcome { index: i + 1, name, passed: false, detail },
        })
        .collect()
}

fn budget(start: Instant, limit_secs: u64, what: &str) -> Result<String, String> {
    let elapsed = start.elapsed();
    if elapsed.as_secs() >= limit_secs {
        return Err(format!("{what} exceeded the {limit_secs}s budget: {elapsed:.2?}"));
    }
    Ok(format!("{what} in {elapsed:.2?}"))
}

/// Every valid polygon over the sweep primes matches the closed forms
/// exactly: vertices {(0, m(p−t)), (p−1, 0), (pm−1, 0)} for the degree-p
/// tower, and a single integral negative slope −m(p+s)/(p−1) for the
/// degree-(p+s) tower.
pub fn criterion_1() -> Result<String, String> {
    let start = Instant::now();
    let mut count = 0usize;
    for p in PRIMES {
        for t in 2..=(p - 3) {
            let m = ap_complement_order(p, t);
            let poly = ramification_polygon_ap(p, t, Some(m)).map_err(|e| e.to_string())?;
            let expected = vec![
                (0, (m * (p - t)) as i64),
                ((p - 1) as i64, 0),
                ((p * m - 1) as i64, 0),
            ];
            if poly.vertices() != expected.as_slice() {
                return Err(format!(
                    "(p,t) = ({p},{t}): vertices {:?} != {expected:?}",
                    poly.vertices()
                ));
            }
            let jumps = lower_jumps(&poly).map_err(|e| e.to_string())?;
            if jumps != vec![m * (p - t) / (p - 1)] {
                return Err(format!("(p,t) = ({p},{t}): jumps {jumps:?}"));
            }
            count += 1;
        }
        for s in 2..p {
            if p == 7 && s == 2 {
                continue;
            }
            let m = aps_complement_order(p, s);
            let poly = ramification_polygon_aps(p, s, Some(m)).map_err(|e| e.to_string())?;
            let expected_slope = Ratio::new(-((m * (p + s)) as i64), (p - 1) as i64);
            if poly.slopes().first() != Some(&expected_slope) {
                return Err(format!(
                    "(p,s) = ({p},{s}): slope {:?} != {expected_slope}",
                    poly.slopes().first()
                ));
            }
            if lower_jumps(&poly).is_err() {
                return Err(format!("(p,s) = ({p},{s}): non-integral slope"));
            }
            count += 1;
        }
    }
    budget(start, 10, &format!("{count} polygons verified"))
}

/// Riemann–Hurwitz recomputation equals the closed-form genera for every
/// seed, with the spot values genus(7,3) = 721 and genus(5,2) = 442.
pub fn criterion_2() -> Result<String, String> {
    let start = Instant::now();
    let mut count = 0usize;
    for p in PRIMES {
        for t in 2..=(p - 3) {
            let cover = seed_ujm(p, t).map_err(|e| e.to_string())?;
            let rh = cover.genus().map_err(|e| e.to_string())?;
            let closed = crate::cover::ujm_genus_closed_form(p, t).map_err(|e| e.to_string())?;
            if rh != closed {
                return Err(format!("ujM({p},{t}): RH genus {rh} != closed form {closed}"));
            }
            count += 1;
        }
        for s in 2..p {
            if p == 7 && s == 2 {
                continue;
            }
            let cover = seed_ujgcd2(p, s).map_err(|e| e.to_string())?;
            let rh = cover.genus().map_err(|e| e.to_string())?;
            let closed =
                crate::cover::ujgcd2_genus_closed_form(p, s).map_err(|e| e.to_string())?;
            if rh != closed {
                return Err(format!("ujgcd2({p},{s}): RH genus {rh} != closed form {closed}"));
            }
            count += 1;
        }
    }
    let g73 = seed_ujm(7, 3).and_then(|c| c.genus()).map_err(|e| e.to_string())?;
    if g73 != BigInt::from(721) {
        return Err(format!("genus(7,3) = {g73}, expected 721"));
    }
    let g52 = seed_ujgcd2(5, 2).and_then(|c| c.genus()).map_err(|e| e.to_string())?;
    if g52 != BigInt::from(442) {
        return Err(format!("genus(5,2) = {g52}, expected 442"));
    }
    budget(start, 1, &format!("{count} genera cross-checked"))
}

/// Normalizer orders by full enumeration match the closed formulas:
/// |N_{A_5}| = 10, |N_{A_7}| = 21 for a 7-cycle, |N_{S_7}| = 40 for a
/// 5-cycle.
pub fn criterion_3() -> Result<String, String> {
    let start = Instant::now();
    let cases: [(u64, usize, bool, u64); 3] =
        [(5, 5, true, 10), (7, 7, true, 21), (5, 7, false, 40)];
    for (p, n, even_only, expected) in cases {
        let tau = Permutation::standard_cycle(p, n);
        let brute = normalizer_order_bruteforce(n, &tau, even_only).map_err(|e| e.to_string())?;
        if brute != expected {
            return Err(format!(
                "p-cycle p = {p} in degree {n} (even_only = {even_only}): {brute} != {expected}"
            ));
        }
        let s = n as u64 - p;
        let ambient = if even_only { Ambient::Alternating } else { Ambient::Symmetric };
        let formula = normalizer_order_formula(p, s, ambient).map_err(|e| e.to_string())?;
        if formula != expected {
            return Err(format!("formula gave {formula}, expected {expected}"));
        }
    }
    budget(start, 30, "3 normalizer orders enumerated")
}

fn rat(n: i64, d: i64) -> Ratio<i64> {
    Ratio::new(n, d)
}

struct ContainmentCase {
    p: u64,
    bound: Ratio<i64>,
    realized: Vec<Ratio<i64>>,
    unknown: Vec<Ratio<i64>>,
}

/// The published small-prime table: previously known columns plus the new
/// tower values must all be realized; the open column must stay unrealized
/// (and must still satisfy the necessary conditions).
fn containment_cases() -> Vec<ContainmentCase> {
    vec![
        ContainmentCase {
            p: 5,
            bound: rat(6, 1),
            realized: vec![rat(3, 1), rat(4, 1), rat(6, 1), rat(3, 2), rat(7, 2), rat(9, 2)],
            unknown: vec![rat(2, 1)],
        },
        ContainmentCase {
            p: 7,
            bound: rat(8, 1),
            realized: vec![
                rat(5, 1), rat(6, 1), rat(8, 1),
                rat(5, 3), rat(8, 3), rat(10, 3),
                rat(2, 1), rat(3, 1), rat(4, 1),
            ],
            unknown: vec![rat(4, 3)],
        },
        ContainmentCase {
            p: 11,
            bound: rat(12, 1),
            realized: vec![
                rat(9, 1), rat(10, 1), rat(12, 1),
                rat(9, 5), rat(14, 5), rat(19, 5),
                rat(3, 1), rat(4, 1), rat(5, 1), rat(6, 1), rat(7, 1), rat(8, 1),
                rat(12, 5),
            ],
            unknown: vec![rat(2, 1), rat(6, 5), rat(7, 5), rat(8, 5)],
        },
        ContainmentCase {
            p: 13,
            bound: rat(15, 1),
            realized: vec![
                rat(11, 1), rat(12, 1), rat(14, 1), rat(15, 1),
                rat(11, 2), rat(15, 2), rat(17, 2),
                rat(11, 3), rat(14, 3), rat(17, 3),
                rat(11, 6), rat(17, 6), rat(23, 6),
                rat(3, 1), rat(4, 1), rat(5, 1), rat(6, 1), rat(7, 1),
                rat(8, 1), rat(9, 1), rat(10, 1),
                rat(5, 2), rat(7, 2), rat(9, 2),
                rat(10, 3),
            ],
            unknown: vec![
                rat(2, 1), rat(3, 2), rat(4, 3), rat(5, 3), rat(7, 3), rat(8, 3), rat(7, 6),
            ],
        },
    ]
}

/// Containment of the published realized values and non-realization of the
/// open ones, per prime, within the per-prime runtime budget.
pub fn criterion_4() -> Result<String, String> {
    let mut total = 0usize;
    for case in containment_cases() {
        let start = Instant::now();
        let jumps =
            enumerate_realizable(case.p, JumpFamily::Ap, case.bound).map_err(|e| e.to_string())?;
        let sigmas: Vec<Ratio<i64>> = jumps.iter().map(|j| j.sigma()).collect();
        for v in &case.realized {
            if !sigmas.contains(v) {
                return Err(format!("p = {}: sigma = {v} not realized", case.p));
            }
        }
        for v in &case.unknown {
            if sigmas.contains(v) {
                return Err(format!(
                    "p = {}: sigma = {v} must stay unknown but was realized",
                    case.p
                ));
            }
            let q = JumpQuery::new(case.p, JumpFamily::Ap, *v).map_err(|e| e.to_string())?;
            if necessary_conditions(&q).is_err() {
                return Err(format!(
                    "p = {}: sigma = {v} should be classified unknown, not failing",
                    case.p
                ));
            }
        }
        // Every certificate behind a realized claim replays.
        for j in &jumps {
            verify_replay(j.datum()).map_err(|e| e.to_string())?;
        }
        total += case.realized.len();
        if start.elapsed().as_secs() >= 5 {
            return Err(format!("p = {} exceeded the 5s budget", case.p));
        }
    }
    Ok(format!("{total} published jump values realized with certificates"))
}

/// The inertia sweep succeeds for A_p at all four primes over the divisors
/// of (p−1)/2, and for A_(p+2) at p = 5, 11 over the divisors of p−1;
/// every certificate replays to the claimed inertia order.
pub fn criterion_5() -> Result<String, String> {
    let start = Instant::now();
    let mut total = 0usize;
    for p in PRIMES {
        let certs = verify_inertia_conjecture(p, IcFamily::Ap).map_err(|e| e.to_string())?;
        let expect: Vec<u64> = (1..=(p - 1) / 2).filter(|d| ((p - 1) / 2) % d == 0).collect();
        let got: Vec<u64> = certs.iter().map(|(m, _)| *m).collect();
        if got != expect {
            return Err(format!("A_{p}: realized m set {got:?} != {expect:?}"));
        }
        for (m, cert) in &certs {
            let cover = replay(cert).map_err(|e| e.to_string())?;
            if cover.inertia_order() != p * m {
                return Err(format!("A_{p}: certificate for m = {m} replays wrong"));
            }
        }
        total += certs.len();
    }
    for p in [5u64, 11] {
        let certs = verify_inertia_conjecture(p, IcFamily::Ap2).map_err(|e| e.to_string())?;
        let expect: Vec<u64> = (1..=(p - 1)).filter(|d| (p - 1) % d == 0).collect();
        let got: Vec<u64> = certs.iter().map(|(m, _)| *m).collect();
        if got != expect {
            return Err(format!("A_{}: realized m set {got:?} != {expect:?}", p + 2));
        }
        total += certs.len();
    }
    if verify_inertia_conjecture(7, IcFamily::Ap2).is_ok() {
        return Err("p = 7 is 1 mod 3 and must be rejected for A_9".into());
    }
    let _ = budget(start, 1, "")?;
    Ok(format!("{total} inertia orders certified"))
}

/// Threshold formulas and the window sweep: every prime-to-p integer jump
/// in [h, h + 3m] above each threshold is realized with inertia ℤ/p.
pub fn criterion_6() -> Result<String, String> {
    let start = Instant::now();
    let h0: Vec<u64> = PRIMES
        .iter()
        .map(|&p| threshold_h0(p))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    if h0 != vec![3, 2, 3, 7] {
        return Err(format!("h0 over {PRIMES:?} = {h0:?}, expected [3, 2, 3, 7]"));
    }
    let hs = threshold_hs(11, 2).map_err(|e| e.to_string())?;
    if hs != 13 {
        return Err(format!("h_s(11,2) = {hs}, expected 13"));
    }
    let h1_5 = threshold_h1(5).map_err(|e| e.to_string())?;
    let h1_11 = threshold_h1(11).map_err(|e| e.to_string())?;
    if (h1_5, h1_11) != (14, 26) {
        return Err(format!("h1(5), h1(11) = {h1_5}, {h1_11}, expected 14, 26"));
    }

    let mut checked = 0usize;
    let mut window_sweep = |p: u64,
                            family: JumpFamily,
                            threshold: u64,
                            window_m: u64|
     -> Result<(), String> {
        let top = threshold + 3 * window_m;
        let jumps = enumerate_realizable(p, family, rat(top as i64, 1))
            .map_err(|e| e.to_string())?;
        let integer_jumps: Vec<u64> = jumps
            .iter()
            .filter(|j| j.inertia_order() == p)
            .map(|j| j.lower_jump())
            .collect();
        for h in threshold..=top {
            if h % p == 0 {
                continue;
            }
            if !integer_jumps.contains(&h) {
                return Err(format!(
                    "family {} at p = {p}: jump h = {h} in [{threshold}, {top}] not realized",
                    family.label(p)
                ));
            }
            checked += 1;
        }
        Ok(())
    };
    for &p in &PRIMES {
        window_sweep(p, JumpFamily::Ap, threshold_h0(p).unwrap(), (p - 1) / 2)?;
    }
    window_sweep(11, JumpFamily::Aps { s: 2 }, 13, aps_complement_order(11, 2))?;
    window_sweep(5, JumpFamily::Aps { s: 1 }, 14, 4)?;
    window_sweep(11, JumpFamily::Aps { s: 1 }, 26, 10)?;
    let _ = budget(start, 5, "")?;
    Ok(format!("thresholds pinned; {checked} integer jumps realized above them"))
}

fn all_seeds() -> Vec<CoverDatum> {
    let mut seeds = Vec::new();
    for p in PRIMES {
        for t in 2..=(p - 3) {
            seeds.push(seed_ujm(p, t).expect("valid seed"));
        }
        for s in 2..p {
            if p == 7 && s == 2 {
                continue;
            }
            seeds.push(seed_ujgcd2(p, s).expect("valid seed"));
        }
        if p != 7 {
            seeds.push(seed_ap1(p).expect("valid seed"));
        }
    }
    seeds
}

/// Randomized property sweeps with a fixed seed: hull dominance over 500
/// point sets, 200 replay-fuzzed rule chains per seed with admissibility
/// enforced on every constructed cover, and the series valuation laws.
pub fn criterion_7() -> Result<String, String> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x57494C44);

    // Hull dominance: every input point on or above every edge.
    for round in 0..500 {
        let n = rng.gen_range(2..20usize);
        let mut xs: Vec<u64> = (0..60).collect();
        for i in (1..xs.len()).rev() {
            xs.swap(i, rng.gen_range(0..=i));
        }
        let points: Vec<LatticePoint> = xs[..n]
            .iter()
            .map(|&x| LatticePoint::known(x, rng.gen_range(0..100)))
            .collect();
        let poly = lower_convex_hull(&points).map_err(|e| e.to_string())?;
        for pt in &points {
            let h = poly
                .height_at(pt.x as i64)
                .ok_or_else(|| format!("round {round}: point outside hull range"))?;
            if Ratio::from_integer(pt.y.lower_bound() as i128) < h {
                return Err(format!("round {round}: point {pt:?} below the hull"));
            }
        }
    }

    // Certificate replay fuzzing: random admissible rule chains.
    let seeds = all_seeds();
    let mut chains = 0usize;
    for seed in &seeds {
        for _ in 0..200 {
            let mut cover = seed.clone();
            for _ in 0..rng.gen_range(1..=5usize) {
                let before = cover.sigma();
                let next = match rng.gen_range(0..3u8) {
                    0 => pullback(&cover, rng.gen_range(1..=12u64)),
                    1 => {
                        let m = cover.complement_order();
                        isub(&cover, rng.gen_range(1..=m))
                    }
                    _ => sigma_plus(&cover, rng.gen_range(1..=4u64)),
                };
                if let Ok(next) = next {
                    // The jump rescaling is exactly the rule parameter.
                    let ratio = next.sigma() / before;
                    match next.certificate().steps().last() {
                        Some(crate::cover::Step::Pullback { r2 }) => {
                            if ratio != Ratio::from_integer(*r2 as i64) {
                                return Err(format!("pullback rescaled sigma by {ratio}"));
                            }
                        }
                        Some(crate::cover::Step::Isub { d }) => {
                            if ratio != Ratio::from_integer(*d as i64) {
                                return Err(format!("isub rescaled sigma by {ratio}"));
                            }
                        }
                        _ => {}
                    }
                    cover = next;
                }
            }
            cover.check_admissibility().map_err(|e| e.to_string())?;
            verify_replay(&cover).map_err(|e| e.to_string())?;
            let replayed = replay(cover.certificate()).map_err(|e| e.to_string())?;
            if replayed.genus().map_err(|e| e.to_string())?
                != cover.genus().map_err(|e| e.to_string())?
            {
                return Err("replayed genus differs".into());
            }
            chains += 1;
        }
    }

    // Series valuation laws over the sweep primes.
    use crate::algebra::{TruncatedLaurentSeries, Valuation, PREC_EXACT};
    let mut random_series = |rng: &mut ChaCha8Rng, p: u64| -> TruncatedLaurentSeries {
        let terms: Vec<(i64, i64)> = (0..rng.gen_range(1..6))
            .map(|_| (rng.gen_range(-6..30), rng.gen_range(1..p as i64)))
            .collect();
        TruncatedLaurentSeries::from_terms(p, &terms, 60).unwrap()
    };
    for _ in 0..250 {
        for p in PRIMES {
            let a = random_series(&mut rng, p);
            let b = random_series(&mut rng, p);
            let (va, vb) = (a.known_valuation(), b.known_valuation());
            let (Ok(va), Ok(vb)) = (va, vb) else { continue };
            let prod = a.mul(&b).map_err(|e| e.to_string())?;
            if prod.known_valuation() != Ok(va + vb) {
                return Err(format!("val(ab) != val(a) + val(b) for {a:?}, {b:?}"));
            }
            let sum = a.add(&b).map_err(|e| e.to_string())?;
            match sum.valuation() {
                Valuation::Known(v) if v < va.min(vb) => {
                    return Err("val(a+b) below min".into());
                }
                Valuation::Known(v) if va != vb && v != va.min(vb) => {
                    return Err("val(a+b) must equal min for distinct valuations".into());
                }
                _ => {}
            }
            // Inversion round-trip on the unit part.
            let unit = a.shift(-va);
            let inv = unit.invert(40).map_err(|e| e.to_string())?;
            if !unit.mul(&inv).map_err(|e| e.to_string())?.is_one_to(40).map_err(|e| e.to_string())? {
                return Err(format!("inversion round-trip failed for {unit:?}"));
            }
            let _ = PREC_EXACT;
        }
    }

    let _ = budget(start, 60, "")?;
    Ok(format!(
        "500 hulls dominated, {chains} certificate chains replayed, 1000 valuation triples checked"
    ))
}

/// Cross-route check tying the polygon slopes to the cover seeds: the
/// polygon jump divided by the complement order is the raw tower upper
/// jump, and the seed multiplies it by the pullback degree.
pub fn newton_route_matches_seeds() -> Result<String, String> {
    for p in PRIMES {
        for t in 2..=(p - 3) {
            let m = ap_complement_order(p, t);
            let poly = ramification_polygon_ap(p, t, None).map_err(|e| e.to_string())?;
            let jumps = lower_jumps(&poly).map_err(|e| e.to_string())?;
            let raw_sigma = rat(jumps[0] as i64, m as i64);
            if raw_sigma != rat((p - t) as i64, (p - 1) as i64) {
                return Err(format!("(p,t) = ({p},{t}): polygon route sigma {raw_sigma}"));
            }
            let seed = seed_ujm(p, t).map_err(|e| e.to_string())?;
            if seed.sigma() != raw_sigma * rat(t as i64, 1) {
                return Err(format!("(p,t) = ({p},{t}): seed sigma differs from t * polygon sigma"));
            }
        }
        for s in 2..p {
            if p == 7 && s == 2 {
                continue;
            }
            let m = aps_complement_order(p, s);
            let poly = ramification_polygon_aps(p, s, None).map_err(|e| e.to_string())?;
            let jumps = lower_jumps(&poly).map_err(|e| e.to_string())?;
            let seed = seed_ujgcd2(p, s).map_err(|e| e.to_string())?;
            if rat(jumps[0] as i64, m as i64) != seed.sigma() {
                return Err(format!("(p,s) = ({p},{s}): polygon and seed sigma differ"));
            }
            if jumps[0] != seed.lower_jump() {
                return Err(format!("(p,s) = ({p},{s}): polygon jump differs from seed h"));
            }
        }
    }
    Ok("polygon jumps match seed jumps for every tower".into())
}

/// Symbolic Riemann–Hurwitz identities behind the genus closed forms,
/// checked as exact integers across the sweep.
pub fn genus_identity_sweep() -> Result<String, String> {
    for p in PRIMES {
        for t in 2..=(p - 3) {
            let m_t = (p - 1) / num_integer::gcd(p - 1, t * (t - 1));
            let h = m_t * t * (p - t) / (p - 1);
            let wild = BranchPointData::wild(
                RamificationFiltration::new(p, m_t, h).map_err(|e| e.to_string())?,
            );
            let order = crate::ramification::alternating_group_order(p);
            let rh = riemann_hurwitz_genus(&order, 0, &[wild]).map_err(|e| e.to_string())?;
            let closed = crate::cover::ujm_genus_closed_form(p, t).map_err(|e| e.to_string())?;
            if rh != closed {
                return Err(format!("(p,t) = ({p},{t}): {rh} != {closed}"));
            }
        }
        for s in 2..p {
            if p == 7 && s == 2 {
                continue;
            }
            let m_s = aps_complement_order(p, s);
            let h = m_s * (p + s) / (p - 1);
            let wild = BranchPointData::wild(
                RamificationFiltration::new(p, m_s, h).map_err(|e| e.to_string())?,
            );
            let order = crate::ramification::alternating_group_order(p + s);
            let rh = riemann_hurwitz_genus(&order, 0, &[wild]).map_err(|e| e.to_string())?;
            let closed =
                crate::cover::ujgcd2_genus_closed_form(p, s).map_err(|e| e.to_string())?;
            if rh != closed {
                return Err(format!("(p,s) = ({p},{s}): {rh} != {closed}"));
            }
        }
    }
    Ok("Riemann-Hurwitz matches the closed forms across the sweep".into())
}
