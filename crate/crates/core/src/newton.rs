//! Lower convex hulls of exact lattice points and the ramification polygons
//! of the Abhyankar tower equations, built by direct series expansion.
//!
//! The hull is computed by a monotone chain over x-sorted points with exact
//! rational slope comparisons; no floating point is involved. A point whose
//! valuation is only known as a lower bound may participate only when that
//! bound already places it strictly above the hull of the exactly-known
//! points; otherwise the build fails rather than guess.

use num_rational::Ratio;
use num_traits::Zero;
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{
    AlgebraError, SeriesPolynomial, TruncatedLaurentSeries, Valuation, PREC_EXACT,
};

pub type Slope = Ratio<i64>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolygonError {
    #[error("need at least two points with known valuation, got {0}")]
    TooFewPoints(usize),
    #[error("duplicate x-coordinate {0}")]
    DuplicateX(u64),
    #[error("point at x = {x} has valuation >= {lower_bound} which may touch the hull")]
    UnknownValuation { x: u64, lower_bound: i64 },
    #[error("nonzero slope {0} is not an integer")]
    NonIntegralSlope(Slope),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("direct expansion disagrees with the closed form: {0}")]
    ClosedFormMismatch(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A point (i, υ(bᵢ)) feeding a polygon build. The valuation may be exact
/// or only bounded below when the coefficient is zero to precision.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticePoint {
    pub x: u64,
    pub y: Valuation,
}

impl LatticePoint {
    pub fn known(x: u64, y: i64) -> Self {
        LatticePoint { x, y: Valuation::Known(y) }
    }

    pub fn at_least(x: u64, y: i64) -> Self {
        LatticePoint { x, y: Valuation::AtLeast(y) }
    }
}

/// The lower convex hull of a set of lattice points: vertices in increasing
/// x order and the exact slope of each edge, strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolygon {
    vertices: Vec<(i64, i64)>,
    slopes: Vec<Slope>,
}

fn cross(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> i128 {
    let (abx, aby) = ((b.0 - a.0) as i128, (b.1 - a.1) as i128);
    let (bcx, bcy) = ((c.0 - b.0) as i128, (c.1 - b.1) as i128);
    abx * bcy - aby * bcx
}

impl NewtonPolygon {
    fn from_vertices(vertices: Vec<(i64, i64)>) -> Self {
        let slopes = vertices
            .windows(2)
            .map(|w| Ratio::new(w[1].1 - w[0].1, w[1].0 - w[0].0))
            .collect();
        NewtonPolygon { vertices, slopes }
    }

    pub fn vertices(&self) -> &[(i64, i64)] {
        &self.vertices
    }

    pub fn slopes(&self) -> &[Slope] {
        &self.slopes
    }

    /// Shifts every vertex; slopes are unaffected.
    pub fn translate(&self, dx: i64, dy: i64) -> Self {
        let vertices = self.vertices.iter().map(|&(x, y)| (x + dx, y + dy)).collect();
        NewtonPolygon { vertices, slopes: self.slopes.clone() }
    }

    /// The initial part of the polygon whose slopes are <= 0; edges with
    /// positive slope are dropped.
    pub fn nonpositive_part(&self) -> Self {
        let keep = self.slopes.iter().take_while(|s| **s <= Ratio::zero()).count();
        NewtonPolygon {
            vertices: self.vertices[..=keep].to_vec(),
            slopes: self.slopes[..keep].to_vec(),
        }
    }

    /// Exact height of the hull at `x`, as a rational; `None` outside the
    /// x-range.
    pub fn height_at(&self, x: i64) -> Option<Ratio<i128>> {
        let first = self.vertices.first()?;
        let last = self.vertices.last()?;
        if x < first.0 || x > last.0 {
            return None;
        }
        for w in self.vertices.windows(2) {
            let (a, b) = (w[0], w[1]);
            if x <= b.0 {
                let num = a.1 as i128 * (b.0 - a.0) as i128
                    + (b.1 - a.1) as i128 * (x - a.0) as i128;
                return Some(Ratio::new(num, (b.0 - a.0) as i128));
            }
        }
        Some(Ratio::from_integer(last.1 as i128))
    }

    /// JSON form: vertices as integer pairs, slopes as exact rational
    /// strings.
    pub fn to_json(&self) -> Value {
        json!({
            "vertices": self.vertices.iter().map(|&(x, y)| json!([x, y])).collect::<Vec<_>>(),
            "slopes": self.slopes.iter().map(|s| slope_string(s)).collect::<Vec<_>>(),
        })
    }
}

pub fn slope_string(s: &Slope) -> String {
    if s.denom() == &1 {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

/// Lower convex hull of lattice points with exact slope arithmetic.
///
/// Points with a merely bounded valuation are admitted only when the bound
/// keeps them strictly above the hull of the known points.
pub fn lower_convex_hull(points: &[LatticePoint]) -> Result<NewtonPolygon, PolygonError> {
    let mut seen = std::collections::BTreeSet::new();
    for pt in points {
        if !seen.insert(pt.x) {
            return Err(PolygonError::DuplicateX(pt.x));
        }
    }
    let mut known: Vec<(i64, i64)> = points
        .iter()
        .filter_map(|p| match p.y {
            Valuation::Known(v) => Some((p.x as i64, v)),
            Valuation::AtLeast(_) => None,
        })
        .collect();
    if known.len() < 2 {
        return Err(PolygonError::TooFewPoints(known.len()));
    }
    known.sort_unstable();

    let mut hull: Vec<(i64, i64)> = Vec::with_capacity(known.len());
    for &pt in &known {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], pt) <= 0 {
            hull.pop();
        }
        hull.push(pt);
    }
    let polygon = NewtonPolygon::from_vertices(hull);

    for p in points {
        if let Valuation::AtLeast(bound) = p.y {
            let above = polygon
                .height_at(p.x as i64)
                .map_or(false, |h| Ratio::from_integer(bound as i128) > h);
            if !above {
                return Err(PolygonError::UnknownValuation { x: p.x, lower_bound: bound });
            }
        }
    }
    Ok(polygon)
}

/// Negated negative slopes, ascending: the lower jumps encoded by a
/// ramification polygon. Nonzero slopes must be integral.
pub fn lower_jumps(polygon: &NewtonPolygon) -> Result<Vec<u64>, PolygonError> {
    let mut jumps = Vec::new();
    for s in polygon.slopes() {
        if *s < Ratio::zero() {
            if s.denom() != &1 {
                return Err(PolygonError::NonIntegralSlope(*s));
            }
            jumps.push((-s.numer()) as u64);
        }
    }
    jumps.sort_unstable();
    Ok(jumps)
}

/// Working precision for a polygon build: generous enough that every vertex
/// claim is certified exactly, recomputed per call.
pub fn default_series_precision(degree: u64, max_jump: u64) -> i64 {
    (2 * degree * max_jump + 8) as i64
}

fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// Order of the prime-to-p inertia part for the degree-p tower at a given
/// `t`: (p-1)/gcd(p-1, t-1).
pub fn ap_complement_order(p: u64, t: u64) -> u64 {
    (p - 1) / gcd(p - 1, t - 1)
}

/// Order of the prime-to-p inertia part for the degree-(p+s) tower:
/// (p-1)s/gcd(p-1, s(s+1)).
pub fn aps_complement_order(p: u64, s: u64) -> u64 {
    (p - 1) * s / gcd(p - 1, s * (s + 1))
}

fn check_ap_params(p: u64, t: u64, m: Option<u64>) -> Result<u64, PolygonError> {
    if !crate::algebra::is_odd_prime(p) || p < 5 {
        return Err(PolygonError::BadParameters(format!("p = {p} is not an odd prime >= 5")));
    }
    if !(1 < t && t + 2 < p) {
        return Err(PolygonError::BadParameters(format!(
            "t = {t} outside 1 < t < p - 2 for p = {p}"
        )));
    }
    let expected = ap_complement_order(p, t);
    if let Some(m) = m {
        if m != expected {
            return Err(PolygonError::BadParameters(format!(
                "m = {m} disagrees with the recomputed value {expected}"
            )));
        }
    }
    Ok(expected)
}

fn check_aps_params(p: u64, s: u64, m: Option<u64>) -> Result<u64, PolygonError> {
    if !crate::algebra::is_odd_prime(p) || p < 5 {
        return Err(PolygonError::BadParameters(format!("p = {p} is not an odd prime >= 5")));
    }
    if !(2 <= s && s < p) {
        return Err(PolygonError::BadParameters(format!(
            "s = {s} outside 2 <= s < p for p = {p}"
        )));
    }
    let expected = aps_complement_order(p, s);
    if let Some(m) = m {
        if m != expected {
            return Err(PolygonError::BadParameters(format!(
                "m = {m} disagrees with the recomputed value {expected}"
            )));
        }
    }
    Ok(expected)
}

/// Hull of the points (i-1, υ(cᵢ)) for N(z) = f(ε(z+1)) = Σ cᵢ zⁱ, i >= 1.
///
/// Factoring out z is the horizontal shift by -1; the vertical
/// normalization shifts the flat stretch of the hull to height zero
/// (dividing by the appropriate power of ε). The constant term must vanish
/// to precision, since ε is a root of f.
fn expansion_polygon(f: &SeriesPolynomial) -> Result<NewtonPolygon, PolygonError> {
    let eps = TruncatedLaurentSeries::epsilon(f.modulus())?;
    let n = f.substitute_shifted(&eps)?;
    let c0 = n.coefficient(0).expect("constant coefficient");
    if !c0.is_zero_to_precision() {
        return Err(PolygonError::ClosedFormMismatch(
            "N(0) does not vanish: the scale is not a root".into(),
        ));
    }
    let points: Vec<LatticePoint> = (1..=n.degree())
        .map(|i| {
            let c = n.coefficient(i).expect("coefficient in range");
            LatticePoint { x: (i - 1) as u64, y: c.valuation() }
        })
        .collect();
    let raw = lower_convex_hull(&points)?;
    let min_y = raw.vertices().iter().map(|&(_, y)| y).min().unwrap_or(0);
    Ok(raw.translate(0, -min_y))
}

/// Ramification polygon of the local equation ε^{pm} − x·ε^{m(p−t)} + x
/// with x = ε^{pm}/(ε^{m(p−t)} − 1), by direct expansion.
///
/// `m` may be passed for cross-checking; it is recomputed either way. The
/// result is verified against the closed form: vertices
/// {(0, m(p−t)), (p−1, 0), (pm−1, 0)} with slopes {−m(p−t)/(p−1), 0}.
pub fn ramification_polygon_ap(
    p: u64,
    t: u64,
    m: Option<u64>,
) -> Result<NewtonPolygon, PolygonError> {
    let m = check_ap_params(p, t, m)?;
    let e = p * m;
    let height = m * (p - t);
    let prec = default_series_precision(e, height);

    let pole = TruncatedLaurentSeries::from_terms(p, &[(height as i64, 1), (0, -1)], PREC_EXACT)?;
    let d = pole.invert(prec)?;
    let x = d.shift(e as i64);
    let f = SeriesPolynomial::from_sparse(
        p,
        vec![
            (0, x.clone()),
            (height as usize, x.negate()),
            (e as usize, TruncatedLaurentSeries::one(p)?),
        ],
    )?;
    let polygon = expansion_polygon(&f)?.nonpositive_part();

    let expected_vertices = vec![(0, height as i64), ((p - 1) as i64, 0), ((e - 1) as i64, 0)];
    let expected_slopes = vec![
        Ratio::new(-(height as i64), (p - 1) as i64),
        Ratio::zero(),
    ];
    if polygon.vertices() != expected_vertices.as_slice()
        || polygon.slopes() != expected_slopes.as_slice()
    {
        return Err(PolygonError::ClosedFormMismatch(format!(
            "(p, t, m) = ({p}, {t}, {m}): expected vertices {expected_vertices:?}, got {:?}",
            polygon.vertices()
        )));
    }
    Ok(polygon)
}

/// Ramification polygon of the local equation ε^{m(p+s)} − x·ε^{mp} + 1
/// with x = (ε^{m(p+s)} + 1)/ε^{mp} = ε^{ms} + ε^{−mp}, by direct
/// expansion.
///
/// The degree-m(p+s) equation also carries the roots attached to the tame
/// point of the fibre; those contribute the positive-slope tail of the raw
/// hull, which is cut off. The surviving part is verified to have exactly
/// the slopes {−m(p+s)/(p−1), 0} and left vertex (0, m(p+s)).
pub fn ramification_polygon_aps(
    p: u64,
    s: u64,
    m: Option<u64>,
) -> Result<NewtonPolygon, PolygonError> {
    let m = check_aps_params(p, s, m)?;
    let e = m * (p + s);
    let height = e;

    let x = TruncatedLaurentSeries::from_terms(
        p,
        &[((m * s) as i64, 1), (-((m * p) as i64), 1)],
        PREC_EXACT,
    )?;
    let f = SeriesPolynomial::from_sparse(
        p,
        vec![
            (0, TruncatedLaurentSeries::one(p)?),
            ((m * p) as usize, x.negate()),
            (e as usize, TruncatedLaurentSeries::one(p)?),
        ],
    )?;
    let polygon = expansion_polygon(&f)?.nonpositive_part();

    let expected_slopes = vec![
        Ratio::new(-(height as i64), (p - 1) as i64),
        Ratio::zero(),
    ];
    let ok = polygon.slopes() == expected_slopes.as_slice()
        && polygon.vertices().first() == Some(&(0, height as i64))
        && polygon.vertices().last() == Some(&((p * m - 1) as i64, 0));
    if !ok {
        return Err(PolygonError::ClosedFormMismatch(format!(
            "(p, s, m) = ({p}, {s}, {m}): got vertices {:?}, slopes {:?}",
            polygon.vertices(),
            polygon.slopes()
        )));
    }
    Ok(polygon)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn known(pts: &[(u64, i64)]) -> Vec<LatticePoint> {
        pts.iter().map(|&(x, y)| LatticePoint::known(x, y)).collect()
    }

    // Exact-arithmetic dominance oracle: every point on or above each edge.
    fn assert_dominates(polygon: &NewtonPolygon, pts: &[LatticePoint]) {
        for p in pts {
            let h = polygon.height_at(p.x as i64).expect("point in range");
            let y = Ratio::from_integer(p.y.lower_bound() as i128);
            assert!(y >= h, "point {p:?} dips below the hull");
        }
    }

    #[test]
    fn hull_basic() {
        let pts = known(&[(0, 12), (3, 9), (6, 0), (20, 0)]);
        let poly = lower_convex_hull(&pts).unwrap();
        assert_eq!(poly.vertices(), &[(0, 12), (6, 0), (20, 0)]);
        assert_eq!(poly.slopes(), &[Ratio::new(-2, 1), Ratio::from_integer(0)]);
        assert_dominates(&poly, &pts);
    }

    #[test]
    fn hull_flat_and_single_segment() {
        let poly = lower_convex_hull(&known(&[(0, 0), (5, 0)])).unwrap();
        assert_eq!(poly.vertices(), &[(0, 0), (5, 0)]);
        assert_eq!(poly.slopes(), &[Ratio::from_integer(0)]);

        let poly = lower_convex_hull(&known(&[(0, 4), (2, 0)])).unwrap();
        assert_eq!(poly.slopes(), &[Ratio::new(-2, 1)]);
    }

    #[test]
    fn hull_idempotent() {
        let pts = known(&[(0, 12), (3, 9), (6, 0), (20, 0)]);
        let poly = lower_convex_hull(&pts).unwrap();
        let again = lower_convex_hull(&known(
            &poly.vertices().iter().map(|&(x, y)| (x as u64, y)).collect::<Vec<_>>(),
        ))
        .unwrap();
        assert_eq!(poly, again);
    }

    #[test]
    fn hull_rejects_duplicates_and_shortage() {
        assert_eq!(
            lower_convex_hull(&known(&[(1, 0), (1, 2)])),
            Err(PolygonError::DuplicateX(1))
        );
        assert_eq!(
            lower_convex_hull(&known(&[(1, 0)])),
            Err(PolygonError::TooFewPoints(1))
        );
    }

    #[test]
    fn unknown_point_strictly_above_is_fine() {
        let mut pts = known(&[(0, 6), (4, 0), (10, 0)]);
        pts.push(LatticePoint::at_least(2, 5)); // hull height at 2 is 3
        let poly = lower_convex_hull(&pts).unwrap();
        assert_eq!(poly.vertices(), &[(0, 6), (4, 0), (10, 0)]);
    }

    #[test]
    fn unknown_point_touching_hull_errors() {
        let mut pts = known(&[(0, 6), (4, 0), (10, 0)]);
        pts.push(LatticePoint::at_least(2, 3));
        assert_eq!(
            lower_convex_hull(&pts),
            Err(PolygonError::UnknownValuation { x: 2, lower_bound: 3 })
        );
    }

    #[test]
    fn jumps_from_slopes() {
        let poly = lower_convex_hull(&known(&[(0, 12), (6, 0), (20, 0)])).unwrap();
        assert_eq!(lower_jumps(&poly).unwrap(), vec![2]);
        let flat = lower_convex_hull(&known(&[(0, 0), (5, 0)])).unwrap();
        assert_eq!(lower_jumps(&flat).unwrap(), Vec::<u64>::new());
        let steep = lower_convex_hull(&known(&[(0, 28), (4, 0), (19, 0)])).unwrap();
        assert_eq!(lower_jumps(&steep).unwrap(), vec![7]);
    }

    #[test]
    fn jumps_reject_fractional_slopes() {
        let poly = lower_convex_hull(&known(&[(0, 3), (2, 0)])).unwrap();
        assert_eq!(
            lower_jumps(&poly),
            Err(PolygonError::NonIntegralSlope(Ratio::new(-3, 2)))
        );
    }

    #[test]
    fn polygon_ap_7_3() {
        let poly = ramification_polygon_ap(7, 3, Some(3)).unwrap();
        assert_eq!(poly.vertices(), &[(0, 12), (6, 0), (20, 0)]);
        assert_eq!(poly.slopes(), &[Ratio::new(-2, 1), Ratio::from_integer(0)]);
        assert_eq!(lower_jumps(&poly).unwrap(), vec![2]);
    }

    #[test]
    fn polygon_ap_slopes() {
        let poly = ramification_polygon_ap(7, 2, None).unwrap();
        assert_eq!(poly.slopes()[0], Ratio::new(-5, 1));
        let poly = ramification_polygon_ap(11, 2, Some(10)).unwrap();
        assert_eq!(poly.slopes()[0], Ratio::new(-9, 1));
        assert_eq!(poly.vertices()[0], (0, 90));
    }

    #[test]
    fn polygon_ap_rejects_bad_parameters() {
        assert!(matches!(
            ramification_polygon_ap(4, 2, None),
            Err(PolygonError::BadParameters(_))
        ));
        assert!(matches!(
            ramification_polygon_ap(7, 5, None),
            Err(PolygonError::BadParameters(_))
        ));
        assert!(matches!(
            ramification_polygon_ap(7, 3, Some(4)),
            Err(PolygonError::BadParameters(_))
        ));
    }

    #[test]
    fn polygon_aps_5_2() {
        let poly = ramification_polygon_aps(5, 2, Some(4)).unwrap();
        assert_eq!(poly.slopes()[0], Ratio::new(-7, 1));
        assert_eq!(poly.vertices()[0], (0, 28));
        assert_eq!(lower_jumps(&poly).unwrap(), vec![7]);
    }

    #[test]
    fn polygon_aps_11_2() {
        let poly = ramification_polygon_aps(11, 2, None).unwrap();
        assert_eq!(poly.slopes()[0], Ratio::new(-13, 1));
    }

    #[test]
    fn polygon_aps_5_3_full_vertex_list() {
        // Left vertex height is m(p+s) = 24, not m(p-s); pinned by the
        // direct expansion.
        let poly = ramification_polygon_aps(5, 3, Some(3)).unwrap();
        assert_eq!(poly.vertices(), &[(0, 24), (4, 0), (14, 0)]);
        assert_eq!(poly.slopes(), &[Ratio::new(-6, 1), Ratio::from_integer(0)]);
    }

    #[test]
    fn polygon_json_schema() {
        let poly = ramification_polygon_ap(7, 3, None).unwrap();
        let v = poly.to_json();
        assert_eq!(v["vertices"][0][1], 12);
        assert_eq!(v["slopes"][0], "-2");
        assert_eq!(v["slopes"][1], "0");
    }
}
