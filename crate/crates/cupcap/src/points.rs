//! Planar point sets with exact rational coordinates.
//!
//! A [`PointSet`] is ordered by strictly increasing x and is in general
//! position (no three collinear) unless explicitly constructed with the
//! relaxed policy. Parsing, shearing and seeded random generation live here.

use std::fmt;

use num_bigint::BigInt;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::rational::{parse_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.x, self.y)
    }
}

/// Sign of the turn `a -> b -> c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    CounterClockwise,
    Clockwise,
    Collinear,
}

/// Exact orientation test via the cross product of `b - a` and `c - a`.
pub fn orientation(a: &Point, b: &Point, c: &Point) -> Orientation {
    let lhs = (&b.x - &a.x) * (&c.y - &a.y);
    let rhs = (&b.y - &a.y) * (&c.x - &a.x);
    match lhs.cmp(&rhs) {
        std::cmp::Ordering::Greater => Orientation::CounterClockwise,
        std::cmp::Ordering::Less => Orientation::Clockwise,
        std::cmp::Ordering::Equal => Orientation::Collinear,
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PointSetError {
    /// Syntax error in a points file. Line numbers are 1-based.
    #[error("malformed input at line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    /// Two points share an x-coordinate (positions are 1-based).
    #[error("duplicate x-coordinate at points {i} and {j}")]
    DuplicateX { i: usize, j: usize },
    /// Input points are not listed in increasing x order.
    #[error("x-coordinates out of order at point {i}")]
    UnsortedX { i: usize },
    /// Three points on one line (positions are 1-based).
    #[error("collinear triple ({a}, {b}, {c})")]
    Collinear { a: usize, b: usize, c: usize },
    /// A shear left two points on a common vertical line.
    #[error("shear failed: duplicate x persists")]
    ShearFailed,
    /// Random generation gave up after the retry budget.
    #[error("random generation exhausted {attempts} attempts for one point")]
    ExhaustedAttempts { attempts: u32 },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

/// What to do with collinear triples during validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CollinearPolicy {
    Reject,
    Allow,
}

/// Ordered planar points `p_1 .. p_m` with strictly increasing x.
///
/// Indices in the public API are 0-based; rendering (errors, witnesses, file
/// formats) is 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    points: Vec<Point>,
}

impl PointSet {
    /// Validates `points` in the given order: strictly increasing x, no
    /// collinear triple.
    pub fn new(points: Vec<Point>) -> Result<Self, PointSetError> {
        Self::with_policy(points, CollinearPolicy::Reject)
    }

    /// Like [`PointSet::new`] but keeps collinear triples. Cup/cap
    /// comparisons are non-strict, so downstream analyses stay meaningful; a
    /// collinear triple is then both a 3-cup and a 3-cap.
    pub fn new_allowing_collinear(points: Vec<Point>) -> Result<Self, PointSetError> {
        Self::with_policy(points, CollinearPolicy::Allow)
    }

    pub fn with_policy(
        points: Vec<Point>,
        policy: CollinearPolicy,
    ) -> Result<Self, PointSetError> {
        if points.is_empty() {
            return Err(PointSetError::InvalidParams("empty point set".into()));
        }
        for w in 1..points.len() {
            match points[w - 1].x.cmp(&points[w].x) {
                std::cmp::Ordering::Less => {}
                std::cmp::Ordering::Equal => {
                    return Err(PointSetError::DuplicateX { i: w, j: w + 1 })
                }
                std::cmp::Ordering::Greater => return Err(PointSetError::UnsortedX { i: w + 1 }),
            }
        }
        if policy == CollinearPolicy::Reject {
            if let Some((a, b, c)) = find_collinear_triple(&points) {
                return Err(PointSetError::Collinear {
                    a: a + 1,
                    b: b + 1,
                    c: c + 1,
                });
            }
        }
        Ok(PointSet { points })
    }

    /// Sorts by x first, then validates.
    pub fn from_unsorted(mut points: Vec<Point>) -> Result<Self, PointSetError> {
        points.sort_by(|p, q| p.x.cmp(&q.x));
        Self::new(points)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn get(&self, i: usize) -> &Point {
        &self.points[i]
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// The subset at the given (0-based, strictly increasing) positions.
    pub fn subset(&self, keep: &[usize]) -> Result<Self, PointSetError> {
        let points = keep.iter().map(|&i| self.points[i].clone()).collect();
        PointSet::new(points)
    }
}

/// Finds some collinear triple, or `None`. For each anchor `i`, equal slopes
/// to two later points witness a triple; sorting the slopes makes the scan
/// O(m^2 log m) exact comparisons.
fn find_collinear_triple(points: &[Point]) -> Option<(usize, usize, usize)> {
    for i in 0..points.len() {
        let mut slopes: Vec<(Rational, usize)> = (i + 1..points.len())
            .map(|j| {
                let dy = &points[j].y - &points[i].y;
                let dx = &points[j].x - &points[i].x;
                (dy / dx, j)
            })
            .collect();
        slopes.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
        for w in 1..slopes.len() {
            if slopes[w - 1].0 == slopes[w].0 {
                let (j, k) = (slopes[w - 1].1.min(slopes[w].1), slopes[w - 1].1.max(slopes[w].1));
                return Some((i, j, k));
            }
        }
    }
    None
}

/// Parses the "points v1" format without validating geometry.
///
/// First line is the literal header `points v1`; afterwards one point per
/// line as two whitespace-separated coordinates (integers or `a/b`
/// fractions). Lines starting with `#` and blank lines are skipped.
pub fn parse_points_raw(text: &str) -> Result<Vec<Point>, PointSetError> {
    let mut lines = text.lines().enumerate();
    let header = loop {
        match lines.next() {
            None => {
                return Err(PointSetError::Malformed {
                    line: 1,
                    msg: "missing `points v1` header".into(),
                })
            }
            Some((no, l)) => {
                let t = l.trim();
                if t.is_empty() || t.starts_with('#') {
                    continue;
                }
                break (no, t);
            }
        }
    };
    if header.1 != "points v1" {
        return Err(PointSetError::Malformed {
            line: header.0 + 1,
            msg: format!("expected `points v1` header, found `{}`", header.1),
        });
    }
    let mut points = Vec::new();
    for (no, line) in lines {
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = t.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(PointSetError::Malformed {
                line: no + 1,
                msg: format!("expected 2 coordinates, found {}", toks.len()),
            });
        }
        let coord = |tok: &str| {
            parse_rational(tok).map_err(|e| PointSetError::Malformed {
                line: no + 1,
                msg: e.to_string(),
            })
        };
        points.push(Point::new(coord(toks[0])?, coord(toks[1])?));
    }
    Ok(points)
}

/// Parses and validates a "points v1" file. Indices follow file order.
pub fn parse_point_set(text: &str) -> Result<PointSet, PointSetError> {
    PointSet::new(parse_points_raw(text)?)
}

pub fn parse_point_set_with_policy(
    text: &str,
    policy: CollinearPolicy,
) -> Result<PointSet, PointSetError> {
    PointSet::with_policy(parse_points_raw(text)?, policy)
}

/// Renders the "points v1" format.
pub fn write_points(points: &[Point]) -> String {
    let mut out = String::from("points v1\n");
    for p in points {
        out.push_str(&format!("{p}\n"));
    }
    out
}

/// Applies the shear `(x, y) -> (x + lambda*y, y)` and re-sorts by x.
///
/// A shear is affine, so it preserves every orientation sign and hence the
/// convex position of every subset. This is the repair tool for inputs
/// rejected with [`PointSetError::DuplicateX`], so it accepts raw points:
/// a validated `PointSet` can never contain the inputs it exists to fix.
pub fn shear(points: &[Point], lambda: &Rational) -> Result<PointSet, PointSetError> {
    shear_with_policy(points, lambda, CollinearPolicy::Reject)
}

pub fn shear_with_policy(
    points: &[Point],
    lambda: &Rational,
    policy: CollinearPolicy,
) -> Result<PointSet, PointSetError> {
    let mut sheared: Vec<Point> = points
        .iter()
        .map(|p| Point::new(&p.x + lambda * &p.y, p.y.clone()))
        .collect();
    sheared.sort_by(|p, q| p.x.cmp(&q.x).then(p.y.cmp(&q.y)));
    for w in 1..sheared.len() {
        if sheared[w - 1].x == sheared[w].x {
            return Err(PointSetError::ShearFailed);
        }
    }
    PointSet::with_policy(sheared, policy)
}

/// Retry budget per point for [`random_point_set`].
pub const RANDOM_RETRY_BUDGET: u32 = 10_000;

/// Deterministic random point set: `m` points with integer coordinates in
/// `[0, span]^2`, distinct x, no collinear triple.
///
/// The generator is pinned for the lifetime of the repo: a ChaCha8 stream
/// keyed with the little-endian 64-bit seed (zero-padded to 256 bits), read
/// as 64-bit words; coordinates are reduced to `0..=span` by rejection
/// sampling of the biased tail, so the output never depends on platform or
/// library version. Candidate points that collide in x or complete a
/// collinear triple are rejected and resampled, up to
/// [`RANDOM_RETRY_BUDGET`] attempts each.
pub fn random_point_set(seed: u64, m: usize, span: u64) -> Result<PointSet, PointSetError> {
    if m < 1 {
        return Err(PointSetError::InvalidParams("m must be >= 1".into()));
    }
    if span < m as u64 {
        return Err(PointSetError::InvalidParams(format!(
            "span {span} too small for {m} distinct x-coordinates"
        )));
    }
    if span == u64::MAX {
        return Err(PointSetError::InvalidParams("span too large".into()));
    }
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    let mut rng = ChaCha8Rng::from_seed(key);
    // unbiased draw from 0..=span
    let range = span + 1;
    let zone = if range.is_power_of_two() {
        u64::MAX
    } else {
        u64::MAX - (u64::MAX % range) - 1
    };
    let mut draw = move || loop {
        let v = rng.next_u64();
        if v <= zone {
            return v % range;
        }
    };

    let mut accepted: Vec<(u64, u64)> = Vec::with_capacity(m);
    let mut pts: Vec<Point> = Vec::with_capacity(m);
    while pts.len() < m {
        let mut attempts = 0u32;
        loop {
            attempts += 1;
            if attempts > RANDOM_RETRY_BUDGET {
                return Err(PointSetError::ExhaustedAttempts {
                    attempts: RANDOM_RETRY_BUDGET,
                });
            }
            let (x, y) = (draw(), draw());
            if accepted.iter().any(|&(ax, _)| ax == x) {
                continue;
            }
            let cand = Point::new(
                Rational::from_integer(BigInt::from(x)),
                Rational::from_integer(BigInt::from(y)),
            );
            let collinear = (0..pts.len()).any(|a| {
                (a + 1..pts.len())
                    .any(|b| orientation(&pts[a], &pts[b], &cand) == Orientation::Collinear)
            });
            if collinear {
                continue;
            }
            accepted.push((x, y));
            pts.push(cand);
            break;
        }
    }
    PointSet::from_unsorted(pts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn ipoint(x: i64, y: i64) -> Point {
        Point::new(rat_int(x), rat_int(y))
    }

    #[test]
    fn parse_valid_file() {
        let ps = parse_point_set("points v1\n0 0\n1 2\n2 3").unwrap();
        assert_eq!(ps.len(), 3);
        assert_eq!(ps.get(1), &ipoint(1, 2));
    }

    #[test]
    fn parse_accepts_comments_and_fractions() {
        let ps = parse_point_set("# generated\npoints v1\n# block\n0 1/2\n\n1 -3/4\n").unwrap();
        assert_eq!(ps.get(0).y, rat(1, 2));
        assert_eq!(ps.get(1).y, rat(-3, 4));
    }

    #[test]
    fn parse_duplicate_x() {
        let err = parse_point_set("points v1\n0 0\n0 1").unwrap_err();
        assert_eq!(err, PointSetError::DuplicateX { i: 1, j: 2 });
    }

    #[test]
    fn parse_collinear() {
        let err = parse_point_set("points v1\n0 0\n1 1\n2 2").unwrap_err();
        assert_eq!(err, PointSetError::Collinear { a: 1, b: 2, c: 3 });
    }

    #[test]
    fn parse_rejects_bad_arity_and_header() {
        assert!(matches!(
            parse_point_set("points v1\n0 0 0"),
            Err(PointSetError::Malformed { line: 2, .. })
        ));
        assert!(matches!(
            parse_point_set("pts\n0 0"),
            Err(PointSetError::Malformed { line: 1, .. })
        ));
    }

    #[test]
    fn parse_rejects_unsorted() {
        let err = parse_point_set("points v1\n1 0\n0 1").unwrap_err();
        assert_eq!(err, PointSetError::UnsortedX { i: 2 });
    }

    #[test]
    fn collinear_detection_is_not_adjacent_only() {
        // (0,0), (2,1), (4,2) collinear with a decoy in between
        let pts = vec![ipoint(0, 0), ipoint(1, 5), ipoint(2, 1), ipoint(4, 2)];
        let err = PointSet::new(pts).unwrap_err();
        assert_eq!(err, PointSetError::Collinear { a: 1, b: 3, c: 4 });
    }

    #[test]
    fn allow_collinear_policy() {
        let pts = vec![ipoint(0, 0), ipoint(1, 1), ipoint(2, 2)];
        assert!(PointSet::new_allowing_collinear(pts).is_ok());
    }

    #[test]
    fn shear_repairs_duplicate_x() {
        let raw = vec![ipoint(0, 0), ipoint(0, 1)];
        let ps = shear(&raw, &rat_int(1)).unwrap();
        assert_eq!(ps.points(), &[ipoint(0, 0), ipoint(1, 1)]);
    }

    #[test]
    fn shear_zero_is_identity() {
        let raw = vec![ipoint(0, 0), ipoint(1, 2)];
        let ps = shear(&raw, &rat_int(0)).unwrap();
        assert_eq!(ps.points(), &raw);
    }

    #[test]
    fn shear_preserves_collinearity() {
        let raw = vec![ipoint(0, 0), ipoint(0, 1), ipoint(0, 2)];
        let err = shear(&raw, &rat_int(1)).unwrap_err();
        assert_eq!(err, PointSetError::Collinear { a: 1, b: 2, c: 3 });
    }

    #[test]
    fn shear_fails_when_duplicate_x_persists() {
        let raw = vec![ipoint(0, 0), ipoint(1, 1), ipoint(0, 1)];
        // lambda = 1 maps (0,1) onto x = 1, colliding with (1,1) -> x 2? no:
        // (1,1) -> 2, (0,1) -> 1, (0,0) -> 0: fine. Use lambda that collides:
        let err = shear(&raw, &rat_int(-1)).unwrap_err();
        // (0,0)->0, (1,1)->0 collide
        assert_eq!(err, PointSetError::ShearFailed);
    }

    #[test]
    fn random_single_point() {
        let ps = random_point_set(1, 1, 10).unwrap();
        assert_eq!(ps.len(), 1);
    }

    #[test]
    fn random_is_deterministic() {
        let a = random_point_set(42, 30, 1_000_000).unwrap();
        let b = random_point_set(42, 30, 1_000_000).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 30);
    }

    #[test]
    fn random_golden_seed42() {
        // Frozen from the first verified run; guards the generator pinning.
        let ps = random_point_set(42, 30, 1_000_000).unwrap();
        let golden = include_str!("../tests/data/random_seed42_m30_span1m.points");
        assert_eq!(write_points(ps.points()), golden);
    }

    #[test]
    fn random_rejects_bad_params() {
        assert!(matches!(
            random_point_set(1, 0, 10),
            Err(PointSetError::InvalidParams(_))
        ));
        assert!(matches!(
            random_point_set(1, 11, 10),
            Err(PointSetError::InvalidParams(_))
        ));
    }

    #[test]
    fn shear_preserves_orientation_signs() {
        for seed in 0..100u64 {
            let ps = random_point_set(seed, 8, 10_000).unwrap();
            let lambda = rat(seed as i64 % 7 - 3, 2);
            let sh = shear_with_policy(ps.points(), &lambda, CollinearPolicy::Allow).unwrap();
            // the shear preserves y, so match original points through y values
            // (distinct with overwhelming probability at this span; verify)
            for a in 0..ps.len() {
                for b in a + 1..ps.len() {
                    for c in b + 1..ps.len() {
                        let before = orientation(ps.get(a), ps.get(b), ps.get(c));
                        let image = |i: usize| {
                            let p = ps.get(i);
                            Point::new(&p.x + &lambda * &p.y, p.y.clone())
                        };
                        let after = orientation(&image(a), &image(b), &image(c));
                        assert_eq!(before, after);
                    }
                }
            }
            assert_eq!(sh.len(), ps.len());
        }
    }
}
