//! Functions on ordered index pairs.
//!
//! A [`PairFunction`] assigns an exact rational to every pair `i < j` of
//! `0..m`. The geometric instance is [`slope_function`]; the "pairfn v1"
//! text format carries arbitrary instances (1-based indices on disk).

use std::fmt::Write as _;

use thiserror::Error;

use crate::points::PointSet;
use crate::rational::{parse_rational, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PairFnError {
    #[error("malformed input at line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("pair ({i}, {j}) out of range or not i < j")]
    BadPair { i: usize, j: usize },
    #[error("pair ({i}, {j}) defined twice")]
    DuplicatePair { i: usize, j: usize },
    #[error("pair ({i}, {j}) missing")]
    MissingPair { i: usize, j: usize },
}

/// Total function on ordered pairs `(i, j)`, `0 <= i < j < m`, defined on
/// exactly the `m(m-1)/2` pairs. Values are exact rationals; only their
/// comparisons matter downstream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairFunction {
    m: usize,
    // triangular layout: (i, j) at j*(j-1)/2 + i
    values: Vec<Rational>,
}

impl PairFunction {
    /// Builds from a closure over 0-based pairs.
    pub fn from_fn<F>(m: usize, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> Rational,
    {
        assert!(m >= 1, "pair function needs at least one element");
        let mut values = Vec::with_capacity(m * (m - 1) / 2);
        for j in 0..m {
            for i in 0..j {
                values.push(f(i, j));
            }
        }
        PairFunction { m, values }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Value on the ordered pair `i < j`. The function is defined only on
    /// `i < j`; anything else is a caller bug.
    pub fn value(&self, i: usize, j: usize) -> &Rational {
        assert!(i < j && j < self.m, "pair ({i}, {j}) out of domain");
        &self.values[j * (j - 1) / 2 + i]
    }

    /// The function with every value negated. Cups and caps swap roles.
    pub fn negate(&self) -> PairFunction {
        PairFunction {
            m: self.m,
            values: self.values.iter().map(|v| -v).collect(),
        }
    }
}

/// The slope function of a point set: `f(i, j)` is the exact slope of the
/// line through points `i` and `j`. Distinct x-coordinates make every slope
/// finite.
pub fn slope_function(ps: &PointSet) -> PairFunction {
    PairFunction::from_fn(ps.len(), |i, j| {
        let (p, q) = (ps.get(i), ps.get(j));
        (&q.y - &p.y) / (&q.x - &p.x)
    })
}

/// Parses the "pairfn v1" format:
///
/// ```text
/// pairfn v1
/// m 5
/// 1 2 2
/// 1 3 4
/// ...
/// ```
///
/// Indices on disk are 1-based with `i < j`; every pair must appear exactly
/// once, in any order. `#` comments and blank lines are skipped.
pub fn parse_pair_function(text: &str) -> Result<PairFunction, PairFnError> {
    let mut content = text
        .lines()
        .enumerate()
        .map(|(no, l)| (no + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line, header) = content.next().ok_or(PairFnError::Malformed {
        line: 1,
        msg: "missing `pairfn v1` header".into(),
    })?;
    if header != "pairfn v1" {
        return Err(PairFnError::Malformed {
            line,
            msg: format!("expected `pairfn v1` header, found `{header}`"),
        });
    }

    let (line, mline) = content.next().ok_or(PairFnError::Malformed {
        line: line + 1,
        msg: "missing `m <count>` line".into(),
    })?;
    let m: usize = match mline.split_whitespace().collect::<Vec<_>>()[..] {
        ["m", count] => count.parse().map_err(|_| PairFnError::Malformed {
            line,
            msg: format!("bad count `{count}`"),
        })?,
        _ => {
            return Err(PairFnError::Malformed {
                line,
                msg: format!("expected `m <count>`, found `{mline}`"),
            })
        }
    };
    if m < 1 {
        return Err(PairFnError::Malformed {
            line,
            msg: "m must be >= 1".into(),
        });
    }

    let npairs = m * (m - 1) / 2;
    let mut values: Vec<Option<Rational>> = vec![None; npairs];
    for (line, l) in content {
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 3 {
            return Err(PairFnError::Malformed {
                line,
                msg: format!("expected `i j value`, found `{l}`"),
            });
        }
        let idx = |tok: &str| {
            tok.parse::<usize>().map_err(|_| PairFnError::Malformed {
                line,
                msg: format!("bad index `{tok}`"),
            })
        };
        let (fi, fj) = (idx(toks[0])?, idx(toks[1])?);
        if fi < 1 || fj <= fi || fj > m {
            return Err(PairFnError::BadPair { i: fi, j: fj });
        }
        let (i, j) = (fi - 1, fj - 1);
        let value = parse_rational(toks[2]).map_err(|e| PairFnError::Malformed {
            line,
            msg: e.to_string(),
        })?;
        let slot = &mut values[j * (j - 1) / 2 + i];
        if slot.is_some() {
            return Err(PairFnError::DuplicatePair { i: fi, j: fj });
        }
        *slot = Some(value);
    }

    for j in 0..m {
        for i in 0..j {
            if values[j * (j - 1) / 2 + i].is_none() {
                return Err(PairFnError::MissingPair { i: i + 1, j: j + 1 });
            }
        }
    }
    Ok(PairFunction {
        m,
        values: values.into_iter().map(Option::unwrap).collect(),
    })
}

/// Renders the "pairfn v1" format with pairs in lexicographic order.
pub fn write_pair_function(f: &PairFunction) -> String {
    let mut out = String::from("pairfn v1\n");
    let _ = writeln!(out, "m {}", f.m);
    for i in 0..f.m {
        for j in i + 1..f.m {
            let _ = writeln!(out, "{} {} {}", i + 1, j + 1, f.value(i, j));
        }
    }
    out
}
