//! Cups, caps, and the four chain-extension tables.
//!
//! A *t-cup* is an increasing index sequence whose consecutive pair values
//! are nondecreasing; a *t-cap* has them nonincreasing (ties extend both).
//! The tables record, per element, the optimal value for extending chains of
//! each length that end or start there, with `+inf`/`-inf` marking
//! nonexistence. Everything is computed by dynamic programming that extends
//! chains pair by pair, never by enumeration.

use std::fmt;

use crate::pairfn::PairFunction;
use crate::rational::{ExtendedValue, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainKind {
    Cup,
    Cap,
}

impl ChainKind {
    pub fn opposite(self) -> ChainKind {
        match self {
            ChainKind::Cup => ChainKind::Cap,
            ChainKind::Cap => ChainKind::Cup,
        }
    }

    /// Non-strict step test: may `prev` be followed by `next`?
    fn step_ok(self, prev: &Rational, next: &Rational) -> bool {
        match self {
            ChainKind::Cup => prev <= next,
            ChainKind::Cap => prev >= next,
        }
    }
}

impl fmt::Display for ChainKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainKind::Cup => write!(f, "cup"),
            ChainKind::Cap => write!(f, "cap"),
        }
    }
}

/// A concrete cup or cap, stored as 0-based strictly increasing indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    pub kind: ChainKind,
    pub indices: Vec<usize>,
}

impl Chain {
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// Checks the defining inequalities against `f`.
    pub fn validate(&self, f: &PairFunction) -> bool {
        let idx = &self.indices;
        if idx.is_empty() || idx.iter().any(|&i| i >= f.m()) {
            return false;
        }
        if !idx.windows(2).all(|w| w[0] < w[1]) {
            return false;
        }
        idx.windows(3).all(|w| {
            self.kind
                .step_ok(f.value(w[0], w[1]), f.value(w[1], w[2]))
        })
    }
}

impl fmt::Display for Chain {
    /// 1-based rendering, e.g. `cup(1,2,3)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.kind)?;
        for (pos, i) in self.indices.iter().enumerate() {
            if pos > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, ")")
    }
}

/// Which end of a chain a table talks about.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Anchor {
    End,
    Start,
}

/// One DP layer: `cols[t-1][i]` is the optimal pair value over
/// `(t+1)`-chains of `kind` ending at `i` (anchor `End`: value of the last
/// pair `(j, i)`, minimized for cups / maximized for caps) or starting at
/// `i` (anchor `Start`: value of the first pair `(i, j)`, maximized for
/// cups / minimized for caps). Sentinels mark nonexistence.
///
/// Recurrence, ending side: a `(t+1)`-cup ends with `(j, i)` iff some t-cup
/// ends at `j` with last value `<= f(j, i)`, i.e. iff `cols[t-2][j] <=
/// f(j, i)`; symmetric for the other three tables. Computing columns in
/// order costs O(m^2) exact comparisons per column.
///
/// Stops after `tmax` columns or as soon as a column is all-sentinel
/// (longer chains cannot exist); the returned vector may be shorter than
/// `tmax`.
fn extension_columns(
    f: &PairFunction,
    kind: ChainKind,
    anchor: Anchor,
    tmax: usize,
) -> Vec<Vec<ExtendedValue>> {
    let m = f.m();
    // "no chain" sentinel and the optimization direction per table:
    //   end+cup (alpha):   min, +inf     end+cap (beta):    max, -inf
    //   start+cup (gamma): max, -inf     start+cap (delta): min, +inf
    let minimize = matches!(
        (anchor, kind),
        (Anchor::End, ChainKind::Cup) | (Anchor::Start, ChainKind::Cap)
    );
    let sentinel = if minimize {
        ExtendedValue::PosInf
    } else {
        ExtendedValue::NegInf
    };

    let mut cols: Vec<Vec<ExtendedValue>> = Vec::new();
    for t in 1..=tmax {
        let mut col = vec![sentinel.clone(); m];
        let mut any_finite = false;
        for i in 0..m {
            let mut best: Option<&Rational> = None;
            let others: Box<dyn Iterator<Item = usize>> = match anchor {
                Anchor::End => Box::new(0..i),
                Anchor::Start => Box::new(i + 1..m),
            };
            for j in others {
                let v = match anchor {
                    Anchor::End => f.value(j, i),
                    Anchor::Start => f.value(i, j),
                };
                let feasible = if t == 1 {
                    true
                } else {
                    match &cols[t - 2][j] {
                        // ending tables chain prev -> v; starting tables v -> prev
                        ExtendedValue::Finite(w) => match anchor {
                            Anchor::End => kind.step_ok(w, v),
                            Anchor::Start => kind.step_ok(v, w),
                        },
                        _ => false,
                    }
                };
                if feasible {
                    best = Some(match best {
                        None => v,
                        Some(b) => {
                            if (v < b) == minimize {
                                v
                            } else {
                                b
                            }
                        }
                    });
                }
            }
            if let Some(b) = best {
                col[i] = ExtendedValue::Finite(b.clone());
                any_finite = true;
            }
        }
        cols.push(col);
        if !any_finite {
            break;
        }
    }
    cols
}

/// The four extension tables for budgets `k` (cups) and `l` (caps).
///
/// Row index `i` is 0-based; the length parameter `t` is 1-based as in the
/// definitions, so `alpha(i, t)` talks about `(t+1)`-cups ending at `i`.
#[derive(Debug, Clone)]
pub struct CupCapTables {
    m: usize,
    k: usize,
    l: usize,
    alpha: Vec<Vec<ExtendedValue>>,
    beta: Vec<Vec<ExtendedValue>>,
    gamma: Vec<Vec<ExtendedValue>>,
    delta: Vec<Vec<ExtendedValue>>,
}

impl CupCapTables {
    /// Computes all four tables. `k, l >= 1`.
    pub fn compute(f: &PairFunction, k: usize, l: usize) -> Self {
        assert!(k >= 1 && l >= 1, "table budgets must be >= 1");
        let m = f.m();
        let pad = |mut cols: Vec<Vec<ExtendedValue>>, tmax: usize, sentinel: ExtendedValue| {
            while cols.len() < tmax {
                cols.push(vec![sentinel.clone(); m]);
            }
            cols
        };
        CupCapTables {
            m,
            k,
            l,
            alpha: pad(
                extension_columns(f, ChainKind::Cup, Anchor::End, k),
                k,
                ExtendedValue::PosInf,
            ),
            beta: pad(
                extension_columns(f, ChainKind::Cap, Anchor::End, l),
                l,
                ExtendedValue::NegInf,
            ),
            gamma: pad(
                extension_columns(f, ChainKind::Cup, Anchor::Start, k),
                k,
                ExtendedValue::NegInf,
            ),
            delta: pad(
                extension_columns(f, ChainKind::Cap, Anchor::Start, l),
                l,
                ExtendedValue::PosInf,
            ),
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> usize {
        self.l
    }

    /// Minimum last value of a `(t+1)`-cup ending at `i`; `+inf` if none.
    pub fn alpha(&self, i: usize, t: usize) -> &ExtendedValue {
        assert!(t >= 1 && t <= self.k);
        &self.alpha[t - 1][i]
    }

    /// Maximum last value of a `(t+1)`-cap ending at `i`; `-inf` if none.
    pub fn beta(&self, i: usize, t: usize) -> &ExtendedValue {
        assert!(t >= 1 && t <= self.l);
        &self.beta[t - 1][i]
    }

    /// Maximum first value of a `(t+1)`-cup starting at `i`; `-inf` if none.
    pub fn gamma(&self, i: usize, t: usize) -> &ExtendedValue {
        assert!(t >= 1 && t <= self.k);
        &self.gamma[t - 1][i]
    }

    /// Minimum first value of a `(t+1)`-cap starting at `i`; `+inf` if none.
    pub fn delta(&self, i: usize, t: usize) -> &ExtendedValue {
        assert!(t >= 1 && t <= self.l);
        &self.delta[t - 1][i]
    }

    // Existence bridge: a chain of `len` elements ends (starts) at `i` iff
    // the corresponding table entry at t = len-1 is not its sentinel. These
    // are what every verifier consults.

    /// Does some `len`-cup end at `i`? Requires `2 <= len <= k + 1`.
    pub fn ends_cup(&self, i: usize, len: usize) -> bool {
        self.alpha(i, len - 1).is_finite()
    }

    /// Does some `len`-cap end at `i`? Requires `2 <= len <= l + 1`.
    pub fn ends_cap(&self, i: usize, len: usize) -> bool {
        self.beta(i, len - 1).is_finite()
    }

    /// Does some `len`-cup start at `i`? Requires `2 <= len <= k + 1`.
    pub fn begins_cup(&self, i: usize, len: usize) -> bool {
        self.gamma(i, len - 1).is_finite()
    }

    /// Does some `len`-cap start at `i`? Requires `2 <= len <= l + 1`.
    pub fn begins_cap(&self, i: usize, len: usize) -> bool {
        self.delta(i, len - 1).is_finite()
    }
}

/// Reconstructs one `length`-chain of `kind` from ending-table columns.
/// `cols[length - 2]` must contain a finite entry.
fn backtrack_ending(
    f: &PairFunction,
    kind: ChainKind,
    cols: &[Vec<ExtendedValue>],
    length: usize,
) -> Chain {
    debug_assert!(length >= 2);
    let last = cols[length - 2]
        .iter()
        .position(|v| v.is_finite())
        .expect("finite entry for requested length");
    let mut rev = vec![last];
    let mut cur = last;
    // value of the pair (cur, successor); the next pair must respect it
    let mut bound: Option<Rational> = None;
    for t in (1..length).rev() {
        let j = (0..cur)
            .find(|&j| {
                let v = f.value(j, cur);
                let ok_bound = bound.as_ref().map_or(true, |b| kind.step_ok(v, b));
                let ok_prev = t == 1
                    || matches!(&cols[t - 2][j],
                        ExtendedValue::Finite(w) if kind.step_ok(w, v));
                ok_bound && ok_prev
            })
            .expect("table invariant: predecessor exists");
        bound = Some(f.value(j, cur).clone());
        rev.push(j);
        cur = j;
    }
    rev.reverse();
    Chain {
        kind,
        indices: rev,
    }
}

/// Longest chain of the given kind, with one witness.
///
/// Every pair is both a 2-cup and a 2-cap, so the length is at least 2
/// whenever `m >= 2`; a single element is a 1-chain.
pub fn extreme_chain(f: &PairFunction, kind: ChainKind) -> (usize, Chain) {
    let m = f.m();
    if m == 1 {
        return (
            1,
            Chain {
                kind,
                indices: vec![0],
            },
        );
    }
    let cols = extension_columns(f, kind, Anchor::End, m.saturating_sub(1));
    let length = (1..=cols.len())
        .rev()
        .find(|&t| cols[t - 1].iter().any(ExtendedValue::is_finite))
        .map(|t| t + 1)
        .unwrap_or(1);
    let witness = backtrack_ending(f, kind, &cols, length);
    (length, witness)
}

/// Result of a `(k, l)`-freeness test: free means no k-cup and no l-cap;
/// otherwise `witness` holds one offending chain (cups checked first).
#[derive(Debug, Clone)]
pub struct FreenessReport {
    pub free: bool,
    pub witness: Option<Chain>,
}

/// Is `f` `(k, l)`-free? `k, l >= 2`.
pub fn is_free(f: &PairFunction, k: usize, l: usize) -> FreenessReport {
    assert!(k >= 2 && l >= 2, "freeness budgets must be >= 2");
    for (kind, bound) in [(ChainKind::Cup, k), (ChainKind::Cap, l)] {
        let cols = extension_columns(f, kind, Anchor::End, bound - 1);
        if cols.len() == bound - 1 && cols[bound - 2].iter().any(ExtendedValue::is_finite) {
            return FreenessReport {
                free: false,
                witness: Some(backtrack_ending(f, kind, &cols, bound)),
            };
        }
    }
    FreenessReport {
        free: true,
        witness: None,
    }
}
