//! Borel reduction types `(d1, d2, d3)` of rank-3 bundles of degree δ.
//!
//! A type is coloured by what is known about the locus `M(d)` of stable
//! bundles admitting a B-reduction of that type:
//!
//! * orange: `d1 < δ/3 < d3` fails, so no stable bundle has such a reduction;
//! * green (generically finite): every gap `d_j - d_i ≤ g - 1`; `M(d)` has
//!   dimension `6g - 5 + s` and its general point has Segre value exactly `s`;
//! * green (dense): the two tuples `(-5u+k, u+k, 4u+k)`, `(-4u+k, -u+k, 5u+k)`
//!   with `g = 6u + 1`, `δ = 3k`; `M(d)` is dense and `s = 3(g - 1)`;
//! * red: `d2 - d1 ≥ g + 1` or `d3 - d2 ≥ g + 1`; the Segre value drops to at
//!   most `s - 2`;
//! * blue: everything else.
//!
//! Here `s = 2(d3 - d1)` is the Segre value of the reduction itself.

mod figure;

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::strata::CurveContext;

pub use figure::{figure_data, Dot, Figure, LevelLine};

pub type Triple = [i64; 3];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Color {
    GreenGenericallyFinite,
    GreenDense,
    Red,
    Blue,
    Orange,
}

impl Color {
    pub fn as_str(&self) -> &'static str {
        match self {
            Color::GreenGenericallyFinite => "green(generically-finite)",
            Color::GreenDense => "green(dense)",
            Color::Red => "red",
            Color::Blue => "blue",
            Color::Orange => "orange",
        }
    }

    pub fn is_green(&self) -> bool {
        matches!(self, Color::GreenGenericallyFinite | Color::GreenDense)
    }

    pub fn hex(&self) -> &'static str {
        match self {
            Color::GreenGenericallyFinite | Color::GreenDense => "#2ca02c",
            Color::Red => "#d62728",
            Color::Blue => "#1f77b4",
            Color::Orange => "#ff7f0e",
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Color {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// What is known about the Segre value of a general bundle in `M(d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StratumS {
    Exact(i64),
    AtMost(i64),
    Unknown,
}

impl fmt::Display for StratumS {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StratumS::Exact(s) => write!(f, "={s}"),
            StratumS::AtMost(s) => write!(f, "<={s}"),
            StratumS::Unknown => f.write_str("?"),
        }
    }
}

impl Serialize for StratumS {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Which gap made a type red.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RedGap {
    /// `d2 - d1 ≥ g + 1`
    Lower,
    /// `d3 - d2 ≥ g + 1`
    Upper,
    Both,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BorelPoint {
    pub d: Triple,
    pub delta: i64,
    pub s_bound: i64,
    pub color: Color,
    pub dim_upper: Option<i64>,
    pub dim_exact: Option<i64>,
    pub stratum_s: Option<StratumS>,
    pub closure_parents: Option<[Triple; 2]>,
    pub red_gap: Option<RedGap>,
}

/// Upper bound on the Borel Segre invariant over the whole moduli space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Ceiling {
    pub value: i64,
    pub sharp: bool,
}

fn check_sum(d: &Triple, delta: i64) -> Result<()> {
    let sum = d
        .iter()
        .try_fold(0i64, |a, &x| a.checked_add(x))
        .ok_or(Error::Overflow("degree sum"))?;
    if sum != delta {
        return Err(Error::SumMismatch { sum, delta });
    }
    Ok(())
}

/// `d1 < δ/3 < d3`, compared exactly.
pub fn stable_region(d: &Triple, delta: i64) -> Result<bool> {
    check_sum(d, delta)?;
    Ok(3 * d[0] < delta && 3 * d[2] > delta)
}

fn sharp_case(delta: i64, genus: i64) -> bool {
    delta.rem_euclid(3) == 0 && genus.rem_euclid(6) == 1
}

pub fn hirschowitz_ceiling(delta: i64, ctx: CurveContext) -> Ceiling {
    let g = ctx.genus();
    if sharp_case(delta, g) {
        Ceiling {
            value: 3 * (g - 1),
            sharp: true,
        }
    } else {
        Ceiling {
            value: 3 * g,
            sharp: false,
        }
    }
}

/// The two types whose loci contain `M(d)` in their closure.
pub fn closure_parents(d: &Triple) -> [Triple; 2] {
    [[d[0] - 1, d[1] + 1, d[2]], [d[0], d[1] - 1, d[2] + 1]]
}

/// The dense tuples, when `g ≡ 1 (mod 6)` and `δ ≡ 0 (mod 3)`.
pub fn dense_types(delta: i64, ctx: CurveContext) -> Option<[Triple; 2]> {
    let g = ctx.genus();
    if !sharp_case(delta, g) {
        return None;
    }
    let u = (g - 1) / 6;
    let k = delta / 3;
    Some([[-5 * u + k, u + k, 4 * u + k], [-4 * u + k, -u + k, 5 * u + k]])
}

pub fn classify(d: &Triple, delta: i64, ctx: CurveContext) -> Result<BorelPoint> {
    let g = ctx.genus();
    let stable = stable_region(d, delta)?;
    let s = d[2]
        .checked_sub(d[0])
        .and_then(|x| x.checked_mul(2))
        .ok_or(Error::Overflow("segre bound"))?;
    let mut point = BorelPoint {
        d: *d,
        delta,
        s_bound: s,
        color: Color::Orange,
        dim_upper: None,
        dim_exact: None,
        stratum_s: None,
        closure_parents: None,
        red_gap: None,
    };
    if !stable {
        return Ok(point);
    }
    point.closure_parents = Some(closure_parents(d));

    let gaps = [d[1] - d[0], d[2] - d[0], d[2] - d[1]];
    let finite = gaps.iter().all(|&x| x < g);
    let dense = dense_types(delta, ctx).is_some_and(|t| t.contains(d));
    let red_gap = match (d[1] - d[0] > g, d[2] - d[1] > g) {
        (true, true) => Some(RedGap::Both),
        (true, false) => Some(RedGap::Lower),
        (false, true) => Some(RedGap::Upper),
        (false, false) => None,
    };
    if (finite || dense) && red_gap.is_some() {
        return Err(Error::Inconsistent(format!("{d:?} is both green and red at genus {g}")));
    }

    let generic_dim = 6 * g - 5 + s;
    if dense {
        point.color = Color::GreenDense;
        point.dim_upper = Some(generic_dim);
        point.dim_exact = Some(9 * g - 8);
        point.stratum_s = Some(StratumS::Exact(3 * (g - 1)));
    } else if finite {
        point.color = Color::GreenGenericallyFinite;
        point.dim_upper = Some(generic_dim);
        point.dim_exact = Some(generic_dim);
        point.stratum_s = Some(StratumS::Exact(s));
    } else if let Some(gap) = red_gap {
        let cap = hirschowitz_ceiling(delta, ctx).value;
        point.color = Color::Red;
        point.red_gap = Some(gap);
        point.dim_upper = Some(6 * g - 7 + s);
        point.stratum_s = Some(StratumS::AtMost((s - 2).min(cap)));
    } else {
        point.color = Color::Blue;
        point.dim_upper = Some(generic_dim);
        point.stratum_s = Some(StratumS::Unknown);
    }
    Ok(point)
}

/// Inclusive rectangle of `(d1, d3)` values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Window {
    pub d1_min: i64,
    pub d1_max: i64,
    pub d3_min: i64,
    pub d3_max: i64,
}

impl Window {
    pub fn new(d1: (i64, i64), d3: (i64, i64)) -> Result<Self> {
        if d1.0 > d1.1 || d3.0 > d3.1 {
            return Err(Error::EmptyWindow);
        }
        Ok(Self {
            d1_min: d1.0,
            d1_max: d1.1,
            d3_min: d3.0,
            d3_max: d3.1,
        })
    }

    pub fn contains(&self, d1: i64, d3: i64) -> bool {
        (self.d1_min..=self.d1_max).contains(&d1) && (self.d3_min..=self.d3_max).contains(&d3)
    }

    /// Rows from the top (largest `d3`) down, each row by increasing `d1`.
    pub fn points(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        (self.d3_min..=self.d3_max)
            .rev()
            .flat_map(move |d3| (self.d1_min..=self.d1_max).map(move |d1| (d1, d3)))
    }
}

impl std::str::FromStr for Window {
    type Err = Error;

    /// `d1min:d1max,d3min:d3max`
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad window {s:?}, expected d1min:d1max,d3min:d3max"));
        let (a, b) = s.split_once(',').ok_or_else(bad)?;
        let range = |t: &str| -> Result<(i64, i64)> {
            let (lo, hi) = t.split_once(':').ok_or_else(bad)?;
            Ok((
                lo.trim().parse().map_err(|_| bad())?,
                hi.trim().parse().map_err(|_| bad())?,
            ))
        };
        Window::new(range(a)?, range(b)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureEdge {
    pub child: Triple,
    pub parent: Triple,
    pub parent_in_window: bool,
}

/// Closure edges from every stable type in the window to its two parents.
pub fn closure_dag(delta: i64, ctx: CurveContext, window: &Window) -> Result<Vec<ClosureEdge>> {
    let mut edges = Vec::new();
    for (d1, d3) in window.points() {
        let d = [d1, delta - d1 - d3, d3];
        let point = classify(&d, delta, ctx)?;
        if let Some(parents) = point.closure_parents {
            for parent in parents {
                edges.push(ClosureEdge {
                    child: d,
                    parent,
                    parent_in_window: window.contains(parent[0], parent[2]),
                });
            }
        }
    }
    Ok(edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{moduli_dimension, Group};

    fn ctx(g: i64) -> CurveContext {
        CurveContext::new(g).unwrap()
    }

    #[test]
    fn stability_region() {
        assert!(stable_region(&[-1, 0, 1], 0).unwrap());
        assert!(!stable_region(&[0, 0, 0], 0).unwrap());
        assert!(stable_region(&[0, 0, 1], 1).unwrap());
        assert!(!stable_region(&[1, 0, 0], 1).unwrap());
        assert_eq!(
            stable_region(&[0, 0, 1], 0),
            Err(Error::SumMismatch { sum: 1, delta: 0 })
        );
    }

    #[test]
    fn figure_examples_at_genus_seven() {
        let c = ctx(7);
        let p = classify(&[-5, 1, 4], 0, c).unwrap();
        assert_eq!(p.color, Color::GreenDense);
        assert_eq!((p.dim_exact, p.stratum_s), (Some(55), Some(StratumS::Exact(18))));
        let p = classify(&[-4, -1, 5], 0, c).unwrap();
        assert_eq!((p.color, p.dim_exact), (Color::GreenDense, Some(55)));

        let p = classify(&[-8, 1, 7], 0, c).unwrap();
        assert_eq!(p.color, Color::Red);
        assert_eq!(p.red_gap, Some(RedGap::Lower));
        assert_eq!(p.stratum_s, Some(StratumS::AtMost(18)));
        assert_eq!(p.dim_upper, Some(6 * 7 - 7 + 30));

        let p = classify(&[-2, 0, 2], 0, c).unwrap();
        assert_eq!(p.color, Color::GreenGenericallyFinite);
        assert_eq!((p.dim_exact, p.stratum_s), (Some(45), Some(StratumS::Exact(8))));

        let p = classify(&[0, 0, 0], 0, c).unwrap();
        assert_eq!((p.color, p.dim_upper, p.stratum_s), (Color::Orange, None, None));
    }

    #[test]
    fn printed_red_tuple() {
        let p = classify(&[-8, 7, 1], 0, ctx(7)).unwrap();
        assert_eq!((p.color, p.red_gap), (Color::Red, Some(RedGap::Lower)));
        assert_eq!((p.s_bound, p.stratum_s), (18, Some(StratumS::AtMost(16))));
        assert_eq!(p.dim_upper, Some(6 * 7 - 7 + 18));
    }

    #[test]
    fn blue_and_dual_red() {
        let c = ctx(7);
        // d3 - d1 = 7 > 6, no gap reaches 8, not a dense tuple
        let p = classify(&[-3, -1, 4], 0, c).unwrap();
        assert_eq!((p.color, p.stratum_s), (Color::Blue, Some(StratumS::Unknown)));
        let p = classify(&[-7, -1, 8], 0, c).unwrap();
        assert_eq!((p.color, p.red_gap), (Color::Red, Some(RedGap::Upper)));
        let p = classify(&[-9, 0, 9], 0, ctx(2)).unwrap();
        assert_eq!(p.red_gap, Some(RedGap::Both));
        assert_eq!(p.stratum_s, Some(StratumS::AtMost(6)));
    }

    #[test]
    fn ceilings() {
        assert_eq!(hirschowitz_ceiling(0, ctx(7)), Ceiling { value: 18, sharp: true });
        assert_eq!(
            hirschowitz_ceiling(1, ctx(7)),
            Ceiling {
                value: 21,
                sharp: false
            }
        );
        assert_eq!(hirschowitz_ceiling(3, ctx(13)), Ceiling { value: 36, sharp: true });
        assert_eq!(hirschowitz_ceiling(-3, ctx(7)), Ceiling { value: 18, sharp: true });
        assert_eq!(
            hirschowitz_ceiling(0, ctx(8)),
            Ceiling {
                value: 24,
                sharp: false
            }
        );
    }

    #[test]
    fn dense_tuples_for_nonzero_degree() {
        let c = ctx(13);
        let [a, b] = dense_types(3, c).unwrap();
        assert_eq!(a, [-9, 3, 9]);
        assert_eq!(b, [-7, -1, 11]);
        for t in [a, b] {
            let p = classify(&t, 3, c).unwrap();
            assert_eq!(p.color, Color::GreenDense);
            assert_eq!(p.s_bound, 36);
            assert_eq!(p.dim_exact, Some(moduli_dimension(&Group::GL(3), 13).unwrap()));
        }
        assert!(dense_types(1, c).is_none());
    }

    #[test]
    fn errors() {
        assert!(matches!(
            classify(&[1, 1, 1], 0, ctx(2)),
            Err(Error::SumMismatch { .. })
        ));
        assert_eq!(Window::new((1, 0), (0, 0)), Err(Error::EmptyWindow));
        assert!("1:2".parse::<Window>().is_err());
        assert_eq!(
            "-3:-1,1:4".parse::<Window>().unwrap(),
            Window::new((-3, -1), (1, 4)).unwrap()
        );
        assert_eq!("2:1,0:0".parse::<Window>(), Err(Error::EmptyWindow));
    }

    #[test]
    fn closure_dag_example() {
        let w = Window::new((-1, -1), (1, 1)).unwrap();
        let edges = closure_dag(0, ctx(7), &w).unwrap();
        let parents: Vec<Triple> = edges.iter().map(|e| e.parent).collect();
        assert_eq!(parents, vec![[-2, 1, 1], [-1, -1, 2]]);
        assert!(edges.iter().all(|e| !e.parent_in_window && e.child == [-1, 0, 1]));
    }

    #[test]
    fn closure_path_reaches_dense_type() {
        // breadth-first search over emitted edges
        let w = Window::new((-10, 0), (0, 10)).unwrap();
        let edges = closure_dag(0, ctx(7), &w).unwrap();
        let mut seen = vec![[-1, 0, 1]];
        let mut frontier = seen.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for e in &edges {
                if frontier.contains(&e.child) && !seen.contains(&e.parent) {
                    seen.push(e.parent);
                    next.push(e.parent);
                }
            }
            frontier = next;
        }
        assert!(seen.contains(&[-5, 1, 4]));
        assert!(seen.contains(&[-4, -1, 5]));
    }
}
