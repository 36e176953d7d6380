//! Catalog of Segre strata `M_X(G, δ; P, s)°` for the families where
//! nonemptiness and dimension are known in closed form.
//!
//! Nonemptiness is three-valued. Inside the proven range a stratum is
//! `yes` with an exact dimension; off the congruence class (or for `s ≤ 0`)
//! it is `no`; between the proven range and the outer ceiling it is
//! `unknown`.
//!
//! | family           | congruence            | `yes` up to                   | `no` above            |
//! |------------------|-----------------------|-------------------------------|-----------------------|
//! | GL(r), n         | s ≡ n·d (mod r)       | n(r−n)(g−1) + (n−1)           | n(r−n)(g−1) + ε       |
//! | PGL(r), n        | s ≡ n·δ (mod r)       | n(r−n)(g−1) + (n−1)           | n(r−n)(g−1) + ε       |
//! | SO(2n), Spin(2n) | s ≡ 0 (mod n−1)       | ½(n−1)n(g−1) + 2              | g·dim(G/P)            |
//!
//! `ε ∈ {0, …, r−1}` is the residue with `n(r−n)(g−1) + ε ≡ n·δ (mod r)`.

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::parabolic::{FlagSignature, Lagrangian, ParabolicType};
use crate::rootdata::{Group, TopologicalType};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CurveContext {
    genus: i64,
}

impl CurveContext {
    pub fn new(genus: i64) -> Result<Self> {
        if genus < 2 {
            return Err(Error::GenusTooSmall(genus));
        }
        Ok(Self { genus })
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Nonempty {
    Yes,
    No,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DimKind {
    Exact,
    UpperBound,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumRecord {
    pub group: Group,
    pub delta: TopologicalType,
    pub parabolic: ParabolicType,
    pub s: i64,
    pub nonempty: Nonempty,
    pub dim: Option<i64>,
    pub dim_is: DimKind,
}

impl StratumRecord {
    fn empty(family: &Family, s: i64, nonempty: Nonempty) -> Self {
        Self {
            group: family.group(),
            delta: family.delta(),
            parabolic: family.parabolic(),
            s,
            nonempty,
            dim: None,
            dim_is: DimKind::Unknown,
        }
    }
}

impl Serialize for StratumRecord {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = ser.serialize_struct("StratumRecord", 7)?;
        st.serialize_field("group", &self.group)?;
        st.serialize_field("delta", &self.delta.representative())?;
        st.serialize_field("flag", &self.parabolic.flag_signature())?;
        st.serialize_field("s", &self.s)?;
        st.serialize_field("nonempty", &self.nonempty)?;
        st.serialize_field("dim", &self.dim)?;
        st.serialize_field("dim_is", &self.dim_is)?;
        st.end()
    }
}

fn ck(v: Option<i64>) -> Result<i64> {
    v.ok_or(Error::Overflow("stratum arithmetic"))
}

/// A family of strata with a closed-form description.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `GL(r)`, maximal parabolic of an `n`-dimensional subspace, degree `d`.
    Gl { r: u32, n: u32, degree: i64 },
    /// `PGL(r)`, image of the same parabolic, `δ ∈ ℤ_r`.
    Pgl { r: u32, n: u32, delta: u64 },
    /// `SO(2n)`, stabiliser of a maximal isotropic subspace, `w₂ ∈ ℤ₂`.
    So { n: u32, w2: u64, tag: Lagrangian },
    /// `Spin(2n)`, preimage of that parabolic.
    Spin { n: u32, tag: Lagrangian },
}

impl Family {
    pub fn gl(r: u32, n: u32, degree: i64) -> Result<Self> {
        if r < 2 || n == 0 || n >= r {
            return Err(Error::ParameterRange(format!("need 1 <= n <= r-1, got r={r}, n={n}")));
        }
        Ok(Family::Gl { r, n, degree })
    }

    pub fn pgl(r: u32, n: u32, delta: i64) -> Result<Self> {
        if r < 2 || n == 0 || n >= r {
            return Err(Error::ParameterRange(format!("need 1 <= n <= r-1, got r={r}, n={n}")));
        }
        Ok(Family::Pgl {
            r,
            n,
            delta: delta.rem_euclid(r as i64) as u64,
        })
    }

    pub fn so(n: u32, w2: i64, tag: Lagrangian) -> Result<Self> {
        if n < 2 {
            return Err(Error::ParameterRange(format!("SO(2n) strata need n >= 2, got n={n}")));
        }
        Ok(Family::So {
            n,
            w2: w2.rem_euclid(2) as u64,
            tag,
        })
    }

    pub fn spin(n: u32, tag: Lagrangian) -> Result<Self> {
        if n < 2 {
            return Err(Error::ParameterRange(format!("Spin(2n) strata need n >= 2, got n={n}")));
        }
        Ok(Family::Spin { n, tag })
    }

    /// Recognise a covered family from a group, topological type and parabolic.
    pub fn from_parts(group: Group, delta: TopologicalType, parabolic: &ParabolicType) -> Result<Self> {
        delta.check_in(&group)?;
        if parabolic.group() != group {
            return Err(Error::GroupMismatch {
                expected: group.to_string(),
                got: parabolic.group().to_string(),
            });
        }
        if !parabolic.is_proper() {
            return Err(Error::DegenerateParabolic);
        }
        let unsupported = || Error::UnsupportedFamily(format!("no stratum formulas for {parabolic}"));
        let sig = parabolic.flag_signature();
        match group {
            Group::GL(r) | Group::PGL(r) => {
                let FlagSignature::Blocks(b) = sig else {
                    return Err(unsupported());
                };
                if b.len() != 2 {
                    return Err(unsupported());
                }
                match group {
                    Group::GL(_) => Family::gl(r, b[0], delta.representative()),
                    _ => Family::pgl(r, b[0], delta.representative()),
                }
            }
            Group::SO(r) | Group::Spin(r) if r % 2 == 0 => {
                let n = r / 2;
                match sig {
                    FlagSignature::Isotropic { dims, tag: Some(tag) } if dims == [n] => match group {
                        Group::SO(_) => Family::so(n, delta.representative(), tag),
                        _ => Family::spin(n, tag),
                    },
                    _ => Err(unsupported()),
                }
            }
            _ => Err(unsupported()),
        }
    }

    pub fn group(&self) -> Group {
        match *self {
            Family::Gl { r, .. } => Group::GL(r),
            Family::Pgl { r, .. } => Group::PGL(r),
            Family::So { n, .. } => Group::SO(2 * n),
            Family::Spin { n, .. } => Group::Spin(2 * n),
        }
    }

    pub fn delta(&self) -> TopologicalType {
        match *self {
            Family::Gl { degree, .. } => TopologicalType::Integer { value: degree },
            Family::Pgl { r, delta, .. } => TopologicalType::Residue {
                value: delta,
                modulus: r as u64,
            },
            Family::So { w2, .. } => TopologicalType::Residue { value: w2, modulus: 2 },
            Family::Spin { .. } => TopologicalType::Trivial,
        }
    }

    pub fn parabolic(&self) -> ParabolicType {
        match *self {
            Family::Gl { n, .. } | Family::Pgl { n, .. } => {
                ParabolicType::maximal(self.group(), n).expect("validated family")
            }
            Family::So { tag, .. } | Family::Spin { tag, .. } => {
                ParabolicType::lagrangian(self.group(), tag).expect("validated family")
            }
        }
    }

    /// `(modulus, residue)` of the congruence every nonempty `s` satisfies.
    pub fn congruence(&self) -> (i64, i64) {
        match *self {
            Family::Gl { r, n, degree } => {
                let r = r as i64;
                (r, (n as i64 * degree.rem_euclid(r)).rem_euclid(r))
            }
            Family::Pgl { r, n, delta } => {
                let r = r as i64;
                (r, (n as i64 * delta as i64).rem_euclid(r))
            }
            Family::So { n, .. } | Family::Spin { n, .. } => (n as i64 - 1, 0),
        }
    }

    pub fn satisfies_congruence(&self, s: i64) -> bool {
        let (m, res) = self.congruence();
        s.rem_euclid(m) == res
    }

    /// Largest `s` for which the closed-form theorem applies.
    pub fn proven_bound(&self, ctx: CurveContext) -> Result<i64> {
        let g1 = ctx.genus - 1;
        match *self {
            Family::Gl { r, n, .. } | Family::Pgl { r, n, .. } => {
                let (r, n) = (r as i64, n as i64);
                ck((n * (r - n)).checked_mul(g1).and_then(|x| x.checked_add(n - 1)))
            }
            Family::So { n, .. } | Family::Spin { n, .. } => {
                let n = n as i64;
                ck(((n - 1) * n).checked_mul(g1).map(|x| x / 2 + 2))
            }
        }
    }

    /// Above this value every stratum is empty.
    pub fn outer_bound(&self, ctx: CurveContext) -> Result<i64> {
        match *self {
            Family::Gl { r, n, .. } | Family::Pgl { r, n, .. } => {
                let (m, res) = self.congruence();
                let base = ck((n as i64 * (r as i64 - n as i64)).checked_mul(ctx.genus - 1))?;
                let eps = (res - base).rem_euclid(m);
                ck(base.checked_add(eps))
            }
            _ => hn_upper_bound(&self.parabolic(), ctx),
        }
    }

    /// Dimension from the closed-form theorem.
    pub fn dimension(&self, s: i64, ctx: CurveContext) -> Result<i64> {
        let g1 = ctx.genus - 1;
        match *self {
            Family::Gl { r, n, .. } => {
                let (r, n) = (r as i64, n as i64);
                ck((r * r - n * (r - n)).checked_mul(g1).and_then(|x| x.checked_add(s + 1)))
            }
            Family::Pgl { r, n, .. } => {
                let (r, n) = (r as i64, n as i64);
                ck((r * r - n * (r - n) - 1).checked_mul(g1).and_then(|x| x.checked_add(s)))
            }
            Family::So { n, .. } | Family::Spin { n, .. } => {
                let n = n as i64;
                ck((n * (3 * n - 1)).checked_mul(g1).and_then(|x| (x / 2).checked_add(s)))
            }
        }
    }

    pub fn nonempty(&self, s: i64, ctx: CurveContext) -> Result<Nonempty> {
        if s <= 0 || !self.satisfies_congruence(s) {
            return Ok(Nonempty::No);
        }
        if s <= self.proven_bound(ctx)? {
            Ok(Nonempty::Yes)
        } else if s > self.outer_bound(ctx)? {
            Ok(Nonempty::No)
        } else {
            Ok(Nonempty::Unknown)
        }
    }

    pub fn record(&self, s: i64, ctx: CurveContext) -> Result<StratumRecord> {
        let status = self.nonempty(s, ctx)?;
        let mut rec = StratumRecord::empty(self, s, status);
        if status == Nonempty::Yes {
            rec.dim = Some(self.dimension(s, ctx)?);
            rec.dim_is = DimKind::Exact;
        }
        Ok(rec)
    }

    pub fn sigma_set(&self, ctx: CurveContext) -> Result<SigmaSet> {
        let ceiling = hn_upper_bound(&self.parabolic(), ctx)?;
        let mut out = SigmaSet::default();
        for s in 1..=ceiling {
            match self.nonempty(s, ctx)? {
                Nonempty::Yes => out.nonempty.push(s),
                Nonempty::Unknown => out.unknown.push(s),
                Nonempty::No => {}
            }
        }
        Ok(out)
    }
}

/// `g · dim(G/P)`, an upper bound for the Segre invariant of any bundle.
pub fn hn_upper_bound(p: &ParabolicType, ctx: CurveContext) -> Result<i64> {
    let count = p.quotient_roots()?.len() as i64;
    ck(ctx.genus.checked_mul(count))
}

pub fn glr_stratum(r: u32, n: u32, d: i64, s: i64, ctx: CurveContext) -> Result<StratumRecord> {
    Family::gl(r, n, d)?.record(s, ctx)
}

pub fn pglr_stratum(r: u32, n: u32, delta: i64, s: i64, ctx: CurveContext) -> Result<StratumRecord> {
    Family::pgl(r, n, delta)?.record(s, ctx)
}

pub fn so2n_stratum(n: u32, w2: i64, s: i64, ctx: CurveContext) -> Result<StratumRecord> {
    Family::so(n, w2, Lagrangian::First)?.record(s, ctx)
}

pub fn spin2n_stratum(n: u32, s: i64, ctx: CurveContext) -> Result<StratumRecord> {
    Family::spin(n, Lagrangian::First)?.record(s, ctx)
}

/// Look up any covered stratum.
pub fn stratum(
    group: Group,
    delta: TopologicalType,
    parabolic: &ParabolicType,
    s: i64,
    ctx: CurveContext,
) -> Result<StratumRecord> {
    Family::from_parts(group, delta, parabolic)?.record(s, ctx)
}

/// Values of `s` with a nonempty stratum, and the band where it is undecided.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SigmaSet {
    pub nonempty: Vec<i64>,
    pub unknown: Vec<i64>,
}

pub fn sigma_set(
    group: Group,
    delta: TopologicalType,
    parabolic: &ParabolicType,
    ctx: CurveContext,
) -> Result<SigmaSet> {
    Family::from_parts(group, delta, parabolic)?.sigma_set(ctx)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClosureRelation {
    /// The first stratum lies in the closure of the second.
    Below,
    /// The second stratum lies in the closure of the first.
    Above,
    Same,
    Incomparable,
}

/// Closure relation between the `s1`- and `s2`-strata of a family.
///
/// Only the GL and PGL families carry a closure statement.
pub fn closure_order(family: &Family, s1: i64, s2: i64) -> Result<ClosureRelation> {
    if !matches!(family, Family::Gl { .. } | Family::Pgl { .. }) {
        return Err(Error::UnsupportedFamily(format!(
            "no closure statement for {}",
            family.parabolic()
        )));
    }
    let ok = |s: i64| s > 0 && family.satisfies_congruence(s);
    if !ok(s1) || !ok(s2) {
        return Ok(ClosureRelation::Incomparable);
    }
    Ok(match s1.cmp(&s2) {
        std::cmp::Ordering::Less => ClosureRelation::Below,
        std::cmp::Ordering::Greater => ClosureRelation::Above,
        std::cmp::Ordering::Equal => ClosureRelation::Same,
    })
}
