//! Surjective homomorphisms with finite central kernel and the transfer of
//! topological types, parabolics and strata along them.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::parabolic::ParabolicType;
use crate::rootdata::{moduli_dimension, Group, TopologicalType};
use crate::strata::{CurveContext, DimKind, Nonempty, StratumRecord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Isogeny {
    /// `GL(r) → PGL(r)`.
    Adjoint { r: u32 },
    /// `SL(r) → SL(r)/μ_m`.
    CentralQuotient { r: u32, m: u32 },
    /// `SL(r)/μ_m → PGL(r)`; `m = 1` is `SL(r) → PGL(r)`.
    QuotientToAdjoint { r: u32, m: u32 },
    /// `Sp(2n) → PSp(2n)`, stored by `n`.
    AdjointSymplectic { n: u32 },
    /// `Spin(r) → SO(r)`.
    Cover { r: u32 },
}

impl Isogeny {
    pub fn adjoint(r: u32) -> Result<Self> {
        Self::Adjoint { r }.validated()
    }

    pub fn central_quotient(r: u32, m: u32) -> Result<Self> {
        Self::CentralQuotient { r, m }.validated()
    }

    pub fn quotient_to_adjoint(r: u32, m: u32) -> Result<Self> {
        Self::QuotientToAdjoint { r, m }.validated()
    }

    pub fn adjoint_symplectic(size: u32) -> Result<Self> {
        Group::sp(size)?;
        Self::AdjointSymplectic { n: size / 2 }.validated()
    }

    pub fn cover(r: u32) -> Result<Self> {
        Self::Cover { r }.validated()
    }

    fn validated(self) -> Result<Self> {
        self.source()?;
        self.target()?;
        Ok(self)
    }

    pub fn source(&self) -> Result<Group> {
        match *self {
            Isogeny::Adjoint { r } => Group::gl(r),
            Isogeny::CentralQuotient { r, .. } => Group::sl(r),
            Isogeny::QuotientToAdjoint { r, m } => Group::sl_mod(r, m),
            Isogeny::AdjointSymplectic { n } => Group::sp(2 * n),
            Isogeny::Cover { r } => Group::spin(r),
        }
    }

    pub fn target(&self) -> Result<Group> {
        match *self {
            Isogeny::Adjoint { r } | Isogeny::QuotientToAdjoint { r, .. } => Group::pgl(r),
            Isogeny::CentralQuotient { r, m } => Group::sl_mod(r, m),
            Isogeny::AdjointSymplectic { n } => Group::psp(2 * n),
            Isogeny::Cover { r } => Group::so(r),
        }
    }

    /// Whether every stable bundle of the target type in the image component lifts.
    pub fn is_surjective(&self) -> bool {
        matches!(
            self,
            Isogeny::Adjoint { .. } | Isogeny::AdjointSymplectic { .. } | Isogeny::Cover { .. }
        )
    }

    pub fn name(&self) -> &'static str {
        match self {
            Isogeny::Adjoint { .. } => "adjoint",
            Isogeny::CentralQuotient { .. } => "central-quotient",
            Isogeny::QuotientToAdjoint { .. } => "quotient-to-adjoint",
            Isogeny::AdjointSymplectic { .. } => "adjoint-symplectic",
            Isogeny::Cover { .. } => "cover",
        }
    }
}

impl fmt::Display for Isogeny {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.source(), self.target()) {
            (Ok(s), Ok(t)) => write!(f, "{s} -> {t}"),
            _ => f.write_str(self.name()),
        }
    }
}

/// Kind names accepted on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsogenyKind {
    Adjoint,
    CentralQuotient,
    QuotientToAdjoint,
    AdjointSymplectic,
    Cover,
}

impl FromStr for IsogenyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "adjoint" => IsogenyKind::Adjoint,
            "central-quotient" => IsogenyKind::CentralQuotient,
            "quotient-to-adjoint" => IsogenyKind::QuotientToAdjoint,
            "adjoint-symplectic" => IsogenyKind::AdjointSymplectic,
            "cover" => IsogenyKind::Cover,
            _ => return Err(Error::Parse(format!("unknown isogeny kind {s:?}"))),
        })
    }
}

/// Image of δ under `φ_*`, with the convention `δ ↦ (r/m)·δ` for `SL(r)/μ_m → PGL(r)`.
pub fn pi1_pushforward(iso: &Isogeny, delta: TopologicalType) -> Result<TopologicalType> {
    let source = iso.source()?;
    let target = iso.target()?;
    delta.check_in(&source)?;
    let raw = delta.representative();
    let image = match *iso {
        Isogeny::Adjoint { .. } => raw,
        Isogeny::QuotientToAdjoint { r, m } => ((r / m) as i64) * raw,
        Isogeny::CentralQuotient { .. } | Isogeny::AdjointSymplectic { .. } | Isogeny::Cover { .. } => 0,
    };
    Ok(TopologicalType::reduce(&target, image))
}

/// The alternative reading of `SL(r)/μ_m → PGL(r)` in which π₁ of the source
/// is `ℤ_{r/m}` and `φ_*` multiplies by `m`. `None` for other kinds.
pub fn pi1_pushforward_multiplication_convention(
    iso: &Isogeny,
    delta: TopologicalType,
) -> Result<Option<TopologicalType>> {
    let Isogeny::QuotientToAdjoint { m, .. } = *iso else {
        return Ok(None);
    };
    Ok(Some(TopologicalType::reduce(
        &iso.target()?,
        m as i64 * delta.representative(),
    )))
}

/// The parabolic of the target with the same omitted simple roots.
pub fn parabolic_image(iso: &Isogeny, p: &ParabolicType) -> Result<ParabolicType> {
    let source = iso.source()?;
    if p.group() != source {
        return Err(Error::GroupMismatch {
            expected: source.to_string(),
            got: p.group().to_string(),
        });
    }
    if !p.is_proper() {
        return Err(Error::DegenerateParabolic);
    }
    p.on_group(iso.target()?)
}

/// Carry a stratum record of the source group to the target group.
///
/// `s` is unchanged. For surjective kinds nonemptiness is preserved in both
/// directions and the dimension drops by the relative dimension of the
/// moduli spaces; otherwise only `yes` is carried over.
pub fn transfer_stratum(iso: &Isogeny, rec: &StratumRecord, ctx: CurveContext) -> Result<StratumRecord> {
    let source = iso.source()?;
    let target = iso.target()?;
    if rec.group != source {
        return Err(Error::GroupMismatch {
            expected: source.to_string(),
            got: rec.group.to_string(),
        });
    }
    let delta = pi1_pushforward(iso, rec.delta)?;
    let parabolic = parabolic_image(iso, &rec.parabolic)?;
    let surjective = iso.is_surjective();
    let nonempty = match (rec.nonempty, surjective) {
        (status, true) => status,
        (Nonempty::Yes, false) => Nonempty::Yes,
        (_, false) => Nonempty::Unknown,
    };
    let (dim, dim_is) = match (rec.dim, surjective) {
        (Some(d), true) => {
            let fibre = moduli_dimension(&source, ctx.genus())? - moduli_dimension(&target, ctx.genus())?;
            (Some(d - fibre), rec.dim_is)
        }
        _ => (None, DimKind::Unknown),
    };
    Ok(StratumRecord {
        group: target,
        delta,
        parabolic,
        s: rec.s,
        nonempty,
        dim,
        dim_is,
    })
}
