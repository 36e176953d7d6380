//! Classical groups, their root systems in the ε-basis, and the table of
//! dimension, center and fundamental-group data.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lattice::Character;

/// One of the eight classical families handled by the library.
///
/// `Sp` and `PSp` store `n` (the group is `Sp(2n)`); `SO` and `Spin` store
/// the size `r` of the defining representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Group {
    GL(u32),
    SL(u32),
    SLmod { r: u32, m: u32 },
    PGL(u32),
    Sp(u32),
    PSp(u32),
    SO(u32),
    Spin(u32),
}

/// Cartan type of a root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CartanType {
    A,
    B,
    C,
    D,
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            CartanType::A => "A",
            CartanType::B => "B",
            CartanType::C => "C",
            CartanType::D => "D",
        };
        f.write_str(c)
    }
}

/// A finitely generated abelian group `ℤ^free_rank × ∏ ℤ_{torsion[i]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FundamentalGroup {
    pub free_rank: u32,
    pub torsion: Vec<u64>,
}

impl FundamentalGroup {
    pub fn trivial() -> Self {
        Self {
            free_rank: 0,
            torsion: vec![],
        }
    }

    pub fn integers() -> Self {
        Self {
            free_rank: 1,
            torsion: vec![],
        }
    }

    pub fn cyclic(order: u64) -> Self {
        if order <= 1 {
            Self::trivial()
        } else {
            Self {
                free_rank: 0,
                torsion: vec![order],
            }
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for FundamentalGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("trivial");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            k => parts.push(format!("Z^{k}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z_{t}")));
        f.write_str(&parts.join(" x "))
    }
}

/// An element of π₁(G): the topological type of a G-bundle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum TopologicalType {
    Trivial,
    Integer { value: i64 },
    Residue { value: u64, modulus: u64 },
}

impl TopologicalType {
    /// The image of an integer in π₁(g), reducing residues.
    pub fn reduce(group: &Group, raw: i64) -> Self {
        let pi1 = group.pi1();
        if pi1.free_rank == 1 {
            TopologicalType::Integer { value: raw }
        } else if let Some(&m) = pi1.torsion.first() {
            let value = raw.rem_euclid(m as i64) as u64;
            TopologicalType::Residue { value, modulus: m }
        } else {
            TopologicalType::Trivial
        }
    }

    pub fn identity(group: &Group) -> Self {
        Self::reduce(group, 0)
    }

    /// Whether this value is an element of π₁(group) as stored (residues reduced).
    pub fn lies_in(&self, group: &Group) -> bool {
        let pi1 = group.pi1();
        match *self {
            TopologicalType::Trivial => pi1.is_trivial(),
            TopologicalType::Integer { .. } => pi1.free_rank == 1,
            TopologicalType::Residue { value, modulus } => {
                pi1.free_rank == 0 && pi1.torsion == [modulus] && value < modulus
            }
        }
    }

    pub fn check_in(&self, group: &Group) -> Result<()> {
        if self.lies_in(group) {
            Ok(())
        } else {
            Err(Error::NotInGroup {
                value: self.to_string(),
                group: group.to_string(),
            })
        }
    }

    /// Integer representative (0 for the trivial group).
    pub fn representative(&self) -> i64 {
        match *self {
            TopologicalType::Trivial => 0,
            TopologicalType::Integer { value } => value,
            TopologicalType::Residue { value, .. } => value as i64,
        }
    }
}

impl fmt::Display for TopologicalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TopologicalType::Trivial => f.write_str("0"),
            TopologicalType::Integer { value } => write!(f, "{value}"),
            TopologicalType::Residue { value, modulus } => write!(f, "{value} mod {modulus}"),
        }
    }
}

impl Group {
    fn validate(self) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidGroup(msg));
        match self {
            Group::GL(r) if r < 1 => bad(format!("GL({r}) needs r >= 1")),
            Group::SL(r) | Group::PGL(r) if r < 2 => bad(format!("{self} needs r >= 2")),
            Group::SLmod { r, m } if r < 2 || m < 1 || r % m != 0 => {
                bad(format!("SL({r})/mu({m}) needs r >= 2 and m dividing r"))
            }
            Group::Sp(n) | Group::PSp(n) if n < 1 => bad("symplectic rank must be >= 1".into()),
            Group::SO(r) | Group::Spin(r) if r < 3 => bad(format!("{self} needs r >= 3")),
            g => Ok(g),
        }
    }

    pub fn gl(r: u32) -> Result<Self> {
        Group::GL(r).validate()
    }

    pub fn sl(r: u32) -> Result<Self> {
        Group::SL(r).validate()
    }

    /// `SL(r)/μ_m`; `m = 1` is normalised to `SL(r)`.
    pub fn sl_mod(r: u32, m: u32) -> Result<Self> {
        let g = Group::SLmod { r, m }.validate()?;
        Ok(if m == 1 { Group::SL(r) } else { g })
    }

    pub fn pgl(r: u32) -> Result<Self> {
        Group::PGL(r).validate()
    }

    /// `Sp(2n)` from the matrix size `2n`.
    pub fn sp(size: u32) -> Result<Self> {
        if !size.is_multiple_of(2) {
            return Err(Error::InvalidGroup(format!("Sp({size}) needs an even parameter")));
        }
        Group::Sp(size / 2).validate()
    }

    pub fn psp(size: u32) -> Result<Self> {
        if !size.is_multiple_of(2) {
            return Err(Error::InvalidGroup(format!("PSp({size}) needs an even parameter")));
        }
        Group::PSp(size / 2).validate()
    }

    pub fn so(r: u32) -> Result<Self> {
        Group::SO(r).validate()
    }

    pub fn spin(r: u32) -> Result<Self> {
        Group::Spin(r).validate()
    }

    pub fn cartan_type(&self) -> CartanType {
        match *self {
            Group::GL(_) | Group::SL(_) | Group::SLmod { .. } | Group::PGL(_) => CartanType::A,
            Group::Sp(_) | Group::PSp(_) => CartanType::C,
            Group::SO(r) | Group::Spin(r) if r % 2 == 0 => CartanType::D,
            Group::SO(_) | Group::Spin(_) => CartanType::B,
        }
    }

    /// Number of ε-coordinates used for characters of this group.
    pub fn ambient_rank(&self) -> usize {
        match *self {
            Group::GL(r) | Group::SL(r) | Group::PGL(r) | Group::SLmod { r, .. } => r as usize,
            Group::Sp(n) | Group::PSp(n) => n as usize,
            Group::SO(r) | Group::Spin(r) => (r / 2) as usize,
        }
    }

    /// Rank of the root system (semisimple rank).
    pub fn semisimple_rank(&self) -> usize {
        match self.cartan_type() {
            CartanType::A => self.ambient_rank() - 1,
            _ => self.ambient_rank(),
        }
    }

    pub fn torus_rank(&self) -> usize {
        match *self {
            Group::GL(r) => r as usize,
            _ => self.semisimple_rank(),
        }
    }

    pub fn dim(&self) -> i64 {
        match *self {
            Group::GL(r) => (r as i64).pow(2),
            Group::SL(r) | Group::PGL(r) | Group::SLmod { r, .. } => (r as i64).pow(2) - 1,
            Group::Sp(n) | Group::PSp(n) => (n as i64) * (2 * n as i64 + 1),
            Group::SO(r) | Group::Spin(r) => (r as i64) * (r as i64 - 1) / 2,
        }
    }

    pub fn dim_center(&self) -> i64 {
        match self {
            Group::GL(_) => 1,
            _ => 0,
        }
    }

    /// π₁(G). For `SL(r)/μ_m` this is `ℤ_m`, the kernel of the covering from `SL(r)`.
    pub fn pi1(&self) -> FundamentalGroup {
        match *self {
            Group::GL(_) => FundamentalGroup::integers(),
            Group::SL(_) | Group::Sp(_) | Group::Spin(_) => FundamentalGroup::trivial(),
            Group::PGL(r) => FundamentalGroup::cyclic(r as u64),
            Group::SLmod { m, .. } => FundamentalGroup::cyclic(m as u64),
            Group::PSp(_) | Group::SO(_) => FundamentalGroup::cyclic(2),
        }
    }

    /// Whether X*(G) is nontrivial (generated by det); only `GL(r)` here.
    pub fn has_determinant(&self) -> bool {
        matches!(self, Group::GL(_))
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Group::GL(r) => write!(f, "GL({r})"),
            Group::SL(r) => write!(f, "SL({r})"),
            Group::SLmod { r, m } => write!(f, "SL({r})/mu({m})"),
            Group::PGL(r) => write!(f, "PGL({r})"),
            Group::Sp(n) => write!(f, "Sp({})", 2 * n),
            Group::PSp(n) => write!(f, "PSp({})", 2 * n),
            Group::SO(r) => write!(f, "SO({r})"),
            Group::Spin(r) => write!(f, "Spin({r})"),
        }
    }
}

impl Serialize for Group {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn parse_param(text: &str, whole: &str) -> Result<u32> {
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("bad group parameter in {whole:?}")));
    }
    text.parse()
        .map_err(|_| Error::Parse(format!("bad group parameter in {whole:?}")))
}

/// Split `Name(param)` into its pieces.
fn split_call(s: &str) -> Option<(&str, &str)> {
    let open = s.find('(')?;
    let inner = s[open + 1..].strip_suffix(')')?;
    Some((&s[..open], inner))
}

impl FromStr for Group {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some((head, tail)) = s.split_once('/') {
            let (name, r) = split_call(head).ok_or_else(|| Error::Parse(format!("bad group {s:?}")))?;
            let (mu, m) = split_call(tail).ok_or_else(|| Error::Parse(format!("bad group {s:?}")))?;
            if name != "SL" || mu != "mu" {
                return Err(Error::Parse(format!("bad group {s:?}")));
            }
            return Group::sl_mod(parse_param(r, s)?, parse_param(m, s)?);
        }
        let (name, param) = split_call(s).ok_or_else(|| Error::Parse(format!("bad group {s:?}")))?;
        let p = parse_param(param, s)?;
        match name {
            "GL" => Group::gl(p),
            "SL" => Group::sl(p),
            "PGL" => Group::pgl(p),
            "Sp" => Group::sp(p),
            "PSp" => Group::psp(p),
            "SO" => Group::so(p),
            "Spin" => Group::spin(p),
            _ => Err(Error::Parse(format!("unknown group family {name:?}"))),
        }
    }
}

/// A root system in the ε-basis together with a chosen base.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootSystem {
    pub cartan_type: CartanType,
    /// Semisimple rank (for type A this is `r - 1`).
    pub rank: usize,
    /// Number of ε-coordinates.
    pub ambient_rank: usize,
    pub roots: Vec<Character>,
    pub simple_roots: Vec<Character>,
}

fn basis_vec(k: usize, entries: &[(usize, i64)]) -> Character {
    let mut v = vec![0; k];
    for &(i, x) in entries {
        v[i] += x;
    }
    Character::new(v).expect("ambient rank is at least 1")
}

impl RootSystem {
    pub fn new(cartan_type: CartanType, ambient_rank: usize) -> Result<Self> {
        let k = ambient_rank;
        if k == 0 {
            return Err(Error::ParameterRange("ambient rank must be at least 1".into()));
        }
        let mut roots = Vec::new();
        let mut simple = Vec::new();
        match cartan_type {
            CartanType::A => {
                for i in 0..k {
                    for j in 0..k {
                        if i != j {
                            roots.push(basis_vec(k, &[(i, 1), (j, -1)]));
                        }
                    }
                }
                for i in 0..k - 1 {
                    simple.push(basis_vec(k, &[(i, 1), (i + 1, -1)]));
                }
            }
            CartanType::B | CartanType::C | CartanType::D => {
                if cartan_type == CartanType::D && k < 2 {
                    return Err(Error::ParameterRange("type D needs rank >= 2".into()));
                }
                for i in 0..k {
                    for j in i + 1..k {
                        for (a, b) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                            roots.push(basis_vec(k, &[(i, a), (j, b)]));
                        }
                    }
                    match cartan_type {
                        CartanType::B => {
                            roots.push(basis_vec(k, &[(i, 1)]));
                            roots.push(basis_vec(k, &[(i, -1)]));
                        }
                        CartanType::C => {
                            roots.push(basis_vec(k, &[(i, 2)]));
                            roots.push(basis_vec(k, &[(i, -2)]));
                        }
                        _ => {}
                    }
                }
                for i in 0..k - 1 {
                    simple.push(basis_vec(k, &[(i, 1), (i + 1, -1)]));
                }
                simple.push(match cartan_type {
                    CartanType::B => basis_vec(k, &[(k - 1, 1)]),
                    CartanType::C => basis_vec(k, &[(k - 1, 2)]),
                    _ => basis_vec(k, &[(k - 2, 1), (k - 1, 1)]),
                });
            }
        }
        let rank = simple.len();
        Ok(Self {
            cartan_type,
            rank,
            ambient_rank: k,
            roots,
            simple_roots: simple,
        })
    }

    /// Coefficient of the simple root `alpha_index` (0-based) in `root`,
    /// read off by pairing with the fundamental coweight.
    pub fn simple_coefficient(&self, root: &Character, alpha_index: usize) -> Result<i64> {
        let n = self.rank;
        let k = self.ambient_rank;
        if alpha_index >= n {
            return Err(Error::ParameterRange(format!(
                "simple root index {alpha_index} outside rank {n}"
            )));
        }
        if root.rank() != k {
            return Err(Error::DimensionMismatch {
                left: root.rank(),
                right: k,
            });
        }
        let c = root.coords();
        let prefix = |m: usize| c[..m].iter().sum::<i64>();
        let total = prefix(k);
        let i = alpha_index;
        Ok(match self.cartan_type {
            CartanType::A => prefix(i + 1),
            CartanType::B => {
                if i + 1 < n {
                    prefix(i + 1)
                } else {
                    total
                }
            }
            CartanType::C => {
                if i + 1 < n {
                    prefix(i + 1)
                } else {
                    total / 2
                }
            }
            CartanType::D => {
                if i + 2 < n {
                    prefix(i + 1)
                } else if i + 2 == n {
                    // ω_{n-1} = ½(1,…,1,−1)
                    (total - 2 * c[k - 1]) / 2
                } else {
                    total / 2
                }
            }
        })
    }

    pub fn is_positive(&self, root: &Character) -> Result<bool> {
        for i in 0..self.rank {
            let c = self.simple_coefficient(root, i)?;
            if c != 0 {
                return Ok(c > 0);
            }
        }
        Ok(false)
    }

    pub fn positive_roots(&self) -> Vec<&Character> {
        self.roots
            .iter()
            .filter(|r| self.is_positive(r).unwrap_or(false))
            .collect()
    }
}

pub fn root_system_of(g: &Group) -> RootSystem {
    RootSystem::new(g.cartan_type(), g.ambient_rank()).expect("validated group has a root system")
}

/// Dimension of the moduli space of stable G-bundles of a fixed topological type.
pub fn moduli_dimension(g: &Group, genus: i64) -> Result<i64> {
    if genus < 2 {
        return Err(Error::GenusTooSmall(genus));
    }
    (genus - 1)
        .checked_mul(g.dim())
        .and_then(|x| x.checked_add(g.dim_center()))
        .ok_or(Error::Overflow("moduli dimension"))
}
