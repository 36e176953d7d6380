//! Standard parabolic subgroups, their Levi blocks, the roots of `g/p`,
//! and numerical types of reductions.
//!
//! A parabolic is recorded by the set of *omitted* simple roots: it is
//! generated by the standard Borel and the negative root groups of the
//! simple roots that are not omitted. Indices are 0-based internally and
//! printed 1-based.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lattice::Character;
use crate::rootdata::{root_system_of, CartanType, Group, RootSystem};

/// The two conjugacy classes of maximal isotropic parabolics in `SO(2n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub enum Lagrangian {
    #[default]
    #[serde(rename = "lagrangian-1")]
    First,
    #[serde(rename = "lagrangian-2")]
    Second,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParabolicType {
    group: Group,
    omitted: BTreeSet<usize>,
}

/// Convenient description of a standard parabolic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FlagSignature {
    /// Type A: block sizes `r_1, …, r_t` summing to `r`.
    Blocks(Vec<u32>),
    /// Types B/C/D: dimensions of the isotropic subspaces in the flag.
    Isotropic { dims: Vec<u32>, tag: Option<Lagrangian> },
}

impl fmt::Display for FlagSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        match self {
            FlagSignature::Blocks(b) => f.write_str(&join(b)),
            FlagSignature::Isotropic { dims, tag } => {
                write!(f, "iso:{}", join(dims))?;
                match tag {
                    Some(Lagrangian::First) => write!(f, "/lagrangian-1"),
                    Some(Lagrangian::Second) => write!(f, "/lagrangian-2"),
                    None => Ok(()),
                }
            }
        }
    }
}

impl Serialize for FlagSignature {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Parse a comma-separated list of positive integers.
pub fn parse_list(text: &str) -> Result<Vec<u32>> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad list entry {t:?} in {text:?}")))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum BlockKind {
    Gl { size: usize },
    Classical { cartan_type: CartanType, rank: usize },
}

/// One simple factor (or GL factor) of the Levi subgroup.
///
/// A GL block acts on the coordinates `coords` twisted by `signs`: its
/// determinant is the character `Σ signs[i]·ε_{coords[i]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeviBlock {
    pub kind: BlockKind,
    pub coords: Vec<usize>,
    pub signs: Vec<i64>,
}

impl LeviBlock {
    pub fn is_gl(&self) -> bool {
        matches!(self.kind, BlockKind::Gl { .. })
    }

    pub fn name(&self) -> String {
        match self.kind {
            BlockKind::Gl { size } => format!("GL({size})"),
            BlockKind::Classical {
                cartan_type: CartanType::C,
                rank,
            } => format!("Sp({})", 2 * rank),
            BlockKind::Classical {
                cartan_type: CartanType::B,
                rank,
            } => format!("SO({})", 2 * rank + 1),
            BlockKind::Classical {
                cartan_type: CartanType::D,
                rank,
            } => format!("SO({})", 2 * rank),
            BlockKind::Classical {
                cartan_type: CartanType::A,
                rank,
            } => format!("SL({})", rank + 1),
        }
    }

    /// The determinant character of a GL block, `None` for classical blocks.
    pub fn det_character(&self, ambient: usize) -> Option<Character> {
        if !self.is_gl() {
            return None;
        }
        let mut v = vec![0; ambient];
        for (&c, &s) in self.coords.iter().zip(&self.signs) {
            v[c] = s;
        }
        Character::new(v).ok()
    }
}

impl fmt::Display for LeviBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl ParabolicType {
    pub fn from_omitted(group: Group, omitted: impl IntoIterator<Item = usize>) -> Result<Self> {
        let rank = group.semisimple_rank();
        let omitted: BTreeSet<usize> = omitted.into_iter().collect();
        if let Some(&bad) = omitted.iter().find(|&&i| i >= rank) {
            return Err(Error::InvalidParabolic(format!(
                "simple root index {} outside rank {rank} of {group}",
                bad + 1
            )));
        }
        Ok(Self { group, omitted })
    }

    /// P = G, representable but rejected wherever quotient roots are needed.
    pub fn whole_group(group: Group) -> Self {
        Self {
            group,
            omitted: BTreeSet::new(),
        }
    }

    pub fn borel(group: Group) -> Self {
        Self {
            group,
            omitted: (0..group.semisimple_rank()).collect(),
        }
    }

    /// Type A parabolic stabilising a flag with the given block sizes.
    pub fn from_blocks(group: Group, sizes: &[u32]) -> Result<Self> {
        if group.cartan_type() != CartanType::A {
            return Err(Error::InvalidParabolic(format!(
                "block signatures apply to type A groups, not {group}"
            )));
        }
        let r = group.ambient_rank() as u64;
        if sizes.is_empty() || sizes.contains(&0) {
            return Err(Error::InvalidParabolic("block sizes must be positive".into()));
        }
        let total: u64 = sizes.iter().map(|&s| s as u64).sum();
        if total != r {
            return Err(Error::InvalidParabolic(format!(
                "block sizes sum to {total}, expected {r} for {group}"
            )));
        }
        let mut omitted = Vec::new();
        let mut acc = 0usize;
        for &s in &sizes[..sizes.len() - 1] {
            acc += s as usize;
            omitted.push(acc - 1);
        }
        Self::from_omitted(group, omitted)
    }

    /// Maximal parabolic of a type A group stabilising an `n`-dimensional subspace.
    pub fn maximal(group: Group, n: u32) -> Result<Self> {
        let r = group.ambient_rank() as u32;
        if n == 0 || n >= r {
            return Err(Error::ParameterRange(format!("need 1 <= n <= r-1, got n={n}, r={r}")));
        }
        Self::from_blocks(group, &[n, r - n])
    }

    /// Types B/C/D parabolic stabilising an isotropic flag of the given dimensions.
    pub fn from_isotropic_flag(group: Group, dims: &[u32], tag: Lagrangian) -> Result<Self> {
        let ty = group.cartan_type();
        if ty == CartanType::A {
            return Err(Error::InvalidParabolic(format!(
                "isotropic flags apply to types B/C/D, not {group}"
            )));
        }
        let n = group.ambient_rank() as u32;
        if dims.is_empty() {
            return Err(Error::InvalidParabolic("isotropic flag must be nonempty".into()));
        }
        if dims.windows(2).any(|w| w[0] >= w[1]) || dims[0] == 0 || *dims.last().unwrap() > n {
            return Err(Error::InvalidParabolic(format!(
                "isotropic dimensions must increase strictly within 1..={n}"
            )));
        }
        let n = n as usize;
        let mut omitted = BTreeSet::new();
        for &k in dims {
            let k = k as usize;
            if ty == CartanType::D && k + 1 >= n {
                if k + 1 == n || dims.contains(&((n - 1) as u32)) {
                    omitted.insert(n - 2);
                    omitted.insert(n - 1);
                } else {
                    omitted.insert(match tag {
                        Lagrangian::First => n - 1,
                        Lagrangian::Second => n - 2,
                    });
                }
            } else {
                omitted.insert(k - 1);
            }
        }
        Self::from_omitted(group, omitted)
    }

    /// Stabiliser of a maximal isotropic subspace (Siegel parabolic for `Sp`).
    pub fn lagrangian(group: Group, tag: Lagrangian) -> Result<Self> {
        let n = group.ambient_rank() as u32;
        Self::from_isotropic_flag(group, &[n], tag)
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn omitted(&self) -> &BTreeSet<usize> {
        &self.omitted
    }

    pub fn is_proper(&self) -> bool {
        !self.omitted.is_empty()
    }

    pub fn is_borel(&self) -> bool {
        self.omitted.len() == self.group.semisimple_rank()
    }

    pub fn is_maximal(&self) -> bool {
        self.omitted.len() == 1
    }

    /// Same omitted simple roots on another group with the same root system.
    pub fn on_group(&self, group: Group) -> Result<Self> {
        if root_system_of(&group) != root_system_of(&self.group) {
            return Err(Error::GroupMismatch {
                expected: self.group.to_string(),
                got: group.to_string(),
            });
        }
        Ok(Self {
            group,
            omitted: self.omitted.clone(),
        })
    }

    pub fn root_system(&self) -> RootSystem {
        root_system_of(&self.group)
    }

    /// Sum of the coefficients of `root` on the omitted simple roots.
    fn omitted_weight(&self, rs: &RootSystem, root: &Character) -> i64 {
        self.omitted
            .iter()
            .map(|&i| rs.simple_coefficient(root, i).expect("root of this system"))
            .sum()
    }

    /// Roots of the Levi subalgebra.
    pub fn levi_roots(&self) -> Vec<Character> {
        let rs = self.root_system();
        rs.roots
            .iter()
            .filter(|r| self.omitted_weight(&rs, r) == 0)
            .cloned()
            .collect()
    }

    /// Roots of `p`.
    pub fn parabolic_roots(&self) -> Vec<Character> {
        let rs = self.root_system();
        rs.roots
            .iter()
            .filter(|r| self.omitted_weight(&rs, r) >= 0)
            .cloned()
            .collect()
    }

    /// Roots whose root spaces make up `g/p`.
    pub fn quotient_roots(&self) -> Result<Vec<Character>> {
        if !self.is_proper() {
            return Err(Error::DegenerateParabolic);
        }
        let rs = self.root_system();
        Ok(rs
            .roots
            .iter()
            .filter(|r| self.omitted_weight(&rs, r) < 0)
            .cloned()
            .collect())
    }

    /// `det ι`: the determinant of the isotropy representation on `g/p`, in torus coordinates.
    pub fn isotropy_det_char(&self) -> Result<Character> {
        let roots = self.quotient_roots()?;
        Character::sum(self.group.ambient_rank(), &roots)
    }

    pub fn dim(&self) -> i64 {
        self.group.torus_rank() as i64 + self.parabolic_roots().len() as i64
    }

    /// dim G/P.
    pub fn flag_dim(&self) -> i64 {
        self.group.dim() - self.dim()
    }

    /// Decompose the Levi into GL blocks and at most one classical block.
    pub fn levi_blocks(&self) -> Vec<LeviBlock> {
        let k = self.group.ambient_rank();
        let levi = self.levi_roots();
        let mut parent: Vec<usize> = (0..k).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let support = |r: &Character| -> Vec<usize> {
            r.coords()
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, _)| i)
                .collect()
        };
        for r in &levi {
            let s = support(r);
            if s.len() == 2 {
                let (a, b) = (find(&mut parent, s[0]), find(&mut parent, s[1]));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut components: Vec<Vec<usize>> = Vec::new();
        for i in 0..k {
            let root = find(&mut parent, i);
            match components.iter_mut().find(|c| c[0] == root) {
                Some(c) => c.push(i),
                None => components.push(vec![i]),
            }
        }
        components
            .into_iter()
            .map(|coords| {
                let in_block: Vec<&Character> = levi
                    .iter()
                    .filter(|r| support(r).iter().all(|i| coords.contains(i)))
                    .collect();
                match gl_signs(&coords, &in_block) {
                    Some(signs) => LeviBlock {
                        kind: BlockKind::Gl { size: coords.len() },
                        coords,
                        signs,
                    },
                    None => LeviBlock {
                        kind: BlockKind::Classical {
                            cartan_type: self.group.cartan_type(),
                            rank: coords.len(),
                        },
                        signs: vec![1; coords.len()],
                        coords,
                    },
                }
            })
            .collect()
    }

    pub fn gl_blocks(&self) -> Vec<LeviBlock> {
        self.levi_blocks().into_iter().filter(LeviBlock::is_gl).collect()
    }

    pub fn flag_signature(&self) -> FlagSignature {
        let n = self.group.semisimple_rank();
        match self.group.cartan_type() {
            CartanType::A => {
                let mut sizes = Vec::new();
                let mut start = 0usize;
                for &i in &self.omitted {
                    sizes.push((i + 1 - start) as u32);
                    start = i + 1;
                }
                sizes.push((n + 1 - start) as u32);
                FlagSignature::Blocks(sizes)
            }
            CartanType::D => {
                let both = self.omitted.contains(&(n - 2)) && self.omitted.contains(&(n - 1));
                let mut dims: Vec<u32> = self
                    .omitted
                    .iter()
                    .filter(|&&i| i + 2 < n)
                    .map(|&i| (i + 1) as u32)
                    .collect();
                let mut tag = None;
                if both {
                    dims.push((n - 1) as u32);
                } else if self.omitted.contains(&(n - 1)) {
                    dims.push(n as u32);
                    tag = Some(Lagrangian::First);
                } else if self.omitted.contains(&(n - 2)) {
                    dims.push(n as u32);
                    tag = Some(Lagrangian::Second);
                }
                FlagSignature::Isotropic { dims, tag }
            }
            _ => FlagSignature::Isotropic {
                dims: self.omitted.iter().map(|&i| (i + 1) as u32).collect(),
                tag: None,
            },
        }
    }
}

/// Try to write every root as `±(σ_i ε_i − σ_j ε_j)`; `None` means the
/// block carries roots of the form `±ε_i`, `±2ε_i` or `±(ε_i + ε_j)` that no
/// sign twist removes, i.e. it is a classical block.
fn gl_signs(coords: &[usize], roots: &[&Character]) -> Option<Vec<i64>> {
    let mut sign: Vec<Option<i64>> = vec![None; coords.len()];
    sign[0] = Some(1);
    let pos = |c: usize| coords.iter().position(|&x| x == c).unwrap();
    // propagate until stable; the block is connected so this terminates with all signs set
    let mut changed = true;
    while changed {
        changed = false;
        for r in roots {
            let nz: Vec<(usize, i64)> = r
                .coords()
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| (i, c))
                .collect();
            if nz.len() != 2 || nz.iter().any(|&(_, c)| c.abs() != 1) {
                return None;
            }
            let ((i, a), (j, b)) = (nz[0], nz[1]);
            let (pi, pj) = (pos(i), pos(j));
            match (sign[pi], sign[pj]) {
                (Some(si), Some(sj)) => {
                    if sj != -a * b * si {
                        return None;
                    }
                }
                (Some(si), None) => {
                    sign[pj] = Some(-a * b * si);
                    changed = true;
                }
                (None, Some(sj)) => {
                    sign[pi] = Some(-a * b * sj);
                    changed = true;
                }
                (None, None) => {}
            }
        }
    }
    sign.into_iter().collect()
}

impl fmt::Display for ParabolicType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.group, self.flag_signature())
    }
}

impl Serialize for ParabolicType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("ParabolicType", 3)?;
        st.serialize_field("group", &self.group)?;
        st.serialize_field("flag", &self.flag_signature())?;
        let omitted: Vec<usize> = self.omitted.iter().map(|i| i + 1).collect();
        st.serialize_field("omitted_simple_roots", &omitted)?;
        st.end()
    }
}

/// The degree of a P-bundle: one integer per GL block of the Levi.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NumericalType {
    parabolic: ParabolicType,
    block_degrees: Vec<i64>,
}

impl NumericalType {
    pub fn new(parabolic: ParabolicType, block_degrees: Vec<i64>) -> Result<Self> {
        let expected = parabolic.gl_blocks().len();
        if block_degrees.len() != expected {
            return Err(Error::BlockCountMismatch {
                expected,
                got: block_degrees.len(),
            });
        }
        Ok(Self {
            parabolic,
            block_degrees,
        })
    }

    pub fn parabolic(&self) -> &ParabolicType {
        &self.parabolic
    }

    pub fn block_degrees(&self) -> &[i64] {
        &self.block_degrees
    }
}

/// Image of a numerical type in Hom(X*(G), ℤ), evaluated on the generator
/// `det`. `None` when X*(G) is trivial.
pub fn degree_pushforward(d: &NumericalType) -> Result<Option<i64>> {
    if !d.parabolic.group.has_determinant() {
        return Ok(None);
    }
    d.block_degrees
        .iter()
        .try_fold(0i64, |acc, &x| acc.checked_add(x))
        .map(Some)
        .ok_or(Error::Overflow("degree pushforward"))
}
