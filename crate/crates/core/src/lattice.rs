//! Character and cocharacter lattices of a diagonal maximal torus.
//!
//! Both lattices are written in the ε-coordinate basis: a character is the
//! exponent vector `(ℓ_1, …, ℓ_k)` of `t_1^{ℓ_1} ⋯ t_k^{ℓ_k}` and a
//! cocharacter is the degree vector `(d_1, …, d_k)` of
//! `t ↦ diag(t^{d_1}, …, t^{d_k})`. All arithmetic is checked.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element of X*(T).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Character(Vec<i64>);

/// An element of X_*(T).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cocharacter(Vec<i64>);

fn check_rank(len: usize) -> Result<()> {
    if len == 0 {
        return Err(Error::ParameterRange("torus rank must be at least 1".into()));
    }
    Ok(())
}

fn zip_checked(a: &[i64], b: &[i64], op: impl Fn(i64, i64) -> Option<i64>, what: &'static str) -> Result<Vec<i64>> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    a.iter()
        .zip(b)
        .map(|(&x, &y)| op(x, y).ok_or(Error::Overflow(what)))
        .collect()
}

fn dot(a: &[i64], b: &[i64]) -> Result<i64> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    a.iter().zip(b).try_fold(0i64, |acc, (&x, &y)| {
        x.checked_mul(y)
            .and_then(|p| acc.checked_add(p))
            .ok_or(Error::Overflow("pairing"))
    })
}

macro_rules! lattice_vector {
    ($ty:ident) => {
        impl $ty {
            pub fn new(coords: Vec<i64>) -> Result<Self> {
                check_rank(coords.len())?;
                Ok(Self(coords))
            }

            pub fn zero(rank: usize) -> Result<Self> {
                Self::new(vec![0; rank])
            }

            /// The i-th coordinate vector (0-based).
            pub fn unit(rank: usize, i: usize) -> Result<Self> {
                if i >= rank {
                    return Err(Error::ParameterRange(format!(
                        "coordinate {i} outside torus of rank {rank}"
                    )));
                }
                let mut v = vec![0; rank];
                v[i] = 1;
                Self::new(v)
            }

            pub fn rank(&self) -> usize {
                self.0.len()
            }

            pub fn coords(&self) -> &[i64] {
                &self.0
            }

            pub fn into_coords(self) -> Vec<i64> {
                self.0
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(|&x| x == 0)
            }

            pub fn checked_add(&self, other: &Self) -> Result<Self> {
                zip_checked(&self.0, &other.0, i64::checked_add, "addition").map(Self)
            }

            pub fn checked_sub(&self, other: &Self) -> Result<Self> {
                zip_checked(&self.0, &other.0, i64::checked_sub, "subtraction").map(Self)
            }

            pub fn checked_neg(&self) -> Result<Self> {
                self.checked_scale(-1)
            }

            pub fn checked_scale(&self, k: i64) -> Result<Self> {
                self.0
                    .iter()
                    .map(|&x| x.checked_mul(k).ok_or(Error::Overflow("scaling")))
                    .collect::<Result<Vec<_>>>()
                    .map(Self)
            }

            /// Sum of all coordinates.
            pub fn coordinate_sum(&self) -> Result<i64> {
                self.0
                    .iter()
                    .try_fold(0i64, |acc, &x| acc.checked_add(x))
                    .ok_or(Error::Overflow("coordinate sum"))
            }
        }

        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "(")?;
                for (i, x) in self.0.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
        }
    };
}

lattice_vector!(Character);
lattice_vector!(Cocharacter);

impl Character {
    /// Reinterpret the exponent vector as a cocharacter (the ε-basis is self-dual).
    pub fn as_cocharacter(&self) -> Cocharacter {
        Cocharacter(self.0.clone())
    }

    /// Sum of a nonempty collection of characters of equal rank.
    pub fn sum<'a>(rank: usize, items: impl IntoIterator<Item = &'a Character>) -> Result<Self> {
        items
            .into_iter()
            .try_fold(Character::zero(rank)?, |acc, c| acc.checked_add(c))
    }
}

impl Cocharacter {
    pub fn as_character(&self) -> Character {
        Character(self.0.clone())
    }
}

/// The natural pairing X*(T) × X_*(T) → ℤ, i.e. the degree of `t ↦ χ(λ(t))`.
pub fn pairing(chi: &Character, lam: &Cocharacter) -> Result<i64> {
    dot(&chi.0, &lam.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ch(v: &[i64]) -> Character {
        Character::new(v.to_vec()).unwrap()
    }

    fn co(v: &[i64]) -> Cocharacter {
        Cocharacter::new(v.to_vec()).unwrap()
    }

    #[test]
    fn trivial_character_pairs_to_zero() {
        assert_eq!(pairing(&ch(&[0, 0, 0]), &co(&[5, -3, 7])).unwrap(), 0);
    }

    #[test]
    fn determinant_pairs_to_total_degree() {
        for d in [[1, 2, 3], [-4, 0, 9], [0, 0, 0]] {
            let total: i64 = d.iter().sum();
            assert_eq!(pairing(&ch(&[1, 1, 1]), &co(&d)).unwrap(), total);
        }
    }

    #[test]
    fn borel_isotropy_example() {
        // 2(d3 - d1) with d = (-1, 0, 1)
        assert_eq!(pairing(&ch(&[-2, 0, 2]), &co(&[-1, 0, 1])).unwrap(), 4);
        assert_eq!(2 * (1 - (-1)), 4);
    }

    #[test]
    fn mismatched_lengths_rejected() {
        assert_eq!(
            pairing(&ch(&[1, 2]), &co(&[1, 2, 3])),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        );
        assert!(ch(&[1]).checked_add(&ch(&[1, 2])).is_err());
    }

    #[test]
    fn empty_vectors_rejected() {
        assert!(Character::new(vec![]).is_err());
        assert!(Cocharacter::zero(0).is_err());
    }

    #[test]
    fn overflow_is_an_error() {
        let big = ch(&[i64::MAX, 1]);
        assert_eq!(pairing(&big, &co(&[2, 0])), Err(Error::Overflow("pairing")));
        assert_eq!(big.checked_add(&ch(&[1, 0])), Err(Error::Overflow("addition")));
        assert!(ch(&[i64::MIN]).checked_neg().is_err());
    }

    fn vec_pair(max_rank: usize) -> impl Strategy<Value = (Vec<i64>, Vec<i64>, Vec<i64>)> {
        (1..=max_rank).prop_flat_map(|n| {
            (
                prop::collection::vec(-10i64..=10, n),
                prop::collection::vec(-10i64..=10, n),
                prop::collection::vec(-10i64..=10, n),
            )
        })
    }

    proptest! {
        #[test]
        fn pairing_is_bilinear((a, b, l) in vec_pair(12), k in -10i64..=10) {
            let (a, b, l) = (ch(&a), ch(&b), co(&l));
            let lhs = pairing(&a.checked_add(&b).unwrap(), &l).unwrap();
            prop_assert_eq!(lhs, pairing(&a, &l).unwrap() + pairing(&b, &l).unwrap());
            prop_assert_eq!(
                pairing(&a.checked_scale(k).unwrap(), &l).unwrap(),
                k * pairing(&a, &l).unwrap()
            );
            prop_assert_eq!(pairing(&a.checked_neg().unwrap(), &l).unwrap(), -pairing(&a, &l).unwrap());
        }

        #[test]
        fn pairing_is_symmetric((a, _b, l) in vec_pair(12)) {
            let (a, l) = (ch(&a), co(&l));
            prop_assert_eq!(
                pairing(&a, &l).unwrap(),
                pairing(&l.as_character(), &a.as_cocharacter()).unwrap()
            );
        }
    }
}
