//! Permutations in one-line image form.
//!
//! Internally points are `0..degree`; everything that crosses an I/O boundary
//! uses 1-based images. The product `a * b` applies `a` first, then `b`
//! (right action), so `(a * b)[i] = b[a[i]]`.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Box<[u32]>);

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree as u32).collect())
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &x in &images {
            let x = x as usize;
            if x >= degree {
                return Err(Error::InvalidPermutation {
                    degree,
                    reason: format!("image {} out of range", x + 1),
                });
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation {
                    degree,
                    reason: format!("image {} repeated", x + 1),
                });
            }
        }
        Ok(Perm(images.into_boxed_slice()))
    }

    /// Builds a permutation of `{1..degree}` from 1-based images.
    pub fn from_one_based(degree: usize, images: &[u32]) -> Result<Self> {
        if images.len() != degree {
            return Err(Error::InvalidPermutation {
                degree,
                reason: format!("expected {degree} images, got {}", images.len()),
            });
        }
        if images.contains(&0) {
            return Err(Error::InvalidPermutation {
                degree,
                reason: "images are 1-based; found 0".into(),
            });
        }
        Self::from_images(images.iter().map(|&x| x - 1).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn to_one_based(&self) -> Vec<u32> {
        self.0.iter().map(|&x| x + 1).collect()
    }

    pub fn apply(&self, point: u32) -> u32 {
        self.0[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm(inv.into_boxed_slice())
    }

    /// Apply `self`, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    /// Juxtaposes permutations on consecutive blocks of points.
    pub fn concat<'a, I: IntoIterator<Item = &'a Perm>>(parts: I) -> Perm {
        let mut out = Vec::new();
        for p in parts {
            let offset = out.len() as u32;
            out.extend(p.0.iter().map(|&x| x + offset));
        }
        Perm(out.into_boxed_slice())
    }

    /// The restriction to the block `offset..offset+len`, which must be invariant.
    pub fn block(&self, offset: usize, len: usize) -> Perm {
        Perm(
            self.0[offset..offset + len]
                .iter()
                .map(|&x| x - offset as u32)
                .collect(),
        )
    }
}

impl Mul for &Perm {
    type Output = Perm;

    fn mul(self, rhs: &Perm) -> Perm {
        self.then(rhs)
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_one_based())
    }
}
