//! Permutations of `{0, .., degree - 1}`.
//!
//! Products are read left to right: `a.compose(&b)` applies `a` first and then
//! `b`, so `x^(ab) = (x^a)^b`.

use std::fmt;

use crate::error::GroupError;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    /// Builds a permutation from its image list, checking bijectivity.
    pub fn new(images: Vec<usize>) -> Result<Self, GroupError> {
        let n = images.len();
        if n == 0 {
            return Err(GroupError::BadPermutation("degree must be positive".into()));
        }
        if n > u16::MAX as usize {
            return Err(GroupError::BadPermutation(format!("degree {n} too large")));
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n {
                return Err(GroupError::BadPermutation(format!(
                    "image {x} out of range for degree {n}"
                )));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(GroupError::BadPermutation(format!("image {x} repeated")));
            }
        }
        Ok(Permutation {
            images: images.into_iter().map(|x| x as u16).collect(),
        })
    }

    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds a permutation from disjoint cycles; points not mentioned are fixed.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self, GroupError> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= degree {
                    return Err(GroupError::BadPermutation(format!(
                        "point {x} out of range for degree {degree}"
                    )));
                }
                if std::mem::replace(&mut touched[x], true) {
                    return Err(GroupError::BadPermutation(format!(
                        "point {x} appears in more than one cycle position"
                    )));
                }
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Permutation::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&x| x as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| i == x as usize)
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u16; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u16;
        }
        Permutation { images }
    }

    pub fn pow(&self, mut k: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            k >>= 1;
        }
        acc
    }

    /// Nontrivial cycles, each starting at its smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.image(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.image(x);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Order as the lcm of cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1, |acc, c| crate::arith::lcm(acc, c.len() as u64))
    }

    /// Same permutation acting on `degree` points (`degree >= self.degree()`),
    /// with the first point shifted by `offset`.
    pub(crate) fn embed(&self, degree: usize, offset: usize) -> Permutation {
        let mut images: Vec<u16> = (0..degree as u16).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[i + offset] = x + offset as u16;
        }
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}
