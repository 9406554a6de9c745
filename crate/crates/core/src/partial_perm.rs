//! Partial injections of `{0..n}`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A partial injection on `n` points, stored 0-based.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PartialPerm {
    images: Vec<Option<u16>>,
}

impl PartialPerm {
    pub fn new(images: Vec<Option<usize>>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for (i, im) in images.into_iter().enumerate() {
            match im {
                Some(j) if j >= n => {
                    return Err(Error::InvalidPartialPerm(format!("image {j} of point {i} out of range")));
                }
                Some(j) => {
                    if seen[j] {
                        return Err(Error::InvalidPartialPerm(format!("point {j} hit twice")));
                    }
                    seen[j] = true;
                    out.push(Some(j as u16));
                }
                None => out.push(None),
            }
        }
        Ok(PartialPerm { images: out })
    }

    /// 1-based images, `None` for undefined, as in input documents.
    pub fn from_one_based(images: &[Option<usize>]) -> Result<Self> {
        let mut zero = Vec::with_capacity(images.len());
        for im in images {
            zero.push(match im {
                Some(0) => return Err(Error::InvalidPartialPerm("images are 1-based".into())),
                Some(j) => Some(j - 1),
                None => None,
            });
        }
        PartialPerm::new(zero)
    }

    pub fn identity(n: usize) -> Self {
        PartialPerm { images: (0..n).map(|i| Some(i as u16)).collect() }
    }

    pub fn empty(n: usize) -> Self {
        PartialPerm { images: vec![None; n] }
    }

    /// The identity restricted to `domain`.
    pub fn partial_identity(n: usize, domain: &[usize]) -> Self {
        let mut images = vec![None; n];
        for &i in domain {
            images[i] = Some(i as u16);
        }
        PartialPerm { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> Option<usize> {
        self.images[i].map(usize::from)
    }

    pub fn images(&self) -> Vec<Option<usize>> {
        self.images.iter().map(|x| x.map(usize::from)).collect()
    }

    pub fn one_based(&self) -> Vec<Option<usize>> {
        self.images.iter().map(|x| x.map(|j| j as usize + 1)).collect()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &PartialPerm) -> PartialPerm {
        debug_assert_eq!(self.degree(), other.degree());
        PartialPerm {
            images: other.images.iter().map(|x| x.and_then(|j| self.images[j as usize])).collect(),
        }
    }

    pub fn inverse(&self) -> PartialPerm {
        let mut images = vec![None; self.degree()];
        for (i, x) in self.images.iter().enumerate() {
            if let Some(j) = x {
                images[*j as usize] = Some(i as u16);
            }
        }
        PartialPerm { images }
    }

    pub fn domain(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&i| self.images[i].is_some()).collect()
    }

    pub fn rank(&self) -> usize {
        self.images.iter().filter(|x| x.is_some()).count()
    }

    pub fn is_idempotent(&self) -> bool {
        self.images.iter().enumerate().all(|(i, x)| x.is_none_or(|j| j as usize == i))
    }

    fn key(&self) -> impl Iterator<Item = u32> + '_ {
        self.images.iter().map(|x| x.map_or(u32::MAX, u32::from))
    }
}

impl Ord for PartialPerm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.key().cmp(other.key()))
    }
}

impl PartialOrd for PartialPerm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for PartialPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PartialPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            match x {
                Some(j) => write!(f, "{}", j + 1)?,
                None => write!(f, "-")?,
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_injective() {
        assert!(PartialPerm::new(vec![Some(0), Some(0)]).is_err());
        assert!(PartialPerm::new(vec![Some(2), None]).is_err());
    }

    #[test]
    fn composition_applies_right_first() {
        let shift = PartialPerm::new(vec![Some(1), None]).unwrap(); // 1 -> 2
        let back = shift.inverse();
        assert_eq!(back.compose(&shift), PartialPerm::partial_identity(2, &[0]));
        assert_eq!(shift.compose(&back), PartialPerm::partial_identity(2, &[1]));
    }

    #[test]
    fn undefined_sorts_last() {
        let a = PartialPerm::new(vec![Some(0), None]).unwrap();
        let b = PartialPerm::new(vec![None, Some(0)]).unwrap();
        assert!(a < b);
        assert!(PartialPerm::identity(2) < PartialPerm::empty(2));
    }
}
