//! Fixed-degree permutations and explicit group closure.
//!
//! Points are `0..N`. Composition follows function notation:
//! `p.compose(&q)` applies `q` first, then `p`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::PermError;

/// A bijection on `{0, .., N-1}` stored as its image array.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Perm<const N: usize> {
    images: [u8; N],
}

/// Sign of a permutation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Self {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    /// `+1` for even, `-1` for odd.
    pub fn sign(self) -> i8 {
        match self {
            Parity::Even => 1,
            Parity::Odd => -1,
        }
    }

    pub fn combine(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => f.write_str("even"),
            Parity::Odd => f.write_str("odd"),
        }
    }
}

impl<const N: usize> Perm<N> {
    pub fn identity() -> Self {
        let mut images = [0u8; N];
        for (i, slot) in images.iter_mut().enumerate() {
            *slot = i as u8;
        }
        Perm { images }
    }

    /// Builds a permutation from its image array, rejecting anything that is
    /// not a bijection on `0..N`.
    pub fn from_images(images: &[usize]) -> Result<Self, PermError> {
        if images.len() != N {
            return Err(PermError::WrongLength {
                expected: N,
                found: images.len(),
            });
        }
        let mut seen = [false; N];
        let mut out = [0u8; N];
        for (i, &img) in images.iter().enumerate() {
            if img >= N {
                return Err(PermError::OutOfRange { point: img, degree: N });
            }
            if seen[img] {
                return Err(PermError::NotBijective { repeated: img });
            }
            seen[img] = true;
            out[i] = img as u8;
        }
        Ok(Perm { images: out })
    }

    /// Builds a permutation from disjoint cycles over `0..N`.
    pub fn from_cycles(cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..N).collect();
        let mut touched = [false; N];
        for cycle in cycles {
            for &p in cycle {
                if p >= N {
                    return Err(PermError::OutOfRange { point: p, degree: N });
                }
                if touched[p] {
                    return Err(PermError::NotBijective { repeated: p });
                }
                touched[p] = true;
            }
            for (k, &p) in cycle.iter().enumerate() {
                images[p] = cycle[(k + 1) % cycle.len()];
            }
        }
        Self::from_images(&images)
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&i| i as usize)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.images().collect()
    }

    /// `self ∘ other`: apply `other`, then `self`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut images = [0u8; N];
        for (i, slot) in images.iter_mut().enumerate() {
            *slot = self.images[other.images[i] as usize];
        }
        Perm { images }
    }

    pub fn inverse(&self) -> Self {
        let mut images = [0u8; N];
        for (i, &img) in self.images.iter().enumerate() {
            images[img as usize] = i as u8;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img as usize)
    }

    /// Disjoint cycles of length at least 2, each starting at its smallest
    /// point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = [false; N];
        let mut out = Vec::new();
        for start in 0..N {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut next = self.apply(start);
            while next != start {
                seen[next] = true;
                cycle.push(next);
                next = self.apply(next);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Parity from the cycle type: a `k`-cycle is a product of `k - 1`
    /// transpositions.
    pub fn parity(&self) -> Parity {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if transpositions.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Order in the symmetric group: lcm of the cycle lengths.
    pub fn order(&self) -> usize {
        self.cycles()
            .iter()
            .map(Vec::len)
            .fold(1, |acc, len| acc / gcd(acc, len) * len)
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl<const N: usize> Default for Perm<N> {
    fn default() -> Self {
        Self::identity()
    }
}

impl<const N: usize> fmt::Debug for Perm<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Perm").field(&self.to_vec()).finish()
    }
}

impl<const N: usize> TryFrom<Vec<usize>> for Perm<N> {
    type Error = PermError;

    fn try_from(images: Vec<usize>) -> Result<Self, Self::Error> {
        Self::from_images(&images)
    }
}

impl<const N: usize> From<Perm<N>> for Vec<usize> {
    fn from(p: Perm<N>) -> Self {
        p.to_vec()
    }
}

/// Every permutation of `0..N`, in lexicographic order of image arrays.
pub fn all_permutations<const N: usize>() -> Vec<Perm<N>> {
    use itertools::Itertools;
    (0..N)
        .permutations(N)
        .map(|images| Perm::from_images(&images).expect("itertools yields bijections"))
        .collect()
}

/// Closure of `generators` under `compose`, starting from `identity`.
///
/// For a finite group, the set of all finite products of generators is
/// already closed under inverses, so only products are enumerated.
pub fn closure<T, F>(identity: T, generators: &[T], compose: F) -> BTreeSet<T>
where
    T: Clone + Ord,
    F: Fn(&T, &T) -> T,
{
    let mut group = BTreeSet::new();
    group.insert(identity.clone());
    let mut frontier = vec![identity];
    while let Some(element) = frontier.pop() {
        for g in generators {
            let product = compose(g, &element);
            if group.insert(product.clone()) {
                frontier.push(product);
            }
        }
    }
    group
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_perm<const N: usize>() -> impl Strategy<Value = Perm<N>> {
        Just((0..N).collect::<Vec<usize>>())
            .prop_shuffle()
            .prop_map(|v| Perm::from_images(&v).unwrap())
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(matches!(
            Perm::<3>::from_images(&[0, 0, 1]),
            Err(PermError::NotBijective { repeated: 0 })
        ));
        assert!(matches!(
            Perm::<3>::from_images(&[0, 1]),
            Err(PermError::WrongLength { .. })
        ));
        assert!(matches!(
            Perm::<3>::from_images(&[0, 1, 3]),
            Err(PermError::OutOfRange { .. })
        ));
    }

    #[test]
    fn cycles_round_trip() {
        let p = Perm::<5>::from_cycles(&[vec![0, 2, 4], vec![1, 3]]).unwrap();
        assert_eq!(p.to_vec(), vec![2, 3, 4, 1, 0]);
        assert_eq!(p.cycles(), vec![vec![0, 2, 4], vec![1, 3]]);
        assert_eq!(p.order(), 6);
        assert_eq!(p.parity(), Parity::Odd);
    }

    #[test]
    fn symmetric_group_counts() {
        let s5 = all_permutations::<5>();
        assert_eq!(s5.len(), 120);
        assert_eq!(s5.iter().filter(|p| p.parity() == Parity::Even).count(), 60);
    }

    #[test]
    fn closure_of_transpositions_is_symmetric_group() {
        let gens: Vec<Perm<4>> = (0..3)
            .map(|i| Perm::from_cycles(&[vec![i, i + 1]]).unwrap())
            .collect();
        let g = closure(Perm::identity(), &gens, |a, b| a.compose(b));
        assert_eq!(g.len(), 24);
        assert!(closure(Perm::<4>::identity(), &[], |a, b| a.compose(b)).len() == 1);
    }

    proptest! {
        #[test]
        fn inverse_cancels(p in arb_perm::<20>()) {
            prop_assert!(p.compose(&p.inverse()).is_identity());
            prop_assert!(p.inverse().compose(&p).is_identity());
        }

        #[test]
        fn composition_is_associative(p in arb_perm::<20>(), q in arb_perm::<20>(), r in arb_perm::<20>()) {
            prop_assert_eq!(p.compose(&q).compose(&r), p.compose(&q.compose(&r)));
        }

        #[test]
        fn parity_is_multiplicative(p in arb_perm::<7>(), q in arb_perm::<7>()) {
            prop_assert_eq!(p.compose(&q).parity(), p.parity().combine(q.parity()));
        }

        #[test]
        fn serde_round_trip(p in arb_perm::<5>()) {
            let json = serde_json::to_string(&p).unwrap();
            let back: Perm<5> = serde_json::from_str(&json).unwrap();
            prop_assert_eq!(p, back);
        }
    }
}
