//! Permutations of `{0, …, d-1}` and conjugacy-class iteration by direct
//! construction.

use std::fmt;

use crate::error::{invalid, Result};
use crate::exact::factorial;
use num_bigint::BigInt;

/// Largest degree the oracle can represent.
pub const MAX_DEGREE: usize = 32;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(d: usize) -> Self {
        Permutation {
            images: (0..d as u8).collect(),
        }
    }

    /// From 0-based images; rejects anything that is not a bijection.
    pub fn from_images(images: Vec<u8>) -> Result<Self> {
        let d = images.len();
        if d > MAX_DEGREE {
            return Err(invalid(format!("degree {d} exceeds {MAX_DEGREE}")));
        }
        let mut seen = vec![false; d];
        for &x in &images {
            let x = x as usize;
            if x >= d || seen[x] {
                return Err(invalid(format!("{images:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// From disjoint cycles written with 1-based points.
    pub fn from_cycles(d: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<u8> = (0..d as u8).collect();
        let mut touched = vec![false; d];
        for cyc in cycles {
            for (idx, &p) in cyc.iter().enumerate() {
                if p == 0 || p > d || touched[p - 1] {
                    return Err(invalid(format!("bad cycle {cyc:?} in degree {d}")));
                }
                touched[p - 1] = true;
                images[p - 1] = (cyc[(idx + 1) % cyc.len()] - 1) as u8;
            }
        }
        Self::from_images(images)
    }

    /// Consecutive blocks of the given lengths, each a cycle `i -> i+1`.
    pub fn canonical(lengths: &[usize]) -> Self {
        let mut images = Vec::new();
        let mut start = 0;
        for &len in lengths {
            for i in 0..len {
                images.push((start + (i + 1) % len) as u8);
            }
            start += len;
        }
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    /// `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    /// Cycle lengths, sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t = cycle_lengths(&self.images);
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn num_cycles(&self) -> usize {
        count_cycles(&self.images)
    }

    pub fn transposition(d: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<u8> = (0..d as u8).collect();
        images.swap(a, b);
        Permutation { images }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut wrote = false;
        for s in 0..d {
            if seen[s] || self.apply(s) == s {
                seen[s] = true;
                continue;
            }
            write!(f, "(")?;
            let mut x = s;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", x + 1)?;
                first = false;
                x = self.apply(x);
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "id")?;
        }
        Ok(())
    }
}

pub(crate) fn cycle_lengths(images: &[u8]) -> Vec<usize> {
    let mut seen = 0u64;
    let mut out = Vec::new();
    for s in 0..images.len() {
        if seen >> s & 1 == 1 {
            continue;
        }
        let mut len = 0;
        let mut x = s;
        while seen >> x & 1 == 0 {
            seen |= 1 << x;
            x = images[x] as usize;
            len += 1;
        }
        out.push(len);
    }
    out
}

pub(crate) fn count_cycles(images: &[u8]) -> usize {
    let mut seen = 0u64;
    let mut c = 0;
    for s in 0..images.len() {
        if seen >> s & 1 == 1 {
            continue;
        }
        c += 1;
        let mut x = s;
        while seen >> x & 1 == 0 {
            seen |= 1 << x;
            x = images[x] as usize;
        }
    }
    c
}

/// True iff the generated group has a single orbit on `{0, …, d-1}`.
/// `d = 0` counts as transitive.
pub fn transitivity(generators: &[Permutation], d: usize) -> bool {
    if d == 0 {
        return true;
    }
    let gens: Vec<&[u8]> = generators.iter().map(|g| g.images()).collect();
    orbit_of_zero(&gens, d) == full_mask(d)
}

pub(crate) fn full_mask(d: usize) -> u64 {
    if d == 64 {
        u64::MAX
    } else {
        (1u64 << d) - 1
    }
}

pub(crate) fn orbit_of_zero(gens: &[&[u8]], d: usize) -> u64 {
    let mut orbit = 1u64;
    let mut stack = [0u8; 64];
    let mut top = 1;
    while top > 0 {
        top -= 1;
        let x = stack[top] as usize;
        for g in gens {
            let y = g[x] as usize;
            if orbit >> y & 1 == 0 {
                orbit |= 1 << y;
                stack[top] = y as u8;
                top += 1;
            }
        }
        if orbit == full_mask(d) {
            break;
        }
    }
    orbit
}

/// Size of the conjugacy class with the given cycle type.
pub fn class_size(cycle_type: &[usize]) -> BigInt {
    let d: usize = cycle_type.iter().sum();
    let mut den = BigInt::from(1);
    let mut sorted = cycle_type.to_vec();
    sorted.sort_unstable();
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i;
        while j < sorted.len() && sorted[j] == sorted[i] {
            j += 1;
        }
        let mult = j - i;
        den *= BigInt::from(sorted[i]).pow(mult as u32) * factorial(mult as u64);
        i = j;
    }
    factorial(d as u64) / den
}

/// Calls `f` on the images of every permutation of cycle type
/// `cycle_type`, each exactly once. The smallest unassigned point always
/// opens the next cycle, whose length is chosen among the remaining ones.
pub fn for_each_in_class(cycle_type: &[usize], mut f: impl FnMut(&[u8])) {
    let d: usize = cycle_type.iter().sum();
    assert!(d <= MAX_DEGREE);
    let mut lengths: Vec<(usize, usize)> = Vec::new();
    let mut sorted = cycle_type.to_vec();
    sorted.sort_unstable();
    for &c in &sorted {
        match lengths.last_mut() {
            Some((len, m)) if *len == c => *m += 1,
            _ => lengths.push((c, 1)),
        }
    }
    let mut images = vec![0u8; d];
    fill(&mut images, 0, &mut lengths, &mut f);
}

/// Like `for_each_in_class`, with the point 0 already placed on the given
/// cycle (points listed in order). Used to split work into chunks.
pub(crate) fn for_each_with_first_cycle(
    cycle_type: &[usize],
    first: &[u8],
    mut f: impl FnMut(&[u8]),
) {
    let d: usize = cycle_type.iter().sum();
    let mut rest = cycle_type.to_vec();
    let pos = rest
        .iter()
        .position(|&c| c == first.len())
        .expect("first cycle length in type");
    rest.remove(pos);
    let mut lengths: Vec<(usize, usize)> = Vec::new();
    rest.sort_unstable();
    for &c in &rest {
        match lengths.last_mut() {
            Some((len, m)) if *len == c => *m += 1,
            _ => lengths.push((c, 1)),
        }
    }
    let mut images = vec![0u8; d];
    let mut used = 0u64;
    for (i, &x) in first.iter().enumerate() {
        images[x as usize] = first[(i + 1) % first.len()];
        used |= 1 << x;
    }
    fill(&mut images, used, &mut lengths, &mut f);
}

/// All choices of the cycle through 0 for the given type, as point lists
/// starting at 0.
pub(crate) fn first_cycles(cycle_type: &[usize]) -> Vec<Vec<u8>> {
    let d: usize = cycle_type.iter().sum();
    let mut lens: Vec<usize> = cycle_type.to_vec();
    lens.sort_unstable();
    lens.dedup();
    let mut out = Vec::new();
    for len in lens {
        let mut cur = vec![0u8];
        arrangements(d, len, 1u64, &mut cur, &mut out);
    }
    out
}

fn arrangements(d: usize, len: usize, used: u64, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
    if cur.len() == len {
        out.push(cur.clone());
        return;
    }
    for y in 0..d {
        if used >> y & 1 == 0 {
            cur.push(y as u8);
            arrangements(d, len, used | 1 << y, cur, out);
            cur.pop();
        }
    }
}

fn fill(images: &mut [u8], used: u64, lengths: &mut [(usize, usize)], f: &mut impl FnMut(&[u8])) {
    let d = images.len();
    if used == full_mask(d) {
        f(images);
        return;
    }
    let start = (!used).trailing_zeros() as usize;
    for li in 0..lengths.len() {
        if lengths[li].1 == 0 {
            continue;
        }
        lengths[li].1 -= 1;
        let len = lengths[li].0;
        extend(images, used | 1 << start, start, start, len - 1, lengths, f);
        lengths[li].1 += 1;
    }
}

/// Places `remaining` more points after `last` on the cycle opened at `start`.
fn extend(
    images: &mut [u8],
    used: u64,
    start: usize,
    last: usize,
    remaining: usize,
    lengths: &mut [(usize, usize)],
    f: &mut impl FnMut(&[u8]),
) {
    if remaining == 0 {
        images[last] = start as u8;
        fill(images, used, lengths, f);
        return;
    }
    let d = images.len();
    for y in start + 1..d {
        if used >> y & 1 == 0 {
            images[last] = y as u8;
            extend(images, used | 1 << y, start, y, remaining - 1, lengths, f);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn class_iteration_is_exact() {
        for t in [
            vec![3, 3, 3],
            vec![2, 2, 1],
            vec![4, 2],
            vec![1, 1, 1, 1],
            vec![5, 1],
            vec![3, 2, 1],
        ] {
            let mut seen = HashSet::new();
            for_each_in_class(&t, |p| {
                let perm = Permutation::from_images(p.to_vec()).unwrap();
                let mut ct = perm.cycle_type();
                ct.sort_unstable();
                let mut want = t.clone();
                want.sort_unstable();
                assert_eq!(ct, want);
                assert!(seen.insert(p.to_vec()));
            });
            assert_eq!(BigInt::from(seen.len()), class_size(&t), "{t:?}");
        }
    }

    #[test]
    fn chunks_cover_the_class() {
        let t = vec![3, 2, 2];
        let mut total = 0usize;
        for first in first_cycles(&t) {
            for_each_with_first_cycle(&t, &first, |p| {
                assert_eq!(p[0], first.get(1).copied().unwrap_or(0));
                total += 1;
            });
        }
        assert_eq!(BigInt::from(total), class_size(&t));
    }

    #[test]
    fn transitivity_examples() {
        assert!(!transitivity(&[Permutation::identity(2)], 2));
        for d in 1..8 {
            let c = Permutation::canonical(&[d]);
            assert!(transitivity(&[c], d));
        }
    }

    #[test]
    fn algebra() {
        let a = Permutation::from_cycles(4, &[&[1, 2, 3]]).unwrap();
        let b = Permutation::from_cycles(4, &[&[3, 4]]).unwrap();
        assert_eq!(a.compose(&a.inverse()), Permutation::identity(4));
        assert_eq!(a.compose(&b).apply(2), 3);
        assert_eq!(format!("{:?}", a.compose(&b)), "(1 2 3 4)");
        assert!(Permutation::from_images(vec![0, 0]).is_err());
    }
}
