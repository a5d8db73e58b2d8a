//! Root data for the classical families in the coordinates `(β_n̄, …, β_1̄)`.
//!
//! Storage index `k` of a weight holds the coordinate of `ε_{(n-k)‾}`, so index 0
//! is the largest coordinate and index `n-1` is `β_1̄`. Type A weights use the
//! same vectors read as a content `(μ_1, …, μ_n)` from left to right.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub const DEFAULT_WEYL_CAP: u128 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub fn as_char(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
        }
    }

    /// Smallest rank accepted by [`RootSystem::new`].
    pub fn min_rank(self) -> usize {
        match self {
            Family::D => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Family {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A weight stored as doubled integer coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    doubled: Vec<i32>,
}

impl Weight {
    pub fn zero(n: usize) -> Self {
        Weight { doubled: vec![0; n] }
    }

    pub fn from_ints(parts: &[i32]) -> Self {
        Weight {
            doubled: parts.iter().map(|x| 2 * x).collect(),
        }
    }

    pub fn from_doubled(doubled: Vec<i32>) -> Self {
        Weight { doubled }
    }

    pub fn rank(&self) -> usize {
        self.doubled.len()
    }

    pub fn doubled(&self) -> &[i32] {
        &self.doubled
    }

    pub fn is_integral(&self) -> bool {
        self.doubled.iter().all(|x| x % 2 == 0)
    }

    pub fn is_half_integral(&self) -> bool {
        self.doubled.iter().all(|x| x.rem_euclid(2) == 1)
    }

    pub fn ints(&self) -> Option<Vec<i32>> {
        self.is_integral()
            .then(|| self.doubled.iter().map(|x| x / 2).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.doubled.iter().all(|&x| x == 0)
    }

    /// Coordinate of `ε_ī` in doubled units, `i` in `1..=n`.
    pub fn bar_doubled(&self, i: usize) -> i32 {
        self.doubled[self.rank() - i]
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight {
            doubled: self.doubled.iter().zip(&other.doubled).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight {
            doubled: self.doubled.iter().zip(&other.doubled).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn neg(&self) -> Weight {
        Weight {
            doubled: self.doubled.iter().map(|a| -a).collect(),
        }
    }

    /// Inner product in quarter units (doubled times doubled).
    pub fn dot_doubled(&self, other: &Weight) -> i64 {
        self.doubled
            .iter()
            .zip(&other.doubled)
            .map(|(a, b)| i64::from(*a) * i64::from(*b))
            .sum()
    }

    /// `(λ_n̄, …, λ_2̄, −λ_1̄)`.
    pub fn star(&self) -> Weight {
        let mut d = self.doubled.clone();
        if let Some(last) = d.last_mut() {
            *last = -*last;
        }
        Weight { doubled: d }
    }

    /// Drops the leading coordinate: `(λ_{(n-1)‾}, …, λ_1̄)`.
    pub fn truncated(&self) -> Weight {
        Weight {
            doubled: self.doubled[1..].to_vec(),
        }
    }

    /// Appends zero coordinates at the front until the rank is `n`.
    pub fn padded(&self, n: usize) -> Weight {
        let mut d = vec![0; n.saturating_sub(self.rank())];
        d.extend_from_slice(&self.doubled);
        Weight { doubled: d }
    }

    pub fn sum_doubled(&self) -> i32 {
        self.doubled.iter().sum()
    }
}

fn fmt_half(x: i32) -> String {
    if x % 2 == 0 {
        (x / 2).to_string()
    } else {
        format!("{x}/2")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.doubled.iter().map(|x| fmt_half(*x)).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty weight".into()));
        }
        let mut doubled = Vec::new();
        for part in s.split(',') {
            let part = part.trim();
            let bad = || Error::Parse(format!("bad weight coordinate {part:?}"));
            if let Some(num) = part.strip_suffix("/2") {
                let v: i32 = num.trim().parse().map_err(|_| bad())?;
                doubled.push(v);
            } else {
                let v: i32 = part.parse().map_err(|_| bad())?;
                doubled.push(2 * v);
            }
        }
        Ok(Weight { doubled })
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A family together with a rank `n`. For type A, `n` is the number of
/// coordinates (the root system `A_{n-1}`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSystem {
    pub family: Family,
    pub rank: usize,
}

impl RootSystem {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if rank < family.min_rank() {
            return Err(Error::InvalidRank {
                family: family.as_char(),
                rank,
            });
        }
        Ok(RootSystem { family, rank })
    }

    /// Crystal colors: `0..n` for B, C, D and `1..n` for A.
    pub fn colors(&self) -> std::ops::Range<usize> {
        match self.family {
            Family::A => 1..self.rank,
            _ => 0..self.rank,
        }
    }

    fn unit(&self, idx: usize, doubled: i32) -> Vec<i32> {
        let mut v = vec![0; self.rank];
        v[idx] = doubled;
        v
    }

    pub fn positive_roots(&self) -> Vec<Weight> {
        let n = self.rank;
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let mut minus = vec![0; n];
                minus[a] = 2;
                minus[b] = -2;
                out.push(Weight::from_doubled(minus));
                if self.family != Family::A {
                    let mut plus = vec![0; n];
                    plus[a] = 2;
                    plus[b] = 2;
                    out.push(Weight::from_doubled(plus));
                }
            }
            match self.family {
                Family::B => out.push(Weight::from_doubled(self.unit(a, 2))),
                Family::C => out.push(Weight::from_doubled(self.unit(a, 4))),
                _ => {}
            }
        }
        out
    }

    /// Simple roots indexed by color.
    pub fn simple_roots(&self) -> Vec<(usize, Weight)> {
        let n = self.rank;
        self.colors()
            .map(|c| {
                let mut v = vec![0; n];
                match (self.family, c) {
                    (Family::A, j) => {
                        v[j - 1] = 2;
                        v[j] = -2;
                    }
                    (Family::B, 0) => v[n - 1] = 2,
                    (Family::C, 0) => v[n - 1] = 4,
                    (Family::D, 0) => {
                        v[n - 1] = 2;
                        v[n - 2] = 2;
                    }
                    (_, i) => {
                        v[n - i - 1] = 2;
                        v[n - i] = -2;
                    }
                }
                (c, Weight::from_doubled(v))
            })
            .collect()
    }

    pub fn rho(&self) -> Weight {
        let n = self.rank as i32;
        let doubled = (0..n)
            .map(|k| match self.family {
                Family::B => 2 * (n - k) - 1,
                Family::C => 2 * (n - k),
                Family::A | Family::D => 2 * (n - k - 1),
            })
            .collect();
        Weight::from_doubled(doubled)
    }

    /// Coordinates `c` with `β = Σ c_j α_j` (ordered by color) when they are
    /// nonnegative integers.
    pub fn simple_root_coords(&self, beta: &Weight) -> Option<Vec<i64>> {
        let n = self.rank;
        let d: Vec<i64> = beta.doubled().iter().map(|x| i64::from(*x)).collect();
        if d.len() != n {
            return None;
        }
        let prefix = |len: usize| -> i64 { d[..len].iter().sum() };
        // Coordinates in doubled units, with an extra denominator for half sums.
        let mut twice: Vec<(i64, i64)> = Vec::with_capacity(n);
        match self.family {
            Family::A => {
                if prefix(n) != 0 {
                    return None;
                }
                for j in 1..n {
                    twice.push((prefix(j), 2));
                }
            }
            Family::B => {
                for j in 0..n {
                    twice.push((prefix(n - j), 2));
                }
            }
            Family::C => {
                twice.push((prefix(n), 4));
                for j in 1..n {
                    twice.push((prefix(n - j), 2));
                }
            }
            Family::D => {
                twice.push((prefix(n), 4));
                twice.push((prefix(n - 1) - d[n - 1], 4));
                for j in 2..n {
                    twice.push((prefix(n - j), 2));
                }
            }
        }
        twice
            .into_iter()
            .map(|(num, den)| (num >= 0 && num % den == 0).then_some(num / den))
            .collect()
    }

    pub fn weyl_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact: u128 = (1..=n).product();
        match self.family {
            Family::A => fact,
            Family::B | Family::C => fact << n,
            Family::D => fact << (n - 1),
        }
    }

    pub fn weyl_elements(&self, cap: u128) -> Result<WeylIter> {
        let size = self.weyl_order();
        if size > cap {
            return Err(Error::TooLarge {
                what: "Weyl group",
                size,
                cap,
            });
        }
        Ok(WeylIter::new(self.family, self.rank))
    }

    pub fn act(&self, sigma: &SignedPerm, beta: &Weight) -> Weight {
        sigma.act(beta)
    }

    /// `σ∘β = σ(β+ρ) − ρ`.
    pub fn dot_action(&self, sigma: &SignedPerm, beta: &Weight) -> Weight {
        let rho = self.rho();
        sigma.act(&beta.add(&rho)).sub(&rho)
    }

    pub fn simple_reflection(&self, color: usize) -> SignedPerm {
        let n = self.rank;
        let mut s = SignedPerm::identity(n);
        match (self.family, color) {
            (Family::A, j) => s.perm.swap(j - 1, j),
            (Family::B | Family::C, 0) => s.flips[n - 1] = -1,
            (Family::D, 0) => {
                s.perm.swap(n - 2, n - 1);
                s.flips[n - 2] = -1;
                s.flips[n - 1] = -1;
            }
            (_, i) => s.perm.swap(n - i - 1, n - i),
        }
        s
    }

    /// Checks that `w` is a dominant weight for this system.
    pub fn is_dominant(&self, w: &Weight) -> bool {
        let d = w.doubled();
        if d.len() != self.rank {
            return false;
        }
        let decreasing = d.windows(2).all(|p| p[0] >= p[1]);
        let uniform = w.is_integral() || w.is_half_integral();
        match self.family {
            Family::A => decreasing && w.is_integral(),
            Family::B => decreasing && uniform && d[self.rank - 1] >= 0,
            Family::C => decreasing && w.is_integral() && d[self.rank - 1] >= 0,
            Family::D => {
                let n = self.rank;
                let head = d[..n - 1].windows(2).all(|p| p[0] >= p[1]);
                uniform && head && d[n - 2] >= d[n - 1].abs()
            }
        }
    }
}

/// A signed permutation acting by `(σ·β)[k] = flips[k] · β[perm[k]]` on storage indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPerm {
    pub perm: Vec<usize>,
    pub flips: Vec<i8>,
}

impl SignedPerm {
    pub fn identity(n: usize) -> Self {
        SignedPerm {
            perm: (0..n).collect(),
            flips: vec![1; n],
        }
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    /// Determinant of the signed permutation matrix, equal to `(−1)^{l(σ)}`.
    pub fn sign(&self) -> i8 {
        let n = self.perm.len();
        let mut seen = vec![false; n];
        let mut parity = 1i8;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                k = self.perm[k];
                len += 1;
            }
            if len % 2 == 0 {
                parity = -parity;
            }
        }
        self.flips.iter().fold(parity, |acc, f| acc * f)
    }

    pub fn act(&self, beta: &Weight) -> Weight {
        let d = beta.doubled();
        Weight::from_doubled(
            (0..self.rank())
                .map(|k| i32::from(self.flips[k]) * d[self.perm[k]])
                .collect(),
        )
    }

    /// The product `self ∘ other`, acting as `self.act(other.act(β))`.
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        let n = self.rank();
        SignedPerm {
            perm: (0..n).map(|k| other.perm[self.perm[k]]).collect(),
            flips: (0..n).map(|k| self.flips[k] * other.flips[self.perm[k]]).collect(),
        }
    }

    pub fn inverse(&self) -> SignedPerm {
        let n = self.rank();
        let mut perm = vec![0; n];
        let mut flips = vec![1; n];
        for k in 0..n {
            perm[self.perm[k]] = k;
            flips[self.perm[k]] = self.flips[k];
        }
        SignedPerm { perm, flips }
    }

    pub fn flip_count(&self) -> usize {
        self.flips.iter().filter(|f| **f < 0).count()
    }
}

/// Permutations in lexicographic order crossed with flip masks in binary order.
pub struct WeylIter {
    family: Family,
    perm: Option<Vec<usize>>,
    mask: u64,
    n: usize,
}

impl WeylIter {
    fn new(family: Family, n: usize) -> Self {
        WeylIter {
            family,
            perm: Some((0..n).collect()),
            mask: 0,
            n,
        }
    }

    fn mask_allowed(&self, mask: u64) -> bool {
        match self.family {
            Family::A => mask == 0,
            Family::D => mask.count_ones().is_multiple_of(2),
            _ => true,
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

impl Iterator for WeylIter {
    type Item = SignedPerm;

    fn next(&mut self) -> Option<SignedPerm> {
        loop {
            let perm = self.perm.as_mut()?;
            if self.mask >= 1u64 << self.n {
                if !next_permutation(perm) {
                    self.perm = None;
                    return None;
                }
                self.mask = 0;
            }
            let mask = self.mask;
            self.mask += 1;
            if !self.mask_allowed(mask) {
                continue;
            }
            let perm = self.perm.as_ref()?.clone();
            let flips = (0..self.n)
                .map(|k| if mask >> k & 1 == 1 { -1 } else { 1 })
                .collect();
            return Some(SignedPerm { perm, flips });
        }
    }
}

/// A dominant weight tagged with its family.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GenPartition {
    pub family: Family,
    pub weight: Weight,
}

impl GenPartition {
    pub fn new(family: Family, weight: Weight) -> Result<Self> {
        let sys = RootSystem::new(family, weight.rank())?;
        if !sys.is_dominant(&weight) {
            return Err(Error::InvalidWeight(format!(
                "({weight}) is not dominant for family {family}"
            )));
        }
        Ok(GenPartition { family, weight })
    }

    pub fn from_ints(family: Family, parts: &[i32]) -> Result<Self> {
        Self::new(family, Weight::from_ints(parts))
    }

    pub fn rank(&self) -> usize {
        self.weight.rank()
    }

    pub fn system(&self) -> RootSystem {
        RootSystem {
            family: self.family,
            rank: self.rank(),
        }
    }

    pub fn ints(&self) -> Option<Vec<i32>> {
        self.weight.ints()
    }

    /// Integer parts or an unsupported-shape error.
    pub fn int_parts(&self) -> Result<Vec<i32>> {
        self.ints()
            .ok_or_else(|| Error::Unsupported(format!("half-integer shape ({})", self.weight)))
    }

    /// Number of boxes of the display shape (`Σ |λ_i|`), for integer shapes.
    pub fn boxes(&self) -> Option<i32> {
        self.ints().map(|p| p.iter().map(|x| x.abs()).sum())
    }

    /// Enumerates the dominant integer weights of rank `n` with at most
    /// `max_boxes` boxes; for type D both signs of the last part are included.
    pub fn enumerate(family: Family, n: usize, max_boxes: i32) -> Vec<GenPartition> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        fn rec(n: usize, left: i32, bound: i32, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
            if cur.len() == n {
                out.push(cur.clone());
                return;
            }
            for v in (0..=bound.min(left)).rev() {
                cur.push(v);
                rec(n, left - v, v, cur, out);
                cur.pop();
            }
        }
        let mut raw = Vec::new();
        rec(n, max_boxes, max_boxes, &mut cur, &mut raw);
        for parts in raw {
            if family == Family::D && parts[n - 1] > 0 {
                let mut neg = parts.clone();
                neg[n - 1] = -neg[n - 1];
                out.push(GenPartition::from_ints(family, &neg).expect("dominant by construction"));
            }
            out.push(GenPartition::from_ints(family, &parts).expect("dominant by construction"));
        }
        out.sort();
        out
    }
}

impl fmt::Display for GenPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.weight)
    }
}
