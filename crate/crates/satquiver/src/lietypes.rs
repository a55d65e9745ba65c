//! Root data, dominant weights, root-lattice membership and Weyl-group
//! utilities for the classical families A/B/C/D, including half-integral
//! Spin weights for B and D.
//!
//! Weights live in the ε-basis. Coordinates are stored as *twice* their
//! value, so half-integral Spin weights stay in exact integer arithmetic;
//! no floating point is used anywhere.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
        }
    }
}

/// A classical group at a fixed rank. Spin covers of SO share the root data
/// of B/D; `spin_allowed` merely admits half-integral weights.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct GroupType {
    pub family: Family,
    pub rank: usize,
    pub spin_allowed: bool,
}

impl GroupType {
    pub fn new(family: Family, rank: usize, spin_allowed: bool) -> Result<Self> {
        if rank == 0 {
            return Err(Error::domain("rank must be at least 1"));
        }
        if family == Family::D && rank < 2 {
            return Err(Error::domain("family D needs rank >= 2"));
        }
        if spin_allowed && !matches!(family, Family::B | Family::D) {
            return Err(Error::domain("spin weights only exist for families B and D"));
        }
        Ok(GroupType {
            family,
            rank,
            spin_allowed,
        })
    }

    pub fn b(rank: usize) -> Self {
        GroupType::new(Family::B, rank, false).unwrap()
    }
    pub fn c(rank: usize) -> Self {
        GroupType::new(Family::C, rank, false).unwrap()
    }
    pub fn d(rank: usize) -> Self {
        GroupType::new(Family::D, rank, false).unwrap()
    }
    pub fn spin_b(rank: usize) -> Self {
        GroupType::new(Family::B, rank, true).unwrap()
    }
    pub fn spin_d(rank: usize) -> Self {
        GroupType::new(Family::D, rank, true).unwrap()
    }

    /// 1 for odd orthogonal groups, 0 otherwise (dim E = 2n + delta).
    pub fn delta(&self) -> i64 {
        match self.family {
            Family::B => 1,
            _ => 0,
        }
    }

    /// Group tag used by the CLI and the cache: "B3", "C2", "SpinD5", ...
    pub fn tag(&self) -> String {
        let spin = if self.spin_allowed { "Spin" } else { "" };
        format!("{}{}{}", spin, self.family.letter(), self.rank)
    }

    pub fn parse_tag(s: &str) -> Result<Self> {
        let (spin, rest) = match s.strip_prefix("Spin") {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let mut chars = rest.chars();
        let fam = match chars.next() {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            _ => return Err(Error::parse(format!("bad group tag '{s}'"))),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::parse(format!("bad rank in group tag '{s}'")))?;
        GroupType::new(fam, rank, spin)
    }
}

/// Weight-lattice vector in the ε-basis; `twice` holds doubled coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Weight {
    twice: Vec<i64>,
}

impl Serialize for Weight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.coord_string())
    }
}

impl Weight {
    pub fn from_ints(coords: &[i64]) -> Self {
        Weight {
            twice: coords.iter().map(|c| 2 * c).collect(),
        }
    }

    pub fn from_twice(twice: Vec<i64>) -> Self {
        Weight { twice }
    }

    pub fn zero(rank: usize) -> Self {
        Weight {
            twice: vec![0; rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.twice.len()
    }

    pub fn twice(&self) -> &[i64] {
        &self.twice
    }

    pub fn is_zero(&self) -> bool {
        self.twice.iter().all(|&c| c == 0)
    }

    pub fn is_integral(&self) -> bool {
        self.twice.iter().all(|&c| c % 2 == 0)
    }

    /// True when every coordinate is a half-odd integer (Spin weights).
    pub fn is_half_odd(&self) -> bool {
        self.twice.iter().all(|&c| c.rem_euclid(2) == 1)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), other.rank());
        Weight {
            twice: self
                .twice
                .iter()
                .zip(&other.twice)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), other.rank());
        Weight {
            twice: self
                .twice
                .iter()
                .zip(&other.twice)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Weight {
        Weight {
            twice: self.twice.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, c: i64) -> Weight {
        Weight {
            twice: self.twice.iter().map(|a| a * c).collect(),
        }
    }

    /// Four times the standard inner product (exact on doubled coordinates).
    pub fn dot4(&self, other: &Weight) -> i64 {
        debug_assert_eq!(self.rank(), other.rank());
        self.twice
            .iter()
            .zip(&other.twice)
            .map(|(a, b)| a * b)
            .sum()
    }

    /// Render one doubled coordinate as "p" or "p/2".
    fn coord_str(c: i64) -> String {
        if c % 2 == 0 {
            format!("{}", c / 2)
        } else {
            format!("{c}/2")
        }
    }

    /// Comma-separated coordinates with rational entries written "p" or "p/2".
    pub fn coord_string(&self) -> String {
        self.twice
            .iter()
            .map(|&c| Self::coord_str(c))
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Partition-style display: trailing zeros stripped, "(0)" for zero.
    pub fn partition_display(&self) -> String {
        let mut coords: Vec<i64> = self.twice.clone();
        while coords.len() > 1 && *coords.last().unwrap() == 0 {
            coords.pop();
        }
        if coords.iter().all(|&c| c == 0) {
            return "(0)".to_string();
        }
        let inner = coords
            .iter()
            .map(|&c| Self::coord_str(c))
            .collect::<Vec<_>>()
            .join(",");
        format!("({inner})")
    }

    /// Parse "1,0", "3/2,1/2", "-1", ...
    pub fn parse(s: &str) -> Result<Weight> {
        let mut twice = vec![];
        for part in s.split(',') {
            let part = part.trim();
            if part.is_empty() {
                return Err(Error::parse(format!("empty coordinate in '{s}'")));
            }
            let val = if let Some(numer) = part.strip_suffix("/2") {
                numer
                    .parse::<i64>()
                    .map_err(|_| Error::parse(format!("bad coordinate '{part}'")))?
            } else {
                2 * part
                    .parse::<i64>()
                    .map_err(|_| Error::parse(format!("bad coordinate '{part}'")))?
            };
            twice.push(val);
        }
        Ok(Weight { twice })
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coord_string())
    }
}

/// A partition: weakly decreasing nonnegative integers, stored without
/// trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Partition(Vec<u64>);

impl Partition {
    pub fn new(mut parts: Vec<u64>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing"
        );
        Partition(parts)
    }

    pub fn parts(&self) -> &[u64] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn part(&self, i: usize) -> u64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0) as usize;
        let parts = (0..cols)
            .map(|j| self.0.iter().filter(|&&p| p as usize > j).count() as u64)
            .collect();
        Partition(parts)
    }

    pub fn scale(&self, c: u64) -> Partition {
        Partition(self.0.iter().map(|p| p * c).collect())
    }

    /// All partitions of m, in lexicographically decreasing order.
    pub fn all_of_size(m: u64) -> Vec<Partition> {
        fn rec(remaining: u64, max: u64, prefix: &mut Vec<u64>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            let hi = remaining.min(max);
            for next in (1..=hi).rev() {
                prefix.push(next);
                rec(remaining - next, next, prefix, out);
                prefix.pop();
            }
        }
        let mut out = vec![];
        rec(m, m, &mut vec![], &mut out);
        out
    }

    /// dim S_lambda(K^d) by the hook-content formula; zero when the
    /// partition has more than d rows.
    pub fn schur_dim(&self, d: u64) -> BigInt {
        if self.len() as u64 > d {
            return BigInt::from(0);
        }
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        let conj = self.conjugate();
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row as usize {
                let content = d as i64 + j as i64 - i as i64;
                let arm = row as i64 - j as i64 - 1;
                let leg = conj.part(j) as i64 - i as i64 - 1;
                let hook = arm + leg + 1;
                num *= BigInt::from(content);
                den *= BigInt::from(hook);
            }
        }
        num / den
    }

    pub fn to_weight(&self, rank: usize) -> Weight {
        assert!(self.len() <= rank, "partition has too many parts");
        let coords: Vec<i64> = (0..rank).map(|i| self.part(i) as i64).collect();
        Weight::from_ints(&coords)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "(0)");
        }
        let inner = self
            .0
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "({inner})")
    }
}

impl GroupType {
    fn check_rank(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                got: w.rank(),
            });
        }
        Ok(())
    }

    /// Dominance per the family's inequality chain plus the integrality rule
    /// (all integral, or all half-odd when the group admits Spin weights).
    pub fn is_dominant(&self, w: &Weight) -> Result<bool> {
        self.check_rank(w)?;
        let t = w.twice();
        let integral_ok = w.is_integral() || (self.spin_allowed && w.is_half_odd());
        if !integral_ok {
            return Ok(false);
        }
        let chain = match self.family {
            Family::A => t.windows(2).all(|p| p[0] >= p[1]),
            Family::B | Family::C => {
                t.windows(2).all(|p| p[0] >= p[1]) && *t.last().unwrap() >= 0
            }
            Family::D => {
                let n = t.len();
                t[..n - 1].windows(2).all(|p| p[0] >= p[1])
                    && (n < 2 || t[n - 2] >= t[n - 1].abs())
            }
        };
        Ok(chain)
    }

    /// Root-lattice membership. B: integral. C and D: integral with even
    /// coordinate sum. A: integral with coordinate sum zero (SL root lattice).
    pub fn in_root_lattice(&self, w: &Weight) -> Result<bool> {
        self.check_rank(w)?;
        if !w.is_integral() {
            return Ok(false);
        }
        let sum: i64 = w.twice().iter().sum::<i64>() / 2;
        Ok(match self.family {
            Family::A => sum == 0,
            Family::B => true,
            Family::C | Family::D => sum % 2 == 0,
        })
    }

    /// Positive roots in the ε-basis.
    pub fn positive_roots(&self) -> Vec<Weight> {
        let n = self.rank;
        let mut roots = vec![];
        let mut push = |coords: Vec<i64>| roots.push(Weight::from_ints(&coords));
        for i in 0..n {
            for j in i + 1..n {
                let mut v = vec![0i64; n];
                v[i] = 1;
                v[j] = -1;
                push(v.clone());
                if self.family != Family::A {
                    v[j] = 1;
                    push(v);
                }
            }
        }
        match self.family {
            Family::B => {
                for i in 0..n {
                    let mut v = vec![0i64; n];
                    v[i] = 1;
                    push(v);
                }
            }
            Family::C => {
                for i in 0..n {
                    let mut v = vec![0i64; n];
                    v[i] = 2;
                    push(v);
                }
            }
            _ => {}
        }
        roots
    }

    pub fn simple_roots(&self) -> Vec<Weight> {
        let n = self.rank;
        let mut roots = vec![];
        for i in 0..n - 1 {
            let mut v = vec![0i64; n];
            v[i] = 1;
            v[i + 1] = -1;
            roots.push(Weight::from_ints(&v));
        }
        let mut last = vec![0i64; n];
        match self.family {
            Family::A => {}
            Family::B => {
                last[n - 1] = 1;
                roots.push(Weight::from_ints(&last));
            }
            Family::C => {
                last[n - 1] = 2;
                roots.push(Weight::from_ints(&last));
            }
            Family::D => {
                if n >= 2 {
                    last[n - 2] = 1;
                    last[n - 1] = 1;
                    roots.push(Weight::from_ints(&last));
                }
            }
        }
        roots
    }

    /// Half the sum of the positive roots.
    pub fn rho(&self) -> Weight {
        let n = self.rank as i64;
        let twice: Vec<i64> = match self.family {
            // shift-invariant for dimension purposes; (n-1, ..., 0) is the
            // standard integral representative for GL
            Family::A => (0..n).map(|i| 2 * (n - 1 - i)).collect(),
            Family::B => (0..n).map(|i| 2 * (n - i) - 1).collect(),
            Family::C => (0..n).map(|i| 2 * (n - i)).collect(),
            Family::D => (0..n).map(|i| 2 * (n - 1 - i)).collect(),
        };
        Weight::from_twice(twice)
    }

    /// Does v lie on a wall of some Weyl chamber (fixed by a reflection)?
    fn on_wall(&self, v: &Weight) -> bool {
        let t = v.twice();
        let n = t.len();
        match self.family {
            Family::A => {
                let mut seen = BTreeSet::new();
                t.iter().any(|&c| !seen.insert(c))
            }
            Family::B | Family::C => {
                if t.contains(&0) {
                    return true;
                }
                let mut seen = BTreeSet::new();
                t.iter().any(|&c| !seen.insert(c.abs()))
            }
            Family::D => {
                let mut seen = BTreeSet::new();
                (0..n).any(|i| !seen.insert(t[i].abs()))
            }
        }
    }

    /// Move v to the closed dominant chamber by a Weyl element; returns the
    /// representative and the sign (determinant) of the element used.
    /// The sign is meaningless when v is on a wall; combine with `on_wall`.
    fn chamber_rep(&self, v: &Weight) -> (Weight, i64) {
        let mut t: Vec<i64> = v.twice().to_vec();
        let mut sign = 1i64;
        match self.family {
            Family::A => {}
            Family::B | Family::C => {
                for c in t.iter_mut() {
                    if *c < 0 {
                        *c = -*c;
                        sign = -sign;
                    }
                }
            }
            Family::D => {
                let mut flips = 0usize;
                for c in t.iter_mut() {
                    if *c < 0 {
                        *c = -*c;
                        flips += 1;
                    }
                }
                // sign flips come in pairs in W(D); an odd count is repaired
                // on the minimal coordinate (a zero coordinate absorbs it)
                if flips % 2 == 1 {
                    let (idx, _) = t
                        .iter()
                        .enumerate()
                        .min_by_key(|&(_, &c)| c)
                        .expect("nonempty weight");
                    t[idx] = -t[idx];
                }
                // determinant of any W(D) element equals the sign of its
                // permutation part
                sign = 1;
            }
        }
        // sort descending, tracking permutation parity (insertion sort; the
        // ranks here are tiny)
        for i in 1..t.len() {
            let mut j = i;
            while j > 0 && t[j - 1] < t[j] {
                t.swap(j - 1, j);
                sign = -sign;
                j -= 1;
            }
        }
        (Weight::from_twice(t), sign)
    }

    /// Dominant representative of w under the ρ-shifted Weyl action, with
    /// the sign of the Weyl element; sign 0 when w+ρ lies on a wall.
    pub fn reflect_to_dominant(&self, w: &Weight) -> (Weight, i64) {
        let rho = self.rho();
        let shifted = w.add(&rho);
        if self.on_wall(&shifted) {
            let (rep, _) = self.chamber_rep(&shifted);
            return (rep.sub(&rho), 0);
        }
        let (rep, sign) = self.chamber_rep(&shifted);
        (rep.sub(&rho), sign)
    }

    /// Dominant representative of the plain (unshifted) Weyl orbit of w.
    pub fn orbit_rep(&self, w: &Weight) -> Weight {
        self.chamber_rep(w).0
    }

    /// Apply the i-th simple reflection.
    pub fn simple_reflect(&self, i: usize, w: &Weight) -> Weight {
        let alpha = &self.simple_roots()[i];
        // s_alpha(w) = w - <w, alpha^vee> alpha; for these root lengths
        // <w, alpha^vee> = 2 (w . alpha) / (alpha . alpha)
        let num = w.dot4(alpha);
        let den = alpha.dot4(alpha);
        debug_assert_eq!((2 * num) % den, 0);
        w.sub(&alpha.scale(2 * num / den))
    }

    /// Full Weyl orbit of a weight.
    pub fn weyl_orbit(&self, w: &Weight) -> Vec<Weight> {
        let t = w.twice();
        let n = t.len();
        let mut out: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut sorted: Vec<i64> = t.to_vec();
        sorted.sort_unstable();
        permute_all(&sorted, &mut |perm| match self.family {
            Family::A => {
                out.insert(perm.to_vec());
            }
            Family::B | Family::C => {
                sign_patterns(perm, false, &mut |v| {
                    out.insert(v.to_vec());
                });
            }
            Family::D => {
                let has_zero = perm.contains(&0);
                sign_patterns(perm, !has_zero, &mut |v| {
                    out.insert(v.to_vec());
                });
            }
        });
        let _ = n;
        out.into_iter().map(Weight::from_twice).collect()
    }

    /// Exact dimension of the irreducible with highest weight λ (Weyl
    /// dimension formula).
    pub fn dim_irrep(&self, lambda: &Weight) -> Result<BigInt> {
        if !self.is_dominant(lambda)? {
            return Err(Error::domain(format!(
                "weight {} is not dominant for {}",
                lambda,
                self.tag()
            )));
        }
        let rho = self.rho();
        let shifted = lambda.add(&rho);
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for alpha in self.positive_roots() {
            num *= BigInt::from(shifted.dot4(&alpha));
            den *= BigInt::from(rho.dot4(&alpha));
        }
        let dim = num / den;
        debug_assert!(dim.is_positive());
        Ok(dim)
    }

    /// Fundamental weights in ε-coordinates.
    pub fn fundamental_weights(&self) -> Vec<Weight> {
        let n = self.rank;
        let ones = |k: usize| -> Vec<i64> { (0..n).map(|i| if i < k { 2 } else { 0 }).collect() };
        let mut out = vec![];
        match self.family {
            Family::A | Family::C => {
                for k in 1..=n {
                    out.push(Weight::from_twice(ones(k)));
                }
            }
            Family::B => {
                for k in 1..n {
                    out.push(Weight::from_twice(ones(k)));
                }
                out.push(Weight::from_twice(vec![1; n]));
            }
            Family::D => {
                for k in 1..=n.saturating_sub(2) {
                    out.push(Weight::from_twice(ones(k)));
                }
                let mut v = vec![1i64; n];
                v[n - 1] = -1;
                out.push(Weight::from_twice(v));
                out.push(Weight::from_twice(vec![1; n]));
            }
        }
        out
    }

    /// Highest weight of the dual representation.
    pub fn dual_weight(&self, lambda: &Weight) -> Weight {
        match self.family {
            Family::B | Family::C => lambda.clone(),
            Family::D => {
                if self.rank % 2 == 1 {
                    let mut t = lambda.twice().to_vec();
                    let n = t.len();
                    t[n - 1] = -t[n - 1];
                    Weight::from_twice(t)
                } else {
                    lambda.clone()
                }
            }
            Family::A => {
                let mut t: Vec<i64> = lambda.twice().iter().map(|&c| -c).collect();
                t.reverse();
                Weight::from_twice(t)
            }
        }
    }
}

/// Visit every distinct permutation of `sorted` (must be pre-sorted).
fn permute_all(sorted: &[i64], f: &mut impl FnMut(&[i64])) {
    let mut perm = sorted.to_vec();
    loop {
        f(&perm);
        // next_permutation in-place
        let n = perm.len();
        if n < 2 {
            return;
        }
        let mut i = n - 1;
        while i > 0 && perm[i - 1] >= perm[i] {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        let mut j = n - 1;
        while perm[j] <= perm[i - 1] {
            j -= 1;
        }
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
}

/// Visit the vector under all sign patterns on its nonzero entries; when
/// `even_only` is set, only patterns with an even number of minus signs.
fn sign_patterns(v: &[i64], even_only: bool, f: &mut impl FnMut(&[i64])) {
    let nz: Vec<usize> = (0..v.len()).filter(|&i| v[i] != 0).collect();
    let mut cur = v.to_vec();
    let k = nz.len();
    for mask in 0u64..(1 << k) {
        if even_only && mask.count_ones() % 2 == 1 {
            continue;
        }
        for (bit, &idx) in nz.iter().enumerate() {
            cur[idx] = if mask >> bit & 1 == 1 { -v[idx] } else { v[idx] };
        }
        f(&cur);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn w(coords: &[i64]) -> Weight {
        Weight::from_ints(coords)
    }

    #[test]
    fn dominance_table() {
        assert!(GroupType::c(2).is_dominant(&w(&[2, 1])).unwrap());
        assert!(GroupType::d(3).is_dominant(&w(&[2, 1, -1])).unwrap());
        assert!(!GroupType::b(2).is_dominant(&w(&[1, 2])).unwrap());
        // length mismatch is an error, not false
        assert!(GroupType::b(2).is_dominant(&w(&[1, 0, 0])).is_err());
        // half-odd weights only with spin
        let half = Weight::parse("3/2,1/2").unwrap();
        assert!(!GroupType::b(2).is_dominant(&half).unwrap());
        assert!(GroupType::spin_b(2).is_dominant(&half).unwrap());
        // mixed integral / half-odd never dominant
        let mixed = Weight::parse("3/2,1").unwrap();
        assert!(!GroupType::spin_b(2).is_dominant(&mixed).unwrap());
    }

    #[test]
    fn root_lattice_membership() {
        assert!(GroupType::b(2).in_root_lattice(&w(&[3, 0])).unwrap());
        assert!(!GroupType::c(2).in_root_lattice(&w(&[3, 0])).unwrap());
        assert!(!GroupType::d(2).in_root_lattice(&w(&[3, 0])).unwrap());
        // the Spin(10) sum 2(2,2,1,1,0) + (7/2,3/2,1/2,1/2,1/2)
        let a = w(&[2, 2, 1, 1, 0]).scale(2);
        let b = Weight::parse("7/2,3/2,1/2,1/2,1/2").unwrap();
        let sum = a.add(&b);
        assert!(!GroupType::spin_d(5).in_root_lattice(&sum).unwrap());
    }

    #[test]
    fn positive_roots_b2() {
        let roots = GroupType::b(2).positive_roots();
        let expect: BTreeSet<Weight> =
            [w(&[1, -1]), w(&[1, 1]), w(&[1, 0]), w(&[0, 1])].into_iter().collect();
        assert_eq!(roots.into_iter().collect::<BTreeSet<_>>(), expect);
    }

    #[test]
    fn rho_values() {
        assert_eq!(GroupType::b(2).rho(), Weight::parse("3/2,1/2").unwrap());
        assert_eq!(GroupType::c(2).rho(), w(&[2, 1]));
        assert_eq!(GroupType::d(3).rho(), w(&[2, 1, 0]));
    }

    #[test]
    fn small_dimensions() {
        assert_eq!(GroupType::c(2).dim_irrep(&w(&[1, 0])).unwrap(), 4.into());
        assert_eq!(GroupType::b(1).dim_irrep(&w(&[1])).unwrap(), 3.into());
        assert_eq!(GroupType::b(3).dim_irrep(&w(&[1, 0, 0])).unwrap(), 7.into());
        assert_eq!(GroupType::d(3).dim_irrep(&w(&[1, 0, 0])).unwrap(), 6.into());
        // trivial weight has dimension 1 in every type
        for g in [GroupType::b(3), GroupType::c(3), GroupType::d(4)] {
            assert_eq!(g.dim_irrep(&Weight::zero(g.rank)).unwrap(), 1.into());
        }
        assert!(GroupType::b(2).dim_irrep(&w(&[1, 2])).is_err());
    }

    #[test]
    fn gl_dimension_matches_hook_content() {
        for (parts, d) in [(vec![2, 1], 3u64), (vec![3, 1, 1], 4), (vec![2, 2], 2)] {
            let p = Partition::new(parts.clone());
            let g = GroupType::new(Family::A, d as usize, false).unwrap();
            let lam = p.to_weight(d as usize);
            assert_eq!(
                g.dim_irrep(&lam).unwrap(),
                p.schur_dim(d),
                "partition {parts:?} at d={d}"
            );
        }
    }

    #[test]
    fn reflect_identity_and_wall() {
        let g = GroupType::c(2);
        let dom = w(&[3, 1]);
        assert_eq!(g.reflect_to_dominant(&dom), (dom.clone(), 1));
        // (0,-1) + rho = (2,0) has a zero coordinate: wall
        let (_, sign) = g.reflect_to_dominant(&w(&[0, -1]));
        assert_eq!(sign, 0);
    }

    #[test]
    fn reflect_sign_single_reflection() {
        let g = GroupType::b(2);
        // start strictly dominant after shift, apply one simple reflection to
        // the shifted vector, expect sign -1
        let lam = w(&[3, 1]);
        let rho = g.rho();
        let shifted = lam.add(&rho);
        for i in 0..2 {
            let reflected = g.simple_reflect(i, &shifted).sub(&rho);
            let (rep, sign) = g.reflect_to_dominant(&reflected);
            assert_eq!(rep, lam);
            assert_eq!(sign, -1);
        }
    }

    #[test]
    fn fundamental_weights_d5() {
        let fw = GroupType::spin_d(5).fundamental_weights();
        assert_eq!(fw[1], w(&[1, 1, 0, 0, 0]));
        assert_eq!(fw[3], Weight::parse("1/2,1/2,1/2,1/2,-1/2").unwrap());
        assert_eq!(fw[4], Weight::parse("1/2,1/2,1/2,1/2,1/2").unwrap());
        // omega_2 + omega_4 + omega_5 = (2,2,1,1,0), a Spin(10) weight used below
        let sum = fw[1].add(&fw[3]).add(&fw[4]);
        assert_eq!(sum, w(&[2, 2, 1, 1, 0]));
    }

    #[test]
    fn dual_weight_involution_d_odd() {
        let g = GroupType::d(3);
        let lam = w(&[2, 1, -1]);
        let dual = g.dual_weight(&lam);
        assert_eq!(dual, w(&[2, 1, 1]));
        assert_eq!(g.dual_weight(&dual), lam);
        assert!(g.is_dominant(&dual).unwrap());
        // even rank: self-dual
        assert_eq!(GroupType::d(4).dual_weight(&w(&[2, 1, 1, 1])), w(&[2, 1, 1, 1]));
    }

    #[test]
    fn orbit_sizes() {
        let g = GroupType::b(2);
        assert_eq!(g.weyl_orbit(&w(&[1, 0])).len(), 4);
        assert_eq!(g.weyl_orbit(&w(&[2, 1])).len(), 8);
        let d = GroupType::d(2);
        assert_eq!(d.weyl_orbit(&w(&[1, 1])).len(), 2);
        assert_eq!(d.weyl_orbit(&w(&[1, 0])).len(), 4);
    }

    #[test]
    fn root_lattice_stable_under_roots() {
        for g in [GroupType::b(2), GroupType::c(2), GroupType::d(3)] {
            for lam in [Weight::zero(g.rank), w(&(0..g.rank as i64).map(|i| 3 - i).collect::<Vec<_>>())] {
                let base = g.in_root_lattice(&lam).unwrap();
                for root in g.positive_roots() {
                    assert_eq!(g.in_root_lattice(&lam.add(&root)).unwrap(), base);
                }
            }
        }
    }

    #[test]
    fn partition_conjugate_involution() {
        let p = Partition::new(vec![3, 1, 1]);
        assert_eq!(p.conjugate().parts(), &[3, 1, 1]);
        let q = Partition::new(vec![4, 2, 1]);
        assert_eq!(q.conjugate().conjugate(), q);
        assert_eq!(q.len(), 3);
        assert_eq!(q.size(), 7);
    }

    #[test]
    fn schur_dims() {
        // dim S_(4)(K^2) = 5, dim S_(2,2)(K^2) = 1
        assert_eq!(Partition::new(vec![4]).schur_dim(2), 5.into());
        assert_eq!(Partition::new(vec![2, 2]).schur_dim(2), 1.into());
        assert_eq!(Partition::new(vec![1, 1, 1]).schur_dim(2), 0.into());
        let d = Partition::new(vec![2, 1]).schur_dim(3).to_i64().unwrap();
        assert_eq!(d, 8);
    }

    #[test]
    fn tags_round_trip() {
        for tag in ["B3", "C2", "D5", "SpinB3", "SpinD5", "A4"] {
            assert_eq!(GroupType::parse_tag(tag).unwrap().tag(), tag);
        }
        assert!(GroupType::parse_tag("E8").is_err());
        assert!(GroupType::parse_tag("SpinC3").is_err());
        assert!(GroupType::parse_tag("D1").is_err());
    }

    #[test]
    fn weight_strings() {
        let half = Weight::parse("3/2,-1/2").unwrap();
        assert_eq!(half.coord_string(), "3/2,-1/2");
        assert_eq!(w(&[2, 0, 0]).partition_display(), "(2)");
        assert_eq!(Weight::zero(3).partition_display(), "(0)");
        assert_eq!(w(&[2, 1, -1]).partition_display(), "(2,1,-1)");
    }
}
