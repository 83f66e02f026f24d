//! Cartan data of type B_N, the spectral lattice and its plane embedding.
//!
//! A spectral point `(i, k)` stands for the variable `Y_{i, c q^k}`. The
//! subset 𝒳 carries the dominant monomials of interest, 𝒲 indexes the
//! `A`-variables that appear in their q-characters, and `ι` places 𝒳 in
//! the plane where the path model lives.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point `(i, k)` of `I × ℤ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpectralPoint {
    pub node: u32,
    pub level: i32,
}

impl SpectralPoint {
    pub const fn new(node: u32, level: i32) -> Self {
        SpectralPoint { node, level }
    }

    /// Translates the level by `d`.
    pub const fn shift(self, d: i32) -> Self {
        SpectralPoint::new(self.node, self.level + d)
    }
}

/// Points are ordered by level first, then by node.
impl Ord for SpectralPoint {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.level, self.node).cmp(&(other.level, other.node))
    }
}

impl PartialOrd for SpectralPoint {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SpectralPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.node, self.level)
    }
}

/// A height `int + eps·ε` with `0 < ε < 1/2` kept symbolic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Offset {
    pub int: i32,
    pub eps: i8,
}

impl Offset {
    pub const fn new(int: i32, eps: i8) -> Self {
        Offset { int, eps }
    }

    pub const fn int(int: i32) -> Self {
        Offset { int, eps: 0 }
    }

    /// An integer key with the same order as the offset itself.
    pub const fn key(self) -> i32 {
        4 * self.int + self.eps as i32
    }

    pub const fn shift(self, d: i32) -> Self {
        Offset::new(self.int + d, self.eps)
    }
}

impl fmt::Display for Offset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.eps {
            0 => write!(f, "{}", self.int),
            1 => write!(f, "{}+ε", self.int),
            -1 => write!(f, "{}-ε", self.int),
            e => write!(f, "{}{:+}ε", self.int, e),
        }
    }
}

/// A point of the plane in which paths are drawn.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanePoint {
    pub x: i32,
    pub y: Offset,
}

impl PlanePoint {
    pub const fn new(x: i32, y: Offset) -> Self {
        PlanePoint { x, y }
    }

    pub const fn at(x: i32, y: i32) -> Self {
        PlanePoint { x, y: Offset::int(y) }
    }
}

impl fmt::Display for PlanePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Kind {
    B,
    Sl2,
}

/// A simple Lie algebra: type `B_N` with `N ≥ 2`, or `sl_2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Algebra {
    kind: Kind,
    rank: u32,
}

impl Algebra {
    /// Type `B_N`.
    pub fn b(rank: u32) -> Result<Self> {
        if rank < 2 {
            return Err(Error::InvalidRank(rank));
        }
        Ok(Algebra { kind: Kind::B, rank })
    }

    /// The rank one algebra used for string computations.
    pub const fn sl2() -> Self {
        Algebra { kind: Kind::Sl2, rank: 1 }
    }

    pub const fn rank(&self) -> u32 {
        self.rank
    }

    pub const fn is_sl2(&self) -> bool {
        matches!(self.kind, Kind::Sl2)
    }

    pub fn check_node(&self, node: u32) -> Result<()> {
        if node == 0 || node > self.rank {
            Err(Error::NodeOutOfRange { node, rank: self.rank })
        } else {
            Ok(())
        }
    }

    /// `r_i`: 2 on long roots, 1 on the short root `α_N` (and on `sl_2`).
    pub fn r(&self, node: u32) -> i32 {
        match self.kind {
            Kind::Sl2 => 1,
            Kind::B if node < self.rank => 2,
            Kind::B => 1,
        }
    }

    /// Cartan matrix entry `C_{ij} = 2(α_i, α_j)/(α_i, α_i)`.
    pub fn cartan(&self, i: u32, j: u32) -> i32 {
        let n = self.rank;
        if i == j {
            2
        } else if i.abs_diff(j) != 1 {
            0
        } else if i == n && j == n - 1 && self.kind == Kind::B {
            -2
        } else {
            -1
        }
    }

    /// Neighbours of `i` in the Dynkin diagram.
    pub fn neighbours(&self, i: u32) -> impl Iterator<Item = u32> {
        let n = self.rank;
        [i.wrapping_sub(1), i + 1].into_iter().filter(move |&j| j >= 1 && j <= n)
    }

    pub fn in_x(&self, p: SpectralPoint) -> Result<bool> {
        self.check_node(p.node)?;
        let odd = p.level.rem_euclid(2) == 1;
        Ok(match self.kind {
            Kind::Sl2 => !odd,
            Kind::B if p.node == self.rank => odd,
            Kind::B => !odd,
        })
    }

    pub fn in_w(&self, p: SpectralPoint) -> Result<bool> {
        self.in_x(p.shift(-self.r(p.node)))
    }

    /// The embedding `ι` of 𝒳 into the plane.
    pub fn iota(&self, p: SpectralPoint) -> Result<PlanePoint> {
        if self.kind != Kind::B {
            return Err(Error::InvalidRank(self.rank));
        }
        if !self.in_x(p)? {
            return Err(Error::NotInX(p));
        }
        let n = self.rank as i32;
        let i = p.node as i32;
        let x = if i == n {
            2 * n - 1
        } else if (2 * n + p.level - 2 * i).rem_euclid(4) == 2 {
            2 * i
        } else {
            4 * n - 2 - 2 * i
        };
        Ok(PlanePoint::at(x, p.level))
    }

    /// Inverse of `ι` on interior columns.
    pub fn iota_inverse(&self, q: PlanePoint) -> Result<SpectralPoint> {
        let n = self.rank as i32;
        let miss = Err(Error::NotInImage(q));
        if self.kind != Kind::B || q.y.eps != 0 || q.x % 2 != 0 || q.x <= 0 || q.x >= 4 * n - 2 {
            return miss;
        }
        for i in [q.x / 2, 2 * n - 1 - q.x / 2] {
            if (1..n).contains(&i) {
                let p = SpectralPoint::new(i as u32, q.y.int);
                if self.in_x(p)? && self.iota(p)? == q {
                    return Ok(p);
                }
            }
        }
        miss
    }

    /// `ι` for owners on the spin column, used when reading corners.
    pub(crate) fn spin_column(&self) -> i32 {
        2 * self.rank as i32 - 1
    }

    /// Last column of the plane, `4N − 2`.
    pub(crate) fn last_column(&self) -> i32 {
        4 * self.rank as i32 - 2
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            Kind::B => write!(f, "B{}", self.rank),
            Kind::Sl2 => write!(f, "sl2"),
        }
    }
}

impl std::str::FromStr for Algebra {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("sl2") || t.eq_ignore_ascii_case("a1") {
            return Ok(Algebra::sl2());
        }
        let digits = t
            .strip_prefix('B')
            .or_else(|| t.strip_prefix('b'))
            .ok_or_else(|| Error::Parse { pos: 0, msg: format!("unknown type {t:?}") })?;
        let n: u32 =
            digits.parse().map_err(|_| Error::Parse { pos: 1, msg: format!("bad rank in {t:?}") })?;
        Algebra::b(n)
    }
}
