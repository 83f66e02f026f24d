//! Snake positions, extended snakes and their q-characters.

use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::{Algebra, SpectralPoint};
use crate::monomial::{Monomial, QCharacter};
use crate::path::PathModel;

/// How a point sits relative to an earlier one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PositionClass {
    None,
    /// Only the second, extended condition holds.
    ExtendedOnly,
    /// Snake position shifted by `σ > 0`.
    Snake(u32),
    /// Snake position with `σ = 0`.
    MinimalSnake,
}

impl PositionClass {
    pub fn shift(&self) -> Option<u32> {
        match self {
            PositionClass::Snake(s) => Some(*s),
            PositionClass::MinimalSnake => Some(0),
            _ => None,
        }
    }

    pub fn is_snake(&self) -> bool {
        self.shift().is_some()
    }

    pub fn is_extended(&self) -> bool {
        *self != PositionClass::None
    }
}

fn delta(alg: &Algebra, a: SpectralPoint, b: SpectralPoint) -> i32 {
    let n = alg.rank();
    (a.node == n) as i32 + (b.node == n) as i32
}

/// Classifies `b` relative to `a`.
pub fn position_class(alg: &Algebra, a: SpectralPoint, b: SpectralPoint) -> Result<PositionClass> {
    for p in [a, b] {
        if !alg.in_x(p)? {
            return Err(Error::NotInX(p));
        }
    }
    let n = alg.rank() as i32;
    let (i, j) = (a.node as i32, b.node as i32);
    let d = b.level - a.level;
    let dl = delta(alg, a, b);
    let bound = 4 + 2 * (j - i).abs() - dl;
    if d >= bound && (d - (2 * (j - i) - dl)).rem_euclid(4) == 0 {
        let sigma = ((d - bound) / 4) as u32;
        return Ok(if sigma == 0 { PositionClass::MinimalSnake } else { PositionClass::Snake(sigma) });
    }
    if d >= 2 * n + 2 + 2 * (n - i - j).abs() - dl {
        return Ok(PositionClass::ExtendedOnly);
    }
    Ok(PositionClass::None)
}

/// Whether the consecutive points `a`, `b` of an extended snake split the
/// module into a tensor product.
pub fn splits_between(alg: &Algebra, a: SpectralPoint, b: SpectralPoint) -> bool {
    let n = alg.rank() as i32;
    let (i, j) = (a.node as i32, b.node as i32);
    let d = b.level - a.level;
    let dl = delta(alg, a, b);
    let congruent = |c: i32| (d - c).rem_euclid(4) == 0;
    (d >= 4 + 2 * i + 2 * j - dl && congruent(2 * (i - j) - dl))
        || (d >= 4 * n + 2 - 2 * (i - j).abs() - dl && congruent(2 + 2 * (i - j) - dl))
}

/// A sequence of points of 𝒳 sorted by level, then node.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SnakeSeq {
    alg: Algebra,
    points: Vec<SpectralPoint>,
}

impl SnakeSeq {
    /// Sorts the points and checks that they lie in 𝒳.
    pub fn new(alg: Algebra, mut points: Vec<SpectralPoint>) -> Result<Self> {
        for &p in &points {
            if !alg.in_x(p)? {
                return Err(Error::NotInX(p));
            }
        }
        points.sort();
        Ok(SnakeSeq { alg, points })
    }

    /// `𝒳(m)` for a dominant monomial supported on 𝒳.
    pub fn from_monomial(alg: Algebra, m: &Monomial) -> Result<Self> {
        if !m.is_dominant() {
            return Err(Error::NotDominant(m.to_string()));
        }
        SnakeSeq::new(alg, m.positive_points())
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn points(&self) -> &[SpectralPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `Π Y_{i_t,k_t}`.
    pub fn monomial(&self) -> Monomial {
        Monomial::from_exponents(self.points.iter().map(|&p| (p, 1)))
    }

    /// Position classes of consecutive pairs.
    pub fn classes(&self) -> Vec<PositionClass> {
        self.points
            .windows(2)
            .map(|w| position_class(&self.alg, w[0], w[1]).expect("points lie in 𝒳"))
            .collect()
    }

    /// The first consecutive pair not in extended snake position.
    pub fn first_gap(&self) -> Option<(SpectralPoint, SpectralPoint)> {
        self.points.windows(2).zip(self.classes()).find(|(_, c)| !c.is_extended()).map(|(w, _)| (w[0], w[1]))
    }

    pub fn is_extended_snake(&self) -> bool {
        self.first_gap().is_none()
    }

    pub fn is_snake(&self) -> bool {
        self.classes().iter().all(PositionClass::is_snake)
    }

    /// Shifts `σ_t` between consecutive points, where defined.
    pub fn shifts(&self) -> Vec<Option<u32>> {
        self.classes().iter().map(PositionClass::shift).collect()
    }

    fn require_extended(&self) -> Result<()> {
        match self.first_gap() {
            None => Ok(()),
            Some((first, second)) => Err(Error::NotExtendedSnake { first, second }),
        }
    }

    /// Maximal factorization into consecutive pieces whose modules tensor.
    pub fn prime_split(&self) -> Result<Vec<SnakeSeq>> {
        self.require_extended()?;
        let mut out = Vec::new();
        let mut current = Vec::new();
        for (t, &p) in self.points.iter().enumerate() {
            if t > 0 && splits_between(&self.alg, self.points[t - 1], p) {
                out.push(SnakeSeq { alg: self.alg, points: std::mem::take(&mut current) });
            }
            current.push(p);
        }
        if !current.is_empty() || out.is_empty() {
            out.push(SnakeSeq { alg: self.alg, points: current });
        }
        Ok(out)
    }

    /// Consecutive triples `(t, t+1, t+2)` where the last point is not in
    /// extended snake position to the first.
    pub fn transitivity_gaps(&self) -> Vec<usize> {
        (0..self.points.len().saturating_sub(2))
            .filter(|&t| {
                let c = position_class(&self.alg, self.points[t], self.points[t + 2]);
                !c.expect("points lie in 𝒳").is_extended()
            })
            .collect()
    }

    /// The same sequence translated by `d` levels.
    pub fn shift(&self, d: i32) -> Result<SnakeSeq> {
        SnakeSeq::new(self.alg, self.points.iter().map(|p| p.shift(d)).collect())
    }
}

impl fmt::Display for SnakeSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.points.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// `χ_q(L(m_+))` for an extended snake, as a sum over non-overlapping
/// tuples of paths.
pub fn snake_qchar(model: &PathModel, m_plus: &Monomial) -> Result<QCharacter> {
    let seq = SnakeSeq::from_monomial(*model.algebra(), m_plus)?;
    seq_qchar(model, &seq)
}

pub fn seq_qchar(model: &PathModel, seq: &SnakeSeq) -> Result<QCharacter> {
    seq.require_extended()?;
    model.tuple_character(seq.points())
}

/// `Π m(p⁻)` over the owners of `seq`.
pub fn lowest_monomial(model: &PathModel, seq: &SnakeSeq) -> Result<Monomial> {
    let mut m = Monomial::one();
    for &p in seq.points() {
        m *= &model.lowest_path(p)?.monomial(model.algebra())?;
    }
    Ok(m)
}

/// Whether `L(m_+)` is tame, for `m_+` dominant and supported on 𝒳.
pub fn is_tame_class(alg: &Algebra, m_plus: &Monomial) -> Result<bool> {
    Ok(SnakeSeq::from_monomial(*alg, m_plus)?.is_extended_snake())
}

/// All extended snakes of length `1..=max_len` whose levels lie in
/// `lo..hi` and whose first level lies in `first`.
pub fn extended_snakes_in_window(
    alg: &Algebra,
    max_len: usize,
    first: std::ops::Range<i32>,
    lo: i32,
    hi: i32,
) -> Vec<SnakeSeq> {
    let points: Vec<SpectralPoint> = (lo..hi)
        .flat_map(|k| (1..=alg.rank()).map(move |i| SpectralPoint::new(i, k)))
        .filter(|&p| alg.in_x(p).unwrap_or(false))
        .collect();
    let mut out = Vec::new();
    let mut stack: Vec<SpectralPoint> = Vec::new();
    fn grow(
        alg: &Algebra,
        points: &[SpectralPoint],
        max_len: usize,
        stack: &mut Vec<SpectralPoint>,
        out: &mut Vec<SnakeSeq>,
    ) {
        out.push(SnakeSeq { alg: *alg, points: stack.clone() });
        if stack.len() == max_len {
            return;
        }
        let last = *stack.last().expect("nonempty");
        for &p in points.iter().filter(|&&p| p > last) {
            if position_class(alg, last, p).expect("points lie in 𝒳").is_extended() {
                stack.push(p);
                grow(alg, points, max_len, stack, out);
                stack.pop();
            }
        }
    }
    if max_len == 0 {
        return out;
    }
    for &p in points.iter().filter(|p| first.contains(&p.level)) {
        stack.push(p);
        grow(alg, &points, max_len, &mut stack, &mut out);
        stack.pop();
    }
    out
}
