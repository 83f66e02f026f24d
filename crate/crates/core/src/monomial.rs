//! Laurent monomials in the variables `Y_{i,k}` and multisets of them.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Div, Mul, MulAssign};
use std::str::FromStr;

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::lattice::{Algebra, SpectralPoint};

type Factors = SmallVec<[(SpectralPoint, i32); 8]>;

/// A Laurent monomial `Π Y_{i,k}^{e}`, stored sorted by `(k, i)` with no
/// zero exponents.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    factors: Factors,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    /// The variable `Y_{node,level}`.
    pub fn y(node: u32, level: i32) -> Self {
        Monomial::y_pow(node, level, 1)
    }

    pub fn y_pow(node: u32, level: i32, e: i32) -> Self {
        let mut factors = Factors::new();
        if e != 0 {
            factors.push((SpectralPoint::new(node, level), e));
        }
        Monomial { factors }
    }

    /// Builds a monomial from `(point, exponent)` pairs in any order.
    pub fn from_exponents<I: IntoIterator<Item = (SpectralPoint, i32)>>(it: I) -> Self {
        let mut map: BTreeMap<SpectralPoint, i32> = BTreeMap::new();
        for (p, e) in it {
            *map.entry(p).or_insert(0) += e;
        }
        Monomial { factors: map.into_iter().filter(|&(_, e)| e != 0).collect() }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Number of variables with nonzero exponent.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Factors in canonical `(k, i)` order.
    pub fn iter(&self) -> impl ExactSizeIterator<Item = (SpectralPoint, i32)> + '_ {
        self.factors.iter().copied()
    }

    /// Exponent of `Y_{node,level}`.
    pub fn u(&self, node: u32, level: i32) -> i32 {
        let key = SpectralPoint::new(node, level);
        self.factors.binary_search_by(|(p, _)| p.cmp(&key)).map(|ix| self.factors[ix].1).unwrap_or(0)
    }

    pub fn inv(&self) -> Self {
        Monomial { factors: self.factors.iter().map(|&(p, e)| (p, -e)).collect() }
    }

    pub fn pow(&self, n: i32) -> Self {
        if n == 0 {
            return Monomial::one();
        }
        Monomial { factors: self.factors.iter().map(|&(p, e)| (p, e * n)).collect() }
    }

    /// `self · other^n`.
    pub fn mul_pow(&self, other: &Monomial, n: i32) -> Monomial {
        if n == 0 {
            return self.clone();
        }
        let (a, b) = (&self.factors, &other.factors);
        let mut out = Factors::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b[j].0, b[j].1 * n));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let e = a[i].1 + b[j].1 * n;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|&(p, e)| (p, e * n)));
        Monomial { factors: out }
    }

    pub fn is_dominant(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e > 0)
    }

    pub fn is_antidominant(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e < 0)
    }

    pub fn is_j_dominant(&self, j: u32) -> bool {
        self.factors.iter().all(|&(p, e)| p.node != j || e > 0)
    }

    /// The weight, as coordinates in the fundamental weights `ω_1..ω_rank`.
    pub fn weight(&self, rank: u32) -> Weight {
        let mut w = vec![0i64; rank as usize];
        for &(p, e) in &self.factors {
            if let Some(slot) = w.get_mut(p.node as usize - 1) {
                *slot += e as i64;
            }
        }
        Weight(w)
    }

    /// `β_J`: keeps only the variables whose node lies in `nodes`.
    pub fn beta(&self, nodes: &[u32]) -> Self {
        Monomial { factors: self.factors.iter().filter(|(p, _)| nodes.contains(&p.node)).copied().collect() }
    }

    /// Variables with positive exponent, repeated by multiplicity, in
    /// canonical order.
    pub fn positive_points(&self) -> Vec<SpectralPoint> {
        self.factors
            .iter()
            .filter(|&&(_, e)| e > 0)
            .flat_map(|&(p, e)| std::iter::repeat_n(p, e as usize))
            .collect()
    }

    /// Smallest and largest level occurring, if any.
    pub fn level_range(&self) -> Option<(i32, i32)> {
        Some((self.factors.first()?.0.level, self.factors.last()?.0.level))
    }

    /// Largest node occurring, 0 for the unit.
    pub fn max_node(&self) -> u32 {
        self.factors.iter().map(|(p, _)| p.node).max().unwrap_or(0)
    }

    /// Checks that every node is valid for `alg`.
    pub fn check_nodes(&self, alg: &Algebra) -> Result<()> {
        self.factors.iter().try_for_each(|(p, _)| alg.check_node(p.node))
    }

    /// Translates every level by `d`.
    pub fn shift(&self, d: i32) -> Self {
        Monomial { factors: self.factors.iter().map(|&(p, e)| (p.shift(d), e)).collect() }
    }

    /// `[[i,k,e],...]` in canonical order.
    pub fn to_triples(&self) -> Vec<[i64; 3]> {
        self.factors.iter().map(|&(p, e)| [p.node as i64, p.level as i64, e as i64]).collect()
    }

    pub fn from_triples(triples: &[[i64; 3]]) -> Result<Self> {
        let mut pairs = Vec::with_capacity(triples.len());
        for &[i, k, e] in triples {
            let conv = |v: i64| i32::try_from(v).map_err(|_| bad_json(format!("{v} out of range")));
            if i < 1 {
                return Err(bad_json(format!("node {i} must be positive")));
            }
            pairs.push((SpectralPoint::new(conv(i)? as u32, conv(k)?), conv(e)?));
        }
        Ok(Monomial::from_exponents(pairs))
    }
}

fn bad_json(msg: String) -> Error {
    Error::Parse { pos: 0, msg }
}

impl Mul<&Monomial> for &Monomial {
    type Output = Monomial;
    fn mul(self, rhs: &Monomial) -> Monomial {
        self.mul_pow(rhs, 1)
    }
}

impl Mul for Monomial {
    type Output = Monomial;
    fn mul(self, rhs: Monomial) -> Monomial {
        self.mul_pow(&rhs, 1)
    }
}

impl Div<&Monomial> for &Monomial {
    type Output = Monomial;
    fn div(self, rhs: &Monomial) -> Monomial {
        self.mul_pow(rhs, -1)
    }
}

impl Div for Monomial {
    type Output = Monomial;
    fn div(self, rhs: Monomial) -> Monomial {
        self.mul_pow(&rhs, -1)
    }
}

impl MulAssign<&Monomial> for Monomial {
    fn mul_assign(&mut self, rhs: &Monomial) {
        *self = self.mul_pow(rhs, 1);
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (ix, &(p, e)) in self.factors.iter().enumerate() {
            if ix > 0 {
                f.write_str(" ")?;
            }
            write!(f, "Y[{},{}]", p.node, p.level)?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Monomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Parser { src: s.as_bytes(), pos: 0 }.monomial()
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn fail<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.src.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            self.fail(format!("expected '{}'", c as char))
        }
    }

    fn int(&mut self) -> Result<i64> {
        let start = self.pos;
        if matches!(self.src.get(self.pos), Some(b'-' | b'+')) {
            self.pos += 1;
        }
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
        text.parse().or_else(|_| {
            self.pos = start;
            self.fail("expected an integer")
        })
    }

    fn monomial(mut self) -> Result<Monomial> {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&b'1') {
            self.pos += 1;
            self.skip_ws();
            return if self.pos == self.src.len() {
                Ok(Monomial::one())
            } else {
                self.fail("unexpected input after '1'")
            };
        }
        let mut pairs = Vec::new();
        while self.pos < self.src.len() {
            self.expect(b'Y')?;
            self.expect(b'[')?;
            self.skip_ws();
            let at = self.pos;
            let i = self.int()?;
            if i < 1 || i > u32::MAX as i64 {
                self.pos = at;
                return self.fail("node must be a positive integer");
            }
            self.skip_ws();
            self.expect(b',')?;
            self.skip_ws();
            let k = self.int()?;
            self.skip_ws();
            self.expect(b']')?;
            let mut e = 1;
            if self.src.get(self.pos) == Some(&b'^') {
                self.pos += 1;
                let at = self.pos;
                e = self.int()?;
                if e == 0 {
                    self.pos = at;
                    return self.fail("exponent must be nonzero");
                }
            }
            let k = i32::try_from(k).or_else(|_| self.fail("level out of range"))?;
            let e = i32::try_from(e).or_else(|_| self.fail("exponent out of range"))?;
            pairs.push((SpectralPoint::new(i as u32, k), e));
            let before = self.pos;
            self.skip_ws();
            if self.pos == before && self.pos < self.src.len() {
                return self.fail("factors must be separated by whitespace");
            }
        }
        if pairs.is_empty() {
            return self.fail("empty input");
        }
        Ok(Monomial::from_exponents(pairs))
    }
}

/// A weight in the basis of fundamental weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: u32) -> Self {
        Weight(vec![0; rank as usize])
    }
}

impl std::ops::Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Algebra {
    /// The monomial `A_{i,k}`.
    pub fn a_var(&self, node: u32, level: i32) -> Result<Monomial> {
        self.check_node(node)?;
        let r = self.r(node);
        let mut pairs =
            vec![(SpectralPoint::new(node, level + r), 1), (SpectralPoint::new(node, level - r), 1)];
        for j in self.neighbours(node) {
            match self.cartan(j, node) {
                -1 => pairs.push((SpectralPoint::new(j, level), -1)),
                -2 => {
                    pairs.push((SpectralPoint::new(j, level + 1), -1));
                    pairs.push((SpectralPoint::new(j, level - 1), -1));
                }
                _ => unreachable!("type B has no triple bonds"),
            }
        }
        Ok(Monomial::from_exponents(pairs))
    }

    /// Writes `ratio` as `Π A_{j,l}^{n_{j,l}}`, if possible.
    ///
    /// Each `A_{j,l}` has a unique variable of lowest level, `Y_{j,l-r_j}`,
    /// so the exponents are read off level by level from the bottom.
    pub fn a_decompose(&self, ratio: &Monomial) -> Option<BTreeMap<SpectralPoint, i32>> {
        let mut out = BTreeMap::new();
        let Some((_, top)) = ratio.level_range() else {
            return Some(out);
        };
        let mut rest = ratio.clone();
        while let Some(&(low, _)) = rest.factors.first() {
            if low.level > top {
                return None;
            }
            let level = low.level;
            let batch: Vec<_> = rest.iter().take_while(|(p, _)| p.level == level).collect();
            for (p, e) in batch {
                self.check_node(p.node).ok()?;
                let a_point = p.shift(self.r(p.node));
                let a = self.a_var(a_point.node, a_point.level).ok()?;
                rest = rest.mul_pow(&a, -e);
                out.insert(a_point, e);
            }
        }
        Some(out)
    }

    /// Whether `m ∈ m_plus · ℤ[A_{j,l}^{-1}]_{(j,l) ∈ 𝒲}`.
    pub fn in_lowering_cone(&self, m: &Monomial, m_plus: &Monomial) -> bool {
        match self.a_decompose(&(m / m_plus)) {
            None => false,
            Some(n) => n.into_iter().all(|(p, e)| e < 0 && self.in_w(p).unwrap_or(false)),
        }
    }
}

/// A q-character: a finite multiset of monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QCharacter {
    terms: BTreeMap<Monomial, u64>,
}

impl QCharacter {
    pub fn new() -> Self {
        QCharacter::default()
    }

    /// Each monomial counted once per occurrence.
    pub fn from_monomials<I: IntoIterator<Item = Monomial>>(it: I) -> Self {
        let mut q = QCharacter::new();
        for m in it {
            q.add(m, 1);
        }
        q
    }

    pub fn add(&mut self, m: Monomial, mult: u64) {
        if mult > 0 {
            *self.terms.entry(m).or_insert(0) += mult;
        }
    }

    /// Number of distinct monomials.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of multiplicities.
    pub fn dimension(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn multiplicity(&self, m: &Monomial) -> u64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.contains_key(m)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, u64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn is_thin(&self) -> bool {
        self.terms.values().all(|&c| c == 1)
    }

    pub fn dominant_terms(&self) -> Vec<&Monomial> {
        self.terms.keys().filter(|m| m.is_dominant()).collect()
    }

    pub fn antidominant_terms(&self) -> Vec<&Monomial> {
        self.terms.keys().filter(|m| m.is_antidominant()).collect()
    }

    /// Exactly one dominant monomial.
    pub fn is_special(&self) -> bool {
        self.dominant_terms().len() == 1
    }

    /// Exactly one anti-dominant monomial.
    pub fn is_antispecial(&self) -> bool {
        self.antidominant_terms().len() == 1
    }

    /// The product of characters, as a convolution of multisets.
    pub fn product(&self, other: &QCharacter) -> QCharacter {
        let mut acc: FxHashMap<Monomial, u64> = FxHashMap::default();
        for (a, &x) in &self.terms {
            for (b, &y) in &other.terms {
                *acc.entry(a * b).or_insert(0) += x * y;
            }
        }
        QCharacter { terms: acc.into_iter().collect() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_repr()).expect("plain data serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.to_repr()).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let repr: QCharRepr = serde_json::from_str(text)?;
        QCharacter::from_repr(&repr)
    }

    pub(crate) fn to_repr(&self) -> QCharRepr {
        let mut terms: Vec<TermRepr> =
            self.terms.iter().map(|(m, &mult)| TermRepr { m: m.to_triples(), mult }).collect();
        terms.sort_by(|a, b| a.m.cmp(&b.m));
        QCharRepr { terms }
    }

    pub(crate) fn from_repr(repr: &QCharRepr) -> Result<Self> {
        let mut q = QCharacter::new();
        for t in &repr.terms {
            if t.mult == 0 {
                return Err(bad_json("multiplicities must be positive".into()));
            }
            q.add(Monomial::from_triples(&t.m)?, t.mult);
        }
        Ok(q)
    }
}

impl FromIterator<(Monomial, u64)> for QCharacter {
    fn from_iter<I: IntoIterator<Item = (Monomial, u64)>>(it: I) -> Self {
        let mut q = QCharacter::new();
        for (m, c) in it {
            q.add(m, c);
        }
        q
    }
}

#[derive(Serialize, Deserialize)]
pub(crate) struct QCharRepr {
    pub terms: Vec<TermRepr>,
}

#[derive(Serialize, Deserialize)]
pub(crate) struct TermRepr {
    pub m: Vec<[i64; 3]>,
    pub mult: u64,
}
