//! A checker for the sufficient conditions under which a set of monomials
//! is the q-character of a thin special module.
//!
//! The three conditions are checked in the order (i), (iii), (ii): the
//! first two are local to a monomial or to an `sl_2` class and are cheap,
//! the last one needs a scan over a window of `A`-variables.
//!
//! Classes for (iii) are the intersections of `M` with the cosets
//! `m ℤ[A_{i,a}^{±1}]`. They are found through a coset key: the map that
//! rewrites every `Y_{i,c}` in terms of `Y_{i,c0}` with `c0 ∈ [0, 2 r_i)`
//! using `A_{i,a} = 1`. Two monomials share a key exactly when their ratio
//! is a product of `A_{i,a}^{±1}`.

use std::collections::BTreeMap;
use std::fmt;

use rustc_hash::FxHashMap;

use crate::lattice::{Algebra, SpectralPoint};
use crate::monomial::{Monomial, QCharacter};
use crate::sl2;

/// Which condition failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    /// (i): `m_+` is the only dominant monomial.
    Dominant,
    /// (ii): no `mA_{i,a}^{-1}A_{j,b}` with `mA_{i,a}^{-1}` missing.
    Exclusion,
    /// (iii): every `sl_2` class is an `sl_2` q-character.
    Sl2Class,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::Dominant => "(i)",
            Condition::Exclusion => "(ii)",
            Condition::Sl2Class => "(iii)",
        })
    }
}

/// Data explaining a failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// `m_+` missing from `M`, or other dominant monomials present.
    Dominant { highest_missing: bool, others: Vec<Monomial> },
    /// `n = m A_{lowered}^{-1} ∉ M` while `n A_{lowered}` and `n A_{raised}`
    /// both lie in `M`.
    Exclusion { missing: Monomial, lowered: SpectralPoint, raised: SpectralPoint },
    /// The class of `node` containing `members` is not an `sl_2` character.
    Sl2Class { node: u32, members: Vec<Monomial> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail { condition: Condition, witness: Witness },
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn condition(&self) -> Option<Condition> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail { condition, .. } => Some(*condition),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => f.write_str("pass"),
            Verdict::Fail { condition, witness } => {
                write!(f, "fail at {condition}: ")?;
                match witness {
                    Witness::Dominant { highest_missing: true, .. } => {
                        f.write_str("the highest monomial is missing")
                    }
                    Witness::Dominant { others, .. } => {
                        let list: Vec<String> = others.iter().map(ToString::to_string).collect();
                        write!(f, "extra dominant monomials {}", list.join("; "))
                    }
                    Witness::Exclusion { missing, lowered, raised } => write!(
                        f,
                        "{missing} is missing but both its A{lowered} and A{raised} raisings are present"
                    ),
                    Witness::Sl2Class { node, members } => {
                        let list: Vec<String> = members.iter().map(ToString::to_string).collect();
                        write!(f, "node {node} class {{{}}} is not an sl2 character", list.join("; "))
                    }
                }
            }
        }
    }
}

/// `Y_{i,c}` rewritten in the quotient by `A_{i,a} = 1`.
fn coset_image(alg: &Algebra, node: u32, level: i32) -> Monomial {
    let r = alg.r(node);
    let period = 2 * r;
    let base = level.rem_euclid(period);
    let q = (level - base) / period;
    // Neighbour part n(a) with A_{i,a} = Y_{i,a+r} Y_{i,a-r} n(a)^{-1}.
    let nb = |a: i32| {
        alg.a_var(node, a)
            .expect("node checked")
            .iter()
            .filter(|(p, _)| p.node != node)
            .map(|(p, e)| (p, -e))
            .collect::<Vec<_>>()
    };
    let mut img = Monomial::y(node, base);
    if q > 0 {
        for t in 1..=q {
            let n = Monomial::from_exponents(nb(base + period * t - r));
            img = &n / &img;
        }
    } else {
        for t in (q..0).rev() {
            let n = Monomial::from_exponents(nb(base + period * t + r));
            img = &n / &img;
        }
    }
    img
}

/// A key shared exactly by the monomials of one coset of `⟨A_{node,a}⟩`.
fn coset_key(alg: &Algebra, node: u32, m: &Monomial, memo: &mut FxHashMap<i32, Monomial>) -> Monomial {
    let mut rest = Vec::with_capacity(m.len());
    let mut key = Monomial::one();
    for (p, e) in m.iter() {
        if p.node == node {
            let img = memo.entry(p.level).or_insert_with(|| coset_image(alg, node, p.level));
            key = key.mul_pow(img, e);
        } else {
            rest.push((p, e));
        }
    }
    &key * &Monomial::from_exponents(rest)
}

#[derive(Clone, Debug)]
struct Class {
    node: u32,
    members: Vec<usize>,
}

/// The conditions checked on a fixed set `M`, with the partitions cached
/// so that the verdict on `M ∖ {m}` can be found quickly.
#[derive(Debug)]
pub struct ThinCriteria {
    alg: Algebra,
    m_plus: Monomial,
    members: Vec<Monomial>,
    index: FxHashMap<Monomial, usize>,
    classes: Vec<Class>,
    class_of: Vec<Vec<usize>>,
    class_ok: Vec<bool>,
}

impl ThinCriteria {
    /// `members` is treated as a set.
    pub fn new(alg: Algebra, m_plus: Monomial, members: impl IntoIterator<Item = Monomial>) -> Self {
        let mut members: Vec<Monomial> = members.into_iter().collect();
        members.sort();
        members.dedup();
        let index: FxHashMap<Monomial, usize> =
            members.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let rank = alg.rank();
        let mut classes = Vec::new();
        let mut class_of = vec![Vec::with_capacity(rank as usize); members.len()];
        for node in 1..=rank {
            let mut memo = FxHashMap::default();
            let mut by_key: FxHashMap<Monomial, usize> = FxHashMap::default();
            for (ix, m) in members.iter().enumerate() {
                let key = coset_key(&alg, node, m, &mut memo);
                let c = *by_key.entry(key).or_insert_with(|| {
                    classes.push(Class { node, members: Vec::new() });
                    classes.len() - 1
                });
                classes[c].members.push(ix);
                class_of[ix].push(c);
            }
        }
        let mut this = ThinCriteria { alg, m_plus, members, index, classes, class_of, class_ok: Vec::new() };
        this.class_ok = (0..this.classes.len())
            .map(|c| this.class_is_sl2(this.classes[c].node, &this.classes[c].members))
            .collect();
        this
    }

    pub fn members(&self) -> &[Monomial] {
        &self.members
    }

    fn class_is_sl2(&self, node: u32, members: &[usize]) -> bool {
        let r = self.alg.r(node);
        let target: QCharacter = members.iter().map(|&ix| (self.members[ix].beta(&[node]), 1)).collect();
        let size = target.dimension();
        members.iter().any(|&ix| {
            let m = &self.members[ix];
            if !m.is_j_dominant(node) {
                return false;
            }
            let b = m.beta(&[node]);
            let Ok(strings) = sl2::qstring_decompose(&b, r) else { return false };
            let dim: u64 = strings.iter().map(|s| s.length as u64 + 1).product();
            dim == size && sl2::sl2_char(&b, r).is_ok_and(|c| c == target)
        })
    }

    fn dominant_failure(&self, skip: Option<usize>) -> Option<Verdict> {
        let present = |ix: usize| Some(ix) != skip;
        let highest_missing = !self.index.get(&self.m_plus).is_some_and(|&ix| present(ix));
        let others: Vec<Monomial> = self
            .members
            .iter()
            .enumerate()
            .filter(|&(ix, m)| present(ix) && m.is_dominant() && *m != self.m_plus)
            .map(|(_, m)| m.clone())
            .collect();
        (highest_missing || !others.is_empty()).then(|| Verdict::Fail {
            condition: Condition::Dominant,
            witness: Witness::Dominant { highest_missing, others },
        })
    }

    fn sl2_failure(&self, failing: impl Iterator<Item = (u32, Vec<usize>)>) -> Option<Verdict> {
        failing
            .map(|(node, mut ms)| {
                ms.sort();
                (node, ms)
            })
            .min()
            .map(|(node, ms)| Verdict::Fail {
                condition: Condition::Sl2Class,
                witness: Witness::Sl2Class {
                    node,
                    members: ms.into_iter().map(|ix| self.members[ix].clone()).collect(),
                },
            })
    }

    /// The verdict on the whole set.
    pub fn verdict(&self) -> Verdict {
        if let Some(v) = self.dominant_failure(None) {
            return v;
        }
        let failing = (0..self.classes.len())
            .filter(|&c| !self.class_ok[c])
            .map(|c| (self.classes[c].node, self.classes[c].members.clone()));
        if let Some(v) = self.sl2_failure(failing) {
            return v;
        }
        exclusion_failure(&self.alg, &self.members, &self.index).unwrap_or(Verdict::Pass)
    }

    /// The verdict on the set with `m` removed; equals
    /// `ThinCriteria::new(.., M ∖ {m}).verdict()`.
    pub fn verdict_without(&self, m: &Monomial) -> Verdict {
        let Some(&gone) = self.index.get(m) else { return self.verdict() };
        if let Some(v) = self.dominant_failure(Some(gone)) {
            return v;
        }
        let touched = &self.class_of[gone];
        let mut failing: Vec<(u32, Vec<usize>)> = (0..self.classes.len())
            .filter(|c| !touched.contains(c) && !self.class_ok[*c])
            .map(|c| (self.classes[c].node, self.classes[c].members.clone()))
            .collect();
        for &c in touched {
            let rest: Vec<usize> = self.classes[c].members.iter().copied().filter(|&ix| ix != gone).collect();
            if !rest.is_empty() && !self.class_is_sl2(self.classes[c].node, &rest) {
                failing.push((self.classes[c].node, rest));
            }
        }
        if let Some(v) = self.sl2_failure(failing.into_iter()) {
            return v;
        }
        let reduced: Vec<Monomial> =
            self.members.iter().enumerate().filter(|&(ix, _)| ix != gone).map(|(_, x)| x.clone()).collect();
        let index = reduced.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect();
        exclusion_failure(&self.alg, &reduced, &index).unwrap_or(Verdict::Pass)
    }
}

/// Condition (ii), scanning `A_{i,a}` over the support window of `M`
/// widened by one step. When `M` lives on 𝒳 only `a` with `(i,a) ∈ 𝒲`
/// can matter.
fn exclusion_failure(
    alg: &Algebra,
    members: &[Monomial],
    index: &FxHashMap<Monomial, usize>,
) -> Option<Verdict> {
    let (lo, hi) = members
        .iter()
        .filter_map(Monomial::level_range)
        .fold((i32::MAX, i32::MIN), |(a, b), (x, y)| (a.min(x), b.max(y)));
    if lo > hi {
        return None;
    }
    let on_x = members.iter().all(|m| m.iter().all(|(p, _)| alg.in_x(p).unwrap_or(false)));
    let mut window = Vec::new();
    for node in 1..=alg.rank() {
        let r = alg.r(node);
        for a in lo - r..=hi + r {
            let p = SpectralPoint::new(node, a);
            if !on_x || alg.in_w(p).unwrap_or(false) {
                window.push((p, alg.a_var(node, a).expect("node in range")));
            }
        }
    }
    let mut seen: FxHashMap<Monomial, SpectralPoint> = FxHashMap::default();
    let mut bad: BTreeMap<Monomial, (SpectralPoint, SpectralPoint)> = BTreeMap::new();
    for m in members {
        for (p, a) in &window {
            let n = m.mul_pow(a, -1);
            if index.contains_key(&n) {
                continue;
            }
            match seen.get(&n) {
                None => {
                    seen.insert(n, *p);
                }
                Some(q) if q != p => {
                    let pair = if q < p { (*q, *p) } else { (*p, *q) };
                    let slot = bad.entry(n).or_insert(pair);
                    *slot = (*slot).min(pair);
                }
                Some(_) => {}
            }
        }
    }
    bad.into_iter().next().map(|(missing, (lowered, raised))| Verdict::Fail {
        condition: Condition::Exclusion,
        witness: Witness::Exclusion { missing, lowered, raised },
    })
}

/// Checks whether `members` is `χ_q(L(m_plus))` by the thin criteria.
pub fn verify_thin_criteria(alg: &Algebra, m_plus: &Monomial, members: &[Monomial]) -> Verdict {
    ThinCriteria::new(*alg, m_plus.clone(), members.iter().cloned()).verdict()
}
