//! q-strings and the q-characters of `U_q(L sl_2)`-modules.
//!
//! Every function works with monomials in the variables of a single node,
//! with levels spaced by a step `s`: `s = r_i` when the monomial comes from
//! restricting a type B monomial to node `i`.

use crate::error::{Error, Result};
use crate::monomial::{Monomial, QCharacter};

/// The q-string `{b − s(k−1), b − s(k−3), …, b + s(k−1)}` on one node.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QString {
    pub node: u32,
    pub center: i32,
    pub length: u32,
    pub step: i32,
}

impl QString {
    pub fn new(node: u32, center: i32, length: u32, step: i32) -> Result<Self> {
        if length == 0 || !(1..=2).contains(&step) {
            return Err(Error::InvalidString(format!("length {length}, step {step}")));
        }
        Ok(QString { node, center, length, step })
    }

    fn from_ends(node: u32, lo: i32, hi: i32, step: i32) -> Self {
        QString { node, center: (lo + hi) / 2, length: ((hi - lo) / (2 * step) + 1) as u32, step }
    }

    pub fn lo(&self) -> i32 {
        self.center - self.step * (self.length as i32 - 1)
    }

    pub fn hi(&self) -> i32 {
        self.center + self.step * (self.length as i32 - 1)
    }

    pub fn levels(&self) -> impl Iterator<Item = i32> {
        let (lo, s) = (self.lo(), self.step);
        (0..self.length as i32).map(move |t| lo + 2 * s * t)
    }

    pub fn contains(&self, level: i32) -> bool {
        level >= self.lo() && level <= self.hi() && (level - self.lo()).rem_euclid(2 * self.step) == 0
    }

    fn same_lattice(&self, other: &QString) -> bool {
        (self.lo() - other.lo()).rem_euclid(2 * self.step) == 0
    }

    pub fn is_subset_of(&self, other: &QString) -> bool {
        self.same_lattice(other) && self.lo() >= other.lo() && self.hi() <= other.hi()
    }

    /// Whether the union of the two strings is again a string.
    fn union_is_string(&self, other: &QString) -> bool {
        let gap = 2 * self.step;
        self.same_lattice(other) && other.lo() <= self.hi() + gap && self.lo() <= other.hi() + gap
    }

    /// General position: the union is not a string, or one string contains
    /// the other.
    pub fn in_general_position(&self, other: &QString) -> bool {
        !self.union_is_string(other) || self.is_subset_of(other) || other.is_subset_of(self)
    }

    pub fn intersects(&self, other: &QString) -> bool {
        self.same_lattice(other) && self.lo().max(other.lo()) <= self.hi().min(other.hi())
    }

    /// The monomial `m_b^{(k)}`.
    pub fn monomial(&self) -> Monomial {
        Monomial::from_exponents(self.levels().map(|c| (crate::lattice::SpectralPoint::new(self.node, c), 1)))
    }
}

fn a_sl2(node: u32, center: i32, step: i32) -> Monomial {
    &Monomial::y(node, center + step) * &Monomial::y(node, center - step)
}

/// The q-character of the evaluation module attached to `s`.
pub fn eval_char(s: &QString) -> QCharacter {
    let k = s.length as i32;
    let mut m = s.monomial();
    let mut out = QCharacter::new();
    out.add(m.clone(), 1);
    for u in 0..k {
        m = m.mul_pow(&a_sl2(s.node, s.center + s.step * (k - 2 * u), s.step), -1);
        out.add(m.clone(), 1);
    }
    out
}

fn single_node(m: &Monomial) -> Result<u32> {
    let mut nodes = m.iter().map(|(p, _)| p.node);
    let first = nodes.next().unwrap_or(1);
    if nodes.any(|n| n != first) {
        return Err(Error::InvalidString(format!("{m} involves several nodes")));
    }
    Ok(first)
}

/// The unique multiset of strings in pairwise general position whose
/// monomials multiply to `m`.
pub fn qstring_decompose(m: &Monomial, step: i32) -> Result<Vec<QString>> {
    if !m.is_dominant() {
        return Err(Error::NotDominant(m.to_string()));
    }
    if !(1..=2).contains(&step) {
        return Err(Error::InvalidString(format!("step {step}")));
    }
    let node = single_node(m)?;
    let mut strings: Vec<QString> = m
        .iter()
        .flat_map(|(p, e)| std::iter::repeat_n(QString::from_ends(node, p.level, p.level, step), e as usize))
        .collect();
    merge_until_stable(&mut strings, first_violation);
    Ok(strings)
}

pub(crate) fn first_violation(strings: &[QString]) -> Option<(usize, usize)> {
    for a in 0..strings.len() {
        for b in a + 1..strings.len() {
            if !strings[a].in_general_position(&strings[b]) {
                return Some((a, b));
            }
        }
    }
    None
}

/// Runs the union/intersection merge with a caller-chosen pair selector.
pub(crate) fn merge_until_stable(
    strings: &mut Vec<QString>,
    mut pick: impl FnMut(&[QString]) -> Option<(usize, usize)>,
) {
    loop {
        strings.sort_by_key(|s| (s.lo(), s.hi()));
        let Some((a, b)) = pick(strings) else { return };
        let (x, y) = (strings[a], strings[b]);
        let (lo, hi) = (x.lo().min(y.lo()), x.hi().max(y.hi()));
        let (ilo, ihi) = (x.lo().max(y.lo()), x.hi().min(y.hi()));
        strings.remove(b);
        strings.remove(a);
        strings.push(QString::from_ends(x.node, lo, hi, x.step));
        if ilo <= ihi {
            strings.push(QString::from_ends(x.node, ilo, ihi, x.step));
        }
    }
}

/// The q-character of the simple module `L(m)`, for `m` dominant on one node.
pub fn sl2_char(m: &Monomial, step: i32) -> Result<QCharacter> {
    let mut acc = QCharacter::from_monomials([Monomial::one()]);
    for s in qstring_decompose(m, step)? {
        acc = acc.product(&eval_char(&s));
    }
    Ok(acc)
}

/// Whether `L(m)` is thin: its strings are pairwise disjoint.
pub fn is_thin_sl2(m: &Monomial, step: i32) -> Result<bool> {
    let strings = qstring_decompose(m, step)?;
    Ok(strings.iter().enumerate().all(|(a, x)| strings[a + 1..].iter().all(|y| !x.intersects(y))))
}

/// For a monomial of a thin module: whether `m A_{b+s}^{-1}` is again a
/// monomial of the module.
pub fn lowerable_sl2(m: &Monomial, b: i32, step: i32) -> Result<bool> {
    let node = single_node(m)?;
    let u = |c: i32| m.u(node, c);
    for (p, e) in m.iter() {
        let c = p.level;
        if e.abs() > 1 || u(c) - u(c + 2 * step) == 2 || u(c - 2 * step) - u(c) == 2 {
            return Err(Error::InvalidString(format!("{m} is not a monomial of a thin module")));
        }
    }
    Ok(u(b) == 1 && u(b + 2 * step) == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> Monomial {
        s.parse().unwrap()
    }

    #[test]
    fn decompose_examples() {
        let d = qstring_decompose(&m("Y[1,0] Y[1,2]"), 1).unwrap();
        assert_eq!(d, vec![QString::new(1, 1, 2, 1).unwrap()]);
        let d = qstring_decompose(&m("Y[1,0] Y[1,4]"), 1).unwrap();
        assert_eq!(d.len(), 2);
        let d = qstring_decompose(&m("Y[1,0]^2"), 1).unwrap();
        assert_eq!(d, vec![QString::new(1, 0, 1, 1).unwrap(); 2]);
        assert!(qstring_decompose(&m("Y[1,0]^-1"), 1).is_err());
        assert!(qstring_decompose(&m("Y[1,0] Y[2,0]"), 1).is_err());
    }

    #[test]
    fn eval_examples() {
        let s = QString::new(1, 5, 1, 1).unwrap();
        assert_eq!(eval_char(&s), QCharacter::from_monomials([m("Y[1,5]"), m("Y[1,7]^-1")]));
        let s = QString::new(1, 5, 2, 1).unwrap();
        assert_eq!(
            eval_char(&s),
            QCharacter::from_monomials(
                [m("Y[1,4] Y[1,6]"), m("Y[1,4] Y[1,8]^-1"), m("Y[1,6]^-1 Y[1,8]^-1"),]
            )
        );
        let s = QString::new(1, 5, 1, 2).unwrap();
        assert_eq!(eval_char(&s), QCharacter::from_monomials([m("Y[1,5]"), m("Y[1,9]^-1")]));
    }

    #[test]
    fn character_examples() {
        assert_eq!(
            sl2_char(&m("Y[1,0]"), 1).unwrap(),
            QCharacter::from_monomials([m("Y[1,0]"), m("Y[1,2]^-1")])
        );
        let c = sl2_char(&m("Y[1,0] Y[1,4]"), 1).unwrap();
        assert_eq!((c.len(), c.is_thin()), (4, true));
        let c = sl2_char(&m("Y[1,0]^2"), 1).unwrap();
        assert_eq!(c.multiplicity(&m("Y[1,0] Y[1,2]^-1")), 2);
    }

    proptest::proptest! {
        #[test]
        fn merge_order_does_not_matter(levels in proptest::collection::vec(0i32..12, 1..7), seed in 0usize..1000) {
            let m = Monomial::from_exponents(levels.iter().map(|&k| (crate::SpectralPoint::new(1, k), 1)));
            let expected = qstring_decompose(&m, 1).unwrap();
            let mut strings: Vec<QString> =
                levels.iter().map(|&k| QString::from_ends(1, k, k, 1)).collect();
            let mut turn = seed;
            merge_until_stable(&mut strings, |v| {
                let bad: Vec<(usize, usize)> = (0..v.len())
                    .flat_map(|a| (a + 1..v.len()).map(move |b| (a, b)))
                    .filter(|&(a, b)| !v[a].in_general_position(&v[b]))
                    .collect();
                turn = turn.wrapping_mul(31).wrapping_add(7);
                (!bad.is_empty()).then(|| bad[turn % bad.len()])
            });
            strings.sort_by_key(|s| (s.lo(), s.hi()));
            proptest::prop_assert_eq!(strings, expected);
        }
    }

    #[test]
    fn thin_and_lowerable_examples() {
        assert!(is_thin_sl2(&m("Y[1,0] Y[1,4]"), 1).unwrap());
        assert!(!is_thin_sl2(&m("Y[1,0]^2"), 1).unwrap());
        assert!(is_thin_sl2(&m("Y[1,0] Y[1,2]"), 1).unwrap());
        assert!(lowerable_sl2(&m("Y[1,0]"), 0, 1).unwrap());
        assert!(!lowerable_sl2(&m("Y[1,0] Y[1,2]"), 0, 1).unwrap());
        assert!(!lowerable_sl2(&m("Y[1,2]^-1"), 0, 1).unwrap());
        assert!(lowerable_sl2(&m("Y[1,0]^2"), 0, 1).is_err());
    }
}
