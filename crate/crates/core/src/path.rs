//! Paths in the plane, their corners and monomials, and tuples of
//! non-overlapping paths.
//!
//! A path of `𝒫_{N,k}` is determined by the signs of its `N` steps and a
//! path of `𝒫_{i,k}`, `i < N`, by the signs of its two halves. Signs are
//! stored as bit masks: bit `r − 1` is set when step `r` ascends, that is
//! when `y_r > y_{r−1}`.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::{Arc, Mutex};

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{Algebra, Offset, PlanePoint, SpectralPoint};
use crate::monomial::{Monomial, QCharacter};

/// A path, listed point by point from its first column.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub owner: SpectralPoint,
    pub points: Vec<PlanePoint>,
}

/// A subset of `{1, …, N}` stored as a bit mask (bit `r − 1` for `r`).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct LetterSet(pub u32);

impl LetterSet {
    pub fn from_letters<I: IntoIterator<Item = u32>>(it: I) -> Self {
        LetterSet(it.into_iter().fold(0, |acc, r| acc | 1 << (r - 1)))
    }

    pub fn contains(&self, r: u32) -> bool {
        r >= 1 && self.0 >> (r - 1) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        (1..=32).filter(move |&r| self.contains(r))
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.iter().collect()
    }
}

/// The letter sets `R_p`, `R̄_p`, `S_p`, `S̄_p`; the barred sets hold the
/// unbarred indices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct LetterSets {
    pub r: LetterSet,
    pub rbar: LetterSet,
    pub s: LetterSet,
    pub sbar: LetterSet,
}

/// `^{[k]}B`: drops the `k` smallest elements of an ordered set.
pub fn drop_head<T: Clone>(b: &[T], k: usize) -> Vec<T> {
    b.iter().skip(k).cloned().collect()
}

/// `B^{[k]}`: drops the `k` largest elements of an ordered set.
pub fn drop_tail<T: Clone>(b: &[T], k: usize) -> Vec<T> {
    b[..b.len().saturating_sub(k)].to_vec()
}

fn spin_points(alg: &Algebra, level: i32, signs: u32) -> Vec<PlanePoint> {
    let n = alg.rank() as i32;
    let from_left = level.rem_euclid(4) == 3;
    let column = |r: i32| if from_left { 2 * r } else { 4 * n - 2 - 2 * r };
    let mut y = level + 2 * n - 1;
    let mut points = vec![PlanePoint::at(column(0), y)];
    for r in 1..n {
        y += if signs >> (r - 1) & 1 == 1 { 2 } else { -2 };
        points.push(PlanePoint::at(column(r), y));
    }
    let last = if signs >> (n - 1) & 1 == 1 { Offset::new(y + 1, 1) } else { Offset::new(y - 1, -1) };
    points.push(PlanePoint::new(alg.spin_column(), last));
    points
}

/// Half-path levels `k ∓ (2N − 2i − 1)` of an owner with `i < N`.
fn half_levels(alg: &Algebra, owner: SpectralPoint) -> (i32, i32) {
    let d = 2 * alg.rank() as i32 - 2 * owner.node as i32 - 1;
    (owner.level - d, owner.level + d)
}

impl Path {
    /// Builds the path with the given step signs, if it exists.
    pub fn from_signs(alg: &Algebra, owner: SpectralPoint, a: u32, abar: u32) -> Option<Path> {
        let n = alg.rank();
        if owner.node == n {
            return Some(Path { owner, points: spin_points(alg, owner.level, a) });
        }
        let (lo, hi) = half_levels(alg, owner);
        let first = spin_points(alg, lo, a);
        let mut second = spin_points(alg, hi, abar);
        if first[n as usize].y <= second[n as usize].y {
            return None;
        }
        second.reverse();
        let mut points = first;
        points.extend(second);
        Some(Path { owner, points })
    }

    fn half_signs(points: &[PlanePoint]) -> u32 {
        points.windows(2).enumerate().filter(|(_, w)| w[1].y > w[0].y).fold(0, |acc, (r, _)| acc | 1 << r)
    }

    /// Step signs of the two halves; the second is 0 for spin owners.
    pub fn signs(&self, alg: &Algebra) -> (u32, u32) {
        let n = alg.rank() as usize;
        if self.points.len() == n + 1 {
            return (Path::half_signs(&self.points), 0);
        }
        let a = Path::half_signs(&self.points[..=n]);
        let mut abar: Vec<_> = self.points[n + 1..].to_vec();
        abar.reverse();
        (a, Path::half_signs(&abar))
    }

    /// Upper and lower corners.
    pub fn corners(&self, alg: &Algebra) -> Result<(BTreeSet<SpectralPoint>, BTreeSet<SpectralPoint>)> {
        let (mut upper, mut lower) = (BTreeSet::new(), BTreeSet::new());
        let spin = alg.spin_column();
        let edge = [0, spin, alg.last_column()];
        let pts = &self.points;
        for w in pts.windows(3) {
            let (prev, q, next) = (w[0], w[1], w[2]);
            if edge.contains(&q.x) {
                continue;
            }
            if q.y < prev.y && q.y < next.y {
                upper.insert(self.corner_point(alg, q)?);
            } else if q.y > prev.y && q.y > next.y {
                lower.insert(self.corner_point(alg, q)?);
            }
        }
        let on_spin: Vec<Offset> = pts.iter().filter(|q| q.x == spin).map(|q| q.y).collect();
        let n = alg.rank();
        for y in &on_spin {
            let twin = Offset::new(y.int, -y.eps);
            if y.eps == -1 && !on_spin.contains(&twin) {
                upper.insert(SpectralPoint::new(n, y.int));
            } else if y.eps == 1 && !on_spin.contains(&twin) {
                lower.insert(SpectralPoint::new(n, y.int));
            }
        }
        Ok((upper, lower))
    }

    fn corner_point(&self, alg: &Algebra, q: PlanePoint) -> Result<SpectralPoint> {
        alg.iota_inverse(q)
            .map_err(|_| Error::InvalidPath(format!("corner {q} of {self} is not in the image of ι")))
    }

    /// `m(p)`: upper corners over lower corners.
    pub fn monomial(&self, alg: &Algebra) -> Result<Monomial> {
        let (upper, lower) = self.corners(alg)?;
        Ok(Monomial::from_exponents(
            upper.into_iter().map(|p| (p, 1)).chain(lower.into_iter().map(|p| (p, -1))),
        ))
    }

    pub fn letter_sets(&self, alg: &Algebra) -> LetterSets {
        letters_from_signs(alg, self.owner, self.signs(alg))
    }

    /// Whether `self` lies strictly above `other` in every shared column.
    pub fn strictly_above(&self, other: &Path, alg: &Algebra) -> bool {
        Profile::of(self, alg).above(&Profile::of(other, alg))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&PathRepr::from(self)).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Path> {
        let repr: PathRepr = serde_json::from_str(text)?;
        Ok(repr.into())
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.owner)?;
        for q in &self.points {
            write!(f, " {q}")?;
        }
        Ok(())
    }
}

/// Path JSON: `{"owner":[i,k],"points":[[x,yInt,eps],...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PathRepr {
    pub owner: [i64; 2],
    pub points: Vec<[i64; 3]>,
}

impl From<&Path> for PathRepr {
    fn from(p: &Path) -> Self {
        PathRepr {
            owner: [p.owner.node as i64, p.owner.level as i64],
            points: p.points.iter().map(|q| [q.x as i64, q.y.int as i64, q.y.eps as i64]).collect(),
        }
    }
}

impl From<PathRepr> for Path {
    fn from(r: PathRepr) -> Self {
        Path {
            owner: SpectralPoint::new(r.owner[0] as u32, r.owner[1] as i32),
            points: r
                .points
                .iter()
                .map(|q| PlanePoint::new(q[0] as i32, Offset::new(q[1] as i32, q[2] as i8)))
                .collect(),
        }
    }
}

pub(crate) fn letters_from_signs(alg: &Algebra, owner: SpectralPoint, (a, abar): (u32, u32)) -> LetterSets {
    let full = (1u32 << alg.rank()) - 1;
    if owner.node == alg.rank() {
        LetterSets { r: LetterSet(!a & full), rbar: LetterSet(a), ..LetterSets::default() }
    } else {
        LetterSets {
            r: LetterSet(!abar & full),
            rbar: LetterSet(a),
            s: LetterSet(!a & full),
            sbar: LetterSet(abar),
        }
    }
}

/// Per-column extent of a path, as order keys.
#[derive(Clone, Debug)]
pub(crate) struct Profile(Vec<Option<(i32, i32)>>);

impl Profile {
    fn of(p: &Path, alg: &Algebra) -> Profile {
        let mut cols = vec![None; alg.last_column() as usize + 1];
        for q in &p.points {
            let key = q.y.key();
            let slot: &mut Option<(i32, i32)> = &mut cols[q.x as usize];
            *slot = Some(match *slot {
                None => (key, key),
                Some((lo, hi)) => (lo.min(key), hi.max(key)),
            });
        }
        Profile(cols)
    }

    fn above(&self, other: &Profile) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| match (a, b) {
            (Some((_, hi)), Some((lo, _))) => hi < lo,
            _ => true,
        })
    }
}

/// Whether every earlier path lies strictly above every later one.
pub fn non_overlapping(paths: &[Path], alg: &Algebra) -> bool {
    let profiles: Vec<_> = paths.iter().map(|p| Profile::of(p, alg)).collect();
    (0..profiles.len()).all(|s| (s + 1..profiles.len()).all(|t| profiles[s].above(&profiles[t])))
}

/// The complete set `𝒫_{i,k}` with derived data.
#[derive(Debug)]
pub struct PathSet {
    pub owner: SpectralPoint,
    pub paths: Vec<Path>,
    pub monomials: Vec<Monomial>,
    pub signs: Vec<(u32, u32)>,
    pub(crate) profiles: Vec<Profile>,
    index: FxHashMap<Monomial, usize>,
    by_signs: FxHashMap<(u32, u32), usize>,
    highest: usize,
    lowest: usize,
}

impl PathSet {
    fn build(alg: &Algebra, owner: SpectralPoint) -> Result<PathSet> {
        if !alg.in_x(owner)? {
            return Err(Error::NotInX(owner));
        }
        let n = alg.rank();
        let masks = 1u32 << n;
        let pairs: Vec<(u32, u32)> = if owner.node == n {
            (0..masks).map(|a| (a, 0)).collect()
        } else {
            (0..masks).flat_map(|a| (0..masks).map(move |b| (a, b))).collect()
        };
        let mut set = PathSet {
            owner,
            paths: Vec::new(),
            monomials: Vec::new(),
            signs: Vec::new(),
            profiles: Vec::new(),
            index: FxHashMap::default(),
            by_signs: FxHashMap::default(),
            highest: usize::MAX,
            lowest: usize::MAX,
        };
        for (a, b) in pairs {
            let Some(path) = Path::from_signs(alg, owner, a, b) else { continue };
            let m = path.monomial(alg)?;
            let ix = set.paths.len();
            if m.is_dominant() {
                set.highest = ix;
            }
            if m.is_antidominant() {
                set.lowest = ix;
            }
            if set.index.insert(m.clone(), ix).is_some() {
                return Err(Error::InvalidPath(format!("two paths of {owner} share the monomial {m}")));
            }
            set.by_signs.insert((a, b), ix);
            set.profiles.push(Profile::of(&path, alg));
            set.monomials.push(m);
            set.signs.push((a, b));
            set.paths.push(path);
        }
        if set.highest == usize::MAX || set.lowest == usize::MAX {
            return Err(Error::InvalidPath(format!("{owner} lacks a highest or lowest path")));
        }
        Ok(set)
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn highest(&self) -> usize {
        self.highest
    }

    pub fn lowest(&self) -> usize {
        self.lowest
    }

    /// The path with monomial `m`.
    pub fn find(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn find_by_signs(&self, a: u32, abar: u32) -> Option<usize> {
        self.by_signs.get(&(a, abar)).copied()
    }
}

/// Path sets for one algebra of type B, built on demand and shared.
#[derive(Debug)]
pub struct PathModel {
    alg: Algebra,
    cache: Mutex<FxHashMap<SpectralPoint, Arc<PathSet>>>,
}

impl PathModel {
    pub fn new(alg: Algebra) -> Result<Self> {
        if alg.is_sl2() {
            return Err(Error::InvalidRank(1));
        }
        Ok(PathModel { alg, cache: Mutex::new(FxHashMap::default()) })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    /// `𝒫_{i,k}`.
    pub fn paths(&self, owner: SpectralPoint) -> Result<Arc<PathSet>> {
        if let Some(set) = self.cache.lock().expect("cache lock").get(&owner) {
            return Ok(set.clone());
        }
        let set = Arc::new(PathSet::build(&self.alg, owner)?);
        self.cache.lock().expect("cache lock").insert(owner, set.clone());
        Ok(set)
    }

    pub fn highest_path(&self, owner: SpectralPoint) -> Result<Path> {
        let set = self.paths(owner)?;
        Ok(set.paths[set.highest].clone())
    }

    pub fn lowest_path(&self, owner: SpectralPoint) -> Result<Path> {
        let set = self.paths(owner)?;
        Ok(set.paths[set.lowest].clone())
    }

    /// Whether `p` can be lowered at `at ∈ 𝒲`.
    pub fn can_lower(&self, p: &Path, at: SpectralPoint) -> Result<bool> {
        if !self.alg.in_w(at)? {
            return Ok(false);
        }
        let (upper, _) = p.corners(&self.alg)?;
        let r = self.alg.r(at.node);
        Ok(upper.contains(&at.shift(-r)) && !upper.contains(&at.shift(r)))
    }

    /// The path with monomial `m(p) A_{at}^{-1}`.
    pub fn lower(&self, p: &Path, at: SpectralPoint) -> Result<Path> {
        if !self.can_lower(p, at)? {
            return Err(Error::CannotLower(at));
        }
        self.step(p, at, -1).ok_or(Error::CannotLower(at))
    }

    /// The path with monomial `m(p) A_{at}`, if there is one.
    pub fn raise(&self, p: &Path, at: SpectralPoint) -> Result<Option<Path>> {
        Ok(self.step(p, at, 1))
    }

    fn step(&self, p: &Path, at: SpectralPoint, e: i32) -> Option<Path> {
        let set = self.paths(p.owner).ok()?;
        let a = self.alg.a_var(at.node, at.level).ok()?;
        let target = p.monomial(&self.alg).ok()?.mul_pow(&a, e);
        set.find(&target).map(|ix| set.paths[ix].clone())
    }

    /// Visits every non-overlapping tuple for the owners `seq`, passing
    /// the indices into each path set and the product of the monomials.
    pub fn for_each_tuple(
        &self,
        seq: &[SpectralPoint],
        mut visit: impl FnMut(&[usize], &Monomial),
    ) -> Result<()> {
        let sets: Vec<Arc<PathSet>> = seq.iter().map(|&o| self.paths(o)).collect::<Result<_>>()?;
        let t_len = sets.len();
        if t_len == 0 {
            visit(&[], &Monomial::one());
            return Ok(());
        }
        let words = |t: usize| sets[t].len().div_ceil(64);
        // compat[s][t][a]: paths of set t lying strictly below path a of set s.
        let mut compat: Vec<Vec<Vec<Vec<u64>>>> = vec![vec![Vec::new(); t_len]; t_len];
        for s in 0..t_len {
            for t in s + 1..t_len {
                compat[s][t] = sets[s]
                    .profiles
                    .iter()
                    .map(|ps| {
                        let mut bits = vec![0u64; words(t)];
                        for (b, pt) in sets[t].profiles.iter().enumerate() {
                            if ps.above(pt) {
                                bits[b / 64] |= 1 << (b % 64);
                            }
                        }
                        bits
                    })
                    .collect();
            }
        }
        let mut choice = vec![0usize; t_len];
        let mut products = vec![Monomial::one(); t_len + 1];
        let mut cands: Vec<Vec<u64>> = (0..t_len).map(|t| vec![0; words(t)]).collect();
        let full = |t: usize| {
            let n = sets[t].len();
            let mut v = vec![u64::MAX; n.div_ceil(64)];
            if n % 64 != 0 {
                *v.last_mut().expect("nonempty") = (1u64 << (n % 64)) - 1;
            }
            v
        };
        cands[0] = full(0);
        let mut depth = 0usize;
        let mut cursor = vec![0usize; t_len];
        loop {
            // Next candidate at this depth.
            let next = next_bit(&cands[depth], cursor[depth]);
            match next {
                None => {
                    if depth == 0 {
                        return Ok(());
                    }
                    depth -= 1;
                }
                Some(b) => {
                    cursor[depth] = b + 1;
                    choice[depth] = b;
                    products[depth + 1] = products[depth].mul_pow(&sets[depth].monomials[b], 1);
                    if depth + 1 == t_len {
                        visit(&choice, &products[t_len]);
                    } else {
                        let t = depth + 1;
                        let mut c = full(t);
                        for s in 0..t {
                            for (w, x) in c.iter_mut().zip(&compat[s][t][choice[s]]) {
                                *w &= x;
                            }
                        }
                        cands[t] = c;
                        cursor[t] = 0;
                        depth = t;
                    }
                }
            }
        }
    }

    /// All non-overlapping tuples, as paths.
    pub fn tuples(&self, seq: &[SpectralPoint]) -> Result<Vec<Vec<Path>>> {
        let sets: Vec<Arc<PathSet>> = seq.iter().map(|&o| self.paths(o)).collect::<Result<_>>()?;
        let mut out = Vec::new();
        self.for_each_tuple(seq, |ix, _| {
            out.push(ix.iter().zip(&sets).map(|(&i, s)| s.paths[i].clone()).collect());
        })?;
        Ok(out)
    }

    /// `Σ Π m(p_t)` over non-overlapping tuples.
    pub fn tuple_character(&self, seq: &[SpectralPoint]) -> Result<QCharacter> {
        let mut acc: FxHashMap<Monomial, u64> = FxHashMap::default();
        self.for_each_tuple(seq, |_, m| *acc.entry(m.clone()).or_insert(0) += 1)?;
        Ok(acc.into_iter().collect())
    }
}

fn next_bit(bits: &[u64], from: usize) -> Option<usize> {
    let mut w = from / 64;
    if w >= bits.len() {
        return None;
    }
    let mut word = bits[w] & (u64::MAX << (from % 64));
    loop {
        if word != 0 {
            return Some(w * 64 + word.trailing_zeros() as usize);
        }
        w += 1;
        if w >= bits.len() {
            return None;
        }
        word = bits[w];
    }
}
