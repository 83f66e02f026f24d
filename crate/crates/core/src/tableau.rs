//! Super skew diagrams and tableaux over the alphabet
//! `1 < 2 < … < N < 0 < N̄ < … < 1̄`.
//!
//! Rows grow downwards and columns are numbered from 1; along a diagram the
//! tops and bottoms of the columns weakly decrease.

use std::fmt;

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{Algebra, SpectralPoint};
use crate::monomial::{Monomial, QCharacter};
use crate::path::{Path, PathModel};
use crate::snake::SnakeSeq;

/// A letter of the alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    Plain(u32),
    Zero,
    Bar(u32),
}

impl Letter {
    /// Position in the alphabet of rank `n`, from 1 (letter `1`) to
    /// `2n + 1` (letter `1̄`).
    pub fn position(self, n: u32) -> u32 {
        match self {
            Letter::Plain(i) => i,
            Letter::Zero => n + 1,
            Letter::Bar(i) => 2 * n + 2 - i,
        }
    }

    pub fn from_position(n: u32, pos: u32) -> Letter {
        if pos <= n {
            Letter::Plain(pos)
        } else if pos == n + 1 {
            Letter::Zero
        } else {
            Letter::Bar(2 * n + 2 - pos)
        }
    }

    /// The text token: `"3"`, `"0"` or `"3b"`.
    pub fn token(self) -> String {
        match self {
            Letter::Plain(i) => i.to_string(),
            Letter::Zero => "0".into(),
            Letter::Bar(i) => format!("{i}b"),
        }
    }

    pub fn parse(n: u32, token: &str) -> Result<Letter> {
        let bad = || Error::InvalidTableau(format!("bad letter {token:?}"));
        let (digits, bar) = match token.strip_suffix('b') {
            Some(d) => (d, true),
            None => (token, false),
        };
        let i: u32 = digits.parse().map_err(|_| bad())?;
        match (i, bar) {
            (0, false) => Ok(Letter::Zero),
            (i, false) if i <= n => Ok(Letter::Plain(i)),
            (i, true) if (1..=n).contains(&i) => Ok(Letter::Bar(i)),
            _ => Err(bad()),
        }
    }

    /// The contribution `m(letter, k)` of a box.
    pub fn box_monomial(self, n: u32, k: i32) -> Monomial {
        let ni = n as i32;
        let y = |node: i32, level: i32, e: i32| {
            (node >= 1 && node <= ni).then(|| (SpectralPoint::new(node as u32, level), e))
        };
        let parts = match self {
            Letter::Plain(i) if i < n => {
                let i = i as i32;
                [y(i - 1, 2 * i + k, -1), y(i, 2 * i - 2 + k, 1), None]
            }
            Letter::Plain(_) => {
                [y(ni - 1, 2 * ni + k, -1), y(ni, 2 * ni - 3 + k, 1), y(ni, 2 * ni - 1 + k, 1)]
            }
            Letter::Zero => [y(ni, 2 * ni + 1 + k, -1), y(ni, 2 * ni - 3 + k, 1), None],
            Letter::Bar(i) if i == n => {
                [y(ni, 2 * ni - 1 + k, -1), y(ni, 2 * ni + 1 + k, -1), y(ni - 1, 2 * ni - 2 + k, 1)]
            }
            Letter::Bar(i) => {
                let i = i as i32;
                [y(i, 4 * ni - 2 * i + k, -1), y(i - 1, 4 * ni - 2 - 2 * i + k, 1), None]
            }
        };
        Monomial::from_exponents(parts.into_iter().flatten())
    }

    /// The variable `bt(letter, k)` used for dominant monomials.
    pub fn bottom_variable(self, n: u32, k: i32) -> Monomial {
        let ni = n as i32;
        match self {
            Letter::Plain(i) if i < n => Monomial::y(i, 2 * i as i32 - 2 + k),
            Letter::Plain(_) | Letter::Zero => Monomial::y(n, 2 * ni - 3 + k),
            Letter::Bar(1) => Monomial::one(),
            Letter::Bar(i) => Monomial::y(i - 1, 4 * ni - 2 - 2 * i as i32 + k),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.token())
    }
}

/// A super skew diagram, given by the top and bottom rows of its columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewDiagram {
    rank: u32,
    columns: Vec<(i32, i32)>,
}

#[derive(Serialize, Deserialize)]
struct ColumnRepr {
    j: u32,
    top: i32,
    bottom: i32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    letters: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct DiagramRepr {
    #[serde(rename = "N")]
    n: u32,
    columns: Vec<ColumnRepr>,
}

impl SkewDiagram {
    /// Checks the staircase and super conditions.
    pub fn new(rank: u32, columns: Vec<(i32, i32)>) -> Result<Self> {
        Algebra::b(rank)?;
        let bad = |msg: String| Err(Error::InvalidDiagram(msg));
        for (j, &(t, b)) in columns.iter().enumerate() {
            if t > b {
                return bad(format!("column {} has top {t} below bottom {b}", j + 1));
            }
        }
        for (j, w) in columns.windows(2).enumerate() {
            let ((t0, b0), (t1, b1)) = (w[0], w[1]);
            if t1 > t0 || b1 > b0 {
                return bad(format!("staircase: column {} is not weakly above column {}", j + 2, j + 1));
            }
            let overlap = (b1 - t0 + 1).max(0);
            if overlap > 2 * rank as i32 {
                return bad(format!("super: columns {} and {} share {overlap} rows", j + 1, j + 2));
            }
        }
        Ok(SkewDiagram { rank, columns })
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn num_columns(&self) -> usize {
        self.columns.len()
    }

    /// `(t_j, b_j)` for `j ≥ 1`.
    pub fn column(&self, j: usize) -> (i32, i32) {
        self.columns[j - 1]
    }

    pub fn columns(&self) -> &[(i32, i32)] {
        &self.columns
    }

    pub fn length(&self, j: usize) -> usize {
        let (t, b) = self.column(j);
        (b - t + 1) as usize
    }

    pub fn num_boxes(&self) -> usize {
        (1..=self.columns.len()).map(|j| self.length(j)).sum()
    }

    pub fn contains(&self, row: i32, j: usize) -> bool {
        j >= 1 && j <= self.columns.len() && {
            let (t, b) = self.column(j);
            t <= row && row <= b
        }
    }

    /// Rows shared by columns `j` and `j + 1`.
    pub fn overlap(&self, j: usize) -> usize {
        if j == 0 || j >= self.columns.len() {
            return 0;
        }
        (self.column(j + 1).1 - self.column(j).0 + 1).max(0) as usize
    }

    /// Columns `j` sharing `2N` rows with column `j + 1`.
    pub fn nongeneric_columns(&self) -> Vec<usize> {
        (1..self.columns.len()).filter(|&j| self.overlap(j) == 2 * self.rank as usize).collect()
    }

    pub fn is_generic(&self) -> bool {
        self.nongeneric_columns().is_empty()
    }

    /// Columns with `l_j ≥ N` whose row `s_j + 1` is absent from column `j + 1`.
    pub fn special_columns(&self) -> Vec<usize> {
        let n = self.rank as usize;
        (1..=self.columns.len())
            .filter(|&j| {
                let s = self.column(j).0 + n as i32 - 1;
                self.length(j) >= n && !self.contains(s + 1, j + 1)
            })
            .collect()
    }

    /// `ς_j = j + #{k ∈ 𝒮 : k < j}`.
    pub fn varsigma(&self, j: usize) -> usize {
        j + self.special_columns().iter().filter(|&&k| k < j).count()
    }

    /// The tableau filled column by column with plain letters, as many
    /// zeros as the previous column allows, and barred letters.
    pub fn dominant_tableau(&self) -> Result<Tableau> {
        let n = self.rank;
        let mut cols: Vec<Vec<Letter>> = Vec::with_capacity(self.columns.len());
        for j in 1..=self.columns.len() {
            let (t, b) = self.column(j);
            let left = |row: i32| -> Option<Letter> {
                (j > 1 && self.contains(row, j - 1))
                    .then(|| cols[j - 2][(row - self.column(j - 1).0) as usize])
            };
            let fits = |row: i32, x: Letter| match left(row) {
                None => true,
                Some(l) => l.position(n) <= x.position(n) && !(l == Letter::Zero && x == Letter::Zero),
            };
            let mut col = Vec::new();
            let mut row = t;
            let mut next = 1;
            while row <= b && next <= n && fits(row, Letter::Plain(next)) {
                col.push(Letter::Plain(next));
                next += 1;
                row += 1;
            }
            while row <= b && fits(row, Letter::Zero) {
                col.push(Letter::Zero);
                row += 1;
            }
            let mut bar = n;
            while row <= b && bar >= 1 && fits(row, Letter::Bar(bar)) {
                col.push(Letter::Bar(bar));
                bar -= 1;
                row += 1;
            }
            if row <= b {
                return Err(Error::InvalidDiagram(format!("column {j} cannot be filled")));
            }
            cols.push(col);
        }
        Tableau::new(self.clone(), cols)
    }

    /// `m_+(d)`, read off the bottom letters of the dominant tableau and the
    /// special columns.
    pub fn dominant_monomial(&self) -> Result<Monomial> {
        let n = self.rank;
        let tp = self.dominant_tableau()?;
        let mut m = Monomial::one();
        for j in 1..=self.columns.len() {
            let b = self.column(j).1;
            m *= &tp.letter(b, j).bottom_variable(n, 4 * (j as i32 - b));
        }
        for j in self.special_columns() {
            let s = self.column(j).0 + n as i32 - 1;
            m *= &Letter::Plain(n).bottom_variable(n, 4 * (j as i32 - s) + 2);
        }
        Ok(m)
    }

    /// `𝒳(m_+(d))`.
    pub fn snake(&self) -> Result<SnakeSeq> {
        SnakeSeq::from_monomial(Algebra::b(self.rank)?, &self.dominant_monomial()?)
    }

    /// Every column filling obeying the vertical rule, with its monomial,
    /// and for each column after the first the fillings compatible with
    /// each filling of the previous column.
    fn column_states(&self) -> Vec<ColumnStates> {
        let n = self.rank;
        let mut out: Vec<ColumnStates> = Vec::with_capacity(self.columns.len());
        for j in 1..=self.columns.len() {
            let (t, _) = self.column(j);
            let len = self.length(j);
            let mut fillings = Vec::new();
            for plain in 0u32..1 << n {
                for barred in 0u32..1 << n {
                    let used = (plain.count_ones() + barred.count_ones()) as usize;
                    if used > len {
                        continue;
                    }
                    let mut col: Vec<Letter> =
                        (1..=n).filter(|i| plain >> (i - 1) & 1 == 1).map(Letter::Plain).collect();
                    col.resize(len - barred.count_ones() as usize, Letter::Zero);
                    col.extend((1..=n).rev().filter(|i| barred >> (i - 1) & 1 == 1).map(Letter::Bar));
                    fillings.push(col);
                }
            }
            fillings.sort_by_key(|c| c.iter().map(|l| l.position(n)).collect::<Vec<_>>());
            let monos = fillings
                .iter()
                .map(|col| {
                    let pairs: Vec<_> = col
                        .iter()
                        .enumerate()
                        .flat_map(|(off, l)| {
                            l.box_monomial(n, 4 * (j as i32 - t - off as i32)).iter().collect::<Vec<_>>()
                        })
                        .collect();
                    Monomial::from_exponents(pairs)
                })
                .collect();
            let next = if j == 1 {
                Vec::new()
            } else {
                let (pt, _) = self.column(j - 1);
                out[j - 2]
                    .fillings
                    .iter()
                    .map(|left| {
                        (0..fillings.len())
                            .filter(|&ix| {
                                fillings[ix].iter().enumerate().all(|(off, &y)| {
                                    let row = t + off as i32;
                                    !self.contains(row, j - 1) || {
                                        let x = left[(row - pt) as usize];
                                        x.position(n) <= y.position(n)
                                            && !(x == Letter::Zero && y == Letter::Zero)
                                    }
                                })
                            })
                            .collect()
                    })
                    .collect()
            };
            out.push(ColumnStates { fillings, monos, compatible: next });
        }
        out
    }

    /// `#Tab(d)`, by transfer along the columns.
    pub fn count_tableaux(&self) -> u128 {
        let states = self.column_states();
        let Some(first) = states.first() else { return 1 };
        let mut counts = vec![1u128; first.fillings.len()];
        for st in &states[1..] {
            let mut next = vec![0u128; st.fillings.len()];
            for (left, &c) in counts.iter().enumerate() {
                for &ix in &st.compatible[left] {
                    next[ix] += c;
                }
            }
            counts = next;
        }
        counts.iter().sum()
    }

    fn for_each_choice(&self, mut visit: impl FnMut(&[ColumnStates], &[usize], &Monomial)) {
        let states = self.column_states();
        let cols = states.len();
        if cols == 0 {
            visit(&states, &[], &Monomial::one());
            return;
        }
        let mut choice = vec![0usize; cols];
        let mut products = vec![Monomial::one(); cols + 1];
        let mut cursor = vec![0usize; cols];
        let mut depth = 0;
        loop {
            let options = if depth == 0 { None } else { Some(&states[depth].compatible[choice[depth - 1]]) };
            let avail = options.map_or(states[0].fillings.len(), |o| o.len());
            if cursor[depth] == avail {
                if depth == 0 {
                    return;
                }
                depth -= 1;
                continue;
            }
            let ix = options.map_or(cursor[depth], |o| o[cursor[depth]]);
            cursor[depth] += 1;
            choice[depth] = ix;
            products[depth + 1] = &products[depth] * &states[depth].monos[ix];
            if depth + 1 == cols {
                visit(&states, &choice, &products[cols]);
            } else {
                depth += 1;
                cursor[depth] = 0;
            }
        }
    }

    /// Visits every tableau of this shape, column by column.
    pub fn for_each_tableau(&self, mut visit: impl FnMut(&Tableau)) {
        self.for_each_choice(|states, choice, _| {
            let cols = choice.iter().zip(states).map(|(&ix, st)| st.fillings[ix].clone()).collect();
            visit(&Tableau { shape: self.clone(), cols });
        });
    }

    pub fn tableaux(&self) -> Vec<Tableau> {
        let mut out = Vec::new();
        self.for_each_tableau(|t| out.push(t.clone()));
        out
    }

    /// `Σ M(𝒯)` over all tableaux.
    pub fn tableau_character(&self) -> QCharacter {
        let mut acc: FxHashMap<Monomial, u64> = FxHashMap::default();
        self.for_each_choice(|_, _, m| *acc.entry(m.clone()).or_insert(0) += 1);
        acc.into_iter().collect()
    }

    /// One reduction step at the largest non-generic column.
    pub fn closely_related(&self) -> Result<SkewDiagram> {
        let jp = *self.nongeneric_columns().last().ok_or(Error::AlreadyGeneric)?;
        let n = self.rank as i32;
        let mut cols = self.columns[..jp - 1].to_vec();
        let (t, b) = self.column(jp);
        let grow = self.length(jp + 1) as i32 - 2 * n + 1;
        cols.push((t - grow, b));
        cols.extend(self.columns[jp + 1..].iter().map(|&(t, b)| (t - 1, b - 1)));
        SkewDiagram::new(self.rank, cols)
    }

    /// The generic diagram reached by repeated reduction.
    pub fn related_generic(&self) -> Result<SkewDiagram> {
        let mut d = self.clone();
        while !d.is_generic() {
            d = d.closely_related()?;
        }
        Ok(d)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.repr(None)).expect("plain data serializes")
    }

    fn repr(&self, letters: Option<&[Vec<Letter>]>) -> DiagramRepr {
        DiagramRepr {
            n: self.rank,
            columns: self
                .columns
                .iter()
                .enumerate()
                .map(|(ix, &(top, bottom))| ColumnRepr {
                    j: ix as u32 + 1,
                    top,
                    bottom,
                    letters: letters.map(|ls| ls[ix].iter().map(|l| l.token()).collect()),
                })
                .collect(),
        }
    }

    fn from_repr(repr: &DiagramRepr) -> Result<SkewDiagram> {
        let mut cols: Vec<&ColumnRepr> = repr.columns.iter().collect();
        cols.sort_by_key(|c| c.j);
        for (ix, c) in cols.iter().enumerate() {
            if c.j as usize != ix + 1 {
                return Err(Error::InvalidDiagram(format!(
                    "columns must be numbered 1..{} without gaps",
                    cols.len()
                )));
            }
        }
        SkewDiagram::new(repr.n, cols.iter().map(|c| (c.top, c.bottom)).collect())
    }

    pub fn from_json(text: &str) -> Result<SkewDiagram> {
        SkewDiagram::from_repr(&serde_json::from_str(text)?)
    }
}

struct ColumnStates {
    fillings: Vec<Vec<Letter>>,
    monos: Vec<Monomial>,
    compatible: Vec<Vec<usize>>,
}

/// A filling of a diagram obeying the horizontal and vertical rules.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: SkewDiagram,
    cols: Vec<Vec<Letter>>,
}

impl Tableau {
    /// Checks both rules; `cols[j-1]` lists column `j` from the top.
    pub fn new(shape: SkewDiagram, cols: Vec<Vec<Letter>>) -> Result<Self> {
        let n = shape.rank;
        let bad = |msg: String| Err(Error::InvalidTableau(msg));
        if cols.len() != shape.num_columns() {
            return bad("column count differs from the shape".into());
        }
        for (ix, col) in cols.iter().enumerate() {
            if col.len() != shape.length(ix + 1) {
                return bad(format!("column {} has the wrong length", ix + 1));
            }
            for &l in col {
                let ok = match l {
                    Letter::Plain(i) | Letter::Bar(i) => (1..=n).contains(&i),
                    Letter::Zero => true,
                };
                if !ok {
                    return bad(format!("letter {l} is outside the alphabet"));
                }
            }
        }
        let t = Tableau { shape, cols };
        for j in 1..=t.shape.num_columns() {
            let (top, bottom) = t.shape.column(j);
            for row in top..=bottom {
                let x = t.letter(row, j);
                if row < bottom {
                    let y = t.letter(row + 1, j);
                    let zeros = x == Letter::Zero && y == Letter::Zero;
                    if x.position(n) >= y.position(n) && !zeros {
                        return bad(format!("vertical rule fails at ({row},{j})"));
                    }
                }
                if t.shape.contains(row, j + 1) {
                    let y = t.letter(row, j + 1);
                    if x.position(n) > y.position(n) || (x == Letter::Zero && y == Letter::Zero) {
                        return bad(format!("horizontal rule fails at ({row},{j})"));
                    }
                }
            }
        }
        Ok(t)
    }

    pub fn shape(&self) -> &SkewDiagram {
        &self.shape
    }

    pub fn columns(&self) -> &[Vec<Letter>] {
        &self.cols
    }

    /// The letter in box `(row, j)`; panics outside the shape.
    pub fn letter(&self, row: i32, j: usize) -> Letter {
        let (t, _) = self.shape.column(j);
        self.cols[j - 1][(row - t) as usize]
    }

    /// `M(𝒯) = Π m(𝒯(i,j), 4(j − i))`.
    pub fn monomial(&self) -> Monomial {
        let n = self.shape.rank;
        let mut pairs = Vec::new();
        for (ix, col) in self.cols.iter().enumerate() {
            let (t, _) = self.shape.columns[ix];
            for (off, &l) in col.iter().enumerate() {
                let k = 4 * (ix as i32 + 1 - (t + off as i32));
                pairs.extend(l.box_monomial(n, k).iter());
            }
        }
        Monomial::from_exponents(pairs)
    }

    /// The image under the reduction map onto `closely_related(shape)`.
    pub fn tau(&self) -> Result<Tableau> {
        let d = &self.shape;
        let jp = *d.nongeneric_columns().last().ok_or(Error::AlreadyGeneric)?;
        let new = d.closely_related()?;
        let n = d.rank as i32;
        let (t, b) = new.column(jp);
        let old = |row: i32, j: usize| -> Result<Letter> {
            if d.contains(row, j) {
                Ok(self.letter(row, j))
            } else {
                Err(Error::InvalidTableau(format!("({row},{j}) is outside the shape")))
            }
        };
        let mut cols = Vec::with_capacity(new.num_columns());
        for j in 1..=new.num_columns() {
            let (top, bottom) = new.column(j);
            let mut col = Vec::new();
            for row in top..=bottom {
                col.push(if j < jp || (j == jp && row > b - n) {
                    old(row, j)?
                } else if j > jp || row < t + n {
                    old(row + 1, j + 1)?
                } else {
                    Letter::Zero
                });
            }
            cols.push(col);
        }
        Tableau::new(new, cols)
    }

    /// Grid text: one line per row, tokens per column, `.` outside the shape.
    pub fn grid(&self) -> String {
        let d = &self.shape;
        if d.num_columns() == 0 {
            return String::new();
        }
        let top = d.columns.iter().map(|c| c.0).min().expect("nonempty");
        let bottom = d.columns.iter().map(|c| c.1).max().expect("nonempty");
        let mut out = String::new();
        for row in top..=bottom {
            let cells: Vec<String> = (1..=d.num_columns())
                .map(|j| {
                    let tok = if d.contains(row, j) { self.letter(row, j).token() } else { ".".into() };
                    format!("{tok:>2}")
                })
                .collect();
            out.push_str(&format!("{row:>4} |{}\n", cells.join(" ")));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.shape.repr(Some(&self.cols))).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Tableau> {
        let repr: DiagramRepr = serde_json::from_str(text)?;
        let shape = SkewDiagram::from_repr(&repr)?;
        let mut cols: Vec<&ColumnRepr> = repr.columns.iter().collect();
        cols.sort_by_key(|c| c.j);
        let letters = cols
            .iter()
            .map(|c| {
                c.letters
                    .as_ref()
                    .ok_or_else(|| Error::InvalidTableau(format!("column {} has no letters", c.j)))?
                    .iter()
                    .map(|tok| Letter::parse(repr.n, tok))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Tableau::new(shape, letters)
    }
}

/// Valid diagrams with `b_1 = 0`, at most `max_columns` columns and
/// `max_boxes` boxes, where each column meets the previous one at least at a
/// corner (`b_{j+1} ≥ t_j − 1`).
pub fn connected_diagrams(rank: u32, max_columns: usize, max_boxes: usize) -> Vec<SkewDiagram> {
    fn grow(
        rank: u32,
        cols: &mut Vec<(i32, i32)>,
        boxes: usize,
        max_columns: usize,
        max_boxes: usize,
        out: &mut Vec<SkewDiagram>,
    ) {
        if let Ok(d) = SkewDiagram::new(rank, cols.clone()) {
            out.push(d);
        } else {
            return;
        }
        if cols.len() == max_columns {
            return;
        }
        let &(t, b) = cols.last().expect("nonempty");
        for nb in (t - 1..=b).rev() {
            for len in 1..=max_boxes - boxes {
                let nt = nb - len as i32 + 1;
                if nt > t {
                    continue;
                }
                cols.push((nt, nb));
                grow(rank, cols, boxes + len, max_columns, max_boxes, out);
                cols.pop();
            }
        }
    }
    let mut out = Vec::new();
    if max_columns == 0 {
        return out;
    }
    for len in 1..=max_boxes {
        let mut cols = vec![(1 - len as i32, 0)];
        grow(rank, &mut cols, len, max_columns, max_boxes, &mut out);
    }
    out
}

fn generic_snake(d: &SkewDiagram) -> Result<Vec<SpectralPoint>> {
    if !d.is_generic() {
        return Err(Error::NotGeneric);
    }
    Ok(d.snake()?.points().to_vec())
}

/// The tableau `𝒯_p` of a non-overlapping tuple on a generic diagram.
pub fn tuple_to_tableau(model: &PathModel, d: &SkewDiagram, tuple: &[Path]) -> Result<Tableau> {
    let alg = *model.algebra();
    let n = d.rank;
    let seq = generic_snake(d)?;
    let owners: Vec<SpectralPoint> = tuple.iter().map(|p| p.owner).collect();
    if owners != seq {
        return Err(Error::Inconsistent("owners differ from the snake of the diagram".into()));
    }
    let letters: Vec<_> = tuple.iter().map(|p| p.letter_sets(&alg)).collect();
    let mut cols = Vec::with_capacity(d.num_columns());
    for j in 1..=d.num_columns() {
        let len = d.length(j);
        let t = d.varsigma(j) - 1;
        let (head, tail) = if len < n as usize {
            (letters[t].s, letters[t].sbar)
        } else {
            let next = letters
                .get(t + 1)
                .ok_or_else(|| Error::Inconsistent(format!("column {j} needs a path after {}", t + 1)))?;
            (next.r, letters[t].rbar)
        };
        if head.len() + tail.len() > len {
            return Err(Error::Inconsistent(format!("column {j} is overfilled")));
        }
        let mut col: Vec<Letter> = head.iter().map(Letter::Plain).collect();
        col.resize(len - tail.len(), Letter::Zero);
        let mut bars: Vec<u32> = tail.to_vec();
        bars.reverse();
        col.extend(bars.into_iter().map(Letter::Bar));
        cols.push(col);
    }
    Tableau::new(d.clone(), cols)
}

/// The inverse of [`tuple_to_tableau`].
pub fn tableau_to_tuple(model: &PathModel, tab: &Tableau) -> Result<Vec<Path>> {
    let alg = *model.algebra();
    let d = tab.shape();
    let n = d.rank;
    let full = (1u32 << n) - 1;
    let seq = generic_snake(d)?;
    let mut halves: Vec<[Option<u32>; 2]> = vec![[None, None]; seq.len()];
    let mut set = |t: usize, half: usize, v: u32| -> Result<()> {
        let slot = halves.get_mut(t).ok_or_else(|| Error::Inconsistent(format!("no path {}", t + 1)))?;
        match slot[half] {
            Some(old) if old != v => {
                Err(Error::Inconsistent(format!("path {} read twice differently", t + 1)))
            }
            _ => {
                slot[half] = Some(v);
                Ok(())
            }
        }
    };
    let spin = |t: usize| seq.get(t).is_some_and(|p| p.node == n);
    for j in 1..=d.num_columns() {
        let t = d.varsigma(j) - 1;
        let col = &tab.columns()[j - 1];
        let plain = col.iter().fold(0u32, |acc, l| match l {
            Letter::Plain(i) => acc | 1 << (i - 1),
            _ => acc,
        });
        let barred = col.iter().fold(0u32, |acc, l| match l {
            Letter::Bar(i) => acc | 1 << (i - 1),
            _ => acc,
        });
        if d.length(j) < n as usize {
            if spin(t) {
                return Err(Error::Inconsistent(format!("column {j} is short but its path is spin")));
            }
            set(t, 0, !plain & full)?;
            set(t, 1, barred)?;
        } else {
            if spin(t + 1) {
                set(t + 1, 0, !plain & full)?;
            } else {
                set(t + 1, 1, !plain & full)?;
            }
            set(t, 0, barred)?;
        }
    }
    let mut out = Vec::with_capacity(seq.len());
    for (t, &owner) in seq.iter().enumerate() {
        let paths = model.paths(owner)?;
        let [a, abar] = halves[t];
        let abar = if owner.node == n { Some(0) } else { abar };
        let (Some(a), Some(abar)) = (a, abar) else {
            return Err(Error::Inconsistent(format!("path {} is not determined", t + 1)));
        };
        let ix = paths
            .find_by_signs(a, abar)
            .ok_or_else(|| Error::Inconsistent(format!("path {} does not exist", t + 1)))?;
        out.push(paths.paths[ix].clone());
    }
    if !crate::path::non_overlapping(&out, &alg) {
        return Err(Error::Inconsistent("the paths overlap".into()));
    }
    if tuple_to_tableau(model, d, &out)? != *tab {
        return Err(Error::Inconsistent("the tableau is not the image of its paths".into()));
    }
    Ok(out)
}
