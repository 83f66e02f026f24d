use std::collections::{BTreeMap, HashSet};

use snakepath::snake::seq_qchar;
use snakepath::tableau::{connected_diagrams, tableau_to_tuple, tuple_to_tableau};
use snakepath::{Algebra, Letter, Monomial, PathModel, QCharacter, SkewDiagram, Tableau};

/// Letter positions in `1 < … < N < 0 < N̄ < … < 1̄`.
fn letters(n: u32) -> Vec<Letter> {
    (1..=n).map(Letter::Plain).chain([Letter::Zero]).chain((1..=n).rev().map(Letter::Bar)).collect()
}

/// The two filling rules, checked box by box on a grid keyed by `(row, j)`.
fn obeys_rules(n: u32, d: &SkewDiagram, grid: &BTreeMap<(i32, usize), Letter>) -> bool {
    let rank = |l: Letter| letters(n).iter().position(|&x| x == l).unwrap();
    grid.iter().all(|(&(row, j), &x)| {
        let below =
            grid.get(&(row + 1, j)).is_none_or(|&y| rank(x) < rank(y) || (x == Letter::Zero && y == x));
        let right =
            grid.get(&(row, j + 1)).is_none_or(|&y| rank(x) <= rank(y) && !(x == Letter::Zero && y == x));
        below && right && d.contains(row, j)
    })
}

/// All fillings of `d`, by trying every letter in every box.
fn brute_tableaux(d: &SkewDiagram) -> Vec<BTreeMap<(i32, usize), Letter>> {
    let n = d.rank();
    let boxes: Vec<(i32, usize)> = (1..=d.num_columns())
        .flat_map(|j| {
            let (t, b) = d.column(j);
            (t..=b).map(move |row| (row, j))
        })
        .collect();
    let alphabet = letters(n);
    let mut out = Vec::new();
    let mut digits = vec![0usize; boxes.len()];
    loop {
        let grid: BTreeMap<_, _> = boxes.iter().zip(&digits).map(|(&b, &ix)| (b, alphabet[ix])).collect();
        if obeys_rules(n, d, &grid) {
            out.push(grid);
        }
        let Some(pos) = digits.iter().rposition(|&x| x + 1 < alphabet.len()) else { break };
        digits[pos] += 1;
        digits[pos + 1..].iter_mut().for_each(|x| *x = 0);
    }
    out
}

fn box_product(n: u32, grid: &BTreeMap<(i32, usize), Letter>) -> Monomial {
    grid.iter().fold(Monomial::one(), |acc, (&(row, j), l)| &acc * &l.box_monomial(n, 4 * (j as i32 - row)))
}

#[test]
fn enumeration_matches_brute_force() {
    for (n, boxes) in [(2u32, 6usize), (3, 5)] {
        for d in connected_diagrams(n, 3, boxes) {
            let brute = brute_tableaux(&d);
            let fast = d.tableaux();
            assert_eq!(fast.len(), brute.len(), "{d:?}");
            assert_eq!(d.count_tableaux(), brute.len() as u128);
            let expected: QCharacter = brute.iter().map(|g| (box_product(n, g), 1)).collect();
            assert_eq!(d.tableau_character(), expected, "{d:?}");
            let rebuilt: HashSet<Tableau> = brute
                .iter()
                .map(|g| {
                    let cols = (1..=d.num_columns())
                        .map(|j| {
                            let (t, b) = d.column(j);
                            (t..=b).map(|row| g[&(row, j)]).collect()
                        })
                        .collect();
                    Tableau::new(d.clone(), cols).unwrap()
                })
                .collect();
            assert_eq!(rebuilt, fast.into_iter().collect());
        }
    }
}

#[test]
fn vector_representation_column() {
    for n in 2..=4u32 {
        let model = PathModel::new(Algebra::b(n).unwrap()).unwrap();
        let d = SkewDiagram::new(n, vec![(1, 1)]).unwrap();
        let expected: QCharacter = letters(n).into_iter().map(|l| (l.box_monomial(n, 0), 1)).collect();
        assert_eq!(d.tableau_character(), expected);
        let paths = model.paths(snakepath::SpectralPoint::new(1, 0)).unwrap();
        let from_paths: QCharacter = paths.monomials.iter().map(|m| (m.clone(), 1)).collect();
        assert_eq!(from_paths, expected);
    }
}

/// On generic diagrams the tableaux are in bijection with the
/// non-overlapping tuples of the snake, monomials included.
#[test]
fn tableaux_and_path_tuples_agree() {
    for (n, cols, boxes) in [(2u32, 4usize, 8usize), (3, 3, 7)] {
        let model = PathModel::new(Algebra::b(n).unwrap()).unwrap();
        let mut checked = 0;
        for d in connected_diagrams(n, cols, boxes).into_iter().filter(|d| d.is_generic()) {
            let snake = d.snake().unwrap();
            assert!(snake.is_extended_snake(), "{d:?}");
            let tabs: HashSet<Tableau> = d.tableaux().into_iter().collect();
            let mut images = HashSet::new();
            model
                .for_each_tuple(snake.points(), |ix, mono| {
                    let tuple: Vec<_> = ix
                        .iter()
                        .zip(snake.points())
                        .map(|(&i, &p)| model.paths(p).unwrap().paths[i].clone())
                        .collect();
                    let tab = tuple_to_tableau(&model, &d, &tuple).unwrap();
                    assert_eq!(&tab.monomial(), mono);
                    assert_eq!(tableau_to_tuple(&model, &tab).unwrap(), tuple);
                    assert!(images.insert(tab));
                })
                .unwrap();
            assert_eq!(images, tabs, "{d:?}");
            assert_eq!(d.tableau_character(), seq_qchar(&model, &snake).unwrap());
            checked += 1;
        }
        assert!(checked > 100);
    }
}

#[test]
fn dominant_tableau_is_the_only_dominant_one() {
    for n in [2u32, 3] {
        for d in connected_diagrams(n, 3, 8) {
            let tp = d.dominant_tableau().unwrap();
            assert_eq!(tp.monomial(), d.dominant_monomial().unwrap(), "{d:?}");
            let bottoms_1bar = (1..=d.num_columns()).any(|j| tp.letter(d.column(j).1, j) == Letter::Bar(1));
            assert_eq!(bottoms_1bar, !d.is_generic(), "{d:?}");
            if !d.is_generic() {
                continue;
            }
            for t in d.tableaux() {
                assert_eq!(t.monomial().is_dominant(), t == tp, "{d:?}");
            }
        }
    }
}

#[test]
fn reduction_preserves_characters() {
    for n in [2u32, 3] {
        let mut seen = 0;
        for d in connected_diagrams(n, 3, 4 * n as usize + 1).into_iter().filter(|d| !d.is_generic()) {
            let r = d.closely_related().unwrap();
            assert_eq!(r.num_boxes() + 2 * n as usize - 1, d.num_boxes());
            assert_eq!(r.num_columns() + 1, d.num_columns());
            assert_eq!(r.dominant_monomial().unwrap(), d.dominant_monomial().unwrap());
            let images: Vec<Tableau> = d.tableaux().iter().map(|t| t.tau().unwrap()).collect();
            let distinct: HashSet<&Tableau> = images.iter().collect();
            assert_eq!(distinct.len(), images.len());
            let from_tau: QCharacter = images.iter().map(|t| (t.monomial(), 1)).collect();
            assert_eq!(from_tau, d.tableau_character());
            assert_eq!(from_tau, r.tableau_character());
            let g = d.related_generic().unwrap();
            assert!(g.is_generic());
            assert_eq!(g.related_generic().unwrap(), g);
            seen += 1;
        }
        assert!(seen > 0);
    }
}

#[test]
fn four_column_reduction_keeps_the_monomials() {
    let d = SkewDiagram::new(2, vec![(-2, 1), (-2, 1), (-4, 0), (-5, -3)]).unwrap();
    let r = d.closely_related().unwrap();
    let images: Vec<Tableau> = d.tableaux().iter().map(|t| t.tau().unwrap()).collect();
    assert_eq!(images.len(), r.tableaux().len());
    let from_tau: QCharacter = images.iter().map(|t| (t.monomial(), 1)).collect();
    assert_eq!(from_tau, d.tableau_character());
    assert_eq!(from_tau, r.tableau_character());
    let model = PathModel::new(Algebra::b(2).unwrap()).unwrap();
    assert_eq!(r.tableau_character(), seq_qchar(&model, &r.snake().unwrap()).unwrap());
}

#[test]
fn grid_and_json() {
    let d = SkewDiagram::new(2, vec![(-2, 1), (-2, 1), (-4, 0), (-5, -3)]).unwrap();
    let tp = d.dominant_tableau().unwrap();
    let grid = tp.grid();
    assert_eq!(grid.lines().count(), 7);
    assert!(grid.lines().next().unwrap().starts_with("  -5 |"));
    assert_eq!(SkewDiagram::from_json(&d.to_json()).unwrap(), d);
    for t in d.tableaux().into_iter().take(50) {
        assert_eq!(Tableau::from_json(&t.to_json()).unwrap(), t);
    }
    assert!(Tableau::new(d.clone(), vec![vec![Letter::Zero; 4]; 4]).is_err());
}
