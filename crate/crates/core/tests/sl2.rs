use proptest::prelude::*;
use snakepath::sl2::{eval_char, is_thin_sl2, qstring_decompose, sl2_char, QString};
use snakepath::{Monomial, SpectralPoint};

fn mono(levels: &[i32]) -> Monomial {
    Monomial::from_exponents(levels.iter().map(|&k| (SpectralPoint::new(1, k), 1)))
}

/// Every string inside `lo..=hi` on the step-`s` lattice through `lo`.
fn strings_in(lo: i32, hi: i32, s: i32) -> Vec<QString> {
    let mut out = Vec::new();
    let mut a = lo;
    while a <= hi {
        let mut b = a;
        while b <= hi {
            let len = ((b - a) / (2 * s) + 1) as u32;
            out.push(QString::new(1, (a + b) / 2, len, s).unwrap());
            b += 2 * s;
        }
        a += 2 * s;
    }
    out
}

/// All multisets of strings in general position whose product is `m`.
fn brute_decompositions(m: &Monomial, s: i32) -> Vec<Vec<QString>> {
    let Some((lo, hi)) = m.level_range() else { return vec![Vec::new()] };
    let cands = strings_in(lo, hi, s);
    let mut out = Vec::new();
    fn go(
        cands: &[QString],
        from: usize,
        rest: &Monomial,
        chosen: &mut Vec<QString>,
        out: &mut Vec<Vec<QString>>,
    ) {
        if rest.is_one() {
            let ok = chosen
                .iter()
                .enumerate()
                .all(|(a, x)| chosen[a + 1..].iter().all(|y| x.in_general_position(y)));
            if ok {
                out.push(chosen.clone());
            }
            return;
        }
        for ix in from..cands.len() {
            let next = rest / &cands[ix].monomial();
            if next.iter().all(|(_, e)| e >= 0) {
                chosen.push(cands[ix]);
                go(cands, ix, &next, chosen, out);
                chosen.pop();
            }
        }
    }
    go(&cands, 0, m, &mut Vec::new(), &mut out);
    out
}

fn sorted(mut v: Vec<QString>) -> Vec<QString> {
    v.sort();
    v
}

/// Dominant monomials built from up to three strings in an 8-level window.
fn window_monomials(s: i32) -> Vec<Monomial> {
    let strings =
        strings_in(0, 14 * s / 2, s).into_iter().filter(|q| q.hi() - q.lo() < 8 * s).collect::<Vec<_>>();
    let mut out = vec![Monomial::one()];
    for a in 0..strings.len() {
        out.push(strings[a].monomial());
        for b in a..strings.len() {
            let ab = &strings[a].monomial() * &strings[b].monomial();
            out.push(ab.clone());
            for sc in &strings[b..] {
                out.push(&ab * &sc.monomial());
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

#[test]
fn decomposition_is_the_unique_general_position_multiset() {
    for s in [1, 2] {
        for m in
            window_monomials(s).into_iter().filter(|m| m.level_range().is_some_and(|(a, b)| b - a <= 6 * s))
        {
            let brute = brute_decompositions(&m, s);
            assert_eq!(brute.len(), 1, "{m}: {brute:?}");
            assert_eq!(sorted(qstring_decompose(&m, s).unwrap()), sorted(brute[0].clone()), "{m}");
        }
    }
}

#[test]
fn thin_iff_strings_disjoint() {
    for s in [1, 2] {
        for m in window_monomials(s) {
            let ch = sl2_char(&m, s).unwrap();
            assert_eq!(ch.is_thin(), is_thin_sl2(&m, s).unwrap(), "{m}");
        }
    }
}

#[test]
fn evaluation_characters() {
    for s in [1, 2] {
        for q in strings_in(-4, 12, s) {
            let ch = eval_char(&q);
            assert_eq!(ch.len(), q.length as usize + 1);
            assert!(ch.is_thin() && ch.is_special() && ch.is_antispecial());
            assert_eq!(ch.dominant_terms(), vec![&q.monomial()]);
        }
    }
}

#[test]
fn string_validation() {
    assert!(QString::new(1, 0, 0, 1).is_err());
    assert!(QString::new(1, 0, 1, 3).is_err());
    assert!(qstring_decompose(&mono(&[0]), 3).is_err());
}

proptest! {
    #[test]
    fn decomposition_reconstructs_and_is_stable(levels in prop::collection::vec(0i32..10, 0..6), s in 1i32..=2) {
        let m = mono(&levels.iter().map(|k| k * s).collect::<Vec<_>>());
        let strings = qstring_decompose(&m, s).unwrap();
        let product = strings.iter().fold(Monomial::one(), |acc, q| &acc * &q.monomial());
        prop_assert_eq!(product, m.clone());
        for (a, x) in strings.iter().enumerate() {
            for y in &strings[a + 1..] {
                prop_assert!(x.in_general_position(y));
            }
        }
        let ch = sl2_char(&m, s).unwrap();
        let expected: u64 = strings.iter().map(|q| q.length as u64 + 1).product();
        prop_assert_eq!(ch.dimension(), expected);
    }
}
