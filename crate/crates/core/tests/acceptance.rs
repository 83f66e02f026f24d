//! Acceptance run: one line per criterion, non-zero exit if any fails.
//!
//! `SNAKEPATH_BIJECTION_SECS` sets the total time for the bijection family,
//! diagram enumeration included (default 570, under the ten minute limit).

use std::process::ExitCode;
use std::time::{Duration, Instant};

use snakepath::sl2::{is_thin_sl2, sl2_char, QString};
use snakepath::snake::{extended_snakes_in_window, lowest_monomial, seq_qchar, snake_qchar, splits_between};
use snakepath::tableau::connected_diagrams;
use snakepath::verify::ThinCriteria;
use snakepath::{Algebra, Letter, Monomial, PathModel, QCharacter, SkewDiagram, SnakeSeq, SpectralPoint};

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn m(s: &str) -> Monomial {
    s.parse().expect("literal monomial")
}

fn b(n: u32) -> Algebra {
    Algebra::b(n).expect("rank at least 2")
}

fn model(n: u32) -> PathModel {
    PathModel::new(b(n)).expect("type B")
}

fn b3_kr_character() -> Outcome {
    let ch = snake_qchar(&model(3), &m("Y[3,1] Y[3,3]")).unwrap();
    let mult = ch.multiplicity(&m("Y[1,4] Y[3,7]^-1 Y[3,9]^-1 Y[2,8] Y[1,10]^-1"));
    let absent = !ch.contains(&m("Y[1,8]^-1 Y[2,6] Y[2,8]^-1 Y[1,6]"));
    outcome(mult == 1 && absent, format!("multiplicity {mult}, excluded monomial absent: {absent}"))
}

fn b4_characters() -> Outcome {
    let b4 = model(4);
    let first = snake_qchar(&b4, &m("Y[3,0] Y[2,6]")).unwrap();
    let second = snake_qchar(&b4, &m("Y[4,1] Y[4,3]")).unwrap();
    let a = first.contains(&m("Y[3,12]^-1 Y[4,17]^-1 Y[3,10]"));
    let c = second.contains(&m("Y[2,6] Y[2,12]^-1"));
    let near = first.multiplicity(&m("Y[4,1] Y[3,10] Y[3,12]^-1 Y[4,17]^-1"));
    outcome(
        a && c,
        format!(
            "Y[3,12]^-1 Y[4,17]^-1 Y[3,10] in L(Y[3,0]Y[2,6]): {a} (weight differs from the top by omega_4 mod roots; \
             Y[4,1] Y[3,10] Y[3,12]^-1 Y[4,17]^-1 has multiplicity {near}); Y[2,6] Y[2,12]^-1 in L(Y[4,1]Y[4,3]): {c}"
        ),
    )
}

fn b2_diagram() -> Outcome {
    let d = SkewDiagram::new(2, vec![(-2, 1), (-2, 1), (-4, 0), (-5, -3)]).unwrap();
    let grid: [&[&str]; 4] =
        [&["1", "2", "0", "0"], &["1", "2", "2b", "1b"], &["1", "2", "0", "0", "2b"], &["1", "2", "0"]];
    let tp = d.dominant_tableau().unwrap();
    let grid_ok = tp
        .columns()
        .iter()
        .zip(grid)
        .all(|(col, want)| col.iter().map(|l| l.token()).eq(want.iter().map(|s| s.to_string())));
    let special_ok = d.special_columns() == [3, 4];
    let mp = m("Y[2,1] Y[1,14] Y[2,27] Y[2,29] Y[2,35]");
    let mono_ok = d.dominant_monomial().unwrap() == mp;
    let r = d.closely_related().unwrap();
    let red_ok = r.is_generic() && r.num_boxes() == 13 && r.dominant_monomial().unwrap() == mp;
    let images: Vec<_> = d.tableaux().iter().map(|t| t.tau().unwrap()).collect();
    let from_tau: QCharacter = images.iter().map(|t| (t.monomial(), 1)).collect();
    let tau_ok = from_tau == d.tableau_character() && from_tau == r.tableau_character();
    outcome(
        grid_ok && special_ok && mono_ok && red_ok && tau_ok,
        format!(
            "grid {grid_ok}, special columns {special_ok}, dominant monomial {mono_ok}, reduction {red_ok}, tau {tau_ok} ({} tableaux)",
            images.len()
        ),
    )
}

fn vector_representation() -> Outcome {
    let mut ok = true;
    let mut sizes = Vec::new();
    for n in 2..=4 {
        let ch = snake_qchar(&model(n), &Monomial::y(1, 0)).unwrap();
        let letters = (1..=2 * n + 1).map(|p| Letter::from_position(n, p));
        let boxes: QCharacter = letters.map(|l| (l.box_monomial(n, 0), 1)).collect();
        ok &= ch.len() == 2 * n as usize + 1 && ch.is_thin() && ch == boxes;
        sizes.push(ch.len());
    }
    outcome(ok, format!("term counts {sizes:?}"))
}

fn spin_modules() -> Outcome {
    let mut ok = true;
    for n in 2..=5u32 {
        let md = model(n);
        for k in [-3, 1, 3, 5, 7] {
            let paths = md.paths(SpectralPoint::new(n, k)).unwrap().len();
            let ch = snake_qchar(&md, &Monomial::y(n, k)).unwrap();
            ok &= paths == 1 << n && ch.len() == 1 << n && ch.is_thin();
        }
    }
    outcome(ok, "N = 2..5, levels -3,1,3,5,7")
}

struct SweepStats {
    snakes: usize,
    terms: usize,
    char_fail: Vec<String>,
    oracle_fail: Vec<String>,
    char_time: Duration,
    oracle_time: Duration,
}

fn sweep() -> SweepStats {
    let mut st = SweepStats {
        snakes: 0,
        terms: 0,
        char_fail: Vec::new(),
        oracle_fail: Vec::new(),
        char_time: Duration::ZERO,
        oracle_time: Duration::ZERO,
    };
    for n in [2u32, 3] {
        let alg = b(n);
        let md = model(n);
        let t0 = Instant::now();
        let snakes = extended_snakes_in_window(&alg, 3, 0..4, 0, 24);
        st.char_time += t0.elapsed();
        for s in snakes {
            let t0 = Instant::now();
            let top = s.monomial();
            let ch = seq_qchar(&md, &s).unwrap();
            let low = lowest_monomial(&md, &s).unwrap();
            let cone = ch.monomials().all(|t| {
                alg.a_decompose(&(t / &top))
                    .is_some_and(|a| a.iter().all(|(&p, &e)| e <= 0 && alg.in_w(p).unwrap_or(false)))
            });
            let good = ch.is_thin()
                && ch.is_special()
                && ch.is_antispecial()
                && ch.antidominant_terms() == vec![&low]
                && cone;
            if !good {
                st.char_fail.push(s.to_string());
            }
            st.snakes += 1;
            st.terms += ch.len();
            st.char_time += t0.elapsed();

            let t0 = Instant::now();
            let crit = ThinCriteria::new(alg, top.clone(), ch.monomials().cloned());
            let passes = crit.verdict().passed();
            let deletions_fail =
                ch.monomials().filter(|t| **t != top).all(|t| !crit.verdict_without(t).passed());
            if !(passes && deletions_fail) {
                st.oracle_fail.push(s.to_string());
            }
            st.oracle_time += t0.elapsed();
        }
    }
    st
}

/// Cheapest-first over the generic diagrams. Each rank gets an equal share of
/// what is left of the budget.
fn bijection(budget: Duration) -> Outcome {
    let start = Instant::now();
    let mut ok = true;
    let mut parts = Vec::new();
    let ranks = [2u32, 3];
    for (ix, &n) in ranks.iter().enumerate() {
        let left = budget.saturating_sub(start.elapsed());
        let deadline = Instant::now() + left / (ranks.len() - ix) as u32;
        let md = model(n);
        let mut family: Vec<(u128, SkewDiagram)> = connected_diagrams(n, 5, 14)
            .into_iter()
            .filter(|d| d.is_generic())
            .map(|d| (d.count_tableaux(), d))
            .collect();
        family.sort_by_key(|(c, _)| *c);
        let total_tabs: u128 = family.iter().map(|(c, _)| c).sum();
        let (mut done, mut tabs, mut bad) = (0usize, 0u128, 0usize);
        for (count, d) in &family {
            if Instant::now() >= deadline {
                break;
            }
            let seq = d.snake().unwrap();
            let tc = d.tableau_character();
            let pc = md.tuple_character(seq.points()).unwrap();
            let same = tc.dimension() as u128 == *count && tc == pc;
            if !same {
                bad += 1;
            }
            done += 1;
            tabs += count;
        }
        ok &= bad == 0 && done == family.len();
        parts.push(format!(
            "N={n}: {done}/{} diagrams, {tabs}/{total_tabs} tableaux, {bad} mismatches",
            family.len()
        ));
    }
    outcome(ok, parts.join("; "))
}

fn prime_splitting() -> Outcome {
    let (mut checked, mut bad) = (0, Vec::new());
    for n in [2u32, 3] {
        let alg = b(n);
        let md = model(n);
        for s in extended_snakes_in_window(&alg, 2, 0..4, 0, 24).into_iter().filter(|s| s.len() == 2) {
            let [p, q] = [s.points()[0], s.points()[1]];
            let whole = seq_qchar(&md, &s).unwrap();
            let one = |x| seq_qchar(&md, &SnakeSeq::new(alg, vec![x]).unwrap()).unwrap();
            let product = one(p).product(&one(q));
            if (whole == product) != splits_between(&alg, p, q) {
                bad.push(s.to_string());
            }
            checked += 1;
        }
    }
    outcome(bad.is_empty(), format!("{checked} two-point snakes, disagreements {bad:?}"))
}

fn sl2_tame_thin() -> Outcome {
    let (mut checked, mut bad) = (0, 0);
    for s in [1, 2] {
        let mut strings = Vec::new();
        for lo in 0..8 {
            for hi in lo..8 {
                strings.push(QString::new(1, s * (lo + hi), (hi - lo + 1) as u32, s).unwrap());
            }
        }
        let mut monos = vec![Monomial::one()];
        for a in 0..strings.len() {
            monos.push(strings[a].monomial());
            for b in a..strings.len() {
                let ab = &strings[a].monomial() * &strings[b].monomial();
                for sc in &strings[b..] {
                    monos.push(&ab * &sc.monomial());
                }
                monos.push(ab);
            }
        }
        monos.sort();
        monos.dedup();
        for mono in monos {
            checked += 1;
            if sl2_char(&mono, s).unwrap().is_thin() != is_thin_sl2(&mono, s).unwrap() {
                bad += 1;
            }
        }
    }
    outcome(bad == 0, format!("{checked} monomials, {bad} disagreements"))
}

/// `α_i` in ω-coordinates from the root system `α_i = e_i − e_{i+1}`, `α_N = e_N`.
fn simple_root(n: u32, i: u32) -> Vec<i64> {
    let root = |k: u32| -> Vec<i64> {
        let mut v = vec![0; n as usize];
        v[k as usize - 1] = 1;
        if k < n {
            v[k as usize] = -1;
        }
        v
    };
    let dot = |x: &[i64], y: &[i64]| x.iter().zip(y).map(|(a, b)| a * b).sum::<i64>();
    let ai = root(i);
    (1..=n).map(|j| 2 * dot(&ai, &root(j)) / dot(&root(j), &root(j))).collect()
}

fn weights() -> Outcome {
    let mut checked = 0;
    let mut ok = true;
    for n in 2..=5u32 {
        let alg = b(n);
        for i in 1..=n {
            for k in -20..=20 {
                ok &= alg.a_var(i, k).unwrap().weight(n).0 == simple_root(n, i);
                checked += 1;
            }
        }
    }
    outcome(ok, format!("{checked} (i,k) pairs"))
}

fn timed(run: impl FnOnce() -> Outcome) -> (Outcome, Duration) {
    let t0 = Instant::now();
    let out = run();
    (out, t0.elapsed())
}

fn main() -> ExitCode {
    let budget = std::env::var("SNAKEPATH_BIJECTION_SECS")
        .ok()
        .and_then(|s| s.parse().ok())
        .map_or(Duration::from_secs(570), Duration::from_secs);
    let mut all_ok = true;
    let mut report = |id: u32, name: &str, limit: Option<u64>, (out, took): (Outcome, Duration)| {
        let in_time = limit.is_none_or(|l| took <= Duration::from_secs(l));
        let ok = out.ok && in_time;
        all_ok &= ok;
        let limit = limit.map_or(String::new(), |l| format!(", limit {l}s"));
        let verdict = if ok { "PASS" } else { "FAIL" };
        println!("[{verdict}] {id:>2} {name}: {} [{took:.2?}{limit}]", out.detail);
    };
    report(1, "B_3 character of Y[3,1]Y[3,3]", Some(1), timed(b3_kr_character));
    report(2, "B_4 characters of Y[3,0]Y[2,6] and Y[4,1]Y[4,3]", Some(5), timed(b4_characters));
    report(3, "B_2 diagram (-2,1),(-2,1),(-4,0),(-5,-3)", Some(5), timed(b2_diagram));
    report(4, "vector representation", None, timed(vector_representation));
    report(5, "spin Kirillov-Reshetikhin modules", None, timed(spin_modules));
    let st = sweep();
    let chars = outcome(
        st.char_fail.is_empty(),
        format!("{} snakes, {} terms, failures {:?}", st.snakes, st.terms, st.char_fail),
    );
    report(6, "extended snake sweep", Some(600), (chars, st.char_time));
    let oracle = outcome(
        st.oracle_fail.is_empty(),
        format!("{} characters and their one-term deletions, failures {:?}", st.snakes, st.oracle_fail),
    );
    report(7, "thin-criteria oracle on the sweep", Some(600), (oracle, st.oracle_time));
    report(8, "tableaux versus path tuples", Some(600), timed(|| bijection(budget)));
    report(9, "prime splitting", None, timed(prime_splitting));
    report(10, "sl2 thin iff strings disjoint", Some(60), timed(sl2_tame_thin));
    report(11, "weights of the A variables", None, timed(weights));
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
