//! Acceptance run: one line per criterion, nonzero exit if any fails.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use altsnake::det::{minor_check, split_check, window_pattern_string};
use altsnake::*;
use num_bigint::BigInt;
use rand::Rng;

use common::*;

const CORPUS: usize = 600;
const MIN_ORACLE: usize = 500;
const MIN_OMEGA: usize = 200;
const MIN_GAMMA: usize = 1000;
const FAMILY_MAX_R: usize = 9;
const ORACLE_BUDGET: Duration = Duration::from_secs(60);
const EXAMPLE_BUDGET: Duration = Duration::from_secs(1);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn ivs(v: &[(i64, i64)]) -> Vec<Interval> {
    v.iter().map(|&x| x.into()).collect()
}

fn c1_example() -> Outcome {
    let t = Instant::now();
    let s = match AlternatingSnake::new(&ivs(&[(0, 4), (-1, 1), (1, 2), (2, 3)]), &[1, 2, 4], 5) {
        Ok(s) => s,
        Err(e) => return outcome(false, format!("rejected: {}", e)),
    };
    let dirs_ok = s.directions() == [Direction::Left, Direction::Right];
    let e = standard_expansion::<BigInt>(&s).unwrap();
    let lead = e.coeff(&s.omega_weight());
    let unit = e.iter().all(|(_, c)| *c == BigInt::from(1) || *c == BigInt::from(-1));
    let el = t.elapsed();
    let pass = dirs_ok && s.is_stable() && s.is_prime() && lead == BigInt::from(1) && unit && el < EXAMPLE_BUDGET;
    outcome(
        pass,
        format!(
            "runs {:?}, stable {}, prime {}, leading {}, {} terms all +-1: {}, {:?}",
            s.directions(),
            s.is_stable(),
            s.is_prime(),
            lead,
            e.len(),
            unit,
            el
        ),
    )
}

fn c2_base_case() -> Outcome {
    let mut checked = 0;
    let mut bad = 0;
    for n in 1..=5u32 {
        let top = n as i64 + 1;
        for ai in -3..=3 {
            for aj in ai..=ai + top {
                for bi in ai + 1..=4 {
                    for bj in bi..=bi + top {
                        let (a, b) = (Interval::new(ai, aj), Interval::new(bi, bj));
                        if !connected_pair(a, b, n) {
                            continue;
                        }
                        let want = two_by_two(a, b, n);
                        for pair in [[a, b], [b, a]] {
                            let s = AlternatingSnake::new(&pair, &[1, 2], n).unwrap();
                            checked += 1;
                            if det_laplace::<BigInt>(&build_matrix(&s)) != want {
                                bad += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    outcome(checked > 0 && bad == 0, format!("{} connected pairs in both orders, {} mismatches", checked, bad))
}

fn c3_oracle(corpus: &[AlternatingSnake]) -> Outcome {
    let t = Instant::now();
    let mut bad = 0;
    for s in corpus {
        let m = build_matrix(s);
        if det_laplace::<BigInt>(&m) != det_leibniz::<BigInt>(&m) {
            bad += 1;
        }
    }
    let el = t.elapsed();
    outcome(
        corpus.len() >= MIN_ORACLE && bad == 0 && el < ORACLE_BUDGET,
        format!("{} stable snakes (r <= 7, n <= 8), {} mismatches, {:?}", corpus.len(), bad, el),
    )
}

fn c4_omega(corpus: &[AlternatingSnake]) -> Outcome {
    let mut bad = 0;
    for s in corpus {
        let e = standard_expansion::<BigInt>(s).unwrap();
        let want: BTreeMap<LWeight, BigInt> = e.iter().map(|(w, c)| (relabel_omega(w), c.clone())).collect();
        let got: BTreeMap<LWeight, BigInt> = match standard_expansion::<BigInt>(&s.omega()) {
            Ok(x) => x.iter().map(|(w, c)| (w.clone(), c.clone())).collect(),
            Err(_) => BTreeMap::new(),
        };
        if got != want {
            bad += 1;
        }
    }
    outcome(corpus.len() >= MIN_OMEGA && bad == 0, format!("{} stable snakes, {} mismatches", corpus.len(), bad))
}

fn c5_minor(corpus: &[AlternatingSnake]) -> Outcome {
    let (mut minors, mut minor_bad, mut splits, mut split_bad) = (0, 0, 0, 0);
    for s in corpus {
        if s.is_prime() {
            for p in 1..=s.brk(1) {
                minors += 1;
                if !minor_check(s, p).unwrap_or(false) {
                    minor_bad += 1;
                }
            }
        } else {
            splits += 1;
            if !split_check(s).unwrap_or(false) {
                split_bad += 1;
            }
        }
    }
    outcome(
        minors > 0 && splits > 0 && minor_bad == 0 && split_bad == 0,
        format!("{} minors ({} failed), {} splits ({} failed)", minors, minor_bad, splits, split_bad),
    )
}

fn c6_decompose() -> Outcome {
    let mut g = rng(61);
    let mut bad = 0;
    let total = 1000;
    for _ in 0..total {
        let s = sample::random_snake(&mut g, 7, 8);
        let f = s.prime_decompose();
        let concat: Vec<Interval> = f.iter().flat_map(|x| x.intervals().to_vec()).collect();
        let rev: Vec<AlternatingSnake> = f.iter().rev().map(|x| x.reverse()).collect();
        if !f.iter().all(|x| x.is_prime()) || concat != s.intervals() || s.reverse().prime_decompose() != rev {
            bad += 1;
        }
    }
    let w = AlternatingSnake::new(&ivs(&[(0, 4), (-2, 1), (1, 4)]), &[1, 2, 3], 5).unwrap();
    let worked = w.cut_points() == [2]
        && w.prime_decompose().iter().map(|x| x.intervals().to_vec()).collect::<Vec<_>>()
            == vec![ivs(&[(0, 4), (-2, 1)]), ivs(&[(1, 4)])];
    outcome(bad == 0 && worked, format!("{} random snakes, {} failures; worked example cut {:?}", total, bad, w.cut_points()))
}

fn c7_paths() -> Outcome {
    let (mut checked, mut bad) = (0, 0);
    for n in 1..=8u32 {
        for i in -2..=2 {
            for len in 0..=n as i64 + 1 {
                checked += 1;
                let got = enum_paths(Interval::new(i, i + len), n).unwrap().len() as u128;
                if got != pascal(n as usize + 1, len as usize) {
                    bad += 1;
                }
            }
        }
    }
    outcome(bad == 0, format!("{} intervals with n <= 8, {} mismatches", checked, bad))
}

fn c8_dimension(ladders: &[AlternatingSnake]) -> Outcome {
    let mut bad = 0;
    for s in ladders {
        let lhs = snake_dim(s).unwrap();
        let rhs: BigInt = det_laplace::<BigInt>(&build_matrix(s)).dim_eval().unwrap();
        if BigInt::from(lhs) != rhs {
            bad += 1;
        }
    }
    let w = AlternatingSnake::new(&ivs(&[(0, 2), (-1, 1)]), &[1, 2], 2).unwrap();
    let wd = snake_dim(&w).unwrap();
    let we: BigInt = det_laplace::<BigInt>(&build_matrix(&w)).dim_eval().unwrap();
    outcome(
        bad == 0 && wd == 6 && we == BigInt::from(6),
        format!("{} ladders (r <= 4, n <= 6), {} mismatches; worked case {} = {}", ladders.len(), bad, wd, we),
    )
}

fn c9_dominant(ladders: &[AlternatingSnake]) -> Outcome {
    let mut bad = 0;
    for s in ladders {
        let want: BTreeSet<LWeight> = [s.omega_weight()].into_iter().collect();
        if dominant_weights(s).unwrap() != want {
            bad += 1;
        }
    }
    outcome(bad == 0, format!("{} ladders, {} with extra dominant weights", ladders.len(), bad))
}

fn c10_kl(exmore: &[AlternatingSnake]) -> Outcome {
    let s = AlternatingSnake::new(&ivs(&[(0, 2), (-1, 1)]), &[1, 2], 2).unwrap();
    let t = kl_table::<BigInt>(&s).unwrap();
    let want: BTreeMap<Vec<i64>, BigInt> =
        [(vec![0, -1], BigInt::from(1)), (vec![-1, 0], BigInt::from(-1))].into_iter().collect();
    let rank_one = t.rows == want;
    let mut bad = 0;
    for s in exmore {
        match kl_table::<BigInt>(s) {
            Ok(t) if t.rows.values().all(|c| *c == BigInt::from(1) || *c == BigInt::from(-1)) => {}
            _ => bad += 1,
        }
    }
    outcome(
        rank_one && bad == 0,
        format!("rank one {:?}; {} family tables, {} outside +-1", t.rows, exmore.len(), bad),
    )
}

fn c11_roots(corpus: &[AlternatingSnake]) -> Outcome {
    let mut g = rng(111);
    let mut pairs = 0;
    let mut gamma_bad = 0;
    while pairs < MIN_GAMMA {
        let n = g.gen_range(1..=8u32);
        let a = Interval::new(g.gen_range(-8..=8), g.gen_range(-8..=8));
        let b = Interval::new(g.gen_range(-8..=8), g.gen_range(-8..=8));
        if !(a.in_rank(n) && b.in_rank(n) && a.i < b.i && connected_pair(a, b, n)) {
            continue;
        }
        pairs += 1;
        if gamma_product(a, b, n).unwrap() != gamma_oracle(a, b, n) {
            gamma_bad += 1;
        }
    }
    let mut trips = 0;
    let mut trip_bad = 0;
    for _ in 0..500 {
        let n = g.gen_range(1..=8u32);
        let mut c: BTreeMap<(i64, i64), u64> = BTreeMap::new();
        for _ in 0..g.gen_range(0..=6) {
            let i = g.gen_range(-4..=4);
            let len = g.gen_range(1..=n as i64);
            *c.entry((i, i + len)).or_default() += g.gen_range(1..=3);
        }
        trips += 1;
        let back = decompose_in_qplus(&root_product(&c, n));
        let got: Option<BTreeMap<(i64, i64), u64>> = back.map(|r| r.iter().map(|(iv, m)| ((iv.i, iv.j), m)).collect());
        if got.as_ref() != Some(&c) {
            trip_bad += 1;
        }
    }
    let (mut taus, mut tau_bad) = (0, 0);
    for s in corpus {
        for p in 1..s.len() {
            if !s.contained_in_prime_factor(p, p + 1).unwrap() {
                continue;
            }
            taus += 1;
            let (t, gamma) = s.tau(p).unwrap();
            let wt = LWeight::of_intervals(&t, s.n()).unwrap();
            let consistent = s.omega_weight().div(&gamma).unwrap() == wt;
            if !(consistent && leq(&wt, &s.omega_weight()).unwrap()) {
                tau_bad += 1;
            }
        }
    }
    outcome(
        gamma_bad == 0 && trip_bad == 0 && tau_bad == 0 && taus > 0,
        format!(
            "{} pairs ({} bad), {} root round trips ({} bad), {} swaps ({} bad)",
            pairs, gamma_bad, trips, trip_bad, taus, tau_bad
        ),
    )
}

fn c12_golden() -> Outcome {
    let ii = "x x x 0 0\nx x x 0 0\n0 x x x x\n0 x x x x\n0 0 0 x x";
    let iii = "x x x x 0\nx x x x 0\n0 x x x 0\n0 x x x x\n0 x x x x";
    let a = window_pattern_string(&[1, 2, 3, 4, 5], Direction::Left) == ii;
    let b = window_pattern_string(&[1, 2, 4, 5], Direction::Left) == iii;
    outcome(a && b, format!("(1,2,3,4,5): {}, (1,2,4,5): {}", a, b))
}

fn main() {
    let corpus = stable_corpus(3, CORPUS);
    let exmore = exmore_corpus(10, 200, FAMILY_MAX_R);
    let mut minor_corpus = corpus.clone();
    minor_corpus.extend(exmore.iter().cloned());
    let ladders = left_ladders(4, 6);

    let checks: Vec<(usize, &str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        (1, "example end to end", Box::new(c1_example)),
        (2, "two by two base case", Box::new(c2_base_case)),
        (3, "Laplace against Leibniz", Box::new(|| c3_oracle(&corpus))),
        (4, "Omega equivariance", Box::new(|| c4_omega(&corpus[..MIN_OMEGA.max(corpus.len() / 2)]))),
        (5, "minor and split identities", Box::new(|| c5_minor(&minor_corpus))),
        (6, "prime decomposition", Box::new(c6_decompose)),
        (7, "path counting", Box::new(c7_paths)),
        (8, "dimension cross oracle", Box::new(|| c8_dimension(&ladders))),
        (9, "dominant weight uniqueness", Box::new(|| c9_dominant(&ladders))),
        (10, "coefficient tables", Box::new(|| c10_kl(&exmore))),
        (11, "root algebra", Box::new(|| c11_roots(&corpus))),
        (12, "matrix zero patterns", Box::new(c12_golden)),
    ];
    let mut failed = 0;
    for (id, name, check) in &checks {
        let t = Instant::now();
        let o = check();
        println!(
            "criterion {:>2} {:<28} {}  {} [{:.2?}]",
            id,
            name,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail,
            t.elapsed()
        );
        if !o.pass {
            failed += 1;
        }
    }
    println!("{} of {} criteria passed", checks.len() - failed, checks.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
