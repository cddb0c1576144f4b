use gamegraph::engine::{Game, Scenario};
use gamegraph::games::{iov_to_abs, AbsGame, CocoGame, IfilGame, IntGame, IovGame, PlainGame, WithBlocks};
use gamegraph::geometry::Interval;
use gamegraph::graph::clique_number;
use gamegraph::strategies::random_scenario;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::collections::BTreeSet;

/// Every prefix of a legal scenario replays move by move with the same
/// edges.
fn prefixes_are_legal<G: Game>(game: &G, s: &Scenario<G::Move>) {
    let mut t = Scenario::new();
    for r in s.rounds() {
        let e = game.check_move(&t, &r.payload).unwrap_or_else(|e| panic!("{}: {e}", game.name()));
        assert_eq!(e, r.edges_to_previous);
        t.push(r.payload.clone(), e).unwrap();
    }
}

fn fuzz_prefix_closure<G: Game>(game: &G, count: usize, max_n: usize, seed: u64) {
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..count {
        let n = rng.gen_range(1..=max_n);
        let s = random_scenario(game, n, &mut rng);
        prefixes_are_legal(game, &s);
        assert!(clique_number(&s.graph()).unwrap() <= game.clique_bound());
    }
}

#[test]
fn prefix_closure_for_every_game() {
    fuzz_prefix_closure(&IntGame::new(3), 10_000, 12, 1);
    fuzz_prefix_closure(&IovGame::new(3), 10_000, 12, 2);
    fuzz_prefix_closure(&IovGame::triangle_free(3), 10_000, 12, 3);
    fuzz_prefix_closure(&AbsGame::new(3), 10_000, 12, 4);
    fuzz_prefix_closure(&WithBlocks::new(AbsGame::new(3), 3), 10_000, 12, 5);
    fuzz_prefix_closure(&WithBlocks::new(IovGame::new(2), 2), 10_000, 12, 6);
    fuzz_prefix_closure(&CocoGame::new(3), 10_000, 12, 7);
    fuzz_prefix_closure(&PlainGame::new(3), 10_000, 12, 8);
    fuzz_prefix_closure(&IfilGame::new(2, 4), 2_000, 10, 9);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn iov_scenarios_translate_to_abs(seed in any::<u64>(), n in 1usize..40, k in 1usize..5) {
        let mut rng = StdRng::seed_from_u64(seed);
        let s = random_scenario(&IovGame::new(k), n, &mut rng);
        let t = iov_to_abs(&s);
        prefixes_are_legal(&AbsGame::new(k), &t);
        prop_assert_eq!(t.graph(), s.graph());
    }

    #[test]
    fn abs_clique_bound_holds(seed in any::<u64>(), n in 1usize..60, k in 1usize..5) {
        let s = random_scenario(&AbsGame::new(k), n, &mut StdRng::seed_from_u64(seed));
        prop_assert!(clique_number(&s.graph()).unwrap() <= k);
    }
}

/// Endpoint ranks of each interval, listed by presentation order.
fn order_type(xs: &[Interval]) -> Vec<(usize, usize)> {
    let mut ends: Vec<_> = xs.iter().flat_map(|x| [x.l.clone(), x.r.clone()]).collect();
    ends.sort();
    let rank = |q| ends.binary_search(q).unwrap();
    xs.iter().map(|x| (rank(&x.l), rank(&x.r))).collect()
}

/// Every assignment of `2n` distinct slots to `n` labelled intervals that
/// the game accepts round by round.
fn brute_force_types<G: Game<Move = Interval>>(game: &G, n: usize) -> BTreeSet<Vec<(usize, usize)>> {
    fn go(n: usize, used: &mut Vec<bool>, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for a in 0..2 * n {
            for b in a + 1..2 * n {
                if !used[a] && !used[b] {
                    used[a] = true;
                    used[b] = true;
                    cur.push((a, b));
                    go(n, used, cur, out);
                    cur.pop();
                    used[a] = false;
                    used[b] = false;
                }
            }
        }
    }
    let mut all = Vec::new();
    go(n, &mut vec![false; 2 * n], &mut Vec::new(), &mut all);
    all.into_iter()
        .filter(|t| {
            let mut s = Scenario::new();
            t.iter().all(|&(a, b)| {
                let m = Interval::ints(a as i64, b as i64);
                match game.check_move(&s, &m) {
                    Ok(e) => s.push(m, e).is_ok(),
                    Err(_) => false,
                }
            })
        })
        .collect()
}

fn enumerated_types<G: Game<Move = Interval>>(game: &G, n: usize) -> Vec<Vec<(usize, usize)>> {
    fn go<G: Game<Move = Interval>>(game: &G, n: usize, s: &mut Scenario<Interval>, out: &mut Vec<Vec<(usize, usize)>>) {
        if s.len() == n {
            let xs: Vec<Interval> = s.payloads().cloned().collect();
            out.push(order_type(&xs));
            return;
        }
        for m in game.moves(s) {
            let e = game.check_move(s, &m).unwrap();
            s.push(m, e).unwrap();
            go(game, n, s, out);
            s.pop();
        }
    }
    let mut out = Vec::new();
    go(game, n, &mut Scenario::new(), &mut out);
    out
}

fn check_bijection<G: Game<Move = Interval>>(game: &G) {
    for n in 1..=3 {
        let listed = enumerated_types(game, n);
        let distinct: BTreeSet<_> = listed.iter().cloned().collect();
        assert_eq!(distinct.len(), listed.len(), "{} repeats an order type", game.name());
        assert_eq!(distinct, brute_force_types(game, n), "{} n = {n}", game.name());
    }
}

#[test]
fn canonical_interval_moves_match_order_types() {
    check_bijection(&IntGame::new(3));
    check_bijection(&IntGame::new(2));
    check_bijection(&IovGame::new(3));
    check_bijection(&IovGame::new(2));
    // unrestricted intervals: (2n)! / 2^n order types
    assert_eq!(brute_force_types(&IntGame::new(3), 3).len(), 90);
}
