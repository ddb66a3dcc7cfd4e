//! Frozen counts and paths for the families and the half-swap lattice.

use topo2x2::families::{family_census, Subfamily};
use topo2x2::ties::{half_swap_path, make_tie, tie_lattice, HalfSwapOp};
use topo2x2::{build_atlas, make_game, Family, OrdinalGame, Player};

#[test]
fn family_census_counts() {
    let census = family_census(&build_atlas().unwrap());
    let fam: Vec<usize> = Family::ALL.iter().map(|f| census.by_family[f]).collect();
    // WinWin, Biased, SecondBest, Unfair, PdFamily, Cyclic
    assert_eq!(fam, [36, 44, 12, 19, 15, 18]);

    use Subfamily::*;
    let expect = [
        (Harmonious, 9),
        (StagHunt, 9),
        (BattleOfSexes, 4),
        (Samaritan, 24),
        (SelfServing, 8),
        (Alibi, 4),
        (Tragic, 8),
        (PrisonersDilemma, 3),
        (Improper, 4),
    ];
    for (s, n) in expect {
        assert_eq!(census.by_subfamily[&s], n, "{s:?}");
    }
    assert_eq!(census.by_subfamily.values().sum::<usize>() + census.unlabelled.values().sum::<usize>(), 144);
}

#[test]
fn half_swap_paths() {
    let pd = OrdinalGame::prisoners_dilemma();
    assert!(half_swap_path(&pd, &pd).is_empty());

    let center = make_tie(&make_tie(&pd, Player::Row, 1).unwrap(), Player::Col, 1).unwrap();
    let path = half_swap_path(&pd, &center);
    assert_eq!(path.len(), 2);
    assert!(path.iter().all(|s| matches!(s.op, HalfSwapOp::Make { .. })));
    assert_eq!(path.last().unwrap().to, center);

    let harmony = make_game([1, 2, 1, 1], [1, 2, 1, 1]).unwrap().canonicalize().game;
    let path = half_swap_path(&OrdinalGame::null(), &harmony);
    assert_eq!(path.len(), 2);
    assert!(path.iter().all(|s| matches!(s.op, HalfSwapOp::Break { .. })));
}

#[test]
fn null_game_reaches_everything_within_six() {
    let null = OrdinalGame::null();
    let lattice = tie_lattice();
    let longest = lattice.games().iter().map(|g| half_swap_path(&null, g).len()).max().unwrap();
    assert_eq!(longest, 6);
}

#[test]
fn paths_are_chained() {
    let lattice = tie_lattice();
    let games = lattice.games();
    for (i, a) in games.iter().enumerate().step_by(97) {
        let b = &games[(i * 31 + 7) % games.len()];
        let path = half_swap_path(a, b);
        let mut at = *a;
        for step in &path {
            assert_eq!(step.from, at);
            assert!(lattice.neighbors(&at).contains(&(step.op, step.to)));
            at = step.to;
        }
        assert_eq!(at, *b);
    }
}
