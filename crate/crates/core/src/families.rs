//! Payoff families: grouping strict games by the payoff pairs at their Nash
//! equilibria.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::atlas::{StrictGameId, TopologyAtlas};
use crate::error::{Error, Result};
use crate::ordinal::{dominant_strategies, pareto_dominates, pure_nash, OrdinalGame};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Family {
    WinWin,
    Biased,
    SecondBest,
    Unfair,
    PdFamily,
    Cyclic,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::WinWin,
        Family::Biased,
        Family::SecondBest,
        Family::Unfair,
        Family::PdFamily,
        Family::Cyclic,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Family::WinWin => "Win-win",
            Family::Biased => "Biased",
            Family::SecondBest => "Second best",
            Family::Unfair => "Unfair",
            Family::PdFamily => "PD family",
            Family::Cyclic => "Cyclic",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Subfamily {
    Harmonious,
    StagHunt,
    BattleOfSexes,
    Samaritan,
    SelfServing,
    Alibi,
    Tragic,
    PrisonersDilemma,
    Improper,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PayoffFamily {
    pub family: Family,
    pub subfamily: Option<Subfamily>,
}

impl fmt::Display for PayoffFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.subfamily {
            Some(s) => write!(f, "{} / {:?}", self.family, s),
            None => write!(f, "{}", self.family),
        }
    }
}

fn sorted_desc((a, b): (u8, u8)) -> (u8, u8) {
    (a.max(b), a.min(b))
}

/// Classify a strict game by its equilibrium payoff pairs.
///
/// * no equilibrium: Cyclic
/// * (4,4) among them: Win-win. Stag Hunt with two equilibria; Harmonious
///   when (4,4) is reached by both players' dominant strategies.
/// * best pair {4,3}: Biased. Battle of the Sexes for {(4,3),(3,4)}; Improper
///   when {4,3} and {4,2} pairs mix; Samaritan when the single equilibrium
///   gives 3 to a player with a dominant strategy.
/// * best pair {3,3}: Second best, Self-serving with exactly one dominant
///   strategy.
/// * best pair {4,2}: Unfair.
/// * otherwise (2,2) or {3,2}: PD family. Prisoner's Dilemma for (2,2); for
///   3-2 outcomes Alibi when some cell is better for both, else Tragic.
pub fn classify_family(game: &OrdinalGame) -> Result<PayoffFamily> {
    if !game.is_strict() {
        return Err(Error::NotStrict);
    }
    let cells = pure_nash(game);
    let mut pairs: Vec<(u8, u8)> = cells.iter().map(|&c| game.payoff(c)).collect();
    pairs.sort_unstable();
    let (dom_row, dom_col) = dominant_strategies(game);

    let fam = |family, subfamily| Ok(PayoffFamily { family, subfamily });
    let Some(best) = pairs.iter().map(|&p| sorted_desc(p)).max() else {
        return fam(Family::Cyclic, None);
    };

    if pairs.contains(&(4, 4)) {
        let sub = if pairs.len() == 2 {
            Some(Subfamily::StagHunt)
        } else if dom_row.is_some() && dom_col.is_some() {
            Some(Subfamily::Harmonious)
        } else {
            None
        };
        return fam(Family::WinWin, sub);
    }
    match best {
        (4, 3) => {
            let sub = if pairs == [(3, 4), (4, 3)] {
                Some(Subfamily::BattleOfSexes)
            } else if pairs.iter().any(|&p| sorted_desc(p) == (4, 2)) {
                Some(Subfamily::Improper)
            } else if pairs.len() == 1
                && ((dom_row.is_some() && pairs[0].0 == 3) || (dom_col.is_some() && pairs[0].1 == 3))
            {
                Some(Subfamily::Samaritan)
            } else {
                None
            };
            fam(Family::Biased, sub)
        }
        (3, 3) => {
            let one_dominant = dom_row.is_some() != dom_col.is_some();
            fam(Family::SecondBest, one_dominant.then_some(Subfamily::SelfServing))
        }
        (4, 2) => fam(Family::Unfair, None),
        (2, 2) => fam(Family::PdFamily, Some(Subfamily::PrisonersDilemma)),
        _ => {
            let eq = cells[0];
            let improvable = crate::ordinal::Cell::ALL
                .into_iter()
                .any(|c| pareto_dominates(game, c, eq));
            let sub = if improvable { Subfamily::Alibi } else { Subfamily::Tragic };
            fam(Family::PdFamily, Some(sub))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct FamilyCensus {
    pub by_family: BTreeMap<Family, usize>,
    pub by_subfamily: BTreeMap<Subfamily, usize>,
    /// Games whose family carries no subfamily, per family.
    pub unlabelled: BTreeMap<Family, usize>,
}

impl FamilyCensus {
    pub fn total(&self) -> usize {
        self.by_family.values().sum()
    }

    pub fn largest_subfamily(&self) -> Option<(Subfamily, usize)> {
        self.by_subfamily.iter().map(|(&s, &n)| (s, n)).max_by_key(|&(_, n)| n)
    }
}

pub fn family_census(atlas: &TopologyAtlas) -> FamilyCensus {
    let mut census = FamilyCensus::default();
    for (_, game) in atlas.games() {
        let pf = classify_family(&game).expect("atlas games are strict");
        *census.by_family.entry(pf.family).or_default() += 1;
        match pf.subfamily {
            Some(s) => *census.by_subfamily.entry(s).or_default() += 1,
            None => *census.unlabelled.entry(pf.family).or_default() += 1,
        }
    }
    census
}

/// Orbits of the atlas under player transposition: one representative (the
/// smaller id) per orbit, and the fixed points.
pub fn distinct_up_to_player_swap(
    atlas: &TopologyAtlas,
) -> (Vec<StrictGameId>, Vec<StrictGameId>) {
    let mut reps = Vec::new();
    let mut symmetric = Vec::new();
    for (id, game) in atlas.games() {
        let partner = atlas.locate(&game.transpose_players()).expect("strict");
        if partner == id {
            symmetric.push(id);
        }
        if id <= partner {
            reps.push(id);
        }
    }
    (reps, symmetric)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::build_atlas;
    use crate::ordinal::make_game;

    #[test]
    fn named_games() {
        let pd = classify_family(&OrdinalGame::prisoners_dilemma()).unwrap();
        assert_eq!(pd.family, Family::PdFamily);
        assert_eq!(pd.subfamily, Some(Subfamily::PrisonersDilemma));

        let pennies = make_game([4, 2, 1, 3], [2, 4, 3, 1]).unwrap();
        assert_eq!(classify_family(&pennies).unwrap().family, Family::Cyclic);

        let stag = make_game([1, 4, 2, 3], [3, 4, 2, 1]).unwrap();
        let f = classify_family(&stag).unwrap();
        assert_eq!((f.family, f.subfamily), (Family::WinWin, Some(Subfamily::StagHunt)));

        // (4,4) at UR from both players' dominant strategies
        let harmony = make_game([2, 4, 1, 3], [2, 4, 1, 3]).unwrap();
        let f = classify_family(&harmony).unwrap();
        assert_eq!((f.family, f.subfamily), (Family::WinWin, Some(Subfamily::Harmonious)));

        let bos = make_game([3, 2, 1, 4], [4, 2, 1, 3]).unwrap();
        assert_eq!(pure_nash(&bos).len(), 2);
        let f = classify_family(&bos).unwrap();
        assert_eq!((f.family, f.subfamily), (Family::Biased, Some(Subfamily::BattleOfSexes)));

        let chicken = classify_family(&OrdinalGame::chicken()).unwrap();
        assert_eq!(chicken.family, Family::Unfair);
    }

    #[test]
    fn ties_are_rejected() {
        assert_eq!(classify_family(&OrdinalGame::null()), Err(Error::NotStrict));
    }

    #[test]
    fn census_and_orbits() {
        let atlas = build_atlas().unwrap();
        let census = family_census(&atlas);
        assert_eq!(census.total(), 144);
        assert_eq!(census.largest_subfamily().unwrap().0, Subfamily::Samaritan);
        let (reps, sym) = distinct_up_to_player_swap(&atlas);
        assert_eq!((reps.len(), sym.len()), (78, 12));
    }

    #[test]
    fn family_is_transpose_invariant() {
        let atlas = build_atlas().unwrap();
        for (_, g) in atlas.games() {
            assert_eq!(
                classify_family(&g).unwrap(),
                classify_family(&g.transpose_players()).unwrap()
            );
        }
    }
}
