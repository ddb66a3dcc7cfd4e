//! Games with ties: preference classes, half-swaps, the 1413-game census and
//! the natural-order grid.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::atlas::{strict_game_id, StrictGameId};
use crate::error::{Error, Result};
use crate::ordinal::{all_rank_vectors, canonicalize, OrdinalGame, Player, RankVector};

/// Tie pattern of one player's ranking. Variants are declared in natural
/// (axis) order: fewest distinct preferences first, low ties before high.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum PreferenceClass {
    /// 1=2=3=4
    A,
    /// 1=2=3<4
    B,
    /// 1=2<3=4
    C,
    /// 1<2=3=4
    E,
    /// 1=2<3<4
    D,
    /// 1<2=3<4
    F,
    /// 1<2<3=4
    G,
    /// strict
    H,
}

impl PreferenceClass {
    pub const ALL: [PreferenceClass; 8] = [
        PreferenceClass::A,
        PreferenceClass::B,
        PreferenceClass::C,
        PreferenceClass::E,
        PreferenceClass::D,
        PreferenceClass::F,
        PreferenceClass::G,
        PreferenceClass::H,
    ];

    pub fn of(ranks: RankVector) -> PreferenceClass {
        let k = ranks.distinct();
        let counts: Vec<usize> = (1..=k).map(|v| ranks.multiplicity(v)).collect();
        match counts[..] {
            [4] => PreferenceClass::A,
            [3, 1] => PreferenceClass::B,
            [2, 2] => PreferenceClass::C,
            [1, 3] => PreferenceClass::E,
            [2, 1, 1] => PreferenceClass::D,
            [1, 2, 1] => PreferenceClass::F,
            [1, 1, 2] => PreferenceClass::G,
            [1, 1, 1, 1] => PreferenceClass::H,
            _ => unreachable!("dense rank vector with counts {counts:?}"),
        }
    }

    /// 1-based position on the natural-order axis.
    pub fn axis_index(self) -> u8 {
        self as u8 + 1
    }

    pub fn from_axis_index(i: u8) -> Option<PreferenceClass> {
        Self::ALL.get((i as usize).checked_sub(1)?).copied()
    }

    pub fn letter(self) -> char {
        match self {
            PreferenceClass::A => 'A',
            PreferenceClass::B => 'B',
            PreferenceClass::C => 'C',
            PreferenceClass::D => 'D',
            PreferenceClass::E => 'E',
            PreferenceClass::F => 'F',
            PreferenceClass::G => 'G',
            PreferenceClass::H => 'H',
        }
    }

    /// Distinct-value count with tie-position subscript, e.g. `2₂`.
    pub fn label(self) -> &'static str {
        match self {
            PreferenceClass::A => "1",
            PreferenceClass::B => "2₁",
            PreferenceClass::C => "2₂",
            PreferenceClass::E => "2₃",
            PreferenceClass::D => "3₁",
            PreferenceClass::F => "3₂",
            PreferenceClass::G => "3₃",
            PreferenceClass::H => "4",
        }
    }

    /// ASCII form of [`label`](Self::label), e.g. `2_2`.
    pub fn token(self) -> &'static str {
        match self {
            PreferenceClass::A => "1",
            PreferenceClass::B => "2_1",
            PreferenceClass::C => "2_2",
            PreferenceClass::E => "2_3",
            PreferenceClass::D => "3_1",
            PreferenceClass::F => "3_2",
            PreferenceClass::G => "3_3",
            PreferenceClass::H => "4",
        }
    }

    pub fn from_token(s: &str) -> Option<PreferenceClass> {
        Self::ALL.into_iter().find(|c| c.token() == s)
    }
}

impl fmt::Display for PreferenceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.label(), self.letter())
    }
}

pub fn preference_class(ranks: RankVector) -> PreferenceClass {
    PreferenceClass::of(ranks)
}

pub fn class_pair(game: &OrdinalGame) -> (PreferenceClass, PreferenceClass) {
    (PreferenceClass::of(game.row()), PreferenceClass::of(game.col()))
}

// ---------------------------------------------------------------------------
// Half-swaps

/// Merge one player's adjacent ranks `rank` and `rank + 1` into a tie.
pub fn make_tie(game: &OrdinalGame, player: Player, rank: u8) -> Result<OrdinalGame> {
    let ranks = game.ranks(player);
    if rank == 0 || rank >= ranks.distinct() {
        return Err(Error::RankAbsent { player, rank });
    }
    let merged = ranks.as_array().map(|r| if r > rank { r - 1 } else { r });
    let merged = RankVector::new(merged).expect("merging adjacent ranks stays dense");
    Ok(canonicalize(&game.with_ranks(player, merged)).game)
}

/// Every game reached by splitting the cells tied at `value` into a
/// nonempty lower block and a nonempty upper block.
pub fn break_tie(game: &OrdinalGame, player: Player, value: u8) -> Result<Vec<OrdinalGame>> {
    let ranks = game.ranks(player);
    let tied: Vec<usize> = ranks.cells_with(value).map(|c| c.index()).collect();
    if tied.len() < 2 {
        return Err(Error::RankNotTied { player, value });
    }
    let base = ranks.as_array().map(|r| if r > value { r + 1 } else { r });
    let mut out = BTreeSet::new();
    for mask in 1..(1u32 << tied.len()) - 1 {
        let mut split = base;
        for (bit, &cell) in tied.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                split[cell] = value + 1;
            }
        }
        let split = RankVector::new(split).expect("splitting a tie stays dense");
        out.insert(canonicalize(&game.with_ranks(player, split)).game);
    }
    Ok(out.into_iter().collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum HalfSwapOp {
    /// Tie ranks `rank` and `rank + 1`.
    Make { player: Player, rank: u8 },
    /// Split the cells tied at `value`.
    Break { player: Player, value: u8 },
}

impl fmt::Display for HalfSwapOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            HalfSwapOp::Make { player, rank } => write!(f, "{player:?} make {rank}={}", rank + 1),
            HalfSwapOp::Break { player, value } => write!(f, "{player:?} break {value}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HalfSwapStep {
    pub op: HalfSwapOp,
    pub from: OrdinalGame,
    pub to: OrdinalGame,
}

// ---------------------------------------------------------------------------
// Census

pub const TIE_GAME_COUNT: usize = 1413;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TieCensus {
    /// `matrix[r][c]`: canonical games whose row player has class with axis
    /// index `r + 1` and column player `c + 1`.
    pub matrix: [[usize; 8]; 8],
    pub total: usize,
    /// Games counted once per player transposition orbit.
    pub player_swap_total: usize,
}

impl TieCensus {
    pub fn get(&self, row: PreferenceClass, col: PreferenceClass) -> usize {
        self.matrix[row as usize][col as usize]
    }

    pub fn row_sum(&self, row: PreferenceClass) -> usize {
        self.matrix[row as usize].iter().sum()
    }
}

/// Every canonical game (strict or with ties), in canonical ordering.
pub fn canonical_games() -> Vec<OrdinalGame> {
    let vs = all_rank_vectors();
    let set: BTreeSet<OrdinalGame> = vs
        .iter()
        .flat_map(|&r| vs.iter().map(move |&c| canonicalize(&OrdinalGame::new(r, c)).game))
        .collect();
    set.into_iter().collect()
}

pub fn enumerate_ties_census() -> TieCensus {
    let games = canonical_games();
    let mut matrix = [[0usize; 8]; 8];
    let mut orbits = BTreeSet::new();
    for g in &games {
        let (r, c) = class_pair(g);
        matrix[r as usize][c as usize] += 1;
        let t = canonicalize(&g.transpose_players()).game;
        orbits.insert((*g).min(t));
    }
    TieCensus {
        matrix,
        total: games.len(),
        player_swap_total: orbits.len(),
    }
}

// ---------------------------------------------------------------------------
// Lattice and natural order

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum BlockPosition {
    /// Strict games keep their atlas coordinate.
    Atlas(StrictGameId),
    /// 1-based position in canonical ordering within a non-strict block.
    Ordinal(u16),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct NaturalOrderCoordinate {
    pub row_class_index: u8,
    pub col_class_index: u8,
    pub within_block: BlockPosition,
}

/// All 1413 canonical games joined by single half-swaps.
#[derive(Debug, Clone)]
pub struct TieLattice {
    nodes: Vec<OrdinalGame>,
    index: HashMap<OrdinalGame, usize>,
    /// Sorted by target node (canonical order), then operation.
    adjacency: Vec<Vec<(HalfSwapOp, usize)>>,
    block_position: Vec<u16>,
}

impl TieLattice {
    pub fn build() -> Self {
        let nodes = canonical_games();
        let index: HashMap<OrdinalGame, usize> =
            nodes.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let mut adjacency = Vec::with_capacity(nodes.len());
        for g in &nodes {
            let mut out: Vec<(HalfSwapOp, usize)> = Vec::new();
            for player in Player::BOTH {
                let ranks = g.ranks(player);
                for rank in 1..ranks.distinct() {
                    let t = make_tie(g, player, rank).expect("rank present");
                    out.push((HalfSwapOp::Make { player, rank }, index[&t]));
                }
                for value in 1..=ranks.distinct() {
                    if ranks.multiplicity(value) >= 2 {
                        for t in break_tie(g, player, value).expect("value tied") {
                            out.push((HalfSwapOp::Break { player, value }, index[&t]));
                        }
                    }
                }
            }
            out.sort_by_key(|&(op, t)| (t, op));
            out.dedup_by_key(|&mut (_, t)| t);
            adjacency.push(out);
        }
        let mut counters: HashMap<(PreferenceClass, PreferenceClass), u16> = HashMap::new();
        let block_position = nodes
            .iter()
            .map(|g| {
                let n = counters.entry(class_pair(g)).or_default();
                *n += 1;
                *n
            })
            .collect();
        TieLattice { nodes, index, adjacency, block_position }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn games(&self) -> &[OrdinalGame] {
        &self.nodes
    }

    pub fn contains(&self, game: &OrdinalGame) -> bool {
        self.index.contains_key(game)
    }

    /// Half-swap neighbors of a game, ordered by target.
    pub fn neighbors(&self, game: &OrdinalGame) -> Vec<(HalfSwapOp, OrdinalGame)> {
        let i = self.index[&canonicalize(game).game];
        self.adjacency[i].iter().map(|&(op, t)| (op, self.nodes[t])).collect()
    }

    /// Each undirected lattice edge once, lower node first.
    pub fn edges(&self) -> impl Iterator<Item = (OrdinalGame, OrdinalGame, HalfSwapOp)> + '_ {
        self.adjacency.iter().enumerate().flat_map(move |(i, adj)| {
            adj.iter()
                .filter(move |&&(_, t)| i < t)
                .map(move |&(op, t)| (self.nodes[i], self.nodes[t], op))
        })
    }

    /// Breadth-first minimum half-swap path; neighbors are expanded in
    /// canonical order of the target game.
    pub fn half_swap_path(&self, from: &OrdinalGame, to: &OrdinalGame) -> Vec<HalfSwapStep> {
        let src = self.index[&canonicalize(from).game];
        let dst = self.index[&canonicalize(to).game];
        let mut parent: Vec<Option<(usize, HalfSwapOp)>> = vec![None; self.nodes.len()];
        let mut seen = vec![false; self.nodes.len()];
        seen[src] = true;
        let mut queue = VecDeque::from([src]);
        while let Some(i) = queue.pop_front() {
            if i == dst {
                break;
            }
            for &(op, t) in &self.adjacency[i] {
                if !seen[t] {
                    seen[t] = true;
                    parent[t] = Some((i, op));
                    queue.push_back(t);
                }
            }
        }
        let mut steps = Vec::new();
        let mut at = dst;
        while let Some((prev, op)) = parent[at] {
            steps.push(HalfSwapStep { op, from: self.nodes[prev], to: self.nodes[at] });
            at = prev;
        }
        steps.reverse();
        steps
    }

    pub fn natural_order_coordinate(&self, game: &OrdinalGame) -> NaturalOrderCoordinate {
        let g = canonicalize(game).game;
        let (r, c) = class_pair(&g);
        let within_block = if g.is_strict() {
            BlockPosition::Atlas(strict_game_id(&g).expect("strict"))
        } else {
            BlockPosition::Ordinal(self.block_position[self.index[&g]])
        };
        NaturalOrderCoordinate {
            row_class_index: r.axis_index(),
            col_class_index: c.axis_index(),
            within_block,
        }
    }

    /// Inverse of [`natural_order_coordinate`](Self::natural_order_coordinate).
    pub fn game_at(&self, coord: &NaturalOrderCoordinate) -> Option<OrdinalGame> {
        let r = PreferenceClass::from_axis_index(coord.row_class_index)?;
        let c = PreferenceClass::from_axis_index(coord.col_class_index)?;
        match coord.within_block {
            BlockPosition::Atlas(id) => {
                (r == PreferenceClass::H && c == PreferenceClass::H)
                    .then(|| crate::atlas::game_for_id(id))
            }
            BlockPosition::Ordinal(n) => self
                .nodes
                .iter()
                .zip(&self.block_position)
                .find(|&(g, &p)| p == n && class_pair(g) == (r, c) && !g.is_strict())
                .map(|(g, _)| *g),
        }
    }
}

/// Shared lattice, built on first use.
pub fn tie_lattice() -> &'static TieLattice {
    static LATTICE: OnceLock<TieLattice> = OnceLock::new();
    LATTICE.get_or_init(TieLattice::build)
}

pub fn half_swap_path(from: &OrdinalGame, to: &OrdinalGame) -> Vec<HalfSwapStep> {
    tie_lattice().half_swap_path(from, to)
}

pub fn natural_order_coordinate(game: &OrdinalGame) -> NaturalOrderCoordinate {
    tie_lattice().natural_order_coordinate(game)
}
