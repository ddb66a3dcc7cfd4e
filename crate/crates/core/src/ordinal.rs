//! 2×2 ordinal games, possibly with ties, and their per-game solution concepts.
//!
//! Cells are indexed in the fixed order `UL, UR, DL, DR`. A row flip exchanges
//! `U` and `D` (index `^ 2`), a column flip exchanges `L` and `R` (index `^ 1`).

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Player {
    Row,
    Col,
}

impl Player {
    pub const BOTH: [Player; 2] = [Player::Row, Player::Col];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum RowMove {
    U,
    D,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ColMove {
    L,
    R,
}

/// One of the four strategy profiles of a 2×2 game.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Cell {
    UL,
    UR,
    DL,
    DR,
}

pub type StrategyProfile = Cell;

impl Cell {
    pub const ALL: [Cell; 4] = [Cell::UL, Cell::UR, Cell::DL, Cell::DR];

    pub fn new(row: RowMove, col: ColMove) -> Cell {
        Cell::from_index((row as usize) * 2 + col as usize)
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Cell {
        Cell::ALL[i]
    }

    pub fn row_move(self) -> RowMove {
        if self.index() < 2 {
            RowMove::U
        } else {
            RowMove::D
        }
    }

    pub fn col_move(self) -> ColMove {
        if self.index().is_multiple_of(2) {
            ColMove::L
        } else {
            ColMove::R
        }
    }

    /// The cell reached when the row player changes move.
    pub fn row_deviation(self) -> Cell {
        Cell::from_index(self.index() ^ 2)
    }

    /// The cell reached when the column player changes move.
    pub fn col_deviation(self) -> Cell {
        Cell::from_index(self.index() ^ 1)
    }

    /// Reached when `player` deviates.
    pub fn deviation(self, player: Player) -> Cell {
        match player {
            Player::Row => self.row_deviation(),
            Player::Col => self.col_deviation(),
        }
    }

    pub fn opposite(self) -> Cell {
        Cell::from_index(self.index() ^ 3)
    }

    /// Reflection across the main diagonal (`UR` ↔ `DL`).
    pub fn mirror(self) -> Cell {
        match self {
            Cell::UR => Cell::DL,
            Cell::DL => Cell::UR,
            c => c,
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A dense ranking of the four cells: the values are exactly `1..=k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct RankVector([u8; 4]);

impl RankVector {
    pub fn new(ranks: [u8; 4]) -> Result<Self> {
        let mut seen = [false; 5];
        for &r in &ranks {
            if r == 0 || r > 4 {
                return Err(Error::InvalidRanking(ranks));
            }
            seen[r as usize] = true;
        }
        let k = ranks.iter().copied().max().unwrap_or(0) as usize;
        if (1..=k).all(|v| seen[v]) {
            Ok(RankVector(ranks))
        } else {
            Err(Error::InvalidRanking(ranks))
        }
    }

    /// Dense re-ranking of arbitrary comparable values (equal values share a rank).
    pub fn dense_from<T: PartialOrd + Copy>(values: [T; 4]) -> Self {
        let mut ranks = [0u8; 4];
        for i in 0..4 {
            let mut below: Vec<T> = Vec::new();
            for &v in &values {
                if v < values[i] && !below.iter().any(|&b| !(b < v) && !(v < b)) {
                    below.push(v);
                }
            }
            ranks[i] = below.len() as u8 + 1;
        }
        RankVector(ranks)
    }

    pub fn as_array(&self) -> [u8; 4] {
        self.0
    }

    pub fn get(&self, cell: Cell) -> u8 {
        self.0[cell.index()]
    }

    /// Number of distinct values, `k`.
    pub fn distinct(&self) -> u8 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn is_strict(&self) -> bool {
        self.distinct() == 4
    }

    /// How many cells hold `value`.
    pub fn multiplicity(&self, value: u8) -> usize {
        self.0.iter().filter(|&&r| r == value).count()
    }

    pub fn cells_with(&self, value: u8) -> impl Iterator<Item = Cell> + '_ {
        Cell::ALL.into_iter().filter(move |&c| self.get(c) == value)
    }

    /// The cell holding the top rank when it is unique.
    pub fn unique_top(&self) -> Option<Cell> {
        let top = self.distinct();
        (self.multiplicity(top) == 1).then(|| self.cells_with(top).next().unwrap())
    }

    pub(crate) fn permuted(&self, f: impl Fn(Cell) -> Cell) -> Self {
        let mut out = [0u8; 4];
        for c in Cell::ALL {
            out[f(c).index()] = self.get(c);
        }
        RankVector(out)
    }
}

impl fmt::Display for RankVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "{a}{b}{c}{d}")
    }
}

/// Two rank vectors over the same four cells. Ordering is lexicographic on
/// row ranks, then column ranks, in cell order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct OrdinalGame {
    row: RankVector,
    col: RankVector,
}

/// Build a game from raw cell-indexed ranks (`UL, UR, DL, DR`).
pub fn make_game(row_ranks: [u8; 4], col_ranks: [u8; 4]) -> Result<OrdinalGame> {
    Ok(OrdinalGame::new(RankVector::new(row_ranks)?, RankVector::new(col_ranks)?))
}

impl OrdinalGame {
    pub fn new(row: RankVector, col: RankVector) -> Self {
        OrdinalGame { row, col }
    }

    pub fn prisoners_dilemma() -> Self {
        OrdinalGame::new(RankVector([1, 3, 2, 4]), RankVector([4, 3, 2, 1]))
    }

    pub fn chicken() -> Self {
        OrdinalGame::new(RankVector([2, 3, 1, 4]), RankVector([4, 3, 1, 2]))
    }

    /// Both players indifferent between all outcomes.
    pub fn null() -> Self {
        OrdinalGame::new(RankVector([1; 4]), RankVector([1; 4]))
    }

    pub fn row(&self) -> RankVector {
        self.row
    }

    pub fn col(&self) -> RankVector {
        self.col
    }

    pub fn ranks(&self, player: Player) -> RankVector {
        match player {
            Player::Row => self.row,
            Player::Col => self.col,
        }
    }

    pub(crate) fn with_ranks(&self, player: Player, ranks: RankVector) -> Self {
        match player {
            Player::Row => OrdinalGame::new(ranks, self.col),
            Player::Col => OrdinalGame::new(self.row, ranks),
        }
    }

    pub fn payoff(&self, cell: Cell) -> (u8, u8) {
        (self.row.get(cell), self.col.get(cell))
    }

    pub fn is_strict(&self) -> bool {
        self.row.is_strict() && self.col.is_strict()
    }

    pub fn flip_rows(&self) -> Self {
        let f = |c: Cell| c.row_deviation();
        OrdinalGame::new(self.row.permuted(f), self.col.permuted(f))
    }

    pub fn flip_cols(&self) -> Self {
        let f = |c: Cell| c.col_deviation();
        OrdinalGame::new(self.row.permuted(f), self.col.permuted(f))
    }

    fn flipped(&self, rows: bool, cols: bool) -> Self {
        let g = if rows { self.flip_rows() } else { *self };
        if cols {
            g.flip_cols()
        } else {
            g
        }
    }

    /// Exchange the roles of the two players.
    pub fn transpose_players(&self) -> Self {
        OrdinalGame::new(self.col.permuted(Cell::mirror), self.row.permuted(Cell::mirror))
    }

    pub fn canonicalize(&self) -> Canonical {
        canonicalize(self)
    }
}

impl fmt::Display for OrdinalGame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = |c| self.payoff(c);
        let (a, b, c, d) = (p(Cell::UL), p(Cell::UR), p(Cell::DL), p(Cell::DR));
        write!(
            f,
            "game({},{};{},{}/{},{};{},{})",
            a.0, a.1, b.0, b.1, c.0, c.1, d.0, d.1
        )
    }
}

/// Which flips carried a game into canonical orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Quadrant {
    NE,
    NW,
    SE,
    SW,
}

impl Quadrant {
    fn from_flips(row_flip: bool, col_flip: bool) -> Quadrant {
        match (row_flip, col_flip) {
            (false, false) => Quadrant::NE,
            (true, false) => Quadrant::SE,
            (false, true) => Quadrant::NW,
            (true, true) => Quadrant::SW,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Canonical {
    pub game: OrdinalGame,
    pub quadrant: Quadrant,
    pub row_flip: bool,
    pub col_flip: bool,
}

/// Orient a game so the row player's top rank is in column `R` and the column
/// player's top rank is in row `U`. When either top rank is shared, fall back
/// to the lexicographically least image under the flip group.
pub fn canonicalize(game: &OrdinalGame) -> Canonical {
    if let (Some(rt), Some(ct)) = (game.row.unique_top(), game.col.unique_top()) {
        let col_flip = rt.col_move() == ColMove::L;
        let row_flip = ct.row_move() == RowMove::D;
        return Canonical {
            game: game.flipped(row_flip, col_flip),
            quadrant: Quadrant::from_flips(row_flip, col_flip),
            row_flip,
            col_flip,
        };
    }
    let mut best = (*game, false, false);
    for (r, c) in [(false, true), (true, false), (true, true)] {
        let g = game.flipped(r, c);
        if g < best.0 {
            best = (g, r, c);
        }
    }
    Canonical {
        game: best.0,
        quadrant: Quadrant::NE,
        row_flip: best.1,
        col_flip: best.2,
    }
}

/// All four images of a game under the row/column flip group.
pub fn flip_orbit(game: &OrdinalGame) -> [OrdinalGame; 4] {
    [
        *game,
        game.flip_rows(),
        game.flip_cols(),
        game.flip_rows().flip_cols(),
    ]
}

/// All 75 dense rank vectors over four cells, in lexicographic order.
pub fn all_rank_vectors() -> Vec<RankVector> {
    let mut out = Vec::with_capacity(75);
    for a in 1..=4u8 {
        for b in 1..=4u8 {
            for c in 1..=4u8 {
                for d in 1..=4u8 {
                    if let Ok(v) = RankVector::new([a, b, c, d]) {
                        out.push(v);
                    }
                }
            }
        }
    }
    out
}

/// The 24 strict rank vectors, in lexicographic order.
pub fn strict_rank_vectors() -> Vec<RankVector> {
    all_rank_vectors().into_iter().filter(RankVector::is_strict).collect()
}

// ---------------------------------------------------------------------------
// Solution concepts

/// Weak pure Nash equilibria: no player can strictly improve by deviating alone.
pub fn pure_nash(game: &OrdinalGame) -> Vec<Cell> {
    Cell::ALL
        .into_iter()
        .filter(|&c| {
            game.row.get(c) >= game.row.get(c.row_deviation())
                && game.col.get(c) >= game.col.get(c.col_deviation())
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Dominance<M> {
    pub strategy: M,
    /// Strictly better against both opposing moves.
    pub strict: bool,
}

fn dominates(mine: [u8; 2], theirs: [u8; 2]) -> Option<bool> {
    let weakly = mine[0] >= theirs[0] && mine[1] >= theirs[1];
    let some = mine[0] > theirs[0] || mine[1] > theirs[1];
    (weakly && some).then_some(mine[0] > theirs[0] && mine[1] > theirs[1])
}

pub fn dominant_strategies(
    game: &OrdinalGame,
) -> (Option<Dominance<RowMove>>, Option<Dominance<ColMove>>) {
    let r = |c| game.row.get(c);
    let k = |c| game.col.get(c);
    let up = [r(Cell::UL), r(Cell::UR)];
    let down = [r(Cell::DL), r(Cell::DR)];
    let left = [k(Cell::UL), k(Cell::DL)];
    let right = [k(Cell::UR), k(Cell::DR)];

    let row = dominates(up, down)
        .map(|strict| Dominance { strategy: RowMove::U, strict })
        .or_else(|| dominates(down, up).map(|strict| Dominance { strategy: RowMove::D, strict }));
    let col = dominates(left, right)
        .map(|strict| Dominance { strategy: ColMove::L, strict })
        .or_else(|| dominates(right, left).map(|strict| Dominance { strategy: ColMove::R, strict }));
    (row, col)
}

/// Cells not weakly Pareto-dominated by another cell.
pub fn pareto_optimal(game: &OrdinalGame) -> Vec<Cell> {
    Cell::ALL
        .into_iter()
        .filter(|&c| !Cell::ALL.into_iter().any(|o| pareto_dominates(game, o, c)))
        .collect()
}

/// `a` is at least as good as `b` for both players and better for one.
pub fn pareto_dominates(game: &OrdinalGame, a: Cell, b: Cell) -> bool {
    let (ar, ac) = game.payoff(a);
    let (br, bc) = game.payoff(b);
    ar >= br && ac >= bc && (ar > br || ac > bc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Maximin {
    pub row: RowMove,
    pub row_guarantee: u8,
    /// Both row strategies guarantee the same rank; `U` was reported.
    pub row_tied: bool,
    pub col: ColMove,
    pub col_guarantee: u8,
    pub col_tied: bool,
}

pub fn maximin(game: &OrdinalGame) -> Maximin {
    let r = |c| game.row.get(c);
    let k = |c| game.col.get(c);
    let up = r(Cell::UL).min(r(Cell::UR));
    let down = r(Cell::DL).min(r(Cell::DR));
    let left = k(Cell::UL).min(k(Cell::DL));
    let right = k(Cell::UR).min(k(Cell::DR));
    Maximin {
        row: if down > up { RowMove::D } else { RowMove::U },
        row_guarantee: up.max(down),
        row_tied: up == down,
        col: if right > left { ColMove::R } else { ColMove::L },
        col_guarantee: left.max(right),
        col_tied: left == right,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Alignment {
    PureCommon,
    PureConflict,
    Mixed,
}

pub fn alignment(game: &OrdinalGame) -> Alignment {
    if game.row == game.col {
        return Alignment::PureCommon;
    }
    let sum = |c: Cell| game.row.get(c) + game.col.get(c);
    if Cell::ALL.into_iter().all(|c| sum(c) == sum(Cell::UL)) {
        Alignment::PureConflict
    } else {
        Alignment::Mixed
    }
}

pub fn is_symmetric(game: &OrdinalGame) -> bool {
    canonicalize(game).game == canonicalize(&game.transpose_players()).game
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub nash_profiles: Vec<Cell>,
    pub nash_payoffs: Vec<(u8, u8)>,
    pub dominant_row: Option<Dominance<RowMove>>,
    pub dominant_col: Option<Dominance<ColMove>>,
    pub pareto_optimal: Vec<Cell>,
    pub pareto_inferior_equilibria: Vec<Cell>,
    pub maximin: Maximin,
    pub symmetric: bool,
    pub alignment: Alignment,
}

pub fn analyze_game(game: &OrdinalGame) -> AnalysisReport {
    let nash_profiles = pure_nash(game);
    let mut nash_payoffs: Vec<(u8, u8)> = nash_profiles.iter().map(|&c| game.payoff(c)).collect();
    nash_payoffs.sort_unstable();
    nash_payoffs.dedup();
    let pareto = pareto_optimal(game);
    let pareto_inferior_equilibria =
        nash_profiles.iter().copied().filter(|c| !pareto.contains(c)).collect();
    let (dominant_row, dominant_col) = dominant_strategies(game);
    AnalysisReport {
        nash_profiles,
        nash_payoffs,
        dominant_row,
        dominant_col,
        pareto_optimal: pareto,
        pareto_inferior_equilibria,
        maximin: maximin(game),
        symmetric: is_symmetric(game),
        alignment: alignment(game),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(row: [u8; 4], col: [u8; 4]) -> OrdinalGame {
        make_game(row, col).unwrap()
    }

    fn all_games() -> Vec<OrdinalGame> {
        let vs = all_rank_vectors();
        vs.iter()
            .flat_map(|&r| vs.iter().map(move |&c| OrdinalGame::new(r, c)))
            .collect()
    }

    #[test]
    fn make_game_examples() {
        let pd = g([1, 3, 2, 4], [4, 3, 2, 1]);
        assert_eq!(pd, OrdinalGame::prisoners_dilemma());
        assert_eq!(g([1; 4], [1; 4]), OrdinalGame::null());
        assert_eq!(
            make_game([1, 3, 3, 4], [1, 2, 3, 4]),
            Err(Error::InvalidRanking([1, 3, 3, 4]))
        );
        assert!(make_game([1, 2, 2, 4], [1; 4]).is_err());
        assert!(make_game([0, 1, 2, 3], [1; 4]).is_err());
        assert!(make_game([1, 2, 3, 5], [1; 4]).is_err());
    }

    #[test]
    fn there_are_75_dense_vectors() {
        assert_eq!(all_rank_vectors().len(), 75);
        assert_eq!(strict_rank_vectors().len(), 24);
    }

    #[test]
    fn dense_from_reals() {
        assert_eq!(RankVector::dense_from([0.5, 0.5, -1.0, 9.0]).as_array(), [2, 2, 1, 3]);
        assert_eq!(RankVector::dense_from([3, 1, 4, 2]).as_array(), [3, 1, 4, 2]);
    }

    #[test]
    fn pure_nash_examples() {
        let pd = OrdinalGame::prisoners_dilemma();
        assert_eq!(pure_nash(&pd), vec![Cell::DL]);
        assert_eq!(pd.payoff(Cell::DL), (2, 2));

        let pennies = g([4, 2, 1, 3], [2, 4, 3, 1]);
        assert!(pure_nash(&pennies).is_empty());

        let assurance = g([1, 4, 2, 3], [3, 4, 2, 1]);
        assert_eq!(pure_nash(&assurance), vec![Cell::UR, Cell::DL]);
        assert_eq!(analyze_game(&assurance).nash_payoffs, vec![(2, 2), (4, 4)]);
    }

    #[test]
    fn null_game_every_cell_is_equilibrium() {
        assert_eq!(pure_nash(&OrdinalGame::null()).len(), 4);
    }

    #[test]
    fn dominance_examples() {
        let (r, c) = dominant_strategies(&OrdinalGame::prisoners_dilemma());
        assert_eq!(r, Some(Dominance { strategy: RowMove::D, strict: true }));
        assert_eq!(c, Some(Dominance { strategy: ColMove::L, strict: true }));

        let assurance = g([1, 4, 2, 3], [3, 4, 2, 1]);
        assert_eq!(dominant_strategies(&assurance), (None, None));

        let d = g([2, 1, 3, 4], [1, 2, 3, 4]);
        assert_eq!(dominant_strategies(&g([2, 3, 1, 4], [1, 2, 3, 4])).0, None);
        assert_eq!(
            dominant_strategies(&d).0,
            Some(Dominance { strategy: RowMove::D, strict: true }),
        );
        let weak = g([1, 2, 1, 1], [1; 4]);
        assert_eq!(
            dominant_strategies(&weak).0,
            Some(Dominance { strategy: RowMove::U, strict: false }),
        );
    }

    #[test]
    fn analysis_of_pd() {
        let rep = analyze_game(&OrdinalGame::prisoners_dilemma());
        assert_eq!(rep.nash_payoffs, vec![(2, 2)]);
        assert_eq!(rep.pareto_inferior_equilibria, vec![Cell::DL]);
        assert!(rep.symmetric);
        assert_eq!(rep.alignment, Alignment::Mixed);
        assert_eq!(rep.pareto_optimal, vec![Cell::UL, Cell::UR, Cell::DR]);
    }

    #[test]
    fn alignment_examples() {
        assert_eq!(alignment(&g([4, 3, 2, 1], [1, 2, 3, 4])), Alignment::PureConflict);
        let common = g([2, 4, 1, 3], [2, 4, 1, 3]);
        assert_eq!(alignment(&common), Alignment::PureCommon);
        assert_eq!(pure_nash(&common), vec![Cell::UR]);
    }

    #[test]
    fn maximin_reports_ties() {
        let m = maximin(&OrdinalGame::prisoners_dilemma());
        assert_eq!((m.row, m.row_guarantee, m.row_tied), (RowMove::D, 2, false));
        assert_eq!((m.col, m.col_guarantee, m.col_tied), (ColMove::L, 2, false));
        let m = maximin(&OrdinalGame::null());
        assert!(m.row_tied && m.col_tied);
        assert_eq!((m.row, m.col), (RowMove::U, ColMove::L));
    }

    #[test]
    fn transpose_examples() {
        let pd = OrdinalGame::prisoners_dilemma();
        assert_ne!(pd.transpose_players(), pd);
        assert_eq!(canonicalize(&pd.transpose_players()).game, pd);
        for game in all_games() {
            assert_eq!(game.transpose_players().transpose_players(), game);
        }
    }

    #[test]
    fn canonicalize_examples() {
        let pd = OrdinalGame::prisoners_dilemma();
        let c = canonicalize(&pd.flip_rows());
        assert_eq!(c.game, pd);
        assert_eq!(c.quadrant, Quadrant::SE);
        assert_eq!(canonicalize(&pd.flip_cols()).quadrant, Quadrant::NW);
        assert_eq!(canonicalize(&pd.flip_cols().flip_rows()).quadrant, Quadrant::SW);
        let c = canonicalize(&pd);
        assert_eq!((c.game, c.quadrant), (pd, Quadrant::NE));
        let c = canonicalize(&OrdinalGame::null());
        assert_eq!((c.game, c.quadrant), (OrdinalGame::null(), Quadrant::NE));
    }

    #[test]
    fn involutions_and_canonical_orbits() {
        for game in all_games() {
            assert_eq!(game.flip_rows().flip_rows(), game);
            assert_eq!(game.flip_cols().flip_cols(), game);
            let canon = canonicalize(&game).game;
            assert_eq!(canonicalize(&canon).game, canon);
            for image in flip_orbit(&game) {
                assert_eq!(canonicalize(&image).game, canon);
            }
        }
    }

    #[test]
    fn exactly_144_canonical_strict_games() {
        let vs = strict_rank_vectors();
        let mut set = std::collections::BTreeSet::new();
        for &r in &vs {
            for &c in &vs {
                set.insert(canonicalize(&OrdinalGame::new(r, c)).game);
            }
        }
        assert_eq!(set.len(), 144);
    }

    #[test]
    fn strict_dominance_and_equilibrium_counts() {
        let vs = strict_rank_vectors();
        for &r in &vs {
            for &c in &vs {
                let game = OrdinalGame::new(r, c);
                let ne = pure_nash(&game);
                assert!(ne.len() <= 2);
                let (dr, dc) = dominant_strategies(&game);
                if dr.is_some() || dc.is_some() {
                    assert_eq!(ne.len(), 1, "{game}");
                }
                if let (Some(dr), Some(dc)) = (dr, dc) {
                    assert_eq!(ne, vec![Cell::new(dr.strategy, dc.strategy)]);
                    assert!(dr.strict && dc.strict);
                }
                if ne.is_empty() {
                    assert!(dr.is_none() && dc.is_none());
                }
                if alignment(&game) == Alignment::PureConflict {
                    assert!(Cell::ALL.iter().all(|&x| {
                        let (a, b) = game.payoff(x);
                        a + b == 5
                    }));
                }
            }
        }
    }

    #[test]
    fn transpose_preserves_alignment_and_mirrors_equilibria() {
        for game in all_games() {
            let t = game.transpose_players();
            assert_eq!(alignment(&t), alignment(&game));
            let mut mirrored: Vec<Cell> = pure_nash(&game).into_iter().map(Cell::mirror).collect();
            mirrored.sort();
            assert_eq!(pure_nash(&t), mirrored);
        }
    }
}
