//! The swap graph over the 144 canonical strict games.
//!
//! Every strict game gets a `(layer, row, column)` coordinate. The layer is fixed
//! by where the two players' 4s sit; the row index depends only on the row
//! player's ranks and the column index only on the column player's ranks.
//! Within a layer, adjacent rows (cyclically) differ by one row-player Low or
//! Mid swap, so each layer is a 6×6 torus, and the Low-swap pairs
//! `{6,1}, {2,3}, {4,5}` form the tiles.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::families::{classify_family, Subfamily};
use crate::ordinal::{
    canonicalize, dominant_strategies, strict_rank_vectors, Cell, OrdinalGame, Player, RankVector,
};

pub const GAME_COUNT: usize = 144;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StrictGameId {
    pub layer: u8,
    pub row: u8,
    pub col: u8,
}

impl StrictGameId {
    pub const PRISONERS_DILEMMA: StrictGameId = StrictGameId { layer: 1, row: 1, col: 1 };

    pub fn new(layer: u8, row: u8, col: u8) -> Result<Self> {
        if (1..=4).contains(&layer) && (1..=6).contains(&row) && (1..=6).contains(&col) {
            Ok(StrictGameId { layer, row, col })
        } else {
            Err(Error::InvalidId(format!("{layer}{row}{col}")))
        }
    }

    /// Position in `0..144`, ordered by layer, row, column.
    pub fn index(self) -> usize {
        (self.layer as usize - 1) * 36 + (self.row as usize - 1) * 6 + (self.col as usize - 1)
    }

    pub fn from_index(i: usize) -> Self {
        assert!(i < GAME_COUNT);
        StrictGameId {
            layer: (i / 36) as u8 + 1,
            row: (i % 36 / 6) as u8 + 1,
            col: (i % 6) as u8 + 1,
        }
    }

    pub fn all() -> impl Iterator<Item = StrictGameId> {
        (0..GAME_COUNT).map(StrictGameId::from_index)
    }

    pub fn tile(self) -> TileId {
        TileId {
            layer: self.layer,
            tile_row: tile_of(self.row),
            tile_col: tile_of(self.col),
        }
    }
}

impl fmt::Display for StrictGameId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.layer, self.row, self.col)
    }
}

impl FromStr for StrictGameId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let digits: Vec<u8> = s
            .bytes()
            .map(|b| b.wrapping_sub(b'0'))
            .collect();
        match digits[..] {
            [l, r, c] => StrictGameId::new(l, r, c),
            _ => Err(Error::InvalidId(s.to_string())),
        }
    }
}

impl Serialize for StrictGameId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Rows (or columns) `6,1` form tile 1, `2,3` tile 2 and `4,5` tile 3.
pub fn tile_of(index: u8) -> u8 {
    (index % 6) / 2 + 1
}

pub fn tile_members(tile: u8) -> [u8; 2] {
    match tile {
        1 => [6, 1],
        2 => [2, 3],
        3 => [4, 5],
        _ => panic!("tile index out of range: {tile}"),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TileId {
    pub layer: u8,
    pub tile_row: u8,
    pub tile_col: u8,
}

impl TileId {
    pub fn index(self) -> usize {
        (self.layer as usize - 1) * 9 + (self.tile_row as usize - 1) * 3 + self.tile_col as usize - 1
    }

    pub fn from_index(i: usize) -> Self {
        TileId {
            layer: (i / 9) as u8 + 1,
            tile_row: (i % 9 / 3) as u8 + 1,
            tile_col: (i % 3) as u8 + 1,
        }
    }

    pub fn games(self) -> [StrictGameId; 4] {
        let [r0, r1] = tile_members(self.tile_row);
        let [c0, c1] = tile_members(self.tile_col);
        let id = |row, col| StrictGameId { layer: self.layer, row, col };
        [id(r0, c0), id(r0, c1), id(r1, c0), id(r1, c1)]
    }
}

impl fmt::Display for TileId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{}{}{}", self.layer, self.tile_row, self.tile_col)
    }
}

/// Which pair of adjacent ranks a swap exchanges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum SwapKind {
    /// 1↔2
    Low,
    /// 2↔3
    Mid,
    /// 3↔4
    High,
}

impl SwapKind {
    pub const ALL: [SwapKind; 3] = [SwapKind::Low, SwapKind::Mid, SwapKind::High];

    pub fn lower_rank(self) -> u8 {
        self as u8 + 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SwapEdge {
    pub player: Player,
    pub kind: SwapKind,
}

impl SwapEdge {
    /// Row before column, Low < Mid < High.
    pub const ALL: [SwapEdge; 6] = [
        SwapEdge { player: Player::Row, kind: SwapKind::Low },
        SwapEdge { player: Player::Row, kind: SwapKind::Mid },
        SwapEdge { player: Player::Row, kind: SwapKind::High },
        SwapEdge { player: Player::Col, kind: SwapKind::Low },
        SwapEdge { player: Player::Col, kind: SwapKind::Mid },
        SwapEdge { player: Player::Col, kind: SwapKind::High },
    ];
}

impl fmt::Display for SwapEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}-{:?}", self.player, self.kind)
    }
}

fn swap_values(ranks: RankVector, lower: u8) -> RankVector {
    let mut out = ranks.as_array();
    for r in out.iter_mut() {
        if *r == lower {
            *r = lower + 1;
        } else if *r == lower + 1 {
            *r = lower;
        }
    }
    RankVector::new(out).expect("swapping ranks keeps a ranking dense")
}

/// Exchange one player's ranks `r` and `r+1` and re-canonicalize.
pub fn apply_swap(game: &OrdinalGame, player: Player, kind: SwapKind) -> Result<OrdinalGame> {
    if !game.is_strict() {
        return Err(Error::NotStrict);
    }
    let swapped = swap_values(game.ranks(player), kind.lower_rank());
    Ok(canonicalize(&game.with_ranks(player, swapped)).game)
}

// ---------------------------------------------------------------------------
// Coordinates

/// A player's ranks relative to the cell holding their 4:
/// `(opposite cell, cell reached by own deviation, cell reached by the
/// opponent's deviation)`.
type Pattern = [u8; 3];

fn other(player: Player) -> Player {
    match player {
        Player::Row => Player::Col,
        Player::Col => Player::Row,
    }
}

fn pattern_cells(top: Cell, player: Player) -> [Cell; 3] {
    [top.opposite(), top.deviation(player), top.deviation(other(player))]
}

fn pattern_of(ranks: RankVector, player: Player) -> Pattern {
    let top = ranks.unique_top().expect("strict ranks have a unique 4");
    pattern_cells(top, player).map(|c| ranks.get(c))
}

fn swap_in_pattern(p: Pattern, lower: u8) -> Pattern {
    p.map(|r| {
        if r == lower {
            lower + 1
        } else if r == lower + 1 {
            lower
        } else {
            r
        }
    })
}

/// The six patterns in index order: start from the Prisoner's Dilemma
/// pattern and alternate Mid, Low, Mid, Low, Mid swaps. The dominant-strategy
/// patterns come first and the Low-swap pairs land on `{2,3}, {4,5}, {6,1}`.
fn index_patterns() -> [Pattern; 6] {
    let pd = OrdinalGame::prisoners_dilemma();
    let mut out = [pattern_of(pd.row(), Player::Row); 6];
    for i in 1..6 {
        let kind = if i % 2 == 1 { SwapKind::Mid } else { SwapKind::Low };
        out[i] = swap_in_pattern(out[i - 1], kind.lower_rank());
    }
    out
}

/// `(row player's 4, column player's 4)` in canonical orientation, per layer.
fn layer_tops(layer: u8) -> (Cell, Cell) {
    match layer {
        1 => (Cell::DR, Cell::UL),
        2 => (Cell::DR, Cell::UR),
        3 => (Cell::UR, Cell::UR),
        4 => (Cell::UR, Cell::UL),
        _ => panic!("layer out of range: {layer}"),
    }
}

fn layer_of_tops(row_top: Cell, col_top: Cell) -> u8 {
    (1..=4)
        .find(|&l| layer_tops(l) == (row_top, col_top))
        .expect("canonical strict games place 4s in column R and row U")
}

/// Compute the coordinate of a strict game from its ranks alone.
pub fn strict_game_id(game: &OrdinalGame) -> Result<StrictGameId> {
    if !game.is_strict() {
        return Err(Error::NotStrict);
    }
    let g = canonicalize(game).game;
    let patterns = index_patterns();
    let position = |player: Player| {
        let p = pattern_of(g.ranks(player), player);
        patterns.iter().position(|&q| q == p).expect("all six patterns are indexed") as u8 + 1
    };
    let row_top = g.row().unique_top().unwrap();
    let col_top = g.col().unique_top().unwrap();
    Ok(StrictGameId {
        layer: layer_of_tops(row_top, col_top),
        row: position(Player::Row),
        col: position(Player::Col),
    })
}

/// Inverse of [`strict_game_id`].
pub fn game_for_id(id: StrictGameId) -> OrdinalGame {
    let patterns = index_patterns();
    let (row_top, col_top) = layer_tops(id.layer);
    let fill = |top: Cell, player: Player, pattern: Pattern| {
        let mut ranks = [0u8; 4];
        ranks[top.index()] = 4;
        for (cell, r) in pattern_cells(top, player).into_iter().zip(pattern) {
            ranks[cell.index()] = r;
        }
        RankVector::new(ranks).expect("patterns are permutations of 1..3")
    };
    OrdinalGame::new(
        fill(row_top, Player::Row, patterns[id.row as usize - 1]),
        fill(col_top, Player::Col, patterns[id.col as usize - 1]),
    )
}

// ---------------------------------------------------------------------------
// The atlas

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub a: StrictGameId,
    pub b: StrictGameId,
    pub swap: SwapEdge,
}

/// Two tiles on two layers joined by both players' High swaps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Hotspot {
    pub tiles: [TileId; 2],
}

/// Four tiles on four layers forming a cycle of alternating Row-High and
/// Col-High links, starting from the smallest tile.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Pipe {
    pub tiles: [TileId; 4],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PathStep {
    pub swap: SwapEdge,
    pub from: StrictGameId,
    pub to: StrictGameId,
}

#[derive(Debug, Clone)]
pub struct TopologyAtlas {
    games: Vec<OrdinalGame>,
    lookup: HashMap<OrdinalGame, StrictGameId>,
    neighbors: Vec<[StrictGameId; 6]>,
    edges: Vec<Edge>,
    hotspots: Vec<Hotspot>,
    pipes: Vec<Pipe>,
}

fn violation(msg: impl Into<String>) -> Error {
    Error::ConstructionInvariantViolation(msg.into())
}

pub fn build_atlas() -> Result<TopologyAtlas> {
    let strict = strict_rank_vectors();
    let mut canonical: Vec<OrdinalGame> = strict
        .iter()
        .flat_map(|&r| strict.iter().map(move |&c| canonicalize(&OrdinalGame::new(r, c)).game))
        .collect();
    canonical.sort_unstable();
    canonical.dedup();
    if canonical.len() != GAME_COUNT {
        return Err(violation(format!("{} canonical strict games", canonical.len())));
    }

    let mut games = vec![None; GAME_COUNT];
    let mut lookup = HashMap::with_capacity(GAME_COUNT);
    for g in canonical {
        let id = strict_game_id(&g)?;
        if games[id.index()].replace(g).is_some() {
            return Err(violation(format!("two games assigned to {id}")));
        }
        lookup.insert(g, id);
    }
    let games: Vec<OrdinalGame> = games.into_iter().map(|g| g.expect("bijection")).collect();

    let mut neighbors = Vec::with_capacity(GAME_COUNT);
    for (i, g) in games.iter().enumerate() {
        let mut row = [StrictGameId::from_index(i); 6];
        for (slot, e) in row.iter_mut().zip(SwapEdge::ALL) {
            let target = apply_swap(g, e.player, e.kind)?;
            *slot = *lookup
                .get(&target)
                .ok_or_else(|| violation(format!("swap target of {g} not canonical")))?;
        }
        neighbors.push(row);
    }

    let mut edges = Vec::with_capacity(GAME_COUNT * 3);
    for (i, row) in neighbors.iter().enumerate() {
        let a = StrictGameId::from_index(i);
        for (&b, swap) in row.iter().zip(SwapEdge::ALL) {
            if a < b {
                edges.push(Edge { a, b, swap });
            }
        }
    }

    let mut atlas = TopologyAtlas {
        games,
        lookup,
        neighbors,
        edges,
        hotspots: Vec::new(),
        pipes: Vec::new(),
    };
    atlas.verify_anchors()?;
    let (hotspots, pipes) = detect_hotspots_and_pipes(&atlas)?;
    atlas.hotspots = hotspots;
    atlas.pipes = pipes;
    Ok(atlas)
}

impl TopologyAtlas {
    pub fn len(&self) -> usize {
        self.games.len()
    }

    pub fn is_empty(&self) -> bool {
        self.games.is_empty()
    }

    pub fn games(&self) -> impl Iterator<Item = (StrictGameId, OrdinalGame)> + '_ {
        self.games.iter().enumerate().map(|(i, &g)| (StrictGameId::from_index(i), g))
    }

    pub fn resolve(&self, id: StrictGameId) -> OrdinalGame {
        self.games[id.index()]
    }

    pub fn locate(&self, game: &OrdinalGame) -> Result<StrictGameId> {
        if !game.is_strict() {
            return Err(Error::NotStrict);
        }
        Ok(self.lookup[&canonicalize(game).game])
    }

    /// The six swap neighbors, in [`SwapEdge::ALL`] order.
    pub fn neighbors(&self, id: StrictGameId) -> [(SwapEdge, StrictGameId); 6] {
        let row = &self.neighbors[id.index()];
        std::array::from_fn(|i| (SwapEdge::ALL[i], row[i]))
    }

    pub fn neighbor(&self, id: StrictGameId, swap: SwapEdge) -> StrictGameId {
        let i = SwapEdge::ALL.iter().position(|&e| e == swap).unwrap();
        self.neighbors[id.index()][i]
    }

    /// Each undirected edge once, lower id first.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn hotspots(&self) -> &[Hotspot] {
        &self.hotspots
    }

    pub fn pipes(&self) -> &[Pipe] {
        &self.pipes
    }

    /// Tile reached from `tile` by one player's High swap.
    pub fn high_tile(&self, tile: TileId, player: Player) -> TileId {
        let swap = SwapEdge { player, kind: SwapKind::High };
        self.neighbor(tile.games()[0], swap).tile()
    }

    /// Breadth-first minimum swap path using only `kinds`. Neighbors are
    /// expanded in [`SwapEdge::ALL`] order, so ties resolve Row before Col and
    /// Low before Mid before High.
    pub fn shortest_path(
        &self,
        from: StrictGameId,
        to: StrictGameId,
        kinds: &[SwapKind],
    ) -> Result<Vec<PathStep>> {
        let mut parent: Vec<Option<(usize, SwapEdge)>> = vec![None; GAME_COUNT];
        let mut seen = [false; GAME_COUNT];
        let mut queue = VecDeque::from([from.index()]);
        seen[from.index()] = true;
        while let Some(i) = queue.pop_front() {
            if i == to.index() {
                break;
            }
            for (k, &next) in self.neighbors[i].iter().enumerate() {
                let swap = SwapEdge::ALL[k];
                if !kinds.contains(&swap.kind) || seen[next.index()] {
                    continue;
                }
                seen[next.index()] = true;
                parent[next.index()] = Some((i, swap));
                queue.push_back(next.index());
            }
        }
        if !seen[to.index()] {
            return Err(Error::Unreachable { from, to });
        }
        let mut steps = Vec::new();
        let mut at = to.index();
        while let Some((prev, swap)) = parent[at] {
            steps.push(PathStep {
                swap,
                from: StrictGameId::from_index(prev),
                to: StrictGameId::from_index(at),
            });
            at = prev;
        }
        steps.reverse();
        Ok(steps)
    }

    fn verify_anchors(&self) -> Result<()> {
        let pd = OrdinalGame::prisoners_dilemma();
        if self.resolve(StrictGameId::PRISONERS_DILEMMA) != pd {
            return Err(violation("Prisoner's Dilemma is not at 111"));
        }
        for (id, game) in self.games() {
            let nb = self.neighbors(id);
            let mut targets: Vec<StrictGameId> = nb.iter().map(|&(_, t)| t).collect();
            targets.sort_unstable();
            targets.dedup();
            if targets.len() != 6 || targets.contains(&id) {
                return Err(violation(format!("{id} does not have six distinct neighbors")));
            }
            for (swap, t) in nb {
                if self.neighbor(t, swap) != id {
                    return Err(violation(format!("{swap} is not an involution at {id}")));
                }
                let (moved, fixed) = match swap.player {
                    Player::Row => ((id.row, t.row), (id.col, t.col)),
                    Player::Col => ((id.col, t.col), (id.row, t.row)),
                };
                match swap.kind {
                    SwapKind::High => {
                        if t.layer == id.layer {
                            return Err(violation(format!("High swap at {id} stays in layer")));
                        }
                    }
                    kind => {
                        let step = (moved.0 % 6 + 1 == moved.1) || (moved.1 % 6 + 1 == moved.0);
                        let same_tile = tile_of(moved.0) == tile_of(moved.1);
                        if t.layer != id.layer || fixed.0 != fixed.1 || !step {
                            return Err(violation(format!("{swap} at {id} leaves the torus grid")));
                        }
                        if same_tile != (kind == SwapKind::Low) {
                            return Err(violation(format!("{swap} at {id} breaks tiling")));
                        }
                    }
                }
            }
            let (dr, dc) = dominant_strategies(&game);
            if dr.is_some() != (id.row <= 3) || dc.is_some() != (id.col <= 3) {
                return Err(violation(format!("dominance geography fails at {id}")));
            }
            let t = strict_game_id(&game.transpose_players())?;
            let mirror_layer = match id.layer {
                2 => 4,
                4 => 2,
                l => l,
            };
            if (t.layer, t.row, t.col) != (mirror_layer, id.col, id.row) {
                return Err(violation(format!("transpose of {id} lands on {t}")));
            }
        }
        let samaritan = classify_family(&self.resolve(StrictGameId { layer: 2, row: 6, col: 2 }))?;
        if samaritan.subfamily != Some(Subfamily::Samaritan) {
            return Err(violation("game 262 is not a Samaritan game"));
        }
        Ok(())
    }
}

fn detect_hotspots_and_pipes(atlas: &TopologyAtlas) -> Result<(Vec<Hotspot>, Vec<Pipe>)> {
    const TILES: usize = 36;
    let mut lift = [[0usize; TILES]; 2];
    for (p, player) in Player::BOTH.into_iter().enumerate() {
        let swap = SwapEdge { player, kind: SwapKind::High };
        for t in 0..TILES {
            let tile = TileId::from_index(t);
            let targets: Vec<usize> =
                tile.games().iter().map(|&g| atlas.neighbor(g, swap).tile().index()).collect();
            if targets.iter().any(|&x| x != targets[0]) {
                return Err(violation(format!("{tile} splits under {player:?} High swaps")));
            }
            lift[p][t] = targets[0];
        }
    }
    let [row_high, col_high] = lift;

    let mut hotspots = Vec::new();
    let mut used = [false; TILES];
    for t in 0..TILES {
        let u = row_high[t];
        if !used[t] && u != t && col_high[t] == u {
            used[t] = true;
            used[u] = true;
            hotspots.push(Hotspot { tiles: [TileId::from_index(t), TileId::from_index(u)] });
        }
    }

    let mut pipes = Vec::new();
    for start in 0..TILES {
        if used[start] {
            continue;
        }
        let mut cycle = [start; 4];
        for i in 1..4 {
            let prev = cycle[i - 1];
            cycle[i] = if i % 2 == 1 { row_high[prev] } else { col_high[prev] };
        }
        let mut layers: Vec<u8> = cycle.iter().map(|&t| TileId::from_index(t).layer).collect();
        layers.sort_unstable();
        if col_high[cycle[3]] != start || layers != [1, 2, 3, 4] || cycle.iter().any(|&t| used[t])
        {
            return Err(violation(format!(
                "tiles from {} do not form a pipe",
                TileId::from_index(start)
            )));
        }
        for &t in &cycle {
            used[t] = true;
        }
        pipes.push(Pipe { tiles: cycle.map(TileId::from_index) });
    }
    Ok((hotspots, pipes))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn id_round_trip() {
        for id in StrictGameId::all() {
            assert_eq!(strict_game_id(&game_for_id(id)).unwrap(), id);
            assert_eq!(id.to_string().parse::<StrictGameId>().unwrap(), id);
        }
        assert!("711".parse::<StrictGameId>().is_err());
        assert!("1111".parse::<StrictGameId>().is_err());
        assert!("1a1".parse::<StrictGameId>().is_err());
    }

    #[test]
    fn pd_and_chicken_coordinates() {
        let pd = OrdinalGame::prisoners_dilemma();
        assert_eq!(strict_game_id(&pd).unwrap(), StrictGameId::PRISONERS_DILEMMA);
        assert_eq!(strict_game_id(&OrdinalGame::chicken()).unwrap().to_string(), "166");
    }

    #[test]
    fn tiles_partition_rows() {
        let mut rows: Vec<u8> = (1..=3).flat_map(tile_members).collect();
        rows.sort_unstable();
        assert_eq!(rows, vec![1, 2, 3, 4, 5, 6]);
        for t in 1..=3 {
            for r in tile_members(t) {
                assert_eq!(tile_of(r), t);
            }
        }
    }

    #[test]
    fn swaps_reject_ties() {
        let g = OrdinalGame::null();
        assert_eq!(apply_swap(&g, Player::Row, SwapKind::Low), Err(Error::NotStrict));
    }

    #[test]
    fn single_high_swap_moves_row_four_to_ur() {
        let pd = OrdinalGame::prisoners_dilemma();
        let g = apply_swap(&pd, Player::Row, SwapKind::High).unwrap();
        assert_eq!(g.row().unique_top(), Some(Cell::UR));
        let sh = apply_swap(&g, Player::Col, SwapKind::High).unwrap();
        assert_eq!(sh, crate::ordinal::make_game([1, 4, 2, 3], [3, 4, 2, 1]).unwrap());
    }

    #[test]
    fn unreachable_across_layers_without_high() {
        let atlas = build_atlas().unwrap();
        let from = StrictGameId::PRISONERS_DILEMMA;
        let to = StrictGameId::new(3, 1, 1).unwrap();
        assert!(matches!(
            atlas.shortest_path(from, to, &[SwapKind::Low, SwapKind::Mid]),
            Err(Error::Unreachable { .. })
        ));
        assert!(atlas.shortest_path(from, from, &[SwapKind::Low]).unwrap().is_empty());
    }
}
