//! Real-valued 2×2 games mapped onto the ordinal atlas.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

use crate::atlas::{strict_game_id, StrictGameId};
use crate::error::{Error, Result};
use crate::ordinal::{canonicalize, Cell, OrdinalGame, Quadrant, RankVector};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RealGame {
    /// `(row value, column value)` per cell, in `UL, UR, DL, DR` order.
    payoffs: [(f64, f64); 4],
    tie_tolerance: f64,
}

impl RealGame {
    pub fn new(payoffs: [(f64, f64); 4], tie_tolerance: f64) -> Result<Self> {
        if payoffs.iter().any(|&(r, c)| !r.is_finite() || !c.is_finite()) {
            return Err(Error::InvalidRealGame("payoffs must be finite".into()));
        }
        if !(tie_tolerance >= 0.0 && tie_tolerance.is_finite()) {
            return Err(Error::InvalidRealGame(format!("tolerance {tie_tolerance} must be >= 0")));
        }
        Ok(RealGame { payoffs, tie_tolerance })
    }

    /// Eight values in identifier order: `rUL, cUL, rUR, cUR, rDL, cDL, rDR, cDR`.
    pub fn from_flat(values: [f64; 8], tie_tolerance: f64) -> Result<Self> {
        let p = std::array::from_fn(|i| (values[2 * i], values[2 * i + 1]));
        RealGame::new(p, tie_tolerance)
    }

    pub fn payoffs(&self) -> [(f64, f64); 4] {
        self.payoffs
    }

    pub fn tie_tolerance(&self) -> f64 {
        self.tie_tolerance
    }

    fn row_values(&self) -> [f64; 4] {
        self.payoffs.map(|p| p.0)
    }

    fn col_values(&self) -> [f64; 4] {
        self.payoffs.map(|p| p.1)
    }
}

/// Dense ranks where adjacent sorted values within `tolerance` of each other
/// share a rank (ties chain transitively).
pub fn rank_with_ties(values: [f64; 4], tolerance: f64) -> RankVector {
    let mut order = [0usize, 1, 2, 3];
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = [0u8; 4];
    let mut rank = 1u8;
    ranks[order[0]] = rank;
    for w in order.windows(2) {
        if values[w[1]] - values[w[0]] > tolerance {
            rank += 1;
        }
        ranks[w[1]] = rank;
    }
    RankVector::new(ranks).expect("chain clustering produces dense ranks")
}

fn unit_scale(values: [f64; 4]) -> [f64; 4] {
    let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if hi == lo {
        [0.5; 4]
    } else {
        values.map(|v| (v - lo) / (hi - lo))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NormalizedGame {
    pub ordinal: OrdinalGame,
    /// Min-max scaled payoffs per player, arranged in the ordinal game's
    /// (canonical) cell order.
    pub unit_payoffs: [(f64, f64); 4],
    pub quadrant: Quadrant,
}

impl NormalizedGame {
    pub fn as_real(&self) -> RealGame {
        RealGame { payoffs: self.unit_payoffs, tie_tolerance: 0.0 }
    }
}

pub fn normalize_game(game: &RealGame) -> NormalizedGame {
    let eps = game.tie_tolerance;
    let raw = OrdinalGame::new(
        rank_with_ties(game.row_values(), eps),
        rank_with_ties(game.col_values(), eps),
    );
    let canon = canonicalize(&raw);
    let row = unit_scale(game.row_values());
    let col = unit_scale(game.col_values());
    let mut unit = [(0.0, 0.0); 4];
    for c in Cell::ALL {
        let mut target = c;
        if canon.row_flip {
            target = target.row_deviation();
        }
        if canon.col_flip {
            target = target.col_deviation();
        }
        unit[target.index()] = (row[c.index()], col[c.index()]);
    }
    NormalizedGame { ordinal: canon.game, unit_payoffs: unit, quadrant: canon.quadrant }
}

/// Order-graph points `(row unit payoff, column unit payoff)` per cell.
pub fn order_graph_points(game: &NormalizedGame) -> [(Cell, f64, f64); 4] {
    std::array::from_fn(|i| {
        let (x, y) = game.unit_payoffs[i];
        (Cell::from_index(i), x, y)
    })
}

/// Normalize an ordinal game's ranks as if they were real payoffs.
pub fn normalize_ordinal(game: &OrdinalGame) -> NormalizedGame {
    let p = std::array::from_fn(|i| {
        let (r, c) = game.payoff(Cell::from_index(i));
        (r as f64, c as f64)
    });
    normalize_game(&RealGame { payoffs: p, tie_tolerance: 0.0 })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Distribution {
    Uniform,
    Gaussian,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SampleCensus {
    pub n: u64,
    pub seed: u64,
    pub distribution: Distribution,
    pub counts: BTreeMap<StrictGameId, u64>,
    /// Draws whose payoffs contained an exact tie.
    pub ties: u64,
}

impl SampleCensus {
    pub fn count(&self, id: StrictGameId) -> u64 {
        self.counts.get(&id).copied().unwrap_or(0)
    }
}

/// Draw `n` games with i.i.d. cell values and tally their atlas positions.
/// Deterministic for a given seed; values are drawn row then column per cell
/// in cell order from a single ChaCha8 stream.
pub fn sample_census(n: u64, seed: u64, distribution: Distribution) -> Result<SampleCensus> {
    if n == 0 {
        return Err(Error::EmptySample);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw = |rng: &mut ChaCha8Rng| -> f64 {
        match distribution {
            Distribution::Uniform => rng.random::<f64>(),
            Distribution::Gaussian => rng.sample(StandardNormal),
        }
    };
    let mut counts = BTreeMap::new();
    let mut ties = 0;
    for _ in 0..n {
        let mut values = [0.0; 8];
        for v in values.iter_mut() {
            *v = draw(&mut rng);
        }
        let game = RealGame::from_flat(values, 0.0)?;
        let norm = normalize_game(&game);
        match strict_game_id(&norm.ordinal) {
            Ok(id) => *counts.entry(id).or_insert(0) += 1,
            Err(_) => ties += 1,
        }
    }
    Ok(SampleCensus { n, seed, distribution, counts, ties })
}
