use thiserror::Error;

use crate::atlas::StrictGameId;
use crate::ordinal::Player;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid ranking {0:?}: ranks must be dense (1..k with every value present)")]
    InvalidRanking([u8; 4]),

    #[error("operation requires a strict game (no ties)")]
    NotStrict,

    #[error("invalid strict game id {0}")]
    InvalidId(String),

    #[error("no path from {from} to {to} with the allowed swap kinds")]
    Unreachable { from: StrictGameId, to: StrictGameId },

    #[error("{player:?} has no distinct ranks {rank} and {next} to tie", next = rank + 1)]
    RankAbsent { player: Player, rank: u8 },

    #[error("{player:?} does not hold rank {value} in two or more cells")]
    RankNotTied { player: Player, value: u8 },

    #[error("atlas construction invariant violated: {0}")]
    ConstructionInvariantViolation(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid real-valued game: {0}")]
    InvalidRealGame(String),

    #[error("sample size must be positive")]
    EmptySample,
}
