//! Identifiers and exports.
//!
//! Three identifier kinds are understood:
//!
//! * strict id `LRC`, e.g. `111`
//! * payoff string `game(rUL,cUL;rUR,cUR/rDL,cDL;rDR,cDR)`
//! * tie coordinate `<rowClass><colClass>-<position>`, e.g. `3_23_2-17` or
//!   `44-111` for strict games

mod dot;
mod json;
mod svg;

pub use dot::{export_dot, DotFilter};
pub use json::{export_atlas_json, export_ui_data, GameRecord, SCHEMA_VERSION};
pub use svg::{cell_origin, export_chart_svg, family_color, ChartOptions};

use std::fmt;

use crate::atlas::StrictGameId;
use crate::error::{Error, Result};
use crate::ordinal::{canonicalize, make_game, OrdinalGame};
use crate::ties::{tie_lattice, BlockPosition, NaturalOrderCoordinate, PreferenceClass};

/// The canonical payoff string of a game as given (no reorientation).
pub fn encode_game_string(game: &OrdinalGame) -> String {
    game.to_string()
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl Cursor<'_> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.text[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        self.skip_ws();
        if self.text[self.pos..].starts_with(token) {
            self.pos += token.len();
            Ok(())
        } else {
            Err(self.err(format!("expected '{token}'")))
        }
    }

    fn rank(&mut self) -> Result<u8> {
        self.skip_ws();
        let start = self.pos;
        let digits = self.text[start..].bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.err("expected a rank"));
        }
        self.pos += digits;
        self.text[start..self.pos]
            .parse()
            .map_err(|_| Error::Parse { pos: start, msg: "rank out of range".into() })
    }
}

/// Parse `game(a,b;c,d/e,f;g,h)`; whitespace between tokens is allowed.
pub fn parse_game_string(text: &str) -> Result<OrdinalGame> {
    let mut cur = Cursor { text, pos: 0 };
    cur.expect("game")?;
    cur.expect("(")?;
    let mut row = [0u8; 4];
    let mut col = [0u8; 4];
    for cell in 0..4 {
        row[cell] = cur.rank()?;
        cur.expect(",")?;
        col[cell] = cur.rank()?;
        match cell {
            0 | 2 => cur.expect(";")?,
            1 => cur.expect("/")?,
            _ => cur.expect(")")?,
        }
    }
    cur.skip_ws();
    if cur.pos != text.len() {
        return Err(cur.err("trailing input"));
    }
    make_game(row, col)
}

/// Tie coordinate of a game, e.g. `44-111` for the Prisoner's Dilemma.
pub fn encode_tie_coordinate(game: &OrdinalGame) -> String {
    format_tie_coordinate(&tie_lattice().natural_order_coordinate(game))
}

pub fn format_tie_coordinate(coord: &NaturalOrderCoordinate) -> String {
    let token = |i| PreferenceClass::from_axis_index(i).expect("axis index in range").token();
    let pos = match coord.within_block {
        BlockPosition::Atlas(id) => id.to_string(),
        BlockPosition::Ordinal(n) => n.to_string(),
    };
    format!("{}{}-{}", token(coord.row_class_index), token(coord.col_class_index), pos)
}

fn parse_class_token(text: &str, pos: &mut usize) -> Result<PreferenceClass> {
    let rest = &text[*pos..];
    let len = if rest.as_bytes().get(1) == Some(&b'_') { 3 } else { 1 };
    let token = rest.get(..len).unwrap_or(rest);
    let class = PreferenceClass::from_token(token)
        .ok_or_else(|| Error::Parse { pos: *pos, msg: format!("unknown class '{token}'") })?;
    *pos += len;
    Ok(class)
}

pub fn parse_tie_coordinate(text: &str) -> Result<OrdinalGame> {
    let mut pos = 0;
    let row = parse_class_token(text, &mut pos)?;
    let col = parse_class_token(text, &mut pos)?;
    if !text[pos..].starts_with('-') {
        return Err(Error::Parse { pos, msg: "expected '-'".into() });
    }
    pos += 1;
    let tail = &text[pos..];
    let strict = row == PreferenceClass::H && col == PreferenceClass::H;
    let within_block = if strict {
        BlockPosition::Atlas(tail.parse::<StrictGameId>().map_err(|_| Error::Parse {
            pos,
            msg: "expected a strict id".into(),
        })?)
    } else {
        BlockPosition::Ordinal(
            tail.parse()
                .map_err(|_| Error::Parse { pos, msg: "expected a block position".into() })?,
        )
    };
    let coord = NaturalOrderCoordinate {
        row_class_index: row.axis_index(),
        col_class_index: col.axis_index(),
        within_block,
    };
    tie_lattice()
        .game_at(&coord)
        .ok_or_else(|| Error::Parse { pos, msg: "no game at this position".into() })
}

/// Any of the three identifier kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GameIdentifier {
    Strict(StrictGameId),
    Payoff(OrdinalGame),
    TieCoordinate(OrdinalGame),
}

impl GameIdentifier {
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        if t.starts_with("game") {
            parse_game_string(t).map(GameIdentifier::Payoff)
        } else if t.contains('-') {
            parse_tie_coordinate(t).map(GameIdentifier::TieCoordinate)
        } else {
            t.parse().map(GameIdentifier::Strict)
        }
    }

    /// The canonical game the identifier names.
    pub fn game(&self) -> OrdinalGame {
        match *self {
            GameIdentifier::Strict(id) => crate::atlas::game_for_id(id),
            GameIdentifier::Payoff(g) => canonicalize(&g).game,
            GameIdentifier::TieCoordinate(g) => g,
        }
    }
}

impl fmt::Display for GameIdentifier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GameIdentifier::Strict(id) => write!(f, "{id}"),
            GameIdentifier::Payoff(g) => write!(f, "{g}"),
            GameIdentifier::TieCoordinate(g) => f.write_str(&encode_tie_coordinate(g)),
        }
    }
}
