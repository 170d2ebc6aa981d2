use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Structured vertex name from one of the two extremal families.
///
/// `Hub0` and `HubTop` are the two hubs of the ring construction,
/// `Ring { row, col }` its ring vertices (both 1-based). `U(i)` and `V(i)`
/// name the two path sides of the strip construction; `U(0)` is the extra
/// apex used for odd orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Hub0,
    HubTop,
    Ring { row: usize, col: usize },
    U(usize),
    V(usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unrecognized vertex label {0:?}")]
pub struct LabelParseError(pub String);

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Hub0 => write!(f, "v0"),
            Label::HubTop => write!(f, "vtop"),
            Label::Ring { row, col } => write!(f, "v[{row},{col}]"),
            Label::U(i) => write!(f, "u{i}"),
            Label::V(i) => write!(f, "v{i}"),
        }
    }
}

impl FromStr for Label {
    type Err = LabelParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || LabelParseError(s.to_string());
        let index = |t: &str| -> Result<usize, LabelParseError> {
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err());
            }
            t.parse().map_err(|_| err())
        };
        match s {
            "v0" => return Ok(Label::Hub0),
            "vtop" => return Ok(Label::HubTop),
            _ => {}
        }
        if let Some(body) = s.strip_prefix("v[").and_then(|r| r.strip_suffix(']')) {
            let (row, col) = body.split_once(',').ok_or_else(err)?;
            let (row, col) = (index(row.trim())?, index(col.trim())?);
            if row == 0 || col == 0 {
                return Err(err());
            }
            return Ok(Label::Ring { row, col });
        }
        if let Some(i) = s.strip_prefix('u') {
            return index(i).map(Label::U);
        }
        if let Some(i) = s.strip_prefix('v') {
            let i = index(i)?;
            if i == 0 {
                return Err(err());
            }
            return Ok(Label::V(i));
        }
        Err(err())
    }
}
