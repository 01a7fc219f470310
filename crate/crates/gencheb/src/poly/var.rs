use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Indeterminate families used throughout the crate: `t` for Chebyshev
/// variables, `u` for initial cluster variables, `x` for quasi-simple labels.
///
/// The derived order `T < U < X` is part of the canonical term order and must
/// not change.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum VarFamily {
    T,
    U,
    X,
}

impl VarFamily {
    pub fn letter(self) -> char {
        match self {
            VarFamily::T => 't',
            VarFamily::U => 'u',
            VarFamily::X => 'x',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        match c {
            't' => Some(VarFamily::T),
            'u' => Some(VarFamily::U),
            'x' => Some(VarFamily::X),
            _ => None,
        }
    }
}

/// An indexed indeterminate such as `t3`, `x-1` or `u0`.
///
/// The total order is `(family, index)` lexicographic; it is fixed for the
/// lifetime of the library.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VarId {
    pub family: VarFamily,
    pub index: i32,
}

impl VarId {
    pub fn new(family: VarFamily, index: i32) -> Self {
        VarId { family, index }
    }

    pub fn t(index: i32) -> Self {
        VarId::new(VarFamily::T, index)
    }

    pub fn u(index: i32) -> Self {
        VarId::new(VarFamily::U, index)
    }

    pub fn x(index: i32) -> Self {
        VarId::new(VarFamily::X, index)
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.index)
    }
}

impl FromStr for VarId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut chars = s.chars();
        let letter = chars
            .next()
            .ok_or_else(|| Error::Parse("empty variable name".into()))?;
        let family = VarFamily::from_letter(letter)
            .ok_or_else(|| Error::Parse(format!("unknown variable family in `{s}`")))?;
        let rest = chars.as_str();
        let rest = rest.strip_prefix('_').unwrap_or(rest);
        let index = rest
            .parse::<i32>()
            .map_err(|_| Error::Parse(format!("bad variable index in `{s}`")))?;
        Ok(VarId { family, index })
    }
}
