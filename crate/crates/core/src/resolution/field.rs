use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficient field for homology ranks: the rationals or a prime field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "u64", try_from = "u64")]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    pub const DEFAULT: Field = Field::Prime(32003);

    /// `0` selects the rationals; any other value must be a prime below 2^31.
    pub fn from_characteristic(c: u64) -> Result<Field> {
        match c {
            0 => Ok(Field::Rational),
            p if p < (1 << 31) && is_prime(p) => Ok(Field::Prime(p)),
            p => Err(Error::BadCharacteristic(p)),
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }
}

impl Default for Field {
    fn default() -> Self {
        Field::DEFAULT
    }
}

impl From<Field> for u64 {
    fn from(f: Field) -> u64 {
        f.characteristic()
    }
}

impl TryFrom<u64> for Field {
    type Error = Error;

    fn try_from(c: u64) -> Result<Field> {
        Field::from_characteristic(c)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => f.write_str("QQ"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn characteristic_parsing() {
        assert_eq!(Field::from_characteristic(0).unwrap(), Field::Rational);
        assert_eq!(Field::from_characteristic(2).unwrap(), Field::Prime(2));
        assert_eq!(Field::from_characteristic(32003).unwrap(), Field::DEFAULT);
        assert!(Field::from_characteristic(1).is_err());
        assert!(Field::from_characteristic(32004).is_err());
    }
}
