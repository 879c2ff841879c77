use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A supported prime characteristic. Only 2, 3 and 5 are accepted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Prime(u8);

impl Prime {
    pub const TWO: Prime = Prime(2);
    pub const THREE: Prime = Prime(3);
    pub const FIVE: Prime = Prime(5);

    pub fn new(p: u32) -> Result<Self> {
        match p {
            2 | 3 | 5 => Ok(Prime(p as u8)),
            _ => Err(Error::UnsupportedPrime(p)),
        }
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0 as u32
    }

    #[inline]
    pub fn add(self, a: u8, b: u8) -> u8 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub fn neg(self, a: u8) -> u8 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub fn mul(self, a: u8, b: u8) -> u8 {
        ((a as u16 * b as u16) % self.0 as u16) as u8
    }

    /// Multiplicative inverse of a nonzero residue.
    #[inline]
    pub fn inv(self, a: u8) -> u8 {
        debug_assert!(a != 0 && a < self.0);
        match (self.0, a) {
            (_, 1) => 1,
            (3, 2) => 2,
            (5, 2) => 3,
            (5, 3) => 2,
            (5, 4) => 4,
            _ => unreachable!("residue {a} out of range for p = {}", self.0),
        }
    }

    #[inline]
    pub fn reduce(self, x: i64) -> u8 {
        x.rem_euclid(self.0 as i64) as u8
    }

    /// `p^k` as an integer.
    pub fn pow(self, k: u32) -> usize {
        (self.0 as usize).pow(k)
    }

    /// Returns `Some(k)` when `n = p^k`.
    pub fn log(self, mut n: usize) -> Option<u32> {
        if n == 0 {
            return None;
        }
        let mut k = 0;
        while n.is_multiple_of(self.0 as usize) {
            n /= self.0 as usize;
            k += 1;
        }
        (n == 1).then_some(k)
    }
}

impl TryFrom<u32> for Prime {
    type Error = Error;
    fn try_from(p: u32) -> Result<Self> {
        Prime::new(p)
    }
}

impl From<Prime> for u32 {
    fn from(p: Prime) -> u32 {
        p.get()
    }
}

impl std::fmt::Display for Prime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}
