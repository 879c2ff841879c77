use std::fmt;

use serde::{Serialize, Serializer};

use super::field::Prime;

/// Dense vector over F_p.
///
/// Over F_2 the entries are packed 64 to a word, otherwise one byte is used
/// per entry. Equality is structural: two vectors compare equal exactly when
/// they have the same prime, length and residues.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpVector {
    p: Prime,
    len: usize,
    repr: Repr,
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Bits(Vec<u64>),
    Bytes(Vec<u8>),
}

impl FpVector {
    pub fn zero(p: Prime, len: usize) -> Self {
        let repr = if p == Prime::TWO {
            Repr::Bits(vec![0; len.div_ceil(64)])
        } else {
            Repr::Bytes(vec![0; len])
        };
        FpVector { p, len, repr }
    }

    pub fn unit(p: Prime, len: usize, i: usize) -> Self {
        let mut v = Self::zero(p, len);
        v.set(i, 1);
        v
    }

    /// Builds a vector from integer residues, reducing each entry mod p.
    pub fn from_residues(p: Prime, coords: &[i64]) -> Self {
        let mut v = Self::zero(p, coords.len());
        for (i, &c) in coords.iter().enumerate() {
            v.set(i, p.reduce(c));
        }
        v
    }

    #[inline]
    pub fn prime(&self) -> Prime {
        self.p
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> u8 {
        debug_assert!(i < self.len);
        match &self.repr {
            Repr::Bits(w) => ((w[i / 64] >> (i % 64)) & 1) as u8,
            Repr::Bytes(b) => b[i],
        }
    }

    #[inline]
    pub fn set(&mut self, i: usize, c: u8) {
        debug_assert!(i < self.len && (c as u32) < self.p.get());
        match &mut self.repr {
            Repr::Bits(w) => {
                let mask = 1u64 << (i % 64);
                if c == 0 {
                    w[i / 64] &= !mask;
                } else {
                    w[i / 64] |= mask;
                }
            }
            Repr::Bytes(b) => b[i] = c,
        }
    }

    /// Adds `c` to entry `i`.
    #[inline]
    pub fn add_at(&mut self, i: usize, c: u8) {
        match &mut self.repr {
            Repr::Bits(w) => {
                if c & 1 == 1 {
                    w[i / 64] ^= 1u64 << (i % 64);
                }
            }
            Repr::Bytes(b) => b[i] = self.p.add(b[i], c),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Bits(w) => w.iter().all(|&x| x == 0),
            Repr::Bytes(b) => b.iter().all(|&x| x == 0),
        }
    }

    pub fn first_nonzero(&self) -> Option<usize> {
        match &self.repr {
            Repr::Bits(w) => w
                .iter()
                .enumerate()
                .find(|(_, &x)| x != 0)
                .map(|(k, &x)| k * 64 + x.trailing_zeros() as usize),
            Repr::Bytes(b) => b.iter().position(|&x| x != 0),
        }
    }

    /// Iterates over `(index, residue)` for nonzero entries, in index order.
    pub fn nonzero(&self) -> NonZero<'_> {
        NonZero {
            v: self,
            word: 0,
            bits: match &self.repr {
                Repr::Bits(w) => w.first().copied().unwrap_or(0),
                Repr::Bytes(_) => 0,
            },
            pos: 0,
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &FpVector, c: u8) {
        debug_assert_eq!(self.len, other.len);
        if c == 0 {
            return;
        }
        let p = self.p;
        match (&mut self.repr, &other.repr) {
            (Repr::Bits(a), Repr::Bits(b)) => {
                for (x, y) in a.iter_mut().zip(b) {
                    *x ^= *y;
                }
            }
            (Repr::Bytes(a), Repr::Bytes(b)) => {
                if c == 1 {
                    for (x, &y) in a.iter_mut().zip(b) {
                        *x = p.add(*x, y);
                    }
                } else {
                    for (x, &y) in a.iter_mut().zip(b) {
                        if y != 0 {
                            *x = p.add(*x, p.mul(c, y));
                        }
                    }
                }
            }
            _ => panic!("mixed vector representations"),
        }
    }

    pub fn add(&mut self, other: &FpVector) {
        self.add_scaled(other, 1);
    }

    pub fn sub(&mut self, other: &FpVector) {
        self.add_scaled(other, self.p.neg(1));
    }

    pub fn scale(&mut self, c: u8) {
        if c == 1 {
            return;
        }
        let p = self.p;
        match &mut self.repr {
            Repr::Bits(w) => {
                if c == 0 {
                    w.iter_mut().for_each(|x| *x = 0);
                }
            }
            Repr::Bytes(b) => b.iter_mut().for_each(|x| *x = p.mul(*x, c)),
        }
    }

    pub fn sum(mut self, other: &FpVector) -> FpVector {
        self.add(other);
        self
    }

    pub fn difference(mut self, other: &FpVector) -> FpVector {
        self.sub(other);
        self
    }

    pub fn scaled(mut self, c: u8) -> FpVector {
        self.scale(c);
        self
    }

    /// Sum of all entries mod p.
    pub fn coordinate_sum(&self) -> u8 {
        match &self.repr {
            Repr::Bits(w) => (w.iter().map(|x| x.count_ones()).sum::<u32>() % 2) as u8,
            Repr::Bytes(b) => {
                (b.iter().map(|&x| x as u32).sum::<u32>() % self.p.get()) as u8
            }
        }
    }

    pub fn to_residues(&self) -> Vec<u32> {
        (0..self.len).map(|i| self.get(i) as u32).collect()
    }

    /// Concatenates `self` and `other`.
    pub fn concat(&self, other: &FpVector) -> FpVector {
        let mut v = FpVector::zero(self.p, self.len + other.len);
        for (i, c) in self.nonzero() {
            v.set(i, c);
        }
        for (i, c) in other.nonzero() {
            v.set(self.len + i, c);
        }
        v
    }

    /// Entries `range`, as a new vector.
    pub fn slice(&self, start: usize, end: usize) -> FpVector {
        let mut v = FpVector::zero(self.p, end - start);
        for (i, c) in self.nonzero() {
            if i >= start && i < end {
                v.set(i - start, c);
            }
        }
        v
    }
}

pub struct NonZero<'a> {
    v: &'a FpVector,
    word: usize,
    bits: u64,
    pos: usize,
}

impl Iterator for NonZero<'_> {
    type Item = (usize, u8);

    fn next(&mut self) -> Option<(usize, u8)> {
        match &self.v.repr {
            Repr::Bits(w) => loop {
                if self.bits != 0 {
                    let t = self.bits.trailing_zeros() as usize;
                    self.bits &= self.bits - 1;
                    return Some((self.word * 64 + t, 1));
                }
                self.word += 1;
                if self.word >= w.len() {
                    return None;
                }
                self.bits = w[self.word];
            },
            Repr::Bytes(b) => {
                while self.pos < b.len() {
                    let i = self.pos;
                    self.pos += 1;
                    if b[i] != 0 {
                        return Some((i, b[i]));
                    }
                }
                None
            }
        }
    }
}

impl fmt::Debug for FpVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_residues())
    }
}

impl Serialize for FpVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_residues().serialize(s)
    }
}
