//! Closed-form design numbers.

use crate::block::BlockSystem;
use crate::combin::{binom, ceil_div};
use crate::error::{domain, unsupported, Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul};

/// An exact multiple of one half, stored as twice its value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const fn from_halves(twice: i64) -> Self {
        HalfInt { twice }
    }

    pub const fn from_int(v: i64) -> Self {
        HalfInt { twice: 2 * v }
    }

    pub fn halves(self) -> i64 {
        self.twice
    }

    pub fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    pub fn ceil(self) -> i64 {
        ceil_div(self.twice, 2)
    }

    pub fn floor(self) -> i64 {
        self.twice.div_euclid(2)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, o: HalfInt) -> HalfInt {
        HalfInt { twice: self.twice + o.twice }
    }
}

impl Mul<i64> for HalfInt {
    type Output = HalfInt;
    fn mul(self, k: i64) -> HalfInt {
        HalfInt { twice: self.twice * k }
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

/// C(a) = C(a,3,2), the minimum number of triples covering every pair of an a-set.
pub fn covering_number(a: u32) -> Result<u64> {
    if a < 2 {
        return domain(format!("covering number needs a >= 2, got {a}"));
    }
    let a = a as i64;
    Ok(ceil_div(a * ceil_div(a - 1, 2), 3) as u64)
}

/// P(a), the size of a maximum packing of triples on a points.
pub fn packing_number(a: u32) -> Result<u64> {
    if a < 3 {
        return domain(format!("packing number needs a >= 3, got {a}"));
    }
    let a64 = a as u64;
    let base = a64 * ((a64 - 1) / 2) / 3;
    Ok(if a % 6 == 5 { base - 1 } else { base })
}

/// C_*(a), the least weight of a triple system on a points.
pub fn c_star(a: u32) -> Result<HalfInt> {
    if a < 2 {
        return domain(format!("c_star needs a >= 2, got {a}"));
    }
    let a = a as i64;
    Ok(if a % 2 == 1 {
        HalfInt::from_int(ceil_div(a * a - a, 6))
    } else {
        HalfInt::from_halves(ceil_div(2 * a * a - a, 6))
    })
}

/// Triple count, uncovered-pair count and weight of a triple system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleSystemWeight {
    pub triple_count: u64,
    pub uncovered_pair_count: u64,
    pub weight: HalfInt,
}

pub fn weight_of(triples: &BlockSystem) -> Result<TripleSystemWeight> {
    if triples.r() != 3 {
        return Err(Error::Shape(format!("weight needs r=3, got r={}", triples.r())));
    }
    let uncovered = triples.subset_multiplicity(2).iter().filter(|&&c| c == 0).count() as u64;
    let t = triples.len() as u64;
    Ok(TripleSystemWeight {
        triple_count: t,
        uncovered_pair_count: uncovered,
        weight: HalfInt::from_halves((2 * t + uncovered) as i64),
    })
}

/// Fewest optimal coverings of K_a whose union holds every triple.
pub fn mu_value(a: u32) -> Result<u32> {
    match a {
        0..=2 => unsupported(format!("mu needs a >= 3, got {a}")),
        6 => Ok(5),
        7 => Ok(6),
        _ => Ok(a - 2),
    }
}

/// Most pairwise disjoint optimal coverings of K_a, known for a divisible by 6.
pub fn lambda_value(a: u32) -> Result<u32> {
    if a < 6 || a % 6 != 0 {
        return unsupported(format!("lambda is only known for a = 0 mod 6, got {a}"));
    }
    Ok(a - 3)
}

pub fn triples_in(a: u32) -> u64 {
    binom(a as u64, 3)
}
