use std::fmt;

use crate::algebra::Signature;
use crate::error::{Error, Result};

/// A canonical basis blade: bit `i` set means generator `e_{i+1}` is a factor.
/// Factors are always taken in ascending index order; any sign lives in the
/// coefficient.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Blade(pub u8);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    /// Blade of the single generator `e_index` (1-based).
    pub fn generator(index: usize) -> Blade {
        debug_assert!((1..=8).contains(&index));
        Blade(1 << (index - 1))
    }

    /// Blade from 1-based generator indices, e.g. `&[1, 2]` for `e12`.
    /// Indices must be strictly ascending.
    pub fn from_indices(indices: &[usize]) -> Blade {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        Blade(indices.iter().fold(0u8, |m, &i| m | (1 << (i - 1))))
    }

    pub fn mask(self) -> usize {
        self.0 as usize
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Name in the form used by the JSON interchange format: `"1"`, `"e1"`, `"e123"`.
    pub fn name(self) -> String {
        if self.0 == 0 {
            return "1".to_string();
        }
        let mut s = String::from("e");
        for bit in 0..8 {
            if self.0 & (1 << bit) != 0 {
                s.push(char::from_digit(bit + 1, 10).expect("index below 10"));
            }
        }
        s
    }

    /// Parses a blade name, validating it against `sig`.
    pub fn parse(name: &str, sig: Signature) -> Result<Blade> {
        let bad = || Error::InvalidBlade(name.to_string());
        if name == "1" {
            return Ok(Blade::SCALAR);
        }
        let digits = name.strip_prefix('e').ok_or_else(bad)?;
        if digits.is_empty() {
            return Err(bad());
        }
        let mut mask = 0u8;
        let mut last = 0;
        for c in digits.chars() {
            let i = c.to_digit(10).ok_or_else(bad)? as usize;
            if i <= last || i > sig.dim() {
                return Err(bad());
            }
            last = i;
            mask |= 1 << (i - 1);
        }
        Ok(Blade(mask))
    }

    /// Product of two canonical blades: returns `(sign, blade)` with
    /// `e_A e_B = sign * e_{A xor B}`.
    pub fn product(self, other: Blade, sig: Signature) -> (f64, Blade) {
        let mut sign = reorder_sign(self.0, other.0);
        let mut common = self.0 & other.0;
        while common != 0 {
            let bit = common.trailing_zeros() as usize;
            sign *= sig.square(bit);
            common &= common - 1;
        }
        (sign, Blade(self.0 ^ other.0))
    }

    /// `(-1)^{[k/2]}`
    pub fn reversion_sign(self) -> f64 {
        if (self.grade() / 2).is_multiple_of(2) {
            1.0
        } else {
            -1.0
        }
    }

    /// `(-1)^k`
    pub fn involution_sign(self) -> f64 {
        if self.grade().is_multiple_of(2) {
            1.0
        } else {
            -1.0
        }
    }

    /// Extended metric `g(e_A, e_A)`: product of the generator squares.
    pub fn metric_square(self, sig: Signature) -> f64 {
        (0..sig.dim()).filter(|b| self.0 & (1 << b) != 0).map(|b| sig.square(b)).product()
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Sign from moving the factors of `b` past those of `a` into ascending order.
fn reorder_sign(a: u8, b: u8) -> f64 {
    let mut swaps = 0u32;
    let mut a = a >> 1;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}
