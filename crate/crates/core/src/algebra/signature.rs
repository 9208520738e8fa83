use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported `p + q`.
pub const MAX_DIM: usize = 4;

/// Metric signature of `Cl(p,q)`: generators `e_1..e_p` square to `+1`,
/// `e_{p+1}..e_{p+q}` square to `-1`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "[u8; 2]", into = "[u8; 2]")]
pub struct Signature {
    p: u8,
    q: u8,
}

impl Signature {
    pub const CL30: Signature = Signature { p: 3, q: 0 };
    pub const CL03: Signature = Signature { p: 0, q: 3 };
    pub const CL13: Signature = Signature { p: 1, q: 3 };

    pub fn new(p: u8, q: u8) -> Result<Self> {
        if p as usize + q as usize > MAX_DIM {
            return Err(Error::SignatureTooLarge { p, q });
        }
        Ok(Signature { p, q })
    }

    pub fn p(self) -> u8 {
        self.p
    }

    pub fn q(self) -> u8 {
        self.q
    }

    /// Number of generators.
    pub fn dim(self) -> usize {
        (self.p + self.q) as usize
    }

    /// Number of basis blades, `2^n`.
    pub fn size(self) -> usize {
        1 << self.dim()
    }

    /// Square of the generator stored at bit `bit` (0-based, so bit 0 is `e_1`).
    pub fn square(self, bit: usize) -> f64 {
        if bit < self.p as usize {
            1.0
        } else {
            -1.0
        }
    }

    pub(crate) fn expect(self, expected: Signature) -> Result<()> {
        if self == expected {
            Ok(())
        } else {
            Err(Error::WrongSignature { expected, found: self })
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cl({},{})", self.p, self.q)
    }
}

impl TryFrom<[u8; 2]> for Signature {
    type Error = Error;

    fn try_from(pq: [u8; 2]) -> Result<Self> {
        Signature::new(pq[0], pq[1])
    }
}

impl From<Signature> for [u8; 2] {
    fn from(s: Signature) -> Self {
        [s.p, s.q]
    }
}
