//! Random inputs for the sweeps. Coefficients are uniform on `[-1, 1)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Blade, CenterScalar, Multivector, Signature};
use crate::cl03::{PlaneScalar, WeylSpinor03};
use crate::field::SpacetimePoint;
use crate::weyl::{Rotor, WeylSpinor};

// 2^16 words per sample is far more than any check draws
const WORDS_PER_SAMPLE: u128 = 1 << 16;

/// FNV-1a, used to turn a check id into a stream number.
fn stream_of(id: &str) -> u64 {
    id.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

/// Generator for sample `index` of check `id`.
pub fn sample_rng(seed: u64, id: &str, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream_of(id));
    rng.set_word_pos(index as u128 * WORDS_PER_SAMPLE);
    rng
}

pub fn unit(rng: &mut impl Rng) -> f64 {
    rng.random_range(-1.0..1.0)
}

pub fn multivector(rng: &mut impl Rng, sig: Signature) -> Multivector {
    let coeffs: Vec<f64> = (0..sig.size()).map(|_| unit(rng)).collect();
    Multivector::from_coeffs(sig, &coeffs)
}

pub fn even(rng: &mut impl Rng, sig: Signature) -> Multivector {
    multivector(rng, sig).even_part()
}

pub fn center(rng: &mut impl Rng) -> CenterScalar {
    CenterScalar::new(unit(rng), unit(rng))
}

pub fn cus(rng: &mut impl Rng) -> WeylSpinor {
    WeylSpinor::cus(center(rng), center(rng))
}

/// A CUS spinor with `|k1|^2 + |k2|^2 >= 0.01`.
pub fn nonzero_cus(rng: &mut impl Rng) -> WeylSpinor {
    loop {
        let k = cus(rng);
        if k.c1.norm_sqr() + k.c2.norm_sqr() >= 0.01 {
            return k;
        }
    }
}

pub fn plane(rng: &mut impl Rng) -> PlaneScalar {
    PlaneScalar::new(unit(rng), unit(rng))
}

pub fn cus03(rng: &mut impl Rng) -> WeylSpinor03 {
    WeylSpinor03::cus(plane(rng), plane(rng))
}

/// `exp(X)` for random `X` of grades 1 and 2; `conj(X) = -X` makes it a unit
/// element, a generic boost composed with a rotation.
pub fn rotor(rng: &mut impl Rng) -> Rotor {
    let mut x = Multivector::zero(Signature::CL30);
    for m in 1..8u8 {
        let b = Blade(m);
        if b.grade() == 1 || b.grade() == 2 {
            x.set(b, unit(rng));
        }
    }
    Rotor::new(x.exp()).expect("exp of a grade 1+2 element is unit")
}

/// Even `Cl(3,0)` element with real coefficients `a + b e12 + c e13 + d e23`.
pub fn real_even30(rng: &mut impl Rng) -> Multivector {
    even(rng, Signature::CL30)
}

pub fn point(rng: &mut impl Rng) -> SpacetimePoint {
    SpacetimePoint::new(2.0 * unit(rng), [2.0 * unit(rng), 2.0 * unit(rng), 2.0 * unit(rng)])
}

/// Momentum uniform in the ball `|p| <= radius`.
pub fn momentum(rng: &mut impl Rng, radius: f64) -> [f64; 3] {
    loop {
        let p = [unit(rng), unit(rng), unit(rng)];
        if p.iter().map(|x| x * x).sum::<f64>() <= 1.0 {
            return p.map(|x| x * radius);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let a: f64 = sample_rng(7, "a", 3).random();
        let b: f64 = sample_rng(7, "a", 3).random();
        let c: f64 = sample_rng(7, "b", 3).random();
        let d: f64 = sample_rng(7, "a", 4).random();
        let e: f64 = sample_rng(8, "a", 3).random();
        assert_eq!(a, b);
        assert!(a != c && a != d && a != e);
    }

    #[test]
    fn rotors_are_unit() {
        let mut rng = sample_rng(1, "rotor", 0);
        for _ in 0..20 {
            let r = rotor(&mut rng);
            let one = Multivector::one(Signature::CL30);
            assert!((*r.as_multivector() * r.inverse() - one).norm_inf() < 1e-13);
        }
    }
}
