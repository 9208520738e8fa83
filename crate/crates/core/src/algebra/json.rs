//! JSON interchange for multivectors:
//! `{"signature":[p,q],"coeffs":{"1":0.5,"e12":-2.0}}`. Absent blades are
//! zero; zero coefficients are omitted on output (negative zero is kept so
//! that round trips are bit-exact).

use std::collections::BTreeMap;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{Blade, Multivector, Signature};

#[derive(Serialize, Deserialize)]
struct Wire {
    signature: Signature,
    coeffs: BTreeMap<String, f64>,
}

impl Serialize for Multivector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let coeffs = self
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| c.to_bits() != 0)
            .map(|(m, &c)| (Blade(m as u8).name(), c))
            .collect();
        Wire { signature: self.signature(), coeffs }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Multivector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let wire = Wire::deserialize(d)?;
        let mut mv = Multivector::zero(wire.signature);
        for (name, c) in wire.coeffs {
            let b = Blade::parse(&name, wire.signature).map_err(D::Error::custom)?;
            mv.set(b, c);
        }
        Ok(mv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_sparse_form() {
        let mv: Multivector = serde_json::from_str(r#"{"signature":[3,0],"coeffs":{"1":2.0,"e13":-0.5}}"#).unwrap();
        assert_eq!(mv.scalar_part(), 2.0);
        assert_eq!(mv.get(Blade::from_indices(&[1, 3])), -0.5);
        assert_eq!(mv.norm_inf(), 2.0);
    }

    #[test]
    fn writes_nonzero_terms_only() {
        let mv = Multivector::basis(Signature::CL03, &[1, 2]);
        let s = serde_json::to_string(&mv).unwrap();
        assert_eq!(s, r#"{"signature":[0,3],"coeffs":{"e12":1.0}}"#);
    }

    #[test]
    fn rejects_bad_input() {
        for bad in [
            r#"{"signature":[3,2],"coeffs":{}}"#,
            r#"{"signature":[3,0],"coeffs":{"e4":1.0}}"#,
            r#"{"signature":[3,0],"coeffs":{"e31":1.0}}"#,
            r#"{"signature":[3,0]}"#,
        ] {
            assert!(serde_json::from_str::<Multivector>(bad).is_err(), "{bad}");
        }
    }
}
