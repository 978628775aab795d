use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Structural identifier of an enumerated basis.
///
/// A label is a 64-bit FNV-1a hash of a canonical descriptor of the
/// enumeration parameters, so two independently built bases with the same
/// parameters carry the same label.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisLabel(u64);

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

impl BasisLabel {
    pub fn from_descriptor(descriptor: &str) -> Self {
        let mut hash = FNV_OFFSET;
        for byte in descriptor.bytes() {
            hash ^= u64::from(byte);
            hash = hash.wrapping_mul(FNV_PRIME);
        }
        BasisLabel(hash)
    }

    /// Label for a bare coordinate space of the given dimension.
    pub fn coordinates(dim: usize) -> Self {
        Self::from_descriptor(&format!("coord:{dim}"))
    }

    /// Label of the lexicographic product basis, `self` major.
    pub fn tensor(self, other: BasisLabel) -> Self {
        Self::from_descriptor(&format!("tensor:{self}:{other}"))
    }

    pub fn value(self) -> u64 {
        self.0
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:016x}", self.0)
    }
}

impl fmt::Debug for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BasisLabel({self})")
    }
}

impl std::str::FromStr for BasisLabel {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        u64::from_str_radix(s, 16)
            .map(BasisLabel)
            .map_err(|_| crate::Error::Parse(format!("bad basis label {s:?}")))
    }
}

impl Serialize for BasisLabel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for BasisLabel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
