use std::fmt;

use serde::{Deserialize, Serialize};

/// The four shipped varieties of Ω-groups.
///
/// Ring-like varieties carry the coefficient modulus `m ≥ 2`; their carriers
/// are free `Z_m`-modules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Variety {
    Group,
    Ring(u32),
    NaRing(u32),
    Lie(u32),
}

/// Variety tag without the modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VarietyTag {
    Group,
    Ring,
    NaRing,
    Lie,
}

impl Variety {
    pub fn tag(self) -> VarietyTag {
        match self {
            Variety::Group => VarietyTag::Group,
            Variety::Ring(_) => VarietyTag::Ring,
            Variety::NaRing(_) => VarietyTag::NaRing,
            Variety::Lie(_) => VarietyTag::Lie,
        }
    }

    pub fn modulus(self) -> Option<u32> {
        match self {
            Variety::Group => None,
            Variety::Ring(m) | Variety::NaRing(m) | Variety::Lie(m) => Some(m),
        }
    }

    pub fn is_ring_like(self) -> bool {
        !matches!(self, Variety::Group)
    }

    /// Orzech categories of interest: groups, rings and Lie algebras.
    pub fn is_category_of_interest(self) -> bool {
        !matches!(self, Variety::NaRing(_))
    }

    pub fn is_action_accessible(self) -> bool {
        self.is_category_of_interest()
    }

    pub fn is_action_representative(self) -> bool {
        matches!(self, Variety::Group | Variety::Lie(_))
    }

    pub fn with_tag(tag: VarietyTag, modulus: Option<u32>) -> Option<Variety> {
        match (tag, modulus) {
            (VarietyTag::Group, None) => Some(Variety::Group),
            (VarietyTag::Ring, Some(m)) if m >= 2 => Some(Variety::Ring(m)),
            (VarietyTag::NaRing, Some(m)) if m >= 2 => Some(Variety::NaRing(m)),
            (VarietyTag::Lie, Some(m)) if m >= 2 => Some(Variety::Lie(m)),
            _ => None,
        }
    }
}

impl VarietyTag {
    pub fn keyword(self) -> &'static str {
        match self {
            VarietyTag::Group => "group",
            VarietyTag::Ring => "ring",
            VarietyTag::NaRing => "naring",
            VarietyTag::Lie => "lie",
        }
    }

    pub fn from_keyword(s: &str) -> Option<VarietyTag> {
        match s {
            "group" => Some(VarietyTag::Group),
            "ring" => Some(VarietyTag::Ring),
            "naring" => Some(VarietyTag::NaRing),
            "lie" => Some(VarietyTag::Lie),
            _ => None,
        }
    }
}

impl fmt::Display for Variety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variety::Group => write!(f, "group"),
            Variety::Ring(m) => write!(f, "ring/Z{m}"),
            Variety::NaRing(m) => write!(f, "naring/Z{m}"),
            Variety::Lie(m) => write!(f, "lie/Z{m}"),
        }
    }
}

pub fn is_prime(m: u32) -> bool {
    m >= 2 && (2..).take_while(|d| d * d <= m).all(|d| m % d != 0)
}
