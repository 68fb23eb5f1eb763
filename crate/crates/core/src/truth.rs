//! Three-valued answers with provenance and checkable witnesses.

use alloc::string::String;
use core::fmt;

use crate::reesfam::RabElement;
use crate::ringcore::RingElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Truth {
    Yes,
    No,
    Unknown,
}

/// Where a truth value came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    Computed,
    Asserted,
    Unknown,
}

/// Evidence backing a yes/no answer.
#[derive(Clone, Debug, PartialEq)]
pub enum Witness {
    Element(RingElement),
    /// Two nonzero elements whose product vanishes.
    Pair(RingElement, RingElement),
    RabElement(RabElement),
    RabPair(RabElement, RabElement),
    /// A short textual certificate, e.g. "16 is not squarefree".
    Certificate(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct TriState {
    pub value: Truth,
    pub provenance: Provenance,
    pub witness: Option<Witness>,
    pub reason: String,
}

impl TriState {
    pub fn yes(witness: Witness) -> Self {
        TriState { value: Truth::Yes, provenance: Provenance::Computed, witness: Some(witness), reason: String::new() }
    }

    pub fn no(witness: Witness) -> Self {
        TriState { value: Truth::No, provenance: Provenance::Computed, witness: Some(witness), reason: String::new() }
    }

    pub fn decided(value: bool, witness: Witness) -> Self {
        if value {
            Self::yes(witness)
        } else {
            Self::no(witness)
        }
    }

    pub fn unknown(reason: impl Into<String>) -> Self {
        TriState { value: Truth::Unknown, provenance: Provenance::Unknown, witness: None, reason: reason.into() }
    }

    pub fn asserted(value: bool) -> Self {
        TriState {
            value: if value { Truth::Yes } else { Truth::No },
            provenance: Provenance::Asserted,
            witness: Some(Witness::Certificate("user assertion".into())),
            reason: String::new(),
        }
    }

    pub fn with_reason(mut self, reason: impl Into<String>) -> Self {
        self.reason = reason.into();
        self
    }

    pub fn is_yes(&self) -> bool {
        self.value == Truth::Yes
    }

    pub fn is_no(&self) -> bool {
        self.value == Truth::No
    }

    pub fn is_unknown(&self) -> bool {
        self.value == Truth::Unknown
    }

    /// `Some(bool)` when decided.
    pub fn as_bool(&self) -> Option<bool> {
        match self.value {
            Truth::Yes => Some(true),
            Truth::No => Some(false),
            Truth::Unknown => None,
        }
    }
}

impl fmt::Display for Truth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Truth::Yes => "yes",
            Truth::No => "no",
            Truth::Unknown => "unknown",
        })
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Computed => "computed",
            Provenance::Asserted => "asserted",
            Provenance::Unknown => "unknown",
        })
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Element(x) => write!(f, "{x}"),
            Witness::Pair(x, y) => write!(f, "({x}) * ({y}) = 0"),
            Witness::RabElement(x) => write!(f, "{x}"),
            Witness::RabPair(x, y) => write!(f, "[{x}] * [{y}] = 0"),
            Witness::Certificate(s) => f.write_str(s),
        }
    }
}
