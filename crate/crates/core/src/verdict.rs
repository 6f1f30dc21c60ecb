//! Shared verdict and witness types surfaced by the analysis passes.

use serde::{Deserialize, Serialize};

/// Truncation bounds a verdict is certified within.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub n_max: usize,
    pub i_max: usize,
}

impl Bounds {
    pub fn new(n_max: usize, i_max: usize) -> Self {
        Bounds { n_max, i_max }
    }
}

impl std::fmt::Display for Bounds {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(n_max={}, i_max={})", self.n_max, self.i_max)
    }
}

/// A vector in a tensor power `V^(n)`, rendered over the word basis for
/// human cross-checking. Coefficients are rendered exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordVector {
    pub degree: usize,
    pub terms: Vec<(String, String)>,
}

impl std::fmt::Display for WordVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if c == "1" {
                write!(f, "{w}")?;
            } else {
                write!(f, "({c})*{w}")?;
            }
        }
        Ok(())
    }
}

/// Which criterion produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    TorVsJ,
    ComplexExactness,
    BimoduleExactness,
    TheoremDecomposition,
    Lattice,
    MonomialExact,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Method::TorVsJ => "tor_vs_J",
            Method::ComplexExactness => "complex_exactness",
            Method::BimoduleExactness => "bimodule_exactness",
            Method::TheoremDecomposition => "theorem_decomposition",
            Method::Lattice => "lattice",
            Method::MonomialExact => "monomial_exact",
        };
        write!(f, "{s}")
    }
}

/// Data pinpointing why a presentation fails the multi-Koszul property.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FailureWitness {
    /// Homological degree of the first failure, when applicable.
    pub hom_degree: Option<usize>,
    /// Internal degree of the first failure.
    pub internal_degree: usize,
    /// Dimensions of the two sides of the failed comparison
    /// (e.g. Tor dimension vs J dimension, or homology kernel vs image).
    pub left_dim: usize,
    pub right_dim: usize,
    /// Which clause failed, for the lattice and decomposition methods.
    pub clause: String,
    pub vector: Option<WordVector>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Status {
    /// Multi-Koszul as far as the stated truncation; `bounds` is `None` only
    /// for the exact monomial certificate.
    MultiKoszulUpTo { bounds: Option<Bounds> },
    NotMultiKoszul { witness: FailureWitness },
}

impl Status {
    pub fn holds(&self) -> bool {
        matches!(self, Status::MultiKoszulUpTo { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub method: Method,
    #[serde(flatten)]
    pub status: Status,
}

impl Verdict {
    pub fn holds_up_to(method: Method, bounds: Bounds) -> Self {
        Verdict {
            method,
            status: Status::MultiKoszulUpTo {
                bounds: Some(bounds),
            },
        }
    }

    pub fn exact_yes(method: Method) -> Self {
        Verdict {
            method,
            status: Status::MultiKoszulUpTo { bounds: None },
        }
    }

    pub fn fails(method: Method, witness: FailureWitness) -> Self {
        Verdict {
            method,
            status: Status::NotMultiKoszul { witness },
        }
    }

    pub fn holds(&self) -> bool {
        self.status.holds()
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.status {
            Status::MultiKoszulUpTo { bounds: Some(b) } => {
                write!(f, "[{}] multi-Koszul up to {}", self.method, b)
            }
            Status::MultiKoszulUpTo { bounds: None } => {
                write!(f, "[{}] multi-Koszul (exact certificate)", self.method)
            }
            Status::NotMultiKoszul { witness } => {
                write!(
                    f,
                    "[{}] NOT multi-Koszul: {} at (i={:?}, n={}), dims {} vs {}",
                    self.method,
                    witness.clause,
                    witness.hom_degree,
                    witness.internal_degree,
                    witness.left_dim,
                    witness.right_dim
                )?;
                if let Some(v) = &witness.vector {
                    write!(f, ", witness {v}")?;
                }
                Ok(())
            }
        }
    }
}
