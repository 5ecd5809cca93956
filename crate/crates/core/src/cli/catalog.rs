//! Built-in instances. Every entry is parsed and run through the full verification on load.

use super::parse::{parse_structure_file, ParseError, StructureFile};
use crate::curvature::verify_all;
use thiserror::Error;

pub struct CatalogEntry {
    pub name: &'static str,
    pub note: &'static str,
    pub source: &'static str,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown catalog instance '{0}'")]
    Unknown(String),
    #[error("catalog instance '{name}': {error}")]
    Parse { name: String, error: ParseError },
    #[error("catalog instance '{name}' fails verification: {failures:?}")]
    Verification { name: String, failures: Vec<String> },
}

pub const CATALOG: &[CatalogEntry] = &[
    CatalogEntry {
        name: "abelian",
        note: "abelian Lie algebra R^5; flat",
        source: "expect hypo = true\nexpect s = 0\nexpect lambda = 0\nexpect mu = 0\n",
    },
    CatalogEntry {
        name: "heisenberg",
        note: "5-dimensional Heisenberg algebra (0,0,0,0,12+34) scaled to dα = −2ω₁; standard Sasakian example",
        source: "d5 = -2*12 - 2*34\n\
                 expect contact_hypo = true\nexpect kahler_cone = true\nexpect sasaki_einstein_structure = false\n\
                 expect s = -4\nexpect lambda = -8\nexpect mu = 4\n",
    },
    CatalogEntry {
        name: "heisenberg_sheared",
        note: "Heisenberg algebra in the coframe w¹ ↦ w¹ + w⁵; nonzero ν₄ and off-diagonal Ricci terms",
        source: "d1 = -2*12 - 2*25 - 2*34\nd5 = -2*12 - 2*25 - 2*34\n",
    },
    CatalogEntry {
        name: "n_12",
        note: "nilpotent (0,0,0,0,12); hypo in the standard coframe (hypo nilpotent list)",
        source: "d5 = 12\nexpect hypo = true\n",
    },
    CatalogEntry {
        name: "n_12_34",
        note: "nilpotent (0,0,0,0,12+34); hypo in the standard coframe (hypo nilpotent list)",
        source: "d5 = 12 + 34\nexpect hypo = true\n",
    },
    CatalogEntry {
        name: "n_12_13",
        note: "nilpotent (0,0,0,12,13) in a signed-permutation coframe where the structure is hypo",
        source: "d2 = -15\nd4 = -35\nexpect hypo = true\n",
    },
    CatalogEntry {
        name: "n_12_13_14",
        note: "nilpotent (0,0,12,13,14) in a signed-permutation coframe where the structure is hypo",
        source: "d2 = 45\nd3 = -15\nd4 = 35\nexpect hypo = true\n",
    },
    CatalogEntry {
        name: "nil_13_24",
        note: "nilpotent (0,0,0,12,13+24); not hypo in this coframe",
        source: "d4 = 12\nd5 = 13 + 24\n",
    },
    CatalogEntry {
        name: "su2_r2",
        note: "su(2) ⊕ R² with su(2) on w¹,w²,w³; nonzero ν₂, ν₃",
        source: "d1 = -23\nd2 = 13\nd3 = -12\n",
    },
    CatalogEntry {
        name: "aff_r3",
        note: "aff(R) ⊕ R³ with the affine pair on w¹,w⁵; nonzero ν₄ and d*ν₄",
        source: "d5 = -15\n",
    },
    CatalogEntry {
        name: "aff_sheared",
        note: "aff(R) ⊕ R³ in the coframe w⁵ ↦ w⁵ + w²",
        source: "d5 = 12 - 15\n",
    },
    CatalogEntry {
        name: "almost_abelian",
        note: "almost abelian R⁴ ⋊ R with a non-normal derivation; all torsion classes nonzero",
        source: "d1 = 15 + 2*25 + 45\nd2 = -25 + 35\nd3 = 2*15 + 3*35 + 45\nd4 = 15 + 25 - 2*45\n",
    },
    CatalogEntry {
        name: "almost_abelian_sheared",
        note: "almost abelian entry in the coframe w⁵ ↦ w⁵ + w¹; nonzero d(J₁ν₄)",
        source: "d1 = 2*12 + 14 + 15 + 2*25 + 45\nd2 = -12 + 13 - 25 + 35\n\
                 d3 = 3*13 + 14 + 2*15 + 3*35 + 45\nd4 = 12 - 2*14 + 15 + 25 - 2*45\n\
                 d5 = 2*12 + 14 + 15 + 2*25 + 45\n",
    },
    CatalogEntry {
        name: "contact_hypo_sigma3",
        note: "contact-Hypo with f₂₃ = −1 and σ₃ = −(w¹³+w²⁴); not α-Einstein",
        source: "d1 = 14 - 23 + 25\nd3 = 12 - 34 + 45\nd5 = -2*12 - 2*34\n\
                 expect contact_hypo = true\nexpect kahler_cone = false\n\
                 expect s = -13\nexpect lambda = -16\nexpect mu = 3\n",
    },
    CatalogEntry {
        name: "contact_hypo_rotated",
        note: "contact_hypo_sigma3 rotated by (3/5, 4/5) in the w¹w² plane; σ₂ and σ₃ both nonzero",
        source: "d1 = 12/25*13 + 9/25*14 - 12/25*15 - 9/25*23 + 12/25*24 + 9/25*25\n\
                 d2 = 16/25*13 + 12/25*14 - 16/25*15 - 12/25*23 + 16/25*24 + 12/25*25\n\
                 d3 = 12 - 34 + 45\nd5 = -2*12 - 2*34\n\
                 expect contact_hypo = true\nexpect s = -13\nexpect lambda = -16\nexpect mu = 3\n",
    },
];

/// Each convention switch and the instance whose oracle agreement rules out the alternative.
pub const CALIBRATION_PINS: &[(&str, &str)] = &[
    ("dstar_sign", "aff_r3"),
    ("odot_sign", "heisenberg_sheared"),
    ("phi1_duplicate_twice", "su2_r2"),
    ("phi1_duplicate_swapped", "su2_r2"),
    ("phi1_sigma1_reeb", "almost_abelian"),
    ("phi1_without_dj1_nu4", "almost_abelian_sheared"),
    ("phi2_f12_sigma2", "almost_abelian"),
];

pub fn entry(name: &str) -> Option<&'static CatalogEntry> {
    CATALOG.iter().find(|e| e.name == name)
}

pub fn names() -> Vec<&'static str> {
    CATALOG.iter().map(|e| e.name).collect()
}

/// Parses without the verification pass.
pub fn parse_entry(e: &CatalogEntry) -> Result<StructureFile, CatalogError> {
    parse_structure_file(e.source, e.name).map_err(|error| CatalogError::Parse {
        name: e.name.into(),
        error,
    })
}

/// Parses and verifies; an entry failing any check is rejected.
pub fn load(name: &str) -> Result<StructureFile, CatalogError> {
    let e = entry(name).ok_or_else(|| CatalogError::Unknown(name.into()))?;
    let file = parse_entry(e)?;
    let report = verify_all(&file.coframe);
    if !report.all_pass() {
        return Err(CatalogError::Verification {
            name: name.into(),
            failures: report.failures().iter().map(|c| format!("{}: {}", c.check, c.detail)).collect(),
        });
    }
    Ok(file)
}
