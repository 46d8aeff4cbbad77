//! A single record with every computed invariant of a candidate `(X, v, k)`.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::conditions::{
    admissibility_report, extension_euler_direct, extension_euler_formula, vanishing_certificate,
    AdmissibilityReport, VanishingCertificate,
};
use crate::decimal;
use crate::error::Result;
use crate::hilb::{image_c1, image_rank, product_c1, taut_c1, taut_rank, HilbNSClass};
use crate::lattice::{K3Surface, MukaiVector};
use crate::pfunctor::{ext_dims_on_hilb, ext_dims_on_x, moduli_dim, GradedDims};

/// Fixed remarks on quantities that exist but are not computed.
pub struct Notes;

impl Notes {
    pub const ALL: [&'static str; 3] = [
        "ample class H near h_k making Phi(E) mu_H-stable: exists, not computed",
        "ample class H uniform over M_{X,h}(v): exists, not computed",
        "cohomological transform Phi^C(v): only rank and c1 of the image are computed",
    ];
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VectorEcho {
    #[serde(with = "decimal")]
    pub h_squared: BigInt,
    pub k: u64,
    #[serde(with = "decimal")]
    pub r: BigInt,
    #[serde(with = "decimal")]
    pub m: BigInt,
    #[serde(with = "decimal")]
    pub s: BigInt,
}

/// Rank and `c1` of a bundle on `X^[k]`; either may be undefined for the input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleBlock {
    #[serde(with = "decimal::option")]
    pub rank: Option<BigInt>,
    pub c1: Option<HilbNSClass>,
}

/// `χ(G, G)` evaluated by the closed form and by the pairing of `v(E*) + v(I_Z)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionEuler {
    #[serde(with = "decimal")]
    pub formula: BigInt,
    #[serde(with = "decimal")]
    pub direct: BigInt,
}

/// Fields that do not apply to the input (e.g. `c1` on `X^[1]`, or the image of a
/// vector failing the hypotheses) are `None`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub input: VectorEcho,
    pub admissible: bool,
    pub report: AdmissibilityReport,
    pub vanishing: Option<VanishingCertificate>,
    pub image: BundleBlock,
    pub taut: BundleBlock,
    #[serde(with = "decimal::option")]
    pub product_c1: Option<BigInt>,
    #[serde(with = "decimal::option")]
    pub moduli_dim: Option<BigInt>,
    pub ext_on_x: Option<GradedDims>,
    pub ext_on_hilb: Option<GradedDims>,
    pub extension_euler: ExtensionEuler,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Certificate {
    /// Fails only when `r ≤ 0` or `k = 0`.
    pub fn build(surface: &K3Surface, v: &MukaiVector, k: u64) -> Result<Self> {
        let report = admissibility_report(surface, v, k)?;
        Ok(Self {
            input: VectorEcho {
                h_squared: surface.h_squared().clone(),
                k,
                r: v.r.clone(),
                m: v.m.clone(),
                s: v.s.clone(),
            },
            admissible: report.admissible,
            vanishing: vanishing_certificate(surface, v, k).ok(),
            image: BundleBlock {
                rank: image_rank(v, k).ok(),
                c1: image_c1(v, k).ok(),
            },
            taut: BundleBlock {
                rank: taut_rank(v, k).ok(),
                c1: taut_c1(v, k).ok(),
            },
            product_c1: product_c1(v, k).ok().map(|c| c.a),
            moduli_dim: moduli_dim(surface, v).ok(),
            ext_on_x: ext_dims_on_x(surface, v, v, true).ok(),
            ext_on_hilb: ext_dims_on_hilb(surface, v, v, k, true).ok(),
            extension_euler: ExtensionEuler {
                formula: extension_euler_formula(surface, v, k)?,
                direct: extension_euler_direct(surface, v, k)?,
            },
            report,
            notes: Vec::new(),
        })
    }

    pub fn with_notes(mut self) -> Self {
        self.notes = Notes::ALL.iter().map(|n| n.to_string()).collect();
        self
    }

    pub fn surface(&self) -> K3Surface {
        K3Surface::new(self.input.h_squared.clone()).expect("validated at construction")
    }

    pub fn vector(&self) -> MukaiVector {
        MukaiVector::new(
            self.input.r.clone(),
            self.input.m.clone(),
            self.input.s.clone(),
        )
    }
}
