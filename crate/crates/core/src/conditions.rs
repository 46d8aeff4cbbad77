//! Admissibility of a candidate `(X, v, k)`.
//!
//! A Mukai vector `v = (r, h, s)` is admissible for `k` points when
//!
//! 0. `M_{X,h}(v)` is nonempty: `v² ≥ −2`,
//! 1. `χ(E) ≥ v²/2 + (r+1)k + 1`,
//! 2. every sheaf in `M_{X,h}(v)` is locally free: `v² + 2 < 2r`,
//! 3. `M_{X,h}(v)` is fine: `gcd(r, c1·h, χ) = 1`.
//!
//! Under (1) a stable bundle `E` has `H^1(E ⊗ I_Z) = H^2(E ⊗ I_Z) = 0` for every
//! `[Z] ∈ X^[k]`. The extension `0 → E* → G → I_Z → 0` used to prove this has
//! `χ(G, G) = 2(margin + 2)`, which is computed here both from the closed form and
//! directly from `v(G) = v(E*) + v(I_Z)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::decimal;
use crate::error::{Error, Result};
use crate::lattice::{
    dual_vector, euler_char, euler_pair, gcd3, ideal_sheaf_vector, mukai_square, require_points,
    twisted_chi, K3Surface, MukaiVector,
};

/// Outcome of inequality (1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InequalityCheck {
    pub holds: bool,
    /// `v²/2 + (r+1)k + 1`
    pub threshold: BigInt,
    /// `χ(E) − threshold`
    pub margin: BigInt,
}

/// `(h⁰, h¹, h²)` of `E ⊗ I_Z`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VanishingCertificate {
    #[serde(with = "decimal")]
    pub h0: BigInt,
    #[serde(with = "decimal")]
    pub h1: BigInt,
    #[serde(with = "decimal")]
    pub h2: BigInt,
}

/// Every intermediate quantity and verdict for one candidate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibilityReport {
    #[serde(with = "decimal")]
    pub chi: BigInt,
    #[serde(with = "decimal")]
    pub v_sq: BigInt,
    #[serde(with = "decimal")]
    pub threshold: BigInt,
    #[serde(with = "decimal")]
    pub margin: BigInt,
    pub nonempty_ok: bool,
    pub ineq_ok: bool,
    pub locally_free_ok: bool,
    pub fine_ok: bool,
    /// `(r, m·h², r + s)`
    #[serde(with = "decimal::triple")]
    pub gcd_triple: [BigInt; 3],
    #[serde(with = "decimal")]
    pub gcd: BigInt,
    pub primitive_ok: bool,
    pub admissible: bool,
}

impl AdmissibilityReport {
    pub fn is_admissible(&self) -> bool {
        self.admissible
    }
}

fn threshold(surface: &K3Surface, v: &MukaiVector, k: u64) -> BigInt {
    let half_square = mukai_square(surface, v).div_floor(&BigInt::from(2));
    half_square + (&v.r + 1) * BigInt::from(k) + 1
}

pub fn check_inequality(surface: &K3Surface, v: &MukaiVector, k: u64) -> Result<InequalityCheck> {
    v.require_positive_rank()?;
    require_points(k)?;
    let threshold = threshold(surface, v, k);
    let margin = euler_char(v) - &threshold;
    Ok(InequalityCheck {
        holds: !margin.is_negative(),
        threshold,
        margin,
    })
}

/// `v² + 2 < 2r`.
pub fn check_local_freeness(surface: &K3Surface, v: &MukaiVector) -> Result<bool> {
    v.require_positive_rank()?;
    Ok(mukai_square(surface, v) + 2 < &v.r * 2)
}

/// `gcd(r, m·h², r + s) = 1`; returns the verdict and the gcd.
pub fn check_fineness(surface: &K3Surface, v: &MukaiVector) -> Result<(bool, BigInt)> {
    v.require_positive_rank()?;
    let g = gcd3(&v.r, &(&v.m * surface.h_squared()), &euler_char(v));
    Ok((g.is_one(), g))
}

/// `v² ≥ −2`; only meaningful for primitive `v`.
pub fn check_nonempty(surface: &K3Surface, v: &MukaiVector) -> Result<bool> {
    v.require_positive_rank()?;
    v.require_primitive()?;
    Ok(mukai_square(surface, v) >= BigInt::from(-2))
}

pub fn admissibility_report(
    surface: &K3Surface,
    v: &MukaiVector,
    k: u64,
) -> Result<AdmissibilityReport> {
    let ineq = check_inequality(surface, v, k)?;
    let locally_free_ok = check_local_freeness(surface, v)?;
    let (fine_ok, gcd) = check_fineness(surface, v)?;
    let v_sq = mukai_square(surface, v);
    // Evaluated directly so that non-primitive inputs still get a full report.
    let nonempty_ok = v_sq >= BigInt::from(-2);
    let primitive_ok = v.is_primitive_class();
    let admissible = primitive_ok && nonempty_ok && ineq.holds && locally_free_ok && fine_ok;
    Ok(AdmissibilityReport {
        chi: euler_char(v),
        v_sq,
        threshold: ineq.threshold,
        margin: ineq.margin,
        nonempty_ok,
        ineq_ok: ineq.holds,
        locally_free_ok,
        fine_ok,
        gcd_triple: [v.r.clone(), &v.m * surface.h_squared(), euler_char(v)],
        gcd,
        primitive_ok,
        admissible,
    })
}

/// `χ(G, G) = 2(−v²/2 + χ(E) − (r+1)k + 1)`.
pub fn extension_euler_formula(surface: &K3Surface, v: &MukaiVector, k: u64) -> Result<BigInt> {
    require_points(k)?;
    let half_square = mukai_square(surface, v).div_floor(&BigInt::from(2));
    let inner = -half_square + euler_char(v) - (&v.r + 1) * BigInt::from(k) + 1;
    Ok(inner * 2)
}

/// `χ(G, G) = −⟨v(G), v(G)⟩` with `v(G) = v(E*) + v(I_Z)`.
pub fn extension_euler_direct(surface: &K3Surface, v: &MukaiVector, k: u64) -> Result<BigInt> {
    let g = &dual_vector(v) + &ideal_sheaf_vector(k)?;
    Ok(euler_pair(surface, &g, &g))
}

/// Cohomology of `E ⊗ I_Z` for a stable bundle `E` satisfying inequality (1):
/// `h⁰ = r + s − rk` and `h¹ = h² = 0`.
pub fn vanishing_certificate(
    surface: &K3Surface,
    v: &MukaiVector,
    k: u64,
) -> Result<VanishingCertificate> {
    if !v.is_primitive_class() {
        return Err(Error::HypothesisNotMet("c1(E) must equal h"));
    }
    if !check_inequality(surface, v, k)?.holds {
        return Err(Error::HypothesisNotMet(
            "chi(E) >= v^2/2 + (r+1)k + 1 fails",
        ));
    }
    let h0 = twisted_chi(v, k)?;
    if h0.is_negative() {
        return Err(Error::InconsistentCertificate(h0));
    }
    Ok(VanishingCertificate {
        h0,
        h1: BigInt::zero(),
        h2: BigInt::zero(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(h2: i64) -> K3Surface {
        K3Surface::new(h2).unwrap()
    }

    fn v(r: i64, m: i64, s: i64) -> MukaiVector {
        MukaiVector::new(r, m, s)
    }

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn inequality_examples() {
        let a = check_inequality(&x(50), &v(3, 1, 8), 2).unwrap();
        assert!(a.holds);
        assert_eq!(a.margin, int(1));
        assert_eq!(a.threshold, int(10));

        let b = check_inequality(&x(186), &v(5, 1, 18), 3).unwrap();
        assert!(b.holds);
        assert_eq!(b.margin, int(1));
        assert_eq!(b.threshold, int(22));

        let c = check_inequality(&x(50), &v(4, 1, 6), 2).unwrap();
        assert!(!c.holds);
        assert_eq!(c.margin, int(-2));
    }

    #[test]
    fn inequality_rejects_bad_input() {
        assert_eq!(
            check_inequality(&x(50), &v(0, 1, 8), 2),
            Err(Error::NonPositiveRank(int(0)))
        );
        assert_eq!(
            check_inequality(&x(50), &v(3, 1, 8), 0),
            Err(Error::NonPositivePoints)
        );
    }

    #[test]
    fn local_freeness_examples() {
        assert!(check_local_freeness(&x(50), &v(3, 1, 8)).unwrap());
        assert!(!check_local_freeness(&x(50), &v(2, 1, 12)).unwrap());
        assert!(!check_local_freeness(&x(2), &v(1, 1, 1)).unwrap());
        assert!(check_local_freeness(&x(2), &v(-1, 1, 1)).is_err());
    }

    #[test]
    fn fineness_examples() {
        assert_eq!(check_fineness(&x(50), &v(3, 1, 8)).unwrap(), (true, int(1)));
        assert_eq!(check_fineness(&x(4), &v(2, 1, 4)).unwrap(), (false, int(2)));
        assert_eq!(check_fineness(&x(4), &v(1, 7, -30)).unwrap(), (true, int(1)));
    }

    #[test]
    fn nonempty_examples() {
        assert!(check_nonempty(&x(50), &v(3, 1, 8)).unwrap());
        assert!(check_nonempty(&x(50), &v(1, 1, 26)).unwrap());
        assert!(!check_nonempty(&x(50), &v(1, 1, 27)).unwrap());
        assert_eq!(
            check_nonempty(&x(50), &v(3, 2, 8)),
            Err(Error::NotPrimitive(int(2)))
        );
    }

    #[test]
    fn reports() {
        let a = admissibility_report(&x(50), &v(3, 1, 8), 2).unwrap();
        assert!(a.is_admissible());
        assert_eq!(a.chi, int(11));
        assert_eq!(a.v_sq, int(2));
        assert_eq!(a.gcd_triple, [int(3), int(50), int(11)]);

        let b = admissibility_report(&x(186), &v(5, 1, 18), 3).unwrap();
        assert!(b.is_admissible());
        assert_eq!(b.margin, int(1));

        let c = admissibility_report(&x(50), &v(3, 2, 8), 2).unwrap();
        assert!(!c.primitive_ok);
        assert!(!c.is_admissible());
    }

    #[test]
    fn extension_euler_examples() {
        assert_eq!(extension_euler_formula(&x(50), &v(3, 1, 8), 2).unwrap(), int(6));
        assert_eq!(extension_euler_direct(&x(50), &v(3, 1, 8), 2).unwrap(), int(6));
        assert_eq!(extension_euler_formula(&x(186), &v(5, 1, 18), 3).unwrap(), int(6));
        assert_eq!(extension_euler_direct(&x(186), &v(5, 1, 18), 3).unwrap(), int(6));
        for h2 in [2, 10, 98] {
            assert_eq!(
                extension_euler_direct(&x(h2), &v(1, 0, 1), 1).unwrap(),
                extension_euler_formula(&x(h2), &v(1, 0, 1), 1).unwrap()
            );
        }
    }

    #[test]
    fn vanishing_examples() {
        let a = vanishing_certificate(&x(50), &v(3, 1, 8), 2).unwrap();
        assert_eq!((a.h0, a.h1, a.h2), (int(5), int(0), int(0)));
        let b = vanishing_certificate(&x(186), &v(5, 1, 18), 3).unwrap();
        assert_eq!(b.h0, int(8));
        assert!(matches!(
            vanishing_certificate(&x(50), &v(4, 1, 6), 2),
            Err(Error::HypothesisNotMet(_))
        ));
        assert!(matches!(
            vanishing_certificate(&x(50), &v(3, 2, 8), 2),
            Err(Error::HypothesisNotMet(_))
        ));
    }

    #[test]
    fn vanishing_detects_negative_h0() {
        // v² very negative makes (1) hold while r + s − rk < 0.
        let surface = x(2);
        let e = v(10, 1, 5);
        assert!(check_inequality(&surface, &e, 2).unwrap().holds);
        assert_eq!(
            vanishing_certificate(&surface, &e, 2),
            Err(Error::InconsistentCertificate(int(-5)))
        );
    }
}
