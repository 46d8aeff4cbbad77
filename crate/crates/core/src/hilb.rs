//! Invariants of `Φ(E)` and of the tautological bundle `E^[k]` on `X^[k]`.
//!
//! `NS(X^[k]) = Zh_k ⊕ Zδ` for `k ≥ 2`, where `2δ` is the exceptional divisor of
//! the Hilbert–Chow morphism. Classes are stored as coefficients of `h_k` and of
//! `δ` itself. The two bundles sit in
//!
//! ```text
//! 0 → Φ(E) → H⁰(E) ⊗ O → E^[k] → 0
//! ```
//!
//! so their ranks add up to `χ(E)` and their first Chern classes cancel.
//!
//! Slope comparisons are made on the product `X^k` against
//! `h_{X^k} = Σ q_i* h`, where every `S_k`-invariant class is `a · Σ q_i* h`.

use std::ops::{Add, Neg};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::decimal;
use crate::error::{Error, Result};
use crate::lattice::{euler_char, require_points, twisted_chi, K3Surface, MukaiVector};

/// `a·h_k + b·δ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct HilbNSClass {
    pub a: BigInt,
    pub b: BigInt,
}

impl HilbNSClass {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Self {
            a: a.into(),
            b: b.into(),
        }
    }
}

impl Add for &HilbNSClass {
    type Output = HilbNSClass;

    fn add(self, rhs: &HilbNSClass) -> HilbNSClass {
        HilbNSClass {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Neg for &HilbNSClass {
    type Output = HilbNSClass;

    fn neg(self) -> HilbNSClass {
        HilbNSClass {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

// Rendered as `["a", "b"]`.
impl Serialize for HilbNSClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (self.a.to_string(), self.b.to_string()).serialize(s)
    }
}

impl<'de> Deserialize<'de> for HilbNSClass {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let (a, b) = <(String, String)>::deserialize(d)?;
        Ok(Self {
            a: a.parse().map_err(D::Error::custom)?,
            b: b.parse().map_err(D::Error::custom)?,
        })
    }
}

/// `a · Σ_{i=1}^k q_i* h` on `X^k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ProductClass {
    pub a: BigInt,
}

impl ProductClass {
    pub fn new(a: impl Into<BigInt>) -> Self {
        Self { a: a.into() }
    }
}

impl Add for &ProductClass {
    type Output = ProductClass;

    fn add(self, rhs: &ProductClass) -> ProductClass {
        ProductClass {
            a: &self.a + &rhs.a,
        }
    }
}

impl Neg for &ProductClass {
    type Output = ProductClass;

    fn neg(self) -> ProductClass {
        ProductClass { a: -&self.a }
    }
}

/// Rank and first Chern class of a bundle on `X^[k]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SheafInvariants {
    #[serde(with = "decimal")]
    pub rank: BigInt,
    pub c1: HilbNSClass,
}

fn require_hilb_points(k: u64) -> Result<()> {
    if k < 2 {
        Err(Error::TooFewPoints(k))
    } else {
        Ok(())
    }
}

/// Rank of `Φ(E)`: `r + s − rk`.
pub fn image_rank(v: &MukaiVector, k: u64) -> Result<BigInt> {
    v.require_positive_rank()?;
    let rank = twisted_chi(v, k)?;
    if rank.is_negative() {
        return Err(Error::NegativeRank(rank));
    }
    Ok(rank)
}

/// `c1(Φ(E)) = −m·h_k + r·δ`.
pub fn image_c1(v: &MukaiVector, k: u64) -> Result<HilbNSClass> {
    v.require_positive_rank()?;
    require_hilb_points(k)?;
    Ok(HilbNSClass {
        a: -&v.m,
        b: v.r.clone(),
    })
}

/// Rank of `E^[k]`: `r·k`.
pub fn taut_rank(v: &MukaiVector, k: u64) -> Result<BigInt> {
    v.require_positive_rank()?;
    require_hilb_points(k)?;
    Ok(&v.r * BigInt::from(k))
}

/// `c1(E^[k]) = m·h_k − r·δ`.
pub fn taut_c1(v: &MukaiVector, k: u64) -> Result<HilbNSClass> {
    v.require_positive_rank()?;
    require_hilb_points(k)?;
    Ok(HilbNSClass {
        a: v.m.clone(),
        b: -&v.r,
    })
}

pub fn image_invariants(v: &MukaiVector, k: u64) -> Result<SheafInvariants> {
    Ok(SheafInvariants {
        rank: image_rank(v, k)?,
        c1: image_c1(v, k)?,
    })
}

pub fn taut_invariants(v: &MukaiVector, k: u64) -> Result<SheafInvariants> {
    Ok(SheafInvariants {
        rank: taut_rank(v, k)?,
        c1: taut_c1(v, k)?,
    })
}

/// Rank of the trivial middle term `H⁰(E) ⊗ O`, which is `χ(E)`.
pub fn middle_rank(v: &MukaiVector) -> BigInt {
    euler_char(v)
}

/// `c1((Φ(E))_{X^k}) = −Σ q_i* h`.
pub fn product_c1(v: &MukaiVector, k: u64) -> Result<ProductClass> {
    v.require_primitive()?;
    require_hilb_points(k)?;
    Ok(ProductClass::new(-1))
}

/// Top self-intersection `(Σ_{i=1}^k q_i* h)^{2k} = (2k)!/2^k · (h²)^k` on `X^k`.
///
/// Only the monomials `Π (q_i* h)²` survive, each with multinomial coefficient
/// `(2k)!/(2!)^k` and degree `(h²)^k`.
pub fn product_selfintersection(surface: &K3Surface, k: u64) -> BigInt {
    let mut coefficient = BigInt::one();
    for i in 1..=k {
        // (2i)(2i − 1)/2 = i(2i − 1)
        coefficient *= BigInt::from(i) * BigInt::from(2 * i - 1);
    }
    coefficient * num_traits::pow::pow(surface.h_squared().clone(), k as usize)
}

/// Slope `c1(F)·h_{X^k}^{2k−1} / rk(F)` of a class `a · Σ q_i* h` on `X^k`.
pub fn slope_on_product(
    surface: &K3Surface,
    k: u64,
    class: &ProductClass,
    rank: &BigInt,
) -> Result<BigRational> {
    require_points(k)?;
    if !rank.is_positive() {
        return Err(Error::NonPositiveRank(rank.clone()));
    }
    let degree = &class.a * product_selfintersection(surface, k);
    Ok(BigRational::new(degree, rank.clone()))
}

/// How an `S_k`-invariant subsheaf `F` of `(Φ(E))_{X^k}` with `c1(F) = a · Σ q_i* h`
/// is ruled out as destabilizing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DestabilizerCase {
    /// `a ≤ −1`: slope strictly below that of `(Φ(E))_{X^k}`.
    NegativeSlopeNotDestabilizing,
    /// `a = 0`: would force `O_{X^k} ⊆ F`, contradicting `H⁰(X^k, (Φ(E))_{X^k}) = 0`.
    ZeroSlopeSectionArgument,
    /// `a ≥ 1`: a trivial bundle has no subsheaf of positive slope.
    PositiveSlopeImpossible,
}

pub fn destabilizer_case(a: &BigInt) -> DestabilizerCase {
    match a.sign() {
        num_bigint::Sign::Minus => DestabilizerCase::NegativeSlopeNotDestabilizing,
        num_bigint::Sign::NoSign => DestabilizerCase::ZeroSlopeSectionArgument,
        num_bigint::Sign::Plus => DestabilizerCase::PositiveSlopeImpossible,
    }
}
