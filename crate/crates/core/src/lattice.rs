//! The algebraic Mukai lattice `Z ⊕ Zh ⊕ Z` of a K3 surface with `NS(X) = Zh`.
//!
//! A vector `(r, m, s)` stands for `(r, m·h, s)`. The pairing is
//!
//! ```text
//! ⟨v, w⟩ = m_v·m_w·h² − r_v·s_w − r_w·s_v
//! ```
//!
//! and the Euler form of two sheaves is `χ(F₁, F₂) = −⟨v(F₁), v(F₂)⟩`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A K3 surface of Picard rank one, remembered only through `h²`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct K3Surface {
    h_squared: BigInt,
}

impl K3Surface {
    /// `h²` must be even and at least 2.
    pub fn new(h_squared: impl Into<BigInt>) -> Result<Self> {
        let h_squared = h_squared.into();
        if h_squared < BigInt::from(2) || h_squared.is_odd() {
            return Err(Error::InvalidSurface(h_squared));
        }
        Ok(Self { h_squared })
    }

    pub fn h_squared(&self) -> &BigInt {
        &self.h_squared
    }
}

impl fmt::Display for K3Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K3(h^2 = {})", self.h_squared)
    }
}

/// Mukai vector `(r, m·h, s)`.
///
/// Any integer triple is allowed so that duals, sums and differences stay inside
/// the type. Operations that speak about an actual stable sheaf check `r ≥ 1` and,
/// where the theory needs it, `m = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MukaiVector {
    pub r: BigInt,
    pub m: BigInt,
    pub s: BigInt,
}

impl MukaiVector {
    pub fn new(r: impl Into<BigInt>, m: impl Into<BigInt>, s: impl Into<BigInt>) -> Self {
        Self {
            r: r.into(),
            m: m.into(),
            s: s.into(),
        }
    }

    /// `v(O_X) = (1, 0, 1)`.
    pub fn structure_sheaf() -> Self {
        Self::new(1, 0, 1)
    }

    pub fn dual(&self) -> Self {
        dual_vector(self)
    }

    pub fn is_primitive_class(&self) -> bool {
        self.m.is_one()
    }

    pub(crate) fn require_positive_rank(&self) -> Result<()> {
        if self.r.is_positive() {
            Ok(())
        } else {
            Err(Error::NonPositiveRank(self.r.clone()))
        }
    }

    pub(crate) fn require_primitive(&self) -> Result<()> {
        if self.is_primitive_class() {
            Ok(())
        } else {
            Err(Error::NotPrimitive(self.m.clone()))
        }
    }
}

impl fmt::Display for MukaiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}h, {})", self.r, self.m, self.s)
    }
}

impl Add for &MukaiVector {
    type Output = MukaiVector;

    fn add(self, rhs: &MukaiVector) -> MukaiVector {
        MukaiVector {
            r: &self.r + &rhs.r,
            m: &self.m + &rhs.m,
            s: &self.s + &rhs.s,
        }
    }
}

impl Add for MukaiVector {
    type Output = MukaiVector;

    fn add(self, rhs: MukaiVector) -> MukaiVector {
        &self + &rhs
    }
}

impl Sub for &MukaiVector {
    type Output = MukaiVector;

    fn sub(self, rhs: &MukaiVector) -> MukaiVector {
        MukaiVector {
            r: &self.r - &rhs.r,
            m: &self.m - &rhs.m,
            s: &self.s - &rhs.s,
        }
    }
}

impl Neg for &MukaiVector {
    type Output = MukaiVector;

    fn neg(self) -> MukaiVector {
        MukaiVector {
            r: -&self.r,
            m: -&self.m,
            s: -&self.s,
        }
    }
}

pub(crate) fn require_points(k: u64) -> Result<()> {
    if k == 0 {
        Err(Error::NonPositivePoints)
    } else {
        Ok(())
    }
}

pub fn mukai_pairing(surface: &K3Surface, v: &MukaiVector, w: &MukaiVector) -> BigInt {
    &v.m * &w.m * surface.h_squared() - &v.r * &w.s - &w.r * &v.s
}

/// `v² = ⟨v, v⟩`. Always even because `h²` is.
pub fn mukai_square(surface: &K3Surface, v: &MukaiVector) -> BigInt {
    mukai_pairing(surface, v, v)
}

/// `χ(F₁, F₂) = −⟨v(F₁), v(F₂)⟩`.
pub fn euler_pair(surface: &K3Surface, v: &MukaiVector, w: &MukaiVector) -> BigInt {
    -mukai_pairing(surface, v, w)
}

/// `χ(E) = r + s`.
pub fn euler_char(v: &MukaiVector) -> BigInt {
    &v.r + &v.s
}

/// `χ(E ⊗ I_Z) = r + s − r·k` for a length-`k` subscheme `Z`.
pub fn twisted_chi(v: &MukaiVector, k: u64) -> Result<BigInt> {
    require_points(k)?;
    Ok(euler_char(v) - &v.r * BigInt::from(k))
}

/// `v(E*) = (r, −m, s)`.
pub fn dual_vector(v: &MukaiVector) -> MukaiVector {
    MukaiVector {
        r: v.r.clone(),
        m: -&v.m,
        s: v.s.clone(),
    }
}

/// `v(I_Z) = (1, 0, 1 − k)` for a length-`k` subscheme.
pub fn ideal_sheaf_vector(k: u64) -> Result<MukaiVector> {
    require_points(k)?;
    Ok(MukaiVector::new(1, 0, BigInt::one() - BigInt::from(k)))
}

/// `μ_h = (c1·h)/r = m·h²/r`.
pub fn slope_on_x(surface: &K3Surface, v: &MukaiVector) -> Result<BigRational> {
    v.require_positive_rank()?;
    Ok(BigRational::new(&v.m * surface.h_squared(), v.r.clone()))
}

/// `gcd(a, b, c)`, always non-negative.
pub(crate) fn gcd3(a: &BigInt, b: &BigInt, c: &BigInt) -> BigInt {
    let g = a.gcd(b).gcd(c);
    if g.is_zero() {
        g
    } else {
        g.abs()
    }
}
