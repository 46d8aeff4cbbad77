//! Graded dimension bookkeeping for the P^(k-1)-functor.
//!
//! The functor has `RΦ ≅ id ⊗ H*(P^(k−1), C)`, so for any `E, F`
//!
//! ```text
//! Ext*(Φ(E), Φ(F)) ≅ Ext*(E, F) ⊗ H*(P^(k−1), C)
//! ```
//!
//! as graded vector spaces. At the level of dimensions this is a convolution.

use std::fmt;
use std::ops::Mul;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lattice::{mukai_pairing, mukai_square, require_points, K3Surface, MukaiVector};

/// Dimensions of a graded vector space, indexed by degree from 0.
///
/// Stored in canonical form: trailing zeros are dropped, but at least one entry
/// is kept, so the zero space is `[0]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedDims(Vec<BigUint>);

impl GradedDims {
    pub fn new(dims: Vec<BigUint>) -> Self {
        let mut dims = dims;
        while dims.len() > 1 && dims.last().is_some_and(Zero::is_zero) {
            dims.pop();
        }
        if dims.is_empty() {
            dims.push(BigUint::zero());
        }
        Self(dims)
    }

    pub fn zero() -> Self {
        Self::new(Vec::new())
    }

    pub fn dims(&self) -> &[BigUint] {
        &self.0
    }

    /// Dimension in degree `i`; zero past the stored range.
    pub fn degree(&self, i: usize) -> BigUint {
        self.0.get(i).cloned().unwrap_or_default()
    }

    /// Entries for degrees `0..len`, zero-padded. Never truncates.
    pub fn padded(&self, len: usize) -> Vec<BigUint> {
        let mut dims = self.0.clone();
        if dims.len() < len {
            dims.resize(len, BigUint::zero());
        }
        dims
    }

    pub fn total(&self) -> BigUint {
        self.0.iter().sum()
    }

    /// Alternating sum `Σ (−1)^i dims[i]`.
    pub fn euler(&self) -> BigInt {
        self.0
            .iter()
            .enumerate()
            .map(|(i, d)| {
                let d = BigInt::from(d.clone());
                if i % 2 == 0 {
                    d
                } else {
                    -d
                }
            })
            .sum()
    }

    pub fn tensor(&self, other: &GradedDims) -> GradedDims {
        graded_tensor(self, other)
    }
}

impl<T: Into<BigUint>> FromIterator<T> for GradedDims {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        Self::new(iter.into_iter().map(Into::into).collect())
    }
}

impl<T: Into<BigUint>, const N: usize> From<[T; N]> for GradedDims {
    fn from(dims: [T; N]) -> Self {
        dims.into_iter().collect()
    }
}

impl Mul for &GradedDims {
    type Output = GradedDims;

    fn mul(self, rhs: &GradedDims) -> GradedDims {
        graded_tensor(self, rhs)
    }
}

impl fmt::Display for GradedDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_dims(f, &self.0)
    }
}

/// Writes `[d0,d1,...]`.
pub fn write_dims(f: &mut impl fmt::Write, dims: &[BigUint]) -> fmt::Result {
    f.write_char('[')?;
    for (i, d) in dims.iter().enumerate() {
        if i > 0 {
            f.write_char(',')?;
        }
        write!(f, "{d}")?;
    }
    f.write_char(']')
}

impl Serialize for GradedDims {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(|d| d.to_string()))
    }
}

impl<'de> Deserialize<'de> for GradedDims {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|text| text.parse::<BigUint>().map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Self::new)
    }
}

/// `H*(P^n, C)`: one dimension in each even degree `0, 2, …, 2n`.
pub fn projective_space_cohomology(n: usize) -> GradedDims {
    (0..=2 * n)
        .map(|i| if i % 2 == 0 { 1u32 } else { 0 })
        .collect()
}

/// Dimensions of the tensor product of graded spaces: `out[n] = Σ_{i+j=n} a[i]·b[j]`.
pub fn graded_tensor(a: &GradedDims, b: &GradedDims) -> GradedDims {
    let mut out = vec![BigUint::zero(); a.0.len() + b.0.len() - 1];
    for (i, x) in a.0.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.0.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    GradedDims::new(out)
}

/// `Ext*_X(E, F)` for μ_h-stable sheaves of equal slope.
///
/// With `same_object` the sheaf is simple, so `hom = ext² = 1` and
/// `ext¹ = v² + 2`. Otherwise `E ≇ F` gives `hom = ext² = 0` and `ext¹ = ⟨v, w⟩`.
pub fn ext_dims_on_x(
    surface: &K3Surface,
    v: &MukaiVector,
    w: &MukaiVector,
    same_object: bool,
) -> Result<GradedDims> {
    let (outer, middle) = if same_object {
        if v != w {
            return Err(Error::MismatchedVectors);
        }
        (BigUint::one(), mukai_square(surface, v) + 2)
    } else {
        (BigUint::zero(), mukai_pairing(surface, v, w))
    };
    if middle.is_negative() {
        return Err(Error::NegativeExt(middle));
    }
    let middle = middle.to_biguint().expect("non-negative");
    Ok(GradedDims::new(vec![outer.clone(), middle, outer]))
}

pub fn ext_dims_on_hilb(
    surface: &K3Surface,
    v: &MukaiVector,
    w: &MukaiVector,
    k: u64,
    same_object: bool,
) -> Result<GradedDims> {
    require_points(k)?;
    let on_x = ext_dims_on_x(surface, v, w, same_object)?;
    Ok(graded_tensor(&on_x, &projective_space_cohomology(points_to_dim(k)?)))
}

fn points_to_dim(k: u64) -> Result<usize> {
    (k - 1)
        .to_usize()
        .ok_or(Error::InvalidQuery(format!("k = {k} exceeds the addressable range")))
}

/// Length of the natural degree range `0..=2k` of `Ext*(Φ(E), Φ(F))` (and `0..=2`
/// for `k = 1`, i.e. on `X`).
pub fn ext_table_len(k: u64) -> usize {
    2 * k as usize + 1
}

/// `dim M_{X,h}(v) = ext¹(E, E) = v² + 2`.
pub fn moduli_dim(surface: &K3Surface, v: &MukaiVector) -> Result<BigInt> {
    let square = mukai_square(surface, v);
    if square < BigInt::from(-2) {
        return Err(Error::EmptyModuli(square));
    }
    Ok(square + 2)
}

/// Tangent dimensions of `M_{X,h}(v)` at `[E]` and of the moduli space on `X^[k]`
/// at `[Φ(E)]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangentMatch {
    pub dim_x: BigInt,
    pub dim_hilb: BigInt,
    pub matches: bool,
}

pub fn tangent_match(surface: &K3Surface, v: &MukaiVector, k: u64) -> Result<TangentMatch> {
    let dim_x = moduli_dim(surface, v)?;
    let table = ext_dims_on_hilb(surface, v, v, k, true)?;
    let dim_hilb = BigInt::from(table.degree(1));
    Ok(TangentMatch {
        matches: dim_x == dim_hilb,
        dim_x,
        dim_hilb,
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

    fn dims<const N: usize>(d: [u32; N]) -> GradedDims {
        GradedDims::from(d)
    }

    #[test]
    fn canonical_form() {
        assert_eq!(dims([0, 2, 0]), dims([0, 2]));
        assert_eq!(dims([0, 0]).dims(), &[BigUint::zero()]);
        assert_eq!(GradedDims::zero(), dims([0]));
        assert_eq!(dims([0, 2, 0]).padded(5).len(), 5);
        assert_eq!(dims([1, 4, 2, 4, 1]).to_string(), "[1,4,2,4,1]");
    }

    #[test]
    fn projective_spaces() {
        assert_eq!(projective_space_cohomology(0), dims([1]));
        assert_eq!(projective_space_cohomology(1), dims([1, 0, 1]));
        assert_eq!(projective_space_cohomology(3), dims([1, 0, 1, 0, 1, 0, 1]));
        assert_eq!(projective_space_cohomology(3).euler(), BigInt::from(4));
    }

    #[test]
    fn tensor_examples() {
        assert_eq!(dims([1, 4, 1]).tensor(&dims([1, 0, 1])), dims([1, 4, 2, 4, 1]));
        assert_eq!(&dims([2, 3, 5]) * &dims([1]), dims([2, 3, 5]));
        assert_eq!(dims([0]).tensor(&dims([7, 1, 3])), dims([0]));
    }

    #[test]
    fn ext_on_x_examples() {
        assert_eq!(
            ext_dims_on_x(&x(50), &v(3, 1, 8), &v(3, 1, 8), true).unwrap(),
            dims([1, 4, 1])
        );
        assert_eq!(
            ext_dims_on_x(&x(10), &v(1, 0, 1), &v(1, 0, 1), true).unwrap(),
            dims([1, 0, 1])
        );
        assert_eq!(
            ext_dims_on_x(&x(50), &v(3, 1, 8), &v(3, 1, 8), false).unwrap(),
            dims([0, 2, 0])
        );
        assert_eq!(
            ext_dims_on_x(&x(50), &v(3, 1, 8), &v(2, 1, 13), true),
            Err(Error::MismatchedVectors)
        );
        // ⟨v, v⟩ = −2 for a rigid vector: no two distinct such stable sheaves.
        assert_eq!(
            ext_dims_on_x(&x(50), &v(1, 1, 26), &v(1, 1, 26), false),
            Err(Error::NegativeExt(BigInt::from(-2)))
        );
        assert_eq!(
            ext_dims_on_x(&x(50), &v(1, 1, 27), &v(1, 1, 27), true),
            Err(Error::NegativeExt(BigInt::from(-2)))
        );
    }

    #[test]
    fn ext_on_hilb_examples() {
        let e = v(3, 1, 8);
        assert_eq!(
            ext_dims_on_hilb(&x(50), &e, &e, 2, true).unwrap(),
            dims([1, 4, 2, 4, 1])
        );
        assert_eq!(
            ext_dims_on_hilb(&x(50), &e, &e, 1, true).unwrap(),
            ext_dims_on_x(&x(50), &e, &e, true).unwrap()
        );
        let distinct = ext_dims_on_hilb(&x(50), &e, &e, 2, false).unwrap();
        assert_eq!(distinct, dims([0, 2, 0, 2, 0]));
        assert!(distinct.degree(0).is_zero());
        assert_eq!(ext_dims_on_hilb(&x(50), &e, &e, 0, true), Err(Error::NonPositivePoints));
    }

    #[test]
    fn moduli_dimensions() {
        assert_eq!(moduli_dim(&x(50), &v(3, 1, 8)).unwrap(), BigInt::from(4));
        assert_eq!(moduli_dim(&x(50), &v(1, 1, 26)).unwrap(), BigInt::from(0));
        assert_eq!(moduli_dim(&x(186), &v(5, 1, 18)).unwrap(), BigInt::from(8));
        assert_eq!(
            moduli_dim(&x(50), &v(1, 1, 27)),
            Err(Error::EmptyModuli(BigInt::from(-4)))
        );
    }

    #[test]
    fn tangent_examples() {
        let check = |h2, e: MukaiVector, k, expected: i64| {
            let t = tangent_match(&x(h2), &e, k).unwrap();
            assert_eq!(t.dim_x, BigInt::from(expected));
            assert_eq!(t.dim_hilb, BigInt::from(expected));
            assert!(t.matches);
        };
        check(50, v(3, 1, 8), 2, 4);
        check(186, v(5, 1, 18), 3, 8);
        check(50, v(1, 1, 26), 2, 0);
    }
}
