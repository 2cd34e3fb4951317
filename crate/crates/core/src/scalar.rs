//! Scalar abstractions.
//!
//! Everything numeric in this crate is generic over a real floating-point type
//! `T: Real` (implemented for `f32` and `f64`). Matrices and kernels are further
//! generic over a [`Field`] element, which is either `T` itself or
//! `Complex<T>`, so the same eigensolver serves real-symmetric and complex
//! Hermitian problems.

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::ops::Neg;

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, Zero};

/// Real floating-point scalar.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + NumAssign
    + Sum
    + Default
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// Absolute slack for structural contracts (Hermiticity, normalization,
    /// trace-orthogonality). `1e-12` for `f64`.
    const CONTRACT_TOL: Self;

    /// Convert an `f64` literal. Panics only if the target cannot represent
    /// finite `f64` values, which never happens for `f32`/`f64`.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("finite literal")
    }

    #[inline]
    fn from_count(n: usize) -> Self {
        <Self as FromPrimitive>::from_usize(n).expect("usize fits in float")
    }
}

impl Real for f64 {
    const CONTRACT_TOL: Self = 1e-12;
}

impl Real for f32 {
    const CONTRACT_TOL: Self = 1e-5;
}

/// Matrix element type: a real scalar or a complex number over one.
pub trait Field:
    Copy + NumAssign + Neg<Output = Self> + Sum + Default + PartialEq + Debug + Send + Sync + 'static
{
    type Real: Real;

    fn conj(self) -> Self;
    fn re(self) -> Self::Real;
    fn im(self) -> Self::Real;
    fn norm_sqr(self) -> Self::Real;
    fn from_real(r: Self::Real) -> Self;
    fn scale(self, r: Self::Real) -> Self;

    #[inline]
    fn modulus(self) -> Self::Real {
        self.norm_sqr().sqrt()
    }

    /// Unit-modulus phase `z / |z|`, or one for zero.
    #[inline]
    fn phase(self) -> Self {
        let a = self.modulus();
        if a == Self::Real::zero() {
            Self::one()
        } else {
            self.scale(a.recip())
        }
    }

    /// Lift to a complex number.
    fn to_complex(self) -> Complex<Self::Real>;
}

impl<T: Real> Field for T {
    type Real = T;

    #[inline]
    fn conj(self) -> Self {
        self
    }
    #[inline]
    fn re(self) -> T {
        self
    }
    #[inline]
    fn im(self) -> T {
        T::zero()
    }
    #[inline]
    fn norm_sqr(self) -> T {
        self * self
    }
    #[inline]
    fn from_real(r: T) -> Self {
        r
    }
    #[inline]
    fn scale(self, r: T) -> Self {
        self * r
    }
    #[inline]
    fn modulus(self) -> T {
        Float::abs(self)
    }
    #[inline]
    fn to_complex(self) -> Complex<T> {
        Complex::new(self, T::zero())
    }
}

impl<T: Real> Field for Complex<T> {
    type Real = T;

    #[inline]
    fn conj(self) -> Self {
        Complex::conj(&self)
    }
    #[inline]
    fn re(self) -> T {
        self.re
    }
    #[inline]
    fn im(self) -> T {
        self.im
    }
    #[inline]
    fn norm_sqr(self) -> T {
        Complex::norm_sqr(&self)
    }
    #[inline]
    fn from_real(r: T) -> Self {
        Complex::new(r, T::zero())
    }
    #[inline]
    fn scale(self, r: T) -> Self {
        Complex::new(self.re * r, self.im * r)
    }
    #[inline]
    fn modulus(self) -> T {
        self.re.hypot(self.im)
    }
    #[inline]
    fn to_complex(self) -> Complex<T> {
        self
    }
}

/// Shorthand for building a complex number from two `f64` literals.
#[inline]
pub fn c<T: Real>(re: f64, im: f64) -> Complex<T> {
    Complex::new(T::lit(re), T::lit(im))
}
