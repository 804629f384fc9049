//! Float helpers usable without `std` (via `libm`). Logarithms are base 2.

pub const LN_2: f64 = core::f64::consts::LN_2;

#[inline]
pub fn log2(x: f64) -> f64 {
    libm::log2(x)
}

#[inline]
pub fn ln(x: f64) -> f64 {
    libm::log(x)
}

#[inline]
pub fn abs(x: f64) -> f64 {
    libm::fabs(x)
}

/// `x·log₂(1/x)` with the `0·log(1/0) = 0` convention.
#[inline]
pub fn xlog2_inv(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        -x * log2(x)
    }
}

/// Shannon entropy in bits of an arbitrary nonnegative mass vector.
pub fn entropy_bits(masses: &[f64]) -> f64 {
    masses.iter().map(|&m| xlog2_inv(m)).sum()
}
