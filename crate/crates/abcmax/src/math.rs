//! Float primitives that work with or without std.

#[cfg(feature = "std")]
#[inline(always)]
pub(crate) fn sqrt(x: f64) -> f64 {
    x.sqrt()
}

#[cfg(all(not(feature = "std"), feature = "libm"))]
#[inline(always)]
pub(crate) fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[inline(always)]
pub(crate) fn abs(x: f64) -> f64 {
    if x < 0.0 {
        -x
    } else {
        x
    }
}

/// x^(3/2) for x >= 0, via x*sqrt(x) so no powf is needed.
#[inline(always)]
pub(crate) fn pow_3_2(x: f64) -> f64 {
    x * sqrt(x)
}
