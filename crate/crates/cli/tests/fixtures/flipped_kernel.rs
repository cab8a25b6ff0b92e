//! A deliberately broken chromatic-to-tree map: the binomial kernel carries
//! the sign `(-1)^{n+k+1}` instead of `(-1)^{n+k}`.

use chromagraph_core::{binomial, Error, Rational, UniPoly};
use num_bigint::BigInt;

pub fn flipped_kernel(chi: &UniPoly, n: usize) -> chromagraph_core::Result<UniPoly> {
    let degree = chi.degree().unwrap_or(0);
    if degree != n {
        return Err(Error::DegreeMismatch { expected: n, got: degree });
    }
    let mut coeffs = vec![Rational::from_integer(BigInt::from(0)); n + 1];
    for (k, slot) in coeffs.iter_mut().enumerate().skip(1) {
        let mut acc = BigInt::from(0);
        for m in 1..=k {
            acc += binomial((n - m) as i64, (k - m) as i64) * chi.coeff(m).to_integer();
        }
        let sign = if (n + k + 1).is_multiple_of(2) { 1 } else { -1 };
        *slot = Rational::from_integer(acc * sign);
    }
    Ok(UniPoly::from_coeffs(coeffs))
}
