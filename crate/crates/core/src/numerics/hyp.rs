//! Gauss hypergeometric function 2F1 on the region the spherical
//! evaluators need: real z <= 0 (noncompact radial variable, any size via
//! the Euler integral), z in [0, 1] (compact side), and small complex z.
//!
//! Evaluation routes, tried in order:
//!   1. terminating series when a or b is a nonpositive integer;
//!   2. Maclaurin series for |z| <= 0.66;
//!   3. Pfaff transform z -> z/(z-1) when the image is small enough;
//!   4. Euler integral with tanh-sinh quadrature (handles large negative z
//!      and real z near 1, including z = 1 with Re(c-a-b) > 0).

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::numerics::quad::tanh_sinh_01;
use crate::scalar::{cast, is_finite_c, re_c, Real};

use super::gamma::cgamma;

const MAX_TERMS: usize = 2000;

fn near_nonpositive_int<T: Real>(z: Complex<T>) -> Option<u32> {
    let n = z.re.round();
    if n > cast::<T>(0.5) {
        return None;
    }
    let dist = ((z.re - n) * (z.re - n) + z.im * z.im).sqrt();
    if dist < cast::<T>(1e-12) {
        Some((-n).to_f64().unwrap_or(0.0) as u32)
    } else {
        None
    }
}

fn maclaurin<T: Real>(
    a: Complex<T>,
    b: Complex<T>,
    c: Complex<T>,
    z: Complex<T>,
    terms: Option<usize>,
) -> Result<Complex<T>> {
    let mut sum = re_c(T::one());
    let mut term = re_c(T::one());
    let tol = T::epsilon() * cast::<T>(4.0);
    let nmax = terms.unwrap_or(MAX_TERMS);
    for n in 0..nmax {
        let nf = cast::<T>(n as f64);
        let denom = (c + re_c(nf)) * re_c(nf + T::one());
        if denom.norm_sqr() == T::zero() {
            return Err(Error::ParameterPole(format!(
                "{:?}",
                (c.re.to_f64(), c.im.to_f64())
            )));
        }
        term = term * (a + re_c(nf)) * (b + re_c(nf)) * z / denom;
        sum = sum + term;
        if terms.is_none() && term.norm() <= tol * sum.norm().max(T::one()) && n > 3 {
            return Ok(sum);
        }
    }
    if terms.is_some() {
        Ok(sum)
    } else {
        Err(Error::NonConvergence("hyp2f1 series", MAX_TERMS))
    }
}

fn euler_integral<T: Real>(
    a: Complex<T>,
    b: Complex<T>,
    c: Complex<T>,
    z: Complex<T>,
) -> Result<Complex<T>> {
    // 2F1(a,b;c;z) = Gamma(c)/(Gamma(b) Gamma(c-b))
    //                int_0^1 u^{b-1} (1-u)^{c-b-1} (1-z u)^{-a} du,
    // valid for Re c > Re b > 0 and z off the cut [1, inf).
    let pre = cgamma(c)? / (cgamma(b)? * cgamma(c - b)?);
    let bm1 = b - re_c(T::one());
    let cmbm1 = c - b - re_c(T::one());
    let one_minus_z = re_c(T::one()) - z;
    let integrand = |u: T, omu: T| -> Result<Complex<T>> {
        let uu = re_c(u);
        let one_minus = re_c(omu);
        // 1 - z u = (1 - u) + u (1 - z): cancellation-free for real z <= 1.
        let kernel = (one_minus + uu * one_minus_z).powc(-a);
        Ok(uu.powc(bm1) * one_minus.powc(cmbm1) * kernel)
    };
    let integral = tanh_sinh_01(&integrand, T::epsilon() * cast::<T>(64.0))?;
    Ok(pre * integral)
}

/// 2F1(a, b; c; z).
pub fn hyp2f1<T: Real>(
    a: Complex<T>,
    b: Complex<T>,
    c: Complex<T>,
    z: Complex<T>,
) -> Result<Complex<T>> {
    if !(is_finite_c(a) && is_finite_c(b) && is_finite_c(c) && is_finite_c(z)) {
        return Err(Error::NonFinite("hyp2f1 argument"));
    }

    // Terminating cases first; they are exact for any z and cover the
    // compact-side polynomials.
    let na = near_nonpositive_int(a);
    let nb = near_nonpositive_int(b);
    let nterm = match (na, nb) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (Some(x), None) => Some(x),
        (None, Some(y)) => Some(y),
        (None, None) => None,
    };
    if let Some(n) = nterm {
        if let Some(nc) = near_nonpositive_int(c) {
            if nc < n {
                return Err(Error::ParameterPole(format!(
                    "{:?}",
                    (c.re.to_f64(), c.im.to_f64())
                )));
            }
        }
        return maclaurin(a, b, c, z, Some(n as usize + 1));
    }
    if near_nonpositive_int(c).is_some() {
        return Err(Error::ParameterPole(format!(
            "{:?}",
            (c.re.to_f64(), c.im.to_f64())
        )));
    }

    let zn = z.norm();
    if zn <= cast::<T>(0.66) {
        return maclaurin(a, b, c, z, None);
    }

    // Pfaff: 2F1(a,b;c;z) = (1-z)^{-a} 2F1(a, c-b; c; z/(z-1)).
    let w = z / (z - re_c(T::one()));
    if w.norm() <= cast::<T>(0.72) {
        let inner = maclaurin(a, c - b, c, w, None)?;
        return Ok((re_c(T::one()) - z).powc(-a) * inner);
    }

    // Euler integral; needs Re c > Re b > 0 (try the a <-> b symmetry too).
    let real_z_ok = z.im.abs() < cast::<T>(1e-12) && z.re <= T::one() + cast::<T>(1e-14);
    if real_z_ok {
        if c.re > b.re && b.re > T::zero() {
            return euler_integral(a, b, c, z);
        }
        if c.re > a.re && a.re > T::zero() {
            return euler_integral(b, a, c, z);
        }
    }

    // Inversion z -> 1/z for |z| large, away from the degenerate case
    // where a - b is an integer.
    if zn >= cast::<T>(1.4) {
        let diff = a - b;
        let dist = (diff.re - diff.re.round()).abs() + diff.im.abs();
        if dist > cast::<T>(0.05) {
            return inversion_formula(a, b, c, z);
        }
    }
    Err(Error::NonConvergence("hyp2f1 (no applicable route)", 0))
}

fn inversion_formula<T: Real>(
    a: Complex<T>,
    b: Complex<T>,
    c: Complex<T>,
    z: Complex<T>,
) -> Result<Complex<T>> {
    // 2F1(a,b;c;z) = G(c)G(b-a)/(G(b)G(c-a)) (-z)^{-a} 2F1(a, 1-c+a; 1-b+a; 1/z)
    //              + (a <-> b),   |arg(-z)| < pi.
    let one = re_c(T::one());
    let w = one / z;
    let term = |p: Complex<T>, q: Complex<T>| -> Result<Complex<T>> {
        let coef = cgamma(c)? * cgamma(q - p)? / (cgamma(q)? * cgamma(c - p)?);
        let inner = maclaurin(p, one - c + p, one - q + p, w, None)?;
        Ok(coef * (-z).powc(-p) * inner)
    };
    Ok(term(a, b)? + term(b, a)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn empty_series_is_one() {
        let v = hyp2f1(c(0.7, 0.2), c(1.3, 0.0), c(2.1, 0.0), c(0.0, 0.0)).unwrap();
        assert!((v - c(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn logarithm_closed_form() {
        // 2F1(1,1;2;z) = -log(1-z)/z; at z = -1 the value is log 2.
        let v = hyp2f1(c(1.0, 0.0), c(1.0, 0.0), c(2.0, 0.0), c(-1.0, 0.0)).unwrap();
        assert!((v.re - std::f64::consts::LN_2).abs() < 1e-12, "{v}");
    }

    #[test]
    fn gauss_summation_at_one() {
        // Oracle: Gamma(c)Gamma(c-a-b)/(Gamma(c-a)Gamma(c-b)).
        let (a, b, cc) = (c(0.3, 0.0), c(0.4, 0.0), c(1.5, 0.0));
        let v = hyp2f1(a, b, cc, c(1.0, 0.0)).unwrap();
        let oracle = cgamma(cc).unwrap() * cgamma(cc - a - b).unwrap()
            / (cgamma(cc - a).unwrap() * cgamma(cc - b).unwrap());
        assert!((v - oracle).norm() / oracle.norm() < 1e-10, "{v} {oracle}");
    }

    #[test]
    fn binomial_identity_large_negative_z() {
        // 2F1(a, b; b; z) = (1-z)^{-a}, checked where c = b forces the
        // Euler route through the a <-> b swap guard; use c slightly off b
        // via the elementary case instead: 2F1(1.5, 0.5; 1.5; z) = (1-z)^{-1/2}.
        for &zr in &[-0.9, -5.0, -300.0, -2.0e4] {
            let v = hyp2f1(c(0.5, 0.0), c(1.5, 0.0), c(1.5, 0.0), c(zr, 0.0)).unwrap();
            let expect = (1.0 - zr).powf(-0.5);
            assert!((v.re - expect).abs() / expect < 1e-10, "z={zr} {v} {expect}");
        }
    }

    #[test]
    fn legendre_character_identity() {
        // sinh form: 2F1(1+l, 1-l; 3/2; -sinh^2(t/2)) = sinh(l t)/(l sinh t).
        for &l in &[0.5, 1.25, 2.0] {
            for &t in &[0.3, 1.0, 3.0, 8.0] {
                let z = -(t / 2.0f64).sinh().powi(2);
                let v = hyp2f1(c(1.0 + l, 0.0), c(1.0 - l, 0.0), c(1.5, 0.0), c(z, 0.0)).unwrap();
                let expect = (l * t).sinh() / (l * t.sinh());
                assert!(
                    (v.re - expect).abs() / expect.abs() < 1e-9,
                    "l={l} t={t} {v} {expect}"
                );
            }
        }
    }

    #[test]
    fn complex_parameters_reflection_region() {
        // Pfaff route consistency against direct series inside |z| < 0.66.
        let a = c(0.8, 0.4);
        let b = c(1.1, -0.3);
        let cc = c(1.9, 0.1);
        let z = c(-0.5, 0.0);
        let direct = hyp2f1(a, b, cc, z).unwrap();
        let pfaff = (c(1.0, 0.0) - z).powc(-a)
            * hyp2f1(a, cc - b, cc, z / (z - c(1.0, 0.0))).unwrap();
        assert!((direct - pfaff).norm() / direct.norm() < 1e-11);
    }

    #[test]
    fn parameter_pole_error() {
        assert!(hyp2f1(c(0.5, 0.0), c(0.7, 0.0), c(-2.0, 0.0), c(0.3, 0.0)).is_err());
        // but terminating numerator shields it when it stops first
        let v = hyp2f1(c(-1.0, 0.0), c(0.7, 0.0), c(-2.0, 0.0), c(0.3, 0.0)).unwrap();
        assert!((v.re - (1.0 + 0.7 * 0.3 / 2.0)).abs() < 1e-13, "{v}");
    }

    #[test]
    fn compact_side_polynomial() {
        // Terminating case at z in [0,1): 2F1(3, -1; 3/2; z) = 1 - 2z.
        let v = hyp2f1(c(3.0, 0.0), c(-1.0, 0.0), c(1.5, 0.0), c(0.9, 0.0)).unwrap();
        assert!((v.re - (1.0 - 2.0 * 0.9)).abs() < 1e-13, "{v}");
    }
}
