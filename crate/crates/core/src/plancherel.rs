//! Harish-Chandra c-function, Plancherel density, the per-root
//! factorization of the density into `C_beta p_beta q_beta`, and the
//! dimension polynomial `d`.
//!
//! The density is evaluated two independent ways: through gamma functions
//! (the product formula) and through the factorization. Keeping both paths
//! is the library's primary internal consistency oracle; the factored path
//! stays finite at the removable singularities the gamma route hits.

use std::sync::Arc;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::numerics::cgamma;
use crate::rootsys::{DominantWeight, RootDatum, SpectralPoint};
use crate::scalar::{cast, im_c, re_c, Real};

/// Per-root density factors of the decomposition
/// `1/(c_beta(l) c_beta(-l)) = C_beta p_beta(l) q_beta(l)`.
#[derive(Debug, Clone)]
pub struct DensityFactors<T> {
    /// One entry per unmultipliable positive root: the constant including
    /// its sign epsilon(beta).
    pub constants: Vec<T>,
    /// Real root lists of the polynomials p_beta, evaluated as products.
    pub poly_roots: Vec<Vec<T>>,
    /// Whether q_beta is the cotangent factor (m_beta odd) or identically 1.
    pub has_cotangent: Vec<bool>,
}

/// Roots of p_beta for multiplicities (m_half, m_beta):
/// {0} u {rho~ - k : k = 1..2 rho~ - 1} u {m_half/4 - 1/2 - k : k = 0..m_half/2 - 1}.
fn p_beta_roots<T: Real>(m_half: u32, m_beta: u32) -> Vec<T> {
    let rho_tilde = (m_beta as f64 + m_half as f64 / 2.0) / 2.0;
    let mut roots = vec![T::zero()];
    let top = (2.0 * rho_tilde - 1.0).round() as i64;
    for k in 1..=top {
        roots.push(cast::<T>(rho_tilde - k as f64));
    }
    for k in 0..(m_half / 2) as i64 {
        roots.push(cast::<T>(m_half as f64 / 4.0 - 0.5 - k as f64));
    }
    roots
}

fn epsilon_sign(m_half: u32, m_beta: u32) -> f64 {
    let exp = if m_beta % 2 == 0 {
        (m_beta / 2) as i64
    } else {
        ((m_half + m_beta - 1) / 2) as i64
    };
    if exp % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

impl<T: Real> DensityFactors<T> {
    pub fn new(datum: &RootDatum<T>) -> Result<Self> {
        let n = datum.unmultipliable_positive().len();
        let mut constants = Vec::with_capacity(n);
        let mut poly_roots = Vec::with_capacity(n);
        let mut has_cotangent = Vec::with_capacity(n);
        for pos in 0..n {
            let (m_half, m_beta) = datum.mult_pair(pos);
            constants.push(cast::<T>(4.0) * T::PI() * cast::<T>(epsilon_sign(m_half, m_beta)));
            let roots = p_beta_roots::<T>(m_half, m_beta);
            debug_assert_eq!(roots.len() as u32, m_half + m_beta);
            poly_roots.push(roots);
            has_cotangent.push(m_beta % 2 == 1);
        }
        let factors = DensityFactors {
            constants,
            poly_roots,
            has_cotangent,
        };
        factors.assert_positivity(datum)?;
        Ok(factors)
    }

    /// p_beta evaluated as a product over its real roots.
    pub fn poly_eval(&self, pos: usize, lambda_beta: Complex<T>) -> Complex<T> {
        let mut acc = re_c(T::one());
        for &r in &self.poly_roots[pos] {
            acc = acc * (lambda_beta - re_c(r));
        }
        acc
    }

    /// q_beta: cot(pi (lambda_beta - rho~_beta)) when m_beta is odd, else 1.
    pub fn trig_eval(&self, pos: usize, lambda_beta: Complex<T>, rho_tilde: T) -> Complex<T> {
        if self.has_cotangent[pos] {
            let z = (lambda_beta - re_c(rho_tilde)) * T::PI();
            z.cos() / z.sin()
        } else {
            re_c(T::one())
        }
    }

    /// Full factor `C_beta p_beta(lambda) q_beta(lambda)` for one root.
    pub fn factor_eval(
        &self,
        datum: &RootDatum<T>,
        pos: usize,
        lambda: &SpectralPoint<T>,
    ) -> Result<Complex<T>> {
        datum.check_rank(lambda)?;
        let idx = datum.unmultipliable_positive()[pos];
        let lb = datum.lambda_sub_pos(lambda, idx);
        let rho_tilde = datum.rho_data().rho_tilde[pos];
        Ok(self.poly_eval(pos, lb) * self.trig_eval(pos, lb, rho_tilde) * self.constants[pos])
    }

    /// Positivity of each factor on a few points of the tempered spectrum
    /// i R * (omega_1 + ... + omega_l).
    fn assert_positivity(&self, datum: &RootDatum<T>) -> Result<()> {
        for &t in &[0.37, 1.13, 2.71] {
            let lambda = SpectralPoint::new(vec![im_c(cast::<T>(t)); datum.rank()]);
            for pos in 0..self.constants.len() {
                let v = self.factor_eval(datum, pos, &lambda)?;
                let scale = v.norm().max(T::one());
                if !(v.re > T::zero()) || v.im.abs() > cast::<T>(1e-10) * scale {
                    return Err(Error::PositivityFailure(format!(
                        "factor {pos} at t = {t}: {:?}",
                        (v.re.to_f64(), v.im.to_f64())
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Harish-Chandra c-function with its normalization `c(rho) = 1`, plus the
/// factored Plancherel density and the dimension polynomial.
#[derive(Debug, Clone)]
pub struct CFunction<T> {
    datum: Arc<RootDatum<T>>,
    factors: DensityFactors<T>,
    /// Normalizing constant from c(rho) = 1.
    c0: T,
    /// P(rho) with P the product of the p_beta.
    p_rho: T,
}

impl<T: Real> CFunction<T> {
    pub fn new(datum: Arc<RootDatum<T>>) -> Result<Self> {
        let factors = DensityFactors::new(&datum)?;
        let rho = datum.rho();
        let mut prod = re_c(T::one());
        for pos in 0..datum.unmultipliable_positive().len() {
            prod = prod * c_beta(&datum, pos, &rho)?;
        }
        if prod.norm() == T::zero() || prod.im.abs() > cast::<T>(1e-10) * prod.norm() {
            return Err(Error::InvariantFailure(format!(
                "c(rho) product not positive real: {:?}",
                (prod.re.to_f64(), prod.im.to_f64())
            )));
        }
        let c0 = T::one() / prod.re;
        let mut p_rho = re_c(T::one());
        for pos in 0..datum.unmultipliable_positive().len() {
            let idx = datum.unmultipliable_positive()[pos];
            let rb = datum.lambda_sub_pos(&rho, idx);
            p_rho = p_rho * factors.poly_eval(pos, rb);
        }
        Ok(CFunction {
            datum,
            factors,
            c0,
            p_rho: p_rho.re,
        })
    }

    pub fn datum(&self) -> &Arc<RootDatum<T>> {
        &self.datum
    }

    pub fn factors(&self) -> &DensityFactors<T> {
        &self.factors
    }

    pub fn c0(&self) -> T {
        self.c0
    }

    /// P(rho).
    pub fn p_rho(&self) -> T {
        self.p_rho
    }

    /// c(lambda) = c_0 prod_beta c_beta(lambda), by the gamma product.
    pub fn c_function(&self, lambda: &SpectralPoint<T>) -> Result<Complex<T>> {
        self.datum.check_rank(lambda)?;
        let mut prod = re_c(self.c0);
        for pos in 0..self.datum.unmultipliable_positive().len() {
            prod = prod * c_beta(&self.datum, pos, lambda)?;
        }
        Ok(prod)
    }

    /// Plancherel density 1/(c(lambda) c(-lambda)) through the gamma route.
    pub fn density(&self, lambda: &SpectralPoint<T>) -> Result<Complex<T>> {
        let neg = SpectralPoint::new(lambda.coords().iter().map(|z| -z).collect());
        let num = self.c_function(lambda)? * self.c_function(&neg)?;
        if num.norm() == T::zero() {
            return Err(Error::PoleProximity("c(lambda) c(-lambda) vanished".into()));
        }
        Ok(re_c(T::one()) / num)
    }

    /// The same density through the factorization: c_0^{-2} prod C_beta p_beta q_beta.
    pub fn density_factored(&self, lambda: &SpectralPoint<T>) -> Result<Complex<T>> {
        self.datum.check_rank(lambda)?;
        let mut prod = re_c(T::one() / (self.c0 * self.c0));
        for pos in 0..self.datum.unmultipliable_positive().len() {
            prod = prod * self.factors.factor_eval(&self.datum, pos, lambda)?;
        }
        Ok(prod)
    }

    /// P(lambda) = prod_beta p_beta(lambda).
    pub fn p_poly(&self, lambda: &SpectralPoint<T>) -> Complex<T> {
        let mut prod = re_c(T::one());
        for pos in 0..self.datum.unmultipliable_positive().len() {
            let idx = self.datum.unmultipliable_positive()[pos];
            let lb = self.datum.lambda_sub_pos(lambda, idx);
            prod = prod * self.factors.poly_eval(pos, lb);
        }
        prod
    }

    /// The polynomial extension d(lambda) = P(lambda + rho)/P(rho).
    pub fn d_poly(&self, lambda: &SpectralPoint<T>) -> Complex<T> {
        let shifted = SpectralPoint::new(
            lambda
                .coords()
                .iter()
                .zip(self.datum.rho_data().coords.iter())
                .map(|(z, &r)| *z + re_c(r))
                .collect(),
        );
        self.p_poly(&shifted) / self.p_rho
    }

    /// Dimension of the spherical representation of highest restricted
    /// weight mu, with a relative integrality check.
    pub fn weyl_dim(&self, mu: &DominantWeight) -> Result<(u64, T)> {
        let shifted = self.datum.shift_by_rho(mu);
        let val = self.p_poly(&shifted) / self.p_rho;
        let re = val.re;
        let rounded = re.round();
        let residual = ((re - rounded).abs() + val.im.abs()) / T::one().max(re.abs());
        if residual > cast::<T>(1e-8) {
            return Err(Error::NonIntegralDimension {
                value: re.to_f64().unwrap_or(f64::NAN),
                residual: residual.to_f64().unwrap_or(f64::NAN),
            });
        }
        let as_u64 = rounded.to_f64().unwrap_or(0.0);
        if as_u64 < 1.0 {
            return Err(Error::NonIntegralDimension {
                value: as_u64,
                residual: residual.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok((as_u64 as u64, residual))
    }
}

/// One Gindikin-Karpelevich factor
/// `c_beta = 2^{-2 l_b} Gamma(2 l_b) / (Gamma(l_b + m_h/4 + 1/2) Gamma(l_b + m_h/4 + m_b/2))`.
fn c_beta<T: Real>(
    datum: &RootDatum<T>,
    pos: usize,
    lambda: &SpectralPoint<T>,
) -> Result<Complex<T>> {
    let idx = datum.unmultipliable_positive()[pos];
    let lb = datum.lambda_sub_pos(lambda, idx);
    let (m_half, m_beta) = datum.mult_pair(pos);
    let quarter = cast::<T>(m_half as f64 / 4.0);
    let g_num = cgamma(lb * cast::<T>(2.0)).map_err(|e| wrap_pole(pos, e))?;
    let g1 = cgamma(lb + re_c(quarter + cast::<T>(0.5))).map_err(|e| wrap_pole(pos, e))?;
    let g2 = cgamma(lb + re_c(quarter + cast::<T>(m_beta as f64 / 2.0)))
        .map_err(|e| wrap_pole(pos, e))?;
    let two_pow = (-lb * cast::<T>(2.0) * cast::<T>(2.0f64.ln())).exp();
    Ok(two_pow * g_num / (g1 * g2))
}

fn wrap_pole(pos: usize, e: Error) -> Error {
    match e {
        Error::GammaPole(z, d) => Error::PoleProximity(format!(
            "gamma pole in c_beta (unmultipliable root #{pos}) at z = {z} (guard {d:e})"
        )),
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::catalog::build_catalog_space;
    use num_complex::Complex64;

    fn cfun(name: &str) -> CFunction<f64> {
        CFunction::new(Arc::new(build_catalog_space::<f64>(name).unwrap())).unwrap()
    }

    fn pt(re: f64, im: f64) -> SpectralPoint<f64> {
        SpectralPoint::new(vec![Complex64::new(re, im)])
    }

    #[test]
    fn c_at_rho_is_one_everywhere() {
        for name in ["H2", "H3", "H4", "H5", "CH2", "CH3", "HH2", "A2C", "A2R", "B2C", "B3C"] {
            let cf = cfun(name);
            let v = cf.c_function(&cf.datum().rho()).unwrap();
            assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-12, "{name}: {v}");
        }
    }

    #[test]
    fn h3_c_is_reciprocal() {
        // Duplication-formula simplification: c(lambda) = 1/lambda_1.
        let cf = cfun("H3");
        let v = cf.c_function(&pt(2.0, 0.0)).unwrap();
        assert!((v.re - 0.5).abs() < 1e-13, "{v}");
        let v = cf.c_function(&pt(0.25, 1.5)).unwrap();
        let expect = Complex64::new(1.0, 0.0) / Complex64::new(0.25, 1.5);
        assert!((v - expect).norm() < 1e-13);
    }

    #[test]
    fn h3_density_is_t_squared() {
        let cf = cfun("H3");
        for &t in &[0.5, 1.0, 2.5] {
            let v = cf.density(&pt(0.0, t)).unwrap();
            assert!((v.re - t * t).abs() < 1e-12, "{v}");
            assert!(v.im.abs() < 1e-12);
        }
    }

    #[test]
    fn h2_density_ratio() {
        // |c(it omega)|^{-2} proportional to t tanh(pi t): check the ratio
        // between t = 1 and t = 2 against the factorization oracle.
        let cf = cfun("H2");
        let d1 = cf.density(&pt(0.0, 1.0)).unwrap().re;
        let d2 = cf.density(&pt(0.0, 2.0)).unwrap().re;
        let pi = std::f64::consts::PI;
        let expect = (1.0 * (pi).tanh()) / (2.0 * (2.0 * pi).tanh());
        assert!((d1 / d2 - expect).abs() < 1e-12, "{} vs {expect}", d1 / d2);
    }

    #[test]
    fn spec_constants_h2_h3() {
        let h2 = cfun("H2");
        assert!((h2.factors().constants[0] - 4.0 * std::f64::consts::PI).abs() < 1e-12);
        let h3 = cfun("H3");
        assert!((h3.factors().constants[0] + 4.0 * std::f64::consts::PI).abs() < 1e-12);
    }

    #[test]
    fn h2_factor_value_at_i() {
        // C_beta p q at lambda_beta = i: 4 pi * i * (-i tanh pi) = 4 pi tanh(pi).
        let cf = cfun("H2");
        let v = cf.factors().factor_eval(cf.datum(), 0, &pt(0.0, 1.0)).unwrap();
        let expect = 4.0 * std::f64::consts::PI * std::f64::consts::PI.tanh();
        assert!((v.re - expect).abs() < 1e-10, "{v} vs {expect}");
        assert!(v.im.abs() < 1e-12);
    }

    #[test]
    fn factorization_identity_all_spaces() {
        // Gamma route and factored route agree off the poles.
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for name in ["H2", "H3", "H5", "CH2", "CH3", "HH2", "A2C", "B2C"] {
            let cf = cfun(name);
            let rank = cf.datum().rank();
            let mut done = 0;
            while done < 40 {
                let coords: Vec<Complex64> = (0..rank)
                    .map(|_| Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)))
                    .collect();
                let lam = SpectralPoint::new(coords);
                let gamma_route = match cf.density(&lam) {
                    Ok(v) => v,
                    Err(_) => continue,
                };
                let factored = cf.density_factored(&lam).unwrap();
                let rel = (gamma_route - factored).norm() / factored.norm().max(1e-300);
                assert!(rel < 1e-10, "{name}: {gamma_route} vs {factored}");
                done += 1;
            }
        }
    }

    #[test]
    fn density_is_weyl_invariant() {
        let cf = cfun("A2C");
        let lam = SpectralPoint::new(vec![Complex64::new(0.31, 0.77), Complex64::new(-0.2, 1.3)]);
        let base = cf.density(&lam).unwrap();
        for w in 0..cf.datum().weyl_order() {
            let moved = cf.datum().weyl_apply(w, &lam);
            let v = cf.density(&moved).unwrap();
            assert!((v - base).norm() / base.norm() < 1e-10);
        }
    }

    #[test]
    fn weyl_dim_values() {
        // d(0) = 1 everywhere; H3: (k+1)^2; H2: 2k+1; CH2: (k+1)^3.
        for name in ["H2", "H3", "CH2", "A2C"] {
            let cf = cfun(name);
            let zero = DominantWeight::new(vec![0; cf.datum().rank()]);
            assert_eq!(cf.weyl_dim(&zero).unwrap().0, 1);
        }
        let h3 = cfun("H3");
        for k in 0..8u32 {
            let (d, _) = h3.weyl_dim(&DominantWeight::new(vec![k])).unwrap();
            assert_eq!(d, ((k + 1) * (k + 1)) as u64);
        }
        let h2 = cfun("H2");
        for k in 0..8u32 {
            let (d, _) = h2.weyl_dim(&DominantWeight::new(vec![k])).unwrap();
            assert_eq!(d, (2 * k + 1) as u64);
        }
        let ch2 = cfun("CH2");
        for k in 0..6u32 {
            let (d, _) = ch2.weyl_dim(&DominantWeight::new(vec![k])).unwrap();
            assert_eq!(d, ((k + 1) as u64).pow(3));
        }
    }

    #[test]
    fn a2c_weyl_dim_is_squared_sl3_dimension() {
        // Oracle: squared Weyl dimension of the SL(3) representation with
        // highest weight a w1 + b w2: ((a+1)(b+1)(a+b+2)/2)^2.
        let cf = cfun("A2C");
        for a in 0..5u32 {
            for b in 0..5u32 {
                let (d, _) = cf.weyl_dim(&DominantWeight::new(vec![a, b])).unwrap();
                let sl3 = ((a + 1) * (b + 1) * (a + b + 2) / 2) as u64;
                assert_eq!(d, sl3 * sl3, "a={a} b={b}");
            }
        }
    }

    #[test]
    fn hh2_first_dimension() {
        // Sp(3)/Sp(2)xSp(1): first spherical representation has dimension 14.
        let cf = cfun("HH2");
        let (d, _) = cf.weyl_dim(&DominantWeight::new(vec![1])).unwrap();
        assert_eq!(d, 14);
    }

    #[test]
    fn weyl_dim_positive_integral_up_to_height_ten() {
        for name in ["H2", "H3", "H4", "H5", "CH2", "CH3", "HH2", "A2C", "A2R", "B2C", "B3C"] {
            let cf = cfun(name);
            for mu in cf.datum().dominant_weights(10) {
                let (d, residual) = cf.weyl_dim(&mu).unwrap();
                assert!(d >= 1, "{name} {mu:?}");
                assert!(residual < 1e-8);
            }
        }
    }

    #[test]
    fn dimension_limit_matches_c_ratio() {
        // Numeric limit of c(l-mu)c(-l+mu)/(c(l)c(-l)) as l -> mu + rho
        // along a generic direction, Richardson-extrapolated.
        for name in ["H2", "H3", "CH2", "A2C"] {
            let cf = cfun(name);
            let rank = cf.datum().rank();
            for mu in cf.datum().dominant_weights(3) {
                let target = cf.weyl_dim(&mu).unwrap().0 as f64;
                let base = cf.datum().shift_by_rho(&mu);
                let dir: Vec<Complex64> = (0..rank)
                    .map(|j| Complex64::new(0.43 + 0.11 * j as f64, 0.29 - 0.07 * j as f64))
                    .collect();
                let eval = |h: f64| -> f64 {
                    let lam = SpectralPoint::new(
                        base.coords()
                            .iter()
                            .zip(&dir)
                            .map(|(b, d)| b + h * d)
                            .collect(),
                    );
                    let neg =
                        SpectralPoint::new(lam.coords().iter().map(|z| -z).collect::<Vec<_>>());
                    let mu_c: Vec<Complex64> = mu
                        .coords()
                        .iter()
                        .map(|&m| Complex64::new(m as f64, 0.0))
                        .collect();
                    let lam_minus_mu = SpectralPoint::new(
                        lam.coords().iter().zip(&mu_c).map(|(l, m)| l - m).collect(),
                    );
                    let neg_plus_mu = SpectralPoint::new(
                        neg.coords().iter().zip(&mu_c).map(|(l, m)| l + m).collect(),
                    );
                    let num = cf.c_function(&lam_minus_mu).unwrap()
                        * cf.c_function(&neg_plus_mu).unwrap();
                    let den = cf.c_function(&lam).unwrap() * cf.c_function(&neg).unwrap();
                    (num / den).re
                };
                let f1 = eval(1e-4);
                let f2 = eval(5e-5);
                let extrap = 2.0 * f2 - f1;
                assert!(
                    (extrap - target).abs() / target < 1e-5,
                    "{name} {mu:?}: {extrap} vs {target}"
                );
            }
        }
    }
}
