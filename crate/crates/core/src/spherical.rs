//! Spherical function evaluation in the closed-form regimes: the complex
//! case (reduced system, all multiplicities 2) in any rank, rank one
//! through the Gauss hypergeometric function, compact restrictions, and a
//! brute-force Iwasawa-integral oracle for the two 2x2 model groups.
//!
//! Radial points H live in a and are given in omega-dual coordinates, so
//! lambda(H) = sum_j lambda_j H_j. In rank one the scalar t is the
//! coordinate with beta(h_1) = 1.

use std::sync::Arc;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::numerics::{gauss_legendre, hyp2f1};
use crate::rootsys::{DominantWeight, RootDatum, SpectralPoint};
use crate::scalar::{cast, re_c, Real};

/// A radial point: real or complexified element of a in omega-dual
/// coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialPoint<T>(pub Vec<Complex<T>>);

impl<T: Real> RadialPoint<T> {
    pub fn real(coords: &[T]) -> Self {
        RadialPoint(coords.iter().map(|&x| Complex::new(x, T::zero())).collect())
    }

    /// Purely imaginary direction i theta e, for the compact torus.
    pub fn imaginary(coords: &[T]) -> Self {
        RadialPoint(coords.iter().map(|&x| Complex::new(T::zero(), x)).collect())
    }

    pub fn zero(rank: usize) -> Self {
        RadialPoint(vec![Complex::new(T::zero(), T::zero()); rank])
    }

    pub fn coords(&self) -> &[Complex<T>] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|z| z.norm() == T::zero())
    }

    /// lambda(H) for lambda in omega-coordinates.
    pub fn pair(&self, lambda: &SpectralPoint<T>) -> Complex<T> {
        lambda
            .coords()
            .iter()
            .zip(self.0.iter())
            .fold(Complex::new(T::zero(), T::zero()), |acc, (l, h)| {
                acc + *l * *h
            })
    }

    /// Membership in the closed holomorphy domain |beta(Im H)| <= pi/2 for
    /// every root beta.
    pub fn in_omega_pi<T2>(&self, datum: &RootDatum<T>) -> bool {
        let half_pi = T::PI() / cast::<T>(2.0);
        let im: Vec<T> = self.0.iter().map(|z| z.im).collect();
        datum.positive_roots().iter().all(|r| {
            let mut v = T::zero();
            for (j, &h) in im.iter().enumerate() {
                v = v + r.coords[j] * h;
            }
            v.abs() <= half_pi + T::epsilon()
        })
    }
}

/// Evaluation mode of a spherical evaluator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SphericalMode {
    /// Weyl alternating-sum formula (reduced system, all m = 2).
    ComplexCase,
    /// Rank-one Gauss hypergeometric realization.
    RankOne,
}

/// Spherical functions phi_lambda for one space.
#[derive(Debug, Clone)]
pub struct SphericalEvaluator<T> {
    datum: Arc<RootDatum<T>>,
    mode: SphericalMode,
    /// Rank one: (m_{beta/2}, m_beta) and rho_1.
    rank_one: Option<(u32, u32, T)>,
}

impl<T: Real> SphericalEvaluator<T> {
    /// Build the evaluator, preferring the complex-case closed form, and
    /// run the construction self-checks (normalization, symmetry, oracle
    /// agreement on the model spaces).
    pub fn new(datum: Arc<RootDatum<T>>) -> Result<Self> {
        let mode = if datum.is_complex_case() {
            SphericalMode::ComplexCase
        } else if datum.rank() == 1 {
            SphericalMode::RankOne
        } else {
            return Err(Error::UnsupportedSpace(
                datum.name().to_string(),
                "spherical (neither rank one nor complex case)",
            ));
        };
        let rank_one = if datum.rank() == 1 {
            let (mh, mb) = datum.mult_pair(0);
            Some((mh, mb, datum.rho_data().rho_j[0]))
        } else {
            None
        };
        let out = SphericalEvaluator {
            datum,
            mode,
            rank_one,
        };
        out.self_check()?;
        Ok(out)
    }

    fn self_check(&self) -> Result<()> {
        let tol = cast::<T>(1e-9);
        // phi_rho = 1 and phi_lambda = phi_{-lambda} at a few points.
        let rho = self.datum.rho();
        for &t in &[0.0, 0.4, 1.1] {
            let h = RadialPoint::real(&vec![cast::<T>(t); self.datum.rank()]);
            let v = self.phi(&rho, &h)?;
            if (v - re_c(T::one())).norm() > tol {
                return Err(Error::ConventionCheck(format!(
                    "phi_rho != 1 at t = {t}: {:?}",
                    (v.re.to_f64(), v.im.to_f64())
                )));
            }
        }
        let lam = SpectralPoint::new(
            (0..self.datum.rank())
                .map(|j| Complex::new(cast::<T>(0.23 + 0.08 * j as f64), cast::<T>(0.41)))
                .collect(),
        );
        let neg = SpectralPoint::new(lam.coords().iter().map(|z| -z).collect());
        let h = RadialPoint::real(&vec![cast::<T>(0.7); self.datum.rank()]);
        let a = self.phi(&lam, &h)?;
        let b = self.phi(&neg, &h)?;
        if (a - b).norm() > tol * a.norm().max(T::one()) {
            return Err(Error::ConventionCheck("phi not W-symmetric".into()));
        }
        // Oracle agreement on the two 2x2 model spaces.
        if let Some(model) = self.model() {
            for &(re, im, t) in &[(0.3, 0.0, 1.0), (0.0, 0.9, 0.6), (0.2, -0.5, 1.4)] {
                let lam = SpectralPoint::new(vec![Complex::new(cast::<T>(re), cast::<T>(im))]);
                let mine = self.phi_rank1(&lam, cast::<T>(t))?;
                let oracle = phi_oracle_rank1(&lam, cast::<T>(t), model)?;
                if (mine - oracle).norm() > cast::<T>(1e-6) * oracle.norm().max(T::one()) {
                    return Err(Error::ConventionCheck(format!(
                        "rank-one parameter map disagrees with the Iwasawa oracle: {:?} vs {:?}",
                        (mine.re.to_f64(), mine.im.to_f64()),
                        (oracle.re.to_f64(), oracle.im.to_f64())
                    )));
                }
            }
        }
        Ok(())
    }

    /// Which 2x2 model group matches this datum, if any.
    pub fn model(&self) -> Option<RankOneModel> {
        match self.rank_one {
            Some((0, 1, _)) => Some(RankOneModel::SplitRankOne),
            Some((0, 2, _)) => Some(RankOneModel::ComplexRankOne),
            _ => None,
        }
    }

    pub fn mode(&self) -> SphericalMode {
        self.mode
    }

    pub fn datum(&self) -> &Arc<RootDatum<T>> {
        &self.datum
    }

    /// phi_lambda(exp H) by the preferred closed form.
    pub fn phi(&self, lambda: &SpectralPoint<T>, h: &RadialPoint<T>) -> Result<Complex<T>> {
        match self.mode {
            SphericalMode::ComplexCase => self.phi_complex(lambda, h),
            SphericalMode::RankOne => {
                let t = h.coords()[0];
                if t.im.abs() > T::epsilon() {
                    // Complexified radial point: both closed forms continue;
                    // rank one uses the hypergeometric argument directly.
                    return self.phi_rank1_complex_time(lambda, t);
                }
                self.phi_rank1(lambda, t.re)
            }
        }
    }

    /// Closed form for the complex case:
    /// (pi(rho)/pi(lambda)) (sum_w det w e^{w lambda (H)}) / (sum_w det w e^{w rho (H)}).
    pub fn phi_complex(&self, lambda: &SpectralPoint<T>, h: &RadialPoint<T>) -> Result<Complex<T>> {
        if self.mode != SphericalMode::ComplexCase {
            return Err(Error::UnsupportedSpace(
                self.datum.name().to_string(),
                "complex-case evaluator",
            ));
        }
        self.datum.check_rank(lambda)?;
        if h.coords().len() != self.datum.rank() {
            return Err(Error::RankMismatch {
                expected: self.datum.rank(),
                got: h.coords().len(),
            });
        }
        if h.is_zero() {
            return Ok(re_c(T::one()));
        }
        // Regularity thresholds: offset-extrapolate when lambda sits near a
        // wall or H near a Weyl chamber face.
        let reg = self.weyl_denominator_scale(lambda);
        if reg > cast::<T>(1e-5) {
            return self.phi_complex_regular(lambda, h);
        }
        let rank = self.datum.rank();
        let dir: Vec<Complex<T>> = (0..rank)
            .map(|j| {
                Complex::new(
                    cast::<T>(0.83 - 0.11 * j as f64),
                    cast::<T>(0.29 + 0.05 * j as f64),
                )
            })
            .collect();
        let offset = |s: T| -> SpectralPoint<T> {
            SpectralPoint::new(
                lambda
                    .coords()
                    .iter()
                    .zip(&dir)
                    .map(|(l, d)| *l + *d * s)
                    .collect(),
            )
        };
        let s = cast::<T>(1e-3);
        let f1 = self.phi_complex_regular(&offset(s), h)?;
        let f2 = self.phi_complex_regular(&offset(s / cast::<T>(2.0)), h)?;
        let extrapolated = f2 * cast::<T>(2.0) - f1;
        let residual = (f2 - f1).norm();
        if residual > cast::<T>(1e-3) * extrapolated.norm().max(T::one()) {
            return Err(Error::UnresolvedSingularity {
                residual: residual.to_f64().unwrap_or(f64::NAN),
                tol: 1e-3,
            });
        }
        Ok(extrapolated)
    }

    /// Relative distance of lambda from the Weyl walls: |pi(lambda)|
    /// normalized by the products of coordinate magnitudes.
    fn weyl_denominator_scale(&self, lambda: &SpectralPoint<T>) -> T {
        let mut min_rel = T::infinity();
        for &i in self.datum.unmultipliable_positive() {
            let v = self.datum.lambda_sub_pos(lambda, i);
            let scale = self.datum.norm_spectral(lambda).max(T::one());
            min_rel = min_rel.min(v.norm() / scale);
        }
        min_rel
    }

    fn phi_complex_regular(
        &self,
        lambda: &SpectralPoint<T>,
        h: &RadialPoint<T>,
    ) -> Result<Complex<T>> {
        let datum = &self.datum;
        let rho = datum.rho();
        // pi(nu) = prod_{beta > 0} <nu, beta>; ratios of lambda_beta values
        // differ from <.,.> by the same norm factors, which cancel.
        let mut ratio = re_c(T::one());
        for &i in datum.unmultipliable_positive() {
            ratio = ratio * datum.lambda_sub_pos(&rho, i) / datum.lambda_sub_pos(lambda, i);
        }
        let mut num = Complex::new(T::zero(), T::zero());
        let mut den = Complex::new(T::zero(), T::zero());
        for w in 0..datum.weyl_order() {
            let det = datum.weyl().dets[w];
            let wl = datum.weyl_apply(w, lambda);
            let wr = datum.weyl_apply(w, &rho);
            num = num + h.pair(&wl).exp() * det;
            den = den + h.pair(&wr).exp() * det;
        }
        if den.norm() < T::epsilon() * cast::<T>(1e3) {
            return Err(Error::PoleProximity(
                "Weyl denominator vanished at this radial point".into(),
            ));
        }
        Ok(ratio * num / den)
    }

    /// Rank-one closed form:
    /// phi_lambda(a_t) = 2F1(rho_1 + l_1, rho_1 - l_1; (m_h + m_b + 1)/2; -sinh^2(t/2)).
    ///
    /// The parameter map is an implementation convention pinned by the
    /// contract phi_rho = 1, phi_lambda = phi_{-lambda}, and agreement with
    /// the Iwasawa-integral oracle on the model spaces (checked at
    /// construction).
    pub fn phi_rank1(&self, lambda: &SpectralPoint<T>, t: T) -> Result<Complex<T>> {
        let (mh, mb, rho1) = self
            .rank_one
            .ok_or_else(|| Error::UnsupportedSpace(self.datum.name().to_string(), "rank-one"))?;
        self.datum.check_rank(lambda)?;
        if t < T::zero() {
            return Err(Error::DomainViolation("radial t must be >= 0".into()));
        }
        let half = t / cast::<T>(2.0);
        let z = re_c(-half.sinh() * half.sinh());
        self.jacobi_2f1(lambda, z, mh, mb, rho1)
    }

    fn phi_rank1_complex_time(
        &self,
        lambda: &SpectralPoint<T>,
        t: Complex<T>,
    ) -> Result<Complex<T>> {
        let (mh, mb, rho1) = self
            .rank_one
            .ok_or_else(|| Error::UnsupportedSpace(self.datum.name().to_string(), "rank-one"))?;
        let half = t / cast::<T>(2.0);
        let s = half.sinh();
        self.jacobi_2f1(lambda, -s * s, mh, mb, rho1)
    }

    fn jacobi_2f1(
        &self,
        lambda: &SpectralPoint<T>,
        z: Complex<T>,
        mh: u32,
        mb: u32,
        rho1: T,
    ) -> Result<Complex<T>> {
        let mut l1 = lambda.coords()[0];
        // phi is even in lambda; normalize to Re >= 0 so the Euler-integral
        // route of 2F1 stays applicable at large radial arguments.
        if l1.re < T::zero() {
            l1 = -l1;
        }
        let c = re_c(cast::<T>((mh + mb + 1) as f64 / 2.0));
        let a = re_c(rho1) + l1;
        let b = re_c(rho1) - l1;
        hyp2f1(a, b, c, z)
    }

    /// Compact spherical function psi_mu at exp(i theta direction):
    /// the holomorphic continuation of phi_{mu + rho}.
    pub fn psi_compact(&self, mu: &DominantWeight, hc: &RadialPoint<T>) -> Result<Complex<T>> {
        if mu.coords().len() != self.datum.rank() {
            return Err(Error::RankMismatch {
                expected: self.datum.rank(),
                got: mu.coords().len(),
            });
        }
        if !hc.in_omega_pi::<T>(&self.datum) {
            return Err(Error::DomainViolation(
                "compact radial point outside the holomorphy domain".into(),
            ));
        }
        let lam = self.datum.shift_by_rho(mu);
        match self.mode {
            SphericalMode::ComplexCase => self.phi_complex(&lam, hc),
            SphericalMode::RankOne => self.phi_rank1_complex_time(&lam, hc.coords()[0]),
        }
    }
}

/// The two supported 2x2 matrix models.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankOneModel {
    /// SL(2,R)/SO(2): m_beta = 1, no half root.
    SplitRankOne,
    /// SL(2,C)/SU(2): m_beta = 2.
    ComplexRankOne,
}

impl std::str::FromStr for RankOneModel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "split-rank-one" | "split" => Ok(RankOneModel::SplitRankOne),
            "complex-rank-one" | "complex" => Ok(RankOneModel::ComplexRankOne),
            other => Err(Error::DomainViolation(format!(
                "unknown rank-one model `{other}`"
            ))),
        }
    }
}

/// Direct numerical Iwasawa integral
/// phi_lambda(a_t) = int_K e^{(lambda - rho)(H(a_t k))} dk
/// for the 2x2 models, using the closed-form a-projection
/// H(g) = log(|g11|^2 + |g21|^2) h_1 and quadrature over K.
///
/// For SO(2) the integral runs over the rotation angle; for SU(2), in
/// Euler angles, the integrand depends only on the polar angle, so the
/// azimuthal factors integrate to 1 and the polar quadrature carries the
/// sin(theta)/2 marginal. The group elements are built explicitly and the
/// Iwasawa projection is read off the first column.
pub fn phi_oracle_rank1<T: Real>(
    lambda: &SpectralPoint<T>,
    t: T,
    model: RankOneModel,
) -> Result<Complex<T>> {
    if lambda.rank() != 1 {
        return Err(Error::RankMismatch {
            expected: 1,
            got: lambda.rank(),
        });
    }
    let l1 = lambda.coords()[0];
    let (nodes, weights) = gauss_legendre::<T>(64);
    let half_t = t / cast::<T>(2.0);
    let (e_p, e_m) = (half_t.exp(), (-half_t).exp());
    match model {
        RankOneModel::SplitRankOne => {
            // a_t k_phi with k_phi in SO(2); exponent (lambda_1 - 1/2) u(phi),
            // u = log of squared first-column norm.
            let rho1 = cast::<T>(0.5);
            let mut acc = Complex::new(T::zero(), T::zero());
            // phi in [0, 2 pi); map GL nodes from [-1, 1].
            let pi = T::PI();
            for (x, w) in nodes.iter().zip(weights.iter()) {
                let phi = pi * (*x + T::one());
                let (c, s) = (phi.cos(), phi.sin());
                let g11 = e_p * c;
                let g21 = e_m * s;
                let u = (g11 * g11 + g21 * g21).ln();
                let exponent = (l1 - re_c(rho1)) * u;
                acc = acc + exponent.exp() * (*w * pi);
            }
            Ok(acc / (cast::<T>(2.0) * pi))
        }
        RankOneModel::ComplexRankOne => {
            // k(theta, phi0, psi0) in SU(2) at fixed azimuthal angles; the
            // marginal of the polar angle is sin(theta)/2 on [0, pi].
            let rho1 = T::one();
            let (phi0, psi0) = (cast::<T>(0.37), cast::<T>(1.13));
            let mut acc = Complex::new(T::zero(), T::zero());
            let pi = T::PI();
            for (x, w) in nodes.iter().zip(weights.iter()) {
                let theta = pi / cast::<T>(2.0) * (*x + T::one());
                let half = theta / cast::<T>(2.0);
                // alpha = cos(theta/2) e^{i(phi0+psi0)/2}, gamma = sin(theta/2) e^{i(phi0-psi0)/2}
                let ap = (phi0 + psi0) / cast::<T>(2.0);
                let gp = (phi0 - psi0) / cast::<T>(2.0);
                let alpha = Complex::new(ap.cos(), ap.sin()) * half.cos();
                let gamma = Complex::new(gp.cos(), gp.sin()) * half.sin();
                let g11 = alpha * e_p;
                let g21 = gamma * e_m;
                let u = (g11.norm_sqr() + g21.norm_sqr()).ln();
                let exponent = (l1 - re_c(rho1)) * u;
                let weight = *w * (pi / cast::<T>(2.0)) * theta.sin() / cast::<T>(2.0);
                acc = acc + exponent.exp() * weight;
            }
            Ok(acc)
        }
    }
}
