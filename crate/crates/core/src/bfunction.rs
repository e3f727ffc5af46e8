//! The normalizing function b: both closed forms, the canonical
//! well-conditioned ratio b/(c(l)c(-l)) used inside integrands, the
//! symmetrization a~, pole-lattice predicates, and the defining residue
//! identity.
//!
//! b is pinned by
//!   b(l) / (c(l) c(-l)) = (i/2)^l d(l - rho) prod_j 1/sin(pi (l_j - rho_j)),
//! and admits the trig closed form b = K_b T(l) prod_j 1/sin(pi(l_j - rho_j))
//! with T a product of tangents over the odd-multiplicity roots. A second,
//! case-split trig form carries a sign K'_b that is resolved numerically
//! at one reference point and then cross-checked everywhere.

use std::sync::Arc;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::numerics::{cgamma, residue_at};
use crate::plancherel::CFunction;
use crate::rootsys::{DominantWeight, RootDatum, SpectralPoint};
use crate::scalar::{cast, im_c, re_c, Real};

/// Distance below which evaluation refuses to sit on a singular hyperplane.
const POLE_GUARD: f64 = 1e-8;
/// Distance below which the symmetrized sum switches to offset extrapolation.
const SINGULAR_SWITCH: f64 = 1e-4;

/// Multiplicity case of one unmultipliable positive root, following the
/// four singularity patterns of the density.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MultCase {
    /// m_beta even (then m_beta/2 = 0).
    EvenFull,
    /// m_beta odd, m_beta/2 = 0.
    OddNoHalf,
    /// m_beta odd, m_beta/2 / 2 even (nonzero half multiplicity).
    OddHalfEven,
    /// m_beta odd, m_beta/2 / 2 odd.
    OddHalfOdd,
}

pub fn mult_case(m_half: u32, m_beta: u32) -> MultCase {
    if m_beta % 2 == 0 {
        MultCase::EvenFull
    } else if m_half == 0 {
        MultCase::OddNoHalf
    } else if (m_half / 2) % 2 == 0 {
        MultCase::OddHalfEven
    } else {
        MultCase::OddHalfOdd
    }
}

#[derive(Debug, Clone)]
pub struct BFunction<T> {
    cf: Arc<CFunction<T>>,
    /// C_b = (i/2)^rank.
    c_b: Complex<T>,
    /// K_b, derived from C_b, c_0, the C_beta and P(rho) through the
    /// factorization (the product of the C_beta divides).
    k_b: Complex<T>,
    /// Sign-resolved constant of the case-split closed form.
    k_b_prime: Complex<T>,
    /// Multiplicity case per unmultipliable positive root.
    cases: Vec<MultCase>,
    /// Roots of the per-axis divisor polynomial p_j (subset of the roots
    /// of p_{beta_j}); the quotient roots are kept separately so the
    /// sine zeros they cancel can be divided out stably.
    axis_divisor_roots: Vec<Vec<T>>,
    axis_extra_roots: Vec<Vec<T>>,
}

impl<T: Real> BFunction<T> {
    pub fn new(cf: Arc<CFunction<T>>) -> Result<Self> {
        let datum = cf.datum().clone();
        let rank = datum.rank();
        let half_i = im_c(cast::<T>(0.5));
        let mut c_b = re_c(T::one());
        for _ in 0..rank {
            c_b = c_b * half_i;
        }

        // K_b = C_b c_0^2 / (P(rho) prod_beta C_beta).
        let mut denom = re_c(cf.p_rho());
        for &cb in &cf.factors().constants {
            denom = denom * cb;
        }
        let c0 = cf.c0();
        let k_b = c_b * (c0 * c0) / denom;

        let star = datum.unmultipliable_positive().to_vec();
        let cases: Vec<MultCase> = (0..star.len())
            .map(|pos| {
                let (mh, mb) = datum.mult_pair(pos);
                mult_case(mh, mb)
            })
            .collect();

        // Per-axis splitting of p_{beta_j}: divisor roots {rho_j - k}_{k=1..2rho_j-1}
        // cancel the sine zeros inside |l_j| < rho_j; the remaining roots
        // stay as plain polynomial factors.
        let mut axis_divisor_roots = Vec::with_capacity(rank);
        let mut axis_extra_roots = Vec::with_capacity(rank);
        for j in 0..rank {
            let star_pos = star
                .iter()
                .position(|&i| i == datum.basis_star()[j])
                .expect("basis_star is unmultipliable");
            let all = cf.factors().poly_roots[star_pos].clone();
            let rho_j = datum.rho_data().rho_j[j];
            let top = (cast::<T>(2.0) * rho_j - T::one())
                .round()
                .to_f64()
                .unwrap_or(0.0) as i64;
            let mut divisor: Vec<T> = (1..=top)
                .map(|k| rho_j - cast::<T>(k as f64))
                .collect();
            let mut extra = all;
            for d in &divisor {
                let idx = extra
                    .iter()
                    .position(|r| (*r - *d).abs() < cast::<T>(1e-9))
                    .expect("divisor roots are roots of p_beta_j");
                extra.remove(idx);
            }
            divisor.sort_by(|a, b| a.partial_cmp(b).unwrap());
            axis_divisor_roots.push(divisor);
            axis_extra_roots.push(extra);
        }

        let mut out = BFunction {
            cf,
            c_b,
            k_b,
            k_b_prime: k_b,
            cases,
            axis_divisor_roots,
            axis_extra_roots,
        };

        // Resolve the sign of K'_b at one generic reference point.
        let reference = SpectralPoint::new(
            (0..rank)
                .map(|j| Complex::new(cast::<T>(0.1234 + 0.0567 * j as f64), cast::<T>(0.2101)))
                .collect(),
        );
        let via_t = out.b_eval(&reference)?;
        let unsigned = out.b_explicit_inner(&reference, out.k_b)?;
        let ratio = via_t / unsigned;
        let re = ratio.re;
        if (ratio - re_c(re.signum())).norm() > cast::<T>(1e-8) {
            return Err(Error::ConventionCheck(format!(
                "closed forms differ by a non-sign factor {:?}",
                (ratio.re.to_f64(), ratio.im.to_f64())
            )));
        }
        if re < T::zero() {
            out.k_b_prime = -out.k_b;
        }
        Ok(out)
    }

    pub fn c_function(&self) -> &Arc<CFunction<T>> {
        &self.cf
    }

    pub fn datum(&self) -> &Arc<RootDatum<T>> {
        self.cf.datum()
    }

    pub fn c_b(&self) -> Complex<T> {
        self.c_b
    }

    pub fn k_b(&self) -> Complex<T> {
        self.k_b
    }

    pub fn k_b_prime(&self) -> Complex<T> {
        self.k_b_prime
    }

    pub fn cases(&self) -> &[MultCase] {
        &self.cases
    }

    /// Pi(l) = prod over unmultipliable positive beta of l_beta.
    pub fn pi_poly(&self, lambda: &SpectralPoint<T>) -> Complex<T> {
        let datum = self.datum();
        let mut prod = re_c(T::one());
        for &i in datum.unmultipliable_positive() {
            prod = prod * datum.lambda_sub_pos(lambda, i);
        }
        prod
    }

    /// Decay threshold gamma of the Schwartz-tube estimate: on T_epsilon
    /// with epsilon < gamma(delta) the symmetrized a~ decays like
    /// (1+|l|)^s e^{(A-pi) c2 |Im l|}.
    pub fn gamma_threshold(&self, delta: T) -> T {
        let datum = self.datum();
        let mut g = delta;
        for pos in 0..datum.unmultipliable_positive().len() {
            let (mh, _) = datum.mult_pair(pos);
            let rt = datum.rho_data().rho_tilde[pos];
            let bound = if (mh / 2) % 2 == 0 {
                T::one() / rt
            } else {
                T::one() / (cast::<T>(2.0) * rt)
            };
            g = g.min(bound);
        }
        g
    }

    /// Predicate: lambda lies within `guard` of a singular hyperplane of b
    /// (sine lattice l_j - rho_j in Z, or the tangent lattice of an
    /// odd-multiplicity root).
    pub fn near_b_pole(&self, lambda: &SpectralPoint<T>, guard: T) -> bool {
        let datum = self.datum();
        for (j, &lam) in lambda.coords().iter().enumerate() {
            let x = lam.re - datum.rho_data().rho_j[j];
            if (x - x.round()).abs().hypot(lam.im) < guard {
                return true;
            }
        }
        for pos in 0..datum.unmultipliable_positive().len() {
            let (_, mb) = datum.mult_pair(pos);
            if mb % 2 == 1 {
                let idx = datum.unmultipliable_positive()[pos];
                let lb = datum.lambda_sub_pos(lambda, idx);
                let x = lb.re - datum.rho_data().rho_tilde[pos] - cast::<T>(0.5);
                if (x - x.round()).abs().hypot(lb.im) < guard {
                    return true;
                }
            }
        }
        false
    }

    /// Predicate: lambda lies within `guard` of the genuine pole lattice of
    /// b/(cc): hyperplanes +-l_j - rho_j in Z^+ (the canceled low sine
    /// zeros do not count).
    pub fn near_bcc_pole(&self, lambda: &SpectralPoint<T>, guard: T) -> bool {
        let datum = self.datum();
        for (j, &lam) in lambda.coords().iter().enumerate() {
            let rho_j = datum.rho_data().rho_j[j];
            for sign in [T::one(), -T::one()] {
                let x = sign * lam.re - rho_j;
                let k = x.round();
                if k >= -cast::<T>(0.25) && (x - k).abs().hypot(lam.im) < guard {
                    return true;
                }
            }
        }
        false
    }

    /// b(l) in the tangent closed form K_b T(l) prod 1/sin(pi(l_j - rho_j)).
    pub fn b_eval(&self, lambda: &SpectralPoint<T>) -> Result<Complex<T>> {
        let datum = self.datum();
        datum.check_rank(lambda)?;
        if self.near_b_pole(lambda, cast::<T>(POLE_GUARD)) {
            return Err(Error::PoleProximity(
                "b evaluated on a singular hyperplane".into(),
            ));
        }
        let pi = T::PI();
        let mut out = self.k_b;
        for pos in 0..datum.unmultipliable_positive().len() {
            let (_, mb) = datum.mult_pair(pos);
            if mb % 2 == 1 {
                let idx = datum.unmultipliable_positive()[pos];
                let lb = datum.lambda_sub_pos(lambda, idx);
                let z = (lb - re_c(datum.rho_data().rho_tilde[pos])) * pi;
                out = out * z.sin() / z.cos();
            }
        }
        for (j, &lam) in lambda.coords().iter().enumerate() {
            let z = (lam - re_c(datum.rho_data().rho_j[j])) * pi;
            out = out / z.sin();
        }
        Ok(out)
    }

    /// b(l) in the case-split form with the sign-resolved K'_b.
    pub fn b_explicit(&self, lambda: &SpectralPoint<T>) -> Result<Complex<T>> {
        self.b_explicit_inner(lambda, self.k_b_prime)
    }

    fn b_explicit_inner(&self, lambda: &SpectralPoint<T>, constant: Complex<T>) -> Result<Complex<T>> {
        let datum = self.datum();
        datum.check_rank(lambda)?;
        let pi = T::PI();
        let basis: Vec<usize> = datum.basis_star().to_vec();
        let mut out = constant;
        for (pos, &i) in datum.unmultipliable_positive().iter().enumerate() {
            let simple = basis.contains(&i);
            let lb = datum.lambda_sub_pos(lambda, i) * pi;
            match (simple, self.cases[pos]) {
                (true, MultCase::OddHalfOdd) => out = out / lb.cos(),
                (true, _) => out = out / lb.sin(),
                (false, MultCase::OddNoHalf) | (false, MultCase::OddHalfEven) => {
                    out = out * lb.cos() / lb.sin()
                }
                (false, MultCase::OddHalfOdd) => out = out * lb.sin() / lb.cos(),
                (false, MultCase::EvenFull) => {}
            }
        }
        Ok(out)
    }

    /// The canonical integrand path:
    /// b(l)/(c(l)c(-l)) = (C_b/P(rho)) P(l) prod_j 1/sin(pi(l_j - rho_j)),
    /// evaluated with the low sine zeros divided into the polynomial, so
    /// the removable points inside T'_1 are numerically harmless.
    pub fn b_over_cc(&self, lambda: &SpectralPoint<T>) -> Result<Complex<T>> {
        let datum = self.datum();
        datum.check_rank(lambda)?;
        if self.near_bcc_pole(lambda, cast::<T>(POLE_GUARD)) {
            return Err(Error::PoleProximity(
                "b/(cc) evaluated on the interpolation pole lattice".into(),
            ));
        }
        let mut out = self.c_b / self.cf.p_rho();

        // Factors p_beta for the non-basis unmultipliable roots.
        let basis: Vec<usize> = datum.basis_star().to_vec();
        for (pos, &i) in datum.unmultipliable_positive().iter().enumerate() {
            if basis.contains(&i) {
                continue;
            }
            let lb = datum.lambda_sub_pos(lambda, i);
            out = out * self.cf.factors().poly_eval(pos, lb);
        }

        // Per-axis: extra polynomial roots times the stable ratio
        // p_j(l_j)/sin(pi(l_j - rho_j)).
        for (j, &lam) in lambda.coords().iter().enumerate() {
            for &r in &self.axis_extra_roots[j] {
                out = out * (lam - re_c(r));
            }
            out = out * self.axis_ratio(j, lam);
        }
        Ok(out)
    }

    /// p_j(l)/sin(pi(l - rho_j)) with the factor nearest to l divided
    /// against the sine when that sine zero is canceled.
    fn axis_ratio(&self, j: usize, lam: Complex<T>) -> Complex<T> {
        let pi = T::PI();
        let rho_j = self.datum().rho_data().rho_j[j];
        let divisor = &self.axis_divisor_roots[j];
        // Nearest canceled root.
        let mut nearest: Option<T> = None;
        for &r in divisor {
            let d = (lam - re_c(r)).norm();
            if d < cast::<T>(0.2) && nearest.map_or(true, |n| (lam - re_c(n)).norm() > d) {
                nearest = Some(r);
            }
        }
        match nearest {
            None => {
                let mut poly = re_c(T::one());
                for &r in divisor {
                    poly = poly * (lam - re_c(r));
                }
                poly / ((lam - re_c(rho_j)) * pi).sin()
            }
            Some(r0) => {
                // sin(pi(l - rho_j)) = (-1)^n sin(pi(l - r0)) with
                // n = rho_j - r0 an integer; the ratio
                // (l - r0)/sin(pi(l - r0)) is smooth near r0.
                let n = (rho_j - r0).round().to_f64().unwrap_or(0.0) as i64;
                let sign = if n % 2 == 0 { T::one() } else { -T::one() };
                let u = (lam - re_c(r0)) * pi;
                let ratio = if u.norm() < cast::<T>(1e-20) {
                    re_c(T::one() / pi)
                } else {
                    (lam - re_c(r0)) / u.sin()
                };
                let mut poly = re_c(T::one());
                for &r in divisor {
                    if (r - r0).abs() < cast::<T>(1e-9) {
                        continue;
                    }
                    poly = poly * (lam - re_c(r));
                }
                poly * ratio * sign
            }
        }
    }

    /// a~(l) = sum_w a(w l) b(w l); near the singular hyperplanes the sum
    /// has removable singularities and is evaluated by a generic offset
    /// with Richardson extrapolation.
    pub fn a_tilde<F>(&self, a: &F, lambda: &SpectralPoint<T>) -> Result<Complex<T>>
    where
        F: Fn(&SpectralPoint<T>) -> Result<Complex<T>>,
    {
        let datum = self.datum();
        datum.check_rank(lambda)?;
        let switch = cast::<T>(SINGULAR_SWITCH);
        let singular = (0..datum.weyl_order())
            .any(|w| self.near_b_pole(&datum.weyl_apply(w, lambda), switch));
        if !singular {
            return self.a_tilde_direct(a, lambda);
        }
        // Generic complex direction; two step sizes, linear Richardson.
        let rank = datum.rank();
        let dir: Vec<Complex<T>> = (0..rank)
            .map(|j| {
                Complex::new(
                    cast::<T>(0.71 + 0.13 * j as f64),
                    cast::<T>(0.39 - 0.07 * j as f64),
                )
            })
            .collect();
        let offset = |h: T| -> SpectralPoint<T> {
            SpectralPoint::new(
                lambda
                    .coords()
                    .iter()
                    .zip(&dir)
                    .map(|(l, d)| *l + *d * h)
                    .collect(),
            )
        };
        let h = cast::<T>(2e-4);
        let f1 = self.a_tilde_direct(a, &offset(h))?;
        let f2 = self.a_tilde_direct(a, &offset(h / cast::<T>(2.0)))?;
        let extrapolated = f2 * cast::<T>(2.0) - f1;
        let residual = (f2 - f1).norm();
        let tol = cast::<T>(1e-5) * extrapolated.norm().max(T::one());
        if residual > tol * cast::<T>(10.0) {
            return Err(Error::UnresolvedSingularity {
                residual: residual.to_f64().unwrap_or(f64::NAN),
                tol: tol.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(extrapolated)
    }

    fn a_tilde_direct<F>(&self, a: &F, lambda: &SpectralPoint<T>) -> Result<Complex<T>>
    where
        F: Fn(&SpectralPoint<T>) -> Result<Complex<T>>,
    {
        let datum = self.datum();
        let mut acc = Complex::new(T::zero(), T::zero());
        for w in 0..datum.weyl_order() {
            let moved = datum.weyl_apply(w, lambda);
            acc = acc + a(&moved)? * self.b_eval(&moved)?;
        }
        Ok(acc)
    }

    /// Symmetrized product against the density through the canonical path:
    /// (1/|W|) sum_w a(w l) b(w l) / (c(l) c(-l)) = (1/|W|) sum_w a(w l) bcc(w l),
    /// using the W-invariance of the density.
    pub fn symmetrized_bcc<F>(&self, a: &F, lambda: &SpectralPoint<T>) -> Result<Complex<T>>
    where
        F: Fn(&SpectralPoint<T>) -> Result<Complex<T>>,
    {
        let datum = self.datum();
        let mut acc = Complex::new(T::zero(), T::zero());
        for w in 0..datum.weyl_order() {
            let moved = datum.weyl_apply(w, lambda);
            acc = acc + a(&moved)? * self.b_over_cc(&moved)?;
        }
        Ok(acc / cast::<T>(datum.weyl_order() as f64))
    }

    /// Iterated residue of b/(cc) at l_j = mu_j + rho_j (innermost axis
    /// last in index order), returned as the ratio
    /// computed / [(-1)^{|mu|} d(mu) (-2 pi i)^{-rank}], which the defining
    /// condition makes 1.
    pub fn residue_check(&self, mu: &DominantWeight) -> Result<Complex<T>> {
        let datum = self.datum();
        if mu.coords().len() != datum.rank() {
            return Err(Error::RankMismatch {
                expected: datum.rank(),
                got: mu.coords().len(),
            });
        }
        let center = datum.shift_by_rho(mu);
        let rank = datum.rank();
        let radius = cast::<T>(0.35);
        let computed = self.nested_residue(&center, 0, &[], radius)?;
        let _ = rank;

        let (dim, _) = self.cf.weyl_dim(mu)?;
        let minus_two_pi_i = Complex::new(T::zero(), -cast::<T>(2.0) * T::PI());
        let mut scale = re_c(T::one());
        for _ in 0..rank {
            scale = scale * minus_two_pi_i;
        }
        let sign = if mu.height() % 2 == 0 {
            T::one()
        } else {
            -T::one()
        };
        let target = re_c(sign * cast::<T>(dim as f64)) / scale;
        Ok(computed / target)
    }

    fn nested_residue(
        &self,
        center: &SpectralPoint<T>,
        axis: usize,
        prefix: &[Complex<T>],
        radius: T,
    ) -> Result<Complex<T>> {
        let rank = self.datum().rank();
        let c = center.coords()[axis];
        let inner = |z: Complex<T>| -> Result<Complex<T>> {
            let mut point = prefix.to_vec();
            point.push(z);
            if axis + 1 == rank {
                self.b_over_cc(&SpectralPoint::new(point))
            } else {
                self.nested_residue(center, axis + 1, &point, radius)
            }
        };
        residue_at(&inner, c, radius, 64)
    }

    /// Gamma-variant weight A(l) = a(l) prod_j Gamma(l_j - rho_j + 1).
    pub fn big_a<F>(&self, a: &F, lambda: &SpectralPoint<T>) -> Result<Complex<T>>
    where
        F: Fn(&SpectralPoint<T>) -> Result<Complex<T>>,
    {
        let mut out = a(lambda)?;
        for (j, &lam) in lambda.coords().iter().enumerate() {
            let arg = lam - re_c(self.datum().rho_data().rho_j[j] - T::one());
            out = out * cgamma(arg)?;
        }
        Ok(out)
    }

    /// Gamma-variant kernel B(l) = b(l) prod_j 1/Gamma(l_j - rho_j + 1).
    pub fn big_b(&self, lambda: &SpectralPoint<T>) -> Result<Complex<T>> {
        let mut out = self.b_eval(lambda)?;
        for (j, &lam) in lambda.coords().iter().enumerate() {
            let arg = lam - re_c(self.datum().rho_data().rho_j[j] - T::one());
            out = out / cgamma(arg)?;
        }
        Ok(out)
    }

    /// Cosine-variant weight A~(l) = a(l) prod_j Gamma(l_j - rho_j + 1)/cos(pi(l_j - rho_j)/2).
    pub fn big_a_tilde_weight<F>(&self, a: &F, lambda: &SpectralPoint<T>) -> Result<Complex<T>>
    where
        F: Fn(&SpectralPoint<T>) -> Result<Complex<T>>,
    {
        let mut out = a(lambda)?;
        let half_pi = T::PI() / cast::<T>(2.0);
        for (j, &lam) in lambda.coords().iter().enumerate() {
            let shift = lam - re_c(self.datum().rho_data().rho_j[j]);
            out = out * cgamma(shift + re_c(T::one()))? / (shift * half_pi).cos();
        }
        Ok(out)
    }

    /// Cosine-variant kernel B~(l) = b(l) prod_j cos(pi(l_j - rho_j)/2)/Gamma(l_j - rho_j + 1).
    pub fn big_b_tilde(&self, lambda: &SpectralPoint<T>) -> Result<Complex<T>> {
        let mut out = self.b_eval(lambda)?;
        let half_pi = T::PI() / cast::<T>(2.0);
        for (j, &lam) in lambda.coords().iter().enumerate() {
            let shift = lam - re_c(self.datum().rho_data().rho_j[j]);
            out = out * (shift * half_pi).cos() / cgamma(shift + re_c(T::one()))?;
        }
        Ok(out)
    }
}
