//! Quadrature primitives: composite Gauss-Legendre on vertical lines,
//! circle-contour residues, and a tanh-sinh rule for endpoint-singular
//! integrals on (0, 1).
//!
//! Vertical-line integrals are iterated one axis at a time, inner axis
//! last in index order, and each axis contributes the complex differential
//! `d lambda_j = i d nu_j`. Summation order is fixed, so results are
//! bit-reproducible for a fixed configuration.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{cast, im_c, is_finite_c, Real};

/// Gauss-Legendre nodes and weights on [-1, 1], by Newton iteration.
pub fn gauss_legendre<T: Real>(n: usize) -> (Vec<T>, Vec<T>) {
    assert!(n >= 2);
    let mut nodes = vec![T::zero(); n];
    let mut weights = vec![T::zero(); n];
    let nf = cast::<T>(n as f64);
    for i in 0..n {
        // Chebyshev-like initial guess.
        let mut x = (T::PI() * (cast::<T>(i as f64) + cast::<T>(0.75))
            / (nf + cast::<T>(0.5)))
        .cos();
        let mut dp = T::zero();
        for _ in 0..100 {
            // Legendre P_n(x) and its derivative by recurrence.
            let mut p0 = T::one();
            let mut p1 = x;
            for k in 2..=n {
                let kf = cast::<T>(k as f64);
                let p2 = ((cast::<T>(2.0) * kf - T::one()) * x * p1 - (kf - T::one()) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = nf * (x * p1 - p0) / (x * x - T::one());
            let dx = p1 / dp;
            x = x - dx;
            if dx.abs() <= T::epsilon() * (T::one() + x.abs()) {
                break;
            }
        }
        nodes[i] = x;
        weights[i] = cast::<T>(2.0) / ((T::one() - x * x) * dp * dp);
    }
    (nodes, weights)
}

/// Composite Gauss-Legendre rule on [-L, L] for one vertical axis.
#[derive(Debug, Clone)]
pub struct LineRule<T> {
    /// Offsets along the imaginary direction.
    pub points: Vec<T>,
    /// Matching weights (real line measure).
    pub weights: Vec<T>,
    /// Half-width of the truncated line.
    pub halfwidth: T,
}

impl<T: Real> LineRule<T> {
    /// `panels` panels of `nodes_per_panel` Gauss-Legendre nodes covering [-L, L].
    pub fn new(halfwidth: T, panels: usize, nodes_per_panel: usize) -> Self {
        let (xs, ws) = gauss_legendre::<T>(nodes_per_panel);
        let mut points = Vec::with_capacity(panels * nodes_per_panel);
        let mut weights = Vec::with_capacity(panels * nodes_per_panel);
        let width = cast::<T>(2.0) * halfwidth / cast::<T>(panels as f64);
        for p in 0..panels {
            let a = -halfwidth + width * cast::<T>(p as f64);
            let mid = a + width / cast::<T>(2.0);
            let half = width / cast::<T>(2.0);
            for (x, w) in xs.iter().zip(ws.iter()) {
                points.push(mid + half * *x);
                weights.push(half * *w);
            }
        }
        LineRule {
            points,
            weights,
            halfwidth,
        }
    }
}

/// Truncation/tail policy for vertical-line quadrature.
#[derive(Debug, Clone, Copy)]
pub struct QuadratureConfig<T> {
    /// Truncation half-width L per axis (units of Im lambda_j).
    pub halfwidth: T,
    /// Nodes per axis (>= 16), split into panels of 16 internally.
    pub nodes_per_axis: usize,
    /// The certified tail estimate must come in below this.
    pub tail_bound_target: T,
}

impl<T: Real> QuadratureConfig<T> {
    pub fn new(halfwidth: T, nodes_per_axis: usize, tail_bound_target: T) -> Self {
        assert!(halfwidth > T::zero());
        assert!(nodes_per_axis >= 16);
        QuadratureConfig {
            halfwidth,
            nodes_per_axis,
            tail_bound_target,
        }
    }

    pub(crate) fn rule(&self) -> LineRule<T> {
        let panels = (self.nodes_per_axis + 15) / 16;
        LineRule::new(self.halfwidth, panels, 16)
    }
}

/// Exponential-with-polynomial majorant `scale (1+s)^degree e^{rate s}`
/// for the integrand along each axis; `rate < 0` is the decay exponent
/// (A - pi for Hardy-class integrands against the sine kernel).
#[derive(Debug, Clone, Copy)]
pub struct DecayCertificate<T> {
    pub scale: T,
    pub degree: usize,
    pub rate: T,
}

impl<T: Real> DecayCertificate<T> {
    pub fn bound(&self, s: T) -> T {
        let one_plus = T::one() + s.abs();
        self.scale * one_plus.powi(self.degree as i32) * (self.rate * s.abs()).exp()
    }

    /// Bound on `int_L^inf (1+s)^deg e^{rate s} ds`, doubled for both tails.
    pub fn tail(&self, halfwidth: T) -> T {
        if self.rate >= T::zero() {
            return T::infinity();
        }
        // int_L^inf (1+s)^d e^{-r s} ds = bound(L)/scale' * sum_k (d)_k ((1+L) r)^{-k} / r
        let r = -self.rate;
        let base = (T::one() + halfwidth) * r;
        let mut factor = T::one() / r;
        let mut numer = T::one();
        for k in 1..=self.degree {
            numer = numer * cast::<T>((self.degree - k + 1) as f64);
            factor = factor + numer / base.powi(k as i32) / r;
        }
        cast::<T>(2.0) * self.bound(halfwidth) * factor
    }
}

/// Iterated vertical-line integral of `f` over the product of lines
/// `{sigma_j + i [-L, L]}`, inner-to-outer in index order, with the
/// complex differential `i d nu` on every axis.
///
/// Before integrating, samples |f| on the truncation boundary of each axis
/// and rejects the run if a sample exceeds the certificate bound or if the
/// certified tail misses the configured target.
pub fn line_integral<T, F>(
    f: &F,
    offsets: &[T],
    cfg: &QuadratureConfig<T>,
    cert: Option<&DecayCertificate<T>>,
) -> Result<Complex<T>>
where
    T: Real,
    F: Fn(&[Complex<T>]) -> Result<Complex<T>>,
{
    let rank = offsets.len();
    assert!(rank >= 1);
    let rule = cfg.rule();

    if let Some(cert) = cert {
        check_boundary(f, offsets, &rule, cert)?;
        let tail = cert.tail(cfg.halfwidth)
            * (cast::<T>(2.0) * cfg.halfwidth).powi(rank as i32 - 1)
            * cast::<T>(rank as f64);
        if !(tail <= cfg.tail_bound_target) {
            return Err(Error::TailTooLarge {
                tail: tail.to_f64().unwrap_or(f64::NAN),
                target: cfg.tail_bound_target.to_f64().unwrap_or(f64::NAN),
            });
        }
    }

    let mut point = vec![Complex::new(T::zero(), T::zero()); rank];
    let value = nested_integral(f, offsets, &rule, 0, &mut point)?;
    if !is_finite_c(value) {
        return Err(Error::NonFinite("line_integral result"));
    }
    Ok(value)
}

fn nested_integral<T, F>(
    f: &F,
    offsets: &[T],
    rule: &LineRule<T>,
    axis: usize,
    point: &mut [Complex<T>],
) -> Result<Complex<T>>
where
    T: Real,
    F: Fn(&[Complex<T>]) -> Result<Complex<T>>,
{
    let rank = offsets.len();
    let mut acc = Complex::new(T::zero(), T::zero());
    for (s, w) in rule.points.iter().zip(rule.weights.iter()) {
        point[axis] = Complex::new(offsets[axis], *s);
        let inner = if axis + 1 == rank {
            f(point)?
        } else {
            nested_integral(f, offsets, rule, axis + 1, point)?
        };
        acc = acc + inner * *w;
    }
    // d lambda = i d nu on this axis.
    Ok(acc * im_c(T::one()))
}

fn check_boundary<T, F>(
    f: &F,
    offsets: &[T],
    rule: &LineRule<T>,
    cert: &DecayCertificate<T>,
) -> Result<()>
where
    T: Real,
    F: Fn(&[Complex<T>]) -> Result<Complex<T>>,
{
    let rank = offsets.len();
    let bound = cert.bound(rule.halfwidth) * cast::<T>(1.0 + 1e-6);
    // A few transverse positions per boundary face.
    let fractions = [0.0, 0.37, -0.53, 0.81];
    for axis in 0..rank {
        for &sgn in &[T::one(), -T::one()] {
            for &fr in fractions.iter().take(if rank == 1 { 1 } else { fractions.len() }) {
                let mut point: Vec<Complex<T>> = offsets
                    .iter()
                    .map(|&o| Complex::new(o, cast::<T>(fr) * rule.halfwidth))
                    .collect();
                point[axis] = Complex::new(offsets[axis], sgn * rule.halfwidth);
                let v = f(&point)?;
                let mag = v.norm();
                if !(mag <= bound) {
                    return Err(Error::DecayCertificate {
                        axis,
                        sampled: mag.to_f64().unwrap_or(f64::NAN),
                        bound: bound.to_f64().unwrap_or(f64::NAN),
                    });
                }
            }
        }
    }
    Ok(())
}

/// `(1/2 pi i) \oint f` over the circle of the given radius around `z0`,
/// by the trapezoid rule (exponentially convergent for analytic `f`).
///
/// Evaluates at two radii (r and r/2) and reports disagreement, which
/// signals another pole inside the disc.
pub fn residue_at<T, F>(f: &F, z0: Complex<T>, radius: T, nodes: usize) -> Result<Complex<T>>
where
    T: Real,
    F: Fn(Complex<T>) -> Result<Complex<T>>,
{
    let n = nodes.max(64);
    let full = circle_residue(f, z0, radius, n)?;
    let half = circle_residue(f, z0, radius / cast::<T>(2.0), n)?;
    let scale = T::one().max(full.norm());
    let diff = (full - half).norm() / scale;
    if diff > cast::<T>(1e-9) {
        return Err(Error::ResidueRadius(diff.to_f64().unwrap_or(f64::NAN)));
    }
    Ok(half)
}

fn circle_residue<T, F>(f: &F, z0: Complex<T>, radius: T, n: usize) -> Result<Complex<T>>
where
    T: Real,
    F: Fn(Complex<T>) -> Result<Complex<T>>,
{
    // (1/2 pi i) \oint f dz = (r/n) sum_k f(z0 + r e^{i t_k}) e^{i t_k}.
    let mut acc = Complex::new(T::zero(), T::zero());
    for k in 0..n {
        let t = cast::<T>(2.0) * T::PI() * cast::<T>(k as f64) / cast::<T>(n as f64);
        let e = Complex::new(t.cos(), t.sin());
        let v = f(z0 + e * radius)?;
        acc = acc + v * e;
    }
    let out = acc * radius / cast::<T>(n as f64);
    if !is_finite_c(out) {
        return Err(Error::NonFinite("residue_at"));
    }
    Ok(out)
}

/// Tanh-sinh rule over (0, 1) for integrands with integrable endpoint
/// singularities. The integrand receives `(u, 1-u)` with both factors
/// computed cancellation-free, so endpoint powers stay accurate.
/// Refines the step until two levels agree.
pub fn tanh_sinh_01<T, F>(f: &F, rel_tol: T) -> Result<Complex<T>>
where
    T: Real,
    F: Fn(T, T) -> Result<Complex<T>>,
{
    let mut h = cast::<T>(0.25);
    let mut prev: Option<Complex<T>> = None;
    for level in 0..6 {
        let val = tanh_sinh_level(f, h)?;
        if let Some(p) = prev {
            let scale = T::one().max(val.norm());
            if (val - p).norm() <= rel_tol * scale {
                return Ok(val);
            }
        }
        prev = Some(val);
        h = h / cast::<T>(2.0);
        if level == 5 {
            return Err(Error::NonConvergence("tanh_sinh_01", 6));
        }
    }
    unreachable!()
}

fn tanh_sinh_level<T, F>(f: &F, h: T) -> Result<Complex<T>>
where
    T: Real,
    F: Fn(T, T) -> Result<Complex<T>>,
{
    let half_pi = T::PI() / cast::<T>(2.0);
    // Run nodes until the endpoint distance underflows.
    let max_s = cast::<T>(0.4) * (-T::min_positive_value().ln());
    let kmax = ((max_s / half_pi).asinh() / h)
        .to_f64()
        .unwrap_or(40.0)
        .ceil() as i64;
    let mut acc = Complex::new(T::zero(), T::zero());
    for k in -kmax..=kmax {
        let tk = h * cast::<T>(k as f64);
        let s = half_pi * tk.sinh();
        let ch = s.cosh();
        // u = 1/(1+e^{-2s}), 1-u = 1/(1+e^{2s}): stable at both ends.
        let two_s = cast::<T>(2.0) * s;
        let u = T::one() / (T::one() + (-two_s).exp());
        let omu = T::one() / (T::one() + two_s.exp());
        if u <= T::zero() || omu <= T::zero() {
            continue;
        }
        let w = cast::<T>(0.5) * half_pi * tk.cosh() / (ch * ch);
        if w * h < T::min_positive_value() * cast::<T>(1e4) {
            continue;
        }
        let v = f(u, omu)?;
        acc = acc + v * (w * h);
    }
    if !is_finite_c(acc) {
        return Err(Error::NonFinite("tanh_sinh_01"));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn gauss_legendre_polynomial_exactness() {
        // n nodes integrate degree 2n-1 exactly: x^7 on [-1,1] -> 0, x^6 -> 2/7.
        let (xs, ws) = gauss_legendre::<f64>(4);
        let i7: f64 = xs.iter().zip(&ws).map(|(x, w)| w * x.powi(7)).sum();
        let i6: f64 = xs.iter().zip(&ws).map(|(x, w)| w * x.powi(6)).sum();
        assert!(i7.abs() < 1e-15);
        assert!((i6 - 2.0 / 7.0).abs() < 1e-14);
    }

    #[test]
    fn gaussian_along_line() {
        // Integrand with e^{-t^2} profile along the vertical line at 0:
        // g(lambda) = e^{lambda^2}; raw result i sqrt(pi), i-normalized sqrt(pi).
        let cfg = QuadratureConfig::new(8.0, 160, 1e-10);
        let v = line_integral(
            &|p: &[Complex64]| Ok((p[0] * p[0]).exp()),
            &[0.0],
            &cfg,
            None,
        )
        .unwrap();
        let normalized = v / Complex64::i();
        assert!(
            (normalized.re - std::f64::consts::PI.sqrt()).abs() < 1e-9,
            "{normalized}"
        );
        assert!(normalized.im.abs() < 1e-12);
    }

    #[test]
    fn zero_integrand() {
        let cfg = QuadratureConfig::new(4.0, 64, 1e-10);
        let v = line_integral(
            &|_: &[Complex64]| Ok(Complex64::new(0.0, 0.0)),
            &[0.0, 0.0],
            &cfg,
            None,
        )
        .unwrap();
        assert_eq!(v.norm(), 0.0);
    }

    #[test]
    fn classical_mellin_line() {
        // (1/2 pi i) int (-pi/sin(pi s)) e^{-s} x^s ds at x = 1, sigma = -0.5
        // equals 1/(1+e^{-1}) (geometric series closed form).
        let cfg = QuadratureConfig::new(10.0, 320, 1e-10);
        let two_pi_i = Complex64::new(0.0, 2.0 * std::f64::consts::PI);
        let v = line_integral(
            &|p: &[Complex64]| {
                let s = p[0];
                let pi = std::f64::consts::PI;
                Ok(-pi / (pi * s).sin() * (-s).exp() / two_pi_i)
            },
            &[-0.5],
            &cfg,
            Some(&DecayCertificate {
                scale: 30.0,
                degree: 0,
                rate: -std::f64::consts::PI,
            }),
        )
        .unwrap();
        let expect = 1.0 / (1.0 + (-1.0f64).exp());
        assert!((v.re - expect).abs() < 1e-9, "{v} vs {expect}");
        assert!(v.im.abs() < 1e-10);
    }

    #[test]
    fn sigma_independence() {
        // Entire integrand decaying in both directions: results at two
        // offsets agree (Cauchy).
        let cfg = QuadratureConfig::new(9.0, 288, 1e-10);
        let f = |p: &[Complex64]| Ok((p[0] * p[0] - Complex64::new(0.3, 0.0) * p[0]).exp());
        let a = line_integral(&f, &[-0.4], &cfg, None).unwrap();
        let b = line_integral(&f, &[0.7], &cfg, None).unwrap();
        assert!((a - b).norm() < 1e-9, "{a} {b}");
    }

    #[test]
    fn decay_certificate_violation_detected() {
        let cfg = QuadratureConfig::new(6.0, 96, 1e-8);
        let cert = DecayCertificate {
            scale: 1e-6,
            degree: 0,
            rate: -1.0,
        };
        let r = line_integral(&|_: &[Complex64]| Ok(Complex64::new(1.0, 0.0)), &[0.0], &cfg, Some(&cert));
        assert!(matches!(r, Err(Error::DecayCertificate { .. })));
    }

    #[test]
    fn residue_simple_pole() {
        let v = residue_at(&|z: Complex64| Ok(1.0 / z), Complex64::new(0.0, 0.0), 0.5, 64).unwrap();
        assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-12, "{v}");
    }

    #[test]
    fn residue_of_reciprocal_sine() {
        // 1/sin(pi z) at z = 1: residue -1/pi (derivative of sin at pi).
        let v = residue_at(
            &|z: Complex64| Ok(1.0 / (std::f64::consts::PI * z).sin()),
            Complex64::new(1.0, 0.0),
            0.3,
            64,
        )
        .unwrap();
        assert!((v.re + 1.0 / std::f64::consts::PI).abs() < 1e-11, "{v}");
    }

    #[test]
    fn residue_spec_two_radius_value() {
        // (i/2) z^2 / sin(pi (z-1)) at z = 1 -> i/(2 pi).
        let v = residue_at(
            &|z: Complex64| {
                Ok(Complex64::i() / 2.0 * z * z / (std::f64::consts::PI * (z - 1.0)).sin())
            },
            Complex64::new(1.0, 0.0),
            0.4,
            96,
        )
        .unwrap();
        let expect = Complex64::i() / (2.0 * std::f64::consts::PI);
        assert!((v - expect).norm() < 1e-11, "{v} vs {expect}");
    }

    #[test]
    fn residue_detects_nearby_pole() {
        // Poles at 0 and 0.2: radius 0.5 encloses both, r/2 only one.
        let f = |z: Complex64| Ok(1.0 / z + 1.0 / (z - 0.2));
        let r = residue_at(&f, Complex64::new(0.0, 0.0), 0.5, 64);
        assert!(matches!(r, Err(Error::ResidueRadius(_))));
    }

    #[test]
    fn tanh_sinh_beta_integral() {
        // int_0^1 u^{-1/2} (1-u)^{-1/2} du = pi.
        let v = tanh_sinh_01(
            &|u: f64, omu: f64| Ok(Complex64::new(1.0 / (u * omu).sqrt(), 0.0)),
            1e-13,
        )
        .unwrap();
        assert!((v.re - std::f64::consts::PI).abs() < 1e-11, "{v}");
    }
}
