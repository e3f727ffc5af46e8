//! Restricted root systems with multiplicities: omega-coordinates, Weyl
//! groups, rho-data, dominant weights, and tube-domain predicates.
//!
//! A [`RootDatum`] is immutable after construction and every query is
//! read-only. All spectral data lives in the omega-coordinate chart: a
//! point lambda is the vector of its coefficients in the basis dual to the
//! simple unmultipliable roots.

mod family;
mod tubes;
mod weyl;

pub mod catalog;

pub use family::{realize, Family, LengthClass};
pub use tubes::TubeKind;
pub use weyl::{generate_closure, invert_dense, solve_dense, CoordMat, WeylGroup};

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{cast, structural_tol, Real};

/// Multiplicity assignment by root-length class.
///
/// `all` is shorthand for every class of the family; otherwise the classes
/// present in the realization must each be named (`short`/`medium`/`long`).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Multiplicities {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub all: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub short: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub medium: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub long: Option<u32>,
}

impl Multiplicities {
    pub fn all(m: u32) -> Self {
        Multiplicities {
            all: Some(m),
            ..Default::default()
        }
    }

    pub fn short_long(short: u32, long: u32) -> Self {
        Multiplicities {
            short: Some(short),
            long: Some(long),
            ..Default::default()
        }
    }
}

/// A spectral parameter in omega-coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralPoint<T>(pub Vec<Complex<T>>);

impl<T: Real> SpectralPoint<T> {
    pub fn new(coords: Vec<Complex<T>>) -> Self {
        SpectralPoint(coords)
    }

    pub fn from_real(coords: &[T]) -> Self {
        SpectralPoint(coords.iter().map(|&x| Complex::new(x, T::zero())).collect())
    }

    pub fn zero(rank: usize) -> Self {
        SpectralPoint(vec![Complex::new(T::zero(), T::zero()); rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Complex<T>] {
        &self.0
    }

    pub fn re(&self) -> Vec<T> {
        self.0.iter().map(|z| z.re).collect()
    }

    pub fn im(&self) -> Vec<T> {
        self.0.iter().map(|z| z.im).collect()
    }

    /// Coordinate 1-norm of the real part.
    pub fn one_norm_re(&self) -> T {
        self.0
            .iter()
            .fold(T::zero(), |acc, z| acc + z.re.abs())
    }

    /// Coordinate 1-norm of the imaginary part.
    pub fn one_norm_im(&self) -> T {
        self.0
            .iter()
            .fold(T::zero(), |acc, z| acc + z.im.abs())
    }
}

/// One positive root, fully preprocessed for coordinate work.
#[derive(Debug, Clone)]
pub struct RootInfo<T> {
    /// Coefficients of the root in the omega-basis.
    pub coords: Vec<T>,
    /// Functional f with lambda_alpha = sum_j f_j lambda_j.
    pub functional: Vec<T>,
    /// Squared length in the ambient realization.
    pub norm_sq: T,
    /// Multiplicity m_alpha.
    pub mult: u32,
    /// Whether 2 alpha is not a root.
    pub unmultipliable: bool,
    /// Index of alpha/2 among the positive roots, when it is one.
    pub half: Option<usize>,
    /// Length class in the family realization.
    pub class: LengthClass,
}

/// Constants attached to rho.
#[derive(Debug, Clone)]
pub struct RhoData<T> {
    /// rho in omega-coordinates.
    pub coords: Vec<T>,
    /// rho_j = coordinate j of rho = (m_{beta_j} + m_{beta_j/2}/2) / 2.
    pub rho_j: Vec<T>,
    /// rho~_beta for every positive unmultipliable root (indexed like
    /// `RootDatum::unmult_pos`).
    pub rho_tilde: Vec<T>,
    /// Omega = max_j ||omega_j||.
    pub omega_max: T,
    /// c1 = 1/Omega (norm equivalence, lower constant).
    pub c1: T,
    /// c2 = sum_j ||beta_j||^{-1} (norm equivalence, upper constant).
    pub c2: T,
    /// M = sum over unmultipliable positive beta of (m_{beta/2} + m_beta).
    pub big_m: u32,
}

/// A restricted root system with multiplicities plus all cached chart data.
#[derive(Debug, Clone)]
pub struct RootDatum<T> {
    name: String,
    family: Family,
    rank: usize,
    roots: Vec<RootInfo<T>>,
    /// Indices (into `roots`) of the unmultipliable positive roots.
    unmult_pos: Vec<usize>,
    /// Indices of beta_1..beta_l (the unmultipliable simple basis).
    basis_star: Vec<usize>,
    /// Gram matrix of the omega basis and its inverse.
    gram: Vec<T>,
    gram_inv: Vec<T>,
    weyl: WeylGroup<T>,
    rho: RhoData<T>,
}

impl<T: Real> RootDatum<T> {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn positive_roots(&self) -> &[RootInfo<T>] {
        &self.roots
    }

    /// Indices of the unmultipliable positive roots into `positive_roots`.
    pub fn unmultipliable_positive(&self) -> &[usize] {
        &self.unmult_pos
    }

    /// Indices of beta_1..beta_l into `positive_roots`.
    pub fn basis_star(&self) -> &[usize] {
        &self.basis_star
    }

    pub fn weyl(&self) -> &WeylGroup<T> {
        &self.weyl
    }

    pub fn weyl_order(&self) -> usize {
        self.weyl.elements.len()
    }

    pub fn rho_data(&self) -> &RhoData<T> {
        &self.rho
    }

    pub fn rho(&self) -> SpectralPoint<T> {
        SpectralPoint::from_real(&self.rho.coords)
    }

    /// Multiplicity pair (m_{beta/2}, m_beta) for an unmultipliable
    /// positive root given by its index into `unmultipliable_positive`.
    pub fn mult_pair(&self, star_idx: usize) -> (u32, u32) {
        let root = &self.roots[self.unmult_pos[star_idx]];
        let half = root.half.map(|h| self.roots[h].mult).unwrap_or(0);
        (half, root.mult)
    }

    /// True when the restricted system is reduced with every multiplicity
    /// equal to 2 (the complex case has closed-form spherical functions).
    pub fn is_complex_case(&self) -> bool {
        self.roots
            .iter()
            .all(|r| r.unmultipliable && r.mult == 2)
    }

    pub fn check_rank(&self, point: &SpectralPoint<T>) -> Result<()> {
        if point.rank() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                got: point.rank(),
            });
        }
        Ok(())
    }

    /// lambda_alpha = <lambda, alpha> / <alpha, alpha> for a root in
    /// omega-coordinates.
    pub fn lambda_sub(&self, lambda: &SpectralPoint<T>, root_coords: &[T]) -> Result<Complex<T>> {
        self.check_rank(lambda)?;
        if root_coords.len() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                got: root_coords.len(),
            });
        }
        let norm_sq = self.pairing_real(root_coords, root_coords);
        if norm_sq <= T::epsilon() * cast::<T>(16.0) {
            return Err(Error::ZeroRoot);
        }
        let mut acc = Complex::new(T::zero(), T::zero());
        for (j, lam) in lambda.coords().iter().enumerate() {
            let mut g = T::zero();
            for (k, &rc) in root_coords.iter().enumerate() {
                g = g + self.gram[j * self.rank + k] * rc;
            }
            acc = acc + *lam * g;
        }
        Ok(acc / norm_sq)
    }

    /// lambda_alpha for a cached positive root (by index into
    /// `positive_roots`); a dot product against the cached functional.
    #[inline]
    pub fn lambda_sub_pos(&self, lambda: &SpectralPoint<T>, root_idx: usize) -> Complex<T> {
        let f = &self.roots[root_idx].functional;
        let mut acc = Complex::new(T::zero(), T::zero());
        for (j, lam) in lambda.coords().iter().enumerate() {
            acc = acc + *lam * f[j];
        }
        acc
    }

    /// <x, y> of two coordinate vectors through the Gram matrix.
    pub fn pairing_real(&self, x: &[T], y: &[T]) -> T {
        let mut acc = T::zero();
        for j in 0..self.rank {
            for k in 0..self.rank {
                acc = acc + x[j] * self.gram[j * self.rank + k] * y[k];
            }
        }
        acc
    }

    /// Norm of a real coordinate vector in a* (Gram norm).
    pub fn norm_re(&self, x: &[T]) -> T {
        self.pairing_real(x, x).max(T::zero()).sqrt()
    }

    /// Norm of a complex spectral point: sqrt(||Re||^2 + ||Im||^2).
    pub fn norm_spectral(&self, lambda: &SpectralPoint<T>) -> T {
        let re = lambda.re();
        let im = lambda.im();
        (self.pairing_real(&re, &re) + self.pairing_real(&im, &im))
            .max(T::zero())
            .sqrt()
    }

    /// Norm of a radial vector H given in omega-dual coordinates
    /// (lambda(H) = sum_j lambda_j H_j); uses the inverse Gram matrix.
    pub fn norm_radial(&self, h: &[T]) -> T {
        let mut acc = T::zero();
        for j in 0..self.rank {
            for k in 0..self.rank {
                acc = acc + h[j] * self.gram_inv[j * self.rank + k] * h[k];
            }
        }
        acc.max(T::zero()).sqrt()
    }

    /// Apply a Weyl element (by index) to a spectral point.
    pub fn weyl_apply(&self, w: usize, lambda: &SpectralPoint<T>) -> SpectralPoint<T> {
        SpectralPoint(self.weyl.elements[w].apply_complex(lambda.coords()))
    }

    /// The Weyl orbit with duplicates removed at tolerance 1e-12.
    pub fn weyl_orbit(&self, lambda: &SpectralPoint<T>) -> Result<Vec<SpectralPoint<T>>> {
        self.check_rank(lambda)?;
        let tol = structural_tol::<T>();
        let mut orbit: Vec<SpectralPoint<T>> = Vec::new();
        for w in 0..self.weyl.elements.len() {
            let moved = self.weyl_apply(w, lambda);
            let dup = orbit.iter().any(|p| {
                p.coords()
                    .iter()
                    .zip(moved.coords())
                    .all(|(a, b)| (*a - *b).norm() <= tol)
            });
            if !dup {
                orbit.push(moved);
            }
        }
        Ok(orbit)
    }

    /// All dominant weights with height at most `max_height`, graded by
    /// height and with higher leading coordinates first within a grade.
    pub fn dominant_weights(&self, max_height: u32) -> Vec<DominantWeight> {
        let mut out = Vec::new();
        for h in 0..=max_height {
            let mut level = Vec::new();
            enumerate_compositions(self.rank, h, &mut vec![0; self.rank], 0, &mut level);
            level.sort_by(|a, b| b.cmp(a));
            out.extend(level.into_iter().map(DominantWeight::new));
        }
        out
    }

    /// mu + rho as a spectral point.
    pub fn shift_by_rho(&self, mu: &DominantWeight) -> SpectralPoint<T> {
        SpectralPoint(
            mu.coords()
                .iter()
                .zip(self.rho.coords.iter())
                .map(|(&m, &r)| Complex::new(cast::<T>(m as f64) + r, T::zero()))
                .collect(),
        )
    }

    /// Tube-domain and Hardy-domain membership (strict inequalities;
    /// boundary points classify as outside).
    pub fn tube_membership(&self, lambda: &SpectralPoint<T>, kind: TubeKind<T>) -> Result<bool> {
        tubes::membership(self, lambda, kind)
    }

    /// Norm in a* of a dominant weight.
    pub fn weight_norm(&self, mu: &DominantWeight) -> T {
        let coords: Vec<T> = mu.coords().iter().map(|&m| cast::<T>(m as f64)).collect();
        self.norm_re(&coords)
    }
}

fn enumerate_compositions(
    rank: usize,
    total: u32,
    scratch: &mut Vec<u32>,
    pos: usize,
    out: &mut Vec<Vec<u32>>,
) {
    if pos + 1 == rank {
        scratch[pos] = total;
        out.push(scratch.clone());
        return;
    }
    for v in 0..=total {
        scratch[pos] = v;
        enumerate_compositions(rank, total - v, scratch, pos + 1, out);
    }
}

/// A dominant restricted weight in omega-coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DominantWeight(Vec<u32>);

impl DominantWeight {
    pub fn new(coords: Vec<u32>) -> Self {
        DominantWeight(coords)
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn height(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn factorial_f64(&self) -> f64 {
        self.0
            .iter()
            .map(|&m| (1..=m as u64).product::<u64>() as f64)
            .product()
    }
}

/// Build a root system from family data and per-class multiplicities.
pub fn build_root_system<T: Real>(
    family: Family,
    rank: usize,
    mults: &Multiplicities,
) -> Result<RootDatum<T>> {
    build_named(format!("{family}{rank}"), family, rank, mults)
}

pub(crate) fn build_named<T: Real>(
    name: String,
    family: Family,
    rank: usize,
    mults: &Multiplicities,
) -> Result<RootDatum<T>> {
    let real = realize::<T>(family, rank)?;

    // Resolve the class -> multiplicity map, rejecting classes foreign to
    // the family. A declared half-root multiplicity with odd value is a
    // parity violation; any other foreign class is a W-invariance problem.
    let mut class_mult: Vec<(LengthClass, u32)> = Vec::new();
    if let Some(m) = mults.all {
        if mults.short.is_some() || mults.medium.is_some() || mults.long.is_some() {
            return Err(Error::NonInvariantMultiplicities(
                "`all` excludes the per-class fields".into(),
            ));
        }
        for &c in &real.classes {
            class_mult.push((c, m));
        }
    } else {
        let named = [
            (LengthClass::Short, mults.short),
            (LengthClass::Medium, mults.medium),
            (LengthClass::Long, mults.long),
        ];
        for (class, m) in named {
            match (real.classes.contains(&class), m) {
                (true, Some(m)) => class_mult.push((class, m)),
                (true, None) => {
                    return Err(Error::NonInvariantMultiplicities(format!(
                        "family {family}{rank} needs a multiplicity for its {class:?} class"
                    )))
                }
                (false, Some(m)) => {
                    // Declaring a multiplicity for a root-halving class the
                    // family does not have: odd values break the parity
                    // classification outright.
                    if class == LengthClass::Short && m % 2 == 1 {
                        return Err(Error::ParityViolation(format!(
                            "declared m_(beta/2) = {m} must be even"
                        )));
                    }
                    return Err(Error::NonInvariantMultiplicities(format!(
                        "family {family}{rank} has no {class:?} class"
                    )));
                }
                (false, None) => {}
            }
        }
    }
    let mult_of = |class: LengthClass| -> u32 {
        class_mult
            .iter()
            .find(|(c, _)| *c == class)
            .map(|(_, m)| *m)
            .expect("class resolved above")
    };

    let tol = structural_tol::<T>();
    let dim = real.ambient_dim;
    let dot = |x: &[T], y: &[T]| -> T {
        x.iter()
            .zip(y.iter())
            .fold(T::zero(), |acc, (a, b)| acc + *a * *b)
    };

    // Identify doubles/halves among the ambient positive roots.
    let n_pos = real.positive.len();
    let mut half_of: Vec<Option<usize>> = vec![None; n_pos];
    let mut unmultipliable = vec![true; n_pos];
    for i in 0..n_pos {
        for j in 0..n_pos {
            if i == j {
                continue;
            }
            let double: Vec<T> = real.positive[j]
                .vector
                .iter()
                .map(|&x| x * cast::<T>(2.0))
                .collect();
            let same = real.positive[i]
                .vector
                .iter()
                .zip(double.iter())
                .all(|(a, b)| (*a - *b).abs() <= tol);
            if same {
                // i = 2 j
                half_of[i] = Some(j);
                unmultipliable[j] = false;
            }
        }
    }

    // Parity constraints.
    for i in 0..n_pos {
        if !unmultipliable[i] {
            continue;
        }
        let m_beta = mult_of(real.positive[i].class);
        if let Some(h) = half_of[i] {
            let m_half = mult_of(real.positive[h].class);
            if m_half % 2 == 1 {
                return Err(Error::ParityViolation(format!(
                    "m_(beta/2) = {m_half} must be even"
                )));
            }
            if m_half != 0 && m_beta % 2 == 0 {
                return Err(Error::ParityViolation(format!(
                    "m_beta = {m_beta} must be odd when m_(beta/2) = {m_half} is nonzero"
                )));
            }
        }
    }

    // beta_j: the simple root or its double.
    let mut basis_star = Vec::with_capacity(rank);
    for &s in &real.simple {
        if unmultipliable[s] {
            basis_star.push(s);
        } else {
            let d = (0..n_pos)
                .find(|&i| half_of[i] == Some(s))
                .ok_or_else(|| Error::InvariantFailure("missing double of a simple root".into()))?;
            basis_star.push(d);
        }
    }

    // Solve for the omega basis inside the span of the beta_j.
    // omega_j = sum_m coef_m beta_m with <omega_j, beta_k> = delta_jk |beta_k|^2.
    let beta_amb: Vec<Vec<T>> = basis_star
        .iter()
        .map(|&i| real.positive[i].vector.clone())
        .collect();
    let mut gram_beta = vec![T::zero(); rank * rank];
    for k in 0..rank {
        for m in 0..rank {
            gram_beta[k * rank + m] = dot(&beta_amb[m], &beta_amb[k]);
        }
    }
    let mut omega_amb: Vec<Vec<T>> = Vec::with_capacity(rank);
    for j in 0..rank {
        let mut rhs = vec![T::zero(); rank];
        rhs[j] = dot(&beta_amb[j], &beta_amb[j]);
        let coef = solve_dense(&gram_beta, &rhs, rank)?;
        let mut v = vec![T::zero(); dim];
        for (m, c) in coef.iter().enumerate() {
            for d in 0..dim {
                v[d] = v[d] + *c * beta_amb[m][d];
            }
        }
        omega_amb.push(v);
    }

    // Duality residual check: (omega_j)_{beta_k} = delta_jk.
    for j in 0..rank {
        for k in 0..rank {
            let val = dot(&omega_amb[j], &beta_amb[k]) / dot(&beta_amb[k], &beta_amb[k]);
            let target = if j == k { T::one() } else { T::zero() };
            if (val - target).abs() > tol {
                return Err(Error::InvariantFailure(format!(
                    "omega/beta duality violated at ({j},{k})"
                )));
            }
        }
    }

    // Gram matrix of the omega basis and its inverse.
    let mut gram = vec![T::zero(); rank * rank];
    for j in 0..rank {
        for k in 0..rank {
            gram[j * rank + k] = dot(&omega_amb[j], &omega_amb[k]);
        }
    }
    let gram_inv = invert_dense(&gram, rank)?;

    // Preprocess every positive root.
    let mut roots = Vec::with_capacity(n_pos);
    for i in 0..n_pos {
        let amb = &real.positive[i].vector;
        let norm_sq = dot(amb, amb);
        let coords: Vec<T> = (0..rank)
            .map(|j| dot(amb, &beta_amb[j]) / dot(&beta_amb[j], &beta_amb[j]))
            .collect();
        let functional: Vec<T> = (0..rank).map(|j| dot(&omega_amb[j], amb) / norm_sq).collect();
        roots.push(RootInfo {
            coords,
            functional,
            norm_sq,
            mult: mult_of(real.positive[i].class),
            unmultipliable: unmultipliable[i],
            half: half_of[i],
            class: real.positive[i].class,
        });
    }
    let unmult_pos: Vec<usize> = (0..n_pos).filter(|&i| unmultipliable[i]).collect();

    // Weyl group from the simple-star reflections, in coordinates:
    // s_beta (lambda) = lambda - 2 lambda_beta * beta.
    let generators: Vec<CoordMat<T>> = basis_star
        .iter()
        .map(|&bi| {
            let mut m = CoordMat::identity(rank);
            for p in 0..rank {
                for q in 0..rank {
                    m.data[p * rank + q] = m.data[p * rank + q]
                        - cast::<T>(2.0) * roots[bi].coords[p] * roots[bi].functional[q];
                }
            }
            m
        })
        .collect();
    let elements = generate_closure(&generators, rank, real.weyl_order, tol)?;
    let dets: Vec<T> = elements.iter().map(|m| m.det().round()).collect();

    // rho and its constants.
    let mut rho_coords = vec![T::zero(); rank];
    for r in &roots {
        for j in 0..rank {
            rho_coords[j] = rho_coords[j] + cast::<T>(r.mult as f64 / 2.0) * r.coords[j];
        }
    }

    // Longest element: maps the positive system onto its negative.
    let mut w0 = None;
    'outer: for (wi, m) in elements.iter().enumerate() {
        for r in &roots {
            let moved = m.apply_real(&r.coords);
            let is_neg_root = roots.iter().any(|s| {
                moved
                    .iter()
                    .zip(s.coords.iter())
                    .all(|(a, b)| (*a + *b).abs() <= tol)
            });
            if !is_neg_root {
                continue 'outer;
            }
        }
        w0 = Some(wi);
        break;
    }
    let w0 = w0.ok_or_else(|| Error::InvariantFailure("no longest element found".into()))?;
    let w0rho = elements[w0].apply_real(&rho_coords);
    if w0rho
        .iter()
        .zip(rho_coords.iter())
        .any(|(a, b)| (*a + *b).abs() > tol)
    {
        return Err(Error::InvariantFailure("w0 rho != -rho".into()));
    }

    let mut rho_j = Vec::with_capacity(rank);
    for (j, &bi) in basis_star.iter().enumerate() {
        let m_beta = roots[bi].mult;
        let m_half = roots[bi].half.map(|h| roots[h].mult).unwrap_or(0);
        let expect = cast::<T>(m_beta as f64 + m_half as f64 / 2.0) / cast::<T>(2.0);
        if (rho_coords[j] - expect).abs() > tol {
            return Err(Error::InvariantFailure(format!(
                "rho_{j} = {:?} differs from (m_beta + m_beta/2 / 2)/2 = {:?}",
                rho_coords[j].to_f64(),
                expect.to_f64()
            )));
        }
        rho_j.push(rho_coords[j]);
    }

    let rho_tilde: Vec<T> = unmult_pos
        .iter()
        .map(|&i| {
            let m_beta = roots[i].mult;
            let m_half = roots[i].half.map(|h| roots[h].mult).unwrap_or(0);
            cast::<T>(m_beta as f64 + m_half as f64 / 2.0) / cast::<T>(2.0)
        })
        .collect();

    let omega_max = (0..rank)
        .map(|j| gram[j * rank + j].sqrt())
        .fold(T::zero(), |a, b| a.max(b));
    let c2 = basis_star
        .iter()
        .map(|&bi| T::one() / roots[bi].norm_sq.sqrt())
        .fold(T::zero(), |a, b| a + b);
    let big_m: u32 = unmult_pos
        .iter()
        .map(|&i| roots[i].mult + roots[i].half.map(|h| roots[h].mult).unwrap_or(0))
        .sum();

    let rho = RhoData {
        coords: rho_coords,
        rho_j,
        rho_tilde,
        omega_max,
        c1: T::one() / omega_max,
        c2,
        big_m,
    };

    Ok(RootDatum {
        name,
        family,
        rank,
        roots,
        unmult_pos,
        basis_star,
        gram,
        gram_inv,
        weyl: WeylGroup {
            elements,
            dets,
            w0,
        },
        rho,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn a2_complex() -> RootDatum<f64> {
        build_root_system(Family::A, 2, &Multiplicities::all(2)).unwrap()
    }

    #[test]
    fn a2_structure() {
        let d = a2_complex();
        assert_eq!(d.weyl_order(), 6);
        assert_eq!(d.unmultipliable_positive().len(), 3);
        assert_eq!(d.rho_data().rho_j, vec![1.0, 1.0]);
    }

    #[test]
    fn bc1_structure() {
        let d = build_root_system::<f64>(Family::BC, 1, &Multiplicities::short_long(2, 1)).unwrap();
        assert_eq!(d.positive_roots().len(), 2);
        assert_eq!(d.unmultipliable_positive().len(), 1);
        let (mh, mb) = d.mult_pair(0);
        assert_eq!((mh, mb), (2, 1));
        // rho~_beta = (1 + 2/2)/2 = 1
        assert_eq!(d.rho_data().rho_tilde, vec![1.0]);
    }

    #[test]
    fn parity_violation_detected() {
        // A1 with m_beta = 2 but a declared m_(beta/2) = 3.
        let m = Multiplicities {
            short: Some(3),
            long: Some(2),
            ..Default::default()
        };
        let e = build_root_system::<f64>(Family::A, 1, &m).unwrap_err();
        assert!(matches!(e, Error::ParityViolation(_)), "{e}");
    }

    #[test]
    fn bc_even_full_multiplicity_rejected() {
        let e =
            build_root_system::<f64>(Family::BC, 1, &Multiplicities::short_long(2, 2)).unwrap_err();
        assert!(matches!(e, Error::ParityViolation(_)));
    }

    #[test]
    fn lambda_sub_on_omega_basis() {
        let d = a2_complex();
        for j in 0..2 {
            let mut coords = vec![Complex64::new(0.0, 0.0); 2];
            coords[j] = Complex64::new(1.0, 0.0);
            let lam = SpectralPoint::new(coords);
            for k in 0..2 {
                let beta_k = &d.positive_roots()[d.basis_star()[k]].coords.clone();
                let v = d.lambda_sub(&lam, beta_k).unwrap();
                let expect = if j == k { 1.0 } else { 0.0 };
                assert!((v.re - expect).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn lambda_sub_rho_highest_root() {
        // A2 complex, alpha = beta1 + beta2: rho_alpha = 2.
        let d = a2_complex();
        let rho = d.rho();
        let b1 = d.positive_roots()[d.basis_star()[0]].coords.clone();
        let b2 = d.positive_roots()[d.basis_star()[1]].coords.clone();
        let sum: Vec<f64> = b1.iter().zip(&b2).map(|(a, b)| a + b).collect();
        let v = d.lambda_sub(&rho, &sum).unwrap();
        assert!((v.re - 2.0).abs() < 1e-12, "{v}");
    }

    #[test]
    fn lambda_sub_halving() {
        // 2 lambda_alpha = lambda_{alpha/2}.
        let d = build_root_system::<f64>(Family::BC, 1, &Multiplicities::short_long(2, 1)).unwrap();
        let lam = SpectralPoint::new(vec![Complex64::new(0.83, -0.31)]);
        let beta = d.positive_roots()[d.basis_star()[0]].coords.clone();
        let half: Vec<f64> = beta.iter().map(|x| x / 2.0).collect();
        let v_beta = d.lambda_sub(&lam, &beta).unwrap();
        let v_half = d.lambda_sub(&lam, &half).unwrap();
        assert!((v_half - 2.0 * v_beta).norm() < 1e-13);
    }

    #[test]
    fn zero_root_rejected() {
        let d = a2_complex();
        let lam = SpectralPoint::new(vec![Complex64::new(1.0, 0.0); 2]);
        assert!(matches!(
            d.lambda_sub(&lam, &[0.0, 0.0]),
            Err(Error::ZeroRoot)
        ));
    }

    #[test]
    fn weyl_orbit_sizes() {
        let d = a2_complex();
        // lambda = 0 -> {0}
        let orbit = d.weyl_orbit(&SpectralPoint::zero(2)).unwrap();
        assert_eq!(orbit.len(), 1);
        // regular point rho -> full orbit
        let orbit = d.weyl_orbit(&d.rho()).unwrap();
        assert_eq!(orbit.len(), 6);
    }

    #[test]
    fn rank_one_orbit_is_sign_pair() {
        let d = build_root_system::<f64>(Family::A, 1, &Multiplicities::all(2)).unwrap();
        let lam = SpectralPoint::new(vec![Complex64::new(0.37, 0.0)]);
        let orbit = d.weyl_orbit(&lam).unwrap();
        assert_eq!(orbit.len(), 2);
        let vals: Vec<f64> = orbit.iter().map(|p| p.coords()[0].re).collect();
        assert!(vals.contains(&0.37));
        assert!(vals.iter().any(|v| (v + 0.37).abs() < 1e-14));
    }

    #[test]
    fn dominant_weight_enumeration() {
        let d1 = build_root_system::<f64>(Family::A, 1, &Multiplicities::all(1)).unwrap();
        let ws = d1.dominant_weights(3);
        let heights: Vec<u32> = ws.iter().map(|w| w.coords()[0]).collect();
        assert_eq!(heights, vec![0, 1, 2, 3]);

        let d2 = a2_complex();
        let ws = d2.dominant_weights(1);
        let coords: Vec<Vec<u32>> = ws.iter().map(|w| w.coords().to_vec()).collect();
        assert_eq!(coords, vec![vec![0, 0], vec![1, 0], vec![0, 1]]);
        assert_eq!(d2.dominant_weights(2).len(), 6);
    }

    #[test]
    fn w0_negates_rho() {
        for datum in [
            a2_complex(),
            build_root_system::<f64>(Family::B, 2, &Multiplicities::all(2)).unwrap(),
        ] {
            let w0 = datum.weyl().w0;
            let moved = datum.weyl_apply(w0, &datum.rho());
            for (a, b) in moved.coords().iter().zip(datum.rho().coords()) {
                assert!((a + b).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn b2_weyl_order() {
        let d = build_root_system::<f64>(Family::B, 2, &Multiplicities::all(2)).unwrap();
        assert_eq!(d.weyl_order(), 8);
        assert_eq!(d.unmultipliable_positive().len(), 4);
    }

    #[test]
    fn g2_builds() {
        let d = build_root_system::<f64>(Family::G2, 2, &Multiplicities::all(2)).unwrap();
        assert_eq!(d.weyl_order(), 12);
        assert_eq!(d.positive_roots().len(), 6);
        assert!(d.is_complex_case());
    }

    #[test]
    fn f32_instantiation_smoke() {
        let d = build_root_system::<f32>(Family::A, 1, &Multiplicities::all(2)).unwrap();
        assert_eq!(d.weyl_order(), 2);
        assert!((d.rho_data().rho_j[0] - 1.0f32).abs() < 1e-6);
    }
}
