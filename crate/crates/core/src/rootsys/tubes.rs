//! Tube domains around the imaginary axis and the Hardy domain.
//!
//! All domains are open: boundary points classify as outside.

use crate::error::{Error, Result};
use crate::scalar::{cast, Real};

use super::{RootDatum, SpectralPoint};

/// Domain selector for membership tests.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TubeKind<T> {
    /// |Re lambda_beta| < delta rho~_beta for every unmultipliable positive beta.
    TDelta(T),
    /// |Re lambda_j| < delta rho_j for every coordinate.
    TPrime(T),
    /// Re lambda_j < delta rho_j for every coordinate.
    TSecond(T),
    /// |Re lambda_beta| < 1 (m_{beta/2}/2 even) resp. 1/2 (odd).
    TSigmaM,
    /// Shrunk variant: bounds 1 - eta resp. 1/2 - eta, 0 <= eta < 1/2.
    TSigmaMEta(T),
    /// Hardy domain: Re lambda_beta > -delta rho~_beta for every beta.
    HDelta(T),
}

fn check_delta<T: Real>(delta: T) -> Result<()> {
    if delta > T::zero() && delta <= T::one() {
        Ok(())
    } else {
        Err(Error::InvalidDomainParameter(format!(
            "delta = {:?} outside (0, 1]",
            delta.to_f64()
        )))
    }
}

pub(super) fn membership<T: Real>(
    datum: &RootDatum<T>,
    lambda: &SpectralPoint<T>,
    kind: TubeKind<T>,
) -> Result<bool> {
    datum.check_rank(lambda)?;
    match kind {
        TubeKind::TDelta(delta) => {
            check_delta(delta)?;
            for (pos, &i) in datum.unmultipliable_positive().iter().enumerate() {
                let v = datum.lambda_sub_pos(lambda, i);
                if !(v.re.abs() < delta * datum.rho_data().rho_tilde[pos]) {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        TubeKind::TPrime(delta) => {
            check_delta(delta)?;
            for (j, lam) in lambda.coords().iter().enumerate() {
                if !(lam.re.abs() < delta * datum.rho_data().rho_j[j]) {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        TubeKind::TSecond(delta) => {
            check_delta(delta)?;
            for (j, lam) in lambda.coords().iter().enumerate() {
                if !(lam.re < delta * datum.rho_data().rho_j[j]) {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        TubeKind::TSigmaM => sigma_m(datum, lambda, T::zero()),
        TubeKind::TSigmaMEta(eta) => {
            if !(eta >= T::zero() && eta < cast::<T>(0.5)) {
                return Err(Error::InvalidDomainParameter(format!(
                    "eta = {:?} outside [0, 1/2)",
                    eta.to_f64()
                )));
            }
            sigma_m(datum, lambda, eta)
        }
        TubeKind::HDelta(delta) => {
            check_delta(delta)?;
            for (pos, &i) in datum.unmultipliable_positive().iter().enumerate() {
                let v = datum.lambda_sub_pos(lambda, i);
                if !(v.re > -delta * datum.rho_data().rho_tilde[pos]) {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

fn sigma_m<T: Real>(datum: &RootDatum<T>, lambda: &SpectralPoint<T>, eta: T) -> Result<bool> {
    for (pos, &i) in datum.unmultipliable_positive().iter().enumerate() {
        let (m_half, _) = datum.mult_pair(pos);
        let even = (m_half / 2) % 2 == 0;
        let bound = if even {
            T::one() - eta
        } else {
            cast::<T>(0.5) - eta
        };
        let v = datum.lambda_sub_pos(lambda, i);
        if !(v.re.abs() < bound) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_root_system, Family, Multiplicities};
    use num_complex::Complex64;

    fn h3() -> RootDatum<f64> {
        build_root_system(Family::A, 1, &Multiplicities::all(2)).unwrap()
    }

    #[test]
    fn h3_t1_examples() {
        let d = h3();
        let inside = SpectralPoint::new(vec![Complex64::new(0.5, 3.0)]);
        let outside = SpectralPoint::new(vec![Complex64::new(1.2, 0.0)]);
        assert!(d.tube_membership(&inside, TubeKind::TDelta(1.0)).unwrap());
        assert!(!d.tube_membership(&outside, TubeKind::TDelta(1.0)).unwrap());
        // boundary counts as outside
        let boundary = SpectralPoint::new(vec![Complex64::new(1.0, 0.0)]);
        assert!(!d.tube_membership(&boundary, TubeKind::TDelta(1.0)).unwrap());
    }

    #[test]
    fn invalid_parameters() {
        let d = h3();
        let p = SpectralPoint::zero(1);
        assert!(d.tube_membership(&p, TubeKind::TDelta(0.0)).is_err());
        assert!(d.tube_membership(&p, TubeKind::TDelta(1.5)).is_err());
        assert!(d.tube_membership(&p, TubeKind::TSigmaMEta(0.5)).is_err());
        assert!(d.tube_membership(&p, TubeKind::TSigmaMEta(-0.1)).is_err());
    }

    #[test]
    fn sigma_m_parity_bounds() {
        // CH2 has m_{beta/2}/2 = 1 odd: bound 1/2.
        let ch2 = build_root_system::<f64>(Family::BC, 1, &Multiplicities::short_long(2, 1)).unwrap();
        let p = SpectralPoint::new(vec![Complex64::new(0.6, 0.0)]);
        assert!(!ch2.tube_membership(&p, TubeKind::TSigmaM).unwrap());
        let q = SpectralPoint::new(vec![Complex64::new(0.4, 0.0)]);
        assert!(ch2.tube_membership(&q, TubeKind::TSigmaM).unwrap());
        // H3 has m_{beta/2}/2 = 0 even: bound 1.
        let d = h3();
        assert!(d.tube_membership(&p, TubeKind::TSigmaM).unwrap());
        // eta = 0 agrees with TSigmaM
        assert_eq!(
            d.tube_membership(&p, TubeKind::TSigmaM).unwrap(),
            d.tube_membership(&p, TubeKind::TSigmaMEta(0.0)).unwrap()
        );
    }

    #[test]
    fn hardy_domain() {
        let d = h3();
        let inside = SpectralPoint::new(vec![Complex64::new(-0.9, 2.0)]);
        let outside = SpectralPoint::new(vec![Complex64::new(-1.0, 0.0)]);
        assert!(d.tube_membership(&inside, TubeKind::HDelta(1.0)).unwrap());
        assert!(!d.tube_membership(&outside, TubeKind::HDelta(1.0)).unwrap());
    }
}
