//! Standard Euclidean realizations of the supported root-system families.
//!
//! Each family is realized with its usual ambient coordinates (long roots
//! of squared length 2 for the classical families). Every quantity the
//! library computes downstream is either scale-invariant or used
//! self-consistently with this normalization.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{cast, Real};

/// Supported family labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    BC,
    G2,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A => write!(f, "A"),
            Family::B => write!(f, "B"),
            Family::C => write!(f, "C"),
            Family::D => write!(f, "D"),
            Family::BC => write!(f, "BC"),
            Family::G2 => write!(f, "G2"),
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            "BC" | "bc" => Ok(Family::BC),
            "G2" | "g2" => Ok(Family::G2),
            other => Err(Error::UnsupportedFamily(other.to_string())),
        }
    }
}

/// Root-length class within a family realization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LengthClass {
    Short,
    Medium,
    Long,
}

/// One positive root of the ambient realization.
#[derive(Debug, Clone)]
pub struct AmbientRoot<T> {
    pub vector: Vec<T>,
    pub class: LengthClass,
}

/// Ambient realization: positive roots, indices of the simple ones, and
/// the ambient dimension.
#[derive(Debug, Clone)]
pub struct Realization<T> {
    pub ambient_dim: usize,
    pub positive: Vec<AmbientRoot<T>>,
    pub simple: Vec<usize>,
    pub weyl_order: u128,
    pub classes: Vec<LengthClass>,
}

fn basis_vec<T: Real>(dim: usize, entries: &[(usize, f64)]) -> Vec<T> {
    let mut v = vec![T::zero(); dim];
    for &(i, x) in entries {
        v[i] = cast::<T>(x);
    }
    v
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Realize the family at the given rank. Rank is capped at 4 (desk scale).
pub fn realize<T: Real>(family: Family, rank: usize) -> Result<Realization<T>> {
    if rank == 0 || rank > 4 {
        return Err(Error::UnsupportedFamily(format!(
            "{family} rank {rank} (supported ranks are 1..=4)"
        )));
    }
    match family {
        Family::A => {
            let dim = rank + 1;
            let mut positive = Vec::new();
            let mut simple = Vec::new();
            for i in 0..dim {
                for j in (i + 1)..dim {
                    if j == i + 1 {
                        simple.push(positive.len());
                    }
                    positive.push(AmbientRoot {
                        vector: basis_vec(dim, &[(i, 1.0), (j, -1.0)]),
                        class: LengthClass::Long,
                    });
                }
            }
            Ok(Realization {
                ambient_dim: dim,
                positive,
                simple,
                weyl_order: factorial(rank + 1),
                classes: vec![LengthClass::Long],
            })
        }
        Family::B => {
            if rank < 2 {
                return Err(Error::UnsupportedFamily("B needs rank >= 2".into()));
            }
            let dim = rank;
            let mut positive = Vec::new();
            let mut simple = Vec::new();
            for i in 0..rank {
                for j in (i + 1)..rank {
                    if j == i + 1 {
                        simple.push(positive.len());
                    }
                    positive.push(AmbientRoot {
                        vector: basis_vec(dim, &[(i, 1.0), (j, -1.0)]),
                        class: LengthClass::Long,
                    });
                    positive.push(AmbientRoot {
                        vector: basis_vec(dim, &[(i, 1.0), (j, 1.0)]),
                        class: LengthClass::Long,
                    });
                }
            }
            for i in 0..rank {
                if i == rank - 1 {
                    simple.push(positive.len());
                }
                positive.push(AmbientRoot {
                    vector: basis_vec(dim, &[(i, 1.0)]),
                    class: LengthClass::Short,
                });
            }
            Ok(Realization {
                ambient_dim: dim,
                positive,
                simple,
                weyl_order: (1u128 << rank) * factorial(rank),
                classes: vec![LengthClass::Short, LengthClass::Long],
            })
        }
        Family::C => {
            if rank < 2 {
                return Err(Error::UnsupportedFamily("C needs rank >= 2".into()));
            }
            let dim = rank;
            let mut positive = Vec::new();
            let mut simple = Vec::new();
            for i in 0..rank {
                for j in (i + 1)..rank {
                    if j == i + 1 {
                        simple.push(positive.len());
                    }
                    positive.push(AmbientRoot {
                        vector: basis_vec(dim, &[(i, 1.0), (j, -1.0)]),
                        class: LengthClass::Short,
                    });
                    positive.push(AmbientRoot {
                        vector: basis_vec(dim, &[(i, 1.0), (j, 1.0)]),
                        class: LengthClass::Short,
                    });
                }
            }
            for i in 0..rank {
                if i == rank - 1 {
                    simple.push(positive.len());
                }
                positive.push(AmbientRoot {
                    vector: basis_vec(dim, &[(i, 2.0)]),
                    class: LengthClass::Long,
                });
            }
            Ok(Realization {
                ambient_dim: dim,
                positive,
                simple,
                weyl_order: (1u128 << rank) * factorial(rank),
                classes: vec![LengthClass::Short, LengthClass::Long],
            })
        }
        Family::D => {
            if rank < 3 {
                return Err(Error::UnsupportedFamily(
                    "D needs rank >= 3 (D2 is reducible)".into(),
                ));
            }
            let dim = rank;
            let mut positive = Vec::new();
            let mut simple = Vec::new();
            for i in 0..rank {
                for j in (i + 1)..rank {
                    if j == i + 1 {
                        simple.push(positive.len());
                    }
                    positive.push(AmbientRoot {
                        vector: basis_vec(dim, &[(i, 1.0), (j, -1.0)]),
                        class: LengthClass::Long,
                    });
                    if i == rank - 2 && j == rank - 1 {
                        simple.push(positive.len());
                    }
                    positive.push(AmbientRoot {
                        vector: basis_vec(dim, &[(i, 1.0), (j, 1.0)]),
                        class: LengthClass::Long,
                    });
                }
            }
            Ok(Realization {
                ambient_dim: dim,
                positive,
                simple,
                weyl_order: (1u128 << (rank - 1)) * factorial(rank),
                classes: vec![LengthClass::Long],
            })
        }
        Family::BC => {
            let dim = rank;
            let mut positive = Vec::new();
            let mut simple = Vec::new();
            for i in 0..rank {
                for j in (i + 1)..rank {
                    if j == i + 1 {
                        simple.push(positive.len());
                    }
                    positive.push(AmbientRoot {
                        vector: basis_vec(dim, &[(i, 1.0), (j, -1.0)]),
                        class: LengthClass::Medium,
                    });
                    positive.push(AmbientRoot {
                        vector: basis_vec(dim, &[(i, 1.0), (j, 1.0)]),
                        class: LengthClass::Medium,
                    });
                }
            }
            for i in 0..rank {
                if i == rank - 1 {
                    simple.push(positive.len());
                }
                positive.push(AmbientRoot {
                    vector: basis_vec(dim, &[(i, 1.0)]),
                    class: LengthClass::Short,
                });
                positive.push(AmbientRoot {
                    vector: basis_vec(dim, &[(i, 2.0)]),
                    class: LengthClass::Long,
                });
            }
            let mut classes = vec![LengthClass::Short, LengthClass::Long];
            if rank >= 2 {
                classes.insert(1, LengthClass::Medium);
            }
            Ok(Realization {
                ambient_dim: dim,
                positive,
                simple,
                weyl_order: (1u128 << rank) * factorial(rank),
                classes,
            })
        }
        Family::G2 => {
            if rank != 2 {
                return Err(Error::UnsupportedFamily("G2 has rank 2".into()));
            }
            let s3 = 3.0f64.sqrt();
            let mk = |v: [f64; 2], class| AmbientRoot {
                vector: vec![cast::<T>(v[0]), cast::<T>(v[1])],
                class,
            };
            // Simple roots: alpha1 short = (1, 0); alpha2 long = (-3/2, sqrt3/2).
            let positive = vec![
                mk([1.0, 0.0], LengthClass::Short),
                mk([-1.5, s3 / 2.0], LengthClass::Long),
                mk([-0.5, s3 / 2.0], LengthClass::Short),
                mk([0.5, s3 / 2.0], LengthClass::Short),
                mk([1.5, s3 / 2.0], LengthClass::Long),
                mk([0.0, s3], LengthClass::Long),
            ];
            Ok(Realization {
                ambient_dim: 2,
                positive,
                simple: vec![0, 1],
                weyl_order: 12,
                classes: vec![LengthClass::Short, LengthClass::Long],
            })
        }
    }
}
