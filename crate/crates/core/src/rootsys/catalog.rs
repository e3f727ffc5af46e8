//! Curated catalog of symmetric-space root data.
//!
//! Entries carry only the family, rank, and multiplicities; everything
//! else is recomputed and revalidated at load time. The default catalog is
//! embedded in the crate, and an external file with the same schema can be
//! loaded instead.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;

use super::{build_named, Family, Multiplicities, RootDatum};

/// Embedded default catalog (see `data/catalog.toml` for the schema).
pub const BUILTIN_CATALOG: &str = include_str!("../../data/catalog.toml");

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogEntry {
    pub name: String,
    pub family: String,
    pub rank: usize,
    pub provenance: String,
    pub multiplicities: Multiplicities,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Catalog {
    pub schema: u32,
    #[serde(rename = "space")]
    pub spaces: Vec<CatalogEntry>,
}

impl Catalog {
    /// Parse a catalog document, rejecting unknown keys.
    pub fn parse(text: &str) -> Result<Self> {
        let cat: Catalog = toml::from_str(text).map_err(|e| Error::Catalog(e.to_string()))?;
        if cat.schema != 1 {
            return Err(Error::Catalog(format!(
                "unsupported schema version {}",
                cat.schema
            )));
        }
        let mut seen = std::collections::HashSet::new();
        for s in &cat.spaces {
            if !seen.insert(s.name.clone()) {
                return Err(Error::Catalog(format!("duplicate space `{}`", s.name)));
            }
        }
        Ok(cat)
    }

    /// The embedded catalog.
    pub fn builtin() -> Self {
        Self::parse(BUILTIN_CATALOG).expect("embedded catalog must parse")
    }

    pub fn names(&self) -> Vec<&str> {
        self.spaces.iter().map(|s| s.name.as_str()).collect()
    }

    pub fn entry(&self, name: &str) -> Result<&CatalogEntry> {
        self.spaces
            .iter()
            .find(|s| s.name == name)
            .ok_or_else(|| Error::UnknownSpace(name.to_string()))
    }

    /// Build and fully validate the named space.
    pub fn build<T: Real>(&self, name: &str) -> Result<RootDatum<T>> {
        let e = self.entry(name)?;
        let family: Family = e.family.parse()?;
        build_named(e.name.clone(), family, e.rank, &e.multiplicities)
    }
}

/// Build a space from the embedded catalog.
pub fn build_catalog_space<T: Real>(name: &str) -> Result<RootDatum<T>> {
    Catalog::builtin().build(name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_parses_and_builds() {
        let cat = Catalog::builtin();
        assert!(cat.spaces.len() >= 6);
        for name in cat.names() {
            let datum = cat.build::<f64>(name).unwrap();
            assert_eq!(datum.name(), name);
        }
    }

    #[test]
    fn catalog_rho_values() {
        // H2: rho_1 = 1/2; H3: rho_1 = 1; CH2: rho~ = 1.
        assert_eq!(
            build_catalog_space::<f64>("H2").unwrap().rho_data().rho_j,
            vec![0.5]
        );
        assert_eq!(
            build_catalog_space::<f64>("H3").unwrap().rho_data().rho_j,
            vec![1.0]
        );
        assert_eq!(
            build_catalog_space::<f64>("CH2")
                .unwrap()
                .rho_data()
                .rho_tilde,
            vec![1.0]
        );
    }

    #[test]
    fn unknown_space_rejected() {
        assert!(matches!(
            build_catalog_space::<f64>("H99"),
            Err(Error::UnknownSpace(_))
        ));
    }

    #[test]
    fn unknown_keys_rejected() {
        let text = r#"
schema = 1
[[space]]
name = "X"
family = "A"
rank = 1
provenance = "test"
extra_key = 3
[space.multiplicities]
all = 2
"#;
        assert!(matches!(Catalog::parse(text), Err(Error::Catalog(_))));
    }

    #[test]
    fn multiplicity_cases_covered() {
        // The four singularity cases: (a) m even, no half; (b) m odd, no
        // half; (c) m odd, m_half/2 even; (d) m odd, m_half/2 odd.
        let cat = Catalog::builtin();
        let mut cases = [false; 4];
        for name in cat.names() {
            let d = cat.build::<f64>(name).unwrap();
            for pos in 0..d.unmultipliable_positive().len() {
                let (mh, mb) = d.mult_pair(pos);
                let case = match (mb % 2, mh, (mh / 2) % 2) {
                    (0, 0, _) => 0,
                    (1, 0, _) => 1,
                    (1, _, 0) => 2,
                    (1, _, 1) => 3,
                    _ => unreachable!("parity validation rules this out"),
                };
                cases[case] = true;
            }
        }
        assert_eq!(cases, [true; 4]);
    }
}
