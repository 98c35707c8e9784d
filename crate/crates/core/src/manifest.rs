//! JSON manifests for point sets and rational functions.
//!
//! ```json
//! {"schema": 1, "p": 5, "d": 2, "role": "set", "data": [[0, 0], [1, 1]]}
//! {"schema": 1, "p": 3, "d": 1, "role": "function", "data": ["1/2", "0", "-3"]}
//! ```
//!
//! Function values are listed in lexicographic point order.

use std::path::Path;
use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ffvec::{FpVector, PointSet, PrimeModulus, Space};
use crate::fourier::RationalFunction;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "role", content = "data", rename_all = "lowercase")]
pub enum ManifestBody {
    Set(Vec<Vec<u64>>),
    Function(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub schema: u32,
    pub p: u64,
    pub d: usize,
    #[serde(flatten)]
    pub body: ManifestBody,
}

impl Manifest {
    pub fn from_set(set: &PointSet) -> Self {
        Manifest {
            schema: SCHEMA_VERSION,
            p: set.modulus().get(),
            d: set.dim(),
            body: ManifestBody::Set(set.iter().map(|x| x.coords().to_vec()).collect()),
        }
    }

    pub fn from_function(f: &RationalFunction) -> Self {
        let space = f.space();
        Manifest {
            schema: SCHEMA_VERSION,
            p: space.p(),
            d: space.dim(),
            body: ManifestBody::Function(f.values().iter().map(|v| v.to_string()).collect()),
        }
    }

    pub fn space(&self) -> Result<Space> {
        if self.schema != SCHEMA_VERSION {
            return Err(Error::Manifest(format!(
                "unsupported schema version {}",
                self.schema
            )));
        }
        Space::new(PrimeModulus::new(self.p)?, self.d)
    }

    pub fn to_set(&self) -> Result<PointSet> {
        let space = self.space()?;
        match &self.body {
            ManifestBody::Set(points) => {
                let pts = points
                    .iter()
                    .map(|c| {
                        if c.len() != self.d {
                            return Err(Error::Manifest(format!(
                                "point {c:?} does not have {} coordinates",
                                self.d
                            )));
                        }
                        FpVector::from_residues(space.modulus(), c.clone())
                    })
                    .collect::<Result<Vec<_>>>()?;
                PointSet::from_points(space, pts)
            }
            ManifestBody::Function(_) => Err(Error::Manifest("expected a set manifest".into())),
        }
    }

    /// Functions load as given; sets load as their indicator.
    pub fn to_function(&self) -> Result<RationalFunction> {
        let space = self.space()?;
        match &self.body {
            ManifestBody::Function(values) => {
                let parsed = values
                    .iter()
                    .map(|v| {
                        BigRational::from_str(v.trim())
                            .map_err(|_| Error::Manifest(format!("bad rational {v:?}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                RationalFunction::new(space, parsed)
            }
            ManifestBody::Set(_) => Ok(RationalFunction::indicator(&self.to_set()?)),
        }
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Manifest(format!("{}: {e}", path.display())))?;
        serde_json::from_str(&text)
            .map_err(|e| Error::Manifest(format!("{}: {e}", path.display())))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("manifest serialises")
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        std::fs::write(path, self.to_json() + "\n")
            .map_err(|e| Error::Manifest(format!("{}: {e}", path.display())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_round_trip() {
        let text = r#"{"schema": 1, "p": 5, "d": 2, "role": "set", "data": [[1, 1], [0, 0]]}"#;
        let m: Manifest = serde_json::from_str(text).unwrap();
        let set = m.to_set().unwrap();
        assert_eq!(set.len(), 2);
        let back = Manifest::from_set(&set);
        assert_eq!(back.body, ManifestBody::Set(vec![vec![0, 0], vec![1, 1]]));
        let again: Manifest = serde_json::from_str(&back.to_json()).unwrap();
        assert_eq!(again, back);
    }

    #[test]
    fn function_round_trip() {
        let text = r#"{"schema": 1, "p": 3, "d": 1, "role": "function", "data": ["1/2", "0", "-3"]}"#;
        let m: Manifest = serde_json::from_str(text).unwrap();
        let f = m.to_function().unwrap();
        assert_eq!(Manifest::from_function(&f), m);
    }

    #[test]
    fn rejects_bad_input() {
        let bad = |t: &str| serde_json::from_str::<Manifest>(t).unwrap();
        let m = bad(r#"{"schema": 1, "p": 5, "d": 2, "role": "set", "data": [[5, 0]]}"#);
        assert!(m.to_set().is_err());
        let m = bad(r#"{"schema": 1, "p": 5, "d": 2, "role": "set", "data": [[1]]}"#);
        assert!(m.to_set().is_err());
        let m = bad(r#"{"schema": 1, "p": 3, "d": 1, "role": "function", "data": ["1", "x", "0"]}"#);
        assert!(m.to_function().is_err());
        let m = bad(r#"{"schema": 1, "p": 3, "d": 1, "role": "function", "data": ["1"]}"#);
        assert!(m.to_function().is_err());
        let m = bad(r#"{"schema": 2, "p": 3, "d": 1, "role": "set", "data": []}"#);
        assert!(m.to_set().is_err());
        let m = bad(r#"{"schema": 1, "p": 4, "d": 1, "role": "set", "data": []}"#);
        assert_eq!(m.to_set(), Err(Error::NotPrime(4)));
    }
}
