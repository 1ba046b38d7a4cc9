//! External JSON formats: scalars as canonical "p/q" strings, matrices as
//! row-major nested string arrays, instance files, module spec files.

use std::path::Path;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::field::FieldConfig;
use crate::instances::ModuleSpec;
use crate::matrix::Matrix;
use crate::{Mat, Rat};

/// Canonical string form of a rational: lowest terms, "p" or "p/q".
pub fn rat_to_string(r: &Rat) -> String {
    r.to_string()
}

pub fn rat_from_str(s: &str) -> Result<Rat, Error> {
    Rat::from_str(s.trim())
        .map_err(|e| Error::InvalidInstance(format!("bad rational {s:?}: {e}")))
}

/// Serde adapter for scalar fields stored as canonical strings.
pub mod rat_string {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&rat_to_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        let s = String::deserialize(d)?;
        rat_from_str(&s).map_err(D::Error::custom)
    }
}

impl Serialize for Mat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = (0..self.rows())
            .map(|i| self.row(i).iter().map(rat_to_string).collect())
            .collect();
        rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Mat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows: Vec<Vec<String>> = Deserialize::deserialize(deserializer)?;
        if rows.is_empty() || rows[0].is_empty() {
            return Err(D::Error::custom("matrix must be nonempty"));
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(D::Error::custom("matrix rows have unequal lengths"));
        }
        let mut parsed = Vec::with_capacity(rows.len());
        for row in &rows {
            let mut out = Vec::with_capacity(cols);
            for cell in row {
                out.push(rat_from_str(cell).map_err(D::Error::custom)?);
            }
            parsed.push(out);
        }
        Ok(Matrix::from_rows(parsed))
    }
}

/// One evaluation-module factor in a spec or provenance block.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FactorSpec {
    pub d: usize,
    #[serde(with = "rat_string")]
    pub t: Rat,
}

/// How a generated instance was produced.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub kind: String,
    pub variant: String,
    pub factors: Vec<FactorSpec>,
}

/// The on-disk instance schema.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InstanceFile {
    #[serde(with = "rat_string")]
    pub q: Rat,
    pub d: usize,
    #[serde(with = "rat_string")]
    pub a: Rat,
    #[serde(with = "rat_string")]
    pub astar: Rat,
    #[serde(rename = "A")]
    pub a_matrix: Mat,
    #[serde(rename = "Astar")]
    pub astar_matrix: Mat,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
}

/// A loaded, validated instance.
#[derive(Clone, Debug)]
pub struct Instance {
    pub cfg: FieldConfig<Rat>,
    pub d: usize,
    pub a: Rat,
    pub astar: Rat,
    pub a_op: Mat,
    pub astar_op: Mat,
    pub provenance: Option<Provenance>,
}

impl InstanceFile {
    pub fn into_instance(self) -> Result<Instance, Error> {
        use num::Zero;
        let cfg = FieldConfig::new(self.q)?;
        if self.a.is_zero() || self.astar.is_zero() {
            return Err(Error::InvalidParameter("a and a* must be nonzero".into()));
        }
        if !self.a_matrix.is_square()
            || !self.astar_matrix.is_square()
            || self.a_matrix.rows() != self.astar_matrix.rows()
        {
            return Err(Error::InvalidInstance(
                "A and Astar must be square matrices of equal size".into(),
            ));
        }
        if self.d + 1 > self.a_matrix.rows() {
            return Err(Error::InvalidInstance(format!(
                "declared d = {} needs dimension at least {}, matrices are {}x{}",
                self.d,
                self.d + 1,
                self.a_matrix.rows(),
                self.a_matrix.cols()
            )));
        }
        Ok(Instance {
            cfg,
            d: self.d,
            a: self.a,
            astar: self.astar,
            a_op: self.a_matrix,
            astar_op: self.astar_matrix,
            provenance: self.provenance,
        })
    }
}

impl Instance {
    pub fn to_file(&self) -> InstanceFile {
        InstanceFile {
            q: self.cfg.q().clone(),
            d: self.d,
            a: self.a.clone(),
            astar: self.astar.clone(),
            a_matrix: self.a_op.clone(),
            astar_matrix: self.astar_op.clone(),
            provenance: self.provenance.clone(),
        }
    }
}

pub fn read_instance(path: &Path) -> Result<Instance, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInstance(format!("{}: {e}", path.display())))?;
    let file: InstanceFile = serde_json::from_str(&text)
        .map_err(|e| Error::InvalidInstance(format!("{}: {e}", path.display())))?;
    file.into_instance()
}

pub fn write_instance(path: &Path, instance: &Instance) -> Result<(), Error> {
    let text = serde_json::to_string_pretty(&instance.to_file())?;
    std::fs::write(path, text + "\n")?;
    Ok(())
}

/// The on-disk module spec schema.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModuleSpecFile {
    #[serde(with = "rat_string")]
    pub q: Rat,
    pub factors: Vec<FactorSpec>,
}

impl ModuleSpecFile {
    pub fn into_spec(self) -> Result<ModuleSpec<Rat>, Error> {
        let cfg = FieldConfig::new(self.q)?;
        ModuleSpec::new(
            self.factors.into_iter().map(|f| (f.d, f.t)).collect(),
            cfg,
        )
    }
}

impl ModuleSpec<Rat> {
    pub fn to_file(&self) -> ModuleSpecFile {
        ModuleSpecFile {
            q: self.cfg.q().clone(),
            factors: self
                .factors
                .iter()
                .map(|(d, t)| FactorSpec { d: *d, t: t.clone() })
                .collect(),
        }
    }
}
