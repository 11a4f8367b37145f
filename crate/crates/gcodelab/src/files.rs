//! Group and code JSON files.
//!
//! Group: `{"name", "order", "table", "labels"}`. Code: `{"group", "p",
//! "basis"}`, where `group` is a spec string or an embedded group object
//! and `basis` is the canonical reduced basis. Both loaders re-validate:
//! group tables are re-audited and code bases must span a right ideal.

use crate::error::{Error, Result};
use crate::groups::parse_group;
use gcodelab_core::{Fp, GCode, Group, GroupAlgebra, RowBasis};
use serde::{Deserialize, Serialize};
use std::fs;
use std::path::Path;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    pub name: String,
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    pub labels: Vec<String>,
}

impl GroupFile {
    pub fn from_group(g: &Group) -> Self {
        GroupFile {
            name: g.name().to_string(),
            order: g.order(),
            table: g.table_rows(),
            labels: g.labels().to_vec(),
        }
    }

    pub fn into_group(self) -> Result<Group> {
        if self.order != self.table.len() {
            return Err(Error::Usage(format!(
                "group file declares order {} but the table has {} rows",
                self.order,
                self.table.len()
            )));
        }
        Ok(Group::from_table(
            self.name,
            &self.table,
            Some(self.labels),
        )?)
    }

    pub fn read(path: &Path) -> Result<Self> {
        read_json(path)
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        write_json(path, self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupRef {
    Spec(String),
    Table(GroupFile),
}

impl GroupRef {
    pub fn resolve(&self) -> Result<Group> {
        match self {
            GroupRef::Spec(s) => parse_group(s),
            GroupRef::Table(t) => t.clone().into_group(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeFile {
    pub group: GroupRef,
    pub p: u32,
    pub basis: Vec<Vec<u32>>,
}

impl CodeFile {
    /// Describes `code`; `spec` is stored instead of the full table when given.
    pub fn from_code(code: &GCode<'_>, spec: Option<&str>) -> Self {
        let alg = code.algebra();
        CodeFile {
            group: match spec {
                Some(s) => GroupRef::Spec(s.to_string()),
                None => GroupRef::Table(GroupFile::from_group(alg.group())),
            },
            p: alg.field().p(),
            basis: code.basis().rows().map(<[u32]>::to_vec).collect(),
        }
    }

    pub fn group(&self) -> Result<Group> {
        self.group.resolve()
    }

    /// Rebuilds the code over `group`, which must be the resolved group of
    /// this file.
    pub fn to_code<'g>(&self, group: &'g Group) -> Result<GCode<'g>> {
        let field = Fp::new(self.p)?;
        let alg = GroupAlgebra::new(group, field);
        let n = group.order();
        if let Some(row) = self.basis.iter().find(|r| r.len() != n) {
            return Err(Error::Usage(format!(
                "basis row has length {} but the group has order {n}",
                row.len()
            )));
        }
        if let Some(&x) = self.basis.iter().flatten().find(|&&x| x >= self.p) {
            return Err(Error::Usage(format!(
                "basis entry {x} is not a residue mod {}",
                self.p
            )));
        }
        let span = RowBasis::span(field, n, &self.basis)?;
        if span.dim() != self.basis.len() {
            return Err(Error::Usage("basis rows are linearly dependent".into()));
        }
        Ok(GCode::from_basis(alg, span)?)
    }

    pub fn read(path: &Path) -> Result<Self> {
        read_json(path)
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        write_json(path, self)
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(serde_json::from_str(&text)?)
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    fs::write(path, text).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}
