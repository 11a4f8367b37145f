//! Textual group specifications.
//!
//! A spec is one of `cyclic:n`, `dihedral:m`, `symmetric:k`, `quaternion`
//! (or `q8`), `elemabelian:p,m`, `trivial`, a `*`-separated direct product
//! of those, or the path of a group JSON file.

use crate::error::{Error, Result};
use crate::files::GroupFile;
use gcodelab_core::Group;
use std::path::Path;

pub fn parse_group(spec: &str) -> Result<Group> {
    let spec = spec.trim();
    if Path::new(spec).is_file() {
        return GroupFile::read(Path::new(spec))?.into_group();
    }
    let mut factors = spec.split('*').map(|s| parse_factor(s.trim(), spec));
    let mut acc = factors.next().expect("split yields one item")?;
    for factor in factors {
        acc = Group::direct_product(&acc, &factor?)?;
    }
    Ok(acc)
}

fn parse_factor(factor: &str, spec: &str) -> Result<Group> {
    let bad = |reason: &str| Error::GroupSpec {
        spec: spec.to_string(),
        reason: reason.to_string(),
    };
    let (kind, args) = match factor.split_once(':') {
        Some((k, a)) => (k, Some(a)),
        None => (factor, None),
    };
    let nums: Vec<usize> = match args {
        Some(a) => a
            .split(',')
            .map(|x| {
                x.trim()
                    .parse()
                    .map_err(|_| bad("parameters must be integers"))
            })
            .collect::<Result<_>>()?,
        None => Vec::new(),
    };
    let group = match (kind.to_ascii_lowercase().as_str(), nums.as_slice()) {
        ("trivial", []) => Group::trivial(),
        ("cyclic", &[n]) => Group::cyclic(n)?,
        ("dihedral", &[m]) => Group::dihedral(m)?,
        ("symmetric", &[k]) => Group::symmetric(k)?,
        ("quaternion" | "q8", []) => Group::quaternion8(),
        ("elemabelian", &[p, m]) => Group::elementary_abelian(p, m)?,
        ("trivial" | "quaternion" | "q8", _) => return Err(bad("takes no parameters")),
        ("cyclic" | "dihedral" | "symmetric" | "elemabelian", _) => {
            return Err(bad("wrong number of parameters"))
        }
        _ => return Err(bad("unknown group family and no such file")),
    };
    Ok(group)
}
