//! The `.grp` text format: a `degree N` line followed by `gen <perm>` lines.
//! Permutations use cycle notation or a bracketed 1-based image array, and
//! `#` starts a comment.

use std::fmt;
use std::path::Path;

use crate::error::{Error, Result};
use crate::group::GroupHandle;
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrpFile {
    pub degree: usize,
    pub gens: Vec<Permutation>,
}

impl GrpFile {
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Self {
        GrpFile { degree, gens }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut degree = None;
        let mut gens = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let at = |e: Error| match e {
                Error::Parse(m) => Error::Parse(format!("line {}: {m}", lineno + 1)),
                other => other,
            };
            let (word, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            match word {
                "degree" => {
                    if degree.is_some() {
                        return Err(at(Error::Parse("degree given twice".into())));
                    }
                    let n: usize =
                        rest.trim().parse().map_err(|_| at(Error::Parse(format!("bad degree {:?}", rest.trim()))))?;
                    if n == 0 {
                        return Err(at(Error::Parse("degree must be positive".into())));
                    }
                    degree = Some(n);
                }
                "gen" => {
                    let n = degree.ok_or_else(|| at(Error::Parse("gen before degree".into())))?;
                    gens.push(Permutation::parse(rest, n).map_err(at)?);
                }
                other => return Err(at(Error::Parse(format!("unknown directive {other:?}")))),
            }
        }
        let degree = degree.ok_or_else(|| Error::Parse("missing degree line".into()))?;
        Ok(GrpFile { degree, gens })
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)?;
        Self::parse(&text).map_err(|e| match e {
            Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
            other => other,
        })
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_string())?;
        Ok(())
    }

    pub fn group(&self) -> GroupHandle {
        GroupHandle::with_degree(self.degree, self.gens.clone()).expect("degrees checked while parsing")
    }
}

impl From<&GroupHandle> for GrpFile {
    fn from(g: &GroupHandle) -> Self {
        GrpFile { degree: g.degree(), gens: g.generators().to_vec() }
    }
}

impl fmt::Display for GrpFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "degree {}", self.degree)?;
        for g in &self.gens {
            writeln!(f, "gen {g}")?;
        }
        Ok(())
    }
}

/// Reads a `.grp` file straight into a group.
pub fn read_group(path: impl AsRef<Path>) -> Result<GroupHandle> {
    Ok(GrpFile::read(path)?.group())
}
