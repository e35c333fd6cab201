//! Text format for groups and named subgroups.
//!
//! ```text
//! # comment
//! degree 4
//! gen (1 2 3 4)
//! subgroup A
//! gen (1 3)(2 4)
//! end
//! ```

use std::path::Path;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{GroupRef, Limits, PermGroup};
use crate::perm::Permutation;
use crate::structure::SubgroupHandle;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupFile {
    pub degree: usize,
    pub generators: Vec<Permutation>,
    pub subgroups: Vec<(String, Vec<Permutation>)>,
}

/// A loaded group file: the group and its named subgroups, checked to lie inside it.
#[derive(Debug, Clone)]
pub struct LoadedGroup {
    pub group: GroupRef,
    pub subgroups: Vec<(String, SubgroupHandle)>,
}

impl LoadedGroup {
    pub fn subgroup(&self, name: &str) -> Result<&SubgroupHandle> {
        self.subgroups
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, s)| s)
            .ok_or_else(|| Error::Parse(format!("no subgroup named {name}")))
    }
}

impl GroupFile {
    pub fn parse(text: &str) -> Result<GroupFile> {
        let mut degree: Option<usize> = None;
        let mut generators = Vec::new();
        let mut subgroups: Vec<(String, Vec<Permutation>)> = Vec::new();
        let mut open: Option<(String, Vec<Permutation>)> = None;

        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| Error::Parse(format!("line {}: {}", lineno + 1, msg));
            let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let rest = rest.trim();
            match keyword {
                "degree" => {
                    if degree.is_some() {
                        return Err(err("degree given twice"));
                    }
                    let n: usize = rest.parse().map_err(|_| err("degree must be a positive integer"))?;
                    if n == 0 {
                        return Err(err("degree must be a positive integer"));
                    }
                    degree = Some(n);
                }
                "gen" => {
                    let n = degree.ok_or_else(|| err("gen before degree"))?;
                    let p = Permutation::parse(rest, n).map_err(|e| err(&e.to_string()))?;
                    match open.as_mut() {
                        Some((_, gens)) => gens.push(p),
                        None => generators.push(p),
                    }
                }
                "subgroup" => {
                    if open.is_some() {
                        return Err(err("nested subgroup block"));
                    }
                    if rest.is_empty() || rest.contains(char::is_whitespace) {
                        return Err(err("subgroup needs a single-word name"));
                    }
                    if subgroups.iter().any(|(n, _)| n == rest) {
                        return Err(err("duplicate subgroup name"));
                    }
                    open = Some((rest.to_string(), Vec::new()));
                }
                "end" => {
                    let block = open.take().ok_or_else(|| err("end without subgroup"))?;
                    subgroups.push(block);
                }
                other => return Err(err(&format!("unknown keyword {other:?}"))),
            }
        }
        if let Some((name, _)) = open {
            return Err(Error::Parse(format!("subgroup {name} is missing its end line")));
        }
        let degree = degree.ok_or_else(|| Error::Parse("missing degree line".into()))?;
        Ok(GroupFile {
            degree,
            generators,
            subgroups,
        })
    }

    pub fn read(path: &Path) -> Result<GroupFile> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {}", path.display(), e)))?;
        GroupFile::parse(&text)
    }

    pub fn load(&self, limits: Limits) -> Result<LoadedGroup> {
        let group: GroupRef = Arc::new(PermGroup::with_limits(self.degree, self.generators.clone(), limits)?);
        let subgroups = self
            .subgroups
            .iter()
            .map(|(name, gens)| {
                if let Some(p) = gens.iter().find(|p| !group.contains(p)) {
                    return Err(Error::Parse(format!(
                        "subgroup {name}: generator {p} is not in the group"
                    )));
                }
                Ok((name.clone(), SubgroupHandle::generated(&group, gens)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LoadedGroup { group, subgroups })
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("degree {}\n", self.degree);
        for g in &self.generators {
            s.push_str(&format!("gen {g}\n"));
        }
        for (name, gens) in &self.subgroups {
            s.push_str(&format!("subgroup {name}\n"));
            for g in gens {
                s.push_str(&format!("gen {g}\n"));
            }
            s.push_str("end\n");
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const C4: &str = "# cyclic of order 4\ndegree 4\ngen (1 2 3 4)\n\nsubgroup A\ngen (1 3)(2 4)\nend\n";

    #[test]
    fn parses_and_loads() {
        let f = GroupFile::parse(C4).unwrap();
        assert_eq!(f.degree, 4);
        assert_eq!(f.generators.len(), 1);
        assert_eq!(f.subgroups[0].0, "A");
        let g = f.load(Limits::default()).unwrap();
        assert_eq!(g.group.order(), 4);
        assert_eq!(g.subgroup("A").unwrap().order(), 2);
        assert!(g.subgroup("B").is_err());
    }

    #[test]
    fn text_round_trip() {
        let f = GroupFile::parse(C4).unwrap();
        assert_eq!(GroupFile::parse(&f.to_text()).unwrap(), f);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(GroupFile::parse("gen (1 2)\n").is_err());
        assert!(GroupFile::parse("degree 3\ngen (1 4)\n").is_err());
        assert!(GroupFile::parse("degree 3\nsubgroup A\ngen (1 2)\n").is_err());
        assert!(GroupFile::parse("degree 3\nend\n").is_err());
        assert!(GroupFile::parse("degree 3\nfoo\n").is_err());
        assert!(GroupFile::parse("").is_err());
        let outside = GroupFile::parse("degree 3\ngen (1 2 3)\nsubgroup A\ngen (1 2)\nend\n").unwrap();
        assert!(outside.load(Limits::default()).is_err());
    }
}
