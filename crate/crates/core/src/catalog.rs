//! Group specifiers (`mna:2,1,3`, `product:cyclic:2,q8`, …) and catalog
//! files listing groups with their expected ω.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::constructors::Builder;
use crate::error::{Error, Result};
use crate::format;
use crate::group::GroupTable;
use crate::perm::{self, Perm};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PermSource {
    File(PathBuf),
    /// Generators written inline, e.g. `perm:(1 2 3 4),(1 2)`.
    Inline(Vec<Perm>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    ElementaryAbelian { q: u64, beta: u32 },
    MinimalNonAbelianPq { p: u64, alpha: u32, q: u64 },
    Metacyclic { p: u64, m: u32, n: u32 },
    Quaternion8,
    Dihedral(usize),
    Product(Box<GroupSpec>, Box<GroupSpec>),
    CayleyFile(PathBuf),
    Permutations(PermSource),
}

fn parse_num<T: FromStr>(tok: &str, spec: &str) -> Result<T> {
    tok.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad number {:?} in {spec:?}", tok.trim())))
}

fn args<'a>(body: &'a str, arity: usize, keyword: &str, spec: &str) -> Result<Vec<&'a str>> {
    let parts: Vec<&str> = body.split(',').collect();
    if parts.len() != arity {
        return Err(Error::Parse(format!(
            "{keyword} expects {arity} argument(s), found {} in {spec:?}",
            parts.len()
        )));
    }
    Ok(parts)
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let spec = s.trim();
        if spec == "q8" {
            return Ok(GroupSpec::Quaternion8);
        }
        let (keyword, body) = spec
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("unknown group specifier {spec:?}")))?;
        match keyword {
            "cyclic" => {
                let a = args(body, 1, keyword, spec)?;
                Ok(GroupSpec::Cyclic(parse_num(a[0], spec)?))
            }
            "elemab" => {
                let a = args(body, 2, keyword, spec)?;
                Ok(GroupSpec::ElementaryAbelian { q: parse_num(a[0], spec)?, beta: parse_num(a[1], spec)? })
            }
            "mna" => {
                let a = args(body, 3, keyword, spec)?;
                Ok(GroupSpec::MinimalNonAbelianPq {
                    p: parse_num(a[0], spec)?,
                    alpha: parse_num(a[1], spec)?,
                    q: parse_num(a[2], spec)?,
                })
            }
            "metacyclic" => {
                let a = args(body, 3, keyword, spec)?;
                Ok(GroupSpec::Metacyclic {
                    p: parse_num(a[0], spec)?,
                    m: parse_num(a[1], spec)?,
                    n: parse_num(a[2], spec)?,
                })
            }
            "dihedral" => {
                let a = args(body, 1, keyword, spec)?;
                Ok(GroupSpec::Dihedral(parse_num(a[0], spec)?))
            }
            "product" => {
                // first comma at which both sides parse
                body.match_indices(',')
                    .find_map(|(i, _)| {
                        let left = body[..i].parse::<GroupSpec>().ok()?;
                        let right = body[i + 1..].parse::<GroupSpec>().ok()?;
                        Some(GroupSpec::Product(Box::new(left), Box::new(right)))
                    })
                    .ok_or_else(|| Error::Parse(format!("product needs two group specifiers in {spec:?}")))
            }
            "file" if !body.is_empty() => Ok(GroupSpec::CayleyFile(PathBuf::from(body))),
            "perm" if body.trim_start().starts_with('(') => {
                let gens = body.split(',').map(Perm::parse_cycles).collect::<Result<Vec<_>>>()?;
                Ok(GroupSpec::Permutations(PermSource::Inline(gens)))
            }
            "perm" if !body.is_empty() => Ok(GroupSpec::Permutations(PermSource::File(PathBuf::from(body)))),
            _ => Err(Error::Parse(format!("unknown group specifier {keyword:?} in {spec:?}"))),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::ElementaryAbelian { q, beta } => write!(f, "elemab:{q},{beta}"),
            GroupSpec::MinimalNonAbelianPq { p, alpha, q } => write!(f, "mna:{p},{alpha},{q}"),
            GroupSpec::Metacyclic { p, m, n } => write!(f, "metacyclic:{p},{m},{n}"),
            GroupSpec::Quaternion8 => write!(f, "q8"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupSpec::Product(a, b) => write!(f, "product:{a},{b}"),
            GroupSpec::CayleyFile(p) => write!(f, "file:{}", p.display()),
            GroupSpec::Permutations(PermSource::File(p)) => write!(f, "perm:{}", p.display()),
            GroupSpec::Permutations(PermSource::Inline(gens)) => {
                let g: Vec<String> = gens.iter().map(Perm::to_string).collect();
                write!(f, "perm:{}", g.join(","))
            }
        }
    }
}

impl GroupSpec {
    /// Builds the group; its name is this specifier's canonical text.
    pub fn build(&self, b: &Builder) -> Result<GroupTable> {
        let g = match self {
            GroupSpec::Cyclic(n) => b.cyclic(*n)?,
            GroupSpec::ElementaryAbelian { q, beta } => b.elementary_abelian(*q, *beta)?,
            GroupSpec::MinimalNonAbelianPq { p, alpha, q } => b.minimal_nonabelian_pq(*p, *alpha, *q)?,
            GroupSpec::Metacyclic { p, m, n } => b.metacyclic_minimal_p_group(*p, *m, *n)?,
            GroupSpec::Quaternion8 => b.quaternion8()?,
            GroupSpec::Dihedral(n) => b.dihedral(*n)?,
            GroupSpec::Product(x, y) => b.direct_product(&x.build(b)?, &y.build(b)?)?,
            GroupSpec::CayleyFile(path) => {
                let g = format::read_cayley(&std::fs::read_to_string(path)?)?;
                if g.order() > b.cap {
                    return Err(Error::OrderCapExceeded { order: g.order(), cap: b.cap });
                }
                g
            }
            GroupSpec::Permutations(src) => {
                let gens = match src {
                    PermSource::Inline(gens) => gens.clone(),
                    PermSource::File(path) => perm::parse_generator_file(&std::fs::read_to_string(path)?)?,
                };
                perm::from_permutation_generators(&gens, b.cap)?
            }
        };
        Ok(g.with_name(self.to_string()))
    }
}

/// Parses and builds a specifier in one step.
pub fn build_group(spec: &str, b: &Builder) -> Result<GroupTable> {
    spec.parse::<GroupSpec>()?.build(b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExpectedKind {
    PGroup,
    PqGroup,
    NegativeControl,
}

impl FromStr for ExpectedKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "p-group" => Ok(ExpectedKind::PGroup),
            "pq-group" => Ok(ExpectedKind::PqGroup),
            "negative-control" => Ok(ExpectedKind::NegativeControl),
            _ => Err(Error::Parse(format!("unknown kind {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub spec: GroupSpec,
    pub expected_omega: Option<usize>,
    pub expected_kind: ExpectedKind,
}

/// The groups checked by `verify` when no catalog file is given.
pub const BUILTIN_CATALOG: &str = "\
# name; spec; expected omega (or -); kind
S3; mna:2,1,3; 4; pq-group
A4; mna:3,1,2; 5; pq-group
Dic3; mna:2,2,3; 4; pq-group
F21; mna:3,1,7; 8; pq-group
G80; mna:5,1,2; 17; pq-group
Q8; q8; 3; p-group
D8; metacyclic:2,2,1; 3; p-group
M27; metacyclic:3,2,1; 4; p-group
M16; metacyclic:2,2,2; 3; p-group
D12; dihedral:6; -; negative-control
S4; perm:(1 2 3 4),(1 2); -; negative-control
";

/// One entry per non-blank, non-`#` line: `name; spec; omega|-; kind`.
pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>> {
    let mut entries = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split(';').map(str::trim).collect();
        let err = |msg: String| Error::Parse(format!("catalog line {}: {msg}", lineno + 1));
        let [name, spec, omega, kind] = fields.as_slice() else {
            return Err(err(format!("expected 4 ';'-separated fields, found {}", fields.len())));
        };
        let spec = spec.parse::<GroupSpec>().map_err(|e| err(e.to_string()))?;
        let expected_omega = match *omega {
            "-" => None,
            v => Some(v.parse().map_err(|_| err(format!("bad expected omega {v:?}")))?),
        };
        let expected_kind = kind.parse().map_err(|e: Error| err(e.to_string()))?;
        entries.push(CatalogEntry { name: name.to_string(), spec, expected_omega, expected_kind });
    }
    if entries.is_empty() {
        return Err(Error::Parse("catalog has no entries".into()));
    }
    Ok(entries)
}

pub fn builtin_catalog() -> Vec<CatalogEntry> {
    parse_catalog(BUILTIN_CATALOG).expect("built-in catalog parses")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_specifier_form() {
        for s in [
            "cyclic:6",
            "elemab:2,3",
            "mna:2,1,3",
            "metacyclic:3,2,1",
            "q8",
            "dihedral:6",
            "product:cyclic:2,dihedral:3",
            "product:mna:2,1,3,product:q8,cyclic:3",
            "file:table.txt",
            "perm:gens.txt",
            "perm:(1 2 3 4),(1 2)",
        ] {
            let spec: GroupSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
    }

    #[test]
    fn rejects_malformed_specifiers() {
        let e = "mna:3,3".parse::<GroupSpec>().unwrap_err();
        assert!(matches!(&e, Error::Parse(m) if m.contains("mna expects 3")), "{e}");
        let e = "cyclic:x".parse::<GroupSpec>().unwrap_err();
        assert!(matches!(&e, Error::Parse(m) if m.contains("\"x\"")), "{e}");
        assert!("sym:4".parse::<GroupSpec>().is_err());
        assert!("product:cyclic:2".parse::<GroupSpec>().is_err());
        assert!("q9".parse::<GroupSpec>().is_err());
        assert!("perm:(1 2".parse::<GroupSpec>().is_err());
    }

    #[test]
    fn builds_named_groups() {
        let b = Builder::default();
        let g = build_group("product:cyclic:2,dihedral:3", &b).unwrap();
        assert_eq!((g.order(), g.name()), (12, "product:cyclic:2,dihedral:3"));
        assert_eq!(build_group("perm:(1 2 3 4),(1 2)", &b).unwrap().order(), 24);
        assert!(matches!(build_group("cyclic:20", &Builder::new(10)), Err(Error::OrderCapExceeded { .. })));
        assert!(matches!(build_group("file:/nonexistent/table", &b), Err(Error::Io(_))));
    }

    #[test]
    fn catalog_files() {
        let entries = builtin_catalog();
        assert_eq!(entries.len(), 11);
        assert_eq!(entries[4].expected_omega, Some(17));
        assert_eq!(entries[10].expected_kind, ExpectedKind::NegativeControl);
        assert!(matches!(parse_catalog(""), Err(Error::Parse(_))));
        assert!(matches!(parse_catalog("# only a comment\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_catalog("S3; mna:2,1,3; 4\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_catalog("S3; mna:2,1,3; four; pq-group\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_catalog("S3; mna:2,1,3; 4; abelian\n"), Err(Error::Parse(_))));
    }
}
