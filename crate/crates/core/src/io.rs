//! Input documents and the multiplication-table cache.
//!
//! A semigroup document is JSON: `{"degree": 2, "generators": [[2, 1], [1, null]]}`
//! with 1-based images and `null` for undefined points.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::isg::Isg;
use crate::partial_perm::PartialPerm;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSemigroup {
    #[serde(default)]
    name: Option<String>,
    degree: usize,
    generators: Vec<Vec<Option<usize>>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupInput {
    pub name: Option<String>,
    pub degree: usize,
    pub generators: Vec<PartialPerm>,
}

fn position(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

/// Byte offset of the `k`-th array inside the top-level `generators` array.
fn locate_generator(text: &str, k: usize) -> Option<usize> {
    let bytes = text.as_bytes();
    let (mut depth, mut i) = (0usize, 0usize);
    let mut in_generators = None;
    let mut seen = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'"' => {
                let start = i + 1;
                i += 1;
                while i < bytes.len() && bytes[i] != b'"' {
                    i += if bytes[i] == b'\\' { 2 } else { 1 };
                }
                if depth == 1 && text.get(start..i) == Some("generators") {
                    in_generators = Some(usize::MAX);
                }
            }
            b'{' => depth += 1,
            b'[' => {
                depth += 1;
                match in_generators {
                    Some(usize::MAX) if depth == 2 => in_generators = Some(2),
                    Some(2) if depth == 3 => {
                        if seen == k {
                            return Some(i);
                        }
                        seen += 1;
                    }
                    _ => {}
                }
            }
            b'}' | b']' => {
                if in_generators == Some(2) && depth == 2 {
                    return None;
                }
                depth = depth.saturating_sub(1);
            }
            _ => {}
        }
        i += 1;
    }
    None
}

fn parse_error(text: &str, offset: Option<usize>, msg: impl std::fmt::Display) -> Error {
    match offset {
        Some(o) => {
            let (l, c) = position(text, o);
            Error::Parse(format!("line {l}, column {c}: {msg}"))
        }
        None => Error::Parse(msg.to_string()),
    }
}

pub fn parse_semigroup(text: &str) -> Result<SemigroupInput> {
    let raw: RawSemigroup = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("line {}, column {}: {}", e.line(), e.column(), strip_position(&e.to_string()))))?;
    if raw.degree == 0 {
        return Err(parse_error(text, None, "degree must be positive"));
    }
    if raw.generators.is_empty() {
        return Err(parse_error(text, None, "at least one generator is required"));
    }
    let mut generators = Vec::with_capacity(raw.generators.len());
    for (k, images) in raw.generators.iter().enumerate() {
        let at = locate_generator(text, k);
        if images.len() != raw.degree {
            return Err(parse_error(
                text,
                at,
                format!("generator {} has {} entries, degree is {}", k + 1, images.len(), raw.degree),
            ));
        }
        if let Some(bad) = images.iter().flatten().find(|&&x| x == 0 || x > raw.degree) {
            return Err(parse_error(text, at, format!("generator {} has image {bad} outside 1..={}", k + 1, raw.degree)));
        }
        let p = PartialPerm::from_one_based(images).map_err(|e| parse_error(text, at, format!("generator {}: {e}", k + 1)))?;
        generators.push(p);
    }
    Ok(SemigroupInput { name: raw.name, degree: raw.degree, generators })
}

fn strip_position(msg: &str) -> &str {
    msg.find(" at line ").map_or(msg, |i| &msg[..i])
}

pub fn read_semigroup(path: &Path) -> Result<SemigroupInput> {
    let text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_semigroup(&text).map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        other => other,
    })
}

/// Content hash of a generator list, used as the cache key.
pub fn generator_key(degree: usize, generators: &[PartialPerm]) -> String {
    let doc: Vec<Vec<Option<usize>>> = generators.iter().map(|p| p.one_based()).collect();
    let mut h = Sha256::new();
    h.update(degree.to_le_bytes());
    h.update(serde_json::to_vec(&doc).expect("generators serialize"));
    hex::encode(h.finalize())
}

/// Element list plus flat multiplication and inverse tables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableCache {
    pub key: String,
    pub degree: usize,
    pub elements: Vec<Vec<Option<usize>>>,
    pub mult: Vec<usize>,
    pub inv: Vec<usize>,
}

impl TableCache {
    pub fn from_isg(key: String, s: &Isg) -> Self {
        TableCache {
            key,
            degree: s.degree(),
            elements: s.elements().iter().map(|p| p.one_based()).collect(),
            mult: s.mult_table(),
            inv: (0..s.len()).map(|a| s.inv(a)).collect(),
        }
    }

    pub fn to_isg(&self) -> Result<Isg> {
        let elements = self.elements.iter().map(|e| PartialPerm::from_one_based(e)).collect::<Result<Vec<_>>>()?;
        Isg::from_tables(self.degree, elements, &self.mult, &self.inv)
    }
}

/// Closes the generators, reusing `dir/<key>.json` when present and valid.
/// Returns the semigroup and whether it came from the cache.
pub fn load_or_build(input: &SemigroupInput, cap: usize, dir: Option<&Path>) -> Result<(Arc<Isg>, bool)> {
    let key = generator_key(input.degree, &input.generators);
    let path: Option<PathBuf> = dir.map(|d| d.join(format!("{key}.json")));
    if let Some(p) = &path {
        if let Ok(text) = fs::read_to_string(p) {
            if let Ok(cache) = serde_json::from_str::<TableCache>(&text) {
                if cache.key == key && cache.elements.len() <= cap {
                    if let Ok(s) = cache.to_isg() {
                        return Ok((Arc::new(s), true));
                    }
                }
            }
        }
    }
    let s = Isg::close_generators(&input.generators, cap)?;
    if let Some(p) = &path {
        let doc = serde_json::to_string(&TableCache::from_isg(key, &s)).expect("cache serializes");
        let _ = fs::create_dir_all(p.parent().unwrap_or(Path::new(".")));
        fs::write(p, doc).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?;
    }
    Ok((Arc::new(s), false))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_i2() {
        let s = parse_semigroup(r#"{"degree": 2, "generators": [[2, 1], [1, null]]}"#).unwrap();
        let g = Isg::close_generators(&s.generators, 100).unwrap();
        assert_eq!(g.len(), 7);
    }

    #[test]
    fn degree_mismatch_reports_position() {
        let text = "{\n  \"degree\": 2,\n  \"generators\": [\n    [2, 1],\n    [1, null, 2]\n  ]\n}";
        let err = parse_semigroup(text).unwrap_err().to_string();
        assert!(err.contains("line 5, column 5"), "{err}");
        let err = parse_semigroup("{\"degree\": 2,\n \"generators\": [[1, 1]]}").unwrap_err().to_string();
        assert!(err.contains("line 2"), "{err}");
        let err = parse_semigroup("{\"degree\": 2,\n \"generators\": [[1, 2]],}").unwrap_err().to_string();
        assert!(err.starts_with("parse error: line 2"), "{err}");
    }

    #[test]
    fn cache_round_trip() {
        let s = parse_semigroup(r#"{"degree": 2, "generators": [[2, 1], [1, null]]}"#).unwrap();
        let g = Isg::close_generators(&s.generators, 100).unwrap();
        let cache = TableCache::from_isg(generator_key(2, &s.generators), &g);
        let back = cache.to_isg().unwrap();
        assert_eq!(back, g);
        let mut broken = cache.clone();
        broken.mult[3] = (broken.mult[3] + 1) % g.len();
        assert!(broken.to_isg().is_err());
        assert_ne!(generator_key(2, &s.generators), generator_key(2, &s.generators[..1]));
    }
}
