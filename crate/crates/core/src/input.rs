//! JSON descriptions of groups and of the pair `(G, F, phi)`.
//!
//! ```json
//! {
//!   "G": {"kind": "named", "name": "symmetric", "param": 3},
//!   "F": {"kind": "permutation", "degree": 3, "generators": [[[1, 2]]]},
//!   "phi": {"images": [0, "(1,2)"]}
//! }
//! ```
//!
//! `F` and `phi` may be omitted together, meaning `F = G` and `phi = id`.
//! Instead of `images`, `phi` may be `{"match": "permutations"}` when both
//! groups are permutation groups of the same degree.

use std::sync::Arc;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::group::{make_named, Elem, FiniteGroup, GroupHom, Permutation, DEFAULT_ORDER_CAP};

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum GroupSpec {
    Named {
        name: String,
        #[serde(default)]
        param: i64,
    },
    Permutation {
        degree: usize,
        generators: Vec<Vec<Vec<usize>>>,
    },
    Table {
        mul: Vec<Vec<Elem>>,
    },
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Named { name, param } => make_named(name, *param),
            GroupSpec::Permutation { degree, generators } => {
                let gens = generators
                    .iter()
                    .map(|cycles| Permutation::from_cycles(*degree, cycles))
                    .collect::<Result<Vec<_>>>()?;
                FiniteGroup::from_permutation_generators(*degree, &gens, DEFAULT_ORDER_CAP)
            }
            GroupSpec::Table { mul } => FiniteGroup::from_table(mul.clone()),
        }
    }
}

/// An element given by index or by label (cycle notation for permutation
/// groups).
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum ElementSpec {
    Index(Elem),
    Label(String),
}

impl ElementSpec {
    pub fn resolve(&self, group: &FiniteGroup) -> Result<Elem> {
        match self {
            ElementSpec::Index(i) if *i < group.order() => Ok(*i),
            ElementSpec::Index(i) => Err(Error::InvalidElement(i.to_string())),
            ElementSpec::Label(s) => group.parse_element(s),
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum HomSpec {
    Images { images: Vec<ElementSpec> },
    Match {
        #[serde(rename = "match")]
        by: String,
    },
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairSpec {
    #[serde(rename = "G")]
    pub g: GroupSpec,
    #[serde(rename = "F", default)]
    pub f: Option<GroupSpec>,
    #[serde(default)]
    pub phi: Option<HomSpec>,
    /// Optional free-form name echoed in outputs.
    #[serde(default)]
    pub name: Option<String>,
}

/// A validated pair.
#[derive(Clone, Debug)]
pub struct Pair {
    pub name: Option<String>,
    pub phi: GroupHom,
}

impl PairSpec {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Builds both groups and validates `phi` as an injective homomorphism.
    pub fn build(&self) -> Result<Pair> {
        let g = Arc::new(self.g.build()?);
        let phi = match (&self.f, &self.phi) {
            (None, None) => GroupHom::identity(g),
            (Some(f), Some(hom)) => {
                let f = Arc::new(f.build()?);
                match hom {
                    HomSpec::Images { images } => {
                        let images = images.iter().map(|e| e.resolve(&g)).collect::<Result<Vec<_>>>()?;
                        GroupHom::new(f, g, images)?
                    }
                    HomSpec::Match { by } if by == "permutations" => GroupHom::by_permutations(f, g)?,
                    HomSpec::Match { by } => return Err(Error::Spec(format!("unknown match rule `{by}`"))),
                }
            }
            (Some(_), None) => return Err(Error::Spec("`F` given without `phi`".into())),
            (None, Some(_)) => return Err(Error::Spec("`phi` given without `F`".into())),
        };
        Ok(Pair { name: self.name.clone(), phi })
    }
}

/// Parses and validates a pair description.
pub fn load_pair(text: &str) -> Result<Pair> {
    PairSpec::parse(text)?.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_pair() {
        let p = load_pair(r#"{"G": {"kind": "named", "name": "symmetric", "param": 3}}"#).unwrap();
        assert!(p.phi.is_identity());
        assert_eq!(p.phi.target().order(), 6);
    }

    #[test]
    fn inclusion_by_labels_and_permutations() {
        let text = r#"{
            "G": {"kind": "named", "name": "symmetric", "param": 3},
            "F": {"kind": "permutation", "degree": 3, "generators": [[[1, 2, 3]]]},
            "phi": {"images": [0, "(1,2,3)", "(1,3,2)"]}
        }"#;
        let p = load_pair(text).unwrap();
        assert_eq!(p.phi.images(), &[0, 2, 5]);
        let text = r#"{
            "G": {"kind": "named", "name": "symmetric", "param": 3},
            "F": {"kind": "permutation", "degree": 3, "generators": [[[1, 2, 3]]]},
            "phi": {"match": "permutations"}
        }"#;
        assert_eq!(load_pair(text).unwrap().phi.images(), &[0, 2, 5]);
    }

    #[test]
    fn table_groups() {
        let text = r#"{
            "G": {"kind": "table", "mul": [[0, 1], [1, 0]]},
            "F": {"kind": "table", "mul": [[0]]},
            "phi": {"images": [0]}
        }"#;
        assert_eq!(load_pair(text).unwrap().phi.source().order(), 1);
    }

    #[test]
    fn rejections_are_input_errors() {
        let non_injective = r#"{
            "G": {"kind": "named", "name": "cyclic", "param": 2},
            "F": {"kind": "named", "name": "cyclic", "param": 4},
            "phi": {"images": [0, 1, 0, 1]}
        }"#;
        let err = load_pair(non_injective).unwrap_err();
        assert!(err.is_invalid_input());
        assert!(err.to_string().contains("not injective"), "{err}");
        for text in [
            "not json",
            r#"{"G": {"kind": "named", "name": "nope"}}"#,
            r#"{"G": {"kind": "named", "name": "cyclic", "param": 2}, "F": {"kind": "named", "name": "cyclic", "param": 2}}"#,
            r#"{"G": {"kind": "table", "mul": [[0, 1], [0, 1]]}}"#,
            r#"{"G": {"kind": "named", "name": "cyclic", "param": 3}, "F": {"kind": "named", "name": "cyclic", "param": 2}, "phi": {"images": [0, 1]}}"#,
        ] {
            assert!(load_pair(text).unwrap_err().is_invalid_input(), "{text}");
        }
    }
}
