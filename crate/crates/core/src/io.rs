//! JSON interchange format for vector sets:
//! `{"dim": d, "vectors": [[int, ...], ...], "labels": [...], "contexts": [[int, ...], ...]}`.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::ks::{Context, VectorSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SetFile {
    pub dim: usize,
    pub vectors: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub contexts: Option<Vec<Vec<usize>>>,
}

/// A parsed vector set with its optional context list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoadedSet {
    pub set: VectorSet,
    pub contexts: Option<Vec<Context>>,
}

impl SetFile {
    pub fn from_set(set: &VectorSet, contexts: Option<&[Context]>) -> Result<Self> {
        Ok(SetFile {
            dim: set.dim(),
            vectors: set.int_rows()?,
            labels: set.labels().map(<[String]>::to_vec),
            contexts: contexts.map(|cs| cs.iter().map(|c| c.members().to_vec()).collect()),
        })
    }

    pub fn into_loaded(self) -> Result<LoadedSet> {
        let set = VectorSet::from_int_vectors(self.dim, &self.vectors, self.labels)?;
        let contexts = self
            .contexts
            .map(|cs| {
                cs.into_iter()
                    .map(|members| Context::new(members, &set))
                    .collect::<Result<Vec<_>>>()
            })
            .transpose()?;
        Ok(LoadedSet { set, contexts })
    }
}

pub fn parse_set_json(text: &str) -> Result<LoadedSet> {
    let file: SetFile = serde_json::from_str(text)?;
    file.into_loaded()
}

/// Pretty JSON with one vector or context per line.
pub fn set_to_json(set: &VectorSet, contexts: Option<&[Context]>) -> Result<String> {
    let file = SetFile::from_set(set, contexts)?;
    let rows = |rows: &[Vec<i64>]| -> Result<String> {
        let lines = rows
            .iter()
            .map(|r| serde_json::to_string(r).map(|l| format!("    {}", l.replace(',', ", "))))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(format!("[\n{}\n  ]", lines.join(",\n")))
    };
    let mut fields = vec![
        format!("  \"dim\": {}", file.dim),
        format!("  \"vectors\": {}", rows(&file.vectors)?),
    ];
    if let Some(labels) = &file.labels {
        fields.push(format!(
            "  \"labels\": {}",
            serde_json::to_string(labels)?.replace("\",\"", "\", \"")
        ));
    }
    if let Some(cs) = &file.contexts {
        let as_i64: Vec<Vec<i64>> = cs
            .iter()
            .map(|c| c.iter().map(|&v| v as i64).collect())
            .collect();
        fields.push(format!("  \"contexts\": {}", rows(&as_i64)?));
    }
    Ok(format!("{{\n{}\n}}", fields.join(",\n")))
}
