//! Instance files for the `ell` subcommand.
//!
//! ```json
//! {
//!   "model": {"m": 2, "n": 6, "kind": "plane"},
//!   "curves": "auto",
//!   "galois": [[7, 8, 9, 10, 11, 12, 1, 2, 3, 4, 5, 6]],
//!   "q_point": "no"
//! }
//! ```
//!
//! Permutations list the 1-based image of each curve index. The JSON schema
//! lives at `schema/instance.schema.json`.

use pezzo_core::galois::{CurveSystem, GaloisAction};
use pezzo_core::{Error, ModelKind, Result, SurfaceModel, TriState};
use serde::Deserialize;

#[derive(Clone, Debug, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ModelSpec {
    pub m: i64,
    pub n: i64,
    pub kind: ModelKind,
}

#[derive(Clone, Debug, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum CurveList {
    Keyword(String),
    Explicit(Vec<Vec<i64>>),
}

impl Default for CurveList {
    fn default() -> Self {
        CurveList::Keyword("auto".to_string())
    }
}

#[derive(Clone, Debug, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub model: ModelSpec,
    #[serde(default)]
    pub curves: CurveList,
    #[serde(default)]
    pub galois: Vec<Vec<i64>>,
    #[serde(default)]
    pub q_point: Option<TriStateInput>,
}

#[derive(Clone, Copy, Debug, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum TriStateInput {
    Yes,
    No,
    Unknown,
}

impl From<TriStateInput> for TriState {
    fn from(t: TriStateInput) -> Self {
        match t {
            TriStateInput::Yes => TriState::Yes,
            TriStateInput::No => TriState::No,
            TriStateInput::Unknown => TriState::Open,
        }
    }
}

impl InstanceFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parameter(format!("instance file: {e}")))
    }

    pub fn system(&self) -> Result<CurveSystem> {
        let model = SurfaceModel::build(self.model.m, self.model.n, self.model.kind)?;
        match &self.curves {
            CurveList::Keyword(k) if k == "auto" => CurveSystem::auto(model),
            CurveList::Keyword(k) => Err(Error::Parameter(format!(
                "curves must be \"auto\" or a list of coefficient vectors, got \"{k}\""
            ))),
            CurveList::Explicit(list) => {
                let curves = list
                    .iter()
                    .map(|c| model.class(c.clone()))
                    .collect::<Result<Vec<_>>>()?;
                CurveSystem::new(model, curves)
            }
        }
    }

    pub fn action(&self, degree: usize) -> Result<GaloisAction> {
        GaloisAction::from_one_based(degree, &self.galois)
    }
}
