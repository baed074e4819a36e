//! Reading delta-matroids from JSON files.
//!
//! The shape is detected from the keys: `feasible` for an explicit family,
//! `rows` for an isotropic matrix, `edges` for a graph.

use std::path::Path;

use deltak::delta::{
    from_graph, from_matrix, subset_from_elements, validate, DeltaMatroid, DeltaMatroidJson, GraphJson,
    GroundMatrix, GroundMatrixJson, Subset, Validation,
};
use deltak::Error;
use serde_json::Value;

use crate::Failure;

pub enum Input {
    Family { n: usize, family: Vec<Subset> },
    Matrix(GroundMatrix),
    Graph(GraphJson),
}

pub fn read_value(path: &Path) -> Result<Value, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn parse<T: serde::de::DeserializeOwned>(v: Value) -> Result<T, Failure> {
    serde_json::from_value(v).map_err(|e| Failure::input(e.to_string()))
}

pub fn classify(v: Value) -> Result<Input, Failure> {
    let has = |k: &str| v.get(k).is_some();
    if has("feasible") {
        let j: DeltaMatroidJson = parse(v)?;
        if j.n == 0 {
            return Err(Error::InvalidInput("ground size must be positive".into()).into());
        }
        for s in &j.feasible {
            if let Some(&bad) = s.iter().find(|&&i| i == 0 || i > j.n) {
                return Err(Error::InvalidInput(format!("element {bad} outside [1, {}]", j.n)).into());
            }
        }
        let family = j.feasible.iter().map(|s| subset_from_elements(s)).collect();
        Ok(Input::Family { n: j.n, family })
    } else if has("rows") {
        let j: GroundMatrixJson = parse(v)?;
        Ok(Input::Matrix(GroundMatrix::try_from(j)?))
    } else if has("edges") {
        Ok(Input::Graph(parse(v)?))
    } else {
        Err(Failure::input("input needs a `feasible`, `rows` or `edges` key"))
    }
}

impl Input {
    pub fn delta_matroid(&self) -> Result<DeltaMatroid, Failure> {
        Ok(match self {
            Input::Family { n, family } => DeltaMatroid::new(*n, family)?,
            Input::Matrix(m) => from_matrix(m)?,
            Input::Graph(g) => from_graph(g.n, &g.edges)?.0,
        })
    }

    /// Polytope check of the family, or of the family a matrix or graph
    /// realizes.
    pub fn validation(&self) -> Result<(usize, Vec<Subset>, Validation), Failure> {
        match self {
            Input::Family { n, family } => Ok((*n, family.clone(), validate(*n, family)?)),
            _ => {
                let d = self.delta_matroid()?;
                let v = validate(d.n(), d.feasible())?;
                Ok((d.n(), d.feasible().to_vec(), v))
            }
        }
    }
}

pub fn load(path: &Path) -> Result<DeltaMatroid, Failure> {
    classify(read_value(path)?)?.delta_matroid()
}
