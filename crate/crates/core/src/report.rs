//! Verification report schema shared by every check.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::{NodeSet, RootDatum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Inconclusive,
    Fail,
}

impl Status {
    /// The worse of two statuses (`fail` beats `inconclusive` beats `pass`).
    pub fn worst(self, other: Status) -> Status {
        self.max(other)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Instance {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub lattice: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<Vec<i32>>,
    #[serde(rename = "J", skip_serializing_if = "Option::is_none")]
    pub j: Option<Vec<usize>>,
    #[serde(rename = "Y", skip_serializing_if = "Option::is_none")]
    pub y: Option<Vec<usize>>,
}

impl Instance {
    pub fn new(datum: &RootDatum) -> Self {
        Instance {
            cartan_type: datum.cartan_type().to_string(),
            lattice: datum.lattice().to_string(),
            mu: None,
            j: None,
            y: None,
        }
    }

    pub fn mu(mut self, mu: &[i32]) -> Self {
        self.mu = Some(mu.to_vec());
        self
    }

    pub fn j(mut self, j: NodeSet) -> Self {
        self.j = Some(j.to_one_based());
        self
    }

    pub fn y(mut self, y: NodeSet) -> Self {
        self.y = Some(y.to_one_based());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    pub instance: Instance,
    pub status: Status,
    pub counterexample: Option<Value>,
    pub coverage: Option<f64>,
    pub sizes: BTreeMap<String, u64>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, Value>,
}

impl Report {
    pub fn new(check: &str, instance: Instance) -> Self {
        Report {
            check: check.to_string(),
            instance,
            status: Status::Pass,
            counterexample: None,
            coverage: None,
            sizes: BTreeMap::new(),
            details: BTreeMap::new(),
        }
    }

    pub fn size(&mut self, key: &str, n: usize) -> &mut Self {
        self.sizes.insert(key.to_string(), n as u64);
        self
    }

    pub fn detail(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.details.insert(key.to_string(), v.into());
        self
    }

    /// Records a failure; the first counterexample is kept.
    pub fn fail(&mut self, counterexample: Value) -> &mut Self {
        self.status = Status::Fail;
        if self.counterexample.is_none() {
            self.counterexample = Some(counterexample);
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schema_shape() {
        let d = RootDatum::adjoint("A2").unwrap();
        let mut r = Report::new("helam_iso", Instance::new(&d).mu(&[1, 0]).y(NodeSet::EMPTY));
        r.size("pairs", 324);
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["check"], "helam_iso");
        assert_eq!(v["instance"]["type"], "A2");
        assert_eq!(v["instance"]["Y"], serde_json::json!([]));
        assert_eq!(v["status"], "pass");
        assert!(v["counterexample"].is_null());
        assert!(v["coverage"].is_null());
        assert_eq!(v["sizes"]["pairs"], 324);
        assert!(v.get("details").is_none());
        assert_eq!(Status::Pass.worst(Status::Inconclusive), Status::Inconclusive);
        assert_eq!(Status::Fail.worst(Status::Inconclusive), Status::Fail);
    }
}
