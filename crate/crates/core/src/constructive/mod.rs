//! Explicit labelings from the constructive upper-bound arguments. Every
//! labeling leaves this module only after `is_distinguishing_edge` (or an
//! equivalent structural check, for groups too large to list) accepts it.

mod arrays;
mod layered;
mod minimally;
mod paths;

use std::fmt;

use serde::Serialize;

use crate::distinguishing::{EdgeLabeling, LabelingRecord};
use crate::graph::Graph;

pub use arrays::{
    arrays_valid, enumerate_label_arrays, label_windmill, label_windmill_with, LabelArray,
    LabelArrays,
};
pub use layered::{
    label_min_degree_two, label_min_degree_two_with, layer_partition, LayerPartition,
};
pub use minimally::{label_two_minimally, label_two_minimally_with};
pub use paths::{decompose_simple_paths, SimplePath, SimplePathDecomposition};

/// How a returned labeling was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Exact,
    Windmill,
    Layered,
    TwoMinimally,
    ExactFallback,
}

impl Method {
    pub fn tag(&self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::Windmill => "windmill",
            Method::Layered => "layered",
            Method::TwoMinimally => "two-minimally",
            Method::ExactFallback => "exact-fallback",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A verified labeling together with the route that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constructed {
    pub labeling: EdgeLabeling,
    pub method: Method,
}

impl Constructed {
    pub fn to_record(&self, g: &Graph) -> LabelingRecord {
        self.labeling.to_record(g, self.method.tag())
    }
}
