//! Search budgets shared by every exhaustive routine.
//!
//! Defaults can be overridden through the `DISTING_BUDGET` environment
//! variable, either as a bare integer (applied to the node-expansion budgets)
//! or as a comma separated list of `key=value` pairs with keys `ham`,
//! `search`, `group` and `order`.

use crate::error::{Error, Result};

pub const ENV_VAR: &str = "DISTING_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Node expansions allowed in the Hamiltonian path search.
    pub hamiltonian_nodes: u64,
    /// Node expansions allowed in one labeling search.
    pub search_nodes: u64,
    /// Largest automorphism group that is enumerated.
    pub group_order: u64,
    /// Largest order accepted by the exhaustive graph enumerator.
    pub enumerate_order: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            hamiltonian_nodes: 10_000_000,
            search_nodes: 2_000_000_000,
            group_order: 1_000_000,
            enumerate_order: 7,
        }
    }
}

impl Budget {
    /// Defaults with the environment override applied.
    pub fn from_env() -> Result<Budget> {
        match std::env::var(ENV_VAR) {
            Ok(s) => Budget::default().with_overrides(&s),
            Err(_) => Ok(Budget::default()),
        }
    }

    pub fn with_overrides(mut self, spec: &str) -> Result<Budget> {
        let spec = spec.trim();
        if spec.is_empty() {
            return Ok(self);
        }
        if let Ok(v) = spec.parse::<u64>() {
            self.hamiltonian_nodes = v;
            self.search_nodes = v;
            return Ok(self);
        }
        for part in spec.split(',') {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::InvalidParameter(format!("{ENV_VAR}: bad entry '{part}'")))?;
            let value: u64 = value.trim().parse().map_err(|_| {
                Error::InvalidParameter(format!("{ENV_VAR}: bad value in '{part}'"))
            })?;
            match key.trim() {
                "ham" => self.hamiltonian_nodes = value,
                "search" => self.search_nodes = value,
                "group" => self.group_order = value,
                "order" => self.enumerate_order = value as usize,
                other => {
                    return Err(Error::InvalidParameter(format!(
                        "{ENV_VAR}: unknown key '{other}'"
                    )))
                }
            }
        }
        Ok(self)
    }
}
