//! Enumeration budgets. Exceeding one is a [`Error::Capacity`], never a
//! silent truncation.
//!
//! Defaults can be overridden with the `ORACLE_BUDGET` environment variable,
//! a comma-separated list of `key=value` pairs, e.g.
//! `ORACLE_BUDGET=elements_n=9,max_commuting_n=4`.

use crate::error::{Error, Result};

pub const ENV_VAR: &str = "ORACLE_BUDGET";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Largest rank whose generated subgroup may be materialized (`2^rank` elements).
    pub generated_rank: usize,
    /// Largest `n` for which a commutativity-map census walks all `4^n` elements.
    pub census_n: usize,
    /// Largest `n` for which all `4^n` elements may be listed.
    pub elements_n: usize,
    /// Largest `n` for exhaustive enumeration of maximal commuting subgroups.
    pub max_commuting_n: usize,
    /// Largest `n` for exhaustive enumeration of maximal anticommuting sets.
    pub max_anticommuting_n: usize,
    /// Largest `n` for the coset pattern check.
    pub census_check_n: usize,
    /// Largest `n` for the xyz-only searches.
    pub xyz_search_n: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            generated_rank: 24,
            census_n: 12,
            elements_n: 8,
            max_commuting_n: 3,
            max_anticommuting_n: 2,
            census_check_n: 3,
            xyz_search_n: 3,
        }
    }
}

impl Budget {
    /// Defaults overridden by `ORACLE_BUDGET`, if set.
    pub fn from_env() -> Result<Budget> {
        match std::env::var(ENV_VAR) {
            Ok(text) => Budget::default().with_overrides(&text),
            Err(std::env::VarError::NotPresent) => Ok(Budget::default()),
            Err(e) => Err(Error::argument(format!("{ENV_VAR}: {e}"))),
        }
    }

    pub fn with_overrides(mut self, text: &str) -> Result<Budget> {
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::argument(format!("{ENV_VAR}: expected key=value, got {item:?}")))?;
            let value: usize =
                value.trim().parse().map_err(|_| Error::argument(format!("{ENV_VAR}: {key} must be an integer")))?;
            let slot = match key.trim() {
                "generated_rank" => &mut self.generated_rank,
                "census_n" => &mut self.census_n,
                "elements_n" => &mut self.elements_n,
                "max_commuting_n" => &mut self.max_commuting_n,
                "max_anticommuting_n" => &mut self.max_anticommuting_n,
                "census_check_n" => &mut self.census_check_n,
                "xyz_search_n" => &mut self.xyz_search_n,
                other => return Err(Error::argument(format!("{ENV_VAR}: unknown key {other:?}"))),
            };
            *slot = value;
        }
        Ok(self)
    }
}

pub(crate) fn check(what: &str, value: usize, limit: usize) -> Result<()> {
    if value > limit {
        Err(Error::capacity(format!("{what} = {value} exceeds the budget of {limit}")))
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overrides() {
        let b = Budget::default().with_overrides("elements_n=9, census_n = 4").unwrap();
        assert_eq!(b.elements_n, 9);
        assert_eq!(b.census_n, 4);
        assert_eq!(b.max_commuting_n, 3);
        assert!(Budget::default().with_overrides("bogus=1").is_err());
        assert!(Budget::default().with_overrides("elements_n").is_err());
        assert!(Budget::default().with_overrides("elements_n=x").is_err());
        assert_eq!(Budget::default().with_overrides("").unwrap(), Budget::default());
    }
}
