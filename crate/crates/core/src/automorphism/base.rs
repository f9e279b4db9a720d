use std::sync::OnceLock;

use super::Automorphism;
use crate::error::{Error, Result};
use crate::search::isomorphisms;
use crate::topology::build_recursive;

/// Largest dimension for which the full group is found by exhaustive search.
pub const BASE_MAX_DIM: u32 = 3;

static BASE: [OnceLock<Vec<Automorphism>>; BASE_MAX_DIM as usize + 1] =
    [const { OnceLock::new() }; BASE_MAX_DIM as usize + 1];

fn search_group(n: u32) -> Vec<Automorphism> {
    let g = build_recursive(n).expect("base dimension is below every cap");
    let mut tables: Vec<Vec<u64>> = isomorphisms(&g, &g, usize::MAX)
        .into_iter()
        .map(|map| map.into_iter().map(u64::from).collect())
        .collect();
    tables.sort();
    tables
        .into_iter()
        .map(|t| Automorphism::from_table(n, t).expect("search yields permutations"))
        .collect()
}

/// Every automorphism of `VQ_n` for `n <= 3` as explicit tables, sorted
/// lexicographically by table.
pub fn base_automorphism_table(n: u32) -> Result<&'static [Automorphism]> {
    if n > BASE_MAX_DIM {
        return Err(Error::Precondition(format!(
            "exhaustive automorphism search is limited to n <= {BASE_MAX_DIM}, got {n}"
        )));
    }
    Ok(BASE[n as usize].get_or_init(|| search_group(n)))
}
