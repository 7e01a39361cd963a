//! Loading groups from multiplication-table files.
//!
//! File format: a JSON object `{"order": n, "table": [[...], ...],
//! "names": [...]}` where `table` is an n-by-n array of 0-based indices
//! with `table[0][j] = j` (index 0 is the identity) and `names` is optional.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::Group;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CayleyTable {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

impl CayleyTable {
    /// Dump a built group as a table, handy for fixtures.
    pub fn from_group(g: &Group) -> CayleyTable {
        let n = g.order();
        CayleyTable {
            order: n,
            table: (0..n)
                .map(|x| (0..n).map(|y| g.multiply(x, y)).collect())
                .collect(),
            names: Some(g.element_names()),
        }
    }
}

/// Read and validate a table file. Identity, inverse and latin-square
/// checks always run; full associativity is O(n^3) and opt-in.
pub fn load_cayley_table(path: &Path, check_associativity: bool) -> Result<Group> {
    let text = std::fs::read_to_string(path)?;
    let table: CayleyTable =
        serde_json::from_str(&text).map_err(|e| Error::TableFormat(e.to_string()))?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "table".into());
    group_from_table(&table, name, check_associativity)
}

pub fn group_from_table(t: &CayleyTable, name: String, check_associativity: bool) -> Result<Group> {
    let n = t.order;
    if n == 0 {
        return Err(Error::TableFormat("order must be positive".into()));
    }
    if t.table.len() != n {
        return Err(Error::TableFormat(format!(
            "expected {n} rows, found {}",
            t.table.len()
        )));
    }
    let mut flat = Vec::with_capacity(n * n);
    for (i, row) in t.table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::TableFormat(format!(
                "row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        for (j, &v) in row.iter().enumerate() {
            if v >= n {
                return Err(Error::TableFormat(format!(
                    "entry ({i},{j}) = {v} out of range"
                )));
            }
            flat.push(v as u32);
        }
    }
    if let Some(names) = &t.names {
        if names.len() != n {
            return Err(Error::TableFormat(format!(
                "{} names for {n} elements",
                names.len()
            )));
        }
    }

    // Index 0 must be a two-sided identity.
    for j in 0..n {
        if flat[j] as usize != j {
            return Err(Error::NotAGroup {
                axiom: "identity (row 0)",
                witness: vec![0, j],
            });
        }
        if flat[j * n] as usize != j {
            return Err(Error::NotAGroup {
                axiom: "identity (column 0)",
                witness: vec![j, 0],
            });
        }
    }
    // Every row and column must be a permutation.
    let mut seen = vec![false; n];
    for i in 0..n {
        seen.fill(false);
        for j in 0..n {
            let v = flat[i * n + j] as usize;
            if seen[v] {
                return Err(Error::NotAGroup {
                    axiom: "row is a permutation",
                    witness: vec![i, j],
                });
            }
            seen[v] = true;
        }
    }
    for j in 0..n {
        seen.fill(false);
        for i in 0..n {
            let v = flat[i * n + j] as usize;
            if seen[v] {
                return Err(Error::NotAGroup {
                    axiom: "column is a permutation",
                    witness: vec![i, j],
                });
            }
            seen[v] = true;
        }
    }
    // Two-sided inverses.
    for x in 0..n {
        let li = (0..n).find(|&y| flat[x * n + y] == 0);
        match li {
            Some(y) if flat[y * n + x] == 0 => {}
            _ => {
                return Err(Error::NotAGroup {
                    axiom: "two-sided inverse",
                    witness: vec![x],
                });
            }
        }
    }
    if check_associativity {
        for a in 0..n {
            for b in 0..n {
                let ab = flat[a * n + b] as usize;
                for c in 0..n {
                    let bc = flat[b * n + c] as usize;
                    if flat[ab * n + c] != flat[a * n + bc] {
                        return Err(Error::NotAGroup {
                            axiom: "associativity",
                            witness: vec![a, b, c],
                        });
                    }
                }
            }
        }
    }

    Ok(Group::from_table_parts(
        n,
        flat,
        name,
        t.names.clone().unwrap_or_default(),
    ))
}

/// S3 as permutations of three points, identity first. Test fixture.
#[cfg(test)]
pub(crate) fn s3_table() -> CayleyTable {
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [1, 0, 2],
        [0, 2, 1],
        [2, 1, 0],
        [1, 2, 0],
        [2, 0, 1],
    ];
    let compose = |p: &[usize; 3], q: &[usize; 3]| -> [usize; 3] {
        // (p * q)(x) = p(q(x))
        [p[q[0]], p[q[1]], p[q[2]]]
    };
    let index = |r: &[usize; 3]| perms.iter().position(|p| p == r).unwrap();
    let table = perms
        .iter()
        .map(|p| perms.iter().map(|q| index(&compose(p, q))).collect())
        .collect();
    CayleyTable {
        order: 6,
        table,
        names: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::profile::is_nilpotent;

    use super::s3_table;

    #[test]
    fn s3_loads_and_is_not_nilpotent() {
        let g = group_from_table(&s3_table(), "S3".into(), true).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!is_nilpotent(&g));
    }

    #[test]
    fn non_permutation_row_is_rejected() {
        let mut t = s3_table();
        t.table[2][3] = t.table[2][4];
        assert!(matches!(
            group_from_table(&t, "bad".into(), false),
            Err(Error::NotAGroup {
                axiom: "row is a permutation",
                ..
            })
        ));
    }

    #[test]
    fn z4_table_has_expected_order_profile() {
        let z4 = CayleyTable {
            order: 4,
            table: vec![
                vec![0, 1, 2, 3],
                vec![1, 2, 3, 0],
                vec![2, 3, 0, 1],
                vec![3, 0, 1, 2],
            ],
            names: None,
        };
        let g = group_from_table(&z4, "Z4".into(), true).unwrap();
        let mut orders: Vec<u64> = (0..4).map(|x| g.order_of(x)).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![1, 2, 4, 4]);
    }

    #[test]
    fn associativity_check_catches_a_loop_that_is_not_a_group() {
        // An order-5 loop: latin in both directions, identity at 0, every
        // element self-inverse, but (1*2)*2 = 4 while 1*(2*2) = 1.
        let t = CayleyTable {
            order: 5,
            table: vec![
                vec![0, 1, 2, 3, 4],
                vec![1, 0, 3, 4, 2],
                vec![2, 4, 0, 1, 3],
                vec![3, 2, 4, 0, 1],
                vec![4, 3, 1, 2, 0],
            ],
            names: None,
        };
        // The cheap checks pass.
        assert!(group_from_table(&t, "loop".into(), false).is_ok());
        // The opt-in O(n^3) check rejects it.
        match group_from_table(&t, "loop".into(), true) {
            Err(Error::NotAGroup {
                axiom: "associativity",
                ..
            }) => {}
            other => panic!("expected associativity failure, got {other:?}"),
        }
    }

    #[test]
    fn table_round_trip_matches_spec_built_group() {
        let g = Group::parse("Z3xZ4").unwrap();
        let t = CayleyTable::from_group(&g);
        let h = group_from_table(&t, "copy".into(), true).unwrap();
        assert_eq!(h.order(), g.order());
        for x in 0..g.order() {
            assert_eq!(g.order_of(x), h.order_of(x));
        }
    }
}
