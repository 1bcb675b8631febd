//! The built-in set of small hyperrings the theorem sweep runs over.

use std::path::{Path, PathBuf};

use crate::construct::{direct_product, quotient, unit_quotient, zmod};
use crate::ideals::Ideal;
use crate::ring::{HyperRing, RingError};
use crate::set::IndexSet;

/// Environment variable naming a directory of extra ring files (`*.json`).
pub const CORPUS_DIR_VAR: &str = "HRL_CORPUS_DIR";

/// The Krasner hyperfield `{0, 1}` with `1 ⊕ 1 = {0, 1}`.
pub fn krasner() -> HyperRing {
    unit_quotient(&zmod(3), IndexSet::from_iter([1, 2])).expect("{1,2} is the unit group of Z_3").with_name("K")
}

/// The sign hyperfield, obtained from `Z_5` by `{±1}`.
pub fn sign_hyperfield() -> HyperRing {
    unit_quotient(&zmod(5), IndexSet::from_iter([1, 4]))
        .expect("{1,4} is a unit subgroup of Z_5")
        .with_name("Z_5/{1,4}")
}

/// `Z_7` modulo its squares.
pub fn z7_mod_squares() -> HyperRing {
    unit_quotient(&zmod(7), IndexSet::from_iter([1, 2, 4]))
        .expect("squares form a unit subgroup")
        .with_name("Z_7/{1,2,4}")
}

/// Rings in sweep order: three unit quotients, seven residue rings, two
/// products and one hyperideal quotient.
pub fn default_corpus() -> Vec<HyperRing> {
    let k = krasner();
    let mut rings = vec![k.clone(), sign_hyperfield(), z7_mod_squares()];
    rings.extend([2, 3, 4, 6, 8, 9, 12].into_iter().map(zmod));
    rings.push(direct_product(&k, &k).expect("4 elements").into_ring().with_name("K×K"));
    rings.push(direct_product(&zmod(4), &k).expect("8 elements").into_ring().with_name("Z_4×K"));
    let z12 = zmod(12);
    let four = Ideal::new(&z12, IndexSet::from_iter([0, 4, 8])).expect("(4) is a hyperideal");
    rings.push(quotient(&z12, four).expect("proper").into_ring().with_name("Z_12/(4)"));
    rings
}

/// Every `*.json` ring file in `dir`, sorted by file name; each must satisfy the axioms.
pub fn load_dir(dir: &Path) -> Result<Vec<HyperRing>, (PathBuf, RingError)> {
    let mut paths: Vec<PathBuf> = match std::fs::read_dir(dir) {
        Ok(entries) => entries
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "json"))
            .collect(),
        Err(err) => return Err((dir.to_path_buf(), RingError::Malformed(err.to_string()))),
    };
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let text = std::fs::read_to_string(&p).map_err(|e| (p.clone(), RingError::Malformed(e.to_string())))?;
            HyperRing::from_json(&text).and_then(|r| r.checked(false)).map_err(|e| (p, e))
        })
        .collect()
}

/// The default corpus followed by any rings from [`CORPUS_DIR_VAR`].
pub fn corpus_from_env() -> Result<Vec<HyperRing>, (PathBuf, RingError)> {
    let mut rings = default_corpus();
    if let Some(dir) = std::env::var_os(CORPUS_DIR_VAR) {
        rings.extend(load_dir(Path::new(&dir))?);
    }
    Ok(rings)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::verify_krasner_with;

    #[test]
    fn corpus_sizes() {
        let sizes: Vec<usize> = default_corpus().iter().map(HyperRing::size).collect();
        assert_eq!(sizes, vec![2, 3, 3, 2, 3, 4, 6, 8, 9, 12, 4, 8, 4]);
    }

    #[test]
    fn corpus_members_satisfy_axioms() {
        for ring in default_corpus() {
            assert!(verify_krasner_with(&ring, false).all_pass(), "{}", ring.name());
        }
    }

    #[test]
    fn krasner_addition() {
        let k = krasner();
        assert_eq!(k.add(1, 1), IndexSet::from_iter([0, 1]));
        assert_eq!(k.add(0, 1), IndexSet::singleton(1));
    }
}
