//! Finite commutative Krasner hyperrings given by explicit tables.
//!
//! Elements are the dense indices `0..n`. Addition is set-valued (one
//! nonempty [`IndexSet`] per cell), multiplication is an ordinary table.
//! Tables are stored exactly as given: nothing is symmetrised, and the
//! verifier reports asymmetric input instead of repairing it.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ideals::Ideal;
use crate::set::{IndexSet, MAX_ELEMENTS};

#[derive(Debug, Error)]
pub enum RingError {
    #[error("malformed ring tables: {0}")]
    Malformed(String),
    #[error("Krasner axioms fail: {0}")]
    Axioms(AxiomReport),
    #[error("invalid ring file: {0}")]
    Json(#[from] serde_json::Error),
}

/// A finite commutative Krasner hyperring with identity.
///
/// Construction through [`HyperRing::from_tables`] validates only the shape of
/// the tables; [`HyperRing::new`] additionally requires [`verify_krasner`] to
/// pass. Every algorithm outside this module assumes the axioms hold.
#[derive(Clone)]
pub struct HyperRing {
    name: String,
    labels: Vec<String>,
    n: usize,
    add: Vec<IndexSet>,
    mul: Vec<u8>,
    zero: usize,
    one: usize,
    neg: Vec<Option<u8>>,
    lattice: OnceLock<Vec<Ideal>>,
}

/// On-disk representation; the interchange unit for every CLI subcommand.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RingFile {
    pub name: String,
    pub labels: Vec<String>,
    pub add: Vec<Vec<Vec<usize>>>,
    pub mul: Vec<Vec<usize>>,
    pub zero: usize,
    pub one: usize,
}

impl HyperRing {
    /// Builds a ring after checking table shape and index ranges only.
    pub fn from_tables(
        name: impl Into<String>,
        labels: Vec<String>,
        add: Vec<Vec<IndexSet>>,
        mul: Vec<Vec<usize>>,
        zero: usize,
        one: usize,
    ) -> Result<Self, RingError> {
        let n = add.len();
        let bad = |msg: String| Err(RingError::Malformed(msg));
        if n == 0 {
            return bad("empty carrier".into());
        }
        if n > MAX_ELEMENTS {
            return bad(format!("{n} elements; at most {MAX_ELEMENTS} are supported"));
        }
        if labels.len() != n {
            return bad(format!("{} labels for {n} elements", labels.len()));
        }
        if mul.len() != n {
            return bad(format!("multiplication table has {} rows, expected {n}", mul.len()));
        }
        if zero >= n || one >= n {
            return bad(format!("zero={zero}, one={one} out of range for {n} elements"));
        }
        let mut add_flat = Vec::with_capacity(n * n);
        for (i, row) in add.iter().enumerate() {
            if row.len() != n {
                return bad(format!("addition row {i} has {} cells, expected {n}", row.len()));
            }
            for (j, cell) in row.iter().enumerate() {
                if cell.is_empty() {
                    return bad(format!("addition cell ({i},{j}) is empty"));
                }
                if !cell.within(n) {
                    return bad(format!("addition cell ({i},{j}) = {cell} has out-of-range members"));
                }
                add_flat.push(*cell);
            }
        }
        let mut mul_flat = Vec::with_capacity(n * n);
        for (i, row) in mul.iter().enumerate() {
            if row.len() != n {
                return bad(format!("multiplication row {i} has {} cells, expected {n}", row.len()));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return bad(format!("multiplication cell ({i},{j}) = {v} out of range"));
                }
                mul_flat.push(v as u8);
            }
        }
        let neg = (0..n)
            .map(|a| {
                let inverses: IndexSet = (0..n).filter(|&b| add_flat[a * n + b].contains(zero)).collect();
                inverses.as_singleton().map(|b| b as u8)
            })
            .collect();
        Ok(HyperRing {
            name: name.into(),
            labels,
            n,
            add: add_flat,
            mul: mul_flat,
            zero,
            one,
            neg,
            lattice: OnceLock::new(),
        })
    }

    /// Builds a ring and rejects it unless every Krasner axiom holds.
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        add: Vec<Vec<IndexSet>>,
        mul: Vec<Vec<usize>>,
        zero: usize,
        one: usize,
    ) -> Result<Self, RingError> {
        Self::from_tables(name, labels, add, mul, zero, one)?.checked(false)
    }

    pub(crate) fn checked(self, allow_trivial: bool) -> Result<Self, RingError> {
        let report = verify_krasner_with(&self, allow_trivial);
        if report.all_pass() {
            Ok(self)
        } else {
            Err(RingError::Axioms(report))
        }
    }

    pub fn from_file(file: &RingFile) -> Result<Self, RingError> {
        let mut add = Vec::with_capacity(file.add.len());
        for (i, row) in file.add.iter().enumerate() {
            let mut cells = Vec::with_capacity(row.len());
            for (j, cell) in row.iter().enumerate() {
                if cell.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(RingError::Malformed(format!(
                        "addition cell ({i},{j}) is not a sorted duplicate-free list"
                    )));
                }
                if let Some(&v) = cell.iter().find(|&&v| v >= MAX_ELEMENTS) {
                    return Err(RingError::Malformed(format!("addition cell ({i},{j}) has index {v}")));
                }
                cells.push(cell.iter().copied().collect());
            }
            add.push(cells);
        }
        Self::from_tables(file.name.clone(), file.labels.clone(), add, file.mul.clone(), file.zero, file.one)
    }

    pub fn to_file(&self) -> RingFile {
        RingFile {
            name: self.name.clone(),
            labels: self.labels.clone(),
            add: (0..self.n).map(|a| (0..self.n).map(|b| self.add(a, b).to_vec()).collect()).collect(),
            mul: (0..self.n).map(|a| (0..self.n).map(|b| self.mul(a, b)).collect()).collect(),
            zero: self.zero,
            one: self.one,
        }
    }

    /// Parses the JSON ring format. Shape errors are reported; axioms are not checked.
    pub fn from_json(text: &str) -> Result<Self, RingError> {
        let file: RingFile = serde_json::from_str(text)?;
        Self::from_file(&file)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("ring file serialises")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// The whole carrier as a set.
    pub fn carrier(&self) -> IndexSet {
        IndexSet::full(self.n)
    }

    /// `a ⊕ b`.
    #[inline]
    pub fn add(&self, a: usize, b: usize) -> IndexSet {
        self.add[a * self.n + b]
    }

    /// `a ∘ b`.
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    /// The additive inverse of `a`.
    ///
    /// # Panics
    /// If `a` has no unique inverse, which [`verify_krasner`] reports.
    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a].expect("element without a unique additive inverse") as usize
    }

    pub fn try_neg(&self, a: usize) -> Option<usize> {
        self.neg[a].map(usize::from)
    }

    /// `a ⊖ b = a ⊕ (-b)`.
    pub fn sub(&self, a: usize, b: usize) -> IndexSet {
        self.add(a, self.neg(b))
    }

    /// `a^k` for `k ≥ 1`.
    pub fn pow(&self, a: usize, k: u32) -> usize {
        assert!(k >= 1, "exponent must be positive");
        (1..k).fold(a, |acc, _| self.mul(acc, a))
    }

    /// Whether every addition cell is a singleton, i.e. an ordinary ring.
    pub fn is_classical(&self) -> bool {
        self.add.iter().all(|c| c.len() == 1)
    }

    /// `⋃_{a∈A, b∈B} a ⊕ b`; empty if either operand is.
    pub fn hyper_sum(&self, lhs: IndexSet, rhs: IndexSet) -> IndexSet {
        let mut out = IndexSet::EMPTY;
        for a in lhs {
            for b in rhs {
                out = out.union(self.add(a, b));
            }
        }
        out
    }

    /// `{a ∘ b : a ∈ A, b ∈ B}`.
    pub fn set_product(&self, lhs: IndexSet, rhs: IndexSet) -> IndexSet {
        let mut out = IndexSet::EMPTY;
        for a in lhs {
            for b in rhs {
                out.insert(self.mul(a, b));
            }
        }
        out
    }

    /// `{r ∘ a : a ∈ A}`.
    pub fn scale_set(&self, r: usize, set: IndexSet) -> IndexSet {
        set.iter().map(|a| self.mul(r, a)).collect()
    }

    /// `{-a : a ∈ A}`.
    pub fn negate_set(&self, set: IndexSet) -> IndexSet {
        set.iter().map(|a| self.neg(a)).collect()
    }

    /// The distinct powers `b, b², b³, …` of `b` in order of first appearance.
    pub fn power_orbit(&self, b: usize) -> Vec<usize> {
        let mut seen = IndexSet::EMPTY;
        let mut orbit = Vec::new();
        let mut x = b;
        while !seen.contains(x) {
            seen.insert(x);
            orbit.push(x);
            x = self.mul(x, b);
        }
        orbit
    }

    /// Whether some positive power of `b` lies in `set`.
    pub fn some_power_in(&self, b: usize, set: IndexSet) -> bool {
        let mut seen = IndexSet::EMPTY;
        let mut x = b;
        while !seen.contains(x) {
            if set.contains(x) {
                return true;
            }
            seen.insert(x);
            x = self.mul(x, b);
        }
        false
    }

    /// Renders a set with element labels, e.g. `{0,2,4}`.
    pub fn show(&self, set: IndexSet) -> String {
        let parts: Vec<&str> = set.iter().map(|a| self.labels[a].as_str()).collect();
        format!("{{{}}}", parts.join(","))
    }

    pub(crate) fn lattice_cache(&self) -> &OnceLock<Vec<Ideal>> {
        &self.lattice
    }
}

impl PartialEq for HyperRing {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.add == other.add
            && self.mul == other.mul
            && self.zero == other.zero
            && self.one == other.one
    }
}

impl Eq for HyperRing {}

impl fmt::Debug for HyperRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HyperRing")
            .field("name", &self.name)
            .field("size", &self.n)
            .field("zero", &self.zero)
            .field("one", &self.one)
            .finish_non_exhaustive()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One verified law with the lexicographically first violating tuple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomCheck {
    pub axiom: String,
    pub status: Status,
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub entries: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub(crate) fn push(&mut self, axiom: &str, witness: Option<Vec<usize>>) {
        self.entries.push(AxiomCheck {
            axiom: axiom.to_string(),
            status: if witness.is_some() { Status::Fail } else { Status::Pass },
            witness: witness.unwrap_or_default(),
        });
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    pub fn get(&self, axiom: &str) -> Option<&AxiomCheck> {
        self.entries.iter().find(|e| e.axiom == axiom)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.all_pass() {
            return write!(f, "all {} axioms pass", self.entries.len());
        }
        let parts: Vec<String> = self.failures().map(|e| format!("{} (witness {:?})", e.axiom, e.witness)).collect();
        write!(f, "{}", parts.join("; "))
    }
}

pub mod axiom {
    pub const ADD_COMMUTATIVE: &str = "add-commutative";
    pub const ADD_ASSOCIATIVE: &str = "add-associative";
    pub const ADDITIVE_IDENTITY: &str = "additive-identity";
    pub const UNIQUE_INVERSE: &str = "unique-inverse";
    pub const REVERSIBLE: &str = "reversible";
    pub const MUL_SEMIGROUP: &str = "mul-commutative-semigroup";
    pub const ZERO_ABSORBING: &str = "zero-absorbing";
    pub const MUL_IDENTITY: &str = "multiplicative-identity";
    pub const DISTRIBUTIVE: &str = "distributive";
}

/// Checks the canonical-hypergroup and Krasner axioms over all element tuples.
pub fn verify_krasner(ring: &HyperRing) -> AxiomReport {
    verify_krasner_with(ring, false)
}

/// As [`verify_krasner`]; `allow_trivial` admits the one-element ring (`one == zero`).
pub fn verify_krasner_with(ring: &HyperRing, allow_trivial: bool) -> AxiomReport {
    let n = ring.size();
    let z = ring.zero();
    let mut report = AxiomReport::default();

    let pairs = || (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)));
    let triples = || pairs().flat_map(move |(a, b)| (0..n).map(move |c| (a, b, c)));

    report.push(
        axiom::ADD_COMMUTATIVE,
        pairs().find(|&(a, b)| ring.add(a, b) != ring.add(b, a)).map(|(a, b)| vec![a, b]),
    );
    report.push(
        axiom::ADD_ASSOCIATIVE,
        triples()
            .find(|&(a, b, c)| {
                let left = ring.hyper_sum(ring.add(a, b), IndexSet::singleton(c));
                let right = ring.hyper_sum(IndexSet::singleton(a), ring.add(b, c));
                left != right
            })
            .map(|(a, b, c)| vec![a, b, c]),
    );
    report.push(
        axiom::ADDITIVE_IDENTITY,
        (0..n)
            .find(|&a| ring.add(a, z) != IndexSet::singleton(a) || ring.add(z, a) != IndexSet::singleton(a))
            .map(|a| vec![a]),
    );
    report.push(axiom::UNIQUE_INVERSE, (0..n).find(|&a| ring.try_neg(a).is_none()).map(|a| vec![a]));
    report.push(
        axiom::REVERSIBLE,
        triples()
            .find(|&(a, b, c)| {
                if !ring.add(a, b).contains(c) {
                    return false;
                }
                match (ring.try_neg(a), ring.try_neg(b)) {
                    (Some(na), Some(nb)) => !ring.add(na, c).contains(b) || !ring.add(c, nb).contains(a),
                    // Without inverses the law is vacuous here; unique-inverse reports it.
                    _ => false,
                }
            })
            .map(|(a, b, c)| vec![a, b, c]),
    );
    let mul_witness = pairs().find(|&(a, b)| ring.mul(a, b) != ring.mul(b, a)).map(|(a, b)| vec![a, b]).or_else(|| {
        triples()
            .find(|&(a, b, c)| ring.mul(ring.mul(a, b), c) != ring.mul(a, ring.mul(b, c)))
            .map(|(a, b, c)| vec![a, b, c])
    });
    report.push(axiom::MUL_SEMIGROUP, mul_witness);
    report.push(axiom::ZERO_ABSORBING, (0..n).find(|&a| ring.mul(a, z) != z || ring.mul(z, a) != z).map(|a| vec![a]));
    let identity_witness = if ring.one() == z && !allow_trivial {
        Some(vec![ring.one()])
    } else {
        (0..n).find(|&a| ring.mul(a, ring.one()) != a || ring.mul(ring.one(), a) != a).map(|a| vec![a])
    };
    report.push(axiom::MUL_IDENTITY, identity_witness);
    report.push(
        axiom::DISTRIBUTIVE,
        triples()
            .find(|&(a, b, c)| {
                let sum = ring.add(b, c);
                let right_lhs: IndexSet = sum.iter().map(|x| ring.mul(x, a)).collect();
                let left_lhs: IndexSet = sum.iter().map(|x| ring.mul(a, x)).collect();
                right_lhs != ring.add(ring.mul(b, a), ring.mul(c, a))
                    || left_lhs != ring.add(ring.mul(a, b), ring.mul(a, c))
            })
            .map(|(a, b, c)| vec![a, b, c]),
    );
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::zmod;

    fn krasner_k() -> HyperRing {
        let s = |v: &[usize]| v.iter().copied().collect::<IndexSet>();
        HyperRing::from_tables(
            "K",
            vec!["0".into(), "1".into()],
            vec![vec![s(&[0]), s(&[1])], vec![s(&[1]), s(&[0, 1])]],
            vec![vec![0, 0], vec![0, 1]],
            0,
            1,
        )
        .unwrap()
    }

    #[test]
    fn krasner_hyperfield_passes() {
        let report = verify_krasner(&krasner_k());
        assert!(report.all_pass(), "{report}");
        assert_eq!(report.entries.len(), 9);
    }

    #[test]
    fn mutated_k_loses_inverse() {
        let mut file = krasner_k().to_file();
        file.add[1][1] = vec![1];
        let ring = HyperRing::from_file(&file).unwrap();
        let report = verify_krasner(&ring);
        let entry = report.get(axiom::UNIQUE_INVERSE).unwrap();
        assert_eq!(entry.status, Status::Fail);
        assert_eq!(entry.witness, vec![1]);
    }

    #[test]
    fn classical_zmod6_passes() {
        assert!(verify_krasner(&zmod(6)).all_pass());
    }

    #[test]
    fn set_operations() {
        let k = krasner_k();
        let one = IndexSet::singleton(1);
        assert_eq!(k.hyper_sum(one, one).to_vec(), vec![0, 1]);
        assert_eq!(k.hyper_sum(IndexSet::singleton(0), one), one);
        assert!(k.hyper_sum(IndexSet::EMPTY, one).is_empty());
        assert_eq!(k.negate_set(one), one);

        let z6 = zmod(6);
        let s = |v: &[usize]| v.iter().copied().collect::<IndexSet>();
        assert_eq!(z6.set_product(s(&[2, 4]), s(&[3])), s(&[0]));
        assert_eq!(z6.set_product(s(&[1]), s(&[2, 5])), s(&[2, 5]));
        assert_eq!(z6.set_product(s(&[0]), s(&[2, 5])), s(&[0]));
        assert_eq!(z6.negate_set(s(&[2])), s(&[4]));
        assert_eq!(z6.negate_set(s(&[0])), s(&[0]));
    }

    #[test]
    fn malformed_inputs() {
        let mut file = krasner_k().to_file();
        file.add[0][1] = vec![];
        assert!(matches!(HyperRing::from_file(&file), Err(RingError::Malformed(_))));

        let mut file = krasner_k().to_file();
        file.add[1][1] = vec![1, 0];
        assert!(matches!(HyperRing::from_file(&file), Err(RingError::Malformed(_))));

        let mut file = krasner_k().to_file();
        file.mul[1][1] = 7;
        assert!(matches!(HyperRing::from_file(&file), Err(RingError::Malformed(_))));

        let mut file = krasner_k().to_file();
        file.mul.pop();
        assert!(matches!(HyperRing::from_file(&file), Err(RingError::Malformed(_))));
    }

    #[test]
    fn power_orbit_is_eventually_periodic() {
        let z12 = zmod(12);
        assert_eq!(z12.power_orbit(2), vec![2, 4, 8]);
        assert_eq!(z12.power_orbit(0), vec![0]);
        assert!(z12.some_power_in(6, IndexSet::singleton(0)));
        assert!(!z12.some_power_in(5, IndexSet::singleton(0)));
    }

    #[test]
    fn json_roundtrip() {
        let k = krasner_k();
        let back = HyperRing::from_json(&k.to_json()).unwrap();
        assert_eq!(back, k);
        assert_eq!(back.labels(), k.labels());
    }
}
