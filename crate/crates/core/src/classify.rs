//! Decision procedures for the primality notions and their alternate characterisations.
//!
//! Everything reduces to one test: a proper hyperideal `N` is φ-δ-primary when
//! `a ∘ b ∈ N − φ(N)` forces `a ∈ N` or `b ∈ δ(N)`. The named notions are the
//! special cases `δ = δ₀` (φ-prime), `δ = δ₁` (φ-primary) and `φ = φ_∅`
//! (δ-primary), with φ ranging over `φ_∅, φ₀, φ₂, φ_n, φ_ω`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ideals::{colon_set, colon_set_by, enumerate_hyperideals, power_chain, Ideal};
use crate::maps::{eval_expansion, eval_reduction, Expansion, MapError, Reduced, Reduction};
use crate::ring::HyperRing;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("{0} is not a proper hyperideal")]
    Improper(Ideal),
    #[error(transparent)]
    Map(#[from] MapError),
}

/// What made a characterisation fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `a ∘ b ∈ N − φ(N)` with `a ∉ N` and `b ∉ δ(N)`.
    Pair { a: usize, b: usize },
    /// An element `a ∉ δ(N)` whose colon ideal breaks the characterisation.
    Element { a: usize },
    /// Hyperideals `K, L` with `K∘L ⊆ N`, `K∘L ⊄ φ(N)`, `K ⊄ N`, `L ⊄ δ(N)`.
    Ideals { k: Ideal, l: Ideal },
    /// A hyperideal `M ⊄ δ(N)` whose colon breaks the characterisation.
    Ideal { m: Ideal },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Pair { a, b } => write!(f, "({a},{b})"),
            Witness::Element { a } => write!(f, "a={a}"),
            Witness::Ideals { k, l } => write!(f, "K={k}, L={l}"),
            Witness::Ideal { m } => write!(f, "M={m}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Verdict {
    pub const TRUE: Verdict = Verdict { holds: true, witness: None };

    fn from_witness(witness: Option<Witness>) -> Self {
        Verdict { holds: witness.is_none(), witness }
    }
}

/// The equivalent forms of φ-δ-primariness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// The defining implication over all element pairs.
    Definition,
    /// `(N : a) = N ∪ (φ(N) : a)` for every `a ∉ δ(N)`.
    ColonUnion,
    /// `(N : a) = N` or `(N : a) = (φ(N) : a)` for every `a ∉ δ(N)`.
    ColonDichotomy,
    /// `K∘L ⊆ N`, `K∘L ⊄ φ(N)` ⇒ `K ⊆ N` or `L ⊆ δ(N)` for all hyperideals.
    IdealPairs,
    /// `(N : M) = N` or `(N : M) = (φ(N) : M)` for every hyperideal `M ⊄ δ(N)`.
    ColonIdeal,
}

impl Variant {
    pub const ALL: [Variant; 5] =
        [Variant::Definition, Variant::ColonUnion, Variant::ColonDichotomy, Variant::IdealPairs, Variant::ColonIdeal];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Definition => "definition",
            Variant::ColonUnion => "colon_union",
            Variant::ColonDichotomy => "colon_dichotomy",
            Variant::IdealPairs => "ideal_pairs",
            Variant::ColonIdeal => "colon_ideal",
        }
    }
}

impl std::str::FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Variant::ALL.into_iter().find(|v| v.name() == s).ok_or_else(|| format!("unknown variant `{s}`"))
    }
}

fn require_proper(ring: &HyperRing, ideal: Ideal) -> Result<(), ClassifyError> {
    if ideal.is_proper(ring) {
        Ok(())
    } else {
        Err(ClassifyError::Improper(ideal))
    }
}

/// The defining test with `φ(N)` and `δ(N)` already evaluated.
///
/// Does not check properness; callers that accept user input should go
/// through [`is_phi_delta_primary`].
pub fn primary_with(ring: &HyperRing, ideal: Ideal, reduced: Reduced, expanded: Ideal) -> Verdict {
    let n = ideal.members();
    let target = n.difference(reduced.members());
    let expanded = expanded.members();
    for a in ring.elements() {
        if n.contains(a) {
            continue;
        }
        for b in ring.elements() {
            if target.contains(ring.mul(a, b)) && !expanded.contains(b) {
                return Verdict::from_witness(Some(Witness::Pair { a, b }));
            }
        }
    }
    Verdict::TRUE
}

pub fn is_phi_delta_primary(
    ring: &HyperRing,
    ideal: Ideal,
    phi: &Reduction,
    delta: &Expansion,
) -> Result<Verdict, ClassifyError> {
    require_proper(ring, ideal)?;
    let reduced = eval_reduction(phi, ring, ideal)?;
    let expanded = eval_expansion(delta, ring, ideal)?;
    Ok(primary_with(ring, ideal, reduced, expanded))
}

pub fn is_phi_prime(ring: &HyperRing, ideal: Ideal, phi: &Reduction) -> Result<Verdict, ClassifyError> {
    is_phi_delta_primary(ring, ideal, phi, &Expansion::Identity)
}

/// `b^k ∈ N` for some `k` is decided on the power orbit of `b`.
pub fn is_phi_primary(ring: &HyperRing, ideal: Ideal, phi: &Reduction) -> Result<Verdict, ClassifyError> {
    require_proper(ring, ideal)?;
    let reduced = eval_reduction(phi, ring, ideal)?;
    let n = ideal.members();
    let target = n.difference(reduced.members());
    for a in ring.elements().filter(|&a| !n.contains(a)) {
        for b in ring.elements() {
            if target.contains(ring.mul(a, b)) && !ring.some_power_in(b, n) {
                return Ok(Verdict::from_witness(Some(Witness::Pair { a, b })));
            }
        }
    }
    Ok(Verdict::TRUE)
}

pub fn is_delta_primary(ring: &HyperRing, ideal: Ideal, delta: &Expansion) -> Result<Verdict, ClassifyError> {
    is_phi_delta_primary(ring, ideal, &Reduction::Empty, delta)
}

pub fn is_prime(ring: &HyperRing, ideal: Ideal) -> Result<Verdict, ClassifyError> {
    is_phi_prime(ring, ideal, &Reduction::Empty)
}

pub fn is_primary(ring: &HyperRing, ideal: Ideal) -> Result<Verdict, ClassifyError> {
    is_phi_primary(ring, ideal, &Reduction::Empty)
}

pub fn is_weakly_prime(ring: &HyperRing, ideal: Ideal) -> Result<Verdict, ClassifyError> {
    is_phi_prime(ring, ideal, &Reduction::Zero)
}

pub fn is_weakly_primary(ring: &HyperRing, ideal: Ideal) -> Result<Verdict, ClassifyError> {
    is_phi_primary(ring, ideal, &Reduction::Zero)
}

pub fn is_almost_prime(ring: &HyperRing, ideal: Ideal) -> Result<Verdict, ClassifyError> {
    is_phi_prime(ring, ideal, &Reduction::Power(2))
}

pub fn is_almost_primary(ring: &HyperRing, ideal: Ideal) -> Result<Verdict, ClassifyError> {
    is_phi_primary(ring, ideal, &Reduction::Power(2))
}

pub fn is_n_almost_prime(ring: &HyperRing, ideal: Ideal, n: u32) -> Result<Verdict, ClassifyError> {
    is_phi_prime(ring, ideal, &Reduction::Power(n))
}

pub fn is_n_almost_primary(ring: &HyperRing, ideal: Ideal, n: u32) -> Result<Verdict, ClassifyError> {
    is_phi_primary(ring, ideal, &Reduction::Power(n))
}

pub fn is_w_prime(ring: &HyperRing, ideal: Ideal) -> Result<Verdict, ClassifyError> {
    is_phi_prime(ring, ideal, &Reduction::Omega)
}

pub fn is_w_primary(ring: &HyperRing, ideal: Ideal) -> Result<Verdict, ClassifyError> {
    is_phi_primary(ring, ideal, &Reduction::Omega)
}

/// Decides φ-δ-primariness through one of the equivalent characterisations.
///
/// For `φ = φ_∅` the colon `(φ(N) : a)` is the empty set.
pub fn phi_delta_primary_via(
    ring: &HyperRing,
    ideal: Ideal,
    phi: &Reduction,
    delta: &Expansion,
    variant: Variant,
) -> Result<Verdict, ClassifyError> {
    require_proper(ring, ideal)?;
    let reduced = eval_reduction(phi, ring, ideal)?;
    let expanded = eval_expansion(delta, ring, ideal)?;
    Ok(via_with(ring, ideal, reduced, expanded, variant))
}

/// [`phi_delta_primary_via`] with `φ(N)` and `δ(N)` already evaluated.
pub fn via_with(ring: &HyperRing, ideal: Ideal, reduced: Reduced, expanded: Ideal, variant: Variant) -> Verdict {
    let n = ideal.members();
    let r = reduced.members();
    let d = expanded.members();
    let outside_delta = || ring.elements().filter(move |&a| !d.contains(a));
    let witness = match variant {
        Variant::Definition => return primary_with(ring, ideal, reduced, expanded),
        Variant::ColonUnion => outside_delta()
            .find(|&a| colon_set(ring, n, a) != n.union(colon_set(ring, r, a)))
            .map(|a| Witness::Element { a }),
        Variant::ColonDichotomy => outside_delta()
            .find(|&a| {
                let colon = colon_set(ring, n, a);
                colon != n && colon != colon_set(ring, r, a)
            })
            .map(|a| Witness::Element { a }),
        Variant::IdealPairs => {
            let lattice = enumerate_hyperideals(ring);
            lattice
                .iter()
                .flat_map(|&k| lattice.iter().map(move |&l| (k, l)))
                .find(|&(k, l)| {
                    let product = ring.set_product(k.members(), l.members());
                    product.is_subset(n)
                        && !product.is_subset(r)
                        && !k.members().is_subset(n)
                        && !l.members().is_subset(d)
                })
                .map(|(k, l)| Witness::Ideals { k, l })
        }
        Variant::ColonIdeal => enumerate_hyperideals(ring)
            .iter()
            .filter(|m| !m.members().is_subset(d))
            .find(|m| {
                let colon = colon_set_by(ring, n, m.members());
                colon != n && colon != colon_set_by(ring, r, m.members())
            })
            .map(|&m| Witness::Ideal { m }),
    };
    Verdict::from_witness(witness)
}

/// Verdicts for the user-selected `φ` and `δ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Selected {
    pub phi: String,
    pub delta: String,
    pub phi_prime: Verdict,
    pub phi_primary: Verdict,
    pub delta_primary: Verdict,
    pub phi_delta_primary: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub ideal: Ideal,
    pub prime: Verdict,
    pub weakly_prime: Verdict,
    pub w_prime: Verdict,
    pub n_almost_prime: Vec<(u32, Verdict)>,
    pub almost_prime: Verdict,
    pub primary: Verdict,
    pub weakly_primary: Verdict,
    pub w_primary: Verdict,
    pub n_almost_primary: Vec<(u32, Verdict)>,
    pub almost_primary: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub selected: Option<Selected>,
}

/// The `n` range where n-almost notions can differ: `2 ..= k + 1` with `Nᵏ = Nᵏ⁺¹`.
pub fn default_n_range(ring: &HyperRing, ideal: Ideal) -> std::ops::RangeInclusive<u32> {
    let k = power_chain(ring, ideal).len() as u32;
    2..=(k + 1).max(2)
}

/// Every verdict for a proper hyperideal; `select` adds a chosen `(φ, δ)`.
pub fn classify_all(
    ring: &HyperRing,
    ideal: Ideal,
    n_range: Option<std::ops::RangeInclusive<u32>>,
    select: Option<(&Reduction, &Expansion)>,
) -> Result<Classification, ClassifyError> {
    require_proper(ring, ideal)?;
    let range = n_range.unwrap_or_else(|| default_n_range(ring, ideal));
    let selected = match select {
        Some((phi, delta)) => Some(Selected {
            phi: phi.to_string(),
            delta: delta.to_string(),
            phi_prime: is_phi_prime(ring, ideal, phi)?,
            phi_primary: is_phi_primary(ring, ideal, phi)?,
            delta_primary: is_delta_primary(ring, ideal, delta)?,
            phi_delta_primary: is_phi_delta_primary(ring, ideal, phi, delta)?,
        }),
        None => None,
    };
    Ok(Classification {
        ideal,
        prime: is_prime(ring, ideal)?,
        weakly_prime: is_weakly_prime(ring, ideal)?,
        w_prime: is_w_prime(ring, ideal)?,
        n_almost_prime: range
            .clone()
            .map(|n| is_n_almost_prime(ring, ideal, n).map(|v| (n, v)))
            .collect::<Result<_, _>>()?,
        almost_prime: is_almost_prime(ring, ideal)?,
        primary: is_primary(ring, ideal)?,
        weakly_primary: is_weakly_primary(ring, ideal)?,
        w_primary: is_w_primary(ring, ideal)?,
        n_almost_primary: range
            .map(|n| is_n_almost_primary(ring, ideal, n).map(|v| (n, v)))
            .collect::<Result<_, _>>()?,
        almost_primary: is_almost_primary(ring, ideal)?,
        selected,
    })
}
