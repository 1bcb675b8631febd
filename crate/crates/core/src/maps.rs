//! Reduction (`φ`) and expansion (`δ`) functions on the hyperideal lattice.
//!
//! A reduction maps each hyperideal to a sub-hyperideal or to the distinguished
//! empty value; an expansion maps each hyperideal to a super-hyperideal. Both
//! must be monotone. The catalog members are parameter-free or carry a fixed
//! hyperideal of the ring they are evaluated on; `Custom` variants are
//! explicit lookup tables, used for induced maps on quotients and products.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ideals::{
    annihilator, colon_ideal, enumerate_hyperideals, ideal_power, ideal_sum, omega_power, parse_ideal, radical, Ideal,
};
use crate::ring::{HyperRing, Status};
use crate::set::IndexSet;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MapError {
    #[error("custom map has no entry for {0}")]
    MissingEntry(Ideal),
    #[error("cannot parse map spec `{0}`: {1}")]
    Parse(String, String),
}

/// Value of a reduction: a hyperideal or the empty value `∅`.
///
/// `∅` is not a hyperideal. Its only meaningful use is `N − φ(N)`, which
/// then removes nothing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Reduced {
    Empty,
    Ideal(Ideal),
}

impl Reduced {
    /// Member set; empty for `∅`.
    pub fn members(self) -> IndexSet {
        match self {
            Reduced::Empty => IndexSet::EMPTY,
            Reduced::Ideal(i) => i.members(),
        }
    }

    pub fn contains(self, a: usize) -> bool {
        self.members().contains(a)
    }

    pub fn ideal(self) -> Option<Ideal> {
        match self {
            Reduced::Empty => None,
            Reduced::Ideal(i) => Some(i),
        }
    }

    pub fn is_empty_value(self) -> bool {
        matches!(self, Reduced::Empty)
    }

    /// `∅` lies below everything; an ideal never lies below `∅`.
    pub fn le(self, other: Reduced) -> bool {
        match (self, other) {
            (Reduced::Empty, _) => true,
            (Reduced::Ideal(_), Reduced::Empty) => false,
            (Reduced::Ideal(a), Reduced::Ideal(b)) => a.is_subset(b),
        }
    }
}

impl fmt::Display for Reduced {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reduced::Empty => f.write_str("∅"),
            Reduced::Ideal(i) => write!(f, "{i}"),
        }
    }
}

/// A reduction function `φ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reduction {
    /// `φ_∅(N) = ∅`
    Empty,
    /// `φ₀(N) = 0`
    Zero,
    /// `φ₁(N) = N`
    Identity,
    /// `φ_k(N) = Nᵏ`
    Power(u32),
    /// `φ_ω(N) = ⋂ Nⁿ`
    Omega,
    Custom(BTreeMap<Ideal, Reduced>),
}

/// An expansion function `δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expansion {
    /// `δ₀(N) = N`
    Identity,
    /// `δ₁(N) = √N`
    Radical,
    /// `N ↦ (N : M)`
    Residual(Ideal),
    /// `N ↦ ann(ann(N))`
    DoubleAnnihilator,
    /// `N ↦ N ⊕ M`
    Translate(Ideal),
    /// Pointwise intersection of the listed expansions.
    Intersection(Vec<Expansion>),
    Custom(BTreeMap<Ideal, Ideal>),
}

impl Reduction {
    /// The reductions swept by default: `φ_∅, φ₀, φ₂, φ₃, φ_ω, φ₁`.
    pub fn catalog() -> Vec<Reduction> {
        vec![
            Reduction::Empty,
            Reduction::Zero,
            Reduction::Power(2),
            Reduction::Power(3),
            Reduction::Omega,
            Reduction::Identity,
        ]
    }

    /// Whether this is one of the ring-independent catalog members.
    pub fn is_catalog(&self) -> bool {
        !matches!(self, Reduction::Custom(_))
    }
}

impl Expansion {
    /// Every catalog expansion of `ring` that passes [`verify_expansion`]:
    /// `δ₀`, `δ₁`, `δ_ann`, then `N ⊕ M` and `(N : M)` for each hyperideal `M`.
    pub fn catalog(ring: &HyperRing) -> Vec<Expansion> {
        let mut out = vec![Expansion::Identity, Expansion::Radical, Expansion::DoubleAnnihilator];
        for &m in enumerate_hyperideals(ring) {
            out.push(Expansion::Translate(m));
        }
        for &m in enumerate_hyperideals(ring) {
            out.push(Expansion::Residual(m));
        }
        out.retain(|d| verify_expansion(d, ring).all_pass());
        out
    }

    /// `δ₀`, `δ₁` and `N ⊕ M` for each hyperideal `M`.
    pub fn basic_catalog(ring: &HyperRing) -> Vec<Expansion> {
        let mut out = vec![Expansion::Identity, Expansion::Radical];
        out.extend(enumerate_hyperideals(ring).iter().map(|&m| Expansion::Translate(m)));
        out
    }

    /// Whether the definition needs no ring-specific parameter.
    pub fn is_parameter_free(&self) -> bool {
        match self {
            Expansion::Identity | Expansion::Radical | Expansion::DoubleAnnihilator => true,
            Expansion::Intersection(parts) => parts.iter().all(Expansion::is_parameter_free),
            Expansion::Residual(_) | Expansion::Translate(_) | Expansion::Custom(_) => false,
        }
    }
}

impl fmt::Display for Reduction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reduction::Empty => f.write_str("empty"),
            Reduction::Zero => f.write_str("zero"),
            Reduction::Identity => f.write_str("identity"),
            Reduction::Power(k) => write!(f, "pow:{k}"),
            Reduction::Omega => f.write_str("omega"),
            Reduction::Custom(_) => f.write_str("custom"),
        }
    }
}

fn members_arg(i: &Ideal) -> String {
    let v: Vec<String> = i.members().iter().map(|a| a.to_string()).collect();
    v.join(",")
}

impl fmt::Display for Expansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expansion::Identity => f.write_str("id"),
            Expansion::Radical => f.write_str("rad"),
            Expansion::Residual(m) => write!(f, "res:{}", members_arg(m)),
            Expansion::DoubleAnnihilator => f.write_str("ann2"),
            Expansion::Translate(m) => write!(f, "add:{}", members_arg(m)),
            Expansion::Intersection(parts) => {
                let names: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "meet({})", names.join(";"))
            }
            Expansion::Custom(_) => f.write_str("custom"),
        }
    }
}

impl FromStr for Reduction {
    type Err = MapError;

    /// `empty | zero | identity | pow:k | omega`
    fn from_str(s: &str) -> Result<Self, MapError> {
        let err = |why: &str| MapError::Parse(s.to_string(), why.to_string());
        match s {
            "empty" => Ok(Reduction::Empty),
            "zero" => Ok(Reduction::Zero),
            "identity" => Ok(Reduction::Identity),
            "omega" => Ok(Reduction::Omega),
            _ => {
                let k = s.strip_prefix("pow:").ok_or_else(|| err("unknown reduction"))?;
                let k: u32 = k.parse().map_err(|_| err("exponent is not a number"))?;
                if k < 2 {
                    return Err(err("exponent must be at least 2"));
                }
                Ok(Reduction::Power(k))
            }
        }
    }
}

/// `id | rad | res:<ideal> | ann2 | add:<ideal>`, with ideals as `0,4,8`.
pub fn parse_expansion(ring: &HyperRing, s: &str) -> Result<Expansion, MapError> {
    let err = |why: String| MapError::Parse(s.to_string(), why);
    match s {
        "id" => Ok(Expansion::Identity),
        "rad" => Ok(Expansion::Radical),
        "ann2" => Ok(Expansion::DoubleAnnihilator),
        _ => {
            if let Some(arg) = s.strip_prefix("res:") {
                Ok(Expansion::Residual(parse_ideal(ring, arg).map_err(err)?))
            } else if let Some(arg) = s.strip_prefix("add:") {
                Ok(Expansion::Translate(parse_ideal(ring, arg).map_err(err)?))
            } else {
                Err(err("unknown expansion".into()))
            }
        }
    }
}

pub fn eval_reduction(phi: &Reduction, ring: &HyperRing, ideal: Ideal) -> Result<Reduced, MapError> {
    Ok(match phi {
        Reduction::Empty => Reduced::Empty,
        Reduction::Zero => Reduced::Ideal(Ideal::zero(ring)),
        Reduction::Identity => Reduced::Ideal(ideal),
        Reduction::Power(k) => Reduced::Ideal(ideal_power(ring, ideal, (*k).max(1)).expect("positive exponent")),
        Reduction::Omega => Reduced::Ideal(omega_power(ring, ideal)),
        Reduction::Custom(table) => *table.get(&ideal).ok_or(MapError::MissingEntry(ideal))?,
    })
}

pub fn eval_expansion(delta: &Expansion, ring: &HyperRing, ideal: Ideal) -> Result<Ideal, MapError> {
    Ok(match delta {
        Expansion::Identity => ideal,
        Expansion::Radical => radical(ring, ideal),
        Expansion::Residual(m) => colon_ideal(ring, ideal, *m),
        Expansion::DoubleAnnihilator => annihilator(ring, annihilator(ring, ideal)),
        Expansion::Translate(m) => ideal_sum(ring, ideal, *m).expect("parameter belongs to the ring"),
        Expansion::Intersection(parts) => {
            let mut acc = ring.carrier();
            for p in parts {
                acc = acc.intersection(eval_expansion(p, ring, ideal)?.members());
            }
            Ideal::trusted(acc)
        }
        Expansion::Custom(table) => *table.get(&ideal).ok_or(MapError::MissingEntry(ideal))?,
    })
}

/// A law checked over the whole lattice, with the first offending ideals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawCheck {
    pub law: String,
    pub status: Status,
    pub witness: Vec<Ideal>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapReport {
    pub entries: Vec<LawCheck>,
}

impl MapReport {
    fn push(&mut self, law: &str, witness: Option<Vec<Ideal>>) {
        self.entries.push(LawCheck {
            law: law.to_string(),
            status: if witness.is_some() { Status::Fail } else { Status::Pass },
            witness: witness.unwrap_or_default(),
        });
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.status == Status::Pass)
    }

    pub fn get(&self, law: &str) -> Option<&LawCheck> {
        self.entries.iter().find(|e| e.law == law)
    }
}

fn lattice_pairs(ring: &HyperRing) -> impl Iterator<Item = (Ideal, Ideal)> + '_ {
    let lattice = enumerate_hyperideals(ring);
    lattice.iter().flat_map(move |&n| lattice.iter().map(move |&m| (n, m)))
}

/// Checks `φ(N) ⊆ N` and `N ⊆ M ⇒ φ(N) ⊆ φ(M)` over the lattice.
///
/// A custom table missing an entry fails the `complete` law.
pub fn verify_reduction(phi: &Reduction, ring: &HyperRing) -> MapReport {
    let mut report = MapReport::default();
    let lattice = enumerate_hyperideals(ring);
    let missing = lattice.iter().find(|&&n| eval_reduction(phi, ring, n).is_err()).map(|&n| vec![n]);
    let complete = missing.is_none();
    report.push("complete", missing);
    if !complete {
        return report;
    }
    let value = |n| eval_reduction(phi, ring, n).unwrap();
    report.push("contained", lattice.iter().find(|&&n| !value(n).le(Reduced::Ideal(n))).map(|&n| vec![n]));
    report.push(
        "monotone",
        lattice_pairs(ring).find(|&(n, m)| n.is_subset(m) && !value(n).le(value(m))).map(|(n, m)| vec![n, m]),
    );
    report
}

/// Checks `N ⊆ δ(N)` and `N ⊆ M ⇒ δ(N) ⊆ δ(M)` over the lattice.
pub fn verify_expansion(delta: &Expansion, ring: &HyperRing) -> MapReport {
    let mut report = MapReport::default();
    let lattice = enumerate_hyperideals(ring);
    let missing = lattice.iter().find(|&&n| eval_expansion(delta, ring, n).is_err()).map(|&n| vec![n]);
    let complete = missing.is_none();
    report.push("complete", missing);
    if !complete {
        return report;
    }
    let value = |n| eval_expansion(delta, ring, n).unwrap();
    report.push("extensive", lattice.iter().find(|&&n| !n.is_subset(value(n))).map(|&n| vec![n]));
    report.push(
        "monotone",
        lattice_pairs(ring).find(|&(n, m)| n.is_subset(m) && !value(n).is_subset(value(m))).map(|(n, m)| vec![n, m]),
    );
    report
}

/// The optional ring-theoretic third law `δ(K ∩ L) = δ(K) ∩ δ(L)`.
pub fn verify_expansion_meet(delta: &Expansion, ring: &HyperRing) -> MapReport {
    let mut report = MapReport::default();
    let value = |n| eval_expansion(delta, ring, n);
    let witness = lattice_pairs(ring).find(|&(k, l)| {
        let meet = Ideal::trusted(k.members().intersection(l.members()));
        match (value(meet), value(k), value(l)) {
            (Ok(m), Ok(a), Ok(b)) => m.members() != a.members().intersection(b.members()),
            _ => true,
        }
    });
    report.push("meet-preserving", witness.map(|(k, l)| vec![k, l]));
    report
}

/// `φ ≤ σ` pointwise over the lattice.
pub fn reduction_leq(lhs: &Reduction, rhs: &Reduction, ring: &HyperRing) -> bool {
    enumerate_hyperideals(ring).iter().all(|&n| match (eval_reduction(lhs, ring, n), eval_reduction(rhs, ring, n)) {
        (Ok(a), Ok(b)) => a.le(b),
        _ => false,
    })
}

/// `δ ≤ γ` pointwise over the lattice.
pub fn expansion_leq(lhs: &Expansion, rhs: &Expansion, ring: &HyperRing) -> bool {
    enumerate_hyperideals(ring).iter().all(|&n| match (eval_expansion(lhs, ring, n), eval_expansion(rhs, ring, n)) {
        (Ok(a), Ok(b)) => a.is_subset(b),
        _ => false,
    })
}
