//! Builders for new hyperrings and the maps between them.
//!
//! Quotients, direct products, unit-subgroup quotients of classical rings,
//! homomorphisms with ideal transport, and the splitting of a hyperring along
//! an idempotent.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::ideals::{enumerate_hyperideals, ideal_sum, Ideal, IdealError};
use crate::maps::{eval_expansion, eval_reduction, Expansion, MapError, Reduced, Reduction};
use crate::ring::{AxiomReport, HyperRing, RingError};
use crate::set::{IndexSet, MAX_ELEMENTS};

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error("{0} is not a subgroup of the unit group")]
    NotUnitSubgroup(IndexSet),
    #[error("element map is not a homomorphism: {0}")]
    NotHomomorphism(AxiomReport),
    #[error("image transport needs a surjective map")]
    NotSurjective,
    #[error("kernel {kernel} is not contained in {ideal}")]
    KernelNotContained { kernel: Ideal, ideal: Ideal },
    #[error("{ideal} does not contain the modulus {modulus}")]
    NotContaining { ideal: Ideal, modulus: Ideal },
    #[error("product of {0} and {1} elements exceeds the {MAX_ELEMENTS}-element limit")]
    TooLarge(usize, usize),
    #[error("{0} is not a product of component hyperideals")]
    NotAProduct(Ideal),
    #[error("element {0} is not idempotent")]
    NotIdempotent(usize),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

/// Embeds a classical commutative ring given by its tables.
pub fn from_classical_ring(
    name: impl Into<String>,
    labels: Vec<String>,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
    zero: usize,
    one: usize,
) -> Result<HyperRing, RingError> {
    let add = add.into_iter().map(|row| row.into_iter().map(IndexSet::singleton).collect()).collect();
    HyperRing::new(name, labels, add, mul, zero, one)
}

/// The integers modulo `n`, for `2 <= n <= 64`.
pub fn zmod(n: usize) -> HyperRing {
    assert!((2..=MAX_ELEMENTS).contains(&n), "zmod needs 2 <= n <= {MAX_ELEMENTS}");
    from_classical_ring(
        format!("Z_{n}"),
        (0..n).map(|a| a.to_string()).collect(),
        (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect(),
        (0..n).map(|a| (0..n).map(|b| a * b % n).collect()).collect(),
        0,
        1,
    )
    .expect("Z/n is a ring")
}

/// Krasner's quotient `R/G` by a subgroup `G` of the units, with the orbit map `R → R/G`.
///
/// Orbits are numbered by their least element.
pub fn unit_quotient_with_map(ring: &HyperRing, group: IndexSet) -> Result<(HyperRing, Vec<usize>), ConstructError> {
    let is_unit = |g: usize| ring.elements().any(|h| ring.mul(g, h) == ring.one());
    let closed = group.iter().all(|g| group.iter().all(|h| group.contains(ring.mul(g, h))));
    if !group.within(ring.size()) || !group.contains(ring.one()) || !closed || !group.iter().all(is_unit) {
        return Err(ConstructError::NotUnitSubgroup(group));
    }
    let mut orbit_of = vec![usize::MAX; ring.size()];
    let mut reps = Vec::new();
    for a in ring.elements() {
        if orbit_of[a] == usize::MAX {
            for g in group {
                orbit_of[ring.mul(a, g)] = reps.len();
            }
            reps.push(a);
        }
    }
    let k = reps.len();
    let add = (0..k)
        .map(|x| {
            (0..k)
                .map(|y| {
                    let (a, b) = (reps[x], reps[y]);
                    let mut cell = IndexSet::EMPTY;
                    for g in group {
                        for h in group {
                            for c in ring.add(ring.mul(a, g), ring.mul(b, h)) {
                                cell.insert(orbit_of[c]);
                            }
                        }
                    }
                    cell
                })
                .collect()
        })
        .collect();
    let mul = (0..k).map(|x| (0..k).map(|y| orbit_of[ring.mul(reps[x], reps[y])]).collect()).collect();
    let labels = reps.iter().map(|&a| ring.label(a).to_string()).collect();
    let name = format!("{}/{}", ring.name(), ring.show(group));
    let quotient =
        HyperRing::from_tables(name, labels, add, mul, orbit_of[ring.zero()], orbit_of[ring.one()])?.checked(false)?;
    Ok((quotient, orbit_of))
}

pub fn unit_quotient(ring: &HyperRing, group: IndexSet) -> Result<HyperRing, ConstructError> {
    unit_quotient_with_map(ring, group).map(|(q, _)| q)
}

/// `R/M` with its cosets `a ⊕ M` numbered by least representative.
#[derive(Clone, Debug)]
pub struct QuotientPresentation {
    modulus: Ideal,
    reps: Vec<usize>,
    class_of: Vec<usize>,
    ring: HyperRing,
}

pub fn quotient(parent: &HyperRing, modulus: Ideal) -> Result<QuotientPresentation, ConstructError> {
    if !modulus.members().within(parent.size()) {
        return Err(IdealError::RingMismatch(modulus.members(), parent.size()).into());
    }
    let m = modulus.members();
    let mut class_of = vec![usize::MAX; parent.size()];
    let mut reps = Vec::new();
    for a in parent.elements() {
        if class_of[a] == usize::MAX {
            for c in parent.hyper_sum(IndexSet::singleton(a), m) {
                class_of[c] = reps.len();
            }
            reps.push(a);
        }
    }
    let k = reps.len();
    let add = (0..k)
        .map(|x| (0..k).map(|y| parent.add(reps[x], reps[y]).iter().map(|c| class_of[c]).collect()).collect())
        .collect();
    let mul = (0..k).map(|x| (0..k).map(|y| class_of[parent.mul(reps[x], reps[y])]).collect()).collect();
    let labels = reps.iter().map(|&a| parent.label(a).to_string()).collect();
    let name = format!("{}/{}", parent.name(), parent.show(m));
    let trivial = k == 1;
    let ring = HyperRing::from_tables(name, labels, add, mul, class_of[parent.zero()], class_of[parent.one()])?
        .checked(trivial)?;
    Ok(QuotientPresentation { modulus, reps, class_of, ring })
}

impl QuotientPresentation {
    pub fn ring(&self) -> &HyperRing {
        &self.ring
    }

    pub fn into_ring(self) -> HyperRing {
        self.ring
    }

    pub fn modulus(&self) -> Ideal {
        self.modulus
    }

    /// Least element of each coset, indexed by quotient element.
    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.class_of[a]
    }

    /// `N ↦ N/M`; requires `M ⊆ N`.
    pub fn project(&self, ideal: Ideal) -> Result<Ideal, ConstructError> {
        if !self.modulus.is_subset(ideal) {
            return Err(ConstructError::NotContaining { ideal, modulus: self.modulus });
        }
        Ok(Ideal::trusted(ideal.members().iter().map(|a| self.class_of[a]).collect()))
    }

    /// The hyperideal of the parent whose image is the given quotient hyperideal.
    pub fn lift(&self, ideal: Ideal) -> Ideal {
        Ideal::trusted((0..self.class_of.len()).filter(|&a| ideal.contains(self.class_of[a])).collect())
    }

    /// The canonical epimorphism `R → R/M`.
    pub fn projection<'a>(&'a self, parent: &'a HyperRing) -> GoodHom<'a> {
        GoodHom::new(parent, &self.ring, self.class_of.clone()).expect("canonical projection is good")
    }
}

/// `φ_M(N/M) = (φ(N) ⊕ M)/M`, and `∅` where `φ(N) = ∅`.
pub fn induced_reduction_value(
    phi: &Reduction,
    parent: &HyperRing,
    q: &QuotientPresentation,
    ideal: Ideal,
) -> Result<Reduced, ConstructError> {
    q.project(ideal)?;
    Ok(match eval_reduction(phi, parent, ideal)? {
        Reduced::Empty => Reduced::Empty,
        Reduced::Ideal(r) => Reduced::Ideal(q.project(ideal_sum(parent, r, q.modulus)?)?),
    })
}

/// `δ_M(N/M) = δ(N)/M`.
pub fn induced_expansion_value(
    delta: &Expansion,
    parent: &HyperRing,
    q: &QuotientPresentation,
    ideal: Ideal,
) -> Result<Ideal, ConstructError> {
    q.project(ideal)?;
    let expanded = eval_expansion(delta, parent, ideal)?;
    q.project(ideal_sum(parent, expanded, q.modulus)?)
}

/// The induced reduction as a table on the quotient's lattice.
pub fn induced_reduction_on_quotient(
    phi: &Reduction,
    parent: &HyperRing,
    q: &QuotientPresentation,
) -> Result<Reduction, ConstructError> {
    let mut table = BTreeMap::new();
    for &bar in enumerate_hyperideals(&q.ring) {
        table.insert(bar, induced_reduction_value(phi, parent, q, q.lift(bar))?);
    }
    Ok(Reduction::Custom(table))
}

pub fn induced_expansion_on_quotient(
    delta: &Expansion,
    parent: &HyperRing,
    q: &QuotientPresentation,
) -> Result<Expansion, ConstructError> {
    let mut table = BTreeMap::new();
    for &bar in enumerate_hyperideals(&q.ring) {
        table.insert(bar, induced_expansion_value(delta, parent, q, q.lift(bar))?);
    }
    Ok(Expansion::Custom(table))
}

/// `R₁ × R₂`, with `(i, j)` stored as `i·|R₂| + j`.
#[derive(Clone, Debug)]
pub struct ProductRing {
    n1: usize,
    n2: usize,
    ring: HyperRing,
}

pub fn direct_product(first: &HyperRing, second: &HyperRing) -> Result<ProductRing, ConstructError> {
    let (n1, n2) = (first.size(), second.size());
    if n1 * n2 > MAX_ELEMENTS {
        return Err(ConstructError::TooLarge(n1, n2));
    }
    let pair = |i: usize, j: usize| i * n2 + j;
    let n = n1 * n2;
    let add = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    let (a, b) = (first.add(x / n2, y / n2), second.add(x % n2, y % n2));
                    a.iter().flat_map(|i| b.iter().map(move |j| pair(i, j))).collect()
                })
                .collect()
        })
        .collect();
    let mul =
        (0..n).map(|x| (0..n).map(|y| pair(first.mul(x / n2, y / n2), second.mul(x % n2, y % n2))).collect()).collect();
    let labels = (0..n).map(|x| format!("({},{})", first.label(x / n2), second.label(x % n2))).collect();
    let factor = |r: &HyperRing| {
        if r.name().contains('×') {
            format!("({})", r.name())
        } else {
            r.name().to_string()
        }
    };
    let name = format!("{}×{}", factor(first), factor(second));
    let ring = HyperRing::from_tables(
        name,
        labels,
        add,
        mul,
        pair(first.zero(), second.zero()),
        pair(first.one(), second.one()),
    )?
    .checked(n == 1)?;
    Ok(ProductRing { n1, n2, ring })
}

impl ProductRing {
    pub fn ring(&self) -> &HyperRing {
        &self.ring
    }

    pub fn into_ring(self) -> HyperRing {
        self.ring
    }

    pub fn pair(&self, i: usize, j: usize) -> usize {
        i * self.n2 + j
    }

    pub fn unpair(&self, x: usize) -> (usize, usize) {
        (x / self.n2, x % self.n2)
    }

    pub fn product_set(&self, a: IndexSet, b: IndexSet) -> IndexSet {
        a.iter().flat_map(|i| b.iter().map(move |j| self.pair(i, j))).collect()
    }

    pub fn product_ideal(&self, n1: Ideal, n2: Ideal) -> Ideal {
        Ideal::trusted(self.product_set(n1.members(), n2.members()))
    }

    /// The component projections, provided the set is their product.
    pub fn split_set(&self, set: IndexSet) -> Option<(IndexSet, IndexSet)> {
        let a: IndexSet = set.iter().map(|x| self.unpair(x).0).collect();
        let b: IndexSet = set.iter().map(|x| self.unpair(x).1).collect();
        (self.product_set(a, b) == set).then_some((a, b))
    }

    pub fn split_ideal(&self, ideal: Ideal) -> Result<(Ideal, Ideal), ConstructError> {
        self.split_set(ideal.members())
            .map(|(a, b)| (Ideal::trusted(a), Ideal::trusted(b)))
            .ok_or(ConstructError::NotAProduct(ideal))
    }

    /// `φ(N₁×N₂) = φ₁(N₁)×φ₂(N₂)`, empty when either factor is.
    pub fn product_reduction(
        &self,
        first: (&Reduction, &HyperRing),
        second: (&Reduction, &HyperRing),
    ) -> Result<Reduction, ConstructError> {
        let mut table = BTreeMap::new();
        for &ideal in enumerate_hyperideals(&self.ring) {
            let (n1, n2) = self.split_ideal(ideal)?;
            let value = match (eval_reduction(first.0, first.1, n1)?, eval_reduction(second.0, second.1, n2)?) {
                (Reduced::Ideal(a), Reduced::Ideal(b)) => Reduced::Ideal(self.product_ideal(a, b)),
                _ => Reduced::Empty,
            };
            table.insert(ideal, value);
        }
        Ok(Reduction::Custom(table))
    }

    /// `δ(N₁×N₂) = γ₁(N₁)×γ₂(N₂)`.
    pub fn product_expansion(
        &self,
        first: (&Expansion, &HyperRing),
        second: (&Expansion, &HyperRing),
    ) -> Result<Expansion, ConstructError> {
        let mut table = BTreeMap::new();
        for &ideal in enumerate_hyperideals(&self.ring) {
            let (n1, n2) = self.split_ideal(ideal)?;
            let value =
                self.product_ideal(eval_expansion(first.0, first.1, n1)?, eval_expansion(second.0, second.1, n2)?);
            table.insert(ideal, value);
        }
        Ok(Expansion::Custom(table))
    }

    pub fn first_projection<'a>(&'a self, first: &'a HyperRing) -> GoodHom<'a> {
        let map = self.ring.elements().map(|x| self.unpair(x).0).collect();
        GoodHom::new(&self.ring, first, map).expect("product projection is good")
    }

    pub fn second_projection<'a>(&'a self, second: &'a HyperRing) -> GoodHom<'a> {
        let map = self.ring.elements().map(|x| self.unpair(x).1).collect();
        GoodHom::new(&self.ring, second, map).expect("product projection is good")
    }

    pub fn sizes(&self) -> (usize, usize) {
        (self.n1, self.n2)
    }
}

/// Names of the homomorphism laws checked by [`verify_good_hom`].
pub mod law {
    pub const ADD_INCLUSION: &str = "additive-inclusion";
    pub const ADD_EQUALITY: &str = "additive-equality";
    pub const MULTIPLICATIVE: &str = "multiplicative";
    pub const ZERO: &str = "zero";
    pub const UNITAL: &str = "unital";
}

/// Checks `μ(a⊕b) ⊆ μ(a)⊕μ(b)`, its set-equality strengthening, multiplicativity,
/// `μ(0)=0` and `μ(1)=1`. Witnesses are `(a, b)` or `(a)`.
pub fn verify_good_hom(source: &HyperRing, target: &HyperRing, map: &[usize]) -> AxiomReport {
    let mut report = AxiomReport::default();
    if map.len() != source.size() || map.iter().any(|&v| v >= target.size()) {
        for name in [law::ADD_INCLUSION, law::ADD_EQUALITY, law::MULTIPLICATIVE, law::ZERO, law::UNITAL] {
            report.push(name, Some(Vec::new()));
        }
        return report;
    }
    let pairs = || source.elements().flat_map(|a| source.elements().map(move |b| (a, b)));
    let image = |a: usize, b: usize| -> IndexSet { source.add(a, b).iter().map(|c| map[c]).collect() };
    report.push(
        law::ADD_INCLUSION,
        pairs().find(|&(a, b)| !image(a, b).is_subset(target.add(map[a], map[b]))).map(|(a, b)| vec![a, b]),
    );
    report.push(
        law::ADD_EQUALITY,
        pairs().find(|&(a, b)| image(a, b) != target.add(map[a], map[b])).map(|(a, b)| vec![a, b]),
    );
    report.push(
        law::MULTIPLICATIVE,
        pairs().find(|&(a, b)| map[source.mul(a, b)] != target.mul(map[a], map[b])).map(|(a, b)| vec![a, b]),
    );
    report.push(law::ZERO, (map[source.zero()] != target.zero()).then(|| vec![source.zero()]));
    report.push(law::UNITAL, (map[source.one()] != target.one()).then(|| vec![source.one()]));
    report
}

/// A unital homomorphism between two hyperrings.
///
/// `good` records whether addition is preserved as a set equality; maps that
/// only satisfy the inclusion `μ(a⊕b) ⊆ μ(a)⊕μ(b)` are built with
/// [`GoodHom::homomorphism`] and still support preimages and globality checks.
#[derive(Clone, Debug)]
pub struct GoodHom<'a> {
    source: &'a HyperRing,
    target: &'a HyperRing,
    map: Vec<usize>,
    surjective: bool,
    good: bool,
}

impl<'a> GoodHom<'a> {
    /// Requires every law, including additive set equality.
    pub fn new(source: &'a HyperRing, target: &'a HyperRing, map: Vec<usize>) -> Result<Self, ConstructError> {
        let hom = Self::homomorphism(source, target, map)?;
        if hom.good {
            Ok(hom)
        } else {
            Err(ConstructError::NotHomomorphism(verify_good_hom(source, target, &hom.map)))
        }
    }

    /// Requires every law except additive set equality.
    pub fn homomorphism(source: &'a HyperRing, target: &'a HyperRing, map: Vec<usize>) -> Result<Self, ConstructError> {
        let report = verify_good_hom(source, target, &map);
        let good = report.all_pass();
        if report.failures().any(|f| f.axiom != law::ADD_EQUALITY) {
            return Err(ConstructError::NotHomomorphism(report));
        }
        let surjective = map.iter().copied().collect::<IndexSet>() == target.carrier();
        Ok(GoodHom { source, target, map, surjective, good })
    }

    pub fn identity(ring: &'a HyperRing) -> Self {
        GoodHom::new(ring, ring, ring.elements().collect()).expect("identity is good")
    }

    pub fn source(&self) -> &'a HyperRing {
        self.source
    }

    pub fn target(&self) -> &'a HyperRing {
        self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn is_surjective(&self) -> bool {
        self.surjective
    }

    pub fn is_good(&self) -> bool {
        self.good
    }

    pub fn image_set(&self, set: IndexSet) -> IndexSet {
        set.iter().map(|a| self.map[a]).collect()
    }

    pub fn preimage_set(&self, set: IndexSet) -> IndexSet {
        self.source.elements().filter(|&a| set.contains(self.map[a])).collect()
    }
}

pub fn kernel(hom: &GoodHom<'_>) -> Ideal {
    hom_preimage(hom, Ideal::zero(hom.target))
}

pub fn hom_preimage(hom: &GoodHom<'_>, ideal: Ideal) -> Ideal {
    Ideal::trusted(hom.preimage_set(ideal.members()))
}

/// `μ(N)`, defined for surjective `μ` and `Ker μ ⊆ N`.
pub fn hom_image(hom: &GoodHom<'_>, ideal: Ideal) -> Result<Ideal, ConstructError> {
    if !hom.surjective {
        return Err(ConstructError::NotSurjective);
    }
    let kernel = kernel(hom);
    if !kernel.is_subset(ideal) {
        return Err(ConstructError::KernelNotContained { kernel, ideal });
    }
    Ok(Ideal::trusted(hom.image_set(ideal.members())))
}

/// A reduction or expansion whose globality is tested along a map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Spec {
    Reduction(Reduction),
    Expansion(Expansion),
}

impl std::fmt::Display for Spec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Spec::Reduction(phi) => write!(f, "{phi}"),
            Spec::Expansion(delta) => write!(f, "{delta}"),
        }
    }
}

/// Rewrites an expansion on the target as the same-named expansion on the source,
/// pulling hyperideal parameters back along the map.
pub fn pull_back_expansion(hom: &GoodHom<'_>, delta: &Expansion) -> Result<Expansion, ConstructError> {
    Ok(match delta {
        Expansion::Residual(m) => Expansion::Residual(hom_preimage(hom, *m)),
        Expansion::Translate(m) => Expansion::Translate(hom_preimage(hom, *m)),
        Expansion::Intersection(parts) => {
            Expansion::Intersection(parts.iter().map(|p| pull_back_expansion(hom, p)).collect::<Result<_, _>>()?)
        }
        Expansion::Custom(_) => {
            return Err(ConstructError::Unsupported("custom tables have no canonical pull-back".into()))
        }
        other => other.clone(),
    })
}

pub fn pull_back_reduction(delta: &Reduction) -> Result<Reduction, ConstructError> {
    match delta {
        Reduction::Custom(_) => Err(ConstructError::Unsupported("custom tables have no canonical pull-back".into())),
        other => Ok(other.clone()),
    }
}

/// Result of a globality check: the first target hyperideal breaking it, if any.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Globality {
    pub holds: bool,
    pub witness: Option<Ideal>,
}

/// Tests `f(μ⁻¹(M)) = μ⁻¹(f(M))` for every hyperideal `M` of the target,
/// with the source-side `f` evaluated on pulled-back parameters.
pub fn check_global_on(hom: &GoodHom<'_>, spec: &Spec) -> Result<Globality, ConstructError> {
    let source_spec = match spec {
        Spec::Reduction(phi) => Spec::Reduction(pull_back_reduction(phi)?),
        Spec::Expansion(delta) => Spec::Expansion(pull_back_expansion(hom, delta)?),
    };
    check_global_between(hom, &source_spec, spec)
}

/// As [`check_global_on`] with explicit source-side and target-side functions.
pub fn check_global_between(
    hom: &GoodHom<'_>,
    source_spec: &Spec,
    target_spec: &Spec,
) -> Result<Globality, ConstructError> {
    for &m in enumerate_hyperideals(hom.target) {
        let pre = hom_preimage(hom, m);
        let equal = match (source_spec, target_spec) {
            (Spec::Reduction(src), Spec::Reduction(tgt)) => {
                let lhs = eval_reduction(src, hom.source, pre)?;
                let rhs = match eval_reduction(tgt, hom.target, m)? {
                    Reduced::Empty => Reduced::Empty,
                    Reduced::Ideal(r) => Reduced::Ideal(hom_preimage(hom, r)),
                };
                lhs == rhs
            }
            (Spec::Expansion(src), Spec::Expansion(tgt)) => {
                eval_expansion(src, hom.source, pre)? == hom_preimage(hom, eval_expansion(tgt, hom.target, m)?)
            }
            _ => return Err(ConstructError::Unsupported("mixed reduction/expansion pair".into())),
        };
        if !equal {
            return Ok(Globality { holds: false, witness: Some(m) });
        }
    }
    Ok(Globality { holds: true, witness: None })
}

/// The splitting `R ≅ R∘m × R∘e` along an idempotent `m` with `1 ⊖ m = {e}`.
#[derive(Clone, Debug)]
pub struct Decomposition {
    /// `R∘m`, with identity `m`.
    pub first: HyperRing,
    /// `R∘e`, with identity `e`.
    pub second: HyperRing,
    /// Carrier of each factor inside the parent, in factor index order.
    pub first_carrier: Vec<usize>,
    pub second_carrier: Vec<usize>,
    pub complement: usize,
    pub product: ProductRing,
    /// `r ↦ (r∘m, r∘e)` into `product`.
    pub iso: Vec<usize>,
}

impl Decomposition {
    pub fn hom<'a>(&'a self, parent: &'a HyperRing) -> GoodHom<'a> {
        GoodHom::new(parent, self.product.ring(), self.iso.clone()).expect("checked at construction")
    }
}

fn principal_subring(ring: &HyperRing, unit: usize, name: String) -> Result<(HyperRing, Vec<usize>), ConstructError> {
    let carrier: IndexSet = ring.elements().map(|r| ring.mul(r, unit)).collect();
    let members = carrier.to_vec();
    let index = |a: usize| members.iter().position(|&x| x == a).expect("closed");
    let k = members.len();
    let mut add = Vec::with_capacity(k);
    for &a in &members {
        let mut row = Vec::with_capacity(k);
        for &b in &members {
            let cell = ring.add(a, b);
            if !cell.is_subset(carrier) {
                return Err(ConstructError::Unsupported(format!("R∘{unit} is not closed under addition")));
            }
            row.push(cell.iter().map(index).collect());
        }
        add.push(row);
    }
    let mul = members.iter().map(|&a| members.iter().map(|&b| index(ring.mul(a, b))).collect()).collect();
    let labels = members.iter().map(|&a| ring.label(a).to_string()).collect();
    let sub = HyperRing::from_tables(name, labels, add, mul, index(ring.zero()), index(unit))?.checked(k == 1)?;
    Ok((sub, members))
}

pub fn decompose_by_idempotent(ring: &HyperRing, m: usize) -> Result<Decomposition, ConstructError> {
    if ring.mul(m, m) != m {
        return Err(ConstructError::NotIdempotent(m));
    }
    let rest = ring.sub(ring.one(), m);
    let e = rest
        .as_singleton()
        .ok_or_else(|| ConstructError::Unsupported(format!("1 ⊖ {m} = {} is not a single element", ring.show(rest))))?;
    if ring.mul(e, e) != e {
        return Err(ConstructError::NotIdempotent(e));
    }
    let (first, first_carrier) = principal_subring(ring, m, format!("{}∘{}", ring.name(), ring.label(m)))?;
    let (second, second_carrier) = principal_subring(ring, e, format!("{}∘{}", ring.name(), ring.label(e)))?;
    let product = direct_product(&first, &second)?;
    let iso: Vec<usize> = ring
        .elements()
        .map(|r| {
            let i = first_carrier.iter().position(|&x| x == ring.mul(r, m)).expect("in carrier");
            let j = second_carrier.iter().position(|&x| x == ring.mul(r, e)).expect("in carrier");
            product.pair(i, j)
        })
        .collect();
    let bijective =
        iso.iter().copied().collect::<IndexSet>() == product.ring().carrier() && iso.len() == product.ring().size();
    if !bijective {
        return Err(ConstructError::Unsupported(format!("r ↦ (r∘{m}, r∘{e}) is not a bijection")));
    }
    let report = verify_good_hom(ring, product.ring(), &iso);
    if !report.all_pass() {
        return Err(ConstructError::NotHomomorphism(report));
    }
    Ok(Decomposition { first, second, first_carrier, second_carrier, complement: e, product, iso })
}
