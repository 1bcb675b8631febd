//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Criteria 4 and 6 fail on the default corpus because the statements they
//! test are false as stated. Both are evaluated faithfully and print FAIL; the
//! process exit code only flags a criterion whose outcome differs from the
//! recorded expectation, or an expected failure whose counterexamples fall
//! outside the analysed family.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hrl::construct::{check_global_on, kernel, quotient, unit_quotient_with_map, GoodHom, Spec};
use hrl::corpus::{default_corpus, krasner};
use hrl::ideals::{enumerate_hyperideals, proper_hyperideals};
use hrl::maps::eval_expansion;
use hrl::ring::{RingFile, Status};
use hrl::theorems::{
    check_hom_transport, check_product_taxonomy, derive_pairs, reports_to_json, run_suite, HomSpec, Outcome,
    PairContext, SuiteConfig, TheoremReport,
};
use hrl::{classify::classify_all, verify_krasner, zmod, Expansion, HyperRing, Ideal, IndexSet, Reduction};

const AXIOM_BUDGET: Duration = Duration::from_secs(1);
const LATTICE_BUDGET: Duration = Duration::from_secs(10);
const VARIANT_BUDGET: Duration = Duration::from_secs(60);
const SWEEP_BUDGET: Duration = Duration::from_secs(120);
const LATTICE_ORACLE_MAX: usize = 10;
const MUTATIONS: usize = 20;

struct Line {
    id: u32,
    pass: bool,
    expected_pass: bool,
    /// For expected failures: the failure matched the analysed family.
    explained: bool,
    detail: String,
}

enum Cell {
    Add(usize, usize, &'static [usize]),
    Mul(usize, usize, usize),
}

fn mutate(ring: &HyperRing, cell: &Cell) -> HyperRing {
    let mut file: RingFile = ring.to_file();
    match *cell {
        Cell::Add(i, j, v) => file.add[i][j] = v.to_vec(),
        Cell::Mul(i, j, v) => file.mul[i][j] = v,
    }
    HyperRing::from_file(&file).expect("mutations keep the table shape")
}

fn criterion_axioms() -> Line {
    let start = Instant::now();
    let corpus_ok = default_corpus().iter().all(|r| verify_krasner(r).all_pass());
    let k = krasner();
    let z4 = zmod(4);
    let script: [(&HyperRing, Cell); MUTATIONS] = [
        (&k, Cell::Add(0, 0, &[0, 1])),
        (&k, Cell::Add(0, 0, &[1])),
        (&k, Cell::Add(0, 1, &[0, 1])),
        (&k, Cell::Add(0, 1, &[0])),
        (&k, Cell::Add(1, 0, &[0])),
        (&k, Cell::Add(1, 1, &[1])),
        (&k, Cell::Mul(1, 1, 0)),
        (&k, Cell::Mul(0, 1, 1)),
        (&k, Cell::Mul(1, 0, 1)),
        (&k, Cell::Mul(0, 0, 1)),
        (&z4, Cell::Add(1, 1, &[3])),
        (&z4, Cell::Add(1, 2, &[0])),
        (&z4, Cell::Add(2, 2, &[2])),
        (&z4, Cell::Add(3, 3, &[1, 2])),
        (&z4, Cell::Add(0, 3, &[2])),
        (&z4, Cell::Mul(2, 2, 2)),
        (&z4, Cell::Mul(2, 3, 1)),
        (&z4, Cell::Mul(3, 3, 3)),
        (&z4, Cell::Mul(1, 3, 1)),
        (&z4, Cell::Mul(0, 2, 2)),
    ];
    let mut rejected = 0;
    for (ring, cell) in &script {
        let report = verify_krasner(&mutate(ring, cell));
        if report.entries.iter().any(|e| e.status == Status::Fail && !e.witness.is_empty()) {
            rejected += 1;
        }
    }
    let elapsed = start.elapsed();
    let pass = corpus_ok && rejected == MUTATIONS && elapsed < AXIOM_BUDGET;
    Line {
        id: 1,
        pass,
        expected_pass: true,
        explained: false,
        detail: format!(
            "corpus passes: {corpus_ok}; {rejected}/{MUTATIONS} mutations rejected with a witness; {elapsed:.2?}"
        ),
    }
}

fn criterion_lattice() -> Line {
    let start = Instant::now();
    let mut checked = 0;
    let mut agree = true;
    for ring in default_corpus().iter().filter(|r| r.size() <= LATTICE_ORACLE_MAX) {
        let got: BTreeSet<common::Set> = enumerate_hyperideals(ring).iter().map(|&n| common::to_set(n)).collect();
        agree &= got == common::all_ideals(ring) && got.len() == enumerate_hyperideals(ring).len();
        checked += 1;
    }
    let elapsed = start.elapsed();
    Line {
        id: 2,
        pass: agree && elapsed < LATTICE_BUDGET,
        expected_pass: true,
        explained: false,
        detail: format!("{checked} rings against the subset filter, agree: {agree}; {elapsed:.2?}"),
    }
}

fn criterion_variants() -> Line {
    use hrl::classify::{phi_delta_primary_via, Variant};
    let start = Instant::now();
    let mut instances = 0u64;
    let mut disagreements = 0u64;
    for ring in default_corpus() {
        let mut deltas = vec![Expansion::Identity, Expansion::Radical];
        deltas.extend(enumerate_hyperideals(&ring).iter().map(|&m| Expansion::Translate(m)));
        for n in proper_hyperideals(&ring) {
            for phi in Reduction::catalog() {
                for delta in &deltas {
                    let verdicts: Vec<bool> = Variant::ALL
                        .iter()
                        .map(|&v| phi_delta_primary_via(&ring, n, &phi, delta, v).expect("proper").holds)
                        .collect();
                    instances += 1;
                    if verdicts.iter().any(|&v| v != verdicts[0]) {
                        disagreements += 1;
                    }
                }
            }
        }
    }
    let elapsed = start.elapsed();
    Line {
        id: 3,
        pass: disagreements == 0 && elapsed < VARIANT_BUDGET,
        expected_pass: true,
        explained: false,
        detail: format!("{instances} (ring, N, φ, δ) instances, {disagreements} disagreements; {elapsed:.2?}"),
    }
}

fn criterion_sweep(reports: &[TheoremReport], elapsed: Duration) -> Line {
    let scoped: Vec<&TheoremReport> = reports.iter().filter(|r| r.theorem != "global_catalog").collect();
    let failing: BTreeSet<&str> = scoped.iter().filter(|r| r.is_counterexample()).map(|r| r.theorem.as_str()).collect();
    let violations: u64 = scoped.iter().filter(|r| r.is_counterexample()).map(|r| r.violations).sum();
    let bad_skips = scoped
        .iter()
        .filter(|r| matches!(&r.verdict, Outcome::Skipped(why) if why != "out of scope: localization"))
        .count();
    let pass = failing.is_empty() && bad_skips == 0 && elapsed < SWEEP_BUDGET;

    // Every taxonomy failure must come from an expansion sending a proper
    // hyperideal to the whole ring: with those excluded the statement holds.
    let config = SuiteConfig::default();
    let corpus = default_corpus();
    let mut corrected_ok = true;
    let mut witnesses_ok = true;
    for (i, j) in derive_pairs(&corpus, &config) {
        let pair = PairContext::new(&corpus[i], &corpus[j], &config).expect("size checked");
        corrected_ok &= !check_product_taxonomy(&pair, true).is_counterexample();
        for w in &check_product_taxonomy(&pair, false).witnesses {
            witnesses_ok &= replay_taxonomy_witness(&pair, w);
        }
    }
    let explained = failing.iter().all(|&t| t == "product_taxonomy") && corrected_ok && witnesses_ok && bad_skips == 0;
    Line {
        id: 4,
        pass,
        expected_pass: false,
        explained,
        detail: format!(
            "{} reports; counterexamples in {:?} ({violations} instances); unexpected skips {bad_skips}; \
             restricted to properness-preserving expansions the taxonomy holds: {corrected_ok}; {elapsed:.2?}",
            scoped.len(),
            failing
        ),
    }
}

/// Rebuilds a taxonomy finding through the classifier: the product is
/// φ-δ-primary, has no whole factor, and its expansion value is the whole ring.
fn replay_taxonomy_witness(pair: &PairContext, w: &hrl::theorems::Finding) -> bool {
    let (Some(phi), Some(delta)) = (&w.phi, &w.delta) else { return false };
    let phis: Vec<Reduction> = phi.split('×').map(|p| p.parse().expect("catalog spelling")).collect();
    let deltas: Vec<&str> = delta.split('×').collect();
    let g1 = hrl::maps::parse_expansion(pair.first, deltas[0]).expect("catalog spelling");
    let g2 = hrl::maps::parse_expansion(pair.second, deltas[1]).expect("catalog spelling");
    let product = pair.product.ring();
    let red = pair.product.product_reduction((&phis[0], pair.first), (&phis[1], pair.second)).unwrap();
    let exp = pair.product.product_expansion((&g1, pair.first), (&g2, pair.second)).unwrap();
    let n = w.ideals[0];
    let (n1, n2) = pair.product.split_ideal(n).unwrap();
    let holds = hrl::classify::is_phi_delta_primary(product, n, &red, &exp).unwrap().holds;
    let whole_factor = n1 == Ideal::whole(pair.first) || n2 == Ideal::whole(pair.second);
    let reaches_whole = eval_expansion(&g1, pair.first, n1).unwrap() == Ideal::whole(pair.first)
        || eval_expansion(&g2, pair.second, n2).unwrap() == Ideal::whole(pair.second);
    holds && !whole_factor && reaches_whole
}

fn criterion_transport() -> Line {
    let z3 = zmod(3);
    let (k, orbit) = unit_quotient_with_map(&z3, IndexSet::from_iter([1, 2])).expect("unit group");
    let mut homs = vec![HomSpec { name: "orbit Z_3→K".into(), source: z3.clone(), target: k, map: orbit }];
    for ring in default_corpus() {
        for m in proper_hyperideals(&ring).into_iter().filter(|m| m.len() > 1) {
            let q = quotient(&ring, m).expect("hyperideal");
            let map = ring.elements().map(|a| q.class_of(a)).collect();
            homs.push(HomSpec {
                name: format!("{}→{}", ring.name(), q.ring().name()),
                source: ring.clone(),
                target: q.into_ring(),
                map,
            });
        }
    }
    let specs = [
        Spec::Reduction(Reduction::Zero),
        Spec::Reduction(Reduction::Identity),
        Spec::Expansion(Expansion::Identity),
        Spec::Expansion(Expansion::Radical),
    ];
    let mut global_fail: Vec<(String, String)> = Vec::new();
    let mut explained = true;
    let mut thom_bad = 0;
    let mut checks = 0;
    let mut orbit_good = true;
    for h in &homs {
        let hom: GoodHom = h.hom().expect("homomorphism");
        if h.name.starts_with("orbit") {
            orbit_good = hom.is_good();
            // 1 + 1 = 2 in Z_3 maps to {1}, while 1 ⊕ 1 = {0, 1} in K.
            explained &= !orbit_good && h.target.add(hom.apply(1), hom.apply(1)) != IndexSet::singleton(hom.apply(2));
        }
        let ker = kernel(&hom);
        for s in &specs {
            checks += 1;
            let g = check_global_on(&hom, s).expect("parameter-free");
            if !g.holds {
                global_fail.push((h.name.clone(), s.to_string()));
                explained &= matches!(s, Spec::Reduction(Reduction::Zero)) && ker.len() > 1;
            } else if matches!(s, Spec::Reduction(Reduction::Zero)) {
                explained &= ker.len() == 1;
            }
        }
        if check_hom_transport(h, &SuiteConfig::default()).is_counterexample() {
            thom_bad += 1;
            explained = false;
        }
    }
    Line {
        id: 6,
        pass: global_fail.is_empty() && thom_bad == 0 && orbit_good,
        expected_pass: false,
        explained,
        detail: format!(
            "{} maps, {checks} globality checks, {} failures (first: {:?}); orbit map good: {orbit_good}; \
             transport counterexamples: {thom_bad}",
            homs.len(),
            global_fail.len(),
            global_fail.first()
        ),
    }
}

fn criterion_classifications() -> Line {
    let mut ok = true;
    let z4 = zmod(4);
    let c = classify_all(&z4, Ideal::zero(&z4), None, None).unwrap();
    let n = common::set(&[0]);
    ok &= c.weakly_prime.holds && !c.prime.holds;
    ok &= c.prime.witness == Some(hrl::Witness::Pair { a: 2, b: 2 });
    ok &= common::primary_witness(&z4, &n, &common::Set::new(), &n) == Some((2, 2));
    ok &= common::primary_witness(&z4, &n, &n, &n).is_none();

    let z12 = zmod(12);
    let four = Ideal::new(&z12, IndexSet::from_iter([0, 4, 8])).unwrap();
    let c = classify_all(&z12, four, None, None).unwrap();
    let n = common::to_set(four);
    let rad = common::radical(&z12, &n);
    ok &= c.primary.holds && !c.prime.holds;
    ok &= rad == (0..12).step_by(2).collect::<common::Set>();
    ok &= common::to_set(hrl::ideals::radical(&z12, four)) == rad;
    ok &= common::primary_witness(&z12, &n, &common::Set::new(), &rad).is_none();
    ok &= common::primary_witness(&z12, &n, &common::Set::new(), &n).is_some();

    let z6 = zmod(6);
    let two = Ideal::new(&z6, IndexSet::from_iter([0, 2, 4])).unwrap();
    ok &= classify_all(&z6, two, None, None).unwrap().prime.holds;
    ok &= common::primary_witness(&z6, &common::to_set(two), &common::Set::new(), &common::to_set(two)).is_none();

    let k = krasner();
    let zero = Ideal::zero(&k);
    ok &= classify_all(&k, zero, None, None).unwrap().prime.holds;
    ok &= common::primary_witness(&k, &common::set(&[0]), &common::Set::new(), &common::set(&[0])).is_none();
    Line {
        id: 5,
        pass: ok,
        expected_pass: true,
        explained: false,
        detail:
            "{0} ⊂ Z_4 weakly prime not prime (2,2); (4) ⊂ Z_12 primary, radical (2); (2) ⊂ Z_6 prime; {0} ⊂ K prime"
                .into(),
    }
}

fn criterion_determinism(first: &str) -> Line {
    let second = reports_to_json(&run_suite(&default_corpus(), &[], &SuiteConfig::default()).unwrap());
    let same = first.as_bytes() == second.as_bytes();
    Line {
        id: 7,
        pass: same,
        expected_pass: true,
        explained: false,
        detail: format!("two full runs, {} bytes, identical: {same}", first.len()),
    }
}

fn main() -> ExitCode {
    let mut lines = vec![criterion_axioms(), criterion_lattice(), criterion_variants()];
    let start = Instant::now();
    let reports = run_suite(&default_corpus(), &[], &SuiteConfig::default()).expect("known ids");
    let elapsed = start.elapsed();
    let json = reports_to_json(&reports);
    lines.push(criterion_sweep(&reports, elapsed));
    lines.push(criterion_classifications());
    lines.push(criterion_transport());
    lines.push(criterion_determinism(&json));
    lines.sort_by_key(|l| l.id);

    let mut unexpected = 0;
    for l in &lines {
        let status = if l.pass { "PASS" } else { "FAIL" };
        let note = match (l.pass, l.expected_pass) {
            (true, true) => String::new(),
            (false, false) if l.explained => {
                " [expected: statement false as written; counterexamples match the analysed family]".into()
            }
            (false, false) => {
                unexpected += 1;
                " [UNEXPECTED: counterexamples outside the analysed family]".into()
            }
            (true, false) => {
                unexpected += 1;
                " [UNEXPECTED: expected failure did not occur]".into()
            }
            (false, true) => {
                unexpected += 1;
                String::new()
            }
        };
        println!("criterion {} {status}: {}{note}", l.id, l.detail);
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
