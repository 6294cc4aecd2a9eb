//! The property battery: every module invariant, run over a fixed list of
//! weight sequences.
//!
//! Suites run on their own threads; the report lists them in a fixed order
//! and contains no timings, so its serialization is deterministic.

use std::collections::BTreeSet;
use std::fmt::Display;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use rotsieve_core::crystal::{
    element_to_path, path_bijection, TensorCrystal, TensorCrystalElement,
};
use rotsieve_core::csp::{csp_check, cyclotomic, eval_matches, RectangularData, Verdict};
use rotsieve_core::kostka::{
    charge, invariant_dim, kostka_foulkes_by, partitions, q_kostant, semistandard_tableaux,
    Partition,
};
use rotsieve_core::paths::{
    enumerate_paths, enumerate_paths_with, rotate, rotate_times, straighten_trace,
    LittelmannPath, MinusculePath, WeightSequence,
};
use rotsieve_core::tableaux::{path_to_tableau, promote, tableau_to_path, RowStrictTableau};
use rotsieve_core::{Family, IntPolynomial, RootSystem, Weight};

use crate::json::{ElementJson, PathJson};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    /// Type A of rank at most 2 and sequences of length at most 6.
    Quick,
    Full,
}

impl Scope {
    pub fn name(self) -> &'static str {
        match self {
            Scope::Quick => "quick",
            Scope::Full => "full",
        }
    }
}

/// A sequence `(ω_{nodes[0]}, …)` of fundamental weights; nodes are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Case {
    pub family: Family,
    pub rank: usize,
    pub nodes: Vec<usize>,
}

impl Case {
    fn new(family: Family, rank: usize, one_based: &[usize]) -> Self {
        Case { family, rank, nodes: one_based.iter().map(|i| i - 1).collect() }
    }

    pub fn root_system(&self) -> RootSystem {
        RootSystem::new(self.family, self.rank).expect("battery types are valid")
    }

    pub fn sequence<'a>(&self, rs: &'a RootSystem) -> WeightSequence<'a> {
        WeightSequence::from_nodes(rs, &self.nodes).expect("battery weights are minuscule")
    }

    pub fn json(&self) -> Value {
        json!({
            "type": self.family.letter().to_string(),
            "rank": self.rank,
            "weights": self.nodes.iter().map(|i| i + 1).collect::<Vec<_>>(),
        })
    }
}

/// The standard battery, in a fixed order.
pub fn standard_cases() -> Vec<Case> {
    use Family::*;
    vec![
        Case::new(A, 1, &[1, 1]),
        Case::new(A, 1, &[1, 1, 1, 1]),
        Case::new(A, 1, &[1; 6]),
        Case::new(A, 1, &[1; 8]),
        Case::new(A, 2, &[1, 1, 1]),
        Case::new(A, 2, &[1, 2, 1, 2]),
        Case::new(A, 2, &[1, 1, 2, 1, 1, 2]),
        Case::new(A, 3, &[2, 2, 2, 2]),
        Case::new(A, 3, &[1, 3, 1, 3]),
        Case::new(D, 4, &[1, 1, 1, 1]),
        Case::new(E, 6, &[1, 6, 1, 6]),
    ]
}

pub fn cases(scope: Scope) -> Vec<Case> {
    let all = standard_cases();
    match scope {
        Scope::Full => all,
        Scope::Quick => all
            .into_iter()
            .filter(|c| c.family == Family::A && c.rank <= 2 && c.nodes.len() <= 6)
            .collect(),
    }
}

/// Statistic on reading words used for the Kostka-Foulkes side of the
/// oracle comparison.
pub type Statistic = fn(&[u32]) -> rotsieve_core::Result<u64>;

#[derive(Debug, Clone, Copy)]
pub struct BatteryOptions {
    pub scope: Scope,
    pub seed: u64,
    pub statistic: Statistic,
}

impl BatteryOptions {
    pub fn new(scope: Scope) -> Self {
        BatteryOptions { scope, seed: 0x5eed, statistic: charge }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Failure {
    pub case: Value,
    pub message: String,
}

fn failure(case: Value, message: impl Display) -> Failure {
    Failure { case, message: message.to_string() }
}

fn ensure(cond: bool, case: impl FnOnce() -> Value, message: &str) -> Result<(), Failure> {
    if cond {
        Ok(())
    } else {
        Err(failure(case(), message))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub name: &'static str,
    pub status: &'static str,
    pub checks: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<Failure>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BatteryReport {
    pub scope: &'static str,
    pub suites: Vec<SuiteReport>,
    pub verdict: &'static str,
}

impl BatteryReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.failure.is_none())
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        for s in &self.suites {
            out += &format!("{:<14} {} ({} checks)\n", s.name, s.status, s.checks);
            if let Some(f) = &s.failure {
                out += &format!("  case: {}\n  {}\n", f.case, f.message);
            }
        }
        let passed = self.suites.iter().filter(|s| s.failure.is_none()).count();
        out += &format!("{passed}/{} suites passed\n", self.suites.len());
        out
    }
}

type Suite = fn(&BatteryOptions, &[Case]) -> Result<u64, Failure>;

pub const SUITES: [(&str, Suite); 8] = [
    ("root-system", root_system_suite),
    ("stabilizer", stabilizer_suite),
    ("counting", counting_suite),
    ("rotation", rotation_suite),
    ("promotion", promotion_suite),
    ("crystal", crystal_suite),
    ("kostka-oracle", kostka_suite),
    ("csp", csp_suite),
];

pub fn run_battery(opts: &BatteryOptions) -> BatteryReport {
    let cases = cases(opts.scope);
    let results: Vec<Result<u64, Failure>> = std::thread::scope(|s| {
        let handles: Vec<_> = SUITES
            .iter()
            .map(|(_, suite)| {
                let cases = &cases;
                s.spawn(move || suite(opts, cases))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| {
                h.join()
                    .unwrap_or_else(|_| Err(failure(Value::Null, "suite panicked")))
            })
            .collect()
    });
    let suites: Vec<SuiteReport> = SUITES
        .iter()
        .zip(results)
        .map(|((name, _), r)| match r {
            Ok(checks) => SuiteReport { name, status: "pass", checks, failure: None },
            Err(f) => SuiteReport { name, status: "fail", checks: 0, failure: Some(f) },
        })
        .collect();
    let verdict = if suites.iter().all(|s| s.failure.is_none()) { "pass" } else { "fail" };
    BatteryReport { scope: opts.scope.name(), suites, verdict }
}

fn distinct_root_systems(cases: &[Case]) -> Vec<RootSystem> {
    let mut seen = BTreeSet::new();
    cases
        .iter()
        .filter(|c| seen.insert((c.family.letter(), c.rank)))
        .map(Case::root_system)
        .collect()
}

fn rs_json(rs: &RootSystem) -> Value {
    json!({ "type": rs.family().letter().to_string(), "rank": rs.rank() })
}

fn weyl_order(family: Family, rank: usize) -> u64 {
    let fact = |n: usize| (1..=n as u64).product::<u64>();
    match family {
        Family::A => fact(rank + 1),
        Family::B | Family::C => (1u64 << rank) * fact(rank),
        Family::D => (1u64 << (rank - 1)) * fact(rank),
        Family::E => match rank {
            6 => 51_840,
            7 => 2_903_040,
            _ => 696_729_600,
        },
        Family::F => 1_152,
        Family::G => 12,
    }
}

fn positive_root_count(family: Family, n: usize) -> usize {
    match family {
        Family::A => n * (n + 1) / 2,
        Family::B | Family::C => n * n,
        Family::D => n * (n - 1),
        Family::E => [36, 63, 120][n - 6],
        Family::F => 24,
        Family::G => 6,
    }
}

fn grid(rank: usize, bound: i64) -> impl Iterator<Item = Weight> {
    let side = (2 * bound + 1) as usize;
    let total = side.pow(rank as u32);
    (0..total).map(move |mut k| {
        let coords = (0..rank)
            .map(|_| {
                let c = (k % side) as i64 - bound;
                k /= side;
                c
            })
            .collect();
        Weight::from_coords(coords)
    })
}

fn root_system_suite(opts: &BatteryOptions, cases: &[Case]) -> Result<u64, Failure> {
    let mut checks = 0;
    for rs in distinct_root_systems(cases) {
        let ctx = || rs_json(&rs);
        ensure(
            rs.positive_coroots().len() == positive_root_count(rs.family(), rs.rank()),
            ctx,
            "wrong number of positive roots",
        )?;
        for w in grid(rs.rank(), 3) {
            let at = || json!({ "root_system": rs_json(&rs), "weight": w.coords() });
            for i in 0..rs.rank() {
                let back = rs
                    .simple_reflection(i, &rs.simple_reflection(i, &w).map_err(|e| failure(at(), e))?)
                    .map_err(|e| failure(at(), e))?;
                ensure(back == w, at, "simple reflection is not an involution")?;
            }
            let (dom, word) = rs.to_dominant(&w);
            ensure(dom.is_dominant(), at, "to_dominant result is not dominant")?;
            ensure(word.apply(&rs, &w) == dom, at, "word does not carry w to its dominant form")?;
            ensure(
                word.len() == rs.count_negative_pairings(&w),
                at,
                "to_dominant word length differs from the inversion count",
            )?;
            checks += 1;
        }
        for lambda in rs.minuscule_weights() {
            let orbit = rs.weyl_orbit(&lambda).map_err(|e| failure(ctx(), e))?;
            for mu in &orbit {
                ensure(
                    rs.positive_coroots().iter().all(|v| rs.pair_coroot(mu, v).abs() <= 1),
                    || json!({ "root_system": rs_json(&rs), "weight": mu.coords() }),
                    "minuscule orbit element pairs outside {-1, 0, 1}",
                )?;
                checks += 1;
            }
        }
    }
    // Orbit sizes against |W| for every type of rank at most 4.
    let zoo: Vec<(Family, usize)> = match opts.scope {
        Scope::Quick => vec![(Family::A, 1), (Family::A, 2)],
        Scope::Full => {
            let mut z = Vec::new();
            for r in 1..=4 {
                z.push((Family::A, r));
            }
            for r in 2..=4 {
                z.push((Family::B, r));
                z.push((Family::C, r));
            }
            z.extend([(Family::D, 4), (Family::F, 4), (Family::G, 2)]);
            z
        }
    };
    for (family, rank) in zoo {
        let rs = RootSystem::new(family, rank).map_err(|e| failure(Value::Null, e))?;
        let order = weyl_order(family, rank);
        for i in 0..rank {
            let at = || json!({ "root_system": rs_json(&rs), "node": i + 1 });
            let orbit = rs.weyl_orbit(&rs.fundamental(i).unwrap()).map_err(|e| failure(at(), e))?;
            ensure(order.is_multiple_of(orbit.len() as u64), at, "orbit size does not divide |W|")?;
            checks += 1;
        }
    }
    Ok(checks)
}

fn stabilizer_suite(opts: &BatteryOptions, cases: &[Case]) -> Result<u64, Failure> {
    let trials = match opts.scope {
        Scope::Quick => 100,
        Scope::Full => 500,
    };
    let systems = distinct_root_systems(cases);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..trials {
        let (beta, x, rs) = random_stabilizer_triple(&mut rng, &systems);
        let gamma = &beta + &x;
        let (_, word) = rs.to_dominant(&gamma);
        ensure(
            word.apply(rs, &beta) == beta,
            || {
                json!({
                    "root_system": rs_json(rs),
                    "beta": beta.coords(),
                    "x": x.coords(),
                    "word": word.letters(),
                })
            },
            "minimal word for β + x does not fix β",
        )?;
    }
    Ok(trials)
}

/// A dominant `β` with coordinates at most 3 and a random `x` in the orbit
/// of a random minuscule weight.
pub fn random_stabilizer_triple<'a, R: Rng>(
    rng: &mut R,
    systems: &'a [RootSystem],
) -> (Weight, Weight, &'a RootSystem) {
    let rs = systems.choose(rng).expect("at least one root system");
    let beta = Weight::from_coords((0..rs.rank()).map(|_| rng.gen_range(0..=3)).collect());
    let lambda = rs.minuscule_weights().choose(rng).cloned().expect("minuscule weight");
    let orbit = rs.weyl_orbit(&lambda).expect("minuscule orbits are small");
    let x = orbit.choose(rng).cloned().expect("non-empty orbit");
    (beta, x, rs)
}

fn anchor(case: &Case) -> Option<usize> {
    let ones = case.nodes.iter().all(|&i| i == 0);
    match (case.family, case.rank, case.nodes.len()) {
        (Family::A, 1, 4) => Some(2),
        (Family::A, 1, 6) => Some(5),
        (Family::A, 1, 8) => Some(14),
        (Family::D, 4, 4) if ones => Some(3),
        (Family::E, 6, 4) => Some(3),
        _ => None,
    }
}

fn core_err(case: &Case) -> impl Fn(rotsieve_core::Error) -> Failure + '_ {
    move |e| failure(case.json(), e)
}

fn counting_suite(_: &BatteryOptions, cases: &[Case]) -> Result<u64, Failure> {
    let mut checks = 0;
    for case in cases {
        let rs = case.root_system();
        let seq = case.sequence(&rs);
        let err = core_err(case);
        let paths = enumerate_paths(&seq).map_err(&err)?.len();
        let dim = invariant_dim(&seq).map_err(&err)? as usize;
        let elems = TensorCrystal::new(&rs).invariant_elements(&seq).map_err(&err)?.len();
        let at = || json!({ "case": case.json(), "paths": paths, "invariant_dim": dim, "invariant_elements": elems });
        ensure(paths == dim && dim == elems, at, "path count, invariant dimension and crystal count disagree")?;
        if let Some(expected) = anchor(case) {
            ensure(paths == expected, at, "count differs from the anchor value")?;
        }
        let product: usize = seq
            .weights()
            .iter()
            .map(|l| rs.weyl_orbit(l).map(|o| o.len()))
            .product::<rotsieve_core::Result<usize>>()
            .map_err(&err)?;
        if product <= 100_000 {
            let unpruned = enumerate_paths_with(&seq, usize::MAX, false).map_err(&err)?;
            ensure(
                unpruned == enumerate_paths(&seq).map_err(&err)?,
                || case.json(),
                "pruned and unpruned enumeration differ",
            )?;
        }
        checks += 1;
    }
    Ok(checks)
}

fn rotation_suite(_: &BatteryOptions, cases: &[Case]) -> Result<u64, Failure> {
    let mut checks = 0;
    for case in cases {
        let rs = case.root_system();
        let seq = case.sequence(&rs);
        let err = core_err(case);
        let m = seq.len();
        let paths = enumerate_paths(&seq).map_err(&err)?;
        let target_seq = seq.rotated(1);
        let target = enumerate_paths(&target_seq).map_err(&err)?;
        let max_orbit = seq
            .weights()
            .iter()
            .map(|l| rs.weyl_orbit(l).map(|o| o.len()))
            .collect::<rotsieve_core::Result<Vec<_>>>()
            .map_err(&err)?
            .into_iter()
            .max()
            .unwrap_or(1);
        let mut images = BTreeSet::new();
        for p in &paths {
            let at = || json!({ "case": case.json(), "path": PathJson::encode(&seq, p) });
            let image = rotate(&seq, p).map_err(|e| failure(at(), e))?;
            ensure(target.binary_search(&image).is_ok(), at, "R(p) is not in P(λ^(1))")?;
            images.insert(image);
            let back = rotate_times(&seq, p, m).map_err(|e| failure(at(), e))?;
            ensure(back == *p, at, "R^m(p) differs from p")?;
            let trace = straighten_trace(&seq, p).map_err(|e| failure(at(), e))?;
            ensure(trace.len() <= m * max_orbit + 1, at, "r^max exceeded its step bound")?;
            check_trace(&seq, &trace).map_err(|msg| failure(at(), msg))?;
            checks += 1;
        }
        ensure(
            images.len() == target.len(),
            || case.json(),
            "R is not a bijection onto P(λ^(1))",
        )?;
    }
    Ok(checks)
}

fn check_trace(seq: &WeightSequence<'_>, trace: &[MinusculePath]) -> Result<(), String> {
    let tail = WeightSequence::new(seq.root_system(), seq.weights()[1..].to_vec())
        .map_err(|e| e.to_string())?;
    for pair in trace.windows(2) {
        let before = pair[0].dom_index().map_err(|e| e.to_string())?;
        let after = if pair[1].is_dominant() { usize::MAX } else { pair[1].dom_index().map_err(|e| e.to_string())? };
        if after <= before {
            return Err("dom did not increase under r".into());
        }
        MinusculePath::new(&tail, pair[1].points().to_vec())
            .map_err(|_| "r changed the Weyl orbit of a step".to_string())?;
    }
    Ok(())
}

fn promotion_suite(_: &BatteryOptions, cases: &[Case]) -> Result<u64, Failure> {
    let mut checks = 0;
    for case in cases.iter().filter(|c| c.family == Family::A) {
        let rs = case.root_system();
        let seq = case.sequence(&rs);
        let err = core_err(case);
        let m = seq.len();
        let next_seq = seq.rotated(1);
        for p in &enumerate_paths(&seq).map_err(&err)? {
            let at = || json!({ "case": case.json(), "path": PathJson::encode(&seq, p) });
            let t = path_to_tableau(&seq, p).map_err(|e| failure(at(), e))?;
            let back = tableau_to_path(&rs, &t).map_err(|e| failure(at(), e))?;
            ensure(back == (seq.clone(), p.clone()), at, "tableau does not map back to its path")?;
            let promoted = promote(&t);
            let valid = RowStrictTableau::new(promoted.rows().to_vec());
            ensure(valid.as_ref() == Ok(&promoted), at, "promote produced an invalid tableau")?;
            let mut shifted = t.content();
            shifted.rotate_left(1);
            ensure(promoted.content() == shifted, at, "promote did not shift the content")?;
            let rotated = rotate(&seq, p).map_err(|e| failure(at(), e))?;
            let expected = path_to_tableau(&next_seq, &rotated).map_err(|e| failure(at(), e))?;
            ensure(promoted == expected, at, "promotion and rotation disagree")?;
            let mut cur = t.clone();
            for _ in 0..m {
                cur = promote(&cur);
            }
            ensure(cur == t, at, "promote^m is not the identity")?;
            checks += 1;
        }
    }
    Ok(checks)
}

const FULL_CRYSTAL_LIMIT: usize = 20_000;
const CRYSTAL_SAMPLES: usize = 2_000;
const RANDOM_POLICIES: usize = 5;

fn crystal_suite(opts: &BatteryOptions, cases: &[Case]) -> Result<u64, Failure> {
    let mut checks = 0;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0xc0ffee);
    for case in cases {
        let rs = case.root_system();
        let seq = case.sequence(&rs);
        let err = core_err(case);
        let crystal = TensorCrystal::new(&rs);
        let paths = enumerate_paths(&seq).map_err(&err)?;

        let mut images: Vec<TensorCrystalElement> = paths.iter().map(path_bijection).collect();
        images.sort();
        let invariants = crystal.invariant_elements(&seq).map_err(&err)?;
        ensure(images == invariants, || case.json(), "path bijection misses invariant elements")?;
        for p in &paths {
            let at = || json!({ "case": case.json(), "path": PathJson::encode(&seq, p) });
            let b = path_bijection(p);
            let back: LittelmannPath = element_to_path(&seq, &b).map_err(|e| failure(at(), e))?;
            ensure(back == *p, at, "element_to_path does not invert path_bijection")?;
            let lhs = crystal.commutor_rotate(&seq, &b).map_err(|e| failure(at(), e))?;
            let rhs = path_bijection(&rotate(&seq, p).map_err(|e| failure(at(), e))?);
            ensure(lhs == rhs, at, "commutor rotation and path rotation disagree")?;
            checks += 1;
        }

        let orbits = seq
            .weights()
            .iter()
            .map(|l| rs.weyl_orbit(l))
            .collect::<rotsieve_core::Result<Vec<_>>>()
            .map_err(&err)?;
        let size: usize = orbits.iter().map(Vec::len).product();
        let elements: Vec<Vec<Weight>> = if size <= FULL_CRYSTAL_LIMIT {
            all_factor_lists(&orbits)
        } else {
            (0..CRYSTAL_SAMPLES)
                .map(|_| orbits.iter().map(|o| o.choose(&mut rng).cloned().unwrap()).collect())
                .collect()
        };
        for factors in elements {
            let b = TensorCrystalElement::new(&seq, factors).map_err(&err)?;
            check_element(&crystal, &seq, &b, &mut rng)
                .map_err(|msg| failure(json!({ "case": case.json(), "element": ElementJson::encode(&b) }), msg))?;
            checks += 1;
        }
    }
    Ok(checks)
}

fn all_factor_lists(orbits: &[Vec<Weight>]) -> Vec<Vec<Weight>> {
    let mut out: Vec<Vec<Weight>> = vec![Vec::new()];
    for orbit in orbits {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                orbit.iter().map(move |w| {
                    let mut next = prefix.clone();
                    next.push(w.clone());
                    next
                })
            })
            .collect();
    }
    out
}

fn w0(rs: &RootSystem, w: &Weight) -> Weight {
    Weight::from_coords((0..rs.rank()).map(|i| -w.coords()[rs.dual_node(i)]).collect())
}

fn check_element(
    crystal: &TensorCrystal<'_>,
    seq: &WeightSequence<'_>,
    b: &TensorCrystalElement,
    rng: &mut ChaCha8Rng,
) -> Result<(), String> {
    let rs = crystal.root_system();
    let s = |e: rotsieve_core::Error| e.to_string();
    let xi = crystal.schutzenberger(b).map_err(s)?;
    if crystal.schutzenberger(&xi).map_err(s)? != *b {
        return Err("ξ is not an involution".into());
    }
    if xi.weight() != w0(rs, &b.weight()) {
        return Err("wt(ξ b) differs from w0 · wt(b)".into());
    }
    for _ in 0..RANDOM_POLICIES {
        let seed: u64 = rng.gen();
        let mut policy_rng = ChaCha8Rng::seed_from_u64(seed);
        let mut policy = |c: &[usize]| c[policy_rng.gen_range(0..c.len())];
        if crystal.schutzenberger_with(b, &mut policy).map_err(s)? != xi {
            return Err("ξ depends on the raising order".into());
        }
    }
    for i in 0..rs.rank() {
        if let Some(up) = crystal.raise(i, b).map_err(s)? {
            if crystal.lower(i, &up).map_err(s)?.as_ref() != Some(b) {
                return Err("f_i e_i b differs from b".into());
            }
        }
        if let Some(down) = crystal.lower(i, b).map_err(s)? {
            if crystal.raise(i, &down).map_err(s)?.as_ref() != Some(b) {
                return Err("e_i f_i b differs from b".into());
            }
        }
    }
    let highest = crystal.is_highest(b);
    let lowest = crystal.is_lowest(b);
    for k in 1..seq.len() {
        let split = |range: std::ops::Range<usize>| -> Result<TensorCrystalElement, String> {
            let sub = WeightSequence::new(rs, seq.weights()[range.clone()].to_vec()).map_err(s)?;
            TensorCrystalElement::new(&sub, b.factors()[range].to_vec()).map_err(s)
        };
        if highest && !crystal.is_highest(&split(0..k)?) {
            return Err("highest element with a non-highest left factor".into());
        }
        if lowest && !crystal.is_lowest(&split(k..seq.len())?) {
            return Err("lowest element with a non-lowest right factor".into());
        }
    }
    Ok(())
}

fn kostka_suite(opts: &BatteryOptions, _: &[Case]) -> Result<u64, Failure> {
    let (max_size, random) = match opts.scope {
        Scope::Quick => (5, 0),
        Scope::Full => (6, 50),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x4b05);
    let mut checks = 0;
    for n in 1..=max_size {
        let parts = partitions(n);
        for nu in &parts {
            for gamma in &parts {
                check_kostka(opts, nu, gamma.parts(), &mut rng)?;
                checks += 1;
            }
        }
    }
    for _ in 0..random {
        let n = rng.gen_range(7..=8);
        let parts = partitions(n);
        let nu = parts.choose(&mut rng).unwrap();
        let gamma = parts.choose(&mut rng).unwrap();
        let mut content = gamma.parts().to_vec();
        content.shuffle(&mut rng);
        check_kostka(opts, nu, &content, &mut rng)?;
        checks += 1;
    }
    Ok(checks)
}

/// Charge against q-Kostant, plus the q = 1, degree and permutation checks.
pub fn compare_kostka(
    statistic: Statistic,
    nu: &Partition,
    content: &[u32],
) -> Result<IntPolynomial, String> {
    let by_charge = kostka_foulkes_by(nu, content, statistic).map_err(|e| e.to_string())?;
    let oracle = q_kostant(nu, content).map_err(|e| e.to_string())?;
    if by_charge != oracle {
        return Err(format!("charge gives {by_charge}, q-Kostant gives {oracle}"));
    }
    let sorted = Partition::sorted(content);
    let count = semistandard_tableaux(nu, &sorted).len() as i64;
    if by_charge.eval(1) != count {
        return Err("K(1) differs from the number of tableaux".into());
    }
    if let Some(deg) = by_charge.degree() {
        if deg as u64 != sorted.n_statistic() - nu.n_statistic() {
            return Err("degree differs from n(γ) - n(ν)".into());
        }
    }
    Ok(by_charge)
}

fn check_kostka(
    opts: &BatteryOptions,
    nu: &Partition,
    content: &[u32],
    rng: &mut ChaCha8Rng,
) -> Result<(), Failure> {
    let at = || json!({ "shape": nu.parts(), "content": content });
    let k = compare_kostka(opts.statistic, nu, content).map_err(|msg| failure(at(), msg))?;
    let mut permuted = content.to_vec();
    permuted.shuffle(rng);
    let again = kostka_foulkes_by(nu, &permuted, opts.statistic).map_err(|e| failure(at(), e))?;
    ensure(again == k, at, "K depends on the order of the content")
}

fn csp_suite(opts: &BatteryOptions, cases: &[Case]) -> Result<u64, Failure> {
    let max_r = match opts.scope {
        Scope::Quick => 12,
        Scope::Full => 48,
    };
    let mut checks = 0;
    for r in 1..=max_r {
        let product = (1..=r)
            .filter(|d| r % d == 0)
            .fold(IntPolynomial::one(), |acc, d| &acc * &cyclotomic(d));
        let expected = &IntPolynomial::monomial(1, r) - &IntPolynomial::one();
        ensure(product == expected, || json!({ "r": r }), "Π Φ_d differs from q^r - 1")?;
        checks += 1;
    }
    for case in cases.iter().filter(|c| c.family == Family::A) {
        let rs = case.root_system();
        let seq = case.sequence(&rs);
        let err = core_err(case);
        ensure(
            twice_exponent_from_content(&seq) == rs.two_rho_pairing(&seq.total()),
            || case.json(),
            "(n²b - Σ i²)/2 differs from ⟨|λ|, ρ∨⟩",
        )?;
        if !rs.in_root_lattice(&seq.total()) {
            // No sieving instance: P(λ) is empty and the check must refuse.
            ensure(
                enumerate_paths(&seq).map_err(&err)?.is_empty()
                    && csp_check(&seq, seq.len(), None) == Err(rotsieve_core::Error::NotInRootLattice),
                || case.json(),
                "total weight outside the root lattice was not rejected",
            )?;
            checks += 1;
            continue;
        }
        let exponent = RectangularData::new(&seq).map_err(&err)?.q_exponent();
        ensure(
            exponent.map(|e| 2 * e as i64) == Some(rs.two_rho_pairing(&seq.total())),
            || case.json(),
            "q exponent of the rectangle differs from ⟨|λ|, ρ∨⟩",
        )?;
        for ell in (1..=seq.len()).filter(|&l| seq.is_periodic(l)) {
            let at = || json!({ "case": case.json(), "ell": ell });
            let report = csp_check(&seq, ell, None).map_err(|e| failure(at(), e))?;
            ensure(report.verdict == Verdict::Pass, at, "cyclic sieving check failed")?;
            let r = report.r;
            let f1 = report.polynomial.eval(1);
            ensure(eval_matches(&report.polynomial, r, 0, f1), at, "f(ζ^0) differs from f(1)")?;
            for d in 0..r {
                let g = gcd(d, r);
                ensure(
                    report.fixed_counts[d] == report.fixed_counts[g % r],
                    at,
                    "fixed counts depend on more than gcd(d, r)",
                )?;
            }
            checks += 1;
        }
    }
    Ok(checks)
}

/// `n²b - Σ i_j²` with `n²b` written as `n Σ i_j`, which makes sense even
/// when `n` does not divide `Σ i_j`. Twice the `q` exponent.
pub fn twice_exponent_from_content(seq: &WeightSequence<'_>) -> i64 {
    let n = seq.root_system().rank() as i64 + 1;
    let content: Vec<i64> = seq.nodes().iter().map(|&i| i as i64 + 1).collect();
    n * content.iter().sum::<i64>() - content.iter().map(|i| i * i).sum::<i64>()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_scope_selection() {
        let quick = cases(Scope::Quick);
        assert_eq!(quick.len(), 6);
        assert!(quick.iter().all(|c| c.family == Family::A && c.rank <= 2 && c.nodes.len() <= 6));
        assert_eq!(cases(Scope::Full).len(), 11);
    }

    #[test]
    fn weyl_orders() {
        assert_eq!(weyl_order(Family::A, 3), 24);
        assert_eq!(weyl_order(Family::B, 3), 48);
        assert_eq!(weyl_order(Family::D, 4), 192);
        assert_eq!(weyl_order(Family::E, 6), 51_840);
    }

    #[test]
    fn grid_size() {
        assert_eq!(grid(2, 3).count(), 49);
        assert_eq!(grid(1, 1).map(|w| w.coords()[0]).collect::<Vec<_>>(), vec![-1, 0, 1]);
    }
}
