//! Exhaustive cross-checks grouped into suites, as run by `pellhopf verify`.
//!
//! Checks are independent and pure, so they run in parallel; reports come
//! back in a fixed order regardless of the number of workers.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{Basis, Coefficient, ModuleElement, TensorElement};
use crate::congruence::{
    av_coproduct, av_dual_coproduct, av_dual_product, av_product, av_product_by_restriction,
    avoids, c_map, congruence_class, coproduct_via_intervals, enumerate_avoiders, good_sets,
    interval_blocks, pi_down, pi_up, r_map, terms_for_set, CongruenceSystem,
};
use crate::error::{Error, Result};
use crate::extrinsic::{
    extrinsic_coproduct, extrinsic_dual_coproduct, extrinsic_gamma, extrinsic_product,
};
use crate::mr::{
    inv_map, mr_coproduct, mr_dual_coproduct, mr_dual_product, mr_product, PermElement,
};
use crate::perm::{all_permutations, inverse, leq_unchecked, weak_covers_up, IndexSet, Permutation};
use crate::sash::{
    enumerate_sashes, eta, is_pell, sash_covers_up, sash_interval, sash_leq, sashes_of_grade,
    sigma, Sash,
};
use crate::sash_hopf::{
    allowable_set_to_dotting, allowable_sets, bounds, build_ab,
    enumerate_allowable_dottings, gamma, matches_form, sash_coproduct, sash_dual_coproduct,
    sash_dual_product, sash_product, tau,
};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Suite {
    Bijection,
    Congruence,
    IntrinsicVsExtrinsic,
    HopfAxioms,
    Duality,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Bijection,
        Suite::Congruence,
        Suite::IntrinsicVsExtrinsic,
        Suite::HopfAxioms,
        Suite::Duality,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Bijection => "bijection",
            Suite::Congruence => "congruence",
            Suite::IntrinsicVsExtrinsic => "intrinsic-vs-extrinsic",
            Suite::HopfAxioms => "hopf-axioms",
            Suite::Duality => "duality",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Parses a suite name, `all` standing for every suite.
pub fn parse_suites(s: &str) -> Result<Vec<Suite>> {
    if s == "all" {
        Ok(Suite::ALL.to_vec())
    } else {
        Ok(vec![s.parse()?])
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub max_grade: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_grade: 6,
            seed: 0x5eed,
        }
    }
}

/// Outcome of one check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub suite: Suite,
    pub name: String,
    pub cases: usize,
    pub note: String,
    pub failure: Option<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {}/{} cases={}", self.suite, self.name, self.cases)?;
        if !self.note.is_empty() {
            write!(f, " {}", self.note)?;
        }
        if let Some(fail) = &self.failure {
            write!(f, " counterexample: {fail}")?;
        }
        Ok(())
    }
}

#[derive(Default)]
struct Tally {
    cases: usize,
    note: String,
    failure: Option<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }
}

type CheckFn = fn(&VerifyOptions) -> Tally;

fn checks(suite: Suite) -> Vec<(&'static str, CheckFn)> {
    match suite {
        Suite::Bijection => vec![
            ("pell-counts", pell_counts),
            ("eta-sigma-inverse", eta_sigma_inverse),
            ("pell-characterization", pell_characterization),
            ("sash-order", sash_order),
        ],
        Suite::Congruence => vec![
            ("sigma-fibers", sigma_fibers),
            ("classes-are-intervals", classes_are_intervals),
            ("confluence", confluence),
            ("projections-monotone", projections_monotone),
            ("restriction-routes", restriction_routes),
            ("interval-coproduct", interval_coproduct),
            ("interval-coproduct-random", interval_coproduct_random),
            ("allowable-good-sets", allowable_good_sets),
        ],
        Suite::IntrinsicVsExtrinsic => vec![
            ("product", ie_product),
            ("coproduct", ie_coproduct),
            ("gamma", ie_gamma),
            ("dual-coproduct", ie_dual_coproduct),
            ("dual-product-blocks", dual_product_blocks),
            ("extremality", extremality),
        ],
        Suite::HopfAxioms => vec![
            ("mr/associativity", |o| associativity(&mr(), o)),
            ("mr/coassociativity", |o| coassociativity(&mr(), o)),
            ("mr/compatibility", |o| compatibility(&mr(), o)),
            ("mr/unit-counit", |o| unit_counit(&mr(), o)),
            ("mr-dual/associativity", |o| associativity(&mr_dual(), o)),
            ("mr-dual/coassociativity", |o| coassociativity(&mr_dual(), o)),
            ("mr-dual/compatibility", |o| compatibility(&mr_dual(), o)),
            ("av/associativity", |o| associativity(&av(), o)),
            ("av/coassociativity", |o| coassociativity(&av(), o)),
            ("av/compatibility", |o| compatibility(&av(), o)),
            ("av/unit-counit", |o| unit_counit(&av(), o)),
            ("av-dual/associativity", |o| associativity(&av_dual(), o)),
            ("av-dual/coassociativity", |o| coassociativity(&av_dual(), o)),
            ("av-dual/compatibility", |o| compatibility(&av_dual(), o)),
            ("sash/associativity", |o| associativity(&sash(), o)),
            ("sash/coassociativity", |o| coassociativity(&sash(), o)),
            ("sash/compatibility", |o| compatibility(&sash(), o)),
            ("sash/unit-counit", |o| unit_counit(&sash(), o)),
            ("sash-dual/associativity", |o| associativity(&sash_dual(), o)),
            ("sash-dual/coassociativity", |o| coassociativity(&sash_dual(), o)),
            ("sash-dual/compatibility", |o| compatibility(&sash_dual(), o)),
        ],
        Suite::Duality => vec![
            ("mr/product-dual-coproduct", |o| adjunction(&mr(), &mr_dual(), o)),
            ("mr/dual-product-coproduct", |o| adjunction(&mr_dual(), &mr(), o)),
            ("mr/inverse-identities", mr_inverse_identities),
            ("av/product-dual-coproduct", |o| adjunction(&av(), &av_dual(), o)),
            ("av/dual-product-coproduct", |o| adjunction(&av_dual(), &av(), o)),
            ("sash/product-dual-coproduct", |o| adjunction(&sash(), &sash_dual(), o)),
            ("sash/dual-product-coproduct", |o| adjunction(&sash_dual(), &sash(), o)),
        ],
    }
}

/// Runs the given suites; the report order depends only on `suites`.
pub fn run(suites: &[Suite], opts: &VerifyOptions) -> Vec<CheckReport> {
    let jobs: Vec<(Suite, &'static str, CheckFn)> = suites
        .iter()
        .flat_map(|&s| checks(s).into_iter().map(move |(name, f)| (s, name, f)))
        .collect();
    jobs.par_iter()
        .map(|&(suite, name, f)| {
            let t = f(opts);
            CheckReport {
                suite,
                name: name.to_string(),
                cases: t.cases,
                note: t.note,
                failure: t.failure,
            }
        })
        .collect()
}

fn pell() -> CongruenceSystem {
    CongruenceSystem::pell()
}

// ---- bijection ----

fn pell_counts(o: &VerifyOptions) -> Tally {
    let mut t = Tally::default();
    let u = pell();
    let (mut prev, mut cur) = (0u64, 1u64);
    let mut counts = Vec::new();
    for n in 1..=o.max_grade {
        let sashes = enumerate_sashes(n as i64 - 1).expect("length >= 0").len() as u64;
        let avoiders = enumerate_avoiders(n, &u).len() as u64;
        t.check(sashes == cur && avoiders == cur, || {
            format!("n={n}: sashes={sashes} avoiders={avoiders} expected={cur}")
        });
        counts.push(cur.to_string());
        (prev, cur) = (cur, 2 * cur + prev);
    }
    t.note = format!("counts={}", counts.join(","));
    t
}

fn eta_sigma_inverse(o: &VerifyOptions) -> Tally {
    let mut t = Tally::default();
    let u = pell();
    for n in 0..=o.max_grade {
        for x in enumerate_avoiders(n, &u) {
            t.check(eta(&sigma(&x)) == x, || format!("η(σ({x})) != {x}"));
        }
        for a in sashes_of_grade(n) {
            let x = eta(&a);
            t.check(sigma(&x) == a && is_pell(&x), || format!("σ(η({a})) != {a}"));
        }
    }
    t
}

fn pell_characterization(o: &VerifyOptions) -> Tally {
    let mut t = Tally::default();
    let u = pell();
    for n in 0..=o.max_grade.min(8) {
        for x in all_permutations(n) {
            t.check(is_pell(&x) == avoids(&x, &u), || format!("{x}"));
        }
    }
    t
}

fn sash_order(o: &VerifyOptions) -> Tally {
    let mut t = Tally::default();
    for len in 0..o.max_grade.min(7) {
        let sashes = enumerate_sashes(len as i64).expect("length >= 0");
        for a in &sashes {
            let mut reach = BTreeSet::from([a.clone()]);
            let mut stack = vec![a.clone()];
            while let Some(s) = stack.pop() {
                for up in sash_covers_up(&s).expect("not the unit") {
                    if reach.insert(up.clone()) {
                        stack.push(up);
                    }
                }
            }
            for b in &sashes {
                let leq = sash_leq(a, b).expect("same grade");
                t.check(leq == reach.contains(b), || format!("{a} <= {b}"));
            }
        }
    }
    t
}

// ---- congruence ----

fn sigma_fibers(o: &VerifyOptions) -> Tally {
    let mut t = Tally::default();
    let u = pell();
    for n in 0..=o.max_grade.min(7) {
        let mut fiber_min: HashMap<Sash, Permutation> = HashMap::new();
        for x in all_permutations(n) {
            let low = pi_down(&x, &u);
            let s = sigma(&x);
            t.check(s == sigma(&low), || format!("σ({x}) != σ(π↓({x}))"));
            let seen = fiber_min.entry(s).or_insert_with(|| low.clone());
            t.check(*seen == low, || format!("σ-fiber of {x} meets two π↓-classes"));
        }
    }
    t
}

fn classes_are_intervals(o: &VerifyOptions) -> Tally {
    let mut t = Tally::default();
    let u = pell();
    for n in 0..=o.max_grade.min(7) {
        let mut fibers: BTreeMap<Permutation, Vec<Permutation>> = BTreeMap::new();
        for x in all_permutations(n) {
            fibers.entry(pi_down(&x, &u)).or_default().push(x);
        }
        for (low, mut members) in fibers {
            members.sort();
            t.check(congruence_class(&low, &u) == members, || format!("class of {low}"));
            t.check(members.iter().all(|m| pi_up(m, &u) == pi_up(&low, &u)), || {
                format!("π↑ not constant on the class of {low}")
            });
        }
    }
    t
}

/// Terminal permutations of every sequence of π↓-moves starting at `x`.
fn terminals(
    x: &Permutation,
    u: &CongruenceSystem,
    memo: &mut HashMap<Permutation, BTreeSet<Permutation>>,
) -> BTreeSet<Permutation> {
    if let Some(done) = memo.get(x) {
        return done.clone();
    }
    let moves = u.down_moves(x);
    let out = if moves.is_empty() {
        BTreeSet::from([x.clone()])
    } else {
        let mut acc = BTreeSet::new();
        for i in moves {
            acc.extend(terminals(&x.swapped(i), u, memo));
        }
        acc
    };
    memo.insert(x.clone(), out.clone());
    out
}

fn confluence(o: &VerifyOptions) -> Tally {
    let mut t = Tally::default();
    let u = pell();
    for n in 0..=o.max_grade.min(6) {
        let mut memo = HashMap::new();
        for x in all_permutations(n) {
            let ends = terminals(&x, &u, &mut memo);
            t.check(ends == BTreeSet::from([pi_down(&x, &u)]), || {
                format!("{x} reaches {} terminal permutations", ends.len())
            });
        }
    }
    t
}

fn projections_monotone(o: &VerifyOptions) -> Tally {
    let mut t = Tally::default();
    let u = pell();
    for n in 0..=o.max_grade.min(7) {
        for x in all_permutations(n) {
            let (dx, ux) = (pi_down(&x, &u), pi_up(&x, &u));
            for y in weak_covers_up(&x) {
                let ok = leq_unchecked(&dx, &pi_down(&y, &u)) && leq_unchecked(&ux, &pi_up(&y, &u));
                t.check(ok, || format!("{x} < {y}"));
            }
        }
    }
    t
}

fn restriction_routes(o: &VerifyOptions) -> Tally {
    let mut t = Tally::default();
    let u = pell();
    let g = o.max_grade.min(6);
    for n in 0..=g {
        for z in enumerate_avoiders(n, &u) {
            let e = PermElement::basis(z.clone());
            t.check(r_map(&c_map(&e, &u).expect("avoider"), &u) == e, || format!("r(c({z}))"));
        }
        for p in 0..=n {
            for x in enumerate_avoiders(p, &u) {
                for y in enumerate_avoiders(n - p, &u) {
                    let ok = av_product(&x, &y, &u) == av_product_by_restriction(&x, &y, &u);
                    t.check(ok, || format!("{x} •Av {y}"));
                }
            }
        }
    }
    t
}

fn check_blocks(z: &Permutation, u: &CongruenceSystem, t: &mut Tally) {
    t.check(
        coproduct_via_intervals(z, u) == av_coproduct(z, u).expect("avoider"),
        || format!("ΔAv({z})"),
    );
    for block in interval_blocks(z, u) {
        let mut from_block: Vec<_> = block
            .left
            .iter()
            .flat_map(|x| block.right.iter().map(move |y| (x.clone(), y.clone())))
            .collect();
        from_block.sort();
        t.check(from_block == terms_for_set(z, &block.set, u), || {
            format!("z={z} T={}", block.set)
        });
    }
}

fn interval_coproduct(o: &VerifyOptions) -> Tally {
    let mut t = Tally::default();
    let u = pell();
    for n in 0..=o.max_grade.min(6) {
        for z in enumerate_avoiders(n, &u) {
            check_blocks(&z, &u, &mut t);
        }
    }
    t
}

fn interval_coproduct_random(o: &VerifyOptions) -> Tally {
    let mut t = Tally::default();
    let u = pell();
    let mut rng = ChaCha8Rng::seed_from_u64(o.seed);
    let n = o.max_grade.min(7);
    let pool = enumerate_avoiders(n, &u);
    for _ in 0..24 {
        let z = pool.choose(&mut rng).expect("nonempty");
        check_blocks(z, &u, &mut t);
    }
    t.note = format!("seed={}", o.seed);
    t
}

fn allowable_good_sets(o: &VerifyOptions) -> Tally {
    let mut t = Tally::default();
    let u = pell();
    for g in 1..=o.max_grade.min(7) {
        for c in sashes_of_grade(g) {
            let z = eta(&c);
            let mut sets: BTreeSet<IndexSet> = allowable_sets(&c).into_iter().collect();
            sets.insert(IndexSet::new());
            sets.insert(IndexSet::first(g));
            let good: BTreeSet<IndexSet> = good_sets(&z, &u).into_iter().collect();
            t.check(sets == good, || format!("allowable sets of {c}"));
            for set in allowable_sets(&c) {
                let x = tau(&c, &set).expect("allowable");
                let prefix: IndexSet = x.entries()[..set.len()].iter().copied().collect();
                let ok = prefix == set && sigma(&x) == c && pi_down(&x, &u) == z;
                t.check(ok, || format!("τ({c}, {set}) = {x}"));
            }
        }
    }
    t
}

// ---- intrinsic vs extrinsic ----

fn grade_pairs(total: usize) -> Vec<(Sash, Sash)> {
    let mut out = Vec::new();
    for g in 0..=total {
        for p in 0..=g {
            for a in sashes_of_grade(p) {
                for b in sashes_of_grade(g - p) {
                    out.push((a.clone(), b));
                }
            }
        }
    }
    out
}

fn ie_product(o: &VerifyOptions) -> Tally {
    let mut t = Tally::default();
    for (a, b) in grade_pairs(o.max_grade) {
        t.check(sash_product(&a, &b) == extrinsic_product(&a, &b), || format!("{a} •S {b}"));
    }
    t
}

fn ie_coproduct(o: &VerifyOptions) -> Tally {
    let mut t = Tally::default();
    for g in 0..=o.max_grade {
        for c in sashes_of_grade(g) {
            t.check(sash_coproduct(&c) == extrinsic_coproduct(&c), || format!("ΔS({c})"));
        }
    }
    t
}

fn ie_gamma(o: &VerifyOptions) -> Tally {
    let mut t = Tally::default();
    for (d, e) in grade_pairs(o.max_grade) {
        let n = d.grade() + e.grade();
        for set in IndexSet::subsets_of_size(n, d.grade()) {
            let ok = gamma(&set, &d, &e).ok() == extrinsic_gamma(&set, &d, &e).ok();
            t.check(ok, || format!("γ_{set}({d} ⊗ {e})"));
        }
    }
    t
}

fn ie_dual_coproduct(o: &VerifyOptions) -> Tally {
    let mut t = Tally::default();
    for g in 0..=o.max_grade {
        for c in sashes_of_grade(g) {
            t.check(sash_dual_coproduct(&c) == extrinsic_dual_coproduct(&c), || format!("m*S({c})"));
        }
    }
    t
}

fn dual_product_blocks(o: &VerifyOptions) -> Tally {
    let mut t = Tally::default();
    for g in 1..=o.max_grade.min(6) {
        for c in sashes_of_grade(g) {
            for set in allowable_sets(&c) {
                let p = set.len();
                let mut solutions = Vec::new();
                for d in sashes_of_grade(p) {
                    for e in sashes_of_grade(g - p) {
                        if gamma(&set, &d, &e).expect("sizes agree") == c {
                            solutions.push((d.clone(), e));
                        }
                    }
                }
                let block = bounds(&allowable_set_to_dotting(&c, &set).expect("allowable"))
                    .expect("allowable");
                let mut from_block: Vec<_> = block
                    .left()
                    .into_iter()
                    .flat_map(|a| block.right().into_iter().map(move |b| (a.clone(), b)))
                    .collect();
                from_block.sort();
                solutions.sort();
                t.check(from_block == solutions, || format!("C={c} T={set}"));
            }
        }
    }
    t
}

fn extremality(o: &VerifyOptions) -> Tally {
    let mut t = Tally::default();
    for g in 1..=o.max_grade.min(6) {
        for c in sashes_of_grade(g) {
            for d in enumerate_allowable_dottings(&c).expect("not the unit") {
                let (a_hat, b_hat) = build_ab(&d).expect("allowable");
                let block = bounds(&d).expect("allowable");
                for (hat, lo, hi) in [
                    (&a_hat, &block.lower_a, &block.upper_a),
                    (&b_hat, &block.lower_b, &block.upper_b),
                ] {
                    let matching: Vec<Sash> = sashes_of_grade(hat.len() + 1)
                        .into_iter()
                        .filter(|x| matches_form(x, hat))
                        .collect();
                    let interval = sash_interval(lo, hi);
                    t.check(interval.as_ref() == Ok(&matching), || format!("{d}: form {hat}"));
                }
            }
        }
    }
    t
}

// ---- Hopf structures ----

struct Structure<B: Basis> {
    basis: Box<dyn Fn(usize) -> Vec<B>>,
    product: Box<dyn Fn(&B, &B) -> ModuleElement<B>>,
    coproduct: Box<dyn Fn(&B) -> TensorElement<B>>,
    unit: B,
}

fn mr() -> Structure<Permutation> {
    Structure {
        basis: Box::new(all_permutations),
        product: Box::new(mr_product),
        coproduct: Box::new(mr_coproduct),
        unit: Permutation::empty(),
    }
}

fn mr_dual() -> Structure<Permutation> {
    Structure {
        basis: Box::new(all_permutations),
        product: Box::new(mr_dual_product),
        coproduct: Box::new(mr_dual_coproduct),
        unit: Permutation::empty(),
    }
}

fn av() -> Structure<Permutation> {
    let u = pell();
    let (u1, u2, u3) = (u.clone(), u.clone(), u);
    Structure {
        basis: Box::new(move |n| enumerate_avoiders(n, &u1)),
        product: Box::new(move |x, y| av_product(x, y, &u2).expect("avoiders")),
        coproduct: Box::new(move |z| av_coproduct(z, &u3).expect("avoider")),
        unit: Permutation::empty(),
    }
}

fn av_dual() -> Structure<Permutation> {
    let u = pell();
    let (u1, u2, u3) = (u.clone(), u.clone(), u);
    Structure {
        basis: Box::new(move |n| enumerate_avoiders(n, &u1)),
        product: Box::new(move |x, y| av_dual_product(x, y, &u2).expect("avoiders")),
        coproduct: Box::new(move |z| av_dual_coproduct(z, &u3).expect("avoider")),
        unit: Permutation::empty(),
    }
}

fn sash() -> Structure<Sash> {
    Structure {
        basis: Box::new(sashes_of_grade),
        product: Box::new(sash_product),
        coproduct: Box::new(sash_coproduct),
        unit: Sash::unit(),
    }
}

fn sash_dual() -> Structure<Sash> {
    Structure {
        basis: Box::new(sashes_of_grade),
        product: Box::new(sash_dual_product),
        coproduct: Box::new(sash_dual_coproduct),
        unit: Sash::unit(),
    }
}

fn associativity<B: Basis>(s: &Structure<B>, o: &VerifyOptions) -> Tally {
    let mut t = Tally::default();
    let g = o.max_grade;
    for p in 0..=g {
        for q in 0..=g - p {
            for r in 0..=g - p - q {
                for a in (s.basis)(p) {
                    for b in (s.basis)(q) {
                        let ab = (s.product)(&a, &b);
                        for c in (s.basis)(r) {
                            let bc = (s.product)(&b, &c);
                            let left = ab.map_linear(|x| (s.product)(x, &c));
                            let right = bc.map_linear(|y| (s.product)(&a, y));
                            t.check(left == right, || format!("({a} {b}) {c}"));
                        }
                    }
                }
            }
        }
    }
    t
}

fn coassociativity<B: Basis>(s: &Structure<B>, o: &VerifyOptions) -> Tally {
    let mut t = Tally::default();
    for n in 0..=o.max_grade {
        for z in (s.basis)(n) {
            let d = (s.coproduct)(&z);
            t.check(d.expand_left(&s.coproduct) == d.expand_right(&s.coproduct), || z.to_string());
        }
    }
    t
}

fn compatibility<B: Basis>(s: &Structure<B>, o: &VerifyOptions) -> Tally {
    let mut t = Tally::default();
    for p in 0..=o.max_grade {
        for q in 0..=o.max_grade - p {
            for a in (s.basis)(p) {
                let da = (s.coproduct)(&a);
                for b in (s.basis)(q) {
                    let left = (s.product)(&a, &b).map_to_tensor(&s.coproduct);
                    let right = da.multiply(&(s.coproduct)(&b), &s.product);
                    t.check(left == right, || format!("Δ({a} {b})"));
                }
            }
        }
    }
    t
}

fn unit_counit<B: Basis>(s: &Structure<B>, o: &VerifyOptions) -> Tally {
    let mut t = Tally::default();
    let one = &s.unit;
    for n in 0..=o.max_grade {
        for x in (s.basis)(n) {
            let single = ModuleElement::basis(x.clone());
            t.check((s.product)(one, &x) == single && (s.product)(&x, one) == single, || {
                format!("unit times {x}")
            });
            let d = (s.coproduct)(&x);
            let left = d.filter(|a, _| a == one);
            let right = d.filter(|_, b| b == one);
            let ok = left == TensorElement::basis(one.clone(), x.clone())
                && right == TensorElement::basis(x.clone(), one.clone());
            t.check(ok, || format!("counit on Δ({x})"));
        }
    }
    t
}

/// `⟨x y, z⟩ = ⟨x ⊗ y, Δ'(z)⟩` where the product comes from `s` and the
/// coproduct from `dual`.
fn adjunction<B: Basis>(s: &Structure<B>, dual: &Structure<B>, o: &VerifyOptions) -> Tally {
    let mut t = Tally::default();
    for n in 0..=o.max_grade {
        let mut from_product: BTreeMap<(B, B, B), Coefficient> = BTreeMap::new();
        for p in 0..=n {
            for a in (s.basis)(p) {
                for b in (s.basis)(n - p) {
                    for (z, c) in (s.product)(&a, &b).terms() {
                        from_product.insert((a.clone(), b.clone(), z.clone()), c.clone());
                    }
                }
            }
        }
        for z in (s.basis)(n) {
            for ((a, b), c) in (dual.coproduct)(&z).terms() {
                let key = (a.clone(), b.clone(), z.clone());
                let ok = from_product.remove(&key).as_ref() == Some(c);
                t.check(ok, || format!("⟨{a} {b}, {z}⟩"));
            }
        }
        t.check(from_product.is_empty(), || {
            let ((a, b, z), _) = from_product.iter().next().expect("nonempty");
            format!("⟨{a} {b}, {z}⟩ missing from the dual side")
        });
    }
    t
}

fn mr_inverse_identities(o: &VerifyOptions) -> Tally {
    let mut t = Tally::default();
    let g = o.max_grade.min(7);
    for n in 0..=g {
        for z in all_permutations(n) {
            let via_inverse = mr_coproduct(&inverse(&z)).map_basis(inverse);
            t.check(mr_dual_coproduct(&z) == via_inverse, || format!("m*({z})"));
        }
        for p in 0..=n {
            for x in all_permutations(p) {
                for y in all_permutations(n - p) {
                    let via_inverse = inv_map(&mr_product(&inverse(&x), &inverse(&y)));
                    t.check(mr_dual_product(&x, &y) == via_inverse, || format!("Δ*({x} ⊗ {y})"));
                }
            }
        }
    }
    t
}
