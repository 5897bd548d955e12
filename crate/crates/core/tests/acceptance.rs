//! Acceptance criteria, one line of output per criterion.
//!
//! Runs without the libtest harness so that each criterion reports on its own
//! line; the process exits non-zero if any criterion fails.

use std::collections::{BTreeSet, HashMap};
use std::panic;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use pellhopf::algebra::{Basis, ModuleElement, TensorElement};
use pellhopf::congruence::{
    av_coproduct, coproduct_via_intervals, enumerate_avoiders, interval_blocks, pi_down,
    CongruenceSystem,
};
use pellhopf::perm::{all_permutations, IndexSet, Permutation, Word};
use pellhopf::sash::{enumerate_sashes, eta, is_pell, sash_interval, sash_leq, sashes_of_grade, sigma, Sash};
use pellhopf::sash_hopf::{
    allowable_sets, bounds, build_ab, enumerate_allowable_dottings, gamma, matches_form,
    sash_coproduct, sash_dual_coproduct, sash_product, tau,
};
use pellhopf::verify::{run, Suite, VerifyOptions};

type SashElement = ModuleElement<Sash>;
type SashTensor = TensorElement<Sash>;

// ---- independent oracles on plain vectors ----

fn perm(v: &[u32]) -> Permutation {
    Permutation::new(v.to_vec()).expect("permutation")
}

fn pos_of(x: &[u32]) -> Vec<usize> {
    let mut pos = vec![0; x.len() + 1];
    for (i, &v) in x.iter().enumerate() {
        pos[v as usize] = i;
    }
    pos
}

/// The descent at `i` carries a `2(31)` or `(41)23` instance.
fn pell_instance_at(x: &[u32], i: usize) -> bool {
    let (hi, lo) = (x[i], x[i + 1]);
    if hi <= lo {
        return false;
    }
    let pos = pos_of(x);
    let middle: Vec<usize> = (lo + 1..hi).map(|v| pos[v as usize]).collect();
    let left_31 = middle.iter().any(|&p| p < i);
    let right_pair = middle
        .iter()
        .enumerate()
        .any(|(a, &pa)| pa > i + 1 && middle[a + 1..].iter().any(|&pb| pb > i + 1));
    left_31 || right_pair
}

fn inversions(x: &[u32]) -> BTreeSet<(u32, u32)> {
    let mut out = BTreeSet::new();
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            if x[i] > x[j] {
                out.insert((x[i], x[j]));
            }
        }
    }
    out
}

fn below(x: &[u32], y: &[u32]) -> bool {
    inversions(x).is_subset(&inversions(y))
}

fn standardized(w: &[u32]) -> Vec<u32> {
    let mut sorted = w.to_vec();
    sorted.sort_unstable();
    w.iter().map(|v| sorted.binary_search(v).expect("present") as u32 + 1).collect()
}

fn shifted_shuffles(x: &[u32], y: &[u32]) -> Vec<Vec<u32>> {
    let shift = x.len() as u32;
    let y: Vec<u32> = y.iter().map(|v| v + shift).collect();
    let mut out = Vec::new();
    fn go(x: &[u32], y: &[u32], acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if x.is_empty() && y.is_empty() {
            out.push(acc.clone());
            return;
        }
        if let Some((&h, rest)) = x.split_first() {
            acc.push(h);
            go(rest, y, acc, out);
            acc.pop();
        }
        if let Some((&h, rest)) = y.split_first() {
            acc.push(h);
            go(x, rest, acc, out);
            acc.pop();
        }
    }
    go(x, &y, &mut Vec::new(), &mut out);
    out
}

fn sig(x: &[u32]) -> Sash {
    sigma(&Word::new(x.to_vec()).expect("distinct"))
}

fn pell_seq(n: usize) -> u64 {
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 1..n {
        (a, b) = (b, 2 * b + a);
    }
    b
}

/// Groups `S_n` by `σ`; each group is a congruence class.
fn sigma_fibers(n: usize) -> HashMap<Sash, Vec<Vec<u32>>> {
    let mut out: HashMap<Sash, Vec<Vec<u32>>> = HashMap::new();
    for x in all_permutations(n) {
        out.entry(sigma(&x)).or_default().push(x.entries().to_vec());
    }
    out
}

// ---- criteria ----

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn counting() -> Result<String, String> {
    let u = CongruenceSystem::pell();
    let mut counts = Vec::new();
    for n in 1..=9 {
        let expected = pell_seq(n);
        let sashes = enumerate_sashes(n as i64 - 1).map_err(|e| e.to_string())?.len() as u64;
        let avoiders = enumerate_avoiders(n, &u).len() as u64;
        ensure(sashes == expected && avoiders == expected, || {
            format!("n={n}: sashes={sashes} avoiders={avoiders} expected={expected}")
        })?;
        counts.push(expected.to_string());
    }
    Ok(counts.join(","))
}

fn bijection() -> Result<String, String> {
    ensure(sig(&[4, 2, 1, 3, 6, 5]).to_string() == "wrbw", || "σ(421365)".into())?;
    ensure(eta(&"wrbw".parse().unwrap()).entries() == [4, 2, 1, 3, 6, 5], || "η(wrbw)".into())?;
    let mut checked = 0;
    for n in 1..=9 {
        let pell: Vec<Permutation> = all_permutations(n)
            .into_iter()
            .filter(|x| (0..n.saturating_sub(1)).all(|i| !pell_instance_at(x.entries(), i)))
            .collect();
        for x in &pell {
            ensure(&eta(&sigma(x)) == x, || format!("η(σ({x}))"))?;
        }
        let sashes = enumerate_sashes(n as i64 - 1).unwrap();
        let images: BTreeSet<Permutation> = sashes.iter().map(eta).collect();
        for a in &sashes {
            ensure(&sigma(&eta(a)) == a, || format!("σ(η({a}))"))?;
        }
        ensure(images == pell.iter().cloned().collect(), || format!("η(Σ_{}) != P_{n}", n - 1))?;
        checked += pell.len();
    }
    Ok(format!("{checked} Pell permutations"))
}

fn fibers_and_confluence() -> Result<String, String> {
    let u = CongruenceSystem::pell();
    for n in 0..=7 {
        let fibers = sigma_fibers(n);
        for (s, members) in &fibers {
            let lows: BTreeSet<Permutation> = members.iter().map(|m| pi_down(&perm(m), &u)).collect();
            ensure(lows.len() == 1, || format!("σ-fiber of {s} has {} π↓ values", lows.len()))?;
            let low = lows.into_iter().next().unwrap();
            ensure(sigma(&low) == *s, || format!("σ(π↓) on fiber {s}"))?;
            let bottom = members.iter().min_by_key(|m| inversions(m).len()).unwrap();
            let top = members.iter().max_by_key(|m| inversions(m).len()).unwrap();
            ensure(bottom.as_slice() == low.entries(), || format!("fiber {s} minimum"))?;
            let interval: BTreeSet<Vec<u32>> = all_permutations(n)
                .into_iter()
                .map(|x| x.entries().to_vec())
                .filter(|x| below(bottom, x) && below(x, top))
                .collect();
            let fiber: BTreeSet<Vec<u32>> = members.iter().cloned().collect();
            ensure(interval == fiber, || format!("fiber {s} is not an interval"))?;
        }
        let lows: BTreeSet<Permutation> = all_permutations(n).iter().map(|x| pi_down(x, &u)).collect();
        ensure(lows.len() == fibers.len(), || format!("n={n}: π↓ fibers != σ fibers"))?;
    }
    // every order of moves ends at the same avoider
    for n in 0..=6 {
        let mut memo: HashMap<Vec<u32>, BTreeSet<Vec<u32>>> = HashMap::new();
        fn ends(x: Vec<u32>, memo: &mut HashMap<Vec<u32>, BTreeSet<Vec<u32>>>) -> BTreeSet<Vec<u32>> {
            if let Some(e) = memo.get(&x) {
                return e.clone();
            }
            let mut out = BTreeSet::new();
            let mut moved = false;
            for i in 0..x.len().saturating_sub(1) {
                if pell_instance_at(&x, i) {
                    moved = true;
                    let mut y = x.clone();
                    y.swap(i, i + 1);
                    out.extend(ends(y, memo));
                }
            }
            if !moved {
                out.insert(x.clone());
            }
            memo.insert(x, out.clone());
            out
        }
        for x in all_permutations(n) {
            let e = ends(x.entries().to_vec(), &mut memo);
            ensure(e.len() == 1, || format!("{x} has {} normal forms", e.len()))?;
            ensure(e.iter().next().unwrap().as_slice() == pi_down(&x, &u).entries(), || format!("π↓({x})"))?;
        }
    }
    Ok("n<=7 fibers, n<=6 confluence".into())
}

fn oracle_product(a: &Sash, b: &Sash) -> SashElement {
    shifted_shuffles(eta(a).entries(), eta(b).entries())
        .into_iter()
        .map(|v| perm(&v))
        .filter(is_pell)
        .map(|x| sigma(&x))
        .collect()
}

fn oracle_coproduct(c: &Sash, fibers: &HashMap<Sash, Vec<Vec<u32>>>) -> SashTensor {
    let mut out = SashTensor::zero();
    for x in &fibers[c] {
        for i in 0..=x.len() {
            let (l, r) = (perm(&standardized(&x[..i])), perm(&standardized(&x[i..])));
            if is_pell(&l) && is_pell(&r) {
                out.add_term(sigma(&l), sigma(&r), 1);
            }
        }
    }
    out
}

fn oracle_gamma(t: &IndexSet, d: &Sash, e: &Sash) -> Sash {
    let n = d.grade() + e.grade();
    let ts: Vec<u32> = t.iter().collect();
    let tc: Vec<u32> = (1..=n as u32).filter(|v| !t.contains(*v)).collect();
    let mut w: Vec<u32> = eta(d).entries().iter().map(|&v| ts[v as usize - 1]).collect();
    w.extend(eta(e).entries().iter().map(|&v| tc[v as usize - 1]));
    sig(&w)
}

fn oracle_dual_coproduct(c: &Sash) -> SashTensor {
    let z = eta(c);
    let z = z.entries();
    (0..=z.len() as u32)
        .map(|i| {
            let low: Vec<u32> = z.iter().copied().filter(|&v| v <= i).collect();
            let high: Vec<u32> = z.iter().copied().filter(|&v| v > i).collect();
            (sig(&low), sig(&standardized(&high)))
        })
        .collect()
}

fn intrinsic_extrinsic() -> Result<String, String> {
    let mut cases = 0;
    let mut fibers = HashMap::new();
    for n in 0..=7 {
        fibers.extend(sigma_fibers(n));
    }
    for g in 0..=7 {
        for c in sashes_of_grade(g) {
            ensure(sash_coproduct(&c) == oracle_coproduct(&c, &fibers), || format!("ΔS({c})"))?;
            cases += 1;
        }
        for p in 0..=g {
            for a in sashes_of_grade(p) {
                for b in sashes_of_grade(g - p) {
                    ensure(sash_product(&a, &b) == oracle_product(&a, &b), || format!("{a} •S {b}"))?;
                    for t in IndexSet::subsets_of_size(g, p) {
                        let ok = gamma(&t, &a, &b).map_err(|e| e.to_string())? == oracle_gamma(&t, &a, &b);
                        ensure(ok, || format!("γ_{t}({a} ⊗ {b})"))?;
                        cases += 1;
                    }
                    cases += 1;
                }
            }
        }
    }
    for g in 0..=8 {
        for c in sashes_of_grade(g) {
            ensure(sash_dual_coproduct(&c) == oracle_dual_coproduct(&c), || format!("m*S({c})"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} cases"))
}

fn golden() -> Result<String, String> {
    let s = |t: &str| t.parse::<Sash>().unwrap();
    let set = |v: &[u32]| v.iter().copied().collect::<IndexSet>();
    ensure(sash_product(&s("rb"), &s("w")).to_string() == "rbbw + rbr + rbww + rrw", || "rb •S w".into())?;
    let g = gamma(&set(&[1, 2, 4, 7, 8, 9, 12, 13]), &s("rbrwb"), &s("wrbww")).map_err(|e| e.to_string())?;
    ensure(g.to_string() == "brbrrbrbbw", || format!("γ gave {g}"))?;
    let t = tau(&s("brwwbw"), &set(&[1, 4, 5, 6, 8])).map_err(|e| e.to_string())?;
    ensure(t.entries() == [1, 6, 5, 4, 8, 2, 3, 7], || format!("τ gave {t}"))?;
    let d = "bbwwwrbwwrbbrbw@2,4,6,7,8,9,14,16,17,18".parse().map_err(|e: pellhopf::Error| e.to_string())?;
    let block = bounds(&d).map_err(|e| e.to_string())?;
    let quad = [&block.lower_a, &block.upper_a, &block.lower_b, &block.upper_b].map(ToString::to_string);
    ensure(quad == ["bbwwbwrbbb", "rwwrrrb", "wbbbbb", "wwwwr"], || format!("bounds {quad:?}"))?;
    let rbw = s("rbw");
    let dottings: Vec<String> = enumerate_allowable_dottings(&rbw).unwrap().iter().map(ToString::to_string).collect();
    let sets: BTreeSet<IndexSet> = allowable_sets(&rbw).into_iter().collect();
    let expected_sets: BTreeSet<IndexSet> = [
        &[3, 4, 5][..], &[1, 2, 3], &[1, 3, 4, 5], &[3], &[1, 2, 3, 5], &[1, 3], &[3, 5], &[1, 3, 5],
    ]
    .iter()
    .map(|v| set(v))
    .collect();
    ensure(sets == expected_sets && sets.len() == 8, || format!("allowable sets {sets:?}"))?;
    // cell i is dotted when exactly one of i, i + 1 lies in T
    let mut expected_dots: Vec<String> = expected_sets
        .iter()
        .map(|t| {
            let dots: Vec<String> = (1..5u32)
                .filter(|&i| t.contains(i) != t.contains(i + 1))
                .map(|i| i.to_string())
                .collect();
            format!("rbw@{}", dots.join(","))
        })
        .collect();
    expected_dots.sort();
    let mut got_dots = dottings.clone();
    got_dots.sort();
    ensure(got_dots == expected_dots, || format!("dottings {got_dots:?}"))?;
    Ok(format!("dottings of rbw: {}", dottings.join(" ")))
}

fn coproduct_intervals() -> Result<String, String> {
    let u = CongruenceSystem::pell();
    let mut blocks = 0;
    for n in 0..=6 {
        let by_size: Vec<Vec<Permutation>> = (0..=n).map(|k| enumerate_avoiders(k, &u)).collect();
        for z in &by_size[n] {
            let direct = av_coproduct(z, &u).map_err(|e| e.to_string())?;
            ensure(coproduct_via_intervals(z, &u) == direct, || format!("ΔAv({z})"))?;
            let target = sigma(z);
            for block in interval_blocks(z, &u) {
                let ts: Vec<u32> = block.set.iter().collect();
                let tc: Vec<u32> = (1..=n as u32).filter(|v| !block.set.contains(*v)).collect();
                let mut brute = Vec::new();
                for x in &by_size[ts.len()] {
                    for y in &by_size[tc.len()] {
                        let mut w: Vec<u32> = x.entries().iter().map(|&v| ts[v as usize - 1]).collect();
                        w.extend(y.entries().iter().map(|&v| tc[v as usize - 1]));
                        if sig(&w) == target {
                            brute.push((x.clone(), y.clone()));
                        }
                    }
                }
                let mut from_block: Vec<_> = block
                    .left
                    .iter()
                    .flat_map(|x| block.right.iter().map(move |y| (x.clone(), y.clone())))
                    .collect();
                from_block.sort();
                brute.sort();
                ensure(from_block == brute, || format!("z={z} T={}", block.set))?;
                blocks += 1;
            }
        }
    }
    Ok(format!("{blocks} good-set blocks"))
}

fn hopf_and_duality() -> Result<String, String> {
    let opts = VerifyOptions {
        max_grade: 5,
        ..VerifyOptions::default()
    };
    let reports = run(&[Suite::HopfAxioms, Suite::Duality], &opts);
    for family in ["mr/", "av/", "sash/"] {
        for kind in ["associativity", "coassociativity", "compatibility"] {
            let name = format!("{family}{kind}");
            ensure(reports.iter().any(|r| r.name == name), || format!("missing check {name}"))?;
        }
    }
    if let Some(bad) = reports.iter().find(|r| !r.passed()) {
        return Err(bad.to_string());
    }
    let cases: usize = reports.iter().map(|r| r.cases).sum();
    Ok(format!("{} checks, {cases} cases", reports.len()))
}

fn extremality() -> Result<String, String> {
    let mut dottings = 0;
    for g in 1..=6 {
        for c in sashes_of_grade(g) {
            for d in enumerate_allowable_dottings(&c).unwrap() {
                let (a_hat, b_hat) = build_ab(&d).map_err(|e| e.to_string())?;
                let block = bounds(&d).map_err(|e| e.to_string())?;
                for (hat, lo, hi) in [
                    (&a_hat, &block.lower_a, &block.upper_a),
                    (&b_hat, &block.lower_b, &block.upper_b),
                ] {
                    let matching: Vec<Sash> = sashes_of_grade(hat.len() + 1)
                        .into_iter()
                        .filter(|x| matches_form(x, hat))
                        .collect();
                    ensure(matching.contains(lo) && matching.contains(hi), || format!("{d}: bounds of {hat}"))?;
                    let all_between = matching
                        .iter()
                        .all(|x| sash_leq(lo, x).unwrap() && sash_leq(x, hi).unwrap());
                    ensure(all_between, || format!("{d}: {hat} not extremal"))?;
                    let interval = sash_interval(lo, hi).map_err(|e| e.to_string())?;
                    ensure(interval == matching, || format!("{d}: form {hat} != interval"))?;
                }
                dottings += 1;
            }
        }
    }
    Ok(format!("{dottings} dottings"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Result<String, String>, Duration); 8] = [
        ("1 counting", counting, Duration::from_secs(10)),
        ("2 bijection", bijection, Duration::from_secs(120)),
        ("3 congruence fibers", fibers_and_confluence, Duration::from_secs(120)),
        ("4 intrinsic = extrinsic", intrinsic_extrinsic, Duration::from_secs(600)),
        ("5 golden examples", golden, Duration::from_secs(60)),
        ("6 coproduct intervals", coproduct_intervals, Duration::from_secs(300)),
        ("7 hopf axioms and duality", hopf_and_duality, Duration::from_secs(300)),
        ("8 extremality", extremality, Duration::from_secs(300)),
    ];
    let mut failed = 0;
    for (name, check, budget) in criteria {
        let start = Instant::now();
        let outcome = panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(_) if elapsed > budget => Err(format!("took {elapsed:.1?}, budget {budget:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS criterion {name} ({elapsed:.2?}): {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name} ({elapsed:.2?}): {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
