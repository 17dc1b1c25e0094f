//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion
//! and exits non-zero if any criterion fails or exceeds its time bound.

use std::collections::{BTreeMap, BTreeSet};
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;
use stableass::oracle::{ass_powers, ass_primes, astab_certified, max_in_ass};
use stableass::polymatroid::{is_polymatroidal, transversal_ideal, veronese_ideal, VeroneseSpec};
use stableass::stable::ass_infinity;
use stableass::transversal::{depth_transversal, family_realizable, TransversalPresentation};
use stableass::veronese::{
    ass_veronese, astab_veronese, depth_veronese, dstab_veronese, normalize, VeroneseCase,
};
use stableass::{Limits, MonomialIdeal, MonomialPrime, PrimeSet};

type Criterion = (&'static str, Duration, fn() -> String);

fn main() {
    let criteria: [Criterion; 8] = [
        ("transversal running example", Duration::from_secs(1), running_example),
        ("projective plane Ass(I^k)", Duration::from_secs(30), projective_plane),
        ("5-cycle edge ideal", Duration::from_secs(1), pentagon),
        ("Veronese formulas vs oracle", Duration::from_secs(300), veronese_sweep),
        ("rank algorithm vs oracle", Duration::from_secs(300), rank_vs_oracle),
        ("localization and product closure", Duration::from_secs(300), closure),
        ("family realizability over [4]", Duration::from_secs(120), families),
        ("transversal depth formula", Duration::from_secs(300), transversal_depth),
    ];
    let mut failures = 0;
    for (i, (name, bound, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check));
        let elapsed = start.elapsed();
        let line = match outcome {
            Ok(_) if elapsed > *bound => {
                failures += 1;
                format!("FAIL  took {elapsed:.2?}, bound {bound:?}")
            }
            Ok(detail) => format!("PASS  {detail} ({elapsed:.2?})"),
            Err(panic) => {
                failures += 1;
                let msg = panic
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                format!("FAIL  {msg}")
            }
        };
        println!("criterion {} [{name}]: {line}", i + 1);
    }
    if failures > 0 {
        println!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
}

fn cli(args: &[&str], input: &str) -> Value {
    let mut child = Command::new(env!("CARGO_BIN_EXE_stableass"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success(), "{args:?} exited with {}", out.status);
    serde_json::from_slice(&out.stdout).expect("report is JSON")
}

fn index_sets(v: &Value) -> BTreeSet<Vec<usize>> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|s| serde_json::from_value(s.clone()).unwrap())
        .collect()
}

/// 1-based support to prime.
fn prime1(s: &[usize]) -> MonomialPrime {
    MonomialPrime::new(s.iter().map(|i| i - 1)).unwrap()
}

fn maximal(n: usize) -> MonomialPrime {
    MonomialPrime::maximal(n).unwrap()
}

fn running_example() -> String {
    let input = r#"{"transversal": [[1,2],[1,2,3,4],[3,5],[4,5]]}"#;
    let expected: [(&[usize], u32); 6] = [
        (&[1, 2], 1),
        (&[1, 2, 3, 4], 2),
        (&[3, 5], 1),
        (&[4, 5], 1),
        (&[3, 4, 5], 2),
        (&[1, 2, 3, 4, 5], 4),
    ];
    let primes: BTreeSet<Vec<usize>> = expected.iter().map(|(p, _)| p.to_vec()).collect();
    for args in [&["ass"][..], &["transversal", "ass"], &["ass-infinity"]] {
        assert_eq!(index_sets(&cli(args, input)["primes"]), primes, "{args:?}");
    }

    let ideal = transversal_ideal(
        5,
        &[prime1(&[1, 2]), prime1(&[1, 2, 3, 4]), prime1(&[3, 5]), prime1(&[4, 5])],
    )
    .unwrap();
    for k in [1u32, 2] {
        let report = cli(&["transversal", "decompose", "--k", &k.to_string()], input);
        assert_eq!(report["verified"], Value::Bool(true));
        let got: BTreeMap<Vec<usize>, u32> = report["components"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| {
                (
                    serde_json::from_value(c["prime"].clone()).unwrap(),
                    c["exponent"].as_u64().unwrap() as u32,
                )
            })
            .collect();
        let want: BTreeMap<Vec<usize>, u32> =
            expected.iter().map(|(p, e)| (p.to_vec(), k * e)).collect();
        assert_eq!(got, want, "exponents at k = {k}");
        // Re-expand with plain lcm intersections.
        let intersection = want
            .iter()
            .map(|(p, e)| MonomialIdeal::prime_power(5, &prime1(p), *e).unwrap())
            .reduce(|a, b| a.intersection(&b).unwrap())
            .unwrap();
        assert_eq!(intersection, ideal.power(k).unwrap(), "re-expansion at k = {k}");
    }
    "six primes, exponents (1,2,1,1,2,4) and doubled".into()
}

fn projective_plane_ideal() -> MonomialIdeal {
    let faces: [[usize; 3]; 10] = [
        [1, 2, 3],
        [1, 2, 4],
        [1, 3, 5],
        [1, 4, 6],
        [1, 5, 6],
        [2, 3, 6],
        [2, 4, 5],
        [2, 5, 6],
        [3, 4, 5],
        [3, 4, 6],
    ];
    MonomialIdeal::from_exponents(
        6,
        faces.iter().map(|f| {
            let mut e = vec![0u32; 6];
            for &i in f {
                e[i - 1] = 1;
            }
            e
        }),
    )
    .unwrap()
}

fn projective_plane() -> String {
    let ideal = projective_plane_ideal();
    let report = ass_powers(&ideal, 4, &Limits::default()).expect("within limits");
    assert!(!report.certified());
    let at = |k| report.primes_at(k).unwrap();
    let mut heights = BTreeMap::new();
    for p in at(3) {
        *heights.entry(p.height()).or_insert(0) += 1;
    }
    assert_eq!(at(3).len(), 17);
    assert_eq!(heights, BTreeMap::from([(3, 10), (5, 6), (6, 1)]));
    // Ass(I^3) is exactly the primes of height 3, 5 and 6 containing I.
    let vstar = ideal.vstar(&Limits::default()).unwrap();
    let by_height: PrimeSet = vstar
        .into_iter()
        .filter(|p| [3, 5, 6].contains(&p.height()))
        .collect();
    assert_eq!(at(3), &by_height);
    let m = maximal(6);
    assert!(!at(1).contains(&m));
    assert!(at(2).contains(&m));
    assert!(at(3).contains(&m));
    assert!(at(1).is_subset(at(2)));
    assert!(at(2).is_subset(at(3)));
    assert_eq!(at(3), at(4));
    // No height-5 prime appears before the third power.
    assert!(at(2).iter().all(|p| p.height() != 5));
    "17 primes in Ass(I^3) with heights 10x3, 6x5, 1x6; chain up to I^4".into()
}

fn pentagon() -> String {
    let input = r#"{"n": 5, "generators": [[1,1,0,0,0],[0,1,1,0,0],[0,0,1,1,0],[0,0,0,1,1],[1,0,0,0,1]]}"#;
    let report = cli(&["ass-powers", "--k-max", "3"], input);
    let powers = report["powers"].as_array().unwrap();
    let m = vec![1, 2, 3, 4, 5];
    assert!(!index_sets(&powers[1]["primes"]).contains(&m));
    assert!(index_sets(&powers[2]["primes"]).contains(&m));
    "maximal ideal enters at the third power".into()
}

fn veronese_sweep() -> String {
    let l = Limits::default();
    let mut specs = 0;
    let mut powers = 0;
    for n in 2..=4usize {
        for d in 2..=4u32 {
            let top = d.min(3);
            let mut caps = vec![1u32; n];
            loop {
                if caps.iter().sum::<u32>() > d {
                    let spec = VeroneseSpec::new(d, caps.clone()).unwrap();
                    let v = normalize(&spec);
                    assert_eq!(v.case(), VeroneseCase::General);
                    let ideal = veronese_ideal(&spec).unwrap();
                    let astab = astab_veronese(&v);
                    let mut power = MonomialIdeal::unit(n);
                    for k in 1..=astab + 1 {
                        power = power.product(&ideal).unwrap();
                        assert_eq!(
                            ass_veronese(&v, k, &l).unwrap(),
                            ass_primes(&power, &l).unwrap(),
                            "Ass at d = {d}, caps = {caps:?}, k = {k}"
                        );
                        assert_eq!(
                            depth_veronese(&v, k).unwrap() == 0,
                            max_in_ass(&power, &l).unwrap(),
                            "depth at d = {d}, caps = {caps:?}, k = {k}"
                        );
                        powers += 1;
                    }
                    assert_eq!(astab, astab_certified(&ideal, &l).unwrap().0, "astab at {caps:?}");
                    assert_eq!(astab, dstab_veronese(&v), "dstab at {caps:?}");
                    specs += 1;
                }
                let Some(i) = caps.iter().position(|&a| a < top) else {
                    break;
                };
                caps[..i].fill(1);
                caps[i] += 1;
            }
        }
    }
    format!("{specs} specs, {powers} powers, zero mismatches")
}

fn random_polymatroidal(rng: &mut ChaCha8Rng) -> MonomialIdeal {
    let n = rng.random_range(2..=5usize);
    if rng.random_bool(0.5) {
        let d = rng.random_range(1..=4u32);
        loop {
            let caps: Vec<u32> = (0..n).map(|_| rng.random_range(0..=3)).collect();
            if let Ok(spec) = VeroneseSpec::new(d, caps) {
                return veronese_ideal(&spec).unwrap();
            }
        }
    } else {
        let r = rng.random_range(1..=4usize);
        let factors: Vec<MonomialPrime> = (0..r)
            .map(|_| {
                let mask = rng.random_range(1..1u32 << n);
                MonomialPrime::new((0..n).filter(|&i| mask >> i & 1 == 1)).unwrap()
            })
            .collect();
        transversal_ideal(n, &factors).unwrap()
    }
}

fn random_ideals() -> Vec<MonomialIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    (0..200).map(|_| random_polymatroidal(&mut rng)).collect()
}

fn rank_vs_oracle() -> String {
    let l = Limits::default();
    let mut total_k = 0;
    for ideal in random_ideals() {
        assert!(is_polymatroidal(&ideal));
        let stable = ass_infinity(&ideal, &l).unwrap();
        let (k0, _) = astab_certified(&ideal, &l).unwrap();
        for k in 1..=k0 {
            let ass = ass_primes(&ideal.power(k).unwrap(), &l).unwrap();
            assert!(ass.is_subset(&stable), "{ideal} at k = {k}");
            if k == k0 {
                assert_eq!(ass, stable, "{ideal} at k0 = {k0}");
            }
        }
        total_k += k0;
    }
    format!("200 ideals, {total_k} powers checked")
}

fn closure() -> String {
    let ideals = random_ideals();
    let mut localizations = 0;
    for ideal in &ideals {
        let n = ideal.nvars();
        for i in 0..n {
            let f = MonomialPrime::new((0..n).filter(|&j| j != i)).unwrap();
            let local = ideal.localize(&f).unwrap().ideal;
            assert!(local.is_unit() || is_polymatroidal(&local), "{ideal} without x{}", i + 1);
            localizations += 1;
        }
    }
    let embedded: Vec<MonomialIdeal> = ideals.iter().map(|i| i.embed(5).unwrap()).collect();
    let mut products = 0;
    for (a, i) in embedded.iter().enumerate() {
        for j in &embedded[a..] {
            let product = i.product(j).unwrap();
            assert!(is_polymatroidal(&product), "{i} times {j}");
            products += 1;
        }
    }
    format!("{localizations} localizations, {products} products")
}

fn families() -> String {
    let subsets: Vec<MonomialPrime> = (1u32..16)
        .map(|m| MonomialPrime::new((0..4).filter(|&i| m >> i & 1 == 1)).unwrap())
        .collect();
    let len = subsets.len();
    let mut members: Vec<Vec<usize>> = Vec::new();
    for a in 0..len {
        members.push(vec![a]);
        for b in a + 1..len {
            members.push(vec![a, b]);
            for c in b + 1..len {
                members.push(vec![a, b, c]);
            }
        }
    }
    let mut checked = 0;
    let mut realizable = 0;
    for m in &members {
        let factors: Vec<MonomialPrime> = m.iter().map(|&i| subsets[i].clone()).collect();
        let family: PrimeSet = factors.iter().cloned().collect();
        let ideal = transversal_ideal(4, &factors).unwrap();
        let direct = ass_primes(&ideal, &Limits::default()).unwrap() == family;
        assert_eq!(family_realizable(&family), direct, "{family:?}");
        checked += 1;
        realizable += usize::from(direct);
    }
    assert_eq!(checked, 15 + 105 + 455);
    format!("{checked} families, {realizable} realizable")
}

fn transversal_depth() -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let l = Limits::default();
    let mut depth_zero = 0;
    for _ in 0..100 {
        let n = rng.random_range(1..=6usize);
        let r = rng.random_range(1..=4usize);
        let factors: Vec<MonomialPrime> = (0..r)
            .map(|_| {
                let mask = rng.random_range(1..1u32 << n);
                MonomialPrime::new((0..n).filter(|&i| mask >> i & 1 == 1)).unwrap()
            })
            .collect();
        let pres = TransversalPresentation::new(n, factors).unwrap();
        let depth = depth_transversal(&pres);
        let ideal = pres.expand().unwrap();
        assert_eq!(depth == 0, max_in_ass(&ideal, &l).unwrap(), "{ideal}");
        assert_eq!(depth == 0, ass_primes(&ideal, &l).unwrap().contains(&maximal(n)));
        for k in 1..=3 {
            assert_eq!(depth_transversal(&pres.power(k).unwrap()), depth, "{ideal} at k = {k}");
        }
        depth_zero += usize::from(depth == 0);
    }
    format!("100 presentations, {depth_zero} of depth zero")
}
