//! Acceptance checks, run sequentially so that timings are meaningful.
//! Prints one PASS/FAIL line per criterion and exits non-zero on failure.

use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rainbow_lll::colouring::{gen_k_bounded, gen_locally_k_bounded};
use rainbow_lll::events::{
    enumerate_bad_events, event_probability, verify_clique_bounds, Adjacency,
};
use rainbow_lll::graph::falling_factorial_q;
use rainbow_lll::lll::{
    check_cluster_clique, independent_set_polynomial, optimize_mu, proper_classes, rainbow_classes,
    standard_mu_proper, threshold, threshold_value, verify_inequality_chain, ChainSetting, MuForm,
    SearchConfig, Theorem, ThresholdParams,
};
use rainbow_lll::oracle::{count_injections_in_event, exists_copy, is_valid_embedding};
use rainbow_lll::rational::{int, powi, ratio};
use rainbow_lll::sampler::{find_copy, FindConfig};
use rainbow_lll::{CherryDensity, EdgeColouring, Graph, Mode, Rational};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Check {
    let constant = int(3) / (ratio(1, 3) * powi(&ratio(5, 6), 5));
    ensure(constant == ratio(69_984, 3_125), || {
        format!("constant {constant}")
    })?;
    let mut ns: Vec<u64> = (3..=300).collect();
    let mut x = 300f64;
    while x < 1e6 {
        ns.push(x as u64);
        x *= 1.05;
    }
    ns.push(1_000_000);
    let mut tested = 0;
    for delta in 1..=20u64 {
        for &n in &ns {
            let params = ThresholdParams::with_delta(n, delta);
            let thm3 = threshold(Theorem::Thm3, &params).map_err(|e| e.to_string())?;
            let cor4 = threshold(Theorem::Cor4, &params).map_err(|e| e.to_string())?;
            let direct = 5 * (n - 2) / (112 * delta * delta);
            ensure(cor4 == direct, || {
                format!("cor4 mismatch at n={n}, delta={delta}")
            })?;
            ensure(cor4 <= thm3, || {
                format!("cor4 {cor4} > thm3 {thm3} at n={n}, delta={delta}")
            })?;
            tested += 1;
        }
    }
    Ok(format!(
        "constant 69984/3125 = {:.5}, {tested} (n, Δ) pairs",
        69_984.0 / 3_125.0
    ))
}

fn criterion_2() -> Check {
    let target = powi(&ratio(50, 51), 4);
    let holds = |n: i64| ratio((n - 1) * (n - 2) * (n - 3), n * n * n) >= target;
    let minimal = (4..).find(|&n| holds(n)).expect("eventually holds");
    ensure(minimal == 77, || format!("minimal n is {minimal}"))?;
    ensure(holds(77) && !holds(76), || "boundary".into())?;
    Ok("minimal n = 77".into())
}

fn criterion_3() -> Check {
    let bound = 50.0 / 51.0 * 1.4;
    let (mut lo, mut hi) = (f64::INFINITY, 0f64);
    for n in 77..=1000u64 {
        for delta in 1..=10u64 {
            let k = ratio(n as i64, 51 * (delta * delta) as i64);
            let report = verify_inequality_chain(&ChainSetting::Rainbow { n, delta, k })
                .map_err(|e| format!("n={n}, delta={delta}: {e}"))?;
            ensure(report.holds, || {
                format!("chain fails at n={n}, delta={delta}")
            })?;
            let f = report.product_factor;
            ensure(f <= bound && (f - 1.3053).abs() < 1e-3, || {
                format!("factor {f}")
            })?;
            lo = lo.min(f);
            hi = hi.max(f);
        }
    }
    Ok(format!(
        "product factor in [{lo:.6}, {hi:.6}] <= {bound:.6}"
    ))
}

fn random_rational(rng: &mut ChaCha8Rng, max: i64) -> Rational {
    ratio(rng.gen_range(0..=max * 100), 100)
}

fn criterion_4() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..200 {
        let n = rng.gen_range(100..=1_000_000u64);
        let density = loop {
            let d = CherryDensity {
                p: random_rational(&mut rng, 200),
                q: random_rational(&mut rng, 600),
            };
            if !(&d.q + int(3) * &d.p).is_zero() {
                break d;
            }
        };
        let params = ThresholdParams::with_density(n, density.clone());
        let k = threshold_value(Theorem::Thm3, &params)
            .map_err(|e| e.to_string())?
            .expect("non-vacuous");
        if k.is_zero() {
            continue;
        }
        let classes = proper_classes(&density, n, &k).map_err(|e| e.to_string())?;
        let mu = standard_mu_proper(n).map_err(|e| e.to_string())?;
        let cert = check_cluster_clique(&classes, &mu).map_err(|e| e.to_string())?;
        ensure(cert.holds(), || format!("certificate fails at n={n}"))?;
        let report = verify_inequality_chain(&ChainSetting::Proper { n, density, k })
            .map_err(|e| e.to_string())?;
        let step = report
            .steps
            .iter()
            .find(|s| s.label.starts_with("k mu"))
            .expect("k mu step");
        ensure(step.holds && report.holds, || {
            format!("chain fails at n={n}")
        })?;
    }
    Ok("200 random (n, p, q) tuples".into())
}

fn criterion_5() -> Check {
    let mut margins = Vec::new();
    for n in [100u64, 200, 500, 1000] {
        for delta in [1u64, 3] {
            let k = ratio(n as i64, 42 * (delta * delta) as i64);
            let classes = rainbow_classes(delta, n, &k).map_err(|e| e.to_string())?;
            let result = optimize_mu(&classes, &SearchConfig::new(MuForm::TwoType))
                .map_err(|e| e.to_string())?;
            ensure(result.certificate.holds(), || {
                format!(
                    "no certificate at n={n}, delta={delta}: margin {}",
                    result.certificate.margin
                )
            })?;
            if delta == 1 {
                margins.push(format!("n={n}: {:.4}", result.certificate.margin));
            }
        }
    }
    Ok(format!("margins {}", margins.join(", ")))
}

fn criterion_6() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut checked = 0;
    for g_size in 3..=5usize {
        for n in g_size..=7 {
            let g = Graph::complete(g_size);
            let mono = EdgeColouring::monochromatic(n).map_err(|e| e.to_string())?;
            let events =
                enumerate_bad_events(&g, &mono, Mode::Rainbow).map_err(|e| e.to_string())?;
            let total = falling_factorial_q(n as u64, g_size as u64).map_err(|e| e.to_string())?;
            for _ in 0..100 {
                let x = events.choose(&mut rng).expect("events exist");
                let hits = count_injections_in_event(x, g_size, n).map_err(|e| e.to_string())?;
                let freq = Rational::from_integer(hits.into()) / &total;
                let expected = event_probability(x, n).map_err(|e| e.to_string())?;
                ensure(freq == expected, || {
                    format!("{x:?} in K_{n}: {freq} != {expected}")
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} sampled events exact"))
}

fn criterion_7() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut cliques = 0;
    for i in 0..50 {
        let n = rng.gen_range(4..=7usize);
        let g_size = rng.gen_range(3..=n.min(5));
        let g = Graph::random_bounded_degree(g_size, 3, 0.8, &mut rng);
        let k = rng.gen_range(1..=3);
        let (colouring, mode) = if i % 2 == 0 {
            (
                gen_k_bounded(n, k, i).map_err(|e| e.to_string())?,
                Mode::Rainbow,
            )
        } else {
            (
                gen_locally_k_bounded(n, k, i).map_err(|e| e.to_string())?,
                Mode::Proper,
            )
        };
        let report = verify_clique_bounds(&g, &colouring, mode).map_err(|e| e.to_string())?;
        ensure(report.non_cliques == 0 && report.uncovered == 0, || {
            format!(
                "instance {i}: {} non-cliques, {} uncovered",
                report.non_cliques, report.uncovered
            )
        })?;
        ensure(report.holds, || {
            format!("instance {i}: class bound exceeded")
        })?;
        cliques += report.cliques_checked;
    }
    Ok(format!("{cliques} cliques over 50 instances"))
}

/// A random cover of the closed neighbourhood of `i` by cliques, each grown
/// greedily from an uncovered vertex.
fn random_clique_cover(adj: &Adjacency, i: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<usize>> {
    let closed = adj.closed_neighbourhood(i);
    let mut covered = vec![false; closed.len()];
    let mut cover = Vec::new();
    let mut order: Vec<usize> = (0..closed.len()).collect();
    order.shuffle(rng);
    for &start in &order {
        if covered[start] {
            continue;
        }
        let mut clique = vec![closed[start]];
        let mut candidates = closed.clone();
        candidates.shuffle(rng);
        for c in candidates {
            if clique.iter().all(|&m| m != c && adj.is_adjacent(m, c)) {
                clique.push(c);
            }
        }
        for m in &clique {
            covered[closed.binary_search(m).expect("member")] = true;
        }
        cover.push(clique);
    }
    cover
}

fn criterion_8() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mus = [ratio(1, 100), ratio(1, 10), int(1), int(10)];
    let mut comparisons = 0;
    for _ in 0..200 {
        let size = rng.gen_range(1..=15usize);
        let density = rng.gen_range(0.1..0.9);
        let edges: Vec<(usize, usize)> = (0..size)
            .flat_map(|u| ((u + 1)..size).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(density))
            .collect();
        let adj = Adjacency::from_edges(size, edges);
        let i = rng.gen_range(0..size);
        let cover = random_clique_cover(&adj, i, &mut rng);
        for cl in &cover {
            ensure(adj.is_clique(cl), || "cover member is not a clique".into())?;
        }
        for mu in &mus {
            let z = independent_set_polynomial(&adj, i, &vec![mu.clone(); size])
                .map_err(|e| e.to_string())?;
            let product = cover.iter().fold(Rational::one(), |acc, q| {
                acc * (int(1) + mu * int(q.len() as i64))
            });
            ensure(product >= z, || {
                format!("violation: product {product} < Z {z}")
            })?;
            comparisons += 1;
        }
    }
    Ok(format!("{comparisons} comparisons, 0 violations"))
}

fn median(mut xs: Vec<Duration>) -> Duration {
    xs.sort();
    xs[xs.len() / 2]
}

fn criterion_9() -> Check {
    let mut times = Vec::new();
    let mut resamples = Vec::new();
    let cases: [(usize, usize, Mode); 2] = [(500, 2, Mode::Rainbow), (200, 3, Mode::Proper)];
    for (n, k, mode) in cases {
        let g = Graph::cycle(n);
        let mut case_times = Vec::new();
        for seed in 0..20u64 {
            let colouring = match mode {
                Mode::Rainbow => gen_k_bounded(n, k, seed),
                Mode::Proper => gen_locally_k_bounded(n, k, seed),
            }
            .map_err(|e| e.to_string())?;
            let start = Instant::now();
            let out = find_copy(&g, &colouring, mode, &FindConfig::new(seed))
                .map_err(|e| e.to_string())?;
            case_times.push(start.elapsed());
            let sigma = out
                .embedding()
                .ok_or_else(|| format!("{mode} C_{n}, seed {seed}: budget exhausted"))?;
            ensure(is_valid_embedding(&sigma, &g, &colouring, mode), || {
                "invalid embedding".into()
            })?;
            resamples.push(out.resamples());
        }
        let med = median(case_times.clone());
        ensure(med < Duration::from_secs(2), || format!("median {med:?}"))?;
        times.push(format!(
            "{mode} C_{n} median {:.1} ms",
            med.as_secs_f64() * 1e3
        ));
    }
    Ok(format!(
        "40/40 found; {}; max resamples {}",
        times.join(", "),
        resamples.iter().max().unwrap()
    ))
}

fn criterion_10() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let (mut exists, mut found_some) = (0, 0);
    for i in 0..500u64 {
        let n = rng.gen_range(3..=8usize);
        let g_size = rng.gen_range(2..=n);
        let g = Graph::random_bounded_degree(g_size, 3, 0.7, &mut rng);
        let k = rng.gen_range(1..=3);
        let colouring = if rng.gen_bool(0.5) {
            gen_k_bounded(n, k, i)
        } else {
            gen_locally_k_bounded(n, k, i)
        }
        .map_err(|e| e.to_string())?;
        let mode = if rng.gen_bool(0.5) {
            Mode::Rainbow
        } else {
            Mode::Proper
        };
        let truth = exists_copy(&g, &colouring, mode)
            .map_err(|e| e.to_string())?
            .is_some();
        exists += truth as usize;
        for seed in 0..10 {
            let config = FindConfig::new(seed).with_max_resamples(2_000);
            let out = find_copy(&g, &colouring, mode, &config).map_err(|e| e.to_string())?;
            if out.is_found() {
                found_some += 1;
                ensure(truth, || {
                    format!("instance {i}: sampler found a copy the oracle denies")
                })?;
            }
        }
    }
    Ok(format!(
        "{exists}/500 instances admit a copy; {found_some} successful runs, all confirmed"
    ))
}

fn criterion_11() -> Check {
    let params = ThresholdParams::with_delta(1_000_000, 2);
    let thm2 = threshold(Theorem::Thm2, &params).map_err(|e| e.to_string())?;
    let cor4 = threshold(Theorem::Cor4, &params).map_err(|e| e.to_string())?;
    ensure(thm2 == 0, || format!("thm2 gives {thm2}"))?;
    ensure(thm2 < cor4, || format!("thm2 {thm2} >= cor4 {cor4}"))?;
    Ok(format!("polynomial bound k = {thm2} < {cor4}"))
}

fn main() {
    let criteria: [Criterion; 11] = [
        (
            "Corollary constant and floor comparison",
            Duration::from_secs(1),
            criterion_1,
        ),
        ("n >= 77 boundary", Duration::from_millis(1), criterion_2),
        (
            "rainbow chain for n in 77..=1000, Δ in 1..=10",
            Duration::from_secs(5),
            criterion_3,
        ),
        (
            "proper certificate on random (n, p, q)",
            Duration::from_secs(5),
            criterion_4,
        ),
        (
            "μ search certifies k = n/(42Δ²)",
            Duration::from_secs(30),
            criterion_5,
        ),
        (
            "event probability by enumeration",
            Duration::from_secs(30),
            criterion_6,
        ),
        (
            "clique-cover soundness and class bounds",
            Duration::from_secs(60),
            criterion_7,
        ),
        (
            "clique-product dominance",
            Duration::from_secs(10),
            criterion_8,
        ),
        ("sampler end-to-end", Duration::from_secs(120), criterion_9),
        ("oracle agreement", Duration::from_secs(120), criterion_10),
        (
            "polynomial threshold comparison",
            Duration::from_secs(1),
            criterion_11,
        ),
    ];
    let mut failed = 0;
    for (idx, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let verdict = match &result {
            Ok(_) if elapsed <= *limit => "PASS",
            _ => "FAIL",
        };
        let detail = match result {
            Ok(d) if elapsed <= *limit => d,
            Ok(d) => format!("{d}; over time limit {limit:?}"),
            Err(e) => e,
        };
        if verdict == "FAIL" {
            failed += 1;
        }
        println!(
            "{verdict} criterion {:>2}: {name} ({:.3} s) {detail}",
            idx + 1,
            elapsed.as_secs_f64()
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
