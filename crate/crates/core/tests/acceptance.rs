//! Acceptance run. Prints one `criterion N: PASS|FAIL` line per criterion to
//! stderr (uncaptured) and fails if any criterion fails unexpectedly.

mod common;

use std::io::Write;
use std::panic::{self, AssertUnwindSafe};
use std::time::Instant;

use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zforce::bounds::{
    bound_report, davila_kenter_value, girth_lower_bound, girth_sharp_exact, gnp_forcing_formula,
    gnp_predicted_gap, BoundKind, BoundOptions, ExactStatus,
};
use zforce::experiments::{run_gnp_sweep, SweepConfig};
use zforce::forcing::{closure, zero_forcing_number_exact};
use zforce::graph::{gm_graph, gnp_sample, random_regular_sample, standard_graph, StandardGraph};
use zforce::spectral::{greedy_witness, mixing_defect, prop1_construction, spectrum};
use zforce::witness::{
    enumerate_witnesses, forcing_set_from_witness, lemma4_ratio_scan, max_witness_order,
    phi_bruteforce, phi_upper_closed_form, ratio_within_bound, witness_from_forcing,
    witness_gf2_independence, WitnessMode,
};
use zforce::{Graph, VertexSet};

/// Outcome of one criterion: `Ok(detail)` passes.
type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn std_graph(kind: StandardGraph) -> Graph {
    standard_graph(&kind).unwrap()
}

fn exact_z(g: &Graph) -> usize {
    zero_forcing_number_exact(g, u64::MAX).unwrap().z
}

fn named_fixtures() -> Vec<(String, Graph)> {
    use StandardGraph::*;
    let mut out = vec![
        ("petersen".to_string(), std_graph(Petersen)),
        ("K33".into(), std_graph(CompleteBipartite(3, 3))),
        ("K24".into(), std_graph(CompleteBipartite(2, 4))),
        (
            "C6(1,2)".into(),
            std_graph(Circulant {
                n: 6,
                offsets: vec![1, 2],
            }),
        ),
        ("G5".into(), gm_graph(5).unwrap().0),
    ];
    for n in 1..=12 {
        out.push((format!("P{n}"), std_graph(Path(n))));
        out.push((format!("K{n}"), std_graph(Complete(n))));
        if n >= 3 {
            out.push((format!("C{n}"), std_graph(Cycle(n))));
        }
    }
    out
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for i in 0..500 {
        let n = rng.random_range(1..=7);
        let p = rng.random_range(0.1..0.9);
        let g = gnp_sample(n, p, rng.random()).unwrap();
        let (z, oracle) = (exact_z(&g), z_bruteforce(&g));
        ensure(z == oracle, || {
            format!("random graph {i}: solver {z}, brute force {oracle}")
        })?;
    }
    for (name, g) in named_fixtures() {
        let (z, oracle) = (exact_z(&g), z_bruteforce(&g));
        ensure(z == oracle, || {
            format!("{name}: solver {z}, brute force {oracle}")
        })?;
    }
    for n in 1..=12 {
        ensure(exact_z(&std_graph(StandardGraph::Path(n))) == 1, || {
            format!("Z(P{n}) != 1")
        })?;
        ensure(
            exact_z(&std_graph(StandardGraph::Complete(n))) == n.max(2) - 1,
            || format!("Z(K{n}) != n - 1"),
        )?;
    }
    for n in 4..=12 {
        ensure(exact_z(&std_graph(StandardGraph::Cycle(n))) == 2, || {
            format!("Z(C{n}) != 2")
        })?;
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 60.0, || format!("took {secs:.1} s"))?;
    Ok(format!(
        "500 random graphs and {} fixtures match brute force in {secs:.2} s",
        named_fixtures().len()
    ))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut strict = 0;
    for i in 0..200 {
        let n = rng.random_range(2..=9);
        let p = rng.random_range(0.15..0.85);
        let g = gnp_sample(n, p, rng.random()).unwrap();
        let adj = adjacency(&g);
        let z = z_bruteforce(&g);
        let gap = n - z;
        let over = max_witness_order(&g, WitnessMode::Overlapping, u64::MAX).unwrap();
        let disj = max_witness_order(&g, WitnessMode::Disjoint, u64::MAX).unwrap();
        for w in [&over, &disj] {
            ensure(witness_problem(&adj, w.s(), w.t()).is_none(), || {
                format!("graph {i}: invalid search result {w}")
            })?;
        }
        ensure(disj.images_disjoint(), || {
            format!("graph {i}: disjoint search overlaps")
        })?;
        ensure(disj.order() <= gap && gap <= over.order(), || {
            format!(
                "graph {i}: {} <= {gap} <= {} fails",
                disj.order(),
                over.order()
            )
        })?;
        // The disjoint witness certifies a forcing set of size n - k.
        let set = forcing_set_from_witness(&g, &disj).unwrap();
        ensure(
            forces_all(&adj, set.to_vec().iter().fold(0, |m, &v| m | 1 << v)),
            || format!("graph {i}: V minus t is not forcing"),
        )?;
        // A minimum forcing set's run yields a witness of order exactly n - Z.
        let opt = zero_forcing_number_exact(&g, u64::MAX).unwrap();
        let chron = closure(&g, &opt.optimal_set);
        let w = witness_from_forcing(&g, &chron).unwrap();
        ensure(
            w.order() == gap && witness_problem(&adj, w.s(), w.t()).is_none(),
            || format!("graph {i}: forcing witness {w} for gap {gap}"),
        )?;
        strict += usize::from(over.order() > gap);
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 300.0, || format!("took {secs:.1} s"))?;
    Ok(format!(
        "200 graphs sandwiched, forcing witness order = n - Z in all; upper side strict in {strict}; {secs:.2} s"
    ))
}

fn criterion_3() -> Outcome {
    let mut cells = 0;
    for k in 1..=10 {
        for a in 1..=k {
            for b in 1..=k {
                let phi = phi_bruteforce(k, a, b).unwrap().value;
                let oracle = phi_oracle(k, a, b);
                ensure(phi == oracle, || {
                    format!("Φ_{k}({a},{b}) = {phi}, oracle {oracle}")
                })?;
                let closed = phi_upper_closed_form(k, a, b).unwrap();
                ensure(phi <= closed, || {
                    format!("Φ_{k}({a},{b}) = {phi} > closed form {closed}")
                })?;
                // phi/D <= 1 - 1/√2 with D = k(a+b), squared in integers.
                let d = (k * (a + b)) as u128;
                let within = d >= phi as u128 && d * d <= 2 * (d - phi as u128).pow(2);
                ensure(within && ratio_within_bound(k, a, b, phi), || {
                    format!("ratio bound fails at k={k}, a={a}, b={b}")
                })?;
                cells += 1;
            }
        }
        ensure(lemma4_ratio_scan(k).unwrap().all_within_bound, || {
            format!("scan k={k}")
        })?;
    }
    let spot = phi_bruteforce(4, 3, 3).unwrap().value;
    ensure(spot == 6, || format!("Φ_4(3,3) = {spot}"))?;
    let worst = lemma4_ratio_scan(10).unwrap().max_ratio;
    Ok(format!(
        "{cells} cells within bound exactly; Φ_4(3,3) = 6; max ratio at k=10 is {worst:.6}"
    ))
}

/// Base circulants for the line-graph family with at most 20 line-graph vertices.
fn prop1_bases() -> Vec<(usize, Vec<usize>)> {
    let mut out = Vec::new();
    for n in [8, 10, 12] {
        out.push((n, vec![n / 2]));
        for extra in 2..n / 2 {
            if n * 2 <= 20 {
                out.push((n, vec![extra]));
            }
        }
    }
    out
}

fn criterion_4() -> Outcome {
    let mut corpus = vec![
        ("petersen".to_string(), std_graph(StandardGraph::Petersen)),
        (
            "K33".into(),
            std_graph(StandardGraph::CompleteBipartite(3, 3)),
        ),
        ("G5".into(), gm_graph(5).unwrap().0),
    ];
    for n in 3..=20 {
        corpus.push((format!("C{n}"), std_graph(StandardGraph::Cycle(n))));
    }
    for (n, extra) in prop1_bases() {
        corpus.push((
            format!("prop1({n},{extra:?})"),
            prop1_construction(n, &extra).unwrap().1.graph,
        ));
    }
    let options = BoundOptions {
        exact_cap: 20,
        exact_budget: u64::MAX,
        ..BoundOptions::default()
    };
    let mut checked = 0;
    for (name, g) in &corpus {
        let oracle = z_bruteforce(g);
        let report = bound_report(g, &options).unwrap();
        ensure(report.violations.is_empty(), || {
            format!("{name}: {:?}", report.violations)
        })?;
        ensure(
            matches!(report.exact, ExactStatus::Solved { z, .. } if z == oracle),
            || format!("{name}: exact {:?}, brute force {oracle}", report.exact),
        )?;
        for key in [
            "trivial_min_degree",
            "girth_sharp",
            "girth_simplified",
            "hoffman_lambda_min",
        ] {
            if let Some(e) = report.entry(key).filter(|e| e.applicable) {
                ensure(
                    e.kind == BoundKind::Lower && e.value <= oracle as f64 + 1e-9,
                    || format!("{name}: {key} = {} > Z = {oracle}", e.value),
                )?;
                checked += 1;
            }
        }
        for e in report
            .entries
            .iter()
            .filter(|e| e.key.starts_with("kab_") && e.applicable)
        {
            ensure(e.value <= oracle as f64 + 1e-9, || {
                format!("{name}: {} = {} > Z", e.key, e.value)
            })?;
            checked += 1;
        }
        for key in ["spectral_upper", "greedy_certificate", "heuristic"] {
            if let Some(e) = report.entry(key).filter(|e| e.applicable) {
                ensure(
                    e.kind == BoundKind::Upper && e.value >= oracle as f64 - 1e-9,
                    || format!("{name}: {key} = {} < Z = {oracle}", e.value),
                )?;
                checked += 1;
            }
        }
    }
    Ok(format!(
        "{} graphs, {checked} applicable bound checks, zero violations",
        corpus.len()
    ))
}

fn criterion_5() -> Outcome {
    let mut lines = Vec::new();
    for (n, extra) in prop1_bases() {
        let (base, lg, report) = prop1_construction(n, &extra).unwrap();
        let big_n = lg.graph.n();
        let big_d = lg.graph.regular_degree().unwrap();
        let d = base.regular_degree().unwrap();
        ensure(
            big_n == n * d / 2 && big_d == 2 * d - 2 && big_n <= 20,
            || format!("({n},{extra:?}) sizes"),
        )?;
        let (_, _, lmin) = spectral_triple(&lg.graph);
        ensure(
            (lmin + 2.0).abs() <= 1e-6 && (report.lambda_min + 2.0).abs() <= 1e-6,
            || format!("({n},{extra:?}): λ_min = {lmin}"),
        )?;
        let adj = adjacency(&lg.graph);
        let cert = report
            .forcing_set
            .to_vec()
            .iter()
            .fold(0u64, |m, &v| m | 1 << v);
        ensure(
            forces_all(&adj, cert) && report.forcing_set.len() == big_n - (n - 2),
            || format!("({n},{extra:?}): certificate"),
        )?;
        let z = z_bruteforce(&lg.graph);
        ensure(z == exact_z(&lg.graph), || {
            format!("({n},{extra:?}) solver disagrees")
        })?;
        let gap = big_n - z;
        let upper = 4.0 * big_n as f64 / (big_d as f64 + 2.0);
        ensure(gap >= n - 2 && gap as f64 <= upper + 1e-9, || {
            format!(
                "({n},{extra:?}): N - Z = {gap} outside [{}, {upper}]",
                n - 2
            )
        })?;
        lines.push(format!(
            "n={n} d={d} N={big_n}: N-Z={gap} in [{}, {upper:.2}]",
            n - 2
        ));
    }
    Ok(lines.join("; "))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let (g5, labels5) = gm_graph(5).unwrap();
    ensure(g5.n() == 15 && g5.regular_degree() == Some(6), || {
        "G5 shape".into()
    })?;
    let (_, lambda, _) = spectral_triple(&g5);
    ensure((lambda - 3.0).abs() <= 1e-6, || format!("G5 λ = {lambda}"))?;
    ensure((spectrum(&g5).unwrap().lambda - 3.0).abs() <= 1e-6, || {
        "library λ(G5)".into()
    })?;
    let z = z_bruteforce(&g5);
    ensure(z >= 10 && z == exact_z(&g5), || format!("Z(G5) = {z}"))?;
    let mut found = 0u64;
    let mut bad = 0u64;
    let mut longest = 0;
    for mode in [WitnessMode::Overlapping, WitnessMode::Disjoint] {
        enumerate_witnesses(&g5, mode, 15, u64::MAX, |w| {
            found += 1;
            longest = longest.max(w.order());
            if !witness_gf2_independence(&labels5, w).unwrap() {
                bad += 1;
            }
        })
        .unwrap();
    }
    let best = max_witness_order(&g5, WitnessMode::Overlapping, u64::MAX).unwrap();
    ensure(witness_gf2_independence(&labels5, &best).unwrap(), || {
        "max witness dependent".into()
    })?;
    ensure(bad == 0 && longest <= 5, || {
        format!("{bad} dependent witnesses, longest {longest}")
    })?;

    let (g7, _) = gm_graph(7).unwrap();
    ensure(g7.n() == 63 && g7.regular_degree() == Some(30), || {
        "G7 shape".into()
    })?;
    let (_, l7, _) = spectral_triple(&g7);
    ensure(
        (l7 - 5.0).abs() <= 1e-6 && (spectrum(&g7).unwrap().lambda - 5.0).abs() <= 1e-6,
        || format!("G7 λ = {l7}"),
    )?;
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 120.0, || format!("took {secs:.1} s"))?;
    Ok(format!(
        "G5: λ=3, Z={z}, {found} witnesses enumerated (max order {longest}), all GF(2)-independent; G7: n=63, d=30, λ=5; {secs:.2} s"
    ))
}

fn criterion_7() -> Outcome {
    let mut graphs = vec![
        ("petersen".to_string(), std_graph(StandardGraph::Petersen)),
        ("G5".into(), gm_graph(5).unwrap().0),
        ("G7".into(), gm_graph(7).unwrap().0),
    ];
    for seed in 1..=5 {
        graphs.push((
            format!("rr(100,6,{seed})"),
            random_regular_sample(100, 6, seed).unwrap(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst = (f64::INFINITY, f64::INFINITY);
    for (name, g) in &graphs {
        let n = g.n();
        let adj = adjacency(g);
        let d = g.regular_degree().unwrap() as f64;
        let (_, lambda, lmin) = spectral_triple(g);
        let spec = spectrum(g).unwrap();
        for _ in 0..1000 {
            let (du, dw): (f64, f64) = (rng.random(), rng.random());
            let u: Vec<bool> = (0..n).map(|_| rng.random::<f64>() < du).collect();
            let w: Vec<bool> = (0..n).map(|_| rng.random::<f64>() < dw).collect();
            let (nu, nw, nf) = (
                u.iter().filter(|&&x| x).count() as f64,
                w.iter().filter(|&&x| x).count() as f64,
                n as f64,
            );
            let x = d * nu * nw / nf - edge_pairs(&adj, &u, &w) as f64;
            let r = (nu * nw * (1.0 - nu / nf) * (1.0 - nw / nf))
                .max(0.0)
                .sqrt();
            let (s1, s2) = (-lmin * r - x, lambda * r - x.abs());
            worst = (worst.0.min(s1), worst.1.min(s2));
            ensure(s1 >= -1e-8 && s2 >= -1e-8, || {
                format!("{name}: slacks {s1}, {s2}")
            })?;
            let to_set =
                |v: &[bool]| VertexSet::from_vertices(n, (0..n).filter(|&i| v[i])).unwrap();
            let lib = mixing_defect(g, &spec, &to_set(&u), &to_set(&w)).unwrap();
            ensure(
                (lib.slack_lower - s1).abs() < 1e-6 && (lib.slack_abs - s2).abs() < 1e-6,
                || format!("{name}: library slacks differ from oracle"),
            )?;
        }
    }
    Ok(format!(
        "{} graphs x 1000 pairs, min slacks {:.4} (λ_min form) and {:.4} (λ form)",
        graphs.len(),
        worst.0,
        worst.1
    ))
}

fn criterion_8() -> Outcome {
    let mut instances = 0;
    let mut lines = Vec::new();
    let mut seed = 1;
    while instances < 20 {
        let (n, d) = if seed % 2 == 1 { (400, 60) } else { (400, 100) };
        let g = random_regular_sample(n, d, seed).unwrap();
        seed += 1;
        let spec = spectrum(&g).unwrap();
        let (_, lambda, _) = spectral_triple(&g);
        ensure((lambda - spec.lambda).abs() < 1e-6, || {
            "λ disagrees with oracle".into()
        })?;
        let gap = d as f64 - lambda;
        if gap <= 2.0 * lambda + 1.0 {
            continue;
        }
        instances += 1;
        let out = greedy_witness(&g, &spec).unwrap();
        let promised = (n as f64 / (2.0 * gap) * (gap / (2.0 * lambda + 1.0)).ln()).ceil() as usize;
        let adj = adjacency(&g);
        ensure(out.claim_held(), || {
            format!("seed {}: greedy stalled", seed - 1)
        })?;
        ensure(out.k() >= promised, || {
            format!("seed {}: k = {} < {promised}", seed - 1, out.k())
        })?;
        ensure(
            witness_problem(&adj, out.witness.s(), out.witness.t()).is_none()
                && out.witness.images_disjoint(),
            || format!("seed {}: witness invalid", seed - 1),
        )?;
        let start: Vec<bool> = (0..n).map(|v| !out.witness.t().contains(&v)).collect();
        ensure(closure_oracle(&adj, &start).iter().all(|&b| b), || {
            format!("seed {}: forcing set fails", seed - 1)
        })?;
        lines.push(format!("d={d}:k={}>={promised}", out.k()));
    }
    ensure(seed <= 60, || {
        "too few instances met the gap condition".into()
    })?;
    Ok(format!("20 instances: {}", lines.join(" ")))
}

fn criterion_9() -> Outcome {
    let start = Instant::now();
    let config = SweepConfig::default();
    ensure(
        config.ns == vec![12, 14, 16, 18, 20, 22] && config.ps == vec![0.5] && config.trials == 50,
        || "default sweep grid changed".into(),
    )?;
    let result = run_gnp_sweep(&config).unwrap();
    // Spot-check exactness of stored trials against brute force.
    for r in result.records.iter().filter(|r| r.n <= 16 && r.trial < 3) {
        let g = gnp_sample(r.n, r.p, r.seed).unwrap();
        ensure(z_bruteforce(&g) == r.z, || {
            format!("trial seed {} mismatch", r.seed)
        })?;
    }
    let trend = &result.trends[0];
    let means: Vec<f64> = result.cells.iter().map(|c| c.mean_gap).collect();
    let mut ratios = Vec::new();
    for c in &result.cells {
        let predicted = (2.0 + std::f64::consts::SQRT_2) * ((c.n as f64) * 0.5).log2();
        ensure(
            (predicted - gnp_predicted_gap(c.n, 0.5).unwrap()).abs() < 1e-9,
            || "formula".into(),
        )?;
        ratios.push(c.mean_gap / predicted);
    }
    let secs = start.elapsed().as_secs_f64();
    let summary = format!(
        "means {:?}, ratio to prediction {:?}, spearman {:?}, {secs:.1} s",
        means
            .iter()
            .map(|m| (m * 100.0).round() / 100.0)
            .collect::<Vec<_>>(),
        ratios
            .iter()
            .map(|r| (r * 1000.0).round() / 1000.0)
            .collect::<Vec<_>>(),
        trend.spearman
    );
    ensure(
        trend.strictly_increasing && trend.spearman == Some(1.0),
        || format!("not monotone: {summary}"),
    )?;
    ensure(ratios.iter().all(|r| (0.5..=2.0).contains(r)), || {
        format!("ratio outside [0.5, 2]: {summary}")
    })?;
    ensure(secs < 600.0, || format!("too slow: {summary}"))?;
    Ok(summary)
}

/// Returns the outcome of the literal p = 1/2 identity separately so the
/// known discrepancy is reported rather than hidden.
fn criterion_10() -> (Outcome, Option<String>) {
    let body = || -> Result<(String, Option<String>), String> {
        let exact = girth_sharp_exact(22, 5);
        ensure(exact == Some((1681, 27)), || {
            format!("sharp(22,5) = {exact:?}")
        })?;
        let real = girth_lower_bound(22.0, 5).unwrap().sharp;
        ensure((real - 1681.0 / 27.0).abs() < 1e-9, || {
            format!("real sharp = {real}")
        })?;
        let dk = davila_kenter_value(22.0, 5).unwrap();
        ensure(dk == 62.0 && 1681 > 62 * 27, || format!("DK = {dk}"))?;
        // δ = 21 must not exceed its comparison value, showing 22 is the threshold.
        let below = girth_sharp_exact(21, 5).unwrap();
        ensure(below.0 <= 60 * below.1, || "threshold moved".into())?;

        let c = 2.0 + std::f64::consts::SQRT_2;
        let mut worst_general = 0.0f64;
        let mut worst_literal = 0.0f64;
        for e in 6..=20 {
            let n = 1usize << e;
            let f = gnp_forcing_formula(n, 0.5).unwrap();
            let general = n as f64 - c * (n as f64 / 2.0).log2();
            let literal = n as f64 - c * (n as f64).log2();
            worst_general = worst_general.max(((f - general) / general).abs());
            worst_literal = worst_literal.max(((f - literal) / literal).abs());
            ensure((f - literal - c).abs() < 1e-9 * n as f64, || {
                "offset is not 2+√2".into()
            })?;
        }
        ensure(worst_general <= 1e-12, || {
            format!("general identity off by {worst_general:e}")
        })?;
        let literal = (worst_literal > 1e-12).then(|| {
            format!(
                "gnp_forcing_formula(n, 1/2) = n - (2+√2)log2(n/2), which differs from n - (2+√2)log2 n by exactly 2+√2 (max relative {worst_literal:.3e} > 1e-12)"
            )
        });
        Ok((
            format!("sharp(22,5) = 1681/27 > 62 = DK(22,5); p=1/2 formula = n - (2+√2)log2(np) to {worst_general:.1e}"),
            literal,
        ))
    };
    match body() {
        Ok((detail, literal)) => (Ok(detail), literal),
        Err(e) => (Err(e), None),
    }
}

fn run(f: impl FnOnce() -> Outcome) -> Outcome {
    panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(format!("panicked: {msg}"))
    })
}

#[test]
fn acceptance_criteria() {
    let criteria: [fn() -> Outcome; 9] = [
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
        criterion_9,
    ];
    let mut err = std::io::stderr();
    let mut failures = Vec::new();
    for (i, f) in criteria.into_iter().enumerate() {
        let outcome = run(f);
        match &outcome {
            Ok(d) => writeln!(err, "criterion {}: PASS {d}", i + 1).unwrap(),
            Err(e) => {
                writeln!(err, "criterion {}: FAIL {e}", i + 1).unwrap();
                failures.push(i + 1);
            }
        }
    }
    let (outcome, literal) = criterion_10();
    match (&outcome, &literal) {
        (Ok(d), None) => writeln!(err, "criterion 10: PASS {d}").unwrap(),
        (Ok(d), Some(gap)) => {
            // Every clause passes except the literal identity, which is a
            // known disagreement in the requirement itself (see README).
            writeln!(
                err,
                "criterion 10: FAIL literal p=1/2 identity: {gap}; other clauses pass: {d}"
            )
            .unwrap()
        }
        (Err(e), _) => {
            writeln!(err, "criterion 10: FAIL {e}").unwrap();
            failures.push(10);
        }
    }
    assert!(failures.is_empty(), "failing criteria: {failures:?}");
}
