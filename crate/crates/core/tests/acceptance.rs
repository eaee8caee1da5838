//! Acceptance run: one PASS/FAIL line per criterion, with wall time.
//! Exits non-zero if any criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use locdim::bounds::{
    kneser_beta_lower, kneser_zeta_lower, moore_bounds, polarity_bounds, BoundEntry, Kind, Quantity,
};
use locdim::game::{
    loc_decide, verify_strategy, LocDecision, LocOptions, MooreStrategy, StrategyReport,
};
use locdim::geometry::er_polarity_graph;
use locdim::graph::kneser::{binomial, for_each_k_subset};
use locdim::graph::symmetry::Symmetry;
use locdim::graph::{cycle_graph, hoffman_singleton, kneser_graph, petersen, KneserLabel};
use locdim::hyper::{
    berge_girth, certify_detectable, check_degree_properties, hypergraph_to_resolving,
    is_detectable, kneser_resolving_cover, resolving_to_hypergraph, search_girth5_gadget,
    Hypergraph,
};
use locdim::metric::{
    is_resolving, kneser_is_resolving, metric_dimension, moore_resolving_default,
    polarity_resolving,
};
use locdim::{Budget, Graph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(t: Duration, limit: Duration, what: &str) -> Result<(), String> {
    ensure(t <= limit, || {
        format!("{what} took {t:.2?}, limit {limit:?}")
    })
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let v = f();
    (v, t.elapsed())
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn locdim(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_locdim"))
        .args(args)
        .output()
        .expect("locdim binary runs")
}

fn six_cycle_set() -> Vec<KneserLabel> {
    ["12", "16", "23", "34", "45", "56"]
        .iter()
        .map(|t| KneserLabel::parse(t, 2, 6).unwrap())
        .collect()
}

fn six_cycle_on_k26() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let (out, t1) = timed(|| {
        locdim(&[
            "md",
            "verify",
            "--graph",
            "kneser:2,6",
            "--set",
            "12,16,23,34,45,56",
        ])
    });
    ensure(out.status.code() == Some(0), || {
        format!("md verify exited {:?}", out.status.code())
    })?;
    within(t1, secs(1), "md verify")?;

    let ranks: Vec<usize> = six_cycle_set().iter().map(|l| l.rank(6)).collect();
    let h = resolving_to_hypergraph(&ranks, 2, 6).map_err(|e| e.to_string())?;
    let expected = vec![
        vec![1, 2],
        vec![1, 6],
        vec![2, 3],
        vec![3, 4],
        vec![4, 5],
        vec![5, 6],
    ];
    ensure(h.edges == expected, || {
        format!("hypergraph edges {:?}", h.edges)
    })?;
    let path = dir.path().join("c6.json");
    std::fs::write(&path, h.to_json()).map_err(|e| e.to_string())?;
    let (out, t2) = timed(|| {
        locdim(&[
            "hyper",
            "detect",
            "--hyper",
            path.to_str().unwrap(),
            "-k",
            "2",
        ])
    });
    ensure(out.status.code() == Some(0), || {
        format!("hyper detect exited {:?}", out.status.code())
    })?;
    within(t2, secs(1), "hyper detect")?;
    Ok(format!("resolving and 2-detectable ({t1:.2?} + {t2:.2?})"))
}

fn c5_values() -> Check {
    let g = cycle_graph(5).unwrap();
    let opts = LocOptions::default();
    let ((one, two), t1) = timed(|| {
        (
            loc_decide(&g, 1, &opts).unwrap(),
            loc_decide(&g, 2, &opts).unwrap(),
        )
    });
    ensure(one == LocDecision::RobberWin, || {
        format!("k = 1 gave {one:?}")
    })?;
    ensure(two.is_cop_win(), || format!("k = 2 gave {two:?}"))?;
    within(t1, secs(1), "loc_decide")?;
    let (md, t2) = timed(|| metric_dimension(&g, &Budget::UNLIMITED));
    ensure(md.value == Some(2), || {
        format!("metric dimension {:?}", md.value)
    })?;
    within(t2, secs(1), "metric_dimension")?;
    Ok(format!("zeta = 2 ({t1:.2?}), beta = 2 ({t2:.2?})"))
}

fn petersen_values() -> Check {
    let g = petersen();
    let (md, t1) = timed(|| metric_dimension(&g, &Budget::UNLIMITED));
    ensure(md.value == Some(3), || {
        format!("metric dimension {:?}", md.value)
    })?;
    within(t1, secs(1), "metric_dimension")?;
    let opts = LocOptions::default().with_symmetry(Symmetry::kneser(&g, 2, 5).unwrap());
    let ((two, three), t2) = timed(|| {
        (
            loc_decide(&g, 2, &opts).unwrap(),
            loc_decide(&g, 3, &opts).unwrap(),
        )
    });
    ensure(two == LocDecision::RobberWin, || {
        format!("k = 2 gave {two:?}")
    })?;
    ensure(three.is_cop_win(), || format!("k = 3 gave {three:?}"))?;
    within(t2, secs(300), "loc_decide")?;
    Ok(format!("beta = 3 ({t1:.2?}), zeta = 3 ({t2:.2?})"))
}

fn moore_construction() -> Check {
    let mut notes = Vec::new();
    for (name, g, size) in [
        ("Petersen", petersen(), 3),
        ("Hoffman-Singleton", hoffman_singleton(), 11),
    ] {
        let (res, t) = timed(|| {
            let s = moore_resolving_default(&g)?;
            is_resolving(&g, &s)
        });
        let cert = res.map_err(|e| e.to_string())?;
        ensure(cert.verified, || {
            format!("{name}: set {:?} does not resolve", cert.landmarks)
        })?;
        ensure(cert.landmarks.len() == size, || {
            format!("{name}: size {}", cert.landmarks.len())
        })?;
        within(t, secs(10), name)?;
        notes.push(format!("{name} {size} ({t:.2?})"));
    }
    Ok(notes.join(", "))
}

fn moore_strategy() -> Check {
    let g = hoffman_singleton();
    let s = MooreStrategy::new(&g).map_err(|e| e.to_string())?;
    let (report, t) = timed(|| verify_strategy(&g, &s, 7, 64));
    within(t, secs(1800), "verify_strategy")?;
    match report {
        StrategyReport::Captured {
            rounds,
            positions,
            trace,
            ..
        } => {
            trace
                .check(&g)
                .map_err(|e| format!("worst-case trace does not replay: {e}"))?;
            Ok(format!(
                "captured on every branch within {rounds} rounds, {positions} positions ({t:.2?})"
            ))
        }
        StrategyReport::Evaded { reason, trace, .. } => Err(format!(
            "robber escapes ({reason:?}); trace: {}",
            serde_json::to_string(&trace).unwrap()
        )),
    }
}

fn beta_interval(entries: &[BoundEntry]) -> (i64, i64) {
    let of = |k: Kind| {
        entries
            .iter()
            .filter(move |e| e.quantity == Quantity::Beta && e.satisfied && e.kind == k)
            .filter_map(|e| e.bound)
    };
    (
        of(Kind::Lower).max().unwrap_or(i64::MIN),
        of(Kind::Upper).min().unwrap_or(i64::MAX),
    )
}

fn polarity_construction() -> Check {
    let mut notes = Vec::new();
    for q in [2u32, 3, 4, 5, 7] {
        let (res, t) = timed(|| {
            let pg = er_polarity_graph(q)?;
            let s = polarity_resolving(&pg)?;
            is_resolving(&pg.graph, &s)
        });
        let cert = res.map_err(|e| e.to_string())?;
        ensure(cert.verified, || format!("ER({q}): not resolving"))?;
        let want = 2 * q as usize - 1;
        ensure(cert.landmarks.len() == want, || {
            format!("ER({q}): size {} instead of {want}", cert.landmarks.len())
        })?;
        within(t, secs(30), &format!("ER({q})"))?;
    }
    for q in [2u32, 3] {
        let g = er_polarity_graph(q).unwrap().graph;
        let beta = metric_dimension(&g, &Budget::UNLIMITED)
            .value
            .ok_or("exact search did not close")?;
        let (lo, hi) = beta_interval(&polarity_bounds(q).unwrap());
        ensure(lo <= beta as i64 && beta as i64 <= hi, || {
            format!("beta(ER({q})) = {beta} outside [{lo}, {hi}]")
        })?;
        notes.push(format!("beta(ER({q})) = {beta} in [{lo}, {hi}]"));
    }
    Ok(format!(
        "sizes 2q - 1 verified for q = 2, 3, 4, 5, 7; {}",
        notes.join(", ")
    ))
}

/// Resolving in K(k, n) and k-detectable as a hypergraph must agree, and
/// each translation must land on the matching side.
fn round_trip_one(g: &Graph, k: usize, n: usize, s: &[usize]) -> Result<bool, String> {
    let resolving = is_resolving(g, s).map_err(|e| e.to_string())?.verified;
    let h = resolving_to_hypergraph(s, k, n).map_err(|e| e.to_string())?;
    let detectable = is_detectable(&h, k).map_err(|e| e.to_string())?.detectable;
    ensure(resolving == detectable, || {
        format!("{s:?}: resolving {resolving}, detectable {detectable}")
    })?;
    let back = hypergraph_to_resolving(&h, k, n).map_err(|e| e.to_string())?;
    let back_resolving = is_resolving(g, &back).map_err(|e| e.to_string())?.verified;
    ensure(back_resolving == detectable, || {
        format!("{s:?}: translated back, resolving {back_resolving}")
    })?;
    Ok(resolving)
}

fn round_trips() -> Check {
    let g = kneser_graph(2, 6).unwrap();
    let mut resolving_26 = 0;
    for mask in 0u32..1 << 15 {
        let s: Vec<usize> = (0..15).filter(|&i| mask >> i & 1 == 1).collect();
        resolving_26 += round_trip_one(&g, 2, 6, &s)? as usize;
    }
    let g = kneser_graph(3, 9).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let all: Vec<usize> = (0..84).collect();
    let (mut resolving_39, mut tries) = (0, 0);
    while resolving_39 < 200 {
        tries += 1;
        ensure(tries < 100_000, || "too few resolving samples".to_string())?;
        let size = rng.gen_range(6..=24);
        let s: Vec<usize> = all.choose_multiple(&mut rng, size).copied().collect();
        resolving_39 += round_trip_one(&g, 3, 9, &s)? as usize;
    }
    Ok(format!(
        "K(2,6): all 32768 subsets, {resolving_26} resolving; K(3,9): {resolving_39} resolving of {tries} sampled"
    ))
}

fn random_uniform(rng: &mut ChaCha8Rng, n: usize, k: usize, edges: usize) -> Hypergraph {
    let mut all = Vec::new();
    for_each_k_subset(n, k, |c| {
        all.push(c.iter().map(|&x| x as u16 + 1).collect::<Vec<u16>>());
        true
    });
    let chosen: Vec<Vec<u16>> = all.choose_multiple(rng, edges).cloned().collect();
    Hypergraph::new(n, chosen).unwrap()
}

fn degree_conditions() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let (mut detectable, mut violations) = (0, 0);
    for _ in 0..1000 {
        let m = rng.gen_range(5..=45);
        let h = random_uniform(&mut rng, 9, 3, m);
        if is_detectable(&h, 3).map_err(|e| e.to_string())?.detectable {
            detectable += 1;
            if !check_degree_properties(&h, 3)
                .map_err(|e| e.to_string())?
                .passes()
            {
                violations += 1;
            }
        }
    }
    ensure(detectable > 0, || {
        "no detectable hypergraph in the sample".to_string()
    })?;
    ensure(violations == 0, || {
        format!("{violations} detectable hypergraphs violate the degree conditions")
    })?;
    Ok(format!(
        "1000 sampled, {detectable} 3-detectable, 0 violations"
    ))
}

/// Adds random k-sets while the Berge girth stays at least 5.
fn random_girth5(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Hypergraph {
    let mut all = Vec::new();
    for_each_k_subset(n, k, |c| {
        all.push(c.iter().map(|&x| x as u16 + 1).collect::<Vec<u16>>());
        true
    });
    all.shuffle(rng);
    let mut edges: Vec<Vec<u16>> = Vec::new();
    for e in all {
        edges.push(e);
        let h = Hypergraph::new(n, edges.clone()).unwrap();
        if berge_girth(&h).is_some_and(|g| g < 5) {
            edges.pop();
        }
    }
    Hypergraph::new(n, edges).unwrap()
}

fn certificate_soundness() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut corpus: Vec<Hypergraph> = Vec::new();
    for n in 5..=12 {
        corpus.push(Hypergraph::from_graph(&cycle_graph(n).unwrap()));
        for _ in 0..40 {
            corpus.push(random_girth5(&mut rng, n, 2));
        }
        for _ in 0..10 {
            corpus.push(random_girth5(&mut rng, n, 3));
        }
    }
    corpus.push(Hypergraph::from_graph(&petersen()));
    let mut checked = 0;
    for h in &corpus {
        let k = h.uniformity().expect("corpus is uniform");
        let girth_ok = berge_girth(h).is_none_or(|g| g >= 5);
        for kp in 1..=k {
            let qualifies = girth_ok && 2 * h.min_degree() >= kp + 2;
            let certified = certify_detectable(h, kp).map_err(|e| e.to_string())?;
            ensure(certified == qualifies, || {
                format!("certificate disagrees with its definition on {h:?}")
            })?;
            if qualifies {
                checked += 1;
                let d = is_detectable(h, kp).map_err(|e| e.to_string())?;
                ensure(d.detectable, || {
                    format!(
                        "{h:?} is certified but not {kp}-detectable: {:?}",
                        d.witness
                    )
                })?;
            }
        }
    }
    ensure(checked > 0, || {
        "no hypergraph in the corpus qualifies".to_string()
    })?;
    Ok(format!(
        "{} hypergraphs, {checked} certified (H, k') pairs all detectable",
        corpus.len()
    ))
}

fn bound_formulas() -> Check {
    let (res, t) = timed(|| -> Result<(), String> {
        let r = |n, d| num_rational::Rational64::new(n, d);
        let b = kneser_beta_lower(6, 18);
        ensure(b.value == Some(r(12, 1)) && b.bound == Some(12), || {
            format!("beta_lower(6,18) = {:?}", b.value)
        })?;
        let b = kneser_beta_lower(4, 12);
        ensure(b.value == Some(r(35, 4)) && b.bound == Some(9), || {
            format!("beta_lower(4,12) = {:?}", b.value)
        })?;
        let z = kneser_zeta_lower(4, 12);
        ensure(z.value == Some(r(23, 4)) && z.bound == Some(6), || {
            format!("zeta_lower(4,12) = {:?}", z.value)
        })?;
        let m = moore_bounds(7).map_err(|e| e.to_string())?;
        let pick = |q: Quantity, k: Kind| {
            m.iter()
                .find(|e| e.quantity == q && e.kind == k)
                .and_then(|e| e.bound)
        };
        let got = [
            pick(Quantity::Beta, Kind::Lower),
            pick(Quantity::Beta, Kind::Upper),
            pick(Quantity::Zeta, Kind::Lower),
            pick(Quantity::Zeta, Kind::Upper),
        ];
        ensure(got == [Some(7), Some(11), Some(6), Some(7)], || {
            format!("moore_bounds(7) = {got:?}")
        })?;
        let p = beta_interval(&polarity_bounds(5).map_err(|e| e.to_string())?);
        ensure(p == (5, 9), || format!("polarity_bounds(5) beta in {p:?}"))?;
        Ok(())
    });
    res?;
    within(t, Duration::from_millis(100), "bound formulas")?;
    Ok(format!("all values exact ({t:.2?})"))
}

fn labels_of(h: &Hypergraph, n: usize) -> Vec<KneserLabel> {
    h.edges
        .iter()
        .map(|e| KneserLabel::new(e.clone(), n).unwrap())
        .collect()
}

fn cover_construction() -> Check {
    let c5 = Hypergraph::from_graph(&cycle_graph(5).unwrap());
    let (res, t) = timed(|| -> Result<(usize, bool), String> {
        let cover = kneser_resolving_cover(2, 10, &c5).map_err(|e| e.to_string())?;
        let check = kneser_is_resolving(2, 10, &labels_of(&cover.hypergraph, 10))
            .map_err(|e| e.to_string())?;
        let direct = is_resolving(&kneser_graph(2, 10).unwrap(), &cover.landmarks)
            .map_err(|e| e.to_string())?;
        Ok((cover.landmarks.len(), check.verified && direct.verified))
    });
    let (size, verified) = res?;
    ensure(verified, || {
        "C5 cover of K(2,10) does not resolve".to_string()
    })?;
    ensure(size == 10, || {
        format!("C5 cover of K(2,10) has size {size}")
    })?;
    within(t, secs(5), "K(2,10) cover")?;

    let budget = Budget::nodes(20_000_000);
    let (search, ts) = timed(|| search_girth5_gadget(3, None, 64, &budget));
    let Some(gadget) = search.gadget else {
        return Ok(format!(
            "K(2,10): 10 landmarks verified ({t:.2?}); no 3-uniform gadget within {} nodes (refuted orders {:?})",
            search.nodes, search.orders_refuted
        ));
    };
    let m = gadget.n;
    let n = 3 * m;
    let (res, tc) = timed(|| -> Result<(usize, bool), String> {
        let cover = kneser_resolving_cover(3, n, &gadget).map_err(|e| e.to_string())?;
        let check = kneser_is_resolving(3, n, &labels_of(&cover.hypergraph, n))
            .map_err(|e| e.to_string())?;
        Ok((cover.landmarks.len(), check.verified))
    });
    let (size3, verified3) = res?;
    ensure(verified3, || {
        format!("gadget cover of K(3,{n}) does not resolve")
    })?;
    Ok(format!(
        "K(2,10): 10 landmarks ({t:.2?}); gadget on {m} vertices found in {ts:.2?}, K(3,{n}) with {} vertices resolved by {size3} landmarks ({tc:.2?})",
        binomial(n, 3)
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        (
            "six-cycle resolving set of K(2,6) and its 2-detectable hypergraph",
            six_cycle_on_k26,
        ),
        ("C5: localization number 2, metric dimension 2", c5_values),
        (
            "Petersen: metric dimension 3, localization number 3",
            petersen_values,
        ),
        ("Moore resolving sets of size 2k - 3", moore_construction),
        (
            "staged strategy captures on Hoffman-Singleton with 7 cops",
            moore_strategy,
        ),
        (
            "polarity resolving sets of size 2q - 1 and bounds on ER(2), ER(3)",
            polarity_construction,
        ),
        (
            "resolving sets and detectable hypergraphs translate both ways",
            round_trips,
        ),
        (
            "detectable 3-uniform hypergraphs satisfy the degree conditions",
            degree_conditions,
        ),
        (
            "girth-5 degree certificate implies detectability",
            certificate_soundness,
        ),
        ("closed-form bound values", bound_formulas),
        ("gadget cover constructions", cover_construction),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".to_string()));
        let elapsed = t.elapsed();
        match outcome {
            Ok(detail) => println!(
                "criterion {:>2} PASS [{elapsed:.2?}] {name}: {detail}",
                i + 1
            ),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL [{elapsed:.2?}] {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
