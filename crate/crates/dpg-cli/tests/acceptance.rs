//! Acceptance suite. Each test covers one headline guarantee of the project
//! and prints a single summary line when it holds; run with
//! `cargo test --test acceptance -- --nocapture` to see the numbers.

use std::collections::HashSet;
use std::process::Command;
use std::time::Instant;

use dpg::{
    agreement_check, brute_force_hamilton, check_proof_partitions, decode_certificate,
    encode_certificate, even_hamilton, hamilton_cycle, inner_cycle, odd_hamilton, verify_hamilton,
    ASequence, Construction, CycleCertificate, DpGraph, GraphParams, SearchBudget,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Every t valid for this n: 1 <= t and 2t < n.
fn valid_ts(n: usize) -> std::ops::RangeInclusive<usize> {
    1..=(n - 1) / 2
}

fn all_pairs(max_n: usize) -> Vec<(usize, usize)> {
    (3..=max_n)
        .flat_map(|n| valid_ts(n).map(move |t| (n, t)))
        .collect()
}

/// Constructs and fully verifies one cycle, returning a failure description.
fn construct_and_verify(n: usize, t: usize) -> Option<String> {
    let g = DpGraph::build(n, t).expect("valid parameters");
    match hamilton_cycle(n, t) {
        Ok(cycle) => {
            let report = verify_hamilton(&g, cycle.vertices());
            if report.ok() {
                None
            } else {
                Some(format!("DP({n},{t}) fails verification: {report}"))
            }
        }
        Err(e) => Some(format!("DP({n},{t}) construction error: {e}")),
    }
}

#[test]
fn every_pair_up_to_n_31() {
    let start = Instant::now();
    let pairs = all_pairs(31);
    for &(n, t) in &pairs {
        if let Some(failure) = construct_and_verify(n, t) {
            panic!("{failure}");
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 1, "took {elapsed:?}, expected well under a second");
    println!(
        "acceptance: base range pass ({} pairs with 3 <= n <= 31, {elapsed:?})",
        pairs.len()
    );
}

#[test]
fn extended_sweep_to_n_1000() {
    let start = Instant::now();
    let pairs = all_pairs(1000);
    let failures: Vec<String> = pairs
        .par_iter()
        .filter_map(|&(n, t)| construct_and_verify(n, t))
        .collect();
    let elapsed = start.elapsed();
    assert!(
        failures.is_empty(),
        "{} failures, first: {}",
        failures.len(),
        failures[0]
    );
    assert!(elapsed.as_secs() < 60, "sweep took {elapsed:?}, expected under a minute");
    println!(
        "acceptance: extended sweep pass ({} pairs with n <= 1000, {elapsed:?})",
        pairs.len()
    );
}

#[test]
fn oracle_agreement_up_to_48_vertices() {
    let budget = SearchBudget::default();
    let pairs: Vec<(usize, usize)> = all_pairs(12);
    assert!(pairs.iter().all(|&(n, _)| 4 * n <= budget.max_vertices));
    pairs.par_iter().for_each(|&(n, t)| {
        match agreement_check(n, t, &budget) {
            Ok(true) => {}
            Ok(false) => panic!("DP({n},{t}): construction and search disagree"),
            Err(e) => panic!("DP({n},{t}): oracle error: {e}"),
        }
    });
    println!(
        "acceptance: oracle agreement pass ({} pairs with 4n <= {})",
        pairs.len(),
        budget.max_vertices
    );
}

/// Random walk over valid offset sequences, starting from the canonical one
/// and taking single-entry steps of size g. Always returns a valid
/// non-canonical sequence.
fn random_offsets(params: GraphParams, rng: &mut ChaCha8Rng) -> ASequence {
    let g = params.g();
    let canonical = ASequence::canonical(params).expect("odd n");
    let mut entries = canonical.entries().to_vec();
    for _ in 0..200 {
        let j = rng.random_range(0..g);
        let mut candidate = entries.clone();
        if rng.random_bool(0.5) {
            candidate[j] += g;
        } else if candidate[j] >= g {
            candidate[j] -= g;
        } else {
            continue;
        }
        if candidate[j] < params.n() && ASequence::new(params, candidate.clone()).is_ok() {
            entries = candidate;
        }
    }
    if entries == canonical.entries() {
        // Force one move that is always legal: for a single residue class any
        // value works; otherwise the largest odd-subscript entry has
        // headroom of at least g below n.
        if g == 1 {
            entries[0] = 1;
        } else {
            entries[g - 2] += g;
        }
    }
    ASequence::new(params, entries).expect("walk preserves validity")
}

#[test]
fn partition_checks_hold_for_canonical_and_random_offsets() {
    let odd_pairs: Vec<(usize, usize)> = all_pairs(201)
        .into_iter()
        .filter(|&(n, _)| n % 2 == 1)
        .collect();
    odd_pairs.par_iter().for_each(|&(n, t)| {
        let g = DpGraph::build(n, t).expect("valid parameters");
        let a = ASequence::canonical(g.params()).expect("odd n");
        let report = check_proof_partitions(&g, &a).expect("pieces assemble");
        assert!(report.ok(), "DP({n},{t}) canonical offsets: {report}");
    });

    let mut rng = ChaCha8Rng::seed_from_u64(0x0ff5e75);
    let samples = 100;
    for _ in 0..samples {
        let n = 2 * rng.random_range(1..=49) + 1;
        let t = rng.random_range(1..=(n - 1) / 2);
        let params = GraphParams::new(n, t).expect("valid parameters");
        let a = random_offsets(params, &mut rng);
        assert_ne!(
            a.entries(),
            ASequence::canonical(params).expect("odd n").entries(),
            "sampler must return non-canonical offsets"
        );
        let g = DpGraph::new(params);
        let report = check_proof_partitions(&g, &a).expect("pieces assemble");
        assert!(report.ok(), "DP({n},{t}) offsets {:?}: {report}", a.entries());
        let cycle = odd_hamilton(&g, &a).expect("construction succeeds");
        assert!(verify_hamilton(&g, cycle.vertices()).ok());
    }
    println!(
        "acceptance: partition suite pass ({} canonical pairs with odd n <= 201, {samples} random offset samples with odd n <= 99)",
        odd_pairs.len()
    );
}

#[test]
fn structural_invariants_to_n_200() {
    let pairs = all_pairs(200);
    pairs.par_iter().for_each(|&(n, t)| {
        let g = DpGraph::build(n, t).expect("valid parameters");
        assert_eq!(g.vertex_count(), 4 * n);
        assert_eq!(g.edges().len(), 6 * n, "DP({n},{t}) edge count");
        for a in g.vertices() {
            let neighbors = g.neighbors(a);
            let distinct: HashSet<usize> = neighbors.iter().map(|v| v.serial(n)).collect();
            assert_eq!(distinct.len(), 3, "DP({n},{t}): {a} is not 3-regular");
            for b in neighbors {
                assert!(
                    g.neighbors(b).contains(&a),
                    "DP({n},{t}): edge {a}-{b} is not symmetric"
                );
            }
        }
        if n % 2 == 1 {
            let p = g.params().p().expect("odd n");
            for i in 0..g.params().g() {
                let cycle = inner_cycle(&g, i).expect("odd n");
                assert_eq!(
                    cycle.vertices().len(),
                    2 * p,
                    "DP({n},{t}): inner cycle {i} length"
                );
            }
        }
    });
    println!(
        "acceptance: structural invariants pass ({} pairs with n <= 200)",
        pairs.len()
    );
}

#[test]
fn deterministic_output_and_certificate_round_trip() {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_dpg"))
            .args(["cycle", "9", "3", "--format", "cert"])
            .output()
            .expect("binary runs")
    };
    let first = run();
    let second = run();
    assert!(first.status.success());
    assert!(second.status.success());
    assert_eq!(first.stdout, second.stdout, "repeated runs must match byte for byte");

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let trials = 50;
    for _ in 0..trials {
        let n = rng.random_range(3..=120);
        let t = rng.random_range(1..=(n - 1) / 2);
        let g = DpGraph::build(n, t).expect("valid parameters");
        let cert = if n % 2 == 1 {
            let a = ASequence::canonical(g.params()).expect("odd n");
            let cycle = odd_hamilton(&g, &a).expect("construction succeeds");
            CycleCertificate::new(&g, Construction::OddPqrs, Some(&a), &cycle)
        } else {
            let cycle = even_hamilton(&g).expect("construction succeeds");
            CycleCertificate::new(&g, Construction::EvenLadder, None, &cycle)
        }
        .expect("certificate assembles");
        let text = encode_certificate(&cert);
        let back = decode_certificate(&text).expect("round trip decodes");
        assert_eq!(back, cert, "DP({n},{t}) certificate round trip");
        assert_eq!(encode_certificate(&back), text);
    }
    println!(
        "acceptance: determinism pass (byte-identical cert runs, {trials} certificate round trips)"
    );
}

#[test]
fn notable_instance_dp_5_2() {
    let g = DpGraph::build(5, 2).expect("valid parameters");
    let constructed = hamilton_cycle(5, 2).expect("construction succeeds");
    assert_eq!(constructed.len(), 20);
    assert!(verify_hamilton(&g, constructed.vertices()).ok());

    let found = brute_force_hamilton(&g, &SearchBudget::default())
        .expect("within budget")
        .expect("search finds a cycle");
    assert_eq!(found.len(), 20);
    assert!(verify_hamilton(&g, found.vertices()).ok());
    println!("acceptance: DP(5,2) pass (verified 20-vertex cycle by construction and by search)");
}
