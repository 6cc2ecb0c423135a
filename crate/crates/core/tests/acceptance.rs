//! Exit criteria. Each test prints one PASS/FAIL line; run with
//! `cargo test --test acceptance -- --nocapture --test-threads 1` to see them.

mod common;

use std::time::{Duration, Instant};

use common::{
    five_node_digraph, random_digraph, random_goal, report, rng, small_graphs, DIGRAPH_SOURCE,
};
use cover_pebbling::collapse::{chain_move, collapse_witness, efficiency_audit};
use cover_pebbling::oracle::{brute_gamma, can_cover, SearchBudget};
use cover_pebbling::solver::{closed_form, cost_from, gamma, product_gamma_check};
use cover_pebbling::{Distribution, Family, GoalDistribution, Graph, ValuedDistribution};
use rand::seq::IndexedRandom;
use rand::Rng;

fn ones(g: &Graph) -> GoalDistribution {
    GoalDistribution::ones(g.node_count())
}

fn family_sweep() -> Vec<Family> {
    let mut families = Vec::new();
    families.extend((1..=10).map(Family::Path));
    families.extend((3..=12).map(Family::cycle));
    families.extend((0..=6).map(Family::Hypercube));
    families.extend((1..=10).map(Family::Complete));
    families.extend((3..=10).map(Family::Wheel));
    for total in 1..=7 {
        families.extend(
            partitions(total, total)
                .into_iter()
                .filter(|p| p.len() >= 2 || p == &[1])
                .map(Family::CompleteMultipartite),
        );
    }
    families
}

/// Partitions of `total` into parts no larger than `max_part`, non-increasing.
fn partitions(total: usize, max_part: usize) -> Vec<Vec<usize>> {
    if total == 0 {
        return vec![vec![]];
    }
    (1..=max_part.min(total))
        .rev()
        .flat_map(|head| {
            partitions(total - head, head)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, head);
                    rest
                })
        })
        .collect()
}

#[test]
fn criterion_1_family_closed_forms() {
    let start = Instant::now();
    let sweep = family_sweep();
    let mismatches: Vec<String> = sweep
        .iter()
        .filter_map(|family| {
            let g = family.graph().unwrap();
            let formula = gamma(&g, &ones(&g)).unwrap().gamma;
            let expected = closed_form(family).unwrap();
            (formula != expected).then(|| format!("{family}: {formula} != {expected}"))
        })
        .collect();
    let elapsed = start.elapsed();
    let multipartite = sweep
        .iter()
        .filter(|f| matches!(f, Family::CompleteMultipartite(_)))
        .count();
    let passed = mismatches.is_empty() && elapsed < Duration::from_secs(10);
    report(
        1,
        "family closed forms reproduced by the simple-distribution formula",
        passed,
        &format!(
            "{} instances, {multipartite} multipartite, {elapsed:.2?}, mismatches {mismatches:?}",
            sweep.len()
        ),
    );
    assert!(passed);
}

#[test]
fn criterion_2_five_node_digraph() {
    let start = Instant::now();
    let g = five_node_digraph();
    let goal = ones(&g);
    let cost = cost_from(&g, &goal, DIGRAPH_SOURCE).unwrap();
    let mut budget = SearchBudget::default();
    let short = Distribution::simple(5, DIGRAPH_SOURCE, 22).unwrap();
    let full = Distribution::simple(5, DIGRAPH_SOURCE, 23).unwrap();
    let short_ok = can_cover(&g, &short, &goal, &mut budget).unwrap().coverable;
    let full_ok = can_cover(&g, &full, &goal, &mut budget).unwrap().coverable;
    let elapsed = start.elapsed();
    let passed = cost == 23 && !short_ok && full_ok && elapsed < Duration::from_secs(5);
    report(
        2,
        "five-node digraph needs 23 pebbles on v",
        passed,
        &format!("cost {cost}, 22 coverable={short_ok}, 23 coverable={full_ok}, {elapsed:.2?}"),
    );
    assert!(passed);
}

#[test]
fn criterion_3_theorem_equivalence() {
    let start = Instant::now();
    let graphs = small_graphs();
    let mut rng = rng(0xC0FE);
    let mut instances: Vec<(Graph, GoalDistribution, &str)> = graphs
        .iter()
        .map(|g| (g.clone(), ones(g), "undirected, ones"))
        .collect();
    for _ in 0..30 {
        let g = graphs.choose(&mut rng).unwrap().clone();
        let goal = random_goal(&mut rng, g.node_count(), 3);
        instances.push((g, goal, "undirected, random goal"));
    }
    for i in 0..12 {
        let n = rng.random_range(2..=4);
        let g = random_digraph(&mut rng, n);
        let goal = if i % 2 == 0 {
            ones(&g)
        } else {
            random_goal(&mut rng, n, 3)
        };
        instances.push((g, goal, "digraph"));
    }

    let mut failures = Vec::new();
    for (g, goal, kind) in &instances {
        let mut budget = SearchBudget::default();
        let brute = brute_gamma(g, goal, &mut budget).unwrap().gamma;
        let formula = gamma(g, goal).unwrap().gamma;
        if brute != formula {
            failures.push(format!(
                "{kind} {:?} goal {:?}: {brute} vs {formula}",
                g.edges(),
                goal.as_slice()
            ));
        }
    }
    let elapsed = start.elapsed();
    let passed = failures.is_empty() && elapsed < Duration::from_secs(120);
    report(
        3,
        "exhaustive cover pebbling number equals the formula",
        passed,
        &format!(
            "{} graphs with ones, 30 random goals, 12 digraphs, {elapsed:.2?}, failures {failures:?}",
            graphs.len()
        ),
    );
    assert!(passed);
}

#[test]
fn criterion_4_product_law() {
    let start = Instant::now();
    let factors: Vec<(&str, Graph)> = vec![
        ("P2", Family::Path(2).graph().unwrap()),
        ("P3", Family::Path(3).graph().unwrap()),
        ("K3", Family::Complete(3).graph().unwrap()),
        ("C4", Family::cycle(4).graph().unwrap()),
        ("K1", Family::Complete(1).graph().unwrap()),
    ];
    let mut failures = Vec::new();
    let mut checked = 0;
    for (a, g1) in &factors {
        for (b, g2) in &factors {
            let check = product_gamma_check(g1, &ones(g1), g2, &ones(g2)).unwrap();
            checked += 1;
            if !check.equal {
                failures.push(format!("{a} x {b}: {check:?}"));
            }
        }
    }
    let mut rng = rng(0xB0C5);
    for _ in 0..20 {
        let (a, g1) = factors.choose(&mut rng).unwrap();
        let (b, g2) = factors.choose(&mut rng).unwrap();
        let w1 = random_goal(&mut rng, g1.node_count(), 3);
        let w2 = random_goal(&mut rng, g2.node_count(), 3);
        let check = product_gamma_check(g1, &w1, g2, &w2).unwrap();
        checked += 1;
        if !check.equal {
            failures.push(format!(
                "{a} x {b} goals {:?} {:?}: {check:?}",
                w1.as_slice(),
                w2.as_slice()
            ));
        }
    }
    let elapsed = start.elapsed();
    let passed = failures.is_empty() && elapsed < Duration::from_secs(10);
    report(
        4,
        "product graph number is the product of the factors' numbers",
        passed,
        &format!(
            "{checked} pairs (25 with ones, 20 random goals), {elapsed:.2?}, failures {failures:?}"
        ),
    );
    assert!(passed);
}

#[test]
fn criterion_5_collapse_soundness() {
    let start = Instant::now();
    let graphs = small_graphs();
    let mut rng = rng(0x5EED);
    let mut instances: Vec<(Graph, GoalDistribution)> =
        graphs.iter().map(|g| (g.clone(), ones(g))).collect();
    while instances.len() < 200 {
        let g = graphs.choose(&mut rng).unwrap().clone();
        let goal = random_goal(&mut rng, g.node_count(), 3);
        instances.push((g, goal));
    }
    for _ in 0..30 {
        let n = rng.random_range(2..=4);
        let g = random_digraph(&mut rng, n);
        let goal = random_goal(&mut rng, n, 3);
        instances.push((g, goal));
    }

    let mut failures = Vec::new();
    for (g, goal) in &instances {
        let mut budget = SearchBudget::default();
        let certificate = brute_gamma(g, goal, &mut budget).unwrap().certificate;
        let report = collapse_witness(g, &certificate, goal).unwrap();
        let witness_cost = cost_from(g, goal, report.witness).unwrap();
        let decreasing = report
            .iterations
            .iter()
            .all(|it| it.fat_pebble_total_after < it.fat_pebble_total_before);
        let efficient = report.iterations.iter().all(|it| it.audit.efficiency);
        let conserved = report.final_distribution.total_value() == u128::from(certificate.total());
        let concentrated =
            Distribution::simple(g.node_count(), report.witness, certificate.total()).unwrap();
        let still_stuck = !can_cover(g, &concentrated, goal, &mut budget)
            .unwrap()
            .coverable;
        if !(witness_cost > certificate.total()
            && decreasing
            && efficient
            && conserved
            && still_stuck
            && report.audit.no_fat_nodes
            && report.sound())
        {
            failures.push(format!(
                "{:?} goal {:?} dist {certificate}",
                g.edges(),
                goal.as_slice()
            ));
        }
    }
    let elapsed = start.elapsed();
    let passed =
        failures.is_empty() && instances.len() >= 200 && elapsed < Duration::from_secs(120);
    report(
        5,
        "collapse witness of every stuck certificate stays stuck",
        passed,
        &format!(
            "{} certificates, {elapsed:.2?}, failures {failures:?}",
            instances.len()
        ),
    );
    assert!(passed);
}

#[test]
fn criterion_6_chain_replay() {
    let g = Family::Path(5).graph().unwrap();
    let goal = ones(&g);
    let start =
        ValuedDistribution::unit(&Distribution::new(vec![17, 1, 1, 1, 0]).unwrap()).unwrap();
    let out = chain_move(&g, &start, &goal, 0, 4).unwrap();
    let counts = out.distribution.counts();
    let passed = counts.counts() == [15, 0, 0, 0, 1]
        && out.arriving_value <= 16
        && efficiency_audit(&g, &out.distribution, &goal);
    report(
        6,
        "chain move along a five-node path",
        passed,
        &format!("counts {counts}, arriving value {}", out.arriving_value),
    );
    assert!(passed);
}

#[test]
fn criterion_7_move_invariants() {
    let mut rng = rng(0x3A7E);
    let mut moves = 0u32;
    let mut violations = 0u32;
    while moves < 10_000 {
        let n = rng.random_range(2..=6);
        let g = if rng.random_bool(0.5) {
            common::random_graph(&mut rng, n)
        } else {
            random_digraph(&mut rng, n)
        };
        let counts: Vec<u64> = (0..n).map(|_| rng.random_range(0..=12)).collect();
        let initial = Distribution::new(counts).unwrap();
        let mut dist = initial.clone();
        let mut valued = ValuedDistribution::unit(&initial).unwrap();
        loop {
            let legal: Vec<(usize, usize)> = g
                .nodes()
                .filter(|&v| dist.get(v) >= 2)
                .flat_map(|v| g.neighbors(v).iter().map(move |&t| (v, t)))
                .collect();
            let Some(&(from, to)) = legal.choose(&mut rng) else {
                break;
            };
            let pile = valued.values(from);
            let i = rng.random_range(0..pile.len());
            let j = (i + 1 + rng.random_range(0..pile.len() - 1)) % pile.len();
            let parents = (pile[i], pile[j]);

            let next = dist.apply_move(&g, from, to).unwrap();
            let next_valued = valued.apply_move(&g, from, to, parents).unwrap();
            moves += 1;
            if next.total() + 1 != dist.total()
                || next_valued.total_value() != u128::from(initial.total())
                || next_valued.counts() != next
            {
                violations += 1;
            }
            dist = next;
            valued = next_valued;
        }
    }
    let passed = violations == 0;
    report(
        7,
        "moves drop one pebble and conserve value",
        passed,
        &format!("{moves} random moves, {violations} violations"),
    );
    assert!(passed);
}
