//! One PASS/FAIL line per acceptance criterion. Run with
//! `cargo test -p matchpoly-cli --test acceptance`.

use std::panic;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use matchpoly::generate::{all_labeled_graphs, gnp, random_stars_triangles, random_tree, rng};
use matchpoly::*;
use matchpoly_cli::{cmd_skeleton, CliConfig, Input, OutputFormat};
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn edge(g: &Graph, u: usize, v: usize) -> EdgeId {
    g.edge_between(VertexId(u), VertexId(v)).expect("edge present")
}

fn verify_clean(g: &Graph) -> Result<(), String> {
    let r = verify_all(g, DEFAULT_MAX_VERTICES).map_err(|e| e.to_string())?;
    let first = r.failures().next().cloned();
    match first {
        None => Ok(()),
        Some(c) => Err(format!("{} on {}: {}", c.name, emit_graph6(g), c.detail)),
    }
}

fn triangle() -> Outcome {
    let g = examples::complete(3);
    let s = build_skeleton(&g, 100).map_err(|e| e.to_string())?;
    let st = s.stats();
    ensure(s.vertex_count() == 4 && s.edge_count() == 6, || {
        format!("{} vertices, {} edges", s.vertex_count(), s.edge_count())
    })?;
    ensure(st.is_regular && st.min_degree == 3, || format!("{st:?}"))?;
    ensure(s.is_connected(), || "skeleton disconnected".into())?;
    Ok("4 vertices, 6 edges, 3-regular, connected".into())
}

fn four_cycle() -> Outcome {
    let g = examples::cycle(4);
    let s = build_skeleton(&g, 100).map_err(|e| e.to_string())?;
    ensure(s.vertex_count() == 7, || format!("{} vertices", s.vertex_count()))?;
    let m = |es: &[EdgeId]| make_matching(&g, es.iter().copied()).unwrap();
    let degree = |x: &Matching| s.degree(s.index_of(x).unwrap());
    ensure(degree(&Matching::empty(&g)) == 4, || "d(∅) != 4".into())?;
    let p1 = m(&[edge(&g, 0, 1), edge(&g, 2, 3)]);
    let p2 = m(&[edge(&g, 1, 2), edge(&g, 0, 3)]);
    ensure(degree(&p1) == 5 && degree(&p2) == 5, || "perfect matchings not of degree 5".into())?;
    let w = classify_adjacency(&g, &m(&[edge(&g, 0, 1)]), &m(&[edge(&g, 2, 3)]))
        .map_err(|e| e.to_string())?;
    ensure(w.kind == WitnessKind::NotAdjacent, || format!("opposite edges: {w:?}"))?;
    let w = classify_adjacency(&g, &p1, &p2).map_err(|e| e.to_string())?;
    ensure(w.kind == WitnessKind::EvenCycle && w.edges.len() == 4, || {
        format!("perfect matchings: {w:?}")
    })?;
    Ok("7 vertices, d(∅)=4, perfect matchings degree 5, even-cycle witness".into())
}

fn triangle_plus_edge() -> Outcome {
    let g = Graph::new(5, [(0, 1), (2, 3), (2, 4), (3, 4)]).unwrap();
    let m = make_matching(&g, [edge(&g, 0, 1), edge(&g, 2, 3)]).unwrap();
    let total = degree_of_matching(&g, &m).total;
    ensure(total == 4, || format!("degree {total}"))?;
    let c = degree_closed_form(&g, &m).map_err(|e| e.to_string())?;
    ensure(c.k == 0 && c.terms == [1, 3] && c.total == 4, || format!("{c:?}"))?;
    let st = build_skeleton(&g, 100).map_err(|e| e.to_string())?.stats();
    ensure(st.vertex_count == 8 && st.is_regular && st.min_degree == 4, || {
        format!("{st:?}")
    })?;
    Ok("total 4 = 0 + 1 + 3; skeleton 4-regular on 8 vertices".into())
}

fn exhaustive() -> Outcome {
    let mut counts = Vec::new();
    for n in [4, 5] {
        let mut count = 0;
        for g in all_labeled_graphs(n) {
            verify_clean(&g)?;
            count += 1;
        }
        counts.push(count);
    }
    ensure(counts == [64, 1024], || format!("graph counts {counts:?}"))?;
    Ok("64 graphs on 4 vertices and 1024 on 5 vertices verified".into())
}

fn randomized() -> Outcome {
    let mut r = rng(2024);
    let (mut checked, mut skipped) = (0, 0);
    for _ in 0..100 {
        let n = r.random_range(6..=8);
        let g = gnp(n, 0.4, &mut r);
        if count_matchings(&g) > 2000 {
            skipped += 1;
            continue;
        }
        verify_clean(&g)?;
        checked += 1;
    }
    Ok(format!("{checked} graphs verified, {skipped} skipped"))
}

fn trees() -> Outcome {
    let mut r = rng(99);
    for _ in 0..50 {
        let n = r.random_range(2..=9);
        let t = random_tree(n, &mut r);
        let s = build_skeleton(&t, DEFAULT_MAX_VERTICES).map_err(|e| e.to_string())?;
        let min = s.stats().min_degree;
        ensure(min == n - 1, || format!("tree {}: min degree {min}", emit_graph6(&t)))?;
        let attaining: Vec<&Matching> =
            (0..s.vertex_count()).filter(|&i| s.degree(i) == n - 1).map(|i| s.matching(i)).collect();
        let pendant_only: Vec<&Matching> = s
            .matchings()
            .iter()
            .filter(|m| m.iter().all(|e| t.is_pendant_edge(e)))
            .collect();
        ensure(attaining == pendant_only, || {
            format!("tree {}: {attaining:?} vs {pendant_only:?}", emit_graph6(&t))
        })?;
    }
    Ok("50 trees: min degree n-1, attained exactly by pendant-edge matchings".into())
}

fn stars_and_triangles() -> Outcome {
    let mut r = rng(7);
    for _ in 0..30 {
        let g = random_stars_triangles(14, &mut r);
        let m = g.edge_count();
        ensure(m <= 14, || format!("{m} edges"))?;
        let s = build_skeleton(&g, DEFAULT_MAX_VERTICES).map_err(|e| e.to_string())?;
        for x in s.matchings() {
            let d = degree_of_matching(&g, x).total;
            ensure(d == m, || format!("{}: {x:?} has degree {d}, m = {m}", emit_graph6(&g)))?;
        }
        let st = s.stats();
        ensure(st.is_regular && st.min_degree == m, || format!("{}: {st:?}", emit_graph6(&g)))?;
    }
    Ok("30 graphs: every matching has degree m, skeleton m-regular".into())
}

fn determinism() -> Outcome {
    let text = "1 2\n2 3\n3 4\n4 1\n1 3\n4 5\n";
    for output in [OutputFormat::Dot, OutputFormat::Json] {
        let cfg = CliConfig {
            output_format: output,
            ..CliConfig::new(Input::Text(text.into()))
        };
        let (a, b) = (cmd_skeleton(&cfg), cmd_skeleton(&cfg));
        ensure(a.code == 0, || a.stderr.clone())?;
        ensure(a.stdout == b.stdout, || format!("{output:?} output differs"))?;
    }
    Ok("DOT and JSON skeleton output byte-identical across runs".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("triangle skeleton", triangle, Duration::from_secs(1)),
        ("four-cycle skeleton", four_cycle, Duration::from_secs(1)),
        ("triangle plus edge", triangle_plus_edge, Duration::from_secs(1)),
        ("exhaustive graphs on 4 and 5 vertices", exhaustive, Duration::from_secs(300)),
        ("seeded random graphs", randomized, Duration::from_secs(300)),
        ("random trees", trees, Duration::from_secs(60)),
        ("stars and triangles", stars_and_triangles, Duration::from_secs(60)),
        ("skeleton determinism", determinism, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = result.and_then(|msg| {
            if elapsed > *limit {
                Err(format!("took {elapsed:.2?}, limit {limit:?}"))
            } else {
                Ok(msg)
            }
        });
        match result {
            Ok(msg) => println!("PASS {} {name}: {msg} ({elapsed:.2?})", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {} {name}: {msg} ({elapsed:.2?})", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
