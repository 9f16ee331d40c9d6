use ctrord_core::antichains::{downset_members, make, FamilySpec};
use ctrord_core::enumerate::enumerate_connected;
use ctrord_core::graph::Graph;
use ctrord_core::search::{find_model, is_contraction, is_induced_minor};
use std::time::Instant;

#[test]
#[ignore]
fn bench_enumerate() {
    let t = Instant::now();
    let g7 = enumerate_connected(7).unwrap();
    println!("enumerate(7): {} graphs in {:?}", g7.len(), t.elapsed());
    let t = Instant::now();
    let g8 = enumerate_connected(8).unwrap();
    println!("enumerate(8): {} graphs in {:?}", g8.len(), t.elapsed());
}

#[test]
#[ignore]
fn bench_dec_corpus() {
    let mut total = 0usize;
    let t = Instant::now();
    let d2 = Graph::diamond();
    for n in 1..=7 {
        for g in enumerate_connected(n).unwrap() {
            let structural = ctrord_core::structure::excludes_diamond(&g).unwrap();
            let searched = !is_contraction(&d2, &g).unwrap();
            assert_eq!(structural, searched);
            total += 1;
        }
    }
    println!("dec over {} graphs in {:?}", total, t.elapsed());
}

#[test]
#[ignore]
fn bench_kpp1() {
    let t = Instant::now();
    for r in 3..=6 {
        for p in 3..=5 {
            for q in 3..=5 {
                let k2r = make(FamilySpec::K2r { r }).unwrap().graph;
                let w = make(FamilySpec::W { p, q }).unwrap().graph;
                let t1 = Instant::now();
                let res = is_contraction(&k2r, &w).unwrap();
                println!("K2R:{r} in W:{p},{q} -> {res} ({:?})", t1.elapsed());
                assert_eq!(res, r == p + 1);
            }
        }
    }
    println!("kpp1 grid in {:?}", t.elapsed());
}

#[test]
#[ignore]
fn bench_comp() {
    let t = Instant::now();
    for p in 3..=4 {
        for q in 3..=4 {
            for p2 in 3..=4 {
                for q2 in 3..=4 {
                    let a = make(FamilySpec::W { p, q }).unwrap().graph;
                    let b = make(FamilySpec::W { p: p2, q: q2 }).unwrap().graph;
                    let t1 = Instant::now();
                    let res = find_model(&a, &b).unwrap().is_some();
                    println!("W:{p},{q} in W:{p2},{q2} -> {res} ({:?})", t1.elapsed());
                    assert_eq!(res, (p, q) == (p2, q2));
                }
            }
        }
    }
    println!("comp 3..4 grid in {:?}", t.elapsed());
}

#[test]
#[ignore]
fn bench_comp_5() {
    // the expensive corner of the 3..5 grid
    for (a, b) in [((5, 5), (5, 4)), ((5, 4), (5, 5)), ((3, 3), (5, 5)), ((4, 5), (5, 5))] {
        let ga = make(FamilySpec::W { p: a.0, q: a.1 }).unwrap().graph;
        let gb = make(FamilySpec::W { p: b.0, q: b.1 }).unwrap().graph;
        let t1 = Instant::now();
        let res = find_model(&ga, &gb).unwrap().is_some();
        println!("W:{:?} in W:{:?} -> {res} ({:?})", a, b, t1.elapsed());
    }
}

#[test]
#[ignore]
fn bench_gem() {
    for (p, q) in [(3, 3), (4, 4), (5, 5)] {
        let w = make(FamilySpec::W { p, q }).unwrap().graph;
        let t1 = Instant::now();
        let res = is_induced_minor(&Graph::gem(), &w);
        println!("gem in W:{p},{q} -> {res} ({:?})", t1.elapsed());
        assert!(!res);
    }
}

#[test]
#[ignore]
fn bench_downset() {
    for spec in [
        FamilySpec::K2r { r: 6 },
        FamilySpec::W { p: 3, q: 3 },
        FamilySpec::W { p: 4, q: 4 },
    ] {
        let g = make(spec).unwrap().graph;
        let t1 = Instant::now();
        let ds = downset_members(&g, g.edge_count());
        println!("downset of {spec}: {} members in {:?}", ds.len(), t1.elapsed());
    }
}

#[test]
#[ignore]
fn bench_downset_w55() {
    let g = make(FamilySpec::W { p: 5, q: 5 }).unwrap().graph;
    let t1 = Instant::now();
    let ds = downset_members(&g, g.edge_count());
    println!("downset of W:5,5: {} members in {:?}", ds.len(), t1.elapsed());
}

#[test]
#[ignore]
fn bench_ding_full() {
    use ctrord_core::antichains::{check_ding_premises, DingConfig};
    let t = Instant::now();
    let report = check_ding_premises(&[3, 4, 5], &[3, 4, 5], &DingConfig::default()).unwrap();
    println!(
        "ding full: ok={} iii_ok={} pairs={} exhausted={} in {:?}",
        report.ok,
        report.premise_iii_ok,
        report.pairs.len(),
        report.exhausted_pairs,
        t.elapsed()
    );
    for c in &report.downset_checks {
        println!("  downset {}: {} members, gem_free={}", c.member, c.downset_size, c.all_gem_free);
    }
    for c in &report.inner_closure_checks {
        println!("  inner closure {}: {} reachable, classified={}", c.spec, c.reachable, c.all_classified);
    }
}

#[test]
#[ignore]
fn bench_oracle_equivalence() {
    use ctrord_core::iso::{canon_key, CanonKey};
    use ctrord_core::search::one_step_contractions;
    use std::collections::BTreeSet;
    let t = Instant::now();
    let mut corpus: Vec<Vec<Graph>> = vec![Vec::new()];
    for n in 1..=6 {
        corpus.push(enumerate_connected(n).unwrap());
    }
    let mut pairs = 0usize;
    for n in 1..=6usize {
        for g in &corpus[n] {
            let mut closure: BTreeSet<CanonKey> = BTreeSet::new();
            let mut frontier = vec![g.clone()];
            closure.insert(canon_key(g));
            while let Some(x) = frontier.pop() {
                for c in one_step_contractions(&x) {
                    if closure.insert(canon_key(&c)) {
                        frontier.push(c);
                    }
                }
            }
            for hn in 1..=n {
                for h in &corpus[hn] {
                    let oracle = closure.contains(&canon_key(h));
                    let search = find_model(h, g).unwrap().is_some();
                    assert_eq!(oracle, search);
                    pairs += 1;
                }
            }
        }
    }
    println!("oracle equivalence over {pairs} pairs in {:?}", t.elapsed());
}

#[test]
#[ignore]
fn bench_recons_corpus() {
    use ctrord_core::graph::RootedGraph;
    use ctrord_core::structure::{is_clique_cactus, reconstruct_check};
    let t = Instant::now();
    let mut count = 0usize;
    for n in 1..=7 {
        for g in enumerate_connected(n).unwrap() {
            if !is_clique_cactus(&g) {
                continue;
            }
            for root in 0..n {
                assert!(reconstruct_check(&RootedGraph::new(g.clone(), root)).unwrap());
                count += 1;
            }
        }
    }
    println!("reconstruction over {count} rooted graphs in {:?}", t.elapsed());
}

#[test]
#[ignore]
fn bench_cycleclique() {
    use ctrord_core::graph::RootedGraph;
    use ctrord_core::search::{find_rooted_model, is_rooted_contraction};
    use ctrord_core::sequences::sequence_embeds;
    use ctrord_core::structure::{compose, is_clique_cactus, ComposeKind};
    let t = Instant::now();
    let mut pool: Vec<RootedGraph> = Vec::new();
    for n in 1..=5 {
        for g in enumerate_connected(n).unwrap() {
            if is_clique_cactus(&g) {
                for root in 0..n {
                    pool.push(RootedGraph::new(g.clone(), root));
                }
            }
        }
    }
    println!("pool: {} rooted graphs", pool.len());
    let mut state = 0x9e3779b97f4a7c15u64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let mut done = 0usize;
    let mut attempts = 0usize;
    while done < 500 {
        attempts += 1;
        let glen = 1 + (next() % 4) as usize;
        let hlen = 1 + (next() % glen as u64) as usize;
        let gs: Vec<RootedGraph> = (0..glen).map(|_| pool[(next() % pool.len() as u64) as usize].clone()).collect();
        let hs: Vec<RootedGraph> = (0..hlen).map(|_| pool[(next() % pool.len() as u64) as usize].clone()).collect();
        if !sequence_embeds(&hs, &gs, |a, b| is_rooted_contraction(a, b).unwrap()) {
            continue;
        }
        for kind in [ComposeKind::Stick, ComposeKind::Cycle, ComposeKind::Clique] {
            let ch = compose(kind, &hs).unwrap();
            let cg = compose(kind, &gs).unwrap();
            assert!(
                find_rooted_model(&ch, &cg).unwrap().is_some(),
                "kind {kind:?} hs {hs:?} gs {gs:?}"
            );
        }
        done += 1;
    }
    println!("cycleclique: 500 embedding trials ({attempts} attempts) in {:?}", t.elapsed());
}
