//! Acceptance suite: one line per criterion, nonzero exit on any failure.
//!
//! Run with `cargo test -p omega-core --test acceptance`.

use std::time::{Duration, Instant};

use omega_core::arith::is_prime;
use omega_core::catalog::builtin_catalog;
use omega_core::ncgraph::{self, centralizer_family, omega_via_centralizers, verify_cover_count};
use omega_core::structure::{self, analyze, is_minimal_non_abelian, Decomposition};
use omega_core::{build_group, constructors, Builder, Error, ExportFormat, GroupTable, NonCommutingGraph};

type Outcome = Result<String, String>;
type Criterion = (&'static str, &'static str, fn() -> Outcome);

const PQ_CATALOG: [(&str, usize); 5] = [("S3", 4), ("A4", 5), ("Dic3", 4), ("F21", 8), ("G80", 17)];
const P_CATALOG: [(&str, usize); 4] = [("Q8", 3), ("D8", 3), ("M16", 3), ("M27", 4)];
const PQ_TIME_LIMIT: Duration = Duration::from_secs(10);
const P_TIME_LIMIT: Duration = Duration::from_secs(1);
const G80_TIME_LIMIT: Duration = Duration::from_secs(5);
const ORACLE_ORDER_LIMIT: usize = 30;

fn catalog_group(name: &str) -> GroupTable {
    let entry = builtin_catalog().into_iter().find(|e| e.name == name).expect("catalog entry");
    entry.spec.build(&Builder::default()).expect("catalog group builds")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn q_order(g: &GroupTable) -> Result<usize, String> {
    match structure::decompose(g).map_err(|e| e.to_string())? {
        Decomposition::Pq(d) => Ok(d.q_order()),
        Decomposition::PGroup { .. } => Err(format!("{} decomposed as a p-group", g.name())),
    }
}

fn main_values() -> Outcome {
    let start = Instant::now();
    let mut got = Vec::new();
    for (name, expected) in PQ_CATALOG {
        let g = catalog_group(name);
        let clique = NonCommutingGraph::build(&g).and_then(|x| x.max_clique()).map_err(|e| e.to_string())?.value;
        let cover = omega_via_centralizers(&g).map_err(|e| e.to_string())?.value;
        let formula = q_order(&g)? + 1;
        ensure(clique == expected && cover == expected && formula == expected, || {
            format!("{name}: clique {clique}, centralizers {cover}, |Q|+1 {formula}, expected {expected}")
        })?;
        got.push(clique.to_string());
    }
    let elapsed = start.elapsed();
    ensure(elapsed < PQ_TIME_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!("omega = {} in {elapsed:.2?}", got.join(", ")))
}

fn p_group_values() -> Outcome {
    let start = Instant::now();
    let mut got = Vec::new();
    for (name, expected) in P_CATALOG {
        let g = catalog_group(name);
        let clique = NonCommutingGraph::build(&g).and_then(|x| x.max_clique()).map_err(|e| e.to_string())?.value;
        let p = match structure::decompose(&g).map_err(|e| e.to_string())? {
            Decomposition::PGroup { p } => p as usize,
            Decomposition::Pq(_) => return Err(format!("{name} decomposed as a PQ group")),
        };
        ensure(clique == expected && p + 1 == expected, || {
            format!("{name}: clique {clique}, p+1 {}, expected {expected}", p + 1)
        })?;
        got.push(clique.to_string());
    }
    let elapsed = start.elapsed();
    ensure(elapsed < P_TIME_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!("omega = {} in {elapsed:.2?}", got.join(", ")))
}

fn sylow_facts() -> Outcome {
    for (name, _) in PQ_CATALOG {
        let r = analyze(&catalog_group(name)).map_err(|e| e.to_string())?;
        let facts = r.lemma_2_4.ok_or_else(|| format!("{name}: no PQ decomposition"))?;
        ensure(facts.all(), || format!("{name}: {facts:?}"))?;
    }
    Ok("G' = Q, G' ∩ Z = 1, C(P) = N(P) = P, C(b) = ZQ on 5 groups".into())
}

fn cover_count() -> Outcome {
    let mut got = Vec::new();
    for (name, _) in PQ_CATALOG {
        let g = catalog_group(name);
        let r = verify_cover_count(&g).map_err(|e| e.to_string())?;
        ensure(r.m_is_q_order && r.family_size_is_q_order_plus_one && r.covering_count == g.order(), || {
            format!("{name}: {r:?}")
        })?;
        ensure(r.all(), || format!("{name}: {r:?}"))?;
        got.push(format!("{name} m={} count={}", r.m, r.covering_count));
    }
    Ok(got.join(", "))
}

fn ac_properties() -> Outcome {
    let mut names: Vec<&str> = PQ_CATALOG.iter().chain(P_CATALOG.iter()).map(|(n, _)| *n).collect();
    names.push("S4");
    for name in names {
        let g = catalog_group(name);
        let e = ncgraph::ac_equivalence(&g).map_err(|e| e.to_string())?;
        ensure(e.holds(), || format!("{name}: {e:?}"))?;
        if e.is_ac {
            let f = centralizer_family(&g).map_err(|e| e.to_string())?;
            ensure(f.pairwise_intersections_are_center && f.covers_group, || {
                format!("{name}: centralizer intersections differ from Z")
            })?;
        } else {
            ensure(name == "S4", || format!("{name} is not an AC-group"))?;
        }
    }
    Ok("biconditional on 10 groups, intersections = Z on the 9 AC-groups".into())
}

fn oracle_equivalence() -> Outcome {
    let mut checked = Vec::new();
    for entry in builtin_catalog() {
        let g = entry.spec.build(&Builder::default()).map_err(|e| e.to_string())?;
        if g.order() > ORACLE_ORDER_LIMIT {
            continue;
        }
        let graph = NonCommutingGraph::build(&g).map_err(|e| e.to_string())?;
        let fast = graph.max_clique().map_err(|e| e.to_string())?;
        let slow = graph.naive_max_clique().map_err(|e| e.to_string())?;
        let witness = fast.witness.clone().unwrap_or_default();
        ensure(fast.value == slow.value, || format!("{}: {} vs {}", entry.name, fast.value, slow.value))?;
        ensure(fast.witness_is_valid(&g) && slow.witness_is_valid(&g), || format!("{}: invalid witness", entry.name))?;
        ensure(!ncgraph::witness_is_extendable(&g, &witness), || format!("{}: witness extends", entry.name))?;
        checked.push(entry.name);
    }
    Ok(format!("{} groups ({})", checked.len(), checked.join(", ")))
}

fn negative_controls() -> Outcome {
    for name in ["D12", "S4"] {
        ensure(!is_minimal_non_abelian(&catalog_group(name)), || format!("{name} accepted"))?;
    }
    let b = Builder::default();
    let mut abelian = 0;
    let mut specs: Vec<String> = (1..=30).map(|n| format!("cyclic:{n}")).collect();
    specs.extend(["elemab:2,3", "elemab:3,2", "elemab:5,2", "product:cyclic:2,cyclic:4", "product:cyclic:3,elemab:2,2"].map(String::from));
    for spec in specs {
        let g = build_group(&spec, &b).map_err(|e| e.to_string())?;
        ensure(g.is_commutative() && !is_minimal_non_abelian(&g), || format!("{spec} accepted"))?;
        abelian += 1;
    }
    match omega_via_centralizers(&catalog_group("S4")) {
        Err(Error::NotACGroup { .. }) => {}
        other => return Err(format!("S4 centralizer method gave {other:?}")),
    }
    Ok(format!("D12, S4 and {abelian} abelian groups rejected; S4 is not an AC-group"))
}

fn g80_performance() -> Outcome {
    let g = catalog_group("G80");
    let graph = NonCommutingGraph::build(&g).map_err(|e| e.to_string())?;
    let non_central = g.order() - g.center().len();
    ensure(graph.vertex_count() == non_central, || format!("{} vertices", graph.vertex_count()))?;
    let start = Instant::now();
    let r = graph.max_clique().map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(r.value == 17, || format!("omega {}", r.value))?;
    ensure(elapsed < G80_TIME_LIMIT, || format!("took {elapsed:?}"))?;
    let a = graph.export(ExportFormat::Dimacs).map_err(|e| e.to_string())?;
    let again = NonCommutingGraph::build(&catalog_group("G80")).and_then(|x| x.export(ExportFormat::Dimacs));
    ensure(again.as_deref() == Ok(a.as_str()), || "DIMACS export differs between runs".into())?;
    Ok(format!("{} vertices, {} edges, clique in {elapsed:.2?}, DIMACS stable", graph.vertex_count(), graph.edge_count()))
}

fn construction_soundness() -> Outcome {
    let b = Builder::default();
    let mut groups: Vec<GroupTable> = Vec::new();
    let mut mna = 0;
    let add = |r: Result<GroupTable, Error>, groups: &mut Vec<GroupTable>| -> Result<(), String> {
        groups.push(r.map_err(|e| e.to_string())?);
        Ok(())
    };
    for n in 1..=24 {
        add(b.cyclic(n), &mut groups)?;
    }
    for (q, beta) in [(2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (3, 1), (3, 2), (3, 3), (5, 2), (7, 2)] {
        add(b.elementary_abelian(q, beta), &mut groups)?;
    }
    for n in 3..=20 {
        add(b.dihedral(n), &mut groups)?;
    }
    add(b.quaternion8(), &mut groups)?;
    for (p, m, n) in [(2, 2, 1), (2, 2, 2), (2, 3, 1), (2, 3, 2), (3, 2, 1), (3, 2, 2), (5, 2, 1), (2, 4, 1)] {
        add(b.metacyclic_minimal_p_group(p, m, n), &mut groups)?;
    }
    add(b.direct_product(&b.dihedral(3).map_err(|e| e.to_string())?, &b.cyclic(4).map_err(|e| e.to_string())?), &mut groups)?;
    add(b.direct_product(&constructors::quaternion8(), &b.cyclic(3).map_err(|e| e.to_string())?), &mut groups)?;
    for g in &groups {
        g.validate().map_err(|e| format!("{}: {e}", g.name()))?;
    }

    let primes: Vec<u64> = (2..14).filter(|&n| is_prime(n)).collect();
    for &p in &primes {
        for &q in &primes {
            for alpha in 1..=2 {
                if p == q {
                    continue;
                }
                let g = match b.minimal_nonabelian_pq(p, alpha, q) {
                    Ok(g) if g.order() <= 400 => g,
                    Ok(_) | Err(Error::OrderCapExceeded { .. } | Error::SearchSpaceExceeded { .. }) => continue,
                    Err(e) => return Err(format!("mna:{p},{alpha},{q}: {e}")),
                };
                g.validate().map_err(|e| format!("{}: {e}", g.name()))?;
                ensure(is_minimal_non_abelian(&g), || format!("{} is not minimal non-abelian", g.name()))?;
                let z = g.center().len() as u64;
                ensure(z == p.pow(alpha - 1), || format!("{}: |Z| = {z}", g.name()))?;
                groups.push(g);
                mna += 1;
            }
        }
    }
    Ok(format!("{} groups validated, {mna} PQ groups minimal non-abelian with |Z| = p^(alpha-1)", groups.len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("AC1", "PQ groups: clique = centralizers = |Q|+1", main_values),
        ("AC2", "p-groups: clique = p+1", p_group_values),
        ("AC3", "Sylow structure facts", sylow_facts),
        ("AC4", "centralizer cover count", cover_count),
        ("AC5", "AC biconditional and centralizer intersections", ac_properties),
        ("AC6", "branch and bound = subset enumeration", oracle_equivalence),
        ("AC7", "negative controls", negative_controls),
        ("AC8", "G80 clique time and DIMACS stability", g80_performance),
        ("AC9", "constructor soundness", construction_soundness),
    ];
    let mut failed = 0;
    for (id, title, f) in criteria {
        match f() {
            Ok(detail) => println!("[PASS] {id} {title}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {id} {title}: {detail}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
