//! Acceptance suite. Runs as a plain binary under `cargo test` and prints one
//! line per criterion; exits nonzero if any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use frankl_core::{
    canonical_form,
    conditions::{rival_inequality, small_incomparability_violations},
    counterexample_sweep, doubly_irreducible_census,
    enumerate::enumerate_up_to,
    enumerate_lattices, fixtures, oracle_enumerate,
    removal::{
        build_mixed_removal_counterexample, build_promotion_example, irreducibles_survive_removal,
        remove_irreducible_set, remove_sequentially, sweep_removal,
    },
    Bound, CanonicalCert, Convention, ElemSet, EnumConfig, Error, Lattice, Side,
};
use rand::{seq::SliceRandom, Rng, SeedableRng};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn cfg() -> EnumConfig {
    EnumConfig::default()
}

fn up_to(max: usize) -> Vec<Lattice> {
    enumerate_up_to(max, &cfg())
        .unwrap()
        .into_iter()
        .flatten()
        .collect()
}

fn enumeration_counts() -> Outcome {
    let counts: Vec<usize> = (1..=7)
        .map(|n| enumerate_lattices(n, &cfg()).map(|v| v.len()))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    ensure(
        counts == [1, 1, 1, 2, 5, 15, 53],
        format!("counts {counts:?}"),
    )?;
    Ok(format!("counts {counts:?}"))
}

fn oracle_equivalence() -> Outcome {
    for n in 1..=7 {
        let mut oracle: Vec<CanonicalCert> = oracle_enumerate(n)
            .unwrap()
            .iter()
            .map(canonical_form)
            .collect();
        oracle.sort();
        let fast: Vec<CanonicalCert> = enumerate_lattices(n, &cfg())
            .unwrap()
            .iter()
            .map(canonical_form)
            .collect();
        ensure(oracle == fast, format!("cert sets differ at n={n}"))?;
    }
    Ok("identical cert sets for n=1..7".into())
}

fn conjecture_sweep() -> Outcome {
    let report = counterexample_sweep(8, &cfg()).map_err(|e| e.to_string())?;
    ensure(
        report.total_counterexamples() == 0,
        format!("{} counterexamples", report.total_counterexamples()),
    )?;
    ensure(
        report.certified_lower_bound() == Some(9),
        "no certified bound",
    )?;
    let checked: usize = report.counts().iter().sum();
    Ok(format!("{checked} lattices with 2<=n<=8, no counterexample; minimum counterexample has > 8 elements"))
}

fn doubly_irreducible_census_criterion() -> Outcome {
    let mut parts = Vec::new();
    for n in 4..=7 {
        let hist = doubly_irreducible_census(n, &cfg()).map_err(|e| e.to_string())?;
        let min = *hist.keys().next().unwrap();
        ensure(
            min >= 2,
            format!("n={n} has a lattice with {min} doubly irreducibles"),
        )?;
        parts.push(format!("n={n} min {min}"));
    }
    Ok(parts.join(", "))
}

fn single_element_removal() -> Outcome {
    let ls = up_to(7);
    let sweep = sweep_removal(&ls);
    ensure(
        sweep.disagreements.is_empty(),
        format!("{} disagreements", sweep.disagreements.len()),
    )?;
    Ok(format!(
        "{} elements in {} lattices agree under cover counting ({} bottom/top cases differ under the Rival reading)",
        sweep.elements,
        sweep.lattices,
        sweep.reading_conflicts.len()
    ))
}

fn irreducible_set_removal() -> Outcome {
    let small = up_to(6);
    for l in small.iter().filter(|l| l.len() > 1) {
        ensure(
            irreducibles_survive_removal(l),
            format!("pair check fails on {}", canonical_form(l)),
        )?;
    }
    let pool: Vec<Lattice> = up_to(8).into_iter().filter(|l| l.len() > 2).collect();
    let mut rng = rand::rngs::StdRng::seed_from_u64(1);
    let mut trials = 0;
    while trials < 1000 {
        let l = pool.choose(&mut rng).unwrap();
        let side = if rng.gen_bool(0.5) {
            Side::Join
        } else {
            Side::Meet
        };
        let irr = match side {
            Side::Join => l.join_irreducibles(),
            Side::Meet => l.meet_irreducibles(),
        };
        let mut pick: Vec<usize> = irr.iter().filter(|_| rng.gen_bool(0.6)).collect();
        if pick.is_empty() {
            continue;
        }
        trials += 1;
        let (once, _) =
            remove_irreducible_set(l, pick.iter().collect(), side).map_err(|e| e.to_string())?;
        pick.shuffle(&mut rng);
        let (seq, _) = remove_sequentially(l, &pick, side).map_err(|e| e.to_string())?;
        ensure(
            once.covers() == seq.covers(),
            "removal order changed the result",
        )?;
    }
    Ok(format!(
        "pairs exhaustive for n<=6, {trials} random set removals order-independent"
    ))
}

fn rival_inequality_criterion() -> Outcome {
    let ls = up_to(7);
    for l in &ls {
        ensure(
            rival_inequality(l, Convention::Rival).holds(),
            format!("fails on {}", canonical_form(l)),
        )?;
    }
    for n in 1..=7 {
        let c = fixtures::chain(n);
        let di = c.profile(Convention::Rival).doubly_irr.len();
        ensure(
            c.len() == 2 * (c.length() + 1) - di,
            format!("chain {n} not tight"),
        )?;
    }
    Ok(format!(
        "holds on {} lattices, equality on chains",
        ls.len()
    ))
}

fn golden_files() -> Outcome {
    for name in common::GOLDEN_FIXTURES {
        let l = fixtures::by_name(name).unwrap();
        let golden = common::read_golden(name);
        ensure(
            common::oracle_verdicts(&l) == golden,
            format!("{name}: oracle differs from golden"),
        )?;
        ensure(
            common::library_verdicts(&l) == golden,
            format!("{name}: library differs from golden"),
        )?;
    }
    Ok(format!("{} fixtures match", common::GOLDEN_FIXTURES.len()))
}

fn construction_self_checks() -> Outcome {
    let mixed = build_mixed_removal_counterexample();
    ensure(mixed.witness == (1, 2, Bound::Join), "MIX8 witness")?;
    let conv = build_promotion_example();
    ensure((conv.removed, conv.promoted) == (1, 3), "B2 converse")?;
    let dd = fixtures::dd();
    let res = dd.induced(dd.elements().difference(ElemSet::singleton(3)));
    ensure(
        matches!(res, Err(Error::NotALattice(1, 2, Bound::Join))),
        "DD without its middle element is a lattice",
    )?;
    Ok("MIX8 mixed removal, B2 converse, DD middle removal".into())
}

fn small_incomparables() -> Outcome {
    let ls = up_to(7);
    let mut checked = 0;
    for l in ls.iter().filter(|l| l.len() > 2) {
        let v = small_incomparability_violations(l);
        ensure(
            v.is_empty(),
            format!("violations {v:?} on {}", canonical_form(l)),
        )?;
        checked += l
            .interior()
            .iter()
            .filter(|&x| l.incomparables(x).len() <= 2)
            .count();
    }
    Ok(format!(
        "{checked} interior elements with at most two incomparables"
    ))
}

fn main() {
    // `cargo test` passes harness flags such as `--list`; nothing to list.
    if std::env::args().any(|a| a == "--list") {
        return;
    }
    let criteria: [Criterion; 10] = [
        (
            "1 enumeration counts",
            Duration::from_secs(10),
            enumeration_counts,
        ),
        (
            "2 oracle equivalence",
            Duration::from_secs(300),
            oracle_equivalence,
        ),
        (
            "3 conjecture sweep to n=8",
            Duration::from_secs(300),
            conjecture_sweep,
        ),
        (
            "4 doubly irreducible census",
            Duration::from_secs(30),
            doubly_irreducible_census_criterion,
        ),
        (
            "5 single-element removal",
            Duration::from_secs(120),
            single_element_removal,
        ),
        (
            "6 irreducible set removal",
            Duration::from_secs(120),
            irreducible_set_removal,
        ),
        (
            "7 Rival inequality",
            Duration::from_secs(60),
            rival_inequality_criterion,
        ),
        (
            "8 fixture golden files",
            Duration::from_secs(60),
            golden_files,
        ),
        (
            "9 construction self-checks",
            Duration::from_secs(60),
            construction_self_checks,
        ),
        (
            "10 small incomparable sets",
            Duration::from_secs(120),
            small_incomparables,
        ),
    ];
    let mut failed = 0;
    for (name, limit, run) in criteria {
        let start = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".to_string()));
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(_) if took > limit => Err(format!("took {took:.2?}, limit {limit:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail} [{took:.2?}]"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why} [{took:.2?}]");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
