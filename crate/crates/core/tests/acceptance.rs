//! One line per acceptance criterion; exits nonzero if any fails.

mod common;

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ybq::biquandle::Tables;
use ybq::cohomology::{
    classify_cochain, coboundary, cocycle_matrix, cohomology_basis, reduced_cohomology_basis, Cochain1,
    Cochain2, CocycleClass,
};
use ybq::coloring::enumerate_colorings_oracle;
use ybq::gauss::insert_r_move;
use ybq::invariant::{yb_invariant, yb_invariant_suite};
use ybq::linalg::{mat_vec, Field};
use ybq::search::enumerate_biquandles;
use ybq::{
    alexander_biquandle, counting_invariant, enumerate_colorings, knot_presentation, reduce_presentation,
    validate_biquandle, Biquandle, FieldSpec,
};

type Check = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn within(elapsed: Duration, limit: Duration) -> std::result::Result<(), String> {
    ensure(elapsed < limit, format!("took {elapsed:.2?}, limit {limit:.0?}"))
}

fn kishino_oracle() -> Check {
    let start = Instant::now();
    let t = kishino_t();
    let k = code("kishino.gauss");
    let v1 = yb_invariant(&k, &t, &cocycle("phi1.cyc", 4)).map_err(err)?;
    let v2 = yb_invariant(&k, &t, &cocycle("phi2.cyc", 4)).map_err(err)?;
    ensure(v1.to_string() == "12 + 2*t^-1 + 2*t", format!("phi1 gave {v1}"))?;
    ensure(v2.to_string() == "12 + 2*t^-2 + 2*t^2", format!("phi2 gave {v2}"))?;
    within(start.elapsed(), Duration::from_secs(5))?;
    Ok(format!("phi1 -> {v1}; phi2 -> {v2} (corrected table and phi1)"))
}

fn kishino_reduced() -> Check {
    let start = Instant::now();
    let t = kishino_t();
    let basis = reduced_cohomology_basis(&t, FieldSpec::Rationals);
    ensure(basis.len() == 2, format!("reduced dimension {}", basis.len()))?;
    for name in ["phi1.cyc", "phi2.cyc"] {
        let c = classify_cochain(&t, &cocycle(name, 4)).map_err(err)?;
        ensure(c.class == CocycleClass::NontrivialCocycle && c.ri_reduced, format!("{name}: {c}"))?;
    }
    within(start.elapsed(), Duration::from_secs(5))?;
    Ok("reduced dim 2; phi1, phi2 NONTRIVIAL_COCYCLE RI-reduced".into())
}

fn unknot_oracle() -> Check {
    let start = Instant::now();
    let t = kishino_t();
    let u = code("unknot.gauss");
    let n = counting_invariant(&u, &t).map_err(err)?;
    ensure(n == 4, format!("count {n}"))?;
    let suite = yb_invariant_suite(&u, &t, FieldSpec::Rationals).map_err(err)?;
    ensure(!suite.is_empty(), "empty suite")?;
    for (_, v) in &suite {
        ensure(v.to_string() == "4", format!("suite entry {v}"))?;
    }
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("count 4; {} suite entries equal 4", suite.len()))
}

const CONWAY_RELATIONS: &str = "1^16 = 2, 2_15 = 3, 3_8 = 4, 4^9 = 5, 5_22 = 6, 6^-11 = 7, 7_-20 = 8, 8^3 = 9, \
    9_4 = 10, 10^-21 = 11, 11_-6 = 12, 12_-17 = 13, 13^-18 = 14, 14_-19 = 15, 15^2 = 16, 16_1 = 17, \
    17^-12 = 18, 18_-13 = 19, 19^-14 = 20, 20^-7 = 21, 21_-10 = 22, 22^5 = 1";

fn conway_presentation() -> Check {
    let start = Instant::now();
    let pres = knot_presentation(&code("conway.gauss"));
    let rels: Vec<String> = pres.relations.iter().map(ToString::to_string).collect();
    ensure(rels.join(", ") == CONWAY_RELATIONS, format!("relations {}", rels.join(", ")))?;
    let red = reduce_presentation(&pres);
    let survivors: Vec<u32> = red.presentation.generators.iter().copied().collect();
    ensure(survivors.len() == 5, format!("{} generators survive", survivors.len()))?;
    within(start.elapsed(), Duration::from_secs(5))?;
    let matches = survivors == [1, 8, 15, 16, 21];
    Ok(format!("22 relations verbatim; survivors {survivors:?}, equal to {{1,8,15,16,21}}: {matches}"))
}

fn zero_cocycle_law() -> Check {
    let t = kishino_t();
    let zero = Cochain2::zero(FieldSpec::Rationals, 4);
    let mut parts = Vec::new();
    for name in ["trefoil.gauss", "link2.gauss", "kishino.gauss"] {
        let c = code(name);
        let v = yb_invariant(&c, &t, &zero).map_err(err)?;
        let n = counting_invariant(&c, &t).map_err(err)?;
        ensure(v.to_string() == n.to_string(), format!("{name}: {v} vs count {n}"))?;
        parts.push(format!("{name} {n}"));
    }
    Ok(parts.join(", "))
}

fn small_biquandles() -> std::result::Result<Vec<Biquandle>, String> {
    let mut all = Vec::new();
    for n in 1..=3 {
        all.extend(enumerate_biquandles(n).map_err(err)?);
    }
    Ok(all)
}

fn delta_squared(all: &[Biquandle]) -> std::result::Result<(), String> {
    for f in [FieldSpec::Rationals, FieldSpec::prime(2).unwrap(), FieldSpec::prime(3).unwrap()] {
        for t in all {
            let m = cocycle_matrix(t, f);
            for x in 1..=t.order() {
                let mut v = vec![f.zero(); t.order()];
                v[x - 1] = f.one();
                let d = coboundary(t, &Cochain1::new(f, v)).map_err(err)?;
                let image = mat_vec(&f, &m, d.coeffs()).map_err(err)?;
                ensure(image.iter().all(|e| f.is_zero(e)), format!("d2 d1 != 0 over {f}"))?;
            }
        }
    }
    Ok(())
}

fn coboundary_blindness() -> std::result::Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let t = kishino_t();
    let f = FieldSpec::Rationals;
    let k = code("kishino.gauss");
    for name in ["phi1.cyc", "phi2.cyc"] {
        let phi = cocycle(name, 4);
        let base = yb_invariant(&k, &t, &phi).map_err(err)?;
        for _ in 0..20 {
            let lambda = Cochain1::new(f, (0..4).map(|_| f.from_i64(rng.gen_range(-9..=9))).collect());
            let shifted = phi.add(&coboundary(&t, &lambda).map_err(err)?).map_err(err)?;
            ensure(yb_invariant(&k, &t, &shifted).map_err(err)? == base, "shifted cocycle changed the invariant")?;
        }
    }
    Ok(())
}

fn move_invariance() -> std::result::Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
    let t = kishino_t();
    let full = cohomology_basis(&t, FieldSpec::Rationals);
    let reduced = reduced_cohomology_basis(&t, FieldSpec::Rationals);
    for name in ["trefoil.gauss", "kishino.gauss"] {
        let base = code(name);
        let count = counting_invariant(&base, &t).map_err(err)?;
        for r1 in [true, false] {
            let basis = if r1 { &reduced } else { &full };
            let before: Vec<_> = basis.iter().map(|p| yb_invariant(&base, &t, p)).collect::<Result<_, _>>().map_err(err)?;
            for _ in 0..10 {
                let mv = if r1 { random_r1(&base, &mut rng) } else { random_r2(&base, &mut rng) };
                let moved = insert_r_move(&base, &mv).map_err(err)?;
                ensure(counting_invariant(&moved, &t).map_err(err)? == count, format!("{name}: {mv:?} changed the count"))?;
                for (p, b) in basis.iter().zip(&before) {
                    ensure(&yb_invariant(&moved, &t, p).map_err(err)? == b, format!("{name}: {mv:?} changed phi"))?;
                }
            }
        }
    }
    Ok(())
}

fn strategies_agree(all: &[Biquandle]) -> std::result::Result<(), String> {
    let tref = code("trefoil.gauss");
    for t in all {
        let fast: BTreeSet<_> = enumerate_colorings(&tref, t).map_err(err)?.into_iter().collect();
        let slow: BTreeSet<_> = enumerate_colorings_oracle(&tref, t).into_iter().collect();
        ensure(fast == slow, "coloring enumerators disagree")?;
    }
    Ok(())
}

fn order_two_brute_force() -> std::result::Result<(), String> {
    let mut oracle = BTreeSet::new();
    for bits in 0u32..65536 {
        let mut tables: Tables = std::array::from_fn(|_| vec![0; 4]);
        for (bit, slot) in tables.iter_mut().flat_map(|t| t.iter_mut()).enumerate() {
            *slot = ((bits >> bit) & 1) as usize + 1;
        }
        if validate_biquandle(2, &tables).map_err(err)?.ok {
            oracle.insert(tables);
        }
    }
    let found: BTreeSet<Tables> = enumerate_biquandles(2).map_err(err)?.iter().map(|b| b.tables().clone()).collect();
    ensure(found == oracle, format!("search {} vs brute force {}", found.len(), oracle.len()))
}

fn property_suite() -> Check {
    let start = Instant::now();
    let all = small_biquandles()?;
    let labelled: [(&str, std::result::Result<(), String>); 5] = [
        ("a", delta_squared(&all)),
        ("b", coboundary_blindness()),
        ("c", move_invariance()),
        ("d", strategies_agree(&all)),
        ("e", order_two_brute_force()),
    ];
    for (tag, r) in labelled {
        r.map_err(|e| format!("({tag}) {e}"))?;
    }
    within(start.elapsed(), Duration::from_secs(600))?;
    Ok(format!("(a)-(e) hold over {} biquandles of order <= 3", all.len()))
}

fn alexander_validity() -> Check {
    let start = Instant::now();
    let mut checked = 0;
    for n in 1..=8usize {
        for s in 0..n as i64 {
            for t in 0..n as i64 {
                match alexander_biquandle(n, s, t) {
                    Ok(b) => {
                        ensure(b.validate().ok, format!("n={n} s={s} t={t} invalid"))?;
                        checked += 1;
                    }
                    Err(ybq::Error::NotInvertible { .. }) => {}
                    Err(e) => return Err(e.to_string()),
                }
            }
        }
    }
    within(start.elapsed(), Duration::from_secs(60))?;
    Ok(format!("{checked} unit pairs valid"))
}

fn corpus() -> Vec<Vec<String>> {
    let d = data_path;
    let bq = d("kishino_T.bq");
    let mut runs: Vec<Vec<&str>> = vec![
        vec!["validate", &bq],
        vec!["cohomology", "-b", &bq, "--full"],
        vec!["alexander", "5", "2", "3"],
        vec!["enumerate", "3"],
    ];
    let bad = d("kishino_T_uncorrected.bq");
    runs.push(vec!["validate", &bad]);
    let cyc: Vec<String> = ["phi1.cyc", "phi2.cyc", "phi1_uncorrected.cyc"].iter().map(|c| d(c)).collect();
    for c in &cyc {
        runs.push(vec!["cohomology", "-b", &bq, "--classify", c]);
    }
    let codes: Vec<String> = ["unknot.gauss", "trefoil.gauss", "kishino.gauss", "conway.gauss", "link2.gauss"]
        .iter()
        .map(|c| d(c))
        .collect();
    for c in &codes {
        runs.push(vec!["colorings", "-c", c, "-b", &bq, "--show-presentation"]);
        runs.push(vec!["suite", "-c", c, "-b", &bq, "--porcelain", "--show-basis"]);
        runs.push(vec!["suite", "-c", c, "-b", &bq, "--field", "Zp:3"]);
        for phi in &cyc {
            runs.push(vec!["invariant", "-c", c, "-b", &bq, "--cocycle", phi]);
        }
    }
    runs.into_iter().map(|r| r.into_iter().map(String::from).collect()).collect()
}

fn run_corpus(jobs: &str) -> std::result::Result<Vec<u8>, String> {
    let mut all = Vec::new();
    for args in corpus() {
        let out = Command::new(env!("CARGO_BIN_EXE_ybq"))
            .arg("--jobs")
            .arg(jobs)
            .args(&args)
            .output()
            .map_err(err)?;
        all.extend(format!("$ {}\nexit {:?}\n", args.join(" "), out.status.code()).into_bytes());
        all.extend(out.stdout);
        all.extend(out.stderr);
    }
    Ok(all)
}

fn determinism() -> Check {
    let first = run_corpus("1")?;
    ensure(first == run_corpus("1")?, "two runs with --jobs 1 differ")?;
    for jobs in ["4", "4"] {
        ensure(first == run_corpus(jobs)?, format!("--jobs {jobs} output differs"))?;
    }
    Ok(format!("{} commands, {} bytes identical across runs and job counts", corpus().len(), first.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 8] = [
        ("Kishino invariants", kishino_oracle),
        ("Kishino reduced cohomology", kishino_reduced),
        ("unknot", unknot_oracle),
        ("Conway presentation", conway_presentation),
        ("zero cocycle", zero_cocycle_law),
        ("property suite", property_suite),
        ("Alexander validity", alexander_validity),
        ("CLI determinism", determinism),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        match result {
            Ok(msg) => println!("PASS criterion {}: {name}: {msg} ({elapsed:.2?})", k + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {msg} ({elapsed:.2?})", k + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
