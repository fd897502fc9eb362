//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line for
//! each, and exits nonzero if any failed or overran its time limit.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use einl::eicat::{underlying_quiver, CategoryInstance, CategoryKind, FiniteGroupTable};
use einl::exactalg::{QSubspace, Rationals};
use einl::kcmod::{builtin_module, fg_verdict, free_module, torsion, BUILTIN_MODULES};
use einl::orbitlab::{
    check_bijectivity, check_transitivity, mu_map, mu_prime_map, orbits, theta_census,
};
use einl::stabcheck::{
    averaging_suite, chain_report, e_idempotent, end_basis, hom_space, nu_preserves_hom, NuMap,
};
use einl::kcmod::GradedSubmodule;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

fn fi(top: usize) -> CategoryInstance {
    CategoryInstance::fi(top)
}

fn fi_c2(top: usize) -> CategoryInstance {
    CategoryInstance::fi_gamma(FiniteGroupTable::cyclic(2).unwrap(), top)
}

fn vi(q: u32, top: usize) -> CategoryInstance {
    CategoryInstance::vi(q, top).unwrap()
}

fn vic(q: u32, top: usize) -> CategoryInstance {
    CategoryInstance::vic(q, top).unwrap()
}

/// The five instances of the transitivity criterion.
fn condition_instances() -> Vec<CategoryInstance> {
    vec![fi(5), fi_c2(4), vi(2, 4), vi(3, 3), vic(2, 4)]
}

fn transitivity() -> Outcome {
    let mut pairs = 0;
    for cat in condition_instances() {
        let r = check_transitivity(&cat, cat.max_object()).map_err(e)?;
        ensure!(r.passed, "{} fails transitivity", cat.descriptor());
        ensure!(
            r.full.iter().all(|p| p.transitive),
            "{}: some C(i,j) is not a single orbit",
            cat.descriptor()
        );
        pairs += r.full.len();
    }
    Ok(format!("{pairs} pairs (i,j) transitive across 5 instances"))
}

fn bijectivity() -> Outcome {
    let mut cells = 0;
    for (cat, is) in [(fi(6), vec![1, 2]), (fi_c2(5), vec![1, 2]), (vi(2, 4), vec![1])] {
        let top = cat.max_object();
        for i in is {
            let r = check_bijectivity(&cat, i, top - 1).map_err(e)?;
            for c in r.cells.iter().filter(|c| c.j >= 2 * i) {
                ensure!(
                    c.mu_bijective && c.m_injective,
                    "{}: μ_{{{i},{}}} not bijective",
                    cat.descriptor(),
                    c.j
                );
                cells += 1;
            }
        }
    }
    let cat = vic(2, 4);
    let r = check_bijectivity(&cat, 1, 3).map_err(e)?;
    for c in r.cells.iter().filter(|c| c.j >= 3) {
        ensure!(c.mu_prime_surjective, "VIC: μ′_{{1,{}}} not surjective", c.j);
        cells += 1;
    }
    Ok(format!(
        "{cells} cells; VIC q=2 observed onset {:?}, μ′ surjective from {:?}",
        r.onset, r.mu_prime_surjective_onset
    ))
}

struct OrbitCase {
    cat: CategoryInstance,
    i: usize,
    js: std::ops::RangeInclusive<usize>,
    expected: usize,
    oracle: fn(usize, usize) -> usize,
}

fn orbit_cases() -> Vec<OrbitCase> {
    vec![
        OrbitCase { cat: fi(5), i: 1, js: 2..=5, expected: 2, oracle: |i, j| common::fi_gamma_orbit_count(1, i, j) },
        OrbitCase { cat: fi(5), i: 2, js: 4..=5, expected: 7, oracle: |i, j| common::fi_gamma_orbit_count(1, i, j) },
        OrbitCase { cat: fi_c2(4), i: 1, js: 2..=4, expected: 3, oracle: |i, j| common::fi_gamma_orbit_count(2, i, j) },
        OrbitCase { cat: vi(2, 4), i: 1, js: 2..=4, expected: 2, oracle: |i, j| common::vi_orbit_count(2, i, j) },
    ]
}

fn orbit_counts() -> Outcome {
    let mut checked = 0;
    for case in orbit_cases() {
        let cat = &case.cat;
        for j in case.js.clone() {
            let i = case.i;
            let lib = orbits(cat, i, j).map_err(e)?.len();
            let brute = (case.oracle)(i, j);
            ensure!(
                lib == case.expected && brute == case.expected,
                "{} ({i},{j}): library {lib}, oracle {brute}, expected {}",
                cat.descriptor(),
                case.expected
            );
            let census = theta_census(cat, i, j).map_err(e)?;
            ensure!(census.classes_match_orbits, "{} ({i},{j}): θ classes differ from orbits", cat.descriptor());
            if j >= 2 * i {
                ensure!(census.surjective, "{} ({i},{j}): θ not surjective", cat.descriptor());
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} (i,j) cells agree with the brute-force oracle and the θ census"))
}

fn double_cosets() -> Outcome {
    let mut cells = 0;
    for cat in condition_instances() {
        let top = cat.max_object();
        for j in 1..top {
            for i in 0..j {
                let mu = mu_map(&cat, i, j).map_err(e)?;
                let prime = mu_prime_map(&cat, i, j).map_err(e)?;
                ensure!(
                    (mu.injective, mu.surjective, mu.source_orbits, mu.target_orbits)
                        == (prime.injective, prime.surjective, prime.source_cosets, prime.target_cosets),
                    "{} ({i},{j}): μ and μ′ verdicts differ",
                    cat.descriptor()
                );
                cells += 1;
            }
        }
    }
    Ok(format!("{cells} cells with matching μ and μ′ verdicts"))
}

fn averaging() -> Outcome {
    let mut triples = 0;
    for case in orbit_cases() {
        let cat = Arc::new(case.cat);
        let m = free_module(&cat, case.i, cat.max_object()).map_err(e)?;
        for j in case.js {
            let r = averaging_suite(&m, j).map_err(e)?;
            ensure!(r.passed, "averaging fails at ({},{j})", case.i);
            triples += r.triples;
        }
    }
    Ok(format!("{triples} (H, O1, O2) triples, exact equality"))
}

fn end_stabilization() -> Outcome {
    let mut degrees = 0;
    for (cat, js) in [(fi(5), 2..=5), (vi(2, 4), 2..=4)] {
        let cat = Arc::new(cat);
        let m = free_module(&cat, 1, cat.max_object()).map_err(e)?;
        let full = GradedSubmodule::full(m.module());
        for j in js {
            let solve = hom_space(&m, &full, j, false).map_err(e)?;
            let count = orbits(&cat, 1, j).map_err(e)?.len();
            let basis = end_basis(&m, j, false).map_err(e)?;
            ensure!(
                solve.dim == 2 && count == 2 && basis.len() == 2,
                "{} j={j}: solve {}, orbits {count}, f_O {}",
                cat.descriptor(),
                solve.dim,
                basis.len()
            );
            let n = solve.target_dim * solve.source_dim;
            let f_o = QSubspace::span(Rationals, n, &flat(&basis.maps)).map_err(e)?;
            let solved = solve.flat_span().map_err(e)?;
            ensure!(
                f_o.contains_subspace(&solved).map_err(e)? && solved.contains_subspace(&f_o).map_err(e)?,
                "{} j={j}: f_O span and intertwiner span differ",
                cat.descriptor()
            );
            let idem = e_idempotent(&m, j).map_err(e)?;
            ensure!(
                idem.matrix.mul(&idem.matrix).map_err(e)? == idem.matrix && idem.trace == count.to_string(),
                "{} j={j}: e not idempotent or trace {} ≠ {count}",
                cat.descriptor(),
                idem.trace
            );
            degrees += 1;
        }
    }
    Ok(format!("dim End(M(1)_j) = 2 on {degrees} degrees, both ways"))
}

fn flat(maps: &[einl::exactalg::QMatrix]) -> Vec<Vec<einl::exactalg::Rational>> {
    maps.iter().map(|m| m.entries().to_vec()).collect()
}

fn nu_consistency() -> Outcome {
    let mut checked = 0;
    for cat in [fi(5), vi(2, 4)] {
        let cat = Arc::new(cat);
        let top = cat.max_object();
        let x = builtin_module("sum-zero", &cat, 1, top).map_err(e)?;
        let m = x.free.clone().expect("sum-zero lies in M(1)");
        for j in 2..top {
            let nu = NuMap::new(&m, j, false).map_err(e)?;
            for f in &nu.from.maps {
                let a = nu.by_transport(f).map_err(e)?;
                let b = nu.by_formula(m.module(), f).map_err(e)?;
                ensure!(a == b, "{} j={j}: transport and value formula disagree", cat.descriptor());
                checked += 1;
            }
            ensure!(nu.is_bijective().map_err(e)?, "{} j={j}: ν not bijective", cat.descriptor());
            let hom = nu_preserves_hom(&nu, &x.submodule).map_err(e)?;
            ensure!(
                hom.preserved && hom.injective,
                "{} j={j}: ν does not restrict to Hom(M(1)_j, X_j)",
                cat.descriptor()
            );
        }
    }
    Ok(format!("{checked} basis maps agree under both constructions"))
}

fn chain_certificate() -> Outcome {
    let cat = Arc::new(fi(5));
    let x = builtin_module("sum-zero", &cat, 1, 5).map_err(e)?;
    let m = x.free.clone().expect("sum-zero lies in M(1)");
    let r = chain_report(&m, &x.submodule, 2, false).map_err(e)?;
    ensure!(r.bound == 2, "dim F_2(M(1)) = {}", r.bound);
    for d in &r.degrees {
        ensure!(d.dim_f_x == 1 && d.dim_f_x <= r.bound, "dim F_{}(X) = {}", d.j, d.dim_f_x);
        let pair = d.maschke.iter().find(|p| p.lower == "0").ok_or("no (0, X_j) pair")?;
        ensure!(pair.strict && pair.dim_upper > 0, "0 ⊊ X_{} not strict", d.j);
    }
    ensure!(r.degrees.len() == 4, "chain covers {} degrees", r.degrees.len());
    for s in &r.steps {
        ensure!(
            s.top_injective && s.square_commutes && s.bottom_bijective && s.top_lands_in_x,
            "step {}: {s:?}",
            s.j
        );
    }
    Ok(format!("dims {:?} ≤ {} on [2,5]", r.degrees.iter().map(|d| d.dim_f_x).collect::<Vec<_>>(), r.bound))
}

fn fg_and_torsion() -> Outcome {
    let top = 5;
    let cat = Arc::new(fi(top));
    let sum_zero = builtin_module("sum-zero", &cat, 1, top).map_err(e)?;
    let fg = fg_verdict(&sum_zero.submodule).map_err(e)?;
    ensure!(fg.generator_degrees == vec![2], "sum-zero generator degrees {:?}", fg.generator_degrees);
    ensure!(
        fg.flags.iter().filter(|f| f.j >= 2).all(|f| f.surjective) && fg.flags.len() == top,
        "ρ_j(sum-zero) not surjective on [2, J-1]"
    );

    let free = builtin_module("free", &cat, 1, top).map_err(e)?;
    let t = torsion(&free.submodule).map_err(e)?;
    ensure!(t.dims.iter().all(|&d| d == 0), "torsion(M(1)) = {:?}", t.dims);

    let atom = builtin_module("atom", &cat, 1, top).map_err(e)?;
    let t = torsion(&atom.submodule).map_err(e)?;
    ensure!(
        t.dims[..] == atom.submodule.dims()[..top],
        "torsion(atom) = {:?}, atom = {:?}",
        t.dims,
        atom.submodule.dims()
    );

    let mut ceilings = Vec::new();
    for cat in [Arc::new(fi(top)), Arc::new(fi_c2(4)), Arc::new(vi(2, 4))] {
        for &name in BUILTIN_MODULES {
            let spec = builtin_module(name, &cat, 1, cat.max_object()).map_err(e)?;
            let fg = fg_verdict(&spec.submodule).map_err(e)?;
            let t = torsion(&spec.submodule).map_err(e)?;
            let ceiling = fg.generator_degrees.iter().max().copied().unwrap_or(0);
            ensure!(fg.window_start.is_some(), "{name} on {}: no trailing window", cat.descriptor());
            ensure!(
                t.dims.iter().enumerate().all(|(j, &d)| j <= ceiling || d == 0),
                "{name} on {}: torsion {:?} beyond ceiling {ceiling}",
                cat.descriptor(),
                t.dims
            );
            ceilings.push(format!("{name}:{ceiling}"));
        }
    }
    Ok(format!("sum-zero generated in degree 2; ceilings {}", ceilings[..BUILTIN_MODULES.len()].join(" ")))
}

fn structural() -> Outcome {
    // EI property and inverses in C(i,i)
    for cat in [fi(3), fi_c2(3), vi(2, 3), vic(2, 3)] {
        for i in 0..=cat.max_object() {
            for g in cat.group(i).map_err(e)?.iter() {
                ensure!(cat.inverse(g).map_err(e)?.is_some(), "{}: no inverse in C({i},{i})", cat.descriptor());
            }
            for j in 0..i {
                ensure!(cat.hom_set(i, j).map_err(e)?.is_empty(), "{}: C({i},{j}) nonempty", cat.descriptor());
            }
        }
    }
    // quiver
    for cat in [fi(4), fi_c2(4), vi(2, 4), vic(2, 3)] {
        let quiver = underlying_quiver(&cat, cat.max_object()).map_err(e)?;
        ensure!(quiver.is_a_infinity_path(), "{}: quiver {:?}", cat.descriptor(), quiver.arrows);
    }
    // associativity on every composable triple
    let mut triples = 0u64;
    for cat in [fi(3), fi_c2(3), vi(2, 2), vic(2, 2)] {
        let top = cat.max_object();
        for a in 0..=top {
            for b in a..=top {
                for c in b..=top {
                    for d in c..=top {
                        let (x, y, z) = (
                            cat.hom_set(a, b).map_err(e)?,
                            cat.hom_set(b, c).map_err(e)?,
                            cat.hom_set(c, d).map_err(e)?,
                        );
                        for f in x.iter() {
                            for g in y.iter() {
                                let gf = cat.compose(g, f).map_err(e)?;
                                for h in z.iter() {
                                    let left = cat.compose(&cat.compose(h, g).map_err(e)?, f).map_err(e)?;
                                    ensure!(left == cat.compose(h, &gf).map_err(e)?, "{}: not associative", cat.descriptor());
                                    triples += 1;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    // counts
    for cat in [fi(5), fi_c2(4), vi(2, 4), vi(3, 3), vic(2, 3)] {
        for j in 0..=cat.max_object() {
            for i in 0..=j {
                let expected = match (cat.kind(), cat.gamma().map(|g| g.order())) {
                    (CategoryKind::FiGamma, Some(n)) => common::fi_gamma_count(n, i, j),
                    (CategoryKind::Vi, _) => common::vi_count(cat.field().unwrap().modulus(), i, j),
                    _ => common::vic_count(cat.field().unwrap().modulus(), i, j),
                };
                let enumerated = cat.hom_set(i, j).map_err(e)?.len() as u128;
                ensure!(
                    enumerated == expected && cat.hom_set_size(i, j) == expected,
                    "{} |C({i},{j})|: enumerated {enumerated}, closed form {expected}",
                    cat.descriptor()
                );
            }
        }
    }
    let runs = determinism()?;
    Ok(format!("{triples} associativity triples; {runs} byte-identical report pairs"))
}

fn determinism() -> Result<usize, String> {
    let bin = env!("CARGO_BIN_EXE_einl");
    let configs: &[&[&str]] = &[
        &["check-conditions", "--max-object", "5", "--i", "1,2"],
        &["orbits", "--category", "vi", "--max-object", "4", "--i", "1,2"],
        &["orbits", "--gamma", "cyclic:2", "--max-object", "4", "--i", "0,1,2"],
        &["stabilize", "--max-object", "5"],
        &["fg-torsion", "--module", "diagonal", "--max-object", "4"],
    ];
    let run = |args: &[&str], jobs: &str| -> Result<Vec<u8>, String> {
        let out = Command::new(bin)
            .args(args)
            .args(["--jobs", jobs])
            .env_remove("EINL_GUARD")
            .output()
            .map_err(e)?;
        ensure!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
        Ok(out.stdout)
    };
    for args in configs {
        let a = run(args, "1")?;
        ensure!(a == run(args, "1")?, "{args:?}: two runs differ");
        ensure!(a == run(args, "4")?, "{args:?}: --jobs 1 and --jobs 4 differ");
    }
    Ok(configs.len() * 2)
}

fn main() {
    let criteria: [(&str, Option<u64>, fn() -> Outcome); 10] = [
        ("1 transitivity", Some(120), transitivity),
        ("2 bijectivity thresholds", Some(300), bijectivity),
        ("3 orbit counts", None, orbit_counts),
        ("4 double-coset equivalence", None, double_cosets),
        ("5 averaging lemma", None, averaging),
        ("6 End/Hom stabilization", None, end_stabilization),
        ("7 ν consistency", None, nu_consistency),
        ("8 chain certificate", Some(60), chain_certificate),
        ("9 finite generation and torsion", None, fg_and_torsion),
        ("10 structural suites", None, structural),
    ];
    let mut failed = 0;
    for (name, limit, check) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panic".into()))
        });
        let elapsed = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(_), Some(secs)) if elapsed > Duration::from_secs(secs) => {
                Err(format!("took {:.1}s, limit {secs}s", elapsed.as_secs_f64()))
            }
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("PASS  criterion {name} ({:.2}s): {detail}", elapsed.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name} ({:.2}s): {why}", elapsed.as_secs_f64());
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
