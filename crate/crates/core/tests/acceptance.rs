//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! Every expected value here is exact. Oracles are independent of the code
//! paths they check: partition arithmetic is compared against brute-force
//! nullspace dimensions, closed-form dimension counts against the actual
//! kernel systems, certificates against direct matrix identities.

use std::sync::Arc;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use liecheck_core::catalog;
use liecheck_core::covariants::{
    annihilates_invariants, apply_phi, coefficient_system, coefficient_vector, graded_kernel,
    kernel_module_rank, random_polymap, DecompositionStatus, DixmierSolver, MapKind, PolyMap,
};
use liecheck_core::fitting::{
    centralizer_dim_sl, image_closure_dim, inequality_case1, inequality_case2,
    kappa_vanishing_check, partitions_of, strata_check_direct, DirectStratum, MomentData,
};
use liecheck_core::invariants::check_three_wonderful;
use liecheck_core::lie::Representation;
use liecheck_core::linalg::verify_certificate;
use liecheck_core::poly::{monomial_count, Polynomial};
use liecheck_core::qnum::{qi, Q};
use liecheck_core::report::Verdict;
use liecheck_core::suites::{coadjoint_invariants, run_suite, SuiteConfig, SuiteKind};
use num_traits::Zero;

fn criterion(n: u32, title: &str, body: impl FnOnce() -> Result<String, String>) {
    match body() {
        Ok(detail) => println!("[criterion {n:02}] PASS  {title} — {detail}"),
        Err(msg) => {
            println!("[criterion {n:02}] FAIL  {title} — {msg}");
            panic!("criterion {n} failed: {msg}");
        }
    }
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

#[test]
fn criterion_01_dixmier_roundtrip() {
    criterion(1, "decomposition roundtrip, exact", || {
        let start = Instant::now();
        let mut rng = ChaCha20Rng::seed_from_u64(101);
        let mut total = 0usize;
        for name in ["sl2", "sl2-ltimes-sl2"] {
            let entry = catalog::catalog(name).map_err(|e| e.to_string())?;
            let coadj = Representation::coadjoint(entry.algebra.clone());
            let n = coadj.space_dim;
            let mut solver = DixmierSolver::new(coadj.clone());
            for _ in 0..20 {
                let f = random_polymap(&mut rng, n, n, 3);
                let x = apply_phi(&coadj, &f).map_err(|e| e.to_string())?;
                let result = solver.decompose(&x, 4).map_err(|e| e.to_string())?;
                ensure(result.found(), format!("{name}: decomposition not found"))?;
                let witness = result.witness.as_ref().unwrap();
                let back = apply_phi(&coadj, witness).map_err(|e| e.to_string())?;
                ensure(back == x, format!("{name}: re-application differs"))?;
                total += 1;
            }
        }
        let elapsed = start.elapsed();
        ensure(
            elapsed.as_secs() < 60,
            format!("runtime {elapsed:?} exceeds 60 s"),
        )?;
        Ok(format!("{total} roundtrips exact in {elapsed:.2?}"))
    });
}

#[test]
fn criterion_02_forward_annihilation() {
    criterion(2, "image fields kill all basis invariants, symbolically", || {
        let mut rng = ChaCha20Rng::seed_from_u64(102);
        let mut checked = 0usize;
        for name in ["sl2", "sl2-ltimes-sl2"] {
            let entry = catalog::catalog(name).map_err(|e| e.to_string())?;
            let coadj = Representation::coadjoint(entry.algebra.clone());
            let invs = coadjoint_invariants(&entry).map_err(|e| e.to_string())?;
            let n = coadj.space_dim;
            for _ in 0..20 {
                let f = random_polymap(&mut rng, n, n, 3);
                let x = apply_phi(&coadj, &f).map_err(|e| e.to_string())?;
                let ok = annihilates_invariants(&x, &invs.generators).map_err(|e| e.to_string())?;
                ensure(ok, format!("{name}: image field does not kill an invariant"))?;
                checked += 1;
            }
        }
        Ok(format!("{checked} fields, every basis invariant killed exactly"))
    });
}

#[test]
fn criterion_03_graded_kernel_dimensions() {
    criterion(3, "graded kernel dimensions match the free-module counts", || {
        // One degree-1 generator over 3 variables.
        let (sl2, _) = catalog::sl2();
        let adj = Representation::adjoint(Arc::new(sl2));
        let expect_sl2 = [1usize, 3, 6, 10];
        for (d, &expected) in (1..=4).zip(&expect_sl2) {
            let got = graded_kernel(MapKind::Phi, &adj, d).len();
            ensure(
                got == expected,
                format!("sl2 adjoint degree {d}: got {got}, expected {expected}"),
            )?;
            // Independent oracle: the closed-form monomial count.
            ensure(
                expected == monomial_count(3, d - 1),
                format!("stored count {expected} disagrees with the binomial oracle"),
            )?;
        }
        // Two degree-1 generators over 6 variables.
        let entry = catalog::catalog("sl2-ltimes-sl2").map_err(|e| e.to_string())?;
        let coadj = Representation::coadjoint(entry.algebra.clone());
        let expect_takiff = [2usize, 12, 42, 112];
        for (d, &expected) in (1..=4).zip(&expect_takiff) {
            let got = graded_kernel(MapKind::Phi, &coadj, d).len();
            ensure(
                got == expected,
                format!("double coadjoint degree {d}: got {got}, expected {expected}"),
            )?;
            ensure(
                expected == 2 * monomial_count(6, d - 1),
                format!("stored count {expected} disagrees with the binomial oracle"),
            )?;
        }
        Ok("sl2 adjoint 1,3,6,10; semidirect square 2,12,42,112".into())
    });
}

#[test]
fn criterion_04_takiff_strata() {
    criterion(4, "rank-drop strata of the 6-dimensional square", || {
        let entry = catalog::catalog("sl2-ltimes-sl2").map_err(|e| e.to_string())?;
        let coadj = Representation::coadjoint(entry.algebra.clone());
        let invs = coadjoint_invariants(&entry).map_err(|e| e.to_string())?;
        let generators: Vec<PolyMap> = invs.generators.iter().map(PolyMap::gradient).collect();
        let data =
            MomentData::new(coadj.clone(), generators.clone()).map_err(|e| e.to_string())?;
        let m = kernel_module_rank(&data.rep);
        ensure(m == 2, format!("kernel rank {m}, expected 2"))?;
        let mut rep1 = vec![Q::zero(); 6];
        rep1[1] = qi(1);
        let strata = vec![
            DirectStratum {
                label: "second-dual-block-zero".into(),
                representative: rep1,
                level: 1,
                dim: 3,
            },
            DirectStratum {
                label: "origin".into(),
                representative: vec![Q::zero(); 6],
                level: 2,
                dim: 0,
            },
        ];
        let out = strata_check_direct(&generators, &strata, 6, m, 2).map_err(|e| e.to_string())?;
        ensure(out.f_d_satisfied, "dimension bound fails".to_string())?;
        ensure(
            out.strata[0].dim == 3 && out.strata[1].dim == 0,
            "stratum dimensions differ from 3 and 0".to_string(),
        )?;
        ensure(
            out.strata[0].span_at_representative == 1 && out.strata[1].span_at_representative == 0,
            "span validation failed".to_string(),
        )?;
        Ok("X1 dim 3, X2 dim 0, height-2 condition satisfied".into())
    });
}

#[test]
fn criterion_05_partition_inequalities() {
    criterion(5, "partition inequalities by full enumeration", || {
        let start = Instant::now();
        for two_n in [4u32, 6, 8] {
            for p in partitions_of(two_n) {
                if p.is_regular() {
                    continue;
                }
                let out = inequality_case1(&p).map_err(|e| e.to_string())?;
                ensure(
                    out.holds,
                    format!("case-1 inequality fails at {} of {two_n}", p.label()),
                )?;
                if p.is_subregular() {
                    ensure(
                        out.lhs.is_zero(),
                        format!(
                            "subregular {} of {two_n} gives {}, expected 0",
                            p.label(),
                            out.lhs
                        ),
                    )?;
                }
            }
        }
        for n in [5u32, 7, 9] {
            for p in partitions_of(n) {
                if p.is_regular() {
                    continue;
                }
                let out = inequality_case2(&p).map_err(|e| e.to_string())?;
                ensure(
                    out.holds == !p.is_subregular(),
                    format!(
                        "case-2 at {} of {n}: lhs {} ({})",
                        p.label(),
                        out.lhs,
                        if out.holds { "holds" } else { "fails" }
                    ),
                )?;
                if p.is_subregular() {
                    ensure(
                        out.lhs < Q::zero(),
                        format!("subregular {} of {n} not negative: {}", p.label(), out.lhs),
                    )?;
                }
            }
        }
        let elapsed = start.elapsed();
        ensure(elapsed.as_secs() < 5, format!("runtime {elapsed:?} exceeds 5 s"))?;
        Ok(format!(
            "sizes 4,6,8 nonnegative with subregular zero; 5,7,9 negative exactly on subregular ({elapsed:.2?})"
        ))
    });
}

#[test]
fn criterion_06_centralizer_oracle() {
    criterion(6, "partition centralizer formula vs brute-force nullspace", || {
        let mut cases = 0usize;
        for n in 2..=6usize {
            let (g, real) = if n == 2 { catalog::sl2() } else { catalog::sl(n) };
            let rep = Representation::adjoint(Arc::new(g));
            for part in partitions_of(n as u32) {
                let jordan = catalog::jordan_nilpotent(part.parts(), n);
                let coords = real.coords_of(&jordan).map_err(|e| e.to_string())?;
                let stab = rep.stabilizer(&coords).map_err(|e| e.to_string())?;
                let formula = centralizer_dim_sl(&part);
                ensure(
                    stab.dim() == formula,
                    format!(
                        "partition {} of {n}: formula {formula}, nullspace {}",
                        part.label(),
                        stab.dim()
                    ),
                )?;
                cases += 1;
            }
        }
        Ok(format!("{cases} partitions of sizes 2..=6, formula equals nullspace"))
    });
}

#[test]
fn criterion_07_moment_variety_identities() {
    criterion(7, "variety generators vanish on the moment image; image dims", || {
        // Polynomial identity for the kernel generators of every catalog
        // entry with verified invariants.
        for name in [
            "sl2",
            "sl3",
            "gl2",
            "sp4",
            "sl2-ltimes-sl2",
            "sl3-ltimes-sl3",
            "gl2-ltimes-gl2",
            "sp4-ltimes-sp4",
        ] {
            let entry = catalog::catalog(name).map_err(|e| e.to_string())?;
            let coadj = Representation::coadjoint(entry.algebra.clone());
            let invs = coadjoint_invariants(&entry).map_err(|e| e.to_string())?;
            let gens: Vec<PolyMap> = invs.generators.iter().map(PolyMap::gradient).collect();
            let data = MomentData::new(coadj, gens).map_err(|e| e.to_string())?;
            kappa_vanishing_check(&data).map_err(|e| format!("{name}: {e}"))?;
        }
        // Adjoint representation of the smallest algebra: the identity map
        // generates the kernel.
        let (sl2, _) = catalog::sl2();
        let adj = Representation::adjoint(Arc::new(sl2));
        let data = MomentData::new(adj.clone(), vec![PolyMap::identity(3)])
            .map_err(|e| e.to_string())?;
        kappa_vanishing_check(&data).map_err(|e| e.to_string())?;
        // Image dimensions: formula against exact Jacobian rank.
        let mut rng = ChaCha20Rng::seed_from_u64(107);
        let d1 = image_closure_dim(&adj, &mut rng).map_err(|e| e.to_string())?;
        ensure(d1 == 5, format!("3-dimensional adjoint image dim {d1}, expected 5"))?;
        let takiff = catalog::catalog("sl2-ltimes-sl2").map_err(|e| e.to_string())?;
        let co = Representation::coadjoint(takiff.algebra.clone());
        let d2 = image_closure_dim(&co, &mut rng).map_err(|e| e.to_string())?;
        ensure(d2 == 10, format!("square coadjoint image dim {d2}, expected 10"))?;
        Ok("identities exact for 8 catalog cases; image dims 5 and 10".into())
    });
}

#[test]
fn criterion_08_three_wonderful_certification() {
    criterion(8, "wonderful certification and index doubling", || {
        let mut rng = ChaCha20Rng::seed_from_u64(108);
        let mut doubling = Vec::new();
        for (base_name, double_name) in [
            ("sl2", "sl2-ltimes-sl2"),
            ("sl3", "sl3-ltimes-sl3"),
            ("sp4", "sp4-ltimes-sp4"),
        ] {
            for name in [base_name, double_name] {
                let entry = catalog::catalog(name).map_err(|e| e.to_string())?;
                let invs = coadjoint_invariants(&entry).map_err(|e| e.to_string())?;
                let strata = entry
                    .coadjoint_strata
                    .as_ref()
                    .ok_or_else(|| format!("{name}: no strata"))?;
                let report =
                    check_three_wonderful(&invs, strata, &mut rng).map_err(|e| e.to_string())?;
                ensure(
                    report.asserted(),
                    format!("{name}: wonderful check not asserted: {report:?}"),
                )?;
            }
            let base = catalog::catalog(base_name).map_err(|e| e.to_string())?;
            let double = catalog::catalog(double_name).map_err(|e| e.to_string())?;
            let bi = base.algebra.index();
            let di = double.algebra.index();
            ensure(
                di == 2 * bi,
                format!("{double_name}: index {di} is not twice {bi}"),
            )?;
            doubling.push(format!("{base_name}: {bi} -> {di}"));
        }
        Ok(format!(
            "six certificates asserted; index doubling exact ({})",
            doubling.join(", ")
        ))
    });
}

#[test]
fn criterion_09_euler_infeasibility_certificate() {
    criterion(9, "Euler field yields a verified infeasibility certificate", || {
        let (sl2, _) = catalog::sl2();
        let adj = Representation::adjoint(Arc::new(sl2));
        let euler = PolyMap::identity(3);
        let mut solver = DixmierSolver::new(adj.clone());
        let result = solver.decompose(&euler, 4).map_err(|e| e.to_string())?;
        ensure(
            result.status == DecompositionStatus::Infeasible,
            format!("status {:?}, expected infeasible", result.status),
        )?;
        let cert = result.certificate.as_ref().ok_or("no certificate")?;
        let a = coefficient_system(MapKind::Phi, &adj, cert.output_degree - 1);
        let b = coefficient_vector(&euler, cert.output_degree).map_err(|e| e.to_string())?;
        ensure(
            verify_certificate(&a, &b, &cert.row),
            "certificate failed exact verification".to_string(),
        )?;
        // The Euler field does not annihilate the quadratic invariant
        // h^2 + ef of the adjoint coordinates.
        let h = Polynomial::var(3, 1);
        let e = Polynomial::var(3, 0);
        let f = Polynomial::var(3, 2);
        let casimir = h
            .pow(2)
            .add(&e.mul(&f).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        let annihilates = annihilates_invariants(&euler, std::slice::from_ref(&casimir))
            .map_err(|e| e.to_string())?;
        ensure(!annihilates, "Euler field unexpectedly kills the invariant".to_string())?;
        Ok("certificate verified: y.A = 0 and y.b != 0 exactly; invariant not killed".into())
    });
}

#[test]
fn criterion_10_report_determinism() {
    criterion(10, "byte-identical reports for identical configurations", || {
        for (algebra, suite) in [
            ("sl2", SuiteKind::Dixmier),
            ("sl2", SuiteKind::Wonderful),
            ("sl2-ltimes-sl2", SuiteKind::Fitting),
            ("sl4-pair", SuiteKind::SymmetricPair),
        ] {
            let mut cfg = SuiteConfig::new(algebra, suite);
            cfg.seed = 2024;
            let a = run_suite(&cfg)
                .map_err(|e| e.to_string())?
                .to_json_bytes()
                .map_err(|e| e.to_string())?;
            let b = run_suite(&cfg)
                .map_err(|e| e.to_string())?
                .to_json_bytes()
                .map_err(|e| e.to_string())?;
            ensure(
                a == b,
                format!("{algebra}/{} reports differ between runs", suite.name()),
            )?;
            // Sanity: the report parses and carries the seed.
            let parsed: serde_json::Value =
                serde_json::from_slice(&a).map_err(|e| e.to_string())?;
            ensure(parsed["seed"] == 2024, "seed not recorded".to_string())?;
            ensure(
                parsed["overall"] != serde_json::json!(null),
                "overall verdict missing".to_string(),
            )?;
        }
        // A failing suite is also deterministic.
        let cfg = SuiteConfig::new("sl5-pair", SuiteKind::Fitting);
        let r1 = run_suite(&cfg).map_err(|e| e.to_string())?;
        let r2 = run_suite(&cfg).map_err(|e| e.to_string())?;
        ensure(r1.overall == Verdict::Fail, "expected a failing report".to_string())?;
        ensure(
            r1.to_json_bytes().map_err(|e| e.to_string())?
                == r2.to_json_bytes().map_err(|e| e.to_string())?,
            "failing reports differ".to_string(),
        )?;
        Ok("four passing configurations and one failing one, byte-identical".into())
    });
}
