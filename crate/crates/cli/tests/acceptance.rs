//! Ten end-to-end criteria, one PASS/FAIL line each. Exits nonzero if any
//! criterion fails or overruns its time limit.

use std::process::Command;
use std::time::{Duration, Instant};

use idempo::algebra::{
    classify_spectrum, counterexample_algebra, eigenvalue_set, examples, restrict_element,
    restrict_scalars, AlgebraElement, SigmaDescription, StructureTensor,
};
use idempo::fields::{
    poly_has_root, ExtensionField, Field, LaurentField, Polynomial, PrimeField, Rationals, Reals,
};
use idempo::solver::{
    genericity_probe, solve_exact_dim2, solve_exhaustive, solve_real, Perturbation,
    QuadraticSystem, SolveConfig, Verdict,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn ensure(cond: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(why())
    }
}

fn f(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn rational_counterexample() -> Check {
    let dir = tempfile::TempDir::new().map_err(|e| e.to_string())?;
    let file = dir.path().join("q.json");
    let bin = env!("CARGO_BIN_EXE_idempo");
    let gen = Command::new(bin)
        .args(["counterexample", "t^3 - 2", "--field", "Q", "--out"])
        .arg(&file)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(gen.status.success(), || format!("counterexample exited {:?}", gen.status.code()))?;
    let solve = Command::new(bin)
        .args(["solve", "--engine", "exact2"])
        .arg(&file)
        .output()
        .map_err(|e| e.to_string())?;
    let text = String::from_utf8_lossy(&solve.stdout);
    ensure(solve.status.code() == Some(1), || format!("solve exited {:?}", solve.status.code()))?;
    ensure(text.contains("provably none"), || format!("unexpected output: {text}"))?;

    let a = counterexample_algebra(&Rationals, &Polynomial::from_i64s(&Rationals, &[-2, 0, 0, 1]))
        .map_err(|e| e.to_string())?;
    let s = solve_exact_dim2(&a).map_err(|e| e.to_string())?;
    ensure(!s.has_nontrivial() && !s.infinite_family, || "nontrivial rational direction".into())?;
    let cubic: Vec<String> = s.cubic.iter().map(|c| c.to_string()).collect();
    Ok(format!("exit 1, cubic [{}] rootless", cubic.join(", ")))
}

fn f3_counterexample() -> Check {
    let f3 = f(3);
    let a = counterexample_algebra(&f3, &Polynomial::from_i64s(&f3, &[-1, -1, 0, 1]))
        .map_err(|e| e.to_string())?;
    let mut hits = 0;
    for x0 in 0..3u64 {
        for x1 in 0..3u64 {
            if x0 == 0 && x1 == 0 {
                continue;
            }
            let x = AlgebraElement::new(vec![x0, x1]);
            let vx = a.quadratic_operator(&x).map_err(|e| e.to_string())?;
            for lambda in 0..3u64 {
                if vx.coords().iter().zip(x.coords()).all(|(v, c)| *v == lambda * c % 3) {
                    hits += 1;
                }
            }
        }
    }
    ensure(hits == 0, || format!("{hits} eigenpairs"))?;
    let sols = solve_exhaustive(&QuadraticSystem::build(&a), &SolveConfig::default())
        .map_err(|e| e.to_string())?;
    ensure(sols.len() == 1 && sols[0].is_trivial(), || format!("{} solutions", sols.len()))?;
    Ok("8 vectors x 3 eigenvalues: none; only the trivial point".into())
}

fn real_property_run() -> Check {
    let r = Reals::default();
    let cfg = SolveConfig { max_restarts: 200, ..SolveConfig::default() };
    let mut worst: f64 = 0.0;
    for n in 2..=6 {
        let mut rng = ChaCha8Rng::seed_from_u64(1000 + n as u64);
        for trial in 0..100 {
            let a = StructureTensor::random(&r, n, true, &mut rng).map_err(|e| e.to_string())?;
            let s = solve_real(&a, &SolveConfig { seed: trial, ..cfg.clone() })
                .map_err(|e| format!("n={n} trial {trial}: {e}"))?;
            let x = AlgebraElement::new(s.x().to_vec());
            let vx = a.quadratic_operator(&x).map_err(|e| e.to_string())?;
            let res = vx
                .coords()
                .iter()
                .zip(x.coords())
                .map(|(v, c)| (v - s.lambda() * c).powi(2))
                .sum::<f64>()
                .sqrt();
            ensure(res <= 1e-8, || format!("n={n} trial {trial}: residual {res:e}"))?;
            worst = worst.max(res);
        }
    }
    Ok(format!("500/500 found, worst residual {worst:.1e}"))
}

fn bezout_bound() -> Check {
    let f5 = f(5);
    let cfg = SolveConfig { k_max: 4, ..SolveConfig::default() };
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut generic = 0;
    for trial in 0..50 {
        let a = StructureTensor::random(&f5, 2, false, &mut rng).map_err(|e| e.to_string())?;
        let report = genericity_probe(&QuadraticSystem::build(&a), &cfg).map_err(|e| e.to_string())?;
        ensure(report.counts.values().all(|&c| c >= 1), || format!("trial {trial}: missing trivial point"))?;
        if report.verdict == Verdict::LikelyGeneric {
            generic += 1;
            ensure(report.counts.values().all(|&c| c <= 4), || format!("trial {trial}: {:?}", report.counts))?;
        }
    }
    Ok(format!("{generic}/50 likely generic, all within 4"))
}

fn jacobian_is_minus_identity<F: Field>(s: &QuadraticSystem<F>) -> bool {
    let f = s.field();
    let n = s.n();
    let origin = vec![f.zero(); n];
    let (zero, minus_one) = (f.zero(), f.neg(&f.one()));
    s.affine_jacobian(&origin).iter().enumerate().all(|(j, row)| {
        row.iter()
            .enumerate()
            .all(|(i, c)| f.equals(c, if i == j { &minus_one } else { &zero }))
    })
}

fn jacobian_at_origin() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut checked = 0;
    for trial in 0..100 {
        let n = 1 + trial % 5;
        let q = StructureTensor::random(&Rationals, n, false, &mut rng).map_err(|e| e.to_string())?;
        let p = StructureTensor::random(&f(5), n, false, &mut rng).map_err(|e| e.to_string())?;
        let sq = QuadraticSystem::build(&q);
        let sp = QuadraticSystem::build(&p);
        let pq = sq
            .with_perturbation(Perturbation::random(&Rationals, n, &mut rng))
            .map_err(|e| e.to_string())?;
        let pp = sp
            .with_perturbation(Perturbation::random(&f(5), n, &mut rng))
            .map_err(|e| e.to_string())?;
        let all = jacobian_is_minus_identity(&sq)
            && jacobian_is_minus_identity(&sp)
            && jacobian_is_minus_identity(&pq)
            && jacobian_is_minus_identity(&pp);
        ensure(all, || format!("trial {trial} (n={n})"))?;
        checked += 4;
    }
    Ok(format!("{checked} systems exactly -I"))
}

fn spectrum_trichotomy() -> Check {
    let f5 = f(5);
    let cfg = SolveConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut seen = std::collections::BTreeMap::new();
    for trial in 0..200 {
        let a = StructureTensor::random(&f5, 2, false, &mut rng).map_err(|e| e.to_string())?;
        let mut sigma = eigenvalue_set(&a, &cfg).map_err(|e| e.to_string())?;
        sigma.sort();
        let kind = match sigma.as_slice() {
            [] => SigmaDescription::Empty,
            [0] => SigmaDescription::ZeroOnly,
            [1, 2, 3, 4] => SigmaDescription::AllNonzero,
            [0, 1, 2, 3, 4] => SigmaDescription::AllOfF,
            other => return Err(format!("trial {trial}: sigma = {other:?}")),
        };
        let report = classify_spectrum(&a, &cfg).map_err(|e| e.to_string())?;
        ensure(report.description == kind, || format!("trial {trial}: {:?} vs {kind:?}", report.description))?;
        *seen.entry(format!("{kind:?}")).or_insert(0) += 1;
    }
    Ok(format!("{seen:?}"))
}

fn nilpotent_reduction() -> Check {
    let q = Rationals;
    let mut out = Vec::new();
    for m in [3, 4, 5] {
        let a = examples::matrix_algebra(&q, m).map_err(|e| e.to_string())?;
        let n = examples::jordan_block(&q, m);
        let z = a.absolute_nilpotent_from_nilpotent(&n, m).map_err(|e| e.to_string())?;
        let s = m - m / 2;
        let expected = a.power(&n, s).map_err(|e| e.to_string())?;
        let zz = a.multiply(&z, &z).map_err(|e| e.to_string())?;
        ensure(!z.is_zero(&q) && zz.is_zero(&q) && z == expected, || format!("block {m}"))?;
        out.push(format!("r={m} s={s}"));
    }
    Ok(out.join(", "))
}

fn restriction() -> Check {
    let f9 = ExtensionField::galois(3, 2).map_err(|e| e.to_string())?;
    let a9 = examples::field_as_algebra(&f9).map_err(|e| e.to_string())?;
    let r9 = restrict_scalars(&a9).map_err(|e| e.to_string())?;
    let one9 = restrict_element(&f9, &AlgebraElement::new(vec![f9.one()]));
    ensure(r9.dim() == a9.dim() * f9.degree(), || "F9 dimension".into())?;
    ensure(r9.is_idempotent(&one9).map_err(|e| e.to_string())?, || "F9 unit".into())?;

    let r = Reals::default();
    let ci = ExtensionField::new(&r, Polynomial::from_i64s(&r, &[1, 0, 1])).map_err(|e| e.to_string())?;
    let ac = examples::field_as_algebra(&ci).map_err(|e| e.to_string())?;
    let rc = restrict_scalars(&ac).map_err(|e| e.to_string())?;
    let onec = restrict_element(&ci, &AlgebraElement::new(vec![ci.one()]));
    ensure(rc.dim() == ac.dim() * ci.degree(), || "C dimension".into())?;
    ensure(rc.is_idempotent(&onec).map_err(|e| e.to_string())?, || "C unit".into())?;
    ensure(rc == examples::complex_numbers(&r).map_err(|e| e.to_string())?, || "C table".into())?;
    Ok(format!("F9/F3: 1*2 = {}, C/R: 1*2 = {}", r9.dim(), rc.dim()))
}

fn witness_rootless<F: Field>(field: &F) -> Result<(), String> {
    let q = field.order().unwrap() as usize;
    let mut c = vec![0i64; q + 2];
    if field.characteristic() == 2 {
        c[q + 1] = 1;
        c[2] = -1;
    } else {
        c[q] = 1;
        c[1] = -1;
    }
    c[0] = 1;
    let poly = Polynomial::from_i64s(field, &c);
    let elems = field.elements().unwrap();
    ensure(elems.len() == q, || format!("F{q} has {} elements", elems.len()))?;
    ensure(elems.iter().all(|x| !field.is_zero(&poly.eval(x))), || format!("root in F{q}"))?;
    ensure(poly_has_root(&poly).map_err(|e| e.to_string())?.is_none(), || format!("F{q} search"))
}

fn finite_witnesses() -> Check {
    for p in [2, 3, 5, 7] {
        witness_rootless(&f(p))?;
    }
    for (p, k) in [(2, 2), (2, 3), (3, 2)] {
        witness_rootless(&ExtensionField::galois(p, k).map_err(|e| e.to_string())?)?;
    }
    Ok("q = 2, 3, 4, 5, 7, 8, 9 rootless".into())
}

fn laurent_decomposition() -> Check {
    let l = LaurentField::new(&Rationals, 8).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for trial in 0..100 {
        let coeffs: Vec<_> = (0..8).map(|_| Rationals.random(&mut rng)).collect();
        let s = l.series(0, coeffs.clone());
        let (c, tail) = l.residue_decompose(&s).map_err(|e| e.to_string())?;
        ensure(c == coeffs[0], || format!("trial {trial}: constant"))?;
        ensure(
            l.is_zero(&tail) || l.laurent_valuation(&tail).map_err(|e| e.to_string())? >= 1,
            || format!("trial {trial}: tail valuation"),
        )?;
        ensure(l.equals(&l.recompose(&c, &tail), &s), || format!("trial {trial}: recompose"))?;
        // uniqueness: any other constant leaves a unit in the tail
        let shifted = l.sub(&s, &l.constant(&Rationals.add(&c, &Rationals.one())));
        ensure(l.laurent_valuation(&shifted).map_err(|e| e.to_string())? == 0, || format!("trial {trial}: unique"))?;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 1..=4 {
        let a = StructureTensor::random(&Rationals, n, false, &mut rng).map_err(|e| e.to_string())?;
        let lifted = a.map_field(&l, |c| l.constant(c)).map_err(|e| e.to_string())?;
        let t = l.t_power(1);
        let phis = (0..n)
            .map(|_| (0..n).map(|_| l.constant(&Rationals.random(&mut rng))).collect())
            .collect();
        let s = QuadraticSystem::build(&lifted)
            .perturb(vec![t; n], phis)
            .map_err(|e| e.to_string())?;
        let mut trivial = vec![l.zero(); n];
        trivial.push(l.one());
        ensure(s.is_solution(&trivial), || format!("n={n}: trivial point lost"))?;
        ensure(jacobian_is_minus_identity(&s), || format!("n={n}: Jacobian"))?;
    }
    Ok("100 series split and recompose; eps = t keeps the trivial point and -I".into())
}

fn main() {
    let criteria: [(&str, Duration, fn() -> Check); 10] = [
        ("1 rational counterexample", Duration::from_secs(1), rational_counterexample),
        ("2 F3 counterexample", Duration::from_secs(1), f3_counterexample),
        ("3 real eigenvectors", Duration::from_secs(60), real_property_run),
        ("4 Bezout bound", Duration::from_secs(120), bezout_bound),
        ("5 Jacobian at the origin", Duration::from_secs(5), jacobian_at_origin),
        ("6 spectrum trichotomy", Duration::from_secs(30), spectrum_trichotomy),
        ("7 nilpotent reduction", Duration::from_secs(1), nilpotent_reduction),
        ("8 restriction of scalars", Duration::from_secs(1), restriction),
        ("9 finite-field witnesses", Duration::from_secs(1), finite_witnesses),
        ("10 Laurent decomposition", Duration::from_secs(1), laurent_decomposition),
    ];
    let mut failed = 0;
    for (name, limit, run) in criteria {
        let start = Instant::now();
        let result = run();
        let took = start.elapsed();
        let line = match result {
            Ok(detail) if took <= limit => format!("PASS {name}: {detail} ({took:.2?})"),
            Ok(detail) => format!("FAIL {name}: {detail}, but took {took:.2?} > {limit:?}"),
            Err(why) => format!("FAIL {name}: {why} ({took:.2?})"),
        };
        if line.starts_with("FAIL") {
            failed += 1;
        }
        println!("{line}");
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
