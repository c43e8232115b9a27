//! One line per acceptance criterion; exits nonzero if any fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use bredon_cli::generate::{random_gcw, trial_rng, Limits};
use bredon_cli::verify::{self, Property};
use bredon_core::bredon::{bredon_cohomology, bredon_homology, CoefficientSystem, Presentation, Variance};
use bredon_core::gcw::chain_functor;
use bredon_core::gspace::target_fibre_space;
use bredon_core::orbitcat::{
    canonical_orbit, count_orbit_maps, subgroups, verify_fixed_point_count, verify_orbit_category_iso,
};
use bredon_core::zlinalg::snf;
use bredon_core::{fixtures, FgAbelianGroup, IntMatrix, OrbitCategory};
use common::{bareiss_det, fixed_complex, fixture, quotient_complex, run};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::Rng;
use serde_json::Value;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration) -> Result<String, String> {
    let t = start.elapsed();
    ensure(t < limit, format!("took {t:?}, limit {limit:?}"))?;
    Ok(format!("{:.0} ms", t.as_secs_f64() * 1000.0))
}

fn ints(v: &Value) -> Vec<u64> {
    v.as_array()
        .map(|a| a.iter().filter_map(Value::as_u64).collect())
        .unwrap_or_default()
}

fn degrees(r: &Value) -> Vec<(u64, Vec<u64>)> {
    r["result"]["degrees"]
        .as_array()
        .map(|ds| {
            ds.iter()
                .map(|d| {
                    (
                        d["group"]["free_rank"].as_u64().unwrap_or(u64::MAX),
                        ints(&d["group"]["torsion"]),
                    )
                })
                .collect()
        })
        .unwrap_or_default()
}

fn bredon_cli(coeffs: &str) -> Result<Value, String> {
    let (code, r, _) = run(&[
        "bredon",
        "--complex",
        &fixture("flip_circle.gcw.json"),
        "--coeffs",
        &fixture(coeffs),
        "--mode",
        "cohomology",
    ]);
    ensure(code == 0, format!("exit {code}: {r}"))?;
    Ok(r)
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let r = bredon_cli("coefficients_a.coeffs.json")?;
    let ranks = ints(&r["result"]["chain_ranks"]);
    ensure(ranks == [2, 0], format!("cochain ranks {ranks:?}"))?;
    let h = degrees(&r);
    ensure(h == [(2, vec![]), (0, vec![])], format!("groups {h:?}"))?;
    Ok(format!(
        "ranks (2, 0), H0 = Z^2, H1 = 0, {}",
        within(start, Duration::from_secs(1))?
    ))
}

fn criterion_2() -> Check {
    let start = Instant::now();
    let r = bredon_cli("coefficients_b.coeffs.json")?;
    let ranks = ints(&r["result"]["chain_ranks"]);
    ensure(ranks == [2, 1], format!("cochain ranks {ranks:?}"))?;
    ensure(
        r["result"]["differentials"][0]["surjective"] == Value::Bool(true),
        "delta not surjective",
    )?;
    let h = degrees(&r);
    ensure(h == [(1, vec![]), (0, vec![])], format!("groups {h:?}"))?;
    Ok(format!(
        "ranks (2, 1), delta onto, H0 = Z, H1 = 0, {}",
        within(start, Duration::from_secs(1))?
    ))
}

fn criterion_3() -> Check {
    let g = fixtures::double_flip_groupoid();
    let b = fixtures::base(&g);
    let names = |arrows: &[bredon_core::ArrowId]| {
        let mut v: Vec<String> = arrows.iter().map(|&a| g.arrow_name(a).to_string()).collect();
        v.sort();
        v
    };
    let iso = g.isotropy(b).map_err(|e| e.to_string())?;
    ensure(
        names(&iso.arrows) == ["t", "v"],
        format!("isotropy {:?}", names(&iso.arrows)),
    )?;
    ensure(iso.order() == 2, "isotropy is not of order 2")?;
    let fibre = g.target_fibre(b).map_err(|e| e.to_string())?;
    ensure(
        names(&fibre.arrows) == ["t", "v", "x", "y"],
        format!("target fibre {:?}", names(&fibre.arrows)),
    )?;

    let x = fixtures::flip_circle();
    let cat = OrbitCategory::build(x.group());
    let (e, full) = (0, 1);
    let t = x.group().element("t").ok_or("no t")?;
    let c0 = chain_functor(&x, &cat, 0).map_err(|e| e.to_string())?;
    ensure((c0.rank(e), c0.rank(full)) == (2, 2), "C0 ranks")?;
    ensure(
        c0.maps[cat.hom(e, full)[0]] == IntMatrix::identity(2),
        "C0 restriction is not the identity",
    )?;
    ensure(
        c0.maps[cat.morphism_via(e, e, t).ok_or("no t")?] == IntMatrix::identity(2),
        "t moves a vertex",
    )?;
    let c1 = chain_functor(&x, &cat, 1).map_err(|e| e.to_string())?;
    ensure((c1.rank(e), c1.rank(full)) == (2, 0), "C1 ranks")?;
    let swap = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
    ensure(
        c1.maps[cat.morphism_via(e, e, t).ok_or("no t")?] == swap,
        "t does not swap the edges",
    )?;
    Ok("isotropy {v,t}, fibre {v,t,x,y}, C0 = (Z^2 -id-> Z^2), C1 = (0 -> Z^2) with swap".into())
}

fn suite(props: &[Property], seed: u64, trials: u64, limits: &Limits) -> Result<Vec<String>, String> {
    let mut out = Vec::new();
    for &p in props {
        let s = verify::run(p, seed, trials, limits);
        if let Some(f) = &s.first_failure {
            return Err(format!("{} trial {}: {:?}", p.name(), f.trial, f.witness));
        }
        out.push(format!("{} {}/{}", p.name(), s.passed, s.trials));
    }
    Ok(out)
}

fn criterion_4() -> Check {
    let start = Instant::now();
    let limits = Limits {
        max_objects: 4,
        max_group: 8,
        max_points: 20,
    };
    let done = suite(
        &[Property::FormY, Property::Rest, Property::Quots, Property::Triv],
        1,
        100,
        &limits,
    )?;
    Ok(format!(
        "{}, {}",
        done.join(", "),
        within(start, Duration::from_secs(60))?
    ))
}

fn criterion_5() -> Check {
    let g = fixtures::double_flip_groupoid();
    let b = fixtures::base(&g);
    let iso = g.isotropy(b).map_err(|e| e.to_string())?;
    let hs = subgroups(&iso.group);
    let mut spaces = vec![
        fixtures::vertex_space(&g),
        target_fibre_space(&g, b).map_err(|e| e.to_string())?,
    ];
    for h in &hs {
        spaces.push(canonical_orbit(&g, b, h).map_err(|e| e.to_string())?.space);
    }
    let mut checked = 0;
    for x in &spaces {
        for h in &hs {
            let n = verify_fixed_point_count(&g, x, b, h).map_err(|e| e.witness)?;
            let m = count_orbit_maps(&g, b, h, x).map_err(|e| e.to_string())?;
            ensure(m == n as u128, format!("{m} maps vs {n} fixed points"))?;
            checked += 1;
        }
    }
    let cert = verify_orbit_category_iso(&g, b).map_err(|e| e.witness)?;
    ensure(cert.category.object_count() == 2, "double flip orbit category size")?;
    let random = suite(&[Property::C2, Property::Orbitcat], 5, 25, &Limits::default())?;
    Ok(format!(
        "double flip: {checked} map counts + orbit category; random: {}",
        random.join(", ")
    ))
}

fn criterion_6() -> Check {
    Ok(suite(&[Property::Bundle], 3, 50, &Limits::default())?.join(", "))
}

fn criterion_7() -> Check {
    let mut cells = 0;
    for i in 0..10 {
        let x = random_gcw(&mut trial_rng(7, i), 8);
        cells += (0..x.dims()).map(|n| x.cell_count(n)).sum::<usize>();
        let cat = OrbitCategory::build(x.group());
        let full = cat.object_count() - 1;
        let a = CoefficientSystem::concentrated(&cat, Variance::Contravariant, full, Presentation::free(1))
            .map_err(|e| e.to_string())?;
        let z = CoefficientSystem::constant(&cat, Variance::Contravariant, Presentation::free(1))
            .map_err(|e| e.to_string())?;
        let zc =
            CoefficientSystem::constant(&cat, Variance::Covariant, Presentation::free(1)).map_err(|e| e.to_string())?;
        let check = |what: &str, got: Vec<FgAbelianGroup>, want: Vec<FgAbelianGroup>| {
            ensure(got == want, format!("complex {i}, {what}: {got:?} vs {want:?}"))
        };
        check(
            "A vs fixed",
            bredon_cohomology(&x, &a).map_err(|e| e.to_string())?.homology,
            fixed_complex(&x).cohomology(),
        )?;
        check(
            "Z vs quotient",
            bredon_cohomology(&x, &z).map_err(|e| e.to_string())?.homology,
            quotient_complex(&x).cohomology(),
        )?;
        check(
            "Z homology vs quotient",
            bredon_homology(&x, &zc).map_err(|e| e.to_string())?.homology,
            quotient_complex(&x).homology(),
        )?;
    }
    Ok(format!("10 complexes, {cells} cells, three comparisons each"))
}

fn criterion_8() -> Check {
    let start = Instant::now();
    let mut rng = trial_rng(8, 0);
    for i in 0..500 {
        let (m, n) = (rng.random_range(1..=8), rng.random_range(1..=8));
        let a = IntMatrix::from_fn(m, n, |_, _| BigInt::from(rng.random_range(-9i64..=9)));
        let s = snf(&a);
        ensure(&(&s.u * &a) * &s.v == s.d, format!("matrix {i}: UAV != D"))?;
        ensure(
            bareiss_det(&s.u).abs() == BigInt::from(1),
            format!("matrix {i}: U not unimodular"),
        )?;
        ensure(
            bareiss_det(&s.v).abs() == BigInt::from(1),
            format!("matrix {i}: V not unimodular"),
        )?;
        for r in 0..m {
            for c in 0..n {
                ensure(r == c || s.d.get(r, c).is_zero(), format!("matrix {i}: D not diagonal"))?;
            }
        }
        for w in s.diagonal().windows(2) {
            let ok = !w[0].is_negative()
                && if w[0].is_zero() {
                    w[1].is_zero()
                } else {
                    (&w[1] % &w[0]).is_zero()
                };
            ensure(ok, format!("matrix {i}: {} does not divide {}", w[0], w[1]))?;
        }
    }
    Ok(format!("500 matrices, {}", within(start, Duration::from_secs(10))?))
}

fn main() -> ExitCode {
    let criteria: [fn() -> Check; 8] = [
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
    ];
    let mut failed = 0;
    for (i, c) in criteria.iter().enumerate() {
        match c() {
            Ok(detail) => println!("criterion {}: PASS ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL ({why})", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
