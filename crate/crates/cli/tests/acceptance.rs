//! One PASS/FAIL line per acceptance criterion. Every comparison is exact.

#[path = "../../core/tests/support/figures.rs"]
mod figures;

use std::path::PathBuf;
use std::process::{Command, ExitCode};

use equicohom::chain_oracle::{level_e_crosscheck, verify_ep_table, Twist};
use equicohom::expr::{parse_in, CpSpace, Style};
use equicohom::mackey::CatalogName;
use equicohom::point::les::{point_slice, sequence_at_zero, sequence_on_antidiagonal};
use equicohom::point::{les_point_check, point_group_at, LevelE, PointElement, PointGen, RoDegree};
use equicohom::projective::checks::{
    cp_group_at, freeness_check, leading_term_matrix_check, mv_kernel_check, DimensionFamily,
};
use equicohom::projective::{
    chi_star, cp_mul, enumerate_basis_b, normal_form, restrict, CpElement, CpMonomial, PiDegree,
    Side,
};
use equicohom::tables::{grid, Figure};
use equicohom::verify::{sample_monomials, sample_scalars, sharded};

const JOBS: usize = 4;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn first_failure(results: Vec<Outcome>) -> Outcome {
    let failures: Vec<String> = results.into_iter().filter_map(Result::err).collect();
    match failures.len() {
        0 => Ok(()),
        n => Err(format!("{n} failures, first: {}", failures[0])),
    }
}

fn repo() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn cli(args: &[&str]) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_equicohom"))
        .args(args)
        .output()
        .expect("run equicohom");
    assert!(
        out.status.success(),
        "equicohom {args:?} exited with {}",
        out.status
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

/// The nine-case classification of the point, written out case by case.
fn classify_by_cases(a: i64, b: i64) -> CatalogName {
    use CatalogName::*;
    let even = a % 2 == 0;
    if a == 0 && b == 0 {
        A
    } else if a + b == 0 && a < 0 && even {
        R
    } else if a + b == 0 && a <= 1 && !even {
        Rminus
    } else if a + b == 0 && a > 0 && even {
        L
    } else if a + b == 0 && a > 1 && !even {
        Lminus
    } else if a == 0 {
        BracketZ
    } else if (a + b > 0 && a < 0 && even) || (a + b < 0 && a > 1 && !even) {
        BracketZ2
    } else {
        Zero
    }
}

fn criterion_1() -> Outcome {
    let mut results = Vec::new();
    for d in RoDegree::boxed(10) {
        let expected = classify_by_cases(d.a, d.b);
        results.push(check(point_group_at(d) == expected, || {
            format!("table at {d:?}")
        }));
        results.push(check(
            point_slice(d).functor.classify() == Some(expected.clone()),
            || format!("slice at {d:?}"),
        ));
        let shown = cli(&[
            "--format",
            "json",
            "group",
            "point",
            "--deg",
            &format!("{},{}", d.a, d.b),
        ]);
        let v: serde_json::Value = serde_json::from_str(&shown).expect("json");
        results.push(check(v["group"] == expected.ascii(), || {
            format!("cli at {d:?}: {}", v["group"])
        }));
    }
    let src = figures::figure_source();
    for (name, label, a0, b0, generators) in &figures::FIGURES[..2] {
        let golden = std::fs::read_to_string(repo().join(format!("tables/{name}.txt")))
            .expect("golden table");
        results.push(check(cli(&["table", name]) == golden, || {
            format!("{name} differs from its golden file")
        }));
        let t = figures::transcribe(&src, label, *a0, *b0);
        let fig = Figure::parse(name).unwrap();
        let bounds = fig.default_bounds();
        let blank = if *generators { "." } else { "0" };
        for (b, row) in grid(fig, &bounds, Style::UNICODE) {
            for (a, cell) in bounds.a.clone().zip(row) {
                let printed = figures::corrected(name, &t, a, b, blank);
                results.push(check(cell == printed, || {
                    format!("{name} ({a}, {b}): {cell} vs printed {printed}")
                }));
            }
        }
    }
    first_failure(results)
}

fn criterion_2() -> Outcome {
    let untwisted = |a: i64| match a {
        0 => CatalogName::R,
        a if a % 2 == 0 => CatalogName::BracketZ2,
        _ => CatalogName::Zero,
    };
    let twisted = |a: i64| {
        if a % 2 == 0 {
            CatalogName::BracketZ2
        } else {
            CatalogName::Zero
        }
    };
    let mut results = Vec::new();
    for twist in [Twist::Integer, Twist::Lambda] {
        let report = verify_ep_table(20, twist, 0..=16).map_err(|e| e.to_string())?;
        results.push(check(report.rows.len() == 17, || "row count".into()));
        for row in &report.rows {
            let a = row.degree.a;
            let expected = if twist == Twist::Integer {
                untwisted(a)
            } else {
                twisted(a)
            };
            results.push(check(row.computed == Some(expected), || {
                format!("{twist:?} at a = {a}: {:?}", row.computed)
            }));
        }
    }
    let e = level_e_crosscheck(20);
    results.push(check(e.passed(), || {
        format!("level e: {:?}", e.augmented_defects)
    }));
    first_failure(results)
}

fn criterion_3() -> Outcome {
    use CatalogName::*;
    let mut results = Vec::new();
    let failures = les_point_check(RoDegree::boxed(10));
    results.push(check(failures.is_empty(), || {
        format!(
            "{} inexact spots, first {:?}",
            failures.len(),
            failures.first().map(|f| f.degree)
        )
    }));
    let zero = sequence_at_zero();
    results.push(check(zero.exact && zero.terms[0] == BracketZ, || {
        format!("degree 0: {:?}", zero.terms)
    }));
    for a in 2..=10 {
        let s = sequence_on_antidiagonal(a);
        let expected = if a % 2 == 0 {
            [L, R, BracketZ2]
        } else {
            [BracketZ2, Lminus, Rminus]
        };
        results.push(check(s.exact && s.terms == expected, || {
            format!("a = {a}: {:?}", s.terms)
        }));
    }
    first_failure(results)
}

fn cp(src: &str) -> CpElement {
    parse_in(&CpSpace, src).unwrap_or_else(|e| panic!("{src}: {e}"))
}

fn criterion_4() -> Outcome {
    let mut results = Vec::new();
    let identities = [
        ("zeta*zbar", "xi"),
        ("zeta*cbar", "eps^2 - (1 - g)*zbar*c"),
        ("zbar*c", "eps^2 - (1 - g)*zeta*cbar"),
        ("(zbar*c)^2", "eps^2*(zbar*c) + xi*(c*cbar)"),
    ];
    for (left, right) in identities {
        results.push(check(cp(left) == cp(right), || format!("{left} = {right}")));
    }
    let sample: Vec<CpElement> = sample_monomials(3)
        .iter()
        .flat_map(|b| sample_scalars().into_iter().map(move |p| b.scale_point(&p)))
        .collect();
    for x in &sample {
        results.push(check(chi_star(&chi_star(x)) == *x, || "chi^2".into()));
    }
    let pairs: Vec<(usize, usize)> = (0..sample.len())
        .flat_map(|i| (0..sample.len()).map(move |j| (i, j)))
        .collect();
    results.extend(sharded(&pairs, JOBS, |&(i, j)| {
        let (x, y) = (&sample[i], &sample[j]);
        let xy = cp_mul(x, y);
        check(chi_star(&xy) == cp_mul(&chi_star(x), &chi_star(y)), || {
            format!("chi on pair {i}, {j}")
        })?;
        for side in [Side::Plus, Side::Minus] {
            check(
                restrict(side, &xy) == &restrict(side, x) * &restrict(side, y),
                || format!("rho{} on pair {i}, {j}", side.suffix()),
            )?;
        }
        Ok(())
    }));
    first_failure(results)
}

fn cp_degrees() -> Vec<PiDegree> {
    PiDegree::boxed(6, 4).collect()
}

fn criterion_5() -> Outcome {
    first_failure(sharded(&cp_degrees(), JOBS, |&d| {
        let r = mv_kernel_check(d, 12).map_err(|e| format!("{d:?}: {e}"))?;
        check(r.onto, || format!("{d:?}: not onto"))?;
        check(r.kernel == r.expected, || {
            format!("{d:?}: kernel {:?} vs span {:?}", r.kernel, r.expected)
        })
    }))
}

fn criterion_6() -> Outcome {
    let mut results = Vec::new();
    let mut count = 0;
    for family in DimensionFamily::ALL {
        for n in -3..=3 {
            for k in 0..=4 {
                if family.degree(n, k).is_none() {
                    continue;
                }
                count += 1;
                results.push(match leading_term_matrix_check(family, n, k) {
                    Ok(r) => check(r.passed(), || {
                        format!(
                            "{family:?} n={n} k={k}: invertible {} triangular {}",
                            r.invertible, r.triangular
                        )
                    }),
                    Err(e) => Err(format!("{family:?} n={n} k={k}: {e}")),
                });
            }
        }
    }
    results.push(check(count > 0, || "no family degrees".into()));
    first_failure(results)
}

fn criterion_7() -> Outcome {
    first_failure(sharded(&cp_degrees(), JOBS, |&d| {
        let r = freeness_check(d, 12).map_err(|e| format!("{d:?}: {e}"))?;
        check(r.passed(), || format!("{d:?}: {r:?}"))?;
        let summands = cp_group_at(d);
        let free: u32 = summands
            .iter()
            .map(|(_, f)| f.functor().level_gg.fingerprint().free)
            .sum();
        check(free == r.rank, || {
            format!("{d:?}: cp_group_at rank {free} vs oracle {}", r.rank)
        })?;
        for (beta, f) in &summands {
            let e = (d - beta.degree()).ro();
            check(*f == point_group_at(e) && *f != CatalogName::Zero, || {
                format!("{d:?}: summand {} is {f}", beta.ascii())
            })?;
        }
        let listed = enumerate_basis_b(d.n, 64)
            .into_iter()
            .filter(|b| point_group_at((d - b.degree()).ro()) != CatalogName::Zero);
        check(listed.count() == summands.len(), || {
            format!("{d:?}: summand count")
        })
    }))
}

fn all_monomials(e: u32) -> Vec<CpElement> {
    let mut v = Vec::new();
    for i in 0..=e {
        for j in 0..=e {
            for k in 0..=e {
                for l in 0..=e {
                    v.push(normal_form(CpMonomial::new(i, j, k, l)));
                }
            }
        }
    }
    v
}

fn criterion_8() -> Outcome {
    let mut results = Vec::new();
    // every triple of basis monomials with exponents at most 4
    let basis = sample_monomials(4);
    results.extend(sharded(&basis, JOBS, |x| {
        for y in &basis {
            let xy = cp_mul(x, y);
            check(xy == cp_mul(y, x), || "commutativity on B".into())?;
            for z in &basis {
                check(cp_mul(&xy, z) == cp_mul(x, &cp_mul(y, z)), || {
                    "associativity on B".into()
                })?;
                check(cp_mul(x, &(y + z)) == &xy + &cp_mul(x, z), || {
                    "distributivity on B".into()
                })?;
            }
        }
        Ok(())
    }));
    // point coefficients 1, g, ε, ξ, κ on basis monomials, and arbitrary monomials
    let scaled: Vec<CpElement> = basis
        .iter()
        .flat_map(|b| sample_scalars().into_iter().map(move |p| b.scale_point(&p)))
        .collect();
    results.extend(sharded(&scaled, JOBS, |x| {
        for y in &scaled {
            check(cp_mul(x, y) == cp_mul(y, x), || {
                "commutativity with coefficients".into()
            })?;
        }
        Ok(())
    }));
    let monomials = all_monomials(4);
    let gens: Vec<CpElement> = [
        CpElement::c(),
        CpElement::cbar(),
        CpElement::zeta(),
        CpElement::zbar(),
    ]
    .iter()
    .flat_map(|g| sample_scalars().into_iter().map(move |p| g.scale_point(&p)))
    .collect();
    results.extend(sharded(&monomials, JOBS, |x| {
        for y in &gens {
            let xy = cp_mul(x, y);
            check(xy == cp_mul(y, x), || {
                "commutativity with generators".into()
            })?;
            for z in &gens {
                check(cp_mul(&xy, z) == cp_mul(x, &cp_mul(y, z)), || {
                    "associativity with generators".into()
                })?;
                check(cp_mul(x, &(y + z)) == &xy + &cp_mul(x, z), || {
                    "distributivity with generators".into()
                })?;
            }
        }
        Ok(())
    }));

    let mut point_gens = vec![PointGen::One, PointGen::G];
    point_gens.extend(
        RoDegree::boxed(12)
            .filter(|d| *d != RoDegree::ZERO)
            .filter_map(PointGen::at),
    );
    for &x in &point_gens {
        let px = PointElement::gen(x);
        for k in -12..=12 {
            let y = LevelE::monomial(k, 1);
            results.push(check(&px * &y.tr() == px.res().mul(&y).tr(), || {
                format!("Frobenius {x:?} with ι^{k}")
            }));
        }
    }
    for m in 1..=12u32 {
        let eps = PointElement::eps(m);
        results.push(check(
            &eps * &PointElement::gen(PointGen::InvEpsKappa(m)) == PointElement::kappa(),
            || format!("ε^{m}·ε^-{m}κ"),
        ));
        for k in 1..=12u32 {
            let lhs = &eps * &PointElement::gen(PointGen::InvEpsTau(m, k));
            results.push(check(
                lhs == PointElement::gen(PointGen::TauIota(2 * k + 1)),
                || format!("ε^{m}·ε^-{m}τ(ι^-{})", 2 * k + 1),
            ));
        }
    }
    first_failure(results)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("point-table fidelity", criterion_1),
        ("chain-level oracle", criterion_2),
        ("LES exactness", criterion_3),
        ("ring identities", criterion_4),
        ("Mayer-Vietoris", criterion_5),
        ("basis B", criterion_6),
        ("freeness", criterion_7),
        ("algebra laws", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = std::time::Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS {} {name} ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name} ({secs:.1}s): {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
