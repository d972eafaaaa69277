//! Verification suites: each check becomes one record, and degree boxes shard
//! across worker threads.

use serde::Serialize;

use crate::chain_oracle::{self, Twist};
use crate::error::Result;
use crate::expr::{Render, Style};
use crate::mackey::CatalogName;
use crate::point::les::{
    eap_slice, ep_slice, point_slice, sequence_at_zero, sequence_on_antidiagonal,
};
use crate::point::{
    eap_group_at, ep_group_at, les_point_check, point_group_at, EapElement, PointElement, RoDegree,
};
use crate::projective::checks::{
    freeness_check, leading_term_matrix_check, mv_kernel_check, psi_beta_check, DimensionFamily,
};
use crate::projective::{
    chi_star, cp_mul, restrict, BasisBMonomial, CpElement, CpMonomial, PiDegree, Side,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Axioms,
    Les,
    EpChain,
    Mv,
    Basis,
    Ring,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Axioms,
        Suite::Les,
        Suite::EpChain,
        Suite::Mv,
        Suite::Basis,
        Suite::Ring,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::Les => "les",
            Suite::EpChain => "ep-chain",
            Suite::Mv => "mv",
            Suite::Basis => "basis",
            Suite::Ring => "ring",
        }
    }

    /// `all` expands to every suite.
    pub fn parse(s: &str) -> Option<Vec<Suite>> {
        if s == "all" {
            return Some(Suite::ALL.to_vec());
        }
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .map(|x| vec![x])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    /// `|a|, |b| <=` this for the point, EP and E(A,P) tables.
    pub point_box: i64,
    /// Cells in the chain-level EP truncations.
    pub cells: usize,
    /// `|a|, |b| <=` this for CP^∞ degrees.
    pub cp_box: i64,
    /// `|n| <=` this for CP^∞ degrees.
    pub cp_n: i64,
    /// Polynomial truncation for the fixed-set modules.
    pub trunc: u32,
    /// Largest `n` and `k` for the dimension families.
    pub family_n: i64,
    pub family_k: i64,
    pub jobs: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            point_box: 10,
            cells: 20,
            cp_box: 6,
            cp_n: 4,
            trunc: 12,
            family_n: 3,
            family_k: 4,
            jobs: 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub suite: &'static str,
    pub check: &'static str,
    pub subject: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl Record {
    fn new(
        suite: Suite,
        check: &'static str,
        subject: impl ToString,
        passed: bool,
        detail: impl Into<String>,
    ) -> Self {
        Record {
            suite: suite.name(),
            check,
            subject: subject.to_string(),
            passed,
            detail: detail.into(),
        }
    }

    fn from_result<T>(
        suite: Suite,
        check: &'static str,
        subject: impl ToString,
        r: Result<T>,
        ok: impl Fn(&T) -> bool,
    ) -> Self
    where
        T: Serialize,
    {
        match r {
            Ok(report) => {
                let passed = ok(&report);
                let detail = if passed {
                    String::new()
                } else {
                    serde_json::to_string(&report).unwrap_or_default()
                };
                Record::new(suite, check, subject, passed, detail)
            }
            Err(e) => Record::new(suite, check, subject, false, e.to_string()),
        }
    }
}

/// Maps `f` over `items` on up to `jobs` threads, keeping the input order.
pub fn sharded<T: Sync, R: Send>(items: &[T], jobs: usize, f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let jobs = jobs.max(1).min(items.len().max(1));
    if jobs == 1 {
        return items.iter().map(&f).collect();
    }
    let chunk = items.len().div_ceil(jobs);
    std::thread::scope(|s| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|c| s.spawn(|| c.iter().map(&f).collect::<Vec<R>>()))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("worker panicked"))
            .collect()
    })
}

pub fn run(suites: &[Suite], opts: &Options) -> Vec<Record> {
    suites.iter().flat_map(|s| run_suite(*s, opts)).collect()
}

pub fn run_suite(suite: Suite, opts: &Options) -> Vec<Record> {
    match suite {
        Suite::Axioms => axioms(opts),
        Suite::Les => les(opts),
        Suite::EpChain => ep_chain(opts),
        Suite::Mv => mv(opts),
        Suite::Basis => basis(opts),
        Suite::Ring => ring(),
    }
}

fn axioms(opts: &Options) -> Vec<Record> {
    let s = Suite::Axioms;
    let mut out: Vec<Record> = CatalogName::INDECOMPOSABLE
        .iter()
        .map(|n| {
            let v = n.functor().check_axioms();
            Record::new(
                s,
                "catalog",
                n,
                v.is_empty(),
                v.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join("; "),
            )
        })
        .collect();
    let degrees: Vec<RoDegree> = RoDegree::boxed(opts.point_box).collect();
    out.extend(sharded(&degrees, opts.jobs, |&d| {
        let mut bad = Vec::new();
        let cases = [
            ("point", point_slice(d).functor, point_group_at(d)),
            ("ep", ep_slice(d).functor, ep_group_at(d)),
            ("eap", eap_slice(d).functor, eap_group_at(d)),
        ];
        for (ring, f, expected) in cases {
            if !f.check_axioms().is_empty() {
                bad.push(format!("{ring}: axioms"));
            }
            if f.classify().as_ref() != Some(&expected) {
                bad.push(format!(
                    "{ring}: classified {:?}, table {expected}",
                    f.classify()
                ));
            }
        }
        Record::new(s, "slice", d, bad.is_empty(), bad.join("; "))
    }));
    out
}

fn les(opts: &Options) -> Vec<Record> {
    let s = Suite::Les;
    let degrees: Vec<RoDegree> = RoDegree::boxed(opts.point_box).collect();
    let mut out = sharded(&degrees, opts.jobs, |&d| {
        let f = les_point_check([d]);
        let detail = f
            .iter()
            .map(|x| format!("{}: {}", x.spot, x.detail))
            .collect::<Vec<_>>()
            .join("; ");
        Record::new(s, "exact", d, f.is_empty(), detail)
    });
    let zero = sequence_at_zero();
    out.push(Record::new(
        s,
        "short-exact",
        zero.degree,
        zero.exact,
        format!("{:?}", zero.terms),
    ));
    for a in 2..=opts.point_box {
        let seq = sequence_on_antidiagonal(a);
        out.push(Record::new(
            s,
            "short-exact",
            seq.degree,
            seq.exact,
            format!("{:?}", seq.terms),
        ));
    }
    out
}

fn ep_chain(opts: &Options) -> Vec<Record> {
    let s = Suite::EpChain;
    let mut out = Vec::new();
    for twist in [Twist::Integer, Twist::Lambda] {
        let cx = chain_oracle::sphere_antipodal_complex(opts.cells, twist);
        let defects = cx.defects();
        out.push(Record::new(
            s,
            "d-squared",
            format!("{twist:?} {} cells", opts.cells),
            defects.is_empty(),
            format!("{defects:?}"),
        ));
        let limit = chain_oracle::stable_limit(opts.cells, twist);
        match chain_oracle::verify_ep_table(opts.cells, twist, 0..=limit) {
            Ok(report) => out.extend(report.rows.iter().map(|r| {
                let detail = if r.matches() {
                    String::new()
                } else {
                    format!("computed {:?}, table {}", r.computed, r.expected)
                };
                Record::new(s, "table", r.degree, r.matches(), detail)
            })),
            Err(e) => out.push(Record::new(
                s,
                "table",
                format!("{twist:?}"),
                false,
                e.to_string(),
            )),
        }
    }
    if opts.cells >= 2 {
        let r = chain_oracle::level_e_crosscheck(opts.cells);
        out.push(Record::new(
            s,
            "level-e",
            format!("{} cells", opts.cells),
            r.passed(),
            if r.passed() {
                String::new()
            } else {
                format!("{r:?}")
            },
        ));
    }
    out
}

fn mv(opts: &Options) -> Vec<Record> {
    let s = Suite::Mv;
    let degrees: Vec<PiDegree> = PiDegree::boxed(opts.cp_box, opts.cp_n).collect();
    let trunc = opts.trunc;
    sharded(&degrees, opts.jobs, |&d| {
        [
            Record::from_result(s, "kernel", d, mv_kernel_check(d, trunc), |r| r.passed()),
            Record::from_result(s, "freeness", d, freeness_check(d, trunc), |r| r.passed()),
        ]
    })
    .into_iter()
    .flatten()
    .collect()
}

fn basis(opts: &Options) -> Vec<Record> {
    let s = Suite::Basis;
    let mut out = Vec::new();
    for family in DimensionFamily::ALL {
        for n in -opts.family_n..=opts.family_n {
            for k in 0..=opts.family_k {
                if family.degree(n, k).is_none() {
                    continue;
                }
                let subject = format!("{family:?} n={n} k={k}");
                out.push(Record::from_result(
                    s,
                    "leading-terms",
                    subject,
                    leading_term_matrix_check(family, n, k),
                    |r| r.passed(),
                ));
            }
        }
    }
    out
}

/// Basis monomials with every exponent at most `e`.
pub fn sample_monomials(e: u32) -> Vec<CpElement> {
    let mut v = Vec::new();
    for i in 0..=e {
        for j in 0..=e {
            for k in 0..=e {
                for l in 0..=e {
                    let m = CpMonomial { i, j, k, l };
                    if BasisBMonomial::from_monomial(m).is_some() {
                        v.push(CpElement::monomial(m));
                    }
                }
            }
        }
    }
    v
}

/// The scalars `1, g, ε, ξ, κ`.
pub fn sample_scalars() -> Vec<PointElement> {
    vec![
        PointElement::one(),
        PointElement::g(),
        PointElement::eps(1),
        PointElement::xi(1),
        PointElement::kappa(),
    ]
}

fn ring() -> Vec<Record> {
    let s = Suite::Ring;
    let mut out = Vec::new();
    let one_minus_g = CpElement::scalar(PointElement::a_g(1, -1));
    let eps2 = CpElement::scalar(PointElement::eps(2));
    let (c, cbar, zeta, zbar) = (
        CpElement::c(),
        CpElement::cbar(),
        CpElement::zeta(),
        CpElement::zbar(),
    );
    let gamma = &zbar * &c;
    let big_gamma = &c * &cbar;
    let identities = [
        (
            "zeta*zbar = xi",
            cp_mul(&zeta, &zbar),
            CpElement::scalar(PointElement::xi(1)),
        ),
        (
            "zeta*cbar = eps^2 - (1 - g)*zbar*c",
            cp_mul(&zeta, &cbar),
            &eps2 - &(&one_minus_g * &gamma),
        ),
        (
            "zbar*c = eps^2 - (1 - g)*zeta*cbar",
            gamma.clone(),
            &eps2 - &(&one_minus_g * &(&zeta * &cbar)),
        ),
        (
            "gamma^2 = eps^2*gamma + xi*Gamma",
            cp_mul(&gamma, &gamma),
            &(&eps2 * &gamma) + &(&CpElement::scalar(PointElement::xi(1)) * &big_gamma),
        ),
    ];
    for (name, left, right) in identities {
        out.push(Record::new(
            s,
            "identity",
            name,
            left == right,
            format!(
                "{} vs {}",
                left.render(Style::ASCII),
                right.render(Style::ASCII)
            ),
        ));
    }

    let sample = sample_monomials(2);
    let mut bad_chi = Vec::new();
    let mut bad_rho = Vec::new();
    for x in &sample {
        if chi_star(&chi_star(x)) != *x {
            bad_chi.push(format!("chi^2({})", x.render(Style::ASCII)));
        }
        for y in &sample {
            let xy = cp_mul(x, y);
            if chi_star(&xy) != cp_mul(&chi_star(x), &chi_star(y)) {
                bad_chi.push(format!(
                    "chi({} * {})",
                    x.render(Style::ASCII),
                    y.render(Style::ASCII)
                ));
            }
            for side in [Side::Plus, Side::Minus] {
                if restrict(side, &xy) != &restrict(side, x) * &restrict(side, y) {
                    bad_rho.push(format!(
                        "rho{}({} * {})",
                        side.suffix(),
                        x.render(Style::ASCII),
                        y.render(Style::ASCII)
                    ));
                }
            }
        }
    }
    out.push(Record::new(
        s,
        "chi-ring-involution",
        "exponents <= 2",
        bad_chi.is_empty(),
        bad_chi.join("; "),
    ));
    out.push(Record::new(
        s,
        "rho-ring-map",
        "exponents <= 2",
        bad_rho.is_empty(),
        bad_rho.join("; "),
    ));

    let psi_cases = [
        (EapElement::kappa(0), BasisBMonomial::ONE),
        (EapElement::tau(-3, 1), BasisBMonomial::ZetaC(1, 0)),
        (EapElement::kappa(1), BasisBMonomial::ZetaC(0, 1)),
        (EapElement::kappa(-2), BasisBMonomial::ZbarCCbar(1, 0)),
    ];
    for (eta, beta) in psi_cases {
        let subject = format!("{} * {}", eta.render(Style::ASCII), beta.ascii());
        out.push(Record::from_result(
            s,
            "psi-beta",
            subject,
            psi_beta_check(&eta, beta),
            |r| r.passed(),
        ));
    }
    out
}

pub fn all_passed(records: &[Record]) -> bool {
    records.iter().all(|r| r.passed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_runs_pass() {
        let opts = Options {
            point_box: 3,
            cells: 6,
            cp_box: 2,
            cp_n: 1,
            trunc: 12,
            family_n: 1,
            family_k: 1,
            jobs: 2,
        };
        let records = run(&Suite::ALL, &opts);
        let failed: Vec<_> = records.iter().filter(|r| !r.passed).collect();
        assert!(failed.is_empty(), "{failed:?}");
        assert!(records.iter().any(|r| r.suite == "mv"));
    }

    #[test]
    fn sharding_keeps_order() {
        let items: Vec<i64> = (0..37).collect();
        assert_eq!(
            sharded(&items, 4, |x| x * 2),
            items.iter().map(|x| x * 2).collect::<Vec<_>>()
        );
    }
}
