//! Command-line front end: degree queries, element arithmetic, tables and
//! the verification runner.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use equicohom::expr::{
    parse_in, CpSpace, EpSpace, FixedSpace, Named, PointSpace, Render, Space, Style, ZSpace,
};
use equicohom::mackey::CatalogName;
use equicohom::point::{eap_group_at, ep_group_at, point_group_at, RoDegree};
use equicohom::projective::checks::{cp_group_at, fixed_group_at};
use equicohom::projective::{chi_star, restrict, PiDegree, Side};
use equicohom::tables::{self, Bounds, Figure};
use equicohom::verify::{self, Options, Suite};
use equicohom::Error;

#[derive(Parser)]
#[command(
    name = "equicohom",
    version,
    about = "Z/2-equivariant cohomology of a point, EP, E(A,P) and CP^∞"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// ASCII names instead of Unicode in text output.
    #[arg(long, global = true)]
    ascii: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GroupSpace {
    Point,
    Ep,
    Eap,
    Cp,
    Fixed,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RingSpace {
    Point,
    Ep,
    Cp,
    Plus,
    Minus,
    Z,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Plus,
    Minus,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// The Mackey functor in one degree.
    Group {
        #[arg(value_enum)]
        space: GroupSpace,
        /// `a,b` for point, ep and eap; `a,b,n` for cp and fixed.
        #[arg(long, allow_hyphen_values = true)]
        deg: String,
    },
    /// The product of two elements.
    Mul {
        #[arg(value_enum)]
        space: RingSpace,
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// The involution induced by complex conjugation on CP^∞.
    Chi {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Restriction to a component of the fixed set.
    Restrict {
        #[arg(value_enum)]
        side: SideArg,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Rewrites a CP^∞ expression in the basis B.
    Normalize {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// A degree grid (fig1 to fig6), or the point-ring product table (products).
    Table {
        which: String,
        /// `MIN..MAX` for the `a` axis.
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        /// `MIN..MAX` for the `b` axis.
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
    },
    /// Runs a verification suite: axioms, les, ep-chain, mv, basis, ring or all.
    Verify {
        suite: String,
        /// `|a|, |b|` bound for the point, EP and E(A,P) checks.
        #[arg(long = "box")]
        point_box: Option<i64>,
        /// Cells in the chain-level EP truncation.
        #[arg(long)]
        cells: Option<usize>,
        /// `|a|, |b|` bound for CP^∞ degrees.
        #[arg(long)]
        cp_box: Option<i64>,
        /// `|n|` bound for CP^∞ degrees.
        #[arg(long)]
        cp_n: Option<i64>,
        /// Polynomial truncation for the fixed-set modules.
        #[arg(long)]
        trunc: Option<u32>,
        /// Largest `n` for the dimension families.
        #[arg(long)]
        n: Option<i64>,
        /// Largest `k` for the dimension families.
        #[arg(long)]
        k: Option<i64>,
        /// Worker threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

/// A failure that maps to an exit code.
enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

struct Ctx {
    format: Format,
    style: Style,
}

impl Ctx {
    fn name(&self, c: &CatalogName) -> String {
        if self.style.unicode {
            c.unicode()
        } else {
            c.ascii()
        }
    }
}

fn parse_ints(s: &str) -> Result<Vec<i64>, Failure> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|_| usage(format!("bad degree component `{p}`")))
        })
        .collect()
}

fn parse_degree(s: &str, arity: usize) -> Result<Vec<i64>, Failure> {
    let v = parse_ints(s)?;
    if v.len() != arity {
        return Err(Error::Arity {
            expected: arity,
            got: v.len(),
        }
        .into());
    }
    Ok(v)
}

fn parse_range(s: &str) -> Result<std::ops::RangeInclusive<i64>, Failure> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| usage(format!("expected MIN..MAX, got `{s}`")))?;
    let p = |x: &str| {
        x.trim()
            .parse::<i64>()
            .map_err(|_| usage(format!("bad bound `{x}`")))
    };
    Ok(p(lo)?..=p(hi)?)
}

fn csv_line(fields: &[String]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(fields).expect("in-memory write");
    String::from_utf8(w.into_inner().expect("in-memory flush"))
        .expect("utf-8")
        .trim_end()
        .to_string()
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn group(ctx: &Ctx, space: GroupSpace, deg: &str) -> Outcome {
    match space {
        GroupSpace::Point | GroupSpace::Ep | GroupSpace::Eap => {
            let v = parse_degree(deg, 2)?;
            let d = RoDegree::new(v[0], v[1]);
            let g = match space {
                GroupSpace::Point => point_group_at(d),
                GroupSpace::Ep => ep_group_at(d),
                _ => eap_group_at(d),
            };
            match ctx.format {
                Format::Text => println!("{}", ctx.name(&g)),
                Format::Csv => {
                    println!("a,b,group");
                    println!(
                        "{}",
                        csv_line(&[d.a.to_string(), d.b.to_string(), g.ascii()])
                    );
                }
                Format::Json => {
                    print_json(&json!({ "degree": { "a": d.a, "b": d.b }, "group": g }))
                }
            }
        }
        GroupSpace::Cp | GroupSpace::Fixed => {
            let v = parse_degree(deg, 3)?;
            let d = PiDegree::new(v[0], v[1], v[2]);
            let summands: Vec<(String, String, CatalogName)> = if space == GroupSpace::Cp {
                cp_group_at(d)
                    .into_iter()
                    .map(|(b, f)| (b.ascii(), b.unicode(), f))
                    .collect()
            } else {
                fixed_group_at(d)
                    .into_iter()
                    .map(|(side, j, f)| {
                        let mono = |style: Style| {
                            let poly = equicohom::projective::FixedPoly::term(
                                d.n,
                                j,
                                equicohom::point::PointElement::one(),
                            );
                            Named::side(&poly, side).render(style)
                        };
                        let tag = side.suffix();
                        (
                            format!("{} [{tag}]", mono(Style::ASCII)),
                            format!("{} [{tag}]", mono(Style::UNICODE)),
                            f,
                        )
                    })
                    .collect()
            };
            match ctx.format {
                Format::Text => {
                    let total = CatalogName::sum(summands.iter().map(|s| s.2.clone()));
                    let label = |s: &(String, String, CatalogName)| {
                        if ctx.style.unicode {
                            s.1.clone()
                        } else {
                            s.0.clone()
                        }
                    };
                    match summands.len() {
                        0 => println!("0"),
                        1 => println!("{}, generated by {}", ctx.name(&total), label(&summands[0])),
                        _ => {
                            let parts: Vec<String> = summands
                                .iter()
                                .map(|s| format!("{} ({})", label(s), ctx.name(&s.2)))
                                .collect();
                            println!("{}, generated by {}", ctx.name(&total), parts.join(", "));
                        }
                    }
                }
                Format::Csv => {
                    println!("a,b,n,beta,functor");
                    for (ascii, _, f) in &summands {
                        let row = [
                            d.a.to_string(),
                            d.b.to_string(),
                            d.n.to_string(),
                            ascii.clone(),
                            f.ascii(),
                        ];
                        println!("{}", csv_line(&row));
                    }
                }
                Format::Json => {
                    let s: Vec<Value> = summands
                        .iter()
                        .map(|(b, _, f)| json!({ "beta": b, "functor": f }))
                        .collect();
                    print_json(
                        &json!({ "degree": { "a": d.a, "b": d.b, "n": d.n }, "summands": s }),
                    );
                }
            }
        }
    }
    Ok(())
}

fn emit(ctx: &Ctx, kind: &str, ascii: String, unicode: String) {
    match ctx.format {
        Format::Text => println!("{}", if ctx.style.unicode { unicode } else { ascii }),
        Format::Csv => {
            println!("space,result");
            println!("{}", csv_line(&[kind.to_string(), ascii]));
        }
        Format::Json => print_json(&json!({ "space": kind, "result": ascii })),
    }
}

fn both<T: Render>(x: &T) -> (String, String) {
    (x.render(Style::ASCII), x.render(Style::UNICODE))
}

fn product<S: Space>(space: &S, x: &str, y: &str) -> Result<S::Value, Failure> {
    let a = parse_in(space, x)?;
    let b = parse_in(space, y)?;
    Ok(space.mul(&a, &b)?)
}

fn mul(ctx: &Ctx, space: RingSpace, x: &str, y: &str) -> Outcome {
    let (kind, (ascii, unicode)) = match space {
        RingSpace::Point => ("point", both(&product(&PointSpace, x, y)?)),
        RingSpace::Ep => ("ep", both(&product(&EpSpace, x, y)?)),
        RingSpace::Cp => ("cp", both(&product(&CpSpace, x, y)?)),
        RingSpace::Plus | RingSpace::Minus => {
            let side = if space == RingSpace::Plus {
                Side::Plus
            } else {
                Side::Minus
            };
            let p = product(&FixedSpace(side), x, y)?;
            (
                if side == Side::Plus { "plus" } else { "minus" },
                both(&Named::side(&p, side)),
            )
        }
        RingSpace::Z => ("z", both(&Named::z(&product(&ZSpace, x, y)?))),
    };
    emit(ctx, kind, ascii, unicode);
    Ok(())
}

fn restrict_cmd(ctx: &Ctx, side: SideArg, expr: &str) -> Outcome {
    let x = parse_in(&CpSpace, expr)?;
    let sides: Vec<Side> = match side {
        SideArg::Plus => vec![Side::Plus],
        SideArg::Minus => vec![Side::Minus],
        SideArg::Both => vec![Side::Plus, Side::Minus],
    };
    let rendered: Vec<(String, String)> = sides
        .iter()
        .map(|&s| both(&Named::side(&restrict(s, &x), s)))
        .collect();
    let join = |f: fn(&(String, String)) -> String| {
        let v: Vec<String> = rendered.iter().map(f).collect();
        if v.len() == 1 {
            v[0].clone()
        } else {
            format!("({})", v.join(", "))
        }
    };
    let kind = match side {
        SideArg::Plus => "plus",
        SideArg::Minus => "minus",
        SideArg::Both => "both",
    };
    emit(ctx, kind, join(|r| r.0.clone()), join(|r| r.1.clone()));
    Ok(())
}

fn table(ctx: &Ctx, which: &str, a: Option<&str>, b: Option<&str>) -> Outcome {
    if which == "products" {
        print!("{}", tables::product_table_markdown());
        return Ok(());
    }
    let fig = Figure::parse(which).ok_or_else(|| usage(format!("unknown table `{which}`")))?;
    let default = fig.default_bounds();
    let bounds = Bounds {
        a: a.map(parse_range).transpose()?.unwrap_or(default.a),
        b: b.map(parse_range).transpose()?.unwrap_or(default.b),
    };
    match ctx.format {
        Format::Text => print!("{}", tables::render_text(fig, &bounds, ctx.style)),
        Format::Csv => print!("{}", tables::render_csv(fig, &bounds)),
        Format::Json => print_json(&tables::render_json(fig, &bounds)),
    }
    Ok(())
}

/// Defaults from `EQUICOHOM_BOUNDS`, e.g. `box=10,cells=20,cp-box=6,cp-n=4,trunc=12,n=3,k=4`.
fn env_options() -> Result<Options, Failure> {
    let mut o = Options::default();
    let Ok(spec) = std::env::var("EQUICOHOM_BOUNDS") else {
        return Ok(o);
    };
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| usage(format!("EQUICOHOM_BOUNDS: bad entry `{part}`")))?;
        let bad = || usage(format!("EQUICOHOM_BOUNDS: bad value in `{part}`"));
        let int = || value.trim().parse::<i64>().map_err(|_| bad());
        match key.trim() {
            "box" => o.point_box = int()?,
            "cells" => o.cells = value.trim().parse().map_err(|_| bad())?,
            "cp-box" => o.cp_box = int()?,
            "cp-n" => o.cp_n = int()?,
            "trunc" => o.trunc = value.trim().parse().map_err(|_| bad())?,
            "n" => o.family_n = int()?,
            "k" => o.family_k = int()?,
            other => return Err(usage(format!("EQUICOHOM_BOUNDS: unknown key `{other}`"))),
        }
    }
    Ok(o)
}

#[allow(clippy::too_many_arguments)]
fn verify_cmd(
    ctx: &Ctx,
    suite: &str,
    point_box: Option<i64>,
    cells: Option<usize>,
    cp_box: Option<i64>,
    cp_n: Option<i64>,
    trunc: Option<u32>,
    n: Option<i64>,
    k: Option<i64>,
    jobs: usize,
) -> Outcome {
    let suites = Suite::parse(suite).ok_or_else(|| usage(format!("unknown suite `{suite}`")))?;
    let mut o = env_options()?;
    o.point_box = point_box.unwrap_or(o.point_box);
    o.cells = cells.unwrap_or(o.cells);
    o.cp_box = cp_box.unwrap_or(o.cp_box);
    o.cp_n = cp_n.unwrap_or(o.cp_n);
    o.trunc = trunc.unwrap_or(o.trunc);
    o.family_n = n.unwrap_or(o.family_n);
    o.family_k = k.unwrap_or(o.family_k);
    o.jobs = jobs;
    if o.cells < 2 {
        return Err(usage("--cells must be at least 2"));
    }
    let records = verify::run(&suites, &o);
    let passed = verify::all_passed(&records);
    match ctx.format {
        Format::Json => {
            for r in &records {
                println!("{}", serde_json::to_string(r).expect("serializable"));
            }
        }
        Format::Csv => {
            println!("suite,check,subject,passed,detail");
            for r in &records {
                println!(
                    "{}",
                    csv_line(&[
                        r.suite.into(),
                        r.check.into(),
                        r.subject.clone(),
                        r.passed.to_string(),
                        r.detail.clone()
                    ])
                );
            }
        }
        Format::Text => {
            for s in &suites {
                let mine: Vec<_> = records.iter().filter(|r| r.suite == s.name()).collect();
                let failed: Vec<_> = mine.iter().filter(|r| !r.passed).collect();
                let status = if failed.is_empty() { "PASS" } else { "FAIL" };
                println!(
                    "{status} {}: {} checks, {} failed",
                    s.name(),
                    mine.len(),
                    failed.len()
                );
                for r in failed {
                    println!("  {} {}: {}", r.check, r.subject, r.detail);
                }
            }
        }
    }
    if passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn run(cli: Cli) -> Outcome {
    let ctx = Ctx {
        format: cli.format,
        style: if cli.ascii {
            Style::ASCII
        } else {
            Style::UNICODE
        },
    };
    match cli.command {
        Command::Group { space, deg } => group(&ctx, space, &deg),
        Command::Mul { space, x, y } => mul(&ctx, space, &x, &y),
        Command::Chi { expr } => {
            let (a, u) = both(&chi_star(&parse_in(&CpSpace, &expr)?));
            emit(&ctx, "cp", a, u);
            Ok(())
        }
        Command::Restrict { side, expr } => restrict_cmd(&ctx, side, &expr),
        Command::Normalize { expr } => {
            let (a, u) = both(&parse_in(&CpSpace, &expr)?);
            emit(&ctx, "cp", a, u);
            Ok(())
        }
        Command::Table { which, a, b } => table(&ctx, &which, a.as_deref(), b.as_deref()),
        Command::Verify {
            suite,
            point_box,
            cells,
            cp_box,
            cp_n,
            trunc,
            n,
            k,
            jobs,
        } => verify_cmd(
            &ctx, &suite, point_box, cells, cp_box, cp_n, trunc, n, k, jobs,
        ),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
