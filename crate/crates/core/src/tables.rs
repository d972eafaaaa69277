//! Degree grids: `a` across, `b` down in descending order, one entry per
//! degree, naming either the Mackey functor or its generator.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use serde::Serialize;

use crate::expr::{Render, Style};
use crate::mackey::CatalogName;
use crate::point::ep::ep_key_at;
use crate::point::{
    eap_group_at, ep_group_at, point_group_at, point_mul, EapElement, EapGen, EpElement,
    PointElement, PointGen, RoDegree,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Figure {
    Fig1,
    Fig2,
    Fig3,
    Fig4,
    Fig5,
    Fig6,
}

impl Figure {
    pub const ALL: [Figure; 6] = [
        Figure::Fig1,
        Figure::Fig2,
        Figure::Fig3,
        Figure::Fig4,
        Figure::Fig5,
        Figure::Fig6,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Figure::Fig1 => "fig1",
            Figure::Fig2 => "fig2",
            Figure::Fig3 => "fig3",
            Figure::Fig4 => "fig4",
            Figure::Fig5 => "fig5",
            Figure::Fig6 => "fig6",
        }
    }

    pub fn parse(s: &str) -> Option<Figure> {
        Figure::ALL.into_iter().find(|f| f.name() == s)
    }

    pub fn title(self) -> &'static str {
        match self {
            Figure::Fig1 => "H_G^*(*;A)",
            Figure::Fig2 => "generators of H_G^*(*;A)",
            Figure::Fig3 => "H_G^*(EP)",
            Figure::Fig4 => "generators of H_G^*(EP)",
            Figure::Fig5 => "reduced H_G^*(E(A,P))",
            Figure::Fig6 => "generators of reduced H_G^*(E(A,P))",
        }
    }

    /// The window the figure is usually drawn in: `(a range, b range)`.
    pub fn default_bounds(self) -> Bounds {
        let (a, b) = match self {
            Figure::Fig1 => ((-7, 7), (-7, 7)),
            Figure::Fig2 => ((-5, 6), (-6, 5)),
            Figure::Fig3 | Figure::Fig4 => ((-5, 4), (-4, 5)),
            Figure::Fig5 | Figure::Fig6 => ((0, 9), (-6, 1)),
        };
        Bounds {
            a: a.0..=a.1,
            b: b.0..=b.1,
        }
    }

    pub fn is_generator_figure(self) -> bool {
        matches!(self, Figure::Fig2 | Figure::Fig4 | Figure::Fig6)
    }

    /// The entry at `d`; `None` for a zero group.
    pub fn entry(self, d: RoDegree, style: Style) -> Option<String> {
        let group = |c: CatalogName| {
            (!c.is_zero()).then(|| {
                if style.unicode {
                    c.unicode()
                } else {
                    c.ascii()
                }
            })
        };
        match self {
            Figure::Fig1 => group(point_group_at(d)),
            Figure::Fig3 => group(ep_group_at(d)),
            Figure::Fig5 => group(eap_group_at(d)),
            Figure::Fig2 if d == RoDegree::ZERO => Some("1".into()),
            Figure::Fig2 => PointGen::at(d).map(|g| PointElement::gen(g).render(style)),
            Figure::Fig4 => ep_key_at(d).map(|(m, k)| EpElement::monomial(m, k, 1).render(style)),
            Figure::Fig6 => EapGen::at(d).map(|g| EapElement::gen(g).render(style)),
        }
    }

    fn blank(self) -> &'static str {
        if self.is_generator_figure() {
            "."
        } else {
            "0"
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub a: RangeInclusive<i64>,
    pub b: RangeInclusive<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub a: i64,
    pub b: i64,
    pub entry: String,
}

/// Rows from the largest `b` down, each listing `a` ascending.
pub fn grid(fig: Figure, bounds: &Bounds, style: Style) -> Vec<(i64, Vec<String>)> {
    bounds
        .b
        .clone()
        .rev()
        .map(|b| {
            let row = bounds
                .a
                .clone()
                .map(|a| {
                    fig.entry(RoDegree::new(a, b), style)
                        .unwrap_or_else(|| fig.blank().to_string())
                })
                .collect();
            (b, row)
        })
        .collect()
}

fn width(s: &str) -> usize {
    s.chars().count()
}

fn pad(s: &str, w: usize) -> String {
    format!("{}{s}", " ".repeat(w.saturating_sub(width(s))))
}

/// A right-aligned text grid headed by the `a` values.
pub fn render_text(fig: Figure, bounds: &Bounds, style: Style) -> String {
    let rows = grid(fig, bounds, style);
    let corner = "b\\a";
    let header: Vec<String> = bounds.a.clone().map(|a| a.to_string()).collect();
    let mut widths: Vec<usize> = header.iter().map(|h| width(h)).collect();
    for (_, row) in &rows {
        for (w, e) in widths.iter_mut().zip(row) {
            *w = (*w).max(width(e));
        }
    }
    let label_w = rows
        .iter()
        .map(|(b, _)| width(&b.to_string()))
        .chain([width(corner)])
        .max()
        .unwrap_or(0);
    let mut out = String::new();
    let line = |label: &str, cells: &[String]| {
        let mut s = pad(label, label_w);
        for (c, w) in cells.iter().zip(&widths) {
            s.push_str("  ");
            s.push_str(&pad(c, *w));
        }
        s.trim_end().to_string()
    };
    writeln!(out, "{}", line(corner, &header)).unwrap();
    for (b, row) in &rows {
        writeln!(out, "{}", line(&b.to_string(), row)).unwrap();
    }
    out
}

pub fn render_csv(fig: Figure, bounds: &Bounds) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let header: Vec<String> = std::iter::once("b\\a".to_string())
        .chain(bounds.a.clone().map(|a| a.to_string()))
        .collect();
    w.write_record(&header).expect("in-memory write");
    for (b, row) in grid(fig, bounds, Style::ASCII) {
        w.write_record(std::iter::once(b.to_string()).chain(row))
            .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ASCII output")
}

pub fn render_json(fig: Figure, bounds: &Bounds) -> serde_json::Value {
    let cells: Vec<Cell> = grid(fig, bounds, Style::ASCII)
        .into_iter()
        .flat_map(|(b, row)| {
            bounds
                .a
                .clone()
                .zip(row)
                .map(move |(a, entry)| Cell { a, b, entry })
        })
        .collect();
    serde_json::json!({ "figure": fig.name(), "title": fig.title(), "cells": cells })
}

/// One family of products of canonical point-ring generators.
struct ProductRule {
    left: &'static str,
    right: &'static str,
    rule: &'static str,
    source: &'static str,
    samples: Vec<(PointGen, PointGen)>,
}

fn product_rules() -> Vec<ProductRule> {
    use PointGen::*;
    vec![
        ProductRule {
            left: "g",
            right: "y",
            rule: "g·y = τ(ρ(y)): 2y on ξ^n and τ(ι^{-2j}), 0 on ε-multiples and odd τ",
            source: "Frobenius with g = τ(1)",
            samples: vec![
                (G, G),
                (G, EpsXi(0, 2)),
                (G, EpsXi(1, 0)),
                (G, TauIota(4)),
                (G, TauIota(3)),
                (G, InvEpsKappa(2)),
            ],
        },
        ProductRule {
            left: "ε^a ξ^b",
            right: "ε^c ξ^d",
            rule: "ε^{a+c} ξ^{b+d}",
            source: "polynomial generators",
            samples: vec![(EpsXi(1, 0), EpsXi(2, 1)), (EpsXi(0, 1), EpsXi(0, 2))],
        },
        ProductRule {
            left: "ε^m ξ^n",
            right: "ε^{-j}κ",
            rule: "0 if n > 0; ε^{-(j-m)}κ if m ≤ j; 2ε^{m-j} otherwise",
            source: "ξκ = 0 and ε(ε^{-m}κ) = ε^{-(m-1)}κ, with εκ = 2ε",
            samples: vec![
                (EpsXi(1, 0), InvEpsKappa(3)),
                (EpsXi(3, 0), InvEpsKappa(3)),
                (EpsXi(5, 0), InvEpsKappa(2)),
                (EpsXi(0, 1), InvEpsKappa(1)),
            ],
        },
        ProductRule {
            left: "ε^m ξ^n",
            right: "τ(ι^{-l})",
            rule: "0 if m > 0; τ(ι^{-(l-2n)}) otherwise",
            source: "ρ(ε) = 0, ξτ(ι^{-n}) = τ(ι^{-(n-2)}), Frobenius below l = 2",
            samples: vec![
                (EpsXi(1, 0), TauIota(4)),
                (EpsXi(0, 1), TauIota(5)),
                (EpsXi(0, 2), TauIota(4)),
                (EpsXi(0, 2), TauIota(3)),
            ],
        },
        ProductRule {
            left: "ε^m ξ^n",
            right: "ε^{-j}τ(ι^{-(2k+1)})",
            rule: "0 if n ≥ k or m > j; ε^{-(j-m)}τ(ι^{-(2(k-n)+1)}) otherwise",
            source: "ε and ξ relations; beyond them the target group vanishes",
            samples: vec![
                (EpsXi(1, 0), InvEpsTau(2, 1)),
                (EpsXi(2, 0), InvEpsTau(2, 1)),
                (EpsXi(3, 0), InvEpsTau(2, 1)),
                (EpsXi(0, 1), InvEpsTau(1, 2)),
                (EpsXi(0, 1), InvEpsTau(1, 1)),
            ],
        },
        ProductRule {
            left: "ε^{-i}κ",
            right: "ε^{-j}κ",
            rule: "2ε^{-(i+j)}κ",
            source: "derived: ε^{i+j} is injective on the target and κ² = 2κ",
            samples: vec![
                (InvEpsKappa(1), InvEpsKappa(1)),
                (InvEpsKappa(2), InvEpsKappa(3)),
            ],
        },
        ProductRule {
            left: "ε^{-i}κ",
            right: "τ(ι^{-l}), ε^{-j}τ(ι^{-(2k+1)})",
            rule: "0",
            source: "derived: ε^i is injective on the target and κτ(x) = τ(ρ(κ)x) = 0",
            samples: vec![
                (InvEpsKappa(1), TauIota(2)),
                (InvEpsKappa(2), TauIota(3)),
                (InvEpsKappa(1), InvEpsTau(1, 1)),
            ],
        },
        ProductRule {
            left: "τ(ι^{-l})",
            right: "τ(ι^{-l'})",
            rule: "2τ(ι^{-(l+l')}) if l, l' even; 0 otherwise",
            source: "derived: Frobenius, τ(x)τ(y) = τ((1 + t)x·y)",
            samples: vec![
                (TauIota(2), TauIota(2)),
                (TauIota(2), TauIota(3)),
                (TauIota(3), TauIota(3)),
            ],
        },
        ProductRule {
            left: "τ(ι^{-l}), ε^{-i}τ(ι^{-(2k+1)})",
            right: "ε^{-j}τ(ι^{-(2k'+1)})",
            rule: "0",
            source: "derived: ρ vanishes on the ε^{-m}τ family, so Frobenius gives 0",
            samples: vec![
                (TauIota(2), InvEpsTau(1, 1)),
                (InvEpsTau(1, 1), InvEpsTau(2, 1)),
            ],
        },
    ]
}

/// The audit document for the point-ring multiplication table.
pub fn product_table_markdown() -> String {
    let show = |g: PointGen| PointElement::gen(g).render(Style::ASCII);
    let mut out = String::new();
    writeln!(out, "# Point-ring product table\n").unwrap();
    writeln!(
        out,
        "Products of canonical generators at level G/G. Generated by `equicohom table products`; do not edit.\n"
    )
    .unwrap();
    writeln!(out, "| left | right | product | justification |").unwrap();
    writeln!(out, "|---|---|---|---|").unwrap();
    for r in product_rules() {
        writeln!(
            out,
            "| {} | {} | {} | {} |",
            r.left, r.right, r.rule, r.source
        )
        .unwrap();
    }
    writeln!(out, "\n## Samples\n").unwrap();
    writeln!(out, "| x | y | x*y |").unwrap();
    writeln!(out, "|---|---|---|").unwrap();
    for r in product_rules() {
        for (x, y) in r.samples {
            let p = point_mul(&PointElement::gen(x), &PointElement::gen(y));
            writeln!(
                out,
                "| `{}` | `{}` | `{}` |",
                show(x),
                show(y),
                p.render(Style::ASCII)
            )
            .unwrap();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure_one_has_a_at_the_origin() {
        let b = Figure::Fig1.default_bounds();
        let rows = grid(Figure::Fig1, &b, Style::ASCII);
        let (b0, row) = &rows[7];
        assert_eq!(*b0, 0);
        assert_eq!(row[7], "A");
        assert!(rows
            .iter()
            .filter(|(b, _)| *b != 0)
            .all(|(_, r)| r[7] == "<Z>"));
    }

    #[test]
    #[allow(clippy::reversed_empty_ranges)]
    fn empty_bounds_give_a_header() {
        let b = Bounds { a: 1..=0, b: 1..=0 };
        assert_eq!(render_text(Figure::Fig1, &b, Style::ASCII), "b\\a\n");
        assert_eq!(render_csv(Figure::Fig3, &b), "b\\a\n");
    }

    #[test]
    fn generator_names() {
        assert_eq!(
            Figure::Fig2
                .entry(RoDegree::new(3, -5), Style::UNICODE)
                .unwrap(),
            "ε⁻²τ(ι⁻³)"
        );
        assert_eq!(
            Figure::Fig4
                .entry(RoDegree::new(2, 5), Style::UNICODE)
                .unwrap(),
            "ε⁷ξ⁻¹"
        );
        assert_eq!(
            Figure::Fig6
                .entry(RoDegree::new(3, 0), Style::UNICODE)
                .unwrap(),
            "ε³τ₃"
        );
        assert_eq!(
            Figure::Fig6
                .entry(RoDegree::new(0, -1), Style::ASCII)
                .unwrap(),
            "eps^-1*kappa"
        );
    }
}
