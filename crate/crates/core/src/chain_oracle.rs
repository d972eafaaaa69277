//! Chain-level cross-checks: finite free cochain complexes for EP, built from
//! antipodal cells, compared with the closed-form table.

use std::ops::RangeInclusive;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mackey::{
    CatalogName, GroupFingerprint, MackeyCochainComplex, MackeyFunctor, MackeyMorphism,
};
use crate::matrix::IntMatrix;
use crate::point::{ep_group_at, RoDegree};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Twist {
    Integer,
    Lambda,
}

impl Twist {
    /// The `b` coordinate cohomology is reported at.
    pub fn b(self) -> i64 {
        match self {
            Twist::Integer => 0,
            Twist::Lambda => 1,
        }
    }

    /// Complex position holding RO degree `(a, b)`.
    fn position(self, a: i64) -> i64 {
        match self {
            Twist::Integer => a,
            Twist::Lambda => a + 1,
        }
    }
}

/// `1 - t` at even positions, `1 + t` at odd ones; `flip` swaps the two.
fn antipodal_differential(i: usize, flip: bool) -> MackeyMorphism {
    let (gg, s) = if i.is_multiple_of(2) != flip {
        (0, -1)
    } else {
        (2, 1)
    };
    MackeyMorphism {
        f_gg: IntMatrix::scalar(gg),
        f_ge: IntMatrix::from_rows(&[vec![1, s], vec![s, 1]], 2),
    }
}

/// `n` free cells in positions `0..n`. For the lambda twist position 0 is the
/// degree `-1 + Λ` term, so position `p` carries degree `(p - 1, 1)`.
pub fn sphere_antipodal_complex(n: usize, twist: Twist) -> MackeyCochainComplex {
    assert!(n >= 1, "at least one cell");
    let flip = twist == Twist::Lambda;
    let terms = vec![CatalogName::Ae.functor(); n];
    let diffs = (0..n - 1)
        .map(|i| antipodal_differential(i, flip))
        .collect();
    MackeyCochainComplex::new(0, terms, diffs)
}

/// Top-level multiplier of each differential, in order.
pub fn top_level_differentials(cx: &MackeyCochainComplex) -> Vec<i64> {
    cx.differentials
        .iter()
        .map(|d| {
            let x = d.f_gg.get(0, 0);
            i64::try_from(x).expect("small entry")
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EpRow {
    pub degree: RoDegree,
    pub computed: Option<CatalogName>,
    pub expected: CatalogName,
}

impl EpRow {
    pub fn matches(&self) -> bool {
        self.computed.as_ref() == Some(&self.expected)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EpTableReport {
    pub cells: usize,
    pub twist: Twist,
    pub rows: Vec<EpRow>,
}

impl EpTableReport {
    pub fn mismatches(&self) -> Vec<&EpRow> {
        self.rows.iter().filter(|r| !r.matches()).collect()
    }

    pub fn passed(&self) -> bool {
        self.rows.iter().all(EpRow::matches)
    }
}

/// Largest `a` whose complex position sits strictly below the top cell.
pub fn stable_limit(cells: usize, twist: Twist) -> i64 {
    cells as i64 - 2 - twist.b()
}

/// Compares `H^{(a, b)}` of the `cells`-cell truncation with the closed form.
pub fn verify_ep_table(
    cells: usize,
    twist: Twist,
    range: RangeInclusive<i64>,
) -> Result<EpTableReport> {
    let low = -twist.b();
    let high = stable_limit(cells, twist);
    if cells < 1 || *range.start() < low || *range.end() > high {
        return Err(Error::UnstableRange(format!(
            "a in {}..={} with {cells} cells needs {low} <= a <= {high}",
            range.start(),
            range.end()
        )));
    }
    let cx = sphere_antipodal_complex(cells, twist);
    let rows = range
        .map(|a| {
            let degree = RoDegree::new(a, twist.b());
            EpRow {
                degree,
                computed: cx.cohomology_at(twist.position(a)).classify(),
                expected: ep_group_at(degree),
            }
        })
        .collect();
    Ok(EpTableReport { cells, twist, rows })
}

#[derive(Clone, Debug, Serialize)]
pub struct LevelEReport {
    pub cells: usize,
    /// Level-e cohomology of the truncation in each position.
    pub cohomology: Vec<(i64, GroupFingerprint)>,
    /// Positions below the top where the augmented complex is not exact.
    pub augmented_defects: Vec<i64>,
}

impl LevelEReport {
    pub fn passed(&self) -> bool {
        let z = GroupFingerprint {
            free: 1,
            ..Default::default()
        };
        let top = self.cells as i64 - 1;
        self.augmented_defects.is_empty()
            && self.cohomology.iter().all(|(k, fp)| {
                if *k == 0 || *k == top {
                    *fp == z
                } else {
                    fp.is_zero()
                }
            })
    }
}

fn level_e(h: &MackeyFunctor) -> GroupFingerprint {
    h.level_ge.fingerprint()
}

/// The augmented complex `A -> Aₑ -> Aₑ -> ...` with `A` in position -1.
pub fn augmented_complex(cells: usize) -> MackeyCochainComplex {
    let base = sphere_antipodal_complex(cells, Twist::Integer);
    let unit = MackeyMorphism {
        f_gg: IntMatrix::from_rows(&[vec![1, 2]], 2),
        f_ge: IntMatrix::from_rows(&[vec![1], vec![1]], 1),
    };
    let mut terms = vec![CatalogName::A.functor()];
    terms.extend(base.terms);
    let mut diffs = vec![unit];
    diffs.extend(base.differentials);
    MackeyCochainComplex::new(-1, terms, diffs)
}

/// At level e the truncation is the cellular complex of `S^{n-1}`.
pub fn level_e_crosscheck(cells: usize) -> LevelEReport {
    assert!(cells >= 2, "at least two cells");
    let cx = sphere_antipodal_complex(cells, Twist::Integer);
    let cohomology = cx
        .degrees()
        .map(|k| (k, level_e(&cx.cohomology_at(k))))
        .collect();
    let aug = augmented_complex(cells);
    let augmented_defects = (-1..cells as i64 - 1)
        .filter(|&k| !level_e(&aug.cohomology_at(k)).is_zero())
        .collect();
    LevelEReport {
        cells,
        cohomology,
        augmented_defects,
    }
}
