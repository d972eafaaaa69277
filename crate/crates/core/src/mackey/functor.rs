//! Z/2 Mackey functors: two levels, restriction, transfer and the Weyl action.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use super::abgroup::{self, AbGroup, GroupFingerprint};
use crate::matrix::IntMatrix;

/// The indecomposable functors that occur in the computations, plus `Zero`
/// and finite direct sums of the others.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CatalogName {
    Zero,
    A,
    Ae,
    BracketZ,
    BracketZ2,
    L,
    Lminus,
    R,
    Rminus,
    /// Multiplicities of indecomposables; never empty, never a single `(x, 1)`.
    Sum(Vec<(CatalogName, u32)>),
}

impl CatalogName {
    pub const INDECOMPOSABLE: [CatalogName; 8] = [
        CatalogName::A,
        CatalogName::Ae,
        CatalogName::BracketZ,
        CatalogName::BracketZ2,
        CatalogName::L,
        CatalogName::Lminus,
        CatalogName::R,
        CatalogName::Rminus,
    ];

    /// Normalizes a multiset of names into a single `CatalogName`.
    pub fn sum<I: IntoIterator<Item = CatalogName>>(parts: I) -> CatalogName {
        let mut counts: Vec<(CatalogName, u32)> = Vec::new();
        let mut push = |name: CatalogName, k: u32| {
            if k == 0 || name == CatalogName::Zero {
                return;
            }
            match counts.iter_mut().find(|(n, _)| *n == name) {
                Some((_, c)) => *c += k,
                None => counts.push((name, k)),
            }
        };
        for part in parts {
            match part {
                CatalogName::Sum(inner) => inner.into_iter().for_each(|(n, k)| push(n, k)),
                other => push(other, 1),
            }
        }
        counts.sort();
        match counts.len() {
            0 => CatalogName::Zero,
            1 if counts[0].1 == 1 => counts.pop().unwrap().0,
            _ => CatalogName::Sum(counts),
        }
    }

    pub fn is_zero(&self) -> bool {
        *self == CatalogName::Zero
    }

    pub fn ascii(&self) -> String {
        self.render(false)
    }

    pub fn unicode(&self) -> String {
        self.render(true)
    }

    fn render(&self, unicode: bool) -> String {
        let s = match (self, unicode) {
            (CatalogName::Zero, _) => "0",
            (CatalogName::A, _) => "A",
            (CatalogName::Ae, false) => "A_e",
            (CatalogName::Ae, true) => "Aₑ",
            (CatalogName::BracketZ, false) => "<Z>",
            (CatalogName::BracketZ, true) => "⟨Z⟩",
            (CatalogName::BracketZ2, false) => "<Z/2>",
            (CatalogName::BracketZ2, true) => "⟨Z/2⟩",
            (CatalogName::L, _) => "L",
            (CatalogName::Lminus, false) => "L_-",
            (CatalogName::Lminus, true) => "L₋",
            (CatalogName::R, _) => "R",
            (CatalogName::Rminus, false) => "R_-",
            (CatalogName::Rminus, true) => "R₋",
            (CatalogName::Sum(parts), _) => {
                let parts: Vec<String> = parts
                    .iter()
                    .map(|(n, k)| {
                        if *k == 1 {
                            n.render(unicode)
                        } else {
                            format!("{k}{}", n.render(unicode))
                        }
                    })
                    .collect();
                return parts.join(" + ");
            }
        };
        s.to_string()
    }

    /// Parses the ASCII rendering of an indecomposable name (or `0`).
    pub fn parse(s: &str) -> Option<CatalogName> {
        Some(match s.trim() {
            "0" => CatalogName::Zero,
            "A" => CatalogName::A,
            "A_e" => CatalogName::Ae,
            "<Z>" => CatalogName::BracketZ,
            "<Z/2>" => CatalogName::BracketZ2,
            "L" => CatalogName::L,
            "L_-" => CatalogName::Lminus,
            "R" => CatalogName::R,
            "R_-" => CatalogName::Rminus,
            _ => return None,
        })
    }

    /// The functor this name stands for, as an explicit diagram.
    pub fn functor(&self) -> MackeyFunctor {
        let m = |rows: &[Vec<i64>], cols: usize| IntMatrix::from_rows(rows, cols);
        match self {
            CatalogName::Zero => MackeyFunctor::zero(),
            // A(G) = Z{1, g}; res(1) = 1, res(g) = 2, tr(1) = g
            CatalogName::A => MackeyFunctor::new(
                AbGroup::free(2),
                AbGroup::free(1),
                m(&[vec![1, 2]], 2),
                m(&[vec![0], vec![1]], 1),
                m(&[vec![1]], 1),
            ),
            // Z[G] = Z{1, t}
            CatalogName::Ae => MackeyFunctor::new(
                AbGroup::free(1),
                AbGroup::free(2),
                m(&[vec![1], vec![1]], 1),
                m(&[vec![1, 1]], 2),
                m(&[vec![0, 1], vec![1, 0]], 2),
            ),
            CatalogName::BracketZ => MackeyFunctor::new(
                AbGroup::free(1),
                AbGroup::zero(),
                IntMatrix::zeros(0, 1),
                IntMatrix::zeros(1, 0),
                IntMatrix::zeros(0, 0),
            ),
            CatalogName::BracketZ2 => MackeyFunctor::new(
                AbGroup::cyclic(2),
                AbGroup::zero(),
                IntMatrix::zeros(0, 1),
                IntMatrix::zeros(1, 0),
                IntMatrix::zeros(0, 0),
            ),
            CatalogName::L => MackeyFunctor::new(
                AbGroup::free(1),
                AbGroup::free(1),
                IntMatrix::scalar(2),
                IntMatrix::scalar(1),
                IntMatrix::scalar(1),
            ),
            CatalogName::R => MackeyFunctor::new(
                AbGroup::free(1),
                AbGroup::free(1),
                IntMatrix::scalar(1),
                IntMatrix::scalar(2),
                IntMatrix::scalar(1),
            ),
            CatalogName::Lminus => MackeyFunctor::new(
                AbGroup::cyclic(2),
                AbGroup::free(1),
                IntMatrix::scalar(0),
                IntMatrix::scalar(1),
                IntMatrix::scalar(-1),
            ),
            CatalogName::Rminus => MackeyFunctor::new(
                AbGroup::zero(),
                AbGroup::free(1),
                IntMatrix::zeros(1, 0),
                IntMatrix::zeros(0, 1),
                IntMatrix::scalar(-1),
            ),
            CatalogName::Sum(parts) => parts
                .iter()
                .flat_map(|(n, k)| std::iter::repeat_n(n, *k as usize))
                .fold(MackeyFunctor::zero(), |acc, n| acc.direct_sum(&n.functor())),
        }
    }
}

impl serde::Serialize for CatalogName {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.ascii())
    }
}

impl fmt::Display for CatalogName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ascii())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MackeyFunctor {
    pub level_gg: AbGroup,
    pub level_ge: AbGroup,
    /// `level_ge.generators() x level_gg.generators()`
    pub res: IntMatrix,
    /// `level_gg.generators() x level_ge.generators()`
    pub tr: IntMatrix,
    pub weyl: IntMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    Shape(&'static str),
    NotWellDefined(&'static str),
    WeylNotInvolution,
    WeylRes,
    TrWeyl,
    ResTr,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::Shape(map) => write!(f, "{map} has the wrong shape"),
            AxiomViolation::NotWellDefined(map) => write!(f, "{map} is not well defined"),
            AxiomViolation::WeylNotInvolution => write!(f, "weyl∘weyl ≠ 1"),
            AxiomViolation::WeylRes => write!(f, "weyl∘res ≠ res"),
            AxiomViolation::TrWeyl => write!(f, "tr∘weyl ≠ tr"),
            AxiomViolation::ResTr => write!(f, "res∘tr ≠ 1+weyl"),
        }
    }
}

impl MackeyFunctor {
    pub fn new(
        level_gg: AbGroup,
        level_ge: AbGroup,
        res: IntMatrix,
        tr: IntMatrix,
        weyl: IntMatrix,
    ) -> Self {
        MackeyFunctor {
            level_gg,
            level_ge,
            res,
            tr,
            weyl,
        }
    }

    pub fn zero() -> Self {
        let z = || IntMatrix::zeros(0, 0);
        MackeyFunctor::new(AbGroup::zero(), AbGroup::zero(), z(), z(), z())
    }

    pub fn is_zero(&self) -> bool {
        self.level_gg.is_trivial() && self.level_ge.is_trivial()
    }

    pub fn direct_sum(&self, other: &MackeyFunctor) -> MackeyFunctor {
        MackeyFunctor::new(
            self.level_gg.direct_sum(&other.level_gg),
            self.level_ge.direct_sum(&other.level_ge),
            self.res.block_diag(&other.res),
            self.tr.block_diag(&other.tr),
            self.weyl.block_diag(&other.weyl),
        )
    }

    /// Every violated axiom; empty when `self` is a Mackey functor.
    pub fn check_axioms(&self) -> Vec<AxiomViolation> {
        let (p, q) = (self.level_gg.generators(), self.level_ge.generators());
        let mut out = Vec::new();
        for (name, m, shape) in [
            ("res", &self.res, (q, p)),
            ("tr", &self.tr, (p, q)),
            ("weyl", &self.weyl, (q, q)),
        ] {
            if (m.rows(), m.cols()) != shape {
                out.push(AxiomViolation::Shape(name));
            }
        }
        if !out.is_empty() {
            return out;
        }
        let (gg, ge) = (&self.level_gg, &self.level_ge);
        if !abgroup::is_well_defined(gg, ge, &self.res) {
            out.push(AxiomViolation::NotWellDefined("res"));
        }
        if !abgroup::is_well_defined(ge, gg, &self.tr) {
            out.push(AxiomViolation::NotWellDefined("tr"));
        }
        if !abgroup::is_well_defined(ge, ge, &self.weyl) {
            out.push(AxiomViolation::NotWellDefined("weyl"));
        }
        let id = IntMatrix::identity(q);
        if !abgroup::maps_equal(ge, &(&self.weyl * &self.weyl), &id) {
            out.push(AxiomViolation::WeylNotInvolution);
        }
        if !abgroup::maps_equal(ge, &(&self.weyl * &self.res), &self.res) {
            out.push(AxiomViolation::WeylRes);
        }
        if !abgroup::maps_equal(gg, &(&self.tr * &self.weyl), &self.tr) {
            out.push(AxiomViolation::TrWeyl);
        }
        if !abgroup::maps_equal(ge, &(&self.res * &self.tr), &(&id + &self.weyl)) {
            out.push(AxiomViolation::ResTr);
        }
        out
    }

    pub fn fingerprint(&self) -> MackeyFingerprint {
        let (gg, ge) = (&self.level_gg, &self.level_ge);
        let q = ge.generators();
        let id = IntMatrix::identity(q);
        let plus = &id + &self.weyl;
        let minus = &id - &self.weyl;
        let im_co = |target: &AbGroup, f: &IntMatrix| {
            [
                abgroup::image(target, f).fingerprint(),
                abgroup::cokernel(target, f).fingerprint(),
            ]
        };
        let [res_im, res_co] = im_co(ge, &self.res);
        let [tr_im, tr_co] = im_co(gg, &self.tr);
        let [p_im, p_co] = im_co(ge, &plus);
        let [m_im, m_co] = im_co(ge, &minus);
        MackeyFingerprint([
            gg.fingerprint(),
            ge.fingerprint(),
            res_im,
            res_co,
            tr_im,
            tr_co,
            p_im,
            p_co,
            m_im,
            m_co,
        ])
    }

    /// The catalog name of `self`, or `None` when no unique decomposition into
    /// catalog functors matches the fingerprint.
    pub fn classify(&self) -> Option<CatalogName> {
        let target = self.fingerprint();
        if target.levels_zero() {
            return Some(CatalogName::Zero);
        }
        let basis: Vec<MackeyFingerprint> = CatalogName::INDECOMPOSABLE
            .iter()
            .map(|n| n.functor().fingerprint())
            .collect();
        let mut solutions = Vec::new();
        let mut counts = vec![0u32; basis.len()];
        search(&basis, 0, target, &mut counts, &mut solutions);
        if solutions.len() != 1 {
            return None;
        }
        let sol = solutions.pop().unwrap();
        Some(CatalogName::sum(
            CatalogName::INDECOMPOSABLE
                .iter()
                .zip(sol)
                .flat_map(|(n, k)| std::iter::repeat_n(n.clone(), k as usize)),
        ))
    }

    /// Maps expressed in invariant-factor coordinates.
    pub fn normalized_maps(&self) -> [IntMatrix; 3] {
        let (gg, ge) = (&self.level_gg, &self.level_ge);
        [
            &(ge.to_normal() * &self.res) * gg.from_normal(),
            &(gg.to_normal() * &self.tr) * ge.from_normal(),
            &(ge.to_normal() * &self.weyl) * ge.from_normal(),
        ]
    }

    pub fn to_json(&self) -> Value {
        let [res, tr, weyl] = self.normalized_maps();
        json!({
            "levelGG": factors_json(self.level_gg.invariant_factors()),
            "levelGe": factors_json(self.level_ge.invariant_factors()),
            "res": matrix_json(&res),
            "tr": matrix_json(&tr),
            "weyl": matrix_json(&weyl),
        })
    }
}

fn big_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

fn factors_json(f: &[BigInt]) -> Value {
    Value::Array(f.iter().map(big_json).collect())
}

fn matrix_json(m: &IntMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(big_json).collect()))
            .collect(),
    )
}

/// Additive isomorphism invariants: both levels, then image and cokernel of
/// res, tr, 1+weyl and 1-weyl.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MackeyFingerprint(pub [GroupFingerprint; 10]);

impl MackeyFingerprint {
    fn levels_zero(&self) -> bool {
        self.0[0].is_zero() && self.0[1].is_zero()
    }

    fn all_zero(&self) -> bool {
        self.0.iter().all(GroupFingerprint::is_zero)
    }

    /// `self - k * other`, if it stays nonnegative in every component.
    fn checked_sub(&self, other: &Self, k: u32) -> Option<Self> {
        let mut out = self.clone();
        for (slot, sub) in out.0.iter_mut().zip(&other.0) {
            let sub = sub.scale(k);
            slot.free = slot.free.checked_sub(sub.free)?;
            for (q, c) in sub.torsion {
                let have = slot.torsion.get(&q).copied().unwrap_or(0);
                let left = have.checked_sub(c)?;
                if left == 0 {
                    slot.torsion.remove(&q);
                } else {
                    slot.torsion.insert(q, left);
                }
            }
        }
        Some(out)
    }
}

fn search(
    basis: &[MackeyFingerprint],
    i: usize,
    remaining: MackeyFingerprint,
    counts: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    if out.len() > 1 {
        return;
    }
    if i == basis.len() {
        if remaining.all_zero() {
            out.push(counts.clone());
        }
        return;
    }
    let mut k = 0;
    while let Some(rest) = remaining.checked_sub(&basis[i], k) {
        counts[i] = k;
        search(basis, i + 1, rest, counts, out);
        k += 1;
    }
    counts[i] = 0;
}
