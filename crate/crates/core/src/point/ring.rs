//! The point ring at level G/G, its level-G/e companion Z[ι, ι⁻¹], and the
//! restriction and transfer between them.
//!
//! Products are given by an explicit case table on canonical generators.
//! Rules beyond the classical relation list follow from Frobenius
//! reciprocity (`x·τ(y) = τ(ρ(x)y)`), from `κ = 2 − g`, and from uniqueness of
//! ε-divisible elements; `tables/PRODUCT_TABLE.md` records each derivation.
//! The table is total, so no product is left unspecified.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use super::degree::RoDegree;
use crate::mackey::CatalogName;

/// Canonical additive generators of the point ring at level G/G.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PointGen {
    One,
    G,
    /// `ε^m ξ^n`, `(m, n) != (0, 0)`
    EpsXi(u32, u32),
    /// `ε^{-m} κ`, `m >= 1`
    InvEpsKappa(u32),
    /// `τ(ι^{-n})`, `n >= 2`
    TauIota(u32),
    /// `ε^{-m} τ(ι^{-(2k+1)})`, `m >= 1`, `k >= 1`
    InvEpsTau(u32, u32),
}

impl PointGen {
    pub fn is_valid(self) -> bool {
        match self {
            PointGen::One | PointGen::G => true,
            PointGen::EpsXi(m, n) => (m, n) != (0, 0),
            PointGen::InvEpsKappa(m) => m >= 1,
            PointGen::TauIota(n) => n >= 2,
            PointGen::InvEpsTau(m, k) => m >= 1 && k >= 1,
        }
    }

    pub fn degree(self) -> RoDegree {
        let (a, b) = match self {
            PointGen::One | PointGen::G => (0, 0),
            PointGen::EpsXi(m, n) => (-2 * n as i64, m as i64 + 2 * n as i64),
            PointGen::InvEpsKappa(m) => (0, -(m as i64)),
            PointGen::TauIota(n) => (n as i64, -(n as i64)),
            PointGen::InvEpsTau(m, k) => {
                let t = 2 * k as i64 + 1;
                (t, -t - m as i64)
            }
        };
        RoDegree::new(a, b)
    }

    /// True when the generator spans a copy of Z/2.
    pub fn is_torsion(self) -> bool {
        match self {
            PointGen::EpsXi(m, n) => m > 0 && n > 0,
            PointGen::TauIota(n) => n % 2 == 1,
            PointGen::InvEpsTau(..) => true,
            _ => false,
        }
    }

    /// The unique generator in a nonzero degree other than 0.
    pub fn at(d: RoDegree) -> Option<PointGen> {
        let (a, b) = (d.a, d.b);
        let s = a + b;
        let g = if a <= 0 && a % 2 == 0 && s >= 0 && (a, b) != (0, 0) {
            PointGen::EpsXi(s as u32, (-a / 2) as u32)
        } else if a == 0 && b < 0 {
            PointGen::InvEpsKappa(-b as u32)
        } else if a >= 2 && s == 0 {
            PointGen::TauIota(a as u32)
        } else if a >= 3 && a % 2 == 1 && s < 0 {
            PointGen::InvEpsTau(-s as u32, ((a - 1) / 2) as u32)
        } else {
            return None;
        };
        Some(g)
    }
}

/// The additive basis of the point ring in degree `d` at level G/G.
pub fn point_basis(d: RoDegree) -> Vec<PointGen> {
    if d == RoDegree::ZERO {
        vec![PointGen::One, PointGen::G]
    } else {
        PointGen::at(d).into_iter().collect()
    }
}

/// The Mackey functor in degree `a + bΛ`.
pub fn point_group_at(d: RoDegree) -> CatalogName {
    let (a, b) = (d.a, d.b);
    let even = a % 2 == 0;
    if a == 0 && b == 0 {
        CatalogName::A
    } else if a + b == 0 && a < 0 && even {
        CatalogName::R
    } else if a + b == 0 && a <= 1 && !even {
        CatalogName::Rminus
    } else if a + b == 0 && a > 0 && even {
        CatalogName::L
    } else if a + b == 0 && a > 1 && !even {
        CatalogName::Lminus
    } else if a == 0 {
        CatalogName::BracketZ
    } else if (a + b > 0 && a < 0 && even) || (a + b < 0 && a > 1 && !even) {
        CatalogName::BracketZ2
    } else {
        CatalogName::Zero
    }
}

pub(crate) fn cmul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("coefficient overflow")
}

pub(crate) fn cadd(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("coefficient overflow")
}

/// A finite sum of canonical generators with integer coefficients; torsion
/// generators carry coefficients in `{0, 1}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointElement {
    terms: BTreeMap<PointGen, i64>,
}

impl PointElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::gen(PointGen::One)
    }

    pub fn g() -> Self {
        Self::gen(PointGen::G)
    }

    /// `κ = 2 − g`
    pub fn kappa() -> Self {
        Self::a_g(2, -1)
    }

    /// `x + y·g`
    pub fn a_g(x: i64, y: i64) -> Self {
        Self::term(PointGen::One, x) + Self::term(PointGen::G, y)
    }

    pub fn gen(g: PointGen) -> Self {
        Self::term(g, 1)
    }

    pub fn term(g: PointGen, c: i64) -> Self {
        assert!(g.is_valid(), "invalid generator {g:?}");
        let mut e = Self::zero();
        e.add_term(g, c);
        e
    }

    pub fn eps_xi(m: u32, n: u32) -> Self {
        if (m, n) == (0, 0) {
            Self::one()
        } else {
            Self::gen(PointGen::EpsXi(m, n))
        }
    }

    pub fn eps(m: u32) -> Self {
        Self::eps_xi(m, 0)
    }

    pub fn xi(n: u32) -> Self {
        Self::eps_xi(0, n)
    }

    /// `ε^{-m} κ`, with `m = 0` giving `κ`.
    pub fn inv_eps_kappa(m: u32) -> Self {
        if m == 0 {
            Self::kappa()
        } else {
            Self::gen(PointGen::InvEpsKappa(m))
        }
    }

    /// `ε^{-m} τ(ι^{-(2k+1)})`, with `m = 0` giving `τ(ι^{-(2k+1)})`.
    pub fn inv_eps_tau(m: u32, k: u32) -> Self {
        assert!(k >= 1);
        if m == 0 {
            Self::gen(PointGen::TauIota(2 * k + 1))
        } else {
            Self::gen(PointGen::InvEpsTau(m, k))
        }
    }

    /// `τ(ι^{-n})` for any integer `n`.
    ///
    /// Outside `n >= 2` this follows from Frobenius with `t·ι = −ι`:
    /// `τ(ι^{-1})` lands in a functor with zero top level, `τ(1) = g`, and
    /// `τ(ι^{2j}) = τ(ρ(ξ^j)) = 2ξ^j` while odd positive powers vanish.
    pub fn tau_iota(n: i64) -> Self {
        match n {
            n if n >= 2 => Self::gen(PointGen::TauIota(n as u32)),
            1 => Self::zero(),
            0 => Self::g(),
            n if n % 2 == 0 => Self::term(PointGen::EpsXi(0, (-n / 2) as u32), 2),
            _ => Self::zero(),
        }
    }

    fn add_term(&mut self, g: PointGen, c: i64) {
        let entry = self.terms.entry(g).or_insert(0);
        *entry = cadd(*entry, c);
        if g.is_torsion() {
            *entry = entry.rem_euclid(2);
        }
        if *entry == 0 {
            self.terms.remove(&g);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (PointGen, i64)> + '_ {
        self.terms.iter().map(|(g, c)| (*g, *c))
    }

    pub fn coefficient(&self, g: PointGen) -> i64 {
        self.terms.get(&g).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// The common degree of all terms, if the element is nonzero and homogeneous.
    pub fn degree(&self) -> Option<RoDegree> {
        let mut degs = self.terms.keys().map(|g| g.degree());
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    /// The homogeneous part in degree `d`.
    pub fn part(&self, d: RoDegree) -> PointElement {
        let mut e = Self::zero();
        for (g, c) in self.terms() {
            if g.degree() == d {
                e.add_term(g, c);
            }
        }
        e
    }

    pub fn degrees(&self) -> Vec<RoDegree> {
        let mut v: Vec<RoDegree> = self.terms.keys().map(|g| g.degree()).collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut e = Self::zero();
        for (g, c) in self.terms() {
            e.add_term(g, cmul(c, k));
        }
        e
    }

    /// `(1 − g)·x`
    pub fn one_minus_g(&self) -> Self {
        self - &(&Self::g() * self)
    }

    /// `ρ(x) ∈ Z[ι, ι⁻¹]`
    pub fn res(&self) -> LevelE {
        let mut out = LevelE::zero();
        for (g, c) in self.terms() {
            let (k, r) = match g {
                PointGen::One => (0, 1),
                PointGen::G => (0, 2),
                PointGen::EpsXi(0, n) => (2 * n as i64, 1),
                PointGen::TauIota(n) if n % 2 == 0 => (-(n as i64), 2),
                _ => continue,
            };
            out.add_term(k, cmul(c, r));
        }
        out
    }
}

fn gen_mul(x: PointGen, y: PointGen) -> PointElement {
    use PointGen::*;
    type P = PointElement;
    match (x, y) {
        (One, y) | (y, One) => P::gen(y),
        (G, G) => P::term(G, 2),
        (G, y) | (y, G) => g_action(y),
        (EpsXi(a, b), EpsXi(c, d)) => P::eps_xi(a + c, b + d),
        (EpsXi(m, n), InvEpsKappa(j)) | (InvEpsKappa(j), EpsXi(m, n)) => {
            // ξκ = 0 and ε^j is injective on the target, so any ξ kills it
            if n > 0 {
                P::zero()
            } else if m <= j {
                P::inv_eps_kappa(j - m)
            } else {
                // ε^{m-j}κ = ε^{m-j}(2 − g) and gε = 0
                P::term(EpsXi(m - j, 0), 2)
            }
        }
        (EpsXi(m, n), TauIota(l)) | (TauIota(l), EpsXi(m, n)) => {
            // ρ(ε) = 0; ξ^n τ(ι^{-l}) = τ(ι^{2n-l})
            if m > 0 {
                P::zero()
            } else {
                P::tau_iota(l as i64 - 2 * n as i64)
            }
        }
        (EpsXi(m, n), InvEpsTau(j, k)) | (InvEpsTau(j, k), EpsXi(m, n)) => {
            if n >= k {
                return P::zero();
            }
            let k = k - n;
            match m.cmp(&j) {
                std::cmp::Ordering::Less => P::gen(InvEpsTau(j - m, k)),
                std::cmp::Ordering::Equal => P::gen(TauIota(2 * k + 1)),
                std::cmp::Ordering::Greater => P::zero(),
            }
        }
        // ε^{i+j} carries both sides injectively onto κ² = 2κ
        (InvEpsKappa(i), InvEpsKappa(j)) => P::term(InvEpsKappa(i + j), 2),
        // ε^j carries these onto κ·τ(ι^{-(2k+1)}) = 0, injectively
        (InvEpsKappa(_), TauIota(_) | InvEpsTau(..))
        | (TauIota(_) | InvEpsTau(..), InvEpsKappa(_)) => P::zero(),
        // Frobenius: τ(x)τ(y) = τ(ρτ(x)·y) = τ((1 + t)x·y)
        (TauIota(l), TauIota(l2)) => {
            if l % 2 == 0 && l2 % 2 == 0 {
                P::term(TauIota(l + l2), 2)
            } else {
                P::zero()
            }
        }
        // ρ vanishes on the ε⁻ᵐτ family, so Frobenius gives zero
        (TauIota(_), InvEpsTau(..))
        | (InvEpsTau(..), TauIota(_))
        | (InvEpsTau(..), InvEpsTau(..)) => P::zero(),
    }
}

/// `g·y = τ(ρ(y))`
fn g_action(y: PointGen) -> PointElement {
    match y {
        PointGen::EpsXi(0, _) => PointElement::term(y, 2),
        PointGen::TauIota(n) if n % 2 == 0 => PointElement::term(y, 2),
        PointGen::One => PointElement::g(),
        PointGen::G => PointElement::term(PointGen::G, 2),
        _ => PointElement::zero(),
    }
}

pub fn point_mul(x: &PointElement, y: &PointElement) -> PointElement {
    let mut out = PointElement::zero();
    for (g, c) in x.terms() {
        for (h, d) in y.terms() {
            let cd = cmul(c, d);
            for (k, e) in gen_mul(g, h).terms() {
                out.add_term(k, cmul(cd, e));
            }
        }
    }
    out
}

impl Add for &PointElement {
    type Output = PointElement;
    fn add(self, rhs: &PointElement) -> PointElement {
        let mut e = self.clone();
        for (g, c) in rhs.terms() {
            e.add_term(g, c);
        }
        e
    }
}

impl Sub for &PointElement {
    type Output = PointElement;
    fn sub(self, rhs: &PointElement) -> PointElement {
        self + &(-rhs)
    }
}

impl Neg for &PointElement {
    type Output = PointElement;
    fn neg(self) -> PointElement {
        self.scale(-1)
    }
}

impl Mul for &PointElement {
    type Output = PointElement;
    fn mul(self, rhs: &PointElement) -> PointElement {
        point_mul(self, rhs)
    }
}

impl Add for PointElement {
    type Output = PointElement;
    fn add(self, rhs: PointElement) -> PointElement {
        &self + &rhs
    }
}

impl Sub for PointElement {
    type Output = PointElement;
    fn sub(self, rhs: PointElement) -> PointElement {
        &self - &rhs
    }
}

impl Mul for PointElement {
    type Output = PointElement;
    fn mul(self, rhs: PointElement) -> PointElement {
        &self * &rhs
    }
}

impl Neg for PointElement {
    type Output = PointElement;
    fn neg(self) -> PointElement {
        -&self
    }
}

/// An element of `Z[ι, ι⁻¹]`, the point ring at level G/e; `|ι| = −1 + Λ`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LevelE {
    terms: BTreeMap<i64, i64>,
}

impl LevelE {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `c·ι^k`
    pub fn monomial(k: i64, c: i64) -> Self {
        let mut e = Self::zero();
        e.add_term(k, c);
        e
    }

    fn add_term(&mut self, k: i64, c: i64) {
        let entry = self.terms.entry(k).or_insert(0);
        *entry = cadd(*entry, c);
        if *entry == 0 {
            self.terms.remove(&k);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, *c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree_of(k: i64) -> RoDegree {
        RoDegree::new(-k, k)
    }

    pub fn mul(&self, other: &LevelE) -> LevelE {
        let mut out = LevelE::zero();
        for (k, c) in self.terms() {
            for (l, d) in other.terms() {
                out.add_term(k + l, cmul(c, d));
            }
        }
        out
    }

    pub fn add(&self, other: &LevelE) -> LevelE {
        let mut out = self.clone();
        for (k, c) in other.terms() {
            out.add_term(k, c);
        }
        out
    }

    /// `t·ι^k = (−1)^k ι^k`
    pub fn weyl(&self) -> LevelE {
        let mut out = LevelE::zero();
        for (k, c) in self.terms() {
            out.add_term(k, if k % 2 == 0 { c } else { -c });
        }
        out
    }

    /// `τ(y)`
    pub fn tr(&self) -> PointElement {
        self.terms().fold(PointElement::zero(), |acc, (k, c)| {
            &acc + &PointElement::tau_iota(-k).scale(c)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use PointGen::*;

    fn p(g: PointGen) -> PointElement {
        PointElement::gen(g)
    }

    #[test]
    fn table_examples() {
        assert_eq!(point_group_at(RoDegree::new(0, 0)), CatalogName::A);
        assert_eq!(point_group_at(RoDegree::new(-2, 2)), CatalogName::R);
        assert_eq!(point_group_at(RoDegree::new(0, 3)), CatalogName::BracketZ);
        assert_eq!(point_group_at(RoDegree::new(1, 2)), CatalogName::Zero);
        assert_eq!(point_group_at(RoDegree::new(1, -1)), CatalogName::Rminus);
        assert_eq!(point_group_at(RoDegree::new(3, -3)), CatalogName::Lminus);
        assert_eq!(point_group_at(RoDegree::new(3, -5)), CatalogName::BracketZ2);
    }

    #[test]
    fn generators_match_the_table() {
        for d in RoDegree::boxed(14) {
            let name = point_group_at(d);
            let basis = point_basis(d);
            let top = name.functor().level_gg;
            assert_eq!(basis.len(), top.generators(), "{d}");
            for g in &basis {
                assert_eq!(g.degree(), d);
                let torsion = top.invariant_factors().iter().any(|f| *f == 2u32.into());
                assert_eq!(g.is_torsion(), torsion, "{d} {g:?}");
            }
        }
    }

    #[test]
    fn generating_relations() {
        let eps = PointElement::eps(1);
        let xi = PointElement::xi(1);
        assert_eq!(&eps * &p(InvEpsKappa(1)), PointElement::kappa());
        assert_eq!(&xi * &p(TauIota(4)), p(TauIota(2)));
        assert_eq!(
            &PointElement::kappa() * &PointElement::kappa(),
            PointElement::kappa().scale(2)
        );
        assert!((&xi * &PointElement::kappa()).is_zero());
        assert_eq!(&PointElement::g() * &xi, xi.scale(2));
        assert_eq!(&eps * &PointElement::kappa(), eps.scale(2));
        assert_eq!(&eps * &p(InvEpsKappa(3)), p(InvEpsKappa(2)));
        assert_eq!(&eps * &p(InvEpsTau(2, 1)), p(InvEpsTau(1, 1)));
        assert_eq!(&xi * &p(InvEpsTau(2, 3)), p(InvEpsTau(2, 2)));
        let x = &p(InvEpsTau(4, 2)) + &PointElement::a_g(3, -2);
        assert_eq!(&PointElement::one() * &x, x);
    }

    #[test]
    fn torsion_reduces() {
        let t = p(EpsXi(1, 1));
        assert!((&t + &t).is_zero());
        assert!(PointElement::eps(1).scale(2).terms().all(|(_, c)| c == 2));
    }

    #[test]
    fn restriction_and_transfer() {
        assert_eq!(PointElement::xi(1).res(), LevelE::monomial(2, 1));
        assert_eq!(LevelE::monomial(-3, 1).tr(), p(TauIota(3)));
        assert!(LevelE::monomial(-1, 1).tr().is_zero());
        assert_eq!(LevelE::monomial(0, 1).tr(), PointElement::g());
        assert_eq!(PointElement::g().res(), LevelE::monomial(0, 2));
        assert!(PointElement::eps(2).res().is_zero());
    }
}
