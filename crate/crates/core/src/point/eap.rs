//! The reduced cohomology of E(A,P), a module over the point ring on which
//! ε acts invertibly.

use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use super::degree::RoDegree;
use super::ring::{cadd, cmul, PointElement, PointGen};
use crate::mackey::CatalogName;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EapGen {
    /// `ε^m κ`
    Kappa(i64),
    /// `ε^m τ_{2k+1}`, `k >= 1`
    Tau(i64, u32),
}

impl EapGen {
    pub fn degree(self) -> RoDegree {
        match self {
            EapGen::Kappa(m) => RoDegree::new(0, m),
            EapGen::Tau(m, k) => {
                let t = 2 * k as i64 + 1;
                RoDegree::new(t, -t + m)
            }
        }
    }

    pub fn is_torsion(self) -> bool {
        matches!(self, EapGen::Tau(..))
    }

    pub fn at(d: RoDegree) -> Option<EapGen> {
        if d.a == 0 {
            Some(EapGen::Kappa(d.b))
        } else if d.a >= 3 && d.a % 2 == 1 {
            Some(EapGen::Tau(d.a + d.b, ((d.a - 1) / 2) as u32))
        } else {
            None
        }
    }

    fn shift(self, s: i64) -> EapGen {
        match self {
            EapGen::Kappa(m) => EapGen::Kappa(m + s),
            EapGen::Tau(m, k) => EapGen::Tau(m + s, k),
        }
    }
}

pub fn eap_group_at(d: RoDegree) -> CatalogName {
    if d.a == 0 {
        CatalogName::BracketZ
    } else if d.a >= 3 && d.a % 2 == 1 {
        CatalogName::BracketZ2
    } else {
        CatalogName::Zero
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EapElement {
    terms: BTreeMap<EapGen, i64>,
}

impl EapElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(g: EapGen, c: i64) -> Self {
        let mut e = Self::zero();
        e.add_term(g, c);
        e
    }

    pub fn gen(g: EapGen) -> Self {
        Self::term(g, 1)
    }

    pub fn kappa(m: i64) -> Self {
        Self::gen(EapGen::Kappa(m))
    }

    pub fn tau(m: i64, k: u32) -> Self {
        assert!(k >= 1);
        Self::gen(EapGen::Tau(m, k))
    }

    pub(crate) fn add_term(&mut self, g: EapGen, c: i64) {
        let entry = self.terms.entry(g).or_insert(0);
        *entry = cadd(*entry, c);
        if g.is_torsion() {
            *entry = entry.rem_euclid(2);
        }
        if *entry == 0 {
            self.terms.remove(&g);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (EapGen, i64)> + '_ {
        self.terms.iter().map(|(g, c)| (*g, *c))
    }

    pub fn coefficient(&self, g: EapGen) -> i64 {
        self.terms.get(&g).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<RoDegree> {
        let mut degs = self.terms.keys().map(|g| g.degree());
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    pub fn scale(&self, s: i64) -> Self {
        let mut e = Self::zero();
        for (g, c) in self.terms() {
            e.add_term(g, cmul(c, s));
        }
        e
    }

    /// Multiplication by `ε^s`, an isomorphism for every integer `s`.
    pub fn eps_shift(&self, s: i64) -> Self {
        let mut e = Self::zero();
        for (g, c) in self.terms() {
            e.add_term(g.shift(s), c);
        }
        e
    }
}

fn gen_action(p: PointGen, x: EapGen) -> EapElement {
    use EapGen::*;
    use PointGen::*;
    match (p, x) {
        (One, x) => EapElement::gen(x),
        // the top levels here are ⟨Z⟩ and ⟨Z/2⟩, where g = τρ acts as 0
        (G, _) => EapElement::zero(),
        // ξ ε^m κ lands in a zero group
        (EpsXi(_, n), Kappa(_)) if n > 0 => EapElement::zero(),
        (EpsXi(e, _), Kappa(m)) => EapElement::kappa(m + e as i64),
        (EpsXi(e, n), Tau(m, k)) => {
            if n >= k {
                EapElement::zero()
            } else {
                EapElement::tau(m + e as i64, k - n)
            }
        }
        // ε^{-j}κ · ε^m κ = 2 ε^{m-j} κ, read through ψ where it is injective
        (InvEpsKappa(j), Kappa(m)) => EapElement::term(Kappa(m - j as i64), 2),
        (InvEpsKappa(_), Tau(..)) => EapElement::zero(),
        (TauIota(_) | InvEpsTau(..), _) => EapElement::zero(),
    }
}

/// `p·x` for `p` in the point ring.
pub fn eap_action(p: &PointElement, x: &EapElement) -> EapElement {
    let mut out = EapElement::zero();
    for (g, c) in p.terms() {
        for (h, d) in x.terms() {
            let cd = cmul(c, d);
            for (k, e) in gen_action(g, h).terms() {
                out.add_term(k, cmul(cd, e));
            }
        }
    }
    out
}

impl Add for &EapElement {
    type Output = EapElement;
    fn add(self, rhs: &EapElement) -> EapElement {
        let mut e = self.clone();
        for (g, c) in rhs.terms() {
            e.add_term(g, c);
        }
        e
    }
}

impl Sub for &EapElement {
    type Output = EapElement;
    fn sub(self, rhs: &EapElement) -> EapElement {
        self + &rhs.scale(-1)
    }
}

impl Neg for &EapElement {
    type Output = EapElement;
    fn neg(self) -> EapElement {
        self.scale(-1)
    }
}
