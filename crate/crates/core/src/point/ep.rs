//! The cohomology of EP: `R[ε, ξ, ξ⁻¹] / ⟨2ε, ρ(ε)⟩`.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use super::degree::RoDegree;
use super::ring::{cadd, cmul};
use crate::mackey::CatalogName;

/// `Σ c·ε^m ξ^k` keyed by `(m, k)`; coefficients with `m > 0` live in Z/2.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EpElement {
    terms: BTreeMap<(u32, i64), i64>,
}

pub fn ep_degree(m: u32, k: i64) -> RoDegree {
    RoDegree::new(-2 * k, m as i64 + 2 * k)
}

/// The key of the generator in degree `d`, if the top level is nonzero.
pub fn ep_key_at(d: RoDegree) -> Option<(u32, i64)> {
    let s = d.a + d.b;
    (d.a % 2 == 0 && s >= 0).then(|| (s as u32, -d.a / 2))
}

pub fn ep_group_at(d: RoDegree) -> CatalogName {
    let s = d.a + d.b;
    let even = d.a % 2 == 0;
    if s == 0 && even {
        CatalogName::R
    } else if s == 0 {
        CatalogName::Rminus
    } else if s > 0 && even {
        CatalogName::BracketZ2
    } else {
        CatalogName::Zero
    }
}

impl EpElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn monomial(m: u32, k: i64, c: i64) -> Self {
        let mut e = Self::zero();
        e.add_term(m, k, c);
        e
    }

    pub fn eps(m: u32) -> Self {
        Self::monomial(m, 0, 1)
    }

    pub fn xi(k: i64) -> Self {
        Self::monomial(0, k, 1)
    }

    pub(crate) fn add_term(&mut self, m: u32, k: i64, c: i64) {
        let entry = self.terms.entry((m, k)).or_insert(0);
        *entry = cadd(*entry, c);
        if m > 0 {
            *entry = entry.rem_euclid(2);
        }
        if *entry == 0 {
            self.terms.remove(&(m, k));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, i64), i64)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, *c))
    }

    pub fn coefficient(&self, m: u32, k: i64) -> i64 {
        self.terms.get(&(m, k)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<RoDegree> {
        let mut degs = self.terms.keys().map(|&(m, k)| ep_degree(m, k));
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    pub fn scale(&self, s: i64) -> Self {
        let mut e = Self::zero();
        for ((m, k), c) in self.terms() {
            e.add_term(m, k, cmul(c, s));
        }
        e
    }

    /// Multiplies by `ε^m ξ^k`.
    pub fn shift(&self, m: u32, k: i64) -> Self {
        let mut e = Self::zero();
        for ((mm, kk), c) in self.terms() {
            e.add_term(mm + m, kk + k, c);
        }
        e
    }

    /// The ξ-inverse of a unit `±ξ^k`, if `self` is one.
    pub fn unit_inverse(&self) -> Option<Self> {
        let mut it = self.terms();
        match (it.next(), it.next()) {
            (Some(((0, k), c)), None) if c == 1 || c == -1 => Some(Self::monomial(0, -k, c)),
            _ => None,
        }
    }
}

pub fn ep_mul(x: &EpElement, y: &EpElement) -> EpElement {
    let mut out = EpElement::zero();
    for ((m1, k1), c1) in x.terms() {
        for ((m2, k2), c2) in y.terms() {
            out.add_term(m1 + m2, k1 + k2, cmul(c1, c2));
        }
    }
    out
}

impl Add for &EpElement {
    type Output = EpElement;
    fn add(self, rhs: &EpElement) -> EpElement {
        let mut e = self.clone();
        for ((m, k), c) in rhs.terms() {
            e.add_term(m, k, c);
        }
        e
    }
}

impl Sub for &EpElement {
    type Output = EpElement;
    fn sub(self, rhs: &EpElement) -> EpElement {
        self + &rhs.scale(-1)
    }
}

impl Neg for &EpElement {
    type Output = EpElement;
    fn neg(self) -> EpElement {
        self.scale(-1)
    }
}

impl Mul for &EpElement {
    type Output = EpElement;
    fn mul(self, rhs: &EpElement) -> EpElement {
        ep_mul(self, rhs)
    }
}
