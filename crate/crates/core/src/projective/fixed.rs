//! Cohomology of the fixed set `C₊ ⊔ C₋` and of the intersection `Z`, in all
//! three coefficient variants, with the restriction and projection maps.
//!
//! An element of one component is a Laurent polynomial `Σ p·ζ^s c^j` keyed by
//! `(s, j)`; `Z` uses the same shape in the variables `ζ̃, c̃`.

use std::collections::BTreeMap;
use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use super::basis::CpMonomial;
use super::degree::PiDegree;
use super::ring::CpElement;
use crate::point::{eap_action, ep_mul, map_delta, map_phi, map_psi, point_mul};
use crate::point::{EapElement, EpElement, PointElement, RoDegree};

/// Coefficients of the fixed-set polynomials.
pub trait Coefficient: Clone + Debug + Default + PartialEq + Eq {
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, k: i64) -> Self;
    fn degrees(&self) -> Vec<RoDegree>;
}

impl Coefficient for PointElement {
    fn is_zero(&self) -> bool {
        PointElement::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, k: i64) -> Self {
        self.scale(k)
    }
    fn degrees(&self) -> Vec<RoDegree> {
        PointElement::degrees(self)
    }
}

impl Coefficient for EpElement {
    fn is_zero(&self) -> bool {
        EpElement::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, k: i64) -> Self {
        self.scale(k)
    }
    fn degrees(&self) -> Vec<RoDegree> {
        let mut v: Vec<RoDegree> = self
            .terms()
            .map(|((m, k), _)| crate::point::ep::ep_degree(m, k))
            .collect();
        v.dedup();
        v
    }
}

impl Coefficient for EapElement {
    fn is_zero(&self) -> bool {
        EapElement::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, k: i64) -> Self {
        self.scale(k)
    }
    fn degrees(&self) -> Vec<RoDegree> {
        let mut v: Vec<RoDegree> = self.terms().map(|(g, _)| g.degree()).collect();
        v.dedup();
        v
    }
}

/// Which fixed component, which fixes the degrees of `ζ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Plus,
    Minus,
}

impl Side {
    /// `|ζ₊| = −1+Λ+Ω`, `|ζ₋| = 1−Λ+Ω`; the intersection `Z` grades like `C₊`.
    pub fn zeta_degree(self) -> PiDegree {
        match self {
            Side::Plus => PiDegree::new(-1, 1, 1),
            Side::Minus => PiDegree::new(1, -1, 1),
        }
    }

    /// The coefficient degree of `ζ^n c^j` inside total degree `d`.
    pub fn coefficient_degree(self, d: PiDegree, j: u32) -> RoDegree {
        let r = match self {
            Side::Plus => d.restrict_plus(),
            Side::Minus => d.restrict_minus(),
        };
        RoDegree::new(r.a - 2 * j as i64, r.b)
    }

    pub fn suffix(self) -> &'static str {
        match self {
            Side::Plus => "+",
            Side::Minus => "-",
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FixedPoly<C> {
    terms: BTreeMap<(i64, u32), C>,
}

pub fn monomial_degree(side: Side, s: i64, j: u32) -> PiDegree {
    let z = side.zeta_degree();
    PiDegree::new(z.a * s + 2 * j as i64, z.b * s, s)
}

impl<C: Coefficient> FixedPoly<C> {
    pub fn zero() -> Self {
        FixedPoly {
            terms: BTreeMap::new(),
        }
    }

    /// `p·ζ^s c^j`
    pub fn term(s: i64, j: u32, p: C) -> Self {
        let mut e = Self::zero();
        e.add_term(s, j, p);
        e
    }

    pub fn add_term(&mut self, s: i64, j: u32, p: C) {
        let sum = match self.terms.remove(&(s, j)) {
            Some(q) => q.plus(&p),
            None => p,
        };
        if !sum.is_zero() {
            self.terms.insert((s, j), sum);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i64, u32), &C)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coefficient(&self, s: i64, j: u32) -> C {
        self.terms.get(&(s, j)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, k: i64) -> Self {
        self.map(|c| c.times(k))
    }

    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> FixedPoly<D> {
        let mut out = FixedPoly::zero();
        for ((s, j), c) in self.terms() {
            out.add_term(s, j, f(c));
        }
        out
    }

    /// Bilinear product with coefficient rule `f`.
    pub fn product<D: Coefficient, E: Coefficient>(
        &self,
        other: &FixedPoly<D>,
        f: impl Fn(&C, &D) -> E,
    ) -> FixedPoly<E> {
        let mut out = FixedPoly::zero();
        for ((s1, j1), c1) in self.terms() {
            for ((s2, j2), c2) in other.terms() {
                out.add_term(s1 + s2, j1 + j2, f(c1, c2));
            }
        }
        out
    }

    pub fn degrees(&self, side: Side) -> Vec<PiDegree> {
        let mut v: Vec<PiDegree> = Vec::new();
        for ((s, j), c) in self.terms() {
            for d in c.degrees() {
                let e = monomial_degree(side, s, j) + d;
                if !v.contains(&e) {
                    v.push(e);
                }
            }
        }
        v
    }

    pub fn degree(&self, side: Side) -> Option<PiDegree> {
        let v = self.degrees(side);
        (v.len() == 1).then(|| v[0])
    }

    /// `ζ^s ↦ ζ^{-s}`: the identification of the two components under `χ`.
    pub fn swap(&self) -> Self {
        let mut out = Self::zero();
        for ((s, j), c) in self.terms() {
            out.add_term(-s, j, c.clone());
        }
        out
    }
}

impl<C: Coefficient> Add for &FixedPoly<C> {
    type Output = FixedPoly<C>;
    fn add(self, rhs: &FixedPoly<C>) -> FixedPoly<C> {
        let mut e = self.clone();
        for ((s, j), c) in rhs.terms() {
            e.add_term(s, j, c.clone());
        }
        e
    }
}

impl<C: Coefficient> Sub for &FixedPoly<C> {
    type Output = FixedPoly<C>;
    fn sub(self, rhs: &FixedPoly<C>) -> FixedPoly<C> {
        self + &rhs.scale(-1)
    }
}

impl<C: Coefficient> Neg for &FixedPoly<C> {
    type Output = FixedPoly<C>;
    fn neg(self) -> FixedPoly<C> {
        self.scale(-1)
    }
}

impl Mul for &FixedPoly<PointElement> {
    type Output = FixedPoly<PointElement>;
    fn mul(self, rhs: &FixedPoly<PointElement>) -> FixedPoly<PointElement> {
        self.product(rhs, point_mul)
    }
}

impl Mul for &FixedPoly<EpElement> {
    type Output = FixedPoly<EpElement>;
    fn mul(self, rhs: &FixedPoly<EpElement>) -> FixedPoly<EpElement> {
        self.product(rhs, ep_mul)
    }
}

impl FixedPoly<PointElement> {
    pub fn one() -> Self {
        Self::term(0, 0, PointElement::one())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `φ` on coefficients.
    pub fn phi(&self) -> FixedPoly<EpElement> {
        self.map(map_phi)
    }

    /// The point-ring action on an `E(A,P)`-coefficient polynomial.
    pub fn act(&self, x: &FixedPoly<EapElement>) -> FixedPoly<EapElement> {
        self.product(x, eap_action)
    }
}

impl FixedPoly<EpElement> {
    pub fn one() -> Self {
        Self::term(0, 0, EpElement::one())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `δ` on coefficients.
    pub fn delta(&self) -> FixedPoly<EapElement> {
        self.map(map_delta)
    }
}

impl FixedPoly<EapElement> {
    /// `ψ` on coefficients.
    pub fn psi(&self) -> FixedPoly<PointElement> {
        self.map(map_psi)
    }
}

/// A class on `C₊ ⊔ C₋`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FixedElement<C> {
    pub plus: FixedPoly<C>,
    pub minus: FixedPoly<C>,
}

impl<C: Coefficient> FixedElement<C> {
    pub fn new(plus: FixedPoly<C>, minus: FixedPoly<C>) -> Self {
        FixedElement { plus, minus }
    }

    pub fn side(&self, side: Side) -> &FixedPoly<C> {
        match side {
            Side::Plus => &self.plus,
            Side::Minus => &self.minus,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.plus.is_zero() && self.minus.is_zero()
    }

    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D + Copy) -> FixedElement<D> {
        FixedElement::new(self.plus.map(f), self.minus.map(f))
    }
}

pub type FixedEpElement = FixedElement<EpElement>;
pub type FixedEapElement = FixedElement<EapElement>;
/// Classes on the intersection `Z`, as polynomials in `ζ̃, c̃` over `P*(P)`.
pub type ZElement = FixedPoly<EpElement>;

fn generator_image(side: Side, m: CpMonomial) -> FixedPoly<PointElement> {
    let p = PointElement::one;
    let eps2_plus_xi_c = |s: i64| {
        let mut f = FixedPoly::term(s, 0, PointElement::eps(2));
        f.add_term(s, 1, PointElement::xi(1));
        f
    };
    match (side, m) {
        (Side::Plus, CpMonomial::C) => FixedPoly::term(1, 1, p()),
        (Side::Plus, CpMonomial::CBAR) => eps2_plus_xi_c(-1),
        (Side::Plus, CpMonomial::ZETA) => FixedPoly::term(1, 0, p()),
        (Side::Plus, CpMonomial::ZBAR) => FixedPoly::term(-1, 0, PointElement::xi(1)),
        (Side::Minus, CpMonomial::C) => eps2_plus_xi_c(1),
        (Side::Minus, CpMonomial::CBAR) => FixedPoly::term(-1, 1, p()),
        (Side::Minus, CpMonomial::ZETA) => FixedPoly::term(1, 0, PointElement::xi(1)),
        (Side::Minus, CpMonomial::ZBAR) => FixedPoly::term(-1, 0, p()),
        _ => unreachable!("not a generator"),
    }
}

/// `ρ±` of a monomial.
pub fn restrict_monomial(side: Side, m: CpMonomial) -> FixedPoly<PointElement> {
    let mut out = FixedPoly::<PointElement>::one();
    for (g, e) in [
        (CpMonomial::ZETA, m.i),
        (CpMonomial::ZBAR, m.j),
        (CpMonomial::C, m.k),
        (CpMonomial::CBAR, m.l),
    ] {
        if e > 0 {
            out = &out * &generator_image(side, g).pow(e);
        }
    }
    out
}

pub fn restrict(side: Side, x: &CpElement) -> FixedPoly<PointElement> {
    let mut out = FixedPoly::zero();
    for (b, p) in x.terms() {
        let image = restrict_monomial(side, b.monomial());
        out = &out + &image.map(|q| point_mul(p, q));
    }
    out
}

pub fn restrict_plus(x: &CpElement) -> FixedPoly<PointElement> {
    restrict(Side::Plus, x)
}

pub fn restrict_minus(x: &CpElement) -> FixedPoly<PointElement> {
    restrict(Side::Minus, x)
}

/// `ρ = (ρ₊, ρ₋)`.
pub fn restrict_both(x: &CpElement) -> FixedElement<PointElement> {
    FixedElement::new(restrict_plus(x), restrict_minus(x))
}

/// `π±: P*(P)[c±, ζ±^{±1}] → P*(P)[c̃, ζ̃^{±1}]`.
pub fn pi(side: Side, x: &FixedPoly<EpElement>) -> ZElement {
    match side {
        Side::Plus => x.clone(),
        Side::Minus => {
            // c₋ ↦ ξ⁻¹ε² + c̃, ζ₋ ↦ ξ⁻¹ζ̃
            let mut c_image = FixedPoly::term(0, 0, EpElement::monomial(2, -1, 1));
            c_image.add_term(0, 1, EpElement::one());
            let mut out = FixedPoly::zero();
            for ((s, j), q) in x.terms() {
                let lead = FixedPoly::term(s, 0, q.shift(0, -s));
                out = &out + &(&lead * &c_image.pow(j));
            }
            out
        }
    }
}

pub fn pi_plus(x: &FixedPoly<EpElement>) -> ZElement {
    pi(Side::Plus, x)
}

pub fn pi_minus(x: &FixedPoly<EpElement>) -> ZElement {
    pi(Side::Minus, x)
}

/// True when `(x₊, x₋)` lies in the kernel of `π₊ − π₋`.
pub fn in_mv_kernel(x: &FixedEpElement) -> bool {
    pi_plus(&x.plus) == pi_minus(&x.minus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projective::ring::{cp_mul, CpElement};

    fn pt(s: i64, j: u32, p: PointElement) -> FixedPoly<PointElement> {
        FixedPoly::term(s, j, p)
    }

    #[test]
    fn generator_restrictions() {
        assert_eq!(
            restrict_plus(&CpElement::c()),
            pt(1, 1, PointElement::one())
        );
        assert_eq!(
            restrict_minus(&CpElement::zeta()),
            pt(1, 0, PointElement::xi(1))
        );
        assert_eq!(
            restrict_plus(&CpElement::one()),
            FixedPoly::<PointElement>::one()
        );
        let rc = restrict_minus(&CpElement::c());
        assert_eq!(
            rc,
            &pt(1, 0, PointElement::eps(2)) + &pt(1, 1, PointElement::xi(1))
        );
    }

    #[test]
    fn restrictions_are_homogeneous() {
        for (side, g) in [
            (Side::Plus, CpMonomial::C),
            (Side::Minus, CpMonomial::C),
            (Side::Plus, CpMonomial::CBAR),
        ] {
            assert_eq!(restrict_monomial(side, g).degree(side), Some(g.degree()));
        }
    }

    #[test]
    fn relations_hold_on_the_fixed_set() {
        for side in [Side::Plus, Side::Minus] {
            let zz = restrict(side, &cp_mul(&CpElement::zeta(), &CpElement::zbar()));
            assert_eq!(zz, pt(0, 0, PointElement::xi(1)));
            let direct = &restrict_monomial(side, CpMonomial::ZETA)
                * &restrict_monomial(side, CpMonomial::CBAR);
            assert_eq!(
                restrict(side, &cp_mul(&CpElement::zeta(), &CpElement::cbar())),
                direct
            );
        }
    }

    #[test]
    fn projection_examples() {
        let mut expected = FixedPoly::term(0, 0, EpElement::monomial(2, -1, 1));
        expected.add_term(0, 1, EpElement::one());
        assert_eq!(pi_minus(&FixedPoly::term(0, 1, EpElement::one())), expected);
        assert_eq!(
            pi_plus(&FixedPoly::term(-1, 0, EpElement::one())),
            FixedPoly::term(-1, 0, EpElement::one())
        );
        let rho_c = restrict_minus(&CpElement::c()).phi();
        assert_eq!(pi_minus(&rho_c), FixedPoly::term(1, 1, EpElement::one()));
        let zeta = FixedElement::new(
            FixedPoly::term(1, 0, EpElement::one()),
            FixedPoly::term(1, 0, EpElement::xi(1)),
        );
        assert!(in_mv_kernel(&zeta));
    }
}
