//! The ring `H*(CP^∞_G)` as a free module over the point ring on B.
//!
//! A monomial is brought into B by exact rewriting with the two relations
//! `ζζ̄ = ξ` and `ζc̄ = ε² − (1−g)ζ̄c` (and its χ-image). Each step lowers
//! `i + l` or `j + k`, so the procedure terminates; freeness of B makes the
//! result independent of the order of steps.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

use super::basis::{BasisBMonomial, CpMonomial};
use super::degree::PiDegree;
use crate::point::{point_mul, PointElement};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CpElement {
    terms: BTreeMap<BasisBMonomial, PointElement>,
}

impl CpElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::basis(BasisBMonomial::ONE)
    }

    pub fn basis(b: BasisBMonomial) -> Self {
        Self::term(b, PointElement::one())
    }

    pub fn term(b: BasisBMonomial, p: PointElement) -> Self {
        let mut e = Self::zero();
        e.add_term(b, p);
        e
    }

    /// A point-ring multiple of the unit.
    pub fn scalar(p: PointElement) -> Self {
        Self::term(BasisBMonomial::ONE, p)
    }

    pub fn c() -> Self {
        Self::monomial(CpMonomial::C)
    }

    pub fn cbar() -> Self {
        Self::monomial(CpMonomial::CBAR)
    }

    pub fn zeta() -> Self {
        Self::monomial(CpMonomial::ZETA)
    }

    pub fn zbar() -> Self {
        Self::monomial(CpMonomial::ZBAR)
    }

    /// Any monomial, brought into normal form.
    pub fn monomial(m: CpMonomial) -> Self {
        normal_form(m)
    }

    fn add_term(&mut self, b: BasisBMonomial, p: PointElement) {
        let sum = match self.terms.remove(&b) {
            Some(q) => &q + &p,
            None => p,
        };
        if !sum.is_zero() {
            self.terms.insert(b, sum);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (BasisBMonomial, &PointElement)> + '_ {
        self.terms.iter().map(|(b, p)| (*b, p))
    }

    pub fn coefficient(&self, b: BasisBMonomial) -> PointElement {
        self.terms.get(&b).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The degree, if every term has the same one.
    pub fn degree(&self) -> Option<PiDegree> {
        let mut degs = Vec::new();
        for (b, p) in self.terms() {
            for d in p.degrees() {
                degs.push(b.degree() + d);
            }
        }
        let first = *degs.first()?;
        degs.iter().all(|d| *d == first).then_some(first)
    }

    /// Multiplies every coefficient by `p`.
    pub fn scale_point(&self, p: &PointElement) -> Self {
        let mut e = Self::zero();
        for (b, q) in self.terms() {
            e.add_term(b, point_mul(p, q));
        }
        e
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut e = Self::zero();
        for (b, q) in self.terms() {
            e.add_term(b, q.scale(k));
        }
        e
    }

    /// `x^e` for `e >= 0`.
    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = cp_mul(&out, self);
        }
        out
    }
}

thread_local! {
    static NORMAL_FORMS: RefCell<HashMap<CpMonomial, CpElement>> = RefCell::new(HashMap::new());
}

/// The expression of a monomial in the basis B.
pub fn normal_form(m: CpMonomial) -> CpElement {
    if let Some(hit) = NORMAL_FORMS.with(|t| t.borrow().get(&m).cloned()) {
        return hit;
    }
    let result = rewrite(m);
    NORMAL_FORMS.with(|t| t.borrow_mut().insert(m, result.clone()));
    result
}

fn rewrite(m: CpMonomial) -> CpElement {
    let t = m.i.min(m.j);
    let CpMonomial { i, j, k, l } = CpMonomial::new(m.i - t, m.j - t, m.k, m.l);
    let xi_t = PointElement::xi(t);
    if let Some(b) = BasisBMonomial::from_monomial(CpMonomial::new(i, j, k, l)) {
        return CpElement::term(b, xi_t);
    }
    let eps2 = PointElement::eps(2);
    let minus_unit = PointElement::one().one_minus_g().scale(-1);
    // ζ c̄ = ε² − (1−g) ζ̄ c, or its χ-image ζ̄ c = ε² − (1−g) ζ c̄
    let (first, second) = if i >= 1 {
        (
            CpMonomial::new(i - 1, 0, k, l - 1),
            CpMonomial::new(i - 1, 1, k + 1, l - 1),
        )
    } else {
        (
            CpMonomial::new(0, j - 1, k - 1, l),
            CpMonomial::new(1, j - 1, k - 1, l + 1),
        )
    };
    let sum =
        &normal_form(first).scale_point(&eps2) + &normal_form(second).scale_point(&minus_unit);
    sum.scale_point(&xi_t)
}

/// Normal form of `p · m`.
pub fn normalize(m: CpMonomial, p: &PointElement) -> CpElement {
    normal_form(m).scale_point(p)
}

pub fn cp_mul(x: &CpElement, y: &CpElement) -> CpElement {
    let mut out = CpElement::zero();
    for (b1, p1) in x.terms() {
        for (b2, p2) in y.terms() {
            let p = point_mul(p1, p2);
            if p.is_zero() {
                continue;
            }
            for (b, q) in normal_form(b1.monomial() * b2.monomial()).terms() {
                out.add_term(b, point_mul(&p, q));
            }
        }
    }
    out
}

/// The involution induced by `χ`: `c ↔ c̄`, `ζ ↔ ζ̄`, point coefficients fixed.
pub fn chi_star(x: &CpElement) -> CpElement {
    let mut out = CpElement::zero();
    for (b, p) in x.terms() {
        for (b2, q) in normal_form(b.monomial().chi()).terms() {
            out.add_term(b2, point_mul(p, q));
        }
    }
    out
}

impl Add for &CpElement {
    type Output = CpElement;
    fn add(self, rhs: &CpElement) -> CpElement {
        let mut e = self.clone();
        for (b, p) in rhs.terms() {
            e.add_term(b, p.clone());
        }
        e
    }
}

impl Sub for &CpElement {
    type Output = CpElement;
    fn sub(self, rhs: &CpElement) -> CpElement {
        self + &rhs.scale(-1)
    }
}

impl Neg for &CpElement {
    type Output = CpElement;
    fn neg(self) -> CpElement {
        self.scale(-1)
    }
}

impl Mul for &CpElement {
    type Output = CpElement;
    fn mul(self, rhs: &CpElement) -> CpElement {
        cp_mul(self, rhs)
    }
}
