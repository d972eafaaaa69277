//! Degreewise Mackey-functor models of the three graded rings and the
//! exactness oracle for the long exact sequence relating them.

use num_bigint::BigInt;

use super::degree::RoDegree;
use super::eap::{eap_group_at, EapElement, EapGen};
use super::ep::{ep_group_at, ep_key_at, EpElement};
use super::maps::{map_delta, map_phi, map_psi};
use super::ring::{point_basis, point_group_at, LevelE, PointElement, PointGen};
use crate::mackey::abgroup::{self, AbGroup};
use crate::mackey::{CatalogName, MackeyCochainComplex, MackeyFunctor, MackeyMorphism};
use crate::matrix::IntMatrix;

/// One degree of a graded Mackey functor, with the chosen bases of both levels.
/// The bottom basis lists exponents `k` of `ι^k`.
#[derive(Clone, Debug)]
pub struct Slice<G> {
    pub degree: RoDegree,
    pub top: Vec<G>,
    pub bottom: Vec<i64>,
    pub functor: MackeyFunctor,
}

fn coords<G: PartialEq + std::fmt::Debug>(
    basis: &[G],
    terms: impl IntoIterator<Item = (G, i64)>,
) -> Vec<BigInt> {
    let mut v = vec![BigInt::from(0); basis.len()];
    for (g, c) in terms {
        let i = basis
            .iter()
            .position(|b| *b == g)
            .unwrap_or_else(|| panic!("{g:?} outside the basis {basis:?}"));
        v[i] += c;
    }
    v
}

fn matrix(rows: usize, columns: Vec<Vec<BigInt>>) -> IntMatrix {
    IntMatrix::from_columns(rows, &columns)
}

fn top_group(torsion: &[bool]) -> AbGroup {
    let n = torsion.len();
    let rows: Vec<Vec<i64>> = torsion
        .iter()
        .enumerate()
        .filter(|(_, t)| **t)
        .map(|(i, _)| (0..n).map(|j| if j == i { 2 } else { 0 }).collect())
        .collect();
    AbGroup::new(n, IntMatrix::from_rows(&rows, n))
}

fn build<G: PartialEq + Clone + std::fmt::Debug>(
    degree: RoDegree,
    top: Vec<G>,
    bottom: Vec<i64>,
    torsion: &[bool],
    res: impl Fn(&G) -> LevelE,
    tr: impl Fn(i64) -> Vec<(G, i64)>,
) -> Slice<G> {
    let res_m = matrix(
        bottom.len(),
        top.iter()
            .map(|g| coords(&bottom, res(g).terms()))
            .collect(),
    );
    let tr_m = matrix(
        top.len(),
        bottom.iter().map(|&k| coords(&top, tr(k))).collect(),
    );
    let weyl = matrix(
        bottom.len(),
        bottom
            .iter()
            .map(|&k| coords(&bottom, LevelE::monomial(k, 1).weyl().terms()))
            .collect(),
    );
    let functor = MackeyFunctor::new(
        top_group(torsion),
        AbGroup::free(bottom.len()),
        res_m,
        tr_m,
        weyl,
    );
    Slice {
        degree,
        top,
        bottom,
        functor,
    }
}

fn bottom_basis(d: RoDegree) -> Vec<i64> {
    if d.a + d.b == 0 {
        vec![-d.a]
    } else {
        Vec::new()
    }
}

pub fn point_slice(d: RoDegree) -> Slice<PointGen> {
    let top = point_basis(d);
    let torsion: Vec<bool> = top.iter().map(|g| g.is_torsion()).collect();
    build(
        d,
        top,
        bottom_basis(d),
        &torsion,
        |g| PointElement::gen(*g).res(),
        |k| LevelE::monomial(k, 1).tr().terms().collect(),
    )
}

/// `τ` into the top level of `P*(P)`: `τ(ι^{2j}) = 2ξ^j`, odd powers go to 0.
pub fn ep_tr(k: i64) -> EpElement {
    if k % 2 == 0 {
        EpElement::monomial(0, k / 2, 2)
    } else {
        EpElement::zero()
    }
}

/// `ρ` out of `P*(P)`: `ξ^j ↦ ι^{2j}`, ε-multiples go to 0.
pub fn ep_res(x: &EpElement) -> LevelE {
    x.terms()
        .filter(|((m, _), _)| *m == 0)
        .fold(LevelE::zero(), |acc, ((_, k), c)| {
            acc.add(&LevelE::monomial(2 * k, c))
        })
}

pub fn ep_slice(d: RoDegree) -> Slice<(u32, i64)> {
    let top: Vec<(u32, i64)> = ep_key_at(d).into_iter().collect();
    let torsion: Vec<bool> = top.iter().map(|(m, _)| *m > 0).collect();
    build(
        d,
        top,
        bottom_basis(d),
        &torsion,
        |&(m, k)| ep_res(&EpElement::monomial(m, k, 1)),
        |k| ep_tr(k).terms().collect(),
    )
}

pub fn eap_slice(d: RoDegree) -> Slice<EapGen> {
    let top: Vec<EapGen> = EapGen::at(d).into_iter().collect();
    let torsion: Vec<bool> = top.iter().map(|g| g.is_torsion()).collect();
    build(
        d,
        top,
        Vec::new(),
        &torsion,
        |_| LevelE::zero(),
        |_| Vec::new(),
    )
}

fn psi_morphism(d: RoDegree) -> MackeyMorphism {
    let (s, t) = (eap_slice(d), point_slice(d));
    let f_gg = matrix(
        t.top.len(),
        s.top
            .iter()
            .map(|g| coords(&t.top, map_psi(&EapElement::gen(*g)).terms()))
            .collect(),
    );
    MackeyMorphism {
        f_gg,
        f_ge: IntMatrix::zeros(t.bottom.len(), 0),
    }
}

fn phi_morphism(d: RoDegree) -> MackeyMorphism {
    let (s, t) = (point_slice(d), ep_slice(d));
    let f_gg = matrix(
        t.top.len(),
        s.top
            .iter()
            .map(|g| coords(&t.top, map_phi(&PointElement::gen(*g)).terms()))
            .collect(),
    );
    // both bottom levels are Z[ι, ι⁻¹] and φ is the identity there
    MackeyMorphism {
        f_gg,
        f_ge: IntMatrix::identity(s.bottom.len()),
    }
}

fn delta_morphism(d: RoDegree) -> MackeyMorphism {
    let up = RoDegree::new(d.a + 1, d.b);
    let (s, t) = (ep_slice(d), eap_slice(up));
    let f_gg = matrix(
        t.top.len(),
        s.top
            .iter()
            .map(|&(m, k)| coords(&t.top, map_delta(&EpElement::monomial(m, k, 1)).terms()))
            .collect(),
    );
    MackeyMorphism {
        f_gg,
        f_ge: IntMatrix::zeros(0, s.bottom.len()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LesFailure {
    pub degree: RoDegree,
    pub spot: &'static str,
    pub detail: String,
}

fn exact_at_level(
    b: &AbGroup,
    c: &AbGroup,
    f: &IntMatrix,
    g: &IntMatrix,
) -> Result<(), &'static str> {
    if !abgroup::maps_equal(c, &(g * f), &IntMatrix::zeros(g.rows(), f.cols())) {
        return Err("composite is nonzero");
    }
    let kernel = abgroup::preimage_of_zero(c, g);
    if !abgroup::image_contained(b, &kernel, f) {
        return Err("kernel exceeds image");
    }
    Ok(())
}

fn exact(
    a: &MackeyFunctor,
    b: &MackeyFunctor,
    c: &MackeyFunctor,
    f: &MackeyMorphism,
    g: &MackeyMorphism,
) -> Result<(), String> {
    if !f.is_morphism(a, b) || !g.is_morphism(b, c) {
        return Err("map is not a Mackey morphism".into());
    }
    exact_at_level(&b.level_gg, &c.level_gg, &f.f_gg, &g.f_gg)
        .map_err(|e| format!("level G/G: {e}"))?;
    exact_at_level(&b.level_ge, &c.level_ge, &f.f_ge, &g.f_ge)
        .map_err(|e| format!("level G/e: {e}"))?;
    Ok(())
}

/// Exactness of `ψ → φ → δ → ψ` at the three spots belonging to each degree.
pub fn les_point_check(degrees: impl IntoIterator<Item = RoDegree>) -> Vec<LesFailure> {
    let mut out = Vec::new();
    for d in degrees {
        let up = RoDegree::new(d.a + 1, d.b);
        let (eap, pt, ep, eap_up) = (eap_slice(d), point_slice(d), ep_slice(d), eap_slice(up));
        let (psi, phi, delta) = (psi_morphism(d), phi_morphism(d), delta_morphism(d));
        let psi_up = psi_morphism(up);
        let pt_up = point_slice(up);
        let checks = [
            (
                "P",
                exact(&eap.functor, &pt.functor, &ep.functor, &psi, &phi),
            ),
            (
                "EP",
                exact(&pt.functor, &ep.functor, &eap_up.functor, &phi, &delta),
            ),
            (
                "EAP",
                exact(
                    &ep.functor,
                    &eap_up.functor,
                    &pt_up.functor,
                    &delta,
                    &psi_up,
                ),
            ),
        ];
        for (spot, r) in checks {
            if let Err(detail) = r {
                out.push(LesFailure {
                    degree: d,
                    spot,
                    detail,
                });
            }
        }
    }
    out
}

/// A three-term piece of the sequence, checked as a short exact sequence of
/// Mackey functors.
#[derive(Clone, Debug)]
pub struct ShortExact {
    pub degree: RoDegree,
    pub terms: [CatalogName; 3],
    pub exact: bool,
}

fn short_exact(
    d: RoDegree,
    a: &MackeyFunctor,
    b: &MackeyFunctor,
    c: &MackeyFunctor,
    f: MackeyMorphism,
    g: MackeyMorphism,
) -> ShortExact {
    let cx = MackeyCochainComplex::new(0, vec![a.clone(), b.clone(), c.clone()], vec![f, g]);
    let exact = cx.defects().is_empty() && (0..3).all(|k| cx.cohomology_at(k).is_zero());
    let name = |m: &MackeyFunctor| m.classify().unwrap_or(CatalogName::Zero);
    ShortExact {
        degree: d,
        terms: [name(a), name(b), name(c)],
        exact,
    }
}

/// `0 → P*(A,P) → P* → P*(P) → 0` in degree 0, where the kernel of φ is
/// the copy of `⟨Z⟩` spanned by κ.
pub fn sequence_at_zero() -> ShortExact {
    let d = RoDegree::ZERO;
    short_exact(
        d,
        &eap_slice(d).functor,
        &point_slice(d).functor,
        &ep_slice(d).functor,
        psi_morphism(d),
        phi_morphism(d),
    )
}

/// In degree `a(1 − Λ)`: for `a >= 2` even, `0 → L → R → ⟨Z/2⟩ → 0` via φ and δ;
/// for `a >= 3` odd, `0 → ⟨Z/2⟩ → L₋ → R₋ → 0` via ψ and φ.
pub fn sequence_on_antidiagonal(a: i64) -> ShortExact {
    let d = RoDegree::new(a, -a);
    if a % 2 == 0 {
        let up = RoDegree::new(a + 1, -a);
        short_exact(
            d,
            &point_slice(d).functor,
            &ep_slice(d).functor,
            &eap_slice(up).functor,
            phi_morphism(d),
            delta_morphism(d),
        )
    } else {
        short_exact(
            d,
            &eap_slice(d).functor,
            &point_slice(d).functor,
            &ep_slice(d).functor,
            psi_morphism(d),
            phi_morphism(d),
        )
    }
}

/// Classification of the three slice models against the closed-form tables.
pub fn slice_mismatches(
    degrees: impl IntoIterator<Item = RoDegree>,
) -> Vec<(RoDegree, &'static str)> {
    let mut out = Vec::new();
    for d in degrees {
        if point_slice(d).functor.classify() != Some(point_group_at(d)) {
            out.push((d, "point"));
        }
        if ep_slice(d).functor.classify() != Some(ep_group_at(d)) {
            out.push((d, "ep"));
        }
        if eap_slice(d).functor.classify() != Some(eap_group_at(d)) {
            out.push((d, "eap"));
        }
    }
    out
}
