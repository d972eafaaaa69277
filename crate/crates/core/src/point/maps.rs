//! The maps ψ, φ, δ of the long exact sequence of `EP₊ → S⁰ → E(A,P)`.

use super::eap::{EapElement, EapGen};
use super::ep::EpElement;
use super::ring::{PointElement, PointGen};

/// `φ: P* → P*(P)`, a ring map.
pub fn map_phi(x: &PointElement) -> EpElement {
    let mut out = EpElement::zero();
    for (g, c) in x.terms() {
        match g {
            PointGen::One => out.add_term(0, 0, c),
            // g acts as tr∘res = 2 on the top level of R
            PointGen::G => out.add_term(0, 0, 2 * c),
            PointGen::EpsXi(m, n) => out.add_term(m, n as i64, c),
            PointGen::TauIota(n) if n % 2 == 0 => out.add_term(0, -(n as i64) / 2, 2 * c),
            _ => {}
        }
    }
    out
}

/// `ψ: P*(A,P) → P*`, a module map.
pub fn map_psi(x: &EapElement) -> PointElement {
    let mut out = PointElement::zero();
    for (g, c) in x.terms() {
        let image = match g {
            EapGen::Kappa(m) if m <= 0 => PointElement::inv_eps_kappa((-m) as u32),
            EapGen::Kappa(m) => PointElement::term(PointGen::EpsXi(m as u32, 0), 2),
            EapGen::Tau(m, k) if m <= 0 => PointElement::inv_eps_tau((-m) as u32, k),
            EapGen::Tau(..) => continue,
        };
        out = &out + &image.scale(c);
    }
    out
}

/// `δ: P*(P) → P*(A,P)`, raising `a` by one.
pub fn map_delta(x: &EpElement) -> EapElement {
    let mut out = EapElement::zero();
    for ((m, k), c) in x.terms() {
        if k <= -1 {
            out.add_term(EapGen::Tau(m as i64 + 1, (-k) as u32), c);
        }
    }
    out
}
