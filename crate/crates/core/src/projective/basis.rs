//! Monomials in `ζ, ζ̄, c, c̄` and the distinguished basis B.

use std::cmp::Ordering;
use std::fmt;

use super::degree::PiDegree;

/// `ζ^i ζ̄^j c^k c̄^l`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CpMonomial {
    pub i: u32,
    pub j: u32,
    pub k: u32,
    pub l: u32,
}

impl CpMonomial {
    pub const ONE: CpMonomial = CpMonomial {
        i: 0,
        j: 0,
        k: 0,
        l: 0,
    };
    pub const ZETA: CpMonomial = CpMonomial {
        i: 1,
        j: 0,
        k: 0,
        l: 0,
    };
    pub const ZBAR: CpMonomial = CpMonomial {
        i: 0,
        j: 1,
        k: 0,
        l: 0,
    };
    pub const C: CpMonomial = CpMonomial {
        i: 0,
        j: 0,
        k: 1,
        l: 0,
    };
    pub const CBAR: CpMonomial = CpMonomial {
        i: 0,
        j: 0,
        k: 0,
        l: 1,
    };

    pub const fn new(i: u32, j: u32, k: u32, l: u32) -> Self {
        CpMonomial { i, j, k, l }
    }

    pub fn degree(self) -> PiDegree {
        let (i, j, k, l) = (self.i as i64, self.j as i64, self.k as i64, self.l as i64);
        PiDegree::new(-i - j + k + l, i + j + k + l, i - j + k - l)
    }

    pub fn chi(self) -> Self {
        CpMonomial::new(self.j, self.i, self.l, self.k)
    }

    pub fn total(self) -> u32 {
        self.i + self.j + self.k + self.l
    }
}

impl std::ops::Mul for CpMonomial {
    type Output = CpMonomial;
    fn mul(self, o: CpMonomial) -> CpMonomial {
        CpMonomial::new(self.i + o.i, self.j + o.j, self.k + o.k, self.l + o.l)
    }
}

fn factor(out: &mut Vec<String>, name: &str, e: u32) {
    match e {
        0 => {}
        1 => out.push(name.to_string()),
        e => out.push(format!("{name}^{e}")),
    }
}

impl CpMonomial {
    /// ASCII form, e.g. `zbar*c^2*cbar`; the empty product prints as `1`.
    pub fn ascii(self) -> String {
        let mut v = Vec::new();
        factor(&mut v, "zeta", self.i);
        factor(&mut v, "zbar", self.j);
        factor(&mut v, "c", self.k);
        factor(&mut v, "cbar", self.l);
        if v.is_empty() {
            "1".into()
        } else {
            v.join("*")
        }
    }

    pub fn unicode(self) -> String {
        let mut s = String::new();
        for (name, e) in [("ζ", self.i), ("ζ̄", self.j), ("c", self.k), ("c̄", self.l)] {
            if e > 0 {
                s.push_str(name);
                if e > 1 {
                    s.push_str(&superscript(e as i64));
                }
            }
        }
        if s.is_empty() {
            "1".into()
        } else {
            s
        }
    }
}

pub(crate) fn superscript(e: i64) -> String {
    e.to_string()
        .chars()
        .map(|ch| match ch {
            '-' => '⁻',
            '0' => '⁰',
            '1' => '¹',
            '2' => '²',
            '3' => '³',
            '4' => '⁴',
            '5' => '⁵',
            '6' => '⁶',
            '7' => '⁷',
            '8' => '⁸',
            _ => '⁹',
        })
        .collect()
}

impl fmt::Display for CpMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ascii())
    }
}

/// The five families of B.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisBMonomial {
    /// `ζ^m c^n`, `m, n >= 0`
    ZetaC(u32, u32),
    /// `ζ̄^m c̄^n`, `m + n > 0`
    ZbarCbar(u32, u32),
    /// `c^m c̄^n`, `m, n > 0`
    CCbar(u32, u32),
    /// `ζ̄ c^m c̄^n`, `m > n >= 0`
    ZbarCCbar(u32, u32),
    /// `ζ c^m c̄^n`, `n > m + 1`
    ZetaCCbar(u32, u32),
}

impl BasisBMonomial {
    pub const ONE: BasisBMonomial = BasisBMonomial::ZetaC(0, 0);

    pub fn is_valid(self) -> bool {
        match self {
            BasisBMonomial::ZetaC(..) => true,
            BasisBMonomial::ZbarCbar(m, n) => m + n > 0,
            BasisBMonomial::CCbar(m, n) => m > 0 && n > 0,
            BasisBMonomial::ZbarCCbar(m, n) => m > n,
            BasisBMonomial::ZetaCCbar(m, n) => n > m + 1,
        }
    }

    pub fn monomial(self) -> CpMonomial {
        match self {
            BasisBMonomial::ZetaC(m, n) => CpMonomial::new(m, 0, n, 0),
            BasisBMonomial::ZbarCbar(m, n) => CpMonomial::new(0, m, 0, n),
            BasisBMonomial::CCbar(m, n) => CpMonomial::new(0, 0, m, n),
            BasisBMonomial::ZbarCCbar(m, n) => CpMonomial::new(0, 1, m, n),
            BasisBMonomial::ZetaCCbar(m, n) => CpMonomial::new(1, 0, m, n),
        }
    }

    /// The member of B equal to `m` as a monomial, if any.
    pub fn from_monomial(m: CpMonomial) -> Option<Self> {
        let CpMonomial { i, j, k, l } = m;
        let b = match (i, j) {
            (_, 0) if l == 0 => BasisBMonomial::ZetaC(i, k),
            (0, _) if k == 0 => BasisBMonomial::ZbarCbar(j, l),
            (0, 0) => BasisBMonomial::CCbar(k, l),
            (0, 1) if k > l => BasisBMonomial::ZbarCCbar(k, l),
            (1, 0) if l > k + 1 => BasisBMonomial::ZetaCCbar(k, l),
            _ => return None,
        };
        Some(b)
    }

    pub fn degree(self) -> PiDegree {
        self.monomial().degree()
    }

    fn family(self) -> u8 {
        match self {
            BasisBMonomial::ZetaC(..) => 0,
            BasisBMonomial::ZbarCbar(..) => 1,
            BasisBMonomial::CCbar(..) => 2,
            BasisBMonomial::ZbarCCbar(..) => 3,
            BasisBMonomial::ZetaCCbar(..) => 4,
        }
    }

    fn sort_key(self) -> (i64, i64, i64, u8, CpMonomial) {
        let d = self.degree();
        (d.a, d.b, d.n, self.family(), self.monomial())
    }

    pub fn ascii(self) -> String {
        self.monomial().ascii()
    }

    pub fn unicode(self) -> String {
        self.monomial().unicode()
    }
}

/// Ordered by degree (`a`, then `b`, then `n`), then family, then exponents.
impl Ord for BasisBMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for BasisBMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BasisBMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ascii())
    }
}

/// The members of B whose degree has Ω-coefficient `n`, with family index
/// at most `max_index`. Three lists, depending on the sign of `n`.
pub fn enumerate_basis_b(n: i64, max_index: u32) -> Vec<BasisBMonomial> {
    use BasisBMonomial::*;
    let mut out = Vec::new();
    let big = n.unsigned_abs() as u32;
    match n.cmp(&0) {
        Ordering::Equal => {
            for m in 0..=max_index {
                out.push(if m == 0 {
                    BasisBMonomial::ONE
                } else {
                    CCbar(m, m)
                });
                out.push(ZbarCCbar(m + 1, m));
            }
        }
        Ordering::Greater => {
            for m in 0..=big.min(max_index) {
                out.push(ZetaC(big - m, m));
            }
            for m in 1..=max_index {
                out.push(CCbar(m + big, m));
            }
            for m in 0..=max_index {
                out.push(ZbarCCbar(m + big + 1, m));
            }
        }
        Ordering::Less => {
            for m in 0..=big.min(max_index) {
                out.push(ZbarCbar(big - m, m));
            }
            for m in 1..=max_index {
                out.push(CCbar(m, m + big));
            }
            for m in 0..=max_index {
                out.push(ZetaCCbar(m, m + big + 1));
            }
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_degrees() {
        assert_eq!(CpMonomial::C.degree(), PiDegree::new(1, 1, 1));
        assert_eq!(
            CpMonomial::new(1, 1, 0, 0).degree(),
            PiDegree::new(-2, 2, 0)
        );
        assert_eq!(CpMonomial::new(0, 1, 2, 1).degree(), PiDegree::new(2, 4, 0));
    }

    #[test]
    fn family_degree_formulas() {
        for m in 0..5u32 {
            for n in 0..5u32 {
                let (mi, ni) = (m as i64, n as i64);
                assert_eq!(
                    BasisBMonomial::ZetaC(m, n).degree(),
                    PiDegree::new(ni - mi, mi + ni, mi + ni)
                );
                assert_eq!(
                    CpMonomial::new(0, m, 0, n).degree(),
                    PiDegree::new(ni - mi, mi + ni, -(mi + ni))
                );
                assert_eq!(
                    CpMonomial::new(0, 0, m, n).degree(),
                    PiDegree::new(mi + ni, mi + ni, mi - ni)
                );
                assert_eq!(
                    CpMonomial::new(0, 1, m, n).degree(),
                    PiDegree::new(mi + ni - 1, mi + ni + 1, mi - ni - 1)
                );
                assert_eq!(
                    CpMonomial::new(1, 0, m, n).degree(),
                    PiDegree::new(mi + ni - 1, mi + ni + 1, mi - ni + 1)
                );
            }
        }
    }

    fn all_b(max: u32) -> Vec<BasisBMonomial> {
        let mut v = Vec::new();
        for i in 0..=max {
            for j in 0..=max {
                for k in 0..=max {
                    for l in 0..=max {
                        if let Some(b) = BasisBMonomial::from_monomial(CpMonomial::new(i, j, k, l))
                        {
                            v.push(b);
                        }
                    }
                }
            }
        }
        v
    }

    #[test]
    fn families_are_disjoint_and_valid() {
        let v = all_b(6);
        for b in &v {
            assert!(b.is_valid(), "{b:?}");
            assert_eq!(BasisBMonomial::from_monomial(b.monomial()), Some(*b));
        }
        let set: std::collections::HashSet<_> = v.iter().map(|b| b.monomial()).collect();
        assert_eq!(set.len(), v.len());
    }

    #[test]
    fn per_n_lists_partition_b() {
        // every member of B with small exponents appears in exactly the list of its n
        let all = all_b(5);
        for n in -4..=4i64 {
            let listed = enumerate_basis_b(n, 12);
            for b in &listed {
                assert_eq!(b.degree().n, n);
                assert!(b.is_valid());
            }
            for b in all.iter().filter(|b| b.degree().n == n) {
                assert!(listed.contains(b), "{b:?} missing for n = {n}");
            }
        }
    }

    #[test]
    fn corollary_lists() {
        let zero = enumerate_basis_b(0, 2);
        assert!(zero.contains(&BasisBMonomial::ONE));
        assert!(zero.contains(&BasisBMonomial::ZbarCCbar(1, 0)));
        assert!(zero.contains(&BasisBMonomial::CCbar(2, 2)));
        let one = enumerate_basis_b(1, 1);
        for b in [
            BasisBMonomial::ZetaC(1, 0),
            BasisBMonomial::ZetaC(0, 1),
            BasisBMonomial::CCbar(2, 1),
            BasisBMonomial::ZbarCCbar(2, 0),
            BasisBMonomial::ZbarCCbar(3, 1),
        ] {
            assert!(one.contains(&b), "{b:?}");
        }
        let minus_two = enumerate_basis_b(-2, 3);
        for b in [
            BasisBMonomial::ZbarCbar(2, 0),
            BasisBMonomial::ZbarCbar(1, 1),
            BasisBMonomial::ZbarCbar(0, 2),
        ] {
            assert!(minus_two.contains(&b), "{b:?}");
        }
        assert!(minus_two.contains(&BasisBMonomial::ZetaCCbar(0, 3)));
    }

    #[test]
    fn chi_preserves_b_off_the_omega_zero_line() {
        for b in all_b(5) {
            if b.degree().n != 0 {
                let image = BasisBMonomial::from_monomial(b.monomial().chi());
                assert!(image.is_some(), "{b:?}");
            }
        }
    }
}
