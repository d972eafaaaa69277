//! Finitely generated abelian groups given by generators and relations.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::matrix::{column_span_basis, kernel_basis, smith_normal_form, solve, IntMatrix};

/// `Z^generators / rowspace(relations)`, normalized eagerly.
///
/// `to_normal` sends a vector over the original generators to coordinates in
/// the invariant-factor decomposition; `from_normal` goes back.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbGroup {
    generators: usize,
    relations: IntMatrix,
    factors: Vec<BigInt>,
    to_normal: IntMatrix,
    from_normal: IntMatrix,
}

impl AbGroup {
    pub fn new(generators: usize, relations: IntMatrix) -> Self {
        assert_eq!(
            relations.cols(),
            generators,
            "relation width must equal the generator count"
        );
        let snf = smith_normal_form(&relations.transpose());
        let diag = snf.diagonal();
        let mut keep = Vec::new();
        let mut factors = Vec::new();
        for i in 0..generators {
            let d = diag.get(i).cloned().unwrap_or_else(BigInt::zero);
            if !d.is_one() {
                keep.push(i);
                factors.push(d);
            }
        }
        let to_normal = snf.u.select_rows(&keep);
        let from_normal = snf.u_inv.select_columns(&keep);
        AbGroup {
            generators,
            relations,
            factors,
            to_normal,
            from_normal,
        }
    }

    pub fn free(rank: usize) -> Self {
        Self::new(rank, IntMatrix::zeros(0, rank))
    }

    pub fn zero() -> Self {
        Self::free(0)
    }

    pub fn cyclic(order: i64) -> Self {
        Self::new(1, IntMatrix::scalar(order))
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    /// Invariant factors, units removed, nonzero factors first in divisibility
    /// order, then one `0` per free summand.
    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.factors
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn free_rank(&self) -> usize {
        self.factors.iter().filter(|d| d.is_zero()).count()
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.factors.iter().filter(|d| !d.is_zero()).product()
    }

    pub fn to_normal(&self) -> &IntMatrix {
        &self.to_normal
    }

    pub fn from_normal(&self) -> &IntMatrix {
        &self.from_normal
    }

    /// True when `v` represents the zero element.
    pub fn is_zero_element(&self, v: &[BigInt]) -> bool {
        self.to_normal
            .apply(v)
            .iter()
            .zip(&self.factors)
            .all(|(x, d)| {
                if d.is_zero() {
                    x.is_zero()
                } else {
                    x.is_multiple_of(d)
                }
            })
    }

    /// Canonical coordinates of `v`: torsion coordinates reduced into `[0, d)`.
    pub fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.to_normal
            .apply(v)
            .into_iter()
            .zip(&self.factors)
            .map(|(x, d)| if d.is_zero() { x } else { x.mod_floor(d) })
            .collect()
    }

    pub fn direct_sum(&self, other: &AbGroup) -> AbGroup {
        AbGroup::new(
            self.generators + other.generators,
            self.relations.block_diag(&other.relations),
        )
    }

    pub fn fingerprint(&self) -> GroupFingerprint {
        GroupFingerprint::from_factors(&self.factors)
    }

    /// True when the two presentations define isomorphic groups.
    pub fn isomorphic(&self, other: &AbGroup) -> bool {
        self.factors == other.factors
    }
}

impl fmt::Display for AbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|d| {
                if d.is_zero() {
                    "Z".to_string()
                } else {
                    format!("Z/{d}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Isomorphism invariant of a finitely generated abelian group: the free rank
/// and the multiset of elementary divisors. Addition is direct sum.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub struct GroupFingerprint {
    pub free: u32,
    pub torsion: BTreeMap<u64, u32>,
}

impl GroupFingerprint {
    pub fn from_factors(factors: &[BigInt]) -> Self {
        let mut fp = GroupFingerprint::default();
        for d in factors {
            if d.is_zero() {
                fp.free += 1;
                continue;
            }
            let mut n = d.abs().to_u64().expect("torsion factor out of range");
            let mut p = 2;
            while p * p <= n {
                if n % p == 0 {
                    let mut q = 1;
                    while n % p == 0 {
                        n /= p;
                        q *= p;
                    }
                    *fp.torsion.entry(q).or_default() += 1;
                }
                p += 1;
            }
            if n > 1 {
                *fp.torsion.entry(n).or_default() += 1;
            }
        }
        fp
    }

    pub fn is_zero(&self) -> bool {
        self.free == 0 && self.torsion.is_empty()
    }

    /// Number of cyclic summands in the primary decomposition.
    pub fn size(&self) -> u32 {
        self.free + self.torsion.values().sum::<u32>()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut fp = self.clone();
        fp.free += other.free;
        for (q, c) in &other.torsion {
            *fp.torsion.entry(*q).or_default() += c;
        }
        fp
    }

    pub fn scale(&self, k: u32) -> Self {
        GroupFingerprint {
            free: self.free * k,
            torsion: self.torsion.iter().map(|(q, c)| (*q, c * k)).collect(),
        }
    }

    /// Order of the 2-primary torsion.
    pub fn two_torsion_order(&self) -> u64 {
        self.torsion
            .iter()
            .filter(|(q, _)| q.is_power_of_two())
            .map(|(q, c)| q.pow(*c))
            .product()
    }
}

impl fmt::Display for GroupFingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (q, c) in &self.torsion {
            parts.extend(std::iter::repeat_n(format!("Z/{q}"), *c as usize));
        }
        parts.extend(std::iter::repeat_n("Z".to_string(), self.free as usize));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// A map of presented groups, stored against the original generators.
/// Column `j` is the image of source generator `j`.
pub fn is_well_defined(source: &AbGroup, target: &AbGroup, f: &IntMatrix) -> bool {
    (0..source.relations.rows()).all(|r| target.is_zero_element(&f.apply(&source.relations.row(r))))
}

/// True when `f` and `g` agree as maps into `target`.
pub fn maps_equal(target: &AbGroup, f: &IntMatrix, g: &IntMatrix) -> bool {
    let diff = f - g;
    (0..diff.cols()).all(|j| target.is_zero_element(&diff.column(j)))
}

/// `{x : f x = 0 in target}` as a lattice basis (columns); contains the
/// relation lattice of the source whenever `f` is well defined.
pub fn preimage_of_zero(target: &AbGroup, f: &IntMatrix) -> IntMatrix {
    let n = f.cols();
    let rel = target.relations.transpose();
    let stacked = f.hstack(&(-&rel));
    let ker = kernel_basis(&stacked);
    let idx: Vec<usize> = (0..n).collect();
    let projected = ker.select_rows(&idx);
    column_span_basis(&projected)
}

/// The quotient `K / I` where `K` is a lattice basis (columns) and `I` is
/// generated by the columns of `gens`, which must lie in `K`.
/// Generators of the result are the columns of `K`.
pub fn subquotient(k: &IntMatrix, gens: &IntMatrix) -> AbGroup {
    let rows: Vec<Vec<BigInt>> = (0..gens.cols())
        .map(|j| solve(k, &gens.column(j)).expect("subquotient generator outside the lattice"))
        .collect();
    let mut rel = IntMatrix::zeros(rows.len(), k.cols());
    for (i, row) in rows.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            rel.set(i, j, x.clone());
        }
    }
    AbGroup::new(k.cols(), rel)
}

pub fn kernel(source: &AbGroup, target: &AbGroup, f: &IntMatrix) -> AbGroup {
    let k = preimage_of_zero(target, f);
    subquotient(&k, &source.relations.transpose())
}

pub fn image(target: &AbGroup, f: &IntMatrix) -> AbGroup {
    let k = preimage_of_zero(target, f);
    AbGroup::new(f.cols(), k.transpose())
}

pub fn cokernel(target: &AbGroup, f: &IntMatrix) -> AbGroup {
    AbGroup::new(target.generators, f.transpose().vstack(&target.relations))
}

/// True when every column of `f` lies in the subgroup of `target` generated by
/// the columns of `g` (both maps land in `target`).
pub fn image_contained(target: &AbGroup, f: &IntMatrix, g: &IntMatrix) -> bool {
    let span = g.hstack(&target.relations.transpose());
    (0..f.cols()).all(|j| solve(&span, &f.column(j)).is_some())
}
