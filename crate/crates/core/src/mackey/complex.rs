//! Cochain complexes of Mackey functors and their cohomology.

use super::abgroup::{self, AbGroup};
use super::functor::MackeyFunctor;
use crate::matrix::{solve, IntMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MackeyMorphism {
    pub f_gg: IntMatrix,
    pub f_ge: IntMatrix,
}

impl MackeyMorphism {
    pub fn zero(source: &MackeyFunctor, target: &MackeyFunctor) -> Self {
        MackeyMorphism {
            f_gg: IntMatrix::zeros(target.level_gg.generators(), source.level_gg.generators()),
            f_ge: IntMatrix::zeros(target.level_ge.generators(), source.level_ge.generators()),
        }
    }

    pub fn compose(&self, first: &MackeyMorphism) -> MackeyMorphism {
        MackeyMorphism {
            f_gg: &self.f_gg * &first.f_gg,
            f_ge: &self.f_ge * &first.f_ge,
        }
    }

    /// True when `self` is a well-defined map commuting with res, tr, weyl.
    pub fn is_morphism(&self, source: &MackeyFunctor, target: &MackeyFunctor) -> bool {
        let (s, t) = (source, target);
        abgroup::is_well_defined(&s.level_gg, &t.level_gg, &self.f_gg)
            && abgroup::is_well_defined(&s.level_ge, &t.level_ge, &self.f_ge)
            && abgroup::maps_equal(&t.level_ge, &(&t.res * &self.f_gg), &(&self.f_ge * &s.res))
            && abgroup::maps_equal(&t.level_gg, &(&t.tr * &self.f_ge), &(&self.f_gg * &s.tr))
            && abgroup::maps_equal(
                &t.level_ge,
                &(&t.weyl * &self.f_ge),
                &(&self.f_ge * &s.weyl),
            )
    }

    pub fn is_zero_into(&self, target: &MackeyFunctor) -> bool {
        let z_gg = IntMatrix::zeros(self.f_gg.rows(), self.f_gg.cols());
        let z_ge = IntMatrix::zeros(self.f_ge.rows(), self.f_ge.cols());
        abgroup::maps_equal(&target.level_gg, &self.f_gg, &z_gg)
            && abgroup::maps_equal(&target.level_ge, &self.f_ge, &z_ge)
    }
}

/// Terms in degrees `start .. start + terms.len()`; `differentials[i]` goes
/// from `terms[i]` to `terms[i + 1]`.
#[derive(Clone, Debug)]
pub struct MackeyCochainComplex {
    pub start: i64,
    pub terms: Vec<MackeyFunctor>,
    pub differentials: Vec<MackeyMorphism>,
}

impl MackeyCochainComplex {
    pub fn new(start: i64, terms: Vec<MackeyFunctor>, differentials: Vec<MackeyMorphism>) -> Self {
        assert_eq!(differentials.len() + 1, terms.len().max(1));
        MackeyCochainComplex {
            start,
            terms,
            differentials,
        }
    }

    pub fn degrees(&self) -> std::ops::Range<i64> {
        self.start..self.start + self.terms.len() as i64
    }

    fn index(&self, k: i64) -> Option<usize> {
        self.degrees()
            .contains(&k)
            .then(|| (k - self.start) as usize)
    }

    pub fn term(&self, k: i64) -> MackeyFunctor {
        self.index(k)
            .map(|i| self.terms[i].clone())
            .unwrap_or_else(MackeyFunctor::zero)
    }

    /// The differential leaving degree `k`, zero outside the range.
    pub fn differential(&self, k: i64) -> MackeyMorphism {
        match (self.index(k), self.index(k + 1)) {
            (Some(i), Some(_)) => self.differentials[i].clone(),
            _ => MackeyMorphism::zero(&self.term(k), &self.term(k + 1)),
        }
    }

    /// Adds zero terms on both sides.
    pub fn padded(&self, before: usize, after: usize) -> Self {
        let mut terms = vec![MackeyFunctor::zero(); before];
        terms.extend(self.terms.iter().cloned());
        terms.extend(std::iter::repeat_n(MackeyFunctor::zero(), after));
        let start = self.start - before as i64;
        let differentials = (start..start + terms.len() as i64 - 1)
            .map(|k| {
                let i = (k - start) as usize;
                if self.index(k).is_some() && self.index(k + 1).is_some() {
                    self.differential(k)
                } else {
                    MackeyMorphism::zero(&terms[i], &terms[i + 1])
                }
            })
            .collect();
        MackeyCochainComplex {
            start,
            terms,
            differentials,
        }
    }

    /// Degrees `k` where `d_{k+1} d_k` fails to vanish, or a differential
    /// fails to be a morphism.
    pub fn defects(&self) -> Vec<i64> {
        let mut bad = Vec::new();
        for k in self.degrees() {
            let d = self.differential(k);
            if !d.is_morphism(&self.term(k), &self.term(k + 1)) {
                bad.push(k);
                continue;
            }
            if !self
                .differential(k + 1)
                .compose(&d)
                .is_zero_into(&self.term(k + 2))
            {
                bad.push(k);
            }
        }
        bad
    }

    pub fn cohomology_at(&self, k: i64) -> MackeyFunctor {
        let x = self.term(k);
        let next = self.term(k + 1);
        let out = self.differential(k);
        let inc = self.differential(k - 1);

        let level = |grp: &AbGroup, tgt: &AbGroup, f: &IntMatrix, g: &IntMatrix| {
            let basis = abgroup::preimage_of_zero(tgt, f);
            let gens = g.hstack(&grp.relations().transpose());
            let h = abgroup::subquotient(&basis, &gens);
            (basis, h)
        };
        let (k_gg, h_gg) = level(&x.level_gg, &next.level_gg, &out.f_gg, &inc.f_gg);
        let (k_ge, h_ge) = level(&x.level_ge, &next.level_ge, &out.f_ge, &inc.f_ge);

        let induced = |map: &IntMatrix, from: &IntMatrix, into: &IntMatrix| {
            let mut m = IntMatrix::zeros(into.cols(), from.cols());
            for j in 0..from.cols() {
                let image = map.apply(&from.column(j));
                let coords = solve(into, &image).expect("induced map leaves the cocycle lattice");
                for (i, c) in coords.into_iter().enumerate() {
                    m.set(i, j, c);
                }
            }
            m
        };
        let res = induced(&x.res, &k_gg, &k_ge);
        let tr = induced(&x.tr, &k_ge, &k_gg);
        let weyl = induced(&x.weyl, &k_ge, &k_ge);
        MackeyFunctor::new(h_gg, h_ge, res, tr, weyl)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mackey::CatalogName;

    fn ae_complex(len: usize) -> MackeyCochainComplex {
        let ae = CatalogName::Ae.functor();
        let d = |i: usize| {
            let (gg, s) = if i.is_multiple_of(2) { (0, -1) } else { (2, 1) };
            MackeyMorphism {
                f_gg: IntMatrix::scalar(gg),
                f_ge: IntMatrix::from_rows(&[vec![1, s], vec![s, 1]], 2),
            }
        };
        MackeyCochainComplex::new(0, vec![ae; len], (0..len - 1).map(d).collect())
    }

    #[test]
    fn low_degrees_of_the_free_complex() {
        let cx = ae_complex(6);
        assert!(cx.defects().is_empty());
        assert_eq!(cx.cohomology_at(0).classify(), Some(CatalogName::R));
        assert_eq!(cx.cohomology_at(1).classify(), Some(CatalogName::Zero));
        assert_eq!(cx.cohomology_at(2).classify(), Some(CatalogName::BracketZ2));
        assert!(cx.cohomology_at(-3).is_zero());
    }

    #[test]
    fn padding_is_invisible() {
        let cx = ae_complex(4);
        let padded = cx.padded(2, 3);
        assert!(padded.defects().is_empty());
        for k in -3..8 {
            assert_eq!(
                cx.cohomology_at(k).classify(),
                padded.cohomology_at(k).classify(),
                "degree {k}"
            );
        }
    }

    #[test]
    fn cohomology_is_a_mackey_functor() {
        let cx = ae_complex(5);
        for k in 0..5 {
            assert!(cx.cohomology_at(k).check_axioms().is_empty(), "degree {k}");
        }
    }
}
