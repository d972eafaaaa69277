use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::point::RoDegree;

/// `a + bΛ + nΩ`.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
pub struct PiDegree {
    pub a: i64,
    pub b: i64,
    pub n: i64,
}

impl PiDegree {
    pub const ZERO: PiDegree = PiDegree { a: 0, b: 0, n: 0 };

    pub const fn new(a: i64, b: i64, n: i64) -> Self {
        PiDegree { a, b, n }
    }

    /// An RO(G) degree, with no Ω part.
    pub fn from_ro(d: RoDegree) -> Self {
        PiDegree::new(d.a, d.b, 0)
    }

    pub fn chi(self) -> Self {
        PiDegree::new(self.a, self.b, -self.n)
    }

    /// The degree seen on the fixed component `C₊`.
    pub fn restrict_plus(self) -> RoDegree {
        RoDegree::new(self.a + self.n, self.b - self.n)
    }

    /// The degree seen on the fixed component `C₋`.
    pub fn restrict_minus(self) -> RoDegree {
        RoDegree::new(self.a - self.n, self.b + self.n)
    }

    pub fn ro(self) -> RoDegree {
        RoDegree::new(self.a, self.b)
    }

    /// All degrees with `|a|, |b| <= r` and `|n| <= rn`.
    pub fn boxed(r: i64, rn: i64) -> impl Iterator<Item = PiDegree> {
        (-rn..=rn).flat_map(move |n| RoDegree::boxed(r).map(move |d| PiDegree::new(d.a, d.b, n)))
    }
}

impl Add for PiDegree {
    type Output = PiDegree;
    fn add(self, o: PiDegree) -> PiDegree {
        PiDegree::new(self.a + o.a, self.b + o.b, self.n + o.n)
    }
}

impl Add<RoDegree> for PiDegree {
    type Output = PiDegree;
    fn add(self, o: RoDegree) -> PiDegree {
        PiDegree::new(self.a + o.a, self.b + o.b, self.n)
    }
}

impl Sub for PiDegree {
    type Output = PiDegree;
    fn sub(self, o: PiDegree) -> PiDegree {
        PiDegree::new(self.a - o.a, self.b - o.b, self.n - o.n)
    }
}

impl Neg for PiDegree {
    type Output = PiDegree;
    fn neg(self) -> PiDegree {
        PiDegree::new(-self.a, -self.b, -self.n)
    }
}

impl fmt::Display for PiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.n)
    }
}
