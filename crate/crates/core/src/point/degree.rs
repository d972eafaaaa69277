use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

/// `a + bΛ`.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
pub struct RoDegree {
    pub a: i64,
    pub b: i64,
}

impl RoDegree {
    pub const ZERO: RoDegree = RoDegree { a: 0, b: 0 };

    pub const fn new(a: i64, b: i64) -> Self {
        RoDegree { a, b }
    }

    /// All degrees with `|a|, |b| <= r`, ordered by `a` then `b`.
    pub fn boxed(r: i64) -> impl Iterator<Item = RoDegree> {
        (-r..=r).flat_map(move |a| (-r..=r).map(move |b| RoDegree::new(a, b)))
    }
}

impl Add for RoDegree {
    type Output = RoDegree;
    fn add(self, o: RoDegree) -> RoDegree {
        RoDegree::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for RoDegree {
    type Output = RoDegree;
    fn sub(self, o: RoDegree) -> RoDegree {
        RoDegree::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for RoDegree {
    type Output = RoDegree;
    fn neg(self) -> RoDegree {
        RoDegree::new(-self.a, -self.b)
    }
}

impl fmt::Display for RoDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}
