//! Exact plane geometry over arbitrary-precision rationals.

mod polygon;
mod random;
mod triangulate;

pub use polygon::{
    locate_in_ring, point_in_polygon, signed_area2, validate_polygon_with_holes, validate_simple_polygon, Location,
    PolygonWithHoles, SimplePolygon,
};
pub use random::{random_lattice_polygon, random_simple_polygon};
pub use triangulate::triangulate;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Exact rational number, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Builds `n / d` as a [`Rational`]. Panics when `d` is zero.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Builds an integer-valued [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn int(x: i64, y: i64) -> Self {
        Point::new(int(x), int(y))
    }

    /// Point at parameter `t` on the segment from `self` to `other`.
    pub fn lerp(&self, other: &Point, t: &Rational) -> Point {
        Point::new(&self.x + (&other.x - &self.x) * t, &self.y + (&other.y - &self.y) * t)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.x, self.y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Left,
    Right,
    Collinear,
}

impl std::ops::Neg for Orientation {
    type Output = Orientation;
    fn neg(self) -> Orientation {
        match self {
            Orientation::Left => Orientation::Right,
            Orientation::Right => Orientation::Left,
            Orientation::Collinear => Orientation::Collinear,
        }
    }
}

/// Cross product `(q - p) x (r - p)`.
pub fn cross(p: &Point, q: &Point, r: &Point) -> Rational {
    (&q.x - &p.x) * (&r.y - &p.y) - (&q.y - &p.y) * (&r.x - &p.x)
}

pub fn orientation(p: &Point, q: &Point, r: &Point) -> Orientation {
    let c = cross(p, q, r);
    if c.is_zero() {
        Orientation::Collinear
    } else if c.is_positive() {
        Orientation::Left
    } else {
        Orientation::Right
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Intersection {
    None,
    ProperCross,
    Touch,
    Overlap,
}

/// True when `p`, known to be collinear with `a`-`b`, lies on the closed segment.
fn within_box(a: &Point, b: &Point, p: &Point) -> bool {
    let (xlo, xhi) = if a.x <= b.x { (&a.x, &b.x) } else { (&b.x, &a.x) };
    let (ylo, yhi) = if a.y <= b.y { (&a.y, &b.y) } else { (&b.y, &a.y) };
    *xlo <= p.x && p.x <= *xhi && *ylo <= p.y && p.y <= *yhi
}

/// True when `p` lies on the closed segment `a`-`b`.
pub fn on_segment(a: &Point, b: &Point, p: &Point) -> bool {
    within_box(a, b, p) && cross(a, b, p).is_zero()
}

/// Classifies how the closed segments `a0-a1` and `b0-b1` meet.
pub fn segments_intersect(a0: &Point, a1: &Point, b0: &Point, b1: &Point) -> Intersection {
    if !boxes_meet(a0, a1, b0, b1) {
        return Intersection::None;
    }
    let o1 = orientation(a0, a1, b0);
    let o2 = orientation(a0, a1, b1);
    if o1 == Orientation::Collinear && o2 == Orientation::Collinear {
        return collinear_overlap(a0, a1, b0, b1);
    }
    let o3 = orientation(b0, b1, a0);
    let o4 = orientation(b0, b1, a1);
    let none_zero = [o1, o2, o3, o4].iter().all(|o| *o != Orientation::Collinear);
    if none_zero {
        if o1 != o2 && o3 != o4 {
            return Intersection::ProperCross;
        }
        return Intersection::None;
    }
    let touches = (o1 == Orientation::Collinear && within_box(a0, a1, b0))
        || (o2 == Orientation::Collinear && within_box(a0, a1, b1))
        || (o3 == Orientation::Collinear && within_box(b0, b1, a0))
        || (o4 == Orientation::Collinear && within_box(b0, b1, a1));
    if touches {
        Intersection::Touch
    } else {
        Intersection::None
    }
}

fn boxes_meet(a0: &Point, a1: &Point, b0: &Point, b1: &Point) -> bool {
    let lo = |u: &Rational, v: &Rational| if u <= v { u.clone() } else { v.clone() };
    let hi = |u: &Rational, v: &Rational| if u >= v { u.clone() } else { v.clone() };
    lo(&a0.x, &a1.x) <= hi(&b0.x, &b1.x)
        && lo(&b0.x, &b1.x) <= hi(&a0.x, &a1.x)
        && lo(&a0.y, &a1.y) <= hi(&b0.y, &b1.y)
        && lo(&b0.y, &b1.y) <= hi(&a0.y, &a1.y)
}

fn collinear_overlap(a0: &Point, a1: &Point, b0: &Point, b1: &Point) -> Intersection {
    // project on the axis along which segment a is not degenerate
    let key = |p: &Point| {
        if a0.x != a1.x {
            p.x.clone()
        } else {
            p.y.clone()
        }
    };
    let (alo, ahi) = sorted(key(a0), key(a1));
    let (blo, bhi) = sorted(key(b0), key(b1));
    let lo = if alo > blo { alo } else { blo };
    let hi = if ahi < bhi { ahi } else { bhi };
    if lo < hi {
        Intersection::Overlap
    } else if lo == hi {
        Intersection::Touch
    } else {
        Intersection::None
    }
}

fn sorted(a: Rational, b: Rational) -> (Rational, Rational) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::int(x, y)
    }

    #[test]
    fn orientation_examples() {
        assert_eq!(orientation(&p(0, 0), &p(1, 0), &p(0, 1)), Orientation::Left);
        assert_eq!(orientation(&p(0, 0), &p(1, 0), &p(2, 0)), Orientation::Collinear);
        assert_eq!(orientation(&p(0, 0), &p(0, 1), &p(1, 0)), Orientation::Right);
    }

    #[test]
    fn intersection_examples() {
        use Intersection::*;
        assert_eq!(segments_intersect(&p(0, 0), &p(2, 2), &p(0, 2), &p(2, 0)), ProperCross);
        assert_eq!(segments_intersect(&p(0, 0), &p(1, 0), &p(1, 0), &p(2, 1)), Touch);
        assert_eq!(segments_intersect(&p(0, 0), &p(1, 0), &p(0, 1), &p(1, 1)), None);
        assert_eq!(segments_intersect(&p(0, 0), &p(3, 0), &p(1, 0), &p(5, 0)), Overlap);
        assert_eq!(segments_intersect(&p(0, 0), &p(1, 0), &p(1, 0), &p(5, 0)), Touch);
        assert_eq!(segments_intersect(&p(0, 0), &p(1, 0), &p(2, 0), &p(5, 0)), None);
        // T junction
        assert_eq!(segments_intersect(&p(0, 0), &p(4, 0), &p(2, 0), &p(2, 3)), Touch);
        // vertical collinear overlap
        assert_eq!(segments_intersect(&p(0, 0), &p(0, 4), &p(0, 3), &p(0, 9)), Overlap);
    }

    #[test]
    fn rational_coordinates() {
        let a = Point::new(ratio(1, 3), ratio(1, 3));
        assert!(on_segment(&p(0, 0), &p(1, 1), &a));
        assert!(!on_segment(&p(0, 0), &p(1, 1), &Point::new(ratio(1, 3), ratio(1, 2))));
    }
}
