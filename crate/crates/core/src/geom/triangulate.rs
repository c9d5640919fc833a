use super::{locate_in_ring, orientation, Location, Orientation, SimplePolygon};

/// Ear-clipping triangulation.
///
/// Ears are tried in ascending index order, with the first remaining vertex
/// tried last, so a convex polygon comes out as a fan around vertex 0.
/// Triangles are emitted as `[prev, tip, next]` in counter-clockwise order.
pub fn triangulate(poly: &SimplePolygon) -> Vec<[usize; 3]> {
    let v = poly.vertices();
    let mut rest: Vec<usize> = (0..v.len()).collect();
    let mut out = Vec::with_capacity(v.len().saturating_sub(2));
    while rest.len() > 3 {
        let m = rest.len();
        let pos = (1..m)
            .chain(std::iter::once(0))
            .find(|&k| is_ear(poly, &rest, k))
            .expect("a simple polygon always has an ear");
        let prev = rest[(pos + m - 1) % m];
        let next = rest[(pos + 1) % m];
        out.push([prev, rest[pos], next]);
        rest.remove(pos);
    }
    if rest.len() == 3 {
        out.push([rest[0], rest[1], rest[2]]);
    }
    out
}

fn is_ear(poly: &SimplePolygon, rest: &[usize], k: usize) -> bool {
    let v = poly.vertices();
    let m = rest.len();
    let (a, b, c) = (rest[(k + m - 1) % m], rest[k], rest[(k + 1) % m]);
    if orientation(&v[a], &v[b], &v[c]) != Orientation::Left {
        return false;
    }
    let tri = [v[a].clone(), v[b].clone(), v[c].clone()];
    rest.iter()
        .filter(|&&i| i != a && i != b && i != c)
        .all(|&i| locate_in_ring(&v[i], &tri) == Location::Outside)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{validate_simple_polygon, Point};

    fn poly(c: &[(i64, i64)]) -> SimplePolygon {
        validate_simple_polygon(c.iter().map(|&(x, y)| Point::int(x, y)).collect()).unwrap()
    }

    #[test]
    fn square_gives_two() {
        let t = triangulate(&poly(&[(0, 0), (4, 0), (4, 4), (0, 4)]));
        assert_eq!(t, vec![[0, 1, 2], [0, 2, 3]]);
    }

    #[test]
    fn convex_fan_from_zero() {
        let hexagon = poly(&[(2, 0), (4, 1), (4, 3), (2, 4), (0, 3), (0, 1)]);
        let t = triangulate(&hexagon);
        assert_eq!(t.len(), 4);
        for (i, tri) in t.iter().enumerate() {
            assert_eq!(*tri, [0, i + 1, i + 2]);
        }
    }

    #[test]
    fn nonconvex() {
        // an L shape
        let l = poly(&[(0, 0), (4, 0), (4, 2), (2, 2), (2, 4), (0, 4)]);
        let t = triangulate(&l);
        assert_eq!(t.len(), 4);
        let mut area = crate::geom::int(0);
        for tri in &t {
            let r: Vec<Point> = tri.iter().map(|&i| l.vertex(i).clone()).collect();
            area += crate::geom::signed_area2(&r);
        }
        assert_eq!(area, l.area2());
    }
}
