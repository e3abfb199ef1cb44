//! Newton polygons: exact convex hulls of supports and their Minkowski
//! arithmetic.
//!
//! All orientation tests use integer cross products, so hulls of lattice
//! supports are exact. Degenerate hulls (a point, a segment) are
//! first-class values since monomials and binomials arise constantly.

use crate::poly::BiPoly;

/// Convex hull of a support, stored as extreme lattice points in
/// counterclockwise order starting from the lexicographically least
/// vertex. A point has one vertex, a segment two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolygon {
    vertices: Vec<(u64, u64)>,
}

impl NewtonPolygon {
    /// Hull of an explicit point set; `None` when empty.
    pub fn from_points(points: &[(u64, u64)]) -> Option<Self> {
        if points.is_empty() {
            return None;
        }
        Some(NewtonPolygon {
            vertices: convex_hull(points),
        })
    }

    pub fn vertices(&self) -> &[(u64, u64)] {
        &self.vertices
    }

    pub fn is_point(&self) -> bool {
        self.vertices.len() == 1
    }

    pub fn is_segment(&self) -> bool {
        self.vertices.len() == 2
    }
}

fn cross(o: (u64, u64), a: (u64, u64), b: (u64, u64)) -> i128 {
    let (ox, oy) = (o.0 as i128, o.1 as i128);
    let (ax, ay) = (a.0 as i128, a.1 as i128);
    let (bx, by) = (b.0 as i128, b.1 as i128);
    (ax - ox) * (by - oy) - (ay - oy) * (bx - ox)
}

/// Monotone-chain hull keeping only extreme points (collinear interior
/// points are dropped). The result is counterclockwise and starts at the
/// lexicographically least point.
fn convex_hull(points: &[(u64, u64)]) -> Vec<(u64, u64)> {
    let mut pts: Vec<(u64, u64)> = points.to_vec();
    pts.sort_unstable();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<(u64, u64)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2
            && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0
        {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(u64, u64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2
            && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0
        {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// The Newton polygon of a nonzero polynomial; `None` for zero.
pub fn polygon_of(f: &BiPoly) -> Option<NewtonPolygon> {
    let points: Vec<(u64, u64)> = f.support().map(|m| (m.x, m.y)).collect();
    NewtonPolygon::from_points(&points)
}

/// Exact Minkowski sum, computed as the hull of pairwise vertex sums.
pub fn minkowski_sum(p: &NewtonPolygon, q: &NewtonPolygon) -> NewtonPolygon {
    let mut sums = Vec::with_capacity(p.vertices.len() * q.vertices.len());
    for &(a, b) in &p.vertices {
        for &(c, d) in &q.vertices {
            sums.push((a + c, b + d));
        }
    }
    NewtonPolygon::from_points(&sums).expect("nonempty vertex sets")
}

/// Per-vertex outcome of the power-support check.
#[derive(Clone, Debug)]
pub struct VertexPowerReport {
    pub power: u64,
    /// Each vertex `(i, j)` of the polygon with whether `(m*i, m*j)`
    /// appears in the support of `f^m`.
    pub results: Vec<((u64, u64), bool)>,
}

impl VertexPowerReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|(_, ok)| *ok)
    }
}

/// Check that every vertex of the polygon survives in the support of the
/// power: `(m*i, m*j)` must appear in `Sup(f^m)`. `None` for the zero
/// polynomial.
pub fn vertex_power_check(f: &BiPoly, m: u64) -> Option<VertexPowerReport> {
    assert!(m >= 1, "power must be positive");
    let polygon = polygon_of(f)?;
    let fm = f.pow(m);
    let results = polygon
        .vertices()
        .iter()
        .map(|&(i, j)| {
            let target = crate::poly::Monomial::new(i * m, j * m);
            ((i, j), fm.contains_monomial(&target))
        })
        .collect();
    Some(VertexPowerReport { power: m, results })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::parse::parse_poly;

    fn p(text: &str) -> BiPoly {
        parse_poly(text, &FieldSpec::rationals()).expect("parse")
    }

    #[test]
    fn hull_of_monomial_is_a_point() {
        let poly = polygon_of(&p("x^2*y")).unwrap();
        assert!(poly.is_point());
        assert_eq!(poly.vertices(), &[(2, 1)]);
    }

    #[test]
    fn hull_of_binomial_is_a_segment() {
        let poly = polygon_of(&p("x + y")).unwrap();
        assert!(poly.is_segment());
        assert_eq!(poly.vertices(), &[(0, 1), (1, 0)]);
    }

    #[test]
    fn hull_of_unit_square() {
        let poly = polygon_of(&p("1 + x + y + x*y")).unwrap();
        assert_eq!(poly.vertices().len(), 4);
        assert_eq!(poly.vertices(), &[(0, 0), (1, 0), (1, 1), (0, 1)]);
    }

    #[test]
    fn hull_drops_collinear_points() {
        let poly = polygon_of(&p("1 + y + y^2")).unwrap();
        assert!(poly.is_segment());
        assert_eq!(poly.vertices(), &[(0, 0), (0, 2)]);
    }

    #[test]
    fn zero_polynomial_has_no_polygon() {
        assert!(polygon_of(&p("0")).is_none());
    }

    #[test]
    fn minkowski_examples() {
        let point = |x, y| NewtonPolygon::from_points(&[(x, y)]).unwrap();
        assert_eq!(minkowski_sum(&point(2, 1), &point(0, 3)), point(2, 4));

        let seg_x = NewtonPolygon::from_points(&[(0, 0), (1, 0)]).unwrap();
        let seg_y = NewtonPolygon::from_points(&[(0, 0), (0, 1)]).unwrap();
        let square = minkowski_sum(&seg_x, &seg_y);
        assert_eq!(square.vertices(), &[(0, 0), (1, 0), (1, 1), (0, 1)]);

        // Pol(x+y) + Pol(x+y) collapses to the segment (0,2)-(2,0)
        let seg = polygon_of(&p("x + y")).unwrap();
        let doubled = minkowski_sum(&seg, &seg);
        assert!(doubled.is_segment());
        assert_eq!(doubled.vertices(), &[(0, 2), (2, 0)]);
    }

    #[test]
    fn polygon_is_multiplicative() {
        let pairs = [
            ("x + y", "x - y"),
            ("1 + x*y", "x^2 + y^3"),
            ("x^2*y - 3", "1 + x + y"),
        ];
        for (a, b) in pairs {
            let fa = p(a);
            let fb = p(b);
            let lhs = polygon_of(&fa.mul(&fb)).unwrap();
            let rhs = minkowski_sum(&polygon_of(&fa).unwrap(), &polygon_of(&fb).unwrap());
            assert_eq!(lhs, rhs, "{a} times {b}");
        }
    }

    #[test]
    fn vertex_power_examples() {
        let report = vertex_power_check(&p("x + y"), 3).unwrap();
        assert!(report.passed());
        let report = vertex_power_check(&p("1 + x*y"), 4).unwrap();
        assert!(report.passed());
    }
}
