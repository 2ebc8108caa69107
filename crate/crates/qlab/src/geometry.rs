//! Quadrance, circles, and the circle-intersection law over F_q^2.
//!
//! The intersection count of two circles C_i(X), C_j(Y) with k = Q(X,Y)
//! depends only on (i, j, k) through the square class of the discriminant
//!
//! ```text
//! f(i,j,k) = (2ij + 2jk + 2ki - i^2 - j^2 - k^2) / 4
//! ```
//!
//! which equals both `kj - (i-j-k)^2/4` and `ij - (k-i-j)^2/4`; the
//! expansion is symmetric in all three arguments (covered by tests, not
//! assumed). Counting itself is done two independent ways: the closed-form
//! prediction from the square class, and a brute-force point-set
//! intersection that never solves any algebra.

use crate::ffield::{Field, FieldElement, SquareClass};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeometryError {
    #[error("the intersection law requires nonzero quadrances (got a zero among i, j, k)")]
    ZeroQuadrance,
}

/// A point of F_q^2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: FieldElement,
    pub y: FieldElement,
}

impl Point {
    pub fn new(x: FieldElement, y: FieldElement) -> Self {
        Point { x, y }
    }
}

/// The set of points at quadrance `quadrance` from `center`. Zero and
/// non-square quadrances are legal; the point set may be degenerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Circle {
    pub center: Point,
    pub quadrance: FieldElement,
}

/// Number of intersection points of two circles in general position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntersectionCount {
    Zero,
    One,
    Two,
}

impl IntersectionCount {
    pub fn count(self) -> usize {
        match self {
            IntersectionCount::Zero => 0,
            IntersectionCount::One => 1,
            IntersectionCount::Two => 2,
        }
    }
}

/// Q(a, b) = (b.x - a.x)^2 + (b.y - a.y)^2.
pub fn quadrance(f: &Field, a: Point, b: Point) -> FieldElement {
    let dx = f.sub(b.x, a.x);
    let dy = f.sub(b.y, a.y);
    f.add(f.mul(dx, dx), f.mul(dy, dy))
}

/// Canonical index of a point: idx(x) * q + idx(y).
pub fn point_index(f: &Field, p: Point) -> usize {
    (f.index_of(p.x) * f.q() + f.index_of(p.y)) as usize
}

/// Inverse of [`point_index`].
pub fn point_at(f: &Field, index: usize) -> Point {
    let q = f.q();
    let i = index as u64;
    Point::new(f.element(i / q), f.element(i % q))
}

/// All points of the circle, in canonical vertex order.
pub fn circle_points(f: &Field, c: &Circle) -> Vec<Point> {
    let q = f.q();
    let mut out = Vec::new();
    for i in 0..q * q {
        let p = point_at(f, i as usize);
        if quadrance(f, c.center, p) == c.quadrance {
            out.push(p);
        }
    }
    out
}

/// The symmetric discriminant (2ij + 2jk + 2ki - i^2 - j^2 - k^2) / 4.
pub fn f_invariant(f: &Field, i: FieldElement, j: FieldElement, k: FieldElement) -> FieldElement {
    let two = f.from_int(2);
    let cross = f.mul(two, f.add(f.add(f.mul(i, j), f.mul(j, k)), f.mul(k, i)));
    let squares = f.add(f.add(f.mul(i, i), f.mul(j, j)), f.mul(k, k));
    let four_inv = f
        .inv(f.from_int(4))
        .expect("4 is invertible in every field of odd characteristic");
    f.mul(f.sub(cross, squares), four_inv)
}

/// Predicted number of intersection points of C_i(X) and C_j(Y) when
/// Q(X,Y) = k, for nonzero i, j, k: 0/1/2 as f(i,j,k) is a non-square,
/// zero, or a square. Zero arguments are outside the law's hypothesis and
/// are rejected rather than extrapolated.
pub fn predicted_intersections(
    f: &Field,
    i: FieldElement,
    j: FieldElement,
    k: FieldElement,
) -> Result<IntersectionCount, GeometryError> {
    if f.is_zero(i) || f.is_zero(j) || f.is_zero(k) {
        return Err(GeometryError::ZeroQuadrance);
    }
    Ok(match f.square_class(f_invariant(f, i, j, k)) {
        SquareClass::NonSquare => IntersectionCount::Zero,
        SquareClass::Zero => IntersectionCount::One,
        SquareClass::Square => IntersectionCount::Two,
    })
}

/// Brute-force intersection count of C_i(X) and C_j(Y): scans all q^2
/// points. Accepts any arguments, including degenerate ones.
pub fn oracle_intersections(
    f: &Field,
    x: Point,
    y: Point,
    i: FieldElement,
    j: FieldElement,
) -> usize {
    let q = f.q();
    let mut count = 0;
    for idx in 0..q * q {
        let z = point_at(f, idx as usize);
        if quadrance(f, x, z) == i && quadrance(f, y, z) == j {
            count += 1;
        }
    }
    count
}

/// Square class of f(1,1,1) = 3/4: `NonSquare` predicts a triangle-free
/// D_q, anything else predicts at least one triangle.
pub fn triangle_predicate(f: &Field) -> SquareClass {
    let one = f.one();
    f.square_class(f_invariant(f, one, one, one))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::PrimePower;

    fn field(q: u64) -> Field {
        Field::new(PrimePower::from_order(q).unwrap())
    }

    fn pt(f: &Field, x: i64, y: i64) -> Point {
        Point::new(f.from_int(x), f.from_int(y))
    }

    #[test]
    fn quadrance_values() {
        let f5 = field(5);
        // 1 + 4 = 5 = 0: distinct points at quadrance zero.
        assert_eq!(quadrance(&f5, pt(&f5, 0, 0), pt(&f5, 1, 2)), f5.zero());
        assert_eq!(quadrance(&f5, pt(&f5, 3, 1), pt(&f5, 3, 1)), f5.zero());
        let f7 = field(7);
        assert_eq!(quadrance(&f7, pt(&f7, 1, 1), pt(&f7, 2, 3)), f7.from_int(5));
    }

    #[test]
    fn unit_circle_sizes() {
        for (q, expected) in [(3u64, 4usize), (7, 8), (5, 4)] {
            let f = field(q);
            let c = Circle {
                center: pt(&f, 0, 0),
                quadrance: f.one(),
            };
            assert_eq!(circle_points(&f, &c).len(), expected, "q={q}");
        }
        let f3 = field(3);
        let c = Circle {
            center: pt(&f3, 0, 0),
            quadrance: f3.one(),
        };
        let pts = circle_points(&f3, &c);
        let expected = [pt(&f3, 0, 1), pt(&f3, 0, 2), pt(&f3, 1, 0), pt(&f3, 2, 0)];
        assert_eq!(pts.len(), 4);
        for e in expected {
            assert!(pts.contains(&e));
        }
    }

    #[test]
    fn circle_size_formula() {
        // |C_1(0)| = q - (-1)^((q-1)/2) for every supported small q.
        for pp in PrimePower::range(3, 27) {
            let f = Field::new(pp);
            let c = Circle {
                center: Point::new(f.zero(), f.zero()),
                quadrance: f.one(),
            };
            let sign: i64 = if (pp.q() - 1) / 2 % 2 == 0 { 1 } else { -1 };
            let expected = (pp.q() as i64 - sign) as usize;
            assert_eq!(circle_points(&f, &c).len(), expected, "q={}", pp.q());
        }
    }

    #[test]
    fn f_invariant_values() {
        let f5 = field(5);
        let one = f5.one();
        // 3/4 = 3 * 4 = 12 = 2 mod 5.
        assert_eq!(f_invariant(&f5, one, one, one), f5.from_int(2));
        // The two asymmetric routes from the closed form agree with the
        // symmetric expansion (verified identity, not assumed).
        for q in [5u64, 7, 9, 13] {
            let f = field(q);
            for ai in 0..f.q() {
                for bi in 0..f.q() {
                    for ci in 0..f.q().min(7) {
                        let (i, j, k) = (f.element(ai), f.element(bi), f.element(ci));
                        let four_inv = f.inv(f.from_int(4)).unwrap();
                        let route_a = {
                            // kj - (i-j-k)^2 / 4
                            let d = f.sub(f.sub(i, j), k);
                            f.sub(f.mul(k, j), f.mul(f.mul(d, d), four_inv))
                        };
                        let route_b = {
                            // ij - (k-i-j)^2 / 4
                            let d = f.sub(f.sub(k, i), j);
                            f.sub(f.mul(i, j), f.mul(f.mul(d, d), four_inv))
                        };
                        let sym = f_invariant(&f, i, j, k);
                        assert_eq!(route_a, sym);
                        assert_eq!(route_b, sym);
                    }
                }
            }
        }
    }

    #[test]
    fn f_invariant_permutation_symmetry() {
        for q in [5u64, 9, 13] {
            let f = field(q);
            for ai in 0..f.q() {
                for bi in 0..ai + 1 {
                    for ci in 0..bi + 1 {
                        let (i, j, k) = (f.element(ai), f.element(bi), f.element(ci));
                        let base = f_invariant(&f, i, j, k);
                        for (a, b, c) in [(i, k, j), (j, i, k), (j, k, i), (k, i, j), (k, j, i)] {
                            assert_eq!(f_invariant(&f, a, b, c), base);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn predicted_counts() {
        let f5 = field(5);
        let one = f5.one();
        assert_eq!(
            predicted_intersections(&f5, one, one, one),
            Ok(IntersectionCount::Zero)
        );
        let f13 = field(13);
        let one13 = f13.one();
        assert_eq!(
            predicted_intersections(&f13, one13, one13, one13),
            Ok(IntersectionCount::Two)
        );
        // Tangency: f(1,1,4) = 0 in every odd field.
        for q in [3u64, 5, 7, 9, 11, 13, 25, 27] {
            let f = field(q);
            assert_eq!(
                predicted_intersections(&f, f.one(), f.one(), f.from_int(4)),
                Ok(IntersectionCount::One),
                "q={q}"
            );
        }
        assert_eq!(
            predicted_intersections(&f5, f5.zero(), one, one),
            Err(GeometryError::ZeroQuadrance)
        );
    }

    #[test]
    fn oracle_counts() {
        let f5 = field(5);
        assert_eq!(
            oracle_intersections(&f5, pt(&f5, 0, 0), pt(&f5, 1, 0), f5.one(), f5.one()),
            0
        );
        let f13 = field(13);
        assert_eq!(
            oracle_intersections(&f13, pt(&f13, 0, 0), pt(&f13, 1, 0), f13.one(), f13.one()),
            2
        );
        // Full coincidence (outside the law's hypothesis): the whole circle.
        let c = Circle {
            center: pt(&f5, 0, 0),
            quadrance: f5.one(),
        };
        assert_eq!(
            oracle_intersections(&f5, pt(&f5, 0, 0), pt(&f5, 0, 0), f5.one(), f5.one()),
            circle_points(&f5, &c).len()
        );
    }

    #[test]
    fn oracle_matches_prediction_exhaustively() {
        // Fix X at the origin (translation invariance is tested separately)
        // and sweep every Y with k != 0 and every nonzero (i, j).
        for q in [3u64, 5, 7] {
            let f = field(q);
            let origin = pt(&f, 0, 0);
            for yidx in 1..q * q {
                let y = point_at(&f, yidx as usize);
                let k = quadrance(&f, origin, y);
                if f.is_zero(k) {
                    continue;
                }
                for ii in 1..q {
                    for ji in 1..q {
                        let i = f.element(ii);
                        let j = f.element(ji);
                        let predicted = predicted_intersections(&f, i, j, k).unwrap().count();
                        let counted = oracle_intersections(&f, origin, y, i, j);
                        assert_eq!(counted, predicted, "q={q} y={yidx} i={ii} j={ji}");
                    }
                }
            }
        }
    }

    #[test]
    fn triangle_predicate_small_fields() {
        assert_eq!(triangle_predicate(&field(5)), SquareClass::NonSquare);
        assert_eq!(triangle_predicate(&field(7)), SquareClass::NonSquare);
        assert_eq!(triangle_predicate(&field(3)), SquareClass::Zero);
        assert_eq!(triangle_predicate(&field(13)), SquareClass::Square);
    }

    #[test]
    fn quadrance_translation_invariance() {
        let f = field(9);
        for t in 0..f.q() * f.q() {
            let tr = point_at(&f, t as usize);
            for (ai, bi) in [(5, 17), (0, 80), (33, 7), (64, 64)] {
                let a = point_at(&f, ai);
                let b = point_at(&f, bi);
                let at = Point::new(f.add(a.x, tr.x), f.add(a.y, tr.y));
                let bt = Point::new(f.add(b.x, tr.x), f.add(b.y, tr.y));
                assert_eq!(quadrance(&f, a, b), quadrance(&f, at, bt));
            }
        }
    }

    #[test]
    fn circles_partition_the_plane() {
        // For a fixed center, every point lies on exactly one circle.
        let f = field(7);
        let center = pt(&f, 2, 3);
        let mut seen = vec![0usize; (f.q() * f.q()) as usize];
        for ki in 0..f.q() {
            let c = Circle {
                center,
                quadrance: f.element(ki),
            };
            for p in circle_points(&f, &c) {
                seen[point_index(&f, p)] += 1;
            }
        }
        assert!(seen.iter().all(|&c| c == 1));
    }
}
