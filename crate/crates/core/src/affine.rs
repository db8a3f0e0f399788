//! 2D and 3D translations, rotations, and the xy-plane reflection,
//! applied to single points and to whole polytopes.
//!
//! Rotations by integer multiples of a quarter turn use an exact
//! integer cosine/sine table, so the worked vertex lists stay in rational
//! arithmetic end to end. Any other angle degrades to float mode: the
//! rotated coordinates are computed in `f64` and converted back to exact
//! scalars representing those floats.

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::measure::{Point2, Point3};
use crate::scalar::Scalar;

/// A rotation angle: an exact quarter-turn count for multiples of π/2,
/// float radians otherwise.
#[derive(Clone, Copy, PartialEq, Debug)]
pub enum Angle {
    /// `QuarterTurns(k)` is `k * π/2` with `k` in `0..4`.
    QuarterTurns(u8),
    Radians(f64),
}

impl Angle {
    pub fn quarter_turns(k: i64) -> Angle {
        Angle::QuarterTurns(k.rem_euclid(4) as u8)
    }

    /// Parse an angle token: `0`, `pi/2`, `pi`, `3pi/2` are exact;
    /// anything else must be a float radian literal.
    pub fn parse(text: &str) -> Result<Angle> {
        match text.trim() {
            "0" => Ok(Angle::QuarterTurns(0)),
            "pi/2" => Ok(Angle::QuarterTurns(1)),
            "pi" => Ok(Angle::QuarterTurns(2)),
            "3pi/2" => Ok(Angle::QuarterTurns(3)),
            other => other
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .map(Angle::Radians)
                .ok_or_else(|| Error::Parse(format!("malformed angle '{other}'"))),
        }
    }

    pub fn radians(&self) -> f64 {
        match self {
            Angle::QuarterTurns(k) => f64::from(*k) * std::f64::consts::FRAC_PI_2,
            Angle::Radians(r) => *r,
        }
    }

    /// Angle addition; stays exact when both sides are quarter turns.
    pub fn add(&self, other: &Angle) -> Angle {
        match (self, other) {
            (Angle::QuarterTurns(a), Angle::QuarterTurns(b)) => {
                Angle::quarter_turns(i64::from(*a) + i64::from(*b))
            }
            _ => Angle::Radians(self.radians() + other.radians()),
        }
    }

    fn cos_sin(&self) -> CosSin {
        match self {
            Angle::QuarterTurns(k) => {
                let (c, s) = match k {
                    0 => (1, 0),
                    1 => (0, 1),
                    2 => (-1, 0),
                    _ => (0, -1),
                };
                CosSin::Exact(Scalar::from(c), Scalar::from(s))
            }
            Angle::Radians(r) => CosSin::Approx(r.cos(), r.sin()),
        }
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Angle::QuarterTurns(0) => f.write_str("0"),
            Angle::QuarterTurns(1) => f.write_str("pi/2"),
            Angle::QuarterTurns(2) => f.write_str("pi"),
            Angle::QuarterTurns(_) => f.write_str("3pi/2"),
            Angle::Radians(r) => write!(f, "{r}"),
        }
    }
}

enum CosSin {
    Exact(Scalar, Scalar),
    Approx(f64, f64),
}

impl CosSin {
    fn scalars(&self) -> Result<(Scalar, Scalar)> {
        match self {
            CosSin::Exact(c, s) => Ok((c.clone(), s.clone())),
            CosSin::Approx(c, s) => Ok((Scalar::from_f64(*c)?, Scalar::from_f64(*s)?)),
        }
    }
}

/// A plane transform.
#[derive(Clone, PartialEq, Debug)]
pub enum Transform2 {
    Translation(Scalar, Scalar),
    Rotation(Angle),
    /// Outer-after-inner composition that has no simpler form.
    Sequence(Box<Transform2>, Box<Transform2>),
}

/// A space transform. Rotation is about the z-axis; reflection is
/// through the xy-plane.
#[derive(Clone, PartialEq, Debug)]
pub enum Transform3 {
    Translation(Scalar, Scalar, Scalar),
    RotationZ(Angle),
    ReflectionXy,
    Sequence(Box<Transform3>, Box<Transform3>),
}

/// Apply a plane transform to a point; the label is preserved.
pub fn apply2(t: &Transform2, p: &Point2) -> Result<Point2> {
    let mapped = match t {
        Transform2::Translation(dx, dy) => Point2::new(&p.x + dx, &p.y + dy),
        Transform2::Rotation(angle) => {
            let (c, s) = angle.cos_sin().scalars()?;
            Point2::new(&(&c * &p.x) - &(&s * &p.y), &(&s * &p.x) + &(&c * &p.y))
        }
        Transform2::Sequence(outer, inner) => apply2(outer, &apply2(inner, p)?)?,
    };
    Ok(Point2 {
        label: p.label.clone(),
        ..mapped
    })
}

/// Apply a space transform to a point; the label is preserved.
pub fn apply3(t: &Transform3, p: &Point3) -> Result<Point3> {
    let mapped = match t {
        Transform3::Translation(dx, dy, dz) => Point3::new(&p.x + dx, &p.y + dy, &p.z + dz),
        Transform3::RotationZ(angle) => {
            let (c, s) = angle.cos_sin().scalars()?;
            Point3::new(
                &(&c * &p.x) - &(&s * &p.y),
                &(&s * &p.x) + &(&c * &p.y),
                p.z.clone(),
            )
        }
        Transform3::ReflectionXy => Point3::new(p.x.clone(), p.y.clone(), -&p.z),
        Transform3::Sequence(outer, inner) => apply3(outer, &apply3(inner, p)?)?,
    };
    Ok(Point3 {
        label: p.label.clone(),
        ..mapped
    })
}

/// Compose two plane transforms, `outer` after `inner`. Rotations merge by
/// angle addition and translations by vector addition; anything mixed is
/// kept as an ordered pair evaluated inner-first.
pub fn compose2(outer: &Transform2, inner: &Transform2) -> Transform2 {
    match (outer, inner) {
        (Transform2::Rotation(a), Transform2::Rotation(b)) => Transform2::Rotation(a.add(b)),
        (Transform2::Translation(ax, ay), Transform2::Translation(bx, by)) => {
            Transform2::Translation(ax + bx, ay + by)
        }
        _ => Transform2::Sequence(Box::new(outer.clone()), Box::new(inner.clone())),
    }
}

/// Compose two space transforms, `outer` after `inner`; same merge rules
/// as [`compose2`], and two xy-reflections cancel to an identity
/// translation.
pub fn compose3(outer: &Transform3, inner: &Transform3) -> Transform3 {
    match (outer, inner) {
        (Transform3::RotationZ(a), Transform3::RotationZ(b)) => Transform3::RotationZ(a.add(b)),
        (Transform3::Translation(ax, ay, az), Transform3::Translation(bx, by, bz)) => {
            Transform3::Translation(ax + bx, ay + by, az + bz)
        }
        (Transform3::ReflectionXy, Transform3::ReflectionXy) => {
            Transform3::Translation(Scalar::zero(), Scalar::zero(), Scalar::zero())
        }
        _ => Transform3::Sequence(Box::new(outer.clone()), Box::new(inner.clone())),
    }
}

impl Transform2 {
    /// The linear part as an exact 2×2 matrix (translations contribute the
    /// identity). Float-mode rotation entries are exact images of their
    /// `f64` values.
    pub fn linear_part(&self) -> Result<Matrix> {
        match self {
            Transform2::Translation(..) => Matrix::identity(2),
            Transform2::Rotation(angle) => {
                let (c, s) = angle.cos_sin().scalars()?;
                Matrix::from_rows(vec![vec![c.clone(), -&s], vec![s, c]])
            }
            Transform2::Sequence(outer, inner) => {
                outer.linear_part()?.mat_mul(&inner.linear_part()?)
            }
        }
    }
}

impl Transform3 {
    /// The linear part as an exact 3×3 matrix.
    pub fn linear_part(&self) -> Result<Matrix> {
        match self {
            Transform3::Translation(..) => Matrix::identity(3),
            Transform3::RotationZ(angle) => {
                let (c, s) = angle.cos_sin().scalars()?;
                Matrix::from_rows(vec![
                    vec![c.clone(), -&s, Scalar::zero()],
                    vec![s, c, Scalar::zero()],
                    vec![Scalar::zero(), Scalar::zero(), Scalar::one()],
                ])
            }
            Transform3::ReflectionXy => Matrix::from_rows(vec![
                vec![Scalar::one(), Scalar::zero(), Scalar::zero()],
                vec![Scalar::zero(), Scalar::one(), Scalar::zero()],
                vec![Scalar::zero(), Scalar::zero(), -Scalar::one()],
            ]),
            Transform3::Sequence(outer, inner) => {
                outer.linear_part()?.mat_mul(&inner.linear_part()?)
            }
        }
    }
}

/// A dimension-tagged transform, for callers that dispatch at runtime
/// (the scene format and the CLI).
#[derive(Clone, PartialEq, Debug)]
pub enum Transform {
    Two(Transform2),
    Three(Transform3),
}

impl Transform {
    pub fn dimension(&self) -> usize {
        match self {
            Transform::Two(_) => 2,
            Transform::Three(_) => 3,
        }
    }

    /// Compose `outer` after `inner`; the dimensions must agree.
    pub fn compose(outer: &Transform, inner: &Transform) -> Result<Transform> {
        match (outer, inner) {
            (Transform::Two(a), Transform::Two(b)) => Ok(Transform::Two(compose2(a, b))),
            (Transform::Three(a), Transform::Three(b)) => Ok(Transform::Three(compose3(a, b))),
            _ => Err(Error::Shape(
                "cannot compose transforms of different dimensions".into(),
            )),
        }
    }
}

/// The vertex list of a polytope, tagged by dimension.
#[derive(Clone, PartialEq, Debug)]
pub enum VertexList {
    Two(Vec<Point2>),
    Three(Vec<Point3>),
}

impl VertexList {
    pub fn len(&self) -> usize {
        match self {
            VertexList::Two(v) => v.len(),
            VertexList::Three(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Labeled vertices in dimension 2 or 3 plus an edge list over vertex
/// indices.
#[derive(Clone, PartialEq, Debug)]
pub struct Polytope {
    vertices: VertexList,
    edges: Vec<(usize, usize)>,
}

impl Polytope {
    /// A closed 2D polygon: consecutive vertices are joined and the ring
    /// is closed back to the start.
    pub fn polygon(vertices: Vec<Point2>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::Shape("polygon needs at least one vertex".into()));
        }
        let n = vertices.len();
        let edges = match n {
            1 => Vec::new(),
            2 => vec![(0, 1)],
            _ => (0..n).map(|i| (i, (i + 1) % n)).collect(),
        };
        Ok(Polytope {
            vertices: VertexList::Two(vertices),
            edges,
        })
    }

    /// A 3D polytope with an explicit edge list.
    pub fn wireframe(vertices: Vec<Point3>, edges: Vec<(usize, usize)>) -> Result<Self> {
        let shape = Polytope {
            vertices: VertexList::Three(vertices),
            edges,
        };
        shape.validate_edges()?;
        Ok(shape)
    }

    fn validate_edges(&self) -> Result<()> {
        let n = self.vertices.len();
        if n == 0 {
            return Err(Error::Shape("polytope needs at least one vertex".into()));
        }
        for &(i, j) in &self.edges {
            if i >= n {
                return Err(Error::IndexOutOfRange { index: i, limit: n });
            }
            if j >= n {
                return Err(Error::IndexOutOfRange { index: j, limit: n });
            }
            if i == j {
                return Err(Error::InvalidOperation(format!(
                    "self-loop edge {i}-{j} is not allowed"
                )));
            }
        }
        Ok(())
    }

    pub fn dimension(&self) -> usize {
        match self.vertices {
            VertexList::Two(_) => 2,
            VertexList::Three(_) => 3,
        }
    }

    pub fn vertices(&self) -> &VertexList {
        &self.vertices
    }

    pub fn vertices2(&self) -> Option<&[Point2]> {
        match &self.vertices {
            VertexList::Two(v) => Some(v),
            VertexList::Three(_) => None,
        }
    }

    pub fn vertices3(&self) -> Option<&[Point3]> {
        match &self.vertices {
            VertexList::Three(v) => Some(v),
            VertexList::Two(_) => None,
        }
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

/// Map every vertex of a polytope through a transform of the same
/// dimension; labels and the edge list carry over unchanged.
pub fn apply_polytope(t: &Transform, shape: &Polytope) -> Result<Polytope> {
    match (t, &shape.vertices) {
        (Transform::Two(t2), VertexList::Two(points)) => {
            let vertices = points
                .iter()
                .map(|p| apply2(t2, p))
                .collect::<Result<Vec<_>>>()?;
            Ok(Polytope {
                vertices: VertexList::Two(vertices),
                edges: shape.edges.clone(),
            })
        }
        (Transform::Three(t3), VertexList::Three(points)) => {
            let vertices = points
                .iter()
                .map(|p| apply3(t3, p))
                .collect::<Result<Vec<_>>>()?;
            Ok(Polytope {
                vertices: VertexList::Three(vertices),
                edges: shape.edges.clone(),
            })
        }
        _ => Err(Error::Shape(format!(
            "transform dimension {} does not match shape dimension {}",
            t.dimension(),
            shape.dimension()
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::{det, tetrahedron_volume, triangle_area};

    fn s(v: i64) -> Scalar {
        Scalar::from(v)
    }

    fn p2(x: i64, y: i64) -> Point2 {
        Point2::new(s(x), s(y))
    }

    fn p3(x: i64, y: i64, z: i64) -> Point3 {
        Point3::new(s(x), s(y), s(z))
    }

    fn quad() -> Vec<Point2> {
        vec![p2(1, 1), p2(2, 3), p2(4, 3), p2(5, 1)]
    }

    fn tetra() -> Vec<Point3> {
        vec![p3(1, 5, 0), p3(6, 2, 0), p3(3, 2, 4), p3(0, 0, 0)]
    }

    #[test]
    fn plane_translation_reproduces_worked_vertices() {
        let t = Transform2::Translation(s(3), s(2));
        let moved: Vec<Point2> = quad().iter().map(|p| apply2(&t, p).unwrap()).collect();
        assert_eq!(moved, vec![p2(4, 3), p2(5, 5), p2(7, 5), p2(8, 3)]);
    }

    #[test]
    fn plane_quarter_rotation_reproduces_worked_vertices() {
        let t = Transform2::Rotation(Angle::quarter_turns(1));
        let rotated: Vec<Point2> = quad().iter().map(|p| apply2(&t, p).unwrap()).collect();
        assert_eq!(rotated, vec![p2(-1, 1), p2(-3, 2), p2(-3, 4), p2(-1, 5)]);
    }

    #[test]
    fn zero_rotation_is_the_identity() {
        let t = Transform2::Rotation(Angle::quarter_turns(0));
        for p in quad() {
            assert_eq!(apply2(&t, &p).unwrap(), p);
        }
    }

    #[test]
    fn space_translation_reproduces_worked_vertices() {
        let t = Transform3::Translation(s(4), s(3), s(-2));
        let moved: Vec<Point3> = tetra().iter().map(|p| apply3(&t, p).unwrap()).collect();
        assert_eq!(
            moved,
            vec![p3(5, 8, -2), p3(10, 5, -2), p3(7, 5, 2), p3(4, 3, -2)]
        );
    }

    #[test]
    fn space_quarter_rotation_reproduces_worked_vertices() {
        let t = Transform3::RotationZ(Angle::quarter_turns(1));
        let rotated: Vec<Point3> = tetra().iter().map(|p| apply3(&t, p).unwrap()).collect();
        assert_eq!(
            rotated,
            vec![p3(-5, 1, 0), p3(-2, 6, 0), p3(-2, 3, 4), p3(0, 0, 0)]
        );
    }

    #[test]
    fn xy_reflection_flips_only_the_third_coordinate() {
        let t = Transform3::ReflectionXy;
        assert_eq!(apply3(&t, &p3(3, 2, 4)).unwrap(), p3(3, 2, -4));
        assert_eq!(apply3(&t, &p3(1, 5, 0)).unwrap(), p3(1, 5, 0));
        let reflected: Vec<Point3> = tetra().iter().map(|p| apply3(&t, p).unwrap()).collect();
        assert_eq!(
            reflected,
            vec![p3(1, 5, 0), p3(6, 2, 0), p3(3, 2, -4), p3(0, 0, 0)]
        );
    }

    #[test]
    fn angle_parsing_and_display() {
        assert_eq!(Angle::parse("pi/2").unwrap(), Angle::QuarterTurns(1));
        assert_eq!(Angle::parse("3pi/2").unwrap(), Angle::QuarterTurns(3));
        assert_eq!(Angle::parse("0").unwrap(), Angle::QuarterTurns(0));
        assert_eq!(Angle::parse("0.75").unwrap(), Angle::Radians(0.75));
        assert!(Angle::parse("pi/3").is_err());
        assert!(Angle::parse("nan").is_err());
        for text in ["0", "pi/2", "pi", "3pi/2"] {
            assert_eq!(Angle::parse(text).unwrap().to_string(), text);
        }
    }

    #[test]
    fn composition_matches_sequential_application() {
        let cases: Vec<(Transform2, Transform2)> = vec![
            (
                Transform2::Rotation(Angle::quarter_turns(1)),
                Transform2::Translation(s(3), s(2)),
            ),
            (
                Transform2::Translation(s(-1), s(4)),
                Transform2::Rotation(Angle::quarter_turns(3)),
            ),
            (
                Transform2::Rotation(Angle::quarter_turns(2)),
                Transform2::Rotation(Angle::quarter_turns(3)),
            ),
        ];
        for (outer, inner) in cases {
            let composed = compose2(&outer, &inner);
            for p in quad() {
                assert_eq!(
                    apply2(&composed, &p).unwrap(),
                    apply2(&outer, &apply2(&inner, &p).unwrap()).unwrap()
                );
            }
        }
    }

    #[test]
    fn rotation_composition_adds_angles() {
        let quarter = Transform2::Rotation(Angle::quarter_turns(1));
        assert_eq!(
            compose2(&quarter, &quarter),
            Transform2::Rotation(Angle::quarter_turns(2))
        );
        let t = Transform2::Translation(s(3), s(2));
        let back = Transform2::Translation(s(-3), s(-2));
        assert_eq!(compose2(&t, &back), Transform2::Translation(s(0), s(0)));
    }

    #[test]
    fn double_reflection_is_the_identity() {
        let composed = compose3(&Transform3::ReflectionXy, &Transform3::ReflectionXy);
        for p in tetra() {
            assert_eq!(apply3(&composed, &p).unwrap(), p);
        }
    }

    #[test]
    fn four_quarter_turns_are_the_identity() {
        let quarter = Transform2::Rotation(Angle::quarter_turns(1));
        let mut full = quarter.clone();
        for _ in 0..3 {
            full = compose2(&quarter, &full);
        }
        assert_eq!(full, Transform2::Rotation(Angle::quarter_turns(0)));
        for p in quad() {
            assert_eq!(apply2(&full, &p).unwrap(), p);
        }
    }

    #[test]
    fn rotations_have_determinant_one_and_reflection_minus_one() {
        for k in 0..4 {
            let r2 = Transform2::Rotation(Angle::quarter_turns(k))
                .linear_part()
                .unwrap();
            assert_eq!(det(&r2).unwrap(), Scalar::one());
            let r3 = Transform3::RotationZ(Angle::quarter_turns(k))
                .linear_part()
                .unwrap();
            assert_eq!(det(&r3).unwrap(), Scalar::one());
        }
        let refl = Transform3::ReflectionXy.linear_part().unwrap();
        assert_eq!(det(&refl).unwrap(), -Scalar::one());
    }

    #[test]
    fn float_rotation_is_orthonormal_within_tolerance() {
        let r = Transform2::Rotation(Angle::Radians(0.3))
            .linear_part()
            .unwrap();
        let product = r.transpose().mat_mul(&r).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((product.get(i, j).to_f64() - expect).abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn squared_distances_are_preserved_exactly_in_exact_mode() {
        let d2 = |a: &Point2, b: &Point2| {
            let dx = &a.x - &b.x;
            let dy = &a.y - &b.y;
            &dx * &dx + &dy * &dy
        };
        let transforms = [
            Transform2::Translation(s(3), s(-7)),
            Transform2::Rotation(Angle::quarter_turns(1)),
            Transform2::Rotation(Angle::quarter_turns(3)),
        ];
        let pts = quad();
        for t in &transforms {
            for a in &pts {
                for b in &pts {
                    let (ia, ib) = (apply2(t, a).unwrap(), apply2(t, b).unwrap());
                    assert_eq!(d2(&ia, &ib), d2(a, b));
                }
            }
        }
    }

    #[test]
    fn measures_are_invariant_under_transforms() {
        let t3s = [
            Transform3::Translation(s(4), s(3), s(-2)),
            Transform3::RotationZ(Angle::quarter_turns(1)),
            Transform3::ReflectionXy,
        ];
        let [a, b, c, d] = tetra().try_into().unwrap();
        let volume = tetrahedron_volume(&a, &b, &c, &d).value;
        for t in &t3s {
            let im: Vec<Point3> = [&a, &b, &c, &d]
                .iter()
                .map(|p| apply3(t, p).unwrap())
                .collect();
            assert_eq!(
                tetrahedron_volume(&im[0], &im[1], &im[2], &im[3]).value,
                volume
            );
        }
        let area = triangle_area(&p2(1, 5), &p2(6, 2), &p2(7, 7)).value;
        for t in [
            Transform2::Translation(s(3), s(2)),
            Transform2::Rotation(Angle::quarter_turns(1)),
        ] {
            let im: Vec<Point2> = [p2(1, 5), p2(6, 2), p2(7, 7)]
                .iter()
                .map(|p| apply2(&t, p).unwrap())
                .collect();
            assert_eq!(triangle_area(&im[0], &im[1], &im[2]).value, area);
        }
    }

    #[test]
    fn polytope_transforms_preserve_structure() {
        let shape = Polytope::polygon(vec![
            Point2::with_label(s(1), s(1), "A"),
            Point2::with_label(s(2), s(3), "B"),
            Point2::with_label(s(4), s(3), "C"),
            Point2::with_label(s(5), s(1), "D"),
        ])
        .unwrap();
        let t = Transform::Two(Transform2::Translation(s(3), s(2)));
        let moved = apply_polytope(&t, &shape).unwrap();
        assert_eq!(moved.edges(), shape.edges());
        let verts = moved.vertices2().unwrap();
        assert_eq!(verts[0].label.as_deref(), Some("A"));
        assert_eq!((&verts[0].x, &verts[0].y), (&s(4), &s(3)));

        let wrong = Transform::Three(Transform3::ReflectionXy);
        assert!(matches!(
            apply_polytope(&wrong, &shape),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn polytope_edge_validation() {
        let verts = tetra();
        assert!(Polytope::wireframe(verts.clone(), vec![(0, 4)]).is_err());
        assert!(Polytope::wireframe(verts.clone(), vec![(2, 2)]).is_err());
        assert!(Polytope::wireframe(verts, vec![(0, 1), (1, 2), (2, 3)]).is_ok());
    }
}
