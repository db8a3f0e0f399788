//! Determinants of order ≤ 4 and the areas and volumes they measure.
//!
//! The determinant is computed by cofactor expansion along the first row:
//! at these sizes the expansion is exact, branch-free, and easy to audit
//! against a hand calculation. Degenerate inputs (parallel vectors,
//! collinear or coplanar points) are legal and measure zero.

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// A labeled point in the plane.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Point2 {
    pub x: Scalar,
    pub y: Scalar,
    pub label: Option<String>,
}

impl Point2 {
    pub fn new(x: Scalar, y: Scalar) -> Self {
        Point2 { x, y, label: None }
    }

    pub fn with_label(x: Scalar, y: Scalar, label: impl Into<String>) -> Self {
        Point2 {
            x,
            y,
            label: Some(label.into()),
        }
    }

    /// Parse a `(x,y)` literal.
    pub fn parse(text: &str) -> Result<Self> {
        let coords = parse_point_coords(text)?;
        match <[Scalar; 2]>::try_from(coords) {
            Ok([x, y]) => Ok(Point2::new(x, y)),
            Err(_) => Err(Error::Parse(format!("expected a 2D point, got '{text}'"))),
        }
    }
}

/// A labeled point in space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Point3 {
    pub x: Scalar,
    pub y: Scalar,
    pub z: Scalar,
    pub label: Option<String>,
}

impl Point3 {
    pub fn new(x: Scalar, y: Scalar, z: Scalar) -> Self {
        Point3 {
            x,
            y,
            z,
            label: None,
        }
    }

    pub fn with_label(x: Scalar, y: Scalar, z: Scalar, label: impl Into<String>) -> Self {
        Point3 {
            x,
            y,
            z,
            label: Some(label.into()),
        }
    }

    /// Parse a `(x,y,z)` literal.
    pub fn parse(text: &str) -> Result<Self> {
        let coords = parse_point_coords(text)?;
        match <[Scalar; 3]>::try_from(coords) {
            Ok([x, y, z]) => Ok(Point3::new(x, y, z)),
            Err(_) => Err(Error::Parse(format!("expected a 3D point, got '{text}'"))),
        }
    }
}

/// Split a parenthesized point literal `(a,b[,c])` into its coordinates.
pub fn parse_point_coords(text: &str) -> Result<Vec<Scalar>> {
    let s = text.trim();
    let inner = s
        .strip_prefix('(')
        .and_then(|rest| rest.strip_suffix(')'))
        .ok_or_else(|| {
            Error::Parse(format!("point literal '{s}' needs surrounding parentheses"))
        })?;
    let coords: Vec<Scalar> = inner.split(',').map(Scalar::parse).collect::<Result<_>>()?;
    if coords.len() < 2 || coords.len() > 3 {
        return Err(Error::Parse(format!(
            "point literal '{s}' must have 2 or 3 coordinates"
        )));
    }
    Ok(coords)
}

/// What a [`MeasureResult`] quantifies.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MeasureKind {
    Area,
    Volume,
}

impl fmt::Display for MeasureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MeasureKind::Area => "area",
            MeasureKind::Volume => "volume",
        })
    }
}

/// An exact measure together with the signed determinant value beneath it,
/// so orientation stays observable.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MeasureResult {
    pub value: Scalar,
    pub signed_value: Scalar,
    pub kind: MeasureKind,
}

impl MeasureResult {
    fn from_signed(signed_value: Scalar, kind: MeasureKind) -> Self {
        MeasureResult {
            value: signed_value.abs(),
            signed_value,
            kind,
        }
    }
}

/// Exact determinant of a square matrix of order 1 to 4, by cofactor
/// expansion along the first row.
pub fn det(a: &Matrix) -> Result<Scalar> {
    if !a.is_square() {
        return Err(Error::Shape(format!(
            "determinant requires a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    if a.rows() > 4 {
        return Err(Error::Shape(format!(
            "determinant limited to order 4, got order {}",
            a.rows()
        )));
    }
    Ok(det_unchecked(a))
}

fn det_unchecked(a: &Matrix) -> Scalar {
    let n = a.rows();
    if n == 1 {
        return a.get(0, 0).clone();
    }
    if n == 2 {
        return a.get(0, 0) * a.get(1, 1) - a.get(0, 1) * a.get(1, 0);
    }
    let mut acc = Scalar::zero();
    for j in 0..n {
        if a.get(0, j).is_zero() {
            continue;
        }
        let minor = Matrix::from_fn(n - 1, n - 1, |r, c| {
            a.get(r + 1, if c < j { c } else { c + 1 }).clone()
        })
        .expect("minor of an order >= 2 matrix is nonempty");
        let cofactor = a.get(0, j) * det_unchecked(&minor);
        if j % 2 == 0 {
            acc = acc + cofactor;
        } else {
            acc = acc - cofactor;
        }
    }
    acc
}

/// Area of the parallelogram spanned by two plane vectors:
/// `|u_x v_y - u_y v_x|`. Zero exactly when the vectors are parallel.
pub fn parallelogram_area_from_vectors(u: &Point2, v: &Point2) -> MeasureResult {
    let signed = &u.x * &v.y - &u.y * &v.x;
    MeasureResult::from_signed(signed, MeasureKind::Area)
}

/// Area of a parallelogram from any three of its vertices, via the
/// 3×3 determinant of coordinates augmented with a column of ones.
pub fn parallelogram_area_from_vertices(a: &Point2, b: &Point2, c: &Point2) -> MeasureResult {
    let m = Matrix::from_rows(vec![
        vec![a.x.clone(), a.y.clone(), Scalar::one()],
        vec![b.x.clone(), b.y.clone(), Scalar::one()],
        vec![c.x.clone(), c.y.clone(), Scalar::one()],
    ])
    .expect("fixed 3x3 shape");
    MeasureResult::from_signed(det_unchecked(&m), MeasureKind::Area)
}

/// Area of the triangle with the given vertices: half the parallelogram
/// measure on the same vertices.
pub fn triangle_area(a: &Point2, b: &Point2, c: &Point2) -> MeasureResult {
    let parallelogram = parallelogram_area_from_vertices(a, b, c);
    let half = Scalar::new(1, 2).expect("nonzero denominator");
    MeasureResult::from_signed(parallelogram.signed_value * half, MeasureKind::Area)
}

/// Volume of the parallelepiped spanned by three space vectors: the
/// absolute determinant of the matrix with those vectors as rows.
pub fn parallelepiped_volume(u: &Point3, v: &Point3, w: &Point3) -> MeasureResult {
    let m = Matrix::from_rows(vec![
        vec![u.x.clone(), u.y.clone(), u.z.clone()],
        vec![v.x.clone(), v.y.clone(), v.z.clone()],
        vec![w.x.clone(), w.y.clone(), w.z.clone()],
    ])
    .expect("fixed 3x3 shape");
    MeasureResult::from_signed(det_unchecked(&m), MeasureKind::Volume)
}

/// Volume of the tetrahedron `ABCD`: one sixth of the parallelepiped on
/// the edge vectors from `d`.
pub fn tetrahedron_volume(a: &Point3, b: &Point3, c: &Point3, d: &Point3) -> MeasureResult {
    let edge = |p: &Point3| Point3::new(&p.x - &d.x, &p.y - &d.y, &p.z - &d.z);
    let parallelepiped = parallelepiped_volume(&edge(a), &edge(b), &edge(c));
    let sixth = Scalar::new(1, 6).expect("nonzero denominator");
    MeasureResult::from_signed(parallelepiped.signed_value * sixth, MeasureKind::Volume)
}
