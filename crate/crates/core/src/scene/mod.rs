//! A line-oriented scene description: named geometric objects, transform
//! directives that derive new objects, measurement requests, and render
//! hints, with everything carried in exact coordinates.
//!
//! Grammar, one directive per line, `#` starts a comment, tokens are
//! whitespace-separated:
//!
//! ```text
//! dim 2|3
//! point NAME (x,y[,z])
//! polygon NAME (x,y) ...                        # 2D, closed ring
//! polytope NAME (x,y,z) ... edges i-j,i-j,...   # 3D, 1-based indices
//! translate SRC by (p,q[,r]) as DST
//! rotate SRC by ANGLE as DST                    # 3D rotates about the z-axis
//! reflectxy SRC as DST                          # 3D only
//! measure area|volume NAME
//! render NAME NAME ...
//! ```
//!
//! Numbers accept decimal or `p/q` forms. The `dim` line, when present,
//! must come first; without one the scene is 2D.

pub mod layout;
pub mod svg;

pub use layout::{layout_project, Element, Figure, Viewport};
pub use svg::emit_svg;

use std::fmt::Write as _;

use crate::affine::{
    apply2, apply3, apply_polytope, Angle, Polytope, Transform, Transform2, Transform3, VertexList,
};
use crate::error::{Error, Result};
use crate::measure::{parse_point_coords, tetrahedron_volume, MeasureKind, Point2, Point3};
use crate::scalar::Scalar;

/// A named object: a single labeled point or a polytope.
#[derive(Clone, PartialEq, Debug)]
pub enum SceneObject {
    Point2(Point2),
    Point3(Point3),
    Shape(Polytope),
}

impl SceneObject {
    pub fn dimension(&self) -> usize {
        match self {
            SceneObject::Point2(_) => 2,
            SceneObject::Point3(_) => 3,
            SceneObject::Shape(p) => p.dimension(),
        }
    }
}

/// An object slot; `declared` is false for objects materialized by
/// transform directives.
#[derive(Clone, PartialEq, Debug)]
pub struct SceneEntry {
    pub name: String,
    pub object: SceneObject,
    pub declared: bool,
}

/// One processed line: a transform application, a measurement request, or
/// a render hint.
#[derive(Clone, PartialEq, Debug)]
pub enum Directive {
    Transform {
        source: String,
        dest: String,
        transform: Transform,
    },
    Measure {
        kind: MeasureKind,
        target: String,
    },
    Render {
        targets: Vec<String>,
    },
}

/// A parsed scene: a single dimension, objects in definition order (with
/// transform-derived objects already materialized), and the directive list.
#[derive(Clone, PartialEq, Debug)]
pub struct Scene {
    dimension: u8,
    entries: Vec<SceneEntry>,
    directives: Vec<Directive>,
}

impl Scene {
    /// Parse scene text; errors carry the 1-based line number.
    pub fn parse(text: &str) -> Result<Scene> {
        Parser::default().run(text)
    }

    pub fn dimension(&self) -> u8 {
        self.dimension
    }

    pub fn entries(&self) -> &[SceneEntry] {
        &self.entries
    }

    pub fn directives(&self) -> &[Directive] {
        &self.directives
    }

    pub fn object(&self, name: &str) -> Option<&SceneObject> {
        self.entries
            .iter()
            .find(|e| e.name == name)
            .map(|e| &e.object)
    }

    /// Serialize back to scene text. Parsing the result reconstructs a
    /// structurally equal scene: declared objects are written out and
    /// derived ones are re-created by their directives.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "dim {}", self.dimension);
        for entry in self.entries.iter().filter(|e| e.declared) {
            match &entry.object {
                SceneObject::Point2(p) => {
                    let _ = writeln!(out, "point {} ({},{})", entry.name, p.x, p.y);
                }
                SceneObject::Point3(p) => {
                    let _ = writeln!(out, "point {} ({},{},{})", entry.name, p.x, p.y, p.z);
                }
                SceneObject::Shape(shape) => match shape.vertices() {
                    VertexList::Two(points) => {
                        let _ = write!(out, "polygon {}", entry.name);
                        for p in points {
                            let _ = write!(out, " ({},{})", p.x, p.y);
                        }
                        out.push('\n');
                    }
                    VertexList::Three(points) => {
                        let _ = write!(out, "polytope {}", entry.name);
                        for p in points {
                            let _ = write!(out, " ({},{},{})", p.x, p.y, p.z);
                        }
                        let edges: Vec<String> = shape
                            .edges()
                            .iter()
                            .map(|(i, j)| format!("{}-{}", i + 1, j + 1))
                            .collect();
                        let _ = writeln!(out, " edges {}", edges.join(","));
                    }
                },
            }
        }
        for directive in &self.directives {
            match directive {
                Directive::Transform {
                    source,
                    dest,
                    transform,
                } => match transform {
                    Transform::Two(Transform2::Translation(x, y)) => {
                        let _ = writeln!(out, "translate {source} by ({x},{y}) as {dest}");
                    }
                    Transform::Three(Transform3::Translation(x, y, z)) => {
                        let _ = writeln!(out, "translate {source} by ({x},{y},{z}) as {dest}");
                    }
                    Transform::Two(Transform2::Rotation(angle)) => {
                        let _ = writeln!(out, "rotate {source} by {angle} as {dest}");
                    }
                    Transform::Three(Transform3::RotationZ(angle)) => {
                        let _ = writeln!(out, "rotate {source} by {angle} as {dest}");
                    }
                    Transform::Three(Transform3::ReflectionXy) => {
                        let _ = writeln!(out, "reflectxy {source} as {dest}");
                    }
                    _ => unreachable!("the grammar only produces simple transforms"),
                },
                Directive::Measure { kind, target } => {
                    let _ = writeln!(out, "measure {kind} {target}");
                }
                Directive::Render { targets } => {
                    let _ = writeln!(out, "render {}", targets.join(" "));
                }
            }
        }
        out
    }

    /// One line per measure directive, in directive order, e.g.
    /// `area P = 28`. Values are exact.
    pub fn measurements(&self) -> Vec<String> {
        self.directives
            .iter()
            .filter_map(|d| match d {
                Directive::Measure { kind, target } => {
                    let object = self.object(target).expect("validated at parse");
                    let value = match (kind, object) {
                        (MeasureKind::Area, SceneObject::Shape(shape)) => {
                            polygon_area(shape.vertices2().expect("validated at parse"))
                        }
                        (MeasureKind::Volume, SceneObject::Shape(shape)) => {
                            let v = shape.vertices3().expect("validated at parse");
                            tetrahedron_volume(&v[0], &v[1], &v[2], &v[3]).value
                        }
                        _ => unreachable!("measure targets are shapes, validated at parse"),
                    };
                    Some(format!("{kind} {target} = {value}"))
                }
                _ => None,
            })
            .collect()
    }
}

/// Exact shoelace area of a closed polygon given its vertex ring.
/// Degenerate rings (fewer than three vertices) measure zero.
fn polygon_area(vertices: &[Point2]) -> Scalar {
    let n = vertices.len();
    if n < 3 {
        return Scalar::zero();
    }
    let mut doubled = Scalar::zero();
    for i in 0..n {
        let a = &vertices[i];
        let b = &vertices[(i + 1) % n];
        doubled = doubled + &a.x * &b.y - &b.x * &a.y;
    }
    (doubled * Scalar::new(1, 2).expect("nonzero denominator")).abs()
}

#[derive(Default)]
struct Parser {
    dimension: Option<u8>,
    entries: Vec<SceneEntry>,
    directives: Vec<Directive>,
}

impl Parser {
    fn run(mut self, text: &str) -> Result<Scene> {
        for (index, raw) in text.lines().enumerate() {
            let line_no = index + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            self.line(line_no, line).map_err(|e| at_line(line_no, e))?;
        }
        Ok(Scene {
            dimension: self.dimension.unwrap_or(2),
            entries: self.entries,
            directives: self.directives,
        })
    }

    fn dim(&self) -> u8 {
        self.dimension.unwrap_or(2)
    }

    fn line(&mut self, line_no: usize, line: &str) -> Result<()> {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let mut cursor = Cursor {
            tokens: &tokens,
            at: 1,
        };
        match tokens[0] {
            "dim" => {
                if self.dimension.is_some()
                    || !self.entries.is_empty()
                    || !self.directives.is_empty()
                {
                    return Err(Error::SceneParse {
                        line: line_no,
                        message: "dim must be the first directive".into(),
                    });
                }
                let d = cursor.next("dimension")?;
                cursor.finish()?;
                self.dimension = match d {
                    "2" => Some(2),
                    "3" => Some(3),
                    other => {
                        return Err(parse_msg(format!(
                            "dimension must be 2 or 3, got '{other}'"
                        )))
                    }
                };
            }
            "point" => {
                let name = cursor.next("object name")?.to_string();
                let literal = cursor.next("point literal")?;
                cursor.finish()?;
                let coords = parse_point_coords(literal)?;
                let object = self.point_object(&name, coords)?;
                self.define(name, object, true)?;
            }
            "polygon" => {
                if self.dim() != 2 {
                    return Err(parse_msg("polygon requires a 2D scene".into()));
                }
                let name = cursor.next("object name")?.to_string();
                let mut vertices = Vec::new();
                while let Some(literal) = cursor.next_opt() {
                    vertices.push(self.point2(literal)?);
                }
                if vertices.is_empty() {
                    return Err(parse_msg("polygon needs at least one vertex".into()));
                }
                let shape = Polytope::polygon(vertices)?;
                self.define(name, SceneObject::Shape(shape), true)?;
            }
            "polytope" => {
                if self.dim() != 3 {
                    return Err(parse_msg("polytope requires a 3D scene".into()));
                }
                let name = cursor.next("object name")?.to_string();
                let mut vertices = Vec::new();
                loop {
                    match cursor.next_opt() {
                        None => return Err(parse_msg("polytope needs an edges clause".into())),
                        Some("edges") => break,
                        Some(literal) => vertices.push(self.point3(literal)?),
                    }
                }
                if vertices.is_empty() {
                    return Err(parse_msg("polytope needs at least one vertex".into()));
                }
                let mut edge_text = String::new();
                while let Some(tok) = cursor.next_opt() {
                    edge_text.push_str(tok);
                }
                if edge_text.is_empty() {
                    return Err(parse_msg("edges clause is empty".into()));
                }
                let edges = parse_edges(&edge_text, vertices.len())?;
                let shape = Polytope::wireframe(vertices, edges)?;
                self.define(name, SceneObject::Shape(shape), true)?;
            }
            "translate" => {
                let source = self.existing(cursor.next("source object")?)?;
                cursor.keyword("by")?;
                let literal = cursor.next("translation vector")?;
                let coords = parse_point_coords(literal)?;
                if coords.len() != usize::from(self.dim()) {
                    return Err(parse_msg(format!(
                        "translation vector {literal} does not match a {}D scene",
                        self.dim()
                    )));
                }
                cursor.keyword("as")?;
                let dest = cursor.next("destination name")?.to_string();
                cursor.finish()?;
                let transform = match <[Scalar; 2]>::try_from(coords) {
                    Ok([x, y]) => Transform::Two(Transform2::Translation(x, y)),
                    Err(coords) => {
                        let [x, y, z] = <[Scalar; 3]>::try_from(coords).expect("length checked");
                        Transform::Three(Transform3::Translation(x, y, z))
                    }
                };
                self.apply_directive(source, dest, transform)?;
            }
            "rotate" => {
                let source = self.existing(cursor.next("source object")?)?;
                cursor.keyword("by")?;
                let angle = Angle::parse(cursor.next("angle")?)?;
                cursor.keyword("as")?;
                let dest = cursor.next("destination name")?.to_string();
                cursor.finish()?;
                let transform = if self.dim() == 2 {
                    Transform::Two(Transform2::Rotation(angle))
                } else {
                    Transform::Three(Transform3::RotationZ(angle))
                };
                self.apply_directive(source, dest, transform)?;
            }
            "reflectxy" => {
                if self.dim() != 3 {
                    return Err(parse_msg("reflectxy requires a 3D scene".into()));
                }
                let source = self.existing(cursor.next("source object")?)?;
                cursor.keyword("as")?;
                let dest = cursor.next("destination name")?.to_string();
                cursor.finish()?;
                self.apply_directive(source, dest, Transform::Three(Transform3::ReflectionXy))?;
            }
            "measure" => {
                let kind = match cursor.next("measure kind")? {
                    "area" => MeasureKind::Area,
                    "volume" => MeasureKind::Volume,
                    other => {
                        return Err(parse_msg(format!(
                            "measure kind must be area or volume, got '{other}'"
                        )))
                    }
                };
                let target = self.existing(cursor.next("target object")?)?;
                cursor.finish()?;
                self.check_measurable(kind, &target)?;
                self.directives.push(Directive::Measure { kind, target });
            }
            "render" => {
                let mut targets = Vec::new();
                while let Some(name) = cursor.next_opt() {
                    targets.push(self.existing(name)?);
                }
                if targets.is_empty() {
                    return Err(parse_msg("render needs at least one object".into()));
                }
                self.directives.push(Directive::Render { targets });
            }
            other => {
                return Err(Error::SceneParse {
                    line: line_no,
                    message: format!("unknown keyword '{other}'"),
                });
            }
        }
        Ok(())
    }

    fn point_object(&self, name: &str, coords: Vec<Scalar>) -> Result<SceneObject> {
        if coords.len() != usize::from(self.dim()) {
            return Err(parse_msg(format!(
                "point has {} coordinates in a {}D scene",
                coords.len(),
                self.dim()
            )));
        }
        Ok(match <[Scalar; 2]>::try_from(coords) {
            Ok([x, y]) => SceneObject::Point2(Point2::with_label(x, y, name)),
            Err(coords) => {
                let [x, y, z] = <[Scalar; 3]>::try_from(coords).expect("length checked");
                SceneObject::Point3(Point3::with_label(x, y, z, name))
            }
        })
    }

    fn point2(&self, literal: &str) -> Result<Point2> {
        let coords = parse_point_coords(literal)?;
        match <[Scalar; 2]>::try_from(coords) {
            Ok([x, y]) => Ok(Point2::new(x, y)),
            Err(_) => Err(parse_msg(format!("vertex {literal} is not 2D"))),
        }
    }

    fn point3(&self, literal: &str) -> Result<Point3> {
        let coords = parse_point_coords(literal)?;
        match <[Scalar; 3]>::try_from(coords) {
            Ok([x, y, z]) => Ok(Point3::new(x, y, z)),
            Err(_) => Err(parse_msg(format!("vertex {literal} is not 3D"))),
        }
    }

    fn existing(&self, name: &str) -> Result<String> {
        if self.entries.iter().any(|e| e.name == name) {
            Ok(name.to_string())
        } else {
            Err(parse_msg(format!("unknown object '{name}'")))
        }
    }

    fn define(&mut self, name: String, object: SceneObject, declared: bool) -> Result<()> {
        if self.entries.iter().any(|e| e.name == name) {
            return Err(parse_msg(format!("object '{name}' is already defined")));
        }
        self.entries.push(SceneEntry {
            name,
            object,
            declared,
        });
        Ok(())
    }

    fn apply_directive(
        &mut self,
        source: String,
        dest: String,
        transform: Transform,
    ) -> Result<()> {
        let object = self
            .entries
            .iter()
            .find(|e| e.name == source)
            .map(|e| e.object.clone())
            .expect("source resolved above");
        let image = match (&transform, &object) {
            (Transform::Two(t), SceneObject::Point2(p)) => SceneObject::Point2(apply2(t, p)?),
            (Transform::Three(t), SceneObject::Point3(p)) => SceneObject::Point3(apply3(t, p)?),
            (_, SceneObject::Shape(shape)) => {
                SceneObject::Shape(apply_polytope(&transform, shape)?)
            }
            _ => {
                return Err(parse_msg(format!(
                    "cannot apply a {}D transform to '{source}'",
                    transform.dimension()
                )))
            }
        };
        let image = relabel(image, &dest);
        self.define(dest.clone(), image, false)?;
        self.directives.push(Directive::Transform {
            source,
            dest,
            transform,
        });
        Ok(())
    }

    fn check_measurable(&self, kind: MeasureKind, target: &str) -> Result<()> {
        let object = self
            .entries
            .iter()
            .find(|e| e.name == target)
            .map(|e| &e.object)
            .expect("target resolved above");
        match (kind, object) {
            (MeasureKind::Area, SceneObject::Shape(shape)) if shape.dimension() == 2 => Ok(()),
            (MeasureKind::Area, _) => Err(parse_msg(format!(
                "area is only measurable on 2D polygons, '{target}' is not one"
            ))),
            (MeasureKind::Volume, SceneObject::Shape(shape))
                if shape.dimension() == 3 && shape.vertices().len() == 4 =>
            {
                Ok(())
            }
            (MeasureKind::Volume, _) => Err(parse_msg(format!(
                "volume is only measurable on 4-vertex polytopes, '{target}' is not one"
            ))),
        }
    }
}

/// Derived points take the destination name as their label.
fn relabel(object: SceneObject, name: &str) -> SceneObject {
    match object {
        SceneObject::Point2(mut p) => {
            p.label = Some(name.to_string());
            SceneObject::Point2(p)
        }
        SceneObject::Point3(mut p) => {
            p.label = Some(name.to_string());
            SceneObject::Point3(p)
        }
        shape => shape,
    }
}

fn parse_edges(text: &str, vertex_count: usize) -> Result<Vec<(usize, usize)>> {
    text.split(',')
        .map(|pair| {
            let (i, j) = pair
                .split_once('-')
                .ok_or_else(|| parse_msg(format!("edge '{pair}' must look like i-j")))?;
            let parse_index = |t: &str| {
                t.trim()
                    .parse::<usize>()
                    .ok()
                    .filter(|&v| v >= 1)
                    .ok_or_else(|| parse_msg(format!("edge index '{t}' must be a 1-based integer")))
            };
            let (i, j) = (parse_index(i)?, parse_index(j)?);
            if i > vertex_count || j > vertex_count {
                return Err(parse_msg(format!(
                    "edge {i}-{j} references a vertex beyond {vertex_count}"
                )));
            }
            Ok((i - 1, j - 1))
        })
        .collect()
}

fn parse_msg(message: String) -> Error {
    // Line number is attached by the caller.
    Error::SceneParse { line: 0, message }
}

fn at_line(line: usize, error: Error) -> Error {
    match error {
        Error::SceneParse { message, .. } => Error::SceneParse { line, message },
        other => Error::SceneParse {
            line,
            message: other.to_string(),
        },
    }
}

struct Cursor<'a> {
    tokens: &'a [&'a str],
    at: usize,
}

impl<'a> Cursor<'a> {
    fn next(&mut self, what: &str) -> Result<&'a str> {
        self.next_opt()
            .ok_or_else(|| parse_msg(format!("missing {what}")))
    }

    fn next_opt(&mut self) -> Option<&'a str> {
        let tok = self.tokens.get(self.at).copied();
        if tok.is_some() {
            self.at += 1;
        }
        tok
    }

    fn keyword(&mut self, word: &str) -> Result<()> {
        let tok = self.next(&format!("keyword '{word}'"))?;
        if tok == word {
            Ok(())
        } else {
            Err(parse_msg(format!("expected '{word}', got '{tok}'")))
        }
    }

    fn finish(&mut self) -> Result<()> {
        match self.next_opt() {
            None => Ok(()),
            Some(extra) => Err(parse_msg(format!("unexpected trailing token '{extra}'"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Scalar {
        Scalar::parse(text).unwrap()
    }

    const FIGURE7: &str =
        "dim 2\npolygon P (1,1) (2,3) (4,3) (5,1)\ntranslate P by (3,2) as Q\nrender P Q\n";

    #[test]
    fn parses_the_translation_scene() {
        let scene = Scene::parse(FIGURE7).unwrap();
        assert_eq!(scene.dimension(), 2);
        assert_eq!(scene.directives().len(), 2);
        assert_eq!(scene.entries().len(), 2);
        let q = match scene.object("Q").unwrap() {
            SceneObject::Shape(shape) => shape.vertices2().unwrap().to_vec(),
            other => panic!("expected a shape, got {other:?}"),
        };
        let expected: Vec<(Scalar, Scalar)> = [(4, 3), (5, 5), (7, 5), (8, 3)]
            .iter()
            .map(|&(x, y)| (Scalar::from(x), Scalar::from(y)))
            .collect();
        let got: Vec<(Scalar, Scalar)> = q.iter().map(|p| (p.x.clone(), p.y.clone())).collect();
        assert_eq!(got, expected);
        assert!(!scene.entries()[1].declared);
    }

    #[test]
    fn empty_input_is_a_valid_empty_scene() {
        let scene = Scene::parse("").unwrap();
        assert_eq!(scene.dimension(), 2);
        assert!(scene.entries().is_empty());
        assert!(scene.directives().is_empty());
        let commented = Scene::parse("# nothing here\n\n   # still nothing\n").unwrap();
        assert_eq!(commented, scene);
    }

    #[test]
    fn undefined_reference_reports_its_line() {
        let err = Scene::parse("dim 2\npolygon P (1,1)\nrotate Z by pi/2").unwrap_err();
        match err {
            Error::SceneParse { line, message } => {
                assert_eq!(line, 3);
                assert!(message.contains("'Z'"), "message was: {message}");
            }
            other => panic!("expected a scene parse error, got {other:?}"),
        }
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let cases: &[(&str, usize, &str)] = &[
            ("dim 2\nfrobnicate P", 2, "unknown keyword"),
            ("dim 4", 1, "dimension must be 2 or 3"),
            ("point P (1,2)\ndim 3", 2, "dim must be the first"),
            ("dim 2\npoint P (1,2,3)", 2, "2D scene"),
            ("dim 2\npolygon P (1,x)", 2, "malformed"),
            (
                "dim 2\npolygon P (1,1) (2,2) (3,0)\npolygon P (0,0) (1,1) (2,0)",
                3,
                "already defined",
            ),
            ("dim 2\npolytope T (1,1,1) edges 1-2", 2, "3D scene"),
            ("dim 3\npolytope T (1,1,1) (2,2,2)", 2, "edges clause"),
            ("dim 3\npolytope T (1,1,1) (2,2,2) edges 1-3", 2, "beyond"),
            (
                "dim 3\npolytope T (1,1,1) (2,2,2) edges 1-1",
                2,
                "self-loop",
            ),
            (
                "dim 2\npolygon P (0,0) (4,0) (4,4)\nreflectxy P as Q",
                3,
                "3D scene",
            ),
            (
                "dim 2\npolygon P (0,0) (4,0) (4,4)\ntranslate P by (1,2,3) as Q",
                3,
                "does not match",
            ),
            (
                "dim 2\npolygon P (0,0) (4,0) (4,4)\nrotate P by pi/3 as Q",
                3,
                "malformed angle",
            ),
            (
                "dim 2\npolygon P (0,0) (4,0) (4,4)\nmeasure volume P",
                3,
                "4-vertex",
            ),
            ("dim 2\npoint A (0,0)\nmeasure area A", 3, "polygons"),
            ("dim 2\nrender", 2, "at least one"),
            (
                "dim 2\npolygon P (0,0) (4,0) (4,4)\nrender P extra_junk",
                3,
                "unknown object",
            ),
        ];
        for (text, line, fragment) in cases {
            match Scene::parse(text) {
                Err(Error::SceneParse { line: got, message }) => {
                    assert_eq!(got, *line, "line for {text:?} ({message})");
                    assert!(
                        message.contains(fragment),
                        "expected {fragment:?} in {message:?} for {text:?}"
                    );
                }
                other => panic!("expected scene parse error for {text:?}, got {other:?}"),
            }
        }
    }

    #[test]
    fn serialization_round_trips_structurally() {
        let texts = [
            FIGURE7,
            "dim 3\npolytope T (1,5,0) (6,2,0) (3,2,4) (0,0,0) edges 1-2,1-3,1-4,2-3,2-4,3-4\nrotate T by pi/2 as R\nreflectxy T as S\nmeasure volume T\nrender T R S\n",
            "dim 2\npoint O (0,0)\npolygon P (0,0) (1,5) (7,7) (6,2)\nmeasure area P\nrender P O\n",
            "",
        ];
        for text in texts {
            let scene = Scene::parse(text).unwrap();
            let serialized = scene.to_text();
            let reparsed = Scene::parse(&serialized).unwrap();
            assert_eq!(reparsed, scene, "round trip failed for {text:?}");
            assert_eq!(reparsed.to_text(), serialized);
        }
    }

    #[test]
    fn measurements_report_exact_values() {
        let scene = Scene::parse(
            "dim 2\npolygon P (0,0) (1,5) (7,7) (6,2)\npolygon T (1,5) (6,2) (7,7)\nmeasure area P\nmeasure area T\nrender P T\n",
        )
        .unwrap();
        assert_eq!(scene.measurements(), vec!["area P = 28", "area T = 14"]);

        let tetra = Scene::parse(
            "dim 3\npolytope T (1,5,0) (6,2,0) (3,2,4) (0,0,0) edges 1-2,1-3,1-4,2-3,2-4,3-4\nmeasure volume T\n",
        )
        .unwrap();
        assert_eq!(tetra.measurements(), vec!["volume T = 56/3"]);
    }

    #[test]
    fn shoelace_area_handles_degenerate_rings() {
        assert_eq!(polygon_area(&[Point2::new(s("1"), s("1"))]), Scalar::zero());
        assert_eq!(
            polygon_area(&[Point2::new(s("0"), s("0")), Point2::new(s("5"), s("5"))]),
            Scalar::zero()
        );
    }

    #[test]
    fn transform_chains_accumulate() {
        let scene = Scene::parse(
            "dim 2\npolygon P (1,1) (2,3) (4,3) (5,1)\nrotate P by pi/2 as R\nrotate R by pi/2 as R2\nrotate R2 by pi as R4\nrender R4\n",
        )
        .unwrap();
        let original = match scene.object("P").unwrap() {
            SceneObject::Shape(shape) => shape.clone(),
            _ => unreachable!(),
        };
        let full_turn = match scene.object("R4").unwrap() {
            SceneObject::Shape(shape) => shape.clone(),
            _ => unreachable!(),
        };
        assert_eq!(original, full_turn);
    }

    #[test]
    fn derived_points_keep_their_new_name_as_label() {
        let scene = Scene::parse("dim 2\npoint A (1,1)\ntranslate A by (3,2) as B\n").unwrap();
        match scene.object("B").unwrap() {
            SceneObject::Point2(p) => {
                assert_eq!((&p.x, &p.y), (&s("4"), &s("3")));
                assert_eq!(p.label.as_deref(), Some("B"));
            }
            other => panic!("expected a point, got {other:?}"),
        }
    }
}
