//! Scene-to-figure layout.
//!
//! 2D scenes map through a uniform scale plus a y-flip (figure y grows
//! downward, world y grows upward). 3D scenes are first flattened by a
//! cabinet projection — x' = x + z/2·cos 30°, y' = y + z/2·sin 30° — and
//! then fitted the same way. The viewbox always encloses the rendered
//! geometry with at least a 5% margin, and axes are drawn through the
//! origin whenever the origin is in view.

use crate::measure::{Point2, Point3};

use super::{Directive, Scene, SceneObject};

const FIGURE_WIDTH: u32 = 800;
const FIGURE_HEIGHT: u32 = 600;
const MARGIN_FRACTION: f64 = 0.05;
const CABINET_COS: f64 = 0.866_025_403_784_438_6; // cos 30°
const CABINET_SIN: f64 = 0.5; // sin 30°

const PALETTE: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf",
];

/// The affine world-to-figure mapping: `fx = offset_x + scale·wx`,
/// `fy = offset_y - scale·wy`.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct Viewport {
    pub scale: f64,
    pub offset_x: f64,
    pub offset_y: f64,
}

impl Viewport {
    pub fn map(&self, world: (f64, f64)) -> (f64, f64) {
        (
            self.offset_x + self.scale * world.0,
            self.offset_y - self.scale * world.1,
        )
    }

    /// Inverse of [`Viewport::map`].
    pub fn unmap(&self, figure: (f64, f64)) -> (f64, f64) {
        (
            (figure.0 - self.offset_x) / self.scale,
            (self.offset_y - figure.1) / self.scale,
        )
    }
}

/// A drawable item in figure coordinates.
#[derive(Clone, PartialEq, Debug)]
pub enum Element {
    /// An annotation embedded as an SVG comment.
    Comment { text: String },
    /// An axis line through the origin.
    Axis { from: (f64, f64), to: (f64, f64) },
    /// A closed, filled polygon.
    Polygon {
        points: Vec<(f64, f64)>,
        color: String,
    },
    /// A single wireframe edge.
    Edge {
        from: (f64, f64),
        to: (f64, f64),
        color: String,
    },
    /// A vertex or point marker.
    Dot { at: (f64, f64), color: String },
    /// A text label anchored near a point.
    Label { at: (f64, f64), text: String },
}

/// A laid-out figure ready for [`super::emit_svg`].
#[derive(Clone, PartialEq, Debug)]
pub struct Figure {
    pub width: u32,
    pub height: u32,
    pub viewport: Viewport,
    pub elements: Vec<Element>,
}

/// Project a scene onto a figure: measurement comments first, then axes,
/// then every object named by a render directive, in directive order.
pub fn layout_project(scene: &Scene) -> Figure {
    let rendered = rendered_objects(scene);

    let mut world_points: Vec<(f64, f64)> = Vec::new();
    for (_, object) in &rendered {
        collect_world_points(object, &mut world_points);
    }
    let bounds = Bounds::around(&world_points);
    let viewport = bounds.viewport();

    let mut elements: Vec<Element> = scene
        .measurements()
        .into_iter()
        .map(|text| Element::Comment { text })
        .collect();
    elements.extend(bounds.axes(&viewport));

    for (index, (name, object)) in rendered.iter().enumerate() {
        let color = PALETTE[index % PALETTE.len()].to_string();
        push_object(&mut elements, name, object, &color, &viewport);
    }

    Figure {
        width: FIGURE_WIDTH,
        height: FIGURE_HEIGHT,
        viewport,
        elements,
    }
}

/// Objects named by render directives, in order, first mention wins.
fn rendered_objects(scene: &Scene) -> Vec<(String, SceneObject)> {
    let mut seen: Vec<(String, SceneObject)> = Vec::new();
    for directive in scene.directives() {
        if let Directive::Render { targets } = directive {
            for name in targets {
                if seen.iter().any(|(n, _)| n == name) {
                    continue;
                }
                if let Some(object) = scene.object(name) {
                    seen.push((name.clone(), object.clone()));
                }
            }
        }
    }
    seen
}

fn project2(p: &Point2) -> (f64, f64) {
    (p.x.to_f64(), p.y.to_f64())
}

fn project3(p: &Point3) -> (f64, f64) {
    let z = p.z.to_f64();
    (
        p.x.to_f64() + 0.5 * z * CABINET_COS,
        p.y.to_f64() + 0.5 * z * CABINET_SIN,
    )
}

fn collect_world_points(object: &SceneObject, out: &mut Vec<(f64, f64)>) {
    match object {
        SceneObject::Point2(p) => out.push(project2(p)),
        SceneObject::Point3(p) => out.push(project3(p)),
        SceneObject::Shape(shape) => match shape.vertices() {
            crate::affine::VertexList::Two(points) => out.extend(points.iter().map(project2)),
            crate::affine::VertexList::Three(points) => out.extend(points.iter().map(project3)),
        },
    }
}

struct Bounds {
    min_x: f64,
    max_x: f64,
    min_y: f64,
    max_y: f64,
}

impl Bounds {
    /// Margined world bounds around a point set; an empty or degenerate
    /// set falls back to a unit-ish box so axes still render.
    fn around(points: &[(f64, f64)]) -> Bounds {
        let mut b = if points.is_empty() {
            Bounds {
                min_x: -1.0,
                max_x: 1.0,
                min_y: -1.0,
                max_y: 1.0,
            }
        } else {
            let mut b = Bounds {
                min_x: f64::INFINITY,
                max_x: f64::NEG_INFINITY,
                min_y: f64::INFINITY,
                max_y: f64::NEG_INFINITY,
            };
            for &(x, y) in points {
                b.min_x = b.min_x.min(x);
                b.max_x = b.max_x.max(x);
                b.min_y = b.min_y.min(y);
                b.max_y = b.max_y.max(y);
            }
            b
        };
        if b.max_x - b.min_x < 1e-9 {
            b.min_x -= 1.0;
            b.max_x += 1.0;
        }
        if b.max_y - b.min_y < 1e-9 {
            b.min_y -= 1.0;
            b.max_y += 1.0;
        }
        let margin_x = MARGIN_FRACTION * (b.max_x - b.min_x);
        let margin_y = MARGIN_FRACTION * (b.max_y - b.min_y);
        b.min_x -= margin_x;
        b.max_x += margin_x;
        b.min_y -= margin_y;
        b.max_y += margin_y;
        b
    }

    /// Uniform fit of the margined bounds into the figure, centered.
    fn viewport(&self) -> Viewport {
        let span_x = self.max_x - self.min_x;
        let span_y = self.max_y - self.min_y;
        let scale = (f64::from(FIGURE_WIDTH) / span_x).min(f64::from(FIGURE_HEIGHT) / span_y);
        let pad_x = (f64::from(FIGURE_WIDTH) - scale * span_x) / 2.0;
        let pad_y = (f64::from(FIGURE_HEIGHT) - scale * span_y) / 2.0;
        Viewport {
            scale,
            offset_x: pad_x - scale * self.min_x,
            offset_y: pad_y + scale * self.max_y,
        }
    }

    fn axes(&self, viewport: &Viewport) -> Vec<Element> {
        let mut axes = Vec::new();
        if self.min_x <= 0.0 && 0.0 <= self.max_x {
            let (x, _) = viewport.map((0.0, 0.0));
            axes.push(Element::Axis {
                from: (x, 0.0),
                to: (x, f64::from(FIGURE_HEIGHT)),
            });
        }
        if self.min_y <= 0.0 && 0.0 <= self.max_y {
            let (_, y) = viewport.map((0.0, 0.0));
            axes.push(Element::Axis {
                from: (0.0, y),
                to: (f64::from(FIGURE_WIDTH), y),
            });
        }
        axes
    }
}

const LABEL_OFFSET: (f64, f64) = (6.0, -6.0);

fn push_object(
    elements: &mut Vec<Element>,
    name: &str,
    object: &SceneObject,
    color: &str,
    viewport: &Viewport,
) {
    match object {
        SceneObject::Point2(p) => {
            let at = viewport.map(project2(p));
            push_point(elements, at, name, color);
        }
        SceneObject::Point3(p) => {
            let at = viewport.map(project3(p));
            push_point(elements, at, name, color);
        }
        SceneObject::Shape(shape) => match shape.vertices() {
            crate::affine::VertexList::Two(points) => {
                let mapped: Vec<(f64, f64)> =
                    points.iter().map(|p| viewport.map(project2(p))).collect();
                match mapped.len() {
                    1 => elements.push(Element::Dot {
                        at: mapped[0],
                        color: color.into(),
                    }),
                    2 => elements.push(Element::Edge {
                        from: mapped[0],
                        to: mapped[1],
                        color: color.into(),
                    }),
                    _ => elements.push(Element::Polygon {
                        points: mapped.clone(),
                        color: color.into(),
                    }),
                }
                if let Some(&first) = mapped.first() {
                    push_label(elements, first, name);
                }
            }
            crate::affine::VertexList::Three(points) => {
                let mapped: Vec<(f64, f64)> =
                    points.iter().map(|p| viewport.map(project3(p))).collect();
                for &(i, j) in shape.edges() {
                    elements.push(Element::Edge {
                        from: mapped[i],
                        to: mapped[j],
                        color: color.into(),
                    });
                }
                for &at in &mapped {
                    elements.push(Element::Dot {
                        at,
                        color: color.into(),
                    });
                }
                if let Some(&first) = mapped.first() {
                    push_label(elements, first, name);
                }
            }
        },
    }
}

fn push_point(elements: &mut Vec<Element>, at: (f64, f64), name: &str, color: &str) {
    elements.push(Element::Dot {
        at,
        color: color.into(),
    });
    push_label(elements, at, name);
}

fn push_label(elements: &mut Vec<Element>, at: (f64, f64), text: &str) {
    elements.push(Element::Label {
        at: (at.0 + LABEL_OFFSET.0, at.1 + LABEL_OFFSET.1),
        text: text.to_string(),
    });
}
