//! Deterministic SVG 1.1 emission.
//!
//! The same figure always serializes to the same bytes: elements are
//! written in their stored order and every coordinate is formatted with
//! exactly six decimal places (negative zero normalized away).

use std::fmt::Write as _;

use super::layout::{Element, Figure};

/// Serialize a figure as a standalone SVG 1.1 document.
pub fn emit_svg(figure: &Figure) -> String {
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">",
        w = figure.width,
        h = figure.height,
    );
    for element in &figure.elements {
        match element {
            Element::Comment { text } => {
                let _ = writeln!(out, "<!-- {} -->", comment_safe(text));
            }
            Element::Axis { from, to } => {
                let _ = writeln!(
                    out,
                    "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#c8c8c8\" stroke-width=\"1\"/>",
                    fmt6(from.0),
                    fmt6(from.1),
                    fmt6(to.0),
                    fmt6(to.1),
                );
            }
            Element::Polygon { points, color } => {
                let list: Vec<String> = points
                    .iter()
                    .map(|&(x, y)| format!("{},{}", fmt6(x), fmt6(y)))
                    .collect();
                let _ = writeln!(
                    out,
                    "<polygon points=\"{}\" fill=\"{color}\" fill-opacity=\"0.2\" stroke=\"{color}\" stroke-width=\"1.5\"/>",
                    list.join(" "),
                );
            }
            Element::Edge { from, to, color } => {
                let _ = writeln!(
                    out,
                    "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{color}\" stroke-width=\"1.5\"/>",
                    fmt6(from.0),
                    fmt6(from.1),
                    fmt6(to.0),
                    fmt6(to.1),
                );
            }
            Element::Dot { at, color } => {
                let _ = writeln!(
                    out,
                    "<circle cx=\"{}\" cy=\"{}\" r=\"3\" fill=\"{color}\"/>",
                    fmt6(at.0),
                    fmt6(at.1),
                );
            }
            Element::Label { at, text } => {
                let _ = writeln!(
                    out,
                    "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#333333\">{}</text>",
                    fmt6(at.0),
                    fmt6(at.1),
                    xml_escape(text),
                );
            }
        }
    }
    out.push_str("</svg>\n");
    out
}

/// Fixed six-decimal coordinate formatting; `-0` collapses to `0`.
fn fmt6(value: f64) -> String {
    let v = if value == 0.0 { 0.0 } else { value };
    format!("{v:.6}")
}

fn xml_escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

/// XML comments may not contain `--`.
fn comment_safe(text: &str) -> String {
    xml_escape(text).replace("--", "- -")
}

#[cfg(test)]
mod tests {
    use super::super::layout::layout_project;
    use super::super::Scene;
    use super::*;

    #[test]
    fn empty_scene_gives_a_valid_document_with_axes_only() {
        let svg = emit_svg(&layout_project(&Scene::parse("").unwrap()));
        assert!(svg.starts_with("<?xml version=\"1.0\""));
        assert!(svg.contains("viewBox=\"0 0 800 600\""));
        assert!(svg.ends_with("</svg>\n"));
        assert_eq!(svg.matches("<line").count(), 2);
        assert_eq!(svg.matches("<polygon").count(), 0);
        assert_eq!(svg.matches("<circle").count(), 0);
    }

    #[test]
    fn rendering_is_byte_deterministic() {
        let text = "dim 2\npolygon P (1,1) (2,3) (4,3) (5,1)\ntranslate P by (3,2) as Q\nmeasure area P\nrender P Q\n";
        let first = emit_svg(&layout_project(&Scene::parse(text).unwrap()));
        let second = emit_svg(&layout_project(&Scene::parse(text).unwrap()));
        assert_eq!(first, second);
    }

    #[test]
    fn translated_quadrilateral_scene_has_two_polygons_of_four_points() {
        let text =
            "dim 2\npolygon P (1,1) (2,3) (4,3) (5,1)\ntranslate P by (3,2) as Q\nrender P Q\n";
        let svg = emit_svg(&layout_project(&Scene::parse(text).unwrap()));
        assert_eq!(svg.matches("<polygon").count(), 2);
        for section in svg.split("<polygon").skip(1) {
            let points = section.split("points=\"").nth(1).unwrap();
            let list = points.split('"').next().unwrap();
            assert_eq!(list.split(' ').count(), 4);
        }
    }

    #[test]
    fn measure_comments_appear_in_the_document() {
        let text = "dim 3\npolytope T (1,5,0) (6,2,0) (3,2,4) (0,0,0) edges 1-2,1-3,1-4,2-3,2-4,3-4\nmeasure volume T\nrender T\n";
        let svg = emit_svg(&layout_project(&Scene::parse(text).unwrap()));
        assert!(svg.contains("<!-- volume T = 56/3 -->"));
        // Six edges drawn, four vertex dots.
        assert_eq!(svg.matches("stroke-width=\"1.5\"").count(), 6);
        assert_eq!(svg.matches("<circle").count(), 4);
    }

    #[test]
    fn coordinates_use_six_decimals_without_negative_zero() {
        assert_eq!(fmt6(1.0), "1.000000");
        assert_eq!(fmt6(-0.0), "0.000000");
        assert_eq!(fmt6(2.5000004), "2.500000");
    }

    #[test]
    fn labels_are_escaped() {
        assert_eq!(xml_escape("A<B&C>"), "A&lt;B&amp;C&gt;");
        assert_eq!(comment_safe("a--b"), "a- -b");
    }
}
