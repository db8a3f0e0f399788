//! Command-line front end: every library capability as a subcommand, with
//! exact output by default and `--float` for decimal reports.
//!
//! Exit status: 0 on success, 1 on input errors, 2 when the requested
//! result is infeasible (e.g. no nonnegative eigenvector to invest along).

use std::fs;
use std::path::PathBuf;
use std::process;

use clap::{Parser, Subcommand};

use ratgeom::affine::{apply2, apply3, Angle, Transform2, Transform3};
use ratgeom::error::{Error, Result};
use ratgeom::invest::{InvestmentModel, SectorSpec};
use ratgeom::matrix::Matrix;
use ratgeom::measure::{
    det, parallelepiped_volume, parallelogram_area_from_vectors, parallelogram_area_from_vertices,
    parse_point_coords, tetrahedron_volume, triangle_area, MeasureResult, Point2, Point3,
};
use ratgeom::scalar::Scalar;
use ratgeom::scene::{emit_svg, layout_project, Scene};

#[derive(Parser)]
#[command(
    name = "ratgeom",
    version,
    about = "Exact rational matrix algebra, geometric measures, eigen analysis, and SVG figures",
    arg_required_else_help = true
)]
struct Cli {
    /// Print decimal approximations instead of exact fractions.
    #[arg(long, global = true)]
    float: bool,

    /// Decimal places used with --float.
    #[arg(long, global = true, default_value_t = 2)]
    precision: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multiply two matrices given as "a,b;c,d" literals.
    Matmul { a: String, b: String },
    /// Determinant of a square matrix of order at most 4.
    Det { matrix: String },
    /// Areas of triangles and parallelograms.
    #[command(subcommand)]
    Area(AreaCommand),
    /// Volume of the parallelepiped spanned by three edge vectors.
    Volume { u: String, v: String, w: String },
    /// Volume of the tetrahedron with the four given vertices.
    Tetvolume {
        a: String,
        b: String,
        c: String,
        d: String,
    },
    /// Characteristic polynomial, eigenvalues, and eigenspace bases.
    Eigen { matrix: String },
    /// Proportional-growth allocation of a budget across sectors.
    Invest {
        /// Comma-separated growth factors, e.g. 4,2,2/3.
        #[arg(long)]
        growth: String,
        /// Total budget to allocate.
        #[arg(long)]
        budget: String,
        /// Years to evolve the allocation.
        #[arg(long, default_value_t = 1)]
        years: usize,
    },
    /// Apply a translation, rotation, or reflection to points.
    #[command(subcommand)]
    Transform(TransformCommand),
    /// Render a scene file to SVG (stdout, or --output FILE).
    Render {
        scene: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum AreaCommand {
    /// Triangle area from three vertices.
    Triangle { a: String, b: String, c: String },
    /// Parallelogram area from two spanning vectors or three vertices.
    Parallelogram {
        /// Two spanning vectors, e.g. --vectors "(1,5)" "(6,2)".
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        vectors: Option<Vec<String>>,
        /// Three vertices, e.g. --vertices "(1,5)" "(6,2)" "(7,7)".
        #[arg(long, num_args = 3, value_names = ["A", "B", "C"])]
        vertices: Option<Vec<String>>,
    },
}

#[derive(Subcommand)]
enum TransformCommand {
    /// Translate points by a vector.
    Translate {
        /// Translation vector, e.g. "(3,2)" or "(4,3,-2)".
        #[arg(long)]
        by: String,
        #[arg(required = true)]
        points: Vec<String>,
    },
    /// Rotate points (2D about the origin, 3D about the z-axis).
    Rotate {
        /// 0, pi/2, pi, 3pi/2 (exact) or float radians.
        #[arg(long)]
        angle: String,
        #[arg(required = true)]
        points: Vec<String>,
    },
    /// Reflect 3D points through the xy-plane.
    Reflectxy {
        #[arg(required = true)]
        points: Vec<String>,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = i32::from(err.use_stderr());
            let _ = err.print();
            process::exit(code);
        }
    };
    let fmt = Fmt {
        float: cli.float,
        precision: cli.precision,
    };
    match run(&cli.command, &fmt) {
        Ok(output) => print!("{output}"),
        Err(err) => {
            eprintln!("error: {err}");
            process::exit(exit_code(&err));
        }
    }
}

/// 1 for malformed input, 2 for infeasible problems.
fn exit_code(err: &Error) -> i32 {
    if err.is_infeasibility() {
        2
    } else {
        1
    }
}

/// Output formatting: canonical fractions by default, fixed-point decimals
/// in float mode.
struct Fmt {
    float: bool,
    precision: usize,
}

impl Fmt {
    fn scalar(&self, value: &Scalar) -> String {
        if self.float {
            value.to_decimal(self.precision)
        } else {
            value.to_string()
        }
    }

    fn matrix(&self, m: &Matrix) -> String {
        (0..m.rows())
            .map(|i| {
                (0..m.cols())
                    .map(|j| self.scalar(m.get(i, j)))
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join(";")
    }

    fn vector(&self, v: &[Scalar]) -> String {
        let inner: Vec<String> = v.iter().map(|x| self.scalar(x)).collect();
        format!("({})", inner.join(","))
    }
}

fn run(command: &Command, fmt: &Fmt) -> Result<String> {
    match command {
        Command::Matmul { a, b } => {
            let product = Matrix::parse(a)?.mat_mul(&Matrix::parse(b)?)?;
            Ok(format!("{}\n", fmt.matrix(&product)))
        }
        Command::Det { matrix } => {
            let value = det(&Matrix::parse(matrix)?)?;
            Ok(format!("{}\n", fmt.scalar(&value)))
        }
        Command::Area(area) => {
            let result = match area {
                AreaCommand::Triangle { a, b, c } => {
                    triangle_area(&Point2::parse(a)?, &Point2::parse(b)?, &Point2::parse(c)?)
                }
                AreaCommand::Parallelogram { vectors, vertices } => {
                    parallelogram(vectors.as_deref(), vertices.as_deref())?
                }
            };
            Ok(format!("{}\n", fmt.scalar(&result.value)))
        }
        Command::Volume { u, v, w } => {
            let result =
                parallelepiped_volume(&Point3::parse(u)?, &Point3::parse(v)?, &Point3::parse(w)?);
            Ok(format!("{}\n", fmt.scalar(&result.value)))
        }
        Command::Tetvolume { a, b, c, d } => {
            let result = tetrahedron_volume(
                &Point3::parse(a)?,
                &Point3::parse(b)?,
                &Point3::parse(c)?,
                &Point3::parse(d)?,
            );
            Ok(format!("{}\n", fmt.scalar(&result.value)))
        }
        Command::Eigen { matrix } => eigen_report(&Matrix::parse(matrix)?, fmt),
        Command::Invest {
            growth,
            budget,
            years,
        } => invest_report(growth, budget, *years, fmt),
        Command::Transform(transform) => transform_points(transform, fmt),
        Command::Render { scene, output } => render_scene(scene, output.as_deref()),
    }
}

fn parallelogram(vectors: Option<&[String]>, vertices: Option<&[String]>) -> Result<MeasureResult> {
    match (vectors, vertices) {
        (Some(v), None) => Ok(parallelogram_area_from_vectors(
            &Point2::parse(&v[0])?,
            &Point2::parse(&v[1])?,
        )),
        (None, Some(v)) => Ok(parallelogram_area_from_vertices(
            &Point2::parse(&v[0])?,
            &Point2::parse(&v[1])?,
            &Point2::parse(&v[2])?,
        )),
        _ => Err(Error::Parse(
            "pass exactly one of --vectors U V or --vertices A B C".into(),
        )),
    }
}

fn eigen_report(matrix: &Matrix, fmt: &Fmt) -> Result<String> {
    let analysis = ratgeom::eigen::eigen_pairs(matrix)?;
    let mut out = format!("charpoly: {}\n", analysis.char_poly);
    for pair in &analysis.exact {
        let basis: Vec<String> = pair.basis.iter().map(|v| fmt.vector(v)).collect();
        out.push_str(&format!(
            "eigenvalue {} (multiplicity {}): basis {}\n",
            fmt.scalar(&pair.value),
            pair.algebraic_multiplicity,
            basis.join(" "),
        ));
    }
    for root in &analysis.numeric_residual {
        if root.is_real() {
            out.push_str(&format!("numeric root {:.9}\n", root.re));
        } else {
            let sign = if root.im < 0.0 { '-' } else { '+' };
            out.push_str(&format!(
                "numeric root {:.9} {sign} {:.9}i\n",
                root.re,
                root.im.abs(),
            ));
        }
    }
    Ok(out)
}

fn invest_report(growth: &str, budget: &str, years: usize, fmt: &Fmt) -> Result<String> {
    let sectors: Vec<SectorSpec> = growth
        .split(',')
        .enumerate()
        .map(|(i, text)| Ok(SectorSpec::new(sector_name(i), Scalar::parse(text)?)))
        .collect::<Result<_>>()?;
    let model = InvestmentModel::build(sectors)?;
    let allocation = model.optimal_allocation(&Scalar::parse(budget)?)?;
    let evolved = model.evolve(&allocation.amounts, years)?;
    let mut out = String::new();
    for ((sector, initial), after) in model
        .sectors()
        .iter()
        .zip(&allocation.amounts)
        .zip(&evolved)
    {
        out.push_str(&format!(
            "{}: {} → {}\n",
            sector.name,
            fmt.scalar(initial),
            fmt.scalar(after),
        ));
    }
    out.push_str(&format!(
        "growth rate: {} per year\n",
        fmt.scalar(&allocation.growth_rate),
    ));
    Ok(out)
}

fn sector_name(index: usize) -> String {
    if index < 26 {
        char::from(b'A' + index as u8).to_string()
    } else {
        format!("S{}", index + 1)
    }
}

fn transform_points(command: &TransformCommand, fmt: &Fmt) -> Result<String> {
    let transformed: Vec<Vec<Scalar>> = match command {
        TransformCommand::Translate { by, points } => {
            let vector = parse_point_coords(by)?;
            let parsed = parse_points(points, vector.len())?;
            match vector.len() {
                2 => {
                    let t = Transform2::Translation(vector[0].clone(), vector[1].clone());
                    apply_all2(&t, &parsed)?
                }
                _ => {
                    let t = Transform3::Translation(
                        vector[0].clone(),
                        vector[1].clone(),
                        vector[2].clone(),
                    );
                    apply_all3(&t, &parsed)?
                }
            }
        }
        TransformCommand::Rotate { angle, points } => {
            let angle = Angle::parse(angle)?;
            let dimension = parse_point_coords(&points[0])?.len();
            let parsed = parse_points(points, dimension)?;
            if dimension == 2 {
                apply_all2(&Transform2::Rotation(angle), &parsed)?
            } else {
                apply_all3(&Transform3::RotationZ(angle), &parsed)?
            }
        }
        TransformCommand::Reflectxy { points } => {
            let parsed = parse_points(points, 3)?;
            apply_all3(&Transform3::ReflectionXy, &parsed)?
        }
    };
    let rendered: Vec<String> = transformed.iter().map(|p| fmt.vector(p)).collect();
    Ok(format!("{}\n", rendered.join(" ")))
}

fn parse_points(literals: &[String], dimension: usize) -> Result<Vec<Vec<Scalar>>> {
    literals
        .iter()
        .map(|text| {
            let coords = parse_point_coords(text)?;
            if coords.len() != dimension {
                return Err(Error::Shape(format!(
                    "point {text} is not {dimension}-dimensional"
                )));
            }
            Ok(coords)
        })
        .collect()
}

fn apply_all2(t: &Transform2, points: &[Vec<Scalar>]) -> Result<Vec<Vec<Scalar>>> {
    points
        .iter()
        .map(|coords| {
            let p = Point2::new(coords[0].clone(), coords[1].clone());
            let image = apply2(t, &p)?;
            Ok(vec![image.x, image.y])
        })
        .collect()
}

fn apply_all3(t: &Transform3, points: &[Vec<Scalar>]) -> Result<Vec<Vec<Scalar>>> {
    points
        .iter()
        .map(|coords| {
            let p = Point3::new(coords[0].clone(), coords[1].clone(), coords[2].clone());
            let image = apply3(t, &p)?;
            Ok(vec![image.x, image.y, image.z])
        })
        .collect()
}

fn render_scene(path: &PathBuf, output: Option<&std::path::Path>) -> Result<String> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    let scene = Scene::parse(&text)?;
    let svg = emit_svg(&layout_project(&scene));
    let mut out = String::new();
    for line in scene.measurements() {
        out.push_str(&line);
        out.push('\n');
    }
    match output {
        Some(target) => {
            fs::write(target, svg)
                .map_err(|e| Error::Parse(format!("cannot write {}: {e}", target.display())))?;
        }
        None => out.push_str(&svg),
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infeasible_outcomes_map_to_exit_two() {
        assert_eq!(exit_code(&Error::NoFeasibleAllocation), 2);
        assert_eq!(
            exit_code(&Error::ExactnessUnavailable("irrational".into())),
            2
        );
        assert_eq!(exit_code(&Error::Parse("bad".into())), 1);
        assert_eq!(exit_code(&Error::Shape("bad".into())), 1);
        assert_eq!(exit_code(&Error::DivisionByZero), 1);
    }

    #[test]
    fn sector_names_run_through_the_alphabet_then_number() {
        assert_eq!(sector_name(0), "A");
        assert_eq!(sector_name(2), "C");
        assert_eq!(sector_name(25), "Z");
        assert_eq!(sector_name(26), "S27");
    }
}
