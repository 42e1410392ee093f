//! The `tropaint` command line.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::config::PointConfiguration;
use crate::error::{Error, Result};
use crate::geometry::{parse_rational, Vector};
use crate::io::{
    parse_configuration, parse_vector, to_json, LatticeJson, MultiplihedronJson, PaintedJson, PaintingPolytopeJson,
    SecondaryJson, SubdivisionJson, TropicalJson, VerificationJson,
};
use crate::multiplihedra::{
    admissible_alpha, multiplihedron_lattice, ngon_configuration, painted_trees, realize_painted_tree_in,
    verify_multiplihedron_with_limits,
};
use crate::painting::{paint, PaintSpec};
use crate::painting_polytope::{painted_lattice, verify_main_theorem_with_limits};
use crate::secondary::{face_lattice_from_poset, vertices_of};
use crate::subdivision::{enumerate_with_limits, induce_subdivision, Lifting, Limits};
use crate::svg::{hasse_svg, painted_svg, tropical_svg, BBox};
use crate::tropical::dual_complex;

#[derive(Debug, Parser)]
#[command(name = "tropaint", version, about = "Regular subdivisions, tropical hypersurfaces and painted complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Output {
    /// Write the JSON result here instead of standard output.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct LimitArgs {
    #[arg(long, default_value_t = Limits::default().max_triangulations)]
    max_triangulations: usize,
    #[arg(long, default_value_t = Limits::default().max_cells)]
    max_cells: usize,
}

impl LimitArgs {
    fn limits(&self) -> Limits {
        Limits { max_triangulations: self.max_triangulations, max_cells: self.max_cells }
    }
}

#[derive(Debug, Args)]
struct Drawing {
    /// Also draw the complex (planar configurations only).
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Visible region as xmin,ymin,xmax,ymax.
    #[arg(long, allow_hyphen_values = true)]
    bbox: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Maximal cells of the subdivision induced by a lifting.
    Subdivide {
        config: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        eta: String,
        #[command(flatten)]
        out: Output,
    },
    /// The dual complex of the tropical polynomial with coefficients eta.
    Tropical {
        config: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        eta: String,
        #[command(flatten)]
        draw: Drawing,
        #[command(flatten)]
        out: Output,
    },
    /// Color the dual complex by the sign of f(u) - u(alpha) - c.
    Paint {
        config: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        eta: String,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[command(flatten)]
        draw: Drawing,
        #[command(flatten)]
        out: Output,
    },
    /// GKZ vertices and face lattice of the secondary polytope.
    Secondary {
        config: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[command(flatten)]
        limits: LimitArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Painted complexes, matched with subdivisions of the extended configuration.
    PaintingPolytope {
        config: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[command(flatten)]
        limits: LimitArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Painted trees with m leaves under contraction.
    Multiplihedron {
        #[arg(short)]
        m: usize,
        /// Compare with the painting polytope of the (m+1)-gon.
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Write one painted complex drawing per face.
        #[arg(long)]
        svg_dir: Option<PathBuf>,
        #[command(flatten)]
        limits: LimitArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Check a correspondence; exits with status 4 when it fails.
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
}

#[derive(Debug, Subcommand)]
enum VerifyTarget {
    PaintingPolytope {
        config: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[command(flatten)]
        limits: LimitArgs,
        #[command(flatten)]
        out: Output,
    },
    Multiplihedron {
        #[arg(short)]
        m: usize,
        #[command(flatten)]
        limits: LimitArgs,
        #[command(flatten)]
        out: Output,
    },
}

/// Run with `args` (including the program name); returns the exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                1
            } else {
                let _ = write!(stdout, "{text}");
                0
            };
        }
    };
    match execute(cli.command) {
        Ok(files) => {
            for (target, body) in files {
                let written = match target {
                    Some(path) => std::fs::write(&path, body).map_err(|e| format!("{}: {e}", path.display())),
                    None => stdout.write_all(body.as_bytes()).map_err(|e| e.to_string()),
                };
                if let Err(e) = written {
                    let _ = writeln!(stderr, "error: {e}");
                    return 2;
                }
            }
            0
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

/// Destination (`None` for standard output) and contents.
type Files = Vec<(Option<PathBuf>, String)>;

fn read_config(path: &Path) -> Result<PointConfiguration> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    parse_configuration(&text).map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        other => other,
    })
}

fn vector_flag(text: &str) -> Result<Vector> {
    Ok(Vector::new(parse_vector(text)?))
}

fn lifting_flag(config: &PointConfiguration, text: &str) -> Result<Lifting> {
    let eta = Lifting(parse_vector(text)?);
    if eta.len() != config.len() {
        return Err(Error::DimensionMismatch { expected: config.len(), found: eta.len() });
    }
    Ok(eta)
}

fn bbox_flag(draw: &Drawing) -> Result<Option<BBox>> {
    draw.bbox.as_deref().map(BBox::parse).transpose()
}

fn execute(command: Command) -> Result<Files> {
    let mut files = Files::new();
    match command {
        Command::Subdivide { config, eta, out } => {
            let config = read_config(&config)?;
            let eta = lifting_flag(&config, &eta)?;
            let s = induce_subdivision(&config, &eta)?;
            files.push((out.output, to_json(&SubdivisionJson::of(&config, Some(&eta), &s))));
        }
        Command::Tropical { config, eta, draw, out } => {
            let config = read_config(&config)?;
            let eta = lifting_flag(&config, &eta)?;
            let (p, _) = dual_complex(&config, &eta)?;
            if let Some(path) = &draw.svg {
                files.push((Some(path.clone()), tropical_svg(&p, None, bbox_flag(&draw)?)?));
            }
            files.push((out.output, to_json(&TropicalJson::of(&p))));
        }
        Command::Paint { config, eta, c, alpha, draw, out } => {
            let config = read_config(&config)?;
            let eta = lifting_flag(&config, &eta)?;
            let spec = PaintSpec { eta, c: parse_rational(&c)?, alpha: vector_flag(&alpha)? };
            let (p, _) = dual_complex(&config, &spec.eta)?;
            let pc = paint(&p, &spec)?;
            if let Some(path) = &draw.svg {
                files.push((Some(path.clone()), painted_svg(&pc, bbox_flag(&draw)?)?));
            }
            files.push((out.output, to_json(&PaintedJson::of(&pc)?)));
        }
        Command::Secondary { config, dot, limits, out } => {
            let config = read_config(&config)?;
            let poset = enumerate_with_limits(&config, limits.limits())?;
            let lattice = face_lattice_from_poset(&poset);
            let vertices = vertices_of(&config, &poset)?;
            if let Some(path) = dot {
                files.push((Some(path), lattice.to_dot("secondary")));
            }
            files.push((out.output, to_json(&SecondaryJson::of(&config, &vertices, &lattice))));
        }
        Command::PaintingPolytope { config, alpha, dot, limits, out } => {
            let config = read_config(&config)?;
            let report = verify_main_theorem_with_limits(&config, &vector_flag(&alpha)?, limits.limits())?;
            if let Some(path) = dot {
                files.push((Some(path), painted_lattice(&report.painted).to_dot("painting")));
            }
            files.push((out.output, to_json(&PaintingPolytopeJson::of(&report))));
        }
        Command::Multiplihedron { m, verify, dot, svg_dir, limits, out } => {
            let config = ngon_configuration(m)?;
            let alpha = admissible_alpha(&config)?;
            let lattice = multiplihedron_lattice(m)?;
            let verification = if verify {
                Some(VerificationJson::of_multiplihedron(&verify_multiplihedron_with_limits(m, limits.limits())?))
            } else {
                None
            };
            if let Some(path) = dot {
                files.push((Some(path), lattice.to_dot("multiplihedron")));
            }
            if let Some(dir) = svg_dir {
                std::fs::create_dir_all(&dir).map_err(|e| Error::Input(format!("{}: {e}", dir.display())))?;
                files.push((Some(dir.join("hasse.svg")), hasse_svg(&lattice)));
                for (i, t) in painted_trees(m)?.iter().enumerate() {
                    let spec = realize_painted_tree_in(&config, &alpha, t)?;
                    let (p, _) = dual_complex(&config, &spec.eta)?;
                    files.push((Some(dir.join(format!("face-{i:03}.svg"))), painted_svg(&paint(&p, &spec)?, None)?));
                }
            }
            let doc = MultiplihedronJson {
                m,
                alpha: alpha.coords().iter().cloned().map(crate::io::Q).collect(),
                lattice: LatticeJson::of(&lattice),
                verification,
            };
            files.push((out.output, to_json(&doc)));
        }
        Command::Verify { target: VerifyTarget::PaintingPolytope { config, alpha, limits, out } } => {
            let config = read_config(&config)?;
            let report = verify_main_theorem_with_limits(&config, &vector_flag(&alpha)?, limits.limits())?;
            files.push((out.output, to_json(&VerificationJson::of_theorem(&report))));
        }
        Command::Verify { target: VerifyTarget::Multiplihedron { m, limits, out } } => {
            let report = verify_multiplihedron_with_limits(m, limits.limits())?;
            files.push((out.output, to_json(&VerificationJson::of_multiplihedron(&report))));
        }
    }
    Ok(files)
}
