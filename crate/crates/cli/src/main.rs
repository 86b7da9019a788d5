use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use coincidence::error::format_blocks;
use coincidence::geometry::{parse_rational, ConfigurationSpace, Point};
use coincidence::topology::{self, Caps, ComplementSpec, DEFAULT_SEED};
use coincidence::{mesh, paths, report, Error, PLPath};

#[derive(Parser)]
#[command(name = "coincidence", version, about = "Coincidence structures of N particles in d dimensions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct SpecArgs {
    /// Number of particles N
    #[arg(short = 'N', long)]
    particles: usize,
    /// Spatial dimension d
    #[arg(short, long, default_value_t = 1)]
    dim: usize,
    /// Number of particles k that must coincide
    #[arg(short = 'k', long, default_value_t = 2)]
    hardcore: usize,
}

impl SpecArgs {
    fn spec(&self) -> coincidence::Result<ComplementSpec> {
        ComplementSpec::new(self.particles, self.dim, self.hardcore)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum LatticeFormat {
    Dot,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of the complement of the k-body coincidence structure
    Report {
        #[command(flatten)]
        spec: SpecArgs,
        /// Also write the report to this file
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
        /// Seed for the connectivity certificate search
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Intersection lattice as DOT or JSON
    Lattice {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, value_enum, default_value = "dot")]
        format: LatticeFormat,
    },
    /// Ordering sector of a point on the line
    Classify {
        #[arg(short = 'N', long)]
        particles: usize,
        /// Comma-separated rational coordinates, e.g. "1/2,1/3"
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Winding numbers of a closed loop around the codimension-2 atoms
    Wind {
        #[command(flatten)]
        spec: SpecArgs,
        /// CSV file, one vertex per row
        #[arg(long)]
        path: PathBuf,
    },
    /// OBJ export of the structure for N = 3 or 4 on the line
    Mesh {
        #[command(flatten)]
        spec: SpecArgs,
        /// Half-width of the bounding box
        #[arg(long = "box", default_value = "1")]
        half_width: String,
        /// Output file; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn io_err(path: &std::path::Path, e: std::io::Error) -> Failure {
    Failure::Io(format!("{}: {e}", path.display()))
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Report { spec, json, seed } => {
            let doc = report::build_report(&spec.spec()?, &Caps::default(), seed)?;
            let text = doc.to_json_string();
            if let Some(path) = json {
                fs::write(&path, &text).map_err(|e| io_err(&path, e))?;
            }
            Ok(text)
        }
        Command::Lattice { spec, format } => {
            let lattice = spec.spec()?.lattice(&Caps::default())?;
            Ok(match format {
                LatticeFormat::Dot => report::lattice_dot(&lattice),
                LatticeFormat::Json => {
                    let v = report::lattice_json(&lattice);
                    serde_json::to_string_pretty(&v).expect("plain JSON values") + "\n"
                }
            })
        }
        Command::Classify { particles, point } => {
            let space = ConfigurationSpace::new(particles, 1)?;
            let p = Point::parse(space, &point)?;
            Ok(format!("{}\n", topology::sector_of(&p)?))
        }
        Command::Wind { spec, path } => {
            let spec = spec.spec()?;
            let text = fs::read_to_string(&path).map_err(|e| io_err(&path, e))?;
            let loop_ = PLPath::parse_csv(spec.space(), &text)?;
            let w = paths::winding_vector(&loop_, &spec.arrangement())?;
            Ok(serde_json::to_string_pretty(&w.as_map()).expect("plain JSON values") + "\n")
        }
        Command::Mesh { spec, half_width, out } => {
            let b = parse_rational(&half_width)?;
            let m = mesh::build_mesh(spec.particles, spec.dim, spec.hardcore, &b)?;
            let obj = m.to_obj();
            match out {
                Some(path) => {
                    fs::write(&path, &obj).map_err(|e| io_err(&path, e))?;
                    Ok(String::new())
                }
                None => Ok(obj),
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Lib(Error::Boundary { coinciding })) => {
            println!("boundary: particles {} coincide", format_blocks(&coinciding));
            ExitCode::from(4)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::CapExceeded { .. } => 3,
                Error::Collision { .. } => 4,
                Error::NoCertificate { .. } => 1,
                _ => 2,
            })
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
