mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

#[derive(Parser)]
#[command(name = "lorinv", version, about = "Exact invariant theory for discrete Lorentz groups")]
#[command(after_help = EXIT_CODES)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
pub struct Global {
    /// Spaces of JSON indentation; 0 prints one line.
    #[arg(long, global = true, default_value_t = 2)]
    pub json_indent: usize,
    /// Seed for the sampling commands.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Numeric tolerance; each command documents its default.
    #[arg(long, global = true)]
    pub tolerance: Option<f64>,
}

const EXIT_CODES: &str = "\
Exit codes:
   0  success
   2  parse error (bad JSON, bad flag, unreadable file)
   3  matrix is not in O(n,1)
   4  group closure exceeded the element cap
   5  boost parameter is zero
   6  shape mismatch
   7  membership product cap exceeded
   8  beta is zero
   9  band limit above the cap
  10  value not exactly representable, not a unit, or numeric overflow
  11  not an involution, central, or not in block form
  12  unsupported input
  13  internal certificate failed";

#[derive(Subcommand)]
enum Command {
    /// Lorentz component, involution normal form and block structure of a
    /// matrix (the four-component decomposition; reflection normal forms).
    Classify {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Hilbert basis of a group's invariant ring (boost core x^2 - y^2;
    /// reflection bases {x, y^2} and {y, x^2}; rotation-boost unions).
    HilbertBasis {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        max_degree: Option<u32>,
        /// Cap on the number of group elements enumerated.
        #[arg(long, default_value_t = lorinv::lorentz::DEFAULT_GROUP_CAP)]
        cap: usize,
    },
    /// Check a polynomial for invariance, or a polynomial map
    /// {"components": [...]} for equivariance (boost equivariants).
    VerifyInvariant {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        poly: PathBuf,
    },
    /// Decide whether a polynomial lies in the algebra of given generators.
    Membership {
        #[arg(long)]
        generators: PathBuf,
        #[arg(long)]
        poly: PathBuf,
        #[arg(long, default_value_t = lorinv::polyring::DEFAULT_PRODUCT_CAP)]
        cap: usize,
    },
    /// Molien series of a finite group through degree K.
    Molien {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = lorinv::lorentz::DEFAULT_GROUP_CAP)]
        cap: usize,
    },
    /// Decide whether two points of the plane share a boost orbit
    /// (level sets of x^2 - y^2 split into several orbits).
    OrbitSeparate {
        #[arg(long)]
        beta: f64,
        /// First point as X,Y.
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        /// Second point as X,Y.
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
    /// Smooth boost invariant that is not a function of x^2 - y^2
    /// (the gap between smooth and polynomial invariants).
    GapDemo {
        #[arg(long)]
        beta: f64,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        /// Level x^2 - y^2 = t on which the two branches are compared.
        #[arg(long, default_value_t = 3.0)]
        t: f64,
    },
    /// Translation invariance of a polynomial under Z^n (cocompact lattices
    /// have only constant polynomial invariants).
    CocompactCheck {
        #[arg(long)]
        poly: PathBuf,
        #[arg(long)]
        rank: usize,
        /// Random rational points for the numeric cross-check.
        #[arg(long, default_value_t = 10)]
        points: usize,
    },
    /// Rewrite a periodic trigonometric polynomial as a polynomial in
    /// (cos 2 pi x_i, sin 2 pi x_i) (torus reconstruction).
    TorusReconstruct {
        #[arg(long)]
        fourier: PathBuf,
        #[arg(long, default_value_t = lorinv::regime::DEFAULT_BAND_CAP)]
        band_cap: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let g = cli.global;
    let result = match cli.command {
        Command::Classify { matrix } => commands::classify(&matrix),
        Command::HilbertBasis { group, max_degree, cap } => commands::hilbert_basis(&group, max_degree, cap),
        Command::VerifyInvariant { group, poly } => commands::verify(&group, &poly),
        Command::Membership { generators, poly, cap } => commands::membership(&generators, &poly, cap),
        Command::Molien { group, degree, cap } => commands::molien(&group, degree, cap),
        Command::OrbitSeparate { beta, p, q } => commands::orbit(beta, &p, &q, &g),
        Command::GapDemo { beta, samples, t } => commands::gap(beta, samples, t, &g),
        Command::CocompactCheck { poly, rank, points } => commands::cocompact(&poly, rank, points, &g),
        Command::TorusReconstruct { fourier, band_cap } => commands::torus(&fourier, band_cap),
    };
    match result {
        Ok(payload) => {
            println!("{}", output::render(&payload, g.json_indent));
            ExitCode::SUCCESS
        }
        Err(err) => {
            let code = err.exit_code();
            let body = json!({"status": "error", "code": code, "message": err.to_string()});
            eprintln!("{}", output::render(&body, g.json_indent));
            ExitCode::from(code as u8)
        }
    }
}
