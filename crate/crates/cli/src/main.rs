//! `carrier-nerve`: JSON in, JSON out. Exit codes: 0 holds, 1 fails,
//! 2 unknown, 3 malformed input or any other error.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use carrier_nerve::carrier::{
    canonical_nerve_map, is_carried, is_weakly_carried, Carrier, SimplicialMap, FACEWISE_NOTE,
};
use carrier_nerve::complex::{complexes_isomorphic, SimplicialComplex, DEFAULT_ISO_CAP};
use carrier_nerve::cover::{barycentric_star_cover, open_star_cover, Cover, RegularityMode};
use carrier_nerve::gallery::{self, Instance, InstanceId};
use carrier_nerve::homology::chain_complex;
use carrier_nerve::json;
use carrier_nerve::verify::{verify_n_nerve_theorem, verify_nerve_theorem};
use carrier_nerve::{Error, Result, Verdict};

const EXIT_MALFORMED: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "carrier-nerve", version, about = "Nerves, carriers and homology checks on finite simplicial complexes")]
struct Cli {
    /// Output layout.
    #[arg(long, value_enum, global = true, default_value_t = Format::Pretty)]
    format: Format,

    /// Add a `generated_at` field (seconds since the epoch).
    #[arg(long, global = true)]
    timestamps: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Format {
    Pretty,
    Compact,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum StarType {
    Open,
    Barycentric,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Mode {
    Regular,
    Weak,
    N,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Nerve of a cover, with a witness face per nerve face.
    Nerve {
        cover: String,
        /// Skip nerve faces above this dimension.
        #[arg(long)]
        max_dim: Option<usize>,
    },
    /// Open-star or barycentric-star cover of a complex.
    Stars {
        #[arg(long = "type", value_enum)]
        star_type: StarType,
        complex: String,
    },
    /// Regularity report for a cover.
    CheckCover {
        #[arg(long, value_enum)]
        mode: Mode,
        /// Required with `--mode n`.
        #[arg(long)]
        n: Option<i32>,
        cover: String,
    },
    /// Carrier operations.
    Carrier {
        #[command(subcommand)]
        op: CarrierOp,
    },
    /// Nerve theorem check; with `--n`, the degree-bounded version.
    Verify {
        cover: String,
        #[arg(long)]
        n: Option<i32>,
    },
    /// Integral homology.
    Homology {
        complex: String,
        #[arg(long)]
        reduced: bool,
        /// Include the dense boundary matrices.
        #[arg(long)]
        debug_matrices: bool,
    },
    /// Simplicial map operations.
    Map {
        #[command(subcommand)]
        op: MapOp,
    },
    /// Emit a gallery instance as complex or cover JSON.
    Gen { id: String },
    /// Search for an isomorphism between two complexes.
    Iso { first: String, second: String },
}

#[derive(Subcommand, Debug)]
enum CarrierOp {
    Validate { carrier: String },
    /// `second ∘ first`.
    Compose { first: String, second: String },
    Invert { carrier: String },
}

#[derive(Subcommand, Debug)]
enum MapOp {
    /// Canonical map `sd(base) → nerve` of a closed cover.
    Canonical { cover: String },
    CheckCarried {
        map: String,
        carrier: String,
        /// Check the weak (per-face witness) condition instead.
        #[arg(long)]
        weak: bool,
    },
}

/// An input argument: a JSON file, or a gallery id when no such file
/// exists.
enum Input {
    File(Value, PathBuf),
    Instance(Instance),
}

fn read_input(arg: &str) -> Result<Input> {
    let path = Path::new(arg);
    if !path.exists() {
        if let Ok(id) = arg.parse::<InstanceId>() {
            return Ok(Input::Instance(gallery::make(&id)?));
        }
    }
    Ok(Input::File(json::load(path)?, json::base_dir(path)))
}

fn read_complex(arg: &str) -> Result<SimplicialComplex> {
    match read_input(arg)? {
        Input::File(v, dir) => json::parse_complex_at(&v, &dir),
        Input::Instance(Instance::Complex(k)) => Ok(k),
        Input::Instance(Instance::Cover(_)) => Err(Error::Malformed(format!("`{arg}` is a cover, not a complex"))),
    }
}

fn read_cover(arg: &str) -> Result<Cover> {
    match read_input(arg)? {
        Input::File(v, dir) => json::parse_cover(&v, &dir),
        Input::Instance(Instance::Cover(c)) => Ok(c),
        Input::Instance(Instance::Complex(_)) => Err(Error::Malformed(format!(
            "`{arg}` is a complex; use bst_cover:{arg} or st_cover:{arg}"
        ))),
    }
}

fn read_file(arg: &str) -> Result<(Value, PathBuf)> {
    let path = Path::new(arg);
    Ok((json::load(path)?, json::base_dir(path)))
}

fn read_carrier(arg: &str) -> Result<Carrier> {
    let (v, dir) = read_file(arg)?;
    json::parse_carrier(&v, &dir)
}

fn read_map(arg: &str) -> Result<SimplicialMap> {
    let (v, dir) = read_file(arg)?;
    json::parse_map(&v, &dir)
}

fn verdict_code(v: Verdict) -> u8 {
    v.exit_code() as u8
}

fn run(cli: &Cli) -> Result<(Value, u8)> {
    Ok(match &cli.command {
        Command::Nerve { cover, max_dim } => {
            let cover = read_cover(cover)?;
            (json::nerve_to_value(&cover.nerve(*max_dim)), 0)
        }
        Command::Stars { star_type, complex } => {
            let k = read_complex(complex)?;
            let cover = match star_type {
                StarType::Open => open_star_cover(&k),
                StarType::Barycentric => barycentric_star_cover(&k),
            };
            (json::cover_to_value(&cover), 0)
        }
        Command::CheckCover { mode, n, cover } => {
            let mode = match (mode, n) {
                (Mode::Regular, None) => RegularityMode::Regular,
                (Mode::Weak, None) => RegularityMode::WeaklyRegular,
                (Mode::N, Some(n)) => RegularityMode::NRegular(*n),
                (Mode::N, None) => return Err(Error::Malformed("--mode n needs --n".into())),
                (_, Some(_)) => return Err(Error::Malformed("--n is only meaningful with --mode n".into())),
            };
            let report = read_cover(cover)?.check_regularity(mode);
            let code = verdict_code(report.overall);
            (serde_json::to_value(&report)?, code)
        }
        Command::Carrier { op } => carrier_op(op)?,
        Command::Verify { cover, n } => {
            let c = read_cover(cover)?;
            let report = match n {
                None => verify_nerve_theorem(&c)?,
                Some(n) => verify_n_nerve_theorem(&c, *n)?,
            }
            .with_cover_id(cover.clone());
            let code = verdict_code(report.verdict);
            (serde_json::to_value(&report)?, code)
        }
        Command::Homology {
            complex,
            reduced,
            debug_matrices,
        } => {
            let k = read_complex(complex)?;
            let chains = chain_complex(&k);
            let mut out = serde_json::to_value(chains.homology(*reduced))?;
            if *debug_matrices {
                out["boundary_matrices"] = json::boundary_matrices_to_value(&chains);
            }
            (out, 0)
        }
        Command::Map { op } => match op {
            MapOp::Canonical { cover } => {
                let h = canonical_nerve_map(&read_cover(cover)?)?;
                (json::map_to_value(&h), 0)
            }
            MapOp::CheckCarried { map, carrier, weak } => {
                let f = read_map(map)?;
                let c = read_carrier(carrier)?;
                let (check, notes) = if *weak {
                    (is_weakly_carried(&f, &c)?, vec![FACEWISE_NOTE])
                } else {
                    (is_carried(&f, &c)?, vec![])
                };
                let code = u8::from(!check.holds);
                let mut out = serde_json::to_value(&check)?;
                out["proxy_notes"] = json!(notes);
                (out, code)
            }
        },
        Command::Gen { id } => {
            let instance = gallery::make(&id.parse()?)?;
            let out = match &instance {
                Instance::Complex(k) => json::complex_to_value(k),
                Instance::Cover(c) => json::cover_to_value(c),
            };
            (out, 0)
        }
        Command::Iso { first, second } => {
            let a = read_complex(first)?;
            let b = read_complex(second)?;
            match complexes_isomorphic(&a, &b, DEFAULT_ISO_CAP)? {
                Some(bijection) => {
                    let m: serde_json::Map<String, Value> =
                        bijection.iter().map(|(x, y)| (x.to_string(), json!(y))).collect();
                    (json!({ "isomorphic": true, "bijection": m }), 0)
                }
                None => (json!({ "isomorphic": false }), 1),
            }
        }
    })
}

fn carrier_op(op: &CarrierOp) -> Result<(Value, u8)> {
    Ok(match op {
        CarrierOp::Validate { carrier } => {
            let validity = read_carrier(carrier)?.validate();
            let code = u8::from(!validity.is_valid());
            (serde_json::to_value(&validity)?, code)
        }
        CarrierOp::Compose { first, second } => {
            let c = read_carrier(first)?;
            let d = read_carrier(second)?;
            let composite = c.then(&d)?;
            let mut out = json::carrier_to_value(&composite);
            out["validity"] = serde_json::to_value(composite.validate())?;
            (out, 0)
        }
        CarrierOp::Invert { carrier } => {
            let c = read_carrier(carrier)?;
            match c.invert() {
                Some(inv) => (json::carrier_to_value(&inv), 0),
                None => (json!({ "invertible": false }), 1),
            }
        }
    })
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(value: &Value, format: Format) {
    let _ = writeln!(std::io::stdout(), "{}", json::render(value, matches!(format, Format::Pretty)));
}

fn error_object(kind: &str, message: &str) -> Value {
    json!({ "error": { "kind": kind, "message": message } })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(std::io::stdout(), "{e}");
                return ExitCode::SUCCESS;
            }
            eprint!("{e}");
            let message = e.to_string();
            let first = message.lines().next().unwrap_or_default().trim_start_matches("error: ");
            emit(&error_object("usage", first), Format::Compact);
            return ExitCode::from(EXIT_MALFORMED);
        }
    };
    match run(&cli) {
        Ok((mut value, code)) => {
            if cli.timestamps {
                let now = SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs());
                value["generated_at"] = json!(now);
            }
            emit(&value, cli.format);
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            emit(&error_object(e.kind(), &e.to_string()), cli.format);
            ExitCode::from(EXIT_MALFORMED)
        }
    }
}
