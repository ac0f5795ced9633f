//! Command-line front end: parse a JSON workspace, dispatch computations,
//! print human-readable tables or machine-readable JSON.
//!
//! Exit codes: 0 success or verified, 1 refuted or failed check, 2 input
//! error.

mod commands;
mod schema;

use std::path::PathBuf;

use clap::{Parser, Subcommand};

use schema::load_workspace;

#[derive(Parser)]
#[command(name = "matcat", version, about = "exact computations on quiver algebras, their maps categories, recollements and approximations")]
struct Cli {
    /// Override the workspace field: `Q` or `Fp:<prime>`
    #[arg(long, global = true)]
    field: Option<String>,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Basis of the hom space between two named modules
    Hom {
        #[arg(short = 'w', long = "workspace")]
        workspace: PathBuf,
        /// module names; give the flag twice
        #[arg(short = 'm', long = "module")]
        modules: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// The translate of a named module
    Tau {
        #[arg(short = 'w', long = "workspace")]
        workspace: PathBuf,
        #[arg(short = 'm', long = "module")]
        module: String,
        #[arg(long)]
        json: bool,
    },
    /// The translate of a maps object read from a JSON file
    MapsTau {
        #[arg(short = 'w', long = "workspace")]
        workspace: PathBuf,
        #[arg(long)]
        maps: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Lift a module-level almost split sequence into the maps category
    ArSeq {
        #[arg(short = 'w', long = "workspace")]
        workspace: PathBuf,
        #[arg(long)]
        seq: PathBuf,
        /// one of 1i, 1ii, 2i, 2ii
        #[arg(long)]
        variant: String,
        #[arg(long)]
        json: bool,
    },
    /// Verify a maps-category sequence as almost split by exhaustive
    /// factorization
    VerifyAr {
        #[arg(short = 'w', long = "workspace")]
        workspace: PathBuf,
        #[arg(long)]
        seq: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Emit the doubled matrix algebra of the workspace quiver
    MapsAlgebra {
        #[arg(short = 'w', long = "workspace")]
        workspace: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Check the recollement axioms for a named vertex subcategory
    RecollementCheck {
        #[arg(short = 'w', long = "workspace")]
        workspace: PathBuf,
        #[arg(long)]
        sub: String,
        /// also build and check the induced matrix recollements
        #[arg(long)]
        induced: bool,
        #[arg(long)]
        json: bool,
    },
    /// Construct and certify a subcategory approximation
    Approx {
        #[arg(short = 'w', long = "workspace")]
        workspace: PathBuf,
        /// addg, epi-left, epi-right, mono-left or mono-right
        #[arg(long)]
        kind: String,
        #[arg(short = 'm', long = "module")]
        module: Option<String>,
        #[arg(long)]
        maps: Option<PathBuf>,
        /// named generator list (addg)
        #[arg(long)]
        sub: Option<String>,
        #[arg(long, default_value = "right")]
        direction: String,
        #[arg(long)]
        json: bool,
    },
    /// Run the built-in acceptance suite
    Selftest {
        #[arg(long)]
        json: bool,
    },
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    let field = cli.field.as_deref();
    match cli.command {
        Cmd::Hom { workspace, modules, json } => {
            let ws = load_workspace(&workspace, field)?;
            commands::cmd_hom(&ws, &modules, json)
        }
        Cmd::Tau { workspace, module, json } => {
            let ws = load_workspace(&workspace, field)?;
            commands::cmd_tau(&ws, &module, json)
        }
        Cmd::MapsTau { workspace, maps, json } => {
            let ws = load_workspace(&workspace, field)?;
            commands::cmd_maps_tau(&ws, &maps, json)
        }
        Cmd::ArSeq { workspace, seq, variant, json } => {
            let ws = load_workspace(&workspace, field)?;
            commands::cmd_ar_seq(&ws, &seq, &variant, json)
        }
        Cmd::VerifyAr { workspace, seq, json } => {
            let ws = load_workspace(&workspace, field)?;
            commands::cmd_verify_ar(&ws, &seq, json)
        }
        Cmd::MapsAlgebra { workspace, json } => {
            let ws = load_workspace(&workspace, field)?;
            commands::cmd_maps_algebra(&ws, json)
        }
        Cmd::RecollementCheck { workspace, sub, induced, json } => {
            let ws = load_workspace(&workspace, field)?;
            commands::cmd_recollement_check(&ws, &sub, induced, json)
        }
        Cmd::Approx { workspace, kind, module, maps, sub, direction, json } => {
            let ws = load_workspace(&workspace, field)?;
            commands::cmd_approx(
                &ws,
                &kind,
                module.as_deref(),
                maps.as_deref(),
                sub.as_deref(),
                &direction,
                json,
            )
        }
        Cmd::Selftest { json } => commands::cmd_selftest(json),
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            2
        }
    };
    std::process::exit(code);
}
