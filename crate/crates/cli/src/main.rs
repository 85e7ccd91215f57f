use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use compositum_cli::{fieldspec, groupspec, report, CliError, EXIT_OK, EXIT_PARSE};
use compositum_core::arith::factor_bigint;
use compositum_core::{
    capital_c, check_theorem_hypotheses, decide, order_discriminant, AlgebraicNumber, Caps,
    DiagonalInstance, GaloisDatum, NumberField, ProductGroup, TriState,
};

/// Exact decision procedures for diagonal subgroups in products of finite
/// groups, and certified trace/discriminant bounds over totally real number
/// fields.
#[derive(Parser)]
#[command(name = "compositum", version, about)]
struct Cli {
    /// Bisection steps used wherever roots must be enclosed.
    #[arg(long, global = true, default_value_t = 128)]
    precision: u32,
    /// Maximum order a generated group may reach.
    #[arg(long = "cap-closure", global = true, default_value_t = 20_000)]
    cap_closure: usize,
    /// Maximum group order for exhaustive subgroup enumeration.
    #[arg(long = "cap-subgroups", global = true, default_value_t = 2_000)]
    cap_subgroups: usize,
    /// Maximum group order for isomorphism search.
    #[arg(long = "cap-iso", global = true, default_value_t = 64)]
    cap_iso: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Flag {
    Pass,
    Fail,
    Unknown,
}

impl From<Flag> for TriState {
    fn from(f: Flag) -> Self {
        match f {
            Flag::Pass => TriState::Pass,
            Flag::Fail => TriState::Fail,
            Flag::Unknown => TriState::Unknown,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether S×U ≤ T×V admits a diagonal subgroup.
    Diagonal {
        /// Group spec file for S (proper subgroup of T).
        s: PathBuf,
        /// Group spec file for T.
        t: PathBuf,
        /// Group spec file for U (proper subgroup of V).
        u: PathBuf,
        /// Group spec file for V.
        v: PathBuf,
    },
    /// Enumerate the subgroups of a direct product A×B.
    Goursat {
        a: PathBuf,
        b: PathBuf,
        /// Also print one quintuple per subgroup.
        #[arg(long)]
        quintuples: bool,
    },
    /// Inspect a field spec: total reality, order discriminant, elements.
    Field {
        spec: PathBuf,
        /// Accept a defining polynomial whose irreducibility the built-in
        /// tests cannot settle.
        #[arg(long)]
        assert_irreducible: bool,
    },
    /// Compute the certified threshold C(L, k) from a field spec.
    Bound {
        spec: PathBuf,
        #[arg(value_parser = clap::value_parser!(u64).range(2..))]
        k: u64,
        #[arg(long)]
        assert_irreducible: bool,
    },
    /// Evaluate the main-theorem hypotheses for Galois data (file holds the
    /// closure group T, then the stabilizer S).
    Check {
        groups: PathBuf,
        ell: u64,
        #[arg(long, value_enum, default_value_t = Flag::Unknown)]
        disc_bound: Flag,
        #[arg(long, value_enum, default_value_t = Flag::Unknown)]
        coprime: Flag,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::parse(format!("cannot read {}: {e}", path.display())))
}

fn load_group(path: &Path, caps: &Caps) -> Result<compositum_core::PermGroup, CliError> {
    groupspec::parse_single_group(&read(path)?, &path.display().to_string())?.to_group(caps)
}

fn run_diagonal(cli: &Cli, s: &Path, t: &Path, u: &Path, v: &Path) -> Result<String, CliError> {
    let caps = caps_of(cli);
    let inst = DiagonalInstance::new(
        load_group(s, &caps)?,
        load_group(t, &caps)?,
        load_group(u, &caps)?,
        load_group(v, &caps)?,
        &caps,
    )?;
    let decision = decide(&inst, &caps)?;
    let dto = report::diagonal_dto(&decision);
    render(cli, &dto, report::render_diagonal_text(&dto))
}

fn run_goursat(cli: &Cli, a: &Path, b: &Path, quintuples: bool) -> Result<String, CliError> {
    let caps = caps_of(cli);
    let left = load_group(a, &caps)?;
    let right = load_group(b, &caps)?;
    let product = ProductGroup::new(left.clone(), right.clone(), &caps)?;
    let pairs = product.enumerate_quintuples(&caps)?;
    let dto = report::GoursatReportDto {
        left_order: left.order(),
        right_order: right.order(),
        product_order: product.group().order(),
        subgroup_count: pairs.len(),
        quintuples: if quintuples {
            Some(
                pairs
                    .iter()
                    .map(|(q, g)| report::quintuple_dto(q, g))
                    .collect(),
            )
        } else {
            None
        },
    };
    render(cli, &dto, report::render_goursat_text(&dto))
}

fn field_report(
    field: &Arc<NumberField>,
    elements: &[(String, AlgebraicNumber)],
) -> report::FieldReportDto {
    let disc = order_discriminant(field);
    let (factors, cofactor) = factor_bigint(&disc, 1_000_000);
    let totally_real = field.is_totally_real();
    let element_dtos = elements
        .iter()
        .map(|(name, el)| report::ElementReportDto {
            name: name.clone(),
            residue: el.residue().to_string(),
            trace: el.trace().to_string(),
            delta: el.delta().to_string(),
            totally_positive: el.is_totally_positive().ok(),
        })
        .collect();
    report::FieldReportDto {
        label: field.label().to_string(),
        min_poly: field.min_poly().to_string(),
        degree: field.degree(),
        irreducibility: report::irreducibility_name(field).to_string(),
        totally_real,
        order_disc: disc.to_string(),
        disc_prime_support: factors.keys().map(|p| p.to_string()).collect(),
        disc_unfactored_cofactor: cofactor.map(|c| c.to_string()),
        elements: element_dtos,
    }
}

fn run_field(cli: &Cli, spec: &Path, assert_irreducible: bool) -> Result<String, CliError> {
    let parsed = fieldspec::parse_field_spec(&read(spec)?)?;
    let (field, elements) = parsed.realize(assert_irreducible)?;
    let dto = field_report(&field, &elements);
    render(cli, &dto, report::render_field_text(&dto))
}

fn run_bound(cli: &Cli, spec: &Path, k: u64, assert_irreducible: bool) -> Result<String, CliError> {
    let parsed = fieldspec::parse_field_spec(&read(spec)?)?;
    let (field, elements) = parsed.realize(assert_irreducible)?;
    let a_list: Vec<AlgebraicNumber> = elements.iter().map(|(_, el)| el.clone()).collect();
    let bound = capital_c(&field, k, &a_list, cli.precision)?;
    let dto = report::bound_dto(field.label(), &bound);
    render(cli, &dto, report::render_bound_text(field.label(), &bound))
}

fn run_check(
    cli: &Cli,
    groups: &Path,
    ell: u64,
    disc_bound: Flag,
    coprime: Flag,
) -> Result<String, CliError> {
    let caps = caps_of(cli);
    let blocks = groupspec::parse_group_blocks(&read(groups)?)?;
    if blocks.len() != 2 {
        return Err(CliError {
            code: EXIT_PARSE,
            message: format!(
                "expected two group blocks (closure group T, then stabilizer S), found {}",
                blocks.len()
            ),
        });
    }
    let closure = blocks[0].to_group(&caps)?;
    let stabilizer = blocks[1].to_group(&caps)?;
    let datum = GaloisDatum::new(closure, stabilizer)?;
    let hypothesis = check_theorem_hypotheses(&datum, ell, disc_bound.into(), coprime.into())?;
    let dto = report::check_dto(&hypothesis);
    render(cli, &dto, report::render_check_text(&dto))
}

fn caps_of(cli: &Cli) -> Caps {
    Caps {
        closure: cli.cap_closure,
        subgroups: cli.cap_subgroups,
        iso: cli.cap_iso,
    }
}

fn render<T: serde::Serialize>(cli: &Cli, dto: &T, text: String) -> Result<String, CliError> {
    match cli.format {
        Format::Text => Ok(text),
        Format::Structured => {
            let json = serde_json::to_string(dto)
                .map_err(|e| CliError::other(format!("serialization failed: {e}")))?;
            Ok(format!("{json}\n"))
        }
    }
}

fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Diagonal { s, t, u, v } => run_diagonal(cli, s, t, u, v),
        Command::Goursat { a, b, quintuples } => run_goursat(cli, a, b, *quintuples),
        Command::Field {
            spec,
            assert_irreducible,
        } => run_field(cli, spec, *assert_irreducible),
        Command::Bound {
            spec,
            k,
            assert_irreducible,
        } => run_bound(cli, spec, *k, *assert_irreducible),
        Command::Check {
            groups,
            ell,
            disc_bound,
            coprime,
        } => run_check(cli, groups, *ell, *disc_bound, *coprime),
    }
}

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(output) => {
            print!("{output}");
            std::process::exit(EXIT_OK);
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.code);
        }
    }
}
