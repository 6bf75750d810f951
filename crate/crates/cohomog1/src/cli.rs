//! Command-line front end.
//!
//! Exit codes are part of the interface:
//!
//! * `0` — success
//! * `1` — unreadable or malformed input, or an unknown catalog name
//! * `2` — the diagram fails validation, or the requested computation does
//!   not apply to it (e.g. `ring` on a diagram without family data)
//! * `3` — optional inputs (Weyl or normalizer orders) contradict the
//!   computed invariants

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::catalog;
use crate::diagram::GroupDiagram;
use crate::invariants::{self, InvariantError};
use crate::oddcase::OddCaseError;
use crate::polyring::{
    build_torus_family_presentations, square_zero_degree2, FamilyError, GroebnerBasis,
    IdealPresentation, MonomialOrder, PolyError, SquareZeroOutcome,
};
use crate::report::{coeff_strings, DiagramReport, ReportError};
use crate::series::PoincareSeries;

#[derive(Debug, Parser)]
#[command(
    name = "cohomog1",
    version,
    about = "exact cohomological invariants of cohomogeneity-one group diagrams"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate a diagram and print its invariants
    Report(ReportArgs),
    /// List the built-in diagrams
    Catalog(CatalogArgs),
    /// Cohomology ring presentations for maximal-torus family diagrams
    Ring(RingArgs),
    /// Classifying and equivariant Hilbert series with Taylor coefficients
    Series(SeriesArgs),
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Path to a diagram JSON file
    #[arg(
        long,
        value_name = "PATH",
        conflicts_with = "catalog",
        required_unless_present = "catalog"
    )]
    input: Option<PathBuf>,
    /// Name of a built-in diagram (see `cohomog1 catalog`)
    #[arg(long, value_name = "NAME")]
    catalog: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
enum OrderChoice {
    #[default]
    Grevlex,
    Lex,
}

impl From<OrderChoice> for MonomialOrder {
    fn from(c: OrderChoice) -> MonomialOrder {
        match c {
            OrderChoice::Grevlex => MonomialOrder::GrevLex,
            OrderChoice::Lex => MonomialOrder::Lex,
        }
    }
}

#[derive(Debug, Args)]
struct ReportArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Output format
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Debug, Args)]
struct CatalogArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Debug, Args)]
struct RingArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Output format
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    /// Monomial order for the Groebner bases
    #[arg(long, value_enum, default_value_t)]
    monomial_order: OrderChoice,
    /// Largest cohomological degree in the graded dimension table
    #[arg(long, value_name = "N", default_value_t = 8)]
    degree_bound: u32,
}

#[derive(Debug, Args)]
struct SeriesArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Output format
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    /// Largest degree of the Taylor expansions
    #[arg(long, value_name = "N", default_value_t = 12)]
    degree_bound: u32,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Unreadable input, malformed JSON, or an unknown catalog name.
    #[error("{0}")]
    Parse(String),
    /// An impossible diagram or a computation that does not apply to it.
    #[error("{0}")]
    Validation(String),
    /// Optional inputs that contradict the computed invariants.
    #[error("{0}")]
    Inconsistent(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 1,
            CliError::Validation(_) => 2,
            CliError::Inconsistent(_) => 3,
        }
    }
}

/// What a successful invocation prints and the process status it ends with.
/// A failed validation still renders a full report, so "success" here only
/// means the command produced output.
#[derive(Debug)]
pub struct CliOutput {
    pub stdout: String,
    pub exit_code: i32,
}

impl CliOutput {
    fn ok(stdout: String) -> Self {
        CliOutput {
            stdout,
            exit_code: 0,
        }
    }
}

pub fn run(cli: Cli) -> Result<CliOutput, CliError> {
    match cli.command {
        Command::Report(args) => report_command(args),
        Command::Catalog(args) => catalog_command(args),
        Command::Ring(args) => ring_command(args),
        Command::Series(args) => series_command(args),
    }
}

impl InputArgs {
    fn load(&self) -> Result<GroupDiagram, CliError> {
        match (&self.input, &self.catalog) {
            (Some(path), None) => {
                let src = fs::read_to_string(path)
                    .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))?;
                GroupDiagram::from_json_str(&src).map_err(|e| CliError::Parse(e.to_string()))
            }
            (None, Some(name)) => catalog::find(name).map(|e| e.diagram).ok_or_else(|| {
                CliError::Parse(format!(
                    "unknown catalog entry `{name}` (run `cohomog1 catalog` for the list)"
                ))
            }),
            _ => Err(CliError::Parse(
                "exactly one of --input or --catalog is required".into(),
            )),
        }
    }
}

fn report_error(e: ReportError) -> CliError {
    match e {
        ReportError::Invariant(inner) => CliError::Validation(inner.to_string()),
        ReportError::OddCase(inner) => match inner {
            OddCaseError::Inconsistent(_) | OddCaseError::WeylExceedsNormalizer { .. } => {
                CliError::Inconsistent(inner.to_string())
            }
            other => CliError::Validation(other.to_string()),
        },
    }
}

fn render_json(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON rendering");
    s.push('\n');
    s
}

fn report_command(args: ReportArgs) -> Result<CliOutput, CliError> {
    let diagram = args.input.load()?;
    let report = DiagramReport::build(&diagram).map_err(report_error)?;
    let stdout = match args.format {
        Format::Text => report.to_text(),
        Format::Json => render_json(&report.to_json()),
    };
    Ok(CliOutput {
        stdout,
        exit_code: if report.is_valid() { 0 } else { 2 },
    })
}

fn catalog_command(args: CatalogArgs) -> Result<CliOutput, CliError> {
    let entries = catalog::catalog();
    let stdout = match args.format {
        Format::Text => {
            let mut out = String::new();
            for e in &entries {
                let _ = writeln!(out, "{}", e.name);
                let _ = writeln!(out, "    {}", e.description);
            }
            out
        }
        Format::Json => {
            let list: Vec<Value> = entries
                .iter()
                .map(|e| {
                    json!({
                        "name": e.name,
                        "description": e.description,
                        "diagram": e.diagram.to_json_value(),
                    })
                })
                .collect();
            render_json(&json!({"schema": "1", "entries": list}))
        }
    };
    Ok(CliOutput::ok(stdout))
}

fn family_error(e: FamilyError) -> CliError {
    CliError::Validation(e.to_string())
}

fn poly_error(e: PolyError) -> CliError {
    CliError::Validation(e.to_string())
}

/// Display strings for the generators of an ideal or basis.
fn generator_strings(gens: &[crate::polyring::GradedPolynomial]) -> Vec<String> {
    gens.iter().map(|g| g.to_string()).collect()
}

enum SquareZero {
    Found(String),
    NoneExists,
    Inconclusive(String),
    Skipped(String),
}

fn square_zero_outcome(
    presentation: &IdealPresentation,
    order: MonomialOrder,
) -> Result<SquareZero, CliError> {
    match square_zero_degree2(presentation, order) {
        Ok(SquareZeroOutcome::Found { witness }) => Ok(SquareZero::Found(witness.to_string())),
        Ok(SquareZeroOutcome::NoneExists) => Ok(SquareZero::NoneExists),
        Err(PolyError::Inconclusive(msg)) => Ok(SquareZero::Inconclusive(msg)),
        Err(PolyError::NotFiniteDimensional) => Ok(SquareZero::Skipped(
            "the quotient is not finite-dimensional".into(),
        )),
        Err(other) => Err(poly_error(other)),
    }
}

fn graded_dimensions(gb: &GroebnerBasis, up_to: u32) -> Result<Vec<usize>, CliError> {
    (0..=up_to)
        .map(|d| {
            if d % 2 == 1 {
                Ok(0)
            } else {
                gb.graded_dimension(d).map_err(poly_error)
            }
        })
        .collect()
}

fn ring_command(args: RingArgs) -> Result<CliOutput, CliError> {
    let diagram = args.input.load()?;
    let presentations = build_torus_family_presentations(&diagram).map_err(family_error)?;
    let order = MonomialOrder::from(args.monomial_order);
    let family = diagram.family.as_ref().expect("family data was just used");

    let equivariant_gb = presentations
        .equivariant
        .groebner(order)
        .map_err(poly_error)?;
    let ordinary_gb = presentations.ordinary.groebner(order).map_err(poly_error)?;
    let hilbert = crate::polyring::hilbert_series_quotient(&ordinary_gb).map_err(poly_error)?;
    let dims = graded_dimensions(&ordinary_gb, args.degree_bound)?;
    let square_zero = square_zero_outcome(&presentations.ordinary, order)?;

    let vars = presentations.ordinary.vars();
    let stdout = match args.format {
        Format::Text => {
            let mut out = String::new();
            if let Some(name) = &diagram.name {
                let _ = writeln!(out, "diagram: {name}");
            }
            let _ = writeln!(
                out,
                "torus family: k = {}, alpha = {:?}",
                family.k, family.alpha
            );
            let names: Vec<&str> = (0..vars.len()).map(|i| vars.name(i)).collect();
            let _ = writeln!(
                out,
                "variables (cohomological degree 2): {}",
                names.join(", ")
            );
            let _ = writeln!(out, "monomial order: {order}");
            let _ = writeln!(out, "equivariant ideal generators:");
            for g in presentations.equivariant.generators() {
                let _ = writeln!(out, "  {g}");
            }
            let _ = writeln!(out, "equivariant Groebner basis:");
            for g in equivariant_gb.generators() {
                let _ = writeln!(out, "  {g}");
            }
            let _ = writeln!(out, "ordinary ideal generators:");
            for g in presentations.ordinary.generators() {
                let _ = writeln!(out, "  {g}");
            }
            let _ = writeln!(out, "ordinary Groebner basis:");
            for g in ordinary_gb.generators() {
                let _ = writeln!(out, "  {g}");
            }
            match hilbert.as_polynomial() {
                Some(p) => {
                    let _ = writeln!(out, "ordinary Hilbert series: {p}");
                }
                None => {
                    let _ = writeln!(out, "ordinary Hilbert series: {hilbert}");
                }
            }
            let dim_list: Vec<String> = dims.iter().map(|d| d.to_string()).collect();
            let _ = writeln!(
                out,
                "graded dimensions (degrees 0..{}): {}",
                args.degree_bound,
                dim_list.join(", ")
            );
            match &square_zero {
                SquareZero::Found(w) => {
                    let _ = writeln!(out, "square-zero class in degree 2: found, witness {w}");
                }
                SquareZero::NoneExists => {
                    let _ = writeln!(out, "square-zero class in degree 2: none exists");
                }
                SquareZero::Inconclusive(msg) => {
                    let _ = writeln!(out, "square-zero class in degree 2: inconclusive ({msg})");
                }
                SquareZero::Skipped(msg) => {
                    let _ = writeln!(out, "square-zero class in degree 2: skipped ({msg})");
                }
            }
            out
        }
        Format::Json => {
            let variables: Vec<Value> = (0..vars.len())
                .map(|i| json!({"name": vars.name(i), "degree": vars.degree(i)}))
                .collect();
            let (status, witness, detail) = match &square_zero {
                SquareZero::Found(w) => ("found", Some(w.clone()), None),
                SquareZero::NoneExists => ("none", None, None),
                SquareZero::Inconclusive(msg) => ("inconclusive", None, Some(msg.clone())),
                SquareZero::Skipped(msg) => ("skipped", None, Some(msg.clone())),
            };
            render_json(&json!({
                "schema": "1",
                "name": diagram.name,
                "family": family,
                "monomial_order": order.to_string(),
                "variables": variables,
                "equivariant": {
                    "generators": generator_strings(presentations.equivariant.generators()),
                    "groebner_basis": generator_strings(equivariant_gb.generators()),
                },
                "ordinary": {
                    "generators": generator_strings(presentations.ordinary.generators()),
                    "groebner_basis": generator_strings(ordinary_gb.generators()),
                    "hilbert_series": hilbert,
                    "graded_dimensions": dims,
                },
                "square_zero_degree2": {
                    "status": status,
                    "witness": witness,
                    "detail": detail,
                },
            }))
        }
    };
    Ok(CliOutput::ok(stdout))
}

fn taylor_strings(series: &PoincareSeries, up_to: u32) -> Vec<String> {
    series
        .taylor_coefficients(up_to as usize)
        .iter()
        .map(BigInt::to_string)
        .collect()
}

fn series_command(args: SeriesArgs) -> Result<CliOutput, CliError> {
    let diagram = args.input.load()?;
    let validation = diagram.validate();
    if !validation.passed() {
        let first = &validation.violations[0];
        return Err(CliError::Validation(format!(
            "diagram failed validation ({}: {}); run `report` for details",
            first.rule, first.message
        )));
    }

    let classifying = PoincareSeries::classifying(&diagram.g);
    let mut notes: Vec<String> = Vec::new();
    let equivariant = match invariants::equivariant_hilbert_series(&diagram) {
        Ok(s) => Some(s),
        Err(InvariantError::EqualIsotropyRanks) => {
            notes.push(
                "equivariant series omitted: the isotropy ranks are all equal, the two-fibration \
                 series formula does not apply"
                    .into(),
            );
            None
        }
        Err(InvariantError::CircleOrbitSpace) => {
            notes.push("equivariant series omitted: circle orbit space".into());
            None
        }
        Err(e) => return Err(CliError::Validation(e.to_string())),
    };
    let poincare = match invariants::poincare_polynomial(&diagram) {
        Ok(p) => Some(p),
        Err(InvariantError::OddDimensional) => {
            notes.push("Poincare polynomial omitted: M is odd-dimensional".into());
            None
        }
        Err(InvariantError::NotFormal) => {
            notes
                .push("Poincare polynomial omitted: the action is not equivariantly formal".into());
            None
        }
        Err(InvariantError::EqualIsotropyRanks) | Err(InvariantError::CircleOrbitSpace) => None,
        Err(e) => return Err(CliError::Validation(e.to_string())),
    };

    let up_to = args.degree_bound;
    let stdout = match args.format {
        Format::Text => {
            let mut out = String::new();
            if let Some(name) = &diagram.name {
                let _ = writeln!(out, "diagram: {name}");
            }
            let _ = writeln!(
                out,
                "classifying series of G = {}: {classifying}",
                diagram.g
            );
            let taylor = taylor_strings(&classifying, up_to);
            let _ = writeln!(
                out,
                "  taylor through degree {up_to}: {}",
                taylor.join(", ")
            );
            if let Some(series) = &equivariant {
                let _ = writeln!(out, "equivariant Hilbert series: {series}");
                let taylor = taylor_strings(series, up_to);
                let _ = writeln!(
                    out,
                    "  taylor through degree {up_to}: {}",
                    taylor.join(", ")
                );
            }
            if let Some(p) = &poincare {
                let _ = writeln!(out, "P(M) = {p}");
            }
            for n in &notes {
                let _ = writeln!(out, "note: {n}");
            }
            out
        }
        Format::Json => render_json(&json!({
            "schema": "1",
            "name": diagram.name,
            "degree_bound": up_to,
            "classifying_g": {
                "series": classifying,
                "taylor": taylor_strings(&classifying, up_to),
            },
            "equivariant": equivariant.as_ref().map(|s| json!({
                "series": s,
                "taylor": taylor_strings(s, up_to),
            })),
            "poincare_polynomial": poincare.as_ref().map(coeff_strings),
            "notes": notes,
        })),
    };
    Ok(CliOutput::ok(stdout))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(args).expect("argv parses")
    }

    #[test]
    fn report_text_and_exit_codes() {
        let out = run(parse(&["cohomog1", "report", "--catalog", "N7I"])).unwrap();
        assert_eq!(out.exit_code, 0);
        assert!(out.stdout.contains("dim H*(M) = 4"), "{}", out.stdout);

        let err = run(parse(&["cohomog1", "report", "--catalog", "nope"])).unwrap_err();
        assert_eq!(err.exit_code(), 1);
    }

    #[test]
    fn catalog_lists_every_entry() {
        let out = run(parse(&["cohomog1", "catalog"])).unwrap();
        for e in catalog::catalog() {
            assert!(out.stdout.contains(e.name), "{}", out.stdout);
        }
        let json_out = run(parse(&["cohomog1", "catalog", "--format", "json"])).unwrap();
        let value: Value = serde_json::from_str(&json_out.stdout).unwrap();
        assert_eq!(value["entries"].as_array().unwrap().len(), 6);
    }

    #[test]
    fn ring_needs_family_data() {
        let err = run(parse(&["cohomog1", "ring", "--catalog", "N7G"])).unwrap_err();
        assert_eq!(err.exit_code(), 2);

        let out = run(parse(&["cohomog1", "ring", "--catalog", "u3-M2"])).unwrap();
        assert!(
            out.stdout
                .contains("square-zero class in degree 2: found, witness u"),
            "{}",
            out.stdout
        );
        assert!(
            out.stdout
                .contains("ordinary Hilbert series: 1 + 3t^2 + 4t^4 + 3t^6 + t^8"),
            "{}",
            out.stdout
        );
    }

    #[test]
    fn series_respects_degree_bound() {
        let out = run(parse(&[
            "cohomog1",
            "series",
            "--catalog",
            "circle-on-s2",
            "--degree-bound",
            "4",
            "--format",
            "json",
        ]))
        .unwrap();
        let value: Value = serde_json::from_str(&out.stdout).unwrap();
        let taylor = value["classifying_g"]["taylor"].as_array().unwrap();
        assert_eq!(taylor.len(), 5);
        assert_eq!(value["equivariant"]["taylor"][4], "2");
    }

    #[test]
    fn inconsistent_optional_inputs_exit_three() {
        let mut d = catalog::find("N7G").unwrap().diagram;
        d.weyl_order = Some(4);
        let dir = std::env::temp_dir().join("cohomog1-cli-test");
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("n7g-bad-weyl.json");
        fs::write(&path, d.to_json_value().to_string()).unwrap();
        let err = run(parse(&[
            "cohomog1",
            "report",
            "--input",
            path.to_str().unwrap(),
        ]))
        .unwrap_err();
        assert_eq!(err.exit_code(), 3);
    }
}
