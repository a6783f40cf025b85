//! Command-line front end. Results go to stdout (or `--out`) as JSON.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::axioms;
use crate::catalog::{self, CatalogError};
use crate::constructions::{self as cons, BuildParams, ConstructionError};
use crate::fields::{FieldError, FieldSpec};
use crate::gradings::{self, Grading, GradingError, GradingJson};
use crate::report;
use crate::search::{self, FineOutcome, MapMode, SearchBudget, SearchError};
use crate::superalgebra::SuperAlgebra;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Grading(#[from] GradingError),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// Field, usage and input problems exit with 2; everything else with 1.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Field(_) | CliError::Json(_) | CliError::Io(_) => 2,
            CliError::Catalog(CatalogError::FieldConditionUnmet { .. } | CatalogError::UnknownEntry(_)) => 2,
            CliError::Construction(
                ConstructionError::WrongCharacteristic { .. }
                | ConstructionError::NoCubeRoot(_)
                | ConstructionError::Unknown(_)
                | ConstructionError::Unsupported(_)
                | ConstructionError::ZeroAlpha,
            ) => 2,
            CliError::Search(SearchError::InfiniteField(_) | SearchError::DimensionTooLarge(_)) => 2,
            _ => 1,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "compsuper", version, about = "Composition superalgebras and their gradings over small fields")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the JSON result here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Node budget for searches.
    #[arg(long, global = true, default_value_t = SearchBudget::default().max_nodes)]
    pub budget: u64,
}

#[derive(Debug, Args, Clone)]
pub struct AlgebraArgs {
    /// Construction id, see `build --help`.
    #[arg(long)]
    pub construction: Option<String>,
    /// GF(2) unless given; catalog entries default to the smallest field they allow.
    #[arg(long)]
    pub field: Option<String>,
    #[arg(long)]
    pub alpha: Option<String>,
    #[arg(long)]
    pub lambda: Option<String>,
    #[arg(long)]
    pub variant: Option<String>,
}

#[derive(Debug, Args, Clone)]
pub struct GradedArgs {
    /// Catalog entry supplying both algebra and grading.
    #[arg(long)]
    pub catalog: Option<String>,
    /// Grading JSON file for the algebra given by `--construction`.
    #[arg(long)]
    pub grading: Option<PathBuf>,
    #[command(flatten)]
    pub algebra: AlgebraArgs,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the structure constants of a construction.
    ///
    /// Ids: split2 split4 split8 cd b12 b42 para petersson b12lambda okubo-nst okubo-omega p8.
    Build(AlgebraArgs),
    /// Run the axiom checks on a construction.
    Check(AlgebraArgs),
    /// List or verify catalog entries.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Universal grading group of a grading.
    UniversalGroup(GradedArgs),
    /// Search for an equivalence or isomorphism between two catalog gradings on the same algebra.
    Equiv {
        left: String,
        right: String,
        #[arg(long)]
        field: Option<String>,
        /// Require degrees to match.
        #[arg(long)]
        iso: bool,
    },
    /// Enumerate automorphisms, optionally preserving the components of a grading.
    Autos(GradedArgs),
    /// Enumerate every grading of an algebra of dimension at most 4.
    Enumerate(AlgebraArgs),
    /// Look for a refinement of a grading.
    Fine(GradedArgs),
    /// Run the acceptance suite.
    Report {
        /// Only these criteria (1 to 10).
        #[arg(long = "criterion")]
        criteria: Vec<u8>,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    List,
    Verify {
        /// Entry id or `all`.
        #[arg(default_value = "all")]
        id: String,
        /// Defaults to the smallest field each entry allows.
        #[arg(long)]
        field: Option<String>,
    },
    /// Isomorphism criteria over the test groups.
    Iso {
        #[arg(long, default_value = "GF(4)")]
        field: String,
    },
}

/// What a command produced: a JSON document, or a line of text, and whether everything passed.
pub struct Output {
    pub body: String,
    pub pass: bool,
}

fn json_out<T: Serialize>(v: &T, pass: bool) -> Result<Output> {
    Ok(Output { body: serde_json::to_string_pretty(v)?, pass })
}

fn parse_field(s: &str) -> Result<FieldSpec> {
    Ok(s.parse()?)
}

fn build_algebra(a: &AlgebraArgs) -> Result<SuperAlgebra> {
    let id = a.construction.as_deref().ok_or_else(|| CliError::Usage("--construction is required".into()))?;
    let field = parse_field(a.field.as_deref().unwrap_or("GF(2)"))?;
    let params = BuildParams {
        alpha: a.alpha.as_deref().map(|s| field.parse_scalar(s)).transpose()?,
        lambda: a.lambda.as_deref().map(|s| field.parse_scalar(s)).transpose()?,
        variant: a.variant.clone(),
    };
    Ok(cons::build(id, field, &params)?)
}

fn graded(g: &GradedArgs) -> Result<(SuperAlgebra, Grading)> {
    match (&g.catalog, &g.grading) {
        (Some(id), None) => {
            let entry = catalog::lookup(id)?;
            let field = match &g.algebra.field {
                Some(s) => parse_field(s)?,
                None => entry.algebra.condition().default_field(),
            };
            Ok(catalog::build_entry(id, field)?)
        }
        (None, Some(path)) => {
            let alg = build_algebra(&g.algebra)?;
            let j: GradingJson = serde_json::from_str(&std::fs::read_to_string(path)?)?;
            let grading = Grading::from_json(&alg, &j)?;
            Ok((alg, grading))
        }
        (None, None) => Err(CliError::Usage("give --catalog or --grading".into())),
        (Some(_), Some(_)) => Err(CliError::Usage("--catalog and --grading are exclusive".into())),
    }
}

pub fn execute(cli: &Cli) -> Result<Output> {
    let budget = SearchBudget { max_nodes: cli.budget };
    match &cli.command {
        Command::Build(a) => {
            let alg = build_algebra(a)?;
            json_out(&alg.to_json(), true)
        }
        Command::Check(a) => {
            let alg = build_algebra(a)?;
            let mut reports = vec![axioms::check_composition_super(&alg)];
            if alg.unit().is_some() {
                reports.push(axioms::check_hurwitz(&alg));
            } else {
                reports.push(axioms::check_symmetric(&alg));
            }
            let pass = reports.iter().all(|r| r.pass);
            json_out(&json!({ "field": alg.field().to_string(), "dim": alg.dim(), "pass": pass, "axioms": reports }), pass)
        }
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                let mut body = String::new();
                for row in catalog::list() {
                    body.push_str(&format!("{:<22} {:<20} {:<8} {}\n", row.id, row.field_condition, row.claimed_group, row.description));
                }
                for item in &catalog::NOT_INSTANTIABLE {
                    body.push_str(&format!("{:<22} not instantiable: {}\n", item.id, item.description));
                }
                Ok(Output { body: body.trim_end().to_string(), pass: true })
            }
            CatalogAction::Verify { id, field } => {
                let field = field.as_deref().map(parse_field).transpose()?;
                let entries = if id == "all" { catalog::entries() } else { vec![catalog::lookup(id)?] };
                let mut reports = Vec::new();
                for e in &entries {
                    let f = field.unwrap_or_else(|| e.algebra.condition().default_field());
                    match catalog::verify_entry_data(e, f) {
                        Ok(r) => reports.push(serde_json::to_value(r)?),
                        // with `all`, entries the field cannot carry are reported and skipped
                        Err(CatalogError::FieldConditionUnmet { .. }) if id == "all" => {
                            reports.push(json!({ "id": e.id, "field": f.to_string(), "skipped": e.algebra.condition().to_string() }))
                        }
                        Err(err) => return Err(err.into()),
                    }
                }
                let pass = reports.iter().all(|r| r.get("pass").and_then(Value::as_bool).unwrap_or(true));
                json_out(&json!({ "pass": pass, "entries": reports, "not_instantiable": catalog::NOT_INSTANTIABLE }), pass)
            }
            CatalogAction::Iso { field } => {
                let rep = catalog::verify_iso_theorems(parse_field(field)?, budget)?;
                let pass = rep.pass;
                json_out(&rep, pass)
            }
        },
        Command::UniversalGroup(g) => {
            let (alg, grading) = graded(g)?;
            gradings::validate(&alg, &grading).map_err(|v| CliError::Grading(GradingError::Invalid(v.to_string())))?;
            Ok(Output { body: gradings::universal_group(&alg, &grading).group.to_string(), pass: true })
        }
        Command::Equiv { left, right, field, iso } => {
            let (l, r) = (catalog::lookup(left)?, catalog::lookup(right)?);
            if l.algebra != r.algebra {
                return Err(CliError::Usage(format!("{left} and {right} live on different algebras")));
            }
            let f = match field {
                Some(s) => parse_field(s)?,
                None => l.algebra.condition().default_field(),
            };
            let (built, gl) = catalog::build_entry_full(&l, f)?;
            let (_, gr) = catalog::build_entry_full(&r, f)?;
            let mode = if *iso { MapMode::Isomorphism } else { MapMode::Equivalence };
            let rep = search::find_graded_map(&built.algebra, &gl, &built.algebra, &gr, mode, budget)?;
            let map = rep.outcome.found().map(|m| {
                (0..built.algebra.dim())
                    .map(|i| format!("{} -> {}", built.algebra.names()[i], built.algebra.format(&m.image(i))))
                    .collect::<Vec<_>>()
            });
            let body = json!({ "left": left, "right": right, "field": f.to_string(), "mode": mode, "outcome": rep.outcome.label(), "nodes": rep.nodes, "map": map });
            json_out(&body, true)
        }
        Command::Autos(g) => {
            let (alg, grading) = if g.catalog.is_some() || g.grading.is_some() {
                let (a, gr) = graded(g)?;
                (a, Some(gr))
            } else {
                (build_algebra(&g.algebra)?, None)
            };
            let autos = search::enumerate_automorphisms(&alg, grading.as_ref(), budget)?;
            let maps: Vec<Vec<String>> = autos
                .iter()
                .map(|m| (0..alg.dim()).map(|i| format!("{} -> {}", alg.names()[i], alg.format(&m.image(i)))).collect())
                .collect();
            json_out(&json!({ "field": alg.field().to_string(), "count": autos.len(), "automorphisms": maps }), true)
        }
        Command::Enumerate(a) => {
            let alg = build_algebra(a)?;
            let en = search::enumerate_all_gradings(&alg)?;
            let gs: Vec<GradingJson> = en.gradings.iter().map(|g| g.to_json(&alg)).collect();
            json_out(&json!({ "field": alg.field().to_string(), "decompositions_tried": en.decompositions_tried, "gradings": gs }), true)
        }
        Command::Fine(g) => {
            let (alg, grading) = graded(g)?;
            let rep = search::fine_check(&alg, &grading, budget)?;
            let (fine, witness) = match &rep.outcome {
                FineOutcome::Fine => (true, None),
                FineOutcome::Refinable(w) => (false, Some(w.to_json(&alg))),
            };
            json_out(&json!({ "fine": fine, "splits_tried": rep.splits_tried, "search": "single and double component splits", "witness": witness }), true)
        }
        Command::Report { criteria } => {
            let rep = if criteria.is_empty() {
                report::run_all(budget)
            } else {
                if let Some(bad) = criteria.iter().find(|&&n| !(1..=10).contains(&n)) {
                    return Err(CliError::Usage(format!("no criterion {bad}")));
                }
                let cs: Vec<_> = criteria.iter().map(|&n| report::run_criterion(n, budget)).collect();
                let pass = cs.iter().all(|c| c.pass);
                report::AcceptanceReport { criteria: cs, pass }
            };
            let pass = rep.pass;
            json_out(&rep, pass)
        }
    }
}

/// Parse arguments, run, print, and return the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(&cli) {
        Ok(out) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, format!("{}\n", out.body)),
                None => {
                    use std::io::Write;
                    match writeln!(std::io::stdout(), "{}", out.body) {
                        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
                        other => other,
                    }
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return 2;
            }
            i32::from(!out.pass)
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
