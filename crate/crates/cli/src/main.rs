use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use jjrb_core::catalog::{self, verify::verify_paper, CatalogEntry};
use jjrb_core::cohomology::cohomology_rb;
use jjrb_core::report::{ClaimResult, Report, Status};
use jjrb_core::rota_baxter::variable_name;
use jjrb_core::{
    rb_constraint_system, AlgebraMorphism, CheckOutcome, Error, InstanceFile, JjAlgebra, Matrix, Rational, RbOperator,
    RbRepresentation, Representation,
};

#[derive(Parser)]
#[command(
    name = "jjrb",
    version,
    about = "Exact checks and constructions for Jacobi-Jordan algebras with Rota-Baxter operators"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check identities of an instance file.
    Check {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        what: What,
        /// Reject products listed with conflicting (i,j) and (j,i) results.
        #[arg(long)]
        strict: bool,
    },
    /// Build an induced structure and re-validate it.
    Construct {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        kind: Kind,
        /// Sign for the gl(V) module.
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        sign: Rational,
        /// Scaling factor for `scale`.
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        mu: Rational,
        /// Automorphism for `conjugate`, rows separated by `;`, entries by `,`.
        #[arg(long, allow_hyphen_values = true)]
        matrix: Option<String>,
        #[arg(long)]
        strict: bool,
    },
    /// Rota-Baxter cohomology in degree 0 or 1.
    Cohomology {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        strict: bool,
    },
    /// Print the polynomial system cut out by the operator identity.
    Constraints {
        #[arg(long)]
        input: PathBuf,
        /// Weight to use instead of the one in the file.
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<Rational>,
        #[arg(long)]
        strict: bool,
    },
    /// Built-in example algebras and operator families.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Run the full reproduction suite.
    VerifyPaper,
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Show {
        id: String,
    },
    /// Write the algebra of an entry as an instance file.
    Export {
        id: String,
    },
    /// Write an operator from a family, or a named instance, as an instance file.
    Instantiate {
        id: String,
        #[arg(long, conflicts_with = "instance")]
        family: Option<String>,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        params: String,
        #[arg(long)]
        instance: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Algebra,
    Rb,
    Rep,
    Rbrep,
    Paired,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Derived,
    Semidirect,
    Doubling,
    Quadruple,
    Dual,
    Hat,
    Bar,
    Tilde,
    Reflect,
    Scale,
    Conjugate,
}

/// Failure with its exit code: 1 for mathematical failures, 2 for input errors.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::AxiomViolation(_)
            | Error::NotRotaBaxter(_)
            | Error::NotAutomorphism(_)
            | Error::PrerequisiteFailed(_)
            | Error::HypothesisNotMet(_) => 1,
            _ => 2,
        };
        Failure(code, e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn load(path: &Path, strict: bool) -> Result<InstanceFile, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure(2, format!("cannot read {}: {e}", path.display())))?;
    InstanceFile::parse(&text, strict).map_err(|e| {
        let f = Failure::from(e);
        Failure(f.0, format!("{}: {}", path.display(), f.1))
    })
}

fn outcome_claim(claim: &str, paper_ref: &str, o: &CheckOutcome) -> ClaimResult {
    ClaimResult::check(claim, paper_ref, o.holds).with_witness(o.witness)
}

fn axiom_claims(a: &JjAlgebra) -> Vec<ClaimResult> {
    let r = a.check_axioms();
    vec![
        outcome_claim("commutativity", "x*y = y*x", &r.commutative),
        outcome_claim("Jacobi identity", "(x*y)*z + (y*z)*x + (z*x)*y = 0", &r.jacobi),
    ]
}

fn rb_claim(rb: &RbOperator) -> ClaimResult {
    outcome_claim("Rota-Baxter identity", "I(x)*I(y) = I(I(x)*y + x*I(y) + lambda x*y)", &rb.check())
}

fn rep_claim(rep: &Representation) -> ClaimResult {
    outcome_claim("representation identity", "rho(x*y) = -rho(x)rho(y) - rho(y)rho(x)", &rep.check())
}

fn compat_claim(rr: &RbRepresentation) -> ClaimResult {
    outcome_claim(
        "compatibility identity",
        "rho(Ix)T = T(rho(Ix) + rho(x)T + lambda rho(x))",
        &rr.check_compatibility(),
    )
}

fn rbrep_claims(rr: &RbRepresentation) -> Vec<ClaimResult> {
    let mut out = axiom_claims(rr.algebra());
    out.extend([rb_claim(rr.rb()), rep_claim(rr.rep()), compat_claim(rr)]);
    out
}

fn finish(report: Report) -> Outcome {
    let failed = report.any_failed();
    let text = report.to_json();
    if failed {
        Err(Failure(1, text))
    } else {
        Ok(text)
    }
}

fn instance_value(f: &InstanceFile) -> Value {
    serde_json::from_str(&f.to_json()).expect("instance JSON")
}

/// The file's Rota-Baxter representation, or the adjoint one with `T = I` when the file has no
/// representation section.
fn rb_rep(f: &InstanceFile) -> Result<RbRepresentation, Failure> {
    if f.representation.is_some() {
        Ok(f.rb_representation()?)
    } else {
        Ok(RbRepresentation::adjoint(&f.rb()?)?)
    }
}

fn cmd_check(path: &Path, what: What, strict: bool) -> Outcome {
    let f = load(path, strict)?;
    let mut report = Report::new("check", Some(path.display().to_string()));
    let axioms = axiom_claims(&f.algebra);
    let axioms_hold = axioms.iter().all(|c| c.status == Status::Pass);
    report.results.extend(axioms);
    match what {
        What::Algebra => {}
        What::Rb => report.push(rb_claim(&f.rb()?)),
        What::Rep => report.push(rep_claim(f.representation()?)),
        What::Rbrep => {
            let rr = f.rb_representation()?;
            report.results.extend([rb_claim(rr.rb()), rep_claim(rr.rep()), compat_claim(&rr)]);
        }
        What::Paired => {
            let rr = f.rb_representation()?;
            let rep_ok = rr.rep().check();
            report.push(rep_claim(rr.rep()));
            if axioms_hold && rep_ok.holds {
                let p = rr.check_paired()?;
                report.push(ClaimResult::check(
                    "paired",
                    "operator and compatibility identities via the quadruple algebra",
                    p.paired,
                ));
                report.push(ClaimResult::check(
                    "graph is a subalgebra",
                    "graph of (I, T) in the quadruple algebra",
                    p.graph_subalgebra,
                ));
            }
        }
    }
    finish(report)
}

fn parse_matrix(s: &str) -> Result<Matrix, Failure> {
    let rows = s
        .split(';')
        .map(|r| r.split(',').map(|x| x.trim().parse::<Rational>()).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_rows(rows)?)
}

struct ConstructArgs {
    kind: Kind,
    sign: Rational,
    mu: Rational,
    matrix: Option<String>,
}

fn cmd_construct(path: &Path, args: ConstructArgs, strict: bool) -> Outcome {
    let f = load(path, strict)?;
    let (claims, built) = match args.kind {
        Kind::Derived => {
            let d = f.rb()?.derived_rb()?;
            let mut c = axiom_claims(d.algebra());
            c.push(rb_claim(&d));
            (c, InstanceFile::from_rb(&d))
        }
        Kind::Semidirect => {
            let s = rb_rep(&f)?.semidirect_product();
            let mut c = axiom_claims(s.algebra());
            c.push(rb_claim(&s));
            (c, InstanceFile::from_rb(&s))
        }
        Kind::Doubling => {
            let w = f.weight()?;
            let rep = match &f.representation {
                Some(r) => r.clone(),
                None => Representation::adjoint(&f.algebra)?,
            };
            let d = rep.doubled(w)?;
            let mut c = axiom_claims(d.algebra());
            c.push(rep_claim(&d));
            let mut out = InstanceFile::from_rep(&d);
            out.weight = Some(w.clone());
            (c, out)
        }
        Kind::Quadruple => {
            let rep = match &f.representation {
                Some(r) => r.clone(),
                None => Representation::adjoint(&f.algebra)?,
            };
            let q = jjrb_core::rep::quadruple_semidirect(&rep, f.weight()?)?;
            (axiom_claims(&q), InstanceFile::from_algebra(q))
        }
        Kind::Dual | Kind::Hat | Kind::Bar | Kind::Tilde | Kind::Reflect => {
            let rr = rb_rep(&f)?;
            let out = match args.kind {
                Kind::Dual => rr.dual()?,
                Kind::Hat => rr.hat_gl(&args.sign),
                Kind::Bar => rr.bar()?,
                Kind::Tilde => rr.tilde()?,
                _ => rr.reflect()?,
            };
            (rbrep_claims(&out), InstanceFile::from_rb_rep(&out))
        }
        Kind::Scale => {
            let s = f.rb()?.scale(&args.mu)?;
            let mut c = axiom_claims(s.algebra());
            c.push(rb_claim(&s));
            (c, InstanceFile::from_rb(&s))
        }
        Kind::Conjugate => {
            let text = args.matrix.ok_or_else(|| Failure(2, "conjugate needs --matrix".into()))?;
            let psi = AlgebraMorphism::endomorphism(f.algebra.clone(), parse_matrix(&text)?)?;
            let s = f.rb()?.conjugate(&psi)?;
            let mut c = axiom_claims(s.algebra());
            c.push(rb_claim(&s));
            (c, InstanceFile::from_rb(&s))
        }
    };
    let mut report = Report::new("construct", Some(path.display().to_string()));
    report.results = claims;
    report.data = Some(json!({ "instance": instance_value(&built) }));
    finish(report)
}

fn cmd_cohomology(path: &Path, degree: usize, strict: bool) -> Outcome {
    let f = load(path, strict)?;
    let rr = rb_rep(&f)?;
    let mut report = Report::new("cohomology", Some(path.display().to_string()));
    report.results = rbrep_claims(&rr);
    if report.any_failed() {
        return finish(report);
    }
    let c = cohomology_rb(&rr, degree)?;
    report.data = Some(serde_json::to_value(&c).expect("cohomology report serializes"));
    finish(report)
}

fn cmd_constraints(path: &Path, weight: Option<Rational>, strict: bool) -> Outcome {
    let f = load(path, strict)?;
    let w = match weight {
        Some(w) => w,
        None => f.weight()?.clone(),
    };
    let sys = rb_constraint_system(&f.algebra, &w)?;
    Ok(sys.to_string())
}

fn describe(e: &CatalogEntry) -> Value {
    let n = e.algebra.dim();
    let families: Vec<Value> = e
        .families
        .iter()
        .map(|fam| {
            let names = &fam.params.0;
            json!({
                "name": fam.name,
                "params": names,
                "weight": fam.weight.to_string_with(names),
                "operator": (0..n).map(|r| (0..n).map(|c| fam.entries[r * n + c].to_string_with(names)).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "excluded": fam.excluded,
                "note": fam.note,
            })
        })
        .collect();
    let displayed = e.displayed_system.as_ref().map(|d| {
        let name = |v: usize| if v == n * n { "lambda".to_string() } else { variable_name(n, v) };
        json!({
            "weight": d.fixed_weight.as_ref().map(|w| w.to_string()),
            "polynomials": d.polys.iter().map(|p| p.to_string_with(name)).collect::<Vec<_>>(),
        })
    });
    let instances: Vec<Value> = e
        .instances
        .iter()
        .map(|i| {
            json!({
                "name": i.name,
                "family": i.family,
                "params": i.values(),
                "expected": {
                    "dim_cocycles": i.expected.dim_cocycles,
                    "dim_coboundaries": i.expected.dim_coboundaries,
                    "dim_cohomology": i.expected.dim_cohomology,
                },
            })
        })
        .collect();
    json!({
        "id": e.id,
        "summary": e.summary,
        "algebra": instance_value(&InstanceFile::from_algebra(e.algebra.clone()))["algebra"],
        "families": families,
        "displayed_system": displayed,
        "instances": instances,
    })
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON value");
    s.push('\n');
    s
}

fn cmd_catalog(action: CatalogAction) -> Outcome {
    match action {
        CatalogAction::List => Ok(catalog::catalog().iter().map(|e| format!("{}\t{}\n", e.id, e.summary)).collect()),
        CatalogAction::Show { id } => Ok(pretty(&describe(catalog::get(&id)?))),
        CatalogAction::Export { id } => Ok(InstanceFile::from_algebra(catalog::get(&id)?.algebra.clone()).to_json()),
        CatalogAction::Instantiate { id, family, params, instance } => {
            let rb = match (family, instance) {
                (Some(fam), None) => catalog::instantiate(&id, &fam, &catalog::parse_params(&params)?)?,
                (None, Some(name)) => {
                    let entry = catalog::get(&id)?;
                    let inst = entry
                        .instances
                        .iter()
                        .find(|i| i.name == name)
                        .ok_or_else(|| Failure(2, format!("catalog entry `{id}` has no instance `{name}`")))?;
                    catalog::instantiate_named(inst, &id)?
                }
                _ => return Err(Failure(2, "instantiate needs --family or --instance".into())),
            };
            Ok(InstanceFile::from_rb(&rb).to_json())
        }
    }
}

fn configure_threads() -> Result<(), Failure> {
    if let Ok(v) = std::env::var("JJRB_THREADS") {
        let n: usize = v
            .trim()
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| Failure(2, format!("JJRB_THREADS must be a positive integer, got `{v}`")))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure(2, format!("cannot configure threads: {e}")))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    configure_threads()?;
    match cli.command {
        Command::Check { input, what, strict } => cmd_check(&input, what, strict),
        Command::Construct { input, kind, sign, mu, matrix, strict } => {
            cmd_construct(&input, ConstructArgs { kind, sign, mu, matrix }, strict)
        }
        Command::Cohomology { input, degree, strict } => cmd_cohomology(&input, degree, strict),
        Command::Constraints { input, weight, strict } => cmd_constraints(&input, weight, strict),
        Command::Catalog { action } => cmd_catalog(action),
        Command::VerifyPaper => finish(verify_paper()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        // A failed report still goes to stdout; plain errors go to stderr.
        Err(Failure(1, out)) if out.starts_with('{') => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
