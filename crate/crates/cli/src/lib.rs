//! Command-line front end for `pezzo-core`.
//!
//! Every subcommand prints an aligned text report by default and a JSON
//! document (carrying `"format": 1`) with `--json`. Exit codes: 0 on
//! success, 1 on invalid input or infeasible parameters, 2 when an internal
//! invariant or a `verify` check fails.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pezzo_core::curves::{
    brute_force_minus_one_classes, closed_form_minus_one_classes, curves_meeting_q, CurveFamily,
    FamilyLabel, SearchBox,
};
use pezzo_core::galois::{compute_ell, validate_action};
use pezzo_core::lattice::{k_squared_singular, lattice_signature, ModelDocument};
use pezzo_core::orbifold::{embedding_descriptor, rr_table};
use pezzo_core::poly::{factor, parse_coeff_list, rational_roots, BinaryForm};
use pezzo_core::sections::{ci_split_polynomial, line_census, RootDescriptor};
use pezzo_core::verdict::classify;
use pezzo_core::{DivisorClass, Error, ModelKind, SurfaceModel, TriState};
use serde_json::{json, Value};

pub mod instance;
mod table;
pub mod verify;

use instance::InstanceFile;
use table::{vec_str, Table};

pub const FORMAT_VERSION: u64 = 1;

#[derive(Parser, Debug)]
#[command(name = "pezzo", version, about = "Picard lattices, (-1)-curves and rationality verdicts for forms of S_m^n")]
pub struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Gram matrix, anticanonical class and lattice invariants.
    Lattice(LatticeArgs),
    /// (-1)-curve classes.
    Curves(CurvesArgs),
    /// Anti-plurigenera and the weighted embedding.
    Rr(RrArgs),
    /// Compute ell_S for an instance file.
    Ell(EllArgs),
    /// Rationality and cylindricity verdict.
    Classify(ClassifyArgs),
    /// Hyperplane-section analysis of explicit forms.
    Sections(SectionsArgs),
    /// Run the reproduction battery.
    Verify,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum KindArg {
    Hirzebruch,
    Plane,
}

impl From<KindArg> for ModelKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Hirzebruch => ModelKind::Hirzebruch,
            KindArg::Plane => ModelKind::Plane,
        }
    }
}

#[derive(Args, Debug)]
struct ModelArgs {
    #[arg(long)]
    m: i64,
    #[arg(long)]
    n: i64,
    #[arg(long, value_enum, default_value = "hirzebruch")]
    kind: KindArg,
}

impl ModelArgs {
    fn build(&self) -> pezzo_core::Result<SurfaceModel> {
        SurfaceModel::build(self.m, self.n, self.kind.into())
    }
}

#[derive(Args, Debug)]
struct LatticeArgs {
    #[command(flatten)]
    model: Option<ModelArgs>,
    /// Model document `{"m", "n", "kind", "classes"}`; prints the intersection matrix of the classes.
    #[arg(long, conflicts_with_all = ["m", "n", "kind"])]
    document: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CurvesArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Only classes with D.Q >= 1 (certified search).
    #[arg(long)]
    meeting_q: bool,
    /// Search the symmetric box of this radius instead of the default.
    #[arg(long)]
    bound: Option<i64>,
}

#[derive(Args, Debug)]
struct RrArgs {
    #[arg(long)]
    m: i64,
    #[arg(long)]
    n: Option<i64>,
    #[arg(long, default_value_t = 6)]
    max_j: i64,
    /// Print the weighted embedding of S_m^{m+4}.
    #[arg(long)]
    embedding: bool,
}

#[derive(Args, Debug)]
struct EllArgs {
    #[arg(long)]
    instance: PathBuf,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum QPointArg {
    Yes,
    No,
    Unknown,
}

impl From<QPointArg> for TriState {
    fn from(q: QPointArg) -> Self {
        match q {
            QPointArg::Yes => TriState::Yes,
            QPointArg::No => TriState::No,
            QPointArg::Unknown => TriState::Open,
        }
    }
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    #[arg(long)]
    m: i64,
    #[arg(long)]
    n: i64,
    #[arg(long)]
    ell: Option<i64>,
    #[arg(long, value_enum, default_value = "unknown")]
    q_point: QPointArg,
}

#[derive(Args, Debug)]
struct SectionsArgs {
    #[command(subcommand)]
    command: SectionsCommand,
}

#[derive(Subcommand, Debug)]
enum SectionsCommand {
    /// Splitting polynomial of the complete intersection with f = g = 0.
    Ci {
        /// Coefficients of h, from x^{2m} down to y^{2m}.
        #[arg(long, allow_hyphen_values = true)]
        h: String,
    },
    /// Line census of w^2 = A(x, y) + B(x, y) z^2.
    Lines {
        /// Coefficients of the quartic A, from x^4 down to y^4.
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        /// Coefficients of the quadric B, from x^2 down to y^2.
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
}

/// Outcome of a subcommand: text and JSON renderings, plus an exit code.
struct Report {
    text: String,
    json: Value,
    code: i32,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report { text, json, code: 0 }
    }
}

fn with_format(mut v: Value) -> Value {
    if let Value::Object(map) = &mut v {
        map.insert("format".to_string(), json!(FORMAT_VERSION));
    }
    v
}

/// Parses `args` (including the program name) and runs the subcommand,
/// writing the report to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    let json_mode = cli.json;
    match dispatch(cli.command) {
        Ok(report) => {
            let written = if json_mode {
                let body = serde_json::to_string_pretty(&with_format(report.json)).expect("serializable");
                writeln!(out, "{body}")
            } else {
                write!(out, "{}", report.text)
            };
            if written.is_err() {
                return 1;
            }
            report.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cmd: Command) -> pezzo_core::Result<Report> {
    match cmd {
        Command::Lattice(a) => lattice(a),
        Command::Curves(a) => curves(a),
        Command::Rr(a) => rr(a),
        Command::Ell(a) => ell(a),
        Command::Classify(a) => classify_cmd(a),
        Command::Sections(a) => sections(a),
        Command::Verify => Ok(verify_cmd()),
    }
}

fn read_file(path: &PathBuf) -> pezzo_core::Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Parameter(format!("cannot read {}: {e}", path.display())))
}

fn lattice(args: LatticeArgs) -> pezzo_core::Result<Report> {
    if let Some(path) = &args.document {
        let doc: ModelDocument = serde_json::from_str(&read_file(path)?)
            .map_err(|e| Error::Parameter(format!("model document: {e}")))?;
        let (model, classes) = doc.load()?;
        return class_matrix(&model, &classes);
    }
    let model = args
        .model
        .as_ref()
        .ok_or_else(|| Error::Parameter("either --m/--n or --document is required".to_string()))?
        .build()?;
    let k = model.anticanonical();
    let k2 = model.self_intersection(k)?;
    let (pos, neg) = lattice_signature(&model);
    let ks = k_squared_singular(model.m(), model.n())?;

    let mut text = format!("model {}\nbasis ({})\n\n", model.tag(), model.basis_names().join(", "));
    let mut t = Table::new(std::iter::once(String::new()).chain(model.basis_names().iter().cloned()));
    for (name, row) in model.basis_names().iter().zip(model.gram()) {
        t.row(std::iter::once(name.clone()).chain(row.iter().map(|x| x.to_string())));
    }
    text.push_str(&t.render());
    text.push_str(&format!(
        "\n-K = {}\n(-K)^2 = {k2}\n(-K_S)^2 = {ks}\ndeterminant = {}\nsignature = ({pos}, {neg})\n\n",
        vec_str(k.coeffs()),
        model.determinant()
    ));
    let mut d = Table::new(["class", "coefficients"]);
    for (name, c) in model.distinguished() {
        d.row([name.clone(), vec_str(c.coeffs())]);
    }
    text.push_str(&d.render());

    let json = json!({
        "m": model.m(),
        "n": model.n(),
        "kind": model.kind(),
        "basis": model.basis_names(),
        "gram": model.gram(),
        "anticanonical": k.coeffs(),
        "k_squared": k2,
        "k_squared_singular": ks.to_string(),
        "determinant": model.determinant(),
        "signature": [pos, neg],
        "distinguished": model
            .distinguished()
            .iter()
            .map(|(name, c)| json!({"name": name, "coeffs": c.coeffs()}))
            .collect::<Vec<_>>(),
    });
    Ok(Report::ok(text, json))
}

fn class_matrix(model: &SurfaceModel, classes: &[DivisorClass]) -> pezzo_core::Result<Report> {
    let q = model.q();
    let k = model.anticanonical();
    let mut matrix = Vec::new();
    let mut rows = Vec::new();
    for a in classes {
        let row = classes
            .iter()
            .map(|b| model.intersect(a, b))
            .collect::<pezzo_core::Result<Vec<_>>>()?;
        rows.push(json!({
            "coeffs": a.coeffs(),
            "self_intersection": model.self_intersection(a)?,
            "degree": model.intersect(a, k)?,
            "dot_q": model.intersect(a, &q)?,
        }));
        matrix.push(row);
    }
    let mut t = Table::new(
        ["#", "class", "D^2", "D.(-K)", "D.Q"]
            .into_iter()
            .map(String::from)
            .chain((1..=classes.len()).map(|i| i.to_string())),
    );
    for (i, (a, row)) in classes.iter().zip(&matrix).enumerate() {
        t.row(
            [
                (i + 1).to_string(),
                vec_str(a.coeffs()),
                model.self_intersection(a)?.to_string(),
                model.intersect(a, k)?.to_string(),
                model.intersect(a, &q)?.to_string(),
            ]
            .into_iter()
            .chain(row.iter().map(|x| x.to_string())),
        );
    }
    let text = format!("model {}\n\n{}", model.tag(), t.render());
    let json = json!({
        "m": model.m(),
        "n": model.n(),
        "kind": model.kind(),
        "classes": rows,
        "intersections": matrix,
    });
    Ok(Report::ok(text, json))
}

fn label_name(label: FamilyLabel) -> &'static str {
    match label {
        FamilyLabel::Exceptional => "exceptional",
        FamilyLabel::FiberResidual => "fiber_residual",
        FamilyLabel::QSection => "q_section",
        FamilyLabel::DeltaClass => "delta_class",
        FamilyLabel::PlaneDegreeD => "plane_degree_d",
        FamilyLabel::E0 => "e0",
    }
}

fn curves(args: CurvesArgs) -> pezzo_core::Result<Report> {
    let model = args.model.build()?;
    let search = match args.bound {
        Some(b) => SearchBox::with_bound(&model, b)?,
        None => SearchBox::default_for(&model),
    };
    // (label, degree, classes)
    let families: Vec<(String, Option<i64>, Vec<DivisorClass>)> = if args.meeting_q {
        vec![("meeting_q".to_string(), None, curves_meeting_q(&model, &search)?)]
    } else if args.bound.is_none() && closed_form_minus_one_classes(&model).is_ok() {
        closed_form_minus_one_classes(&model)?
            .into_iter()
            .filter(|f: &CurveFamily| !f.members.is_empty())
            .map(|f| (label_name(f.label).to_string(), f.degree, f.members))
            .collect()
    } else {
        vec![("search".to_string(), None, brute_force_minus_one_classes(&model, &search)?)]
    };

    let q = model.q();
    let mut t = Table::new(["family", "class", "D.Q"]);
    let mut total = 0;
    for (label, degree, classes) in &families {
        let name = match degree {
            Some(d) => format!("{label}(d={d})"),
            None => label.clone(),
        };
        for c in classes {
            t.row([name.clone(), vec_str(c.coeffs()), model.intersect(c, &q)?.to_string()]);
            total += 1;
        }
    }
    let text = format!(
        "model {}\nbasis ({})\n{total} classes\n\n{}",
        model.tag(),
        model.basis_names().join(", "),
        t.render()
    );
    let json = json!({
        "m": model.m(),
        "n": model.n(),
        "kind": model.kind(),
        "total": total,
        "families": families
            .iter()
            .map(|(label, degree, classes)| {
                let mut v = json!({
                    "label": label,
                    "classes": classes.iter().map(|c| c.coeffs().to_vec()).collect::<Vec<_>>(),
                });
                if let Some(d) = degree {
                    v["degree"] = json!(d);
                }
                v
            })
            .collect::<Vec<_>>(),
    });
    Ok(Report::ok(text, json))
}

fn rr(args: RrArgs) -> pezzo_core::Result<Report> {
    let n = args.n.unwrap_or(args.m + 4);
    let rows = rr_table(args.m, n, args.max_j)?;
    let mut t = Table::new(["j", "t", "c_p", "h0(-jK)"]);
    for r in &rows {
        t.row([r.j.to_string(), r.t.to_string(), r.correction.to_string(), r.h0.to_string()]);
    }
    let mut text = format!("S_{}^{}\n(-K_S)^2 = {}\n\n{}", args.m, n, k_squared_singular(args.m, n)?, t.render());
    let mut json = json!({
        "m": args.m,
        "n": n,
        "k_squared_singular": k_squared_singular(args.m, n)?.to_string(),
        "table": rows,
    });
    if args.embedding {
        let e = embedding_descriptor(args.m)?;
        text.push_str(&format!("\nembedding of S_{}^{}: {e}\n", args.m, args.m + 4));
        json["embedding"] = json!(e);
    }
    Ok(Report::ok(text, json))
}

fn ell(args: EllArgs) -> pezzo_core::Result<Report> {
    let inst = InstanceFile::parse(&read_file(&args.instance)?)?;
    let system = inst.system()?;
    let action = inst.action(system.len())?;
    let report = validate_action(&system, &action);
    if !report.is_valid() {
        return Err(Error::InvalidAction(report));
    }
    let result = compute_ell(&system, &action)?;
    let one_based = |v: &[usize]| v.iter().map(|i| i + 1).collect::<Vec<_>>();
    let witness = one_based(&result.witness);
    let orbits: Vec<Vec<usize>> = result.witness_orbits.iter().map(|o| one_based(o)).collect();
    let all_orbits: Vec<Vec<usize>> = action.orbits().iter().map(|o| one_based(o)).collect();

    let mut text = format!(
        "model {}\n{} curves, {} orbits\nell = {}\nwitness {:?}\nwitness orbits {:?}\n",
        system.model().tag(),
        system.len(),
        all_orbits.len(),
        result.ell,
        witness,
        orbits
    );
    let mut json = json!({
        "ell": result.ell,
        "witness": witness,
        "orbits": orbits,
        "curves": system.curves().iter().map(|c| c.coeffs().to_vec()).collect::<Vec<_>>(),
    });
    if let Some(q) = inst.q_point {
        let m = system.model().m();
        let n = system.model().n();
        let v = classify(m, n, Some(result.ell as i64), q.into())?;
        text.push_str(&format!(
            "rational = {}\ncylindrical = {}\ncitations {}\n",
            v.rational,
            v.cylindrical,
            v.citations.join(", ")
        ));
        json["verdict"] = json!(v);
    }
    Ok(Report::ok(text, json))
}

fn classify_cmd(args: ClassifyArgs) -> pezzo_core::Result<Report> {
    let v = classify(args.m, args.n, args.ell, args.q_point.into())?;
    let mut text = format!(
        "S_{}^{}{}\nrational     {}\ncylindrical  {}\n",
        args.m,
        args.n,
        args.ell.map(|l| format!(", ell = {l}")).unwrap_or_default(),
        v.rational,
        v.cylindrical
    );
    if !v.citations.is_empty() {
        text.push_str(&format!("citations    {}\n", v.citations.join(", ")));
    }
    for note in &v.notes {
        text.push_str(&format!("note: {note}\n"));
    }
    Ok(Report::ok(text, json!(v)))
}

fn binary_form(s: &str) -> pezzo_core::Result<BinaryForm> {
    BinaryForm::from_coeffs(parse_coeff_list(s)?)
}

fn sections(args: SectionsArgs) -> pezzo_core::Result<Report> {
    match args.command {
        SectionsCommand::Ci { h } => {
            let h = binary_form(&h)?;
            let p = ci_split_polynomial(&h)?;
            let roots = rational_roots(&p)?;
            let fac = factor(&p)?;
            let mut text = format!(
                "h = {h}\np(a) = {}\nrational roots: {}\nfactor degrees over Q: {:?}\n",
                p.display_in("a"),
                if roots.is_empty() {
                    "none".to_string()
                } else {
                    roots
                        .iter()
                        .map(|r| {
                            if r.multiplicity > 1 {
                                format!("{} (x{})", r.value, r.multiplicity)
                            } else {
                                r.value.to_string()
                            }
                        })
                        .collect::<Vec<_>>()
                        .join(", ")
                },
                fac.degrees()
            );
            if let Some(u) = &fac.unresolved {
                text.push_str(&format!(
                    "no factor found within method for degree {} part {}\n",
                    u.degree().unwrap_or(0),
                    u.display_in("a")
                ));
            }
            let json = json!({
                "h": h,
                "p": p,
                "p_display": p.display_in("a"),
                "rational_roots": roots,
                "factor_degrees": fac.degrees(),
                "unresolved_degree": fac.unresolved.as_ref().and_then(|u| u.degree()),
            });
            Ok(Report::ok(text, json))
        }
        SectionsCommand::Lines { a, b } => {
            let a = binary_form(&a)?;
            let b = binary_form(&b)?;
            let census = line_census(&a, &b)?;
            let mut t = Table::new(["root", "vanishing", "c", "lines", "rational pair"]);
            for sv in &census.split_values {
                let root = match &sv.root {
                    RootDescriptor::Rational { value } => value.to_string(),
                    RootDescriptor::Algebraic { polynomial, index, .. } => {
                        format!("root #{} of {polynomial}", index + 1)
                    }
                    RootDescriptor::Infinity => "x = 0".to_string(),
                };
                let pair = match sv.rational_line_pair {
                    Some(true) => "yes",
                    Some(false) => "no",
                    None => "n/a",
                };
                t.row([root, sv.vanishing.to_string(), sv.c.clone(), sv.shape.clone(), pair.to_string()]);
            }
            let text = format!(
                "w^2 = ({a}) + ({b}) z^2\n{} lines from {} split sections\n\n{}",
                census.total_lines,
                census.split_values.len(),
                t.render()
            );
            let json = json!({
                "a": a,
                "b": b,
                "total": census.total_lines,
                "includes_infinity_section": census.includes_infinity_section,
                "splits": census
                    .split_values
                    .iter()
                    .map(|sv| json!({
                        "root": sv.root,
                        "vanishing": sv.vanishing.to_string(),
                        "c": sv.c,
                        "shape": sv.shape,
                        "rational_pair": sv.rational_line_pair,
                    }))
                    .collect::<Vec<_>>(),
            });
            Ok(Report::ok(text, json))
        }
    }
}

fn verify_cmd() -> Report {
    let results = verify::run_battery();
    let first_failure = results.iter().find(|r| !r.passed);
    let mut t = Table::new(["#", "clause", "check", "status", "detail"]);
    for r in &results {
        t.row([
            r.id.to_string(),
            r.clause.to_string(),
            r.name.to_string(),
            if r.passed { "PASS" } else { "FAIL" }.to_string(),
            r.detail.clone(),
        ]);
    }
    let mut text = t.render();
    match first_failure {
        Some(f) => text.push_str(&format!("\nFAILED: first failing clause {} ({})\n", f.clause, f.name)),
        None => text.push_str(&format!("\nall {} checks passed\n", results.len())),
    }
    let json = json!({
        "passed": first_failure.is_none(),
        "first_failure": first_failure.map(|f| f.clause),
        "checks": results,
    });
    Report {
        text,
        json,
        code: if first_failure.is_some() { 2 } else { 0 },
    }
}
