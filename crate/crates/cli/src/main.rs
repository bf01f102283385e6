mod render;
mod verify;

use clap::{Parser, Subcommand, ValueEnum};
use magical::cayley::{cayley_domain, component_count, dimension_consistency, DimensionIdentity, GenusContext};
use magical::classify::{
    complex_type, enumerate_magical, magical_catalog, magical_criterion, weighted_dynkin_from_partition, DEFAULT_CAP,
};
use magical::matlie::{
    chevalley_algebra, classical_algebra, is_magical_oracle, triple_centralizer, triple_from_diagram,
    triple_from_partition, verify_structure, Classical, LieModel, Sl2Triple, StructureReport, DIAGRAM_RETRIES,
};
use magical::partitions::{complex_partition, OrbitTag};
use magical::rootsys::build_root_system;
use magical::sl2data::{check_record, magical_record, RecordReport};
use magical::{
    AlgebraType, CayleyDomainDescriptor, ComponentCount, DynkinLabels, Error, GroupForm, MagicalCaseId, MagicalRecord,
    Partition, RealFormId, Q,
};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::io::Write;
use std::process::ExitCode;
use verify::{Suite, VerifyPayload};

const SCHEMA_VERSION: &str = "1";

#[derive(Parser)]
#[command(name = "magical", version, about = "Magical sl2-triples: classification, oracle, records and rendering")]
struct Cli {
    /// Print a JSON envelope instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized normalizations in the oracle.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum TagArg {
    I,
    II,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Dot,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the magical nilpotent orbits of a real form.
    Classify {
        #[arg(long)]
        real_form: String,
        #[arg(long, env = "MAGICAL_CAP")]
        cap: Option<usize>,
    },
    /// Build a triple and test it with the bracket sweep.
    Oracle {
        /// `sl`, `so`, `sp` with `--n` and `--partition`, or a root system type with `--labels`.
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        labels: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        partition: Option<String>,
        /// Very even orbit in type D.
        #[arg(long, value_enum)]
        tag: Option<TagArg>,
    },
    /// Structural record and Cayley data of a magical case.
    Record {
        #[arg(long)]
        case: String,
        #[arg(long, default_value_t = 2)]
        genus: usize,
    },
    /// Draw a Dynkin diagram or a root poset.
    Render {
        #[arg(long, conflicts_with = "dynkin", required_unless_present = "dynkin")]
        poset: Option<String>,
        #[arg(long)]
        dynkin: Option<String>,
        #[arg(long)]
        labels: String,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Run the verification suites.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, env = "MAGICAL_CAP")]
        cap: Option<usize>,
    },
}

#[derive(Debug, Serialize, Deserialize)]
struct Envelope {
    command: Vec<String>,
    schema_version: String,
    payload: Value,
    diagnostics: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct ClassifiedOrbit {
    diagram: String,
    tag: Option<OrbitTag>,
    complex_partition: Option<String>,
    labels: Option<DynkinLabels>,
    criterion_value: Option<i64>,
    centralizer: String,
    case_id: Option<MagicalCaseId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct ClassifyPayload {
    real_form: String,
    name: String,
    cap: usize,
    /// `criterion` for classical forms, `catalog` for exceptional ones.
    source: String,
    orbits: Vec<ClassifiedOrbit>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct Witness {
    x: usize,
    y: usize,
    x_label: String,
    y_label: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct OraclePayload {
    algebra: String,
    dim: usize,
    orbit: String,
    labels: Option<DynkinLabels>,
    magical: bool,
    witness: Option<Witness>,
    pairs_checked: usize,
    fixed_dim: usize,
    centralizer_dim: usize,
    structure: Option<StructureReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct ComponentCounts {
    simply_connected: ComponentCount,
    adjoint: ComponentCount,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct RecordPayload {
    record: MagicalRecord,
    genus: usize,
    cayley_domain: CayleyDomainDescriptor,
    dimension_consistency: DimensionIdentity,
    checks: RecordReport,
    component_count: ComponentCounts,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct RenderPayload {
    kind: String,
    format: String,
    text: String,
}

struct Output {
    payload: Value,
    text: String,
    passed: bool,
    diagnostics: Vec<String>,
}

fn output<T: Serialize>(payload: &T, text: String, passed: bool) -> magical::Result<Output> {
    let payload = serde_json::to_value(payload).map_err(|e| Error::Internal(e.to_string()))?;
    Ok(Output { payload, text, passed, diagnostics: Vec::new() })
}

fn parse_real_form(s: &str) -> magical::Result<RealFormId> {
    match s.parse::<RealFormId>() {
        Ok(rf) => Ok(rf),
        Err(e) => match s.parse::<MagicalCaseId>() {
            Ok(id) => Ok(id.canonical_real_form()),
            Err(_) => Err(e),
        },
    }
}

fn classify(real_form: &str, cap: usize) -> magical::Result<Output> {
    let rf = parse_real_form(real_form)?;
    let mut orbits = Vec::new();
    let source;
    if rf.is_classical() {
        source = "criterion";
        let ty = complex_type(rf)?;
        for o in enumerate_magical(rf, cap)? {
            let r = magical_criterion(rf, &o.diagram)?;
            let part = complex_partition(rf, &o.diagram);
            let tag = if matches!(rf, RealFormId::SoStar(_)) && part.all_rows_even() {
                Some(if o.diagram.rows()[0].1 == magical::partitions::Sign::Plus { OrbitTag::I } else { OrbitTag::II })
            } else {
                o.tag
            };
            orbits.push(ClassifiedOrbit {
                diagram: o.diagram.to_string(),
                tag: o.tag,
                complex_partition: Some(part.to_string()),
                labels: weighted_dynkin_from_partition(ty, &part, tag).ok(),
                criterion_value: Some(r.criterion_value),
                centralizer: r.centralizer,
                case_id: None,
            });
        }
    } else {
        source = "catalog";
        for e in magical_catalog().into_iter().filter(|e| e.canonical_real_form == rf) {
            let rec = magical_record(e.case_id)?;
            orbits.push(ClassifiedOrbit {
                diagram: e.labels.to_string(),
                tag: None,
                complex_partition: None,
                labels: Some(e.labels),
                criterion_value: None,
                centralizer: rec.c_real.to_string(),
                case_id: Some(e.case_id),
            });
        }
    }
    let payload =
        ClassifyPayload { real_form: rf.to_string(), name: rf.math_name(), cap, source: source.into(), orbits };
    let mut text = format!("{} ({}): {} magical orbit(s)\n", payload.name, rf, payload.orbits.len());
    for o in &payload.orbits {
        let tag = o.tag.map_or(String::new(), |t| format!(" ({:?})", t));
        let value = o.criterion_value.map_or(String::new(), |v| format!("  value {}", v));
        let case = o.case_id.map_or(String::new(), |c| format!("  {}", c));
        text.push_str(&format!("  {}{}{}  c = {}{}\n", o.diagram, tag, value, o.centralizer, case));
    }
    output(&payload, text, true)
}

fn classical_kind(s: &str) -> Option<Classical> {
    match s.to_ascii_lowercase().as_str() {
        "sl" => Some(Classical::Sl),
        "so" => Some(Classical::So),
        "sp" => Some(Classical::Sp),
        _ => None,
    }
}

fn build_triple(
    ty: &str,
    labels: Option<&str>,
    n: Option<usize>,
    partition: Option<&str>,
    tag: Option<TagArg>,
    seed: u64,
) -> magical::Result<(LieModel, Sl2Triple<Q>, String, Option<DynkinLabels>)> {
    let tag = tag.map(|t| match t {
        TagArg::I => OrbitTag::I,
        TagArg::II => OrbitTag::II,
    });
    if let Some(kind) = classical_kind(ty) {
        let n = n.ok_or_else(|| Error::InvalidArgument("--n is required for matrix models".into()))?;
        let p: Partition = partition
            .ok_or_else(|| Error::InvalidArgument("--partition is required for matrix models".into()))?
            .parse()?;
        let model = classical_algebra(kind, n)?;
        let t = triple_from_partition(&model, &p, tag)?;
        let name = match tag {
            Some(t) => format!("{} ({:?})", p, t),
            None => p.to_string(),
        };
        return Ok((model, t, name, None));
    }
    let ty: AlgebraType = ty.parse()?;
    let labels: DynkinLabels =
        labels.ok_or_else(|| Error::InvalidArgument("--labels is required for root system types".into()))?.parse()?;
    let model = chevalley_algebra(ty)?;
    let t = triple_from_diagram(&model, &labels, seed, DIAGRAM_RETRIES)?;
    Ok((model, t, labels.to_string(), Some(labels)))
}

fn oracle(
    ty: &str,
    labels: Option<&str>,
    n: Option<usize>,
    partition: Option<&str>,
    tag: Option<TagArg>,
    seed: u64,
) -> magical::Result<Output> {
    let (model, t, orbit, labels) = build_triple(ty, labels, n, partition, tag, seed)?;
    let rep = is_magical_oracle(&model, &t)?;
    let mut diagnostics = Vec::new();
    let structure = if rep.magical {
        match verify_structure(&model, &t) {
            Ok(s) => Some(s),
            Err(e) => {
                diagnostics.push(format!("structure report unavailable: {}", e));
                None
            }
        }
    } else {
        None
    };
    let payload = OraclePayload {
        algebra: model.name.clone(),
        dim: model.dim(),
        orbit,
        labels,
        magical: rep.magical,
        witness: rep.witness.map(|(x, y)| Witness {
            x,
            y,
            x_label: model.labels[x].clone(),
            y_label: model.labels[y].clone(),
        }),
        pairs_checked: rep.pairs_checked,
        fixed_dim: rep.fixed_dim,
        centralizer_dim: triple_centralizer(&model, &t)?.len(),
        structure,
    };
    let mut text = format!(
        "{} {}: {}\n  dim c = {}, fixed space of sigma = {}, pairs checked = {}\n",
        payload.algebra,
        payload.orbit,
        if payload.magical { "magical" } else { "not magical" },
        payload.centralizer_dim,
        payload.fixed_dim,
        payload.pairs_checked
    );
    if let Some(w) = &payload.witness {
        text.push_str(&format!("  witness: [{}, {}] breaks sigma\n", w.x_label, w.y_label));
    }
    if let Some(s) = &payload.structure {
        text.push_str(&format!(
            "  dim z(c) = {}, center = {}, dim g(e) = {}, exponents {:?}\n",
            s.zc_dim,
            s.center_dim,
            s.ge_dim,
            s.ge_exponents()
        ));
        for c in &s.checks {
            text.push_str(&format!("  {} {}: {}\n", if c.passed { "ok  " } else { "FAIL" }, c.name, c.detail));
        }
    }
    let passed = payload.structure.as_ref().is_none_or(|s| s.passed());
    let mut out = output(&payload, text, passed)?;
    out.diagnostics = diagnostics;
    Ok(out)
}

fn record(case: &str, genus: usize) -> magical::Result<Output> {
    let id: MagicalCaseId = case.parse()?;
    let ctx = GenusContext::new(genus)?;
    let rec = magical_record(id)?;
    let domain = cayley_domain(&rec, ctx)?;
    let payload = RecordPayload {
        genus,
        dimension_consistency: dimension_consistency(&rec),
        checks: check_record(&rec)?,
        component_count: ComponentCounts {
            simply_connected: component_count(&rec, GroupForm::SimplyConnected),
            adjoint: component_count(&rec, GroupForm::Adjoint),
        },
        cayley_domain: domain,
        record: rec,
    };
    let r = &payload.record;
    let d = &payload.cayley_domain;
    let mut text = String::new();
    text.push_str(&format!("{} in {} with labels ({})\n", r.case_id, r.algebra_type(), r.diagram));
    text.push_str(&format!("  canonical real form  {}\n", r.canonical_real_form.math_name()));
    text.push_str(&format!("  sl2 data (m, n_2m)   {:?}\n", r.sl2_data.pairs()));
    text.push_str(&format!("  g_0                  {}\n", r.g0_type));
    text.push_str(&format!("  c                    {} (compact {})\n", r.c_type, r.c_real));
    text.push_str(&format!("  g(e)                 {} exponents {:?}\n", r.ge_type, r.ge_exponents));
    text.push_str(&format!("  Cayley real form     {}\n", r.cayley_real_form));
    text.push_str(&format!("  theta                {:?}\n", r.theta));
    text.push_str(&format!("  twist                K^{}\n", d.twist_degree));
    text.push_str(&format!(
        "  differentials (g={})  degrees {:?} dims {:?} total {}\n",
        genus, d.differential_degrees, d.differential_dims, d.total_dim
    ));
    let dc = &payload.dimension_consistency;
    text.push_str(&format!("  dimension identity   {} = {}\n", dc.lhs, dc.rhs));
    text.push_str(&format!(
        "  components           sc {}, adjoint {}\n",
        payload.component_count.simply_connected, payload.component_count.adjoint
    ));
    for c in &payload.checks.checks {
        text.push_str(&format!("  {} {}: {}\n", if c.passed { "ok  " } else { "FAIL" }, c.name, c.detail));
    }
    let passed = payload.checks.passed() && dc.holds();
    output(&payload, text, passed)
}

fn render(poset: Option<&str>, dynkin: Option<&str>, labels: &str, format: Option<Format>) -> magical::Result<Output> {
    let labels: DynkinLabels = labels.parse()?;
    let (kind, fmt, text) = match (poset, dynkin) {
        (Some(ty), _) => {
            let rs = build_root_system(ty.parse()?)?;
            match format.unwrap_or(Format::Dot) {
                Format::Dot => ("poset", "dot", render::poset_dot(&rs, &labels)?),
                Format::Text => ("poset", "text", render::poset_text(&rs, &labels)?),
            }
        }
        (None, Some(ty)) => {
            if format == Some(Format::Dot) {
                return Err(Error::Unsupported("Dynkin diagrams render as text only".into()));
            }
            ("dynkin", "text", render::dynkin_ascii(ty.parse()?, &labels)?)
        }
        (None, None) => return Err(Error::InvalidArgument("one of --poset or --dynkin is required".into())),
    };
    let payload = RenderPayload { kind: kind.into(), format: fmt.into(), text: text.clone() };
    output(&payload, text, true)
}

fn verify(suite: Suite, cap: usize, seed: u64) -> magical::Result<Output> {
    let payload: VerifyPayload = verify::run(suite, cap, seed);
    let mut text = String::new();
    for c in &payload.checks {
        text.push_str(&format!("{} [{}] {}: {}\n", if c.passed { "PASS" } else { "FAIL" }, c.suite, c.name, c.detail));
    }
    let failed = payload.checks.iter().filter(|c| !c.passed).count();
    text.push_str(&format!("{} checks, {} failed\n", payload.checks.len(), failed));
    let passed = payload.passed;
    output(&payload, text, passed)
}

/// Writes to stdout; a closed pipe is not an error.
fn emit(s: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(s.as_bytes()).and_then(|_| out.flush());
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = Cli::parse();
    let result = match &cli.cmd {
        Cmd::Classify { real_form, cap } => classify(real_form, cap.unwrap_or(DEFAULT_CAP)),
        Cmd::Oracle { ty, labels, n, partition, tag } => {
            oracle(ty, labels.as_deref(), *n, partition.as_deref(), *tag, cli.seed)
        }
        Cmd::Record { case, genus } => record(case, *genus),
        Cmd::Render { poset, dynkin, labels, format } => render(poset.as_deref(), dynkin.as_deref(), labels, *format),
        Cmd::Verify { suite, cap } => verify(*suite, cap.unwrap_or(DEFAULT_CAP), cli.seed),
    };
    let command = argv.into_iter().skip(1).collect();
    match result {
        Ok(out) => {
            if cli.json {
                let env = Envelope {
                    command,
                    schema_version: SCHEMA_VERSION.into(),
                    payload: out.payload,
                    diagnostics: out.diagnostics,
                };
                emit(&format!("{}\n", serde_json::to_string_pretty(&env).expect("envelope serializes")));
            } else {
                emit(&out.text);
                for d in &out.diagnostics {
                    eprintln!("note: {}", d);
                }
            }
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            if cli.json {
                let env = Envelope {
                    command,
                    schema_version: SCHEMA_VERSION.into(),
                    payload: Value::Null,
                    diagnostics: vec![e.to_string()],
                };
                emit(&format!("{}\n", serde_json::to_string_pretty(&env).expect("envelope serializes")));
            } else {
                eprintln!("error: {}", e);
            }
            ExitCode::from(2)
        }
    }
}
