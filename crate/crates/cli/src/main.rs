use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gqd::character::{table_to_csv, table_to_json, CharacterTable};
use gqd::double_rep::{catalog, character_entries, DoubleContext, IrrepCatalog, SimpleLabel};
use gqd::fusion::{fuse, fusion_table, CosetOrder, FusionOutcome, Oracle};
use gqd::grothendieck::{build_ring, phi_image};
use gqd::group::GroupHom;
use gqd::input::load_pair;
use gqd::suites::{run_suites, Suite, SuiteOptions};
use gqd::Error;

#[derive(Parser)]
#[command(name = "gqd", version, about = "Representations and fusion rules of generalized quantum doubles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// JSON description of (G, F, phi).
    #[arg(long, value_name = "FILE")]
    spec: PathBuf,
    /// Write the result here instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Hopf,
    Clifford,
    Fusion,
    Ring,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// List the simple modules.
    Classify {
        #[command(flatten)]
        common: Common,
        /// Include every simple character.
        #[arg(long)]
        all: bool,
    },
    /// Decompose tensor products of simples.
    Fusion {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_name = "g:M", requires = "right", conflicts_with = "all")]
        left: Option<String>,
        #[arg(long, value_name = "h:N", requires = "left")]
        right: Option<String>,
        /// Every ordered pair.
        #[arg(long)]
        all: bool,
        /// Skip the cross-check against direct character decomposition.
        #[arg(long)]
        fast: bool,
    },
    /// Structure constants of the Grothendieck ring and its image in ZG.
    Ring {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        fast: bool,
    },
    /// Character table of G, or of G and every stabilizer with --all.
    Chartable {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        all: bool,
    },
    /// Run verification suites.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Largest double dimension the hopf suite builds.
        #[arg(long, value_name = "N", default_value_t = gqd::hopf::DEFAULT_DIMENSION_CAP)]
        cap: usize,
        #[arg(long, hide = true, value_name = "I,J")]
        corrupt: Option<String>,
    },
}

enum Failure {
    Input(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_invalid_input() {
            Failure::Input(e.to_string())
        } else {
            Failure::Verification(e.to_string())
        }
    }
}

type Outcome = Result<(String, bool), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (common, result) = match &cli.command {
        Command::Classify { common, all } => (common, classify(common, *all)),
        Command::Fusion { common, left, right, all, fast } => {
            (common, fusion(common, left.as_deref().zip(right.as_deref()), *all, *fast))
        }
        Command::Ring { common, fast } => (common, ring(common, *fast)),
        Command::Chartable { common, all } => (common, chartable(common, *all)),
        Command::Verify { common, suite, cap, corrupt } => (common, verify(common, *suite, *cap, corrupt.as_deref())),
    };
    match result {
        Ok((text, ok)) => {
            if let Some(path) = &common.out {
                if let Err(e) = fs::write(path, &text) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                print!("{text}");
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
    }
}

fn load(common: &Common) -> Result<(Option<String>, GroupHom), Failure> {
    let text = fs::read_to_string(&common.spec)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", common.spec.display())))?;
    let pair = load_pair(&text)?;
    Ok((pair.name, pair.phi))
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn csv_unsupported(what: &str) -> Failure {
    Failure::Input(format!("--format csv is not available for {what}"))
}

fn context_json(name: &Option<String>, ctx: &DoubleContext) -> Value {
    let g = ctx.g();
    let gamma: Vec<Value> = ctx
        .gamma()
        .iter()
        .map(|&r| {
            json!({
                "g": r,
                "label": g.element_label(r),
                "orbit": ctx.action().orbit(r),
                "stabilizer": ctx.stabilizer(r).elements(),
            })
        })
        .collect();
    json!({
        "name": name,
        "G_order": g.order(),
        "F_order": ctx.f().order(),
        "phi": ctx.phi().images(),
        "dim": ctx.dim(),
        "gamma": gamma,
    })
}

fn label_json(ctx: &DoubleContext, l: &SimpleLabel) -> Value {
    json!({
        "label": l.to_string(),
        "g": l.g,
        "g_label": ctx.g().element_label(l.g),
        "orbit": ctx.action().orbit(l.g),
        "M_index": l.m,
        "M_degree": l.m_degree,
        "degree": l.degree,
    })
}

fn classify(common: &Common, all: bool) -> Outcome {
    let (name, phi) = load(common)?;
    let ctx = DoubleContext::new(&phi);
    let cat = catalog(&ctx)?;
    if common.format == Format::Csv {
        let mut out = String::from("label,g,g_label,M_index,M_degree,degree\n");
        for l in cat.labels() {
            let gl = ctx.g().element_label(l.g);
            let gl = if gl.contains(',') { format!("\"{gl}\"") } else { gl };
            out.push_str(&format!("{l},{},{gl},{},{},{}\n", l.g, l.m, l.m_degree, l.degree));
        }
        return Ok((out, true));
    }
    let labels: Vec<Value> = cat.labels().iter().map(|l| label_json(&ctx, l)).collect();
    let mut v = json!({
        "context": context_json(&name, &ctx),
        "labels": labels,
        "sum_of_squares": cat.degrees().iter().map(|d| d * d).sum::<u64>(),
    });
    if all {
        let chars: Vec<Value> = (0..cat.len())
            .map(|i| {
                let entries: Vec<Value> =
                    character_entries(&cat, i).into_iter().map(|(a, x, val)| json!([a, x, val])).collect();
                json!({"label": cat.labels()[i].to_string(), "values": entries})
            })
            .collect();
        v["characters"] = Value::Array(chars);
    }
    Ok((json_text(&v), true))
}

fn outcome_json(o: &FusionOutcome) -> Value {
    let terms: Vec<Value> = o.terms.iter().map(|(l, m)| json!({"g": l.g, "M": l.m, "mult": m})).collect();
    json!({"left": o.left.to_string(), "right": o.right.to_string(), "terms": terms})
}

fn fusion(common: &Common, pair: Option<(&str, &str)>, all: bool, fast: bool) -> Outcome {
    let (_, phi) = load(common)?;
    let ctx = DoubleContext::new(&phi);
    let cat = catalog(&ctx)?;
    let pairs: Vec<(usize, usize)> = match (pair, all) {
        (Some((l, r)), _) => vec![(cat.parse_label(l)?, cat.parse_label(r)?)],
        (None, true) => (0..cat.len()).flat_map(|i| (0..cat.len()).map(move |j| (i, j))).collect(),
        (None, false) => return Err(Failure::Input("give --left and --right, or --all".into())),
    };
    let oracle = if fast { None } else { Some(Oracle::new(&cat)?) };
    let mut outcomes = Vec::with_capacity(pairs.len());
    for (i, j) in pairs {
        let o = fuse(&cat, i, j, CosetOrder::default())?;
        if let Some(oracle) = &oracle {
            let expected = oracle.fuse(i, j)?;
            if expected != o {
                return Err(Failure::Verification(format!("formula gives `{o}` but the oracle gives `{expected}`")));
            }
        }
        outcomes.push(o);
    }
    if common.format == Format::Csv {
        if !all {
            return Err(csv_unsupported("a single product"));
        }
        let table = fusion_table(&cat, CosetOrder::default())?;
        let mut out = String::new();
        for left in 0..cat.len() {
            out.push_str(&format!("# left {}\n", cat.labels()[left]));
            out.push_str(&table.matrix_csv(&cat, left));
        }
        return Ok((out, true));
    }
    let v = match outcomes.as_slice() {
        [one] if !all => outcome_json(one),
        many => Value::Array(many.iter().map(outcome_json).collect()),
    };
    Ok((json_text(&v), true))
}

fn ring(common: &Common, fast: bool) -> Outcome {
    if common.format == Format::Csv {
        return Err(csv_unsupported("ring"));
    }
    let (_, phi) = load(common)?;
    let ctx = DoubleContext::new(&phi);
    let cat = catalog(&ctx)?;
    let table = fusion_table(&cat, CosetOrder::default())?;
    if !fast {
        check_table_against_oracle(&cat, &table)?;
    }
    let ring = build_ring(&cat, &table)?;
    let mut constants = Vec::new();
    for i in 0..ring.rank() {
        for j in 0..ring.rank() {
            for &(k, n) in ring.product(i, j) {
                constants.push(json!([i, j, k, n]));
            }
        }
    }
    let images: Vec<Value> = ring
        .labels()
        .iter()
        .map(|l| json!({"label": l.to_string(), "image": phi_image(&ctx, l).to_map()}))
        .collect();
    let v = json!({
        "labels": ring.labels().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "unit": ring.unit(),
        "grading": ring.grading(),
        "constants": constants,
        "phi_images": images,
    });
    Ok((json_text(&v), true))
}

fn check_table_against_oracle(cat: &IrrepCatalog, table: &gqd::fusion::FusionTable) -> Result<(), Failure> {
    let oracle = Oracle::new(cat)?;
    for i in 0..cat.len() {
        for j in 0..cat.len() {
            let expected = oracle.fuse(i, j)?;
            if &expected != table.get(i, j) {
                return Err(Failure::Verification(format!(
                    "formula gives `{}` but the oracle gives `{expected}`",
                    table.get(i, j)
                )));
            }
        }
    }
    Ok(())
}

fn chartable(common: &Common, all: bool) -> Outcome {
    let (_, phi) = load(common)?;
    let ctx = DoubleContext::new(&phi);
    let g_table = CharacterTable::of_group(ctx.g().clone())?;
    let mut tables = vec![("G".to_string(), g_table)];
    if all {
        for &r in ctx.gamma() {
            let t = ctx.stabilizer_table(r)?;
            tables.push((format!("F_{}", ctx.g().element_label(r)), (*t).clone()));
        }
    }
    if common.format == Format::Csv {
        let mut out = String::new();
        for (name, t) in &tables {
            if all {
                out.push_str(&format!("# {name}\n"));
            }
            out.push_str(&table_to_csv(t));
        }
        return Ok((out, true));
    }
    let v = if all {
        Value::Array(tables.iter().map(|(name, t)| json!({"group": name, "table": table_to_json(t)})).collect())
    } else {
        table_to_json(&tables[0].1)
    };
    Ok((json_text(&v), true))
}

fn verify(common: &Common, suite: SuiteArg, cap: usize, corrupt: Option<&str>) -> Outcome {
    if common.format == Format::Csv {
        return Err(csv_unsupported("verify"));
    }
    let corrupt = corrupt
        .map(|s| {
            let bad = || Failure::Input(format!("--corrupt expects I,J, got `{s}`"));
            let (i, j) = s.split_once(',').ok_or_else(bad)?;
            Ok::<_, Failure>((i.trim().parse().map_err(|_| bad())?, j.trim().parse().map_err(|_| bad())?))
        })
        .transpose()?;
    let (_, phi) = load(common)?;
    let suites: Vec<Suite> = match suite {
        SuiteArg::Hopf => vec![Suite::Hopf],
        SuiteArg::Clifford => vec![Suite::Clifford],
        SuiteArg::Fusion => vec![Suite::Fusion],
        SuiteArg::Ring => vec![Suite::Ring],
        SuiteArg::All => Suite::ALL.to_vec(),
    };
    let report = run_suites(&phi, &suites, &SuiteOptions { cap, corrupt })?;
    let pass = report.all_pass();
    let v = json!({"pass": pass, "checks": report.to_json()});
    Ok((json_text(&v), pass))
}
