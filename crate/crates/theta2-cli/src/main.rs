use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use theta2::anodyne::{self, ClaimCheck, HornFamily, HornKind, LiftReport, Report};
use theta2::boxprod::{self, Inclusion};
use theta2::cellset::{self, CellularSet, Chaotic, Subobject};
use theta2::hyperface::{hyperfaces, HyperfaceLabel};
use theta2::parse::{parse_cellular, parse_label_set, parse_shape, parse_shuffle, parse_simplicial};
use theta2::twocat::{free_cell_2cat, nerve, parse_2category};
use theta2::{CellularOperator, Shuffle, ThetaShape};

#[derive(Parser)]
#[command(name = "theta2", version, about = "Construct, enumerate and verify in the 2-cell category Θ₂")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args, Default)]
struct Params {
    /// A shape such as "[2;0,1]".
    #[arg(long)]
    shape: Option<String>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    i: Option<usize>,
    /// A shuffle such as "<{0,0,1},{0,1,1}>".
    #[arg(long)]
    shuffle: Option<String>,
    /// Comma-separated hyperface labels such as "δv^{1;1},δh^0" (ASCII `dv`, `dh` also work).
    #[arg(long)]
    set: Option<String>,
    /// Truncation bound D.
    #[arg(long)]
    bound: Option<usize>,
    #[arg(long)]
    max_dim: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// List shapes, faces, degeneracies or operators.
    Enumerate {
        #[arg(value_enum)]
        what: Enumerable,
        /// Target shape for `operators`.
        target: Option<String>,
        #[command(flatten)]
        params: Params,
    },
    /// Classify a simplicial or cellular operator.
    Classify { operator: String },
    /// The hyperfaces of a shape.
    Hyperfaces { shape: String },
    /// Generators of a named subobject of a representable or box product.
    Horn {
        #[arg(value_enum)]
        kind: HornName,
        #[command(flatten)]
        params: Params,
    },
    /// Generators of the spine, or of Σ^S with --set.
    Spine {
        #[arg(value_name = "SHAPE")]
        positional: Option<String>,
        #[command(flatten)]
        params: Params,
    },
    /// Generators of the boundary.
    Boundary {
        #[arg(value_name = "SHAPE")]
        positional: Option<String>,
        #[command(flatten)]
        params: Params,
    },
    /// The (m,n)-shuffles with their corners, or their Hasse diagram.
    Shuffles {
        m: usize,
        n: usize,
        /// Same as --format dot.
        #[arg(long)]
        dot: bool,
    },
    /// Replay a gluing decomposition and check every square. `all` runs every
    /// replay on shapes up to --max-dim (default 4), the vertical equivalence
    /// replays at --bound (default 5), the horizontal ones one below, and the
    /// pullback claims for n ≤ 3, q ≤ 2.
    Verify {
        #[arg(value_enum)]
        script: Script,
        #[command(flatten)]
        params: Params,
    },
    /// Search for fillers of horns in a cellular set.
    Lift {
        /// `J`, a shape (its representable), `boundary:<shape>`, or a 2-category file (its nerve).
        target: String,
        /// `inner`, `inner-horizontal` or `inner-vertical`; ignored with --shape.
        #[arg(long, default_value = "inner")]
        family: String,
        #[command(flatten)]
        params: Params,
    },
    /// Cells of the nerve of a finite 2-category (a file, or the free one on --shape).
    Nerve {
        file: Option<PathBuf>,
        #[command(flatten)]
        params: Params,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Enumerable {
    Shapes,
    Faces,
    Degeneracies,
    Operators,
}

#[derive(Clone, Copy, ValueEnum)]
enum HornName {
    Boundary,
    HornH,
    HornV,
    HornHAlt,
    Spine,
    SigmaS,
    UpsilonS,
    LambdaS,
    EquivV,
    EquivH,
}

#[derive(Clone, Copy, ValueEnum)]
enum Script {
    SpineAnodyne,
    SigmaS,
    UpsilonVertical,
    UpsilonFull,
    OuryFromAlt,
    AltTrivial,
    VertEquiv,
    HorizEquiv,
    Claims,
    All,
}

enum Failure {
    Usage(String),
    /// Verification ran and something failed; the output is already printed.
    Verification,
    Other(anyhow::Error),
}

impl From<theta2::Error> for Failure {
    fn from(e: theta2::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Other(e)
    }
}

type Outcome = Result<String, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

impl Params {
    fn shape(&self) -> Result<ThetaShape, Failure> {
        let s = self.shape.as_deref().ok_or_else(|| usage("--shape is required"))?;
        Ok(parse_shape(s)?)
    }

    fn k(&self) -> Result<usize, Failure> {
        self.k.ok_or_else(|| usage("--k is required"))
    }

    fn i(&self) -> Result<usize, Failure> {
        self.i.ok_or_else(|| usage("--i is required"))
    }

    fn shuffle(&self) -> Result<Shuffle, Failure> {
        let s = self.shuffle.as_deref().ok_or_else(|| usage("--shuffle is required"))?;
        Ok(parse_shuffle(s)?)
    }

    fn set(&self, shape: &ThetaShape) -> Result<Vec<HyperfaceLabel>, Failure> {
        Ok(parse_label_set(self.set.as_deref().unwrap_or(""), Some(shape))?)
    }

    fn bound(&self, default: usize) -> usize {
        self.bound.unwrap_or(default)
    }

    fn with_shape(mut self, positional: Option<String>) -> Self {
        if positional.is_some() {
            self.shape = positional;
        }
        self
    }
}

fn json_text<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("values serialize") + "\n"
}

fn no_dot(format: Format) -> Result<(), Failure> {
    match format {
        Format::Dot => Err(usage("--format dot is only available for `shuffles`")),
        _ => Ok(()),
    }
}

fn enumerate(format: Format, what: Enumerable, target: Option<String>, p: Params) -> Outcome {
    no_dot(format)?;
    let items: Vec<String> = match what {
        Enumerable::Shapes => ThetaShape::all_up_to(p.max_dim.unwrap_or(3)).iter().map(|s| s.to_string()).collect(),
        Enumerable::Faces => CellularOperator::faces_into(&p.shape()?).iter().map(|f| f.to_string()).collect(),
        Enumerable::Degeneracies => {
            CellularOperator::degeneracies_from(&p.shape()?).iter().map(|f| f.to_string()).collect()
        }
        Enumerable::Operators => {
            let dst = parse_shape(&target.ok_or_else(|| usage("`operators` needs a target shape"))?)?;
            CellularOperator::all(&p.shape()?, &dst).iter().map(|f| f.to_string()).collect()
        }
    };
    Ok(match format {
        Format::Json => json_text(&items),
        _ => items.iter().map(|s| format!("{s}\n")).collect(),
    })
}

fn classify(format: Format, text: &str) -> Outcome {
    no_dot(format)?;
    if let Ok(f) = parse_simplicial(text) {
        let c = f.classify();
        let (e, m) = f.ez_factor();
        return Ok(match format {
            Format::Json => {
                json_text(&json!({"operator": f.to_string(), "class": c, "epi": e.to_string(), "mono": m.to_string()}))
            }
            _ => format!(
                "{f}\nmono {}\nepi {}\ninert {}\npreserves endpoints {}\nfactors as {e} then {m}\n",
                c.mono, c.epi, c.inert, c.preserves_endpoints
            ),
        });
    }
    let f = parse_cellular(text)?;
    let c = f.classify();
    let codim = f.codim().ok();
    let (d, g) = f.reedy_factor();
    Ok(match format {
        Format::Json => json_text(&json!({
            "operator": f.to_string(),
            "class": c,
            "codim": codim,
            "degeneracy": d.to_string(),
            "face": g.to_string(),
        })),
        _ => {
            let mut out = format!("{f}\n");
            for (name, v) in [
                ("face", c.face),
                ("degeneracy", c.degeneracy),
                ("inner", c.inner),
                ("outer", c.outer),
                ("horizontal", c.horizontal),
                ("vertical", c.vertical),
                ("inert", c.inert),
            ] {
                writeln!(out, "{name} {v}").unwrap();
            }
            if let Some(c) = codim {
                writeln!(out, "codim {c}").unwrap();
            }
            writeln!(out, "factors as {d} then {g}").unwrap();
            out
        }
    })
}

fn list_hyperfaces(format: Format, shape: &str) -> Outcome {
    no_dot(format)?;
    let s = parse_shape(shape)?;
    let hs = hyperfaces(&s);
    let kind = |l: &HyperfaceLabel| if l.is_inner(&s) { "inner" } else { "outer" };
    Ok(match format {
        Format::Json => json_text(
            &hs.iter()
                .map(|(l, f)| json!({"label": l.display_on(&s), "operator": f.to_string(), "kind": kind(l)}))
                .collect::<Vec<_>>(),
        ),
        _ => hs.iter().map(|(l, f)| format!("{}\t{f}\t{}\n", l.display_on(&s), kind(l))).collect(),
    })
}

fn show_inclusion<X: CellularSet>(format: Format, inc: &Inclusion<X>) -> Outcome {
    no_dot(format)?;
    Ok(match format {
        Format::Json => json_text(&json!({"name": inc.name, "domain": inc.domain.to_doc(&inc.codomain)})),
        _ => {
            let gens = inc.generators();
            let mut out = format!("# {}: {} generators\n", inc.name, gens.len());
            for g in gens {
                writeln!(out, "{g}").unwrap();
            }
            out
        }
    })
}

fn horn(format: Format, kind: HornName, p: &Params) -> Outcome {
    let s = p.shape()?;
    match kind {
        HornName::Boundary => show_inclusion(format, &boxprod::boundary(&s)),
        HornName::HornH => show_inclusion(format, &boxprod::horn_h(&s, p.k()?)?),
        HornName::HornV => show_inclusion(format, &boxprod::horn_v(&s, p.k()?, p.i()?)?),
        HornName::HornHAlt => show_inclusion(format, &boxprod::horn_h_alt(&s, p.k()?, &p.shuffle()?)?),
        HornName::Spine => show_inclusion(format, &boxprod::spine(&s)),
        HornName::SigmaS => show_inclusion(format, &boxprod::spine_s(&s, &p.set(&s)?)?),
        HornName::UpsilonS => show_inclusion(format, &boxprod::upsilon_s(&s, &p.set(&s)?)?),
        HornName::LambdaS => show_inclusion(format, &boxprod::lambda_s(&s, &p.set(&s)?)?),
        HornName::EquivV => show_inclusion(format, &boxprod::equiv_vert(&s, p.k()?, p.bound(3))?.inclusion),
        HornName::EquivH => show_inclusion(format, &boxprod::equiv_horiz(&s, p.bound(3)).inclusion),
    }
}

fn shuffles(format: Format, m: usize, n: usize) -> Outcome {
    let all = Shuffle::all(m, n);
    Ok(match format {
        Format::Dot => Shuffle::hasse_dot(m, n),
        Format::Json => json_text(
            &all.iter()
                .map(|x| {
                    let (lower, upper) = x.corners();
                    json!({"shuffle": x.to_string(), "lower_corners": lower, "upper_corners": upper})
                })
                .collect::<Vec<_>>(),
        ),
        Format::Text => all
            .iter()
            .map(|x| {
                let (lower, upper) = x.corners();
                format!("{x}\tlower {lower:?}\tupper {upper:?}\n")
            })
            .collect(),
    })
}

fn report_dir() -> Option<PathBuf> {
    std::env::var_os("THETA2_REPORT_DIR").filter(|v| !v.is_empty()).map(PathBuf::from)
}

fn file_stem(index: usize, r: &Report) -> String {
    let shape: String = r
        .params
        .get("shape")
        .map(|s| s.chars().map(|c| if c.is_ascii_digit() { c } else { '_' }).collect())
        .unwrap_or_default();
    format!(
        "{index:04}-{}{}",
        r.script,
        if shape.is_empty() { String::new() } else { format!("-{}", shape.trim_matches('_')) }
    )
}

fn write_reports(reports: &[Report], claims: &[(ThetaShape, ClaimCheck)]) -> anyhow::Result<()> {
    let Some(dir) = report_dir() else { return Ok(()) };
    std::fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
    for (i, r) in reports.iter().enumerate() {
        let path = dir.join(format!("{}.json", file_stem(i, r)));
        std::fs::write(&path, r.to_json() + "\n").with_context(|| format!("writing {}", path.display()))?;
    }
    if !claims.is_empty() {
        let path = dir.join("claims.json");
        std::fs::write(&path, json_text(&claims_json(claims)))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn claims_json(claims: &[(ThetaShape, ClaimCheck)]) -> serde_json::Value {
    claims
        .iter()
        .map(|(s, c)| json!({"shape": s.to_string(), "name": c.name, "checked": c.checked, "failures": c.failures}))
        .collect()
}

fn step_lines(r: &Report) -> String {
    let mut out = String::new();
    for s in &r.steps {
        let verdict = if s.ok() { "ok" } else { "FAILED" };
        writeln!(out, "  {:>4} {} {} : {} along {} {verdict}", s.index, s.stage, s.cell, s.shape, s.horn.family)
            .unwrap();
        for f in &s.failures {
            writeln!(out, "       {f}").unwrap();
        }
    }
    out
}

/// Prints the reports; on any failure, the failing reports follow as JSON.
fn finish(format: Format, reports: Vec<Report>, claims: Vec<(ThetaShape, ClaimCheck)>, detail: bool) -> Outcome {
    no_dot(format)?;
    write_reports(&reports, &claims)?;
    let failed = reports.iter().any(|r| !r.ok()) || claims.iter().any(|(_, c)| !c.ok());
    let out = match format {
        Format::Json if claims.is_empty() && reports.len() == 1 => reports[0].to_json() + "\n",
        Format::Json => json_text(&json!({"reports": reports, "claims": claims_json(&claims)})),
        _ => {
            let mut out = String::new();
            for r in &reports {
                writeln!(out, "{}", r.summary()).unwrap();
                if detail {
                    out.push_str(&step_lines(r));
                }
            }
            for (s, c) in &claims {
                let verdict = if c.ok() { "holds" } else { "FAILED" };
                writeln!(out, "{} {s} : {} instances, {verdict}", c.name, c.checked).unwrap();
            }
            let bad = reports.iter().filter(|r| !r.ok()).count() + claims.iter().filter(|(_, c)| !c.ok()).count();
            if reports.len() + claims.len() > 1 {
                writeln!(out, "{} reports, {} claims, {bad} failed", reports.len(), claims.len()).unwrap();
            }
            if failed {
                let bad: Vec<&Report> = reports.iter().filter(|r| !r.ok()).collect();
                let bad_claims: Vec<(ThetaShape, ClaimCheck)> =
                    claims.iter().filter(|(_, c)| !c.ok()).cloned().collect();
                out.push_str(&json_text(&json!({"reports": bad, "claims": claims_json(&bad_claims)})));
            }
            out
        }
    };
    if failed {
        print!("{out}");
        return Err(Failure::Verification);
    }
    Ok(out)
}

fn verify(format: Format, script: Script, p: &Params) -> Outcome {
    let one = |r: theta2::Result<Report>| -> Outcome { finish(format, vec![r?], Vec::new(), true) };
    match script {
        Script::SpineAnodyne => one(anodyne::spine_anodyne(&p.shape()?)),
        Script::SigmaS => {
            let s = p.shape()?;
            one(anodyne::sigma_s(&s, &p.set(&s)?))
        }
        Script::UpsilonVertical => {
            let s = p.shape()?;
            one(anodyne::upsilon_vertical(&s, &p.set(&s)?))
        }
        Script::UpsilonFull => {
            let s = p.shape()?;
            one(anodyne::upsilon_full(&s, &p.set(&s)?))
        }
        Script::OuryFromAlt => {
            let s = p.shape()?;
            one(anodyne::oury_from_alt(&s, &p.set(&s)?))
        }
        Script::AltTrivial => {
            let s = p.shape()?;
            let k = p.k()?;
            let mut i_s = Vec::new();
            for l in p.set(&s)? {
                match l {
                    HyperfaceLabel::Hk { k: k2, shuffle } if k2 == k => i_s.push(shuffle),
                    other => {
                        return Err(usage(format!("{} is not a {k}-th horizontal hyperface", other.display_on(&s))))
                    }
                }
            }
            one(anodyne::alt_trivial(&s, k, &p.shuffle()?, &i_s))
        }
        Script::VertEquiv => one(anodyne::vert_equiv(&p.shape()?, p.k()?, p.bound(4))),
        Script::HorizEquiv => one(anodyne::horiz_equiv(&p.shape()?, p.bound(3))),
        Script::Claims => {
            let s = p.shape()?;
            let claims = anodyne::claims_inner(&s)?
                .into_iter()
                .chain(anodyne::claims_alternative(&s)?)
                .map(|c| (s.clone(), c))
                .collect();
            finish(format, Vec::new(), claims, false)
        }
        Script::All => {
            let mut reports = anodyne::replay_matrix(p.max_dim.unwrap_or(4))?;
            let d = p.bound(5);
            reports.extend(anodyne::equiv_matrix(d, d.saturating_sub(1).max(2))?);
            let claims = anodyne::claim_matrix(3, 2)?;
            finish(format, reports, claims, false)
        }
    }
}

type LiftRunner = Box<dyn Fn(&HornFamily) -> theta2::Result<LiftReport>>;

fn lift_target(target: &str, bound: usize) -> Result<LiftRunner, Failure> {
    if target == "J" || target == "j" {
        let j = cellset::from_simplicial(Chaotic::J, bound);
        return Ok(Box::new(move |f| anodyne::lift_check(&j, f, bound)));
    }
    if let Some(rest) = target.strip_prefix("boundary:") {
        let s = parse_shape(rest)?;
        let rep = cellset::representable(&s, bound);
        let b: Subobject<CellularOperator> = boxprod::boundary(&s).domain;
        return Ok(Box::new(move |f| anodyne::lift_check(&cellset::restrict(&rep, &b), f, bound)));
    }
    if target.starts_with('[') {
        let rep = cellset::representable(&parse_shape(target)?, bound);
        return Ok(Box::new(move |f| anodyne::lift_check(&rep, f, bound)));
    }
    let text = std::fs::read_to_string(target).map_err(|e| usage(format!("cannot read {target}: {e}")))?;
    let c = parse_2category(&text)?;
    c.validate()?;
    let nv = nerve(&c, bound);
    Ok(Box::new(move |f| anodyne::lift_check(&nv, f, bound)))
}

fn lift(format: Format, target: &str, family: &str, p: &Params) -> Outcome {
    no_dot(format)?;
    let bound = p.bound(3);
    let fam = match (&p.shape, p.k) {
        (Some(_), Some(k)) => {
            let kind = match p.i {
                Some(i) => HornKind::Vertical { k, i },
                None => HornKind::Horizontal { k },
            };
            HornFamily::single(&p.shape()?, kind)
        }
        (Some(_), None) => return Err(usage("--shape needs --k (and --i for a vertical horn)")),
        _ => HornFamily::by_name(family, p.max_dim.unwrap_or(bound.saturating_sub(1)))?,
    };
    let report = lift_target(target, bound)?(&fam)?;
    if let Some(dir) = report_dir() {
        std::fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
        std::fs::write(dir.join("lift.json"), report.to_json() + "\n").context("writing lift.json")?;
    }
    let out = match format {
        Format::Json => report.to_json() + "\n",
        _ => {
            let mut out = format!("{}\n", report.summary());
            for i in &report.instances {
                writeln!(out, "  {} {} : {}/{} maps fill", i.horn.family, i.shape, i.filled, i.maps).unwrap();
                for u in &i.unfilled {
                    writeln!(out, "    unfilled {u}").unwrap();
                }
            }
            if !report.ok() {
                out.push_str(&(report.to_json() + "\n"));
            }
            out
        }
    };
    if !report.ok() {
        print!("{out}");
        return Err(Failure::Verification);
    }
    Ok(out)
}

fn show_nerve(format: Format, file: Option<PathBuf>, p: &Params) -> Outcome {
    no_dot(format)?;
    let bound = p.bound(3);
    let category = match (&file, &p.shape) {
        (Some(path), _) => {
            let text =
                std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
            parse_2category(&text)?
        }
        (None, Some(_)) => free_cell_2cat(&p.shape()?).category,
        (None, None) => return Err(usage("give a 2-category file or --shape")),
    };
    category.validate()?;
    let nv = nerve(&category, bound);
    Ok(match format {
        Format::Json => json_text(&cellset::materialize(&nv)),
        _ => {
            let mut out = format!("# {}\n", nv.describe());
            for s in ThetaShape::all_up_to(bound) {
                let cells = nv.cells_at(&s);
                if cells.is_empty() {
                    continue;
                }
                let nd = cells.iter().filter(|c| nv.is_nondegenerate(c)).count();
                writeln!(out, "{s}\t{} cells\t{nd} nondegenerate", cells.len()).unwrap();
            }
            out
        }
    })
}

fn run(cli: Cli) -> Outcome {
    let format = cli.format;
    match cli.command {
        Command::Enumerate { what, target, params } => enumerate(format, what, target, params),
        Command::Classify { operator } => classify(format, &operator),
        Command::Hyperfaces { shape } => list_hyperfaces(format, &shape),
        Command::Horn { kind, params } => horn(format, kind, &params),
        Command::Spine { positional, params } => {
            let p = params.with_shape(positional);
            let kind = if p.set.is_some() { HornName::SigmaS } else { HornName::Spine };
            horn(format, kind, &p)
        }
        Command::Boundary { positional, params } => horn(format, HornName::Boundary, &params.with_shape(positional)),
        Command::Shuffles { m, n, dot } => shuffles(if dot { Format::Dot } else { format }, m, n),
        Command::Verify { script, params } => verify(format, script, &params),
        Command::Lift { target, family, params } => lift(format, &target, &family, &params),
        Command::Nerve { file, params } => show_nerve(format, file, &params),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Other(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
