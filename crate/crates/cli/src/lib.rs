//! Command-line front end. Every command reads and writes the JSON quiver
//! document on standard streams unless given files, so constructions chain
//! through pipes.

pub mod dot;

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use conequiver_core::character::RepCharacter;
use conequiver_core::constructions::{
    cone, cover_with_relation_sets, mckay_returning_arrows_rho, mckay_returning_arrows_theta,
    t_algebra, Side as CoverSide, SignTwist,
};
use conequiver_core::io::{read_table, Document};
use conequiver_core::mckay::{abelian_bound_mckay, mckay_quiver, nakayama_from_det};
use conequiver_core::path_algebra::{quotient_dims, stable_translation_check};
use conequiver_core::truncation::{is_truncation, mckay_truncation_check, pipeline_tower};
use conequiver_core::{AbelianMcKaySpec, BoundQuiver, QuiverEmbedding, VertexId};

pub use dot::export_dot;

#[derive(Debug, Parser)]
#[command(
    name = "conequiver",
    version,
    about = "McKay quivers, cones and truncations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bound McKay quiver of a diagonal abelian group, or the McKay quiver of a character table
    Mckay(MckayArgs),
    /// Adds returning arrows and their relations
    Returning(ReturningArgs),
    /// Cyclic covering with levels in Z/m
    Cover(CoverArgs),
    /// Cone of a bound quiver with a translation
    Cone(IoArgs),
    /// The algebra T^n_s
    TAlgebra(TAlgebraArgs),
    /// Checks that an embedding is a truncation
    TruncateCheck(TruncateArgs),
    /// Runs the cone pipeline from linear A_s inside Z_r
    VerifyMain(VerifyArgs),
    /// Graded dimensions of the quotient algebra
    Dims(DimsArgs),
    /// Stable translation quiver conditions
    CheckStq(StqArgs),
    /// Renders a document
    Export(ExportArgs),
}

#[derive(Debug, Args)]
pub struct IoArgs {
    /// Input document; standard input when absent
    #[arg(short, long)]
    pub input: Option<PathBuf>,
    /// Output file; standard output when absent
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Sides {
    Rho,
    Theta,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Side {
    Rho,
    Theta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Twist {
    Plus,
    Minus,
}

impl From<Twist> for SignTwist {
    fn from(t: Twist) -> Self {
        match t {
            Twist::Plus => SignTwist::Plus,
            Twist::Minus => SignTwist::Minus,
        }
    }
}

#[derive(Debug, Args)]
pub struct MckayArgs {
    /// Orders of the cyclic factors, e.g. `3` or `2,3`
    #[arg(long, value_delimiter = ',', required_unless_present = "table")]
    pub orders: Vec<u32>,
    /// Weights, comma separated; a weight on several factors is written `1:0`
    #[arg(long, required_unless_present = "table", allow_hyphen_values = true)]
    pub weights: Option<String>,
    /// Character table file with a `rep_character` instead of an abelian group
    #[arg(long, conflicts_with_all = ["orders", "weights"])]
    pub table: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "both")]
    pub side: Sides,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ReturningArgs {
    #[command(flatten)]
    pub io: IoArgs,
    #[arg(long, value_enum, default_value = "both")]
    pub side: Sides,
    /// Sign in the θ-side mixing relations
    #[arg(long, value_enum, default_value = "minus")]
    pub twist: Twist,
}

#[derive(Debug, Args)]
pub struct CoverArgs {
    #[command(flatten)]
    pub io: IoArgs,
    #[arg(long)]
    pub m: u32,
    #[arg(long, value_enum, default_value = "both")]
    pub side: Sides,
    #[arg(long, value_enum, default_value = "minus")]
    pub twist: Twist,
}

#[derive(Debug, Args)]
pub struct TAlgebraArgs {
    #[arg(long)]
    pub s: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TruncateArgs {
    /// The smaller bound quiver
    #[arg(long)]
    pub sub: PathBuf,
    /// The ambient bound quiver
    #[arg(long)]
    pub ambient: PathBuf,
    /// JSON `{"vertex_map": [...], "arrow_map": [...]}`
    #[arg(long)]
    pub embedding: PathBuf,
    /// Also require the translation of `sub` to match the Nakayama permutation
    #[arg(long)]
    pub translation: bool,
    #[arg(long, value_enum, default_value = "rho")]
    pub side: Side,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub s: usize,
    #[arg(long)]
    pub n: usize,
    /// Order r of the cyclic group Z_r that A_s starts in
    #[arg(long)]
    pub group_order: u32,
    /// Fixed cover degree for every step; searched from the lower bound when absent
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct DimsArgs {
    #[command(flatten)]
    pub io: IoArgs,
    #[arg(long)]
    pub max_degree: usize,
    /// Vertex ids whose idempotents are added to the ideal
    #[arg(long, value_delimiter = ',')]
    pub drop_vertices: Vec<usize>,
    #[arg(long, value_enum, default_value = "rho")]
    pub side: Side,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct StqArgs {
    #[command(flatten)]
    pub io: IoArgs,
    #[arg(long)]
    pub loewy: usize,
    #[arg(long, value_enum, default_value = "theta")]
    pub side: Side,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Dot,
    Json,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[command(flatten)]
    pub io: IoArgs,
    #[arg(long, value_enum, default_value = "dot")]
    pub format: Format,
    #[arg(long, value_enum, default_value = "rho")]
    pub side: Side,
}

/// What a command produced: text for the output stream and whether its
/// check passed. Constructions always pass.
pub struct Outcome {
    pub text: String,
    pub passed: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, passed: true }
    }
}

fn read_input(path: Option<&PathBuf>) -> Result<String> {
    match path {
        Some(p) => fs::read_to_string(p).with_context(|| format!("reading {}", p.display())),
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .context("reading standard input")?;
            Ok(s)
        }
    }
}

fn read_document(path: Option<&PathBuf>) -> Result<Document> {
    let text = read_input(path)?;
    Document::from_json(&text).context("invalid quiver document")
}

pub fn write_output(path: Option<&PathBuf>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

/// The bound quiver of one side: `relations` for ρ, `dual_relations` for θ.
fn side_of(doc: &Document, side: Side) -> Result<BoundQuiver> {
    match side {
        Side::Rho => Ok(doc.bound.clone()),
        Side::Theta => {
            let dual = doc
                .dual_relations
                .clone()
                .ok_or_else(|| anyhow!("document has no dual_relations for the θ side"))?;
            let mut b = doc.bound.clone();
            b.relations = dual;
            b.loewy_length = doc.header.as_ref().map(|h| h.dimension() + 1);
            Ok(b)
        }
    }
}

/// Reassembles a two-sided document from the constructions of each side.
fn sides_document(
    sides: Sides,
    rho: impl FnOnce() -> Result<BoundQuiver>,
    theta: impl FnOnce() -> Result<BoundQuiver>,
) -> Result<Document> {
    Ok(match sides {
        Sides::Rho => Document::new(rho()?),
        Sides::Theta => Document::new(theta()?),
        Sides::Both => {
            let mut doc = Document::new(rho()?);
            doc.dual_relations = Some(theta()?.relations);
            doc
        }
    })
}

/// `1,2` → `[[1],[2]]`; `1:0,0:1` → `[[1,0],[0,1]]`.
pub fn parse_weights(s: &str) -> Result<Vec<Vec<i64>>> {
    s.split(',')
        .map(|w| {
            w.split(':')
                .map(|x| {
                    x.trim()
                        .parse::<i64>()
                        .with_context(|| format!("bad weight {w:?}"))
                })
                .collect()
        })
        .collect()
}

fn mckay(args: &MckayArgs) -> Result<Outcome> {
    if let Some(path) = &args.table {
        let (table, chi) = read_table(&read_input(Some(path))?)?;
        table.validate()?;
        let chi: RepCharacter =
            chi.ok_or_else(|| anyhow!("the table file has no rep_character"))?;
        let q = mckay_quiver(&table, &chi)?;
        let mut b = BoundQuiver::new(q);
        if let Some(det) = &chi.det {
            b.nakayama = Some(nakayama_from_det(&table, det)?);
        }
        return Ok(Outcome::ok(Document::new(b).to_json()));
    }
    let weights = parse_weights(args.weights.as_deref().unwrap_or_default())?;
    let spec = AbelianMcKaySpec::new(args.orders.clone(), weights);
    let b = abelian_bound_mckay(&spec)?;
    let mut doc = match args.side {
        Sides::Rho => Document::new(b.rho_side),
        Sides::Theta => Document::new(b.theta_side),
        Sides::Both => {
            let mut doc = Document::new(b.rho_side);
            doc.dual_relations = Some(b.theta_side.relations);
            doc
        }
    };
    doc.header = Some(spec);
    Ok(Outcome::ok(doc.to_json()))
}

fn returning(args: &ReturningArgs) -> Result<Outcome> {
    let doc = read_document(args.io.input.as_ref())?;
    let out = sides_document(
        args.side,
        || Ok(mckay_returning_arrows_rho(&side_of(&doc, Side::Rho)?)?),
        || {
            Ok(mckay_returning_arrows_theta(
                &side_of(&doc, Side::Theta)?,
                args.twist.into(),
            )?)
        },
    )?;
    Ok(Outcome::ok(out.to_json()))
}

fn cover(args: &CoverArgs) -> Result<Outcome> {
    let doc = read_document(args.io.input.as_ref())?;
    let twist = args.twist.into();
    let build = |side: Side| -> Result<BoundQuiver> {
        let b = side_of(&doc, side)?;
        let cover_side = match side {
            Side::Rho => CoverSide::Rho,
            Side::Theta => CoverSide::Theta,
        };
        let mut out = cover_with_relation_sets(&b, args.m, cover_side, twist, &[&b.relations])?;
        Ok(out.remove(0))
    };
    let out = sides_document(args.side, || build(Side::Rho), || build(Side::Theta))?;
    Ok(Outcome::ok(out.to_json()))
}

fn run_cone(args: &IoArgs) -> Result<Outcome> {
    let doc = read_document(args.input.as_ref())?;
    Ok(Outcome::ok(Document::new(cone(&doc.bound)?).to_json()))
}

fn truncate_check(args: &TruncateArgs) -> Result<Outcome> {
    let sub = side_of(&read_document(Some(&args.sub))?, args.side)?;
    let ambient = side_of(&read_document(Some(&args.ambient))?, args.side)?;
    let w: QuiverEmbedding =
        serde_json::from_str(&read_input(Some(&args.embedding))?).context("invalid embedding")?;
    let report = if args.translation {
        mckay_truncation_check(&w, &sub, &ambient)
    } else {
        is_truncation(&w, &sub, &ambient)
    };
    let mut text = serde_json::to_string_pretty(&report)?;
    text.push('\n');
    Ok(Outcome {
        text,
        passed: report.verdict,
    })
}

fn verify_main(args: &VerifyArgs) -> Result<Outcome> {
    if args.n == 0 {
        bail!("--n must be at least 1");
    }
    let steps = pipeline_tower(args.s, args.n, args.group_order, args.m)?;
    let passed = steps.iter().all(|s| s.verdict());
    if args.json {
        let steps: Vec<_> = steps
            .iter()
            .map(|s| {
                serde_json::json!({
                    "m": s.m,
                    "m_lower_bound": s.m_lower_bound,
                    "rejected": s.rejected,
                    "cone_vertices": s.cone.quiver.vertex_count(),
                    "cover_vertices": s.cover.quiver.vertex_count(),
                    "extended_group": s.extended_spec,
                    "report": s.report,
                    "quotient_comparison": s.quotient_comparison,
                    "cover_relations_match": s.cover_relations_match,
                    "verdict": s.verdict(),
                })
            })
            .collect();
        let value = serde_json::json!({ "steps": steps, "verdict": passed });
        let mut text = serde_json::to_string_pretty(&value)?;
        text.push('\n');
        return Ok(Outcome { text, passed });
    }
    let yes = |b: bool| if b { "ok" } else { "FAILED" };
    let mut text = String::new();
    for (k, s) in steps.iter().enumerate() {
        let r = &s.report;
        let _ = writeln!(
            text,
            "step {}: cone of T^{}_{} ({} vertices)",
            k + 1,
            k + 1,
            args.s,
            s.cone.quiver.vertex_count()
        );
        let _ = writeln!(
            text,
            "  cover: m = {} (lower bound {}), {} vertices, group orders {:?}",
            s.m,
            s.m_lower_bound,
            s.cover.quiver.vertex_count(),
            s.extended_spec.orders
        );
        for (m, why) in &s.rejected {
            let _ = writeln!(text, "  m = {m} rejected: {why}");
        }
        let _ = writeln!(text, "  embedding: {}", yes(r.embedding.is_embedding()));
        let _ = writeln!(text, "  full subquiver: {}", yes(r.embedding.full));
        let _ = writeln!(text, "  relations induced: {}", yes(r.relations_induced));
        let _ = writeln!(
            text,
            "  translation matches Nakayama: {}",
            yes(r.translation_commutes == Some(true))
        );
        let _ = writeln!(
            text,
            "  quotient by the complement: {} through degree {}",
            yes(s.quotient_comparison.equal),
            s.quotient_comparison.max_degree
        );
        let _ = writeln!(
            text,
            "  cover relations match the extended group: {}",
            yes(s.cover_relations_match)
        );
        for w in r
            .embedding
            .witnesses
            .iter()
            .chain(&r.translation_witnesses)
            .chain(&s.quotient_comparison.mismatches)
        {
            let _ = writeln!(text, "  witness: {w}");
        }
        let _ = writeln!(text, "  verdict: {}", s.verdict());
    }
    let _ = writeln!(text, "verdict: {passed}");
    Ok(Outcome { text, passed })
}

fn dims(args: &DimsArgs) -> Result<Outcome> {
    let doc = read_document(args.io.input.as_ref())?;
    let b = side_of(&doc, args.side)?;
    let n = b.quiver.vertex_count();
    if let Some(bad) = args.drop_vertices.iter().find(|v| **v >= n) {
        bail!("vertex {bad} is out of range for {n} vertices");
    }
    let drop: Vec<VertexId> = args.drop_vertices.iter().map(|v| VertexId(*v)).collect();
    let dims = quotient_dims(&b, args.max_degree, Some(&drop))?;
    let text = if args.json {
        let mut s = serde_json::to_string_pretty(&dims.to_json())?;
        s.push('\n');
        s
    } else {
        dims.dump()
    };
    Ok(Outcome::ok(text))
}

fn check_stq(args: &StqArgs) -> Result<Outcome> {
    let doc = read_document(args.io.input.as_ref())?;
    let b = side_of(&doc, args.side)?;
    let report = stable_translation_check(&b, args.loewy)?;
    let mut text = serde_json::to_string_pretty(&report)?;
    text.push('\n');
    Ok(Outcome {
        text,
        passed: report.passed,
    })
}

fn export(args: &ExportArgs) -> Result<Outcome> {
    let doc = read_document(args.io.input.as_ref())?;
    let text = match args.format {
        Format::Dot => export_dot(&side_of(&doc, args.side)?),
        Format::Json => doc.to_json(),
    };
    Ok(Outcome::ok(text))
}

fn output_of(command: &Command) -> Option<&PathBuf> {
    match command {
        Command::Mckay(a) => a.output.as_ref(),
        Command::TAlgebra(a) => a.output.as_ref(),
        Command::Returning(a) => a.io.output.as_ref(),
        Command::Cover(a) => a.io.output.as_ref(),
        Command::Cone(a) => a.output.as_ref(),
        Command::Dims(a) => a.io.output.as_ref(),
        Command::CheckStq(a) => a.io.output.as_ref(),
        Command::Export(a) => a.io.output.as_ref(),
        Command::TruncateCheck(_) | Command::VerifyMain(_) => None,
    }
}

/// Runs one command and writes its output.
pub fn run(cli: &Cli) -> Result<bool> {
    let outcome = match &cli.command {
        Command::Mckay(a) => mckay(a)?,
        Command::Returning(a) => returning(a)?,
        Command::Cover(a) => cover(a)?,
        Command::Cone(a) => run_cone(a)?,
        Command::TAlgebra(a) => Outcome::ok(Document::new(t_algebra(a.s, a.n)?).to_json()),
        Command::TruncateCheck(a) => truncate_check(a)?,
        Command::VerifyMain(a) => verify_main(a)?,
        Command::Dims(a) => dims(a)?,
        Command::CheckStq(a) => check_stq(a)?,
        Command::Export(a) => export(a)?,
    };
    write_output(output_of(&cli.command), &outcome.text)?;
    Ok(outcome.passed)
}
