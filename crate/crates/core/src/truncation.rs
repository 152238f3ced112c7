//! Quiver embeddings, induced relations, truncation checks and the pipeline
//! that embeds the cone of a truncation into a cyclic cover.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructions::{
    cone, cyclic_cover, linear_a, translation_depths, ConstructionError, Side, SignTwist,
};
use crate::linalg::{integer_row, Echelon};
use crate::mckay::{abelian_bound_mckay, AbelianMcKaySpec, McKayError};
use crate::path_algebra::{GradedDims, PathAlgebraError, QuotientEngine};
use crate::quiver::{
    quiver_equal_under, ArrowId, ArrowLabel, BoundQuiver, Path, PathCombo, Quiver,
    QuiverIsoWitness, VertexId, VertexLabel,
};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TruncationError {
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    McKay(#[from] McKayError),
    #[error(transparent)]
    PathAlgebra(#[from] PathAlgebraError),
    #[error("pipeline precondition failed: {}", .0.summary())]
    Precondition(Box<TruncationReport>),
    #[error("cover degree {requested} is below the minimal {minimal}")]
    CoverTooSmall { requested: u32, minimal: u32 },
    #[error("cannot build the embedding of the cone: {0}")]
    Lift(String),
}

/// `ω = (ω_0, ω_1)` from a quiver `Q'` into a quiver `Q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverEmbedding {
    pub vertex_map: Vec<VertexId>,
    pub arrow_map: Vec<ArrowId>,
}

impl QuiverEmbedding {
    pub fn identity(q: &Quiver) -> Self {
        QuiverEmbedding {
            vertex_map: q.vertex_ids().collect(),
            arrow_map: (0..q.arrow_count()).map(ArrowId).collect(),
        }
    }

    pub fn image(&self) -> BTreeSet<VertexId> {
        self.vertex_map.iter().copied().collect()
    }

    pub fn map_combo(&self, c: &PathCombo) -> PathCombo {
        c.map(|v| self.vertex_map[v.0], |a| self.arrow_map[a.0])
    }

    /// `iso ∘ self`.
    pub fn then(&self, iso: &QuiverIsoWitness) -> QuiverEmbedding {
        QuiverEmbedding {
            vertex_map: self
                .vertex_map
                .iter()
                .map(|v| iso.vertex_map[v.0])
                .collect(),
            arrow_map: self.arrow_map.iter().map(|a| iso.arrow_map[a.0]).collect(),
        }
    }
}

/// The two embedding conditions, plus fullness of the image.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbeddingReport {
    /// Endpoints commute with the maps.
    pub compatible: bool,
    pub injective: bool,
    /// Every arrow of `Q` between image vertices is an image arrow.
    pub full: bool,
    pub witnesses: Vec<String>,
}

impl EmbeddingReport {
    pub fn is_embedding(&self) -> bool {
        self.compatible && self.injective
    }
}

pub fn embedding_report(w: &QuiverEmbedding, sub: &Quiver, amb: &Quiver) -> EmbeddingReport {
    let mut witnesses = Vec::new();
    let total = w.vertex_map.len() == sub.vertex_count()
        && w.arrow_map.len() == sub.arrow_count()
        && w.vertex_map.iter().all(|v| v.0 < amb.vertex_count())
        && w.arrow_map.iter().all(|a| a.0 < amb.arrow_count());
    if !total {
        witnesses.push("maps are not total or point outside the target quiver".into());
        return EmbeddingReport {
            compatible: false,
            injective: false,
            full: false,
            witnesses,
        };
    }
    let mut compatible = true;
    for a in sub.arrows() {
        let image = amb.arrow(w.arrow_map[a.id.0]);
        if image.source != w.vertex_map[a.source.0] || image.target != w.vertex_map[a.target.0] {
            compatible = false;
            witnesses.push(format!("arrow {} does not commute with endpoints", a.label));
        }
    }
    let vertices: BTreeSet<_> = w.vertex_map.iter().collect();
    let arrows: BTreeSet<_> = w.arrow_map.iter().copied().collect();
    let injective = vertices.len() == w.vertex_map.len() && arrows.len() == w.arrow_map.len();
    if !injective {
        witnesses.push("vertex or arrow map is not injective".into());
    }
    let mut full = true;
    for a in amb.arrows() {
        if vertices.contains(&a.source) && vertices.contains(&a.target) && !arrows.contains(&a.id) {
            full = false;
            witnesses.push(format!(
                "arrow {} between image vertices is not in the image",
                a.label
            ));
        }
    }
    EmbeddingReport {
        compatible,
        injective,
        full,
        witnesses,
    }
}

/// Conditions (i) and (ii): endpoints commute, both maps injective.
pub fn validate_embedding(w: &QuiverEmbedding, sub: &Quiver, amb: &Quiver) -> bool {
    embedding_report(w, sub, amb).is_embedding()
}

/// Terms of `a` whose paths stay inside `image`, through every vertex.
pub fn component(q: &Quiver, a: &PathCombo, image: &BTreeSet<VertexId>) -> PathCombo {
    a.filter_terms(|p| p.vertices(q).iter().all(|v| image.contains(v)))
}

/// Nonzero components of `ρ`, deduplicated up to scalar.
pub fn induced_relations(
    q: &Quiver,
    relations: &[PathCombo],
    image: &BTreeSet<VertexId>,
) -> Vec<PathCombo> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for r in relations {
        let c = component(q, r, image);
        let Some(lead) = c.terms().values().next().cloned() else {
            continue;
        };
        let key: Vec<(Path, Rational)> = c
            .terms()
            .iter()
            .map(|(p, h)| (p.clone(), h / &lead))
            .collect();
        if seen.insert(key) {
            out.push(c);
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellMismatch {
    pub source: VertexId,
    pub target: VertexId,
    pub length: usize,
    pub rank_mapped: usize,
    pub rank_induced: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TruncationReport {
    pub embedding: EmbeddingReport,
    pub relations_induced: bool,
    pub mismatched_cells: Vec<CellMismatch>,
    /// Present for checks against a bound McKay quiver.
    pub translation_commutes: Option<bool>,
    pub translation_witnesses: Vec<String>,
    pub verdict: bool,
}

impl TruncationReport {
    pub fn summary(&self) -> String {
        let mut parts = Vec::new();
        if !self.embedding.is_embedding() {
            parts.push("not a quiver embedding".to_string());
        }
        if !self.embedding.full {
            parts.push("image is not a full subquiver".to_string());
        }
        if !self.relations_induced {
            parts.push(format!(
                "relations differ in {} cells",
                self.mismatched_cells.len()
            ));
        }
        if self.translation_commutes == Some(false) {
            parts.push("translation does not commute with ν".to_string());
        }
        if parts.is_empty() {
            "truncation verified".into()
        } else {
            parts.join("; ")
        }
    }

    fn recompute(&mut self) {
        self.verdict = self.embedding.is_embedding()
            && self.embedding.full
            && self.relations_induced
            && self.translation_commutes != Some(false);
    }
}

type CellKey = (VertexId, VertexId, usize);

/// Embedding conditions, fullness, and span equality of `ω(ρ')` and the
/// components of `ρ` in every `(source, target, length)` cell.
pub fn is_truncation(
    w: &QuiverEmbedding,
    sub: &BoundQuiver,
    amb: &BoundQuiver,
) -> TruncationReport {
    let embedding = embedding_report(w, &sub.quiver, &amb.quiver);
    let mut report = TruncationReport {
        embedding,
        relations_induced: false,
        mismatched_cells: Vec::new(),
        translation_commutes: None,
        translation_witnesses: Vec::new(),
        verdict: false,
    };
    if !report.embedding.is_embedding() {
        return report;
    }
    let mapped: Vec<PathCombo> = sub
        .relations
        .iter()
        .map(|r| w.map_combo(r))
        .filter(|r| !r.is_zero())
        .collect();
    let induced = induced_relations(&amb.quiver, &amb.relations, &w.image());
    let (left, right) = paired_spans(&mapped, &induced);
    let keys: BTreeSet<CellKey> = left.keys().chain(right.keys()).copied().collect();
    let empty = Echelon::new();
    for key in keys {
        let a = left.get(&key).unwrap_or(&empty);
        let b = right.get(&key).unwrap_or(&empty);
        if !a.span_equals(b) {
            report.mismatched_cells.push(CellMismatch {
                source: key.0,
                target: key.1,
                length: key.2,
                rank_mapped: a.rank(),
                rank_induced: b.rank(),
            });
        }
    }
    report.relations_induced = report.mismatched_cells.is_empty();
    report.recompute();
    report
}

/// Spans per cell over one shared path index, so columns are comparable.
fn paired_spans(
    left: &[PathCombo],
    right: &[PathCombo],
) -> (BTreeMap<CellKey, Echelon>, BTreeMap<CellKey, Echelon>) {
    let mut index: HashMap<Path, usize> = HashMap::new();
    let mut span = |set: &[PathCombo]| {
        let mut cells: BTreeMap<CellKey, Echelon> = BTreeMap::new();
        for r in set {
            let row = integer_row(r.terms().iter().map(|(p, h)| {
                let next = index.len();
                (*index.entry(p.clone()).or_insert(next), h.clone())
            }))
            .0;
            cells
                .entry((r.source(), r.target(), r.length()))
                .or_default()
                .insert(row);
        }
        cells
    };
    let l = span(left);
    let r = span(right);
    (l, r)
}

/// [`is_truncation`] plus `ω_0 τ = ν ω_0` wherever `τ` is defined.
pub fn mckay_truncation_check(
    w: &QuiverEmbedding,
    b: &BoundQuiver,
    mckay: &BoundQuiver,
) -> TruncationReport {
    let mut report = is_truncation(w, b, mckay);
    let mut commutes = true;
    match (&b.translation, &mckay.nakayama) {
        (Some(tau), Some(nu)) if report.embedding.is_embedding() => {
            for (x, tx) in tau {
                let lhs = w.vertex_map[tx.0];
                let rhs = nu[w.vertex_map[x.0].0];
                if lhs != rhs {
                    commutes = false;
                    report.translation_witnesses.push(format!(
                        "ω(τ {}) = {} but ν(ω {}) = {}",
                        b.quiver.vertex(*x).label,
                        mckay.quiver.vertex(lhs).label,
                        b.quiver.vertex(*x).label,
                        mckay.quiver.vertex(rhs).label
                    ));
                }
            }
        }
        (None, _) => {
            commutes = false;
            report
                .translation_witnesses
                .push("source has no translation".into());
        }
        (_, None) => {
            commutes = false;
            report
                .translation_witnesses
                .push("target has no Nakayama permutation".into());
        }
        _ => commutes = false,
    }
    report.translation_commutes = Some(commutes);
    report.recompute();
    report
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplementQuotientReport {
    pub equal: bool,
    pub max_degree: usize,
    pub sub_totals: Vec<usize>,
    pub ambient_totals: Vec<usize>,
    pub mismatches: Vec<String>,
}

/// Compares `kQ'/(ρ')` with `kQ/(ρ + (E))`, `E` the vertices outside the
/// image, cell by cell up to `max_degree`.
pub fn complement_quotient_check(
    w: &QuiverEmbedding,
    sub: &BoundQuiver,
    amb: &BoundQuiver,
    max_degree: usize,
) -> Result<ComplementQuotientReport, TruncationError> {
    let mut engine = QuotientEngine::new(&sub.quiver, &sub.relations, &[])?;
    engine.extend_to(max_degree);
    let sub_dims = engine.dims();
    let amb_dims = ambient_dims(w, amb, max_degree)?;
    Ok(compare_dims(w, sub, &sub_dims, &amb_dims))
}

/// Same as [`complement_quotient_check`] with the bound chosen as the first degree in which
/// `kQ'/(ρ')` vanishes (capped at `cap`).
pub fn complement_quotient_check_auto(
    w: &QuiverEmbedding,
    sub: &BoundQuiver,
    amb: &BoundQuiver,
    cap: usize,
) -> Result<ComplementQuotientReport, TruncationError> {
    let mut engine = QuotientEngine::new(&sub.quiver, &sub.relations, &[])?;
    let mut d = 0;
    loop {
        engine.extend_to(d);
        let dims = engine.dims();
        if dims.total_in_degree(d) == 0 || d >= cap {
            let amb_dims = ambient_dims(w, amb, d)?;
            return Ok(compare_dims(w, sub, &dims, &amb_dims));
        }
        d += 1;
    }
}

fn ambient_dims(
    w: &QuiverEmbedding,
    amb: &BoundQuiver,
    max_degree: usize,
) -> Result<GradedDims, TruncationError> {
    let image = w.image();
    let outside: Vec<VertexId> = amb
        .quiver
        .vertex_ids()
        .filter(|v| !image.contains(v))
        .collect();
    let mut engine = QuotientEngine::new(&amb.quiver, &amb.relations, &outside)?;
    engine.extend_to(max_degree);
    Ok(engine.dims())
}

fn compare_dims(
    w: &QuiverEmbedding,
    sub: &BoundQuiver,
    sub_dims: &GradedDims,
    amb_dims: &GradedDims,
) -> ComplementQuotientReport {
    let mut mismatches = Vec::new();
    let q = &sub.quiver;
    for d in 0..=sub_dims.max_degree {
        for i in q.vertex_ids() {
            for j in q.vertex_ids() {
                let a = sub_dims.get(i, j, d);
                let b = amb_dims.get(w.vertex_map[i.0], w.vertex_map[j.0], d);
                if a != b {
                    mismatches.push(format!(
                        "degree {d}, {} → {}: {a} versus {b}",
                        q.vertex(i).label,
                        q.vertex(j).label
                    ));
                }
            }
        }
    }
    // the ambient side restricted to the image carries all of its dimension
    let amb_total = amb_dims.total();
    let sub_total = sub_dims.total();
    if mismatches.is_empty() && amb_total != sub_total {
        mismatches.push(format!("totals differ: {sub_total} versus {amb_total}"));
    }
    ComplementQuotientReport {
        equal: mismatches.is_empty(),
        max_degree: sub_dims.max_degree,
        sub_totals: sub_dims.totals_by_degree(),
        ambient_totals: amb_dims.totals_by_degree(),
        mismatches,
    }
}

/// Everything built by one step of the pipeline.
#[derive(Debug, Clone)]
pub struct PipelineOutput {
    pub m: u32,
    pub cone: BoundQuiver,
    pub cover: BoundQuiver,
    /// `ω̃` from the cone into the cover.
    pub embedding: QuiverEmbedding,
    pub report: TruncationReport,
    pub quotient_comparison: ComplementQuotientReport,
    /// The extended group `G̃ = G' × C_m` as a diagonal group.
    pub extended_spec: AbelianMcKaySpec,
    /// `1 + max depth of τ`: no smaller cover separates the τ-orbits.
    pub m_lower_bound: u32,
    /// Covers tried below `m` and why each one failed.
    pub rejected: Vec<(u32, String)>,
    /// Cover → bound McKay quiver of `G̃`, matching `(i, t)` with `i ++ [t]`.
    pub cover_to_extended: QuiverIsoWitness,
    /// Whether that witness also carries the cover relations onto `ρ_{G̃}`.
    pub cover_relations_match: bool,
}

impl PipelineOutput {
    pub fn verdict(&self) -> bool {
        self.report.verdict && self.quotient_comparison.equal && self.cover_relations_match
    }

    /// `ω̃` transported into the bound McKay quiver of `G̃`.
    pub fn embedding_into_extended(&self) -> QuiverEmbedding {
        self.embedding.then(&self.cover_to_extended)
    }
}

fn level_of(label: &VertexLabel) -> Option<(&VertexLabel, i64)> {
    match label {
        VertexLabel::Level(base, d) => Some((base, *d)),
        _ => None,
    }
}

/// Upper end of the search for `m`, as a multiple of the lower bound.
const M_SEARCH_FACTOR: u32 = 2;

/// One step: cone of `base` into the `m`-fold cover of the returning-arrow
/// McKay quiver of `spec`.
///
/// Without an explicit `m` the smallest cover that verifies is used,
/// searching upward from `1 + max depth of τ`. That bound alone can be too
/// small: a returning arrow from depth 0 wraps around to depth `m − 1` and
/// may join two image vertices, breaking fullness. Covers with
/// `m ≥ 2 + max depth` have no image vertices at the wrapped level.
pub fn main_theorem_pipeline(
    base: &BoundQuiver,
    spec: &AbelianMcKaySpec,
    w: &QuiverEmbedding,
    m: Option<u32>,
) -> Result<PipelineOutput, TruncationError> {
    let mckay = abelian_bound_mckay(spec)?.rho_side;
    let pre = mckay_truncation_check(w, base, &mckay);
    if !pre.verdict {
        return Err(TruncationError::Precondition(Box::new(pre)));
    }
    let tau = base
        .translation
        .as_ref()
        .ok_or(ConstructionError::MissingTranslation)?;
    let depths = translation_depths(&base.quiver, tau)?;
    let lower = 1 + depths.iter().copied().max().unwrap_or(0) as u32;
    if let Some(m) = m {
        if m < lower {
            return Err(TruncationError::CoverTooSmall {
                requested: m,
                minimal: lower,
            });
        }
    }
    let cone_b = cone(base)?;
    let candidates: Vec<u32> = match m {
        Some(m) => vec![m],
        None => (lower..=lower * M_SEARCH_FACTOR).collect(),
    };
    let mut rejected = Vec::new();
    let mut attempt = None;
    for (k, &mk) in candidates.iter().enumerate() {
        let cover = cyclic_cover(&mckay, mk, Side::Rho, SignTwist::Minus)?;
        let embedding = lift_embedding(w, base, &mckay, &cone_b, &cover, mk)?;
        let report = mckay_truncation_check(&embedding, &cone_b, &cover);
        // the last candidate is kept even when it fails, so its report shows why
        if report.verdict || k + 1 == candidates.len() {
            attempt = Some((mk, cover, embedding, report));
            break;
        }
        rejected.push((mk, report.summary()));
    }
    let (m, cover, embedding, report) = attempt.expect("at least one candidate");
    let cap = cone_b.quiver.vertex_count() + 1;
    let quotient_comparison = complement_quotient_check_auto(&embedding, &cone_b, &cover, cap)?;

    let extended_spec = spec.extended(m);
    let extended = abelian_bound_mckay(&extended_spec)?.rho_side;
    let cover_to_extended = cover_witness(&cover, &extended, spec)?;
    let cover_relations_match = relations_match(&cover_to_extended, &cover, &extended);
    Ok(PipelineOutput {
        m,
        cone: cone_b,
        cover,
        embedding,
        report,
        quotient_comparison,
        extended_spec,
        m_lower_bound: lower,
        rejected,
        cover_to_extended,
        cover_relations_match,
    })
}

fn modulo(d: i64, m: u32) -> i64 {
    d.rem_euclid(m as i64)
}

/// `ω̃_0(x, d) = (ω_0 x, −d)`, `ω̃_1(α, d) = (ω_1 α, −d)`,
/// `ω̃((x, d)_1) = (β_{ω_0 x}, −d)`, read off the labels.
fn lift_embedding(
    w: &QuiverEmbedding,
    base: &BoundQuiver,
    mckay: &BoundQuiver,
    cone_b: &BoundQuiver,
    cover: &BoundQuiver,
    m: u32,
) -> Result<QuiverEmbedding, TruncationError> {
    let err = |msg: String| TruncationError::Lift(msg);
    let base_vertices = base.quiver.vertex_label_index();
    let base_arrows = base.quiver.arrow_label_index();
    let cover_vertices = cover.quiver.vertex_label_index();
    let cover_arrows = cover.quiver.arrow_label_index();
    let image_label = |x: &VertexLabel| -> Result<VertexLabel, TruncationError> {
        let v = base_vertices
            .get(x)
            .ok_or_else(|| err(format!("no base vertex labelled {x}")))?;
        Ok(mckay.quiver.vertex(w.vertex_map[v.0]).label.clone())
    };

    let mut vertex_map = Vec::with_capacity(cone_b.quiver.vertex_count());
    for v in cone_b.quiver.vertices() {
        let (x, d) =
            level_of(&v.label).ok_or_else(|| err(format!("unleveled vertex {}", v.label)))?;
        let target = VertexLabel::level(image_label(x)?, modulo(-d, m));
        let id = cover_vertices
            .get(&target)
            .ok_or_else(|| err(format!("no cover vertex {target}")))?;
        vertex_map.push(*id);
    }
    let mut arrow_map = Vec::with_capacity(cone_b.quiver.arrow_count());
    for a in cone_b.quiver.arrows() {
        let target = match &a.label {
            ArrowLabel::Leveled(inner, d) => {
                let id = base_arrows
                    .get(inner.as_ref())
                    .ok_or_else(|| err(format!("no base arrow labelled {inner}")))?;
                let image = &mckay.quiver.arrow(w.arrow_map[id.0]).label;
                ArrowLabel::leveled(image.clone(), modulo(-d, m))
            }
            ArrowLabel::Connecting(v) => {
                let (x, d) = level_of(v).ok_or_else(|| err(format!("bad connecting label {v}")))?;
                ArrowLabel::leveled(ArrowLabel::Returning(image_label(x)?), modulo(-d, m))
            }
            other => return Err(err(format!("unexpected cone arrow {other}"))),
        };
        let id = cover_arrows
            .get(&target)
            .ok_or_else(|| err(format!("no cover arrow {target}")))?;
        arrow_map.push(*id);
    }
    Ok(QuiverEmbedding {
        vertex_map,
        arrow_map,
    })
}

/// Vertex `(i, t)` of the cover ↦ residue tuple `i ++ [t]`; arrows follow by
/// weight: `(α_j(i), t) ↦ α_j(i, t)` and `(β_i, t) ↦` the last coordinate.
fn cover_witness(
    cover: &BoundQuiver,
    extended: &BoundQuiver,
    spec: &AbelianMcKaySpec,
) -> Result<QuiverIsoWitness, TruncationError> {
    let index = extended.quiver.vertex_label_index();
    let n = spec.dimension();
    let mut vertex_map = Vec::with_capacity(cover.quiver.vertex_count());
    for v in cover.quiver.vertices() {
        let (base, t) = level_of(&v.label)
            .ok_or_else(|| TruncationError::Lift(format!("unleveled cover vertex {}", v.label)))?;
        let mut coords = match base {
            VertexLabel::Residue(r) => vec![*r],
            VertexLabel::Tuple(t) => t.clone(),
            other => return Err(TruncationError::Lift(format!("non-residue label {other}"))),
        };
        coords.push(t);
        let id = index
            .get(&VertexLabel::Tuple(coords.clone()))
            .ok_or_else(|| TruncationError::Lift(format!("no vertex {coords:?} in G̃")))?;
        vertex_map.push(*id);
    }
    // arrow j out of vertex i in the extended quiver has id i·(n+1) + j
    let mut arrow_map = Vec::with_capacity(cover.quiver.arrow_count());
    for a in cover.quiver.arrows() {
        let source = vertex_map[a.source.0].0;
        let j = match &a.label {
            ArrowLabel::Leveled(inner, _) if inner.is_returning() => n,
            ArrowLabel::Leveled(inner, _) => {
                let ArrowLabel::Named(name) = inner.as_ref() else {
                    return Err(TruncationError::Lift(format!(
                        "unexpected cover arrow {}",
                        a.label
                    )));
                };
                let digits: String = name
                    .chars()
                    .skip(1)
                    .take_while(char::is_ascii_digit)
                    .collect();
                digits
                    .parse::<usize>()
                    .map_err(|_| TruncationError::Lift(format!("unexpected arrow name {name}")))?
                    - 1
            }
            other => {
                return Err(TruncationError::Lift(format!(
                    "unexpected cover arrow {other}"
                )))
            }
        };
        arrow_map.push(ArrowId(source * (n + 1) + j));
    }
    let witness = QuiverIsoWitness {
        vertex_map,
        arrow_map,
    };
    if !quiver_equal_under(&witness, &cover.quiver, &extended.quiver) {
        return Err(TruncationError::Lift(
            "cover is not the McKay quiver of the extended group".into(),
        ));
    }
    Ok(witness)
}

fn relations_match(w: &QuiverIsoWitness, a: &BoundQuiver, b: &BoundQuiver) -> bool {
    let mapped: Vec<PathCombo> = a
        .relations
        .iter()
        .map(|r| r.map(|v| w.vertex_map[v.0], |x| w.arrow_map[x.0]))
        .collect();
    let (l, r) = paired_spans(&mapped, &b.relations);
    let keys: BTreeSet<CellKey> = l.keys().chain(r.keys()).copied().collect();
    let empty = Echelon::new();
    keys.into_iter().all(|k| {
        l.get(&k)
            .unwrap_or(&empty)
            .span_equals(r.get(&k).unwrap_or(&empty))
    })
}

/// `ς_1: A_s → Z_r`, `i ↦ i`, `a_i ↦ α(i)`.
pub fn linear_into_cyclic(
    s: usize,
    r: u32,
) -> Result<(BoundQuiver, AbelianMcKaySpec, QuiverEmbedding), TruncationError> {
    let base = linear_a(s);
    let spec = AbelianMcKaySpec::cyclic(r, 1);
    let vertex_map = (1..=s).map(|i| VertexId(i % r as usize)).collect();
    // arrow α(i) of the cyclic quiver has id i
    let arrow_map = (1..s).map(|i| ArrowId(i % r as usize)).collect();
    Ok((
        base,
        spec,
        QuiverEmbedding {
            vertex_map,
            arrow_map,
        },
    ))
}

/// `n` pipeline steps starting from `A_s` inside `Z_r`; each step feeds the
/// cone and `G̃` of the previous one into the next.
pub fn pipeline_tower(
    s: usize,
    n: usize,
    r: u32,
    m: Option<u32>,
) -> Result<Vec<PipelineOutput>, TruncationError> {
    let (mut base, mut spec, mut w) = linear_into_cyclic(s, r)?;
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let step = main_theorem_pipeline(&base, &spec, &w, m)?;
        base = step.cone.clone();
        spec = step.extended_spec.clone();
        w = step.embedding_into_extended();
        out.push(step);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_embeddings() {
        let b = crate::constructions::t_algebra(3, 2).unwrap();
        let id = QuiverEmbedding::identity(&b.quiver);
        assert!(validate_embedding(&id, &b.quiver, &b.quiver));
        assert!(is_truncation(&id, &b, &b).verdict);
    }

    #[test]
    fn example_embeddings() {
        for s in 2..=4 {
            let (base, spec, w) = linear_into_cyclic(s, s as u32 + 1).unwrap();
            let m = abelian_bound_mckay(&spec).unwrap().rho_side;
            assert!(validate_embedding(&w, &base.quiver, &m.quiver));
            let report = mckay_truncation_check(&w, &base, &m);
            assert!(report.verdict, "{}", report.summary());
            let mut flipped = m.clone();
            flipped.nakayama = flipped.nakayama_inverse();
            assert!(!mckay_truncation_check(&w, &base, &flipped).verdict);
        }
        let (base, _, mut w) = linear_into_cyclic(3, 4).unwrap();
        w.vertex_map[1] = w.vertex_map[0];
        let m = abelian_bound_mckay(&AbelianMcKaySpec::cyclic(4, 1))
            .unwrap()
            .rho_side;
        assert!(!validate_embedding(&w, &base.quiver, &m.quiver));
    }

    #[test]
    fn cover_search_skips_wrapped_levels() {
        let steps = pipeline_tower(3, 2, 4, None).unwrap();
        assert_eq!((steps[0].m, steps[0].m_lower_bound), (3, 3));
        let second = &steps[1];
        assert_eq!((second.m, second.m_lower_bound), (4, 3));
        assert!(second.verdict());
        assert_eq!(second.rejected.len(), 1);
        assert!(second.rejected[0].1.contains("full"));

        // forcing the lower bound keeps the failing report
        let (base, spec, w) = linear_into_cyclic(3, 4).unwrap();
        let first = main_theorem_pipeline(&base, &spec, &w, None).unwrap();
        let forced = main_theorem_pipeline(
            &first.cone,
            &first.extended_spec,
            &first.embedding_into_extended(),
            Some(3),
        )
        .unwrap();
        assert!(!forced.report.embedding.full);
        assert!(forced.rejected.is_empty());
    }

    #[test]
    fn components() {
        // Z_4, weights (1,3): commutation relations mix i → i+1 → i and
        // i → i−1 → i
        let spec = AbelianMcKaySpec::new(vec![4], vec![vec![1], vec![3]]);
        let b = abelian_bound_mckay(&spec).unwrap().rho_side;
        let image: BTreeSet<VertexId> = [0, 1, 2].into_iter().map(VertexId).collect();
        let at1 = b
            .relations
            .iter()
            .find(|r| r.source() == VertexId(1))
            .unwrap();
        assert_eq!(component(&b.quiver, at1, &image), *at1);
        let at0 = b
            .relations
            .iter()
            .find(|r| r.source() == VertexId(0))
            .unwrap();
        let c = component(&b.quiver, at0, &image);
        assert_eq!(c.len(), 1);
        let at3 = b
            .relations
            .iter()
            .find(|r| r.source() == VertexId(3))
            .unwrap();
        assert!(component(&b.quiver, at3, &image).is_zero());
        let induced = induced_relations(&b.quiver, &b.relations, &image);
        assert_eq!(induced.len(), 3);
        assert!(induced.iter().all(|r| !r.is_zero()));
    }

    #[test]
    fn corrupted_relations_are_detected() {
        let (mut base, spec, w) = linear_into_cyclic(3, 4).unwrap();
        let m = abelian_bound_mckay(&spec).unwrap().rho_side;
        let p = Path::from_arrows(&base.quiver, &[ArrowId(1), ArrowId(0)]).unwrap();
        base.relations.push(PathCombo::from_path(p));
        let report = is_truncation(&w, &base, &m);
        assert!(!report.verdict);
        assert_eq!(report.mismatched_cells.len(), 1);
        let prop = complement_quotient_check(&w, &base, &m, 3).unwrap();
        assert!(!prop.equal);
    }

    #[test]
    fn complement_quotients_on_linear_quivers() {
        for s in 2..=4 {
            let (base, spec, w) = linear_into_cyclic(s, s as u32 + 1).unwrap();
            let m = abelian_bound_mckay(&spec).unwrap().rho_side;
            let report = complement_quotient_check(&w, &base, &m, s).unwrap();
            assert!(report.equal, "{:?}", report.mismatches);
        }
        let b = crate::constructions::t_algebra(2, 2).unwrap();
        let id = QuiverEmbedding::identity(&b.quiver);
        assert!(complement_quotient_check(&id, &b, &b, 3).unwrap().equal);
    }

    #[test]
    fn pipeline_on_a2() {
        let (base, spec, w) = linear_into_cyclic(2, 3).unwrap();
        let out = main_theorem_pipeline(&base, &spec, &w, None).unwrap();
        assert_eq!(out.m, 2);
        assert!(out.report.verdict, "{}", out.report.summary());
        assert!(out.quotient_comparison.equal);
        assert!(out.cover_relations_match);
        assert_eq!(out.extended_spec.orders, vec![3, 2]);
        assert!(matches!(
            main_theorem_pipeline(&base, &spec, &w, Some(1)),
            Err(TruncationError::CoverTooSmall { .. })
        ));
    }

    #[test]
    fn pipeline_rejects_misaligned_translation() {
        let (mut base, spec, w) = linear_into_cyclic(3, 4).unwrap();
        base.translation = Some([(VertexId(2), VertexId(0))].into_iter().collect());
        let err = main_theorem_pipeline(&base, &spec, &w, None).unwrap_err();
        assert!(matches!(err, TruncationError::Precondition(_)));
    }
}
