//! Finite quivers, paths and homogeneous relations.
//!
//! Paths are written the way they compose as maps: `p = α_l ⋯ α_1` applies
//! `α_1` first, so `Path::arrows()[0]` is the *last* arrow traversed.
//! Every relation generator in the crate follows this convention.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ArrowId(pub usize);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Display for ArrowId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a{}", self.0)
    }
}

/// Structured vertex label. Cone and cover vertices `(x, d)` / `(i, t)` are
/// `Level` so that pipelines can take them apart again.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum VertexLabel {
    Name(String),
    Residue(i64),
    Tuple(Vec<i64>),
    Level(Box<VertexLabel>, i64),
}

impl VertexLabel {
    pub fn level(base: VertexLabel, level: i64) -> Self {
        VertexLabel::Level(Box::new(base), level)
    }

    /// Residue label for a group element or character given by its
    /// coordinates: a bare residue for cyclic groups, a tuple otherwise.
    pub fn residues(coords: &[i64]) -> Self {
        match coords {
            [r] => VertexLabel::Residue(*r),
            _ => VertexLabel::Tuple(coords.to_vec()),
        }
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Name(s) => f.write_str(s),
            VertexLabel::Residue(r) => write!(f, "{r}"),
            VertexLabel::Tuple(t) => {
                f.write_str("(")?;
                for (k, r) in t.iter().enumerate() {
                    if k > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{r}")?;
                }
                f.write_str(")")
            }
            VertexLabel::Level(base, d) => write!(f, "({base},{d})"),
        }
    }
}

/// Structured arrow label: plain arrows, returning arrows `β_i`, leveled
/// copies `(α, t)` and the connecting arrows `(x, d)_1` of a cone.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum ArrowLabel {
    Named(String),
    Returning(VertexLabel),
    Leveled(Box<ArrowLabel>, i64),
    Connecting(VertexLabel),
}

impl ArrowLabel {
    pub fn named(name: impl Into<String>) -> Self {
        ArrowLabel::Named(name.into())
    }

    pub fn leveled(base: ArrowLabel, level: i64) -> Self {
        ArrowLabel::Leveled(Box::new(base), level)
    }

    /// True for returning arrows and their leveled copies.
    pub fn is_returning(&self) -> bool {
        match self {
            ArrowLabel::Returning(_) => true,
            ArrowLabel::Leveled(inner, _) => inner.is_returning(),
            _ => false,
        }
    }

    pub fn is_connecting(&self) -> bool {
        match self {
            ArrowLabel::Connecting(_) => true,
            ArrowLabel::Leveled(inner, _) => inner.is_connecting(),
            _ => false,
        }
    }
}

impl fmt::Display for ArrowLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArrowLabel::Named(s) => f.write_str(s),
            ArrowLabel::Returning(v) => write!(f, "b[{v}]"),
            ArrowLabel::Leveled(a, t) => write!(f, "({a},{t})"),
            ArrowLabel::Connecting(v) => write!(f, "{v}_1"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub id: VertexId,
    pub label: VertexLabel,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub id: ArrowId,
    pub source: VertexId,
    pub target: VertexId,
    pub label: ArrowLabel,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("unknown arrow {0}")]
    UnknownArrow(ArrowId),
    #[error("cannot compose: path ending at {left_source} after path ending at {right_target}")]
    NotComposable {
        left_source: VertexId,
        right_target: VertexId,
    },
    #[error("inhomogeneous relation: {0}")]
    InhomogeneousRelation(String),
    #[error("invalid bound quiver: {0}")]
    InvalidBoundQuiver(String),
}

/// A finite quiver. Vertex and arrow ids are dense indices, assigned in
/// insertion order. Loops and parallel arrows are allowed.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<Vertex>,
    arrows: Vec<Arrow>,
    outgoing: Vec<Vec<ArrowId>>,
    incoming: Vec<Vec<ArrowId>>,
}

impl Quiver {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, label: VertexLabel) -> VertexId {
        let id = VertexId(self.vertices.len());
        self.vertices.push(Vertex { id, label });
        self.outgoing.push(Vec::new());
        self.incoming.push(Vec::new());
        id
    }

    pub fn add_arrow(
        &mut self,
        source: VertexId,
        target: VertexId,
        label: ArrowLabel,
    ) -> Result<ArrowId, QuiverError> {
        self.check_vertex(source)?;
        self.check_vertex(target)?;
        let id = ArrowId(self.arrows.len());
        self.arrows.push(Arrow {
            id,
            source,
            target,
            label,
        });
        self.outgoing[source.0].push(id);
        self.incoming[target.0].push(id);
        Ok(id)
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<(), QuiverError> {
        if v.0 < self.vertices.len() {
            Ok(())
        } else {
            Err(QuiverError::UnknownVertex(v))
        }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertices.len()).map(VertexId)
    }

    pub fn vertex(&self, v: VertexId) -> &Vertex {
        &self.vertices[v.0]
    }

    pub fn arrow(&self, a: ArrowId) -> &Arrow {
        &self.arrows[a.0]
    }

    pub fn get_arrow(&self, a: ArrowId) -> Option<&Arrow> {
        self.arrows.get(a.0)
    }

    pub fn outgoing(&self, v: VertexId) -> &[ArrowId] {
        &self.outgoing[v.0]
    }

    pub fn incoming(&self, v: VertexId) -> &[ArrowId] {
        &self.incoming[v.0]
    }

    /// Arrows `source → target` in id order.
    pub fn arrows_between(&self, source: VertexId, target: VertexId) -> Vec<ArrowId> {
        self.outgoing[source.0]
            .iter()
            .copied()
            .filter(|a| self.arrows[a.0].target == target)
            .collect()
    }

    pub fn vertex_label_index(&self) -> HashMap<&VertexLabel, VertexId> {
        let mut map = HashMap::new();
        for v in &self.vertices {
            map.entry(&v.label).or_insert(v.id);
        }
        map
    }

    pub fn arrow_label_index(&self) -> HashMap<&ArrowLabel, ArrowId> {
        let mut map = HashMap::new();
        for a in &self.arrows {
            map.entry(&a.label).or_insert(a.id);
        }
        map
    }

    pub fn find_vertex(&self, label: &VertexLabel) -> Option<VertexId> {
        self.vertices
            .iter()
            .find(|v| &v.label == label)
            .map(|v| v.id)
    }

    pub fn find_arrow(&self, label: &ArrowLabel) -> Option<ArrowId> {
        self.arrows.iter().find(|a| &a.label == label).map(|a| a.id)
    }
}

/// A path `α_l ⋯ α_1`; length-zero paths are the trivial paths `e_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    source: VertexId,
    target: VertexId,
    arrows: Vec<ArrowId>,
}

impl Path {
    pub fn trivial(v: VertexId) -> Self {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    pub fn arrow(q: &Quiver, a: ArrowId) -> Result<Self, QuiverError> {
        let arrow = q.get_arrow(a).ok_or(QuiverError::UnknownArrow(a))?;
        Ok(Path {
            source: arrow.source,
            target: arrow.target,
            arrows: vec![a],
        })
    }

    /// Builds `arrows[0] ⋯ arrows[l-1]`; the last entry is applied first.
    pub fn from_arrows(q: &Quiver, arrows: &[ArrowId]) -> Result<Self, QuiverError> {
        let (last, rest) = match arrows.split_last() {
            Some(split) => split,
            None => {
                return Err(QuiverError::InhomogeneousRelation(
                    "empty arrow sequence has no endpoints".into(),
                ))
            }
        };
        let mut path = Path::arrow(q, *last)?;
        for a in rest.iter().rev() {
            path = compose(&Path::arrow(q, *a)?, &path)?;
        }
        Ok(path)
    }

    /// Path from raw parts; caller guarantees composability.
    pub(crate) fn from_parts_unchecked(
        source: VertexId,
        target: VertexId,
        arrows: Vec<ArrowId>,
    ) -> Self {
        Path {
            source,
            target,
            arrows,
        }
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn target(&self) -> VertexId {
        self.target
    }

    pub fn length(&self) -> usize {
        self.arrows.len()
    }

    pub fn arrows(&self) -> &[ArrowId] {
        &self.arrows
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Vertices visited, in traversal order from the source.
    pub fn vertices(&self, q: &Quiver) -> Vec<VertexId> {
        let mut out = vec![self.source];
        out.extend(self.arrows.iter().rev().map(|a| q.arrow(*a).target));
        out
    }

    /// Checks that every arrow exists in `q` and that consecutive arrows meet.
    pub fn validate_in(&self, q: &Quiver) -> Result<(), QuiverError> {
        q.check_vertex(self.source)?;
        q.check_vertex(self.target)?;
        let mut at = self.source;
        for a in self.arrows.iter().rev() {
            let arrow = q.get_arrow(*a).ok_or(QuiverError::UnknownArrow(*a))?;
            if arrow.source != at {
                return Err(QuiverError::NotComposable {
                    left_source: arrow.source,
                    right_target: at,
                });
            }
            at = arrow.target;
        }
        if at != self.target {
            return Err(QuiverError::NotComposable {
                left_source: self.target,
                right_target: at,
            });
        }
        Ok(())
    }

    pub fn map_arrows(
        &self,
        vertex: impl Fn(VertexId) -> VertexId,
        arrow: impl Fn(ArrowId) -> ArrowId,
    ) -> Path {
        Path {
            source: vertex(self.source),
            target: vertex(self.target),
            arrows: self.arrows.iter().map(|a| arrow(*a)).collect(),
        }
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            return format!("e[{}]", q.vertex(self.source).label);
        }
        self.arrows
            .iter()
            .map(|a| q.arrow(*a).label.to_string())
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// `p · q`: first `q`, then `p`.
pub fn compose(p: &Path, q: &Path) -> Result<Path, QuiverError> {
    if q.target != p.source {
        return Err(QuiverError::NotComposable {
            left_source: p.source,
            right_target: q.target,
        });
    }
    let mut arrows = Vec::with_capacity(p.arrows.len() + q.arrows.len());
    arrows.extend_from_slice(&p.arrows);
    arrows.extend_from_slice(&q.arrows);
    Ok(Path {
        source: q.source,
        target: p.target,
        arrows,
    })
}

/// A rational combination of parallel paths of equal length. Zero
/// coefficients are never stored, so the zero combination has no terms but
/// keeps its endpoints and degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathCombo {
    source: VertexId,
    target: VertexId,
    length: usize,
    terms: BTreeMap<Path, Rational>,
}

impl PathCombo {
    pub fn zero(source: VertexId, target: VertexId, length: usize) -> Self {
        PathCombo {
            source,
            target,
            length,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_path(p: Path) -> Self {
        let mut c = PathCombo::zero(p.source, p.target, p.length());
        c.terms.insert(p, Rational::from_integer(1.into()));
        c
    }

    /// Combination of the given terms; fails on mixed endpoints or lengths.
    pub fn from_terms(
        terms: impl IntoIterator<Item = (Path, Rational)>,
    ) -> Result<Self, QuiverError> {
        let mut it = terms.into_iter().peekable();
        let first = it.peek().ok_or_else(|| {
            QuiverError::InhomogeneousRelation("relation with no terms has no endpoints".into())
        })?;
        let mut c = PathCombo::zero(first.0.source, first.0.target, first.0.length());
        for (p, h) in it {
            c.add_term(p, h)?;
        }
        Ok(c)
    }

    /// `a·p − b·q`, the common shape of commutation-type relations.
    pub fn binomial(p: Path, a: Rational, q: Path, b: Rational) -> Result<Self, QuiverError> {
        PathCombo::from_terms([(p, a), (q, -b)])
    }

    pub fn add_term(&mut self, p: Path, coeff: Rational) -> Result<(), QuiverError> {
        if p.source != self.source || p.target != self.target {
            return Err(QuiverError::InhomogeneousRelation(format!(
                "term {}→{} in a relation {}→{}",
                p.source, p.target, self.source, self.target
            )));
        }
        if p.length() != self.length {
            return Err(QuiverError::InhomogeneousRelation(format!(
                "term of length {} in a relation of length {}",
                p.length(),
                self.length
            )));
        }
        match self.terms.entry(p) {
            Entry::Vacant(e) => {
                if !coeff.is_zero() {
                    e.insert(coeff);
                }
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
        Ok(())
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn target(&self) -> VertexId {
        self.target
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn terms(&self) -> &BTreeMap<Path, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Keeps only the terms accepted by `keep`.
    pub fn filter_terms(&self, mut keep: impl FnMut(&Path) -> bool) -> PathCombo {
        PathCombo {
            source: self.source,
            target: self.target,
            length: self.length,
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| keep(p))
                .map(|(p, h)| (p.clone(), h.clone()))
                .collect(),
        }
    }

    /// Image under a quiver morphism given by vertex and arrow maps.
    pub fn map(
        &self,
        vertex: impl Fn(VertexId) -> VertexId,
        arrow: impl Fn(ArrowId) -> ArrowId,
    ) -> PathCombo {
        PathCombo {
            source: vertex(self.source),
            target: vertex(self.target),
            length: self.length,
            terms: self
                .terms
                .iter()
                .map(|(p, h)| (p.map_arrows(&vertex, &arrow), h.clone()))
                .collect(),
        }
    }

    /// Every path exists in `q` with the declared endpoints and length.
    pub fn validate_in(&self, q: &Quiver) -> Result<(), QuiverError> {
        q.check_vertex(self.source)?;
        q.check_vertex(self.target)?;
        for (p, h) in &self.terms {
            if h.is_zero() {
                return Err(QuiverError::InhomogeneousRelation(
                    "stored zero coefficient".into(),
                ));
            }
            if p.source != self.source || p.target != self.target || p.length() != self.length {
                return Err(QuiverError::InhomogeneousRelation(
                    "term not parallel to the relation".into(),
                ));
            }
            p.validate_in(q)?;
        }
        Ok(())
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (p, h)) in self.terms.iter().enumerate() {
            let coeff = crate::rational::format_short(h);
            if k > 0 {
                out.push_str(" + ");
            }
            out.push_str(&format!("{coeff}*{}", p.display(q)));
        }
        out
    }
}

/// A relation as read from a document: raw arrow sequences and coefficients,
/// not yet checked against a quiver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawRelation {
    pub source: Option<VertexId>,
    pub target: Option<VertexId>,
    pub terms: Vec<(Vec<ArrowId>, Rational)>,
}

/// Summary of a successfully validated relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationReport {
    pub source: VertexId,
    pub target: VertexId,
    pub length: usize,
    pub term_count: usize,
}

/// Checks that every path exists, all terms are parallel and of equal
/// length, and returns the relation as a [`PathCombo`].
pub fn validate_relation(q: &Quiver, raw: &RawRelation) -> Result<PathCombo, QuiverError> {
    let mut paths = Vec::with_capacity(raw.terms.len());
    for (arrows, h) in &raw.terms {
        let p = if arrows.is_empty() {
            let v = raw.source.ok_or_else(|| {
                QuiverError::InhomogeneousRelation("trivial path without a vertex".into())
            })?;
            q.check_vertex(v)?;
            Path::trivial(v)
        } else {
            Path::from_arrows(q, arrows)?
        };
        paths.push((p, h.clone()));
    }
    let combo = match (paths.first(), raw.source, raw.target) {
        (_, Some(s), Some(t)) => {
            q.check_vertex(s)?;
            q.check_vertex(t)?;
            let length = paths.first().map_or(0, |(p, _)| p.length());
            let mut c = PathCombo::zero(s, t, length);
            for (p, h) in paths {
                c.add_term(p, h)?;
            }
            c
        }
        (Some(_), _, _) => PathCombo::from_terms(paths)?,
        (None, _, _) => {
            return Err(QuiverError::InhomogeneousRelation(
                "relation with no terms and no endpoints".into(),
            ))
        }
    };
    Ok(combo)
}

pub fn relation_report(c: &PathCombo) -> RelationReport {
    RelationReport {
        source: c.source,
        target: c.target,
        length: c.length,
        term_count: c.len(),
    }
}

/// Vertex and arrow bijections between two quivers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverIsoWitness {
    pub vertex_map: Vec<VertexId>,
    pub arrow_map: Vec<ArrowId>,
}

impl QuiverIsoWitness {
    pub fn identity(q: &Quiver) -> Self {
        QuiverIsoWitness {
            vertex_map: q.vertex_ids().collect(),
            arrow_map: (0..q.arrow_count()).map(ArrowId).collect(),
        }
    }

    /// Extends a vertex bijection to arrows by pairing parallel arrows in id
    /// order. `None` when some arrow multiplicity differs.
    pub fn from_vertex_map(a: &Quiver, b: &Quiver, vertex_map: Vec<VertexId>) -> Option<Self> {
        if vertex_map.len() != a.vertex_count() || a.arrow_count() != b.arrow_count() {
            return None;
        }
        let mut arrow_map = vec![ArrowId(usize::MAX); a.arrow_count()];
        let mut done: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
        for arrow in a.arrows() {
            let key = (arrow.source, arrow.target);
            if !done.insert(key) {
                continue;
            }
            let ours = a.arrows_between(arrow.source, arrow.target);
            let theirs = b.arrows_between(
                *vertex_map.get(arrow.source.0)?,
                *vertex_map.get(arrow.target.0)?,
            );
            if ours.len() != theirs.len() {
                return None;
            }
            for (x, y) in ours.iter().zip(theirs) {
                arrow_map[x.0] = y;
            }
        }
        Some(QuiverIsoWitness {
            vertex_map,
            arrow_map,
        })
    }

    /// Matches vertices with equal labels, then pairs parallel arrows.
    pub fn by_vertex_labels(a: &Quiver, b: &Quiver) -> Option<Self> {
        let index = b.vertex_label_index();
        let vmap = a
            .vertices()
            .iter()
            .map(|v| index.get(&v.label).copied())
            .collect::<Option<Vec<_>>>()?;
        QuiverIsoWitness::from_vertex_map(a, b, vmap)
    }
}

/// True iff `map` is a bijective quiver morphism from `a` onto `b`.
pub fn quiver_equal_under(map: &QuiverIsoWitness, a: &Quiver, b: &Quiver) -> bool {
    if a.vertex_count() != b.vertex_count()
        || a.arrow_count() != b.arrow_count()
        || map.vertex_map.len() != a.vertex_count()
        || map.arrow_map.len() != a.arrow_count()
    {
        return false;
    }
    let mut seen_v = vec![false; b.vertex_count()];
    for v in &map.vertex_map {
        match seen_v.get_mut(v.0) {
            Some(s) if !*s => *s = true,
            _ => return false,
        }
    }
    let mut seen_a = vec![false; b.arrow_count()];
    for (k, image) in map.arrow_map.iter().enumerate() {
        match seen_a.get_mut(image.0) {
            Some(s) if !*s => *s = true,
            _ => return false,
        }
        let src = a.arrow(ArrowId(k));
        let dst = b.arrow(*image);
        if map.vertex_map[src.source.0] != dst.source || map.vertex_map[src.target.0] != dst.target
        {
            return false;
        }
    }
    true
}

/// A quiver with relations and optional translation data.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BoundQuiver {
    pub quiver: Quiver,
    pub relations: Vec<PathCombo>,
    /// Nakayama permutation on vertices.
    pub nakayama: Option<Vec<VertexId>>,
    /// Nakayama automorphism on arrows.
    pub nakayama_arrows: Option<Vec<ArrowId>>,
    /// Partial translation `τ`, defined exactly on the non-projective vertices.
    pub translation: Option<BTreeMap<VertexId, VertexId>>,
    pub loewy_length: Option<usize>,
}

impl BoundQuiver {
    pub fn new(quiver: Quiver) -> Self {
        BoundQuiver {
            quiver,
            ..Default::default()
        }
    }

    pub fn with_relations(quiver: Quiver, relations: Vec<PathCombo>) -> Self {
        BoundQuiver {
            quiver,
            relations,
            ..Default::default()
        }
    }

    pub fn nakayama_inverse(&self) -> Option<Vec<VertexId>> {
        let nu = self.nakayama.as_ref()?;
        let mut inv = vec![VertexId(usize::MAX); nu.len()];
        for (i, j) in nu.iter().enumerate() {
            inv[j.0] = VertexId(i);
        }
        Some(inv)
    }

    pub fn nakayama_arrows_inverse(&self) -> Option<Vec<ArrowId>> {
        let nu = self.nakayama_arrows.as_ref()?;
        let mut inv = vec![ArrowId(usize::MAX); nu.len()];
        for (i, j) in nu.iter().enumerate() {
            inv[j.0] = ArrowId(i);
        }
        Some(inv)
    }

    /// Checks relations, ν bijectivity and compatibility, τ injectivity.
    pub fn validate(&self) -> Result<(), QuiverError> {
        let q = &self.quiver;
        for r in &self.relations {
            r.validate_in(q)?;
        }
        let bad = |msg: String| Err(QuiverError::InvalidBoundQuiver(msg));
        if let Some(nu) = &self.nakayama {
            if nu.len() != q.vertex_count() {
                return bad("Nakayama permutation has the wrong size".into());
            }
            let distinct: BTreeSet<_> = nu.iter().collect();
            if distinct.len() != nu.len() || nu.iter().any(|v| v.0 >= q.vertex_count()) {
                return bad("Nakayama map on vertices is not a permutation".into());
            }
            if let Some(nu_a) = &self.nakayama_arrows {
                if nu_a.len() != q.arrow_count() {
                    return bad("Nakayama map on arrows has the wrong size".into());
                }
                let distinct: BTreeSet<_> = nu_a.iter().collect();
                if distinct.len() != nu_a.len() || nu_a.iter().any(|a| a.0 >= q.arrow_count()) {
                    return bad("Nakayama map on arrows is not a permutation".into());
                }
                for arrow in q.arrows() {
                    let image = q.arrow(nu_a[arrow.id.0]);
                    if image.source != nu[arrow.source.0] || image.target != nu[arrow.target.0] {
                        return bad(format!(
                            "ν({}) does not start and end at ν of the endpoints",
                            arrow.label
                        ));
                    }
                }
            }
        } else if self.nakayama_arrows.is_some() {
            return bad("Nakayama map on arrows without one on vertices".into());
        }
        if let Some(tau) = &self.translation {
            let mut images = BTreeSet::new();
            for (x, y) in tau {
                q.check_vertex(*x)?;
                q.check_vertex(*y)?;
                if !images.insert(*y) {
                    return bad(format!("translation is not injective at {y}"));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn a3() -> (Quiver, ArrowId, ArrowId) {
        let mut q = Quiver::new();
        let v: Vec<_> = (1..=3)
            .map(|i| q.add_vertex(VertexLabel::Residue(i)))
            .collect();
        let a = q.add_arrow(v[0], v[1], ArrowLabel::named("a")).unwrap();
        let b = q.add_arrow(v[1], v[2], ArrowLabel::named("b")).unwrap();
        (q, a, b)
    }

    #[test]
    fn compose_identity_and_units() {
        let (q, a, b) = a3();
        let e1 = Path::trivial(VertexId(0));
        assert_eq!(compose(&e1, &e1).unwrap(), e1);
        let alpha = Path::arrow(&q, a).unwrap();
        assert_eq!(compose(&alpha, &e1).unwrap(), alpha);
        let beta = Path::arrow(&q, b).unwrap();
        let ba = compose(&beta, &alpha).unwrap();
        assert_eq!(ba.arrows(), &[b, a]);
        assert_eq!(ba.length(), 2);
        assert_eq!(ba.source(), VertexId(0));
        assert_eq!(ba.target(), VertexId(2));
        assert_eq!(ba.vertices(&q), vec![VertexId(0), VertexId(1), VertexId(2)]);
        assert!(matches!(
            compose(&alpha, &beta),
            Err(QuiverError::NotComposable { .. })
        ));
    }

    #[test]
    fn relation_validation() {
        // square 0 → 1 → 3, 0 → 2 → 3
        let mut q = Quiver::new();
        let v: Vec<_> = (0..4)
            .map(|i| q.add_vertex(VertexLabel::Residue(i)))
            .collect();
        let a = q.add_arrow(v[0], v[1], ArrowLabel::named("a")).unwrap();
        let b = q.add_arrow(v[1], v[3], ArrowLabel::named("b")).unwrap();
        let a2 = q.add_arrow(v[0], v[2], ArrowLabel::named("a'")).unwrap();
        let b2 = q.add_arrow(v[2], v[3], ArrowLabel::named("b'")).unwrap();
        let ok = RawRelation {
            source: None,
            target: None,
            terms: vec![(vec![b, a], int(1)), (vec![b2, a2], int(-1))],
        };
        let c = validate_relation(&q, &ok).unwrap();
        assert_eq!(relation_report(&c).term_count, 2);
        assert_eq!(c.length(), 2);

        let mixed = RawRelation {
            source: None,
            target: None,
            terms: vec![(vec![a], int(1)), (vec![b, a], int(-1))],
        };
        assert!(matches!(
            validate_relation(&q, &mixed),
            Err(QuiverError::InhomogeneousRelation(_))
        ));
        let unknown = RawRelation {
            source: None,
            target: None,
            terms: vec![(vec![ArrowId(17)], int(1))],
        };
        assert!(matches!(
            validate_relation(&q, &unknown),
            Err(QuiverError::UnknownArrow(_))
        ));
    }

    #[test]
    fn cancelling_terms_leave_zero() {
        let (q, a, _) = a3();
        let p = Path::arrow(&q, a).unwrap();
        let c = PathCombo::binomial(p.clone(), int(2), p, int(2)).unwrap();
        assert!(c.is_zero());
        assert_eq!(c.source(), VertexId(0));
    }

    #[test]
    fn witnesses() {
        let (q, _, _) = a3();
        assert!(quiver_equal_under(&QuiverIsoWitness::identity(&q), &q, &q));

        let mut z3 = Quiver::new();
        let v: Vec<_> = (0..3)
            .map(|i| z3.add_vertex(VertexLabel::Residue(i)))
            .collect();
        for i in 0..3 {
            z3.add_arrow(v[i], v[(i + 1) % 3], ArrowLabel::named(format!("c{i}")))
                .unwrap();
        }
        let rot = QuiverIsoWitness {
            vertex_map: vec![VertexId(1), VertexId(2), VertexId(0)],
            arrow_map: vec![ArrowId(1), ArrowId(2), ArrowId(0)],
        };
        assert!(quiver_equal_under(&rot, &z3, &z3));

        let mut fwd = Quiver::new();
        let x = fwd.add_vertex(VertexLabel::Residue(1));
        let y = fwd.add_vertex(VertexLabel::Residue(2));
        fwd.add_arrow(x, y, ArrowLabel::named("a")).unwrap();
        let mut back = Quiver::new();
        let x = back.add_vertex(VertexLabel::Residue(1));
        let y = back.add_vertex(VertexLabel::Residue(2));
        back.add_arrow(y, x, ArrowLabel::named("a")).unwrap();
        let id = QuiverIsoWitness::identity(&fwd);
        assert!(!quiver_equal_under(&id, &fwd, &back));
        assert!(
            QuiverIsoWitness::from_vertex_map(&fwd, &back, vec![VertexId(0), VertexId(1)])
                .is_none()
        );
    }

    #[test]
    fn label_display() {
        let l = VertexLabel::level(VertexLabel::Tuple(vec![1, 0]), 2);
        assert_eq!(l.to_string(), "((1,0),2)");
        let a = ArrowLabel::leveled(ArrowLabel::Returning(VertexLabel::Residue(3)), 1);
        assert_eq!(a.to_string(), "(b[3],1)");
        assert!(a.is_returning());
    }
}
