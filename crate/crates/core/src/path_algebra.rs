//! Graded pieces of `kQ/(ρ)` by exact linear algebra, one degree at a time.
//!
//! The ideal slice in degree `d` is `kQ_1·I_{d−1} + I_{d−1}·kQ_1 + ρ_d`,
//! kept per vertex pair `(i, j)` as a reduced echelon basis over the paths
//! `i → j`. An extra vertex set `E` is handled by projecting away every path
//! through `E`, which is the same as adding those paths to the ideal.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::linalg::{integer_row, Echelon, Row};
use crate::quiver::{ArrowId, BoundQuiver, Path, PathCombo, Quiver, QuiverError, VertexId};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathAlgebraError {
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error("degree {degree} exceeds the computed bound {max}")]
    DegreeOverflow { degree: usize, max: usize },
    #[error("relation is not quadratic: {0}")]
    NotQuadratic(String),
    #[error("a Nakayama permutation is required")]
    MissingNakayama,
}

/// All length-`d` paths `i → j`, sorted lexicographically by arrow ids.
pub fn paths_of_length(q: &Quiver, d: usize, i: VertexId, j: VertexId) -> Vec<Path> {
    let mut frontier = vec![Path::trivial(i)];
    for _ in 0..d {
        let mut next = Vec::new();
        for p in &frontier {
            for a in q.outgoing(p.target()) {
                next.push(extend_left(q, *a, p));
            }
        }
        frontier = next;
    }
    let mut out: Vec<Path> = frontier.into_iter().filter(|p| p.target() == j).collect();
    out.sort();
    out
}

/// `a · p`.
fn extend_left(q: &Quiver, a: ArrowId, p: &Path) -> Path {
    let mut arrows = Vec::with_capacity(p.length() + 1);
    arrows.push(a);
    arrows.extend_from_slice(p.arrows());
    Path::from_parts_unchecked(p.source(), q.arrow(a).target, arrows)
}

/// `p · a`.
fn extend_right(q: &Quiver, p: &Path, a: ArrowId) -> Path {
    let mut arrows = Vec::with_capacity(p.length() + 1);
    arrows.extend_from_slice(p.arrows());
    arrows.push(a);
    Path::from_parts_unchecked(q.arrow(a).source, p.target(), arrows)
}

/// `dim e_j (kQ/I)_d e_i` for `(i, j, d)`; absent entries are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedDims {
    pub vertex_count: usize,
    pub max_degree: usize,
    entries: BTreeMap<(usize, usize, usize), usize>,
}

#[derive(Serialize)]
struct DimEntry {
    source: usize,
    target: usize,
    degree: usize,
    dim: usize,
}

impl GradedDims {
    pub fn get(&self, source: VertexId, target: VertexId, degree: usize) -> usize {
        self.entries
            .get(&(source.0, target.0, degree))
            .copied()
            .unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = ((VertexId, VertexId, usize), usize)> + '_ {
        self.entries
            .iter()
            .map(|((i, j, d), v)| ((VertexId(*i), VertexId(*j), *d), *v))
    }

    pub fn total_in_degree(&self, d: usize) -> usize {
        self.entries
            .iter()
            .filter(|((_, _, e), _)| *e == d)
            .map(|(_, v)| v)
            .sum()
    }

    pub fn totals_by_degree(&self) -> Vec<usize> {
        (0..=self.max_degree)
            .map(|d| self.total_in_degree(d))
            .collect()
    }

    pub fn total(&self) -> usize {
        self.entries.values().sum()
    }

    /// `Σ_j dim e_j A_d e_i`.
    pub fn from_vertex(&self, source: VertexId, d: usize) -> usize {
        self.entries
            .iter()
            .filter(|((i, _, e), _)| *i == source.0 && *e == d)
            .map(|(_, v)| v)
            .sum()
    }

    /// True when some entry in the top computed degree is nonzero, so the
    /// bound may have cut the algebra short.
    pub fn nonzero_at_bound(&self) -> bool {
        self.total_in_degree(self.max_degree) > 0
    }

    /// Plain-text matrices, one per degree; row = source, column = target.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "# graded dimensions: {} vertices, degrees 0..={}",
            self.vertex_count, self.max_degree
        );
        let _ = writeln!(out, "# totals {:?}", self.totals_by_degree());
        for d in 0..=self.max_degree {
            let _ = writeln!(out, "degree {d}");
            for i in 0..self.vertex_count {
                let row: Vec<String> = (0..self.vertex_count)
                    .map(|j| self.get(VertexId(i), VertexId(j), d).to_string())
                    .collect();
                let _ = writeln!(out, "{}", row.join(" "));
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<DimEntry> = self
            .entries
            .iter()
            .map(|((i, j, d), v)| DimEntry {
                source: *i,
                target: *j,
                degree: *d,
                dim: *v,
            })
            .collect();
        serde_json::json!({
            "vertex_count": self.vertex_count,
            "max_degree": self.max_degree,
            "totals": self.totals_by_degree(),
            "entries": entries,
        })
    }
}

struct Cell {
    paths: Vec<Path>,
    index: HashMap<Path, usize>,
    ideal: Echelon,
}

impl Cell {
    fn new(mut paths: Vec<Path>) -> Self {
        paths.sort();
        let index = paths
            .iter()
            .enumerate()
            .map(|(k, p)| (p.clone(), k))
            .collect();
        Cell {
            paths,
            index,
            ideal: Echelon::new(),
        }
    }

    fn dim(&self) -> usize {
        self.paths.len() - self.ideal.rank()
    }

    /// Integer row of `c`, with terms outside the cell (through `E`) dropped.
    fn project(&self, c: &PathCombo) -> Row {
        integer_row(
            c.terms()
                .iter()
                .filter_map(|(p, h)| self.index.get(p).map(|k| (*k, h.clone()))),
        )
        .0
    }
}

#[derive(Default)]
struct Level {
    cells: BTreeMap<(usize, usize), Cell>,
}

/// Incremental quotient computation for one bound quiver and vertex set `E`.
pub struct QuotientEngine<'a> {
    quiver: &'a Quiver,
    excluded: Vec<bool>,
    relations: BTreeMap<usize, Vec<&'a PathCombo>>,
    levels: Vec<Level>,
    /// First degree in which the quotient vanished; everything above is zero.
    zero_from: Option<usize>,
}

impl<'a> QuotientEngine<'a> {
    pub fn new(
        quiver: &'a Quiver,
        relations: &'a [PathCombo],
        excluded: &[VertexId],
    ) -> Result<Self, PathAlgebraError> {
        let mut mask = vec![false; quiver.vertex_count()];
        for v in excluded {
            quiver.check_vertex(*v)?;
            mask[v.0] = true;
        }
        let mut by_degree: BTreeMap<usize, Vec<&PathCombo>> = BTreeMap::new();
        for r in relations {
            r.validate_in(quiver)?;
            by_degree.entry(r.length()).or_default().push(r);
        }
        let mut engine = QuotientEngine {
            quiver,
            excluded: mask,
            relations: by_degree,
            levels: Vec::new(),
            zero_from: None,
        };
        engine.push_level_zero();
        Ok(engine)
    }

    fn push_level_zero(&mut self) {
        let mut level = Level::default();
        for v in self.quiver.vertex_ids() {
            if !self.excluded[v.0] {
                level
                    .cells
                    .insert((v.0, v.0), Cell::new(vec![Path::trivial(v)]));
            }
        }
        self.add_relations(&mut level, 0);
        self.finish_level(level);
    }

    fn add_relations(&self, level: &mut Level, d: usize) {
        for r in self.relations.get(&d).into_iter().flatten() {
            if let Some(cell) = level.cells.get_mut(&(r.source().0, r.target().0)) {
                let row = cell.project(r);
                cell.ideal.insert(row);
            }
        }
    }

    fn finish_level(&mut self, level: Level) {
        let d = self.levels.len();
        if self.zero_from.is_none() && level.cells.values().all(|c| c.dim() == 0) {
            self.zero_from = Some(d);
        }
        self.levels.push(level);
    }

    pub fn computed_degree(&self) -> usize {
        self.levels.len() - 1
    }

    /// Computes all levels up to `max_degree`.
    pub fn extend_to(&mut self, max_degree: usize) {
        while self.levels.len() <= max_degree {
            if self.zero_from.is_some() {
                // the quotient stays zero; keep an empty level as a marker
                self.levels.push(Level::default());
                continue;
            }
            let level = self.next_level();
            self.finish_level(level);
        }
    }

    fn next_level(&self) -> Level {
        let q = self.quiver;
        let prev = self.levels.last().expect("level zero exists");
        let mut grouped: BTreeMap<(usize, usize), Vec<Path>> = BTreeMap::new();
        for ((i, _), cell) in &prev.cells {
            for p in &cell.paths {
                for a in q.outgoing(p.target()) {
                    let j = q.arrow(*a).target;
                    if !self.excluded[j.0] {
                        grouped
                            .entry((*i, j.0))
                            .or_default()
                            .push(extend_left(q, *a, p));
                    }
                }
            }
        }
        let mut level = Level {
            cells: grouped
                .into_iter()
                .map(|(k, v)| (k, Cell::new(v)))
                .collect(),
        };
        for (&(i, j), cell) in level.cells.iter_mut() {
            for a in q.incoming(VertexId(j)) {
                let k = q.arrow(*a).source.0;
                if let Some(lower) = prev.cells.get(&(i, k)) {
                    for row in lower.ideal.rows() {
                        let mapped =
                            remap(row, |c| cell.index[&extend_left(q, *a, &lower.paths[c])]);
                        cell.ideal.insert(mapped);
                    }
                }
            }
            for a in q.outgoing(VertexId(i)) {
                let k = q.arrow(*a).target.0;
                if let Some(lower) = prev.cells.get(&(k, j)) {
                    for row in lower.ideal.rows() {
                        let mapped =
                            remap(row, |c| cell.index[&extend_right(q, &lower.paths[c], *a)]);
                        cell.ideal.insert(mapped);
                    }
                }
            }
        }
        self.add_relations(&mut level, self.levels.len());
        level
    }

    pub fn dims(&self) -> GradedDims {
        let mut entries = BTreeMap::new();
        for (d, level) in self.levels.iter().enumerate() {
            for (&(i, j), cell) in &level.cells {
                let dim = cell.dim();
                if dim > 0 {
                    entries.insert((i, j, d), dim);
                }
            }
        }
        GradedDims {
            vertex_count: self.quiver.vertex_count(),
            max_degree: self.computed_degree(),
            entries,
        }
    }

    /// Residue of `c` modulo the ideal, as coefficients on non-pivot paths.
    /// Empty iff `c` lies in the ideal.
    pub fn residue(&self, c: &PathCombo) -> Result<Vec<(Path, Rational)>, PathAlgebraError> {
        c.validate_in(self.quiver)?;
        let max = self.computed_degree();
        if c.length() > max {
            return Err(PathAlgebraError::DegreeOverflow {
                degree: c.length(),
                max,
            });
        }
        let Some(cell) = self.levels[c.length()]
            .cells
            .get(&(c.source().0, c.target().0))
        else {
            return Ok(Vec::new());
        };
        let entries = c
            .terms()
            .iter()
            .filter_map(|(p, h)| cell.index.get(p).map(|k| (*k, h.clone())));
        Ok(cell
            .ideal
            .residue(entries)
            .into_iter()
            .map(|(k, h)| (cell.paths[k].clone(), h))
            .collect())
    }
}

fn remap(row: &Row, f: impl Fn(usize) -> usize) -> Row {
    let mut out: Row = row.iter().map(|(c, v)| (f(*c), v.clone())).collect();
    out.sort_by_key(|(c, _)| *c);
    out
}

/// Graded dimensions of `kQ/(ρ + (E))` up to degree `max_degree`.
pub fn quotient_dims(
    b: &BoundQuiver,
    max_degree: usize,
    extra_vertex_ideal: Option<&[VertexId]>,
) -> Result<GradedDims, PathAlgebraError> {
    let mut engine =
        QuotientEngine::new(&b.quiver, &b.relations, extra_vertex_ideal.unwrap_or(&[]))?;
    engine.extend_to(max_degree);
    Ok(engine.dims())
}

/// Reduced coordinates of `c` in `kQ/(ρ)`; empty iff `c ∈ (ρ)`.
pub fn normal_form(
    b: &BoundQuiver,
    c: &PathCombo,
    max_degree: usize,
) -> Result<Vec<(Path, Rational)>, PathAlgebraError> {
    if c.length() > max_degree {
        return Err(PathAlgebraError::DegreeOverflow {
            degree: c.length(),
            max: max_degree,
        });
    }
    let mut engine = QuotientEngine::new(&b.quiver, &b.relations, &[])?;
    engine.extend_to(c.length());
    engine.residue(c)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrthoCell {
    pub source: VertexId,
    pub target: VertexId,
    pub paths: usize,
    pub rank_rho: usize,
    pub rank_theta: usize,
    pub orthogonal: bool,
}

impl OrthoCell {
    pub fn complementary(&self) -> bool {
        self.orthogonal && self.rank_rho + self.rank_theta == self.paths
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrthoReport {
    pub passed: bool,
    pub cells: Vec<OrthoCell>,
}

/// Checks that `ρ` and `θ` span orthogonal complements in every `e_j kQ_2 e_i`
/// under the pairing that makes the length-2 paths an orthonormal basis.
pub fn quadratic_orthocheck(
    q: &Quiver,
    rho: &[PathCombo],
    theta: &[PathCombo],
) -> Result<OrthoReport, PathAlgebraError> {
    for r in rho.iter().chain(theta) {
        r.validate_in(q)?;
        if r.length() != 2 {
            return Err(PathAlgebraError::NotQuadratic(r.display(q)));
        }
    }
    let mut cells: BTreeMap<(usize, usize), Vec<Path>> = BTreeMap::new();
    for v in q.vertex_ids() {
        for a in q.outgoing(v) {
            for b in q.outgoing(q.arrow(*a).target) {
                let p = Path::from_parts_unchecked(v, q.arrow(*b).target, vec![*b, *a]);
                cells.entry((v.0, p.target().0)).or_default().push(p);
            }
        }
    }
    let mut report = Vec::new();
    for ((i, j), paths) in cells {
        let cell = Cell::new(paths);
        let in_cell = |set: &[PathCombo]| -> Vec<Row> {
            set.iter()
                .filter(|r| r.source().0 == i && r.target().0 == j)
                .map(|r| cell.project(r))
                .collect()
        };
        let rho_rows = in_cell(rho);
        let theta_rows = in_cell(theta);
        let orthogonal = rho_rows
            .iter()
            .all(|x| theta_rows.iter().all(|y| dot(x, y).is_zero()));
        let rank = |rows: &[Row]| {
            let mut e = Echelon::new();
            for r in rows {
                e.insert(r.clone());
            }
            e.rank()
        };
        report.push(OrthoCell {
            source: VertexId(i),
            target: VertexId(j),
            paths: cell.paths.len(),
            rank_rho: rank(&rho_rows),
            rank_theta: rank(&theta_rows),
            orthogonal,
        });
    }
    Ok(OrthoReport {
        passed: report.iter().all(OrthoCell::complementary),
        cells: report,
    })
}

fn dot(x: &Row, y: &Row) -> num_bigint::BigInt {
    let mut sum = num_bigint::BigInt::zero();
    let (mut a, mut b) = (0, 0);
    while a < x.len() && b < y.len() {
        match x[a].0.cmp(&y[b].0) {
            std::cmp::Ordering::Less => a += 1,
            std::cmp::Ordering::Greater => b += 1,
            std::cmp::Ordering::Equal => {
                sum += &x[a].1 * &y[b].1;
                a += 1;
                b += 1;
            }
        }
    }
    sum
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StqViolation {
    /// Which of the four conditions failed.
    pub condition: u8,
    pub vertex: Option<VertexId>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StqReport {
    pub passed: bool,
    pub l: usize,
    pub violations: Vec<StqViolation>,
}

/// Checks the stable translation quiver conditions for Loewy length `l + 1`:
/// (1) ν is a permutation; (2) every vertex has top degree exactly `l`;
/// (3) the degree-`l` part starting at `ν(i)` is concentrated at `i` and
/// nonzero there; (4) it is one-dimensional.
pub fn stable_translation_check(b: &BoundQuiver, l: usize) -> Result<StqReport, PathAlgebraError> {
    let nu = b
        .nakayama
        .as_ref()
        .ok_or(PathAlgebraError::MissingNakayama)?;
    let q = &b.quiver;
    let mut violations = Vec::new();
    let mut fail = |condition: u8, vertex: Option<VertexId>, detail: String| {
        violations.push(StqViolation {
            condition,
            vertex,
            detail,
        })
    };

    let mut seen = vec![false; q.vertex_count()];
    let mut is_permutation = nu.len() == q.vertex_count();
    for v in nu {
        match seen.get_mut(v.0) {
            Some(s) if !*s => *s = true,
            _ => is_permutation = false,
        }
    }
    if !is_permutation {
        fail(1, None, "ν is not a permutation of the vertices".into());
        return Ok(StqReport {
            passed: false,
            l,
            violations,
        });
    }

    let dims = quotient_dims(b, l + 1, None)?;
    for v in q.vertex_ids() {
        let top = dims.from_vertex(v, l);
        let above = dims.from_vertex(v, l + 1);
        if top == 0 || above > 0 {
            fail(
                2,
                Some(v),
                format!(
                    "dimension {top} in degree {l} and {above} in degree {}",
                    l + 1
                ),
            );
        }
    }
    for i in q.vertex_ids() {
        let from = nu[i.0];
        let dim = dims.get(from, i, l);
        if dim == 0 {
            fail(
                3,
                Some(i),
                format!("no nonzero path of length {l} from ν(i) to i"),
            );
        }
        for j in q.vertex_ids().filter(|j| *j != i) {
            let stray = dims.get(from, j, l);
            if stray > 0 {
                fail(
                    3,
                    Some(i),
                    format!(
                        "degree {l} from ν(i) reaches {} with dimension {stray}",
                        q.vertex(j).label
                    ),
                );
            }
        }
        if dim > 1 {
            fail(
                4,
                Some(i),
                format!("degree {l} from ν(i) to i has dimension {dim}"),
            );
        }
    }
    Ok(StqReport {
        passed: violations.is_empty(),
        l,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{ArrowLabel, VertexLabel};
    use crate::rational::int;

    fn two_loops() -> (Quiver, ArrowId, ArrowId) {
        let mut q = Quiver::new();
        let v = q.add_vertex(VertexLabel::Residue(0));
        let x = q.add_arrow(v, v, ArrowLabel::named("x")).unwrap();
        let y = q.add_arrow(v, v, ArrowLabel::named("y")).unwrap();
        (q, x, y)
    }

    fn p(q: &Quiver, arrows: &[ArrowId]) -> Path {
        Path::from_arrows(q, arrows).unwrap()
    }

    fn exterior() -> BoundQuiver {
        let (q, x, y) = two_loops();
        let rels = vec![
            PathCombo::from_path(p(&q, &[x, x])),
            PathCombo::from_path(p(&q, &[y, y])),
            PathCombo::binomial(p(&q, &[x, y]), int(1), p(&q, &[y, x]), int(-1)).unwrap(),
        ];
        BoundQuiver::with_relations(q, rels)
    }

    fn a2() -> BoundQuiver {
        let mut q = Quiver::new();
        let a = q.add_vertex(VertexLabel::Residue(1));
        let b = q.add_vertex(VertexLabel::Residue(2));
        q.add_arrow(a, b, ArrowLabel::named("a1")).unwrap();
        BoundQuiver::new(q)
    }

    #[test]
    fn path_enumeration() {
        let (q, x, y) = two_loops();
        let v = VertexId(0);
        assert_eq!(paths_of_length(&q, 0, v, v), vec![Path::trivial(v)]);
        let words: Vec<Vec<ArrowId>> = paths_of_length(&q, 2, v, v)
            .iter()
            .map(|p| p.arrows().to_vec())
            .collect();
        assert_eq!(words, vec![vec![x, x], vec![x, y], vec![y, x], vec![y, y]]);
        let b = a2();
        let ps = paths_of_length(&b.quiver, 1, VertexId(0), VertexId(1));
        assert_eq!(ps.len(), 1);
    }

    /// Monomial rewriting oracle for the exterior algebra: a word survives
    /// iff it has no repeated letter, and xy = -yx.
    fn exterior_oracle(len: usize) -> usize {
        (0..1usize << len)
            .map(|w| (0..len).map(|k| (w >> k) & 1).collect::<Vec<_>>())
            .filter(|word| {
                let mut seen = [false; 2];
                word.iter().all(|l| !std::mem::replace(&mut seen[*l], true))
            })
            .map(|word| {
                let mut sorted = word.clone();
                sorted.sort();
                sorted
            })
            .collect::<std::collections::BTreeSet<_>>()
            .len()
    }

    #[test]
    fn exterior_algebra_dims() {
        let b = exterior();
        let dims = quotient_dims(&b, 3, None).unwrap();
        assert_eq!(dims.totals_by_degree(), vec![1, 2, 1, 0]);
        for d in 0..=3 {
            assert_eq!(dims.total_in_degree(d), exterior_oracle(d));
        }
    }

    #[test]
    fn free_a2_and_excluded_vertices() {
        let b = a2();
        let dims = quotient_dims(&b, 3, None).unwrap();
        assert_eq!(dims.totals_by_degree(), vec![2, 1, 0, 0]);
        let dims = quotient_dims(&b, 3, Some(&[VertexId(1)])).unwrap();
        assert_eq!(dims.totals_by_degree(), vec![1, 0, 0, 0]);
        let all = [VertexId(0), VertexId(1)];
        assert_eq!(quotient_dims(&b, 3, Some(&all)).unwrap().total(), 0);
    }

    #[test]
    fn normal_forms() {
        let b = exterior();
        let (x, y) = (ArrowId(0), ArrowId(1));
        let q = &b.quiver;
        let anti = PathCombo::binomial(p(q, &[x, y]), int(1), p(q, &[y, x]), int(-1)).unwrap();
        assert!(normal_form(&b, &anti, 2).unwrap().is_empty());
        let xy = PathCombo::from_path(p(q, &[x, y]));
        assert!(!normal_form(&b, &xy, 2).unwrap().is_empty());
        let e = PathCombo::from_path(Path::trivial(VertexId(0)));
        assert!(!normal_form(&b, &e, 2).unwrap().is_empty());
        for r in &b.relations {
            assert!(normal_form(&b, r, 3).unwrap().is_empty());
        }
        assert!(matches!(
            normal_form(&b, &xy, 1),
            Err(PathAlgebraError::DegreeOverflow { .. })
        ));
    }

    #[test]
    fn orthocheck_examples() {
        let b = exterior();
        let (x, y) = (ArrowId(0), ArrowId(1));
        let q = &b.quiver;
        let comm = PathCombo::binomial(p(q, &[x, y]), int(1), p(q, &[y, x]), int(1)).unwrap();
        let report = quadratic_orthocheck(q, std::slice::from_ref(&comm), &b.relations).unwrap();
        assert!(report.passed);
        assert_eq!(report.cells[0].rank_rho + report.cells[0].rank_theta, 4);
        let report =
            quadratic_orthocheck(q, std::slice::from_ref(&comm), std::slice::from_ref(&comm))
                .unwrap();
        assert!(!report.passed);
        let lin = PathCombo::from_path(p(q, &[x]));
        assert!(matches!(
            quadratic_orthocheck(q, &[lin], &[]),
            Err(PathAlgebraError::NotQuadratic(_))
        ));
    }

    #[test]
    fn stq_on_a2_fails_condition_three() {
        let mut b = a2();
        b.nakayama = Some(vec![VertexId(0), VertexId(1)]);
        let report = stable_translation_check(&b, 1).unwrap();
        assert!(!report.passed);
        assert!(report.violations.iter().any(|v| v.condition == 3));
    }

    #[test]
    fn stq_on_exterior_algebra() {
        let mut b = exterior();
        b.nakayama = Some(vec![VertexId(0)]);
        assert!(stable_translation_check(&b, 2).unwrap().passed);
        let report = stable_translation_check(&b, 1).unwrap();
        assert!(report.violations.iter().any(|v| v.condition == 2));
        b.nakayama = Some(vec![VertexId(3)]);
        let report = stable_translation_check(&b, 2).unwrap();
        assert_eq!(report.violations[0].condition, 1);
    }

    #[test]
    fn dump_lists_every_degree() {
        let dims = quotient_dims(&a2(), 1, None).unwrap();
        let text = dims.dump();
        assert!(text.contains("degree 0\n1 0\n0 1\n"));
        assert!(text.contains("degree 1\n0 1\n0 0\n"));
    }
}
