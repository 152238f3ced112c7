//! Returning arrows, twisted trivial extensions, cyclic covers and the cone.

use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use crate::quiver::{
    ArrowId, ArrowLabel, BoundQuiver, Path, PathCombo, Quiver, QuiverError, VertexId, VertexLabel,
};
use crate::rational::{int, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error("a Nakayama permutation on vertices is required")]
    MissingNakayama,
    #[error("a Nakayama map on arrows is required")]
    MissingNakayamaArrows,
    #[error("a translation is required")]
    MissingTranslation,
    #[error("cover degree must be positive")]
    ZeroCover,
}

/// Sign `ε` of the twist on arrows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum SignTwist {
    Plus,
    #[default]
    Minus,
}

impl SignTwist {
    pub fn from_sign(s: i64) -> Option<Self> {
        match s {
            1 => Some(SignTwist::Plus),
            -1 => Some(SignTwist::Minus),
            _ => None,
        }
    }

    pub fn value(self) -> Rational {
        match self {
            SignTwist::Plus => int(1),
            SignTwist::Minus => int(-1),
        }
    }
}

/// Which of the two equivalent forms of the mixing relations to emit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    /// `β_j γ − ε ν(γ) β_i` for `γ: i → j`.
    Forward,
    /// `γ β_{ν⁻¹i} − ε β_{ν⁻¹j} ν⁻¹(γ)`.
    Reverse,
}

/// Relation side of a bound McKay quiver.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Rho,
    Theta,
}

fn nakayama(b: &BoundQuiver) -> Result<&[VertexId], ConstructionError> {
    b.nakayama
        .as_deref()
        .ok_or(ConstructionError::MissingNakayama)
}

/// Adds `β_i: i → ν(i)` for every vertex; old ids are kept and `β_i` gets
/// arrow id `|Q_1| + i`.
pub fn returning_arrow_quiver(b: &BoundQuiver) -> Result<Quiver, ConstructionError> {
    let nu = nakayama(b)?;
    let mut q = b.quiver.clone();
    for v in b.quiver.vertices() {
        q.add_arrow(v.id, nu[v.id.0], ArrowLabel::Returning(v.label.clone()))?;
    }
    Ok(q)
}

fn beta(b: &BoundQuiver, i: VertexId) -> ArrowId {
    ArrowId(b.quiver.arrow_count() + i.0)
}

/// Relations added by the returning arrows.
fn returning_relations(
    b: &BoundQuiver,
    q: &Quiver,
    eps: Rational,
    squares: bool,
    variant: Variant,
) -> Result<Vec<PathCombo>, ConstructionError> {
    let nu = nakayama(b)?;
    let nu_a = b
        .nakayama_arrows
        .as_ref()
        .ok_or(ConstructionError::MissingNakayamaArrows)?;
    let nu_inv = b
        .nakayama_inverse()
        .ok_or(ConstructionError::MissingNakayama)?;
    let nu_a_inv = b
        .nakayama_arrows_inverse()
        .ok_or(ConstructionError::MissingNakayamaArrows)?;
    let path = |arrows: &[ArrowId]| Path::from_arrows(q, arrows);
    let mut out = Vec::new();
    if squares {
        for i in b.quiver.vertex_ids() {
            out.push(PathCombo::from_path(path(&[beta(b, nu[i.0]), beta(b, i)])?));
        }
    }
    for g in b.quiver.arrows() {
        let (i, j) = (g.source, g.target);
        let rel = match variant {
            Variant::Forward => PathCombo::binomial(
                path(&[beta(b, j), g.id])?,
                int(1),
                path(&[nu_a[g.id.0], beta(b, i)])?,
                eps.clone(),
            )?,
            Variant::Reverse => PathCombo::binomial(
                path(&[g.id, beta(b, nu_inv[i.0])])?,
                int(1),
                path(&[beta(b, nu_inv[j.0]), nu_a_inv[g.id.0]])?,
                eps.clone(),
            )?,
        };
        out.push(rel);
    }
    Ok(out)
}

fn with_identity_nakayama(
    q: Quiver,
    relations: Vec<PathCombo>,
    loewy: Option<usize>,
) -> BoundQuiver {
    let mut out = BoundQuiver::with_relations(q, relations);
    out.nakayama = Some(out.quiver.vertex_ids().collect());
    out.nakayama_arrows = Some((0..out.quiver.arrow_count()).map(ArrowId).collect());
    out.loewy_length = loewy;
    out
}

/// Bound quiver of the twisted trivial extension: `ρ`, the squares
/// `β_{νi} β_i`, and one mixing relation per arrow.
pub fn twisted_trivial_extension(
    b: &BoundQuiver,
    twist: SignTwist,
    variant: Variant,
) -> Result<BoundQuiver, ConstructionError> {
    let q = returning_arrow_quiver(b)?;
    let mut relations = b.relations.clone();
    relations.extend(returning_relations(b, &q, twist.value(), true, variant)?);
    Ok(with_identity_nakayama(
        q,
        relations,
        b.loewy_length.map(|l| l + 1),
    ))
}

/// `(Q_{G'}, ρ_{G'})`: `ρ_G` plus `α β_{ν⁻¹i} − β_{ν⁻¹j} ν⁻¹(α)`.
pub fn mckay_returning_arrows_rho(b: &BoundQuiver) -> Result<BoundQuiver, ConstructionError> {
    let q = returning_arrow_quiver(b)?;
    let mut relations = b.relations.clone();
    relations.extend(returning_relations(b, &q, int(1), false, Variant::Reverse)?);
    Ok(with_identity_nakayama(q, relations, None))
}

/// `(Q_{G'}, θ_{G'})`: `θ_G`, the squares `β_{νi} β_i`, and
/// `α β_{ν⁻¹i} − ε β_{ν⁻¹j} ν⁻¹(α)`.
pub fn mckay_returning_arrows_theta(
    b: &BoundQuiver,
    twist: SignTwist,
) -> Result<BoundQuiver, ConstructionError> {
    twisted_trivial_extension(b, twist, Variant::Reverse)
}

/// Cyclic cover with vertices `(i, t)`, `t ∈ Z/m`. Vertex `(i, t)` has id
/// `t·|Q_0| + i`; arrow `(α, t)` has id `t·(|Q_1| + |Q_0|) + α` and
/// `(β_i, t): (i, t) → (νi, t+1)` follows the copies of `Q_1` at level `t`.
pub fn cyclic_cover(
    b: &BoundQuiver,
    m: u32,
    side: Side,
    twist: SignTwist,
) -> Result<BoundQuiver, ConstructionError> {
    cover_with_relation_sets(b, m, side, twist, &[&b.relations]).map(|mut v| v.remove(0))
}

/// Cyclic cover transforming several relation sets of the same side over one
/// quiver; the first element carries the quiver, the rest share it.
pub fn cover_with_relation_sets(
    b: &BoundQuiver,
    m: u32,
    side: Side,
    twist: SignTwist,
    sets: &[&[PathCombo]],
) -> Result<Vec<BoundQuiver>, ConstructionError> {
    if m == 0 {
        return Err(ConstructionError::ZeroCover);
    }
    let nu = nakayama(b)?;
    let nu_inv = b
        .nakayama_inverse()
        .ok_or(ConstructionError::MissingNakayama)?;
    let nu_a_inv = b
        .nakayama_arrows_inverse()
        .ok_or(ConstructionError::MissingNakayamaArrows)?;
    let src = &b.quiver;
    let (n0, n1) = (src.vertex_count(), src.arrow_count());
    let m_us = m as usize;
    let vid = |i: VertexId, t: usize| VertexId((t % m_us) * n0 + i.0);
    let aid = |a: ArrowId, t: usize| ArrowId((t % m_us) * (n0 + n1) + a.0);
    let bid = |i: VertexId, t: usize| ArrowId((t % m_us) * (n0 + n1) + n1 + i.0);
    let down = |t: usize| (t + m_us - 1) % m_us;

    let mut q = Quiver::new();
    for t in 0..m_us {
        for v in src.vertices() {
            q.add_vertex(VertexLabel::level(v.label.clone(), t as i64));
        }
    }
    for t in 0..m_us {
        for a in src.arrows() {
            q.add_arrow(
                vid(a.source, t),
                vid(a.target, t),
                ArrowLabel::leveled(a.label.clone(), t as i64),
            )?;
        }
        for v in src.vertices() {
            q.add_arrow(
                vid(v.id, t),
                vid(nu[v.id.0], t + 1),
                ArrowLabel::leveled(ArrowLabel::Returning(v.label.clone()), t as i64),
            )?;
        }
    }

    let eps = match side {
        Side::Rho => int(1),
        Side::Theta => twist.value(),
    };
    let path = |arrows: &[ArrowId]| Path::from_arrows(&q, arrows);
    let mut extra = Vec::new();
    for t in 0..m_us {
        if side == Side::Theta {
            for i in src.vertex_ids() {
                extra.push(PathCombo::from_path(path(&[
                    bid(nu[i.0], t + 1),
                    bid(i, t),
                ])?));
            }
        }
    }
    for t in 0..m_us {
        for a in src.arrows() {
            let (i, j) = (a.source, a.target);
            let lower = down(t);
            extra.push(PathCombo::binomial(
                path(&[aid(a.id, t), bid(nu_inv[i.0], lower)])?,
                int(1),
                path(&[bid(nu_inv[j.0], lower), aid(nu_a_inv[a.id.0], lower)])?,
                eps.clone(),
            )?);
        }
    }

    let nakayama: Vec<VertexId> = (0..m_us)
        .flat_map(|t| src.vertex_ids().map(move |i| (i, t)))
        .map(|(i, t)| vid(i, down(t)))
        .collect();
    let mut nakayama_arrows = vec![ArrowId(0); q.arrow_count()];
    for t in 0..m_us {
        for a in src.arrows() {
            nakayama_arrows[aid(a.id, t).0] = aid(a.id, down(t));
        }
        for i in src.vertex_ids() {
            nakayama_arrows[bid(i, t).0] = bid(i, down(t));
        }
    }

    let mut out = Vec::with_capacity(sets.len());
    for set in sets {
        let mut relations = Vec::new();
        for t in 0..m_us {
            for r in set.iter() {
                relations.push(r.map(|v| vid(v, t), |a| aid(a, t)));
            }
        }
        relations.extend(extra.iter().cloned());
        let mut cover = BoundQuiver::with_relations(q.clone(), relations);
        cover.nakayama = Some(nakayama.clone());
        cover.nakayama_arrows = Some(nakayama_arrows.clone());
        cover.loewy_length = match side {
            Side::Theta => b.loewy_length.map(|l| l + 1),
            Side::Rho => None,
        };
        out.push(cover);
    }
    Ok(out)
}

/// Largest `d` with `τ^d x` defined, per vertex.
pub fn translation_depths(
    q: &Quiver,
    tau: &BTreeMap<VertexId, VertexId>,
) -> Result<Vec<usize>, ConstructionError> {
    let mut depth = vec![0usize; q.vertex_count()];
    for v in q.vertex_ids() {
        let mut at = v;
        let mut d = 0;
        while let Some(next) = tau.get(&at) {
            d += 1;
            at = *next;
            if d > q.vertex_count() {
                return Err(QuiverError::InvalidBoundQuiver(format!(
                    "translation orbit of {} does not terminate",
                    q.vertex(v).label
                ))
                .into());
            }
        }
        depth[v.0] = d;
    }
    Ok(depth)
}

/// The cone: vertices `(x, d)` with `τ^d x` defined, arrows `(α, d)` and
/// connecting arrows `(x, d)_1: (x, d) → (τx, d−1)`, lifted and mesh
/// relations, and `τ(x, d) = (x, d+1)`.
///
/// Mesh terms through a missing vertex or arrow are dropped, so a mesh with
/// one surviving term is a zero relation. Lifted relations keep only the
/// terms that survive at their level.
pub fn cone(b: &BoundQuiver) -> Result<BoundQuiver, ConstructionError> {
    let tau = b
        .translation
        .as_ref()
        .ok_or(ConstructionError::MissingTranslation)?;
    let src = &b.quiver;
    let depth = translation_depths(src, tau)?;
    let max_depth = depth.iter().copied().max().unwrap_or(0);
    let tau_inv: HashMap<VertexId, VertexId> = tau.iter().map(|(x, y)| (*y, *x)).collect();

    let mut q = Quiver::new();
    let mut vmap: HashMap<(VertexId, usize), VertexId> = HashMap::new();
    for d in 0..=max_depth {
        for v in src.vertices() {
            if depth[v.id.0] >= d {
                let id = q.add_vertex(VertexLabel::level(v.label.clone(), d as i64));
                vmap.insert((v.id, d), id);
            }
        }
    }
    let mut amap: HashMap<(ArrowId, usize), ArrowId> = HashMap::new();
    let mut connecting: HashMap<(VertexId, usize), ArrowId> = HashMap::new();
    for d in 0..=max_depth {
        for a in src.arrows() {
            if let (Some(s), Some(t)) = (vmap.get(&(a.source, d)), vmap.get(&(a.target, d))) {
                let id = q.add_arrow(*s, *t, ArrowLabel::leveled(a.label.clone(), d as i64))?;
                amap.insert((a.id, d), id);
            }
        }
        if d > 0 {
            for v in src.vertices() {
                if let Some(s) = vmap.get(&(v.id, d)) {
                    let t = vmap[&(tau[&v.id], d - 1)];
                    let label =
                        ArrowLabel::Connecting(VertexLabel::level(v.label.clone(), d as i64));
                    connecting.insert((v.id, d), q.add_arrow(*s, t, label)?);
                }
            }
        }
    }

    let mut relations = Vec::new();
    for d in 0..=max_depth {
        for r in &b.relations {
            let (Some(s), Some(t)) = (vmap.get(&(r.source(), d)), vmap.get(&(r.target(), d)))
            else {
                continue;
            };
            let mut lifted = PathCombo::zero(*s, *t, r.length());
            for (p, h) in r.terms() {
                let arrows: Option<Vec<ArrowId>> = p
                    .arrows()
                    .iter()
                    .map(|a| amap.get(&(*a, d)).copied())
                    .collect();
                let lifted_path = match arrows {
                    Some(arrows) if !arrows.is_empty() => Path::from_arrows(&q, &arrows)?,
                    Some(_) => Path::trivial(*s),
                    None => continue,
                };
                lifted.add_term(lifted_path, h.clone())?;
            }
            if !lifted.is_zero() {
                relations.push(lifted);
            }
        }
    }
    for a in src.arrows() {
        // α: τx → y
        let Some(&x) = tau_inv.get(&a.source) else {
            continue;
        };
        let y = a.target;
        for d in 1..=depth[x.0] {
            let (Some(&from), Some(&to)) = (vmap.get(&(x, d)), vmap.get(&(y, d - 1))) else {
                continue;
            };
            let mut mesh = PathCombo::zero(from, to, 2);
            if let Some(&first) = amap.get(&(a.id, d - 1)) {
                mesh.add_term(
                    Path::from_arrows(&q, &[first, connecting[&(x, d)]])?,
                    int(1),
                )?;
            }
            if let Some(&y_plus) = tau_inv.get(&y) {
                let position = src
                    .arrows_between(a.source, y)
                    .iter()
                    .position(|id| *id == a.id)
                    .expect("arrow is parallel to itself");
                let lifted = src.arrows_between(x, y_plus).get(position).copied();
                if let (Some(g), Some(&c)) = (lifted, connecting.get(&(y_plus, d))) {
                    if let Some(&g) = amap.get(&(g, d)) {
                        mesh.add_term(Path::from_arrows(&q, &[c, g])?, int(-1))?;
                    }
                }
            }
            if !mesh.is_zero() {
                relations.push(mesh);
            }
        }
    }

    let mut translation = BTreeMap::new();
    for ((v, d), id) in &vmap {
        if let Some(up) = vmap.get(&(*v, d + 1)) {
            translation.insert(*id, *up);
        }
    }
    let mut out = BoundQuiver::with_relations(q, relations);
    out.translation = Some(translation);
    Ok(out)
}

/// Linear `A_s`: vertices `1..=s`, arrows `a_i: i → i+1`, `τ(i) = i−1`.
pub fn linear_a(s: usize) -> BoundQuiver {
    let mut q = Quiver::new();
    let v: Vec<VertexId> = (1..=s)
        .map(|i| q.add_vertex(VertexLabel::Residue(i as i64)))
        .collect();
    for i in 1..s {
        q.add_arrow(v[i - 1], v[i], ArrowLabel::named(format!("a{i}")))
            .expect("vertices exist");
    }
    let mut b = BoundQuiver::new(q);
    b.translation = Some((1..s).map(|i| (v[i], v[i - 1])).collect());
    b
}

/// `T^n_s`: `A_s` coned `n − 1` times.
pub fn t_algebra(s: usize, n: usize) -> Result<BoundQuiver, ConstructionError> {
    let mut b = linear_a(s);
    for _ in 1..n {
        b = cone(&b)?;
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mckay::{abelian_bound_mckay, AbelianMcKaySpec};
    use crate::path_algebra::quadratic_orthocheck;

    fn single_vertex() -> BoundQuiver {
        let mut q = Quiver::new();
        q.add_vertex(VertexLabel::Residue(0));
        let mut b = BoundQuiver::new(q);
        b.nakayama = Some(vec![VertexId(0)]);
        b.nakayama_arrows = Some(vec![]);
        b
    }

    #[test]
    fn returning_arrow_counts() {
        let b = single_vertex();
        let q = returning_arrow_quiver(&b).unwrap();
        assert_eq!(q.arrow_count(), 1);
        assert!(q.arrow(ArrowId(0)).label.is_returning());

        let m = abelian_bound_mckay(&AbelianMcKaySpec::cyclic(5, 1))
            .unwrap()
            .rho_side;
        let q = returning_arrow_quiver(&m).unwrap();
        assert_eq!(q.vertex_count(), 5);
        assert_eq!(q.arrow_count(), 10);
        for i in 0..5 {
            assert_eq!(
                q.arrows_between(VertexId(i), VertexId((i + 4) % 5)).len(),
                1
            );
        }
        assert!(matches!(
            returning_arrow_quiver(&BoundQuiver::new(Quiver::new())),
            Err(ConstructionError::MissingNakayama)
        ));
    }

    #[test]
    fn trivial_extension_of_a_point() {
        let t = twisted_trivial_extension(&single_vertex(), SignTwist::Minus, Variant::Forward)
            .unwrap();
        assert_eq!(t.relations.len(), 1);
        assert_eq!(t.relations[0].length(), 2);
        let (path, _) = t.relations[0].terms().iter().next().unwrap();
        assert_eq!(path.arrows(), &[ArrowId(0), ArrowId(0)]);
    }

    #[test]
    fn variants_span_the_same_relations() {
        let spec = AbelianMcKaySpec::new(vec![3], vec![vec![1], vec![1]]);
        let theta = abelian_bound_mckay(&spec).unwrap().theta_side;
        let fwd = twisted_trivial_extension(&theta, SignTwist::Minus, Variant::Forward).unwrap();
        let rev = twisted_trivial_extension(&theta, SignTwist::Minus, Variant::Reverse).unwrap();
        let n = theta.relations.len() + theta.quiver.vertex_count() + theta.quiver.arrow_count();
        assert_eq!(fwd.relations.len(), n);
        let to_set = |b: &BoundQuiver| {
            let mut v: Vec<_> = b.relations.iter().map(|r| r.terms().clone()).collect();
            v.sort();
            v
        };
        assert_eq!(to_set(&fwd), to_set(&rev));
    }

    #[test]
    fn returning_sides_are_dual() {
        for spec in [
            AbelianMcKaySpec::cyclic(3, 1),
            AbelianMcKaySpec::new(vec![3], vec![vec![1], vec![2]]),
            AbelianMcKaySpec::new(vec![2, 2], vec![vec![1, 0], vec![0, 1]]),
        ] {
            let b = abelian_bound_mckay(&spec).unwrap();
            let rho = mckay_returning_arrows_rho(&b.rho_side).unwrap();
            let theta = mckay_returning_arrows_theta(&b.theta_side, SignTwist::Minus).unwrap();
            assert_eq!(
                rho.relations.len(),
                b.rho_side.relations.len() + b.rho_side.quiver.arrow_count()
            );
            let r = quadratic_orthocheck(&rho.quiver, &rho.relations, &theta.relations).unwrap();
            assert!(r.passed, "{spec:?}");
            let wrong = mckay_returning_arrows_theta(&b.theta_side, SignTwist::Plus).unwrap();
            let r = quadratic_orthocheck(&rho.quiver, &rho.relations, &wrong.relations).unwrap();
            assert!(!r.passed);
        }
    }

    #[test]
    fn cover_of_degree_one_is_the_returning_construction() {
        let spec = AbelianMcKaySpec::new(vec![4], vec![vec![1], vec![2]]);
        let b = abelian_bound_mckay(&spec).unwrap();
        for (side, src) in [(Side::Rho, &b.rho_side), (Side::Theta, &b.theta_side)] {
            let cover = cyclic_cover(src, 1, side, SignTwist::Minus).unwrap();
            let ret = match side {
                Side::Rho => mckay_returning_arrows_rho(src).unwrap(),
                Side::Theta => mckay_returning_arrows_theta(src, SignTwist::Minus).unwrap(),
            };
            assert_eq!(cover.relations, ret.relations);
            assert_eq!(cover.nakayama, ret.nakayama);
            assert_eq!(cover.nakayama_arrows, ret.nakayama_arrows);
            assert_eq!(cover.loewy_length, ret.loewy_length);
            for (x, y) in cover.quiver.arrows().iter().zip(ret.quiver.arrows()) {
                assert_eq!((x.source, x.target), (y.source, y.target));
            }
        }
    }

    #[test]
    fn cover_counts_and_nakayama() {
        let b = abelian_bound_mckay(&AbelianMcKaySpec::cyclic(3, 1))
            .unwrap()
            .rho_side;
        let c = cyclic_cover(&b, 4, Side::Rho, SignTwist::Minus).unwrap();
        assert_eq!(c.quiver.vertex_count(), 12);
        assert_eq!(c.quiver.arrow_count(), 4 * (3 + 3));
        c.validate().unwrap();
        let nu = c.nakayama.as_ref().unwrap();
        assert_eq!(nu[3 + 1], VertexId(1));
        assert_eq!(nu[1], VertexId(9 + 1));
        assert!(matches!(
            cyclic_cover(&b, 0, Side::Rho, SignTwist::Minus),
            Err(ConstructionError::ZeroCover)
        ));
    }

    #[test]
    fn cone_of_a2() {
        let c = t_algebra(2, 2).unwrap();
        let labels: Vec<String> = c
            .quiver
            .vertices()
            .iter()
            .map(|v| v.label.to_string())
            .collect();
        assert_eq!(labels, vec!["(1,0)", "(2,0)", "(2,1)"]);
        assert_eq!(c.quiver.arrow_count(), 2);
        assert_eq!(c.relations.len(), 1);
        let r = &c.relations[0];
        assert_eq!(r.len(), 1);
        assert_eq!(r.display(&c.quiver), "1*(a1,0)*(2,1)_1");
        let tau = c.translation.as_ref().unwrap();
        assert_eq!(tau.len(), 1);
        assert_eq!(tau[&VertexId(1)], VertexId(2));
    }

    #[test]
    fn cone_of_a3_is_the_auslander_algebra() {
        let c = t_algebra(3, 2).unwrap();
        assert_eq!(c.quiver.vertex_count(), 6);
        assert_eq!(c.quiver.arrow_count(), 6);
        let mut shapes: Vec<usize> = c.relations.iter().map(PathCombo::len).collect();
        shapes.sort();
        assert_eq!(shapes, vec![1, 1, 2]);
    }

    #[test]
    fn cone_without_translation_copies_level_zero() {
        let mut b = linear_a(3);
        b.translation = Some(BTreeMap::new());
        let c = cone(&b).unwrap();
        assert_eq!(c.quiver.vertex_count(), 3);
        assert_eq!(c.quiver.arrow_count(), 2);
        assert!(c.relations.is_empty());
        assert!(c.translation.unwrap().is_empty());
    }

    #[test]
    fn t_algebra_vertex_counts() {
        fn binom(n: usize, k: usize) -> usize {
            (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
        }
        for s in 1..=5 {
            for n in 1..=3 {
                let t = t_algebra(s, n).unwrap();
                assert_eq!(t.quiver.vertex_count(), binom(s + n - 1, n), "s={s} n={n}");
                t.validate().unwrap();
            }
        }
    }
}
