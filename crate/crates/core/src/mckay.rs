//! McKay quivers from character data, and the bound McKay quivers of
//! diagonal abelian groups.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::character::{all_residues, residue_index, CharacterError, CharacterTable, RepCharacter};
use crate::cyclotomic::CyclotomicNumber;
use crate::path_algebra::{stable_translation_check, PathAlgebraError, StqReport};
use crate::quiver::{
    ArrowId, ArrowLabel, BoundQuiver, Path, PathCombo, Quiver, QuiverError, VertexId, VertexLabel,
};
use crate::rational::int;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum McKayError {
    #[error(transparent)]
    Character(#[from] CharacterError),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    PathAlgebra(#[from] PathAlgebraError),
    #[error("invalid abelian spec: {0}")]
    InvalidSpec(String),
    #[error("no irreducible equals {0} tensored with the inverse determinant")]
    NoNakayamaImage(String),
}

/// A diagonal abelian group `Z_{r_1} × … × Z_{r_t} ⊂ GL(n)`: one weight
/// (residue tuple) per coordinate of `V`. Repeated weights are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianMcKaySpec {
    pub orders: Vec<u32>,
    pub weights: Vec<Vec<i64>>,
}

impl AbelianMcKaySpec {
    pub fn new(orders: Vec<u32>, weights: Vec<Vec<i64>>) -> Self {
        AbelianMcKaySpec { orders, weights }
    }

    /// `Z_r` acting on a single coordinate with weight `w`.
    pub fn cyclic(r: u32, w: i64) -> Self {
        AbelianMcKaySpec {
            orders: vec![r],
            weights: vec![vec![w]],
        }
    }

    pub fn validate(&self) -> Result<(), McKayError> {
        if self.orders.is_empty() || self.orders.contains(&0) {
            return Err(McKayError::InvalidSpec(
                "orders must be positive and nonempty".into(),
            ));
        }
        if self.weights.is_empty() {
            return Err(McKayError::InvalidSpec(
                "at least one weight is required".into(),
            ));
        }
        if let Some(w) = self.weights.iter().find(|w| w.len() != self.orders.len()) {
            return Err(McKayError::InvalidSpec(format!(
                "weight {w:?} has arity {}, expected {}",
                w.len(),
                self.orders.len()
            )));
        }
        Ok(())
    }

    pub fn group_order(&self) -> u64 {
        self.orders.iter().map(|r| *r as u64).product()
    }

    pub fn dimension(&self) -> usize {
        self.weights.len()
    }

    /// `Σ_j w_j`, reduced.
    pub fn weight_sum(&self) -> Vec<i64> {
        (0..self.orders.len())
            .map(|k| {
                let s: i64 = self.weights.iter().map(|w| w[k]).sum();
                s.rem_euclid(self.orders[k] as i64)
            })
            .collect()
    }

    /// `G̃ = G' × C_m` as a diagonal group: old weights padded with `0`, plus
    /// the returning coordinate `(−Σw, 1)`.
    pub fn extended(&self, m: u32) -> AbelianMcKaySpec {
        let mut orders = self.orders.clone();
        orders.push(m);
        let mut weights: Vec<Vec<i64>> = self
            .weights
            .iter()
            .map(|w| {
                let mut w = w.clone();
                w.push(0);
                w
            })
            .collect();
        let mut last: Vec<i64> = self
            .weight_sum()
            .iter()
            .zip(&self.orders)
            .map(|(s, r)| (-s).rem_euclid(*r as i64))
            .collect();
        last.push(1 % m as i64);
        weights.push(last);
        AbelianMcKaySpec { orders, weights }
    }
}

/// The McKay quiver of an abelian group with both relation sets. The two
/// sides share quiver and Nakayama data; the θ side carries the Loewy length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianBoundMcKay {
    pub spec: AbelianMcKaySpec,
    pub rho_side: BoundQuiver,
    pub theta_side: BoundQuiver,
}

/// Vertex per irreducible, `a_{i,j}` parallel arrows `i → j`.
pub fn mckay_quiver(table: &CharacterTable, chi_v: &RepCharacter) -> Result<Quiver, McKayError> {
    let conj: Vec<Vec<CyclotomicNumber>> = table
        .irreducibles
        .iter()
        .map(|s| s.values.iter().map(CyclotomicNumber::conj).collect())
        .collect();
    let mut q = Quiver::new();
    for s in &table.irreducibles {
        q.add_vertex(s.label.clone());
    }
    for i in 0..table.irreducible_count() {
        let row = table.tensor_decompose_with(chi_v, i, &conj)?;
        for (j, a) in row.iter().enumerate() {
            for k in 0..*a {
                let label = ArrowLabel::named(format!(
                    "{}->{}#{k}",
                    table.irreducibles[i].label, table.irreducibles[j].label
                ));
                q.add_arrow(VertexId(i), VertexId(j), label)?;
            }
        }
    }
    Ok(q)
}

fn add(orders: &[u32], a: &[i64], b: &[i64]) -> Vec<i64> {
    orders
        .iter()
        .zip(a.iter().zip(b))
        .map(|(r, (x, y))| (x + y).rem_euclid(*r as i64))
        .collect()
}

/// Bound McKay quiver of a diagonal abelian group. Vertex `i` is the residue
/// tuple with mixed-radix index `i`; arrow `α_j(i): i → i + w_j` has id
/// `i·n + j`.
pub fn abelian_bound_mckay(spec: &AbelianMcKaySpec) -> Result<AbelianBoundMcKay, McKayError> {
    spec.validate()?;
    let orders = &spec.orders;
    let n = spec.dimension();
    let elements = all_residues(orders);
    let mut q = Quiver::new();
    for e in &elements {
        q.add_vertex(VertexLabel::residues(e));
    }
    for e in &elements {
        let src = VertexId(residue_index(orders, e));
        for (j, w) in spec.weights.iter().enumerate() {
            let tgt = VertexId(residue_index(orders, &add(orders, e, w)));
            let label = ArrowLabel::named(format!("a{}[{}]", j + 1, VertexLabel::residues(e)));
            q.add_arrow(src, tgt, label)?;
        }
    }
    let alpha = |i: &[i64], j: usize| ArrowId(residue_index(orders, i) * n + j);
    let path2 = |second: ArrowId, first: ArrowId| Path::from_arrows(&q, &[second, first]);

    let mut rho = Vec::new();
    let mut theta = Vec::new();
    for e in &elements {
        for j in 0..n {
            let after_j = add(orders, e, &spec.weights[j]);
            theta.push(PathCombo::from_path(path2(
                alpha(&after_j, j),
                alpha(e, j),
            )?));
        }
        for j in 0..n {
            for l in j + 1..n {
                let after_j = add(orders, e, &spec.weights[j]);
                let after_l = add(orders, e, &spec.weights[l]);
                let lj = path2(alpha(&after_j, l), alpha(e, j))?;
                let jl = path2(alpha(&after_l, j), alpha(e, l))?;
                rho.push(PathCombo::binomial(lj.clone(), int(1), jl.clone(), int(1))?);
                theta.push(PathCombo::binomial(lj, int(1), jl, int(-1))?);
            }
        }
    }

    let shift: Vec<i64> = spec.weight_sum().iter().map(|s| -s).collect();
    let nakayama: Vec<VertexId> = elements
        .iter()
        .map(|e| VertexId(residue_index(orders, &add(orders, e, &shift))))
        .collect();
    let nakayama_arrows: Vec<ArrowId> = elements
        .iter()
        .flat_map(|e| {
            let image = add(orders, e, &shift);
            (0..n).map(move |j| (image.clone(), j))
        })
        .map(|(image, j)| alpha(&image, j))
        .collect();

    let mut rho_side = BoundQuiver::with_relations(q.clone(), rho);
    rho_side.nakayama = Some(nakayama.clone());
    rho_side.nakayama_arrows = Some(nakayama_arrows.clone());
    let mut theta_side = BoundQuiver::with_relations(q, theta);
    theta_side.nakayama = Some(nakayama);
    theta_side.nakayama_arrows = Some(nakayama_arrows);
    theta_side.loewy_length = Some(n + 1);
    Ok(AbelianBoundMcKay {
        spec: spec.clone(),
        rho_side,
        theta_side,
    })
}

/// `ν(i)` = the `j` with `χ_j = χ_i · det⁻¹`.
pub fn nakayama_from_det(
    table: &CharacterTable,
    det: &[CyclotomicNumber],
) -> Result<Vec<VertexId>, McKayError> {
    let inverse: Vec<_> = det.iter().map(CyclotomicNumber::conj).collect();
    twist_permutation(table, &inverse)
}

fn twist_permutation(
    table: &CharacterTable,
    by: &[CyclotomicNumber],
) -> Result<Vec<VertexId>, McKayError> {
    if by.len() != table.class_count() {
        return Err(CharacterError::InvalidInput("determinant has the wrong length".into()).into());
    }
    let mut out = Vec::with_capacity(table.irreducible_count());
    for s in &table.irreducibles {
        let twisted = table.product(&s.values, by)?;
        let j = table
            .irreducibles
            .iter()
            .position(|t| t.values == twisted)
            .ok_or_else(|| McKayError::NoNakayamaImage(s.name.clone()))?;
        out.push(VertexId(j));
    }
    Ok(out)
}

/// Outcome of checking `ν = ⊗ det⁻¹` against the stable translation axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NakayamaValidation {
    pub nakayama: Vec<VertexId>,
    pub report: StqReport,
    /// Set only when validation failed: whether `⊗ det` would have passed.
    /// Reported, never substituted.
    pub opposite_passes: Option<bool>,
}

impl NakayamaValidation {
    pub fn validated(&self) -> bool {
        self.report.passed
    }
}

/// Computes `ν` from the determinant and checks it on a θ-side bound quiver
/// whose vertex `i` is irreducible `i`.
pub fn validate_nakayama(
    table: &CharacterTable,
    det: &[CyclotomicNumber],
    theta_side: &BoundQuiver,
    l: usize,
) -> Result<NakayamaValidation, McKayError> {
    let nakayama = nakayama_from_det(table, det)?;
    let mut b = theta_side.clone();
    b.nakayama = Some(nakayama.clone());
    b.nakayama_arrows = None;
    let report = stable_translation_check(&b, l)?;
    let opposite_passes = if report.passed {
        None
    } else {
        let opposite = twist_permutation(table, det)?;
        b.nakayama = Some(opposite);
        Some(stable_translation_check(&b, l)?.passed)
    };
    Ok(NakayamaValidation {
        nakayama,
        report,
        opposite_passes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::{abelian_table, s3_table, weights_character};
    use crate::quiver::{quiver_equal_under, QuiverIsoWitness};

    #[test]
    fn trivial_group_gives_loops() {
        let t = abelian_table(&[1]).unwrap();
        let chi = RepCharacter::new(vec![CyclotomicNumber::from_int(3)]);
        let q = mckay_quiver(&t, &chi).unwrap();
        assert_eq!(q.vertex_count(), 1);
        assert_eq!(q.arrow_count(), 3);
        assert!(q.arrows().iter().all(|a| a.source == a.target));
    }

    #[test]
    fn cyclic_quivers() {
        let t = abelian_table(&[3]).unwrap();
        let chi = weights_character(&t, &[vec![1]]).unwrap();
        let q = mckay_quiver(&t, &chi).unwrap();
        for i in 0..3 {
            assert_eq!(
                q.arrows_between(VertexId(i), VertexId((i + 1) % 3)).len(),
                1
            );
            assert_eq!(q.outgoing(VertexId(i)).len(), 1);
        }
        let chi = weights_character(&t, &[vec![1], vec![2]]).unwrap();
        let q = mckay_quiver(&t, &chi).unwrap();
        assert_eq!(q.arrow_count(), 6);
        for i in 0..3 {
            assert_eq!(
                q.arrows_between(VertexId(i), VertexId((i + 2) % 3)).len(),
                1
            );
        }
    }

    #[test]
    fn s3_mckay_quiver() {
        // standard representation of S_3 ⊂ GL(2): affine A_2 shape with the
        // sign and trivial vertices both joined to std
        let t = s3_table();
        let chi = RepCharacter::new(t.irreducibles[2].values.clone());
        let q = mckay_quiver(&t, &chi).unwrap();
        assert_eq!(q.arrows_between(VertexId(0), VertexId(2)).len(), 1);
        assert_eq!(q.arrows_between(VertexId(1), VertexId(2)).len(), 1);
        assert_eq!(q.arrows_between(VertexId(2), VertexId(2)).len(), 1);
        assert_eq!(q.arrows_between(VertexId(2), VertexId(0)).len(), 1);
        assert_eq!(q.arrow_count(), 5);
    }

    #[test]
    fn abelian_bound_examples() {
        let b = abelian_bound_mckay(&AbelianMcKaySpec::cyclic(4, 1)).unwrap();
        assert!(b.rho_side.relations.is_empty());
        assert_eq!(b.theta_side.relations.len(), 4);
        let nu = b.rho_side.nakayama.as_ref().unwrap();
        for (i, v) in nu.iter().enumerate() {
            assert_eq!(*v, VertexId((i + 3) % 4));
        }

        let spec = AbelianMcKaySpec::new(vec![3], vec![vec![1], vec![2]]);
        let b = abelian_bound_mckay(&spec).unwrap();
        assert_eq!(b.rho_side.relations.len(), 3);
        assert!(b
            .rho_side
            .nakayama
            .as_ref()
            .unwrap()
            .iter()
            .enumerate()
            .all(|(i, v)| v.0 == i));

        let spec = AbelianMcKaySpec::new(vec![2, 2], vec![vec![1, 0], vec![0, 1]]);
        let b = abelian_bound_mckay(&spec).unwrap();
        assert_eq!(b.rho_side.quiver.vertex_count(), 4);
        assert_eq!(b.rho_side.quiver.arrow_count(), 8);
        assert_eq!(b.rho_side.relations.len(), 4);
        assert_eq!(b.rho_side.nakayama.as_ref().unwrap()[0], VertexId(3));
        b.rho_side.validate().unwrap();
        b.theta_side.validate().unwrap();
    }

    #[test]
    fn fast_path_matches_characters() {
        let specs = [
            AbelianMcKaySpec::cyclic(5, 2),
            AbelianMcKaySpec::new(vec![4], vec![vec![1], vec![1], vec![2]]),
            AbelianMcKaySpec::new(vec![2, 3], vec![vec![1, 0], vec![1, 2]]),
        ];
        for spec in specs {
            let t = abelian_table(&spec.orders).unwrap();
            let chi = weights_character(&t, &spec.weights).unwrap();
            let q = mckay_quiver(&t, &chi).unwrap();
            let b = abelian_bound_mckay(&spec).unwrap();
            let w = QuiverIsoWitness::by_vertex_labels(&q, &b.rho_side.quiver).unwrap();
            assert!(quiver_equal_under(&w, &q, &b.rho_side.quiver));
            let nu = nakayama_from_det(&t, chi.det.as_ref().unwrap()).unwrap();
            assert_eq!(Some(&nu), b.rho_side.nakayama.as_ref());
        }
    }

    #[test]
    fn nakayama_is_validated() {
        let spec = AbelianMcKaySpec::new(vec![2, 2], vec![vec![1, 0], vec![0, 1]]);
        let t = abelian_table(&spec.orders).unwrap();
        let chi = weights_character(&t, &spec.weights).unwrap();
        let b = abelian_bound_mckay(&spec).unwrap();
        let v = validate_nakayama(&t, chi.det.as_ref().unwrap(), &b.theta_side, 2).unwrap();
        assert!(v.validated());
        assert_eq!(v.opposite_passes, None);

        // Z_3 weight 1: det⁻¹ gives i ↦ i−1, det would give i ↦ i+1
        let spec = AbelianMcKaySpec::cyclic(3, 1);
        let t = abelian_table(&spec.orders).unwrap();
        let chi = weights_character(&t, &spec.weights).unwrap();
        let b = abelian_bound_mckay(&spec).unwrap();
        let v = validate_nakayama(&t, chi.det.as_ref().unwrap(), &b.theta_side, 1).unwrap();
        assert!(v.validated());
        assert_eq!(v.nakayama[1], VertexId(0));
    }

    #[test]
    fn sl_groups_have_trivial_nakayama() {
        let t = s3_table();
        let det = vec![
            CyclotomicNumber::from_int(1),
            CyclotomicNumber::from_int(1),
            CyclotomicNumber::from_int(1),
        ];
        let nu = nakayama_from_det(&t, &det).unwrap();
        assert_eq!(nu, vec![VertexId(0), VertexId(1), VertexId(2)]);
    }

    #[test]
    fn extended_spec() {
        let spec = AbelianMcKaySpec::cyclic(3, 1);
        let e = spec.extended(2);
        assert_eq!(e.orders, vec![3, 2]);
        assert_eq!(e.weights, vec![vec![1, 0], vec![2, 1]]);
        assert_eq!(e.weight_sum(), vec![0, 1]);
    }
}
