//! Character tables with exact cyclotomic values.
//!
//! Conventions: class 0 is the identity class; irreducible values are listed
//! per class in table order. Multiplicities are computed exactly and any
//! non-integral result is an error, never rounded.

use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::cyclotomic::{root_of_unity, sum_of_products, CyclotomicError, CyclotomicNumber};
use crate::quiver::VertexLabel;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharacterError {
    #[error("inconsistent character table: {0}")]
    TableInconsistency(String),
    #[error(transparent)]
    Cyclotomic(#[from] CyclotomicError),
    #[error("determinant values are required")]
    MissingDeterminant,
    #[error("irreducible index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("{0}")]
    InvalidInput(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub name: String,
    pub size: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Irreducible {
    pub name: String,
    /// Vertex label this irreducible gets in a McKay quiver.
    pub label: VertexLabel,
    pub values: Vec<CyclotomicNumber>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    pub group_order: u64,
    pub classes: Vec<ConjugacyClass>,
    pub irreducibles: Vec<Irreducible>,
    /// Set for `Z_{r_1} × … × Z_{r_t}` tables built by [`abelian_table`]:
    /// class and irreducible indices are then mixed-radix residue tuples.
    pub abelian_orders: Option<Vec<u32>>,
}

/// A character of the group on the classes of some table, optionally with
/// the determinant of the representation on each class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepCharacter {
    pub values: Vec<CyclotomicNumber>,
    pub det: Option<Vec<CyclotomicNumber>>,
}

impl RepCharacter {
    pub fn new(values: Vec<CyclotomicNumber>) -> Self {
        RepCharacter { values, det: None }
    }

    /// `χ(e)` as a positive integer.
    pub fn dimension(&self) -> Result<u64, CharacterError> {
        let d = self
            .values
            .first()
            .ok_or_else(|| CharacterError::InvalidInput("empty character".into()))?
            .as_rational()?;
        positive_integer(&d).ok_or_else(|| {
            CharacterError::TableInconsistency(format!("χ(e) = {d} is not a positive integer"))
        })
    }
}

/// `V' = V ⊕ det⁻¹` inside `SL`, remembering the added coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlEmbedding {
    pub character: RepCharacter,
    /// `det(c)⁻¹` per class: the character of the added coordinate.
    pub last_coordinate: Vec<CyclotomicNumber>,
}

fn positive_integer(q: &Rational) -> Option<u64> {
    if q.is_integer() && q.is_positive() {
        q.to_integer().to_u64()
    } else {
        None
    }
}

fn nonnegative_integer(q: &Rational) -> Option<u64> {
    if q.is_integer() && !q.is_negative() {
        q.to_integer().to_u64()
    } else {
        None
    }
}

impl CharacterTable {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn irreducible_count(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn irreducible(&self, i: usize) -> Result<&Irreducible, CharacterError> {
        self.irreducibles
            .get(i)
            .ok_or(CharacterError::IndexOutOfRange(i))
    }

    pub fn dimension(&self, i: usize) -> Result<u64, CharacterError> {
        let d = self.irreducible(i)?.values[0].as_rational()?;
        positive_integer(&d).ok_or_else(|| {
            CharacterError::TableInconsistency(format!("irreducible {i} has dimension {d}"))
        })
    }

    fn check_length(&self, values: &[CyclotomicNumber]) -> Result<(), CharacterError> {
        if values.len() != self.classes.len() {
            return Err(CharacterError::InvalidInput(format!(
                "character has {} values for {} classes",
                values.len(),
                self.classes.len()
            )));
        }
        Ok(())
    }

    /// Pointwise product of two class functions.
    pub fn product(
        &self,
        a: &[CyclotomicNumber],
        b: &[CyclotomicNumber],
    ) -> Result<Vec<CyclotomicNumber>, CharacterError> {
        self.check_length(a)?;
        self.check_length(b)?;
        a.iter()
            .zip(b)
            .map(|(x, y)| x.try_mul(y).map_err(Into::into))
            .collect()
    }

    /// `(1/|G|) Σ_c |c| φ(c) conj(ψ(c))`, which must be rational.
    pub fn inner_product(
        &self,
        phi: &[CyclotomicNumber],
        psi: &[CyclotomicNumber],
    ) -> Result<Rational, CharacterError> {
        self.check_length(phi)?;
        self.check_length(psi)?;
        let conj: Vec<_> = psi.iter().map(CyclotomicNumber::conj).collect();
        self.inner_product_conj(phi, &conj)
    }

    fn inner_product_conj(
        &self,
        phi: &[CyclotomicNumber],
        psi_conj: &[CyclotomicNumber],
    ) -> Result<Rational, CharacterError> {
        let sum = sum_of_products(
            self.classes
                .iter()
                .zip(phi)
                .zip(psi_conj)
                .map(|((cls, x), y)| (Rational::from_integer(cls.size.into()), x, y)),
        )?;
        let sum = sum.scale(&Rational::new(1.into(), self.group_order.into()));
        sum.as_rational().map_err(|_| {
            CharacterError::TableInconsistency(format!("inner product {sum} is not rational"))
        })
    }

    /// Multiplicities `a_{i,j}` of `S_j` in `V ⊗ S_i`.
    pub fn tensor_decompose(
        &self,
        chi_v: &RepCharacter,
        i: usize,
    ) -> Result<Vec<u64>, CharacterError> {
        let conj: Vec<Vec<_>> = self
            .irreducibles
            .iter()
            .map(|s| s.values.iter().map(CyclotomicNumber::conj).collect())
            .collect();
        self.tensor_decompose_with(chi_v, i, &conj)
    }

    pub(crate) fn tensor_decompose_with(
        &self,
        chi_v: &RepCharacter,
        i: usize,
        irreducibles_conj: &[Vec<CyclotomicNumber>],
    ) -> Result<Vec<u64>, CharacterError> {
        let s_i = self.irreducible(i)?;
        let prod = self.product(&chi_v.values, &s_i.values)?;
        let mut mult = Vec::with_capacity(self.irreducibles.len());
        for (j, conj) in irreducibles_conj.iter().enumerate() {
            let a = self.inner_product_conj(&prod, conj)?;
            let a = nonnegative_integer(&a).ok_or_else(|| {
                CharacterError::TableInconsistency(format!(
                    "multiplicity of {} in V ⊗ {} is {a}",
                    self.irreducibles[j].name, s_i.name
                ))
            })?;
            mult.push(a);
        }
        let lhs: u64 = mult
            .iter()
            .enumerate()
            .map(|(j, a)| self.dimension(j).map(|d| a * d))
            .sum::<Result<u64, _>>()?;
        let rhs = chi_v.dimension()? * self.dimension(i)?;
        if lhs != rhs {
            return Err(CharacterError::TableInconsistency(format!(
                "V ⊗ {} decomposes into dimension {lhs}, expected {rhs}",
                s_i.name
            )));
        }
        Ok(mult)
    }

    /// Class sizes, identity class, dimension sum, row orthonormality and
    /// column orthogonality, all exact.
    pub fn validate(&self) -> Result<(), CharacterError> {
        let bad = |m: String| Err(CharacterError::TableInconsistency(m));
        let total: u64 = self.classes.iter().map(|c| c.size).sum();
        if total != self.group_order {
            return bad(format!(
                "class sizes sum to {total}, group order {}",
                self.group_order
            ));
        }
        if self.classes.first().map(|c| c.size) != Some(1) {
            return bad("class 0 must be the identity class".into());
        }
        if self.irreducibles.len() != self.classes.len() {
            return bad("number of irreducibles differs from number of classes".into());
        }
        for s in &self.irreducibles {
            self.check_length(&s.values)?;
        }
        let dims: Vec<u64> = (0..self.irreducibles.len())
            .map(|i| self.dimension(i))
            .collect::<Result<_, _>>()?;
        let sq: u64 = dims.iter().map(|d| d * d).sum();
        if sq != self.group_order {
            return bad(format!("squared dimensions sum to {sq}"));
        }
        for (i, a) in self.irreducibles.iter().enumerate() {
            let conj: Vec<_> = a.values.iter().map(CyclotomicNumber::conj).collect();
            for (j, b) in self.irreducibles.iter().enumerate() {
                let ip = self.inner_product_conj(&b.values, &conj)?;
                let expected = if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                };
                if ip != expected {
                    return bad(format!("<{}, {}> = {ip}", b.name, a.name));
                }
            }
        }
        let conj: Vec<Vec<_>> = self
            .irreducibles
            .iter()
            .map(|s| s.values.iter().map(CyclotomicNumber::conj).collect())
            .collect();
        for c in 0..self.classes.len() {
            for d in 0..self.classes.len() {
                let sum = sum_of_products(
                    self.irreducibles
                        .iter()
                        .zip(&conj)
                        .map(|(s, sc)| (Rational::one(), &s.values[c], &sc[d])),
                )?;
                let expected = if c == d {
                    Rational::new(self.group_order.into(), self.classes[c].size.into())
                } else {
                    Rational::zero()
                };
                if sum.as_rational().ok() != Some(expected) {
                    return bad(format!(
                        "columns {} and {} fail orthogonality",
                        self.classes[c].name, self.classes[d].name
                    ));
                }
            }
        }
        Ok(())
    }

    /// Mixed-radix decoding of an index of an abelian table.
    pub fn residues_of(&self, mut index: usize) -> Option<Vec<i64>> {
        let orders = self.abelian_orders.as_ref()?;
        let mut out = vec![0i64; orders.len()];
        for (k, r) in orders.iter().enumerate().rev() {
            out[k] = (index % *r as usize) as i64;
            index /= *r as usize;
        }
        Some(out)
    }

    /// Index of a residue tuple of an abelian table.
    pub fn index_of(&self, residues: &[i64]) -> Option<usize> {
        let orders = self.abelian_orders.as_ref()?;
        if residues.len() != orders.len() {
            return None;
        }
        Some(residue_index(orders, residues))
    }
}

pub(crate) fn residue_index(orders: &[u32], residues: &[i64]) -> usize {
    orders.iter().zip(residues).fold(0usize, |acc, (r, x)| {
        acc * *r as usize + x.rem_euclid(*r as i64) as usize
    })
}

pub(crate) fn all_residues(orders: &[u32]) -> Vec<Vec<i64>> {
    let total: usize = orders.iter().map(|r| *r as usize).product();
    (0..total)
        .map(|mut index| {
            let mut out = vec![0i64; orders.len()];
            for (k, r) in orders.iter().enumerate().rev() {
                out[k] = (index % *r as usize) as i64;
                index /= *r as usize;
            }
            out
        })
        .collect()
}

fn lcm_of(orders: &[u32]) -> u32 {
    orders
        .iter()
        .fold(1u32, |acc, r| num_integer::Integer::lcm(&acc, r))
}

/// Value of the character with residues `a` on the element with residues `g`.
fn abelian_value(orders: &[u32], a: &[i64], g: &[i64]) -> Result<CyclotomicNumber, CharacterError> {
    let l = lcm_of(orders);
    let exponent: i64 = orders
        .iter()
        .zip(a.iter().zip(g))
        .map(|(r, (x, y))| x * y * (l / r) as i64)
        .sum();
    Ok(root_of_unity(l, exponent)?)
}

/// Character table of `Z_{r_1} × … × Z_{r_t}`: singleton classes, characters
/// indexed by residue tuples, `χ_a(g) = Π ζ_{r_k}^{a_k g_k}`.
pub fn abelian_table(orders: &[u32]) -> Result<CharacterTable, CharacterError> {
    if orders.is_empty() || orders.contains(&0) {
        return Err(CharacterError::InvalidInput(
            "orders must be a nonempty list of positive integers".into(),
        ));
    }
    let elements = all_residues(orders);
    let classes = elements
        .iter()
        .map(|g| ConjugacyClass {
            name: format!("g{}", VertexLabel::residues(g)),
            size: 1,
        })
        .collect();
    let irreducibles = elements
        .iter()
        .map(|a| {
            let values = elements
                .iter()
                .map(|g| abelian_value(orders, a, g))
                .collect::<Result<_, _>>()?;
            let label = VertexLabel::residues(a);
            Ok(Irreducible {
                name: format!("chi{label}"),
                label,
                values,
            })
        })
        .collect::<Result<_, CharacterError>>()?;
    Ok(CharacterTable {
        group_order: elements.len() as u64,
        classes,
        irreducibles,
        abelian_orders: Some(orders.to_vec()),
    })
}

/// The diagonal representation `V = ⊕_w λ_w` of an abelian group, with
/// `det = λ_{Σ w}`.
pub fn weights_character(
    table: &CharacterTable,
    weights: &[Vec<i64>],
) -> Result<RepCharacter, CharacterError> {
    let orders = table
        .abelian_orders
        .as_ref()
        .ok_or_else(|| CharacterError::InvalidInput("weights need an abelian table".into()))?;
    if weights.is_empty() {
        return Err(CharacterError::InvalidInput("no weights".into()));
    }
    for w in weights {
        if w.len() != orders.len() {
            return Err(CharacterError::InvalidInput(format!(
                "weight {w:?} has arity {}, expected {}",
                w.len(),
                orders.len()
            )));
        }
    }
    let total: Vec<i64> = (0..orders.len())
        .map(|k| weights.iter().map(|w| w[k]).sum())
        .collect();
    let mut values = Vec::with_capacity(table.class_count());
    let mut det = Vec::with_capacity(table.class_count());
    for c in 0..table.class_count() {
        let g = table.residues_of(c).expect("abelian table");
        let mut v = CyclotomicNumber::zero();
        for w in weights {
            v = v.try_add(&abelian_value(orders, w, &g)?)?;
        }
        values.push(v);
        det.push(abelian_value(orders, &total, &g)?);
    }
    Ok(RepCharacter {
        values,
        det: Some(det),
    })
}

/// `g ↦ diag(g, det(g)⁻¹)`: adds the inverse determinant as a new coordinate.
pub fn sl_embed(table: &CharacterTable, chi: &RepCharacter) -> Result<SlEmbedding, CharacterError> {
    let det = chi.det.as_ref().ok_or(CharacterError::MissingDeterminant)?;
    table.check_length(&chi.values)?;
    table.check_length(det)?;
    let last: Vec<_> = det.iter().map(CyclotomicNumber::conj).collect();
    let values = chi
        .values
        .iter()
        .zip(&last)
        .map(|(x, y)| x.try_add(y))
        .collect::<Result<_, _>>()?;
    Ok(SlEmbedding {
        character: RepCharacter {
            values,
            det: Some(vec![CyclotomicNumber::one(); table.class_count()]),
        },
        last_coordinate: last,
    })
}

/// Table of `G' × C_m` where `C_m` scales the added coordinate by `ξ_m`.
/// Classes are pairs `(c, k)`, irreducibles `χ_i ⊗ λ_j` labelled `(label_i, j)`,
/// and the returned character is `χ_V(c) + det(c)⁻¹ ξ_m^k`.
pub fn product_with_cyclic(
    table: &CharacterTable,
    sl: &SlEmbedding,
    m: u32,
) -> Result<(CharacterTable, RepCharacter), CharacterError> {
    if m == 0 {
        return Err(CharacterError::InvalidInput("m must be positive".into()));
    }
    table.check_length(&sl.character.values)?;
    table.check_length(&sl.last_coordinate)?;
    let xi: Vec<_> = (0..m as i64)
        .map(|k| root_of_unity(m, k))
        .collect::<Result<_, _>>()?;
    let mut classes = Vec::with_capacity(table.class_count() * m as usize);
    for c in &table.classes {
        for k in 0..m {
            classes.push(ConjugacyClass {
                name: format!("({},{k})", c.name),
                size: c.size,
            });
        }
    }
    let mut irreducibles = Vec::with_capacity(table.irreducible_count() * m as usize);
    for s in &table.irreducibles {
        for j in 0..m as usize {
            let mut values = Vec::with_capacity(classes.len());
            for v in &s.values {
                for k in 0..m as usize {
                    values.push(v.try_mul(&xi[(j * k) % m as usize])?);
                }
            }
            irreducibles.push(Irreducible {
                name: format!("{}x{j}", s.name),
                label: VertexLabel::level(s.label.clone(), j as i64),
                values,
            });
        }
    }
    let mut values = Vec::with_capacity(classes.len());
    let mut det = Vec::with_capacity(classes.len());
    for (chi, last) in sl.character.values.iter().zip(&sl.last_coordinate) {
        for x in &xi {
            // the last coordinate det(c)⁻¹ is scaled by ξ_m^k
            let base = chi.try_sub(last)?;
            values.push(base.try_add(&last.try_mul(x)?)?);
            det.push(x.clone());
        }
    }
    let abelian_orders = table.abelian_orders.as_ref().map(|o| {
        let mut o = o.clone();
        o.push(m);
        o
    });
    Ok((
        CharacterTable {
            group_order: table.group_order * m as u64,
            classes,
            irreducibles,
            abelian_orders,
        },
        RepCharacter {
            values,
            det: Some(det),
        },
    ))
}

/// Character table of the symmetric group `S_3`, classes `e`, transpositions,
/// 3-cycles.
pub fn s3_table() -> CharacterTable {
    let n = |v: i64| CyclotomicNumber::from_int(v);
    let irr = |name: &str, vals: [i64; 3]| Irreducible {
        name: name.into(),
        label: VertexLabel::Name(name.into()),
        values: vals.iter().map(|v| n(*v)).collect(),
    };
    CharacterTable {
        group_order: 6,
        classes: vec![
            ConjugacyClass {
                name: "e".into(),
                size: 1,
            },
            ConjugacyClass {
                name: "(12)".into(),
                size: 3,
            },
            ConjugacyClass {
                name: "(123)".into(),
                size: 2,
            },
        ],
        irreducibles: vec![
            irr("triv", [1, 1, 1]),
            irr("sign", [1, -1, 1]),
            irr("std", [2, 0, -1]),
        ],
        abelian_orders: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn vals(xs: &[i64]) -> Vec<CyclotomicNumber> {
        xs.iter().map(|x| CyclotomicNumber::from_int(*x)).collect()
    }

    #[test]
    fn s3_inner_products() {
        let t = s3_table();
        t.validate().unwrap();
        for s in &t.irreducibles {
            assert_eq!(t.inner_product(&s.values, &s.values).unwrap(), int(1));
        }
        let regular = vals(&[6, 0, 0]);
        assert_eq!(
            t.inner_product(&regular, &t.irreducibles[0].values)
                .unwrap(),
            int(1)
        );
        // std ⊗ std = triv + sign + std, read off the hand table
        let std = &t.irreducibles[2].values;
        let sq = t.product(std, std).unwrap();
        assert_eq!(sq, vals(&[4, 0, 1]));
        assert_eq!(
            t.inner_product(&sq, &t.irreducibles[0].values).unwrap(),
            int(1)
        );
        let rep = RepCharacter::new(std.clone());
        assert_eq!(t.tensor_decompose(&rep, 2).unwrap(), vec![1, 1, 1]);
    }

    #[test]
    fn trivial_group() {
        let t = abelian_table(&[1]).unwrap();
        t.validate().unwrap();
        assert_eq!(t.class_count(), 1);
        let v = RepCharacter::new(vals(&[2]));
        assert_eq!(t.tensor_decompose(&v, 0).unwrap(), vec![2]);
    }

    #[test]
    fn cyclic_tables() {
        let t = abelian_table(&[2]).unwrap();
        assert_eq!(t.irreducibles[0].values, vals(&[1, 1]));
        assert_eq!(t.irreducibles[1].values, vals(&[1, -1]));
        let t = abelian_table(&[2, 2]).unwrap();
        assert_eq!(t.class_count(), 4);
        assert!(t.classes.iter().all(|c| c.size == 1));
        t.validate().unwrap();
    }

    /// Direct inner products over the three classes of Z_3.
    fn z3_oracle(weights: &[i64]) -> Vec<Vec<u64>> {
        let z = |k: i64| root_of_unity(3, k).unwrap();
        (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| {
                        let mut sum = CyclotomicNumber::zero();
                        for g in 0..3i64 {
                            for w in weights {
                                sum = &sum + &z(w * g + i * g - j * g);
                            }
                        }
                        let q = sum.as_rational().unwrap() / int(3);
                        q.to_integer().to_u64().unwrap()
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn z3_decompositions() {
        let t = abelian_table(&[3]).unwrap();
        for weights in [vec![1], vec![1, 2]] {
            let w: Vec<Vec<i64>> = weights.iter().map(|x| vec![*x]).collect();
            let chi = weights_character(&t, &w).unwrap();
            let oracle = z3_oracle(&weights);
            for (i, expected) in oracle.iter().enumerate() {
                assert_eq!(&t.tensor_decompose(&chi, i).unwrap(), expected);
            }
        }
        let chi = weights_character(&t, &[vec![1]]).unwrap();
        for i in 0..3usize {
            let row = t.tensor_decompose(&chi, i).unwrap();
            for (j, m) in row.iter().enumerate() {
                assert_eq!(*m, u64::from(j == (i + 1) % 3));
            }
        }
        let chi = weights_character(&t, &[vec![1], vec![2]]).unwrap();
        for i in 0..3usize {
            let row = t.tensor_decompose(&chi, i).unwrap();
            for (j, m) in row.iter().enumerate() {
                assert_eq!(*m, u64::from(j == (i + 1) % 3 || j == (i + 2) % 3));
            }
        }
    }

    #[test]
    fn determinants() {
        let t = abelian_table(&[5]).unwrap();
        let chi = weights_character(&t, &[vec![1]]).unwrap();
        assert_eq!(chi.values, t.irreducibles[1].values);
        assert_eq!(chi.det.as_ref().unwrap(), &t.irreducibles[1].values);

        let t = abelian_table(&[3]).unwrap();
        let chi = weights_character(&t, &[vec![1], vec![2]]).unwrap();
        assert_eq!(chi.det.as_ref().unwrap(), &t.irreducibles[0].values);
        let z = |k| root_of_unity(3, k).unwrap();
        for g in 0..3i64 {
            assert_eq!(chi.values[g as usize], &z(g) + &z(2 * g));
        }

        let t = abelian_table(&[2, 2]).unwrap();
        let chi = weights_character(&t, &[vec![1, 0], vec![0, 1]]).unwrap();
        let idx = t.index_of(&[1, 1]).unwrap();
        assert_eq!(chi.det.as_ref().unwrap(), &t.irreducibles[idx].values);
    }

    #[test]
    fn sl_embedding() {
        let t = abelian_table(&[1]).unwrap();
        let chi = weights_character(&t, &[vec![0]]).unwrap();
        let sl = sl_embed(&t, &chi).unwrap();
        assert_eq!(sl.character.values, vals(&[2]));

        // trace of diag(ζ^g, ζ^{-g})
        let r = 7u32;
        let t = abelian_table(&[r]).unwrap();
        let chi = weights_character(&t, &[vec![1]]).unwrap();
        let sl = sl_embed(&t, &chi).unwrap();
        for g in 0..r as i64 {
            let trace = &root_of_unity(r, g).unwrap() + &root_of_unity(r, -g).unwrap();
            assert_eq!(sl.character.values[g as usize], trace);
        }
        assert!(sl
            .character
            .det
            .unwrap()
            .iter()
            .all(|d| *d == CyclotomicNumber::one()));
        assert!(matches!(
            sl_embed(&t, &RepCharacter::new(chi.values)),
            Err(CharacterError::MissingDeterminant)
        ));
    }

    #[test]
    fn products_with_cyclic() {
        let t = abelian_table(&[3]).unwrap();
        let chi = weights_character(&t, &[vec![1]]).unwrap();
        let sl = sl_embed(&t, &chi).unwrap();
        let (p, v) = product_with_cyclic(&t, &sl, 1).unwrap();
        assert_eq!(p.group_order, t.group_order);
        for (a, b) in p.irreducibles.iter().zip(&t.irreducibles) {
            assert_eq!(a.values, b.values);
        }
        assert_eq!(v.values, sl.character.values);

        let triv = abelian_table(&[1]).unwrap();
        let sl = sl_embed(&triv, &weights_character(&triv, &[vec![0]]).unwrap()).unwrap();
        let (p, _) = product_with_cyclic(&triv, &sl, 2).unwrap();
        let z2 = abelian_table(&[2]).unwrap();
        for (a, b) in p.irreducibles.iter().zip(&z2.irreducibles) {
            assert_eq!(a.values, b.values);
        }

        // Z_2 weight 1, m = 2: trace of diag((-1)^g, (-1)^{-g} ξ^k) with ξ = -1
        let t = abelian_table(&[2]).unwrap();
        let sl = sl_embed(&t, &weights_character(&t, &[vec![1]]).unwrap()).unwrap();
        let (p, v) = product_with_cyclic(&t, &sl, 2).unwrap();
        p.validate().unwrap();
        assert_eq!(p.class_count(), 4);
        for g in 0..2i64 {
            for k in 0..2i64 {
                let sign = |e: i64| if e.rem_euclid(2) == 0 { 1 } else { -1 };
                let trace = sign(g) + sign(-g) * sign(k);
                assert_eq!(
                    v.values[(g * 2 + k) as usize],
                    CyclotomicNumber::from_int(trace)
                );
            }
        }
    }
}
