use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::action::{rational, to_i64_matrix};
use super::{CharacterTable, Partition, Permutation, RepTheoryError, SymmetricAction};
use crate::algebra::{rational_rank, rational_to_string, Sign, SquareMatrix};
use crate::jones::RepDefinition;

/// `M(d, Q)` under conjugation `m ↦ Φ(σ) m Φ(σ)^{-1}`, flattened row-major to
/// `d²` coordinates. Stores, for each conjugacy class, the integer sum of
/// the conjugation operators over the class, which is all that
/// character-weighted averages need.
#[derive(Clone, Debug)]
pub struct ConjugationModule {
    dim: usize,
    classes: Vec<(Partition, u64)>,
    class_sums: Vec<Vec<i64>>,
    traces: Vec<i64>,
}

impl ConjugationModule {
    pub fn new(action: &SymmetricAction) -> Result<Self, RepTheoryError> {
        let n = action.degree() as u32;
        let classes = super::conjugacy_classes(n);
        let d = action.dim();
        let big = d * d;
        let mut class_sums = vec![vec![0i64; big * big]; classes.len()];
        let mut traces = vec![None; classes.len()];
        for (sigma, phi) in action.elements() {
            let c = classes
                .iter()
                .position(|(mu, _)| *mu == sigma.cycle_type())
                .expect("every cycle type is a class");
            let inv = phi.inverse().ok_or(RepTheoryError::NotIntegral)?;
            let (p, q) = match (to_i64_matrix(&phi), to_i64_matrix(&inv)) {
                (Some(p), Some(q)) => (p, q),
                _ => return Err(RepTheoryError::NotIntegral),
            };
            let tr: i64 = (0..d).map(|i| p[i * d + i]).sum();
            match traces[c] {
                None => traces[c] = Some(tr),
                Some(t) if t != tr => {
                    return Err(RepTheoryError::NotAClassFunction {
                        class: classes[c].0.to_string(),
                    })
                }
                _ => {}
            }
            // vec(Φ m Φ^{-1})[(i,j)] = Σ_{k,l} Φ[i][k] m[k][l] Φ^{-1}[l][j]
            let sum = &mut class_sums[c];
            for i in 0..d {
                for j in 0..d {
                    let row = (i * d + j) * big;
                    for k in 0..d {
                        let a = p[i * d + k];
                        if a == 0 {
                            continue;
                        }
                        for l in 0..d {
                            let b = q[l * d + j];
                            if b != 0 {
                                let cell = &mut sum[row + k * d + l];
                                *cell = a
                                    .checked_mul(b)
                                    .and_then(|x| cell.checked_add(x))
                                    .ok_or(RepTheoryError::Overflow)?;
                            }
                        }
                    }
                }
            }
        }
        Ok(Self {
            dim: d,
            classes,
            class_sums,
            traces: traces
                .into_iter()
                .map(|t| t.expect("class visited"))
                .collect(),
        })
    }

    pub fn from_rep(rep: &RepDefinition, eps: Sign) -> Result<Self, RepTheoryError> {
        Self::new(&SymmetricAction::from_rep(rep, eps)?)
    }

    /// Dimension `d²` of the module.
    pub fn module_dim(&self) -> usize {
        self.dim * self.dim
    }

    /// `χ_V(μ)`: trace of the underlying `d`-dimensional representation.
    pub fn base_character(&self) -> &[i64] {
        &self.traces
    }

    fn group_order(&self) -> u64 {
        self.classes.iter().map(|(_, s)| s).sum()
    }

    /// `(1/|G|) Σ_μ |C_μ| χ_λ(μ) χ_V(μ)²`, the multiplicity of `λ` read off
    /// the character of the conjugation module.
    pub fn character_multiplicity(
        &self,
        table: &CharacterTable,
        lambda: &Partition,
    ) -> BigRational {
        let row = table.row(lambda).expect("partition in table");
        let total: i128 = self
            .classes
            .iter()
            .zip(row)
            .zip(&self.traces)
            .map(|(((_, size), chi), tr)| {
                *size as i128 * *chi as i128 * (*tr as i128) * (*tr as i128)
            })
            .sum();
        BigRational::new(total.into(), (self.group_order() as i128).into())
    }

    /// `P_λ = (dim λ / |G|) Σ_σ χ_λ(σ) Conj_σ` as a `d² × d²` matrix.
    pub fn isotypic_projector(
        &self,
        table: &CharacterTable,
        lambda: &Partition,
    ) -> SquareMatrix<BigRational> {
        let row = table.row(lambda).expect("partition in table");
        let dim_lambda = *row.last().expect("identity column");
        let big = self.module_dim();
        let mut acc = vec![0i128; big * big];
        for (sum, chi) in self.class_sums.iter().zip(row) {
            if *chi == 0 {
                continue;
            }
            for (a, s) in acc.iter_mut().zip(sum) {
                *a += *chi as i128 * *s as i128;
            }
        }
        let scale = BigRational::new(dim_lambda.into(), self.group_order().into());
        SquareMatrix::from_fn(big, |i, j| {
            BigRational::from_integer(acc[i * big + j].into()) * &scale
        })
    }
}

/// Trivial-isotypic component of `m` under conjugation: the scalar
/// `trace(m)/d`, so that the projection is `(trace(m)/d)·I`.
pub fn project_trivial(m: &SquareMatrix<BigRational>) -> BigRational {
    m.trace() / rational(m.dim() as i64)
}

/// Flattens a square matrix row-major.
pub fn flatten(m: &SquareMatrix<BigRational>) -> Vec<BigRational> {
    m.entries().to_vec()
}

/// Inverse of [`flatten`].
pub fn unflatten(v: &[BigRational]) -> SquareMatrix<BigRational> {
    let d = (v.len() as f64).sqrt() as usize;
    assert_eq!(d * d, v.len(), "length is a square");
    SquareMatrix::from_fn(d, |i, j| v[i * d + j].clone())
}

/// `P v` for a `d² × d²` operator and a flattened matrix.
pub fn apply(
    p: &SquareMatrix<BigRational>,
    m: &SquareMatrix<BigRational>,
) -> SquareMatrix<BigRational> {
    let v = flatten(m);
    let out: Vec<BigRational> = p
        .rows()
        .map(|row| row.iter().zip(&v).map(|(a, b)| a * b).sum())
        .collect();
    unflatten(&out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsotypicEntry {
    pub partition: String,
    pub irrep_dim: i64,
    /// Character inner product, `p/q`.
    pub multiplicity: String,
    pub projector_rank: usize,
}

/// Multiplicities and projector ranks of every irreducible in the
/// conjugation module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub module_dim: usize,
    pub entries: Vec<IsotypicEntry>,
    /// `Σ multiplicity · dim λ`.
    pub dimension_sum: String,
    pub projectors_sum_to_identity: bool,
}

impl Decomposition {
    /// Nonzero multiplicities keyed by partition, when all are integers.
    pub fn multiplicities(&self) -> Option<BTreeMap<Partition, u64>> {
        let mut out = BTreeMap::new();
        for e in &self.entries {
            let q = crate::algebra::parse_rational(&e.multiplicity)?;
            if !q.is_integer() || q < BigRational::from_integer(0.into()) {
                return None;
            }
            let m = q.to_integer().to_u64()?;
            if m > 0 {
                out.insert(e.partition.parse().ok()?, m);
            }
        }
        Some(out)
    }
}

/// Character inner products and projector ranks for every row of `table`.
pub fn decompose_with_table(module: &ConjugationModule, table: &CharacterTable) -> Decomposition {
    let big = module.module_dim();
    let mut sum = SquareMatrix::zero(big, &BigRational::one());
    let mut dim_sum = rational(0);
    let mut entries = Vec::new();
    for lambda in table.irreps() {
        let mult = module.character_multiplicity(table, lambda);
        let irrep_dim = *table.row(lambda).unwrap().last().unwrap();
        let p = module.isotypic_projector(table, lambda);
        dim_sum += &mult * rational(irrep_dim);
        entries.push(IsotypicEntry {
            partition: lambda.compact_label(),
            irrep_dim,
            multiplicity: rational_to_string(&mult),
            projector_rank: rational_rank(&p),
        });
        sum = sum.add(&p);
    }
    Decomposition {
        module_dim: big,
        entries,
        dimension_sum: rational_to_string(&dim_sum),
        projectors_sum_to_identity: sum.is_identity(),
    }
}

pub fn decompose_conjugation_module(
    rep: &RepDefinition,
    eps: Sign,
) -> Result<Decomposition, RepTheoryError> {
    let module = ConjugationModule::from_rep(rep, eps)?;
    let table = CharacterTable::new(module_degree(&module));
    Ok(decompose_with_table(&module, &table))
}

fn module_degree(module: &ConjugationModule) -> u32 {
    module.classes.first().map(|(mu, _)| mu.size()).unwrap_or(0)
}

/// `isotypic_projector(λ, rep, ε)`.
pub fn isotypic_projector(
    lambda: &Partition,
    rep: &RepDefinition,
    eps: Sign,
) -> Result<SquareMatrix<BigRational>, RepTheoryError> {
    let module = ConjugationModule::from_rep(rep, eps)?;
    let table = CharacterTable::new(module_degree(&module));
    if table.row(lambda).is_none() {
        return Err(RepTheoryError::UnknownPartition {
            partition: lambda.to_string(),
        });
    }
    Ok(module.isotypic_projector(&table, lambda))
}

/// `Conj_σ` as a `d² × d²` matrix on row-major flattened matrices.
pub fn conjugation_operator(
    action: &SymmetricAction,
    sigma: &Permutation,
) -> SquareMatrix<BigRational> {
    let phi = action.matrix(sigma);
    let inv = phi.inverse().expect("permutation images are invertible");
    let d = phi.dim();
    SquareMatrix::from_fn(d * d, |r, c| {
        let (i, j) = (r / d, r % d);
        let (k, l) = (c / d, c % d);
        phi.get(i, k) * inv.get(l, j)
    })
}
