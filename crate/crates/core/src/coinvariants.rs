//! Coinvariants of `I(D_m; F2)^{⊗k}` under the diagonal `D_m × D_m` action.
//!
//! `D → D_m` is equivariant, so a tensor whose image has a nonzero
//! coinvariant class in some `D_m` has a nonzero class over `D` too. Over a
//! finite quotient the coinvariants are `M / span{b + p·b}` with `b` running
//! over the `(g - 1)` basis of `M` and `p` over generators of `D_m × D_m`;
//! generators suffice because `m + gh·m = (m + h·m) + (h·m + g·(h·m))`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Dihedral, DihedralQuotient, Group};
use crate::linalg::{BitRow, Echelon};
use crate::tensor::TensorElement;

pub const DEFAULT_DIMENSION_CAP: usize = 1_000_000;

/// `(x,1), (y,1), (1,x), (1,y)`.
pub fn default_generators() -> Vec<(Dihedral, Dihedral)> {
    let one = Dihedral::identity();
    vec![(Dihedral::x(), one), (Dihedral::y(), one), (one, Dihedral::x()), (one, Dihedral::y())]
}

/// The residue of a tensor modulo the coinvariant relations, supported on
/// the non-pivot basis tuples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoinvariantClass {
    pub m: u32,
    pub arity: usize,
    /// `(2m - 1)^arity`.
    pub dimension: usize,
    pub relation_rank: usize,
    pub residue: Vec<Vec<Dihedral>>,
}

impl CoinvariantClass {
    pub fn is_nonzero(&self) -> bool {
        !self.residue.is_empty()
    }

    pub fn coinvariant_dimension(&self) -> usize {
        self.dimension - self.relation_rank
    }
}

/// The relation space for one `(m, arity)`, ready to reduce many tensors.
pub struct CoinvariantReducer {
    quotient: DihedralQuotient,
    arity: usize,
    radix: usize,
    dimension: usize,
    echelon: Echelon,
}

impl CoinvariantReducer {
    pub fn new(m: u32, arity: usize, dimension_cap: usize) -> Result<Self> {
        Self::with_generators(m, arity, dimension_cap, &default_generators())
    }

    pub fn with_generators(
        m: u32,
        arity: usize,
        dimension_cap: usize,
        generators: &[(Dihedral, Dihedral)],
    ) -> Result<Self> {
        let quotient = DihedralQuotient::new(m);
        let radix = quotient.order() - 1;
        let dimension = u32::try_from(arity)
            .ok()
            .and_then(|a| radix.checked_pow(a))
            .filter(|&d| d <= dimension_cap)
            .ok_or(Error::DimensionCap { dimension: radix.saturating_pow(arity as u32), cap: dimension_cap })?;
        let mut reducer = CoinvariantReducer { quotient, arity, radix, dimension, echelon: Echelon::new(dimension) };
        let generators: Vec<(Dihedral, Dihedral)> =
            generators.iter().map(|(a, b)| (quotient.reduce(a), quotient.reduce(b))).collect();
        let rows: Vec<Vec<usize>> = (0..dimension)
            .into_par_iter()
            .flat_map_iter(|index| {
                let basis = TensorElement::basis(reducer.tuple_of(index));
                generators
                    .iter()
                    .map(|(a, b)| {
                        let mut rel = basis.diagonal_action(a, b).finite_quotient(&quotient);
                        rel.add_assign(&basis).expect("same arity");
                        rel.terms().iter().map(|t| reducer.index_of(t)).collect::<Vec<_>>()
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
        for row in rows {
            if !row.is_empty() {
                reducer.echelon.insert(BitRow::from_indices(dimension, row));
            }
        }
        Ok(reducer)
    }

    pub fn m(&self) -> u32 {
        self.quotient.m()
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn relation_rank(&self) -> usize {
        self.echelon.rank()
    }

    /// Position of a reduced element in the sorted non-identity list.
    fn element_index(g: &Dihedral) -> usize {
        (2 * g.k() as usize + usize::from(g.e())) - 1
    }

    fn element_at(i: usize) -> Dihedral {
        let j = i + 1;
        Dihedral::new((j / 2) as i64, j % 2 == 1)
    }

    /// Mixed-radix index; numeric order is lexicographic tuple order.
    fn index_of(&self, t: &[Dihedral]) -> usize {
        t.iter().fold(0, |acc, g| acc * self.radix + Self::element_index(g))
    }

    fn tuple_of(&self, mut index: usize) -> Vec<Dihedral> {
        let mut t = vec![Dihedral::identity(); self.arity];
        for slot in t.iter_mut().rev() {
            *slot = Self::element_at(index % self.radix);
            index /= self.radix;
        }
        t
    }

    pub fn residue(&self, t: &TensorElement<Dihedral>) -> Result<CoinvariantClass> {
        if t.arity() != self.arity && !t.is_zero() {
            return Err(Error::ArityMismatch { expected: self.arity, found: t.arity() });
        }
        let image = t.finite_quotient(&self.quotient);
        let row = BitRow::from_indices(self.dimension, image.terms().iter().map(|u| self.index_of(u)));
        let reduced = self.echelon.reduce(row);
        Ok(CoinvariantClass {
            m: self.m(),
            arity: self.arity,
            dimension: self.dimension,
            relation_rank: self.relation_rank(),
            residue: reduced.ones().map(|i| self.tuple_of(i)).collect(),
        })
    }
}

/// One-shot reduction of `t` in the coinvariants over `D_m`.
pub fn coinvariant_reduce(t: &TensorElement<Dihedral>, m: u32, dimension_cap: usize) -> Result<CoinvariantClass> {
    CoinvariantReducer::new(m, t.arity(), dimension_cap)?.residue(t)
}
