//! Neron-Severi lattice data: divisor classes, the quadratic form and the
//! manifold input record.
//!
//! A `ManifoldSpec` carries the Beauville-Bogomolov-Fujiki form of signature
//! (1, rank-1) as a Gram matrix, the Fujiki constant, the half-dimension n
//! (the manifold has dimension 2n), an ample class and the finite list of
//! declared prime divisor classes. Everything downstream (decompositions,
//! chambers, volumes) is computed from this record alone.

use crate::error::{Error, Result};
use crate::linalg::SymmetricMatrix;
use crate::rat::Rational;
use num::{Signed, Zero};

/// A divisor class in basis coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DivisorClass(Vec<Rational>);

impl DivisorClass {
    pub fn new(coords: Vec<Rational>) -> Self {
        DivisorClass(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        DivisorClass(coords.iter().map(|&n| crate::rat::rat_int(n)).collect())
    }

    pub fn zero(rank: usize) -> Self {
        DivisorClass(vec![Rational::zero(); rank])
    }

    pub fn basis(rank: usize, index: usize) -> Self {
        let mut coords = vec![Rational::zero(); rank];
        coords[index] = num::One::one();
        DivisorClass(coords)
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    pub fn add(&self, other: &DivisorClass) -> DivisorClass {
        assert_eq!(self.rank(), other.rank());
        DivisorClass(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &DivisorClass) -> DivisorClass {
        assert_eq!(self.rank(), other.rank());
        DivisorClass(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, factor: &Rational) -> DivisorClass {
        DivisorClass(self.0.iter().map(|a| a * factor).collect())
    }

    pub fn neg(&self) -> DivisorClass {
        DivisorClass(self.0.iter().map(|a| -a).collect())
    }
}

impl std::fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (k, coord) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{coord}")?;
        }
        write!(f, ")")
    }
}

/// Whether two classes span a line (all 2x2 coordinate minors vanish,
/// including the degenerate cases where one class is zero).
pub fn linearly_dependent(u: &DivisorClass, v: &DivisorClass) -> bool {
    assert_eq!(u.rank(), v.rank());
    let n = u.rank();
    for i in 0..n {
        for j in (i + 1)..n {
            if &u.0[i] * &v.0[j] != &u.0[j] * &v.0[i] {
                return false;
            }
        }
    }
    true
}

/// A declared prime divisor: a label and its class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeDivisor {
    pub label: String,
    pub class: DivisorClass,
}

/// Outcome of the Hodge-type inequality probe.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HodgeCheck {
    /// q(D,E)^2 >= q(D,D) * q(E,E); always true when q(D,D) > 0.
    pub holds: bool,
    /// The two sides agree exactly, which happens precisely for linearly
    /// dependent classes.
    pub equality: bool,
}

/// Input record for one manifold.
#[derive(Debug, Clone)]
pub struct ManifoldSpec {
    rank: usize,
    half_dim: u32,
    fujiki: Rational,
    gram: SymmetricMatrix,
    ample: DivisorClass,
    primes: Vec<PrimeDivisor>,
    exceptional: Vec<usize>,
}

impl ManifoldSpec {
    /// Builds the record, checking shapes and caching the exceptional primes
    /// (those with q(D, D) < 0). Mathematical axioms (signature, pairing
    /// signs, distinctness) are checked separately by `validate_spec`.
    pub fn new(
        half_dim: u32,
        fujiki: Rational,
        gram: SymmetricMatrix,
        ample: DivisorClass,
        primes: Vec<PrimeDivisor>,
    ) -> Result<Self> {
        let rank = gram.size();
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        if half_dim == 0 {
            return Err(Error::ZeroHalfDim);
        }
        if !fujiki.is_positive() {
            return Err(Error::NonPositiveFujiki);
        }
        if ample.rank() != rank {
            return Err(Error::DimensionMismatch {
                expected: rank,
                got: ample.rank(),
            });
        }
        for prime in &primes {
            if prime.class.rank() != rank {
                return Err(Error::DimensionMismatch {
                    expected: rank,
                    got: prime.class.rank(),
                });
            }
        }
        let mut spec = ManifoldSpec {
            rank,
            half_dim,
            fujiki,
            gram,
            ample,
            primes,
            exceptional: Vec::new(),
        };
        spec.exceptional = (0..spec.primes.len())
            .filter(|&i| spec.qself(&spec.primes[i].class).is_negative())
            .collect();
        Ok(spec)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn half_dim(&self) -> u32 {
        self.half_dim
    }

    pub fn fujiki(&self) -> &Rational {
        &self.fujiki
    }

    pub fn gram(&self) -> &SymmetricMatrix {
        &self.gram
    }

    pub fn ample(&self) -> &DivisorClass {
        &self.ample
    }

    pub fn primes(&self) -> &[PrimeDivisor] {
        &self.primes
    }

    pub fn prime(&self, index: usize) -> &PrimeDivisor {
        &self.primes[index]
    }

    pub fn prime_class(&self, index: usize) -> &DivisorClass {
        &self.primes[index].class
    }

    /// Indices of the declared primes with q(D, D) < 0, in increasing order.
    pub fn exceptional(&self) -> &[usize] {
        &self.exceptional
    }

    pub fn prime_index_by_label(&self, label: &str) -> Option<usize> {
        self.primes.iter().position(|p| p.label == label)
    }

    /// Boundary check for externally supplied classes.
    pub fn check_class(&self, class: &DivisorClass) -> Result<()> {
        if class.rank() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                got: class.rank(),
            });
        }
        Ok(())
    }

    /// The bilinear form q(u, v) = u^T G v.
    pub fn qform(&self, u: &DivisorClass, v: &DivisorClass) -> Rational {
        assert_eq!(u.rank(), self.rank, "class rank must match spec rank");
        assert_eq!(v.rank(), self.rank, "class rank must match spec rank");
        let gv = self.gram.apply(v.coords());
        u.coords()
            .iter()
            .zip(&gv)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    /// q(u, u).
    pub fn qself(&self, u: &DivisorClass) -> Rational {
        self.qform(u, u)
    }

    /// q(u, D_i) for a declared prime.
    pub fn q_with_prime(&self, u: &DivisorClass, index: usize) -> Rational {
        self.qform(u, &self.primes[index].class)
    }

    /// Gram matrix of the declared primes at the given indices.
    pub fn gram_of(&self, indices: &[usize]) -> SymmetricMatrix {
        let rows = indices
            .iter()
            .map(|&i| {
                indices
                    .iter()
                    .map(|&j| self.qform(&self.primes[i].class, &self.primes[j].class))
                    .collect()
            })
            .collect::<Vec<Vec<Rational>>>();
        SymmetricMatrix::new(rows).expect("prime pairings are symmetric")
    }

    /// Splits `class` = projection + sum_i coeff_i * D_i over the given prime
    /// indices, with the projection q-orthogonal to every listed prime.
    /// Returns the projection and the span coefficients. Errors with
    /// `SingularSystem` when the restricted Gram matrix is not invertible.
    pub fn project_orthogonal(
        &self,
        class: &DivisorClass,
        indices: &[usize],
    ) -> Result<(DivisorClass, Vec<Rational>)> {
        if indices.is_empty() {
            return Ok((class.clone(), Vec::new()));
        }
        let gram = self.gram_of(indices);
        let rhs: Vec<Rational> = indices
            .iter()
            .map(|&j| self.q_with_prime(class, j))
            .collect();
        let coeffs = gram.solve(&rhs)?;
        let mut projection = class.clone();
        for (&i, coeff) in indices.iter().zip(&coeffs) {
            projection = projection.sub(&self.primes[i].class.scale(coeff));
        }
        Ok((projection, coeffs))
    }

    /// A basis of the q-orthogonal complement of `class` (rank - 1 vectors;
    /// requires q(class, -) nonzero, i.e. class != 0).
    pub fn orthogonal_complement_basis(&self, class: &DivisorClass) -> Vec<DivisorClass> {
        let form = self.gram.apply(class.coords());
        let pivot = form
            .iter()
            .position(|c| !c.is_zero())
            .expect("nondegenerate form pairs nontrivially with a nonzero class");
        let mut basis = Vec::with_capacity(self.rank - 1);
        for j in 0..self.rank {
            if j == pivot {
                continue;
            }
            let mut coords = vec![Rational::zero(); self.rank];
            coords[j] = num::One::one();
            coords[pivot] = -&form[j] / &form[pivot];
            basis.push(DivisorClass::new(coords));
        }
        basis
    }
}

/// Hodge-type inequality for the signature-(1, rank-1) form: when q(D,D) > 0,
/// q(D,E)^2 >= q(D,D) q(E,E), with equality exactly for linearly dependent
/// classes. Errors unless q(D,D) > 0.
pub fn hodge_inequality(
    spec: &ManifoldSpec,
    d: &DivisorClass,
    e: &DivisorClass,
) -> Result<HodgeCheck> {
    spec.check_class(d)?;
    spec.check_class(e)?;
    let dd = spec.qself(d);
    if !dd.is_positive() {
        return Err(Error::NonPositiveSquare);
    }
    let de = spec.qform(d, e);
    let ee = spec.qself(e);
    let lhs = &de * &de;
    let rhs = &dd * &ee;
    Ok(HodgeCheck {
        holds: lhs >= rhs,
        equality: lhs == rhs,
    })
}
