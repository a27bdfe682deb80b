//! Boucksom-Zariski decompositions.
//!
//! A class alpha decomposes as alpha = P + N where P is q-nef against the
//! declared primes, N is a nonnegative combination of exceptional primes
//! whose restricted Gram matrix is negative definite, and q(P, D) = 0 for
//! every prime D in the support of N. The decomposition is unique. Two
//! independent routes are implemented: an exact linear program for effective
//! expressions and a support-growing fixed point for arbitrary classes; an
//! exhaustive oracle lives in a sibling module.

use crate::error::{Error, Result};
use crate::lattice::{DivisorClass, ManifoldSpec};
use crate::rat::Rational;
use crate::simplex::{maximize, LpOutcome};
use num::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// One failed axiom of a manifold record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Signature {
        found: (usize, usize, usize),
        expected: (usize, usize, usize),
    },
    AmpleNotPositive(Rational),
    AmplePrimePairing {
        index: usize,
        value: Rational,
    },
    IntersectionAxiom {
        i: usize,
        j: usize,
        value: Rational,
    },
    DuplicatePrimeClass {
        i: usize,
        j: usize,
    },
    DuplicateLabel {
        i: usize,
        j: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Signature { found, expected } => write!(
                f,
                "Gram matrix has signature ({}, {}, {}), expected ({}, {}, {})",
                found.0, found.1, found.2, expected.0, expected.1, expected.2
            ),
            Violation::AmpleNotPositive(v) => {
                write!(f, "ample class has nonpositive square {v}")
            }
            Violation::AmplePrimePairing { index, value } => write!(
                f,
                "ample class pairs nonpositively ({value}) with prime #{index}"
            ),
            Violation::IntersectionAxiom { i, j, value } => write!(
                f,
                "intersection-product axiom fails: q(D{i}, D{j}) = {value} < 0"
            ),
            Violation::DuplicatePrimeClass { i, j } => {
                write!(f, "primes #{i} and #{j} have the same class")
            }
            Violation::DuplicateLabel { i, j } => {
                write!(f, "primes #{i} and #{j} share a label")
            }
        }
    }
}

/// Outcome of `validate_spec`: empty means every axiom holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            write!(f, "OK")
        } else {
            for (k, v) in self.violations.iter().enumerate() {
                if k > 0 {
                    writeln!(f)?;
                }
                write!(f, "{v}")?;
            }
            Ok(())
        }
    }
}

/// Checks the mathematical axioms of a record: signature (1, rank-1, 0),
/// ample positivity against itself and every prime, nonnegative pairings
/// between distinct primes, and distinctness of prime classes and labels.
pub fn validate_spec(spec: &ManifoldSpec) -> ValidationReport {
    let mut violations = Vec::new();
    let expected = (1, spec.rank() - 1, 0);
    let found = spec.gram().signature();
    if found != expected {
        violations.push(Violation::Signature { found, expected });
    }
    let amp2 = spec.qself(spec.ample());
    if !amp2.is_positive() {
        violations.push(Violation::AmpleNotPositive(amp2));
    }
    for i in 0..spec.primes().len() {
        let value = spec.q_with_prime(spec.ample(), i);
        if !value.is_positive() {
            violations.push(Violation::AmplePrimePairing { index: i, value });
        }
    }
    for i in 0..spec.primes().len() {
        for j in (i + 1)..spec.primes().len() {
            let value = spec.qform(spec.prime_class(i), spec.prime_class(j));
            if value.is_negative() {
                violations.push(Violation::IntersectionAxiom { i, j, value });
            }
            if spec.prime_class(i) == spec.prime_class(j) {
                violations.push(Violation::DuplicatePrimeClass { i, j });
            }
            if spec.prime(i).label == spec.prime(j).label {
                violations.push(Violation::DuplicateLabel { i, j });
            }
        }
    }
    ValidationReport { violations }
}

/// A sorted set of exceptional prime indices. The sets that matter downstream
/// are those whose restricted Gram matrix is negative definite; use
/// `ensure_block` to check that. Ordering is graded lexicographic (by size,
/// then lexicographically), the order used for all enumerated output.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Block(Vec<usize>);

impl Block {
    pub fn new(mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        indices.dedup();
        Block(indices)
    }

    pub fn empty() -> Self {
        Block(Vec::new())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.0.binary_search(&index).is_ok()
    }

    pub fn is_subset_of(&self, other: &Block) -> bool {
        self.0.iter().all(|&i| other.contains(i))
    }

    pub fn union(&self, other: &Block) -> Block {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Block::new(v)
    }

    /// Indices of self not in other.
    pub fn difference(&self, other: &Block) -> Vec<usize> {
        self.0.iter().copied().filter(|&i| !other.contains(i)).collect()
    }
}

impl PartialOrd for Block {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Block {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// Errors unless every index is a declared prime and the restricted Gram
/// matrix is negative definite (which forces every member exceptional).
pub fn ensure_block(spec: &ManifoldSpec, block: &Block) -> Result<()> {
    for &i in block.indices() {
        if i >= spec.primes().len() {
            return Err(Error::PrimeIndexOutOfRange);
        }
    }
    if !spec.gram_of(block.indices()).is_negative_definite() {
        return Err(Error::NotABlock(block.indices().to_vec()));
    }
    Ok(())
}

/// A formal nonnegative combination of declared primes, the input of the
/// linear-programming decomposition route.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EffectiveExpression {
    coeffs: BTreeMap<usize, Rational>,
}

impl EffectiveExpression {
    pub fn new(
        spec: &ManifoldSpec,
        coeffs: impl IntoIterator<Item = (usize, Rational)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (i, a) in coeffs {
            if i >= spec.primes().len() {
                return Err(Error::PrimeIndexOutOfRange);
            }
            if a.is_negative() {
                return Err(Error::NegativeCoefficient(i));
            }
            map.insert(i, a);
        }
        Ok(EffectiveExpression { coeffs: map })
    }

    pub fn from_ints(spec: &ManifoldSpec, coeffs: &[(usize, i64)]) -> Result<Self> {
        Self::new(
            spec,
            coeffs.iter().map(|&(i, a)| (i, crate::rat::rat_int(a))),
        )
    }

    pub fn coeffs(&self) -> &BTreeMap<usize, Rational> {
        &self.coeffs
    }

    /// Indices with strictly positive coefficient.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .filter(|(_, a)| a.is_positive())
            .map(|(&i, _)| i)
            .collect()
    }

    pub fn class(&self, spec: &ManifoldSpec) -> DivisorClass {
        let mut class = DivisorClass::zero(spec.rank());
        for (&i, a) in &self.coeffs {
            class = class.add(&spec.prime_class(i).scale(a));
        }
        class
    }
}

/// The pair (P, N) of a Boucksom-Zariski decomposition. `negative` maps
/// exceptional prime indices to strictly positive coefficients; zero
/// coefficients are never stored, so the key set is the q-negative support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    positive: DivisorClass,
    negative: BTreeMap<usize, Rational>,
}

impl Decomposition {
    pub fn positive(&self) -> &DivisorClass {
        &self.positive
    }

    pub fn negative(&self) -> &BTreeMap<usize, Rational> {
        &self.negative
    }

    pub fn support(&self) -> Block {
        Block::new(self.negative.keys().copied().collect())
    }

    pub fn negative_class(&self, spec: &ManifoldSpec) -> DivisorClass {
        let mut class = DivisorClass::zero(spec.rank());
        for (&i, a) in &self.negative {
            class = class.add(&spec.prime_class(i).scale(a));
        }
        class
    }

    /// Replays every decomposition axiom against the class it came from and
    /// returns a description of each failure (empty = all axioms hold).
    pub fn axiom_violations(&self, spec: &ManifoldSpec, original: &DivisorClass) -> Vec<String> {
        let mut failures = Vec::new();
        let rebuilt = self.positive.add(&self.negative_class(spec));
        if rebuilt != *original {
            failures.push("P + N does not reconstruct the input class".into());
        }
        for (i, prime) in spec.primes().iter().enumerate() {
            if spec.q_with_prime(&self.positive, i).is_negative() {
                failures.push(format!("P pairs negatively with {}", prime.label));
            }
        }
        for &j in self.negative.keys() {
            if !spec.q_with_prime(&self.positive, j).is_zero() {
                failures.push(format!(
                    "P is not orthogonal to support prime {}",
                    spec.prime(j).label
                ));
            }
        }
        let support: Vec<usize> = self.negative.keys().copied().collect();
        if !spec.gram_of(&support).is_negative_definite() {
            failures.push("support Gram matrix is not negative definite".into());
        }
        for (i, a) in &self.negative {
            if !a.is_positive() {
                failures.push(format!(
                    "coefficient of {} is not strictly positive",
                    spec.prime(*i).label
                ));
            }
        }
        failures
    }
}

/// Decomposes an effective expression by maximizing sum x_i over the
/// polytope K = { 0 <= x_i <= a_i, sum_i x_i q(D_i, D_j) >= 0 for all j }.
/// The optimum x* is the unique maximal q-nef subexpression; P = sum x_i* D_i
/// and the negative coefficients are a_i - x_i*.
pub fn decompose_effective(
    spec: &ManifoldSpec,
    expr: &EffectiveExpression,
) -> Result<Decomposition> {
    for &i in expr.coeffs().keys() {
        if i >= spec.primes().len() {
            return Err(Error::PrimeIndexOutOfRange);
        }
    }
    let idx: Vec<usize> = expr.coeffs().keys().copied().collect();
    let bounds: Vec<Rational> = idx.iter().map(|i| expr.coeffs()[i].clone()).collect();
    let k = idx.len();
    let objective = vec![Rational::one(); k];
    let mut constraints = Vec::with_capacity(2 * k);
    for t in 0..k {
        let mut row = vec![Rational::zero(); k];
        row[t] = Rational::one();
        constraints.push((row, bounds[t].clone()));
    }
    for &j in &idx {
        let row: Vec<Rational> = idx
            .iter()
            .map(|&i| -spec.qform(spec.prime_class(i), spec.prime_class(j)))
            .collect();
        constraints.push((row, Rational::zero()));
    }
    let LpOutcome::Optimal { point, .. } = maximize(&objective, &constraints) else {
        unreachable!("the upper bounds keep the program bounded");
    };
    let mut positive = DivisorClass::zero(spec.rank());
    let mut negative = BTreeMap::new();
    for (t, &i) in idx.iter().enumerate() {
        positive = positive.add(&spec.prime_class(i).scale(&point[t]));
        let gap = &bounds[t] - &point[t];
        if gap.is_positive() {
            negative.insert(i, gap);
        }
    }
    Ok(Decomposition { positive, negative })
}

/// Membership test for the polytope K of `decompose_effective`, used by the
/// maximality probes: no coordinate of the optimum can be increased inside K.
pub(crate) fn expression_point_feasible(
    spec: &ManifoldSpec,
    expr: &EffectiveExpression,
    point: &BTreeMap<usize, Rational>,
) -> bool {
    for (&i, x) in point {
        let Some(a) = expr.coeffs().get(&i) else {
            return false;
        };
        if x.is_negative() || x > a {
            return false;
        }
    }
    for &j in expr.coeffs().keys() {
        let mut pairing = Rational::zero();
        for (&i, x) in point {
            pairing += x * spec.qform(spec.prime_class(i), spec.prime_class(j));
        }
        if pairing.is_negative() {
            return false;
        }
    }
    true
}

/// Decomposes an arbitrary class by growing the negative support: start from
/// the primes the class pairs negatively with, repeatedly solve the
/// orthogonality system on the current support and admit any exceptional
/// prime the resulting P still pairs negatively with. At the fixed point the
/// coefficients must be nonnegative and P must be q-nef, else the class is
/// not decomposable over the declared data.
pub fn decompose_class(spec: &ManifoldSpec, class: &DivisorClass) -> Result<Decomposition> {
    spec.check_class(class)?;
    let mut support: Vec<usize> = spec
        .exceptional()
        .iter()
        .copied()
        .filter(|&i| spec.q_with_prime(class, i).is_negative())
        .collect();
    loop {
        let gram = spec.gram_of(&support);
        if !gram.is_negative_definite() {
            return Err(Error::NotDecomposable {
                reason: format!(
                    "restricted Gram matrix on {} is not negative definite",
                    label_set(spec, &support)
                ),
            });
        }
        let rhs: Vec<Rational> = support
            .iter()
            .map(|&j| spec.q_with_prime(class, j))
            .collect();
        let coeffs = gram
            .solve(&rhs)
            .expect("negative-definite matrices are invertible");
        let mut positive = class.clone();
        for (&i, c) in support.iter().zip(&coeffs) {
            positive = positive.sub(&spec.prime_class(i).scale(c));
        }
        let additions: Vec<usize> = spec
            .exceptional()
            .iter()
            .copied()
            .filter(|i| !support.contains(i))
            .filter(|&i| spec.q_with_prime(&positive, i).is_negative())
            .collect();
        if !additions.is_empty() {
            support.extend(additions);
            support.sort_unstable();
            continue;
        }
        if let Some(pos) = coeffs.iter().position(|c| c.is_negative()) {
            return Err(Error::NotDecomposable {
                reason: format!(
                    "coefficient of {} is negative at the fixed point",
                    spec.prime(support[pos]).label
                ),
            });
        }
        for (i, prime) in spec.primes().iter().enumerate() {
            if spec.q_with_prime(&positive, i).is_negative() {
                return Err(Error::NotDecomposable {
                    reason: format!(
                        "positive part pairs negatively with non-exceptional prime {}",
                        prime.label
                    ),
                });
            }
        }
        let mut negative = BTreeMap::new();
        for (&i, c) in support.iter().zip(&coeffs) {
            if c.is_positive() {
                negative.insert(i, c.clone());
            }
        }
        return Ok(Decomposition { positive, negative });
    }
}

fn label_set(spec: &ManifoldSpec, indices: &[usize]) -> String {
    let labels: Vec<&str> = indices
        .iter()
        .map(|&i| spec.prime(i).label.as_str())
        .collect();
    format!("{{{}}}", labels.join(", "))
}

/// Exceptional primes the class pairs to zero with. Requires a big class;
/// for big q-nef classes the result is automatically a block.
pub fn null_locus(spec: &ManifoldSpec, class: &DivisorClass) -> Result<Block> {
    if !is_big(spec, class) {
        return Err(Error::NotBig);
    }
    Ok(Block::new(
        spec.exceptional()
            .iter()
            .copied()
            .filter(|&i| spec.q_with_prime(class, i).is_zero())
            .collect(),
    ))
}

/// Support of the decomposition of the class.
pub fn neg_locus(spec: &ManifoldSpec, class: &DivisorClass) -> Result<Block> {
    Ok(decompose_class(spec, class)?.support())
}

/// q(class, D) >= 0 for every declared prime.
pub fn is_qnef(spec: &ManifoldSpec, class: &DivisorClass) -> bool {
    (0..spec.primes().len()).all(|i| !spec.q_with_prime(class, i).is_negative())
}

/// Big relative to the declared data: the class decomposes and its positive
/// part lies in the open positive cone (positive square, positive ample
/// pairing).
pub fn is_big(spec: &ManifoldSpec, class: &DivisorClass) -> bool {
    match decompose_class(spec, class) {
        Ok(d) => {
            spec.qself(d.positive()).is_positive()
                && spec.qform(d.positive(), spec.ample()).is_positive()
        }
        Err(_) => false,
    }
}

/// Pseudo-effective relative to the declared data: the class decomposes and
/// its positive part lies in the closed positive cone.
pub fn is_pseudoeffective(spec: &ManifoldSpec, class: &DivisorClass) -> bool {
    match decompose_class(spec, class) {
        Ok(d) => {
            !spec.qself(d.positive()).is_negative()
                && !spec.qform(d.positive(), spec.ample()).is_negative()
        }
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{chain3, degenerate3, hilb2, orth3, proper3};
    use crate::lattice::{PrimeDivisor, ManifoldSpec};
    use crate::linalg::SymmetricMatrix;
    use crate::rat::{rat, rat_int};

    #[test]
    fn validation_accepts_hilb2() {
        assert!(validate_spec(&hilb2()).is_ok());
    }

    #[test]
    fn validation_rejects_wrong_signature() {
        let spec = ManifoldSpec::new(
            2,
            rat_int(1),
            SymmetricMatrix::from_i64_rows(&[&[2, 0], &[0, 2]]).unwrap(),
            DivisorClass::from_ints(&[1, 0]),
            vec![],
        )
        .unwrap();
        let report = validate_spec(&spec);
        assert!(!report.is_ok());
        assert!(matches!(
            report.violations[0],
            Violation::Signature {
                found: (2, 0, 0),
                expected: (1, 1, 0)
            }
        ));
    }

    #[test]
    fn validation_rejects_negative_pairing() {
        // Two exceptional primes with q(D1, D2) = -1 inside diag(2,-2,-2).
        let spec = ManifoldSpec::new(
            2,
            rat_int(1),
            SymmetricMatrix::from_i64_rows(&[&[2, 0, 0], &[0, -2, 0], &[0, 0, -2]]).unwrap(),
            DivisorClass::from_ints(&[2, -1, 0]),
            vec![
                PrimeDivisor {
                    label: "D1".into(),
                    class: DivisorClass::from_ints(&[0, 1, 0]),
                },
                PrimeDivisor {
                    label: "D2".into(),
                    class: DivisorClass::new(vec![rat_int(0), rat(1, 2), rat_int(1)]),
                },
            ],
        )
        .unwrap();
        let report = validate_spec(&spec);
        assert_eq!(report.violations.len(), 1);
        assert!(matches!(
            report.violations[0],
            Violation::IntersectionAxiom { i: 0, j: 1, .. }
        ));
    }

    #[test]
    fn block_order_is_graded_lexicographic() {
        let mut blocks = vec![
            Block::new(vec![0, 1]),
            Block::new(vec![1]),
            Block::empty(),
            Block::new(vec![0]),
        ];
        blocks.sort();
        assert_eq!(
            blocks,
            vec![
                Block::empty(),
                Block::new(vec![0]),
                Block::new(vec![1]),
                Block::new(vec![0, 1]),
            ]
        );
        assert_eq!(Block::new(vec![1, 0, 1]), Block::new(vec![0, 1]));
    }

    #[test]
    fn ensure_block_checks_definiteness() {
        let spec = chain3();
        assert!(ensure_block(&spec, &Block::new(vec![0, 1])).is_ok());
        let degenerate = degenerate3();
        assert_eq!(
            ensure_block(&degenerate, &Block::new(vec![0, 1])).unwrap_err(),
            Error::NotABlock(vec![0, 1])
        );
        assert_eq!(
            ensure_block(&spec, &Block::new(vec![7])).unwrap_err(),
            Error::PrimeIndexOutOfRange
        );
    }

    #[test]
    fn effective_lone_exceptional_prime_is_fixed() {
        let spec = hilb2();
        let expr = EffectiveExpression::from_ints(&spec, &[(0, 2)]).unwrap();
        let d = decompose_effective(&spec, &expr).unwrap();
        assert_eq!(*d.positive(), DivisorClass::zero(2));
        assert_eq!(d.negative().len(), 1);
        assert_eq!(d.negative()[&0], rat_int(2));
        assert!(d.axiom_violations(&spec, &expr.class(&spec)).is_empty());
    }

    #[test]
    fn effective_chain_pair_is_fixed() {
        let spec = chain3();
        let expr = EffectiveExpression::from_ints(&spec, &[(0, 1), (1, 1)]).unwrap();
        let d = decompose_effective(&spec, &expr).unwrap();
        assert_eq!(*d.positive(), DivisorClass::zero(3));
        assert_eq!(d.negative()[&0], rat_int(1));
        assert_eq!(d.negative()[&1], rat_int(1));
    }

    #[test]
    fn effective_zero_expression() {
        let spec = hilb2();
        let expr = EffectiveExpression::from_ints(&spec, &[(0, 0)]).unwrap();
        let d = decompose_effective(&spec, &expr).unwrap();
        assert_eq!(*d.positive(), DivisorClass::zero(2));
        assert!(d.negative().is_empty());
        assert!(d.support().is_empty());
    }

    #[test]
    fn effective_degenerate_pair_is_wholly_nef() {
        // q(D1,D2) = 2 kills both constraint rows at x1 = x2, so the whole
        // expression survives as the positive part.
        let spec = degenerate3();
        let expr = EffectiveExpression::from_ints(&spec, &[(0, 1), (1, 1)]).unwrap();
        let d = decompose_effective(&spec, &expr).unwrap();
        assert_eq!(*d.positive(), DivisorClass::from_ints(&[1, 0, 1]));
        assert!(d.negative().is_empty());
        assert!(d.axiom_violations(&spec, &expr.class(&spec)).is_empty());
    }

    #[test]
    fn effective_proper_pair_is_wholly_nef() {
        let spec = proper3();
        let expr = EffectiveExpression::from_ints(&spec, &[(0, 1), (1, 1)]).unwrap();
        let d = decompose_effective(&spec, &expr).unwrap();
        assert_eq!(
            *d.positive(),
            DivisorClass::new(vec![rat(3, 2), rat(1, 2), rat_int(1)])
        );
        assert!(d.negative().is_empty());
        assert!(spec.qself(d.positive()).is_positive());
    }

    #[test]
    fn class_route_hilb2_frozen() {
        let spec = hilb2();
        let d = decompose_class(&spec, &DivisorClass::from_ints(&[1, 1])).unwrap();
        assert_eq!(*d.positive(), DivisorClass::from_ints(&[1, 0]));
        assert_eq!(d.negative()[&0], rat_int(1));

        let nef = decompose_class(&spec, &DivisorClass::from_ints(&[1, 0])).unwrap();
        assert_eq!(*nef.positive(), DivisorClass::from_ints(&[1, 0]));
        assert!(nef.negative().is_empty());

        let zero = decompose_class(&spec, &DivisorClass::zero(2)).unwrap();
        assert_eq!(*zero.positive(), DivisorClass::zero(2));
        assert!(zero.negative().is_empty());
    }

    #[test]
    fn class_route_grows_support() {
        // alpha = ample + 3 D1 + 3/2 D2 starts with S = {D1} and must admit
        // D2 on the second pass; the fixed point is N = 2 D1 + 1/2 D2.
        let spec = chain3();
        let alpha = DivisorClass::new(vec![rat_int(2), rat_int(2), rat(1, 2)]);
        let d = decompose_class(&spec, &alpha).unwrap();
        assert_eq!(*d.positive(), DivisorClass::from_ints(&[2, 0, 0]));
        assert_eq!(d.negative()[&0], rat_int(2));
        assert_eq!(d.negative()[&1], rat(1, 2));
        assert!(d.axiom_violations(&spec, &alpha).is_empty());
    }

    #[test]
    fn class_route_agrees_with_lp_on_expressions() {
        for spec in [chain3(), orth3(), degenerate3(), proper3()] {
            for coeffs in [
                [(0, 1), (1, 1)],
                [(0, 2), (1, 1)],
                [(0, 3), (1, 0)],
            ] {
                let expr = EffectiveExpression::from_ints(&spec, &coeffs).unwrap();
                let via_lp = decompose_effective(&spec, &expr).unwrap();
                let via_class = decompose_class(&spec, &expr.class(&spec)).unwrap();
                assert_eq!(via_lp, via_class);
            }
        }
    }

    #[test]
    fn negative_of_ample_still_decomposes() {
        // Decomposability does not imply pseudo-effectivity; the classifiers
        // reject this class by its ample pairing.
        let spec = hilb2();
        let neg = DivisorClass::from_ints(&[-1, 0]);
        let d = decompose_class(&spec, &neg).unwrap();
        assert_eq!(*d.positive(), neg);
        assert!(!is_pseudoeffective(&spec, &neg));
        assert!(!is_big(&spec, &neg));
    }

    #[test]
    fn loci_frozen_values() {
        let spec = hilb2();
        let h = DivisorClass::from_ints(&[1, 0]);
        assert_eq!(null_locus(&spec, &h).unwrap(), Block::new(vec![0]));
        let m = DivisorClass::from_ints(&[2, -1]);
        assert_eq!(null_locus(&spec, &m).unwrap(), Block::empty());
        let far = DivisorClass::from_ints(&[3, -2]);
        assert_eq!(null_locus(&spec, &far).unwrap(), Block::empty());
        assert_eq!(
            null_locus(&spec, &DivisorClass::from_ints(&[1, -1])).unwrap_err(),
            Error::NotBig
        );

        assert_eq!(
            neg_locus(&spec, &DivisorClass::from_ints(&[1, 1])).unwrap(),
            Block::new(vec![0])
        );
        assert_eq!(neg_locus(&spec, &m).unwrap(), Block::empty());
        assert_eq!(
            neg_locus(&spec, &DivisorClass::zero(2)).unwrap(),
            Block::empty()
        );
    }

    #[test]
    fn classifier_frozen_values() {
        let spec = hilb2();
        assert!(is_qnef(&spec, &DivisorClass::from_ints(&[1, 0])));
        assert!(!is_qnef(&spec, &DivisorClass::from_ints(&[1, 1])));
        assert!(is_qnef(&spec, &DivisorClass::from_ints(&[1, -1])));

        assert!(is_big(&spec, &DivisorClass::from_ints(&[1, 1])));
        assert!(!is_big(&spec, &DivisorClass::from_ints(&[1, -1])));
        assert!(!is_big(&spec, &DivisorClass::from_ints(&[0, 1])));

        assert!(is_pseudoeffective(&spec, &DivisorClass::from_ints(&[1, -1])));
        assert!(is_pseudoeffective(&spec, &DivisorClass::from_ints(&[0, 1])));
        assert!(!is_pseudoeffective(&spec, &DivisorClass::from_ints(&[-1, 0])));
    }

    #[test]
    fn expression_rejects_bad_input() {
        let spec = hilb2();
        assert_eq!(
            EffectiveExpression::from_ints(&spec, &[(3, 1)]).unwrap_err(),
            Error::PrimeIndexOutOfRange
        );
        assert_eq!(
            EffectiveExpression::new(&spec, [(0, rat_int(-1))]).unwrap_err(),
            Error::NegativeCoefficient(0)
        );
    }

    #[test]
    fn feasibility_probe_matches_polytope() {
        let spec = chain3();
        let expr = EffectiveExpression::from_ints(&spec, &[(0, 1), (1, 1)]).unwrap();
        let feasible = BTreeMap::from([(0, rat_int(0)), (1, rat_int(0))]);
        assert!(expression_point_feasible(&spec, &expr, &feasible));
        let above = BTreeMap::from([(0, rat(1, 2)), (1, rat_int(0))]);
        // -2 * 1/2 < 0 violates the D1 row.
        assert!(!expression_point_feasible(&spec, &expr, &above));
        let out_of_bounds = BTreeMap::from([(0, rat_int(2)), (1, rat_int(2))]);
        assert!(!expression_point_feasible(&spec, &expr, &out_of_bounds));
    }
}
