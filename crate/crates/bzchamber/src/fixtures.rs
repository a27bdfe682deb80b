//! Shared test inputs.
//!
//! `hilb2` is the rank-2 record of the Hilbert square of a generic quartic K3
//! surface: basis (H, delta), Gram diag(2, -2), Fujiki constant 3, n = 2,
//! ample class 2H - delta, one declared prime delta. The others are small
//! synthetic records chosen for their block structure; all of them satisfy
//! the validation axioms (see the test below).

use crate::lattice::{DivisorClass, ManifoldSpec, PrimeDivisor};
use crate::linalg::SymmetricMatrix;
use crate::rat::{rat, rat_int};
use crate::rat::Rational;

pub(crate) fn hilb2() -> ManifoldSpec {
    ManifoldSpec::new(
        2,
        rat_int(3),
        SymmetricMatrix::from_i64_rows(&[&[2, 0], &[0, -2]]).unwrap(),
        DivisorClass::from_ints(&[2, -1]),
        vec![PrimeDivisor {
            label: "delta".into(),
            class: DivisorClass::from_ints(&[0, 1]),
        }],
    )
    .unwrap()
}

fn spec3(
    gram_rows: &[&[i64]],
    ample: &[i64],
    d1: Vec<Rational>,
    d2: Vec<Rational>,
) -> ManifoldSpec {
    ManifoldSpec::new(
        2,
        rat_int(1),
        SymmetricMatrix::from_i64_rows(gram_rows).unwrap(),
        DivisorClass::from_ints(ample),
        vec![
            PrimeDivisor {
                label: "D1".into(),
                class: DivisorClass::new(d1),
            },
            PrimeDivisor {
                label: "D2".into(),
                class: DivisorClass::new(d2),
            },
        ],
    )
    .unwrap()
}

/// Two exceptional primes with q(D_i) = -2 and pairing 1; {D1, D2} is a
/// block (restricted determinant 3).
pub(crate) fn chain3() -> ManifoldSpec {
    spec3(
        &[&[2, 0, 0], &[0, -2, 1], &[0, 1, -2]],
        &[2, -1, -1],
        vec![rat_int(0), rat_int(1), rat_int(0)],
        vec![rat_int(0), rat_int(0), rat_int(1)],
    )
}

/// Two orthogonal exceptional primes with q(D_i) = -2; every subset is a
/// block.
pub(crate) fn orth3() -> ManifoldSpec {
    spec3(
        &[&[2, 0, 0], &[0, -2, 0], &[0, 0, -2]],
        &[2, -1, -1],
        vec![rat_int(0), rat_int(1), rat_int(0)],
        vec![rat_int(0), rat_int(0), rat_int(1)],
    )
}

/// q(D_i) = -2 with pairing 2: the pair Gram [[-2,2],[2,-2]] is degenerate
/// (determinant 0), so {D1, D2} is not a block. The primes sit inside
/// diag(2,-2,-2), where their span carries the degenerate restriction.
pub(crate) fn degenerate3() -> ManifoldSpec {
    spec3(
        &[&[2, 0, 0], &[0, -2, 0], &[0, 0, -2]],
        &[2, -1, 0],
        vec![rat_int(0), rat_int(1), rat_int(0)],
        vec![rat_int(1), rat_int(-1), rat_int(1)],
    )
}

/// q(D_i) = -2 with pairing 3: the pair Gram [[-2,3],[3,-2]] is indefinite
/// (determinant -5), so {D1, D2} is not a block, yet the squared
/// Hodge-type bound 3^2 >= (-2)(-2) holds.
pub(crate) fn proper3() -> ManifoldSpec {
    spec3(
        &[&[2, 0, 0], &[0, -2, 0], &[0, 0, -2]],
        &[2, -1, 0],
        vec![rat_int(0), rat_int(1), rat_int(0)],
        vec![rat(3, 2), rat(-3, 2), rat_int(1)],
    )
}

/// Rank-1 record: positive generator, no primes.
pub(crate) fn rank1() -> ManifoldSpec {
    ManifoldSpec::new(
        1,
        rat_int(1),
        SymmetricMatrix::from_i64_rows(&[&[2]]).unwrap(),
        DivisorClass::from_ints(&[1]),
        vec![],
    )
    .unwrap()
}
