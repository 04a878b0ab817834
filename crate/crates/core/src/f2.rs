//! Linear algebra over GF(2) in the six-dimensional symplectic space.
//!
//! Coordinates are `(v1, ..., v6)` with `v_i` stored in bit `i - 1` of a
//! byte. The hyperbolic pairs of the standard basis are `(e1, e4)`,
//! `(e2, e5)` and `(e3, e6)`, and the reference even form is
//! `q0(v) = v1 v4 + v2 v5 + v3 v6`.

use std::fmt;
use std::ops::Add;

use serde::Serialize;

use crate::error::{Error, Result};

/// Number of vectors in the space, zero included.
pub const SPACE_SIZE: usize = 64;

const LOW: u8 = 0b000_111;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(transparent)]
pub struct SymplecticVector(u8);

impl SymplecticVector {
    pub const ZERO: SymplecticVector = SymplecticVector(0);

    /// Builds a vector from its integer code; `None` if the code is not in `0..64`.
    pub const fn new(code: u8) -> Option<Self> {
        if code < SPACE_SIZE as u8 {
            Some(SymplecticVector(code))
        } else {
            None
        }
    }

    pub(crate) const fn from_code(code: u8) -> Self {
        SymplecticVector(code & 0x3f)
    }

    /// The standard basis vector `e_i`, for `i` in `1..=6`.
    pub fn basis(i: usize) -> Self {
        assert!((1..=6).contains(&i), "basis index {i} out of range");
        SymplecticVector(1 << (i - 1))
    }

    pub const fn code(self) -> u8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn coords(self) -> [u8; 6] {
        std::array::from_fn(|i| (self.0 >> i) & 1)
    }

    pub fn from_coords(coords: [u8; 6]) -> Self {
        let code = coords
            .iter()
            .enumerate()
            .fold(0u8, |acc, (i, &c)| acc | ((c & 1) << i));
        SymplecticVector(code)
    }

    pub fn has_coord(self, i: usize) -> bool {
        (self.0 >> (i - 1)) & 1 == 1
    }

    /// All 64 vectors in ascending code order.
    pub fn all() -> impl Iterator<Item = SymplecticVector> {
        (0..SPACE_SIZE as u8).map(SymplecticVector)
    }

    /// The 63 nonzero vectors in ascending code order.
    pub fn nonzero() -> impl Iterator<Item = SymplecticVector> {
        (1..SPACE_SIZE as u8).map(SymplecticVector)
    }

    /// Exchanges the two halves of each hyperbolic pair.
    fn swap_halves(self) -> u8 {
        ((self.0 & LOW) << 3) | (self.0 >> 3)
    }

    fn pivot(self) -> u32 {
        7 - self.0.leading_zeros()
    }
}

impl Add for SymplecticVector {
    type Output = SymplecticVector;

    fn add(self, rhs: SymplecticVector) -> SymplecticVector {
        SymplecticVector(self.0 ^ rhs.0)
    }
}

impl std::iter::Sum for SymplecticVector {
    fn sum<I: Iterator<Item = SymplecticVector>>(iter: I) -> Self {
        iter.fold(SymplecticVector::ZERO, |a, b| a + b)
    }
}

impl fmt::Debug for SymplecticVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Display for SymplecticVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The symplectic pairing `u1v4 + u2v5 + u3v6 + u4v1 + u5v2 + u6v3` mod 2.
pub fn pairing(u: SymplecticVector, v: SymplecticVector) -> u8 {
    ((u.0 & v.swap_halves()).count_ones() & 1) as u8
}

/// The reference even quadratic form `v1v4 + v2v5 + v3v6`.
pub fn q0(v: SymplecticVector) -> u8 {
    ((v.0 & (v.0 >> 3) & LOW).count_ones() & 1) as u8
}

/// A theta characteristic, modelled as the quadratic refinement
/// `v -> q0(v) + <shift, v>` of the pairing.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Theta {
    shift: SymplecticVector,
}

impl Theta {
    pub const ZERO: Theta = Theta {
        shift: SymplecticVector::ZERO,
    };

    pub const fn new(shift: SymplecticVector) -> Self {
        Theta { shift }
    }

    pub fn shift(self) -> SymplecticVector {
        self.shift
    }

    pub fn code(self) -> u8 {
        self.shift.0
    }

    /// All 64 theta characteristics in ascending code order.
    pub fn all() -> impl Iterator<Item = Theta> {
        SymplecticVector::all().map(Theta::new)
    }

    /// Arf invariant: 1 for odd, 0 for even.
    pub fn arf(self) -> u8 {
        q0(self.shift)
    }

    pub fn is_odd(self) -> bool {
        self.arf() == 1
    }

    pub fn eval(self, v: SymplecticVector) -> u8 {
        q0(v) ^ pairing(self.shift, v)
    }

    pub fn translate(self, v: SymplecticVector) -> Theta {
        Theta::new(self.shift + v)
    }

    /// Sum of three quadratic forms; the result is again a refinement.
    pub fn sum3(a: Theta, b: Theta, c: Theta) -> Theta {
        Theta::new(a.shift + b.shift + c.shift)
    }
}

impl fmt::Debug for Theta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "θ{}", self.shift.0)
    }
}

impl fmt::Display for Theta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.shift.0)
    }
}

pub fn arf(theta: Theta) -> u8 {
    theta.arf()
}

pub fn theta_eval(theta: Theta, v: SymplecticVector) -> u8 {
    theta.eval(v)
}

pub fn theta_translate(theta: Theta, v: SymplecticVector) -> Theta {
    theta.translate(v)
}

pub fn theta_sum3(a: Theta, b: Theta, c: Theta) -> Theta {
    Theta::sum3(a, b, c)
}

/// A linear subspace, held as its reduced echelon basis (pivot = highest set
/// bit, rows by descending pivot) together with a membership mask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: Vec<SymplecticVector>,
    members: u64,
}

impl Subspace {
    pub fn zero() -> Self {
        Subspace {
            basis: Vec::new(),
            members: 1,
        }
    }

    /// The span of arbitrary vectors, reduced to canonical form.
    pub fn span<I: IntoIterator<Item = SymplecticVector>>(vectors: I) -> Self {
        let mut rows: Vec<SymplecticVector> = Vec::new();
        for v in vectors {
            let mut v = v;
            for r in &rows {
                if v.0 >> r.pivot() & 1 == 1 {
                    v = v + *r;
                }
            }
            if v.is_zero() {
                continue;
            }
            let p = v.pivot();
            for r in rows.iter_mut() {
                if r.0 >> p & 1 == 1 {
                    *r = *r + v;
                }
            }
            rows.push(v);
            rows.sort_by(|a, b| b.pivot().cmp(&a.pivot()));
        }
        Self::from_reduced(rows)
    }

    fn from_reduced(basis: Vec<SymplecticVector>) -> Self {
        let mut members = 1u64;
        for b in &basis {
            let mut shifted = 0u64;
            for c in 0..SPACE_SIZE as u8 {
                if members >> c & 1 == 1 {
                    shifted |= 1 << (c ^ b.0);
                }
            }
            members |= shifted;
        }
        Subspace { basis, members }
    }

    pub fn basis(&self) -> &[SymplecticVector] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Bit `c` is set iff the vector with code `c` lies in the subspace.
    pub fn member_mask(&self) -> u64 {
        self.members
    }

    pub fn contains(&self, v: SymplecticVector) -> bool {
        self.members >> v.0 & 1 == 1
    }

    /// Members in ascending code order, zero included.
    pub fn elements(&self) -> impl Iterator<Item = SymplecticVector> + '_ {
        SymplecticVector::all().filter(move |v| self.contains(*v))
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = SymplecticVector> + '_ {
        self.elements().skip(1)
    }

    pub fn is_isotropic(&self) -> bool {
        self.basis
            .iter()
            .enumerate()
            .all(|(i, &a)| self.basis[i + 1..].iter().all(|&b| pairing(a, b) == 0))
    }

    /// `dim(self ∩ other)`.
    pub fn intersection_dim(&self, other: &Subspace) -> usize {
        (self.members & other.members).count_ones().trailing_zeros() as usize
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.basis
            .len()
            .cmp(&other.basis.len())
            .then_with(|| self.basis.cmp(&other.basis))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace{:?}", self.basis)
    }
}

/// All `k`-dimensional subspaces, each once, in ascending order of their
/// echelon bases. With `isotropic_only`, only totally isotropic ones.
pub fn subspaces(k: usize, isotropic_only: bool) -> Result<Vec<Subspace>> {
    if k > 6 {
        return Err(Error::Dimension(k));
    }
    let mut out = Vec::new();
    for pivots in pivot_sets(k) {
        // free positions for row i: below its pivot and not a pivot column
        let free: Vec<Vec<u32>> = pivots
            .iter()
            .map(|&p| (0..p).filter(|c| !pivots.contains(c)).collect())
            .collect();
        let total_free: u32 = free.iter().map(|f| f.len() as u32).sum();
        for assignment in 0u32..(1 << total_free) {
            let mut bit = 0;
            let basis = pivots
                .iter()
                .zip(&free)
                .map(|(&p, cols)| {
                    let mut code = 1u8 << p;
                    for &c in cols {
                        if assignment >> bit & 1 == 1 {
                            code |= 1 << c;
                        }
                        bit += 1;
                    }
                    SymplecticVector(code)
                })
                .collect();
            let s = Subspace::from_reduced(basis);
            if !isotropic_only || s.is_isotropic() {
                out.push(s);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// `k`-subsets of bit positions `0..6`, each listed in descending order.
fn pivot_sets(k: usize) -> Vec<Vec<u32>> {
    (0u32..64)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..6).rev().filter(|b| m >> b & 1 == 1).collect())
        .collect()
}
