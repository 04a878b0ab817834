//! Octonion multiplication on the basis `e_0..e_7`, indexed by GF(2)^3
//! read as a binary number `x0 x1 x2`.

use std::fmt;
use std::ops::{Add, Mul, Neg};
use std::sync::OnceLock;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::error::{Error, Result};

/// A label in GF(2)^3; addition is xor.
pub type Label = u8;

/// Cyclically ordered line `(a, b, c)` with `a + b = c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrientedFanoLine(pub [Label; 3]);

impl OrientedFanoLine {
    pub fn reversed(self) -> Self {
        let [a, b, c] = self.0;
        OrientedFanoLine([b, a, c])
    }

    fn contains_pair_in_order(&self, x: Label, y: Label) -> bool {
        let [a, b, c] = self.0;
        [(a, b), (b, c), (c, a)].contains(&(x, y))
    }
}

/// The oriented Fano plane.
pub const FANO_LINES: [OrientedFanoLine; 7] = [
    OrientedFanoLine([1, 2, 3]),
    OrientedFanoLine([1, 4, 5]),
    OrientedFanoLine([6, 1, 7]),
    OrientedFanoLine([2, 4, 6]),
    OrientedFanoLine([2, 5, 7]),
    OrientedFanoLine([3, 4, 7]),
    OrientedFanoLine([5, 3, 6]),
];

#[derive(Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SignedBasisProduct {
    pub sign: i8,
    pub label: Label,
}

impl SignedBasisProduct {
    const fn pos(label: Label) -> Self {
        SignedBasisProduct { sign: 1, label }
    }

    const fn neg(label: Label) -> Self {
        SignedBasisProduct { sign: -1, label }
    }
}

impl fmt::Debug for SignedBasisProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for SignedBasisProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.sign < 0 { "-" } else { "" };
        write!(f, "{sign}{}", label_name(self.label))
    }
}

/// `e_(x0,x1,x2)`.
pub fn label_name(label: Label) -> String {
    format!("e_({},{},{})", label >> 2 & 1, label >> 1 & 1, label & 1)
}

pub type Table = [[SignedBasisProduct; 8]; 8];

/// Product of two basis elements under the given orientation.
pub fn multiply_with(lines: &[OrientedFanoLine], x: Label, y: Label) -> SignedBasisProduct {
    debug_assert!(x < 8 && y < 8);
    let label = x ^ y;
    let sign = if x == 0 || y == 0 {
        1
    } else if x == y {
        -1
    } else if lines.iter().any(|l| l.contains_pair_in_order(x, y)) {
        1
    } else {
        -1
    };
    SignedBasisProduct { sign, label }
}

pub fn multiply(x: Label, y: Label) -> SignedBasisProduct {
    multiply_with(&FANO_LINES, x, y)
}

pub fn table_with(lines: &[OrientedFanoLine]) -> Table {
    std::array::from_fn(|x| std::array::from_fn(|y| multiply_with(lines, x as Label, y as Label)))
}

/// The table generated from [`FANO_LINES`].
pub fn generated_table() -> &'static Table {
    static TABLE: OnceLock<Table> = OnceLock::new();
    TABLE.get_or_init(|| table_with(&FANO_LINES))
}

/// The generated table, checked cell by cell against [`PRINTED_TABLE`].
pub fn full_table() -> Result<Table> {
    let t = *generated_table();
    compare_tables(&t, &PRINTED_TABLE)?;
    Ok(t)
}

/// Cells `(x, y)` with `x != y`, both nonzero, where `e_x e_y` and `e_y e_x`
/// carry the same sign. Each unordered pair is reported once.
pub fn anticommutativity_failures(table: &Table) -> Vec<(Label, Label)> {
    let mut out = Vec::new();
    for x in 1..8 {
        for y in x + 1..8 {
            if table[x][y].sign == table[y][x].sign {
                out.push((x as Label, y as Label));
            }
        }
    }
    out
}

/// Basis pairs `(x, y)` where `x(xy) = (xx)y` or `(yx)x = y(xx)` fails.
pub fn alternativity_failures(table: &Table) -> Vec<(Label, Label)> {
    let mut out = Vec::new();
    for x in 0..8 {
        for y in 0..8 {
            let (a, b) = (Octonion::basis(x), Octonion::basis(y));
            let m = |u, v| product_in(table, u, v);
            if m(a, m(a, b)) != m(m(a, a), b) || m(m(b, a), a) != m(b, m(a, a)) {
                out.push((x, y));
            }
        }
    }
    out
}

/// Fails on the first differing cell, naming it.
pub fn compare_tables(generated: &Table, reference: &Table) -> Result<()> {
    for x in 0..8 {
        for y in 0..8 {
            if generated[x][y] != reference[x][y] {
                return Err(Error::Invariant(format!(
                    "octonion table cell {}·{}: generated {}, expected {}",
                    label_name(x as Label),
                    label_name(y as Label),
                    generated[x][y],
                    reference[x][y]
                )));
            }
        }
    }
    Ok(())
}

pub fn table_mismatches(generated: &Table, reference: &Table) -> usize {
    (0..64).filter(|&i| generated[i / 8][i % 8] != reference[i / 8][i % 8]).count()
}

use SignedBasisProduct as P;

/// The Cayley-Graves table as printed, row `x`, column `y` holding `e_x e_y`.
#[rustfmt::skip]
pub const PRINTED_TABLE: Table = [
    [P::pos(0), P::pos(1), P::pos(2), P::pos(3), P::pos(4), P::pos(5), P::pos(6), P::pos(7)],
    [P::pos(1), P::neg(0), P::pos(3), P::neg(2), P::pos(5), P::neg(4), P::neg(7), P::pos(6)],
    [P::pos(2), P::neg(3), P::neg(0), P::pos(1), P::pos(6), P::pos(7), P::neg(4), P::neg(5)],
    [P::pos(3), P::pos(2), P::neg(1), P::neg(0), P::pos(7), P::neg(6), P::pos(5), P::neg(4)],
    [P::pos(4), P::neg(5), P::neg(6), P::neg(7), P::neg(0), P::pos(1), P::pos(2), P::pos(3)],
    [P::pos(5), P::pos(4), P::neg(7), P::pos(6), P::neg(1), P::neg(0), P::neg(3), P::pos(2)],
    [P::pos(6), P::pos(7), P::pos(4), P::neg(5), P::neg(2), P::pos(3), P::neg(0), P::neg(1)],
    [P::pos(7), P::pos(6), P::pos(5), P::pos(4), P::neg(3), P::neg(2), P::pos(1), P::neg(0)],
];

/// Formal integer combination of `e_0..e_7`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Octonion(pub [i64; 8]);

impl Octonion {
    pub fn basis(label: Label) -> Self {
        let mut c = [0; 8];
        c[label as usize] = 1;
        Octonion(c)
    }

    pub fn norm(&self) -> i64 {
        self.0.iter().map(|c| c * c).sum()
    }
}

impl Add for Octonion {
    type Output = Octonion;
    fn add(self, o: Octonion) -> Octonion {
        Octonion(std::array::from_fn(|i| self.0[i] + o.0[i]))
    }
}

impl Neg for Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        Octonion(self.0.map(|c| -c))
    }
}

/// Product of formal combinations under an arbitrary basis table.
pub fn product_in(table: &Table, u: Octonion, v: Octonion) -> Octonion {
    let mut out = [0i64; 8];
    for (x, &a) in u.0.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (y, &b) in v.0.iter().enumerate() {
            let p = table[x][y];
            out[p.label as usize] += p.sign as i64 * a * b;
        }
    }
    Octonion(out)
}

impl Mul for Octonion {
    type Output = Octonion;
    fn mul(self, o: Octonion) -> Octonion {
        product_in(generated_table(), self, o)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

pub const DEFAULT_NORM_SAMPLES: usize = 1000;
pub const DEFAULT_SEED: u64 = 0x0c7a;

/// Alternativity on basis pairs, norm multiplicativity on random integer
/// octonions with entries in `[-9, 9]`, and a non-associativity witness.
pub fn identity_checks(samples: usize, seed: u64) -> Vec<IdentityCheck> {
    let mut checks = Vec::new();

    let failures = alternativity_failures(generated_table());
    checks.push(IdentityCheck {
        name: "alternativity",
        pass: failures.is_empty(),
        detail: if failures.is_empty() {
            "64 basis pairs".into()
        } else {
            let names: Vec<String> = failures
                .iter()
                .map(|&(x, y)| format!("({},{})", label_name(x), label_name(y)))
                .collect();
            format!("fails on {}", names.join(" "))
        },
    });

    let mut rng = StdRng::seed_from_u64(seed);
    let mut draw = || Octonion(std::array::from_fn(|_| rng.gen_range(-9..=9)));
    let mut bad = 0usize;
    for _ in 0..samples {
        let (a, b) = (draw(), draw());
        if (a * b).norm() != a.norm() * b.norm() {
            bad += 1;
        }
    }
    checks.push(IdentityCheck {
        name: "norm_multiplicativity",
        pass: bad == 0,
        detail: format!("{} of {samples} samples fail", bad),
    });

    let (e1, e2, e4) = (Octonion::basis(1), Octonion::basis(2), Octonion::basis(4));
    let (left, right) = ((e1 * e2) * e4, e1 * (e2 * e4));
    checks.push(IdentityCheck {
        name: "non_associativity",
        pass: left != right,
        detail: format!("(e1e2)e4 = {:?}, e1(e2e4) = {:?}", left.0, right.0),
    });
    checks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_examples() {
        assert_eq!(multiply(0b001, 0b010), P::pos(0b011));
        assert_eq!(multiply(0b010, 0b001), P::neg(0b011));
        assert_eq!(multiply(0b100, 0b100), P::neg(0));
    }

    #[test]
    fn generated_agrees_with_printed_except_one_cell() {
        let t = generated_table();
        assert_eq!(table_mismatches(t, &PRINTED_TABLE), 1);
        let err = full_table().unwrap_err().to_string();
        assert!(err.contains("e_(1,1,1)·e_(0,0,1)"), "{err}");
        assert_eq!(t[7][1], P::neg(6));
        assert_eq!(PRINTED_TABLE[7][1], P::pos(6));
    }

    #[test]
    fn printed_table_is_not_an_octonion_table() {
        assert_eq!(anticommutativity_failures(&PRINTED_TABLE), vec![(1, 7)]);
        assert!(!alternativity_failures(&PRINTED_TABLE).is_empty());
        assert!(anticommutativity_failures(generated_table()).is_empty());
        assert!(alternativity_failures(generated_table()).is_empty());

        let mut corrected = PRINTED_TABLE;
        corrected[7][1] = P::neg(6);
        assert_eq!(&corrected, generated_table());
    }

    #[test]
    fn lines_cover_each_label_three_times() {
        let mut seen = [0; 8];
        for l in FANO_LINES {
            let [a, b, c] = l.0;
            assert_eq!(a ^ b, c);
            for x in l.0 {
                seen[x as usize] += 1;
            }
        }
        assert_eq!(seen, [0, 3, 3, 3, 3, 3, 3, 3]);
    }

    #[test]
    fn table_shape() {
        let t = generated_table();
        for x in 0..8 {
            assert_eq!(t[0][x], P::pos(x as Label));
            assert_eq!(t[x][0], P::pos(x as Label));
            for y in 0..8 {
                assert_eq!(t[x][y].label, (x ^ y) as Label);
                if x != y && x != 0 && y != 0 {
                    assert_eq!(t[x][y].sign, -t[y][x].sign);
                }
            }
            if x != 0 {
                assert_eq!(t[x][x], P::neg(0));
            }
        }
    }

    #[test]
    fn every_orientation_is_needed() {
        for i in 0..7 {
            let mut lines = FANO_LINES;
            lines[i] = lines[i].reversed();
            let t = table_with(&lines);
            assert!(table_mismatches(&t, &PRINTED_TABLE) >= 1, "line {i}");
            let err = compare_tables(&t, &PRINTED_TABLE).unwrap_err().to_string();
            assert!(err.contains("e_("), "{err}");
        }
    }

    #[test]
    fn identities_hold() {
        for c in identity_checks(DEFAULT_NORM_SAMPLES, DEFAULT_SEED) {
            assert!(c.pass, "{c:?}");
        }
    }
}
