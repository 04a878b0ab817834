//! The quadric `S = Σ_{i<j} x_i x_j` in PG(7, 2): points, polarity, line
//! classes, enneads, and the coordinate symmetries preserving `S`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use rustc_hash::FxHashSet;
use serde::Serialize;

use crate::error::{Error, Result};

/// Number of points of PG(7, 2).
pub const POINT_COUNT: usize = 255;

/// A point of PG(7, 2): a nonzero vector of GF(2)^8 with `x_i` in bit `i - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct StudyPoint(u8);

impl StudyPoint {
    pub fn new(code: u8) -> Option<Self> {
        (code != 0).then_some(StudyPoint(code))
    }

    pub fn code(self) -> u8 {
        self.0
    }

    pub fn weight(self) -> u32 {
        self.0.count_ones()
    }

    /// `P_i` for `i` in `1..=8` is the coordinate point; `P_9` is all ones.
    pub fn standard(i: usize) -> Self {
        match i {
            1..=8 => StudyPoint(1 << (i - 1)),
            9 => StudyPoint(0xff),
            _ => panic!("standard point index {i} out of range"),
        }
    }

    pub fn all() -> impl Iterator<Item = StudyPoint> {
        (1..=255u8).map(StudyPoint)
    }

    /// Third point on the line through two distinct points.
    pub fn sum(self, other: StudyPoint) -> Option<StudyPoint> {
        StudyPoint::new(self.0 ^ other.0)
    }
}

impl fmt::Debug for StudyPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{:08b}", self.0.reverse_bits())
    }
}

fn s_of_code(code: u8) -> u8 {
    let w = code.count_ones();
    ((w * w.saturating_sub(1) / 2) & 1) as u8
}

/// `S(P)`, using `Σ_{i<j} x_i x_j = C(weight, 2)` over GF(2).
pub fn quadric_value(p: StudyPoint) -> u8 {
    s_of_code(p.0)
}

pub fn on_quadric(p: StudyPoint) -> bool {
    quadric_value(p) == 0
}

/// The symmetric polar form `S(P + Q) + S(P) + S(Q)`; 0 means conjugate.
pub fn polar(p: StudyPoint, q: StudyPoint) -> Result<u8> {
    if p == q {
        return Err(Error::domain("polar form of a point with itself"));
    }
    Ok(s_of_code(p.0 ^ q.0) ^ s_of_code(p.0) ^ s_of_code(q.0))
}

fn polar_codes(a: u8, b: u8) -> u8 {
    s_of_code(a ^ b) ^ s_of_code(a) ^ s_of_code(b)
}

/// Points of `V(S)` in ascending code order.
pub fn quadric_points() -> Vec<StudyPoint> {
    StudyPoint::all().filter(|&p| on_quadric(p)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StudyLine {
    points: [StudyPoint; 3],
}

impl StudyLine {
    pub fn through(p: StudyPoint, q: StudyPoint) -> Result<Self> {
        let r = p
            .sum(q)
            .ok_or_else(|| Error::domain("a line needs two distinct points"))?;
        let mut points = [p, q, r];
        points.sort();
        Ok(StudyLine { points })
    }

    pub fn points(&self) -> [StudyPoint; 3] {
        self.points
    }

    pub fn quadric_meets(&self) -> usize {
        self.points.iter().filter(|&&p| on_quadric(p)).count()
    }
}

/// The 127 lines through a point.
pub fn lines_through(p: StudyPoint) -> Vec<StudyLine> {
    let mut lines: Vec<StudyLine> = StudyPoint::all()
        .filter(|&q| q != p && q.0 < (p.0 ^ q.0))
        .map(|q| StudyLine::through(p, q).expect("distinct"))
        .collect();
    lines.sort();
    lines
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LineClasses {
    pub point: u8,
    pub n0: usize,
    pub n1: usize,
    pub n2: usize,
}

/// Counts the lines through an off-quadric point by how many points they
/// share with `V(S)`.
pub fn classify_lines_through(p: StudyPoint) -> Result<LineClasses> {
    if on_quadric(p) {
        return Err(Error::Precondition(format!("{p:?} lies on the quadric")));
    }
    let mut counts = [0usize; 3];
    for line in lines_through(p) {
        counts[line.quadric_meets()] += 1;
    }
    Ok(LineClasses {
        point: p.0,
        n0: counts[0],
        n1: counts[1],
        n2: counts[2],
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ennead {
    points: [StudyPoint; 9],
}

impl Ennead {
    /// Validates: nine distinct points on `V(S)`, pairwise non-conjugate,
    /// every chord meeting `V(S)` only at its ends.
    pub fn try_new(mut points: [StudyPoint; 9]) -> Result<Self> {
        points.sort();
        if points.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::domain("ennead points must be distinct"));
        }
        if let Some(p) = points.iter().find(|&&p| !on_quadric(p)) {
            return Err(Error::domain(format!("{p:?} is not on the quadric")));
        }
        for (i, &p) in points.iter().enumerate() {
            for &q in &points[i + 1..] {
                if polar(p, q)? == 0 {
                    return Err(Error::domain(format!("{p:?} and {q:?} are conjugate")));
                }
                if on_quadric(p.sum(q).expect("distinct")) {
                    return Err(Error::domain(format!("chord {p:?}{q:?} lies in the quadric")));
                }
            }
        }
        Ok(Ennead { points })
    }

    pub fn points(&self) -> [StudyPoint; 9] {
        self.points
    }

    pub fn codes(&self) -> Vec<u8> {
        self.points.iter().map(|p| p.0).collect()
    }
}

/// `{P1, ..., P9}`.
pub fn standard_ennead() -> Ennead {
    Ennead::try_new(std::array::from_fn(|i| StudyPoint::standard(i + 1))).expect("standard ennead")
}

/// Bitset over the 135 quadric points.
#[derive(Clone, Copy, Default, PartialEq, Eq)]
struct VertexSet([u64; 3]);

impl VertexSet {
    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn and(&self, o: &VertexSet) -> VertexSet {
        VertexSet([self.0[0] & o.0[0], self.0[1] & o.0[1], self.0[2] & o.0[2]])
    }

    fn and_not(&self, o: &VertexSet) -> VertexSet {
        VertexSet([self.0[0] & !o.0[0], self.0[1] & !o.0[1], self.0[2] & !o.0[2]])
    }

    fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_empty(&self) -> bool {
        self.0 == [0; 3]
    }

    /// Elements strictly above `i`.
    fn above(&self, i: usize) -> VertexSet {
        let mut out = *self;
        for (w, word) in out.0.iter_mut().enumerate() {
            let lo = w * 64;
            if i + 1 >= lo + 64 {
                *word = 0;
            } else if i + 1 > lo {
                *word &= !0u64 << (i + 1 - lo);
            }
        }
        out
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..3).flat_map(move |w| {
            let mut word = self.0[w];
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let b = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(w * 64 + b)
            })
        })
    }
}

/// The non-conjugacy graph on `V(S)`: vertices are quadric points in
/// ascending code order, edges join points with polar value 1.
pub struct ConjugacyGraph {
    vertices: Vec<StudyPoint>,
    adjacency: Vec<VertexSet>,
}

impl ConjugacyGraph {
    pub fn new() -> Self {
        let vertices = quadric_points();
        let adjacency = vertices
            .iter()
            .map(|&p| {
                let mut set = VertexSet::default();
                for (j, &q) in vertices.iter().enumerate() {
                    if p != q && polar_codes(p.0, q.0) == 1 {
                        set.insert(j);
                    }
                }
                set
            })
            .collect();
        ConjugacyGraph { vertices, adjacency }
    }

    pub fn vertices(&self) -> &[StudyPoint] {
        &self.vertices
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].len()
    }

    /// All cliques of exactly `k` vertices, each listed once in ascending
    /// vertex order, the list itself sorted.
    pub fn cliques_of_size(&self, k: usize) -> Vec<Vec<StudyPoint>> {
        let mut all = VertexSet::default();
        for i in 0..self.vertices.len() {
            all.insert(i);
        }
        let mut out = Vec::new();
        let mut chosen = Vec::with_capacity(k);
        self.extend(k, &mut chosen, all, &mut out);
        out
    }

    fn extend(&self, k: usize, chosen: &mut Vec<usize>, cand: VertexSet, out: &mut Vec<Vec<StudyPoint>>) {
        if chosen.len() == k {
            out.push(chosen.iter().map(|&i| self.vertices[i]).collect());
            return;
        }
        if chosen.len() + cand.len() < k {
            return;
        }
        for v in cand.iter() {
            let next = cand.above(v).and(&self.adjacency[v]);
            chosen.push(v);
            self.extend(k, chosen, next, out);
            chosen.pop();
        }
    }

    /// All maximal cliques, by Bron–Kerbosch with pivoting on the vertex
    /// that leaves the smallest branching set. Each clique is sorted; the
    /// list is sorted.
    pub fn maximal_cliques(&self) -> Vec<Vec<StudyPoint>> {
        let mut all = VertexSet::default();
        for i in 0..self.vertices.len() {
            all.insert(i);
        }
        let mut out = Vec::new();
        self.bron_kerbosch(&mut Vec::new(), all, VertexSet::default(), &mut out);
        out.sort();
        out
    }

    fn bron_kerbosch(&self, r: &mut Vec<usize>, p: VertexSet, x: VertexSet, out: &mut Vec<Vec<StudyPoint>>) {
        if p.is_empty() {
            if x.is_empty() {
                let mut clique: Vec<StudyPoint> = r.iter().map(|&i| self.vertices[i]).collect();
                clique.sort();
                out.push(clique);
            }
            return;
        }
        let pivot = p
            .iter()
            .chain(x.iter())
            .min_by_key(|&u| p.and_not(&self.adjacency[u]).len())
            .expect("p is nonempty");
        let mut p = p;
        let mut x = x;
        for v in p.and_not(&self.adjacency[pivot]).iter().collect::<Vec<_>>() {
            r.push(v);
            self.bron_kerbosch(r, p.and(&self.adjacency[v]), x.and(&self.adjacency[v]), out);
            r.pop();
            p.0[v / 64] &= !(1 << (v % 64));
            x.insert(v);
        }
    }

    /// Whether no outside vertex is adjacent to every member.
    pub fn is_maximal(&self, clique: &[StudyPoint]) -> bool {
        let idx: Vec<usize> = clique
            .iter()
            .map(|p| self.vertices.binary_search(p).expect("vertex of the graph"))
            .collect();
        (0..self.vertices.len())
            .filter(|i| !idx.contains(i))
            .all(|i| idx.iter().any(|&j| !self.adjacency[j].contains(i)))
    }
}

impl Default for ConjugacyGraph {
    fn default() -> Self {
        Self::new()
    }
}

/// All 960 enneads: the 9-cliques of the non-conjugacy graph on `V(S)`.
pub fn enneads() -> Vec<Ennead> {
    ConjugacyGraph::new()
        .cliques_of_size(9)
        .into_iter()
        .map(|c| Ennead::try_new(c.try_into().expect("nine points")).expect("9-clique is an ennead"))
        .collect()
}

/// An invertible linear map of GF(2)^8, packed as eight column bytes.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoordinateChange(u64);

impl CoordinateChange {
    pub const IDENTITY: CoordinateChange = CoordinateChange(0x8040_2010_0804_0201);

    pub fn from_columns(columns: [u8; 8]) -> Self {
        CoordinateChange(u64::from_le_bytes(columns))
    }

    pub fn columns(self) -> [u8; 8] {
        self.0.to_le_bytes()
    }

    pub fn apply_code(self, x: u8) -> u8 {
        let cols = self.columns();
        (0..8).filter(|&j| x >> j & 1 == 1).fold(0, |acc, j| acc ^ cols[j])
    }

    pub fn apply(self, p: StudyPoint) -> StudyPoint {
        StudyPoint(self.apply_code(p.0))
    }

    fn table(self) -> [u8; 256] {
        std::array::from_fn(|x| self.apply_code(x as u8))
    }

    pub fn preserves_quadric(self) -> bool {
        (0..=255u8).all(|x| s_of_code(self.apply_code(x)) == s_of_code(x))
    }
}

impl fmt::Debug for CoordinateChange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoordinateChange{:?}", self.columns())
    }
}

/// Generators: the adjacent coordinate transpositions and the map fixing
/// `e1..e7` and sending `e8` to `e1 + ... + e8`.
pub fn s9_generators() -> Vec<CoordinateChange> {
    let mut gens = Vec::new();
    for i in 0..7 {
        let mut cols: [u8; 8] = std::array::from_fn(|j| 1 << j);
        cols.swap(i, i + 1);
        gens.push(CoordinateChange::from_columns(cols));
    }
    let mut cols: [u8; 8] = std::array::from_fn(|j| 1 << j);
    cols[7] = 0xff;
    gens.push(CoordinateChange::from_columns(cols));
    gens
}

pub struct CoordinateGroup {
    elements: Vec<CoordinateChange>,
}

impl CoordinateGroup {
    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn elements(&self) -> &[CoordinateChange] {
        &self.elements
    }

    /// Permutation of the labels `0..9` induced on `P1..P9`, if the element
    /// permutes them.
    pub fn induced_permutation(g: CoordinateChange) -> Option<[u8; 9]> {
        let std: Vec<StudyPoint> = (1..=9).map(StudyPoint::standard).collect();
        let mut perm = [0u8; 9];
        for (i, p) in std.iter().enumerate() {
            let img = g.apply(*p);
            perm[i] = std.iter().position(|&q| q == img)? as u8;
        }
        Some(perm)
    }
}

/// Closure of [`s9_generators`]; every element is checked to preserve `S`.
pub fn s9_linear_group() -> Result<CoordinateGroup> {
    let gens = s9_generators();
    for g in &gens {
        if !g.preserves_quadric() {
            return Err(Error::Invariant(format!("generator {g:?} does not preserve S")));
        }
    }
    let tables: Vec<[u8; 256]> = gens.iter().map(|g| g.table()).collect();
    let mut seen = FxHashSet::default();
    seen.insert(CoordinateChange::IDENTITY);
    let mut elements = vec![CoordinateChange::IDENTITY];
    let mut head = 0;
    while head < elements.len() {
        let cols = elements[head].columns();
        head += 1;
        for t in &tables {
            let img = CoordinateChange::from_columns(cols.map(|c| t[c as usize]));
            if seen.insert(img) {
                elements.push(img);
            }
        }
    }
    if let Some(bad) = elements.iter().find(|g| !g.preserves_quadric()) {
        return Err(Error::Invariant(format!("{bad:?} does not preserve S")));
    }
    Ok(CoordinateGroup { elements })
}

/// GF(8) as bit vectors modulo `x^3 + x + 1`.
mod gf8 {
    pub fn mul(a: u8, b: u8) -> u8 {
        let mut acc = 0u8;
        for i in 0..3 {
            if b >> i & 1 == 1 {
                acc ^= a << i;
            }
        }
        for bit in (3..5).rev() {
            if acc >> bit & 1 == 1 {
                acc ^= 0b1011 << (bit - 3);
            }
        }
        acc
    }

    pub fn inv(a: u8) -> u8 {
        (1..8).find(|&b| mul(a, b) == 1).expect("nonzero element")
    }

    pub fn frobenius(a: u8, power: u32) -> u8 {
        (0..power).fold(a, |x, _| mul(x, x))
    }
}

/// The label used for the point at infinity of the projective line.
pub const INFINITY_LABEL: u8 = 8;

/// PΓL(2, 8) acting on the projective line: field elements `0..8` by their
/// bit code, infinity as [`INFINITY_LABEL`]. Identified with the labels of
/// the standard ennead by ascending point code.
pub struct ProjectiveSemilinearGroup {
    permutations: Vec<[u8; 9]>,
}

impl ProjectiveSemilinearGroup {
    pub fn order(&self) -> u64 {
        self.permutations.len() as u64
    }

    pub fn permutations(&self) -> &[[u8; 9]] {
        &self.permutations
    }

    /// Largest `k` such that the group is transitive on ordered `k`-tuples
    /// of distinct labels.
    pub fn transitivity_degree(&self) -> usize {
        let mut k = 0;
        while k < 9 {
            let seed: Vec<u8> = (0..=k as u8).collect();
            let orbit: HashSet<Vec<u8>> = self
                .permutations
                .iter()
                .map(|p| seed.iter().map(|&x| p[x as usize]).collect())
                .collect();
            let tuples: usize = (0..=k).map(|i| 9 - i).product();
            if orbit.len() != tuples {
                break;
            }
            k += 1;
        }
        k
    }
}

/// All maps `z -> (a z^σ + b) / (c z^σ + d)` with `ad + bc != 0` and `σ` a
/// field automorphism, as permutations of the nine points.
pub fn pgammal_2_8() -> ProjectiveSemilinearGroup {
    let moebius = |a: u8, b: u8, c: u8, d: u8, z: u8| -> u8 {
        if z == INFINITY_LABEL {
            return if c == 0 { INFINITY_LABEL } else { gf8::mul(a, gf8::inv(c)) };
        }
        let num = gf8::mul(a, z) ^ b;
        let den = gf8::mul(c, z) ^ d;
        if den == 0 {
            INFINITY_LABEL
        } else {
            gf8::mul(num, gf8::inv(den))
        }
    };
    let mut perms = BTreeSet::new();
    for power in 0..3 {
        for a in 0..8 {
            for b in 0..8 {
                for c in 0..8 {
                    for d in 0..8 {
                        if gf8::mul(a, d) ^ gf8::mul(b, c) == 0 {
                            continue;
                        }
                        let perm: [u8; 9] = std::array::from_fn(|z| {
                            let z = z as u8;
                            let zs = if z == INFINITY_LABEL { z } else { gf8::frobenius(z, power) };
                            moebius(a, b, c, d, zs)
                        });
                        perms.insert(perm);
                    }
                }
            }
        }
    }
    ProjectiveSemilinearGroup {
        permutations: perms.into_iter().collect(),
    }
}
