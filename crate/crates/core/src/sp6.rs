//! The symplectic group Sp(6, 2) generated by its 63 transvections, its
//! actions on the symplectic-side structures, and orbit computations.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use rustc_hash::FxHashSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::f2::{pairing, subspaces, Subspace, SymplecticVector, Theta};
use crate::structures::{
    aronhold_heptads, syzygetic_tetrads, thetas_by_parity, AronholdHeptad, SyzygeticTetrad,
};

/// Order of Sp(6, 2).
pub const SP6_ORDER: u64 = 1_451_520;

/// Default cap on the number of elements produced by [`group_closure`].
pub const DEFAULT_BUDGET: usize = 2_000_000;

/// One row of the stabilizer summary: structure, stabilizer order, number
/// of structures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StabilizerRow {
    pub structure: &'static str,
    pub stabilizer_order: u64,
    pub count: u64,
}

pub const STABILIZER_TABLE: [StabilizerRow; 9] = [
    StabilizerRow { structure: "bitangent", stabilizer_order: 51840, count: 28 },
    StabilizerRow { structure: "octad", stabilizer_order: 40320, count: 36 },
    StabilizerRow { structure: "steiner", stabilizer_order: 23040, count: 63 },
    StabilizerRow { structure: "riemann_dickson", stabilizer_order: 12096, count: 120 },
    StabilizerRow { structure: "gopel", stabilizer_order: 10752, count: 135 },
    StabilizerRow { structure: "aronhold", stabilizer_order: 5040, count: 288 },
    StabilizerRow { structure: "syzygetic", stabilizer_order: 4608, count: 315 },
    StabilizerRow { structure: "azygetic", stabilizer_order: 4320, count: 336 },
    StabilizerRow { structure: "ennead", stabilizer_order: 1512, count: 960 },
];

pub fn stabilizer_row(structure: &str) -> Option<StabilizerRow> {
    STABILIZER_TABLE.iter().copied().find(|r| r.structure == structure)
}

/// A 6×6 matrix over GF(2), packed column by column: bits `6j..6j+6` hold
/// the image of `e_{j+1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymplecticMap(u64);

impl SymplecticMap {
    pub const IDENTITY: SymplecticMap =
        SymplecticMap(1 | 2 << 6 | 4 << 12 | 8 << 18 | 16 << 24 | 32 << 30);

    /// Builds a map from the images of `e1..e6`, checking that it is
    /// invertible and preserves the pairing.
    pub fn from_columns(columns: [SymplecticVector; 6]) -> Result<Self> {
        let m = Self::from_columns_unchecked(columns);
        if !m.is_invertible() {
            return Err(Error::domain("matrix is singular"));
        }
        if !m.preserves_pairing() {
            return Err(Error::domain("matrix does not preserve the pairing"));
        }
        Ok(m)
    }

    fn from_columns_unchecked(columns: [SymplecticVector; 6]) -> Self {
        SymplecticMap(
            columns
                .iter()
                .enumerate()
                .fold(0u64, |acc, (j, c)| acc | (c.code() as u64) << (6 * j)),
        )
    }

    /// Decodes a packed 36-bit code; `None` if it is not in Sp(6, 2).
    pub fn from_code(code: u64) -> Option<Self> {
        if code >> 36 != 0 {
            return None;
        }
        let m = SymplecticMap(code);
        (m.is_invertible() && m.preserves_pairing()).then_some(m)
    }

    pub fn code(self) -> u64 {
        self.0
    }

    pub fn column(self, j: usize) -> SymplecticVector {
        SymplecticVector::from_code((self.0 >> (6 * j)) as u8)
    }

    pub fn columns(self) -> [SymplecticVector; 6] {
        std::array::from_fn(|j| self.column(j))
    }

    pub fn apply(self, v: SymplecticVector) -> SymplecticVector {
        (0..6)
            .filter(|&j| v.code() >> j & 1 == 1)
            .map(|j| self.column(j))
            .sum()
    }

    /// Images of all 64 vectors, indexed by code.
    pub fn table(self) -> [u8; 64] {
        let mut t = [0u8; 64];
        for v in SymplecticVector::all() {
            t[v.code() as usize] = self.apply(v).code();
        }
        t
    }

    /// `self ∘ other`.
    pub fn compose(self, other: SymplecticMap) -> SymplecticMap {
        Self::from_columns_unchecked(other.columns().map(|c| self.apply(c)))
    }

    /// The inverse, via the adjoint identity `<g⁻¹ e_j, e_k> = <e_j, g e_k>`.
    pub fn inverse(self) -> SymplecticMap {
        let cols = std::array::from_fn(|j| {
            let ej = SymplecticVector::basis(j + 1);
            let mut coords = [0u8; 6];
            for k in 0..6 {
                coords[partner(k)] = pairing(ej, self.column(k));
            }
            SymplecticVector::from_coords(coords)
        });
        Self::from_columns_unchecked(cols)
    }

    pub fn preserves_pairing(self) -> bool {
        (0..6).all(|i| {
            (0..6).all(|j| {
                pairing(self.column(i), self.column(j))
                    == pairing(SymplecticVector::basis(i + 1), SymplecticVector::basis(j + 1))
            })
        })
    }

    pub fn is_invertible(self) -> bool {
        Subspace::span(self.columns()).dim() == 6
    }
}

impl fmt::Debug for SymplecticMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymplecticMap{:?}", self.columns())
    }
}

fn partner(k: usize) -> usize {
    (k + 3) % 6
}

/// The transvection `x -> x + <x, u> u`.
pub fn transvection(u: SymplecticVector) -> Result<SymplecticMap> {
    if u.is_zero() {
        return Err(Error::domain("transvection along the zero vector"));
    }
    let cols = std::array::from_fn(|j| {
        let e = SymplecticVector::basis(j + 1);
        if pairing(e, u) == 1 {
            e + u
        } else {
            e
        }
    });
    Ok(SymplecticMap::from_columns_unchecked(cols))
}

/// The 63 transvections, ordered by their defining vector.
pub fn transvections() -> Vec<SymplecticMap> {
    SymplecticVector::nonzero()
        .map(|u| transvection(u).expect("nonzero"))
        .collect()
}

/// Sp(6, 2) as an explicit list of elements in breadth-first discovery
/// order from the identity.
pub struct Sp6Group {
    elements: Vec<SymplecticMap>,
}

impl Sp6Group {
    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn elements(&self) -> &[SymplecticMap] {
        &self.elements
    }
}

/// Breadth-first closure of the transvections under composition. Fails if
/// more than `budget` elements are produced.
pub fn group_closure(budget: usize) -> Result<Sp6Group> {
    let tables: Vec<[u8; 64]> = transvections().iter().map(|t| t.table()).collect();
    let mut seen: FxHashSet<u64> = FxHashSet::default();
    seen.reserve(SP6_ORDER.min(budget as u64) as usize);
    let mut elements = vec![SymplecticMap::IDENTITY];
    seen.insert(SymplecticMap::IDENTITY.0);
    if budget < 1 {
        return Err(Error::Budget { budget });
    }
    let mut head = 0;
    while head < elements.len() {
        let g = elements[head];
        head += 1;
        let cols = g.columns();
        for t in &tables {
            let mut code = 0u64;
            for (j, c) in cols.iter().enumerate() {
                code |= (t[c.code() as usize] as u64) << (6 * j);
            }
            if seen.insert(code) {
                if elements.len() == budget {
                    return Err(Error::Budget { budget });
                }
                elements.push(SymplecticMap(code));
            }
        }
    }
    Ok(Sp6Group { elements })
}

/// Prime factorization by trial division, ascending primes.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ActionKind {
    Vector,
    Theta,
    Steiner,
    Gopel,
    IsotropicPlane,
    NonisotropicPlane,
    Tetrad,
    Heptad,
}

impl ActionKind {
    pub fn name(self) -> &'static str {
        match self {
            ActionKind::Vector => "vector",
            ActionKind::Theta => "theta",
            ActionKind::Steiner => "steiner",
            ActionKind::Gopel => "gopel",
            ActionKind::IsotropicPlane => "isotropic_plane",
            ActionKind::NonisotropicPlane => "nonisotropic_plane",
            ActionKind::Tetrad => "tetrad",
            ActionKind::Heptad => "heptad",
        }
    }
}

/// A structure on which Sp(6, 2) acts. Steiner complexes are carried by
/// their key vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Structure {
    Vector(SymplecticVector),
    Theta(Theta),
    Steiner(SymplecticVector),
    Gopel(Subspace),
    IsotropicPlane(Subspace),
    NonisotropicPlane(Subspace),
    Tetrad(SyzygeticTetrad),
    Heptad(AronholdHeptad),
}

impl Structure {
    pub fn kind(&self) -> ActionKind {
        match self {
            Structure::Vector(_) => ActionKind::Vector,
            Structure::Theta(_) => ActionKind::Theta,
            Structure::Steiner(_) => ActionKind::Steiner,
            Structure::Gopel(_) => ActionKind::Gopel,
            Structure::IsotropicPlane(_) => ActionKind::IsotropicPlane,
            Structure::NonisotropicPlane(_) => ActionKind::NonisotropicPlane,
            Structure::Tetrad(_) => ActionKind::Tetrad,
            Structure::Heptad(_) => ActionKind::Heptad,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let ok = match self {
            Structure::Vector(_) | Structure::Theta(_) => true,
            Structure::Steiner(v) => !v.is_zero(),
            Structure::Gopel(s) => s.dim() == 3 && s.is_isotropic(),
            Structure::IsotropicPlane(s) => s.dim() == 2 && s.is_isotropic(),
            Structure::NonisotropicPlane(s) => s.dim() == 2 && !s.is_isotropic(),
            Structure::Tetrad(t) => SyzygeticTetrad::try_new(t.members()).is_ok(),
            Structure::Heptad(h) => AronholdHeptad::try_new(h.members()).is_ok(),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::domain(format!("invalid {} structure {:?}", self.kind().name(), self)))
        }
    }
}

/// Transports a theta along `g`: the image is the form `v -> θ(g⁻¹ v)`.
pub fn act_theta(g: SymplecticMap, theta: Theta) -> Theta {
    act_theta_with_inverse(g.inverse(), theta)
}

fn act_theta_with_inverse(g_inv: SymplecticMap, theta: Theta) -> Theta {
    // q0 vanishes on basis vectors, so the new shift is read off from the
    // values of the transported form on e1..e6.
    let mut coords = [0u8; 6];
    for k in 0..6 {
        coords[partner(k)] = theta.eval(g_inv.column(k));
    }
    Theta::new(SymplecticVector::from_coords(coords))
}

fn act_subspace(g: SymplecticMap, s: &Subspace) -> Subspace {
    Subspace::span(s.basis().iter().map(|&b| g.apply(b)))
}

fn act_unchecked(g: SymplecticMap, g_inv: SymplecticMap, s: &Structure) -> Structure {
    match s {
        Structure::Vector(v) => Structure::Vector(g.apply(*v)),
        Structure::Theta(t) => Structure::Theta(act_theta_with_inverse(g_inv, *t)),
        Structure::Steiner(v) => Structure::Steiner(g.apply(*v)),
        Structure::Gopel(p) => Structure::Gopel(act_subspace(g, p)),
        Structure::IsotropicPlane(p) => Structure::IsotropicPlane(act_subspace(g, p)),
        Structure::NonisotropicPlane(p) => Structure::NonisotropicPlane(act_subspace(g, p)),
        Structure::Tetrad(t) => Structure::Tetrad(
            SyzygeticTetrad::try_new(t.members().map(|m| act_theta_with_inverse(g_inv, m)))
                .expect("Sp(6,2) maps tetrads to tetrads"),
        ),
        Structure::Heptad(h) => Structure::Heptad(
            AronholdHeptad::try_new(h.members().map(|m| act_theta_with_inverse(g_inv, m)))
                .expect("Sp(6,2) maps heptads to heptads"),
        ),
    }
}

/// Image of a structure under `g`.
pub fn act(g: SymplecticMap, s: &Structure) -> Result<Structure> {
    s.validate()?;
    Ok(act_unchecked(g, g.inverse(), s))
}

/// Every structure of the same kind (and, for thetas, the same parity) as `rep`.
pub fn structure_set(rep: &Structure) -> Vec<Structure> {
    let mut out: Vec<Structure> = match rep {
        Structure::Vector(v) => {
            if v.is_zero() {
                vec![Structure::Vector(*v)]
            } else {
                SymplecticVector::nonzero().map(Structure::Vector).collect()
            }
        }
        Structure::Theta(t) => thetas_by_parity(t.arf()).into_iter().map(Structure::Theta).collect(),
        Structure::Steiner(_) => SymplecticVector::nonzero().map(Structure::Steiner).collect(),
        Structure::Gopel(_) => subspaces(3, true).expect("dim").into_iter().map(Structure::Gopel).collect(),
        Structure::IsotropicPlane(_) => subspaces(2, true)
            .expect("dim")
            .into_iter()
            .map(Structure::IsotropicPlane)
            .collect(),
        Structure::NonisotropicPlane(_) => subspaces(2, false)
            .expect("dim")
            .into_iter()
            .filter(|p| !p.is_isotropic())
            .map(Structure::NonisotropicPlane)
            .collect(),
        Structure::Tetrad(_) => syzygetic_tetrads().into_iter().map(Structure::Tetrad).collect(),
        Structure::Heptad(_) => aronhold_heptads().into_iter().map(Structure::Heptad).collect(),
    };
    out.sort();
    out
}

/// Orbit of `rep` under the transvections, in breadth-first order.
pub fn orbit(rep: &Structure) -> Result<Vec<Structure>> {
    rep.validate()?;
    let gens: Vec<(SymplecticMap, SymplecticMap)> =
        transvections().into_iter().map(|t| (t, t.inverse())).collect();
    let mut seen = std::collections::HashSet::new();
    let mut out = vec![rep.clone()];
    seen.insert(rep.clone());
    let mut head = 0;
    while head < out.len() {
        let s = out[head].clone();
        head += 1;
        for &(g, g_inv) in &gens {
            let img = act_unchecked(g, g_inv, &s);
            if seen.insert(img.clone()) {
                out.push(img);
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitReport {
    pub kind: String,
    pub orbit_size: u64,
    pub stabilizer_order: u64,
    pub table1_expected: Option<u64>,
    pub transitive: bool,
    pub pass: bool,
}

/// Orbit size and stabilizer order `group_order / orbit size`.
pub fn orbit_and_stabilizer_order(kind: ActionKind, rep: &Structure, group_order: u64) -> Result<(u64, u64)> {
    if rep.kind() != kind {
        return Err(Error::domain(format!(
            "structure of kind {} passed for action {}",
            rep.kind().name(),
            kind.name()
        )));
    }
    let size = orbit(rep)?.len() as u64;
    if group_order % size != 0 {
        return Err(Error::Invariant(format!(
            "orbit size {size} does not divide the group order {group_order}"
        )));
    }
    Ok((size, group_order / size))
}

/// Checks whether the orbit of `rep` is the full structure set.
pub fn is_transitive(rep: &Structure) -> Result<bool> {
    let mut o = orbit(rep)?;
    o.sort();
    Ok(o == structure_set(rep))
}

/// The seven actions whose structures are realized in the symplectic model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RealizedAction {
    Bitangent,
    Octad,
    Steiner,
    Gopel,
    Aronhold,
    Syzygetic,
    Azygetic,
}

impl RealizedAction {
    pub const ALL: [RealizedAction; 7] = [
        RealizedAction::Bitangent,
        RealizedAction::Octad,
        RealizedAction::Steiner,
        RealizedAction::Gopel,
        RealizedAction::Aronhold,
        RealizedAction::Syzygetic,
        RealizedAction::Azygetic,
    ];

    /// Structure tag shared with the stabilizer table and character data.
    pub fn structure(self) -> &'static str {
        match self {
            RealizedAction::Bitangent => "bitangent",
            RealizedAction::Octad => "octad",
            RealizedAction::Steiner => "steiner",
            RealizedAction::Gopel => "gopel",
            RealizedAction::Aronhold => "aronhold",
            RealizedAction::Syzygetic => "syzygetic",
            RealizedAction::Azygetic => "azygetic",
        }
    }

    pub fn kind(self) -> ActionKind {
        match self {
            RealizedAction::Bitangent | RealizedAction::Octad => ActionKind::Theta,
            RealizedAction::Steiner => ActionKind::Steiner,
            RealizedAction::Gopel => ActionKind::Gopel,
            RealizedAction::Aronhold => ActionKind::Heptad,
            RealizedAction::Syzygetic => ActionKind::IsotropicPlane,
            RealizedAction::Azygetic => ActionKind::NonisotropicPlane,
        }
    }

    /// The smallest structure of the kind, used as orbit seed.
    pub fn representative(self) -> Structure {
        let seed = match self {
            RealizedAction::Bitangent => Structure::Theta(Theta::new(SymplecticVector::basis(1) + SymplecticVector::basis(4))),
            RealizedAction::Octad => Structure::Theta(Theta::ZERO),
            RealizedAction::Steiner => Structure::Steiner(SymplecticVector::basis(1)),
            RealizedAction::Gopel => Structure::Gopel(Subspace::span([])),
            RealizedAction::Aronhold => Structure::Heptad(aronhold_heptads()[0]),
            RealizedAction::Syzygetic => Structure::IsotropicPlane(Subspace::span([])),
            RealizedAction::Azygetic => Structure::NonisotropicPlane(Subspace::span([])),
        };
        structure_set(&seed)
            .into_iter()
            .next()
            .expect("nonempty structure set")
    }

    pub fn expected(self) -> StabilizerRow {
        stabilizer_row(self.structure()).expect("row present")
    }
}

impl fmt::Display for RealizedAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.structure())
    }
}

/// Orbit report for one realized action against a known group order.
pub fn orbit_report(action: RealizedAction, group_order: u64) -> Result<OrbitReport> {
    let rep = action.representative();
    let (size, stab) = orbit_and_stabilizer_order(action.kind(), &rep, group_order)?;
    let transitive = is_transitive(&rep)?;
    let expected = action.expected();
    Ok(OrbitReport {
        kind: action.structure().to_string(),
        orbit_size: size,
        stabilizer_order: stab,
        table1_expected: Some(expected.stabilizer_order),
        transitive,
        pass: transitive && size == expected.count && stab == expected.stabilizer_order,
    })
}

/// Number of orbits on ordered pairs of the orbit of `rep` (diagonal included).
pub fn pair_rank(rep: &Structure) -> Result<usize> {
    if !is_transitive(rep)? {
        return Err(Error::Precondition(format!(
            "action on {} structures is not transitive",
            rep.kind().name()
        )));
    }
    let points = structure_set(rep);
    let n = points.len();
    let index: HashMap<&Structure, usize> = points.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let perms: Vec<Vec<u32>> = transvections()
        .into_iter()
        .map(|g| {
            let g_inv = g.inverse();
            points
                .iter()
                .map(|s| index[&act_unchecked(g, g_inv, s)] as u32)
                .collect()
        })
        .collect();

    let mut visited = vec![0u64; (n * n).div_ceil(64)];
    let test_and_set = |visited: &mut Vec<u64>, k: usize| {
        let (w, b) = (k / 64, k % 64);
        let was = visited[w] >> b & 1 == 1;
        visited[w] |= 1 << b;
        was
    };
    let mut rank = 0;
    let mut queue = VecDeque::new();
    for start in 0..n * n {
        if test_and_set(&mut visited, start) {
            continue;
        }
        rank += 1;
        queue.push_back(start);
        while let Some(k) = queue.pop_front() {
            let (a, b) = (k / n, k % n);
            for p in &perms {
                let img = p[a] as usize * n + p[b] as usize;
                if !test_and_set(&mut visited, img) {
                    queue.push_back(img);
                }
            }
        }
    }
    Ok(rank)
}

/// Expected pair ranks: the number of constituents of each permutation character.
pub fn expected_pair_rank(action: RealizedAction) -> usize {
    match action {
        RealizedAction::Bitangent | RealizedAction::Octad => 2,
        RealizedAction::Steiner => 3,
        RealizedAction::Gopel => 4,
        RealizedAction::Aronhold | RealizedAction::Syzygetic | RealizedAction::Azygetic => 5,
    }
}
