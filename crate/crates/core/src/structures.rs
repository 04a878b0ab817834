//! The classical structures on the 28 bitangents, realized inside the
//! symplectic model: Steiner complexes, syzygetic tetrads, Göpel subsets,
//! azygetic triads of Steiner complexes and Aronhold heptads, together with
//! the bijections between them.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::f2::{pairing, subspaces, Subspace, SymplecticVector, Theta};

/// Anything that serializes as a sorted tuple of integer codes.
pub trait CodeTuple {
    fn codes(&self) -> Vec<u8>;
}

impl CodeTuple for Theta {
    fn codes(&self) -> Vec<u8> {
        vec![self.code()]
    }
}

/// Odd (`parity = 1`) or even (`parity = 0`) thetas in ascending code order.
pub fn thetas_by_parity(parity: u8) -> Vec<Theta> {
    Theta::all().filter(|t| t.arf() == parity & 1).collect()
}

pub fn odd_thetas() -> Vec<Theta> {
    thetas_by_parity(1)
}

pub fn even_thetas() -> Vec<Theta> {
    thetas_by_parity(0)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SteinerComplex {
    key: SymplecticVector,
    members: Vec<Theta>,
    pairs: Vec<(Theta, Theta)>,
}

impl SteinerComplex {
    pub fn key(&self) -> SymplecticVector {
        self.key
    }

    /// The 12 member thetas, ascending.
    pub fn members(&self) -> &[Theta] {
        &self.members
    }

    /// The 6 pairs `{θ, θ + key}`, each written with the smaller code first.
    pub fn pairs(&self) -> &[(Theta, Theta)] {
        &self.pairs
    }
}

impl CodeTuple for SteinerComplex {
    fn codes(&self) -> Vec<u8> {
        self.members.iter().map(|t| t.code()).collect()
    }
}

/// The Steiner complex `{θ odd : θ(v) = 0}` of a nonzero vector.
pub fn steiner_complex(v: SymplecticVector) -> Result<SteinerComplex> {
    if v.is_zero() {
        return Err(Error::domain("Steiner complex of the zero vector"));
    }
    let members: Vec<Theta> = odd_thetas().into_iter().filter(|t| t.eval(v) == 0).collect();
    let pairs = members
        .iter()
        .filter(|t| t.code() < t.translate(v).code())
        .map(|&t| (t, t.translate(v)))
        .collect();
    Ok(SteinerComplex {
        key: v,
        members,
        pairs,
    })
}

/// Union of the fiber over `v` of the map sending a pair of distinct odd
/// thetas to the difference of their shifts.
pub fn steiner_fiber_union(v: SymplecticVector) -> Vec<Theta> {
    let odd = odd_thetas();
    let mut out = Vec::new();
    for (i, a) in odd.iter().enumerate() {
        for b in &odd[i + 1..] {
            if a.shift() + b.shift() == v {
                out.push(*a);
                out.push(*b);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// All 63 Steiner complexes, ordered by key.
pub fn steiner_complexes() -> Vec<SteinerComplex> {
    SymplecticVector::nonzero()
        .map(|v| steiner_complex(v).expect("nonzero key"))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TriadType {
    Syzygetic,
    Azygetic,
}

/// Classifies a triple of distinct odd thetas by the Arf sum
/// `Arf(θ1) + Arf(θ2) + Arf(θ3) + Arf(θ1 + θ2 + θ3)`.
pub fn triad_type(a: Theta, b: Theta, c: Theta) -> Result<TriadType> {
    if !(a.is_odd() && b.is_odd() && c.is_odd()) {
        return Err(Error::domain("triad members must be odd thetas"));
    }
    if a == b || b == c || a == c {
        return Err(Error::domain("triad members must be pairwise distinct"));
    }
    let sum = a.arf() ^ b.arf() ^ c.arf() ^ Theta::sum3(a, b, c).arf();
    Ok(if sum == 1 {
        TriadType::Azygetic
    } else {
        TriadType::Syzygetic
    })
}

/// Pairs of Steiner complexes are syzygetic when their keys pair to zero.
pub fn steiner_pair_type(u: SymplecticVector, v: SymplecticVector) -> TriadType {
    if pairing(u, v) == 0 {
        TriadType::Syzygetic
    } else {
        TriadType::Azygetic
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SyzygeticTetrad {
    members: [Theta; 4],
}

impl SyzygeticTetrad {
    pub fn try_new(mut members: [Theta; 4]) -> Result<Self> {
        members.sort();
        if members.iter().any(|t| !t.is_odd()) {
            return Err(Error::domain("tetrad members must be odd thetas"));
        }
        if members.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::domain("tetrad members must be distinct"));
        }
        let sum: SymplecticVector = members.iter().map(|t| t.shift()).sum();
        if !sum.is_zero() {
            return Err(Error::domain("tetrad members must sum to zero"));
        }
        Ok(SyzygeticTetrad { members })
    }

    pub fn members(&self) -> [Theta; 4] {
        self.members
    }
}

impl CodeTuple for SyzygeticTetrad {
    fn codes(&self) -> Vec<u8> {
        self.members.iter().map(|t| t.code()).collect()
    }
}

/// All 315 syzygetic tetrads: zero-sum 4-subsets of odd thetas.
pub fn syzygetic_tetrads() -> Vec<SyzygeticTetrad> {
    let odd = odd_thetas();
    let n = odd.len();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let fourth = Theta::sum3(odd[a], odd[b], odd[c]);
                if fourth.is_odd() && fourth > odd[c] {
                    out.push(SyzygeticTetrad {
                        members: [odd[a], odd[b], odd[c], fourth],
                    });
                }
            }
        }
    }
    out.sort();
    out
}

/// The plane of shift differences `{θ_i - θ_base}`.
pub fn tetrad_to_plane_from(t: &SyzygeticTetrad, base: usize) -> Subspace {
    let b = t.members[base].shift();
    Subspace::span(t.members.iter().map(|m| m.shift() + b))
}

pub fn tetrad_to_plane(t: &SyzygeticTetrad) -> Subspace {
    tetrad_to_plane_from(t, 0)
}

/// Inverse of [`tetrad_to_plane`]: the odd thetas vanishing on the plane.
pub fn plane_to_tetrad(plane: &Subspace) -> Result<SyzygeticTetrad> {
    if plane.dim() != 2 {
        return Err(Error::domain(format!(
            "expected a plane, got a subspace of dimension {}",
            plane.dim()
        )));
    }
    if !plane.is_isotropic() {
        return Err(Error::domain("plane is not isotropic"));
    }
    let members: Vec<Theta> = odd_thetas()
        .into_iter()
        .filter(|t| plane.elements().all(|v| t.eval(v) == 0))
        .collect();
    let members: [Theta; 4] = members.try_into().map_err(|m: Vec<Theta>| {
        Error::Invariant(format!(
            "{} odd thetas vanish on {:?}, expected 4",
            m.len(),
            plane
        ))
    })?;
    SyzygeticTetrad::try_new(members).map_err(|e| Error::Invariant(e.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GopelSubset {
    subspace: Subspace,
    points: [SymplecticVector; 7],
}

impl GopelSubset {
    pub fn try_new(subspace: Subspace) -> Result<Self> {
        if subspace.dim() != 3 || !subspace.is_isotropic() {
            return Err(Error::domain("Göpel subspace must be isotropic of dimension 3"));
        }
        let points: Vec<_> = subspace.nonzero_elements().collect();
        Ok(GopelSubset {
            points: points.try_into().expect("7 nonzero vectors"),
            subspace,
        })
    }

    pub fn subspace(&self) -> &Subspace {
        &self.subspace
    }

    pub fn points(&self) -> [SymplecticVector; 7] {
        self.points
    }
}

impl CodeTuple for GopelSubset {
    fn codes(&self) -> Vec<u8> {
        self.points.iter().map(|v| v.code()).collect()
    }
}

fn sort_by_codes<T: CodeTuple>(items: &mut [T]) {
    items.sort_by_key(|a| a.codes());
}

/// All 135 Göpel subsets, ordered by their 7-tuple of codes.
pub fn gopel_subsets() -> Vec<GopelSubset> {
    let mut out: Vec<_> = subspaces(3, true)
        .expect("valid dimension")
        .into_iter()
        .map(|s| GopelSubset::try_new(s).expect("isotropic of dimension 3"))
        .collect();
    sort_by_codes(&mut out);
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AzygeticTriad {
    plane: Subspace,
    complexes: [SteinerComplex; 3],
}

impl AzygeticTriad {
    pub fn try_new(plane: Subspace) -> Result<Self> {
        if plane.dim() != 2 || plane.is_isotropic() {
            return Err(Error::domain("azygetic triad needs a non-isotropic plane"));
        }
        let complexes: Vec<_> = plane
            .nonzero_elements()
            .map(|v| steiner_complex(v).expect("nonzero key"))
            .collect();
        Ok(AzygeticTriad {
            complexes: complexes.try_into().expect("3 nonzero vectors"),
            plane,
        })
    }

    pub fn plane(&self) -> &Subspace {
        &self.plane
    }

    pub fn complexes(&self) -> &[SteinerComplex; 3] {
        &self.complexes
    }

    pub fn keys(&self) -> [SymplecticVector; 3] {
        std::array::from_fn(|i| self.complexes[i].key())
    }
}

impl CodeTuple for AzygeticTriad {
    fn codes(&self) -> Vec<u8> {
        self.keys().iter().map(|v| v.code()).collect()
    }
}

/// All 336 azygetic triads of Steiner complexes (non-isotropic planes).
pub fn azygetic_triads() -> Vec<AzygeticTriad> {
    let mut out: Vec<_> = subspaces(2, false)
        .expect("valid dimension")
        .into_iter()
        .filter(|p| !p.is_isotropic())
        .map(|p| AzygeticTriad::try_new(p).expect("non-isotropic plane"))
        .collect();
    sort_by_codes(&mut out);
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AronholdHeptad {
    members: [Theta; 7],
}

impl AronholdHeptad {
    /// Validates that the seven thetas are odd, distinct, and every triple
    /// sums to an even theta.
    pub fn try_new(mut members: [Theta; 7]) -> Result<Self> {
        members.sort();
        if members.iter().any(|t| !t.is_odd()) {
            return Err(Error::domain("heptad members must be odd thetas"));
        }
        if members.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::domain("heptad members must be distinct"));
        }
        for a in 0..7 {
            for b in a + 1..7 {
                for c in b + 1..7 {
                    if Theta::sum3(members[a], members[b], members[c]).is_odd() {
                        return Err(Error::domain(format!(
                            "triple {:?} sums to an odd theta",
                            (members[a], members[b], members[c])
                        )));
                    }
                }
            }
        }
        Ok(AronholdHeptad { members })
    }

    pub fn members(&self) -> [Theta; 7] {
        self.members
    }
}

impl CodeTuple for AronholdHeptad {
    fn codes(&self) -> Vec<u8> {
        self.members.iter().map(|t| t.code()).collect()
    }
}

/// All 288 Aronhold heptads, by depth-first extension over the odd thetas
/// with the triple-sum test applied as each member is added.
pub fn aronhold_heptads() -> Vec<AronholdHeptad> {
    fn extend(odd: &[Theta], start: usize, chosen: &mut Vec<Theta>, out: &mut Vec<AronholdHeptad>) {
        if chosen.len() == 7 {
            out.push(AronholdHeptad {
                members: chosen.as_slice().try_into().expect("7 members"),
            });
            return;
        }
        for i in start..odd.len() {
            if odd.len() - i < 7 - chosen.len() {
                break;
            }
            let cand = odd[i];
            let ok = chosen.iter().enumerate().all(|(a, &x)| {
                chosen[a + 1..]
                    .iter()
                    .all(|&y| !Theta::sum3(x, y, cand).is_odd())
            });
            if ok {
                chosen.push(cand);
                extend(odd, i + 1, chosen, out);
                chosen.pop();
            }
        }
    }

    let odd = odd_thetas();
    let mut out = Vec::new();
    extend(&odd, 0, &mut Vec::with_capacity(7), &mut out);
    out
}

/// The even theta `θ1 + ... + θ7` attached to a heptad.
pub fn heptad_even_theta(h: &AronholdHeptad) -> Theta {
    Theta::new(h.members.iter().map(|t| t.shift()).sum())
}

/// A labelling of the 28 odd thetas by duads `{i, j}` of `{1, ..., 8}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OctadLabeling {
    even: Theta,
    labels: BTreeMap<(u8, u8), Theta>,
}

impl OctadLabeling {
    pub fn even_theta(&self) -> Theta {
        self.even
    }

    /// The theta labelled by `{i, j}`; order of `i` and `j` is irrelevant.
    pub fn get(&self, i: u8, j: u8) -> Option<Theta> {
        let key = if i < j { (i, j) } else { (j, i) };
        self.labels.get(&key).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = ((u8, u8), Theta)> + '_ {
        self.labels.iter().map(|(k, v)| (*k, *v))
    }
}

/// Labels `{i, 8} -> θ_i` and `{i, j} -> θ0 + θ_i + θ_j` for `i < j <= 7`,
/// where `θ0` is the heptad's even theta and members are taken in
/// ascending order.
pub fn octad_labeling(h: &AronholdHeptad) -> Result<OctadLabeling> {
    let even = heptad_even_theta(h);
    let m = h.members;
    let mut labels = BTreeMap::new();
    for i in 0..7u8 {
        labels.insert((i + 1, 8), m[i as usize]);
        for j in i + 1..7 {
            labels.insert((i + 1, j + 1), Theta::sum3(even, m[i as usize], m[j as usize]));
        }
    }
    let mut image: Vec<Theta> = labels.values().copied().collect();
    image.sort();
    if image != odd_thetas() {
        return Err(Error::Invariant(format!(
            "duad labelling of {:?} is not a bijection onto the odd thetas",
            h
        )));
    }
    Ok(OctadLabeling { even, labels })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{BTreeMap, BTreeSet};

    #[test]
    fn parity_lists() {
        let odd = odd_thetas();
        let even = even_thetas();
        assert_eq!(odd.len(), 28);
        assert_eq!(even.len(), 36);
        let all: BTreeSet<_> = odd.iter().chain(&even).collect();
        assert_eq!(all.len(), 64);
        assert!(odd.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn steiner_complexes_have_twelve_members_in_six_pairs() {
        for v in SymplecticVector::nonzero() {
            let s = steiner_complex(v).unwrap();
            assert_eq!(s.members().len(), 12);
            assert_eq!(s.pairs().len(), 6);
            let mut covered: Vec<Theta> = s.pairs().iter().flat_map(|&(a, b)| [a, b]).collect();
            covered.sort();
            assert_eq!(covered, s.members());
            for &(a, b) in s.pairs() {
                assert_eq!(a.translate(v), b);
            }
            assert_eq!(steiner_fiber_union(v), s.members());
        }
        assert!(steiner_complex(SymplecticVector::ZERO).is_err());
    }

    #[test]
    fn each_odd_theta_lies_in_27_complexes() {
        let complexes = steiner_complexes();
        for t in odd_thetas() {
            let n = complexes.iter().filter(|s| s.members().contains(&t)).count();
            assert_eq!(n, 27);
        }
    }

    #[test]
    fn steiner_pair_intersections_depend_only_on_pairing() {
        let complexes = steiner_complexes();
        let mut sizes: BTreeMap<u8, BTreeSet<usize>> = BTreeMap::new();
        let (mut syz, mut azy) = (0, 0);
        for (i, a) in complexes.iter().enumerate() {
            for b in &complexes[i + 1..] {
                let common = a.members().iter().filter(|t| b.members().contains(t)).count();
                sizes.entry(pairing(a.key(), b.key())).or_default().insert(common);
                match steiner_pair_type(a.key(), b.key()) {
                    TriadType::Syzygetic => syz += 1,
                    TriadType::Azygetic => azy += 1,
                }
            }
        }
        assert_eq!(syz + azy, 63 * 62 / 2);
        // syzygetic pairs share 4 bitangents, azygetic pairs share 6
        assert_eq!(sizes[&0], BTreeSet::from([4]));
        assert_eq!(sizes[&1], BTreeSet::from([6]));
        assert_eq!((syz, azy), (945, 1008));
    }

    #[test]
    fn triad_census() {
        let odd = odd_thetas();
        let mut syz = 0;
        let mut azy = 0;
        for a in 0..28 {
            for b in a + 1..28 {
                for c in b + 1..28 {
                    match triad_type(odd[a], odd[b], odd[c]).unwrap() {
                        TriadType::Syzygetic => syz += 1,
                        TriadType::Azygetic => azy += 1,
                    }
                }
            }
        }
        assert_eq!(syz, 1260);
        assert_eq!(azy, 3276 - 1260);
    }

    #[test]
    fn triad_type_rejects_bad_input() {
        let odd = odd_thetas();
        assert!(triad_type(odd[0], odd[0], odd[1]).is_err());
        assert!(triad_type(Theta::ZERO, odd[0], odd[1]).is_err());
    }

    #[test]
    fn syzygetic_triad_sums_to_odd() {
        let odd = odd_thetas();
        for a in 0..28 {
            for b in a + 1..28 {
                for c in b + 1..28 {
                    if triad_type(odd[a], odd[b], odd[c]).unwrap() == TriadType::Syzygetic {
                        assert!(Theta::sum3(odd[a], odd[b], odd[c]).is_odd());
                    }
                }
            }
        }
    }

    #[test]
    fn tetrads_and_planes_correspond() {
        let tetrads = syzygetic_tetrads();
        assert_eq!(tetrads.len(), 315);
        let mut planes = BTreeSet::new();
        for t in &tetrads {
            let m = t.members();
            for i in 0..4 {
                for j in i + 1..4 {
                    for k in j + 1..4 {
                        assert_eq!(triad_type(m[i], m[j], m[k]).unwrap(), TriadType::Syzygetic);
                    }
                }
            }
            let plane = tetrad_to_plane(t);
            assert!(plane.is_isotropic());
            assert_eq!(plane.dim(), 2);
            for base in 1..4 {
                assert_eq!(tetrad_to_plane_from(t, base), plane);
            }
            assert_eq!(plane_to_tetrad(&plane).unwrap(), *t);
            planes.insert(plane);
        }
        let iso = subspaces(2, true).unwrap();
        assert_eq!(planes.len(), 315);
        for p in &iso {
            assert_eq!(tetrad_to_plane(&plane_to_tetrad(p).unwrap()), *p);
        }
    }

    #[test]
    fn plane_to_tetrad_rejects_bad_planes() {
        let e = SymplecticVector::basis;
        assert!(plane_to_tetrad(&Subspace::span([e(1), e(4)])).is_err());
        assert!(plane_to_tetrad(&Subspace::span([e(1)])).is_err());
    }

    #[test]
    fn gopel_subsets_are_fano_planes() {
        let g = gopel_subsets();
        assert_eq!(g.len(), 135);
        for s in &g {
            let pts = s.points();
            for a in pts {
                for b in pts {
                    if a != b {
                        assert!(pts.contains(&(a + b)));
                    }
                    assert_eq!(pairing(a, b), 0);
                }
            }
        }
        for (i, a) in g.iter().enumerate() {
            for b in &g[i + 1..] {
                assert!(a.subspace().intersection_dim(b.subspace()) <= 2);
            }
        }
    }

    #[test]
    fn azygetic_triads_census() {
        let t = azygetic_triads();
        assert_eq!(t.len(), 336);
        let mut bases = 0;
        for u in SymplecticVector::nonzero() {
            for v in SymplecticVector::nonzero() {
                if pairing(u, v) == 1 {
                    bases += 1;
                }
            }
        }
        assert_eq!(bases, 2016);
        assert_eq!(bases, 336 * 6);
        for tri in &t {
            let k = tri.keys();
            assert_eq!(pairing(k[0], k[1]), 1);
            assert_eq!(pairing(k[1], k[2]), 1);
            assert_eq!(pairing(k[0], k[2]), 1);
            assert_eq!(k[0] + k[1], k[2]);
        }
    }

    #[test]
    fn heptads_enumerate_and_fiber() {
        let heptads = aronhold_heptads();
        assert_eq!(heptads.len(), 288);
        let mut fibers: BTreeMap<Theta, usize> = BTreeMap::new();
        for h in &heptads {
            assert_eq!(AronholdHeptad::try_new(h.members()).unwrap(), *h);
            let m = h.members();
            for a in 0..7 {
                for b in a + 1..7 {
                    for c in b + 1..7 {
                        assert_eq!(triad_type(m[a], m[b], m[c]).unwrap(), TriadType::Azygetic);
                    }
                }
            }
            let even = heptad_even_theta(h);
            assert!(!even.is_odd());
            *fibers.entry(even).or_default() += 1;
        }
        assert_eq!(fibers.len(), 36);
        assert!(fibers.values().all(|&n| n == 8));
    }

    #[test]
    fn heptad_even_theta_is_unique_completion() {
        for h in aronhold_heptads() {
            let m = h.members();
            let candidates: Vec<Theta> = even_thetas()
                .into_iter()
                .filter(|&e| {
                    (0..7).all(|i| (i + 1..7).all(|j| Theta::sum3(e, m[i], m[j]).is_odd()))
                })
                .collect();
            assert_eq!(candidates, vec![heptad_even_theta(&h)]);
        }
    }

    #[test]
    fn brute_force_heptad_filter_agrees() {
        // Oracle: every 7-subset of the 28 odd thetas containing the first
        // odd theta, filtered by the definition alone.
        let odd = odd_thetas();
        let first = odd[0];
        let mut count = 0;
        let rest = &odd[1..];
        let n = rest.len();
        let mut idx = [0usize, 1, 2, 3, 4, 5];
        loop {
            let mut m = [first; 7];
            for (k, &i) in idx.iter().enumerate() {
                m[k + 1] = rest[i];
            }
            if AronholdHeptad::try_new(m).is_ok() {
                count += 1;
            }
            // next combination
            let mut k = 6;
            while k > 0 && idx[k - 1] == n - 6 + k - 1 {
                k -= 1;
            }
            if k == 0 {
                break;
            }
            idx[k - 1] += 1;
            for l in k..6 {
                idx[l] = idx[l - 1] + 1;
            }
        }
        let fast = aronhold_heptads()
            .iter()
            .filter(|h| h.members().contains(&first))
            .count();
        assert_eq!(count, fast);
    }

    #[test]
    fn octad_labeling_is_bijective() {
        for h in aronhold_heptads() {
            let lab = octad_labeling(&h).unwrap();
            let image: BTreeSet<Theta> = lab.iter().map(|(_, t)| t).collect();
            assert_eq!(image.len(), 28);
            assert!(image.iter().all(|t| t.is_odd()));
            assert_eq!(lab.get(8, 3), Some(h.members()[2]));
        }
    }

    #[test]
    fn triangles_of_duads_are_azygetic() {
        for h in aronhold_heptads() {
            let lab = octad_labeling(&h).unwrap();
            for i in 1..=8u8 {
                for j in i + 1..=8 {
                    for k in j + 1..=8 {
                        let t = triad_type(
                            lab.get(i, j).unwrap(),
                            lab.get(j, k).unwrap(),
                            lab.get(i, k).unwrap(),
                        )
                        .unwrap();
                        assert_eq!(t, TriadType::Azygetic);
                    }
                }
            }
        }
    }

    #[test]
    fn invalid_heptad_is_rejected() {
        let odd = odd_thetas();
        let m: [Theta; 7] = odd[..7].try_into().unwrap();
        // the first seven odd thetas by code do not form a heptad
        assert!(AronholdHeptad::try_new(m).is_err());
    }
}
