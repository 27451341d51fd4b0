//! Generating sets, GF(2) rank, cosets and commutativity maps.
//!
//! Elements are treated as rows of the `2n`-bit symplectic vector space.
//! Independence, rank and coset membership all reduce to Gaussian
//! elimination over GF(2).

use std::collections::BTreeMap;

use rand::Rng;

use crate::budget::{self, Budget};
use crate::error::{Error, Result};
use crate::pauli::{Pauli, PauliSet, Sign};

/// Reduced row echelon basis of a subgroup.
///
/// Every stored row owns a pivot bit (its lowest set bit at insertion
/// time) that is clear in all other rows, so reducing a vector against
/// the basis yields a canonical coset representative.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    n: usize,
    rows: Vec<(usize, Vec<u64>)>,
}

fn lowest_set_bit(row: &[u64]) -> Option<usize> {
    row.iter().enumerate().find(|(_, w)| **w != 0).map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
}

fn bit_is_set(row: &[u64], bit: usize) -> bool {
    (row[bit / 64] >> (bit % 64)) & 1 == 1
}

fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (a, b) in dst.iter_mut().zip(src) {
        *a ^= b;
    }
}

impl EchelonBasis {
    pub fn new(n: usize) -> EchelonBasis {
        EchelonBasis { n, rows: Vec::new() }
    }

    pub fn from_set(s: &PauliSet) -> EchelonBasis {
        let mut basis = EchelonBasis::new(s.n());
        for p in s {
            basis.insert(p);
        }
        basis
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce_row(&self, row: &mut [u64]) {
        for (pivot, r) in &self.rows {
            if bit_is_set(row, *pivot) {
                xor_into(row, r);
            }
        }
    }

    /// Adds `p` to the span; returns `false` if it was already in it.
    pub fn insert(&mut self, p: &Pauli) -> bool {
        assert_eq!(p.n(), self.n, "dimension mismatch");
        let mut row = p.symplectic_row();
        self.reduce_row(&mut row);
        let Some(pivot) = lowest_set_bit(&row) else {
            return false;
        };
        for (_, r) in &mut self.rows {
            if bit_is_set(r, pivot) {
                xor_into(r, &row);
            }
        }
        self.rows.push((pivot, row));
        true
    }

    pub fn contains(&self, p: &Pauli) -> bool {
        self.coset_representative(p).is_identity()
    }

    /// Canonical representative of the coset `p ∗ ⟨basis⟩`.
    pub fn coset_representative(&self, p: &Pauli) -> Pauli {
        assert_eq!(p.n(), self.n, "dimension mismatch");
        let mut row = p.symplectic_row();
        self.reduce_row(&mut row);
        Pauli::from_symplectic_row(self.n, &row)
    }
}

/// GF(2) rank of the symplectic rows of `g`.
pub fn rank(g: &PauliSet) -> usize {
    EchelonBasis::from_set(g).rank()
}

/// True iff `g = {I}`, or `I ∉ g` and the elements are independent.
pub fn is_minimal_generating(g: &PauliSet) -> bool {
    if g.len() == 1 && g.elements()[0].is_identity() {
        return true;
    }
    g.iter().all(|p| !p.is_identity()) && rank(g) == g.len()
}

/// Minimal generating set of `⟨s⟩`, chosen greedily in the order of `s`.
/// Returns `{I}` when `⟨s⟩` is trivial.
pub fn minimal_generating_set(s: &PauliSet) -> PauliSet {
    let mut basis = EchelonBasis::new(s.n());
    let kept: Vec<Pauli> = s.iter().filter(|p| basis.insert(p)).cloned().collect();
    if kept.is_empty() {
        PauliSet::from_vec_unchecked(s.n(), vec![Pauli::identity(s.n())])
    } else {
        PauliSet::from_vec_unchecked(s.n(), kept)
    }
}

/// `⟨G⟩` described by a minimal generating set and its rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratedSubgroup {
    generators: PauliSet,
    rank: usize,
}

impl GeneratedSubgroup {
    pub fn new(g: &PauliSet) -> GeneratedSubgroup {
        let generators = minimal_generating_set(g);
        let rank = rank(&generators);
        GeneratedSubgroup { generators, rank }
    }

    pub fn generators(&self) -> &PauliSet {
        &self.generators
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Subgroup order `2^rank`.
    pub fn order_log2(&self) -> usize {
        self.rank
    }

    pub fn contains(&self, p: &Pauli) -> bool {
        EchelonBasis::from_set(&self.generators).contains(p)
    }

    /// All `2^rank` subset products; the identity comes first.
    pub fn elements(&self, budget: &Budget) -> Result<PauliSet> {
        budget::check("subgroup rank", self.rank, budget.generated_rank)?;
        let n = self.generators.n();
        let gens: Vec<&Pauli> = self.generators.iter().filter(|p| !p.is_identity()).collect();
        let mut out = Vec::with_capacity(1 << gens.len());
        out.push(Pauli::identity(n));
        // Doubling: each generator multiplies everything produced so far.
        for g in gens {
            let current = out.len();
            for k in 0..current {
                let mut p = out[k].clone();
                p.mul_assign(g);
                out.push(p);
            }
        }
        Ok(PauliSet::from_vec_unchecked(n, out))
    }
}

/// `⟨g⟩` materialized; capacity error when the rank exceeds the budget.
pub fn generated_set(g: &PauliSet, budget: &Budget) -> Result<PauliSet> {
    GeneratedSubgroup::new(g).elements(budget)
}

/// The sign pattern of one element against an ordered base set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutativityMap {
    base: PauliSet,
    signs: Vec<Sign>,
}

impl CommutativityMap {
    pub fn new(base: PauliSet, signs: Vec<Sign>) -> Result<CommutativityMap> {
        if signs.len() != base.len() {
            return Err(Error::argument(format!("{} signs for a base of {} elements", signs.len(), base.len())));
        }
        Ok(CommutativityMap { base, signs })
    }

    pub fn all_commuting(base: PauliSet) -> CommutativityMap {
        let signs = vec![Sign::Plus; base.len()];
        CommutativityMap { base, signs }
    }

    pub fn all_anticommuting(base: PauliSet) -> CommutativityMap {
        let signs = vec![Sign::Minus; base.len()];
        CommutativityMap { base, signs }
    }

    pub fn base(&self) -> &PauliSet {
        &self.base
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    /// Number of `+1` entries.
    pub fn f_value(&self) -> usize {
        self.signs.iter().filter(|s| s.is_plus()).count()
    }

    /// Bit `k` set iff entry `k` is `-1`. Requires at most 64 entries.
    pub fn mask(&self) -> u64 {
        assert!(self.signs.len() <= 64, "pattern too long for a u64 mask");
        self.signs.iter().enumerate().filter(|(_, s)| !s.is_plus()).fold(0, |acc, (k, _)| acc | (1 << k))
    }

    pub fn is_all_commuting(&self) -> bool {
        self.signs.iter().all(|s| s.is_plus())
    }

    pub fn is_all_anticommuting(&self) -> bool {
        self.signs.iter().all(|s| !s.is_plus())
    }
}

/// `Z_P|H`: the commutation sign of `p` against each element of `h`.
pub fn commutativity_map(p: &Pauli, h: &PauliSet) -> Result<CommutativityMap> {
    if p.n() != h.n() {
        return Err(Error::Dimension { expected: h.n(), found: p.n() });
    }
    let signs = h.iter().map(|q| Sign::from_parity(!p.commutes_with(q))).collect();
    Ok(CommutativityMap { base: h.clone(), signs })
}

/// Counts how many of the `4^n` elements realize each sign pattern with
/// respect to a minimal generating set `g ≠ {I}`. Keys are
/// [`CommutativityMap::mask`] values.
pub fn map_census(g: &PauliSet, budget: &Budget) -> Result<BTreeMap<u64, u64>> {
    if g.len() == 1 && g.elements()[0].is_identity() {
        return Err(Error::argument("the census is undefined for {I}"));
    }
    if !is_minimal_generating(g) {
        return Err(Error::argument("map_census needs a minimal generating set"));
    }
    let n = g.n();
    budget::check("census n", n, budget.census_n)?;
    if n > 31 {
        return Err(Error::capacity("census needs 2n < 64"));
    }
    // Elements are enumerated as packed (x | z << n) integers.
    let low = (1u64 << n) - 1;
    let gens: Vec<(u64, u64)> = g.iter().map(|p| (p.x_words()[0], p.z_words()[0])).collect();
    let mut census = BTreeMap::new();
    for code in 0..(1u64 << (2 * n)) {
        let (x, z) = (code & low, code >> n);
        let mask = gens
            .iter()
            .enumerate()
            .filter(|(_, (gx, gz))| ((x & gz) ^ (z & gx)).count_ones() % 2 == 1)
            .fold(0u64, |acc, (k, _)| acc | (1 << k));
        *census.entry(mask).or_insert(0u64) += 1;
    }
    Ok(census)
}

/// Flips the entries of `v` per membership in `t` and the parity of `|t|`:
/// `v(x)·(-1)^{|t|-1}` for `x ∈ t`, `v(x)·(-1)^{|t|}` otherwise.
pub fn subset_flip(v: &CommutativityMap, t: &PauliSet) -> Result<CommutativityMap> {
    if !t.is_subset_of(&v.base) {
        return Err(Error::argument("flip set is not a subset of the map's base"));
    }
    let inside = Sign::power_of_minus_one(t.len() + 1);
    let outside = Sign::power_of_minus_one(t.len());
    let members = t.to_hash_set();
    let signs =
        v.base.iter().zip(&v.signs).map(|(x, &s)| s * if members.contains(x) { inside } else { outside }).collect();
    Ok(CommutativityMap { base: v.base.clone(), signs })
}

/// Element of the coset `p ∗ ⟨t⟩` anticommuting with every element of the
/// anticommuting minimal generating set `t`, or `None` when the coset has
/// the wrong parity (odd `|t|` and an odd number of elements of `t`
/// commuting with `p`).
///
/// Preconditions are not checked; see [`checked_coset_anticommuting_element`].
pub fn coset_anticommuting_element(t: &PauliSet, p: &Pauli) -> Option<Pauli> {
    debug_assert_eq!(t.n(), p.n());
    let commuting: Vec<bool> = t.iter().map(|x| p.commutes_with(x)).collect();
    let c = commuting.iter().filter(|&&b| b).count();
    let odd = t.len() % 2 == 1;
    if odd && c % 2 == 1 {
        return None;
    }
    // Multiply in either C or its complement.
    let take_commuting = (!odd && c % 2 == 0) || (odd && c <= t.len() / 2);
    let mut out = p.clone();
    for (x, &commutes) in t.iter().zip(&commuting) {
        if commutes == take_commuting {
            out.mul_assign(x);
        }
    }
    Some(out)
}

/// [`coset_anticommuting_element`] with its preconditions validated.
pub fn checked_coset_anticommuting_element(t: &PauliSet, p: &Pauli) -> Result<Option<Pauli>> {
    if t.n() != p.n() {
        return Err(Error::Dimension { expected: t.n(), found: p.n() });
    }
    if !t.is_pairwise_anticommuting() {
        return Err(Error::argument("generator set is not anticommuting"));
    }
    if !is_minimal_generating(t) || (t.len() == 1 && t.elements()[0].is_identity()) {
        return Err(Error::argument("generator set is not a minimal generating set"));
    }
    Ok(coset_anticommuting_element(t, p))
}

/// Uniformly random element outside `⟨s⟩`; `s` must not span everything.
pub fn random_outside<R: Rng + ?Sized>(basis: &EchelonBasis, rng: &mut R) -> Pauli {
    assert!(basis.rank() < 2 * basis.n(), "subgroup is the whole group");
    loop {
        let q = Pauli::random(basis.n(), rng);
        if !basis.contains(&q) {
            return q;
        }
    }
}
