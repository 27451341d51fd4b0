//! Anticommuting sets.
//!
//! An anticommuting set is maximal iff its elements multiply to the
//! identity, so maximality is a product test. Maximal sets always have odd
//! size at most `2n + 1`. This module classifies their first-factor
//! decompositions, builds sets of maximum size deterministically, shrinks
//! them three elements at a time, and grows arbitrary anticommuting minimal
//! generating sets to maximum size with a randomized coset search that
//! accepts each sample with probability at least one half.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::budget::{self, Budget};
use crate::commuting::{decompose, Decomposition};
use crate::error::{ensure, Error, Result};
use crate::group::{coset_anticommuting_element, is_minimal_generating, EchelonBasis};
use crate::pauli::{product_of_set, tensor_prefix, Label, Pauli, PauliSet};

/// Largest possible anticommuting set over `n` factors.
pub fn max_size(n: usize) -> usize {
    2 * n + 1
}

/// Pairwise anticommuting. Panics if an anticommuting set exceeds
/// `2n + 1` elements, which cannot happen for valid input.
pub fn is_anticommuting(s: &PauliSet) -> bool {
    let ok = s.is_pairwise_anticommuting();
    assert!(!ok || s.len() <= max_size(s.n()), "anticommuting set of {} elements over {} factors", s.len(), s.n());
    ok
}

/// An anticommuting set is maximal iff it is nonempty and its product is `I`.
pub fn is_maximally_anticommuting(s: &PauliSet) -> Result<bool> {
    if !is_anticommuting(s) {
        return Err(Error::argument("input is not anticommuting"));
    }
    Ok(!s.is_empty() && product_of_set(s).is_identity())
}

fn require_maximal(s: &PauliSet) -> Result<()> {
    if is_maximally_anticommuting(s)? {
        Ok(())
    } else {
        Err(Error::argument("input is not maximally anticommuting"))
    }
}

/// `s ∪ {∏s}` for an anticommuting set of even size at least two.
pub fn complete_even(s: &PauliSet) -> Result<PauliSet> {
    if s.len() < 2 || s.is_odd() {
        return Err(Error::argument(format!("expected an even size of at least 2, got {}", s.len())));
    }
    if !is_anticommuting(s) {
        return Err(Error::argument("input is not anticommuting"));
    }
    let mut out = s.clone();
    let q = product_of_set(s);
    ensure!(out.insert(q)?, "product of an even anticommuting set already present");
    Ok(out)
}

/// The five decomposition forms of a maximal anticommuting set, named by
/// which parts are nonempty.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AnticommutingCase {
    /// Only `C_i`.
    A,
    /// `C_i` and `C_u`.
    B,
    /// `C_i`, `C_u`, `C_v`.
    C,
    /// `C_u`, `C_v`, `C_w`.
    D,
    /// All four.
    E,
}

impl std::fmt::Display for AnticommutingCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let c = match self {
            AnticommutingCase::A => 'a',
            AnticommutingCase::B => 'b',
            AnticommutingCase::C => 'c',
            AnticommutingCase::D => 'd',
            AnticommutingCase::E => 'e',
        };
        write!(f, "{c}")
    }
}

/// Classification of a maximal anticommuting set.
#[derive(Clone, Debug)]
pub struct StructureCase {
    pub case: AnticommutingCase,
    pub decomposition: Decomposition,
    /// `(|C_i|, |C_u|, |C_v|, |C_w|)`.
    pub sizes: [usize; 4],
    /// Pairs among `u, v, w` whose parts intersect. Only singleton parts can.
    pub singleton_overlaps: Vec<(Label, Label)>,
}

impl StructureCase {
    /// `true` for odd part sizes, in `(i, u, v, w)` order.
    pub fn parities(&self) -> [bool; 4] {
        self.sizes.map(|s| s % 2 == 1)
    }
}

/// Decomposes a maximal anticommuting set with `n ≥ 2` and determines which
/// of the five forms it takes, checking the parity, commutation and
/// disjointness constraints of that form.
pub fn classify_structure(s: &PauliSet) -> Result<StructureCase> {
    require_maximal(s)?;
    let d = decompose(s).map_err(|_| Error::argument("classification needs at least two factors"))?;
    let n = s.n();
    let (c_i, parts) = (&d.c_i, [d.c_u(), d.c_v(), d.c_w()]);
    let names = d.uvw;

    // Commutation pattern.
    for part in [c_i, parts[0], parts[1], parts[2]] {
        ensure!(part.is_pairwise_anticommuting(), "a part is not anticommuting");
    }
    for (k, part) in parts.iter().enumerate() {
        let ok = part.iter().all(|p| c_i.iter().all(|q| !p.commutes_with(q)));
        ensure!(ok, "C_i does not anticommute with C_{}", names[k]);
    }
    for (a, b) in [(0, 1), (0, 2), (1, 2)] {
        let ok = parts[a].iter().all(|p| parts[b].iter().all(|q| p.commutes_with(q)));
        ensure!(ok, "C_{} and C_{} do not commute", names[a], names[b]);
    }

    // Disjointness and odd unions.
    let mut singleton_overlaps = Vec::new();
    for (k, part) in parts.iter().enumerate() {
        ensure!(c_i.is_disjoint(part), "C_i and C_{} intersect", names[k]);
        ensure!((c_i.len() + part.len()) % 2 == 1, "|C_i ∪ C_{}| is even", names[k]);
    }
    for (a, b) in [(0, 1), (0, 2), (1, 2)] {
        if !parts[a].is_disjoint(parts[b]) {
            ensure!(
                parts[a].len() == 1 && parts[b].len() == 1,
                "C_{} and C_{} intersect but are not singletons",
                names[a],
                names[b]
            );
            singleton_overlaps.push((names[a], names[b]));
        }
    }

    let sizes = [c_i.len(), parts[0].len(), parts[1].len(), parts[2].len()];
    let odd = sizes.map(|s| s % 2 == 1);
    let nonempty = sizes.map(|s| s > 0);
    let case = match nonempty {
        [true, false, false, false] => {
            ensure!(product_of_set(c_i).is_identity(), "case a: C_i is not maximal");
            ensure!(s.len() < 2 * n, "case a: size {} is not below 2n", s.len());
            AnticommutingCase::A
        }
        [true, true, false, false] => {
            ensure!(odd[0] && !odd[1], "case b: parities {odd:?}");
            let union = c_i.union(parts[0])?;
            ensure!(product_of_set(&union).is_identity(), "case b: C_i ∪ C_u is not maximal");
            ensure!(s.len() < 2 * n, "case b: size {} is not below 2n", s.len());
            AnticommutingCase::B
        }
        [true, true, true, false] => {
            ensure!(odd[0] && !odd[1] && !odd[2], "case c: parities {odd:?}");
            AnticommutingCase::C
        }
        [false, true, true, true] => {
            ensure!(odd[1] && odd[2] && odd[3], "case d: parities {odd:?}");
            AnticommutingCase::D
        }
        [true, true, true, true] => {
            ensure!(odd[1] == odd[2] && odd[2] == odd[3] && odd[0] != odd[1], "case e: parities {odd:?}");
            AnticommutingCase::E
        }
        other => return Err(Error::violation(format!("impossible nonempty pattern {other:?}"))),
    };
    Ok(StructureCase { case, decomposition: d, sizes, singleton_overlaps })
}

/// Structure of a maximal anticommuting set of maximum size `2n + 1`.
#[derive(Clone, Debug)]
pub struct MaximumStructure {
    pub decomposition: Decomposition,
    /// The common value of `∏C_i = ∏C_x = ∏C_y = ∏C_z`.
    pub part_product: Pauli,
}

/// Checks the maximum-size structure on the `(x, y, z)` decomposition:
/// every `C_i ∪ C_ℓ` multiplies to `I` and is maximal, the three labelled
/// parts are nonempty, all four part products agree (and are `I` exactly
/// when `C_i` is empty), and any two part products cancel.
pub fn verify_maximum_structure(s: &PauliSet) -> Result<MaximumStructure> {
    if s.n() < 2 {
        return Err(Error::argument("maximum structure needs at least two factors"));
    }
    require_maximal(s)?;
    if s.len() != max_size(s.n()) {
        return Err(Error::argument(format!("size {} is not 2n + 1 = {}", s.len(), max_size(s.n()))));
    }
    let d = decompose(s)?;
    let labelled = [Label::X, Label::Y, Label::Z];
    for l in labelled {
        let union = d.c_i.union(d.part(l))?;
        ensure!(union.len() == d.c_i.len() + d.part(l).len(), "C_i and C_{l} intersect");
        ensure!(product_of_set(&union).is_identity(), "∏(C_i ∪ C_{l}) ≠ I");
        ensure!(union.is_pairwise_anticommuting(), "C_i ∪ C_{l} is not anticommuting");
        ensure!(!d.part(l).is_empty(), "C_{l} is empty");
    }
    let products = Label::ALL.map(|l| product_of_set(d.part(l)));
    for (l, p) in Label::ALL.iter().zip(&products) {
        ensure!(*p == products[0], "∏C_{l} = {p} differs from ∏C_i = {}", products[0]);
    }
    for l in labelled {
        let is_id = products[l as usize].is_identity();
        ensure!(is_id == d.c_i.is_empty(), "∏C_{l} = I does not match C_i = ∅");
    }
    for a in 0..4 {
        for b in 0..4 {
            ensure!(products[a].product(&products[b])?.is_identity(), "part products do not cancel");
        }
    }
    Ok(MaximumStructure { part_product: products[0].clone(), decomposition: d })
}

/// `(s \ triple) ∪ {∏triple}`: a maximal anticommuting set two smaller.
pub fn shrink_triple(s: &PauliSet, triple: &PauliSet) -> Result<PauliSet> {
    if triple.len() != 3 {
        return Err(Error::argument("a triple must have three distinct elements"));
    }
    if !triple.is_subset_of(s) {
        return Err(Error::argument("triple is not a subset of the set"));
    }
    require_maximal(s)?;
    let mut out = s.difference(triple);
    ensure!(out.insert(product_of_set(triple))?, "product of a triple already present");
    Ok(out)
}

/// Maximum-size set built by repeatedly applying
/// `G ↦ (σ_x ⊗ G) ∪ {σ_y ⊗ I, σ_z ⊗ I}` starting from `{x, y, z}`.
pub fn construct_maximum(n: usize) -> Result<PauliSet> {
    if n < 1 {
        return Err(Error::argument("n must be at least 1"));
    }
    let mut g = PauliSet::from_strs(&["x", "y", "z"]);
    for m in 1..n {
        let mut next = tensor_prefix(Label::X, &g);
        for label in [Label::Y, Label::Z] {
            next.insert(Pauli::single(m + 1, 0, label))?;
        }
        g = next;
    }
    Ok(g)
}

/// `(σ_x ⊗ I ⊗ G) ∪ (σ_y ⊗ G ⊗ I) ∪ {σ_z ⊗ I ⊗ I}` over `2n + 1` factors.
pub fn construct_doubling(g: &PauliSet) -> Result<PauliSet> {
    require_maximal(g)?;
    let n = g.n();
    let id = Pauli::identity(n);
    let mut out = Vec::with_capacity(2 * g.len() + 1);
    out.extend(g.iter().map(|p| Pauli::single(1, 0, Label::X).tensor(&id).tensor(p)));
    out.extend(g.iter().map(|p| Pauli::single(1, 0, Label::Y).tensor(p).tensor(&id)));
    out.push(Pauli::single(2 * n + 1, 0, Label::Z));
    PauliSet::new_distinct(2 * n + 1, out)
}

/// Tensors corresponding elements of an odd number of maximal
/// anticommuting sets of equal size.
pub fn construct_zip(sets: &[PauliSet]) -> Result<PauliSet> {
    if sets.len().is_multiple_of(2) {
        return Err(Error::argument(format!("need an odd number of sets, got {}", sets.len())));
    }
    let size = sets[0].len();
    for s in sets {
        if s.len() != size {
            return Err(Error::argument("all sets must have the same cardinality"));
        }
        require_maximal(s)?;
    }
    let n: usize = sets.iter().map(PauliSet::n).sum();
    let out = (0..size).map(|j| {
        let mut labels = Vec::with_capacity(n);
        for s in sets {
            labels.extend(s.elements()[j].labels());
        }
        Pauli::from_labels(&labels)
    });
    PauliSet::new_distinct(n, out)
}

fn require_extendable(s: &PauliSet) -> Result<()> {
    if !is_anticommuting(s) {
        return Err(Error::argument("input is not anticommuting"));
    }
    if !s.is_empty() && product_of_set(s).is_identity() {
        return Err(Error::argument("input is already maximally anticommuting"));
    }
    Ok(())
}

/// One new element `R` anticommuting with all of `s`, such that `s ∪ {R}`
/// is still not maximal.
///
/// For even `|s|` this is the explicit choice from `q ∉ ⟨s⟩`: split `s`
/// into the part `C` commuting with `q` and the rest `A`, and take `q·∏A`
/// if `|C|` is odd, `q·∏C` if `|C|` is even and nonempty, and `q` if `C` is
/// empty. For odd `|s|` the element is taken from the coset of `q` when
/// that coset has the right parity; otherwise random cosets are tried with
/// a generator seeded from `q`.
pub fn extend_one_deterministic(s: &PauliSet, q: &Pauli) -> Result<Pauli> {
    if q.n() != s.n() {
        return Err(Error::Dimension { expected: s.n(), found: q.n() });
    }
    require_extendable(s)?;
    if s.is_odd() {
        if let Some(v) = coset_anticommuting_element(s, q) {
            return Ok(v);
        }
        let seed = q
            .x_words()
            .iter()
            .chain(q.z_words())
            .fold(0x9e37_79b9_7f4a_7c15u64, |h, &w| (h ^ w).wrapping_mul(0x0100_0000_01b3).rotate_left(17));
        return extend_one(s, &mut ChaCha8Rng::seed_from_u64(seed));
    }
    if EchelonBasis::from_set(s).contains(q) {
        return Err(Error::argument(format!("{q} lies in the subgroup generated by the set")));
    }
    let (commuting, anticommuting): (Vec<&Pauli>, Vec<&Pauli>) = s.iter().partition(|x| q.commutes_with(x));
    let mut r = q.clone();
    let factors = if commuting.len() % 2 == 1 { &anticommuting } else { &commuting };
    for x in factors {
        r.mul_assign(x);
    }
    debug_assert!(s.iter().all(|x| !r.commutes_with(x)));
    Ok(r)
}

/// One new element anticommuting with all of the non-maximal anticommuting
/// set `s`, found by sampling random cosets.
pub fn extend_one<R: Rng + ?Sized>(s: &PauliSet, rng: &mut R) -> Result<Pauli> {
    require_extendable(s)?;
    let n = s.n();
    if s.len() >= 2 * n {
        return Err(Error::argument("an anticommuting set of size 2n cannot grow without becoming maximal"));
    }
    let target = product_of_set(s);
    loop {
        let u = Pauli::random(n, rng);
        match coset_anticommuting_element(s, &u) {
            Some(v) if s.is_odd() || v != target => return Ok(v),
            _ => {}
        }
    }
}

/// Result of [`extend_to_maximum_with_rng`].
#[derive(Clone, Debug)]
pub struct ExtensionRun {
    /// Maximal anticommuting superset of the input with `2n + 1` elements.
    pub set: PauliSet,
    /// Random elements drawn.
    pub samples: u64,
    /// Draws that produced a new generator.
    pub accepted: u64,
}

impl ExtensionRun {
    pub fn acceptance_rate(&self) -> f64 {
        if self.samples == 0 {
            1.0
        } else {
            self.accepted as f64 / self.samples as f64
        }
    }
}

/// Grows an anticommuting minimal generating set to a maximal
/// anticommuting set of size `2n + 1`, seeded for reproducibility.
pub fn extend_to_maximum(g: &PauliSet, seed: u64) -> Result<PauliSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(extend_to_maximum_with_rng(g, &mut rng)?.set)
}

/// Randomized growth of an anticommuting minimal generating set `g ≠ {I}`.
///
/// Draws a uniform element `U`, finds the element `V` of its coset of
/// `⟨T⟩` anticommuting with the current set `T`, and accepts it when it
/// exists and (for even `|T|`) differs from `∏T`. At size `2n` the product
/// of all elements completes the set.
pub fn extend_to_maximum_with_rng<R: Rng + ?Sized>(g: &PauliSet, rng: &mut R) -> Result<ExtensionRun> {
    let n = g.n();
    if n == 0 {
        return Err(Error::argument("n must be at least 1"));
    }
    if !is_anticommuting(g) {
        return Err(Error::argument("input is not anticommuting"));
    }
    if g.len() == 1 && g.elements()[0].is_identity() {
        return Err(Error::argument("{I} cannot be extended"));
    }
    if !is_minimal_generating(g) {
        return Err(Error::argument("input is not a minimal generating set"));
    }
    let mut t = g.clone().into_vec();
    let mut product = product_of_set(g);
    let (mut samples, mut accepted) = (0u64, 0u64);
    while t.len() < 2 * n {
        let u = Pauli::random(n, rng);
        samples += 1;
        let current = PauliSet::from_vec_unchecked(n, std::mem::take(&mut t));
        let v = coset_anticommuting_element(&current, &u);
        t = current.into_vec();
        let accept = match &v {
            Some(v) => t.len() % 2 == 1 || *v != product,
            None => false,
        };
        if accept {
            let v = v.expect("accepted samples carry an element");
            product.mul_assign(&v);
            t.push(v);
            accepted += 1;
        }
    }
    debug_assert_eq!(product, product_of_set(&PauliSet::from_vec_unchecked(n, t.clone())));
    t.push(product);
    let set = PauliSet::from_vec_unchecked(n, t);
    ensure!(product_of_set(&set).is_identity(), "extended set does not multiply to I");
    Ok(ExtensionRun { set, samples, accepted })
}

/// Random maximal anticommuting set of the given odd size: a random
/// maximum-size set shrunk by random triples.
pub fn random_maximal_anticommuting<R: Rng + ?Sized>(n: usize, size: usize, rng: &mut R) -> Result<PauliSet> {
    if size.is_multiple_of(2) || size > max_size(n) {
        return Err(Error::argument(format!("no maximal anticommuting set of size {size} for n = {n}")));
    }
    let mut s = extend_to_maximum_with_rng(&PauliSet::empty(n), rng)?.set;
    while s.len() > size {
        let picked = rand::seq::index::sample(rng, s.len(), 3);
        let triple = PauliSet::from_vec_unchecked(n, picked.iter().map(|k| s.elements()[k].clone()).collect());
        s = shrink_triple(&s, &triple)?;
    }
    Ok(s)
}

/// No element has an identity factor.
pub fn xyz_only(s: &PauliSet) -> bool {
    s.is_xyz_only()
}

/// Elements over `n` factors with no identity factor, in canonical order.
pub(crate) fn xyz_elements(n: usize) -> Vec<Pauli> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<Label>| {
                Label::NON_IDENTITY.iter().map(move |&l| {
                    let mut next = prefix.clone();
                    next.push(l);
                    next
                })
            })
            .collect();
    }
    out.iter().map(|labels| Pauli::from_labels(labels)).collect()
}

/// Exhaustive search for a maximum-size (`2n + 1`) maximal anticommuting
/// set using only `x`, `y`, `z` factors. Returns the first one in canonical
/// order, or `None` when none exists.
pub fn xyz_max_search(n: usize, budget: &Budget) -> Result<Option<PauliSet>> {
    if n == 0 {
        return Err(Error::argument("n must be at least 1"));
    }
    budget::check("xyz search n", n, budget.xyz_search_n)?;
    let candidates = xyz_elements(n);
    let target = max_size(n);
    let mut chosen: Vec<usize> = Vec::with_capacity(target);
    let found = search_anticommuting(&candidates, target, 0, &mut chosen, &mut |picked| {
        let set = PauliSet::from_vec_unchecked(n, picked.iter().map(|&k| candidates[k].clone()).collect());
        product_of_set(&set).is_identity().then_some(set)
    });
    Ok(found)
}

/// Depth-first search over anticommuting subsets of `candidates` of size
/// `target`, visiting index-increasing selections. Stops at the first
/// selection `accept` maps to `Some`.
pub(crate) fn search_anticommuting<T>(
    candidates: &[Pauli],
    target: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    accept: &mut impl FnMut(&[usize]) -> Option<T>,
) -> Option<T> {
    if chosen.len() == target {
        return accept(chosen);
    }
    let needed = target - chosen.len();
    for k in start..candidates.len() {
        if candidates.len() - k < needed {
            break;
        }
        if chosen.iter().all(|&j| !candidates[j].commutes_with(&candidates[k])) {
            chosen.push(k);
            if let Some(found) = search_anticommuting(candidates, target, k + 1, chosen, accept) {
                return Some(found);
            }
            chosen.pop();
        }
    }
    None
}
