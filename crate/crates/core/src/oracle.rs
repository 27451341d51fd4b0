//! Brute-force ground truth for small `n`.
//!
//! Everything here works from factor labels rather than the packed bit
//! representation: two elements commute iff the number of positions where
//! both factors are non-identity and differ is even, and products are
//! computed factor by factor. Enumerations are bounded by a [`Budget`].

use std::collections::{BTreeMap, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::anticommuting::extend_to_maximum_with_rng;
use crate::budget::{self, Budget};
use crate::error::{ensure, Error, Result};
use crate::group::{map_census, EchelonBasis};
use crate::pauli::{format_stanzas, Label, Pauli, PauliSet};

/// Random generating sets checked per run at `n = 3`.
pub const RANDOM_CASES: usize = 500;

/// Commutation from labels alone.
pub fn labels_commute(p: &Pauli, q: &Pauli) -> bool {
    let differing = p.labels().zip(q.labels()).filter(|&(a, b)| a != Label::I && b != Label::I && a != b).count();
    differing % 2 == 0
}

fn label_product(a: Label, b: Label) -> Label {
    match (a, b) {
        (Label::I, l) | (l, Label::I) => l,
        (a, b) if a == b => Label::I,
        (a, b) => Label::NON_IDENTITY.into_iter().find(|&c| c != a && c != b).expect("three labels"),
    }
}

/// Product from labels alone.
pub fn labels_product(p: &Pauli, q: &Pauli) -> Pauli {
    let labels: Vec<Label> = p.labels().zip(q.labels()).map(|(a, b)| label_product(a, b)).collect();
    Pauli::from_labels(&labels)
}

fn labels_product_of(items: &[&Pauli], n: usize) -> Pauli {
    items.iter().fold(Pauli::identity(n), |acc, p| labels_product(&acc, p))
}

/// All `4^n` elements in canonical order.
pub fn all_elements(n: usize, budget: &Budget) -> Result<PauliSet> {
    budget::check("elements n", n, budget.elements_n)?;
    let mut words: Vec<Vec<Label>> = vec![Vec::new()];
    for _ in 0..n {
        words = words
            .into_iter()
            .flat_map(|w| {
                Label::ALL.into_iter().map(move |l| {
                    let mut next = w.clone();
                    next.push(l);
                    next
                })
            })
            .collect();
    }
    PauliSet::new_distinct(n, words.iter().map(|w| Pauli::from_labels(w)))
}

/// Full element list of the span of `gens`, computed by closure.
fn span(gens: &[&Pauli], n: usize) -> PauliSet {
    let mut elements = vec![Pauli::identity(n)];
    for g in gens {
        let shifted: Vec<Pauli> = elements.iter().map(|e| labels_product(e, g)).collect();
        elements.extend(shifted);
    }
    PauliSet::new(n, elements).expect("same dimension").canonical()
}

/// Calls `visit` on every index-increasing selection of `size` elements of
/// `candidates` that pass `compatible` pairwise and are independent.
fn independent_subsets(
    candidates: &[Pauli],
    size: usize,
    compatible: &dyn Fn(&Pauli, &Pauli) -> bool,
    visit: &mut dyn FnMut(&[&Pauli]) -> Result<()>,
) -> Result<()> {
    fn go<'a>(
        candidates: &'a [Pauli],
        size: usize,
        start: usize,
        chosen: &mut Vec<&'a Pauli>,
        basis: &EchelonBasis,
        compatible: &dyn Fn(&Pauli, &Pauli) -> bool,
        visit: &mut dyn FnMut(&[&Pauli]) -> Result<()>,
    ) -> Result<()> {
        if chosen.len() == size {
            return visit(chosen);
        }
        for k in start..candidates.len() {
            let c = &candidates[k];
            if !chosen.iter().all(|p| compatible(p, c)) {
                continue;
            }
            let mut next = basis.clone();
            if !next.insert(c) {
                continue;
            }
            chosen.push(c);
            go(candidates, size, k + 1, chosen, &next, compatible, visit)?;
            chosen.pop();
        }
        Ok(())
    }
    let n = candidates.first().map_or(0, Pauli::n);
    go(candidates, size, 0, &mut Vec::new(), &EchelonBasis::new(n), compatible, visit)
}

fn non_identity(n: usize, budget: &Budget) -> Result<Vec<Pauli>> {
    Ok(all_elements(n, budget)?.into_vec().into_iter().filter(|p| !p.is_identity()).collect())
}

/// Every maximal commuting subgroup, as canonical element lists sorted by
/// their serialization. Found by spanning every commuting independent set
/// of size `n`.
pub fn enumerate_maximal_commuting(n: usize, budget: &Budget) -> Result<Vec<PauliSet>> {
    if n == 0 {
        return Err(Error::argument("n must be at least 1"));
    }
    budget::check("maximal commuting enumeration n", n, budget.max_commuting_n)?;
    let candidates = non_identity(n, budget)?;
    let mut found = BTreeMap::new();
    independent_subsets(&candidates, n, &labels_commute, &mut |gens| {
        let group = span(gens, n);
        found.entry(group.canonical_key()).or_insert(group);
        Ok(())
    })?;
    Ok(found.into_values().collect())
}

/// Every maximal anticommuting set of size `m`, in canonical form and
/// sorted by serialization.
pub fn enumerate_maximal_anticommuting(n: usize, m: usize, budget: &Budget) -> Result<Vec<PauliSet>> {
    if n == 0 {
        return Err(Error::argument("n must be at least 1"));
    }
    budget::check("maximal anticommuting enumeration n", n, budget.max_anticommuting_n)?;
    if m == 0 {
        return Ok(Vec::new());
    }
    let elements = all_elements(n, budget)?.into_vec();
    let mut found = BTreeMap::new();
    let mut chosen = Vec::new();
    subsets_anticommuting(&elements, m, 0, &mut chosen, &mut |picked| {
        if labels_product_of(picked, n).is_identity() {
            let set = PauliSet::new_distinct(n, picked.iter().map(|p| (*p).clone()))
                .expect("distinct by construction")
                .canonical();
            found.insert(set.canonical_key(), set);
        }
    });
    Ok(found.into_values().collect())
}

fn subsets_anticommuting<'a>(
    elements: &'a [Pauli],
    size: usize,
    start: usize,
    chosen: &mut Vec<&'a Pauli>,
    visit: &mut dyn FnMut(&[&'a Pauli]),
) {
    if chosen.len() == size {
        visit(chosen);
        return;
    }
    for k in start..elements.len() {
        if elements.len() - k < size - chosen.len() {
            break;
        }
        let e = &elements[k];
        if chosen.iter().all(|p| !labels_commute(p, e)) {
            chosen.push(e);
            subsets_anticommuting(elements, size, k + 1, chosen, visit);
            chosen.pop();
        }
    }
}

/// One set per stanza in the line format.
pub fn stanzas(sets: &[PauliSet]) -> String {
    format_stanzas(sets)
}

fn mask_of(p: &Pauli, g: &PauliSet) -> u64 {
    g.iter().enumerate().filter(|(_, q)| !labels_commute(p, q)).fold(0, |acc, (k, _)| acc | (1 << k))
}

/// Checks that each of the `2^k` sign patterns against a minimal generating
/// set of size `k` is realized by exactly `4^n / 2^k` elements, both by
/// direct enumeration and through [`map_census`].
pub fn check_census(g: &PauliSet, budget: &Budget) -> Result<()> {
    let n = g.n();
    let k = g.len();
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    for p in all_elements(n, budget)?.iter() {
        *counts.entry(mask_of(p, g)).or_insert(0) += 1;
    }
    let expected = 1u64 << (2 * n - k);
    ensure!(counts.len() == 1 << k, "{} patterns realized, expected {}", counts.len(), 1u64 << k);
    ensure!(counts.values().all(|&c| c == expected), "uneven pattern counts {counts:?}");
    ensure!(map_census(g, budget)? == counts, "map_census disagrees with direct enumeration");
    Ok(())
}

/// Coset tallies for one anticommuting generating set.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CosetPatterns {
    pub cosets: usize,
    /// Cosets whose elements have an even number of commuting generators.
    pub even_f: usize,
    pub odd_f: usize,
}

/// Checks how sign patterns against an anticommuting minimal generating set
/// `g` (of size `m`, not `{I}`) are distributed over the cosets of `⟨g⟩`:
/// every pattern exactly once per coset for even `m`; for odd `m`, a single
/// `f`-parity per coset with each pattern of that parity realized by
/// exactly two elements differing by `∏g`, and the cosets split evenly
/// between the two parities.
pub fn check_coset_patterns(g: &PauliSet, budget: &Budget) -> Result<CosetPatterns> {
    let n = g.n();
    let m = g.len();
    let basis = EchelonBasis::from_set(g);
    if m == 0 || basis.rank() != m || !g.is_pairwise_anticommuting() {
        return Err(Error::argument("need an anticommuting minimal generating set other than {I}"));
    }
    let total = labels_product_of(&g.iter().collect::<Vec<_>>(), n);
    let mut cosets: HashMap<Pauli, Vec<Pauli>> = HashMap::new();
    for p in all_elements(n, budget)?.into_vec() {
        cosets.entry(basis.coset_representative(&p)).or_default().push(p);
    }
    ensure!(cosets.len() == 1 << (2 * n - m), "{} cosets", cosets.len());
    let mut tally = CosetPatterns { cosets: cosets.len(), ..Default::default() };
    for members in cosets.values() {
        ensure!(members.len() == 1 << m, "coset of size {}", members.len());
        let mut by_mask: BTreeMap<u64, Vec<&Pauli>> = BTreeMap::new();
        for p in members {
            by_mask.entry(mask_of(p, g)).or_default().push(p);
        }
        if m.is_multiple_of(2) {
            ensure!(by_mask.len() == 1 << m, "even m: {} of {} patterns", by_mask.len(), 1u64 << m);
            ensure!(by_mask.values().all(|v| v.len() == 1), "even m: a pattern repeats");
            continue;
        }
        // f = number of commuting generators = m - popcount(mask).
        let f_parity = |mask: u64| (m - mask.count_ones() as usize) % 2;
        let parity = f_parity(*by_mask.keys().next().expect("nonempty coset"));
        ensure!(by_mask.keys().all(|&k| f_parity(k) == parity), "mixed f-parity in a coset");
        ensure!(by_mask.len() == 1 << (m - 1), "odd m: {} patterns", by_mask.len());
        for pair in by_mask.values() {
            ensure!(pair.len() == 2, "odd m: a pattern realized {} times", pair.len());
            ensure!(labels_product(pair[0], &total) == *pair[1], "odd m: pair does not differ by ∏g");
        }
        if parity == 0 {
            tally.even_f += 1;
        } else {
            tally.odd_f += 1;
        }
    }
    if m % 2 == 1 {
        let half = 1usize << (2 * n - m - 1);
        ensure!(tally.even_f == half && tally.odd_f == half, "parity split {}/{}", tally.even_f, tally.odd_f);
    }
    Ok(tally)
}

/// Summary of a [`census_check`] run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CensusReport {
    pub n: usize,
    /// Minimal generating sets whose census was checked, by size.
    pub census_sets: BTreeMap<usize, usize>,
    /// Anticommuting minimal generating sets whose coset patterns were checked, by size.
    pub coset_sets: BTreeMap<usize, usize>,
    /// Cosets with even and odd `f`, summed over odd-size sets.
    pub even_f_cosets: usize,
    pub odd_f_cosets: usize,
}

/// Census and coset-pattern checks over minimal generating sets of every
/// size `1..=2n`: all of them for `n <= 2`, [`RANDOM_CASES`] random ones
/// of each kind for larger `n`.
pub fn census_check(n: usize, budget: &Budget, seed: u64) -> Result<CensusReport> {
    if n == 0 {
        return Err(Error::argument("n must be at least 1"));
    }
    budget::check("census check n", n, budget.census_check_n)?;
    let mut report = CensusReport { n, ..Default::default() };
    let on_census = |g: &PauliSet, report: &mut CensusReport| -> Result<()> {
        check_census(g, budget)?;
        *report.census_sets.entry(g.len()).or_default() += 1;
        Ok(())
    };
    let on_coset = |g: &PauliSet, report: &mut CensusReport| -> Result<()> {
        let t = check_coset_patterns(g, budget)?;
        report.even_f_cosets += t.even_f;
        report.odd_f_cosets += t.odd_f;
        *report.coset_sets.entry(g.len()).or_default() += 1;
        Ok(())
    };
    if n <= 2 {
        let candidates = non_identity(n, budget)?;
        for k in 1..=2 * n {
            independent_subsets(&candidates, k, &|_, _| true, &mut |gens| {
                let g = PauliSet::new_distinct(n, gens.iter().map(|p| (*p).clone()))?;
                on_census(&g, &mut report)?;
                if g.is_pairwise_anticommuting() {
                    on_coset(&g, &mut report)?;
                }
                Ok(())
            })?;
        }
        return Ok(report);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_CASES {
        let k = rng.random_range(1..=2 * n);
        let mut basis = EchelonBasis::new(n);
        let mut gens = Vec::with_capacity(k);
        while gens.len() < k {
            let p = Pauli::random(n, &mut rng);
            if basis.insert(&p) {
                gens.push(p);
            }
        }
        on_census(&PauliSet::new_distinct(n, gens)?, &mut report)?;

        let k = rng.random_range(1..=2 * n);
        let full = extend_to_maximum_with_rng(&PauliSet::empty(n), &mut rng)?.set;
        let g = PauliSet::new_distinct(n, full.iter().take(k).cloned())?;
        on_coset(&g, &mut report)?;
    }
    Ok(report)
}

/// Largest pairwise commuting set of elements with no identity factor.
pub fn max_xyz_commuting(n: usize, budget: &Budget) -> Result<PauliSet> {
    budget::check("xyz search n", n, budget.xyz_search_n)?;
    let candidates: Vec<Pauli> = all_elements(n, budget)?.into_vec().into_iter().filter(Pauli::is_xyz_only).collect();
    let mut best: Vec<usize> = Vec::new();
    let mut chosen = Vec::new();
    fn grow(c: &[Pauli], start: usize, chosen: &mut Vec<usize>, best: &mut Vec<usize>) {
        if chosen.len() > best.len() {
            *best = chosen.clone();
        }
        for k in start..c.len() {
            if chosen.len() + (c.len() - k) <= best.len() {
                return;
            }
            if chosen.iter().all(|&j| labels_commute(&c[j], &c[k])) {
                chosen.push(k);
                grow(c, k + 1, chosen, best);
                chosen.pop();
            }
        }
    }
    grow(&candidates, 0, &mut chosen, &mut best);
    PauliSet::new_distinct(n, best.into_iter().map(|k| candidates[k].clone()))
}

/// `size · (3^n - (-1)^n + 2^n) <= 6^n`: the known upper bound on
/// xyz-only commuting sets, in integer form.
pub fn xyz_commuting_bound_holds(n: usize, size: usize) -> bool {
    let n = n as u32;
    let sign: i128 = if n.is_multiple_of(2) { 1 } else { -1 };
    let denom = 3i128.pow(n) - sign + 2i128.pow(n);
    size as i128 * denom <= 6i128.pow(n)
}
