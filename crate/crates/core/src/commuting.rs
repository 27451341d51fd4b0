//! Maximal commuting subgroups: the first-factor decomposition, the
//! structure checks it admits, and the converse constructions.
//!
//! A commuting set is maximal exactly when it has `2^n` elements, so
//! maximality is decided by counting rather than by searching for an
//! extension.

use rand::Rng;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::group::{generated_set, EchelonBasis};
use crate::pauli::{product_of_set, tensor_prefix, Label, Pauli, PauliSet};

/// Split of a set by its first factor, `S = ⋃ σ_ℓ ⊗ C_ℓ`, together with a
/// labelling `(u, v, w)` of `(x, y, z)` in which empty parts come last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub c_i: PauliSet,
    pub c_x: PauliSet,
    pub c_y: PauliSet,
    pub c_z: PauliSet,
    pub uvw: [Label; 3],
}

const PERMUTATIONS: [[Label; 3]; 6] = [
    [Label::X, Label::Y, Label::Z],
    [Label::X, Label::Z, Label::Y],
    [Label::Y, Label::X, Label::Z],
    [Label::Y, Label::Z, Label::X],
    [Label::Z, Label::X, Label::Y],
    [Label::Z, Label::Y, Label::X],
];

impl Decomposition {
    pub fn part(&self, label: Label) -> &PauliSet {
        match label {
            Label::I => &self.c_i,
            Label::X => &self.c_x,
            Label::Y => &self.c_y,
            Label::Z => &self.c_z,
        }
    }

    pub fn c_u(&self) -> &PauliSet {
        self.part(self.uvw[0])
    }

    pub fn c_v(&self) -> &PauliSet {
        self.part(self.uvw[1])
    }

    pub fn c_w(&self) -> &PauliSet {
        self.part(self.uvw[2])
    }

    /// Number of factors of the original set.
    pub fn n(&self) -> usize {
        self.c_i.n() + 1
    }

    /// Sizes of `(C_i, C_u, C_v, C_w)`.
    pub fn uvw_sizes(&self) -> [usize; 4] {
        [self.c_i.len(), self.c_u().len(), self.c_v().len(), self.c_w().len()]
    }

    /// Rebuilds the original set; elements come grouped by first factor.
    pub fn reassemble(&self) -> PauliSet {
        let parts = Label::ALL.iter().flat_map(|&l| tensor_prefix(l, self.part(l)).into_vec());
        PauliSet::from_vec_unchecked(self.n(), parts.collect())
    }
}

/// Splits `s` by first factor. Needs at least two factors.
pub fn decompose(s: &PauliSet) -> Result<Decomposition> {
    if s.n() < 2 {
        return Err(Error::Dimension { expected: 2, found: s.n() });
    }
    let m = s.n() - 1;
    let mut parts: [Vec<Pauli>; 4] = Default::default();
    for p in s {
        let (head, tail) = p.split_first();
        parts[head as usize].push(tail);
    }
    let [c_i, c_x, c_y, c_z] = parts.map(|v| PauliSet::from_vec_unchecked(m, v));
    let empty = |l: Label| match l {
        Label::X => c_x.is_empty(),
        Label::Y => c_y.is_empty(),
        Label::Z => c_z.is_empty(),
        Label::I => c_i.is_empty(),
    };
    let uvw = *PERMUTATIONS
        .iter()
        .find(|[u, v, w]| (!empty(*u) || empty(*v)) && (!empty(*v) || empty(*w)))
        .expect("some ordering puts empty parts last");
    Ok(Decomposition { c_i, c_x, c_y, c_z, uvw })
}

fn full_size(n: usize) -> Option<usize> {
    u32::try_from(n).ok().and_then(|n| 1usize.checked_shl(n))
}

/// Pairwise commuting with exactly `2^n` elements.
pub fn is_maximally_commuting(s: &PauliSet) -> bool {
    full_size(s.n()) == Some(s.len()) && s.is_pairwise_commuting()
}

/// Which form of the commuting structure a maximal set takes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommutingCase {
    /// Only `C_i` and `C_u` are nonempty, and they are equal.
    TwoParts,
    /// All four parts are nonempty, disjoint, of size `2^{n-2}`.
    FourParts,
}

/// Outcome of [`verify_commuting_structure`]: every listed property was
/// recomputed from the sets themselves.
#[derive(Clone, Debug)]
pub struct CommutingStructure {
    pub case: CommutingCase,
    pub decomposition: Decomposition,
    /// Number of individual identities checked, including children.
    pub checks: usize,
    /// Reports for the maximal commuting sets over `n - 1` factors that the
    /// structure exposes (`C_i` in the two-part case, each `C_i ∪ C_ℓ`
    /// otherwise), when those still have at least two factors.
    pub children: Vec<CommutingStructure>,
}

struct Checker {
    count: usize,
}

impl Checker {
    fn check(&mut self, cond: bool, what: impl FnOnce() -> String) -> Result<()> {
        self.count += 1;
        if cond {
            Ok(())
        } else {
            Err(Error::Violation(what()))
        }
    }

    fn same(&mut self, got: &PauliSet, want: &PauliSet, what: &str) -> Result<()> {
        self.check(got.same_elements(want), || format!("{what}: got {got:?}, expected {want:?}"))
    }
}

/// Verifies the commuting structure of a maximal commuting set with
/// `n ≥ 2`, recursing into the exposed subgroups over `n - 1` factors.
pub fn verify_commuting_structure(s: &PauliSet) -> Result<CommutingStructure> {
    verify_commuting_structure_to_depth(s, usize::MAX)
}

/// As [`verify_commuting_structure`] but recursing at most `depth` levels
/// (`0` checks only `s` itself).
pub fn verify_commuting_structure_to_depth(s: &PauliSet, depth: usize) -> Result<CommutingStructure> {
    if s.n() < 2 {
        return Err(Error::argument("commuting structure needs at least two factors"));
    }
    if !is_maximally_commuting(s) {
        return Err(Error::argument("input is not a maximal commuting set"));
    }
    let d = decompose(s)?;
    let n = s.n();
    let mut ck = Checker { count: 0 };
    let identity = Pauli::identity(n - 1);
    ck.check(d.c_i.contains(&identity), || "identity missing from C_i".into())?;
    ck.check(product_of_set(s).is_identity(), || "product of a maximal commuting set is not I".into())?;

    // Commutation pattern between parts.
    let uvw = [d.c_u(), d.c_v(), d.c_w()];
    for part in [&d.c_i, uvw[0], uvw[1], uvw[2]] {
        ck.check(part.is_pairwise_commuting(), || "a part is not commuting".into())?;
    }
    for part in uvw {
        let ok = part.iter().all(|p| d.c_i.iter().all(|q| p.commutes_with(q)));
        ck.check(ok, || "a part does not commute with C_i".into())?;
    }
    for (a, b) in [(0, 1), (0, 2), (1, 2)] {
        let ok = uvw[a].iter().all(|p| uvw[b].iter().all(|q| !p.commutes_with(q)));
        ck.check(ok, || format!("parts {} and {} do not anticommute", d.uvw[a], d.uvw[b]))?;
    }

    let case;
    let mut children = Vec::new();
    if d.c_v().is_empty() {
        ck.check(d.c_w().is_empty(), || "C_w nonempty while C_v is empty".into())?;
        case = CommutingCase::TwoParts;
        ck.same(&d.c_i, d.c_u(), "C_i = C_u")?;
        ck.check(is_maximally_commuting(&d.c_i), || "C_i is not maximal commuting".into())?;
        if depth > 0 && n > 2 {
            children.push(verify_commuting_structure_to_depth(&d.c_i, depth - 1)?);
        }
    } else {
        ck.check(!d.c_w().is_empty(), || "C_u, C_v nonempty but C_w empty".into())?;
        case = CommutingCase::FourParts;
        let c_i = &d.c_i;
        // 1. C_i is a subgroup: P ∗ C_i = C_i ∗ C_i = C_i.
        for p in c_i {
            ck.same(&c_i.left_multiply(p)?, c_i, "P ∗ C_i = C_i")?;
        }
        ck.same(&c_i.set_product(c_i)?, c_i, "C_i ∗ C_i = C_i")?;
        for (k, part) in uvw.iter().enumerate() {
            let name = d.uvw[k];
            // 2. P ∗ C_ℓ = C_ℓ ∗ C_ℓ = C_i.
            for p in part.iter() {
                ck.same(&part.left_multiply(p)?, c_i, &format!("P ∗ C_{name} = C_i"))?;
            }
            ck.same(&part.set_product(part)?, c_i, &format!("C_{name} ∗ C_{name} = C_i"))?;
            // 3. P ∗ C_ℓ = Q ∗ C_i = C_i ∗ C_ℓ = C_ℓ.
            for p in c_i {
                ck.same(&part.left_multiply(p)?, part, &format!("P ∗ C_{name} = C_{name}"))?;
            }
            for q in part.iter() {
                ck.same(&c_i.left_multiply(q)?, part, &format!("Q ∗ C_i = C_{name}"))?;
            }
            ck.same(&c_i.set_product(part)?, part, &format!("C_i ∗ C_{name} = C_{name}"))?;
        }
        // 4. P ∗ C_b = C_a ∗ C_b = C_c for distinct a, b, c.
        for (a, b, c) in [(0, 1, 2), (1, 0, 2), (0, 2, 1), (2, 0, 1), (1, 2, 0), (2, 1, 0)] {
            for p in uvw[a].iter() {
                ck.same(&uvw[b].left_multiply(p)?, uvw[c], "P ∗ C_b = C_c")?;
            }
            ck.same(&uvw[a].set_product(uvw[b])?, uvw[c], "C_a ∗ C_b = C_c")?;
        }
        // 5. Equal sizes 2^{n-2}, disjoint.
        let quarter = 1usize << (n - 2);
        for part in [c_i, uvw[0], uvw[1], uvw[2]] {
            ck.check(part.len() == quarter, || format!("part of size {} instead of {quarter}", part.len()))?;
        }
        let all = [c_i, uvw[0], uvw[1], uvw[2]];
        for a in 0..4 {
            for b in a + 1..4 {
                ck.check(all[a].is_disjoint(all[b]), || "parts are not disjoint".into())?;
            }
        }
        // 6. C_i and each C_i ∪ C_ℓ are subgroups, maximal commuting over n - 1 factors.
        ck.check(c_i.is_closed(), || "C_i is not closed".into())?;
        for part in uvw {
            let union = c_i.union(part)?;
            ck.check(union.is_closed(), || "C_i ∪ C_ℓ is not closed".into())?;
            ck.check(is_maximally_commuting(&union), || "C_i ∪ C_ℓ is not maximal commuting".into())?;
            if depth > 0 && n > 2 {
                children.push(verify_commuting_structure_to_depth(&union, depth - 1)?);
            }
        }
    }
    let checks = ck.count + children.iter().map(|c| c.checks).sum::<usize>();
    Ok(CommutingStructure { case, decomposition: d, checks, children })
}

/// `(σ_i ⊗ S) ∪ (σ_ℓ ⊗ S)` for a maximal commuting `S`.
pub fn lift_commuting(s: &PauliSet, label: Label) -> Result<PauliSet> {
    if label == Label::I {
        return Err(Error::argument("the lift label must be one of x, y, z"));
    }
    if !is_maximally_commuting(s) {
        return Err(Error::argument("input is not a maximal commuting set"));
    }
    tensor_prefix(Label::I, s).union(&tensor_prefix(label, s))
}

/// Assembles `(σ_i ⊗ C_i) ∪ (σ_x ⊗ C_{perm[0]}) ∪ (σ_y ⊗ C_{perm[1]}) ∪
/// (σ_z ⊗ C_{perm[2]})`, where `perm` names which input part sits under each
/// of the labels `x, y, z`.
///
/// The parts must have the commuting-structure commutation pattern and all
/// have size `2^{m-1}` for parts over `m` factors.
pub fn compose_commuting(
    c_i: &PauliSet,
    c_x: &PauliSet,
    c_y: &PauliSet,
    c_z: &PauliSet,
    perm: [Label; 3],
) -> Result<PauliSet> {
    if !PERMUTATIONS.contains(&perm) {
        return Err(Error::argument("perm must be a permutation of (x, y, z)"));
    }
    let m = c_i.n();
    for part in [c_x, c_y, c_z] {
        if part.n() != m {
            return Err(Error::Dimension { expected: m, found: part.n() });
        }
    }
    let quarter = full_size(m).map(|s| s / 2).ok_or_else(|| Error::capacity("too many factors"))?;
    for (name, part) in [("i", c_i), ("x", c_x), ("y", c_y), ("z", c_z)] {
        if part.len() != quarter {
            return Err(Error::argument(format!("C_{name} has {} elements, expected {quarter}", part.len())));
        }
    }
    let named = [("i", c_i), ("x", c_x), ("y", c_y), ("z", c_z)];
    for (a, (na, pa)) in named.iter().enumerate() {
        for (nb, pb) in &named[a..] {
            // Same part or C_i involved: commute. Distinct non-i parts: anticommute.
            let want_commute = na == nb || *na == "i" || *nb == "i";
            for (j, p) in pa.iter().enumerate() {
                let start = if na == nb { j + 1 } else { 0 };
                for q in &pb.elements()[start..] {
                    if p.commutes_with(q) != want_commute {
                        return Err(Error::argument(format!(
                            "C_{na} element {p} and C_{nb} element {q} should {}",
                            if want_commute { "commute" } else { "anticommute" }
                        )));
                    }
                }
            }
        }
    }
    let pick = |l: Label| match l {
        Label::X => c_x,
        Label::Y => c_y,
        Label::Z => c_z,
        Label::I => c_i,
    };
    let mut out = tensor_prefix(Label::I, c_i);
    for (target, &source) in Label::NON_IDENTITY.iter().zip(&perm) {
        out = out.union(&tensor_prefix(*target, pick(source)))?;
    }
    Ok(out)
}

/// Uniformly random maximal commuting subgroup: a commuting minimal
/// generating set of size `n` grown by rejection sampling, then expanded.
pub fn random_maximal_commuting<R: Rng + ?Sized>(n: usize, rng: &mut R, budget: &Budget) -> Result<PauliSet> {
    if n == 0 {
        return Err(Error::argument("n must be at least 1"));
    }
    crate::budget::check("subgroup rank", n, budget.generated_rank)?;
    let generators = random_commuting_generators(n, n, rng);
    generated_set(&generators, budget)
}

/// Commuting minimal generating set of size `k ≤ n` drawn by rejection.
pub fn random_commuting_generators<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> PauliSet {
    assert!(k <= n, "commuting generating sets have at most n elements");
    let mut basis = EchelonBasis::new(n);
    let mut gens: Vec<Pauli> = Vec::with_capacity(k);
    while gens.len() < k {
        let q = Pauli::random(n, rng);
        if gens.iter().all(|g| g.commutes_with(&q)) && basis.insert(&q) {
            gens.push(q);
        }
    }
    PauliSet::from_vec_unchecked(n, gens)
}
