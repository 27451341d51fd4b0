//! Elements of the abelian Pauli group and ordered, duplicate-free sets of them.
//!
//! An element is stored as two packed bit strings `x` and `z`; factor `k`
//! lives at bit `k % 64` of word `k / 64`. The per-factor encoding is
//! `i = (0,0)`, `x = (1,0)`, `z = (0,1)`, `y = (1,1)`. Phases are not
//! representable, so the product is plain XOR and every element is its own
//! inverse.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

fn word_count(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

/// Single-qubit factor label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    I,
    X,
    Y,
    Z,
}

impl Label {
    pub const ALL: [Label; 4] = [Label::I, Label::X, Label::Y, Label::Z];
    pub const NON_IDENTITY: [Label; 3] = [Label::X, Label::Y, Label::Z];

    pub fn from_char(c: char) -> Option<Label> {
        match c {
            'i' => Some(Label::I),
            'x' => Some(Label::X),
            'y' => Some(Label::Y),
            'z' => Some(Label::Z),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Label::I => 'i',
            Label::X => 'x',
            Label::Y => 'y',
            Label::Z => 'z',
        }
    }

    /// `(x, z)` bit pair of this label.
    pub fn bits(self) -> (bool, bool) {
        match self {
            Label::I => (false, false),
            Label::X => (true, false),
            Label::Y => (true, true),
            Label::Z => (false, true),
        }
    }

    pub fn from_bits(x: bool, z: bool) -> Label {
        match (x, z) {
            (false, false) => Label::I,
            (true, false) => Label::X,
            (true, true) => Label::Y,
            (false, true) => Label::Z,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.chars();
        match (chars.next().and_then(Label::from_char), chars.next()) {
            (Some(label), None) => Ok(label),
            _ => Err(Error::argument(format!("expected one of i, x, y, z, got {s:?}"))),
        }
    }
}

/// Result of the commutation test between two elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(odd: bool) -> Sign {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }

    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// `(-1)^k`.
    pub fn power_of_minus_one(k: usize) -> Sign {
        Sign::from_parity(k % 2 == 1)
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_parity((self == Sign::Minus) != (rhs == Sign::Minus))
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// One element of the abelian n-Pauli group.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Pauli {
    n: usize,
    x: Vec<u64>,
    z: Vec<u64>,
}

impl Pauli {
    pub fn identity(n: usize) -> Pauli {
        let words = word_count(n);
        Pauli { n, x: vec![0; words], z: vec![0; words] }
    }

    pub fn from_labels(labels: &[Label]) -> Pauli {
        let mut p = Pauli::identity(labels.len());
        for (k, &label) in labels.iter().enumerate() {
            p.set(k, label);
        }
        p
    }

    /// Element with `label` at factor `k` and identity elsewhere.
    pub fn single(n: usize, k: usize, label: Label) -> Pauli {
        let mut p = Pauli::identity(n);
        p.set(k, label);
        p
    }

    /// Builds an element from raw words; bits at or above `n` must be clear.
    pub fn from_words(n: usize, x: Vec<u64>, z: Vec<u64>) -> Pauli {
        let words = word_count(n);
        assert_eq!(x.len(), words);
        assert_eq!(z.len(), words);
        let p = Pauli { n, x, z };
        debug_assert!(p.high_bits_clear());
        p
    }

    /// Uniformly random element: 2n independent fair bits.
    pub fn random<R: rand::Rng + ?Sized>(n: usize, rng: &mut R) -> Pauli {
        let words = word_count(n);
        let mut x: Vec<u64> = (0..words).map(|_| rng.random()).collect();
        let mut z: Vec<u64> = (0..words).map(|_| rng.random()).collect();
        if let (Some(lx), Some(lz)) = (x.last_mut(), z.last_mut()) {
            let rem = n % WORD_BITS;
            if rem != 0 {
                let mask = (1u64 << rem) - 1;
                *lx &= mask;
                *lz &= mask;
            }
        }
        Pauli { n, x, z }
    }

    fn high_bits_clear(&self) -> bool {
        let rem = self.n % WORD_BITS;
        if rem == 0 {
            return true;
        }
        let mask = !((1u64 << rem) - 1);
        self.x.last().is_none_or(|w| w & mask == 0) && self.z.last().is_none_or(|w| w & mask == 0)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn x_words(&self) -> &[u64] {
        &self.x
    }

    pub fn z_words(&self) -> &[u64] {
        &self.z
    }

    pub fn label(&self, k: usize) -> Label {
        assert!(k < self.n, "factor index {k} out of range for n = {}", self.n);
        let (w, b) = (k / WORD_BITS, k % WORD_BITS);
        Label::from_bits((self.x[w] >> b) & 1 == 1, (self.z[w] >> b) & 1 == 1)
    }

    pub fn set(&mut self, k: usize, label: Label) {
        assert!(k < self.n, "factor index {k} out of range for n = {}", self.n);
        let (w, b) = (k / WORD_BITS, k % WORD_BITS);
        let (xb, zb) = label.bits();
        self.x[w] = (self.x[w] & !(1 << b)) | ((xb as u64) << b);
        self.z[w] = (self.z[w] & !(1 << b)) | ((zb as u64) << b);
    }

    pub fn labels(&self) -> impl Iterator<Item = Label> + '_ {
        (0..self.n).map(move |k| self.label(k))
    }

    pub fn is_identity(&self) -> bool {
        self.x.iter().chain(&self.z).all(|&w| w == 0)
    }

    /// Number of non-identity factors.
    pub fn weight(&self) -> usize {
        self.x.iter().zip(&self.z).map(|(a, b)| (a | b).count_ones() as usize).sum()
    }

    /// True when no factor is the identity.
    pub fn is_xyz_only(&self) -> bool {
        self.weight() == self.n
    }

    fn check_dim(&self, other: &Pauli) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::Dimension { expected: self.n, found: other.n })
        }
    }

    /// Symplectic form parity; callers guarantee matching dimensions.
    #[inline]
    pub(crate) fn anticommutes_unchecked(&self, other: &Pauli) -> bool {
        let mut acc = 0u64;
        for w in 0..self.x.len() {
            acc ^= (self.x[w] & other.z[w]) ^ (self.z[w] & other.x[w]);
        }
        acc.count_ones() % 2 == 1
    }

    /// `+1` iff the two elements commute.
    pub fn commute(&self, other: &Pauli) -> Result<Sign> {
        self.check_dim(other)?;
        Ok(Sign::from_parity(self.anticommutes_unchecked(other)))
    }

    /// Panicking variant of [`Pauli::commute`] for internal use on sets of a
    /// known common dimension.
    #[inline]
    pub fn commutes_with(&self, other: &Pauli) -> bool {
        assert_eq!(self.n, other.n, "dimension mismatch");
        !self.anticommutes_unchecked(other)
    }

    pub fn product(&self, other: &Pauli) -> Result<Pauli> {
        self.check_dim(other)?;
        let mut out = self.clone();
        out.mul_assign_unchecked(other);
        Ok(out)
    }

    #[inline]
    pub(crate) fn mul_assign_unchecked(&mut self, other: &Pauli) {
        for (a, b) in self.x.iter_mut().zip(&other.x) {
            *a ^= b;
        }
        for (a, b) in self.z.iter_mut().zip(&other.z) {
            *a ^= b;
        }
    }

    /// In-place group product; panics on dimension mismatch.
    pub fn mul_assign(&mut self, other: &Pauli) {
        assert_eq!(self.n, other.n, "dimension mismatch");
        self.mul_assign_unchecked(other);
    }

    /// `label ⊗ self`: prepends one factor.
    pub fn prepend(&self, label: Label) -> Pauli {
        let mut labels = Vec::with_capacity(self.n + 1);
        labels.push(label);
        labels.extend(self.labels());
        Pauli::from_labels(&labels)
    }

    /// `self ⊗ other`.
    pub fn tensor(&self, other: &Pauli) -> Pauli {
        let labels: Vec<Label> = self.labels().chain(other.labels()).collect();
        Pauli::from_labels(&labels)
    }

    /// Splits off the first factor.
    pub fn split_first(&self) -> (Label, Pauli) {
        assert!(self.n >= 1);
        let labels: Vec<Label> = self.labels().collect();
        (labels[0], Pauli::from_labels(&labels[1..]))
    }

    /// Symplectic row `x_0..x_{n-1}, z_0..z_{n-1}` packed into `2 * words` words.
    pub(crate) fn symplectic_row(&self) -> Vec<u64> {
        let mut row = Vec::with_capacity(2 * self.x.len());
        row.extend_from_slice(&self.x);
        row.extend_from_slice(&self.z);
        row
    }

    pub(crate) fn from_symplectic_row(n: usize, row: &[u64]) -> Pauli {
        let words = word_count(n);
        Pauli { n, x: row[..words].to_vec(), z: row[words..].to_vec() }
    }

    /// Alphabetical digit `i < x < y < z` of factor `k`.
    fn digit(&self, k: usize) -> u8 {
        match self.label(k) {
            Label::I => 0,
            Label::X => 1,
            Label::Y => 2,
            Label::Z => 3,
        }
    }
}

/// Canonical order: the text form compared lexicographically with
/// `i < x < y < z`, first factor most significant. Elements of different
/// dimension order by `n` first.
impl Ord for Pauli {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| {
            for w in 0..self.x.len() {
                let diff = (self.x[w] ^ other.x[w]) | (self.z[w] ^ other.z[w]);
                if diff != 0 {
                    let k = w * WORD_BITS + diff.trailing_zeros() as usize;
                    return self.digit(k).cmp(&other.digit(k));
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Pauli {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Pauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for label in self.labels() {
            write!(f, "{}", label.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Pauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pauli({self})")
    }
}

impl FromStr for Pauli {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_pauli(s)
    }
}

/// Parses a lowercase `{i,x,y,z}` string. Positions in errors are 1-based.
pub fn parse_pauli(text: &str) -> Result<Pauli> {
    if text.is_empty() {
        return Err(Error::Parse { position: 1, message: "empty Pauli string".into() });
    }
    let labels = text
        .chars()
        .enumerate()
        .map(|(k, c)| {
            Label::from_char(c).ok_or_else(|| Error::Parse {
                position: k + 1,
                message: format!("invalid character {c:?}, expected one of i, x, y, z"),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Pauli::from_labels(&labels))
}

pub fn format_pauli(p: &Pauli) -> String {
    p.to_string()
}

/// Ordered, duplicate-free collection of elements sharing one dimension.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliSet {
    n: usize,
    elements: Vec<Pauli>,
}

impl PauliSet {
    pub fn empty(n: usize) -> PauliSet {
        PauliSet { n, elements: Vec::new() }
    }

    /// Builds a set keeping the first occurrence of repeated elements.
    pub fn new(n: usize, elements: impl IntoIterator<Item = Pauli>) -> Result<PauliSet> {
        Self::collect(n, elements, false)
    }

    /// Like [`PauliSet::new`], but a repeated element is an error.
    pub fn new_distinct(n: usize, elements: impl IntoIterator<Item = Pauli>) -> Result<PauliSet> {
        Self::collect(n, elements, true)
    }

    fn collect(n: usize, elements: impl IntoIterator<Item = Pauli>, reject_duplicates: bool) -> Result<PauliSet> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for p in elements {
            if p.n() != n {
                return Err(Error::Dimension { expected: n, found: p.n() });
            }
            if seen.insert(p.clone()) {
                out.push(p);
            } else if reject_duplicates {
                return Err(Error::argument(format!("duplicate element {p}")));
            }
        }
        Ok(PauliSet { n, elements: out })
    }

    /// Parses element strings; all must have the same length.
    pub fn parse<S: AsRef<str>>(items: &[S]) -> Result<PauliSet> {
        let paulis = items.iter().map(|s| parse_pauli(s.as_ref())).collect::<Result<Vec<_>>>()?;
        let n = paulis
            .first()
            .map(Pauli::n)
            .ok_or_else(|| Error::argument("cannot infer the number of factors of an empty set"))?;
        PauliSet::new(n, paulis)
    }

    /// Panicking shorthand for tests and examples.
    pub fn from_strs(items: &[&str]) -> PauliSet {
        PauliSet::parse(items).expect("valid Pauli strings")
    }

    pub(crate) fn from_vec_unchecked(n: usize, elements: Vec<Pauli>) -> PauliSet {
        debug_assert!(elements.iter().all(|p| p.n() == n));
        debug_assert_eq!(elements.iter().collect::<HashSet<_>>().len(), elements.len());
        PauliSet { n, elements }
    }

    /// Returns `false` (leaving the set unchanged) when `p` is already present.
    /// Membership is a linear scan; use [`PauliSet::new`] for bulk construction.
    pub fn insert(&mut self, p: Pauli) -> Result<bool> {
        if p.n() != self.n {
            return Err(Error::Dimension { expected: self.n, found: p.n() });
        }
        if self.contains(&p) {
            return Ok(false);
        }
        self.elements.push(p);
        Ok(true)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_odd(&self) -> bool {
        self.elements.len() % 2 == 1
    }

    pub fn elements(&self) -> &[Pauli] {
        &self.elements
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Pauli> {
        self.elements.iter()
    }

    pub fn get(&self, k: usize) -> Option<&Pauli> {
        self.elements.get(k)
    }

    pub fn contains(&self, p: &Pauli) -> bool {
        self.elements.contains(p)
    }

    pub fn index_of(&self, p: &Pauli) -> Option<usize> {
        self.elements.iter().position(|q| q == p)
    }

    pub fn into_vec(self) -> Vec<Pauli> {
        self.elements
    }

    pub fn to_hash_set(&self) -> HashSet<Pauli> {
        self.elements.iter().cloned().collect()
    }

    /// Set equality, ignoring order.
    pub fn same_elements(&self, other: &PauliSet) -> bool {
        self.n == other.n && self.len() == other.len() && {
            let mine = self.to_hash_set();
            other.iter().all(|p| mine.contains(p))
        }
    }

    pub fn is_subset_of(&self, other: &PauliSet) -> bool {
        let theirs = other.to_hash_set();
        self.n == other.n && self.iter().all(|p| theirs.contains(p))
    }

    pub fn is_disjoint(&self, other: &PauliSet) -> bool {
        let theirs = other.to_hash_set();
        self.iter().all(|p| !theirs.contains(p))
    }

    /// Same elements sorted into canonical order.
    pub fn canonical(&self) -> PauliSet {
        let mut elements = self.elements.clone();
        elements.sort();
        PauliSet { n: self.n, elements }
    }

    /// Order-independent serialization: canonical elements, one per line.
    pub fn canonical_key(&self) -> String {
        self.canonical().to_lines()
    }

    /// One element per line, each terminated by a newline.
    pub fn to_lines(&self) -> String {
        let mut out = String::with_capacity(self.len() * (self.n + 1));
        for p in &self.elements {
            out.push_str(&p.to_string());
            out.push('\n');
        }
        out
    }

    /// Union in order: elements of `self`, then new elements of `other`.
    pub fn union(&self, other: &PauliSet) -> Result<PauliSet> {
        if other.n != self.n {
            return Err(Error::Dimension { expected: self.n, found: other.n });
        }
        PauliSet::new(self.n, self.iter().chain(other.iter()).cloned())
    }

    pub fn difference(&self, other: &PauliSet) -> PauliSet {
        let theirs = other.to_hash_set();
        PauliSet { n: self.n, elements: self.elements.iter().filter(|p| !theirs.contains(*p)).cloned().collect() }
    }

    pub fn without(&self, p: &Pauli) -> PauliSet {
        PauliSet { n: self.n, elements: self.elements.iter().filter(|q| *q != p).cloned().collect() }
    }

    pub fn is_pairwise_commuting(&self) -> bool {
        self.elements.iter().enumerate().all(|(k, p)| self.elements[k + 1..].iter().all(|q| p.commutes_with(q)))
    }

    pub fn is_pairwise_anticommuting(&self) -> bool {
        self.elements.iter().enumerate().all(|(k, p)| self.elements[k + 1..].iter().all(|q| !p.commutes_with(q)))
    }

    /// `P ∗ H`.
    pub fn left_multiply(&self, p: &Pauli) -> Result<PauliSet> {
        if p.n() != self.n {
            return Err(Error::Dimension { expected: self.n, found: p.n() });
        }
        let elements = self.elements.iter().map(|q| {
            let mut r = q.clone();
            r.mul_assign_unchecked(p);
            r
        });
        Ok(PauliSet::from_vec_unchecked(self.n, elements.collect()))
    }

    /// `H1 ∗ H2`, deduplicated. Empty if either side is empty.
    pub fn set_product(&self, other: &PauliSet) -> Result<PauliSet> {
        if other.n != self.n {
            return Err(Error::Dimension { expected: self.n, found: other.n });
        }
        let mut seen = HashSet::new();
        let mut elements = Vec::new();
        for p in &self.elements {
            for q in &other.elements {
                let mut r = p.clone();
                r.mul_assign_unchecked(q);
                if seen.insert(r.clone()) {
                    elements.push(r);
                }
            }
        }
        Ok(PauliSet { n: self.n, elements })
    }

    /// True when the set is closed under the group product.
    pub fn is_closed(&self) -> bool {
        let mine = self.to_hash_set();
        self.elements.iter().enumerate().all(|(k, p)| {
            self.elements[k..].iter().all(|q| {
                let mut r = p.clone();
                r.mul_assign_unchecked(q);
                mine.contains(&r)
            })
        })
    }

    /// True when no element contains an identity factor.
    pub fn is_xyz_only(&self) -> bool {
        self.elements.iter().all(Pauli::is_xyz_only)
    }
}

impl fmt::Debug for PauliSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliSet(n={}, {{", self.n)?;
        for (k, p) in self.elements.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("})")
    }
}

impl<'a> IntoIterator for &'a PauliSet {
    type Item = &'a Pauli;
    type IntoIter = std::slice::Iter<'a, Pauli>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

/// `∏H`; the empty product is the identity.
pub fn product_of_set(h: &PauliSet) -> Pauli {
    let mut acc = Pauli::identity(h.n());
    for p in h {
        acc.mul_assign_unchecked(p);
    }
    acc
}

/// `label ⊗ S`.
pub fn tensor_prefix(label: Label, s: &PauliSet) -> PauliSet {
    PauliSet::from_vec_unchecked(s.n() + 1, s.iter().map(|p| p.prepend(label)).collect())
}

/// Parses the line format: one element per line, blank lines and lines
/// starting with `#` ignored. `n` is required when the input has no elements.
pub fn parse_set_lines(text: &str, n: Option<usize>) -> Result<PauliSet> {
    let mut paulis = Vec::new();
    for (line_no, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let p = parse_pauli(line).map_err(|e| match e {
            Error::Parse { position, message } => {
                Error::Parse { position, message: format!("line {}: {message}", line_no + 1) }
            }
            other => other,
        })?;
        paulis.push(p);
    }
    let n = match (paulis.first(), n) {
        (Some(p), Some(n)) if p.n() != n => return Err(Error::Dimension { expected: n, found: p.n() }),
        (Some(p), _) => p.n(),
        (None, Some(n)) => n,
        (None, None) => return Err(Error::argument("empty input: the number of factors must be given")),
    };
    PauliSet::new(n, paulis)
}

/// Parses stanzas of the line format separated by blank lines.
pub fn parse_stanzas(text: &str) -> Result<Vec<PauliSet>> {
    let mut sets = Vec::new();
    let mut current = String::new();
    for line in text.lines() {
        if line.trim().is_empty() {
            if !current.is_empty() {
                sets.push(parse_set_lines(&current, None)?);
                current.clear();
            }
        } else {
            current.push_str(line);
            current.push('\n');
        }
    }
    if !current.is_empty() {
        sets.push(parse_set_lines(&current, None)?);
    }
    Ok(sets)
}

/// Writes sets as stanzas separated by blank lines.
pub fn format_stanzas(sets: &[PauliSet]) -> String {
    sets.iter().map(PauliSet::to_lines).collect::<Vec<_>>().join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Pauli {
        parse_pauli(s).unwrap()
    }

    #[test]
    fn parse_examples() {
        let xyz = p("xyz");
        assert_eq!(xyz.labels().collect::<Vec<_>>(), vec![Label::X, Label::Y, Label::Z]);
        assert!(p("ii").is_identity());
        assert_eq!(p("ii").n(), 2);
        match parse_pauli("q") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 1),
            other => panic!("unexpected {other:?}"),
        }
        match parse_pauli("xXz") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_pauli(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn commute_examples() {
        assert_eq!(p("x").commute(&p("y")).unwrap(), Sign::Minus);
        assert_eq!(p("xx").commute(&p("zz")).unwrap(), Sign::Plus);
        assert_eq!(p("ix").commute(&p("xi")).unwrap(), Sign::Plus);
        assert!(matches!(p("x").commute(&p("xx")), Err(Error::Dimension { .. })));
    }

    /// Count of positions where both factors are non-identity and differ.
    fn string_rule(a: &str, b: &str) -> Sign {
        let count = a.chars().zip(b.chars()).filter(|&(c, d)| c != 'i' && d != 'i' && c != d).count();
        Sign::power_of_minus_one(count)
    }

    #[test]
    fn commute_matches_string_rule_for_all_two_factor_pairs() {
        let all: Vec<String> =
            Label::ALL.iter().flat_map(|a| Label::ALL.iter().map(move |b| format!("{a}{b}"))).collect();
        for a in &all {
            for b in &all {
                assert_eq!(p(a).commute(&p(b)).unwrap(), string_rule(a, b), "{a} vs {b}");
            }
        }
    }

    #[test]
    fn product_examples() {
        assert_eq!(p("x").product(&p("y")).unwrap(), p("z"));
        assert_eq!(p("xi").product(&p("yi")).unwrap(), p("zi"));
        let q = p("xyzi");
        assert_eq!(q.product(&Pauli::identity(4)).unwrap(), q);
        assert!(matches!(p("x").product(&p("xx")), Err(Error::Dimension { .. })));
    }

    #[test]
    fn product_of_set_examples() {
        assert_eq!(product_of_set(&PauliSet::empty(3)), Pauli::identity(3));
        assert!(product_of_set(&PauliSet::from_strs(&["x", "y", "z"])).is_identity());
        assert!(product_of_set(&PauliSet::from_strs(&["xx", "xy", "xz", "yi", "zi"])).is_identity());
    }

    #[test]
    fn tensor_prefix_examples() {
        let s = tensor_prefix(Label::X, &PauliSet::from_strs(&["x", "y", "z"]));
        assert_eq!(s, PauliSet::from_strs(&["xx", "xy", "xz"]));
        let e = tensor_prefix(Label::I, &PauliSet::empty(1));
        assert!(e.is_empty());
        assert_eq!(e.n(), 2);
        assert_eq!(tensor_prefix(Label::Z, &PauliSet::from_strs(&["i"])), PauliSet::from_strs(&["zi"]));
    }

    #[test]
    fn canonical_order_is_alphabetical() {
        let mut v = vec![p("z"), p("y"), p("i"), p("x")];
        v.sort();
        assert_eq!(v, vec![p("i"), p("x"), p("y"), p("z")]);
        assert!(p("iz") < p("xi"));
        assert!(p("xz") < p("yi"));
    }

    #[test]
    fn wide_elements_cross_word_boundaries() {
        let n = 130;
        let mut a = Pauli::identity(n);
        a.set(0, Label::X);
        a.set(64, Label::Z);
        a.set(129, Label::Y);
        let b = Pauli::single(n, 129, Label::X);
        assert_eq!(a.commute(&b).unwrap(), Sign::Minus);
        assert_eq!(a.to_string().len(), n);
        assert_eq!(parse_pauli(&a.to_string()).unwrap(), a);
        assert!(Pauli::single(n, 65, Label::X) > Pauli::single(n, 66, Label::Z));
    }

    #[test]
    fn line_format() {
        let text = "# comment\n\nxx\n zz \n\nxx\n";
        let s = parse_set_lines(text, None).unwrap();
        assert_eq!(s, PauliSet::from_strs(&["xx", "zz"]));
        assert!(parse_set_lines("", None).is_err());
        assert_eq!(parse_set_lines("", Some(3)).unwrap().n(), 3);
        assert!(matches!(parse_set_lines("xx\nx\n", None), Err(Error::Dimension { .. })));
        match parse_set_lines("xx\nxX\n", None) {
            Err(Error::Parse { position, message }) => {
                assert_eq!(position, 2);
                assert!(message.contains("line 2"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn stanza_round_trip() {
        let sets = vec![PauliSet::from_strs(&["x", "y"]), PauliSet::from_strs(&["zz"])];
        let text = format_stanzas(&sets);
        assert_eq!(text, "x\ny\n\nzz\n");
        assert_eq!(parse_stanzas(&text).unwrap(), sets);
    }

    #[test]
    fn set_dedup_and_dimension() {
        let s = PauliSet::new(1, vec![p("x"), p("x"), p("z")]).unwrap();
        assert_eq!(s.len(), 2);
        assert!(PauliSet::new_distinct(1, vec![p("x"), p("x")]).is_err());
        assert!(PauliSet::new(1, vec![p("xx")]).is_err());
    }
}
