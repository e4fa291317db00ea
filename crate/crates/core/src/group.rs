//! Finite groups as dense multiplication tables, and the elementary
//! structural computations on them (centralizers, closures, Sylow
//! subgroups, ...).
//!
//! Elements are indices `0..n`. Every scan that has to pick "the first"
//! element does so in increasing index order, so all results are
//! deterministic.

use std::collections::VecDeque;
use std::fmt;

use crate::arith;
use crate::bits::BitSet;
use crate::error::{Error, Result};

/// Element index within a [`GroupTable`].
pub type Elem = usize;

/// Default cap on the order of any group this crate builds.
pub const DEFAULT_ORDER_CAP: usize = 10_000;

/// Raw Cayley tables above this order are rejected instead of paying for an
/// O(n³) associativity scan.
pub const ASSOCIATIVITY_CHECK_LIMIT: usize = 512;

/// A finite group given by its full multiplication table.
#[derive(Clone)]
pub struct GroupTable {
    order: usize,
    table: Vec<u32>,
    identity: Elem,
    inverses: Vec<u32>,
    labels: Option<Vec<String>>,
    name: String,
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupTable")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("identity", &self.identity)
            .finish()
    }
}

impl GroupTable {
    /// Validates a raw n×n Cayley table and wraps it. The identity keeps its
    /// input index.
    pub fn from_cayley_table(raw: &[Vec<usize>]) -> Result<Self> {
        let n = raw.len();
        if n == 0 {
            return Err(Error::MalformedTable("empty table".into()));
        }
        if n > ASSOCIATIVITY_CHECK_LIMIT {
            return Err(Error::TableTooLarge { order: n, limit: ASSOCIATIVITY_CHECK_LIMIT });
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in raw.iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedTable(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::MalformedTable(format!(
                        "entry ({i},{j}) = {v} is out of range 0..{n}"
                    )));
                }
                table.push(v as u32);
            }
        }
        check_latin(&table, n)?;
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e * n + x] as usize == x && table[x * n + e] as usize == x))
            .ok_or(Error::NoIdentity)?;
        let inverses = inverses_of(&table, n, identity)?;
        check_associative(&table, n)?;
        Ok(GroupTable { order: n, table, identity, inverses, labels: None, name: "table".into() })
    }

    /// Wraps a table whose group axioms are guaranteed by construction.
    /// Only the Latin-square shape and identity are asserted in debug builds.
    pub(crate) fn from_trusted(table: Vec<u32>, order: usize, identity: Elem, name: impl Into<String>) -> Self {
        debug_assert_eq!(table.len(), order * order);
        let inverses = inverses_of(&table, order, identity).expect("constructed table has inverses");
        GroupTable { order, table, identity, inverses, labels: None, name: name.into() }
    }

    /// Runs the full axiom check (Latin square, identity, inverses,
    /// associativity) regardless of order.
    pub fn validate(&self) -> Result<()> {
        let n = self.order;
        check_latin(&self.table, n)?;
        for x in 0..n {
            if self.mul(self.identity, x) != x || self.mul(x, self.identity) != x {
                return Err(Error::NoIdentity);
            }
        }
        inverses_of(&self.table, n, self.identity)?;
        check_associative(&self.table, n)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order);
        self.labels = Some(labels);
        self
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        self.identity
    }

    /// Product `x·y`.
    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        self.table[x * self.order + y] as usize
    }

    #[inline]
    pub fn inv(&self, x: Elem) -> Elem {
        self.inverses[x] as usize
    }

    /// Conjugate `g⁻¹·x·g`.
    #[inline]
    pub fn conj(&self, x: Elem, g: Elem) -> Elem {
        self.mul(self.mul(self.inv(g), x), g)
    }

    #[inline]
    pub fn commutes(&self, x: Elem, y: Elem) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    pub fn label(&self, x: Elem) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Row `i` of the table: products `i·j` for all j.
    pub fn row(&self, i: Elem) -> impl Iterator<Item = Elem> + '_ {
        self.table[i * self.order..(i + 1) * self.order].iter().map(|&v| v as usize)
    }

    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|i| self.row(i).collect()).collect()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.order).all(|x| (x + 1..self.order).all(|y| self.commutes(x, y)))
    }

    pub fn check_element(&self, x: Elem) -> Result<()> {
        if x < self.order {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange { element: x, order: self.order })
        }
    }

    /// `x^k` by repeated squaring.
    pub fn pow(&self, x: Elem, mut k: u64) -> Elem {
        let mut base = x;
        let mut acc = self.identity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Least k ≥ 1 with `x^k = e`.
    pub fn element_order(&self, x: Elem) -> usize {
        let mut y = x;
        let mut k = 1;
        while y != self.identity {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// `x⁻¹y⁻¹xy`.
    pub fn commutator(&self, x: Elem, y: Elem) -> Elem {
        let a = self.mul(self.inv(x), self.inv(y));
        self.mul(self.mul(a, x), y)
    }

    pub fn whole(&self) -> ElementSet {
        ElementSet { universe: self.order, bits: BitSet::full(self.order), subgroup: true }
    }

    pub fn trivial_subgroup(&self) -> ElementSet {
        let mut s = ElementSet::empty(self.order);
        s.insert(self.identity);
        s.subgroup = true;
        s
    }

    pub fn center(&self) -> ElementSet {
        let mut z = ElementSet::empty(self.order);
        for x in self.elements() {
            if self.elements().all(|y| self.commutes(x, y)) {
                z.insert(x);
            }
        }
        z.subgroup = true;
        z
    }

    pub fn centralizer(&self, x: Elem) -> ElementSet {
        let mut c = ElementSet::empty(self.order);
        for y in self.elements() {
            if self.commutes(x, y) {
                c.insert(y);
            }
        }
        c.subgroup = true;
        c
    }

    /// Elements commuting with every member of `s`.
    pub fn centralizer_of_set(&self, s: &ElementSet) -> ElementSet {
        let mut c = ElementSet::empty(self.order);
        for y in self.elements() {
            if s.iter().all(|x| self.commutes(x, y)) {
                c.insert(y);
            }
        }
        c.subgroup = true;
        c
    }

    /// Smallest subgroup containing `s`, by breadth-first right
    /// multiplication with the members of `s`.
    pub fn subgroup_closure(&self, s: &ElementSet) -> ElementSet {
        let gens: Vec<Elem> = s.iter().filter(|&g| g != self.identity).collect();
        self.closure_of(&gens)
    }

    pub(crate) fn closure_of(&self, gens: &[Elem]) -> ElementSet {
        let mut out = ElementSet::empty(self.order);
        out.insert(self.identity);
        let mut queue = VecDeque::from([self.identity]);
        while let Some(h) = queue.pop_front() {
            for &g in gens {
                let hg = self.mul(h, g);
                if out.insert(hg) {
                    queue.push_back(hg);
                }
            }
        }
        out.subgroup = true;
        out
    }

    /// Cyclic subgroup `⟨x⟩`.
    pub fn cyclic_subgroup(&self, x: Elem) -> ElementSet {
        self.closure_of(&[x])
    }

    pub fn derived_subgroup(&self) -> ElementSet {
        let mut comms = ElementSet::empty(self.order);
        for x in self.elements() {
            for y in self.elements() {
                comms.insert(self.commutator(x, y));
            }
        }
        self.subgroup_closure(&comms)
    }

    /// Closure of all conjugates of `s`.
    pub fn normal_closure(&self, s: &ElementSet) -> ElementSet {
        let mut conjugates = ElementSet::empty(self.order);
        for x in s.iter() {
            for g in self.elements() {
                conjugates.insert(self.conj(x, g));
            }
        }
        self.subgroup_closure(&conjugates)
    }

    /// `g⁻¹·s·g`; keeps the subgroup flag.
    pub fn conjugate_set(&self, s: &ElementSet, g: Elem) -> ElementSet {
        let mut out = ElementSet::empty(self.order);
        for x in s.iter() {
            out.insert(self.conj(x, g));
        }
        out.subgroup = s.subgroup;
        out
    }

    /// `{g : g⁻¹·s·g = s}`.
    pub fn normalizer(&self, s: &ElementSet) -> ElementSet {
        let mut n = ElementSet::empty(self.order);
        for g in self.elements() {
            if s.iter().all(|x| s.contains(self.conj(x, g))) {
                n.insert(g);
            }
        }
        n.subgroup = true;
        n
    }

    /// Setwise product `{a·b : a ∈ a_set, b ∈ b_set}`.
    pub fn product_set(&self, a_set: &ElementSet, b_set: &ElementSet) -> ElementSet {
        let mut out = ElementSet::empty(self.order);
        for a in a_set.iter() {
            for b in b_set.iter() {
                out.insert(self.mul(a, b));
            }
        }
        out
    }

    /// Checks that `s` is a subgroup of this group. Sets carrying the
    /// subgroup flag are trusted; others are verified.
    pub fn require_subgroup(&self, s: &ElementSet) -> Result<()> {
        if s.universe != self.order {
            return Err(Error::UniverseMismatch { expected: self.order, found: s.universe });
        }
        if s.subgroup || self.is_subgroup(s) {
            Ok(())
        } else {
            Err(Error::NotASubgroup)
        }
    }

    /// Verifies closure under products and inverses, and that the identity
    /// is present.
    pub fn is_subgroup(&self, s: &ElementSet) -> bool {
        s.universe == self.order
            && s.contains(self.identity)
            && s.iter().all(|x| s.contains(self.inv(x)) && s.iter().all(|y| s.contains(self.mul(x, y))))
    }

    pub fn is_abelian(&self, s: &ElementSet) -> Result<bool> {
        self.require_subgroup(s)?;
        let members: Vec<Elem> = s.iter().collect();
        Ok(members
            .iter()
            .enumerate()
            .all(|(i, &x)| members[i + 1..].iter().all(|&y| self.commutes(x, y))))
    }

    pub fn is_normal(&self, s: &ElementSet) -> Result<bool> {
        self.require_subgroup(s)?;
        Ok(self.elements().all(|g| s.iter().all(|x| s.contains(self.conj(x, g)))))
    }

    /// A Sylow p-subgroup, grown from `⟨x⟩` for the first element of order
    /// p by repeatedly adjoining the first p-element of `N(P) ∖ P`.
    pub fn sylow_subgroup(&self, p: u64) -> Result<ElementSet> {
        let n = self.order as u64;
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if !n.is_multiple_of(p) {
            return Err(Error::PrimeDoesNotDivideOrder { p, order: self.order });
        }
        let (_, target) = arith::p_part(n, p);
        let is_p_element = |x: Elem| arith::prime_power_base(self.element_order(x) as u64) == Some(p);
        let start = self
            .elements()
            .find(|&x| self.element_order(x) as u64 == p)
            .ok_or_else(|| Error::StructureViolation(format!("no element of order {p} (Cauchy)")))?;
        let mut sylow = self.cyclic_subgroup(start);
        while (sylow.len() as u64) < target {
            let norm = self.normalizer(&sylow);
            let y = norm
                .iter()
                .find(|&y| !sylow.contains(y) && is_p_element(y))
                .ok_or_else(|| {
                    Error::StructureViolation(format!("p-subgroup of order {} cannot be enlarged", sylow.len()))
                })?;
            let mut gens = sylow.clone();
            gens.insert(y);
            sylow = self.subgroup_closure(&gens);
        }
        Ok(sylow)
    }

    /// Distinct conjugates `g⁻¹Pg` in first-encounter order over g.
    pub fn sylow_conjugates(&self, p: &ElementSet) -> Result<Vec<ElementSet>> {
        self.require_subgroup(p)?;
        let mut out: Vec<ElementSet> = Vec::new();
        for g in self.elements() {
            let c = self.conjugate_set(p, g);
            if !out.contains(&c) {
                out.push(c);
            }
        }
        for c in &mut out {
            c.subgroup = true;
        }
        Ok(out)
    }

    pub fn subgroup_shape(&self, s: &ElementSet) -> Result<SubgroupShape> {
        self.require_subgroup(s)?;
        let size = s.len();
        let is_cyclic = s.iter().any(|x| self.element_order(x) == size);
        let elementary_abelian = match arith::prime_power_base(size as u64) {
            Some(q) if self.is_abelian(s)? => s
                .iter()
                .filter(|&x| x != self.identity)
                .all(|x| self.element_order(x) as u64 == q)
                .then_some(q),
            _ => None,
        };
        Ok(SubgroupShape { is_cyclic, elementary_abelian })
    }

    /// First element of `s` whose order equals `|s|`, if `s` is cyclic.
    pub fn cyclic_generator(&self, s: &ElementSet) -> Option<Elem> {
        s.iter().find(|&x| self.element_order(x) == s.len())
    }
}

/// Cyclicity and elementary-abelian type of a subgroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubgroupShape {
    pub is_cyclic: bool,
    /// `Some(q)` when the subgroup is elementary abelian of exponent q.
    pub elementary_abelian: Option<u64>,
}

/// A subset of the elements of a group of order `universe`.
#[derive(Clone, Debug)]
pub struct ElementSet {
    universe: usize,
    bits: BitSet,
    subgroup: bool,
}

impl PartialEq for ElementSet {
    fn eq(&self, other: &Self) -> bool {
        self.universe == other.universe && self.bits == other.bits
    }
}

impl Eq for ElementSet {}

impl ElementSet {
    pub fn empty(universe: usize) -> Self {
        ElementSet { universe, bits: BitSet::new(universe), subgroup: false }
    }

    pub fn from_elements(universe: usize, elems: impl IntoIterator<Item = Elem>) -> Self {
        let mut s = ElementSet::empty(universe);
        for e in elems {
            s.insert(e);
        }
        s
    }

    pub fn universe_order(&self) -> usize {
        self.universe
    }

    /// Whether this set was produced as a subgroup.
    pub fn is_flagged_subgroup(&self) -> bool {
        self.subgroup
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.bits.contains(x)
    }

    /// Adds `x`; returns true when it was not already present. Clears the
    /// subgroup flag since the set may no longer be closed.
    pub fn insert(&mut self, x: Elem) -> bool {
        let fresh = self.bits.insert(x);
        if fresh {
            self.subgroup = false;
        }
        fresh
    }

    pub fn len(&self) -> usize {
        self.bits.count()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.bits.iter()
    }

    pub fn to_vec(&self) -> Vec<Elem> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    /// Intersection; subgroup flag kept when both inputs are subgroups.
    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        ElementSet { universe: self.universe, bits, subgroup: self.subgroup && other.subgroup }
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        ElementSet { universe: self.universe, bits, subgroup: false }
    }

}

fn check_latin(table: &[u32], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    for i in 0..n {
        seen.iter_mut().for_each(|s| *s = false);
        for j in 0..n {
            let v = table[i * n + j] as usize;
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotLatinSquare(format!("row {i} repeats {v} (at column {j})")));
            }
        }
    }
    for j in 0..n {
        seen.iter_mut().for_each(|s| *s = false);
        for i in 0..n {
            let v = table[i * n + j] as usize;
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotLatinSquare(format!("column {j} repeats {v} (at row {i})")));
            }
        }
    }
    Ok(())
}

fn inverses_of(table: &[u32], n: usize, identity: Elem) -> Result<Vec<u32>> {
    (0..n)
        .map(|x| {
            let right = (0..n).find(|&y| table[x * n + y] as usize == identity);
            match right {
                Some(y) if table[y * n + x] as usize == identity => Ok(y as u32),
                _ => Err(Error::NoInverse(x)),
            }
        })
        .collect()
}

fn check_associative(table: &[u32], n: usize) -> Result<()> {
    let m = |a: usize, b: usize| table[a * n + b] as usize;
    for x in 0..n {
        for y in 0..n {
            let xy = m(x, y);
            for z in 0..n {
                if m(xy, z) != m(x, m(y, z)) {
                    return Err(Error::NotAssociative { x, y, z });
                }
            }
        }
    }
    Ok(())
}
