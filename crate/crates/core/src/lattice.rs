//! Hypothesis spaces and the Boolean lattice of statements over them.
//!
//! The atoms of a space are mutually exclusive and exhaustive, so every
//! statement is a subset of atoms: join is union, meet is intersection,
//! the truism is the full set and the absurdity the empty set.
//!
//! Spaces with at most 64 atoms store statements as a bit mask. Larger
//! spaces fall back to a sorted index list.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

const BITSET_LIMIT: usize = 64;

#[derive(Debug, PartialEq, Eq, Hash)]
struct SpaceInner {
    names: Vec<String>,
}

/// An ordered set of named, mutually exclusive, exhaustive atoms.
///
/// Cloning is cheap; clones share the same atom table.
#[derive(Debug, Clone)]
pub struct HypothesisSpace {
    inner: Arc<SpaceInner>,
}

impl HypothesisSpace {
    /// Builds a space from distinct, non-empty atom names.
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::EmptySpace);
        }
        let mut seen = HashSet::with_capacity(names.len());
        for (index, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::EmptyAtomName { index });
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::DuplicateAtom { name: name.clone() });
            }
        }
        Ok(Self {
            inner: Arc::new(SpaceInner { names }),
        })
    }

    /// Number of atoms.
    pub fn len(&self) -> usize {
        self.inner.names.len()
    }

    /// Always false: a space has at least one atom.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn atom_names(&self) -> &[String] {
        &self.inner.names
    }

    pub fn atom_name(&self, index: usize) -> Option<&str> {
        self.inner.names.get(index).map(String::as_str)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.inner.names.iter().position(|n| n == name)
    }

    /// The atomic statement with the given name.
    pub fn atom(&self, name: &str) -> Result<Statement> {
        let index = self.index_of(name).ok_or_else(|| Error::UnknownAtom {
            name: name.to_string(),
        })?;
        self.atom_at(index)
    }

    /// The atomic statement at `index`.
    pub fn atom_at(&self, index: usize) -> Result<Statement> {
        self.statement([index])
    }

    /// The statement made of the given atom indices.
    pub fn statement<I: IntoIterator<Item = usize>>(&self, indices: I) -> Result<Statement> {
        let n = self.len();
        let mut atoms = AtomSet::empty(n);
        for index in indices {
            if index >= n {
                return Err(Error::AtomIndexOutOfRange { index, n });
            }
            atoms.insert(index);
        }
        Ok(Statement {
            space: self.clone(),
            atoms,
        })
    }

    /// The join of all atoms.
    pub fn truism(&self) -> Statement {
        Statement {
            space: self.clone(),
            atoms: AtomSet::full(self.len()),
        }
    }

    /// The empty statement.
    pub fn absurdity(&self) -> Statement {
        Statement {
            space: self.clone(),
            atoms: AtomSet::empty(self.len()),
        }
    }

    /// The statement whose atoms are the set bits of `mask`. Requires n ≤ 64.
    pub fn statement_from_mask(&self, mask: u64) -> Result<Statement> {
        let n = self.len();
        if n > BITSET_LIMIT {
            return Err(Error::TooManyStatements { n });
        }
        if n < 64 && mask >> n != 0 {
            return Err(Error::AtomIndexOutOfRange {
                index: 63 - mask.leading_zeros() as usize,
                n,
            });
        }
        Ok(Statement {
            space: self.clone(),
            atoms: AtomSet::Bits(mask),
        })
    }

    /// Every element of the lattice, ordered by bit mask. Requires n < 64.
    pub fn statements(&self) -> Result<impl Iterator<Item = Statement> + '_> {
        let n = self.len();
        if n >= BITSET_LIMIT {
            return Err(Error::TooManyStatements { n });
        }
        Ok((0..(1u64 << n)).map(move |mask| Statement {
            space: self.clone(),
            atoms: AtomSet::Bits(mask),
        }))
    }

    /// Same atom table, either by identity or by content.
    pub fn same_as(&self, other: &HypothesisSpace) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }

    pub(crate) fn ensure_same(&self, other: &HypothesisSpace) -> Result<()> {
        if self.same_as(other) {
            Ok(())
        } else {
            Err(Error::SpaceMismatch)
        }
    }
}

impl PartialEq for HypothesisSpace {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for HypothesisSpace {}

impl std::hash::Hash for HypothesisSpace {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.inner.hash(state);
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum AtomSet {
    Bits(u64),
    Sorted(Vec<usize>),
}

impl AtomSet {
    fn empty(n: usize) -> Self {
        if n <= BITSET_LIMIT {
            AtomSet::Bits(0)
        } else {
            AtomSet::Sorted(Vec::new())
        }
    }

    fn full(n: usize) -> Self {
        if n < BITSET_LIMIT {
            AtomSet::Bits((1u64 << n) - 1)
        } else if n == BITSET_LIMIT {
            AtomSet::Bits(u64::MAX)
        } else {
            AtomSet::Sorted((0..n).collect())
        }
    }

    fn insert(&mut self, index: usize) {
        match self {
            AtomSet::Bits(b) => *b |= 1u64 << index,
            AtomSet::Sorted(v) => {
                if let Err(pos) = v.binary_search(&index) {
                    v.insert(pos, index);
                }
            }
        }
    }

    fn contains(&self, index: usize) -> bool {
        match self {
            AtomSet::Bits(b) => index < BITSET_LIMIT && b & (1u64 << index) != 0,
            AtomSet::Sorted(v) => v.binary_search(&index).is_ok(),
        }
    }

    fn len(&self) -> usize {
        match self {
            AtomSet::Bits(b) => b.count_ones() as usize,
            AtomSet::Sorted(v) => v.len(),
        }
    }

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn union(&self, other: &Self) -> Self {
        match (self, other) {
            (AtomSet::Bits(a), AtomSet::Bits(b)) => AtomSet::Bits(a | b),
            (AtomSet::Sorted(a), AtomSet::Sorted(b)) => {
                let mut out = Vec::with_capacity(a.len() + b.len());
                let (mut i, mut j) = (0, 0);
                while i < a.len() && j < b.len() {
                    match a[i].cmp(&b[j]) {
                        std::cmp::Ordering::Less => {
                            out.push(a[i]);
                            i += 1;
                        }
                        std::cmp::Ordering::Greater => {
                            out.push(b[j]);
                            j += 1;
                        }
                        std::cmp::Ordering::Equal => {
                            out.push(a[i]);
                            i += 1;
                            j += 1;
                        }
                    }
                }
                out.extend_from_slice(&a[i..]);
                out.extend_from_slice(&b[j..]);
                AtomSet::Sorted(out)
            }
            _ => unreachable!("representation is fixed by the space size"),
        }
    }

    fn intersection(&self, other: &Self) -> Self {
        match (self, other) {
            (AtomSet::Bits(a), AtomSet::Bits(b)) => AtomSet::Bits(a & b),
            (AtomSet::Sorted(a), AtomSet::Sorted(b)) => {
                let mut out = Vec::new();
                let (mut i, mut j) = (0, 0);
                while i < a.len() && j < b.len() {
                    match a[i].cmp(&b[j]) {
                        std::cmp::Ordering::Less => i += 1,
                        std::cmp::Ordering::Greater => j += 1,
                        std::cmp::Ordering::Equal => {
                            out.push(a[i]);
                            i += 1;
                            j += 1;
                        }
                    }
                }
                AtomSet::Sorted(out)
            }
            _ => unreachable!("representation is fixed by the space size"),
        }
    }

    fn complement(&self, n: usize) -> Self {
        match self {
            AtomSet::Bits(b) => match AtomSet::full(n) {
                AtomSet::Bits(full) => AtomSet::Bits(full & !b),
                AtomSet::Sorted(_) => unreachable!(),
            },
            AtomSet::Sorted(v) => {
                let mut out = Vec::with_capacity(n - v.len());
                let mut it = v.iter().peekable();
                for i in 0..n {
                    if it.peek() == Some(&&i) {
                        it.next();
                    } else {
                        out.push(i);
                    }
                }
                AtomSet::Sorted(out)
            }
        }
    }

    fn is_subset(&self, other: &Self) -> bool {
        match (self, other) {
            (AtomSet::Bits(a), AtomSet::Bits(b)) => a & !b == 0,
            (AtomSet::Sorted(a), _) => a.iter().all(|&i| other.contains(i)),
            _ => unreachable!("representation is fixed by the space size"),
        }
    }

    fn iter(&self) -> AtomIter<'_> {
        match self {
            AtomSet::Bits(b) => AtomIter::Bits(*b),
            AtomSet::Sorted(v) => AtomIter::Sorted(v.iter()),
        }
    }
}

/// Iterator over the atom indices of a statement, ascending.
pub enum AtomIter<'a> {
    Bits(u64),
    Sorted(std::slice::Iter<'a, usize>),
}

impl Iterator for AtomIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        match self {
            AtomIter::Bits(b) => {
                if *b == 0 {
                    None
                } else {
                    let i = b.trailing_zeros() as usize;
                    *b &= *b - 1;
                    Some(i)
                }
            }
            AtomIter::Sorted(it) => it.next().copied(),
        }
    }
}

/// An element of the Boolean lattice: a set of atoms of one space.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Statement {
    space: HypothesisSpace,
    atoms: AtomSet,
}

impl Statement {
    pub fn space(&self) -> &HypothesisSpace {
        &self.space
    }

    /// Atom indices in ascending order.
    pub fn atoms(&self) -> AtomIter<'_> {
        self.atoms.iter()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.atoms.contains(index)
    }

    /// Number of atoms in the statement.
    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    /// True for the absurdity.
    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn is_truism(&self) -> bool {
        self.len() == self.space.len()
    }

    /// Bit mask of the atoms, for spaces of at most 64 atoms.
    pub fn mask(&self) -> Option<u64> {
        match self.atoms {
            AtomSet::Bits(b) => Some(b),
            AtomSet::Sorted(_) => None,
        }
    }

    /// Logical OR.
    pub fn join(&self, other: &Statement) -> Result<Statement> {
        self.space.ensure_same(&other.space)?;
        Ok(Statement {
            space: self.space.clone(),
            atoms: self.atoms.union(&other.atoms),
        })
    }

    /// Logical AND.
    pub fn meet(&self, other: &Statement) -> Result<Statement> {
        self.space.ensure_same(&other.space)?;
        Ok(Statement {
            space: self.space.clone(),
            atoms: self.atoms.intersection(&other.atoms),
        })
    }

    /// Logical NOT, relative to the truism.
    pub fn complement(&self) -> Statement {
        Statement {
            space: self.space.clone(),
            atoms: self.atoms.complement(self.space.len()),
        }
    }

    /// `self` implies `other` iff its atoms are a subset of `other`'s.
    pub fn implies(&self, other: &Statement) -> Result<bool> {
        self.space.ensure_same(&other.space)?;
        Ok(self.atoms.is_subset(&other.atoms))
    }

    /// Mutually exclusive: the meet is the absurdity.
    pub fn disjoint(&self, other: &Statement) -> Result<bool> {
        Ok(self.meet(other)?.is_empty())
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("BOTTOM");
        }
        let mut first = true;
        for i in self.atoms() {
            if !first {
                f.write_str("|")?;
            }
            first = false;
            f.write_str(&self.space.atom_names()[i])?;
        }
        Ok(())
    }
}
