use std::fmt;

use crate::error::{Error, Module, Result};
use crate::scalar::ComplexScalar;

/// The symbol `[m, z]` for the field derivative of order `m >= 1` at `z`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Insertion {
    order: u32,
    point: ComplexScalar,
}

impl Insertion {
    /// Panics if `order == 0`; use [`Insertion::try_new`] for untrusted input.
    pub fn new(order: u32, point: ComplexScalar) -> Self {
        Self::try_new(order, point).expect("derivative order must be >= 1")
    }

    pub fn try_new(order: u32, point: ComplexScalar) -> Result<Self> {
        if order == 0 {
            return Err(Error::domain(Module::Algebra, "derivative order must be >= 1"));
        }
        Ok(Insertion { order, point })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn point(&self) -> &ComplexScalar {
        &self.point
    }
}

impl fmt::Display for Insertion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.order, self.point)
    }
}

/// Basis element of a symbol algebra. Words are kept in canonical (sorted)
/// form, so the product is commutative.
pub trait Word: Clone + Ord + fmt::Debug {
    fn unit() -> Self;
    fn concat(&self, other: &Self) -> Self;
    fn insertions(&self) -> Box<dyn Iterator<Item = &Insertion> + '_>;

    fn is_unit(&self) -> bool {
        self.insertions().next().is_none()
    }

    fn total_order(&self) -> u32 {
        self.insertions().map(Insertion::order).sum()
    }
}

fn merge_sorted<T: Ord + Clone>(a: &[T], b: &[T]) -> Vec<T> {
    let mut out: Vec<T> = a.iter().chain(b).cloned().collect();
    out.sort();
    out
}

/// A plain monomial `[m1, z1, ..., mn, zn]`; the empty word is the unit.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlainWord {
    insertions: Vec<Insertion>,
}

impl PlainWord {
    pub fn new(mut insertions: Vec<Insertion>) -> Self {
        insertions.sort();
        PlainWord { insertions }
    }

    /// `[1, z1, ..., 1, zn]`.
    pub fn first_order(points: impl IntoIterator<Item = ComplexScalar>) -> Self {
        Self::new(points.into_iter().map(|z| Insertion::new(1, z)).collect())
    }

    pub fn as_slice(&self) -> &[Insertion] {
        &self.insertions
    }

    pub fn len(&self) -> usize {
        self.insertions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.insertions.is_empty()
    }
}

impl Word for PlainWord {
    fn unit() -> Self {
        PlainWord::default()
    }

    fn concat(&self, other: &Self) -> Self {
        PlainWord {
            insertions: merge_sorted(&self.insertions, &other.insertions),
        }
    }

    fn insertions(&self) -> Box<dyn Iterator<Item = &Insertion> + '_> {
        Box::new(self.insertions.iter())
    }
}

impl fmt::Display for PlainWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.insertions.is_empty() {
            return f.write_str("1");
        }
        for ins in &self.insertions {
            write!(f, "{ins}")?;
        }
        Ok(())
    }
}

/// A Wick-ordered group `:[m1, z1, ..., mn, zn]:`. Non-empty, unordered;
/// points inside one group may coincide.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WickGroup {
    insertions: Vec<Insertion>,
}

impl WickGroup {
    pub fn new(mut insertions: Vec<Insertion>) -> Result<Self> {
        if insertions.is_empty() {
            return Err(Error::domain(Module::Algebra, "a Wick group needs at least one insertion"));
        }
        insertions.sort();
        Ok(WickGroup { insertions })
    }

    pub fn single(insertion: Insertion) -> Self {
        WickGroup {
            insertions: vec![insertion],
        }
    }

    /// `:prod_m [m, z]^{n_m}:` for the given multiset of orders.
    pub fn at_point(orders: &[u32], point: &ComplexScalar) -> Result<Self> {
        let ins = orders
            .iter()
            .map(|&m| Insertion::try_new(m, point.clone()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ins)
    }

    pub fn as_slice(&self) -> &[Insertion] {
        &self.insertions
    }

    pub fn len(&self) -> usize {
        self.insertions.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub(crate) fn from_sorted_unchecked(insertions: Vec<Insertion>) -> Self {
        debug_assert!(!insertions.is_empty());
        let mut insertions = insertions;
        insertions.sort();
        WickGroup { insertions }
    }
}

impl fmt::Display for WickGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(":")?;
        for ins in &self.insertions {
            write!(f, "{ins}")?;
        }
        f.write_str(":")
    }
}

/// A product of Wick groups `:Z1: ... :Zr:`; the empty product is the unit.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WickWord {
    groups: Vec<WickGroup>,
}

impl WickWord {
    pub fn new(mut groups: Vec<WickGroup>) -> Self {
        groups.sort();
        WickWord { groups }
    }

    /// Every insertion in its own group; same expectation as the plain word.
    pub fn singletons(word: &PlainWord) -> Self {
        Self::new(word.as_slice().iter().cloned().map(WickGroup::single).collect())
    }

    pub fn groups(&self) -> &[WickGroup] {
        &self.groups
    }

    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }
}

impl From<WickGroup> for WickWord {
    fn from(g: WickGroup) -> Self {
        WickWord { groups: vec![g] }
    }
}

impl Word for WickWord {
    fn unit() -> Self {
        WickWord::default()
    }

    fn concat(&self, other: &Self) -> Self {
        WickWord {
            groups: merge_sorted(&self.groups, &other.groups),
        }
    }

    fn insertions(&self) -> Box<dyn Iterator<Item = &Insertion> + '_> {
        Box::new(self.groups.iter().flat_map(|g| g.insertions.iter()))
    }
}

impl fmt::Display for WickWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.groups.is_empty() {
            return f.write_str("1");
        }
        for g in &self.groups {
            write!(f, "{g}")?;
        }
        Ok(())
    }
}
