//! Abstract argumentation frameworks and their classical acceptance semantics.
//!
//! A framework is a finite directed attack graph. The engine evaluates two
//! semantics: the grounded labeling (the least fixed point of the defense
//! operator, which three-values every argument as accepted, rejected, or
//! undecided) and stable extensions (conflict-free sets attacking everything
//! outside themselves).
//!
//! Everything is sized for desk-scale instances: at most [`MAX_ARGUMENTS`]
//! arguments, with exhaustive enumeration guarded by an explicit bound where
//! it is exponential.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::set::ArgSet;

/// Hard cap on framework size; subsets are 64-bit masks.
pub const MAX_ARGUMENTS: usize = 64;

/// Default guard for operations that enumerate subsets of some pool
/// (stable extensions, minimal moves, game search).
pub const DEFAULT_ENUM_BOUND: usize = 20;

/// A named argument. Ids are nonempty ASCII words over `[A-Za-z0-9_]` and
/// order lexicographically, which fixes the canonical argument order of
/// every framework built from them.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArgumentId(String);

impl ArgumentId {
    pub fn new(s: &str) -> Result<ArgumentId, AfError> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_') {
            return Err(AfError::InvalidId { id: s.to_string() });
        }
        Ok(ArgumentId(s.to_string()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for ArgumentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for ArgumentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for ArgumentId {
    type Err = AfError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ArgumentId::new(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AfError {
    /// Argument names must be nonempty words over `[A-Za-z0-9_]`.
    InvalidId { id: String },
    /// An id was used that the framework does not declare.
    UnknownArgument { id: String },
    /// More arguments than [`MAX_ARGUMENTS`].
    TooManyArguments { count: usize },
    /// An enumeration was requested over a set larger than its guard bound.
    SizeBoundExceeded { size: usize, bound: usize },
}

impl fmt::Display for AfError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AfError::InvalidId { id } => {
                write!(f, "invalid argument id {id:?} (want nonempty [A-Za-z0-9_])")
            }
            AfError::UnknownArgument { id } => write!(f, "unknown argument `{id}`"),
            AfError::TooManyArguments { count } => {
                write!(
                    f,
                    "{count} arguments exceed the supported maximum of {MAX_ARGUMENTS}"
                )
            }
            AfError::SizeBoundExceeded { size, bound } => {
                write!(
                    f,
                    "refusing to enumerate over {size} arguments (bound {bound})"
                )
            }
        }
    }
}

impl core::error::Error for AfError {}

/// Three-valued assignment of every argument under the grounded semantics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labeling {
    pub accepted: BTreeSet<ArgumentId>,
    pub rejected: BTreeSet<ArgumentId>,
    pub undecided: BTreeSet<ArgumentId>,
}

/// Mask-level counterpart of [`Labeling`], relative to a live subset.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MaskLabeling {
    pub accepted: ArgSet,
    pub rejected: ArgSet,
    pub undecided: ArgSet,
}

/// A finite attack graph with a canonical (lexicographic) argument order.
///
/// Attack structure is stored as per-argument attacker/target masks, so the
/// semantics routines below are straight-line mask algebra. The `*_in`
/// variants evaluate semantics on the subframework induced by a `within`
/// mask: arguments outside it, and attacks touching them, do not exist.
#[derive(Clone, PartialEq, Eq)]
pub struct ArgumentationFramework {
    ids: Vec<ArgumentId>,
    attackers: Vec<ArgSet>,
    targets: Vec<ArgSet>,
    attack_count: usize,
}

impl fmt::Debug for ArgumentationFramework {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ArgumentationFramework({} arguments, {} attacks)",
            self.ids.len(),
            self.attack_count
        )
    }
}

impl ArgumentationFramework {
    pub fn new(
        arguments: impl IntoIterator<Item = ArgumentId>,
        attacks: impl IntoIterator<Item = (ArgumentId, ArgumentId)>,
    ) -> Result<Self, AfError> {
        let mut ids: Vec<ArgumentId> = arguments.into_iter().collect();
        ids.sort();
        ids.dedup();
        if ids.len() > MAX_ARGUMENTS {
            return Err(AfError::TooManyArguments { count: ids.len() });
        }
        let mut af = ArgumentationFramework {
            attackers: vec![ArgSet::EMPTY; ids.len()],
            targets: vec![ArgSet::EMPTY; ids.len()],
            ids,
            attack_count: 0,
        };
        for (from, to) in attacks {
            let i = af.index_of(from.as_str())?;
            let j = af.index_of(to.as_str())?;
            if !af.targets[i].contains(j) {
                af.targets[i].insert(j);
                af.attackers[j].insert(i);
                af.attack_count += 1;
            }
        }
        Ok(af)
    }

    /// Convenience constructor from string literals; mostly for tests.
    pub fn from_named(arguments: &[&str], attacks: &[(&str, &str)]) -> Result<Self, AfError> {
        let ids = arguments
            .iter()
            .map(|s| ArgumentId::new(s))
            .collect::<Result<Vec<_>, _>>()?;
        let pairs = attacks
            .iter()
            .map(|(a, b)| Ok((ArgumentId::new(a)?, ArgumentId::new(b)?)))
            .collect::<Result<Vec<_>, AfError>>()?;
        ArgumentationFramework::new(ids, pairs)
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    /// Arguments in canonical order; indices into this slice are the indices
    /// every [`ArgSet`] of this framework refers to.
    pub fn arguments(&self) -> &[ArgumentId] {
        &self.ids
    }

    pub fn id(&self, index: usize) -> &ArgumentId {
        &self.ids[index]
    }

    pub fn index_of(&self, id: &str) -> Result<usize, AfError> {
        self.ids
            .binary_search_by(|probe| probe.as_str().cmp(id))
            .map_err(|_| AfError::UnknownArgument { id: id.to_string() })
    }

    /// Mask holding every argument.
    pub fn all(&self) -> ArgSet {
        ArgSet::first_n(self.ids.len())
    }

    pub fn attackers_of(&self, index: usize) -> ArgSet {
        self.attackers[index]
    }

    pub fn targets_of(&self, index: usize) -> ArgSet {
        self.targets[index]
    }

    pub fn attacks(&self, from: usize, to: usize) -> bool {
        self.targets[from].contains(to)
    }

    pub fn attack_count(&self) -> usize {
        self.attack_count
    }

    /// All attack pairs as `(attacker, target)` index pairs, in canonical
    /// (attacker-major) order.
    pub fn attack_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.attack_count);
        for i in 0..self.ids.len() {
            for j in self.targets[i].iter() {
                out.push((i, j));
            }
        }
        out
    }

    /// Resolve a collection of ids to a mask.
    pub fn set_of<'a>(
        &self,
        ids: impl IntoIterator<Item = &'a ArgumentId>,
    ) -> Result<ArgSet, AfError> {
        let mut s = ArgSet::EMPTY;
        for id in ids {
            s.insert(self.index_of(id.as_str())?);
        }
        Ok(s)
    }

    /// Render a mask back into sorted ids.
    pub fn ids_of(&self, s: ArgSet) -> BTreeSet<ArgumentId> {
        s.iter().map(|i| self.ids[i].clone()).collect()
    }

    // ---- mask-level semantics ----------------------------------------

    /// Arguments of `within` attacked by some member of `s ∩ within`.
    pub fn attacked_by_in(&self, s: ArgSet, within: ArgSet) -> ArgSet {
        let mut hit = ArgSet::EMPTY;
        for i in s.intersect(within).iter() {
            hit = hit.union(self.targets[i]);
        }
        hit.intersect(within)
    }

    /// Arguments attacked by `s` in the full framework.
    pub fn attacked_by(&self, s: ArgSet) -> ArgSet {
        self.attacked_by_in(s, self.all())
    }

    /// No member of `s` attacks another member (or itself).
    pub fn is_conflict_free_mask(&self, s: ArgSet) -> bool {
        self.attacked_by_in(s, s).is_empty()
    }

    /// Members of `within` whose `within`-attackers are all counterattacked
    /// by `s ∩ within`: the defense operator of the induced subframework.
    pub fn defended_in(&self, s: ArgSet, within: ArgSet) -> ArgSet {
        let hit = self.attacked_by_in(s, within);
        let mut out = ArgSet::EMPTY;
        for a in within.iter() {
            if self.attackers[a].intersect(within).is_subset_of(hit) {
                out.insert(a);
            }
        }
        out
    }

    /// Grounded labeling of the subframework induced by `within`, computed
    /// as the least fixed point of [`defended_in`](Self::defended_in) from
    /// the empty set.
    pub fn grounded_in(&self, within: ArgSet) -> MaskLabeling {
        let mut acc = ArgSet::EMPTY;
        loop {
            let next = self.defended_in(acc, within);
            if next == acc {
                break;
            }
            acc = next;
        }
        let rejected = self.attacked_by_in(acc, within);
        MaskLabeling {
            accepted: acc,
            rejected,
            undecided: within.minus(acc).minus(rejected),
        }
    }

    /// Is `s` a complete extension of the subframework induced by `within`?
    /// (Conflict-free and exactly the set of arguments it defends.)
    pub fn is_complete_in(&self, s: ArgSet, within: ArgSet) -> bool {
        s.is_subset_of(within) && self.is_conflict_free_mask(s) && self.defended_in(s, within) == s
    }

    /// Is `s` a stable extension of the subframework induced by `within`?
    /// (Conflict-free and attacking every other member of `within`.)
    pub fn is_stable_in(&self, s: ArgSet, within: ArgSet) -> bool {
        s.is_subset_of(within)
            && self.is_conflict_free_mask(s)
            && within.minus(s).is_subset_of(self.attacked_by_in(s, within))
    }

    /// Visit every stable extension of the subframework induced by `within`,
    /// in canonical order.
    ///
    /// Arguments are assigned in/out by backtracking on the lowest unassigned
    /// index. Putting an argument in forces its neighborhood out; an argument
    /// forced out with no potential attacker left prunes the branch. Leaves
    /// are validated in full, so pruning is purely an optimization.
    pub fn for_each_stable_in(&self, within: ArgSet, f: &mut dyn FnMut(ArgSet)) {
        let mut found = Vec::new();
        self.stable_rec(within, ArgSet::EMPTY, ArgSet::EMPTY, &mut found);
        found.sort_by(|a, b| a.canonical_cmp(*b));
        for s in found {
            f(s);
        }
    }

    fn stable_rec(&self, within: ArgSet, inside: ArgSet, outside: ArgSet, found: &mut Vec<ArgSet>) {
        let unassigned = within.minus(inside).minus(outside);
        let Some(a) = unassigned.iter().next() else {
            let attacked = self.attacked_by_in(inside, within);
            if outside.is_subset_of(attacked) && self.is_conflict_free_mask(inside) {
                found.push(inside);
            }
            return;
        };
        // Branch 1: `a` goes in. Its in-`within` neighborhood goes out, and
        // every argument newly forced out must keep some potential attacker.
        let neighbors = self.attackers[a].union(self.targets[a]).intersect(within);
        if neighbors.intersect(inside.with(a)).is_empty() {
            let out2 = outside.union(neighbors);
            let viable = neighbors
                .minus(outside)
                .iter()
                .all(|x| !self.attackers[x].intersect(within).minus(out2).is_empty());
            if viable {
                self.stable_rec(within, inside.with(a), out2, found);
            }
        }
        // Branch 2: `a` goes out, which needs a live potential attacker.
        let out2 = outside.with(a);
        if !self.attackers[a].intersect(within).minus(out2).is_empty() {
            self.stable_rec(within, inside, out2, found);
        }
    }

    /// Stable extensions of the induced subframework, canonical order.
    pub fn stable_sets_in(&self, within: ArgSet) -> Vec<ArgSet> {
        let mut out = Vec::new();
        self.for_each_stable_in(within, &mut |s| out.push(s));
        out
    }

    /// Is the attack relation restricted to `within` acyclic? Computed by
    /// repeatedly peeling unattacked arguments.
    pub fn is_well_founded_in(&self, within: ArgSet) -> bool {
        let mut live = within;
        loop {
            let mut peeled = live;
            for a in live.iter() {
                if !self.attackers[a].intersect(live).is_empty() {
                    peeled = peeled.minus(ArgSet::singleton(a));
                }
            }
            if peeled.is_empty() {
                return live.is_empty();
            }
            live = live.minus(peeled);
        }
    }

    // ---- id-level semantics -------------------------------------------

    /// Grounded labeling of the whole framework.
    pub fn grounded_labeling(&self) -> Labeling {
        let m = self.grounded_in(self.all());
        Labeling {
            accepted: self.ids_of(m.accepted),
            rejected: self.ids_of(m.rejected),
            undecided: self.ids_of(m.undecided),
        }
    }

    pub fn is_conflict_free(&self, ext: &BTreeSet<ArgumentId>) -> Result<bool, AfError> {
        let s = self.set_of(ext)?;
        Ok(self.is_conflict_free_mask(s))
    }

    pub fn is_complete_extension(&self, ext: &BTreeSet<ArgumentId>) -> Result<bool, AfError> {
        let s = self.set_of(ext)?;
        Ok(self.is_complete_in(s, self.all()))
    }

    pub fn is_stable_extension(&self, ext: &BTreeSet<ArgumentId>) -> Result<bool, AfError> {
        let s = self.set_of(ext)?;
        Ok(self.is_stable_in(s, self.all()))
    }

    /// All stable extensions, canonical order, guarded by
    /// [`DEFAULT_ENUM_BOUND`]; use
    /// [`stable_extensions_bounded`](Self::stable_extensions_bounded) to
    /// raise the guard deliberately.
    pub fn stable_extensions(&self) -> Result<Vec<BTreeSet<ArgumentId>>, AfError> {
        self.stable_extensions_bounded(DEFAULT_ENUM_BOUND)
    }

    pub fn stable_extensions_bounded(
        &self,
        bound: usize,
    ) -> Result<Vec<BTreeSet<ArgumentId>>, AfError> {
        if self.ids.len() > bound {
            return Err(AfError::SizeBoundExceeded {
                size: self.ids.len(),
                bound,
            });
        }
        Ok(self
            .stable_sets_in(self.all())
            .into_iter()
            .map(|s| self.ids_of(s))
            .collect())
    }

    /// A framework is well-founded when its attack graph is acyclic; such
    /// frameworks have exactly one complete extension (the grounded one),
    /// which is stable and leaves nothing undecided.
    pub fn is_well_founded(&self) -> bool {
        self.is_well_founded_in(self.all())
    }
}
