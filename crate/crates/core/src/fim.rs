//! Word problem of free partially commutative inverse monoids.
//!
//! `u = v` in `FIM(Σ, I)` iff `u = v` in the graph group and both words
//! have the same Munn set: the prime prefixes of the reduced prefixes.

use std::collections::BTreeSet;

use crate::alphabet::{ExtendedIndependence, GroupKind, GroupSpec, Independence, Word};
use crate::error::{Error, Result};
use crate::rewriting::TraceRewritingSystem;
use crate::traces::Trace;

/// Prime traces over the doubled alphabet, ordered by length then lex.
pub type MunnSet = BTreeSet<Trace>;

#[derive(Debug, Clone)]
pub struct InverseMonoid {
    system: TraceRewritingSystem,
}

impl InverseMonoid {
    pub fn new(independence: &Independence) -> Self {
        let extended = ExtendedIndependence::new(independence);
        InverseMonoid {
            system: TraceRewritingSystem::graph_group(&extended),
        }
    }

    pub fn from_spec(spec: &GroupSpec) -> Result<Self> {
        match (spec.kind(), spec.independence()) {
            (GroupKind::Fim, Some(i)) => Ok(InverseMonoid::new(i)),
            (kind, _) => Err(Error::KindMismatch { op: "munn", kind }),
        }
    }

    pub fn system(&self) -> &TraceRewritingSystem {
        &self.system
    }

    /// Image in the graph group, as a reduced trace.
    pub fn group_image(&self, u: &Word) -> Trace {
        self.system.reduce_word(&u.doubled_indices())
    }

    pub fn munn_set(&self, u: &Word) -> MunnSet {
        let monoid = self.system.monoid();
        self.system
            .reduce_prefixes(&u.doubled_indices())
            .iter()
            .flat_map(|t| monoid.prime_prefixes(t))
            .collect()
    }

    pub fn equal(&self, u: &Word, v: &Word) -> bool {
        self.group_image(u) == self.group_image(v) && self.munn_set(u) == self.munn_set(v)
    }
}

/// One dotted word per member, in set order.
pub fn render_munn_set(spec: &GroupSpec, set: &MunnSet) -> Vec<String> {
    set.iter().map(|t| spec.render_doubled(t.symbols())).collect()
}
