//! Block-complement families, the implication `U ⇒ V = (S ∖ U) ∪ V`, and
//! filter enumeration on the resulting finite structures.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::audit::verdict::{AuditVerdict, Counterexample, SpaceCode, Status};
use crate::blocks::BlockFamily;
use crate::quotient::{ClassId, QuotientAlgebra};
use crate::space::{Subset, ToleranceSpace};
use crate::{Error, Result};

/// Largest carrier for filter enumeration (filters are `u64` masks).
pub const MAX_CARRIER: usize = 64;
/// Largest number of distinct base sets in the disjoint-union variant.
pub const MAX_DISJOINT_UNIONS: usize = 4096;

/// The filter notion used by [`maximal_filters`].
pub const FILTER_DEFINITION: &str = "filter: a proper subset F of the carrier with S in F, \
     closed under deduction (U in F and U => V in F imply V in F); maximal under inclusion";

/// Which sets play the role of `B` in `(S ∖ B) ∪ C`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DeltaVariant {
    #[default]
    Blocks,
    /// Nonempty unions of pairwise disjoint blocks.
    DisjointUnions,
}

/// `member = (S ∖ base) ∪ part` with `part ⊆ base`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DeltaWitness {
    pub base: Subset,
    pub part: Subset,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaFamily {
    universe: Subset,
    variant: DeltaVariant,
    /// In subset-rank order.
    sets: Vec<Subset>,
    witnesses: Vec<Vec<DeltaWitness>>,
}

impl DeltaFamily {
    pub fn universe(&self) -> Subset {
        self.universe
    }

    pub fn variant(&self) -> DeltaVariant {
        self.variant
    }

    pub fn sets(&self) -> &[Subset] {
        &self.sets
    }

    pub fn witnesses(&self, i: usize) -> &[DeltaWitness] {
        &self.witnesses[i]
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn position(&self, a: Subset) -> Option<usize> {
        self.sets.binary_search_by(|s| s.cmp_rank(a)).ok()
    }

    pub fn contains(&self, a: Subset) -> bool {
        self.position(a).is_some()
    }
}

/// `Δ(S)`: every `(S ∖ B) ∪ C` with `B` a base set and `C ⊆ B`.
pub fn build_delta(space: &ToleranceSpace, family: &BlockFamily, variant: DeltaVariant) -> Result<DeltaFamily> {
    let universe = space.universe();
    let bases = match variant {
        DeltaVariant::Blocks => family.blocks().iter().map(|b| b.members()).collect(),
        DeltaVariant::DisjointUnions => disjoint_unions(family)?,
    };
    let mut map: BTreeMap<u64, Vec<DeltaWitness>> = BTreeMap::new();
    for base in bases {
        for part in base.subsets() {
            map.entry(((universe - base) | part).bits())
                .or_default()
                .push(DeltaWitness { base, part });
        }
    }
    let mut entries: Vec<(Subset, Vec<DeltaWitness>)> = map
        .into_iter()
        .map(|(bits, mut w)| {
            w.sort();
            w.dedup();
            (Subset::from_bits(bits), w)
        })
        .collect();
    entries.sort_by(|a, b| a.0.cmp_rank(b.0));
    let (sets, witnesses) = entries.into_iter().unzip();
    Ok(DeltaFamily {
        universe,
        variant,
        sets,
        witnesses,
    })
}

fn disjoint_unions(family: &BlockFamily) -> Result<Vec<Subset>> {
    family.ensure_addressable()?;
    let mut out = BTreeSet::new();
    // DFS over disjoint subcollections, each block index added in order.
    let mut stack: Vec<(usize, Subset)> = alloc::vec![(0, Subset::EMPTY)];
    while let Some((next, acc)) = stack.pop() {
        for i in next..family.len() {
            let b = family.block(i);
            if !b.intersects(acc) {
                let u = acc | b;
                out.insert(u);
                if out.len() > MAX_DISJOINT_UNIONS {
                    return Err(Error::CapExceeded {
                        what: "disjoint block unions",
                        size: out.len(),
                        max: MAX_DISJOINT_UNIONS,
                    });
                }
                stack.push((i + 1, u));
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// `U ⇒ V = (universe ∖ U) ∪ V`.
pub fn implies(universe: Subset, u: Subset, v: Subset) -> Subset {
    (universe - u) | v
}

/// `⟨Δ(S), ⇒, S⟩` with its implication table restricted to the carrier.
#[derive(Clone, Debug)]
pub struct TarskiStructure {
    carrier: DeltaFamily,
    // table[i][j]: carrier index of sets[i] ⇒ sets[j], if it is a member.
    table: Vec<Vec<Option<usize>>>,
    top: usize,
}

impl TarskiStructure {
    pub fn new(carrier: DeltaFamily) -> Self {
        let universe = carrier.universe();
        let table = carrier
            .sets()
            .iter()
            .map(|&u| {
                carrier
                    .sets()
                    .iter()
                    .map(|&v| carrier.position(implies(universe, u, v)))
                    .collect()
            })
            .collect();
        let top = carrier
            .position(universe)
            .expect("the universe is (S ∖ B) ∪ B for any base B");
        TarskiStructure { carrier, table, top }
    }

    pub fn carrier(&self) -> &DeltaFamily {
        &self.carrier
    }

    pub fn top(&self) -> Subset {
        self.carrier.sets()[self.top]
    }

    pub fn implies(&self, u: Subset, v: Subset) -> Subset {
        implies(self.carrier.universe(), u, v)
    }

    /// Carrier index of `sets[i] ⇒ sets[j]`, when that lies in the carrier.
    pub fn implies_index(&self, i: usize, j: usize) -> Option<usize> {
        self.table[i][j]
    }

    /// Least deduction-closed set of carrier indices containing `seed` and the top.
    pub fn deductive_closure(&self, seed: u64) -> u64 {
        let k = self.carrier.len();
        let mut f = seed | (1u64 << self.top);
        loop {
            let mut grown = f;
            for u in Subset::from_bits(f).iter() {
                for v in 0..k {
                    if let Some(w) = self.table[u][v] {
                        if grown & (1u64 << w) != 0 {
                            grown |= 1u64 << v;
                        }
                    }
                }
            }
            if grown == f {
                return f;
            }
            f = grown;
        }
    }

    pub fn is_filter(&self, f: u64) -> bool {
        f & (1u64 << self.top) != 0 && self.deductive_closure(f) == f
    }

    fn full_mask(&self) -> u64 {
        let k = self.carrier.len();
        if k == 64 {
            u64::MAX
        } else {
            (1u64 << k) - 1
        }
    }

    pub fn mask_to_sets(&self, f: u64) -> Vec<Subset> {
        Subset::from_bits(f).iter().map(|i| self.carrier.sets()[i]).collect()
    }
}

/// Maximal proper filters as carrier-index masks, in increasing mask order.
///
/// When the whole carrier is the only filter (e.g. a one-point universe),
/// it is returned as the single result.
pub fn maximal_filters(ts: &TarskiStructure) -> Result<Vec<u64>> {
    let k = ts.carrier.len();
    if k > MAX_CARRIER {
        return Err(Error::CapExceeded {
            what: "carrier for filter enumeration",
            size: k,
            max: MAX_CARRIER,
        });
    }
    let full = ts.full_mask();
    let start = ts.deductive_closure(0);
    if start == full {
        return Ok(alloc::vec![full]);
    }
    let mut seen = BTreeSet::new();
    let mut maximal = BTreeSet::new();
    let mut stack = alloc::vec![start];
    seen.insert(start);
    while let Some(f) = stack.pop() {
        let mut is_max = true;
        for x in Subset::from_bits(full & !f).iter() {
            let g = ts.deductive_closure(f | (1u64 << x));
            if g != full {
                is_max = false;
                if seen.insert(g) {
                    stack.push(g);
                }
            }
        }
        if is_max {
            maximal.insert(f);
        }
    }
    Ok(maximal.into_iter().collect())
}

/// Checks that the carrier is closed under `⇒`.
pub fn closure_audit(ts: &TarskiStructure, space: &ToleranceSpace) -> AuditVerdict {
    let sets = ts.carrier.sets();
    let mut instances = 0;
    for (i, &u) in sets.iter().enumerate() {
        for (j, &v) in sets.iter().enumerate() {
            instances += 1;
            if ts.implies_index(i, j).is_none() {
                let w = ts.implies(u, v);
                return AuditVerdict {
                    claim: "TAR1".into(),
                    scope: format!("all {} carrier pairs", sets.len() * sets.len()),
                    status: Status::Refuted,
                    instances,
                    vacuous: 0,
                    counterexample: Some(Counterexample {
                        space: SpaceCode::of(space),
                        witnesses: alloc::vec![u, v],
                        trace: format!("{u} => {v} = {w}, not in the carrier"),
                    }),
                };
            }
        }
    }
    AuditVerdict {
        claim: "TAR1".into(),
        scope: format!("all {} carrier pairs", sets.len() * sets.len()),
        status: Status::Verified,
        instances,
        vacuous: 0,
        counterexample: None,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DeltaClassKind {
    /// Every member is `S ∖ B` for a base `B`.
    ComplementOfBlock,
    /// Every member strictly contains some `S ∖ B`.
    ComplementPlusMore,
    Mixed,
}

#[derive(Clone, Debug, Serialize)]
pub struct DeltaClass {
    pub class: ClassId,
    pub members: Vec<Subset>,
    pub kind: DeltaClassKind,
}

#[derive(Clone, Debug, Serialize)]
pub struct SigmaClassification {
    pub classes: Vec<DeltaClass>,
    pub verdict: AuditVerdict,
}

/// Groups the carrier by σ-class and labels each class by its witnesses.
pub fn sigma_classify_delta(q: &QuotientAlgebra, delta: &DeltaFamily) -> SigmaClassification {
    let mut groups: BTreeMap<ClassId, (Vec<Subset>, bool, bool)> = BTreeMap::new();
    for (i, &a) in delta.sets().iter().enumerate() {
        let entry = groups.entry(q.class_of(a)).or_default();
        entry.0.push(a);
        for w in delta.witnesses(i) {
            if w.part.is_empty() {
                entry.1 = true;
            } else {
                entry.2 = true;
            }
        }
    }
    let classes: Vec<DeltaClass> = groups
        .into_iter()
        .map(|(class, (members, plain, more))| DeltaClass {
            class,
            members,
            kind: match (plain, more) {
                (true, false) => DeltaClassKind::ComplementOfBlock,
                (false, true) => DeltaClassKind::ComplementPlusMore,
                _ => DeltaClassKind::Mixed,
            },
        })
        .collect();
    let space = q.approx().space();
    let mixed = classes.iter().find(|c| c.kind == DeltaClassKind::Mixed);
    let verdict = AuditVerdict {
        claim: "TAR2".into(),
        scope: format!("{} σ-classes over {} carrier sets", classes.len(), delta.len()),
        status: if mixed.is_some() {
            Status::Refuted
        } else {
            Status::Verified
        },
        instances: classes.len() as u64,
        vacuous: 0,
        counterexample: mixed.map(|c| Counterexample {
            space: SpaceCode::of(space),
            witnesses: c.members.clone(),
            trace: format!(
                "class {:?} holds both plain block complements and strict extensions",
                c.class
            ),
        }),
    };
    SigmaClassification { classes, verdict }
}

pub fn describe_filter(ts: &TarskiStructure, f: u64) -> String {
    let sets = ts.mask_to_sets(f);
    let mut s = String::from("{");
    for (i, a) in sets.iter().enumerate() {
        if i > 0 {
            s.push_str(", ");
        }
        s.push_str(&format!("{a}"));
    }
    s.push('}');
    s
}
