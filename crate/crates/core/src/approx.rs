//! Approximation operators over a tolerance space.
//!
//! The choice-based operators (`l0`, `u0`, their primitive forms and the
//! lateral pair) go through the block family; the classical, star and `θ₀`
//! operators only need the relation.

use serde::{Deserialize, Serialize};

use crate::blocks::BlockFamily;
use crate::choice::{self, BlockCollection, CollectionFamily};
use crate::space::{Partition, Subset, ToleranceSpace};
use crate::Result;

/// How the empty set's 0-upper approximation is treated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EmptyCover {
    /// `∅^{u0} = ∅` via the empty cover.
    #[default]
    Defined,
    /// `∅^{u0}` is undefined because no block meets `∅`.
    Undefined,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChoiceConfig {
    pub empty_cover: EmptyCover,
}

/// `υ(A) = (A^{l0}, A^{u0}?, A^{l̆}, A^{ŭ})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ApproximationProfile {
    l0: Subset,
    u0: Option<Subset>,
    lateral_l: Subset,
    lateral_u: Subset,
}

impl ApproximationProfile {
    fn new(a: Subset, l0: Subset, u0: Option<Subset>, lateral_l: Subset, lateral_u: Subset) -> Self {
        debug_assert!(l0.is_subset(lateral_l));
        debug_assert!(u0.is_none_or(|u| a.is_subset(u)));
        ApproximationProfile {
            l0,
            u0,
            lateral_l,
            lateral_u,
        }
    }

    pub fn l0(&self) -> Subset {
        self.l0
    }

    pub fn u0(&self) -> Option<Subset> {
        self.u0
    }

    pub fn lateral_l(&self) -> Subset {
        self.lateral_l
    }

    pub fn lateral_u(&self) -> Subset {
        self.lateral_u
    }

    /// Slotwise inclusion; the `u0` slots are compared only when both exist.
    pub fn leq(&self, other: &ApproximationProfile) -> bool {
        self.l0.is_subset(other.l0)
            && self.lateral_l.is_subset(other.lateral_l)
            && self.lateral_u.is_subset(other.lateral_u)
            && match (self.u0, other.u0) {
                (Some(a), Some(b)) => a.is_subset(b),
                _ => true,
            }
    }
}

/// A tolerance space with its block family, ready for approximation.
///
/// Subset arguments must lie inside the universe (checked in debug builds).
#[derive(Clone, Debug)]
pub struct ApproxSpace {
    space: ToleranceSpace,
    family: BlockFamily,
    theta: Partition,
    config: ChoiceConfig,
}

impl ApproxSpace {
    /// Fails if the space has more blocks than a collection can address.
    pub fn new(space: ToleranceSpace, config: ChoiceConfig) -> Result<Self> {
        let family = BlockFamily::enumerate(&space);
        family.ensure_addressable()?;
        let theta = space.theta0();
        Ok(ApproxSpace {
            space,
            family,
            theta,
            config,
        })
    }

    pub fn space(&self) -> &ToleranceSpace {
        &self.space
    }

    pub fn family(&self) -> &BlockFamily {
        &self.family
    }

    pub fn theta(&self) -> &Partition {
        &self.theta
    }

    pub fn config(&self) -> ChoiceConfig {
        self.config
    }

    pub fn universe(&self) -> Subset {
        self.space.universe()
    }

    /// `𝕃𝕊_M(A)`.
    pub fn lower_collections(&self, a: Subset) -> CollectionFamily {
        debug_assert!(a.is_subset(self.universe()));
        choice::maximal_disjoint_in(&self.family, self.family.within_mask(a))
    }

    /// `𝕌𝕊_m(A)`; empty means `A^{u0}` is undefined.
    pub fn upper_collections(&self, a: Subset) -> CollectionFamily {
        debug_assert!(a.is_subset(self.universe()));
        if a.is_empty() && self.config.empty_cover == EmptyCover::Undefined {
            return CollectionFamily::new([]);
        }
        choice::minimal_disjoint_covers_in(&self.family, a)
    }

    pub fn primitive_lower(&self, a: Subset) -> BlockCollection {
        // 𝕃𝕊_M(A) always contains at least ∅.
        choice::lambda_select(&self.family, &self.lower_collections(a))
            .expect("maximal disjoint subfamilies are never empty")
    }

    /// `A^{l0}`.
    pub fn lower_zero(&self, a: Subset) -> Subset {
        self.primitive_lower(a).union(&self.family)
    }

    /// `A^{l̆}`: union of the blocks inside `a`.
    pub fn lateral_lower(&self, a: Subset) -> Subset {
        self.family.union_mask(self.family.within_mask(a))
    }

    pub fn primitive_upper(&self, a: Subset) -> Option<BlockCollection> {
        let covers = self.upper_collections(a);
        if covers.is_empty() {
            None
        } else {
            choice::lambda_select(&self.family, &covers).ok()
        }
    }

    /// `A^{u0}`, absent when `a` has no disjoint block cover.
    pub fn upper_zero(&self, a: Subset) -> Option<Subset> {
        self.primitive_upper(a).map(|c| c.union(&self.family))
    }

    /// `A^{ŭ}`: union of the blocks meeting `a`.
    pub fn lateral_upper(&self, a: Subset) -> Subset {
        self.family.union_mask(self.family.meeting_mask(a))
    }

    pub fn classical_lower(&self, a: Subset) -> Subset {
        self.space.classical_lower(a)
    }

    pub fn classical_upper(&self, a: Subset) -> Subset {
        self.space.classical_upper(a)
    }

    pub fn star_lower(&self, a: Subset) -> Subset {
        self.space.star_lower(a)
    }

    pub fn star_upper(&self, a: Subset) -> Subset {
        self.space.star_upper(a)
    }

    /// Pawlak lower approximation over the `θ₀` classes.
    pub fn theta_lower(&self, a: Subset) -> Subset {
        self.theta.lower(a)
    }

    pub fn theta_upper(&self, a: Subset) -> Subset {
        self.theta.upper(a)
    }

    pub fn profile(&self, a: Subset) -> ApproximationProfile {
        ApproximationProfile::new(
            a,
            self.lower_zero(a),
            self.upper_zero(a),
            self.lateral_lower(a),
            self.lateral_upper(a),
        )
    }

    pub fn is_block(&self, a: Subset) -> bool {
        self.family.is_block(a)
    }

    pub fn is_disjoint_block_union(&self, a: Subset) -> bool {
        choice::is_disjoint_block_union(&self.family, a)
    }

    /// A two-point set whose points are unrelated, i.e. inside no block.
    pub fn is_unrelated_pair(&self, a: Subset) -> bool {
        if a.len() != 2 {
            return false;
        }
        let mut it = a.iter();
        let (x, y) = (it.next().unwrap(), it.next().unwrap());
        !self.space.related(x, y)
    }
}
