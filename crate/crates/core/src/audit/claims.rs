//! The closed claim registry and one check procedure per claim.

use alloc::format;
use alloc::string::String;

use serde::{Serialize, Serializer};

use super::judge::{Judge, Outcome};
use crate::approx::{ApproxSpace, ApproximationProfile, ChoiceConfig};
use crate::quotient::{ClassId, PartialValue, QuotientAlgebra};
use crate::space::{Subset, ToleranceSpace};
use crate::{choice, tarski, Error, Result};

/// What a claim quantifies over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase", tag = "kind", content = "arity")]
pub enum Domain {
    /// One instance per space.
    Space,
    /// Tuples of subsets of the universe.
    Subsets(u8),
    /// Tuples of σ-classes.
    Classes(u8),
}

/// Everything a check may consult for one space.
#[derive(Clone, Debug)]
pub struct Context {
    q: QuotientAlgebra,
}

impl Context {
    pub fn new(space: ToleranceSpace, config: ChoiceConfig) -> Result<Self> {
        Ok(Context {
            q: QuotientAlgebra::build(space, config)?,
        })
    }

    pub fn quotient(&self) -> &QuotientAlgebra {
        &self.q
    }

    pub fn approx(&self) -> &ApproxSpace {
        self.q.approx()
    }

    pub fn space(&self) -> &ToleranceSpace {
        self.q.approx().space()
    }

    /// Number of values one tuple coordinate ranges over.
    pub fn radix(&self, domain: Domain) -> u64 {
        match domain {
            Domain::Space => 1,
            Domain::Subsets(_) => 1u64 << self.space().size(),
            Domain::Classes(_) => self.q.len() as u64,
        }
    }

    // Set-level operators, read from the class profiles.

    fn prof(&self, a: Subset) -> &ApproximationProfile {
        &self.q.class(self.q.class_of(a)).profile
    }
    fn l0(&self, a: Subset) -> Subset {
        self.prof(a).l0()
    }
    fn u0(&self, a: Subset) -> Option<Subset> {
        self.prof(a).u0()
    }
    fn ll(&self, a: Subset) -> Subset {
        self.prof(a).lateral_l()
    }
    fn uu(&self, a: Subset) -> Subset {
        self.prof(a).lateral_u()
    }
    fn sim(&self, a: Subset) -> Subset {
        self.space().universe() - self.uu(a)
    }
    /// `(A^{u0} ∪ B^{u0})^{u0}`.
    fn cvee(&self, a: Subset, b: Subset) -> Option<Subset> {
        self.u0(self.u0(a)? | self.u0(b)?)
    }
    /// `(A^{u0} ∩ B^{u0})^{l0}`.
    fn cwedge(&self, a: Subset, b: Subset) -> Option<Subset> {
        Some(self.l0(self.u0(a)? & self.u0(b)?))
    }
}

macro_rules! registry {
    ($( $variant:ident => $tag:literal, $domain:expr, $eval:ident, $stmt:literal; )*) => {
        /// Identifier of one audited claim.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum ClaimId { $($variant),* }

        impl ClaimId {
            pub const ALL: &'static [ClaimId] = &[$(ClaimId::$variant),*];

            pub fn tag(self) -> &'static str {
                match self { $(ClaimId::$variant => $tag),* }
            }

            pub fn domain(self) -> Domain {
                match self { $(ClaimId::$variant => $domain),* }
            }

            pub fn statement(self) -> &'static str {
                match self { $(ClaimId::$variant => $stmt),* }
            }

            pub(crate) fn eval(self, ctx: &Context, t: &[u64]) -> Outcome {
                match self { $(ClaimId::$variant => $eval(ctx, t)),* }
            }
        }
    };
}

use Domain::{Classes, Space, Subsets};

registry! {
    T1a => "T1a", Subsets(1), t1a, "(A^l0)^l0 = A^l0 ⊆ A^l̆";
    T1b => "T1b", Subsets(1), t1b, "A^l0 ⊆ (A^l0)^u0";
    T1c => "T1c", Subsets(1), t1c, "(A^u0)^l0 ≐ A^u0 ≐ (A^u0)^u0 ⊆ A^ŭ";
    T1d => "T1d", Subsets(2), t1d, "A ⊆ B → A^l0 ⊆ B^l0";
    T1e => "T1e", Subsets(2), t1e, "A ⊆ B, A ⊆ A^u0, B ⊆ B^u0 → A^u0 ⊆ B^u0";
    T1f => "T1f", Subsets(2), t1f, "A ⊆ B → A^l̆ ⊆ B^l̆, A^ŭ ⊆ B^ŭ";
    T1g => "T1g", Subsets(1), t1g, "A^l0 = A = A^l̆ → A is a union of disjoint blocks";
    T1h => "T1h", Subsets(1), t1h, "A^l0 ⊆ A^l ⊆ A^l* ⊆ A^lθ ⊆ A ⊆ A^uθ ⊆ A^u0 (if defined) ⊆ A^u*";
    T1i => "T1i", Subsets(1), t1i, "A a block → A^l0 = A = A^l̆";
    T2 => "T2", Subsets(1), t2, "A ⊆ ~~A where ~A = S ∖ A^ŭ";
    PR3a => "PR3a", Subsets(1), pr3a, "A ⋎ A ≐ A^u0u0";
    PR3b => "PR3b", Subsets(2), pr3b, "(A ⋎ B)^l0 = A ⋎ B (if defined)";
    PR3c => "PR3c", Subsets(1), pr3c, "A an unrelated pair → A^l0 = ∅ = A^l̆, A^u0 undefined";
    PR3d => "PR3d", Subsets(1), pr3d, "A an unrelated pair → A^ŭ is a union of at least two blocks";
    PR3e => "PR3e", Subsets(2), pr3e, "A ⋏ A ≐ A^u0; A ⋏ B ≐ B ⋏ A";
    PR3f => "PR3f", Subsets(2), pr3f, "A ⊆ B ⊆ B^u0 → A ⋎ B = B^u0";
    T3a => "T3a", Classes(1), t3a, "x a disjoint-block-union class ↔ L0 x = L̆ x = x";
    T3b => "T3b", Classes(1), t3b, "x = U0 x → x a disjoint-block-union class";
    T3c => "T3c", Classes(1), t3c, "x a single-block class → L0 x = U0 x = x = L̆ x";
    T3d => "T3d", Classes(1), t3d, "[∀y ⋨ x: y ≠ L0 y ≠ U0 y] ∧ L0 x = U0 x = x ↔ x a single-block class";
    T3e => "T3e", Classes(1), t3e, "[∀y ⋨ x: L0 y ⋨ L0 x] ∧ L0 x = U0 x = x ↔ x a single-block class";
    T3f => "T3f", Classes(1), t3f, "x not single-block, L0 x ∈ {0} ∪ single-block, U0 x undefined → x holds an unrelated pair";
    T3g => "T3g", Classes(1), t3g, "IU(x) → ⊖x ≤ ⊖L0 x";
    T4a => "T4a", Classes(2), t4a, "x ⋎ y ≐ y ⋎ x; x ⋏ y ≐ y ⋏ x; x ⋎ x ≐ U0U0 x; x ⋏ x ≐ U0 x";
    T4b => "T4b", Classes(1), t4b, "L0 x ≤ L̆ x ≤ x ≤ Ŭ x; IU(x) → x ≤ U0 x";
    T4c => "T4c", Classes(1), t4c, "L0L0 x = L0 x; IU(x) → U0 x ≤ U0U0 x";
    T4d => "T4d", Classes(1), t4d, "L̆L0 x = L0 x; L0L̆ x ≤ L̆ x";
    T4e => "T4e", Classes(1), t4e, "L̆L̆ x = L̆ x; IU(x) → L0U0 x = U0 x";
    T4f => "T4f", Classes(1), t4f, "L0 x ≤ U0L0 x; Ŭ x ≤ ŬŬ x";
    T4g => "T4g", Classes(1), t4g, "IU(x) → x ≤ U0 x ≤ Ŭ x ≤ ŬU0 x ≤ ŬŬ x";
    T4h => "T4h", Classes(2), t4h, "x ≤ y → L0 x ≤ L0 y, Ŭ x ≤ Ŭ y, L̆ x ≤ L̆ y";
    T4i => "T4i", Classes(2), t4i, "x ≤ y, IU(x) → U0 x ≤ U0 y";
    T4j => "T4j", Classes(2), t4j, "x ≤ y, IU(x, y) → x ⋏ y = U0 x = x ⊼ y, x ⋎ y = U0 y = x ⊻ y";
    T4k => "T4k", Classes(4), t4k, "IU(x, y, a, b), x ≤ y, a ≤ b → x ⋏ a ≤ y ⋏ b";
    T4l => "T4l", Classes(4), t4l, "IU(x, y, a, b, x ⊻ a, y ⊻ b), x ≤ y, a ≤ b → x ⋎ a ≤ y ⋎ b";
    T4m => "T4m", Classes(1), t4m, "t(x) = x ↔ ¬IU(x), s(Ŭ x) = 0, L0 x ⋨ x, ∀y ⋨ x: t y = 0, at most two classes strictly between 0 and x";
    T4n => "T4n", Classes(1), t4n, "IU(x) → ~⊖x ≤ ⊖~x";
    T4o => "T4o", Classes(1), t4o, "~x ≤ ~L0 x; ~0 = 1; ~1 = 0";
    T4p => "T4p", Classes(1), t4p, "x ≤ ~~x; IU(x) → ~U0 x ≤ ~x";
    T4q => "T4q", Classes(1), t4q, "~Ŭ x ≤ ~x; IU(x) → ~Ŭ x ≤ ~U0 x";
    T4r => "T4r", Classes(1), t4r, "~x ≤ ~L̆ x ≤ ~L0 x; IN(x) → ⊖x ≤ ⊖L0 x";
    T4s => "T4s", Classes(1), t4s, "IU(~x), IU(x) → ~⊖x ≤ ⊖~x; ⊖0 = 1; ¬IN(1)";
    T4t => "T4t", Classes(1), t4t, "IU(x) → ⊖x ≤ ⊖L0 x; IN(x) → ⊖Ŭ x ≤ ⊖x, ⊖U0 x = ⊖x";
    T4u => "T4u", Classes(1), t4u, "[∀y ⋨ x: L0 y ⋨ L0 x] ∧ L0 x = U0 x = x ↔ s(x) = x";
    T4v => "T4v", Classes(2), t4v, "x ⊔ y = y ⊔ x; x ⊔ x = x; x ⊻ y ≐ U0 x ⊔ U0 y";
    T4w => "T4w", Classes(2), t4w, "x ≤ y → x, y ≤ x ⊔ y; Ŭ x ⊔ Ŭ y ≤ Ŭ(x ⊔ y)";
    IMPa => "IMPa", Classes(1), impa, "IU(x) → x ↣ x = 1; IU(x) → U0 x ≤ 1 ↣ x";
    IMPb => "IMPb", Classes(2), impb, "IU(x, y) → U0 x ≤ x ↣ (y ↣ x); IU(x) → x ↣ 0 = ⊖x";
    IMPc => "IMPc", Classes(1), impc, "x ⇝ x = 1; x ≤ 1 ⇝ x; x ⇝ 0 = ~x";
    IMPd => "IMPd", Classes(3), impd, "(x ⇝ y) ⊔ (x ⇝ z) ≤ x ⇝ (y ⊔ z)";
    IMPe => "IMPe", Classes(3), impe, "(x ⇝ z) ⊓ (y ⇝ z) ≤ (x ⊔ y) ⇝ z";
    AER01 => "AER01", Classes(2), t4a, "x ⋎ y ≐ y ⋎ x; x ⋏ y ≐ y ⋏ x; x ⋎ x ≐ U0U0 x; x ⋏ x ≐ U0 x";
    AER02 => "AER02", Classes(1), aer02, "L0 x ≤ L̆ x ≤ x ≤ Ŭ x; IU(x) → x ≤ U0 x ≤ U0U0 x";
    AER03 => "AER03", Classes(1), aer03, "L0L0 x = L0 x; L̆L0 x = L0 x; L0L̆ x ≤ L̆ x";
    AER04 => "AER04", Classes(1), aer04, "L̆L̆ x = L̆ x; IU(x) → L0U0 x = U0 x; L0 x ≤ U0L0 x";
    AER05 => "AER05", Classes(1), aer05, "Ŭ x ≤ ŬŬ x; IU(x) → x ≤ U0 x ≤ Ŭ x ≤ ŬU0 x ≤ ŬŬ x";
    AER06 => "AER06", Classes(2), t4j, "x ≤ y, IU(x, y) → x ⋏ y = U0 x = x ⊼ y, x ⋎ y = U0 y = x ⊻ y";
    AER07 => "AER07", Classes(4), t4k, "IU(x, y, a, b), x ≤ y, a ≤ b → x ⋏ a ≤ y ⋏ b";
    AER08 => "AER08", Classes(4), t4l, "IU(x, y, a, b, x ⊻ a, y ⊻ b), x ≤ y, a ≤ b → x ⋎ a ≤ y ⋎ b";
    AER09 => "AER09", Classes(2), t4h, "x ≤ y → L0 x ≤ L0 y, Ŭ x ≤ Ŭ y, L̆ x ≤ L̆ y";
    AER10 => "AER10", Classes(2), t4i, "x ≤ y, IU(x) → U0 x ≤ U0 y";
    AER11 => "AER11", Classes(1), t4m, "t(x) = x ↔ ¬IU(x), s(Ŭ x) = 0, L0 x ⋨ x, ∀y ⋨ x: t y = 0, at most two classes strictly between 0 and x";
    AER12 => "AER12", Classes(1), aer12, "IU(x) → ~⊖x ≤ ⊖~x; ~x ≤ ~L0 x; ~0 = 1; ~1 = 0";
    AER13 => "AER13", Classes(1), aer13, "IU(~~x) → x ≤ ~~x; IU(x) → ~U0 x ≤ ~x";
    AER14 => "AER14", Classes(1), t4q, "~Ŭ x ≤ ~x; IU(x) → ~Ŭ x ≤ ~U0 x";
    AER15 => "AER15", Classes(1), t4r, "~x ≤ ~L̆ x ≤ ~L0 x; IN(x) → ⊖x ≤ ⊖L0 x";
    AER16 => "AER16", Classes(1), t4s, "IU(~x), IU(x) → ~⊖x ≤ ⊖~x; ⊖0 = 1; ¬IN(1)";
    AER17 => "AER17", Classes(1), t4t, "IU(x) → ⊖x ≤ ⊖L0 x; IN(x) → ⊖Ŭ x ≤ ⊖x, ⊖U0 x = ⊖x";
    AER18 => "AER18", Classes(1), aer18, "[∀y: 0 ≤ y ≤ x → y = 0 or y = x] → ∃z: s(z) = z, x ≤ z";
    AER19 => "AER19", Classes(2), aer19, "s(x) = x, x ⋨ y → s(y) = 0; s(x) = x, y ⋨ x → s(y) = 0";
    AER20 => "AER20", Classes(2), aer20, "0 ≤ x ≤ 1; x ⊔ y = y ⊔ x; x ⊔ x = x";
    AER21 => "AER21", Classes(2), t4w, "x ≤ y → x, y ≤ x ⊔ y; Ŭ x ⊔ Ŭ y ≤ Ŭ(x ⊔ y)";
    DRV1 => "DRV1", Classes(2), drv1, "x ⊻ y is defined iff U0 x ⊔ U0 y is, and then they are equal";
    DRV2 => "DRV2", Classes(2), drv2, "x ≤ y ∧ x ≠ y ↔ x ⋨ y";
    DRV3 => "DRV3", Classes(2), drv3, "x ⋎ y ≐ U0(x ⊻ y); x ⋏ y ≐ L0(x ⊼ y); IN(x) ↔ ⊖x defined";
    DRV4 => "DRV4", Classes(1), drv4, "s(x) = x iff [∀y ⋨ x: L0 y ⋨ L0 x] ∧ L0 x = U0 x = x, else s(x) = 0";
    DRV5 => "DRV5", Classes(1), drv5, "IU(x) ↔ U0 x defined";
    REP => "REP", Space, rep, "the quotient satisfies every AER axiom group and derived definition";
    COH => "COH", Space, coh, "λ(L(a, b)) = a and λ(U(a, b)) = b for all a ≺ b, a ≠ b";
    TAR1 => "TAR1", Space, tar1, "Δ(S) is closed under U ⇒ V = (S ∖ U) ∪ V";
    TAR2 => "TAR2", Space, tar2, "each σ-class of Δ(S) is of block-complement type or complement-plus-more type";
}

impl ClaimId {
    pub fn from_tag(tag: &str) -> Result<ClaimId> {
        ClaimId::ALL
            .iter()
            .copied()
            .find(|c| c.tag().eq_ignore_ascii_case(tag))
            .ok_or_else(|| Error::UnknownClaim(tag.into()))
    }

    /// The axiom groups and derived-definition checks making up `REP`.
    pub fn aer_suite() -> impl Iterator<Item = ClaimId> {
        ClaimId::ALL
            .iter()
            .copied()
            .filter(|c| c.tag().starts_with("AER") || c.tag().starts_with("DRV"))
    }
}

impl Serialize for ClaimId {
    fn serialize<S: Serializer>(&self, s: S) -> core::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

fn sub(t: &[u64], i: usize) -> Subset {
    Subset::from_bits(t[i])
}

fn cls(t: &[u64], i: usize) -> ClassId {
    ClassId(t[i] as u32)
}

// ---- subset-level claims ----

fn t1a(c: &Context, t: &[u64]) -> Outcome {
    let a = sub(t, 0);
    let mut j = Judge::new(&c.q);
    j.seq("(A^l0)^l0 = A^l0", c.l0(c.l0(a)), c.l0(a));
    j.sub("A^l0 ⊆ A^l̆", c.l0(a), c.ll(a));
    j.outcome()
}

fn t1b(c: &Context, t: &[u64]) -> Outcome {
    let a = sub(t, 0);
    let mut j = Judge::new(&c.q);
    j.sub("A^l0 ⊆ (A^l0)^u0", c.l0(a), c.u0(c.l0(a)));
    j.outcome()
}

fn t1c(c: &Context, t: &[u64]) -> Outcome {
    let a = sub(t, 0);
    let mut j = Judge::new(&c.q);
    let u = c.u0(a);
    j.sweq("(A^u0)^l0 ≐ A^u0", u.map(|u| c.l0(u)), u);
    j.sweq("A^u0 ≐ (A^u0)^u0", u, u.and_then(|u| c.u0(u)));
    j.sub_w("(A^u0)^u0 ⊆ A^ŭ", u.and_then(|u| c.u0(u)), c.uu(a));
    j.outcome()
}

fn t1d(c: &Context, t: &[u64]) -> Outcome {
    let (a, b) = (sub(t, 0), sub(t, 1));
    let mut j = Judge::new(&c.q);
    if a.is_subset(b) {
        j.sub("A^l0 ⊆ B^l0", c.l0(a), c.l0(b));
    }
    j.outcome()
}

fn t1e(c: &Context, t: &[u64]) -> Outcome {
    let (a, b) = (sub(t, 0), sub(t, 1));
    let mut j = Judge::new(&c.q);
    if let (true, Some(ua), Some(ub)) = (a.is_subset(b), c.u0(a), c.u0(b)) {
        j.sub("A^u0 ⊆ B^u0", ua, ub);
    }
    j.outcome()
}

fn t1f(c: &Context, t: &[u64]) -> Outcome {
    let (a, b) = (sub(t, 0), sub(t, 1));
    let mut j = Judge::new(&c.q);
    if a.is_subset(b) {
        j.sub("A^l̆ ⊆ B^l̆", c.ll(a), c.ll(b));
        j.sub("A^ŭ ⊆ B^ŭ", c.uu(a), c.uu(b));
    }
    j.outcome()
}

fn t1g(c: &Context, t: &[u64]) -> Outcome {
    let a = sub(t, 0);
    let mut j = Judge::new(&c.q);
    if c.l0(a) == a && c.ll(a) == a {
        j.holds("A is a union of disjoint blocks", c.approx().is_disjoint_block_union(a));
    }
    j.outcome()
}

fn t1h(c: &Context, t: &[u64]) -> Outcome {
    let a = sub(t, 0);
    let ap = c.approx();
    let mut j = Judge::new(&c.q);
    let (l, ls, lt) = (ap.classical_lower(a), ap.star_lower(a), ap.theta_lower(a));
    let (ut, us) = (ap.theta_upper(a), ap.star_upper(a));
    j.sub("A^l0 ⊆ A^l", c.l0(a), l);
    j.sub("A^l ⊆ A^l*", l, ls);
    j.sub("A^l* ⊆ A^lθ", ls, lt);
    j.sub("A^lθ ⊆ A", lt, a);
    j.sub("A ⊆ A^uθ", a, ut);
    match c.u0(a) {
        Some(u) => {
            j.sub("A^uθ ⊆ A^u0", ut, u);
            j.sub("A^u0 ⊆ A^u*", u, us);
        }
        None => j.sub("A^uθ ⊆ A^u*", ut, us),
    }
    j.outcome()
}

fn t1i(c: &Context, t: &[u64]) -> Outcome {
    let a = sub(t, 0);
    let mut j = Judge::new(&c.q);
    if c.approx().is_block(a) {
        j.seq("A^l0 = A", c.l0(a), a);
        j.seq("A^l̆ = A", c.ll(a), a);
    }
    j.outcome()
}

fn t2(c: &Context, t: &[u64]) -> Outcome {
    let a = sub(t, 0);
    let mut j = Judge::new(&c.q);
    j.sub("A ⊆ ~~A", a, c.sim(c.sim(a)));
    j.outcome()
}

fn pr3a(c: &Context, t: &[u64]) -> Outcome {
    let a = sub(t, 0);
    let mut j = Judge::new(&c.q);
    j.sweq("A ⋎ A ≐ A^u0u0", c.cvee(a, a), c.u0(a).and_then(|u| c.u0(u)));
    j.outcome()
}

fn pr3b(c: &Context, t: &[u64]) -> Outcome {
    let (a, b) = (sub(t, 0), sub(t, 1));
    let mut j = Judge::new(&c.q);
    if let Some(v) = c.cvee(a, b) {
        j.seq("(A ⋎ B)^l0 = A ⋎ B", c.l0(v), v);
    }
    j.outcome()
}

fn pr3c(c: &Context, t: &[u64]) -> Outcome {
    let a = sub(t, 0);
    let mut j = Judge::new(&c.q);
    if c.approx().is_unrelated_pair(a) {
        j.seq("A^l0 = ∅", c.l0(a), Subset::EMPTY);
        j.seq("A^l̆ = ∅", c.ll(a), Subset::EMPTY);
        j.holds("A^u0 undefined", c.u0(a).is_none());
    }
    j.outcome()
}

fn pr3d(c: &Context, t: &[u64]) -> Outcome {
    let a = sub(t, 0);
    let mut j = Judge::new(&c.q);
    if c.approx().is_unrelated_pair(a) {
        let u = c.uu(a);
        let parts = c.approx().family().blocks_within(u).len();
        j.holds("A^ŭ is a union of at least two blocks", parts >= 2 && !c.approx().is_block(u));
    }
    j.outcome()
}

fn pr3e(c: &Context, t: &[u64]) -> Outcome {
    let (a, b) = (sub(t, 0), sub(t, 1));
    let mut j = Judge::new(&c.q);
    j.sweq("A ⋏ A ≐ A^u0", c.cwedge(a, a), c.u0(a));
    j.sweq("A ⋏ B ≐ B ⋏ A", c.cwedge(a, b), c.cwedge(b, a));
    j.outcome()
}

fn pr3f(c: &Context, t: &[u64]) -> Outcome {
    let (a, b) = (sub(t, 0), sub(t, 1));
    let mut j = Judge::new(&c.q);
    if let (true, Some(ub)) = (a.is_subset(b), c.u0(b)) {
        j.seq("A ⋎ B = B^u0", c.cvee(a, b), ub);
    }
    j.outcome()
}

// ---- class-level claims ----

/// `[∀y ⋨ x: L0 y ⋨ L0 x] ∧ L0 x = U0 x = x`.
fn lower_chain_condition(q: &QuotientAlgebra, x: ClassId) -> bool {
    q.L0(x) == x
        && q.U0(x) == Some(x)
        && q.ids()
            .filter(|&y| q.lneq(y, x))
            .all(|y| q.lneq(q.L0(y), q.L0(x)))
}

fn contains_unrelated_pair(c: &Context, x: ClassId) -> bool {
    c.q.class(x).members.iter().any(|&m| !c.space().is_clique(m))
}

fn t3a(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let x = cls(t, 0);
    let mut j = Judge::new(q);
    let fixed = q.L0(x) == x && q.Lbreve(x) == x;
    j.holds("disjoint-block-union class ↔ L0 x = L̆ x = x", q.is_disjoint_union_class(x) == fixed);
    j.outcome()
}

fn t3b(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let x = cls(t, 0);
    let mut j = Judge::new(q);
    if q.U0(x) == Some(x) {
        j.holds("x is a disjoint-block-union class", q.is_disjoint_union_class(x));
    }
    j.outcome()
}

fn t3c(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let x = cls(t, 0);
    let mut j = Judge::new(q);
    if q.is_single_block_class(x) {
        j.eq("L0 x = x", q.L0(x), x);
        j.eq("U0 x = x", q.U0(x), x);
        j.eq("L̆ x = x", q.Lbreve(x), x);
    }
    j.outcome()
}

fn t3d(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let x = cls(t, 0);
    let mut j = Judge::new(q);
    // ≠ is the negation of `=`, so an undefined U0 y makes `L0 y ≠ U0 y` true.
    let cond = q.L0(x) == x
        && q.U0(x) == Some(x)
        && q.ids()
            .filter(|&y| q.lneq(y, x))
            .all(|y| y != q.L0(y) && q.U0(y) != Some(q.L0(y)));
    j.holds("condition ↔ single-block class", cond == q.is_single_block_class(x));
    j.outcome()
}

fn t3e(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let x = cls(t, 0);
    let mut j = Judge::new(q);
    j.holds(
        "condition ↔ single-block class",
        lower_chain_condition(q, x) == q.is_single_block_class(x),
    );
    j.outcome()
}

fn t3f(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let x = cls(t, 0);
    let mut j = Judge::new(q);
    let l = q.L0(x);
    if !q.is_single_block_class(x)
        && (l == q.zero() || q.is_single_block_class(l))
        && q.U0(x).is_none()
    {
        j.holds("x holds a set containing an unrelated pair", contains_unrelated_pair(c, x));
    }
    j.outcome()
}

fn t3g(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let x = cls(t, 0);
    let mut j = Judge::new(q);
    if q.iu(x) {
        j.le("⊖x ≤ ⊖L0 x", q.ominus(x), q.ominus(q.L0(x)));
    }
    j.outcome()
}

fn u0u0(q: &QuotientAlgebra, x: ClassId) -> PartialValue {
    q.U0(x).and_then(|u| q.U0(u))
}

fn t4a(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let (x, y) = (cls(t, 0), cls(t, 1));
    let mut j = Judge::new(q);
    j.weq("x ⋎ y ≐ y ⋎ x", q.curlyvee(x, y), q.curlyvee(y, x));
    j.weq("x ⋏ y ≐ y ⋏ x", q.curlywedge(x, y), q.curlywedge(y, x));
    j.weq("x ⋎ x ≐ U0U0 x", q.curlyvee(x, x), u0u0(q, x));
    j.weq("x ⋏ x ≐ U0 x", q.curlywedge(x, x), q.U0(x));
    j.outcome()
}

fn lower_lateral_chain(j: &mut Judge, q: &QuotientAlgebra, x: ClassId) {
    j.le("L0 x ≤ L̆ x", q.L0(x), q.Lbreve(x));
    j.le("L̆ x ≤ x", q.Lbreve(x), x);
    j.le("x ≤ Ŭ x", x, q.Ubreve(x));
}

fn t4b(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let x = cls(t, 0);
    let mut j = Judge::new(q);
    lower_lateral_chain(&mut j, q, x);
    if q.iu(x) {
        j.le("x ≤ U0 x", x, q.U0(x));
    }
    j.outcome()
}

fn t4c(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let x = cls(t, 0);
    let mut j = Judge::new(q);
    j.eq("L0L0 x = L0 x", q.L0(q.L0(x)), q.L0(x));
    if q.iu(x) {
        j.le("U0 x ≤ U0U0 x", q.U0(x), u0u0(q, x));
    }
    j.outcome()
}

fn t4d(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let x = cls(t, 0);
    let mut j = Judge::new(q);
    j.eq("L̆L0 x = L0 x", q.Lbreve(q.L0(x)), q.L0(x));
    j.le("L0L̆ x ≤ L̆ x", q.L0(q.Lbreve(x)), q.Lbreve(x));
    j.outcome()
}

fn t4e(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let x = cls(t, 0);
    let mut j = Judge::new(q);
    j.eq("L̆L̆ x = L̆ x", q.Lbreve(q.Lbreve(x)), q.Lbreve(x));
    if let Some(u) = q.U0(x) {
        j.eq("L0U0 x = U0 x", q.L0(u), u);
    }
    j.outcome()
}

fn t4f(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let x = cls(t, 0);
    let mut j = Judge::new(q);
    j.le("L0 x ≤ U0L0 x", q.L0(x), q.U0(q.L0(x)));
    j.le("Ŭ x ≤ ŬŬ x", q.Ubreve(x), q.Ubreve(q.Ubreve(x)));
    j.outcome()
}

fn upper_chain(j: &mut Judge, q: &QuotientAlgebra, x: ClassId, u: ClassId) {
    j.le("x ≤ U0 x", x, u);
    j.le("U0 x ≤ Ŭ x", u, q.Ubreve(x));
    j.le("Ŭ x ≤ ŬU0 x", q.Ubreve(x), q.Ubreve(u));
    j.le("ŬU0 x ≤ ŬŬ x", q.Ubreve(u), q.Ubreve(q.Ubreve(x)));
}

fn t4g(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let x = cls(t, 0);
    let mut j = Judge::new(q);
    if let Some(u) = q.U0(x) {
        upper_chain(&mut j, q, x, u);
    }
    j.outcome()
}

fn t4h(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let (x, y) = (cls(t, 0), cls(t, 1));
    let mut j = Judge::new(q);
    if q.leq(x, y) {
        j.le("L0 x ≤ L0 y", q.L0(x), q.L0(y));
        j.le("Ŭ x ≤ Ŭ y", q.Ubreve(x), q.Ubreve(y));
        j.le("L̆ x ≤ L̆ y", q.Lbreve(x), q.Lbreve(y));
    }
    j.outcome()
}

fn t4i(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let (x, y) = (cls(t, 0), cls(t, 1));
    let mut j = Judge::new(q);
    if q.leq(x, y) && q.iu(x) {
        j.le("U0 x ≤ U0 y", q.U0(x), q.U0(y));
    }
    j.outcome()
}

fn t4j(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let (x, y) = (cls(t, 0), cls(t, 1));
    let mut j = Judge::new(q);
    if q.leq(x, y) && q.iu(x) && q.iu(y) {
        j.eq("x ⋏ y = U0 x", q.curlywedge(x, y), q.U0(x));
        j.eq("U0 x = x ⊼ y", q.U0(x), q.owedge(x, y));
        j.eq("x ⋎ y = U0 y", q.curlyvee(x, y), q.U0(y));
        j.eq("U0 y = x ⊻ y", q.U0(y), q.ovee(x, y));
    }
    j.outcome()
}

fn t4k(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let (x, y, a, b) = (cls(t, 0), cls(t, 1), cls(t, 2), cls(t, 3));
    let mut j = Judge::new(q);
    if [x, y, a, b].iter().all(|&v| q.iu(v)) && q.leq(x, y) && q.leq(a, b) {
        j.le("x ⋏ a ≤ y ⋏ b", q.curlywedge(x, a), q.curlywedge(y, b));
    }
    j.outcome()
}

fn t4l(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let (x, y, a, b) = (cls(t, 0), cls(t, 1), cls(t, 2), cls(t, 3));
    let mut j = Judge::new(q);
    let iu = |v: PartialValue| v.is_some_and(|v| q.iu(v));
    if [x, y, a, b].iter().all(|&v| q.iu(v))
        && iu(q.ovee(x, a))
        && iu(q.ovee(y, b))
        && q.leq(x, y)
        && q.leq(a, b)
    {
        j.le("x ⋎ a ≤ y ⋎ b", q.curlyvee(x, a), q.curlyvee(y, b));
    }
    j.outcome()
}

fn t4m(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let x = cls(t, 0);
    let zero = q.zero();
    let mut j = Judge::new(q);
    let between = q
        .ids()
        .filter(|&a| q.lneq(zero, a) && q.lneq(a, x))
        .count();
    let rhs = !q.iu(x)
        && q.s(q.Ubreve(x)) == zero
        && q.lneq(q.L0(x), x)
        && q.ids().filter(|&y| q.lneq(y, x)).all(|y| q.t(y) == zero)
        && between <= 2;
    j.holds("t(x) = x ↔ conditions", q.is_unrelated_pair_class(x) == rhs);
    j.outcome()
}

fn t4n(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let x = cls(t, 0);
    let mut j = Judge::new(q);
    if q.iu(x) {
        j.le("~⊖x ≤ ⊖~x", q.ominus(x).map(|v| q.simneg(v)), q.ominus(q.simneg(x)));
    }
    j.outcome()
}

fn neg_constants(j: &mut Judge, q: &QuotientAlgebra, x: ClassId) {
    j.le("~x ≤ ~L0 x", q.simneg(x), q.simneg(q.L0(x)));
    j.eq("~0 = 1", q.simneg(q.zero()), q.one());
    j.eq("~1 = 0", q.simneg(q.one()), q.zero());
}

fn t4o(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let mut j = Judge::new(q);
    neg_constants(&mut j, q, cls(t, 0));
    j.outcome()
}

fn neg_u0(j: &mut Judge, q: &QuotientAlgebra, x: ClassId) {
    if let Some(u) = q.U0(x) {
        j.le("~U0 x ≤ ~x", q.simneg(u), q.simneg(x));
    }
}

fn t4p(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let x = cls(t, 0);
    let mut j = Judge::new(q);
    j.le("x ≤ ~~x", x, q.simneg(q.simneg(x)));
    neg_u0(&mut j, q, x);
    j.outcome()
}

fn t4q(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let x = cls(t, 0);
    let mut j = Judge::new(q);
    j.le("~Ŭ x ≤ ~x", q.simneg(q.Ubreve(x)), q.simneg(x));
    if let Some(u) = q.U0(x) {
        j.le("~Ŭ x ≤ ~U0 x", q.simneg(q.Ubreve(x)), q.simneg(u));
    }
    j.outcome()
}

fn t4r(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let x = cls(t, 0);
    let mut j = Judge::new(q);
    j.le("~x ≤ ~L̆ x", q.simneg(x), q.simneg(q.Lbreve(x)));
    j.le("~L̆ x ≤ ~L0 x", q.simneg(q.Lbreve(x)), q.simneg(q.L0(x)));
    if q.in_(x) {
        j.le("⊖x ≤ ⊖L0 x", q.ominus(x), q.ominus(q.L0(x)));
    }
    j.outcome()
}

fn t4s(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let x = cls(t, 0);
    let mut j = Judge::new(q);
    if q.iu(q.simneg(x)) && q.iu(x) {
        j.le("~⊖x ≤ ⊖~x", q.ominus(x).map(|v| q.simneg(v)), q.ominus(q.simneg(x)));
    }
    j.eq("⊖0 = 1", q.ominus(q.zero()), q.one());
    j.holds("¬IN(1)", !q.in_(q.one()));
    j.outcome()
}

fn t4t(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let x = cls(t, 0);
    let mut j = Judge::new(q);
    if q.iu(x) {
        j.le("⊖x ≤ ⊖L0 x", q.ominus(x), q.ominus(q.L0(x)));
    }
    if q.in_(x) {
        j.le("⊖Ŭ x ≤ ⊖x", q.ominus(q.Ubreve(x)), q.ominus(x));
        j.eq("⊖U0 x = ⊖x", q.U0(x).and_then(|u| q.ominus(u)), q.ominus(x));
    }
    j.outcome()
}

fn t4u(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let x = cls(t, 0);
    let mut j = Judge::new(q);
    j.holds(
        "condition ↔ s(x) = x",
        lower_chain_condition(q, x) == q.is_single_block_class(x),
    );
    j.outcome()
}

fn t4v(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let (x, y) = (cls(t, 0), cls(t, 1));
    let mut j = Judge::new(q);
    j.eq("x ⊔ y = y ⊔ x", q.sqcup(x, y), q.sqcup(y, x));
    j.eq("x ⊔ x = x", q.sqcup(x, x), x);
    let rhs = match (q.U0(x), q.U0(y)) {
        (Some(a), Some(b)) => Some(q.sqcup(a, b)),
        _ => None,
    };
    j.weq("x ⊻ y ≐ U0 x ⊔ U0 y", q.ovee(x, y), rhs);
    j.outcome()
}

fn t4w(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let (x, y) = (cls(t, 0), cls(t, 1));
    let mut j = Judge::new(q);
    if q.leq(x, y) {
        j.le("x ≤ x ⊔ y", x, q.sqcup(x, y));
        j.le("y ≤ x ⊔ y", y, q.sqcup(x, y));
    }
    j.le(
        "Ŭ x ⊔ Ŭ y ≤ Ŭ(x ⊔ y)",
        q.sqcup(q.Ubreve(x), q.Ubreve(y)),
        q.Ubreve(q.sqcup(x, y)),
    );
    j.outcome()
}

fn impa(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let x = cls(t, 0);
    let mut j = Judge::new(q);
    if let Some(u) = q.U0(x) {
        j.eq("x ↣ x = 1", q.rightarrowtail(x, x), q.one());
        j.le("U0 x ≤ 1 ↣ x", u, q.rightarrowtail(q.one(), x));
    }
    j.outcome()
}

fn impb(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let (x, y) = (cls(t, 0), cls(t, 1));
    let mut j = Judge::new(q);
    if q.iu(x) && q.iu(y) {
        let inner = q.rightarrowtail(y, x);
        j.le("U0 x ≤ x ↣ (y ↣ x)", q.U0(x), inner.and_then(|i| q.rightarrowtail(x, i)));
    }
    if q.iu(x) {
        j.eq("x ↣ 0 = ⊖x", q.rightarrowtail(x, q.zero()), q.ominus(x));
    }
    j.outcome()
}

fn impc(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let x = cls(t, 0);
    let mut j = Judge::new(q);
    j.eq("x ⇝ x = 1", q.rightsquigarrow(x, x), q.one());
    j.le("x ≤ 1 ⇝ x", x, q.rightsquigarrow(q.one(), x));
    j.eq("x ⇝ 0 = ~x", q.rightsquigarrow(x, q.zero()), q.simneg(x));
    j.outcome()
}

fn impd(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let (x, y, z) = (cls(t, 0), cls(t, 1), cls(t, 2));
    let mut j = Judge::new(q);
    j.le(
        "(x ⇝ y) ⊔ (x ⇝ z) ≤ x ⇝ (y ⊔ z)",
        q.sqcup(q.rightsquigarrow(x, y), q.rightsquigarrow(x, z)),
        q.rightsquigarrow(x, q.sqcup(y, z)),
    );
    j.outcome()
}

fn impe(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let (x, y, z) = (cls(t, 0), cls(t, 1), cls(t, 2));
    let mut j = Judge::new(q);
    j.le(
        "(x ⇝ z) ⊓ (y ⇝ z) ≤ (x ⊔ y) ⇝ z",
        q.sqcap(q.rightsquigarrow(x, z), q.rightsquigarrow(y, z)),
        q.rightsquigarrow(q.sqcup(x, y), z),
    );
    j.outcome()
}

fn aer02(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let x = cls(t, 0);
    let mut j = Judge::new(q);
    lower_lateral_chain(&mut j, q, x);
    if let Some(u) = q.U0(x) {
        j.le("x ≤ U0 x", x, u);
        j.le("U0 x ≤ U0U0 x", u, q.U0(u));
    }
    j.outcome()
}

fn aer03(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let x = cls(t, 0);
    let mut j = Judge::new(q);
    j.eq("L0L0 x = L0 x", q.L0(q.L0(x)), q.L0(x));
    j.eq("L̆L0 x = L0 x", q.Lbreve(q.L0(x)), q.L0(x));
    j.le("L0L̆ x ≤ L̆ x", q.L0(q.Lbreve(x)), q.Lbreve(x));
    j.outcome()
}

fn aer04(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let x = cls(t, 0);
    let mut j = Judge::new(q);
    j.eq("L̆L̆ x = L̆ x", q.Lbreve(q.Lbreve(x)), q.Lbreve(x));
    if let Some(u) = q.U0(x) {
        j.eq("L0U0 x = U0 x", q.L0(u), u);
    }
    j.le("L0 x ≤ U0L0 x", q.L0(x), q.U0(q.L0(x)));
    j.outcome()
}

fn aer05(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let x = cls(t, 0);
    let mut j = Judge::new(q);
    j.le("Ŭ x ≤ ŬŬ x", q.Ubreve(x), q.Ubreve(q.Ubreve(x)));
    if let Some(u) = q.U0(x) {
        upper_chain(&mut j, q, x, u);
    }
    j.outcome()
}

fn aer12(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let x = cls(t, 0);
    let mut j = Judge::new(q);
    if q.iu(x) {
        j.le("~⊖x ≤ ⊖~x", q.ominus(x).map(|v| q.simneg(v)), q.ominus(q.simneg(x)));
    }
    neg_constants(&mut j, q, x);
    j.outcome()
}

fn aer13(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let x = cls(t, 0);
    let mut j = Judge::new(q);
    let nn = q.simneg(q.simneg(x));
    if q.iu(nn) {
        j.le("x ≤ ~~x", x, nn);
    }
    neg_u0(&mut j, q, x);
    j.outcome()
}

fn aer18(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let x = cls(t, 0);
    let zero = q.zero();
    let mut j = Judge::new(q);
    let atomic = q
        .ids()
        .filter(|&y| q.leq(zero, y) && q.leq(y, x))
        .all(|y| y == zero || y == x);
    if atomic {
        let found = q.ids().any(|z| q.is_single_block_class(z) && q.leq(x, z));
        j.holds("∃z: s(z) = z, x ≤ z", found);
    }
    j.outcome()
}

fn aer19(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let (x, y) = (cls(t, 0), cls(t, 1));
    let mut j = Judge::new(q);
    if q.is_single_block_class(x) {
        if q.lneq(x, y) {
            j.eq("x ⋨ y → s(y) = 0", q.s(y), q.zero());
        }
        if q.lneq(y, x) {
            j.eq("y ⋨ x → s(y) = 0", q.s(y), q.zero());
        }
    }
    j.outcome()
}

fn aer20(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let (x, y) = (cls(t, 0), cls(t, 1));
    let mut j = Judge::new(q);
    j.le("0 ≤ x", q.zero(), x);
    j.le("x ≤ 1", x, q.one());
    j.eq("x ⊔ y = y ⊔ x", q.sqcup(x, y), q.sqcup(y, x));
    j.eq("x ⊔ x = x", q.sqcup(x, x), x);
    j.outcome()
}

fn drv1(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let (x, y) = (cls(t, 0), cls(t, 1));
    let mut j = Judge::new(q);
    match (q.ovee(x, y), q.U0(x), q.U0(y)) {
        (v, Some(a), Some(b)) => j.eq("x ⊻ y = U0 x ⊔ U0 y", v, q.sqcup(a, b)),
        (v, _, _) => j.holds("x ⊻ y undefined with its right side", v.is_none()),
    }
    j.outcome()
}

fn drv2(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let (x, y) = (cls(t, 0), cls(t, 1));
    let mut j = Judge::new(q);
    j.holds("x ≤ y ∧ x ≠ y ↔ x ⋨ y", (q.leq(x, y) && x != y) == q.lneq(x, y));
    j.outcome()
}

fn drv3(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let (x, y) = (cls(t, 0), cls(t, 1));
    let mut j = Judge::new(q);
    j.weq("x ⋎ y ≐ U0(x ⊻ y)", q.curlyvee(x, y), q.ovee(x, y).and_then(|v| q.U0(v)));
    j.weq("x ⋏ y ≐ L0(x ⊼ y)", q.curlywedge(x, y), q.owedge(x, y).map(|v| q.L0(v)));
    j.holds("IN(x) ↔ ⊖x defined", q.in_(x) == q.ominus(x).is_some());
    j.outcome()
}

fn drv4(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let x = cls(t, 0);
    let mut j = Judge::new(q);
    let cond = lower_chain_condition(q, x);
    j.holds("condition ↔ s(x) = x", cond == q.is_single_block_class(x));
    if !q.is_single_block_class(x) {
        j.eq("s(x) = 0 otherwise", q.s(x), q.zero());
    }
    j.outcome()
}

fn drv5(c: &Context, t: &[u64]) -> Outcome {
    let q = &c.q;
    let x = cls(t, 0);
    let mut j = Judge::new(q);
    j.holds("IU(x) ↔ U0 x defined", q.iu(x) == q.U0(x).is_some());
    j.outcome()
}

// ---- space-level claims ----

fn rep(c: &Context, _: &[u64]) -> Outcome {
    let mut any = false;
    for claim in ClaimId::aer_suite() {
        let r = super::evaluate_all(c, claim);
        if let Some((_, trace)) = r.violation {
            return Outcome::Violated(format!("{}: {}", claim.tag(), trace));
        }
        any |= r.instances > 0;
    }
    if any {
        Outcome::Holds
    } else {
        Outcome::Vacuous
    }
}

fn outcome_of(v: &super::AuditVerdict) -> Outcome {
    match v.status {
        super::Status::Verified => Outcome::Holds,
        super::Status::Vacuous => Outcome::Vacuous,
        super::Status::Refuted => Outcome::Violated(
            v.counterexample
                .as_ref()
                .map_or_else(String::new, |ce| ce.trace.clone()),
        ),
    }
}

fn coh(c: &Context, _: &[u64]) -> Outcome {
    if c.approx().family().len() > choice::COHERENCE_MAX_BLOCKS {
        return Outcome::Vacuous;
    }
    match choice::coherence_audit(c.space()) {
        Ok(v) => outcome_of(&v),
        Err(e) => Outcome::Violated(format!("{e}")),
    }
}

fn delta_structure(c: &Context) -> Result<tarski::TarskiStructure> {
    let d = tarski::build_delta(c.space(), c.approx().family(), tarski::DeltaVariant::Blocks)?;
    Ok(tarski::TarskiStructure::new(d))
}

fn tar1(c: &Context, _: &[u64]) -> Outcome {
    match delta_structure(c) {
        Ok(ts) => outcome_of(&tarski::closure_audit(&ts, c.space())),
        Err(e) => Outcome::Violated(format!("{e}")),
    }
}

fn tar2(c: &Context, _: &[u64]) -> Outcome {
    match delta_structure(c) {
        Ok(ts) => outcome_of(&tarski::sigma_classify_delta(&c.q, ts.carrier()).verdict),
        Err(e) => Outcome::Violated(format!("{e}")),
    }
}
