//! The quotient of `℘(S)` by equality of approximation profiles, with its
//! partial operations and predicates.
//!
//! Every operation is evaluated on the canonical representative of each
//! class (least subset-rank). Whether the result depends on that choice is
//! measured by [`well_definedness_audit`], not assumed.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use serde::Serialize;

use crate::approx::{ApproxSpace, ApproximationProfile, ChoiceConfig, EmptyCover};
use crate::audit::verdict::{AuditVerdict, Counterexample, SpaceCode, Status};
use crate::space::{Subset, ToleranceSpace};
use crate::{Error, Result};

pub const QUOTIENT_MAX_POINTS: usize = 15;
pub const WELL_DEFINEDNESS_MAX_POINTS: usize = 12;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ClassId(pub u32);

impl ClassId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c{}", self.0)
    }
}

/// A class id, or `None` where a partial operation is undefined.
pub type PartialValue = Option<ClassId>;

/// `p ≐ q`: equal wherever both are defined.
pub fn weak_eq(p: PartialValue, q: PartialValue) -> bool {
    match (p, q) {
        (Some(a), Some(b)) => a == b,
        _ => true,
    }
}

/// One σ-class: every subset with a given profile.
#[derive(Clone, Debug, Serialize)]
pub struct RoughClass {
    pub id: ClassId,
    pub profile: ApproximationProfile,
    /// In subset-rank order; the first member is the representative.
    pub members: Vec<Subset>,
}

impl RoughClass {
    pub fn representative(&self) -> Subset {
        self.members[0]
    }
}

/// The essential rough partial algebra of a space.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra {
    approx: ApproxSpace,
    classes: Vec<RoughClass>,
    class_of: Vec<ClassId>,
    lower0: Vec<ClassId>,
    upper0: Vec<PartialValue>,
    lateral_l: Vec<ClassId>,
    lateral_u: Vec<ClassId>,
    neg: Vec<ClassId>,
    ominus: Vec<PartialValue>,
    single_block: Vec<bool>,
    unrelated_pair: Vec<bool>,
    disjoint_union: Vec<bool>,
}

/// All subsets of the first `n` points in subset-rank order.
pub fn subsets_by_rank(n: usize) -> Vec<Subset> {
    let mut all: Vec<Subset> = (0..(1u64 << n)).map(Subset::from_bits).collect();
    all.sort_by(|a, b| a.cmp_rank(*b));
    all
}

impl QuotientAlgebra {
    pub fn build(space: ToleranceSpace, config: ChoiceConfig) -> Result<Self> {
        Self::from_approx(ApproxSpace::new(space, config)?)
    }

    pub fn from_approx(approx: ApproxSpace) -> Result<Self> {
        let n = approx.space().size();
        if n > QUOTIENT_MAX_POINTS {
            return Err(Error::CapExceeded {
                what: "universe for quotient construction",
                size: n,
                max: QUOTIENT_MAX_POINTS,
            });
        }
        let mut index: BTreeMap<ApproximationProfile, ClassId> = BTreeMap::new();
        let mut classes: Vec<RoughClass> = Vec::new();
        let mut class_of = alloc::vec![ClassId(0); 1usize << n];
        for a in subsets_by_rank(n) {
            let profile = approx.profile(a);
            let id = *index.entry(profile).or_insert_with(|| {
                let id = ClassId(classes.len() as u32);
                classes.push(RoughClass {
                    id,
                    profile,
                    members: Vec::new(),
                });
                id
            });
            classes[id.index()].members.push(a);
            class_of[a.bits() as usize] = id;
        }

        let universe = approx.universe();
        let of = |s: Subset| class_of[s.bits() as usize];
        let lower0 = classes.iter().map(|c| of(c.profile.l0())).collect();
        let upper0 = classes.iter().map(|c| c.profile.u0().map(of)).collect();
        let lateral_l = classes.iter().map(|c| of(c.profile.lateral_l())).collect();
        let lateral_u = classes.iter().map(|c| of(c.profile.lateral_u())).collect();
        let neg = classes
            .iter()
            .map(|c| of(universe - c.profile.lateral_u()))
            .collect();
        let ominus = classes
            .iter()
            .map(|c| c.profile.u0().map(|u| of(universe - u)))
            .collect();
        let single_block = classes
            .iter()
            .map(|c| c.members.iter().any(|&m| approx.is_block(m)))
            .collect();
        let unrelated_pair = classes
            .iter()
            .map(|c| c.members.iter().any(|&m| approx.is_unrelated_pair(m)))
            .collect();
        let disjoint_union = classes
            .iter()
            .map(|c| c.members.iter().any(|&m| approx.is_disjoint_block_union(m)))
            .collect();

        Ok(QuotientAlgebra {
            approx,
            classes,
            class_of,
            lower0,
            upper0,
            lateral_l,
            lateral_u,
            neg,
            ominus,
            single_block,
            unrelated_pair,
            disjoint_union,
        })
    }

    pub fn approx(&self) -> &ApproxSpace {
        &self.approx
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[RoughClass] {
        &self.classes
    }

    pub fn ids(&self) -> impl Iterator<Item = ClassId> + Clone {
        (0..self.classes.len() as u32).map(ClassId)
    }

    pub fn class(&self, x: ClassId) -> &RoughClass {
        &self.classes[x.index()]
    }

    /// `[A]`.
    pub fn class_of(&self, a: Subset) -> ClassId {
        self.class_of[a.bits() as usize]
    }

    fn rep(&self, x: ClassId) -> Subset {
        self.classes[x.index()].representative()
    }

    fn profile(&self, x: ClassId) -> &ApproximationProfile {
        &self.classes[x.index()].profile
    }

    /// `[∅]`.
    pub fn zero(&self) -> ClassId {
        self.class_of(Subset::EMPTY)
    }

    /// `[S]`.
    pub fn one(&self) -> ClassId {
        self.class_of(self.approx.universe())
    }

    pub fn leq(&self, x: ClassId, y: ClassId) -> bool {
        self.profile(x).leq(self.profile(y))
    }

    pub fn lneq(&self, x: ClassId, y: ClassId) -> bool {
        x != y && self.leq(x, y)
    }

    #[allow(non_snake_case)]
    pub fn L0(&self, x: ClassId) -> ClassId {
        self.lower0[x.index()]
    }

    #[allow(non_snake_case)]
    pub fn U0(&self, x: ClassId) -> PartialValue {
        self.upper0[x.index()]
    }

    #[allow(non_snake_case)]
    pub fn Lbreve(&self, x: ClassId) -> ClassId {
        self.lateral_l[x.index()]
    }

    #[allow(non_snake_case)]
    pub fn Ubreve(&self, x: ClassId) -> ClassId {
        self.lateral_u[x.index()]
    }

    /// `~[A] = [S ∖ A^{ŭ}]`.
    pub fn simneg(&self, x: ClassId) -> ClassId {
        self.neg[x.index()]
    }

    /// `⊖[A] = [S ∖ A^{u0}]`.
    pub fn ominus(&self, x: ClassId) -> PartialValue {
        self.ominus[x.index()]
    }

    /// `[A ∪ B]`.
    pub fn sqcup(&self, x: ClassId, y: ClassId) -> ClassId {
        self.class_of(self.rep(x) | self.rep(y))
    }

    /// `[A ∩ B]`.
    pub fn sqcap(&self, x: ClassId, y: ClassId) -> ClassId {
        self.class_of(self.rep(x) & self.rep(y))
    }

    /// `[A^{u0} ∪ B^{u0}]`.
    pub fn ovee(&self, x: ClassId, y: ClassId) -> PartialValue {
        let (a, b) = (self.profile(x).u0()?, self.profile(y).u0()?);
        Some(self.class_of(a | b))
    }

    /// `[A^{u0} ∩ B^{u0}]`.
    pub fn owedge(&self, x: ClassId, y: ClassId) -> PartialValue {
        let (a, b) = (self.profile(x).u0()?, self.profile(y).u0()?);
        Some(self.class_of(a & b))
    }

    /// `U0(x ⊻ y)`.
    pub fn curlyvee(&self, x: ClassId, y: ClassId) -> PartialValue {
        self.ovee(x, y).and_then(|z| self.U0(z))
    }

    /// `L0(x ⊼ y)`.
    pub fn curlywedge(&self, x: ClassId, y: ClassId) -> PartialValue {
        self.owedge(x, y).map(|z| self.L0(z))
    }

    /// `x ⇝ y = (~x) ⊔ (Ŭ y)`.
    pub fn rightsquigarrow(&self, x: ClassId, y: ClassId) -> ClassId {
        self.sqcup(self.simneg(x), self.Ubreve(y))
    }

    /// `x ↣ y = (⊖x) ⊔ (U0 y)`.
    pub fn rightarrowtail(&self, x: ClassId, y: ClassId) -> PartialValue {
        Some(self.sqcup(self.ominus(x)?, self.U0(y)?))
    }

    /// `U0` is defined at `x`.
    pub fn iu(&self, x: ClassId) -> bool {
        self.U0(x).is_some()
    }

    /// `⊖` is defined at `x`.
    pub fn in_(&self, x: ClassId) -> bool {
        self.ominus(x).is_some()
    }

    /// `x` if it is the class of a single block, else `0`.
    pub fn s(&self, x: ClassId) -> ClassId {
        if self.single_block[x.index()] {
            x
        } else {
            self.zero()
        }
    }

    /// `x` if it is the class of a two-point set inside no block, else `0`.
    pub fn t(&self, x: ClassId) -> ClassId {
        if self.unrelated_pair[x.index()] {
            x
        } else {
            self.zero()
        }
    }

    pub fn is_single_block_class(&self, x: ClassId) -> bool {
        self.single_block[x.index()]
    }

    pub fn is_unrelated_pair_class(&self, x: ClassId) -> bool {
        self.unrelated_pair[x.index()]
    }

    pub fn is_disjoint_union_class(&self, x: ClassId) -> bool {
        self.disjoint_union[x.index()]
    }

    /// Dense export of classes, order, operation tables and predicates.
    pub fn tables(&self) -> QuotientTables {
        let ids: Vec<ClassId> = self.ids().collect();
        let cell = |v: PartialValue| v.map_or(-1, |c| c.0 as i64);
        let unary = |f: &dyn Fn(ClassId) -> PartialValue| ids.iter().map(|&x| cell(f(x))).collect();
        let binary = |f: &dyn Fn(ClassId, ClassId) -> PartialValue| {
            ids.iter()
                .map(|&x| ids.iter().map(|&y| cell(f(x, y))).collect())
                .collect()
        };
        let bitmap = |f: &dyn Fn(ClassId) -> bool| ids.iter().map(|&x| u8::from(f(x))).collect();
        QuotientTables {
            size: self.approx.space().size(),
            empty_cover: self.approx.config().empty_cover,
            zero: self.zero(),
            one: self.one(),
            classes: self.classes.clone(),
            leq: ids
                .iter()
                .map(|&x| ids.iter().map(|&y| u8::from(self.leq(x, y))).collect())
                .collect(),
            unary: UnaryTables {
                l0: unary(&|x| Some(self.L0(x))),
                u0: unary(&|x| self.U0(x)),
                lbreve: unary(&|x| Some(self.Lbreve(x))),
                ubreve: unary(&|x| Some(self.Ubreve(x))),
                simneg: unary(&|x| Some(self.simneg(x))),
                ominus: unary(&|x| self.ominus(x)),
                s: unary(&|x| Some(self.s(x))),
                t: unary(&|x| Some(self.t(x))),
            },
            binary: BinaryTables {
                sqcup: binary(&|x, y| Some(self.sqcup(x, y))),
                sqcap: binary(&|x, y| Some(self.sqcap(x, y))),
                ovee: binary(&|x, y| self.ovee(x, y)),
                owedge: binary(&|x, y| self.owedge(x, y)),
                curlyvee: binary(&|x, y| self.curlyvee(x, y)),
                curlywedge: binary(&|x, y| self.curlywedge(x, y)),
                rightsquigarrow: binary(&|x, y| Some(self.rightsquigarrow(x, y))),
                rightarrowtail: binary(&|x, y| self.rightarrowtail(x, y)),
            },
            predicates: PredicateTables {
                iu: bitmap(&|x| self.iu(x)),
                in_: bitmap(&|x| self.in_(x)),
            },
        }
    }
}

/// Serializable snapshot of a [`QuotientAlgebra`]; `-1` marks undefined cells.
#[derive(Clone, Debug, Serialize)]
pub struct QuotientTables {
    pub size: usize,
    pub empty_cover: EmptyCover,
    pub zero: ClassId,
    pub one: ClassId,
    pub classes: Vec<RoughClass>,
    pub leq: Vec<Vec<u8>>,
    pub unary: UnaryTables,
    pub binary: BinaryTables,
    pub predicates: PredicateTables,
}

#[derive(Clone, Debug, Serialize)]
pub struct UnaryTables {
    pub l0: Vec<i64>,
    pub u0: Vec<i64>,
    pub lbreve: Vec<i64>,
    pub ubreve: Vec<i64>,
    pub simneg: Vec<i64>,
    pub ominus: Vec<i64>,
    pub s: Vec<i64>,
    pub t: Vec<i64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BinaryTables {
    pub sqcup: Vec<Vec<i64>>,
    pub sqcap: Vec<Vec<i64>>,
    pub ovee: Vec<Vec<i64>>,
    pub owedge: Vec<Vec<i64>>,
    pub curlyvee: Vec<Vec<i64>>,
    pub curlywedge: Vec<Vec<i64>>,
    pub rightsquigarrow: Vec<Vec<i64>>,
    pub rightarrowtail: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PredicateTables {
    pub iu: Vec<u8>,
    #[serde(rename = "in")]
    pub in_: Vec<u8>,
}

/// Operations defined through representatives, in audit order.
pub const REPRESENTATIVE_OPERATIONS: [&str; 10] = [
    "sqcup", "sqcap", "ovee", "owedge", "simneg", "ominus", "L0", "U0", "Lbreve", "Ubreve",
];

/// For each representative-defined operation, evaluates every choice of
/// representatives and reports the first class tuple whose result depends on
/// the choice.
pub fn well_definedness_audit(space: &ToleranceSpace, config: ChoiceConfig) -> Result<Vec<AuditVerdict>> {
    let n = space.size();
    if n > WELL_DEFINEDNESS_MAX_POINTS {
        return Err(Error::CapExceeded {
            what: "universe for well-definedness audit",
            size: n,
            max: WELL_DEFINEDNESS_MAX_POINTS,
        });
    }
    let q = QuotientAlgebra::build(space.clone(), config)?;
    let approx = q.approx();
    let universe = approx.universe();
    // Raw per-subset approximations, recomputed rather than read off the
    // class profiles.
    let u0: Vec<Option<Subset>> = (0..(1u64 << n))
        .map(|b| approx.upper_zero(Subset::from_bits(b)))
        .collect();
    let u0_of = |a: Subset| u0[a.bits() as usize];

    let mut out = Vec::new();
    for &name in REPRESENTATIVE_OPERATIONS.iter() {
        let result = match name {
            "sqcup" => binary_audit(&q, |a, b| Some(a | b)),
            "sqcap" => binary_audit(&q, |a, b| Some(a & b)),
            "ovee" => binary_audit(&q, |a, b| Some(u0_of(a)? | u0_of(b)?)),
            "owedge" => binary_audit(&q, |a, b| Some(u0_of(a)? & u0_of(b)?)),
            "simneg" => unary_audit(&q, |a| Some(universe - approx.lateral_upper(a))),
            "ominus" => unary_audit(&q, |a| Some(universe - u0_of(a)?)),
            "L0" => unary_audit(&q, |a| Some(approx.lower_zero(a))),
            "U0" => unary_audit(&q, u0_of),
            "Lbreve" => unary_audit(&q, |a| Some(approx.lateral_lower(a))),
            _ => unary_audit(&q, |a| Some(approx.lateral_upper(a))),
        };
        let (instances, failure) = result;
        out.push(AuditVerdict {
            claim: format!("WD:{name}"),
            scope: format!("all representative choices, n = {n}"),
            status: if failure.is_some() {
                Status::Refuted
            } else {
                Status::Verified
            },
            instances,
            vacuous: 0,
            counterexample: failure.map(|(witnesses, trace)| Counterexample {
                space: SpaceCode::of(space),
                witnesses,
                trace,
            }),
        });
    }
    Ok(out)
}

type Failure = (Vec<Subset>, String);

fn show(q: &QuotientAlgebra, v: Option<Subset>) -> String {
    match v {
        Some(s) => format!("{s} in {:?}", q.class_of(s)),
        None => "undefined".into(),
    }
}

fn unary_audit(q: &QuotientAlgebra, f: impl Fn(Subset) -> Option<Subset>) -> (u64, Option<Failure>) {
    let mut instances = 0;
    for class in q.classes() {
        let rep = class.representative();
        let expected = f(rep).map(|s| q.class_of(s));
        for &m in &class.members[1..] {
            instances += 1;
            let got = f(m).map(|s| q.class_of(s));
            if got != expected {
                let trace = format!(
                    "class {:?}: f({rep}) = {} but f({m}) = {}",
                    class.id,
                    show(q, f(rep)),
                    show(q, f(m))
                );
                return (instances, Some((alloc::vec![rep, m], trace)));
            }
        }
    }
    (instances, None)
}

fn binary_audit(q: &QuotientAlgebra, f: impl Fn(Subset, Subset) -> Option<Subset>) -> (u64, Option<Failure>) {
    let mut instances = 0;
    for cx in q.classes() {
        for cy in q.classes() {
            let (ra, rb) = (cx.representative(), cy.representative());
            let expected = f(ra, rb).map(|s| q.class_of(s));
            for &a in &cx.members {
                for &b in &cy.members {
                    instances += 1;
                    let got = f(a, b).map(|s| q.class_of(s));
                    if got != expected {
                        let trace = format!(
                            "classes ({:?}, {:?}): f({ra}, {rb}) = {} but f({a}, {b}) = {}",
                            cx.id,
                            cy.id,
                            show(q, f(ra, rb)),
                            show(q, f(a, b))
                        );
                        return (instances, Some((alloc::vec![ra, rb, a, b], trace)));
                    }
                }
            }
        }
    }
    (instances, None)
}
