//! Per-instance bookkeeping for claim checks.
//!
//! Atom semantics for partial terms:
//! * strict atoms (`le`, `eq`, `sub`, `seq`) need both sides defined;
//! * weak atoms (`weq`, `sweq`, `sub_w`) are skipped when a side is undefined.
//!
//! An instance in which no atom was evaluated is vacuous.

use alloc::format;
use alloc::string::String;

use crate::quotient::{ClassId, PartialValue, QuotientAlgebra};
use crate::space::Subset;

pub enum Outcome {
    Holds,
    Vacuous,
    Violated(String),
}

pub trait Pv: Copy {
    fn pv(self) -> PartialValue;
}

impl Pv for ClassId {
    fn pv(self) -> PartialValue {
        Some(self)
    }
}

impl Pv for PartialValue {
    fn pv(self) -> PartialValue {
        self
    }
}

pub trait Ps: Copy {
    fn ps(self) -> Option<Subset>;
}

impl Ps for Subset {
    fn ps(self) -> Option<Subset> {
        Some(self)
    }
}

impl Ps for Option<Subset> {
    fn ps(self) -> Option<Subset> {
        self
    }
}

pub struct Judge<'a> {
    q: &'a QuotientAlgebra,
    checked: bool,
    failure: Option<String>,
}

impl<'a> Judge<'a> {
    pub fn new(q: &'a QuotientAlgebra) -> Self {
        Judge {
            q,
            checked: false,
            failure: None,
        }
    }

    pub fn outcome(self) -> Outcome {
        match (self.failure, self.checked) {
            (Some(t), _) => Outcome::Violated(t),
            (None, true) => Outcome::Holds,
            (None, false) => Outcome::Vacuous,
        }
    }

    fn record(&mut self, ok: bool, trace: impl FnOnce() -> String) {
        self.checked = true;
        if !ok && self.failure.is_none() {
            self.failure = Some(trace());
        }
    }

    fn show(q: &QuotientAlgebra, v: PartialValue) -> String {
        match v {
            Some(c) => format!("[{}]", q.class(c).representative()),
            None => "undefined".into(),
        }
    }

    fn show_set(v: Option<Subset>) -> String {
        match v {
            Some(s) => format!("{s}"),
            None => "undefined".into(),
        }
    }

    /// A boolean atom.
    pub fn holds(&mut self, label: &str, ok: bool) {
        self.record(ok, || format!("{label} fails"));
    }

    pub fn le(&mut self, label: &str, x: impl Pv, y: impl Pv) {
        let (x, y) = (x.pv(), y.pv());
        let ok = matches!((x, y), (Some(a), Some(b)) if self.q.leq(a, b));
        let q = self.q;
        self.record(ok, || format!("{label}: {} vs {}", Self::show(q, x), Self::show(q, y)));
    }

    pub fn eq(&mut self, label: &str, x: impl Pv, y: impl Pv) {
        let (x, y) = (x.pv(), y.pv());
        let ok = x.is_some() && x == y;
        let q = self.q;
        self.record(ok, || format!("{label}: {} vs {}", Self::show(q, x), Self::show(q, y)));
    }

    pub fn weq(&mut self, label: &str, x: impl Pv, y: impl Pv) {
        if x.pv().is_some() && y.pv().is_some() {
            self.eq(label, x, y);
        }
    }

    pub fn sub(&mut self, label: &str, a: impl Ps, b: impl Ps) {
        let (a, b) = (a.ps(), b.ps());
        let ok = matches!((a, b), (Some(a), Some(b)) if a.is_subset(b));
        self.record(ok, || format!("{label}: {} vs {}", Self::show_set(a), Self::show_set(b)));
    }

    pub fn sub_w(&mut self, label: &str, a: impl Ps, b: impl Ps) {
        if a.ps().is_some() && b.ps().is_some() {
            self.sub(label, a, b);
        }
    }

    pub fn seq(&mut self, label: &str, a: impl Ps, b: impl Ps) {
        let (a, b) = (a.ps(), b.ps());
        let ok = a.is_some() && a == b;
        self.record(ok, || format!("{label}: {} vs {}", Self::show_set(a), Self::show_set(b)));
    }

    pub fn sweq(&mut self, label: &str, a: impl Ps, b: impl Ps) {
        if a.ps().is_some() && b.ps().is_some() {
            self.seq(label, a, b);
        }
    }
}
