use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::families::FamilySpec;

/// Claim identifiers as accepted on the command line.
#[allow(non_camel_case_types)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClaimId {
    Prop1_1,
    Prop1_2,
    Cor1_3,
    Thm1_5,
    Thm1_6,
    Item1_QnAut,
    Lemma3_1,
    Lemma3_3,
    Lemma3_5,
    Thm3_6,
    Thm3_7,
    EKR,
    JohnsonAut,
}

impl ClaimId {
    pub const ALL: [ClaimId; 13] = [
        ClaimId::Prop1_1,
        ClaimId::Prop1_2,
        ClaimId::Cor1_3,
        ClaimId::Thm1_5,
        ClaimId::Thm1_6,
        ClaimId::Item1_QnAut,
        ClaimId::Lemma3_1,
        ClaimId::Lemma3_3,
        ClaimId::Lemma3_5,
        ClaimId::Thm3_6,
        ClaimId::Thm3_7,
        ClaimId::EKR,
        ClaimId::JohnsonAut,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::Prop1_1 => "Prop1_1",
            ClaimId::Prop1_2 => "Prop1_2",
            ClaimId::Cor1_3 => "Cor1_3",
            ClaimId::Thm1_5 => "Thm1_5",
            ClaimId::Thm1_6 => "Thm1_6",
            ClaimId::Item1_QnAut => "Item1_QnAut",
            ClaimId::Lemma3_1 => "Lemma3_1",
            ClaimId::Lemma3_3 => "Lemma3_3",
            ClaimId::Lemma3_5 => "Lemma3_5",
            ClaimId::Thm3_6 => "Thm3_6",
            ClaimId::Thm3_7 => "Thm3_7",
            ClaimId::EKR => "EKR",
            ClaimId::JohnsonAut => "JohnsonAut",
        }
    }

    /// The statement being checked, in one line.
    pub fn statement(self) -> &'static str {
        match self {
            ClaimId::Prop1_1 => "H(n,k) is vertex-transitive",
            ClaimId::Prop1_2 => "H(n,k) is arc-transitive",
            ClaimId::Cor1_3 => "vertex connectivity of H(n,k) equals its degree C(n-k,k)",
            ClaimId::Thm1_5 => "Aut(H(n,1)) = Sym(n) x Z2",
            ClaimId::Thm1_6 => "Aut(H(2m+1,m)) = Sym(2m+1) x Z2",
            ClaimId::Item1_QnAut => "|Aut(Q_n)| = 2^n n! and BL_n is isomorphic to Q_n",
            ClaimId::Lemma3_1 => "in H(n,k) distinct vertices of one part have distinct neighbourhoods",
            ClaimId::Lemma3_3 => "automorphisms of a connected bipartite graph preserve or swap the parts",
            ClaimId::Lemma3_5 => "C(l,u) > C(m,u) for u < m < l; k-sets with |u+v| = k+h have C(n-k-h,k) common neighbours",
            ClaimId::Thm3_6 => "Aut(H(n,k)) = <f_theta, alpha> = Sym(n) x Z2 for 1 <= k < n/2",
            ClaimId::Thm3_7 => "Aut(K(n,k)) = {f_theta} = Sym(n) for n > 4, k < n/2",
            ClaimId::EKR => "independence number of K(n,k) is C(n-1,k-1) for n > 2k",
            ClaimId::JohnsonAut => "|Aut(J(n,k))| = n! if n != 2k, 2 n! if n = 2k",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownClaim(pub String);

impl fmt::Display for UnknownClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids: Vec<&str> = ClaimId::ALL.iter().map(|c| c.as_str()).collect();
        write!(f, "unknown claim id {:?}; valid ids: {}", self.0, ids.join(", "))
    }
}

impl std::error::Error for UnknownClaim {}

impl FromStr for ClaimId {
    type Err = UnknownClaim;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClaimId::ALL.into_iter().find(|c| c.as_str().eq_ignore_ascii_case(s)).ok_or_else(|| UnknownClaim(s.to_string()))
    }
}

impl Serialize for ClaimId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

/// What a report is about.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClaimInstance {
    Family(FamilySpec),
    /// A non-family control graph such as `P4`.
    Named(String),
    /// Binomial coefficients with every argument at most `max`.
    BinomialRange { max: u64 },
}

impl fmt::Display for ClaimInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClaimInstance::Family(spec) => write!(f, "{spec}"),
            ClaimInstance::Named(name) => f.write_str(name),
            ClaimInstance::BinomialRange { max } => write!(f, "C(l,u) l<={max}"),
        }
    }
}

impl Serialize for ClaimInstance {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// An exact observed or expected quantity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Int(BigUint),
    Bool(bool),
    /// Named sub-results, compared field by field.
    Record(Vec<(&'static str, Value)>),
    /// The node budget ran out before an answer was found.
    Budget(u64),
    Error(String),
}

impl Value {
    pub fn int(v: impl Into<BigUint>) -> Self {
        Value::Int(v.into())
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Value::Budget(_))
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Record(fields) => {
                f.write_str("{")?;
                for (i, (name, value)) in fields.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{name}={value}")?;
                }
                f.write_str("}")
            }
            Value::Budget(b) => write!(f, "budget of {b} nodes exceeded"),
            Value::Error(msg) => write!(f, "error: {msg}"),
        }
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Value::Int(v) => match v.to_u64() {
                Some(small) => serializer.serialize_u64(small),
                None => serializer.collect_str(v),
            },
            Value::Bool(b) => serializer.serialize_bool(*b),
            Value::Record(fields) => {
                let mut map = serializer.serialize_map(Some(fields.len()))?;
                for (name, value) in fields {
                    map.serialize_entry(name, value)?;
                }
                map.end()
            }
            Value::Budget(b) => {
                let mut map = serializer.serialize_map(Some(1))?;
                map.serialize_entry("budget_exceeded", b)?;
                map.end()
            }
            Value::Error(msg) => {
                let mut map = serializer.serialize_map(Some(1))?;
                map.serialize_entry("error", msg)?;
                map.end()
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimReport {
    pub claim_id: ClaimId,
    pub instance: ClaimInstance,
    pub expected: Value,
    pub observed: Value,
    pub passed: bool,
    pub elapsed: Duration,
    pub citation: &'static str,
}

impl ClaimReport {
    pub fn new(claim_id: ClaimId, instance: ClaimInstance, expected: Value, observed: Value, elapsed: Duration) -> Self {
        let passed = expected == observed;
        ClaimReport { claim_id, instance, expected, observed, passed, elapsed, citation: claim_id.statement() }
    }

    /// One line; elapsed time only when asked for, so repeated runs match byte for byte.
    pub fn render_text(&self, timings: bool) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let mut line = format!(
            "{status} {} {} expected {} observed {} [{}]",
            self.claim_id, self.instance, self.expected, self.observed, self.citation
        );
        if timings {
            line.push_str(&format!(" ({} ms)", self.elapsed.as_millis()));
        }
        line
    }

    pub fn record(&self, timings: bool) -> ReportRecord<'_> {
        ReportRecord {
            claim_id: self.claim_id,
            instance: &self.instance,
            expected: &self.expected,
            observed: &self.observed,
            passed: self.passed,
            elapsed_ms: timings.then(|| self.elapsed.as_millis()),
            citation: self.citation,
        }
    }
}

/// Machine-readable form of a report.
#[derive(Debug, Serialize)]
pub struct ReportRecord<'a> {
    pub claim_id: ClaimId,
    pub instance: &'a ClaimInstance,
    pub expected: &'a Value,
    pub observed: &'a Value,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
    pub citation: &'static str,
}
