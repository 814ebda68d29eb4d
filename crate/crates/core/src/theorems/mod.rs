//! Executable checks of the structural claims about these families.
//!
//! Every check builds the graphs involved, computes the relevant quantity
//! independently of the claimed formula, and reports both. `run_all`
//! enumerates every instance inside the size caps.

mod checks;
mod report;

pub use checks::*;
pub use report::{ClaimId, ClaimInstance, ClaimReport, ReportRecord, UnknownClaim, Value};

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::families::FamilySpec;
use crate::graph::{named, LabeledGraph, DEFAULT_INDEPENDENCE_CAP};

pub const DEFAULT_MAX_N: usize = 9;
pub const DEFAULT_SEED: u64 = 0x5eed;
pub const DEFAULT_BINOMIAL_MAX: u64 = 30;

/// Size configuration for [`run_all`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest ground set `n` for family instances.
    pub max_n: usize,
    /// Largest `l` in the binomial monotonicity check.
    pub binomial_max: u64,
    pub seed: u64,
    pub check: CheckOptions,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { max_n: DEFAULT_MAX_N, binomial_max: DEFAULT_BINOMIAL_MAX, seed: DEFAULT_SEED, check: CheckOptions::default() }
    }
}

impl Caps {
    /// Caps admitting no instance at all.
    pub fn empty() -> Self {
        Caps { max_n: 0, binomial_max: 0, ..Caps::default() }
    }

    pub fn with_max_n(max_n: usize) -> Self {
        Caps { max_n, ..Caps::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Task {
    Family(ClaimId, FamilySpec),
    Control(ClaimId, &'static str),
    Binomial(u64),
}

/// Pairs `(n, k)` with `1 <= k` and `2k < n <= max_n`.
fn kneser_range(max_n: usize) -> impl Iterator<Item = (usize, usize)> {
    (3..=max_n).flat_map(|n| (1..=(n - 1) / 2).map(move |k| (n, k)))
}

fn tasks(caps: &Caps, claims: &[ClaimId]) -> Vec<Task> {
    let mut out = Vec::new();
    let h = |n, k| FamilySpec::bipartite_kneser(n, k);
    for &claim in claims {
        let mut add = |spec: FamilySpec| out.push(Task::Family(claim, spec));
        match claim {
            ClaimId::Prop1_1
            | ClaimId::Prop1_2
            | ClaimId::Cor1_3
            | ClaimId::Lemma3_1
            | ClaimId::Lemma3_3
            | ClaimId::Lemma3_5 => kneser_range(caps.max_n).for_each(|(n, k)| add(h(n, k))),
            ClaimId::Thm1_5 => (3..=caps.max_n).for_each(|n| add(h(n, 1))),
            ClaimId::Thm1_6 => (1..).map(|m| (2 * m + 1, m)).take_while(|&(n, _)| n <= caps.max_n).for_each(|(n, m)| add(h(n, m))),
            ClaimId::Thm3_6 => kneser_range(caps.max_n).filter(|&(_, k)| k >= 2).for_each(|(n, k)| add(h(n, k))),
            ClaimId::Thm3_7 => {
                kneser_range(caps.max_n).filter(|&(n, _)| n > 4).for_each(|(n, k)| add(FamilySpec::kneser(n, k)))
            }
            ClaimId::EKR => kneser_range(caps.max_n)
                .map(|(n, k)| FamilySpec::kneser(n, k))
                .filter(|s| s.expected_order() <= DEFAULT_INDEPENDENCE_CAP as u64)
                .for_each(&mut add),
            ClaimId::JohnsonAut => {
                (3..=caps.max_n).flat_map(|n| (1..=n / 2).map(move |k| (n, k))).for_each(|(n, k)| add(FamilySpec::johnson(n, k)))
            }
            ClaimId::Item1_QnAut => (1..=caps.max_n.min(HYPERCUBE_CAP)).for_each(|n| add(FamilySpec::hypercube(n))),
        }
        if caps.max_n > 0 && matches!(claim, ClaimId::Prop1_1 | ClaimId::Prop1_2) {
            out.push(Task::Control(claim, "K1,3"));
            out.push(Task::Control(claim, "P4"));
        }
        if claim == ClaimId::Lemma3_5 && caps.binomial_max > 0 {
            out.push(Task::Binomial(caps.binomial_max));
        }
    }
    out
}

fn control_graph(name: &str) -> LabeledGraph {
    let g = match name {
        "K1,3" => named::star(3),
        "P4" => named::path(4),
        _ => unreachable!("unknown control {name}"),
    };
    g.expect("control graphs are valid")
}

fn run_task(task: &Task, caps: &Caps) -> ClaimReport {
    let mut hasher = DefaultHasher::new();
    task.hash(&mut hasher);
    let mut rng = ChaCha8Rng::seed_from_u64(caps.seed ^ hasher.finish());
    let opts = &caps.check;
    match task {
        Task::Control(claim, name) => {
            let g = control_graph(name);
            let inst = ClaimInstance::Named((*name).to_string());
            match claim {
                ClaimId::Prop1_1 => check_vertex_transitive_graph(inst, &g, false, opts),
                _ => check_arc_transitive_graph(inst, &g, false, opts),
            }
        }
        Task::Binomial(max) => check_binomial_monotonicity(*max),
        Task::Family(claim, spec) => {
            let mut report = match claim {
                ClaimId::Prop1_1 => check_vertex_transitive(spec, opts),
                ClaimId::Prop1_2 => check_arc_transitive(spec, opts),
                ClaimId::Cor1_3 => check_connectivity(spec),
                ClaimId::Thm1_5 | ClaimId::Thm1_6 | ClaimId::Thm3_6 => check_main_theorem(spec, opts, &mut rng),
                ClaimId::Item1_QnAut => check_hypercube_aut(spec.n, opts),
                ClaimId::Lemma3_1 => check_neighborhood_injectivity(spec),
                ClaimId::Lemma3_3 => check_part_action(spec, opts, &mut rng),
                ClaimId::Lemma3_5 => check_counting_lemma(spec),
                ClaimId::Thm3_7 => check_kneser_theorem(spec, opts, &mut rng),
                ClaimId::EKR => check_ekr(spec),
                ClaimId::JohnsonAut => check_johnson_aut(spec, opts),
            };
            report.claim_id = *claim;
            report.citation = claim.statement();
            report
        }
    }
}

/// Checks the chosen claims on every instance within `caps`, in parallel.
/// Reports are sorted by (claim, instance); failures, including budget
/// exhaustion, are reported rather than raised.
pub fn run_claims(caps: &Caps, claims: &[ClaimId]) -> Vec<ClaimReport> {
    let tasks = tasks(caps, claims);
    let mut reports: Vec<ClaimReport> = tasks.par_iter().map(|t| run_task(t, caps)).collect();
    reports.sort_by(|a, b| (a.claim_id, &a.instance).cmp(&(b.claim_id, &b.instance)));
    reports
}

pub fn run_all(caps: &Caps) -> Vec<ClaimReport> {
    run_claims(caps, &ClaimId::ALL)
}
