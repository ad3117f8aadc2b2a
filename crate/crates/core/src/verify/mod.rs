//! Axiom suites: every equation family of the theory becomes a named,
//! budgeted check with a structured verdict.
//!
//! Suites assemble a list of independent pure jobs, fan them out on a
//! worker pool and collect one [`CheckCase`] per (law, instance). A
//! failing equation always carries a concrete witness. `PassUpToBudget`
//! records that a comparison was bounded-extensional; it is never upgraded
//! to `Pass`.

pub mod catalog;
pub mod cdc;
pub mod dsc;
pub mod fib_suite;
pub mod gdsc;
pub mod laws;
pub mod lnl_suite;

use crate::mor::{EqVerdict, ModelError};
use crate::types::Budget;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "passUpToBudget")]
    PassUpToBudget,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "skipped")]
    Skipped,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckCase {
    pub suite: String,
    pub law: String,
    pub instance: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub millis: u64,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub exploratory: bool,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    #[serde(rename = "passUpToBudget")]
    pub pass_up_to_budget: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteReport {
    pub model: String,
    pub catalog: String,
    pub budget: Budget,
    pub cases: Vec<CheckCase>,
    pub summary: Summary,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub budget_exhausted: bool,
}

impl SuiteReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckCase> {
        self.cases
            .iter()
            .filter(|c| c.verdict == Verdict::Fail && !c.exploratory)
    }

    pub fn merge(mut self, other: SuiteReport) -> SuiteReport {
        self.cases.extend(other.cases);
        self.budget_exhausted |= other.budget_exhausted;
        self.summary = summarize(&self.cases);
        self
    }
}

fn summarize(cases: &[CheckCase]) -> Summary {
    let mut s = Summary::default();
    for c in cases {
        match c.verdict {
            Verdict::Pass => s.pass += 1,
            Verdict::PassUpToBudget => s.pass_up_to_budget += 1,
            Verdict::Fail => s.fail += 1,
            Verdict::Skipped => s.skipped += 1,
        }
    }
    s
}

/// What a single job reports back.
pub enum Outcome {
    Eq(EqVerdict),
    /// Literal yes/no check; failures carry a description.
    Holds(bool, String),
    Skip(String),
}

impl Outcome {
    fn into_parts(self) -> (Verdict, Option<String>) {
        match self {
            Outcome::Eq(EqVerdict::Equal) => (Verdict::Pass, None),
            Outcome::Eq(EqVerdict::EqualUpToBudget) => (Verdict::PassUpToBudget, None),
            Outcome::Eq(EqVerdict::Distinct(w)) => (Verdict::Fail, Some(w.to_string())),
            Outcome::Holds(true, _) => (Verdict::Pass, None),
            Outcome::Holds(false, why) => (Verdict::Fail, Some(why)),
            Outcome::Skip(reason) => (Verdict::Skipped, Some(reason)),
        }
    }
}

type JobFn = Box<dyn FnOnce() -> Result<Outcome, ModelError> + Send>;

struct Job {
    law: String,
    instance: String,
    exploratory: bool,
    run: JobFn,
}

/// Collects jobs for one suite and executes them on the worker pool.
pub struct Runner {
    suite: String,
    model: String,
    catalog: String,
    budget: Budget,
    jobs: Vec<Job>,
}

impl Runner {
    pub fn new(suite: &str, model: &str, catalog: &str, budget: Budget) -> Runner {
        Runner {
            suite: suite.to_string(),
            model: model.to_string(),
            catalog: catalog.to_string(),
            budget,
            jobs: Vec::new(),
        }
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    pub fn case<F>(&mut self, law: &str, instance: &str, run: F)
    where
        F: FnOnce() -> Result<Outcome, ModelError> + Send + 'static,
    {
        self.jobs.push(Job {
            law: law.to_string(),
            instance: instance.to_string(),
            exploratory: false,
            run: Box::new(run),
        });
    }

    pub fn exploratory_case<F>(&mut self, law: &str, instance: &str, run: F)
    where
        F: FnOnce() -> Result<Outcome, ModelError> + Send + 'static,
    {
        self.jobs.push(Job {
            law: law.to_string(),
            instance: instance.to_string(),
            exploratory: true,
            run: Box::new(run),
        });
    }

    pub fn run(self) -> SuiteReport {
        let suite = self.suite.clone();
        let cases: Vec<CheckCase> = self
            .jobs
            .into_par_iter()
            .map(|job| {
                let start = Instant::now();
                let (verdict, witness) = match (job.run)() {
                    Ok(outcome) => outcome.into_parts(),
                    Err(ModelError::UnsupportedConstructor(what)) => {
                        (Verdict::Skipped, Some(format!("unsupported: {what}")))
                    }
                    Err(ModelError::BudgetExhausted(n)) => (
                        Verdict::Skipped,
                        Some(format!("budget exhausted at {n} elements")),
                    ),
                    Err(other) => (Verdict::Fail, Some(format!("error: {other}"))),
                };
                CheckCase {
                    suite: suite.clone(),
                    law: job.law,
                    instance: job.instance,
                    verdict,
                    witness,
                    millis: start.elapsed().as_millis() as u64,
                    exploratory: job.exploratory,
                }
            })
            .collect();
        let budget_exhausted = cases.iter().any(|c| {
            c.verdict == Verdict::Skipped
                && c.witness
                    .as_deref()
                    .map(|w| w.starts_with("budget exhausted"))
                    .unwrap_or(false)
        });
        SuiteReport {
            model: self.model,
            catalog: self.catalog,
            budget: self.budget,
            summary: summarize(&cases),
            cases,
            budget_exhausted,
        }
    }
}
