//! Command-line driver.
//!
//! Exit statuses: 0 success, 1 usage, parse or hypothesis error, 2 a
//! computational bound was hit, 3 a theorem violation was found.

pub mod groupfile;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::catalog;
use crate::census::{mt_census_with, CensusOptions};
use crate::error::{Error, Result};
use crate::group::{GroupRef, Limits};
use crate::structure::lattice::lattice;
use crate::structure::primes::{p_part, PrimeSet};
use crate::structure::{core_of_subgroup, fitting_subgroup, frattini_subgroup, group_predicates};
use crate::theory::{
    classify_degree_pq, fitting_split, is_minimally_transitive, is_mt_stabilizer_by, reduce_by_normal,
    reduce_piq_pipeline, squarefree_analyze, MtCriterion, SkCase, Terminal,
};
use crate::verify::{verify_theorems, VerifyBounds};

pub use groupfile::{GroupFile, LoadedGroup};
use report::*;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_BOUND: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "mintrans", version, about = "Minimally transitive permutation groups")]
pub struct Cli {
    /// Emit one JSON object per result line.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReduceMode {
    Normal,
    Piq,
    Split,
    Squarefree,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Is the group minimally transitive, or the named subgroup an mt-stabilizer?
    MtCheck {
        file: PathBuf,
        #[arg(long)]
        stabilizer: Option<String>,
    },
    /// Structural predicates with Fitting, Frattini and Sylow summaries.
    Analyze { file: PathBuf },
    /// Run a reduction or splitting analysis on (G, A).
    Reduce {
        file: PathBuf,
        #[arg(long)]
        stabilizer: String,
        #[arg(long, value_enum, default_value = "piq")]
        mode: ReduceMode,
        /// Normal subgroup for `--mode normal`; all admissible ones when absent.
        #[arg(long)]
        normal: Option<String>,
    },
    /// Classify a minimally transitive group of degree pq.
    ClassifyPq { file: PathBuf },
    /// Minimally transitive groups of a degree, up to relabeling.
    Census {
        #[arg(long)]
        degree: usize,
    },
    /// Check every theorem suite over the built-in catalog.
    Verify {
        #[arg(long, default_value_t = 200)]
        max_order: usize,
        #[arg(long)]
        max_degree: Option<usize>,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    let mut ctx = Output { json: cli.json, out };
    match execute(&cli.command, &mut ctx) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_bound() {
                EXIT_BOUND
            } else {
                EXIT_USAGE
            }
        }
    }
}

struct Output<'a> {
    json: bool,
    out: &'a mut dyn Write,
}

impl Output<'_> {
    fn emit<T: Serialize>(
        &mut self,
        record: &T,
        human: impl FnOnce(&mut dyn Write) -> std::io::Result<()>,
    ) -> Result<()> {
        let r = if self.json {
            let line = serde_json::to_string(record).map_err(|e| Error::Internal(e.to_string()))?;
            writeln!(self.out, "{line}")
        } else {
            human(self.out)
        };
        r.map_err(|e| Error::Internal(e.to_string()))
    }
}

fn load(file: &Path) -> Result<LoadedGroup> {
    GroupFile::read(file)?.load(Limits::from_env())
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn execute(cmd: &Command, o: &mut Output) -> Result<i32> {
    match cmd {
        Command::MtCheck { file, stabilizer } => mt_check(&load(file)?, stabilizer.as_deref(), o),
        Command::Analyze { file } => analyze(&load(file)?.group, o),
        Command::Reduce {
            file,
            stabilizer,
            mode,
            normal,
        } => reduce(&load(file)?, stabilizer, *mode, normal.as_deref(), o),
        Command::ClassifyPq { file } => classify(&load(file)?.group, o),
        Command::Census { degree } => census(*degree, o),
        Command::Verify { max_order, max_degree } => verify(*max_order, *max_degree, o),
    }
}

fn mt_check(g: &LoadedGroup, stabilizer: Option<&str>, o: &mut Output) -> Result<i32> {
    let grp = &g.group;
    let record = match stabilizer {
        None => {
            let v = is_minimally_transitive(grp)?;
            MtCheckRecord {
                kind: "mt_check".into(),
                degree: grp.degree(),
                order: grp.order(),
                stabilizer: None,
                index: None,
                holds: v.holds,
                criteria: None,
                core_order: None,
                witness: v.witness.as_ref().map(Into::into),
            }
        }
        Some(name) => {
            let a = g.subgroup(name)?;
            let verdicts = MtCriterion::ALL
                .iter()
                .map(|&c| is_mt_stabilizer_by(grp, a, c))
                .collect::<Result<Vec<_>>>()?;
            let criteria = [verdicts[0].holds, verdicts[1].holds, verdicts[2].holds];
            if criteria.iter().any(|&c| c != criteria[0]) {
                return Err(Error::Internal(format!("mt criteria disagree: {criteria:?}")));
            }
            MtCheckRecord {
                kind: "mt_check".into(),
                degree: grp.degree(),
                order: grp.order(),
                stabilizer: Some(name.to_string()),
                index: Some(a.index()),
                holds: criteria[0],
                criteria: Some(criteria),
                core_order: Some(core_of_subgroup(grp, a)?.order()),
                witness: verdicts[0].witness.as_ref().map(Into::into),
            }
        }
    };
    o.emit(&record, |w| {
        match &record.stabilizer {
            None => writeln!(w, "minimally transitive: {}", yes(record.holds))?,
            Some(name) => {
                writeln!(w, "mt-stabilizer {name}: {}", yes(record.holds))?;
                writeln!(w, "index: {}", record.index.unwrap_or(0))?;
                writeln!(w, "core order: {}", record.core_order.unwrap_or(0))?;
            }
        }
        if let Some(wt) = &record.witness {
            writeln!(
                w,
                "witness: order {} generated by {}",
                wt.order,
                wt.generators.join(" ")
            )?;
        }
        Ok(())
    })?;
    Ok(EXIT_OK)
}

fn analyze(g: &GroupRef, o: &mut Output) -> Result<i32> {
    let lat = lattice(g)?;
    let predicates = group_predicates(g)?;
    let transitive = g.is_transitive();
    let minimally_transitive = if transitive {
        Some(is_minimally_transitive(g)?.holds)
    } else {
        None
    };
    let sylows = PrimeSet::of(g.order())
        .iter()
        .map(|p| {
            let target = p_part(g.order(), p);
            let all: Vec<usize> = (0..lat.len()).filter(|&i| lat.order(i) == target).collect();
            SylowView {
                p,
                order: target,
                count: all.len(),
                normal: all.len() == 1,
            }
        })
        .collect();
    let record = AnalyzeRecord {
        kind: "analyze".into(),
        degree: g.degree(),
        order: g.order(),
        transitive,
        minimally_transitive,
        predicates,
        subgroup_count: lat.len(),
        fitting: (&fitting_subgroup(g)?).into(),
        frattini: (&frattini_subgroup(g)?).into(),
        sylows,
    };
    o.emit(&record, |w| {
        let p = &record.predicates;
        writeln!(
            w,
            "degree {}  order {}  subgroups {}",
            record.degree, record.order, record.subgroup_count
        )?;
        writeln!(w, "transitive: {}", yes(record.transitive))?;
        if let Some(mt) = record.minimally_transitive {
            writeln!(w, "minimally transitive: {}", yes(mt))?;
        }
        writeln!(
            w,
            "abelian: {}  nilpotent: {}  solvable: {}  simple: {}",
            yes(p.is_abelian),
            yes(p.is_nilpotent),
            yes(p.is_solvable),
            yes(p.is_simple)
        )?;
        writeln!(w, "Fitting subgroup: order {}", record.fitting.order)?;
        writeln!(w, "Frattini subgroup: order {}", record.frattini.order)?;
        for s in &record.sylows {
            writeln!(
                w,
                "Sylow {}: order {}, {} conjugate(s){}",
                s.p,
                s.order,
                s.count,
                if s.normal { ", normal" } else { "" }
            )?;
        }
        Ok(())
    })?;
    Ok(EXIT_OK)
}

fn reduce(g: &LoadedGroup, stabilizer: &str, mode: ReduceMode, normal: Option<&str>, o: &mut Output) -> Result<i32> {
    let grp = &g.group;
    let a = g.subgroup(stabilizer)?;
    match mode {
        ReduceMode::Normal => {
            let candidates = match normal {
                Some(name) => vec![g.subgroup(name)?.clone()],
                None => {
                    let lat = lattice(grp)?;
                    let core = core_of_subgroup(grp, a)?;
                    lat.normal_indices()
                        .filter(|&i| i != lat.top() && lat.order(i) > core.order() && core.set().is_subset(lat.set(i)))
                        .map(|i| lat.handle(grp, i))
                        .collect()
                }
            };
            if candidates.is_empty() {
                return Err(Error::inapplicable(
                    "no normal subgroup properly between the core and G",
                ));
            }
            let mut ok = true;
            for h in &candidates {
                let r = reduce_by_normal(grp, a, h)?;
                let rec = NormalReductionRecord::new(h, &r);
                ok &= rec.holds;
                o.emit(&rec, |w| {
                    writeln!(
                        w,
                        "H order {}: AH order {}, degree {} (H-orbits {}), mt {}, larger {}, equivalent {}",
                        rec.normal.order,
                        rec.b.order,
                        rec.degree,
                        rec.orbit_count,
                        yes(rec.mt_ok),
                        yes(rec.larger_ok),
                        yes(rec.equivalent_ok)
                    )
                })?;
            }
            Ok(if ok { EXIT_OK } else { EXIT_VIOLATION })
        }
        ReduceMode::Piq => {
            let trace = reduce_piq_pipeline(grp, a)?;
            let rec = TraceRecord::from(&trace);
            o.emit(&rec, |w| {
                writeln!(w, "p = {}, q = {}", rec.p, rec.q)?;
                for (i, s) in rec.steps.iter().enumerate() {
                    writeln!(
                        w,
                        "step {}: {:?}  |G| {} -> {}  degree {} -> {}  normal subgroup order {}{}",
                        i + 1,
                        s.rule,
                        s.input.group_order,
                        s.output.group_order,
                        s.input.degree,
                        s.output.degree,
                        s.normal_subgroup_order,
                        match s.f2_in_core {
                            Some(b) => format!("  F2 in core: {}", yes(b)),
                            None => String::new(),
                        }
                    )?;
                }
                writeln!(w, "terminal: {:?}", rec.terminal)?;
                if let Some(c) = &rec.classification {
                    writeln!(w, "classification: {}", case_line(c))?;
                }
                for v in &rec.violations {
                    writeln!(w, "VIOLATION: {v}")?;
                }
                Ok(())
            })?;
            let bad = !trace.violations.is_empty()
                || trace.terminal == Terminal::Other
                || trace
                    .classification
                    .as_ref()
                    .is_some_and(|c| c.case == SkCase::Unclassified);
            Ok(if bad { EXIT_VIOLATION } else { EXIT_OK })
        }
        ReduceMode::Split => {
            let r = fitting_split(grp, a)?;
            let rec = SplitRecord::from(&r);
            o.emit(&rec, |w| {
                writeln!(
                    w,
                    "Fitting order {}, pi* = {:?}, Q order {}",
                    rec.fitting.order, rec.pi_star, rec.q.order
                )?;
                for c in &rec.components {
                    writeln!(
                        w,
                        "P_{}: Q*P order {}, stabilizer order {}, conjugates {}, mt {}, core-free {}",
                        c.p,
                        c.product.order,
                        c.stabilizer.order,
                        c.conjugates_checked,
                        yes(c.mt_ok),
                        yes(c.corefree_ok)
                    )?;
                }
                writeln!(w, "holds: {}", yes(rec.holds))
            })?;
            Ok(if rec.holds { EXIT_OK } else { EXIT_VIOLATION })
        }
        ReduceMode::Squarefree => {
            let r = squarefree_analyze(grp, a)?;
            let rec = SquareFreeRecord::from(&r);
            o.emit(&rec, |w| {
                writeln!(
                    w,
                    "Fitting order {}, coprime {}, elementary abelian Sylows {}",
                    rec.fitting.order,
                    yes(rec.coprime_ok),
                    yes(rec.sylows_elem_abelian)
                )?;
                writeln!(
                    w,
                    "nilpotent {}, cyclic with A = 1 {}",
                    yes(rec.nilpotent),
                    yes(rec.nilpotent_case)
                )?;
                writeln!(
                    w,
                    "pi* = {:?}, n* = {}, |Q| = {}, |C| = {}, |Q:C| = n* {}",
                    rec.pi_star,
                    rec.n_star,
                    rec.hall_q.order,
                    rec.c.order,
                    yes(rec.index_ok)
                )?;
                writeln!(
                    w,
                    "Q on Q:C equivalent to G on G:AF: {}",
                    yes(rec.actions_equivalent_ok)
                )?;
                writeln!(w, "holds: {}", yes(rec.holds))
            })?;
            Ok(if rec.holds { EXIT_OK } else { EXIT_VIOLATION })
        }
    }
}

fn case_line(c: &crate::theory::SkClassification) -> String {
    let case = serde_json::to_value(c.case)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default();
    let mut s = format!("{case} (p = {}, q = {})", c.p, c.q);
    if let (Some(n), Some(e)) = (&c.exponent_name, c.exponent) {
        s.push_str(&format!(", {n} = {e}"));
    }
    if let Some(d) = &c.diagnostic {
        s.push_str(&format!(": {d}"));
    }
    s
}

fn classify(g: &GroupRef, o: &mut Output) -> Result<i32> {
    let c = classify_degree_pq(g)?;
    let unclassified = c.case == SkCase::Unclassified;
    let rec = ClassificationRecord {
        kind: "sk_classification".into(),
        classification: c,
    };
    o.emit(&rec, |w| writeln!(w, "{}", case_line(&rec.classification)))?;
    Ok(if unclassified { EXIT_VIOLATION } else { EXIT_OK })
}

fn census(degree: usize, o: &mut Output) -> Result<i32> {
    let opts = CensusOptions {
        limits: Limits::from_env(),
        ..Default::default()
    };
    let entries = mt_census_with(degree, opts)?;
    if !o.json {
        writeln!(o.out, "degree {degree}: {} class(es)", entries.len()).map_err(|e| Error::Internal(e.to_string()))?;
    }
    for e in &entries {
        let rec = CensusRecord::from(e);
        o.emit(&rec, |w| {
            let a = &rec.attributes;
            let flag = |b: Option<bool>| b.map(yes).unwrap_or("?");
            write!(
                w,
                "order {:>5}  abelian {:3}  nilpotent {:3}  solvable {:3}  regular {:3}  gens {}",
                rec.order,
                yes(a.abelian),
                flag(a.nilpotent),
                flag(a.solvable),
                yes(a.regular),
                rec.generators.join(" ")
            )?;
            if let Some(c) = &a.sk_classification {
                write!(w, "  [{}]", case_line(c))?;
            }
            writeln!(w)
        })?;
    }
    Ok(EXIT_OK)
}

fn verify(max_order: usize, max_degree: Option<usize>, o: &mut Output) -> Result<i32> {
    let bounds = VerifyBounds {
        max_order,
        max_degree,
        ..Default::default()
    };
    let report = verify_theorems(&catalog::catalog(), bounds);
    if !o.json {
        writeln!(
            o.out,
            "{:<24} {:>10} {:>12} {:>10}",
            "suite", "instances", "inapplicable", "violations"
        )
        .map_err(|e| Error::Internal(e.to_string()))?;
    }
    for s in &report.suites {
        let rec = SuiteRecord {
            kind: "suite".into(),
            report: s.clone(),
        };
        o.emit(&rec, |w| {
            writeln!(
                w,
                "{:<24} {:>10} {:>12} {:>10}{}",
                s.suite,
                s.instances_tested,
                s.inapplicable,
                s.violations,
                if s.instances_tested == 0 { "  (vacuous)" } else { "" }
            )?;
            for c in &s.counterexamples {
                writeln!(w, "  COUNTEREXAMPLE in {} (degree {}): {}", c.group, c.degree, c.detail)?;
                writeln!(w, "    gens {}", c.generators.join(" "))?;
                for (n, elems) in &c.subgroups {
                    writeln!(w, "    {n} = {{{}}}", elems.join(", "))?;
                }
            }
            Ok(())
        })?;
    }
    let summary = VerifySummaryRecord::from(&report);
    o.emit(&summary, |w| {
        writeln!(
            w,
            "groups checked {}, skipped {}, violations {}",
            summary.groups_checked,
            summary.groups_skipped.len(),
            summary.total_violations
        )
    })?;
    Ok(if summary.total_violations > 0 {
        EXIT_VIOLATION
    } else {
        EXIT_OK
    })
}

/// Convenience for tests and bindings: run and capture both streams.
pub fn run_captured<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(args, &mut out, &mut err);
    (
        code,
        String::from_utf8_lossy(&out).into_owned(),
        String::from_utf8_lossy(&err).into_owned(),
    )
}
