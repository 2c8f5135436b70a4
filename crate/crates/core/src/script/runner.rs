//! Executes resolved scripts.

use std::collections::HashMap;
use std::time::Instant;

use rayon::prelude::*;

use super::ast::{Expr, OptValue, PolyText, RingDecl, Script, Statement, Stmt};
use super::report::{
    CommandResult, CommandStatus, EngineInfo, ErrorInfo, OptionsEcho, Report, Summary, Timing,
};
use crate::arith::{MonomialOrder, Poly, PolyRing, PrimeField, DEFAULT_PRIME};
use crate::error::{Error, Result};
use crate::groebner::{GradedRing, Ideal};
use crate::homology::{
    depth, dual, ext, ext_is_zero, gorenstein_dimension, grade, hom, is_reflexive,
    is_totally_reflexive, module_grade, projective_dimension, ring_depth, tensor, tor,
    tor_is_zero, trace_and_stability, FpModule, HomDim, LengthStatus, Matrix,
};
use crate::linkage::random::{geolink_battery_suite, tor_nonvanishing_suite, DEFAULT_SEED};
use crate::linkage::{
    betti_swap_check, cosyzygy, depth_via_linked_syzygies, dual_relation_check,
    ext_tor_duality_check, geometric_link_report, ideals_linked_by, is_gorenstein_ideal,
    is_gorenstein_ring, is_horizontally_linked, lambda, numerically_consistent, stably_consistent,
    syzygy_power, tor_nonvanishing_check, tor_shift_check, transpose, verify_sum_theorem,
    HdimSelector, LinkageReport,
};

/// Settings of a run; `set` statements in the script override `bound`,
/// `seed` and `fail_fast`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOptions {
    /// Characteristic for rings declared without `p=`.
    pub prime: u32,
    pub order: MonomialOrder,
    pub bound: usize,
    pub seed: u64,
    pub fail_fast: bool,
    /// Worker threads; `None` reads `LK_THREADS`.
    pub threads: Option<usize>,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            prime: DEFAULT_PRIME,
            order: MonomialOrder::Grevlex,
            bound: 4,
            seed: DEFAULT_SEED,
            fail_fast: false,
            threads: None,
        }
    }
}

fn thread_count(opts: &RunOptions) -> usize {
    opts.threads
        .or_else(|| std::env::var("LK_THREADS").ok().and_then(|v| v.parse().ok()))
        .filter(|&n| n > 0)
        .unwrap_or(0)
}

#[derive(Clone)]
enum Value {
    Ring(GradedRing),
    Ideal(Ideal),
    Module(FpModule),
    Int(i64),
    Dim(HomDim),
    Selector(HdimSelector),
    Text(String),
}

impl Value {
    fn kind(&self) -> &'static str {
        match self {
            Value::Ring(_) => "ring",
            Value::Ideal(_) => "ideal",
            Value::Module(_) => "module",
            Value::Int(_) => "integer",
            Value::Dim(_) => "dimension",
            Value::Selector(_) => "selector",
            Value::Text(_) => "text",
        }
    }

    fn module(self) -> Result<FpModule> {
        match self {
            Value::Module(m) => Ok(m),
            v => Err(Error::InvalidInput(format!("expected a module, found {}", v.kind()))),
        }
    }

    fn ideal(self) -> Result<Ideal> {
        match self {
            Value::Ideal(i) => Ok(i),
            v => Err(Error::InvalidInput(format!("expected an ideal, found {}", v.kind()))),
        }
    }

    fn int(self) -> Result<i64> {
        match self {
            Value::Int(i) => Ok(i),
            v => Err(Error::InvalidInput(format!("expected an integer, found {}", v.kind()))),
        }
    }

    fn count(self) -> Result<usize> {
        let v = self.int()?;
        usize::try_from(v).map_err(|_| Error::InvalidInput(format!("expected a nonnegative integer, found {v}")))
    }
}

/// Integers extended by `±∞`, for comparisons.
fn as_extended(v: &Value) -> Option<(i8, i64)> {
    match v {
        Value::Int(i) => Some((0, *i)),
        Value::Dim(HomDim::Finite(n)) => Some((0, *n as i64)),
        Value::Dim(HomDim::Infinite) => Some((1, 0)),
        Value::Dim(HomDim::NegInfinite) => Some((-1, 0)),
        _ => None,
    }
}

fn show_number(v: &Value) -> String {
    match v {
        Value::Int(i) => i.to_string(),
        Value::Dim(d) => d.to_string(),
        _ => String::new(),
    }
}

struct Env {
    rings: HashMap<String, GradedRing>,
    ideals: HashMap<String, Ideal>,
    modules: HashMap<String, FpModule>,
    active: Option<String>,
    prime: u32,
    order: MonomialOrder,
    bound: usize,
    seed: u64,
    fail_fast: bool,
}

impl Env {
    fn ring(&self) -> Result<&GradedRing> {
        self.active
            .as_ref()
            .and_then(|r| self.rings.get(r))
            .ok_or_else(|| Error::InvalidInput("no active ring".into()))
    }

    fn declare_ring(&mut self, r: &RingDecl) -> Result<()> {
        let weights = r.degrees.clone().unwrap_or_else(|| vec![1; r.vars.len()]);
        let field = PrimeField::new(r.prime.unwrap_or(self.prime))?;
        let base = PolyRing::new(r.vars.clone(), weights, field, self.order)?;
        let rels = r
            .relations
            .iter()
            .map(|f| base.parse_at(&f.text, f.pos.line, f.pos.col))
            .collect::<Result<Vec<_>>>()?;
        let ring = if rels.is_empty() {
            GradedRing::polynomial(base)
        } else {
            GradedRing::quotient(base, rels)?
        };
        self.rings.insert(r.name.clone(), ring);
        self.active = Some(r.name.clone());
        Ok(())
    }

    fn polys(&self, ring: &GradedRing, items: &[PolyText]) -> Result<Vec<Poly>> {
        items
            .iter()
            .map(|f| ring.base().parse_at(&f.text, f.pos.line, f.pos.col))
            .collect()
    }

    fn eval(&self, e: &Expr) -> Result<Value> {
        match e {
            Expr::Int(v) => Ok(Value::Int(*v)),
            Expr::Name(n, _) => {
                if let Some(r) = self.rings.get(n) {
                    return Ok(Value::Ring(r.clone()));
                }
                if let Some(i) = self.ideals.get(n) {
                    return Ok(Value::Ideal(i.clone()));
                }
                if let Some(m) = self.modules.get(n) {
                    return Ok(Value::Module(m.clone()));
                }
                match n.as_str() {
                    "pd" => Ok(Value::Selector(HdimSelector::Pd)),
                    "gdim" => Ok(Value::Selector(HdimSelector::Gdim)),
                    "inf" => Ok(Value::Dim(HomDim::Infinite)),
                    _ => Err(Error::InvalidInput(format!("unknown name {n}"))),
                }
            }
            Expr::Ideal(items) => {
                let ring = self.ring()?;
                Ideal::new(ring, self.polys(ring, items)?).map(Value::Ideal)
            }
            Expr::Matrix(_) => Err(Error::InvalidInput("a matrix is only allowed inside coker".into())),
            Expr::Quot(a, b) => {
                let Value::Ring(r) = self.eval(a)? else {
                    return Err(Error::InvalidInput("expected a ring before `/`".into()));
                };
                let i = match b.as_ref() {
                    Expr::Ideal(items) => Ideal::new(&r, self.polys(&r, items)?)?,
                    other => self.eval(other)?.ideal()?,
                };
                r.check_same(i.ring())?;
                Ok(Value::Module(FpModule::quotient(&i)))
            }
            Expr::Call(name, args, _) => self.call(name, args),
        }
    }

    fn call(&self, name: &str, args: &[Expr]) -> Result<Value> {
        if name == "coker" {
            let Some(Expr::Matrix(rows)) = args.first() else {
                return Err(Error::InvalidInput("coker expects a matrix literal".into()));
            };
            let ring = self.ring()?;
            let rows = rows
                .iter()
                .map(|r| self.polys(ring, r))
                .collect::<Result<Vec<_>>>()?;
            return Ok(Value::Module(FpModule::coker(Matrix::from_rows(ring, rows, None)?)));
        }
        let vals = args.iter().map(|a| self.eval(a)).collect::<Result<Vec<_>>>()?;
        let mut it = vals.into_iter();
        let mut next = || {
            it.next()
                .ok_or_else(|| Error::InvalidInput(format!("missing argument to {name}")))
        };
        Ok(match name {
            "quotient" => Value::Module(FpModule::quotient(&next()?.ideal()?)),
            "ideal_as_module" => Value::Module(FpModule::ideal_module(&next()?.ideal()?)),
            "free" => {
                let mut degs = Vec::new();
                while let Ok(v) = next() {
                    degs.push(v.int()? as i32);
                }
                if degs.is_empty() {
                    degs.push(0);
                }
                Value::Module(FpModule::free(self.ring()?, &degs))
            }
            "residue_field" => Value::Module(FpModule::residue_field(self.ring()?)),
            "lambda" => Value::Module(lambda(&next()?.module()?)?),
            "tr" => Value::Module(transpose(&next()?.module()?)),
            "cosyz" => Value::Module(cosyzygy(&next()?.module()?)?),
            "dual" => Value::Module(dual(&next()?.module()?)?),
            "stable_part" => Value::Module(trace_and_stability(&next()?.module()?)?.stable_part),
            "syz" => {
                let n = next()?.count()?;
                Value::Module(syzygy_power(&next()?.module()?, n)?)
            }
            "hom" => Value::Module(hom(&next()?.module()?, &next()?.module()?)?),
            "tensor" => Value::Module(tensor(&next()?.module()?, &next()?.module()?)?),
            "direct_sum" => Value::Module(next()?.module()?.direct_sum(&next()?.module()?)?),
            "ext" | "tor" => {
                let i = next()?.count()?;
                let (a, b) = (next()?.module()?, next()?.module()?);
                Value::Module(if name == "ext" { ext(i, &a, &b)? } else { tor(i, &a, &b)? })
            }
            "shift" => {
                let a = next()?.module()?;
                Value::Module(a.shift(next()?.int()? as i32))
            }
            "ann" => Value::Ideal(next()?.module()?.annihilator()),
            "trace" => Value::Ideal(trace_and_stability(&next()?.module()?)?.trace),
            "colon" | "sum" | "intersect" | "product" => {
                let (a, b) = (next()?.ideal()?, next()?.ideal()?);
                Value::Ideal(match name {
                    "colon" => a.colon(&b)?,
                    "sum" => a.sum(&b)?,
                    "intersect" => a.intersect(&b)?,
                    _ => a.product(&b)?,
                })
            }
            "maximal" => Value::Ideal(Ideal::maximal(self.ring()?)),
            "pd" => Value::Dim(projective_dimension(&next()?.module()?)?),
            "gdim" => Value::Dim(gorenstein_dimension(&next()?.module()?)?),
            "depth" => Value::Dim(depth(&next()?.module()?)?),
            "grade" => Value::Dim(grade(&next()?.ideal()?)?),
            "module_grade" => Value::Dim(module_grade(&next()?.module()?)?),
            "length" => Value::Dim(match next()?.module()?.length() {
                Some(l) => HomDim::Finite(l as usize),
                None => HomDim::Infinite,
            }),
            "dim" => Value::Int(next()?.module()?.dim() as i64),
            "num_gens" => Value::Int(next()?.module()?.num_generators() as i64),
            "ring_depth" => Value::Int(ring_depth(self.ring()?)? as i64),
            "gb" => {
                let i = next()?.ideal()?;
                let r = i.ring();
                let lines: Vec<String> = i.gb().iter().map(|f| r.format(f)).collect();
                Value::Text(lines.join("\n"))
            }
            "betti" => {
                let a = next()?.module()?;
                let b = match next() {
                    Ok(v) => v.count()?,
                    Err(_) => self.bound,
                };
                let res = a.resolution(b)?;
                let mut t = res.betti().to_string();
                if !res.is_complete() {
                    t.push_str(&format!("(truncated at homological degree {b})\n"));
                }
                Value::Text(t)
            }
            "hilbert" => {
                let a = next()?.module()?;
                let lo = match next() {
                    Ok(v) => v.int()? as i32,
                    Err(_) => a.series().min_degree().unwrap_or(0),
                };
                let hi = match next() {
                    Ok(v) => v.int()? as i32,
                    Err(_) => lo + 10,
                };
                let n = a.numerics(lo, hi);
                let mut lines: Vec<String> = n.values.iter().map(|(d, v)| format!("{d}: {v}")).collect();
                lines.push(match n.length {
                    LengthStatus::Finite(l) => format!("length: {l}"),
                    LengthStatus::Infinite => "length: infinite".to_string(),
                    LengthStatus::Undetermined => "length: finite, outside the window".to_string(),
                });
                Value::Text(lines.join("\n"))
            }
            "presentation" => {
                let a = next()?.module()?.minimal_presentation();
                let p = a.presentation();
                Value::Text(format!(
                    "generator degrees {:?}\nrelation degrees {:?}\n{}",
                    p.row_degs(),
                    p.col_degs(),
                    p
                ))
            }
            other => return Err(Error::InvalidInput(format!("{other} is not a value"))),
        })
    }

    fn check(&self, name: &str, args: &[Expr]) -> Result<LinkageReport> {
        let vals = args.iter().map(|a| self.eval(a)).collect::<Result<Vec<_>>>()?;
        let mut it = vals.clone().into_iter();
        let mut next = || {
            it.next()
                .ok_or_else(|| Error::InvalidInput(format!("missing argument to {name}")))
        };
        let simple = |ok: bool, witness: Option<String>| {
            let mut r = LinkageReport::new(name);
            r.verdict(name, ok, witness);
            r
        };
        Ok(match name {
            "horizontally_linked" => is_horizontally_linked(&next()?.module()?)?,
            "linked_by" => ideals_linked_by(&next()?.ideal()?, &next()?.ideal()?, &next()?.ideal()?)?,
            "geo_link" => geometric_link_report(&next()?.ideal()?, &next()?.ideal()?, true)?,
            "gorenstein" => is_gorenstein_ideal(&next()?.ideal()?)?.report,
            "gorenstein_ring" => simple(is_gorenstein_ring(self.ring()?)?, None),
            "sum_theorem" => verify_sum_theorem(&next()?.module()?, &next()?.module()?, &next()?.ideal()?)?,
            "ext_tor_duality" => ext_tor_duality_check(&next()?.module()?, next()?.count()?)?,
            "tor_shift" => tor_shift_check(&next()?.module()?, next()?.count()?)?,
            "depth_scan" => {
                let a = next()?.module()?;
                let sel = match next()? {
                    Value::Selector(s) => s,
                    v => return Err(Error::InvalidInput(format!("expected pd or gdim, found {}", v.kind()))),
                };
                let nmax = match next() {
                    Ok(v) => v.count()?,
                    Err(_) => self.bound,
                };
                depth_via_linked_syzygies(&a, sel, nmax)?.report
            }
            "tor_nonvanishing" => tor_nonvanishing_check(&next()?.module()?, next()?.count()?)?,
            "random_geolink" => {
                let count = next().map_or(Ok(10), |v| v.count())?;
                geolink_battery_suite(&[self.ring()?.clone()], count, self.seed)?.1
            }
            "random_tor_nonvanishing" => {
                let count = next().map_or(Ok(5), |v| v.count())?;
                let nmax = next().map_or(Ok(3), |v| v.count())?;
                tor_nonvanishing_suite(&[self.ring()?.clone()], count, nmax, self.seed)?.1
            }
            "eq" => {
                let (a, b) = (next()?, next()?);
                match (&a, &b) {
                    (Value::Ideal(x), Value::Ideal(y)) => {
                        x.ring().check_same(y.ring())?;
                        simple(x == y, Some(format!("{} vs {}", x.format(), y.format())))
                    }
                    (Value::Module(x), Value::Module(y)) => {
                        let mut r = LinkageReport::new(name);
                        r.verdict("numeric_consistent", numerically_consistent(x, y)?, None);
                        r
                    }
                    (Value::Module(x), Value::Int(0)) => simple(x.is_zero(), None),
                    _ => match (as_extended(&a), as_extended(&b)) {
                        (Some(x), Some(y)) => {
                            simple(x == y, Some(format!("{} vs {}", show_number(&a), show_number(&b))))
                        }
                        _ => {
                            return Err(Error::InvalidInput(format!(
                                "cannot compare {} with {}",
                                a.kind(),
                                b.kind()
                            )))
                        }
                    },
                }
            }
            "is_zero" => match next()? {
                Value::Module(x) => simple(x.is_zero(), None),
                Value::Ideal(x) => simple(x.is_zero(), Some(x.format())),
                v => return Err(Error::InvalidInput(format!("is_zero of a {}", v.kind()))),
            },
            "is_free" => simple(next()?.module()?.is_free(), None),
            "is_free_over" => {
                let a = next()?.module()?;
                let i = next()?.ideal()?;
                let q = a.ring().quotient_by(i.gens())?;
                let over = a.change_ring(&q)?.minimal_presentation();
                simple(
                    over.is_free(),
                    Some(format!("{} relations over R/{}", over.presentation().ncols(), i.format())),
                )
            }
            "is_cyclic" => simple(next()?.module()?.is_cyclic(), None),
            "is_stable" => {
                let st = trace_and_stability(&next()?.module()?)?;
                simple(st.stable, Some(format!("trace {}", st.trace.format())))
            }
            "is_reflexive" => simple(is_reflexive(&next()?.module()?)?, None),
            "totally_reflexive" => simple(is_totally_reflexive(&next()?.module()?)?, None),
            "subset" => simple(next()?.ideal()?.is_subset_of(&next()?.ideal()?)?, None),
            "ext_vanishes" | "tor_vanishes" => {
                let i = next()?.count()?;
                let (a, b) = (next()?.module()?, next()?.module()?);
                let z = if name == "ext_vanishes" {
                    ext_is_zero(i, &a, &b)?
                } else {
                    tor_is_zero(i, &a, &b)?
                };
                simple(z, None)
            }
            "betti_swap" => betti_swap_check(&next()?.module()?)?,
            "dual_relation" => dual_relation_check(&next()?.module()?)?,
            "numeric_iso" => simple(numerically_consistent(&next()?.module()?, &next()?.module()?)?, None),
            "stable_iso" => simple(stably_consistent(&next()?.module()?, &next()?.module()?)?, None),
            other => return Err(Error::InvalidInput(format!("unknown check {other}"))),
        })
    }

    fn echo(&self) -> OptionsEcho {
        OptionsEcho {
            prime: self.prime,
            order: self.order.name(),
            bound: self.bound,
            seed: self.seed,
            fail_fast: self.fail_fast,
        }
    }
}

fn error_info(op: &str, e: &Error) -> ErrorInfo {
    match e {
        Error::Precondition { op, reason } => ErrorInfo {
            op: op.to_string(),
            message: reason.clone(),
        },
        other => ErrorInfo {
            op: op.to_string(),
            message: other.to_string(),
        },
    }
}

fn command_name(st: &Statement) -> &str {
    match &st.stmt {
        Stmt::Check { name, .. } => name,
        Stmt::Show(Expr::Call(name, _, _)) => name,
        _ => "show",
    }
}

fn is_check(st: &Statement) -> bool {
    matches!(st.stmt, Stmt::Check { .. })
}

/// Runs a `show` or check statement.
fn run_command(env: &Env, st: &Statement) -> (CommandResult, Timing) {
    let start = Instant::now();
    let mut res = CommandResult {
        line: st.pos.line,
        command: st.to_string(),
        status: CommandStatus::Output,
        report: None,
        output: None,
        error: None,
    };
    match &st.stmt {
        Stmt::Show(e) => match env.eval(e) {
            Ok(v) => {
                res.output = Some(match v {
                    Value::Ideal(i) => i.format(),
                    Value::Module(m) => {
                        let m = m.minimal_presentation();
                        format!(
                            "module with generator degrees {:?}, relations {}",
                            m.gen_degrees(),
                            m.presentation()
                        )
                    }
                    Value::Text(t) => t,
                    Value::Ring(r) => r.describe(),
                    n @ (Value::Int(_) | Value::Dim(_)) => show_number(&n),
                    Value::Selector(s) => s.to_string(),
                });
            }
            Err(err) => {
                res.status = CommandStatus::Error;
                res.error = Some(error_info(command_name(st), &err));
            }
        },
        Stmt::Check { negated, name, args } => match env.check(name, args) {
            Ok(rep) => {
                let pass = if *negated {
                    !rep.passed() && rep.hypotheses_hold() && rep.consistency
                } else {
                    rep.passed()
                };
                res.status = if pass { CommandStatus::Pass } else { CommandStatus::Fail };
                res.report = Some(rep);
            }
            Err(err) => {
                res.status = CommandStatus::Error;
                res.error = Some(error_info(name, &err));
            }
        },
        _ => unreachable!("only commands run here"),
    }
    let t = Timing {
        line: st.pos.line,
        millis: start.elapsed().as_secs_f64() * 1e3,
    };
    (res, t)
}

/// Runs a parsed script. Checks that fail do not stop the run unless
/// `fail_fast` is set; a failed declaration always stops it.
pub fn run_script(script: &Script, opts: &RunOptions) -> Report {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(thread_count(opts))
        .build()
        .expect("thread pool");
    pool.install(|| run_inner(script, opts))
}

fn run_inner(script: &Script, opts: &RunOptions) -> Report {
    let mut env = Env {
        rings: HashMap::new(),
        ideals: HashMap::new(),
        modules: HashMap::new(),
        active: None,
        prime: opts.prime,
        order: opts.order,
        bound: opts.bound,
        seed: opts.seed,
        fail_fast: opts.fail_fast,
    };
    let mut results = Vec::new();
    let mut timing = Vec::new();
    let mut summary = Summary::default();
    let total = script.statements.len();
    for (k, st) in script.statements.iter().enumerate() {
        let mut batch = Vec::new();
        let decl: Result<()> = match &st.stmt {
            Stmt::Ring(r) => env.declare_ring(r),
            Stmt::Ideal { name, expr } => env.eval(expr).and_then(Value::ideal).map(|i| {
                env.ideals.insert(name.clone(), i);
            }),
            Stmt::Module { name, expr } => env.eval(expr).and_then(Value::module).map(|m| {
                env.modules.insert(name.clone(), m);
            }),
            Stmt::Use(n) => {
                env.active = Some(n.clone());
                Ok(())
            }
            Stmt::Set { key, value } => {
                match (key.as_str(), value) {
                    ("bound", OptValue::Int(v)) => env.bound = *v as usize,
                    ("seed", OptValue::Int(v)) => env.seed = *v,
                    ("fail_fast", OptValue::Bool(b)) => env.fail_fast = *b,
                    _ => {}
                }
                Ok(())
            }
            Stmt::Check { .. } | Stmt::Show(_) => {
                batch.push((is_check(st), run_command(&env, st)));
                Ok(())
            }
            Stmt::Par(body) => {
                let env_ref = &env;
                batch = body
                    .par_iter()
                    .map(|s| (is_check(s), run_command(env_ref, s)))
                    .collect();
                Ok(())
            }
        };
        if let Err(e) = decl {
            summary.errors += 1;
            results.push(CommandResult {
                line: st.pos.line,
                command: st.to_string(),
                status: CommandStatus::Error,
                report: None,
                output: None,
                error: Some(error_info("declaration", &e)),
            });
            summary.stopped_early = k + 1 < total;
            break;
        }
        let mut stop = false;
        for (check, (r, t)) in batch {
            match r.status {
                CommandStatus::Pass => {
                    summary.checks += 1;
                    summary.passed += 1;
                }
                CommandStatus::Fail => {
                    summary.checks += 1;
                    summary.failed += 1;
                    stop |= env.fail_fast;
                }
                CommandStatus::Error => {
                    summary.errors += 1;
                    summary.checks += check as usize;
                    stop |= env.fail_fast;
                }
                CommandStatus::Output => {}
            }
            results.push(r);
            timing.push(t);
        }
        if stop {
            summary.stopped_early = k + 1 < total;
            break;
        }
    }
    Report {
        engine: EngineInfo::default(),
        options: env.echo(),
        results,
        summary,
        timing,
    }
}
