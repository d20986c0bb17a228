use std::path::Path;
use std::sync::Arc;

use serde::Serialize;
use wronski::combinat::{pieri_successors, syt_count_hook, syt_enumerate, Partition, SYT_ENUMERATION_LIMIT};
use wronski::odecore::{InitialConditions, UniversalContext};
use wronski::schurring::{h_symbols, jacobi_trudi, schur_expand, sigma1_power, GradedSequence, GrassmannRing, SchurExpansion};
use wronski::wronskian::{generalized_wronskian_to, universal_tuple, wronskian_span};
use wronski::{DividedSeries, Error, Polynomial, Rational, Result, Substitution, SymbolTable};

use crate::render::{json_line, lines, series_text, Format};
use crate::{Common, GrassArgs, Outcome, EXIT_CHECK_FAILED};

#[derive(Serialize)]
struct HseqJson<'a> {
    rank: u32,
    h: &'a [Polynomial],
}

#[derive(Serialize)]
struct SystemJson<'a> {
    solutions: &'a [DividedSeries<Polynomial>],
}

#[derive(Serialize)]
struct CauchyJson<'a> {
    lambdas: &'a [Polynomial],
    solution: &'a DividedSeries<Polynomial>,
}

#[derive(Serialize)]
struct SytJson<'a> {
    partition: &'a Partition,
    count: String,
}

#[derive(Serialize)]
struct DegreeJson {
    rank: u32,
    dim: u32,
    degree: String,
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}

pub(crate) fn parse_rationals(text: &str) -> Result<Vec<Rational>> {
    text.split(',').map(|t| t.trim().parse::<Rational>()).collect()
}

pub(crate) fn parse_partition(text: &str) -> Result<Partition> {
    text.parse()
}

/// Sends `e_i` to the given rationals; extra symbols of the context (the
/// `y`'s) are kept as variables of the target.
fn spec_substitution(ctx: &UniversalContext, spec: &str) -> Result<Substitution<Polynomial>> {
    let values = parse_rationals(spec)?;
    if values.len() != ctx.rank() + 1 {
        return Err(usage(format!(
            "--spec needs {} values for e1..e{}, got {}",
            ctx.rank() + 1,
            ctx.rank() + 1,
            values.len()
        )));
    }
    let extra: Vec<String> = ctx.symbols().names()[ctx.rank() + 1..].to_vec();
    let target = if extra.is_empty() { SymbolTable::empty() } else { SymbolTable::new(extra.clone())? };
    let images = values.into_iter().map(|v| Polynomial::constant(&target, v));
    let mut subst = Substitution::new(ctx.symbols(), Polynomial::one(&target)).with_leading(images)?;
    for name in &extra {
        subst = subst.with(name, Polynomial::var(&target, name)?)?;
    }
    Ok(subst)
}

fn context(common: &Common, inits: Option<&str>) -> Result<UniversalContext> {
    let order = common.order().max(common.rank() + 1);
    if inits == Some("symbolic") {
        UniversalContext::with_initial_symbols(common.rank(), order)
    } else {
        UniversalContext::new(common.rank(), order)
    }
}

fn initial_conditions(ctx: &UniversalContext, inits: Option<&str>) -> Result<Option<InitialConditions>> {
    match inits {
        None => Ok(None),
        Some("symbolic") => ctx.symbolic_initial_conditions().map(Some),
        Some(text) => ctx.rational_initial_conditions(&parse_rationals(text)?).map(Some),
    }
}

fn apply(subst: Option<&Substitution<Polynomial>>, p: &Polynomial) -> Result<Polynomial> {
    match subst {
        Some(s) => p.substitute(s),
        None => Ok(p.clone()),
    }
}

fn apply_series(subst: Option<&Substitution<Polynomial>>, s: &DividedSeries<Polynomial>) -> Result<DividedSeries<Polynomial>> {
    match subst {
        Some(sub) => s.substitute(sub),
        None => Ok(s.clone()),
    }
}

pub fn hseq(common: &Common, spec: Option<&str>) -> Result<Outcome> {
    let ctx = context(common, None)?;
    let subst = spec.map(|s| spec_substitution(&ctx, s)).transpose()?;
    let h = ctx.h_sequence(common.order());
    let values = h.values().iter().map(|p| apply(subst.as_ref(), p)).collect::<Result<Vec<_>>>()?;
    Ok(Outcome::ok(match common.format {
        Format::Text => lines(values.iter().enumerate().map(|(j, p)| format!("h{j} = {p}"))),
        Format::Json => json_line(&HseqJson { rank: common.rank, h: &values }),
    }))
}

pub fn solve(common: &Common, spec: Option<&str>, inits: Option<&str>) -> Result<Outcome> {
    let ctx = context(common, inits)?;
    if common.order() < common.rank() {
        return Err(usage("--order must be at least --rank"));
    }
    let subst = spec.map(|s| spec_substitution(&ctx, s)).transpose()?;
    let name = if subst.is_some() { "v" } else { "u" };
    match initial_conditions(&ctx, inits)? {
        None => {
            let sols = ctx
                .universal_solutions(common.order())?
                .iter()
                .map(|u| apply_series(subst.as_ref(), u))
                .collect::<Result<Vec<_>>>()?;
            Ok(Outcome::ok(match common.format {
                Format::Text => lines(sols.iter().enumerate().map(|(j, s)| format!("{name}{j} = {}", series_text(s)))),
                Format::Json => json_line(&SystemJson { solutions: &sols }),
            }))
        }
        Some(data) => {
            let sol = ctx.cauchy_solve(&data, common.order())?;
            let lambdas = sol.lambdas.iter().map(|l| apply(subst.as_ref(), l)).collect::<Result<Vec<_>>>()?;
            let series = apply_series(subst.as_ref(), &sol.series)?;
            Ok(Outcome::ok(match common.format {
                Format::Text => {
                    let mut out: Vec<String> =
                        lambdas.iter().enumerate().map(|(j, l)| format!("Lambda{j} = {l}")).collect();
                    out.push(format!("y = {}", series_text(&series)));
                    lines(out)
                }
                Format::Json => json_line(&CauchyJson { lambdas: &lambdas, solution: &series }),
            }))
        }
    }
}

pub fn solve_nonhom(common: &Common, spec: Option<&str>, inits: Option<&str>, rhs: &Path) -> Result<Outcome> {
    let ctx = context(common, inits)?;
    let text = std::fs::read_to_string(rhs).map_err(|e| usage(format!("cannot read {}: {e}", rhs.display())))?;
    let f: DividedSeries<Polynomial> =
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", rhs.display())))?;
    let data = match initial_conditions(&ctx, inits)? {
        Some(d) => d,
        None => ctx.rational_initial_conditions(&vec![Rational::zero(); ctx.rank() + 1])?,
    };
    let y = ctx.solve_nonhomogeneous(&f, &data, common.order())?;
    let subst = spec.map(|s| spec_substitution(&ctx, s)).transpose()?;
    let y = apply_series(subst.as_ref(), &y)?;
    Ok(Outcome::ok(match common.format {
        Format::Text => format!("y = {}\n", series_text(&y)),
        Format::Json => json_line(&y),
    }))
}

pub fn wronskian(common: &Common, spec: Option<&str>, partition: &str) -> Result<Outcome> {
    let lambda = parse_partition(partition)?;
    let r = common.rank();
    let n = common.order();
    let ctx = UniversalContext::new(r, (n + wronskian_span(&lambda, r)).max(r + 1))?;
    let u = universal_tuple(&ctx, n + wronskian_span(&lambda, r))?;
    let w = generalized_wronskian_to(&u, &lambda, n)?;
    let subst = spec.map(|s| spec_substitution(&ctx, s)).transpose()?;
    let w = apply_series(subst.as_ref(), &w)?;
    Ok(Outcome::ok(match common.format {
        Format::Text => format!("W({lambda}) = {}\n", series_text(&w)),
        Format::Json => json_line(&w),
    }))
}

/// `h1..hm` with `m` the largest index written in `text`.
fn h_table_for(text: &str) -> Arc<SymbolTable> {
    let bytes = text.as_bytes();
    let mut m = 1;
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b'h' {
            let start = i + 1;
            let mut j = start;
            while j < bytes.len() && bytes[j].is_ascii_digit() {
                j += 1;
            }
            if let Ok(k) = text[start..j].parse::<usize>() {
                m = m.max(k);
            }
            i = j.max(i + 1);
        } else {
            i += 1;
        }
    }
    h_symbols(m.min(64))
}

fn expansion_output(e: &SchurExpansion, format: Format) -> String {
    match format {
        Format::Text => format!("{e}\n"),
        Format::Json => json_line(e),
    }
}

pub fn schur(common: &Common, partition: Option<&str>, poly: Option<&str>, k: Option<u32>) -> Result<Outcome> {
    let r = common.rank();
    if let Some(text) = poly {
        let p = Polynomial::parse(text, &h_table_for(text))?;
        return Ok(Outcome::ok(expansion_output(&schur_expand(&p, r)?, common.format)));
    }
    if let Some(k) = k {
        return Ok(Outcome::ok(expansion_output(&sigma1_power(k, r)?, common.format)));
    }
    let lambda = parse_partition(partition.unwrap_or(""))?;
    let ctx = UniversalContext::new(r, r + 1)?;
    let h = GradedSequence::from_h(&ctx.h_sequence(lambda.part(0) as usize + r));
    let delta = jacobi_trudi(&lambda, &h, r)?;
    Ok(Outcome::ok(match common.format {
        Format::Text => format!("{delta}\n"),
        Format::Json => json_line(&delta),
    }))
}

pub fn pieri(common: &Common, partition: &str, k: u32, dim: Option<u32>) -> Result<Outcome> {
    let lambda = parse_partition(partition)?;
    let r = common.rank();
    let col_bound = match dim {
        Some(d) => Some(GrassmannRing::new(r, d as usize)?.cols()),
        None => None,
    };
    let succ = pieri_successors(&lambda, k, r, col_bound)?;
    let e = SchurExpansion::from_terms(succ.into_iter().map(|m| (m, Rational::one())));
    Ok(Outcome::ok(expansion_output(&e, common.format)))
}

pub fn syt(partition: &str, format: Format) -> Result<Outcome> {
    let lambda = parse_partition(partition)?;
    let hook = syt_count_hook(&lambda)?;
    if lambda.weight() <= SYT_ENUMERATION_LIMIT {
        let walk = syt_enumerate(&lambda)?;
        if walk.count != hook.count {
            return Ok(Outcome {
                code: EXIT_CHECK_FAILED,
                stdout: String::new(),
                stderr: format!("hook formula gives {} but enumeration gives {}\n", hook.count, walk.count),
            });
        }
    }
    Ok(Outcome::ok(match format {
        Format::Text => format!("{}\n", hook.count),
        Format::Json => json_line(&SytJson { partition: &lambda, count: hook.count.to_string() }),
    }))
}

pub fn degree(rank: u32, dim: u32, format: Format) -> Result<Outcome> {
    let g = GrassmannRing::new(rank as usize, dim as usize)?;
    let d = g.degree()?;
    Ok(Outcome::ok(match format {
        Format::Text => format!("{d}\n"),
        Format::Json => json_line(&DegreeJson { rank, dim, degree: d.to_string() }),
    }))
}

pub fn product(grass: &GrassArgs, left: &str, right: &str) -> Result<Outcome> {
    let g = GrassmannRing::new(grass.rank as usize, grass.dim as usize)?;
    let a = SchurExpansion::single(parse_partition(left)?);
    let b = SchurExpansion::single(parse_partition(right)?);
    Ok(Outcome::ok(expansion_output(&g.product(&a, &b)?, grass.format)))
}
