use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use wronski::combinat::{partitions_in_box, syt_count_hook, Partition};
use wronski::odecore::UniversalContext;
use wronski::schurring::SchurExpansion;
use wronski::wronskian::{derivative_expansion_with, giambelli_with, pieri_wronskian_with};
use wronski::{DividedSeries, Error, Polynomial, Rational, Result, Ring};

use crate::render::{json_line, lines, Format};
use crate::{CheckArgs, CheckKind, Outcome, EXIT_CHECK_FAILED, EXIT_OK};

#[derive(Serialize)]
struct Case {
    case: String,
    ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<String>,
}

#[derive(Serialize)]
struct Report {
    check: &'static str,
    rank: u32,
    order: u32,
    passed: usize,
    failed: usize,
    cases: Vec<Case>,
}

fn partitions_up_to(weight: u32, rank: usize) -> Vec<Partition> {
    (0..=weight).flat_map(|n| partitions_in_box(n, rank + 1, None)).collect()
}

pub fn run(args: &CheckArgs) -> Result<Outcome> {
    let (name, cases) = match args.kind {
        CheckKind::Giambelli => ("giambelli", giambelli(args)?),
        CheckKind::Pieri => ("pieri", pieri(args)?),
        CheckKind::Derivative => ("derivative", derivative(args)?),
        CheckKind::Euler => ("euler", euler(args)?),
        CheckKind::Nonhom => ("nonhom", nonhom(args)?),
    };
    let failed = cases.iter().filter(|c| !c.ok).count();
    let report = Report {
        check: name,
        rank: args.common.rank,
        order: args.common.order,
        passed: cases.len() - failed,
        failed,
        cases,
    };
    let stdout = match args.common.format {
        Format::Json => json_line(&report),
        Format::Text => {
            let mut out: Vec<String> = report
                .cases
                .iter()
                .map(|c| {
                    let status = if c.ok { "ok  " } else { "FAIL" };
                    match &c.detail {
                        Some(d) => format!("{status} {} ({d})", c.case),
                        None => format!("{status} {}", c.case),
                    }
                })
                .collect();
            out.push(format!(
                "{name}: {} passed, {} failed (rank {}, order {})",
                report.passed, report.failed, report.rank, report.order
            ));
            lines(out)
        }
    };
    let code = if failed == 0 { EXIT_OK } else { EXIT_CHECK_FAILED };
    Ok(Outcome { code, stdout, stderr: String::new() })
}

fn context(args: &CheckArgs) -> Result<UniversalContext> {
    let r = args.common.rank();
    UniversalContext::new(r, args.common.order().max(r + 1))
}

fn giambelli(args: &CheckArgs) -> Result<Vec<Case>> {
    let ctx = context(args)?;
    let shapes = partitions_up_to(args.max_weight, ctx.rank());
    let mut out = Vec::new();
    for (i, lambda) in shapes.iter().enumerate() {
        let fault = args.inject_fault && i + 1 == shapes.len();
        let one = ctx.one();
        let cert = giambelli_with(&ctx, lambda, args.common.order(), fault.then_some(&one))?;
        out.push(Case {
            case: format!("W({lambda}) = ({}) W0", cert.ratio),
            ok: cert.verified,
            detail: cert.first_mismatch.map(|n| format!("first mismatch at t^{n}")),
        });
    }
    Ok(out)
}

fn pieri(args: &CheckArgs) -> Result<Vec<Case>> {
    let ctx = context(args)?;
    let shapes = partitions_up_to(args.max_weight, ctx.rank());
    let mut out = Vec::new();
    for (i, lambda) in shapes.iter().enumerate() {
        for k in 1..=args.k {
            let fault = args.inject_fault && i + 1 == shapes.len() && k == args.k;
            let check = pieri_wronskian_with(&ctx, lambda, k, args.common.order(), fault)?;
            let rhs: Vec<String> = check.successors.iter().map(|m| format!("W({m})")).collect();
            out.push(Case { case: format!("h{k} W({lambda}) = {}", rhs.join(" + ")), ok: check.holds, detail: None });
        }
    }
    Ok(out)
}

fn derivative(args: &CheckArgs) -> Result<Vec<Case>> {
    let ctx = context(args)?;
    let r = ctx.rank();
    let n = args.common.order();
    let mut out = Vec::new();
    for k in 0..=args.max_weight as usize {
        if n < k + r + 1 {
            return Err(Error::Usage(format!("--order {n} is too small for k = {k}; need at least {}", k + r + 1)));
        }
        let perturb = (args.inject_fault && k == args.max_weight as usize)
            .then(|| SchurExpansion::single(Partition::row(k as u32)));
        let d = derivative_expansion_with(&ctx, k, n, perturb.as_ref())?;
        let mut tableaux_ok = true;
        for (lambda, c) in d.expansion.terms() {
            let count: Rational = syt_count_hook(lambda)?.count.to_string().parse()?;
            tableaux_ok &= *c == count;
        }
        let expected_terms = partitions_in_box(k as u32, r + 1, None).len();
        tableaux_ok &= d.expansion.terms().count() == expected_terms;
        out.push(Case {
            case: format!("D^{k} W0 = {}", d.expansion),
            ok: d.verified && tableaux_ok,
            detail: (!tableaux_ok).then(|| "coefficients differ from tableaux counts".to_string()),
        });
    }
    Ok(out)
}

fn euler(args: &CheckArgs) -> Result<Vec<Case>> {
    let ctx = context(args)?;
    let r = ctx.rank();
    let n = args.common.order();
    let lhs = ctx.exp_alpha(n);
    let mut rhs = ctx.euler_decomposition(n)?;
    if args.inject_fault {
        let mut coeffs = rhs.into_coeffs();
        let last = coeffs.len() - 1;
        coeffs[last] = coeffs[last].plus(&coeffs[last].one_like());
        rhs = DividedSeries::new(coeffs)?;
    }
    let mismatch = lhs.first_difference(&rhs, n)?;
    let mut out = vec![Case {
        case: "exp(alpha t) = sum Lambda_j(alpha) u_j".into(),
        ok: mismatch.is_none(),
        detail: mismatch.map(|m| format!("first mismatch at t^{m}")),
    }];

    // e_{r+1} -> (-1)^r, other e's -> 0: v_j has a_{j + k(r+1)} = (-1)^k
    let q = wronski::SymbolTable::empty();
    let mut images = vec![Polynomial::zero(&q); r + 1];
    images[r] = Polynomial::constant(&q, if r % 2 == 0 { -1 } else { 1 });
    let subst = ctx.specialization(images)?;
    let v = ctx.specialize_system(&subst, n)?;
    for (j, vj) in v.iter().enumerate() {
        let ok = vj.coeffs().iter().enumerate().all(|(m, c)| {
            let expected = if m >= j && (m - j) % (r + 1) == 0 {
                if ((m - j) / (r + 1)) % 2 == 0 { 1 } else { -1 }
            } else {
                0
            };
            c.constant_value() == Some(Rational::from(expected))
        });
        out.push(Case { case: format!("v{j} has coefficients (-1)^k at t^({j} + {}k)", r + 1), ok, detail: None });
    }
    Ok(out)
}

fn nonhom(args: &CheckArgs) -> Result<Vec<Case>> {
    let ctx = context(args)?;
    let r = ctx.rank();
    let n = args.common.order().max(r + 1);
    let certified = n - r - 1;
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let random_rational = |rng: &mut ChaCha8Rng| {
        let a: i64 = rng.gen_range(-9..=9);
        let b: i64 = rng.gen_range(1..=4);
        &Rational::from(a) / &Rational::from(b)
    };
    let mut out = Vec::new();
    for case in 0..args.cases {
        let rhs = (0..=n).map(|_| Polynomial::constant(ctx.symbols(), random_rational(&mut rng))).collect();
        let f = DividedSeries::new(rhs)?;
        let inits: Vec<Rational> = (0..=r).map(|_| random_rational(&mut rng)).collect();
        let data = ctx.rational_initial_conditions(&inits)?;
        let mut y = ctx.solve_nonhomogeneous(&f, &data, n)?;
        if args.inject_fault && case + 1 == args.cases {
            let mut coeffs = y.into_coeffs();
            coeffs[n] = coeffs[n].plus(&ctx.one());
            y = DividedSeries::new(coeffs)?;
        }
        let residual = ctx.operator().apply(&y)?.checked_sub(&f.truncate(certified)?)?;
        let residual_ok = residual.is_zero_to(certified)?;
        let inits_ok = (0..=r).all(|i| y.coeffs()[i].constant_value().as_ref() == Some(&inits[i]));
        out.push(Case {
            case: format!("case {case}: U(D) y = f, D^i y(0) = x_i"),
            ok: residual_ok && inits_ok,
            detail: (!residual_ok).then(|| "nonzero residual".to_string()),
        });
    }
    Ok(out)
}
