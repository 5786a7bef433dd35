//! One function per subcommand; each returns a `Report`.

use std::collections::HashMap;

use clap::{Subcommand, ValueEnum};
use invar_core::gf2::{Polynomial, Ring};
use invar_core::group::ea2::find_class;
use invar_core::group::named::{m3_tilde, perm_group, v3_tilde};
use invar_core::group::sylow::check_sylow_model;
use invar_core::group::{
    filter_by_cycle_type, maximal_ea2_subgroups, normalizer, CycleType, MatrixGroup, DEFAULT_BUDGET,
};
use invar_core::invariant::search::{search_a7, search_s4, SearchOutcome};
use invar_core::invariant::{
    dickson, freeness_against, relative_dickson_top, secondary_invariants, validate_hsop, GradedModule, GroupAction,
    SecondaryRun,
};
use invar_core::invariant::{module_invariants, verify_module_invariants};
use invar_core::series::{series_of, solve_generator_image, verify_detection, verify_ring_map, RingDescriptor};
use invar_core::steenrod::{sq_in, verify_secondary_chain};
use invar_core::subring::pipeline::{dickson_intersections, free_module_pipeline};
use invar_core::subring::{first_difference, intersect_subalgebras, Subalgebra};
use serde::Serialize;
use serde_json::{json, Value};

use crate::cache::{cache_key, tool_version, Cache};
use crate::config::Context;
use crate::error::{config_err, CliResult};
use crate::report::{join, table, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum PermAction {
    /// Conjugacy classes of maximal elementary abelian 2-subgroups.
    MaximalEa2,
    /// Maximal classes whose non-identity elements all have one cycle type.
    Filter,
    /// Order of N(V)/V for the regular rank-3 subgroup on eight points.
    NormalizerV3,
}

#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case", tag = "command")]
pub enum Command {
    /// Invariant ring of a configured group: dimensions, primaries,
    /// secondaries found by the shortfall loop, Poincare series.
    Invariants {
        group: String,
        /// Highest degree searched for secondaries (default from config).
        #[arg(long)]
        degrees: Option<u32>,
        /// Comma-separated primaries overriding the configured ones.
        #[arg(long, value_delimiter = ',')]
        primaries: Vec<String>,
    },
    /// Steenrod chain relating the secondaries of a configured group.
    Chain { group: String },
    /// Dickson invariants: invariance under GL_3(2) and the recursive
    /// identities for the top classes.
    Dickson,
    /// Sq^k of a polynomial, written in the configured symbols or in
    /// `--variables`.
    Steenrod {
        k: u32,
        poly: String,
        /// Comma-separated variables to parse `poly` in, instead of the symbols.
        #[arg(long, value_delimiter = ',')]
        variables: Vec<String>,
    },
    /// Per-degree intersection of two configured rings.
    Intersect {
        ring_a: String,
        ring_b: String,
        /// Ring the intersection is compared against.
        #[arg(long)]
        candidate: Option<String>,
    },
    /// Free-module intersection pipeline over k[d2^2, d3, d4^2].
    FreeModule,
    /// Intersections with the rank-3 Dickson algebra and the detector ring.
    DetectorRing,
    /// Series bookkeeping for a configured detection sequence.
    Detect { sequence: String },
    /// A reading of the E-infinity page against a sequence's series.
    Einfty { reading: String },
    /// Relations of a presented ring under the configured images.
    RingMap { name: String },
    /// Invariants of a configured graded module.
    ModuleInvariants { name: String },
    /// Permutation group classification.
    Perm {
        /// `S<n>`, `A<n>` or `S8_in_A10`.
        group: String,
        action: PermAction,
        #[arg(long, default_value = "2^4")]
        cycle_type: String,
        /// Closure budget in group elements.
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Claims about the order-256 model group.
    Sylow,
    /// Poincare series of a configured descriptor.
    Series { descriptor: String },
    /// Names defined by the config.
    List,
}

impl Command {
    /// Cheap commands are never cached.
    fn cacheable(&self) -> bool {
        !matches!(self, Command::List | Command::Steenrod { .. } | Command::Series { .. } | Command::Dickson)
    }

    fn name(&self) -> &'static str {
        match self {
            Command::Invariants { .. } => "invariants",
            Command::Chain { .. } => "chain",
            Command::Dickson => "dickson",
            Command::Steenrod { .. } => "steenrod",
            Command::Intersect { .. } => "intersect",
            Command::FreeModule => "free-module",
            Command::DetectorRing => "detector-ring",
            Command::Detect { .. } => "detect",
            Command::Einfty { .. } => "einfty",
            Command::RingMap { .. } => "ring-map",
            Command::ModuleInvariants { .. } => "module-invariants",
            Command::Perm { .. } => "perm",
            Command::Sylow => "sylow",
            Command::Series { .. } => "series",
            Command::List => "list",
        }
    }
}

/// Runs a command, going through the cache when one is given.
pub fn run(ctx: &Context, cmd: &Command, bound: Option<u32>, cache: Option<&Cache>) -> CliResult<Report> {
    let cache = cache.filter(|_| cmd.cacheable());
    let key = cache.map(|_| {
        let cmd_json = serde_json::to_string(cmd).expect("commands serialize");
        let bound = format!("{bound:?}");
        cache_key(&[&tool_version(), &ctx.config.digest, &cmd_json, &bound])
    });
    if let (Some(c), Some(k)) = (cache, &key) {
        if let Some(hit) = c.get(k) {
            return Ok(hit.value);
        }
    }
    let report = execute(ctx, cmd, bound)?;
    if let (Some(c), Some(k)) = (cache, &key) {
        c.put(k, &report);
    }
    Ok(report)
}

pub fn execute(ctx: &Context, cmd: &Command, bound: Option<u32>) -> CliResult<Report> {
    let b = bound.unwrap_or(ctx.config.defaults.bound);
    if b == 0 {
        return Err(config_err("--bound must be positive"));
    }
    let mut r = match cmd {
        Command::Invariants { group, degrees, primaries } => invariants(ctx, group, *degrees, primaries)?,
        Command::Chain { group } => chain(ctx, group)?,
        Command::Dickson => dickson_report()?,
        Command::Steenrod { k, poly, variables } => steenrod(ctx, *k, poly, variables)?,
        Command::Intersect { ring_a, ring_b, candidate } => intersect(ctx, ring_a, ring_b, candidate.as_deref(), b)?,
        Command::FreeModule => free_module(b)?,
        Command::DetectorRing => detector_ring(b)?,
        Command::Detect { sequence } => detect(ctx, sequence, bound.unwrap_or(60))?,
        Command::Einfty { reading } => einfty(ctx, reading, b)?,
        Command::RingMap { name } => ring_map(ctx, name, b)?,
        Command::ModuleInvariants { name } => module(ctx, name)?,
        Command::Perm { group, action, cycle_type, budget } => {
            perm(group, *action, cycle_type, budget.unwrap_or(DEFAULT_BUDGET))?
        }
        Command::Sylow => sylow()?,
        Command::Series { descriptor } => series(ctx, descriptor, b)?,
        Command::List => list(ctx),
    };
    r.command = cmd.name().to_string();
    Ok(r)
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("reports serialize")
}

fn opt_degree(d: Option<impl ToString>) -> String {
    d.map_or("none".into(), |d| d.to_string())
}

/// The group's action, searching for it first when configured that way.
fn group_action(ctx: &Context, name: &str) -> CliResult<(GroupAction, Option<SearchOutcome>)> {
    let g = ctx.group(name)?;
    let ring = ctx.group_ring(g);
    let (group, outcome): (MatrixGroup, Option<SearchOutcome>) = match ctx.matrix_group(name)? {
        Some(m) => (m, None),
        None => {
            let out = match g.search.as_deref() {
                Some("A7") => search_a7(g.search_check)?,
                Some("S4") => search_s4(g.search_check)?,
                other => return Err(config_err(format!("group `{name}`: unknown search {other:?}"))),
            };
            if out.group.dim() != ring.n_vars() {
                return Err(config_err(format!("group `{name}`: searched group has the wrong dimension")));
            }
            (out.group.clone(), Some(out))
        }
    };
    Ok((GroupAction::new(group, ring)?, outcome))
}

struct Decomposed {
    action: GroupAction,
    search: Option<SearchOutcome>,
    primaries: Vec<Polynomial>,
    run: SecondaryRun,
    degrees: u32,
}

fn decompose(ctx: &Context, name: &str, degrees: Option<u32>, primaries: &[String]) -> CliResult<Decomposed> {
    let g = ctx.group(name)?;
    let degrees = degrees.unwrap_or(g.degrees);
    if degrees == 0 {
        return Err(config_err("--degrees must be positive"));
    }
    let specs = if primaries.is_empty() { &g.primaries[..] } else { primaries };
    let prim = ctx.primaries(name, specs)?;
    let (action, search) = group_action(ctx, name)?;
    let run = secondary_invariants(&action, &prim, degrees)?;
    Ok(Decomposed { action, search, primaries: prim, run, degrees })
}

fn invariants(ctx: &Context, name: &str, degrees: Option<u32>, primaries: &[String]) -> CliResult<Report> {
    let Decomposed { action, search, primaries: prim, run, degrees } = decompose(ctx, name, degrees, primaries)?;
    let ring = action.ring().clone();
    let dec = &run.decomposition;
    let mut dims = run.invariant_dims();
    if dims.len() <= degrees as usize {
        dims = action.invariant_dims(degrees)?;
    }
    let top = dims.len() as u32 - 1;
    let hsop = validate_hsop(&prim, &action, top)?;
    let free = freeness_against(dec, &dims)?;
    let table_bound = ctx.config.defaults.table_bound.min(top);
    let mut intermediate = Vec::new();
    for k in 2..dec.secondaries.len() {
        if dec.secondary_degrees[k - 1] > table_bound {
            break;
        }
        intermediate.push((k, dec.prefix_module(k)?.dims(table_bound)?));
    }
    let series = dec.series();
    let is_polynomial = dec.secondaries.len() == 1 && dec.secondaries[0].is_one();
    let fmt_list = |ps: &[Polynomial], ds: &[u32]| -> Vec<Value> {
        ds.iter().zip(ps).map(|(d, p)| json!({"degree": d, "poly": ring.format(p)})).collect()
    };
    let rows: Vec<Value> = (0..=top as usize)
        .map(|d| {
            let step = run.steps.get(d);
            json!({
                "degree": d,
                "invariants": dims[d],
                "primaries_only": hsop.dims[d],
                "module": step.map(|s| s.module_dim),
                "added": step.map(|s| s.added),
            })
        })
        .collect();
    let data = json!({
        "group": name,
        "variables": ring.names(),
        "group_order": dec.group_order,
        "degrees": degrees,
        "search": search.as_ref().map(|s| json!({
            "order": s.order, "candidates": s.candidates, "subgroups": s.subgroups,
            "rejected": s.rejected, "checked_through": s.dims.len() as u32 - 1,
        })),
        "primaries": fmt_list(&dec.primaries, &dec.primary_degrees),
        "secondaries": fmt_list(&dec.secondaries, &dec.secondary_degrees),
        "primary_degrees": dec.primary_degrees,
        "secondary_degrees": dec.secondary_degrees,
        "expected_count": dec.expected_count(),
        "complete": dec.is_complete(),
        "polynomial_ring": is_polynomial,
        "table": rows,
        "intermediate": intermediate.iter().map(|(k, d)| json!({"secondaries": k, "dims": d})).collect::<Vec<_>>(),
        "series": series.to_string(),
        "series_numerator": series.numerator(),
        "series_denominator": series.denominator(),
        "hsop_failure": hsop.failure,
        "relation_degree": free.relation_degree,
        "digest": dec.digest(&ring),
    });
    let mut r = Report::new("invariants", data);
    r.line(format!("group {name}: order {}, variables {}", dec.group_order, ring.names().join(",")));
    if let Some(s) = &search {
        r.line(format!(
            "found by search: order {}, {} candidates, {} distinct subgroups, invariants matched through degree {}",
            s.order,
            s.candidates,
            s.subgroups,
            s.dims.len() - 1
        ));
    }
    let cell = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
    let body: Vec<Vec<String>> = (0..=top as usize)
        .map(|d| {
            let step = run.steps.get(d);
            vec![
                d.to_string(),
                dims[d].to_string(),
                hsop.dims[d].to_string(),
                cell(step.map(|s| s.module_dim)),
                cell(step.map(|s| s.added)),
            ]
        })
        .collect();
    r.lines(table(&["degree", "invariants", "primaries", "module", "added"], &body));
    for (k, d) in &intermediate {
        r.line(format!("module on first {k} secondaries through degree {table_bound}: {}", join(d)));
    }
    r.line("primaries:");
    r.lines(dec.primary_degrees.iter().zip(&dec.primaries).map(|(d, p)| format!("  {d}: {}", ring.format(p))));
    r.line("secondaries:");
    r.lines(dec.secondary_degrees.iter().zip(&dec.secondaries).map(|(d, p)| format!("  {d}: {}", ring.format(p))));
    r.line(format!("secondary degrees: {{{}}}", join(&dec.secondary_degrees)));
    r.line(format!("expected count: {}, found {}", dec.expected_count(), dec.secondaries.len()));
    if is_polynomial {
        let gens: Vec<String> = dec.primaries.iter().map(|p| ring.format(p)).collect();
        r.line(format!("invariant ring is the polynomial ring F2[{}]", gens.join(", ")));
    }
    r.line(format!("series: {series}"));
    r.line(format!("digest: {}", dec.digest(&ring)));
    r.check(hsop.ok(), || format!("primaries fall short of a free algebra at degree {}", opt_degree(hsop.failure)));
    r.check(free.relation_degree.is_none(), || {
        format!("secondaries satisfy a relation at degree {}", opt_degree(free.relation_degree))
    });
    r.check(dec.is_complete(), || "decomposition is incomplete".into());
    Ok(r)
}

fn chain(ctx: &Context, name: &str) -> CliResult<Report> {
    let d = decompose(ctx, name, None, &[])?;
    let rep = verify_secondary_chain(&d.run.decomposition, d.action.ring())?;
    let mut r = Report::new("chain", to_value(&rep));
    for g in &rep.groups {
        for l in &g.links {
            r.line(format!(
                "{:<22} degree {:>2}  {}",
                l.label,
                l.degree,
                if l.completes { "completes" } else { "inside prior span" }
            ));
        }
    }
    for p in &rep.products {
        r.line(format!(
            "{:<22} degree {:>2}  {}",
            p.label,
            rep.top_degree,
            if p.completes { "completes" } else { "inside prior span" }
        ));
    }
    r.check(rep.links_hold(), || "a Steenrod link falls inside the prior span".into());
    r.check(rep.some_product_completes(), || format!("no product completes degree {}", rep.top_degree));
    Ok(r)
}

fn dickson_report() -> CliResult<Report> {
    let ring = Ring::new(&["x1", "y1", "z1", "w1"]);
    let gl3 = GroupAction::new(MatrixGroup::general_linear(3), Ring::new(&["x1", "y1", "z1"]))?;
    let d3 = dickson(3);
    let fixed = d3.iter().map(|p| gl3.is_invariant(p)).collect::<invar_core::Result<Vec<_>>>()?;
    let identities: Vec<(usize, &str, bool)> = [
        (1, "d1 = x1"),
        (2, "d2 = y1^2 + y1*x1 + x1^2"),
        (3, "d4 = z^4 + z^2*d2 + z*d3 + d2^2"),
        (4, "d8 = w1^8 + w1^4*d4 + w1^2*d6 + w1*d7 + d4^2"),
    ]
    .into_iter()
    .map(|(n, s)| (n, s, relative_dickson_top(n).is_ok()))
    .collect();
    let polys: Vec<Value> =
        d3.iter().map(|p| json!({"degree": p.homogeneous_degree(), "poly": ring.format(p)})).collect();
    let data = json!({
        "dickson3": polys,
        "fixed_by_gl3": fixed,
        "identities": identities.iter().map(|(n, s, ok)| json!({"variables": n, "identity": s, "holds": ok})).collect::<Vec<_>>(),
    });
    let mut r = Report::new("dickson", data);
    for (p, f) in d3.iter().zip(&fixed) {
        r.line(format!(
            "d{} = {}  ({})",
            p.homogeneous_degree().unwrap_or(0),
            ring.format(p),
            if *f { "fixed by GL3(2)" } else { "NOT fixed" }
        ));
    }
    for (n, s, ok) in &identities {
        r.line(format!("{n} variables: {s}  {}", if *ok { "holds" } else { "FAILS" }));
    }
    r.check(fixed.iter().all(|&f| f), || "a rank-3 Dickson invariant is not fixed".into());
    r.check(identities.iter().all(|i| i.2), || "a Dickson identity fails".into());
    Ok(r)
}

fn steenrod(ctx: &Context, k: u32, poly: &str, variables: &[String]) -> CliResult<Report> {
    let (ring, p) = if variables.is_empty() {
        (ctx.symbols.ambient().clone(), ctx.symbols.eval(poly)?)
    } else {
        let ring = Ring::new(variables);
        let p = ring.parse(poly)?;
        (ring, p)
    };
    let out = sq_in(&ring, k, &p)?;
    let s = ring.format(&out);
    let mut r = Report::new("steenrod", json!({"k": k, "input": ring.format(&p), "result": s}));
    r.line(s);
    Ok(r)
}

fn intersect(ctx: &Context, a: &str, b: &str, candidate: Option<&str>, bound: u32) -> CliResult<Report> {
    let ra = ctx.ring(a)?;
    let rb = ctx.ring(b)?;
    let cand = candidate.map(|c| ctx.ring(c)).transpose()?;
    let rep = intersect_subalgebras(&ra, &rb, cand.as_ref(), bound)?;
    let cand_dims = cand.as_ref().map(|c| c.dims(bound)).transpose()?;
    let rows: Vec<Vec<String>> = rep
        .dims
        .iter()
        .enumerate()
        .map(|(d, (x, y, z))| {
            let mut row = vec![d.to_string(), x.to_string(), y.to_string(), z.to_string()];
            if let Some(cd) = &cand_dims {
                row.push(cd[d].to_string());
            }
            row
        })
        .collect();
    let data = json!({
        "ring_a": a, "ring_b": b, "candidate": candidate, "bound": bound,
        "dims": rep.dims, "candidate_dims": cand_dims, "mismatch": rep.mismatch,
    });
    let mut r = Report::new("intersect", data);
    let mut header = vec!["degree", a, b, "intersection"];
    if let Some(c) = candidate {
        header.push(c);
    }
    r.lines(table(&header, &rows));
    if let Some(c) = candidate {
        r.line(match rep.mismatch {
            None => format!("intersection equals {c} through degree {bound}"),
            Some(d) => format!("intersection differs from {c} at degree {d}"),
        });
    }
    r.check(rep.mismatch.is_none(), || {
        format!("intersection differs from the candidate at degree {}", opt_degree(rep.mismatch))
    });
    Ok(r)
}

fn free_module(bound: u32) -> CliResult<Report> {
    let rep = free_module_pipeline(bound)?;
    let mut r = Report::new("free-module", to_value(&rep));
    r.line(format!("w^3 = {}", rep.w3.join(" + ")));
    r.line(format!("w^5 = {}", rep.w5.join(" + ")));
    r.line(format!("reduced powers of w: {}", rep.reduced_powers.join(", ")));
    r.line("triple products:");
    r.lines(rep.products.iter().map(|p| format!("  {p}")));
    let ideals: Vec<String> = rep.ideals.iter().map(|j| format!("({})", j.join(", "))).collect();
    r.line(format!("ideals: {}", ideals.join(", ")));
    r.line(format!("generators: {}", rep.generators.join(", ")));
    r.line(format!("intersection dims through {bound}: {}", join(&rep.intersection_dims)));
    for (x, eq, ok) in &rep.integral_equations {
        r.line(format!("X = {x} solves {eq} = 0: {ok}"));
    }
    r.check(rep.products_single_term, || "a triple product has more than one term".into());
    r.check(rep.generated_mismatch.is_none(), || {
        format!("generated module differs from the intersection at degree {}", opt_degree(rep.generated_mismatch))
    });
    r.check(rep.claimed_mismatch.is_none(), || {
        format!("intersection differs from the claimed ring at degree {}", opt_degree(rep.claimed_mismatch))
    });
    r.check(rep.integral_equations.iter().all(|e| e.2), || "an integral equation fails".into());
    Ok(r)
}

fn detector_ring(bound: u32) -> CliResult<Report> {
    let rep = dickson_intersections(bound)?;
    let mut r = Report::new("detector-ring", to_value(&rep));
    let checks = [
        ("image ring meets F2[d4,d6,d7] in the detector ring", rep.image_mismatch),
        ("intersection ring meets F2[d4,d6,d7] in the detector ring", rep.intersection_mismatch),
        ("F2[d4,d6] meets the first summand in F2[d4^2,d6^2]", rep.squares_mismatch),
        ("detector ring = F2[d4^2,d6^2] + F2[d4,d6,d7]d7", rep.direct_sum_mismatch),
        ("the two forms of the first summand agree", rep.first_summand_mismatch),
    ];
    for (what, m) in checks {
        r.line(format!("{what}: {}", m.map_or("yes".to_string(), |d| format!("NO, degree {d}"))));
        r.check(m.is_none(), || format!("{what} fails at degree {}", opt_degree(m)));
    }
    for (l, rhs, ok) in &rep.identities {
        r.line(format!("{l} = {rhs}: {ok}"));
    }
    r.line(format!("detector dims through {bound}: {}", join(&rep.dims)));
    Ok(r)
}

fn detect(ctx: &Context, name: &str, bound: u32) -> CliResult<Report> {
    let seq = ctx.sequence(name)?;
    let rep = verify_detection(&seq, bound as usize)?;
    let data = json!({
        "sequence": name,
        "bound": bound,
        "derived": rep.derived.to_string(),
        "identity": rep.identity,
        "first_mismatch": rep.first_mismatch,
        "first_negative": rep.first_negative,
        "first_positive_degrees": rep.first_positive_degrees(4),
        "expansion": rep.expansion,
    });
    let mut r = Report::new("detect", data);
    r.line(format!("sequence {name}"));
    r.line(format!("derived series: {}", rep.derived));
    match rep.identity {
        Some(true) => r.line("given middle term: equal as rational functions"),
        Some(false) => {
            r.line(format!("given middle term: differs, first at degree {}", opt_degree(rep.first_mismatch)))
        }
        None => r.line("middle term defined by the sequence"),
    };
    r.line(format!("expansion through {bound}: {}", join(&rep.expansion)));
    r.line(format!("first negative coefficient: {}", opt_degree(rep.first_negative)));
    r.check(rep.identity != Some(false), || {
        format!("middle term differs from the sequence at degree {}", opt_degree(rep.first_mismatch))
    });
    r.check(rep.first_negative.is_none(), || {
        format!("negative coefficient at degree {}", opt_degree(rep.first_negative))
    });
    Ok(r)
}

fn einfty(ctx: &Context, reading: &str, bound: u32) -> CliResult<Report> {
    let e = ctx.einfty(reading)?;
    let pieces = RingDescriptor::sum(e.pieces.iter().map(|p| ctx.descriptor(p)).collect::<CliResult<_>>()?);
    let einf = series_of(&pieces)?;
    let target = verify_detection(&ctx.sequence(&e.against)?, bound as usize)?.derived;
    let n = bound as usize;
    let (a, b) = (einf.expand(n), target.expand(n));
    let mismatches: Vec<usize> = (0..=n).filter(|&d| a[d] != b[d]).collect();
    let flags: Vec<(usize, i64, i64, i64)> = e
        .reference
        .iter()
        .filter(|&&(d, v)| d <= n && (a[d] != v || b[d] != v))
        .map(|&(d, v)| (d, v, a[d], b[d]))
        .collect();
    let series_equal = einf.series_eq(&target);
    let data = json!({
        "reading": reading, "against": e.against, "bound": bound,
        "einfty": a, "sequence": b, "mismatches": mismatches, "series_equal": series_equal,
        "flags": flags.iter().map(|f| json!({"degree": f.0, "reference": f.1, "einfty": f.2, "sequence": f.3})).collect::<Vec<_>>(),
    });
    let mut r = Report::new("einfty", data);
    r.line(format!("reading {reading} against {}", e.against));
    let rows: Vec<Vec<String>> = (0..=n)
        .map(|d| {
            let reference = e.reference.iter().find(|p| p.0 == d).map_or("-".into(), |p| p.1.to_string());
            vec![d.to_string(), a[d].to_string(), b[d].to_string(), reference]
        })
        .collect();
    r.lines(table(&["degree", "E-infinity", "sequence", "reference"], &rows));
    r.line(format!("equal as rational functions: {series_equal}"));
    for f in &flags {
        r.line(format!("flag: degree {}: reference {}, E-infinity {}, sequence {}", f.0, f.1, f.2, f.3));
    }
    r.check(mismatches.is_empty(), || format!("E-infinity and sequence differ at degree {}", mismatches[0]));
    Ok(r)
}

fn ring_map(ctx: &Context, name: &str, bound: u32) -> CliResult<Report> {
    let (m, ring) = ctx.ring_map(name)?;
    let s = &ctx.symbols;
    let mut images: Vec<(String, Polynomial)> =
        m.images.iter().map(|(g, e)| Ok((g.clone(), s.eval(e)?))).collect::<CliResult<_>>()?;
    let mut solved = Vec::new();
    if let Some(sv) = &m.solve {
        let pairs: Vec<(&str, &str)> = m.images.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        let x = solve_generator_image(&ring, s, &pairs, &sv.unknown, &sv.relation)?;
        solved.push((sv.unknown.clone(), s.ambient().format(&x)));
        images.push((sv.unknown.clone(), x));
    }
    images.sort_by(|a, b| a.0.cmp(&b.0));
    let rep = verify_ring_map(&ring, s, &images)?;

    let weights = s.ambient().weights().to_vec();
    let extras = m.extra.iter().map(|e| Ok((e.clone(), s.eval(e)?))).collect::<CliResult<Vec<_>>>()?;
    let mut image_check = Value::Null;
    let mut image_mismatch = None;
    if let Some(target_name) = &m.image_ring {
        let target = ctx.ring(target_name)?;
        let gens = |skip: Option<&str>| -> Vec<Polynomial> {
            let mut g: Vec<Polynomial> = images.iter().map(|(_, p)| p.clone()).filter(|p| !p.is_zero()).collect();
            g.extend(extras.iter().filter(|(n, _)| Some(n.as_str()) != skip).map(|(_, p)| p.clone()));
            g
        };
        let full = Subalgebra::module(weights.clone(), gens(None), vec![Polynomial::one()])?;
        image_mismatch = first_difference(&full, &target, bound)?;
        let shortfall = match &m.essential {
            Some(e) => {
                let less = Subalgebra::module(weights.clone(), gens(Some(e)), vec![Polynomial::one()])?;
                first_difference(&less, &target, bound)?
            }
            None => None,
        };
        image_check = json!({
            "ring": target_name, "bound": bound, "mismatch": image_mismatch,
            "essential": m.essential, "shortfall_without_essential": shortfall,
        });
    }
    let data = json!({
        "name": name,
        "solved": solved,
        "relations": rep.relations.iter().map(|(rel, img, ok)| json!({"relation": rel, "image": img, "vanishes": ok})).collect::<Vec<_>>(),
        "image_ring": image_check,
    });
    let mut r = Report::new("ring-map", data);
    for (g, v) in &solved {
        r.line(format!("solved {g} -> {v}"));
    }
    for (rel, img, ok) in &rep.relations {
        r.line(format!("{rel} -> {img}{}", if *ok { "" } else { "  (NONZERO)" }));
    }
    if let Some(t) = &m.image_ring {
        r.line(match image_mismatch {
            None => format!("generated ring equals {t} through degree {bound}"),
            Some(d) => format!("generated ring differs from {t} at degree {d}"),
        });
        if let (Some(e), Some(d)) = (&m.essential, image_check["shortfall_without_essential"].as_u64()) {
            r.line(format!("without {e} the generated ring falls short at degree {d}"));
        }
    }
    r.check(rep.ok(), || "a relation does not vanish".into());
    r.check(image_mismatch.is_none(), || format!("generated ring differs at degree {}", opt_degree(image_mismatch)));
    Ok(r)
}

fn module(ctx: &Context, name: &str) -> CliResult<Report> {
    let c = ctx.module(name)?;
    let pairs = |xs: &[(String, u32)]| -> Vec<(String, u32)> { xs.to_vec() };
    let ring: Vec<(String, u32)> = pairs(&c.ring);
    let basis: Vec<(String, u32)> = pairs(&c.basis);
    let ring_ref: Vec<(&str, u32)> = ring.iter().map(|(n, d)| (n.as_str(), *d)).collect();
    let basis_ref: Vec<(&str, u32)> = basis.iter().map(|(n, d)| (n.as_str(), *d)).collect();
    let action: Vec<Vec<(&str, &str)>> =
        c.action.iter().map(|g| g.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect()).collect();
    let m = GradedModule::new(&ring_ref, &basis_ref, &action)?;
    let inv = module_invariants(&m, c.bound)?;
    let r_ring = m.ring().clone();
    let fmt = |ps: &[Polynomial]| -> Vec<String> { ps.iter().map(|p| r_ring.format(p)).collect() };
    let parse = |xs: &[String]| -> CliResult<Vec<Polynomial>> { xs.iter().map(|x| Ok(r_ring.parse(x)?)).collect() };
    let claim_ring = parse(&c.claim_ring)?;
    let claim_module = parse(&c.claim_module)?;
    let claimed = !claim_module.is_empty();
    let verdict = if claimed { verify_module_invariants(&m, &claim_ring, &claim_module, c.bound)? } else { None };
    let data = json!({
        "name": name, "bound": c.bound,
        "ring_generators": fmt(&inv.ring_generators),
        "module_generators": fmt(&inv.module_generators),
        "dims": inv.dims,
        "claim": if claimed { json!({"ring": c.claim_ring, "module": c.claim_module, "first_failure": verdict}) } else { Value::Null },
    });
    let mut r = Report::new("module-invariants", data);
    r.line(format!("invariant coefficient ring generated by {}", fmt(&inv.ring_generators).join(", ")));
    r.line(format!("module generators: {}", fmt(&inv.module_generators).join(", ")));
    r.line(format!("dims through {}: {}", c.bound, join(&inv.dims)));
    if claimed {
        r.line(match verdict {
            None => format!(
                "F2[{}]({}) equals the invariants through degree {}",
                c.claim_ring.join(", "),
                c.claim_module.join(", "),
                c.bound
            ),
            Some(d) => format!("claimed generators fall short at degree {d}"),
        });
    }
    r.check(verdict.is_none(), || format!("claimed generators fall short at degree {}", opt_degree(verdict)));
    Ok(r)
}

fn perm(name: &str, action: PermAction, cycle_type: &str, budget: usize) -> CliResult<Report> {
    let g = perm_group(name)?;
    let mut r = Report::new("perm", Value::Null);
    match action {
        PermAction::MaximalEa2 => {
            let classes = maximal_ea2_subgroups(&g, budget)?;
            r.data = json!({"group": name, "classes": to_value(&classes)});
            let rows: Vec<Vec<String>> = classes
                .iter()
                .map(|c| vec![c.label.clone(), c.rank.to_string(), c.moved_points.to_string(), c.generators.join(" ")])
                .collect();
            r.lines(table(&["class", "rank", "moved", "generators"], &rows));
        }
        PermAction::Filter => {
            let ty = CycleType::parse(cycle_type)?;
            let classes = maximal_ea2_subgroups(&g, budget)?;
            let subs: Vec<_> = classes.iter().map(|c| c.subgroup.clone()).collect();
            let kept = filter_by_cycle_type(&g, &subs, &ty, budget)?;
            let mut known = Vec::new();
            if g.degree() >= 8 {
                known.push(("V3~", v3_tilde(g.degree())));
            }
            if g.degree() == 10 {
                known.push(("M3~", m3_tilde()));
            }
            let mut matches = Vec::new();
            for (label, h) in &known {
                let at = find_class(&g, &kept, h, budget)?;
                matches.push(json!({"subgroup": label, "class": at}));
                r.line(format!("{label}: {}", at.map_or("not among them".to_string(), |i| format!("class {i}"))));
            }
            let labels: Vec<String> = kept.iter().map(|e| e.label()).collect();
            r.text.insert(0, format!("{} classes with every element of type {ty}: {}", kept.len(), labels.join(", ")));
            r.data = json!({"group": name, "cycle_type": ty.to_string(), "classes": labels, "known": matches});
        }
        PermAction::NormalizerV3 => {
            if g.degree() < 8 {
                return Err(config_err(format!("{name} has fewer than eight points")));
            }
            let v = v3_tilde(g.degree());
            let n = normalizer(&g, &v.as_perm_group(), budget)?;
            let order = n.order(budget)?;
            r.data = json!({"group": name, "normalizer_order": order, "quotient_order": order / v.order()});
            r.line(format!("|N(V3~)| = {order}, |N(V3~)/V3~| = {}", order / v.order()));
        }
    }
    Ok(r)
}

fn sylow() -> CliResult<Report> {
    let rep = check_sylow_model()?;
    let v = to_value(&rep);
    let mut r = Report::new("sylow", v.clone());
    if let Value::Object(map) = &v {
        for (k, x) in map {
            r.line(format!("{k}: {x}"));
        }
    }
    r.check(rep.all_hold(), || "a claim about the model fails".into());
    Ok(r)
}

fn series(ctx: &Context, name: &str, bound: u32) -> CliResult<Report> {
    let s = series_of(&ctx.descriptor(name)?)?;
    let e = s.expand(bound as usize);
    let mut r = Report::new("series", json!({"descriptor": name, "series": s.to_string(), "expansion": e}));
    r.line(format!("{name}: {s}"));
    r.line(format!("expansion through {bound}: {}", join(&e)));
    Ok(r)
}

fn list(ctx: &Context) -> Report {
    let c = &ctx.config;
    let keys = |m: Vec<&String>| -> Vec<String> { m.into_iter().cloned().collect() };
    let mut sections: HashMap<&str, Vec<String>> = HashMap::new();
    sections.insert("groups", keys(c.groups.keys().collect()));
    sections.insert("rings", keys(c.rings.keys().collect()));
    sections.insert("descriptors", keys(c.descriptors.keys().collect()));
    sections.insert("sequences", keys(c.sequences.keys().collect()));
    sections.insert("einfty", keys(c.einfty.keys().collect()));
    sections.insert("ring_maps", keys(c.ring_maps.keys().collect()));
    sections.insert("modules", keys(c.modules.keys().collect()));
    let order = ["groups", "rings", "descriptors", "sequences", "einfty", "ring_maps", "modules"];
    let mut r = Report::new("list", Value::Null);
    let mut data = serde_json::Map::new();
    for k in order {
        r.line(format!("{k}: {}", sections[k].join(", ")));
        data.insert(k.to_string(), json!(sections[k]));
    }
    r.data = Value::Object(data);
    r
}
