//! The full verification suite: thirteen criteria, each driving one or more
//! commands from the bundled config and comparing against stated values.

use std::time::Instant;

use invar_core::series::PoincareSeries;
use serde::Serialize;
use serde_json::Value;

use crate::cache::Cache;
use crate::commands::{run, Command, PermAction};
use crate::config::Context;
use crate::error::CliResult;
use crate::report::Report;

#[derive(Debug, Clone, Serialize)]
pub struct Outcome {
    pub id: u32,
    pub title: &'static str,
    pub passed: bool,
    pub seconds: f64,
    /// One line per sub-check, prefixed `ok` or `FAIL`.
    pub details: Vec<String>,
}

impl Outcome {
    pub fn line(&self) -> String {
        format!(
            "criterion {:>2} {}  {:<52} {:>7.2}s",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.title,
            self.seconds
        )
    }
}

/// Sub-check collector.
struct Checks {
    details: Vec<String>,
    passed: bool,
}

impl Checks {
    fn new() -> Self {
        Self { details: Vec::new(), passed: true }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        self.details.push(format!("{} {}", if ok { "ok  " } else { "FAIL" }, what.into()));
        self.passed &= ok;
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, got: T, want: T) {
        let ok = got == want;
        if ok {
            self.check(true, format!("{what}: {got:?}"));
        } else {
            self.check(false, format!("{what}: got {got:?}, want {want:?}"));
        }
    }
}

pub const L3_2_DIMS: [u64; 14] = [1, 0, 0, 0, 1, 0, 1, 1, 3, 1, 2, 2, 5, 3];
pub const L3_2_PRIMARY_DIMS: [u64; 14] = [1, 0, 0, 0, 1, 0, 1, 1, 2, 0, 1, 1, 3, 1];
pub const AFTER_A8: [u64; 14] = [1, 0, 0, 0, 1, 0, 1, 1, 3, 0, 1, 1, 4, 1];
pub const AFTER_A9: [u64; 14] = [1, 0, 0, 0, 1, 0, 1, 1, 3, 1, 1, 1, 4, 2];
pub const L3_2_SECONDARIES: [u64; 8] = [0, 8, 9, 10, 11, 12, 13, 21];

pub const W3: [&str; 2] = ["d3*[1]", "d2*[w]"];
pub const W5: [&str; 2] = ["d2*d3*[1]", "d2^2*[w]"];
/// The reference list of 24 reduced triple products, with its repeated
/// `d3*[d2*d4]` entry read as `d3^2*[d2*d4]`.
pub const TRIPLE_PRODUCTS: [&str; 24] = [
    "[1]",
    "[w]",
    "[w^2]",
    "[w*d2]",
    "[w^2*d2]",
    "d3*[d2]",
    "d3*[d4]",
    "d3*[w*d4]",
    "d3*[w^2*d4]",
    "d3*[w*d2*d4]",
    "d3*[w^2*d2*d4]",
    "d3*[d2*d4]",
    "d3^2*[d2*d4]",
    "d3*[w*d2*d4]",
    "d3*[w^2*d2*d4]",
    "d2^2*d3*[w*d4]",
    "d2^2*d3*[w^2*d4]",
    "d2^2*d3^2*[d4]",
    "d3^2*d4^2*[d2]",
    "d3^2*d4^2*[w*d2]",
    "d3^2*d4^2*[w^2*d2]",
    "d2^2*d3^2*d4^2*[w]",
    "d2^2*d3^2*d4^2*[w^2]",
    "d2^2*d3^3*d4^2*[1]",
];

/// Criteria expected to fail; see the README.
pub const KNOWN_FAILURES: [u32; 1] = [6];

pub const TITLES: [&str; 13] = [
    "invariant dimensions of the 168-element group",
    "secondary invariants by shortfall",
    "Steenrod chain among the secondaries",
    "Dickson invariants and identities",
    "dihedral and S4 invariant rings on w, t, z",
    "free-module intersection pipeline",
    "intersections with the rank-3 Dickson algebra",
    "ring map from the presented ring and image ring",
    "detection series and E-infinity reading",
    "module invariants of the radical",
    "maximal elementary abelian 2-subgroups",
    "order-256 model group",
    "2520-element subgroup of GL4(2)",
];

fn u64s(v: &Value) -> Vec<u64> {
    v.as_array().map(|a| a.iter().filter_map(Value::as_u64).collect()).unwrap_or_default()
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array().map(|a| a.iter().filter_map(|x| x.as_str().map(String::from)).collect()).unwrap_or_default()
}

fn column(report: &Report, key: &str, n: usize) -> Vec<u64> {
    report.data["table"].as_array().map_or(vec![], |rows| rows.iter().take(n).filter_map(|r| r[key].as_u64()).collect())
}

struct Runner<'a> {
    ctx: &'a Context,
    cache: Option<&'a Cache>,
}

impl Runner<'_> {
    fn run(&self, cmd: Command, bound: Option<u32>) -> CliResult<Report> {
        run(self.ctx, &cmd, bound, self.cache)
    }

    fn invariants(&self, group: &str) -> CliResult<Report> {
        self.run(Command::Invariants { group: group.into(), degrees: None, primaries: vec![] }, None)
    }

    fn criterion(&self, id: u32, c: &mut Checks) -> CliResult<()> {
        match id {
            1 => {
                let r = self.invariants("L3_2_on_2^4")?;
                c.eq("invariant dims 0..13", column(&r, "invariants", 14), L3_2_DIMS.to_vec());
                c.eq("primary-only dims 0..13", column(&r, "primaries_only", 14), L3_2_PRIMARY_DIMS.to_vec());
            }
            2 => {
                let r = self.invariants("L3_2_on_2^4")?;
                c.eq("secondary degrees", u64s(&r.data["secondary_degrees"]), L3_2_SECONDARIES.to_vec());
                let table = |k: u64| -> Vec<u64> {
                    r.data["intermediate"]
                        .as_array()
                        .and_then(|a| a.iter().find(|t| t["secondaries"].as_u64() == Some(k)))
                        .map_or(vec![], |t| u64s(&t["dims"]))
                };
                c.eq("R + R a8 dims 0..13", table(2), AFTER_A8.to_vec());
                c.eq("R + R a8 + R a9 dims 0..13", table(3), AFTER_A9.to_vec());
                let num: Vec<i64> = r.data["series_numerator"]
                    .as_array()
                    .map_or(vec![], |a| a.iter().filter_map(Value::as_i64).collect());
                let den: Vec<u32> = u64s(&r.data["series_denominator"]).into_iter().map(|d| d as u32).collect();
                let got = PoincareSeries::new(num, den);
                let want = PoincareSeries::free_module(&[0, 8, 9, 10, 11, 12, 13, 21], &[4, 6, 7, 8]);
                c.check(got.series_eq(&want), format!("series {got}"));
                c.check(r.ok, "decomposition is free and complete");
            }
            3 => {
                let r = self.run(Command::Chain { group: "L3_2_on_2^4".into() }, None)?;
                let links: Vec<(String, u64, bool)> = r.data["groups"]
                    .as_array()
                    .into_iter()
                    .flatten()
                    .flat_map(|g| g["links"].as_array().cloned().unwrap_or_default())
                    .map(|l| {
                        (
                            l["label"].as_str().unwrap_or("").to_string(),
                            l["degree"].as_u64().unwrap_or(0),
                            l["completes"] == true,
                        )
                    })
                    .collect();
                c.eq("link degrees", links.iter().map(|l| l.1).collect::<Vec<_>>(), vec![9, 11, 12, 13]);
                for (label, d, ok) in &links {
                    c.check(*ok, format!("{label} completes degree {d}"));
                }
                let completing: Vec<String> = r.data["products"]
                    .as_array()
                    .into_iter()
                    .flatten()
                    .filter(|p| p["completes"] == true)
                    .filter_map(|p| p["label"].as_str().map(String::from))
                    .collect();
                c.check(!completing.is_empty(), format!("degree 21 completed by: {}", completing.join(", ")));
            }
            4 => {
                let r = self.run(Command::Dickson, None)?;
                c.check(
                    r.data["fixed_by_gl3"].as_array().is_some_and(|a| a.iter().all(|x| x == true)),
                    "d4, d6, d7 fixed by GL3(2)",
                );
                for i in r.data["identities"].as_array().into_iter().flatten() {
                    let n = i["variables"].as_u64().unwrap_or(0);
                    if n >= 3 {
                        c.check(i["holds"] == true, i["identity"].as_str().unwrap_or("").to_string());
                    }
                }
            }
            5 => {
                for (group, degs) in [("D8_on_wtz", vec![1u64, 2, 4]), ("S4_on_wtz", vec![2, 3, 4])] {
                    let r = self.invariants(group)?;
                    c.eq(&format!("{group} primary degrees"), u64s(&r.data["primary_degrees"]), degs);
                    c.check(r.data["polynomial_ring"] == true, format!("{group}: polynomial invariant ring"));
                    c.check(
                        r.ok && r.data["degrees"].as_u64() == Some(24),
                        format!("{group}: equal per degree through 24"),
                    );
                }
            }
            6 => {
                let r = self.run(Command::FreeModule, Some(40))?;
                c.eq("w^3", strings(&r.data["w3"]), W3.map(String::from).to_vec());
                c.eq("w^5", strings(&r.data["w5"]), W5.map(String::from).to_vec());
                let mut got = strings(&r.data["products"]);
                let mut want: Vec<String> = TRIPLE_PRODUCTS.map(String::from).to_vec();
                got.sort();
                want.sort();
                c.check(got == want, "24 triple products reduce to the reference list");
                let ideals: Vec<Vec<String>> = r.data["ideals"].as_array().into_iter().flatten().map(strings).collect();
                c.eq("ideals", ideals, vec![vec!["1".into()], vec!["d3".into()], vec!["d3".into()], vec!["d3".into()]]);
                c.eq(
                    "generators",
                    strings(&r.data["generators"]),
                    ["[1]", "d3*[d2]", "d3*[d4]", "d3*[d2*d4]"].map(String::from).to_vec(),
                );
                c.check(r.ok, "intersection agrees with both rings through degree 40");
            }
            7 => {
                let r = self.run(Command::DetectorRing, Some(40))?;
                for key in ["image_mismatch", "intersection_mismatch", "squares_mismatch", "direct_sum_mismatch"] {
                    c.check(r.data[key].is_null(), format!("{key}: none through 40"));
                }
                let a = self.run(Command::Series { descriptor: "lyons_detector".into() }, Some(40))?;
                let b = self.run(Command::Series { descriptor: "lyons_detector_split".into() }, Some(40))?;
                c.check(a.data["expansion"] == b.data["expansion"], "two decompositions have equal series");
                let sa = self.ctx.descriptor("lyons_detector")?;
                let sb = self.ctx.descriptor("lyons_detector_split")?;
                let eq = invar_core::series::series_of(&sa)?.series_eq(&invar_core::series::series_of(&sb)?);
                c.check(eq, "equal as rational functions");
            }
            8 => {
                let r = self.run(Command::RingMap { name: "S8".into() }, Some(40))?;
                let solved = r.data["solved"].as_array().and_then(|a| a.first()).cloned().unwrap_or(Value::Null);
                c.eq("solved s2", solved[1].as_str().unwrap_or(""), "w^2");
                let rels = r.data["relations"].as_array().cloned().unwrap_or_default();
                c.check(
                    !rels.is_empty() && rels.iter().all(|x| x["vanishes"] == true),
                    format!("{} relations map to 0", rels.len()),
                );
                c.check(r.data["image_ring"]["mismatch"].is_null(), "image ring confirmed through degree 40");
            }
            9 => {
                let r = self.run(Command::Detect { sequence: "2S8".into() }, Some(60))?;
                c.check(r.data["identity"] == true, "2S8 E2 identity exact");
                for s in ["2A8", "2A10", "Ly"] {
                    let r = self.run(Command::Detect { sequence: s.into() }, Some(60))?;
                    c.check(r.data["first_negative"].is_null(), format!("{s}: non-negative through 60"));
                }
                let e = self.run(Command::Einfty { reading: "symmetric".into() }, Some(40))?;
                c.check(e.ok, "symmetric reading agrees through 40");
                let flags: Vec<Value> = e.data["flags"].as_array().cloned().unwrap_or_default();
                let seven = flags.iter().find(|f| f["degree"] == 7);
                c.check(
                    seven.is_some_and(|f| f["reference"] == 3 && f["einfty"] == 4 && f["sequence"] == 4),
                    "degree 7 flagged: reference 3, computed 4 and 4",
                );
                c.eq("flagged degrees", flags.iter().filter_map(|f| f["degree"].as_u64()).collect::<Vec<_>>(), vec![7]);
            }
            10 => {
                let r = self.run(Command::ModuleInvariants { name: "rad_S".into() }, None)?;
                c.eq(
                    "coefficient ring",
                    strings(&r.data["ring_generators"]),
                    vec!["v4+w4".to_string(), "v4*w4".into()],
                );
                c.check(r.data["claim"]["first_failure"].is_null(), "{g3+b3, a5, v4*g3+w4*b3} generate through 30");
            }
            11 => {
                let labels = |g: &str| -> CliResult<Vec<String>> {
                    let r = self.run(
                        Command::Perm {
                            group: g.into(),
                            action: PermAction::MaximalEa2,
                            cycle_type: "2^4".into(),
                            budget: None,
                        },
                        None,
                    )?;
                    Ok(r.data["classes"]
                        .as_array()
                        .into_iter()
                        .flatten()
                        .filter_map(|c| c["label"].as_str().map(String::from))
                        .collect())
                };
                c.eq("S8 classes", labels("S8")?, ["V_3", "V_2^2", "V_2 x V_1^2", "V_1^4"].map(String::from).to_vec());
                c.eq("A10 classes", labels("A10")?, ["V_3", "V_2^2", "V_2 x E_3", "E_5"].map(String::from).to_vec());
                let f = self.run(
                    Command::Perm {
                        group: "A10".into(),
                        action: PermAction::Filter,
                        cycle_type: "2^4".into(),
                        budget: None,
                    },
                    None,
                )?;
                let classes = strings(&f.data["classes"]);
                let found: Vec<bool> =
                    f.data["known"].as_array().into_iter().flatten().map(|k| !k["class"].is_null()).collect();
                let distinct = f.data["known"][0]["class"] != f.data["known"][1]["class"];
                c.check(
                    classes.len() == 2 && found == [true, true] && distinct,
                    format!("2^4 filter on A10 keeps exactly V3~ and M3~ ({})", classes.join(", ")),
                );
                let n = self.run(
                    Command::Perm {
                        group: "S8".into(),
                        action: PermAction::NormalizerV3,
                        cycle_type: "2^4".into(),
                        budget: None,
                    },
                    None,
                )?;
                c.eq("|N(V3~)/V3~| in S8", n.data["quotient_order"].as_u64(), Some(168));
            }
            12 => {
                let r = self.run(Command::Sylow, None)?;
                c.eq("order", r.data["order"].as_u64(), Some(256));
                c.check(r.ok, "centers, normal 2^4's, fusion, <A,T,Z> of order 8");
            }
            13 => {
                let r = self.invariants("A7_in_GL4_2")?;
                c.eq("group order", r.data["group_order"].as_u64(), Some(2520));
                c.check(
                    r.data["search"]["checked_through"].as_u64() == Some(24),
                    "dimensions match the series through 24",
                );
                c.eq("primary degrees", u64s(&r.data["primary_degrees"]), vec![8, 12, 14, 15]);
                c.eq("secondary degrees", u64s(&r.data["secondary_degrees"]), vec![0, 18, 20, 21, 24, 25, 27, 45]);
                c.eq("expected count", r.data["expected_count"].as_u64(), Some(8));
                c.check(r.ok, "free and complete");
            }
            _ => unreachable!("criteria are numbered 1 to 13"),
        }
        Ok(())
    }
}

/// Runs one criterion; command errors count as failures.
pub fn run_criterion(ctx: &Context, cache: Option<&Cache>, id: u32) -> Outcome {
    let start = Instant::now();
    let mut c = Checks::new();
    if let Err(e) = (Runner { ctx, cache }).criterion(id, &mut c) {
        c.check(false, format!("error: {e}"));
    }
    Outcome {
        id,
        title: TITLES[id as usize - 1],
        passed: c.passed,
        seconds: start.elapsed().as_secs_f64(),
        details: c.details,
    }
}

pub fn run_suite(ctx: &Context, cache: Option<&Cache>, mut each: impl FnMut(&Outcome)) -> Vec<Outcome> {
    (1..=13)
        .map(|id| {
            let o = run_criterion(ctx, cache, id);
            each(&o);
            o
        })
        .collect()
}
