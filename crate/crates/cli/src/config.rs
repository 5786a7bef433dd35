//! Run configuration: named groups, rings, series descriptors and the
//! checks built from them. The bundled file is `config/invar.toml`.

use std::collections::{BTreeMap, HashMap};
use std::path::{Path, PathBuf};

use invar_core::gf2::{Polynomial, Ring};
use invar_core::group::named::matrix_group;
use invar_core::group::{MatF2, MatrixGroup};
use invar_core::invariant::dickson;
use invar_core::series::{DetectionSequence, PresentedRing, RingDescriptor};
use invar_core::subring::{Subalgebra, Symbols};
use serde::Deserialize;
use sha2::{Digest, Sha256};

use crate::error::{config_err, CliError, CliResult};
use crate::report::Format;

pub const BUNDLED: &str = include_str!("../config/invar.toml");

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Defaults {
    #[serde(default = "default_bound")]
    pub bound: u32,
    #[serde(default = "default_format")]
    pub format: Format,
    /// Degree bound for the intermediate module tables of `invariants`.
    #[serde(default = "default_table_bound")]
    pub table_bound: u32,
    pub cache_dir: Option<PathBuf>,
}

fn default_bound() -> u32 {
    40
}
fn default_format() -> Format {
    Format::Text
}
fn default_table_bound() -> u32 {
    13
}

impl Default for Defaults {
    fn default() -> Self {
        Self { bound: default_bound(), format: default_format(), table_bound: default_table_bound(), cache_dir: None }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SymbolsConfig {
    pub ambient: Vec<String>,
    #[serde(default)]
    pub named: Vec<(String, String)>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupConfig {
    pub builtin: Option<String>,
    pub generators: Option<Vec<Vec<String>>>,
    pub search: Option<String>,
    pub variables: Vec<String>,
    pub primaries: Vec<String>,
    pub degrees: u32,
    /// Degree through which a searched group's invariants are matched.
    #[serde(default = "default_search_check")]
    pub search_check: u32,
}

fn default_search_check() -> u32 {
    24
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingConfig {
    pub ring: Vec<String>,
    #[serde(default = "unit_module")]
    pub module: Vec<String>,
}

fn unit_module() -> Vec<String> {
    vec!["1".into()]
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DescriptorConfig {
    pub ring: Option<Vec<u32>>,
    pub module: Option<Vec<u32>>,
    pub subalgebra: Option<String>,
    /// Names of other descriptors; a leading `-` subtracts.
    pub parts: Option<Vec<String>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SequenceConfig {
    #[serde(default)]
    pub radical: Vec<String>,
    #[serde(default)]
    pub middle: Vec<String>,
    pub detectors: Vec<String>,
    #[serde(default)]
    pub quotient: Vec<String>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EinftyConfig {
    pub against: String,
    pub pieces: Vec<String>,
    #[serde(default)]
    pub reference: Vec<(usize, i64)>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolveConfig {
    pub unknown: String,
    pub relation: String,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingMapConfig {
    pub generators: Vec<(String, u32)>,
    pub relations: Vec<String>,
    pub images: Vec<(String, String)>,
    pub solve: Option<SolveConfig>,
    #[serde(default)]
    pub extra: Vec<String>,
    pub image_ring: Option<String>,
    pub essential: Option<String>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleConfig {
    pub ring: Vec<(String, u32)>,
    pub basis: Vec<(String, u32)>,
    #[serde(default)]
    pub action: Vec<Vec<(String, String)>>,
    #[serde(default)]
    pub claim_ring: Vec<String>,
    #[serde(default)]
    pub claim_module: Vec<String>,
    pub bound: u32,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    #[serde(default)]
    pub defaults: Defaults,
    pub symbols: SymbolsConfig,
    #[serde(default)]
    pub groups: BTreeMap<String, GroupConfig>,
    #[serde(default)]
    pub rings: BTreeMap<String, RingConfig>,
    #[serde(default)]
    pub descriptors: BTreeMap<String, DescriptorConfig>,
    #[serde(default)]
    pub sequences: BTreeMap<String, SequenceConfig>,
    #[serde(default)]
    pub einfty: BTreeMap<String, EinftyConfig>,
    #[serde(default)]
    pub ring_maps: BTreeMap<String, RingMapConfig>,
    #[serde(default)]
    pub modules: BTreeMap<String, ModuleConfig>,
    /// SHA-256 of the source text, part of every cache key.
    #[serde(skip)]
    pub digest: String,
}

/// A config with its symbol table built.
#[derive(Debug, Clone)]
pub struct Context {
    pub config: RunConfig,
    pub symbols: Symbols,
}

fn lookup<'a, T>(map: &'a BTreeMap<String, T>, kind: &str, name: &str) -> CliResult<&'a T> {
    map.get(name).ok_or_else(|| {
        let known: Vec<&str> = map.keys().map(String::as_str).collect();
        config_err(format!("unknown {kind} `{name}` (known: {})", known.join(", ")))
    })
}

impl RunConfig {
    pub fn parse(text: &str) -> CliResult<Self> {
        let mut c: RunConfig = toml::from_str(text).map_err(|e| config_err(e.to_string()))?;
        c.digest = hex::encode(Sha256::digest(text.as_bytes()));
        Ok(c)
    }

    pub fn bundled() -> Self {
        Self::parse(BUNDLED).expect("bundled config parses")
    }

    pub fn load(path: &Path) -> CliResult<Self> {
        let text =
            std::fs::read_to_string(path).map_err(|e| config_err(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }
}

impl Context {
    pub fn new(config: RunConfig) -> CliResult<Self> {
        let symbols = build_symbols(&config.symbols)?;
        let ctx = Self { config, symbols };
        ctx.validate()?;
        Ok(ctx)
    }

    pub fn bundled() -> Self {
        Self::new(RunConfig::bundled()).expect("bundled config is valid")
    }

    /// Every name referenced resolves and every bound is positive. Rings and
    /// polynomials are parsed; groups are not built.
    pub fn validate(&self) -> CliResult<()> {
        let c = &self.config;
        if c.defaults.bound == 0 || c.defaults.table_bound == 0 {
            return Err(config_err("bounds must be positive"));
        }
        for (name, g) in &c.groups {
            let sources = [g.builtin.is_some(), g.generators.is_some(), g.search.is_some()];
            if sources.iter().filter(|&&b| b).count() != 1 {
                return Err(config_err(format!("group `{name}` needs exactly one of builtin, generators, search")));
            }
            if g.degrees == 0 {
                return Err(config_err(format!("group `{name}`: degrees must be positive")));
            }
            self.primaries(name, &g.primaries)?;
        }
        for name in c.rings.keys() {
            self.ring(name)?;
        }
        for name in c.descriptors.keys() {
            self.descriptor(name)?;
        }
        for name in c.sequences.keys() {
            self.sequence(name)?;
        }
        for (name, e) in &c.einfty {
            self.sequence(&e.against)?;
            for p in &e.pieces {
                self.descriptor(p).map_err(|e| config_err(format!("einfty `{name}`: {e}")))?;
            }
        }
        for (name, m) in &c.ring_maps {
            if let Some(r) = &m.image_ring {
                lookup(&c.rings, "ring", r).map_err(|e| config_err(format!("ring map `{name}`: {e}")))?;
            }
        }
        for (name, m) in &c.modules {
            if m.bound == 0 {
                return Err(config_err(format!("module `{name}`: bound must be positive")));
            }
        }
        Ok(())
    }

    pub fn group(&self, name: &str) -> CliResult<&GroupConfig> {
        lookup(&self.config.groups, "group", name)
    }

    pub fn group_ring(&self, g: &GroupConfig) -> Ring {
        Ring::new(&g.variables)
    }

    /// The group's matrix group for `builtin` or `generators`; `None` for
    /// searched groups.
    pub fn matrix_group(&self, name: &str) -> CliResult<Option<MatrixGroup>> {
        let g = self.group(name)?;
        let n = g.variables.len();
        let group = if let Some(b) = &g.builtin {
            matrix_group(b)?
        } else if let Some(gens) = &g.generators {
            let mats = gens
                .iter()
                .map(|rows| {
                    let rows: Vec<Vec<u8>> = rows
                        .iter()
                        .map(|r| {
                            r.bytes()
                                .map(|b| match b {
                                    b'0' => Ok(0),
                                    b'1' => Ok(1),
                                    _ => Err(config_err(format!("group `{name}`: matrix row `{r}` is not 0/1"))),
                                })
                                .collect()
                        })
                        .collect::<CliResult<_>>()?;
                    Ok(MatF2::from_rows(&rows)?)
                })
                .collect::<CliResult<Vec<_>>>()?;
            MatrixGroup::new(n, mats)?
        } else {
            return Ok(None);
        };
        if group.dim() != n {
            return Err(config_err(format!("group `{name}` acts on {} variables but {n} are named", group.dim())));
        }
        Ok(Some(group))
    }

    /// Primaries of a group: `dickson(n)`, `dickson(n)[i]`, or polynomials
    /// in the group's variables.
    pub fn primaries(&self, group: &str, specs: &[String]) -> CliResult<Vec<Polynomial>> {
        let g = self.group(group)?;
        let ring = self.group_ring(g);
        let mut out = Vec::new();
        for s in specs {
            let s = s.trim();
            if let Some(rest) = s.strip_prefix("dickson(") {
                let (n, tail) = rest.split_once(')').ok_or_else(|| config_err(format!("bad primary `{s}`")))?;
                let n: usize = n.trim().parse().map_err(|_| config_err(format!("bad primary `{s}`")))?;
                if n == 0 || n > ring.n_vars() {
                    return Err(config_err(format!("`{s}` needs 1 to {} variables", ring.n_vars())));
                }
                let ds = dickson(n);
                if tail.is_empty() {
                    out.extend(ds);
                } else {
                    let i: usize = tail
                        .strip_prefix('[')
                        .and_then(|t| t.strip_suffix(']'))
                        .and_then(|t| t.trim().parse().ok())
                        .ok_or_else(|| config_err(format!("bad primary `{s}`")))?;
                    out.push(ds.get(i).cloned().ok_or_else(|| config_err(format!("`{s}`: index out of range")))?);
                }
            } else {
                out.push(ring.parse(s).map_err(|e| config_err(format!("primary `{s}`: {e}")))?);
            }
        }
        Ok(out)
    }

    pub fn ring(&self, name: &str) -> CliResult<Subalgebra> {
        let r = lookup(&self.config.rings, "ring", name)?;
        let eval = |xs: &[String]| -> CliResult<Vec<Polynomial>> {
            xs.iter()
                .map(|x| self.symbols.eval(x).map_err(|e| config_err(format!("ring `{name}`: `{x}`: {e}"))))
                .collect()
        };
        let weights = self.symbols.ambient().weights().to_vec();
        Ok(Subalgebra::module(weights, eval(&r.ring)?, eval(&r.module)?)?)
    }

    pub fn descriptor(&self, name: &str) -> CliResult<RingDescriptor> {
        self.descriptor_at(name, 0)
    }

    fn descriptor_at(&self, name: &str, depth: usize) -> CliResult<RingDescriptor> {
        if depth > 32 {
            return Err(config_err(format!("descriptor `{name}` refers to itself")));
        }
        let d = lookup(&self.config.descriptors, "descriptor", name)?;
        match (&d.ring, &d.subalgebra, &d.parts) {
            (Some(ring), None, None) => Ok(RingDescriptor::free(ring, d.module.as_deref().unwrap_or(&[0]))),
            (None, Some(s), None) if d.module.is_none() => Ok(RingDescriptor::Subalgebra(self.ring(s)?)),
            (None, None, Some(parts)) if d.module.is_none() => {
                let mut out = Vec::new();
                for p in parts {
                    let (sign, p) = match p.strip_prefix('-') {
                        Some(rest) => (-1, rest),
                        None => (1, p.as_str()),
                    };
                    out.push((sign, self.descriptor_at(p, depth + 1)?));
                }
                Ok(RingDescriptor::Sum(out))
            }
            _ => Err(config_err(format!("descriptor `{name}` needs exactly one of ring, subalgebra, parts"))),
        }
    }

    fn summed(&self, names: &[String]) -> CliResult<Option<RingDescriptor>> {
        match names {
            [] => Ok(None),
            [one] => Ok(Some(self.descriptor(one)?)),
            many => Ok(Some(RingDescriptor::sum(many.iter().map(|n| self.descriptor(n)).collect::<CliResult<_>>()?))),
        }
    }

    pub fn sequence(&self, name: &str) -> CliResult<DetectionSequence> {
        let s = lookup(&self.config.sequences, "sequence", name)?;
        Ok(DetectionSequence {
            name: name.to_string(),
            radical: self.summed(&s.radical)?,
            middle: self.summed(&s.middle)?,
            detectors: s.detectors.iter().map(|d| self.descriptor(d)).collect::<CliResult<_>>()?,
            quotient: self.summed(&s.quotient)?,
        })
    }

    pub fn einfty(&self, name: &str) -> CliResult<&EinftyConfig> {
        lookup(&self.config.einfty, "E-infinity reading", name)
    }

    pub fn ring_map(&self, name: &str) -> CliResult<(&RingMapConfig, PresentedRing)> {
        let m = lookup(&self.config.ring_maps, "ring map", name)?;
        let ring = PresentedRing { generators: m.generators.clone(), relations: m.relations.clone(), series: None };
        Ok((m, ring))
    }

    pub fn module(&self, name: &str) -> CliResult<&ModuleConfig> {
        lookup(&self.config.modules, "module", name)
    }
}

/// Named classes are evaluated in order, each may use the earlier ones.
fn build_symbols(s: &SymbolsConfig) -> CliResult<Symbols> {
    if s.ambient.is_empty() {
        return Err(config_err("symbols: ambient variable list is empty"));
    }
    let ambient = Ring::new(&s.ambient);
    let mut known: HashMap<String, Polynomial> = HashMap::new();
    let mut named = Vec::new();
    for (n, expr) in &s.named {
        let v = ambient.parse_with(expr, &known).map_err(|e| config_err(format!("symbol `{n}`: {e}")))?;
        known.insert(n.clone(), v.clone());
        named.push((n.clone(), v));
    }
    Symbols::new(ambient, named).map_err(|e| config_err(format!("symbols: {e}")))
}

impl From<toml::de::Error> for CliError {
    fn from(e: toml::de::Error) -> Self {
        config_err(e.to_string())
    }
}
