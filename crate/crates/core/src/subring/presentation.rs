use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::{BitVectorSpace, Monomial, Polynomial, Ring};

use super::subalgebra::{solve_in_span, Subalgebra};

/// Named classes with polynomial values in an ambient ring, so that
/// expressions such as `d2^2*d3` can be written and evaluated.
#[derive(Debug, Clone)]
pub struct Symbols {
    ambient: Ring,
    names: Ring,
    values: Vec<Polynomial>,
}

impl Symbols {
    /// Ambient variables are symbols too, under their own names.
    pub fn new(ambient: Ring, named: Vec<(String, Polynomial)>) -> Result<Self> {
        let mut names: Vec<String> = ambient.names().to_vec();
        let mut values: Vec<Polynomial> = (0..ambient.n_vars()).map(Polynomial::var).collect();
        for (n, v) in named {
            if names.contains(&n) {
                return Err(Error::Invalid(format!("symbol `{n}` defined twice")));
            }
            names.push(n);
            values.push(v);
        }
        let weights = values
            .iter()
            .map(|v| v.weighted_homogeneous_degree(ambient.weights()).filter(|&d| d > 0).ok_or(Error::NotHomogeneous))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { names: Ring::weighted(&names, &weights), ambient, values })
    }

    /// `w, t, z` with `d2, d3` (two variables) and `d4, d6, d7` (three).
    pub fn wtz() -> Self {
        let ambient = Ring::new(&["w", "t", "z"]);
        let mut named = Vec::new();
        for (n, p) in ["d2", "d3"].iter().zip(crate::invariant::dickson(2)) {
            named.push((n.to_string(), p));
        }
        for (n, p) in ["d4", "d6", "d7"].iter().zip(crate::invariant::dickson(3)) {
            named.push((n.to_string(), p));
        }
        Self::new(ambient, named).expect("Dickson classes are homogeneous")
    }

    pub fn ambient(&self) -> &Ring {
        &self.ambient
    }

    /// The ring of symbols, weighted by degree.
    pub fn symbol_ring(&self) -> &Ring {
        &self.names
    }

    /// Polynomial in the symbols, as written.
    pub fn parse(&self, expr: &str) -> Result<Polynomial> {
        self.names.parse(expr)
    }

    pub fn eval(&self, expr: &str) -> Result<Polynomial> {
        Ok(self.parse(expr)?.substitute(&self.values))
    }

    pub fn eval_all(&self, exprs: &[&str]) -> Result<Vec<Polynomial>> {
        exprs.iter().map(|e| self.eval(e)).collect()
    }

    pub fn value(&self, symbolic: &Polynomial) -> Polynomial {
        symbolic.substitute(&self.values)
    }

    pub fn format(&self, symbolic: &Polynomial) -> String {
        self.names.format(symbolic)
    }

    /// `lhs = rhs` after evaluation.
    pub fn identity_holds(&self, lhs: &str, rhs: &str) -> Result<bool> {
        Ok(self.eval(lhs)? == self.eval(rhs)?)
    }
}

/// An `R`-submodule of the ambient ring with a named basis, `R` generated by
/// symbolic expressions.
#[derive(Debug, Clone)]
pub struct ModulePresentation {
    symbols: Symbols,
    ring_exprs: Vec<Polynomial>,
    basis_names: Vec<String>,
    basis_exprs: Vec<Polynomial>,
    module: Subalgebra,
}

/// `coefficient · basis[index]`, with the coefficient written in symbols.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Term {
    pub coefficient: Polynomial,
    pub index: usize,
}

#[derive(Debug, Clone)]
pub struct ReducedGenerators {
    /// Each input generator as a sum of terms.
    pub expressed: Vec<Vec<Term>>,
    /// Terms kept after dropping `R`-multiples of other kept terms, in
    /// first-seen order.
    pub retained: Vec<Term>,
}

#[derive(Debug, Clone)]
pub struct GeneratedIntersection {
    /// Minimal generators of `J_t` for each of the first `k` basis elements.
    pub ideals: Vec<Vec<Polynomial>>,
    /// `j · e_t` for every ideal generator `j`, as symbolic products.
    pub generators: Vec<Term>,
}

impl ModulePresentation {
    pub fn new(symbols: Symbols, ring_gens: &[&str], basis: &[&str]) -> Result<Self> {
        let ring_exprs = ring_gens.iter().map(|e| symbols.parse(e)).collect::<Result<Vec<_>>>()?;
        let basis_exprs = basis.iter().map(|e| symbols.parse(e)).collect::<Result<Vec<_>>>()?;
        let module = Subalgebra::module(
            symbols.ambient().weights().to_vec(),
            ring_exprs.iter().map(|p| symbols.value(p)).collect(),
            basis_exprs.iter().map(|p| symbols.value(p)).collect(),
        )?;
        let basis_names = basis.iter().map(|s| s.to_string()).collect();
        Ok(Self { symbols, ring_exprs, basis_names, basis_exprs, module })
    }

    pub fn symbols(&self) -> &Symbols {
        &self.symbols
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn rank(&self) -> usize {
        self.basis_exprs.len()
    }

    pub fn module(&self) -> &Subalgebra {
        &self.module
    }

    /// The subalgebra `R` alone.
    pub fn base_ring(&self) -> Result<Subalgebra> {
        self.module.with_module_gens(vec![Polynomial::one()])
    }

    fn symbolic_coefficient(&self, e: Monomial) -> Polynomial {
        self.ring_exprs
            .iter()
            .enumerate()
            .map(|(i, g)| g.pow(e.exponent(i)))
            .fold(Polynomial::one(), |acc, p| &acc * &p)
    }

    /// Unique coefficients of `p` in the basis. Fails when `p` is outside
    /// the module or the basis is not free in that degree.
    pub fn express_in_basis(&self, p: &Polynomial) -> Result<Vec<Term>> {
        if p.is_zero() {
            return Ok(Vec::new());
        }
        let d = p.weighted_homogeneous_degree(self.module.weights()).ok_or(Error::NotHomogeneous)?;
        let slice = self.module.ambient_slice(d);
        let terms = self.module.span_terms(d);
        let vecs = terms.iter().map(|&t| slice.to_vec(&self.module.term_value(t))).collect::<Result<Vec<_>>>()?;
        let rank = BitVectorSpace::from_vectors(slice.len(), vecs.clone())?.dim();
        if rank != terms.len() {
            return Err(Error::Verification { degree: d, msg: "basis is not free".into() });
        }
        let target = slice.to_vec(p)?;
        let chosen = solve_in_span(&vecs, &target)
            .ok_or_else(|| Error::Hypothesis(format!("{} is outside the module", self.symbols.ambient().format(p))))?;
        let mut coeffs = vec![Polynomial::zero(); self.rank()];
        for i in chosen {
            let t = terms[i];
            coeffs[t.module_index] = &coeffs[t.module_index] + &self.symbolic_coefficient(t.ring_exponents);
        }
        Ok(coeffs
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(index, coefficient)| Term { coefficient, index })
            .collect())
    }

    pub fn expand(&self, terms: &[Term]) -> Polynomial {
        terms
            .iter()
            .map(|t| &self.symbols.value(&t.coefficient) * &self.symbols.value(&self.basis_exprs[t.index]))
            .sum()
    }

    /// Whether `a = s·b` for some `s ∈ R` (coefficients evaluated).
    fn is_multiple(&self, a: &Polynomial, b: &Polynomial) -> Result<bool> {
        let r = self.module.with_module_gens(vec![self.symbols.value(b)])?;
        r.contains(&self.symbols.value(a))
    }

    /// Expresses every generator in the basis, splits the results into
    /// single terms, and drops terms that are `R`-multiples of a term kept
    /// earlier on the same basis element.
    pub fn reduce_generators(&self, gens: &[Polynomial]) -> Result<ReducedGenerators> {
        let expressed = gens.iter().map(|g| self.express_in_basis(g)).collect::<Result<Vec<_>>>()?;
        let mut retained: Vec<Term> = Vec::new();
        for t in expressed.iter().flatten() {
            let mut redundant = false;
            for k in retained.iter().filter(|k| k.index == t.index) {
                if self.is_multiple(&t.coefficient, &k.coefficient)? {
                    redundant = true;
                    break;
                }
            }
            if !redundant {
                // a new term may make earlier ones redundant
                let mut keep = Vec::with_capacity(retained.len() + 1);
                for k in retained {
                    if k.index == t.index && self.is_multiple(&k.coefficient, &t.coefficient)? {
                        continue;
                    }
                    keep.push(k);
                }
                keep.push(t.clone());
                retained = keep;
            }
        }
        Ok(ReducedGenerators { expressed, retained })
    }

    /// `U ∩ V` for `U` generated by single-term elements `r·e_i` and `V`
    /// spanned by the first `k` basis elements.
    pub fn intersect_generated(&self, u_gens: &[Polynomial], k: usize) -> Result<GeneratedIntersection> {
        let mut per_basis: Vec<Vec<Polynomial>> = vec![Vec::new(); k];
        for g in u_gens {
            let terms = self.express_in_basis(g)?;
            if terms.len() != 1 {
                return Err(Error::Hypothesis(format!(
                    "{} is not a multiple of a single basis element",
                    self.symbols.ambient().format(g)
                )));
            }
            if terms[0].index < k {
                per_basis[terms[0].index].push(terms[0].coefficient.clone());
            }
        }
        let mut ideals = Vec::with_capacity(k);
        let mut generators = Vec::new();
        for (index, coeffs) in per_basis.into_iter().enumerate() {
            let mut minimal: Vec<Polynomial> = Vec::new();
            let mut sorted = coeffs;
            // lower degree first, so divisors are met before their multiples
            sorted.sort_by_key(|c| c.weighted_homogeneous_degree(self.symbols.symbol_ring().weights()));
            sorted.dedup();
            for c in sorted {
                let mut covered = false;
                for m in &minimal {
                    if self.is_multiple(&c, m)? {
                        covered = true;
                        break;
                    }
                }
                if !covered {
                    minimal.push(c);
                }
            }
            for j in &minimal {
                generators.push(Term { coefficient: j.clone(), index });
            }
            ideals.push(minimal);
        }
        Ok(GeneratedIntersection { ideals, generators })
    }

    pub fn format_term(&self, t: &Term) -> String {
        let c = self.symbols.format(&t.coefficient);
        let e = &self.basis_names[t.index];
        if c == "1" {
            format!("[{e}]")
        } else {
            format!("{c}*[{e}]")
        }
    }
}

/// Substitutes `element` for `X` in an equation written in the symbols and
/// `X`; returns the remainder, zero when the equation holds.
pub fn integral_equation_check(symbols: &Symbols, element: &Polynomial, equation: &str) -> Result<Polynomial> {
    let base = symbols.symbol_ring();
    let mut names: Vec<String> = base.names().to_vec();
    if names.iter().any(|n| n == "X") {
        return Err(Error::Invalid("`X` is reserved for the unknown".into()));
    }
    names.push("X".into());
    let mut weights = base.weights().to_vec();
    weights.push(1);
    let eq = Ring::weighted(&names, &weights).parse(equation)?;
    let mut images: Vec<Polynomial> = (0..base.n_vars()).map(|i| symbols.value(&Polynomial::var(i))).collect();
    images.push(element.clone());
    Ok(eq.substitute(&images))
}
