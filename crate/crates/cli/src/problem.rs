//! Line-oriented problem-file grammar.
//!
//! ```text
//! algebra weyl 3
//! vars x y z dx dy dz
//! order degrevlex weights -1 0 0 1 0 0
//! division janet
//! coeff rational
//! generators:
//! dz - y*dx
//! dy
//! target:
//! dx
//! ```
//!
//! `algebra`, `order`, `division`, and `generators:` are required; `vars`,
//! `coeff` (default `rational`), and `target:` are optional. Comments start
//! with `#`. Expressions use identifiers, integer/rational literals and
//! `+ - * ^`; over `coeff qpoly` the parameter `t` is a scalar.

use std::collections::HashMap;
use std::fmt;

use anyhow::{anyhow, bail, Context, Result};
use num_rational::BigRational;
use num_traits::One;

use invobase::expr::parse_poly;
use invobase::scalar::{RatPoly, Scalar};
use invobase::{Algebra, DivisionKind, DivisionSpec, MultiIndex, OrderKind, OrderSpec, Poly};

#[derive(Clone, Debug, PartialEq)]
pub enum AlgebraSpec {
    Commutative(usize),
    Weyl(usize),
    OreShift(usize),
    OreDifference(usize),
    So3,
    QHeisenberg(BigRational),
}

impl AlgebraSpec {
    pub fn describe(&self) -> String {
        match self {
            AlgebraSpec::Commutative(n) => format!("commutative {n}"),
            AlgebraSpec::Weyl(m) => format!("weyl {m}"),
            AlgebraSpec::OreShift(m) => format!("ore-shift {m}"),
            AlgebraSpec::OreDifference(m) => format!("ore-difference {m}"),
            AlgebraSpec::So3 => "so3".into(),
            AlgebraSpec::QHeisenberg(q) => format!("q-heisenberg {q}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoeffKind {
    Rational,
    Int,
    QPoly,
}

impl CoeffKind {
    pub fn name(self) -> &'static str {
        match self {
            CoeffKind::Rational => "rational",
            CoeffKind::Int => "int",
            CoeffKind::QPoly => "qpoly",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "rational" => Ok(CoeffKind::Rational),
            "int" => Ok(CoeffKind::Int),
            "qpoly" => Ok(CoeffKind::QPoly),
            other => bail!("unknown coefficient domain '{other}' (rational, int, qpoly)"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Problem {
    pub algebra: AlgebraSpec,
    pub vars: Option<Vec<String>>,
    pub order: OrderSpec,
    /// Normalized source form of the order line (for printing).
    pub order_line: String,
    pub division: DivisionSpec,
    pub coeff: CoeffKind,
    pub generators: Vec<String>,
    pub target: Option<String>,
}

pub fn parse_order(tokens: &[&str], n: usize) -> Result<(OrderSpec, String)> {
    if tokens.is_empty() {
        bail!("empty order specification");
    }
    let base = match tokens[0] {
        "lex" => OrderSpec::new(OrderKind::Lex),
        "revlex" => OrderSpec::new(OrderKind::RevLex),
        "deglex" => OrderSpec::new(OrderKind::DegLex),
        "degrevlex" => OrderSpec::new(OrderKind::DegRevLex),
        "deginvlex" => OrderSpec::deginvlex(n),
        other => bail!("unknown order '{other}' (lex, revlex, deglex, degrevlex, deginvlex)"),
    };
    let mut order = base;
    let mut line = tokens[0].to_string();
    let rest = &tokens[1..];
    if !rest.is_empty() {
        if rest[0] != "weights" {
            bail!("expected 'weights' after the order name, found '{}'", rest[0]);
        }
        let ws: Vec<BigRational> = rest[1..]
            .iter()
            .map(|t| parse_rational(t))
            .collect::<Result<_>>()?;
        if ws.len() != n {
            bail!("order has {} weights but the algebra has {n} variables", ws.len());
        }
        line.push_str(" weights");
        for (w, t) in ws.iter().zip(&rest[1..]) {
            let _ = w;
            line.push(' ');
            line.push_str(t);
        }
        order = order.with_weights(ws);
    }
    Ok((order, line))
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a, b),
        None => (s, "1"),
    };
    let n: num_bigint::BigInt = num
        .parse()
        .with_context(|| format!("invalid rational '{s}'"))?;
    let d: num_bigint::BigInt = den
        .parse()
        .with_context(|| format!("invalid rational '{s}'"))?;
    if d == num_bigint::BigInt::from(0) {
        bail!("invalid rational '{s}': zero denominator");
    }
    Ok(BigRational::new(n, d))
}

pub fn parse_problem(text: &str) -> Result<Problem> {
    let mut algebra: Option<AlgebraSpec> = None;
    let mut vars: Option<Vec<String>> = None;
    let mut order_tokens: Option<Vec<String>> = None;
    let mut division: Option<DivisionSpec> = None;
    let mut coeff = CoeffKind::Rational;
    let mut generators: Vec<String> = Vec::new();
    let mut target: Option<String> = None;
    #[derive(PartialEq)]
    enum Block {
        Header,
        Generators,
        Target,
    }
    let mut block = Block::Header;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let at = |msg: String| anyhow!("line {}: {msg}", lineno + 1);
        if line == "generators:" {
            block = Block::Generators;
            continue;
        }
        if line == "target:" {
            block = Block::Target;
            continue;
        }
        match block {
            Block::Generators => generators.push(line.to_string()),
            Block::Target => {
                if target.is_some() {
                    return Err(at("multiple target expressions".into()));
                }
                target = Some(line.to_string());
            }
            Block::Header => {
                let tokens: Vec<&str> = line.split_whitespace().collect();
                match tokens[0] {
                    "algebra" => {
                        let spec = match (tokens.get(1).copied(), tokens.get(2)) {
                            (Some("commutative"), Some(n)) => AlgebraSpec::Commutative(
                                n.parse().map_err(|_| at("bad variable count".into()))?,
                            ),
                            (Some("weyl"), Some(m)) => AlgebraSpec::Weyl(
                                m.parse().map_err(|_| at("bad variable count".into()))?,
                            ),
                            (Some("ore-shift"), Some(m)) => AlgebraSpec::OreShift(
                                m.parse().map_err(|_| at("bad variable count".into()))?,
                            ),
                            (Some("ore-difference"), Some(m)) => AlgebraSpec::OreDifference(
                                m.parse().map_err(|_| at("bad variable count".into()))?,
                            ),
                            (Some("so3"), None) => AlgebraSpec::So3,
                            (Some("q-heisenberg"), Some(qv)) => {
                                AlgebraSpec::QHeisenberg(parse_rational(qv)?)
                            }
                            _ => return Err(at(format!("unknown algebra '{line}'"))),
                        };
                        algebra = Some(spec);
                    }
                    "vars" => {
                        vars = Some(tokens[1..].iter().map(|s| s.to_string()).collect());
                    }
                    "order" => {
                        order_tokens =
                            Some(tokens[1..].iter().map(|s| s.to_string()).collect());
                    }
                    "division" => {
                        let kind = match tokens.get(1).copied() {
                            Some("janet") => DivisionKind::Janet,
                            Some("pommaret") => DivisionKind::Pommaret,
                            _ => return Err(at("expected 'janet' or 'pommaret'".into())),
                        };
                        division = Some(DivisionSpec::new(kind));
                    }
                    "coeff" => {
                        coeff = CoeffKind::parse(
                            tokens.get(1).copied().unwrap_or_default(),
                        )
                        .map_err(|e| at(e.to_string()))?;
                    }
                    other => return Err(at(format!("unknown directive '{other}'"))),
                }
            }
        }
    }
    let algebra = algebra.ok_or_else(|| anyhow!("missing 'algebra' line"))?;
    let n = algebra_arity(&algebra);
    if let Some(v) = &vars {
        if v.len() != n {
            bail!("'vars' lists {} names but the algebra has {n} variables", v.len());
        }
    }
    let order_tokens = order_tokens.ok_or_else(|| anyhow!("missing 'order' line"))?;
    let toks: Vec<&str> = order_tokens.iter().map(String::as_str).collect();
    let (order, order_line) = parse_order(&toks, n)?;
    let division = division.ok_or_else(|| anyhow!("missing 'division' line"))?;
    if generators.is_empty() {
        bail!("missing 'generators:' block");
    }
    Ok(Problem {
        algebra,
        vars,
        order,
        order_line,
        division,
        coeff,
        generators,
        target,
    })
}

pub fn algebra_arity(spec: &AlgebraSpec) -> usize {
    match spec {
        AlgebraSpec::Commutative(n) => *n,
        AlgebraSpec::Weyl(m) | AlgebraSpec::OreShift(m) | AlgebraSpec::OreDifference(m) => 2 * m,
        AlgebraSpec::So3 => 3,
        AlgebraSpec::QHeisenberg(_) => 3,
    }
}

impl Problem {
    /// Instantiate the algebra over an arbitrary scalar domain.
    pub fn build_algebra<C: Scalar>(&self) -> Result<Algebra<C>> {
        let mut a = match &self.algebra {
            AlgebraSpec::Commutative(n) => Algebra::commutative(*n),
            AlgebraSpec::Weyl(m) => Algebra::weyl(*m),
            AlgebraSpec::OreShift(m) => Algebra::ore_shift(*m),
            AlgebraSpec::OreDifference(m) => Algebra::ore_difference(*m),
            AlgebraSpec::So3 => Algebra::enveloping_so3(),
            AlgebraSpec::QHeisenberg(qv) => {
                let c = C::from_rational(qv)
                    .ok_or_else(|| anyhow!("q value {qv} not representable in this domain"))?;
                Algebra::q_heisenberg(c)?
            }
        };
        if let Some(v) = &self.vars {
            a.vars = v.clone();
        }
        Ok(a)
    }

    pub fn polys<C: Scalar>(
        &self,
        algebra: &Algebra<C>,
        scalar_vars: &HashMap<String, C>,
    ) -> Result<Vec<Poly<C>>> {
        self.generators
            .iter()
            .map(|s| {
                parse_poly(s, algebra, &self.order, scalar_vars)
                    .with_context(|| format!("in generator '{s}'"))
            })
            .collect()
    }

    pub fn target_poly<C: Scalar>(
        &self,
        algebra: &Algebra<C>,
        scalar_vars: &HashMap<String, C>,
    ) -> Result<Poly<C>> {
        let t = self
            .target
            .as_ref()
            .ok_or_else(|| anyhow!("this command needs a 'target:' block"))?;
        parse_poly(t, algebra, &self.order, scalar_vars)
            .with_context(|| format!("in target '{t}'"))
    }

    /// Generators interpreted as a monomial set (for `mono-complete`).
    pub fn monomials(&self, algebra: &Algebra<BigRational>) -> Result<Vec<MultiIndex>> {
        let vars: HashMap<String, BigRational> = HashMap::new();
        self.generators
            .iter()
            .map(|s| {
                let p: Poly<BigRational> = parse_poly(s, algebra, &self.order, &vars)?;
                if p.num_terms() != 1 || !p.lc().is_one() {
                    bail!("'{s}' is not a monomial with coefficient 1");
                }
                Ok(p.le().clone())
            })
            .collect()
    }
}

/// Scalar parameters for the ℚ[t] domain: the parameter `t`.
pub fn qpoly_scalars() -> HashMap<String, RatPoly> {
    let mut m = HashMap::new();
    m.insert("t".to_string(), RatPoly::var());
    m
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "algebra {}", self.algebra.describe())?;
        if let Some(v) = &self.vars {
            writeln!(f, "vars {}", v.join(" "))?;
        }
        writeln!(f, "order {}", self.order_line)?;
        writeln!(f, "division {}", self.division.kind.name())?;
        writeln!(f, "coeff {}", self.coeff.name())?;
        writeln!(f, "generators:")?;
        for g in &self.generators {
            writeln!(f, "{g}")?;
        }
        if let Some(t) = &self.target {
            writeln!(f, "target:")?;
            writeln!(f, "{t}")?;
        }
        Ok(())
    }
}
