//! Sparse multivariate polynomials over exact rationals.
//!
//! Terms live in a `BTreeMap` keyed by monomials under graded
//! lexicographic order, so every polynomial has one canonical
//! representation and `==` means equality of polynomials.
//!
//! Text form (used by the JSON documents and `Display`):
//!
//! ```text
//! poly     := ['+'|'-'] term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := rational | variable ('^' uint)?
//! rational := uint ('/' uint)?
//! ```
//!
//! Variables are named identifiers (`x`, `q1`, `p_2`, ...); products need
//! an explicit `*`. Example: `-3/2*x*y^2 + z - 5`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::scalar::Scalar;

/// Shared, ordered list of variable names.
pub type Vars = Arc<[String]>;

pub fn vars(names: &[&str]) -> Vars {
    names.iter().map(|s| s.to_string()).collect()
}

/// `x1..xn`.
pub fn default_vars(n: usize) -> Vars {
    (1..=n).map(|i| format!("x{i}")).collect()
}

/// Exponent vector under graded lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyParseError {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("unexpected token at byte {0}: `{1}`")]
    UnexpectedToken(usize, String),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("zero denominator in coefficient")]
    ZeroDenominator,
    #[error("exponent out of range")]
    BadExponent,
}

/// A polynomial in a fixed, named variable context.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    vars: Vars,
    terms: BTreeMap<Monomial, Scalar>,
}

impl MultiPoly {
    pub fn zero(vars: Vars) -> Self {
        MultiPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: Vars, c: Scalar) -> Self {
        let mut p = MultiPoly::zero(vars);
        if !c.is_zero() {
            let n = p.vars.len();
            p.terms.insert(Monomial(vec![0; n]), c);
        }
        p
    }

    /// The variable `vars[idx]` as a polynomial.
    pub fn var(vars: Vars, idx: usize) -> Self {
        assert!(idx < vars.len(), "variable index out of range");
        let mut exps = vec![0; vars.len()];
        exps[idx] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(Monomial(exps), Scalar::one());
        MultiPoly { vars, terms }
    }

    pub fn monomial(vars: Vars, exps: Vec<u32>, coeff: Scalar) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length mismatch");
        let mut p = MultiPoly::zero(vars);
        p.add_term(Monomial(exps), coeff);
        p
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn n_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn constant_term(&self) -> Scalar {
        self.terms
            .get(&Monomial(vec![0; self.vars.len()]))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn same_vars(&self, other: &MultiPoly) {
        assert_eq!(self.vars, other.vars, "mixed variable contexts");
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        self.same_vars(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.same_vars(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> MultiPoly {
        if s.is_zero() {
            return MultiPoly::zero(self.vars.clone());
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        self.same_vars(other);
        let mut out = MultiPoly::zero(self.vars.clone());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let exps: Vec<u32> = ma.0.iter().zip(&mb.0).map(|(a, b)| a + b).collect();
                out.add_term(Monomial(exps), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut out = MultiPoly::constant(self.vars.clone(), Scalar::one());
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Partial derivative with respect to `vars[idx]`.
    pub fn partial(&self, idx: usize) -> MultiPoly {
        assert!(idx < self.vars.len(), "variable index out of range");
        let mut out = MultiPoly::zero(self.vars.clone());
        for (m, c) in &self.terms {
            let e = m.0[idx];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[idx] = e - 1;
            out.add_term(Monomial(exps), c * &Scalar::int(e as i64));
        }
        out
    }

    pub fn gradient(&self) -> Vec<MultiPoly> {
        (0..self.vars.len()).map(|i| self.partial(i)).collect()
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.vars.len(), "point dimension mismatch");
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t *= &x.pow(e);
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes `args[i]` for variable `i`. All `args` must share one
    /// variable context; the result lives in that context.
    pub fn substitute(&self, args: &[MultiPoly]) -> MultiPoly {
        assert_eq!(args.len(), self.vars.len(), "argument count mismatch");
        let target = args
            .first()
            .map(|p| p.vars.clone())
            .unwrap_or_else(|| self.vars.clone());
        for a in args {
            assert_eq!(a.vars, target, "mixed variable contexts in substitution");
        }
        // Cached powers per argument, built on demand.
        let mut pows: Vec<Vec<MultiPoly>> = args
            .iter()
            .map(|a| vec![MultiPoly::constant(target.clone(), Scalar::one()), a.clone()])
            .collect();
        let mut out = MultiPoly::zero(target.clone());
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(target.clone(), c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while pows[i].len() <= e as usize {
                    let next = pows[i].last().unwrap().mul(&args[i]);
                    pows[i].push(next);
                }
                t = t.mul(&pows[i][e as usize]);
            }
            out = out.add(&t);
        }
        out
    }

    /// Parses the grammar documented at module level.
    pub fn parse(text: &str, vars: Vars) -> Result<MultiPoly, PolyParseError> {
        Parser::new(text, vars).parse()
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
                first = false;
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || m.degree() == 0 {
                factors.push(mag.to_string());
            }
            for (name, &e) in self.vars.iter().zip(&m.0) {
                match e {
                    0 => {}
                    1 => factors.push(name.clone()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
    vars: Vars,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, vars: Vars) -> Self {
        Parser { text, pos: 0, vars }
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn err_here(&mut self) -> PolyParseError {
        match self.peek() {
            None => PolyParseError::UnexpectedEnd,
            Some(c) => PolyParseError::UnexpectedToken(self.pos, c.to_string()),
        }
    }

    fn take_uint(&mut self) -> Result<String, PolyParseError> {
        self.skip_ws();
        let digits: String = self.rest().chars().take_while(|c| c.is_ascii_digit()).collect();
        if digits.is_empty() {
            return Err(self.err_here());
        }
        self.pos += digits.len();
        Ok(digits)
    }

    fn take_ident(&mut self) -> Option<String> {
        self.skip_ws();
        let mut chars = self.rest().chars();
        let first = chars.next()?;
        if !(first.is_ascii_alphabetic() || first == '_') {
            return None;
        }
        let ident: String = std::iter::once(first)
            .chain(chars.take_while(|c| c.is_ascii_alphanumeric() || *c == '_'))
            .collect();
        self.pos += ident.len();
        Some(ident)
    }

    fn parse(mut self) -> Result<MultiPoly, PolyParseError> {
        let mut acc = MultiPoly::zero(self.vars.clone());
        let mut sign = match self.peek() {
            Some('-') => {
                self.bump();
                true
            }
            Some('+') => {
                self.bump();
                false
            }
            _ => false,
        };
        loop {
            let term = self.parse_term()?;
            acc = if sign { acc.sub(&term) } else { acc.add(&term) };
            match self.peek() {
                None => return Ok(acc),
                Some('+') => {
                    self.bump();
                    sign = false;
                }
                Some('-') => {
                    self.bump();
                    sign = true;
                }
                Some(_) => return Err(self.err_here()),
            }
        }
    }

    fn parse_term(&mut self) -> Result<MultiPoly, PolyParseError> {
        let mut acc = self.parse_factor()?;
        while self.peek() == Some('*') {
            self.bump();
            let f = self.parse_factor()?;
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    fn parse_factor(&mut self) -> Result<MultiPoly, PolyParseError> {
        if let Some(ident) = self.take_ident() {
            let idx = self
                .vars
                .iter()
                .position(|v| *v == ident)
                .ok_or(PolyParseError::UnknownVariable(ident))?;
            let mut exp = 1u32;
            if self.peek() == Some('^') {
                self.bump();
                let digits = self.take_uint()?;
                exp = digits.parse().map_err(|_| PolyParseError::BadExponent)?;
            }
            let mut exps = vec![0; self.vars.len()];
            exps[idx] = exp;
            return Ok(MultiPoly::monomial(self.vars.clone(), exps, Scalar::one()));
        }
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.take_uint()?;
                let mut lit = num;
                if self.peek() == Some('/') {
                    self.bump();
                    let den = self.take_uint()?;
                    if den.chars().all(|c| c == '0') {
                        return Err(PolyParseError::ZeroDenominator);
                    }
                    lit = format!("{lit}/{den}");
                }
                let c: Scalar = lit.parse().expect("digits form a valid rational");
                Ok(MultiPoly::constant(self.vars.clone(), c))
            }
            _ => Err(self.err_here()),
        }
    }
}
