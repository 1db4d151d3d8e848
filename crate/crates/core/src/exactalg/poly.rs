use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use super::rational::Rational;
use super::univariate::UniPoly;
use crate::error::{Error, Result};

/// Exponent vector, one entry per variable of the owning polynomial.
///
/// Ordered graded-lexicographically: total degree first, then the exponent
/// of the first variable, then the second, and so on.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(SmallVec<[u32; 4]>);

impl Monomial {
    pub fn new(exps: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn one(arity: usize) -> Self {
        Monomial(SmallVec::from_elem(0, arity))
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<SmallVec<_>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial over the rationals in an ordered tuple of named
/// variables. No stored coefficient is ever zero.
#[derive(Clone, PartialEq, Eq)]
pub struct SparsePoly {
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Checked binary arithmetic; fails when the variable tuples differ.
pub fn poly_arith(a: &SparsePoly, b: &SparsePoly, op: ArithOp) -> Result<SparsePoly> {
    a.check_same_vars(b)?;
    Ok(match op {
        ArithOp::Add => a.add_unchecked(b, false),
        ArithOp::Sub => a.add_unchecked(b, true),
        ArithOp::Mul => a.mul_unchecked(b),
    })
}

fn to_vars<S: AsRef<str>>(vars: &[S]) -> Arc<[String]> {
    vars.iter().map(|v| v.as_ref().to_string()).collect()
}

impl SparsePoly {
    pub fn zero<S: AsRef<str>>(vars: &[S]) -> Self {
        SparsePoly {
            vars: to_vars(vars),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant<S: AsRef<str>>(vars: &[S], c: Rational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(p.vars.len()), c);
        }
        p
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var<S: AsRef<str>>(vars: &[S], name: &str) -> Result<Self> {
        let mut p = Self::zero(vars);
        let idx = p.var_index(name)?;
        let mut e = vec![0; p.vars.len()];
        e[idx] = 1;
        p.terms.insert(Monomial::new(&e), Rational::one());
        Ok(p)
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing
    /// duplicates and dropping zeros.
    pub fn from_terms<S, I>(vars: &[S], terms: I) -> Result<Self>
    where
        S: AsRef<str>,
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            if e.len() != p.vars.len() {
                return Err(Error::Parse(format!(
                    "exponent vector {e:?} does not match {} variables",
                    p.vars.len()
                )));
            }
            p.add_term(Monomial::new(&e), c);
        }
        Ok(p)
    }

    fn with_same_vars(&self, terms: BTreeMap<Monomial, Rational>) -> Self {
        SparsePoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    fn check_same_vars(&self, other: &SparsePoly) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::VarMismatch {
                left: self.vars.to_vec(),
                right: other.vars.to_vec(),
            })
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms
            .get(&Monomial::new(exps))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&vec![0; self.arity()])
    }

    /// Leading term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Degree in one variable; `None` for the zero polynomial.
    pub fn degree_in(&self, var: &str) -> Result<Option<u32>> {
        let i = self.var_index(var)?;
        Ok(self.terms.keys().map(|m| m.0[i]).max())
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    fn add_unchecked(&self, other: &SparsePoly, negate: bool) -> SparsePoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), if negate { -c.clone() } else { c.clone() });
        }
        out
    }

    fn mul_unchecked(&self, other: &SparsePoly) -> SparsePoly {
        let mut out = self.with_same_vars(BTreeMap::new());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> SparsePoly {
        if c.is_zero() {
            return self.with_same_vars(BTreeMap::new());
        }
        self.with_same_vars(self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect())
    }

    /// Multiplies by the single term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> SparsePoly {
        if c.is_zero() {
            return self.with_same_vars(BTreeMap::new());
        }
        self.with_same_vars(
            self.terms
                .iter()
                .map(|(k, a)| (k.mul(m), a * c))
                .collect(),
        )
    }

    pub fn pow(&self, mut e: u32) -> SparsePoly {
        let mut base = self.clone();
        let mut acc = SparsePoly::constant(&self.vars, Rational::one());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative.
    pub fn derivative(&self, var: &str) -> Result<SparsePoly> {
        let i = self.var_index(var)?;
        let mut out = self.with_same_vars(BTreeMap::new());
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut dm = m.clone();
            dm.0[i] -= 1;
            out.add_term(dm, c * Rational::from_integer(e.into()));
        }
        Ok(out)
    }

    /// Exact value at a point; every variable must be assigned.
    pub fn evaluate(&self, point: &[(&str, Rational)]) -> Result<Rational> {
        let values = self
            .vars
            .iter()
            .map(|v| {
                point
                    .iter()
                    .find(|(n, _)| n == v)
                    .map(|(_, r)| r.clone())
                    .ok_or_else(|| Error::MissingAssignment(v.clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.evaluate_positional(&values))
    }

    /// Exact value with one value per variable, in tuple order.
    pub fn evaluate_positional(&self, values: &[Rational]) -> Rational {
        assert_eq!(values.len(), self.arity(), "arity mismatch");
        let mut powers: Vec<Vec<Rational>> = values.iter().map(|v| vec![Rational::one(), v.clone()]).collect();
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                while pw.len() <= e as usize {
                    let next = pw.last().unwrap() * &values[i];
                    pw.push(next);
                }
                t *= &pw[e as usize];
            }
            acc += t;
        }
        acc
    }

    /// Substitutes `images[i]` for the `i`-th variable. All images must share
    /// one variable tuple, which becomes the tuple of the result.
    pub fn compose(&self, images: &[SparsePoly]) -> Result<SparsePoly> {
        if images.len() != self.arity() {
            return Err(Error::Parameter(format!(
                "compose needs {} images, got {}",
                self.arity(),
                images.len()
            )));
        }
        let target: Arc<[String]> = match images.first() {
            Some(p) => p.vars.clone(),
            None => self.vars.clone(),
        };
        for img in images {
            if img.vars != target {
                return Err(Error::VarMismatch {
                    left: target.to_vec(),
                    right: img.vars.to_vec(),
                });
            }
        }
        let one = SparsePoly {
            vars: target.clone(),
            terms: BTreeMap::new(),
        }
        .plus_constant(&Rational::one());
        let mut powers: Vec<Vec<SparsePoly>> = images
            .iter()
            .map(|p| vec![one.clone(), p.clone()])
            .collect();
        let mut out = SparsePoly {
            vars: target,
            terms: BTreeMap::new(),
        };
        for (m, c) in &self.terms {
            let mut t = one.scale(c);
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                while pw.len() <= e as usize {
                    let next = pw.last().unwrap() * &images[i];
                    pw.push(next);
                }
                t = &t * &pw[e as usize];
            }
            out = &out + &t;
        }
        Ok(out)
    }

    fn plus_constant(mut self, c: &Rational) -> SparsePoly {
        let arity = self.arity();
        self.add_term(Monomial::one(arity), c.clone());
        self
    }

    /// Replaces each listed variable `v` by `scale * v + shift`; other
    /// variables are untouched.
    pub fn substitute_affine(&self, map: &[(&str, Rational, Rational)]) -> Result<SparsePoly> {
        for (name, _, _) in map {
            self.var_index(name)?;
        }
        let images = self
            .vars
            .iter()
            .map(|v| {
                let x = SparsePoly::var(&self.vars, v)?;
                Ok(match map.iter().find(|(n, _, _)| n == v) {
                    Some((_, scale, shift)) => x.scale(scale).plus_constant(shift),
                    None => x,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        self.compose(&images)
    }

    /// Appends `new_var` and pads every term up to total degree
    /// `target_degree`.
    pub fn homogenize(&self, new_var: &str, target_degree: u32) -> Result<SparsePoly> {
        if self.vars.iter().any(|v| v == new_var) {
            return Err(Error::Parameter(format!("variable `{new_var}` already present")));
        }
        let actual = self.total_degree().unwrap_or(0);
        if actual > target_degree {
            return Err(Error::DegreeTooLow {
                target: target_degree,
                actual,
            });
        }
        let mut vars = self.vars.to_vec();
        vars.push(new_var.to_string());
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = m.0.clone();
                e.push(target_degree - m.degree());
                (Monomial(e), c.clone())
            })
            .collect();
        Ok(SparsePoly {
            vars: vars.into(),
            terms,
        })
    }

    /// Sets `var = 1` and drops it from the tuple.
    pub fn dehomogenize(&self, var: &str) -> Result<SparsePoly> {
        self.specialize(var, &Rational::one())
    }

    /// Fixes `var` to `value`, giving a polynomial in the remaining variables.
    pub fn specialize(&self, var: &str, value: &Rational) -> Result<SparsePoly> {
        let i = self.var_index(var)?;
        let vars: Vec<String> = self
            .vars
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, v)| v.clone())
            .collect();
        let mut out = SparsePoly::zero(&vars);
        let mut powers = vec![Rational::one()];
        for (m, c) in &self.terms {
            let e = m.0[i] as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let mut rest = m.0.clone();
            rest.remove(i);
            out.add_term(Monomial(rest), c * &powers[e]);
        }
        Ok(out)
    }

    pub fn rename_var(&self, old: &str, new: &str) -> Result<SparsePoly> {
        let i = self.var_index(old)?;
        if self.vars.iter().enumerate().any(|(j, v)| j != i && v == new) {
            return Err(Error::Parameter(format!("variable `{new}` already present")));
        }
        let mut vars = self.vars.to_vec();
        vars[i] = new.to_string();
        Ok(SparsePoly {
            vars: vars.into(),
            terms: self.terms.clone(),
        })
    }

    /// Re-expresses the polynomial over a different variable tuple. Variables
    /// absent from `vars` must not occur in any term.
    pub fn with_vars<S: AsRef<str>>(&self, vars: &[S]) -> Result<SparsePoly> {
        let target = to_vars(vars);
        let mapping = self
            .vars
            .iter()
            .map(|v| target.iter().position(|t| t == v))
            .collect::<Vec<_>>();
        let mut out = SparsePoly {
            vars: target.clone(),
            terms: BTreeMap::new(),
        };
        for (m, c) in &self.terms {
            let mut e: SmallVec<[u32; 4]> = SmallVec::from_elem(0, target.len());
            for (i, &x) in m.0.iter().enumerate() {
                match mapping[i] {
                    Some(j) => e[j] = x,
                    None if x == 0 => {}
                    None => return Err(Error::UnknownVariable(self.vars[i].clone())),
                }
            }
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Coefficients with respect to `var` (index = power of `var`), each a
    /// polynomial in the remaining variables.
    pub fn coefficients_in(&self, var: &str) -> Result<Vec<SparsePoly>> {
        let i = self.var_index(var)?;
        let rest: Vec<String> = self
            .vars
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, v)| v.clone())
            .collect();
        let deg = self.degree_in(var)?.map_or(0, |d| d as usize + 1);
        let mut out = vec![SparsePoly::zero(&rest); deg];
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let k = e.remove(i) as usize;
            out[k].add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Keeps only the terms selected by `keep`.
    pub fn filter_terms(&self, mut keep: impl FnMut(&[u32]) -> bool) -> SparsePoly {
        self.with_same_vars(
            self.terms
                .iter()
                .filter(|(m, _)| keep(&m.0))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        )
    }

    /// Exact quotient `self / d`; fails with [`Error::InexactDivision`] when
    /// `d` does not divide `self`.
    pub fn exact_div(&self, d: &SparsePoly) -> Result<SparsePoly> {
        self.check_same_vars(d)?;
        let (dm, dc) = d.leading_term().ok_or(Error::ZeroPolynomial)?;
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut rem = self.terms.clone();
        let mut quot = BTreeMap::new();
        while let Some((lm, lc)) = rem.iter().next_back() {
            let qm = lm.checked_div(&dm).ok_or(Error::InexactDivision)?;
            let qc = lc / &dc;
            for (m, c) in &d.terms {
                let key = m.mul(&qm);
                let delta = c * &qc;
                let entry = rem.entry(key).or_insert_with(Rational::zero);
                *entry -= delta;
                if entry.is_zero() {
                    let k = m.mul(&qm);
                    rem.remove(&k);
                }
            }
            quot.insert(qm, qc);
        }
        Ok(self.with_same_vars(quot))
    }

    /// Largest `e` such that `d^e` divides `self`, and the cofactor.
    pub fn remove_factor(&self, d: &SparsePoly) -> Result<(u32, SparsePoly)> {
        if d.is_constant() {
            return Err(Error::Parameter("cannot strip a constant factor".into()));
        }
        let mut cur = self.clone();
        let mut e = 0;
        if cur.is_zero() {
            return Ok((0, cur));
        }
        loop {
            match cur.exact_div(d) {
                Ok(q) => {
                    cur = q;
                    e += 1;
                }
                Err(Error::InexactDivision) => return Ok((e, cur)),
                Err(err) => return Err(err),
            }
        }
    }

    /// Dense univariate view; the polynomial must have exactly one variable.
    pub fn to_univariate(&self) -> Result<UniPoly> {
        if self.arity() != 1 {
            return Err(Error::NotUnivariate(self.vars.to_vec()));
        }
        let deg = self.total_degree().map_or(0, |d| d as usize + 1);
        let mut coeffs = vec![Rational::zero(); deg];
        for (m, c) in &self.terms {
            coeffs[m.0[0] as usize] = c.clone();
        }
        Ok(UniPoly::new(coeffs))
    }

    pub fn from_univariate(p: &UniPoly, var: &str) -> SparsePoly {
        let mut out = SparsePoly::zero(&[var]);
        for (i, c) in p.coeffs().iter().enumerate() {
            out.add_term(Monomial::new(&[i as u32]), c.clone());
        }
        out
    }

    /// Multiplies through by the least common multiple of the denominators
    /// and divides by the content, giving a primitive integer polynomial with
    /// positive leading coefficient.
    pub fn primitive_part(&self) -> SparsePoly {
        use num_integer::Integer;
        let Some((_, lc)) = self.leading_term() else {
            return self.clone();
        };
        let mut lcm = num_bigint::BigInt::one();
        for c in self.terms.values() {
            lcm = lcm.lcm(c.denom());
        }
        let mut factor = Rational::from_integer(lcm);
        let mut g = num_bigint::BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(&(c * &factor).to_integer());
        }
        factor /= Rational::from_integer(g);
        if lc.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> = m
                .0
                .iter()
                .zip(self.vars.iter())
                .filter(|(e, _)| **e > 0)
                .map(|(e, v)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
                .collect();
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{abs}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparsePoly[{}]({self})", self.vars.join(","))
    }
}

// Operator forms panic on mismatched variable tuples; use `poly_arith` for
// the checked version.
impl Add for &SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        poly_arith(self, rhs, ArithOp::Add).expect("mismatched variables in +")
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        poly_arith(self, rhs, ArithOp::Sub).expect("mismatched variables in -")
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        poly_arith(self, rhs, ArithOp::Mul).expect("mismatched variables in *")
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        self.scale(&-Rational::one())
    }
}
