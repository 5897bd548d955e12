//! Exact formal sums over a graded basis and over ordered pairs of basis
//! objects, with the bilinear machinery shared by every algebra in the crate.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Coefficient = BigInt;

/// A graded basis object. `Ord` must sort by grade first so that the stored
/// order of terms is the canonical text order.
pub trait Basis: Clone + Ord + Hash + fmt::Display {
    fn grade(&self) -> usize;
}

/// Finite formal sum with nonzero integer coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModuleElement<B: Basis> {
    terms: BTreeMap<B, Coefficient>,
}

impl<B: Basis> Default for ModuleElement<B> {
    fn default() -> Self {
        ModuleElement {
            terms: BTreeMap::new(),
        }
    }
}

impl<B: Basis> ModuleElement<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(b: B) -> Self {
        Self::term(b, BigInt::one())
    }

    pub fn term(b: B, c: impl Into<Coefficient>) -> Self {
        let mut e = Self::zero();
        e.add_term(b, c);
        e
    }

    pub fn add_term(&mut self, b: B, c: impl Into<Coefficient>) {
        let c = c.into();
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(b);
        match entry {
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

    pub fn coefficient(&self, b: &B) -> Coefficient {
        self.terms.get(b).cloned().unwrap_or_default()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&B, &Coefficient)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &B> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of the coefficients.
    pub fn total(&self) -> Coefficient {
        self.terms.values().sum()
    }

    /// The common grade of all terms, if the element is nonzero and homogeneous.
    pub fn grade(&self) -> Option<usize> {
        let mut grades = self.terms.keys().map(Basis::grade);
        let first = grades.next()?;
        grades.all(|g| g == first).then_some(first)
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        let mut out = Self::zero();
        for (b, k) in &self.terms {
            out.add_term(b.clone(), k * c);
        }
        out
    }

    /// Extends `f` linearly.
    pub fn map_linear<C: Basis>(&self, f: impl Fn(&B) -> ModuleElement<C>) -> ModuleElement<C> {
        let mut out = ModuleElement::zero();
        for (b, c) in &self.terms {
            out.add_scaled(&f(b), c);
        }
        out
    }

    /// Extends a basis-to-basis map linearly.
    pub fn map_basis<C: Basis>(&self, f: impl Fn(&B) -> C) -> ModuleElement<C> {
        let mut out = ModuleElement::zero();
        for (b, c) in &self.terms {
            out.add_term(f(b), c.clone());
        }
        out
    }

    /// Extends a basis-to-tensor map linearly (coproduct-shaped maps).
    pub fn map_to_tensor<C: Basis>(&self, f: impl Fn(&B) -> TensorElement<C>) -> TensorElement<C> {
        let mut out = TensorElement::zero();
        for (b, c) in &self.terms {
            out.add_scaled(&f(b), c);
        }
        out
    }

    /// Keeps only the terms whose basis object satisfies `keep`.
    pub fn filter(&self, keep: impl Fn(&B) -> bool) -> Self {
        ModuleElement {
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| keep(b))
                .map(|(b, c)| (b.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Coefficient) {
        for (b, k) in &other.terms {
            self.add_term(b.clone(), k * c);
        }
    }
}

/// Extends a basis-level operation bilinearly.
pub fn bilinear<B: Basis>(
    a: &ModuleElement<B>,
    b: &ModuleElement<B>,
    f: impl Fn(&B, &B) -> ModuleElement<B>,
) -> ModuleElement<B> {
    let mut out = ModuleElement::zero();
    for (x, cx) in a.terms() {
        for (y, cy) in b.terms() {
            out.add_scaled(&f(x, y), &(cx * cy));
        }
    }
    out
}

/// Graded dual pairing making the basis orthonormal.
pub fn pairing<B: Basis>(a: &ModuleElement<B>, b: &ModuleElement<B>) -> Coefficient {
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    small
        .terms()
        .filter_map(|(x, c)| large.terms.get(x).map(|d| c * d))
        .sum()
}

impl<B: Basis> FromIterator<B> for ModuleElement<B> {
    /// Sums the basis objects with multiplicity.
    fn from_iter<I: IntoIterator<Item = B>>(iter: I) -> Self {
        let mut out = Self::zero();
        for b in iter {
            out.add_term(b, 1);
        }
        out
    }
}

impl<B: Basis> AddAssign<&ModuleElement<B>> for ModuleElement<B> {
    fn add_assign(&mut self, rhs: &ModuleElement<B>) {
        self.add_scaled(rhs, &BigInt::one());
    }
}

impl<B: Basis> Add for ModuleElement<B> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        self += &rhs;
        self
    }
}

impl<B: Basis> Neg for ModuleElement<B> {
    type Output = Self;

    fn neg(self) -> Self {
        self.scale(&BigInt::from(-1))
    }
}

impl<B: Basis> Sub for ModuleElement<B> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

/// Finite formal sum over ordered pairs `a ⊗ b`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorElement<B: Basis> {
    terms: BTreeMap<(B, B), Coefficient>,
}

impl<B: Basis> Default for TensorElement<B> {
    fn default() -> Self {
        TensorElement {
            terms: BTreeMap::new(),
        }
    }
}

impl<B: Basis> TensorElement<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(a: B, b: B) -> Self {
        let mut t = Self::zero();
        t.add_term(a, b, 1);
        t
    }

    /// Expands `a ⊗ b` for formal sums `a`, `b`.
    pub fn tensor(a: &ModuleElement<B>, b: &ModuleElement<B>) -> Self {
        let mut t = Self::zero();
        for (x, cx) in a.terms() {
            for (y, cy) in b.terms() {
                t.add_term(x.clone(), y.clone(), cx * cy);
            }
        }
        t
    }

    pub fn add_term(&mut self, a: B, b: B, c: impl Into<Coefficient>) {
        let c = c.into();
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((a, b)).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Coefficient) {
        for ((a, b), k) in &other.terms {
            self.add_term(a.clone(), b.clone(), k * c);
        }
    }

    pub fn coefficient(&self, a: &B, b: &B) -> Coefficient {
        self.terms
            .get(&(a.clone(), b.clone()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(B, B), &Coefficient)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total(&self) -> Coefficient {
        self.terms.values().sum()
    }

    /// Applies `f ⊗ g`, each extended linearly.
    pub fn map_each<C: Basis>(
        &self,
        f: impl Fn(&B) -> ModuleElement<C>,
        g: impl Fn(&B) -> ModuleElement<C>,
    ) -> TensorElement<C> {
        let mut out = TensorElement::zero();
        for ((a, b), c) in &self.terms {
            out.add_scaled(&TensorElement::tensor(&f(a), &g(b)), c);
        }
        out
    }

    /// Applies a basis-to-basis map on both factors.
    pub fn map_basis<C: Basis>(&self, f: impl Fn(&B) -> C) -> TensorElement<C> {
        let mut out = TensorElement::zero();
        for ((a, b), c) in &self.terms {
            out.add_term(f(a), f(b), c.clone());
        }
        out
    }

    /// Keeps only the terms whose factors satisfy `keep`.
    pub fn filter(&self, keep: impl Fn(&B, &B) -> bool) -> Self {
        TensorElement {
            terms: self
                .terms
                .iter()
                .filter(|((a, b), _)| keep(a, b))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Componentwise product `(a ⊗ b)(c ⊗ d) = ac ⊗ bd` for a given product.
    pub fn multiply(&self, other: &Self, product: impl Fn(&B, &B) -> ModuleElement<B>) -> Self {
        let mut out = Self::zero();
        for ((a, b), c1) in &self.terms {
            for ((c, d), c2) in &other.terms {
                let left = product(a, c);
                let right = product(b, d);
                out.add_scaled(&TensorElement::tensor(&left, &right), &(c1 * c2));
            }
        }
        out
    }

    /// `(Δ ⊗ id)` applied to each term, returned as a map over triples.
    pub fn expand_left(
        &self,
        coproduct: impl Fn(&B) -> TensorElement<B>,
    ) -> BTreeMap<(B, B, B), Coefficient> {
        let mut out: BTreeMap<(B, B, B), Coefficient> = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            for ((x, y), k) in coproduct(a).terms() {
                *out.entry((x.clone(), y.clone(), b.clone())).or_default() += c * k;
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// `(id ⊗ Δ)` applied to each term, returned as a map over triples.
    pub fn expand_right(
        &self,
        coproduct: impl Fn(&B) -> TensorElement<B>,
    ) -> BTreeMap<(B, B, B), Coefficient> {
        let mut out: BTreeMap<(B, B, B), Coefficient> = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            for ((x, y), k) in coproduct(b).terms() {
                *out.entry((a.clone(), x.clone(), y.clone())).or_default() += c * k;
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }
}

pub fn tensor_pairing<B: Basis>(a: &TensorElement<B>, b: &TensorElement<B>) -> Coefficient {
    a.terms()
        .filter_map(|(k, c)| b.terms.get(k).map(|d| c * d))
        .sum()
}

impl<B: Basis> AddAssign<&TensorElement<B>> for TensorElement<B> {
    fn add_assign(&mut self, rhs: &TensorElement<B>) {
        self.add_scaled(rhs, &BigInt::one());
    }
}

impl<B: Basis> Add for TensorElement<B> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        self += &rhs;
        self
    }
}

impl<B: Basis> FromIterator<(B, B)> for TensorElement<B> {
    fn from_iter<I: IntoIterator<Item = (B, B)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (a, b) in iter {
            out.add_term(a, b, 1);
        }
        out
    }
}

fn write_sum<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (String, &'a Coefficient)>,
) -> fmt::Result {
    let mut first = true;
    for (body, c) in terms {
        let negative = c.is_negative();
        let magnitude = c.abs();
        match (first, negative) {
            (true, false) => {}
            (true, true) => f.write_str("-")?,
            (false, false) => f.write_str(" + ")?,
            (false, true) => f.write_str(" - ")?,
        }
        if !magnitude.is_one() {
            write!(f, "{magnitude}*")?;
        }
        f.write_str(&body)?;
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl<B: Basis> fmt::Display for ModuleElement<B> {
    /// `c*basis + basis + ...`, coefficient 1 elided, zero written `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(f, self.terms.iter().map(|(b, c)| (b.to_string(), c)))
    }
}

impl<B: Basis> fmt::Display for TensorElement<B> {
    /// `c*[a](x)[b] + ...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(
            f,
            self.terms
                .iter()
                .map(|((a, b), c)| (format!("[{a}](x)[{b}]"), c)),
        )
    }
}

/// Splits `t1 + t2 - t3` into signed term bodies.
fn split_sum(s: &str) -> Result<Vec<(Coefficient, &str)>> {
    let s = s.trim();
    if s == "0" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut sign = BigInt::one();
    let mut expect_term = true;
    for token in s.split_whitespace() {
        if expect_term {
            let (sign2, body) = match token.strip_prefix('-') {
                Some(rest) if !rest.is_empty() => (-sign.clone(), rest),
                _ => (sign.clone(), token),
            };
            let (coef, body) = match body.split_once('*') {
                Some((c, b)) => (
                    c.parse::<BigInt>()
                        .map_err(|e| Error::Parse(format!("coefficient {c:?}: {e}")))?,
                    b,
                ),
                None => (BigInt::one(), body),
            };
            out.push((sign2 * coef, body));
        } else {
            sign = match token {
                "+" => BigInt::one(),
                "-" => BigInt::from(-1),
                _ => return Err(Error::Parse(format!("expected + or -, found {token:?}"))),
            };
        }
        expect_term = !expect_term;
    }
    if expect_term {
        return Err(Error::Parse(format!("dangling operator in {s:?}")));
    }
    Ok(out)
}

impl<B: Basis + FromStr<Err = Error>> FromStr for ModuleElement<B> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut out = Self::zero();
        for (c, body) in split_sum(s)? {
            out.add_term(body.parse::<B>()?, c);
        }
        Ok(out)
    }
}

impl<B: Basis + FromStr<Err = Error>> FromStr for TensorElement<B> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut out = Self::zero();
        for (c, body) in split_sum(s)? {
            let inner = body
                .strip_prefix('[')
                .and_then(|b| b.strip_suffix(']'))
                .ok_or_else(|| Error::Parse(format!("tensor term {body:?}")))?;
            let (a, b) = inner
                .split_once("](x)[")
                .ok_or_else(|| Error::Parse(format!("tensor term {body:?}")))?;
            out.add_term(a.parse::<B>()?, b.parse::<B>()?, c);
        }
        Ok(out)
    }
}
