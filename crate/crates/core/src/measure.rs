//! Sample spaces, random variables with tail declarations, generalized
//! (regular + singular-tail) measures, and elementary integration/truncation.
//!
//! A space is a finite ordered atom list, optionally embedded in the integers
//! so it can stand in for the `|omega| <= N` window of a countable space.
//! Loss profiles may declare how their generating function behaves beyond the
//! window: a finite limit per side, or asymptotically linear divergence with a
//! signed slope (value at embedding distance `k` is about `c * k`). Measures
//! carry nonnegative atom weights plus optional singular tail mass acting on
//! those declared limits, the finite surrogate for purely finitely additive
//! dual elements such as the Banach-Mazur limit.

use crate::ext::ExtReal;
use crate::{Error, Result};
use std::collections::HashMap;
use std::sync::Arc;

/// Finite atom list with an optional integer embedding.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleSpace {
    atoms: Vec<String>,
    /// Per-atom integer coordinate; `None` entries are unembedded atoms
    /// (e.g. discretization nodes of a continuous component).
    embedding: Option<Vec<Option<i64>>>,
    /// When set, the space is the `|embedding| <= N` window of a countable space.
    truncation_index: Option<u64>,
    /// embedding value -> atom index
    index_of: HashMap<i64, usize>,
}

impl SampleSpace {
    pub fn new(
        atoms: Vec<String>,
        embedding: Option<Vec<Option<i64>>>,
        truncation_index: Option<u64>,
    ) -> Result<Arc<Self>> {
        let mut seen = std::collections::HashSet::new();
        for a in &atoms {
            if !seen.insert(a.clone()) {
                return Err(Error::Invalid(format!("duplicate atom label `{a}`")));
            }
        }
        let mut index_of = HashMap::new();
        if let Some(emb) = &embedding {
            if emb.len() != atoms.len() {
                return Err(Error::LengthMismatch);
            }
            for (i, e) in emb.iter().enumerate() {
                if let Some(v) = e {
                    if index_of.insert(*v, i).is_some() {
                        return Err(Error::Invalid(format!("embedding value {v} repeated")));
                    }
                }
            }
            if index_of.is_empty() {
                return Err(Error::Invalid("embedding set but no atom embedded".into()));
            }
        }
        if let Some(n) = truncation_index {
            let emb = embedding
                .as_ref()
                .ok_or_else(|| Error::Invalid("truncation_index requires an embedding".into()))?;
            for e in emb.iter().flatten() {
                if e.unsigned_abs() > n {
                    return Err(Error::Invalid(format!(
                        "embedding value {e} outside truncation window {n}"
                    )));
                }
            }
        }
        Ok(Arc::new(SampleSpace {
            atoms,
            embedding,
            truncation_index,
            index_of,
        }))
    }

    /// Plain finite space without embedding.
    pub fn labeled<S: Into<String>>(labels: Vec<S>) -> Result<Arc<Self>> {
        Self::new(labels.into_iter().map(Into::into).collect(), None, None)
    }

    /// Window `{1, ..., n}` of the natural numbers.
    pub fn naturals(n: u64) -> Arc<Self> {
        let atoms: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let emb = (1..=n as i64).map(Some).collect();
        Self::new(atoms, Some(emb), Some(n)).expect("valid naturals window")
    }

    /// Window `{-n, ..., n}` of the integers.
    pub fn integers(n: u64) -> Arc<Self> {
        let atoms: Vec<String> = (-(n as i64)..=n as i64).map(|i| i.to_string()).collect();
        let emb = (-(n as i64)..=n as i64).map(Some).collect();
        Self::new(atoms, Some(emb), Some(n)).expect("valid integers window")
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn atom_label(&self, i: usize) -> &str {
        &self.atoms[i]
    }

    pub fn embedding(&self) -> Option<&[Option<i64>]> {
        self.embedding.as_deref()
    }

    pub fn is_embedded(&self) -> bool {
        self.embedding.is_some()
    }

    /// A space is two-sided when some atom has a negative coordinate.
    pub fn is_two_sided(&self) -> bool {
        self.index_of.keys().any(|&v| v < 0)
    }

    pub fn truncation_index(&self) -> Option<u64> {
        self.truncation_index
    }

    pub fn index_at_embedding(&self, v: i64) -> Option<usize> {
        self.index_of.get(&v).copied()
    }
}

/// Behaviour of a loss profile beyond the represented window, per side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TailValue {
    /// The generating function converges to this value.
    Finite(f64),
    /// Asymptotically linear divergence: the value at embedding distance `k`
    /// on this side behaves like `c * k`, `c != 0`. The sign of `c` is the
    /// divergence direction.
    Divergent(f64),
}

impl TailValue {
    fn validate(self) -> Result<()> {
        match self {
            TailValue::Finite(v) if v.is_finite() => Ok(()),
            TailValue::Divergent(c) if c.is_finite() && c != 0.0 => Ok(()),
            _ => Err(Error::Invalid("tail value must be finite, slope nonzero".into())),
        }
    }

    /// Clamp of the limit under pointwise `(-n) ∨ x ∧ m`.
    fn clamp(self, n: f64, m: f64) -> TailValue {
        match self {
            TailValue::Finite(l) => TailValue::Finite(l.max(-n).min(m)),
            TailValue::Divergent(c) if c > 0.0 => TailValue::Finite(m),
            TailValue::Divergent(_) => TailValue::Finite(-n),
        }
    }

    fn scaled(self, c: f64) -> TailValue {
        match self {
            TailValue::Finite(l) => TailValue::Finite(c * l),
            TailValue::Divergent(s) => {
                if c == 0.0 {
                    TailValue::Finite(0.0)
                } else {
                    TailValue::Divergent(c * s)
                }
            }
        }
    }

    fn abs(self) -> TailValue {
        match self {
            TailValue::Finite(l) => TailValue::Finite(l.abs()),
            TailValue::Divergent(c) => TailValue::Divergent(c.abs()),
        }
    }

    fn add(self, other: TailValue) -> TailValue {
        match (self, other) {
            (TailValue::Finite(a), TailValue::Finite(b)) => TailValue::Finite(a + b),
            (TailValue::Divergent(c), TailValue::Finite(_))
            | (TailValue::Finite(_), TailValue::Divergent(c)) => TailValue::Divergent(c),
            (TailValue::Divergent(a), TailValue::Divergent(b)) => {
                let s = a + b;
                if s == 0.0 {
                    // exact cancellation of slopes: bounded remainder, limit unknown;
                    // the pointwise-cancelling case X + (-X) is the only one our
                    // operations produce, and there the remainder is 0.
                    TailValue::Finite(0.0)
                } else {
                    TailValue::Divergent(s)
                }
            }
        }
    }

    /// Tail of `x * 1_{x >= t}` given this side's limit.
    fn indicator_above(self, t: f64) -> TailValue {
        match self {
            TailValue::Finite(l) if l >= t => TailValue::Finite(l),
            TailValue::Finite(_) => TailValue::Finite(0.0),
            TailValue::Divergent(c) if c > 0.0 => TailValue::Divergent(c),
            TailValue::Divergent(_) => TailValue::Finite(0.0),
        }
    }

    /// Tail of `x * 1_{|x| >= t}`.
    fn indicator_abs_above(self, t: f64) -> TailValue {
        match self {
            TailValue::Finite(l) if l.abs() >= t => TailValue::Finite(l),
            TailValue::Finite(_) => TailValue::Finite(0.0),
            TailValue::Divergent(c) => TailValue::Divergent(c),
        }
    }

    /// The `+inf`/`-inf`/finite limit as an extended real.
    pub fn limit(self) -> ExtReal {
        match self {
            TailValue::Finite(l) => ExtReal::Finite(l),
            TailValue::Divergent(c) if c > 0.0 => ExtReal::PosInf,
            TailValue::Divergent(_) => ExtReal::NegInf,
        }
    }
}

/// Declared tail behaviour of a random variable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Tail {
    None,
    /// One-sided spaces: behaviour toward +infinity.
    Limit(TailValue),
    /// Two-sided spaces: behaviour toward +infinity and -infinity.
    Limit2 { pos: TailValue, neg: TailValue },
}

impl Tail {
    pub fn pos(&self) -> Option<TailValue> {
        match self {
            Tail::None => None,
            Tail::Limit(v) => Some(*v),
            Tail::Limit2 { pos, .. } => Some(*pos),
        }
    }

    pub fn neg(&self) -> Option<TailValue> {
        match self {
            Tail::Limit2 { neg, .. } => Some(*neg),
            _ => None,
        }
    }

    fn map(self, f: impl Fn(TailValue) -> TailValue) -> Tail {
        match self {
            Tail::None => Tail::None,
            Tail::Limit(v) => Tail::Limit(f(v)),
            Tail::Limit2 { pos, neg } => Tail::Limit2 {
                pos: f(pos),
                neg: f(neg),
            },
        }
    }
}

/// Loss profile: one real value per atom plus declared tail behaviour.
#[derive(Debug, Clone, PartialEq)]
pub struct RandomVariable {
    space: Arc<SampleSpace>,
    values: Vec<f64>,
    tail: Tail,
}

impl RandomVariable {
    pub fn new(space: Arc<SampleSpace>, values: Vec<f64>, tail: Tail) -> Result<Self> {
        if values.len() != space.len() {
            return Err(Error::LengthMismatch);
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::Invalid("atom values must be finite".into()));
        }
        match tail {
            Tail::None => {}
            Tail::Limit(v) => {
                v.validate()?;
                if !space.is_embedded() {
                    return Err(Error::Invalid("tail declared on unembedded space".into()));
                }
                if space.is_two_sided() {
                    return Err(Error::Invalid(
                        "one-sided tail on a two-sided space; use Limit2".into(),
                    ));
                }
            }
            Tail::Limit2 { pos, neg } => {
                pos.validate()?;
                neg.validate()?;
                if !space.is_two_sided() {
                    return Err(Error::Invalid("Limit2 requires a two-sided space".into()));
                }
            }
        }
        Ok(RandomVariable { space, values, tail })
    }

    pub fn constant(space: &Arc<SampleSpace>, c: f64) -> Self {
        let tail = if !space.is_embedded() {
            Tail::None
        } else if space.is_two_sided() {
            Tail::Limit2 {
                pos: TailValue::Finite(c),
                neg: TailValue::Finite(c),
            }
        } else {
            Tail::Limit(TailValue::Finite(c))
        };
        RandomVariable {
            space: space.clone(),
            values: vec![c; space.len()],
            tail,
        }
    }

    pub fn zero(space: &Arc<SampleSpace>) -> Self {
        Self::constant(space, 0.0)
    }

    /// Indicator of a single atom. Tail is the zero limit on embedded spaces.
    pub fn indicator(space: &Arc<SampleSpace>, atom: usize) -> Self {
        let mut x = Self::constant(space, 0.0);
        x.values[atom] = 1.0;
        x
    }

    /// The identity profile `omega -> omega` of an embedded window
    /// (0 on unembedded atoms), with divergent slope-1 tails declared.
    pub fn identity(space: &Arc<SampleSpace>) -> Result<Self> {
        let emb = space
            .embedding()
            .ok_or_else(|| Error::Invalid("identity profile needs an embedding".into()))?;
        let values = emb.iter().map(|e| e.map_or(0.0, |v| v as f64)).collect();
        let tail = if space.is_two_sided() {
            Tail::Limit2 {
                pos: TailValue::Divergent(1.0),
                neg: TailValue::Divergent(-1.0),
            }
        } else {
            Tail::Limit(TailValue::Divergent(1.0))
        };
        RandomVariable::new(space.clone(), values, tail)
    }

    pub fn space(&self) -> &Arc<SampleSpace> {
        &self.space
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn tail(&self) -> Tail {
        self.tail
    }

    pub fn value_at_embedding(&self, v: i64) -> Option<f64> {
        self.space.index_at_embedding(v).map(|i| self.values[i])
    }

    pub fn sup_norm(&self) -> f64 {
        let window = self
            .values
            .iter()
            .fold(0.0_f64, |acc, v| acc.max(v.abs()));
        match self.tail {
            Tail::None => window,
            _ => {
                let mut m = window;
                for t in [self.tail.pos(), self.tail.neg()].into_iter().flatten() {
                    match t {
                        TailValue::Finite(l) => m = m.max(l.abs()),
                        TailValue::Divergent(_) => m = f64::INFINITY,
                    }
                }
                m
            }
        }
    }

    pub fn is_bounded(&self) -> bool {
        self.sup_norm().is_finite()
    }

    fn same_space(&self, other: &RandomVariable) -> Result<()> {
        if Arc::ptr_eq(&self.space, &other.space) || self.space == other.space {
            Ok(())
        } else {
            Err(Error::SpaceMismatch)
        }
    }

    fn map_with_tail(&self, f: impl Fn(f64) -> f64, tail: Tail) -> RandomVariable {
        RandomVariable {
            space: self.space.clone(),
            values: self.values.iter().map(|v| f(*v)).collect(),
            tail,
        }
    }

    pub fn abs(&self) -> RandomVariable {
        self.map_with_tail(f64::abs, self.tail.map(TailValue::abs))
    }

    pub fn scaled(&self, c: f64) -> RandomVariable {
        self.map_with_tail(|v| c * v, self.tail.map(|t| t.scaled(c)))
    }

    pub fn pos_part(&self) -> RandomVariable {
        self.map_with_tail(
            |v| v.max(0.0),
            self.tail.map(|t| t.clamp(0.0, f64::INFINITY)),
        )
    }

    pub fn neg_part(&self) -> RandomVariable {
        self.scaled(-1.0).pos_part()
    }

    pub fn add(&self, other: &RandomVariable) -> Result<RandomVariable> {
        self.same_space(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a + b)
            .collect();
        let tail = match (self.tail, other.tail) {
            (Tail::None, _) | (_, Tail::None) => Tail::None,
            (Tail::Limit(a), Tail::Limit(b)) => Tail::Limit(a.add(b)),
            (Tail::Limit2 { pos: p1, neg: n1 }, Tail::Limit2 { pos: p2, neg: n2 }) => {
                Tail::Limit2 {
                    pos: p1.add(p2),
                    neg: n1.add(n2),
                }
            }
            _ => Tail::None,
        };
        Ok(RandomVariable {
            space: self.space.clone(),
            values,
            tail,
        })
    }

    pub fn add_scalar(&self, c: f64) -> RandomVariable {
        self.map_with_tail(|v| v + c, self.tail.map(|t| t.add(TailValue::Finite(c))))
    }

    /// `X * 1_{X >= t}` with tail transform.
    pub fn indicator_above(&self, t: f64) -> RandomVariable {
        self.map_with_tail(
            |v| if v >= t { v } else { 0.0 },
            self.tail.map(|tv| tv.indicator_above(t)),
        )
    }

    /// `X * 1_{|X| >= t}` with tail transform.
    pub fn indicator_abs_above(&self, t: f64) -> RandomVariable {
        self.map_with_tail(
            |v| if v.abs() >= t { v } else { 0.0 },
            self.tail.map(|tv| tv.indicator_abs_above(t)),
        )
    }
}

/// Two-sided truncation bounds: pointwise `(-n) ∨ X ∧ m`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Truncation {
    pub lower: f64,
    pub upper: f64,
}

impl Truncation {
    pub fn new(lower: f64, upper: f64) -> Result<Self> {
        if lower < 0.0 || upper < 0.0 || lower.is_nan() || upper.is_nan() {
            return Err(Error::Invalid("truncation bounds must be >= 0".into()));
        }
        Ok(Truncation { lower, upper })
    }

    /// Lower truncation only: `(-n) ∨ X`.
    pub fn below(n: f64) -> Self {
        Truncation {
            lower: n,
            upper: f64::INFINITY,
        }
    }

    /// Upper truncation only: `X ∧ m`.
    pub fn above(m: f64) -> Self {
        Truncation {
            lower: f64::INFINITY,
            upper: m,
        }
    }
}

/// Pointwise `(-n) ∨ X ∧ m`; the declared tail is clamped the same way,
/// divergent sides collapsing onto the active bound.
pub fn truncate(x: &RandomVariable, t: Truncation) -> RandomVariable {
    let (n, m) = (t.lower, t.upper);
    x.map_with_tail(
        |v| v.max(-n).min(m),
        x.tail.map(|tv| tv.clamp(n, m)),
    )
}

/// Nonnegative atom weights plus optional singular tail mass per side.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneralizedMeasure {
    space: Arc<SampleSpace>,
    weights: Vec<f64>,
    /// Indices of atoms with strictly positive weight.
    support: Vec<usize>,
    /// Singular mass acting on the declared +infinity-side limit.
    tail_mass_pos: f64,
    /// Singular mass acting on the declared -infinity-side limit (two-sided spaces).
    tail_mass_neg: f64,
    tag: String,
}

impl GeneralizedMeasure {
    pub fn new(
        space: Arc<SampleSpace>,
        weights: Vec<f64>,
        tail_mass_pos: f64,
        tail_mass_neg: f64,
        tag: impl Into<String>,
    ) -> Result<Self> {
        if weights.len() != space.len() {
            return Err(Error::LengthMismatch);
        }
        if weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
            return Err(Error::Invalid("weights must be finite and >= 0".into()));
        }
        if !(tail_mass_pos >= 0.0) || !(tail_mass_neg >= 0.0) {
            return Err(Error::Invalid("tail masses must be >= 0".into()));
        }
        if (tail_mass_pos > 0.0 || tail_mass_neg > 0.0) && !space.is_embedded() {
            return Err(Error::Invalid("tail mass on unembedded space".into()));
        }
        if tail_mass_neg > 0.0 && !space.is_two_sided() {
            return Err(Error::Invalid("negative-side tail mass on one-sided space".into()));
        }
        let support = weights
            .iter()
            .enumerate()
            .filter(|(_, w)| **w > 0.0)
            .map(|(i, _)| i)
            .collect();
        Ok(GeneralizedMeasure {
            space,
            weights,
            support,
            tail_mass_pos,
            tail_mass_neg,
            tag: tag.into(),
        })
    }

    pub fn from_weights(
        space: &Arc<SampleSpace>,
        weights: Vec<f64>,
        tag: impl Into<String>,
    ) -> Result<Self> {
        Self::new(space.clone(), weights, 0.0, 0.0, tag)
    }

    /// Point mass at one atom.
    pub fn dirac(space: &Arc<SampleSpace>, atom: usize, tag: impl Into<String>) -> Self {
        let mut w = vec![0.0; space.len()];
        w[atom] = 1.0;
        Self::new(space.clone(), w, 0.0, 0.0, tag).expect("valid dirac")
    }

    pub fn space(&self) -> &Arc<SampleSpace> {
        &self.space
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn tail_mass(&self) -> (f64, f64) {
        (self.tail_mass_pos, self.tail_mass_neg)
    }

    pub fn has_tail_mass(&self) -> bool {
        self.tail_mass_pos > 0.0 || self.tail_mass_neg > 0.0
    }

    pub fn tag(&self) -> &str {
        &self.tag
    }

    pub fn with_tag(mut self, tag: impl Into<String>) -> Self {
        self.tag = tag.into();
        self
    }

    /// Total mass: atom weights plus tail masses.
    pub fn mass(&self) -> f64 {
        let w: f64 = self.support.iter().map(|&i| self.weights[i]).sum();
        w + self.tail_mass_pos + self.tail_mass_neg
    }

    pub fn scaled(&self, c: f64) -> Result<GeneralizedMeasure> {
        if c < 0.0 {
            return Err(Error::NegativeCoefficient);
        }
        GeneralizedMeasure::new(
            self.space.clone(),
            self.weights.iter().map(|w| c * w).collect(),
            c * self.tail_mass_pos,
            c * self.tail_mass_neg,
            self.tag.clone(),
        )
    }

    pub fn normalized(&self) -> Result<GeneralizedMeasure> {
        let m = self.mass();
        if m <= 0.0 {
            return Err(Error::Invalid("cannot normalize the zero measure".into()));
        }
        self.scaled(1.0 / m)
    }

    pub fn is_probability(&self, tol: f64) -> bool {
        (self.mass() - 1.0).abs() <= tol
    }

    fn same_space(&self, other: &GeneralizedMeasure) -> Result<()> {
        if Arc::ptr_eq(&self.space, &other.space) || self.space == other.space {
            Ok(())
        } else {
            Err(Error::SpaceMismatch)
        }
    }
}

/// `∫ X dmu`: atom-weight sum plus tail mass acting on declared limits.
/// Divergent tails with matching positive mass yield tagged infinities.
pub fn integrate(mu: &GeneralizedMeasure, x: &RandomVariable) -> Result<ExtReal> {
    if !(Arc::ptr_eq(&mu.space, &x.space) || mu.space == x.space) {
        return Err(Error::SpaceMismatch);
    }
    let mut acc = 0.0;
    for &i in &mu.support {
        acc += mu.weights[i] * x.values[i];
    }
    let mut total = ExtReal::Finite(acc);
    if mu.tail_mass_pos > 0.0 {
        let tv = x.tail.pos().ok_or(Error::TailUndefined)?;
        total = total
            .checked_add(tv.limit().scale(mu.tail_mass_pos))
            .ok_or(Error::IndeterminateIntegral)?;
    }
    if mu.tail_mass_neg > 0.0 {
        let tv = x.tail.neg().ok_or(Error::TailUndefined)?;
        total = total
            .checked_add(tv.limit().scale(mu.tail_mass_neg))
            .ok_or(Error::IndeterminateIntegral)?;
    }
    Ok(total)
}

/// Absolute-continuity and equivalence flags between two measures, computed
/// from supports; tail mass counts as a distinguished pseudo-atom per side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Relations {
    /// a ≪ b
    pub a_ll_b: bool,
    /// b ≪ a
    pub b_ll_a: bool,
    /// a ≈ b
    pub equivalent: bool,
}

pub fn measure_relations(a: &GeneralizedMeasure, b: &GeneralizedMeasure) -> Result<Relations> {
    a.same_space(b)?;
    let contains = |outer: &GeneralizedMeasure, inner: &GeneralizedMeasure| {
        inner
            .support
            .iter()
            .all(|i| outer.weights[*i] > 0.0)
            && (inner.tail_mass_pos == 0.0 || outer.tail_mass_pos > 0.0)
            && (inner.tail_mass_neg == 0.0 || outer.tail_mass_neg > 0.0)
    };
    let a_ll_b = contains(b, a);
    let b_ll_a = contains(a, b);
    Ok(Relations {
        a_ll_b,
        b_ll_a,
        equivalent: a_ll_b && b_ll_a,
    })
}

/// Conic combination `Σ c_k mu_k` of measures on a common space.
pub fn mix(coeffs: &[f64], measures: &[GeneralizedMeasure]) -> Result<GeneralizedMeasure> {
    if coeffs.len() != measures.len() {
        return Err(Error::LengthMismatch);
    }
    let first = measures.first().ok_or(Error::EmptyFamily)?;
    if coeffs.iter().any(|c| *c < 0.0 || !c.is_finite()) {
        return Err(Error::NegativeCoefficient);
    }
    let mut weights = vec![0.0; first.space.len()];
    let mut tp = 0.0;
    let mut tn = 0.0;
    for (c, m) in coeffs.iter().zip(measures) {
        first.same_space(m)?;
        if *c == 0.0 {
            continue;
        }
        for &i in &m.support {
            weights[i] += c * m.weights[i];
        }
        tp += c * m.tail_mass_pos;
        tn += c * m.tail_mass_neg;
    }
    GeneralizedMeasure::new(first.space.clone(), weights, tp, tn, "mix")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_atoms() -> Arc<SampleSpace> {
        SampleSpace::labeled(vec!["a", "b"]).unwrap()
    }

    #[test]
    fn tail_mass_acts_through_declared_limit() {
        let sp = SampleSpace::naturals(5);
        let nu = GeneralizedMeasure::new(sp.clone(), vec![0.0; 5], 1.0, 0.0, "nu").unwrap();
        let x = RandomVariable::new(
            sp,
            vec![1.0, 2.0, 3.0, 4.0, 5.0],
            Tail::Limit(TailValue::Finite(0.7)),
        )
        .unwrap();
        assert_eq!(integrate(&nu, &x).unwrap(), ExtReal::Finite(0.7));
    }

    #[test]
    fn geometric_weights_indicator() {
        let n = 20;
        let sp = SampleSpace::naturals(n);
        let w: Vec<f64> = (1..=n).map(|k| (2.0_f64).powi(-(k as i32))).collect();
        let zeta = GeneralizedMeasure::from_weights(&sp, w, "zeta").unwrap();
        let x = RandomVariable::indicator(&sp, 0);
        assert_eq!(integrate(&zeta, &x).unwrap(), ExtReal::Finite(0.5));
    }

    #[test]
    fn zero_integrand() {
        let sp = SampleSpace::integers(3);
        let mu = GeneralizedMeasure::new(sp.clone(), vec![1.0; 7], 0.5, 0.5, "mu").unwrap();
        let zero = RandomVariable::zero(&sp);
        assert_eq!(integrate(&mu, &zero).unwrap(), ExtReal::Finite(0.0));
    }

    #[test]
    fn tail_undefined_error() {
        let sp = SampleSpace::naturals(3);
        let nu = GeneralizedMeasure::new(sp.clone(), vec![0.0; 3], 1.0, 0.0, "nu").unwrap();
        let x = RandomVariable::new(sp, vec![1.0, 2.0, 3.0], Tail::None).unwrap();
        assert_eq!(integrate(&nu, &x), Err(Error::TailUndefined));
    }

    #[test]
    fn divergent_tail_gives_infinity() {
        let sp = SampleSpace::integers(4);
        let nu = GeneralizedMeasure::new(sp.clone(), vec![0.0; 9], 1.0, 0.0, "nu").unwrap();
        let x = RandomVariable::identity(&sp).unwrap();
        assert_eq!(integrate(&nu, &x).unwrap(), ExtReal::PosInf);
    }

    #[test]
    fn truncate_clamps_values_and_tails() {
        let sp = SampleSpace::labeled(vec!["a", "b", "c"]).unwrap();
        let x = RandomVariable::new(sp, vec![-5.0, 0.0, 5.0], Tail::None).unwrap();
        let t = truncate(&x, Truncation::new(1.0, 2.0).unwrap());
        assert_eq!(t.values(), &[-1.0, 0.0, 2.0]);

        let spz = SampleSpace::integers(10);
        let id = RandomVariable::identity(&spz).unwrap();
        let t = truncate(&id, Truncation::new(3.0, 7.0).unwrap());
        assert_eq!(
            t.tail(),
            Tail::Limit2 {
                pos: TailValue::Finite(7.0),
                neg: TailValue::Finite(-3.0)
            }
        );
    }

    #[test]
    fn truncate_inactive_on_bounded() {
        let sp = two_atoms();
        let x = RandomVariable::new(sp, vec![0.5, -0.5], Tail::None).unwrap();
        let t = truncate(&x, Truncation::new(1.0, 1.0).unwrap());
        assert_eq!(t.values(), x.values());
    }

    #[test]
    fn relations_support_inclusion() {
        let sp = two_atoms();
        let a = GeneralizedMeasure::from_weights(&sp, vec![1.0, 0.0], "a").unwrap();
        let b = GeneralizedMeasure::from_weights(&sp, vec![1.0, 1.0], "b").unwrap();
        let r = measure_relations(&a, &b).unwrap();
        assert!(r.a_ll_b && !r.b_ll_a && !r.equivalent);
        let rr = measure_relations(&a, &a).unwrap();
        assert!(rr.equivalent);
    }

    #[test]
    fn relations_tail_pseudo_atom() {
        let sp = SampleSpace::naturals(2);
        let a = GeneralizedMeasure::new(sp.clone(), vec![0.0, 1.0], 1.0, 0.0, "a").unwrap();
        let b = GeneralizedMeasure::new(sp, vec![0.0, 1.0], 0.0, 0.0, "b").unwrap();
        let r = measure_relations(&a, &b).unwrap();
        assert!(!r.a_ll_b);
        assert!(r.b_ll_a);
    }

    #[test]
    fn mix_and_normalize() {
        let sp = two_atoms();
        let d1 = GeneralizedMeasure::dirac(&sp, 0, "d1");
        let d2 = GeneralizedMeasure::dirac(&sp, 1, "d2");
        let m = mix(&[0.5, 0.25], &[d1.clone(), d2.clone()]).unwrap();
        let p = m.normalized().unwrap();
        assert!((p.weights()[0] - 2.0 / 3.0).abs() < 1e-15);
        assert!((p.weights()[1] - 1.0 / 3.0).abs() < 1e-15);

        let z = mix(&[0.0, 0.0], &[d1.clone(), d2]).unwrap();
        assert_eq!(z.mass(), 0.0);
        let single = mix(&[1.0], &[d1.clone()]).unwrap();
        assert_eq!(single.weights(), d1.weights());
    }

    #[test]
    fn mix_rejects_negative() {
        let sp = two_atoms();
        let d1 = GeneralizedMeasure::dirac(&sp, 0, "d1");
        assert_eq!(
            mix(&[-0.1], &[d1]).unwrap_err(),
            Error::NegativeCoefficient
        );
    }
}
