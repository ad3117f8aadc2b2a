//! Forward-image transducers.
//!
//! A [`Mor`] is a typed relation-as-program: a function from a domain
//! element to the finite set of its images. Objects such as `!A` are
//! infinite, but every structure map is finitely branching once images are
//! truncated to the evaluation size cap, so composites stay executable.
//! Equality is bounded-extensional: all domain elements up to the budget
//! size are enumerated and their image sets compared, with an explicit
//! verdict recording whether the enumeration was exhaustive.

use crate::types::{
    enumerate_elements, max_element_size, Atoms, Budget, Element, EnumError, TypeExpr,
};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::{Arc, RwLock};

pub type ImageSet = BTreeSet<Element>;

/// Shared evaluation context threaded through forward programs.
#[derive(Clone, Copy, Debug)]
pub struct EvalCtx {
    /// Size cap on produced elements; images are truncated to it.
    pub cap: u32,
}

impl EvalCtx {
    pub fn from_budget(budget: &Budget) -> EvalCtx {
        EvalCtx {
            cap: budget.eval_cap(),
        }
    }

    pub fn admits(&self, e: &Element) -> bool {
        e.size() <= self.cap
    }
}

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum ModelError {
    #[error("type mismatch: expected {expected}, found {found} ({context})")]
    TypeMismatch {
        context: String,
        expected: String,
        found: String,
    },
    #[error("model has no semantics for {0}")]
    UnsupportedConstructor(String),
    #[error("domain is not of shape !X: {0}")]
    DomainNotBang(String),
    #[error("domain is not of shape F(X): {0}")]
    DomainNotFree(String),
    #[error("morphism is not vertical over {0}")]
    NotVertical(String),
    #[error("morphisms live over different bases: {0} vs {1}")]
    BaseMismatch(String, String),
    #[error("budget exhausted: more than {0} elements enumerated")]
    BudgetExhausted(u64),
    #[error("unknown generator '{0}'")]
    UnknownGenerator(String),
}

impl From<EnumError> for ModelError {
    fn from(e: EnumError) -> ModelError {
        match e {
            EnumError::BudgetExhausted(n) => ModelError::BudgetExhausted(n),
        }
    }
}

pub type ForwardFn = dyn Fn(&Element, &EvalCtx) -> Result<ImageSet, ModelError> + Send + Sync;

/// A typed forward-image transducer.
///
/// Clones share both the program and its memo table, so deep composites
/// evaluate each distinct input once.
#[derive(Clone)]
pub struct Mor {
    pub dom: TypeExpr,
    pub cod: TypeExpr,
    prog: Arc<ForwardFn>,
    cache: Arc<RwLock<BTreeMap<(Element, u32), ImageSet>>>,
}

impl fmt::Debug for Mor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mor({} -> {})", self.dom, self.cod)
    }
}

impl Mor {
    pub fn new<F>(dom: TypeExpr, cod: TypeExpr, prog: F) -> Mor
    where
        F: Fn(&Element, &EvalCtx) -> Result<ImageSet, ModelError> + Send + Sync + 'static,
    {
        Mor {
            dom,
            cod,
            prog: Arc::new(prog),
            cache: Arc::new(RwLock::new(BTreeMap::new())),
        }
    }

    /// Forward image of `x`, truncated to the context cap.
    pub fn forward(&self, x: &Element, ctx: &EvalCtx) -> Result<ImageSet, ModelError> {
        let key = (x.clone(), ctx.cap);
        if let Some(hit) = self.cache.read().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let mut img = (self.prog)(x, ctx)?;
        img.retain(|e| ctx.admits(e));
        self.cache.write().unwrap().insert(key, img.clone());
        Ok(img)
    }

    pub fn same_program(&self, other: &Mor) -> bool {
        Arc::ptr_eq(&self.prog, &other.prog)
    }

    /// Identity transducer.
    pub fn identity(ty: TypeExpr) -> Mor {
        Mor::new(ty.clone(), ty, |x, _| Ok(singleton(x.clone())))
    }

    /// Empty relation.
    pub fn zero(dom: TypeExpr, cod: TypeExpr) -> Mor {
        Mor::new(dom, cod, |_, _| Ok(ImageSet::new()))
    }

    /// Union of two parallel transducers.
    pub fn sum(f: &Mor, g: &Mor) -> Result<Mor, ModelError> {
        if f.dom != g.dom || f.cod != g.cod {
            return Err(ModelError::TypeMismatch {
                context: "sum".into(),
                expected: format!("{} -> {}", f.dom, f.cod),
                found: format!("{} -> {}", g.dom, g.cod),
            });
        }
        let (f, g) = (f.clone(), g.clone());
        Ok(Mor::new(f.dom.clone(), f.cod.clone(), move |x, ctx| {
            let mut img = f.forward(x, ctx)?;
            img.extend(g.forward(x, ctx)?);
            Ok(img)
        }))
    }

    /// Relational composition; image of the composite is the union of `g`
    /// images over the `f` image.
    pub fn compose(f: &Mor, g: &Mor) -> Result<Mor, ModelError> {
        if f.cod != g.dom {
            return Err(ModelError::TypeMismatch {
                context: "compose".into(),
                expected: f.cod.to_string(),
                found: g.dom.to_string(),
            });
        }
        let (f, g) = (f.clone(), g.clone());
        Ok(Mor::new(f.dom.clone(), g.cod.clone(), move |x, ctx| {
            let mut out = ImageSet::new();
            for y in f.forward(x, ctx)? {
                out.extend(g.forward(&y, ctx)?);
            }
            Ok(out)
        }))
    }

    pub fn compose_all(mors: &[&Mor]) -> Result<Mor, ModelError> {
        let mut it = mors.iter();
        let first = it.next().expect("compose_all of empty list");
        let mut acc = (*first).clone();
        for m in it {
            acc = Mor::compose(&acc, m)?;
        }
        Ok(acc)
    }

    /// Table-backed transducer (used for declared generators).
    pub fn from_table(dom: TypeExpr, cod: TypeExpr, table: Vec<(Element, Vec<Element>)>) -> Mor {
        let mut map: std::collections::BTreeMap<Element, ImageSet> = Default::default();
        for (k, vs) in table {
            map.entry(k).or_default().extend(vs);
        }
        Mor::new(dom, cod, move |x, _| {
            Ok(map.get(x).cloned().unwrap_or_default())
        })
    }

    /// Extensional restriction: list of (domain element, image list) pairs
    /// over all domain elements of size at most the budget.
    pub fn table(
        &self,
        atoms: &Atoms,
        budget: &Budget,
    ) -> Result<Vec<(Element, Vec<Element>)>, ModelError> {
        let ctx = EvalCtx::from_budget(budget);
        let mut out = Vec::new();
        for x in enumerate_elements(&self.dom, atoms, budget)? {
            let img = self.forward(&x, &ctx)?;
            out.push((x, img.into_iter().collect()));
        }
        Ok(out)
    }
}

pub fn singleton(e: Element) -> ImageSet {
    let mut s = ImageSet::new();
    s.insert(e);
    s
}

/// Verdict of a bounded-extensional comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EqVerdict {
    /// The whole (finite) domain was enumerated and all images agree.
    Equal,
    /// All images agree on every domain element up to the budget size.
    EqualUpToBudget,
    /// Witness domain element with differing images.
    Distinct(Element),
}

impl EqVerdict {
    pub fn holds(&self) -> bool {
        !matches!(self, EqVerdict::Distinct(_))
    }
}

/// Compares two parallel transducers on all domain elements of size at most
/// `budget.n`. Enumeration is in size order, so a `Distinct` witness is
/// minimal.
pub fn mor_equal(
    f: &Mor,
    g: &Mor,
    atoms: &Atoms,
    budget: &Budget,
) -> Result<EqVerdict, ModelError> {
    if f.dom != g.dom || f.cod != g.cod {
        return Err(ModelError::TypeMismatch {
            context: "mor_equal".into(),
            expected: format!("{} -> {}", f.dom, f.cod),
            found: format!("{} -> {}", g.dom, g.cod),
        });
    }
    if f.same_program(g) {
        return Ok(exhaustive_verdict(&f.dom, atoms, budget));
    }
    let ctx = EvalCtx::from_budget(budget);
    for x in enumerate_elements(&f.dom, atoms, budget)? {
        if f.forward(&x, &ctx)? != g.forward(&x, &ctx)? {
            return Ok(EqVerdict::Distinct(x));
        }
    }
    Ok(exhaustive_verdict(&f.dom, atoms, budget))
}

fn exhaustive_verdict(dom: &TypeExpr, atoms: &Atoms, budget: &Budget) -> EqVerdict {
    match max_element_size(dom, atoms) {
        Some(s) if s <= budget.n => EqVerdict::Equal,
        _ => EqVerdict::EqualUpToBudget,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn atoms() -> Atoms {
        let mut m = BTreeMap::new();
        m.insert("a".to_string(), vec!["x".to_string()]);
        Atoms::new(m)
    }

    #[test]
    fn identity_composes_neutrally() {
        let a = TypeExpr::atom("a");
        let id = Mor::identity(a.clone());
        let both = Mor::compose(&id, &id).unwrap();
        let v = mor_equal(&both, &id, &atoms(), &Budget::new(3)).unwrap();
        assert_eq!(v, EqVerdict::Equal);
    }

    #[test]
    fn distinct_yields_minimal_witness() {
        let a = TypeExpr::atom("a");
        let id = Mor::identity(a.clone());
        let zero = Mor::zero(a.clone(), a.clone());
        let v = mor_equal(&id, &zero, &atoms(), &Budget::new(3)).unwrap();
        assert_eq!(v, EqVerdict::Distinct(Element::atom("x")));
    }

    #[test]
    fn sum_of_zeroes_is_zero() {
        let a = TypeExpr::atom("a");
        let zero = Mor::zero(a.clone(), a.clone());
        let s = Mor::sum(&zero, &zero).unwrap();
        assert_eq!(
            mor_equal(&s, &zero, &atoms(), &Budget::new(3)).unwrap(),
            EqVerdict::Equal
        );
    }

    #[test]
    fn bang_domains_report_up_to_budget() {
        let bang_a = TypeExpr::bang(TypeExpr::atom("a"));
        let id = Mor::identity(bang_a.clone());
        let other = Mor::identity(bang_a);
        assert_eq!(
            mor_equal(&id, &other, &atoms(), &Budget::new(4)).unwrap(),
            EqVerdict::EqualUpToBudget
        );
    }
}
