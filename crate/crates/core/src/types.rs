//! Object expressions and their structured inhabitants.
//!
//! `TypeExpr` names objects of both worlds of a linear-non-linear adjunction:
//! the monoidal world (`Atom`, `Unit`, `Tensor`, `Biproduct`, `Bang`) and the
//! cartesian world (`CartAtom`, `CartProd`, `CartUnit`). Strict monoidality is
//! enforced representationally: tensor lists are flat and unit-free, so two
//! structurally equal expressions denote the same object on the nose.
//!
//! `Element` is the carrier datum of the relational and function models:
//! atoms, the unit point, flat tuples, biproduct tags and finite multisets.
//! Multisets keep a sorted representation, making structural equality
//! semantic equality.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Reserved atom with an empty carrier; the zero object of the relational
/// world and the terminal object of its co-Kleisli category.
pub const ZERO_ATOM: &str = "0";

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum TypeExpr {
    Atom(String),
    Unit,
    Tensor(Vec<TypeExpr>),
    Biproduct(Box<TypeExpr>, Box<TypeExpr>),
    Bang(Box<TypeExpr>),
    CartAtom(String),
    CartProd(Vec<TypeExpr>),
    CartUnit,
}

impl TypeExpr {
    pub fn atom(name: &str) -> TypeExpr {
        TypeExpr::Atom(name.to_string())
    }

    pub fn cart_atom(name: &str) -> TypeExpr {
        TypeExpr::CartAtom(name.to_string())
    }

    pub fn zero_atom() -> TypeExpr {
        TypeExpr::Atom(ZERO_ATOM.to_string())
    }

    pub fn bang(inner: TypeExpr) -> TypeExpr {
        TypeExpr::Bang(Box::new(inner))
    }

    pub fn biproduct(l: TypeExpr, r: TypeExpr) -> TypeExpr {
        TypeExpr::Biproduct(Box::new(l), Box::new(r))
    }

    /// Flattening tensor constructor: nested tensors are spliced, units
    /// dropped, and degenerate lists collapse to `Unit` or the lone factor.
    pub fn tensor(factors: Vec<TypeExpr>) -> TypeExpr {
        let mut flat = Vec::new();
        for f in factors {
            match f {
                TypeExpr::Tensor(inner) => flat.extend(inner),
                TypeExpr::Unit => {}
                other => flat.push(other),
            }
        }
        match flat.len() {
            0 => TypeExpr::Unit,
            1 => flat.pop().unwrap(),
            _ => TypeExpr::Tensor(flat),
        }
    }

    pub fn tensor2(a: TypeExpr, b: TypeExpr) -> TypeExpr {
        TypeExpr::tensor(vec![a, b])
    }

    /// Cartesian analogue of [`TypeExpr::tensor`].
    pub fn cart_prod(factors: Vec<TypeExpr>) -> TypeExpr {
        let mut flat = Vec::new();
        for f in factors {
            match f {
                TypeExpr::CartProd(inner) => flat.extend(inner),
                TypeExpr::CartUnit => {}
                other => flat.push(other),
            }
        }
        match flat.len() {
            0 => TypeExpr::CartUnit,
            1 => flat.pop().unwrap(),
            _ => TypeExpr::CartProd(flat),
        }
    }

    pub fn cart_prod2(a: TypeExpr, b: TypeExpr) -> TypeExpr {
        TypeExpr::cart_prod(vec![a, b])
    }

    /// Recursively rebuilds the expression through the canonicalizing
    /// constructors. Identity on expressions already in canonical form.
    pub fn canonicalize(&self) -> TypeExpr {
        match self {
            TypeExpr::Atom(_) | TypeExpr::Unit | TypeExpr::CartAtom(_) | TypeExpr::CartUnit => {
                self.clone()
            }
            TypeExpr::Tensor(fs) => TypeExpr::tensor(fs.iter().map(|f| f.canonicalize()).collect()),
            TypeExpr::CartProd(fs) => {
                TypeExpr::cart_prod(fs.iter().map(|f| f.canonicalize()).collect())
            }
            TypeExpr::Biproduct(l, r) => TypeExpr::biproduct(l.canonicalize(), r.canonicalize()),
            TypeExpr::Bang(inner) => TypeExpr::bang(inner.canonicalize()),
        }
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonicalize()
    }

    /// Number of top-level slots an inhabitant occupies: 0 for units, the
    /// factor count for tensors/products, 1 otherwise.
    pub fn arity(&self) -> usize {
        match self {
            TypeExpr::Unit | TypeExpr::CartUnit => 0,
            TypeExpr::Tensor(fs) | TypeExpr::CartProd(fs) => fs.len(),
            _ => 1,
        }
    }

    /// Top-level factors as a slot list (empty for units).
    pub fn factors(&self) -> Vec<TypeExpr> {
        match self {
            TypeExpr::Unit | TypeExpr::CartUnit => vec![],
            TypeExpr::Tensor(fs) | TypeExpr::CartProd(fs) => fs.clone(),
            other => vec![other.clone()],
        }
    }
}

impl fmt::Display for TypeExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeExpr::Atom(n) => write!(f, "{n}"),
            TypeExpr::Unit => write!(f, "1"),
            TypeExpr::Tensor(fs) => {
                let parts: Vec<String> = fs.iter().map(|t| t.to_string()).collect();
                write!(f, "({})", parts.join("*"))
            }
            TypeExpr::Biproduct(l, r) => write!(f, "({l}(+){r})"),
            TypeExpr::Bang(t) => write!(f, "!{t}"),
            TypeExpr::CartAtom(n) => write!(f, "{n}"),
            TypeExpr::CartProd(fs) => {
                let parts: Vec<String> = fs.iter().map(|t| t.to_string()).collect();
                write!(f, "({})", parts.join("x"))
            }
            TypeExpr::CartUnit => write!(f, "I"),
        }
    }
}

/// Which world of the adjunction a morphism lives in.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum World {
    #[serde(rename = "c")]
    Cartesian,
    #[serde(rename = "l")]
    Linear,
}

impl fmt::Display for World {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            World::Cartesian => write!(f, "c"),
            World::Linear => write!(f, "l"),
        }
    }
}

/// Biproduct / binary-product side.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum Side {
    #[serde(rename = "1")]
    One,
    #[serde(rename = "2")]
    Two,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::One => write!(f, "1"),
            Side::Two => write!(f, "2"),
        }
    }
}

/// Structured inhabitant of a `TypeExpr`.
///
/// Tuples mirror tensor flatness: a tuple never directly contains another
/// tuple or the unit point. Multisets are kept sorted under the derived
/// total order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Element {
    Star,
    AtomVal(String),
    Tag(Side, Box<Element>),
    Tuple(Vec<Element>),
    Multiset(Vec<Element>),
}

impl Element {
    pub fn atom(name: &str) -> Element {
        Element::AtomVal(name.to_string())
    }

    pub fn tag(side: Side, inner: Element) -> Element {
        Element::Tag(side, Box::new(inner))
    }

    /// Flattening tuple constructor, mirroring [`TypeExpr::tensor`].
    pub fn tuple(parts: Vec<Element>) -> Element {
        let mut flat = Vec::new();
        for p in parts {
            match p {
                Element::Tuple(inner) => flat.extend(inner),
                Element::Star => {}
                other => flat.push(other),
            }
        }
        match flat.len() {
            0 => Element::Star,
            1 => flat.pop().unwrap(),
            _ => Element::Tuple(flat),
        }
    }

    pub fn multiset(mut parts: Vec<Element>) -> Element {
        parts.sort();
        Element::Multiset(parts)
    }

    pub fn size(&self) -> u32 {
        match self {
            Element::Star => 0,
            Element::AtomVal(_) => 1,
            Element::Tag(_, inner) => inner.size(),
            Element::Tuple(parts) => parts.iter().map(|p| p.size()).sum(),
            Element::Multiset(parts) => {
                parts.len() as u32 + parts.iter().map(|p| p.size()).sum::<u32>()
            }
        }
    }

    /// Splits an inhabitant of a type with the given slot arities into one
    /// element per slot group. `arities` must sum to the total arity.
    pub fn unpack(&self, arities: &[usize]) -> Vec<Element> {
        let total: usize = arities.iter().sum();
        let slots: Vec<Element> = match (total, self) {
            (0, _) => vec![],
            (1, other) => vec![other.clone()],
            (_, Element::Tuple(parts)) => parts.clone(),
            (_, other) => vec![other.clone()],
        };
        debug_assert_eq!(slots.len(), total, "element shape mismatch in unpack");
        let mut out = Vec::with_capacity(arities.len());
        let mut idx = 0;
        for &k in arities {
            out.push(Element::tuple(slots[idx..idx + k].to_vec()));
            idx += k;
        }
        out
    }

    /// Multiset payload accessor.
    pub fn as_multiset(&self) -> Option<&[Element]> {
        match self {
            Element::Multiset(parts) => Some(parts),
            _ => None,
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Star => write!(f, "*"),
            Element::AtomVal(n) => write!(f, "{n}"),
            Element::Tag(s, inner) => write!(f, "in{s}({inner})"),
            Element::Tuple(parts) => {
                let ps: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "({})", ps.join(","))
            }
            Element::Multiset(parts) => {
                let ps: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "[{}]", ps.join(","))
            }
        }
    }
}

// Canonical JSON: atoms are strings, the unit point is "*", tuples are
// arrays, tags are {"in1": ...} / {"in2": ...}, multisets {"bag": [...]}.
impl Serialize for Element {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        use serde::ser::{SerializeMap, SerializeSeq};
        match self {
            Element::Star => ser.serialize_str("*"),
            Element::AtomVal(n) => ser.serialize_str(n),
            Element::Tag(side, inner) => {
                let mut m = ser.serialize_map(Some(1))?;
                match side {
                    Side::One => m.serialize_entry("in1", inner)?,
                    Side::Two => m.serialize_entry("in2", inner)?,
                }
                m.end()
            }
            Element::Tuple(parts) => {
                let mut s = ser.serialize_seq(Some(parts.len()))?;
                for p in parts {
                    s.serialize_element(p)?;
                }
                s.end()
            }
            Element::Multiset(parts) => {
                let mut m = ser.serialize_map(Some(1))?;
                m.serialize_entry("bag", parts)?;
                m.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for Element {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Element, D::Error> {
        use serde::de::Error;
        let v = serde_json::Value::deserialize(de)?;
        element_from_value(&v).map_err(D::Error::custom)
    }
}

fn element_from_value(v: &serde_json::Value) -> Result<Element, String> {
    match v {
        serde_json::Value::String(s) if s == "*" => Ok(Element::Star),
        serde_json::Value::String(s) => Ok(Element::AtomVal(s.clone())),
        serde_json::Value::Array(parts) => {
            let es: Result<Vec<Element>, String> = parts.iter().map(element_from_value).collect();
            Ok(Element::tuple(es?))
        }
        serde_json::Value::Object(map) if map.len() == 1 => {
            let (k, inner) = map.iter().next().unwrap();
            match k.as_str() {
                "in1" => Ok(Element::tag(Side::One, element_from_value(inner)?)),
                "in2" => Ok(Element::tag(Side::Two, element_from_value(inner)?)),
                "bag" => {
                    let parts = inner
                        .as_array()
                        .ok_or_else(|| "bag payload must be an array".to_string())?;
                    let es: Result<Vec<Element>, String> =
                        parts.iter().map(element_from_value).collect();
                    Ok(Element::multiset(es?))
                }
                other => Err(format!("unknown element key '{other}'")),
            }
        }
        other => Err(format!("cannot decode element from {other}")),
    }
}

/// Declared finite atom carriers. The reserved [`ZERO_ATOM`] is always
/// present with an empty carrier.
#[derive(Clone, Debug, Default)]
pub struct Atoms {
    carriers: BTreeMap<String, Vec<String>>,
}

impl Atoms {
    pub fn new(mut carriers: BTreeMap<String, Vec<String>>) -> Atoms {
        for values in carriers.values_mut() {
            values.sort();
            values.dedup();
        }
        carriers.entry(ZERO_ATOM.to_string()).or_default();
        Atoms { carriers }
    }

    pub fn carrier(&self, name: &str) -> &[String] {
        self.carriers.get(name).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn declares(&self, name: &str) -> bool {
        self.carriers.contains_key(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &String> {
        self.carriers.keys()
    }
}

/// Enumeration and comparison budget.
#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Budget {
    /// Maximum element size enumerated on a morphism domain.
    #[serde(rename = "N")]
    pub n: u32,
    /// Hard cap on the number of enumerated domain points.
    #[serde(rename = "maxElements")]
    pub max_elements: u64,
    /// Seed for the randomized corpora; recorded in reports.
    pub seed: u64,
    /// Size cap on any element produced while running a forward program.
    /// Images are truncated to this size, which keeps the infinitely
    /// branching structure maps (promotion) finitely enumerable.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cap: Option<u32>,
}

impl Budget {
    pub fn new(n: u32) -> Budget {
        Budget {
            n,
            max_elements: 200_000,
            seed: 7,
            cap: None,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Budget {
        self.seed = seed;
        self
    }

    /// Effective element-size cap for forward evaluation.
    pub fn eval_cap(&self) -> u32 {
        self.cap.unwrap_or(2 * self.n + 4)
    }
}

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum EnumError {
    #[error("budget exhausted: more than {0} elements enumerated")]
    BudgetExhausted(u64),
}

/// All elements of `ty` with size at most `budget.n`, deduplicated, in
/// (size, structural) order.
pub fn enumerate_elements(
    ty: &TypeExpr,
    atoms: &Atoms,
    budget: &Budget,
) -> Result<Vec<Element>, EnumError> {
    let mut out = elements_up_to(ty, atoms, budget.n);
    if out.len() as u64 > budget.max_elements {
        return Err(EnumError::BudgetExhausted(budget.max_elements));
    }
    out.sort_by(|a, b| (a.size(), a.clone()).cmp(&(b.size(), b.clone())));
    out.dedup();
    Ok(out)
}

fn elements_up_to(ty: &TypeExpr, atoms: &Atoms, max_size: u32) -> Vec<Element> {
    match ty {
        TypeExpr::Unit | TypeExpr::CartUnit => vec![Element::Star],
        TypeExpr::Atom(name) | TypeExpr::CartAtom(name) => {
            if max_size == 0 {
                return vec![];
            }
            atoms.carrier(name).iter().map(|v| Element::atom(v)).collect()
        }
        TypeExpr::Biproduct(l, r) => {
            let mut out: Vec<Element> = elements_up_to(l, atoms, max_size)
                .into_iter()
                .map(|e| Element::tag(Side::One, e))
                .collect();
            out.extend(
                elements_up_to(r, atoms, max_size)
                    .into_iter()
                    .map(|e| Element::tag(Side::Two, e)),
            );
            out
        }
        TypeExpr::Tensor(fs) | TypeExpr::CartProd(fs) => {
            let mut acc: Vec<(u32, Vec<Element>)> = vec![(0, vec![])];
            for f in fs {
                let mut next = Vec::new();
                for (used, parts) in &acc {
                    for e in elements_up_to(f, atoms, max_size - used) {
                        let sz = used + e.size();
                        if sz <= max_size {
                            let mut ps = parts.clone();
                            ps.push(e);
                            next.push((sz, ps));
                        }
                    }
                }
                acc = next;
            }
            acc.into_iter().map(|(_, ps)| Element::tuple(ps)).collect()
        }
        TypeExpr::Bang(inner) => {
            // A k-part multiset costs k plus the sizes of its parts.
            let mut base = elements_up_to(inner, atoms, max_size.saturating_sub(1));
            base.sort();
            base.dedup();
            let mut out = Vec::new();
            let mut stack: Vec<(usize, u32, Vec<Element>)> = vec![(0, 0, vec![])];
            while let Some((start, used, parts)) = stack.pop() {
                out.push(Element::Multiset(parts.clone()));
                for (i, e) in base.iter().enumerate().skip(start) {
                    let cost = 1 + e.size();
                    if used + cost <= max_size {
                        let mut ps = parts.clone();
                        ps.push(e.clone());
                        stack.push((i, used + cost, ps));
                    }
                }
            }
            out.into_iter().map(|e| {
                if let Element::Multiset(ps) = e {
                    Element::multiset(ps)
                } else {
                    e
                }
            }).collect()
        }
    }
}

/// Largest possible element size of `ty`, or `None` when unbounded
/// (anything containing `Bang`). Used to upgrade bounded-extensional
/// equality to exact equality on finite types.
pub fn max_element_size(ty: &TypeExpr, atoms: &Atoms) -> Option<u32> {
    match ty {
        TypeExpr::Unit | TypeExpr::CartUnit => Some(0),
        TypeExpr::Atom(name) | TypeExpr::CartAtom(name) => {
            if atoms.carrier(name).is_empty() {
                Some(0)
            } else {
                Some(1)
            }
        }
        TypeExpr::Biproduct(l, r) => {
            Some(max_element_size(l, atoms)?.max(max_element_size(r, atoms)?))
        }
        TypeExpr::Tensor(fs) | TypeExpr::CartProd(fs) => {
            let mut total = 0;
            for f in fs {
                total += max_element_size(f, atoms)?;
            }
            Some(total)
        }
        TypeExpr::Bang(inner) => {
            // !T is finite only over an empty carrier, where [] is the
            // lone inhabitant.
            if max_element_size(inner, atoms) == Some(0) && has_no_elements(inner, atoms) {
                Some(0)
            } else {
                None
            }
        }
    }
}

fn has_no_elements(ty: &TypeExpr, atoms: &Atoms) -> bool {
    match ty {
        TypeExpr::Unit | TypeExpr::CartUnit => false,
        TypeExpr::Atom(name) | TypeExpr::CartAtom(name) => atoms.carrier(name).is_empty(),
        TypeExpr::Biproduct(l, r) => has_no_elements(l, atoms) && has_no_elements(r, atoms),
        TypeExpr::Tensor(fs) | TypeExpr::CartProd(fs) => {
            fs.iter().any(|f| has_no_elements(f, atoms))
        }
        TypeExpr::Bang(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn atoms_a() -> Atoms {
        let mut m = BTreeMap::new();
        m.insert("a".to_string(), vec!["x".to_string()]);
        m.insert("b".to_string(), vec!["y".to_string(), "z".to_string()]);
        Atoms::new(m)
    }

    #[test]
    fn tensor_canonical_form_is_flat_and_unit_free() {
        let a = TypeExpr::atom("a");
        let b = TypeExpr::atom("b");
        let t = TypeExpr::tensor(vec![
            TypeExpr::tensor2(a.clone(), TypeExpr::Unit),
            TypeExpr::tensor2(b.clone(), a.clone()),
        ]);
        assert_eq!(t, TypeExpr::Tensor(vec![a.clone(), b, a.clone()]));
        assert_eq!(TypeExpr::tensor(vec![TypeExpr::Unit]), TypeExpr::Unit);
        assert_eq!(TypeExpr::tensor(vec![a.clone()]), a);
        assert!(t.is_canonical());
    }

    #[test]
    fn element_sizes_follow_the_declared_formula() {
        let x = Element::atom("x");
        assert_eq!(x.size(), 1);
        assert_eq!(Element::Star.size(), 0);
        assert_eq!(Element::tuple(vec![x.clone(), x.clone()]).size(), 2);
        assert_eq!(Element::tag(Side::One, x.clone()).size(), 1);
        // [x,x] costs 2 for the slots plus 2 for the contents.
        assert_eq!(Element::multiset(vec![x.clone(), x.clone()]).size(), 4);
        assert_eq!(Element::multiset(vec![]).size(), 0);
    }

    #[test]
    fn bang_enumeration_respects_the_size_budget() {
        let atoms = atoms_a();
        let bang_a = TypeExpr::bang(TypeExpr::atom("a"));
        let at = |n| Budget::new(n);
        let e2 = enumerate_elements(&bang_a, &atoms, &at(2)).unwrap();
        assert_eq!(
            e2,
            vec![Element::multiset(vec![]), Element::multiset(vec![Element::atom("x")])]
        );
        let e3 = enumerate_elements(&bang_a, &atoms, &at(3)).unwrap();
        assert_eq!(e3.len(), 2, "[x,x] has size 4 and is excluded at N=3");
        let e4 = enumerate_elements(&bang_a, &atoms, &at(4)).unwrap();
        assert_eq!(
            e4,
            vec![
                Element::multiset(vec![]),
                Element::multiset(vec![Element::atom("x")]),
                Element::multiset(vec![Element::atom("x"), Element::atom("x")]),
            ]
        );
    }

    #[test]
    fn unit_and_biproduct_enumeration() {
        let atoms = atoms_a();
        let b0 = Budget::new(0);
        assert_eq!(
            enumerate_elements(&TypeExpr::Unit, &atoms, &b0).unwrap(),
            vec![Element::Star]
        );
        let bi = TypeExpr::biproduct(TypeExpr::atom("a"), TypeExpr::atom("b"));
        let e1 = enumerate_elements(&bi, &atoms, &Budget::new(1)).unwrap();
        assert_eq!(e1.len(), 3);
        assert!(e1.contains(&Element::tag(Side::One, Element::atom("x"))));
        assert!(e1.contains(&Element::tag(Side::Two, Element::atom("y"))));
    }

    #[test]
    fn element_json_round_trips() {
        let e = Element::tuple(vec![
            Element::multiset(vec![Element::atom("x")]),
            Element::atom("x"),
        ]);
        let js = serde_json::to_string(&e).unwrap();
        assert_eq!(js, r#"[{"bag":["x"]},"x"]"#);
        let back: Element = serde_json::from_str(&js).unwrap();
        assert_eq!(back, e);
    }

    #[test]
    fn budget_cap_trips_enumeration() {
        let atoms = atoms_a();
        let mut b = Budget::new(5);
        b.max_elements = 2;
        let bang_a = TypeExpr::bang(TypeExpr::atom("a"));
        assert_eq!(
            enumerate_elements(&bang_a, &atoms, &b),
            Err(EnumError::BudgetExhausted(2))
        );
    }

    #[test]
    fn max_size_none_only_for_bang() {
        let atoms = atoms_a();
        assert_eq!(max_element_size(&TypeExpr::atom("a"), &atoms), Some(1));
        assert_eq!(
            max_element_size(&TypeExpr::bang(TypeExpr::atom("a")), &atoms),
            None
        );
        assert_eq!(max_element_size(&TypeExpr::zero_atom(), &atoms), Some(0));
        assert_eq!(
            max_element_size(&TypeExpr::bang(TypeExpr::zero_atom()), &atoms),
            Some(0)
        );
    }
}
