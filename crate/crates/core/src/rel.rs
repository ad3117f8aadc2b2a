//! The relational model with the finite-multiset exponential.
//!
//! Morphisms are finitely-branching forward-image transducers between
//! structured carriers. `!A` is inhabited by finite multisets over `A`;
//! dereliction picks singletons apart, weakening accepts only the empty
//! multiset, contraction enumerates ordered splittings and promotion
//! enumerates partitions. The hom-sets carry the idempotent union monoid,
//! which is the commutative-monoid enrichment making sums computable.

use crate::cat::{CartCat, LinCat, MonCat};
use crate::mor::{singleton, ImageSet, ModelError, Mor};
use crate::types::{Atoms, Element, Side, TypeExpr};

// ---------------------------------------------------------------------------
// multiset helpers

/// All ordered splittings m = m1 + m2 of a sorted multiset.
pub fn splittings(m: &[Element]) -> Vec<(Vec<Element>, Vec<Element>)> {
    // Group equal elements and choose a count for the left part per group.
    let mut groups: Vec<(Element, usize)> = Vec::new();
    for e in m {
        match groups.last_mut() {
            Some((g, k)) if g == e => *k += 1,
            _ => groups.push((e.clone(), 1)),
        }
    }
    let mut out = vec![(Vec::new(), Vec::new())];
    for (e, k) in groups {
        let mut next = Vec::new();
        for (l, r) in &out {
            for take in 0..=k {
                let mut l2 = l.clone();
                let mut r2 = r.clone();
                l2.extend(std::iter::repeat(e.clone()).take(take));
                r2.extend(std::iter::repeat(e.clone()).take(k - take));
                next.push((l2, r2));
            }
        }
        out = next;
    }
    out
}

/// All partitions of a sorted multiset into nonempty parts, each partition a
/// sorted list of sorted parts.
pub fn partitions_nonempty(m: &[Element]) -> Vec<Vec<Vec<Element>>> {
    if m.is_empty() {
        return vec![vec![]];
    }
    let n = m.len();
    let mut seen: std::collections::BTreeSet<Vec<Vec<Element>>> = Default::default();
    // Restricted-growth colorings; multiset repeats collapse on normalization.
    let mut coloring = vec![0usize; n];
    loop {
        let parts_n = coloring.iter().copied().max().unwrap() + 1;
        let mut parts: Vec<Vec<Element>> = vec![Vec::new(); parts_n];
        for (i, &c) in coloring.iter().enumerate() {
            parts[c].push(m[i].clone());
        }
        for p in &mut parts {
            p.sort();
        }
        parts.sort();
        seen.insert(parts);
        // next restricted-growth string
        let mut i = n;
        loop {
            if i == 0 {
                return seen.into_iter().collect();
            }
            i -= 1;
            let max_prefix = coloring[..i].iter().copied().max().unwrap_or(0);
            let limit = if i == 0 { 0 } else { max_prefix + 1 };
            if coloring[i] < limit && coloring[i] < n - 1 {
                coloring[i] += 1;
                for c in coloring.iter_mut().skip(i + 1) {
                    *c = 0;
                }
                break;
            }
        }
    }
}

fn multiset_parts(e: &Element) -> Result<Vec<Element>, ModelError> {
    e.as_multiset()
        .map(|p| p.to_vec())
        .ok_or_else(|| ModelError::TypeMismatch {
            context: "multiset".into(),
            expected: "multiset element".into(),
            found: e.to_string(),
        })
}

fn unbang(ty: &TypeExpr) -> Result<TypeExpr, ModelError> {
    match ty {
        TypeExpr::Bang(inner) => Ok((**inner).clone()),
        other => Err(ModelError::DomainNotBang(other.to_string())),
    }
}

// ---------------------------------------------------------------------------
// structure maps

/// Dereliction d_A : !A -> A.
pub fn dereliction(a: &TypeExpr) -> Mor {
    Mor::new(TypeExpr::bang(a.clone()), a.clone(), |m, _| {
        let parts = multiset_parts(m)?;
        Ok(if parts.len() == 1 {
            singleton(parts[0].clone())
        } else {
            ImageSet::new()
        })
    })
}

/// Weakening w_A : !A -> 1.
pub fn weakening(a: &TypeExpr) -> Mor {
    Mor::new(TypeExpr::bang(a.clone()), TypeExpr::Unit, |m, _| {
        let parts = multiset_parts(m)?;
        Ok(if parts.is_empty() {
            singleton(Element::Star)
        } else {
            ImageSet::new()
        })
    })
}

/// Contraction c_A : !A -> !A (x) !A, all ordered splittings.
pub fn contraction(a: &TypeExpr) -> Mor {
    let bang = TypeExpr::bang(a.clone());
    let cod = TypeExpr::tensor2(bang.clone(), bang.clone());
    Mor::new(bang, cod, |m, _| {
        let parts = multiset_parts(m)?;
        Ok(splittings(&parts)
            .into_iter()
            .map(|(l, r)| Element::tuple(vec![Element::multiset(l), Element::multiset(r)]))
            .collect())
    })
}

/// Deriving transform ∂_A : !A (x) A -> !A, insertion of the vector into
/// the bag of points.
pub fn deriving(a: &TypeExpr) -> Mor {
    let bang = TypeExpr::bang(a.clone());
    let dom = TypeExpr::tensor2(bang.clone(), a.clone());
    let arity = a.arity();
    Mor::new(dom, bang, move |e, _| {
        let slots = e.unpack(&[1, arity]);
        let mut parts = multiset_parts(&slots[0])?;
        parts.push(slots[1].clone());
        Ok(singleton(Element::multiset(parts)))
    })
}

/// Seely map s_{A,B} : !(A (+) B) -> !A (x) !B, splitting a bag by tag.
pub fn seely(a: &TypeExpr, b: &TypeExpr) -> Mor {
    let dom = TypeExpr::bang(TypeExpr::biproduct(a.clone(), b.clone()));
    let cod = TypeExpr::tensor2(TypeExpr::bang(a.clone()), TypeExpr::bang(b.clone()));
    Mor::new(dom, cod, |m, _| {
        let parts = multiset_parts(m)?;
        let mut left = Vec::new();
        let mut right = Vec::new();
        for p in parts {
            match p {
                Element::Tag(Side::One, inner) => left.push(*inner),
                Element::Tag(Side::Two, inner) => right.push(*inner),
                other => {
                    return Err(ModelError::TypeMismatch {
                        context: "seely".into(),
                        expected: "tagged element".into(),
                        found: other.to_string(),
                    })
                }
            }
        }
        Ok(singleton(Element::tuple(vec![
            Element::multiset(left),
            Element::multiset(right),
        ])))
    })
}

/// Inverse Seely map, merging two bags with tags.
pub fn seely_inv(a: &TypeExpr, b: &TypeExpr) -> Mor {
    let dom = TypeExpr::tensor2(TypeExpr::bang(a.clone()), TypeExpr::bang(b.clone()));
    let cod = TypeExpr::bang(TypeExpr::biproduct(a.clone(), b.clone()));
    Mor::new(dom, cod, |e, _| {
        let slots = e.unpack(&[1, 1]);
        let mut parts: Vec<Element> = multiset_parts(&slots[0])?
            .into_iter()
            .map(|p| Element::tag(Side::One, p))
            .collect();
        parts.extend(
            multiset_parts(&slots[1])?
                .into_iter()
                .map(|p| Element::tag(Side::Two, p)),
        );
        Ok(singleton(Element::multiset(parts)))
    })
}

/// Promotion of a co-Kleisli map `k : !X -> Y` to `!X -> !Y`: images of the
/// parts of a partition, one per part. Parts may be empty whenever `k`
/// accepts the empty bag, so the image is truncated by the evaluation cap.
pub fn promote(k: &Mor) -> Result<Mor, ModelError> {
    let x = unbang(&k.dom)?;
    let cod = TypeExpr::bang(k.cod.clone());
    let k = k.clone();
    Ok(Mor::new(TypeExpr::bang(x), cod, move |m, ctx| {
        let parts = multiset_parts(m)?;
        let img_empty = k.forward(&Element::multiset(vec![]), ctx)?;
        let mut out = ImageSet::new();
        for base in partitions_nonempty(&parts) {
            // each part of the output bag costs at least one size unit
            let max_extra = (ctx.cap as usize).saturating_sub(base.len());
            let extras_range = if img_empty.is_empty() { 0..=0 } else { 0..=max_extra };
            for extras in extras_range {
                let mut images: Vec<Vec<Element>> = Vec::new();
                let mut ok = true;
                for part in &base {
                    let img = k.forward(&Element::multiset(part.clone()), ctx)?;
                    if img.is_empty() {
                        ok = false;
                        break;
                    }
                    images.push(img.into_iter().collect());
                }
                if !ok {
                    continue;
                }
                for _ in 0..extras {
                    images.push(img_empty.iter().cloned().collect());
                }
                let mut acc: Vec<Vec<Element>> = vec![Vec::new()];
                for choices in &images {
                    let mut next = Vec::new();
                    for prefix in &acc {
                        for c in choices {
                            let mut p = prefix.clone();
                            p.push(c.clone());
                            next.push(p);
                        }
                    }
                    acc = next;
                }
                for bag in acc {
                    let e = Element::multiset(bag);
                    if ctx.admits(&e) {
                        out.insert(e);
                    }
                }
            }
        }
        Ok(out)
    }))
}

// ---------------------------------------------------------------------------
// tensor plumbing shared by both element worlds

fn tensor_mor_packed(
    dom: TypeExpr,
    cod: TypeExpr,
    f: &Mor,
    g: &Mor,
) -> Mor {
    let (f, g) = (f.clone(), g.clone());
    let arities = [f.dom.arity(), g.dom.arity()];
    Mor::new(dom, cod, move |e, ctx| {
        let slots = e.unpack(&arities);
        let mut out = ImageSet::new();
        for yf in f.forward(&slots[0], ctx)? {
            for yg in g.forward(&slots[1], ctx)? {
                out.insert(Element::tuple(vec![yf.clone(), yg]));
            }
        }
        Ok(out)
    })
}

fn sym_packed(dom: TypeExpr, cod: TypeExpr, ar_x: usize, ar_y: usize) -> Mor {
    Mor::new(dom, cod, move |e, _| {
        let slots = e.unpack(&[ar_x, ar_y]);
        Ok(singleton(Element::tuple(vec![
            slots[1].clone(),
            slots[0].clone(),
        ])))
    })
}

// ---------------------------------------------------------------------------
// the linear category of relations

/// Relations between structured carriers: the additive symmetric monoidal
/// category with biproducts underlying the model.
#[derive(Clone)]
pub struct RelLin {
    atoms: Atoms,
}

impl RelLin {
    pub fn new(atoms: Atoms) -> RelLin {
        RelLin { atoms }
    }
}

impl MonCat for RelLin {
    fn atoms(&self) -> &Atoms {
        &self.atoms
    }

    fn id(&self, x: &TypeExpr) -> Mor {
        Mor::identity(x.clone())
    }

    fn compose(&self, f: &Mor, g: &Mor) -> Result<Mor, ModelError> {
        Mor::compose(f, g)
    }

    fn tensor_obj(&self, x: &TypeExpr, y: &TypeExpr) -> TypeExpr {
        TypeExpr::tensor2(x.clone(), y.clone())
    }

    fn unit_obj(&self) -> TypeExpr {
        TypeExpr::Unit
    }

    fn tensor_mor(&self, f: &Mor, g: &Mor) -> Result<Mor, ModelError> {
        let dom = self.tensor_obj(&f.dom, &g.dom);
        let cod = self.tensor_obj(&f.cod, &g.cod);
        Ok(tensor_mor_packed(dom, cod, f, g))
    }

    fn sym(&self, x: &TypeExpr, y: &TypeExpr) -> Mor {
        sym_packed(
            self.tensor_obj(x, y),
            self.tensor_obj(y, x),
            x.arity(),
            y.arity(),
        )
    }

    fn sum(&self, f: &Mor, g: &Mor) -> Result<Mor, ModelError> {
        Mor::sum(f, g)
    }

    fn zero(&self, dom: &TypeExpr, cod: &TypeExpr) -> Result<Mor, ModelError> {
        Ok(Mor::zero(dom.clone(), cod.clone()))
    }
}

impl LinCat for RelLin {
    fn biprod_obj(&self, a: &TypeExpr, b: &TypeExpr) -> Result<TypeExpr, ModelError> {
        Ok(TypeExpr::biproduct(a.clone(), b.clone()))
    }

    fn inj(&self, side: Side, l: &TypeExpr, r: &TypeExpr) -> Result<Mor, ModelError> {
        let from = match side {
            Side::One => l.clone(),
            Side::Two => r.clone(),
        };
        Ok(Mor::new(
            from,
            TypeExpr::biproduct(l.clone(), r.clone()),
            move |e, _| Ok(singleton(Element::tag(side, e.clone()))),
        ))
    }

    fn biproj(&self, side: Side, l: &TypeExpr, r: &TypeExpr) -> Result<Mor, ModelError> {
        let to = match side {
            Side::One => l.clone(),
            Side::Two => r.clone(),
        };
        Ok(Mor::new(
            TypeExpr::biproduct(l.clone(), r.clone()),
            to,
            move |e, _| match e {
                Element::Tag(s, inner) if *s == side => Ok(singleton((**inner).clone())),
                Element::Tag(_, _) => Ok(ImageSet::new()),
                other => Err(ModelError::TypeMismatch {
                    context: "biproj".into(),
                    expected: "tagged element".into(),
                    found: other.to_string(),
                }),
            },
        ))
    }

    fn dist(&self, a: &TypeExpr, b: &TypeExpr, c: &TypeExpr) -> Result<Mor, ModelError> {
        let dom = self.tensor_obj(a, &TypeExpr::biproduct(b.clone(), c.clone()));
        let cod = TypeExpr::biproduct(
            self.tensor_obj(a, b),
            self.tensor_obj(a, c),
        );
        let ar_a = a.arity();
        Ok(Mor::new(dom, cod, move |e, _| {
            let slots = e.unpack(&[ar_a, 1]);
            match &slots[1] {
                Element::Tag(s, inner) => Ok(singleton(Element::tag(
                    *s,
                    Element::tuple(vec![slots[0].clone(), (**inner).clone()]),
                ))),
                other => Err(ModelError::TypeMismatch {
                    context: "dist".into(),
                    expected: "tagged element".into(),
                    found: other.to_string(),
                }),
            }
        }))
    }
}

// ---------------------------------------------------------------------------
// the co-Kleisli cartesian category

/// Co-Kleisli category of the multiset comonad: a morphism `X -> Y` is a
/// transducer `!X -> Y`. Products are biproducts of the linear world and
/// the terminal object is the empty-carrier atom.
#[derive(Clone)]
pub struct KleisliCart {
    lin: RelLin,
}

impl KleisliCart {
    pub fn new(atoms: Atoms) -> KleisliCart {
        KleisliCart {
            lin: RelLin::new(atoms),
        }
    }

    pub fn lin(&self) -> &RelLin {
        &self.lin
    }
}

impl MonCat for KleisliCart {
    fn atoms(&self) -> &Atoms {
        self.lin.atoms()
    }

    fn id(&self, x: &TypeExpr) -> Mor {
        dereliction(x)
    }

    fn compose(&self, f: &Mor, g: &Mor) -> Result<Mor, ModelError> {
        Mor::compose(&promote(f)?, g)
    }

    fn tensor_obj(&self, x: &TypeExpr, y: &TypeExpr) -> TypeExpr {
        TypeExpr::biproduct(x.clone(), y.clone())
    }

    fn unit_obj(&self) -> TypeExpr {
        TypeExpr::zero_atom()
    }

    fn tensor_mor(&self, f: &Mor, g: &Mor) -> Result<Mor, ModelError> {
        self.prod_mor(f, g)
    }

    fn sym(&self, x: &TypeExpr, y: &TypeExpr) -> Mor {
        let dom = TypeExpr::bang(self.tensor_obj(x, y));
        let cod = self.tensor_obj(y, x);
        Mor::new(dom, cod, |m, _| {
            let parts = multiset_parts(m)?;
            Ok(match parts.as_slice() {
                [Element::Tag(s, inner)] => {
                    let flipped = match s {
                        Side::One => Side::Two,
                        Side::Two => Side::One,
                    };
                    singleton(Element::tag(flipped, (**inner).clone()))
                }
                _ => ImageSet::new(),
            })
        })
    }

    fn sum(&self, f: &Mor, g: &Mor) -> Result<Mor, ModelError> {
        Mor::sum(f, g)
    }

    fn zero(&self, dom: &TypeExpr, cod: &TypeExpr) -> Result<Mor, ModelError> {
        Ok(Mor::zero(dom.clone(), cod.clone()))
    }
}

impl CartCat for KleisliCart {
    fn pair(&self, f: &Mor, g: &Mor) -> Result<Mor, ModelError> {
        if f.dom != g.dom {
            return Err(ModelError::TypeMismatch {
                context: "pair".into(),
                expected: f.dom.to_string(),
                found: g.dom.to_string(),
            });
        }
        self.lin.pair_biprod(f, g)
    }

    fn proj(&self, x: &TypeExpr, y: &TypeExpr, side: Side) -> Mor {
        let dom = TypeExpr::bang(self.tensor_obj(x, y));
        let cod = match side {
            Side::One => x.clone(),
            Side::Two => y.clone(),
        };
        Mor::new(dom, cod, move |m, _| {
            let parts = multiset_parts(m)?;
            Ok(match parts.as_slice() {
                [Element::Tag(s, inner)] if *s == side => singleton((**inner).clone()),
                _ => ImageSet::new(),
            })
        })
    }

    fn terminal(&self, x: &TypeExpr) -> Mor {
        Mor::zero(TypeExpr::bang(x.clone()), self.unit_obj())
    }

    fn hom_dom(&self, x: &TypeExpr) -> TypeExpr {
        TypeExpr::bang(x.clone())
    }

    fn obj_dom(&self, f: &Mor) -> TypeExpr {
        match &f.dom {
            TypeExpr::Bang(inner) => (**inner).clone(),
            other => other.clone(),
        }
    }
}

// ---------------------------------------------------------------------------
// finite sets with functions (the trivial world)

/// Finite sets over the declared carriers with total functions, playing
/// both roles of a trivial adjunction of a cartesian category with itself.
#[derive(Clone)]
pub struct FnCart {
    atoms: Atoms,
}

impl FnCart {
    pub fn new(atoms: Atoms) -> FnCart {
        FnCart { atoms }
    }
}

impl MonCat for FnCart {
    fn atoms(&self) -> &Atoms {
        &self.atoms
    }

    fn id(&self, x: &TypeExpr) -> Mor {
        Mor::identity(x.clone())
    }

    fn compose(&self, f: &Mor, g: &Mor) -> Result<Mor, ModelError> {
        Mor::compose(f, g)
    }

    fn tensor_obj(&self, x: &TypeExpr, y: &TypeExpr) -> TypeExpr {
        TypeExpr::cart_prod2(x.clone(), y.clone())
    }

    fn unit_obj(&self) -> TypeExpr {
        TypeExpr::CartUnit
    }

    fn tensor_mor(&self, f: &Mor, g: &Mor) -> Result<Mor, ModelError> {
        let dom = self.tensor_obj(&f.dom, &g.dom);
        let cod = self.tensor_obj(&f.cod, &g.cod);
        Ok(tensor_mor_packed(dom, cod, f, g))
    }

    fn sym(&self, x: &TypeExpr, y: &TypeExpr) -> Mor {
        sym_packed(
            self.tensor_obj(x, y),
            self.tensor_obj(y, x),
            x.arity(),
            y.arity(),
        )
    }
}

impl CartCat for FnCart {
    fn pair(&self, f: &Mor, g: &Mor) -> Result<Mor, ModelError> {
        if f.dom != g.dom {
            return Err(ModelError::TypeMismatch {
                context: "pair".into(),
                expected: f.dom.to_string(),
                found: g.dom.to_string(),
            });
        }
        let cod = self.tensor_obj(&f.cod, &g.cod);
        let (f2, g2) = (f.clone(), g.clone());
        Ok(Mor::new(f.dom.clone(), cod, move |x, ctx| {
            let mut out = ImageSet::new();
            for a in f2.forward(x, ctx)? {
                for b in g2.forward(x, ctx)? {
                    out.insert(Element::tuple(vec![a.clone(), b]));
                }
            }
            Ok(out)
        }))
    }

    fn proj(&self, x: &TypeExpr, y: &TypeExpr, side: Side) -> Mor {
        let dom = self.tensor_obj(x, y);
        let cod = match side {
            Side::One => x.clone(),
            Side::Two => y.clone(),
        };
        let arities = [x.arity(), y.arity()];
        Mor::new(dom, cod, move |e, _| {
            let slots = e.unpack(&arities);
            Ok(singleton(match side {
                Side::One => slots[0].clone(),
                Side::Two => slots[1].clone(),
            }))
        })
    }

    fn terminal(&self, x: &TypeExpr) -> Mor {
        Mor::new(x.clone(), TypeExpr::CartUnit, |_, _| {
            Ok(singleton(Element::Star))
        })
    }

    fn hom_dom(&self, x: &TypeExpr) -> TypeExpr {
        x.clone()
    }

    fn obj_dom(&self, f: &Mor) -> TypeExpr {
        f.dom.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mor::{mor_equal, EqVerdict, EvalCtx};
    use crate::types::Budget;
    use std::collections::BTreeMap;

    fn atoms() -> Atoms {
        let mut m = BTreeMap::new();
        m.insert("a".to_string(), vec!["x".to_string()]);
        m.insert("b".to_string(), vec!["y".to_string(), "z".to_string()]);
        Atoms::new(m)
    }

    fn ms(names: &[&str]) -> Element {
        Element::multiset(names.iter().map(|n| Element::atom(n)).collect())
    }

    #[test]
    fn contraction_enumerates_all_splittings() {
        let c = contraction(&TypeExpr::atom("a"));
        let ctx = EvalCtx { cap: 12 };
        let img = c.forward(&ms(&["x", "x"]), &ctx).unwrap();
        let expect: ImageSet = [
            Element::tuple(vec![ms(&[]), ms(&["x", "x"])]),
            Element::tuple(vec![ms(&["x"]), ms(&["x"])]),
            Element::tuple(vec![ms(&["x", "x"]), ms(&[])]),
        ]
        .into_iter()
        .collect();
        assert_eq!(img, expect);
    }

    #[test]
    fn deriving_inserts_the_vector() {
        let d = deriving(&TypeExpr::atom("a"));
        let ctx = EvalCtx { cap: 12 };
        let input = Element::tuple(vec![ms(&["x"]), Element::atom("x")]);
        assert_eq!(d.forward(&input, &ctx).unwrap(), singleton(ms(&["x", "x"])));
    }

    #[test]
    fn dereliction_and_weakening_shapes() {
        let ctx = EvalCtx { cap: 12 };
        let d = dereliction(&TypeExpr::atom("a"));
        assert_eq!(
            d.forward(&ms(&["x"]), &ctx).unwrap(),
            singleton(Element::atom("x"))
        );
        assert!(d.forward(&ms(&[]), &ctx).unwrap().is_empty());
        assert!(d.forward(&ms(&["x", "x"]), &ctx).unwrap().is_empty());
        let w = weakening(&TypeExpr::atom("a"));
        assert_eq!(w.forward(&ms(&[]), &ctx).unwrap(), singleton(Element::Star));
        assert!(w.forward(&ms(&["x"]), &ctx).unwrap().is_empty());
    }

    #[test]
    fn promotion_of_dereliction_is_identity_up_to_budget() {
        // comonad law p;!d = id seen through the promotion program
        let a = TypeExpr::atom("b");
        let p = promote(&dereliction(&a)).unwrap();
        let id = Mor::identity(TypeExpr::bang(a));
        let v = mor_equal(&p, &id, &atoms(), &Budget::new(5)).unwrap();
        assert_eq!(v, EqVerdict::EqualUpToBudget);
    }

    #[test]
    fn promotion_always_hits_the_empty_partition() {
        let a = TypeExpr::atom("a");
        let k = weakening(&a); // !a -> 1, only [] has an image
        let p = promote(&Mor::compose(&k, &Mor::zero(TypeExpr::Unit, a.clone())).unwrap());
        // even a zero-ish map promotes [] to {[]}
        let ctx = EvalCtx { cap: 10 };
        let img = p.unwrap().forward(&ms(&[]), &ctx).unwrap();
        assert!(img.contains(&ms(&[])));
    }

    #[test]
    fn seely_splits_by_tag_and_inverts() {
        let (a, b) = (TypeExpr::atom("a"), TypeExpr::atom("b"));
        let s = seely(&a, &b);
        let s_inv = seely_inv(&a, &b);
        let lin = RelLin::new(atoms());
        let round = lin.compose(&s, &s_inv).unwrap();
        let id = Mor::identity(s.dom.clone());
        assert!(mor_equal(&round, &id, &atoms(), &Budget::new(5))
            .unwrap()
            .holds());
        let ctx = EvalCtx { cap: 12 };
        let mixed = Element::multiset(vec![
            Element::tag(Side::One, Element::atom("x")),
            Element::tag(Side::Two, Element::atom("y")),
        ]);
        assert_eq!(
            s.forward(&mixed, &ctx).unwrap(),
            singleton(Element::tuple(vec![ms(&["x"]), ms(&["y"])]))
        );
    }

    #[test]
    fn kleisli_composition_is_comonadic() {
        // d ;_K d = d since the identity of the co-Kleisli is dereliction
        let cart = KleisliCart::new(atoms());
        let a = TypeExpr::atom("a");
        let id = cart.id(&a);
        let both = cart.compose(&id, &id).unwrap();
        assert!(mor_equal(&both, &id, &atoms(), &Budget::new(5))
            .unwrap()
            .holds());
    }

    #[test]
    fn kleisli_pairing_projects_back() {
        let cart = KleisliCart::new(atoms());
        let (a, b) = (TypeExpr::atom("a"), TypeExpr::atom("b"));
        let f = cart.proj(&a, &b, Side::One);
        let g = cart.proj(&a, &b, Side::Two);
        let paired = cart.pair(&f, &g).unwrap();
        let p1 = cart.proj(&a, &b, Side::One);
        let back = cart.compose(&paired, &p1).unwrap();
        assert!(mor_equal(&back, &f, &atoms(), &Budget::new(4))
            .unwrap()
            .holds());
    }

    #[test]
    fn partitions_cover_small_bags() {
        let parts = partitions_nonempty(&[Element::atom("x"), Element::atom("x")]);
        // [x,x] -> {[x],[x]} and {[x,x]}
        assert_eq!(parts.len(), 2);
        let three = partitions_nonempty(&[
            Element::atom("x"),
            Element::atom("y"),
            Element::atom("z"),
        ]);
        assert_eq!(three.len(), 5, "Bell number of a 3-set");
    }
}
