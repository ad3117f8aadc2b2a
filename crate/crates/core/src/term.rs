//! Typed combinator terms over an LNL signature.
//!
//! A `MorTerm` names a morphism of either world of the adjunction: the
//! cartesian constructors (`Pair`, `Proj`, `Diag`, `Eta`, `LaxN`, ...), the
//! linear ones (`Counit`, `Contr`, `Deriving`, `Seely`, ...), the functor
//! embeddings `FunF`/`FunU`, and structural glue (`Id`, `Compose`,
//! `Tensor`, `Sum`, ...) shared by both. Every well-typed term has a
//! unique domain and codomain computed from the signature's symbolic
//! object actions, without any model semantics.
//!
//! World inference is syntax-directed: most constructors are pinned to one
//! world, `Compose`/`Tensor`/`Sum`/... unify their children, and a term
//! that stays ambiguous resolves to the linear world.

use crate::lnl::LnlModel;
use crate::mor::{ModelError, Mor};
use crate::types::{Side, TypeExpr, World};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// How the two worlds share object syntax.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum WorldKind {
    /// The cartesian world is the co-Kleisli category of `!`: both worlds
    /// use linear object syntax, `F = !`, products are biproducts and the
    /// terminal object is the empty-carrier atom.
    #[serde(rename = "kleisli")]
    Kleisli,
    /// A cartesian category in trivial adjunction with itself.
    #[serde(rename = "cartesian")]
    Cartesian,
}

impl WorldKind {
    pub fn f_obj(&self, x: &TypeExpr) -> TypeExpr {
        match self {
            WorldKind::Kleisli => TypeExpr::bang(x.clone()),
            WorldKind::Cartesian => x.clone(),
        }
    }

    pub fn u_obj(&self, a: &TypeExpr) -> TypeExpr {
        a.clone()
    }

    pub fn bang_obj(&self, a: &TypeExpr) -> TypeExpr {
        self.f_obj(&self.u_obj(a))
    }

    pub fn c_prod(&self, x: &TypeExpr, y: &TypeExpr) -> TypeExpr {
        match self {
            WorldKind::Kleisli => TypeExpr::biproduct(x.clone(), y.clone()),
            WorldKind::Cartesian => TypeExpr::cart_prod2(x.clone(), y.clone()),
        }
    }

    pub fn c_unit(&self) -> TypeExpr {
        match self {
            WorldKind::Kleisli => TypeExpr::zero_atom(),
            WorldKind::Cartesian => TypeExpr::CartUnit,
        }
    }

    pub fn l_tensor(&self, a: &TypeExpr, b: &TypeExpr) -> TypeExpr {
        match self {
            WorldKind::Kleisli => TypeExpr::tensor2(a.clone(), b.clone()),
            WorldKind::Cartesian => TypeExpr::cart_prod2(a.clone(), b.clone()),
        }
    }

    pub fn l_unit(&self) -> TypeExpr {
        match self {
            WorldKind::Kleisli => TypeExpr::Unit,
            WorldKind::Cartesian => TypeExpr::CartUnit,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenSig {
    pub world: World,
    pub dom: TypeExpr,
    pub cod: TypeExpr,
}

/// Typing signature: the world conventions plus declared generators.
#[derive(Clone, Debug)]
pub struct Signature {
    pub kind: WorldKind,
    pub generators: BTreeMap<String, GenSig>,
}

impl Signature {
    pub fn new(kind: WorldKind) -> Signature {
        Signature {
            kind,
            generators: BTreeMap::new(),
        }
    }
}

#[derive(Clone, Debug, thiserror::Error, PartialEq, Eq)]
pub enum TypeError {
    #[error("unknown generator '{0}'")]
    UnknownGenerator(String),
    #[error("type mismatch at {position}: expected {expected}, found {found}")]
    TypeMismatch {
        position: String,
        expected: String,
        found: String,
    },
    #[error("non-flat type at {0}; canonicalize before use")]
    NonFlatType(String),
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum MorTerm {
    Id(TypeExpr),
    Compose(Box<MorTerm>, Box<MorTerm>),
    Tensor(Box<MorTerm>, Box<MorTerm>),
    Sym(TypeExpr, TypeExpr),
    Sum(Box<MorTerm>, Box<MorTerm>),
    Zero(TypeExpr, TypeExpr),
    Pair(Box<MorTerm>, Box<MorTerm>),
    Proj(Side, TypeExpr, TypeExpr),
    TerminalTo(TypeExpr),
    Diag(TypeExpr),
    Inj(Side, TypeExpr, TypeExpr),
    BiProj(Side, TypeExpr, TypeExpr),
    Dist(TypeExpr, TypeExpr, TypeExpr),
    Eta(TypeExpr),
    Counit(TypeExpr),
    FunF(Box<MorTerm>),
    FunU(Box<MorTerm>),
    LaxN(TypeExpr, TypeExpr),
    LaxNUnit,
    StrongM(TypeExpr, TypeExpr),
    StrongMInv(TypeExpr, TypeExpr),
    StrongMUnit,
    StrongMUnitInv,
    Contr(TypeExpr),
    Weak(TypeExpr),
    Promote(TypeExpr),
    BangLax(TypeExpr, TypeExpr),
    Deriving(TypeExpr),
    Seely(TypeExpr, TypeExpr),
    SeelyInv(TypeExpr, TypeExpr),
    Generator(String, TypeExpr, TypeExpr),
}

impl MorTerm {
    pub fn compose(a: MorTerm, b: MorTerm) -> MorTerm {
        MorTerm::Compose(Box::new(a), Box::new(b))
    }

    pub fn tensor(a: MorTerm, b: MorTerm) -> MorTerm {
        MorTerm::Tensor(Box::new(a), Box::new(b))
    }

    pub fn sum(a: MorTerm, b: MorTerm) -> MorTerm {
        MorTerm::Sum(Box::new(a), Box::new(b))
    }

    pub fn pair(a: MorTerm, b: MorTerm) -> MorTerm {
        MorTerm::Pair(Box::new(a), Box::new(b))
    }

    /// Left-to-right composite of a nonempty list.
    pub fn seq(terms: Vec<MorTerm>) -> MorTerm {
        let mut it = terms.into_iter();
        let first = it.next().expect("seq of empty list");
        it.fold(first, MorTerm::compose)
    }
}

/// Result of typechecking: canonical endpoints plus the inferred world,
/// `None` when the term is world-polymorphic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Typed {
    pub dom: TypeExpr,
    pub cod: TypeExpr,
    pub world: Option<World>,
}

impl Typed {
    /// Ambiguous terms resolve to the linear world.
    pub fn resolved_world(&self) -> World {
        self.world.unwrap_or(World::Linear)
    }
}

fn unify_worlds(
    position: &str,
    a: Option<World>,
    b: Option<World>,
) -> Result<Option<World>, TypeError> {
    match (a, b) {
        (None, w) | (w, None) => Ok(w),
        (Some(x), Some(y)) if x == y => Ok(Some(x)),
        (Some(x), Some(y)) => Err(TypeError::TypeMismatch {
            position: position.to_string(),
            expected: format!("world {x}"),
            found: format!("world {y}"),
        }),
    }
}

/// Computes the canonical (dom, cod) of a term. Object annotations are
/// auto-canonicalized, so `NonFlatType` is never raised for terms built
/// through the constructors.
pub fn typecheck(term: &MorTerm, sig: &Signature) -> Result<Typed, TypeError> {
    check_at(term, sig, "root")
}

fn check_at(term: &MorTerm, sig: &Signature, pos: &str) -> Result<Typed, TypeError> {
    let k = sig.kind;
    let t = |ty: &TypeExpr| ty.canonicalize();
    let ok = |dom: TypeExpr, cod: TypeExpr, world: Option<World>| Ok(Typed { dom, cod, world });
    match term {
        MorTerm::Id(ty) => ok(t(ty), t(ty), None),
        MorTerm::Compose(a, b) => {
            let ta = check_at(a, sig, &format!("{pos}.compose.lhs"))?;
            let tb = check_at(b, sig, &format!("{pos}.compose.rhs"))?;
            if ta.cod != tb.dom {
                return Err(TypeError::TypeMismatch {
                    position: format!("{pos}.compose"),
                    expected: ta.cod.to_string(),
                    found: tb.dom.to_string(),
                });
            }
            ok(ta.dom, tb.cod, unify_worlds(pos, ta.world, tb.world)?)
        }
        MorTerm::Tensor(a, b) => {
            let ta = check_at(a, sig, &format!("{pos}.tensor.lhs"))?;
            let tb = check_at(b, sig, &format!("{pos}.tensor.rhs"))?;
            // ambiguous operands tensor in the linear world
            let w = unify_worlds(pos, ta.world, tb.world)?.unwrap_or(World::Linear);
            let (dom, cod) = match w {
                World::Linear => (k.l_tensor(&ta.dom, &tb.dom), k.l_tensor(&ta.cod, &tb.cod)),
                World::Cartesian => (k.c_prod(&ta.dom, &tb.dom), k.c_prod(&ta.cod, &tb.cod)),
            };
            ok(dom, cod, Some(w))
        }
        MorTerm::Sym(x, y) => {
            let (x, y) = (t(x), t(y));
            ok(
                k.l_tensor(&x, &y),
                k.l_tensor(&y, &x),
                Some(World::Linear),
            )
        }
        MorTerm::Sum(a, b) => {
            let ta = check_at(a, sig, &format!("{pos}.sum.lhs"))?;
            let tb = check_at(b, sig, &format!("{pos}.sum.rhs"))?;
            if ta.dom != tb.dom || ta.cod != tb.cod {
                return Err(TypeError::TypeMismatch {
                    position: format!("{pos}.sum"),
                    expected: format!("{} -> {}", ta.dom, ta.cod),
                    found: format!("{} -> {}", tb.dom, tb.cod),
                });
            }
            ok(ta.dom, ta.cod, unify_worlds(pos, ta.world, tb.world)?)
        }
        MorTerm::Zero(dom, cod) => ok(t(dom), t(cod), None),
        MorTerm::Pair(a, b) => {
            let ta = check_at(a, sig, &format!("{pos}.pair.lhs"))?;
            let tb = check_at(b, sig, &format!("{pos}.pair.rhs"))?;
            let w = unify_worlds(pos, ta.world, tb.world)?;
            let w = unify_worlds(pos, w, Some(World::Cartesian))?;
            if ta.dom != tb.dom {
                return Err(TypeError::TypeMismatch {
                    position: format!("{pos}.pair"),
                    expected: ta.dom.to_string(),
                    found: tb.dom.to_string(),
                });
            }
            ok(ta.dom, k.c_prod(&ta.cod, &tb.cod), w)
        }
        MorTerm::Proj(side, x, y) => {
            let (x, y) = (t(x), t(y));
            let cod = match side {
                Side::One => x.clone(),
                Side::Two => y.clone(),
            };
            ok(k.c_prod(&x, &y), cod, Some(World::Cartesian))
        }
        MorTerm::TerminalTo(x) => ok(t(x), k.c_unit(), Some(World::Cartesian)),
        MorTerm::Diag(x) => {
            let x = t(x);
            ok(x.clone(), k.c_prod(&x, &x), Some(World::Cartesian))
        }
        MorTerm::Inj(side, l, r) => {
            let (l, r) = (t(l), t(r));
            let dom = match side {
                Side::One => l.clone(),
                Side::Two => r.clone(),
            };
            ok(dom, TypeExpr::biproduct(l, r), Some(World::Linear))
        }
        MorTerm::BiProj(side, l, r) => {
            let (l, r) = (t(l), t(r));
            let cod = match side {
                Side::One => l.clone(),
                Side::Two => r.clone(),
            };
            ok(TypeExpr::biproduct(l, r), cod, Some(World::Linear))
        }
        MorTerm::Dist(a, b, c) => {
            let (a, b, c) = (t(a), t(b), t(c));
            ok(
                k.l_tensor(&a, &TypeExpr::biproduct(b.clone(), c.clone())),
                TypeExpr::biproduct(k.l_tensor(&a, &b), k.l_tensor(&a, &c)),
                Some(World::Linear),
            )
        }
        MorTerm::Eta(x) => {
            let x = t(x);
            ok(
                x.clone(),
                k.u_obj(&k.f_obj(&x)),
                Some(World::Cartesian),
            )
        }
        MorTerm::Counit(a) => {
            let a = t(a);
            ok(k.bang_obj(&a), a, Some(World::Linear))
        }
        MorTerm::FunF(inner) => {
            let ti = check_at(inner, sig, &format!("{pos}.funF"))?;
            unify_worlds(pos, ti.world, Some(World::Cartesian))?;
            ok(k.f_obj(&ti.dom), k.f_obj(&ti.cod), Some(World::Linear))
        }
        MorTerm::FunU(inner) => {
            let ti = check_at(inner, sig, &format!("{pos}.funU"))?;
            unify_worlds(pos, ti.world, Some(World::Linear))?;
            ok(k.u_obj(&ti.dom), k.u_obj(&ti.cod), Some(World::Cartesian))
        }
        MorTerm::LaxN(a, b) => {
            let (a, b) = (t(a), t(b));
            ok(
                k.c_prod(&k.u_obj(&a), &k.u_obj(&b)),
                k.u_obj(&k.l_tensor(&a, &b)),
                Some(World::Cartesian),
            )
        }
        MorTerm::LaxNUnit => ok(k.c_unit(), k.u_obj(&k.l_unit()), Some(World::Cartesian)),
        MorTerm::StrongM(x, y) => {
            let (x, y) = (t(x), t(y));
            ok(
                k.l_tensor(&k.f_obj(&x), &k.f_obj(&y)),
                k.f_obj(&k.c_prod(&x, &y)),
                Some(World::Linear),
            )
        }
        MorTerm::StrongMInv(x, y) => {
            let (x, y) = (t(x), t(y));
            ok(
                k.f_obj(&k.c_prod(&x, &y)),
                k.l_tensor(&k.f_obj(&x), &k.f_obj(&y)),
                Some(World::Linear),
            )
        }
        MorTerm::StrongMUnit => ok(k.l_unit(), k.f_obj(&k.c_unit()), Some(World::Linear)),
        MorTerm::StrongMUnitInv => ok(k.f_obj(&k.c_unit()), k.l_unit(), Some(World::Linear)),
        MorTerm::Contr(x) => {
            let fx = k.f_obj(&t(x));
            ok(
                fx.clone(),
                k.l_tensor(&fx, &fx),
                Some(World::Linear),
            )
        }
        MorTerm::Weak(x) => ok(k.f_obj(&t(x)), k.l_unit(), Some(World::Linear)),
        MorTerm::Promote(a) => {
            let bang = k.bang_obj(&t(a));
            ok(bang.clone(), k.bang_obj(&bang), Some(World::Linear))
        }
        MorTerm::BangLax(a, b) => {
            let (a, b) = (t(a), t(b));
            ok(
                k.l_tensor(&k.bang_obj(&a), &k.bang_obj(&b)),
                k.bang_obj(&k.l_tensor(&a, &b)),
                Some(World::Linear),
            )
        }
        MorTerm::Deriving(a) => {
            let a = t(a);
            let bang = k.bang_obj(&a);
            ok(k.l_tensor(&bang, &a), bang, Some(World::Linear))
        }
        MorTerm::Seely(a, b) => {
            let (a, b) = (t(a), t(b));
            ok(
                k.bang_obj(&TypeExpr::biproduct(a.clone(), b.clone())),
                k.l_tensor(&k.bang_obj(&a), &k.bang_obj(&b)),
                Some(World::Linear),
            )
        }
        MorTerm::SeelyInv(a, b) => {
            let (a, b) = (t(a), t(b));
            ok(
                k.l_tensor(&k.bang_obj(&a), &k.bang_obj(&b)),
                k.bang_obj(&TypeExpr::biproduct(a.clone(), b.clone())),
                Some(World::Linear),
            )
        }
        MorTerm::Generator(name, dom, cod) => {
            let decl = sig
                .generators
                .get(name)
                .ok_or_else(|| TypeError::UnknownGenerator(name.clone()))?;
            let (dom, cod) = (t(dom), t(cod));
            if decl.dom.canonicalize() != dom || decl.cod.canonicalize() != cod {
                return Err(TypeError::TypeMismatch {
                    position: format!("{pos}.generator({name})"),
                    expected: format!("{} -> {}", decl.dom, decl.cod),
                    found: format!("{dom} -> {cod}"),
                });
            }
            ok(dom, cod, Some(decl.world))
        }
    }
}

fn world_of(term: &MorTerm, sig: &Signature) -> Option<World> {
    check_at(term, sig, "world").ok().and_then(|t| t.world)
}

/// Interprets a typechecked term in a model, as a morphism of the resolved
/// world. Evaluation is a functor: composition, identities, tensors and
/// sums go to their model counterparts.
pub fn eval(term: &MorTerm, model: &dyn LnlModel, sig: &Signature) -> Result<Mor, ModelError> {
    let typed = typecheck(term, sig).map_err(|e| ModelError::TypeMismatch {
        context: "eval".into(),
        expected: "well-typed term".into(),
        found: e.to_string(),
    })?;
    eval_in(term, model, sig, typed.resolved_world())
}

fn eval_in(
    term: &MorTerm,
    model: &dyn LnlModel,
    sig: &Signature,
    w: World,
) -> Result<Mor, ModelError> {
    let child_world = |t: &MorTerm| world_of(t, sig).unwrap_or(w);
    match term {
        MorTerm::Id(ty) => Ok(match w {
            World::Cartesian => model.cart().id(&ty.canonicalize()),
            World::Linear => model.lin().id(&ty.canonicalize()),
        }),
        MorTerm::Compose(a, b) => {
            let fa = eval_in(a, model, sig, child_world(a))?;
            let fb = eval_in(b, model, sig, child_world(b))?;
            match w {
                World::Cartesian => model.cart().compose(&fa, &fb),
                World::Linear => model.lin().compose(&fa, &fb),
            }
        }
        MorTerm::Tensor(a, b) => {
            let wa = world_of(a, sig);
            let wb = world_of(b, sig);
            let w = wa.or(wb).unwrap_or(World::Linear);
            let fa = eval_in(a, model, sig, w)?;
            let fb = eval_in(b, model, sig, w)?;
            match w {
                World::Cartesian => model.cart().prod_mor(&fa, &fb),
                World::Linear => model.lin().tensor_mor(&fa, &fb),
            }
        }
        MorTerm::Sym(x, y) => {
            let (x, y) = (x.canonicalize(), y.canonicalize());
            Ok(model.lin().sym(&x, &y))
        }
        MorTerm::Sum(a, b) => {
            let fa = eval_in(a, model, sig, child_world(a))?;
            let fb = eval_in(b, model, sig, child_world(b))?;
            match w {
                World::Cartesian => model.cart().sum(&fa, &fb),
                World::Linear => model.lin().sum(&fa, &fb),
            }
        }
        MorTerm::Zero(dom, cod) => {
            let (dom, cod) = (dom.canonicalize(), cod.canonicalize());
            match w {
                World::Cartesian => {
                    let hom_dom = model.cart().hom_dom(&dom);
                    model.cart().zero(&hom_dom, &cod)
                }
                World::Linear => model.lin().zero(&dom, &cod),
            }
        }
        MorTerm::Pair(a, b) => {
            let fa = eval_in(a, model, sig, World::Cartesian)?;
            let fb = eval_in(b, model, sig, World::Cartesian)?;
            model.cart().pair(&fa, &fb)
        }
        MorTerm::Proj(side, x, y) => Ok(model
            .cart()
            .proj(&x.canonicalize(), &y.canonicalize(), *side)),
        MorTerm::TerminalTo(x) => Ok(model.cart().terminal(&x.canonicalize())),
        MorTerm::Diag(x) => model.cart().diag(&x.canonicalize()),
        MorTerm::Inj(side, l, r) => model.lin().inj(*side, &l.canonicalize(), &r.canonicalize()),
        MorTerm::BiProj(side, l, r) => {
            model
                .lin()
                .biproj(*side, &l.canonicalize(), &r.canonicalize())
        }
        MorTerm::Dist(a, b, c) => {
            model
                .lin()
                .dist(&a.canonicalize(), &b.canonicalize(), &c.canonicalize())
        }
        MorTerm::Eta(x) => model.eta(&x.canonicalize()),
        MorTerm::Counit(a) => model.counit(&a.canonicalize()),
        MorTerm::FunF(inner) => {
            let fi = eval_in(inner, model, sig, World::Cartesian)?;
            model.f_mor(&fi)
        }
        MorTerm::FunU(inner) => {
            let fi = eval_in(inner, model, sig, World::Linear)?;
            model.u_mor(&fi)
        }
        MorTerm::LaxN(a, b) => model.lax_n(&a.canonicalize(), &b.canonicalize()),
        MorTerm::LaxNUnit => model.lax_n_unit(),
        MorTerm::StrongM(x, y) => model.strong_m(&x.canonicalize(), &y.canonicalize()),
        MorTerm::StrongMInv(x, y) => model.strong_m_inv(&x.canonicalize(), &y.canonicalize()),
        MorTerm::StrongMUnit => model.strong_m_unit(),
        MorTerm::StrongMUnitInv => model.strong_m_unit_inv(),
        MorTerm::Contr(x) => model.contraction(&x.canonicalize()),
        MorTerm::Weak(x) => model.weakening(&x.canonicalize()),
        MorTerm::Promote(a) => model.promote(&a.canonicalize()),
        MorTerm::BangLax(a, b) => model.bang_lax(&a.canonicalize(), &b.canonicalize()),
        MorTerm::Deriving(a) => model.deriving(&a.canonicalize()),
        MorTerm::Seely(a, b) => model.seely(&a.canonicalize(), &b.canonicalize()),
        MorTerm::SeelyInv(a, b) => model.seely_inv(&a.canonicalize(), &b.canonicalize()),
        MorTerm::Generator(name, _, _) => Ok(model.generator(name)?.mor.clone()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lnl::RelLnl;
    use crate::mor::{mor_equal, EqVerdict};
    use crate::types::{Atoms, Budget, Element};

    fn sig() -> Signature {
        Signature::new(WorldKind::Kleisli)
    }

    fn atoms() -> Atoms {
        let mut m = BTreeMap::new();
        m.insert("a".to_string(), vec!["p".to_string()]);
        m.insert("b".to_string(), vec!["q".to_string()]);
        Atoms::new(m)
    }

    #[test]
    fn identity_types_trivially() {
        let ty = typecheck(&MorTerm::Id(TypeExpr::atom("a")), &sig()).unwrap();
        assert_eq!(ty.dom, TypeExpr::atom("a"));
        assert_eq!(ty.cod, TypeExpr::atom("a"));
        assert_eq!(ty.world, None);
    }

    #[test]
    fn deriving_then_weakening_types_to_the_constant_rule_shape() {
        let a = TypeExpr::atom("a");
        let term = MorTerm::compose(MorTerm::Deriving(a.clone()), MorTerm::Weak(a.clone()));
        let ty = typecheck(&term, &sig()).unwrap();
        assert_eq!(
            ty.dom,
            TypeExpr::tensor2(TypeExpr::bang(a.clone()), a.clone())
        );
        assert_eq!(ty.cod, TypeExpr::Unit);
        assert_eq!(ty.world, Some(World::Linear));
    }

    #[test]
    fn composing_counit_with_foreign_identity_fails() {
        let term = MorTerm::compose(
            MorTerm::Counit(TypeExpr::atom("a")),
            MorTerm::Id(TypeExpr::atom("b")),
        );
        match typecheck(&term, &sig()) {
            Err(TypeError::TypeMismatch {
                expected, found, ..
            }) => {
                assert_eq!(expected, "a");
                assert_eq!(found, "b");
            }
            other => panic!("expected mismatch, got {other:?}"),
        }
    }

    #[test]
    fn non_canonical_annotations_are_auto_canonicalized() {
        let messy = TypeExpr::Tensor(vec![
            TypeExpr::Tensor(vec![TypeExpr::atom("a"), TypeExpr::Unit]),
            TypeExpr::atom("b"),
        ]);
        let ty = typecheck(&MorTerm::Id(messy), &sig()).unwrap();
        assert_eq!(ty.dom, TypeExpr::tensor2(TypeExpr::atom("a"), TypeExpr::atom("b")));
    }

    #[test]
    fn unknown_generator_is_reported_by_name() {
        let term = MorTerm::Generator("f".into(), TypeExpr::atom("a"), TypeExpr::atom("a"));
        assert_eq!(
            typecheck(&term, &sig()),
            Err(TypeError::UnknownGenerator("f".into()))
        );
    }

    #[test]
    fn eval_is_functorial_on_identities_and_sums() {
        let model = RelLnl::new(atoms());
        let s = sig();
        let a = TypeExpr::atom("a");
        let id_twice = MorTerm::compose(MorTerm::Id(a.clone()), MorTerm::Id(a.clone()));
        let m1 = eval(&id_twice, &model, &s).unwrap();
        let m2 = eval(&MorTerm::Id(a.clone()), &model, &s).unwrap();
        assert!(mor_equal(&m1, &m2, &atoms(), &Budget::new(4))
            .unwrap()
            .holds());

        let z = MorTerm::Zero(a.clone(), a.clone());
        let zz = eval(&MorTerm::sum(z.clone(), z.clone()), &model, &s).unwrap();
        let z0 = eval(&z, &model, &s).unwrap();
        assert_eq!(
            mor_equal(&zz, &z0, &atoms(), &Budget::new(4)).unwrap(),
            EqVerdict::Equal
        );
    }

    #[test]
    fn eval_counit_is_dereliction() {
        let model = RelLnl::new(atoms());
        let s = sig();
        let d = eval(&MorTerm::Counit(TypeExpr::atom("a")), &model, &s).unwrap();
        let ctx = crate::mor::EvalCtx { cap: 10 };
        let img = d
            .forward(&Element::multiset(vec![Element::atom("p")]), &ctx)
            .unwrap();
        assert_eq!(img, crate::mor::singleton(Element::atom("p")));
        assert!(d
            .forward(&Element::multiset(vec![]), &ctx)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn term_json_round_trips_constructor_tagged() {
        let a = TypeExpr::atom("a");
        let term = MorTerm::compose(MorTerm::Deriving(a.clone()), MorTerm::Counit(a));
        let js = serde_json::to_string(&term).unwrap();
        assert!(js.contains("\"Compose\""));
        assert!(js.contains("\"Deriving\""));
        let back: MorTerm = serde_json::from_str(&js).unwrap();
        assert_eq!(back, term);
        assert_eq!(serde_json::to_string(&back).unwrap(), js);
    }
}
