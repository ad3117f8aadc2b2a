//! Linear-non-linear adjunctions and the structure derived from them.
//!
//! A model supplies the primitive data: the two categories, the strong
//! monoidal left adjoint `F`, the lax monoidal right adjoint `U`, unit and
//! counit. Contraction, weakening, the `!` comonad, its lax structure and
//! the Seely map are all *derived* here by the textbook composites; models
//! may override them with direct programs for speed, and the verification
//! suite cross-checks every override against its derivation.

use crate::cat::{CartCat, LinCat, MonCat};
use crate::mor::{singleton, ImageSet, ModelError, Mor};
use crate::rel::{self, FnCart, KleisliCart, RelLin};
use crate::types::{Atoms, Element, Side, TypeExpr, World};
use std::collections::BTreeMap;
use std::sync::Arc;

/// Shipped model corruptions for mutation-sensitivity testing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Mutation {
    /// Deriving transform forgets to insert the vector into the bag.
    #[serde(rename = "corrupt-deriving")]
    CorruptDeriving,
    /// Dereliction also accepts two-element bags.
    #[serde(rename = "corrupt-counit")]
    CorruptCounit,
    /// Contraction drops the splitting with an empty left half.
    #[serde(rename = "drop-contr-splitting")]
    DropContrSplitting,
}

/// A generator morphism declared in the model signature.
#[derive(Clone)]
pub struct Generator {
    pub world: World,
    pub mor: Mor,
}

/// The linear-non-linear adjunction contract.
pub trait LnlModel: Send + Sync {
    fn name(&self) -> &str;
    fn atoms(&self) -> &Atoms;
    fn cart(&self) -> &dyn CartCat;
    fn lin(&self) -> &dyn LinCat;

    fn f_obj(&self, x: &TypeExpr) -> TypeExpr;
    fn u_obj(&self, a: &TypeExpr) -> TypeExpr;

    /// Recover `X` from `F(X)`; errors when the object is not free.
    fn f_obj_inv(&self, fx: &TypeExpr) -> Result<TypeExpr, ModelError>;

    fn f_mor(&self, f: &Mor) -> Result<Mor, ModelError>;
    fn u_mor(&self, h: &Mor) -> Result<Mor, ModelError>;

    /// Unit `eta_X : X -> U(F(X))` of the adjunction (a C-morphism).
    fn eta(&self, x: &TypeExpr) -> Result<Mor, ModelError>;

    /// Counit `d_A : F(U(A)) -> A` (an L-morphism).
    fn counit(&self, a: &TypeExpr) -> Result<Mor, ModelError>;

    /// Strong structure `m_{X,Y} : F(X) (x) F(Y) -> F(X x Y)` and its unit
    /// `m_I : 1 -> F(I)`, with inverses.
    fn strong_m(&self, x: &TypeExpr, y: &TypeExpr) -> Result<Mor, ModelError>;
    fn strong_m_inv(&self, x: &TypeExpr, y: &TypeExpr) -> Result<Mor, ModelError>;
    fn strong_m_unit(&self) -> Result<Mor, ModelError>;
    fn strong_m_unit_inv(&self) -> Result<Mor, ModelError>;

    /// Lax structure `n_{A,B} : U(A) x U(B) -> U(A (x) B)` and
    /// `n_I : I -> U(1)`.
    fn lax_n(&self, a: &TypeExpr, b: &TypeExpr) -> Result<Mor, ModelError>;
    fn lax_n_unit(&self) -> Result<Mor, ModelError>;

    fn bang_obj(&self, a: &TypeExpr) -> TypeExpr {
        self.f_obj(&self.u_obj(a))
    }

    /// Contraction `c_X : F(X) -> F(X) (x) F(X)`, default `F(Delta); m^-1`.
    fn contraction(&self, x: &TypeExpr) -> Result<Mor, ModelError> {
        derived_contraction(self, x)
    }

    /// Weakening `w_X : F(X) -> 1`, default `F(I_X); m_I^-1`.
    fn weakening(&self, x: &TypeExpr) -> Result<Mor, ModelError> {
        derived_weakening(self, x)
    }

    /// Comonad comultiplication `p_A : !A -> !!A`, default `F(eta_{U(A)})`.
    fn promote(&self, a: &TypeExpr) -> Result<Mor, ModelError> {
        self.f_mor(&self.eta(&self.u_obj(a))?)
    }

    /// Functor action `!(h) = F(U(h))`.
    fn bang_mor(&self, h: &Mor) -> Result<Mor, ModelError> {
        self.f_mor(&self.u_mor(h)?)
    }

    /// Lax structure of `!`: `m⊗ = m_{U(A),U(B)}; F(n_{A,B})`.
    fn bang_lax(&self, a: &TypeExpr, b: &TypeExpr) -> Result<Mor, ModelError> {
        let m = self.strong_m(&self.u_obj(a), &self.u_obj(b))?;
        let fn_ab = self.f_mor(&self.lax_n(a, b)?)?;
        self.lin().compose(&m, &fn_ab)
    }

    /// Unit of the lax structure of `!`: `m_I; F(n_I)`.
    fn bang_lax_unit(&self) -> Result<Mor, ModelError> {
        self.lin()
            .compose(&self.strong_m_unit()?, &self.f_mor(&self.lax_n_unit()?)?)
    }

    /// Seely map `s_{A,B} : !(A (+) B) -> !A (x) !B`, default
    /// `c_{U(A(+)B)}; !p_1 (x) !p_2`.
    fn seely(&self, a: &TypeExpr, b: &TypeExpr) -> Result<Mor, ModelError> {
        derived_seely(self, a, b)
    }

    fn seely_inv(&self, _a: &TypeExpr, _b: &TypeExpr) -> Result<Mor, ModelError> {
        Err(ModelError::UnsupportedConstructor("SeelyInv".into()))
    }

    /// Deriving transform `∂_A : !A (x) A -> !A`, when the model has one.
    fn deriving(&self, _a: &TypeExpr) -> Result<Mor, ModelError> {
        Err(ModelError::UnsupportedConstructor("Deriving".into()))
    }

    fn generator(&self, name: &str) -> Result<&Generator, ModelError>;
    fn generators(&self) -> &BTreeMap<String, Generator>;
}

// ---------------------------------------------------------------------------
// derived composites, available independently of any override

pub fn derived_contraction<M: LnlModel + ?Sized>(
    m: &M,
    x: &TypeExpr,
) -> Result<Mor, ModelError> {
    let fd = m.f_mor(&m.cart().diag(x)?)?;
    m.lin().compose(&fd, &m.strong_m_inv(x, x)?)
}

pub fn derived_weakening<M: LnlModel + ?Sized>(m: &M, x: &TypeExpr) -> Result<Mor, ModelError> {
    let ft = m.f_mor(&m.cart().terminal(x))?;
    m.lin().compose(&ft, &m.strong_m_unit_inv()?)
}

pub fn derived_seely<M: LnlModel + ?Sized>(
    m: &M,
    a: &TypeExpr,
    b: &TypeExpr,
) -> Result<Mor, ModelError> {
    let ab = m.lin().biprod_obj(a, b)?;
    let c = m.contraction(&m.u_obj(&ab))?;
    let bp1 = m.bang_mor(&m.lin().biproj(Side::One, a, b)?)?;
    let bp2 = m.bang_mor(&m.lin().biproj(Side::Two, a, b)?)?;
    m.lin().compose(&c, &m.lin().tensor_mor(&bp1, &bp2)?)
}

/// Image of `f : F(X) -> A` through the adjunction: `f† = eta_X; U(f)`.
pub fn dagger<M: LnlModel + ?Sized>(m: &M, f: &Mor) -> Result<Mor, ModelError> {
    let x = m.f_obj_inv(&f.dom).map_err(|_| ModelError::DomainNotFree(f.dom.to_string()))?;
    m.cart().compose(&m.eta(&x)?, &m.u_mor(f)?)
}

/// Colax structure on `F` built from the lax structure on `U`:
/// `p_{X,Y} = F(eta_X x eta_Y); F(n); d` and `p_I = F(n_I); d_1`.
pub fn colax_from_lax<M: LnlModel + ?Sized>(
    m: &M,
    x: &TypeExpr,
    y: &TypeExpr,
) -> Result<Mor, ModelError> {
    let etas = m.cart().prod_mor(&m.eta(x)?, &m.eta(y)?)?;
    let n = m.lax_n(&m.f_obj(x), &m.f_obj(y))?;
    let inner = m.cart().compose(&etas, &n)?;
    let tens = m.lin().tensor_obj(&m.f_obj(x), &m.f_obj(y));
    m.lin().compose(&m.f_mor(&inner)?, &m.counit(&tens)?)
}

pub fn colax_from_lax_unit<M: LnlModel + ?Sized>(m: &M) -> Result<Mor, ModelError> {
    let f_ni = m.f_mor(&m.lax_n_unit()?)?;
    m.lin().compose(&f_ni, &m.counit(&m.lin().unit_obj())?)
}

/// The inverse direction of the lax/colax bijection:
/// `n_{A,B} = eta; U(p_{U(A),U(B)}); U(d_A (x) d_B)`.
pub fn lax_from_colax<M: LnlModel + ?Sized>(
    m: &M,
    a: &TypeExpr,
    b: &TypeExpr,
) -> Result<Mor, ModelError> {
    let (ua, ub) = (m.u_obj(a), m.u_obj(b));
    let eta = m.eta(&m.cart().tensor_obj(&ua, &ub))?;
    let p = colax_from_lax(m, &ua, &ub)?;
    let ds = m.lin().tensor_mor(&m.counit(a)?, &m.counit(b)?)?;
    m.cart()
        .compose_all(&[&eta, &m.u_mor(&p)?, &m.u_mor(&ds)?])
}

pub fn lax_from_colax_unit<M: LnlModel + ?Sized>(m: &M) -> Result<Mor, ModelError> {
    let eta = m.eta(&m.cart().unit_obj())?;
    m.cart().compose(&eta, &m.u_mor(&colax_from_lax_unit(m)?)?)
}

/// The comonad `! = F U` packaged with its counit, comultiplication and lax
/// monoidal structure.
pub struct DerivedBang {
    model: Arc<dyn LnlModel>,
}

impl DerivedBang {
    pub fn new(model: Arc<dyn LnlModel>) -> DerivedBang {
        DerivedBang { model }
    }

    pub fn on_obj(&self, a: &TypeExpr) -> TypeExpr {
        self.model.bang_obj(a)
    }

    pub fn on_mor(&self, h: &Mor) -> Result<Mor, ModelError> {
        self.model.bang_mor(h)
    }

    pub fn counit(&self, a: &TypeExpr) -> Result<Mor, ModelError> {
        self.model.counit(a)
    }

    pub fn comult(&self, a: &TypeExpr) -> Result<Mor, ModelError> {
        self.model.promote(a)
    }

    pub fn lax(&self, a: &TypeExpr, b: &TypeExpr) -> Result<Mor, ModelError> {
        self.model.bang_lax(a, b)
    }

    pub fn lax_unit(&self) -> Result<Mor, ModelError> {
        self.model.bang_lax_unit()
    }
}

// ---------------------------------------------------------------------------
// the relational model: L = relations, C = its co-Kleisli category

pub struct RelLnl {
    cart: KleisliCart,
    lin: RelLin,
    generators: BTreeMap<String, Generator>,
    mutation: Option<Mutation>,
}

impl RelLnl {
    pub fn new(atoms: Atoms) -> RelLnl {
        RelLnl::with_generators(atoms, BTreeMap::new(), None)
    }

    pub fn with_generators(
        atoms: Atoms,
        generators: BTreeMap<String, Generator>,
        mutation: Option<Mutation>,
    ) -> RelLnl {
        RelLnl {
            cart: KleisliCart::new(atoms.clone()),
            lin: RelLin::new(atoms),
            generators,
            mutation,
        }
    }
}

impl LnlModel for RelLnl {
    fn name(&self) -> &str {
        "rel"
    }

    fn atoms(&self) -> &Atoms {
        self.lin.atoms()
    }

    fn cart(&self) -> &dyn CartCat {
        &self.cart
    }

    fn lin(&self) -> &dyn LinCat {
        &self.lin
    }

    fn f_obj(&self, x: &TypeExpr) -> TypeExpr {
        TypeExpr::bang(x.clone())
    }

    fn u_obj(&self, a: &TypeExpr) -> TypeExpr {
        a.clone()
    }

    fn f_obj_inv(&self, fx: &TypeExpr) -> Result<TypeExpr, ModelError> {
        match fx {
            TypeExpr::Bang(inner) => Ok((**inner).clone()),
            other => Err(ModelError::DomainNotFree(other.to_string())),
        }
    }

    fn f_mor(&self, f: &Mor) -> Result<Mor, ModelError> {
        rel::promote(f)
    }

    fn u_mor(&self, h: &Mor) -> Result<Mor, ModelError> {
        Mor::compose(&rel::dereliction(&h.dom), h)
    }

    fn eta(&self, x: &TypeExpr) -> Result<Mor, ModelError> {
        Ok(Mor::identity(TypeExpr::bang(x.clone())))
    }

    fn counit(&self, a: &TypeExpr) -> Result<Mor, ModelError> {
        if self.mutation == Some(Mutation::CorruptCounit) {
            let d = rel::dereliction(a);
            return Ok(Mor::new(d.dom.clone(), d.cod.clone(), move |m, _| {
                match m.as_multiset() {
                    Some([only]) => Ok(singleton(only.clone())),
                    Some([first, _second]) => Ok(singleton(first.clone())),
                    _ => Ok(ImageSet::new()),
                }
            }));
        }
        Ok(rel::dereliction(a))
    }

    fn strong_m(&self, x: &TypeExpr, y: &TypeExpr) -> Result<Mor, ModelError> {
        Ok(rel::seely_inv(x, y))
    }

    fn strong_m_inv(&self, x: &TypeExpr, y: &TypeExpr) -> Result<Mor, ModelError> {
        Ok(rel::seely(x, y))
    }

    fn strong_m_unit(&self) -> Result<Mor, ModelError> {
        Ok(Mor::new(
            TypeExpr::Unit,
            TypeExpr::bang(TypeExpr::zero_atom()),
            |_, _| Ok(singleton(Element::multiset(vec![]))),
        ))
    }

    fn strong_m_unit_inv(&self) -> Result<Mor, ModelError> {
        Ok(Mor::new(
            TypeExpr::bang(TypeExpr::zero_atom()),
            TypeExpr::Unit,
            |_, _| Ok(singleton(Element::Star)),
        ))
    }

    fn lax_n(&self, a: &TypeExpr, b: &TypeExpr) -> Result<Mor, ModelError> {
        let s = self.seely(a, b)?;
        let dd = self
            .lin
            .tensor_mor(&self.counit(a)?, &self.counit(b)?)?;
        Mor::compose(&s, &dd)
    }

    fn lax_n_unit(&self) -> Result<Mor, ModelError> {
        Ok(Mor::new(
            TypeExpr::bang(TypeExpr::zero_atom()),
            TypeExpr::Unit,
            |m, _| {
                Ok(match m.as_multiset() {
                    Some([]) => singleton(Element::Star),
                    _ => ImageSet::new(),
                })
            },
        ))
    }

    fn contraction(&self, x: &TypeExpr) -> Result<Mor, ModelError> {
        if self.mutation == Some(Mutation::DropContrSplitting) {
            let c = rel::contraction(x);
            return Ok(Mor::new(c.dom.clone(), c.cod.clone(), move |m, ctx| {
                let mut img = c.forward(m, ctx)?;
                if m.as_multiset().map(|p| !p.is_empty()).unwrap_or(false) {
                    let dropped = Element::tuple(vec![Element::multiset(vec![]), m.clone()]);
                    img.remove(&dropped);
                }
                Ok(img)
            }));
        }
        Ok(rel::contraction(x))
    }

    fn weakening(&self, x: &TypeExpr) -> Result<Mor, ModelError> {
        Ok(rel::weakening(x))
    }

    fn seely(&self, a: &TypeExpr, b: &TypeExpr) -> Result<Mor, ModelError> {
        Ok(rel::seely(a, b))
    }

    fn seely_inv(&self, a: &TypeExpr, b: &TypeExpr) -> Result<Mor, ModelError> {
        Ok(rel::seely_inv(a, b))
    }

    fn deriving(&self, a: &TypeExpr) -> Result<Mor, ModelError> {
        if self.mutation == Some(Mutation::CorruptDeriving) {
            let d = rel::deriving(a);
            let arity = a.arity();
            return Ok(Mor::new(d.dom.clone(), d.cod.clone(), move |e, _| {
                let slots = e.unpack(&[1, arity]);
                Ok(singleton(slots[0].clone()))
            }));
        }
        Ok(rel::deriving(a))
    }

    fn generator(&self, name: &str) -> Result<&Generator, ModelError> {
        self.generators
            .get(name)
            .ok_or_else(|| ModelError::UnknownGenerator(name.to_string()))
    }

    fn generators(&self) -> &BTreeMap<String, Generator> {
        &self.generators
    }
}

// ---------------------------------------------------------------------------
// the trivial model: a cartesian category in adjunction with itself

pub struct TrivialLnl {
    cat: FnCart,
    generators: BTreeMap<String, Generator>,
}

impl TrivialLnl {
    pub fn new(atoms: Atoms) -> TrivialLnl {
        TrivialLnl::with_generators(atoms, BTreeMap::new())
    }

    pub fn with_generators(atoms: Atoms, generators: BTreeMap<String, Generator>) -> TrivialLnl {
        TrivialLnl {
            cat: FnCart::new(atoms),
            generators,
        }
    }
}

impl LnlModel for TrivialLnl {
    fn name(&self) -> &str {
        "trivial"
    }

    fn atoms(&self) -> &Atoms {
        self.cat.atoms()
    }

    fn cart(&self) -> &dyn CartCat {
        &self.cat
    }

    fn lin(&self) -> &dyn LinCat {
        &self.cat
    }

    fn f_obj(&self, x: &TypeExpr) -> TypeExpr {
        x.clone()
    }

    fn u_obj(&self, a: &TypeExpr) -> TypeExpr {
        a.clone()
    }

    fn f_obj_inv(&self, fx: &TypeExpr) -> Result<TypeExpr, ModelError> {
        Ok(fx.clone())
    }

    fn f_mor(&self, f: &Mor) -> Result<Mor, ModelError> {
        Ok(f.clone())
    }

    fn u_mor(&self, h: &Mor) -> Result<Mor, ModelError> {
        Ok(h.clone())
    }

    fn eta(&self, x: &TypeExpr) -> Result<Mor, ModelError> {
        Ok(Mor::identity(x.clone()))
    }

    fn counit(&self, a: &TypeExpr) -> Result<Mor, ModelError> {
        Ok(Mor::identity(a.clone()))
    }

    fn strong_m(&self, x: &TypeExpr, y: &TypeExpr) -> Result<Mor, ModelError> {
        Ok(Mor::identity(self.cat.tensor_obj(x, y)))
    }

    fn strong_m_inv(&self, x: &TypeExpr, y: &TypeExpr) -> Result<Mor, ModelError> {
        self.strong_m(x, y)
    }

    fn strong_m_unit(&self) -> Result<Mor, ModelError> {
        Ok(Mor::identity(TypeExpr::CartUnit))
    }

    fn strong_m_unit_inv(&self) -> Result<Mor, ModelError> {
        self.strong_m_unit()
    }

    fn lax_n(&self, a: &TypeExpr, b: &TypeExpr) -> Result<Mor, ModelError> {
        Ok(Mor::identity(self.cat.tensor_obj(a, b)))
    }

    fn lax_n_unit(&self) -> Result<Mor, ModelError> {
        Ok(Mor::identity(TypeExpr::CartUnit))
    }

    fn generator(&self, name: &str) -> Result<&Generator, ModelError> {
        self.generators
            .get(name)
            .ok_or_else(|| ModelError::UnknownGenerator(name.to_string()))
    }

    fn generators(&self) -> &BTreeMap<String, Generator> {
        &self.generators
    }
}

// FnCart is never additive, but it still needs to satisfy the LinCat
// surface so the trivial model can sit in the generic constructions.
impl LinCat for FnCart {
    fn biprod_obj(&self, _a: &TypeExpr, _b: &TypeExpr) -> Result<TypeExpr, ModelError> {
        Err(ModelError::UnsupportedConstructor("Biproduct".into()))
    }

    fn inj(&self, _side: Side, _l: &TypeExpr, _r: &TypeExpr) -> Result<Mor, ModelError> {
        Err(ModelError::UnsupportedConstructor("Inj".into()))
    }

    fn biproj(&self, _side: Side, _l: &TypeExpr, _r: &TypeExpr) -> Result<Mor, ModelError> {
        Err(ModelError::UnsupportedConstructor("BiProj".into()))
    }

    fn dist(&self, _a: &TypeExpr, _b: &TypeExpr, _c: &TypeExpr) -> Result<Mor, ModelError> {
        Err(ModelError::UnsupportedConstructor("Dist".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mor::{mor_equal, EqVerdict};
    use crate::types::Budget;

    fn atoms() -> Atoms {
        let mut m = BTreeMap::new();
        m.insert("a".to_string(), vec!["x".to_string()]);
        Atoms::new(m)
    }

    fn eq(m: &dyn LnlModel, f: &Mor, g: &Mor, n: u32) -> EqVerdict {
        mor_equal(f, g, m.atoms(), &Budget::new(n)).unwrap()
    }

    #[test]
    fn rel_triangle_identities_hold() {
        let m = RelLnl::new(atoms());
        let a = TypeExpr::atom("a");
        // F(eta_X); d_{F(X)} = id_{F(X)}
        let lhs = m
            .lin()
            .compose(&m.f_mor(&m.eta(&a).unwrap()).unwrap(), &m.counit(&m.f_obj(&a)).unwrap())
            .unwrap();
        assert!(eq(&m, &lhs, &Mor::identity(m.f_obj(&a)), 4).holds());
        // eta_{U(A)}; U(d_A) = id_{U(A)}
        let lhs2 = m
            .cart()
            .compose(&m.eta(&a).unwrap(), &m.u_mor(&m.counit(&a).unwrap()).unwrap())
            .unwrap();
        let id_c = m.cart().id(&a);
        assert!(eq(&m, &lhs2, &id_c, 4).holds());
    }

    #[test]
    fn rel_contraction_matches_its_derivation() {
        let m = RelLnl::new(atoms());
        let a = TypeExpr::atom("a");
        let direct = m.contraction(&a).unwrap();
        let derived = derived_contraction(&m, &a).unwrap();
        assert!(eq(&m, &direct, &derived, 4).holds());
        let dw = derived_weakening(&m, &a).unwrap();
        assert!(eq(&m, &m.weakening(&a).unwrap(), &dw, 4).holds());
    }

    #[test]
    fn rel_seely_matches_its_derivation() {
        let m = RelLnl::new(atoms());
        let (a, b) = (TypeExpr::atom("a"), TypeExpr::atom("a"));
        let direct = m.seely(&a, &b).unwrap();
        let derived = derived_seely(&m, &a, &b).unwrap();
        assert!(eq(&m, &direct, &derived, 4).holds());
    }

    #[test]
    fn dagger_of_counit_is_the_kleisli_identity() {
        let m = RelLnl::new(atoms());
        let a = TypeExpr::atom("a");
        let d = m.counit(&a).unwrap();
        let dag = dagger(&m, &d).unwrap();
        let id_c = m.cart().id(&a);
        assert!(eq(&m, &dag, &id_c, 4).holds());
    }

    #[test]
    fn colax_roundtrip_recovers_the_lax_structure() {
        let m = RelLnl::new(atoms());
        let (a, b) = (TypeExpr::atom("a"), TypeExpr::atom("a"));
        let n = m.lax_n(&a, &b).unwrap();
        let n2 = lax_from_colax(&m, &a, &b).unwrap();
        assert!(eq(&m, &n, &n2, 4).holds());
        let p = colax_from_lax(&m, &a, &b).unwrap();
        let m_inv = m.strong_m_inv(&a, &b).unwrap();
        assert!(eq(&m, &p, &m_inv, 4).holds());
    }

    #[test]
    fn trivial_contraction_is_the_diagonal() {
        let mut carriers = BTreeMap::new();
        carriers.insert("a".to_string(), vec!["x".to_string(), "y".to_string()]);
        let m = TrivialLnl::new(Atoms::new(carriers));
        let a = TypeExpr::cart_atom("a");
        let c = m.contraction(&a).unwrap();
        let diag = m.cart().diag(&a).unwrap();
        assert_eq!(eq(&m, &c, &diag, 4), EqVerdict::Equal);
    }

    #[test]
    fn corrupt_counit_breaks_a_triangle() {
        let m = RelLnl::with_generators(atoms(), BTreeMap::new(), Some(Mutation::CorruptCounit));
        let a = TypeExpr::atom("a");
        let lhs = m
            .lin()
            .compose(&m.f_mor(&m.eta(&a).unwrap()).unwrap(), &m.counit(&m.f_obj(&a)).unwrap())
            .unwrap();
        let v = eq(&m, &lhs, &Mor::identity(m.f_obj(&a)), 4);
        assert!(matches!(v, EqVerdict::Distinct(_)));
    }
}
