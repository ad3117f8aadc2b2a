//! The differential layer: linear tangent functors and everything they
//! induce.
//!
//! A linear tangent functor is a product-preserving section of the linear
//! simple fibration sending `U(A)` to the fibre `A`. From it this module
//! derives the vertical differential `D`, partial differentials through
//! the canonical injections `i_1`/`i_2`, the context-aware family `scriptD`
//! and the fibre deriving transform `Sigma scriptD; mu`, plus the Cartesian
//! differential operator obtained by comprehension.
//!
//! The Kleisli construction interprets every co-Kleisli map `f : !A -> B`
//! as the pair `(f, deriving; f)`, which is how a deriving transform
//! induces a tangent functor.

use crate::fib::{
    banana, comprehension, fib_eta, fibre_inj, ls_compose, ls_pair, reindex, sigma_counit,
    sigma_map, vert_compose, LsMor, LsObj, VertLs,
};
use crate::lnl::LnlModel;
use crate::mor::{ImageSet, ModelError, Mor};
use crate::types::{enumerate_elements, Budget, Element, Side, TypeExpr};
use std::collections::BTreeMap;
use std::sync::{Arc, RwLock};

type TangentAction = dyn Fn(&dyn LnlModel, &Mor) -> Result<LsMor, ModelError> + Send + Sync;
type Lambda = dyn Fn(&TypeExpr) -> TypeExpr + Send + Sync;

/// A linear tangent functor: object assignment `lambda` plus the section
/// action on base morphisms.
pub struct TangentFunctor {
    model: Arc<dyn LnlModel>,
    lambda: Box<Lambda>,
    action: Box<TangentAction>,
    iso_cache: RwLock<BTreeMap<(TypeExpr, TypeExpr), (VertLs, VertLs)>>,
}

impl TangentFunctor {
    pub fn new(
        model: Arc<dyn LnlModel>,
        lambda: Box<Lambda>,
        action: Box<TangentAction>,
    ) -> TangentFunctor {
        TangentFunctor {
            model,
            lambda,
            action,
            iso_cache: RwLock::new(BTreeMap::new()),
        }
    }

    pub fn model(&self) -> &dyn LnlModel {
        self.model.as_ref()
    }

    pub fn lambda(&self, x: &TypeExpr) -> TypeExpr {
        (self.lambda)(x)
    }

    pub fn obj(&self, x: &TypeExpr) -> LsObj {
        LsObj::new(x.clone(), self.lambda(x))
    }

    pub fn apply(&self, f: &Mor) -> Result<LsMor, ModelError> {
        (self.action)(self.model.as_ref(), f)
    }

    /// `phi_{X,Y} = <T(pi_1), T(pi_2)>`, vertical over `X x Y` by t.1.
    pub fn phi(&self, x: &TypeExpr, y: &TypeExpr) -> Result<VertLs, ModelError> {
        Ok(self.phi_pair(x, y)?.0)
    }

    pub fn phi_inv(&self, x: &TypeExpr, y: &TypeExpr) -> Result<VertLs, ModelError> {
        Ok(self.phi_pair(x, y)?.1)
    }

    fn phi_pair(&self, x: &TypeExpr, y: &TypeExpr) -> Result<(VertLs, VertLs), ModelError> {
        let key = (x.clone(), y.clone());
        if let Some(hit) = self.iso_cache.read().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let m = self.model();
        let tp1 = self.apply(&m.cart().proj(x, y, Side::One))?;
        let tp2 = self.apply(&m.cart().proj(x, y, Side::Two))?;
        let paired = ls_pair(m, &tp1, &tp2)?;
        let base = m.cart().tensor_obj(x, y);
        let phi = VertLs::new(
            base,
            self.lambda(&m.cart().tensor_obj(x, y)),
            m.lin().biprod_obj(&self.lambda(x), &self.lambda(y))?,
            paired.u,
        );
        // The inverse is the context-graded converse; when phi is not an
        // isomorphism the candidate fails the t.1 check in the suite.
        let inv = converse_vertical(m, &phi);
        let out = (phi, inv);
        self.iso_cache.write().unwrap().insert(key, out.clone());
        Ok(out)
    }
}

/// Context-graded converse of a vertical morphism: under a fixed context,
/// `b` maps to every `a` whose image contains it. For the isos produced by
/// product preservation this is the two-sided inverse.
pub fn converse_vertical(m: &dyn LnlModel, v: &VertLs) -> VertLs {
    let atoms = m.atoms().clone();
    let dom_fib = v.dom_fib.clone();
    let u = v.u.clone();
    let ctx_arity = m.f_obj(&v.base).arity();
    let cod_arity = v.cod_fib.arity();
    let dom = m.lin().tensor_obj(&m.f_obj(&v.base), &v.cod_fib);
    let u_inv = Mor::new(dom, dom_fib.clone(), move |e, ctx| {
        let slots = e.unpack(&[ctx_arity, cod_arity]);
        let (c, b) = (&slots[0], &slots[1]);
        let budget = Budget {
            n: ctx.cap,
            max_elements: u64::MAX,
            seed: 0,
            cap: Some(ctx.cap),
        };
        let mut out = ImageSet::new();
        for a in enumerate_elements(&dom_fib, &atoms, &budget)? {
            let probe = Element::tuple(vec![c.clone(), a.clone()]);
            if u.forward(&probe, ctx)?.contains(b) {
                out.insert(a);
            }
        }
        Ok(out)
    });
    VertLs::new(v.base.clone(), v.cod_fib.clone(), v.dom_fib.clone(), u_inv)
}

/// Builds the tangent functor of a Kleisli-form model from its deriving
/// transform: `T(A) = (A, A)` and `T(f) = (f, deriving_A; f)`.
pub fn tangent_from_dsc(model: Arc<dyn LnlModel>) -> TangentFunctor {
    let action = |m: &dyn LnlModel, f: &Mor| -> Result<LsMor, ModelError> {
        let x = m.cart().obj_dom(f);
        let y = m.cart().obj_cod(f);
        let u = m.lin().compose(&m.deriving(&x)?, f)?;
        Ok(LsMor {
            dom: LsObj::new(x.clone(), x),
            cod: LsObj::new(y.clone(), y),
            f: f.clone(),
            u,
        })
    };
    TangentFunctor::new(
        model,
        Box::new(|x: &TypeExpr| x.clone()),
        Box::new(action),
    )
}

/// The canonical injections `i^{X,Y}_j = inj_j; phi^{-1}`, vertical over
/// `X x Y`.
pub fn partial_i(
    t: &TangentFunctor,
    x: &TypeExpr,
    y: &TypeExpr,
    side: Side,
) -> Result<VertLs, ModelError> {
    let m = t.model();
    let base = m.cart().tensor_obj(x, y);
    let inj = fibre_inj(m, &base, side, &t.lambda(x), &t.lambda(y))?;
    vert_compose(m, &inj, &t.phi_inv(x, y)?)
}

/// Partial tangent `T_j(f) = i_j; T(f)`.
pub fn partial_tangent(
    t: &TangentFunctor,
    x: &TypeExpr,
    y: &TypeExpr,
    f: &Mor,
    side: Side,
) -> Result<LsMor, ModelError> {
    let m = t.model();
    let i = partial_i(t, x, y, side)?.to_ls(m);
    ls_compose(m, &i, &t.apply(f)?)
}

/// The differential: the vertical component of `T(f)`, i.e. `(id, u)` for
/// `T(f) = (f, u)`. Uniqueness of this factorization through the chosen
/// lift is asserted separately by exhaustive search in the suite.
pub fn differential_d(t: &TangentFunctor, f: &Mor) -> Result<VertLs, ModelError> {
    let m = t.model();
    let tf = t.apply(f)?;
    let x = m.cart().obj_dom(f);
    let y = m.cart().obj_cod(f);
    let lam_x = t.lambda(&x);
    Ok(VertLs::new(x, lam_x, t.lambda(&y), tf.u))
}

/// Partial differential `D_j(f) = i_j; D(f)` for `f : X x Y -> Z`.
pub fn partial_d(
    t: &TangentFunctor,
    x: &TypeExpr,
    y: &TypeExpr,
    f: &Mor,
    side: Side,
) -> Result<VertLs, ModelError> {
    let m = t.model();
    vert_compose(m, &partial_i(t, x, y, side)?, &differential_d(t, f)?)
}

/// `scriptD^X_Y = D_2({eta_(X,Y)}; pi_2) : (X x Y, lambda(Y)) -> (X x Y, F(Y))`.
pub fn script_d(t: &TangentFunctor, x: &TypeExpr, y: &TypeExpr) -> Result<VertLs, ModelError> {
    let m = t.model();
    let eta = fib_eta(m, x, y)?;
    let compr = comprehension(m, &eta)?;
    let p2 = m.cart().proj(x, &m.u_obj(&m.f_obj(y)), Side::Two);
    let g = m.cart().compose(&compr, &p2)?;
    partial_d(t, x, y, &g, Side::Two)
}

/// The fibre deriving transform
/// `Sigma_(X,A) scriptD^X_A; mu : (X, !A (x) A) -> (X, !A)`.
pub fn fibre_deriving(
    t: &TangentFunctor,
    x: &TypeExpr,
    a: &TypeExpr,
) -> Result<VertLs, ModelError> {
    let m = t.model();
    let j = m.u_obj(a);
    let d = script_d(t, x, &j)?;
    let sd = sigma_map(m, x, &j, &d)?;
    let mu = sigma_counit(m, x, &j, &m.bang_obj(a))?;
    vert_compose(m, &sd, &mu)
}

/// The generalised form `Sigma_(X,Y) scriptD^X_Y; mu`, typed
/// `(X, F(Y) (x) lambda(Y)) -> (X, F(Y))`; restricting `Y = U(A)` recovers
/// [`fibre_deriving`].
pub fn generalized_fibre_deriving(
    t: &TangentFunctor,
    x: &TypeExpr,
    y: &TypeExpr,
) -> Result<VertLs, ModelError> {
    let m = t.model();
    let d = script_d(t, x, y)?;
    let sd = sigma_map(m, x, y, &d)?;
    let mu = sigma_counit(m, x, y, &m.f_obj(y))?;
    vert_compose(m, &sd, &mu)
}

/// Cartesian differential operator by comprehension:
/// `D_x[f] = (|T(f)|); pi_2 : X x U(lambda X) -> U(lambda Y)`.
pub fn d_times(t: &TangentFunctor, f: &Mor) -> Result<Mor, ModelError> {
    let m = t.model();
    let tf = t.apply(f)?;
    let body = banana(m, &tf)?;
    let y = m.cart().obj_cod(f);
    let proj = m.cart().proj(&y, &m.u_obj(&t.lambda(&y)), Side::Two);
    m.cart().compose(&body, &proj)
}

/// Kleisli-form route to the same operator:
/// `s_{X,X}; id (x) d; deriving; f` as a map `!(X (+) X) -> Y`.
pub fn d_times_kleisli(m: &dyn LnlModel, f: &Mor) -> Result<Mor, ModelError> {
    let x = m.cart().obj_dom(f);
    let s = m.seely(&x, &x)?;
    let idd = m
        .lin()
        .tensor_mor(&m.lin().id(&m.bang_obj(&x)), &m.counit(&x)?)?;
    m.lin().compose_all(&[&s, &idd, &m.deriving(&x)?, f])
}

/// Right leg of the chain law `D(f;g) = D(f); f^* D(g)`.
pub fn chain_rhs(t: &TangentFunctor, f: &Mor, g: &Mor) -> Result<VertLs, ModelError> {
    let m = t.model();
    let df = differential_d(t, f)?;
    let dg = differential_d(t, g)?;
    vert_compose(m, &df, &reindex(m, f, &dg)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fib::vert_equal;
    use crate::lnl::RelLnl;
    use crate::mor::mor_equal;
    use crate::rel;
    use crate::types::Atoms;

    fn model() -> Arc<dyn LnlModel> {
        let mut carriers = BTreeMap::new();
        carriers.insert("a".to_string(), vec!["x".to_string()]);
        Arc::new(RelLnl::new(Atoms::new(carriers)))
    }

    #[test]
    fn tangent_section_keeps_the_base_map() {
        let t = tangent_from_dsc(model());
        let m = t.model();
        let a = TypeExpr::atom("a");
        let f = m.cart().id(&a);
        let tf = t.apply(&f).unwrap();
        assert!(tf.f.same_program(&f));
        assert_eq!(tf.dom, LsObj::new(a.clone(), a.clone()));
    }

    #[test]
    fn tangent_of_identity_is_the_ls_identity() {
        // the linear rule makes T functorial on identities
        let t = tangent_from_dsc(model());
        let m = t.model();
        let a = TypeExpr::atom("a");
        let tf = t.apply(&m.cart().id(&a)).unwrap();
        let id = crate::fib::ls_id(m, &LsObj::new(a.clone(), a.clone())).unwrap();
        assert!(crate::fib::ls_equal(m, &tf, &id, &Budget::new(4))
            .unwrap()
            .holds());
    }

    #[test]
    fn phi_of_the_kleisli_tangent_is_the_identity_vertical() {
        let t = tangent_from_dsc(model());
        let m = t.model();
        let a = TypeExpr::atom("a");
        let phi = t.phi(&a, &a).unwrap();
        let base = m.cart().tensor_obj(&a, &a);
        let id = crate::fib::vert_id(m, &base, &phi.dom_fib).unwrap();
        assert!(vert_equal(m, &phi, &id, &Budget::new(4)).unwrap().holds());
        let inv = t.phi_inv(&a, &a).unwrap();
        let round = vert_compose(m, &phi, &inv).unwrap();
        assert!(vert_equal(m, &round, &id, &Budget::new(4)).unwrap().holds());
    }

    #[test]
    fn constant_maps_have_zero_tangent_component() {
        let t = tangent_from_dsc(model());
        let m = t.model();
        let a = TypeExpr::atom("a");
        // constant co-Kleisli map a -> a factoring through the terminal object
        let point = Mor::new(
            TypeExpr::bang(TypeExpr::zero_atom()),
            a.clone(),
            |_, _| Ok(crate::mor::singleton(Element::atom("x"))),
        );
        let konst = m.cart().compose(&m.cart().terminal(&a), &point).unwrap();
        let tf = t.apply(&konst).unwrap();
        let zero = Mor::zero(tf.u.dom.clone(), tf.u.cod.clone());
        assert!(mor_equal(&tf.u, &zero, m.atoms(), &Budget::new(4))
            .unwrap()
            .holds());
        // the constant rule itself: deriving; w = 0
        let dw = m
            .lin()
            .compose(&m.deriving(&a).unwrap(), &rel::weakening(&a))
            .unwrap();
        let z2 = Mor::zero(dw.dom.clone(), dw.cod.clone());
        assert!(mor_equal(&dw, &z2, m.atoms(), &Budget::new(4))
            .unwrap()
            .holds());
    }

    #[test]
    fn fibre_deriving_matches_the_direct_formula() {
        // over the Kleisli model the fibre deriving transform collapses to
        // w_X (x) deriving_A; frozen from a hand computation
        let t = tangent_from_dsc(model());
        let m = t.model();
        let (x, a) = (TypeExpr::atom("a"), TypeExpr::atom("a"));
        let got = fibre_deriving(&t, &x, &a).unwrap();
        let direct = m
            .lin()
            .tensor_mor(&m.weakening(&x).unwrap(), &rel::deriving(&a))
            .unwrap();
        let expect = VertLs::new(
            x.clone(),
            m.lin().tensor_obj(&m.bang_obj(&a), &a),
            m.bang_obj(&a),
            direct,
        );
        assert!(vert_equal(m, &got, &expect, &Budget::new(4))
            .unwrap()
            .holds());
    }

    #[test]
    fn generalized_deriving_restricts_to_the_plain_one() {
        let t = tangent_from_dsc(model());
        let (x, a) = (TypeExpr::atom("a"), TypeExpr::atom("a"));
        let plain = fibre_deriving(&t, &x, &a).unwrap();
        let gen = generalized_fibre_deriving(&t, &x, &t.model().u_obj(&a)).unwrap();
        assert!(vert_equal(t.model(), &plain, &gen, &Budget::new(4))
            .unwrap()
            .holds());
    }

    #[test]
    fn both_d_times_routes_agree() {
        let t = tangent_from_dsc(model());
        let m = t.model();
        let a = TypeExpr::atom("a");
        let f = m.cart().id(&a);
        let via_banana = d_times(&t, &f).unwrap();
        let via_kleisli = d_times_kleisli(m, &f).unwrap();
        assert!(
            mor_equal(&via_banana, &via_kleisli, m.atoms(), &Budget::new(4))
                .unwrap()
                .holds()
        );
    }

    #[test]
    fn d_times_of_identity_is_the_second_projection() {
        let t = tangent_from_dsc(model());
        let m = t.model();
        let a = TypeExpr::atom("a");
        let dx = d_times(&t, &m.cart().id(&a)).unwrap();
        let p2 = m.cart().proj(&a, &a, Side::Two);
        assert!(mor_equal(&dx, &p2, m.atoms(), &Budget::new(4))
            .unwrap()
            .holds());
    }
}
