//! The simple and linear simple fibrations of an adjunction.
//!
//! Objects of the simple category pair two cartesian objects `(X, J)`;
//! objects of the linear simple category pair a cartesian base with a
//! linear fibre `(X, A)`. Morphisms carry a base map together with a
//! context-aware second component, composed by duplicating the non-linear
//! context. Both projections are split fibrations; reindexing along a base
//! map precomposes the context. This module also builds the fibred
//! functors between them, their adjunction, the fibred comonad, the
//! comprehension functors, the sigma coproducts and the weakening functor.

use crate::lnl::LnlModel;
use crate::mor::{mor_equal, EqVerdict, ModelError, Mor};
use crate::types::{Budget, Side, TypeExpr};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SObj {
    pub base: TypeExpr,
    pub fib: TypeExpr,
}

impl SObj {
    pub fn new(base: TypeExpr, fib: TypeExpr) -> SObj {
        SObj { base, fib }
    }
}

/// Morphism `(f, u) : (X,J) -> (Y,K)` with `f : X -> Y` and `u : X x J -> K`.
#[derive(Clone, Debug)]
pub struct SMor {
    pub dom: SObj,
    pub cod: SObj,
    pub f: Mor,
    pub u: Mor,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LsObj {
    pub base: TypeExpr,
    pub fib: TypeExpr,
}

impl LsObj {
    pub fn new(base: TypeExpr, fib: TypeExpr) -> LsObj {
        LsObj { base, fib }
    }
}

/// Morphism `(f, u) : (X,A) -> (Y,B)` with `f : X -> Y` in the cartesian
/// world and `u : F(X) (x) A -> B` in the linear world.
#[derive(Clone, Debug)]
pub struct LsMor {
    pub dom: LsObj,
    pub cod: LsObj,
    pub f: Mor,
    pub u: Mor,
}

/// Vertical morphism of the linear simple fibration, stored structurally:
/// the base is fixed and the first component is the identity.
#[derive(Clone, Debug)]
pub struct VertLs {
    pub base: TypeExpr,
    pub dom_fib: TypeExpr,
    pub cod_fib: TypeExpr,
    pub u: Mor,
}

impl VertLs {
    pub fn new(base: TypeExpr, dom_fib: TypeExpr, cod_fib: TypeExpr, u: Mor) -> VertLs {
        VertLs {
            base,
            dom_fib,
            cod_fib,
            u,
        }
    }

    pub fn dom(&self) -> LsObj {
        LsObj::new(self.base.clone(), self.dom_fib.clone())
    }

    pub fn cod(&self) -> LsObj {
        LsObj::new(self.base.clone(), self.cod_fib.clone())
    }

    /// Explicit conversion into a general morphism of the total category.
    pub fn to_ls(&self, m: &dyn LnlModel) -> LsMor {
        LsMor {
            dom: self.dom(),
            cod: self.cod(),
            f: m.cart().id(&self.base),
            u: self.u.clone(),
        }
    }
}

/// Checks that a general morphism is vertical and converts it.
pub fn expect_vertical(
    m: &dyn LnlModel,
    ls: &LsMor,
    budget: &Budget,
) -> Result<VertLs, ModelError> {
    if ls.dom.base != ls.cod.base {
        return Err(ModelError::NotVertical(ls.dom.base.to_string()));
    }
    let id = m.cart().id(&ls.dom.base);
    if !mor_equal(&ls.f, &id, m.atoms(), budget)?.holds() {
        return Err(ModelError::NotVertical(ls.dom.base.to_string()));
    }
    Ok(VertLs::new(
        ls.dom.base.clone(),
        ls.dom.fib.clone(),
        ls.cod.fib.clone(),
        ls.u.clone(),
    ))
}

// ---------------------------------------------------------------------------
// the simple category S(C)

pub fn s_id(m: &dyn LnlModel, obj: &SObj) -> Result<SMor, ModelError> {
    let p2 = m.cart().proj(&obj.base, &obj.fib, Side::Two);
    Ok(SMor {
        dom: obj.clone(),
        cod: obj.clone(),
        f: m.cart().id(&obj.base),
        u: p2,
    })
}

/// Composition `(f,u);(g,v) = (f;g, <pi_1;f, u>; v)`: the second component
/// duplicates the context through the pairing.
pub fn s_compose(m: &dyn LnlModel, a: &SMor, b: &SMor) -> Result<SMor, ModelError> {
    if a.cod != b.dom {
        return Err(ModelError::TypeMismatch {
            context: "s_compose".into(),
            expected: format!("({},{})", a.cod.base, a.cod.fib),
            found: format!("({},{})", b.dom.base, b.dom.fib),
        });
    }
    let f = m.cart().compose(&a.f, &b.f)?;
    let p1 = m.cart().proj(&a.dom.base, &a.dom.fib, Side::One);
    let graph = m.cart().pair(&m.cart().compose(&p1, &a.f)?, &a.u)?;
    let u = m.cart().compose(&graph, &b.u)?;
    Ok(SMor {
        dom: a.dom.clone(),
        cod: b.cod.clone(),
        f,
        u,
    })
}

pub fn s_vertical(
    m: &dyn LnlModel,
    base: &TypeExpr,
    dom_fib: &TypeExpr,
    cod_fib: &TypeExpr,
    u: Mor,
) -> SMor {
    SMor {
        dom: SObj::new(base.clone(), dom_fib.clone()),
        cod: SObj::new(base.clone(), cod_fib.clone()),
        f: m.cart().id(base),
        u,
    }
}

/// Fibre product of two vertical simple morphisms over the same base:
/// `(id,u) x_X (id,v) = (id, <<pi_1, pi_2;pi_1>; u, <pi_1, pi_2;pi_2>; v>)`.
pub fn s_fibre_prod(m: &dyn LnlModel, a: &SMor, b: &SMor) -> Result<SMor, ModelError> {
    let x = &a.dom.base;
    let (j, k) = (&a.dom.fib, &b.dom.fib);
    let jk = m.cart().tensor_obj(j, k);
    let p1 = m.cart().proj(x, &jk, Side::One);
    let p2 = m.cart().proj(x, &jk, Side::Two);
    let into_j = m
        .cart()
        .pair(&p1, &m.cart().compose(&p2, &m.cart().proj(j, k, Side::One))?)?;
    let into_k = m
        .cart()
        .pair(&p1, &m.cart().compose(&p2, &m.cart().proj(j, k, Side::Two))?)?;
    let u = m.cart().pair(
        &m.cart().compose(&into_j, &a.u)?,
        &m.cart().compose(&into_k, &b.u)?,
    )?;
    Ok(s_vertical(
        m,
        x,
        &jk,
        &m.cart().tensor_obj(&a.cod.fib, &b.cod.fib),
        u,
    ))
}

/// Chosen cartesian lift of `f : X -> s(Y,K)`, namely `(f, pi_K)`.
pub fn s_lift(m: &dyn LnlModel, f: &Mor, fib: &TypeExpr) -> SMor {
    let x = m.cart().obj_dom(f);
    let y = m.cart().obj_cod(f);
    SMor {
        dom: SObj::new(x.clone(), fib.clone()),
        cod: SObj::new(y, fib.clone()),
        f: f.clone(),
        u: m.cart().proj(&x, fib, Side::Two),
    }
}

// ---------------------------------------------------------------------------
// the linear simple category LS(C)

pub fn ls_id(m: &dyn LnlModel, obj: &LsObj) -> Result<LsMor, ModelError> {
    let u = m
        .lin()
        .tensor_mor(&m.weakening(&obj.base)?, &m.lin().id(&obj.fib))?;
    Ok(LsMor {
        dom: obj.clone(),
        cod: obj.clone(),
        f: m.cart().id(&obj.base),
        u,
    })
}

/// Composition `(f,u);(g,v) = (f;g, c_X (x) id; F(f) (x) u; v)`.
pub fn ls_compose(m: &dyn LnlModel, a: &LsMor, b: &LsMor) -> Result<LsMor, ModelError> {
    if a.cod != b.dom {
        return Err(ModelError::TypeMismatch {
            context: "ls_compose".into(),
            expected: format!("({},{})", a.cod.base, a.cod.fib),
            found: format!("({},{})", b.dom.base, b.dom.fib),
        });
    }
    let f = m.cart().compose(&a.f, &b.f)?;
    let step1 = m
        .lin()
        .tensor_mor(&m.contraction(&a.dom.base)?, &m.lin().id(&a.dom.fib))?;
    let step2 = m.lin().tensor_mor(&m.f_mor(&a.f)?, &a.u)?;
    let u = m.lin().compose_all(&[&step1, &step2, &b.u])?;
    Ok(LsMor {
        dom: a.dom.clone(),
        cod: b.cod.clone(),
        f,
        u,
    })
}

pub fn ls_compose_all(m: &dyn LnlModel, ms: &[&LsMor]) -> Result<LsMor, ModelError> {
    let mut it = ms.iter();
    let mut acc = (*it.next().expect("ls_compose_all of empty list")).clone();
    for x in it {
        acc = ls_compose(m, &acc, x)?;
    }
    Ok(acc)
}

/// Chosen cartesian lift of `f : X -> ls(Y,B)`, namely `(f, w_X (x) id_B)`.
pub fn ls_lift(m: &dyn LnlModel, f: &Mor, fib: &TypeExpr) -> Result<LsMor, ModelError> {
    let x = m.cart().obj_dom(f);
    let y = m.cart().obj_cod(f);
    let u = m.lin().tensor_mor(&m.weakening(&x)?, &m.lin().id(fib))?;
    Ok(LsMor {
        dom: LsObj::new(x, fib.clone()),
        cod: LsObj::new(y, fib.clone()),
        f: f.clone(),
        u,
    })
}

/// Split reindexing of a vertical morphism along `w`: precomposition of the
/// context by `F(w)`.
pub fn reindex(m: &dyn LnlModel, w: &Mor, v: &VertLs) -> Result<VertLs, ModelError> {
    let x = m.cart().obj_dom(w);
    if m.cart().obj_cod(w) != v.base {
        return Err(ModelError::BaseMismatch(
            m.cart().obj_cod(w).to_string(),
            v.base.to_string(),
        ));
    }
    let u = m.lin().compose(
        &m.lin().tensor_mor(&m.f_mor(w)?, &m.lin().id(&v.dom_fib))?,
        &v.u,
    )?;
    Ok(VertLs::new(x, v.dom_fib.clone(), v.cod_fib.clone(), u))
}

pub fn vert_id(m: &dyn LnlModel, base: &TypeExpr, fib: &TypeExpr) -> Result<VertLs, ModelError> {
    let u = m.lin().tensor_mor(&m.weakening(base)?, &m.lin().id(fib))?;
    Ok(VertLs::new(base.clone(), fib.clone(), fib.clone(), u))
}

/// Fibre composition `(id,u);(id,v) = (id, c_X (x) id; id (x) u; v)`.
pub fn vert_compose(m: &dyn LnlModel, a: &VertLs, b: &VertLs) -> Result<VertLs, ModelError> {
    if a.base != b.base {
        return Err(ModelError::BaseMismatch(
            a.base.to_string(),
            b.base.to_string(),
        ));
    }
    if a.cod_fib != b.dom_fib {
        return Err(ModelError::TypeMismatch {
            context: "vert_compose".into(),
            expected: a.cod_fib.to_string(),
            found: b.dom_fib.to_string(),
        });
    }
    let fx = m.f_obj(&a.base);
    let step1 = m
        .lin()
        .tensor_mor(&m.contraction(&a.base)?, &m.lin().id(&a.dom_fib))?;
    let step2 = m.lin().tensor_mor(&m.lin().id(&fx), &a.u)?;
    let u = m.lin().compose_all(&[&step1, &step2, &b.u])?;
    Ok(VertLs::new(
        a.base.clone(),
        a.dom_fib.clone(),
        b.cod_fib.clone(),
        u,
    ))
}

pub fn vert_compose_all(m: &dyn LnlModel, vs: &[&VertLs]) -> Result<VertLs, ModelError> {
    let mut it = vs.iter();
    let mut acc = (*it.next().expect("vert_compose_all of empty list")).clone();
    for v in it {
        acc = vert_compose(m, &acc, v)?;
    }
    Ok(acc)
}

/// Fibrewise tensor of two verticals over the same base:
/// `c_X (x) id; id (x) sym (x) id; u (x) v`.
pub fn fibre_tensor(m: &dyn LnlModel, a: &VertLs, b: &VertLs) -> Result<VertLs, ModelError> {
    if a.base != b.base {
        return Err(ModelError::BaseMismatch(
            a.base.to_string(),
            b.base.to_string(),
        ));
    }
    let fx = m.f_obj(&a.base);
    let dom = m.lin().tensor_obj(&a.dom_fib, &b.dom_fib);
    let cod = m.lin().tensor_obj(&a.cod_fib, &b.cod_fib);
    let step1 = m
        .lin()
        .tensor_mor(&m.contraction(&a.base)?, &m.lin().id(&dom))?;
    let mid = m
        .lin()
        .tensor_mor(&m.lin().sym(&fx, &a.dom_fib), &m.lin().id(&b.dom_fib))?;
    let step2 = m.lin().tensor_mor(&m.lin().id(&fx), &mid)?;
    let step3 = m.lin().tensor_mor(&a.u, &b.u)?;
    let u = m.lin().compose_all(&[&step1, &step2, &step3])?;
    Ok(VertLs::new(a.base.clone(), dom, cod, u))
}

/// Fibrewise cartesian product of verticals: `dist; u (+) v`.
pub fn fibre_with(m: &dyn LnlModel, a: &VertLs, b: &VertLs) -> Result<VertLs, ModelError> {
    if a.base != b.base {
        return Err(ModelError::BaseMismatch(
            a.base.to_string(),
            b.base.to_string(),
        ));
    }
    let fx = m.f_obj(&a.base);
    let dist = m.lin().dist(&fx, &a.dom_fib, &b.dom_fib)?;
    let action = m.lin().biprod_mor(&a.u, &b.u)?;
    let u = m.lin().compose(&dist, &action)?;
    Ok(VertLs::new(
        a.base.clone(),
        m.lin().biprod_obj(&a.dom_fib, &b.dom_fib)?,
        m.lin().biprod_obj(&a.cod_fib, &b.cod_fib)?,
        u,
    ))
}

pub fn vert_sum(m: &dyn LnlModel, a: &VertLs, b: &VertLs) -> Result<VertLs, ModelError> {
    Ok(VertLs::new(
        a.base.clone(),
        a.dom_fib.clone(),
        a.cod_fib.clone(),
        m.lin().sum(&a.u, &b.u)?,
    ))
}

pub fn vert_zero(
    m: &dyn LnlModel,
    base: &TypeExpr,
    dom_fib: &TypeExpr,
    cod_fib: &TypeExpr,
) -> Result<VertLs, ModelError> {
    let dom = m.lin().tensor_obj(&m.f_obj(base), dom_fib);
    Ok(VertLs::new(
        base.clone(),
        dom_fib.clone(),
        cod_fib.clone(),
        m.lin().zero(&dom, cod_fib)?,
    ))
}

/// Fibre biproduct injection `(id, w_X (x) i_side)`.
pub fn fibre_inj(
    m: &dyn LnlModel,
    base: &TypeExpr,
    side: Side,
    l: &TypeExpr,
    r: &TypeExpr,
) -> Result<VertLs, ModelError> {
    let u = m
        .lin()
        .tensor_mor(&m.weakening(base)?, &m.lin().inj(side, l, r)?)?;
    let from = match side {
        Side::One => l.clone(),
        Side::Two => r.clone(),
    };
    Ok(VertLs::new(
        base.clone(),
        from,
        m.lin().biprod_obj(l, r)?,
        u,
    ))
}

/// Fibre biproduct projection `(id, w_X (x) p_side)`.
pub fn fibre_biproj(
    m: &dyn LnlModel,
    base: &TypeExpr,
    side: Side,
    l: &TypeExpr,
    r: &TypeExpr,
) -> Result<VertLs, ModelError> {
    let u = m
        .lin()
        .tensor_mor(&m.weakening(base)?, &m.lin().biproj(side, l, r)?)?;
    let to = match side {
        Side::One => l.clone(),
        Side::Two => r.clone(),
    };
    Ok(VertLs::new(base.clone(), m.lin().biprod_obj(l, r)?, to, u))
}

/// Fibre biproduct pairing `(id, (u;i1) + (v;i2))`.
pub fn fibre_pair(m: &dyn LnlModel, a: &VertLs, b: &VertLs) -> Result<VertLs, ModelError> {
    if a.base != b.base || a.dom_fib != b.dom_fib {
        return Err(ModelError::BaseMismatch(
            format!("({},{})", a.base, a.dom_fib),
            format!("({},{})", b.base, b.dom_fib),
        ));
    }
    let u = m.lin().pair_biprod(&a.u, &b.u)?;
    Ok(VertLs::new(
        a.base.clone(),
        a.dom_fib.clone(),
        m.lin().biprod_obj(&a.cod_fib, &b.cod_fib)?,
        u,
    ))
}

/// Pairing in the total category: `<(f,u),(g,v)> = (<f,g>, (u;i1)+(v;i2))`.
pub fn ls_pair(m: &dyn LnlModel, a: &LsMor, b: &LsMor) -> Result<LsMor, ModelError> {
    let f = m.cart().pair(&a.f, &b.f)?;
    let u = m.lin().pair_biprod(&a.u, &b.u)?;
    Ok(LsMor {
        dom: a.dom.clone(),
        cod: LsObj::new(
            m.cart().tensor_obj(&a.cod.base, &b.cod.base),
            m.lin().biprod_obj(&a.cod.fib, &b.cod.fib)?,
        ),
        f,
        u,
    })
}

/// Projections of the product of the total category,
/// `(pi_side, w (x) p_side)`.
pub fn ls_proj(m: &dyn LnlModel, x: &LsObj, y: &LsObj, side: Side) -> Result<LsMor, ModelError> {
    let base = m.cart().tensor_obj(&x.base, &y.base);
    let f = m.cart().proj(&x.base, &y.base, side);
    let u = m.lin().tensor_mor(
        &m.weakening(&base)?,
        &m.lin().biproj(side, &x.fib, &y.fib)?,
    )?;
    let cod = match side {
        Side::One => x.clone(),
        Side::Two => y.clone(),
    };
    Ok(LsMor {
        dom: LsObj::new(base, m.lin().biprod_obj(&x.fib, &y.fib)?),
        cod,
        f,
        u,
    })
}

// ---------------------------------------------------------------------------
// the fibred functors and their adjunction

/// `U^S(f,u) = (f, eta x id; n; U(u))`, from the linear simple category to
/// the simple category.
pub fn u_simple(m: &dyn LnlModel, ls: &LsMor) -> Result<SMor, ModelError> {
    let x = &ls.dom.base;
    let ua = m.u_obj(&ls.dom.fib);
    let etas = m.cart().prod_mor(&m.eta(x)?, &m.cart().id(&ua))?;
    let n = m.lax_n(&m.f_obj(x), &ls.dom.fib)?;
    let u = m.cart().compose_all(&[&etas, &n, &m.u_mor(&ls.u)?])?;
    Ok(SMor {
        dom: SObj::new(x.clone(), ua),
        cod: SObj::new(ls.cod.base.clone(), m.u_obj(&ls.cod.fib)),
        f: ls.f.clone(),
        u,
    })
}

/// `F^S(f,u) = (f, m; F(u))`, from the simple category to the linear
/// simple category.
pub fn f_simple(m: &dyn LnlModel, s: &SMor) -> Result<LsMor, ModelError> {
    let sm = m.strong_m(&s.dom.base, &s.dom.fib)?;
    let u = m.lin().compose(&sm, &m.f_mor(&s.u)?)?;
    Ok(LsMor {
        dom: LsObj::new(s.dom.base.clone(), m.f_obj(&s.dom.fib)),
        cod: LsObj::new(s.cod.base.clone(), m.f_obj(&s.cod.fib)),
        f: s.f.clone(),
        u,
    })
}

/// Fibrewise lax structure of `U^S` over `X`: `(id, pi_2; n_{A,B})`.
pub fn us_lax(
    m: &dyn LnlModel,
    x: &TypeExpr,
    a: &TypeExpr,
    b: &TypeExpr,
) -> Result<SMor, ModelError> {
    let (ua, ub) = (m.u_obj(a), m.u_obj(b));
    let dom_fib = m.cart().tensor_obj(&ua, &ub);
    let p2 = m.cart().proj(x, &dom_fib, Side::Two);
    let u = m.cart().compose(&p2, &m.lax_n(a, b)?)?;
    Ok(s_vertical(
        m,
        x,
        &dom_fib,
        &m.u_obj(&m.lin().tensor_obj(a, b)),
        u,
    ))
}

/// Fibrewise lax structure of `F^S` over `X`: `(id, w_X (x) id; m_{J,K})`.
pub fn fs_lax(
    m: &dyn LnlModel,
    x: &TypeExpr,
    j: &TypeExpr,
    k: &TypeExpr,
) -> Result<VertLs, ModelError> {
    let (fj, fk) = (m.f_obj(j), m.f_obj(k));
    let dom_fib = m.lin().tensor_obj(&fj, &fk);
    let step1 = m
        .lin()
        .tensor_mor(&m.weakening(x)?, &m.lin().id(&dom_fib))?;
    let u = m.lin().compose(&step1, &m.strong_m(j, k)?)?;
    Ok(VertLs::new(
        x.clone(),
        dom_fib,
        m.f_obj(&m.cart().tensor_obj(j, k)),
        u,
    ))
}

/// Unit of the fibred adjunction, `(id_X, pi_J; eta_J)`.
pub fn fib_eta(m: &dyn LnlModel, x: &TypeExpr, j: &TypeExpr) -> Result<SMor, ModelError> {
    let p2 = m.cart().proj(x, j, Side::Two);
    let u = m.cart().compose(&p2, &m.eta(j)?)?;
    Ok(s_vertical(m, x, j, &m.u_obj(&m.f_obj(j)), u))
}

/// Counit of the fibred adjunction, `(id_X, w_X (x) d_A)`.
pub fn fib_counit(m: &dyn LnlModel, x: &TypeExpr, a: &TypeExpr) -> Result<VertLs, ModelError> {
    let u = m.lin().tensor_mor(&m.weakening(x)?, &m.counit(a)?)?;
    Ok(VertLs::new(x.clone(), m.bang_obj(a), a.clone(), u))
}

/// Fibred comonad action `!^S(f,u) = (f, F(eta_X) (x) id; m⊗; !(u))`.
pub fn bang_s(m: &dyn LnlModel, ls: &LsMor) -> Result<LsMor, ModelError> {
    let x = &ls.dom.base;
    let fx = m.f_obj(x);
    let bang_a = m.bang_obj(&ls.dom.fib);
    let step1 = m
        .lin()
        .tensor_mor(&m.f_mor(&m.eta(x)?)?, &m.lin().id(&bang_a))?;
    let mlax = m.bang_lax(&fx, &ls.dom.fib)?;
    let u = m.lin().compose_all(&[&step1, &mlax, &m.bang_mor(&ls.u)?])?;
    Ok(LsMor {
        dom: LsObj::new(x.clone(), bang_a),
        cod: LsObj::new(ls.cod.base.clone(), m.bang_obj(&ls.cod.fib)),
        f: ls.f.clone(),
        u,
    })
}

/// Fibred comultiplication `(id, w_X (x) p_A) : (X,!A) -> (X,!!A)`.
pub fn fib_promote(m: &dyn LnlModel, x: &TypeExpr, a: &TypeExpr) -> Result<VertLs, ModelError> {
    let u = m.lin().tensor_mor(&m.weakening(x)?, &m.promote(a)?)?;
    Ok(VertLs::new(
        x.clone(),
        m.bang_obj(a),
        m.bang_obj(&m.bang_obj(a)),
        u,
    ))
}

/// Fibred contraction over `X` at a cartesian fibre `J`:
/// `(id, w_X (x) c_J) : (X, F(J)) -> (X, F(J) (x) F(J))`.
pub fn fib_contraction(
    m: &dyn LnlModel,
    x: &TypeExpr,
    j: &TypeExpr,
) -> Result<VertLs, ModelError> {
    let fj = m.f_obj(j);
    let u = m.lin().tensor_mor(&m.weakening(x)?, &m.contraction(j)?)?;
    Ok(VertLs::new(
        x.clone(),
        fj.clone(),
        m.lin().tensor_obj(&fj, &fj),
        u,
    ))
}

/// Fibred weakening `(id, w_X (x) w_J) : (X, F(J)) -> (X, 1)`.
pub fn fib_weakening(m: &dyn LnlModel, x: &TypeExpr, j: &TypeExpr) -> Result<VertLs, ModelError> {
    let u = m.lin().tensor_mor(&m.weakening(x)?, &m.weakening(j)?)?;
    Ok(VertLs::new(x.clone(), m.f_obj(j), m.lin().unit_obj(), u))
}

// ---------------------------------------------------------------------------
// comprehension and sigma

/// `{(f,u)} = <pi_1; f, u> : X x J -> Y x K`.
pub fn comprehension(m: &dyn LnlModel, s: &SMor) -> Result<Mor, ModelError> {
    let p1 = m.cart().proj(&s.dom.base, &s.dom.fib, Side::One);
    m.cart().pair(&m.cart().compose(&p1, &s.f)?, &s.u)
}

/// `(|(f,u)|) = {U^S(f,u)} : X x U(A) -> Y x U(B)`.
pub fn banana(m: &dyn LnlModel, ls: &LsMor) -> Result<Mor, ModelError> {
    comprehension(m, &u_simple(m, ls)?)
}

/// Sigma on objects: `(X x J, A) -> (X, F(J) (x) A)`.
pub fn sigma_obj(m: &dyn LnlModel, x: &TypeExpr, j: &TypeExpr, a: &TypeExpr) -> LsObj {
    LsObj::new(x.clone(), m.lin().tensor_obj(&m.f_obj(j), a))
}

/// Sigma on a vertical over `X x J`:
/// `(id, id (x) c_J (x) id; sym (x) id; id (x) (m (x) id; u))`.
pub fn sigma_map(
    m: &dyn LnlModel,
    x: &TypeExpr,
    j: &TypeExpr,
    v: &VertLs,
) -> Result<VertLs, ModelError> {
    let xj = m.cart().tensor_obj(x, j);
    if v.base != xj {
        return Err(ModelError::BaseMismatch(v.base.to_string(), xj.to_string()));
    }
    let (fx, fj) = (m.f_obj(x), m.f_obj(j));
    let id_a = m.lin().id(&v.dom_fib);
    let step1 = m.lin().tensor_mor(
        &m.lin().id(&fx),
        &m.lin().tensor_mor(&m.contraction(j)?, &id_a)?,
    )?;
    let step2 = m.lin().tensor_mor(
        &m.lin().sym(&fx, &fj),
        &m.lin().id(&m.lin().tensor_obj(&fj, &v.dom_fib)),
    )?;
    let inner = m
        .lin()
        .compose(&m.lin().tensor_mor(&m.strong_m(x, j)?, &id_a)?, &v.u)?;
    let step3 = m.lin().tensor_mor(&m.lin().id(&fj), &inner)?;
    let u = m.lin().compose_all(&[&step1, &step2, &step3])?;
    Ok(VertLs::new(
        x.clone(),
        m.lin().tensor_obj(&fj, &v.dom_fib),
        m.lin().tensor_obj(&fj, &v.cod_fib),
        u,
    ))
}

/// Unit of `Sigma -| pi_1^*`:
/// `(id, m^-1 (x) id; w_X (x) id) : (X x J, A) -> (X x J, F(J) (x) A)`.
pub fn sigma_unit(
    m: &dyn LnlModel,
    x: &TypeExpr,
    j: &TypeExpr,
    a: &TypeExpr,
) -> Result<VertLs, ModelError> {
    let xj = m.cart().tensor_obj(x, j);
    let rest = m.lin().tensor_obj(&m.f_obj(j), a);
    let step1 = m
        .lin()
        .tensor_mor(&m.strong_m_inv(x, j)?, &m.lin().id(a))?;
    let step2 = m.lin().tensor_mor(&m.weakening(x)?, &m.lin().id(&rest))?;
    let u = m.lin().compose(&step1, &step2)?;
    Ok(VertLs::new(xj, a.clone(), rest, u))
}

/// Counit of `Sigma -| pi_1^*`:
/// `(id, w_X (x) w_J (x) id) : (X, F(J) (x) A) -> (X, A)`.
pub fn sigma_counit(
    m: &dyn LnlModel,
    x: &TypeExpr,
    j: &TypeExpr,
    a: &TypeExpr,
) -> Result<VertLs, ModelError> {
    let u = m.lin().tensor_mor(
        &m.weakening(x)?,
        &m.lin().tensor_mor(&m.weakening(j)?, &m.lin().id(a))?,
    )?;
    Ok(VertLs::new(
        x.clone(),
        m.lin().tensor_obj(&m.f_obj(j), a),
        a.clone(),
        u,
    ))
}

/// Comultiplication of the `Sigma pi_1^*` comonad, `c^X_J (x)_X id_(X,A)`.
pub fn sigma_delta(
    m: &dyn LnlModel,
    x: &TypeExpr,
    j: &TypeExpr,
    a: &TypeExpr,
) -> Result<VertLs, ModelError> {
    let c = fib_contraction(m, x, j)?;
    let id_a = vert_id(m, x, a)?;
    fibre_tensor(m, &c, &id_a)
}

// ---------------------------------------------------------------------------
// the weakening functor and partial-linear maps

pub fn w_obj(m: &dyn LnlModel, obj: &LsObj) -> LsObj {
    LsObj::new(
        m.cart().tensor_obj(&obj.base, &m.u_obj(&obj.fib)),
        obj.fib.clone(),
    )
}

/// `W(f,u) = ((|f,u|), F(pi_1) (x) id; u)`.
pub fn weakening_w(m: &dyn LnlModel, ls: &LsMor) -> Result<LsMor, ModelError> {
    let ua = m.u_obj(&ls.dom.fib);
    let p1 = m.cart().proj(&ls.dom.base, &ua, Side::One);
    let u = m.lin().compose(
        &m.lin()
            .tensor_mor(&m.f_mor(&p1)?, &m.lin().id(&ls.dom.fib))?,
        &ls.u,
    )?;
    Ok(LsMor {
        dom: w_obj(m, &ls.dom),
        cod: w_obj(m, &ls.cod),
        f: banana(m, ls)?,
        u,
    })
}

/// Is `g : X x U(A) -> U(B)` equal to `(|witness|); pi_2`?
pub fn is_partial_linear(
    m: &dyn LnlModel,
    g: &Mor,
    witness: &VertLs,
    budget: &Budget,
) -> Result<bool, ModelError> {
    let body = banana(m, &witness.to_ls(m))?;
    let proj = m
        .cart()
        .proj(&witness.base, &m.u_obj(&witness.cod_fib), Side::Two);
    let candidate = m.cart().compose(&body, &proj)?;
    Ok(mor_equal(g, &candidate, m.atoms(), budget)?.holds())
}

// ---------------------------------------------------------------------------
// equality of fibration morphisms

pub fn combine(a: EqVerdict, b: EqVerdict) -> EqVerdict {
    match (a, b) {
        (EqVerdict::Distinct(w), _) | (_, EqVerdict::Distinct(w)) => EqVerdict::Distinct(w),
        (EqVerdict::Equal, EqVerdict::Equal) => EqVerdict::Equal,
        _ => EqVerdict::EqualUpToBudget,
    }
}

pub fn ls_equal(
    m: &dyn LnlModel,
    a: &LsMor,
    b: &LsMor,
    budget: &Budget,
) -> Result<EqVerdict, ModelError> {
    let vf = mor_equal(&a.f, &b.f, m.atoms(), budget)?;
    if let EqVerdict::Distinct(w) = vf {
        return Ok(EqVerdict::Distinct(w));
    }
    let vu = mor_equal(&a.u, &b.u, m.atoms(), budget)?;
    Ok(combine(vf, vu))
}

pub fn s_equal(
    m: &dyn LnlModel,
    a: &SMor,
    b: &SMor,
    budget: &Budget,
) -> Result<EqVerdict, ModelError> {
    let vf = mor_equal(&a.f, &b.f, m.atoms(), budget)?;
    if let EqVerdict::Distinct(w) = vf {
        return Ok(EqVerdict::Distinct(w));
    }
    let vu = mor_equal(&a.u, &b.u, m.atoms(), budget)?;
    Ok(combine(vf, vu))
}

pub fn vert_equal(
    m: &dyn LnlModel,
    a: &VertLs,
    b: &VertLs,
    budget: &Budget,
) -> Result<EqVerdict, ModelError> {
    mor_equal(&a.u, &b.u, m.atoms(), budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lnl::{RelLnl, TrivialLnl};
    use crate::mor::EvalCtx;
    use crate::types::{Atoms, Element};
    use std::collections::BTreeMap;

    fn atoms() -> Atoms {
        let mut m = BTreeMap::new();
        m.insert("a".to_string(), vec!["x".to_string()]);
        m.insert("b".to_string(), vec!["y".to_string(), "z".to_string()]);
        Atoms::new(m)
    }

    fn rel() -> RelLnl {
        RelLnl::new(atoms())
    }

    #[test]
    fn ls_identity_law() {
        let m = rel();
        let obj = LsObj::new(TypeExpr::atom("a"), TypeExpr::atom("b"));
        let id = ls_id(&m, &obj).unwrap();
        let both = ls_compose(&m, &id, &id).unwrap();
        assert!(ls_equal(&m, &both, &id, &Budget::new(4)).unwrap().holds());
    }

    #[test]
    fn ls_composition_is_associative_on_catalog_instances() {
        let m = rel();
        let a = TypeExpr::atom("a");
        let obj = LsObj::new(a.clone(), a.clone());
        // mixed morphisms: the counit lift and an identity
        let d = fib_counit(&m, &a, &a).unwrap().to_ls(&m);
        let id_src = ls_id(&m, &LsObj::new(a.clone(), m.bang_obj(&a))).unwrap();
        let id_tgt = ls_id(&m, &obj).unwrap();
        let left = ls_compose(&m, &ls_compose(&m, &id_src, &d).unwrap(), &id_tgt).unwrap();
        let right = ls_compose(&m, &id_src, &ls_compose(&m, &d, &id_tgt).unwrap()).unwrap();
        assert!(ls_equal(&m, &left, &right, &Budget::new(4)).unwrap().holds());
    }

    #[test]
    fn reindex_along_identity_is_identity() {
        let m = rel();
        let a = TypeExpr::atom("a");
        let v = fib_counit(&m, &a, &a).unwrap();
        let id = m.cart().id(&a);
        let r = reindex(&m, &id, &v).unwrap();
        assert!(vert_equal(&m, &r, &v, &Budget::new(4)).unwrap().holds());
    }

    #[test]
    fn fibred_triangle_identities() {
        let m = rel();
        let (x, j) = (TypeExpr::atom("a"), TypeExpr::atom("b"));
        // F^S(eta^S); d^S = id on F^S(X,J)
        let eta = fib_eta(&m, &x, &j).unwrap();
        let f_eta = f_simple(&m, &eta).unwrap();
        let d = fib_counit(&m, &x, &m.f_obj(&j)).unwrap().to_ls(&m);
        let lhs = ls_compose(&m, &f_eta, &d).unwrap();
        let id = ls_id(&m, &LsObj::new(x.clone(), m.f_obj(&j))).unwrap();
        assert!(ls_equal(&m, &lhs, &id, &Budget::new(4)).unwrap().holds());
        // eta^S at U^S(X,A); U^S(d^S) = id on U^S(X,A)
        let a = TypeExpr::atom("b");
        let eta_u = fib_eta(&m, &x, &m.u_obj(&a)).unwrap();
        let ud = u_simple(&m, &fib_counit(&m, &x, &a).unwrap().to_ls(&m)).unwrap();
        let lhs2 = s_compose(&m, &eta_u, &ud).unwrap();
        let id2 = s_id(&m, &SObj::new(x.clone(), m.u_obj(&a))).unwrap();
        assert!(s_equal(&m, &lhs2, &id2, &Budget::new(4)).unwrap().holds());
    }

    #[test]
    fn comprehension_of_identity_is_identity() {
        let m = rel();
        let obj = SObj::new(TypeExpr::atom("a"), TypeExpr::atom("b"));
        let id = s_id(&m, &obj).unwrap();
        let c = comprehension(&m, &id).unwrap();
        let idc = m.cart().id(&m.cart().tensor_obj(&obj.base, &obj.fib));
        assert!(
            crate::mor::mor_equal(&c, &idc, m.atoms(), &Budget::new(4))
                .unwrap()
                .holds()
        );
    }

    #[test]
    fn sigma_triangles() {
        let m = rel();
        let (x, j, a) = (TypeExpr::atom("a"), TypeExpr::atom("a"), TypeExpr::atom("b"));
        let b = Budget::new(4);
        // Sigma(nu); mu = id on Sigma(X x J, A)
        let nu = sigma_unit(&m, &x, &j, &a).unwrap();
        let snu = sigma_map(&m, &x, &j, &nu).unwrap();
        let mu = sigma_counit(&m, &x, &j, &m.lin().tensor_obj(&m.f_obj(&j), &a)).unwrap();
        let lhs = vert_compose(&m, &snu, &mu).unwrap();
        let id = vert_id(&m, &x, &m.lin().tensor_obj(&m.f_obj(&j), &a)).unwrap();
        assert!(vert_equal(&m, &lhs, &id, &b).unwrap().holds());
        // nu at pi_1^*(X,A); pi_1^*(mu) = id on pi_1^*(X,A)
        let xj = m.cart().tensor_obj(&x, &j);
        let p1 = m.cart().proj(&x, &j, Side::One);
        let nu2 = sigma_unit(&m, &x, &j, &a).unwrap();
        let mu2 = sigma_counit(&m, &x, &j, &a).unwrap();
        let rmu = reindex(&m, &p1, &mu2).unwrap();
        let lhs2 = vert_compose(&m, &nu2, &rmu).unwrap();
        let id2 = vert_id(&m, &xj, &a).unwrap();
        assert!(vert_equal(&m, &lhs2, &id2, &b).unwrap().holds());
    }

    #[test]
    fn trivial_model_collapses_ls_to_s() {
        let mut carriers = BTreeMap::new();
        carriers.insert("a".to_string(), vec!["x".to_string(), "y".to_string()]);
        let m = TrivialLnl::new(Atoms::new(carriers));
        let obj = LsObj::new(TypeExpr::cart_atom("a"), TypeExpr::cart_atom("a"));
        let id = ls_id(&m, &obj).unwrap();
        // in the trivial adjunction the linear identity is the simple one
        let sid = s_id(&m, &SObj::new(obj.base.clone(), obj.fib.clone())).unwrap();
        assert!(
            crate::mor::mor_equal(&id.u, &sid.u, m.atoms(), &Budget::new(4))
                .unwrap()
                .holds()
        );
    }

    #[test]
    fn kleisli_banana_formula() {
        // (|f,u|); pi_2 = s; id (x) d; u in the Kleisli presentation
        let m = rel();
        let (a, b) = (TypeExpr::atom("a"), TypeExpr::atom("b"));
        let v = fib_counit(&m, &a, &b).unwrap(); // (id, w (x) d) : (a,!b) -> (a,b)
        let ls = v.to_ls(&m);
        let body = banana(&m, &ls).unwrap();
        let p2 = m
            .cart()
            .proj(&a, &m.u_obj(&v.cod_fib), Side::Two);
        let lhs = m.cart().compose(&body, &p2).unwrap();
        let s = m.seely(&a, &v.dom_fib).unwrap();
        let idd = m
            .lin()
            .tensor_mor(&m.lin().id(&m.bang_obj(&a)), &m.counit(&v.dom_fib).unwrap())
            .unwrap();
        let rhs = m.lin().compose_all(&[&s, &idd, &v.u]).unwrap();
        assert!(
            crate::mor::mor_equal(&lhs, &rhs, m.atoms(), &Budget::new(4))
                .unwrap()
                .holds()
        );
    }

    #[test]
    fn partial_linear_detects_the_lax_structure() {
        let m = rel();
        let (a, b) = (TypeExpr::atom("a"), TypeExpr::atom("b"));
        let n = m.lax_n(&a, &b).unwrap();
        // witness (id, d (x) id) : (U(A), A (x) B)-shaped vertical
        let u = m
            .lin()
            .tensor_mor(&m.counit(&a).unwrap(), &m.lin().id(&b))
            .unwrap();
        let witness = VertLs::new(
            m.u_obj(&a),
            b.clone(),
            m.lin().tensor_obj(&a, &b),
            u,
        );
        assert!(is_partial_linear(&m, &n, &witness, &Budget::new(4)).unwrap());
        // a genuinely non-linear map is rejected: contraction-based square
        let sq = m.cart().compose(
            &m.cart().diag(&m.cart().tensor_obj(&m.u_obj(&a), &m.u_obj(&b))).unwrap(),
            &m.cart().prod_mor(&n, &n).unwrap(),
        );
        let _ = sq; // shape exercise only; rejection checked in the suite
    }

    #[test]
    fn contraction_image_lists_splittings() {
        let m = rel();
        let a = TypeExpr::atom("a");
        let c = m.contraction(&a).unwrap();
        let ctx = EvalCtx { cap: 12 };
        let two = Element::multiset(vec![Element::atom("x"), Element::atom("x")]);
        assert_eq!(c.forward(&two, &ctx).unwrap().len(), 3);
    }
}
