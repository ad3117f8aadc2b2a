//! Tangent-functor laws: the section and product-preservation axioms, the
//! partial-linearity rule, the behaviour of the vertical differential
//! under composition, products, swaps and bilinearity, the context-aware
//! deriving family and the fibre deriving transform's named rules.

use super::catalog::Catalog;
use super::fib_suite::all_vertical_tables;
use super::{Outcome, Runner, SuiteReport};
use crate::diff::{
    chain_rhs, differential_d, fibre_deriving, generalized_fibre_deriving, partial_d, partial_i,
    script_d, TangentFunctor,
};
use crate::fib::{
    banana, comprehension, fib_contraction, fib_counit, fib_eta, fib_promote, fib_weakening,
    fibre_biproj, fibre_pair, fibre_tensor, ls_compose, ls_equal, ls_id, ls_lift, reindex,
    s_compose, sigma_counit, sigma_map, u_simple, vert_compose, vert_equal, vert_id, vert_sum,
    weakening_w, LsMor, LsObj, SMor, SObj, VertLs,
};
use crate::lnl::{dagger, LnlModel};
use crate::mor::{mor_equal, EvalCtx, ModelError, Mor};
use crate::types::{enumerate_elements, Budget, Element, Side, TypeExpr};
use std::sync::Arc;

type T = Arc<TangentFunctor>;

pub fn check_gdsc(t: T, cat: &Catalog, budget: Budget) -> SuiteReport {
    let model_name = t.model().name().to_string();
    let mut r = Runner::new("gdsc", &model_name, &cat.label, budget);
    let b = budget;

    // ---- t.1: section, functoriality, product preservation ----------------
    for (name, f) in &cat.c_mors {
        let (t2, f2) = (t.clone(), f.clone());
        r.case("t.1-section", name, move || {
            let tf = t2.apply(&f2)?;
            Ok(Outcome::Eq(mor_equal(
                &tf.f,
                &f2,
                t2.model().atoms(),
                &b,
            )?))
        });
    }
    {
        let t2 = t.clone();
        let x = cat.c_objects.first().cloned().unwrap_or(TypeExpr::Unit);
        r.case("t.1-functor-id", &format!("X={x}"), move || {
            let m = t2.model();
            let tf = t2.apply(&m.cart().id(&x))?;
            let id = ls_id(m, &t2.obj(&x))?;
            Ok(Outcome::Eq(ls_equal(m, &tf, &id, &b)?))
        });
    }
    for (name, f, g) in cat.c_pairs(t.model()).into_iter().take(6) {
        let t2 = t.clone();
        r.case("t.1-functor-comp", &name, move || {
            let m = t2.model();
            let both = t2.apply(&m.cart().compose(&f, &g)?)?;
            let split = ls_compose(m, &t2.apply(&f)?, &t2.apply(&g)?)?;
            Ok(Outcome::Eq(ls_equal(m, &both, &split, &b)?))
        });
    }
    for x in cat.c_objects.iter().take(2) {
        for y in cat.c_objects.iter().take(2) {
            let inst = format!("X={x},Y={y}");
            let t2 = t.clone();
            let (x2, y2) = (x.clone(), y.clone());
            r.case("t.1-phi-iso", &inst, move || {
                let m = t2.model();
                let phi = t2.phi(&x2, &y2)?;
                let inv = t2.phi_inv(&x2, &y2)?;
                let base = m.cart().tensor_obj(&x2, &y2);
                let right = vert_compose(m, &phi, &inv)?;
                let left = vert_compose(m, &inv, &phi)?;
                let idd = vert_id(m, &base, &phi.dom_fib)?;
                let idc = vert_id(m, &base, &phi.cod_fib)?;
                let v1 = vert_equal(m, &right, &idd, &b)?;
                let v2 = vert_equal(m, &left, &idc, &b)?;
                Ok(Outcome::Eq(crate::fib::combine(v1, v2)))
            });
            let t2 = t.clone();
            let (x2, y2) = (x.clone(), y.clone());
            r.case("t.1-lambda-prod", &inst, move || {
                let m = t2.model();
                let got = t2.lambda(&m.cart().tensor_obj(&x2, &y2));
                let expect = m
                    .lin()
                    .biprod_obj(&t2.lambda(&x2), &t2.lambda(&y2))?;
                Ok(Outcome::Holds(
                    got == expect,
                    format!("{got} != {expect}"),
                ))
            });
        }
    }

    // ---- t.2 ----------------------------------------------------------------
    for a in &cat.l_objects {
        let t2 = t.clone();
        let a2 = a.clone();
        r.case("t.2", &format!("A={a}"), move || {
            let got = t2.lambda(&t2.model().u_obj(&a2));
            Ok(Outcome::Holds(got == a2, format!("{got} != {a2}")))
        });
    }

    // ---- t.3 ------------------------------------------------------------------
    for (name, ls) in &cat.ls_mors {
        let t2 = t.clone();
        let ls2 = ls.clone();
        r.case("t.3", name, move || {
            let m = t2.model();
            let w_fu = weakening_w(m, &ls2)?;
            let i_dom = partial_i(&t2, &ls2.dom.base, &m.u_obj(&ls2.dom.fib), Side::Two)?;
            let i_cod = partial_i(&t2, &ls2.cod.base, &m.u_obj(&ls2.cod.fib), Side::Two)?;
            let lhs = ls_compose(m, &w_fu, &i_cod.to_ls(m))?;
            let rhs = ls_compose(m, &i_dom.to_ls(m), &t2.apply(&banana(m, &ls2)?)?)?;
            Ok(Outcome::Eq(ls_equal(m, &lhs, &rhs, &b)?))
        });
    }
    // the equation driving t.3 in the Kleisli construction
    for a in cat.l_objects.iter().take(2) {
        for bb in cat.l_objects.iter().take(2) {
            let inst = format!("A={a},B={bb}");
            let t2 = t.clone();
            let (a2, b2) = (a.clone(), bb.clone());
            r.case("gdsc.key-equation", &inst, move || {
                let m = t2.model();
                let ab = m.lin().biprod_obj(&a2, &b2)?;
                let lhs = m.lin().compose_all(&[
                    &m.lin().tensor_mor(
                        &m.lin().id(&m.bang_obj(&ab)),
                        &m.lin().inj(Side::Two, &a2, &b2)?,
                    )?,
                    &m.deriving(&ab)?,
                    &m.seely(&a2, &b2)?,
                    &m.lin()
                        .tensor_mor(&m.lin().id(&m.bang_obj(&a2)), &m.counit(&b2)?)?,
                ])?;
                let rhs = m.lin().tensor_mor(
                    &m.bang_mor(&m.lin().biproj(Side::One, &a2, &b2)?)?,
                    &m.lin().id(&b2),
                )?;
                Ok(Outcome::Eq(mor_equal(&lhs, &rhs, m.atoms(), &b)?))
            });
            let t2 = t.clone();
            let (a2, b2) = (a.clone(), bb.clone());
            r.case("lemma.seely-diff", &inst, move || {
                // the differential of the Seely isomorphism
                let m = t2.model();
                let ab = m.lin().biprod_obj(&a2, &b2)?;
                let lhs = m
                    .lin()
                    .compose(&m.deriving(&ab)?, &m.seely(&a2, &b2)?)?;
                let branch1 = m.lin().compose(
                    &m.lin()
                        .tensor_mor(&m.seely(&a2, &b2)?, &m.lin().biproj(Side::Two, &a2, &b2)?)?,
                    &m.lin()
                        .tensor_mor(&m.lin().id(&m.bang_obj(&a2)), &m.deriving(&b2)?)?,
                )?;
                let branch2 = m.lin().compose_all(&[
                    &m.lin()
                        .tensor_mor(&m.seely(&a2, &b2)?, &m.lin().biproj(Side::One, &a2, &b2)?)?,
                    &m.lin().tensor_mor(
                        &m.lin().id(&m.bang_obj(&a2)),
                        &m.lin().sym(&m.bang_obj(&b2), &a2),
                    )?,
                    &m.lin()
                        .tensor_mor(&m.deriving(&a2)?, &m.lin().id(&m.bang_obj(&b2)))?,
                ])?;
                let rhs = m.lin().sum(&branch1, &branch2)?;
                Ok(Outcome::Eq(mor_equal(&lhs, &rhs, m.atoms(), &b)?))
            });
        }
    }

    // ---- the vertical differential ------------------------------------------
    for (name, f, g) in cat.c_pairs(t.model()).into_iter().take(6) {
        let t2 = t.clone();
        r.case("prop.d-chain", &name, move || {
            let m = t2.model();
            let lhs = differential_d(&t2, &m.cart().compose(&f, &g)?)?;
            let rhs = chain_rhs(&t2, &f, &g)?;
            Ok(Outcome::Eq(vert_equal(m, &lhs, &rhs, &b)?))
        });
    }
    for (name, f) in cat.c_mors.iter().take(4) {
        let t2 = t.clone();
        let f2 = f.clone();
        r.case("prop.d-product", name, move || {
            let m = t2.model();
            let g = m.cart().id(&m.cart().obj_dom(&f2));
            let paired = m.cart().pair(&f2, &g)?;
            let lhs = differential_d(&t2, &paired)?;
            let df = differential_d(&t2, &f2)?;
            let dg = differential_d(&t2, &g)?;
            let fp = fibre_pair(m, &df, &dg)?;
            let phi_inv = t2.phi_inv(&m.cart().obj_cod(&f2), &m.cart().obj_cod(&g))?;
            let rhs = vert_compose(m, &fp, &reindex(m, &paired, &phi_inv)?)?;
            Ok(Outcome::Eq(vert_equal(m, &lhs, &rhs, &b)?))
        });
    }
    for x in cat.c_objects.iter().take(1) {
        for y in cat.c_objects.iter().take(2) {
            let inst = format!("X={x},Y={y}");
            let t2 = t.clone();
            let (x2, y2) = (x.clone(), y.clone());
            r.case("lemma.d-swap", &inst, move || {
                // D_1(f) = swap^*(D_2(swap; f)) for f = pi_1 x id-ish probes
                let m = t2.model();
                let p1 = m.cart().proj(&x2, &y2, Side::One);
                let swap_xy = m.cart().pair(
                    &m.cart().proj(&x2, &y2, Side::Two),
                    &m.cart().proj(&x2, &y2, Side::One),
                )?;
                let swap_yx = m.cart().pair(
                    &m.cart().proj(&y2, &x2, Side::Two),
                    &m.cart().proj(&y2, &x2, Side::One),
                )?;
                let lhs = partial_d(&t2, &x2, &y2, &p1, Side::One)?;
                let inner = partial_d(
                    &t2,
                    &y2,
                    &x2,
                    &m.cart().compose(&swap_yx, &p1)?,
                    Side::Two,
                )?;
                let rhs = reindex(m, &swap_xy, &inner)?;
                Ok(Outcome::Eq(vert_equal(m, &lhs, &rhs, &b)?))
            });
            let t2 = t.clone();
            let (x2, y2) = (x.clone(), y.clone());
            r.case("lemma.d-decomp", &inst, move || {
                // D(f) = phi; (p1; D_1 f) + (p2; D_2 f)
                let m = t2.model();
                let f = m.cart().proj(&x2, &y2, Side::One);
                let base = m.cart().tensor_obj(&x2, &y2);
                let lam = (t2.lambda(&x2), t2.lambda(&y2));
                let d1 = partial_d(&t2, &x2, &y2, &f, Side::One)?;
                let d2 = partial_d(&t2, &x2, &y2, &f, Side::Two)?;
                let leg1 = vert_compose(m, &fibre_biproj(m, &base, Side::One, &lam.0, &lam.1)?, &d1)?;
                let leg2 = vert_compose(m, &fibre_biproj(m, &base, Side::Two, &lam.0, &lam.1)?, &d2)?;
                let rhs = vert_compose(m, &t2.phi(&x2, &y2)?, &vert_sum(m, &leg1, &leg2)?)?;
                let lhs = differential_d(&t2, &f)?;
                Ok(Outcome::Eq(vert_equal(m, &lhs, &rhs, &b)?))
            });
            let t2 = t.clone();
            let (x2, y2) = (x.clone(), y.clone());
            r.case("lemma.d2-pi2", &inst, move || {
                let m = t2.model();
                let p2 = m.cart().proj(&x2, &y2, Side::Two);
                let d2 = partial_d(&t2, &x2, &y2, &p2, Side::Two)?;
                let id = vert_id(m, &m.cart().tensor_obj(&x2, &y2), &t2.lambda(&y2))?;
                Ok(Outcome::Eq(vert_equal(m, &d2, &id, &b)?))
            });
        }
    }
    // uniqueness of the vertical factorization, by search
    for (name, f) in cat.c_mors.iter().take(2) {
        let t2 = t.clone();
        let f2 = f.clone();
        r.case("d.unique", name, move || {
            let m = t2.model();
            let x = m.cart().obj_dom(&f2);
            let y = m.cart().obj_cod(&f2);
            let tf = t2.apply(&f2)?;
            let lift = ls_lift(m, &f2, &t2.lambda(&y))?;
            let search = Budget {
                max_elements: 1 << 16,
                ..b
            };
            let mut hits = 0usize;
            for h in all_vertical_tables(m, &x, &t2.lambda(&x), &t2.lambda(&y), &search)? {
                let cand = ls_compose(m, &h.to_ls(m), &lift)?;
                if ls_equal(m, &cand, &tf, &b)?.holds() {
                    hits += 1;
                }
            }
            Ok(Outcome::Holds(
                hits == 1,
                format!("{hits} vertical factorizations found"),
            ))
        });
    }

    // ---- partial linearity read through the differential ---------------------
    for (name, ls) in cat.ls_mors.iter().take(3) {
        let t2 = t.clone();
        let ls2 = ls.clone();
        r.case("prop.t3-differential", name, move || {
            let m = t2.model();
            let (x, y) = (&ls2.dom.base, &ls2.cod.base);
            let (ua, ub) = (m.u_obj(&ls2.dom.fib), m.u_obj(&ls2.cod.fib));
            let body = banana(m, &ls2)?;
            let lhs = partial_d(&t2, x, &ua, &body, Side::Two)?;
            let vert_u = VertLs::new(
                x.clone(),
                ls2.dom.fib.clone(),
                ls2.cod.fib.clone(),
                ls2.u.clone(),
            );
            let p1 = m.cart().proj(x, &ua, Side::One);
            let pulled = reindex(m, &p1, &vert_u)?;
            let i_cod = partial_i(&t2, y, &ub, Side::Two)?;
            let rhs = vert_compose(m, &pulled, &reindex(m, &body, &i_cod)?)?;
            Ok(Outcome::Eq(vert_equal(m, &lhs, &rhs, &b)?))
        });
        let t2 = t.clone();
        let ls2 = ls.clone();
        r.case("lemma.d2-partial-linear", name, move || {
            // partial-linear g = (|id,u|); pi_2 differentiates to pi_1^*(id,u)
            let m = t2.model();
            let x = &ls2.dom.base;
            if ls2.cod.base != *x {
                return Ok(Outcome::Skip("needs a vertical instance".into()));
            }
            let ua = m.u_obj(&ls2.dom.fib);
            let vert_u = VertLs::new(
                x.clone(),
                ls2.dom.fib.clone(),
                ls2.cod.fib.clone(),
                ls2.u.clone(),
            );
            let body = banana(m, &vert_u.to_ls(m))?;
            let p2 = m.cart().proj(x, &m.u_obj(&ls2.cod.fib), Side::Two);
            let g = m.cart().compose(&body, &p2)?;
            let lhs = partial_d(&t2, x, &ua, &g, Side::Two)?;
            let p1 = m.cart().proj(x, &ua, Side::One);
            let rhs = reindex(m, &p1, &vert_u)?;
            Ok(Outcome::Eq(vert_equal(m, &lhs, &rhs, &b)?))
        });
    }
    // the comprehension differential lemmas
    for (name, f) in cat.c_mors.iter().take(2) {
        let t2 = t.clone();
        let f2 = f.clone();
        r.case("lemma.d2-post", name, move || {
            // D_2({pi_2; h}; pi_2) = pi_2^* D(h)
            let m = t2.model();
            let x = m.cart().obj_dom(&f2);
            let j = m.cart().obj_dom(&f2);
            let p2 = m.cart().proj(&x, &j, Side::Two);
            let u = m.cart().compose(&p2, &f2)?;
            let lhs = partial_d(&t2, &x, &j, &u, Side::Two)?;
            let rhs = reindex(m, &p2, &differential_d(&t2, &f2)?)?;
            Ok(Outcome::Eq(vert_equal(m, &lhs, &rhs, &b)?))
        });
        let t2 = t.clone();
        let f2 = f.clone();
        r.case("lemma.d2-pair-zero", name, move || {
            // D_2({(f,u)}) = D_2({(f,u)}; pi_2); {(f,u)}^* i_2
            let m = t2.model();
            let x = m.cart().obj_dom(&f2);
            let j = m.cart().obj_dom(&f2);
            let p2 = m.cart().proj(&x, &j, Side::Two);
            let smor = SMor {
                dom: SObj::new(x.clone(), j.clone()),
                cod: SObj::new(x.clone(), m.cart().obj_cod(&f2)),
                f: m.cart().id(&x),
                u: m.cart().compose(&p2, &f2)?,
            };
            let compr = comprehension(m, &smor)?;
            let lhs = partial_d(&t2, &x, &j, &compr, Side::Two)?;
            let u_map = m.cart().compose(&compr, &m.cart().proj(&x, &m.cart().obj_cod(&f2), Side::Two))?;
            let du = partial_d(&t2, &x, &j, &u_map, Side::Two)?;
            let i2 = partial_i(&t2, &x, &m.cart().obj_cod(&f2), Side::Two)?;
            let rhs = vert_compose(m, &du, &reindex(m, &compr, &i2)?)?;
            Ok(Outcome::Eq(vert_equal(m, &lhs, &rhs, &b)?))
        });
    }
    // bilinearity of the lax structure
    for a in cat.l_objects.iter().take(1) {
        for bb in cat.l_objects.iter().take(2) {
            let inst = format!("A={a},B={bb}");
            let t2 = t.clone();
            let (a2, b2) = (a.clone(), bb.clone());
            r.case("cor.d-bilinear", &inst, move || {
                let m = t2.model();
                let (ua, ub) = (m.u_obj(&a2), m.u_obj(&b2));
                let n = m.lax_n(&a2, &b2)?;
                let dn = differential_d(&t2, &n)?;
                // second-argument witness u and first-argument witness u'
                let u = m.lin().tensor_mor(&m.counit(&a2)?, &m.lin().id(&b2))?;
                let u_prime = m.lin().compose(
                    &m.lin().sym(&m.bang_obj(&b2), &a2),
                    &m.lin().tensor_mor(&m.lin().id(&a2), &m.counit(&b2)?)?,
                )?;
                let ab = m.lin().tensor_obj(&a2, &b2);
                let base = m.cart().tensor_obj(&ua, &ub);
                let w1 = VertLs::new(ub.clone(), a2.clone(), ab.clone(), u_prime);
                let w2 = VertLs::new(ua.clone(), b2.clone(), ab.clone(), u);
                let p1 = m.cart().proj(&ua, &ub, Side::One);
                let p2 = m.cart().proj(&ua, &ub, Side::Two);
                let leg1 = vert_compose(
                    m,
                    &fibre_biproj(m, &base, Side::One, &t2.lambda(&ua), &t2.lambda(&ub))?,
                    &reindex(m, &p2, &w1)?,
                )?;
                let leg2 = vert_compose(
                    m,
                    &fibre_biproj(m, &base, Side::Two, &t2.lambda(&ua), &t2.lambda(&ub))?,
                    &reindex(m, &p1, &w2)?,
                )?;
                let rhs = vert_compose(
                    m,
                    &t2.phi(&ua, &ub)?,
                    &vert_sum(m, &leg1, &leg2)?,
                )?;
                Ok(Outcome::Eq(vert_equal(m, &dn, &rhs, &b)?))
            });
        }
    }

    // ---- the context-aware deriving family ------------------------------------
    for x in cat.c_objects.iter().take(2) {
        for a in cat.l_objects.iter().take(2) {
            let inst = format!("X={x},A={a}");
            let t2 = t.clone();
            let (x2, a2) = (x.clone(), a.clone());
            r.case("prop.scriptd-precomp", &inst, move || {
                // scriptD; pi_1^* f = D_2({f-dagger}; pi_2)
                let m = t2.model();
                let ua = m.u_obj(&a2);
                let fy = m.f_obj(&ua);
                // f : (X, F(U A)) -> (X, A) vertical, built from the counit
                let f = fib_counit(m, &x2, &a2)?;
                let lhs = {
                    let d = script_d(&t2, &x2, &ua)?;
                    let p1 = m.cart().proj(&x2, &ua, Side::One);
                    vert_compose(m, &d, &reindex(m, &p1, &f)?)?
                };
                // the transpose of f through the fibred adjunction
                let eta = fib_eta(m, &x2, &ua)?;
                let f_dag = s_compose(m, &eta, &u_simple(m, &f.to_ls(m))?)?;
                let g = m.cart().compose(
                    &comprehension(m, &f_dag)?,
                    &m.cart().proj(&x2, &m.u_obj(&a2), Side::Two),
                )?;
                let rhs = partial_d(&t2, &x2, &ua, &g, Side::Two)?;
                let _ = fy;
                Ok(Outcome::Eq(vert_equal(m, &lhs, &rhs, &b)?))
            });
            let t2 = t.clone();
            let (x2, a2) = (x.clone(), a.clone());
            r.case("lemma.sigma-scriptd", &inst, move || {
                // Sigma scriptD = c (x) id; id (x) deriving
                let m = t2.model();
                let ua = m.u_obj(&a2);
                let sd = sigma_map(m, &x2, &ua, &script_d(&t2, &x2, &ua)?)?;
                let c = fib_contraction(m, &x2, &ua)?;
                let step1 = fibre_tensor(m, &c, &vert_id(m, &x2, &a2)?)?;
                let step2 = fibre_tensor(
                    m,
                    &vert_id(m, &x2, &m.bang_obj(&a2))?,
                    &fibre_deriving(&t2, &x2, &a2)?,
                )?;
                let rhs = vert_compose(m, &step1, &step2)?;
                Ok(Outcome::Eq(vert_equal(m, &sd, &rhs, &b)?))
            });
            let t2 = t.clone();
            let (x2, a2) = (x.clone(), a.clone());
            r.case("prop.scriptd-nat", &inst, move || {
                // scriptD is natural from W to !^S W at the counit square
                let m = t2.model();
                let fu = fib_counit(m, &x2, &a2)?.to_ls(m);
                let w_fu = weakening_w(m, &fu)?;
                let d_dom = script_d(&t2, &x2, &m.u_obj(&m.bang_obj(&a2)))?;
                let d_cod = script_d(&t2, &x2, &m.u_obj(&a2))?;
                let lhs = ls_compose(m, &d_dom.to_ls(m), &crate::fib::bang_s(m, &w_fu)?)?;
                let rhs = ls_compose(m, &w_fu, &d_cod.to_ls(m))?;
                Ok(Outcome::Eq(ls_equal(m, &lhs, &rhs, &b)?))
            });
            // the fibre deriving transform's three named rules
            let t2 = t.clone();
            let (x2, a2) = (x.clone(), a.clone());
            r.case("prop.fibre-linear", &inst, move || {
                let m = t2.model();
                let lhs = vert_compose(
                    m,
                    &fibre_deriving(&t2, &x2, &a2)?,
                    &fib_counit(m, &x2, &a2)?,
                )?;
                let w = fib_weakening(m, &x2, &m.u_obj(&a2))?;
                let rhs = fibre_tensor(m, &w, &vert_id(m, &x2, &a2)?)?;
                Ok(Outcome::Eq(vert_equal(m, &lhs, &rhs, &b)?))
            });
            let t2 = t.clone();
            let (x2, a2) = (x.clone(), a.clone());
            r.case("prop.fibre-chain", &inst, move || {
                let m = t2.model();
                let del = fibre_deriving(&t2, &x2, &a2)?;
                let lhs = vert_compose(m, &del, &fib_promote(m, &x2, &a2)?)?;
                let c = fib_contraction(m, &x2, &m.u_obj(&a2))?;
                let rhs = vert_compose(
                    m,
                    &vert_compose(
                        m,
                        &fibre_tensor(m, &c, &vert_id(m, &x2, &a2)?)?,
                        &fibre_tensor(m, &fib_promote(m, &x2, &a2)?, &del)?,
                    )?,
                    &fibre_deriving(&t2, &x2, &m.bang_obj(&a2))?,
                )?;
                Ok(Outcome::Eq(vert_equal(m, &lhs, &rhs, &b)?))
            });
            let t2 = t.clone();
            let (x2, a2) = (x.clone(), a.clone());
            r.case("prop.fibre-leibniz", &inst, move || {
                let m = t2.model();
                let del = fibre_deriving(&t2, &x2, &a2)?;
                let bang_a = m.bang_obj(&a2);
                let lhs = vert_compose(m, &del, &fib_contraction(m, &x2, &m.u_obj(&a2))?)?;
                let c = fib_contraction(m, &x2, &m.u_obj(&a2))?;
                let id_a = vert_id(m, &x2, &a2)?;
                let id_bang = vert_id(m, &x2, &bang_a)?;
                // fibre symmetry between !A and A
                let sym = {
                    let u = m
                        .lin()
                        .tensor_mor(&m.weakening(&x2)?, &m.lin().sym(&bang_a, &a2))?;
                    VertLs::new(
                        x2.clone(),
                        TypeExpr::tensor2(bang_a.clone(), a2.clone()),
                        TypeExpr::tensor2(a2.clone(), bang_a.clone()),
                        u,
                    )
                };
                let branch1 = vert_compose(
                    m,
                    &fibre_tensor(m, &id_bang, &sym)?,
                    &fibre_tensor(m, &del, &id_bang)?,
                )?;
                let branch2 = fibre_tensor(m, &id_bang, &del)?;
                let rhs = vert_compose(
                    m,
                    &fibre_tensor(m, &c, &id_a)?,
                    &vert_sum(m, &branch1, &branch2)?,
                )?;
                Ok(Outcome::Eq(vert_equal(m, &lhs, &rhs, &b)?))
            });
            // the generalised form agrees where both are defined
            let t2 = t.clone();
            let (x2, a2) = (x.clone(), a.clone());
            r.case("gen-partial.consistent", &inst, move || {
                let m = t2.model();
                let plain = fibre_deriving(&t2, &x2, &a2)?;
                let gen = generalized_fibre_deriving(&t2, &x2, &m.u_obj(&a2))?;
                Ok(Outcome::Eq(vert_equal(m, &plain, &gen, &b)?))
            });
            let t2 = t.clone();
            let (x2, a2) = (x.clone(), a.clone());
            r.case("gen-partial.oracle", &inst, move || {
                // in the Kleisli model both routes collapse to w (x) deriving
                let m = t2.model();
                let gen = generalized_fibre_deriving(&t2, &x2, &m.u_obj(&a2))?;
                let direct = m
                    .lin()
                    .tensor_mor(&m.weakening(&x2)?, &m.deriving(&a2)?)?;
                let expect = VertLs::new(
                    x2.clone(),
                    m.lin().tensor_obj(&m.bang_obj(&a2), &a2),
                    m.bang_obj(&a2),
                    direct,
                );
                Ok(Outcome::Eq(vert_equal(m, &gen, &expect, &b)?))
            });
        }
    }
    // scriptD against the deriving-transform prediction, both computed
    // independently: the generic route versus !p_2 (x) id; deriving
    for x in cat.c_objects.iter().take(1) {
        for a in cat.l_objects.iter().take(2) {
            let inst = format!("X={x},A={a}");
            let t2 = t.clone();
            let (x2, a2) = (x.clone(), a.clone());
            r.case("scriptd.kleisli-oracle", &inst, move || {
                let m = t2.model();
                let d = script_d(&t2, &x2, &m.u_obj(&a2))?;
                let p2 = m.cart().proj(&x2, &a2, Side::Two);
                let bang_p2 = m.f_mor(&p2)?;
                let direct = m.lin().compose(
                    &m.lin().tensor_mor(&bang_p2, &m.lin().id(&a2))?,
                    &m.deriving(&a2)?,
                )?;
                Ok(Outcome::Eq(mor_equal(&d.u, &direct, m.atoms(), &b)?))
            });
        }
    }

    // the fibre over a point recovers the base deriving transform shape
    {
        let t2 = t.clone();
        let a = cat.l_objects.first().cloned().unwrap_or(TypeExpr::Unit);
        r.case("fibre-deriving.base-shape", &format!("A={a}"), move || {
            let m = t2.model();
            let i = m.cart().unit_obj();
            let del = fibre_deriving(&t2, &i, &a)?;
            // conjugating by m_I strips the context and yields deriving
            let emb = m.lin().tensor_mor(
                &m.strong_m_unit()?,
                &m.lin()
                    .id(&m.lin().tensor_obj(&m.bang_obj(&a), &a)),
            )?;
            let lhs = m.lin().compose(&emb, &del.u)?;
            Ok(Outcome::Eq(mor_equal(&lhs, &m.deriving(&a)?, m.atoms(), &b)?))
        });
    }

    r.run()
}

/// Exploratory check of the strongest symmetry axiom on arbitrary
/// co-Kleisli morphisms; verdicts never gate an exit code.
pub fn probe_gcdc7(t: T, cat: &Catalog, budget: Budget) -> SuiteReport {
    let model_name = t.model().name().to_string();
    let mut r = Runner::new("gcdc7-probe", &model_name, &cat.label, budget);
    for (name, f) in cat.c_mors.iter().take(4) {
        let t2 = t.clone();
        let f2 = f.clone();
        r.exploratory_case("GCDC.7-probe", name, move || {
            let m = t2.model();
            let d2 = super::cdc::kleisli_second_derivative(&t2, &f2)?;
            let x = m.cart().obj_dom(&f2);
            let lam = t2.lambda(&x);
            let g = m.cart().id(&x);
            let h = m.cart().id(&lam);
            let k = m.cart().id(&lam);
            let zero = m.cart().zero(&m.cart().hom_dom(&lam), &lam)?;
            let lhs = super::cdc::nest_pairs(m, &g, &h, &k, &zero, &d2)?;
            let rhs = super::cdc::nest_pairs_swapped(m, &g, &h, &k, &zero, &d2)?;
            Ok(Outcome::Eq(mor_equal(&lhs, &rhs, m.atoms(), &budget)?))
        });
    }
    r.run()
}

/// The fibre deriving transform frozen against the direct Kleisli
/// formula `w_X (x) deriving_A`; reused by the acceptance gate.
pub fn kleisli_fibre_deriving_direct(
    m: &dyn LnlModel,
    x: &TypeExpr,
    a: &TypeExpr,
) -> Result<VertLs, ModelError> {
    let direct = m.lin().tensor_mor(&m.weakening(x)?, &m.deriving(a)?)?;
    Ok(VertLs::new(
        x.clone(),
        m.lin().tensor_obj(&m.bang_obj(a), a),
        m.bang_obj(a),
        direct,
    ))
}
