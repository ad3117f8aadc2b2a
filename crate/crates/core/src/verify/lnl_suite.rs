//! Adjunction-level laws: triangles, strong/lax structure, comonoids, the
//! lax-colax round trip, the `!` comonad and the derived-map cross-checks.

use super::catalog::Catalog;
use super::{Outcome, Runner, SuiteReport};
use crate::lnl::{
    colax_from_lax, dagger, derived_contraction, derived_seely, derived_weakening,
    lax_from_colax, LnlModel,
};
use crate::mor::{mor_equal, EqVerdict, Mor};
use crate::types::Budget;
use std::sync::Arc;

type M = Arc<dyn LnlModel>;

fn eq(m: &M, lhs: &Mor, rhs: &Mor, budget: &Budget) -> Result<Outcome, crate::mor::ModelError> {
    Ok(Outcome::Eq(mor_equal(lhs, rhs, m.atoms(), budget)?))
}

pub fn check_lnl(model: M, cat: &Catalog, budget: Budget) -> SuiteReport {
    let mut r = Runner::new("lnl", model.name(), &cat.label, budget);

    for x in &cat.c_objects {
        let (m, x, b) = (model.clone(), x.clone(), budget);
        r.case("lnl.triangle-F", &format!("X={x}"), move || {
            let lhs = m
                .lin()
                .compose(&m.f_mor(&m.eta(&x)?)?, &m.counit(&m.f_obj(&x))?)?;
            eq(&m, &lhs, &m.lin().id(&m.f_obj(&x)), &b)
        });
    }
    for a in &cat.l_objects {
        let (m, a, b) = (model.clone(), a.clone(), budget);
        r.case("lnl.triangle-U", &format!("A={a}"), move || {
            let lhs = m
                .cart()
                .compose(&m.eta(&m.u_obj(&a))?, &m.u_mor(&m.counit(&a)?)?)?;
            eq(&m, &lhs, &m.cart().id(&m.u_obj(&a)), &b)
        });
    }

    for x in &cat.c_objects {
        for y in &cat.c_objects {
            let inst = format!("X={x},Y={y}");
            let (m, x2, y2, b) = (model.clone(), x.clone(), y.clone(), budget);
            r.case("lnl.m-iso-right", &inst, move || {
                let lhs = m
                    .lin()
                    .compose(&m.strong_m(&x2, &y2)?, &m.strong_m_inv(&x2, &y2)?)?;
                let id = m
                    .lin()
                    .id(&m.lin().tensor_obj(&m.f_obj(&x2), &m.f_obj(&y2)));
                eq(&m, &lhs, &id, &b)
            });
            let (m, x2, y2, b) = (model.clone(), x.clone(), y.clone(), budget);
            r.case("lnl.m-iso-left", &inst, move || {
                let lhs = m
                    .lin()
                    .compose(&m.strong_m_inv(&x2, &y2)?, &m.strong_m(&x2, &y2)?)?;
                let id = m.lin().id(&m.f_obj(&m.cart().tensor_obj(&x2, &y2)));
                eq(&m, &lhs, &id, &b)
            });
        }
    }
    {
        let (m, b) = (model.clone(), budget);
        r.case("lnl.m-unit-iso", "I", move || {
            let lhs = m
                .lin()
                .compose(&m.strong_m_unit()?, &m.strong_m_unit_inv()?)?;
            let one = eq(&m, &lhs, &m.lin().id(&m.lin().unit_obj()), &b)?;
            let rhs = m
                .lin()
                .compose(&m.strong_m_unit_inv()?, &m.strong_m_unit()?)?;
            let two = eq(&m, &rhs, &m.lin().id(&m.f_obj(&m.cart().unit_obj())), &b)?;
            Ok(match (one, two) {
                (Outcome::Eq(a), Outcome::Eq(bv)) => Outcome::Eq(crate::fib::combine(a, bv)),
                _ => unreachable!(),
            })
        });
    }

    // naturality of eta and the counit on the morphism catalog
    for (name, f) in &cat.c_mors {
        let (m, f, b) = (model.clone(), f.clone(), budget);
        r.case("lnl.nat-eta", name, move || {
            let x = m.cart().obj_dom(&f);
            let y = m.cart().obj_cod(&f);
            let lhs = m.cart().compose(&f, &m.eta(&y)?)?;
            let rhs = m
                .cart()
                .compose(&m.eta(&x)?, &m.u_mor(&m.f_mor(&f)?)?)?;
            eq(&m, &lhs, &rhs, &b)
        });
    }
    for (name, h) in &cat.l_mors {
        let (m, h, b) = (model.clone(), h.clone(), budget);
        r.case("lnl.nat-counit", name, move || {
            let lhs = m.lin().compose(&m.bang_mor(&h)?, &m.counit(&h.cod)?)?;
            let rhs = m.lin().compose(&m.counit(&h.dom)?, &h)?;
            eq(&m, &lhs, &rhs, &b)
        });
    }
    // naturality of the strong and lax structures
    for (na, f) in cat.c_mors.iter().take(3) {
        for (nb, g) in cat.c_mors.iter().take(3) {
            let inst = format!("{na},{nb}");
            let (m, f, g, b) = (model.clone(), f.clone(), g.clone(), budget);
            r.case("lnl.nat-m", &inst, move || {
                let lhs = m.lin().compose(
                    &m.lin().tensor_mor(&m.f_mor(&f)?, &m.f_mor(&g)?)?,
                    &m.strong_m(&m.cart().obj_cod(&f), &m.cart().obj_cod(&g))?,
                )?;
                let rhs = m.lin().compose(
                    &m.strong_m(&m.cart().obj_dom(&f), &m.cart().obj_dom(&g))?,
                    &m.f_mor(&m.cart().prod_mor(&f, &g)?)?,
                )?;
                eq(&m, &lhs, &rhs, &b)
            });
        }
    }
    for (na, h) in cat.l_mors.iter().take(3) {
        for (nb, k) in cat.l_mors.iter().take(3) {
            let inst = format!("{na},{nb}");
            let (m, h, k, b) = (model.clone(), h.clone(), k.clone(), budget);
            r.case("lnl.nat-n", &inst, move || {
                let lhs = m.cart().compose(
                    &m.cart().prod_mor(&m.u_mor(&h)?, &m.u_mor(&k)?)?,
                    &m.lax_n(&h.cod, &k.cod)?,
                )?;
                let rhs = m.cart().compose(
                    &m.lax_n(&h.dom, &k.dom)?,
                    &m.u_mor(&m.lin().tensor_mor(&h, &k)?)?,
                )?;
                eq(&m, &lhs, &rhs, &b)
            });
        }
    }

    // cocommutative comonoid structure of every F(X)
    for x in &cat.c_objects {
        let inst = format!("X={x}");
        let (m, x2, b) = (model.clone(), x.clone(), budget);
        r.case("lnl.comonoid-coassoc", &inst, move || {
            let c = m.contraction(&x2)?;
            let fx = m.f_obj(&x2);
            let lhs = m
                .lin()
                .compose(&c, &m.lin().tensor_mor(&c, &m.lin().id(&fx))?)?;
            let rhs = m
                .lin()
                .compose(&c, &m.lin().tensor_mor(&m.lin().id(&fx), &c)?)?;
            eq(&m, &lhs, &rhs, &b)
        });
        let (m, x2, b) = (model.clone(), x.clone(), budget);
        r.case("lnl.comonoid-counit-left", &inst, move || {
            let c = m.contraction(&x2)?;
            let fx = m.f_obj(&x2);
            let lhs = m
                .lin()
                .compose(&c, &m.lin().tensor_mor(&m.weakening(&x2)?, &m.lin().id(&fx))?)?;
            eq(&m, &lhs, &m.lin().id(&fx), &b)
        });
        let (m, x2, b) = (model.clone(), x.clone(), budget);
        r.case("lnl.comonoid-counit-right", &inst, move || {
            let c = m.contraction(&x2)?;
            let fx = m.f_obj(&x2);
            let lhs = m
                .lin()
                .compose(&c, &m.lin().tensor_mor(&m.lin().id(&fx), &m.weakening(&x2)?)?)?;
            eq(&m, &lhs, &m.lin().id(&fx), &b)
        });
        let (m, x2, b) = (model.clone(), x.clone(), budget);
        r.case("lnl.comonoid-cocomm", &inst, move || {
            let c = m.contraction(&x2)?;
            let fx = m.f_obj(&x2);
            let lhs = m.lin().compose(&c, &m.lin().sym(&fx, &fx))?;
            eq(&m, &lhs, &c, &b)
        });
    }

    // the lax-colax bijection: the derived colax structure inverts m, and
    // transporting it back recovers n
    for a in &cat.l_objects {
        for bb in &cat.l_objects {
            let inst = format!("A={a},B={bb}");
            let (m, a2, b2, b) = (model.clone(), a.clone(), bb.clone(), budget);
            r.case("lnl.colax-is-m-inv", &inst, move || {
                let p = colax_from_lax(m.as_ref(), &m.u_obj(&a2), &m.u_obj(&b2))?;
                let minv = m.strong_m_inv(&m.u_obj(&a2), &m.u_obj(&b2))?;
                eq(&m, &p, &minv, &b)
            });
            let (m, a2, b2, b) = (model.clone(), a.clone(), bb.clone(), budget);
            r.case("lnl.phi-roundtrip", &inst, move || {
                let n2 = lax_from_colax(m.as_ref(), &a2, &b2)?;
                eq(&m, &n2, &m.lax_n(&a2, &b2)?, &b)
            });
        }
    }

    // dagger: adjunction transposition on maps out of free objects
    for a in &cat.l_objects {
        let inst = format!("A={a}");
        let (m, a2, b) = (model.clone(), a.clone(), budget);
        r.case("lnl.dagger-counit", &inst, move || {
            let dag = dagger(m.as_ref(), &m.counit(&a2)?)?;
            eq(&m, &dag, &m.cart().id(&m.u_obj(&a2)), &b)
        });
        let (m, a2, b) = (model.clone(), a.clone(), budget);
        r.case("lnl.dagger-roundtrip", &inst, move || {
            // F(f†); d = f for f = the counit itself
            let f = m.counit(&a2)?;
            let lhs = m
                .lin()
                .compose(&m.f_mor(&dagger(m.as_ref(), &f)?)?, &m.counit(&a2)?)?;
            eq(&m, &lhs, &f, &b)
        });
    }
    for (name, g) in &cat.c_mors {
        let (m, g, b) = (model.clone(), g.clone(), budget);
        r.case("lnl.dagger-recover", name, move || {
            // (F(g); d)† = g for cartesian g
            let fgd = m
                .lin()
                .compose(&m.f_mor(&g)?, &m.counit(&m.cart().obj_cod(&g))?)?;
            let dag = dagger(m.as_ref(), &fgd)?;
            eq(&m, &dag, &g, &b)
        });
    }
    // injectivity of the transposition on the catalog
    {
        let mors: Vec<(String, Mor)> = cat.c_mors.clone();
        let (m, b) = (model.clone(), budget);
        r.case("lnl.dagger-injective", "catalog", move || {
            for (i, (na, f)) in mors.iter().enumerate() {
                for (nb, g) in mors.iter().skip(i + 1) {
                    if f.dom != g.dom || f.cod != g.cod {
                        continue;
                    }
                    let distinct =
                        matches!(mor_equal(f, g, m.atoms(), &b)?, EqVerdict::Distinct(_));
                    if !distinct {
                        continue;
                    }
                    let ff = m
                        .lin()
                        .compose(&m.f_mor(f)?, &m.counit(&m.cart().obj_cod(f))?)?;
                    let gg = m
                        .lin()
                        .compose(&m.f_mor(g)?, &m.counit(&m.cart().obj_cod(g))?)?;
                    let da = dagger(m.as_ref(), &ff)?;
                    let db = dagger(m.as_ref(), &gg)?;
                    if mor_equal(&da, &db, m.atoms(), &b)?.holds() {
                        return Ok(Outcome::Holds(
                            false,
                            format!("{na} and {nb} collapse under dagger"),
                        ));
                    }
                }
            }
            Ok(Outcome::Holds(true, String::new()))
        });
    }

    // the comonad ! and its lax monoidal structure
    for a in &cat.l_objects {
        let inst = format!("A={a}");
        let (m, a2, b) = (model.clone(), a.clone(), budget);
        r.case("bang.comonad-right", &inst, move || {
            let lhs = m
                .lin()
                .compose(&m.promote(&a2)?, &m.counit(&m.bang_obj(&a2))?)?;
            eq(&m, &lhs, &m.lin().id(&m.bang_obj(&a2)), &b)
        });
        let (m, a2, b) = (model.clone(), a.clone(), budget);
        r.case("bang.comonad-left", &inst, move || {
            let lhs = m
                .lin()
                .compose(&m.promote(&a2)?, &m.bang_mor(&m.counit(&a2)?)?)?;
            eq(&m, &lhs, &m.lin().id(&m.bang_obj(&a2)), &b)
        });
        let (m, a2, b) = (model.clone(), a.clone(), budget);
        r.case("bang.comonad-coassoc", &inst, move || {
            let lhs = m
                .lin()
                .compose(&m.promote(&a2)?, &m.promote(&m.bang_obj(&a2))?)?;
            let rhs = m
                .lin()
                .compose(&m.promote(&a2)?, &m.bang_mor(&m.promote(&a2)?)?)?;
            eq(&m, &lhs, &rhs, &b)
        });
        let (m, a2, b) = (model.clone(), a.clone(), budget);
        r.case("bang.functor-id", &inst, move || {
            let lhs = m.bang_mor(&m.lin().id(&a2))?;
            eq(&m, &lhs, &m.lin().id(&m.bang_obj(&a2)), &b)
        });
    }
    for a in &cat.l_objects {
        for bb in &cat.l_objects {
            let inst = format!("A={a},B={bb}");
            let (m, a2, b2, b) = (model.clone(), a.clone(), bb.clone(), budget);
            r.case("bang.lax-counit", &inst, move || {
                let lhs = m.lin().compose(
                    &m.bang_lax(&a2, &b2)?,
                    &m.counit(&m.lin().tensor_obj(&a2, &b2))?,
                )?;
                let rhs = m.lin().tensor_mor(&m.counit(&a2)?, &m.counit(&b2)?)?;
                eq(&m, &lhs, &rhs, &b)
            });
            let (m, a2, b2, b) = (model.clone(), a.clone(), bb.clone(), budget);
            r.case("bang.lax-comult", &inst, move || {
                let ab = m.lin().tensor_obj(&a2, &b2);
                let lhs = m.lin().compose(&m.bang_lax(&a2, &b2)?, &m.promote(&ab)?)?;
                let rhs = m.lin().compose_all(&[
                    &m.lin().tensor_mor(&m.promote(&a2)?, &m.promote(&b2)?)?,
                    &m.bang_lax(&m.bang_obj(&a2), &m.bang_obj(&b2))?,
                    &m.bang_mor(&m.bang_lax(&a2, &b2)?)?,
                ])?;
                eq(&m, &lhs, &rhs, &b)
            });
        }
    }

    // derived-versus-override cross checks
    for x in &cat.c_objects {
        let inst = format!("X={x}");
        let (m, x2, b) = (model.clone(), x.clone(), budget);
        r.case("lnl.derived-c", &inst, move || {
            let direct = m.contraction(&x2)?;
            let derived = derived_contraction(m.as_ref(), &x2)?;
            eq(&m, &direct, &derived, &b)
        });
        let (m, x2, b) = (model.clone(), x.clone(), budget);
        r.case("lnl.derived-w", &inst, move || {
            let direct = m.weakening(&x2)?;
            let derived = derived_weakening(m.as_ref(), &x2)?;
            eq(&m, &direct, &derived, &b)
        });
    }
    for a in &cat.l_objects {
        for bb in &cat.l_objects {
            let inst = format!("A={a},B={bb}");
            let (m, a2, b2, b) = (model.clone(), a.clone(), bb.clone(), budget);
            r.case("lnl.derived-seely", &inst, move || {
                let direct = m.seely(&a2, &b2)?;
                let derived = derived_seely(m.as_ref(), &a2, &b2)?;
                eq(&m, &direct, &derived, &b)
            });
        }
    }

    // additive monoidal compatibility (skipped when sums are unsupported)
    for (name, h) in cat.l_mors.iter().take(2) {
        let (m, h2, b) = (model.clone(), h.clone(), budget);
        r.case("addmon.tensor-sum", name, move || {
            let h = h2;
            let k = m.lin().id(&h.dom);
            let hh = m.lin().sum(&h, &h)?;
            let lhs = m.lin().tensor_mor(&k, &hh)?;
            let rhs = m
                .lin()
                .sum(&m.lin().tensor_mor(&k, &h)?, &m.lin().tensor_mor(&k, &h)?)?;
            eq(&m, &lhs, &rhs, &b)
        });
        let (m, h, b) = (model.clone(), h.clone(), budget);
        r.case("addmon.tensor-zero", name, move || {
            let k = m.lin().id(&h.dom);
            let z = m.lin().zero(&h.dom, &h.cod)?;
            let lhs = m.lin().tensor_mor(&k, &z)?;
            let rhs = m.lin().zero(&lhs.dom, &lhs.cod)?;
            eq(&m, &lhs, &rhs, &b)
        });
    }

    // promotion coherence (Kleisli promotion against the comonad data)
    for (name, f) in cat.c_mors.iter().take(4) {
        let (m, f2, b) = (model.clone(), f.clone(), budget);
        r.case("promotion.counit", name, move || {
            let f = f2;
            // F(f); d_Y recovers the underlying transducer
            let lhs = m
                .lin()
                .compose(&m.f_mor(&f)?, &m.counit(&m.cart().obj_cod(&f))?)?;
            eq(&m, &lhs, &f, &b)
        });
        let (m, f, b) = (model.clone(), f.clone(), budget);
        r.case("promotion.comult", name, move || {
            let y = m.cart().obj_cod(&f);
            let lhs = m.lin().compose(&m.f_mor(&f)?, &m.promote(&y)?)?;
            let rhs = m.lin().compose(
                &m.promote(&m.cart().obj_dom(&f))?,
                &m.bang_mor(&m.f_mor(&f)?)?,
            )?;
            eq(&m, &lhs, &rhs, &b)
        });
    }

    r.run()
}
