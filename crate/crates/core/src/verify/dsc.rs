//! The deriving-transform axiom family, checked over any structure that
//! exposes the Seely-category interface.
//!
//! Two implementations ship: [`TermDsc`] builds both sides of every
//! equation as combinator terms and evaluates them into a model, which is
//! how the base linear world is checked; [`FibreDsc`] instantiates the
//! same equations with the vertical morphisms of a fibre of the linear
//! simple fibration, whose deriving transform comes from the tangent
//! functor. One set of equations, two readings.

use super::catalog::Catalog;
use super::{Outcome, Runner, SuiteReport};
use crate::diff::{fibre_deriving, TangentFunctor};
use crate::fib::{
    fib_contraction, fib_counit, fib_promote, fib_weakening, fibre_biproj, fibre_inj,
    fibre_tensor, vert_compose, vert_equal, vert_id, vert_sum, vert_zero, VertLs,
};
use crate::lnl::LnlModel;
use crate::mor::{mor_equal, EqVerdict, ModelError};
use crate::term::{eval, MorTerm, Signature};
use crate::types::{Budget, Side, TypeExpr};
use std::sync::Arc;

/// The structure a deriving transform lives in: a symmetric monoidal
/// additive category with `!`-comonoid data, Seely maps and biproducts.
/// Objects are linear type expressions; the morphism representation is
/// the implementor's choice.
pub trait DscStructure: Send + Sync {
    type M: Clone + Send;

    fn id(&self, a: &TypeExpr) -> Result<Self::M, ModelError>;
    fn compose(&self, f: &Self::M, g: &Self::M) -> Result<Self::M, ModelError>;
    fn tensor(&self, f: &Self::M, g: &Self::M) -> Result<Self::M, ModelError>;
    fn sym(&self, a: &TypeExpr, b: &TypeExpr) -> Result<Self::M, ModelError>;
    fn sum(&self, f: &Self::M, g: &Self::M) -> Result<Self::M, ModelError>;
    fn zero(&self, dom: &TypeExpr, cod: &TypeExpr) -> Result<Self::M, ModelError>;
    fn counit(&self, a: &TypeExpr) -> Result<Self::M, ModelError>;
    fn weak(&self, a: &TypeExpr) -> Result<Self::M, ModelError>;
    fn contr(&self, a: &TypeExpr) -> Result<Self::M, ModelError>;
    fn promote(&self, a: &TypeExpr) -> Result<Self::M, ModelError>;
    fn deriving(&self, a: &TypeExpr) -> Result<Self::M, ModelError>;
    fn seely(&self, a: &TypeExpr, b: &TypeExpr) -> Result<Self::M, ModelError>;
    fn seely_inv(&self, a: &TypeExpr, b: &TypeExpr) -> Result<Self::M, ModelError>;
    fn bang_of(&self, h: &Self::M) -> Result<Self::M, ModelError>;
    fn equal(&self, f: &Self::M, g: &Self::M) -> Result<EqVerdict, ModelError>;

    /// Small morphisms `h : A -> B` for the naturality family.
    fn nat_instances(&self) -> Vec<(String, Self::M, TypeExpr, TypeExpr)>;

    fn seq(&self, ms: &[&Self::M]) -> Result<Self::M, ModelError> {
        let mut it = ms.iter();
        let mut acc = (*it.next().expect("seq of empty list")).clone();
        for m in it {
            acc = self.compose(&acc, m)?;
        }
        Ok(acc)
    }
}

fn bang(a: &TypeExpr) -> TypeExpr {
    TypeExpr::bang(a.clone())
}

fn t2(a: &TypeExpr, b: &TypeExpr) -> TypeExpr {
    TypeExpr::tensor2(a.clone(), b.clone())
}

/// The five deriving-transform rules plus naturality and the Seely
/// isomorphism laws, instantiated at every object of `objects`.
pub fn check_dsc<D: DscStructure + 'static>(
    d: Arc<D>,
    suite: &str,
    model_name: &str,
    objects: &[TypeExpr],
    catalog_label: &str,
    budget: Budget,
) -> SuiteReport {
    let mut r = Runner::new(suite, model_name, catalog_label, budget);
    for a in objects {
        let inst = format!("A={a}");
        let (s, a2) = (d.clone(), a.clone());
        r.case("d.1", &inst, move || {
            // constant rule: deriving; w = 0
            let lhs = s.compose(&s.deriving(&a2)?, &s.weak(&a2)?)?;
            let rhs = s.zero(&t2(&bang(&a2), &a2), &TypeExpr::Unit)?;
            Ok(Outcome::Eq(s.equal(&lhs, &rhs)?))
        });
        let (s, a2) = (d.clone(), a.clone());
        r.case("d.2", &inst, move || {
            // Leibniz rule
            let lhs = s.compose(&s.deriving(&a2)?, &s.contr(&a2)?)?;
            let first = s.tensor(&s.id(&bang(&a2))?, &s.deriving(&a2)?)?;
            let second = s.compose(
                &s.tensor(&s.id(&bang(&a2))?, &s.sym(&bang(&a2), &a2)?)?,
                &s.tensor(&s.deriving(&a2)?, &s.id(&bang(&a2))?)?,
            )?;
            let rhs = s.compose(
                &s.tensor(&s.contr(&a2)?, &s.id(&a2)?)?,
                &s.sum(&first, &second)?,
            )?;
            Ok(Outcome::Eq(s.equal(&lhs, &rhs)?))
        });
        let (s, a2) = (d.clone(), a.clone());
        r.case("d.3", &inst, move || {
            // linear rule: deriving; d = w (x) id
            let lhs = s.compose(&s.deriving(&a2)?, &s.counit(&a2)?)?;
            let rhs = s.tensor(&s.weak(&a2)?, &s.id(&a2)?)?;
            Ok(Outcome::Eq(s.equal(&lhs, &rhs)?))
        });
        let (s, a2) = (d.clone(), a.clone());
        r.case("d.4", &inst, move || {
            // chain rule: deriving; p = c (x) id; p (x) deriving; deriving
            let lhs = s.compose(&s.deriving(&a2)?, &s.promote(&a2)?)?;
            let rhs = s.seq(&[
                &s.tensor(&s.contr(&a2)?, &s.id(&a2)?)?,
                &s.tensor(&s.promote(&a2)?, &s.deriving(&a2)?)?,
                &s.deriving(&bang(&a2))?,
            ])?;
            Ok(Outcome::Eq(s.equal(&lhs, &rhs)?))
        });
        let (s, a2) = (d.clone(), a.clone());
        r.case("d.5", &inst, move || {
            // interchange rule
            let lhs = s.seq(&[
                &s.tensor(&s.id(&bang(&a2))?, &s.sym(&a2, &a2)?)?,
                &s.tensor(&s.deriving(&a2)?, &s.id(&a2)?)?,
                &s.deriving(&a2)?,
            ])?;
            let rhs = s.compose(
                &s.tensor(&s.deriving(&a2)?, &s.id(&a2)?)?,
                &s.deriving(&a2)?,
            )?;
            Ok(Outcome::Eq(s.equal(&lhs, &rhs)?))
        });
    }
    // naturality of the deriving transform
    for (name, h, dom, cod) in d.nat_instances() {
        let s = d.clone();
        r.case("d.nat", &name, move || {
            let lhs = s.compose(&s.tensor(&s.bang_of(&h)?, &h)?, &s.deriving(&cod)?)?;
            let rhs = s.compose(&s.deriving(&dom)?, &s.bang_of(&h)?)?;
            Ok(Outcome::Eq(s.equal(&lhs, &rhs)?))
        });
    }
    // Seely isomorphism laws
    for a in objects.iter().take(2) {
        for bb in objects.iter().take(2) {
            let inst = format!("A={a},B={bb}");
            let (s, a2, b2) = (d.clone(), a.clone(), bb.clone());
            r.case("seely.iso-right", &inst, move || {
                let lhs = s.compose(&s.seely(&a2, &b2)?, &s.seely_inv(&a2, &b2)?)?;
                let rhs = s.id(&bang(&TypeExpr::biproduct(a2.clone(), b2.clone())))?;
                Ok(Outcome::Eq(s.equal(&lhs, &rhs)?))
            });
            let (s, a2, b2) = (d.clone(), a.clone(), bb.clone());
            r.case("seely.iso-left", &inst, move || {
                let lhs = s.compose(&s.seely_inv(&a2, &b2)?, &s.seely(&a2, &b2)?)?;
                let rhs = s.id(&t2(&bang(&a2), &bang(&b2)))?;
                Ok(Outcome::Eq(s.equal(&lhs, &rhs)?))
            });
        }
    }
    r.run()
}

// ---------------------------------------------------------------------------
// the term-level reading over a model

/// Builds axiom sides as combinator terms and evaluates them into the
/// model's linear world.
pub struct TermDsc {
    pub model: Arc<dyn LnlModel>,
    pub sig: Signature,
    pub budget: Budget,
    pub nat_mors: Vec<(String, MorTerm, TypeExpr, TypeExpr)>,
}

impl DscStructure for TermDsc {
    type M = MorTerm;

    fn id(&self, a: &TypeExpr) -> Result<MorTerm, ModelError> {
        Ok(MorTerm::Id(a.clone()))
    }

    fn compose(&self, f: &MorTerm, g: &MorTerm) -> Result<MorTerm, ModelError> {
        Ok(MorTerm::compose(f.clone(), g.clone()))
    }

    fn tensor(&self, f: &MorTerm, g: &MorTerm) -> Result<MorTerm, ModelError> {
        Ok(MorTerm::tensor(f.clone(), g.clone()))
    }

    fn sym(&self, a: &TypeExpr, b: &TypeExpr) -> Result<MorTerm, ModelError> {
        Ok(MorTerm::Sym(a.clone(), b.clone()))
    }

    fn sum(&self, f: &MorTerm, g: &MorTerm) -> Result<MorTerm, ModelError> {
        Ok(MorTerm::sum(f.clone(), g.clone()))
    }

    fn zero(&self, dom: &TypeExpr, cod: &TypeExpr) -> Result<MorTerm, ModelError> {
        Ok(MorTerm::Zero(dom.clone(), cod.clone()))
    }

    fn counit(&self, a: &TypeExpr) -> Result<MorTerm, ModelError> {
        Ok(MorTerm::Counit(a.clone()))
    }

    fn weak(&self, a: &TypeExpr) -> Result<MorTerm, ModelError> {
        Ok(MorTerm::Weak(self.model.u_obj(a)))
    }

    fn contr(&self, a: &TypeExpr) -> Result<MorTerm, ModelError> {
        Ok(MorTerm::Contr(self.model.u_obj(a)))
    }

    fn promote(&self, a: &TypeExpr) -> Result<MorTerm, ModelError> {
        Ok(MorTerm::Promote(a.clone()))
    }

    fn deriving(&self, a: &TypeExpr) -> Result<MorTerm, ModelError> {
        Ok(MorTerm::Deriving(a.clone()))
    }

    fn seely(&self, a: &TypeExpr, b: &TypeExpr) -> Result<MorTerm, ModelError> {
        Ok(MorTerm::Seely(a.clone(), b.clone()))
    }

    fn seely_inv(&self, a: &TypeExpr, b: &TypeExpr) -> Result<MorTerm, ModelError> {
        Ok(MorTerm::SeelyInv(a.clone(), b.clone()))
    }

    fn bang_of(&self, h: &MorTerm) -> Result<MorTerm, ModelError> {
        Ok(MorTerm::FunF(Box::new(MorTerm::FunU(Box::new(h.clone())))))
    }

    fn equal(&self, f: &MorTerm, g: &MorTerm) -> Result<EqVerdict, ModelError> {
        let mf = eval(f, self.model.as_ref(), &self.sig)?;
        let mg = eval(g, self.model.as_ref(), &self.sig)?;
        mor_equal(&mf, &mg, self.model.atoms(), &self.budget)
    }

    fn nat_instances(&self) -> Vec<(String, MorTerm, TypeExpr, TypeExpr)> {
        self.nat_mors.clone()
    }
}

/// Term-level naturality instances from a catalog's linear morphisms,
/// exposed as generators of the signature.
pub fn term_nat_instances(
    cat: &Catalog,
    sig: &mut Signature,
) -> Vec<(String, MorTerm, TypeExpr, TypeExpr)> {
    let mut out = Vec::new();
    for (name, h) in cat.l_mors.iter() {
        if matches!(h.dom, TypeExpr::Atom(_)) && matches!(h.cod, TypeExpr::Atom(_)) {
            let gen_name = format!("nat:{name}");
            sig.generators.insert(
                gen_name.clone(),
                crate::term::GenSig {
                    world: crate::types::World::Linear,
                    dom: h.dom.clone(),
                    cod: h.cod.clone(),
                },
            );
            out.push((
                name.clone(),
                MorTerm::Generator(gen_name, h.dom.clone(), h.cod.clone()),
                h.dom.clone(),
                h.cod.clone(),
            ));
        }
    }
    out.truncate(3);
    out
}

// ---------------------------------------------------------------------------
// the fibre-level reading

/// The fibre of the linear simple fibration over a fixed base, with the
/// deriving transform produced by the tangent functor.
pub struct FibreDsc {
    pub tangent: Arc<TangentFunctor>,
    pub base: TypeExpr,
    pub budget: Budget,
}

impl FibreDsc {
    fn m(&self) -> &dyn LnlModel {
        self.tangent.model()
    }
}

impl DscStructure for FibreDsc {
    type M = VertLs;

    fn id(&self, a: &TypeExpr) -> Result<VertLs, ModelError> {
        vert_id(self.m(), &self.base, a)
    }

    fn compose(&self, f: &VertLs, g: &VertLs) -> Result<VertLs, ModelError> {
        vert_compose(self.m(), f, g)
    }

    fn tensor(&self, f: &VertLs, g: &VertLs) -> Result<VertLs, ModelError> {
        fibre_tensor(self.m(), f, g)
    }

    fn sym(&self, a: &TypeExpr, b: &TypeExpr) -> Result<VertLs, ModelError> {
        let m = self.m();
        let u = m
            .lin()
            .tensor_mor(&m.weakening(&self.base)?, &m.lin().sym(a, b))?;
        Ok(VertLs::new(
            self.base.clone(),
            TypeExpr::tensor2(a.clone(), b.clone()),
            TypeExpr::tensor2(b.clone(), a.clone()),
            u,
        ))
    }

    fn sum(&self, f: &VertLs, g: &VertLs) -> Result<VertLs, ModelError> {
        vert_sum(self.m(), f, g)
    }

    fn zero(&self, dom: &TypeExpr, cod: &TypeExpr) -> Result<VertLs, ModelError> {
        vert_zero(self.m(), &self.base, dom, cod)
    }

    fn counit(&self, a: &TypeExpr) -> Result<VertLs, ModelError> {
        fib_counit(self.m(), &self.base, a)
    }

    fn weak(&self, a: &TypeExpr) -> Result<VertLs, ModelError> {
        fib_weakening(self.m(), &self.base, &self.m().u_obj(a))
    }

    fn contr(&self, a: &TypeExpr) -> Result<VertLs, ModelError> {
        fib_contraction(self.m(), &self.base, &self.m().u_obj(a))
    }

    fn promote(&self, a: &TypeExpr) -> Result<VertLs, ModelError> {
        fib_promote(self.m(), &self.base, a)
    }

    fn deriving(&self, a: &TypeExpr) -> Result<VertLs, ModelError> {
        fibre_deriving(self.tangent.as_ref(), &self.base, a)
    }

    fn seely(&self, a: &TypeExpr, b: &TypeExpr) -> Result<VertLs, ModelError> {
        let m = self.m();
        let u = m
            .lin()
            .tensor_mor(&m.weakening(&self.base)?, &m.seely(a, b)?)?;
        Ok(VertLs::new(
            self.base.clone(),
            m.bang_obj(&TypeExpr::biproduct(a.clone(), b.clone())),
            TypeExpr::tensor2(m.bang_obj(a), m.bang_obj(b)),
            u,
        ))
    }

    fn seely_inv(&self, a: &TypeExpr, b: &TypeExpr) -> Result<VertLs, ModelError> {
        let m = self.m();
        let u = m
            .lin()
            .tensor_mor(&m.weakening(&self.base)?, &m.seely_inv(a, b)?)?;
        Ok(VertLs::new(
            self.base.clone(),
            TypeExpr::tensor2(m.bang_obj(a), m.bang_obj(b)),
            m.bang_obj(&TypeExpr::biproduct(a.clone(), b.clone())),
            u,
        ))
    }

    fn bang_of(&self, h: &VertLs) -> Result<VertLs, ModelError> {
        let m = self.m();
        let ls = crate::fib::bang_s(m, &h.to_ls(m))?;
        Ok(VertLs::new(
            self.base.clone(),
            ls.dom.fib.clone(),
            ls.cod.fib.clone(),
            ls.u,
        ))
    }

    fn equal(&self, f: &VertLs, g: &VertLs) -> Result<EqVerdict, ModelError> {
        vert_equal(self.m(), f, g, &self.budget)
    }

    fn nat_instances(&self) -> Vec<(String, VertLs, TypeExpr, TypeExpr)> {
        // a small family of vertical morphisms lifted from base relations
        let m = self.m();
        let mut out = Vec::new();
        let atoms: Vec<TypeExpr> = m
            .atoms()
            .names()
            .filter(|n| !m.atoms().carrier(n).is_empty())
            .take(2)
            .map(|n| TypeExpr::atom(n))
            .collect();
        if atoms.len() == 2 {
            let (a, b) = (&atoms[0], &atoms[1]);
            if let (Some(pa), Some(pb)) = (
                m.atoms().carrier(atom_name(a)).first(),
                m.atoms().carrier(atom_name(b)).first(),
            ) {
                let h = crate::mor::Mor::from_table(
                    a.clone(),
                    b.clone(),
                    vec![(
                        crate::types::Element::atom(pa),
                        vec![crate::types::Element::atom(pb)],
                    )],
                );
                if let Ok(w) = m.weakening(&self.base) {
                    if let Ok(u) = m.lin().tensor_mor(&w, &h) {
                        out.push((
                            format!("lift[{a}->{b}]"),
                            VertLs::new(self.base.clone(), a.clone(), b.clone(), u),
                            a.clone(),
                            b.clone(),
                        ));
                    }
                }
            }
        }
        out
    }
}

fn atom_name(t: &TypeExpr) -> &str {
    match t {
        TypeExpr::Atom(n) | TypeExpr::CartAtom(n) => n,
        _ => "",
    }
}

// ---------------------------------------------------------------------------
// convenience wrappers used by the CLI and the acceptance gate

/// Base-model deriving-transform suite via combinator terms.
pub fn check_dsc_base(model: Arc<dyn LnlModel>, cat: &Catalog, budget: Budget) -> SuiteReport {
    let mut sig = Signature::new(crate::term::WorldKind::Kleisli);
    let nat_mors = term_nat_instances(cat, &mut sig);
    let term_dsc = TermDsc {
        model: model.clone(),
        sig,
        budget,
        nat_mors,
    };
    check_dsc(
        Arc::new(term_dsc),
        "dsc",
        model.name(),
        &cat.l_objects,
        &cat.label,
        budget,
    )
}

/// Fibre deriving-transform suite over every catalog base object.
pub fn check_dsc_fibres(
    tangent: Arc<TangentFunctor>,
    cat: &Catalog,
    budget: Budget,
) -> SuiteReport {
    let model_name = tangent.model().name().to_string();
    let mut merged: Option<SuiteReport> = None;
    for base in &cat.c_objects {
        let fibre = FibreDsc {
            tangent: tangent.clone(),
            base: base.clone(),
            budget,
        };
        let objects: Vec<TypeExpr> = cat.l_objects.clone();
        let report = check_dsc(
            Arc::new(fibre),
            &format!("dsc-fibre[{base}]"),
            &model_name,
            &objects,
            &cat.label,
            budget,
        );
        merged = Some(match merged {
            None => report,
            Some(acc) => acc.merge(report),
        });
    }
    merged.unwrap_or_else(|| {
        Runner::new("dsc-fibre", &model_name, &cat.label, budget).run()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lnl::RelLnl;
    use crate::types::Atoms;
    use std::collections::BTreeMap;

    #[test]
    fn base_dsc_axioms_hold_in_rel() {
        let mut carriers = BTreeMap::new();
        carriers.insert("a".to_string(), vec!["x".to_string()]);
        let model: Arc<dyn LnlModel> = Arc::new(RelLnl::new(Atoms::new(carriers)));
        let cat = super::super::catalog::default_catalog(
            model.as_ref(),
            crate::term::WorldKind::Kleisli,
        )
        .unwrap();
        let report = check_dsc_base(model, &cat, Budget::new(4));
        assert_eq!(report.summary.fail, 0, "cases: {:?}", report.cases);
        assert!(report.summary.pass + report.summary.pass_up_to_budget > 0);
    }
}
