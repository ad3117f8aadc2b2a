//! Category interfaces over element transducers.
//!
//! Both worlds of a model expose their plumbing through these traits: the
//! monoidal operations shared by everyone, the cartesian structure of the
//! non-linear world, and the additive/biproduct structure of the linear
//! world. Morphisms are always [`Mor`] values; what differs per world is
//! how objects combine and how composition works (plain relational for the
//! linear world, comonadic for a co-Kleisli world).

use crate::mor::{ModelError, Mor};
use crate::types::{Atoms, Side, TypeExpr};

pub trait MonCat: Send + Sync {
    fn atoms(&self) -> &Atoms;
    fn id(&self, x: &TypeExpr) -> Mor;
    fn compose(&self, f: &Mor, g: &Mor) -> Result<Mor, ModelError>;
    fn tensor_obj(&self, x: &TypeExpr, y: &TypeExpr) -> TypeExpr;
    fn unit_obj(&self) -> TypeExpr;
    fn tensor_mor(&self, f: &Mor, g: &Mor) -> Result<Mor, ModelError>;
    fn sym(&self, x: &TypeExpr, y: &TypeExpr) -> Mor;

    /// Commutative-monoid enrichment; unsupported unless the category is
    /// additive.
    fn sum(&self, _f: &Mor, _g: &Mor) -> Result<Mor, ModelError> {
        Err(ModelError::UnsupportedConstructor("Sum".into()))
    }

    fn zero(&self, _dom: &TypeExpr, _cod: &TypeExpr) -> Result<Mor, ModelError> {
        Err(ModelError::UnsupportedConstructor("Zero".into()))
    }

    fn compose_all(&self, mors: &[&Mor]) -> Result<Mor, ModelError> {
        let mut it = mors.iter();
        let mut acc = (*it.next().expect("compose_all of empty list")).clone();
        for m in it {
            acc = self.compose(&acc, m)?;
        }
        Ok(acc)
    }
}

/// Cartesian world. Objects of the category need not be the transducer
/// domains — in a co-Kleisli presentation a morphism `X -> Y` is carried by
/// a transducer `!X -> Y` — so the object view is explicit here.
pub trait CartCat: MonCat {
    fn pair(&self, f: &Mor, g: &Mor) -> Result<Mor, ModelError>;
    fn proj(&self, x: &TypeExpr, y: &TypeExpr, side: Side) -> Mor;
    fn terminal(&self, x: &TypeExpr) -> Mor;

    /// Transducer domain carrying a morphism out of object `x`.
    fn hom_dom(&self, x: &TypeExpr) -> TypeExpr;

    /// Category-level domain object of a morphism.
    fn obj_dom(&self, f: &Mor) -> TypeExpr;

    fn obj_cod(&self, f: &Mor) -> TypeExpr {
        f.cod.clone()
    }

    fn diag(&self, x: &TypeExpr) -> Result<Mor, ModelError> {
        self.pair(&self.id(x), &self.id(x))
    }

    /// Product of morphisms, `f x g`.
    fn prod_mor(&self, f: &Mor, g: &Mor) -> Result<Mor, ModelError> {
        let (xf, xg) = (self.obj_dom(f), self.obj_dom(g));
        let p1 = self.proj(&xf, &xg, Side::One);
        let p2 = self.proj(&xf, &xg, Side::Two);
        self.pair(&self.compose(&p1, f)?, &self.compose(&p2, g)?)
    }
}

/// Linear world with biproducts.
pub trait LinCat: MonCat {
    fn biprod_obj(&self, a: &TypeExpr, b: &TypeExpr) -> Result<TypeExpr, ModelError>;
    fn inj(&self, side: Side, l: &TypeExpr, r: &TypeExpr) -> Result<Mor, ModelError>;
    fn biproj(&self, side: Side, l: &TypeExpr, r: &TypeExpr) -> Result<Mor, ModelError>;

    /// Canonical `A (x) (B (+) C) -> (A (x) B) (+) (A (x) C)`.
    fn dist(&self, a: &TypeExpr, b: &TypeExpr, c: &TypeExpr) -> Result<Mor, ModelError>;

    /// Biproduct pairing `<f,g> = f;i1 + g;i2`.
    fn pair_biprod(&self, f: &Mor, g: &Mor) -> Result<Mor, ModelError> {
        let i1 = self.inj(Side::One, &f.cod, &g.cod)?;
        let i2 = self.inj(Side::Two, &f.cod, &g.cod)?;
        self.sum(&self.compose(f, &i1)?, &self.compose(g, &i2)?)
    }

    /// Biproduct of morphisms, `f (+) g`.
    fn biprod_mor(&self, f: &Mor, g: &Mor) -> Result<Mor, ModelError> {
        let p1 = self.biproj(Side::One, &f.dom, &g.dom)?;
        let p2 = self.biproj(Side::Two, &f.dom, &g.dom)?;
        self.pair_biprod(&self.compose(&p1, f)?, &self.compose(&p2, g)?)
    }
}
