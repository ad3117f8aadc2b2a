//! Exact polynomial maps over the rationals.
//!
//! `Poly` is a sparse multivariate polynomial in normal form (no zero
//! coefficients), so structural equality is polynomial identity and every
//! axiom check below is an exact identity rather than a numeric
//! approximation. `PolyMap` tuples them into morphisms of the cartesian
//! left additive category whose differential operator is the Jacobian;
//! `dual_eval` is the independent forward-mode oracle for it.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

pub type Rat = BigRational;

pub fn rat(num: i64, den: i64) -> Rat {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rat {
    BigRational::from(BigInt::from(n))
}

#[derive(Clone, Debug, thiserror::Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
}

/// Sparse polynomial: exponent vector -> nonzero rational coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    pub arity: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl Poly {
    pub fn zero(arity: usize) -> Poly {
        Poly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(arity: usize, c: Rat) -> Poly {
        let mut p = Poly::zero(arity);
        p.add_term(vec![0; arity], c);
        p
    }

    pub fn var(arity: usize, idx: usize) -> Poly {
        assert!(idx < arity, "variable index out of range");
        let mut exps = vec![0; arity];
        exps[idx] = 1;
        let mut p = Poly::zero(arity);
        p.add_term(exps, Rat::one());
        p
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Rat) {
        debug_assert_eq!(exps.len(), self.arity);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let next = o.get().clone() + c;
                if next.is_zero() {
                    o.remove();
                } else {
                    o.insert(next);
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        debug_assert_eq!(self.arity, other.arity);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        debug_assert_eq!(self.arity, other.arity);
        let mut out = Poly::zero(self.arity);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exps: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(exps, c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        let mut out = Poly::zero(self.arity);
        for (e, k) in &self.terms {
            out.add_term(e.clone(), k.clone() * c.clone());
        }
        out
    }

    /// Formal partial derivative with respect to variable `idx`.
    pub fn partial(&self, idx: usize) -> Poly {
        let mut out = Poly::zero(self.arity);
        for (e, c) in &self.terms {
            if e[idx] == 0 {
                continue;
            }
            let mut exps = e.clone();
            exps[idx] -= 1;
            out.add_term(exps, c.clone() * int(e[idx] as i64));
        }
        out
    }

    /// Substitution of one polynomial per variable; all arguments share an
    /// arity that becomes the arity of the result.
    pub fn substitute(&self, args: &[Poly]) -> Poly {
        debug_assert_eq!(args.len(), self.arity);
        let new_arity = args.first().map(|p| p.arity).unwrap_or(0);
        let mut out = Poly::zero(new_arity);
        for (e, c) in &self.terms {
            let mut term = Poly::constant(new_arity, c.clone());
            for (idx, &exp) in e.iter().enumerate() {
                for _ in 0..exp {
                    term = term.mul(&args[idx]);
                }
            }
            out = out.add(&term);
        }
        out
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        debug_assert_eq!(point.len(), self.arity);
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (idx, &exp) in e.iter().enumerate() {
                for _ in 0..exp {
                    term *= point[idx].clone();
                }
            }
            acc += term;
        }
        acc
    }

    /// Evaluation over dual numbers `(value, epsilon-part)` with
    /// `epsilon^2 = 0`.
    pub fn eval_dual(&self, point: &[(Rat, Rat)]) -> (Rat, Rat) {
        debug_assert_eq!(point.len(), self.arity);
        let mut acc = (Rat::zero(), Rat::zero());
        for (e, c) in &self.terms {
            let mut term = (c.clone(), Rat::zero());
            for (idx, &exp) in e.iter().enumerate() {
                for _ in 0..exp {
                    let (a, b) = term;
                    let (x, dx) = &point[idx];
                    term = (a.clone() * x.clone(), a * dx.clone() + b * x.clone());
                }
            }
            acc = (acc.0 + term.0, acc.1 + term.1);
        }
        acc
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (idx, &exp) in e.iter().enumerate() {
                if exp == 1 {
                    write!(f, "*x{idx}")?;
                } else if exp > 1 {
                    write!(f, "*x{idx}^{exp}")?;
                }
            }
        }
        Ok(())
    }
}

/// A tuple of polynomials: a morphism `n -> m` of the polynomial category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMap {
    pub dom: usize,
    pub cod: usize,
    pub polys: Vec<Poly>,
}

impl PolyMap {
    pub fn new(dom: usize, polys: Vec<Poly>) -> PolyMap {
        for p in &polys {
            assert_eq!(p.arity, dom, "component arity mismatch");
        }
        PolyMap {
            dom,
            cod: polys.len(),
            polys,
        }
    }

    pub fn identity(n: usize) -> PolyMap {
        PolyMap::new(n, (0..n).map(|i| Poly::var(n, i)).collect())
    }

    pub fn zero(dom: usize, cod: usize) -> PolyMap {
        PolyMap::new(dom, vec![Poly::zero(dom); cod])
    }

    /// Diagrammatic composition: substitute `self` into `other`.
    pub fn compose(&self, other: &PolyMap) -> Result<PolyMap, PolyError> {
        if self.cod != other.dom {
            return Err(PolyError::ArityMismatch {
                expected: self.cod,
                found: other.dom,
            });
        }
        let polys = other
            .polys
            .iter()
            .map(|p| p.substitute(&self.polys))
            .collect();
        Ok(PolyMap::new(self.dom, polys))
    }

    pub fn add(&self, other: &PolyMap) -> Result<PolyMap, PolyError> {
        if self.dom != other.dom || self.cod != other.cod {
            return Err(PolyError::ArityMismatch {
                expected: self.dom,
                found: other.dom,
            });
        }
        let polys = self
            .polys
            .iter()
            .zip(&other.polys)
            .map(|(a, b)| a.add(b))
            .collect();
        Ok(PolyMap::new(self.dom, polys))
    }

    /// Pairing `<f,g>` into the product (arity concatenation).
    pub fn pair(&self, other: &PolyMap) -> Result<PolyMap, PolyError> {
        if self.dom != other.dom {
            return Err(PolyError::ArityMismatch {
                expected: self.dom,
                found: other.dom,
            });
        }
        let mut polys = self.polys.clone();
        polys.extend(other.polys.iter().cloned());
        Ok(PolyMap::new(self.dom, polys))
    }

    /// Projection `n + m -> n` (side 1) or `-> m` (side 2).
    pub fn proj(n: usize, m: usize, side: crate::types::Side) -> PolyMap {
        let dom = n + m;
        let range = match side {
            crate::types::Side::One => 0..n,
            crate::types::Side::Two => n..n + m,
        };
        PolyMap::new(dom, range.map(|i| Poly::var(dom, i)).collect())
    }

    pub fn eval(&self, point: &[Rat]) -> Result<Vec<Rat>, PolyError> {
        if point.len() != self.dom {
            return Err(PolyError::ArityMismatch {
                expected: self.dom,
                found: point.len(),
            });
        }
        Ok(self.polys.iter().map(|p| p.eval(point)).collect())
    }
}

impl fmt::Display for PolyMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.polys.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// The Jacobian-based differential operator:
/// `D[f](x, v) = J_f(x) . v`, a map `2n -> m` linear in `v`.
pub fn d_times_poly(f: &PolyMap) -> PolyMap {
    let n = f.dom;
    let dom = 2 * n;
    // embed the original variables as x_0..x_{n-1}, the vector as x_n..
    let embed: Vec<Poly> = (0..n).map(|i| Poly::var(dom, i)).collect();
    let mut polys = Vec::with_capacity(f.cod);
    for p in &f.polys {
        let mut acc = Poly::zero(dom);
        for j in 0..n {
            let dj = p.partial(j).substitute(&embed);
            acc = acc.add(&dj.mul(&Poly::var(dom, n + j)));
        }
        polys.push(acc);
    }
    PolyMap::new(dom, polys)
}

/// Forward-mode oracle: evaluates `f` over dual numbers at `x + eps v` and
/// extracts the epsilon part. Agrees exactly with `d_times_poly` evaluated
/// at `(x, v)`.
pub fn dual_number_oracle(f: &PolyMap, x: &[Rat], v: &[Rat]) -> Result<Vec<Rat>, PolyError> {
    if x.len() != f.dom || v.len() != f.dom {
        return Err(PolyError::ArityMismatch {
            expected: f.dom,
            found: x.len().max(v.len()),
        });
    }
    let duals: Vec<(Rat, Rat)> = x
        .iter()
        .cloned()
        .zip(v.iter().cloned())
        .collect();
    Ok(f.polys.iter().map(|p| p.eval_dual(&duals).1).collect())
}

// ---------------------------------------------------------------------------
// JSON encoding: one term list per output coordinate

#[derive(Serialize, Deserialize)]
struct TermJson {
    exponents: Vec<u32>,
    num: i64,
    den: i64,
}

#[derive(Serialize, Deserialize)]
struct PolyMapJson {
    arity: usize,
    outputs: Vec<Vec<TermJson>>,
}

impl Serialize for PolyMap {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        use serde::ser::Error;
        let outputs = self
            .polys
            .iter()
            .map(|p| {
                p.terms()
                    .map(|(e, c)| {
                        let num = i64::try_from(c.numer().clone())
                            .map_err(|_| S::Error::custom("coefficient exceeds i64"))?;
                        let den = i64::try_from(c.denom().clone())
                            .map_err(|_| S::Error::custom("coefficient exceeds i64"))?;
                        Ok(TermJson {
                            exponents: e.clone(),
                            num,
                            den,
                        })
                    })
                    .collect::<Result<Vec<_>, S::Error>>()
            })
            .collect::<Result<Vec<_>, S::Error>>()?;
        PolyMapJson {
            arity: self.dom,
            outputs,
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for PolyMap {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<PolyMap, D::Error> {
        use serde::de::Error;
        let raw = PolyMapJson::deserialize(de)?;
        let mut polys = Vec::with_capacity(raw.outputs.len());
        for terms in raw.outputs {
            let mut p = Poly::zero(raw.arity);
            for t in terms {
                if t.den <= 0 {
                    return Err(D::Error::custom("denominator must be positive"));
                }
                if t.exponents.len() != raw.arity {
                    return Err(D::Error::custom("exponent vector arity mismatch"));
                }
                p.add_term(t.exponents, rat(t.num, t.den));
            }
            polys.push(p);
        }
        Ok(PolyMap::new(raw.arity, polys))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::Side;

    fn square() -> PolyMap {
        // f(x) = x^2
        let mut p = Poly::zero(1);
        p.add_term(vec![2], int(1));
        PolyMap::new(1, vec![p])
    }

    #[test]
    fn composition_is_substitution() {
        // g(y) = y + 1 after f(x) = x^2 gives x^2 + 1
        let f = square();
        let mut g_poly = Poly::var(1, 0);
        g_poly.add_term(vec![0], int(1));
        let g = PolyMap::new(1, vec![g_poly]);
        let fg = f.compose(&g).unwrap();
        let mut expect = Poly::zero(1);
        expect.add_term(vec![2], int(1));
        expect.add_term(vec![0], int(1));
        assert_eq!(fg.polys[0], expect);
    }

    #[test]
    fn product_through_the_diagonal_squares() {
        // (x*y) o diagonal = x^2
        let mut xy = Poly::zero(2);
        xy.add_term(vec![1, 1], int(1));
        let mul = PolyMap::new(2, vec![xy]);
        let diag = PolyMap::identity(1).pair(&PolyMap::identity(1)).unwrap();
        let sq = diag.compose(&mul).unwrap();
        assert_eq!(sq, square());
    }

    #[test]
    fn left_additivity_holds_exactly() {
        let f = square();
        let g = PolyMap::identity(1);
        let h = square();
        let sum_then = f.compose(&g.add(&h).unwrap()).unwrap();
        let then_sum = f
            .compose(&g)
            .unwrap()
            .add(&f.compose(&h).unwrap())
            .unwrap();
        assert_eq!(sum_then, then_sum);
        let z = PolyMap::zero(1, 1);
        assert_eq!(f.compose(&z).unwrap(), PolyMap::zero(1, 1));
    }

    #[test]
    fn jacobian_of_square_is_2xv() {
        let d = d_times_poly(&square());
        let mut expect = Poly::zero(2);
        expect.add_term(vec![1, 1], int(2));
        assert_eq!(d.polys[0], expect);
    }

    #[test]
    fn jacobian_of_product_is_the_product_rule() {
        // f(x,y) = x*y -> y*v1 + x*v2
        let mut xy = Poly::zero(2);
        xy.add_term(vec![1, 1], int(1));
        let f = PolyMap::new(2, vec![xy]);
        let d = d_times_poly(&f);
        let mut expect = Poly::zero(4);
        expect.add_term(vec![0, 1, 1, 0], int(1));
        expect.add_term(vec![1, 0, 0, 1], int(1));
        assert_eq!(d.polys[0], expect);
    }

    #[test]
    fn dual_numbers_agree_with_the_jacobian() {
        // frozen: (3 + eps)^2 = 9 + 6 eps
        let f = square();
        let d = dual_number_oracle(&f, &[int(3)], &[int(1)]).unwrap();
        assert_eq!(d, vec![int(6)]);
        let dx = d_times_poly(&f);
        assert_eq!(dx.eval(&[int(3), int(1)]).unwrap(), vec![int(6)]);
    }

    #[test]
    fn constant_maps_differentiate_to_zero() {
        let c = PolyMap::new(1, vec![Poly::constant(1, rat(7, 2))]);
        let d = d_times_poly(&c);
        assert!(d.polys[0].is_zero());
        assert_eq!(
            dual_number_oracle(&c, &[int(5)], &[int(9)]).unwrap(),
            vec![int(0)]
        );
    }

    #[test]
    fn linear_maps_differentiate_to_themselves_in_v() {
        // M(x1,x2) = (2x1 + 3x2): D[M](x,v) = 2v1 + 3v2, independent of x
        let mut m = Poly::zero(2);
        m.add_term(vec![1, 0], int(2));
        m.add_term(vec![0, 1], int(3));
        let f = PolyMap::new(2, vec![m]);
        let d = d_times_poly(&f);
        let got = d
            .eval(&[int(10), int(20), int(1), int(2)])
            .unwrap();
        assert_eq!(got, vec![int(8)]);
    }

    #[test]
    fn proj_and_pair_satisfy_product_laws() {
        let p1 = PolyMap::proj(2, 1, Side::One);
        let p2 = PolyMap::proj(2, 1, Side::Two);
        let paired = p1.pair(&p2).unwrap();
        assert_eq!(paired, PolyMap::identity(3));
    }

    #[test]
    fn polymap_json_round_trips() {
        let f = square();
        let js = serde_json::to_string(&f).unwrap();
        let back: PolyMap = serde_json::from_str(&js).unwrap();
        assert_eq!(back, f);
    }
}
