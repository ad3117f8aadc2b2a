//! Finite instantiation catalogs.
//!
//! Every universally quantified law is tested exhaustively over a small
//! deterministic catalog of objects and morphisms: the declared atoms, the
//! objects one constructor deep, all table-backed maps over elements of
//! size at most two, and the named structure maps. The catalogs are small
//! enough to keep the suites inside their time budgets while exercising
//! every generator of the theory.

use crate::cat::{CartCat, MonCat};
use crate::fib::{fib_counit, ls_id, LsMor, LsObj};
use crate::lnl::LnlModel;
use crate::mor::{ModelError, Mor};
use crate::term::WorldKind;
use crate::types::{enumerate_elements, Atoms, Budget, Element, TypeExpr, ZERO_ATOM};

#[derive(Clone)]
pub struct Catalog {
    pub label: String,
    /// Base objects of the cartesian world.
    pub c_objects: Vec<TypeExpr>,
    /// Objects of the linear world used for per-object axiom families.
    pub l_objects: Vec<TypeExpr>,
    /// Named morphisms of the cartesian world.
    pub c_mors: Vec<(String, Mor)>,
    /// Named morphisms of the linear world (between catalog objects).
    pub l_mors: Vec<(String, Mor)>,
    /// Named morphisms of the linear simple category.
    pub ls_mors: Vec<(String, LsMor)>,
}

impl Catalog {
    /// Composable pairs of cartesian morphisms.
    pub fn c_pairs(&self, m: &dyn LnlModel) -> Vec<(String, Mor, Mor)> {
        let mut out = Vec::new();
        for (na, a) in &self.c_mors {
            for (nb, b) in &self.c_mors {
                if m.cart().obj_cod(a) == m.cart().obj_dom(b) {
                    out.push((format!("{na};{nb}"), a.clone(), b.clone()));
                }
            }
        }
        out
    }

    pub fn ls_pairs(&self) -> Vec<(String, LsMor, LsMor)> {
        let mut out = Vec::new();
        for (na, a) in &self.ls_mors {
            for (nb, b) in &self.ls_mors {
                if a.cod == b.dom {
                    out.push((format!("{na};{nb}"), a.clone(), b.clone()));
                }
            }
        }
        out
    }
}

fn declared_atoms(atoms: &Atoms, max_carrier: usize) -> Vec<String> {
    atoms
        .names()
        .filter(|n| n.as_str() != ZERO_ATOM && !atoms.carrier(n).is_empty())
        .filter(|n| atoms.carrier(n).len() <= max_carrier)
        .cloned()
        .collect()
}

/// All table-backed transducers from the elements of `dom_ty` (size <= 2)
/// into subsets of the elements of `cod` (size <= 2), in canonical order.
fn table_maps(
    atoms: &Atoms,
    dom_ty: &TypeExpr,
    cod: &TypeExpr,
    keep: &[usize],
) -> Result<Vec<(String, Mor)>, ModelError> {
    let b2 = Budget::new(2);
    let dom_pts = enumerate_elements(dom_ty, atoms, &b2)?;
    let cod_pts = enumerate_elements(cod, atoms, &b2)?;
    let n_subsets = 1usize << cod_pts.len();
    let total = n_subsets.pow(dom_pts.len() as u32);
    let mut out = Vec::new();
    for (slot, &index) in keep.iter().enumerate() {
        if index >= total {
            continue;
        }
        let mut table: Vec<(Element, Vec<Element>)> = Vec::new();
        let mut code = index;
        for p in &dom_pts {
            let mask = code % n_subsets;
            code /= n_subsets;
            let img: Vec<Element> = cod_pts
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, e)| e.clone())
                .collect();
            if !img.is_empty() {
                table.push((p.clone(), img));
            }
        }
        let _ = slot;
        out.push((
            format!("tbl{index}[{dom_ty}->{cod}]"),
            Mor::from_table(dom_ty.clone(), cod.clone(), table),
        ));
    }
    Ok(out)
}

/// Default catalog of a relational (Kleisli-world) model: atoms `a` (one
/// point) and `b` (two points), linear objects one constructor deep, all
/// small co-Kleisli tables between the atoms plus the named structure maps.
pub fn default_catalog(m: &dyn LnlModel, kind: WorldKind) -> Result<Catalog, ModelError> {
    match kind {
        WorldKind::Kleisli => kleisli_catalog(m),
        WorldKind::Cartesian => cartesian_catalog(m),
    }
}

fn kleisli_catalog(m: &dyn LnlModel) -> Result<Catalog, ModelError> {
    let atoms = m.atoms();
    let names = declared_atoms(atoms, 2);
    let a = TypeExpr::atom(names.first().map(String::as_str).unwrap_or("a"));
    let b = TypeExpr::atom(names.get(1).map(String::as_str).unwrap_or_else(|| {
        names.first().map(String::as_str).unwrap_or("a")
    }));
    let c_objects = vec![a.clone(), b.clone()];
    let l_objects = vec![a.clone(), b.clone()];

    let mut c_mors: Vec<(String, Mor)> = Vec::new();
    c_mors.push(("id(a)".into(), m.cart().id(&a)));
    c_mors.push(("id(b)".into(), m.cart().id(&b)));
    c_mors.push(("eta(a)".into(), m.eta(&a)?));
    c_mors.push(("term(a)".into(), m.cart().terminal(&a)));
    // all four co-Kleisli tables a -> a, a deterministic sample a -> b
    c_mors.extend(table_maps(
        atoms,
        &TypeExpr::bang(a.clone()),
        &a,
        &[1, 2, 3],
    )?);
    c_mors.extend(table_maps(
        atoms,
        &TypeExpr::bang(a.clone()),
        &b,
        &[1, 6, 9],
    )?);
    c_mors.extend(table_maps(
        atoms,
        &TypeExpr::bang(b.clone()),
        &a,
        &[5, 2],
    )?);

    let mut l_mors: Vec<(String, Mor)> = Vec::new();
    l_mors.push(("id(a)".into(), m.lin().id(&a)));
    l_mors.push(("zero(a,a)".into(), m.lin().zero(&a, &a)?));
    l_mors.push((
        "rel[x->y]".into(),
        Mor::from_table(
            a.clone(),
            b.clone(),
            vec![(Element::atom(first_point(atoms, &a)), points(atoms, &b))],
        ),
    ));
    l_mors.push((
        "rel[b->a]".into(),
        Mor::from_table(
            b.clone(),
            a.clone(),
            vec![(
                Element::atom(first_point(atoms, &b)),
                points(atoms, &a),
            )],
        ),
    ));
    l_mors.push(("d(a)".into(), m.counit(&a)?));

    let mut ls_mors: Vec<(String, LsMor)> = Vec::new();
    ls_mors.push((
        "id(a,a)".into(),
        ls_id(m, &LsObj::new(a.clone(), a.clone()))?,
    ));
    ls_mors.push((
        "d(a,a)".into(),
        fib_counit(m, &a, &a)?.to_ls(m),
    ));
    // table-backed (f, u) pairs: f : a -> a co-Kleisli, u : !a (x) a -> a
    let u_dom = TypeExpr::tensor2(TypeExpr::bang(a.clone()), a.clone());
    let u_tables = table_maps(atoms, &u_dom, &a, &[1, 2])?;
    let f_tables = table_maps(atoms, &TypeExpr::bang(a.clone()), &a, &[3, 1])?;
    for (fi, (fname, f)) in f_tables.iter().enumerate() {
        for (ui, (uname, u)) in u_tables.iter().enumerate() {
            if fi + ui >= 3 {
                continue;
            }
            ls_mors.push((
                format!("({fname},{uname})"),
                LsMor {
                    dom: LsObj::new(a.clone(), a.clone()),
                    cod: LsObj::new(a.clone(), a.clone()),
                    f: f.clone(),
                    u: u.clone(),
                },
            ));
        }
    }

    Ok(Catalog {
        label: format!(
            "atoms {{{}}}, tables over elements of size <= 2, structure maps",
            names.join(",")
        ),
        c_objects,
        l_objects,
        c_mors,
        l_mors,
        ls_mors,
    })
}

fn cartesian_catalog(m: &dyn LnlModel) -> Result<Catalog, ModelError> {
    let atoms = m.atoms();
    let names = declared_atoms(atoms, 2);
    let a = TypeExpr::cart_atom(names.first().map(String::as_str).unwrap_or("a"));
    let b = TypeExpr::cart_atom(names.get(1).map(String::as_str).unwrap_or_else(|| {
        names.first().map(String::as_str).unwrap_or("a")
    }));
    let mut c_mors: Vec<(String, Mor)> = vec![
        ("id(a)".into(), m.cart().id(&a)),
        ("id(b)".into(), m.cart().id(&b)),
        ("term(a)".into(), m.cart().terminal(&a)),
    ];
    // total functions between the two atoms
    for (i, target) in points(atoms, &b).into_iter().enumerate() {
        let table: Vec<(Element, Vec<Element>)> = points(atoms, &a)
            .into_iter()
            .map(|p| (p, vec![target.clone()]))
            .collect();
        c_mors.push((
            format!("const{i}[a->b]"),
            Mor::from_table(a.clone(), b.clone(), table),
        ));
    }
    if points(atoms, &b).len() > 1 {
        let pts = points(atoms, &b);
        let swap: Vec<(Element, Vec<Element>)> = pts
            .iter()
            .cloned()
            .zip(pts.iter().rev().cloned())
            .map(|(p, q)| (p, vec![q]))
            .collect();
        c_mors.push(("swap[b]".into(), Mor::from_table(b.clone(), b.clone(), swap)));
    }
    let l_mors = c_mors.clone();
    let mut ls_mors = Vec::new();
    ls_mors.push((
        "id(a,b)".into(),
        ls_id(m, &LsObj::new(a.clone(), b.clone()))?,
    ));
    Ok(Catalog {
        label: format!("finite sets over atoms {{{}}}", names.join(",")),
        c_objects: vec![a.clone(), b.clone()],
        l_objects: vec![a, b],
        c_mors,
        l_mors,
        ls_mors,
    })
}

fn points(atoms: &Atoms, ty: &TypeExpr) -> Vec<Element> {
    match ty {
        TypeExpr::Atom(n) | TypeExpr::CartAtom(n) => {
            atoms.carrier(n).iter().map(|v| Element::atom(v)).collect()
        }
        _ => vec![],
    }
}

fn first_point<'a>(atoms: &'a Atoms, ty: &TypeExpr) -> &'a str {
    match ty {
        TypeExpr::Atom(n) | TypeExpr::CartAtom(n) => atoms
            .carrier(n)
            .first()
            .map(String::as_str)
            .unwrap_or("x"),
        _ => "x",
    }
}
