//! Model configuration: the JSON surface shared by the command line and
//! the C API.
//!
//! A configuration selects a model, declares finite atom carriers, names
//! generator morphisms (extensional tables for the relational worlds,
//! polynomial tuples for the polynomial world), fixes the budget and picks
//! the suites to run.

use crate::diff::{tangent_from_dsc, TangentFunctor};
use crate::lnl::{Generator, LnlModel, Mutation, RelLnl, TrivialLnl};
use crate::poly::PolyMap;
use crate::term::{GenSig, Signature, WorldKind};
use crate::types::{Atoms, Budget, Element, TypeExpr, World, ZERO_ATOM};
use crate::verify::{catalog::default_catalog, SuiteReport};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ModelKind {
    #[serde(rename = "rel")]
    Rel,
    #[serde(rename = "trivial")]
    Trivial,
    #[serde(rename = "poly")]
    Poly,
    #[serde(rename = "kleisli-of-rel")]
    KleisliOfRel,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GenConfig {
    Table {
        #[serde(default = "default_world")]
        world: World,
        dom: TypeExpr,
        cod: TypeExpr,
        table: Vec<(Element, Vec<Element>)>,
    },
    Polys(PolyMap),
}

fn default_world() -> World {
    World::Linear
}

fn default_budget() -> Budget {
    Budget::new(4)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Config {
    pub model: ModelKind,
    #[serde(default)]
    pub atoms: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    pub generators: BTreeMap<String, GenConfig>,
    #[serde(default = "default_budget")]
    pub budget: Budget,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub suites: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mutation: Option<Mutation>,
}

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("invalid config: {0}")]
    Invalid(String),
    #[error("unknown atom '{0}' referenced by a generator type")]
    UnknownAtom(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("model: {0}")]
    Model(#[from] crate::mor::ModelError),
}

impl Config {
    pub fn from_json(s: &str) -> Result<Config, ConfigError> {
        let cfg: Config = serde_json::from_str(s)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        for (name, carrier) in &self.atoms {
            if name == ZERO_ATOM {
                return Err(ConfigError::Invalid(format!(
                    "atom name '{ZERO_ATOM}' is reserved for the empty-carrier object"
                )));
            }
            if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(ConfigError::Invalid(format!(
                    "atom name '{name}' must be alphanumeric"
                )));
            }
            if carrier.is_empty() {
                return Err(ConfigError::Invalid(format!(
                    "atom '{name}' has an empty carrier"
                )));
            }
            for v in carrier {
                if v == "*" || v.is_empty() {
                    return Err(ConfigError::Invalid(format!(
                        "carrier value '{v}' of atom '{name}' is reserved"
                    )));
                }
            }
        }
        for (gname, gen) in &self.generators {
            if let GenConfig::Table { dom, cod, .. } = gen {
                for ty in [dom, cod] {
                    for atom in atom_names(ty) {
                        if atom != ZERO_ATOM && !self.atoms.contains_key(&atom) {
                            return Err(ConfigError::UnknownAtom(format!(
                                "{atom} (in generator '{gname}')"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn world_kind(&self) -> WorldKind {
        match self.model {
            ModelKind::Trivial | ModelKind::Poly => WorldKind::Cartesian,
            ModelKind::Rel | ModelKind::KleisliOfRel => WorldKind::Kleisli,
        }
    }

    pub fn signature(&self) -> Signature {
        let mut sig = Signature::new(self.world_kind());
        for (name, gen) in &self.generators {
            if let GenConfig::Table {
                world, dom, cod, ..
            } = gen
            {
                sig.generators.insert(
                    name.clone(),
                    GenSig {
                        world: *world,
                        dom: dom.canonicalize(),
                        cod: cod.canonicalize(),
                    },
                );
            }
        }
        sig
    }
}

fn atom_names(ty: &TypeExpr) -> Vec<String> {
    match ty {
        TypeExpr::Atom(n) | TypeExpr::CartAtom(n) => vec![n.clone()],
        TypeExpr::Unit | TypeExpr::CartUnit => vec![],
        TypeExpr::Tensor(fs) | TypeExpr::CartProd(fs) => fs.iter().flat_map(atom_names).collect(),
        TypeExpr::Biproduct(l, r) => {
            let mut out = atom_names(l);
            out.extend(atom_names(r));
            out
        }
        TypeExpr::Bang(inner) => atom_names(inner),
    }
}

/// A constructed model, ready to evaluate terms or run suites.
pub enum BuiltModel {
    Lnl {
        model: Arc<dyn LnlModel>,
        signature: Signature,
        tangent: Option<Arc<TangentFunctor>>,
    },
    Poly {
        maps: BTreeMap<String, PolyMap>,
    },
}

pub fn build_model(cfg: &Config) -> Result<BuiltModel, ConfigError> {
    match cfg.model {
        ModelKind::Poly => {
            let mut maps = BTreeMap::new();
            for (name, gen) in &cfg.generators {
                match gen {
                    GenConfig::Polys(p) => {
                        maps.insert(name.clone(), p.clone());
                    }
                    GenConfig::Table { .. } => {
                        return Err(ConfigError::Invalid(format!(
                            "generator '{name}': the polynomial model takes polynomial tuples"
                        )))
                    }
                }
            }
            Ok(BuiltModel::Poly { maps })
        }
        ModelKind::Trivial => {
            let atoms = Atoms::new(cfg.atoms.clone());
            let generators = build_generators(cfg)?;
            let model: Arc<dyn LnlModel> =
                Arc::new(TrivialLnl::with_generators(atoms, generators));
            Ok(BuiltModel::Lnl {
                model,
                signature: cfg.signature(),
                tangent: None,
            })
        }
        ModelKind::Rel | ModelKind::KleisliOfRel => {
            let atoms = Atoms::new(cfg.atoms.clone());
            let generators = build_generators(cfg)?;
            let model: Arc<dyn LnlModel> =
                Arc::new(RelLnl::with_generators(atoms, generators, cfg.mutation));
            let tangent = Some(Arc::new(tangent_from_dsc(model.clone())));
            Ok(BuiltModel::Lnl {
                model,
                signature: cfg.signature(),
                tangent,
            })
        }
    }
}

fn build_generators(cfg: &Config) -> Result<BTreeMap<String, Generator>, ConfigError> {
    let mut out = BTreeMap::new();
    for (name, gen) in &cfg.generators {
        match gen {
            GenConfig::Table {
                world,
                dom,
                cod,
                table,
            } => {
                let (dom, cod) = (dom.canonicalize(), cod.canonicalize());
                // cartesian-world generators of a Kleisli model are carried
                // by transducers out of !dom
                let carrier_dom = match (cfg.world_kind(), world) {
                    (WorldKind::Kleisli, World::Cartesian) => TypeExpr::bang(dom.clone()),
                    _ => dom.clone(),
                };
                out.insert(
                    name.clone(),
                    Generator {
                        world: *world,
                        mor: crate::mor::Mor::from_table(carrier_dom, cod, table.clone()),
                    },
                );
            }
            GenConfig::Polys(_) => {
                return Err(ConfigError::Invalid(format!(
                    "generator '{name}': polynomial tuples only fit the poly model"
                )))
            }
        }
    }
    Ok(out)
}

/// Suites a model runs when the config does not select any.
pub fn default_suites(kind: ModelKind) -> Vec<&'static str> {
    match kind {
        ModelKind::Rel => vec!["lnl", "fibration", "dsc"],
        ModelKind::Trivial => vec!["lnl", "fibration"],
        ModelKind::Poly => vec!["cdc"],
        ModelKind::KleisliOfRel => vec!["gdsc", "dsc-fibre", "gcdc", "probe-gcdc7"],
    }
}

/// Runs the selected suites and merges their cases into one report.
pub fn run_check(cfg: &Config) -> Result<SuiteReport, ConfigError> {
    let wanted: Vec<String> = cfg.suites.clone().unwrap_or_else(|| {
        default_suites(cfg.model)
            .iter()
            .map(|s| s.to_string())
            .collect()
    });
    let budget = cfg.budget;
    let built = build_model(cfg)?;
    let mut merged: Option<SuiteReport> = None;
    let mut push = |rep: SuiteReport| {
        merged = Some(match merged.take() {
            None => rep,
            Some(acc) => acc.merge(rep),
        });
    };
    match &built {
        BuiltModel::Poly { .. } => {
            for suite in &wanted {
                match suite.as_str() {
                    "cdc" => push(crate::verify::cdc::check_cdc(budget)),
                    other => {
                        return Err(ConfigError::Invalid(format!(
                            "suite '{other}' does not run on the polynomial model"
                        )))
                    }
                }
            }
        }
        BuiltModel::Lnl { model, tangent, .. } => {
            let cat = default_catalog(model.as_ref(), cfg.world_kind())?;
            let need_tangent = |t: &Option<Arc<TangentFunctor>>| {
                t.clone()
                    .ok_or_else(|| ConfigError::Invalid("model has no tangent functor".into()))
            };
            for suite in &wanted {
                match suite.as_str() {
                    "lnl" => push(crate::verify::lnl_suite::check_lnl(
                        model.clone(),
                        &cat,
                        budget,
                    )),
                    "fibration" => push(crate::verify::fib_suite::check_fibration(
                        model.clone(),
                        &cat,
                        budget,
                    )),
                    "dsc" => push(crate::verify::dsc::check_dsc_base(
                        model.clone(),
                        &cat,
                        budget,
                    )),
                    "dsc-fibre" => push(crate::verify::dsc::check_dsc_fibres(
                        need_tangent(tangent)?,
                        &cat,
                        budget,
                    )),
                    "gdsc" => push(crate::verify::gdsc::check_gdsc(
                        need_tangent(tangent)?,
                        &cat,
                        budget,
                    )),
                    "gcdc" => push(crate::verify::cdc::check_gcdc(
                        need_tangent(tangent)?,
                        &cat,
                        budget,
                    )),
                    "probe-gcdc7" => push(crate::verify::gdsc::probe_gcdc7(
                        need_tangent(tangent)?,
                        &cat,
                        budget,
                    )),
                    other => {
                        return Err(ConfigError::Invalid(format!("unknown suite '{other}'")))
                    }
                }
            }
        }
    }
    merged.ok_or_else(|| ConfigError::Invalid("no suites selected".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel_config() -> Config {
        serde_json::from_value(serde_json::json!({
            "model": "rel",
            "atoms": {"a": ["x"]},
            "budget": {"N": 3, "maxElements": 100000, "seed": 7}
        }))
        .unwrap()
    }

    #[test]
    fn minimal_config_builds_a_rel_model() {
        let cfg = rel_config();
        cfg.validate().unwrap();
        match build_model(&cfg).unwrap() {
            BuiltModel::Lnl { model, tangent, .. } => {
                assert_eq!(model.name(), "rel");
                assert!(tangent.is_some());
            }
            _ => panic!("expected an LNL model"),
        }
    }

    #[test]
    fn unknown_atom_in_generator_is_diagnosed() {
        let cfg: Config = serde_json::from_value(serde_json::json!({
            "model": "rel",
            "atoms": {"a": ["x"]},
            "generators": {
                "f": {"world": "l", "dom": {"Atom": "ghost"}, "cod": {"Atom": "a"}, "table": []}
            }
        }))
        .unwrap();
        match cfg.validate() {
            Err(ConfigError::UnknownAtom(msg)) => assert!(msg.contains("ghost")),
            other => panic!("expected unknown-atom error, got {other:?}"),
        }
    }

    #[test]
    fn empty_carriers_are_rejected() {
        let cfg: Config = serde_json::from_value(serde_json::json!({
            "model": "rel",
            "atoms": {"a": []}
        }))
        .unwrap();
        assert!(matches!(cfg.validate(), Err(ConfigError::Invalid(_))));
    }

    #[test]
    fn reserved_zero_atom_is_rejected() {
        let cfg: Config = serde_json::from_value(serde_json::json!({
            "model": "rel",
            "atoms": {"0": ["x"]}
        }))
        .unwrap();
        assert!(matches!(cfg.validate(), Err(ConfigError::Invalid(_))));
    }
}
