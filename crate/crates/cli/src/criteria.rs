use anyhow::Result;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use wahlrank_core::{
    claimed_min_genus, enriques_predicate, plane_rank_formula, product_genus, product_predicate,
    sweep_min_genus, EnriquesData, ProductData,
};

use crate::args::CriteriaCommand;
use crate::output::InputError;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CriteriaAnswer {
    pub query: String,
    pub inputs: Value,
    pub result: Value,
    pub paper_statement: String,
}

fn answer(query: &str, inputs: Value, result: Value, tag: &str) -> CriteriaAnswer {
    CriteriaAnswer {
        query: query.into(),
        inputs,
        result,
        paper_statement: tag.into(),
    }
}

fn input<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T> {
    r.map_err(|e| InputError(e.to_string()).into())
}

pub fn run(cmd: &CriteriaCommand) -> Result<CriteriaAnswer> {
    Ok(match *cmd {
        CriteriaCommand::Product { g1, g2, d1, d2, k } => {
            let p = ProductData { g1, g2, d1, d2, k };
            let case = input(product_predicate(&p))?;
            answer("product", serde_json::to_value(p)?, serde_json::to_value(case)?, "product-surjectivity")
        }
        CriteriaCommand::Enriques { phi, k } => {
            let e = input(EnriquesData::new(phi, k))?;
            answer("enriques", serde_json::to_value(e)?, json!(enriques_predicate(&e)), "enriques-surjectivity")
        }
        CriteriaCommand::Genus { g1, g2, d1, d2 } => {
            let g = input(product_genus(g1, g2, d1, d2))?;
            answer("genus", json!({"g1": g1, "g2": g2, "d1": d1, "d2": d2}), json!(g), "product-curve-genus")
        }
        CriteriaCommand::PlaneFormula { d, k } => {
            let f = plane_rank_formula(d, k);
            let result = json!({
                "rank": f.rank.to_string(),
                "corank": f.corank.to_string(),
                "valid": f.valid,
            });
            answer("plane-formula", json!({"d": d, "k": k}), result, "plane-curve-rank")
        }
        CriteriaCommand::SweepMinGenus { g1, g2, k, bound } => {
            let best = input(sweep_min_genus(g1, g2, k, bound))?;
            let result = json!({
                "minimum": best,
                "closed_form": claimed_min_genus(k),
            });
            answer(
                "sweep-min-genus",
                json!({"g1": g1, "g2": g2, "k": k, "bound": bound}),
                result,
                "product-minimal-genus",
            )
        }
    })
}
