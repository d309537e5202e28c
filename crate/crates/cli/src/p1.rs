use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use wahlrank_core::{einlaz_predicate, p1_gauss_rank, EinLazConclusion, Hyperelliptic};

use crate::args::P1Args;
use crate::output::Row;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct P1Report {
    pub a: u32,
    pub b: u32,
    pub k: u32,
    pub domain_dim: u64,
    pub rank: u64,
    pub codomain_dim: u64,
    pub surjective: bool,
    pub prediction: EinLazConclusion,
    /// False only when the criterion predicts surjectivity and the map is not.
    pub agree: bool,
}

impl Row for P1Report {
    const HEADER: &'static [&'static str] = &[
        "a",
        "b",
        "k",
        "domain_dim",
        "rank",
        "codomain_dim",
        "surjective",
        "prediction",
        "agree",
    ];

    fn fields(&self) -> Vec<String> {
        let prediction = serde_json::to_value(self.prediction)
            .ok()
            .and_then(|v| v.as_str().map(str::to_owned))
            .unwrap_or_default();
        vec![
            self.a.to_string(),
            self.b.to_string(),
            self.k.to_string(),
            self.domain_dim.to_string(),
            self.rank.to_string(),
            self.codomain_dim.to_string(),
            self.surjective.to_string(),
            prediction,
            self.agree.to_string(),
        ]
    }
}

pub fn run(args: &P1Args) -> Vec<P1Report> {
    let mut triples = Vec::new();
    for a in args.a.0.clone() {
        for b in args.b.0.clone() {
            for k in args.k.0.clone() {
                triples.push((a, b, k));
            }
        }
    }
    triples
        .par_iter()
        .map(|&(a, b, k)| {
            let r = p1_gauss_rank(a, b, k);
            let prediction = einlaz_predicate(0, a, b, k, Hyperelliptic::Unknown);
            P1Report {
                a,
                b,
                k,
                domain_dim: r.domain_dim,
                rank: r.rank,
                codomain_dim: r.codomain_dim,
                surjective: r.surjective,
                prediction,
                agree: prediction == EinLazConclusion::NoConclusion || r.surjective,
            }
        })
        .collect()
}
