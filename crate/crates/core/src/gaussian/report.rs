use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use log::{debug, warn};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::domain::{block_domain, block_rank, Backend, DomainMethod, Exact, Modular};
use super::GaussianMaps;
use crate::criteria::plane_rank_formula;
use crate::curve::{pluricanonical_dim_for_degree, PlaneCurve};
use crate::linalg::{is_prime, LinalgError};
use crate::Error;

/// Arithmetic used for a rank computation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Arithmetic {
    Exact,
    /// Ranks over `F_p` for each prime, reconciled by majority. Advisory.
    Modular(Vec<u64>),
    /// Modular screening followed by the exact computation, which is what
    /// gets reported.
    ModularThenExact(Vec<u64>),
}

impl fmt::Display for Arithmetic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |ps: &[u64]| {
            ps.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            Arithmetic::Exact => write!(f, "exact"),
            Arithmetic::Modular(ps) => write!(f, "modular:{}", join(ps)),
            Arithmetic::ModularThenExact(ps) => write!(f, "modular-then-exact:{}", join(ps)),
        }
    }
}

impl FromStr for Arithmetic {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        if s == "exact" {
            return Ok(Arithmetic::Exact);
        }
        let (kind, primes) = s
            .split_once(':')
            .ok_or_else(|| format!("unknown arithmetic {s:?}"))?;
        let primes = primes
            .split(',')
            .map(|p| p.trim().parse::<u64>().map_err(|e| format!("bad prime {p:?}: {e}")))
            .collect::<Result<Vec<_>, _>>()?;
        match kind {
            "modular" => Ok(Arithmetic::Modular(primes)),
            "modular-then-exact" => Ok(Arithmetic::ModularThenExact(primes)),
            _ => Err(format!("unknown arithmetic {kind:?}")),
        }
    }
}

impl Serialize for Arithmetic {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Arithmetic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Outcome of one rank computation. Field order is the wire order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaussReport {
    pub d: u32,
    pub k: u32,
    pub genus: u64,
    pub domain_dim: u64,
    pub rank: u64,
    pub codomain_dim: u64,
    pub corank: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub predicted_rank: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub predicted_corank: Option<u64>,
    pub in_theorem_range: bool,
    /// True iff a prediction exists and both rank and corank equal it.
    #[serde(rename = "match")]
    pub matches: bool,
    pub arithmetic: Arithmetic,
}

fn counts<B: Backend>(backend: &B, maps: &mut GaussianMaps, k: u32) -> Result<(u64, u64), LinalgError> {
    let mut domain_dim = 0;
    let mut rank = 0;
    let partition = maps.blocks(k);
    debug!("d={} k={}: {} blocks", maps.curve().degree(), k, partition.len());
    for columns in &partition {
        let domain = block_domain(backend, maps, columns, k, DomainMethod::Chain)?;
        domain_dim += backend.rows(&domain) as u64;
        rank += block_rank(backend, maps, columns, k, &domain)? as u64;
    }
    Ok((domain_dim, rank))
}

/// Per-prime counts reconciled by majority (ties go to the larger rank,
/// since a bad prime can only lower a rank).
fn modular_counts(maps: &mut GaussianMaps, k: u32, primes: &[u64]) -> Result<(u64, u64), Error> {
    if primes.is_empty() {
        return Err(Error::InvalidInput("modular arithmetic needs at least one prime".into()));
    }
    let mut tally: BTreeMap<(u64, u64), usize> = BTreeMap::new();
    for &p in primes {
        if !is_prime(p) {
            return Err(LinalgError::NotPrime(p).into());
        }
        match counts(&Modular(p), maps, k) {
            Ok(c) => *tally.entry(c).or_default() += 1,
            Err(LinalgError::BadPrime(p)) => warn!("prime {p} divides a coefficient denominator; skipped"),
            Err(e) => return Err(e.into()),
        }
    }
    if tally.len() > 1 {
        warn!("modular ranks disagree across primes for k={k}: {tally:?}");
    }
    tally
        .into_iter()
        .max_by_key(|&((_, rank), votes)| (votes, rank))
        .map(|(c, _)| c)
        .ok_or_else(|| Error::InvalidInput("every supplied prime divides a denominator".into()))
}

/// [`gamma_rank_with`] in exact arithmetic on a fresh curve.
pub fn gamma_rank(curve: &PlaneCurve, k: u32) -> Result<GaussReport, Error> {
    gamma_rank_with(&mut GaussianMaps::new(curve), k, &Arithmetic::Exact)
}

/// Rank and corank of the order-`k` Gaussian map of the canonical bundle,
/// with the closed-form prediction attached when one applies.
pub fn gamma_rank_with(
    maps: &mut GaussianMaps,
    k: u32,
    arithmetic: &Arithmetic,
) -> Result<GaussReport, Error> {
    let d = maps.curve().degree();
    if k > d - 3 {
        warn!("k = {k} exceeds d - 3 = {}; reporting raw values only", d - 3);
    }
    let (domain_dim, rank) = match arithmetic {
        Arithmetic::Exact => counts(&Exact, maps, k)?,
        Arithmetic::Modular(primes) => modular_counts(maps, k, primes)?,
        Arithmetic::ModularThenExact(primes) => {
            let screened = modular_counts(maps, k, primes)?;
            let exact = counts(&Exact, maps, k)?;
            if screened != exact {
                warn!("modular screening gave {screened:?}, exact gave {exact:?} (d={d}, k={k})");
            }
            exact
        }
    };
    let codomain_dim = pluricanonical_dim_for_degree(d, k + 2)?;
    let corank = codomain_dim.checked_sub(rank).ok_or_else(|| {
        Error::Inconsistent(format!(
            "rank {rank} exceeds h0(K^{}) = {codomain_dim}",
            k + 2
        ))
    })?;
    let formula = plane_rank_formula(d, k);
    let (predicted_rank, predicted_corank) = if formula.valid {
        (formula.rank_integer(), formula.corank_integer())
    } else {
        (None, None)
    };
    let matches = predicted_rank == Some(rank) && predicted_corank == Some(corank);
    Ok(GaussReport {
        d,
        k,
        genus: maps.curve().genus(),
        domain_dim,
        rank,
        codomain_dim,
        corank,
        predicted_rank,
        predicted_corank,
        in_theorem_range: formula.valid,
        matches,
        arithmetic: arithmetic.clone(),
    })
}
