//! Flag parsing helpers and output plumbing shared by the subcommands.

use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use preproj_core::{
    build_quiver, CasimirPolynomial, Quiver, QuiverSpec, Rep, Scalar, Vertex, Weight, WreathRep,
};

/// `A_plus_inf`, `A_inf`, `D_inf`, or `@file.json` with a quiver spec.
pub fn parse_quiver(arg: &str) -> Result<Quiver> {
    let spec: QuiverSpec = match arg {
        "A_plus_inf" => QuiverSpec::APlusInf,
        "A_inf" => QuiverSpec::AInf,
        "D_inf" => QuiverSpec::DInf,
        other => {
            let path = other
                .strip_prefix('@')
                .ok_or_else(|| anyhow!("unknown quiver `{other}`; use A_plus_inf, A_inf, D_inf or @file.json"))?;
            serde_json::from_str(&read_text(path)?)
                .with_context(|| format!("parsing quiver spec from {path}"))?
        }
    };
    Ok(build_quiver(spec)?)
}

/// `zero`, `explicit:v1,v2,…`, `khare:c0,c1,…` or `@file.json`. Explicit
/// values are scalars (`-1`, `3/2`, `1-2i`); the list is anchored at
/// vertex 0. Khare coefficients are rationals, low degree first.
pub fn parse_weight(arg: &str) -> Result<Weight> {
    if arg == "zero" {
        return Ok(Weight::zero());
    }
    if let Some(rest) = arg.strip_prefix("explicit:") {
        let rest = rest.trim_start_matches('[').trim_end_matches(']');
        let values = rest
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(Scalar::parse)
            .collect::<preproj_core::Result<Vec<_>>>()?;
        return Ok(Weight::explicit(values));
    }
    if let Some(rest) = arg.strip_prefix("khare:") {
        return Ok(preproj_core::khare_lambda(&CasimirPolynomial::parse(rest)?));
    }
    if let Some(path) = arg.strip_prefix('@') {
        return serde_json::from_str(&read_text(path)?)
            .with_context(|| format!("parsing weight from {path}"));
    }
    bail!("unknown weight `{arg}`; use zero, explicit:…, khare:… or @file.json")
}

/// Inclusive integer range `a..b`.
pub fn parse_window(arg: &str) -> Result<Vec<Vertex>> {
    let (a, b) = arg
        .split_once("..")
        .ok_or_else(|| anyhow!("window must look like 0..5"))?;
    let a: Vertex = a.trim().parse().context("window start")?;
    let b: Vertex = b.trim().parse().context("window end")?;
    if a > b {
        bail!("empty window {arg}");
    }
    Ok((a..=b).collect())
}

pub fn parse_scalar(arg: &str) -> Result<Scalar> {
    Ok(Scalar::parse(arg)?)
}

/// Comma-separated vertex list.
pub fn parse_vertices(arg: &str) -> Result<Vec<Vertex>> {
    arg.split(',')
        .map(|s| s.trim().parse::<Vertex>().with_context(|| format!("vertex `{s}`")))
        .collect()
}

/// Comma-separated reflection word, leftmost letter applied last.
pub fn parse_word(arg: &str) -> Result<preproj_core::ReflectionWord> {
    Ok(preproj_core::ReflectionWord(parse_vertices(arg)?))
}

/// Semicolon-separated diagrams, each a comma-separated row list: `2,1;3`.
pub fn parse_diagrams(arg: &str) -> Result<Vec<preproj_core::YoungDiagram>> {
    arg.split(';')
        .map(|d| {
            let rows = d
                .split(',')
                .map(|s| s.trim().parse::<usize>().with_context(|| format!("row `{s}`")))
                .collect::<Result<Vec<_>>>()?;
            Ok(preproj_core::YoungDiagram::new(rows)?)
        })
        .collect()
}

pub fn parse_partition(arg: &str) -> Result<Vec<usize>> {
    arg.split(',')
        .map(|s| s.trim().parse::<usize>().with_context(|| format!("part `{s}`")))
        .collect()
}

/// A module file: either the wreath schema (`components`) or the rank-1
/// schema (`dims`), promoted to rank 1.
pub fn read_module(path: &str) -> Result<WreathRep> {
    let text = read_text(path)?;
    let value: serde_json::Value =
        serde_json::from_str(&text).with_context(|| format!("parsing {path}"))?;
    if value.get("components").is_some() {
        Ok(serde_json::from_value::<WreathRep>(value)?)
    } else if value.get("dims").is_some() {
        let rep: Rep = serde_json::from_value(value)?;
        Ok(WreathRep::from_rank1(&rep))
    } else {
        bail!("{path} is neither a rank-1 module (dims) nor a wreath module (components)")
    }
}

pub fn read_text(path: &str) -> Result<String> {
    fs::read_to_string(Path::new(path)).with_context(|| format!("reading {path}"))
}
