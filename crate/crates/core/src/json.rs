//! JSON forms of maps, plans, complexity results and cover certificates.
//! Vertices are written by identifier; maps are objects keyed by domain id
//! in domain order.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value as Json};

use crate::complexity::{ComplexityResult, Kind, QuasiHom, Value};
use crate::covers::{ClassKind, CoverCertificate, CoverResult, Witness};
use crate::decompose::{DesignPlan, TraceStep};
use crate::error::{Error, Result};
use crate::graph::{Graph, SubgraphRef};
use crate::hom::{MapFlags, VertexMap};
use crate::Piece;

pub type IdMap = Map<String, Json>;

fn id_map<'a>(pairs: impl IntoIterator<Item = (&'a str, &'a str)>) -> IdMap {
    pairs.into_iter().map(|(v, a)| (v.to_string(), Json::String(a.to_string()))).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VertexMapJson {
    pub domain: String,
    pub codomain: String,
    pub map: IdMap,
    pub flags: MapFlags,
}

impl From<&VertexMap> for VertexMapJson {
    fn from(f: &VertexMap) -> Self {
        VertexMapJson {
            domain: f.domain().label().to_string(),
            codomain: f.codomain().label().to_string(),
            map: id_map(f.pairs()),
            flags: f.flags(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PieceJson {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
    pub map: IdMap,
    #[serde(default)]
    pub surjective: bool,
}

fn sub_ids(sub: &SubgraphRef) -> (Vec<String>, Vec<[String; 2]>) {
    let g = sub.parent();
    let vertices = sub.vertices().iter().map(|&v| g.id(v).to_string()).collect();
    let edges = sub.edges().iter().map(|&(u, v)| [g.id(u).to_string(), g.id(v).to_string()]).collect();
    (vertices, edges)
}

impl From<&Piece> for PieceJson {
    fn from(p: &Piece) -> Self {
        let (vertices, edges) = sub_ids(&p.sub);
        PieceJson { vertices, edges, map: id_map(p.map.pairs()), surjective: p.map.flags().surjective }
    }
}

/// A quasi-homomorphism, optionally with the design data that produced it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PlanJson {
    pub source: String,
    pub target: String,
    pub kind: Kind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub colouring: Option<VertexMapJson>,
    pub pieces: Vec<PieceJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub optimal: Option<bool>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub trace: Vec<TraceStep>,
    /// Target vertex used for each class of the colouring, when the plan
    /// was post-composed with a clique of the target.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub embedding: Option<Vec<String>>,
}

impl From<&QuasiHom> for PlanJson {
    fn from(q: &QuasiHom) -> Self {
        PlanJson {
            source: q.source.label().to_string(),
            target: q.target.label().to_string(),
            kind: q.kind,
            colouring: None,
            pieces: q.pieces.iter().map(PieceJson::from).collect(),
            optimal: None,
            trace: Vec::new(),
            embedding: None,
        }
    }
}

impl From<&DesignPlan> for PlanJson {
    fn from(plan: &DesignPlan) -> Self {
        let mut out = PlanJson::from(&plan.quasi);
        out.colouring = Some(VertexMapJson::from(&plan.colouring));
        out.optimal = Some(plan.optimal);
        out.trace = plan.trace.clone();
        out.embedding = plan
            .embedding
            .as_ref()
            .map(|e| e.iter().map(|&a| plan.quasi.target.id(a).to_string()).collect());
        out
    }
}

fn index(g: &Graph, id: &str) -> Result<usize> {
    g.index_of(id).ok_or_else(|| Error::UnknownVertex(id.to_string()))
}

/// Rebuilds a quasi-homomorphism from its JSON form against the given
/// graphs. Structural problems (unknown vertices, non-edges, partial maps)
/// are errors; whether the pieces are homomorphisms and cover the source is
/// left to the verifier.
pub fn plan_from_json(plan: &PlanJson, g: &Graph, h: &Graph) -> Result<QuasiHom> {
    let source = Arc::new(g.clone());
    let target = Arc::new(h.clone());
    let pieces = plan
        .pieces
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let context = |e: Error| Error::Invalid(format!("piece {}: {e}", i + 1));
            let vertices = p.vertices.iter().map(|v| index(g, v)).collect::<Result<Vec<_>>>().map_err(context)?;
            let edges = p
                .edges
                .iter()
                .map(|[u, v]| Ok((index(g, u)?, index(g, v)?)))
                .collect::<Result<Vec<_>>>()
                .map_err(context)?;
            let sub = SubgraphRef::new(source.clone(), vertices, edges).map_err(context)?;
            let mut pairs = Vec::with_capacity(p.map.len());
            for (v, a) in &p.map {
                let a = a.as_str().ok_or_else(|| context(Error::Invalid(format!("image of {v} is not a string"))))?;
                pairs.push((v.as_str(), a));
            }
            let map = VertexMap::from_pairs(Arc::new(sub.to_graph()), target.clone(), pairs).map_err(context)?;
            Ok(Piece { sub, map })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(QuasiHom { source, target, pieces, kind: plan.kind })
}

pub fn parse_plan(text: &str) -> Result<PlanJson> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

/// `n` or the string `"inf"`.
pub fn value_json(v: Option<usize>) -> Json {
    v.map_or_else(|| json!("inf"), |k| json!(k))
}

pub fn complexity_json(r: &ComplexityResult) -> Json {
    let reason = match r.value {
        Value::Infinite(reason) => Some(reason),
        Value::Finite(_) => None,
    };
    json!({
        "value": value_json(r.value.finite()),
        "infinite_reason": reason,
        "kind": r.kind,
        "method": r.method,
        "lower": r.lower,
        "upper": r.upper,
        "trail": r.trail,
        "certificate": r.certificate.as_ref().map(PlanJson::from),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoverPieceJson {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
    /// `{"clique": [..]}`, `{"parts": [[..], ..]}` or `{"map": {..}}`.
    pub witness: Json,
}

pub fn cover_json(r: &CoverResult) -> Json {
    let cert: Option<&CoverCertificate> = r.certificate.as_ref();
    let pieces: Vec<CoverPieceJson> = cert
        .map(|c| {
            c.pieces
                .iter()
                .map(|p| {
                    let (vertices, edges) = sub_ids(&p.sub);
                    let g = p.sub.parent();
                    let ids = |vs: &[usize]| vs.iter().map(|&v| g.id(v).to_string()).collect::<Vec<_>>();
                    let witness = match &p.witness {
                        Witness::Clique(c) => json!({ "clique": ids(c) }),
                        Witness::Parts(parts) => {
                            json!({ "parts": parts.iter().map(|q| ids(q)).collect::<Vec<_>>() })
                        }
                        Witness::Map(f) => {
                            let h = c.target.as_ref().expect("map witnesses come with a target");
                            let pairs = vertices.iter().zip(f).map(|(v, &a)| (v.as_str(), h.id(a)));
                            json!({ "map": id_map(pairs) })
                        }
                        Witness::None => Json::Null,
                    };
                    CoverPieceJson { vertices, edges, witness }
                })
                .collect()
        })
        .unwrap_or_default();
    json!({
        "source": cert.map(|c| c.source.label().to_string()),
        "class": cert.map(|c| c.class),
        "target": cert.and_then(|c| c.target.as_ref().map(|t| t.label().to_string())),
        "value": value_json(r.value),
        "lower": r.lower,
        "pieces": pieces,
    })
}

/// Class as written in reports.
pub fn class_name(c: ClassKind) -> String {
    match c {
        ClassKind::Empty => "empty".into(),
        ClassKind::Clique => "clique".into(),
        ClassKind::LPartite(l) => format!("{l}-partite"),
        ClassKind::CompleteLPartite(l) => format!("complete {l}-partite"),
        ClassKind::Colourable => "colourable".into(),
        ClassKind::Predicate => "predicate".into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexity::{hom_complexity, MethodChoice};
    use crate::covers::clique_cover_number;
    use crate::decompose::{decompose_complete, verify_quasi_hom};
    use crate::graph::{generate, Family};

    fn gen(f: Family) -> Graph {
        generate(&f).unwrap()
    }

    #[test]
    fn plan_round_trip_verifies() {
        let plan = decompose_complete(5, 2).unwrap();
        let text = serde_json::to_string(&PlanJson::from(&plan)).unwrap();
        let back = parse_plan(&text).unwrap();
        assert_eq!(back.trace, plan.trace);
        let q = plan_from_json(&back, &gen(Family::Complete(5)), &gen(Family::Complete(2))).unwrap();
        assert_eq!(q, plan.quasi);
        assert!(verify_quasi_hom(&q, &gen(Family::Complete(5)), &gen(Family::Complete(2)), false).ok());
    }

    #[test]
    fn unknown_vertex_in_plan_is_an_error() {
        let mut plan = PlanJson::from(&decompose_complete(3, 2).unwrap());
        plan.pieces[0].vertices.push("zz".into());
        let err = plan_from_json(&plan, &gen(Family::Complete(3)), &gen(Family::Complete(2))).unwrap_err();
        assert!(err.to_string().contains("zz"), "{err}");
    }

    #[test]
    fn infinite_value_is_a_string() {
        let g = gen(Family::Complete(2));
        let h = gen(Family::Edgeless(2));
        let r = hom_complexity(&g, &h, MethodChoice::Auto).unwrap();
        let j = complexity_json(&r);
        assert_eq!(j["value"], "inf");
        assert_eq!(j["certificate"], Json::Null);
        let r = hom_complexity(&gen(Family::Cycle(5)), &g, MethodChoice::Auto).unwrap();
        assert_eq!(complexity_json(&r)["value"], 2);
    }

    #[test]
    fn map_keeps_domain_order() {
        let k3 = Arc::new(gen(Family::Complete(3)));
        let f = VertexMap::identity(k3);
        let j = serde_json::to_value(VertexMapJson::from(&f)).unwrap();
        let keys: Vec<&String> = j["map"].as_object().unwrap().keys().collect();
        assert_eq!(keys, ["1", "2", "3"]);
        assert_eq!(j["flags"]["hom"], true);
    }

    #[test]
    fn cover_witnesses() {
        let r = clique_cover_number(&gen(Family::Cycle(4))).unwrap();
        let j = cover_json(&r);
        assert_eq!(j["value"], 4);
        assert_eq!(j["class"]["class"], "clique");
        assert_eq!(j["pieces"][0]["witness"]["clique"].as_array().unwrap().len(), 2);
    }
}
