//! File formats: graphs (JSON or plain edge lists), symmetric functions,
//! polynomials, edge sets and tree families.

use std::collections::BTreeMap;
use std::path::Path;

use chromagraph_core::{BasisId, EdgeSet, Graph, GraphFamily, Partition, Rational, SymFun, UniPoly, WeightedGraph};
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

/// Input that could not be read or understood.
#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("{path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error("invalid rational {0:?}")]
    Rational(String),
    #[error("invalid partition {0:?}")]
    Partition(String),
    #[error("invalid exponent {0:?}")]
    Exponent(String),
    #[error("{0}")]
    Graph(#[from] chromagraph_core::Error),
}

/// Graph JSON: `{"n": 3, "edges": [[0,1],[1,2]], "weights": [1,2,1]}`, with
/// `weights` optional.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDoc {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<usize>>,
}

impl GraphDoc {
    pub fn into_graph(self) -> Result<WeightedGraph, FormatError> {
        let graph = Graph::new(self.n, self.edges.into_iter().map(|[u, v]| (u, v)))?;
        Ok(match self.weights {
            Some(w) => WeightedGraph::new(graph, w)?,
            None => WeightedGraph::unit(graph),
        })
    }
}

impl From<&WeightedGraph> for GraphDoc {
    fn from(g: &WeightedGraph) -> Self {
        GraphDoc {
            n: g.vertex_count(),
            edges: g.graph().edges().iter().map(|&(u, v)| [u, v]).collect(),
            weights: (!g.is_unit()).then(|| g.weights().to_vec()),
        }
    }
}

pub fn graph_to_json(g: &WeightedGraph) -> String {
    serde_json::to_string(&GraphDoc::from(g)).expect("plain data serializes")
}

pub fn graph_from_json(text: &str) -> Result<WeightedGraph, FormatError> {
    serde_json::from_str::<GraphDoc>(text)?.into_graph()
}

/// Plain edge list: optional `n N` header, optional `weights w0 w1 ...` line,
/// one `u v` pair per line in edge order, `#` starts a comment. Without a
/// header the vertex count is one more than the largest endpoint.
pub fn graph_from_edge_list(text: &str) -> Result<WeightedGraph, FormatError> {
    let mut n = None;
    let mut weights = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: &str| FormatError::EdgeList { line: i + 1, message: message.to_string() };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let numbers = |fields: &[&str]| -> Result<Vec<usize>, FormatError> {
            fields.iter().map(|f| f.parse().map_err(|_| err(&format!("not a number: {f}")))).collect()
        };
        match fields[0] {
            "n" => {
                let [count] = numbers(&fields[1..])?[..] else {
                    return Err(err("expected `n N`"));
                };
                n = Some(count);
            }
            "weights" => weights = Some(numbers(&fields[1..])?),
            _ => {
                let [u, v] = numbers(&fields)?[..] else {
                    return Err(err("expected `u v`"));
                };
                edges.push((u, v));
            }
        }
    }
    let n = n.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    let graph = Graph::new(n, edges)?;
    Ok(match weights {
        Some(w) => WeightedGraph::new(graph, w)?,
        None => WeightedGraph::unit(graph),
    })
}

/// Reads a graph file, as JSON if its first non-blank character is `{` and
/// as an edge list otherwise.
pub fn read_graph(path: &Path) -> Result<WeightedGraph, FormatError> {
    let text = read(path)?;
    if text.trim_start().starts_with('{') {
        graph_from_json(&text)
    } else {
        graph_from_edge_list(&text)
    }
}

fn read(path: &Path) -> Result<String, FormatError> {
    std::fs::read_to_string(path).map_err(|source| FormatError::Read { path: path.display().to_string(), source })
}

pub fn rational_to_string(r: &Rational) -> String {
    r.to_string()
}

pub fn parse_rational(s: &str) -> Result<Rational, FormatError> {
    let bad = || FormatError::Rational(s.to_string());
    let t = s.trim();
    let (numer, denom) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let numer: num_bigint::BigInt = numer.parse().map_err(|_| bad())?;
    let denom: num_bigint::BigInt = denom.parse().map_err(|_| bad())?;
    if num_traits::Zero::is_zero(&denom) {
        return Err(bad());
    }
    Ok(Rational::new(numer, denom))
}

pub fn parse_partition(s: &str) -> Result<Partition, FormatError> {
    let bad = || FormatError::Partition(s.to_string());
    let inner = s.trim().strip_prefix('[').and_then(|t| t.strip_suffix(']')).ok_or_else(bad)?;
    let parts: Vec<usize> = if inner.trim().is_empty() {
        Vec::new()
    } else {
        inner.split(',').map(|p| p.trim().parse().map_err(|_| bad())).collect::<Result<_, _>>()?
    };
    Partition::from_parts(parts).map_err(|_| bad())
}

pub fn basis_name(basis: &BasisId) -> String {
    basis.to_string()
}

pub fn parse_basis(name: &str) -> BasisId {
    match name {
        "p" => BasisId::PowerSum,
        "m" => BasisId::Monomial,
        other => BasisId::Chromatic(other.to_string()),
    }
}

/// `{"basis": "p", "coeffs": {"[1,1]": "1", "[2]": "-1"}}`, terms in
/// partition order.
pub fn symfun_to_value(f: &SymFun) -> Value {
    let coeffs: Map<String, Value> =
        f.coeffs().iter().map(|(l, c)| (l.to_string(), Value::String(rational_to_string(c)))).collect();
    serde_json::json!({ "basis": basis_name(f.basis()), "coeffs": coeffs })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SymFunDoc {
    basis: String,
    coeffs: BTreeMap<String, String>,
}

pub fn symfun_from_json(text: &str) -> Result<SymFun, FormatError> {
    let doc: SymFunDoc = serde_json::from_str(text)?;
    let terms = doc
        .coeffs
        .iter()
        .map(|(l, c)| Ok((parse_partition(l)?, parse_rational(c)?)))
        .collect::<Result<Vec<_>, FormatError>>()?;
    Ok(SymFun::from_terms(parse_basis(&doc.basis), terms))
}

/// Exponent to coefficient, nonzero terms only, ascending exponents.
pub fn poly_to_value(p: &UniPoly) -> Value {
    let map: Map<String, Value> = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
        .map(|(k, c)| (k.to_string(), Value::String(rational_to_string(c))))
        .collect();
    Value::Object(map)
}

pub fn poly_from_json(text: &str) -> Result<UniPoly, FormatError> {
    let map: BTreeMap<String, String> = serde_json::from_str(text)?;
    let mut coeffs = Vec::new();
    for (k, c) in &map {
        let k: usize = k.parse().map_err(|_| FormatError::Exponent(k.clone()))?;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, Rational::from_integer(0.into()));
        }
        coeffs[k] += parse_rational(c)?;
    }
    Ok(UniPoly::from_coeffs(coeffs))
}

/// Sorted edge indices.
pub fn edge_set_to_value(s: EdgeSet) -> Value {
    Value::from(s.iter().collect::<Vec<usize>>())
}

/// Tree family JSON: member order to edge list, `{"1": [], "2": [[0,1]], ...}`.
/// Member `n` has `n` vertices.
pub fn family_from_json(name: &str, text: &str) -> Result<GraphFamily, FormatError> {
    let map: BTreeMap<String, Vec<[usize; 2]>> = serde_json::from_str(text)?;
    let mut members = BTreeMap::new();
    for (k, edges) in map {
        let n: usize = k.parse().map_err(|_| FormatError::Exponent(k.clone()))?;
        members.insert(n, Graph::new(n, edges.into_iter().map(|[u, v]| (u, v)))?);
    }
    // members must be 1, 2, ..., m; a gap truncates the family there
    let graphs = (1..).map_while(|n| members.remove(&n)).collect();
    Ok(GraphFamily::from_graphs(name, graphs))
}

pub fn read_family(path: &Path) -> Result<GraphFamily, FormatError> {
    let name = path.file_stem().map_or_else(|| "tree-family".to_string(), |s| s.to_string_lossy().into_owned());
    family_from_json(&name, &read(path)?)
}
