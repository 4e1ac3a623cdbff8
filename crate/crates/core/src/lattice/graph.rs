use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{GramMatrix, LatticeError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub name: String,
    #[serde(rename = "self")]
    pub self_intersection: i64,
    #[serde(default = "one")]
    pub mult: i64,
}

fn one() -> i64 {
    1
}

/// An edge `[a, b]`, or `[a, b, k]` for `k` intersection points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Edge {
    Simple(String, String),
    Multiple(String, String, i64),
}

impl Edge {
    pub fn ends(&self) -> (&str, &str) {
        match self {
            Self::Simple(a, b) | Self::Multiple(a, b, _) => (a, b),
        }
    }

    pub fn multiplicity(&self) -> i64 {
        match self {
            Self::Simple(..) => 1,
            Self::Multiple(_, _, k) => *k,
        }
    }
}

/// Dual graph of a configuration of smooth rational curves.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualGraph {
    #[serde(default)]
    pub name: String,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
}

impl DualGraph {
    pub fn index_of(&self, name: &str) -> Result<usize, LatticeError> {
        self.vertices
            .iter()
            .position(|v| v.name == name)
            .ok_or_else(|| LatticeError::UnknownVertex(name.to_string()))
    }

    fn validate(&self) -> Result<(), LatticeError> {
        let mut seen = HashMap::new();
        for v in &self.vertices {
            if seen.insert(v.name.as_str(), ()).is_some() {
                return Err(LatticeError::DuplicateVertex(v.name.clone()));
            }
        }
        for e in &self.edges {
            let (a, b) = e.ends();
            self.index_of(a)?;
            self.index_of(b)?;
        }
        Ok(())
    }

    /// Symmetric adjacency counts, with edge multiplicities added up.
    pub fn adjacency(&self) -> Result<Vec<Vec<i64>>, LatticeError> {
        self.validate()?;
        let n = self.vertices.len();
        let mut a = vec![vec![0; n]; n];
        for e in &self.edges {
            let (x, y) = e.ends();
            let (i, j) = (self.index_of(x)?, self.index_of(y)?);
            a[i][j] += e.multiplicity();
            if i != j {
                a[j][i] += e.multiplicity();
            }
        }
        Ok(a)
    }

    /// Intersection matrix: self-intersections on the diagonal, numbers of
    /// intersection points off it.
    pub fn gram(&self) -> Result<GramMatrix, LatticeError> {
        let mut entries = self.adjacency()?;
        for (i, v) in self.vertices.iter().enumerate() {
            entries[i][i] = v.self_intersection;
        }
        GramMatrix::new(
            self.vertices.iter().map(|v| v.name.clone()).collect(),
            entries,
        )
    }

    pub fn multiplicities(&self) -> Vec<i64> {
        self.vertices.iter().map(|v| v.mult).collect()
    }

    pub fn is_connected(&self) -> Result<bool, LatticeError> {
        let a = self.adjacency()?;
        let n = a.len();
        if n == 0 {
            return Ok(false);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if a[i][j] > 0 && !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        Ok(seen.into_iter().all(|s| s))
    }

    /// Number of edge incidences counted with multiplicity.
    pub fn edge_count(&self) -> i64 {
        self.edges.iter().map(Edge::multiplicity).sum()
    }

    /// The same configuration with every multiplicity replaced.
    pub fn with_multiplicities(&self, mults: &[(&str, i64)]) -> Result<Self, LatticeError> {
        let mut g = self.clone();
        for v in g.vertices.iter_mut() {
            v.mult = 0;
        }
        for &(name, m) in mults {
            let i = g.index_of(name)?;
            g.vertices[i].mult = m;
        }
        Ok(g)
    }

    /// The subgraph on the vertices of positive multiplicity.
    pub fn support(&self) -> Self {
        let keep: Vec<&Vertex> = self.vertices.iter().filter(|v| v.mult > 0).collect();
        let names: Vec<&str> = keep.iter().map(|v| v.name.as_str()).collect();
        let edges = self
            .edges
            .iter()
            .filter(|e| {
                let (a, b) = e.ends();
                names.contains(&a) && names.contains(&b)
            })
            .cloned()
            .collect();
        Self {
            name: self.name.clone(),
            vertices: keep.into_iter().cloned().collect(),
            edges,
        }
    }
}
