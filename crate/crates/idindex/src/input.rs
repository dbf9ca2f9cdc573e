//! Graph sources named on the command line.

use std::fs;
use std::path::{Path, PathBuf};

use idindex_core::{generate, parse_edge_list, FamilySpec, Graph, VertexLayout};

/// Errors while obtaining a graph.
#[derive(Debug, thiserror::Error)]
pub enum InputError {
    /// The file could not be read.
    #[error("cannot read {path}: {source}")]
    Io {
        /// File named on the command line.
        path: PathBuf,
        /// Underlying error.
        source: std::io::Error,
    },
    /// Edge-list or family problems.
    #[error("{0}")]
    Invalid(String),
}

/// A graph with the family it came from, if any.
#[derive(Debug, Clone)]
pub struct LoadedGraph {
    /// The graph itself.
    pub graph: Graph,
    /// Family spec for generated graphs.
    pub spec: Option<FamilySpec>,
    /// Vertex roles for generated graphs.
    pub layout: Option<VertexLayout>,
}

/// Builds a family member from its spec string.
pub fn from_family(spec: &str) -> Result<LoadedGraph, InputError> {
    let spec: FamilySpec = spec
        .parse()
        .map_err(|e| InputError::Invalid(format!("{e}")))?;
    let (graph, layout) = generate(&spec).map_err(|e| InputError::Invalid(format!("{e}")))?;
    Ok(LoadedGraph {
        graph,
        spec: Some(spec),
        layout: Some(layout),
    })
}

/// Reads an edge-list file.
pub fn from_edge_list_file(path: &Path) -> Result<LoadedGraph, InputError> {
    let text = fs::read_to_string(path).map_err(|source| InputError::Io {
        path: path.to_owned(),
        source,
    })?;
    let graph = parse_edge_list(&text)
        .map_err(|e| InputError::Invalid(format!("{}: {e}", path.display())))?;
    Ok(LoadedGraph {
        graph,
        spec: None,
        layout: None,
    })
}

/// Reads a JSON document named on the command line.
pub fn read_text(path: &Path) -> Result<String, InputError> {
    fs::read_to_string(path).map_err(|source| InputError::Io {
        path: path.to_owned(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    #[test]
    fn families_and_files() {
        let g = from_family("cycle:5").unwrap();
        assert_eq!(g.graph.n(), 5);
        assert!(from_family("cycle:2").is_err());
        assert!(from_family("hexagon:3").is_err());

        let mut file = tempfile::NamedTempFile::new().unwrap();
        writeln!(file, "0 1\n1 2").unwrap();
        let g = from_edge_list_file(file.path()).unwrap();
        assert_eq!(g.graph.edge_count(), 2);
        assert!(g.spec.is_none());
        assert!(matches!(
            from_edge_list_file(Path::new("/nonexistent/graph.el")),
            Err(InputError::Io { .. })
        ));
    }
}
