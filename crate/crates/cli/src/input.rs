use algconn::{parse_graph6, Graph, Result};
use clap::ValueEnum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Edgelist,
    Graph6,
}

/// Edge lists start with a `n m` header, so whitespace on the first
/// meaningful line means edge list. graph6 never contains spaces.
fn sniff(text: &str) -> InputFormat {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(line) if line.contains(char::is_whitespace) => InputFormat::Edgelist,
        _ => InputFormat::Graph6,
    }
}

/// One graph for edge-list input, one graph per non-empty line for graph6.
pub fn read_graphs(text: &str, format: Option<InputFormat>) -> Result<Vec<Graph>> {
    match format.unwrap_or_else(|| sniff(text)) {
        InputFormat::Edgelist => Ok(vec![Graph::parse_edge_list(text)?]),
        InputFormat::Graph6 => text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(parse_graph6)
            .collect(),
    }
}
