use std::fmt::Write;

use super::{classify_raw, fmt_bits, EdgeKind, Family, Graph};

/// One `LABEL LABEL` line per edge, smaller label first, lines sorted,
/// LF-terminated. Labels are zero-padded binary of the graph's label width.
pub fn to_edge_list(g: &Graph) -> String {
    let width = g.label_width();
    let mut out = String::new();
    // Equal-width binary strings sort like their numeric values, and
    // `edges()` is already ordered by (u, v).
    for (u, v) in g.edges() {
        let _ = writeln!(
            out,
            "{} {}",
            fmt_bits(u64::from(u), width),
            fmt_bits(u64::from(v), width)
        );
    }
    out
}

fn graph_name(g: &Graph) -> String {
    match g.family() {
        Family::Varietal => format!("VQ{}", g.n()),
        Family::Hypercube => format!("Q{}", g.n()),
        Family::Circulant => format!("C{}", g.n()),
        Family::Generic => "G".to_string(),
    }
}

/// Undirected DOT rendering. Crossing edges of a varietal graph carry
/// `kind=crossing` and their `dimension`.
pub fn to_dot(g: &Graph) -> String {
    let width = g.label_width();
    let name = |v: u32| fmt_bits(u64::from(v), width);
    let mut out = String::new();
    let _ = writeln!(out, "graph {} {{", graph_name(g));
    for v in 0..g.vertex_count() as u32 {
        let _ = writeln!(out, "  \"{}\";", name(v));
    }
    for (u, v) in g.edges() {
        let class = (g.family() == Family::Varietal)
            .then(|| classify_raw(u64::from(u), u64::from(v)))
            .flatten();
        match class {
            Some(c) if c.kind == EdgeKind::Crossing => {
                let _ = writeln!(
                    out,
                    "  \"{}\" -- \"{}\" [kind=crossing, dimension={}];",
                    name(u),
                    name(v),
                    c.dimension
                );
            }
            _ => {
                let _ = writeln!(out, "  \"{}\" -- \"{}\";", name(u), name(v));
            }
        }
    }
    out.push_str("}\n");
    out
}
