use crate::graph::Graph;

fn quoted(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz `graph` document with quoted labels and sorted edges.
pub fn emit_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        out.push_str(&format!("  {};\n", quoted(&v.token())));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!(
            "  {} -- {};\n",
            quoted(&u.token()),
            quoted(&v.token())
        ));
    }
    out.push_str("}\n");
    out
}
