//! Graphviz rendering of bound quivers.

use std::fmt::Write;

use conequiver_core::BoundQuiver;

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' | '\\' => {
                out.push('\\');
                out.push(c);
            }
            '\n' => out.push_str("\\n"),
            _ => out.push(c),
        }
    }
    out.push('"');
    out
}

/// Deterministic DOT digraph. Nodes are `v{id}` labelled by vertex label.
/// Returning arrows (on any level) are dashed, connecting arrows dotted, and
/// each relation becomes a trailing comment.
pub fn export_dot(b: &BoundQuiver) -> String {
    let q = &b.quiver;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "// bound quiver: {} vertices, {} arrows, {} relations",
        q.vertex_count(),
        q.arrow_count(),
        b.relations.len()
    );
    if q.vertex_count() == 0 && b.relations.is_empty() {
        out.push_str("digraph { }\n");
        return out;
    }
    out.push_str("digraph {\n");
    for v in q.vertices() {
        let _ = writeln!(
            out,
            "  v{} [label={}];",
            v.id.0,
            quote(&v.label.to_string())
        );
    }
    for a in q.arrows() {
        let style = if a.label.is_returning() {
            ", style=dashed, color=blue"
        } else if a.label.is_connecting() {
            ", style=dotted"
        } else {
            ""
        };
        let _ = writeln!(
            out,
            "  v{} -> v{} [label={}{style}];",
            a.source.0,
            a.target.0,
            quote(&a.label.to_string())
        );
    }
    for r in &b.relations {
        let _ = writeln!(out, "  // relation {}", r.display(q));
    }
    out.push_str("}\n");
    out
}
