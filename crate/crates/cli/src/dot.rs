//! Graphviz output for the weak order and the support τ-tilting lattice.

use std::fmt::Write as _;

use preproj_core::weyl::{ElementId, WeylGroup};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn graph(name: &str, labels: &[String], edges: &[(ElementId, ElementId, String)]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {name} {{");
    let _ = writeln!(out, "  rankdir=TB;");
    for (w, label) in labels.iter().enumerate() {
        let _ = writeln!(out, "  n{w} [label={}];", quote(label));
    }
    for (a, b, label) in edges {
        let _ = writeln!(out, "  n{a} -> n{b} [label={}];", quote(label));
    }
    out.push_str("}\n");
    out
}

/// Hasse quiver of the right weak order: `w -> w s_i`, labelled `s_i`.
pub fn weak_order_dot(weyl: &WeylGroup) -> String {
    let labels: Vec<String> = (0..weyl.len()).map(|w| weyl.label(w)).collect();
    let edges: Vec<_> = weyl.weak_order().hasse.into_iter().map(|(a, b, i)| (a, b, format!("s{}", i + 1))).collect();
    graph("weak_order", &labels, &edges)
}

/// Hasse quiver of support τ-tilting modules `I_w`, with nodes named by their
/// summands and each left mutation `I_w -> I_w I_i` labelled `I_i`.
pub fn sttilt_dot(weyl: &WeylGroup, node_labels: &[String]) -> String {
    let edges: Vec<_> = weyl.weak_order().hasse.into_iter().map(|(a, b, i)| (a, b, format!("I{}", i + 1))).collect();
    graph("sttilt", node_labels, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use preproj_core::cartan::validate_gcm;

    #[test]
    fn a1_weak_order_has_two_nodes() {
        let weyl = WeylGroup::generate(&validate_gcm(vec![vec![2]], vec![1], None).unwrap()).unwrap();
        let dot = weak_order_dot(&weyl);
        assert!(dot.contains("n0 [label=\"e\"]") && dot.contains("n1 [label=\"s1\"]"));
        assert!(dot.contains("n0 -> n1 [label=\"s1\"]"));
        let st = sttilt_dot(&weyl, &[String::from("Pi"), String::from("0")]);
        assert!(st.contains("n0 -> n1 [label=\"I1\"]"));
    }
}
