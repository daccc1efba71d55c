//! Human-readable and JSON descriptions of an instance before construction.

use std::fmt::Write as _;

use preproj_core::cartan::{classify, CartanData, CartanTag};
use preproj_core::quiver::{quiver_presentation, Path, PresentationMode, QuiverPresentation, Relation};
use serde_json::{json, Value};

/// Written order with runs of one arrow collapsed, e.g. `eps1^2 a12`.
pub fn format_path(p: &QuiverPresentation, path: &Path) -> String {
    if path.arrows.is_empty() {
        return format!("e{}", path.source + 1);
    }
    let mut parts: Vec<String> = Vec::new();
    let mut run = 0;
    for (t, &a) in path.arrows.iter().enumerate() {
        run += 1;
        if path.arrows.get(t + 1) != Some(&a) {
            let name = &p.arrows[a].name;
            parts.push(if run == 1 { name.clone() } else { format!("{name}^{run}") });
            run = 0;
        }
    }
    parts.join(" ")
}

pub fn format_relation(p: &QuiverPresentation, r: &Relation) -> String {
    let mut out = String::new();
    for (t, (path, &c)) in r.terms.iter().enumerate() {
        let sign = if c < 0 {
            "-"
        } else if t == 0 {
            ""
        } else {
            "+"
        };
        let mag = if c.abs() == 1 { String::new() } else { format!("{} ", c.abs()) };
        if t > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{sign}{}{mag}{}", if t > 0 && !sign.is_empty() { " " } else { "" }, format_path(p, path));
    }
    format!("{}: {} = 0", r.label, out)
}

fn tag_name(tag: CartanTag) -> &'static str {
    match tag {
        CartanTag::Dynkin => "Dynkin",
        CartanTag::Euclidean => "Euclidean",
        CartanTag::Other => "indefinite",
    }
}

pub fn inspect_text(cd: &CartanData) -> String {
    let class = classify(cd);
    let n = cd.rank();
    let mut out = String::new();
    let _ = writeln!(out, "rank: {n}");
    let _ = writeln!(out, "cartan: {:?}", cd.cartan());
    let _ = writeln!(out, "symmetrizer: {:?}", cd.symmetrizer());
    let orientation: Vec<(usize, usize)> = cd.orientation().iter().map(|&(i, j)| (i + 1, j + 1)).collect();
    let _ = writeln!(out, "orientation: {orientation:?}");
    let _ = writeln!(
        out,
        "classification: {}{}",
        tag_name(class.tag),
        if class.connected { "" } else { " (disconnected)" }
    );
    let _ = writeln!(out, "valued graph:");
    for (i, j) in cd.edges() {
        let _ = writeln!(
            out,
            "  {}-{}: c_ij = {}, c_ji = {}, g_ij = {}, f_ij = {}, f_ji = {}",
            i + 1,
            j + 1,
            cd.entry(i, j),
            cd.entry(j, i),
            cd.g(i, j).unwrap_or(0),
            cd.f(i, j).unwrap_or(0),
            cd.f(j, i).unwrap_or(0)
        );
    }
    if class.tag != CartanTag::Dynkin {
        let _ = writeln!(out, "note: Pi not constructed (finite dimension needs Dynkin type)");
    }
    let p = quiver_presentation(cd, PresentationMode::Pi);
    let _ = writeln!(out, "arrows:");
    for a in &p.arrows {
        let _ = writeln!(out, "  {}: {} -> {}", a.name, a.source + 1, a.target + 1);
    }
    let _ = writeln!(out, "relations:");
    for r in &p.relations {
        let _ = writeln!(out, "  {}", format_relation(&p, r));
    }
    out
}

pub fn inspect_json(cd: &CartanData) -> Value {
    let class = classify(cd);
    let p = quiver_presentation(cd, PresentationMode::Pi);
    json!({
        "cartan": cd.cartan(),
        "symmetrizer": cd.symmetrizer(),
        "orientation": cd.orientation().iter().map(|&(i, j)| [i + 1, j + 1]).collect::<Vec<_>>(),
        "classification": tag_name(class.tag),
        "connected": class.connected,
        "constructible": class.tag == CartanTag::Dynkin,
        "edges": cd.edges().into_iter().map(|(i, j)| json!({
            "edge": [i + 1, j + 1],
            "g": cd.g(i, j),
            "f_ij": cd.f(i, j),
            "f_ji": cd.f(j, i),
        })).collect::<Vec<_>>(),
        "arrows": p.arrows.iter().map(|a| json!({ "name": a.name, "source": a.source + 1, "target": a.target + 1 })).collect::<Vec<_>>(),
        "relations": p.relations.iter().map(|r| format_relation(&p, r)).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use preproj_core::cartan::validate_gcm;

    #[test]
    fn a1_has_one_loop_relation() {
        let cd = validate_gcm(vec![vec![2]], vec![3], None).unwrap();
        let text = inspect_text(&cd);
        assert!(text.contains("classification: Dynkin"));
        assert!(text.contains("P1[1]: eps1^3 = 0"));
        assert_eq!(quiver_presentation(&cd, PresentationMode::Pi).relations.len(), 1);
    }

    #[test]
    fn b2_relations() {
        let cd = validate_gcm(vec![vec![2, -1], vec![-2, 2]], vec![2, 1], None).unwrap();
        let text = inspect_text(&cd);
        for line in ["P1[1]: eps1^2 = 0", "P1[2]: eps2 = 0"] {
            assert!(text.contains(line), "{text}");
        }
        assert_eq!(text.matches("P3[").count(), 2);
    }

    #[test]
    fn euclidean_is_flagged() {
        let cd = validate_gcm(vec![vec![2, -2], vec![-2, 2]], vec![1, 1], None).unwrap();
        let text = inspect_text(&cd);
        assert!(text.contains("classification: Euclidean"));
        assert!(text.contains("not constructed"));
    }
}
