//! Graphviz output.

use std::fmt::Write;

use catwood_core::lattice::{hasse_edges, LatticeKind};
use catwood_core::realizer::{Color, Realizer};

use crate::error::CliError;

fn vertex_name(r: &Realizer, v: usize) -> String {
    let n = r.size();
    if v < n {
        format!("u{v}")
    } else {
        format!("v{}", v - n)
    }
}

fn color_attrs(c: Color) -> &'static str {
    match c {
        Color::Zero => "color=red, fontcolor=red, style=solid",
        Color::One => "color=forestgreen, fontcolor=forestgreen, style=bold",
        Color::Two => "color=blue, fontcolor=blue, style=tapered, penwidth=3",
    }
}

/// The realizer as a digraph: every internal vertex points to its three
/// parents, one colour per tree; the outer triangle is dashed.
pub fn realizer_dot(r: &Realizer) -> String {
    let n = r.size();
    let mut out = String::from("digraph realizer {\n  node [shape=circle, fontsize=10];\n");
    for v in 0..n + 3 {
        writeln!(out, "  {};", vertex_name(r, v)).unwrap();
    }
    for c in Color::ALL {
        for u in 0..n {
            let p = r.parent(c, u).expect("valid realizer");
            writeln!(
                out,
                "  {} -> {} [label=\"{c}\", {}];",
                vertex_name(r, u),
                vertex_name(r, p),
                color_attrs(c)
            )
            .unwrap();
        }
    }
    for (a, b) in [(0, 1), (1, 2), (2, 0)] {
        writeln!(out, "  v{a} -> v{b} [dir=none, style=dashed, color=gray];").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Hasse diagram of a lattice, edges pointing from a path to its covers.
pub fn hasse_dot(kind: LatticeKind, n: usize) -> Result<String, CliError> {
    let edges = hasse_edges(kind, n)?;
    let mut out =
        format!("digraph {kind}_{n} {{\n  rankdir=BT;\n  node [shape=box, fontname=monospace];\n");
    for p in catwood_core::DyckPath::all(n) {
        writeln!(out, "  \"{p}\";").unwrap();
    }
    for (p, q) in edges {
        writeln!(out, "  \"{p}\" -> \"{q}\";").unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}
