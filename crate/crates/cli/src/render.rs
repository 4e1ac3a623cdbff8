//! Plain-text output.

use enriques7_core::codes::BinaryCode;
use enriques7_core::nodal::{NodeCertificate, NodeImages, NodeSurface, P3Point, QuotientNodes};
use enriques7_core::scalar::format_qi;
use enriques7_core::scenarios::{CayleyReport, PipelineReport};
use enriques7_core::symmetry::Eigenspace;
use num_complex::Complex64;

fn sign(v: i8) -> char {
    if v > 0 {
        '+'
    } else {
        '-'
    }
}

pub fn eigenspace(s: &Eigenspace) -> String {
    let [a, b, c] = s.character;
    let words: Vec<String> = s.basis.iter().map(ToString::to_string).collect();
    format!(
        "T{} ({},{},{}) dim {}: {}",
        s.index,
        sign(a),
        sign(b),
        sign(c),
        s.dimension(),
        words.join(" ")
    )
}

pub fn surface(z: &NodeSurface) -> String {
    let coords: Vec<String> = z.t0_coords.iter().map(format_qi).collect();
    let mut out = format!(
        "seed {}\nT0 coordinates [{}]\norbit:",
        z.seed_point,
        coords.join(", ")
    );
    for p in &z.orbit {
        out.push_str(&format!("\n  {p}"));
    }
    out
}

pub fn certificate(c: &NodeCertificate) -> String {
    let nodes = c
        .nodes
        .iter()
        .filter(|n| n.as_ref().is_ok_and(|n| n.node))
        .count();
    let points = c.fixed_points.iter().filter(|p| p.avoided).count();
    let lines = c.fixed_lines.iter().filter(|l| l.passed()).count();
    let mut out = format!(
        "nodes {nodes}/{}\nfixed points avoided {points}/{}\nfixed lines transverse {lines}/{}\nsearch: {} trials, {} converged, {} orbits, max residual {:.2e}",
        c.nodes.len(),
        c.fixed_points.len(),
        c.fixed_lines.len(),
        c.search.trials,
        c.search.converged_runs,
        c.search.points.len(),
        c.search.max_residual,
    );
    for x in &c.extra_singularities {
        out.push_str(&format!(
            "\nextra singular point {} (residual {:.2e})",
            x.point, x.residual
        ));
    }
    match c.verdict() {
        Ok(()) => out.push_str("\nverdict: pass"),
        Err(e) => out.push_str(&format!("\nverdict: {e}")),
    }
    if let Err(e) = c.exact_verdict() {
        out.push_str(&format!("\nexact verdict: {e}"));
    }
    out
}

pub fn quotient_nodes(q: &QuotientNodes) -> String {
    let mut out = String::new();
    for (i, c) in q.classes.iter().enumerate() {
        out.push_str(&format!(
            "{} [{}] {}\n",
            i + 1,
            c.element,
            c.representative().point
        ));
    }
    out.push_str(&format!("7 [orbit] {}", q.orbit_node));
    out
}

fn complex(z: Complex64) -> String {
    format!("{:+.6}{:+.6}i", z.re, z.im)
}

fn p3(p: &P3Point) -> String {
    p.iter()
        .map(|&z| complex(z))
        .collect::<Vec<_>>()
        .join(" : ")
}

pub fn images(i: &NodeImages, triples: &[[usize; 3]]) -> String {
    let mut out = String::new();
    for (k, p) in i.points.iter().enumerate() {
        out.push_str(&format!("{} ({})\n", k + 1, p3(p)));
    }
    out.push_str(&format!(
        "class spread {:.2e}\ncollinear triples {triples:?}",
        i.class_spread
    ));
    out
}

pub fn code(c: &BinaryCode) -> String {
    let gens: Vec<String> = c.basis().iter().map(|&w| c.word_to_string(w)).collect();
    format!(
        "length {} dimension {}\ngenerators {}\nweight enumerator {:?}",
        c.length(),
        c.dimension(),
        gens.join(" "),
        c.weight_enumerator()
    )
}

pub fn json_row(row: &serde_json::Value) -> String {
    serde_json::to_string(row).unwrap_or_default()
}

pub fn cayley(r: &CayleyReport) -> String {
    let nodes = r.nodes.iter().filter(|n| n.is_node()).count();
    let excluded = r.sweep.iter().filter(|s| s.excluded).count();
    let lines = r.lines.iter().filter(|l| l.on_surface).count();
    let incidences = r
        .incidences
        .iter()
        .filter(|i| i.meets == i.expected)
        .count();
    format!(
        "degree {}\nnodes at coordinate points {nodes}/{}\nsupports excluded {excluded}/{}\ninterior search: {} trials, {} singular points\nlines on surface {lines}/{}\nincidences as expected {incidences}/{}\nlines distinct {}\npassed {}",
        r.degree,
        r.nodes.len(),
        r.sweep.len(),
        r.interior_trials,
        r.interior_singular_points.len(),
        r.lines.len(),
        r.incidences.len(),
        r.lines_distinct,
        r.passed,
    )
}

pub fn pipeline(r: &PipelineReport) -> String {
    let inv = &r.invariants;
    format!(
        "{}\n{}\n{}\n{}\nclass {}\nunused indices {:?}\nL² = {}  χ = {}  p_g = {}  q = {}  K² = {}",
        surface(&r.surface),
        certificate(&r.certificate),
        quotient_nodes(&r.quotient_nodes),
        images(&r.images, &r.collinear_triples),
        r.code.class,
        r.code.unused_indices,
        inv.l_square,
        inv.chi,
        inv.p_g,
        inv.q,
        inv.k_square,
    )
}
