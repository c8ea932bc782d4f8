use std::fmt::Write as _;
use std::path::Path;

use anyhow::{Context, Result};
use serde::Serialize;
use serde_json::json;

use g2crystal::affine::{a_count, g_count, verify_construction, Level, Tower};
use g2crystal::cartan::ClassicalWeight;
use g2crystal::g2;
use g2crystal::perfect::{check_perfect, crystal_components, listed_minimal_elements, minimal_elements, square_components};
use g2crystal::qlevel1::{run_all, QReport};
use g2crystal::signature::Op;

use crate::{Format, Outcome};

fn json_text<T: Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn build(l: u32) -> Result<Tower> {
    Tower::build(l).with_context(|| format!("building B^{l}"))
}

fn level(t: &Tower, l: u32) -> &Level {
    t.level(l).expect("the tower contains every level up to its height")
}

fn w(c: ClassicalWeight) -> String {
    format!("({},{},{})", c.m0, c.m1, c.m2)
}

pub fn dims(max_level: u32, format: Format) -> Result<Outcome> {
    #[derive(Serialize)]
    struct Row {
        level: u32,
        dim: u64,
        sum: u64,
        model_count: u64,
        matches: bool,
    }
    let rows: Vec<Row> = (0..=max_level)
        .map(|l| {
            let (sum, model_count) = (g_count(l), a_count(l));
            Row { level: l, dim: g2::dim(l as u64), sum, model_count, matches: sum == model_count }
        })
        .collect();
    let passed = rows.iter().all(|r| r.matches);
    let text = match format {
        Format::Json => json_text(&rows)?,
        _ => {
            let mut s = String::from("level  dim B(l Lambda_1)  sum_{n<=l} dim  model count  A-model count matches\n");
            for r in &rows {
                let yes = if r.matches { "yes" } else { "no" };
                writeln!(s, "{:>5}  {:>17}  {:>14}  {:>11}  {yes}", r.level, r.dim, r.sum, r.model_count)?;
            }
            s
        }
    };
    Ok(Outcome { text, passed })
}

pub fn enumerate(l: u32, format: Format) -> Result<Outcome> {
    let tower = build(l)?;
    let lv = level(&tower, l);
    #[derive(Serialize)]
    struct Elem {
        tableau: String,
        weight: ClassicalWeight,
        eps: ClassicalWeight,
        phi: ClassicalWeight,
    }
    let elems: Vec<Elem> = (0..lv.g_len())
        .map(|g| {
            let (eps, phi) = lv.eps_phi(g);
            Elem { tableau: lv.tableau(g).to_string(), weight: lv.tableau(g).weight(), eps, phi }
        })
        .collect();
    let text = match format {
        Format::Json => json_text(&json!({ "level": l, "size": elems.len(), "elements": elems }))?,
        _ => {
            let mut s = String::new();
            for e in &elems {
                writeln!(s, "{}  wt={}  eps={}  phi={}", e.tableau, w(e.weight), w(e.eps), w(e.phi))?;
            }
            s
        }
    };
    Ok(Outcome { text, passed: true })
}

pub fn graph(l: u32, format: Format) -> Result<Outcome> {
    let tower = build(l)?;
    let lv = level(&tower, l);
    let name = |g: usize| lv.tableau(g).to_string();
    let mut edges = Vec::new();
    for g in 0..lv.g_len() {
        for c in 0..3 {
            if let Some(h) = lv.g_apply(Op::F, c, g) {
                edges.push((g, c, h, lv.g_apply(Op::E, c, h) == Some(g)));
            }
        }
    }
    let passed = edges.iter().all(|e| e.3);
    let text = match format {
        Format::Dot => {
            let mut s = format!("digraph B{l} {{\n");
            for g in 0..lv.g_len() {
                writeln!(s, "  \"{}\";", name(g))?;
            }
            for &(g, c, h, _) in &edges {
                writeln!(s, "  \"{}\" -> \"{}\" [label=\"{c}\"];", name(g), name(h))?;
            }
            s.push_str("}\n");
            s
        }
        Format::Json => {
            let nodes: Vec<String> = (0..lv.g_len()).map(name).collect();
            let edges: Vec<_> = edges
                .iter()
                .map(|&(g, c, h, inv)| json!({ "from": name(g), "to": name(h), "color": c, "inverse": inv }))
                .collect();
            json_text(&json!({ "level": l, "nodes": nodes, "edges": edges }))?
        }
        Format::Text => {
            let mut s = String::new();
            for &(g, c, h, _) in &edges {
                writeln!(s, "{} -{c}-> {}", name(g), name(h))?;
            }
            s
        }
    };
    Ok(Outcome { text, passed })
}

pub fn verify(l: u32, format: Format) -> Result<Outcome> {
    let tower = build(l)?;
    let mut reports = Vec::new();
    let mut text = String::new();
    let mut passed = true;
    for k in l.min(1)..=l {
        let lv = level(&tower, k);
        let prev = k.checked_sub(1).map(|p| level(&tower, p));
        let construction = verify_construction(lv, prev);
        let perfect = check_perfect(lv);
        let ok = construction.all_passed() && perfect.all_passed();
        let total = construction.results.len();
        let good = construction.results.iter().filter(|r| r.passed()).count();
        writeln!(
            text,
            "level {k}: {} elements, construction {good}/{total} checks passed, perfect: {} (square {} pairs, {} component(s))",
            lv.g_len(),
            if perfect.all_passed() { "yes" } else { "no" },
            perfect.square_size,
            perfect.square_components
        )?;
        for r in construction.results.iter().filter(|r| !r.passed()) {
            writeln!(text, "  FAIL {} ({} of {}): {}", r.name, r.failures, r.checked, r.examples.join("; "))?;
        }
        reports.push(json!({ "level": k, "construction": construction, "perfect": perfect }));
        if !ok {
            passed = false;
            break;
        }
    }
    if format == Format::Json {
        text = json_text(&reports)?;
    }
    Ok(Outcome { text, passed })
}

pub fn minimal(l: u32, format: Format) -> Result<Outcome> {
    let tower = build(l)?;
    let lv = level(&tower, l);
    let found = minimal_elements(lv);
    let listed = (l <= 7).then(|| listed_minimal_elements(l));
    let matches = listed.as_ref().map(|t| t.iter().eq(found.iter().map(|m| &m.tableau)));
    let text = match format {
        Format::Json => json_text(&json!({ "level": l, "minimal": found, "matches_listed": matches }))?,
        _ => {
            let mut s = String::new();
            for m in &found {
                writeln!(s, "{}  eps={}  phi={}", m.tableau, w(m.eps), w(m.phi))?;
            }
            match matches {
                Some(true) => s.push_str("matches the listed minimal elements: yes\n"),
                Some(false) => s.push_str("matches the listed minimal elements: no\n"),
                None => {}
            }
            s
        }
    };
    Ok(Outcome { text, passed: matches != Some(false) })
}

pub fn phi(l: u32, format: Format) -> Result<Outcome> {
    let tower = build(l)?;
    let lv = level(&tower, l);
    let text = match format {
        Format::Json => {
            let rows: Vec<_> = (0..lv.len())
                .map(|a| json!({ "model": lv.param(a), "tableau": lv.tableau(lv.phi(a)).to_string(), "rule": lv.rule(a) }))
                .collect();
            json_text(&json!({ "level": l, "phi": rows }))?
        }
        _ => {
            let mut s = String::new();
            for a in 0..lv.len() {
                writeln!(s, "{} -> {}  [{:?}]", lv.param(a), lv.tableau(lv.phi(a)), lv.rule(a))?;
            }
            s
        }
    };
    Ok(Outcome { text, passed: true })
}

pub fn connectivity(l: u32, format: Format) -> Result<Outcome> {
    let tower = build(l)?;
    let lv = level(&tower, l);
    let comps = crystal_components(lv);
    let (size, square) = square_components(lv);
    let text = match format {
        Format::Json => json_text(&json!({
            "level": l,
            "size": lv.g_len(),
            "components": comps,
            "square_size": size,
            "square_components": square,
        }))?,
        _ => format!("B^{l}: {} elements, {comps} component(s)\nB^{l} (x) B^{l}: {size} pairs, {square} component(s)\n", lv.g_len()),
    };
    Ok(Outcome { text, passed: comps == 1 && square == 1 })
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn qcheck_text(r: &QReport) -> Result<String> {
    let mut s = String::new();
    for c in &r.relations {
        writeln!(s, "{}  relation {}", mark(c.holds), c.name)?;
    }
    writeln!(s, "info  alternative Z-block entry breaks: {}", r.printed_table_failures.join(", "))?;
    for c in &r.singular {
        writeln!(s, "{}  highest weight vector {}", mark(c.weight_ok && c.highest), c.name)?;
    }
    writeln!(
        s,
        "{}  weight-zero coefficient {} = 1/([2]_1 [2]_2)",
        mark(r.zero_coefficient_is_inverse_21_22),
        r.zero_coefficient
    )?;
    writeln!(s, "{}  weight-zero highest weight space has dimension {}", mark(r.zero_weight_singular_dim == 2), r.zero_weight_singular_dim)?;
    for f in &r.polarization {
        writeln!(s, "{}  form {}", mark(f.holds), f.name)?;
    }
    if let Some(f) = &r.listed_v9_norm {
        writeln!(s, "info  listed {}: {}", f.name, f.detail.as_deref().unwrap_or("agrees"))?;
    }
    for f in &r.crystal {
        writeln!(s, "{}  crystal {}", mark(f.holds), f.name)?;
    }
    for f in &r.fusion {
        let printed = match f.holds_as_printed {
            Some(true) => "as printed: holds",
            Some(false) => "as printed: fails",
            None => "as printed: not evaluable",
        };
        writeln!(s, "{}  fusion item {:>2}  ({printed})", mark(f.holds), f.id)?;
    }
    for c in &r.rmatrix {
        writeln!(s, "{}  R-matrix {}", mark(c.holds), c.name)?;
    }
    Ok(s)
}

pub fn qcheck(format: Format, dump: Option<&Path>) -> Result<Outcome> {
    let tower = build(1)?;
    let report = run_all(level(&tower, 1));
    if let Some(p) = dump {
        std::fs::write(p, json_text(&report)?).with_context(|| format!("writing {}", p.display()))?;
    }
    let text = match format {
        Format::Json => json_text(&report)?,
        _ => qcheck_text(&report)?,
    };
    Ok(Outcome { text, passed: report.all_passed() })
}
