//! Rendering of groups, classifications, and verification reports, to JSON
//! values and to human-readable text. All output is deterministic: key
//! order is fixed and collections are already sorted by the library.

use serde_json::{json, Value};

use tropaut_core::aut::{AutomorphismGroup, GraphMap};
use tropaut_core::enumeration::{
    FixedPointReport, MetricSweepReport, VerificationReport, Violation,
};
use tropaut_core::families::{ExtremalClass, FixedPointClass};
use tropaut_core::metric::{
    CanonicalModel, IsometryGroup, MetricBoundReport, MetricExtremalClass, PointOrigin,
};

use crate::format::{code_hex, metric_to_doc};

pub fn map_to_json(map: &GraphMap) -> Value {
    json!({ "vertex_perm": map.vertex_perm, "edge_perm": map.edge_perm })
}

pub fn group_to_json(group: &AutomorphismGroup) -> Value {
    json!({
        "order": group.order,
        "generators": group.generators.iter().map(map_to_json).collect::<Vec<_>>(),
    })
}

pub fn group_to_text(group: &AutomorphismGroup) -> String {
    let mut out = format!("order {}\n", group.order);
    out.push_str(&maps_text(&group.generators));
    out
}

fn maps_text(maps: &[GraphMap]) -> String {
    let mut out = format!("generators: {}\n", maps.len());
    for (i, m) in maps.iter().enumerate() {
        out.push_str(&format!(
            "  generator {i}: vertices {:?} edges {:?}\n",
            m.vertex_perm, m.edge_perm
        ));
    }
    out
}

pub fn isometry_group_to_json(group: &IsometryGroup) -> Value {
    json!({
        "order": group.order,
        "generators": group.generators.iter().map(map_to_json).collect::<Vec<_>>(),
        "model": serde_json::to_value(metric_to_doc(&group.model.model, None))
            .expect("document serialization is infallible"),
    })
}

pub fn isometry_group_to_text(group: &IsometryGroup) -> String {
    let model = &group.model.model;
    let mut out = format!("order {}\n", group.order);
    out.push_str(&format!(
        "model: {} vertices, {} edges\n",
        model.graph().num_vertices(),
        model.graph().num_edges()
    ));
    out.push_str(&maps_text(&group.generators));
    out
}

pub fn extremal_class_to_json(class: &ExtremalClass) -> Value {
    match class {
        ExtremalClass::BananaA { count } => json!({ "class": class.tag(), "count": count }),
        ExtremalClass::BouquetB { count } => json!({ "class": class.tag(), "count": count }),
        ExtremalClass::LollipopC { loop_count, bridge_count } => json!({
            "class": class.tag(),
            "loop_count": loop_count,
            "bridge_count": bridge_count,
        }),
        ExtremalClass::NotExtremal => json!({ "class": class.tag() }),
    }
}

pub fn extremal_class_to_text(class: &ExtremalClass) -> String {
    match class {
        ExtremalClass::BananaA { count } => format!("{} (count {count})", class.tag()),
        ExtremalClass::BouquetB { count } => format!("{} (count {count})", class.tag()),
        ExtremalClass::LollipopC { loop_count, bridge_count } => {
            format!("{} (loops {loop_count}, bridges {bridge_count})", class.tag())
        }
        ExtremalClass::NotExtremal => class.tag().to_owned(),
    }
}

pub fn fixed_point_class_to_json(class: &FixedPointClass) -> Value {
    json!({ "class": class.tag() })
}

pub fn metric_class_tag(class: &MetricExtremalClass) -> &'static str {
    match class {
        MetricExtremalClass::Banana => "A_banana",
        MetricExtremalClass::Bouquet => "B_bouquet",
        MetricExtremalClass::Lollipop => "C_lollipop",
        MetricExtremalClass::NotExtremal => "none",
    }
}

fn point_origin_to_json(origin: &PointOrigin) -> Value {
    match origin {
        PointOrigin::AtVertex(v) => json!({ "type": "vertex", "vertex": v.0 }),
        PointOrigin::OnEdge { edge, offset } => {
            json!({ "type": "edge", "edge": edge.0, "offset": offset.to_string() })
        }
    }
}

pub fn canonical_model_to_json(model: &CanonicalModel) -> Value {
    json!({
        "model": serde_json::to_value(metric_to_doc(&model.model, None))
            .expect("document serialization is infallible"),
        "vertex_origin": model.vertex_origin.iter().map(point_origin_to_json).collect::<Vec<_>>(),
        "edge_origin": model
            .edge_origin
            .iter()
            .map(|es| es.iter().map(|e| e.0).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

pub fn canonical_model_to_text(model: &CanonicalModel) -> String {
    let graph = model.model.graph();
    let mut out = format!(
        "model: {} vertices, {} edges\n",
        graph.num_vertices(),
        graph.num_edges()
    );
    for v in graph.vertices() {
        let origin = match &model.vertex_origin[v.0] {
            PointOrigin::AtVertex(o) => format!("original vertex {}", o.0),
            PointOrigin::OnEdge { edge, offset } => {
                format!("interior of original edge {} at offset {offset}", edge.0)
            }
        };
        out.push_str(&format!("  vertex {}: {origin}\n", v.0));
    }
    for e in graph.edges() {
        let (u, v) = graph.endpoints(e);
        let through: Vec<String> =
            model.edge_origin[e.0].iter().map(|o| o.0.to_string()).collect();
        out.push_str(&format!(
            "  edge {} ({}-{}, length {}): through original edges [{}]\n",
            e.0,
            u.0,
            v.0,
            model.model.length(e),
            through.join(", ")
        ));
    }
    out
}

fn violation_to_json(v: &Violation) -> Value {
    json!({
        "kind": v.kind.tag(),
        "code": code_hex(&v.code),
        "vertex": v.vertex.map(|x| x.0),
        "order": v.order,
        "bound": v.bound,
    })
}

fn violation_to_text(v: &Violation) -> String {
    let vertex = v
        .vertex
        .map(|x| format!(" at vertex {}", x.0))
        .unwrap_or_default();
    format!(
        "  {} on {}{vertex}: order {} vs bound {}\n",
        v.kind.tag(),
        code_hex(&v.code),
        v.order,
        v.bound
    )
}

pub fn verification_report_to_json(report: &VerificationReport) -> Value {
    json!({
        "spec": {
            "betti": report.spec.betti,
            "max_vertices": report.spec.max_vertices,
            "min_degree": report.spec.min_degree,
        },
        "graph_count": report.graph_count,
        "max_aut_order": report.max_aut_order,
        "bound": report.bound,
        "violations": report.violations.iter().map(violation_to_json).collect::<Vec<_>>(),
        "extremal": report
            .extremal
            .iter()
            .map(|e| json!({ "code": code_hex(&e.code), "class": extremal_class_to_json(&e.class) }))
            .collect::<Vec<_>>(),
        "runtime_ms": report.runtime_ms,
    })
}

pub fn verification_report_to_text(report: &VerificationReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "sweep: betti {}, max vertices {}, min degree {}\n",
        report.spec.betti, report.spec.max_vertices, report.spec.min_degree
    ));
    out.push_str(&format!("graphs: {}\n", report.graph_count));
    out.push_str(&format!("bound: {}\n", report.bound));
    out.push_str(&format!("max |Aut|: {}\n", report.max_aut_order));
    if report.violations.is_empty() {
        out.push_str("violations: none\n");
    } else {
        out.push_str(&format!("violations: {}\n", report.violations.len()));
        for v in &report.violations {
            out.push_str(&violation_to_text(v));
        }
    }
    out.push_str(&format!("extremal graphs: {}\n", report.extremal.len()));
    for e in &report.extremal {
        out.push_str(&format!(
            "  {} {}\n",
            code_hex(&e.code),
            extremal_class_to_text(&e.class)
        ));
    }
    out.push_str(&format!("runtime: {} ms\n", report.runtime_ms));
    out
}

pub fn fixed_point_report_to_json(report: &FixedPointReport) -> Value {
    json!({
        "spec": {
            "betti": report.spec.betti,
            "max_vertices": report.spec.max_vertices,
            "min_degree": report.spec.min_degree,
        },
        "graph_count": report.graph_count,
        "pair_count": report.pair_count,
        "bound": report.bound,
        "max_stabilizer_order": report.max_stabilizer_order,
        "violations": report.violations.iter().map(violation_to_json).collect::<Vec<_>>(),
        "equality": report
            .equality
            .iter()
            .map(|e| json!({
                "code": code_hex(&e.code),
                "vertex": e.vertex.0,
                "class": fixed_point_class_to_json(&e.class),
            }))
            .collect::<Vec<_>>(),
        "runtime_ms": report.runtime_ms,
    })
}

pub fn fixed_point_report_to_text(report: &FixedPointReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "fixed-point sweep: betti {}, max vertices {}, min degree {}\n",
        report.spec.betti, report.spec.max_vertices, report.spec.min_degree
    ));
    out.push_str(&format!(
        "graphs: {} ({} graph-vertex pairs)\n",
        report.graph_count, report.pair_count
    ));
    out.push_str(&format!("bound: {}\n", report.bound));
    out.push_str(&format!("max stabilizer order: {}\n", report.max_stabilizer_order));
    if report.violations.is_empty() {
        out.push_str("violations: none\n");
    } else {
        out.push_str(&format!("violations: {}\n", report.violations.len()));
        for v in &report.violations {
            out.push_str(&violation_to_text(v));
        }
    }
    out.push_str(&format!("equality pairs: {}\n", report.equality.len()));
    for e in &report.equality {
        out.push_str(&format!(
            "  {} at vertex {}: {}\n",
            code_hex(&e.code),
            e.vertex.0,
            e.class.tag()
        ));
    }
    out.push_str(&format!("runtime: {} ms\n", report.runtime_ms));
    out
}

pub fn metric_sweep_report_to_json(report: &MetricSweepReport) -> Value {
    json!({
        "genus": report.genus,
        "trials": report.trials,
        "seed": report.seed,
        "bound": report.bound,
        "max_order": report.max_order,
        "equality_trials": report.equality_trials,
        "violations": report.violations.iter().map(violation_to_json).collect::<Vec<_>>(),
        "runtime_ms": report.runtime_ms,
    })
}

pub fn metric_sweep_report_to_text(report: &MetricSweepReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "metric sweep: genus {}, {} trials, seed {}\n",
        report.genus, report.trials, report.seed
    ));
    out.push_str(&format!("bound: {}\n", report.bound));
    out.push_str(&format!("max order: {}\n", report.max_order));
    out.push_str(&format!("trials attaining the bound: {}\n", report.equality_trials));
    if report.violations.is_empty() {
        out.push_str("violations: none\n");
    } else {
        out.push_str(&format!("violations: {}\n", report.violations.len()));
        for v in &report.violations {
            out.push_str(&violation_to_text(v));
        }
    }
    out.push_str(&format!("runtime: {} ms\n", report.runtime_ms));
    out
}

pub fn metric_bound_report_to_json(report: &MetricBoundReport) -> Value {
    json!({
        "genus": report.genus,
        "order": report.order,
        "bound": report.bound,
        "ok": report.ok,
        "extremal_class": { "class": metric_class_tag(&report.extremal_class) },
    })
}

pub fn metric_bound_report_to_text(report: &MetricBoundReport) -> String {
    format!(
        "genus {}\norder {}\nbound {}\nstatus {}\nclass {}\n",
        report.genus,
        report.order,
        report.bound,
        if report.ok { "ok" } else { "VIOLATION" },
        metric_class_tag(&report.extremal_class)
    )
}
