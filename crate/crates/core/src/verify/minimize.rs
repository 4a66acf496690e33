//! Shrinking counterexamples by vertex deletion.

use crate::gated::AmalgamSpec;
use crate::transit::TransitFunction;
use crate::verify::campaign::{check_subject, CampaignReport, Subject, Violation};
use crate::vertex_set::VertexSet;

/// The restriction of `r` to `V - {x}`: every entry loses `x` and the
/// remaining elements are renumbered in order.
pub fn delete_element(r: &TransitFunction, x: usize) -> TransitFunction {
    let n = r.n();
    let keep: Vec<usize> = (0..n).filter(|&v| v != x).collect();
    let relabel = |s: VertexSet| -> VertexSet {
        s.iter()
            .filter(|&v| v != x)
            .map(|v| if v > x { v - 1 } else { v })
            .collect()
    };
    let table = keep
        .iter()
        .flat_map(|&u| keep.iter().map(move |&v| (u, v)))
        .map(|(u, v)| relabel(r.get(u, v)))
        .collect();
    let out = TransitFunction::from_table(n - 1, table).expect("restriction is well formed");
    match r.labels() {
        Some(ls) => out
            .with_labels(keep.iter().map(|&v| ls[v].clone()))
            .expect("labels stay distinct"),
        None => out,
    }
}

/// Subjects obtained by deleting one vertex, in vertex order. Graphs must
/// stay connected; amalgams shrink their second factor outside the shared
/// part; fixtures do not shrink.
fn one_smaller(subject: &Subject) -> Vec<Subject> {
    match subject {
        Subject::Graph(g) => (0..g.n())
            .map(|v| g.delete_vertex(v))
            .filter(|h| h.n() > 0 && h.is_connected())
            .map(Subject::Graph)
            .collect(),
        Subject::Transit(r) if r.n() > 1 => (0..r.n())
            .map(|x| Subject::Transit(delete_element(r, x)))
            .collect(),
        Subject::Amalgam(spec) => {
            let shared = spec.s2();
            (spec.g2.vertices() - shared)
                .iter()
                .map(|v| {
                    let shift = |b: usize| if b > v { b - 1 } else { b };
                    AmalgamSpec::new(
                        spec.g1.clone(),
                        spec.g2.delete_vertex(v),
                        spec.iso.iter().map(|&(a, b)| (a, shift(b))).collect(),
                    )
                })
                .map(Subject::Amalgam)
                .collect()
        }
        _ => Vec::new(),
    }
}

/// Greedily deletes vertices while `still_bad` holds. The result is
/// minimal: no single deletion keeps it bad.
pub fn minimize_with(subject: Subject, mut still_bad: impl FnMut(&Subject) -> bool) -> Subject {
    let mut current = subject;
    'shrink: loop {
        for smaller in one_smaller(&current) {
            if still_bad(&smaller) {
                current = smaller;
                continue 'shrink;
            }
        }
        return current;
    }
}

/// Replaces every listed violation by a minimal one under vertex deletion
/// that still violates the same theorem.
pub fn minimize_counterexample(report: &CampaignReport) -> CampaignReport {
    let t = report.theorem;
    let mut out = report.clone();
    out.violations = report
        .violations
        .iter()
        .map(|v| {
            let subject = minimize_with(v.subject.clone(), |s| check_subject(t, s).is_some());
            let detail = check_subject(t, &subject).unwrap_or_else(|| v.detail.clone());
            Violation { subject, detail }
        })
        .collect();
    out
}
