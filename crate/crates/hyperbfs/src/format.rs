//! Flat-file formats (`.dhg` hypergraphs, `.vs` value-set tables, `.vec`
//! vectors) and the line-oriented report rendering. Serialization is
//! bit-exact: parse and serialize are mutually inverse on valid inputs.

use crate::array::KeySpace;
use crate::error::{Error, Result};
use crate::hypergraph::{DirectedHypergraph, Hyperedge};
use crate::traversal::FrontierVector;
use crate::valueset::{PropertyProfile, TableValueSet, ValueSet, Verdict};
use crate::verify::{ConditionRecord, VerificationReport};

fn parse_err(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse {
        location: location.into(),
        message: message.into(),
    }
}

fn split_list(s: &str) -> Vec<String> {
    if s.is_empty() {
        Vec::new()
    } else {
        s.split(',').map(|x| x.to_string()).collect()
    }
}

// ---------------------------------------------------------------------------
// Hypergraphs (.dhg)
// ---------------------------------------------------------------------------

/// Parse a `.dhg` document: a `#vertices: a,b,c` header (listing order is
/// vertex order), then one tab-separated line per hyperedge.
pub fn parse_hypergraph(text: &str) -> Result<DirectedHypergraph> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| parse_err("dhg:1", "empty document"))?;
    let vertex_list = header
        .strip_prefix("#vertices: ")
        .ok_or_else(|| parse_err("dhg:1", "expected `#vertices: v1,v2,...`"))?;
    let vertices = KeySpace::new(split_list(vertex_list))?;
    let mut edges = Vec::new();
    for (i, line) in lines.enumerate() {
        let location = format!("dhg:{}", i + 2);
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split('\t');
        let key = fields
            .next()
            .filter(|k| !k.is_empty())
            .ok_or_else(|| parse_err(&location, "missing edge key"))?;
        let out_set = fields
            .next()
            .ok_or_else(|| parse_err(&location, "missing out-vertex list"))?;
        let in_set = fields
            .next()
            .ok_or_else(|| parse_err(&location, "missing in-vertex list"))?;
        if fields.next().is_some() {
            return Err(parse_err(&location, "expected exactly three tab-separated fields"));
        }
        edges.push(Hyperedge {
            key: key.to_string(),
            out_set: split_list(out_set),
            in_set: split_list(in_set),
        });
    }
    DirectedHypergraph::new(vertices, edges)
}

/// Render a hypergraph in `.dhg` form.
pub fn serialize_hypergraph(g: &DirectedHypergraph) -> String {
    let mut out = format!("#vertices: {}\n", g.vertices().keys().join(","));
    for edge in g.edges() {
        out.push_str(&format!(
            "{}\t{}\t{}\n",
            edge.key,
            edge.out_set.join(","),
            edge.in_set.join(",")
        ));
    }
    out
}

// ---------------------------------------------------------------------------
// Value sets (.vs)
// ---------------------------------------------------------------------------

/// Parse a `.vs` document: `#carrier:`, `#zero:`, `#one:` headers, then a
/// `plus:` name grid and a `times:` name grid (row = left operand, in
/// carrier order). The id is supplied by the caller, typically the file
/// stem. Identity laws are not checked here.
pub fn parse_value_set(id: &str, text: &str) -> Result<TableValueSet> {
    let mut lines = text.lines().enumerate();
    let mut header = |prefix: &str| -> Result<String> {
        let (i, line) = lines
            .next()
            .ok_or_else(|| parse_err("vs", format!("missing `{prefix}` header")))?;
        line.strip_prefix(prefix)
            .map(|s| s.to_string())
            .ok_or_else(|| parse_err(format!("vs:{}", i + 1), format!("expected `{prefix}...`")))
    };
    let names = split_list(&header("#carrier: ")?);
    let zero = header("#zero: ")?;
    let one = header("#one: ")?;
    let mut table = |label: &str| -> Result<Vec<Vec<String>>> {
        let (i, line) = lines
            .next()
            .ok_or_else(|| parse_err("vs", format!("missing `{label}` table")))?;
        if line != label {
            return Err(parse_err(format!("vs:{}", i + 1), format!("expected `{label}`")));
        }
        let mut rows = Vec::with_capacity(names.len());
        for _ in 0..names.len() {
            let (i, line) = lines
                .next()
                .ok_or_else(|| parse_err("vs", format!("truncated `{label}` table")))?;
            let row: Vec<String> = line.split(' ').map(|s| s.to_string()).collect();
            if row.len() != names.len() {
                return Err(parse_err(
                    format!("vs:{}", i + 1),
                    format!("expected {} entries", names.len()),
                ));
            }
            rows.push(row);
        }
        Ok(rows)
    };
    let plus = table("plus:")?;
    let times = table("times:")?;
    if let Some((i, line)) = lines.find(|(_, l)| !l.is_empty()) {
        return Err(parse_err(format!("vs:{}", i + 1), format!("unexpected trailing line `{line}`")));
    }
    fn row_refs(rows: &[Vec<String>]) -> Vec<Vec<&str>> {
        rows.iter()
            .map(|r| r.iter().map(String::as_str).collect())
            .collect()
    }
    let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let plus_refs = row_refs(&plus);
    let times_refs = row_refs(&times);
    let plus_rows: Vec<&[&str]> = plus_refs.iter().map(Vec::as_slice).collect();
    let times_rows: Vec<&[&str]> = times_refs.iter().map(Vec::as_slice).collect();
    TableValueSet::from_tables(id, &name_refs, &zero, &one, &plus_rows, &times_rows)
}

/// Render a finite value set in `.vs` form.
pub fn serialize_value_set(vs: &TableValueSet) -> Result<String> {
    let carrier = vs.carrier()?;
    let names: Vec<String> = carrier.iter().map(|v| vs.value_name(v)).collect();
    let mut out = format!(
        "#carrier: {}\n#zero: {}\n#one: {}\n",
        names.join(","),
        vs.value_name(&vs.zero()),
        vs.value_name(&vs.one())
    );
    for (label, op) in [
        ("plus:", TableValueSet::plus as fn(&TableValueSet, &usize, &usize) -> usize),
        ("times:", TableValueSet::times),
    ] {
        out.push_str(label);
        out.push('\n');
        for a in &carrier {
            let row: Vec<String> = carrier
                .iter()
                .map(|b| vs.value_name(&op(vs, a, b)))
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Vectors (.vec)
// ---------------------------------------------------------------------------

/// Parse a `.vec` document: comma-separated `key=value` pairs over the
/// given key space; absent keys are zero. An empty document is the zero
/// vector.
pub fn parse_vector(
    vs: &TableValueSet,
    space: &KeySpace,
    text: &str,
) -> Result<FrontierVector<usize>> {
    let text = text.trim_end_matches('\n');
    let mut entries = Vec::new();
    if !text.is_empty() {
        for pair in text.split(',') {
            let (key, name) = pair
                .split_once('=')
                .ok_or_else(|| parse_err("vec", format!("expected `key=value`, got `{pair}`")))?;
            let value = vs
                .parse_value(name)
                .ok_or_else(|| parse_err("vec", format!("unknown value `{name}`")))?;
            entries.push((key.to_string(), value));
        }
    }
    FrontierVector::from_values::<TableValueSet, _>(space, entries)
}

/// Render a vector in `.vec` form: stored nonzero entries in key order.
pub fn serialize_vector(vs: &TableValueSet, v: &FrontierVector<usize>) -> String {
    let mut pairs = Vec::new();
    for key in v.space().keys() {
        if let Ok(Some(value)) = v.as_array().get(crate::traversal::VECTOR_ROW_KEY, key) {
            if !vs.is_zero(value) {
                pairs.push(format!("{key}={}", vs.value_name(value)));
            }
        }
    }
    format!("{}\n", pairs.join(","))
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

fn render_bool(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

/// One report line per condition record, fields exactly
/// `value_set_id theorem profile empirical agreement witness`.
pub fn render_record(value_set_id: &str, record: &ConditionRecord) -> String {
    let witness = record
        .witness
        .as_ref()
        .map(|w| w.description.as_str())
        .unwrap_or("-");
    format!(
        "{} {} {} {} {} {}",
        value_set_id,
        record.theorem,
        render_bool(record.profile_verdict),
        render_bool(record.empirical_verdict),
        render_bool(record.agreement()),
        witness
    )
}

/// All lines for one value set's report, in record order.
pub fn render_report(report: &VerificationReport) -> String {
    let mut out = String::new();
    for record in &report.records {
        out.push_str(&render_record(&report.value_set_id, record));
        out.push('\n');
    }
    out
}

fn render_pair<S: ValueSet>(vs: &S, (a, b): &(S::Value, S::Value)) -> String {
    format!("({},{})", vs.value_name(a), vs.value_name(b))
}

fn render_triple<S: ValueSet>(vs: &S, (a, b, c): &(S::Value, S::Value, S::Value)) -> String {
    format!(
        "({},{},{})",
        vs.value_name(a),
        vs.value_name(b),
        vs.value_name(c)
    )
}

/// Human-oriented rendering of all seven property verdicts, one line per
/// property: `name verdict witness`.
pub fn render_profile<S: ValueSet>(vs: &S, profile: &PropertyProfile<S::Value>) -> String {
    fn line<W>(name: &str, verdict: &Verdict<W>, show: impl Fn(&W) -> String) -> String {
        match verdict {
            Verdict::Holds => format!("{name} true -\n"),
            Verdict::Fails(w) => format!("{name} false {}\n", show(w)),
        }
    }
    let mut out = String::new();
    out.push_str(&line("zero_sum_free", &profile.zero_sum_free, |w| {
        render_pair(vs, w)
    }));
    out.push_str(&line("zero_divisor_free", &profile.zero_divisor_free, |w| {
        render_pair(vs, w)
    }));
    out.push_str(&line("zero_annihilates", &profile.zero_annihilates, |w| {
        vs.value_name(w)
    }));
    out.push_str(&line("plus_assoc", &profile.plus_assoc, |w| {
        render_triple(vs, w)
    }));
    out.push_str(&line("plus_comm", &profile.plus_comm, |w| render_pair(vs, w)));
    out.push_str(&line("times_assoc", &profile.times_assoc, |w| {
        render_triple(vs, w)
    }));
    out.push_str(&line("times_comm", &profile.times_comm, |w| {
        render_pair(vs, w)
    }));
    out.push_str(&format!("bfs_valid {}\n", render_bool(profile.bfs_valid())));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::valueset::profile;
    use crate::verify::figures;

    #[test]
    fn hypergraph_round_trip_is_identity() {
        for g in [
            figures::fig1_1(),
            figures::fig1_3(),
            figures::fig1_6(),
            figures::fig2_3(),
        ] {
            let text = serialize_hypergraph(&g);
            let parsed = parse_hypergraph(&text).unwrap();
            assert_eq!(parsed, g);
            assert_eq!(serialize_hypergraph(&parsed), text);
        }
    }

    #[test]
    fn hypergraph_text_is_bit_exact() {
        assert_eq!(
            serialize_hypergraph(&figures::fig1_3()),
            "#vertices: a,b,c\nk\ta\tb,c\n"
        );
    }

    #[test]
    fn malformed_hypergraph_lines_are_rejected() {
        assert!(parse_hypergraph("").is_err());
        assert!(parse_hypergraph("vertices: a,b\n").is_err());
        assert!(parse_hypergraph("#vertices: a,b\nk\ta\n").is_err());
        assert!(parse_hypergraph("#vertices: a,b\nk\ta\tb\textra\n").is_err());
        // edge mentions a vertex outside the declared space
        assert!(parse_hypergraph("#vertices: a,b\nk\ta\tc\n").is_err());
    }

    #[test]
    fn value_set_round_trip_preserves_tables() {
        for vs in [
            TableValueSet::boolean(),
            TableValueSet::min_plus(4),
            TableValueSet::signed_saturating(),
            TableValueSet::non_annihilating3(),
        ] {
            let text = serialize_value_set(&vs).unwrap();
            let parsed = parse_value_set(vs.id(), &text).unwrap();
            assert_eq!(parsed.element_names(), vs.element_names());
            for a in vs.carrier().unwrap() {
                for b in vs.carrier().unwrap() {
                    assert_eq!(parsed.plus(&a, &b), vs.plus(&a, &b));
                    assert_eq!(parsed.times(&a, &b), vs.times(&a, &b));
                }
            }
            assert_eq!(serialize_value_set(&parsed).unwrap(), text);
        }
    }

    #[test]
    fn boolean_value_set_text_is_bit_exact() {
        assert_eq!(
            serialize_value_set(&TableValueSet::boolean()).unwrap(),
            "#carrier: 0,1\n#zero: 0\n#one: 1\nplus:\n0 1\n1 1\ntimes:\n0 0\n0 1\n"
        );
    }

    #[test]
    fn malformed_value_sets_are_rejected() {
        let good = "#carrier: 0,1\n#zero: 0\n#one: 1\nplus:\n0 1\n1 1\ntimes:\n0 0\n0 1\n";
        assert!(parse_value_set("t", good).is_ok());
        assert!(parse_value_set("t", &good.replace("#zero: 0", "#zero: 2")).is_err());
        assert!(parse_value_set("t", &good.replace("0 1\n1 1", "0 1")).is_err());
        assert!(parse_value_set("t", &format!("{good}junk\n")).is_err());
    }

    #[test]
    fn vector_round_trip_and_zero_default() {
        let vs = TableValueSet::min_plus(4);
        let space = KeySpace::new(["a", "b", "c"]).unwrap();
        let v = parse_vector(&vs, &space, "a=0,c=3\n").unwrap();
        assert_eq!(v.value(&vs, "a").unwrap(), vs.parse_value("0").unwrap());
        assert!(vs.is_zero(&v.value(&vs, "b").unwrap()));
        assert_eq!(serialize_vector(&vs, &v), "a=0,c=3\n");

        let zero = parse_vector(&vs, &space, "").unwrap();
        assert_eq!(zero.support(&vs), Vec::<String>::new());
        assert_eq!(serialize_vector(&vs, &zero), "\n");
    }

    #[test]
    fn vector_rejects_unknown_values_and_keys() {
        let vs = TableValueSet::boolean();
        let space = KeySpace::new(["a", "b"]).unwrap();
        assert!(parse_vector(&vs, &space, "a=2\n").is_err());
        assert!(parse_vector(&vs, &space, "z=1\n").is_err());
        assert!(parse_vector(&vs, &space, "a:1\n").is_err());
    }

    #[test]
    fn profile_rendering_includes_witnesses() {
        let vs = TableValueSet::signed_saturating();
        let text = render_profile(&vs, &profile(&vs).unwrap());
        assert!(text.contains("zero_sum_free false (-1,1)"));
        assert!(text.contains("times_comm true -"));
        assert!(text.contains("bfs_valid false"));
    }

    #[test]
    fn report_lines_have_fixed_fields() {
        use crate::verify::{theorem_2_1_harness, Bounds};
        let report = theorem_2_1_harness(2, Bounds::default(), 1)
            .unwrap()
            .next()
            .unwrap()
            .unwrap();
        let text = render_report(&report);
        for line in text.lines() {
            let fields: Vec<&str> = line.split(' ').collect();
            assert_eq!(fields.len(), 6, "line `{line}`");
            assert_eq!(fields[0], report.value_set_id);
        }
    }
}
