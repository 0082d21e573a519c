//! Plain-text set files: one element per line, comma-separated coordinates,
//! `#` starts a comment line. A leading `# ctx: <json>` line carries the
//! context descriptor. Printing is canonical, so `format(parse(format(A)))`
//! reproduces the same bytes.

use crate::error::{Result, SumsetError};
use crate::group::GroupCtx;
use crate::set::GSet;

const CTX_PREFIX: &str = "# ctx: ";

pub fn format_set(a: &GSet) -> String {
    let mut out = String::new();
    out.push_str(CTX_PREFIX);
    out.push_str(&serde_json::to_string(a.ctx()).expect("context serializes"));
    out.push('\n');
    for x in a.iter() {
        out.push_str(&x.to_string());
        out.push('\n');
    }
    out
}

/// Parses a set file. The context comes from the header when present, else from `ctx`.
/// Coordinates must already be reduced in finite contexts.
pub fn parse_set(text: &str, ctx: Option<&GroupCtx>) -> Result<GSet> {
    let mut header: Option<GroupCtx> = None;
    let mut rows: Vec<(usize, Vec<i64>)> = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line_no = n + 1;
        let line = line.trim();
        if let Some(json) = line.strip_prefix(CTX_PREFIX.trim_end()) {
            if header.is_some() || !rows.is_empty() {
                return Err(SumsetError::Parse { line: line_no, msg: "ctx header must come first".into() });
            }
            header = Some(
                serde_json::from_str(json.trim())
                    .map_err(|e| SumsetError::Parse { line: line_no, msg: e.to_string() })?,
            );
            continue;
        }
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let coords = line
            .split(',')
            .map(|t| t.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| SumsetError::Parse { line: line_no, msg: e.to_string() })?;
        rows.push((line_no, coords));
    }
    let ctx = match (header, ctx) {
        (Some(h), Some(c)) if &h != c => {
            return Err(SumsetError::ContextMismatch("file header disagrees with requested context".into()))
        }
        (Some(h), _) => h,
        (None, Some(c)) => c.clone(),
        (None, None) => return Err(SumsetError::Parse { line: 0, msg: "no context header and none supplied".into() }),
    };
    let mut elems = Vec::with_capacity(rows.len());
    for (line_no, coords) in rows {
        let x = crate::group::Element::new(&coords);
        ctx.validate(&x).map_err(|e| SumsetError::Parse { line: line_no, msg: e.to_string() })?;
        elems.push(x);
    }
    GSet::new(&ctx, elems)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_comments_and_header() {
        let text = "# ctx: {\"kind\":\"lattice\",\"d\":2}\n# a comment\n3,-1\n\n0,4\n3,-1\n";
        let s = parse_set(text, None).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(format_set(&s), "# ctx: {\"kind\":\"lattice\",\"d\":2}\n0,4\n3,-1\n");
    }

    #[test]
    fn context_from_caller() {
        let z7 = GroupCtx::cyclic(7).unwrap();
        let s = parse_set("1\n3\n", Some(&z7)).unwrap();
        assert_eq!(s, GSet::residues(7, &[1, 3]).unwrap());
        assert!(parse_set("1\n9\n", Some(&z7)).is_err());
        assert!(parse_set("1\n", None).is_err());
        assert!(matches!(parse_set("1,x\n", Some(&GroupCtx::integers())), Err(SumsetError::Parse { line: 1, .. })));
    }

    proptest! {
        #[test]
        fn roundtrip_lattice(pts in proptest::collection::vec((-1000i64..1000, -1000i64..1000), 0..40)) {
            let ctx = GroupCtx::lattice(2).unwrap();
            let s = GSet::from_coords(&ctx, pts.iter().map(|(x, y)| vec![*x, *y]).collect::<Vec<_>>().iter().map(|v| v.as_slice())).unwrap();
            let text = format_set(&s);
            let back = parse_set(&text, None).unwrap();
            prop_assert_eq!(&back, &s);
            prop_assert_eq!(format_set(&back), text);
        }

        #[test]
        fn roundtrip_prime_product(idx in proptest::collection::vec(0u64..105, 0..40)) {
            let ctx = GroupCtx::prime_product(3, vec![5, 7]).unwrap();
            let s = GSet::from_indices(&ctx, idx).unwrap();
            let text = format_set(&s);
            prop_assert_eq!(format_set(&parse_set(&text, Some(&ctx)).unwrap()), text);
        }
    }
}
