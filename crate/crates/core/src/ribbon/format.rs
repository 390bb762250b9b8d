//! Text and JSON encodings of ribbon graphs.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{EdgeId, End, RibbonGraph};
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
struct EndJson {
    edge: EdgeId,
    index: u8,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    rotations: Vec<Vec<EndJson>>,
    twisted: Vec<EdgeId>,
}

/// Assigns end index 0 to the first occurrence of a label and 1 to the second.
fn index_occurrences(rows: Vec<Vec<EdgeId>>, line_of_row: &[usize]) -> Result<Vec<Vec<(EdgeId, u8)>>> {
    let mut count: BTreeMap<EdgeId, u8> = BTreeMap::new();
    let mut out = Vec::with_capacity(rows.len());
    for (row, line) in rows.into_iter().zip(line_of_row) {
        let mut r = Vec::with_capacity(row.len());
        for l in row {
            let c = count.entry(l.clone()).or_insert(0);
            if *c >= 2 {
                return Err(Error::parse(*line, format!("edge `{l}` appears more than twice")));
            }
            r.push((l, *c));
            *c += 1;
        }
        out.push(r);
    }
    if let Some((l, _)) = count.iter().find(|(_, c)| **c != 2) {
        return Err(Error::parse(0, format!("edge `{l}` appears only once")));
    }
    Ok(out)
}

impl RibbonGraph {
    /// Parses the line-oriented ribbon-file format:
    ///
    /// ```text
    /// # comment
    /// vertex: 1 2 1
    /// vertex: 2
    /// twisted: 1
    /// ```
    pub fn parse(text: &str) -> Result<RibbonGraph> {
        let mut rows = Vec::new();
        let mut lines = Vec::new();
        let mut twisted: Option<Vec<EdgeId>> = None;
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, rest) = line
                .split_once(':')
                .ok_or_else(|| Error::parse(line_no, format!("expected `vertex:` or `twisted:`, got `{line}`")))?;
            let tokens: Vec<EdgeId> = rest.split_whitespace().map(EdgeId::from).collect();
            match key.trim() {
                "vertex" => {
                    rows.push(tokens);
                    lines.push(line_no);
                }
                "twisted" => {
                    if twisted.is_some() {
                        return Err(Error::parse(line_no, "more than one `twisted:` line"));
                    }
                    twisted = Some(tokens);
                }
                other => return Err(Error::parse(line_no, format!("unknown key `{other}`"))),
            }
        }
        let rotations = index_occurrences(rows, &lines)?;
        RibbonGraph::from_rotations(rotations, twisted.unwrap_or_default())
    }

    /// Parses a signed rotation of a bouquet such as `(1, 2, -1, 2)`. A loop
    /// whose two occurrences carry the same sign is untwisted; opposite
    /// signs mean a twisted loop. `()` is the edgeless bouquet.
    pub fn parse_bouquet(text: &str) -> Result<RibbonGraph> {
        let t = text.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| Error::parse(1, "bouquet must be enclosed in parentheses"))?;
        let tokens: Vec<&str> =
            inner.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()).collect();
        let mut labels = Vec::with_capacity(tokens.len());
        let mut signs: BTreeMap<EdgeId, Vec<bool>> = BTreeMap::new();
        for tok in tokens {
            let (neg, name) = match tok.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, tok.strip_prefix('+').unwrap_or(tok)),
            };
            if name.is_empty() {
                return Err(Error::parse(1, format!("bad bouquet token `{tok}`")));
            }
            let l = EdgeId::from(name);
            signs.entry(l.clone()).or_default().push(neg);
            labels.push(l);
        }
        let rotation = index_occurrences(vec![labels], &[1])?;
        let twisted = signs.into_iter().filter(|(_, s)| s[0] != s[1]).map(|(l, _)| l);
        RibbonGraph::from_rotations(rotation, twisted)
    }

    /// Accepts either an inline bouquet (leading `(`) or ribbon-file text.
    pub fn parse_any(text: &str) -> Result<RibbonGraph> {
        if text.trim_start().starts_with('(') {
            Self::parse_bouquet(text)
        } else {
            Self::parse(text)
        }
    }

    /// Ribbon-file rendering; the inverse of [`RibbonGraph::parse`] up to
    /// end-index renaming.
    pub fn to_ribbon_string(&self) -> String {
        self.to_string()
    }

    /// Signed-rotation rendering for bouquets: the later occurrence of a
    /// twisted loop carries the `-` sign. `None` for other graphs.
    pub fn to_bouquet_string(&self) -> Option<String> {
        if !self.is_bouquet() {
            return None;
        }
        let mut seen = vec![false; self.num_edges()];
        let parts: Vec<String> = self.rotations[0]
            .iter()
            .map(|end| {
                let second = std::mem::replace(&mut seen[end.edge], true);
                let sign = if second && self.twisted[end.edge] { "-" } else { "" };
                format!("{sign}{}", self.labels[end.edge])
            })
            .collect();
        Some(format!("({})", parts.join(", ")))
    }

    pub fn to_json(&self) -> String {
        let doc = GraphJson {
            rotations: self
                .rotations
                .iter()
                .map(|r| r.iter().map(|e| EndJson { edge: self.labels[e.edge].clone(), index: e.index }).collect())
                .collect(),
            twisted: self.twisted_labels().cloned().collect(),
        };
        serde_json::to_string(&doc).expect("graph JSON is always serializable")
    }

    pub fn from_json(text: &str) -> Result<RibbonGraph> {
        let doc: GraphJson = serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.to_string()))?;
        let rotations = doc.rotations.into_iter().map(|r| r.into_iter().map(|e| (e.edge, e.index)).collect()).collect();
        RibbonGraph::from_rotations(rotations, doc.twisted)
    }
}

impl fmt::Display for RibbonGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rotations {
            f.write_str("vertex:")?;
            for End { edge, .. } in r {
                write!(f, " {}", self.labels[*edge])?;
            }
            f.write_str("\n")?;
        }
        let tw: Vec<String> = self.twisted_labels().map(ToString::to_string).collect();
        if !tw.is_empty() {
            writeln!(f, "twisted: {}", tw.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ribbon_file() {
        let g = RibbonGraph::parse("vertex: 1 1").unwrap();
        assert_eq!((g.num_vertices(), g.num_edges(), g.is_twisted(0)), (1, 1, false));
        let g = RibbonGraph::parse("# loop\nvertex: 1 1\ntwisted: 1\n").unwrap();
        assert!(g.is_twisted(0));
        let g = RibbonGraph::parse("vertex: e\nvertex: e").unwrap();
        assert_eq!((g.num_vertices(), g.num_edges()), (2, 1));
        assert_eq!(g.endpoints(0), (0, 1));
        let g = RibbonGraph::parse("vertex:\nvertex: a a").unwrap();
        assert_eq!(g.rotation(0).unwrap().len(), 0);
    }

    #[test]
    fn ribbon_file_errors() {
        assert!(matches!(RibbonGraph::parse("vertex 1 1"), Err(Error::Parse { line: 1, .. })));
        assert!(RibbonGraph::parse("vertex: 1").is_err());
        assert!(RibbonGraph::parse("vertex: 1 1 1").is_err());
        assert_eq!(RibbonGraph::parse("vertex: 1 1\ntwisted: 2"), Err(Error::UnknownEdge("2".into())));
        assert!(RibbonGraph::parse("vertex: 1 1\ntwisted: 1\ntwisted: 1").is_err());
        assert!(RibbonGraph::parse("edge: 1").is_err());
    }

    #[test]
    fn bouquets() {
        let b1 = RibbonGraph::parse_bouquet("(1, 2, -1, 2)").unwrap();
        assert!(b1.is_twisted(0));
        assert!(!b1.is_twisted(1));
        assert_eq!(b1.to_bouquet_string().unwrap(), "(1, 2, -1, 2)");
        let b = RibbonGraph::parse_bouquet("(1, 1)").unwrap();
        assert!(!b.is_twisted(0));
        let b = RibbonGraph::parse_bouquet("(-1, -1)").unwrap();
        assert!(!b.is_twisted(0));
        let b = RibbonGraph::parse_bouquet("(1,-1)").unwrap();
        assert!(b.is_twisted(0));
        assert_eq!(RibbonGraph::parse_bouquet("()").unwrap(), RibbonGraph::edgeless(1));
        assert!(RibbonGraph::parse_bouquet("(1, 2, 1)").is_err());
        assert!(RibbonGraph::parse_bouquet("(1, 1, 1)").is_err());
        assert!(RibbonGraph::parse_bouquet("1, 1").is_err());
        assert!(RibbonGraph::parse_bouquet("(-, 1)").is_err());
    }

    #[test]
    fn any_source() {
        assert_eq!(RibbonGraph::parse_any("  (1, -1)").unwrap().to_bouquet_string().unwrap(), "(1, -1)");
        assert_eq!(RibbonGraph::parse_any("vertex: a a\n").unwrap().num_edges(), 1);
    }

    #[test]
    fn json_shape() {
        let g = RibbonGraph::parse_bouquet("(1, -1)").unwrap();
        assert_eq!(g.to_json(), r#"{"rotations":[[{"edge":"1","index":0},{"edge":"1","index":1}]],"twisted":["1"]}"#);
        assert_eq!(RibbonGraph::from_json(&g.to_json()).unwrap(), g);
        assert!(RibbonGraph::from_json(r#"{"rotations":[[{"edge":"1","index":0}]],"twisted":[]}"#).is_err());
    }

    #[test]
    fn text_round_trip() {
        let g = RibbonGraph::parse("vertex: b a\nvertex: a c c b\ntwisted: c").unwrap();
        let text = g.to_string();
        assert_eq!(text, "vertex: b a\nvertex: a c c b\ntwisted: c\n");
        assert_eq!(RibbonGraph::parse(&text).unwrap().to_string(), text);
    }
}
