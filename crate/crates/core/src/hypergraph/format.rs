use super::{EdgeSpec, Hypergraph};
use crate::error::{Error, Result};
use crate::lexer::{content_lines, tokenize, LineCursor, Tok};

pub(super) fn parse_hg(text: &str) -> Result<Hypergraph> {
    let mut vertices: Vec<String> = Vec::new();
    let mut edges = Vec::new();
    let mut saw_vertices = false;
    for (line, content) in content_lines(text) {
        let tokens = tokenize(content, line)?;
        let mut cur = LineCursor::new(&tokens, line, content.chars().count());
        match cur.peek() {
            Some(Tok::Ident(k)) if k == "vertices" => {
                cur.keyword("vertices")?;
                cur.expect(Tok::Colon, "`:`")?;
                vertices.extend(cur.ident_list("vertex name")?);
                cur.finish()?;
                saw_vertices = true;
            }
            Some(Tok::Ident(k)) if k == "edge" => {
                if !saw_vertices {
                    return Err(cur.error("`vertices:` must precede edges"));
                }
                cur.keyword("edge")?;
                let name = cur.ident("hyperedge name")?;
                cur.expect(Tok::Colon, "`:`")?;
                let source = source_list(&mut cur)?;
                cur.expect(Tok::Arrow, "`->`")?;
                let range = range_list(&mut cur, &name)?;
                cur.finish()?;
                edges.push(EdgeSpec { name, source, range });
            }
            _ => return Err(cur.error("expected `vertices:` or `edge`")),
        }
    }
    if !saw_vertices {
        return Err(Error::Syntax {
            line: 1,
            column: 1,
            message: "missing `vertices:` line".into(),
        });
    }
    Hypergraph::new(vertices, edges)
}

fn source_list(cur: &mut LineCursor<'_>) -> Result<Vec<String>> {
    let mut out = Vec::new();
    while let Some(Tok::Ident(s)) = cur.peek() {
        out.push(s.clone());
        cur.ident("vertex")?;
    }
    Ok(out)
}

fn range_list(cur: &mut LineCursor<'_>, edge: &str) -> Result<Vec<String>> {
    let out = source_list(cur)?;
    if out.is_empty() && cur.at_end() {
        return Err(Error::EmptyRange(edge.to_string()));
    }
    Ok(out)
}

pub(super) fn write_hg(h: &Hypergraph) -> String {
    let mut out = String::new();
    out.push_str("vertices:");
    for v in h.vertex_names() {
        out.push(' ');
        out.push_str(v);
    }
    out.push('\n');
    for e in h.edges() {
        out.push_str("edge ");
        out.push_str(&e.name);
        out.push(':');
        for v in &e.source {
            out.push(' ');
            out.push_str(h.vertex_name(*v));
        }
        out.push_str(" ->");
        for v in &e.range {
            out.push(' ');
            out.push_str(h.vertex_name(*v));
        }
        out.push('\n');
    }
    out
}
