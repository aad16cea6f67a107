//! `Z^d`-gradings induced by admissible weight maps.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{Element, Word};
use crate::error::{Error, Result};
use crate::hypergraph::{EdgeId, Hypergraph};
use crate::letters::{Kind, Letter};
use crate::lexer::{content_lines, tokenize, LineCursor, Tok};

/// A degree in `Z^d`, stored densely.
pub type Degree = Vec<i64>;

/// Degrees of the direct letters; star letters get the negated degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightMap {
    rank: usize,
    /// `table[e][i-1][j-1]` is the weight of `h_e[i,j]`.
    table: Vec<Vec<Vec<Degree>>>,
}

fn unit(rank: usize, at: usize) -> Degree {
    let mut v = vec![0; rank];
    v[at] = 1;
    v
}

pub fn add_degrees(a: &[i64], b: &[i64]) -> Degree {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_degrees(a: &[i64], b: &[i64]) -> Degree {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// `(1,0,-2)`
pub fn format_degree(d: &[i64]) -> String {
    let parts: Vec<String> = d.iter().map(i64::to_string).collect();
    format!("({})", parts.join(","))
}

impl WeightMap {
    /// Raw table, not yet checked; consumers call [`WeightMap::check_admissible`].
    pub fn from_table(rank: usize, table: Vec<Vec<Vec<Degree>>>) -> WeightMap {
        WeightMap { rank, table }
    }

    /// `w(h[i,j]) = α_i` in `Z^d`, `d = max |s(h)|`.
    pub fn standard(h: &Hypergraph) -> WeightMap {
        let rank = h.edges().iter().map(|e| e.source.len()).max().unwrap_or(0);
        let table = h
            .edges()
            .iter()
            .map(|e| {
                (0..e.source.len())
                    .map(|i| vec![unit(rank, i); e.range.len()])
                    .collect()
            })
            .collect();
        WeightMap { rank, table }
    }

    /// `w(h[i,j]) = (α_i, α_j)` in `Z^{m+n}`, `m = max |s(h)|`, `n = max |r(h)|`.
    pub fn double(h: &Hypergraph) -> WeightMap {
        let m = h.edges().iter().map(|e| e.source.len()).max().unwrap_or(0);
        let n = h.edges().iter().map(|e| e.range.len()).max().unwrap_or(0);
        let table = h
            .edges()
            .iter()
            .map(|e| {
                (0..e.source.len())
                    .map(|i| {
                        (0..e.range.len())
                            .map(|j| {
                                let mut v = vec![0; m + n];
                                v[i] = 1;
                                v[m + j] = 1;
                                v
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        WeightMap { rank: m + n, table }
    }

    /// Parses lines `EDGE i j : c1 ... cd`, one per direct letter.
    pub fn parse(text: &str, h: &Hypergraph) -> Result<WeightMap> {
        let mut table: Vec<Vec<Vec<Option<Degree>>>> = h
            .edges()
            .iter()
            .map(|e| vec![vec![None; e.range.len()]; e.source.len()])
            .collect();
        let mut rank = None;
        for (line, content) in content_lines(text) {
            let tokens = tokenize(content, line)?;
            let mut cur = LineCursor::new(&tokens, line, content.chars().count());
            let name = cur.ident("hyperedge name")?;
            let i = cur.integer("index i")? as usize;
            let j = cur.integer("index j")? as usize;
            cur.expect(Tok::Colon, "`:`")?;
            let mut deg = Vec::new();
            while !cur.at_end() {
                let negative = if cur.peek() == Some(&Tok::Minus) {
                    cur.expect(Tok::Minus, "`-`")?;
                    true
                } else {
                    false
                };
                let v = cur.integer("integer")? as i64;
                deg.push(if negative { -v } else { v });
            }
            let e = h.edge_id(&name).ok_or_else(|| Error::UnknownEdge(name.clone()))?;
            let edge = h.edge(e);
            if i == 0 || j == 0 || i > edge.source.len() || j > edge.range.len() {
                return Err(Error::IndexOutOfRange {
                    edge: name,
                    i,
                    j,
                    source_len: edge.source.len(),
                    range_len: edge.range.len(),
                });
            }
            match rank {
                None => rank = Some(deg.len()),
                Some(d) if d != deg.len() => {
                    return Err(cur.error(format!("expected {d} integers, found {}", deg.len())));
                }
                _ => {}
            }
            let slot = &mut table[e.0][i - 1][j - 1];
            if slot.is_some() {
                return Err(cur.error(format!("second weight for {name}[{i},{j}]")));
            }
            *slot = Some(deg);
        }
        let rank = rank.unwrap_or(0);
        let mut full = Vec::with_capacity(table.len());
        for (e, rows) in table.into_iter().enumerate() {
            let mut out_rows = Vec::new();
            for (i, row) in rows.into_iter().enumerate() {
                let mut out = Vec::new();
                for (j, d) in row.into_iter().enumerate() {
                    out.push(d.ok_or_else(|| {
                        Error::InadmissibleWeight(format!("no weight for {}[{},{}]", h.edges()[e].name, i + 1, j + 1))
                    })?);
                }
                out_rows.push(out);
            }
            full.push(out_rows);
        }
        let w = WeightMap { rank, table: full };
        w.check_admissible(h)?;
        Ok(w)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Weight of the direct letter `h_e[i,j]`.
    pub fn weight(&self, e: EdgeId, i: usize, j: usize) -> &Degree {
        &self.table[e.0][i - 1][j - 1]
    }

    /// Shape matches `h` and `w(h[i,j]) = w(h[i,1]) - w(h[1,1]) + w(h[1,j])` everywhere.
    pub fn check_admissible(&self, h: &Hypergraph) -> Result<()> {
        if self.table.len() != h.edge_count() {
            return Err(Error::InadmissibleWeight(format!(
                "weights given for {} hyperedges, hypergraph has {}",
                self.table.len(),
                h.edge_count()
            )));
        }
        for (e, edge) in h.edges().iter().enumerate() {
            let rows = &self.table[e];
            if rows.len() != edge.source.len() || rows.iter().any(|r| r.len() != edge.range.len()) {
                return Err(Error::InadmissibleWeight(format!("shape mismatch at `{}`", edge.name)));
            }
            if rows.iter().flatten().any(|d| d.len() != self.rank) {
                return Err(Error::InadmissibleWeight(format!("wrong rank at `{}`", edge.name)));
            }
            for i in 0..edge.source.len() {
                for j in 0..edge.range.len() {
                    let expected = add_degrees(&sub_degrees(&rows[i][0], &rows[0][0]), &rows[0][j]);
                    if rows[i][j] != expected {
                        return Err(Error::InadmissibleWeight(format!(
                            "{}[{},{}] has weight {} but admissibility requires {}",
                            edge.name,
                            i + 1,
                            j + 1,
                            format_degree(&rows[i][j]),
                            format_degree(&expected)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn letter_degree(&self, l: &Letter) -> Degree {
        let w = self.weight(l.edge, l.i, l.j);
        match l.kind {
            Kind::Direct => w.clone(),
            Kind::Star => w.iter().map(|x| -x).collect(),
        }
    }

    pub fn word_degree(&self, w: &Word) -> Degree {
        let mut d = vec![0; self.rank];
        for l in w.letters() {
            d = add_degrees(&d, &self.letter_degree(l));
        }
        d
    }

    /// Text form accepted by [`WeightMap::parse`].
    pub fn serialize(&self, h: &Hypergraph) -> String {
        let mut out = String::new();
        for (e, rows) in self.table.iter().enumerate() {
            for (i, row) in rows.iter().enumerate() {
                for (j, d) in row.iter().enumerate() {
                    out.push_str(&format!("{} {} {} :", h.edges()[e].name, i + 1, j + 1));
                    for x in d {
                        out.push_str(&format!(" {x}"));
                    }
                    out.push('\n');
                }
            }
        }
        out
    }
}

/// Splits `a` by degree; the components sum to `a`.
pub fn homogeneous_components(a: &Element, w: &WeightMap) -> Result<BTreeMap<Degree, Element>> {
    let alg = a.algebra();
    w.check_admissible(alg.graph())?;
    let mut parts: BTreeMap<Degree, BTreeMap<Word, _>> = BTreeMap::new();
    for (word, c) in a.terms() {
        parts
            .entry(w.word_degree(word))
            .or_default()
            .insert(word.clone(), c.clone());
    }
    Ok(parts
        .into_iter()
        .map(|(d, terms)| (d, Element::from_terms(alg, terms)))
        .collect())
}

/// `Some(d)` when every word of `a` has degree `d`; `None` for inhomogeneous or zero `a`.
pub fn degree_of(a: &Element, w: &WeightMap) -> Option<Degree> {
    let mut degs = a.terms().keys().map(|word| w.word_degree(word));
    let first = degs.next()?;
    degs.all(|d| d == first).then_some(first)
}
