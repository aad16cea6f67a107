//! Quasi-cycles, the connection relation and the Gelfand-Kirillov dimension.
//!
//! A quasi-cycle is a nod-path `p = x_1...x_n` such that `p p` is a nod-path and no
//! factor of `p p` shorter than `p` has that property. In letter-graph terms: the
//! letters form a closed walk and no cyclic factor `x_a...x_b` of length `< n`
//! allows `x_b x_a`. Such walks use each letter at most once, so a depth-first
//! search over distinct letters finds them all.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::algebra::Word;
use crate::error::{Error, Result, StepBudget};
use crate::hypergraph::Hypergraph;
use crate::letters::{Letter, LetterGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiCycle {
    pub letters: Vec<Letter>,
    /// Shifts of one quasi-cycle share a class id.
    pub class_id: usize,
}

impl QuasiCycle {
    pub fn word(&self) -> Word {
        Word::Path(self.letters.clone())
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn render(&self, h: &Hypergraph) -> String {
        self.word().render(h)
    }
}

/// Is the closed walk `idx` (letter indices, already known to close) minimal?
fn is_minimal(idx: &[usize], lg: &LetterGraph) -> bool {
    let n = idx.len();
    for start in 0..n {
        for m in 1..n {
            let last = idx[(start + m - 1) % n];
            if lg.allowed(last, idx[start]) {
                return false;
            }
        }
    }
    true
}

/// All quasi-cycles in canonical order (length, then letters); class ids count
/// classes in order of first appearance.
pub fn enumerate_quasi_cycles(lg: &LetterGraph, budget: StepBudget) -> Result<Vec<QuasiCycle>> {
    let mut reps: Vec<Vec<usize>> = Vec::new();
    let mut steps = 0u64;
    for start in 0..lg.len() {
        let mut path = vec![start];
        let mut used = vec![false; lg.len()];
        used[start] = true;
        search(lg, &mut path, &mut used, &mut reps, &mut steps, budget)?;
    }
    // Expand to all rotations, then order canonically.
    let mut all: Vec<(Vec<Letter>, usize)> = Vec::new();
    for (rep_id, rep) in reps.iter().enumerate() {
        for r in 0..rep.len() {
            let rotated: Vec<Letter> = rep[r..].iter().chain(&rep[..r]).map(|&k| lg.letter(k)).collect();
            all.push((rotated, rep_id));
        }
    }
    all.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
    let mut class_of: BTreeMap<usize, usize> = BTreeMap::new();
    Ok(all
        .into_iter()
        .map(|(letters, rep)| {
            let next = class_of.len();
            let class_id = *class_of.entry(rep).or_insert(next);
            QuasiCycle { letters, class_id }
        })
        .collect())
}

// Walks starting at path[0] whose other letters all have larger index, so each
// cycle is found once, from its least letter.
fn search(
    lg: &LetterGraph,
    path: &mut Vec<usize>,
    used: &mut [bool],
    out: &mut Vec<Vec<usize>>,
    steps: &mut u64,
    budget: StepBudget,
) -> Result<()> {
    *steps += 1;
    budget.check(*steps)?;
    let last = *path.last().expect("nonempty");
    // A window x_a..x_last with a > 0 that closes up is a shorter nod² factor of
    // any extension. If the whole path closes, it must close now.
    if (1..path.len()).any(|a| lg.allowed(last, path[a])) {
        return Ok(());
    }
    if lg.allowed(last, path[0]) {
        if is_minimal(path, lg) {
            out.push(path.clone());
        }
        return Ok(());
    }
    for &next in lg.successors(last) {
        if next <= path[0] || used[next] {
            continue;
        }
        path.push(next);
        used[next] = true;
        search(lg, path, used, out, steps, budget)?;
        used[next] = false;
        path.pop();
    }
    Ok(())
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Progress {
    /// The connector so far equals the first `k` letters of `p`.
    Matching(usize),
    Diverged,
}

/// Shortest `o` with `|o| >= 1`, `p` not a prefix of `o`, and `p o q` a nod-path.
///
/// Breadth-first search over (last letter of `o`, prefix-match progress); states
/// whose progress reaches `|p|` are dropped since every extension keeps `p` as a
/// prefix. Among shortest connectors the first in canonical order is returned.
pub fn connects_nod(p: &[Letter], q: &[Letter], lg: &LetterGraph) -> Option<Vec<Letter>> {
    let pi = lg.indices(p)?;
    let qi = lg.indices(q)?;
    if pi.is_empty() || qi.is_empty() {
        return None;
    }
    let plen = pi.len();
    let slot = |letter: usize, prog: Progress| -> usize {
        let k = match prog {
            Progress::Matching(k) => k,
            Progress::Diverged => plen,
        };
        letter * (plen + 1) + k
    };
    let mut parent: Vec<Option<Option<usize>>> = vec![None; lg.len() * (plen + 1)];
    let mut queue = VecDeque::new();
    let advance = |prog: Progress, letter: usize| -> Option<Progress> {
        match prog {
            Progress::Matching(k) if pi[k] == letter => {
                if k + 1 == plen {
                    None
                } else {
                    Some(Progress::Matching(k + 1))
                }
            }
            _ => Some(Progress::Diverged),
        }
    };
    let p_last = *pi.last().expect("nonempty");
    for &first in lg.successors(p_last) {
        if let Some(prog) = advance(Progress::Matching(0), first) {
            let s = slot(first, prog);
            if parent[s].is_none() {
                parent[s] = Some(None);
                queue.push_back((first, prog));
            }
        }
    }
    while let Some((letter, prog)) = queue.pop_front() {
        let here = slot(letter, prog);
        if lg.allowed(letter, qi[0]) {
            let mut word = vec![lg.letter(letter)];
            let mut cur = here;
            while let Some(Some(prev)) = parent[cur] {
                word.push(lg.letter(prev / (plen + 1)));
                cur = prev;
            }
            word.reverse();
            return Some(word);
        }
        for &next in lg.successors(letter) {
            if let Some(np) = advance(prog, next) {
                let s = slot(next, np);
                if parent[s].is_none() {
                    parent[s] = Some(Some(here));
                    queue.push_back((next, np));
                }
            }
        }
    }
    None
}

/// `p => q`: `p q` is a nod-path, or some connector exists.
pub fn connects(p: &[Letter], q: &[Letter], lg: &LetterGraph) -> bool {
    match (p.last(), q.first()) {
        (Some(a), Some(b)) if lg.allowed_letters(a, b) => true,
        _ => connects_nod(p, q, lg).is_some(),
    }
}

/// First quasi-cycle `p` (canonical order) with `p =>nod p`, and its connector.
pub fn selfconnected_witness(cycles: &[QuasiCycle], lg: &LetterGraph) -> Option<(QuasiCycle, Vec<Letter>)> {
    cycles
        .iter()
        .find_map(|c| connects_nod(&c.letters, &c.letters, lg).map(|o| (c.clone(), o)))
}

/// A longest chain `p_1 => p_2 => ... => p_d` of pairwise non-equivalent quasi-cycles.
///
/// Fails when some quasi-cycle is selfconnected, or when the digraph of classes has
/// a cycle (which would make chains unbounded).
pub fn max_chain(cycles: &[QuasiCycle], lg: &LetterGraph) -> Result<Vec<QuasiCycle>> {
    if selfconnected_witness(cycles, lg).is_some() {
        return Err(Error::SelfconnectedPresent);
    }
    let n = cycles.len();
    let mut arcs = vec![Vec::new(); n];
    let classes = cycles.iter().map(|c| c.class_id + 1).max().unwrap_or(0);
    let mut class_arcs = vec![vec![false; classes]; classes];
    for a in 0..n {
        for b in 0..n {
            if cycles[a].class_id != cycles[b].class_id && connects(&cycles[a].letters, &cycles[b].letters, lg) {
                arcs[a].push(b);
                class_arcs[cycles[a].class_id][cycles[b].class_id] = true;
            }
        }
    }
    if let Some(cycle) = find_cycle(&class_arcs) {
        let shown: Vec<String> = cycle.iter().map(|c| format!("class {c}")).collect();
        return Err(Error::InconsistentChains(shown.join(" -> ")));
    }
    // With acyclic classes, every path of quasi-cycles visits distinct classes and
    // the concrete digraph is acyclic too: longest path by memoized DFS.
    let mut best: Vec<Option<(usize, Option<usize>)>> = vec![None; n];
    fn longest(a: usize, arcs: &[Vec<usize>], best: &mut Vec<Option<(usize, Option<usize>)>>) -> usize {
        if let Some((len, _)) = best[a] {
            return len;
        }
        let mut top = (1, None);
        for &b in &arcs[a] {
            let l = 1 + longest(b, arcs, best);
            if l > top.0 {
                top = (l, Some(b));
            }
        }
        best[a] = Some(top);
        top.0
    }
    let mut start = None;
    let mut top = 0;
    for a in 0..n {
        let l = longest(a, &arcs, &mut best);
        if l > top {
            top = l;
            start = Some(a);
        }
    }
    let mut chain = Vec::new();
    let mut cur = start;
    while let Some(a) = cur {
        chain.push(cycles[a].clone());
        cur = best[a].and_then(|(_, next)| next);
    }
    Ok(chain)
}

fn find_cycle(adj: &[Vec<bool>]) -> Option<Vec<usize>> {
    let n = adj.len();
    let mut color = vec![0u8; n];
    let mut stack = Vec::new();
    fn visit(v: usize, adj: &[Vec<bool>], color: &mut [u8], stack: &mut Vec<usize>) -> Option<Vec<usize>> {
        color[v] = 1;
        stack.push(v);
        for w in 0..adj.len() {
            if !adj[v][w] {
                continue;
            }
            if color[w] == 1 {
                let pos = stack.iter().position(|&x| x == w).expect("on stack");
                let mut cyc = stack[pos..].to_vec();
                cyc.push(w);
                return Some(cyc);
            }
            if color[w] == 0 {
                if let Some(c) = visit(w, adj, color, stack) {
                    return Some(c);
                }
            }
        }
        stack.pop();
        color[v] = 2;
        None
    }
    for v in 0..n {
        if color[v] == 0 {
            if let Some(c) = visit(v, adj, &mut color, &mut stack) {
                return Some(c);
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GkResult {
    Finite {
        d: usize,
        chain: Vec<QuasiCycle>,
    },
    Exponential {
        witness: QuasiCycle,
        connector: Vec<Letter>,
    },
}

impl GkResult {
    pub fn display<'a>(&'a self, h: &'a Hypergraph) -> GkDisplay<'a> {
        GkDisplay { result: self, h }
    }
}

pub struct GkDisplay<'a> {
    result: &'a GkResult,
    h: &'a Hypergraph,
}

impl fmt::Display for GkDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.result {
            GkResult::Finite { d, chain } => {
                let parts: Vec<String> = chain.iter().map(|c| format!("[{}]", c.render(self.h))).collect();
                if parts.is_empty() {
                    write!(f, "GKdim = {d}; chain: []")
                } else {
                    write!(f, "GKdim = {d}; chain: {}", parts.join(" => "))
                }
            }
            GkResult::Exponential { witness, connector } => {
                let o = Word::Path(connector.clone()).render(self.h);
                write!(
                    f,
                    "exponential growth; selfconnected quasi-cycle [{}] with connector [{}]",
                    witness.render(self.h),
                    o
                )
            }
        }
    }
}

pub fn gk_dimension(lg: &LetterGraph, budget: StepBudget) -> Result<GkResult> {
    let cycles = enumerate_quasi_cycles(lg, budget)?;
    if let Some((witness, connector)) = selfconnected_witness(&cycles, lg) {
        return Ok(GkResult::Exponential { witness, connector });
    }
    let chain = max_chain(&cycles, lg)?;
    Ok(GkResult::Finite { d: chain.len(), chain })
}

/// JSON view of a quasi-cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuasiCycleRecord {
    pub word: String,
    pub class_id: usize,
}

impl QuasiCycleRecord {
    pub fn new(c: &QuasiCycle, h: &Hypergraph) -> Self {
        QuasiCycleRecord {
            word: c.render(h),
            class_id: c.class_id,
        }
    }
}
