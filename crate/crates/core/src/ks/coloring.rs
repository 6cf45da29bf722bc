//! Decide whether a vector set admits a noncontextual 0/1 assignment.

use serde::{Deserialize, Serialize};

use super::{build_orthogonality_graph, Context, VectorSet};
use crate::error::{Error, Result};

/// Which pairs condition (i) forbids from both being 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EdgeSemantics {
    /// Every orthogonal pair of the set.
    #[default]
    AllGraphEdges,
    /// Only pairs that share one of the supplied contexts.
    ContextEdgesOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Uncolorable,
    Colorable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KsDecision {
    pub verdict: Verdict,
    /// A satisfying assignment when the verdict is `Colorable`.
    pub witness: Option<Vec<u8>>,
    /// Search nodes visited.
    pub nodes: u64,
}

impl KsDecision {
    pub fn is_ks(&self) -> bool {
        self.verdict == Verdict::Uncolorable
    }
}

const UNSET: i8 = -1;

struct Search<'a> {
    contexts: &'a [Context],
    neighbors: Vec<Vec<usize>>,
    contexts_of: Vec<Vec<usize>>,
    value: Vec<i8>,
    trail: Vec<usize>,
    nodes: u64,
}

impl Search<'_> {
    fn assign(&mut self, v: usize, val: i8, queue: &mut Vec<usize>) -> bool {
        match self.value[v] {
            UNSET => {
                self.value[v] = val;
                self.trail.push(v);
                queue.push(v);
                true
            }
            current => current == val,
        }
    }

    /// Unit propagation: a 1 zeroes its neighbors, a context with no 1 and a
    /// single open member forces that member to 1.
    fn propagate(&mut self, mut queue: Vec<usize>) -> bool {
        while let Some(v) = queue.pop() {
            if self.value[v] == 1 {
                for i in 0..self.neighbors[v].len() {
                    let w = self.neighbors[v][i];
                    if !self.assign(w, 0, &mut queue) {
                        return false;
                    }
                }
            } else {
                for i in 0..self.contexts_of[v].len() {
                    let c = self.contexts_of[v][i];
                    let members = self.contexts[c].members();
                    if members.iter().any(|&m| self.value[m] == 1) {
                        continue;
                    }
                    let mut open = members.iter().filter(|&&m| self.value[m] == UNSET);
                    match (open.next(), open.next()) {
                        (None, _) => return false,
                        (Some(&m), None) if !self.assign(m, 1, &mut queue) => {
                            return false;
                        }
                        _ => {}
                    }
                }
            }
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let v = self.trail.pop().unwrap();
            self.value[v] = UNSET;
        }
    }

    /// Depth-first over unsatisfied contexts, branching on which member is 1.
    fn solve(&mut self) -> bool {
        self.nodes += 1;
        // Most constrained unsatisfied context; ties go to the lowest index.
        let mut best: Option<(usize, usize)> = None;
        for (c, ctx) in self.contexts.iter().enumerate() {
            if ctx.members().iter().any(|&m| self.value[m] == 1) {
                continue;
            }
            let open = ctx
                .members()
                .iter()
                .filter(|&&m| self.value[m] == UNSET)
                .count();
            if best.is_none_or(|(_, o)| open < o) {
                best = Some((c, open));
            }
        }
        let Some((c, _)) = best else {
            return true;
        };
        let candidates: Vec<usize> = self.contexts[c]
            .members()
            .iter()
            .copied()
            .filter(|&m| self.value[m] == UNSET)
            .collect();
        for m in candidates {
            let mark = self.trail.len();
            let mut queue = Vec::new();
            if self.assign(m, 1, &mut queue) && self.propagate(queue) && self.solve() {
                return true;
            }
            self.undo_to(mark);
        }
        false
    }
}

/// Search for an assignment `v: vertices -> {0,1}` with (i) no forbidden pair
/// both 1 and (ii) at least one 1 in every context. `Uncolorable` means the
/// search space was exhausted.
pub fn check_ks_property(
    set: &VectorSet,
    contexts: &[Context],
    semantics: EdgeSemantics,
) -> Result<KsDecision> {
    if contexts.is_empty() {
        return Err(Error::EmptyContexts);
    }
    let n = set.len();
    let mut neighbors = vec![Vec::new(); n];
    let mut contexts_of = vec![Vec::new(); n];
    for (c, ctx) in contexts.iter().enumerate() {
        if let Some(&bad) = ctx.members().iter().find(|&&m| m >= n) {
            return Err(Error::InvalidContext {
                context: ctx.members().to_vec(),
                reason: format!("vertex {bad} out of range"),
            });
        }
        for &m in ctx.members() {
            contexts_of[m].push(c);
        }
    }
    match semantics {
        EdgeSemantics::AllGraphEdges => {
            for &(i, j) in build_orthogonality_graph(set).edges() {
                neighbors[i].push(j);
                neighbors[j].push(i);
            }
        }
        EdgeSemantics::ContextEdgesOnly => {
            for ctx in contexts {
                for (a, &i) in ctx.members().iter().enumerate() {
                    for &j in &ctx.members()[a + 1..] {
                        neighbors[i].push(j);
                        neighbors[j].push(i);
                    }
                }
            }
            for list in &mut neighbors {
                list.sort_unstable();
                list.dedup();
            }
        }
    }

    let mut search = Search {
        contexts,
        neighbors,
        contexts_of,
        value: vec![UNSET; n],
        trail: Vec::new(),
        nodes: 0,
    };
    if search.solve() {
        let witness = search.value.iter().map(|&v| u8::from(v == 1)).collect();
        Ok(KsDecision {
            verdict: Verdict::Colorable,
            witness: Some(witness),
            nodes: search.nodes,
        })
    } else {
        Ok(KsDecision {
            verdict: Verdict::Uncolorable,
            witness: None,
            nodes: search.nodes,
        })
    }
}
