//! Exhaustive search for proper edge colorings without rainbow cycles of
//! prescribed lengths.
//!
//! Depth-first over a static edge order with forward checking: assigning a
//! color removes it from every adjacent edge, and once all but one edge of a
//! forbidden cycle carry pairwise distinct colors, the remaining edge is
//! restricted to those colors. With symmetry breaking on, the edges at
//! vertex 0 are fixed to `1..=deg` in rotation order and a fresh color is
//! only ever introduced as the next unused one.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::coloring::{Color, EdgeColoring};
use crate::graph::{enumerate_cycles, PlanarTriangulation};
use crate::verifier::{check_c4_obstructions, satisfies, Obstruction};

/// Largest palette the bitset domains can hold after clamping.
pub const MAX_PALETTE: Color = 127;

pub const DEFAULT_BUDGET_NODES: u64 = 100_000_000;
pub const DEFAULT_BUDGET_SECONDS: u64 = 300;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("palette must be at least 1")]
    EmptyPalette,
    #[error("forbidden cycle length {length} outside 3..={n}")]
    InvalidLength { length: usize, n: usize },
    #[error("effective palette {0} exceeds the supported maximum {MAX_PALETTE}")]
    PaletteTooLarge(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub nodes: u64,
    pub seconds: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            nodes: DEFAULT_BUDGET_NODES,
            seconds: DEFAULT_BUDGET_SECONDS,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchProblem {
    graph: PlanarTriangulation,
    palette: Color,
    forbidden: BTreeSet<usize>,
    budget: Budget,
    symmetry_breaking: bool,
}

impl SearchProblem {
    pub fn new(
        graph: PlanarTriangulation,
        palette: Color,
        forbidden: impl IntoIterator<Item = usize>,
    ) -> Result<Self, SearchError> {
        if palette == 0 {
            return Err(SearchError::EmptyPalette);
        }
        let n = graph.vertex_count();
        let forbidden: BTreeSet<usize> = forbidden.into_iter().collect();
        if let Some(&length) = forbidden.iter().find(|&&l| l < 3 || l > n) {
            return Err(SearchError::InvalidLength { length, n });
        }
        // a proper coloring never needs more colors than there are edges
        let effective = (palette as usize).min(graph.edge_count());
        if effective > MAX_PALETTE as usize {
            return Err(SearchError::PaletteTooLarge(effective));
        }
        Ok(SearchProblem {
            graph,
            palette,
            forbidden,
            budget: Budget::default(),
            symmetry_breaking: true,
        })
    }

    pub fn with_budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_symmetry_breaking(mut self, on: bool) -> Self {
        self.symmetry_breaking = on;
        self
    }

    pub fn graph(&self) -> &PlanarTriangulation {
        &self.graph
    }

    pub fn palette(&self) -> Color {
        self.palette
    }

    pub fn forbidden(&self) -> &BTreeSet<usize> {
        &self.forbidden
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    pub fn symmetry_breaking(&self) -> bool {
        self.symmetry_breaking
    }

    fn effective_palette(&self) -> Color {
        self.palette.min(self.graph.edge_count() as Color)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SearchStatus {
    #[serde(rename = "SAT")]
    Sat,
    #[serde(rename = "UNSAT")]
    Unsat,
    #[serde(rename = "BUDGET_EXCEEDED")]
    BudgetExceeded,
}

impl fmt::Display for SearchStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SearchStatus::Sat => "SAT",
            SearchStatus::Unsat => "UNSAT",
            SearchStatus::BudgetExceeded => "BUDGET_EXCEEDED",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub max_depth: usize,
    pub wall_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub witness: Option<EdgeColoring>,
    pub stats: SearchStats,
    /// Set when the verdict came from a precheck rule.
    pub reason: Option<String>,
}

impl SearchOutcome {
    fn decided(status: SearchStatus, witness: Option<EdgeColoring>, reason: String) -> Self {
        SearchOutcome {
            status,
            witness,
            stats: SearchStats::default(),
            reason: Some(reason),
        }
    }

    /// Equality ignoring wall-clock time.
    pub fn same_result(&self, other: &SearchOutcome) -> bool {
        self.status == other.status
            && self.witness == other.witness
            && self.stats.nodes == other.stats.nodes
            && self.stats.max_depth == other.stats.max_depth
            && self.reason == other.reason
    }
}

/// Verdicts that follow without search, if any applies.
///
/// In order: palette below the maximum degree (UNSAT); forbidden triangles
/// (UNSAT, a properly colored triangle is rainbow); forbidden 4-cycles on
/// `n >= 5` with a vertex of degree 3 or 4 or a separating triangle (UNSAT);
/// every forbidden length above the palette (SAT, any proper coloring in the
/// palette works, found greedily or by a properness-only search).
pub fn precheck(problem: &SearchProblem) -> Option<SearchOutcome> {
    let g = &problem.graph;
    let unsat = |reason: String| Some(SearchOutcome::decided(SearchStatus::Unsat, None, reason));
    if (problem.palette as usize) < g.max_degree() {
        return unsat(format!(
            "palette {} is below the maximum degree {}",
            problem.palette,
            g.max_degree()
        ));
    }
    if problem.forbidden.contains(&3) {
        return unsat("every properly colored triangle is rainbow".into());
    }
    if problem.forbidden.contains(&4) && g.vertex_count() >= 5 {
        let obstructions = check_c4_obstructions(g);
        if let Some(first) = obstructions.first() {
            let what = match first {
                Obstruction::LowDegree { vertex, degree } => {
                    format!("vertex {vertex} has degree {degree}")
                }
                Obstruction::SeparatingTriangle { cycle } => {
                    format!("separating triangle {cycle}")
                }
            };
            return unsat(format!(
                "{} rainbow-C4 obstruction(s), first: {what}",
                obstructions.len()
            ));
        }
    }
    if problem
        .forbidden
        .iter()
        .all(|&l| l as u64 > problem.palette as u64)
    {
        let reason = "pigeonhole: every forbidden length exceeds the palette".to_string();
        if let Some(dense) = greedy_proper(g, problem.palette) {
            let witness = EdgeColoring::from_dense(g, problem.palette, &dense);
            return Some(SearchOutcome::decided(
                SearchStatus::Sat,
                Some(witness),
                reason,
            ));
        }
        let proper_only = SearchProblem {
            forbidden: BTreeSet::new(),
            ..problem.clone()
        };
        let mut outcome = solve(&proper_only);
        if outcome.status == SearchStatus::Sat {
            outcome.reason = Some(reason);
            return Some(outcome);
        }
    }
    None
}

/// Precheck, falling back to the full search.
pub fn decide(problem: &SearchProblem) -> SearchOutcome {
    precheck(problem).unwrap_or_else(|| solve(problem))
}

/// First-fit proper coloring in canonical edge order, if it fits.
fn greedy_proper(graph: &PlanarTriangulation, palette: Color) -> Option<Vec<Color>> {
    let mut dense: Vec<Color> = vec![0; graph.edge_count()];
    for (id, e) in graph.edges().iter().enumerate() {
        let taken: BTreeSet<Color> = [e.low(), e.high()]
            .iter()
            .flat_map(|&v| graph.incident(v).iter().map(|&(_, f)| dense[f]))
            .collect();
        let c = (1..=palette).find(|c| !taken.contains(c))?;
        dense[id] = c;
    }
    Some(dense)
}

/// Exhaustive search. Deterministic for a given problem.
pub fn solve(problem: &SearchProblem) -> SearchOutcome {
    let started = Instant::now();
    let mut solver = Solver::new(problem, started);
    let result = solver.run();
    let stats = SearchStats {
        nodes: solver.nodes,
        max_depth: solver.max_depth,
        wall_ms: started.elapsed().as_millis() as u64,
    };
    let (status, witness) = match result {
        Ok(true) => {
            let lengths: Vec<usize> = problem.forbidden.iter().copied().collect();
            assert!(
                satisfies(&problem.graph, &solver.assigned, &lengths),
                "search produced a witness that fails verification"
            );
            let witness =
                EdgeColoring::from_dense(&problem.graph, problem.palette, &solver.assigned);
            (SearchStatus::Sat, Some(witness))
        }
        Ok(false) => (SearchStatus::Unsat, None),
        Err(BudgetExhausted) => (SearchStatus::BudgetExceeded, None),
    };
    SearchOutcome {
        status,
        witness,
        stats,
        reason: None,
    }
}

struct BudgetExhausted;

struct Solver<'a> {
    problem: &'a SearchProblem,
    order: Vec<usize>,
    adjacent: Vec<Vec<usize>>,
    cycles: Vec<Vec<usize>>,
    through: Vec<Vec<usize>>,
    domain: Vec<u128>,
    assigned: Vec<Color>,
    trail: Vec<(usize, u128)>,
    max_used: Color,
    nodes: u64,
    max_depth: usize,
    started: Instant,
    deadline: Duration,
}

impl<'a> Solver<'a> {
    fn new(problem: &'a SearchProblem, started: Instant) -> Self {
        let g = &problem.graph;
        let m = g.edge_count();
        let palette = problem.effective_palette();

        let mut adjacent = vec![Vec::new(); m];
        for v in g.vertices() {
            let inc = g.incident(v);
            for &(_, e) in inc {
                for &(_, f) in inc {
                    if e != f {
                        adjacent[e].push(f);
                    }
                }
            }
        }
        for list in &mut adjacent {
            list.sort_unstable();
        }

        // cycles longer than the palette can never be rainbow
        let mut cycles = Vec::new();
        let mut through = vec![Vec::new(); m];
        for &len in &problem.forbidden {
            if len as u64 > palette as u64 {
                continue;
            }
            for c in enumerate_cycles(g, len) {
                let ids = c.edge_ids(g);
                for &e in &ids {
                    through[e].push(cycles.len());
                }
                cycles.push(ids);
            }
        }

        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by_key(|&e| (std::cmp::Reverse(adjacent[e].len()), e));

        let full: u128 = (1..=palette).fold(0, |mask, c| mask | bit(c));
        Solver {
            problem,
            order,
            adjacent,
            cycles,
            through,
            domain: vec![full; m],
            assigned: vec![0; m],
            trail: Vec::new(),
            max_used: 0,
            nodes: 0,
            max_depth: 0,
            started,
            deadline: Duration::from_secs(problem.budget.seconds),
        }
    }

    fn run(&mut self) -> Result<bool, BudgetExhausted> {
        if self.problem.symmetry_breaking {
            let g = &self.problem.graph;
            let first: Vec<usize> = g
                .rotation(0)
                .iter()
                .map(|&w| g.edge_id(0, w).unwrap())
                .collect();
            if first.len() as u64 > self.problem.effective_palette() as u64 {
                return Ok(false);
            }
            for (i, &e) in first.iter().enumerate() {
                let c = i as Color + 1;
                if self.domain[e] & bit(c) == 0 || !self.assign(e, c) {
                    return Ok(false);
                }
                self.max_used = c;
            }
        }
        self.search(0)
    }

    fn search(&mut self, idx: usize) -> Result<bool, BudgetExhausted> {
        self.max_depth = self.max_depth.max(idx);
        let Some(&e) = self.order.get(idx) else {
            return Ok(true);
        };
        if self.assigned[e] != 0 {
            return self.search(idx + 1);
        }
        let mut dom = self.domain[e];
        while dom != 0 {
            let c = dom.trailing_zeros() as Color;
            dom &= dom - 1;
            if self.problem.symmetry_breaking && c > self.max_used + 1 {
                break;
            }
            self.nodes += 1;
            if self.nodes > self.problem.budget.nodes
                || (self.nodes.is_multiple_of(1024) && self.started.elapsed() > self.deadline)
            {
                return Err(BudgetExhausted);
            }
            let mark = self.trail.len();
            let prev_max = self.max_used;
            self.max_used = self.max_used.max(c);
            if self.assign(e, c) && self.search(idx + 1)? {
                return Ok(true);
            }
            self.undo(mark);
            self.assigned[e] = 0;
            self.max_used = prev_max;
        }
        Ok(false)
    }

    fn restrict(&mut self, e: usize, mask: u128) -> bool {
        let old = self.domain[e];
        let new = old & mask;
        if new != old {
            self.trail.push((e, old));
            self.domain[e] = new;
        }
        new != 0
    }

    fn assign(&mut self, e: usize, c: Color) -> bool {
        self.assigned[e] = c;
        for i in 0..self.adjacent[e].len() {
            let f = self.adjacent[e][i];
            if self.assigned[f] == c {
                return false;
            }
            if self.assigned[f] == 0 && !self.restrict(f, !bit(c)) {
                return false;
            }
        }
        for i in 0..self.through[e].len() {
            let cyc = self.through[e][i];
            let mut used = 0u128;
            let mut open = 0;
            let mut last = usize::MAX;
            let mut repeated = false;
            for &f in &self.cycles[cyc] {
                let col = self.assigned[f];
                if col == 0 {
                    open += 1;
                    last = f;
                } else if used & bit(col) != 0 {
                    repeated = true;
                    break;
                } else {
                    used |= bit(col);
                }
            }
            if repeated {
                continue;
            }
            match open {
                0 => return false,
                1 if !self.restrict(last, used) => return false,
                _ => {}
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (e, old) = self.trail.pop().unwrap();
            self.domain[e] = old;
        }
    }
}

fn bit(c: Color) -> u128 {
    1u128 << c
}
