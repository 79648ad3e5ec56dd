//! Exact minimax solvers for the competition-enclaveless game and the
//! domination game.
//!
//! Both games play vertices one at a time until no legal move remains. In
//! the enclaveless game a move must keep the played set enclaveless and the
//! final set is a maximal enclaveless set; in the domination game a move
//! must dominate at least one vertex not yet dominated and the final set is
//! a dominating set. The score is the total number of vertices played, which
//! one side maximizes and the other minimizes.
//!
//! The default solver is plain memoized minimax; it is the reference path.
//! Alpha-beta pruning is available behind [`SolveOptions::alpha_beta`] and is
//! validated against the reference in tests.

mod strategy;

pub use strategy::{
    builtin_strategies, simulate, BlockPlan, ConnectorPlan, FallbackEvent, FallbackReason,
    ScriptState, SimulationReport, Strategy, StrategyError,
};

use thiserror::Error;

use crate::graph::{Graph, Vertex, VertexSet};
use crate::invariants::playable_vertices;

/// Which game is being played.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum GameKind {
    /// Players build a maximal enclaveless set.
    Enclaveless,
    /// Players build a dominating set.
    Domination,
}

/// A player, identified by optimization direction: the maximizing side wants
/// a long game (Maximizer / Staller), the minimizing side a short one
/// (Minimizer / Dominator).
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Maximizing,
    Minimizing,
}

impl Side {
    pub fn opponent(self) -> Side {
        match self {
            Side::Maximizing => Side::Minimizing,
            Side::Minimizing => Side::Maximizing,
        }
    }

    /// Conventional player name within a game kind.
    pub fn name(self, kind: GameKind) -> &'static str {
        match (kind, self) {
            (GameKind::Enclaveless, Side::Maximizing) => "Maximizer",
            (GameKind::Enclaveless, Side::Minimizing) => "Minimizer",
            (GameKind::Domination, Side::Maximizing) => "Staller",
            (GameKind::Domination, Side::Minimizing) => "Dominator",
        }
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GameError {
    #[error("graph order {n} exceeds the solver cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("illegal move {v}")]
    IllegalMove { v: Vertex },
    #[error(
        "strategy fault: {name} selected illegal vertex {v} at played={played} covered={covered}"
    )]
    StrategyFault {
        name: String,
        v: Vertex,
        played: VertexSet,
        covered: VertexSet,
    },
}

/// A game in progress.
#[derive(Clone, Debug)]
pub struct Position<'g> {
    graph: &'g Graph,
    kind: GameKind,
    starter: Side,
    played: VertexSet,
    covered: VertexSet,
    mover: Side,
}

impl<'g> Position<'g> {
    /// The opening position: nothing played, `starter` to move.
    pub fn opening(graph: &'g Graph, kind: GameKind, starter: Side) -> Position<'g> {
        Position {
            graph,
            kind,
            starter,
            played: VertexSet::EMPTY,
            covered: VertexSet::EMPTY,
            mover: starter,
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn kind(&self) -> GameKind {
        self.kind
    }

    pub fn starter(&self) -> Side {
        self.starter
    }

    /// Vertices played so far.
    pub fn played(&self) -> VertexSet {
        self.played
    }

    /// Dominated vertices (domination game only; empty otherwise).
    pub fn covered(&self) -> VertexSet {
        self.covered
    }

    pub fn mover(&self) -> Side {
        self.mover
    }

    pub fn move_count(&self) -> usize {
        self.played.len()
    }

    pub fn legal_moves(&self) -> VertexSet {
        match self.kind {
            GameKind::Enclaveless => playable_vertices(self.graph, self.played),
            GameKind::Domination => {
                let mut out = VertexSet::EMPTY;
                for v in self.graph.vertices() {
                    if !self.graph.closed_neighborhood(v).is_subset_of(self.covered) {
                        out = out.with(v);
                    }
                }
                out
            }
        }
    }

    pub fn is_terminal(&self) -> bool {
        match self.kind {
            GameKind::Enclaveless => self.legal_moves().is_empty(),
            GameKind::Domination => self.covered == self.graph.vertex_set(),
        }
    }

    /// Plays `v`, returning the successor position.
    pub fn apply(&self, v: Vertex) -> Result<Position<'g>, GameError> {
        if v >= self.graph.order() || !self.legal_moves().contains(v) {
            return Err(GameError::IllegalMove { v });
        }
        let mut next = self.clone();
        next.played = self.played.with(v);
        if self.kind == GameKind::Domination {
            next.covered = self.covered.union(self.graph.closed_neighborhood(v));
        }
        next.mover = self.mover.opponent();
        Ok(next)
    }
}

/// Exact game value with certificates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameOutcome {
    /// Vertices played at game end under optimal play from the solved
    /// position.
    pub total_moves: usize,
    /// All optimal first moves from the solved position.
    pub optimal_first_moves: VertexSet,
    /// One optimal line, ties broken toward the lowest vertex id.
    pub principal_variation: Vec<Vertex>,
}

/// Per-kind solver caps.
#[derive(Copy, Clone, Debug)]
pub struct SolverCaps {
    pub enclaveless: usize,
    pub domination: usize,
}

impl Default for SolverCaps {
    fn default() -> Self {
        SolverCaps {
            enclaveless: 24,
            domination: 22,
        }
    }
}

impl SolverCaps {
    fn for_kind(&self, kind: GameKind) -> usize {
        match kind {
            GameKind::Enclaveless => self.enclaveless,
            GameKind::Domination => self.domination,
        }
    }
}

#[derive(Copy, Clone, Debug)]
pub struct SolveOptions {
    pub caps: SolverCaps,
    /// Disable to run the plain recursion (oracle for memo transparency).
    pub memo: bool,
    /// Key enclaveless-game memo entries by (played, mover) instead of the
    /// played set alone. The mover is determined by parity, so this must not
    /// change any value; it exists to let tests verify exactly that.
    pub mover_in_key: bool,
    /// Use alpha-beta pruning instead of exhaustive minimax.
    pub alpha_beta: bool,
    /// Bounds on the final total used to seed the alpha-beta window, e.g.
    /// the lower/upper enclaveless numbers. Ignored by the reference path.
    pub window: Option<(usize, usize)>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            caps: SolverCaps::default(),
            memo: true,
            mover_in_key: false,
            alpha_beta: false,
            window: None,
        }
    }
}

/// Solves the game from the opening position with default options.
pub fn solve(g: &Graph, kind: GameKind, starter: Side) -> Result<GameOutcome, GameError> {
    solve_with(g, kind, starter, &SolveOptions::default())
}

pub fn solve_with(
    g: &Graph,
    kind: GameKind,
    starter: Side,
    opts: &SolveOptions,
) -> Result<GameOutcome, GameError> {
    solve_position(&Position::opening(g, kind, starter), opts)
}

/// Solves the game from an arbitrary position.
pub fn solve_position(pos: &Position, opts: &SolveOptions) -> Result<GameOutcome, GameError> {
    let n = pos.graph.order();
    let cap = opts.caps.for_kind(pos.kind);
    if n > cap {
        return Err(GameError::CapExceeded { n, cap });
    }
    let mut search = Search::new(pos.graph, pos.kind, opts);
    let root_value = search.value(pos.played, pos.covered, pos.mover);

    let moves = pos.legal_moves();
    let mut optimal = VertexSet::EMPTY;
    for v in moves.iter() {
        let child = pos.apply(v).expect("legal");
        if 1 + search.value(child.played, child.covered, child.mover) == root_value {
            optimal = optimal.with(v);
        }
    }

    let mut pv = Vec::new();
    let mut cur = pos.clone();
    let mut remaining = root_value;
    while remaining > 0 {
        let mut chosen = None;
        for v in cur.legal_moves().iter() {
            let child = cur.apply(v).expect("legal");
            if 1 + search.value(child.played, child.covered, child.mover) == remaining {
                chosen = Some((v, child));
                break; // lowest id wins ties
            }
        }
        let (v, child) = chosen.expect("an optimal move must exist");
        pv.push(v);
        cur = child;
        remaining -= 1;
    }
    debug_assert!(cur.is_terminal());

    Ok(GameOutcome {
        total_moves: root_value as usize + pos.move_count(),
        optimal_first_moves: optimal,
        principal_variation: pv,
    })
}

const UNSOLVED: u8 = u8::MAX;

/// Minimax search state. Values are moves remaining from a position.
///
/// Memo keys: the enclaveless game is keyed by the played set alone (the
/// mover is a function of its parity and the starter); the domination game
/// by (covered, mover), since the move count is not a function of covered.
struct Search<'g> {
    g: &'g Graph,
    kind: GameKind,
    memo: Option<Vec<u8>>,
    mover_bit: bool,
    alpha_beta: bool,
    window: Option<(usize, usize)>,
    n: usize,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, kind: GameKind, opts: &SolveOptions) -> Search<'g> {
        let n = g.order();
        let mover_bit = kind == GameKind::Domination || opts.mover_in_key;
        let memo =
            (opts.memo && !opts.alpha_beta).then(|| vec![UNSOLVED; 1 << (n + mover_bit as usize)]);
        Search {
            g,
            kind,
            memo,
            mover_bit,
            alpha_beta: opts.alpha_beta,
            window: opts.window,
            n,
        }
    }

    fn key(&self, state: u64, mover: Side) -> usize {
        let mut k = state as usize;
        if self.mover_bit && mover == Side::Minimizing {
            k |= 1 << self.n;
        }
        k
    }

    fn legal(&self, played: VertexSet, covered: VertexSet) -> VertexSet {
        match self.kind {
            GameKind::Enclaveless => playable_vertices(self.g, played),
            GameKind::Domination => {
                let mut out = VertexSet::EMPTY;
                for v in self.g.vertices() {
                    if !self.g.closed_neighborhood(v).is_subset_of(covered) {
                        out = out.with(v);
                    }
                }
                out
            }
        }
    }

    fn child(&self, played: VertexSet, covered: VertexSet, v: Vertex) -> (VertexSet, VertexSet) {
        match self.kind {
            GameKind::Enclaveless => (played.with(v), covered),
            GameKind::Domination => (played.with(v), covered.union(self.g.closed_neighborhood(v))),
        }
    }

    fn value(&mut self, played: VertexSet, covered: VertexSet, mover: Side) -> u8 {
        if self.alpha_beta {
            let (lo, hi) = self.node_window(played.len());
            return self.ab_value(played, covered, mover, lo, hi);
        }
        let state = match self.kind {
            GameKind::Enclaveless => played.bits(),
            GameKind::Domination => covered.bits(),
        };
        let key = self.key(state, mover);
        if let Some(memo) = &self.memo {
            let hit = memo[key];
            if hit != UNSOLVED {
                return hit;
            }
        }
        let mut best: Option<u8> = None;
        for v in self.legal(played, covered).iter() {
            let (p2, c2) = self.child(played, covered, v);
            let val = 1 + self.value(p2, c2, mover.opponent());
            best = Some(match (best, mover) {
                (None, _) => val,
                (Some(b), Side::Maximizing) => b.max(val),
                (Some(b), Side::Minimizing) => b.min(val),
            });
        }
        let result = best.unwrap_or(0);
        if let Some(memo) = &mut self.memo {
            memo[key] = result;
        }
        result
    }

    /// Remaining-move bounds at a node with `moves_made` vertices played,
    /// derived from the caller-provided bounds on the final total. Every
    /// completed game ends at a total inside the window, so clamping is
    /// sound at every node.
    fn node_window(&self, moves_made: usize) -> (i32, i32) {
        match self.window {
            Some((lo, hi)) => (
                lo.saturating_sub(moves_made) as i32,
                (hi - moves_made.min(hi)) as i32,
            ),
            None => (0, (self.g.order() - moves_made) as i32),
        }
    }

    /// Fail-soft alpha-beta on moves remaining; exact whenever the true
    /// value lies inside the initial window, which the seeded bounds
    /// guarantee.
    fn ab_value(
        &mut self,
        played: VertexSet,
        covered: VertexSet,
        mover: Side,
        mut alpha: i32,
        mut beta: i32,
    ) -> u8 {
        let moves = self.legal(played, covered);
        if moves.is_empty() {
            return 0;
        }
        let (lo, hi) = self.node_window(played.len());
        alpha = alpha.max(lo);
        beta = beta.min(hi);
        match mover {
            Side::Maximizing => {
                let mut best = i32::MIN;
                for v in moves.iter() {
                    let (p2, c2) = self.child(played, covered, v);
                    let val =
                        1 + self.ab_value(p2, c2, mover.opponent(), alpha - 1, beta - 1) as i32;
                    best = best.max(val);
                    alpha = alpha.max(best);
                    if best >= beta {
                        break;
                    }
                }
                best as u8
            }
            Side::Minimizing => {
                let mut best = i32::MAX;
                for v in moves.iter() {
                    let (p2, c2) = self.child(played, covered, v);
                    let val =
                        1 + self.ab_value(p2, c2, mover.opponent(), alpha - 1, beta - 1) as i32;
                    best = best.min(val);
                    beta = beta.min(best);
                    if best <= alpha {
                        break;
                    }
                }
                best as u8
            }
        }
    }
}
