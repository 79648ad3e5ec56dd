//! Scripted strategies and strategy simulation.
//!
//! A [`Strategy`] is a deterministic move selector for one side; the other
//! side plays exactly optimally against it. [`simulate`] explores the whole
//! restricted game tree (every opponent reply, scripted side forced) to find
//! the opponent's best line, so its value is achieved by the script against
//! any play, and a lower bound on the true game value when the scripted
//! side maximizes (an upper bound when it minimizes).
//!
//! Scripts address graph structure through generator labels: the connector
//! preference reads the `x?`/`y?`/`h?_?` labels of ring graphs, the block
//! script reads the `x?`/`y?` labels of path coronas. Positions the scripts
//! leave unspecified fall back to the lowest-id legal vertex, and every
//! fallback is reported.

use std::collections::{HashMap, HashSet};

use crate::graph::{Graph, Vertex, VertexSet};

use super::{GameError, GameKind, Position, Side, SolverCaps};

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum StrategyError {
    #[error("graph lacks the labels required by the {strategy} strategy: {detail}")]
    MissingLabels {
        strategy: &'static str,
        detail: String,
    },
}

/// Why a scripted side fell back to the lowest-id legal vertex.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FallbackReason {
    /// The script has no rule for the current position.
    UnscriptedPosition,
    /// The scripted support vertex was no longer playable.
    SupportVertexUnplayable,
}

/// One distinct restricted-game state where the script fell back.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FallbackEvent {
    pub played: VertexSet,
    pub covered: VertexSet,
    pub chosen: Vertex,
    pub reason: FallbackReason,
}

/// Bookkeeping a script carries through a game line. Hashable so that
/// simulation can memoize on (position, script state).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ScriptState {
    last_opponent_move: Option<u8>,
    /// Opponent moves seen per block (block scripts only).
    opponent_moves_in_block: Vec<u8>,
    /// The leaf played in answer to the block-opening move (block scripts).
    leaf_played_in_block: Vec<Option<u8>>,
    /// Moves consumed from a fixed script.
    fixed_index: u8,
}

/// Connector/hidden structure of a ring graph, read from generator labels.
#[derive(Clone, Debug)]
pub struct ConnectorPlan {
    connectors: VertexSet,
    hidden: VertexSet,
    block_of: Vec<usize>,
}

impl ConnectorPlan {
    pub fn from_labels(g: &Graph) -> Result<ConnectorPlan, StrategyError> {
        let mut connectors = VertexSet::EMPTY;
        let mut hidden = VertexSet::EMPTY;
        let mut block_of = vec![usize::MAX; g.order()];
        for v in g.vertices() {
            let label = g.label(v).ok_or_else(|| StrategyError::MissingLabels {
                strategy: "connector",
                detail: format!("vertex {v} is unlabeled"),
            })?;
            let (kind, rest) = label.split_at(1);
            let block: usize = match kind {
                "x" | "y" => rest.parse().map_err(|_| bad_label("connector", v, label))?,
                "h" => rest
                    .split('_')
                    .next()
                    .and_then(|b| b.parse().ok())
                    .ok_or_else(|| bad_label("connector", v, label))?,
                _ => return Err(bad_label("connector", v, label)),
            };
            if block == 0 {
                return Err(bad_label("connector", v, label));
            }
            block_of[v] = block - 1;
            if kind == "h" {
                hidden = hidden.with(v);
            } else {
                connectors = connectors.with(v);
            }
        }
        Ok(ConnectorPlan {
            connectors,
            hidden,
            block_of,
        })
    }
}

/// Path/pendant structure of a path corona, read from generator labels.
/// Requires the path length to be a positive multiple of ten so that the
/// ten-pair blocks are defined.
#[derive(Clone, Debug)]
pub struct BlockPlan {
    /// `x[i]` / `y[i]` are the ids of the i-th (0-based) path and pendant
    /// vertices.
    x: Vec<Vertex>,
    y: Vec<Vertex>,
    blocks: usize,
}

impl BlockPlan {
    pub fn from_labels(g: &Graph) -> Result<BlockPlan, StrategyError> {
        let n = g.order() / 2;
        if !g.order().is_multiple_of(2) || n == 0 || !n.is_multiple_of(10) {
            return Err(StrategyError::MissingLabels {
                strategy: "staller-blocks",
                detail: format!(
                    "order {} is not twice a positive multiple of ten",
                    g.order()
                ),
            });
        }
        let mut x = vec![usize::MAX; n];
        let mut y = vec![usize::MAX; n];
        for v in g.vertices() {
            let label = g.label(v).ok_or_else(|| StrategyError::MissingLabels {
                strategy: "staller-blocks",
                detail: format!("vertex {v} is unlabeled"),
            })?;
            let (kind, rest) = label.split_at(1);
            let i: usize = rest
                .parse()
                .map_err(|_| bad_label("staller-blocks", v, label))?;
            if i == 0 || i > n {
                return Err(bad_label("staller-blocks", v, label));
            }
            match kind {
                "x" => x[i - 1] = v,
                "y" => y[i - 1] = v,
                _ => return Err(bad_label("staller-blocks", v, label)),
            }
        }
        if x.iter().chain(y.iter()).any(|&v| v == usize::MAX) {
            return Err(StrategyError::MissingLabels {
                strategy: "staller-blocks",
                detail: "incomplete x/y labeling".into(),
            });
        }
        Ok(BlockPlan {
            x,
            y,
            blocks: n / 10,
        })
    }

    /// Block index of a vertex, and its 0-based path index.
    fn locate(&self, v: Vertex) -> Option<(usize, usize, bool)> {
        if let Some(i) = self.x.iter().position(|&u| u == v) {
            return Some((i / 10, i, false));
        }
        self.y
            .iter()
            .position(|&u| u == v)
            .map(|i| (i / 10, i, true))
    }

    fn block_vertices(&self, b: usize) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for i in 10 * b..10 * (b + 1) {
            s = s.with(self.x[i]).with(self.y[i]);
        }
        s
    }
}

fn bad_label(strategy: &'static str, v: Vertex, label: &str) -> StrategyError {
    StrategyError::MissingLabels {
        strategy,
        detail: format!("vertex {v} has unexpected label {label:?}"),
    }
}

/// A deterministic move selector for one side of a game.
#[derive(Clone, Debug)]
pub enum Strategy {
    /// Lowest-id legal vertex; the baseline script.
    GreedyLowest,
    /// Ring script: prefer a playable connector in the block the opponent
    /// just entered, then a playable hidden vertex there, then a playable
    /// connector elsewhere, then any playable vertex.
    Connector(ConnectorPlan),
    /// Path-corona script: answer the opponent's first move in an open
    /// block at path positions 1..=5 with the block's 8th pendant, at
    /// positions 6..=10 with its 3rd pendant; answer the opponent's second
    /// move in a block with the support vertex of the pendant played there
    /// earlier.
    StallerBlocks(BlockPlan),
    /// Plays a fixed vertex list in order; mainly a test aid.
    Fixed(Vec<Vertex>),
}

/// The built-in strategy catalog: name, what it needs, what it does.
pub fn builtin_strategies() -> [(&'static str, &'static str); 3] {
    [
        (
            "connector",
            "ring graphs (x/y/h labels): prefer a playable connector in the \
             block the opponent just entered, else a playable hidden vertex \
             there, else a playable connector elsewhere, else any playable \
             vertex",
        ),
        (
            "staller-blocks",
            "path coronas with order a multiple of ten (x/y labels): answer \
             the first move in an open block at path offsets 1..=5 with the \
             block's 8th pendant and at 6..=10 with its 3rd, answer the \
             opponent's second move in a block with the support of the \
             pendant played there, fall back to the lowest-id legal vertex",
        ),
        (
            "greedy-lowest",
            "any graph: always the lowest-id legal vertex",
        ),
    ]
}

impl Strategy {
    pub fn greedy_lowest() -> Strategy {
        Strategy::GreedyLowest
    }

    pub fn connector(g: &Graph) -> Result<Strategy, StrategyError> {
        ConnectorPlan::from_labels(g).map(Strategy::Connector)
    }

    pub fn staller_blocks(g: &Graph) -> Result<Strategy, StrategyError> {
        BlockPlan::from_labels(g).map(Strategy::StallerBlocks)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Strategy::GreedyLowest => "greedy-lowest",
            Strategy::Connector(_) => "connector",
            Strategy::StallerBlocks(_) => "staller-blocks",
            Strategy::Fixed(_) => "fixed",
        }
    }

    fn initial_state(&self) -> ScriptState {
        let blocks = match self {
            Strategy::StallerBlocks(plan) => plan.blocks,
            _ => 0,
        };
        ScriptState {
            last_opponent_move: None,
            opponent_moves_in_block: vec![0; blocks],
            leaf_played_in_block: vec![None; blocks],
            fixed_index: 0,
        }
    }

    /// Updates script bookkeeping after `v` was played from `before`.
    fn observe(
        &self,
        state: &ScriptState,
        before: &Position,
        v: Vertex,
        scripted: bool,
    ) -> ScriptState {
        let mut next = state.clone();
        if !scripted {
            next.last_opponent_move = Some(v as u8);
        }
        if let Strategy::StallerBlocks(plan) = self {
            if let Some((b, _, is_leaf)) = plan.locate(v) {
                if !scripted {
                    next.opponent_moves_in_block[b] += 1;
                } else if is_leaf
                    && next.leaf_played_in_block[b].is_none()
                    && next.opponent_moves_in_block[b] == 1
                    && before.played().intersection(plan.block_vertices(b)).len() == 1
                {
                    // her answer to the move that closed the block
                    next.leaf_played_in_block[b] = Some(v as u8);
                }
            }
        }
        if scripted {
            if let Strategy::Fixed(_) = self {
                next.fixed_index += 1;
            }
        }
        next
    }

    /// Chooses the scripted side's move. The position is non-terminal.
    /// Returns the vertex (possibly illegal for a faulty script) and the
    /// fallback reason when the script had no rule.
    fn choose(&self, pos: &Position, state: &ScriptState) -> (Vertex, Option<FallbackReason>) {
        let legal = pos.legal_moves();
        let lowest = legal.lowest().expect("choose called on terminal position");
        match self {
            Strategy::GreedyLowest => (lowest, None),
            Strategy::Fixed(script) => {
                let idx = state.fixed_index as usize;
                match script.get(idx) {
                    Some(&v) => (v, None),
                    None => (lowest, Some(FallbackReason::UnscriptedPosition)),
                }
            }
            Strategy::Connector(plan) => {
                let entered = state.last_opponent_move.map(|v| plan.block_of[v as usize]);
                if let Some(b) = entered {
                    let in_block: VertexSet =
                        legal.iter().filter(|&v| plan.block_of[v] == b).collect();
                    if let Some(v) = in_block.intersection(plan.connectors).lowest() {
                        return (v, None);
                    }
                    if let Some(v) = in_block.intersection(plan.hidden).lowest() {
                        return (v, None);
                    }
                }
                if let Some(v) = legal.intersection(plan.connectors).lowest() {
                    return (v, None);
                }
                (lowest, None)
            }
            Strategy::StallerBlocks(plan) => {
                let Some(d) = state.last_opponent_move else {
                    return (lowest, Some(FallbackReason::UnscriptedPosition));
                };
                let Some((b, path_idx, _)) = plan.locate(d as usize) else {
                    return (lowest, Some(FallbackReason::UnscriptedPosition));
                };
                let block = plan.block_vertices(b);
                let opened_block =
                    pos.played().intersection(block) == VertexSet::singleton(d as usize);
                if opened_block {
                    // Answer within the freshly opened block. A pendant
                    // opener dominates a subset of what its support vertex
                    // dominates, so it is answered like the support.
                    let offset = path_idx % 10; // 0-based within the block
                    let target_idx = if offset < 5 { 10 * b + 7 } else { 10 * b + 2 };
                    let target = plan.y[target_idx];
                    if legal.contains(target) {
                        return (target, None);
                    }
                    return (lowest, Some(FallbackReason::UnscriptedPosition));
                }
                if state.opponent_moves_in_block[b] == 2 {
                    if let Some(leaf) = state.leaf_played_in_block[b] {
                        let (_, leaf_idx, _) = plan.locate(leaf as usize).expect("leaf id");
                        let support = plan.x[leaf_idx];
                        if legal.contains(support) {
                            return (support, None);
                        }
                        return (lowest, Some(FallbackReason::SupportVertexUnplayable));
                    }
                }
                (lowest, Some(FallbackReason::UnscriptedPosition))
            }
        }
    }
}

/// Value and fallback log of a scripted-side simulation.
#[derive(Clone, Debug)]
pub struct SimulationReport {
    /// Total vertices played when the scripted side follows the script and
    /// the opponent plays optimally against it.
    pub value: usize,
    /// Distinct reachable states where the script fell back, in first-visit
    /// order.
    pub fallbacks: Vec<FallbackEvent>,
}

/// Simulates the game with `fixed_side` following `strategy` and the other
/// side playing exactly optimally against it, over every reachable line.
pub fn simulate(
    g: &Graph,
    kind: GameKind,
    starter: Side,
    fixed_side: Side,
    strategy: &Strategy,
) -> Result<SimulationReport, GameError> {
    simulate_with(
        g,
        kind,
        starter,
        fixed_side,
        strategy,
        SolverCaps::default(),
    )
}

pub fn simulate_with(
    g: &Graph,
    kind: GameKind,
    starter: Side,
    fixed_side: Side,
    strategy: &Strategy,
    caps: SolverCaps,
) -> Result<SimulationReport, GameError> {
    let cap = match kind {
        GameKind::Enclaveless => caps.enclaveless,
        GameKind::Domination => caps.domination,
    };
    if g.order() > cap {
        return Err(GameError::CapExceeded { n: g.order(), cap });
    }
    let mut sim = Simulation {
        strategy,
        fixed_side,
        memo: HashMap::new(),
        fallbacks: Vec::new(),
        seen_fallbacks: HashSet::new(),
    };
    let value = sim.value(
        &Position::opening(g, kind, starter),
        strategy.initial_state(),
    )?;
    Ok(SimulationReport {
        value: value as usize,
        fallbacks: sim.fallbacks,
    })
}

struct Simulation<'s> {
    strategy: &'s Strategy,
    fixed_side: Side,
    memo: HashMap<(u64, u64, Side, ScriptState), u8>,
    fallbacks: Vec<FallbackEvent>,
    seen_fallbacks: HashSet<FallbackEvent>,
}

impl Simulation<'_> {
    fn value(&mut self, pos: &Position, state: ScriptState) -> Result<u8, GameError> {
        let key = (
            pos.played().bits(),
            pos.covered().bits(),
            pos.mover(),
            state.clone(),
        );
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        let result = if pos.is_terminal() {
            0
        } else if pos.mover() == self.fixed_side {
            let (v, fallback) = self.strategy.choose(pos, &state);
            let next = pos.apply(v).map_err(|_| GameError::StrategyFault {
                name: self.strategy.name().to_string(),
                v,
                played: pos.played(),
                covered: pos.covered(),
            })?;
            if let Some(reason) = fallback {
                let event = FallbackEvent {
                    played: pos.played(),
                    covered: pos.covered(),
                    chosen: v,
                    reason,
                };
                if self.seen_fallbacks.insert(event.clone()) {
                    self.fallbacks.push(event);
                }
            }
            let next_state = self.strategy.observe(&state, pos, v, true);
            1 + self.value(&next, next_state)?
        } else {
            // opponent optimizes its own objective over all replies
            let mut best: Option<u8> = None;
            for v in pos.legal_moves().iter() {
                let next = pos.apply(v).expect("legal");
                let next_state = self.strategy.observe(&state, pos, v, false);
                let val = 1 + self.value(&next, next_state)?;
                best = Some(match (best, self.fixed_side) {
                    (None, _) => val,
                    // fixed side maximizes => opponent minimizes
                    (Some(b), Side::Maximizing) => b.min(val),
                    (Some(b), Side::Minimizing) => b.max(val),
                });
            }
            best.expect("non-terminal position has moves")
        };
        self.memo.insert(key, result);
        Ok(result)
    }
}
