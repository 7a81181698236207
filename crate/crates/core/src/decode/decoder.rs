//! Local decoders.
//!
//! When syndromes are loops of links (edges for Z errors, dual edges for X
//! errors on the 4-dimensional codes), the decoder looks for a syndrome
//! subpath whose endpoints are closer than its length, swaps it for a
//! shortest path and flips qubits whose boundary is the difference. When
//! syndromes are isolated nodes (2-dimensional codes), it pairs each
//! syndrome node with its nearest partner.

use std::collections::hash_map::Entry;
use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

use super::complex::{CellComplex, Csr};
use super::fill::{FillLimits, FillSpace};
use super::syndrome::{xor_sorted, ErrorChain, Pauli, Syndrome};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DecoderConfig {
    /// Longest syndrome subpath examined when paths may go anywhere.
    pub max_len: usize,
    /// Longest subpath examined when paths are confined to one region.
    pub max_len_region: usize,
    pub move_fill: FillLimits,
    pub residual_fill: FillLimits,
}

impl Default for DecoderConfig {
    fn default() -> Self {
        DecoderConfig {
            max_len: 8,
            max_len_region: 16,
            move_fill: FillLimits { levels: 1, cap: 2000 },
            residual_fill: FillLimits { levels: 2, cap: 4000 },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// No syndrome left and the residual bounds locally.
    Success,
    /// No syndrome left but the residual did not fill locally.
    LogicalSuspect,
    /// Syndrome remains.
    Stalled,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Success => "success",
            Verdict::LogicalSuspect => "logical_suspect",
            Verdict::Stalled => "stalled",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecoderReport {
    pub estimate: ErrorChain,
    pub iterations: usize,
    /// Qubit flips applied, counted with multiplicity.
    pub flips: usize,
    pub residual_syndrome_weight: usize,
    /// `Success` here only means the syndrome was cleared; see
    /// [`DecodingContext::residual_check`] for the full verdict.
    pub verdict: Verdict,
    /// Path prefixes examined in the busiest iteration.
    pub max_paths_per_iteration: usize,
    /// The bound that count is checked against.
    pub path_bound: usize,
}

/// Nodes joined by links; each link has exactly two ends.
#[derive(Clone, Debug)]
struct LinkGraph {
    ends: Csr,
    incident: Csr,
}

impl LinkGraph {
    fn nodes(&self) -> usize {
        self.incident.rows()
    }

    #[inline]
    fn other(&self, link: u32, node: u32) -> u32 {
        let e = self.ends.row(link);
        if e[0] == node {
            e[1]
        } else {
            e[0]
        }
    }
}

/// Breadth-first search state reused across queries.
struct Bfs {
    stamp: Vec<u32>,
    dist: Vec<u16>,
    parent: Vec<u32>,
    generation: u32,
    queue: Vec<u32>,
}

impl Bfs {
    fn new(n: usize) -> Self {
        Bfs { stamp: vec![0; n], dist: vec![0; n], parent: vec![0; n], generation: 0, queue: Vec::new() }
    }

    fn reset(&mut self) {
        self.generation += 1;
        self.queue.clear();
    }

    #[inline]
    fn get(&self, v: u32) -> Option<u16> {
        (self.stamp[v as usize] == self.generation).then(|| self.dist[v as usize])
    }

    fn visit(&mut self, v: u32, d: u16, link: u32) {
        self.stamp[v as usize] = self.generation;
        self.dist[v as usize] = d;
        self.parent[v as usize] = link;
        self.queue.push(v);
    }

    /// Full search from `source` over links accepted by `allowed`.
    fn run(&mut self, g: &LinkGraph, source: u32, allowed: impl Fn(u32) -> bool) {
        self.reset();
        self.visit(source, 0, u32::MAX);
        let mut head = 0;
        while head < self.queue.len() {
            let v = self.queue[head];
            head += 1;
            let d = self.dist[v as usize];
            for &l in g.incident.row(v) {
                if !allowed(l) {
                    continue;
                }
                let w = g.other(l, v);
                if self.get(w).is_none() {
                    self.visit(w, d + 1, l);
                }
            }
        }
    }
}

/// Where shorter connections may be sought.
#[derive(Clone, Debug)]
enum Reach {
    /// Anywhere; distances precomputed for every pair.
    Global { table: Vec<u8> },
    /// Inside one region at a time; `link_regions` lists the regions
    /// containing each link.
    Regions { link_regions: Csr },
}

const FAR: u8 = u8::MAX;

#[derive(Clone, Debug)]
struct PathDecoder {
    graph: LinkGraph,
    /// Qubit cells to the links on their boundary, and back.
    qubit_links: Csr,
    link_qubits: Csr,
    reach: Reach,
    max_len: usize,
}

struct Move {
    old: Vec<u32>,
    new: Vec<u32>,
    flips: Vec<u32>,
}

struct PathWorkspace {
    in_syndrome: Vec<bool>,
    from: Bfs,
    to: Bfs,
    examined: usize,
}

impl PathDecoder {
    fn all_pairs(graph: &LinkGraph) -> Vec<u8> {
        let n = graph.nodes();
        let mut table = vec![FAR; n * n];
        let mut bfs = Bfs::new(n);
        for s in 0..n as u32 {
            bfs.run(graph, s, |_| true);
            for &v in &bfs.queue {
                table[s as usize * n + v as usize] = bfs.dist[v as usize].min(FAR as u16 - 1) as u8;
            }
        }
        table
    }

    fn in_region(&self, link: u32, region: Option<u32>) -> bool {
        match (&self.reach, region) {
            (Reach::Regions { link_regions }, Some(r)) => link_regions.row(link).contains(&r),
            _ => true,
        }
    }

    /// Distance from the search tail (prepared in `ws.from`) to `v`.
    fn dist_from_tail(&self, ws: &PathWorkspace, tail: u32, v: u32) -> usize {
        match &self.reach {
            Reach::Global { table } => table[tail as usize * self.graph.nodes() + v as usize] as usize,
            Reach::Regions { .. } => ws.from.get(v).map_or(usize::MAX, usize::from),
        }
    }

    fn find_move(&self, ws: &mut PathWorkspace, start: u32, limits: FillLimits) -> Option<Move> {
        let ends = self.graph.ends.row(start);
        let regions: Vec<Option<u32>> = match &self.reach {
            Reach::Global { .. } => vec![None],
            Reach::Regions { link_regions } => link_regions.row(start).iter().map(|&r| Some(r)).collect(),
        };
        for (tail, head) in [(ends[0], ends[1]), (ends[1], ends[0])] {
            for &region in &regions {
                if let Reach::Regions { .. } = self.reach {
                    ws.from.run(&self.graph, tail, |l| self.in_region(l, region));
                }
                let mut links = vec![start];
                let mut nodes = vec![tail, head];
                if let Some(m) = self.extend(ws, region, &mut links, &mut nodes, limits) {
                    return Some(m);
                }
            }
        }
        None
    }

    fn extend(
        &self,
        ws: &mut PathWorkspace,
        region: Option<u32>,
        links: &mut Vec<u32>,
        nodes: &mut Vec<u32>,
        limits: FillLimits,
    ) -> Option<Move> {
        ws.examined += 1;
        let (tail, head) = (nodes[0], *nodes.last().expect("nonempty path"));
        let len = links.len();
        if len >= 2 && self.dist_from_tail(ws, tail, head) < len {
            if let Some(m) = self.build_move(ws, region, links, tail, head, limits) {
                return Some(m);
            }
        }
        if len == self.max_len {
            return None;
        }
        for &l in self.graph.incident.row(head) {
            if !ws.in_syndrome[l as usize] || links.contains(&l) || !self.in_region(l, region) {
                continue;
            }
            links.push(l);
            nodes.push(self.graph.other(l, head));
            let found = self.extend(ws, region, links, nodes, limits);
            links.pop();
            nodes.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }

    /// Shortest replacement from `tail` to `head`, smallest link ids first,
    /// and the qubits bounded by the difference.
    fn build_move(
        &self,
        ws: &mut PathWorkspace,
        region: Option<u32>,
        old: &[u32],
        tail: u32,
        head: u32,
        limits: FillLimits,
    ) -> Option<Move> {
        let n = self.graph.nodes();
        let to_head = |ws: &PathWorkspace, v: u32| -> usize {
            match &self.reach {
                Reach::Global { table } => table[v as usize * n + head as usize] as usize,
                Reach::Regions { .. } => ws.to.get(v).map_or(usize::MAX, usize::from),
            }
        };
        if let Reach::Regions { .. } = self.reach {
            ws.to.run(&self.graph, head, |l| self.in_region(l, region));
        }
        let mut new = Vec::new();
        let mut cur = tail;
        while cur != head {
            let d = to_head(ws, cur);
            let step = self.graph.incident.row(cur).iter().copied().find(|&l| {
                self.in_region(l, region) && to_head(ws, self.graph.other(l, cur)) + 1 == d
            })?;
            new.push(step);
            cur = self.graph.other(step, cur);
        }
        let mut cycle = old.to_vec();
        cycle.extend_from_slice(&new);
        let cycle = xor_sorted(cycle);
        let space = FillSpace { boundary: &self.qubit_links, coboundary: &self.link_qubits };
        let flips = space.fill(&cycle, limits)?;
        Some(Move { old: old.to_vec(), new, flips })
    }

    fn decode(&self, syndrome: &[u32], config: &DecoderConfig) -> (Vec<u32>, usize, usize, BTreeSet<u32>, usize, usize) {
        let links = self.graph.ends.rows();
        let mut ws = PathWorkspace {
            in_syndrome: vec![false; links],
            from: Bfs::new(self.graph.nodes()),
            to: Bfs::new(self.graph.nodes()),
            examined: 0,
        };
        let mut syn: BTreeSet<u32> = syndrome.iter().copied().collect();
        for &l in &syn {
            ws.in_syndrome[l as usize] = true;
        }
        let mut clean: HashSet<u32> = HashSet::new();
        let mut flips: Vec<u32> = Vec::new();
        let (mut iterations, mut flip_count, mut max_examined, mut bound) = (0, 0, 0, 0);
        loop {
            ws.examined = 0;
            let branching = self.max_branching(&ws, &syn);
            let regions = match &self.reach {
                Reach::Global { .. } => 1,
                Reach::Regions { link_regions } => {
                    syn.iter().map(|&l| link_regions.row(l).len()).max().unwrap_or(1)
                }
            };
            let iteration_bound = (syn.len() * 2 * regions * self.max_len)
                .saturating_mul(branching.saturating_pow(self.max_len as u32 - 1));
            bound = bound.max(iteration_bound);
            let work: Vec<u32> = syn.iter().copied().filter(|l| !clean.contains(l)).collect();
            let mut found = None;
            for e in work {
                if let Some(m) = self.find_move(&mut ws, e, config.move_fill) {
                    found = Some(m);
                    break;
                }
                clean.insert(e);
            }
            max_examined = max_examined.max(ws.examined);
            assert!(ws.examined <= iteration_bound, "path enumeration exceeded its bound");
            let Some(m) = found else { break };
            let before = syn.len();
            for &l in m.old.iter().chain(&m.new) {
                if !syn.remove(&l) {
                    syn.insert(l);
                }
                ws.in_syndrome[l as usize] = syn.contains(&l);
            }
            assert!(syn.len() < before, "a move must shrink the syndrome");
            flip_count += m.flips.len();
            flips.extend_from_slice(&m.flips);
            iterations += 1;
            self.mark_dirty(&ws, &mut clean, &m);
        }
        (xor_sorted(flips), iterations, flip_count, syn, max_examined, bound)
    }

    /// Largest number of ways to continue a syndrome path at a node.
    fn max_branching(&self, ws: &PathWorkspace, syn: &BTreeSet<u32>) -> usize {
        let mut degree: HashMap<u32, usize> = HashMap::new();
        for &l in syn {
            for &v in self.graph.ends.row(l) {
                *degree.entry(v).or_insert(0) += 1;
            }
        }
        debug_assert!(syn.iter().all(|&l| ws.in_syndrome[l as usize]));
        degree.values().map(|&d| d.saturating_sub(1)).max().unwrap_or(1).max(1)
    }

    /// Forgets that links near a move were irreducible: anything reachable
    /// within `max_len` syndrome steps of the changed links.
    fn mark_dirty(&self, ws: &PathWorkspace, clean: &mut HashSet<u32>, m: &Move) {
        let mut depth: HashMap<u32, usize> = HashMap::new();
        let mut frontier: Vec<u32> = Vec::new();
        for &l in m.old.iter().chain(&m.new) {
            for &v in self.graph.ends.row(l) {
                if depth.insert(v, 0).is_none() {
                    frontier.push(v);
                }
            }
        }
        for d in 0..self.max_len {
            let mut next = Vec::new();
            for v in frontier {
                for &l in self.graph.incident.row(v) {
                    if !ws.in_syndrome[l as usize] {
                        continue;
                    }
                    clean.remove(&l);
                    let w = self.graph.other(l, v);
                    if let Entry::Vacant(e) = depth.entry(w) {
                        e.insert(d + 1);
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
    }
}

/// Pairs each syndrome node with its nearest syndrome partner.
#[derive(Clone, Debug)]
struct MatchingDecoder {
    graph: LinkGraph,
}

impl MatchingDecoder {
    fn decode(&self, syndrome: &[u32]) -> (Vec<u32>, usize, usize, BTreeSet<u32>) {
        let mut syn: BTreeSet<u32> = syndrome.iter().copied().collect();
        let mut bfs = Bfs::new(self.graph.nodes());
        let mut flips = Vec::new();
        let mut iterations = 0;
        while let Some(&s) = syn.first() {
            bfs.reset();
            bfs.visit(s, 0, u32::MAX);
            let mut head = 0;
            let mut partner = None;
            'search: while head < bfs.queue.len() {
                let v = bfs.queue[head];
                head += 1;
                let d = bfs.dist[v as usize];
                for &l in self.graph.incident.row(v) {
                    let w = self.graph.other(l, v);
                    if bfs.get(w).is_none() {
                        bfs.visit(w, d + 1, l);
                        if syn.contains(&w) {
                            partner = Some(w);
                            break 'search;
                        }
                    }
                }
            }
            let Some(t) = partner else { break };
            let mut cur = t;
            while cur != s {
                let l = bfs.parent[cur as usize];
                flips.push(l);
                cur = self.graph.other(l, cur);
            }
            syn.remove(&s);
            syn.remove(&t);
            iterations += 1;
        }
        let count = flips.len();
        (xor_sorted(flips), iterations, count, syn)
    }
}

#[derive(Clone, Debug)]
enum Strategy {
    Paths(PathDecoder),
    Matching(MatchingDecoder),
}

/// Everything needed to decode one code: its cell complex, which cells
/// carry qubits, and a decoder for each error type.
#[derive(Clone, Debug)]
pub struct DecodingContext {
    complex: CellComplex,
    qubit_dim: usize,
    config: DecoderConfig,
    z: Strategy,
    x: Strategy,
}

/// Largest graph for which all-pairs distances are tabulated.
const MAX_TABLE_NODES: usize = 8192;

impl DecodingContext {
    pub fn new(complex: CellComplex, qubit_dim: usize, config: DecoderConfig) -> Result<Self> {
        let d = complex.dimension();
        if qubit_dim == 0 || qubit_dim >= d {
            return Err(Error::InvalidParameter(format!(
                "qubits on {qubit_dim}-cells of a {d}-dimensional complex"
            )));
        }
        let q = qubit_dim;
        let z = if q == 1 {
            Strategy::Matching(MatchingDecoder {
                graph: LinkGraph { ends: complex.faces(1).clone(), incident: complex.cofaces(0).clone() },
            })
        } else {
            let graph = LinkGraph { ends: complex.faces(q - 1).clone(), incident: complex.cofaces(q - 2).clone() };
            if graph.nodes() > MAX_TABLE_NODES {
                return Err(Error::TooLarge { n: graph.nodes(), limit: MAX_TABLE_NODES });
            }
            let table = PathDecoder::all_pairs(&graph);
            Strategy::Paths(PathDecoder {
                graph,
                qubit_links: complex.faces(q).clone(),
                link_qubits: complex.cofaces(q - 1).clone(),
                reach: Reach::Global { table },
                max_len: config.max_len,
            })
        };
        let x = if q + 1 == d {
            Strategy::Matching(MatchingDecoder {
                graph: LinkGraph { ends: complex.cofaces(d - 1).clone(), incident: complex.faces(d).clone() },
            })
        } else if q + 2 == d {
            // Dual picture: top cells are nodes, their facets are links, and
            // paths stay among the links around one vertex.
            let graph = LinkGraph { ends: complex.cofaces(d - 1).clone(), incident: complex.faces(d).clone() };
            Strategy::Paths(PathDecoder {
                graph,
                qubit_links: complex.cofaces(q).clone(),
                link_qubits: complex.faces(q + 1).clone(),
                reach: Reach::Regions { link_regions: complex.faces_down_to(d - 1, 0) },
                max_len: config.max_len_region,
            })
        } else {
            return Err(Error::InvalidParameter(format!(
                "no X decoder for qubits on {q}-cells of a {d}-dimensional complex"
            )));
        };
        Ok(DecodingContext { complex, qubit_dim, config, z, x })
    }

    pub fn qubit_count(&self) -> usize {
        self.complex.count(self.qubit_dim)
    }

    pub fn config(&self) -> &DecoderConfig {
        &self.config
    }

    /// Boundary for Z errors, coboundary for X errors.
    pub fn syndrome(&self, e: &ErrorChain) -> Syndrome {
        let cells = match e.pauli {
            Pauli::Z => self.complex.faces(self.qubit_dim),
            Pauli::X => self.complex.cofaces(self.qubit_dim),
        };
        let checks = xor_sorted(e.qubits().iter().flat_map(|&q| cells.row(q).iter().copied()).collect());
        Syndrome { pauli: e.pauli, checks }
    }

    /// Most checks a single qubit error can trigger.
    pub fn max_checks_per_qubit(&self, pauli: Pauli) -> usize {
        let cells = match pauli {
            Pauli::Z => self.complex.faces(self.qubit_dim),
            Pauli::X => self.complex.cofaces(self.qubit_dim),
        };
        (0..cells.rows() as u32).map(|q| cells.row(q).len()).max().unwrap_or(0)
    }

    pub fn decode(&self, s: &Syndrome) -> DecoderReport {
        let strategy = match s.pauli {
            Pauli::Z => &self.z,
            Pauli::X => &self.x,
        };
        let (qubits, iterations, flips, left, examined, bound) = match strategy {
            Strategy::Paths(p) => p.decode(&s.checks, &self.config),
            Strategy::Matching(m) => {
                let (q, it, fl, left) = m.decode(&s.checks);
                (q, it, fl, left, 0, 0)
            }
        };
        let verdict = if left.is_empty() { Verdict::Success } else { Verdict::Stalled };
        DecoderReport {
            estimate: ErrorChain::from_sorted(s.pauli, qubits),
            iterations,
            flips,
            residual_syndrome_weight: left.len(),
            verdict,
            max_paths_per_iteration: examined,
            path_bound: bound,
        }
    }

    /// Compares an estimate with the true error: the difference must have
    /// no syndrome and must be a sum of nearby stabilizers.
    pub fn residual_check(&self, error: &ErrorChain, estimate: &ErrorChain) -> Verdict {
        let residual = error.sum(estimate);
        if !self.syndrome(&residual).is_empty() {
            return Verdict::Stalled;
        }
        let q = self.qubit_dim;
        let space = match residual.pauli {
            Pauli::Z => FillSpace { boundary: self.complex.faces(q + 1), coboundary: self.complex.cofaces(q) },
            Pauli::X => FillSpace { boundary: self.complex.cofaces(q - 1), coboundary: self.complex.faces(q) },
        };
        match space.fill(residual.qubits(), self.config.residual_fill) {
            Some(_) => Verdict::Success,
            None => Verdict::LogicalSuspect,
        }
    }

    /// Decodes the syndrome of `error` and checks the result against it.
    pub fn decode_error(&self, error: &ErrorChain) -> (Syndrome, DecoderReport) {
        let s = self.syndrome(error);
        let mut report = self.decode(&s);
        if report.verdict == Verdict::Success {
            report.verdict = self.residual_check(error, &report.estimate);
        }
        (s, report)
    }
}
