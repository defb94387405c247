//! Exhaustive search for seed pairs `(a, b)` of lengths `N` and `N+1` whose
//! summed autocorrelations have magnitude exactly 1 on every shift `1..=N`.
//!
//! Each sum has an odd number of terms, so 1 is the smallest magnitude it can
//! take and the predicate is the floor itself. The search fixes `a_0 = b_0 =
//! +` (negating either member preserves every autocorrelation) and assigns
//! both members from the outside in. Level `j` sets `a_j, a_{N-1-j}, b_j,
//! b_{N-j}`, which completes the long shifts first. For every shift we track
//! the sum of the products already determined and the number still open; a
//! node is dead as soon as `|known| > open + 1`.
//!
//! Work is split at a shallow frontier and the subtrees run on the rayon
//! pool. A search that runs out of budget returns the unfinished frontier as
//! a [`Checkpoint`] that [`resume`] picks up.
//!
//! Checkpoint file layout, all integers little-endian:
//!
//! ```text
//! magic      4 bytes  "ZCPS"
//! version    u32      1
//! n          u32
//! depth      u32      frontier level count
//! canonical  u8       0 or 1
//! nodes      u64      nodes visited so far
//! count      u64      results counted so far
//! frontier   u64 len, then len x (a_mask u64, b_mask u64)
//! found      u64 len, then len x (a_mask u64, b_mask u64)
//! ```
//!
//! Masks hold one bit per position, set for `-`; only the positions assigned
//! by the first `depth` levels are meaningful in frontier entries.

use std::path::Path;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Result, ZcpError};
use crate::seq::BinarySequence;

/// Longest `a` the mask encoding can carry (`b` then has 63 elements).
pub const MAX_N: usize = 62;

const MAGIC: &[u8; 4] = b"ZCPS";
const VERSION: u32 = 1;
const FLUSH_EVERY: u64 = 1 << 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchMode {
    FirstHit,
    EnumerateAll,
    CountOnly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchTask {
    pub n: usize,
    pub mode: SearchMode,
    pub max_results: Option<usize>,
    /// Report one representative per orbit under negating either member and
    /// reversing both; otherwise every pair is reported.
    pub canonicalize: bool,
    pub node_budget: Option<u64>,
    pub time_budget: Option<Duration>,
}

impl SearchTask {
    pub fn new(n: usize, mode: SearchMode) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(ZcpError::InvalidParameter(format!("search length must be in 1..={MAX_N}, got {n}")));
        }
        Ok(SearchTask { n, mode, max_results: None, canonicalize: true, node_budget: None, time_budget: None })
    }

    fn target(&self) -> Option<u64> {
        match self.mode {
            SearchMode::FirstHit => Some(1),
            _ => self.max_results.map(|m| m as u64),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchResult {
    /// Sorted; empty in count-only mode.
    pub pairs: Vec<(BinarySequence, BinarySequence)>,
    /// Number of qualifying pairs found (before any `max_results` cut).
    pub count: u64,
    pub nodes_visited: u64,
    pub wall_time: Duration,
    /// False when a budget stopped the search early; `checkpoint` then holds
    /// the remaining work.
    pub exhausted: bool,
    pub checkpoint: Option<Checkpoint>,
}

/// True iff `|rho_a(t) + rho_b(t)| = 1` for every `1 <= t <= len(a)`.
pub fn verify_floor(a: &BinarySequence, b: &BinarySequence) -> Result<bool> {
    if b.len() != a.len() + 1 {
        return Err(ZcpError::SeedLengths { a: a.len(), b: b.len() });
    }
    Ok((1..=a.len() as isize).all(|t| (a.aacf(t) + b.aacf(t)).abs() == 1))
}

/// Orbit of a seed pair under the symmetries that preserve the predicate.
pub fn symmetry_orbit(a: &BinarySequence, b: &BinarySequence) -> Vec<(BinarySequence, BinarySequence)> {
    let mut out = Vec::with_capacity(8);
    for (x, y) in [(a.clone(), b.clone()), (a.reverse(), b.reverse())] {
        out.push((x.clone(), y.clone()));
        out.push((x.negate(), y.clone()));
        out.push((x.clone(), y.negate()));
        out.push((x.negate(), y.negate()));
    }
    out
}

/// Lexicographically smallest member of the orbit (`+` before `-`).
pub fn canonical_form(a: &BinarySequence, b: &BinarySequence) -> (BinarySequence, BinarySequence) {
    symmetry_orbit(a, b).into_iter().min().expect("orbit is nonempty")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Checkpoint {
    pub n: usize,
    pub canonicalize: bool,
    pub depth: usize,
    pub nodes: u64,
    pub count: u64,
    pub frontier: Vec<(u64, u64)>,
    pub found: Vec<(u64, u64)>,
}

fn take<const K: usize>(bytes: &mut &[u8]) -> Result<[u8; K]> {
    if bytes.len() < K {
        return Err(ZcpError::Checkpoint("truncated file".into()));
    }
    let (head, rest) = bytes.split_at(K);
    *bytes = rest;
    Ok(head.try_into().expect("length checked"))
}

impl Checkpoint {
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(48 + 16 * (self.frontier.len() + self.found.len()));
        out.extend_from_slice(MAGIC);
        out.extend_from_slice(&VERSION.to_le_bytes());
        out.extend_from_slice(&(self.n as u32).to_le_bytes());
        out.extend_from_slice(&(self.depth as u32).to_le_bytes());
        out.push(u8::from(self.canonicalize));
        out.extend_from_slice(&self.nodes.to_le_bytes());
        out.extend_from_slice(&self.count.to_le_bytes());
        for list in [&self.frontier, &self.found] {
            out.extend_from_slice(&(list.len() as u64).to_le_bytes());
            for &(a, b) in list {
                out.extend_from_slice(&a.to_le_bytes());
                out.extend_from_slice(&b.to_le_bytes());
            }
        }
        out
    }

    pub fn from_bytes(mut bytes: &[u8]) -> Result<Self> {
        let buf = &mut bytes;
        if &take::<4>(buf)? != MAGIC {
            return Err(ZcpError::Checkpoint("bad magic".into()));
        }
        let version = u32::from_le_bytes(take(buf)?);
        if version != VERSION {
            return Err(ZcpError::Checkpoint(format!("unsupported version {version}")));
        }
        let n = u32::from_le_bytes(take(buf)?) as usize;
        let depth = u32::from_le_bytes(take(buf)?) as usize;
        let canonicalize = match take::<1>(buf)?[0] {
            0 => false,
            1 => true,
            x => return Err(ZcpError::Checkpoint(format!("bad flag byte {x}"))),
        };
        let nodes = u64::from_le_bytes(take(buf)?);
        let count = u64::from_le_bytes(take(buf)?);
        let mut lists = [Vec::new(), Vec::new()];
        for list in &mut lists {
            let len = u64::from_le_bytes(take(buf)?);
            if len > (buf.len() / 16) as u64 {
                return Err(ZcpError::Checkpoint("truncated file".into()));
            }
            for _ in 0..len {
                list.push((u64::from_le_bytes(take(buf)?), u64::from_le_bytes(take(buf)?)));
            }
        }
        if !buf.is_empty() {
            return Err(ZcpError::Checkpoint("trailing bytes".into()));
        }
        if n == 0 || n > MAX_N || depth > Layout::new(n).levels() {
            return Err(ZcpError::Checkpoint(format!("inconsistent header (n={n}, depth={depth})")));
        }
        let [frontier, found] = lists;
        Ok(Checkpoint { n, canonicalize, depth, nodes, count, frontier, found })
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_bytes()).map_err(|e| ZcpError::Checkpoint(format!("{}: {e}", path.display())))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let bytes = std::fs::read(path).map_err(|e| ZcpError::Checkpoint(format!("{}: {e}", path.display())))?;
        Self::from_bytes(&bytes)
    }
}

#[derive(Clone, Copy)]
enum Member {
    A,
    B,
}

/// Which positions each level assigns.
struct Layout {
    n: usize,
    steps: Vec<Vec<(Member, usize)>>,
}

impl Layout {
    fn new(n: usize) -> Self {
        let mut steps = Vec::new();
        for j in 0..=n / 2 {
            let mut free = Vec::new();
            for (m, len) in [(Member::A, n), (Member::B, n + 1)] {
                let far = len - 1 - j;
                if j > far {
                    continue;
                }
                if j > 0 {
                    free.push((m, j));
                }
                if far != j {
                    free.push((m, far));
                }
            }
            steps.push(free);
        }
        Layout { n, steps }
    }

    fn levels(&self) -> usize {
        self.steps.len()
    }
}

#[derive(Clone, Copy)]
struct State {
    a: [i8; 64],
    b: [i8; 64],
    known: [i32; 64],
    open: [i32; 64],
}

impl State {
    fn root(n: usize) -> Self {
        let mut s = State { a: [0; 64], b: [0; 64], known: [0; 64], open: [0; 64] };
        s.a[0] = 1;
        s.b[0] = 1;
        for t in 1..=n {
            s.open[t] = (2 * (n - t) + 1) as i32;
        }
        s
    }

    fn assign(&mut self, m: Member, i: usize, v: i8, n: usize) {
        let (vals, len) = match m {
            Member::A => (&mut self.a, n),
            Member::B => (&mut self.b, n + 1),
        };
        for (k, &w) in vals[..len].iter().enumerate() {
            if w != 0 {
                let t = i.abs_diff(k);
                self.known[t] += i32::from(v * w);
                self.open[t] -= 1;
            }
        }
        vals[i] = v;
    }

    fn viable(&self, n: usize) -> bool {
        (1..=n).all(|t| self.known[t].abs() <= self.open[t] + 1)
    }

    /// Applies level `level` with the free positions taking the bits of
    /// `choice` (bit set = `-`). `None` if the result is dead.
    fn child(&self, layout: &Layout, level: usize, choice: u32) -> Option<State> {
        let mut s = *self;
        for (bit, &(m, i)) in layout.steps[level].iter().enumerate() {
            let v = if (choice >> bit) & 1 == 1 { -1 } else { 1 };
            s.assign(m, i, v, layout.n);
        }
        s.viable(layout.n).then_some(s)
    }

    fn masks(&self, n: usize) -> (u64, u64) {
        let pack = |vals: &[i8]| vals.iter().enumerate().filter(|(_, &v)| v < 0).fold(0u64, |m, (i, _)| m | 1 << i);
        (pack(&self.a[..n]), pack(&self.b[..n + 1]))
    }

    /// Rebuilds the state reached after `depth` levels from its masks.
    fn replay(layout: &Layout, depth: usize, masks: (u64, u64)) -> Option<State> {
        let mut s = State::root(layout.n);
        for level in 0..depth {
            let choice = layout.steps[level].iter().enumerate().fold(0u32, |c, (bit, &(m, i))| {
                let mask = match m {
                    Member::A => masks.0,
                    Member::B => masks.1,
                };
                c | (((mask >> i) & 1) as u32) << bit
            });
            s = s.child(layout, level, choice)?;
        }
        // The fixed leading elements must be `+` for a valid entry.
        (s.masks(layout.n) == masks).then_some(s)
    }
}

struct Ctx<'a> {
    layout: &'a Layout,
    canonicalize: bool,
    store: bool,
    weight: u64,
    target: Option<u64>,
    node_budget: Option<u64>,
    deadline: Option<Instant>,
    nodes: AtomicU64,
    emitted: AtomicU64,
    over_budget: AtomicBool,
    enough: AtomicBool,
}

#[derive(Default)]
struct Outcome {
    found: Vec<(u64, u64)>,
    count: u64,
    pending_nodes: u64,
    /// Cut short by a budget; the subtree must be redone.
    aborted: bool,
    /// Cut short because enough results exist; what was found stands.
    stopped: bool,
}

impl Ctx<'_> {
    fn flush(&self, out: &mut Outcome) {
        let total = self.nodes.fetch_add(out.pending_nodes, Ordering::Relaxed) + out.pending_nodes;
        out.pending_nodes = 0;
        let over_nodes = self.node_budget.is_some_and(|b| total > b);
        let over_time = self.deadline.is_some_and(|d| Instant::now() >= d);
        if over_nodes || over_time {
            self.over_budget.store(true, Ordering::Relaxed);
        }
    }

    fn leaf(&self, s: &State, out: &mut Outcome) {
        let n = self.layout.n;
        for t in 1..=n {
            // Every sum has an odd number of terms.
            assert!(s.known[t] % 2 != 0, "even correlation sum at shift {t} contradicts parity");
        }
        let (ma, mb) = s.masks(n);
        let a = BinarySequence::from_mask(ma, n).expect("n <= MAX_N");
        let b = BinarySequence::from_mask(mb, n + 1).expect("n <= MAX_N");
        assert!(verify_floor(&a, &b).expect("seed lengths"), "search emitted a pair failing the floor: {a} {b}");
        if self.canonicalize && canonical_form(&a, &b) != (a, b) {
            return;
        }
        out.count += 1;
        if self.store {
            out.found.push((ma, mb));
        }
        let emitted = self.emitted.fetch_add(self.weight, Ordering::Relaxed) + self.weight;
        if self.target.is_some_and(|t| emitted >= t) {
            self.enough.store(true, Ordering::Relaxed);
        }
    }

    fn dfs(&self, s: &State, level: usize, out: &mut Outcome) {
        out.pending_nodes += 1;
        if out.pending_nodes >= FLUSH_EVERY {
            self.flush(out);
        }
        if self.enough.load(Ordering::Relaxed) {
            out.stopped = true;
            return;
        }
        if self.over_budget.load(Ordering::Relaxed) {
            out.aborted = true;
            return;
        }
        if level == self.layout.levels() {
            self.leaf(s, out);
            return;
        }
        for choice in 0..1u32 << self.layout.steps[level].len() {
            if let Some(c) = s.child(self.layout, level, choice) {
                self.dfs(&c, level + 1, out);
                if out.aborted || out.stopped {
                    return;
                }
            }
        }
    }
}

/// Expands live nodes level by level until there is enough parallel work.
fn build_frontier(layout: &Layout, want: usize) -> (usize, Vec<(u64, u64)>, u64) {
    let mut nodes = 1u64;
    let mut level = 0;
    let mut frontier = vec![State::root(layout.n)];
    while level < layout.levels() && frontier.len() < want {
        let mut next = Vec::new();
        for s in &frontier {
            for choice in 0..1u32 << layout.steps[level].len() {
                if let Some(c) = s.child(layout, level, choice) {
                    next.push(c);
                }
            }
        }
        nodes += next.len() as u64;
        frontier = next;
        level += 1;
    }
    (level, frontier.iter().map(|s| s.masks(layout.n)).collect(), nodes)
}

pub fn search_seeds(task: &SearchTask) -> Result<SearchResult> {
    SearchTask::new(task.n, task.mode)?;
    let layout = Layout::new(task.n);
    let (depth, frontier, nodes) = build_frontier(&layout, 4 * rayon::current_num_threads().max(1));
    let start =
        Checkpoint { n: task.n, canonicalize: task.canonicalize, depth, nodes, count: 0, frontier, found: Vec::new() };
    run(task, &layout, start)
}

/// Continues a search from a checkpoint taken with the same `n` and
/// canonicalization setting.
pub fn resume(task: &SearchTask, checkpoint: Checkpoint) -> Result<SearchResult> {
    SearchTask::new(task.n, task.mode)?;
    if checkpoint.n != task.n || checkpoint.canonicalize != task.canonicalize {
        return Err(ZcpError::Checkpoint(format!(
            "checkpoint is for n={} canonical={}, task has n={} canonical={}",
            checkpoint.n, checkpoint.canonicalize, task.n, task.canonicalize
        )));
    }
    let layout = Layout::new(task.n);
    run(task, &layout, checkpoint)
}

fn run(task: &SearchTask, layout: &Layout, start: Checkpoint) -> Result<SearchResult> {
    let clock = Instant::now();
    let n = task.n;
    let weight = if task.canonicalize { 1 } else { 4 };
    let states = start
        .frontier
        .iter()
        .map(|&m| {
            State::replay(layout, start.depth, m)
                .ok_or_else(|| ZcpError::Checkpoint("frontier entry is not a live node".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let ctx = Ctx {
        layout,
        canonicalize: task.canonicalize,
        store: task.mode != SearchMode::CountOnly,
        weight,
        target: task.target(),
        node_budget: task.node_budget,
        deadline: task.time_budget.map(|d| clock + d),
        nodes: AtomicU64::new(start.nodes),
        emitted: AtomicU64::new(start.count * weight),
        over_budget: AtomicBool::new(false),
        enough: AtomicBool::new(task.target().is_some_and(|t| start.count * weight >= t)),
    };
    let outcomes: Vec<Outcome> = states
        .par_iter()
        .map(|s| {
            let mut out = Outcome::default();
            ctx.dfs(s, start.depth, &mut out);
            ctx.flush(&mut out);
            out
        })
        .collect();

    let mut found = start.found;
    let mut count = start.count;
    let mut remaining = Vec::new();
    for (entry, out) in start.frontier.iter().zip(outcomes) {
        if out.aborted {
            // A partial subtree is redone from scratch on resume.
            remaining.push(*entry);
        } else {
            count += out.count;
            found.extend(out.found);
        }
    }
    let stopped_for_budget = ctx.over_budget.load(Ordering::Relaxed) && !ctx.enough.load(Ordering::Relaxed);
    let nodes_visited = ctx.nodes.load(Ordering::Relaxed);
    let checkpoint = (stopped_for_budget && !remaining.is_empty()).then(|| Checkpoint {
        n,
        canonicalize: task.canonicalize,
        depth: start.depth,
        nodes: nodes_visited,
        count,
        frontier: remaining.clone(),
        found: found.clone(),
    });

    let mut pairs = Vec::with_capacity(found.len() * weight as usize);
    for &(ma, mb) in &found {
        let a = BinarySequence::from_mask(ma, n)?;
        let b = BinarySequence::from_mask(mb, n + 1)?;
        debug_assert!(verify_floor(&a, &b)?);
        if task.canonicalize {
            pairs.push((a, b));
        } else {
            pairs.push((a.negate(), b.negate()));
            pairs.push((a.negate(), b.clone()));
            pairs.push((a.clone(), b.negate()));
            pairs.push((a, b));
        }
    }
    pairs.sort();
    if let Some(t) = task.target() {
        pairs.truncate(t as usize);
    }
    Ok(SearchResult {
        pairs,
        count: count * weight,
        nodes_visited,
        wall_time: clock.elapsed(),
        exhausted: checkpoint.is_none(),
        checkpoint,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> BinarySequence {
        s.parse().unwrap()
    }

    #[test]
    fn floor_examples() {
        assert!(verify_floor(&seq("+"), &seq("++")).unwrap());
        assert!(!verify_floor(&seq("++"), &seq("+++")).unwrap());
        assert!(verify_floor(&seq("++++-"), &seq("++--+-")).unwrap());
        assert!(verify_floor(&seq("++"), &seq("++")).is_err());
    }

    #[test]
    fn layout_covers_every_position_once() {
        for n in 1..=20 {
            let l = Layout::new(n);
            let mut a = vec![0; n];
            let mut b = vec![0; n + 1];
            a[0] += 1;
            b[0] += 1;
            for step in &l.steps {
                for &(m, i) in step {
                    match m {
                        Member::A => a[i] += 1,
                        Member::B => b[i] += 1,
                    }
                }
            }
            assert!(a.iter().chain(&b).all(|&c| c == 1), "n={n}");
        }
    }

    #[test]
    fn length_one() {
        let r = search_seeds(&SearchTask::new(1, SearchMode::EnumerateAll).unwrap()).unwrap();
        assert!(r.exhausted);
        assert_eq!(r.pairs, vec![(seq("+"), seq("++")), (seq("+"), seq("+-"))]);
    }

    #[test]
    fn task_validation() {
        assert!(SearchTask::new(0, SearchMode::FirstHit).is_err());
        assert!(SearchTask::new(MAX_N + 1, SearchMode::FirstHit).is_err());
    }

    #[test]
    fn canonical_form_is_orbit_minimum() {
        let (a, b) = (seq("++++-"), seq("++--+-"));
        let (ca, cb) = canonical_form(&a, &b);
        assert!(ca.sign(0) == crate::Sign::Plus && cb.sign(0) == crate::Sign::Plus);
        assert_eq!(canonical_form(&a.reverse().negate(), &b.reverse()), (ca, cb));
    }

    #[test]
    fn checkpoint_rejects_garbage() {
        assert!(Checkpoint::from_bytes(b"nope").is_err());
        let c = Checkpoint {
            n: 5,
            canonicalize: true,
            depth: 1,
            nodes: 3,
            count: 0,
            frontier: vec![(16, 32)],
            found: vec![],
        };
        let bytes = c.to_bytes();
        assert_eq!(Checkpoint::from_bytes(&bytes).unwrap(), c);
        assert!(Checkpoint::from_bytes(&bytes[..bytes.len() - 1]).is_err());
        let mut extra = bytes.clone();
        extra.push(0);
        assert!(Checkpoint::from_bytes(&extra).is_err());
    }
}
